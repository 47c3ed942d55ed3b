//! Sign analysis of rational polynomials on rays `[a, +inf)`.
//!
//! `p >= 0` on `[a, +inf)` iff `p` is eventually positive and no root of odd
//! multiplicity lies in `(a, +inf)`. The odd-multiplicity part is extracted
//! with Yun's square-free decomposition, factors `(x - a)` are divided out so
//! that the tested polynomial does not vanish at `a`, and the distinct roots
//! in `(a, +inf)` are counted as `V(a) - V(+inf)` on its Sturm chain.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{rational_to_string, BigRational, UniPoly};

type RPoly = UniPoly<BigRational>;

/// Sturm chain `p, p', -rem(p, p'), ...` ending at the last nonzero remainder.
pub fn sturm_chain(p: &RPoly) -> Vec<RPoly> {
    let mut chain = vec![p.clone()];
    if p.is_zero() {
        return chain;
    }
    let mut prev = p.clone();
    let mut cur = p.derivative();
    while !cur.is_zero() {
        let (_, rem) = prev.div_rem(&cur).expect("nonzero divisor");
        chain.push(cur.clone());
        prev = cur;
        cur = -rem;
    }
    chain
}

/// Sign variations of the chain at `x` (`None` means `+inf`), zeros skipped.
fn variations(chain: &[RPoly], x: Option<&BigRational>) -> usize {
    let signs = chain.iter().filter_map(|q| {
        let s = match x {
            Some(x) => {
                let v = q.eval(x);
                if v.is_zero() {
                    0
                } else if v.is_positive() {
                    1
                } else {
                    -1
                }
            }
            None => q.sign_at_infinity(),
        };
        (s != 0).then_some(s)
    });
    let mut count = 0;
    let mut last = None;
    for s in signs {
        if last.is_some_and(|l| l != s) {
            count += 1;
        }
        last = Some(s);
    }
    count
}

/// Yun's algorithm: monic square-free factors `a_i` with `p = c * prod a_i^i`.
pub(crate) fn squarefree_decomposition(p: &RPoly) -> Vec<(RPoly, usize)> {
    let mut out = Vec::new();
    if p.is_constant() {
        return out;
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.exact_div(&a0).expect("gcd divides").monic();
    let c = dp.exact_div(&a0).expect("gcd divides");
    // c is rescaled by the same constant that made b monic
    let mut d = &c.scale(&p.leading().expect("nonzero").recip()) - &b.derivative();
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        if !a.is_constant() {
            out.push((a.clone(), i));
        }
        let nb = b.exact_div(&a).expect("gcd divides");
        let nc = d.exact_div(&a).expect("gcd divides");
        d = &nc - &nb.derivative();
        b = nb;
        i += 1;
    }
    out
}

/// Machine-checkable record of a sign decision for `p` on `[lower, +inf)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RayCertificate {
    /// Coefficients, lowest degree first, as exact rational strings.
    pub polynomial: Vec<String>,
    pub lower: String,
    /// `true` for a strict-positivity claim, `false` for nonnegativity.
    pub strict: bool,
    pub leading_sign: i32,
    pub value_at_lower: String,
    /// Multiplicity of `lower` as a root of the tested factor (divided out).
    pub boundary_multiplicity: usize,
    /// Square-free polynomial whose Sturm chain is recorded.
    pub tested: Vec<String>,
    pub chain: Vec<Vec<String>>,
    pub variations_at_lower: usize,
    pub variations_at_infinity: usize,
    pub roots_in_open_ray: usize,
    pub holds: bool,
}

fn coeff_strings(p: &RPoly) -> Vec<String> {
    p.coeffs().iter().map(rational_to_string).collect()
}

fn decide(p: &RPoly, lower: &BigRational, strict: bool) -> RayCertificate {
    let factors = squarefree_decomposition(p);
    let tested_raw = factors
        .iter()
        .filter(|(_, m)| strict || m % 2 == 1)
        .fold(RPoly::one(), |acc, (f, _)| &acc * f);
    let linear = RPoly::new(vec![-lower.clone(), BigRational::one()]);
    let mut tested = tested_raw;
    let mut boundary_multiplicity = 0;
    while !tested.is_constant() && tested.eval(lower).is_zero() {
        tested = tested.exact_div(&linear).expect("root at lower");
        boundary_multiplicity += 1;
    }
    let chain = sturm_chain(&tested);
    let va = variations(&chain, Some(lower));
    let vi = variations(&chain, None);
    let roots = va - vi;
    let value_at_lower = p.eval(lower);
    let leading_sign = p.sign_at_infinity();
    let holds = if p.is_zero() {
        !strict
    } else if strict {
        leading_sign > 0 && value_at_lower.is_positive() && roots == 0
    } else {
        leading_sign > 0 && roots == 0
    };
    RayCertificate {
        polynomial: coeff_strings(p),
        lower: rational_to_string(lower),
        strict,
        leading_sign,
        value_at_lower: rational_to_string(&value_at_lower),
        boundary_multiplicity,
        tested: coeff_strings(&tested),
        chain: chain.iter().map(coeff_strings).collect(),
        variations_at_lower: va,
        variations_at_infinity: vi,
        roots_in_open_ray: roots,
        holds,
    }
}

/// Decides `p(x) >= 0` for all real `x >= a`.
pub fn nonneg_on_ray(p: &RPoly, a: &BigRational) -> RayCertificate {
    decide(p, a, false)
}

/// Decides `p(x) > 0` for all real `x >= a`.
pub fn positive_on_ray(p: &RPoly, a: &BigRational) -> RayCertificate {
    decide(p, a, true)
}

impl RayCertificate {
    /// Re-derives the certificate from its recorded polynomial and bound and
    /// confirms every recorded field, including the chain itself.
    pub fn check(&self) -> bool {
        let parse = |v: &[String]| -> Option<RPoly> {
            v.iter()
                .map(|s| super::parse_rational(s).ok())
                .collect::<Option<Vec<_>>>()
                .map(RPoly::new)
        };
        let (Some(p), Ok(a)) = (parse(&self.polynomial), super::parse_rational(&self.lower)) else {
            return false;
        };
        let redo = decide(&p, &a, self.strict);
        if &redo != self {
            return false;
        }
        // each chain step must satisfy p_{i-1} = q p_i - p_{i+1}
        let chain: Option<Vec<RPoly>> = self.chain.iter().map(|c| parse(c)).collect();
        let Some(chain) = chain else { return false };
        chain.windows(3).all(|w| {
            let (_, rem) = w[0].div_rem(&w[1]).expect("nonzero chain member");
            rem == -&w[2]
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    #[test]
    fn perfect_square_is_nonnegative() {
        let p = RPoly::from_ints(&[-3, 2]).pow(2);
        let cert = nonneg_on_ray(&p, &int(3));
        assert!(cert.holds);
        assert!(cert.check());
    }

    #[test]
    fn quadratic_positive_past_three() {
        let p = RPoly::from_ints(&[9, -11, 3]);
        let cert = nonneg_on_ray(&p, &int(3));
        assert!(cert.holds);
        assert_eq!(cert.roots_in_open_ray, 0);
        assert_eq!(cert.value_at_lower, "3");
        assert!(positive_on_ray(&p, &int(3)).holds);
        // both roots (11 +- sqrt 13)/6 lie below 3 but above 1
        assert_eq!(nonneg_on_ray(&p, &int(1)).roots_in_open_ray, 2);
        assert!(!nonneg_on_ray(&p, &int(1)).holds);
    }

    #[test]
    fn decreasing_line_fails() {
        let cert = nonneg_on_ray(&RPoly::from_ints(&[1, -1]), &int(3));
        assert!(!cert.holds);
        assert!(cert.check());
    }

    #[test]
    fn even_root_inside_ray_is_allowed() {
        let p = RPoly::from_ints(&[-4, 1]).pow(2) * RPoly::from_ints(&[1, 1]);
        assert!(nonneg_on_ray(&p, &int(3)).holds);
        assert!(!positive_on_ray(&p, &int(3)).holds);
    }

    #[test]
    fn boundary_root_handled() {
        // (x - 3)(x - 5)^2 is >= 0 on [3, inf)
        let p = RPoly::from_ints(&[-3, 1]) * RPoly::from_ints(&[-5, 1]).pow(2);
        let cert = nonneg_on_ray(&p, &int(3));
        assert!(cert.holds);
        assert_eq!(cert.boundary_multiplicity, 1);
        assert!(!positive_on_ray(&p, &int(3)).holds);
        // (x - 3)(x - 4) dips below zero
        let q = RPoly::from_ints(&[-3, 1]) * RPoly::from_ints(&[-4, 1]);
        assert!(!nonneg_on_ray(&q, &int(3)).holds);
    }

    #[test]
    fn yun_recovers_multiplicities() {
        let p = (RPoly::from_ints(&[-1, 1]).pow(3) * RPoly::from_ints(&[2, 1]).pow(2))
            .scale(&rat(5, 2));
        let f = squarefree_decomposition(&p);
        assert_eq!(f, vec![(RPoly::from_ints(&[2, 1]), 2), (RPoly::from_ints(&[-1, 1]), 3)]);
    }

    #[test]
    fn tampered_certificate_rejected() {
        let mut cert = nonneg_on_ray(&RPoly::from_ints(&[9, -11, 3]), &int(3));
        cert.roots_in_open_ray = 1;
        assert!(!cert.check());
    }
}
