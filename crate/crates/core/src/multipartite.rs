//! Closed-form C4 and K4 counts in complete multipartite graphs.
//!
//! For part sizes `x_1, ..., x_r` a 4-vertex subset spans a C4 only if it
//! meets at least two parts, and the count splits by how many parts it
//! meets:
//!
//! * two parts, two vertices each: one C4 (a `K_{2,2}`);
//! * three parts with sizes 2, 1, 1: one C4 (a diamond);
//! * four parts: three C4s (a `K4`).
//!
//! Asymptotically, with `x_i = a_i n`, dividing by `C(n, 4)` gives
//! `6 sum a_i^2 a_j^2 + 12 sum a_i a_j a_k (a_i + a_j + a_k) + 72 sum a_i a_j a_k a_l`
//! over distinct index sets.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, parse_rational, rational_to_string, BigRational, Field, RationalFn, UniPoly};
use crate::error::{Error, Result};
use crate::graph::SmallGraph;

/// Part sizes of a complete multipartite graph, sorted descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartProfile {
    parts: Vec<u64>,
}

impl PartProfile {
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Precondition("a profile needs at least one part".into()));
        }
        if parts.contains(&0) {
            return Err(Error::Precondition("part sizes must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(PartProfile { parts })
    }

    /// The Turán profile: `n mod r` parts of size `ceil(n/r)`, the rest
    /// `floor(n/r)`.
    pub fn balanced(r: u64, n: u64) -> Result<Self> {
        if r == 0 || n < r {
            return Err(Error::OutOfRange(format!("balanced profile needs n >= r >= 1, got r={r}, n={n}")));
        }
        Self::new((0..r).map(|i| n / r + u64::from(i < n % r)).collect())
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn order(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn classes(&self) -> usize {
        self.parts.len()
    }

    pub fn is_balanced(&self) -> bool {
        self.parts[0] - self.parts[self.parts.len() - 1] <= 1
    }

    pub fn to_graph(&self) -> Result<SmallGraph> {
        let parts: Vec<usize> = self.parts.iter().map(|&p| p as usize).collect();
        let n = self.order();
        if n > crate::graph::MAX_ORDER as u64 {
            return Err(Error::OrderTooLarge { order: n as usize, cap: crate::graph::MAX_ORDER });
        }
        SmallGraph::complete_multipartite(&parts)
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.parts.len() {
            return Err(Error::OutOfRange(format!("class index {i} out of range for {} classes", self.parts.len())));
        }
        Ok(())
    }
}

impl FromStr for PartProfile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: std::result::Result<Vec<u64>, _> = s.split(',').map(|p| p.trim().parse::<u64>()).collect();
        Self::new(parts.map_err(|e| Error::Parse(format!("bad profile {s:?}: {e}")))?)
    }
}

impl fmt::Display for PartProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

fn c2(x: u64) -> BigInt {
    big(x) * big(x.saturating_sub(1)) / 2
}

/// Elementary symmetric polynomials `e_0..=e_k` of `xs`.
fn elementary(xs: &[u64], k: usize) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); k + 1];
    e[0] = BigInt::one();
    for &x in xs {
        for d in (1..=k).rev() {
            e[d] = &e[d] + &e[d - 1] * big(x);
        }
    }
    e
}

fn to_natural(v: BigInt) -> BigUint {
    v.to_biguint().expect("counts are nonnegative")
}

/// `N(C4, K_{x_1..x_r})`.
pub fn c4_count(profile: &PartProfile) -> BigUint {
    let xs = profile.parts();
    let total: u64 = profile.order();
    let e2_all = elementary(xs, 2)[2].clone();
    let (mut b_sum, mut b_sq) = (BigInt::zero(), BigInt::zero());
    let mut n3 = BigInt::zero();
    for &x in xs {
        let b = c2(x);
        b_sum += &b;
        b_sq += &b * &b;
        // e2 of the other parts
        let e2_rest = &e2_all - big(x) * big(total - x);
        n3 += &b * e2_rest;
    }
    let n2 = (&b_sum * &b_sum - b_sq) / 2;
    let n4 = 3 * elementary(xs, 4)[4].clone();
    to_natural(n2 + n3 + n4)
}

/// `N(K4, K_{x_1..x_r})`: the fourth elementary symmetric polynomial.
pub fn k4_count(profile: &PartProfile) -> BigUint {
    to_natural(elementary(profile.parts(), 4)[4].clone())
}

/// Copies of C4 through a fixed vertex `v` whose own class has size `x_own`
/// and which meet that class in `n_own` vertices (counting `v`) and a second
/// class of size `x_other` in `n_other` vertices; `rest` lists the remaining
/// classes.
fn local_raw(x_own: u64, x_other: u64, rest: &[u64], n_own: u8, n_other: u8) -> Result<BigInt> {
    let s: u64 = rest.iter().sum();
    let b: BigInt = rest.iter().map(|&x| c2(x)).sum();
    let e = elementary(rest, 3);
    let own = big(x_own.saturating_sub(1));
    Ok(match (n_own, n_other) {
        (1, 0) => {
            let weighted: BigInt = rest.iter().map(|&x| c2(x) * big(x)).sum();
            &b * big(s) - weighted + 3 * &e[3]
        }
        (1, 1) => big(x_other) * (&b + 3 * &e[2]),
        (1, 2) => c2(x_other) * big(s),
        (2, 0) => &own * (&b + &e[2]),
        (2, 1) => &own * big(x_other) * big(s),
        (2, 2) => own * c2(x_other),
        _ => {
            return Err(Error::OutOfRange(format!(
                "no local C4 count for (n1, n2) = ({n_own}, {n_other}); need n1 in 1..=2, n2 in 0..=2"
            )))
        }
    })
}

fn rest_of(profile: &PartProfile, i: usize, j: usize) -> Result<Vec<u64>> {
    profile.check_index(i)?;
    profile.check_index(j)?;
    if i == j {
        return Err(Error::Precondition("the two classes must differ".into()));
    }
    Ok(profile.parts.iter().enumerate().filter(|&(k, _)| k != i && k != j).map(|(_, &x)| x).collect())
}

/// `c(v, n1, n2)`: copies of C4 through a vertex `v` of class `i` meeting
/// class `i` in `n1` vertices and class `j` in `n2` vertices. Class indices
/// refer to the descending order of [`PartProfile::parts`].
pub fn local_c4_profile(profile: &PartProfile, i: usize, n1: u8, n2: u8, j: usize) -> Result<BigUint> {
    let rest = rest_of(profile, i, j)?;
    local_raw(profile.parts[i], profile.parts[j], &rest, n1, n2).map(to_natural)
}

/// `c*(v*, n1, n2)`: after moving one vertex from class `i` to class `j`,
/// copies of C4 through the moved vertex `v*` meeting the shrunken class `i`
/// in `n1` vertices and the enlarged class `j` in `n2` vertices (counting
/// `v*`).
pub fn local_c4_profile_star(profile: &PartProfile, i: usize, n1: u8, n2: u8, j: usize) -> Result<BigUint> {
    let rest = rest_of(profile, i, j)?;
    local_raw(profile.parts[j] + 1, profile.parts[i] - 1, &rest, n2, n1).map(to_natural)
}

/// `(f_before, f_after)` for moving one vertex from class `i` to class `j`.
pub fn shift_check(profile: &PartProfile, i: usize, j: usize) -> Result<(BigUint, BigUint)> {
    profile.check_index(i)?;
    profile.check_index(j)?;
    let (xi, xj) = (profile.parts[i], profile.parts[j]);
    if i == j || xi < xj + 2 {
        return Err(Error::Precondition(format!(
            "shift needs part {i} >= part {j} + 2, got sizes {xi} and {xj}"
        )));
    }
    let mut parts = profile.parts.clone();
    parts[i] -= 1;
    parts[j] += 1;
    let parts: Vec<u64> = parts.into_iter().filter(|&p| p > 0).collect();
    Ok((c4_count(profile), c4_count(&PartProfile::new(parts)?)))
}

/// Repeatedly moves a vertex from a largest to a smallest class until the
/// profile is balanced; returns every profile visited with its C4 count.
pub fn balancing_path(profile: &PartProfile) -> Vec<(PartProfile, BigUint)> {
    let mut current = profile.clone();
    let mut path = vec![(current.clone(), c4_count(&current))];
    while !current.is_balanced() {
        let last = current.classes() - 1;
        let mut parts = current.parts.clone();
        parts[0] -= 1;
        parts[last] += 1;
        current = PartProfile::new(parts).expect("sizes stay positive");
        path.push((current.clone(), c4_count(&current)));
    }
    path
}

/// `N(C4, T_r(n))`.
pub fn turan_c4_count(r: u64, n: u64) -> Result<BigUint> {
    Ok(c4_count(&PartProfile::balanced(r, n)?))
}

/// `lim N(C4, T_r(n)) / C(n, 4) = 3 (r-1)(r^2-3r+3) / r^3`.
pub fn turan_c4_asymptotic(r: u64) -> Result<BigRational> {
    if r == 0 {
        return Err(Error::OutOfRange("r must be at least 1".into()));
    }
    let r = BigInt::from(r);
    let num = 3 * (&r - 1) * (&r * &r - 3 * &r + 3);
    Ok(BigRational::new(num, &r * &r * &r))
}

/// `3 (r-1)(r^2-3r+3) / r^3` as a rational function of `r`.
pub fn opt_symbolic() -> RationalFn {
    RationalFn::from_int_coeffs(&[-9, 18, -12, 3], &[0, 0, 0, 1]).expect("nonzero denominator")
}

/// Exact `N(C4, T_r(n)) / C(n, 4)`.
pub fn turan_c4_density(r: u64, n: u64) -> Result<BigRational> {
    if n < 4 {
        return Err(Error::OutOfRange(format!("density needs n >= 4, got {n}")));
    }
    let count = turan_c4_count(r, n)?;
    Ok(BigRational::new(count.into(), binomial(n, 4).into()))
}

/// Limiting part fractions, summing to one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartFractions {
    #[serde(with = "rational_vec")]
    fractions: Vec<BigRational>,
}

mod rational_vec {
    use super::{parse_rational, rational_to_string, BigRational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(rational_to_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter().map(|s| parse_rational(s).map_err(serde::de::Error::custom)).collect()
    }
}

impl PartFractions {
    pub fn new(fractions: Vec<BigRational>) -> Result<Self> {
        if fractions.is_empty() {
            return Err(Error::Precondition("need at least one fraction".into()));
        }
        if fractions.iter().any(|a| *a < BigRational::zero()) {
            return Err(Error::Precondition("fractions must be nonnegative".into()));
        }
        let sum: BigRational = fractions.iter().sum();
        if !sum.is_one() {
            return Err(Error::Precondition(format!("fractions sum to {}, not 1", rational_to_string(&sum))));
        }
        Ok(PartFractions { fractions })
    }

    pub fn balanced(r: u64) -> Result<Self> {
        if r == 0 {
            return Err(Error::OutOfRange("r must be at least 1".into()));
        }
        Self::new(vec![BigRational::new(1.into(), r.into()); r as usize])
    }

    pub fn fractions(&self) -> &[BigRational] {
        &self.fractions
    }
}

impl FromStr for PartFractions {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(s.split(',').map(|p| parse_rational(p.trim())).collect::<Result<_>>()?)
    }
}

/// Limit C4 density of the complete multipartite graph with the given part
/// fractions, by direct summation over pairs, triples and quadruples of
/// parts.
pub fn asymptotic_c4_density(fractions: &PartFractions) -> BigRational {
    let a = fractions.fractions();
    let r = a.len();
    let mut pairs = BigRational::zero();
    let mut triples = BigRational::zero();
    let mut quads = BigRational::zero();
    for i in 0..r {
        for j in i + 1..r {
            pairs += &a[i] * &a[i] * &a[j] * &a[j];
            for k in j + 1..r {
                triples += &a[i] * &a[j] * &a[k] * (&a[i] + &a[j] + &a[k]);
                for l in k + 1..r {
                    quads += &a[i] * &a[j] * &a[k] * &a[l];
                }
            }
        }
    }
    pairs * BigRational::from_integer(6.into())
        + triples * BigRational::from_integer(12.into())
        + quads * BigRational::from_integer(72.into())
}

/// The same limit density written in power sums `p_k = sum m a^k` over
/// groups of `m` equal fractions `a`. Fractions may be polynomials (for
/// example in a perturbation parameter) and multiplicities field elements
/// (for example `r - 1`), which lets the stability expansion be computed
/// symbolically.
pub fn c4_density_power_sums<F: Field>(groups: &[(UniPoly<F>, F)]) -> UniPoly<F> {
    let p = |k: u32| {
        groups
            .iter()
            .fold(UniPoly::zero(), |acc: UniPoly<F>, (a, m)| &acc + &a.pow(k).scale(m))
    };
    let (p1, p2, p3, p4) = (p(1), p(2), p(3), p(4));
    let c = |v: i64| UniPoly::constant(F::from_int(v));
    let p1sq = &p1 * &p1;
    // 6 sum_{i<j} a_i^2 a_j^2 = 3 (p2^2 - p4)
    let pairs = &c(3) * &(&(&p2 * &p2) - &p4);
    // 12 sum a_i^2 a_j a_k = 6 (p2 p1^2 - 2 p3 p1 - p2^2 + 2 p4)
    let triples = &c(6) * &(&(&(&(&p2 * &p1sq) - &(&c(2) * &(&p3 * &p1))) - &(&p2 * &p2)) + &(&c(2) * &p4));
    // 72 e4 = 3 (p1^4 - 6 p1^2 p2 + 3 p2^2 + 8 p1 p3 - 6 p4)
    let e4 = &(&(&(&(&p1sq * &p1sq) - &(&c(6) * &(&p1sq * &p2))) + &(&c(3) * &(&p2 * &p2))) + &(&c(8) * &(&p1 * &p3)))
        - &(&c(6) * &p4);
    &(&pairs + &triples) + &(&c(3) * &e4)
}

/// The limit C4 density when one part has fraction `(1 + eta (r-1)) / r`
/// and the other `r - 1` parts share the rest equally, as a polynomial in
/// `eta` with coefficients rational in `r`.
#[derive(Clone, Debug, PartialEq)]
pub struct StabilityExpansion {
    /// `OPT_r - 6 g(r) eta^2 + 12 eta^3 (r^3-6r^2+11r-6)/r^3 - 3 eta^4 (r^3-8r^2+16r-9)/r^3`.
    pub closed_form: UniPoly<RationalFn>,
    /// The same quantity recomputed from the power-sum density formula.
    pub recomputed: UniPoly<RationalFn>,
    /// `g(r) = (2r^3 - 10r^2 + 17r - 9) / r^3`.
    pub g: RationalFn,
}

impl StabilityExpansion {
    pub fn agree(&self) -> bool {
        self.closed_form == self.recomputed
    }

    /// The expansion with `r` substituted.
    pub fn at(&self, r: &BigRational) -> Result<UniPoly<BigRational>> {
        let coeffs = self.recomputed.coeffs().iter().map(|c| c.eval(r)).collect::<Result<Vec<_>>>()?;
        Ok(UniPoly::new(coeffs))
    }
}

pub fn g_symbolic() -> RationalFn {
    RationalFn::from_int_coeffs(&[-9, 17, -10, 2], &[0, 0, 0, 1]).expect("nonzero denominator")
}

pub fn stability_expansion() -> StabilityExpansion {
    let ratfn = |num: &[i64]| RationalFn::from_int_coeffs(num, &[0, 0, 0, 1]).expect("nonzero denominator");
    let g = g_symbolic();
    let closed_form = UniPoly::new(vec![
        opt_symbolic(),
        RationalFn::zero(),
        RationalFn::from_int(-6) * g.clone(),
        RationalFn::from_int(12) * ratfn(&[-6, 11, -6, 1]),
        RationalFn::from_int(-3) * ratfn(&[-9, 16, -8, 1]),
    ]);

    let r = RationalFn::var();
    let inv_r = RationalFn::one().checked_div(&r).expect("r is nonzero");
    let one = RationalFn::one();
    // a = (1 + eta (r-1)) / r, b = (1 - eta) / r
    let a = UniPoly::new(vec![inv_r.clone(), (r.clone() - one.clone()) * inv_r.clone()]);
    let b = UniPoly::new(vec![inv_r.clone(), -inv_r]);
    let recomputed = c4_density_power_sums(&[(a, one.clone()), (b, r - one)]);
    StabilityExpansion { closed_form, recomputed, g }
}

/// Largest `|N(C4, T_r(n)) / C(n, 4) - OPT_r| * n` over the given orders.
pub fn turan_error_constant(r: u64, orders: impl IntoIterator<Item = u64>) -> Result<f64> {
    let limit = turan_c4_asymptotic(r)?;
    let mut worst = 0f64;
    for n in orders {
        let diff = turan_c4_density(r, n)? - &limit;
        let scaled = diff.abs() * BigRational::from_integer(n.into());
        worst = worst.max(scaled.to_f64().unwrap_or(f64::INFINITY));
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::graph::{count_subgraphs, named_graph, MAX_ORDER};

    fn profile(parts: &[u64]) -> PartProfile {
        PartProfile::new(parts.to_vec()).unwrap()
    }

    fn n(v: u64) -> BigUint {
        BigUint::from(v)
    }

    /// All partitions of `n` into positive parts, descending.
    fn partitions(n: u64, max: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=max.min(n)).rev() {
            prefix.push(p);
            partitions(n - p, p, prefix, out);
            prefix.pop();
        }
    }

    fn all_profiles(max_n: u64) -> Vec<PartProfile> {
        let mut out = Vec::new();
        for total in 1..=max_n {
            partitions(total, total, &mut Vec::new(), &mut out);
        }
        out.into_iter().map(|p| PartProfile::new(p).unwrap()).collect()
    }

    #[test]
    fn small_counts() {
        assert_eq!(c4_count(&profile(&[2, 2, 1])), n(5));
        assert_eq!(c4_count(&profile(&[3, 1, 1])), n(3));
        assert_eq!(c4_count(&profile(&[1, 1, 1, 1])), n(3));
        assert_eq!(k4_count(&profile(&[1, 1, 1, 1])), n(1));
        assert_eq!(k4_count(&profile(&[2, 2, 2, 1])), n(8));
        assert_eq!(k4_count(&profile(&[3, 3])), n(0));
    }

    #[test]
    fn closed_forms_match_materialized_graphs() {
        let c4 = named_graph("C4").unwrap();
        let k4 = named_graph("K4").unwrap();
        for p in all_profiles(10) {
            let g = p.to_graph().unwrap();
            if g.order() < 4 {
                continue;
            }
            assert_eq!(c4_count(&p), n(count_subgraphs(&c4, &g).unwrap()), "{p}");
            assert_eq!(k4_count(&p), n(count_subgraphs(&k4, &g).unwrap()), "{p}");
        }
    }

    /// C4s through vertex 0 meeting its class and class `j` in given sizes.
    fn brute_local(parts: &[u64], own: usize, v: usize, j: usize, n_own: usize, n_other: usize) -> u64 {
        let p = PartProfile { parts: parts.to_vec() };
        let g = p.to_graph().unwrap();
        let mut class = Vec::new();
        for (c, &x) in parts.iter().enumerate() {
            class.extend(std::iter::repeat(c).take(x as usize));
        }
        let c4 = named_graph("C4").unwrap();
        let mut total = 0;
        for mask in 0u32..1 << g.order() {
            if mask.count_ones() != 4 || mask >> v & 1 == 0 {
                continue;
            }
            let verts: Vec<usize> = (0..g.order()).filter(|u| mask >> u & 1 == 1).collect();
            let in_own = verts.iter().filter(|&&u| class[u] == own).count();
            let in_j = verts.iter().filter(|&&u| class[u] == j).count();
            if in_own == n_own && in_j == n_other {
                total += count_subgraphs(&c4, &g.induced(&verts)).unwrap();
            }
        }
        total
    }

    #[test]
    fn local_profiles_match_brute_force() {
        let combos = [(1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)];
        for p in all_profiles(9).into_iter().filter(|p| p.classes() >= 2) {
            let parts = p.parts().to_vec();
            for (i, j) in [(0, 1), (p.classes() - 1, 0)] {
                let v = parts[..i].iter().sum::<u64>() as usize;
                for &(a, b) in &combos {
                    let fast = local_c4_profile(&p, i, a, b, j).unwrap();
                    assert_eq!(fast, n(brute_local(&parts, i, v, j, a as usize, b as usize)), "{p} {i} {j} {a} {b}");
                }
            }
        }
    }

    #[test]
    fn local_profiles_decompose_the_total() {
        for p in all_profiles(10).into_iter().filter(|p| p.classes() >= 2) {
            let through_v: BigUint = [(1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)]
                .iter()
                .map(|&(a, b)| local_c4_profile(&p, 0, a, b, 1).unwrap())
                .sum();
            let mut rest = p.parts().to_vec();
            rest[0] -= 1;
            rest.retain(|&x| x > 0);
            let avoiding = if rest.is_empty() { BigUint::zero() } else { c4_count(&PartProfile::new(rest).unwrap()) };
            assert_eq!(through_v + avoiding, c4_count(&p), "{p}");
        }
    }

    #[test]
    fn paper_examples_for_local_forms() {
        let p = profile(&[2, 2, 2]);
        assert_eq!(local_c4_profile(&p, 0, 2, 2, 1).unwrap(), n(1));
        assert_eq!(local_c4_profile(&p, 0, 1, 2, 1).unwrap(), n(2));
        assert!(local_c4_profile(&p, 0, 0, 1, 1).is_err());
        assert!(local_c4_profile(&p, 0, 1, 1, 0).is_err());
    }

    #[test]
    fn starred_forms_and_comparisons() {
        // the displayed starred formulas, with I the classes other than 1, 2
        for p in all_profiles(12).into_iter().filter(|p| p.classes() >= 2) {
            let x = p.parts();
            let (x1, x2) = (x[0], x[1]);
            if x1 < x2 + 2 {
                continue;
            }
            let rest = &x[2..];
            let s: u64 = rest.iter().sum();
            let b: u64 = rest.iter().map(|&v| v * (v - 1) / 2).sum();
            let e2: u64 = (0..rest.len()).flat_map(|i| (i + 1..rest.len()).map(move |j| (i, j))).map(|(i, j)| rest[i] * rest[j]).sum();
            let total = p.order();
            let c2 = |v: u64| v * v.saturating_sub(1) / 2;
            let star = |a, bb| local_c4_profile_star(&p, 0, a, bb, 1).unwrap();
            let plain = |a, bb| local_c4_profile(&p, 0, a, bb, 1).unwrap();
            assert_eq!(star(1, 1), n((x1 - 1) * (b + 3 * e2)));
            assert_eq!(star(2, 1), n(c2(x1 - 1) * s));
            assert_eq!(star(0, 2), n(x2 * (b + e2)));
            assert_eq!(star(1, 2), n((x1 - 1) * x2 * (total - x1 - x2)));
            assert_eq!(star(2, 2), n(x2 * c2(x1 - 1)));
            assert_eq!(star(0, 1), plain(1, 0));
            assert!(plain(1, 2) < star(2, 1) || s == 0);
            assert_eq!(plain(2, 1), star(1, 2));
            assert!(plain(2, 2) < star(2, 2) || x2 < 2);
            let before: BigUint = [(1, 1), (1, 2), (2, 0), (2, 1), (2, 2)].iter().map(|&(a, bb)| plain(a, bb)).sum();
            let after: BigUint = [(1, 1), (2, 1), (0, 2), (1, 2), (2, 2)].iter().map(|&(a, bb)| star(a, bb)).sum();
            assert!(before < after, "{p}");
        }
    }

    #[test]
    fn shifts_strictly_increase() {
        assert_eq!(shift_check(&profile(&[3, 1, 1]), 0, 1).unwrap(), (n(3), n(5)));
        let (before, after) = shift_check(&profile(&[4, 2, 2]), 0, 1).unwrap();
        assert!(after > before);
        assert!(shift_check(&profile(&[2, 2, 2]), 0, 1).is_err());
        for p in all_profiles(12).into_iter().filter(|p| p.classes() >= 2) {
            let path = balancing_path(&p);
            assert!(path.last().unwrap().0.is_balanced());
            assert!(path.windows(2).all(|w| w[0].1 < w[1].1), "{p}");
        }
    }

    #[test]
    fn turan_counts() {
        assert_eq!(turan_c4_count(3, 6).unwrap(), n(15));
        assert_eq!(turan_c4_count(3, 7).unwrap(), n(31));
        assert_eq!(turan_c4_asymptotic(3).unwrap(), rat(2, 3));
        assert!(turan_c4_count(4, 3).is_err());
        assert_eq!(PartProfile::balanced(3, 8).unwrap().parts(), &[3, 3, 2]);
        let c4 = named_graph("C4").unwrap();
        for r in 1..=6u64 {
            for total in r.max(4)..=MAX_ORDER as u64 {
                let g = PartProfile::balanced(r, total).unwrap().to_graph().unwrap();
                assert_eq!(turan_c4_count(r, total).unwrap(), n(count_subgraphs(&c4, &g).unwrap()));
            }
        }
    }

    #[test]
    fn exact_density_converges_at_rate_one_over_n() {
        for r in 2..=8 {
            let orders = (r.max(4)..200).chain((200..=10_000).step_by(97)).chain([10_000]);
            let c = turan_error_constant(r, orders).unwrap();
            assert!(c <= 10.0, "r={r} constant {c}");
        }
    }

    #[test]
    fn asymptotic_density() {
        for r in 2..=8 {
            let f = PartFractions::balanced(r).unwrap();
            assert_eq!(asymptotic_c4_density(&f), turan_c4_asymptotic(r).unwrap());
        }
        assert_eq!(asymptotic_c4_density(&"1/2,1/2".parse().unwrap()), rat(3, 8));
        assert_eq!(asymptotic_c4_density(&"1,0,0".parse().unwrap()), int(0));
        assert!("1/2,1/3".parse::<PartFractions>().is_err());
    }

    #[test]
    fn asymptotic_density_matches_scaled_counts() {
        // d(n) - limit is O(1/n); compare at n = 4000 with a 1/n-sized window
        let shapes: [&[u64]; 4] = [&[1, 1], &[2, 1, 1], &[3, 2, 2, 1], &[5, 3, 1, 1]];
        for shape in shapes {
            let denom: u64 = shape.iter().sum();
            let scale = 4000 / denom;
            let p = PartProfile::new(shape.iter().map(|&s| s * scale).collect()).unwrap();
            let fr = PartFractions::new(shape.iter().map(|&s| BigRational::new(s.into(), denom.into())).collect()).unwrap();
            let exact = BigRational::new(c4_count(&p).into(), binomial(p.order(), 4).into());
            let gap = (exact - asymptotic_c4_density(&fr)).abs();
            assert!(gap < BigRational::new(10.into(), p.order().into()), "{shape:?}");
        }
    }

    #[test]
    fn power_sums_agree_with_direct_sums() {
        let fr: PartFractions = "1/3,1/4,1/6,1/12,1/6".parse().unwrap();
        let groups: Vec<(UniPoly<BigRational>, BigRational)> =
            fr.fractions().iter().map(|a| (UniPoly::constant(a.clone()), int(1))).collect();
        assert_eq!(c4_density_power_sums(&groups).coeff(0), asymptotic_c4_density(&fr));
    }

    #[test]
    fn stability_polynomial() {
        let s = stability_expansion();
        assert!(s.agree(), "closed {} vs recomputed {}", s.closed_form, s.recomputed);
        assert_eq!(s.recomputed.coeff(0), opt_symbolic());
        assert!(s.recomputed.coeff(1).is_zero());
        assert_eq!(s.g.eval(&int(4)).unwrap(), rat(27, 64));
        // numeric check against direct summation at r = 5, eta = 1/7
        let (r, eta) = (5u64, rat(1, 7));
        let big_a = (int(1) + &eta * int(r as i64 - 1)) / int(r as i64);
        let small = (int(1) - &eta) / int(r as i64);
        let mut fr = vec![big_a];
        fr.extend(std::iter::repeat(small).take(r as usize - 1));
        let direct = asymptotic_c4_density(&PartFractions::new(fr).unwrap());
        assert_eq!(s.at(&int(r as i64)).unwrap().eval(&eta), direct);
    }
}
