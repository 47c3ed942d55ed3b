use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{BigRational, Field, UniPoly};
use crate::error::{Error, Result};

type RPoly = UniPoly<BigRational>;

/// A rational function `num(r) / den(r)` over the rationals, kept in
/// canonical form: `gcd(num, den) = 1` and `den` monic. Two rational
/// functions are equal iff their canonical forms are structurally equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFn {
    num: RPoly,
    den: RPoly,
}

impl RationalFn {
    pub fn new(num: RPoly, den: RPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: RPoly, den: RPoly) -> Self {
        if num.is_zero() {
            return RationalFn { num, den: RPoly::one() };
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g).expect("gcd divides numerator");
        let den = den.exact_div(&g).expect("gcd divides denominator");
        let lead = den.leading().cloned().expect("nonzero denominator");
        let inv = lead.recip();
        RationalFn {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn from_poly(p: RPoly) -> Self {
        RationalFn { num: p, den: RPoly::one() }
    }

    /// The indeterminate `r`.
    pub fn var() -> Self {
        Self::from_poly(RPoly::x())
    }

    /// `num / den` from integer coefficient lists (lowest degree first).
    pub fn from_int_coeffs(num: &[i64], den: &[i64]) -> Result<Self> {
        Self::new(RPoly::from_ints(num), RPoly::from_ints(den))
    }

    pub fn numer(&self) -> &RPoly {
        &self.num
    }

    /// Monic denominator.
    pub fn denom(&self) -> &RPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(x) / d)
    }

    /// Numerator and denominator rescaled to coprime integer coefficients
    /// with a positive denominator leading coefficient.
    pub fn integer_parts(&self) -> (RPoly, RPoly) {
        let (cn, pn) = self.num.primitive_part();
        let (cd, pd) = self.den.primitive_part();
        // num/den = (cn/cd) * pn/pd; push the scalar ratio into integer form
        let ratio = cn / cd;
        let n = pn.scale(&BigRational::from_integer(ratio.numer().clone()));
        let d = pd.scale(&BigRational::from_integer(ratio.denom().clone()));
        (n, d)
    }

    /// Prints as `p(r)/q(r)` with expanded integer coefficients.
    pub fn fmt_with(&self, var: &str) -> String {
        let (n, d) = self.integer_parts();
        let ns = n.fmt_with(var);
        if d.is_constant() && d.coeff(0).is_one() {
            return ns;
        }
        let ns = if n.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
            format!("({ns})")
        } else {
            ns
        };
        let ds = d.fmt_with(var);
        let ds = if d.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 || !d.is_constant() {
            format!("({ds})")
        } else {
            ds
        };
        format!("{ns}/{ds}")
    }
}

impl Zero for RationalFn {
    fn zero() -> Self {
        Self::from_poly(RPoly::zero())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFn {
    fn one() -> Self {
        Self::from_poly(RPoly::one())
    }
}

impl Add for RationalFn {
    type Output = RationalFn;

    fn add(self, rhs: Self) -> Self {
        if self.den == rhs.den {
            return Self::canonical(&self.num + &rhs.num, self.den);
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Self::canonical(num, &self.den * &rhs.den)
    }
}

impl Sub for RationalFn {
    type Output = RationalFn;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for RationalFn {
    type Output = RationalFn;

    fn mul(self, rhs: Self) -> Self {
        Self::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for RationalFn {
    type Output = RationalFn;

    fn neg(self) -> Self {
        RationalFn { num: -self.num, den: self.den }
    }
}

impl Field for RationalFn {
    fn try_inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(Self::canonical(self.den.clone(), self.num.clone()))
        }
    }

    fn from_rational(q: &BigRational) -> Self {
        Self::from_poly(RPoly::constant(q.clone()))
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with("r"))
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFn({self})")
    }
}
