//! Formulas as printed in the source article, kept only for comparison with
//! the derived values. Nothing in the verification path reads them.

use crate::arith::{RationalFn, UniPoly};
use crate::flag::DensityForm;

fn rf(num: &[i64], den: &[i64]) -> RationalFn {
    RationalFn::from_int_coeffs(num, den).expect("nonzero denominator")
}

fn poly(c: &[i64]) -> RationalFn {
    rf(c, &[1])
}

fn form(entries: &[(usize, &[i64])]) -> DensityForm<RationalFn> {
    let mut coeffs = vec![poly(&[]); 11];
    for &(i, c) in entries {
        coeffs[i] = poly(c);
    }
    DensityForm::from_coeffs(coeffs).expect("11 entries")
}

/// `4 r^3 (3r^2 - 11r + 9)`.
const DEN4: [i64; 6] = [0, 0, 0, 36, -44, 12];

pub fn bound() -> RationalFn {
    rf(&[-9, 18, -12, 3], &[0, 0, 0, 1])
}

pub fn q_form(index: usize) -> Option<DensityForm<RationalFn>> {
    match index {
        1 => Some(form(&[(0, &[6, -12, 6]), (1, &[1, -2, 1]), (2, &[1, -1]), (3, &[3, -3]), (8, &[2]), (9, &[1])])),
        2 => Some(form(&[(3, &[3]), (6, &[-1]), (7, &[1]), (8, &[-4])])),
        3 => Some(form(&[
            (3, &[12, -12, 3]),
            (6, &[12, -6, 1]),
            (7, &[12, -8, 1]),
            (8, &[16, -16, 4]),
            (9, &[20, -8]),
            (10, &[24]),
        ])),
        _ => None,
    }
}

pub fn multipliers() -> [RationalFn; 4] {
    [
        rf(&[27, -36, 12], &[18, -22, 6]),
        rf(&[3, -6, 2], &DEN4),
        rf(&[21, -28, 8], &[144, -176, 48]),
        rf(&[3, -12, 8], &[0, 0, 144, -176, 48]),
    ]
}

pub fn coefficients() -> [RationalFn; 11] {
    let b = bound();
    // 3 (2r-3)^2 (r^3-6r^2+11r-6) / (r^3 (6r^2-22r+18))
    let num = &UniPoly::from_ints(&[-3, 2]).pow(2) * &UniPoly::from_ints(&[-18, 33, -18, 3]);
    let c45 = RationalFn::new(num, UniPoly::from_ints(&[0, 0, 0, 18, -22, 6])).expect("nonzero denominator");
    [
        b.clone(),
        rf(&[-324, 1029, -1272, 767, -226, 26], &DEN4),
        rf(&[-324, 1029, -1269, 758, -218, 24], &DEN4),
        b.clone(),
        c45.clone(),
        c45,
        rf(&[-648, 2070, -2601, 1575, -448, 48], &[0, 0, 0, 72, -88, 24]),
        rf(&[-324, 1035, -1302, 804, -242, 28], &DEN4),
        b.clone(),
        b.clone(),
        b,
    ]
}

pub const TIGHT_SET: [usize; 5] = [0, 3, 8, 9, 10];
