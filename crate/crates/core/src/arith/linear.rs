use super::Field;
use crate::error::{Error, Result};

/// Solves `A x = b` exactly by Gauss-Jordan elimination.
///
/// `A` may have more rows than columns; the system must be consistent and
/// have full column rank, i.e. a unique solution.
pub fn solve_linear<F: Field>(a: &[Vec<F>], b: &[F]) -> Result<Vec<F>> {
    let rows = a.len();
    if rows != b.len() {
        return Err(Error::Arithmetic("row count mismatch".into()));
    }
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    if m.iter().any(|r| r.len() != cols + 1) {
        return Err(Error::Arithmetic("ragged coefficient matrix".into()));
    }
    for col in 0..cols {
        let pivot = (col..rows)
            .find(|&r| !m[r][col].is_zero())
            .ok_or_else(|| Error::Arithmetic("linear system is rank deficient".into()))?;
        m.swap(col, pivot);
        let inv = m[col][col].try_inv().expect("nonzero pivot");
        for x in m[col].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for r in 0..rows {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in 0..=cols {
                let delta = factor.clone() * m[col][c].clone();
                m[r][c] = m[r][c].clone() - delta;
            }
        }
    }
    if m[cols..].iter().any(|r| !r[cols].is_zero()) {
        return Err(Error::Arithmetic("linear system is inconsistent".into()));
    }
    Ok(m.into_iter().take(cols).map(|r| r[cols].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, BigRational};

    #[test]
    fn overdetermined_consistent() {
        let a = vec![vec![int(1), int(1)], vec![int(1), int(-1)], vec![int(2), int(0)]];
        let b = vec![int(3), int(1), int(4)];
        assert_eq!(solve_linear(&a, &b).unwrap(), vec![int(2), int(1)]);
    }

    #[test]
    fn inconsistent_and_singular() {
        let a = vec![vec![int(1), int(1)], vec![int(1), int(-1)], vec![int(2), int(0)]];
        assert!(solve_linear(&a, &[int(3), int(1), int(5)]).is_err());
        let s: Vec<Vec<BigRational>> = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert!(solve_linear(&s, &[int(1), int(2)]).is_err());
        assert_eq!(
            solve_linear(&[vec![int(3)]], &[int(1)]).unwrap(),
            vec![rat(1, 3)]
        );
    }
}
