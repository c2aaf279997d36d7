//! Exact linear algebra over the base field.
//!
//! Plain Gaussian elimination with division; the base is a field, so no
//! fraction-free tricks are needed. Pivots are the first nonzero entry in
//! each column, which keeps runs deterministic.

use crate::error::{Error, Result};
use crate::exact::scalar::{Base, Scalar};

fn check_rect(rows: &[Vec<Scalar>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    for r in rows {
        assert_eq!(r.len(), ncols, "ragged matrix");
    }
    ncols
}

/// Row-echelon rank.
pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    let ncols = check_rect(rows);
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = m[rank][col].inv().expect("nonzero pivot");
        for r in rank + 1..m.len() {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].mul(&inv);
            for c in col..ncols {
                let delta = factor.mul(&m[rank][c]);
                m[r][c] = m[r][c].sub(&delta);
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Exact determinant of a square matrix over the base field.
pub fn det(rows: &[Vec<Scalar>], base: Base) -> Result<Scalar> {
    let n = rows.len();
    let ncols = check_rect(rows);
    if n != ncols {
        return Err(Error::Usage(format!("determinant of a {n}x{ncols} matrix")));
    }
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let mut negate = false;
    let mut acc = Scalar::one(base);
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Ok(Scalar::zero(base));
        };
        if pivot != col {
            m.swap(col, pivot);
            negate = !negate;
        }
        let p = m[col][col].clone();
        acc = acc.mul(&p);
        let inv = p.inv().expect("nonzero pivot");
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].mul(&inv);
            for c in col..n {
                let delta = factor.mul(&m[col][c]);
                m[r][c] = m[r][c].sub(&delta);
            }
        }
    }
    Ok(if negate { acc.neg() } else { acc })
}

/// Dimension of the solution space of the homogeneous system `rows * v = 0`.
pub fn nullspace_dim(rows: &[Vec<Scalar>], ncols: usize) -> usize {
    if !rows.is_empty() {
        assert_eq!(check_rect(rows), ncols);
    }
    ncols - rank(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::rat;

    fn qm(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter()
            .map(|r| r.iter().map(|&n| Scalar::from_i64(n, Base::Rational)).collect())
            .collect()
    }

    #[test]
    fn det_small_cases() {
        assert_eq!(
            det(&qm(&[&[1, 0], &[0, 1]]), Base::Rational).unwrap(),
            Scalar::from_i64(1, Base::Rational)
        );
        assert_eq!(
            det(&qm(&[&[1, 2], &[3, 4]]), Base::Rational).unwrap(),
            Scalar::from_i64(-2, Base::Rational)
        );
        assert_eq!(
            det(&qm(&[&[1, 1], &[1, 1]]), Base::Rational).unwrap(),
            Scalar::zero(Base::Rational)
        );
        // row swap flips the sign
        assert_eq!(
            det(&qm(&[&[0, 1], &[1, 0]]), Base::Rational).unwrap(),
            Scalar::from_i64(-1, Base::Rational)
        );
        // rational entries stay exact
        let m = vec![
            vec![Scalar::Rat(rat(1, 2)), Scalar::Rat(rat(1, 3))],
            vec![Scalar::Rat(rat(1, 4)), Scalar::Rat(rat(1, 5))],
        ];
        assert_eq!(det(&m, Base::Rational).unwrap(), Scalar::Rat(rat(1, 60)));
    }

    #[test]
    fn rank_and_nullspace() {
        assert_eq!(rank(&qm(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&qm(&[&[1, 0, 1], &[0, 1, 1], &[1, 1, 2]])), 2);
        assert_eq!(nullspace_dim(&qm(&[&[1, 0, 1], &[0, 1, 1], &[1, 1, 2]]), 3), 1);
        assert_eq!(nullspace_dim(&[], 3), 3);

        let p = Base::Prime(2);
        let m: Vec<Vec<Scalar>> = vec![
            vec![Scalar::from_i64(1, p), Scalar::from_i64(1, p)],
            vec![Scalar::from_i64(1, p), Scalar::from_i64(0, p)],
        ];
        assert_eq!(rank(&m), 2);
        assert_eq!(det(&m, p).unwrap(), Scalar::from_i64(1, p));
    }
}
