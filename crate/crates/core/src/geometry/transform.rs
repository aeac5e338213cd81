use serde::Serialize;

use super::linalg::{determinant, inverse, Frac};
use super::LatticePoint;
use crate::error::{Error, Result};

/// `x ↦ M·x + u` with `M` unimodular: a lattice automorphism followed by an
/// integer translation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineTransform {
    matrix: Vec<Vec<i64>>,
    shift: Vec<i64>,
}

impl AffineTransform {
    pub fn new(matrix: Vec<Vec<i64>>, shift: Vec<i64>) -> Result<Self> {
        let n = matrix.len();
        if matrix.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid("transform matrix must be square".into()));
        }
        if shift.len() != n {
            return Err(Error::DimensionMismatch(n, shift.len()));
        }
        let det = determinant(&matrix)?;
        if det != Frac::ONE && det != Frac::int(-1) {
            return Err(Error::NotUnimodular);
        }
        Ok(AffineTransform { matrix, shift })
    }

    pub fn identity(n: usize) -> Self {
        let matrix = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        AffineTransform {
            matrix,
            shift: vec![0; n],
        }
    }

    /// `x ↦ x + u`.
    pub fn translation(shift: Vec<i64>) -> Self {
        let mut t = AffineTransform::identity(shift.len());
        t.shift = shift;
        t
    }

    /// `y_i = signs[i] · x_{perm[i]}`; `perm` is 0-based.
    pub fn signed_permutation(perm: &[usize], signs: &[i64]) -> Result<Self> {
        let n = perm.len();
        let mut matrix = vec![vec![0; n]; n];
        for (i, (&p, &s)) in perm.iter().zip(signs).enumerate() {
            if p >= n || s.abs() != 1 {
                return Err(Error::Invalid("not a signed permutation".into()));
            }
            matrix[i][p] = s;
        }
        AffineTransform::new(matrix, vec![0; n])
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn shift(&self) -> &[i64] {
        &self.shift
    }

    pub fn apply(&self, x: &LatticePoint) -> LatticePoint {
        let coords = self
            .matrix
            .iter()
            .zip(&self.shift)
            .map(|(row, u)| row.iter().zip(&x.0).map(|(a, b)| a * b).sum::<i64>() + u)
            .collect();
        LatticePoint(coords)
    }

    /// `M^{-T}`, integral because `M` is unimodular.
    pub(crate) fn inverse_transpose(&self) -> Result<Vec<Vec<i64>>> {
        let inv = inverse(&self.matrix)?.ok_or(Error::NotUnimodular)?;
        let n = self.dim();
        let mut out = vec![vec![0; n]; n];
        for (i, row) in inv.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if v.denom() != 1 {
                    return Err(Error::NotUnimodular);
                }
                out[j][i] = i64::try_from(v.numer()).map_err(|_| Error::ArithmeticOverflow)?;
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unimodularity_is_checked() {
        assert!(AffineTransform::new(vec![vec![1, 1], vec![0, 1]], vec![0, 0]).is_ok());
        assert_eq!(
            AffineTransform::new(vec![vec![2, 0], vec![0, 1]], vec![0, 0]),
            Err(Error::NotUnimodular)
        );
        let t = AffineTransform::signed_permutation(&[1, 0], &[1, -1]).unwrap();
        assert_eq!(t.apply(&LatticePoint(vec![3, 5])), LatticePoint(vec![5, -3]));
        let shear = AffineTransform::new(vec![vec![1, 2], vec![0, 1]], vec![1, 0]).unwrap();
        assert_eq!(shear.inverse_transpose().unwrap(), vec![vec![1, 0], vec![-2, 1]]);
    }
}
