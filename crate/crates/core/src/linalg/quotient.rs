use serde::{Deserialize, Serialize};

use super::matrix::Matrix;
use super::reduce::{rref, solve_left};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// `V / W` with a canonical basis: the standard vectors of `V` at the
/// non-pivot positions of the reduced basis of `W`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientSpace {
    pub ambient_dim: usize,
    pub projection: Matrix,
    pub section: Matrix,
}

impl QuotientSpace {
    /// Quotient of `k^ambient_dim` by the column span of `span`.
    pub fn of_subspace(ambient_dim: usize, span: &Matrix) -> Result<Self> {
        if span.rows() != ambient_dim {
            return Err(Error::Dimension(format!(
                "spanning set has {} rows, ambient dimension is {ambient_dim}",
                span.rows()
            )));
        }
        let r = rref(&span.transpose());
        let pivots = r.pivots;
        let kept: Vec<usize> = (0..ambient_dim).filter(|k| !pivots.contains(k)).collect();
        let mut projection = Matrix::zeros(kept.len(), ambient_dim);
        let mut section = Matrix::zeros(ambient_dim, kept.len());
        for (j, &k) in kept.iter().enumerate() {
            projection.set(j, k, Scalar::one());
            section.set(k, j, Scalar::one());
            for (i, &p) in pivots.iter().enumerate() {
                let b = r.reduced.get(i, k);
                if !b.is_zero() {
                    projection.set(j, p, -b);
                }
            }
        }
        Ok(QuotientSpace { ambient_dim, projection, section })
    }

    pub fn dim(&self) -> usize {
        self.projection.rows()
    }

    /// The unique `m` with `m · projection = q`; fails if `q` does not vanish
    /// on the subspace divided out.
    pub fn factor(&self, q: &Matrix) -> Result<Matrix> {
        if q.cols() != self.ambient_dim {
            return Err(Error::Dimension(format!(
                "map has {} columns, ambient dimension is {}",
                q.cols(),
                self.ambient_dim
            )));
        }
        let m = q.mul(&self.section);
        if m.mul(&self.projection) != *q {
            return Err(Error::NoSolution);
        }
        Ok(m)
    }

    /// Same as [`factor`](Self::factor) but by an independent linear solve.
    pub fn factor_by_solve(&self, q: &Matrix) -> Result<Matrix> {
        solve_left(&self.projection, q)
    }

    /// Endomorphism of the quotient induced by `f`, which must preserve the subspace.
    pub fn induced_endomorphism(&self, f: &Matrix) -> Matrix {
        self.projection.mul(f).mul(&self.section)
    }

    /// Map between quotients induced by `f: ambient(self) -> ambient(target)`.
    pub fn induced_map(&self, f: &Matrix, target: &QuotientSpace) -> Matrix {
        target.projection.mul(f).mul(&self.section)
    }
}

fn check_parallel(s: &Matrix, t: &Matrix) -> Result<()> {
    if s.shape() != t.shape() {
        return Err(Error::Dimension(format!(
            "parallel pair has shapes {:?} and {:?}",
            s.shape(),
            t.shape()
        )));
    }
    Ok(())
}

/// `V / im(s - t)` for `s, t: U -> V`.
pub fn coequalizer(s: &Matrix, t: &Matrix) -> Result<QuotientSpace> {
    check_parallel(s, t)?;
    QuotientSpace::of_subspace(s.rows(), &(s - t))
}

/// Inclusion of `ker(s - t)`.
pub fn equalizer(s: &Matrix, t: &Matrix) -> Result<Matrix> {
    check_parallel(s, t)?;
    Ok(super::reduce::kernel_basis(&(s - t)))
}

pub fn cokernel(m: &Matrix) -> QuotientSpace {
    QuotientSpace::of_subspace(m.rows(), m).expect("span lives in the codomain")
}
