use super::matrix::Matrix;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Gauss-Jordan elimination, pivoting only in the first `limit` columns.
fn rref_limited(m: &Matrix, limit: usize) -> Rref {
    let (rows, cols) = m.shape();
    let mut a: Vec<Vec<Scalar>> = (0..rows).map(|r| m.row(r).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut pr = 0;
    for c in 0..limit.min(cols) {
        if pr == rows {
            break;
        }
        let Some(found) = (pr..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(pr, found);
        let inv = a[pr][c].recip();
        if !inv.is_one() {
            for v in a[pr][c..].iter_mut() {
                if !v.is_zero() {
                    *v *= &inv;
                }
            }
        }
        let pivot_row = std::mem::take(&mut a[pr]);
        for (r, row) in a.iter_mut().enumerate() {
            if r == pr || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if !p.is_zero() {
                    *x -= &(&f * p);
                }
            }
        }
        a[pr] = pivot_row;
        pivots.push(c);
        pr += 1;
    }
    let reduced = Matrix::new(rows, cols, a.into_iter().flatten().collect())
        .expect("shape preserved by elimination");
    Rref { reduced, pivots }
}

pub fn rref(m: &Matrix) -> Rref {
    rref_limited(m, m.cols())
}

pub fn rank(m: &Matrix) -> usize {
    // Eliminating on the shorter side is cheaper and gives the same rank.
    if m.rows() < m.cols() {
        rref(&m.transpose()).rank()
    } else {
        rref(m).rank()
    }
}

/// Columns spanning the null space, one per free column of the echelon form.
pub fn kernel_basis(m: &Matrix) -> Matrix {
    let cols = m.cols();
    let Rref { reduced, pivots } = rref(m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut out = Matrix::zeros(cols, free.len());
    for (j, &f) in free.iter().enumerate() {
        out.set(f, j, Scalar::one());
        for (i, &p) in pivots.iter().enumerate() {
            let v = reduced.get(i, f);
            if !v.is_zero() {
                out.set(p, j, -v);
            }
        }
    }
    out
}

/// The pivot columns of `m`, which form a basis of its column space.
pub fn image_basis(m: &Matrix) -> Matrix {
    let pivots = rref(m).pivots;
    m.select_columns(&pivots)
}

/// A particular solution `x` of `a x = rhs`, with free variables set to zero.
pub fn solve(a: &Matrix, rhs: &Matrix) -> Result<Matrix> {
    if a.rows() != rhs.rows() {
        return Err(Error::Dimension(format!(
            "system with {} equations but right-hand side has {} rows",
            a.rows(),
            rhs.rows()
        )));
    }
    let n = a.cols();
    let aug = Matrix::hstack(&[a, rhs])?;
    let Rref { reduced, pivots } = rref_limited(&aug, n);
    for r in pivots.len()..a.rows() {
        if reduced.row(r)[n..].iter().any(|v| !v.is_zero()) {
            return Err(Error::NoSolution);
        }
    }
    let mut x = Matrix::zeros(n, rhs.cols());
    for (i, &p) in pivots.iter().enumerate() {
        for c in 0..rhs.cols() {
            x.set(p, c, reduced.get(i, n + c).clone());
        }
    }
    Ok(x)
}

pub fn inverse(m: &Matrix) -> Result<Matrix> {
    if !m.is_square() {
        return Err(Error::Dimension(format!("cannot invert a {}x{} matrix", m.rows(), m.cols())));
    }
    solve(m, &Matrix::identity(m.rows()))
}

/// `x` with `m x = I`; requires full row rank.
pub fn right_inverse(m: &Matrix) -> Result<Matrix> {
    solve(m, &Matrix::identity(m.rows()))
}

/// `x` with `x m = I`; requires full column rank.
pub fn left_inverse(m: &Matrix) -> Result<Matrix> {
    Ok(right_inverse(&m.transpose())?.transpose())
}

/// Solves `x a = rhs` for `x`.
pub fn solve_left(a: &Matrix, rhs: &Matrix) -> Result<Matrix> {
    Ok(solve(&a.transpose(), &rhs.transpose())?.transpose())
}

pub fn is_invertible(m: &Matrix) -> bool {
    m.is_square() && rank(m) == m.rows()
}
