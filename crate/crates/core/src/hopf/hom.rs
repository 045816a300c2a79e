use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::module::ModuleRep;
use crate::error::{Error, Result};
use crate::linalg::{is_invertible, kernel_basis, Matrix, Scalar};

/// Basis of `Hom_H(source, target)` as `d_target x d_source` matrices.
#[derive(Clone, Debug)]
pub struct IntertwinerSpace {
    source: ModuleRep,
    target: ModuleRep,
    basis: Vec<Matrix>,
    /// Row-major positions at which the basis is the identity pattern.
    free: Vec<usize>,
}

impl IntertwinerSpace {
    pub fn source(&self) -> &ModuleRep {
        &self.source
    }

    pub fn target(&self) -> &ModuleRep {
        &self.target
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn combine(&self, coeffs: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.target.dim(), self.source.dim());
        for (b, c) in self.basis.iter().zip(coeffs).filter(|(_, c)| !c.is_zero()) {
            out = &out + &b.scale(c);
        }
        out
    }

    /// Coordinates of `x` in the stored basis; fails if `x` is not an intertwiner.
    pub fn coordinates(&self, x: &Matrix) -> Result<Vec<Scalar>> {
        if x.shape() != (self.target.dim(), self.source.dim()) {
            return Err(Error::Dimension(format!(
                "map of shape {:?} is not in Hom({}, {})",
                x.shape(),
                self.source.name(),
                self.target.name()
            )));
        }
        let coeffs: Vec<Scalar> = self.free.iter().map(|&p| x.entries()[p].clone()).collect();
        if self.combine(&coeffs) != *x {
            return Err(Error::NotNatural(format!(
                "map is not an intertwiner {} -> {}",
                self.source.name(),
                self.target.name()
            )));
        }
        Ok(coeffs)
    }

    pub fn contains(&self, x: &Matrix) -> bool {
        self.coordinates(x).is_ok()
    }

    /// Matrix whose columns are the row-major vectorizations of the basis.
    pub fn basis_matrix(&self) -> Matrix {
        let cols: Vec<Matrix> = self.basis.iter().map(Matrix::vectorize).collect();
        let refs: Vec<&Matrix> = cols.iter().collect();
        if refs.is_empty() {
            return Matrix::zeros(self.target.dim() * self.source.dim(), 0);
        }
        Matrix::hstack(&refs).expect("equal heights")
    }
}

/// Solves `X ρ_m(g) = ρ_n(g) X` for the algebra generators `g`.
pub fn hom_space(m: &ModuleRep, n: &ModuleRep) -> Result<IntertwinerSpace> {
    m.same_algebra(n)?;
    let h = m.algebra();
    let (dm, dn) = (m.dim(), n.dim());
    let unknowns = dm * dn;
    let gens = h.generators();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for &g in gens {
        let a = m.basis_action(g);
        let b = n.basis_action(g);
        if dm == 1 {
            // X is a column; (ρ_n(g) - λ) X = 0.
            let lambda = a.get(0, 0);
            for r in 0..dn {
                let mut row = b.row(r).to_vec();
                row[r] -= lambda;
                rows.push(row);
            }
            continue;
        }
        // Equation (r, c): Σ_k X[r][k] a[k][c] - Σ_k b[r][k] X[k][c] = 0.
        for r in 0..dn {
            for c in 0..dm {
                let mut row = vec![Scalar::zero(); unknowns];
                for k in 0..dm {
                    let v = a.get(k, c);
                    if !v.is_zero() {
                        row[r * dm + k] += v;
                    }
                }
                for k in 0..dn {
                    let v = b.get(r, k);
                    if !v.is_zero() {
                        row[k * dm + c] -= v;
                    }
                }
                if row.iter().any(|v| !v.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let system = if rows.is_empty() {
        Matrix::zeros(0, unknowns)
    } else {
        Matrix::from_rows(rows)?
    };
    let kernel = kernel_basis(&system);
    let mut basis = Vec::with_capacity(kernel.cols());
    let mut free = Vec::with_capacity(kernel.cols());
    for j in 0..kernel.cols() {
        let col = kernel.column(j);
        let pos = (0..unknowns)
            .find(|&p| col[p].is_one() && (0..kernel.cols()).all(|o| o == j || kernel.get(p, o).is_zero()))
            .expect("kernel basis has an identity pattern");
        free.push(pos);
        basis.push(Matrix::new(dn, dm, col)?);
    }
    Ok(IntertwinerSpace { source: m.clone(), target: n.clone(), basis, free })
}

/// Checks that `x` intertwines the actions of every basis element.
pub fn is_intertwiner(x: &Matrix, m: &ModuleRep, n: &ModuleRep) -> bool {
    x.shape() == (n.dim(), m.dim())
        && m.action().iter().zip(n.action()).all(|(a, b)| x.mul(a) == b.mul(x))
}

/// An explicit isomorphism `m -> n`, if one exists. Tries seeded random
/// combinations of the Hom basis, which succeeds with high probability.
pub fn find_isomorphism(m: &ModuleRep, n: &ModuleRep) -> Result<Option<Matrix>> {
    if m.dim() != n.dim() {
        return Ok(None);
    }
    let hom = hom_space(m, n)?;
    let back = hom_space(n, m)?;
    if hom.dim() != back.dim() || hom.dim() == 0 {
        return Ok(if m.dim() == 0 { Some(Matrix::zeros(0, 0)) } else { None });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..16 {
        let coeffs: Vec<Scalar> = (0..hom.dim()).map(|_| Scalar::from(rng.gen_range(-9i64..=9))).collect();
        let x = hom.combine(&coeffs);
        if is_invertible(&x) {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

pub fn are_isomorphic(m: &ModuleRep, n: &ModuleRep) -> Result<bool> {
    Ok(find_isomorphism(m, n)?.is_some())
}
