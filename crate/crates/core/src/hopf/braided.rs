use super::module::ModuleRep;
use crate::error::Result;
use crate::linalg::{Matrix, Scalar};

/// Swap `k^a ⊗ k^b -> k^b ⊗ k^a`.
pub fn flip(a: usize, b: usize) -> Matrix {
    let mut m = Matrix::zeros(a * b, a * b);
    for i in 0..a {
        for j in 0..b {
            m.set(j * a + i, i * b + j, Scalar::one());
        }
    }
    m
}

/// Reorders tensor factors: output factor `k` is input factor `order[k]`.
pub fn permute(dims: &[usize], order: &[usize]) -> Matrix {
    let n: usize = dims.iter().product();
    let out_dims: Vec<usize> = order.iter().map(|&k| dims[k]).collect();
    let mut m = Matrix::zeros(n, n);
    let mut idx = vec![0usize; dims.len()];
    for col in 0..n {
        let mut rest = col;
        for k in (0..dims.len()).rev() {
            idx[k] = rest % dims[k];
            rest /= dims[k];
        }
        let row = order.iter().zip(&out_dims).fold(0, |acc, (&k, &d)| acc * d + idx[k]);
        m.set(row, col, Scalar::one());
    }
    m
}

fn r_action(m: &ModuleRep, n: &ModuleRep, terms: &[(usize, usize, Scalar)]) -> Result<Matrix> {
    m.same_algebra(n)?;
    let d = m.dim() * n.dim();
    let mut acc = Matrix::zeros(d, d);
    for (i, j, r) in terms {
        acc = &acc + &m.basis_action(*i).kron(n.basis_action(*j)).scale(r);
    }
    Ok(acc)
}

/// `c_{m,n}: m ⊗ n -> n ⊗ m`, `v ⊗ w ↦ Σ R₂w ⊗ R₁v`.
pub fn braiding(m: &ModuleRep, n: &ModuleRep) -> Result<Matrix> {
    let terms = m.algebra().r_terms()?;
    Ok(flip(m.dim(), n.dim()).mul(&r_action(m, n, &terms)?))
}

/// `c_{m,n}⁻¹: n ⊗ m -> m ⊗ n`, computed from `R⁻¹ = (S ⊗ id)R`.
pub fn braiding_inverse(m: &ModuleRep, n: &ModuleRep) -> Result<Matrix> {
    let terms = m.algebra().r_inverse_terms()?;
    Ok(r_action(m, n, &terms)?.mul(&flip(n.dim(), m.dim())))
}

/// `ev: m∨ ⊗ m -> 1`, `φ ⊗ v ↦ φ(v)`.
pub fn evaluation(m: &ModuleRep) -> Matrix {
    let d = m.dim();
    let mut e = Matrix::zeros(1, d * d);
    for i in 0..d {
        e.set(0, i * d + i, Scalar::one());
    }
    e
}

/// `coev: 1 -> m ⊗ m∨`, `1 ↦ Σ e_i ⊗ e^i`.
pub fn coevaluation(m: &ModuleRep) -> Matrix {
    evaluation(m).transpose()
}

/// `ev': m ⊗ m∨ -> 1`, `v ⊗ φ ↦ φ(g v)` for the pivot `g`.
pub fn right_evaluation(m: &ModuleRep) -> Result<Matrix> {
    let g = m.act(&m.algebra().pivot()?);
    let d = m.dim();
    let mut e = Matrix::zeros(1, d * d);
    for i in 0..d {
        for j in 0..d {
            e.set(0, i * d + j, g.get(j, i).clone());
        }
    }
    Ok(e)
}

/// `coev': 1 -> m∨ ⊗ m`, `1 ↦ Σ e^i ⊗ g⁻¹ e_i`.
pub fn right_coevaluation(m: &ModuleRep) -> Result<Matrix> {
    let ginv = m.act(&m.algebra().pivot_inverse()?);
    let d = m.dim();
    let mut c = Matrix::zeros(d * d, 1);
    for i in 0..d {
        for j in 0..d {
            c.set(i * d + j, 0, ginv.get(j, i).clone());
        }
    }
    Ok(c)
}

/// `π_m: m -> m∨∨`, the action of the pivot (double-dual basis identified with that of `m`).
pub fn pivot_iso(m: &ModuleRep) -> Result<Matrix> {
    Ok(m.act(&m.algebra().pivot()?))
}

/// Quantum trace of an endomorphism, `ev' ∘ (f ⊗ id) ∘ coev`.
pub fn quantum_trace(m: &ModuleRep, f: &Matrix) -> Result<Scalar> {
    let g = m.act(&m.algebra().pivot()?);
    let gf = g.mul(f);
    Ok((0..m.dim()).map(|i| gf.get(i, i).clone()).sum())
}
