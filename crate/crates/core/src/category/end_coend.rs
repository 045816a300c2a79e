use super::coend::{CoendResult, DinaturalFamily, EndResult};
use crate::error::{Error, Result};
use crate::hopf::ModuleRep;
use crate::linalg::{inverse, rank, Matrix};

/// `ϖ: D ⊗ D -> 1` as the square matrix `W[d][d'] = ϖ(e_d ⊗ e_d')`.
fn pairing_matrix(pairing: &Matrix, dim: usize) -> Result<Matrix> {
    if pairing.shape() != (1, dim * dim) {
        return Err(Error::Dimension(format!(
            "pairing has shape {:?}, expected (1, {})",
            pairing.shape(),
            dim * dim
        )));
    }
    let w = pairing.reshape(dim, dim)?;
    let r = rank(&w);
    if r != dim {
        return Err(Error::DegeneratePairing { rank: r, dim });
    }
    Ok(w)
}

/// `(x ⊗ x∨)∨ -> x ⊗ x∨`, `e^(p,q) ↦ g⁻¹e_q ⊗ e^p`: the canonical
/// `(x ⊗ x∨)∨ ≅ x∨∨ ⊗ x∨` followed by the inverse pivotal isomorphism.
fn unflip(x: &ModuleRep) -> Result<Matrix> {
    let ginv = x.act(&x.algebra().pivot_inverse()?);
    let d = x.dim();
    let mut r = Matrix::zeros(d * d, d * d);
    for p in 0..d {
        for q in 0..d {
            for row in 0..d {
                let c = ginv.get(row, q);
                if !c.is_zero() {
                    r.set(row * d + p, p * d + q, c.clone());
                }
            }
        }
    }
    Ok(r)
}

/// Turns the universal dinatural family `ι_x: x ⊗ x∨ -> D` of the coend of
/// `(x, y) ↦ y ⊗ x∨` into a family `ȷ_x: D -> x ⊗ x∨`, using a non-degenerate
/// invariant pairing on `D`:
/// `ȷ_x(d) = Σ_i ϖ(d ⊗ ι_x(w_i)) π_x⁻¹(w^i)` over a basis `w_i` of `x ⊗ x∨`.
pub fn end_from_coend(c: &CoendResult, pairing: &Matrix) -> Result<DinaturalFamily> {
    let w = pairing_matrix(pairing, c.dim())?;
    let flat = w.transpose();
    let mut components = Vec::with_capacity(c.diagonal().len());
    for (i, iota) in c.dinatural().iter().enumerate() {
        let x = &c.diagonal_objects(i)[0];
        check_inner_hom(iota.cols(), x)?;
        components.push(unflip(x)?.mul(&iota.transpose()).mul(&flat));
    }
    Ok(DinaturalFamily { target_dim: c.dim(), components })
}

/// The converse: a universal family `π_x: E -> x ⊗ x∨` and a non-degenerate
/// pairing on `E` give `ι_x = W⁻¹ π_xᵀ (R⁻¹)ᵀ: x ⊗ x∨ -> E`, inverting the
/// construction of [`end_from_coend`].
pub fn coend_from_end(e: &EndResult, pairing: &Matrix) -> Result<DinaturalFamily> {
    let w = pairing_matrix(pairing, e.dim())?;
    let winv = inverse(&w)?;
    let mut components = Vec::with_capacity(e.diagonal().len());
    for (i, pi) in e.components().iter().enumerate() {
        let x = &e.diagonal_objects(i)[0];
        check_inner_hom(pi.rows(), x)?;
        let rinv = inverse(&unflip(x)?)?;
        components.push(winv.mul(&pi.transpose()).mul(&rinv.transpose()));
    }
    Ok(DinaturalFamily { target_dim: e.dim(), components })
}

fn check_inner_hom(n: usize, x: &ModuleRep) -> Result<()> {
    if n != x.dim() * x.dim() {
        return Err(Error::Presentation(format!(
            "block of size {n} is not {}⊗{}∨",
            x.name(),
            x.name()
        )));
    }
    Ok(())
}

/// Transports a pairing along an isomorphism `m: D -> E`: `ϖ_E = ϖ_D ∘ (m⁻¹ ⊗ m⁻¹)`.
pub fn transport_pairing(pairing: &Matrix, m: &Matrix) -> Result<Matrix> {
    let minv = inverse(m)?;
    Ok(pairing.mul(&minv.kron(&minv)))
}

