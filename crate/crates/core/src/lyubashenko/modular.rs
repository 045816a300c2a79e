use super::coend::build_l_default;
use super::structure::{hopf_pairing, pairing_rank};
use crate::category::{coend, CoendResult, Factor, GeneratingSubcategory, Letter, WordFunctor};
use crate::error::Result;
use crate::hopf::{HopfAlgebra, ModuleRep};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularityVerdict {
    pub modular: bool,
    pub rank: usize,
    pub dim: usize,
}

/// Modular iff the pairing on `L` is non-degenerate.
pub fn modularity_test(h: &HopfAlgebra) -> Result<ModularityVerdict> {
    if !h.has_r_matrix() {
        return Err(crate::error::Error::MissingRMatrix(h.name().to_string()));
    }
    let l = build_l_default(h)?;
    let omega = hopf_pairing(&l)?;
    let rank = pairing_rank(&omega, l.dim())?;
    Ok(ModularityVerdict { modular: rank == l.dim(), rank, dim: l.dim() })
}

/// `Z(c) = ∫ b∨ ⊗ c ⊗ b` over `sub`.
pub fn central_object(c: &ModuleRep, sub: &GeneratingSubcategory) -> Result<CoendResult> {
    let g = WordFunctor::inferred(
        c.algebra(),
        vec![Factor::Object(vec![Letter::DualSlot(0), Letter::Fixed(c.clone()), Letter::Slot(1)])],
    )?;
    coend(sub, &g)
}
