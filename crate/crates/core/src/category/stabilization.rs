use super::coend::{coend, factor_through_coend, DinaturalFamily};
use super::functor::Functor;
use super::subcategory::GeneratingSubcategory;
use crate::error::{Error, Result};
use crate::linalg::{is_invertible, rank};

#[derive(Clone, Debug)]
pub struct StabilizationReport {
    pub small_dim: usize,
    pub large_dim: usize,
    /// Rank of the canonical map from the small coend to the large one.
    pub map_rank: usize,
    pub stable: bool,
}

/// Compares the coends of `g` over `small ⊆ large` through the map induced by
/// restricting the large coend's family to the objects of `small`.
pub fn stabilization_check(
    small: &GeneratingSubcategory,
    large: &GeneratingSubcategory,
    g: &dyn Functor,
) -> Result<StabilizationReport> {
    let cs = coend(small, g)?;
    let cl = coend(large, g)?;
    let mut components = Vec::with_capacity(small.len());
    for x in small.objects() {
        let i = large
            .index_of(x)
            .ok_or_else(|| Error::Presentation(format!("{} is not in the larger subcategory", x.name())))?;
        components.push(cl.component(i).clone());
    }
    let m = factor_through_coend(&cs, &DinaturalFamily { target_dim: cl.dim(), components })?;
    Ok(StabilizationReport {
        small_dim: cs.dim(),
        large_dim: cl.dim(),
        map_rank: rank(&m),
        stable: is_invertible(&m),
    })
}
