//! The coend `L = ∫ x ⊗ x∨`, its Hopf structure and pairing, and modularity.

mod coend;
mod modular;
mod structure;

pub use coend::{build_l, build_l_default, build_l_small, coadjoint_family, coadjoint_module, LyubashenkoCoend, Ordering};
pub use modular::{central_object, modularity_test, ModularityVerdict};
pub use structure::{
    check_structure, drinfeld_element, hopf_pairing, hopf_structure, integral, pairing_component, pairing_rank,
    test_objects,
    HopfStructure,
};

#[cfg(test)]
mod tests;
