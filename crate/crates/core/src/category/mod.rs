//! Coends and ends over finite generating subcategories of module categories.

mod coend;
mod end_coend;
mod examples;
mod functor;
mod iterated;
mod stabilization;
mod subcategory;

pub use coend::{
    coend, coend_over, coend_over_unchecked, end, end_over, factor_through_coend, factor_through_end, CoendResult,
    CoendVariable, DinaturalFamily, EndResult,
};
pub use end_coend::{coend_from_end, end_from_coend, transport_pairing};
pub use examples::{nat_coordinates, nat_space, relative_tensor, FiniteAlgebra, NatSpace};
pub use functor::{
    check_functorial, Carrier, ConstantFunctor, Factor, FactorCarrier, Functor, Letter, Payload, Variance, WordFunctor,
};
pub(crate) use iterated::compare;
pub use iterated::{fubini_check, FubiniReport, PartialCoend};
pub use stabilization::{stabilization_check, StabilizationReport};
pub use subcategory::{vector_spaces, BasisMorphism, GeneratingSubcategory};
