//! Representable and left exact functors: the delta property, representification,
//! the left exact coend `∮ Hom(u, v ⊗ x ⊗ x∨) = Hom(u, v ⊗ L)`, convolution, coends with parameters
//! and the iterated left exact coend.
mod delta;
mod fubini;
mod inner_hom;
mod parameters;
mod presentation;

pub use delta::{delta_coend, in_span, DeltaReport};
pub use fubini::{lex_fubini, LexFubiniReport};
pub use inner_hom::{lex_coend_inner_hom, LexCoend, LexTestFamily, Mediation};
pub use parameters::{
    convolution, parameterized_coend, representable_transitions, ConvolutionReport, Identification, WithParameters,
};
pub use presentation::{post_compose, pre_compose, representify, yoneda_extract, LexFunctorPresentation, Representation};

#[cfg(test)]
mod tests;
