//! Finite-dimensional Hopf algebras and their module categories.

mod algebra;
mod axioms;
mod braided;
pub mod catalog;
mod format;
mod groups;
mod hom;
mod module;

pub use algebra::{tensor_apply, tensor_from_vec, tensor_mul, HopfAlgebra, HopfAlgebraData, TensorElement};
pub use axioms::{check_axioms, AxiomCheck, AxiomReport};
pub use braided::{
    braiding, braiding_inverse, coevaluation, evaluation, flip, permute, pivot_iso, quantum_trace,
    right_coevaluation, right_evaluation,
};
pub use format::{algebra_to_json, load_algebra, parse_algebra, save_algebra};
pub use groups::{double, group_algebra, GroupTable};
pub use hom::{are_isomorphic, find_isomorphism, hom_space, is_intertwiner, IntertwinerSpace};
pub use module::ModuleRep;
