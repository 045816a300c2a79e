//! Exact linear algebra over the rationals.

mod matrix;
mod quotient;
mod reduce;
mod scalar;

pub use matrix::Matrix;
pub use quotient::{cokernel, coequalizer, equalizer, QuotientSpace};
pub use reduce::{
    image_basis, inverse, is_invertible, kernel_basis, left_inverse, rank, right_inverse, rref,
    solve, solve_left, Rref,
};
pub use scalar::Scalar;
