pub mod blocks;
pub mod category;
pub mod error;
pub mod hopf;
pub mod linalg;
pub mod lex;
pub mod lyubashenko;
pub mod verify;

pub use error::{Error, Result};
