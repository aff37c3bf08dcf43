pub mod error;
pub mod exactla;
pub mod superalgebra;

pub use error::{Error, Result};
pub use exactla::{Rational, SparseMatrix, SparseVector};
pub mod tensoraction;
pub mod relations;
pub mod brauer;
pub mod affine;
pub mod verify;
pub mod document;
pub mod expr;
pub mod render;
