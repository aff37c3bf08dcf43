//! Exact linear algebra over the rationals.

pub mod rational;
mod solve;
mod sparse;

pub use rational::{ParseRationalError, Rational};
pub use solve::{rank, solve_in_span, EchelonBasis, SpanSolver};
pub use sparse::{mat_mul, Accumulator, SparseMatrix, SparseVector};
