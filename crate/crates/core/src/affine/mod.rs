//! The affine periplectic Brauer algebra: regular dot diagrams, the normal
//! form of words, and the quotients onto `A_{m+d}` and the degenerate affine
//! Hecke algebra.

mod dot;
mod element;
mod normalize;
mod pbw;
mod quotient;

pub use dot::{enumerate_regular, is_regular, DotDiagram, FiltrationDegree};
pub use element::{multiply, normalize, normalize_combination, psi_image, PdElement};
pub use pbw::{pbw_rank_check, PbwReport};
pub use quotient::{pi_m, pi_m_combination, pi_m_word, to_daha, to_daha_combination, to_daha_word, DahaElement};

#[cfg(test)]
mod tests;
