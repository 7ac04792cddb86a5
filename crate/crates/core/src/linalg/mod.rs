//! Exact dense matrices, fraction-free rank, and modular elimination.

pub mod dense;
pub mod modular;
pub mod scalar;

pub use dense::Matrix;
pub use modular::{rank_of_rows, row_basis, Echelon, ModMatrix};
pub use scalar::Scalar;
