//! Exact-integer construction of equal-norm orthogonal extensions of
//! integral vector sets, and a census engine classifying which squared
//! norms admit such extensions in dimension 3.
//!
//! All arithmetic is exact over `i64` with overflow detection; there is no
//! floating point in the crate. Every value is immutable after construction
//! and every operation is a pure function, so everything can be shared and
//! sent across threads freely.

pub mod census;
pub mod clifford;
pub mod completion;
pub mod error;
pub mod gaussian;
pub mod intvec;
pub mod octonion;
pub mod quaternion;

pub use error::{Error, Result};
pub use intvec::{parse_vector_set, verify_ortho_set, IntMatrix, IntVector, OrthoSet};
