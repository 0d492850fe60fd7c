//! Exact computations for the centralizer construction of Yangian-type
//! algebras `Y(Ω)` and their linear double Poisson degenerations.

pub mod current;
pub mod double;
pub mod error;
pub mod linalg;
pub mod linear;
pub mod omega;
pub mod scalar;
pub mod suite;
pub mod ugl;
pub mod words;
pub mod yangian;

pub use error::{Error, Result};
pub use scalar::Scalar;
