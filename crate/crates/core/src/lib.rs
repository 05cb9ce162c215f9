//! Exact computations with finite groupoids.
//!
//! Homotopy cardinalities, free and p-adic free loop groupoids, spans and
//! their linearization to class-function matrices, rational local systems
//! with pushforwards and norm maps, and induced characters.

pub mod characters;
pub mod error;
pub mod grpd;
pub mod linsys;
pub mod loops;
pub mod matrix;
pub mod rational;
pub mod spans;
pub mod sparse;
pub mod suite;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::ExactMatrix;
pub use rational::Rational;
