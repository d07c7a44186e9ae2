//! Exact exterior calculus for coclosed G2-structures on `R^7`.
//!
//! Everything is computed with polynomial coefficients over the rationals,
//! so identities are checked coefficient by coefficient rather than up to
//! a tolerance.

pub mod cog2;
pub mod document;
pub mod error;
pub mod exterior;
pub mod g2;
pub mod linalg;
pub mod morphism;
pub mod poly;
pub mod random;
pub mod suite;

pub use cog2::{CoRochesterianForm, Coclosed};
pub use error::{Error, Result};
pub use exterior::{DifferentialForm, MultiIndex, VectorField};
pub use g2::G2Structure;
pub use poly::{Polynomial, Rational};
