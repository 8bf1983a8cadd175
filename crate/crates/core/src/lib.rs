//! Exact Wronskians of Hermite polynomials indexed by partitions, their
//! complex zero sets, and the asymptotic curves those zeros follow.
//!
//! Polynomials are generic over an exact coefficient ring ([`poly::Poly`]);
//! the asymptotic formulas are generic over `num_traits::Float`. The
//! aliases below fix the concrete types used throughout the crate.

pub mod error;
pub mod partition;
pub mod poly;
pub mod polyalg;
pub mod rootfind;
pub mod asympt;
pub mod conjecture;

pub use error::{Error, Result};
pub use partition::{Convention, DegreeSequence, DiagramPoints, Partition};
pub use poly::{Coeff, Parity, Poly};

/// Dense polynomial with arbitrary-precision integer coefficients.
pub type BigPoly = Poly<num_bigint::BigInt>;
/// Dense polynomial with exact rational coefficients.
pub type RatPoly = Poly<num_rational::BigRational>;
