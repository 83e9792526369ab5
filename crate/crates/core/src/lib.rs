//! Ideal-theoretic invariants behind vanishing of formal local cohomology:
//! exact Gröbner machinery, minimal primes with primality certificates, the
//! formal dimension and vanishing-bound report, and a Z^n-graded Cech engine
//! for monomial data.
//!
//! The crate is generic over the coefficient field ([`scalar::Field`]); the
//! aliases below fix the two concrete scalar types used in practice.

pub mod cech;
pub mod corpus;
pub mod decompose;
pub mod groebner;
pub mod invariants;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod runner;
pub mod scalar;
pub mod session;

pub use groebner::{GroebnerBasis, Ideal};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{PolyRing, Polynomial};
pub use scalar::{Field, FieldSpec, PrimeField, Rationals};

/// Polynomials over the rationals.
pub type QPolynomial = Polynomial<Rationals>;
/// A polynomial ring over the rationals.
pub type QPolyRing = PolyRing<Rationals>;
/// Ideals over the rationals.
pub type QIdeal = Ideal<Rationals>;
/// Polynomials over a prime field.
pub type FpPolynomial = Polynomial<PrimeField>;
/// A polynomial ring over a prime field.
pub type FpPolyRing = PolyRing<PrimeField>;
/// Ideals over a prime field.
pub type FpIdeal = Ideal<PrimeField>;
