//! Polar Legendre polynomials with a complex pole.
//!
//! For a pole `ζ`, the polar Legendre polynomial `P_n` is the monic
//! polynomial with `((z − ζ) P_n(z))' = (n + 1) L_n(z)`, where `L_n` is the
//! monic Legendre polynomial. This crate builds `P_n` and the primitive
//! `Π_{ζ,n+1} = (z − ζ) P_n` by independent routes, evaluates them without
//! coefficients, locates their zeros, and checks the family's orthogonality,
//! recurrence, zero-geometry and asymptotic identities.

pub mod error;
pub mod geometry;
pub mod legendre;
pub mod polar;
pub mod poly;
pub mod report;
pub mod roots;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use poly::{ComplexPolynomial, ExactComplexPolynomial, Polynomial, RationalPolynomial};
pub use scalar::{ExactComplex, Scalar};
