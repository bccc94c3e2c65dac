//! Exact homological algebra over graded quotient rings.
//!
//! The crate computes Groebner bases, minimal graded free resolutions,
//! syzygies, transposes, Ext/Tor and stable Hom of finitely presented
//! modules over rings R = k[x_1..x_n]/I, together with nonfree loci,
//! singular loci, and decision procedures that classify thick and resolving
//! subcategories of Cohen-Macaulay modules over hypersurfaces through
//! specialization-closed subsets of the spectrum.
//!
//! Everything is generic over the coefficient field through [`scalar::Scalar`];
//! the aliases below fix the two concrete instantiations.

pub mod classify;
pub mod error;
pub mod groebner;
pub mod matrix;
pub mod homology;
pub mod ideal;
pub mod loci;
pub mod modgb;
pub mod monomial;
pub mod parse;
pub mod presentation;
pub mod qring;
pub mod ringclass;
pub mod resolve;
pub mod poly;
pub mod scalar;

pub use error::Error;
pub use scalar::{FieldSpec, Fp, Rat, Scalar};

/// Polynomial over the rationals.
pub type QPolynomial = poly::Polynomial<Rat>;
/// Polynomial over a prime field.
pub type FpPolynomial = poly::Polynomial<Fp>;
/// Ideal over the rationals.
pub type QIdeal = ideal::Ideal<Rat>;
/// Ideal over a prime field.
pub type FpIdeal = ideal::Ideal<Fp>;
