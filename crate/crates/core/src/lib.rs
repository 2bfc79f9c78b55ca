//! Exact algebra and analysis of cubic Cremona transformations of P3.
//!
//! Layers, bottom up: [`polycore`] (fields, polynomials), [`idealkit`]
//! (Groebner bases and ideal operations), [`cremona`] (the liaison analysis
//! of a map), [`hudson`] (local point types and the classification table),
//! [`families`] (constructors and deformation paths).

pub mod cremona;
pub mod error;
pub mod families;
pub mod hudson;
pub mod idealkit;
pub mod polycore;
pub mod suite;

pub use error::{AlgebraError, Result};
pub use polycore::{Field, Monomial, MonomialOrder, Poly, PrimeField, Rationals};
