//! Exact coefficient fields and sparse polynomial algebra.

pub mod field;
pub mod forms;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod rng;

pub use field::{Field, PrimeField, Rationals};
pub use forms::{random_form, random_form_in, random_point, Constraint, FormSpace};
pub use monomial::{Monomial, MonomialOrder, MAX_VARS};
pub use parse::{parse_poly, print_poly};
pub use poly::{binomial, monomials_of_degree, poly_arith, ArithOp, Poly};
pub use rng::{attempt_rng, keyed_rng, KeyedRng};
