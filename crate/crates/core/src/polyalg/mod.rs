//! Univariate polynomials and rational functions over any [`Scalar`](crate::scalar::Scalar).

mod gcd;
mod json;
mod poly;
mod ratfun;
mod resultant;

pub use gcd::{gcd, poly_gcd, squarefree_decompose, coprime_basis, split_by_valuation, squarefree_part, xgcd, SquarefreeDecomposition};
pub use json::{elem_from_json, elem_to_json, poly_from_json, poly_to_json, ratfun_from_json, ratfun_to_json};
pub use poly::Polynomial;
pub use ratfun::{is_constant_times_power, is_constant_times_square, ratfun_compose, RationalFunction};
pub use resultant::{discriminant, resultant};
