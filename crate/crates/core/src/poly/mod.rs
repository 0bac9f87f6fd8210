//! Exact multivariate polynomial arithmetic over the matrix of indeterminates
//! with the fixed row-major lexicographic order.

mod monomial;
mod polynomial;
pub mod text;

pub use monomial::{compare_monomials, Monomial, TermOrder, VarIndex};
pub use polynomial::{s_polynomial, Polynomial};
