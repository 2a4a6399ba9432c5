//! Exact linear algebra over multivariate rational polynomials.

mod poly;
mod poly_matrix;

pub use poly::{Exponent, Poly, Var, NVARS};
pub use poly_matrix::{join_index, split_index, Entry, PolyMatrix};
