//! The F₂ function `D`, Parshin symbols of monomials, symbolic monomials in
//! vertex coefficients, and combinatorial coefficients of vertices of
//! Minkowski sums.

mod coefficients;
mod d_function;
mod monomial;
mod parshin;

pub use coefficients::{
    combinatorial_coefficients, combinatorial_coefficients_2d, combinatorial_coefficients_ij,
    combinatorial_coefficients_with_chain, CombCoeffTable,
};
pub use d_function::{d_formula_one, d_formula_two, d_function, F2Vector};
pub use monomial::VertexMonomialExpr;
pub use parshin::{parshin_symbol, parshin_symbolic};
