use num_traits::{One, Zero};

use super::{d_function, VertexMonomialExpr};
use crate::error::{Error, Result};
use crate::lattice::ExponentVector;
use crate::laurent::{rational_pow, Rational};
use crate::linalg::{det_i64, to_i64};

/// Exponent of `c_j` (0-based `j`): `(-1)^{j+1} det(k_1, …, k̂_j, …, k_{n+1})`.
fn exponents(ks: &[ExponentVector]) -> Result<Vec<i64>> {
    let n = ks.first().map(ExponentVector::dim).unwrap_or(0);
    if ks.len() != n + 1 {
        return Err(Error::WrongCount {
            expected: n + 1,
            found: ks.len(),
        });
    }
    if let Some(k) = ks.iter().find(|k| k.dim() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: k.dim(),
        });
    }
    Ok((0..ks.len())
        .map(|j| {
            let rows: Vec<Vec<i64>> = ks
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != j)
                .map(|(_, k)| k.coords().to_vec())
                .collect();
            let det = to_i64(&det_i64(&rows));
            if j % 2 == 0 {
                -det
            } else {
                det
            }
        })
        .collect())
}

/// `[c_1 z^{k_1}, …, c_{n+1} z^{k_{n+1}}]`.
pub fn parshin_symbol(monomials: &[(Rational, ExponentVector)]) -> Result<Rational> {
    if let Some(i) = monomials.iter().position(|(c, _)| c.is_zero()) {
        return Err(Error::ZeroCoefficient { index: i });
    }
    let ks: Vec<ExponentVector> = monomials.iter().map(|(_, k)| k.clone()).collect();
    let exps = exponents(&ks)?;
    let mut value = if d_function(&ks)? == 1 {
        -Rational::one()
    } else {
        Rational::one()
    };
    for ((c, _), e) in monomials.iter().zip(exps) {
        value *= rational_pow(c, e);
    }
    Ok(value)
}

/// The Parshin symbol of the monomials `a_{p_j, A_j} z^{A_j}`, kept symbolic.
///
/// Entry `j` names the polynomial index `p_j` and the vertex `A_j` whose
/// coefficient plays the role of `c_j`.
pub fn parshin_symbolic(entries: &[(usize, ExponentVector)]) -> Result<VertexMonomialExpr> {
    let ks: Vec<ExponentVector> = entries.iter().map(|(_, a)| a.clone()).collect();
    let exps = exponents(&ks)?;
    let mut out = if d_function(&ks)? == 1 {
        VertexMonomialExpr::minus_one()
    } else {
        VertexMonomialExpr::identity()
    };
    for ((p, a), e) in entries.iter().zip(exps) {
        out.add_exponent(*p, a.clone(), e);
    }
    Ok(out)
}
