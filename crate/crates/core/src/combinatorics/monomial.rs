use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::ExponentVector;
use crate::laurent::{rational_pow, Rational, SystemInstance};

/// `±Π a_{j,A}^{e_{j,A}}`, a signed monomial in the vertex coefficients
/// `a_{j,A}` (coefficient of polynomial `j` at vertex `A` of its polytope).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VertexMonomialExpr {
    negative: bool,
    exponents: BTreeMap<(usize, ExponentVector), i64>,
}

impl Default for VertexMonomialExpr {
    fn default() -> Self {
        Self::identity()
    }
}

impl VertexMonomialExpr {
    pub fn identity() -> Self {
        Self {
            negative: false,
            exponents: BTreeMap::new(),
        }
    }

    pub fn factor(poly: usize, vertex: ExponentVector, exponent: i64) -> Self {
        let mut out = Self::identity();
        out.add_exponent(poly, vertex, exponent);
        out
    }

    pub fn minus_one() -> Self {
        Self {
            negative: true,
            exponents: BTreeMap::new(),
        }
    }

    pub fn sign(&self) -> i8 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub fn is_identity(&self) -> bool {
        !self.negative && self.exponents.is_empty()
    }

    pub fn exponents(&self) -> impl Iterator<Item = (&(usize, ExponentVector), &i64)> {
        self.exponents.iter()
    }

    pub fn exponent(&self, poly: usize, vertex: &ExponentVector) -> i64 {
        self.exponents
            .get(&(poly, vertex.clone()))
            .copied()
            .unwrap_or(0)
    }

    pub(crate) fn add_exponent(&mut self, poly: usize, vertex: ExponentVector, e: i64) {
        if e == 0 {
            return;
        }
        let slot = self.exponents.entry((poly, vertex.clone())).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.exponents.remove(&(poly, vertex));
        }
    }

    pub fn negate(&self) -> Self {
        Self {
            negative: !self.negative,
            exponents: self.exponents.clone(),
        }
    }

    /// Drops the sign.
    pub fn unsigned(&self) -> Self {
        Self {
            negative: false,
            exponents: self.exponents.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.negative ^= other.negative;
        for ((j, a), &e) in &other.exponents {
            out.add_exponent(*j, a.clone(), e);
        }
        out
    }

    pub fn pow(&self, k: i64) -> Self {
        Self {
            negative: self.negative && k.rem_euclid(2) == 1,
            exponents: self
                .exponents
                .iter()
                .filter(|_| k != 0)
                .map(|(key, &e)| (key.clone(), e * k))
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        self.pow(-1)
    }

    /// Whether any coefficient of polynomial `poly` occurs.
    pub fn involves(&self, poly: usize) -> bool {
        self.exponents.keys().any(|(j, _)| *j == poly)
    }

    /// The factors belonging to polynomial `poly`, without sign.
    pub fn part(&self, poly: usize) -> Self {
        Self {
            negative: false,
            exponents: self
                .exponents
                .iter()
                .filter(|((j, _), _)| *j == poly)
                .map(|(k, &e)| (k.clone(), e))
                .collect(),
        }
    }

    /// Total degree in the coefficients of polynomial `poly`.
    pub fn degree_in(&self, poly: usize) -> i64 {
        self.exponents
            .iter()
            .filter(|((j, _), _)| *j == poly)
            .map(|(_, &e)| e)
            .sum()
    }

    /// Substitutes the coefficients of the instance's polynomials.
    pub fn evaluate(&self, system: &SystemInstance) -> Result<Rational> {
        let mut value = if self.negative {
            -Rational::one()
        } else {
            Rational::one()
        };
        for ((j, a), &e) in &self.exponents {
            let f = system.polys().get(*j).ok_or(Error::IndexOutOfRange {
                index: *j,
                len: system.len(),
            })?;
            let c = f.coefficient(a);
            if c.is_zero() {
                if e < 0 {
                    return Err(Error::DegenerateVertexCoefficient {
                        index: *j,
                        vertex: a.clone(),
                    });
                }
                return Ok(Rational::zero());
            }
            value *= rational_pow(&c, e);
        }
        Ok(value)
    }
}

impl fmt::Display for VertexMonomialExpr {
    /// `-a[1;(0,1)]^2*a[2;(1,0)]^-1`, polynomial indices 1-based; `1` or `-1`
    /// for the empty product.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return write!(f, "{}", if self.negative { "-1" } else { "1" });
        }
        if self.negative {
            write!(f, "-")?;
        }
        let parts: Vec<String> = self
            .exponents
            .iter()
            .map(|((j, a), e)| {
                let coords: Vec<String> = a.coords().iter().map(i64::to_string).collect();
                let base = format!("a[{};({})]", j + 1, coords.join(","));
                if *e == 1 {
                    base
                } else {
                    format!("{base}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}
