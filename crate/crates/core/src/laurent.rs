//! Exact Laurent polynomials over the rationals, and systems of them with
//! declared Newton polytopes.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::{Covector, ExponentVector, LatticePolytope};

pub type Rational = num_rational::BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(x: i64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

/// `x^k` for any integer `k`; `x` must be nonzero when `k < 0`.
pub fn rational_pow(x: &Rational, k: i64) -> Rational {
    let e = u32::try_from(k.unsigned_abs()).expect("exponent fits in 32 bits");
    let p = num_traits::pow(x.clone(), e as usize);
    if k < 0 {
        p.recip()
    } else {
        p
    }
}

/// `p/q` with `q > 0`, the only textual form used for rationals.
pub fn format_rational(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (
            n.trim().parse::<BigInt>().ok()?,
            d.trim().parse::<BigInt>().ok()?,
        ),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

/// A Laurent polynomial in `n` variables with rational coefficients.
///
/// Terms live in a map ordered lexicographically by exponent, with no zero
/// coefficients stored, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly {
    n: usize,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl LaurentPoly {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::monomial(c, ExponentVector::zero(n))
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    pub fn monomial(c: Rational, e: ExponentVector) -> Self {
        let mut terms = BTreeMap::new();
        let n = e.dim();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { n, terms }
    }

    /// The coordinate function `z_{i+1}`.
    pub fn variable(n: usize, i: usize) -> Self {
        Self::monomial(Rational::one(), ExponentVector::unit(n, i))
    }

    /// Sums repeated exponents and drops zero coefficients.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, Rational)>,
    {
        let mut out = Self::zero(n);
        for (e, c) in terms {
            if e.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: e.dim(),
                });
            }
            out.add_term(e, c);
        }
        Ok(out)
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_int_terms(n: usize, terms: &[(&[i64], i64)]) -> Result<Self> {
        Self::from_terms(
            n,
            terms
                .iter()
                .map(|(e, c)| (ExponentVector::new(e.to_vec()), integer(*c))),
        )
    }

    fn add_term(&mut self, e: ExponentVector, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &ExponentVector) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn support(&self) -> Vec<ExponentVector> {
        self.terms.keys().cloned().collect()
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = Self::zero(self.n);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.add(b), x * y);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Multiplication by the monomial `z^e`.
    pub fn monomial_mul(&self, e: &ExponentVector) -> Result<Self> {
        if e.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: e.dim(),
            });
        }
        Ok(Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.add(e), x.clone()))
                .collect(),
        })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.n);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        out
    }

    pub fn newton_polytope(&self) -> Result<LatticePolytope> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        LatticePolytope::from_points(&self.support())
    }

    /// Coefficient at a vertex of the Newton polytope.
    pub fn vertex_coefficient(&self, a: &ExponentVector) -> Result<Rational> {
        let np = self.newton_polytope()?;
        if !np.vertices().contains(a) {
            return Err(Error::NotAVertex { point: a.clone() });
        }
        Ok(self.coefficient(a))
    }

    /// The terms whose exponents maximize `<v, ·>`.
    pub fn face_restriction(&self, v: &Covector) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if v.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: v.dim(),
            });
        }
        let h = self.terms.keys().map(|e| v.pair(e)).max().unwrap();
        Ok(Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| v.pair(e) == h)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        })
    }

    /// `∂f/∂z_{j+1}`.
    pub fn partial_derivative(&self, j: usize) -> Result<Self> {
        if j >= self.n {
            return Err(Error::IndexOutOfRange {
                index: j,
                len: self.n,
            });
        }
        let step = ExponentVector::unit(self.n, j);
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            if e[j] != 0 {
                out.add_term(e.sub(&step), c * integer(e[j]));
            }
        }
        Ok(out)
    }

    /// Exact value at a point of `Q^n`; `None` if a negative power meets a zero coordinate.
    pub fn eval(&self, z: &[Rational]) -> Option<Rational> {
        assert_eq!(z.len(), self.n, "evaluation point has the wrong dimension");
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (zi, &k) in z.iter().zip(e.coords()) {
                if k < 0 && zi.is_zero() {
                    return None;
                }
                term *= rational_pow(zi, k);
            }
            total += term;
        }
        Some(total)
    }

    pub fn eval_complex(&self, z: &[Complex64]) -> Complex64 {
        assert_eq!(z.len(), self.n, "evaluation point has the wrong dimension");
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut term = Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
                for (zi, &k) in z.iter().zip(e.coords()) {
                    term *= zi.powi(k as i32);
                }
                term
            })
            .sum()
    }

    /// Largest absolute numerator or denominator, a rough size measure.
    pub fn height(&self) -> BigInt {
        self.terms
            .values()
            .flat_map(|c| [c.numer().abs(), c.denom().clone()])
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

/// `det(∂f_i/∂z_j)` for `n` polynomials in `n` variables.
pub fn jacobian_det(fs: &[LaurentPoly]) -> Result<LaurentPoly> {
    let n = fs.len();
    if let Some(f) = fs.iter().find(|f| f.nvars() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: f.nvars(),
        });
    }
    let m: Vec<Vec<LaurentPoly>> = fs
        .iter()
        .map(|f| {
            (0..n)
                .map(|j| f.partial_derivative(j))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    Ok(det_poly(&m, n))
}

fn det_poly(m: &[Vec<LaurentPoly>], nvars: usize) -> LaurentPoly {
    let size = m.len();
    if size == 0 {
        return LaurentPoly::one(nvars);
    }
    let mut total = LaurentPoly::zero(nvars);
    for c in 0..size {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<LaurentPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != c)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][c] * &det_poly(&minor, nvars);
        total = if c % 2 == 0 {
            &total + &term
        } else {
            &total - &term
        };
    }
    total
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", format_rational(c))?;
            for (i, &k) in e.coords().iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*z{}", i + 1)?,
                    _ => write!(f, "*z{}^{}", i + 1, k)?,
                }
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs)
            .expect("dimension mismatch in addition")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs)
            .expect("dimension mismatch in subtraction")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs)
            .expect("dimension mismatch in multiplication")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

/// An ordered tuple of polynomials together with the polytopes they are
/// declared to live in.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SystemInstance {
    n: usize,
    polys: Vec<LaurentPoly>,
    declared: Vec<LatticePolytope>,
}

impl SystemInstance {
    /// Uses the Newton polytopes as declared polytopes.
    pub fn new(polys: Vec<LaurentPoly>) -> Result<Self> {
        let declared = polys
            .iter()
            .map(LaurentPoly::newton_polytope)
            .collect::<Result<Vec<_>>>()?;
        Self::with_declared(polys, declared)
    }

    /// Every Newton polytope must lie inside its declared polytope. A zero
    /// polynomial is accepted here since it lies in every polytope.
    pub fn with_declared(polys: Vec<LaurentPoly>, declared: Vec<LatticePolytope>) -> Result<Self> {
        let n = polys.first().ok_or(Error::EmptySupport)?.nvars();
        if declared.len() != polys.len() {
            return Err(Error::WrongCount {
                expected: polys.len(),
                found: declared.len(),
            });
        }
        for (i, (f, d)) in polys.iter().zip(&declared).enumerate() {
            if f.nvars() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: f.nvars(),
                });
            }
            if d.ambient_dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: d.ambient_dim(),
                });
            }
            if !f.terms.keys().all(|e| d.contains(e)) {
                return Err(Error::OutsideDeclaredPolytope { index: i });
            }
        }
        Ok(Self { n, polys, declared })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn polys(&self) -> &[LaurentPoly] {
        &self.polys
    }

    pub fn declared(&self) -> &[LatticePolytope] {
        &self.declared
    }

    /// Coefficient of `f_j` at a vertex of its declared polytope; may be zero.
    pub fn vertex_coefficient(&self, j: usize, a: &ExponentVector) -> Result<Rational> {
        if !self.declared[j].vertices().contains(a) {
            return Err(Error::NotAVertex { point: a.clone() });
        }
        Ok(self.polys[j].coefficient(a))
    }

    /// Fails unless `f_j` is nonzero at every vertex of its declared polytope.
    pub fn check_vertex_coefficients(&self, j: usize) -> Result<()> {
        for a in self.declared[j].vertices() {
            if self.polys[j].coefficient(a).is_zero() {
                return Err(Error::DegenerateVertexCoefficient {
                    index: j,
                    vertex: a.clone(),
                });
            }
        }
        Ok(())
    }

    /// Membership in the open set where every `f_j`, `j != i`, has its
    /// declared polytope as Newton polytope.
    pub fn check_omega(&self, i: usize) -> Result<()> {
        (0..self.len())
            .filter(|&j| j != i)
            .try_for_each(|j| self.check_vertex_coefficients(j))
    }

    pub fn in_omega(&self, i: usize) -> bool {
        self.check_omega(i).is_ok()
    }

    /// The subsystem with entry `i` removed, keeping declared polytopes.
    pub fn without(&self, i: usize) -> SystemInstance {
        fn keep<T: Clone>(v: &[T], i: usize) -> Vec<T> {
            v.iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, x)| x.clone())
                .collect()
        }
        SystemInstance {
            n: self.n,
            polys: keep(&self.polys, i),
            declared: keep(&self.declared, i),
        }
    }

    /// Replaces `f_j`, keeping its declared polytope.
    pub fn replace(&self, j: usize, f: LaurentPoly) -> Result<SystemInstance> {
        let mut polys = self.polys.clone();
        polys[j] = f;
        Self::with_declared(polys, self.declared.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ev(c: &[i64]) -> ExponentVector {
        ExponentVector::new(c.to_vec())
    }

    fn p(n: usize, t: &[(&[i64], i64)]) -> LaurentPoly {
        LaurentPoly::from_int_terms(n, t).unwrap()
    }

    #[test]
    fn product_of_linear_factors() {
        let f = p(1, &[(&[1], 1), (&[0], -1)]);
        let g = p(1, &[(&[1], 1), (&[0], -2)]);
        assert_eq!(&f * &g, p(1, &[(&[2], 1), (&[1], -3), (&[0], 2)]));
        assert!((&f * &LaurentPoly::zero(1)).is_zero());
    }

    #[test]
    fn canceling_terms_vanish() {
        let f = p(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let g = p(2, &[(&[1, 0], -1), (&[0, 1], 2)]);
        assert_eq!((&f + &g).len(), 1);
        assert!((&f - &f).is_zero());
    }

    #[test]
    fn dimension_mismatch() {
        let f = LaurentPoly::one(1);
        let g = LaurentPoly::one(2);
        assert!(matches!(
            f.checked_mul(&g),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn newton_polytopes() {
        let f = p(1, &[(&[2], 3), (&[4], 1), (&[6], -1)]);
        assert_eq!(
            f.newton_polytope().unwrap(),
            LatticePolytope::from_points(&[ev(&[2]), ev(&[6])]).unwrap()
        );
        assert!(p(2, &[(&[3, -1], 7)]).newton_polytope().unwrap().is_point());
        let t = p(2, &[(&[0, 0], 1), (&[1, 0], 1), (&[0, 1], 1)]);
        assert_eq!(t.newton_polytope().unwrap().vertices().len(), 3);
        assert!(matches!(
            LaurentPoly::zero(2).newton_polytope(),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn vertex_coefficients() {
        let f = p(2, &[(&[1, 0], 2), (&[0, 1], 3), (&[0, 0], 5)]);
        assert_eq!(f.vertex_coefficient(&ev(&[0, 0])).unwrap(), integer(5));
        assert_eq!(
            p(1, &[(&[1], 1), (&[0], -2)])
                .vertex_coefficient(&ev(&[1]))
                .unwrap(),
            integer(1)
        );
        let x1 = p(2, &[(&[1, 0], 1), (&[0, 0], 1)]);
        let y1 = p(2, &[(&[0, 1], 1), (&[0, 0], 1)]);
        assert_eq!(
            (&x1 * &y1).vertex_coefficient(&ev(&[1, 1])).unwrap(),
            integer(1)
        );
        let sq = p(2, &[(&[0, 0], 1), (&[2, 0], 1), (&[0, 2], 1), (&[1, 1], 4)]);
        assert!(matches!(
            sq.vertex_coefficient(&ev(&[1, 1])),
            Err(Error::NotAVertex { .. })
        ));
    }

    #[test]
    fn face_restrictions() {
        let t = p(2, &[(&[0, 0], 1), (&[1, 0], 1), (&[0, 1], 1)]);
        let v = Covector::new(vec![1, 0]);
        assert_eq!(t.face_restriction(&v).unwrap(), p(2, &[(&[1, 0], 1)]));
        assert_eq!(t.face_restriction(&Covector::zero(2)).unwrap(), t);
        let sq = p(2, &[(&[0, 0], 1), (&[1, 0], 1), (&[0, 1], 1), (&[1, 1], 1)]);
        assert_eq!(
            sq.face_restriction(&Covector::new(vec![1, 1])).unwrap(),
            p(2, &[(&[1, 1], 1)])
        );
    }

    #[test]
    fn jacobians() {
        let f = p(1, &[(&[2], 1), (&[1], -3), (&[0], 2)]);
        assert_eq!(jacobian_det(&[f]).unwrap(), p(1, &[(&[1], 2), (&[0], -3)]));
        let f1 = p(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], 1)]);
        let f2 = p(2, &[(&[1, 0], 1), (&[0, 1], 2), (&[0, 0], 3)]);
        assert_eq!(jacobian_det(&[f1, f2]).unwrap(), LaurentPoly::one(2));
        let g1 = p(2, &[(&[1, 1], 1), (&[0, 0], -1)]);
        let g2 = p(2, &[(&[1, 0], 1), (&[0, 0], -2)]);
        assert_eq!(jacobian_det(&[g1, g2]).unwrap(), p(2, &[(&[1, 0], -1)]));
    }

    #[test]
    fn laurent_derivative_lowers_exponent() {
        let f = p(1, &[(&[-2], 3)]);
        assert_eq!(f.partial_derivative(0).unwrap(), p(1, &[(&[-3], -6)]));
    }

    #[test]
    fn canonical_text() {
        let f = LaurentPoly::from_terms(
            2,
            [
                (ev(&[2, -1]), integer(-3)),
                (ev(&[0, 0]), rational(1, 2)),
                (ev(&[1, 0]), integer(1)),
            ],
        )
        .unwrap();
        assert_eq!(f.to_string(), "(1/2) + (1/1)*z1 + (-3/1)*z1^2*z2^-1");
        assert_eq!(LaurentPoly::zero(3).to_string(), "0");
    }

    #[test]
    fn rational_text_round_trip() {
        for s in ["3/4", "-7/1", "0/1"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(format_rational(&parse_rational("6/-4").unwrap()), "-3/2");
        assert!(parse_rational("1/0").is_none());
    }

    #[test]
    fn evaluation() {
        let f = p(2, &[(&[1, -1], 2), (&[0, 0], -1)]);
        assert_eq!(f.eval(&[integer(3), integer(2)]).unwrap(), integer(2));
        assert!(f.eval(&[integer(3), integer(0)]).is_none());
    }

    #[test]
    fn system_checks() {
        let f1 = p(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], -3)]);
        let f2 = p(2, &[(&[1, 1], 1), (&[0, 0], -2)]);
        let sys = SystemInstance::new(vec![f1.clone(), f2.clone()]).unwrap();
        assert!(sys.in_omega(0));
        let big = LatticePolytope::from_points(&[ev(&[0, 0]), ev(&[2, 0]), ev(&[0, 2])]).unwrap();
        let sys = SystemInstance::with_declared(
            vec![f1.clone(), f2.clone()],
            vec![big.clone(), f2.newton_polytope().unwrap()],
        )
        .unwrap();
        assert!(!sys.in_omega(1));
        assert!(sys.in_omega(0));
        assert!(matches!(
            SystemInstance::with_declared(vec![f2, f1], vec![f1_poly(), big]),
            Err(Error::OutsideDeclaredPolytope { index: 0 })
        ));
    }

    fn f1_poly() -> LatticePolytope {
        LatticePolytope::from_points(&[ev(&[0, 0]), ev(&[1, 0]), ev(&[0, 1])]).unwrap()
    }

    fn arb_poly(n: usize, positive: bool) -> impl Strategy<Value = LaurentPoly> {
        let coef = if positive { 1i64..=5 } else { -5i64..=5 };
        prop::collection::vec((prop::collection::vec(-2i64..=2, n), coef), 0..5).prop_map(
            move |ts| {
                LaurentPoly::from_terms(
                    n,
                    ts.into_iter()
                        .map(|(e, c)| (ExponentVector::new(e), integer(c))),
                )
                .unwrap()
            },
        )
    }

    proptest! {
        #[test]
        fn ring_axioms(f in arb_poly(2, false), g in arb_poly(2, false), h in arb_poly(2, false)) {
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        }

        #[test]
        fn newton_polytope_of_product(f in arb_poly(2, true), g in arb_poly(2, true)) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let lhs = (&f * &g).newton_polytope().unwrap();
            let rhs = crate::lattice::minkowski_sum(&f.newton_polytope().unwrap(), &g.newton_polytope().unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn face_restriction_is_multiplicative(f in arb_poly(2, true), g in arb_poly(2, true),
                                              v in prop::collection::vec(-3i64..=3, 2)) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let v = Covector::new(v);
            let lhs = (&f * &g).face_restriction(&v).unwrap();
            let rhs = &f.face_restriction(&v).unwrap() * &g.face_restriction(&v).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn leibniz(f in arb_poly(2, false), g in arb_poly(2, false), j in 0usize..2) {
            let lhs = (&f * &g).partial_derivative(j).unwrap();
            let rhs = &(&f * &g.partial_derivative(j).unwrap()) + &(&g * &f.partial_derivative(j).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
