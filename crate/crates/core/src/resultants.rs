//! Sylvester and product resultants in one variable, products over the
//! roots of `n` of `n+1` polynomials, the monomials and signs relating them,
//! and the Δ-resultant of 1-developed collections.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::combinatorics::{combinatorial_coefficients_ij, parshin_symbolic, VertexMonomialExpr};
use crate::error::{Error, Result};
use crate::lattice::{
    is_completely_developed, is_i_developed, minkowski_sum_all, mixed_volume, Covector,
    ExponentVector, LatticePolytope,
};
use crate::laurent::{rational_pow, LaurentPoly, Rational, SystemInstance};
use crate::linalg::det_rational;
use crate::residues::RootSums;

/// `M_1(P_1, P_2)`: `n` shifted rows of the coefficients of `P_1` (degree
/// bound `k`) over `k` shifted rows of those of `P_2` (degree bound `n`),
/// leading coefficients first. Coefficients are given in increasing degree.
pub fn sylvester_matrix(p1: &[Rational], p2: &[Rational]) -> Result<Vec<Vec<Rational>>> {
    if p1.is_empty() || p2.is_empty() {
        return Err(Error::EmptySupport);
    }
    let k = p1.len() - 1;
    let n = p2.len() - 1;
    let size = k + n;
    let mut rows = Vec::with_capacity(size);
    for (shift, count, coeffs) in [(0, n, p1), (0, k, p2)] {
        for r in 0..count {
            let mut row = vec![Rational::zero(); size];
            for (t, c) in coeffs.iter().rev().enumerate() {
                row[shift + r + t] = c.clone();
            }
            rows.push(row);
        }
    }
    Ok(rows)
}

/// `(R^[1], R^[2]) = (det M_1(P_1, P_2), det M_1(P_2, P_1))`.
pub fn sylvester_resultant(p1: &[Rational], p2: &[Rational]) -> Result<(Rational, Rational)> {
    if p1.iter().chain(p2).all(Zero::is_zero) {
        return Err(Error::BothZero);
    }
    Ok((
        det_rational(sylvester_matrix(p1, p2)?),
        det_rational(sylvester_matrix(p2, p1)?),
    ))
}

/// A segment `[lo, hi]` of exponents in one variable.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Segment {
    pub lo: i64,
    pub hi: i64,
}

impl Segment {
    pub fn new(lo: i64, hi: i64) -> Self {
        assert!(lo <= hi, "segment endpoints out of order");
        Self { lo, hi }
    }

    pub fn of(p: &LatticePolytope) -> Result<Self> {
        if p.ambient_dim() != 1 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: p.ambient_dim(),
            });
        }
        let v = p.vertices();
        Ok(Self::new(v[0][0], v[v.len() - 1][0]))
    }

    pub fn polytope(&self) -> LatticePolytope {
        LatticePolytope::from_points(&[
            ExponentVector::new(vec![self.lo]),
            ExponentVector::new(vec![self.hi]),
        ])
        .expect("two points in one dimension")
    }

    pub fn len(&self) -> i64 {
        self.hi - self.lo
    }

    pub fn is_empty(&self) -> bool {
        self.lo == self.hi
    }
}

fn univariate_coefficients(f: &LaurentPoly, s: Segment, index: usize) -> Result<Vec<Rational>> {
    if f.nvars() != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: f.nvars(),
        });
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.terms().any(|(e, _)| e[0] < s.lo || e[0] > s.hi) {
        return Err(Error::OutsideDeclaredPolytope { index });
    }
    Ok((s.lo..=s.hi)
        .map(|e| f.coefficient(&ExponentVector::new(vec![e])))
        .collect())
}

fn sign_pow(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `(R_Δ^[1], R_Δ^[2])` for `f_1` in `[k, n]` and `f_2` in `[l, m]`:
/// `(-1)^{n(m-l)} R^[1](P_1, P_2)` and `(-1)^{m(n-k)} R^[2](P_1, P_2)` with
/// `P_1 = z^{-k} f_1`, `P_2 = z^{-l} f_2`.
pub fn delta_resultant_1d(
    f1: &LaurentPoly,
    f2: &LaurentPoly,
    d1: Segment,
    d2: Segment,
) -> Result<(Rational, Rational)> {
    let p1 = univariate_coefficients(f1, d1, 0)?;
    let p2 = univariate_coefficients(f2, d2, 1)?;
    let (r1, r2) = sylvester_resultant(&p1, &p2)?;
    Ok((
        sign_pow(d1.hi * d2.len()) * r1,
        sign_pow(d2.hi * d1.len()) * r2,
    ))
}

fn extreme(f: &LaurentPoly, e: i64, index: usize) -> Result<Rational> {
    let vertex = ExponentVector::new(vec![e]);
    let c = f.coefficient(&vertex);
    if c.is_zero() {
        return Err(Error::DegenerateVertexCoefficient { index, vertex });
    }
    Ok(c)
}

/// Product of `f` over the roots of `g` in `C^*`, with multiplicity.
fn product_over_roots_1d(f: &LaurentPoly, g: &LaurentPoly, s: Segment) -> Result<Rational> {
    let system = SystemInstance::with_declared(vec![g.clone()], vec![s.polytope()])?;
    RootSums::new(&system)?.product(f)
}

/// `(R_{Π,Δ}^[1], R_{Π,Δ}^[2]) = (b_l^{-k} b_m^n Π^[1], a_k^{-l} a_n^m Π^[2])`,
/// where `Π^[1]` is the product of `f_1` over the roots of `f_2` and `Π^[2]`
/// that of `f_2` over the roots of `f_1`.
pub fn product_resultant_1d(
    f1: &LaurentPoly,
    f2: &LaurentPoly,
    d1: Segment,
    d2: Segment,
) -> Result<(Rational, Rational)> {
    univariate_coefficients(f1, d1, 0)?;
    univariate_coefficients(f2, d2, 1)?;
    let (ak, an) = (extreme(f1, d1.lo, 0)?, extreme(f1, d1.hi, 0)?);
    let (bl, bm) = (extreme(f2, d2.lo, 1)?, extreme(f2, d2.hi, 1)?);
    let pi1 = product_over_roots_1d(f1, f2, d2)?;
    let pi2 = product_over_roots_1d(f2, f1, d1)?;
    Ok((
        rational_pow(&bl, -d1.lo) * rational_pow(&bm, d1.hi) * pi1,
        rational_pow(&ak, -d2.lo) * rational_pow(&an, d2.hi) * pi2,
    ))
}

fn check_system(system: &SystemInstance) -> Result<usize> {
    let n = system.n();
    if system.len() != n + 1 {
        return Err(Error::WrongCount {
            expected: n + 1,
            found: system.len(),
        });
    }
    Ok(n)
}

fn check_index(i: usize, len: usize) -> Result<()> {
    if i >= len {
        return Err(Error::IndexOutOfRange { index: i, len });
    }
    Ok(())
}

fn require_i_developed(polytopes: &[LatticePolytope], i: usize) -> Result<()> {
    check_index(i, polytopes.len())?;
    if let Some(witness) = is_i_developed(polytopes, i)?.counterexample {
        return Err(Error::NotIDeveloped { index: i, witness });
    }
    Ok(())
}

fn require_completely_developed(polytopes: &[LatticePolytope]) -> Result<()> {
    let cert = is_completely_developed(polytopes)?;
    for (i, c) in cert.certificates.into_iter().enumerate() {
        if let Some(witness) = c.counterexample {
            return Err(Error::NotIDeveloped { index: i, witness });
        }
    }
    Ok(())
}

/// `Π_Δ^[i]`: the product of `f_i` over the common roots of the other `n`
/// polynomials (0-based `i`), or 1 when they have no roots.
pub fn pi_product(system: &SystemInstance, i: usize) -> Result<Rational> {
    check_system(system)?;
    require_i_developed(system.declared(), i)?;
    system.check_omega(i)?;
    RootSums::new(&system.without(i))?.product(&system.polys()[i])
}

/// Indices `i` for which the collection is `i`-developed.
pub fn developed_pivots(polytopes: &[LatticePolytope]) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for i in 0..polytopes.len() {
        if is_i_developed(polytopes, i)?.verdict {
            out.push(i);
        }
    }
    Ok(out)
}

/// Vertices `A_t` of the summands adding up to the vertex `A` of their sum.
fn vertex_split(
    polytopes: &[LatticePolytope],
    sum: &LatticePolytope,
    a: &ExponentVector,
) -> Result<Vec<ExponentVector>> {
    let idx = sum
        .vertices()
        .iter()
        .position(|v| v == a)
        .ok_or_else(|| Error::NotAVertex { point: a.clone() })?;
    let xi = sum.supporting_covector(idx)?;
    polytopes
        .iter()
        .map(|p| {
            let f = p.face(&xi);
            if f.is_point() {
                Ok(f.vertices()[0].clone())
            } else {
                Err(Error::Internal(format!(
                    "face of a summand at vertex {:?} is not a point",
                    a.coords()
                )))
            }
        })
        .collect()
}

/// `(M_{i,j}, s_{i,j})` with `Π^[i]/Π^[j] = s_{i,j}·M_{i,j}` (0-based
/// indices), assembled from the Parshin symbols at the vertices of `ΣΔ`.
pub fn monomial_m_ij(
    polytopes: &[LatticePolytope],
    i: usize,
    j: usize,
) -> Result<(VertexMonomialExpr, i8)> {
    if i > j && j < polytopes.len() {
        let (m, s) = monomial_m_ij(polytopes, j, i)?;
        return Ok((m.inverse(), s));
    }
    let table = combinatorial_coefficients_ij(polytopes, i, j)?;
    let n = polytopes.len() - 1;
    let sum = minkowski_sum_all(polytopes)?;
    let orientation = if (n + i + j).is_multiple_of(2) { 1 } else { -1 };
    let mut monomial = VertexMonomialExpr::identity();
    let mut sign = 1i8;
    for (a, k) in table.support() {
        let split = vertex_split(polytopes, &sum, a)?;
        let entries: Vec<(usize, ExponentVector)> = split.into_iter().enumerate().collect();
        let symbol = parshin_symbolic(&entries)?;
        monomial = monomial.mul(&symbol.unsigned().pow(orientation * k));
        if symbol.sign() < 0 && k.rem_euclid(2) == 1 {
            sign = -sign;
        }
    }
    Ok((monomial, sign))
}

/// Monomials `M_k` and signs `s_k` with `Π^[k] M_k s_k` independent of `k`,
/// normalized by `s_1 = +1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialsAndSigns {
    pub monomials: Vec<VertexMonomialExpr>,
    pub signs: Vec<i8>,
}

pub fn monomials_and_signs(polytopes: &[LatticePolytope]) -> Result<MonomialsAndSigns> {
    require_completely_developed(polytopes)?;
    let count = polytopes.len();
    let pairs: Vec<(VertexMonomialExpr, i8)> = (1..count)
        .map(|j| monomial_m_ij(polytopes, 0, j))
        .collect::<Result<_>>()?;
    let m = pairs
        .iter()
        .enumerate()
        .fold(VertexMonomialExpr::identity(), |acc, (idx, (mj, _))| {
            acc.mul(&mj.part(idx + 1))
        });
    let m_inv = m.inverse();
    let mut monomials = vec![m_inv.clone()];
    let mut signs = vec![1i8];
    for (mj, sj) in &pairs {
        monomials.push(mj.mul(&m_inv));
        signs.push(*sj);
    }
    for (k, mk) in monomials.iter().enumerate() {
        if mk.involves(k) {
            return Err(Error::Internal(format!(
                "M_{} involves coefficients of f_{}",
                k + 1,
                k + 1
            )));
        }
    }
    Ok(MonomialsAndSigns { monomials, signs })
}

/// One factor `a^{exponent}` of the facet formula: the coefficient of
/// `f_poly` at `vertex`, the only vertex face in direction `normal` that
/// contributes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FacetFactor {
    pub normal: Covector,
    pub poly: usize,
    pub vertex: ExponentVector,
    pub exponent: i64,
}

/// Factors `a_{j(v)}^{(n-1)! V(v) H_{Δ_i}(v)}` over the facet normals `v` of
/// `Σ_{j≠i} Δ_j`. Facets whose contribution vanishes are omitted.
pub fn facet_factors(polytopes: &[LatticePolytope], i: usize) -> Result<Vec<FacetFactor>> {
    let n = polytopes
        .first()
        .map(LatticePolytope::ambient_dim)
        .ok_or(Error::EmptySupport)?;
    if polytopes.len() != n + 1 {
        return Err(Error::WrongCount {
            expected: n + 1,
            found: polytopes.len(),
        });
    }
    require_i_developed(polytopes, i)?;
    let others: Vec<LatticePolytope> = polytopes
        .iter()
        .enumerate()
        .filter(|&(t, _)| t != i)
        .map(|(_, p)| p.clone())
        .collect();
    let tilde = minkowski_sum_all(&others)?;
    let mut out = Vec::new();
    for v in tilde.codim_one_normals() {
        let faces: Vec<LatticePolytope> = polytopes.iter().map(|p| p.face(&v)).collect();
        let height = BigInt::from(polytopes[i].support_value(&v));
        let candidates: Vec<usize> = (0..faces.len())
            .filter(|&t| t != i && faces[t].is_point())
            .collect();
        if candidates.is_empty() {
            return Err(Error::Internal(format!("facet {v} has no vertex term")));
        }
        let mut contributions = Vec::new();
        for &j in &candidates {
            let rest: Vec<LatticePolytope> = faces
                .iter()
                .enumerate()
                .filter(|&(t, _)| t != i && t != j)
                .map(|(_, f)| f.clone())
                .collect();
            let e = mixed_volume(&rest, n - 1)? * &height;
            if !e.is_zero() {
                contributions.push((j, e));
            }
        }
        match contributions.len() {
            0 => {}
            1 => {
                let (j, e) = contributions.remove(0);
                out.push(FacetFactor {
                    normal: v,
                    poly: j,
                    vertex: faces[j].vertices()[0].clone(),
                    exponent: e
                        .to_i64()
                        .ok_or_else(|| Error::Internal(format!("exponent {e} out of range")))?,
                });
            }
            _ => return Err(Error::AmbiguousEssentialFacet { normal: v }),
        }
    }
    Ok(out)
}

/// `M_i` from the facet formula.
pub fn monomial_m_i_facets(polytopes: &[LatticePolytope], i: usize) -> Result<VertexMonomialExpr> {
    Ok(facet_factors(polytopes, i)?
        .into_iter()
        .fold(VertexMonomialExpr::identity(), |acc, f| {
            acc.mul(&VertexMonomialExpr::factor(f.poly, f.vertex, f.exponent))
        }))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SignStatus {
    /// The value is `sign · magnitude`.
    Exact(i8),
    UpToSign,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Provenance {
    Sylvester,
    ProductFormula,
    Poisson { pivot: usize },
    SignedProduct,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Sylvester => write!(f, "sylvester"),
            Provenance::ProductFormula => write!(f, "product-formula"),
            Provenance::Poisson { pivot } => write!(f, "poisson(pivot {})", pivot + 1),
            Provenance::SignedProduct => write!(f, "signed-product"),
        }
    }
}

/// A resultant value, possibly known only up to sign.
#[derive(Clone, Debug)]
pub struct SignedResultantValue {
    pub magnitude: Rational,
    pub sign: SignStatus,
    pub provenance: Provenance,
}

impl SignedResultantValue {
    /// The signed value when the sign is known.
    pub fn value(&self) -> Option<Rational> {
        match self.sign {
            SignStatus::Exact(s) if s < 0 => Some(-self.magnitude.clone()),
            SignStatus::Exact(_) => Some(self.magnitude.clone()),
            SignStatus::UpToSign => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.magnitude.is_zero()
    }
}

impl PartialEq for SignedResultantValue {
    /// Values known up to sign only compare their absolute values.
    fn eq(&self, other: &Self) -> bool {
        match (self.value(), other.value()) {
            (Some(a), Some(b)) => a == b,
            _ => self.magnitude.abs() == other.magnitude.abs(),
        }
    }
}

impl Eq for SignedResultantValue {}

/// `R_Δ = ±Π^[i] Π_Γ a_{j(v_Γ)}^{exponent}` for an `i`-developed collection.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PoissonDecomposition {
    pub pivot: usize,
    pub pi_term: Rational,
    pub facet_factors: Vec<(FacetFactor, Rational)>,
}

impl PoissonDecomposition {
    pub fn value(&self) -> Rational {
        self.facet_factors
            .iter()
            .fold(self.pi_term.clone(), |acc, (f, a)| {
                acc * rational_pow(a, f.exponent)
            })
    }
}

/// The Δ-resultant of an instance whose collection is `pivot`-developed,
/// up to sign, through the Poisson formula.
pub fn delta_resultant_1developed(
    system: &SystemInstance,
    pivot: usize,
) -> Result<(SignedResultantValue, PoissonDecomposition)> {
    check_system(system)?;
    let pi_term = pi_product(system, pivot)?;
    let factors = facet_factors(system.declared(), pivot)?
        .into_iter()
        .map(|f| {
            let a = system.vertex_coefficient(f.poly, &f.vertex)?;
            Ok((f, a))
        })
        .collect::<Result<Vec<_>>>()?;
    let decomposition = PoissonDecomposition {
        pivot,
        pi_term,
        facet_factors: factors,
    };
    let value = SignedResultantValue {
        magnitude: decomposition.value(),
        sign: SignStatus::UpToSign,
        provenance: Provenance::Poisson { pivot },
    };
    Ok((value, decomposition))
}

/// The signed product identities on one instance.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PoissonCheckReport {
    pub pi_products: Vec<Rational>,
    pub monomials: Vec<VertexMonomialExpr>,
    pub signs: Vec<i8>,
    /// `Π^[k] M_k s_k` for every `k`.
    pub quantities: Vec<Rational>,
    /// Whether the facet formula reproduces every `M_k`.
    pub facet_formula_agrees: bool,
    pub consistent: bool,
    pub resultant: SignedResultantValue,
}

pub fn signed_poisson_check(system: &SystemInstance) -> Result<PoissonCheckReport> {
    check_system(system)?;
    let polytopes = system.declared();
    let ms = monomials_and_signs(polytopes)?;
    for j in 0..system.len() {
        system.check_vertex_coefficients(j)?;
    }
    let mut pi_products = Vec::new();
    let mut quantities = Vec::new();
    let mut facet_formula_agrees = true;
    for (k, (m, s)) in ms.monomials.iter().zip(&ms.signs).enumerate() {
        let pi = pi_product(system, k)?;
        let q = &pi * m.evaluate(system)? * Rational::from_integer(BigInt::from(*s));
        facet_formula_agrees &= monomial_m_i_facets(polytopes, k)? == *m;
        pi_products.push(pi);
        quantities.push(q);
    }
    let consistent = quantities.windows(2).all(|w| w[0] == w[1]);
    let resultant = SignedResultantValue {
        magnitude: &pi_products[0] * ms.monomials[0].evaluate(system)?,
        sign: SignStatus::Exact(ms.signs[0]),
        provenance: Provenance::SignedProduct,
    };
    Ok(PoissonCheckReport {
        pi_products,
        monomials: ms.monomials,
        signs: ms.signs,
        quantities,
        facet_formula_agrees,
        consistent,
        resultant,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::integer;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ev(c: &[i64]) -> ExponentVector {
        ExponentVector::new(c.to_vec())
    }

    fn p(n: usize, t: &[(&[i64], i64)]) -> LaurentPoly {
        LaurentPoly::from_int_terms(n, t).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| integer(x)).collect()
    }

    fn nonzero(rng: &mut ChaCha8Rng) -> i64 {
        loop {
            let c = rng.gen_range(-5..=5);
            if c != 0 {
                return c;
            }
        }
    }

    #[test]
    fn sylvester_small_cases() {
        let (r1, r2) = sylvester_resultant(&ints(&[-1, 1]), &ints(&[-2, 1])).unwrap();
        assert_eq!(r1, integer(-1));
        assert_eq!(r2, integer(1));
        let (r1, _) = sylvester_resultant(&ints(&[-1, 1]), &ints(&[-1, 0, 1])).unwrap();
        assert_eq!(r1, integer(0));
        assert!(matches!(
            sylvester_resultant(&ints(&[0]), &ints(&[0, 0])),
            Err(Error::BothZero)
        ));
        // Degree bounds k = n = 0: the empty determinant.
        assert_eq!(
            sylvester_resultant(&ints(&[3]), &ints(&[5])).unwrap(),
            (integer(1), integer(1))
        );
    }

    #[test]
    fn sylvester_swap_sign_and_leading_monomial() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let k = rng.gen_range(0..5);
            let n = rng.gen_range(0..5);
            let a: Vec<Rational> = (0..=k).map(|_| integer(rng.gen_range(-4..=4))).collect();
            let b: Vec<Rational> = (0..=n).map(|_| integer(rng.gen_range(-4..=4))).collect();
            if a.iter().chain(&b).all(Zero::is_zero) {
                continue;
            }
            let (r1, r2) = sylvester_resultant(&a, &b).unwrap();
            assert_eq!(r1, sign_pow((k * n) as i64) * r2);
        }
        // With every other coefficient zero, R^[1] = a_k^n b_0^k.
        let a = ints(&[0, 0, 3]);
        let b = ints(&[2, 0, 0, 0]);
        assert_eq!(sylvester_resultant(&a, &b).unwrap().0, integer(27 * 4));
    }

    #[test]
    fn one_dimensional_pair() {
        let f1 = p(1, &[(&[1], 1), (&[0], -1)]);
        let f2 = p(1, &[(&[1], 1), (&[0], -2)]);
        let s = Segment::new(0, 1);
        assert_eq!(
            delta_resultant_1d(&f1, &f2, s, s).unwrap(),
            (integer(1), integer(-1))
        );
        assert_eq!(
            product_resultant_1d(&f1, &f2, s, s).unwrap(),
            (integer(1), integer(-1))
        );
        let sys = SystemInstance::new(vec![f1, f2]).unwrap();
        assert_eq!(pi_product(&sys, 0).unwrap(), integer(1));
        assert_eq!(pi_product(&sys, 1).unwrap(), integer(-1));
        let (value, dec) = delta_resultant_1developed(&sys, 0).unwrap();
        assert_eq!(value.magnitude.abs(), integer(1));
        assert_eq!(value.sign, SignStatus::UpToSign);
        assert_eq!(dec.pi_term, integer(1));
    }

    #[test]
    fn laurent_pairs_match_sylvester() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            let (k, l) = (rng.gen_range(-3..=3), rng.gen_range(-3..=3));
            let (n, m) = (k + rng.gen_range(0..=3), l + rng.gen_range(0..=3));
            let mk = |lo: i64, hi: i64, rng: &mut ChaCha8Rng| {
                let terms: Vec<(ExponentVector, Rational)> = (lo..=hi)
                    .map(|e| {
                        let c = if e == lo || e == hi {
                            nonzero(rng)
                        } else {
                            rng.gen_range(-5..=5)
                        };
                        (ev(&[e]), integer(c))
                    })
                    .collect();
                LaurentPoly::from_terms(1, terms).unwrap()
            };
            let f1 = mk(k, n, &mut rng);
            let f2 = mk(l, m, &mut rng);
            let (d1, d2) = (Segment::new(k, n), Segment::new(l, m));
            let (s1, s2) = delta_resultant_1d(&f1, &f2, d1, d2).unwrap();
            let (p1, p2) = product_resultant_1d(&f1, &f2, d1, d2).unwrap();
            assert_eq!(s1, p1, "f1 = {f1}, f2 = {f2}");
            assert_eq!(s2, p2, "f1 = {f1}, f2 = {f2}");
            assert_eq!(p1, sign_pow(k * l + n * m) * p2);
        }
    }

    #[test]
    fn monomial_f1_in_one_variable() {
        // f1 = c z^k on [k, k]: R = ±c^{m-l}.
        let f1 = p(1, &[(&[2], 3)]);
        let f2 = p(1, &[(&[0], 1), (&[1], 4), (&[3], -2)]);
        let sys = SystemInstance::new(vec![f1, f2]).unwrap();
        let (value, _) = delta_resultant_1developed(&sys, 0).unwrap();
        assert_eq!(value.magnitude.abs(), integer(27));
    }

    #[test]
    fn m_12_in_one_variable() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let (k, l) = (rng.gen_range(-2..=2), rng.gen_range(-2..=2));
            let (n, m) = (k + rng.gen_range(1..=3), l + rng.gen_range(1..=3));
            let (ak, an, bl, bm) = (
                nonzero(&mut rng),
                nonzero(&mut rng),
                nonzero(&mut rng),
                nonzero(&mut rng),
            );
            let f1 = p(1, &[(&[k], ak), (&[n], an)]);
            let f2 = p(1, &[(&[l], bl), (&[m], bm)]);
            let sys = SystemInstance::new(vec![f1, f2]).unwrap();
            let (mono, s) = monomial_m_ij(sys.declared(), 0, 1).unwrap();
            let got = mono.evaluate(&sys).unwrap() * integer(s as i64);
            let expected = sign_pow(k * l + n * m)
                * rational_pow(&integer(ak), -l)
                * rational_pow(&integer(bl), k)
                * rational_pow(&integer(an), m)
                * rational_pow(&integer(bm), -n);
            assert_eq!(got, expected);
            assert_eq!(
                got,
                pi_product(&sys, 0).unwrap() / pi_product(&sys, 1).unwrap()
            );
            let (inv, s2) = monomial_m_ij(sys.declared(), 1, 0).unwrap();
            assert_eq!(inv, mono.inverse());
            assert_eq!(s2, s);
            // Facet formula for i = 1: b_m^n b_l^{-k}.
            let facets = monomial_m_i_facets(sys.declared(), 0).unwrap();
            let ms = monomials_and_signs(sys.declared()).unwrap();
            assert_eq!(facets, ms.monomials[0]);
            assert_eq!(
                facets.evaluate(&sys).unwrap(),
                rational_pow(&integer(bm), n) * rational_pow(&integer(bl), -k)
            );
        }
    }

    #[test]
    fn same_index_rejected() {
        let sys = SystemInstance::new(vec![
            p(1, &[(&[1], 1), (&[0], 1)]),
            p(1, &[(&[1], 1), (&[0], 2)]),
        ])
        .unwrap();
        assert!(matches!(
            monomial_m_ij(sys.declared(), 1, 1),
            Err(Error::SameIndex { index: 1 })
        ));
    }

    fn axis_triple(c: &[i64; 6]) -> SystemInstance {
        SystemInstance::new(vec![
            p(2, &[(&[0, 0], c[0]), (&[1, 0], c[1])]),
            p(2, &[(&[0, 0], c[2]), (&[0, 1], c[3])]),
            p(2, &[(&[0, 0], c[4]), (&[1, 1], c[5])]),
        ])
        .unwrap()
    }

    #[test]
    fn segment_triple_identities() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let c: [i64; 6] = std::array::from_fn(|_| nonzero(&mut rng));
            let sys = axis_triple(&c);
            let ds = sys.declared();
            for i in 0..3 {
                for j in 0..3 {
                    if i == j {
                        continue;
                    }
                    let (m, s) = monomial_m_ij(ds, i, j).unwrap();
                    let ratio = pi_product(&sys, i).unwrap() / pi_product(&sys, j).unwrap();
                    assert_eq!(
                        m.evaluate(&sys).unwrap() * integer(s as i64),
                        ratio,
                        "pair ({i},{j})"
                    );
                }
            }
            let report = signed_poisson_check(&sys).unwrap();
            assert!(report.consistent, "{report:?}");
            assert!(report.facet_formula_agrees, "{report:?}");
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        let (_, sij) = monomial_m_ij(ds, i, j).unwrap();
                        assert_eq!(report.signs[i] * report.signs[j], sij);
                    }
                }
            }
            let (value, _) = delta_resultant_1developed(&sys, 0).unwrap();
            assert_eq!(value, report.resultant);
        }
    }

    #[test]
    fn planted_root_gives_zero() {
        // x + y - 3, xy - 2, x - 1 share (1, 2).
        let sys = SystemInstance::new(vec![
            p(2, &[(&[1, 0], 1), (&[0, 0], -1)]),
            p(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], -3)]),
            p(2, &[(&[1, 1], 1), (&[0, 0], -2)]),
        ])
        .unwrap();
        let pivots = developed_pivots(sys.declared()).unwrap();
        assert!(pivots.contains(&0));
        let (value, _) = delta_resultant_1developed(&sys, 0).unwrap();
        assert!(value.is_zero());
        let moved = sys
            .replace(0, p(2, &[(&[1, 0], 1), (&[0, 0], -4)]))
            .unwrap();
        let (value, dec) = delta_resultant_1developed(&moved, 0).unwrap();
        // (1 - 4)(2 - 4) over the roots (1, 2), (2, 1).
        assert_eq!(dec.pi_term, integer(6));
        assert!(!value.is_zero());
    }

    #[test]
    fn not_developed_pivot_rejected() {
        let t = p(2, &[(&[0, 0], 1), (&[1, 0], 1), (&[0, 1], 1)]);
        let sys =
            SystemInstance::new(vec![p(2, &[(&[1, 0], 1), (&[0, 0], 1)]), t.clone(), t]).unwrap();
        assert!(matches!(
            delta_resultant_1developed(&sys, 0),
            Err(Error::NotIDeveloped { index: 0, .. })
        ));
    }

    #[test]
    fn point_pivot_has_empty_facet_monomial() {
        let sys = SystemInstance::new(vec![
            p(2, &[(&[0, 0], 7)]),
            p(2, &[(&[0, 0], 1), (&[1, 0], 2), (&[0, 1], 3)]),
            p(2, &[(&[0, 0], 1), (&[1, 1], 2)]),
        ])
        .unwrap();
        assert!(monomial_m_i_facets(sys.declared(), 0)
            .unwrap()
            .is_identity());
        let mv = mixed_volume(&sys.declared()[1..], 2)
            .unwrap()
            .to_i64()
            .unwrap();
        let (value, _) = delta_resultant_1developed(&sys, 0).unwrap();
        assert_eq!(value.magnitude.abs(), rational_pow(&integer(7), mv));
    }
}
