//! Laurent series at vertices of a Newton polytope, the summation formula
//! over the roots of a developed system, and symmetric functions of the
//! values of a Laurent polynomial at those roots.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::combinatorics::{combinatorial_coefficients, CombCoeffTable};
use crate::error::{Error, Result};
use crate::lattice::{mixed_volume, Covector, ExponentVector};
use crate::laurent::{integer, jacobian_det, LaurentPoly, Rational, SystemInstance};

type Series = BTreeMap<ExponentVector, Rational>;

/// Coefficient of `z^target` in the Laurent series of `numerator /
/// denominator` expanded at `vertex` of the denominator's Newton polytope.
#[derive(Clone, Debug)]
pub struct VertexSeriesQuery {
    pub numerator: LaurentPoly,
    pub denominator: LaurentPoly,
    pub vertex: ExponentVector,
    pub target: ExponentVector,
}

/// The series `1/P̃ = Σ_k (1 - P̃)^k` at a vertex `A` of `Δ(P)`, where
/// `P̃ = P/(q_A z^A)`, kept down to a level of a covector strictly
/// supporting `Δ(P)` at `A`.
#[derive(Clone, Debug)]
pub struct VertexSeries {
    vertex: ExponentVector,
    leading: Rational,
    xi: Covector,
    step: Vec<(ExponentVector, Rational)>,
    level: i128,
    series: Series,
}

impl VertexSeries {
    pub fn new(denominator: &LaurentPoly, vertex: &ExponentVector) -> Result<Self> {
        let polytope = denominator.newton_polytope()?;
        let idx = polytope
            .vertices()
            .iter()
            .position(|v| v == vertex)
            .ok_or_else(|| Error::NotAVertex {
                point: vertex.clone(),
            })?;
        let leading = denominator.coefficient(vertex);
        if leading.is_zero() {
            return Err(Error::DegenerateVertexCoefficient {
                index: 0,
                vertex: vertex.clone(),
            });
        }
        let xi = polytope.supporting_covector(idx)?;
        let step = denominator
            .terms()
            .filter(|(e, _)| *e != vertex)
            .map(|(e, c)| (e.sub(vertex), -(c / &leading)))
            .collect();
        let mut out = Self {
            vertex: vertex.clone(),
            leading,
            xi,
            step,
            level: 0,
            series: Series::new(),
        };
        out.expand(0);
        Ok(out)
    }

    pub fn vertex(&self) -> &ExponentVector {
        &self.vertex
    }

    /// The covector `ξ` with `⟨ξ, b - A⟩ <= -1` for every other exponent `b`.
    pub fn covector(&self) -> &Covector {
        &self.xi
    }

    /// Lowest `ξ`-level currently kept.
    pub fn level(&self) -> i128 {
        self.level
    }

    /// Recomputes the expansion so that every monomial of level at least
    /// `level` is exact.
    pub fn expand(&mut self, level: i128) {
        let level = level.min(0);
        let mut series = Series::new();
        let zero = ExponentVector::zero(self.vertex.dim());
        series.insert(zero.clone(), Rational::one());
        let mut power = Series::new();
        power.insert(zero, Rational::one());
        loop {
            let mut next = Series::new();
            for (e, c) in &power {
                for (s, d) in &self.step {
                    let m = e.add(s);
                    if self.xi.pair(&m) < level {
                        continue;
                    }
                    *next.entry(m).or_insert_with(Rational::zero) += c * d;
                }
            }
            next.retain(|_, c| !c.is_zero());
            if next.is_empty() {
                break;
            }
            for (e, c) in &next {
                *series.entry(e.clone()).or_insert_with(Rational::zero) += c;
            }
            power = next;
        }
        series.retain(|_, c| !c.is_zero());
        self.series = series;
        self.level = level;
    }

    /// Level needed to read off `z^target` in `numerator` times the series.
    pub fn required_level(&self, numerator: &LaurentPoly, target: &ExponentVector) -> i128 {
        numerator
            .terms()
            .map(|(e, _)| self.xi.pair(&target.add(&self.vertex).sub(e)))
            .min()
            .unwrap_or(0)
            .min(0)
    }

    /// Coefficient of `z^target` in the series of `numerator / P`, extending
    /// the expansion when needed.
    pub fn coefficient(&mut self, numerator: &LaurentPoly, target: &ExponentVector) -> Rational {
        let needed = self.required_level(numerator, target);
        if needed < self.level {
            self.expand(needed);
        }
        // f/P = (f / (q_A z^A)) · 1/P̃.
        let shifted = target.add(&self.vertex);
        let mut total = Rational::zero();
        for (e, c) in numerator.terms() {
            if let Some(s) = self.series.get(&shifted.sub(e)) {
                total += c * s;
            }
        }
        total / &self.leading
    }

    /// Coefficient of `(z_1⋯z_n)^{-1}`.
    pub fn residue(&mut self, numerator: &LaurentPoly) -> Rational {
        let t = ExponentVector::new(vec![-1; self.vertex.dim()]);
        self.coefficient(numerator, &t)
    }
}

pub fn vertex_series_coefficient(q: &VertexSeriesQuery) -> Result<Rational> {
    check_vars(&q.numerator, q.denominator.nvars())?;
    if q.target.dim() != q.denominator.nvars() {
        return Err(Error::DimensionMismatch {
            expected: q.denominator.nvars(),
            found: q.target.dim(),
        });
    }
    let mut series = VertexSeries::new(&q.denominator, &q.vertex)?;
    Ok(series.coefficient(&q.numerator, &q.target))
}

/// Vertex residue: the coefficient of `(z_1⋯z_n)^{-1}` in the series of
/// `f/P` at `A`.
pub fn vertex_residue(f: &LaurentPoly, p: &LaurentPoly, a: &ExponentVector) -> Result<Rational> {
    vertex_series_coefficient(&VertexSeriesQuery {
        numerator: f.clone(),
        denominator: p.clone(),
        vertex: a.clone(),
        target: ExponentVector::new(vec![-1; p.nvars()]),
    })
}

fn check_vars(f: &LaurentPoly, n: usize) -> Result<()> {
    if f.nvars() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: f.nvars(),
        });
    }
    Ok(())
}

/// Power sums `p_1, …, p_K`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSumVector {
    values: Vec<Rational>,
}

impl PowerSumVector {
    pub fn new(values: Vec<Rational>) -> Self {
        Self { values }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// `p_k` for `1 <= k <= K`.
    pub fn get(&self, k: usize) -> Option<&Rational> {
        k.checked_sub(1).and_then(|i| self.values.get(i))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Sums over the roots of a developed system `f_1 = … = f_n = 0` in the
/// torus, with the per-vertex expansions of `P = f_1⋯f_n` cached.
#[derive(Clone, Debug)]
pub struct RootSums {
    system: SystemInstance,
    table: CombCoeffTable,
    jacobian: LaurentPoly,
    root_count: usize,
    series: Vec<(i64, VertexSeries)>,
}

impl RootSums {
    /// Computes the combinatorial coefficients of the declared polytopes.
    pub fn new(system: &SystemInstance) -> Result<Self> {
        check_square(system)?;
        let table = combinatorial_coefficients(system.declared())?;
        Self::with_table(system, table)
    }

    /// Uses a precomputed table of combinatorial coefficients for the
    /// declared polytopes.
    pub fn with_table(system: &SystemInstance, table: CombCoeffTable) -> Result<Self> {
        let n = check_square(system)?;
        for j in 0..n {
            system.check_vertex_coefficients(j)?;
        }
        let p = system
            .polys()
            .iter()
            .fold(LaurentPoly::one(n), |acc, f| &acc * f);
        let mut series = Vec::new();
        for (a, k) in table.support() {
            series.push((k, VertexSeries::new(&p, a)?));
        }
        let mv = mixed_volume(system.declared(), n)?;
        let root_count = mv
            .to_usize()
            .ok_or_else(|| Error::Internal(format!("root count {mv} does not fit in usize")))?;
        Ok(Self {
            jacobian: jacobian_det(system.polys())?,
            system: system.clone(),
            table,
            root_count,
            series,
        })
    }

    pub fn system(&self) -> &SystemInstance {
        &self.system
    }

    pub fn table(&self) -> &CombCoeffTable {
        &self.table
    }

    /// Number of roots counted with multiplicity, the mixed volume.
    pub fn root_count(&self) -> usize {
        self.root_count
    }

    /// `Σ_z f(z) μ(z) = (-1)^n Σ_A k_A res_A(f det J / P)`.
    pub fn sum(&mut self, f: &LaurentPoly) -> Result<Rational> {
        Ok(self.sums(std::slice::from_ref(f))?.remove(0))
    }

    fn sums(&mut self, fs: &[LaurentPoly]) -> Result<Vec<Rational>> {
        let n = self.system.n();
        for f in fs {
            check_vars(f, n)?;
        }
        let numerators: Vec<LaurentPoly> = fs.iter().map(|f| f * &self.jacobian).collect();
        let t = ExponentVector::new(vec![-1; n]);
        let mut totals = vec![Rational::zero(); fs.len()];
        for (k, series) in &mut self.series {
            let needed = numerators
                .iter()
                .map(|g| series.required_level(g, &t))
                .min()
                .unwrap_or(0);
            if needed < series.level() {
                series.expand(needed);
            }
            for (total, g) in totals.iter_mut().zip(&numerators) {
                *total += series.coefficient(g, &t) * integer(*k);
            }
        }
        if n % 2 == 1 {
            for total in &mut totals {
                *total = -total.clone();
            }
        }
        Ok(totals)
    }

    /// `p_k = Σ_z f(z)^k μ(z)` for `k = 1..=count`.
    pub fn power_sums(&mut self, f: &LaurentPoly, count: usize) -> Result<PowerSumVector> {
        check_vars(f, self.system.n())?;
        let mut powers = Vec::with_capacity(count);
        let mut current = LaurentPoly::one(self.system.n());
        for _ in 0..count {
            current = &current * f;
            powers.push(current.clone());
        }
        Ok(PowerSumVector::new(self.sums(&powers)?))
    }

    /// Monic polynomial in one variable whose roots are the values `f(z)`.
    pub fn characteristic_polynomial(&mut self, f: &LaurentPoly) -> Result<LaurentPoly> {
        let big_n = self.root_count;
        let e = newton_to_elementary(&self.power_sums(f, big_n)?, big_n)?;
        let mut terms = vec![(ExponentVector::new(vec![big_n as i64]), Rational::one())];
        for (k, ek) in e.iter().enumerate() {
            let k = k + 1;
            let c = if k % 2 == 1 { -ek.clone() } else { ek.clone() };
            terms.push((ExponentVector::new(vec![(big_n - k) as i64]), c));
        }
        LaurentPoly::from_terms(1, terms)
    }

    /// `Π_z f(z)^{μ(z)}`, which is 1 for an empty root set.
    pub fn product(&mut self, f: &LaurentPoly) -> Result<Rational> {
        let big_n = self.root_count;
        let e = newton_to_elementary(&self.power_sums(f, big_n)?, big_n)?;
        Ok(e.last().cloned().unwrap_or_else(Rational::one))
    }
}

fn check_square(system: &SystemInstance) -> Result<usize> {
    let n = system.n();
    if system.len() != n {
        return Err(Error::WrongCount {
            expected: n,
            found: system.len(),
        });
    }
    Ok(n)
}

pub fn sum_over_roots(
    f: &LaurentPoly,
    system: &SystemInstance,
    table: &CombCoeffTable,
) -> Result<Rational> {
    RootSums::with_table(system, table.clone())?.sum(f)
}

pub fn power_sums(
    f: &LaurentPoly,
    system: &SystemInstance,
    table: &CombCoeffTable,
    count: usize,
) -> Result<PowerSumVector> {
    RootSums::with_table(system, table.clone())?.power_sums(f, count)
}

/// Elementary symmetric functions `e_1..e_N` from power sums through
/// `k e_k = Σ_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i`.
pub fn newton_to_elementary(p: &PowerSumVector, big_n: usize) -> Result<Vec<Rational>> {
    if p.len() < big_n {
        return Err(Error::NotEnoughPowerSums {
            needed: big_n,
            available: p.len(),
        });
    }
    let mut e = vec![Rational::one()];
    for k in 1..=big_n {
        let mut acc = Rational::zero();
        for i in 1..=k {
            let term = &e[k - i] * &p.values()[i - 1];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        e.push(acc / Rational::from_integer(BigInt::from(k)));
    }
    e.remove(0);
    Ok(e)
}

pub fn values_characteristic_polynomial(
    f: &LaurentPoly,
    system: &SystemInstance,
    table: &CombCoeffTable,
) -> Result<LaurentPoly> {
    RootSums::with_table(system, table.clone())?.characteristic_polynomial(f)
}

pub fn product_over_roots(
    f: &LaurentPoly,
    system: &SystemInstance,
    table: &CombCoeffTable,
) -> Result<Rational> {
    RootSums::with_table(system, table.clone())?.product(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::rational;
    use proptest::prelude::*;

    fn ev(c: &[i64]) -> ExponentVector {
        ExponentVector::new(c.to_vec())
    }

    fn p(n: usize, t: &[(&[i64], i64)]) -> LaurentPoly {
        LaurentPoly::from_int_terms(n, t).unwrap()
    }

    fn sums(polys: Vec<LaurentPoly>) -> RootSums {
        RootSums::new(&SystemInstance::new(polys).unwrap()).unwrap()
    }

    #[test]
    fn geometric_series_at_both_ends() {
        let one_minus_z = p(1, &[(&[0], 1), (&[1], -1)]);
        let one = LaurentPoly::one(1);
        let q = |a: i64, t: i64| VertexSeriesQuery {
            numerator: one.clone(),
            denominator: one_minus_z.clone(),
            vertex: ev(&[a]),
            target: ev(&[t]),
        };
        assert_eq!(vertex_series_coefficient(&q(0, -1)).unwrap(), integer(0));
        assert_eq!(vertex_series_coefficient(&q(0, 5)).unwrap(), integer(1));
        assert_eq!(vertex_series_coefficient(&q(1, -1)).unwrap(), integer(-1));
        assert_eq!(vertex_series_coefficient(&q(1, -4)).unwrap(), integer(-1));
        assert_eq!(vertex_series_coefficient(&q(1, 0)).unwrap(), integer(0));
        assert_eq!(
            vertex_residue(&one, &one_minus_z, &ev(&[1])).unwrap(),
            integer(-1)
        );
    }

    #[test]
    fn quotient_by_itself() {
        let f = p(
            2,
            &[(&[0, 0], 3), (&[2, 1], -1), (&[0, 3], 2), (&[1, 1], 5)],
        );
        for a in f.newton_polytope().unwrap().vertices() {
            let q = VertexSeriesQuery {
                numerator: f.clone(),
                denominator: f.clone(),
                vertex: a.clone(),
                target: ev(&[0, 0]),
            };
            assert_eq!(vertex_series_coefficient(&q).unwrap(), integer(1));
            let q = VertexSeriesQuery {
                target: ev(&[1, -2]),
                ..q
            };
            assert_eq!(vertex_series_coefficient(&q).unwrap(), integer(0));
        }
    }

    #[test]
    fn non_vertex_rejected() {
        let f = p(1, &[(&[0], 1), (&[1], 1), (&[2], 1)]);
        assert!(matches!(
            vertex_residue(&LaurentPoly::one(1), &f, &ev(&[1])),
            Err(Error::NotAVertex { .. })
        ));
    }

    #[test]
    fn series_inverts_denominator() {
        // The truncated series times P̃ is 1 on every monomial it determines.
        let f = p(
            2,
            &[(&[0, 0], 2), (&[1, 0], -1), (&[0, 1], 3), (&[1, 2], 1)],
        );
        for a in f.newton_polytope().unwrap().vertices() {
            let mut s = VertexSeries::new(&f, a).unwrap();
            s.expand(-6);
            let lead = f.coefficient(a);
            let mut product = Series::new();
            for (e, c) in &s.series {
                for (b, d) in f.terms() {
                    let m = e.add(&b.sub(a));
                    *product.entry(m).or_insert_with(Rational::zero) += c * d / &lead;
                }
            }
            for (m, c) in product {
                if s.covector().pair(&m) >= -6 {
                    let expected = if m.is_zero() { integer(1) } else { integer(0) };
                    assert_eq!(c, expected, "vertex {a:?}, monomial {m:?}");
                }
            }
        }
    }

    #[test]
    fn univariate_sums() {
        let mut s = sums(vec![p(1, &[(&[0], 1), (&[1], -1)])]);
        assert_eq!(s.sum(&LaurentPoly::one(1)).unwrap(), integer(1));
        let quad = p(1, &[(&[2], 1), (&[1], -3), (&[0], 2)]);
        let z = LaurentPoly::variable(1, 0);
        let mut s = sums(vec![quad.clone()]);
        assert_eq!(s.sum(&z).unwrap(), integer(3));
        assert_eq!(
            s.power_sums(&z, 2).unwrap().values(),
            &[integer(3), integer(5)]
        );
        assert_eq!(s.characteristic_polynomial(&z).unwrap(), quad);
        assert_eq!(s.product(&z).unwrap(), integer(2));
        let zinv = p(1, &[(&[-1], 1)]);
        assert_eq!(s.sum(&zinv).unwrap(), rational(3, 2));
    }

    #[test]
    fn single_root_power_sums() {
        let c = 3;
        let mut s = sums(vec![p(1, &[(&[1], 1), (&[0], -c)])]);
        for m in [-2i64, 1, 3] {
            let f = p(1, &[(&[m], 1)]);
            let ps = s.power_sums(&f, 3).unwrap();
            for k in 1..=3 {
                assert_eq!(
                    ps.get(k).unwrap(),
                    &crate::laurent::rational_pow(&integer(c), k as i64 * m)
                );
            }
        }
        let mut s = sums(vec![p(1, &[(&[1], 1), (&[0], -2)])]);
        assert_eq!(
            s.product(&p(1, &[(&[1], 1), (&[0], -1)])).unwrap(),
            integer(1)
        );
        assert_eq!(
            s.product(&p(1, &[(&[1], 1), (&[0], -2)])).unwrap(),
            integer(0)
        );
    }

    #[test]
    fn newton_identities() {
        let e =
            newton_to_elementary(&PowerSumVector::new(vec![integer(3), integer(5)]), 2).unwrap();
        assert_eq!(e, vec![integer(3), integer(2)]);
        let e = newton_to_elementary(&PowerSumVector::new(vec![integer(4); 4]), 4).unwrap();
        assert_eq!(e, vec![integer(4), integer(6), integer(4), integer(1)]);
        assert!(newton_to_elementary(&PowerSumVector::new(vec![]), 0)
            .unwrap()
            .is_empty());
        assert!(matches!(
            newton_to_elementary(&PowerSumVector::new(vec![integer(1)]), 2),
            Err(Error::NotEnoughPowerSums {
                needed: 2,
                available: 1
            })
        ));
    }

    #[test]
    fn unit_square_counts_one_root() {
        let mut s = sums(vec![
            p(2, &[(&[1, 0], 1), (&[0, 0], -2)]),
            p(2, &[(&[0, 1], 1), (&[0, 0], -3)]),
        ]);
        assert_eq!(s.root_count(), 1);
        assert_eq!(s.sum(&LaurentPoly::one(2)).unwrap(), integer(1));
        let xy = p(2, &[(&[1, 1], 1)]);
        assert_eq!(s.sum(&xy).unwrap(), integer(6));
        assert_eq!(s.product(&p(2, &[(&[-1, 2], 1)])).unwrap(), rational(9, 2));
    }

    #[test]
    fn triangle_and_diagonal() {
        // x + y - 3 = xy - 2 = 0 at (1,2) and (2,1).
        let f1 = p(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], -3)]);
        let f2 = p(2, &[(&[1, 1], 1), (&[0, 0], -2)]);
        let mut s = sums(vec![f1, f2]);
        assert_eq!(s.root_count(), 2);
        assert_eq!(s.sum(&LaurentPoly::one(2)).unwrap(), integer(2));
        let x = LaurentPoly::variable(2, 0);
        assert_eq!(
            s.characteristic_polynomial(&x).unwrap(),
            p(1, &[(&[2], 1), (&[1], -3), (&[0], 2)])
        );
        let g = p(2, &[(&[1, -1], 1), (&[0, 2], 1)]);
        // g(1,2) = 1/2 + 4, g(2,1) = 2 + 1.
        assert_eq!(s.sum(&g).unwrap(), rational(15, 2));
        assert_eq!(s.product(&g).unwrap(), rational(27, 2));
    }

    #[test]
    fn empty_root_set() {
        let mut s = sums(vec![
            p(2, &[(&[1, 0], 2)]),
            p(2, &[(&[0, 1], 1), (&[0, 0], -3)]),
        ]);
        assert_eq!(s.root_count(), 0);
        assert_eq!(s.sum(&LaurentPoly::one(2)).unwrap(), integer(0));
        assert_eq!(s.product(&LaurentPoly::variable(2, 0)).unwrap(), integer(1));
    }

    #[test]
    fn degenerate_vertex_rejected() {
        let f = p(1, &[(&[0], 1), (&[2], 1)]);
        let tri = crate::lattice::LatticePolytope::from_points(&[ev(&[0]), ev(&[3])]).unwrap();
        let sys = SystemInstance::with_declared(vec![f], vec![tri]).unwrap();
        assert!(matches!(
            RootSums::new(&sys),
            Err(Error::DegenerateVertexCoefficient { index: 0, .. })
        ));
    }

    #[test]
    fn not_developed_rejected() {
        let t = p(2, &[(&[0, 0], 1), (&[1, 0], 2), (&[0, 1], 3)]);
        let u = p(2, &[(&[0, 0], 5), (&[1, 0], 1), (&[0, 1], -1)]);
        let sys = SystemInstance::new(vec![t, u]).unwrap();
        assert!(matches!(
            RootSums::new(&sys),
            Err(Error::NotDeveloped { .. })
        ));
    }

    fn roots_poly(roots: &[i64]) -> LaurentPoly {
        roots.iter().fold(LaurentPoly::one(1), |acc, &r| {
            &acc * &p(1, &[(&[1], 1), (&[0], -r)])
        })
    }

    proptest! {
        #[test]
        fn truncation_is_sound(
            coeffs in prop::collection::vec(-4i64..=4, 4),
            extra in 1i128..6,
            t in prop::collection::vec(-3i64..=2, 2),
        ) {
            let mut terms = vec![(vec![0i64, 0], 1i64), (vec![2, 0], 2), (vec![0, 2], -1)];
            for (e, c) in [[1i64, 0], [0, 1], [1, 1], [2, 1]].iter().zip(coeffs) {
                terms.push((e.to_vec(), c));
            }
            let t_refs: Vec<(&[i64], i64)> = terms.iter().map(|(e, c)| (e.as_slice(), *c)).collect();
            let den = p(2, &t_refs);
            let num = p(2, &[(&[0, 0], 1), (&[1, -1], 2)]);
            let target = ExponentVector::new(t);
            for a in den.newton_polytope().unwrap().vertices() {
                let mut s = VertexSeries::new(&den, a).unwrap();
                let base = s.coefficient(&num, &target);
                let deeper = s.level() - extra;
                s.expand(deeper);
                prop_assert_eq!(s.coefficient(&num, &target), base);
            }
        }

        #[test]
        fn newton_matches_explicit_multisets(xs in prop::collection::vec((-9i64..=9, 1i64..=4), 0..6)) {
            let xs: Vec<Rational> = xs.into_iter().map(|(a, b)| rational(a, b)).collect();
            let k = xs.len();
            let ps: Vec<Rational> = (1..=k)
                .map(|j| xs.iter().map(|x| crate::laurent::rational_pow(x, j as i64)).sum())
                .collect();
            let e = newton_to_elementary(&PowerSumVector::new(ps), k).unwrap();
            let mut expected = vec![Rational::one()];
            for x in &xs {
                let mut next = expected.clone();
                next.push(Rational::zero());
                for i in 1..next.len() {
                    next[i] = &expected.get(i).cloned().unwrap_or_else(Rational::zero) + x * &expected[i - 1];
                }
                expected = next;
            }
            prop_assert_eq!(e, expected[1..].to_vec());
        }

        #[test]
        fn vieta_for_one_variable(roots in prop::collection::vec(-5i64..=5, 1..5), lc in 1i64..4) {
            prop_assume!(roots.iter().all(|&r| r != 0));
            let f = roots_poly(&roots).scale(&integer(lc));
            let mut s = sums(vec![f.clone()]);
            let z = LaurentPoly::variable(1, 0);
            let expected: Rational = roots.iter().map(|&r| integer(r)).product();
            prop_assert_eq!(s.product(&z).unwrap(), expected);
            let m = roots.len() as i64;
            let sign = if m % 2 == 0 { integer(1) } else { integer(-1) };
            prop_assert_eq!(s.product(&z).unwrap(), sign * f.coefficient(&ev(&[0])) / f.coefficient(&ev(&[m])));
            let zinv = p(1, &[(&[-1], 1)]);
            let inv_sum: Rational = roots.iter().map(|&r| rational(1, r)).sum();
            prop_assert_eq!(s.sum(&zinv).unwrap(), inv_sum);
        }
    }
}
