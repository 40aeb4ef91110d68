//! Numeric root finding in one and two variables, used to cross-check the
//! exact pipeline on small instances.

use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::ExponentVector;
use crate::laurent::{integer, LaurentPoly, Rational};
use crate::resultants::sylvester_resultant;

/// Roots closer than this (relative to their size) are merged.
pub const CLUSTER_TOLERANCE: f64 = 1e-7;
/// Relative tolerance for comparing oracle values with exact ones.
pub const COMPARE_TOLERANCE: f64 = 1e-6;

/// Torus roots with multiplicities, and the largest residual `|f_j(root)|`.
#[derive(Clone, Debug, Default)]
pub struct NumericRootSet {
    pub roots: Vec<(Vec<Complex64>, usize)>,
    pub residual: f64,
}

impl NumericRootSet {
    /// Number of roots counted with multiplicity.
    pub fn count(&self) -> usize {
        self.roots.iter().map(|(_, m)| m).sum()
    }
}

/// Dense univariate polynomial over `Q`, coefficients in increasing degree,
/// no trailing zeros.
#[derive(Clone, PartialEq, Debug)]
struct UniPoly(Vec<Rational>);

impl UniPoly {
    fn new(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Self(c)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn derivative(&self) -> Self {
        Self::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * integer(k as i64))
                .collect(),
        )
    }

    fn sub(&self, other: &Self) -> Self {
        let len = self.0.len().max(other.0.len());
        let z = Rational::zero();
        Self::new(
            (0..len)
                .map(|k| self.0.get(k).unwrap_or(&z) - other.0.get(k).unwrap_or(&z))
                .collect(),
        )
    }

    fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let mut r = self.0.clone();
        let dd = d.degree();
        let lead = d.0[dd].clone();
        if r.len() <= dd {
            return (Self(Vec::new()), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &lead;
            if !c.is_zero() {
                for (t, dc) in d.0.iter().enumerate() {
                    r[k + t] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    fn monic(&self) -> Self {
        match self.0.last() {
            Some(l) => Self(self.0.iter().map(|c| c / l).collect()),
            None => self.clone(),
        }
    }

    fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Square-free factors `(g_i, i)` with `self = c·Π g_i^i` (Yun).
    fn square_free(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.degree() == 0 {
            return out;
        }
        let d = self.derivative();
        let a0 = Self::gcd(self, &d);
        let mut b = self.div_rem(&a0).0;
        let mut c = d.div_rem(&a0).0;
        let mut dd = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree() > 0 {
            let a = Self::gcd(&b, &dd);
            b = b.div_rem(&a).0;
            c = dd.div_rem(&a).0;
            dd = c.sub(&b.derivative());
            if a.degree() > 0 {
                out.push((a, i));
            }
            i += 1;
        }
        out
    }

    fn to_complex(&self) -> Vec<Complex64> {
        self.0.iter().map(to_complex).collect()
    }
}

fn to_complex(x: &Rational) -> Complex64 {
    Complex64::new(x.to_f64().unwrap_or(f64::NAN), 0.0)
}

fn horner(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// All roots of a polynomial with complex coefficients (increasing degree,
/// nonzero leading coefficient) by Aberth iteration and Newton polishing.
fn aberth(c: &[Complex64]) -> Vec<Complex64> {
    let d = c.len() - 1;
    if d == 0 {
        return Vec::new();
    }
    let lead = c[d];
    let monic: Vec<Complex64> = c.iter().map(|a| a / lead).collect();
    let radius = (0..d)
        .filter(|&k| monic[k].norm() > 0.0)
        .map(|k| monic[k].norm().powf(1.0 / (d - k) as f64))
        .fold(0.0f64, f64::max)
        .max(1e-3);
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| {
            Complex64::from_polar(
                radius,
                2.0 * std::f64::consts::PI * k as f64 / d as f64 + 0.4,
            )
        })
        .collect();
    for _ in 0..1000 {
        let mut largest = 0.0f64;
        for k in 0..d {
            let (p, dp) = horner(&monic, z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..d)
                .filter(|&j| j != k)
                .map(|j| Complex64::one() / (z[k] - z[j]))
                .sum();
            let w = ratio / (Complex64::one() - ratio * repulsion);
            if w.is_finite() {
                z[k] -= w;
                largest = largest.max(w.norm() / (1.0 + z[k].norm()));
            }
        }
        if largest < 1e-15 {
            break;
        }
    }
    for root in &mut z {
        for _ in 0..3 {
            let (p, dp) = horner(&monic, *root);
            if dp.norm() == 0.0 {
                break;
            }
            let step = p / dp;
            if !step.is_finite() {
                break;
            }
            *root -= step;
        }
    }
    z
}

/// Merges roots within the clustering tolerance, adding multiplicities.
fn cluster(roots: Vec<(Vec<Complex64>, usize)>) -> Vec<(Vec<Complex64>, usize)> {
    let mut out: Vec<(Vec<Complex64>, usize)> = Vec::new();
    for (r, m) in roots {
        let close = out.iter_mut().find(|(s, _)| {
            r.iter()
                .zip(s.iter())
                .all(|(a, b)| (a - b).norm() <= CLUSTER_TOLERANCE * (1.0 + a.norm()))
        });
        match close {
            Some((_, k)) => *k += m,
            None => out.push((r, m)),
        }
    }
    out
}

/// Nonzero complex roots of a Laurent polynomial in one variable.
pub fn univariate_roots(f: &LaurentPoly) -> Result<NumericRootSet> {
    if f.nvars() != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: f.nvars(),
        });
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let lo = f.terms().map(|(e, _)| e[0]).min().unwrap_or(0);
    let hi = f.terms().map(|(e, _)| e[0]).max().unwrap_or(0);
    let p = UniPoly::new(
        (lo..=hi)
            .map(|e| f.coefficient(&ExponentVector::new(vec![e])))
            .collect(),
    );
    let mut roots = Vec::new();
    for (g, mult) in p.square_free() {
        for z in aberth(&g.to_complex()) {
            roots.push((vec![z], mult));
        }
    }
    let roots = cluster(roots);
    let residual = roots
        .iter()
        .map(|(z, _)| f.eval_complex(z).norm())
        .fold(0.0, f64::max);
    Ok(NumericRootSet { roots, residual })
}

/// `f` times a monomial so that all exponents are nonnegative and some are
/// zero in every variable.
fn clear_denominators(f: &LaurentPoly) -> Result<LaurentPoly> {
    let n = f.nvars();
    let shift: Vec<i64> = (0..n)
        .map(|j| -f.terms().map(|(e, _)| e[j]).min().unwrap_or(0))
        .collect();
    f.monomial_mul(&ExponentVector::new(shift))
}

/// Coefficients of `f(x, y)` as a polynomial in `y`, each evaluated at `x`.
fn y_coefficients(f: &LaurentPoly, x: &Rational) -> Vec<Rational> {
    let deg = f.terms().map(|(e, _)| e[1]).max().unwrap_or(0) as usize;
    let mut out = vec![Rational::zero(); deg + 1];
    for (e, c) in f.terms() {
        out[e[1] as usize] += c * crate::laurent::rational_pow(x, e[0]);
    }
    out
}

/// Coefficients of `f(x, y)` in `y` at a complex `x`, with the size of the
/// largest sum of term magnitudes, for judging when they vanish.
fn y_coefficients_complex(f: &LaurentPoly, x: Complex64) -> (Vec<Complex64>, f64) {
    let deg = f.terms().map(|(e, _)| e[1]).max().unwrap_or(0) as usize;
    let mut out = vec![Complex64::zero(); deg + 1];
    let mut size = vec![0.0f64; deg + 1];
    for (e, c) in f.terms() {
        let term = to_complex(c) * x.powi(e[0] as i32);
        out[e[1] as usize] += term;
        size[e[1] as usize] += term.norm();
    }
    (out, size.into_iter().fold(0.0, f64::max))
}

/// `Res_y(F_1, F_2)` as a polynomial in `x`, by exact interpolation.
fn resultant_in_y(f1: &LaurentPoly, f2: &LaurentPoly) -> Result<UniPoly> {
    let degx = |f: &LaurentPoly| f.terms().map(|(e, _)| e[0]).max().unwrap_or(0);
    let degy = |f: &LaurentPoly| f.terms().map(|(e, _)| e[1]).max().unwrap_or(0);
    let bound = (degx(f1) * degy(f2) + degx(f2) * degy(f1)) as usize;
    let xs: Vec<Rational> = (1..=bound as i64 + 1).map(integer).collect();
    let mut ys = Vec::with_capacity(xs.len());
    for x in &xs {
        let a = y_coefficients(f1, x);
        let b = y_coefficients(f2, x);
        ys.push(if a.iter().chain(&b).all(Zero::is_zero) {
            Rational::zero()
        } else {
            sylvester_resultant(&a, &b)?.0
        });
    }
    Ok(interpolate(&xs, &ys))
}

/// Newton interpolation through `(x_k, y_k)`.
fn interpolate(xs: &[Rational], ys: &[Rational]) -> UniPoly {
    let m = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..m {
        for k in (level..m).rev() {
            dd[k] = (&dd[k] - &dd[k - 1]) / (&xs[k] - &xs[k - level]);
        }
    }
    let mut poly = vec![Rational::zero(); m];
    for k in (0..m).rev() {
        // poly = poly·(x - x_k) + dd[k]
        let mut next = vec![Rational::zero(); m];
        for t in 0..m {
            if poly[t].is_zero() {
                continue;
            }
            if t + 1 < m {
                next[t + 1] += &poly[t];
            }
            next[t] -= &poly[t] * &xs[k];
        }
        next[0] += &dd[k];
        poly = next;
    }
    UniPoly::new(poly)
}

fn newton_2d(f1: &LaurentPoly, f2: &LaurentPoly, z: &mut [Complex64; 2]) {
    let d = |f: &LaurentPoly, j: usize| f.partial_derivative(j).expect("variable index in range");
    let jac = [[d(f1, 0), d(f1, 1)], [d(f2, 0), d(f2, 1)]];
    for _ in 0..8 {
        let v = [f1.eval_complex(z), f2.eval_complex(z)];
        let m: Vec<Vec<Complex64>> = jac
            .iter()
            .map(|row| row.iter().map(|g| g.eval_complex(z)).collect())
            .collect();
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        if det.norm() == 0.0 {
            return;
        }
        let dx = (v[0] * m[1][1] - v[1] * m[0][1]) / det;
        let dy = (m[0][0] * v[1] - m[1][0] * v[0]) / det;
        if !(dx.is_finite() && dy.is_finite()) {
            return;
        }
        z[0] -= dx;
        z[1] -= dy;
        if dx.norm() + dy.norm() < 1e-16 * (1.0 + z[0].norm() + z[1].norm()) {
            return;
        }
    }
}

/// `f(u y^s, y)`, a torus automorphism that makes projections generic.
fn shear(f: &LaurentPoly, s: i64) -> LaurentPoly {
    let terms = f
        .terms()
        .map(|(e, c)| (ExponentVector::new(vec![e[0], e[1] + s * e[0]]), c.clone()));
    LaurentPoly::from_terms(2, terms).expect("two variables")
}

/// Common roots of two Laurent polynomials in `(C^*)^2`, by eliminating `y`
/// with a Sylvester resultant and substituting back.
///
/// When a root of the resultant lies under several roots, the system is
/// first sheared by `x = u y^s` for small `s`.
pub fn bivariate_roots(f1: &LaurentPoly, f2: &LaurentPoly) -> Result<NumericRootSet> {
    for f in [f1, f2] {
        if f.nvars() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: f.nvars(),
            });
        }
        if f.is_zero() {
            return Err(Error::PositiveDimensional);
        }
    }
    let mut last = None;
    for s in [0, 1, -1, 2, -2, 3, -3, 5] {
        match roots_by_projection(&shear(f1, s), &shear(f2, s)) {
            Ok(mut set) => {
                for (z, _) in &mut set.roots {
                    let y = z[1];
                    z[0] *= y.powi(s as i32);
                }
                let mut polished = Vec::new();
                for (z, m) in set.roots {
                    let mut w = [z[0], z[1]];
                    newton_2d(f1, f2, &mut w);
                    polished.push((w.to_vec(), m));
                }
                let roots = cluster(polished);
                let residual = roots
                    .iter()
                    .map(|(z, _)| f1.eval_complex(z).norm().max(f2.eval_complex(z).norm()))
                    .fold(0.0, f64::max);
                return Ok(NumericRootSet { roots, residual });
            }
            Err(e @ Error::Internal(_)) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one shear was tried"))
}

fn roots_by_projection(f1: &LaurentPoly, f2: &LaurentPoly) -> Result<NumericRootSet> {
    let g1 = clear_denominators(f1)?;
    let g2 = clear_denominators(f2)?;
    let r = resultant_in_y(&g1, &g2)?;
    if r.is_zero() {
        return Err(Error::PositiveDimensional);
    }
    let zeros = r.0.iter().take_while(|c| c.is_zero()).count();
    let r = UniPoly::new(r.0[zeros..].to_vec());
    let mut roots = Vec::new();
    for (factor, mult) in r.square_free() {
        for x in aberth(&factor.to_complex()) {
            let (a, size_a) = y_coefficients_complex(&g1, x);
            let (b, size_b) = y_coefficients_complex(&g2, x);
            let vanishes = |c: &[Complex64], size: f64| c.iter().all(|v| v.norm() <= 1e-9 * size);
            let (za, zb) = (vanishes(&a, size_a), vanishes(&b, size_b));
            if za && zb {
                return Err(Error::PositiveDimensional);
            }
            let (probe, other, so) = if za || (!zb && b.len() < a.len()) {
                (b, a, size_a)
            } else {
                (a, b, size_b)
            };
            let probe = trim_complex(probe);
            let mut found = Vec::new();
            for y in aberth(&probe) {
                if y.norm() < 1e-9 {
                    continue;
                }
                let (v, _) = horner(&other, y);
                let size: f64 = other
                    .iter()
                    .enumerate()
                    .map(|(k, c)| c.norm() * y.norm().powi(k as i32))
                    .sum();
                if v.norm() <= 1e-6 * size.max(so).max(1e-300) {
                    let mut z = [x, y];
                    newton_2d(f1, f2, &mut z);
                    found.push(z);
                }
            }
            if found.len() > 1 {
                return Err(Error::Internal(
                    "several roots over one projected point".into(),
                ));
            }
            for z in found {
                roots.push((z.to_vec(), mult));
            }
        }
    }
    Ok(NumericRootSet {
        roots,
        residual: 0.0,
    })
}

fn trim_complex(mut c: Vec<Complex64>) -> Vec<Complex64> {
    let scale = c.iter().map(|v| v.norm()).fold(0.0, f64::max);
    while c.len() > 1 && c.last().is_some_and(|v| v.norm() <= 1e-12 * scale) {
        c.pop();
    }
    c
}

/// `Σ f(z) μ(z)` over the roots.
pub fn numeric_sum(f: &LaurentPoly, roots: &NumericRootSet) -> Complex64 {
    roots
        .roots
        .iter()
        .map(|(z, m)| f.eval_complex(z) * *m as f64)
        .sum()
}

/// `Π f(z)^{μ(z)}` over the roots; 1 for an empty set.
pub fn numeric_product(f: &LaurentPoly, roots: &NumericRootSet) -> Complex64 {
    roots
        .roots
        .iter()
        .map(|(z, m)| f.eval_complex(z).powi(*m as i32))
        .product()
}

/// Whether a numeric value matches an exact one to relative tolerance `tol`.
pub fn agrees(exact: &Rational, numeric: Complex64, tol: f64) -> bool {
    let e = exact.to_f64().unwrap_or(f64::NAN);
    (numeric - Complex64::new(e, 0.0)).norm() <= tol * e.abs().max(1.0)
}

/// The rational number with denominator at most `max_den` that `z` rounds to.
pub fn rationalize(z: Complex64, max_den: i64) -> Option<Rational> {
    if z.im.abs() > 1e-8 * (1.0 + z.re.abs()) {
        return None;
    }
    (1..=max_den).find_map(|q| {
        let p = (z.re * q as f64).round();
        let r = Rational::new((p as i64).into(), q.into());
        ((p / q as f64 - z.re).abs() <= 1e-9 * (1.0 + z.re.abs())).then_some(r)
    })
}
