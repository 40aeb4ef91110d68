use super::{Covector, ExponentVector};
use crate::linalg::unimodular_echelon;

/// Lattice coordinates on the affine hull of a point set.
///
/// `u` is unimodular and maps every difference `p - base` into the span of
/// the first `dim` standard basis vectors, so projecting to those
/// coordinates identifies the affine lattice with `Z^dim`.
#[derive(Clone, Debug)]
pub(crate) struct AffineFrame {
    base: ExponentVector,
    u: Vec<Vec<i64>>,
    dim: usize,
}

impl AffineFrame {
    pub(crate) fn of(points: &[ExponentVector]) -> Self {
        let base = points[0].clone();
        let n = base.dim();
        let diffs: Vec<Vec<i64>> = points[1..]
            .iter()
            .map(|p| p.sub(&base).coords().to_vec())
            .collect();
        let (u, dim) = unimodular_echelon(&diffs, n);
        Self { base, u, dim }
    }

    pub(crate) fn dim(&self) -> usize {
        self.dim
    }

    fn full_image(&self, p: &ExponentVector) -> Vec<i128> {
        let diff = p.sub(&self.base);
        self.u
            .iter()
            .map(|row| {
                row.iter()
                    .zip(diff.coords())
                    .map(|(&a, &b)| i128::from(a) * i128::from(b))
                    .sum()
            })
            .collect()
    }

    pub(crate) fn project(&self, p: &ExponentVector) -> Vec<i64> {
        self.full_image(p)[..self.dim]
            .iter()
            .map(|&x| i64::try_from(x).expect("projected coordinate fits in 64 bits"))
            .collect()
    }

    pub(crate) fn in_affine_hull(&self, p: &ExponentVector) -> bool {
        self.full_image(p)[self.dim..].iter().all(|&x| x == 0)
    }

    /// Covector `v` on `Z^n` with `<v, p - base> = <w, project(p)>`.
    pub(crate) fn lift(&self, w: &[i64]) -> Covector {
        let n = self.u.len();
        let mut v = vec![0i64; n];
        for (k, &wk) in w.iter().enumerate() {
            for (c, slot) in v.iter_mut().enumerate() {
                *slot += wk * self.u[k][c];
            }
        }
        Covector::new(v)
    }

    /// A primitive covector constant on the affine hull, when it is proper.
    pub(crate) fn orthogonal_covector(&self) -> Option<Covector> {
        (self.dim < self.u.len()).then(|| Covector::new(self.u[self.dim].clone()))
    }
}
