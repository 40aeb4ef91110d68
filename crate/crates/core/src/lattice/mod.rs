//! Lattice polytopes: hulls, Minkowski sums, support functions, faces,
//! normalized and mixed volumes, and developedness of collections.
//!
//! All arithmetic is exact. Coordinates are `i64`; inner products are taken
//! in `i128`, and volumes and determinants in `BigInt`.

mod fan;
mod frame;
mod hull;
mod volume;

use std::fmt;

pub use fan::{
    face_decomposition, is_completely_developed, is_developed, is_i_developed,
    CompleteDevelopedness, DevelopednessCertificate, Face, FaceDecomposition, FaceLattice,
};
pub use volume::{lattice_volume, mixed_volume};

pub(crate) use fan::check_collection;
pub(crate) use frame::AffineFrame;

use crate::error::{Error, Result};
use crate::linalg::gcd_slice;

/// A point of the lattice `Z^n`: an exponent of a Laurent monomial or a
/// vertex of a lattice polytope.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Self(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Self {
        Self(self.0.iter().map(|a| a * k).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }
}

impl From<Vec<i64>> for ExponentVector {
    fn from(v: Vec<i64>) -> Self {
        Self(v)
    }
}

impl std::ops::Index<usize> for ExponentVector {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

/// An integer linear functional on `Z^n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Covector(Vec<i64>);

impl Covector {
    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn pair(&self, p: &ExponentVector) -> i128 {
        self.0
            .iter()
            .zip(p.coords())
            .map(|(&a, &b)| i128::from(a) * i128::from(b))
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// Coordinates have gcd exactly one. The zero covector is never primitive.
    pub fn is_primitive(&self) -> bool {
        gcd_slice(&self.0) == 1
    }

    /// Divides out the gcd of the coordinates; the zero covector is returned unchanged.
    pub fn primitive(&self) -> Self {
        let g = gcd_slice(&self.0);
        if g == 0 {
            return self.clone();
        }
        Self(self.0.iter().map(|a| a / g).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Covector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Convex hull of finitely many lattice points, stored by its vertices.
///
/// Vertices are kept sorted lexicographically and every stored point is an
/// extreme point, so two polytopes are equal exactly when their vertex
/// lists are.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LatticePolytope {
    dim_ambient: usize,
    vertices: Vec<ExponentVector>,
}

impl LatticePolytope {
    pub fn point(p: ExponentVector) -> Self {
        Self {
            dim_ambient: p.dim(),
            vertices: vec![p],
        }
    }

    /// Convex hull of the given points.
    pub fn from_points(points: &[ExponentVector]) -> Result<Self> {
        convex_hull(points)
    }

    pub(crate) fn from_vertices_unchecked(
        dim_ambient: usize,
        mut vertices: Vec<ExponentVector>,
    ) -> Self {
        vertices.sort();
        vertices.dedup();
        Self {
            dim_ambient,
            vertices,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim_ambient
    }

    pub fn vertices(&self) -> &[ExponentVector] {
        &self.vertices
    }

    pub fn is_point(&self) -> bool {
        self.vertices.len() == 1
    }

    /// Dimension of the affine hull.
    pub fn dim(&self) -> usize {
        AffineFrame::of(&self.vertices).dim()
    }

    pub fn translate(&self, t: &ExponentVector) -> Self {
        Self::from_vertices_unchecked(
            self.dim_ambient,
            self.vertices.iter().map(|v| v.add(t)).collect(),
        )
    }

    /// Integer dilation `k·P` for `k >= 0`.
    pub fn dilate(&self, k: i64) -> Self {
        assert!(k >= 0, "dilation factor must be nonnegative");
        Self::from_vertices_unchecked(
            self.dim_ambient,
            self.vertices.iter().map(|v| v.scale(k)).collect(),
        )
    }

    pub fn support_value(&self, v: &Covector) -> i128 {
        support_value(self, v)
    }

    pub fn face(&self, v: &Covector) -> LatticePolytope {
        face(self, v)
    }

    /// Whether the lattice point lies in the polytope.
    pub fn contains(&self, p: &ExponentVector) -> bool {
        if p.dim() != self.dim_ambient {
            return false;
        }
        let frame = AffineFrame::of(&self.vertices);
        if !frame.in_affine_hull(p) {
            return false;
        }
        hull::relative_facets(self)
            .iter()
            .all(|f| f.normal.pair(p) <= f.offset)
    }

    pub fn contains_polytope(&self, other: &LatticePolytope) -> bool {
        other.vertices.iter().all(|v| self.contains(v))
    }

    /// Relative facets with lifted primitive outward normals; see [`facet_normals`].
    pub fn facets(&self) -> Vec<Facet> {
        hull::relative_facets(self)
    }

    /// A covector maximized over the polytope exactly at vertex `idx`, with
    /// `⟨ξ, b - A⟩ <= -1` for every other vertex `b`: the sum of the outward
    /// normals of the facets through the vertex, strengthened by adding
    /// incident normals again if necessary.
    pub fn supporting_covector(&self, idx: usize) -> Result<Covector> {
        let n = self.dim_ambient;
        let a = self.vertices.get(idx).ok_or(Error::IndexOutOfRange {
            index: idx,
            len: self.vertices.len(),
        })?;
        let incident: Vec<Covector> = self
            .facets()
            .into_iter()
            .filter(|f| f.vertices.contains(&idx))
            .map(|f| f.normal)
            .collect();
        let strict = |xi: &Covector| {
            self.vertices
                .iter()
                .filter(|v| *v != a)
                .all(|v| xi.pair(&v.sub(a)) <= -1)
        };
        let mut xi = incident.iter().fold(Covector::zero(n), |acc, v| acc.add(v));
        if strict(&xi) {
            return Ok(xi);
        }
        for v in incident.iter().cycle().take(incident.len() * n.max(1)) {
            xi = xi.add(v);
            if strict(&xi) {
                return Ok(xi);
            }
        }
        Err(Error::Internal(format!(
            "no strictly supporting covector at vertex {:?}",
            a.coords()
        )))
    }

    /// Primitive covectors `v` for which `face(P, v)` has dimension `n - 1`.
    ///
    /// For a full-dimensional polytope these are the facet normals. When the
    /// polytope spans a hyperplane they are the two primitive normals of that
    /// hyperplane, and when it is smaller still there are none.
    pub fn codim_one_normals(&self) -> Vec<Covector> {
        let frame = AffineFrame::of(&self.vertices);
        let n = self.dim_ambient;
        if frame.dim() == n {
            hull::relative_facets(self)
                .into_iter()
                .map(|f| f.normal)
                .collect()
        } else if frame.dim() + 1 == n {
            let v = frame
                .orthogonal_covector()
                .expect("lower-dimensional frame has an orthogonal covector")
                .primitive();
            let mut out = vec![v.clone(), v.neg()];
            out.sort();
            out
        } else {
            Vec::new()
        }
    }
}

/// A facet of a polytope inside its affine hull.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Facet {
    /// Primitive outward normal, lifted to `Z^n` when the polytope is not
    /// full-dimensional.
    pub normal: Covector,
    /// Maximum of the normal over the polytope.
    pub offset: i128,
    /// Indices into the polytope's vertex list.
    pub vertices: Vec<usize>,
}

pub fn convex_hull(points: &[ExponentVector]) -> Result<LatticePolytope> {
    hull::convex_hull(points)
}

pub fn minkowski_sum(p: &LatticePolytope, q: &LatticePolytope) -> Result<LatticePolytope> {
    if p.dim_ambient != q.dim_ambient {
        return Err(Error::DimensionMismatch {
            expected: p.dim_ambient,
            found: q.dim_ambient,
        });
    }
    if p.is_point() {
        return Ok(q.translate(&p.vertices[0]));
    }
    if q.is_point() {
        return Ok(p.translate(&q.vertices[0]));
    }
    let sums: Vec<ExponentVector> = p
        .vertices
        .iter()
        .flat_map(|a| q.vertices.iter().map(move |b| a.add(b)))
        .collect();
    convex_hull(&sums)
}

/// Minkowski sum of a nonempty list of polytopes.
pub fn minkowski_sum_all(polytopes: &[LatticePolytope]) -> Result<LatticePolytope> {
    let (first, rest) = polytopes.split_first().ok_or(Error::EmptySupport)?;
    rest.iter()
        .try_fold(first.clone(), |acc, p| minkowski_sum(&acc, p))
}

pub fn support_value(p: &LatticePolytope, v: &Covector) -> i128 {
    p.vertices
        .iter()
        .map(|x| v.pair(x))
        .max()
        .expect("polytopes are nonempty")
}

pub fn face(p: &LatticePolytope, v: &Covector) -> LatticePolytope {
    let h = support_value(p, v);
    LatticePolytope::from_vertices_unchecked(
        p.dim_ambient,
        p.vertices
            .iter()
            .filter(|x| v.pair(x) == h)
            .cloned()
            .collect(),
    )
}

/// Primitive outward normals of the (relative) facets of `p`.
///
/// For a lower-dimensional polytope the normals live on the lattice of its
/// affine hull and are lifted to integer covectors on `Z^n`; the lift is
/// deterministic but not unique. A point has no facets.
pub fn facet_normals(p: &LatticePolytope) -> Vec<Covector> {
    let mut normals: Vec<Covector> = hull::relative_facets(p)
        .into_iter()
        .map(|f| f.normal)
        .collect();
    normals.sort();
    normals
}

/// Vertices of a full-dimensional polygon in `Z^2`, counter-clockwise,
/// starting from the lexicographically smallest.
pub fn ccw_vertices(p: &LatticePolytope) -> Vec<ExponentVector> {
    assert_eq!(p.ambient_dim(), 2, "ccw_vertices needs a planar polytope");
    let pts: Vec<Vec<i64>> = p.vertices.iter().map(|v| v.coords().to_vec()).collect();
    hull::monotone_chain(&pts)
        .into_iter()
        .map(|i| p.vertices[i].clone())
        .collect()
}

#[cfg(test)]
pub(crate) mod testutil {
    use super::*;

    pub fn ev(c: &[i64]) -> ExponentVector {
        ExponentVector::new(c.to_vec())
    }

    pub fn poly(points: &[&[i64]]) -> LatticePolytope {
        convex_hull(&points.iter().map(|p| ev(p)).collect::<Vec<_>>()).unwrap()
    }

    pub fn cv(c: &[i64]) -> Covector {
        Covector::new(c.to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::testutil::*;
    use super::*;
    use proptest::prelude::*;

    fn unit_square() -> LatticePolytope {
        poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])
    }

    #[test]
    fn minkowski_of_axis_segments_is_square() {
        let a = poly(&[&[0, 0], &[1, 0]]);
        let b = poly(&[&[0, 0], &[0, 1]]);
        assert_eq!(minkowski_sum(&a, &b).unwrap(), unit_square());
    }

    #[test]
    fn minkowski_with_point_translates() {
        let p = poly(&[&[0, 0], &[2, 0], &[0, 3]]);
        let q = LatticePolytope::point(ev(&[5, -1]));
        assert_eq!(minkowski_sum(&p, &q).unwrap(), p.translate(&ev(&[5, -1])));
    }

    #[test]
    fn triangle_plus_square_is_pentagon() {
        // Oracle: hull of all pairwise vertex sums, enumerated by hand.
        let t = poly(&[&[0, 0], &[1, 0], &[0, 1]]);
        let sum = minkowski_sum(&t, &unit_square()).unwrap();
        assert_eq!(sum, poly(&[&[0, 0], &[2, 0], &[2, 1], &[1, 2], &[0, 2]]));
        assert_eq!(sum.vertices().len(), 5);
    }

    #[test]
    fn minkowski_dimension_mismatch() {
        let a = poly(&[&[0], &[1]]);
        let b = poly(&[&[0, 0], &[0, 1]]);
        assert!(matches!(
            minkowski_sum(&a, &b),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn support_and_faces_of_square() {
        let s = unit_square();
        assert_eq!(s.support_value(&cv(&[1, 1])), 2);
        assert_eq!(s.face(&cv(&[0, 1])), poly(&[&[0, 1], &[1, 1]]));
        assert_eq!(s.face(&cv(&[1, 1])), LatticePolytope::point(ev(&[1, 1])));
        assert_eq!(s.face(&cv(&[0, 0])), s);
    }

    #[test]
    fn support_translation_equivariance() {
        let s = unit_square();
        let t = ev(&[3, -7]);
        let v = cv(&[2, 5]);
        assert_eq!(
            s.translate(&t).support_value(&v),
            s.support_value(&v) + v.pair(&t)
        );
    }

    #[test]
    fn facet_normals_examples() {
        assert_eq!(
            facet_normals(&poly(&[&[-2], &[5]])),
            vec![cv(&[-1]), cv(&[1])]
        );
        let mut sq = vec![cv(&[1, 0]), cv(&[-1, 0]), cv(&[0, 1]), cv(&[0, -1])];
        sq.sort();
        assert_eq!(facet_normals(&unit_square()), sq);
        // The hypotenuse has lattice length 2 but its normal is still primitive.
        let mut tri = vec![cv(&[-1, 0]), cv(&[0, -1]), cv(&[1, 1])];
        tri.sort();
        assert_eq!(facet_normals(&poly(&[&[0, 0], &[2, 0], &[0, 2]])), tri);
        assert!(facet_normals(&LatticePolytope::point(ev(&[1, 2]))).is_empty());
    }

    #[test]
    fn lower_dimensional_facets_cut_out_endpoints() {
        let seg = poly(&[&[0, 0, 0], &[2, 2, 2]]);
        let normals = facet_normals(&seg);
        assert_eq!(normals.len(), 2);
        for v in &normals {
            assert!(v.is_primitive());
            assert!(seg.face(v).is_point());
        }
    }

    #[test]
    fn codim_one_normals_of_segment_in_plane() {
        let seg = poly(&[&[0, 0], &[3, 0]]);
        assert_eq!(seg.codim_one_normals(), vec![cv(&[0, -1]), cv(&[0, 1])]);
        assert!(LatticePolytope::point(ev(&[0, 0]))
            .codim_one_normals()
            .is_empty());
        assert_eq!(
            LatticePolytope::point(ev(&[4])).codim_one_normals(),
            vec![cv(&[-1]), cv(&[1])]
        );
    }

    #[test]
    fn contains_checks_affine_hull() {
        let seg = poly(&[&[0, 0], &[2, 2]]);
        assert!(seg.contains(&ev(&[1, 1])));
        assert!(!seg.contains(&ev(&[1, 0])));
        assert!(!seg.contains(&ev(&[3, 3])));
        let t = poly(&[&[0, 0], &[2, 0], &[0, 2]]);
        assert!(t.contains(&ev(&[1, 1])));
        assert!(!t.contains(&ev(&[2, 1])));
    }

    #[test]
    fn ccw_order() {
        let vs = ccw_vertices(&unit_square());
        assert_eq!(vs, vec![ev(&[0, 0]), ev(&[1, 0]), ev(&[1, 1]), ev(&[0, 1])]);
    }

    fn arb_polytope(n: usize) -> impl Strategy<Value = LatticePolytope> {
        prop::collection::vec(prop::collection::vec(-4i64..=4, n), 1..7).prop_map(|pts| {
            convex_hull(&pts.into_iter().map(ExponentVector::new).collect::<Vec<_>>()).unwrap()
        })
    }

    proptest! {
        #[test]
        fn hull_is_idempotent(p in arb_polytope(3)) {
            prop_assert_eq!(convex_hull(p.vertices()).unwrap(), p);
        }

        #[test]
        fn support_is_additive(p in arb_polytope(2), q in arb_polytope(2),
                               vs in prop::collection::vec(prop::collection::vec(-9i64..=9, 2), 100)) {
            let s = minkowski_sum(&p, &q).unwrap();
            for v in vs {
                let v = Covector::new(v);
                prop_assert_eq!(s.support_value(&v), p.support_value(&v) + q.support_value(&v));
            }
        }

        #[test]
        fn faces_are_additive(p in arb_polytope(3), q in arb_polytope(3),
                              v in prop::collection::vec(-3i64..=3, 3)) {
            let v = Covector::new(v);
            let lhs = minkowski_sum(&p, &q).unwrap().face(&v);
            let rhs = minkowski_sum(&p.face(&v), &q.face(&v)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
