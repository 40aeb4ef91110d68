use std::collections::{BTreeMap, BTreeSet};

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::lattice::{
    ccw_vertices, check_collection, is_developed, is_i_developed, minkowski_sum, minkowski_sum_all,
    Covector, ExponentVector, Face, FaceLattice, LatticePolytope,
};
use crate::linalg::det_i64;

/// Combinatorial coefficients `k_A` of the vertices of a Minkowski sum.
///
/// Signs follow the standard orientation of `R^n` and the order in which
/// the polytopes were given; reordering the polytopes by an odd
/// permutation flips every sign.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CombCoeffTable {
    entries: BTreeMap<ExponentVector, i64>,
}

impl CombCoeffTable {
    pub fn get(&self, a: &ExponentVector) -> Option<i64> {
        self.entries.get(a).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ExponentVector, i64)> {
        self.entries.iter().map(|(a, &k)| (a, k))
    }

    /// Vertices with a nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = (&ExponentVector, i64)> {
        self.iter().filter(|&(_, k)| k != 0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> i64 {
        self.entries.values().sum()
    }
}

/// Indices of the summands whose face in direction `v` is not a point.
fn moving_terms(polytopes: &[LatticePolytope], v: &Covector) -> BTreeSet<usize> {
    polytopes
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.face(v).is_point())
        .map(|(i, _)| i)
        .collect()
}

fn require_developed(polytopes: &[LatticePolytope]) -> Result<usize> {
    let n = check_collection(polytopes, 0)?;
    let cert = is_developed(polytopes)?;
    if let Some(witness) = cert.counterexample {
        return Err(Error::NotDeveloped { witness });
    }
    Ok(n)
}

/// Coefficients of a developed `n`-tuple in `Z^n`, as local degrees of a
/// characteristic map.
///
/// The map is taken piecewise linear on the barycentric subdivision of the
/// boundary of `ΣΔ_i`, sending the barycenter of a face `Γ` to the indicator
/// vector of the summands whose face is not a point. The degree at `A` is
/// the signed count of flags `A ⊂ Γ¹ ⊂ … ⊂ Γ^{n-1}` whose labels form the
/// chain `{0} ⊂ {0,1} ⊂ … ⊂ {0,…,n-2}`.
pub fn combinatorial_coefficients(polytopes: &[LatticePolytope]) -> Result<CombCoeffTable> {
    let n = require_developed(polytopes)?;
    let chain: Vec<usize> = (0..n).collect();
    coefficients_for_chain(polytopes, &chain)
}

/// As [`combinatorial_coefficients`], counting preimages of a target point
/// whose coordinates decrease in the order `chain` (a permutation of `0..n`).
/// The result does not depend on the permutation.
pub fn combinatorial_coefficients_with_chain(
    polytopes: &[LatticePolytope],
    chain: &[usize],
) -> Result<CombCoeffTable> {
    let n = require_developed(polytopes)?;
    let mut sorted = chain.to_vec();
    sorted.sort_unstable();
    if sorted != (0..n).collect::<Vec<_>>() {
        return Err(Error::WrongCount {
            expected: n,
            found: chain.len(),
        });
    }
    coefficients_for_chain(polytopes, chain)
}

/// Sign of the permutation taking `0..n` to `perm`.
fn permutation_sign(perm: &[usize]) -> i64 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

fn coefficients_for_chain(
    polytopes: &[LatticePolytope],
    chain: &[usize],
) -> Result<CombCoeffTable> {
    let n = chain.len();
    let sum = minkowski_sum_all(polytopes)?;
    let verts = sum.vertices();
    if sum.dim() < n {
        return Ok(CombCoeffTable {
            entries: verts.iter().map(|a| (a.clone(), 0)).collect(),
        });
    }
    let lattice = FaceLattice::of(&sum);
    let labels: Vec<BTreeSet<usize>> = lattice
        .faces()
        .iter()
        .map(|f| moving_terms(polytopes, &f.covector))
        .collect();
    let targets: Vec<BTreeSet<usize>> = (0..n)
        .map(|k| chain[..k].iter().copied().collect())
        .collect();
    let missing = chain[n - 1];
    // Orientation of the target simplex inside the facet {x_missing = 0} of
    // the octant, with the outward normal -e_missing put first.
    let mut order = vec![missing];
    order.extend_from_slice(&chain[..n - 1]);
    let tau = -permutation_sign(&order);

    let by_dim: Vec<Vec<usize>> = (0..n)
        .map(|d| {
            (0..lattice.faces().len())
                .filter(|&i| lattice.faces()[i].dim == d)
                .collect()
        })
        .collect();

    let mut entries = BTreeMap::new();
    for (a_idx, a) in verts.iter().enumerate() {
        let start = by_dim[0]
            .iter()
            .copied()
            .find(|&i| lattice.faces()[i].vertices == [a_idx])
            .ok_or_else(|| Error::Internal("vertex missing from face lattice".into()))?;
        let mut total = 0i64;
        let mut flag = vec![start];
        walk_flags(
            &lattice, &labels, &targets, &by_dim, a, &mut flag, &mut total,
        );
        entries.insert(a.clone(), tau * total);
    }
    Ok(CombCoeffTable { entries })
}

fn walk_flags(
    lattice: &FaceLattice,
    labels: &[BTreeSet<usize>],
    targets: &[BTreeSet<usize>],
    by_dim: &[Vec<usize>],
    apex: &ExponentVector,
    flag: &mut Vec<usize>,
    total: &mut i64,
) {
    let faces = lattice.faces();
    let k = flag.len();
    if k == targets.len() {
        *total += flag_sign(lattice, faces, apex, flag);
        return;
    }
    let prev: &Face = &faces[*flag.last().unwrap()];
    for &next in &by_dim[k] {
        let face = &faces[next];
        if labels[next] != targets[k] || !is_subset(&prev.vertices, &face.vertices) {
            continue;
        }
        flag.push(next);
        walk_flags(lattice, labels, targets, by_dim, apex, flag, total);
        flag.pop();
    }
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|x| big.binary_search(x).is_ok())
}

/// `sign det(ν, w_1, …, w_{n-1})` with `ν` the outward normal of the top
/// face of the flag and `w_k` the sum of the edge vectors from the apex to
/// the vertices of the `k`-th face.
fn flag_sign(lattice: &FaceLattice, faces: &[Face], apex: &ExponentVector, flag: &[usize]) -> i64 {
    let verts = lattice.polytope().vertices();
    let top = &faces[*flag.last().unwrap()];
    let mut rows = vec![top.covector.coords().to_vec()];
    for &f in &flag[1..] {
        let mut w = vec![0i64; apex.dim()];
        for &v in &faces[f].vertices {
            for (slot, d) in w.iter_mut().zip(verts[v].sub(apex).coords()) {
                *slot += d;
            }
        }
        rows.push(w);
    }
    let det = det_i64(&rows);
    if det.is_positive() {
        1
    } else if det.is_negative() {
        -1
    } else {
        0
    }
}

/// Coefficients of a developed pair of polygons by the edge-label rule.
///
/// Walking counter-clockwise, `k_A = +1` when the edge entering `A` comes
/// from the second polygon and the edge leaving it from the first, `-1` in
/// the opposite case, and 0 when both edges come from the same polygon.
pub fn combinatorial_coefficients_2d(
    d1: &LatticePolytope,
    d2: &LatticePolytope,
) -> Result<CombCoeffTable> {
    let pair = [d1.clone(), d2.clone()];
    if require_developed(&pair)? != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: d1.ambient_dim(),
        });
    }
    let sum = minkowski_sum(d1, d2)?;
    if sum.dim() < 2 {
        return Ok(CombCoeffTable {
            entries: sum.vertices().iter().map(|a| (a.clone(), 0)).collect(),
        });
    }
    let ring = ccw_vertices(&sum);
    let m = ring.len();
    let source = |a: &ExponentVector, b: &ExponentVector| -> usize {
        let edge = b.sub(a);
        // Outward normal of a counter-clockwise edge.
        let v = Covector::new(vec![edge[1], -edge[0]]).primitive();
        if d1.face(&v).is_point() {
            1
        } else {
            0
        }
    };
    let mut entries = BTreeMap::new();
    for k in 0..m {
        let prev = &ring[(k + m - 1) % m];
        let cur = &ring[k];
        let next = &ring[(k + 1) % m];
        let value = match (source(prev, cur), source(cur, next)) {
            (1, 0) => 1,
            (0, 1) => -1,
            _ => 0,
        };
        entries.insert(cur.clone(), value);
    }
    Ok(CombCoeffTable { entries })
}

/// Coefficients `k_A^{i,j}` over the vertices of `Δ_1 + … + Δ_{n+1}`, taken
/// for the collection `(Δ_i + Δ_j, Δ_{k_3}, …, Δ_{k_{n+1}})` with the
/// remaining indices increasing. Indices are 0-based.
pub fn combinatorial_coefficients_ij(
    polytopes: &[LatticePolytope],
    i: usize,
    j: usize,
) -> Result<CombCoeffTable> {
    check_collection(polytopes, 1)?;
    for &idx in &[i, j] {
        if idx >= polytopes.len() {
            return Err(Error::IndexOutOfRange {
                index: idx,
                len: polytopes.len(),
            });
        }
    }
    if i == j {
        return Err(Error::SameIndex { index: i });
    }
    for &idx in &[i, j] {
        if let Some(witness) = is_i_developed(polytopes, idx)?.counterexample {
            return Err(Error::NotIDeveloped {
                index: idx,
                witness,
            });
        }
    }
    let mut merged = vec![minkowski_sum(&polytopes[i], &polytopes[j])?];
    merged.extend(
        polytopes
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i && k != j)
            .map(|(_, p)| p.clone()),
    );
    combinatorial_coefficients(&merged)
}
