use std::collections::BTreeSet;

use super::{hull, minkowski_sum_all, AffineFrame, Covector, LatticePolytope};
use crate::error::{Error, Result};

/// A nonempty face of a polytope together with a covector cutting it out.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Face {
    /// Indices into the vertex list of the ambient polytope.
    pub vertices: Vec<usize>,
    pub dim: usize,
    /// Sum of the normals of the facets containing the face; for the
    /// polytope itself (only listed when it is not full-dimensional) a
    /// covector constant on its affine hull.
    pub covector: Covector,
}

/// Every face of a polytope that is cut out by a nonzero covector.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    polytope: LatticePolytope,
    faces: Vec<Face>,
}

impl FaceLattice {
    pub fn of(p: &LatticePolytope) -> Self {
        let verts = p.vertices();
        let frame = AffineFrame::of(verts);
        let facets = hull::relative_facets(p);
        let facet_sets: Vec<BTreeSet<usize>> = facets
            .iter()
            .map(|f| f.vertices.iter().copied().collect())
            .collect();
        let mut seen: BTreeSet<BTreeSet<usize>> = facet_sets.iter().cloned().collect();
        let mut queue: Vec<BTreeSet<usize>> = facet_sets.clone();
        while let Some(face) = queue.pop() {
            for f in &facet_sets {
                let meet: BTreeSet<usize> = face.intersection(f).copied().collect();
                if !meet.is_empty() && seen.insert(meet.clone()) {
                    queue.push(meet);
                }
            }
        }
        let mut faces: Vec<Face> = seen
            .into_iter()
            .map(|set| {
                let mut covector = Covector::zero(p.ambient_dim());
                for (f, fs) in facets.iter().zip(&facet_sets) {
                    if set.is_subset(fs) {
                        covector = covector.add(&f.normal);
                    }
                }
                let members: Vec<_> = set.iter().map(|&i| verts[i].clone()).collect();
                Face {
                    dim: AffineFrame::of(&members).dim(),
                    vertices: set.into_iter().collect(),
                    covector,
                }
            })
            .collect();
        if let Some(v) = frame.orthogonal_covector() {
            faces.push(Face {
                vertices: (0..verts.len()).collect(),
                dim: frame.dim(),
                covector: v,
            });
        }
        faces.sort_by(|a, b| b.dim.cmp(&a.dim).then_with(|| b.covector.cmp(&a.covector)));
        Self {
            polytope: p.clone(),
            faces,
        }
    }

    pub fn polytope(&self) -> &LatticePolytope {
        &self.polytope
    }

    /// Faces in decreasing dimension, ties broken by decreasing covector.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn faces_of_dim(&self, d: usize) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(move |f| f.dim == d)
    }

    /// Position of the face with exactly these (sorted) vertex indices.
    pub fn index_of(&self, vertices: &[usize]) -> Option<usize> {
        self.faces.iter().position(|f| f.vertices == vertices)
    }
}

/// The faces of each summand cut out by one covector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FaceDecomposition {
    pub direction: Covector,
    pub faces: Vec<LatticePolytope>,
}

impl FaceDecomposition {
    /// Index of the first summand whose face is a single point.
    pub fn vertex_term(&self) -> Option<usize> {
        self.faces.iter().position(LatticePolytope::is_point)
    }

    pub fn sum(&self) -> Result<LatticePolytope> {
        minkowski_sum_all(&self.faces)
    }
}

pub fn face_decomposition(
    polytopes: &[LatticePolytope],
    v: &Covector,
) -> Result<FaceDecomposition> {
    for p in polytopes {
        if p.ambient_dim() != v.dim() {
            return Err(Error::DimensionMismatch {
                expected: v.dim(),
                found: p.ambient_dim(),
            });
        }
    }
    Ok(FaceDecomposition {
        direction: v.clone(),
        faces: polytopes.iter().map(|p| p.face(v)).collect(),
    })
}

/// Outcome of a developedness check.
///
/// A negative verdict carries a covector whose face decomposition has no
/// vertex term. A positive verdict lists, for every face of the Minkowski
/// sum, its covector and the index of a summand whose face is a vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DevelopednessCertificate {
    pub verdict: bool,
    pub counterexample: Option<Covector>,
    pub witnesses: Vec<(Covector, usize)>,
}

/// Per-index certificates for an `(n+1)`-tuple.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CompleteDevelopedness {
    pub verdict: bool,
    pub certificates: Vec<DevelopednessCertificate>,
}

/// Checks that every face of `Σ Δ_i` has a vertex among its summand faces.
///
/// When several faces fail, the reported counterexample is the first in
/// the order of [`FaceLattice::faces`].
pub fn is_developed(polytopes: &[LatticePolytope]) -> Result<DevelopednessCertificate> {
    let n = check_collection(polytopes, 0)?;
    if n == 0 {
        return Ok(DevelopednessCertificate {
            verdict: true,
            counterexample: None,
            witnesses: Vec::new(),
        });
    }
    let sum = minkowski_sum_all(polytopes)?;
    let lattice = FaceLattice::of(&sum);
    let mut witnesses = Vec::with_capacity(lattice.faces().len());
    for face in lattice.faces() {
        let dec = face_decomposition(polytopes, &face.covector)?;
        match dec.vertex_term() {
            Some(i) => witnesses.push((face.covector.clone(), i)),
            None => {
                return Ok(DevelopednessCertificate {
                    verdict: false,
                    counterexample: Some(face.covector.clone()),
                    witnesses: Vec::new(),
                })
            }
        }
    }
    Ok(DevelopednessCertificate {
        verdict: true,
        counterexample: None,
        witnesses,
    })
}

/// Developedness of the `n`-tuple obtained by dropping entry `i` (0-based)
/// from an `(n+1)`-tuple in `Z^n`.
pub fn is_i_developed(polytopes: &[LatticePolytope], i: usize) -> Result<DevelopednessCertificate> {
    check_collection(polytopes, 1)?;
    if i >= polytopes.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            len: polytopes.len(),
        });
    }
    let rest: Vec<LatticePolytope> = polytopes
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != i)
        .map(|(_, p)| p.clone())
        .collect();
    is_developed(&rest)
}

pub fn is_completely_developed(polytopes: &[LatticePolytope]) -> Result<CompleteDevelopedness> {
    check_collection(polytopes, 1)?;
    let certificates = (0..polytopes.len())
        .map(|i| is_i_developed(polytopes, i))
        .collect::<Result<Vec<_>>>()?;
    Ok(CompleteDevelopedness {
        verdict: certificates.iter().all(|c| c.verdict),
        certificates,
    })
}

/// Validates `n + extra` polytopes in a common `Z^n` and returns `n`.
pub(crate) fn check_collection(polytopes: &[LatticePolytope], extra: usize) -> Result<usize> {
    let Some(first) = polytopes.first() else {
        if extra == 0 {
            return Ok(0);
        }
        return Err(Error::WrongCount {
            expected: extra,
            found: 0,
        });
    };
    let n = first.ambient_dim();
    if let Some(p) = polytopes.iter().find(|p| p.ambient_dim() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: p.ambient_dim(),
        });
    }
    if polytopes.len() != n + extra {
        return Err(Error::WrongCount {
            expected: n + extra,
            found: polytopes.len(),
        });
    }
    Ok(n)
}
