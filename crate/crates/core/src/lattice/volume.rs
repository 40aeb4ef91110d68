use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{hull, minkowski_sum, AffineFrame, LatticePolytope};
use crate::error::{Error, Result};
use crate::linalg::{factorial, rank_i64};

/// Normalized volume `d!·Vol_d(P)` with respect to the lattice of the affine
/// hull of `P`, where `d = dim P`. A point has volume 1.
pub fn lattice_volume(p: &LatticePolytope) -> BigInt {
    let verts = p.vertices();
    let frame = AffineFrame::of(verts);
    let proj: Vec<Vec<i64>> = verts.iter().map(|v| frame.project(v)).collect();
    match frame.dim() {
        0 => BigInt::one(),
        1 => {
            let lo = proj.iter().map(|x| x[0]).min().unwrap();
            let hi = proj.iter().map(|x| x[0]).max().unwrap();
            BigInt::from(hi) - BigInt::from(lo)
        }
        2 => {
            let ring = hull::monotone_chain(&proj);
            let twice: i128 = (0..ring.len())
                .map(|k| {
                    let a = &proj[ring[k]];
                    let b = &proj[ring[(k + 1) % ring.len()]];
                    i128::from(a[0]) * i128::from(b[1]) - i128::from(a[1]) * i128::from(b[0])
                })
                .sum();
            BigInt::from(twice.abs())
        }
        _ => {
            // Cone over every facet missing the first vertex.
            let apex = &verts[0];
            hull::relative_facets(p)
                .into_iter()
                .filter(|f| !f.vertices.contains(&0))
                .map(|f| {
                    let height = f.offset - f.normal.pair(apex);
                    let face = LatticePolytope::from_vertices_unchecked(
                        p.ambient_dim(),
                        f.vertices.iter().map(|&i| verts[i].clone()).collect(),
                    );
                    BigInt::from(height) * lattice_volume(&face)
                })
                .sum()
        }
    }
}

/// Normalized mixed volume of `k` polytopes spanning at most a rank-`k`
/// lattice, scaled so that `MV(P, …, P) = lattice_volume(P)` when `dim P = k`.
///
/// Computed by inclusion–exclusion over Minkowski sums of subsets.
pub fn mixed_volume(polytopes: &[LatticePolytope], rank: usize) -> Result<BigInt> {
    if polytopes.len() != rank {
        return Err(Error::WrongCount {
            expected: rank,
            found: polytopes.len(),
        });
    }
    if rank == 0 {
        return Ok(BigInt::one());
    }
    let n = polytopes[0].ambient_dim();
    if let Some(p) = polytopes.iter().find(|p| p.ambient_dim() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: p.ambient_dim(),
        });
    }
    let diffs: Vec<Vec<i64>> = polytopes
        .iter()
        .flat_map(|p| {
            let base = &p.vertices()[0];
            p.vertices()[1..]
                .iter()
                .map(move |v| v.sub(base).coords().to_vec())
        })
        .collect();
    let span = if diffs.is_empty() {
        0
    } else {
        rank_i64(&diffs)
    };
    if span > rank {
        return Err(Error::RankMismatch { span, rank });
    }
    if span < rank {
        return Ok(BigInt::zero());
    }
    let k = rank;
    let mut sums: Vec<Option<LatticePolytope>> = vec![None; 1 << k];
    let mut total = BigInt::zero();
    for mask in 1usize..(1 << k) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let sum = match &sums[rest] {
            None => polytopes[low].clone(),
            Some(s) => minkowski_sum(s, &polytopes[low])?,
        };
        if AffineFrame::of(sum.vertices()).dim() == k {
            let vol = lattice_volume(&sum);
            if (k - mask.count_ones() as usize).is_multiple_of(2) {
                total += vol;
            } else {
                total -= vol;
            }
        }
        sums[mask] = Some(sum);
    }
    let (q, r) = total.div_rem(&factorial(k));
    if !r.is_zero() {
        return Err(Error::Internal(format!(
            "inclusion-exclusion total {total} not divisible by {k}!"
        )));
    }
    Ok(q)
}
