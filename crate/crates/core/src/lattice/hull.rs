use std::collections::BTreeSet;

use super::{AffineFrame, ExponentVector, Facet, LatticePolytope};
use crate::error::{Error, Result};
use crate::linalg::{for_each_combination, gcd_slice, primitive_normal};

pub(super) fn convex_hull(points: &[ExponentVector]) -> Result<LatticePolytope> {
    let first = points.first().ok_or(Error::EmptySupport)?;
    let n = first.dim();
    if let Some(bad) = points.iter().find(|p| p.dim() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: bad.dim(),
        });
    }
    let pts: Vec<ExponentVector> = points
        .iter()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let frame = AffineFrame::of(&pts);
    let proj: Vec<Vec<i64>> = pts.iter().map(|p| frame.project(p)).collect();
    let keep: Vec<usize> = match frame.dim() {
        0 => vec![0],
        1 => {
            let lo = (0..proj.len()).min_by_key(|&i| proj[i][0]).unwrap();
            let hi = (0..proj.len()).max_by_key(|&i| proj[i][0]).unwrap();
            vec![lo, hi]
        }
        2 => monotone_chain(&proj),
        d => incremental_vertices(&proj, d),
    };
    Ok(LatticePolytope::from_vertices_unchecked(
        n,
        keep.into_iter().map(|i| pts[i].clone()).collect(),
    ))
}

fn cross(o: &[i64], a: &[i64], b: &[i64]) -> i128 {
    let (ax, ay) = (i128::from(a[0] - o[0]), i128::from(a[1] - o[1]));
    let (bx, by) = (i128::from(b[0] - o[0]), i128::from(b[1] - o[1]));
    ax * by - ay * bx
}

/// Indices of the strict vertices of distinct planar points, counter-clockwise
/// from the lexicographically smallest point.
pub(super) fn monotone_chain(pts: &[Vec<i64>]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&a, &b| pts[a].cmp(&pts[b]));
    if order.len() < 3 {
        return order;
    }
    let mut hull: Vec<usize> = Vec::with_capacity(2 * order.len());
    for pass in 0..2 {
        let start = hull.len();
        let seq: Box<dyn Iterator<Item = &usize>> = if pass == 0 {
            Box::new(order.iter())
        } else {
            Box::new(order.iter().rev())
        };
        for &i in seq {
            while hull.len() >= start + 2
                && cross(
                    &pts[hull[hull.len() - 2]],
                    &pts[hull[hull.len() - 1]],
                    &pts[i],
                ) <= 0
            {
                hull.pop();
            }
            hull.push(i);
        }
        hull.pop();
    }
    hull
}

fn dot(w: &[i64], p: &[i64]) -> i128 {
    w.iter()
        .zip(p)
        .map(|(&a, &b)| i128::from(a) * i128::from(b))
        .sum()
}

/// Primitive outward facet normals of a full-dimensional point set in `Z^d`,
/// found by testing every hyperplane through `d` of the points.
fn brute_force_normals(pts: &[Vec<i64>], d: usize) -> Vec<Vec<i64>> {
    let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
    for_each_combination(pts.len(), d, |idx| {
        let base = &pts[idx[0]];
        let diffs: Vec<Vec<i64>> = idx[1..]
            .iter()
            .map(|&i| pts[i].iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        let w = primitive_normal(&diffs, d);
        if w.iter().all(|&x| x == 0) {
            return;
        }
        let neg: Vec<i64> = w.iter().map(|x| -x).collect();
        let h = dot(&w, base);
        let (mut above, mut below) = (false, false);
        for p in pts {
            let x = dot(&w, p);
            above |= x > h;
            below |= x < h;
            if above && below {
                return;
            }
        }
        found.insert(if above { neg } else { w });
    });
    found.into_iter().collect()
}

fn vertices_from_normals(pts: &[Vec<i64>], normals: &[Vec<i64>], d: usize) -> Vec<usize> {
    let maxima: Vec<i128> = normals
        .iter()
        .map(|w| pts.iter().map(|p| dot(w, p)).max().unwrap())
        .collect();
    (0..pts.len())
        .filter(|&i| {
            let tight: Vec<Vec<i64>> = normals
                .iter()
                .zip(&maxima)
                .filter(|(w, &h)| dot(w, &pts[i]) == h)
                .map(|(w, _)| w.clone())
                .collect();
            tight.len() >= d && crate::linalg::rank_i64(&tight) == d
        })
        .collect()
}

/// Vertex indices of a full-dimensional point set in `Z^d`, `d >= 3`.
///
/// Points are inserted far-from-centroid first; a point inside the current
/// hull is discarded, otherwise the hull of the surviving vertices is rebuilt.
fn incremental_vertices(pts: &[Vec<i64>], d: usize) -> Vec<usize> {
    let m = pts.len() as i128;
    let centroid_scaled: Vec<i128> = (0..d)
        .map(|c| pts.iter().map(|p| i128::from(p[c])).sum())
        .collect();
    let spread = |p: &Vec<i64>| -> i128 {
        p.iter()
            .zip(&centroid_scaled)
            .map(|(&x, &s)| {
                let t = i128::from(x) * m - s;
                t * t
            })
            .sum()
    };
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&a, &b| spread(&pts[b]).cmp(&spread(&pts[a])).then(a.cmp(&b)));

    let mut current: Vec<usize> = vec![order[0]];
    for &i in &order[1..] {
        if current.len() == d + 1 {
            break;
        }
        current.push(i);
        if crate::linalg::rank_i64(&differences(pts, &current)) < current.len() - 1 {
            current.pop();
        }
    }
    let rebuild = |set: &Vec<usize>| -> (Vec<usize>, Vec<Vec<i64>>, Vec<i128>) {
        let sub: Vec<Vec<i64>> = set.iter().map(|&i| pts[i].clone()).collect();
        let normals = brute_force_normals(&sub, d);
        let verts: Vec<usize> = vertices_from_normals(&sub, &normals, d)
            .into_iter()
            .map(|k| set[k])
            .collect();
        let offsets = normals
            .iter()
            .map(|w| verts.iter().map(|&i| dot(w, &pts[i])).max().unwrap())
            .collect();
        (verts, normals, offsets)
    };
    let (mut verts, mut normals, mut offsets) = rebuild(&current);
    for &i in &order {
        if verts.contains(&i) || current.contains(&i) {
            continue;
        }
        let inside = normals
            .iter()
            .zip(&offsets)
            .all(|(w, &h)| dot(w, &pts[i]) <= h);
        if inside {
            continue;
        }
        let mut set = verts.clone();
        set.push(i);
        (verts, normals, offsets) = rebuild(&set);
    }
    verts.sort_unstable();
    verts
}

fn differences(pts: &[Vec<i64>], set: &[usize]) -> Vec<Vec<i64>> {
    let base = &pts[set[0]];
    set[1..]
        .iter()
        .map(|&i| pts[i].iter().zip(base).map(|(a, b)| a - b).collect())
        .collect()
}

/// Facets of `p` inside its affine hull, sorted by lifted normal.
pub(super) fn relative_facets(p: &LatticePolytope) -> Vec<Facet> {
    let verts = p.vertices();
    let frame = AffineFrame::of(verts);
    let d = frame.dim();
    let proj: Vec<Vec<i64>> = verts.iter().map(|v| frame.project(v)).collect();
    let rel_normals: Vec<Vec<i64>> = match d {
        0 => Vec::new(),
        1 => vec![vec![1], vec![-1]],
        2 => {
            let ring = monotone_chain(&proj);
            (0..ring.len())
                .map(|k| {
                    let a = &proj[ring[k]];
                    let b = &proj[ring[(k + 1) % ring.len()]];
                    let (dx, dy) = (b[0] - a[0], b[1] - a[1]);
                    let g = gcd_slice(&[dx, dy]);
                    vec![dy / g, -dx / g]
                })
                .collect()
        }
        _ => brute_force_normals(&proj, d),
    };
    let mut facets: Vec<Facet> = rel_normals
        .iter()
        .map(|w| {
            let normal = frame.lift(w);
            let offset = verts.iter().map(|v| normal.pair(v)).max().unwrap();
            let vertices = (0..verts.len())
                .filter(|&i| normal.pair(&verts[i]) == offset)
                .collect();
            Facet {
                normal,
                offset,
                vertices,
            }
        })
        .collect();
    facets.sort_by(|a, b| a.normal.cmp(&b.normal));
    facets
}
