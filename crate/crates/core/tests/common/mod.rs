#![allow(dead_code)]

use devres::laurent::{integer, rational};
use devres::{ExponentVector, LatticePolytope, LaurentPoly, Rational, SystemInstance};
use rand::Rng;

pub fn ev(c: &[i64]) -> ExponentVector {
    ExponentVector::new(c.to_vec())
}

pub fn poly(points: &[&[i64]]) -> LatticePolytope {
    LatticePolytope::from_points(&points.iter().map(|p| ev(p)).collect::<Vec<_>>()).unwrap()
}

pub fn seg(a: &[i64], b: &[i64]) -> LatticePolytope {
    poly(&[a, b])
}

pub fn p(n: usize, t: &[(&[i64], i64)]) -> LaurentPoly {
    LaurentPoly::from_int_terms(n, t).unwrap()
}

pub fn simplex() -> LatticePolytope {
    poly(&[&[0, 0], &[1, 0], &[0, 1]])
}

pub fn neg_simplex() -> LatticePolytope {
    poly(&[&[0, 0], &[-1, 0], &[0, -1]])
}

pub fn square() -> LatticePolytope {
    poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])
}

pub fn diamond() -> LatticePolytope {
    poly(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]])
}

pub fn tilted_square() -> LatticePolytope {
    poly(&[&[1, 0], &[3, 1], &[2, 3], &[0, 2]])
}

/// Lattice points of a polytope, in lexicographic order.
pub fn lattice_points(q: &LatticePolytope) -> Vec<ExponentVector> {
    let n = q.ambient_dim();
    let lo: Vec<i64> = (0..n)
        .map(|j| q.vertices().iter().map(|v| v[j]).min().unwrap())
        .collect();
    let hi: Vec<i64> = (0..n)
        .map(|j| q.vertices().iter().map(|v| v[j]).max().unwrap())
        .collect();
    let mut out = Vec::new();
    let mut cur = lo.clone();
    loop {
        let e = ExponentVector::new(cur.clone());
        if q.contains(&e) {
            out.push(e);
        }
        let mut j = 0;
        loop {
            if j == n {
                return out;
            }
            if cur[j] < hi[j] {
                cur[j] += 1;
                break;
            }
            cur[j] = lo[j];
            j += 1;
        }
    }
}

pub fn nonzero(rng: &mut impl Rng, bound: i64) -> i64 {
    loop {
        let c = rng.gen_range(-bound..=bound);
        if c != 0 {
            return c;
        }
    }
}

/// A polynomial supported on all lattice points of `q`, nonzero at vertices.
pub fn random_poly(rng: &mut impl Rng, q: &LatticePolytope, bound: i64) -> LaurentPoly {
    let terms = lattice_points(q).into_iter().map(|e| {
        let c = if q.vertices().contains(&e) {
            nonzero(rng, bound)
        } else {
            rng.gen_range(-bound..=bound)
        };
        (e, integer(c))
    });
    LaurentPoly::from_terms(q.ambient_dim(), terms).unwrap()
}

pub fn random_system(rng: &mut impl Rng, shapes: &[LatticePolytope], bound: i64) -> SystemInstance {
    let polys = shapes.iter().map(|q| random_poly(rng, q, bound)).collect();
    SystemInstance::with_declared(polys, shapes.to_vec()).unwrap()
}

pub fn random_rational(rng: &mut impl Rng, num: i64, den: i64) -> Rational {
    rational(nonzero(rng, num), rng.gen_range(1..=den))
}

/// Developed pairs of plane polytopes, with mixed volumes from 1 to 12.
pub fn developed_pairs() -> Vec<(&'static str, [LatticePolytope; 2])> {
    vec![
        (
            "axis segments",
            [seg(&[0, 0], &[1, 0]), seg(&[0, 0], &[0, 1])],
        ),
        ("simplex and diagonal", [simplex(), seg(&[0, 0], &[1, 1])]),
        (
            "long axis segments",
            [seg(&[0, 0], &[2, 0]), seg(&[0, 0], &[0, 3])],
        ),
        ("opposite simplices", [simplex(), neg_simplex()]),
        ("square and diamond", [square(), diamond()]),
        ("square and diagonal", [square(), seg(&[0, 0], &[1, 1])]),
        (
            "dilated simplex and segment",
            [simplex().dilate(2), seg(&[0, 0], &[1, -2])],
        ),
        ("quadrilateral and simplex", [tilted_square(), simplex()]),
        (
            "quadrilateral and segment",
            [tilted_square(), seg(&[0, 0], &[1, 0])],
        ),
        ("segment and diamond", [seg(&[0, 0], &[3, 0]), diamond()]),
        (
            "dilated diamond and segment",
            [diamond().dilate(2), seg(&[0, 0], &[1, 2])],
        ),
        ("quadrilateral and diamond", [tilted_square(), diamond()]),
        (
            "longer axis segments",
            [seg(&[0, 0], &[3, 0]), seg(&[0, -1], &[0, 3])],
        ),
    ]
}

/// Completely developed triples of plane polytopes.
pub fn developed_triples() -> Vec<(&'static str, [LatticePolytope; 3])> {
    vec![
        (
            "axis segments and diagonal",
            [
                seg(&[0, 0], &[1, 0]),
                seg(&[0, 0], &[0, 1]),
                seg(&[0, 0], &[1, 1]),
            ],
        ),
        (
            "opposite simplices and diagonal",
            [simplex(), neg_simplex(), seg(&[0, 0], &[1, 1])],
        ),
        (
            "simplex and two segments",
            [simplex(), seg(&[0, 0], &[1, 1]), seg(&[0, 0], &[1, -2])],
        ),
        (
            "axis segments and antidiagonal",
            [
                seg(&[0, 0], &[1, 0]),
                seg(&[0, 0], &[0, 1]),
                seg(&[0, 0], &[1, -1]),
            ],
        ),
        (
            "square and two diagonals",
            [square(), seg(&[0, 0], &[1, 1]), seg(&[0, 0], &[1, -1])],
        ),
        (
            "diamond, square and segment",
            [diamond(), square(), seg(&[0, 0], &[1, 2])],
        ),
        (
            "three slanted segments",
            [
                seg(&[0, 0], &[2, 1]),
                seg(&[0, 0], &[1, 3]),
                seg(&[0, 0], &[1, -1]),
            ],
        ),
    ]
}
