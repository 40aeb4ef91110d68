//! Small exact linear-algebra kernels shared by the geometry and resultant code.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Determinant of a square integer matrix by fraction-free (Bareiss) elimination.
pub(crate) fn det_bigint(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

pub(crate) fn det_i64(rows: &[Vec<i64>]) -> BigInt {
    det_bigint(
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect(),
    )
}

/// Determinant over the rationals by Gaussian elimination.
pub(crate) fn det_rational(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return BigRational::zero();
        };
        if p != k {
            m.swap(p, k);
            det = -det;
        }
        let pivot = m[k][k].clone();
        det *= &pivot;
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let factor = &m[i][k] / &pivot;
            for j in k..n {
                let v = &factor * &m[k][j];
                m[i][j] -= v;
            }
        }
    }
    det
}

/// Rank of a set of integer vectors over the rationals.
pub(crate) fn rank_i64(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect()
        })
        .collect();
    let Some(cols) = m.first().map(Vec::len) else {
        return 0;
    };
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for i in rank + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let factor = &m[i][c] / &pivot;
            for j in c..cols {
                let v = &factor * &m[rank][j];
                m[i][j] -= v;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Unimodular `U` (n×n) such that `U·x` vanishes below row `rank` for every
/// input column `x`. Returns `(U, rank)`.
pub(crate) fn unimodular_echelon(columns: &[Vec<i64>], n: usize) -> (Vec<Vec<i64>>, usize) {
    let m = columns.len();
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|r| columns.iter().map(|col| BigInt::from(col[r])).collect())
        .collect();
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|r| (0..n).map(|c| BigInt::from(i64::from(r == c))).collect())
        .collect();
    let mut row = 0;
    for c in 0..m {
        if row == n {
            break;
        }
        loop {
            let pivot = (row..n)
                .filter(|&r| !a[r][c].is_zero())
                .min_by(|&x, &y| a[x][c].abs().cmp(&a[y][c].abs()));
            let Some(p) = pivot else { break };
            a.swap(p, row);
            u.swap(p, row);
            let mut cleared = true;
            for r in row + 1..n {
                if a[r][c].is_zero() {
                    continue;
                }
                let q = a[r][c].div_floor(&a[row][c]);
                for j in 0..m {
                    let v = &q * &a[row][j];
                    a[r][j] -= v;
                }
                for j in 0..n {
                    let v = &q * &u[row][j];
                    u[r][j] -= v;
                }
                if !a[r][c].is_zero() {
                    cleared = false;
                }
            }
            if cleared {
                row += 1;
                break;
            }
        }
    }
    let u = u
        .into_iter()
        .map(|r| r.into_iter().map(|x| to_i64(&x)).collect())
        .collect();
    (u, row)
}

pub(crate) fn to_i64(x: &BigInt) -> i64 {
    x.to_i64()
        .unwrap_or_else(|| panic!("lattice coordinate {x} does not fit in 64 bits"))
}

pub(crate) fn gcd_slice(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

/// Integer normal of the hyperplane spanned by `d-1` vectors in `Z^d`,
/// divided by the gcd of its entries. Zero when the vectors are dependent.
pub(crate) fn primitive_normal(vectors: &[Vec<i64>], d: usize) -> Vec<i64> {
    debug_assert_eq!(vectors.len() + 1, d);
    let raw: Vec<BigInt> = if d == 3 {
        let (a, b) = (&vectors[0], &vectors[1]);
        let cross = |i: usize, j: usize| {
            BigInt::from(i128::from(a[i]) * i128::from(b[j]) - i128::from(a[j]) * i128::from(b[i]))
        };
        vec![cross(1, 2), cross(2, 0), cross(0, 1)]
    } else {
        (0..d)
            .map(|skip| {
                let minor: Vec<Vec<i64>> = vectors
                    .iter()
                    .map(|v| {
                        v.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != skip)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let det = det_i64(&minor);
                if (skip + d + 1).is_multiple_of(2) {
                    det
                } else {
                    -det
                }
            })
            .collect()
    };
    let g = raw.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return vec![0; d];
    }
    raw.iter().map(|x| to_i64(&(x / &g))).collect()
}

/// Calls `f` with every `k`-element subset of `0..n` in lexicographic order.
pub(crate) fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(pos) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[pos] += 1;
        for j in pos + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

pub(crate) fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}
