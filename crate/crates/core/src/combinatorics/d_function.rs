use crate::error::{Error, Result};
use crate::lattice::ExponentVector;

/// A vector of `F₂^n`, `n <= 64`, stored as a bitmask (bit `i` is coordinate `i`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct F2Vector {
    bits: u64,
    n: usize,
}

impl F2Vector {
    pub fn new(bits: u64, n: usize) -> Self {
        assert!(n <= 64, "F2 vectors are limited to 64 coordinates");
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Self {
            bits: bits & mask,
            n,
        }
    }

    pub fn reduce(v: &ExponentVector) -> Self {
        let bits = v
            .coords()
            .iter()
            .enumerate()
            .filter(|(_, &x)| x.rem_euclid(2) == 1)
            .fold(0u64, |acc, (i, _)| acc | (1 << i));
        Self::new(bits, v.dim())
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    pub fn hadamard(&self, other: &Self) -> Self {
        Self::new(self.bits & other.bits, self.n)
    }
}

/// Determinant over F₂ of the matrix whose columns are `cols`.
fn det_f2(cols: &[u64], n: usize) -> u8 {
    debug_assert_eq!(cols.len(), n);
    let mut m = cols.to_vec();
    for bit in 0..n {
        let Some(p) = (bit..n).find(|&r| m[r] >> bit & 1 == 1) else {
            return 0;
        };
        m.swap(bit, p);
        for r in bit + 1..n {
            if m[r] >> bit & 1 == 1 {
                m[r] ^= m[bit];
            }
        }
    }
    1
}

/// Rank over F₂ and the first linear relation found, as a bitmask over the inputs.
fn rank_and_kernel(vs: &[u64]) -> (usize, Option<u64>) {
    let mut basis: Vec<(u64, u64)> = Vec::new();
    let mut kernel = None;
    for (i, &v) in vs.iter().enumerate() {
        let mut cur = (v, 1u64 << i);
        for &(b, combo) in &basis {
            let lead = 63 - b.leading_zeros();
            if cur.0 >> lead & 1 == 1 {
                cur = (cur.0 ^ b, cur.1 ^ combo);
            }
        }
        if cur.0 == 0 {
            kernel.get_or_insert(cur.1);
        } else {
            basis.push(cur);
            basis.sort_by_key(|x| x.0.leading_zeros());
        }
    }
    (basis.len(), kernel)
}

/// `D` by the kernel description: zero below full rank, otherwise one plus
/// the weight of the unique nonzero linear relation.
pub fn d_formula_one(vs: &[F2Vector]) -> u8 {
    let n = vs.len() - 1;
    let bits: Vec<u64> = vs.iter().map(F2Vector::bits).collect();
    let (rank, kernel) = rank_and_kernel(&bits);
    if rank < n {
        return 0;
    }
    let lambda = kernel.expect("n+1 vectors of rank n have a relation");
    ((1 + lambda.count_ones()) % 2) as u8
}

/// `D` as `Σ_{i<j} det(k_1, …, k̂_i, …, k̂_j, …, k_{n+1}, k_i ∘ k_j)`.
pub fn d_formula_two(vs: &[F2Vector]) -> u8 {
    let n = vs.len() - 1;
    let mut total = 0u8;
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            let mut cols: Vec<u64> = vs
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i && k != j)
                .map(|(_, v)| v.bits())
                .collect();
            cols.push(vs[i].hadamard(&vs[j]).bits());
            total ^= det_f2(&cols, n);
        }
    }
    total
}

/// `D` of the mod-2 reductions of `n + 1` integer vectors in `Z^n`.
pub fn d_function(vs: &[ExponentVector]) -> Result<u8> {
    let n = vs.first().map(ExponentVector::dim).unwrap_or(0);
    if vs.len() != n + 1 {
        return Err(Error::WrongCount {
            expected: n + 1,
            found: vs.len(),
        });
    }
    if let Some(v) = vs.iter().find(|v| v.dim() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: v.dim(),
        });
    }
    let reduced: Vec<F2Vector> = vs.iter().map(F2Vector::reduce).collect();
    Ok(d_formula_one(&reduced))
}
