//! Exact linear algebra over the integers and rationals.
//!
//! Only small dense systems (dimension at most the rank of the group) and
//! sparse boundary matrices of order complexes are needed, so everything here
//! is straightforward Gaussian elimination.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Rational;

/// Integer row-echelon basis of a subspace of `Q^dim`, used for span
/// membership tests on root vectors.
///
/// Rows are kept primitive (gcd of entries is 1) so entries stay small.
#[derive(Clone, Debug, Default)]
pub struct IntEchelon {
    rows: Vec<(usize, Vec<i64>)>,
}

impl IntEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[i64]) -> Vec<i64> {
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            let c = v[*pivot];
            if c == 0 {
                continue;
            }
            let p = row[*pivot];
            for (x, r) in v.iter_mut().zip(row) {
                *x = x
                    .checked_mul(p)
                    .and_then(|a| r.checked_mul(c).and_then(|b| a.checked_sub(b)))
                    .expect("integer overflow in echelon reduction");
            }
            normalize(&mut v);
        }
        v
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span; returns `false` when it was already there.
    pub fn insert(&mut self, v: &[i64]) -> bool {
        let r = self.reduce(v);
        match r.iter().position(|&x| x != 0) {
            Some(pivot) => {
                self.rows.push((pivot, r));
                true
            }
            None => false,
        }
    }
}

fn normalize(v: &mut [i64]) {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g;
        }
    }
}

/// Inverse of a square rational matrix, or `None` if singular.
pub fn inverse(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let d = &f * &a[col][c];
                    a[r][c] -= d;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Reduced row echelon form; returns the pivot columns.
pub fn rref(a: &mut Vec<Vec<Rational>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].recip();
        for x in a[row].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..a.len() {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..ncols {
                    let d = &f * &a[row][c];
                    a[r][c] -= d;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    a.truncate(row);
    pivots
}

/// Basis of the right nullspace `{x : A x = 0}`.
pub fn nullspace(m: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); ncols];
            x[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                x[p] = -a[r][f].clone();
            }
            x
        })
        .collect()
}

/// Rank over `Q` of a sparse integer matrix given by rows of
/// `(column, value)` pairs.
///
/// Fraction-free elimination: unit pivots are preferred, and every updated
/// row is divided by its content, which keeps entries tiny for the `±1`
/// boundary matrices this is used on.
pub fn sparse_rank(rows: Vec<Vec<(usize, i64)>>) -> usize {
    let rows: Vec<Vec<(usize, BigInt)>> = rows
        .into_iter()
        .map(|r| {
            let mut r: Vec<(usize, BigInt)> = r
                .into_iter()
                .filter(|(_, v)| *v != 0)
                .map(|(c, v)| (c, BigInt::from(v)))
                .collect();
            r.sort_by_key(|(c, _)| *c);
            r
        })
        .filter(|r| !r.is_empty())
        .collect();
    // Rows bucketed by leading column; columns are eliminated in order.
    let mut buckets: BTreeMap<usize, Vec<Vec<(usize, BigInt)>>> = BTreeMap::new();
    for r in rows {
        buckets.entry(r[0].0).or_default().push(r);
    }
    let mut rank = 0;
    while let Some((_, mut bucket)) = buckets.pop_first() {
        // Prefer a unit pivot, then the sparsest row.
        let pick = bucket
            .iter()
            .enumerate()
            .min_by_key(|(_, r)| (!r[0].1.abs().is_one(), r.len()))
            .map(|(i, _)| i)
            .unwrap();
        let pivot = bucket.swap_remove(pick);
        rank += 1;
        let p = &pivot[0].1;
        for row in bucket {
            let c = row[0].1.clone();
            let reduced = combine(&row, p, &pivot, &c);
            if let Some(&(lead, _)) = reduced.first() {
                buckets.entry(lead).or_default().push(reduced);
            }
        }
    }
    rank
}

/// `p * a - c * b`, divided by its content.
fn combine(
    a: &[(usize, BigInt)],
    p: &BigInt,
    b: &[(usize, BigInt)],
    c: &BigInt,
) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let (col, val) = match (a.get(i), b.get(j)) {
            (Some((ca, va)), Some((cb, vb))) if ca == cb => {
                i += 1;
                j += 1;
                (*ca, p * va - c * vb)
            }
            (Some((ca, va)), Some((cb, _))) if ca < cb => {
                i += 1;
                (*ca, p * va)
            }
            (Some((ca, va)), None) => {
                i += 1;
                (*ca, p * va)
            }
            (_, Some((cb, vb))) => {
                j += 1;
                (*cb, -(c * vb))
            }
            (None, None) => unreachable!(),
        };
        if !val.is_zero() {
            out.push((col, val));
        }
    }
    let g = out.iter().fold(BigInt::zero(), |g, (_, v)| g.gcd(v));
    if g > BigInt::one() {
        for (_, v) in out.iter_mut() {
            *v = &*v / &g;
        }
    }
    out
}
