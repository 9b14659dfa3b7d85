//! Dimension sequences of the homology character in type A.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::partitions::{factorial, multinomial};
use super::series::Series;
use crate::error::{Error, Result};
use crate::Rational;

pub const MAX_BESSEL_ORDER: usize = 12;
pub const MAX_PAIR_COUNT_SIZE: usize = 9;

/// `(D_1..D_N, D'_0..D'_N)` from `-log J_0(2 sqrt x)` and `1 / J_0(2 sqrt x)`,
/// where `J_0(2 sqrt x) = sum (-x)^n / n!^2`.
pub fn bessel_dims(order: usize) -> Result<(Vec<BigInt>, Vec<BigInt>)> {
    if order > MAX_BESSEL_ORDER {
        return Err(Error::SizeCap { what: "series order", size: order as u128, cap: MAX_BESSEL_ORDER as u128 });
    }
    let sq = |n: usize| {
        let f = factorial(n);
        Rational::from_integer(&f * &f)
    };
    let j0 = Series::new(
        (0..=order)
            .map(|n| {
                let s = if n % 2 == 0 { Rational::one() } else { -Rational::one() };
                s / sq(n)
            })
            .collect(),
        order,
    );
    let log = j0.log()?;
    let inv = j0.reciprocal()?;
    let to_int = |c: Rational| -> BigInt {
        debug_assert!(c.is_integer());
        c.to_integer()
    };
    let d = (1..=order).map(|n| to_int(-log.coeff(n) * sq(n))).collect();
    let dp = (0..=order).map(|n| to_int(inv.coeff(n) * sq(n))).collect();
    Ok((d, dp))
}

/// Checks `sum D_n x^n/n!^2 = log(sum D'_n x^n/n!^2)` to the given order.
pub fn bessel_log_relation_holds(d: &[BigInt], dp: &[BigInt]) -> bool {
    let order = dp.len() - 1;
    let sq = |n: usize| {
        let f = factorial(n);
        Rational::from_integer(&f * &f)
    };
    let lhs = Series::new(
        std::iter::once(Rational::zero())
            .chain(d.iter().take(order).enumerate().map(|(k, x)| Rational::from_integer(x.clone()) / sq(k + 1)))
            .collect(),
        order,
    );
    let rhs = Series::new(
        dp.iter().enumerate().map(|(k, x)| Rational::from_integer(x.clone()) / sq(k)).collect(),
        order,
    );
    rhs.log().map(|l| l == lhs).unwrap_or(false)
}

/// Descent set of a permutation of `0..n` as a bitmask over positions
/// `1..n-1` (bit `i-1` set when `sigma(i) > sigma(i+1)` in 1-based terms).
pub fn descent_mask(sigma: &[usize]) -> u32 {
    sigma
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .fold(0, |m, (i, _)| m | 1 << i)
}

/// `#{ sigma in S_n : des(sigma) ⊆ mask }`, the multinomial of the
/// composition cut out by `mask`.
pub fn descents_contained_count(n: usize, mask: u32) -> BigInt {
    let mut parts = Vec::new();
    let mut last = 0;
    for i in 1..n {
        if mask >> (i - 1) & 1 == 1 {
            parts.push(i - last);
            last = i;
        }
    }
    parts.push(n - last);
    multinomial(&parts)
}

/// Calls `f` on every permutation of `items`, appended to `prefix`.
fn for_each_permutation(prefix: &mut Vec<usize>, items: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if items.is_empty() {
        f(prefix);
        return;
    }
    for k in 0..items.len() {
        let x = items.remove(k);
        prefix.push(x);
        for_each_permutation(prefix, items, f);
        prefix.pop();
        items.insert(k, x);
    }
}

/// Number of pairs `(sigma, tau)` with `des(sigma) ⊆ des(tau)`, and with
/// `tau(1) = 1` when `restricted`.
pub fn descent_pair_count(n: usize, restricted: bool) -> Result<BigInt> {
    if n > MAX_PAIR_COUNT_SIZE {
        return Err(Error::SizeCap { what: "permutation size", size: n as u128, cap: MAX_PAIR_COUNT_SIZE as u128 });
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let alpha: Vec<BigInt> = (0..1u32 << (n - 1)).map(|m| descents_contained_count(n, m)).collect();
    let firsts: Vec<usize> = if restricted { vec![0] } else { (0..n).collect() };
    let total = firsts
        .par_iter()
        .map(|&first| {
            let mut sum = BigInt::zero();
            let mut items: Vec<usize> = (0..n).filter(|&x| x != first).collect();
            for_each_permutation(&mut vec![first], &mut items, &mut |tau| {
                sum += &alpha[descent_mask(tau) as usize];
            });
            sum
        })
        .reduce(BigInt::zero, |a, b| a + b);
    Ok(total)
}
