//! Homogeneous symmetric functions with exact rational coefficients in the
//! complete (`H`), elementary (`E`), power-sum (`P`) and Schur (`S`) bases.
//!
//! Changes of basis go through the Schur basis using Kostka numbers and the
//! Murnaghan-Nakayama rule.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::partitions::{partitions, Partition};
use crate::error::{Error, Result};
use crate::linalg;
use crate::Rational;

/// Largest supported degree for changes of basis.
pub const MAX_DEGREE: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    H,
    E,
    P,
    S,
}

impl Basis {
    fn letter(self) -> &'static str {
        match self {
            Basis::H => "H",
            Basis::E => "E",
            Basis::P => "P",
            Basis::S => "S",
        }
    }
}

/// Kostka number `K_{lambda, mu}`: semistandard tableaux of shape `lambda`
/// and content `mu`.
pub fn kostka(lambda: &[usize], mu: &[usize]) -> u64 {
    let Some((&last, rest)) = mu.split_last() else {
        return u64::from(lambda.iter().all(|&p| p == 0));
    };
    // Remove a horizontal strip of size `last` holding the largest entries.
    let len = lambda.len();
    let mut total = 0;
    let mut nu = vec![0usize; len];
    fn strips(
        lambda: &[usize],
        i: usize,
        left: usize,
        nu: &mut Vec<usize>,
        rest: &[usize],
        total: &mut u64,
    ) {
        if i == lambda.len() {
            if left == 0 {
                *total += kostka(nu, rest);
            }
            return;
        }
        let lower = lambda.get(i + 1).copied().unwrap_or(0);
        for v in lower..=lambda[i] {
            let take = lambda[i] - v;
            if take > left {
                continue;
            }
            nu[i] = v;
            strips(lambda, i + 1, left - take, nu, rest, total);
        }
    }
    strips(lambda, 0, last, &mut nu, rest, &mut total);
    total
}

/// Irreducible character `chi^lambda` at cycle type `mu`.
pub fn character(lambda: &[usize], mu: &[usize]) -> i64 {
    let l = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + (l - 1 - i)).collect();
    mn(&beta, mu)
}

fn mn(beta: &[usize], mu: &[usize]) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let crossed = beta.iter().filter(|&&c| c > b - r && c < b).count();
        let mut next = beta.to_vec();
        next[i] = b - r;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let v = mn(&next, rest);
        total += if crossed % 2 == 0 { v } else { -v };
    }
    total
}

/// `f^lambda`, the number of standard tableaux.
pub fn num_standard_tableaux(lambda: &Partition) -> u64 {
    kostka(lambda.parts(), &vec![1; lambda.size()])
}

/// Rows indexed by `partitions(n)`: `X_mu = sum_lambda m[mu][lambda] S_lambda`.
fn to_schur_matrix(basis: Basis, n: usize) -> Vec<Vec<Rational>> {
    let parts = partitions(n);
    let q = |x: i64| Rational::from_integer(BigInt::from(x));
    parts
        .iter()
        .map(|mu| {
            parts
                .iter()
                .map(|lambda| match basis {
                    Basis::H => q(kostka(lambda.parts(), mu.parts()) as i64),
                    Basis::E => q(kostka(lambda.transpose().parts(), mu.parts()) as i64),
                    Basis::P => q(character(lambda.parts(), mu.parts())),
                    Basis::S => q(i64::from(lambda == mu)),
                })
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    degree: usize,
    coeffs: BTreeMap<Partition, Rational>,
}

impl SymFunc {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        SymFunc { basis, degree, coeffs: BTreeMap::new() }
    }

    pub fn monomial(basis: Basis, lambda: Partition) -> Self {
        let mut s = Self::zero(basis, lambda.size());
        s.add_term(lambda, Rational::one());
        s
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, Rational)>>(basis: Basis, degree: usize, terms: I) -> Self {
        let mut s = Self::zero(basis, degree);
        for (l, c) in terms {
            s.add_term(l, c);
        }
        s
    }

    pub fn add_term(&mut self, lambda: Partition, c: Rational) {
        assert_eq!(lambda.size(), self.degree, "term of the wrong degree");
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(lambda.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&lambda);
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficient(&self, lambda: &Partition) -> Rational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::from_terms(self.basis, self.degree, self.terms().map(|(l, c)| (l.clone(), c * k)))
    }

    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        if self.degree != other.degree {
            return Err(Error::InvalidArgument("degrees differ".into()));
        }
        let other = other.to_basis(self.basis)?;
        let mut out = self.clone();
        for (l, c) in other.terms() {
            out.add_term(l.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Expresses the same symmetric function in another basis.
    pub fn to_basis(&self, target: Basis) -> Result<SymFunc> {
        if target == self.basis {
            return Ok(self.clone());
        }
        let n = self.degree;
        if n > MAX_DEGREE {
            return Err(Error::SizeCap { what: "symmetric function degree", size: n as u128, cap: MAX_DEGREE as u128 });
        }
        let parts = partitions(n);
        let pos = |l: &Partition| parts.iter().position(|p| p == l).unwrap();
        let to_s = to_schur_matrix(self.basis, n);
        let mut schur = vec![Rational::zero(); parts.len()];
        for (mu, c) in self.terms() {
            for (k, v) in to_s[pos(mu)].iter().enumerate() {
                if !v.is_zero() {
                    schur[k] += c * v;
                }
            }
        }
        let coords = if target == Basis::S {
            schur
        } else {
            let inv = linalg::inverse(&to_schur_matrix(target, n)).expect("basis change is invertible");
            // S_lambda = sum_mu inv[lambda][mu] X_mu.
            (0..parts.len())
                .map(|mu| (0..parts.len()).map(|lambda| &schur[lambda] * &inv[lambda][mu]).sum())
                .collect()
        };
        Ok(SymFunc::from_terms(target, n, parts.into_iter().zip(coords)))
    }

    /// The involution with `omega(H_lambda) = E_lambda`.
    pub fn omega(&self) -> Result<SymFunc> {
        let s = self.to_basis(Basis::S)?;
        let t = SymFunc::from_terms(Basis::S, self.degree, s.terms().map(|(l, c)| (l.transpose(), c.clone())));
        t.to_basis(self.basis)
    }

    /// Hall inner product.
    pub fn inner(&self, other: &SymFunc) -> Result<Rational> {
        let a = self.to_basis(Basis::S)?;
        let b = other.to_basis(Basis::S)?;
        Ok(a.terms().map(|(l, c)| c * b.coefficient(l)).sum())
    }

    /// Dimension of the corresponding virtual representation.
    pub fn dimension(&self) -> Result<Rational> {
        let s = self.to_basis(Basis::S)?;
        Ok(s.terms()
            .map(|(l, c)| c * Rational::from_integer(num_standard_tableaux(l).into()))
            .sum())
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let letter = self.basis.letter();
        for (k, (l, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "{letter}[{l}]")?;
        }
        Ok(())
    }
}

/// Polynomials in `H_1, H_2, ...` of mixed degree; the monomial
/// `H_{lambda_1} H_{lambda_2} ...` is keyed by `lambda`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HPolynomial {
    coeffs: BTreeMap<Partition, Rational>,
}

impl HPolynomial {
    pub fn constant(c: Rational) -> Self {
        let mut p = Self::default();
        p.add_term(Partition::default(), c);
        p
    }

    pub fn h(k: usize) -> Self {
        let mut p = Self::default();
        p.add_term(Partition(vec![k]), Rational::one());
        p
    }

    pub fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(lambda.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&lambda);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.coeffs.iter()
    }

    /// The homogeneous part of degree `n` as an `H`-basis symmetric function.
    pub fn homogeneous_part(&self, n: usize) -> SymFunc {
        SymFunc::from_terms(
            Basis::H,
            n,
            self.terms().filter(|(l, _)| l.size() == n).map(|(l, c)| (l.clone(), c.clone())),
        )
    }
}

impl super::series::Ring for HPolynomial {
    fn zero_element() -> Self {
        Self::default()
    }

    fn unit() -> Self {
        Self::constant(Rational::one())
    }

    fn vanishes(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in other.terms() {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    fn times(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                out.add_term(a.union(b), x * y);
            }
        }
        out
    }

    fn scale(&self, k: &Rational) -> Self {
        let mut out = Self::default();
        for (l, c) in self.terms() {
            out.add_term(l.clone(), c * k);
        }
        out
    }
}
