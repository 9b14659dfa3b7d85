//! Truncated formal power series over a commutative `Q`-algebra.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// The operations a coefficient ring must provide.
pub trait Ring: Clone + PartialEq {
    fn zero_element() -> Self;
    fn unit() -> Self;
    fn vanishes(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scale(&self, k: &Rational) -> Self;

    fn negated(&self) -> Self {
        self.scale(&-Rational::one())
    }

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }
}

impl Ring for Rational {
    fn zero_element() -> Self {
        Zero::zero()
    }

    fn unit() -> Self {
        One::one()
    }

    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn times(&self, other: &Self) -> Self {
        self * other
    }

    fn scale(&self, k: &Rational) -> Self {
        self * k
    }
}

/// `a_0 + a_1 z + ... + a_N z^N`, computed modulo `z^{N+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<C> {
    coeffs: Vec<C>,
}

fn q(n: usize) -> Rational {
    Rational::from_integer(n.into())
}

impl<C: Ring> Series<C> {
    /// Pads or truncates to order `n`.
    pub fn new(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero_element());
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Series { coeffs: (0..=n).map(|k| self.coeffs[k].plus(&other.coeffs[k])).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Series { coeffs: (0..=n).map(|k| self.coeffs[k].minus(&other.coeffs[k])).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k).fold(C::zero_element(), |acc, i| {
                    if self.coeffs[i].vanishes() || other.coeffs[k - i].vanishes() {
                        acc
                    } else {
                        acc.plus(&self.coeffs[i].times(&other.coeffs[k - i]))
                    }
                })
            })
            .collect();
        Series { coeffs }
    }

    /// `1 / f`, requires `a_0 = 1`.
    pub fn reciprocal(&self) -> Result<Self> {
        if self.coeffs[0] != C::unit() {
            return Err(Error::InvalidArgument("reciprocal needs constant term 1".into()));
        }
        let mut g = vec![C::unit()];
        for k in 1..=self.order() {
            let s = (1..=k).fold(C::zero_element(), |acc, i| acc.plus(&self.coeffs[i].times(&g[k - i])));
            g.push(s.negated());
        }
        Ok(Series { coeffs: g })
    }

    /// `log f`, requires `a_0 = 1`; uses `k g_k = k f_k - sum_{i<k} i g_i f_{k-i}`.
    pub fn log(&self) -> Result<Self> {
        if self.coeffs[0] != C::unit() {
            return Err(Error::InvalidArgument("log needs constant term 1".into()));
        }
        let mut g = vec![C::zero_element()];
        for k in 1..=self.order() {
            let mut s = self.coeffs[k].scale(&q(k));
            for i in 1..k {
                s = s.minus(&g[i].times(&self.coeffs[k - i]).scale(&q(i)));
            }
            g.push(s.scale(&(Rational::one() / q(k))));
        }
        Ok(Series { coeffs: g })
    }

    /// `exp f`, requires `a_0 = 0`; uses `k g_k = sum_{i<=k} i f_i g_{k-i}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].vanishes() {
            return Err(Error::InvalidArgument("exp needs constant term 0".into()));
        }
        let mut g = vec![C::unit()];
        for k in 1..=self.order() {
            let s = (1..=k).fold(C::zero_element(), |acc, i| acc.plus(&self.coeffs[i].times(&g[k - i]).scale(&q(i))));
            g.push(s.scale(&(Rational::one() / q(k))));
        }
        Ok(Series { coeffs: g })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    fn factorial(n: usize) -> Rational {
        (1..=n).map(q).product()
    }

    #[test]
    fn log_of_exponential() {
        // log(e^z) = z.
        let e = Series::new((0..8).map(|k| Rational::one() / factorial(k)).collect(), 7);
        let l = e.log().unwrap();
        assert_eq!(l.coeffs()[1], Rational::one());
        assert!(l.coeffs().iter().enumerate().all(|(k, c)| k == 1 || c.is_zero()));
        assert_eq!(l.exp().unwrap(), e);
    }

    #[test]
    fn reciprocal_geometric() {
        let f = Series::new(vec![r(1, 1), r(-1, 1)], 6);
        let g = f.reciprocal().unwrap();
        assert!(g.coeffs().iter().all(|c| *c == r(1, 1)));
        assert_eq!(f.mul(&g), Series::new(vec![r(1, 1)], 6));
    }

    #[test]
    fn log_requires_unit() {
        let f = Series::new(vec![r(2, 1)], 3);
        assert!(f.log().is_err());
        assert!(f.reciprocal().is_err());
        assert!(f.exp().is_err());
    }
}
