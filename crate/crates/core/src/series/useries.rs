use super::{Coefficient, InnerDiff, Parity, Result, SeriesError};
use crate::arith::{factorial, frac, rat, Rational};
use num::{BigInt, One, Zero};

/// Truncated power series in u, known through u^order.
#[derive(Debug, Clone, PartialEq)]
pub struct USeries {
    coeffs: Vec<Rational>,
}

impl USeries {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty());
        USeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        USeries { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series u (or r), known through the given order.
    pub fn variable(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        USeries { coeffs: coeffs.iter().map(|&c| rat(c)).collect() }
    }

    /// 2cos(nu).
    pub fn two_cos(n: i64, order: usize) -> Self {
        let mut s = Self::zero(order);
        for j in (0..=order).step_by(2) {
            let sgn = if (j / 2) % 2 == 0 { 1 } else { -1 };
            let num = BigInt::from(2 * sgn) * BigInt::from(n).pow(j as u32);
            s.coeffs[j] = Rational::new(num, factorial(j as u64));
        }
        s
    }

    /// 2sin(ku/2).
    pub fn two_sin_half(k: i64, order: usize) -> Self {
        let mut s = Self::zero(order);
        for j in (1..=order).step_by(2) {
            let sgn = if (j / 2) % 2 == 0 { 1 } else { -1 };
            let num = BigInt::from(2 * sgn) * BigInt::from(k).pow(j as u32);
            let den = factorial(j as u64) * BigInt::from(2).pow(j as u32);
            s.coeffs[j] = Rational::new(num, den);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Result<&Rational> {
        self.coeffs
            .get(k)
            .ok_or_else(|| SeriesError::OutOfRange(format!("u^{k} beyond order {}", self.order())))
    }

    pub fn truncate(&self, order: usize) -> Self {
        USeries { coeffs: self.coeffs[..=order.min(self.order())].to_vec() }
    }

    pub fn parity(&self) -> Parity {
        let nz = |k: &usize| !self.coeffs[*k].is_zero();
        let idx: Vec<usize> = (0..self.coeffs.len()).filter(nz).collect();
        if idx.iter().all(|k| k % 2 == 0) {
            Parity::Even
        } else if idx.iter().all(|k| k % 2 == 1) {
            Parity::Odd
        } else {
            Parity::Mixed
        }
    }

    /// Lowest power with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        USeries { coeffs: out }
    }

    /// Substitutes `inner` (zero constant term) for the variable of `self`.
    pub fn compose(&self, inner: &USeries) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::Precondition("inner series has a nonzero constant term".into()));
        }
        let n = self.order().min(inner.order());
        let inner = inner.truncate(n);
        let mut out = USeries::zero(n);
        let mut power = USeries::constant(Rational::one(), n);
        for a in self.coeffs.iter().take(n + 1) {
            if !a.is_zero() {
                out = out.add(&power.scale(a));
            }
            power = power.mul(&inner);
        }
        Ok(out)
    }

    fn check_revertible(&self) -> Result<()> {
        if self.parity() != Parity::Odd || self.coeffs.get(1) != Some(&Rational::one()) {
            return Err(SeriesError::Precondition(
                "reversion needs an odd series with linear coefficient 1".into(),
            ));
        }
        Ok(())
    }

    /// Compositional inverse by fixed-point substitution b = r - h(b), a = u + h.
    pub fn revert_odd(&self) -> Result<Self> {
        self.check_revertible()?;
        let n = self.order();
        let r = USeries::variable(n);
        let h = self.sub(&r);
        let mut b = r.clone();
        for _ in 0..n {
            b = r.sub(&h.compose(&b)?);
        }
        Ok(b)
    }

    /// Compositional inverse by Lagrange inversion: [r^n] b = (1/n) [u^(n-1)] (u/a)^n.
    pub fn revert_lagrange(&self) -> Result<Self> {
        self.check_revertible()?;
        let n = self.order();
        // a/u, known through u^(n-1)
        let shifted = USeries { coeffs: self.coeffs[1..].to_vec() };
        let q = shifted.try_inverse()?;
        let mut out = USeries::zero(n);
        let mut power = USeries::constant(Rational::one(), n - 1);
        for k in 1..=n {
            power = power.mul(&q);
            out.coeffs[k] = power.coeffs[k - 1].clone() * frac(1, k as i64);
        }
        Ok(out)
    }
}

impl Coefficient for USeries {
    const REGIME: &'static str = "uq";

    fn zero_like(&self) -> Self {
        USeries::zero(self.order())
    }

    fn one_like(&self) -> Self {
        USeries::constant(Rational::one(), self.order())
    }

    fn is_exact_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        USeries { coeffs: (0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect() }
    }

    fn neg(&self) -> Self {
        USeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(rhs))
    }

    fn scale(&self, c: &Rational) -> Self {
        USeries { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    fn try_inverse(&self) -> Result<Self> {
        if self.coeffs[0].is_zero() {
            return Err(SeriesError::NotInvertible("u-series with zero constant term".into()));
        }
        let inv0 = self.coeffs[0].recip();
        let mut out = vec![inv0.clone()];
        for n in 1..=self.order() {
            let mut acc = Rational::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &out[n - k];
            }
            out.push(-acc * &inv0);
        }
        Ok(USeries { coeffs: out })
    }

    fn first_difference(&self, other: &Self) -> Option<InnerDiff> {
        let n = self.order().min(other.order());
        (0..=n).find(|&k| self.coeffs[k] != other.coeffs[k]).map(|k| InnerDiff {
            inner: Some(k as i64),
            expected: self.coeffs[k].clone(),
            got: other.coeffs[k].clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_examples() {
        let r2 = USeries::from_integers(&[0, 0, 1, 0, 0, 0, 0]);
        let s = USeries::two_sin_half(1, 6);
        let c = r2.compose(&s).unwrap();
        assert_eq!(c.coeff(2).unwrap(), &rat(1));
        assert_eq!(c.coeff(4).unwrap(), &frac(-1, 12));

        let r3 = USeries::from_integers(&[0, 0, 0, 1, 0, 0]);
        let inner = USeries::from_integers(&[0, 1, 0, 1, 0, 0]);
        assert_eq!(r3.compose(&inner).unwrap(), USeries::from_integers(&[0, 0, 0, 1, 0, 3]));

        let bad = USeries::from_integers(&[1, 1]);
        assert!(r3.compose(&bad).is_err());
    }

    #[test]
    fn arcsin_reversion() {
        let s = USeries::two_sin_half(1, 7);
        let b = s.revert_odd().unwrap();
        assert_eq!(b.coeff(1).unwrap(), &rat(1));
        assert_eq!(b.coeff(3).unwrap(), &frac(1, 24));
        assert_eq!(b.coeff(5).unwrap(), &frac(3, 640));
        assert_eq!(b, s.revert_lagrange().unwrap());
        assert_eq!(USeries::variable(5).revert_odd().unwrap(), USeries::variable(5));
    }

    #[test]
    fn reversion_roundtrip() {
        let a = USeries::new(vec![rat(0), rat(1), rat(0), frac(-1, 6), rat(0), rat(0), rat(0), rat(0), rat(0), rat(0)]);
        let b = a.revert_odd().unwrap();
        assert_eq!(a.compose(&b).unwrap(), USeries::variable(9));
        assert_eq!(b.compose(&a).unwrap(), USeries::variable(9));
        let even = USeries::from_integers(&[0, 1, 1]);
        assert!(even.revert_odd().is_err());
        let scaled = USeries::from_integers(&[0, 2, 0, 1]);
        assert!(scaled.revert_lagrange().is_err());
    }
}
