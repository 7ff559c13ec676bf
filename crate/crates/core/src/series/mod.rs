//! Exact truncated power series in q with coefficients in one of three regimes:
//! plain rationals, Laurent polynomials in w = p^(1/2), or truncated series in u.
//!
//! Every value carries its truncation order. Binary operations keep the smaller
//! order, so nothing is ever padded with zeros past what was actually computed.

pub mod json;
mod laurent;
mod useries;

pub use laurent::{PLaurent, Parity, Symmetry};
pub use useries::USeries;

use crate::arith::{rat, Rational};
use num::{One, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("regime mismatch: cannot combine {0} with {1}")]
    RegimeMismatch(&'static str, &'static str),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("product of two window-truncated Laurent values has no trusted coefficient")]
    WindowProduct,
    #[error("validity window exhausted (validity {validity}); a window of at least {required} is needed")]
    EmptyWindow { validity: i64, required: i64 },
    #[error("support |exponent| = {found} exceeds window {window}")]
    SupportExceedsWindow { found: i64, window: i64 },
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, SeriesError>;

/// Ring operations every coefficient regime provides.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + Send + Sync {
    const REGIME: &'static str;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_exact_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn try_mul(&self, rhs: &Self) -> Result<Self>;
    fn scale(&self, c: &Rational) -> Self;
    fn try_inverse(&self) -> Result<Self>;
    /// First place where two coefficients disagree inside their common trusted region.
    fn first_difference(&self, other: &Self) -> Option<InnerDiff>;
    /// Validity bound if this coefficient is window-truncated.
    fn window(&self) -> Option<i64> {
        None
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct InnerDiff {
    pub inner: Option<i64>,
    pub expected: Rational,
    pub got: Rational,
}

impl Coefficient for Rational {
    const REGIME: &'static str = "q";
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_exact_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        Ok(self * rhs)
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
    fn try_inverse(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            return Err(SeriesError::NotInvertible("zero constant term".into()));
        }
        Ok(self.recip())
    }
    fn first_difference(&self, other: &Self) -> Option<InnerDiff> {
        (self != other).then(|| InnerDiff { inner: None, expected: self.clone(), got: other.clone() })
    }
}

/// A power series in q known through q^order.
#[derive(Debug, Clone, PartialEq)]
pub struct QSeries<C> {
    coeffs: Vec<C>,
}

/// Result of comparing two series over their common trusted region.
#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub q_order: usize,
    /// Smallest validity window met among the compared coefficients, if any was windowed.
    pub window: Option<i64>,
    pub mismatch: Option<Discrepancy>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Discrepancy {
    pub q_exp: usize,
    pub inner_exp: Option<i64>,
    pub expected: Rational,
    pub got: Rational,
}

impl Comparison {
    pub fn agrees(&self) -> bool {
        self.mismatch.is_none()
    }
}

impl<C: Coefficient> QSeries<C> {
    /// Builds a series from its coefficients; the order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least its constant term");
        QSeries { coeffs }
    }

    /// `c` as a series known through q^order.
    pub fn constant(c: C, order: usize) -> Self {
        let z = c.zero_like();
        let mut coeffs = vec![z; order + 1];
        coeffs[0] = c;
        QSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> Result<&C> {
        self.coeffs
            .get(d)
            .ok_or_else(|| SeriesError::OutOfRange(format!("q^{d} beyond order {}", self.order())))
    }

    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order());
        QSeries { coeffs: self.coeffs[..=n].to_vec() }
    }

    pub fn one(&self) -> Self {
        QSeries::constant(self.coeffs[0].one_like(), self.order())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        QSeries { coeffs: (0..=n).map(|i| self.coeffs[i].add(&rhs.coeffs[i])).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        QSeries { coeffs: self.coeffs.iter().map(C::neg).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QSeries { coeffs: self.coeffs.iter().map(|x| x.scale(c)).collect() }
    }

    /// Multiplies every q-coefficient by a fixed coefficient.
    pub fn mul_coeff(&self, c: &C) -> Result<Self> {
        Ok(QSeries { coeffs: self.coeffs.iter().map(|x| x.try_mul(c)).collect::<Result<_>>()? })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        let n = self.order().min(rhs.order());
        let mut out = Vec::with_capacity(n + 1);
        for d in 0..=n {
            let mut acc: Option<C> = None;
            for i in 0..=d {
                let (a, b) = (&self.coeffs[i], &rhs.coeffs[d - i]);
                if a.is_exact_zero() || b.is_exact_zero() {
                    continue;
                }
                let t = a.try_mul(b)?;
                acc = Some(match acc {
                    None => t,
                    Some(s) => s.add(&t),
                });
            }
            out.push(acc.unwrap_or_else(|| self.coeffs[0].zero_like()));
        }
        Ok(QSeries { coeffs: out })
    }

    /// Multiplicative inverse through the same order. The constant term must be a unit.
    pub fn invert(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].try_inverse()?;
        let mut out = vec![inv0.clone()];
        for n in 1..=self.order() {
            let mut acc = self.coeffs[0].zero_like();
            for k in 1..=n {
                if self.coeffs[k].is_exact_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[k].try_mul(&out[n - k])?);
            }
            out.push(acc.try_mul(&inv0)?.neg());
        }
        Ok(QSeries { coeffs: out })
    }

    /// Integer power; negative exponents go through `invert`.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.invert()? } else { self.clone() };
        let mut acc = self.one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }

    /// q d/dq.
    pub fn q_derivative(&self) -> Self {
        QSeries {
            coeffs: self.coeffs.iter().enumerate().map(|(d, c)| c.scale(&rat(d as i64))).collect(),
        }
    }

    /// q -> q^k. Known through q^(k*order + k - 1) since the skipped slots are exact zeros.
    pub fn dilate_q(&self, k: usize) -> Self {
        assert!(k >= 1);
        let z = self.coeffs[0].zero_like();
        let n = k * self.order() + k - 1;
        let mut coeffs = vec![z; n + 1];
        for (d, c) in self.coeffs.iter().enumerate() {
            coeffs[k * d] = c.clone();
        }
        QSeries { coeffs }
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> Result<D>) -> Result<QSeries<D>> {
        Ok(QSeries { coeffs: self.coeffs.iter().map(f).collect::<Result<_>>()? })
    }

    /// Coefficientwise comparison through the common order and common windows.
    pub fn compare(&self, other: &Self) -> Comparison {
        let n = self.order().min(other.order());
        let mut window: Option<i64> = None;
        for d in 0..=n {
            let (a, b) = (&self.coeffs[d], &other.coeffs[d]);
            for w in [a.window(), b.window()].into_iter().flatten() {
                window = Some(window.map_or(w, |v: i64| v.min(w)));
            }
            if let Some(diff) = a.first_difference(b) {
                return Comparison {
                    q_order: n,
                    window,
                    mismatch: Some(Discrepancy {
                        q_exp: d,
                        inner_exp: diff.inner,
                        expected: diff.expected,
                        got: diff.got,
                    }),
                };
            }
        }
        Comparison { q_order: n, window, mismatch: None }
    }
}

impl QSeries<Rational> {
    pub fn from_rationals(coeffs: Vec<Rational>) -> Self {
        QSeries::new(coeffs)
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        QSeries::new(coeffs.iter().map(|&c| rat(c)).collect())
    }
}

impl QSeries<PLaurent> {
    /// p -> p^kp (w -> w^kp) and q -> q^kq.
    pub fn dilate(&self, kp: i64, kq: usize) -> Self {
        let inner = QSeries { coeffs: self.coeffs.iter().map(|c| c.dilate_p(kp)).collect() };
        inner.dilate_q(kq)
    }

    /// p -> -p on every coefficient.
    pub fn sign_flip_p(&self) -> Result<Self> {
        self.map(PLaurent::sign_flip_p)
    }

    /// Sends p^n + p^-n to 2cos(nu) on each coefficient.
    pub fn symmetric_p_to_u(&self, u_order: usize) -> Result<QSeries<USeries>> {
        self.map(|c| c.symmetric_to_u(u_order))
    }

    /// Sends w^k - w^-k to 2sin(ku/2), i.e. the u-form divided by i.
    pub fn antisymmetric_w_to_u(&self, u_order: usize) -> Result<QSeries<USeries>> {
        self.map(|c| c.antisymmetric_to_u(u_order))
    }
}

impl QSeries<USeries> {
    /// The q-series of u^k coefficients.
    pub fn u_coefficient(&self, k: usize) -> Result<QSeries<Rational>> {
        self.map(|c| c.coeff(k).cloned())
    }
}

/// One factor (1 - c w^w_exp q^q_exp)^power of an infinite product.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductFactor {
    pub coeff: Rational,
    pub w_exp: i64,
    pub q_exp: usize,
    pub power: i64,
}

impl ProductFactor {
    /// The family (1 - c w^w_exp q^m)^power for m = 1..=q_max.
    pub fn family(coeff: Rational, w_exp: i64, power: i64, q_max: usize) -> Vec<ProductFactor> {
        (1..=q_max).map(|m| ProductFactor { coeff: coeff.clone(), w_exp, q_exp: m, power }).collect()
    }
}

/// Expands `leading * prod (1 - c w^i q^m)^e` through q^q_max.
///
/// Every factor expands to finitely many terms below the q-truncation, so the result is
/// exact. `max_w` caps the allowed |w-exponent| of the output.
pub fn product_form(
    factors: &[ProductFactor],
    leading: &PLaurent,
    q_max: usize,
    max_w: Option<i64>,
) -> Result<QSeries<PLaurent>> {
    let mut acc = QSeries::constant(leading.clone(), q_max);
    for f in factors {
        if f.q_exp == 0 {
            return Err(SeriesError::Precondition("product factor with q-exponent 0".into()));
        }
        if f.power == 0 || f.q_exp > q_max {
            continue;
        }
        // (1 - x)^e = sum_j t_j x^j, x = c w^i q^m
        let jmax = q_max / f.q_exp;
        let mut terms = Vec::new();
        for j in 0..=jmax as u64 {
            let b = if f.power > 0 {
                crate::arith::binomial(f.power as u64, j)
            } else {
                crate::arith::binomial(f.power.unsigned_abs() + j - 1, j)
            };
            if b.is_zero() {
                break;
            }
            let sgn = if f.power > 0 && j % 2 == 1 { -Rational::one() } else { Rational::one() };
            let c = Rational::from_integer(b) * sgn * num::pow::pow(f.coeff.clone(), j as usize);
            terms.push((j as usize * f.q_exp, f.w_exp * j as i64, c));
        }
        let mut next = Vec::with_capacity(q_max + 1);
        for d in 0..=q_max {
            let mut s = PLaurent::zero();
            for (qe, we, c) in &terms {
                if *qe > d {
                    break;
                }
                let src = &acc.coeffs[d - qe];
                if !src.is_exact_zero() {
                    s = s.add(&src.mul_monomial(c, *we));
                }
            }
            next.push(s);
        }
        acc = QSeries { coeffs: next };
    }
    if let Some(w) = max_w {
        for c in &acc.coeffs {
            let m = c.max_abs_exponent();
            if m > w {
                return Err(SeriesError::SupportExceedsWindow { found: m, window: w });
            }
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::frac;

    fn k_squared(q: usize) -> QSeries<PLaurent> {
        let lead = PLaurent::from_pairs(&[(2, 1), (0, -2), (-2, 1)]);
        let mut f = ProductFactor::family(rat(1), 2, 2, q);
        f.extend(ProductFactor::family(rat(1), -2, 2, q));
        f.extend(ProductFactor::family(rat(1), 0, -4, q));
        product_form(&f, &lead, q, None).unwrap()
    }

    #[test]
    fn mul_and_order_rule() {
        let a = QSeries::from_integers(&[1, 1]);
        let b = QSeries::from_integers(&[1, -1, 0, 0]);
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab.order(), 1);
        assert_eq!(ab, QSeries::from_integers(&[1, 0]));
        let c = QSeries::from_integers(&[1, 1, 0, 0, 0, 0]);
        assert_eq!(c.coeff(5).unwrap(), &rat(0));
        assert!(c.coeff(6).is_err());
    }

    #[test]
    fn invert_geometric() {
        let a = QSeries::from_integers(&[1, -1, 0, 0, 0]);
        assert_eq!(a.invert().unwrap(), QSeries::from_integers(&[1, 1, 1, 1, 1]));
        let z = QSeries::from_integers(&[0, 1]);
        assert!(z.invert().is_err());
        let cube = QSeries::from_integers(&[1, 1, 0, 0, 0]).pow(3).unwrap();
        assert_eq!(cube, QSeries::from_integers(&[1, 3, 3, 1, 0]));
    }

    #[test]
    fn k_squared_low_orders() {
        let k2 = k_squared(3);
        assert_eq!(k2.coeff(0).unwrap(), &PLaurent::from_pairs(&[(2, 1), (0, -2), (-2, 1)]));
        let q1 = PLaurent::from_pairs(&[(4, -2), (2, 8), (0, -12), (-2, 8), (-4, -2)]);
        assert_eq!(k2.coeff(1).unwrap(), &q1);
        assert_eq!(k2.coeff(1).unwrap().coeff(4).unwrap(), rat(-2));
        assert_eq!(k2.coeff(1).unwrap().symmetry(), Symmetry::Symmetric);
        assert_eq!(k2.coeff(2).unwrap().parity(), Parity::Even);
    }

    #[test]
    fn product_form_matches_ring_square() {
        let lead = PLaurent::from_pairs(&[(1, 1), (-1, -1)]);
        let mut f = ProductFactor::family(rat(1), 2, 1, 5);
        f.extend(ProductFactor::family(rat(1), -2, 1, 5));
        f.extend(ProductFactor::family(rat(1), 0, -2, 5));
        let k = product_form(&f, &lead, 5, Some(24)).unwrap();
        assert_eq!(k.mul(&k).unwrap(), k_squared(5));
        assert!(product_form(&f, &lead, 5, Some(2)).is_err());
    }

    #[test]
    fn dilate_and_flip() {
        let k2 = k_squared(2);
        let d = k2.dilate(2, 2);
        assert_eq!(d.order(), 5);
        assert_eq!(d.coeff(0).unwrap(), &PLaurent::from_pairs(&[(4, 1), (0, -2), (-4, 1)]));
        assert!(d.coeff(1).unwrap().is_exact_zero());
        let f = k2.sign_flip_p().unwrap();
        assert_eq!(f.coeff(0).unwrap(), &PLaurent::from_pairs(&[(2, -1), (0, -2), (-2, -1)]));
        assert_eq!(f.sign_flip_p().unwrap(), k2);
        assert_eq!(f.coeff(1).unwrap().symmetry(), Symmetry::Symmetric);
    }

    #[test]
    fn p_to_u_on_constant_order() {
        let k2 = k_squared(1);
        let u = k2.symmetric_p_to_u(6).unwrap();
        let c0 = u.coeff(0).unwrap();
        assert_eq!(c0.coeff(0).unwrap(), &rat(0));
        assert_eq!(c0.coeff(2).unwrap(), &rat(-1));
        assert_eq!(c0.coeff(4).unwrap(), &frac(1, 12));
    }

    #[test]
    fn compare_reports_location() {
        let a = QSeries::from_integers(&[1, 2, 3]);
        let b = QSeries::from_integers(&[1, 2, 4, 5]);
        let cmp = a.compare(&b);
        assert_eq!(cmp.q_order, 2);
        let m = cmp.mismatch.unwrap();
        assert_eq!((m.q_exp, m.expected, m.got), (2, rat(3), rat(4)));
    }
}
