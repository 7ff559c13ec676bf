use super::{Coefficient, InnerDiff, Result, SeriesError, USeries};
use crate::arith::{rat, Rational};
use num::{One, Signed, Zero};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    Mixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    Symmetric,
    Antisymmetric,
    None,
}

/// Laurent polynomial in w = p^(1/2). Exponents are stored in w-units, so p^n sits at 2n.
///
/// A windowed value (`validity = Some(v)`) is a truncated |p| < 1 expansion whose
/// coefficients are trusted only for |exponent| <= v. Terms outside are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct PLaurent {
    terms: BTreeMap<i64, Rational>,
    validity: Option<i64>,
}

impl PLaurent {
    pub fn zero() -> Self {
        PLaurent { terms: BTreeMap::new(), validity: None }
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0)
    }

    pub fn monomial(c: Rational, w_exp: i64) -> Self {
        let mut p = Self::zero();
        p.push(w_exp, c);
        p
    }

    /// Finite value from (w-exponent, integer coefficient) pairs.
    pub fn from_pairs(pairs: &[(i64, i64)]) -> Self {
        Self::from_terms(pairs.iter().map(|&(e, c)| (e, rat(c))))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.push(e, c);
        }
        p
    }

    /// Windowed value trusted on |exponent| <= validity; terms outside are dropped.
    pub fn windowed(terms: impl IntoIterator<Item = (i64, Rational)>, validity: i64) -> Result<Self> {
        if validity < 0 {
            return Err(SeriesError::EmptyWindow { validity, required: 0 });
        }
        let mut p = Self::from_terms(terms.into_iter().filter(|(e, _)| e.abs() <= validity));
        p.validity = Some(validity);
        Ok(p)
    }

    fn push(&mut self, e: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> &BTreeMap<i64, Rational> {
        &self.terms
    }

    pub fn validity(&self) -> Option<i64> {
        self.validity
    }

    pub fn is_finite(&self) -> bool {
        self.validity.is_none()
    }

    /// Coefficient of w^e. Errors outside the trusted window.
    pub fn coeff(&self, e: i64) -> Result<Rational> {
        if let Some(v) = self.validity {
            if e.abs() > v {
                return Err(SeriesError::OutOfRange(format!("w^{e} outside validity {v}")));
            }
        }
        Ok(self.terms.get(&e).cloned().unwrap_or_else(Rational::zero))
    }

    pub fn max_abs_exponent(&self) -> i64 {
        self.terms.keys().map(|e| e.abs()).max().unwrap_or(0)
    }

    pub fn parity(&self) -> Parity {
        let even = self.terms.keys().all(|e| e % 2 == 0);
        let odd = self.terms.keys().all(|e| e % 2 != 0);
        match (even, odd) {
            (true, _) => Parity::Even,
            (false, true) => Parity::Odd,
            _ => Parity::Mixed,
        }
    }

    pub fn symmetry(&self) -> Symmetry {
        let get = |e: &i64| self.terms.get(&-e).cloned().unwrap_or_else(Rational::zero);
        if self.terms.iter().all(|(e, c)| &get(e) == c) {
            Symmetry::Symmetric
        } else if self.terms.iter().all(|(e, c)| get(e) == -c) {
            Symmetry::Antisymmetric
        } else {
            Symmetry::None
        }
    }

    pub fn mul_monomial(&self, c: &Rational, w_exp: i64) -> Self {
        let terms = self.terms.iter().map(|(e, x)| (e + w_exp, x * c)).collect();
        let validity = self.validity.map(|v| v - w_exp.abs());
        let mut out = PLaurent { terms, validity };
        if let Some(v) = validity {
            out.terms.retain(|e, _| e.abs() <= v);
        }
        out
    }

    /// w -> w^k. A window of validity v becomes k*v: the new gaps are exact zeros.
    pub fn dilate_p(&self, k: i64) -> Self {
        assert!(k >= 1);
        PLaurent {
            terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect(),
            validity: self.validity.map(|v| v * k),
        }
    }

    /// p -> -p. Only defined on pure p-powers.
    pub fn sign_flip_p(&self) -> Result<Self> {
        if self.parity() != Parity::Even {
            return Err(SeriesError::Precondition("sign flip needs integral p-powers".into()));
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (*e, if (e / 2) % 2 == 0 { c.clone() } else { -c }))
            .collect();
        Ok(PLaurent { terms, validity: self.validity })
    }

    /// c0 + sum c_n (p^n + p^-n)  ->  c0 + sum c_n 2cos(nu).
    pub fn symmetric_to_u(&self, u_order: usize) -> Result<USeries> {
        if !self.is_finite() {
            return Err(SeriesError::Precondition("u-conversion of a window-truncated value".into()));
        }
        if self.parity() != Parity::Even || self.symmetry() != Symmetry::Symmetric {
            return Err(SeriesError::Precondition(
                "u-conversion needs a symmetric Laurent polynomial in p".into(),
            ));
        }
        let mut out = USeries::zero(u_order);
        for (e, c) in self.terms.range(0..) {
            let n = e / 2;
            if n == 0 {
                out = out.add(&USeries::constant(c.clone(), u_order));
            } else {
                out = out.add(&USeries::two_cos(n, u_order).scale(c));
            }
        }
        Ok(out)
    }

    /// sum c_k (w^k - w^-k)  ->  sum c_k 2sin(ku/2), the u-form divided by i.
    pub fn antisymmetric_to_u(&self, u_order: usize) -> Result<USeries> {
        if !self.is_finite() {
            return Err(SeriesError::Precondition("u-conversion of a window-truncated value".into()));
        }
        // zero is antisymmetric too
        if !self.terms.is_empty() && self.symmetry() != Symmetry::Antisymmetric {
            return Err(SeriesError::Precondition("expected an antisymmetric Laurent polynomial".into()));
        }
        let mut out = USeries::zero(u_order);
        for (e, c) in self.terms.range(1..) {
            out = out.add(&USeries::two_sin_half(*e, u_order).scale(c));
        }
        Ok(out)
    }

    fn join_validity(a: Option<i64>, b: Option<i64>) -> Option<i64> {
        match (a, b) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, None) => x,
            (None, y) => y,
        }
    }
}

/// Terms in increasing w-degree, e.g. `-w^-1 + w`, with ` (|e| <= v)` for windowed values.
impl std::fmt::Display for PLaurent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            write!(f, "0")?;
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let (sign, abs) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            match (i, sign) {
                (0, "-") => write!(f, "-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            match (*e, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "w")?,
                (1, false) => write!(f, "{abs}w")?,
                (_, true) => write!(f, "w^{e}")?,
                (_, false) => write!(f, "{abs}w^{e}")?,
            }
        }
        if let Some(v) = self.validity {
            write!(f, " (|e| <= {v})")?;
        }
        Ok(())
    }
}

impl Coefficient for PLaurent {
    const REGIME: &'static str = "pq";

    fn zero_like(&self) -> Self {
        PLaurent::zero()
    }

    fn one_like(&self) -> Self {
        PLaurent::one()
    }

    fn is_exact_zero(&self) -> bool {
        self.terms.is_empty() && self.validity.is_none()
    }

    fn add(&self, rhs: &Self) -> Self {
        let validity = Self::join_validity(self.validity, rhs.validity);
        let mut out = self.clone();
        out.validity = validity;
        for (e, c) in &rhs.terms {
            out.push(*e, c.clone());
        }
        if let Some(v) = validity {
            out.terms.retain(|e, _| e.abs() <= v);
        }
        out
    }

    fn neg(&self) -> Self {
        PLaurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
            validity: self.validity,
        }
    }

    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        let validity = match (self.validity, rhs.validity) {
            (Some(_), Some(_)) => return Err(SeriesError::WindowProduct),
            (Some(v), None) => Some(v - rhs.max_abs_exponent()),
            (None, Some(v)) => Some(v - self.max_abs_exponent()),
            (None, None) => None,
        };
        if let Some(v) = validity {
            if v < 0 {
                return Err(SeriesError::EmptyWindow { validity: v, required: -v });
            }
        }
        let mut out = PLaurent { terms: BTreeMap::new(), validity };
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = e1 + e2;
                if validity.is_none_or(|v| e.abs() <= v) {
                    out.push(e, c1 * c2);
                }
            }
        }
        Ok(out)
    }

    fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return PLaurent { terms: BTreeMap::new(), validity: self.validity };
        }
        PLaurent {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
            validity: self.validity,
        }
    }

    fn try_inverse(&self) -> Result<Self> {
        if self.is_finite() && self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            return Ok(PLaurent::monomial(c.recip(), -e));
        }
        Err(SeriesError::NotInvertible("Laurent constant term is not a monomial".into()))
    }

    fn first_difference(&self, other: &Self) -> Option<InnerDiff> {
        let bound = Self::join_validity(self.validity, other.validity);
        let keys: std::collections::BTreeSet<i64> =
            self.terms.keys().chain(other.terms.keys()).copied().collect();
        for e in keys {
            if bound.is_some_and(|v| e.abs() > v) {
                continue;
            }
            let a = self.terms.get(&e).cloned().unwrap_or_else(Rational::zero);
            let b = other.terms.get(&e).cloned().unwrap_or_else(Rational::zero);
            if a != b {
                return Some(InnerDiff { inner: Some(e), expected: a, got: b });
            }
        }
        None
    }

    fn window(&self) -> Option<i64> {
        self.validity
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        assert_eq!(PLaurent::from_pairs(&[(1, 1), (-1, -1)]).to_string(), "-w^-1 + w");
        assert_eq!(PLaurent::from_pairs(&[(0, 2), (4, -3)]).to_string(), "2 - 3w^4");
        assert_eq!(PLaurent::zero().to_string(), "0");
        assert_eq!(PLaurent::windowed([(2, rat(1))], 4).unwrap().to_string(), "w^2 (|e| <= 4)");
    }

    #[test]
    fn window_shrinks_by_finite_support() {
        let geo = PLaurent::windowed((1..=12).map(|k| (2 * k, rat(k))), 24).unwrap();
        let f = PLaurent::from_pairs(&[(4, 1), (0, -2), (-4, 1)]);
        let prod = geo.try_mul(&f).unwrap();
        assert_eq!(prod.validity(), Some(20));
        assert!(geo.try_mul(&geo).is_err());
        let wide = PLaurent::windowed((1..=20).map(|k| (2 * k, rat(k))), 40).unwrap();
        let check = wide.try_mul(&f).unwrap();
        assert!(prod.first_difference(&check).is_none());
        let tiny = PLaurent::windowed([(2, rat(1))], 2).unwrap();
        assert!(matches!(tiny.try_mul(&f), Err(SeriesError::EmptyWindow { .. })));
    }

    #[test]
    fn window_terms_outside_are_unreadable() {
        let geo = PLaurent::windowed((1..=3).map(|k| (2 * k, rat(k))), 6).unwrap();
        assert_eq!(geo.coeff(6).unwrap(), rat(3));
        assert!(geo.coeff(8).is_err());
    }

    #[test]
    fn flags() {
        let k0 = PLaurent::from_pairs(&[(1, 1), (-1, -1)]);
        assert_eq!(k0.parity(), Parity::Odd);
        assert_eq!(k0.symmetry(), Symmetry::Antisymmetric);
        let sq = k0.try_mul(&k0).unwrap();
        assert_eq!(sq, PLaurent::from_pairs(&[(2, 1), (0, -2), (-2, 1)]));
        assert_eq!(sq.symmetry(), Symmetry::Symmetric);
        assert!(k0.sign_flip_p().is_err());
        let flipped = sq.sign_flip_p().unwrap();
        assert_eq!(flipped, PLaurent::from_pairs(&[(2, -1), (0, -2), (-2, -1)]));
        assert_eq!(PLaurent::from_pairs(&[(2, 1)]).symmetry(), Symmetry::None);
    }

    #[test]
    fn sine_conversion_of_leading_factor() {
        let k0 = PLaurent::from_pairs(&[(1, 1), (-1, -1)]);
        let u = k0.antisymmetric_to_u(5).unwrap();
        assert_eq!(u, USeries::two_sin_half(1, 5));
        assert_eq!(u.coeff(3).unwrap(), &crate::arith::frac(-1, 24));
    }
}
