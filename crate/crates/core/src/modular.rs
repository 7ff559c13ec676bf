//! q-expansions of the special functions: Eisenstein series, the theta function K in
//! product form and in exponential form, the Weierstrass function, the D4 theta series
//! and the series S. Also a fitter recognising quasi-modular forms.

use crate::arith::{binomial, divisors, factorial, frac, rat, rat_to_string, sigma, Rational};
use crate::series::{product_form, Coefficient, PLaurent, ProductFactor, QSeries, Result, SeriesError, USeries};
use num::{BigInt, One, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use thiserror::Error;

/// Bernoulli number B_k for even k >= 2 (B_2 = 1/6).
pub fn bernoulli(k: u32) -> Result<Rational> {
    if k < 2 || k % 2 == 1 {
        return Err(SeriesError::Precondition(format!("Bernoulli index {k} must be even and >= 2")));
    }
    let mut b: Vec<Rational> = vec![Rational::one()];
    for m in 1..=k as u64 {
        let mut s = Rational::zero();
        for (j, bj) in b.iter().enumerate() {
            s += Rational::from_integer(binomial(m + 1, j as u64)) * bj;
        }
        b.push(-s / rat(m as i64 + 1));
    }
    Ok(b[k as usize].clone())
}

/// E_w = 1 - (2w / B_w) sum_d sigma_{w-1}(d) q^d.
pub fn eisenstein(weight: u32, q_max: usize) -> Result<QSeries<Rational>> {
    let b = bernoulli(weight)?;
    let factor = -rat(2 * weight as i64) / b;
    let mut c = vec![Rational::one()];
    for d in 1..=q_max as u64 {
        c.push(&factor * Rational::from_integer(sigma(weight - 1, d)));
    }
    Ok(QSeries::new(c))
}

/// K^n = (w - 1/w)^n prod_m (1 - p q^m)^n (1 - q^m/p)^n (1 - q^m)^(-2n).
pub fn theta_k_power_pq(n: i64, q_max: usize, window: Option<i64>) -> Result<QSeries<PLaurent>> {
    let lead = PLaurent::from_terms(
        (0..=n).map(|j| (n - 2 * j, Rational::from_integer(binomial(n as u64, j as u64)) * rat(crate::arith::sign(j)))),
    );
    let mut f = ProductFactor::family(rat(1), 2, n, q_max);
    f.extend(ProductFactor::family(rat(1), -2, n, q_max));
    f.extend(ProductFactor::family(rat(1), 0, -2 * n, q_max));
    product_form(&f, &lead, q_max, window)
}

/// The theta function K in product form, as a series in q over Laurent polynomials in w.
pub fn theta_k_pq(q_max: usize, window: i64) -> Result<QSeries<PLaurent>> {
    theta_k_power_pq(1, q_max, Some(window))
}

/// u^n exp(n sum_k (-1)^k B_2k / (2k (2k)!) E_2k u^2k): the u-form of (K/i)^n.
pub fn theta_k_power_u(n: usize, q_max: usize, u_max: usize) -> Result<QSeries<USeries>> {
    // x[j]: q-series coefficient of u^j in n * sum_k c_k E_2k u^2k
    let mut x: Vec<Option<QSeries<Rational>>> = vec![None; u_max + 1];
    for k in 1..=u_max / 2 {
        let b = bernoulli(2 * k as u32)?;
        let c = b * rat(crate::arith::sign(k as i64) * n as i64)
            / Rational::from_integer(BigInt::from(2 * k) * factorial(2 * k as u64));
        x[2 * k] = Some(eisenstein(2 * k as u32, q_max)?.scale(&c));
    }
    // f = exp(x) via n f_n = sum_k k x_k f_(n-k)
    let mut f: Vec<QSeries<Rational>> = vec![QSeries::constant(Rational::one(), q_max)];
    for m in 1..=u_max.saturating_sub(n) {
        let mut acc = QSeries::constant(Rational::zero(), q_max);
        for (k, xk) in x.iter().enumerate().take(m + 1).skip(1) {
            if let Some(xk) = xk {
                acc = acc.add(&xk.mul(&f[m - k])?.scale(&rat(k as i64)));
            }
        }
        f.push(acc.scale(&frac(1, m as i64)));
    }
    let coeffs = (0..=q_max)
        .map(|d| {
            let mut u = vec![Rational::zero(); u_max + 1];
            for (m, fm) in f.iter().enumerate() {
                u[m + n] = fm.coeffs()[d].clone();
            }
            USeries::new(u)
        })
        .collect();
    Ok(QSeries::new(coeffs))
}

/// K/i in the u-variable: u exp(sum_k (-1)^k B_2k / (2k (2k)!) E_2k u^2k).
pub fn theta_k_u(q_max: usize, u_max: usize) -> Result<QSeries<USeries>> {
    theta_k_power_u(1, q_max, u_max)
}

/// The Weierstrass function expanded in |p| < 1. The q^0 slot is windowed.
pub fn weierstrass_p(q_max: usize, window: i64) -> Result<QSeries<PLaurent>> {
    let mut c = vec![PLaurent::windowed(
        std::iter::once((0, frac(1, 12))).chain((1..=window / 2).map(|k| (2 * k, rat(k)))),
        window,
    )?];
    for d in 1..=q_max as u64 {
        let mut t = PLaurent::zero();
        for m in divisors(d) {
            let m = m as i64;
            t = t.add(&PLaurent::from_pairs(&[(2 * m, m), (0, -2 * m), (-2 * m, m)]));
        }
        c.push(t);
    }
    Ok(QSeries::new(c))
}

/// Theta series of the D4 lattice, 1 + 24 sum_d (sum of odd divisors of d) q^d.
pub fn theta_d4(q_max: usize) -> QSeries<Rational> {
    let mut c = vec![Rational::one()];
    for d in 1..=q_max as u64 {
        let s: u64 = divisors(d).into_iter().filter(|k| k % 2 == 1).sum();
        c.push(rat(24 * s as i64));
    }
    QSeries::new(c)
}

/// sum_d sum_{m|d} weight(d, m) (p^m - 2 + p^-m) q^d.
pub(crate) fn divisor_laurent_series(q_max: usize, weight: impl Fn(u64, u64) -> Rational) -> QSeries<PLaurent> {
    let mut c = vec![PLaurent::zero()];
    for d in 1..=q_max as u64 {
        let mut t = PLaurent::zero();
        for m in divisors(d) {
            let x = weight(d, m);
            let e = 2 * m as i64;
            t = t.add(&PLaurent::from_terms([(e, x.clone()), (0, -rat(2) * &x), (-e, x)]));
        }
        c.push(t);
    }
    QSeries::new(c)
}

/// S = -sum_d sum_{m|d} (d/m) (p^m - 2 + p^-m) q^d.
pub fn s_function(q_max: usize) -> QSeries<PLaurent> {
    divisor_laurent_series(q_max, |d, m| -rat((d / m) as i64))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FitError {
    #[error("order {got} is too small: a weight bound of {bound} needs order at least {needed}")]
    InsufficientOrder { bound: u32, needed: usize, got: usize },
    #[error("no quasi-modular form of weight <= {bound} matches the series")]
    NoFit { bound: u32 },
    #[error("weight bound {0} must be even")]
    OddBound(u32),
    #[error("monomial basis is rank deficient at this order")]
    RankDeficient,
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// An element of Q[E2, E4, E6] of weight at most `weight_bound`.
#[derive(Debug, Clone, PartialEq)]
pub struct QModElement {
    pub weight_bound: u32,
    /// (a, b, c) -> coefficient of E2^a E4^b E6^c; zero coefficients are not stored.
    pub terms: BTreeMap<(u32, u32, u32), Rational>,
}

pub fn weight_of(m: (u32, u32, u32)) -> u32 {
    2 * m.0 + 4 * m.1 + 6 * m.2
}

/// Monomials E2^a E4^b E6^c with 2a + 4b + 6c <= bound, graded then lexicographic.
pub fn monomial_basis(bound: u32) -> Vec<(u32, u32, u32)> {
    let mut v = Vec::new();
    for c in 0..=bound / 6 {
        for b in 0..=bound / 4 {
            for a in 0..=bound / 2 {
                if weight_of((a, b, c)) <= bound {
                    v.push((a, b, c));
                }
            }
        }
    }
    v.sort_by_key(|&m| (weight_of(m), std::cmp::Reverse(m)));
    v
}

impl QModElement {
    /// The common weight of all monomials, or None if mixed or zero.
    pub fn pure_weight(&self) -> Option<u32> {
        let mut w = self.terms.keys().map(|&m| weight_of(m));
        let first = w.next()?;
        w.all(|x| x == first).then_some(first)
    }

    /// Whether every monomial has weight `w`. The zero element is homogeneous of every weight.
    pub fn is_homogeneous_of(&self, w: u32) -> bool {
        self.terms.keys().all(|&m| weight_of(m) == w)
    }

    pub fn expand(&self, q_max: usize) -> Result<QSeries<Rational>> {
        let e = [eisenstein(2, q_max)?, eisenstein(4, q_max)?, eisenstein(6, q_max)?];
        let mut out = QSeries::constant(Rational::zero(), q_max);
        for (&(a, b, c), x) in &self.terms {
            let m = e[0].pow(a as i64)?.mul(&e[1].pow(b as i64)?)?.mul(&e[2].pow(c as i64)?)?;
            out = out.add(&m.scale(x));
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = monomial_basis(self.weight_bound)
            .into_iter()
            .filter_map(|m| {
                self.terms
                    .get(&m)
                    .map(|x| json!({"e2": m.0, "e4": m.1, "e6": m.2, "coeff": rat_to_string(x)}))
            })
            .collect();
        json!({"weight_bound": self.weight_bound, "terms": terms})
    }
}

/// Writes a truncated q-series as an exact combination of E2^a E4^b E6^c, or reports
/// that none exists. Needs order at least (basis size + 2).
pub fn qmod_fit(series: &QSeries<Rational>, weight_bound: u32) -> std::result::Result<QModElement, FitError> {
    if weight_bound % 2 == 1 {
        return Err(FitError::OddBound(weight_bound));
    }
    let basis = monomial_basis(weight_bound);
    let needed = basis.len() + 2;
    let q = series.order();
    if q < needed {
        return Err(FitError::InsufficientOrder { bound: weight_bound, needed, got: q });
    }
    let e = [eisenstein(2, q)?, eisenstein(4, q)?, eisenstein(6, q)?];
    let cols: Vec<QSeries<Rational>> = basis
        .iter()
        .map(|&(a, b, c)| e[0].pow(a as i64)?.mul(&e[1].pow(b as i64)?)?.mul(&e[2].pow(c as i64)?))
        .collect::<Result<_>>()?;
    let n = basis.len();
    let mut rows: Vec<Vec<Rational>> = (0..=q)
        .map(|d| {
            let mut r: Vec<Rational> = cols.iter().map(|c| c.coeffs()[d].clone()).collect();
            r.push(series.coeffs()[d].clone());
            r
        })
        .collect();
    // row reduction
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..n {
        let Some(p) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, p);
        let inv = rows[pivot_row][col].recip();
        for x in rows[pivot_row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows.len() {
            if r != pivot_row && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for k in 0..=n {
                    let t = &rows[pivot_row][k] * &f;
                    rows[r][k] -= t;
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    if pivots.len() < n {
        return Err(FitError::RankDeficient);
    }
    if rows[pivot_row..].iter().any(|r| !r[n].is_zero()) {
        return Err(FitError::NoFit { bound: weight_bound });
    }
    let terms = pivots
        .iter()
        .enumerate()
        .filter(|(i, _)| !rows[*i][n].is_zero())
        .map(|(i, &col)| (basis[col], rows[i][n].clone()))
        .collect();
    Ok(QModElement { weight_bound, terms })
}
