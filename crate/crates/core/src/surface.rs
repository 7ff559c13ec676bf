//! Curve counts on abelian surfaces: fixed-linear-system and quotient invariants, the
//! multiple-cover rule, point insertions, the Goettsche-Shende series, and the
//! hyperelliptic counts h_{g,(1,d)}.

use crate::arith::{divisors, factorial, frac, rat, rat_to_string, sigma, to_integer, Rational};
use crate::modular::{divisor_laurent_series, s_function, theta_k_u};
use crate::series::{PLaurent, QSeries, USeries};
use crate::{Error, Result};
use num::{BigInt, Integer};
use serde_json::{json, Value};

/// A curve class of type (d1, d2) on an abelian surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SurfaceClassType {
    pub d1: u64,
    pub d2: u64,
}

impl SurfaceClassType {
    pub fn new(d1: u64, d2: u64) -> Result<Self> {
        if d1 == 0 || d2 == 0 {
            return Err(Error::Precondition(format!("type ({d1}, {d2}) needs positive entries")));
        }
        Ok(SurfaceClassType { d1, d2 })
    }

    pub fn is_primitive(&self) -> bool {
        self.d1.gcd(&self.d2) == 1
    }

    fn product(&self) -> u64 {
        self.d1 * self.d2
    }
}

fn pow_rat(base: u64, e: i64) -> Rational {
    let b = Rational::from_integer(BigInt::from(base));
    num::pow::pow(b, e as usize)
}

/// N^FLS_{g,(d1,d2)} = (d1 d2)^2 2(-1)^g / (2g-2)! sum_{k|gcd} sum_{m | d1d2/k^2} k^(2g-1) m^(2g-3).
pub fn n_fls(g: u32, t: SurfaceClassType) -> Result<Rational> {
    Ok(n_quotient(g, t)? * pow_rat(t.product(), 2))
}

/// N^Q = N^FLS / (d1 d2)^2: counts up to translation.
pub fn n_quotient(g: u32, t: SurfaceClassType) -> Result<Rational> {
    if g < 2 {
        return Err(Error::Precondition(format!("genus {g} < 2")));
    }
    let g = g as i64;
    let mut s = Rational::from_integer(BigInt::from(0));
    for k in divisors(t.d1.gcd(&t.d2)) {
        for m in divisors(t.product() / (k * k)) {
            s += pow_rat(k, 2 * g - 1) * pow_rat(m, 2 * g - 3);
        }
    }
    let pref = rat(2 * crate::arith::sign(g)) / Rational::from_integer(factorial(2 * g as u64 - 2));
    Ok(pref * s)
}

/// The u^(2g-2) coefficient of sum_{k | gcd} k f_(1, d1 d2/k^2)(ku), built from primitive values.
pub fn multiple_cover_surface(g: u32, t: SurfaceClassType) -> Result<Rational> {
    let mut s = Rational::from_integer(BigInt::from(0));
    for k in divisors(t.d1.gcd(&t.d2)) {
        let prim = SurfaceClassType::new(1, t.product() / (k * k))?;
        s += pow_rat(k, 2 * g as i64 - 1) * n_quotient(g, prim)?;
    }
    Ok(s)
}

/// q d/dq (S^(k+1) / (k+1)) with S taken to the u-variable.
pub fn fls_point_series(k: u32, q_max: usize, u_max: usize) -> Result<QSeries<USeries>> {
    let s = s_function(q_max).symmetric_p_to_u(u_max)?;
    let p = s.pow(k as i64 + 1)?;
    Ok(p.scale(&frac(1, k as i64 + 1)).q_derivative())
}

/// -sum_d sum_{m|d} (d^2/m) (p^m - 2 + p^-m) q^d.
pub fn gs_stable_pairs_series(q_max: usize) -> QSeries<PLaurent> {
    divisor_laurent_series(q_max, |d, m| -frac((d * d) as i64, m as i64))
}

/// (q d/dq)^2 K^4 / 4 with K in the u-variable.
pub fn hyp_h_series(q_max: usize, u_max: usize) -> Result<QSeries<USeries>> {
    let k = theta_k_u(q_max, u_max)?;
    let k2 = k.mul(&k)?;
    let k4 = k2.mul(&k2)?;
    Ok(k4.q_derivative().q_derivative().scale(&frac(1, 4)))
}

/// u = 2 arcsin(r/2), the inverse of r = 2 sin(u/2), through r^order.
pub fn arcsin_substitution(order: usize) -> Result<USeries> {
    Ok(USeries::two_sin_half(1, order).revert_odd()?)
}

/// Table of hyperelliptic counts h_{g,(1,d)} for 2 <= g <= g_max, 1 <= d <= d_max.
pub fn hyp_h_table(g_max: u32, d_max: usize) -> Result<InvariantTable> {
    if g_max < 2 || d_max < 1 {
        return Err(Error::Precondition("need g_max >= 2 and d_max >= 1".into()));
    }
    let u_max = 2 * g_max as usize + 2 + 2;
    let h = hyp_h_series(d_max, u_max)?;
    let u_of_r = arcsin_substitution(u_max)?;
    let rows: Vec<i64> = (2..=g_max as i64).collect();
    let cols: Vec<i64> = (1..=d_max as i64).collect();
    let mut cells = vec![Vec::new(); rows.len()];
    for &d in &cols {
        let in_r = h.coeffs()[d as usize].compose(&u_of_r)?;
        for (i, &g) in rows.iter().enumerate() {
            let v = in_r.coeff(2 * g as usize + 2)?.clone();
            if to_integer(&v).is_none() {
                return Err(Error::NonIntegerCell { row: g, col: d, value: rat_to_string(&v) });
            }
            cells[i].push(v);
        }
    }
    InvariantTable::new(
        "hyperelliptic counts h_{g,(1,d)}",
        "coefficient of r^(2g+2) q^d in (q d/dq)^2 K^4/4 at u = 2 arcsin(r/2)",
        ("g", rows),
        ("d", cols),
        cells,
        "hyp_h_table",
    )
}

/// h_{3,(1,d)} = d^2 sum_{m|d} m (3m^2 + 1 - 4d) / 4.
pub fn hyp3_closed(d: u64) -> Result<Rational> {
    if d == 0 {
        return Err(Error::Precondition("d >= 1".into()));
    }
    let d_i = d as i64;
    let s: i64 = divisors(d).into_iter().map(|m| m as i64).map(|m| m * (3 * m * m + 1 - 4 * d_i)).sum();
    Ok(frac(d_i * d_i * s, 4))
}

/// Whether h_{g,(1,d)} is nonzero: (g-1) + floor((g-1)/4)((g-1) - 2 floor((g-1)/4) - 2) <= d.
pub fn hyp_nonvanishing(g: u32, d: u64) -> bool {
    let a = g as i64 - 1;
    let f = a / 4;
    a + f * (a - 2 * f - 2) <= d as i64
}

/// sigma(d)/d: the genus-1 count in the degenerate direction.
pub fn genus1_degenerate(d: u64) -> Result<Rational> {
    if d == 0 {
        return Err(Error::Precondition("d >= 1".into()));
    }
    Ok(Rational::new(sigma(1, d), BigInt::from(d)))
}

/// The published table of h_{g,(1,d)}, rows g = 2..8, columns d = 1..10.
pub const TABLE1: [[i64; 10]; 7] = [
    [1, 12, 36, 112, 150, 432, 392, 960, 1053, 1800],
    [0, 6, 90, 456, 1650, 4320, 9996, 20640, 36774, 67500],
    [0, 0, 9, 192, 1425, 6732, 23814, 68352, 173907, 387900],
    [0, 0, 0, 4, 150, 1656, 10486, 48240, 174474, 539200],
    [0, 0, 0, 0, 0, 36, 735, 6720, 41310, 191400],
    [0, 0, 0, 0, 0, 0, 0, 96, 1620, 14700],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 100],
];

/// A labelled table of exact values with a provenance tag per cell.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantTable {
    pub title: String,
    pub formula: String,
    pub row_label: String,
    pub col_label: String,
    pub rows: Vec<i64>,
    pub cols: Vec<i64>,
    pub cells: Vec<Vec<Rational>>,
    pub provenance: Vec<Vec<String>>,
}

impl InvariantTable {
    pub fn new(
        title: &str,
        formula: &str,
        rows: (&str, Vec<i64>),
        cols: (&str, Vec<i64>),
        cells: Vec<Vec<Rational>>,
        provenance: &str,
    ) -> Result<Self> {
        if cells.len() != rows.1.len() || cells.iter().any(|r| r.len() != cols.1.len()) {
            return Err(Error::Precondition("table dimensions do not match its labels".into()));
        }
        let provenance = cells.iter().map(|r| vec![provenance.to_string(); r.len()]).collect();
        Ok(InvariantTable {
            title: title.into(),
            formula: formula.into(),
            row_label: rows.0.into(),
            col_label: cols.0.into(),
            rows: rows.1,
            cols: cols.1,
            cells,
            provenance,
        })
    }

    pub fn get(&self, row: i64, col: i64) -> Option<&Rational> {
        let i = self.rows.iter().position(|&r| r == row)?;
        let j = self.cols.iter().position(|&c| c == col)?;
        Some(&self.cells[i][j])
    }

    fn cell_text(v: &Rational) -> String {
        match to_integer(v) {
            Some(n) => n.to_string(),
            None => rat_to_string(v),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = format!("# {}: {}\n", self.title, self.formula);
        out += &format!("{}\\{}", self.row_label, self.col_label);
        for c in &self.cols {
            out += &format!(",{c}");
        }
        out.push('\n');
        for (r, row) in self.rows.iter().zip(&self.cells) {
            out += &r.to_string();
            for v in row {
                out += &format!(",{}", Self::cell_text(v));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_plain(&self) -> String {
        let texts: Vec<Vec<String>> = self.cells.iter().map(|r| r.iter().map(Self::cell_text).collect()).collect();
        let width = texts
            .iter()
            .flatten()
            .map(String::len)
            .chain(self.cols.iter().map(|c| c.to_string().len()))
            .max()
            .unwrap_or(1);
        let mut out = format!("{}\n{}\n\n", self.title, self.formula);
        out += &format!("{:>4} |", format!("{}\\{}", self.row_label, self.col_label));
        for c in &self.cols {
            out += &format!(" {:>width$}", c);
        }
        out.push('\n');
        out += &format!("{}\n", "-".repeat(6 + (width + 1) * self.cols.len()));
        for (r, row) in self.rows.iter().zip(&texts) {
            out += &format!("{:>4} |", r);
            for v in row {
                out += &format!(" {:>width$}", v);
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "title": self.title,
            "formula": self.formula,
            "row_label": self.row_label,
            "col_label": self.col_label,
            "rows": self.rows,
            "cols": self.cols,
            "cells": self.cells.iter().map(|r| r.iter().map(rat_to_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "provenance": self.provenance,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(d1: u64, d2: u64) -> SurfaceClassType {
        SurfaceClassType::new(d1, d2).unwrap()
    }

    #[test]
    fn fls_values() {
        assert_eq!(n_fls(2, t(1, 2)).unwrap(), rat(12));
        assert_eq!(n_fls(3, t(1, 1)).unwrap(), frac(-1, 12));
        assert_eq!(n_fls(2, t(1, 1)).unwrap(), rat(1));
        assert_eq!(n_quotient(2, t(2, 2)).unwrap(), rat(15));
        assert_eq!(n_quotient(2, t(1, 4)).unwrap(), rat(7));
        assert_eq!(n_quotient(2, t(2, 4)).unwrap(), rat(39));
        assert!(SurfaceClassType::new(0, 3).is_err());
    }

    #[test]
    fn multiple_cover_values() {
        assert_eq!(multiple_cover_surface(2, t(2, 2)).unwrap(), rat(15));
        assert_eq!(multiple_cover_surface(3, t(2, 2)).unwrap(), n_quotient(3, t(2, 2)).unwrap());
        for d in 1..8 {
            assert_eq!(multiple_cover_surface(4, t(1, d)).unwrap(), n_quotient(4, t(1, d)).unwrap());
        }
    }

    #[test]
    fn point_series_low_terms() {
        let f = fls_point_series(0, 3, 6).unwrap();
        assert_eq!(f.coeffs()[1].coeff(2).unwrap(), &rat(1));
        assert_eq!(f.coeffs()[1].coeff(4).unwrap(), &frac(-1, 12));
        assert_eq!(f.coeffs()[2].coeff(2).unwrap(), &rat(12));
    }

    #[test]
    fn goettsche_shende() {
        let gs = gs_stable_pairs_series(6);
        assert_eq!(gs.coeffs()[1], PLaurent::from_pairs(&[(2, -1), (0, 2), (-2, -1)]));
        assert_eq!(gs.coeffs()[2], PLaurent::from_pairs(&[(4, -2), (2, -4), (0, 12), (-2, -4), (-4, -2)]));
        assert_eq!(gs, s_function(6).q_derivative());
    }

    #[test]
    fn h_series_shape() {
        let h = hyp_h_series(3, 10).unwrap();
        assert!(crate::series::Coefficient::is_exact_zero(&h.coeffs()[0]));
        for c in &h.coeffs()[1..] {
            assert_eq!(c.parity(), crate::series::Parity::Even);
            assert_eq!(c.valuation(), Some(6));
        }
        assert_eq!(arcsin_substitution(5).unwrap().coeff(5).unwrap(), &frac(3, 640));
    }

    #[test]
    fn small_table() {
        let tab = hyp_h_table(4, 5).unwrap();
        assert_eq!(tab.get(2, 5), Some(&rat(150)));
        assert_eq!(tab.get(3, 5), Some(&rat(1650)));
        assert_eq!(tab.get(4, 3), Some(&rat(9)));
        assert!(tab.to_csv().lines().nth(1).unwrap().starts_with("g\\d,1,2"));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(hyp3_closed(1).unwrap(), rat(0));
        assert_eq!(hyp3_closed(2).unwrap(), rat(6));
        assert_eq!(hyp3_closed(5).unwrap(), rat(1650));
        assert!(!hyp_nonvanishing(6, 5));
        assert!(hyp_nonvanishing(6, 6));
        assert!(hyp_nonvanishing(2, 1));
        assert_eq!(genus1_degenerate(1).unwrap(), rat(1));
        assert_eq!(genus1_degenerate(4).unwrap(), frac(7, 4));
        assert_eq!(genus1_degenerate(6).unwrap(), rat(2));
    }
}
