//! Donaldson-Thomas series of A x E in classes of type (1, 1, d) and (1, 2, d), their
//! assembly from local contributions, the GW/DT change of variables, and the
//! multiple-cover formulas for imprimitive classes.

use crate::arith::{divisors, frac, gcd_all, rat, sigma, sign, Rational};
use crate::modular::{theta_d4, theta_k_power_pq, weierstrass_p};
use crate::series::{
    product_form, Coefficient, Comparison, Discrepancy, PLaurent, ProductFactor, QSeries, SeriesError, USeries,
};
use crate::{Error, Result};
use num::{BigInt, Zero};

/// A curve class of type (d1, d2, d3) on A x E with d1, d2 > 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ThreefoldClassType {
    pub d1: u64,
    pub d2: u64,
    pub d3: u64,
}

impl ThreefoldClassType {
    pub fn new(d1: u64, d2: u64, d3: u64) -> Result<Self> {
        if d1 == 0 || d2 == 0 {
            return Err(Error::Precondition(format!("type ({d1}, {d2}, {d3}) needs d1, d2 > 0")));
        }
        Ok(ThreefoldClassType { d1, d2, d3 })
    }

    fn as_array(&self) -> [u64; 3] {
        [self.d1, self.d2, self.d3]
    }
}

/// Whether stored coefficients pair with p^n or with (-p)^n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignConvention {
    PlainP,
    MinusP,
}

/// A DT generating series. The stored coefficient of x^n q^d is the invariant itself;
/// the convention says whether x stands for p or for -p (the variable y).
#[derive(Debug, Clone, PartialEq)]
pub struct DtSeries {
    invariants: QSeries<PLaurent>,
    convention: SignConvention,
}

impl DtSeries {
    /// Wraps a function of p. Under `MinusP` this applies the single sign flip p -> -p.
    pub fn from_p_function(f: QSeries<PLaurent>, convention: SignConvention) -> Result<Self> {
        let invariants = match convention {
            SignConvention::PlainP => f,
            SignConvention::MinusP => f.sign_flip_p()?,
        };
        Ok(DtSeries { invariants, convention })
    }

    /// Wraps already sign-adjusted invariants.
    pub fn from_invariants(invariants: QSeries<PLaurent>, convention: SignConvention) -> Self {
        DtSeries { invariants, convention }
    }

    /// The series as a function of p.
    pub fn as_p_function(&self) -> Result<QSeries<PLaurent>> {
        Ok(match self.convention {
            SignConvention::PlainP => self.invariants.clone(),
            SignConvention::MinusP => self.invariants.sign_flip_p()?,
        })
    }

    pub fn invariants(&self) -> &QSeries<PLaurent> {
        &self.invariants
    }

    pub fn convention(&self) -> SignConvention {
        self.convention
    }

    /// The invariant attached to x^n q^d.
    pub fn invariant(&self, n: i64, d: usize) -> Result<Rational> {
        Ok(self.invariants.coeff(d)?.coeff(2 * n)?)
    }
}

fn k_power(n: i64, q_max: usize, window: i64) -> Result<QSeries<PLaurent>> {
    Ok(theta_k_power_pq(n, q_max, Some(window))?)
}

/// K^2 as the topological-Euler-characteristic series in classes (1, 1, d).
pub fn dt_hat_1(q_max: usize, window: i64) -> Result<DtSeries> {
    DtSeries::from_p_function(k_power(2, q_max, window)?, SignConvention::PlainP)
}

/// 1 + p/(1-p)^2 + sum_d sum_{k|d} k (p^k + p^-k) q^d; the q^0 slot is windowed.
pub fn nodal_factor(q_max: usize, window: i64) -> Result<QSeries<PLaurent>> {
    let mut c = vec![PLaurent::windowed(
        std::iter::once((0, rat(1))).chain((1..=window / 2).map(|k| (2 * k, rat(k)))),
        window,
    )?];
    for d in 1..=q_max as u64 {
        c.push(PLaurent::from_terms(
            divisors(d).into_iter().flat_map(|k| [(2 * k as i64, rat(k as i64)), (-2 * k as i64, rat(k as i64))]),
        ));
    }
    Ok(QSeries::new(c))
}

/// sum_a F(a) q^a = prod_m (1 - q^m) / ((1 - p q^m)(1 - q^m/p)).
pub fn f_a_series(q_max: usize, window: i64) -> Result<QSeries<PLaurent>> {
    let mut f = ProductFactor::family(rat(1), 0, 1, q_max);
    f.extend(ProductFactor::family(rat(1), 2, -1, q_max));
    f.extend(ProductFactor::family(rat(1), -2, -1, q_max));
    Ok(product_form(&f, &PLaurent::one(), q_max, Some(window))?)
}

/// (sum_a g(a) q^a)^euler: the weighted Euler characteristic of the symmetric products.
pub fn sym_prod_euler(g: &QSeries<PLaurent>, euler: i64) -> Result<QSeries<PLaurent>> {
    if g.coeff(0)? != &PLaurent::one() {
        return Err(Error::Precondition("series must start with 1".into()));
    }
    Ok(g.pow(euler)?)
}

/// (p^(1/2) (1-p)^(-1))^euler. Finite for euler <= 0, windowed otherwise.
pub fn vertical_prefactor(euler: i64, window: i64) -> Result<PLaurent> {
    let e = euler.unsigned_abs();
    if euler <= 0 {
        // w^euler (1 - w^2)^(-euler)
        return Ok(PLaurent::from_terms((0..=e).map(|j| {
            (euler + 2 * j as i64, Rational::from_integer(crate::arith::binomial(e, j)) * rat(sign(j as i64)))
        })));
    }
    let terms = (0..).map_while(|j: u64| {
        let exp = euler + 2 * j as i64;
        (exp <= window).then(|| (exp, Rational::from_integer(crate::arith::binomial(e + j - 1, j))))
    });
    Ok(PLaurent::windowed(terms, window)?)
}

/// p^-1 (1-p)^2 (sum F(a) q^a)^-2 prod (1-q^m)^-2: the class (1,1,d) series from local pieces.
pub fn dt_hat_1_assembled(q_max: usize, window: i64) -> Result<DtSeries> {
    let pref = vertical_prefactor(-2, window)?;
    let sym = sym_prod_euler(&f_a_series(q_max, window)?, -2)?;
    let eta = product_form(&ProductFactor::family(rat(1), 0, -2, q_max), &PLaurent::one(), q_max, None)?;
    let s = sym.mul(&eta)?.mul_coeff(&pref)?;
    DtSeries::from_p_function(s, SignConvention::PlainP)
}

/// Largest |w-exponent| of K^4 up to q^q_max: the window a product with the Weierstrass
/// function consumes.
pub fn window_needed_for_k4(q_max: usize) -> Result<i64> {
    let k4 = theta_k_power_pq(4, q_max, None)?;
    Ok(k4.coeffs().iter().map(PLaurent::max_abs_exponent).max().unwrap_or(0))
}

fn k4_for_window(q_max: usize, window: i64) -> Result<QSeries<PLaurent>> {
    let required = window_needed_for_k4(q_max)?;
    if window < required {
        return Err(Error::WindowTooSmall { given: window, required });
    }
    k_power(4, q_max, window)
}

fn map_window(e: SeriesError, window: i64, q_max: usize) -> Error {
    match e {
        SeriesError::EmptyWindow { .. } => match window_needed_for_k4(q_max) {
            Ok(required) => Error::WindowTooSmall { given: window, required },
            Err(e) => e,
        },
        e => e.into(),
    }
}

fn lift(s: &QSeries<Rational>) -> QSeries<PLaurent> {
    QSeries::new(s.coeffs().iter().map(|c| PLaurent::monomial(c.clone(), 0)).collect())
}

/// sum_d a_d q^(2d) from a function of d.
fn doubled_q(q_max: usize, f: impl Fn(u64) -> Rational) -> QSeries<Rational> {
    let mut c = vec![Rational::zero(); q_max + 1];
    for d in 1..=(q_max / 2) as u64 {
        c[2 * d as usize] = f(d);
    }
    QSeries::new(c)
}

/// K^4 (1/2 + 3p/(1-p)^2 + sum_d sum_{k|d} k (3 (p^k + p^-k) q^d + 12 q^(2d))).
pub fn dt_hat_2_closed(q_max: usize, window: i64) -> Result<DtSeries> {
    let k4 = k4_for_window(q_max, window)?;
    let mut c = vec![PLaurent::windowed(
        std::iter::once((0, frac(1, 2))).chain((1..=window / 2).map(|k| (2 * k, rat(3 * k)))),
        window,
    )?];
    for d in 1..=q_max as u64 {
        c.push(PLaurent::from_terms(divisors(d).into_iter().flat_map(|k| {
            let x = rat(3 * k as i64);
            [(2 * k as i64, x.clone()), (-2 * k as i64, x)]
        })));
    }
    let twelve = lift(&doubled_q(q_max, |d| rat(12) * Rational::from_integer(sigma(1, d))));
    let bracket = QSeries::new(c).add(&twelve);
    let s = k4.mul(&bracket).map_err(|e| map_window(e, window, q_max))?;
    DtSeries::from_p_function(s, SignConvention::PlainP)
}

/// 12 sigma(d/2) for even d > 0, otherwise 0.
pub fn diagonal_count(d: u64) -> u64 {
    if d > 0 && d.is_multiple_of(2) {
        u64::try_from(sigma(1, d / 2)).expect("small") * 12
    } else {
        0
    }
}

/// (1/4)(-10 K^4 + 12 K^4 nodal) + K^4 sum_d diagonal_count(d) q^d.
pub fn dt_hat_2_assembled(q_max: usize, window: i64) -> Result<DtSeries> {
    let k4 = k4_for_window(q_max, window)?;
    let nodal = k4.mul(&nodal_factor(q_max, window)?).map_err(|e| map_window(e, window, q_max))?;
    let smooth = k4.scale(&rat(-10)).add(&nodal.scale(&rat(12))).scale(&frac(1, 4));
    let diag = QSeries::new((0..=q_max as u64).map(|d| rat(diagonal_count(d) as i64)).collect());
    let s = smooth.add(&k4.mul(&lift(&diag))?);
    DtSeries::from_p_function(s, SignConvention::PlainP)
}

/// -K^2 read with (-p)^n, so the stored invariants are DT_{n,(1,1,d)}.
pub fn dt_1(q_max: usize, window: i64) -> Result<DtSeries> {
    DtSeries::from_p_function(k_power(2, q_max, window)?.neg(), SignConvention::MinusP)
}

/// K(p^2, q^2)^2 through q^q_max.
fn k2_dilated(q_max: usize, window: i64) -> Result<QSeries<PLaurent>> {
    let half = q_max.div_ceil(2);
    Ok(theta_k_power_pq(2, half, Some(window / 2))?.dilate(2, 2).truncate(q_max))
}

/// (3/2) K^4 wp + (3/8) K(p^2, q^2)^2 as a function of p.
pub fn k4_wp_combination(q_max: usize, window: i64) -> Result<QSeries<PLaurent>> {
    let k4 = k4_for_window(q_max, window)?;
    let kwp = k4.mul(&weierstrass_p(q_max, window)?).map_err(|e| map_window(e, window, q_max))?;
    Ok(kwp.scale(&frac(3, 2)).add(&k2_dilated(q_max, window)?.scale(&frac(3, 8))))
}

/// K^4 (3 wp + theta_D4 / 4) as a function of p.
pub fn k4_theta_d4_combination(q_max: usize, window: i64) -> Result<QSeries<PLaurent>> {
    let k4 = k4_for_window(q_max, window)?;
    let inner = weierstrass_p(q_max, window)?.scale(&rat(3)).add(&lift(&theta_d4(q_max)).scale(&frac(1, 4)));
    k4.mul(&inner).map_err(|e| map_window(e, window, q_max))
}

/// -(3/2) K^4 wp - (3/8) K(p^2,q^2)^2 read with (-p)^n: DT invariants in classes (1, 2, d).
pub fn dt_2(q_max: usize, window: i64) -> Result<DtSeries> {
    DtSeries::from_p_function(k4_wp_combination(q_max, window)?.neg(), SignConvention::MinusP)
}

/// The same series computed as -K^4 (3 wp + theta_D4/4).
pub fn dt_2_via_theta_d4(q_max: usize, window: i64) -> Result<DtSeries> {
    DtSeries::from_p_function(k4_theta_d4_combination(q_max, window)?.neg(), SignConvention::MinusP)
}

/// A named comparison produced by one of the identity checks.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck {
    pub name: String,
    pub comparison: Comparison,
}

impl IdentityCheck {
    fn new(name: &str, comparison: Comparison) -> Self {
        IdentityCheck { name: name.into(), comparison }
    }
}

/// K^4 (3 wp + theta_D4/4) = (3/2) K^4 wp + (3/8) K(p^2,q^2)^2, checked coefficientwise on
/// the common window, plus the rearranged form whose right side has finite support.
pub fn modular_identity_check(q_max: usize, window: i64) -> Result<Vec<IdentityCheck>> {
    let lhs = k4_theta_d4_combination(q_max, window)?;
    let rhs = k4_wp_combination(q_max, window)?;
    let k4 = k4_for_window(q_max, window)?;
    let kwp = k4.mul(&weierstrass_p(q_max, window)?).map_err(|e| map_window(e, window, q_max))?;
    let finite = k2_dilated(q_max, window)?
        .scale(&frac(3, 8))
        .sub(&k4.mul(&lift(&theta_d4(q_max)))?.scale(&frac(1, 4)));
    let rearranged = kwp.scale(&frac(3, 2)).compare(&finite);
    // q^0 by hand, where theta_D4 = 1: 3 (K^4 wp)_0 + K^4_0/4 against (3/2)(K^4 wp)_0 + (3/8)(p^2 - 2 + p^-2)
    let (kwp0, k40) = (kwp.coeff(0)?, k4.coeff(0)?);
    let spot_l = kwp0.scale(&rat(3)).add(&k40.scale(&frac(1, 4)));
    let spot_r = kwp0.scale(&frac(3, 2)).add(&PLaurent::from_pairs(&[(4, 1), (0, -2), (-4, 1)]).scale(&frac(3, 8)));
    let spot = QSeries::new(vec![spot_l]).compare(&QSeries::new(vec![spot_r]));
    Ok(vec![
        IdentityCheck::new("identity", lhs.compare(&rhs)),
        IdentityCheck::new("rearranged-finite", rearranged),
        IdentityCheck::new("q0-spot", spot),
    ])
}

/// GW side: stored invariants read as a series in y, then y^n + y^-n -> (-1)^n 2cos(nu).
pub fn gw_from_dt(dt: &DtSeries, u_max: usize) -> Result<QSeries<USeries>> {
    Ok(dt.invariants().sign_flip_p()?.symmetric_p_to_u(u_max)?)
}

/// (y + 2 + 1/y) prod_m (1 + y q^m)^2 (1 + q^m/y)^2 / (1 - q^m)^4, stored in y.
pub fn gw_11d_series(q_max: usize, window: i64) -> Result<DtSeries> {
    let lead = PLaurent::from_pairs(&[(2, 1), (0, 2), (-2, 1)]);
    let mut f = ProductFactor::family(rat(-1), 2, 2, q_max);
    f.extend(ProductFactor::family(rat(-1), -2, 2, q_max));
    f.extend(ProductFactor::family(rat(1), 0, -4, q_max));
    Ok(DtSeries::from_invariants(product_form(&f, &lead, q_max, Some(window))?, SignConvention::MinusP))
}

/// n(d1,d2,d3,k) = sum of delta^2 over divisors of
/// gcd(k, d1, d2, d3, d1d2/k, d1d3/k, d2d3/k, d1d2d3/k^2).
pub fn n_mc_factor(d: [u64; 3], k: u64) -> Result<u64> {
    let [d1, d2, d3] = d;
    let g = gcd_all(&[d1 * d2, d1 * d3, d2 * d3]);
    if k == 0 || !g.is_multiple_of(k) || (d1 * d2 * d3) % (k * k) != 0 {
        return Err(Error::Precondition(format!("k = {k} is not admissible for {d:?}")));
    }
    let h = gcd_all(&[k, d1, d2, d3, d1 * d2 / k, d1 * d3 / k, d2 * d3 / k, d1 * d2 * d3 / (k * k)]);
    Ok(divisors(h).into_iter().map(|x| x * x).sum())
}

/// Admissible k for a type: k | gcd(d1d2, d1d3, d2d3) and k^2 | d1d2d3.
fn admissible_k(d: [u64; 3], extra: Option<u64>) -> Vec<u64> {
    let [d1, d2, d3] = d;
    let mut xs = vec![d1 * d2, d1 * d3, d2 * d3];
    xs.extend(extra);
    divisors(gcd_all(&xs)).into_iter().filter(|k| (d1 * d2 * d3) % (k * k) == 0).collect()
}

/// Primitive invariants in classes (1, 1, m), computed once and reused.
#[derive(Debug, Clone)]
pub struct ThreefoldPrimitives {
    dt1: DtSeries,
    gw: QSeries<USeries>,
}

impl ThreefoldPrimitives {
    pub fn new(q_max: usize, u_max: usize) -> Result<Self> {
        let dt1 = DtSeries::from_p_function(theta_k_power_pq(2, q_max, None)?.neg(), SignConvention::MinusP)?;
        let gw = gw_from_dt(&dt1, u_max)?;
        Ok(ThreefoldPrimitives { dt1, gw })
    }

    pub fn q_max(&self) -> usize {
        self.gw.order()
    }

    /// N_{g,(1,1,m)}: the u^(2g-2) coefficient of the GW series at q^m.
    pub fn n_primitive(&self, g: u32, m: u64) -> Result<Rational> {
        if g < 1 {
            return Err(Error::Precondition("genus must be positive".into()));
        }
        Ok(self.gw.coeff(m as usize)?.coeff(2 * g as usize - 2)?.clone())
    }

    /// DT_{n,(1,1,m)}.
    pub fn dt_primitive(&self, n: i64, m: u64) -> Result<Rational> {
        let c = self.dt1.invariants().coeff(m as usize)?;
        Ok(c.coeff(2 * n)?)
    }

    pub fn mc_threefold_f(&self, g: u32, d_prime: u64, d: u64) -> Result<Rational> {
        if d_prime == 0 || d == 0 {
            return Err(Error::Precondition("d', d >= 1".into()));
        }
        let mut s = Rational::zero();
        for k in divisors(gcd_all(&[d_prime, d])) {
            s += pow_i(k, 2 * g as i64 - 3) * self.n_primitive(g, d_prime * d / (k * k))?;
        }
        Ok(s)
    }

    pub fn n_g_imprimitive(&self, g: u32, t: ThreefoldClassType) -> Result<Rational> {
        let d = t.as_array();
        let mut s = Rational::zero();
        for k in admissible_k(d, None) {
            let n = n_mc_factor(d, k)?;
            s += rat(n as i64) * pow_i(k, 2 * g as i64 - 3) * self.n_primitive(g, t.d1 * t.d2 * t.d3 / (k * k))?;
        }
        Ok(s)
    }

    pub fn dt_mc(&self, n: i64, d: [u64; 3]) -> Result<Rational> {
        let positive = d.iter().filter(|&&x| x > 0).count();
        if n == 0 && positive < 2 {
            return Err(Error::Precondition(format!("n = 0 needs two positive entries in {d:?}")));
        }
        let prod = d[0] * d[1] * d[2];
        let extra = (n != 0).then_some(n.unsigned_abs());
        let mut s = Rational::zero();
        for k in admissible_k(d, extra) {
            let nk = n / k as i64;
            let x = rat(n_mc_factor(d, k)? as i64) * frac(sign(n - nk), k as i64);
            s += x * self.dt_primitive(nk, prod / (k * k))?;
        }
        Ok(s)
    }
}

fn pow_i(k: u64, e: i64) -> Rational {
    let b = Rational::from_integer(BigInt::from(k));
    if e >= 0 {
        num::pow::pow(b, e as usize)
    } else {
        num::pow::pow(b.recip(), e.unsigned_abs() as usize)
    }
}

fn primitives_for(q: u64, g: u32) -> Result<ThreefoldPrimitives> {
    ThreefoldPrimitives::new(q as usize, (2 * g as usize).saturating_sub(2).max(2))
}

/// sum_{k | gcd(d', d)} k^(2g-3) N_{g,(1,1,d'd/k^2)}.
pub fn mc_threefold_f(g: u32, d_prime: u64, d: u64) -> Result<Rational> {
    primitives_for(d_prime * d, g)?.mc_threefold_f(g, d_prime, d)
}

/// sum_k n(d1,d2,d3,k) k^(2g-3) N_{g,(1,1,d1d2d3/k^2)}.
pub fn n_g_imprimitive(g: u32, t: ThreefoldClassType) -> Result<Rational> {
    primitives_for(t.d1 * t.d2 * t.d3, g)?.n_g_imprimitive(g, t)
}

/// sum_k (1/k) n(d1,d2,d3,k) (-1)^(n - n/k) DT_{n/k,(1,1,d1d2d3/k^2)}.
pub fn dt_mc(n: i64, d: [u64; 3]) -> Result<Rational> {
    primitives_for(d[0] * d[1] * d[2], 2)?.dt_mc(n, d)
}

/// ((-1)^(n-1)/n) sum_{k | gcd(n, d)} k^2.
pub fn dt_degenerate(n: u64, d: u64) -> Result<Rational> {
    if n == 0 {
        return Err(Error::Precondition("n >= 1".into()));
    }
    let s: u64 = divisors(gcd_all(&[n, d])).into_iter().map(|k| k * k).sum();
    Ok(frac(sign(n as i64 - 1) * s as i64, n as i64))
}

/// g_d = f_2d (+ f_{d/2}(p^2)/2 for even d), f from K^2 and g from (3/2)K^4 wp + (3/8)K(p^2,q^2)^2.
pub fn consistency_fg(d_max: usize, window: i64) -> Result<Vec<IdentityCheck>> {
    let q = 2 * d_max;
    let f = theta_k_power_pq(2, q, None)?;
    let g = k4_wp_combination(d_max, window)?;
    let mut out = Vec::new();
    for d in 0..=d_max {
        let mut expected = f.coeff(2 * d)?.clone();
        if d % 2 == 0 {
            expected = expected.add(&f.coeff(d / 2)?.dilate_p(2).scale(&frac(1, 2)));
        }
        let got = g.coeff(d)?;
        let window = got.validity();
        if window.is_some_and(|v| v < 0) {
            return Err(Error::WindowTooSmall { given: window.unwrap_or(0), required: 0 });
        }
        let mismatch = expected.first_difference(got).map(|x| Discrepancy {
            q_exp: d,
            inner_exp: x.inner,
            expected: x.expected,
            got: x.got,
        });
        out.push(IdentityCheck::new(&format!("d={d}"), Comparison { q_order: d, window, mismatch }));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Symmetry;

    #[test]
    fn dt_hat_1_values() {
        let s = dt_hat_1(3, 24).unwrap();
        let f = s.as_p_function().unwrap();
        assert_eq!(f.coeffs()[0], PLaurent::from_pairs(&[(2, 1), (0, -2), (-2, 1)]));
        assert_eq!(f.coeffs()[1], PLaurent::from_pairs(&[(4, -2), (2, 8), (0, -12), (-2, 8), (-4, -2)]));
        for c in f.coeffs() {
            assert_eq!(c.symmetry(), Symmetry::Symmetric);
        }
    }

    #[test]
    fn local_pieces() {
        let n = nodal_factor(2, 6).unwrap();
        assert_eq!(n.coeffs()[0].terms().len(), 4);
        assert_eq!(n.coeffs()[0].coeff(6).unwrap(), rat(3));
        assert_eq!(n.coeffs()[1], PLaurent::from_pairs(&[(2, 1), (-2, 1)]));
        assert_eq!(n.coeffs()[2], PLaurent::from_pairs(&[(2, 1), (-2, 1), (4, 2), (-4, 2)]));
        let f = f_a_series(4, 24).unwrap();
        assert_eq!(f.coeffs()[0], PLaurent::one());
        assert_eq!(f.coeffs()[1], PLaurent::from_pairs(&[(2, 1), (0, -1), (-2, 1)]));
        assert!(f.coeffs().iter().all(|c| c.symmetry() == Symmetry::Symmetric));
        let one_plus_q = QSeries::new(vec![PLaurent::one(), PLaurent::one(), PLaurent::zero(), PLaurent::zero()]);
        let cube = sym_prod_euler(&one_plus_q, 3).unwrap();
        assert_eq!(cube.coeffs()[3], PLaurent::one());
        assert_eq!(cube.coeffs()[2], PLaurent::monomial(rat(3), 0));
        assert_eq!(sym_prod_euler(&f, 0).unwrap(), f.one());
        assert_eq!(vertical_prefactor(-2, 24).unwrap(), PLaurent::from_pairs(&[(-2, 1), (0, -2), (2, 1)]));
    }

    #[test]
    fn euler_power_matches_product() {
        let q = 5;
        let sym = sym_prod_euler(&f_a_series(q, 40).unwrap(), -2).unwrap();
        let mut f = ProductFactor::family(rat(1), 2, 2, q);
        f.extend(ProductFactor::family(rat(1), -2, 2, q));
        f.extend(ProductFactor::family(rat(1), 0, -2, q));
        assert_eq!(sym, product_form(&f, &PLaurent::one(), q, None).unwrap());
    }

    #[test]
    fn assemblies_low_order() {
        let a = dt_hat_1_assembled(4, 24).unwrap();
        assert!(a.invariants().compare(dt_hat_1(4, 24).unwrap().invariants()).agrees());
        let c = dt_hat_2_closed(3, 24).unwrap();
        let b = dt_hat_2_assembled(3, 24).unwrap();
        assert!(c.invariants().compare(b.invariants()).agrees());
    }

    #[test]
    fn dt_conventions() {
        let d1 = dt_1(2, 24).unwrap();
        assert_eq!(d1.invariants().coeffs()[0], PLaurent::from_pairs(&[(2, 1), (0, 2), (-2, 1)]));
        assert_eq!(d1.as_p_function().unwrap().coeffs()[0], PLaurent::from_pairs(&[(2, -1), (0, 2), (-2, -1)]));
        let hat = dt_hat_1(2, 24).unwrap().as_p_function().unwrap();
        assert_eq!(d1.as_p_function().unwrap(), hat.neg());
        let gw = gw_11d_series(2, 24).unwrap();
        assert_eq!(gw.invariants(), d1.invariants());
        assert_eq!(gw.invariants().coeffs()[1], PLaurent::from_pairs(&[(4, 2), (2, 8), (0, 12), (-2, 8), (-4, 2)]));
    }

    #[test]
    fn gw_side() {
        let u = gw_from_dt(&dt_1(3, 24).unwrap(), 6).unwrap();
        assert_eq!(u.coeffs()[0].coeff(2).unwrap(), &rat(1));
        assert_eq!(u.coeffs()[0].coeff(4).unwrap(), &frac(-1, 12));
        assert_eq!(u.coeffs()[1].coeff(2).unwrap(), &rat(0));
        assert_eq!(u.coeffs()[1].coeff(4).unwrap(), &rat(2));
        assert!(u.coeffs().iter().all(|c| c.coeff(0).unwrap().is_zero()));
        let asym = DtSeries::from_invariants(
            QSeries::new(vec![PLaurent::from_pairs(&[(2, 1)])]),
            SignConvention::MinusP,
        );
        assert!(gw_from_dt(&asym, 4).is_err());
    }

    #[test]
    fn windows() {
        let need = window_needed_for_k4(4).unwrap();
        assert!(matches!(dt_2(4, need - 2), Err(Error::WindowTooSmall { .. })));
        let a = dt_2(4, 24).unwrap();
        let b = dt_2_via_theta_d4(4, 24).unwrap();
        assert!(a.invariants().compare(b.invariants()).agrees());
        for c in modular_identity_check(4, 24).unwrap() {
            assert!(c.comparison.agrees(), "{}", c.name);
        }
    }

    #[test]
    fn multiple_cover_values() {
        assert_eq!(n_mc_factor([1, 1, 5], 1).unwrap(), 1);
        assert_eq!(n_mc_factor([2, 2, 4], 2).unwrap(), 5);
        assert_eq!(n_mc_factor([2, 2, 1], 2).unwrap(), 1);
        assert!(n_mc_factor([1, 1, 3], 3).is_err());
        assert_eq!(mc_threefold_f(3, 2, 2).unwrap(), rat(30));
        assert_eq!(n_g_imprimitive(3, ThreefoldClassType::new(2, 2, 1).unwrap()).unwrap(), rat(30));
        assert_eq!(n_g_imprimitive(3, ThreefoldClassType::new(1, 2, 2).unwrap()).unwrap(), rat(30));
        for d in 1..6u64 {
            let two_sigma = rat(2) * Rational::from_integer(sigma(1, d));
            assert_eq!(n_g_imprimitive(3, ThreefoldClassType::new(1, 1, d).unwrap()).unwrap(), two_sigma);
            assert_eq!(mc_threefold_f(3, 1, d).unwrap(), two_sigma);
        }
    }

    #[test]
    fn dt_multiple_cover() {
        assert_eq!(dt_degenerate(2, 2).unwrap(), frac(-5, 2));
        for d in 0..5 {
            assert_eq!(dt_degenerate(1, d).unwrap(), rat(1));
        }
        let p = ThreefoldPrimitives::new(6, 4).unwrap();
        for n in 1..4 {
            for d in 0..4 {
                assert_eq!(p.dt_mc(n as i64, [0, 0, d]).unwrap(), dt_degenerate(n, d).unwrap());
            }
        }
        for n in -2..3 {
            assert_eq!(p.dt_mc(n, [1, 1, 3]).unwrap(), p.dt_primitive(n, 3).unwrap());
        }
        assert!(p.dt_mc(0, [0, 0, 3]).is_err());
        assert_eq!(diagonal_count(4), 36);
        assert_eq!(diagonal_count(3), 0);
        assert_eq!(diagonal_count(2), 12);
    }

    #[test]
    fn fg_lemma_small() {
        for c in consistency_fg(2, 24).unwrap() {
            assert!(c.comparison.agrees(), "{}: {:?}", c.name, c.comparison);
        }
    }
}
