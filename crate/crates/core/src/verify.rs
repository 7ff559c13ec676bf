//! Named checks behind `abelcount verify`, their reports, and table emission.

use crate::arith::{rat, rat_to_string, sigma, Rational};
use crate::lattice::{nu_closed, nu_isotropic, nu_recursion, nu_subgroup_formula};
use crate::modular::{eisenstein, s_function, theta_d4, theta_k_pq, theta_k_power_pq, theta_k_u, weierstrass_p};
use crate::series::json::AnySeries;
use crate::series::{Comparison, Discrepancy};
use crate::surface::{
    hyp3_closed, hyp_h_table, hyp_nonvanishing, multiple_cover_surface, n_quotient, InvariantTable,
    SurfaceClassType, TABLE1,
};
use crate::threefold::{
    consistency_fg, dt_1, dt_hat_1, dt_hat_1_assembled, dt_hat_2_assembled, dt_hat_2_closed, gw_11d_series,
    gw_from_dt, mc_threefold_f, modular_identity_check, ThreefoldClassType, ThreefoldPrimitives,
};
use crate::{Error, Result};
use num::BigInt;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

/// Truncation orders for a check. `None` means the check has no such parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Orders {
    pub q_max: Option<usize>,
    pub u_max: Option<usize>,
    pub window: Option<i64>,
}

impl Orders {
    const NONE: Orders = Orders { q_max: None, u_max: None, window: None };

    /// Overrides apply only to the parameters a check actually has.
    pub fn with_overrides(self, o: &Orders) -> Orders {
        Orders {
            q_max: self.q_max.map(|v| o.q_max.unwrap_or(v)),
            u_max: self.u_max.map(|v| o.u_max.unwrap_or(v)),
            window: self.window.map(|v| o.window.unwrap_or(v)),
        }
    }

    fn q(&self) -> usize {
        self.q_max.unwrap_or(0)
    }
    fn u(&self) -> usize {
        self.u_max.unwrap_or(0)
    }
    fn w(&self) -> i64 {
        self.window.unwrap_or(0)
    }
}

/// Where a check first failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Locator {
    pub at: String,
    pub q_exp: Option<i64>,
    pub inner_exp: Option<i64>,
    pub expected: String,
    pub got: String,
}

impl Locator {
    fn from_discrepancy(at: &str, d: &Discrepancy) -> Self {
        Locator {
            at: at.into(),
            q_exp: Some(d.q_exp as i64),
            inner_exp: d.inner_exp,
            expected: rat_to_string(&d.expected),
            got: rat_to_string(&d.got),
        }
    }

    fn value(at: String, expected: impl ToString, got: impl ToString) -> Self {
        Locator { at, q_exp: None, inner_exp: None, expected: expected.to_string(), got: got.to_string() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Locator),
    Skipped(String),
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail(_) => "fail",
            Verdict::Skipped(_) => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub check: String,
    pub source: String,
    pub orders: Orders,
    /// Smallest p-window actually trusted, when windowed coefficients were compared.
    pub window_met: Option<i64>,
    pub compared: usize,
    pub verdict: Verdict,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> Value {
        let mut region = Map::new();
        let o = &self.orders;
        if let Some(q) = o.q_max {
            region.insert("qmax".into(), json!(q));
        }
        if let Some(u) = o.u_max {
            region.insert("umax".into(), json!(u));
        }
        if let Some(w) = o.window {
            region.insert("window".into(), json!(w));
        }
        if let Some(w) = self.window_met {
            region.insert("window_met".into(), json!(w));
        }
        region.insert("compared".into(), json!(self.compared));
        let mut m = Map::new();
        m.insert("check".into(), json!(self.check));
        m.insert("source".into(), json!(self.source));
        m.insert("region".into(), Value::Object(region));
        m.insert("verdict".into(), json!(self.verdict.label()));
        match &self.verdict {
            Verdict::Fail(l) => {
                m.insert(
                    "locator".into(),
                    json!({"at": l.at, "q_exp": l.q_exp, "inner_exp": l.inner_exp, "expected": l.expected, "got": l.got}),
                );
            }
            Verdict::Skipped(r) => {
                m.insert("reason".into(), json!(r));
            }
            Verdict::Pass => {}
        }
        Value::Object(m)
    }

    pub fn to_line(&self) -> String {
        let tail = match &self.verdict {
            Verdict::Pass => format!("{} compared", self.compared),
            Verdict::Fail(l) => format!("at {}: expected {}, got {}", l.at, l.expected, l.got),
            Verdict::Skipped(r) => r.clone(),
        };
        format!("{:<22} {:<7} {}", self.check, self.verdict.label().to_uppercase(), tail)
    }
}

/// What a runner found: how much it compared, the window met, and the first mismatch.
#[derive(Debug, Default)]
struct Outcome {
    compared: usize,
    window: Option<i64>,
    failure: Option<Locator>,
}

impl Outcome {
    fn series(&mut self, label: &str, c: &Comparison) {
        self.compared += c.q_order + 1;
        self.window = match (self.window, c.window) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        if self.failure.is_none() {
            self.failure = c.mismatch.as_ref().map(|d| Locator::from_discrepancy(label, d));
        }
    }

    fn value<T: PartialEq + ToString>(&mut self, at: impl FnOnce() -> String, expected: T, got: T) {
        self.compared += 1;
        if self.failure.is_none() && expected != got {
            self.failure = Some(Locator::value(at(), expected, got));
        }
    }
}

type Runner = fn(&Orders) -> Result<Outcome>;

pub struct CheckDescriptor {
    pub name: &'static str,
    pub source: &'static str,
    pub defaults: Orders,
    runner: Runner,
}

const SERIES: Orders = Orders { q_max: Some(8), u_max: None, window: Some(24) };

pub static REGISTRY: [CheckDescriptor; 15] = [
    CheckDescriptor {
        name: "dthat1-assembly",
        source: "Euler-characteristic series in classes (1,1,d) rebuilt from local contributions",
        defaults: SERIES,
        runner: run_dthat1,
    },
    CheckDescriptor {
        name: "dthat2-assembly",
        source: "Euler-characteristic series in classes (1,2,d): assembly against the closed form",
        defaults: SERIES,
        runner: run_dthat2,
    },
    CheckDescriptor {
        name: "fg-consistency",
        source: "f/g lemma: g_d = f_2d plus f_(d/2)(p^2)/2 for even d",
        defaults: Orders { q_max: Some(4), u_max: None, window: Some(24) },
        runner: run_fg,
    },
    CheckDescriptor {
        name: "genus2-bridge",
        source: "genus 2 quotient counts equal nu on isolated reduced points",
        defaults: Orders::NONE,
        runner: run_genus2,
    },
    CheckDescriptor {
        name: "genus3-bridge",
        source: "genus 3 counts on A x E equal twice nu(d1,d2,d3)",
        defaults: Orders::NONE,
        runner: run_genus3,
    },
    CheckDescriptor {
        name: "gs-equals-qdqS",
        source: "stable pairs series of Goettsche-Shende equals q d/dq of S",
        defaults: Orders { q_max: Some(10), u_max: None, window: None },
        runner: run_gs,
    },
    CheckDescriptor {
        name: "gwdt-1-1-d",
        source: "GW/DT correspondence in classes (1,1,d) under y = -p",
        defaults: Orders { q_max: Some(8), u_max: Some(4), window: Some(24) },
        runner: run_gwdt,
    },
    CheckDescriptor {
        name: "hyp3-row",
        source: "closed formula for hyperelliptic genus 3 counts",
        defaults: Orders::NONE,
        runner: run_hyp3,
    },
    CheckDescriptor {
        name: "k-two-representations",
        source: "theta function K: product form in p against the exponential form in u",
        defaults: Orders { q_max: Some(8), u_max: Some(16), window: Some(24) },
        runner: run_k_two,
    },
    CheckDescriptor {
        name: "mc-coherence",
        source: "multiple-cover rule against the closed quotient counts; threefold f at (3,2,2)",
        defaults: Orders::NONE,
        runner: run_mc,
    },
    CheckDescriptor {
        name: "modular-identity",
        source: "K^4 (3 wp + theta_D4/4) = (3/2) K^4 wp + (3/8) K(p^2,q^2)^2",
        defaults: SERIES,
        runner: run_modular_identity,
    },
    CheckDescriptor {
        name: "nonvanishing-pattern",
        source: "hyperelliptic counts vanish exactly below the nonvanishing bound",
        defaults: Orders::NONE,
        runner: run_nonvanishing,
    },
    CheckDescriptor {
        name: "nu-oracles",
        source: "nu by subgroup sums, isotropic subgroups and the closed divisor sum",
        defaults: Orders::NONE,
        runner: run_nu_oracles,
    },
    CheckDescriptor {
        name: "nu-recursion",
        source: "prime-power recursion for nu(p^m, p^n)",
        defaults: Orders::NONE,
        runner: run_nu_recursion,
    },
    CheckDescriptor {
        name: "table1",
        source: "published table of hyperelliptic counts, g = 2..8, d = 1..10",
        defaults: Orders::NONE,
        runner: run_table1,
    },
];

pub fn check_names() -> Vec<&'static str> {
    REGISTRY.iter().map(|c| c.name).collect()
}

pub fn find_check(name: &str) -> Option<&'static CheckDescriptor> {
    REGISTRY.iter().find(|c| c.name == name)
}

/// Runs one registered check. Computation errors become a skipped verdict with the reason.
pub fn run_check(name: &str, overrides: &Orders) -> Result<VerifyReport> {
    let desc = find_check(name).ok_or_else(|| Error::Precondition(format!("unknown check `{name}`")))?;
    let orders = desc.defaults.with_overrides(overrides);
    let (compared, window_met, verdict) = match (desc.runner)(&orders) {
        Ok(o) => (o.compared, o.window, o.failure.map_or(Verdict::Pass, Verdict::Fail)),
        Err(e) => (0, None, Verdict::Skipped(e.to_string())),
    };
    Ok(VerifyReport { check: name.into(), source: desc.source.into(), orders, window_met, compared, verdict })
}

/// Runs the named checks (all when `names` is empty) in parallel, sorted by name.
pub fn run_checks(names: &[String], overrides: &Orders) -> Result<Vec<VerifyReport>> {
    let names: Vec<String> =
        if names.is_empty() { check_names().into_iter().map(String::from).collect() } else { names.to_vec() };
    for n in &names {
        if find_check(n).is_none() {
            return Err(Error::Precondition(format!("unknown check `{n}`")));
        }
    }
    let mut out: Vec<VerifyReport> =
        names.par_iter().map(|n| run_check(n, overrides)).collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| a.check.cmp(&b.check));
    Ok(out)
}

pub fn reports_to_json(reports: &[VerifyReport]) -> String {
    let all = reports.iter().all(VerifyReport::passed);
    let v = json!({
        "all_passed": all,
        "checks": reports.iter().map(VerifyReport::to_json).collect::<Vec<_>>(),
    });
    serde_json::to_string_pretty(&v).expect("serialisable") + "\n"
}

fn run_k_two(o: &Orders) -> Result<Outcome> {
    let p = theta_k_pq(o.q(), o.w())?.antisymmetric_w_to_u(o.u())?;
    let u = theta_k_u(o.q(), o.u())?;
    let mut out = Outcome::default();
    out.series("K in u", &p.compare(&u));
    Ok(out)
}

fn run_dthat1(o: &Orders) -> Result<Outcome> {
    let mut out = Outcome::default();
    let a = dt_hat_1_assembled(o.q(), o.w())?;
    out.series("dthat1", &a.invariants().compare(dt_hat_1(o.q(), o.w())?.invariants()));
    Ok(out)
}

fn run_dthat2(o: &Orders) -> Result<Outcome> {
    let mut out = Outcome::default();
    let a = dt_hat_2_assembled(o.q(), o.w())?;
    out.series("dthat2", &a.invariants().compare(dt_hat_2_closed(o.q(), o.w())?.invariants()));
    Ok(out)
}

fn run_modular_identity(o: &Orders) -> Result<Outcome> {
    let mut out = Outcome::default();
    for c in modular_identity_check(o.q(), o.w())? {
        out.series(&c.name, &c.comparison);
    }
    Ok(out)
}

fn run_fg(o: &Orders) -> Result<Outcome> {
    let mut out = Outcome::default();
    for c in consistency_fg(o.q(), o.w())? {
        out.compared += 1;
        if out.failure.is_none() {
            out.failure = c.comparison.mismatch.as_ref().map(|d| Locator::from_discrepancy(&c.name, d));
        }
        out.window = match (out.window, c.comparison.window) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
    }
    Ok(out)
}

fn run_gwdt(o: &Orders) -> Result<Outcome> {
    let mut out = Outcome::default();
    let dt = dt_1(o.q(), o.w())?;
    out.series("gw vs dt", &gw_11d_series(o.q(), o.w())?.invariants().compare(dt.invariants()));
    let gw = gw_from_dt(&dt, o.u().max(4))?;
    let c0 = gw.coeff(0)?;
    out.value(|| "u^2 q^0".into(), rat(1), c0.coeff(2)?.clone());
    out.value(|| "u^4 q^0".into(), Rational::new(BigInt::from(-1), BigInt::from(12)), c0.coeff(4)?.clone());
    Ok(out)
}

fn run_table1(_: &Orders) -> Result<Outcome> {
    let t = hyp_h_table(8, 10)?;
    let mut out = Outcome::default();
    for (i, row) in TABLE1.iter().enumerate() {
        let g = i as i64 + 2;
        for (j, &v) in row.iter().enumerate() {
            let d = j as i64 + 1;
            let got = t.get(g, d).cloned().unwrap_or_default();
            out.value(|| format!("g={g}, d={d}"), rat(v), got);
        }
    }
    Ok(out)
}

fn run_hyp3(_: &Orders) -> Result<Outcome> {
    let mut out = Outcome::default();
    for d in 1..=10u64 {
        out.value(|| format!("d={d}"), rat(TABLE1[1][d as usize - 1]), hyp3_closed(d)?);
    }
    Ok(out)
}

fn run_nonvanishing(_: &Orders) -> Result<Outcome> {
    let t = hyp_h_table(8, 10)?;
    let mut out = Outcome::default();
    for g in 2..=8u32 {
        for d in 1..=10u64 {
            let nonzero = t.get(g as i64, d as i64).is_some_and(|v| *v != rat(0));
            out.value(|| format!("g={g}, d={d}"), hyp_nonvanishing(g, d), nonzero);
        }
    }
    Ok(out)
}

/// Pairs d1 | d2 with d1 d2 <= 24.
pub fn nu_range() -> Vec<(u64, u64)> {
    let mut v = Vec::new();
    for d1 in 1..=4u64 {
        for d2 in (d1..=24).step_by(d1 as usize) {
            if d1 * d2 <= 24 {
                v.push((d1, d2));
            }
        }
    }
    v
}

fn run_nu_oracles(_: &Orders) -> Result<Outcome> {
    let mut out = Outcome::default();
    for (d1, d2) in nu_range() {
        let s = BigInt::from(nu_subgroup_formula(&[d1, d2])?);
        let at = || format!("nu({d1},{d2})");
        out.value(at, s.clone(), BigInt::from(nu_isotropic(&[d1, d2])?));
        out.value(at, s.clone(), nu_closed(d1, d2)?);
        if d1 == 1 {
            out.value(at, sigma(1, d2), s);
        }
    }
    Ok(out)
}

fn run_nu_recursion(_: &Orders) -> Result<Outcome> {
    let mut out = Outcome::default();
    for p in [2u64, 3] {
        for total in 0..=5u32 {
            if p.pow(total) > 32 {
                break;
            }
            for m in 0..=total / 2 {
                let n = total - m;
                let (a, b) = (p.pow(m), p.pow(n));
                let oracle = BigInt::from(nu_subgroup_formula(&[a, b])?);
                out.value(|| format!("nu({a},{b})"), oracle, nu_recursion(p, m, n)?);
            }
        }
    }
    Ok(out)
}

fn run_genus2(_: &Orders) -> Result<Outcome> {
    let mut out = Outcome::default();
    for (d1, d2) in nu_range() {
        let nu = rat(nu_subgroup_formula(&[d1, d2])? as i64);
        out.value(|| format!("({d1},{d2})"), nu, n_quotient(2, SurfaceClassType::new(d1, d2)?)?);
    }
    Ok(out)
}

/// Triples of positive integers with product at most 16.
pub fn genus3_range() -> Vec<[u64; 3]> {
    let mut v = Vec::new();
    for d1 in 1..=16u64 {
        for d2 in 1..=16 / d1 {
            for d3 in 1..=16 / (d1 * d2) {
                v.push([d1, d2, d3]);
            }
        }
    }
    v
}

fn run_genus3(_: &Orders) -> Result<Outcome> {
    let p = ThreefoldPrimitives::new(16, 4)?;
    let mut out = Outcome::default();
    for d in genus3_range() {
        let two_nu = rat(2 * nu_subgroup_formula(&d)? as i64);
        out.value(|| format!("{d:?}"), two_nu, p.n_g_imprimitive(3, ThreefoldClassType::new(d[0], d[1], d[2])?)?);
    }
    Ok(out)
}

fn run_mc(_: &Orders) -> Result<Outcome> {
    let mut out = Outcome::default();
    for d1 in 1..=24u64 {
        for d2 in d1..=24 / d1 {
            for g in 2..=6u32 {
                let t = SurfaceClassType::new(d1, d2)?;
                out.value(|| format!("g={g}, ({d1},{d2})"), n_quotient(g, t)?, multiple_cover_surface(g, t)?);
            }
        }
    }
    let f = mc_threefold_f(3, 2, 2)?;
    out.value(|| "f(3,2,2)".into(), rat(30), f.clone());
    let p = ThreefoldPrimitives::new(4, 4)?;
    out.value(|| "N_3(2,2,1)".into(), f, p.n_g_imprimitive(3, ThreefoldClassType::new(2, 2, 1)?)?);
    Ok(out)
}

fn run_gs(o: &Orders) -> Result<Outcome> {
    let mut out = Outcome::default();
    let gs = crate::surface::gs_stable_pairs_series(o.q());
    out.series("gs", &gs.compare(&s_function(o.q()).q_derivative()));
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    Hyperelliptic,
    Genus2Quotient,
    Genus3,
    Nu,
}

impl std::str::FromStr for TableKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hyperelliptic" => Ok(TableKind::Hyperelliptic),
            "genus2-quotient" => Ok(TableKind::Genus2Quotient),
            "genus3" => Ok(TableKind::Genus3),
            "nu" => Ok(TableKind::Nu),
            _ => Err(Error::Precondition(format!("unknown table kind `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
    Plain,
}

impl std::str::FromStr for TableFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            "plain" => Ok(TableFormat::Plain),
            _ => Err(Error::Precondition(format!("unknown format `{s}`"))),
        }
    }
}

/// Table sizes. For `nu`, `d_max` bounds d1 d2; for the genus-2/3 tables it bounds d and d'.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableParams {
    pub g_max: u32,
    pub d_max: u64,
}

impl TableParams {
    pub fn default_for(kind: TableKind) -> Self {
        match kind {
            TableKind::Hyperelliptic => TableParams { g_max: 8, d_max: 10 },
            TableKind::Nu => TableParams { g_max: 0, d_max: 24 },
            _ => TableParams { g_max: 0, d_max: 6 },
        }
    }
}

pub fn build_table(kind: TableKind, params: TableParams) -> Result<InvariantTable> {
    let d = params.d_max;
    if d == 0 {
        return Err(Error::Precondition("d_max >= 1".into()));
    }
    let grid = |f: &dyn Fn(u64, u64) -> Result<Rational>, rows: Vec<i64>, cols: Vec<i64>| -> Result<Vec<Vec<Rational>>> {
        rows.iter().map(|&r| cols.iter().map(|&c| f(r as u64, c as u64)).collect()).collect()
    };
    let span = |n: u64| (1..=n as i64).collect::<Vec<_>>();
    match kind {
        TableKind::Hyperelliptic => hyp_h_table(params.g_max, d as usize),
        TableKind::Genus2Quotient => {
            let cells = grid(&|a, b| n_quotient(2, SurfaceClassType::new(a, b)?), span(d), span(d))?;
            InvariantTable::new(
                "genus 2 quotient counts N_{2,(d,d')}",
                "sum_{k | gcd} sum_{m | dd'/k^2} k^3 m",
                ("d", span(d)),
                ("d'", span(d)),
                cells,
                "n_quotient",
            )
        }
        TableKind::Genus3 => {
            let p = ThreefoldPrimitives::new((d * d) as usize, 4)?;
            let cells =
                grid(&|a, b| p.n_g_imprimitive(3, ThreefoldClassType::new(1, a, b)?), span(d), span(d))?;
            InvariantTable::new(
                "genus 3 counts N_{3,(1,d,d')} on A x E",
                "sum_k n(1,d,d',k) k^3 N_{3,(1,1,dd'/k^2)}",
                ("d", span(d)),
                ("d'", span(d)),
                cells,
                "n_g_imprimitive",
            )
        }
        TableKind::Nu => {
            let rows: Vec<i64> = (1..=d).take_while(|r| r * r <= d).map(|r| r as i64).collect();
            let cells = grid(&|a, b| Ok(Rational::from_integer(nu_closed(a, b)?)), rows.clone(), span(d))?;
            InvariantTable::new(
                "isogeny counts nu(d1,d2)",
                "sum_{k | gcd} k^3 sigma(d1 d2 / k^2)",
                ("d1", rows),
                ("d2", span(d)),
                cells,
                "nu_closed",
            )
        }
    }
}

/// Renders a table; the output is byte-stable for fixed inputs.
pub fn emit_table(kind: TableKind, params: TableParams, format: TableFormat) -> Result<String> {
    let t = build_table(kind, params)?;
    Ok(match format {
        TableFormat::Csv => t.to_csv(),
        TableFormat::Plain => t.to_plain(),
        TableFormat::Json => serde_json::to_string_pretty(&t.to_json()).expect("serialisable") + "\n",
    })
}

/// Series the CLI can dump, with the regime each one lives in.
pub const SERIES_NAMES: [&str; 14] = [
    "e2", "e4", "e6", "theta-d4", "k", "k-u", "k2", "k4", "wp", "s", "gs", "dt1", "dt2", "hyp-h",
];

/// Builds a named series at the given orders.
pub fn named_series(name: &str, q: usize, u: usize, window: i64) -> Result<AnySeries> {
    Ok(match name {
        "e2" => AnySeries::Q(eisenstein(2, q)?),
        "e4" => AnySeries::Q(eisenstein(4, q)?),
        "e6" => AnySeries::Q(eisenstein(6, q)?),
        "theta-d4" => AnySeries::Q(theta_d4(q)),
        "k" => AnySeries::PQ(theta_k_pq(q, window)?),
        "k-u" => AnySeries::UQ(theta_k_u(q, u)?),
        "k2" => AnySeries::PQ(theta_k_power_pq(2, q, Some(window))?),
        "k4" => AnySeries::PQ(theta_k_power_pq(4, q, Some(window))?),
        "wp" => AnySeries::PQ(weierstrass_p(q, window)?),
        "s" => AnySeries::PQ(s_function(q)),
        "gs" => AnySeries::PQ(crate::surface::gs_stable_pairs_series(q)),
        "dt1" => AnySeries::PQ(dt_1(q, window)?.invariants().clone()),
        "dt2" => AnySeries::PQ(crate::threefold::dt_2(q, window)?.invariants().clone()),
        "hyp-h" => AnySeries::UQ(crate::surface::hyp_h_series(q, u)?),
        _ => return Err(Error::Precondition(format!("unknown series `{name}`"))),
    })
}
