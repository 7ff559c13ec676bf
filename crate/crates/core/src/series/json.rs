//! Canonical JSON form of series: `{"var": "q"|"pq"|"uq", "order": N, "coeffs": ...}`.
//!
//! Windowed Laurent coefficients add a top-level `"windows"` array (null for finite
//! slots) so that a round trip is bit-exact.

use super::{PLaurent, QSeries, Result, SeriesError, USeries};
use crate::arith::{parse_rat, rat_to_string, Rational};
use serde_json::{json, Map, Value};

/// A series in any of the three regimes, for I/O and dynamic dispatch.
#[derive(Debug, Clone, PartialEq)]
pub enum AnySeries {
    Q(QSeries<Rational>),
    PQ(QSeries<PLaurent>),
    UQ(QSeries<USeries>),
}

impl AnySeries {
    pub fn var(&self) -> &'static str {
        match self {
            AnySeries::Q(_) => "q",
            AnySeries::PQ(_) => "pq",
            AnySeries::UQ(_) => "uq",
        }
    }

    pub fn add(&self, rhs: &AnySeries) -> Result<AnySeries> {
        match (self, rhs) {
            (AnySeries::Q(a), AnySeries::Q(b)) => Ok(AnySeries::Q(a.add(b))),
            (AnySeries::PQ(a), AnySeries::PQ(b)) => Ok(AnySeries::PQ(a.add(b))),
            (AnySeries::UQ(a), AnySeries::UQ(b)) => Ok(AnySeries::UQ(a.add(b))),
            _ => Err(SeriesError::RegimeMismatch(self.var(), rhs.var())),
        }
    }

    pub fn mul(&self, rhs: &AnySeries) -> Result<AnySeries> {
        match (self, rhs) {
            (AnySeries::Q(a), AnySeries::Q(b)) => Ok(AnySeries::Q(a.mul(b)?)),
            (AnySeries::PQ(a), AnySeries::PQ(b)) => Ok(AnySeries::PQ(a.mul(b)?)),
            (AnySeries::UQ(a), AnySeries::UQ(b)) => Ok(AnySeries::UQ(a.mul(b)?)),
            _ => Err(SeriesError::RegimeMismatch(self.var(), rhs.var())),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            AnySeries::Q(s) => json!({
                "var": "q",
                "order": s.order(),
                "coeffs": s.coeffs().iter().map(rat_to_string).collect::<Vec<_>>(),
            }),
            AnySeries::PQ(s) => {
                let coeffs: Vec<Value> = s.coeffs().iter().map(laurent_to_json).collect();
                let mut obj = Map::new();
                obj.insert("var".into(), json!("pq"));
                obj.insert("order".into(), json!(s.order()));
                obj.insert("coeffs".into(), Value::Array(coeffs));
                if s.coeffs().iter().any(|c| !c.is_finite()) {
                    let w: Vec<Value> = s.coeffs().iter().map(|c| json!(c.validity())).collect();
                    obj.insert("windows".into(), Value::Array(w));
                }
                Value::Object(obj)
            }
            AnySeries::UQ(s) => json!({
                "var": "uq",
                "order": s.order(),
                "coeffs": s
                    .coeffs()
                    .iter()
                    .map(|u| u.coeffs().iter().map(rat_to_string).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            }),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("series JSON is always serializable")
    }

    pub fn from_json(v: &Value) -> Result<AnySeries> {
        let bad = |m: &str| SeriesError::Precondition(format!("malformed series JSON: {m}"));
        let order = v["order"].as_u64().ok_or_else(|| bad("order"))? as usize;
        let coeffs = v["coeffs"].as_array().ok_or_else(|| bad("coeffs"))?;
        if coeffs.len() != order + 1 {
            return Err(bad("coefficient count does not match order"));
        }
        let r = |x: &Value| x.as_str().and_then(parse_rat).ok_or_else(|| bad("rational"));
        match v["var"].as_str() {
            Some("q") => Ok(AnySeries::Q(QSeries::new(coeffs.iter().map(r).collect::<Result<_>>()?))),
            Some("uq") => {
                let cs = coeffs
                    .iter()
                    .map(|c| {
                        let xs = c.as_array().ok_or_else(|| bad("u coefficients"))?;
                        if xs.is_empty() {
                            return Err(bad("empty u-series"));
                        }
                        Ok(USeries::new(xs.iter().map(r).collect::<Result<_>>()?))
                    })
                    .collect::<Result<_>>()?;
                Ok(AnySeries::UQ(QSeries::new(cs)))
            }
            Some("pq") => {
                let windows = v.get("windows").and_then(Value::as_array);
                let mut cs = Vec::with_capacity(coeffs.len());
                for (i, c) in coeffs.iter().enumerate() {
                    let map = c.as_object().ok_or_else(|| bad("Laurent map"))?;
                    let mut terms = Vec::new();
                    for (k, x) in map {
                        let e: i64 = k.parse().map_err(|_| bad("exponent key"))?;
                        terms.push((e, r(x)?));
                    }
                    let validity = windows.and_then(|w| w.get(i)).and_then(Value::as_i64);
                    cs.push(match validity {
                        Some(val) => PLaurent::windowed(terms, val)?,
                        None => PLaurent::from_terms(terms),
                    });
                }
                Ok(AnySeries::PQ(QSeries::new(cs)))
            }
            _ => Err(bad("var")),
        }
    }
}

fn laurent_to_json(c: &PLaurent) -> Value {
    let map: Map<String, Value> =
        c.terms().iter().map(|(e, x)| (e.to_string(), Value::String(rat_to_string(x)))).collect();
    Value::Object(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{frac, rat};

    #[test]
    fn round_trips() {
        let q = AnySeries::Q(QSeries::new(vec![rat(1), frac(-1, 12), rat(0)]));
        let pq = AnySeries::PQ(QSeries::new(vec![
            PLaurent::windowed([(0, frac(1, 12)), (2, rat(1)), (4, rat(2))], 4).unwrap(),
            PLaurent::from_pairs(&[(-2, 1), (0, -2), (2, 1)]),
        ]));
        let uq = AnySeries::UQ(QSeries::new(vec![USeries::two_sin_half(1, 5), USeries::zero(5)]));
        for s in [q, pq, uq] {
            let text = s.to_json_string();
            let back = AnySeries::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
            assert_eq!(back, s);
            assert_eq!(back.to_json_string(), text);
        }
    }

    #[test]
    fn regime_mismatch_is_typed() {
        let q = AnySeries::Q(QSeries::new(vec![rat(1)]));
        let u = AnySeries::UQ(QSeries::new(vec![USeries::zero(2)]));
        assert!(matches!(q.mul(&u), Err(SeriesError::RegimeMismatch("q", "uq"))));
        assert!(q.add(&q).is_ok());
    }
}
