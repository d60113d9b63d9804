//! Deterministic machine output.
//!
//! Every float is written with 17 significant digits and a signed exponent
//! (`1.7724538509055163e+0`), the same text in JSON and CSV. Non-finite values become `null` in JSON and
//! `NaN`/`inf`/`-inf` in CSV.

use std::io::{self, Write};

use regdet_core::detengine::VerificationReport;
use regdet_core::{ComplexValue, Signature};
use serde_json::{json, Map, Number, Value};

pub fn float_text(x: f64) -> String {
    if x.is_finite() {
        let text = format!("{x:.16e}");
        match text.split_once('e') {
            Some((mantissa, exp)) if !exp.starts_with('-') => format!("{mantissa}e+{exp}"),
            _ => text,
        }
    } else {
        x.to_string()
    }
}

pub fn float_value(x: f64) -> Value {
    if x.is_finite() {
        Value::Number(float_text(x).parse::<Number>().expect("finite float text is a JSON number"))
    } else {
        Value::Null
    }
}

pub fn complex_value(z: ComplexValue) -> Value {
    Value::Array(vec![float_value(z.re), float_value(z.im)])
}

pub fn signature_value(sig: Signature) -> Value {
    json!({ "r1": sig.r1(), "r2": sig.r2() })
}

/// Which presentation of `G_K` produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Closed,
    Alt,
    Regularized,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Alt => "alt",
            Method::Regularized => "regularized",
        }
    }
}

/// One evaluated value of `G_K(s)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OutputRecord {
    pub s: ComplexValue,
    pub value: ComplexValue,
    pub method: Method,
    pub signature: Signature,
}

impl OutputRecord {
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("s".into(), complex_value(self.s));
        m.insert("value".into(), complex_value(self.value));
        m.insert("method".into(), Value::String(self.method.name().into()));
        m.insert("signature".into(), signature_value(self.signature));
        Value::Object(m)
    }
}

/// `{"identity", "tolerance", "max_residual", "passed", "points": [...]}`.
pub fn report_json(report: &VerificationReport) -> Value {
    let points = report
        .gridpoints
        .iter()
        .map(|p| {
            let mut m = Map::new();
            m.insert("s".into(), complex_value(p.s));
            m.insert("lhs".into(), complex_value(p.lhs));
            m.insert("rhs".into(), complex_value(p.rhs));
            m.insert("residual".into(), float_value(p.residual));
            Value::Object(m)
        })
        .collect();
    let mut m = Map::new();
    m.insert("identity".into(), Value::String(report.identity_name.clone()));
    m.insert("tolerance".into(), float_value(report.tolerance));
    m.insert("max_residual".into(), float_value(report.max_residual));
    m.insert("passed".into(), Value::Bool(report.passed));
    m.insert("points".into(), Value::Array(points));
    Value::Object(m)
}

pub const GRID_COLUMNS: [&str; 5] = ["re_s", "im_s", "re_G", "im_G", "abs_G"];

/// `(s, G(s))` rows in the given order.
pub fn write_grid_csv<W: Write>(out: W, rows: &[(ComplexValue, ComplexValue)]) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(GRID_COLUMNS)?;
    for (s, g) in rows {
        w.write_record([s.re, s.im, g.re, g.im, g.norm()].map(float_text))?;
    }
    w.flush()
}

pub fn grid_json(rows: &[(ComplexValue, ComplexValue)]) -> Value {
    Value::Array(
        rows.iter()
            .map(|(s, g)| {
                let mut m = Map::new();
                for (key, x) in GRID_COLUMNS.iter().zip([s.re, s.im, g.re, g.im, g.norm()]) {
                    m.insert((*key).into(), float_value(x));
                }
                Value::Object(m)
            })
            .collect(),
    )
}
