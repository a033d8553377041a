//! Command implementations and the structured output record shared by the
//! text and JSON renderers.

pub mod parse;

pub use parse::{parse_poly, parse_polynomial, PolynomialExpr, SyntaxError};

use crate::numverify::{self, NumericConfig, NumverifyError, VerificationReport};
use crate::order;
use crate::regsum::{finite_sum, RegularFunction};
use crate::values::{eval, FunctionId, PiValue};
use serde::{Deserialize, Serialize};

/// One pi-power term of an exact value, `coeff * pi^pi_power`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PiTerm {
    pub pi_power: u32,
    pub coeff: String,
}

/// Exact value as text-encoded terms in increasing power; empty for zero.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ExactValue {
    pub terms: Vec<PiTerm>,
}

impl ExactValue {
    fn from_pi_value(v: &PiValue) -> Self {
        ExactValue {
            terms: v
                .iter()
                .map(|(m, q)| PiTerm {
                    pi_power: m,
                    coeff: q.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Unsupported,
    Error,
}

/// Structured result of a single command invocation or table row.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OutputRecord {
    pub name: String,
    pub args: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<ExactValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub float: Option<String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl OutputRecord {
    fn ok(name: String, args: Vec<String>, value: &PiValue, float: Option<String>) -> Self {
        OutputRecord {
            name,
            args,
            exact: Some(ExactValue::from_pi_value(value)),
            float,
            status: Status::Ok,
            reason: None,
        }
    }

    fn unsupported(name: String, args: Vec<String>, reason: String) -> Self {
        OutputRecord {
            name,
            args,
            exact: None,
            float: None,
            status: Status::Unsupported,
            reason: Some(reason),
        }
    }

    fn error(name: String, args: Vec<String>, reason: String) -> Self {
        OutputRecord {
            name,
            args,
            exact: None,
            float: None,
            status: Status::Error,
            reason: Some(reason),
        }
    }

    /// Exact value reassembled from the encoded terms; `None` unless ok.
    pub fn exact_text(&self) -> Option<String> {
        let exact = self.exact.as_ref()?;
        if exact.terms.is_empty() {
            return Some("0".to_string());
        }
        let rendered: Vec<String> = exact
            .terms
            .iter()
            .map(|t| {
                if t.pi_power == 0 {
                    t.coeff.clone()
                } else {
                    format!("({})*pi^{}", t.coeff, t.pi_power)
                }
            })
            .collect();
        Some(rendered.join(" + "))
    }
}

/// Renders `v` with `digits` significant digits as plain decimal text,
/// falling back to e-notation outside a readable exponent range.
pub fn format_significant(v: f64, digits: u32) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sci = format!("{:.*e}", digits as usize - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("e-notation has an exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    let trim = |mut s: String| {
        if s.contains('.') {
            while s.ends_with('0') {
                s.pop();
            }
            if s.ends_with('.') {
                s.pop();
            }
        }
        s
    };
    if exp >= -4 && exp < digits as i32 {
        let places = (digits as i32 - 1 - exp).max(0) as usize;
        trim(format!("{v:.places$}"))
    } else {
        format!("{}e{}", trim(mantissa.to_string()), exp)
    }
}

/// How much of an exact/float pair `eval` should print.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Exact,
    Float,
    Both,
}

/// Decimal digits of pi used when pushing exact values to float.
const FLOAT_PI_DIGITS: u32 = 30;

pub fn cmd_eval(func: FunctionId, s: i64, digits: u32) -> OutputRecord {
    let name = func.to_string();
    let args = vec![s.to_string()];
    match eval(func, s) {
        Ok(value) => {
            let float = numverify::to_float(&value, FLOAT_PI_DIGITS)
                .map(|f| format_significant(f, digits))
                .ok();
            OutputRecord::ok(name, args, &value, float)
        }
        Err(unsupported) => OutputRecord::unsupported(name, args, unsupported.to_string()),
    }
}

pub fn cmd_sum(poly_src: &str, from: i64, to: i64) -> OutputRecord {
    let name = "sum".to_string();
    let args = vec![poly_src.to_string(), from.to_string(), to.to_string()];
    match parse_polynomial(poly_src) {
        Ok(poly) => {
            let rf = RegularFunction::from_poly(poly);
            let value = finite_sum(&rf, from, to);
            let exact = PiValue::from_rational(value.0);
            OutputRecord::ok(name, args, &exact, None)
        }
        Err(err) => OutputRecord::error(name, args, err.to_string()),
    }
}

pub fn cmd_table(func: FunctionId, from: i64, to: i64) -> Vec<OutputRecord> {
    (from.min(to)..=from.max(to))
        .map(|s| cmd_eval(func, s, 15))
        .collect()
}

pub fn cmd_verify(
    suite: &str,
    cfg: &NumericConfig,
) -> Result<Vec<VerificationReport>, NumverifyError> {
    numverify::run_suite(suite, cfg)
}

/// Renders the three-way comparison, e.g. `7 ≺ -5`.
pub fn cmd_order_cmp(a: i64, b: i64) -> String {
    if a == b {
        format!("{a} = {b}")
    } else if order::precedes(a, b) {
        format!("{a} ≺ {b}")
    } else {
        format!("{b} ≺ {a}")
    }
}
