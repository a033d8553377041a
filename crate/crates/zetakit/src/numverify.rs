//! Floating-point verification of the exact closed forms against direct
//! summation of the defining series and the sine-series identities.
//!
//! Alternating series go through iterated averaging of partial sums; the
//! absolutely convergent ones are summed directly with an integral tail
//! correction. Everything here works in binary-64 and reports deviations
//! against the exact values pushed to float.

use crate::exactnum::{bernoulli_minus, binomial, factorial, Rational};
use crate::values::{self, eta_even, eval, FunctionId, PiValue, Unsupported};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::fmt;

/// First 100 decimal digits of pi, truncated (not rounded).
const PI_DIGITS: &str = "1415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170679";

/// Decimal digits of pi used when pushing exact values to float.
const DEFAULT_PI_DIGITS: u32 = 30;

/// Knobs for the numeric verifiers.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericConfig {
    pub tolerance: f64,
    pub max_terms: usize,
    pub acceleration_depth: usize,
}

impl Default for NumericConfig {
    fn default() -> Self {
        NumericConfig {
            tolerance: 1e-9,
            max_terms: 100_000,
            acceleration_depth: 12,
        }
    }
}

/// One comparison between a summed series and an exact closed form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub deviation: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub terms_used: usize,
}

impl VerificationReport {
    fn new(name: String, lhs: f64, rhs: f64, tolerance: f64, terms_used: usize) -> Self {
        let deviation = (lhs - rhs).abs();
        VerificationReport {
            name,
            lhs,
            rhs,
            deviation,
            tolerance,
            passed: deviation <= tolerance,
            terms_used,
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:<42} lhs={:.15e} rhs={:.15e} dev={:.3e} tol={:.3e} terms={}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.lhs,
            self.rhs,
            self.deviation,
            self.tolerance,
            self.terms_used
        )
    }
}

/// Result of an accelerated alternating summation.
#[derive(Clone, Copy, Debug)]
pub struct AcceleratedSum {
    /// Iterated-averaging estimate of the series value.
    pub value: f64,
    /// Raw partial sum over all terms used.
    pub raw_partial: f64,
    /// Magnitude of the first neglected term, the alternating remainder bound.
    pub remainder_bound: f64,
    pub terms_used: usize,
}

/// The two sine-series identities under test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SineVariant {
    /// Alternating sine series, valid on [-pi, pi].
    AlternatingSine,
    /// Plain sine series, valid on [0, 2pi].
    PlainSine,
}

impl fmt::Display for SineVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SineVariant::AlternatingSine => write!(f, "alternating-sine"),
            SineVariant::PlainSine => write!(f, "plain-sine"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum NumverifyError {
    /// pi truncation requested outside 1..=100 digits.
    DigitsOutOfRange(u32),
    /// Sign sampling found two consecutive nonzero terms with equal sign.
    NonAlternating {
        position: usize,
    },
    /// The exact side has no closed form at this argument.
    Unsupported(Unsupported),
    /// The series does not converge at this argument.
    NotConvergent {
        func: FunctionId,
        s: i64,
    },
    /// x lies outside the identity's validity interval.
    DomainViolation {
        variant: SineVariant,
        x: f64,
    },
    /// k exceeds the supported range for the sine identities.
    KOutOfRange {
        k: u32,
    },
    /// Direct summation cannot reach the tolerance within max_terms.
    SlowConvergence {
        variant: SineVariant,
        k: u32,
    },
    UnknownSuite(String),
}

impl fmt::Display for NumverifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NumverifyError::DigitsOutOfRange(d) => {
                write!(f, "pi digits must lie in 1..=100, got {d}")
            }
            NumverifyError::NonAlternating { position } => {
                write!(f, "series is not alternating near term {position}")
            }
            NumverifyError::Unsupported(u) => write!(f, "{u}"),
            NumverifyError::NotConvergent { func, s } => {
                write!(f, "series for {func}({s}) does not converge")
            }
            NumverifyError::DomainViolation { variant, x } => {
                write!(
                    f,
                    "x = {x} is outside the validity interval of the {variant} identity"
                )
            }
            NumverifyError::KOutOfRange { k } => {
                write!(f, "sine identities are verified for k <= 6, got {k}")
            }
            NumverifyError::SlowConvergence { variant, k } => {
                write!(
                    f,
                    "{variant} identity at k = {k} converges too slowly for direct summation"
                )
            }
            NumverifyError::UnknownSuite(name) => write!(f, "unknown suite '{name}'"),
        }
    }
}

impl std::error::Error for NumverifyError {}

impl From<Unsupported> for NumverifyError {
    fn from(u: Unsupported) -> Self {
        NumverifyError::Unsupported(u)
    }
}

/// Truncation of pi to `digits` decimal places as an exact rational.
pub fn pi_to_rational(digits: u32) -> Result<Rational, NumverifyError> {
    if !(1..=100).contains(&digits) {
        return Err(NumverifyError::DigitsOutOfRange(digits));
    }
    let mantissa: String = format!("3{}", &PI_DIGITS[..digits as usize]);
    let num: BigInt = mantissa.parse().expect("pi literal is decimal");
    let den = BigInt::from(10u32).pow(digits);
    Ok(Rational::new(num, den))
}

/// Evaluates a pi-power sum in floating point with pi truncated to `digits`.
pub fn to_float(v: &PiValue, digits: u32) -> Result<f64, NumverifyError> {
    let pi = pi_to_rational(digits)?.to_f64();
    Ok(v.iter().map(|(m, q)| q.to_f64() * pi.powi(m as i32)).sum())
}

fn exact_to_float(v: &PiValue) -> f64 {
    to_float(v, DEFAULT_PI_DIGITS).expect("default digit count is in range")
}

/// Binomially weighted average of the trailing window of partial sums.
///
/// Equivalent to applying the Euler transform to the sequence tail; exact
/// for the limit of any convergent sequence and strongly damping for
/// alternating remainders.
fn iterated_average(partials: &[f64], depth: usize) -> f64 {
    if partials.is_empty() {
        return 0.0;
    }
    let width = depth.min(partials.len() - 1);
    let mut window = partials[partials.len() - 1 - width..].to_vec();
    while window.len() > 1 {
        for i in 0..window.len() - 1 {
            window[i] = 0.5 * (window[i] + window[i + 1]);
        }
        window.pop();
    }
    window[0]
}

/// Sums an alternating series term(1) + term(2) + ... by iterated averaging
/// of the partial sums.
///
/// The sign pattern of the first 100 terms is sampled first; two adjacent
/// nonzero terms with the same sign reject the input.
pub fn sum_alternating<F>(term: F, cfg: &NumericConfig) -> Result<AcceleratedSum, NumverifyError>
where
    F: Fn(usize) -> f64,
{
    let n = cfg.max_terms.max(1);
    let mut last_sign = 0i8;
    for u in 1..=n.min(100) {
        let t = term(u);
        let sign = if t > 0.0 {
            1
        } else if t < 0.0 {
            -1
        } else {
            0
        };
        if sign != 0 {
            if sign == last_sign {
                return Err(NumverifyError::NonAlternating { position: u });
            }
            last_sign = sign;
        }
    }

    let mut partials = Vec::with_capacity(n);
    let mut acc = 0.0;
    for u in 1..=n {
        acc += term(u);
        partials.push(acc);
    }
    Ok(AcceleratedSum {
        value: iterated_average(&partials, cfg.acceleration_depth),
        raw_partial: acc,
        remainder_bound: term(n + 1).abs(),
        terms_used: n,
    })
}

/// Direct sum of g(n) for n in start..start+terms plus an Euler-Maclaurin
/// style tail for g(x) = (scale*x + shift)^(-s): integral, half-term and
/// first derivative correction at the cut.
fn sum_power_series(start: usize, scale: f64, shift: f64, s: i64, terms: usize) -> f64 {
    let s_f = s as f64;
    let mut acc = 0.0;
    // ascending magnitudes: sum small terms first
    for n in (start..start + terms).rev() {
        acc += (scale * n as f64 + shift).powi(-(s as i32));
    }
    let cut = scale * (start + terms) as f64 + shift;
    let integral = cut.powf(1.0 - s_f) / (scale * (s_f - 1.0));
    let half = 0.5 * cut.powf(-s_f);
    let deriv = scale * s_f * cut.powf(-s_f - 1.0) / 12.0;
    acc + integral + half + deriv
}

/// Compares direct/accelerated summation of the defining series against
/// the exact closed form at (func, s).
pub fn verify_value(
    func: FunctionId,
    s: i64,
    cfg: &NumericConfig,
) -> Result<VerificationReport, NumverifyError> {
    let exact = eval(func, s)?;
    let rhs = exact_to_float(&exact);
    let min_s = match func {
        FunctionId::Eta | FunctionId::Beta => 1,
        FunctionId::Zeta | FunctionId::Lambda => 2,
    };
    if s < min_s {
        return Err(NumverifyError::NotConvergent { func, s });
    }

    let name = format!("{func}({s}) series vs closed form");
    let (lhs, terms_used) = match func {
        FunctionId::Zeta => (
            sum_power_series(1, 1.0, 0.0, s, cfg.max_terms),
            cfg.max_terms,
        ),
        FunctionId::Lambda => (
            sum_power_series(0, 2.0, 1.0, s, cfg.max_terms),
            cfg.max_terms,
        ),
        FunctionId::Eta => {
            let accel = sum_alternating(
                |u| {
                    let sign = if u % 2 == 1 { 1.0 } else { -1.0 };
                    sign * (u as f64).powi(-(s as i32))
                },
                cfg,
            )?;
            (accel.value, accel.terms_used)
        }
        FunctionId::Beta => {
            let accel = sum_alternating(
                |u| {
                    let sign = if u % 2 == 1 { 1.0 } else { -1.0 };
                    sign * (2.0 * u as f64 - 1.0).powi(-(s as i32))
                },
                cfg,
            )?;
            (accel.value, accel.terms_used)
        }
    };
    Ok(VerificationReport::new(
        name,
        lhs,
        rhs,
        cfg.tolerance,
        terms_used,
    ))
}

/// Finite side of the alternating sine identity:
/// sum_{v=0}^{k} (-1)^v x^(2v+1) / (2v+1)! * eta(2(k-v)).
fn eq7_finite_side(k: u32, x: f64) -> f64 {
    let mut acc = 0.0;
    for v in 0..=k {
        let sign = if v % 2 == 0 { 1.0 } else { -1.0 };
        let fact = Rational::from_integer(factorial(2 * v as u64 + 1)).to_f64();
        let eta = if k == v {
            0.5
        } else {
            exact_to_float(&eta_even(k - v))
        };
        acc += sign * x.powi(2 * v as i32 + 1) / fact * eta;
    }
    acc
}

/// Finite side of the plain sine identity:
/// (-1)^(k+1)/(2k+1)! sum_{u=0}^{k} (2^(2u-1) - 1) C(2k+1, 2u)
///     (pi - x)^(2(k-u)+1) pi^(2u) B_2u.
fn eq10_finite_side(k: u32, x: f64) -> f64 {
    let pi = pi_to_rational(DEFAULT_PI_DIGITS)
        .expect("default digit count is in range")
        .to_f64();
    let mut acc = 0.0;
    for u in 0..=k as u64 {
        let coeff = (Rational::two_pow(2 * u as i64 - 1) - Rational::one())
            * Rational::from_integer(binomial(2 * k as u64 + 1, 2 * u))
            * bernoulli_minus(2 * u);
        acc +=
            coeff.to_f64() * (pi - x).powi(2 * (k as i32 - u as i32) + 1) * pi.powi(2 * u as i32);
    }
    let sign = Rational::neg_one_pow(k as u64 + 1).to_f64();
    sign * acc / Rational::from_integer(factorial(2 * k as u64 + 1)).to_f64()
}

/// Verifies one of the sine-series identities at (k, x) by summing the
/// series side and evaluating the finite Bernoulli side.
pub fn verify_sine_identity(
    k: u32,
    x: f64,
    variant: SineVariant,
    cfg: &NumericConfig,
) -> Result<VerificationReport, NumverifyError> {
    if k > 6 {
        return Err(NumverifyError::KOutOfRange { k });
    }
    let pi = std::f64::consts::PI;
    let (lo, hi) = match variant {
        SineVariant::AlternatingSine => (-pi, pi),
        SineVariant::PlainSine => (0.0, 2.0 * pi),
    };
    if !(lo..=hi).contains(&x) {
        return Err(NumverifyError::DomainViolation { variant, x });
    }

    let exponent = 2 * k as i32 + 1;
    let (lhs, rhs, terms) = match variant {
        SineVariant::AlternatingSine => {
            let mut partials = Vec::with_capacity(cfg.max_terms);
            let mut acc = 0.0;
            for u in 1..=cfg.max_terms {
                let sign = if u % 2 == 1 { 1.0 } else { -1.0 };
                acc += sign * (u as f64 * x).sin() * (u as f64).powi(-exponent);
                partials.push(acc);
            }
            let lhs = iterated_average(&partials, cfg.acceleration_depth);
            (lhs, eq7_finite_side(k, x), cfg.max_terms)
        }
        SineVariant::PlainSine => {
            // tail of sum |sin(ux)|/u^(2k+1) is below int_N u^(-2k-1) = N^(-2k)/(2k)
            if k == 0 {
                return Err(NumverifyError::SlowConvergence { variant, k });
            }
            let tail_bound = (cfg.max_terms as f64).powi(-(2 * k as i32)) / (2.0 * k as f64);
            if tail_bound > 0.5 * cfg.tolerance {
                return Err(NumverifyError::SlowConvergence { variant, k });
            }
            let mut acc = 0.0;
            for u in (1..=cfg.max_terms).rev() {
                acc += (u as f64 * x).sin() * (u as f64).powi(-exponent);
            }
            (acc, eq10_finite_side(k, x), cfg.max_terms)
        }
    };
    let name = format!("{variant} identity k={k} x={x:.6}");
    Ok(VerificationReport::new(
        name,
        lhs,
        rhs,
        cfg.tolerance,
        terms,
    ))
}

fn values_battery(cfg: &NumericConfig) -> Result<Vec<VerificationReport>, NumverifyError> {
    let mut reports = Vec::new();
    for k in 1..=5u32 {
        for func in [FunctionId::Eta, FunctionId::Zeta, FunctionId::Lambda] {
            reports.push(verify_value(func, 2 * k as i64, cfg)?);
        }
    }
    for k in 0..=4u32 {
        reports.push(verify_value(FunctionId::Beta, 2 * k as i64 + 1, cfg)?);
    }
    Ok(reports)
}

/// 20 evenly spaced interior sample points plus the pinned x = pi/2.
fn sine_sample_grid(variant: SineVariant) -> Vec<f64> {
    let pi = std::f64::consts::PI;
    let (lo, hi) = match variant {
        SineVariant::AlternatingSine => (-pi, pi),
        SineVariant::PlainSine => (0.0, 2.0 * pi),
    };
    let mut grid: Vec<f64> = (1..=20).map(|i| lo + (hi - lo) * i as f64 / 21.0).collect();
    grid.push(0.5 * pi);
    grid
}

fn identities_battery(cfg: &NumericConfig) -> Result<Vec<VerificationReport>, NumverifyError> {
    let mut reports = Vec::new();
    for k in 1..=3u32 {
        for variant in [SineVariant::AlternatingSine, SineVariant::PlainSine] {
            for x in sine_sample_grid(variant) {
                reports.push(verify_sine_identity(k, x, variant, cfg)?);
            }
        }
    }
    Ok(reports)
}

fn functional_equation_battery(cfg: &NumericConfig) -> Vec<VerificationReport> {
    (1..=40u32)
        .map(|k| {
            // the decisive check is the exact rational identity; the float
            // fields only echo both sides for the report
            let holds = values::beta_functional_check(k);
            let lhs = values::beta_neg_euler(2 * k).coefficient(0);
            let rhs = Rational::two_pow(2 * k as i64 + 1)
                * Rational::neg_one_pow(k as u64)
                * Rational::from_integer(factorial(2 * k as u64))
                * values::beta_odd_euler(k).coefficient(2 * k + 1);
            let mut report = VerificationReport::new(
                format!("functional-equation k={k:02}"),
                lhs.to_f64(),
                rhs.to_f64(),
                cfg.tolerance,
                0,
            );
            report.deviation = if holds { 0.0 } else { f64::INFINITY };
            report.passed = report.deviation <= report.tolerance;
            report
        })
        .collect()
}

/// Runs a named battery of verifications; reports come back sorted by name.
pub fn run_suite(
    name: &str,
    cfg: &NumericConfig,
) -> Result<Vec<VerificationReport>, NumverifyError> {
    let mut reports = match name {
        "values" => values_battery(cfg)?,
        "identities" => identities_battery(cfg)?,
        "functional-equation" => functional_equation_battery(cfg),
        "all" => {
            let mut all = values_battery(cfg)?;
            all.extend(identities_battery(cfg)?);
            all.extend(functional_equation_battery(cfg));
            all
        }
        other => return Err(NumverifyError::UnknownSuite(other.to_string())),
    };
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(reports)
}
