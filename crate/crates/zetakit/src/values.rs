//! Exact closed-form values of the zeta, eta, lambda and beta functions at
//! integer arguments, each derivable by at least two independent routes.
//!
//! Values live in the ring of finite sums q * pi^m with rational q. All
//! routes are exact; cross-route equality is a rational identity, not a
//! numeric coincidence.

use crate::exactnum::{
    bernoulli_minus, bernoulli_plus, binomial, euler_number, factorial, Rational,
};
use crate::regsum::{divergent_alt_power_sum, divergent_power_sum};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::{LazyLock, Mutex};

/// A finite sum of terms q * pi^m with rational q and m >= 0.
///
/// Stored sparsely by power; zero coefficients are never kept, so equality
/// of the underlying maps is exact value equality.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PiValue {
    terms: BTreeMap<u32, Rational>,
}

impl PiValue {
    pub fn zero() -> Self {
        PiValue::default()
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::term(q, 0)
    }

    /// The single term q * pi^m.
    pub fn term(q: Rational, m: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(m, q);
        }
        PiValue { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of pi^m, zero if absent.
    pub fn coefficient(&self, m: u32) -> Rational {
        self.terms.get(&m).cloned().unwrap_or_else(Rational::zero)
    }

    /// `Some(q)` when the value is the plain rational q (no pi dependence).
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// Terms in increasing power order.
    pub fn iter(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.terms.iter().map(|(&m, q)| (m, q))
    }

    pub fn add(&self, other: &PiValue) -> PiValue {
        let mut out = self.clone();
        for (&m, q) in &other.terms {
            let entry = out.terms.entry(m).or_insert_with(Rational::zero);
            *entry = entry.clone() + q;
            if entry.is_zero() {
                out.terms.remove(&m);
            }
        }
        out
    }

    pub fn scale(&self, q: &Rational) -> PiValue {
        if q.is_zero() {
            return PiValue::zero();
        }
        PiValue {
            terms: self.terms.iter().map(|(&m, c)| (m, c * q)).collect(),
        }
    }

    /// Multiplication by the single term q * pi^m.
    pub fn mul_term(&self, q: &Rational, m: u32) -> PiValue {
        if q.is_zero() {
            return PiValue::zero();
        }
        PiValue {
            terms: self.terms.iter().map(|(&p, c)| (p + m, c * q)).collect(),
        }
    }
}

/// Prints `c` for plain rationals, `(p/q)*pi^m` for single pi terms, and
/// ` + `-joined sums in increasing power otherwise.
impl fmt::Display for PiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&m, q) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m == 0 {
                write!(f, "{q}")?;
            } else {
                write!(f, "({q})*pi^{m}")?;
            }
        }
        Ok(())
    }
}

/// The four Dirichlet-series functions this library evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FunctionId {
    Zeta,
    Eta,
    Lambda,
    Beta,
}

impl FunctionId {
    pub const ALL: [FunctionId; 4] = [
        FunctionId::Zeta,
        FunctionId::Eta,
        FunctionId::Lambda,
        FunctionId::Beta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FunctionId::Zeta => "zeta",
            FunctionId::Eta => "eta",
            FunctionId::Lambda => "lambda",
            FunctionId::Beta => "beta",
        }
    }

    pub fn parse(s: &str) -> Option<FunctionId> {
        FunctionId::ALL.into_iter().find(|f| f.name() == s)
    }
}

impl fmt::Display for FunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Why a requested (function, argument) pair has no exact value here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Unsupported {
    /// zeta and lambda diverge at s = 1.
    PoleAtOne(FunctionId),
    /// No finite closed form is known at this argument.
    NoClosedForm(FunctionId, i64),
}

impl fmt::Display for Unsupported {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Unsupported::PoleAtOne(id) => write!(f, "{id} has a simple pole at s = 1"),
            Unsupported::NoClosedForm(id, s) => {
                write!(f, "no closed form is known for {id}({s})")
            }
        }
    }
}

impl std::error::Error for Unsupported {}

/// eta(2k) by the explicit Bernoulli closed form
/// (-1)^(k-1) (2^(2k-1) - 1) pi^(2k) B_2k / (2k)!.
pub fn eta_even(k: u32) -> PiValue {
    assert!(k >= 1, "eta_even requires k >= 1");
    let two_k = 2 * k as u64;
    let coeff = Rational::neg_one_pow(k as u64 + 1)
        * (Rational::two_pow(two_k as i64 - 1) - Rational::one())
        * bernoulli_minus(two_k)
        / Rational::from_integer(factorial(two_k));
    PiValue::term(coeff, 2 * k)
}

static ETA_RECURRENCE: LazyLock<Mutex<Vec<PiValue>>> = LazyLock::new(|| Mutex::new(Vec::new()));

/// eta(2k) by the sine-series recurrence at x = pi:
/// eta(2k) = -sum_{v=1}^{k} (-1)^v pi^(2v) / (2v+1)! * eta(2(k-v)),
/// seeded with eta(0) = 1/2.
///
/// An independent route kept deliberately free of `eta_even`'s formula.
/// The table is a grow-only cache under the same contract as the
/// Bernoulli and Euler tables.
pub fn eta_even_recurrence(k: u32) -> PiValue {
    assert!(k >= 1, "eta_even_recurrence requires k >= 1");
    let mut table = ETA_RECURRENCE.lock().expect("eta table poisoned");
    if table.is_empty() {
        table.push(PiValue::from_rational(divergent_alt_power_sum(0).0));
    }
    while table.len() <= k as usize {
        let m = table.len() as u32;
        let mut acc = PiValue::zero();
        for v in 1..=m {
            // each summand is -(-1)^v pi^(2v)/(2v+1)! * eta(2(m-v))
            let q = Rational::neg_one_pow(v as u64 + 1)
                / Rational::from_integer(factorial(2 * v as u64 + 1));
            acc = acc.add(&table[(m - v) as usize].mul_term(&q, 2 * v));
        }
        table.push(acc);
    }
    table[k as usize].clone()
}

/// zeta(2k) = eta(2k) / (1 - 2^(1-2k)).
pub fn zeta_even(k: u32) -> PiValue {
    let factor = Rational::one() - Rational::two_pow(1 - 2 * k as i64);
    eta_even(k).scale(&factor.recip())
}

/// lambda(2k) = (1 - 2^(-2k)) * zeta(2k).
pub fn lambda_even(k: u32) -> PiValue {
    let factor = Rational::one() - Rational::two_pow(-2 * (k as i64));
    zeta_even(k).scale(&factor)
}

/// zeta(-k) = -B+_(k+1) / (k+1); zero at every negative even integer.
///
/// Extends to k = 0, giving zeta(0) = -1/2.
pub fn zeta_neg(k: u32) -> PiValue {
    PiValue::from_rational(divergent_power_sum(k as u64).0)
}

/// eta(-k) = (1 - 2^(1+k)) zeta(-k).
pub fn eta_neg(k: u32) -> PiValue {
    PiValue::from_rational(divergent_alt_power_sum(k as u64).0)
}

/// lambda(-k) = (1 - 2^k) zeta(-k).
pub fn lambda_neg(k: u32) -> PiValue {
    let factor = Rational::one() - Rational::two_pow(k as i64);
    PiValue::from_rational(factor * divergent_power_sum(k as u64).0)
}

/// beta(1-k) by the alternating odd-power route:
/// -(1/(2k)) sum_{u=1}^{k} (-1)^u 2^u (2^u - 1) C(k, u) B+_u.
pub fn beta_neg_bernoulli(k: u32) -> PiValue {
    assert!(k >= 1, "beta_neg_bernoulli requires k >= 1");
    let mut acc = Rational::zero();
    for u in 1..=k as u64 {
        let pow = Rational::two_pow(u as i64);
        acc += Rational::neg_one_pow(u)
            * pow.clone()
            * (pow - Rational::one())
            * Rational::from_integer(binomial(k as u64, u))
            * bernoulli_plus(u);
    }
    PiValue::from_rational(-acc / Rational::from_integer(2 * k as u64))
}

/// beta(-k) = E_k / 2.
pub fn beta_neg_euler(k: u32) -> PiValue {
    PiValue::from_rational(Rational::new(euler_number(k as u64), 2))
}

/// beta(2k+1) by the x = pi/2 specialization of the sine identity:
/// (-1)^(k+1) pi^(2k+1) / (2^(2k+1) (2k+1)!) *
///     sum_{u=0}^{k} 2^(2u) (2^(2u-1) - 1) C(2k+1, 2u) B_2u.
///
/// The u = 0 term carries the rational factor 2^(-1) - 1 = -1/2.
pub fn beta_odd_bernoulli(k: u32) -> PiValue {
    let two_k1 = 2 * k as u64 + 1;
    let mut acc = Rational::zero();
    for u in 0..=k as u64 {
        acc += Rational::two_pow(2 * u as i64)
            * (Rational::two_pow(2 * u as i64 - 1) - Rational::one())
            * Rational::from_integer(binomial(two_k1, 2 * u))
            * bernoulli_minus(2 * u);
    }
    let coeff = Rational::neg_one_pow(k as u64 + 1) * acc
        / (Rational::two_pow(two_k1 as i64) * Rational::from_integer(factorial(two_k1)));
    PiValue::term(coeff, 2 * k + 1)
}

/// beta(2k+1) = (-1)^k E_2k pi^(2k+1) / (2^(2k+2) (2k)!).
pub fn beta_odd_euler(k: u32) -> PiValue {
    let coeff = Rational::neg_one_pow(k as u64)
        * Rational::from_integer(euler_number(2 * k as u64))
        / (Rational::two_pow(2 * k as i64 + 2) * Rational::from_integer(factorial(2 * k as u64)));
    PiValue::term(coeff, 2 * k + 1)
}

/// Checks the functional equation beta(1-s) = (2/pi)^s sin(pi s/2) Gamma(s) beta(s)
/// at s = 2k+1, where sin(pi s/2) = (-1)^k and Gamma(s) = (2k)!.
///
/// The pi powers cancel, so this is an exact rational identity:
/// beta(-2k) = 2^(2k+1) pi^-(2k+1) (-1)^k (2k)! beta(2k+1).
pub fn beta_functional_check(k: u32) -> bool {
    let lhs = beta_neg_euler(2 * k).coefficient(0);
    let odd = beta_odd_euler(k).coefficient(2 * k + 1);
    let rhs = Rational::two_pow(2 * k as i64 + 1)
        * Rational::neg_one_pow(k as u64)
        * Rational::from_integer(factorial(2 * k as u64))
        * odd;
    lhs == rhs
}

/// Dispatches to the closed forms: zeta/eta/lambda at even positive s,
/// all four functions at s <= 0, beta at odd positive s.
pub fn eval(func: FunctionId, s: i64) -> Result<PiValue, Unsupported> {
    if s <= 0 {
        let k = u32::try_from(s.unsigned_abs()).expect("argument magnitude exceeds u32");
        return Ok(match func {
            FunctionId::Zeta => zeta_neg(k),
            FunctionId::Eta => eta_neg(k),
            FunctionId::Lambda => lambda_neg(k),
            FunctionId::Beta => beta_neg_euler(k),
        });
    }
    let s_u = u32::try_from(s).expect("argument magnitude exceeds u32");
    match func {
        FunctionId::Beta => {
            if s % 2 == 1 {
                Ok(beta_odd_euler((s_u - 1) / 2))
            } else {
                Err(Unsupported::NoClosedForm(func, s))
            }
        }
        FunctionId::Zeta | FunctionId::Lambda if s == 1 => Err(Unsupported::PoleAtOne(func)),
        // eta(1) = ln 2 converges but has no representation in this ring.
        FunctionId::Eta if s == 1 => Err(Unsupported::NoClosedForm(func, s)),
        _ if s % 2 == 1 => Err(Unsupported::NoClosedForm(func, s)),
        FunctionId::Zeta => Ok(zeta_even(s_u / 2)),
        FunctionId::Eta => Ok(eta_even(s_u / 2)),
        FunctionId::Lambda => Ok(lambda_even(s_u / 2)),
    }
}
