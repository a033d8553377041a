//! Regular functions, antidifferences, and generalized sums over the
//! reordered integer line.
//!
//! A regular function is a pair (f, F) with F(x+1) - F(x) = f(x). The sum
//! of f from a to b is F(b+1) - F(a) for every integer pair, which extends
//! the classical finite sum to wrapped segments and assigns finite values
//! to divergent power sums.

use crate::exactnum::{bernoulli_plus, bernoulli_poly, Rational, RationalPolynomial};
use std::fmt;

/// A polynomial together with its antidifference, normalized to F(0) = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularFunction {
    f: RationalPolynomial,
    antidiff: RationalPolynomial,
}

/// The value this summation method assigns to a (possibly divergent) sum.
///
/// Deliberately distinct from a plain [`Rational`]: a method value agrees
/// with the classical sum when the series converges, but for wrapped or
/// infinite ranges it is the method's assignment, not a limit of partial
/// sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MethodValue(pub Rational);

impl MethodValue {
    pub fn value(&self) -> &Rational {
        &self.0
    }
}

impl fmt::Display for MethodValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Orientation parameter of the general summation formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn to_int(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RegsumError {
    /// The supplied F is not an antidifference of f.
    NotAnAntidifference,
    /// An even-symmetry operation received a polynomial with odd terms.
    OddTermPresent { power: usize },
    /// The quasi-even symmetry f(-x) = f(x - eps*t) does not hold.
    NotQuasiEven,
    /// The limit list length does not match the period t.
    ArityMismatch { expected: usize, got: usize },
}

impl fmt::Display for RegsumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegsumError::NotAnAntidifference => {
                write!(
                    f,
                    "supplied antidifference does not satisfy F(x+1) - F(x) = f(x)"
                )
            }
            RegsumError::OddTermPresent { power } => {
                write!(
                    f,
                    "polynomial is not even: nonzero coefficient at odd power {power}"
                )
            }
            RegsumError::NotQuasiEven => {
                write!(f, "polynomial does not satisfy the quasi-even symmetry")
            }
            RegsumError::ArityMismatch { expected, got } => {
                write!(f, "expected {expected} limit values, got {got}")
            }
        }
    }
}

impl std::error::Error for RegsumError {}

/// The polynomial F with F(x+1) - F(x) = f(x) and F(0) = 0.
///
/// Built monomial-wise through x^k -> B_(k+1)(x) / (k+1), then the
/// constant term is zeroed. The constant cancels in every difference
/// F(b+1) - F(a), so the normalization only pins a representative.
pub fn antidifference(f: &RationalPolynomial) -> RationalPolynomial {
    let mut out = RationalPolynomial::zero();
    for (k, c) in f.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let scale = c / &Rational::from_integer(k as u64 + 1);
        out = &out + &bernoulli_poly(k as u64 + 1).scale(&scale);
    }
    let constant = RationalPolynomial::constant(out.coeff(0));
    &out - &constant
}

impl RegularFunction {
    /// Regular function with the canonical antidifference.
    pub fn from_poly(f: RationalPolynomial) -> Self {
        let antidiff = antidifference(&f);
        RegularFunction { f, antidiff }
    }

    /// Accepts an externally supplied pair after checking the identity
    /// F(x+1) - F(x) = f(x) exactly; F is re-normalized to F(0) = 0.
    pub fn from_pair(
        f: RationalPolynomial,
        antidiff: RationalPolynomial,
    ) -> Result<Self, RegsumError> {
        let shifted = antidiff.compose_affine(&Rational::one(), &Rational::one());
        if &shifted - &antidiff != f {
            return Err(RegsumError::NotAnAntidifference);
        }
        let constant = RationalPolynomial::constant(antidiff.coeff(0));
        Ok(RegularFunction {
            f,
            antidiff: &antidiff - &constant,
        })
    }

    pub fn poly(&self) -> &RationalPolynomial {
        &self.f
    }

    pub fn antidiff(&self) -> &RationalPolynomial {
        &self.antidiff
    }
}

/// Sum of f(u) for u in Z_{a,b}, i.e. F(b+1) - F(a).
///
/// Valid for every integer pair. On a standard segment this equals the
/// term-by-term sum; on a wrapped segment it is the method value of the
/// infinite sum.
pub fn finite_sum(rf: &RegularFunction, a: i64, b: i64) -> MethodValue {
    let upper = rf
        .antidiff
        .eval_int(b.checked_add(1).expect("segment endpoint overflow"));
    MethodValue(upper - rf.antidiff.eval_int(a))
}

/// Method value of sum_{u=1}^inf u^k, namely -B+_(k+1) / (k+1).
///
/// Vanishes for every even k >= 2: those are the trivial zeros.
pub fn divergent_power_sum(k: u64) -> MethodValue {
    MethodValue(-bernoulli_plus(k + 1) / Rational::from_integer(k + 1))
}

/// Method value of the alternating sum_{u=1}^inf (-1)^(u-1) u^k,
/// obtained from the power sum by the factor (1 - 2^(k+1)).
pub fn divergent_alt_power_sum(k: u64) -> MethodValue {
    let factor = Rational::one() - Rational::two_pow(k as i64 + 1);
    MethodValue(factor * divergent_power_sum(k).0)
}

/// Summation formula in its even special case: sum_{u=1}^inf f(u) = -f(0)/2.
pub fn infinite_sum_even(rf: &RegularFunction) -> Result<MethodValue, RegsumError> {
    for (power, c) in rf.f.coeffs().iter().enumerate() {
        if power % 2 == 1 && !c.is_zero() {
            return Err(RegsumError::OddTermPresent { power });
        }
    }
    Ok(MethodValue(-rf.f.coeff(0) / Rational::from_integer(2)))
}

/// General summation formula for a quasi-even f with f(-x) = f(x - eps*t):
///
///   sum_{u=1}^inf f(u)
///     = (eps/2) * sum_{u=delta}^{t-1+delta} (limit_u - f(-eps*u)) - f(0)/2
///
/// with delta = (1 - eps)/2. The classical limit of f(n - eps*u) diverges
/// for non-constant polynomials and the regularized value is not pinned
/// down here, so the caller supplies one limit value per u; entry i of
/// `limits` belongs to u = delta + i.
pub fn infinite_sum_quasi_even(
    rf: &RegularFunction,
    epsilon: Sign,
    t: u64,
    limits: &[Rational],
) -> Result<MethodValue, RegsumError> {
    if limits.len() as u64 != t {
        return Err(RegsumError::ArityMismatch {
            expected: t as usize,
            got: limits.len(),
        });
    }
    let eps = epsilon.to_int();
    let reflected =
        rf.f.compose_affine(&Rational::from_integer(-1), &Rational::zero());
    let translated =
        rf.f.compose_affine(&Rational::one(), &Rational::from_integer(-eps * t as i64));
    if reflected != translated {
        return Err(RegsumError::NotQuasiEven);
    }

    let delta = (1 - eps) / 2;
    let mut acc = Rational::zero();
    for (i, limit) in limits.iter().enumerate() {
        let u = delta + i as i64;
        acc += limit - &rf.f.eval_int(-eps * u);
    }
    let half_eps = Rational::new(eps, 2);
    let half_f0 = rf.f.coeff(0) / Rational::from_integer(2);
    Ok(MethodValue(half_eps * acc - half_f0))
}
