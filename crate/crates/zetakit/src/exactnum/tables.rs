//! Bernoulli numbers, Euler numbers, Bernoulli polynomials and the
//! combinatorial helpers behind them.
//!
//! Both tables are grow-only caches filled by the defining recurrences in
//! exact arithmetic. Reads and extensions are synchronized behind a mutex,
//! so concurrent callers always observe fully computed entries.

use super::poly::RationalPolynomial;
use super::rational::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::sync::{LazyLock, Mutex};

/// Grow-only Bernoulli cache plus the running lcm of its denominators,
/// which lets each recurrence row accumulate in plain integers.
struct BernoulliCache {
    entries: Vec<Rational>,
    den_lcm: BigInt,
}

static BERNOULLI: LazyLock<Mutex<BernoulliCache>> = LazyLock::new(|| {
    Mutex::new(BernoulliCache {
        entries: vec![Rational::one()],
        den_lcm: BigInt::one(),
    })
});

static EULER: LazyLock<Mutex<Vec<BigInt>>> = LazyLock::new(|| Mutex::new(vec![BigInt::one()]));

static FACTORIAL: LazyLock<Mutex<Vec<BigInt>>> = LazyLock::new(|| Mutex::new(vec![BigInt::one()]));

/// Binomial coefficient C(n, k), with C(n, k) = 0 for k > n.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut out = BigInt::one();
    for i in 1..=k {
        out = out * BigInt::from(n - k + i) / BigInt::from(i);
    }
    out
}

pub fn factorial(n: u64) -> BigInt {
    let mut cache = FACTORIAL.lock().expect("factorial cache poisoned");
    while cache.len() <= n as usize {
        let m = cache.len() as u64;
        let next = &cache[(m - 1) as usize] * BigInt::from(m);
        cache.push(next);
    }
    cache[n as usize].clone()
}

/// Bernoulli number B_n in the B_1 = -1/2 convention.
///
/// Defined by B_0 = 1 and sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1.
/// Each row is accumulated over the cache's common denominator, so the
/// inner loop is integer-only.
pub fn bernoulli_minus(n: u64) -> Rational {
    let mut cache = BERNOULLI.lock().expect("bernoulli cache poisoned");
    let idx = n as usize;
    while cache.entries.len() <= idx {
        let m = cache.entries.len() as u64;
        // binomial row C(m+1, j) built incrementally
        let mut coeff = BigInt::one();
        let mut acc = BigInt::zero();
        for (j, b) in cache.entries.iter().enumerate() {
            if !b.is_zero() {
                acc += &coeff * b.numerator() * (&cache.den_lcm / b.denominator());
            }
            coeff = coeff * BigInt::from(m + 1 - j as u64) / BigInt::from(j as u64 + 1);
        }
        let next = Rational::new(-acc, &cache.den_lcm * BigInt::from(m + 1));
        cache.den_lcm = cache.den_lcm.lcm(next.denominator());
        cache.entries.push(next);
    }
    cache.entries[idx].clone()
}

/// Bernoulli number B_n in the B_1 = +1/2 convention: (-1)^n * B_n^-.
pub fn bernoulli_plus(n: u64) -> Rational {
    let b = bernoulli_minus(n);
    if n % 2 == 1 {
        -b
    } else {
        b
    }
}

/// Euler number E_n: E_0 = 1, E_odd = 0, and for even n >= 2
/// sum over even j <= n of C(n, j) E_j = 0.
pub fn euler_number(n: u64) -> BigInt {
    if n % 2 == 1 {
        return BigInt::zero();
    }
    let mut cache = EULER.lock().expect("euler cache poisoned");
    let idx = (n / 2) as usize;
    while cache.len() <= idx {
        let m = 2 * cache.len() as u64;
        // even binomial row C(m, 2i) built incrementally
        let mut coeff = BigInt::one();
        let mut acc = BigInt::zero();
        for (i, e) in cache.iter().enumerate() {
            let two_i = 2 * i as u64;
            acc += &coeff * e;
            coeff = coeff * BigInt::from(m - two_i) * BigInt::from(m - two_i - 1)
                / BigInt::from((two_i + 1) * (two_i + 2));
        }
        cache.push(-acc);
    }
    cache[idx].clone()
}

/// The Bernoulli polynomial B_n(x) = sum_j C(n, j) B_j^- x^(n-j).
pub fn bernoulli_poly(n: u64) -> RationalPolynomial {
    let mut coeffs = vec![Rational::zero(); n as usize + 1];
    for j in 0..=n {
        let c = Rational::from_integer(binomial(n, j)) * bernoulli_minus(j);
        coeffs[(n - j) as usize] = c;
    }
    RationalPolynomial::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(7, 0), BigInt::from(1));
        assert_eq!(binomial(4, 6), BigInt::from(0));
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
    }

    #[test]
    fn bernoulli_minus_values() {
        assert_eq!(bernoulli_minus(0), Rational::one());
        assert_eq!(bernoulli_minus(1), q(-1, 2));
        assert_eq!(bernoulli_minus(2), q(1, 6));
        assert_eq!(bernoulli_minus(3), Rational::zero());
        assert_eq!(bernoulli_minus(4), q(-1, 30));
        assert_eq!(bernoulli_minus(12), q(-691, 2730));
    }

    #[test]
    fn bernoulli_plus_flips_only_n1() {
        assert_eq!(bernoulli_plus(0), Rational::one());
        assert_eq!(bernoulli_plus(1), q(1, 2));
        assert_eq!(bernoulli_plus(2), q(1, 6));
        for n in 0..120 {
            let sign = if n % 2 == 1 {
                -bernoulli_minus(n)
            } else {
                bernoulli_minus(n)
            };
            assert_eq!(bernoulli_plus(n), sign);
        }
    }

    #[test]
    fn odd_bernoulli_vanish() {
        for k in 1..=60 {
            assert!(bernoulli_minus(2 * k + 1).is_zero(), "B_{} != 0", 2 * k + 1);
        }
    }

    #[test]
    fn euler_values() {
        assert_eq!(euler_number(0), BigInt::from(1));
        assert_eq!(euler_number(1), BigInt::from(0));
        assert_eq!(euler_number(2), BigInt::from(-1));
        assert_eq!(euler_number(4), BigInt::from(5));
        assert_eq!(euler_number(6), BigInt::from(-61));
        assert_eq!(euler_number(8), BigInt::from(1385));
        assert_eq!(euler_number(10), BigInt::from(-50521));
    }

    #[test]
    fn even_euler_signs_alternate() {
        for k in 0..40u64 {
            let sign_ok = if k % 2 == 0 {
                euler_number(2 * k) > BigInt::zero()
            } else {
                euler_number(2 * k) < BigInt::zero()
            };
            assert!(sign_ok, "E_{} has wrong sign", 2 * k);
        }
    }

    #[test]
    fn bernoulli_poly_small() {
        assert_eq!(bernoulli_poly(0).coeffs(), &[Rational::one()]);
        assert_eq!(bernoulli_poly(1).coeffs(), &[q(-1, 2), q(1, 1)]);
        assert_eq!(bernoulli_poly(2).coeffs(), &[q(1, 6), q(-1, 1), q(1, 1)]);
    }

    #[test]
    fn bernoulli_poly_difference_identity() {
        // B_n(x+1) - B_n(x) = n*x^(n-1) as a polynomial identity.
        for n in 1..=20u64 {
            let b = bernoulli_poly(n);
            let shifted = b.compose_affine(&Rational::one(), &Rational::one());
            let diff = &shifted - &b;
            let expect = RationalPolynomial::monomial(Rational::from_integer(n), n as usize - 1);
            assert_eq!(diff, expect, "difference identity fails at n = {n}");
        }
    }
}
