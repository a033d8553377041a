//! Exact integer-argument values of the Riemann zeta function and its
//! relatives (eta, lambda, beta), computed by elementary means: a reordered
//! integer line, generalized sums of regular functions, and Bernoulli/Euler
//! closed forms.
//!
//! Every closed form is derivable by at least two independent exact routes,
//! and a floating-point verifier checks the convergent cases against direct
//! series summation. The `zetakit` binary exposes evaluation, generalized
//! sums, tables, verification suites and order comparisons.
//!
//! ```
//! use zetakit::{eval, finite_sum, FunctionId, RegularFunction};
//! use zetakit::exactnum::{Rational, RationalPolynomial};
//! use zetakit::regsum::divergent_power_sum;
//!
//! // eta(4) = (7/720) * pi^4, exactly
//! let eta4 = eval(FunctionId::Eta, 4).unwrap();
//! assert_eq!(eta4.coefficient(4), Rational::new(7, 720));
//!
//! // summing u over the wrapped segment from 1 to -1 (every nonzero
//! // integer) gives 0 by symmetry...
//! let f = RegularFunction::from_poly(RationalPolynomial::x());
//! assert!(finite_sum(&f, 1, -1).value().is_zero());
//!
//! // ...while the one-sided divergent sum 1 + 2 + 3 + ... gets -1/12
//! assert_eq!(*divergent_power_sum(1).value(), Rational::new(-1, 12));
//! ```

pub mod cli;
pub mod exactnum;
pub mod numverify;
pub mod order;
pub mod regsum;
pub mod values;

pub use exactnum::{Rational, RationalPolynomial};
pub use order::{make_segment, precedes, Segment};
pub use regsum::{finite_sum, MethodValue, RegularFunction};
pub use values::{eval, FunctionId, PiValue, Unsupported};
