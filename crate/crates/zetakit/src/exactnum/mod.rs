//! Exact rational arithmetic and the Bernoulli/Euler substrate every
//! closed form consumes.

mod poly;
mod rational;
mod tables;

pub use poly::RationalPolynomial;
pub use rational::Rational;
pub use tables::{
    bernoulli_minus, bernoulli_plus, bernoulli_poly, binomial, euler_number, factorial,
};
