//! Exact ground-ring arithmetic: rationals and the rational-function field Q(a).

mod parse;
mod poly;
mod ratfunc;

pub use parse::{parse_scalar, parse_xpoly, XPoly};
pub use poly::{Poly, Rational};
pub use ratfunc::{RatFunc, Subring};

use num_bigint::BigInt;
use num_traits::One;

/// Scalars of every builtin algebra live in Q(a).
pub type Scalar = RatFunc;

pub fn arith(a: &Scalar, b: &Scalar, op: ArithOp) -> crate::Result<Scalar> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Binomial coefficient with integer arguments; zero outside `0 <= k <= n`.
pub fn binomial_i(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        BigInt::from(0)
    } else {
        binomial(n as u64, k as u64)
    }
}

pub fn int_scalar(n: &BigInt) -> Scalar {
    RatFunc::rational(Rational::from_integer(n.clone()))
}
