//! Arbitrary-precision rationals, multivariate polynomials, rational
//! functions in named parameters, and exact linear algebra over them.

mod matrix;
mod parse;
mod poly;
mod ratfun;

pub use matrix::{nullspace, ExactMatrix};
pub use parse::{parse_poly, parse_rational};
pub use poly::{poly_gcd, rational_roots, Exps, MultiPoly, VarSet};
pub use ratfun::{evaluate, RatFun};

pub type Rational = num_rational::BigRational;
pub type Integer = num_bigint::BigInt;

use num_traits::{One, Signed, Zero};

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(Integer::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(Integer::from(n), Integer::from(d))
}

/// gcd of two rationals: the positive rational g with a/g, b/g coprime
/// integers. gcd(0, 0) = 0.
pub fn rat_gcd(a: &Rational, b: &Rational) -> Rational {
    if a.is_zero() {
        return b.abs();
    }
    if b.is_zero() {
        return a.abs();
    }
    let num = num_integer::gcd(a.numer().clone(), b.numer().clone());
    let den = num_integer::lcm(a.denom().clone(), b.denom().clone());
    Rational::new(num, den)
}

/// Writes a rational in `num/den` form, omitting a unit denominator.
pub fn rat_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
