//! Exact scalar kernels: rationals, polynomials in the loop parameter `t`,
//! cyclotomic field elements and small dense/sparse matrices over them.

mod cyclotomic;
mod matrix;
mod poly;

pub use cyclotomic::{cyclotomic_polynomial, embed_root, euler_phi, Cyclotomic};
pub use matrix::{Matrix, Scalar, SparseMatrix};
pub use poly::{poly_eval, Poly};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

/// Arbitrary-precision rational number in lowest terms with positive denominator.
pub type Rational = BigRational;

/// `n/1` as a [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q` as a [`Rational`]; panics on `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Returns the value as an `i64` if it is an integer that fits.
pub fn rational_to_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}

/// Parses `"3"`, `"-2/7"` and the like.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// An integral rational as a JSON number, any other as a `"p/q"` string.
pub fn rational_json(r: &Rational) -> serde_json::Value {
    match rational_to_i64(r) {
        Some(i) => serde_json::Value::from(i),
        None => serde_json::Value::from(format_rational(r)),
    }
}

pub(crate) fn rational_from_json(v: &serde_json::Value) -> Option<Rational> {
    match v {
        serde_json::Value::Number(n) => n.as_i64().map(rat),
        serde_json::Value::String(s) => parse_rational(s),
        _ => None,
    }
}
