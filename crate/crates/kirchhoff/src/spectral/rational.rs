//! Exact rationals and the text forms shared by reports and the CLI.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Reduced arbitrary-precision fraction with a positive denominator.
pub type ExactRational = BigRational;

pub fn ratio(num: i64, den: i64) -> ExactRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(value: i64) -> ExactRational {
    BigRational::from_integer(BigInt::from(value))
}

pub fn to_f64(q: &ExactRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// `p/q`, or just `p` when the denominator is one.
pub fn render_exact(q: &ExactRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p` or `p/q`.
pub fn parse_exact(text: &str) -> Option<ExactRational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((p, q)) => {
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p.trim().parse().ok()?, q))
        }
        None => Some(BigRational::from_integer(text.parse().ok()?)),
    }
}

/// Fixed twelve fractional digits with trailing zeros trimmed.
pub fn render_real(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let mut s = format!("{:.12}", x);
    while s.ends_with('0') {
        s.pop();
    }
    if s.ends_with('.') {
        s.pop();
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

/// Relative gap `|a − b| / max(1, |b|)`.
pub fn relative_gap(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

pub fn is_negative(q: &ExactRational) -> bool {
    q.is_negative()
}
