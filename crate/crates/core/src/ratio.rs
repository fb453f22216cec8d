//! Exact rational scalars.
//!
//! Everything in this crate computes over `BigRational`. `num` keeps ratios
//! reduced with a positive denominator, so equality is bit-exact.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// Integer as a `Rat`.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` as a `Rat`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical string form: `"num"` when the denominator is 1, else `"num/den"`.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `"num"` or `"num/den"` into a reduced rational.
pub fn rat_from_str(s: &str) -> Result<Rat> {
    let t = s.trim();
    Rat::from_str(t).map_err(|e| Error::Parse(format!("bad rational `{t}`: {e}")))
}

/// Decimal rendering for display only; never feeds back into computation.
pub fn rat_to_f64(r: &Rat) -> f64 {
    use num::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Binomial coefficient `C(n, k)` as a big integer; 0 when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// Signed Stirling number of the first kind `s(n, k)`.
///
/// `x(x-1)...(x-n+1) = sum_k s(n,k) x^k`.
pub fn stirling_first(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    // s(n+1, k) = s(n, k-1) - n s(n, k)
    let mut row = vec![BigInt::one()];
    for m in 0..n {
        let mut next = vec![BigInt::zero(); m + 2];
        for (j, v) in row.iter().enumerate() {
            next[j + 1] += v;
            next[j] -= BigInt::from(m) * v;
        }
        row = next;
    }
    row[k].clone()
}

/// Stirling number of the second kind `S(n, k)`.
pub fn stirling_second(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    // S(n+1, k) = k S(n, k) + S(n, k-1)
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = vec![BigInt::zero(); row.len() + 1];
        for (j, v) in row.iter().enumerate() {
            next[j + 1] += v;
            next[j] += BigInt::from(j) * v;
        }
        row = next;
    }
    row[k].clone()
}

/// `C(n, k)` as a rational.
pub fn binomial_rat(n: usize, k: usize) -> Rat {
    Rat::from_integer(binomial(n, k))
}

/// `n!` as a rational.
pub fn factorial_rat(n: usize) -> Rat {
    Rat::from_integer(factorial(n))
}

/// Falling factorial `a^(n) = a (a-1) ... (a-n+1)` of a rational argument.
pub fn falling_factorial(a: &Rat, n: usize) -> Rat {
    let mut acc = Rat::one();
    for i in 0..n {
        acc *= a - rat_int(i as i64);
    }
    acc
}
