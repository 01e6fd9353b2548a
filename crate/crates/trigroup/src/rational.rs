//! Arbitrary-precision reduced fractions.
//!
//! All authoritative distances in this crate are values of this type. The
//! representation is `num_rational::BigRational`, which maintains the two
//! invariants the engine relies on: the fraction is always reduced and the
//! denominator is always positive.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

/// Reduced fraction from machine integers. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Canonical `"num/den"` form used in certificates and CSV output.
/// Integers still carry the denominator, e.g. `3/2`, `0/1`, `-1/1`.
pub fn rat_to_string(x: &Rat) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses the `"num/den"` form (or a bare integer).
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rat::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(Rat::from_integer(n))
        }
    }
}

/// Reduces `x` into `[0, m)` for a positive integer modulus `m`.
pub fn reduce_mod(x: &Rat, m: i64) -> Rat {
    let m = rat_int(m);
    x - (x / &m).floor() * &m
}

/// Distance from `x` to the nearest integer, in `[0, 1/2]`.
pub fn dist_to_int(x: &Rat) -> Rat {
    let f = reduce_mod(x, 1);
    let alt = Rat::one() - &f;
    if f <= alt {
        f
    } else {
        alt
    }
}

/// Exact absolute value.
pub fn rat_abs(x: &Rat) -> Rat {
    x.abs()
}
