//! The Jacobsthal function, its published upper bounds, primorials, and the
//! nearest-coprime-shift primitive used by every witness construction.
//!
//! `J(n)` is the smallest length such that every arithmetic progression of
//! that length whose difference is coprime to `n` contains an element
//! coprime to `n`; equivalently, the maximal circular gap between totatives
//! of `n`. It depends only on the radical of `n`.

use crate::rational::{rat_int, Rat};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

/// Upper bounds `U(r)` on `J(n)` for `n` with `r <= 24` distinct prime
/// factors (not only primorials); Hajdu–Saradha, "Disproof of a conjecture
/// of Jacobsthal", Math. Comp. 81 (2012).
pub const U_TABLE: [u64; 24] = [
    2, 4, 6, 10, 14, 22, 26, 34, 40, 46, 58, 66, 74, 90, 100, 106, 118, 132, 152, 174, 190, 200,
    216, 236,
];

/// `U(r)` for `1 <= r <= 24`.
pub fn u_table(r: usize) -> Option<u64> {
    if (1..=24).contains(&r) {
        Some(U_TABLE[r - 1])
    } else {
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundSource {
    Exact,
    KanoldPow2,
    TableU,
    SqrtBound,
}

/// An upper bound on `J(n)` tagged with where it came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobsthalBound {
    pub value: u64,
    pub source: BoundSource,
}

/// Product of the distinct prime factors.
pub fn radical(n: u64) -> u64 {
    let mut n = n;
    let mut r = 1u64;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            r *= d;
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        r *= n;
    }
    r
}

/// Largest odd divisor.
pub fn odd_part(n: u64) -> u64 {
    let mut n = n;
    while n % 2 == 0 {
        n /= 2;
    }
    n
}

/// Distinct prime factors, ascending.
pub fn prime_factors(n: u64) -> Vec<u64> {
    let mut n = n;
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Euler totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut phi = n;
    for p in prime_factors(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

/// Exact Jacobsthal function via a totative gap scan of the radical.
///
/// `J(1) = 1` and `J(2) = 2` fall out of the scan convention. The scan is
/// `O(rad(n) * omega(n))`, fine for every exact evaluation the pipeline
/// needs (radicals up to about 10^7).
pub fn jacobsthal_exact(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ParameterTooSmall(1));
    }
    let m = radical(n);
    if m == 1 {
        return Ok(1);
    }
    if m > 100_000_000 {
        return Err(Error::OutOfRange("radical too large for exact gap scan"));
    }
    let m_us = m as usize;
    let mut composite = vec![false; m_us];
    for p in prime_factors(m) {
        let mut i = 0usize;
        while i < m_us {
            composite[i] = true;
            i += p as usize;
        }
    }
    // 1 is always a totative; walk the circle once.
    let mut max_gap = 0u64;
    let mut prev = 1u64;
    for k in 2..m {
        if !composite[k as usize] {
            max_gap = max_gap.max(k - prev);
            prev = k;
        }
    }
    max_gap = max_gap.max(m + 1 - prev);
    Ok(max_gap)
}

/// The minimum applicable upper bound among Kanold's `2^omega(n)`, the
/// `U(omega(n))` table, and `floor(2 sqrt(n))` for `n > 4`.
pub fn jacobsthal_upper(n: u64) -> Result<JacobsthalBound> {
    if n == 0 {
        return Err(Error::ParameterTooSmall(1));
    }
    let omega = prime_factors(n).len();
    Ok(jacobsthal_upper_parts(&BigInt::from(n), omega))
}

/// Same bound computation with the factor count supplied by the caller, for
/// moduli too large to factor directly (the assembly arguments only ever
/// need `omega`).
pub fn jacobsthal_upper_parts(n: &BigInt, omega: usize) -> JacobsthalBound {
    let mut best = JacobsthalBound {
        value: if omega >= 63 { u64::MAX } else { 1u64 << omega },
        source: BoundSource::KanoldPow2,
    };
    if let Some(u) = u_table(omega) {
        if u <= best.value {
            best = JacobsthalBound {
                value: u,
                source: BoundSource::TableU,
            };
        }
    }
    if *n > BigInt::from(4u32) {
        if let Some(s) = (BigInt::from(2u32) * n.sqrt()).to_u64() {
            if s < best.value {
                best = JacobsthalBound {
                    value: s,
                    source: BoundSource::SqrtBound,
                };
            }
        }
    }
    best
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Product of the first `r` primes.
pub fn primorial(r: u32) -> BigInt {
    let mut out = BigInt::one();
    let mut count = 0;
    let mut candidate = 2u64;
    while count < r {
        if is_prime(candidate) {
            out *= candidate;
            count += 1;
        }
        candidate += 1;
    }
    out
}

/// Integer `m` with `gcd(a + d m, n) = 1` and `|m - m_real| <= J(N)/2`,
/// where `N` is the largest factor of `n` coprime to `d`.
///
/// Requires `gcd(d, n) = 1` or `a = 1`: when `a = 1` the primes of `n`
/// dividing `d` are automatically coprime to every `1 + d m`. The window
/// around the nearest integer is symmetric for odd `J` and biased toward
/// the fractional side of `m_real` for even `J`, which is what makes the
/// bound `J/2` rather than `J/2 + 1/2`. Candidates are tried nearest to
/// `m_real` first (ties toward the smaller), so the unobstructed case
/// returns the rounding of `m_real` itself.
pub fn nearest_coprime_shift(m_real: &Rat, a: i64, d: i64, n: i64) -> Result<i64> {
    if d <= 0 || n <= 0 {
        return Err(Error::ParameterTooSmall(1));
    }
    let g = crate::gcd_i64(d, n);
    if g != 1 && a != 1 {
        return Err(Error::Precondition(
            "need gcd(d, n) = 1 or a = 1 for the coprime shift",
        ));
    }
    // Strip the primes of n shared with d; they never obstruct.
    let mut stripped = n as u64;
    loop {
        let g = crate::gcd_i64(stripped as i64, d) as u64;
        if g == 1 {
            break;
        }
        stripped /= g;
    }
    let j = jacobsthal_exact(stripped)? as i64;
    for m in coprime_window(m_real, j)? {
        let val = a
            .checked_add(d.checked_mul(m).ok_or(Error::TooLarge)?)
            .ok_or(Error::TooLarge)?;
        if crate::gcd_i64(val, n) == 1 {
            return Ok(m);
        }
    }
    unreachable!("a window of length J(N) always contains a coprime element");
}

/// The length-`j` window of integers around `m_real` guaranteeing the
/// `j/2` bound, ordered nearest-first (ties toward the smaller value).
pub(crate) fn coprime_window(m_real: &Rat, j: i64) -> Result<Vec<i64>> {
    // Nearest integer, ties toward the lower side so epsilon <= 0.
    let half = Rat::new(1.into(), 2.into());
    let m_z = (m_real + &half)
        .floor()
        .to_integer()
        .to_i64()
        .ok_or(Error::OutOfRange("shift target out of i64 range"))?;
    let eps_pos = m_real - rat_int(m_z) > Rat::from_integer(0.into());
    let (lo, hi) = if j % 2 == 1 {
        (-(j / 2), j / 2)
    } else if eps_pos {
        (-(j / 2 - 1), j / 2)
    } else {
        (-(j / 2), j / 2 - 1)
    };
    let mut window: Vec<i64> = (lo..=hi).map(|i| m_z + i).collect();
    window.sort_by(|x, y| {
        let dx = (rat_int(*x) - m_real).abs();
        let dy = (rat_int(*y) - m_real).abs();
        dx.cmp(&dy).then(x.cmp(y))
    });
    Ok(window)
}
