//! Exact-arithmetic engine deciding which hyperbolic triangle groups admit
//! totally real models.
//!
//! A triple `(p, q, r)` with `1/p + 1/q + 1/r < 1` admits a totally real
//! model exactly when no integer `k` coprime to `n = lcm(2, p, q, r)` places
//! the point `k * (1/p, 1/q, 1/r)` at L1-distance at least one from the
//! parity lattice (integer triples with even coordinate sum). The crate
//! provides:
//!
//! * exact L1 geometry on the torus relative to the parity lattice
//!   ([`lattice`]),
//! * the Jacobsthal function and its published upper bounds ([`jacobsthal`]),
//! * big-integer Fourier coefficient tables for powers of `e(t) - 24` and
//!   the exceptional-hyperplane extraction ([`moments`]),
//! * the witness-`t` searches over lines and hyperplanes ([`hyperplanes`]),
//! * the integer-witness constructions and exhaustive sweeps ([`lemmas`]),
//! * the user-facing membership predicate with replayable certificates
//!   ([`classify`], [`certificate`]).
//!
//! All distance comparisons are exact rational arithmetic; floating point
//! appears only in trigonometric cross-checks.

pub mod certificate;
pub mod classify;
pub mod hyperplanes;
pub mod jacobsthal;
pub mod lattice;
pub mod lemmas;
pub mod moments;
pub mod rational;

pub use certificate::{Certificate, Verdict};
pub use classify::{batch_verify, classify, hilbert_series, Triple};
pub use lattice::{dist_to_lattice, l1_dist, LatticeKind, TorusPoint};
pub use rational::Rat;

/// Version string embedded in certificates so no-witness claims are
/// replayable against the engine that produced them.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Default seed for the deterministic pseudorandom witness searches.
pub const DEFAULT_SEED: u64 = 0;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parameter must be nonzero")]
    ZeroParameter,
    #[error("parameters must be at least {0}")]
    ParameterTooSmall(i64),
    #[error("triple ({p}, {q}, {r}) is not hyperbolic: 1/p + 1/q + 1/r >= 1")]
    NonHyperbolic { p: i64, q: i64, r: i64 },
    #[error("value out of range: {0}")]
    OutOfRange(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("parameters too large for exact scan: lcm exceeds 2^62")]
    TooLarge,
    #[error("verification failed: unexplained triples {0:?}")]
    Verification(Vec<(i64, i64, i64)>),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn gcd_i64(a: i64, b: i64) -> i64 {
    num_integer::Integer::gcd(&a, &b)
}

/// Checked lcm of two nonnegative i64, erroring once past 2^62.
pub(crate) fn lcm_i64(a: i64, b: i64) -> Result<i64> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    let g = gcd_i64(a, b);
    (a / g)
        .checked_mul(b)
        .filter(|&l| l < (1 << 62))
        .ok_or(Error::TooLarge)
}

/// `lcm(2, p, q, r)` over absolute values, the scan modulus for a triple.
pub fn lcm2pqr(p: i64, q: i64, r: i64) -> Result<i64> {
    let l = lcm_i64(2, p.abs())?;
    let l = lcm_i64(l, q.abs())?;
    lcm_i64(l, r.abs())
}

/// `1/p + 1/q + 1/r < 1`, exactly, for positive parameters.
pub fn is_hyperbolic(p: i64, q: i64, r: i64) -> bool {
    if p <= 0 || q <= 0 || r <= 0 {
        return false;
    }
    let (p, q, r) = (p as i128, q as i128, r as i128);
    q * r + p * r + p * q < p * q * r
}
