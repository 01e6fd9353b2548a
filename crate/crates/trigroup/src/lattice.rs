//! Exact L1 geometry on `R^3` relative to the parity lattice, `Z^3` and
//! `2Z^3`, plus the trigonometric functions `d` and `e` used as floating
//! point cross-checks.
//!
//! The parity lattice consists of the integer triples `(a, b, c)` with
//! `a + b + c` even. It sits between `2Z^3` and `Z^3` with index two in the
//! latter, so the three distances are always ordered
//! `dist(Z^3) <= dist(parity) <= dist(2Z^3)`.

use crate::rational::{dist_to_int, rat, rat_int, reduce_mod, Rat};
use crate::{Error, Result};
use num_traits::Signed;
use std::collections::BTreeSet;
use std::f64::consts::PI;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TorusPoint {
    pub x: Rat,
    pub y: Rat,
    pub z: Rat,
}

impl TorusPoint {
    pub fn new(x: Rat, y: Rat, z: Rat) -> Self {
        TorusPoint { x, y, z }
    }

    pub fn from_i64(x: (i64, i64), y: (i64, i64), z: (i64, i64)) -> Self {
        TorusPoint::new(rat(x.0, x.1), rat(y.0, y.1), rat(z.0, z.1))
    }

    pub fn coords(&self) -> [&Rat; 3] {
        [&self.x, &self.y, &self.z]
    }

    /// Coordinatewise reduction into `[0, 2)`.
    pub fn reduce_mod_2(&self) -> TorusPoint {
        TorusPoint::new(
            reduce_mod(&self.x, 2),
            reduce_mod(&self.y, 2),
            reduce_mod(&self.z, 2),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeKind {
    /// Integer triples with even coordinate sum.
    ParityLambda,
    StandardZ3,
    TwoZ3,
}

/// `|u1 - v1| + |u2 - v2| + |u3 - v3|`, exactly.
pub fn l1_dist(u: &TorusPoint, v: &TorusPoint) -> Rat {
    (&u.x - &v.x).abs() + (&u.y - &v.y).abs() + (&u.z - &v.z).abs()
}

/// Exact L1 distance from `v` to the nearest point of the given lattice.
///
/// Coordinates are first reduced mod 2 into `[0, 2)`. For the parity
/// lattice the minimum is then attained on the 14 points of `{0, 1, 2}^3`
/// with even coordinate sum, because each `|x_i - a_i|` is minimized within
/// that range. `Z^3` and `2Z^3` decompose per coordinate.
pub fn dist_to_lattice(v: &TorusPoint, lat: LatticeKind) -> Rat {
    let w = v.reduce_mod_2();
    match lat {
        LatticeKind::StandardZ3 => w.coords().iter().map(|x| dist_to_int(x)).sum(),
        LatticeKind::TwoZ3 => w
            .coords()
            .iter()
            .map(|x| {
                let two_minus = rat_int(2) - *x;
                if **x <= two_minus {
                    (*x).clone()
                } else {
                    two_minus
                }
            })
            .sum(),
        LatticeKind::ParityLambda => {
            // Per coordinate: distance to {0,2} (even choice) and to 1 (odd).
            let mut even = Vec::with_capacity(3);
            let mut odd = Vec::with_capacity(3);
            for x in w.coords() {
                let to_two = rat_int(2) - x;
                even.push(if *x <= to_two { x.clone() } else { to_two });
                odd.push((x - rat_int(1)).abs());
            }
            let candidates = [
                &even[0] + &even[1] + &even[2],
                &even[0] + &odd[1] + &odd[2],
                &odd[0] + &even[1] + &odd[2],
                &odd[0] + &odd[1] + &even[2],
            ];
            candidates.into_iter().min().unwrap()
        }
    }
}

/// The point `(t/p, t/q, t/r)` as exact rationals.
pub fn scaled_point(t: &Rat, p: i64, q: i64, r: i64) -> Result<TorusPoint> {
    if p == 0 || q == 0 || r == 0 {
        return Err(Error::ZeroParameter);
    }
    Ok(TorusPoint::new(
        t / rat_int(p),
        t / rat_int(q),
        t / rat_int(r),
    ))
}

/// Maximum over `z` of the parity-lattice distance of `(x, y, z)`, together
/// with a rational witness `z` attaining it.
///
/// The value is `1 + min(|x - Z|, |y - Z|)`. The witness follows the
/// normalized construction `z = 1 - max(dx, dy)` on `0 <= x <= y <= 1/2`,
/// transported back through the symmetries; each candidate is verified
/// exactly before being returned.
pub fn max_dist_over_z(x: &Rat, y: &Rat) -> (Rat, Rat) {
    let dx = dist_to_int(x);
    let dy = dist_to_int(y);
    let value = rat_int(1) + if dx <= dy { dx.clone() } else { dy.clone() };
    let base = rat_int(1) - if dx >= dy { dx } else { dy };
    // The symmetries transporting (x, y) to normal form act on z as
    // z -> +-z + integer, so the witness is of this shape; small shifts
    // first keeps the returned witness in a canonical range.
    for shift in [0i64, 1, -1, 2, -2, 3, -3] {
        for cand in [&base + rat_int(shift), -&base + rat_int(shift)] {
            let p = TorusPoint::new(x.clone(), y.clone(), cand.clone());
            if dist_to_lattice(&p, LatticeKind::ParityLambda) == value {
                return (value, cand);
            }
        }
    }
    unreachable!("witness construction must produce an attaining z");
}

/// One element of the order-48 group of coordinate permutations and sign
/// flips.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedPerm {
    /// Output coordinate `i` takes input coordinate `perm[i]`.
    pub perm: [usize; 3],
    pub neg: [bool; 3],
}

impl SignedPerm {
    pub fn all() -> Vec<SignedPerm> {
        let perms = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let mut out = Vec::with_capacity(48);
        for perm in perms {
            for mask in 0..8u8 {
                out.push(SignedPerm {
                    perm,
                    neg: [mask & 1 != 0, mask & 2 != 0, mask & 4 != 0],
                });
            }
        }
        out
    }

    pub fn apply(&self, v: &TorusPoint) -> TorusPoint {
        let c = v.coords();
        let pick = |i: usize| {
            let x = c[self.perm[i]].clone();
            if self.neg[i] {
                -x
            } else {
                x
            }
        };
        TorusPoint::new(pick(0), pick(1), pick(2))
    }

    pub fn sign_flip_count(&self) -> usize {
        self.neg.iter().filter(|b| **b).count()
    }

    /// Whether this element fixes the coset `w + Lambda`, `w = (1/2,1/2,1/2)`:
    /// exactly the elements with an even number of sign flips, since
    /// `g w - w` has one `-1` entry per flip and lands in the parity lattice
    /// iff that count is even. (This index-2 stabilizer is independent of
    /// the permutation part.)
    pub fn preserves_center_coset(&self) -> bool {
        self.sign_flip_count() % 2 == 0
    }

    pub fn det(&self) -> i32 {
        let perm_sign = match self.perm {
            [0, 1, 2] | [1, 2, 0] | [2, 0, 1] => 1,
            _ => -1,
        };
        let flip_sign = if self.sign_flip_count() % 2 == 0 { 1 } else { -1 };
        perm_sign * flip_sign
    }
}

/// The distinct images of `v` under the 48 signed permutations, as points
/// of `R^3` (no lattice reduction). Fixed points collapse: the origin has
/// orbit size 1, `(1/2, 1/2, 1/2)` has 8, a generic point 48.
pub fn symmetry_orbit(v: &TorusPoint) -> Vec<TorusPoint> {
    let set: BTreeSet<TorusPoint> = SignedPerm::all().iter().map(|g| g.apply(v)).collect();
    set.into_iter().collect()
}

/// `4 - 4cos^2(t pi/p) - 4cos^2(t pi/q) - 4cos^2(t pi/r)
///  - 8 cos(t pi/p) cos(t pi/q) cos(t pi/r)`, in floating point.
///
/// Nonnegativity of this function at `t = k` is equivalent to the exact
/// lattice condition `|k v - Lambda| >= 1`; the lattice side is
/// authoritative near zero.
pub fn d_eval(p: i64, q: i64, r: i64, t: f64) -> Result<f64> {
    if p == 0 || q == 0 || r == 0 {
        return Err(Error::ZeroParameter);
    }
    let (cp, cq, cr) = (
        (t * PI / p as f64).cos(),
        (t * PI / q as f64).cos(),
        (t * PI / r as f64).cos(),
    );
    Ok(4.0 - 4.0 * cp * cp - 4.0 * cq * cq - 4.0 * cr * cr - 8.0 * cp * cq * cr)
}

/// `(8 sin(pi x) sin(pi y) sin(pi z))^2`, always in `[0, 64]`.
pub fn e_eval(x: f64, y: f64, z: f64) -> f64 {
    let s = 8.0 * (PI * x).sin() * (PI * y).sin() * (PI * z).sin();
    s * s
}

/// Inverts the bound `64 sin^6(pi/3 + pi eps) = e_val` on `eps in [0, 1/6]`
/// and returns `1 + 3 eps`: any point whose `e`-value exceeds `e_val` lies
/// at `Z^3`-distance at least this far.
pub fn dist_bound_from_e(e_val: f64) -> Result<f64> {
    if !(27.0..=64.0).contains(&e_val) {
        return Err(Error::OutOfRange("e value must lie in [27, 64]"));
    }
    let u = (e_val / 64.0).powf(1.0 / 6.0);
    Ok(3.0 * u.asin() / PI)
}

// ---------------------------------------------------------------------------
// Integer kernel
//
// The exhaustive scans evaluate millions of parity-lattice distances of
// points whose coordinates are small fractions. This path carries them in
// (numerator, denominator) form over machine integers; the BigRational
// implementation above is the independent reference it is tested against.
// ---------------------------------------------------------------------------

/// Distance of `(num[0]/den[0], num[1]/den[1], num[2]/den[2])` to the parity
/// lattice as the unreduced fraction `(d, L)`, `L = lcm(dens)`.
///
/// Denominators must be positive and `L` under `2^62`; every intermediate
/// product is bounded by `6 L`.
pub fn parity_dist_frac(num: [i64; 3], den: [i64; 3]) -> Result<(i64, i64)> {
    let l = crate::lcm_i64(crate::lcm_i64(den[0], den[1])?, den[2])?;
    let mut even = [0i64; 3];
    let mut odd = [0i64; 3];
    for i in 0..3 {
        let m = 2 * den[i];
        let r = num[i].rem_euclid(m);
        let w = l / den[i];
        even[i] = r.min(m - r) * w;
        odd[i] = (r - den[i]).abs() * w;
    }
    let d = (even[0] + even[1] + even[2])
        .min(even[0] + odd[1] + odd[2])
        .min(odd[0] + even[1] + odd[2])
        .min(odd[0] + odd[1] + even[2]);
    Ok((d, l))
}

/// Distance of `k * (1/p, 1/q, 1/r)` to the parity lattice as `(d, L)`.
/// Negative parameters are allowed; the sign is absorbed into the numerator.
pub fn parity_dist_of_multiple(k: i64, p: i64, q: i64, r: i64) -> Result<(i64, i64)> {
    let ps = [p, q, r];
    let mut num = [0i64; 3];
    let mut den = [0i64; 3];
    for i in 0..3 {
        if ps[i] == 0 {
            return Err(Error::ZeroParameter);
        }
        num[i] = if ps[i] > 0 { k } else { -k };
        den[i] = ps[i].abs();
    }
    parity_dist_frac(num, den)
}

/// `d/l >= tn/td` for a nonnegative target fraction.
pub fn frac_ge(d: i64, l: i64, tn: i64, td: i64) -> bool {
    (d as i128) * (td as i128) >= (tn as i128) * (l as i128)
}

/// Exact `Rat` from an unreduced kernel fraction.
pub fn frac_to_rat(d: i64, l: i64) -> Rat {
    rat(d, l)
}
