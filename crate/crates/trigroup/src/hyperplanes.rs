//! Witness-`t` searches: line enumeration on the exceptional hyperplanes,
//! the closed form on the zero-sum hyperplane, and the co-dimension-two
//! cross-product sweep.
//!
//! The goal is the uniform lower bound: for every nonzero integer triple
//! `(p, q, r)` there is a real `t` with the point `t (1/p, 1/q, 1/r)` at
//! parity-lattice distance at least `6/5`, with equality forced exactly for
//! `(1, 2, 6)`, `(2, 3, 6)` and `(3, 4, 12)`. Away from those, the strict
//! target `29/24` is reachable, and that is what the searches here certify
//! triple by triple.

use crate::lattice::{frac_ge, frac_to_rat, parity_dist_frac};
use crate::moments::Direction;
use crate::rational::{rat, rat_to_string, Rat};
use crate::{Error, Result};
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

/// A rational line on the 2-torus: primitive `(u, v)`, including the two
/// axes `(0, 1)` and `(1, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusLine {
    pub u: i64,
    pub v: i64,
}

impl TorusLine {
    pub fn height(&self) -> i64 {
        self.u.abs().max(self.v.abs())
    }
}

/// All lines of height strictly below `h_max`: the two axes plus the
/// coprime pairs `(u, +-v)` with `u, v >= 1`, deduplicated up to overall
/// sign. Height 70 gives the 5880 lines (5878 nonzero finite slopes plus
/// `0` and `infinity`).
pub fn lines_up_to_height(h_max: i64) -> Result<Vec<TorusLine>> {
    if h_max < 1 {
        return Err(Error::ParameterTooSmall(1));
    }
    let mut out = vec![TorusLine { u: 0, v: 1 }, TorusLine { u: 1, v: 0 }];
    for u in 1..h_max {
        for v in 1..h_max {
            if crate::gcd_i64(u, v) == 1 {
                out.push(TorusLine { u, v });
                out.push(TorusLine { u, v: -v });
            }
        }
    }
    Ok(out)
}

/// One row of the exceptional-hyperplane table: the direction, a point `P`
/// on the hyperplane close to the center `(1/2, 1/2, 1/2)`, and the exact
/// L1 distance from `P` to the center.
#[derive(Debug, Clone, Copy)]
pub struct HyperplaneRow {
    pub dir: [i64; 3],
    pub point: [(i64, i64); 3],
    pub center_distance: (i64, i64),
}

/// The sixteen hyperplane directions whose twelfth-power line sum does not
/// exceed `24^12`, with their tabulated near-center points. Rows 1 and 2
/// need separate treatment: `(0, 0, 1)` never arises from a finite triple
/// and `(1, 1, 1)` is the zero-sum hyperplane handled in closed form.
pub const EXCEPTIONAL_ROWS: [HyperplaneRow; 16] = [
    HyperplaneRow { dir: [0, 0, 1], point: [(1, 2), (1, 2), (0, 1)], center_distance: (1, 2) },
    HyperplaneRow { dir: [1, 1, 1], point: [(1, 3), (1, 3), (1, 3)], center_distance: (1, 2) },
    HyperplaneRow { dir: [0, 1, 2], point: [(1, 2), (1, 2), (1, 4)], center_distance: (1, 4) },
    HyperplaneRow { dir: [1, 2, 2], point: [(1, 2), (1, 2), (1, 4)], center_distance: (1, 4) },
    HyperplaneRow { dir: [0, 1, 4], point: [(1, 2), (2, 5), (2, 5)], center_distance: (1, 5) },
    HyperplaneRow { dir: [0, 2, 3], point: [(1, 2), (2, 5), (2, 5)], center_distance: (1, 5) },
    HyperplaneRow { dir: [1, 1, 3], point: [(1, 2), (1, 2), (1, 3)], center_distance: (1, 6) },
    HyperplaneRow { dir: [1, 3, 3], point: [(1, 2), (1, 2), (1, 3)], center_distance: (1, 6) },
    HyperplaneRow { dir: [2, 2, 3], point: [(1, 2), (1, 2), (1, 3)], center_distance: (1, 6) },
    HyperplaneRow { dir: [0, 2, 5], point: [(1, 2), (3, 7), (3, 7)], center_distance: (1, 7) },
    HyperplaneRow { dir: [0, 3, 4], point: [(1, 2), (3, 7), (3, 7)], center_distance: (1, 7) },
    HyperplaneRow { dir: [1, 2, 4], point: [(1, 2), (1, 2), (5, 8)], center_distance: (1, 8) },
    HyperplaneRow { dir: [1, 4, 4], point: [(1, 2), (1, 2), (3, 8)], center_distance: (1, 8) },
    HyperplaneRow { dir: [2, 3, 4], point: [(1, 2), (1, 2), (3, 8)], center_distance: (1, 8) },
    HyperplaneRow { dir: [2, 2, 5], point: [(1, 2), (1, 2), (2, 5)], center_distance: (1, 10) },
    HyperplaneRow { dir: [1, 1, 5], point: [(1, 2), (1, 2), (2, 5)], center_distance: (1, 10) },
];

/// The three triples achieving only `1 + 1/5`, with the grid `t` attaining
/// it.
pub const BOUNDARY_TRIPLES: [([i64; 3], (i64, i64)); 3] = [
    ([1, 2, 6], (12, 5)),
    ([2, 3, 6], (6, 5)),
    ([3, 4, 12], (24, 5)),
];

/// Projects the torus line `(u z, v z)` onto the hyperplane
/// `a x + b y + c z = 0`, with `c` the largest entry: the image line has
/// direction `(c u, c v, -a u - b v)`, returned primitive.
pub fn project_line(h: [i64; 3], l: &TorusLine) -> Result<Direction> {
    let [a, b, c] = h;
    if c == 0 || c < a || c < b {
        return Err(Error::Precondition(
            "hyperplane must be ordered with c nonzero and largest",
        ));
    }
    let w = [c * l.u, c * l.v, -a * l.u - b * l.v];
    if w == [0, 0, 0] {
        return Err(Error::ZeroParameter);
    }
    Direction::new(w[0], w[1], w[2])
}

/// A search result: a rational `t` and the exact parity-lattice distance of
/// `t (1/p, 1/q, 1/r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessT {
    pub t: Rat,
    pub distance: Rat,
}

fn small_frac(x: &Rat) -> Result<(i64, i64)> {
    let n = x.numer().to_i64().ok_or(Error::TooLarge)?;
    let d = x.denom().to_i64().ok_or(Error::TooLarge)?;
    Ok((n, d))
}

/// Distance of `(j/1000) * (1/p, 1/q, 1/r)` as a kernel fraction.
fn grid_dist(j: i64, p: i64, q: i64, r: i64) -> Result<(i64, i64)> {
    let ps = [p, q, r];
    let mut num = [0i64; 3];
    let mut den = [0i64; 3];
    for i in 0..3 {
        num[i] = if ps[i] > 0 { j } else { -j };
        den[i] = 1000 * ps[i].abs();
    }
    parity_dist_frac(num, den)
}

fn mix_seed(seed: u64, p: i64, q: i64, r: i64) -> u64 {
    let mut h = seed ^ 0x9e37_79b9_7f4a_7c15;
    for v in [p, q, r] {
        h ^= v as u64;
        h = h.wrapping_mul(0xbf58_476d_1ce4_e5b9);
        h ^= h >> 27;
        h = h.wrapping_mul(0x94d0_49bb_1331_11eb);
        h ^= h >> 31;
    }
    h
}

const GRID_EVAL_CAP: u64 = 2_000_001;

/// Seeded random search for `t = j/1000`, `j` uniform in
/// `[-1000 n, 1000 n]` with `n = lcm(2, p, q, r)`, up to `budget` draws,
/// returning the first draw whose exact distance reaches `target`. On
/// exhaustion, an alternating grid `j = 0, 1, -1, 2, -2, ...` over the same
/// range (capped) makes the boundary cases reproducible. Absence of a
/// witness is a legitimate `None`.
pub fn find_t_witness(
    p: i64,
    q: i64,
    r: i64,
    target: &Rat,
    budget: u32,
    seed: u64,
) -> Result<Option<WitnessT>> {
    if p == 0 || q == 0 || r == 0 {
        return Err(Error::ZeroParameter);
    }
    if budget < 1 {
        return Err(Error::ParameterTooSmall(1));
    }
    let (tn, td) = small_frac(target)?;
    let n = crate::lcm2pqr(p, q, r)?;
    let hi = n.checked_mul(1000).ok_or(Error::TooLarge)?;
    let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, p, q, r));
    for _ in 0..budget {
        let j = rng.gen_range(-hi..=hi);
        let (d, l) = grid_dist(j, p, q, r)?;
        if frac_ge(d, l, tn, td) {
            return Ok(Some(WitnessT {
                t: rat(j, 1000),
                distance: frac_to_rat(d, l),
            }));
        }
    }
    grid_t_witness(p, q, r, target, GRID_EVAL_CAP)
}

/// Deterministic grid scan `t = j/1000` with `j = 0, 1, -1, 2, -2, ...`
/// over `|j| <= 1000 n`, returning the first `t` whose exact distance
/// reaches `target`.
pub fn grid_t_witness(
    p: i64,
    q: i64,
    r: i64,
    target: &Rat,
    max_evals: u64,
) -> Result<Option<WitnessT>> {
    if p == 0 || q == 0 || r == 0 {
        return Err(Error::ZeroParameter);
    }
    let (tn, td) = small_frac(target)?;
    let n = crate::lcm2pqr(p, q, r)?;
    let hi = n.checked_mul(1000).ok_or(Error::TooLarge)?;
    let mut evals = 0u64;
    let check = |j: i64| -> Result<Option<WitnessT>> {
        let (d, l) = grid_dist(j, p, q, r)?;
        if frac_ge(d, l, tn, td) {
            Ok(Some(WitnessT {
                t: rat(j, 1000),
                distance: frac_to_rat(d, l),
            }))
        } else {
            Ok(None)
        }
    };
    if let Some(w) = check(0)? {
        return Ok(Some(w));
    }
    evals += 1;
    for a in 1..=hi {
        for j in [a, -a] {
            if evals >= max_evals {
                return Ok(None);
            }
            if let Some(w) = check(j)? {
                return Ok(Some(w));
            }
            evals += 1;
        }
    }
    Ok(None)
}

/// Closed-form witness for the zero-sum hyperplane family
/// `(p, p+1, p(p+1))`, the only primitive triples with
/// `1/p = 1/(p+1) + 1/(p(p+1))`. The returned distance is recomputed
/// exactly before returning.
///
/// The formula achieves `4/3` for `p = 1 mod 3` and `4/3` minus a term
/// vanishing in `p` otherwise; it drops below `29/24` only for
/// `p in {2, 3, 5}`, where the grid search takes over.
pub fn zero_sum_family_witness(p: i64) -> Result<WitnessT> {
    if p < 2 {
        return Err(Error::ParameterTooSmall(2));
    }
    let pp1 = p.checked_mul(p + 1).ok_or(Error::TooLarge)?;
    let t = match p % 3 {
        0 => rat(pp1 + p, 3),
        1 => rat(pp1, 3),
        _ => rat(pp1 - (p + 1), 3),
    };
    let expected = match p % 3 {
        0 => rat(4, 3) - rat(2, 3 * (p + 1)),
        1 => rat(4, 3),
        _ => rat(4, 3) - rat(2, 3 * p),
    };
    let (tn, td) = small_frac(&t)?;
    let num = [tn, tn, tn];
    let den = [
        td.checked_mul(p).ok_or(Error::TooLarge)?,
        td.checked_mul(p + 1).ok_or(Error::TooLarge)?,
        td.checked_mul(pp1).ok_or(Error::TooLarge)?,
    ];
    let (d, l) = parity_dist_frac(num, den)?;
    let distance = frac_to_rat(d, l);
    if distance != expected {
        return Err(Error::Verification(vec![(p, p + 1, pp1)]));
    }
    Ok(WitnessT { t, distance })
}

/// Sorted-absolute-value primitive form used to deduplicate projected lines
/// and cross products.
pub fn normalize_sorted(v: [i64; 3]) -> [i64; 3] {
    let mut w = [v[0].abs(), v[1].abs(), v[2].abs()];
    w.sort_unstable();
    let g = crate::gcd_i64(crate::gcd_i64(w[0], w[1]), w[2]);
    if g > 1 {
        for x in &mut w {
            *x /= g;
        }
    }
    w
}

/// The triple `(p, q, r) = (bc, ac, ab)` reduced, so that
/// `(1/p, 1/q, 1/r)` is proportional to `(a, b, c)`.
pub fn direction_to_triple(v: [i64; 3]) -> Option<[i64; 3]> {
    if v.iter().any(|x| *x == 0) {
        return None;
    }
    let t = [v[1] * v[2], v[0] * v[2], v[0] * v[1]];
    Some(normalize_sorted(t))
}

/// A triple that failed to reach the strict target, re-characterized on the
/// deterministic grid at the achieved bound `6/5`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionRecord {
    pub triple: [i64; 3],
    pub t: String,
    pub distance: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Codim2Report {
    pub directions_in: usize,
    /// Distinct normalized cross products, zero vector included.
    pub cross_count_including_zero: usize,
    /// Normalized cross products with a zero entry; these correspond to no
    /// triple and are skipped.
    pub with_zero_entry: usize,
    pub triples_checked: usize,
    pub failures: Vec<[i64; 3]>,
}

/// Cross-product sweep: for every pair of distinct directions, the line
/// orthogonal to both is their cross product; each all-nonzero normalized
/// product `(a, b, c)` yields the triple `(bc, ac, ab)`, which is searched
/// for a witness at target `29/24`.
pub fn codim2_sweep(dirs: &[Direction], budget: u32, seed: u64) -> Result<Codim2Report> {
    let comps: Vec<[i64; 3]> = dirs.iter().map(|d| d.components()).collect();
    let normalized: HashSet<[i64; 3]> = comps
        .par_iter()
        .enumerate()
        .fold(HashSet::new, |mut acc, (i, a)| {
            for b in &comps[i + 1..] {
                let cx = [
                    a[1] * b[2] - a[2] * b[1],
                    a[2] * b[0] - a[0] * b[2],
                    a[0] * b[1] - a[1] * b[0],
                ];
                acc.insert(if cx == [0, 0, 0] {
                    [0, 0, 0]
                } else {
                    normalize_sorted(cx)
                });
            }
            acc
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });

    let cross_count = normalized.len();
    let mut triples: Vec<[i64; 3]> = normalized
        .iter()
        .filter_map(|v| direction_to_triple(*v))
        .collect();
    triples.sort_unstable();
    triples.dedup();
    let with_zero = normalized
        .iter()
        .filter(|v| **v != [0, 0, 0] && v.contains(&0))
        .count();

    let target = rat(29, 24);
    let mut failures: Vec<[i64; 3]> = triples
        .par_iter()
        .filter_map(|t| {
            match find_t_witness(t[0], t[1], t[2], &target, budget, seed) {
                Ok(Some(_)) => None,
                Ok(None) => Some(Ok(*t)),
                Err(e) => Some(Err(e)),
            }
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    failures.sort_unstable();

    Ok(Codim2Report {
        directions_in: dirs.len(),
        cross_count_including_zero: cross_count,
        with_zero_entry: with_zero,
        triples_checked: triples.len(),
        failures,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LineVerificationReport {
    pub height_cutoff: i64,
    pub budget: u32,
    pub seed: u64,
    pub lines_per_hyperplane: usize,
    /// Deduplicated projected lines with all entries nonzero; these are the
    /// triples actually checked.
    pub projected_triples_checked: usize,
    pub projected_with_zero_entry: usize,
    pub special_family_max_p: i64,
    pub codim2: Codim2Report,
    pub exceptions: Vec<ExceptionRecord>,
    pub witnesses_sample: Vec<ExceptionRecord>,
}

/// Full verification of the `6/5` bound at a height cutoff.
///
/// 1. On each of the fourteen hyperplanes (table rows 3 to 16), every
///    projected line below the cutoff is checked for a witness at `29/24`.
/// 2. The zero-sum family is certified in closed form for
///    `p <= special_p_max`, with the grid search covering `p in {2, 3, 5}`.
/// 3. The co-dimension-two sweep covers triples orthogonal to two
///    directions at once.
///
/// The only failures must be `(1, 2, 6)`, `(2, 3, 6)`, `(3, 4, 12)`, each
/// achieving exactly `6/5`; anything else is a verification error listing
/// the unexplained triples.
pub fn verify_hyperplane_lines(
    height_cutoff: i64,
    budget: u32,
    seed: u64,
    special_p_max: i64,
) -> Result<LineVerificationReport> {
    let lines = lines_up_to_height(height_cutoff)?;
    let mut projected: HashSet<[i64; 3]> = HashSet::new();
    for row in &EXCEPTIONAL_ROWS[2..] {
        for l in &lines {
            let d = project_line(row.dir, l)?;
            projected.insert(normalize_sorted(d.components()));
        }
    }
    let with_zero = projected.iter().filter(|v| v.contains(&0)).count();
    let mut triples: Vec<[i64; 3]> = projected
        .iter()
        .filter(|v| !v.contains(&0))
        // A projected line IS the direction (1/p, 1/q, 1/r) up to scale.
        .map(|v| direction_to_triple(*v).expect("nonzero entries"))
        .collect();
    triples.sort_unstable();
    triples.dedup();
    let triples_checked = triples.len();

    let strict = rat(29, 24);
    let mut failures: Vec<[i64; 3]> = Vec::new();
    let mut sample: Vec<ExceptionRecord> = Vec::new();

    let stage1: Vec<(usize, Option<WitnessT>)> = triples
        .par_iter()
        .enumerate()
        .map(|(i, t)| Ok((i, find_t_witness(t[0], t[1], t[2], &strict, budget, seed)?)))
        .collect::<Result<Vec<_>>>()?;
    for (i, w) in stage1 {
        match w {
            Some(w) if sample.len() < 8 => sample.push(ExceptionRecord {
                triple: triples[i],
                t: rat_to_string(&w.t),
                distance: rat_to_string(&w.distance),
            }),
            Some(_) => {}
            None => failures.push(triples[i]),
        }
    }

    let special: Vec<Option<[i64; 3]>> = (2..=special_p_max)
        .into_par_iter()
        .map(|p| -> Result<Option<[i64; 3]>> {
            let w = zero_sum_family_witness(p)?;
            if w.distance >= strict {
                return Ok(None);
            }
            match find_t_witness(p, p + 1, p * (p + 1), &strict, budget, seed)? {
                Some(_) => Ok(None),
                None => Ok(Some(normalize_sorted([p, p + 1, p * (p + 1)]))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    failures.extend(special.into_iter().flatten());

    let table = crate::moments::coef_table(12)?;
    let dirs: Vec<Direction> = crate::moments::line_sums(&table).into_keys().collect();
    let codim2 = codim2_sweep(&dirs, budget, seed)?;
    failures.extend(codim2.failures.iter().copied());

    failures.sort_unstable();
    failures.dedup();

    let achieved = rat(6, 5);
    let mut exceptions = Vec::new();
    let mut unexplained = Vec::new();
    for f in &failures {
        let expected = BOUNDARY_TRIPLES.iter().find(|(t, _)| t == f);
        let w = grid_t_witness(f[0], f[1], f[2], &achieved, GRID_EVAL_CAP)?;
        match (expected, w) {
            (Some((_, t_exp)), Some(w))
                if w.distance == achieved && w.t == rat(t_exp.0, t_exp.1) =>
            {
                exceptions.push(ExceptionRecord {
                    triple: *f,
                    t: rat_to_string(&w.t),
                    distance: rat_to_string(&w.distance),
                });
            }
            _ => unexplained.push((f[0], f[1], f[2])),
        }
    }
    if !unexplained.is_empty() || exceptions.len() != BOUNDARY_TRIPLES.len() {
        if unexplained.is_empty() {
            unexplained = failures.iter().map(|f| (f[0], f[1], f[2])).collect();
        }
        return Err(Error::Verification(unexplained));
    }

    Ok(LineVerificationReport {
        height_cutoff,
        budget,
        seed,
        lines_per_hyperplane: lines.len(),
        projected_triples_checked: triples_checked,
        projected_with_zero_entry: with_zero,
        special_family_max_p: special_p_max,
        codim2,
        exceptions,
        witnesses_sample: sample,
    })
}
