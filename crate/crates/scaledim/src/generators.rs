//! Constructors for the named function classes the workbench studies:
//! binary cubes, two-value cubes, step-profile classes, the
//! uniform-convergence counterexample family, band classes, and seeded
//! random classes. Every generator is a pure function of its arguments,
//! so regenerating from a recorded `GeneratorSpec` reproduces the class
//! bit for bit.

use crate::class::FunctionClass;
use crate::value::{format_rat, rat, Rat};
use crate::{guard, Error, Result};
use num::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

fn check_rows_guard(rows: u128) -> Result<()> {
    guard::check("generated rows", rows, guard::MAX_GEN_ROWS as u128)
}

/// All 2^d functions from a d-point domain to {0, 1}. Row index bit j is
/// the value at point j.
pub fn gen_binary_cube(d: usize) -> Result<FunctionClass> {
    if d == 0 {
        return Err(Error::InvalidParam("cube dimension must be >= 1".into()));
    }
    check_rows_guard(1u128 << d.min(100))?;
    let values = (0..1usize << d)
        .map(|mask| (0..d).map(|j| ((mask >> j) & 1) as i64).collect())
        .collect();
    FunctionClass::new(FunctionClass::default_domain(d), 1, values)
}

/// The nonzero level of the two-value cube: 2 * (gamma - kappa).
pub fn two_value_level(gamma: Rat, kappa: Rat) -> Result<Rat> {
    if !(kappa.is_positive() && kappa < gamma) {
        return Err(Error::InvalidParam(format!(
            "need 0 < kappa < gamma, got kappa={} gamma={}",
            format_rat(&kappa),
            format_rat(&gamma)
        )));
    }
    let v = (gamma - kappa) * rat(2, 1);
    if v > Rat::one() {
        return Err(Error::InvalidParam(format!(
            "level 2(gamma-kappa) = {} exceeds 1",
            format_rat(&v)
        )));
    }
    Ok(v)
}

/// All 2^n functions from an n-point domain to {0, 2(gamma-kappa)}.
pub fn gen_two_value(n: usize, gamma: Rat, kappa: Rat) -> Result<FunctionClass> {
    if n == 0 {
        return Err(Error::InvalidParam("domain size must be >= 1".into()));
    }
    let v = two_value_level(gamma, kappa)?;
    check_rows_guard(1u128 << n.min(100))?;
    let rows: Vec<Vec<Rat>> = (0..1usize << n)
        .map(|mask| {
            (0..n)
                .map(|j| if (mask >> j) & 1 == 1 { v } else { Rat::zero() })
                .collect()
        })
        .collect();
    FunctionClass::from_rows(FunctionClass::default_domain(n), &rows)
}

/// One step of a dimension profile: the class is built so that scales up
/// to `scale` see `dim` shatterable points from this piece's block.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ProfilePiece {
    pub scale: Rat,
    pub dim: usize,
    /// When false, the scale is approached from below at finitely many
    /// levels scale*(1 - 1/n) instead of being attained.
    pub attained: bool,
}

/// Class whose measured fatv steps down at the given scales: each piece
/// contributes a block of `dim` points carrying the values 1/2 +- scale
/// (or 1/2 +- scale*(1 - 1/n), n = 1..levels, when the scale is not
/// attained), with every function zero off its own block.
///
/// Sets of points spanning two blocks are never shatterable (no function
/// is high on both), so the profile is exact wherever it calls for
/// dimension >= 1. At scales where the profile is 0, a lone point can stay
/// shatterable up to (1/2 + scale)/2 by pairing a block's high value with
/// an off-block zero; ending the profile with a piece at scale 1/2 avoids
/// this. No pieces at all yields the all-zero singleton class.
pub fn gen_profile(pieces: &[ProfilePiece], levels: usize) -> Result<FunctionClass> {
    let half = rat(1, 2);
    for w in pieces.windows(2) {
        if w[0].scale >= w[1].scale || w[0].dim <= w[1].dim {
            return Err(Error::InvalidParam(
                "profile pieces must have strictly increasing scales and strictly decreasing dimensions".into(),
            ));
        }
    }
    for p in pieces {
        if !p.scale.is_positive() || p.scale > half {
            return Err(Error::InvalidParam(format!(
                "piece scale {} outside (0, 1/2]",
                format_rat(&p.scale)
            )));
        }
        if p.dim == 0 {
            return Err(Error::InvalidParam(
                "zero-dimension pieces are implicit; leave them out".into(),
            ));
        }
        if !p.attained && levels == 0 {
            return Err(Error::InvalidParam("open pieces need levels >= 1".into()));
        }
    }
    // (block start, block size, value offset) per realized block
    let mut blocks: Vec<(usize, usize, Rat)> = Vec::new();
    let mut total_points = 0usize;
    let mut total_rows: u128 = 1;
    for p in pieces {
        let n_levels = if p.attained { 1 } else { levels };
        for level in 1..=n_levels {
            let offset = if p.attained {
                p.scale
            } else {
                p.scale * rat(level as i64 - 1, level as i64)
            };
            blocks.push((total_points, p.dim, offset));
            total_points += p.dim;
            total_rows += 1u128 << p.dim.min(100);
        }
    }
    check_rows_guard(total_rows)?;
    guard::check("generated points", total_points as u128, guard::MAX_GEN_ROWS as u128)?;
    let n = total_points.max(1);
    let mut rows: BTreeSet<Vec<Rat>> = BTreeSet::new();
    if pieces.is_empty() {
        rows.insert(vec![Rat::zero(); n]);
    }
    for &(start, size, offset) in &blocks {
        for mask in 0..1usize << size {
            let mut row = vec![Rat::zero(); n];
            for j in 0..size {
                row[start + j] = if (mask >> j) & 1 == 1 { half + offset } else { half - offset };
            }
            rows.insert(row);
        }
    }
    let rows: Vec<Vec<Rat>> = rows.into_iter().collect();
    FunctionClass::from_rows(FunctionClass::default_domain(n), &rows)
}

/// The two values available at point `i` (1-indexed) of the
/// uniform-convergence counterexample family: 1/2 -+ (epsilon/2 + 1/(i+3)).
pub fn gc_value_pair(epsilon: Rat, i: usize) -> Result<(Rat, Rat)> {
    crate::value::require_positive("epsilon", &epsilon)?;
    if epsilon > rat(1, 2) {
        return Err(Error::InvalidParam(format!(
            "epsilon {} > 1/2 pushes point values outside [0, 1]",
            format_rat(&epsilon)
        )));
    }
    let half = rat(1, 2);
    let offset = epsilon / rat(2, 1) + rat(1, i as i64 + 3);
    Ok((half - offset, half + offset))
}

/// All 2^n functions taking, at each point i, one of the two values of
/// `gc_value_pair(epsilon, i)`. The per-point gap shrinks as i grows, so
/// fat(., epsilon/2 + alpha) counts exactly the points with 1/(i+3) >= alpha.
pub fn gen_gc_counterexample(epsilon: Rat, n: usize) -> Result<FunctionClass> {
    if n == 0 {
        return Err(Error::InvalidParam("domain size must be >= 1".into()));
    }
    check_rows_guard(1u128 << n.min(100))?;
    let pairs: Vec<(Rat, Rat)> =
        (1..=n).map(|i| gc_value_pair(epsilon, i)).collect::<Result<_>>()?;
    let rows: Vec<Vec<Rat>> = (0..1usize << n)
        .map(|mask| {
            (0..n)
                .map(|j| if (mask >> j) & 1 == 1 { pairs[j].1 } else { pairs[j].0 })
                .collect()
        })
        .collect();
    FunctionClass::from_rows(FunctionClass::default_domain(n), &rows)
}

/// A chosen subclass of the counterexample family: one row per entry of
/// `picks`, where bit j selects the high value at point j+1. This is the
/// route to work with the family on domains too large to enumerate fully.
pub fn gen_gc_subclass(epsilon: Rat, n: usize, picks: &[Vec<bool>]) -> Result<FunctionClass> {
    if n == 0 || picks.is_empty() {
        return Err(Error::InvalidParam("need a domain and at least one row".into()));
    }
    check_rows_guard(picks.len() as u128)?;
    let pairs: Vec<(Rat, Rat)> =
        (1..=n).map(|i| gc_value_pair(epsilon, i)).collect::<Result<_>>()?;
    let rows: Vec<Vec<Rat>> = picks
        .iter()
        .map(|row| {
            if row.len() != n {
                return Err(Error::LengthMismatch(format!(
                    "pick row has {} entries for {} points",
                    row.len(),
                    n
                )));
            }
            Ok((0..n).map(|j| if row[j] { pairs[j].1 } else { pairs[j].0 }).collect())
        })
        .collect::<Result<_>>()?;
    FunctionClass::from_rows(FunctionClass::default_domain(n), &rows)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum BandLevels {
    Two,
    Three,
}

/// All functions from an n-point domain into a symmetric band around 1/2:
/// {1/2 - eps/2, 1/2 + eps/2} (two levels) or {1/2 - eps, 1/2, 1/2 + eps}
/// (three levels).
pub fn gen_band_class(epsilon: Rat, n: usize, levels: BandLevels) -> Result<FunctionClass> {
    if n == 0 {
        return Err(Error::InvalidParam("domain size must be >= 1".into()));
    }
    crate::value::require_positive("epsilon", &epsilon)?;
    let half = rat(1, 2);
    let vals: Vec<Rat> = match levels {
        BandLevels::Two => {
            let off = epsilon / rat(2, 1);
            if off > half {
                return Err(Error::InvalidParam("epsilon > 1 leaves the unit interval".into()));
            }
            vec![half - off, half + off]
        }
        BandLevels::Three => {
            if epsilon > half {
                return Err(Error::InvalidParam("epsilon > 1/2 leaves the unit interval".into()));
            }
            vec![half - epsilon, half, half + epsilon]
        }
    };
    let base = vals.len();
    let mut n_rows: u128 = 1;
    for _ in 0..n {
        n_rows = n_rows.saturating_mul(base as u128);
    }
    check_rows_guard(n_rows)?;
    let mut rows = Vec::with_capacity(n_rows as usize);
    let mut digits = vec![0usize; n];
    loop {
        rows.push(digits.iter().map(|&d| vals[d]).collect::<Vec<Rat>>());
        // odometer over base-`base` digit strings
        let mut j = 0;
        loop {
            if j == n {
                let domain = FunctionClass::default_domain(n);
                return FunctionClass::from_rows(domain, &rows);
            }
            digits[j] += 1;
            if digits[j] < base {
                break;
            }
            digits[j] = 0;
            j += 1;
        }
    }
}

/// Uniform i.i.d. entries on the grid {0, 1/b, ..., 1}, reproducible from
/// the seed.
pub fn gen_random(n_points: usize, n_funcs: usize, b: i64, seed: u64) -> Result<FunctionClass> {
    if n_points == 0 || n_funcs == 0 {
        return Err(Error::InvalidParam("need at least one point and one function".into()));
    }
    if b < 1 {
        return Err(Error::InvalidParam(format!("grid denominator must be >= 1, got {b}")));
    }
    check_rows_guard(n_funcs as u128)?;
    guard::check("generated points", n_points as u128, guard::MAX_GEN_ROWS as u128)?;
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let values = (0..n_funcs)
        .map(|_| (0..n_points).map(|_| rng.gen_range(0..=b)).collect())
        .collect();
    FunctionClass::new(FunctionClass::default_domain(n_points), b, values)
}

/// Recorded recipe for a generated class; regenerating reproduces the
/// class bit for bit. Rationals are stored as (numerator, denominator).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum GeneratorSpec {
    BinaryCube { d: usize },
    TwoValue { n: usize, gamma: (i64, i64), kappa: (i64, i64) },
    Profile { pieces: Vec<(i64, i64, usize, bool)>, levels: usize },
    GcCounterexample { epsilon: (i64, i64), n: usize },
    BandClass { epsilon: (i64, i64), n: usize, levels: BandLevels },
    Random { n_points: usize, n_funcs: usize, b: i64, seed: u64 },
}

fn spec_rat(pair: (i64, i64), what: &str) -> Result<Rat> {
    if pair.1 <= 0 {
        return Err(Error::InvalidParam(format!(
            "{what} denominator must be positive, got {}",
            pair.1
        )));
    }
    Ok(rat(pair.0, pair.1))
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<FunctionClass> {
        match self {
            GeneratorSpec::BinaryCube { d } => gen_binary_cube(*d),
            GeneratorSpec::TwoValue { n, gamma, kappa } => {
                gen_two_value(*n, spec_rat(*gamma, "gamma")?, spec_rat(*kappa, "kappa")?)
            }
            GeneratorSpec::Profile { pieces, levels } => {
                let pieces = pieces
                    .iter()
                    .map(|&(sn, sd, dim, attained)| {
                        Ok(ProfilePiece { scale: spec_rat((sn, sd), "scale")?, dim, attained })
                    })
                    .collect::<Result<Vec<_>>>()?;
                gen_profile(&pieces, *levels)
            }
            GeneratorSpec::GcCounterexample { epsilon, n } => {
                gen_gc_counterexample(spec_rat(*epsilon, "epsilon")?, *n)
            }
            GeneratorSpec::BandClass { epsilon, n, levels } => {
                gen_band_class(spec_rat(*epsilon, "epsilon")?, *n, *levels)
            }
            GeneratorSpec::Random { n_points, n_funcs, b, seed } => {
                gen_random(*n_points, *n_funcs, *b, *seed)
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Format(format!("generator spec: {e}")))
    }
}
