//! Played-out games and sampled learners: everything here draws sequences,
//! runs a predictor or learner over them, and reports exact error masses
//! (exhaustive mode) or exact-mean Monte Carlo estimates (sampled mode).
//!
//! Determinism contract: a sampled run is a pure function of (seed, trial
//! index). Each trial gets its own counter-mode substream, and shard sums
//! are exact rationals, so results are identical for any `jobs` value.

use std::collections::{BTreeSet, HashMap};
use std::ops::Range;

use num::{BigInt, BigRational, One, Signed, Zero};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::class::{
    psi, DiscreteDistribution, FunctionClass, JointSample, LabeledSample, TernaryClass, Ternary,
    restrict,
};
use crate::error::{Error, Result};
use crate::generators::two_value_level;
use crate::guard;
use crate::packing;
use crate::predict::{aggregate_predict, bisect_predict, cwdc_predict, AggregatorConfig};
use crate::value::{format_rat, is_unit_interval, rat, rat_to_f64, require_positive, Rat, Value};

/// Which online predictor plays the rounds of a game.
#[derive(Clone, Copy, Debug)]
pub enum Predictor {
    /// Threshold-vote aggregator.
    Aggregate(AggregatorConfig),
    /// Binary-search variant, answering with `depth` bits.
    Bisect { cfg: AggregatorConfig, depth: usize },
}

impl Predictor {
    pub fn predict(&self, f: &FunctionClass, prefix: &LabeledSample, query: usize) -> Result<Rat> {
        match self {
            Predictor::Aggregate(cfg) => Ok(aggregate_predict(f, cfg, prefix, query)?.prediction),
            Predictor::Bisect { cfg, depth } => bisect_predict(f, cfg, prefix, query, *depth),
        }
    }
}

/// Mean absolute prediction error when the target is this row.
#[derive(Clone, Debug)]
pub struct TargetOutcome {
    pub target: usize,
    /// Exact mean: the full expectation in exhaustive mode, the sample mean
    /// in Monte Carlo mode.
    pub mean: Rat,
    /// Standard error of the sample mean; absent in exhaustive mode.
    pub stderr: Option<f64>,
}

/// Per-target error report for one played game family.
#[derive(Clone, Debug)]
pub struct GameResult {
    pub per_target: Vec<TargetOutcome>,
    pub worst_target: usize,
    pub worst_error: Rat,
    /// Sequences enumerated (exhaustive) or trials per target (sampled).
    pub trials: u64,
    pub seed: Option<u64>,
}

// Predictions depend on the prefix only through the set of distinct points
// it labels (labels are then fixed by the target), so the memo key drops
// order and multiplicity. `two_value_mirror_matches_aggregator` and
// `exhaustive_matches_unmemoized_replay` below pin this collapse.
type MemoKey = (usize, Vec<usize>, usize);

fn predict_memo(
    memo: &mut HashMap<MemoKey, Rat>,
    predictor: &Predictor,
    f: &FunctionClass,
    target: usize,
    pts: &[usize],
    query: usize,
) -> Result<Rat> {
    let mut set: Vec<usize> = pts.to_vec();
    set.sort_unstable();
    set.dedup();
    let key = (target, set, query);
    if let Some(v) = memo.get(&key) {
        return Ok(*v);
    }
    let prefix: LabeledSample = key.1.iter().map(|&x| (x, f.value(target, x))).collect();
    let v = predictor.predict(f, &prefix, query)?;
    memo.insert(key, v);
    Ok(v)
}

fn check_game_inputs(f: &FunctionClass, dist: &DiscreteDistribution, m: usize) -> Result<()> {
    if dist.n_points() != f.n_points() {
        return Err(Error::LengthMismatch(format!(
            "distribution over {} points for a class on {}",
            dist.n_points(),
            f.n_points()
        )));
    }
    if m == 0 {
        return Err(Error::InvalidParam("need at least one round".into()));
    }
    Ok(())
}

fn finish_game(per_target: Vec<TargetOutcome>, trials: u64, seed: Option<u64>) -> GameResult {
    let mut worst = 0usize;
    for (i, o) in per_target.iter().enumerate() {
        if o.mean > per_target[worst].mean {
            worst = i;
        }
    }
    GameResult {
        worst_target: per_target[worst].target,
        worst_error: per_target[worst].mean,
        per_target,
        trials,
        seed,
    }
}

/// Advance a base-`n` odometer; false once it wraps back to all zeros.
fn odometer_step(seq: &mut [usize], n: usize) -> bool {
    for slot in seq.iter_mut() {
        *slot += 1;
        if *slot < n {
            return true;
        }
        *slot = 0;
    }
    false
}

fn count_sequences(n: usize, m: usize, what: &'static str) -> Result<u128> {
    let seqs = (n as u128)
        .checked_pow(m as u32)
        .ok_or(Error::GuardExceeded { what, value: u128::MAX, limit: guard::MAX_GAME_SEQUENCES })?;
    guard::check(what, seqs, guard::MAX_GAME_SEQUENCES)?;
    Ok(seqs)
}

/// Exact expected error of `predictor` against every target: the last point
/// of each length-`m` sequence is the query, the earlier ones arrive labeled
/// by the target, and sequences are weighted by the product distribution.
pub fn game_exhaustive(
    f: &FunctionClass,
    dist: &DiscreteDistribution,
    m: usize,
    predictor: &Predictor,
) -> Result<GameResult> {
    check_game_inputs(f, dist, m)?;
    let n = f.n_points();
    let seqs = count_sequences(n, m, "game sequences")?;
    let mut memo = HashMap::new();
    let mut per_target = Vec::with_capacity(f.n_functions());
    for t in 0..f.n_functions() {
        let mut total = Rat::zero();
        let mut seq = vec![0usize; m];
        loop {
            let mut w = Rat::one();
            for &x in &seq {
                w *= dist.weight(x);
            }
            if !w.is_zero() {
                let query = seq[m - 1];
                let pred = predict_memo(&mut memo, predictor, f, t, &seq[..m - 1], query)?;
                total += (pred - f.value(t, query)).abs() * w;
            }
            if !odometer_step(&mut seq, n) {
                break;
            }
        }
        per_target.push(TargetOutcome { target: t, mean: total, stderr: None });
    }
    Ok(finish_game(per_target, seqs as u64, None))
}

fn shard_ranges(total: u64, jobs: usize) -> Vec<Range<u64>> {
    let jobs = jobs.max(1).min(total.max(1) as usize);
    let chunk = total.div_ceil(jobs as u64);
    (0..jobs as u64)
        .map(|j| (j * chunk)..((j + 1) * chunk).min(total))
        .filter(|r| !r.is_empty())
        .collect()
}

fn check_trials(trials: u64) -> Result<()> {
    if trials == 0 || trials > u32::MAX as u64 {
        return Err(Error::InvalidParam(format!("trials must be in 1..=2^32-1, got {trials}")));
    }
    Ok(())
}

fn mc_stderr(sum: &Rat, sumsq: &Rat, n: u64) -> Option<f64> {
    if n < 2 {
        return None;
    }
    let nf = n as f64;
    let var = (rat_to_f64(sumsq) - rat_to_f64(sum).powi(2) / nf) / (nf - 1.0);
    Some((var.max(0.0) / nf).sqrt())
}

/// Monte Carlo version of `game_exhaustive`: `trials` i.i.d. sequences per
/// target, exact sample means, normal-theory standard errors.
pub fn game_mc(
    f: &FunctionClass,
    dist: &DiscreteDistribution,
    m: usize,
    predictor: &Predictor,
    trials: u64,
    seed: u64,
    jobs: usize,
) -> Result<GameResult> {
    check_game_inputs(f, dist, m)?;
    check_trials(trials)?;
    let sampler = dist.sampler();
    let n_t = f.n_functions();
    let worker = |range: Range<u64>| -> Result<Vec<(Rat, Rat)>> {
        let mut memo = HashMap::new();
        let mut acc = vec![(Rat::zero(), Rat::zero()); n_t];
        for t in 0..n_t {
            for k in range.clone() {
                let mut rng = ChaCha12Rng::seed_from_u64(seed);
                rng.set_stream(((t as u64) << 32) | k);
                let xs: Vec<usize> = (0..m).map(|_| sampler.draw(&mut rng)).collect();
                let pred = predict_memo(&mut memo, predictor, f, t, &xs[..m - 1], xs[m - 1])?;
                let err = (pred - f.value(t, xs[m - 1])).abs();
                acc[t].0 += err;
                acc[t].1 += err * err;
            }
        }
        Ok(acc)
    };
    let parts: Vec<Result<Vec<(Rat, Rat)>>> = std::thread::scope(|sc| {
        let handles: Vec<_> =
            shard_ranges(trials, jobs).into_iter().map(|r| sc.spawn(move || worker(r))).collect();
        handles.into_iter().map(|h| h.join().expect("simulation worker panicked")).collect()
    });
    let mut acc = vec![(Rat::zero(), Rat::zero()); n_t];
    for part in parts {
        for (t, (s, sq)) in part?.into_iter().enumerate() {
            acc[t].0 += s;
            acc[t].1 += sq;
        }
    }
    let tr = Rat::from_integer(trials as i64);
    let per_target = acc
        .into_iter()
        .enumerate()
        .map(|(t, (sum, sumsq))| TargetOutcome {
            target: t,
            mean: sum / tr,
            stderr: mc_stderr(&sum, &sumsq, trials),
        })
        .collect();
    Ok(finish_game(per_target, trials, Some(seed)))
}

/// Exact probability, over a uniformly random ordering of `points`, that
/// the subgame predictor's answer at the final point is an outright mistake
/// (the target's label there is a bit and the answer is the other bit).
pub fn cwdc_permutation_exhaustive(
    g: &TernaryClass,
    points: &[usize],
    target: usize,
) -> Result<Rat> {
    if target >= g.n_rows() {
        return Err(Error::IndexOutOfRange { what: "target row", index: target, size: g.n_rows() });
    }
    for &x in points {
        if x >= g.n_points() {
            return Err(Error::IndexOutOfRange { what: "point", index: x, size: g.n_points() });
        }
    }
    let m = points.len();
    if m == 0 {
        return Err(Error::InvalidParam("need at least one round".into()));
    }
    let mut fact = 1u128;
    for i in 1..=m as u128 {
        fact = fact.saturating_mul(i);
    }
    guard::check("game permutations", fact, guard::MAX_GAME_PERMUTATIONS)?;
    let mut mistakes = 0i64;
    let mut count = 0i64;
    // Heap's algorithm over index positions.
    let mut idx: Vec<usize> = (0..m).collect();
    let mut c = vec![0usize; m];
    let mut run = |order: &[usize]| -> Result<()> {
        count += 1;
        let query = points[order[m - 1]];
        let truth = match g.get(target, query).as_bit() {
            Some(b) => b,
            None => return Ok(()),
        };
        let prefix: Vec<(usize, Ternary)> =
            order[..m - 1].iter().map(|&i| (points[i], g.get(target, points[i]))).collect();
        if cwdc_predict(g, &prefix, query)? != truth {
            mistakes += 1;
        }
        Ok(())
    };
    run(&idx)?;
    let mut i = 0;
    while i < m {
        if c[i] < i {
            if i % 2 == 0 {
                idx.swap(0, i);
            } else {
                idx.swap(c[i], i);
            }
            run(&idx)?;
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(rat(mistakes, count))
}

/// How often the worst row's sample mean strays from its true mean by more
/// than each tolerance.
#[derive(Clone, Debug)]
pub struct GcExceedance {
    pub epsilon: Rat,
    pub probability: Rat,
    pub stderr: Option<f64>,
}

#[derive(Clone, Debug)]
pub struct GcReport {
    pub per_epsilon: Vec<GcExceedance>,
    /// Largest deviation seen over all enumerated or sampled draws.
    pub max_deviation: Rat,
    /// Sequences enumerated (exhaustive) or trials (sampled).
    pub outcomes: u64,
    pub seed: Option<u64>,
}

fn check_gc_inputs(
    f: &FunctionClass,
    dist: &DiscreteDistribution,
    m: usize,
    eps_list: &[Rat],
) -> Result<Vec<Rat>> {
    if dist.n_points() != f.n_points() {
        return Err(Error::LengthMismatch(format!(
            "distribution over {} points for a class on {}",
            dist.n_points(),
            f.n_points()
        )));
    }
    if m == 0 {
        return Err(Error::InvalidParam("need at least one draw".into()));
    }
    if eps_list.is_empty() {
        return Err(Error::InvalidParam("need at least one tolerance".into()));
    }
    for e in eps_list {
        if e.is_negative() {
            return Err(Error::InvalidParam(format!(
                "tolerance must be >= 0, got {}",
                format_rat(e)
            )));
        }
    }
    f.rows().iter().map(|row| dist.expectation(row)).collect()
}

fn sample_deviation(f: &FunctionClass, means: &[Rat], xs: &[usize]) -> Rat {
    let m = rat(xs.len() as i64, 1);
    let mut worst = Rat::zero();
    for t in 0..f.n_functions() {
        let mut s = Rat::zero();
        for &x in xs {
            s += f.value(t, x);
        }
        let dev = (s / m - means[t]).abs();
        if dev > worst {
            worst = dev;
        }
    }
    worst
}

/// Exact law of the worst-row deviation under `m` i.i.d. draws: enumerates
/// every sequence, weights it by the product distribution, and reports the
/// probability mass where the deviation strictly exceeds each tolerance.
pub fn gc_deviation_exhaustive(
    f: &FunctionClass,
    dist: &DiscreteDistribution,
    m: usize,
    eps_list: &[Rat],
) -> Result<GcReport> {
    let means = check_gc_inputs(f, dist, m, eps_list)?;
    let n = f.n_points();
    let seqs = count_sequences(n, m, "deviation sequences")?;
    let mut mass = vec![Rat::zero(); eps_list.len()];
    let mut max_dev = Rat::zero();
    let mut seq = vec![0usize; m];
    loop {
        let mut w = Rat::one();
        for &x in &seq {
            w *= dist.weight(x);
        }
        if !w.is_zero() {
            let dev = sample_deviation(f, &means, &seq);
            if dev > max_dev {
                max_dev = dev;
            }
            for (j, e) in eps_list.iter().enumerate() {
                if dev > *e {
                    mass[j] += w;
                }
            }
        }
        if !odometer_step(&mut seq, n) {
            break;
        }
    }
    let per_epsilon = eps_list
        .iter()
        .zip(mass)
        .map(|(e, p)| GcExceedance { epsilon: *e, probability: p, stderr: None })
        .collect();
    Ok(GcReport { per_epsilon, max_deviation: max_dev, outcomes: seqs as u64, seed: None })
}

/// Monte Carlo version of `gc_deviation_exhaustive`.
pub fn gc_deviation_mc(
    f: &FunctionClass,
    dist: &DiscreteDistribution,
    m: usize,
    eps_list: &[Rat],
    trials: u64,
    seed: u64,
    jobs: usize,
) -> Result<GcReport> {
    let means = check_gc_inputs(f, dist, m, eps_list)?;
    check_trials(trials)?;
    let sampler = dist.sampler();
    let means = &means;
    let worker = |range: Range<u64>| -> (Vec<u64>, Rat) {
        let mut counts = vec![0u64; eps_list.len()];
        let mut max_dev = Rat::zero();
        for k in range {
            let mut rng = ChaCha12Rng::seed_from_u64(seed);
            rng.set_stream(k);
            let xs: Vec<usize> = (0..m).map(|_| sampler.draw(&mut rng)).collect();
            let dev = sample_deviation(f, means, &xs);
            if dev > max_dev {
                max_dev = dev;
            }
            for (j, e) in eps_list.iter().enumerate() {
                if dev > *e {
                    counts[j] += 1;
                }
            }
        }
        (counts, max_dev)
    };
    let parts: Vec<(Vec<u64>, Rat)> = std::thread::scope(|sc| {
        let handles: Vec<_> =
            shard_ranges(trials, jobs).into_iter().map(|r| sc.spawn(move || worker(r))).collect();
        handles.into_iter().map(|h| h.join().expect("simulation worker panicked")).collect()
    });
    let mut counts = vec![0u64; eps_list.len()];
    let mut max_dev = Rat::zero();
    for (part, dev) in parts {
        for (j, c) in part.into_iter().enumerate() {
            counts[j] += c;
        }
        if dev > max_dev {
            max_dev = dev;
        }
    }
    let per_epsilon = eps_list
        .iter()
        .zip(counts)
        .map(|(e, c)| {
            let p = rat(c as i64, trials as i64);
            let pf = rat_to_f64(&p);
            GcExceedance {
                epsilon: *e,
                probability: p,
                stderr: Some((pf * (1.0 - pf) / trials as f64).sqrt()),
            }
        })
        .collect();
    Ok(GcReport { per_epsilon, max_deviation: max_dev, outcomes: trials, seed: Some(seed) })
}

fn big(x: Rat) -> BigRational {
    BigRational::new(BigInt::from(*x.numer()), BigInt::from(*x.denom()))
}

/// Adversarial witness against distribution-free uniform convergence: on a
/// domain of `d` points, every function taking per-point values
/// 1/2 -+ (eps/2 + 1/(i+3)) is in play, and for any observed sample the
/// member sitting low on the sample and high everywhere else has its true
/// mean exceed its sample mean by more than eps once d is large enough.
pub struct GcAdversary {
    epsilon: Rat,
    d: usize,
    /// Sum over the whole domain of (eps/2 + 1/(i+3)), i 1-based.
    base: BigRational,
}

impl GcAdversary {
    pub fn new(epsilon: Rat, d: usize) -> Result<Self> {
        require_positive("epsilon", &epsilon)?;
        if epsilon > rat(1, 2) {
            return Err(Error::InvalidParam(format!(
                "epsilon {} > 1/2 pushes point values outside [0, 1]",
                format_rat(&epsilon)
            )));
        }
        if d == 0 {
            return Err(Error::InvalidParam("domain size must be >= 1".into()));
        }
        let half_eps = big(epsilon) / BigRational::from_integer(BigInt::from(2));
        let mut base = BigRational::zero();
        for i in 1..=d as i64 {
            base += &half_eps + BigRational::new(BigInt::one(), BigInt::from(i + 3));
        }
        Ok(GcAdversary { epsilon, d, base })
    }

    pub fn domain_size(&self) -> usize {
        self.d
    }

    /// True-mean minus sample-mean gap of the member chosen against this
    /// sample (0-based point indices, multiplicity respected).
    pub fn deviation(&self, sample: &[usize]) -> Result<BigRational> {
        if sample.is_empty() {
            return Err(Error::InvalidParam("need at least one draw".into()));
        }
        for &x in sample {
            if x >= self.d {
                return Err(Error::IndexOutOfRange { what: "point", index: x, size: self.d });
            }
        }
        let half_eps = big(self.epsilon) / BigRational::from_integer(BigInt::from(2));
        let h = |x: usize| BigRational::new(BigInt::one(), BigInt::from(x as i64 + 4));
        let distinct: BTreeSet<usize> = sample.iter().copied().collect();
        let mut hit = BigRational::zero();
        for &x in &distinct {
            hit += &half_eps + h(x);
        }
        let mut sum_h = BigRational::zero();
        for &x in sample {
            sum_h += h(x);
        }
        let d = BigRational::from_integer(BigInt::from(self.d as i64));
        let m = BigRational::from_integer(BigInt::from(sample.len() as i64));
        Ok((&self.base - BigRational::from_integer(BigInt::from(2)) * hit) / d
            + half_eps
            + sum_h / m)
    }

    pub fn exceeds(&self, sample: &[usize]) -> Result<bool> {
        Ok(self.deviation(sample)? > big(self.epsilon))
    }
}

/// Domain size (m+3)^2 * ceil(e^(eps*m)) at which the adversarial family
/// defeats sample size m.
pub fn gc_adversary_domain(epsilon: Rat, m: u64) -> Result<u64> {
    require_positive("epsilon", &epsilon)?;
    if m == 0 {
        return Err(Error::InvalidParam("sample size must be >= 1".into()));
    }
    let em = rat_to_f64(&epsilon) * m as f64;
    if em > 40.0 {
        return Err(Error::InvalidParam(format!(
            "e^(eps*m) with eps*m = {em:.1} is out of range"
        )));
    }
    Ok((m + 3) * (m + 3) * em.exp().ceil() as u64)
}

/// Aggregator output on a class whose values all lie in {lo, hi}: at every
/// threshold the two levels never band to opposite bits, so each subgame's
/// answer is forced and the prediction ignores prefix and query alike.
/// Errors if some threshold does split the pair.
pub fn two_value_aggregate(lo: Rat, hi: Rat, cfg: &AggregatorConfig) -> Result<Rat> {
    if lo >= hi || !is_unit_interval(&lo) || !is_unit_interval(&hi) {
        return Err(Error::InvalidParam(format!(
            "need 0 <= lo < hi <= 1, got lo={} hi={}",
            format_rat(&lo),
            format_rat(&hi)
        )));
    }
    let mut count = 0i64;
    for r in cfg.thresholds() {
        let mut has0 = false;
        let mut has1 = false;
        for t in [psi(lo, r, cfg.gamma())?, psi(hi, r, cfg.gamma())?] {
            match t.as_bit() {
                Some(true) => has1 = true,
                Some(false) => has0 = true,
                None => {}
            }
        }
        if has0 && has1 {
            return Err(Error::InvalidParam(format!(
                "levels {} and {} band to opposite bits at threshold {}; run the full aggregator",
                format_rat(&lo),
                format_rat(&hi),
                format_rat(&r)
            )));
        }
        if has1 {
            count += 1;
        }
    }
    Ok(cfg.tau() * rat(count, 1))
}

/// Exact-mean Monte Carlo estimate.
#[derive(Clone, Copy, Debug)]
pub struct McEstimate {
    pub mean: Rat,
    pub stderr: f64,
    pub trials: u64,
}

/// Random-target error of the aggregator on the two-level class over `n`
/// points: each trial draws m uniform points, labels the distinct ones
/// i.i.d. from {0, 2(gamma-kappa)}, and scores |prediction - label(query)|.
/// Averaging over random targets lower-bounds the worst target.
pub fn lower_bound_two_value_mc(
    n: usize,
    gamma: Rat,
    kappa: Rat,
    cfg: &AggregatorConfig,
    m: usize,
    trials: u64,
    seed: u64,
    jobs: usize,
) -> Result<McEstimate> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidParam("need a domain and at least one round".into()));
    }
    check_trials(trials)?;
    let hi = two_value_level(gamma, kappa)?;
    let pred = two_value_aggregate(Rat::zero(), hi, cfg)?;
    let sampler = DiscreteDistribution::uniform(n).sampler();
    let worker = |range: Range<u64>| -> (Rat, Rat) {
        let mut sum = Rat::zero();
        let mut sumsq = Rat::zero();
        for k in range {
            let mut rng = ChaCha12Rng::seed_from_u64(seed);
            rng.set_stream(k);
            let xs: Vec<usize> = (0..m).map(|_| sampler.draw(&mut rng)).collect();
            let distinct: BTreeSet<usize> = xs.iter().copied().collect();
            let mut label_hi = HashMap::new();
            for &x in &distinct {
                label_hi.insert(x, rng.next_u32() >> 31 == 1);
            }
            let y = if label_hi[&xs[m - 1]] { hi } else { Rat::zero() };
            let err = (pred - y).abs();
            sum += err;
            sumsq += err * err;
        }
        (sum, sumsq)
    };
    let parts: Vec<(Rat, Rat)> = std::thread::scope(|sc| {
        let handles: Vec<_> =
            shard_ranges(trials, jobs).into_iter().map(|r| sc.spawn(move || worker(r))).collect();
        handles.into_iter().map(|h| h.join().expect("simulation worker panicked")).collect()
    });
    let mut sum = Rat::zero();
    let mut sumsq = Rat::zero();
    for (s, sq) in parts {
        sum += s;
        sumsq += sq;
    }
    Ok(McEstimate {
        mean: sum / Rat::from_integer(trials as i64),
        stderr: mc_stderr(&sum, &sumsq, trials).unwrap_or(0.0),
        trials,
    })
}

/// Sizing of the cover-then-validate learner: `n1` training blocks of
/// 2k - 1 examples each, then `n2` validation examples.
#[derive(Clone, Copy, Debug)]
pub struct LearnerParams {
    pub epsilon: Rat,
    pub delta: Rat,
    pub gamma: Rat,
    pub d: usize,
    pub c: u32,
    pub k: u64,
    pub n1: u64,
    pub n2: u64,
}

impl LearnerParams {
    pub fn block_len(&self) -> u64 {
        2 * self.k - 1
    }

    pub fn total(&self) -> u64 {
        self.n1 * self.block_len() + self.n2
    }
}

/// Fill in k, n1, n2 from the accuracy/confidence targets. `d` is the
/// dimension driving the cover-size exponent and `c` the leading constant
/// of the per-block sample size (8 matches the analysis; smaller values
/// trade guarantees for speed).
pub fn learner_params(
    epsilon: Rat,
    delta: Rat,
    gamma: Rat,
    d: usize,
    c: u32,
) -> Result<LearnerParams> {
    require_positive("gamma", &gamma)?;
    if epsilon < rat(9, 1) * gamma {
        return Err(Error::InvalidParam(format!(
            "need epsilon >= 9*gamma, got epsilon={} gamma={}",
            format_rat(&epsilon),
            format_rat(&gamma)
        )));
    }
    if !(delta.is_positive() && delta < Rat::one()) {
        return Err(Error::InvalidParam(format!(
            "delta must be in (0, 1), got {}",
            format_rat(&delta)
        )));
    }
    if d == 0 || c == 0 {
        return Err(Error::InvalidParam("need d >= 1 and c >= 1".into()));
    }
    let g = rat_to_f64(&gamma);
    let lg = (1.0 / g).ln();
    let main = (c as f64 / (g * g)) * (d as f64 * lg * lg + lg);
    let side = (1.0 / (4.0 * g * g)) * (2.0 / g).ln();
    let k = (main.ceil() as u64).max(side.floor() as u64 + 1).max(1);
    let e = rat_to_f64(&epsilon);
    let dl = rat_to_f64(&delta);
    let n1 = (((e / g) * (2.0 / dl).ln()).ceil() as u64).max(1);
    let n2 = ((2.0 / (g * g)) * (4.0 * n1 as f64 / dl).ln()).floor() as u64 + 1;
    Ok(LearnerParams { epsilon, delta, gamma, d, c, k, n1, n2 })
}

fn cover_radius(epsilon: Rat, gamma: Rat) -> Result<Rat> {
    require_positive("gamma", &gamma)?;
    let radius = epsilon - rat(9, 1) * gamma;
    if radius.is_negative() {
        return Err(Error::InvalidParam(format!(
            "cover radius epsilon - 9*gamma = {} is negative",
            format_rat(&radius)
        )));
    }
    Ok(radius)
}

/// One-shot permutation-stable predictor behind the learner: restrict the
/// class to the 2k sample points, take the lexicographically least minimum
/// proper cover at radius epsilon - 9*gamma, pick the cover row closest to
/// the first k labels, and answer with its value at the last point.
pub fn cover_learner_q(
    f: &FunctionClass,
    sample: &[(usize, Value)],
    epsilon: Rat,
    gamma: Rat,
) -> Result<Value> {
    let len = sample.len();
    if len < 2 || len % 2 != 0 {
        return Err(Error::InvalidParam(format!("need an even sample of >= 2 points, got {len}")));
    }
    let k = len / 2;
    let radius = cover_radius(epsilon, gamma)?;
    let xs: Vec<usize> = sample.iter().map(|&(x, _)| x).collect();
    let grid = restrict(f, &xs)?;
    let witness = packing::cover_proper_exact(&grid, radius)?.witness;
    let best = witness
        .into_iter()
        .min_by_key(|&c| {
            let mut s = Rat::zero();
            for i in 0..k {
                s += (grid[c][i] - sample[i].1).abs();
            }
            (s, c)
        })
        .expect("cover of a nonempty class is nonempty");
    Ok(grid[best][len - 1])
}

/// `cover_learner_q` evaluated at every domain point at once, sharing the
/// restriction sums across queries. `block` has odd length 2k - 1; the
/// hypothesis at point b equals running the one-shot predictor on the block
/// extended with b as the unlabeled final point.
pub fn block_hypothesis(
    f: &FunctionClass,
    block: &[(usize, Value)],
    epsilon: Rat,
    gamma: Rat,
) -> Result<Vec<Value>> {
    let len = block.len();
    if len == 0 || len % 2 != 1 {
        return Err(Error::InvalidParam(format!("need an odd block of >= 1 points, got {len}")));
    }
    let k = (len + 1) / 2;
    let radius = cover_radius(epsilon, gamma)?;
    for &(x, _) in block {
        f.check_point(x)?;
    }
    let n_f = f.n_functions();
    guard::check("cover learner rows", n_f as u128, guard::MAX_PACK_EXACT_ROWS as u128)?;
    let mut sel = vec![Rat::zero(); n_f];
    for (a, s) in sel.iter_mut().enumerate() {
        for &(x, y) in &block[..k] {
            *s += (f.value(a, x) - y).abs();
        }
    }
    let mut base = vec![vec![Rat::zero(); n_f]; n_f];
    for a in 0..n_f {
        for b in a + 1..n_f {
            let mut s = Rat::zero();
            for &(x, _) in block {
                s += (f.value(a, x) - f.value(b, x)).abs();
            }
            base[a][b] = s;
            base[b][a] = s;
        }
    }
    let two_k = rat(2 * k as i64, 1);
    let mut h = Vec::with_capacity(f.n_points());
    let mut dist = vec![vec![Rat::zero(); n_f]; n_f];
    for q in 0..f.n_points() {
        for a in 0..n_f {
            for b in a + 1..n_f {
                let d = (base[a][b] + (f.value(a, q) - f.value(b, q)).abs()) / two_k;
                dist[a][b] = d;
                dist[b][a] = d;
            }
        }
        let witness = packing::cover_indices(&dist, radius);
        let best = witness
            .into_iter()
            .min_by_key(|&c| (sel[c], c))
            .expect("cover of a nonempty class is nonempty");
        h.push(f.value(best, q));
    }
    Ok(h)
}

/// Blocked learner with validation: fit one hypothesis per block of
/// 2k - 1 examples, then keep the one with the least empirical error on
/// the n2-example validation tail. Uses the first `total()` examples.
pub fn agnostic_learn(
    f: &FunctionClass,
    sample: &[(usize, Value)],
    params: &LearnerParams,
) -> Result<Vec<Value>> {
    let need = params.total() as usize;
    if sample.len() < need {
        return Err(Error::InsufficientSample { needed: need, got: sample.len() });
    }
    let bl = params.block_len() as usize;
    let mut best: Option<(Rat, usize, Vec<Value>)> = None;
    let val = &sample[params.n1 as usize * bl..need];
    for j in 0..params.n1 as usize {
        let h = block_hypothesis(f, &sample[j * bl..(j + 1) * bl], params.epsilon, params.gamma)?;
        let mut emp = Rat::zero();
        for &(x, y) in val {
            emp += (h[x] - y).abs();
        }
        if best.as_ref().map_or(true, |(b, _, _)| emp < *b) {
            best = Some((emp, j, h));
        }
    }
    Ok(best.expect("n1 >= 1 blocks").2)
}

/// Index and empirical mean absolute error of the best row on the sample;
/// ties go to the lowest index.
pub fn erm_learner(f: &FunctionClass, sample: &[(usize, Value)]) -> Result<(usize, Rat)> {
    if sample.is_empty() {
        return Err(Error::InvalidParam("need a nonempty sample".into()));
    }
    for &(x, _) in sample {
        f.check_point(x)?;
    }
    let mut best = 0usize;
    let mut best_err = Rat::zero();
    for a in 0..f.n_functions() {
        let mut s = Rat::zero();
        for &(x, y) in sample {
            s += (f.value(a, x) - y).abs();
        }
        if a == 0 || s < best_err {
            best = a;
            best_err = s;
        }
    }
    Ok((best, best_err / rat(sample.len() as i64, 1)))
}

/// Exact risk of a pointwise hypothesis under a joint law.
pub fn eval_error(h: &[Value], p: &JointSample) -> Result<Rat> {
    let mut total = Rat::zero();
    for &(x, y, w) in p.triples() {
        if x >= h.len() {
            return Err(Error::IndexOutOfRange { what: "point", index: x, size: h.len() });
        }
        total += w * (h[x] - y).abs();
    }
    Ok(total)
}

/// Least exact risk over the class and the row attaining it.
pub fn class_inf_error(f: &FunctionClass, p: &JointSample) -> Result<(Rat, usize)> {
    let mut best = (Rat::zero(), 0usize);
    for a in 0..f.n_functions() {
        let er = eval_error(&f.row(a), p)?;
        if a == 0 || er < best.0 {
            best = (er, a);
        }
    }
    Ok(best)
}

fn draw_labeled(p: &JointSample, n: u64, rng: &mut ChaCha12Rng) -> LabeledSample {
    let sampler = p.sampler();
    let trips = p.triples();
    (0..n)
        .map(|_| {
            let t = sampler.draw(rng);
            (trips[t].0, trips[t].1)
        })
        .collect()
}

/// One seeded end-to-end run of the blocked learner: draw `total()`
/// examples from the joint law, learn, and report (risk of the hypothesis,
/// least risk in the class).
pub fn agnostic_trial(
    f: &FunctionClass,
    p: &JointSample,
    params: &LearnerParams,
    seed: u64,
    stream: u64,
) -> Result<(Rat, Rat)> {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let sample = draw_labeled(p, params.total(), &mut rng);
    let h = agnostic_learn(f, &sample, params)?;
    let er = eval_error(&h, p)?;
    let (inf, _) = class_inf_error(f, p)?;
    Ok((er, inf))
}

/// One seeded end-to-end run of empirical risk minimization over `m`
/// examples, accumulating per-row sums instead of materializing the sample.
pub fn erm_trial(
    f: &FunctionClass,
    p: &JointSample,
    m: u64,
    seed: u64,
    stream: u64,
) -> Result<(Rat, Rat)> {
    if m == 0 {
        return Err(Error::InvalidParam("need at least one draw".into()));
    }
    if p.max_point() >= f.n_points() {
        return Err(Error::IndexOutOfRange {
            what: "point",
            index: p.max_point(),
            size: f.n_points(),
        });
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let sampler = p.sampler();
    let trips = p.triples();
    let n_f = f.n_functions();
    let mut acc = vec![Rat::zero(); n_f];
    for _ in 0..m {
        let (x, y, _) = trips[sampler.draw(&mut rng)];
        for (a, s) in acc.iter_mut().enumerate() {
            *s += (f.value(a, x) - y).abs();
        }
    }
    let mut best = 0usize;
    for a in 1..n_f {
        if acc[a] < acc[best] {
            best = a;
        }
    }
    let er = eval_error(&f.row(best), p)?;
    let (inf, _) = class_inf_error(f, p)?;
    Ok((er, inf))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{
        gc_value_pair, gen_band_class, gen_binary_cube, gen_random, gen_two_value, BandLevels,
    };
    use crate::value::rat;

    fn aggregate(gamma: Rat, tau: Rat) -> Predictor {
        Predictor::Aggregate(AggregatorConfig::new(gamma, tau).unwrap())
    }

    #[test]
    fn exhaustive_constant_class_errs_by_one_pitch() {
        // Single constant target 1/2: the 1/2-threshold subgame lands in the
        // dead zone and votes low, so the answer is 1/4 at every sequence.
        let f = FunctionClass::from_rows(
            FunctionClass::default_domain(2),
            &[vec![rat(1, 2), rat(1, 2)]],
        )
        .unwrap();
        let d = DiscreteDistribution::uniform(2);
        let res = game_exhaustive(&f, &d, 2, &aggregate(rat(1, 10), rat(1, 4))).unwrap();
        assert_eq!(res.per_target.len(), 1);
        assert_eq!(res.worst_error, rat(1, 4));
        assert_eq!(res.trials, 4);
        assert!(res.per_target[0].stderr.is_none());
    }

    #[test]
    fn exhaustive_matches_unmemoized_replay() {
        let f = gen_random(4, 6, 4, 3).unwrap();
        let d = DiscreteDistribution::uniform(4);
        let pred = aggregate(rat(1, 10), rat(1, 5));
        let res = game_exhaustive(&f, &d, 3, &pred).unwrap();
        // replay target 2 with raw in-order prefixes, no dedup, no memo
        let t = 2usize;
        let mut total = Rat::zero();
        for a in 0..4usize {
            for b in 0..4usize {
                for q in 0..4usize {
                    let prefix: LabeledSample =
                        vec![(a, f.value(t, a)), (b, f.value(t, b))];
                    let p = pred.predict(&f, &prefix, q).unwrap();
                    total += (p - f.value(t, q)).abs() * rat(1, 64);
                }
            }
        }
        assert_eq!(res.per_target[t].mean, total);
    }

    #[test]
    fn mc_tracks_exhaustive_and_ignores_job_count() {
        let f = gen_binary_cube(2).unwrap();
        let d = DiscreteDistribution::uniform(2);
        let pred = aggregate(rat(1, 10), rat(1, 5));
        let exact = game_exhaustive(&f, &d, 3, &pred).unwrap();
        let mc1 = game_mc(&f, &d, 3, &pred, 4000, 11, 1).unwrap();
        let mc3 = game_mc(&f, &d, 3, &pred, 4000, 11, 3).unwrap();
        for (a, b) in mc1.per_target.iter().zip(&mc3.per_target) {
            assert_eq!(a.mean, b.mean);
            assert_eq!(a.stderr, b.stderr);
        }
        assert_eq!(mc1.worst_target, mc3.worst_target);
        for (e, m) in exact.per_target.iter().zip(&mc1.per_target) {
            let gap = (rat_to_f64(&e.mean) - rat_to_f64(&m.mean)).abs();
            assert!(gap <= 4.0 * m.stderr.unwrap() + 0.02, "gap {gap}");
        }
    }

    #[test]
    fn permutation_mistakes_stay_under_half_on_a_chain() {
        use Ternary::{One, Star, Zero};
        let g = TernaryClass::new(
            FunctionClass::default_domain(2),
            vec![vec![Zero, Zero], vec![Zero, One], vec![One, One]],
        )
        .unwrap();
        for t in 0..3 {
            let p = cwdc_permutation_exhaustive(&g, &[0, 1], t).unwrap();
            assert!(p <= rat(1, 2), "target {t} mistook {}", format_rat(&p));
        }
        // all-star target never scores a mistake
        let g2 = TernaryClass::new(
            FunctionClass::default_domain(2),
            vec![vec![Star, Star], vec![Zero, One]],
        )
        .unwrap();
        assert_eq!(cwdc_permutation_exhaustive(&g2, &[0, 1], 0).unwrap(), rat(0, 1));
    }

    #[test]
    fn two_value_mirror_matches_aggregator() {
        for (gamma, kappa, tau) in [
            (rat(1, 5), rat(1, 50), rat(1, 20)),
            (rat(1, 10), rat(1, 40), rat(1, 10)),
        ] {
            let f = gen_two_value(3, gamma, kappa).unwrap();
            let cfg = AggregatorConfig::new(gamma, tau).unwrap();
            let hi = two_value_level(gamma, kappa).unwrap();
            let expect = two_value_aggregate(Rat::zero(), hi, &cfg).unwrap();
            for t in 0..f.n_functions() {
                let mut prefixes: Vec<Vec<usize>> = vec![vec![]];
                for len in 1..=2usize {
                    for mask in 0..3usize.pow(len as u32) {
                        let mut v = Vec::new();
                        let mut m = mask;
                        for _ in 0..len {
                            v.push(m % 3);
                            m /= 3;
                        }
                        prefixes.push(v);
                    }
                }
                for pts in prefixes {
                    let prefix: LabeledSample =
                        pts.iter().map(|&x| (x, f.value(t, x))).collect();
                    for q in 0..3 {
                        let out = aggregate_predict(&f, &cfg, &prefix, q).unwrap();
                        assert_eq!(out.prediction, expect, "t={t} pts={pts:?} q={q}");
                    }
                }
            }
        }
    }

    #[test]
    fn two_value_aggregate_pinned_and_split_pair_rejected() {
        let cfg = AggregatorConfig::new(rat(1, 5), rat(1, 20)).unwrap();
        assert_eq!(two_value_aggregate(rat(0, 1), rat(9, 25), &cfg).unwrap(), rat(3, 20));
        // a wide pair splits: one threshold sees 0 and 1 simultaneously
        let wide = AggregatorConfig::new(rat(1, 5), rat(1, 4)).unwrap();
        assert!(two_value_aggregate(rat(0, 1), rat(1, 2), &wide).is_err());
    }

    #[test]
    fn two_value_lower_bound_beats_target_gap() {
        let cfg = AggregatorConfig::new(rat(1, 5), rat(1, 20)).unwrap();
        let est =
            lower_bound_two_value_mc(50, rat(1, 5), rat(1, 50), &cfg, 10, 3000, 5, 1).unwrap();
        // true mean is 0.18; the claimed gap is (1/5 - 1/50)(1 - 9/50) = 0.1476
        assert!(est.mean > rat(369, 2500), "mean {}", format_rat(&est.mean));
        assert!(est.stderr > 0.0 && est.stderr < 0.01);
        let again =
            lower_bound_two_value_mc(50, rat(1, 5), rat(1, 50), &cfg, 10, 3000, 5, 4).unwrap();
        assert_eq!(est.mean, again.mean);
    }

    #[test]
    fn deviation_reports_exact_band_behaviour() {
        let f = FunctionClass::from_rows(
            FunctionClass::default_domain(2),
            &[vec![rat(1, 3), rat(1, 3)]],
        )
        .unwrap();
        let d = DiscreteDistribution::uniform(2);
        let rep = gc_deviation_exhaustive(&f, &d, 2, &[rat(1, 10)]).unwrap();
        assert_eq!(rep.max_deviation, rat(0, 1));
        assert_eq!(rep.per_epsilon[0].probability, rat(0, 1));

        let band = gen_band_class(rat(2, 5), 4, BandLevels::Two).unwrap();
        let rep = gc_deviation_exhaustive(&band, &d4(), 2, &[rat(2, 5), rat(1, 5)]).unwrap();
        assert_eq!(rep.per_epsilon[0].probability, rat(0, 1));
        assert!(rep.max_deviation < rat(2, 5));
        assert!(rep.per_epsilon[1].probability > rat(0, 1));
    }

    fn d4() -> DiscreteDistribution {
        DiscreteDistribution::uniform(4)
    }

    #[test]
    fn deviation_mc_tracks_exhaustive() {
        let band = gen_band_class(rat(2, 5), 4, BandLevels::Two).unwrap();
        let exact = gc_deviation_exhaustive(&band, &d4(), 2, &[rat(1, 5)]).unwrap();
        let mc1 = gc_deviation_mc(&band, &d4(), 2, &[rat(1, 5)], 3000, 9, 1).unwrap();
        let mc4 = gc_deviation_mc(&band, &d4(), 2, &[rat(1, 5)], 3000, 9, 4).unwrap();
        assert_eq!(mc1.per_epsilon[0].probability, mc4.per_epsilon[0].probability);
        assert_eq!(mc1.max_deviation, mc4.max_deviation);
        let gap = (rat_to_f64(&exact.per_epsilon[0].probability)
            - rat_to_f64(&mc1.per_epsilon[0].probability))
        .abs();
        assert!(gap <= 4.0 * mc1.per_epsilon[0].stderr.unwrap() + 0.02, "gap {gap}");
        assert!(mc1.max_deviation <= exact.max_deviation);
    }

    #[test]
    fn adversary_matches_direct_recomputation() {
        let eps = rat(1, 5);
        let d = gc_adversary_domain(eps, 2).unwrap();
        assert_eq!(d, 50);
        let adv = GcAdversary::new(eps, d as usize).unwrap();
        for sample in [vec![0, 1], vec![0, 0], vec![7, 41], vec![49, 49]] {
            // direct: build the adversarial member's values and average
            let distinct: BTreeSet<usize> = sample.iter().copied().collect();
            let mut mean = BigRational::zero();
            for i in 0..d as usize {
                let (lo, hi) = gc_value_pair(eps, i + 1).unwrap();
                mean += big(if distinct.contains(&i) { lo } else { hi });
            }
            mean /= BigRational::from_integer(BigInt::from(d as i64));
            let mut emp = BigRational::zero();
            for &x in &sample {
                emp += big(gc_value_pair(eps, x + 1).unwrap().0);
            }
            emp /= BigRational::from_integer(BigInt::from(sample.len() as i64));
            let dev = adv.deviation(&sample).unwrap();
            assert_eq!(dev, mean - emp);
            assert!(adv.exceeds(&sample).unwrap(), "sample {sample:?}");
        }
        assert!(adv.deviation(&[]).is_err());
        assert!(adv.deviation(&[50]).is_err());
    }

    #[test]
    fn learner_params_pinned_and_monotone() {
        let p =
            learner_params(rat(1, 2), rat(1, 2), rat(1, 27), 1, 8).unwrap();
        assert_eq!((p.k, p.n1, p.n2), (82572, 19, 7325));
        assert_eq!(p.total(), 3_145_042);
        let finer = learner_params(rat(1, 2), rat(1, 2), rat(1, 40), 1, 8).unwrap();
        assert!(finer.k > p.k);
        let surer = learner_params(rat(1, 2), rat(1, 4), rat(1, 27), 1, 8).unwrap();
        assert!(surer.n1 >= p.n1 && surer.n2 > p.n2);
        assert!(learner_params(rat(1, 2), rat(1, 2), rat(1, 10), 1, 8).is_err());
        assert!(learner_params(rat(1, 2), Rat::one(), rat(1, 27), 1, 8).is_err());
    }

    #[test]
    fn block_hypothesis_equals_one_shot_predictor() {
        for seed in 0..6u64 {
            let f = gen_random(3, 5, 4, seed).unwrap();
            let mut rng = ChaCha12Rng::seed_from_u64(seed ^ 77);
            let block: LabeledSample = (0..3)
                .map(|_| {
                    let x = (rng.next_u32() % 3) as usize;
                    let y = rat((rng.next_u32() % 5) as i64, 4);
                    (x, y)
                })
                .collect();
            for (eps, gamma) in [(rat(1, 2), rat(1, 20)), (rat(9, 20), rat(1, 20))] {
                let h = block_hypothesis(&f, &block, eps, gamma).unwrap();
                for q in 0..3usize {
                    let mut ext = block.clone();
                    ext.push((q, Rat::zero()));
                    assert_eq!(
                        h[q],
                        cover_learner_q(&f, &ext, eps, gamma).unwrap(),
                        "seed {seed} q {q}"
                    );
                }
            }
        }
    }

    #[test]
    fn cover_learner_validates_shape() {
        let f = gen_binary_cube(2).unwrap();
        let odd: LabeledSample = vec![(0, Rat::zero())];
        assert!(cover_learner_q(&f, &odd, rat(1, 2), rat(1, 20)).is_err());
        let even: LabeledSample = vec![(0, Rat::zero()), (1, Rat::zero())];
        assert!(block_hypothesis(&f, &even, rat(1, 2), rat(1, 20)).is_err());
        // radius would be negative
        assert!(cover_learner_q(&f, &even, rat(1, 10), rat(1, 20)).is_err());
        // singleton class answers with its own value
        let single = FunctionClass::from_rows(
            FunctionClass::default_domain(2),
            &[vec![rat(1, 4), rat(3, 4)]],
        )
        .unwrap();
        assert_eq!(cover_learner_q(&single, &even, rat(1, 2), rat(1, 20)).unwrap(), rat(3, 4));
    }

    #[test]
    fn agnostic_learner_recovers_realizable_law() {
        let f = FunctionClass::from_rows(
            FunctionClass::default_domain(2),
            &[vec![rat(0, 1), rat(0, 1)], vec![rat(1, 1), rat(1, 1)]],
        )
        .unwrap();
        let p = JointSample::new(vec![
            (0, rat(0, 1), rat(1, 2)),
            (1, rat(0, 1), rat(1, 2)),
        ])
        .unwrap();
        let params = LearnerParams {
            epsilon: rat(1, 2),
            delta: rat(1, 2),
            gamma: rat(1, 20),
            d: 1,
            c: 1,
            k: 3,
            n1: 2,
            n2: 4,
        };
        assert_eq!(params.total(), 14);
        let (er, inf) = agnostic_trial(&f, &p, &params, 41, 0).unwrap();
        assert_eq!(er, rat(0, 1));
        assert_eq!(inf, rat(0, 1));
        let short: LabeledSample = vec![(0, Rat::zero()); 5];
        match agnostic_learn(&f, &short, &params) {
            Err(Error::InsufficientSample { needed, got }) => {
                assert_eq!((needed, got), (14, 5));
            }
            other => panic!("expected a sample-size error, got {other:?}"),
        }
    }

    #[test]
    fn erm_picks_the_empirical_minimizer() {
        let f = FunctionClass::from_rows(
            FunctionClass::default_domain(2),
            &[vec![rat(0, 1), rat(0, 1)], vec![rat(1, 1), rat(1, 1)]],
        )
        .unwrap();
        let sample: LabeledSample =
            vec![(0, rat(0, 1)), (0, rat(1, 1)), (1, rat(0, 1))];
        assert_eq!(erm_learner(&f, &sample).unwrap(), (0, rat(1, 3)));

        let p = JointSample::new(vec![
            (0, rat(0, 1), rat(7, 16)),
            (1, rat(0, 1), rat(7, 16)),
            (0, rat(1, 1), rat(1, 16)),
            (1, rat(1, 1), rat(1, 16)),
        ])
        .unwrap();
        assert_eq!(class_inf_error(&f, &p).unwrap(), (rat(1, 8), 0));
        assert_eq!(eval_error(&[rat(1, 2), rat(1, 2)], &p).unwrap(), rat(1, 2));
        let (er, inf) = erm_trial(&f, &p, 200, 13, 0).unwrap();
        assert_eq!(er, rat(1, 8));
        assert_eq!(inf, rat(1, 8));
    }
}
