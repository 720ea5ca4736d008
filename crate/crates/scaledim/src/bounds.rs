//! Closed-form bound evaluators: expected-error bounds for the aggregated
//! predictor, packing-number bounds driven by the two scale-sensitive
//! dimensions, tail and sample-size formulas. Everything here is a pure
//! function of its arguments. Results that fit a rational are exact;
//! astronomically large packing bounds are carried in log domain, and the
//! one integral bound is computed in arbitrary precision.

use crate::value::{format_rat, rat_ceil, rat_to_f64, require_positive, Rat};
use crate::{Error, Result};
use num::{BigUint, One, Zero};

/// Non-negative real carried as its natural log, for bounds too large for
/// any fixed-width type. Zero is tracked by flag so that it multiplies
/// correctly.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogNumber {
    ln: f64,
    zero: bool,
}

impl LogNumber {
    pub fn zero() -> Self {
        LogNumber { ln: f64::NEG_INFINITY, zero: true }
    }

    pub fn from_ln(ln: f64) -> Self {
        LogNumber { ln, zero: false }
    }

    pub fn from_value(v: f64) -> Result<Self> {
        if !(v >= 0.0) {
            return Err(Error::InvalidParam(format!("log-domain value must be >= 0, got {v}")));
        }
        if v == 0.0 {
            return Ok(Self::zero());
        }
        Ok(Self::from_ln(v.ln()))
    }

    /// Natural log; negative infinity for zero.
    pub fn ln(&self) -> f64 {
        if self.zero {
            f64::NEG_INFINITY
        } else {
            self.ln
        }
    }

    /// The represented value; overflows to infinity past f64 range.
    pub fn value(&self) -> f64 {
        if self.zero {
            0.0
        } else {
            self.ln.exp()
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.zero || other.zero {
            Self::zero()
        } else {
            Self::from_ln(self.ln + other.ln)
        }
    }

    pub fn le(&self, other: &Self) -> bool {
        self.ln() <= other.ln()
    }
}

fn check_m(m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidParam("sample size m must be >= 1".into()));
    }
    Ok(())
}

/// Expected-error bound for the threshold-aggregated predictor at sample
/// size m, without the resolution term: d/m + gamma.
pub fn prediction_bound_corrected(d: usize, m: usize, gamma: &Rat) -> Result<Rat> {
    check_m(m)?;
    require_positive("gamma", gamma)?;
    Ok(Rat::new(d as i64, m as i64) + gamma)
}

/// Bound for the implemented aggregation at resolution tau:
/// d/m + gamma + 2*tau.
pub fn prediction_bound_aggregate(d: usize, m: usize, gamma: &Rat, tau: &Rat) -> Result<Rat> {
    require_positive("tau", tau)?;
    Ok(prediction_bound_corrected(d, m, gamma)? + tau + tau)
}

/// The looser form of the same bound, with a doubled dimension term:
/// 2d/m + gamma. Weaker than `prediction_bound_corrected`; kept because
/// the downstream sample-size formulas are calibrated to this constant.
pub fn prediction_bound_original(d: usize, m: usize, gamma: &Rat) -> Result<Rat> {
    check_m(m)?;
    require_positive("gamma", gamma)?;
    Ok(Rat::new(2 * d as i64, m as i64) + gamma)
}

/// Sample size at which the prediction error bound drops to alpha:
/// ceil(2d/alpha), or ceil(d/alpha) under the corrected constant.
/// d = 0 falls outside the bound statement; the returned flag marks that
/// the value 1 is a degenerate stand-in.
pub fn m_pred(d: usize, alpha: &Rat, corrected: bool) -> Result<(u64, bool)> {
    require_positive("alpha", alpha)?;
    if *alpha > Rat::one() {
        return Err(Error::InvalidParam(format!(
            "alpha must be <= 1, got {}",
            format_rat(alpha)
        )));
    }
    if d == 0 {
        return Ok((1, true));
    }
    let numer = if corrected { d as i64 } else { 2 * d as i64 };
    Ok((rat_ceil(&(Rat::from_integer(numer) / alpha)) as u64, false))
}

/// Log-domain packing bound (epsilon/(2 alpha)) * (b+1)^(4d/alpha) for a
/// matrix on the 1/b value grid, where d is the anchored dimension of the
/// matrix at scale epsilon/2 - alpha.
pub fn pack_bound_fatv(epsilon: &Rat, alpha: &Rat, b: u32, d: usize) -> Result<LogNumber> {
    require_positive("epsilon", epsilon)?;
    require_positive("alpha", alpha)?;
    if *epsilon >= Rat::one() {
        return Err(Error::InvalidParam(format!(
            "epsilon must be < 1, got {}",
            format_rat(epsilon)
        )));
    }
    if *alpha * Rat::from_integer(4) >= *epsilon {
        return Err(Error::InvalidParam(format!(
            "need alpha < epsilon/4, got alpha={} epsilon={}",
            format_rat(alpha),
            format_rat(epsilon)
        )));
    }
    if b < 1 || d < 1 {
        return Err(Error::InvalidParam("need b >= 1 and d >= 1".into()));
    }
    let lead = rat_to_f64(&(epsilon / (alpha + alpha))).ln();
    let exponent = rat_to_f64(&(Rat::from_integer(4 * d as i64) / alpha));
    Ok(LogNumber::from_ln(lead + exponent * f64::from(b + 1).ln()))
}

/// sum_{i=0}^{d} C(m,i) (1+b)^i, exactly.
pub fn sauer_y(m: u64, d: u64, b: u64) -> Result<BigUint> {
    if d > m || b < 1 {
        return Err(Error::InvalidParam(format!(
            "need m >= d and b >= 1, got m={m} d={d} b={b}"
        )));
    }
    let base = BigUint::from(1 + b);
    let mut comb = BigUint::one();
    let mut pow = BigUint::one();
    let mut sum = BigUint::zero();
    for i in 0..=d {
        sum += &comb * &pow;
        // next C(m, i+1) = C(m, i) * (m - i) / (i + 1), always divisible
        comb = comb * BigUint::from(m - i) / BigUint::from(i + 1);
        pow *= &base;
    }
    Ok(sum)
}

/// Packing bound from the non-anchored dimension: the exact value
/// 2 * b^(3(floor(log2 y) + 1)) with y = sauer_y(m, d, b), paired with the
/// looser closed form 2 * b^(6d log2(2bem/d)) in log domain. Here m is the
/// matrix width, b the value grid, d the dimension at scale
/// epsilon/2 - 2/b.
pub fn pack_bound_fat(epsilon: &Rat, b: u32, m: u64, d: u64) -> Result<(BigUint, LogNumber)> {
    require_positive("epsilon", epsilon)?;
    if Rat::from_integer(i64::from(b)) * epsilon <= Rat::from_integer(4) {
        return Err(Error::InvalidParam(format!(
            "need b > 4/epsilon, got b={b} epsilon={}",
            format_rat(epsilon)
        )));
    }
    if d < 1 || m < d {
        return Err(Error::InvalidParam(format!("need m >= d >= 1, got m={m} d={d}")));
    }
    let y = sauer_y(m, d, u64::from(b))?;
    // floor(log2 y) + 1 is the bit length of y (y >= 1)
    let exponent = 3 * y.bits();
    let exact = BigUint::from(2u32) * BigUint::from(b).pow(exponent as u32);
    let ln_b = f64::from(b).ln();
    let log2_arg = (2.0 * f64::from(b) * std::f64::consts::E * m as f64 / d as f64).log2();
    let loose = LogNumber::from_ln(std::f64::consts::LN_2 + 6.0 * d as f64 * log2_arg * ln_b);
    Ok((exact, loose))
}

/// Two-sided tail bound 2 exp(-2 epsilon^2 m / (b - a)^2) for the mean of
/// m independent draws from [a, b].
pub fn hoeffding_tail(epsilon: &Rat, m: u64, a: &Rat, b: &Rat) -> Result<f64> {
    require_positive("epsilon", epsilon)?;
    if b <= a || m < 1 {
        return Err(Error::InvalidParam(format!(
            "need b > a and m >= 1, got a={} b={} m={m}",
            format_rat(a),
            format_rat(b)
        )));
    }
    let eps = rat_to_f64(epsilon);
    let range = rat_to_f64(&(b - a));
    Ok(2.0 * (-2.0 * eps * eps * m as f64 / (range * range)).exp())
}

/// Smallest sample size certified to push y1 exp(y2 ln(y3 m) - y4 m) down
/// to delta: ceil((2/y4)(y2 ln(2 y2 y3 / y4) + ln(y1/delta))), clamped to
/// at least 1. The guarantee holds for every m at or above the result.
pub fn inverse_sample_size(y1: f64, y2: f64, y3: f64, y4: f64, delta: f64) -> Result<u64> {
    for (name, v) in [("y1", y1), ("y2", y2), ("y4", y4), ("delta", delta)] {
        if !(v > 0.0) || !v.is_finite() {
            return Err(Error::InvalidParam(format!("{name} must be a positive real, got {v}")));
        }
    }
    if !(y3 >= 1.0) || !y3.is_finite() {
        return Err(Error::InvalidParam(format!("y3 must be >= 1, got {y3}")));
    }
    let bound = (2.0 / y4) * (y2 * (2.0 * y2 * y3 / y4).ln() + (y1 / delta).ln());
    Ok(bound.ceil().max(1.0) as u64)
}

fn check_gc_params(epsilon: &Rat, delta: &Rat, d: usize, kappa: &Rat) -> Result<()> {
    require_positive("epsilon", epsilon)?;
    require_positive("delta", delta)?;
    require_positive("kappa", kappa)?;
    if *epsilon > Rat::one() || *delta >= Rat::one() {
        return Err(Error::InvalidParam("need epsilon <= 1 and delta < 1".into()));
    }
    if *kappa * Rat::from_integer(4) >= Rat::one() {
        return Err(Error::InvalidParam(format!(
            "kappa must be < 1/4, got {}",
            format_rat(kappa)
        )));
    }
    if d < 1 {
        return Err(Error::InvalidParam("dimension d must be >= 1".into()));
    }
    Ok(())
}

/// Discretization width used by the uniform-convergence sample sizes:
/// 1 / ceil(1/(kappa epsilon)), an exact unit fraction <= kappa*epsilon.
pub fn gc_alpha(epsilon: &Rat, kappa: &Rat) -> Result<Rat> {
    require_positive("epsilon", epsilon)?;
    require_positive("kappa", kappa)?;
    if *epsilon > Rat::one() || *kappa * Rat::from_integer(4) >= Rat::one() {
        return Err(Error::InvalidParam(format!(
            "need epsilon <= 1 and kappa < 1/4, got epsilon={} kappa={}",
            format_rat(epsilon),
            format_rat(kappa)
        )));
    }
    Ok(Rat::one() / Rat::from_integer(rat_ceil(&(Rat::one() / (kappa * epsilon)))))
}

/// Sufficient sample size for epsilon-uniform convergence with confidence
/// delta, from the non-anchored dimension d at scale epsilon/4 - alpha:
/// (4/a^2)((6d/ln2) ln(7/a) ln((336e/(a ln2)) ln(7/a)) + ln(8/delta)),
/// rounded up, raised when needed to satisfy m > (1/(2a^2)) ln 4.
pub fn gc_sample_fat(epsilon: &Rat, delta: &Rat, d: usize, kappa: &Rat) -> Result<u64> {
    check_gc_params(epsilon, delta, d, kappa)?;
    let a = rat_to_f64(&gc_alpha(epsilon, kappa)?);
    let ln2 = std::f64::consts::LN_2;
    let ln7a = (7.0 / a).ln();
    let inner = (336.0 * std::f64::consts::E / (a * ln2) * ln7a).ln();
    let main = 4.0 / (a * a) * (6.0 * d as f64 / ln2 * ln7a * inner + (8.0 / rat_to_f64(delta)).ln());
    let side = 1.0 / (2.0 * a * a) * 4f64.ln();
    Ok((main.ceil() as u64).max(side.floor() as u64 + 1))
}

/// The companion sufficient size from the anchored dimension d at scale
/// epsilon/4 - alpha: (8d/a^3) ln(6/a) + (1/(2a^2)) ln(8 epsilon/(delta a)),
/// rounded up.
pub fn gc_sample_fatv(epsilon: &Rat, delta: &Rat, d: usize, kappa: &Rat) -> Result<u64> {
    check_gc_params(epsilon, delta, d, kappa)?;
    let a = rat_to_f64(&gc_alpha(epsilon, kappa)?);
    let main = 8.0 * d as f64 / (a * a * a) * (6.0 / a).ln()
        + 1.0 / (2.0 * a * a) * (8.0 * rat_to_f64(epsilon) / (rat_to_f64(delta) * a)).ln();
    Ok(main.ceil().max(1.0) as u64)
}

/// Empirical-risk sample size from the uniform-convergence route: the
/// class is epsilon/2-uniformly convergent at this size, so a minimizer's
/// excess true error is below epsilon. `use_fatv` picks which dimension
/// the caller measured.
pub fn erm_sample(epsilon: &Rat, delta: &Rat, d: usize, kappa: &Rat, use_fatv: bool) -> Result<u64> {
    let half = epsilon / Rat::from_integer(2);
    if use_fatv {
        gc_sample_fatv(&half, delta, d, kappa)
    } else {
        gc_sample_fat(&half, delta, d, kappa)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dims::{fat, fatv};
    use crate::generators::gen_random;
    use crate::packing::packing_exact;
    use crate::value::rat;
    use rand::{Rng, SeedableRng};

    #[test]
    fn log_number_round_trips() {
        for v in [1e-300, 0.37, 1.0, 42.0, 8.5e290] {
            let x = LogNumber::from_value(v).unwrap();
            assert!((x.value() - v).abs() / v < 1e-12);
        }
        let z = LogNumber::zero();
        assert_eq!(z.value(), 0.0);
        assert_eq!(z.ln(), f64::NEG_INFINITY);
        assert_eq!(z.mul(&LogNumber::from_value(5.0).unwrap()).value(), 0.0);
        let p = LogNumber::from_value(3.0).unwrap().mul(&LogNumber::from_value(7.0).unwrap());
        assert!((p.value() - 21.0).abs() < 1e-12);
        assert!(LogNumber::from_value(-1.0).is_err());
        assert!(LogNumber::from_value(2.0).unwrap().le(&LogNumber::from_value(3.0).unwrap()));
    }

    #[test]
    fn prediction_bound_values() {
        assert_eq!(prediction_bound_original(2, 10, &rat(1, 10)).unwrap(), rat(1, 2));
        assert_eq!(prediction_bound_corrected(2, 10, &rat(1, 10)).unwrap(), rat(3, 10));
        assert_eq!(prediction_bound_corrected(0, 1, &rat(1, 10)).unwrap(), rat(1, 10));
        assert_eq!(prediction_bound_original(0, 5, &rat(1, 5)).unwrap(), rat(1, 5));
        assert_eq!(
            prediction_bound_aggregate(2, 10, &rat(1, 10), &rat(1, 50)).unwrap(),
            rat(17, 50)
        );
        assert!(prediction_bound_corrected(2, 0, &rat(1, 10)).is_err());
        assert!(prediction_bound_corrected(2, 10, &rat(0, 1)).is_err());
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(6100);
        for _ in 0..50 {
            let d = rng.gen_range(0..6usize);
            let m = rng.gen_range(1..30usize);
            let g = rat(rng.gen_range(1..10), 10);
            assert!(
                prediction_bound_original(d, m, &g).unwrap()
                    >= prediction_bound_corrected(d, m, &g).unwrap()
            );
        }
    }

    #[test]
    fn m_pred_values() {
        assert_eq!(m_pred(3, &rat(1, 10), false).unwrap(), (60, false));
        assert_eq!(m_pred(3, &rat(1, 10), true).unwrap(), (30, false));
        assert_eq!(m_pred(1, &rat(1, 1), false).unwrap(), (2, false));
        assert_eq!(m_pred(0, &rat(1, 10), false).unwrap(), (1, true));
        assert!(m_pred(3, &rat(0, 1), false).is_err());
        assert!(m_pred(3, &rat(3, 2), false).is_err());
    }

    #[test]
    fn pack_bound_fatv_values_and_cross_check() {
        let bound = pack_bound_fatv(&rat(2, 5), &rat(1, 20), 4, 2).unwrap();
        let expect = 4f64.ln() + 160.0 * 5f64.ln();
        assert!((bound.ln() - expect).abs() < 1e-9);
        let step = pack_bound_fatv(&rat(2, 5), &rat(1, 20), 4, 3).unwrap().ln() - bound.ln();
        assert!((step - 80.0 * 5f64.ln()).abs() < 1e-9);
        assert!(pack_bound_fatv(&rat(2, 5), &rat(1, 10), 4, 2).is_err());
        assert!(pack_bound_fatv(&rat(1, 1), &rat(1, 20), 4, 2).is_err());
        assert!(pack_bound_fatv(&rat(2, 5), &rat(1, 20), 4, 0).is_err());

        // on the 1/b grid, the exact packing number respects the bound
        let (eps, alpha) = (rat(2, 5), rat(1, 20));
        let scale = eps / rat(2, 1) - alpha;
        for seed in 0..12u64 {
            let f = gen_random(4, 12, 3, 6200 + seed).unwrap();
            let (d, _) = fatv(&f, scale).unwrap();
            if d == 0 {
                continue;
            }
            let m = packing_exact(&f.rows(), eps).unwrap().size;
            let bound = pack_bound_fatv(&eps, &alpha, 3, d).unwrap();
            assert!((m as f64).ln() <= bound.ln() + 1e-12, "seed {seed}");
        }
    }

    #[test]
    fn sauer_y_values() {
        assert_eq!(sauer_y(1, 1, 5).unwrap(), BigUint::from(7u32));
        assert_eq!(sauer_y(9, 0, 3).unwrap(), BigUint::one());
        assert_eq!(sauer_y(4, 2, 1).unwrap(), BigUint::from(33u32));
        assert!(sauer_y(2, 3, 5).is_err());
        assert!(sauer_y(2, 1, 0).is_err());
    }

    #[test]
    fn pack_bound_fat_values_and_cross_check() {
        let (exact, loose) = pack_bound_fat(&rat(9, 10), 5, 1, 1).unwrap();
        assert_eq!(exact, BigUint::from(2u32) * BigUint::from(5u32).pow(9));
        let exact_ln = 2f64.ln() + 9.0 * 5f64.ln();
        assert!(exact_ln <= loose.ln() + 1e-9);
        assert!(pack_bound_fat(&rat(1, 2), 8, 3, 1).is_err()); // b = 4/eps not enough
        assert!(pack_bound_fat(&rat(1, 2), 9, 1, 2).is_err()); // m < d

        // exact form stays below the loose closed form across a sweep
        for (eps, b) in [(rat(9, 10), 5u32), (rat(1, 2), 9), (rat(1, 2), 12)] {
            for m in 1..=6u64 {
                for d in 1..=m {
                    let (exact, loose) = pack_bound_fat(&eps, b, m, d).unwrap();
                    let bits = exact.bits() as f64;
                    // ln(exact) < bits * ln 2
                    assert!(bits * std::f64::consts::LN_2 <= loose.ln() + 30.0);
                    let exact_ln = (3 * sauer_y(m, d, u64::from(b)).unwrap().bits()) as f64
                        * f64::from(b).ln()
                        + 2f64.ln();
                    assert!(exact_ln <= loose.ln() + 1e-9, "eps={eps} b={b} m={m} d={d}");
                }
            }
        }

        // on the 1/b grid, the exact packing number respects the exact form
        let eps = rat(1, 2);
        let b = 9u32;
        let scale = eps / rat(2, 1) - rat(2, i64::from(b));
        for seed in 0..12u64 {
            let f = gen_random(4, 14, i64::from(b), 6300 + seed).unwrap();
            let (d, _) = fat(&f, scale).unwrap();
            if d == 0 {
                continue;
            }
            let m_pack = packing_exact(&f.rows(), eps).unwrap().size;
            let (exact, _) = pack_bound_fat(&eps, b, 4, d as u64).unwrap();
            assert!(BigUint::from(m_pack) <= exact, "seed {seed}");
        }
    }

    #[test]
    fn hoeffding_values() {
        let t = hoeffding_tail(&rat(1, 10), 100, &rat(0, 1), &rat(1, 1)).unwrap();
        assert!((t - 2.0 * (-2f64).exp()).abs() < 1e-12);
        let mut prev = f64::INFINITY;
        for m in [1, 10, 100, 1000] {
            let t = hoeffding_tail(&rat(1, 10), m, &rat(0, 1), &rat(1, 1)).unwrap();
            assert!(t < prev);
            prev = t;
        }
        assert!(hoeffding_tail(&rat(1, 10), 5, &rat(1, 1), &rat(1, 1)).is_err());
    }

    #[test]
    fn inverse_sample_size_guarantee() {
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(6400);
        for _ in 0..200 {
            let y1 = rng.gen_range(0.5..20.0);
            let y2 = rng.gen_range(0.1..8.0);
            let y3 = rng.gen_range(1.0..50.0);
            let y4 = rng.gen_range(0.05..2.0);
            let delta = rng.gen_range(0.01..0.9);
            let m = inverse_sample_size(y1, y2, y3, y4, delta).unwrap();
            let lhs = y1 * (y2 * (y3 * m as f64).ln() - y4 * m as f64).exp();
            assert!(lhs <= delta * (1.0 + 1e-9), "lhs={lhs} delta={delta}");
        }
        // shrinking the target never shrinks the requirement
        let a = inverse_sample_size(5.0, 2.0, 3.0, 0.5, 0.1).unwrap();
        let b = inverse_sample_size(5.0, 2.0, 3.0, 0.5, 0.2).unwrap();
        assert!(b <= a);
        // vanishing y2 degenerates to the pure confidence term
        let tiny = inverse_sample_size(5.0, 1e-12, 3.0, 0.5, 0.1).unwrap();
        let pure = ((2.0 / 0.5) * (5.0f64 / 0.1).ln()).ceil() as u64;
        assert!(tiny.abs_diff(pure) <= 1);
        assert!(inverse_sample_size(0.0, 1.0, 1.0, 1.0, 0.1).is_err());
        assert!(inverse_sample_size(1.0, 1.0, 0.5, 1.0, 0.1).is_err());
    }

    #[test]
    fn gc_sample_values() {
        assert_eq!(gc_alpha(&rat(1, 2), &rat(1, 10)).unwrap(), rat(1, 20));
        assert_eq!(gc_alpha(&rat(1, 3), &rat(1, 5)).unwrap(), rat(1, 15));
        assert!(gc_alpha(&rat(1, 2), &rat(1, 4)).is_err());

        // independent literal transcription of both formulas
        let a = 0.05f64;
        let ln2 = std::f64::consts::LN_2;
        let ln7a = (7.0 / a).ln();
        let fat_expect = (4.0 / (a * a)
            * (6.0 / ln2 * ln7a * (336.0 * std::f64::consts::E / (a * ln2) * ln7a).ln()
                + (8.0 / 0.5f64).ln()))
        .ceil() as u64;
        assert_eq!(gc_sample_fat(&rat(1, 2), &rat(1, 2), 1, &rat(1, 10)).unwrap(), fat_expect);
        let fatv_expect = (8.0 / (a * a * a) * (6.0 / a).ln()
            + 1.0 / (2.0 * a * a) * (8.0 * 0.5 / (0.5 * a)).ln())
        .ceil() as u64;
        assert_eq!(gc_sample_fatv(&rat(1, 2), &rat(1, 2), 1, &rat(1, 10)).unwrap(), fatv_expect);

        for f in [gc_sample_fat, gc_sample_fatv] {
            let base = f(&rat(1, 2), &rat(1, 2), 1, &rat(1, 10)).unwrap();
            assert!(f(&rat(1, 2), &rat(1, 2), 2, &rat(1, 10)).unwrap() >= base);
            assert!(f(&rat(1, 2), &rat(1, 4), 1, &rat(1, 10)).unwrap() >= base);
            assert!(f(&rat(1, 2), &rat(1, 2), 0, &rat(1, 10)).is_err());
            assert!(f(&rat(1, 2), &rat(1, 2), 1, &rat(1, 3)).is_err());
        }
        // the side condition keeps the fat-route answer above (1/2a^2) ln 4
        let m = gc_sample_fat(&rat(1, 2), &rat(999, 1000), 1, &rat(1, 10)).unwrap();
        assert!(m as f64 > 1.0 / (2.0 * a * a) * 4f64.ln());
        let e = erm_sample(&rat(1, 2), &rat(1, 2), 1, &rat(1, 10), true).unwrap();
        assert_eq!(e, gc_sample_fatv(&rat(1, 4), &rat(1, 2), 1, &rat(1, 10)).unwrap());
    }
}
