//! Exact rational scalars. Everything that decides a branch anywhere in the
//! workbench (threshold comparisons, packing separations, expected errors)
//! is computed on `Rat`, never on floats. Floats appear only in the
//! log-domain bound evaluators and in Monte Carlo standard errors.

use crate::{Error, Result};
use num::rational::Ratio;
use num::{One, Signed, Zero};

/// Exact rational scalar.
pub type Rat = Ratio<i64>;

/// A function value; the class constructors enforce membership in [0, 1].
pub type Value = Rat;

/// Shorthand constructor. Panics on a zero denominator, like `Ratio::new`.
pub fn rat(num: i64, den: i64) -> Rat {
    Ratio::new(num, den)
}

pub fn is_unit_interval(x: &Rat) -> bool {
    !x.is_negative() && *x <= Rat::one()
}

/// Parse "p/q" (or a bare integer "p") into an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let mk_err = || Error::Format(format!("expected rational like 3/10, got {s:?}"));
    if let Some((p, q)) = s.split_once('/') {
        let num: i64 = p.trim().parse().map_err(|_| mk_err())?;
        let den: i64 = q.trim().parse().map_err(|_| mk_err())?;
        if den == 0 {
            return Err(Error::InvalidParam(format!("zero denominator in {s:?}")));
        }
        Ok(Ratio::new(num, den))
    } else {
        let num: i64 = s.parse().map_err(|_| mk_err())?;
        Ok(Ratio::from_integer(num))
    }
}

/// Render as "p/q", or "p" when integral. Inverse of `parse_rat`.
pub fn format_rat(x: &Rat) -> String {
    if x.is_integer() {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Decimal rendering for convenience columns; exact columns sit next to it.
pub fn rat_to_f64(x: &Rat) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

/// Smallest integer >= x, as i64.
pub fn rat_ceil(x: &Rat) -> i64 {
    x.ceil().to_integer()
}

/// Largest integer <= x, as i64.
pub fn rat_floor(x: &Rat) -> i64 {
    x.floor().to_integer()
}

pub fn require_positive(name: &str, x: &Rat) -> Result<()> {
    if *x <= Rat::zero() {
        return Err(Error::InvalidParam(format!("{name} must be > 0, got {}", format_rat(x))));
    }
    Ok(())
}
