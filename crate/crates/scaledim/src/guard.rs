//! Cost guards for the exponential searches. Every limit below is a ceiling
//! on work we will attempt without being asked twice; setting the override
//! environment variable to a non-empty value other than "0" lifts all of
//! them for one process.

pub const OVERRIDE_ENV: &str = "SCALEDIM_GUARD_OVERRIDE";

/// Dimension searches enumerate point subsets: keep domains small.
pub const MAX_DIM_POINTS: usize = 12;
/// Dimension searches scan every row per candidate subset.
pub const MAX_DIM_ROWS: usize = 4096;
/// Exact packing/cover search is a branch-and-bound over row subsets.
pub const MAX_PACK_EXACT_ROWS: usize = 64;
/// Greedy packing is quadratic in the row count.
pub const MAX_PACK_GREEDY_ROWS: usize = 2000;
/// Exhaustive game evaluation enumerates |domain|^m sequences.
pub const MAX_GAME_SEQUENCES: u128 = 1_000_000;
/// Exhaustive permutation evaluation enumerates m! orderings (m <= 8).
pub const MAX_GAME_PERMUTATIONS: u128 = 40_320;
/// Generators that emit every sign pattern produce 2^n (or 3^n) rows.
pub const MAX_GEN_ROWS: u128 = 65_536;

pub fn overridden() -> bool {
    std::env::var_os(OVERRIDE_ENV).is_some_and(|v| !v.is_empty() && v != "0")
}

/// Reject work above `limit` unless the override variable is set.
pub fn check(what: &'static str, value: u128, limit: u128) -> crate::Result<()> {
    if value > limit && !overridden() {
        return Err(crate::Error::GuardExceeded { what, value, limit });
    }
    Ok(())
}
