//! End-to-end acceptance: every checkable claim the library makes about
//! itself, one test per criterion, each printing a single summary line.
//! Run with `--nocapture` to see the lines for passing tests too.

use std::fs;
use std::process::Command;

use scaledim::verify::{run_criterion, CRITERION_COUNT};

const SEED: u64 = 7;
const JOBS: usize = 2;

fn check(id: usize) {
    let r = run_criterion(id, SEED, JOBS).expect("criterion runner failed");
    println!(
        "criterion {:2} {:32} {} ({:.2}s): {}",
        r.id,
        r.name,
        if r.pass { "PASS" } else { "FAIL" },
        r.seconds,
        r.detail
    );
    assert!(r.pass, "criterion {} ({}) failed: {}", r.id, r.name, r.detail);
}

#[test]
fn criterion_01_aggregation_inequality_sweep() {
    check(1);
}

#[test]
fn criterion_02_permutation_mistake_bound() {
    check(2);
}

#[test]
fn criterion_03_square_game_exact_bound() {
    check(3);
}

#[test]
fn criterion_04_cube_game_sampled_bound() {
    check(4);
}

#[test]
fn criterion_05_two_level_error_floor() {
    check(5);
}

#[test]
fn criterion_06_orientation_outdegree_bound() {
    check(6);
}

#[test]
fn criterion_07_dimension_oracle_agreement() {
    check(7);
}

#[test]
fn criterion_08_packing_cover_sandwich() {
    check(8);
}

#[test]
fn criterion_09_packing_growth_bounds() {
    check(9);
}

#[test]
fn criterion_10_cover_transfer_checks() {
    check(10);
}

#[test]
fn criterion_11_inverse_sample_size_guarantee() {
    check(11);
}

#[test]
fn criterion_12_deviation_adversary() {
    check(12);
}

#[test]
fn criterion_13_band_deviation_and_risk() {
    check(13);
}

#[test]
fn criterion_14_blocked_learner_success_rate() {
    check(14);
}

#[test]
fn criterion_15_erm_success_rate() {
    check(15);
}

#[test]
fn criterion_16_verify_all_reproducibility() {
    assert_eq!(CRITERION_COUNT, 15);
    let dir = std::env::temp_dir().join("scaledim-acceptance");
    fs::create_dir_all(&dir).expect("temp dir");
    let out1 = dir.join("verify-run1.csv");
    let out2 = dir.join("verify-run2.csv");
    // identical invocations running concurrently; the result file carries
    // no timing, so the two runs must agree byte for byte
    let spawn = |out: &std::path::Path| {
        Command::new(env!("CARGO_BIN_EXE_scaledim"))
            .args(["verify-all", "--seed", "7", "--jobs", "2", "--out"])
            .arg(out)
            .spawn()
            .expect("spawn verify-all")
    };
    let mut c1 = spawn(&out1);
    let mut c2 = spawn(&out2);
    assert!(c1.wait().expect("wait run 1").success(), "first verify-all run failed");
    assert!(c2.wait().expect("wait run 2").success(), "second verify-all run failed");
    let b1 = fs::read(&out1).expect("read run 1");
    let b2 = fs::read(&out2).expect("read run 2");
    assert!(!b1.is_empty(), "result file is empty");
    assert_eq!(b1, b2, "result files differ between identical runs");
    let text = String::from_utf8(b1).expect("result file is utf-8");
    println!("criterion 16 verify-all-reproducibility PASS: {} bytes", text.len());
    for line in text.lines().skip(1) {
        assert!(line.contains(",pass,"), "criterion line not passing: {line}");
    }
}
