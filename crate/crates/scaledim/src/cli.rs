//! Command-line front end. Every run is a pure function of (arguments,
//! input files, seed): rationals cross the boundary as "p/q", CSV carries
//! numerator/denominator columns next to a decimal convenience column, and
//! nothing time- or host-dependent is ever written to a result file.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use crate::bounds::{self, LogNumber};
use crate::class::{
    csv_rat, labeled_sample_from_json, DiscreteDistribution, FunctionClass, JointSample,
    LabeledSample, Ternary, TernaryClass,
};
use crate::dims::{self, DimKind, WitnessThresholds};
use crate::error::{Error, Result};
use crate::generators::{BandLevels, GeneratorSpec};
use crate::guard;
use crate::packing;
use crate::predict::{aggregate_predict, bisect_predict, run_transcript, AggregatorConfig};
use crate::simulate::{self, Predictor};
use crate::value::{format_rat, parse_rat, rat_to_f64, Rat};
use crate::verify;

#[derive(Parser)]
#[command(
    name = "scaledim",
    version,
    about = "Workbench for scale-sensitive dimensions, one-inclusion-graph \
             prediction, l1 packing numbers, and sample-size bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a named function class and write it as JSON
    Generate(GenerateArgs),
    /// Compute a shattering dimension of a stored class
    Dims(DimsArgs),
    /// Packing / covering numbers of a stored matrix
    Pack(PackArgs),
    /// One prediction (and optionally a transcript) on a stored class
    Predict(PredictArgs),
    /// Evaluate a named closed-form bound
    Bounds(BoundsArgs),
    /// Seeded simulations of the prediction game, deviations, and learning
    #[command(subcommand)]
    Simulate(SimCmd),
    /// Run the complete self-verification suite
    VerifyAll(VerifyArgs),
}

/// Entry point for the binary; returns the process exit code.
pub fn run_main() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cmd: Cmd) -> Result<i32> {
    match cmd {
        Cmd::Generate(a) => cmd_generate(a),
        Cmd::Dims(a) => cmd_dims(a),
        Cmd::Pack(a) => cmd_pack(a),
        Cmd::Predict(a) => cmd_predict(a),
        Cmd::Bounds(a) => cmd_bounds(a),
        Cmd::Simulate(a) => cmd_simulate(a),
        Cmd::VerifyAll(a) => cmd_verify_all(a),
    }
}

// ---- shared plumbing -----------------------------------------------------

/// "k=v,k=v" parameter lists for `generate` and `bounds`.
struct Params(BTreeMap<String, String>);

impl Params {
    fn parse(s: &str) -> Result<Self> {
        let mut map = BTreeMap::new();
        for part in s.split(',').filter(|p| !p.trim().is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::Format(format!("expected key=value, got {part:?}")))?;
            map.insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(Self(map))
    }

    fn get(&self, keys: &[&str]) -> Result<&str> {
        keys.iter()
            .find_map(|k| self.0.get(*k))
            .map(String::as_str)
            .ok_or_else(|| Error::InvalidParam(format!("missing parameter {}", keys[0])))
    }

    fn rat(&self, keys: &[&str]) -> Result<Rat> {
        parse_rat(self.get(keys)?)
    }

    fn u64(&self, keys: &[&str]) -> Result<u64> {
        let s = self.get(keys)?;
        s.parse().map_err(|_| Error::Format(format!("expected integer for {}, got {s:?}", keys[0])))
    }

    fn usize(&self, keys: &[&str]) -> Result<usize> {
        Ok(self.u64(keys)? as usize)
    }

    fn f64(&self, keys: &[&str]) -> Result<f64> {
        let s = self.get(keys)?;
        s.parse().map_err(|_| Error::Format(format!("expected number for {}, got {s:?}", keys[0])))
    }

    fn flag(&self, keys: &[&str], default: bool) -> Result<bool> {
        match keys.iter().find_map(|k| self.0.get(*k)) {
            None => Ok(default),
            Some(v) => match v.as_str() {
                "1" | "true" => Ok(true),
                "0" | "false" => Ok(false),
                other => Err(Error::Format(format!("expected 0/1 for {}, got {other:?}", keys[0]))),
            },
        }
    }
}

fn cli_rat(s: &str) -> Result<Rat> {
    parse_rat(s)
}

fn load_class(path: &Path) -> Result<FunctionClass> {
    FunctionClass::load(path)
}

fn load_dist(path: Option<&PathBuf>, n: usize) -> Result<DiscreteDistribution> {
    match path {
        Some(p) => DiscreteDistribution::load(p),
        None => Ok(DiscreteDistribution::uniform(n)),
    }
}

fn load_sample(path: &Path) -> Result<LabeledSample> {
    let text = fs::read_to_string(path)?;
    labeled_sample_from_json(&text)
}

/// Write to the file when given one, stdout otherwise.
fn emit(out: Option<&PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(p) => {
            fs::write(p, content)?;
            Ok(())
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

/// RFC-4180 quoting for free-text CSV cells.
fn csv_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

fn join_indices(ix: &[usize]) -> String {
    ix.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(";")
}

// ---- generate --------------------------------------------------------

#[derive(Args)]
struct GenerateArgs {
    /// binary_cube | two_value | profile | gc_counterexample | band_class | random
    #[arg(long)]
    name: String,
    /// Generator parameters, e.g. "d=3" or "n=50,gamma=1/5,kappa=1/50"
    #[arg(long, default_value = "")]
    params: String,
    /// Seed for the random generator (alias for params seed=)
    #[arg(long)]
    seed: Option<u64>,
    /// Class JSON destination (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also record the generator recipe as JSON
    #[arg(long)]
    spec_out: Option<PathBuf>,
}

fn parse_band_levels(s: &str) -> Result<BandLevels> {
    match s {
        "two" | "2" => Ok(BandLevels::Two),
        "three" | "3" => Ok(BandLevels::Three),
        other => Err(Error::InvalidParam(format!("levels must be two or three, got {other:?}"))),
    }
}

/// "1/4:2:1+1/8:1:0" -> [(scale, dim, attained), ...]
fn parse_pieces(s: &str) -> Result<Vec<(i64, i64, usize, bool)>> {
    s.split('+')
        .filter(|p| !p.is_empty())
        .map(|p| {
            let parts: Vec<&str> = p.split(':').collect();
            if parts.len() != 3 {
                return Err(Error::Format(format!(
                    "expected scale:dim:attained piece, got {p:?}"
                )));
            }
            let scale = parse_rat(parts[0])?;
            let dim: usize = parts[1]
                .parse()
                .map_err(|_| Error::Format(format!("bad piece dimension {:?}", parts[1])))?;
            let attained = match parts[2] {
                "1" | "true" => true,
                "0" | "false" => false,
                other => return Err(Error::Format(format!("bad attained flag {other:?}"))),
            };
            Ok((*scale.numer(), *scale.denom(), dim, attained))
        })
        .collect()
}

fn rat_pair(p: &Params, keys: &[&str]) -> Result<(i64, i64)> {
    let r = p.rat(keys)?;
    Ok((*r.numer(), *r.denom()))
}

fn cmd_generate(a: GenerateArgs) -> Result<i32> {
    let p = Params::parse(&a.params)?;
    let spec = match a.name.as_str() {
        "binary_cube" => GeneratorSpec::BinaryCube { d: p.usize(&["d"])? },
        "two_value" => GeneratorSpec::TwoValue {
            n: p.usize(&["n"])?,
            gamma: rat_pair(&p, &["gamma"])?,
            kappa: rat_pair(&p, &["kappa"])?,
        },
        "profile" => GeneratorSpec::Profile {
            pieces: parse_pieces(p.get(&["pieces"])?)?,
            levels: p.usize(&["levels"])?,
        },
        "gc_counterexample" => GeneratorSpec::GcCounterexample {
            epsilon: rat_pair(&p, &["epsilon", "eps"])?,
            n: p.usize(&["n"])?,
        },
        "band_class" => GeneratorSpec::BandClass {
            epsilon: rat_pair(&p, &["epsilon", "eps"])?,
            n: p.usize(&["n"])?,
            levels: parse_band_levels(p.get(&["levels"])?)?,
        },
        "random" => GeneratorSpec::Random {
            n_points: p.usize(&["n_points"])?,
            n_funcs: p.usize(&["n_funcs"])?,
            b: p.u64(&["b"])? as i64,
            seed: match a.seed {
                Some(s) => s,
                None => p.u64(&["seed"])?,
            },
        },
        other => {
            return Err(Error::InvalidParam(format!("unknown generator {other:?}")));
        }
    };
    let class = spec.generate()?;
    if let Some(path) = &a.spec_out {
        fs::write(path, spec.to_json())?;
    }
    emit(a.out.as_ref(), &class.to_json())?;
    if a.out.is_some() {
        eprintln!(
            "wrote {} points x {} functions on the 1/{} grid",
            class.n_points(),
            class.n_functions(),
            class.denominator()
        );
    }
    Ok(0)
}

// ---- dims ------------------------------------------------------------

#[derive(Copy, Clone, ValueEnum)]
enum DimKindArg {
    VcdimStar,
    Fatv,
    Fat,
    Sfat,
}

#[derive(Args)]
struct DimsArgs {
    /// Class JSON file
    #[arg(long)]
    class: PathBuf,
    /// Which dimension to compute
    #[arg(long, value_enum)]
    kind: DimKindArg,
    /// Band half-width "p/q" (required for fatv/fat/sfat)
    #[arg(long, value_parser = cli_rat)]
    gamma: Option<Rat>,
    /// CSV destination (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

fn thresholds_cell(t: &WitnessThresholds) -> String {
    match t {
        WitnessThresholds::None => String::new(),
        WitnessThresholds::Single(r) => format_rat(r),
        WitnessThresholds::PerPoint(rs) => {
            rs.iter().map(format_rat).collect::<Vec<_>>().join(";")
        }
        WitnessThresholds::Pairs(ps) => ps
            .iter()
            .map(|(l, u)| format!("{}..{}", format_rat(l), format_rat(u)))
            .collect::<Vec<_>>()
            .join(";"),
    }
}

/// A {0,1}-valued class reinterpreted as ternary rows (no don't-cares).
fn as_ternary(f: &FunctionClass) -> Result<TernaryClass> {
    let rows = f
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| {
                    if v.is_integer() {
                        match v.to_integer() {
                            0 => return Ok(Ternary::Zero),
                            1 => return Ok(Ternary::One),
                            _ => {}
                        }
                    }
                    Err(Error::InvalidParam(format!(
                        "vcdim_star needs a 0/1-valued class, found value {}",
                        format_rat(v)
                    )))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    TernaryClass::new(f.domain().to_vec(), rows)
}

fn cmd_dims(a: DimsArgs) -> Result<i32> {
    let f = load_class(&a.class)?;
    let need_gamma = || {
        a.gamma.ok_or_else(|| Error::InvalidParam("this dimension kind needs --gamma".into()))
    };
    let (kind, gamma, size, witness) = match a.kind {
        DimKindArg::VcdimStar => {
            let g = as_ternary(&f)?;
            let (size, w) = dims::vcdim_star(&g)?;
            (DimKind::VcdimStar, Rat::from_integer(0), size, w)
        }
        DimKindArg::Fatv => {
            let gamma = need_gamma()?;
            let (size, w) = dims::fatv(&f, gamma)?;
            (DimKind::Fatv, gamma, size, w)
        }
        DimKindArg::Fat => {
            let gamma = need_gamma()?;
            let (size, w) = dims::fat(&f, gamma)?;
            (DimKind::Fat, gamma, size, w)
        }
        DimKindArg::Sfat => {
            let gamma = need_gamma()?;
            let (size, w) = dims::sfat(&f, gamma)?;
            (DimKind::Sfat, gamma, size, w)
        }
    };
    let mut csv = String::from(
        "kind,gamma_num,gamma_den,gamma_dec,size,witness_points,witness_thresholds\n",
    );
    let _ = writeln!(
        csv,
        "{},{},{},{},{}",
        kind.name(),
        csv_rat(&gamma),
        size,
        join_indices(&witness.points),
        thresholds_cell(&witness.thresholds)
    );
    emit(a.out.as_ref(), &csv)?;
    Ok(0)
}

// ---- pack ------------------------------------------------------------

#[derive(Args)]
#[command(group = ArgGroup::new("method").args(["exact", "greedy", "cover"]))]
struct PackArgs {
    /// Class JSON file; its rows are the matrix
    #[arg(long)]
    matrix: PathBuf,
    /// Separation / covering radius "p/q"
    #[arg(long, value_parser = cli_rat)]
    epsilon: Rat,
    /// Exact maximum packing (default)
    #[arg(long)]
    exact: bool,
    /// Greedy maximal packing in row order
    #[arg(long)]
    greedy: bool,
    /// Exact minimum proper cover
    #[arg(long)]
    cover: bool,
    /// CSV destination (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

fn cmd_pack(a: PackArgs) -> Result<i32> {
    let f = load_class(&a.matrix)?;
    let rows = f.rows();
    let result = if a.greedy {
        let order: Vec<usize> = (0..rows.len()).collect();
        packing::packing_greedy(&rows, a.epsilon, &order)?
    } else if a.cover {
        packing::cover_proper_exact(&rows, a.epsilon)?
    } else {
        packing::packing_exact(&rows, a.epsilon)?
    };
    let mut csv = String::from("method,epsilon_num,epsilon_den,epsilon_dec,size,witness\n");
    let _ = writeln!(
        csv,
        "{},{},{},{}",
        result.method.name(),
        csv_rat(&result.epsilon),
        result.size,
        join_indices(&result.witness)
    );
    emit(a.out.as_ref(), &csv)?;
    Ok(0)
}

// ---- predict ---------------------------------------------------------

#[derive(Args)]
struct PredictArgs {
    /// Class JSON file
    #[arg(long)]
    class: PathBuf,
    /// Band half-width "p/q"
    #[arg(long, value_parser = cli_rat)]
    gamma: Rat,
    /// Aggregation resolution "p/q"
    #[arg(long, value_parser = cli_rat)]
    tau: Rat,
    /// Labeled prefix sample, JSON [[point, "p/q"], ...]
    #[arg(long)]
    prefix: PathBuf,
    /// Point index to predict at
    #[arg(long)]
    query: usize,
    /// Use bisection to this depth instead of threshold aggregation
    #[arg(long)]
    bisect: Option<usize>,
    /// Also replay the prefix as an online transcript CSV
    #[arg(long)]
    transcript: Option<PathBuf>,
}

fn cmd_predict(a: PredictArgs) -> Result<i32> {
    let f = load_class(&a.class)?;
    let cfg = AggregatorConfig::new(a.gamma, a.tau)?;
    let prefix = load_sample(&a.prefix)?;
    let prediction = match a.bisect {
        Some(depth) => bisect_predict(&f, &cfg, &prefix, a.query, depth)?,
        None => aggregate_predict(&f, &cfg, &prefix, a.query)?.prediction,
    };
    println!("query,prediction_num,prediction_den,prediction_dec");
    println!("{},{}", a.query, csv_rat(&prediction));
    if let Some(path) = &a.transcript {
        let t = run_transcript(&f, &cfg, &prefix)?;
        if !t.errors_consistent() {
            return Err(Error::InvalidParam(
                "transcript error column disagrees with |prediction - truth|".into(),
            ));
        }
        fs::write(path, t.to_csv())?;
    }
    Ok(0)
}

// ---- bounds ----------------------------------------------------------

#[derive(Args)]
struct BoundsArgs {
    /// Formula name; see `bounds --formula list`
    #[arg(long)]
    formula: String,
    /// Formula parameters "k=v,k=v"; rationals as "p/q"
    #[arg(long, default_value = "")]
    params: String,
}

const FORMULAS: &[&str] = &[
    "prediction_corrected",
    "prediction_aggregate",
    "prediction_original",
    "m_pred",
    "pack_fatv",
    "pack_fat",
    "sauer_y",
    "hoeffding",
    "inverse_sample_size",
    "gc_alpha",
    "gc_sample_fat",
    "gc_sample_fatv",
    "erm_sample",
    "learner_params",
];

fn print_rat_value(name: &str, v: &Rat) {
    println!("{name} = {} ({})", format_rat(v), rat_to_f64(v));
}

fn print_log_value(name: &str, v: &LogNumber) {
    let ln = v.ln();
    if ln < 700.0 {
        println!("{name} = {}", ln.exp());
    } else {
        println!("{name} = exp({ln})");
    }
    println!("ln({name}) = {ln}");
}

fn cmd_bounds(a: BoundsArgs) -> Result<i32> {
    let p = Params::parse(&a.params)?;
    let eps = &["epsilon", "eps"][..];
    match a.formula.as_str() {
        "list" => {
            for f in FORMULAS {
                println!("{f}");
            }
        }
        "prediction_corrected" => {
            let v = bounds::prediction_bound_corrected(
                p.usize(&["d"])?,
                p.usize(&["m"])?,
                &p.rat(&["gamma"])?,
            )?;
            print_rat_value("prediction_corrected", &v);
        }
        "prediction_aggregate" => {
            let v = bounds::prediction_bound_aggregate(
                p.usize(&["d"])?,
                p.usize(&["m"])?,
                &p.rat(&["gamma"])?,
                &p.rat(&["tau"])?,
            )?;
            print_rat_value("prediction_aggregate", &v);
        }
        "prediction_original" => {
            let v = bounds::prediction_bound_original(
                p.usize(&["d"])?,
                p.usize(&["m"])?,
                &p.rat(&["gamma"])?,
            )?;
            print_rat_value("prediction_original", &v);
        }
        "m_pred" => {
            let (m, degenerate) = bounds::m_pred(
                p.usize(&["d"])?,
                &p.rat(&["alpha"])?,
                p.flag(&["corrected"], true)?,
            )?;
            println!("m_pred = {m}{}", if degenerate { " (degenerate: d = 0)" } else { "" });
        }
        "pack_fatv" => {
            let v = bounds::pack_bound_fatv(
                &p.rat(eps)?,
                &p.rat(&["alpha"])?,
                p.u64(&["b"])? as u32,
                p.usize(&["d"])?,
            )?;
            print_log_value("pack_fatv", &v);
        }
        "pack_fat" => {
            let (exact, loose) = bounds::pack_bound_fat(
                &p.rat(eps)?,
                p.u64(&["b"])? as u32,
                p.u64(&["m"])?,
                p.u64(&["d"])?,
            )?;
            println!("pack_fat = {exact}");
            print_log_value("pack_fat_loose", &loose);
        }
        "sauer_y" => {
            let v = bounds::sauer_y(p.u64(&["m"])?, p.u64(&["d"])?, p.u64(&["b"])?)?;
            println!("sauer_y = {v}");
        }
        "hoeffding" => {
            let v = bounds::hoeffding_tail(
                &p.rat(eps)?,
                p.u64(&["m"])?,
                &p.rat(&["a"])?,
                &p.rat(&["b"])?,
            )?;
            println!("hoeffding = {v}");
        }
        "inverse_sample_size" => {
            let v = bounds::inverse_sample_size(
                p.f64(&["y1"])?,
                p.f64(&["y2"])?,
                p.f64(&["y3"])?,
                p.f64(&["y4"])?,
                p.f64(&["delta"])?,
            )?;
            println!("inverse_sample_size = {v}");
        }
        "gc_alpha" => {
            let v = bounds::gc_alpha(&p.rat(eps)?, &p.rat(&["kappa"])?)?;
            print_rat_value("gc_alpha", &v);
        }
        "gc_sample_fat" => {
            let v = bounds::gc_sample_fat(
                &p.rat(eps)?,
                &p.rat(&["delta"])?,
                p.usize(&["d"])?,
                &p.rat(&["kappa"])?,
            )?;
            println!("gc_sample_fat = {v}");
        }
        "gc_sample_fatv" => {
            let v = bounds::gc_sample_fatv(
                &p.rat(eps)?,
                &p.rat(&["delta"])?,
                p.usize(&["d"])?,
                &p.rat(&["kappa"])?,
            )?;
            println!("gc_sample_fatv = {v}");
        }
        "erm_sample" => {
            let v = bounds::erm_sample(
                &p.rat(eps)?,
                &p.rat(&["delta"])?,
                p.usize(&["d"])?,
                &p.rat(&["kappa"])?,
                p.flag(&["use_fatv", "fatv"], false)?,
            )?;
            println!("erm_sample = {v}");
        }
        "learner_params" => {
            let lp = simulate::learner_params(
                p.rat(eps)?,
                p.rat(&["delta"])?,
                p.rat(&["gamma"])?,
                p.usize(&["d"])?,
                p.u64(&["c"])? as u32,
            )?;
            println!("k = {}", lp.k);
            println!("n1 = {}", lp.n1);
            println!("n2 = {}", lp.n2);
            println!("total = {}", lp.total());
        }
        other => {
            return Err(Error::InvalidParam(format!(
                "unknown formula {other:?}; try --formula list"
            )));
        }
    }
    Ok(0)
}

// ---- simulate --------------------------------------------------------

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Mode {
    Auto,
    Exhaustive,
    Mc,
}

#[derive(Args)]
struct CommonSimArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    /// exhaustive enumerates every sequence; auto picks it while tractable
    #[arg(long, value_enum, default_value_t = Mode::Auto)]
    mode: Mode,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// CSV destination (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum SimCmd {
    /// Online prediction game: worst-target expected absolute error
    Game(GameArgs),
    /// Worst-function deviation of sample means from true means
    Gc(GcArgs),
    /// Blocked cover-based learner, one line per seeded run
    Agnostic(AgnosticArgs),
}

#[derive(Args)]
struct GameArgs {
    #[arg(long)]
    class: PathBuf,
    /// Distribution JSON (uniform when omitted)
    #[arg(long)]
    dist: Option<PathBuf>,
    /// Rounds per game (the last one is the scored query)
    #[arg(long)]
    m: usize,
    #[arg(long, value_parser = cli_rat)]
    gamma: Rat,
    #[arg(long, value_parser = cli_rat)]
    tau: Rat,
    /// Bisection depth replacing threshold aggregation
    #[arg(long)]
    bisect: Option<usize>,
    #[command(flatten)]
    common: CommonSimArgs,
}

/// Decide between enumeration and sampling under the sequence-count guard.
fn resolve_mode(mode: Mode, n: usize, m: usize, what: &str) -> Mode {
    match mode {
        Mode::Auto => {
            let mut seqs: u128 = 1;
            for _ in 0..m {
                seqs = seqs.saturating_mul(n as u128);
            }
            if seqs <= guard::MAX_GAME_SEQUENCES || guard::overridden() {
                Mode::Exhaustive
            } else {
                eprintln!(
                    "warning: {seqs} {what} sequences exceed the exhaustive limit {}; \
                     switching to Monte Carlo",
                    guard::MAX_GAME_SEQUENCES
                );
                Mode::Mc
            }
        }
        other => other,
    }
}

fn cmd_sim_game(a: GameArgs) -> Result<i32> {
    let f = load_class(&a.class)?;
    let dist = load_dist(a.dist.as_ref(), f.n_points())?;
    let cfg = AggregatorConfig::new(a.gamma, a.tau)?;
    let predictor = match a.bisect {
        Some(depth) => Predictor::Bisect { cfg, depth },
        None => Predictor::Aggregate(cfg),
    };
    let mode = resolve_mode(a.common.mode, f.n_points(), a.m, "game");
    let res = match mode {
        Mode::Exhaustive => simulate::game_exhaustive(&f, &dist, a.m, &predictor)?,
        _ => simulate::game_mc(
            &f,
            &dist,
            a.m,
            &predictor,
            a.common.trials,
            a.common.seed,
            a.common.jobs,
        )?,
    };
    let mut csv = String::from("target,mean_num,mean_den,mean_dec,stderr\n");
    for t in &res.per_target {
        let se = t.stderr.map(|s| s.to_string()).unwrap_or_default();
        let _ = writeln!(csv, "{},{},{}", t.target, csv_rat(&t.mean), se);
    }
    emit(a.common.out.as_ref(), &csv)?;
    eprintln!(
        "worst target {} with expected error {} over {} {}",
        res.worst_target,
        format_rat(&res.worst_error),
        res.trials,
        if res.seed.is_some() { "trials per target" } else { "sequences" }
    );
    Ok(0)
}

#[derive(Args)]
struct GcArgs {
    #[arg(long)]
    class: PathBuf,
    /// Distribution JSON (uniform when omitted)
    #[arg(long)]
    dist: Option<PathBuf>,
    /// Draws per sample
    #[arg(long)]
    m: usize,
    /// Deviation tolerances, comma-separated "p/q" list
    #[arg(long, value_parser = cli_rat, value_delimiter = ',')]
    epsilon: Vec<Rat>,
    #[command(flatten)]
    common: CommonSimArgs,
}

fn cmd_sim_gc(a: GcArgs) -> Result<i32> {
    let f = load_class(&a.class)?;
    let dist = load_dist(a.dist.as_ref(), f.n_points())?;
    let mode = resolve_mode(a.common.mode, f.n_points(), a.m, "deviation");
    let rep = match mode {
        Mode::Exhaustive => simulate::gc_deviation_exhaustive(&f, &dist, a.m, &a.epsilon)?,
        _ => simulate::gc_deviation_mc(
            &f,
            &dist,
            a.m,
            &a.epsilon,
            a.common.trials,
            a.common.seed,
            a.common.jobs,
        )?,
    };
    let mut csv = String::from(
        "epsilon_num,epsilon_den,epsilon_dec,probability_num,probability_den,probability_dec,stderr\n",
    );
    for e in &rep.per_epsilon {
        let se = e.stderr.map(|s| s.to_string()).unwrap_or_default();
        let _ = writeln!(csv, "{},{},{}", csv_rat(&e.epsilon), csv_rat(&e.probability), se);
    }
    emit(a.common.out.as_ref(), &csv)?;
    eprintln!(
        "max deviation {} over {} outcomes",
        format_rat(&rep.max_deviation),
        rep.outcomes
    );
    Ok(0)
}

#[derive(Args)]
struct AgnosticArgs {
    #[arg(long)]
    class: PathBuf,
    /// Joint law JSON: [[point, "y", "weight"], ...]
    #[arg(long)]
    law: PathBuf,
    #[arg(long, value_parser = cli_rat)]
    epsilon: Rat,
    #[arg(long, value_parser = cli_rat)]
    delta: Rat,
    #[arg(long, value_parser = cli_rat)]
    gamma: Rat,
    /// Per-block sample-size constant
    #[arg(long, default_value_t = 8)]
    c: u32,
    #[arg(long, default_value_t = 20)]
    runs: u64,
    #[command(flatten)]
    common: CommonSimArgs,
}

fn cmd_sim_agnostic(a: AgnosticArgs) -> Result<i32> {
    let f = load_class(&a.class)?;
    let p = JointSample::load(&a.law)?;
    let (d, _) = dims::fat(&f, a.gamma / Rat::from_integer(2))?;
    let d = d.max(1);
    let params = simulate::learner_params(a.epsilon, a.delta, a.gamma, d, a.c)?;
    let mut csv = String::from("run,risk_num,risk_den,risk_dec,inf_num,inf_den,inf_dec,success\n");
    let mut successes = 0u64;
    for run in 0..a.runs {
        let (er, inf) = simulate::agnostic_trial(&f, &p, &params, a.common.seed, run)?;
        let ok = er <= inf + a.epsilon;
        successes += ok as u64;
        let _ = writeln!(csv, "{run},{},{},{}", csv_rat(&er), csv_rat(&inf), ok as u8);
    }
    emit(a.common.out.as_ref(), &csv)?;
    eprintln!(
        "{successes}/{} runs within epsilon of the best in class (sample size {} per run)",
        a.runs,
        params.total()
    );
    Ok(0)
}

fn cmd_simulate(cmd: SimCmd) -> Result<i32> {
    match cmd {
        SimCmd::Game(a) => cmd_sim_game(a),
        SimCmd::Gc(a) => cmd_sim_gc(a),
        SimCmd::Agnostic(a) => cmd_sim_agnostic(a),
    }
}

// ---- verify-all ------------------------------------------------------

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Result CSV destination; carries no timing, so reruns are
    /// byte-identical
    #[arg(long)]
    out: Option<PathBuf>,
}

fn cmd_verify_all(a: VerifyArgs) -> Result<i32> {
    let results = verify::run_all(a.seed, a.jobs)?;
    let mut csv = String::from("id,name,status,detail\n");
    let mut all_pass = true;
    println!("{:>3}  {:<32} {:<6} {:>8}  detail", "id", "name", "status", "seconds");
    for r in &results {
        let status = if r.pass { "pass" } else { "FAIL" };
        all_pass &= r.pass;
        println!("{:>3}  {:<32} {:<6} {:>8.2}  {}", r.id, r.name, status, r.seconds, r.detail);
        let _ = writeln!(
            csv,
            "{},{},{},{}",
            r.id,
            r.name,
            if r.pass { "pass" } else { "fail" },
            csv_quote(&r.detail)
        );
    }
    if let Some(path) = &a.out {
        fs::write(path, &csv)?;
    }
    if all_pass {
        println!("all {} criteria pass", results.len());
        Ok(0)
    } else {
        println!("FAILURES above");
        Ok(1)
    }
}
