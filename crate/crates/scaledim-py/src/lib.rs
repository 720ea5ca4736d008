//! Python bindings. Rationals cross the boundary as (numerator,
//! denominator) tuples of Python ints, so exactness survives; the one
//! arbitrary-precision result (the exact packing growth bound) crosses as
//! a native Python int.

use num::BigUint;
use pyo3::exceptions::{PyIOError, PyValueError};
use pyo3::prelude::*;

use scaledim::class::{
    DiscreteDistribution, FunctionClass, JointSample, LabeledSample, Ternary, TernaryClass,
};
use scaledim::dims::{self, WitnessThresholds};
use scaledim::error::Error;
use scaledim::generators::{self, BandLevels};
use scaledim::packing;
use scaledim::predict::{aggregate_predict, bisect_predict, AggregatorConfig};
use scaledim::simulate::{self, Predictor};
use scaledim::value::{rat, Rat};
use scaledim::{bounds, verify};

type Pair = (i64, i64);

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Io(_) => PyIOError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn ok<T>(r: scaledim::error::Result<T>) -> PyResult<T> {
    r.map_err(py_err)
}

fn to_rat(p: Pair) -> PyResult<Rat> {
    if p.1 <= 0 {
        return Err(PyValueError::new_err(format!("denominator must be positive, got {}", p.1)));
    }
    Ok(rat(p.0, p.1))
}

fn from_rat(r: &Rat) -> Pair {
    (*r.numer(), *r.denom())
}

fn to_sample(pairs: Vec<(usize, Pair)>) -> PyResult<LabeledSample> {
    pairs.into_iter().map(|(x, v)| Ok((x, to_rat(v)?))).collect()
}

fn to_dist(weights: Option<Vec<Pair>>, n: usize) -> PyResult<DiscreteDistribution> {
    match weights {
        None => Ok(DiscreteDistribution::uniform(n)),
        Some(w) => {
            let w = w.into_iter().map(to_rat).collect::<PyResult<Vec<_>>>()?;
            ok(DiscreteDistribution::new(w))
        }
    }
}

fn witness_py(py: Python<'_>, w: &dims::DimensionWitness) -> PyResult<PyObject> {
    let d = pyo3::types::PyDict::new_bound(py);
    d.set_item("kind", w.kind.name())?;
    d.set_item("points", w.points.clone())?;
    match &w.thresholds {
        WitnessThresholds::None => d.set_item("thresholds", py.None())?,
        WitnessThresholds::Single(r) => d.set_item("thresholds", from_rat(r))?,
        WitnessThresholds::PerPoint(rs) => {
            d.set_item("thresholds", rs.iter().map(from_rat).collect::<Vec<_>>())?
        }
        WitnessThresholds::Pairs(ps) => d.set_item(
            "thresholds",
            ps.iter().map(|(l, u)| (from_rat(l), from_rat(u))).collect::<Vec<_>>(),
        )?,
    }
    Ok(d.into())
}

/// Finite class of [0, 1]-valued functions on a finite domain, stored on a
/// common denominator grid.
#[pyclass(name = "FunctionClass", module = "scaledim_py")]
#[derive(Clone)]
struct PyFunctionClass {
    inner: FunctionClass,
}

#[pymethods]
impl PyFunctionClass {
    /// Build from integer numerators on the 1/den grid.
    #[new]
    fn new(domain: Vec<String>, den: i64, values: Vec<Vec<i64>>) -> PyResult<Self> {
        Ok(Self { inner: ok(FunctionClass::new(domain, den, values))? })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Self { inner: ok(FunctionClass::from_json(text))? })
    }

    /// All 2^d binary functions on d points.
    #[staticmethod]
    fn binary_cube(d: usize) -> PyResult<Self> {
        Ok(Self { inner: ok(generators::gen_binary_cube(d))? })
    }

    /// {0, v}^n with v = 2*(gamma - kappa).
    #[staticmethod]
    fn two_value(n: usize, gamma: Pair, kappa: Pair) -> PyResult<Self> {
        Ok(Self { inner: ok(generators::gen_two_value(n, to_rat(gamma)?, to_rat(kappa)?))? })
    }

    /// The mean-matched pair family used for deviation lower bounds.
    #[staticmethod]
    fn gc_counterexample(epsilon: Pair, n: usize) -> PyResult<Self> {
        Ok(Self { inner: ok(generators::gen_gc_counterexample(to_rat(epsilon)?, n))? })
    }

    /// Band family: "two" levels 1/2 +- eps/2, "three" levels 1/2 and
    /// 1/2 +- eps.
    #[staticmethod]
    fn band_class(epsilon: Pair, n: usize, levels: &str) -> PyResult<Self> {
        let levels = match levels {
            "two" => BandLevels::Two,
            "three" => BandLevels::Three,
            other => {
                return Err(PyValueError::new_err(format!(
                    "levels must be 'two' or 'three', got {other:?}"
                )))
            }
        };
        Ok(Self { inner: ok(generators::gen_band_class(to_rat(epsilon)?, n, levels))? })
    }

    /// Seeded uniform class on the 1/b grid.
    #[staticmethod]
    fn random(n_points: usize, n_funcs: usize, b: i64, seed: u64) -> PyResult<Self> {
        Ok(Self { inner: ok(generators::gen_random(n_points, n_funcs, b, seed))? })
    }

    fn n_points(&self) -> usize {
        self.inner.n_points()
    }

    fn n_functions(&self) -> usize {
        self.inner.n_functions()
    }

    fn denominator(&self) -> i64 {
        self.inner.denominator()
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    /// Row matrix as (num, den) tuples.
    fn rows(&self) -> Vec<Vec<Pair>> {
        self.inner.rows().iter().map(|r| r.iter().map(from_rat).collect()).collect()
    }

    fn value(&self, f: usize, x: usize) -> PyResult<Pair> {
        if f >= self.inner.n_functions() || x >= self.inner.n_points() {
            return Err(PyValueError::new_err("function or point index out of range"));
        }
        Ok(from_rat(&self.inner.value(f, x)))
    }

    /// Largest set shattered with one shared threshold at half-width gamma.
    fn fatv(&self, py: Python<'_>, gamma: Pair) -> PyResult<(usize, PyObject)> {
        let (d, w) = ok(dims::fatv(&self.inner, to_rat(gamma)?))?;
        Ok((d, witness_py(py, &w)?))
    }

    /// Largest set shattered with per-point thresholds.
    fn fat(&self, py: Python<'_>, gamma: Pair) -> PyResult<(usize, PyObject)> {
        let (d, w) = ok(dims::fat(&self.inner, to_rat(gamma)?))?;
        Ok((d, witness_py(py, &w)?))
    }

    /// Largest set strongly shattered by exact two-point value pairs.
    fn sfat(&self, py: Python<'_>, gamma: Pair) -> PyResult<(usize, PyObject)> {
        let (d, w) = ok(dims::sfat(&self.inner, to_rat(gamma)?))?;
        Ok((d, witness_py(py, &w)?))
    }

    /// Exact maximum epsilon-separated subset of the rows: (size, indices).
    fn packing_exact(&self, epsilon: Pair) -> PyResult<(usize, Vec<usize>)> {
        let r = ok(packing::packing_exact(&self.inner.rows(), to_rat(epsilon)?))?;
        Ok((r.size, r.witness))
    }

    /// Exact minimum proper epsilon-cover of the rows: (size, indices).
    fn cover_exact(&self, epsilon: Pair) -> PyResult<(usize, Vec<usize>)> {
        let r = ok(packing::cover_proper_exact(&self.inner.rows(), to_rat(epsilon)?))?;
        Ok((r.size, r.witness))
    }

    /// Packing-vs-cover consistency M(2e) <= N(e) <= M(e) on the rows.
    fn sandwich_check(&self, epsilon: Pair) -> PyResult<bool> {
        ok(packing::sandwich_check(&self.inner.rows(), to_rat(epsilon)?))
    }

    fn __repr__(&self) -> String {
        format!(
            "FunctionClass({} points, {} functions, 1/{} grid)",
            self.inner.n_points(),
            self.inner.n_functions(),
            self.inner.denominator()
        )
    }
}

/// Maximum size of a point set on which the rows realize every two-sided
/// bit pattern; cells are 0, 1, or None for don't-care.
#[pyfunction]
fn vcdim_star(domain_size: usize, rows: Vec<Vec<Option<bool>>>) -> PyResult<(usize, Vec<usize>)> {
    let rows = rows
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|c| match c {
                    None => Ternary::Star,
                    Some(b) => Ternary::from_bit(b),
                })
                .collect()
        })
        .collect();
    let g = ok(TernaryClass::new(FunctionClass::default_domain(domain_size), rows))?;
    let (d, w) = ok(dims::vcdim_star(&g))?;
    Ok((d, w.points))
}

/// Threshold-aggregation prediction from a labeled prefix.
#[pyfunction]
fn predict_aggregate(
    f: &PyFunctionClass,
    gamma: Pair,
    tau: Pair,
    prefix: Vec<(usize, Pair)>,
    query: usize,
) -> PyResult<Pair> {
    let cfg = ok(AggregatorConfig::new(to_rat(gamma)?, to_rat(tau)?))?;
    let s = to_sample(prefix)?;
    Ok(from_rat(&ok(aggregate_predict(&f.inner, &cfg, &s, query))?.prediction))
}

/// Bisection refinement of the same prediction, to the given depth.
#[pyfunction]
fn predict_bisect(
    f: &PyFunctionClass,
    gamma: Pair,
    tau: Pair,
    prefix: Vec<(usize, Pair)>,
    query: usize,
    depth: usize,
) -> PyResult<Pair> {
    let cfg = ok(AggregatorConfig::new(to_rat(gamma)?, to_rat(tau)?))?;
    let s = to_sample(prefix)?;
    Ok(from_rat(&ok(bisect_predict(&f.inner, &cfg, &s, query, depth))?))
}

/// Exact worst-target expected error of the m-round prediction game:
/// (worst_target, (num, den)).
#[pyfunction]
#[pyo3(signature = (f, m, gamma, tau, weights=None))]
fn game_exhaustive(
    f: &PyFunctionClass,
    m: usize,
    gamma: Pair,
    tau: Pair,
    weights: Option<Vec<Pair>>,
) -> PyResult<(usize, Pair)> {
    let dist = to_dist(weights, f.inner.n_points())?;
    let pred = Predictor::Aggregate(ok(AggregatorConfig::new(to_rat(gamma)?, to_rat(tau)?))?);
    let r = ok(simulate::game_exhaustive(&f.inner, &dist, m, &pred))?;
    Ok((r.worst_target, from_rat(&r.worst_error)))
}

/// Monte Carlo version: (worst_target, (num, den), stderr).
#[pyfunction]
#[pyo3(signature = (f, m, gamma, tau, trials, seed, weights=None, jobs=1))]
#[allow(clippy::too_many_arguments)]
fn game_mc(
    f: &PyFunctionClass,
    m: usize,
    gamma: Pair,
    tau: Pair,
    trials: u64,
    seed: u64,
    weights: Option<Vec<Pair>>,
    jobs: usize,
) -> PyResult<(usize, Pair, f64)> {
    let dist = to_dist(weights, f.inner.n_points())?;
    let pred = Predictor::Aggregate(ok(AggregatorConfig::new(to_rat(gamma)?, to_rat(tau)?))?);
    let r = ok(simulate::game_mc(&f.inner, &dist, m, &pred, trials, seed, jobs))?;
    let worst =
        r.per_target.iter().find(|t| t.target == r.worst_target).expect("worst target present");
    Ok((r.worst_target, from_rat(&r.worst_error), worst.stderr.unwrap_or(0.0)))
}

/// Exact law of the worst-row deviation of sample means from true means:
/// (max_deviation, [(epsilon, probability)]).
#[pyfunction]
#[pyo3(signature = (f, m, eps_list, weights=None))]
fn gc_deviation_exhaustive(
    f: &PyFunctionClass,
    m: usize,
    eps_list: Vec<Pair>,
    weights: Option<Vec<Pair>>,
) -> PyResult<(Pair, Vec<(Pair, Pair)>)> {
    let dist = to_dist(weights, f.inner.n_points())?;
    let eps = eps_list.into_iter().map(to_rat).collect::<PyResult<Vec<_>>>()?;
    let r = ok(simulate::gc_deviation_exhaustive(&f.inner, &dist, m, &eps))?;
    let per = r
        .per_epsilon
        .iter()
        .map(|e| (from_rat(&e.epsilon), from_rat(&e.probability)))
        .collect();
    Ok((from_rat(&r.max_deviation), per))
}

/// One seeded run of the blocked cover-based learner on a finite joint
/// law [(point, y, weight)]: returns (risk, best_in_class_risk).
#[pyfunction]
#[pyo3(signature = (f, law, epsilon, delta, gamma, c=8, seed=0, run=0))]
#[allow(clippy::too_many_arguments)]
fn agnostic_trial(
    f: &PyFunctionClass,
    law: Vec<(usize, Pair, Pair)>,
    epsilon: Pair,
    delta: Pair,
    gamma: Pair,
    c: u32,
    seed: u64,
    run: u64,
) -> PyResult<(Pair, Pair)> {
    let triples = law
        .into_iter()
        .map(|(x, y, w)| Ok((x, to_rat(y)?, to_rat(w)?)))
        .collect::<PyResult<Vec<_>>>()?;
    let p = ok(JointSample::new(triples))?;
    let gamma = to_rat(gamma)?;
    let (d, _) = ok(dims::fat(&f.inner, gamma / rat(2, 1)))?;
    let params =
        ok(simulate::learner_params(to_rat(epsilon)?, to_rat(delta)?, gamma, d.max(1), c))?;
    let (er, inf) = ok(simulate::agnostic_trial(&f.inner, &p, &params, seed, run))?;
    Ok((from_rat(&er), from_rat(&inf)))
}

/// Tail bound 2*exp(-2*eps^2*m/(b-a)^2).
#[pyfunction]
fn hoeffding_tail(epsilon: Pair, m: u64, a: Pair, b: Pair) -> PyResult<f64> {
    ok(bounds::hoeffding_tail(&to_rat(epsilon)?, m, &to_rat(a)?, &to_rat(b)?))
}

/// Natural log of the shared-threshold packing growth bound.
#[pyfunction]
fn pack_bound_fatv_ln(epsilon: Pair, alpha: Pair, b: u32, d: usize) -> PyResult<f64> {
    Ok(ok(bounds::pack_bound_fatv(&to_rat(epsilon)?, &to_rat(alpha)?, b, d))?.ln())
}

/// Per-point-threshold packing growth bound: (exact int, ln of loose form).
#[pyfunction]
fn pack_bound_fat(epsilon: Pair, b: u32, m: u64, d: u64) -> PyResult<(BigUint, f64)> {
    let (exact, loose) = ok(bounds::pack_bound_fat(&to_rat(epsilon)?, b, m, d))?;
    Ok((exact, loose.ln()))
}

/// Smallest m with y1*exp(y2*ln(y3*m) - y4*m) <= delta for all larger m.
#[pyfunction]
fn inverse_sample_size(y1: f64, y2: f64, y3: f64, y4: f64, delta: f64) -> PyResult<u64> {
    ok(bounds::inverse_sample_size(y1, y2, y3, y4, delta))
}

/// Sufficient sample size for uniform convergence via the per-point
/// dimension route.
#[pyfunction]
fn gc_sample_fat(epsilon: Pair, delta: Pair, d: usize, kappa: Pair) -> PyResult<u64> {
    ok(bounds::gc_sample_fat(&to_rat(epsilon)?, &to_rat(delta)?, d, &to_rat(kappa)?))
}

/// Same via the shared-threshold dimension route.
#[pyfunction]
fn gc_sample_fatv(epsilon: Pair, delta: Pair, d: usize, kappa: Pair) -> PyResult<u64> {
    ok(bounds::gc_sample_fatv(&to_rat(epsilon)?, &to_rat(delta)?, d, &to_rat(kappa)?))
}

/// Sufficient sample size for empirical risk minimization.
#[pyfunction]
#[pyo3(signature = (epsilon, delta, d, kappa, use_fatv=false))]
fn erm_sample(epsilon: Pair, delta: Pair, d: usize, kappa: Pair, use_fatv: bool) -> PyResult<u64> {
    ok(bounds::erm_sample(&to_rat(epsilon)?, &to_rat(delta)?, d, &to_rat(kappa)?, use_fatv))
}

/// Blocked-learner shape for the given targets: (k, n1, n2, total).
#[pyfunction]
#[pyo3(signature = (epsilon, delta, gamma, d, c=8))]
fn learner_params(
    epsilon: Pair,
    delta: Pair,
    gamma: Pair,
    d: usize,
    c: u32,
) -> PyResult<(u64, u64, u64, u64)> {
    let p =
        ok(simulate::learner_params(to_rat(epsilon)?, to_rat(delta)?, to_rat(gamma)?, d, c))?;
    Ok((p.k, p.n1, p.n2, p.total()))
}

/// Run one self-verification criterion: (pass, name, detail).
#[pyfunction]
#[pyo3(signature = (id, seed=7, jobs=1))]
fn verify_criterion(id: usize, seed: u64, jobs: usize) -> PyResult<(bool, String, String)> {
    let r = ok(verify::run_criterion(id, seed, jobs))?;
    Ok((r.pass, r.name.to_string(), r.detail))
}

#[pymodule]
fn scaledim_py(m: &Bound<PyModule>) -> PyResult<()> {
    m.add_class::<PyFunctionClass>()?;
    m.add_function(wrap_pyfunction!(vcdim_star, m)?)?;
    m.add_function(wrap_pyfunction!(predict_aggregate, m)?)?;
    m.add_function(wrap_pyfunction!(predict_bisect, m)?)?;
    m.add_function(wrap_pyfunction!(game_exhaustive, m)?)?;
    m.add_function(wrap_pyfunction!(game_mc, m)?)?;
    m.add_function(wrap_pyfunction!(gc_deviation_exhaustive, m)?)?;
    m.add_function(wrap_pyfunction!(agnostic_trial, m)?)?;
    m.add_function(wrap_pyfunction!(hoeffding_tail, m)?)?;
    m.add_function(wrap_pyfunction!(pack_bound_fatv_ln, m)?)?;
    m.add_function(wrap_pyfunction!(pack_bound_fat, m)?)?;
    m.add_function(wrap_pyfunction!(inverse_sample_size, m)?)?;
    m.add_function(wrap_pyfunction!(gc_sample_fat, m)?)?;
    m.add_function(wrap_pyfunction!(gc_sample_fatv, m)?)?;
    m.add_function(wrap_pyfunction!(erm_sample, m)?)?;
    m.add_function(wrap_pyfunction!(learner_params, m)?)?;
    m.add_function(wrap_pyfunction!(verify_criterion, m)?)?;
    Ok(())
}
