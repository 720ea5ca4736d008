//! Finite function classes on a shared value grid, ternary classes,
//! discrete distributions, and the primitive maps between them: the
//! thresholding map `psi`, grid quantization, normalized l1 distance, and
//! restriction to a point sequence.

use crate::value::{format_rat, is_unit_interval, rat_to_f64, Rat, Value};
use crate::{Error, Result};
use num::integer::lcm;
use num::rational::Ratio;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Ternary label: 0, don't-care, or 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Ternary {
    Zero,
    Star,
    One,
}

impl Ternary {
    pub fn as_bit(self) -> Option<bool> {
        match self {
            Ternary::Zero => Some(false),
            Ternary::One => Some(true),
            Ternary::Star => None,
        }
    }

    pub fn from_bit(b: bool) -> Self {
        if b {
            Ternary::One
        } else {
            Ternary::Zero
        }
    }
}

impl std::fmt::Display for Ternary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Ternary::Zero => write!(f, "0"),
            Ternary::Star => write!(f, "*"),
            Ternary::One => write!(f, "1"),
        }
    }
}

/// Threshold map with a dead zone of half-width `gamma` around `r`:
/// values at distance >= gamma map to a bit, everything nearer maps to Star.
pub fn psi(y: Rat, r: Rat, gamma: Rat) -> Result<Ternary> {
    crate::value::require_positive("gamma", &gamma)?;
    Ok(if y >= r + gamma {
        Ternary::One
    } else if y <= r - gamma {
        Ternary::Zero
    } else {
        Ternary::Star
    })
}

/// Finite class of functions from a named finite domain into [0, 1].
/// All values share one positive denominator; `values[f][x]` is the
/// numerator of function `f` at point `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionClass {
    domain: Vec<String>,
    den: i64,
    values: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct ClassFile {
    denominator: i64,
    domain: Vec<String>,
    functions: Vec<Vec<i64>>,
}

impl FunctionClass {
    pub fn new(domain: Vec<String>, den: i64, values: Vec<Vec<i64>>) -> Result<Self> {
        if den < 1 {
            return Err(Error::InvalidParam(format!("denominator must be >= 1, got {den}")));
        }
        if domain.is_empty() {
            return Err(Error::InvalidParam("domain must be non-empty".into()));
        }
        for (i, row) in values.iter().enumerate() {
            if row.len() != domain.len() {
                return Err(Error::LengthMismatch(format!(
                    "function {i} has {} values for {} domain points",
                    row.len(),
                    domain.len()
                )));
            }
            if let Some(v) = row.iter().find(|v| **v < 0 || **v > den) {
                return Err(Error::InvalidParam(format!(
                    "function {i} has numerator {v} outside [0, {den}]"
                )));
            }
        }
        if values.is_empty() {
            return Err(Error::InvalidParam("class must contain at least one function".into()));
        }
        Ok(FunctionClass { domain, den, values })
    }

    /// Build from exact rational rows; the grid becomes the least common
    /// refinement of all row denominators.
    pub fn from_rows(domain: Vec<String>, rows: &[Vec<Rat>]) -> Result<Self> {
        let mut den: i64 = 1;
        for row in rows {
            for v in row {
                if !is_unit_interval(v) {
                    return Err(Error::InvalidParam(format!(
                        "value {} outside [0, 1]",
                        format_rat(v)
                    )));
                }
                den = lcm(den, *v.denom());
            }
        }
        let values = rows
            .iter()
            .map(|row| row.iter().map(|v| v.numer() * (den / v.denom())).collect())
            .collect();
        Self::new(domain, den, values)
    }

    /// Anonymous domain labels "x0".."x{n-1}".
    pub fn default_domain(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("x{i}")).collect()
    }

    pub fn n_points(&self) -> usize {
        self.domain.len()
    }

    pub fn n_functions(&self) -> usize {
        self.values.len()
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    pub fn domain(&self) -> &[String] {
        &self.domain
    }

    pub fn numerators(&self, f: usize) -> &[i64] {
        &self.values[f]
    }

    pub fn value(&self, f: usize, x: usize) -> Value {
        Ratio::new(self.values[f][x], self.den)
    }

    pub fn row(&self, f: usize) -> Vec<Value> {
        self.values[f].iter().map(|n| Ratio::new(*n, self.den)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<Value>> {
        (0..self.n_functions()).map(|f| self.row(f)).collect()
    }

    /// Distinct numerator values appearing at point `x`, ascending.
    pub fn values_at(&self, x: usize) -> Vec<i64> {
        let mut vs: Vec<i64> = self.values.iter().map(|row| row[x]).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn check_point(&self, x: usize) -> Result<()> {
        if x >= self.n_points() {
            return Err(Error::IndexOutOfRange { what: "domain point", index: x, size: self.n_points() });
        }
        Ok(())
    }

    /// Class restricted to a point sequence (duplicates allowed). Domain
    /// labels follow the sequence; rows keep their order and may collide.
    pub fn restrict_class(&self, xi: &[usize]) -> Result<FunctionClass> {
        for &x in xi {
            self.check_point(x)?;
        }
        if xi.is_empty() {
            return Err(Error::InvalidParam("restriction sequence must be non-empty".into()));
        }
        let domain = xi.iter().map(|&x| self.domain[x].clone()).collect();
        let values = self
            .values
            .iter()
            .map(|row| xi.iter().map(|&x| row[x]).collect())
            .collect();
        FunctionClass::new(domain, self.den, values)
    }

    pub fn to_json(&self) -> String {
        let file = ClassFile {
            denominator: self.den,
            domain: self.domain.clone(),
            functions: self.values.clone(),
        };
        serde_json::to_string_pretty(&file).expect("serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: ClassFile =
            serde_json::from_str(text).map_err(|e| Error::Format(format!("class file: {e}")))?;
        Self::new(file.domain, file.denominator, file.functions)
    }

    pub fn save(&self, path: &std::path::Path) -> Result<()> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json(&text)
    }
}

/// Apply `psi` entrywise to every function in the class.
pub fn psi_class(class: &FunctionClass, r: Rat, gamma: Rat) -> Result<TernaryClass> {
    crate::value::require_positive("gamma", &gamma)?;
    let rows = class
        .values
        .iter()
        .map(|row| {
            row.iter()
                .map(|n| psi(Ratio::new(*n, class.den), r, gamma).expect("gamma checked"))
                .collect()
        })
        .collect();
    TernaryClass::new(class.domain.clone(), rows)
}

/// Floor-quantize every value onto the grid of step `alpha`. The output
/// grid is the least common refinement of the input grid and `alpha`.
pub fn quantize(class: &FunctionClass, alpha: Rat) -> Result<FunctionClass> {
    crate::value::require_positive("alpha", &alpha)?;
    let p = *alpha.numer();
    let q = *alpha.denom();
    let den = lcm(class.den, q);
    let values = class
        .values
        .iter()
        .map(|row| {
            row.iter()
                .map(|n| {
                    // floor((n/den_in) / (p/q)) * p/q, over the refined grid
                    let steps = (n * q).div_euclid(class.den * p);
                    steps * p * (den / q)
                })
                .collect()
        })
        .collect();
    FunctionClass::new(class.domain.clone(), den, values)
}

/// Floor-quantize a raw rational vector onto the grid of step `alpha`.
pub fn quantize_row(row: &[Rat], alpha: Rat) -> Result<Vec<Rat>> {
    crate::value::require_positive("alpha", &alpha)?;
    Ok(row.iter().map(|v| alpha * (v / alpha).floor()).collect())
}

/// Normalized l1 distance: mean absolute coordinate difference.
pub fn l1(v: &[Rat], w: &[Rat]) -> Result<Rat> {
    if v.len() != w.len() || v.is_empty() {
        return Err(Error::LengthMismatch(format!(
            "l1 needs two equal non-empty vectors, got lengths {} and {}",
            v.len(),
            w.len()
        )));
    }
    let mut sum = Rat::zero();
    for (a, b) in v.iter().zip(w) {
        sum += (a - b).abs();
    }
    Ok(sum / Rat::from_integer(v.len() as i64))
}

/// Restriction of every function to a point sequence, as raw value rows.
/// Duplicate indices are allowed and produce duplicate columns.
pub fn restrict(class: &FunctionClass, xi: &[usize]) -> Result<Vec<Vec<Value>>> {
    Ok(class.restrict_class(xi)?.rows())
}

/// Class of ternary-valued rows on a named finite domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryClass {
    domain: Vec<String>,
    rows: Vec<Vec<Ternary>>,
}

impl TernaryClass {
    pub fn new(domain: Vec<String>, rows: Vec<Vec<Ternary>>) -> Result<Self> {
        if domain.is_empty() {
            return Err(Error::InvalidParam("domain must be non-empty".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != domain.len() {
                return Err(Error::LengthMismatch(format!(
                    "row {i} has {} values for {} domain points",
                    row.len(),
                    domain.len()
                )));
            }
        }
        if rows.is_empty() {
            return Err(Error::InvalidParam("class must contain at least one row".into()));
        }
        Ok(TernaryClass { domain, rows })
    }

    pub fn n_points(&self) -> usize {
        self.domain.len()
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn domain(&self) -> &[String] {
        &self.domain
    }

    pub fn row(&self, i: usize) -> &[Ternary] {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Vec<Ternary>] {
        &self.rows
    }

    pub fn get(&self, i: usize, x: usize) -> Ternary {
        self.rows[i][x]
    }
}

/// Discrete distribution over the points of a class domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscreteDistribution {
    weights: Vec<Rat>,
}

#[derive(Serialize, Deserialize)]
struct DistFile {
    weights: Vec<(i64, i64)>,
}

impl DiscreteDistribution {
    pub fn new(weights: Vec<Rat>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidParam("distribution must have support".into()));
        }
        let mut sum = Rat::zero();
        for w in &weights {
            if w.is_negative() {
                return Err(Error::InvalidParam(format!("negative weight {}", format_rat(w))));
            }
            sum += w;
        }
        if sum != Rat::one() {
            return Err(Error::InvalidParam(format!(
                "weights must sum to 1, got {}",
                format_rat(&sum)
            )));
        }
        Ok(DiscreteDistribution { weights })
    }

    pub fn uniform(n: usize) -> Self {
        let w = Ratio::new(1, n as i64);
        DiscreteDistribution { weights: vec![w; n] }
    }

    pub fn n_points(&self) -> usize {
        self.weights.len()
    }

    pub fn weight(&self, x: usize) -> Rat {
        self.weights[x]
    }

    pub fn weights(&self) -> &[Rat] {
        &self.weights
    }

    /// Exact expectation of a value row under this distribution.
    pub fn expectation(&self, row: &[Rat]) -> Result<Rat> {
        if row.len() != self.weights.len() {
            return Err(Error::LengthMismatch(format!(
                "expectation over {} weights of a row of length {}",
                self.weights.len(),
                row.len()
            )));
        }
        let mut sum = Rat::zero();
        for (w, v) in self.weights.iter().zip(row) {
            sum += w * v;
        }
        Ok(sum)
    }

    /// Deterministic sampler: precomputes cumulative thresholds once.
    pub fn sampler(&self) -> DistSampler {
        let mut cum = Vec::with_capacity(self.weights.len());
        let mut acc = Rat::zero();
        for w in &self.weights {
            acc += w;
            cum.push(acc);
        }
        DistSampler { cum }
    }

    pub fn to_json(&self) -> String {
        let file = DistFile {
            weights: self.weights.iter().map(|w| (*w.numer(), *w.denom())).collect(),
        };
        serde_json::to_string_pretty(&file).expect("serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: DistFile = serde_json::from_str(text)
            .map_err(|e| Error::Format(format!("distribution file: {e}")))?;
        let weights = file
            .weights
            .into_iter()
            .map(|(n, d)| {
                if d <= 0 {
                    Err(Error::Format(format!("weight denominator {d} must be positive")))
                } else {
                    Ok(Ratio::new(n, d))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(weights)
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json(&text)
    }
}

/// Maps a uniform u64 draw to a point index by exact comparison of
/// draw/2^64 against the cumulative weights. The per-point bias is below
/// 2^-64 (the grid of representable draws), which the Monte Carlo standard
/// errors dwarf.
pub struct DistSampler {
    cum: Vec<Rat>,
}

impl DistSampler {
    pub fn index_for(&self, draw: u64) -> usize {
        let d = draw as u128;
        for (i, c) in self.cum.iter().enumerate() {
            // draw/2^64 < c.numer/c.denom  <=>  draw * denom < numer << 64
            let lhs = d * (*c.denom() as u128);
            let rhs = (*c.numer() as u128) << 64;
            if lhs < rhs {
                return i;
            }
        }
        self.cum.len() - 1
    }

    pub fn draw<R: rand::RngCore>(&self, rng: &mut R) -> usize {
        self.index_for(rng.next_u64())
    }
}

/// Prefix of a prediction game: (point index, observed value) pairs.
pub type LabeledSample = Vec<(usize, Value)>;

#[derive(Serialize, Deserialize)]
struct PrefixFile {
    pairs: Vec<(usize, i64, i64)>,
}

/// Parse a labeled-sample file: {"pairs": [[point, label_num, label_den], ...]}.
pub fn labeled_sample_from_json(text: &str) -> Result<LabeledSample> {
    let file: PrefixFile =
        serde_json::from_str(text).map_err(|e| Error::Format(format!("prefix file: {e}")))?;
    file.pairs
        .into_iter()
        .map(|(x, n, d)| {
            if d <= 0 {
                return Err(Error::Format(format!("label denominator {d} must be positive")));
            }
            let v = Ratio::new(n, d);
            if !is_unit_interval(&v) {
                return Err(Error::Format(format!("label {} outside [0, 1]", format_rat(&v))));
            }
            Ok((x, v))
        })
        .collect()
}

pub fn labeled_sample_to_json(sample: &LabeledSample) -> String {
    let file = PrefixFile {
        pairs: sample.iter().map(|(x, v)| (*x, *v.numer(), *v.denom())).collect(),
    };
    serde_json::to_string_pretty(&file).expect("serialization cannot fail")
}

/// Finite joint distribution over (point, label) pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JointSample {
    triples: Vec<(usize, Value, Rat)>,
}

#[derive(Serialize, Deserialize)]
struct JointFile {
    triples: Vec<(usize, i64, i64, i64, i64)>,
}

impl JointSample {
    pub fn new(triples: Vec<(usize, Value, Rat)>) -> Result<Self> {
        if triples.is_empty() {
            return Err(Error::InvalidParam("joint distribution must have support".into()));
        }
        let mut sum = Rat::zero();
        for (_, y, w) in &triples {
            if !is_unit_interval(y) {
                return Err(Error::InvalidParam(format!("label {} outside [0, 1]", format_rat(y))));
            }
            if w.is_negative() {
                return Err(Error::InvalidParam(format!("negative weight {}", format_rat(w))));
            }
            sum += w;
        }
        if sum != Rat::one() {
            return Err(Error::InvalidParam(format!(
                "joint weights must sum to 1, got {}",
                format_rat(&sum)
            )));
        }
        Ok(JointSample { triples })
    }

    pub fn triples(&self) -> &[(usize, Value, Rat)] {
        &self.triples
    }

    pub fn max_point(&self) -> usize {
        self.triples.iter().map(|t| t.0).max().unwrap_or(0)
    }

    pub fn sampler(&self) -> DistSampler {
        let mut cum = Vec::with_capacity(self.triples.len());
        let mut acc = Rat::zero();
        for (_, _, w) in &self.triples {
            acc += w;
            cum.push(acc);
        }
        DistSampler { cum }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: JointFile =
            serde_json::from_str(text).map_err(|e| Error::Format(format!("joint file: {e}")))?;
        let triples = file
            .triples
            .into_iter()
            .map(|(x, yn, yd, wn, wd)| {
                if yd <= 0 || wd <= 0 {
                    return Err(Error::Format("denominators must be positive".into()));
                }
                Ok((x, Ratio::new(yn, yd), Ratio::new(wn, wd)))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(triples)
    }

    pub fn to_json(&self) -> String {
        let file = JointFile {
            triples: self
                .triples
                .iter()
                .map(|(x, y, w)| (*x, *y.numer(), *y.denom(), *w.numer(), *w.denom()))
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("serialization cannot fail")
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json(&text)
    }
}

/// Convenience for CSV output: "num,den,decimal" triple for one rational.
pub fn csv_rat(x: &Rat) -> String {
    format!("{},{},{}", x.numer(), x.denom(), rat_to_f64(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::rat;

    fn demo_class() -> FunctionClass {
        // den 10, three functions on two points
        FunctionClass::new(
            FunctionClass::default_domain(2),
            10,
            vec![vec![7, 0], vec![4, 5], vec![10, 10]],
        )
        .unwrap()
    }

    #[test]
    fn psi_boundaries() {
        let r = rat(1, 2);
        let g = rat(1, 10);
        assert_eq!(psi(rat(7, 10), r, g).unwrap(), Ternary::One);
        assert_eq!(psi(rat(3, 5), r, g).unwrap(), Ternary::One); // exactly r + gamma
        assert_eq!(psi(rat(9, 20), r, g).unwrap(), Ternary::Star);
        assert_eq!(psi(rat(2, 5), r, g).unwrap(), Ternary::Zero); // exactly r - gamma
        assert_eq!(psi(rat(1, 10), r, g).unwrap(), Ternary::Zero);
        assert!(psi(rat(1, 2), r, rat(0, 1)).is_err());
        assert!(psi(rat(1, 2), r, rat(-1, 10)).is_err());
    }

    #[test]
    fn psi_class_matches_entrywise() {
        let c = demo_class();
        let t = psi_class(&c, rat(1, 2), rat(1, 10)).unwrap();
        for f in 0..c.n_functions() {
            for x in 0..c.n_points() {
                assert_eq!(t.get(f, x), psi(c.value(f, x), rat(1, 2), rat(1, 10)).unwrap());
            }
        }
    }

    #[test]
    fn quantize_floor_and_grid() {
        let c = demo_class();
        let q = quantize(&c, rat(1, 4)).unwrap();
        // 7/10 -> 1/2, 4/10 -> 1/4, 1 -> 1, 0 -> 0, 5/10 -> 1/2
        assert_eq!(q.value(0, 0), rat(1, 2));
        assert_eq!(q.value(1, 0), rat(1, 4));
        assert_eq!(q.value(1, 1), rat(1, 2));
        assert_eq!(q.value(2, 0), rat(1, 1));
        // least common refinement of 1/10 and 1/4 grids
        assert_eq!(q.denominator(), 20);
        // idempotence on the refined grid
        let qq = quantize(&q, rat(1, 4)).unwrap();
        assert_eq!(qq.rows(), q.rows());
    }

    #[test]
    fn l1_examples() {
        let v = vec![rat(0, 1), rat(1, 2)];
        let w = vec![rat(1, 2), rat(1, 1)];
        assert_eq!(l1(&v, &w).unwrap(), rat(1, 2));
        assert_eq!(l1(&v, &v).unwrap(), rat(0, 1));
        assert!(l1(&v, &w[..1].to_vec()).is_err());
        assert!(l1(&[], &[]).is_err());
    }

    #[test]
    fn restrict_matches_literal_gather() {
        let c = demo_class();
        let xi = vec![1usize, 0, 1];
        let got = restrict(&c, &xi).unwrap();
        // second, deliberately naive gather
        let mut want = Vec::new();
        for f in 0..c.n_functions() {
            let mut row = Vec::new();
            for &x in &xi {
                row.push(c.value(f, x));
            }
            want.push(row);
        }
        assert_eq!(got, want);
        assert!(restrict(&c, &[5]).is_err());
        let id = restrict(&c, &[0, 1]).unwrap();
        assert_eq!(id, c.rows());
    }

    #[test]
    fn class_json_round_trip_and_field_order() {
        let c = demo_class();
        let text = c.to_json();
        let back = FunctionClass::from_json(&text).unwrap();
        assert_eq!(back, c);
        // field order in the file must not matter
        let reordered = r#"{"functions": [[1,2]], "domain": ["a","b"], "denominator": 2}"#;
        let c2 = FunctionClass::from_json(reordered).unwrap();
        assert_eq!(c2.value(0, 1), rat(1, 1));
        // malformed inputs are rejected, not mangled
        assert!(FunctionClass::from_json("{}").is_err());
        assert!(FunctionClass::from_json(
            r#"{"denominator": 2, "domain": ["a"], "functions": [[3]]}"#
        )
        .is_err());
        assert!(FunctionClass::from_json(
            r#"{"denominator": 0, "domain": ["a"], "functions": [[0]]}"#
        )
        .is_err());
    }

    #[test]
    fn distribution_validation_and_expectation() {
        assert!(DiscreteDistribution::new(vec![rat(1, 2), rat(1, 3)]).is_err());
        assert!(DiscreteDistribution::new(vec![rat(3, 2), rat(-1, 2)]).is_err());
        let d = DiscreteDistribution::new(vec![rat(1, 4), rat(3, 4)]).unwrap();
        assert_eq!(d.expectation(&[rat(1, 1), rat(1, 3)]).unwrap(), rat(1, 2));
        let u = DiscreteDistribution::uniform(4);
        assert_eq!(u.weight(3), rat(1, 4));
    }

    #[test]
    fn sampler_hits_every_zone() {
        let d = DiscreteDistribution::new(vec![rat(1, 4), rat(1, 2), rat(1, 4)]).unwrap();
        let s = d.sampler();
        assert_eq!(s.index_for(0), 0);
        assert_eq!(s.index_for(u64::MAX), 2);
        // exact boundary: draw/2^64 == 1/4 selects the second zone
        assert_eq!(s.index_for(1u64 << 62), 1);
        assert_eq!(s.index_for((1u64 << 62) - 1), 0);
        assert_eq!(s.index_for(3u64 << 62), 2);
    }

    #[test]
    fn joint_sample_round_trip() {
        let p = JointSample::new(vec![
            (0, rat(1, 2), rat(1, 3)),
            (1, rat(0, 1), rat(2, 3)),
        ])
        .unwrap();
        let back = JointSample::from_json(&p.to_json()).unwrap();
        assert_eq!(back, p);
        assert!(JointSample::new(vec![(0, rat(1, 2), rat(1, 2))]).is_err());
    }

    #[test]
    fn labeled_sample_round_trip() {
        let s: LabeledSample = vec![(0, rat(1, 2)), (3, rat(0, 1))];
        let back = labeled_sample_from_json(&labeled_sample_to_json(&s)).unwrap();
        assert_eq!(back, s);
        assert!(labeled_sample_from_json(r#"{"pairs": [[0, 3, 2]]}"#).is_err());
    }
}
