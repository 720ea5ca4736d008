//! Prediction strategies. The base layer is a one-inclusion-graph
//! predictor over binary patterns with an orientation of minimum max
//! out-degree. On top of it sits the don't-care wrapper for ternary
//! targets, and above that the threshold-aggregation strategy that
//! predicts a [0,1] value by counting which thresholds vote high.
//!
//! Everything is deterministic: vertices and edges are kept in
//! lexicographic order and every tie breaks toward the smaller index.

use crate::class::{psi, psi_class, FunctionClass, LabeledSample, Ternary, TernaryClass};
use crate::value::{format_rat, is_unit_interval, rat, rat_floor, Rat};
use crate::{Error, Result};
use num::{One, Signed, Zero};

/// Edge of the one-inclusion graph: `lo < hi` are vertex indices whose
/// patterns differ exactly at `coord`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Edge {
    pub lo: usize,
    pub hi: usize,
    pub coord: usize,
}

/// One-inclusion graph over distinct binary patterns, with an orientation
/// minimizing the maximum out-degree.
#[derive(Clone, Debug)]
pub struct OneInclusionModel {
    vertices: Vec<Vec<bool>>,
    edges: Vec<Edge>,
    /// true: lo -> hi (head is hi).
    orientation: Vec<bool>,
    max_out_degree: usize,
}

impl OneInclusionModel {
    pub fn n_coords(&self) -> usize {
        self.vertices[0].len()
    }

    pub fn vertices(&self) -> &[Vec<bool>] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn head(&self, e: usize) -> usize {
        if self.orientation[e] {
            self.edges[e].hi
        } else {
            self.edges[e].lo
        }
    }

    pub fn tail(&self, e: usize) -> usize {
        if self.orientation[e] {
            self.edges[e].lo
        } else {
            self.edges[e].hi
        }
    }

    pub fn max_out_degree(&self) -> usize {
        self.max_out_degree
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.vertices.len()];
        for e in 0..self.edges.len() {
            deg[self.tail(e)] += 1;
        }
        deg
    }
}

/// Orient edges so the maximum out-degree is as small as possible.
/// For each candidate bound k (ascending), overfull vertices shed load by
/// reversing a directed path to a vertex below k; if an overfull vertex
/// cannot reach one, its reachable set alone forces a vertex above k under
/// any orientation, so k is infeasible and the next k is tried.
fn orient_min_out_degree(n: usize, edges: &[Edge]) -> (Vec<bool>, usize) {
    let mut orientation = vec![true; edges.len()];
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, e) in edges.iter().enumerate() {
        adj[e.lo].push(i);
        adj[e.hi].push(i);
    }
    let mut out = vec![0usize; n];
    for e in edges {
        out[e.lo] += 1;
    }
    for k in 0..=edges.len() {
        'drain: loop {
            let Some(s) = (0..n).find(|&v| out[v] > k) else {
                return (orientation, k);
            };
            // BFS along oriented edges for a vertex with out-degree < k
            let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
            let mut seen = vec![false; n];
            seen[s] = true;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &ei in &adj[v] {
                    let tail = if orientation[ei] { edges[ei].lo } else { edges[ei].hi };
                    if tail != v {
                        continue;
                    }
                    let head = if orientation[ei] { edges[ei].hi } else { edges[ei].lo };
                    if seen[head] {
                        continue;
                    }
                    seen[head] = true;
                    parent[head] = Some((v, ei));
                    if out[head] < k {
                        // reverse the path s -> head
                        let mut cur = head;
                        while let Some((prev, pei)) = parent[cur] {
                            orientation[pei] = !orientation[pei];
                            cur = prev;
                        }
                        out[s] -= 1;
                        out[head] += 1;
                        continue 'drain;
                    }
                    queue.push_back(head);
                }
            }
            break; // s is stuck: k infeasible
        }
    }
    unreachable!("out-degree bounded by edge count");
}

/// Build the one-inclusion graph of a pattern set: vertices are the
/// distinct patterns in lexicographic order, edges join patterns at
/// Hamming distance one, and the orientation minimizes max out-degree.
pub fn build_one_inclusion(patterns: &[Vec<bool>]) -> Result<OneInclusionModel> {
    if patterns.is_empty() {
        return Err(Error::InvalidParam("pattern set must be non-empty".into()));
    }
    let len = patterns[0].len();
    if len == 0 || patterns.iter().any(|p| p.len() != len) {
        return Err(Error::LengthMismatch("patterns must share a positive length".into()));
    }
    let mut vertices: Vec<Vec<bool>> = patterns.to_vec();
    vertices.sort();
    vertices.dedup();
    let mut edges = Vec::new();
    for a in 0..vertices.len() {
        for b in a + 1..vertices.len() {
            let mut diff = None;
            for c in 0..len {
                if vertices[a][c] != vertices[b][c] {
                    if diff.is_some() {
                        diff = None;
                        break;
                    }
                    diff = Some(c);
                }
            }
            if let Some(coord) = diff {
                edges.push(Edge { lo: a, hi: b, coord });
            }
        }
    }
    let (orientation, max_out_degree) = orient_min_out_degree(vertices.len(), &edges);
    Ok(OneInclusionModel { vertices, edges, orientation, max_out_degree })
}

/// Predict the query coordinate of the target pattern from observed
/// coordinates. Restricting to vertices matching the prefix: if they agree
/// at the query, that bit wins; if they split and an oriented edge crosses
/// the split at the query coordinate, the head's bit wins (so a target
/// sitting at the tail charges the mistake to that vertex's out-degree).
/// A split with no crossing edge (possible only when the prefix leaves
/// non-query coordinates free) falls back to the first consistent vertex.
pub fn oig_predict(
    model: &OneInclusionModel,
    prefix: &[(usize, bool)],
    query: usize,
) -> Result<bool> {
    let len = model.n_coords();
    if query >= len {
        return Err(Error::IndexOutOfRange { what: "query coordinate", index: query, size: len });
    }
    for &(c, _) in prefix {
        if c >= len {
            return Err(Error::IndexOutOfRange { what: "prefix coordinate", index: c, size: len });
        }
    }
    let consistent: Vec<usize> = (0..model.vertices.len())
        .filter(|&v| prefix.iter().all(|&(c, b)| model.vertices[v][c] == b))
        .collect();
    let Some(&first) = consistent.first() else {
        return Err(Error::InconsistentPrefix);
    };
    let bit = model.vertices[first][query];
    if consistent.iter().all(|&v| model.vertices[v][query] == bit) {
        return Ok(bit);
    }
    for e in 0..model.edges.len() {
        let Edge { lo, hi, coord } = model.edges[e];
        if coord == query && consistent.contains(&lo) && consistent.contains(&hi) {
            return Ok(model.vertices[model.head(e)][query]);
        }
    }
    Ok(bit)
}

/// Don't-care prediction: observed star labels carry no information and
/// are dropped; rows with a star on any informative point (or the query)
/// are excluded; the survivors' binary restriction feeds the
/// one-inclusion predictor. With nothing left to consult, or a prefix no
/// row matches, the answer is 0: both cases force the truth at the query
/// to be star (or the target outside the class), so no mistake is scored.
pub fn cwdc_predict(
    g: &TernaryClass,
    prefix: &[(usize, Ternary)],
    query: usize,
) -> Result<bool> {
    let n = g.n_points();
    if query >= n {
        return Err(Error::IndexOutOfRange { what: "query point", index: query, size: n });
    }
    let mut labels: Vec<Option<bool>> = vec![None; n];
    for &(x, t) in prefix {
        if x >= n {
            return Err(Error::IndexOutOfRange { what: "prefix point", index: x, size: n });
        }
        let Some(b) = t.as_bit() else { continue };
        if let Some(prev) = labels[x] {
            if prev != b {
                // no single target produces both labels; truth is unconstrained
                return Ok(false);
            }
        }
        labels[x] = Some(b);
    }
    let mut coords: Vec<usize> = labels
        .iter()
        .enumerate()
        .filter_map(|(x, l)| l.map(|_| x))
        .collect();
    if !coords.contains(&query) {
        coords.push(query);
        coords.sort_unstable();
    }
    let patterns: Vec<Vec<bool>> = (0..g.n_rows())
        .filter_map(|i| {
            coords
                .iter()
                .map(|&x| g.get(i, x).as_bit())
                .collect::<Option<Vec<bool>>>()
        })
        .collect();
    if patterns.is_empty() {
        return Ok(false);
    }
    let model = build_one_inclusion(&patterns)?;
    // an observation at the query point itself stays in the filter: the
    // consistent set then agrees there and the prediction repeats it
    let oig_prefix: Vec<(usize, bool)> = coords
        .iter()
        .enumerate()
        .filter_map(|(j, &x)| labels[x].map(|b| (j, b)))
        .collect();
    let q = coords.iter().position(|&x| x == query).expect("query inserted above");
    match oig_predict(&model, &oig_prefix, q) {
        Ok(bit) => Ok(bit),
        Err(Error::InconsistentPrefix) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Parameters of the aggregation predictor: band half-width `gamma` and
/// threshold pitch `tau`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AggregatorConfig {
    gamma: Rat,
    tau: Rat,
}

impl AggregatorConfig {
    pub fn new(gamma: Rat, tau: Rat) -> Result<Self> {
        crate::value::require_positive("gamma", &gamma)?;
        if !tau.is_positive() || tau > Rat::one() {
            return Err(Error::InvalidParam(format!(
                "tau must be in (0, 1], got {}",
                format_rat(&tau)
            )));
        }
        Ok(AggregatorConfig { gamma, tau })
    }

    pub fn gamma(&self) -> Rat {
        self.gamma
    }

    pub fn tau(&self) -> Rat {
        self.tau
    }

    /// The threshold grid {tau, 2*tau, ..., floor(1/tau)*tau}.
    pub fn thresholds(&self) -> Vec<Rat> {
        let count = rat_floor(&(Rat::one() / self.tau));
        (1..=count).map(|j| self.tau * rat(j, 1)).collect()
    }
}

/// Threshold votes and the value they aggregate to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AggregateOutcome {
    pub prediction: Rat,
    /// Vote per threshold, aligned with `AggregatorConfig::thresholds()`.
    pub bits: Vec<bool>,
}

/// Run one don't-care subgame per threshold r: the prefix labels are
/// squashed through the r-band map, the class through the same map, and
/// the vote says whether the target looks >= r. The prediction is tau
/// times the number of high votes.
pub fn aggregate_predict(
    f: &FunctionClass,
    cfg: &AggregatorConfig,
    prefix: &LabeledSample,
    query: usize,
) -> Result<AggregateOutcome> {
    f.check_point(query)?;
    for &(x, y) in prefix {
        f.check_point(x)?;
        if !is_unit_interval(&y) {
            return Err(Error::InvalidParam(format!(
                "prefix label {} outside [0, 1]",
                format_rat(&y)
            )));
        }
    }
    let mut bits = Vec::new();
    for r in cfg.thresholds() {
        let g = psi_class(f, r, cfg.gamma)?;
        let translated: Vec<(usize, Ternary)> = prefix
            .iter()
            .map(|&(x, y)| Ok((x, psi(y, r, cfg.gamma)?)))
            .collect::<Result<_>>()?;
        bits.push(cwdc_predict(&g, &translated, query)?);
    }
    let count = bits.iter().filter(|b| **b).count();
    Ok(AggregateOutcome { prediction: cfg.tau * rat(count as i64, 1), bits })
}

/// Both sides of the per-instance aggregation error bound: for any truth
/// y and any votes b, |y - tau*sum(b)| is strictly below
/// 2*tau + gamma + tau * (number of votes that disagree with the banded
/// truth where the banded truth is decisive).
pub fn check_aggregation_inequality(
    y: Rat,
    cfg: &AggregatorConfig,
    b: &[bool],
) -> Result<(Rat, Rat, bool)> {
    if !is_unit_interval(&y) {
        return Err(Error::InvalidParam(format!("y = {} outside [0, 1]", format_rat(&y))));
    }
    let thresholds = cfg.thresholds();
    if b.len() != thresholds.len() {
        return Err(Error::LengthMismatch(format!(
            "{} votes for {} thresholds",
            b.len(),
            thresholds.len()
        )));
    }
    let count = b.iter().filter(|x| **x).count();
    let lhs = (y - cfg.tau * rat(count as i64, 1)).abs();
    let mut disagreements = 0i64;
    for (j, r) in thresholds.iter().enumerate() {
        match psi(y, *r, cfg.gamma)?.as_bit() {
            Some(truth_bit) if truth_bit != b[j] => disagreements += 1,
            _ => {}
        }
    }
    let rhs = rat(2, 1) * cfg.tau + cfg.gamma + cfg.tau * rat(disagreements, 1);
    Ok((lhs, rhs, lhs < rhs))
}

/// Bisection variant: halve [l, u] by one threshold vote per step and
/// emit the binary expansion of the visited midpoints. Kept only for
/// experiments that need it as a foil; the thresholds it queries depend
/// on earlier answers, so the aggregation error bound does not apply to
/// it and nothing here should treat its output as covered by one.
pub fn bisect_predict(
    f: &FunctionClass,
    cfg: &AggregatorConfig,
    prefix: &LabeledSample,
    query: usize,
    depth: usize,
) -> Result<Rat> {
    f.check_point(query)?;
    if depth == 0 || depth > 40 {
        return Err(Error::InvalidParam(format!("depth must be in 1..=40, got {depth}")));
    }
    let mut lo = Rat::zero();
    let mut hi = Rat::one();
    let mut acc = Rat::zero();
    let mut weight = rat(1, 2);
    for _ in 0..depth {
        let r = (lo + hi) / rat(2, 1);
        let g = psi_class(f, r, cfg.gamma)?;
        let translated: Vec<(usize, Ternary)> = prefix
            .iter()
            .map(|&(x, y)| Ok((x, psi(y, r, cfg.gamma)?)))
            .collect::<Result<_>>()?;
        if cwdc_predict(&g, &translated, query)? {
            acc += weight;
            lo = r;
        } else {
            hi = r;
        }
        weight /= rat(2, 1);
    }
    Ok(acc)
}

/// One played round: what was asked, what was answered, what was true.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TranscriptRow {
    pub round: usize,
    pub query: usize,
    pub prediction: Rat,
    pub truth: Rat,
    pub abs_error: Rat,
    /// Per threshold: vote disagreed with the banded truth and the banded
    /// truth was decisive.
    pub threshold_mistakes: Vec<bool>,
}

/// Full record of a played prediction sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PredictorTranscript {
    pub gamma: Rat,
    pub tau: Rat,
    pub rows: Vec<TranscriptRow>,
}

impl PredictorTranscript {
    /// Every stored error equals |prediction - truth|.
    pub fn errors_consistent(&self) -> bool {
        self.rows.iter().all(|r| r.abs_error == (r.prediction - r.truth).abs())
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "round,query,prediction_num,prediction_den,prediction_dec,truth_num,truth_den,truth_dec,abs_error_num,abs_error_den,abs_error_dec,threshold_mistakes\n",
        );
        for r in &self.rows {
            let flags: String =
                r.threshold_mistakes.iter().map(|m| if *m { '1' } else { '0' }).collect();
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                r.round,
                r.query,
                crate::class::csv_rat(&r.prediction),
                crate::class::csv_rat(&r.truth),
                crate::class::csv_rat(&r.abs_error),
                flags
            ));
        }
        out
    }
}

/// Play the aggregation predictor through a labeled sequence: round t
/// predicts the t-th value from the first t-1 observations, then reveals
/// it.
pub fn run_transcript(
    f: &FunctionClass,
    cfg: &AggregatorConfig,
    sample: &LabeledSample,
) -> Result<PredictorTranscript> {
    let thresholds = cfg.thresholds();
    let mut rows = Vec::with_capacity(sample.len());
    for t in 0..sample.len() {
        let (query, truth) = sample[t];
        let prefix: LabeledSample = sample[..t].to_vec();
        let outcome = aggregate_predict(f, cfg, &prefix, query)?;
        let mut mistakes = Vec::with_capacity(thresholds.len());
        for (j, r) in thresholds.iter().enumerate() {
            let flag = match psi(truth, *r, cfg.gamma)?.as_bit() {
                Some(bit) => bit != outcome.bits[j],
                None => false,
            };
            mistakes.push(flag);
        }
        rows.push(TranscriptRow {
            round: t + 1,
            query,
            prediction: outcome.prediction,
            truth,
            abs_error: (outcome.prediction - truth).abs(),
            threshold_mistakes: mistakes,
        });
    }
    Ok(PredictorTranscript { gamma: cfg.gamma, tau: cfg.tau, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_binary_cube, gen_random};
    use crate::value::rat;

    fn patterns(rows: &[&str]) -> Vec<Vec<bool>> {
        rows.iter().map(|r| r.chars().map(|c| c == '1').collect()).collect()
    }

    #[test]
    fn model_shapes() {
        let m = build_one_inclusion(&patterns(&["00", "11"])).unwrap();
        assert_eq!(m.vertices().len(), 2);
        assert!(m.edges().is_empty());
        assert_eq!(m.max_out_degree(), 0);

        let cube: Vec<Vec<bool>> =
            (0..8).map(|k| (0..3).map(|j| (k >> j) & 1 == 1).collect()).collect();
        let m = build_one_inclusion(&cube).unwrap();
        assert_eq!(m.vertices().len(), 8);
        assert_eq!(m.edges().len(), 12);
        assert_eq!(m.max_out_degree(), 2);
        for e in m.edges() {
            let d: usize = m.vertices()[e.lo]
                .iter()
                .zip(&m.vertices()[e.hi])
                .filter(|(a, b)| a != b)
                .count();
            assert_eq!(d, 1);
        }

        let m = build_one_inclusion(&patterns(&["100", "010", "001"])).unwrap();
        assert_eq!(m.vertices().len(), 3);
        assert!(m.edges().is_empty());

        assert!(build_one_inclusion(&[]).is_err());
        assert!(build_one_inclusion(&patterns(&["10", "001"])).is_err());
    }

    #[test]
    fn orientation_is_optimal_against_brute_force() {
        for seed in 0..30u64 {
            let f = gen_random(5, 12, 1, 500 + seed).unwrap();
            let pats: Vec<Vec<bool>> =
                f.rows().iter().map(|r| r.iter().map(|v| *v == rat(1, 1)).collect()).collect();
            let model = build_one_inclusion(&pats).unwrap();
            let e = model.edges().len();
            if e > 12 {
                continue;
            }
            // exhaustive minimum over all 2^e orientations
            let mut best = usize::MAX;
            for mask in 0..(1u32 << e) {
                let mut out = vec![0usize; model.vertices().len()];
                for (i, edge) in model.edges().iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        out[edge.lo] += 1;
                    } else {
                        out[edge.hi] += 1;
                    }
                }
                best = best.min(out.iter().copied().max().unwrap());
            }
            assert_eq!(model.max_out_degree(), best, "seed {seed}");
            let degs = model.out_degrees();
            assert_eq!(degs.iter().copied().max().unwrap(), best);
        }
    }

    #[test]
    fn oig_prediction_rules() {
        let m = build_one_inclusion(&patterns(&["00", "11"])).unwrap();
        assert!(!oig_predict(&m, &[(0, false)], 1).unwrap());
        assert!(oig_predict(&m, &[(0, true)], 1).unwrap());
        assert!(matches!(
            oig_predict(&m, &[(0, true), (1, false)], 1),
            Err(Error::InconsistentPrefix)
        ));

        // two vertices joined by an edge at the query coordinate: the
        // prediction is the head's bit whichever way it points
        let m = build_one_inclusion(&patterns(&["0", "1"])).unwrap();
        let p = oig_predict(&m, &[], 0).unwrap();
        let e = &m.edges()[0];
        assert_eq!(e.coord, 0);
        assert_eq!(p, m.vertices()[m.head(0)][0]);
    }

    #[test]
    fn singleton_class_mistake_bound_exhaustive() {
        let m = build_one_inclusion(&patterns(&["100", "010", "001"])).unwrap();
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        for target in patterns(&["100", "010", "001"]) {
            let mut mistakes = 0;
            for p in perms {
                let prefix = [(p[0], target[p[0]]), (p[1], target[p[1]])];
                if oig_predict(&m, &prefix, p[2]).unwrap() != target[p[2]] {
                    mistakes += 1;
                }
            }
            // mistake rate <= vc-dimension / m = 1/3 over 6 orderings
            assert!(mistakes <= 2, "target {target:?}: {mistakes} mistakes");
        }
    }

    #[test]
    fn cwdc_cases() {
        let g = TernaryClass::new(
            FunctionClass::default_domain(2),
            vec![
                vec![Ternary::Star, Ternary::One],
                vec![Ternary::Star, Ternary::Star],
            ],
        )
        .unwrap();
        // every row has a star at the query: nothing to consult
        assert!(!cwdc_predict(&g, &[], 0).unwrap());

        let g = TernaryClass::new(
            FunctionClass::default_domain(3),
            vec![
                vec![Ternary::One, Ternary::Star, Ternary::One],
                vec![Ternary::Zero, Ternary::Star, Ternary::One],
                vec![Ternary::One, Ternary::One, Ternary::Zero],
            ],
        )
        .unwrap();
        // all-star prefix: rows 0 and 1 agree at the query
        assert!(cwdc_predict(&g, &[(1, Ternary::Star)], 2).unwrap());
        // prefix no surviving row matches: safe default
        assert!(!cwdc_predict(&g, &[(0, Ternary::Zero), (1, Ternary::One)], 2).unwrap());
        // conflicting duplicate observations: safe default
        assert!(!cwdc_predict(&g, &[(0, Ternary::Zero), (0, Ternary::One)], 2).unwrap());
    }

    #[test]
    fn aggregate_rounding_identity_and_zero() {
        // a class rich enough that every threshold vote matches the truth
        // when the prefix pins the target: single target row seen in full
        let f = gen_binary_cube(2).unwrap();
        let cfg = AggregatorConfig::new(rat(1, 10), rat(1, 4)).unwrap();
        assert_eq!(cfg.thresholds(), vec![rat(1, 4), rat(1, 2), rat(3, 4), rat(1, 1)]);
        // target row (1, 0): prefix reveals both points, query point 0
        let prefix = vec![(0, rat(1, 1)), (1, rat(0, 1))];
        let out = aggregate_predict(&f, &cfg, &prefix, 0).unwrap();
        // the top threshold bands y = 1 into a star, so only the three
        // decisive votes fire: the error is exactly tau
        assert_eq!(out.bits, vec![true, true, true, false]);
        assert_eq!(out.prediction, rat(3, 4));
        assert!((out.prediction - rat(1, 1)).abs() <= cfg.tau());
        let out = aggregate_predict(&f, &cfg, &prefix, 1).unwrap();
        assert_eq!(out.prediction, rat(0, 1));
        assert!(out.bits.iter().all(|b| !b));
    }

    #[test]
    fn aggregation_inequality_pinned_example() {
        let cfg = AggregatorConfig::new(rat(1, 20), rat(1, 10)).unwrap();
        let y = rat(63, 100);
        let b = vec![false; 10];
        let (lhs, rhs, holds) = check_aggregation_inequality(y, &cfg, &b).unwrap();
        assert_eq!(lhs, rat(63, 100));
        assert_eq!(rhs, rat(3, 4));
        assert!(holds);
        // literal recount of the right-hand side
        let mut disagree = 0;
        for j in 1..=10 {
            let r = rat(j, 10);
            let truth = psi(y, r, rat(1, 20)).unwrap();
            if truth != Ternary::Star && truth.as_bit() != Some(b[(j - 1) as usize]) {
                disagree += 1;
            }
        }
        assert_eq!(rhs, rat(2, 10) + rat(1, 20) + rat(1, 10) * rat(disagree, 1));

        // grid truth with exact indicator votes: error at most tau
        let y = rat(3, 10);
        let b: Vec<bool> = (1..=10).map(|j| y >= rat(j, 10)).collect();
        let (lhs, _, holds) = check_aggregation_inequality(y, &cfg, &b).unwrap();
        assert!(lhs <= rat(1, 10) && holds);

        assert!(check_aggregation_inequality(y, &cfg, &[true]).is_err());
    }

    #[test]
    fn aggregate_satisfies_inequality_per_instance() {
        let f = gen_random(3, 6, 5, 901).unwrap();
        let cfg = AggregatorConfig::new(rat(1, 8), rat(1, 6)).unwrap();
        for target in 0..f.n_functions() {
            let full: LabeledSample = (0..3).map(|x| (x, f.value(target, x))).collect();
            for query in 0..3 {
                let out = aggregate_predict(&f, &cfg, &full, query).unwrap();
                let y = f.value(target, query);
                let (lhs, rhs, holds) = check_aggregation_inequality(y, &cfg, &out.bits).unwrap();
                assert!(holds, "lhs {} rhs {}", format_rat(&lhs), format_rat(&rhs));
            }
        }
    }

    #[test]
    fn bisect_variant_runs_and_is_bounded() {
        let f = gen_binary_cube(2).unwrap();
        let cfg = AggregatorConfig::new(rat(1, 10), rat(1, 4)).unwrap();
        let prefix = vec![(0, rat(1, 1)), (1, rat(0, 1))];
        let p = bisect_predict(&f, &cfg, &prefix, 0, 10).unwrap();
        assert!(is_unit_interval(&p));
        assert!(bisect_predict(&f, &cfg, &prefix, 0, 0).is_err());
        assert!(bisect_predict(&f, &cfg, &prefix, 0, 64).is_err());
    }

    #[test]
    fn transcript_round_trip() {
        let f = gen_binary_cube(2).unwrap();
        let cfg = AggregatorConfig::new(rat(1, 10), rat(1, 4)).unwrap();
        let sample: LabeledSample = vec![(0, rat(1, 1)), (1, rat(0, 1)), (0, rat(1, 1))];
        let t = run_transcript(&f, &cfg, &sample).unwrap();
        assert_eq!(t.rows.len(), 3);
        assert!(t.errors_consistent());
        let csv = t.to_csv();
        assert_eq!(csv.lines().count(), 4);
        assert!(csv.lines().nth(1).unwrap().starts_with("1,0,"));
        // round 3 repeats an observed point: all decisive votes are
        // correct, so the error is within tau
        assert!(t.rows[2].abs_error <= rat(1, 4));
        assert!(t.rows[2].threshold_mistakes.iter().all(|m| !m));
    }
}
