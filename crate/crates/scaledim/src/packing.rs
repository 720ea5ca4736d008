//! Exact packing and proper covering of value matrices under normalized
//! l1 distance, plus the constructive cover transfers used by the sample
//! bound machinery.
//!
//! Separation is strict (> epsilon) for packings and non-strict
//! (<= epsilon) for covers. Covers are proper: centers are rows of the
//! input matrix, which upper-bounds the unrestricted covering number and
//! keeps every computation exact. Exact searches are branch-and-bound
//! over row bitsets and report the lexicographically smallest optimal
//! witness.

use crate::class::{l1, quantize_row, restrict, FunctionClass, LabeledSample};
use crate::value::{format_rat, Rat};
use crate::{guard, Error, Result};
use num::Signed;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PackMethod {
    Exact,
    GreedyLower,
    ProperCoverUpper,
}

impl PackMethod {
    pub fn name(self) -> &'static str {
        match self {
            PackMethod::Exact => "exact",
            PackMethod::GreedyLower => "greedy-lower",
            PackMethod::ProperCoverUpper => "proper-cover-upper",
        }
    }
}

/// Outcome of a packing or covering computation over matrix rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackingResult {
    pub epsilon: Rat,
    pub size: usize,
    pub witness: Vec<usize>,
    pub method: PackMethod,
}

fn validate_matrix(s: &[Vec<Rat>]) -> Result<()> {
    if s.is_empty() || s[0].is_empty() {
        return Err(Error::InvalidParam("matrix must be non-empty".into()));
    }
    if s.iter().any(|r| r.len() != s[0].len()) {
        return Err(Error::LengthMismatch("matrix rows must share one width".into()));
    }
    Ok(())
}

fn validate_epsilon(epsilon: &Rat) -> Result<()> {
    if epsilon.is_negative() {
        return Err(Error::InvalidParam(format!(
            "epsilon must be >= 0, got {}",
            format_rat(epsilon)
        )));
    }
    Ok(())
}

fn dist_matrix(s: &[Vec<Rat>]) -> Result<Vec<Vec<Rat>>> {
    let n = s.len();
    let mut d = vec![vec![Rat::default(); n]; n];
    for a in 0..n {
        for b in a + 1..n {
            let dist = l1(&s[a], &s[b])?;
            d[a][b] = dist;
            d[b][a] = dist;
        }
    }
    Ok(d)
}

/// Largest clique size in the graph given by adjacency bitsets, searched
/// in the supplied vertex order.
fn max_clique_size(order: &[usize], adj: &[u128]) -> usize {
    fn expand(order: &[usize], adj: &[u128], cand: u128, depth: usize, best: &mut usize) {
        if depth + (cand.count_ones() as usize) <= *best {
            return;
        }
        if cand == 0 {
            *best = (*best).max(depth);
            return;
        }
        let mut rest = cand;
        for &v in order {
            if rest == 0 {
                break;
            }
            if rest >> v & 1 == 0 {
                continue;
            }
            rest &= !(1u128 << v);
            if depth + 1 + (rest.count_ones() as usize).min(adj[v].count_ones() as usize)
                <= *best
            {
                continue;
            }
            expand(order, adj, rest & adj[v], depth + 1, best);
        }
        *best = (*best).max(depth);
    }
    let mut best = 0;
    let full = order.iter().fold(0u128, |m, &v| m | 1u128 << v);
    expand(order, adj, full, 0, &mut best);
    best
}

/// First clique of size k in ascending lexicographic order of index lists.
fn lex_min_clique(n: usize, adj: &[u128], k: usize) -> Vec<usize> {
    fn rec(
        n: usize,
        adj: &[u128],
        k: usize,
        start: usize,
        cand: u128,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if chosen.len() == k {
            return true;
        }
        for v in start..n {
            if cand >> v & 1 == 0 {
                continue;
            }
            let rest = cand & adj[v] & !((1u128 << (v + 1)) - 1);
            if chosen.len() + 1 + (rest.count_ones() as usize) < k {
                continue;
            }
            chosen.push(v);
            if rec(n, adj, k, v + 1, cand & adj[v], chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::with_capacity(k);
    let full = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let found = rec(n, adj, k, 0, full, &mut chosen);
    debug_assert!(found, "a clique of the optimal size must exist");
    chosen
}

/// Maximum subset of rows with pairwise distance strictly above epsilon.
pub fn packing_exact(s: &[Vec<Rat>], epsilon: Rat) -> Result<PackingResult> {
    validate_matrix(s)?;
    validate_epsilon(&epsilon)?;
    guard::check("exact packing rows", s.len() as u128, guard::MAX_PACK_EXACT_ROWS as u128)?;
    let n = s.len();
    let d = dist_matrix(s)?;
    let mut adj = vec![0u128; n];
    for a in 0..n {
        for b in 0..n {
            if a != b && d[a][b] > epsilon {
                adj[a] |= 1u128 << b;
            }
        }
    }
    // search in decreasing-degree order, then extract the smallest witness
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (usize::MAX - adj[v].count_ones() as usize, v));
    let size = max_clique_size(&order, &adj);
    let witness = lex_min_clique(n, &adj, size);
    Ok(PackingResult { epsilon, size, witness, method: PackMethod::Exact })
}

/// Maximal packing grown one row at a time in the caller's order: a row
/// joins if it is strictly more than epsilon from everything selected.
/// The result is a lower bound on the exact packing size and, by
/// maximality, also a proper cover of the matrix at radius epsilon.
pub fn packing_greedy(s: &[Vec<Rat>], epsilon: Rat, order: &[usize]) -> Result<PackingResult> {
    validate_matrix(s)?;
    validate_epsilon(&epsilon)?;
    guard::check("greedy packing rows", s.len() as u128, guard::MAX_PACK_GREEDY_ROWS as u128)?;
    let n = s.len();
    if order.len() != n {
        return Err(Error::LengthMismatch(format!(
            "order has {} entries for {} rows",
            order.len(),
            n
        )));
    }
    let mut seen = vec![false; n];
    for &i in order {
        if i >= n {
            return Err(Error::IndexOutOfRange { what: "order entry", index: i, size: n });
        }
        if std::mem::replace(&mut seen[i], true) {
            return Err(Error::InvalidParam(format!("order repeats row {i}")));
        }
    }
    let mut witness: Vec<usize> = Vec::new();
    for &i in order {
        let mut separated = true;
        for &j in &witness {
            if l1(&s[i], &s[j])? <= epsilon {
                separated = false;
                break;
            }
        }
        if separated {
            witness.push(i);
        }
    }
    Ok(PackingResult { epsilon, size: witness.len(), witness, method: PackMethod::GreedyLower })
}

/// Coverage bitsets: bit r of cov[c] says row r is within epsilon of row c.
fn coverage_sets(d: &[Vec<Rat>], epsilon: Rat) -> Vec<u128> {
    let n = d.len();
    (0..n)
        .map(|c| {
            (0..n)
                .filter(|&r| d[c][r] <= epsilon)
                .fold(0u128, |m, r| m | 1u128 << r)
        })
        .collect()
}

/// Lex-min minimum cover of the rows of a precomputed symmetric distance
/// matrix (coverage = distance <= epsilon). Caller keeps n <= 128.
pub(crate) fn cover_indices(d: &[Vec<Rat>], epsilon: Rat) -> Vec<usize> {
    let n = d.len();
    let cov = coverage_sets(d, epsilon);
    let full = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let size = min_cover_size(n, &cov, full);
    lex_min_cover(n, &cov, full, size)
}

fn min_cover_size(n: usize, cov: &[u128], full: u128) -> usize {
    // greedy incumbent: repeatedly take the center covering the most new rows
    let mut covered = 0u128;
    let mut greedy = 0usize;
    while covered != full {
        let c = (0..n)
            .max_by_key(|&c| ((cov[c] & !covered).count_ones(), usize::MAX - c))
            .expect("rows exist");
        covered |= cov[c];
        greedy += 1;
    }
    let max_gain = cov.iter().map(|m| m.count_ones() as usize).max().unwrap_or(1);
    fn rec(
        n: usize,
        cov: &[u128],
        full: u128,
        covered: u128,
        used: usize,
        best: &mut usize,
        max_gain: usize,
    ) {
        if covered == full {
            *best = (*best).min(used);
            return;
        }
        let missing = (full & !covered).count_ones() as usize;
        if used + missing.div_ceil(max_gain) >= *best {
            return;
        }
        // branch on the uncovered row with fewest candidate centers
        let row = (0..n)
            .filter(|&r| full >> r & 1 == 1 && covered >> r & 1 == 0)
            .min_by_key(|&r| (0..n).filter(|&c| cov[c] >> r & 1 == 1).count())
            .expect("some row uncovered");
        for c in 0..n {
            if cov[c] >> row & 1 == 1 {
                rec(n, cov, full, covered | cov[c], used + 1, best, max_gain);
            }
        }
    }
    let mut best = greedy;
    rec(n, cov, full, 0, 0, &mut best, max_gain);
    best
}

/// First cover of size k in ascending lexicographic order of index lists.
fn lex_min_cover(n: usize, cov: &[u128], full: u128, k: usize) -> Vec<usize> {
    fn rec(
        n: usize,
        cov: &[u128],
        full: u128,
        k: usize,
        start: usize,
        covered: u128,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if covered == full {
            return true;
        }
        if chosen.len() == k {
            return false;
        }
        // every uncovered row must still have an available center
        let mut reachable = covered;
        for c in start..n {
            reachable |= cov[c];
        }
        if reachable != full {
            return false;
        }
        for c in start..n {
            if cov[c] & !covered == 0 {
                continue;
            }
            chosen.push(c);
            if rec(n, cov, full, k, c + 1, covered | cov[c], chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::with_capacity(k);
    let found = rec(n, cov, full, k, 0, 0, &mut chosen);
    debug_assert!(found, "a cover of the optimal size must exist");
    chosen
}

/// Minimum subset of rows covering every row within epsilon.
pub fn cover_proper_exact(s: &[Vec<Rat>], epsilon: Rat) -> Result<PackingResult> {
    validate_matrix(s)?;
    validate_epsilon(&epsilon)?;
    guard::check("exact cover rows", s.len() as u128, guard::MAX_PACK_EXACT_ROWS as u128)?;
    let d = dist_matrix(s)?;
    let witness = cover_indices(&d, epsilon);
    Ok(PackingResult { epsilon, size: witness.len(), witness, method: PackMethod::ProperCoverUpper })
}

/// Do the witness rows sit pairwise strictly more than epsilon apart?
pub fn verify_packing_witness(s: &[Vec<Rat>], epsilon: Rat, witness: &[usize]) -> Result<bool> {
    validate_matrix(s)?;
    for w in witness {
        if *w >= s.len() {
            return Err(Error::IndexOutOfRange { what: "witness row", index: *w, size: s.len() });
        }
    }
    for (i, &a) in witness.iter().enumerate() {
        for &b in &witness[i + 1..] {
            if l1(&s[a], &s[b])? <= epsilon {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Is every row within epsilon of some witness row?
pub fn verify_cover_witness(s: &[Vec<Rat>], epsilon: Rat, witness: &[usize]) -> Result<bool> {
    validate_matrix(s)?;
    for w in witness {
        if *w >= s.len() {
            return Err(Error::IndexOutOfRange { what: "witness row", index: *w, size: s.len() });
        }
    }
    'rows: for row in s {
        for &c in witness {
            if l1(row, &s[c])? <= epsilon {
                continue 'rows;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

/// The packing/covering sandwich at radius epsilon: the packing at twice
/// the radius never exceeds the proper cover, which never exceeds the
/// packing (a maximum packing is maximal, hence also a proper cover).
pub fn sandwich_check(s: &[Vec<Rat>], epsilon: Rat) -> Result<bool> {
    let wide = packing_exact(s, epsilon + epsilon)?;
    let cover = cover_proper_exact(s, epsilon)?;
    let tight = packing_exact(s, epsilon)?;
    Ok(wide.size <= cover.size && cover.size <= tight.size)
}

/// Constructive transfer from quantized covers: a minimum proper
/// (epsilon - alpha)-cover of the alpha-quantized matrix must cover the
/// original matrix at radius epsilon, because quantization moves any row
/// by less than alpha.
pub fn quantization_cover_check(s: &[Vec<Rat>], epsilon: Rat, alpha: Rat) -> Result<bool> {
    validate_matrix(s)?;
    crate::value::require_positive("alpha", &alpha)?;
    if alpha + alpha >= epsilon {
        return Err(Error::InvalidParam(format!(
            "need alpha < epsilon/2, got alpha={} epsilon={}",
            format_rat(&alpha),
            format_rat(&epsilon)
        )));
    }
    let qs: Vec<Vec<Rat>> = s.iter().map(|r| quantize_row(r, alpha)).collect::<Result<_>>()?;
    let cover = cover_proper_exact(&qs, epsilon - alpha)?;
    'rows: for row in s {
        for &c in &cover.witness {
            if l1(row, &qs[c])? <= epsilon {
                continue 'rows;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

/// Constructive transfer to the loss class: take a minimum proper
/// epsilon-cover of the class restricted to the sample points, push each
/// center through t -> |t - y| coordinatewise, and confirm the pushed
/// centers cover the matrix of per-point losses at the same radius.
pub fn loss_class_cover_check(
    f: &FunctionClass,
    z: &LabeledSample,
    epsilon: Rat,
) -> Result<bool> {
    crate::value::require_positive("epsilon", &epsilon)?;
    if z.is_empty() {
        return Err(Error::InvalidParam("sample must be non-empty".into()));
    }
    let xs: Vec<usize> = z.iter().map(|p| p.0).collect();
    let fx = restrict(f, &xs)?;
    let losses: Vec<Vec<Rat>> = fx
        .iter()
        .map(|row| row.iter().zip(z).map(|(v, (_, y))| (v - y).abs()).collect())
        .collect();
    let cover = cover_proper_exact(&fx, epsilon)?;
    let pushed: Vec<Vec<Rat>> = cover
        .witness
        .iter()
        .map(|&c| fx[c].iter().zip(z).map(|(v, (_, y))| (v - y).abs()).collect())
        .collect();
    'rows: for row in &losses {
        for center in &pushed {
            if l1(row, center)? <= epsilon {
                continue 'rows;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_random;
    use crate::value::rat;

    fn pinned() -> Vec<Vec<Rat>> {
        vec![
            vec![rat(0, 1), rat(0, 1)],
            vec![rat(1, 1), rat(1, 1)],
            vec![rat(0, 1), rat(1, 1)],
        ]
    }

    #[test]
    fn exact_packing_examples() {
        let s = pinned();
        let p = packing_exact(&s, rat(3, 5)).unwrap();
        assert_eq!(p.size, 2);
        assert_eq!(p.witness, vec![0, 1]);
        assert!(verify_packing_witness(&s, rat(3, 5), &p.witness).unwrap());
        assert_eq!(packing_exact(&s, rat(2, 5)).unwrap().size, 3);
        let single = packing_exact(&s[..1], rat(1, 100)).unwrap();
        assert_eq!((single.size, single.witness), (1, vec![0]));
        // distinct rows at radius zero
        assert_eq!(packing_exact(&s, rat(0, 1)).unwrap().size, 3);
    }

    #[test]
    fn greedy_matches_its_contract() {
        let s = pinned();
        // pairwise distances are 1, 1/2, 1/2: all above 2/5
        let g = packing_greedy(&s, rat(2, 5), &[0, 1, 2]).unwrap();
        assert_eq!(g.witness, vec![0, 1, 2]);
        let mut dup = pinned();
        dup.push(s[0].clone());
        let g = packing_greedy(&dup, rat(2, 5), &[3, 0, 1, 2]).unwrap();
        assert!(g.witness.contains(&3) && !g.witness.contains(&0));
        assert!(packing_greedy(&s, rat(2, 5), &[0, 0, 1]).is_err());
        assert!(packing_greedy(&s, rat(2, 5), &[0, 1]).is_err());

        for seed in 0..30u64 {
            let f = gen_random(4, 12, 3, 3000 + seed).unwrap();
            let rows = f.rows();
            for eps in [rat(1, 5), rat(2, 5)] {
                let order: Vec<usize> = (0..rows.len()).collect();
                let g = packing_greedy(&rows, eps, &order).unwrap();
                let e = packing_exact(&rows, eps).unwrap();
                assert!(g.size <= e.size);
                assert!(verify_packing_witness(&rows, eps, &g.witness).unwrap());
                // maximality makes the greedy selection a proper cover
                assert!(verify_cover_witness(&rows, eps, &g.witness).unwrap());
                assert!(verify_packing_witness(&rows, eps, &e.witness).unwrap());
            }
        }
    }

    #[test]
    fn exact_cover_examples() {
        let s = pinned();
        let c = cover_proper_exact(&s, rat(1, 2)).unwrap();
        assert_eq!(c.size, 1);
        assert_eq!(c.witness, vec![2]);
        assert!(verify_cover_witness(&s, rat(1, 2), &c.witness).unwrap());
        // radius at the diameter: any single row works, smallest index wins
        let c = cover_proper_exact(&s, rat(1, 1)).unwrap();
        assert_eq!((c.size, c.witness), (1, vec![0]));
        assert_eq!(cover_proper_exact(&s, rat(0, 1)).unwrap().size, 3);
    }

    #[test]
    fn sandwich_pinned_and_random() {
        let s = pinned();
        assert_eq!(packing_exact(&s, rat(4, 5)).unwrap().size, 2);
        assert_eq!(cover_proper_exact(&s, rat(2, 5)).unwrap().size, 3);
        assert!(sandwich_check(&s, rat(2, 5)).unwrap());
        assert!(sandwich_check(&s[..1], rat(1, 4)).unwrap());
        for seed in 0..25u64 {
            let f = gen_random(5, 14, 4, 4000 + seed).unwrap();
            for eps in [rat(1, 5), rat(2, 5)] {
                assert!(sandwich_check(&f.rows(), eps).unwrap(), "seed {seed}");
            }
        }
    }

    #[test]
    fn packing_and_cover_monotone_in_radius() {
        for seed in 0..10u64 {
            let f = gen_random(4, 10, 5, 4500 + seed).unwrap();
            let rows = f.rows();
            let radii = [rat(1, 10), rat(1, 5), rat(2, 5), rat(3, 5)];
            let mut prev: Option<(usize, usize)> = None;
            for eps in radii {
                let m = packing_exact(&rows, eps).unwrap().size;
                let n = cover_proper_exact(&rows, eps).unwrap().size;
                if let Some((pm, pn)) = prev {
                    assert!(m <= pm && n <= pn);
                }
                prev = Some((m, n));
            }
        }
    }

    #[test]
    fn quantization_transfer() {
        // already aligned to the grid: quantization is the identity
        let f = gen_random(3, 8, 4, 5100).unwrap();
        assert!(quantization_cover_check(&f.rows(), rat(3, 5), rat(1, 4)).unwrap());
        for seed in 0..20u64 {
            let f = gen_random(4, 10, 7, 5200 + seed).unwrap();
            assert!(quantization_cover_check(&f.rows(), rat(3, 10), rat(1, 10)).unwrap());
        }
        // entries just below the quantization steps still transfer
        let s = vec![
            vec![rat(24, 100), rat(49, 100)],
            vec![rat(99, 100), rat(74, 100)],
            vec![rat(1, 100), rat(26, 100)],
        ];
        assert!(quantization_cover_check(&s, rat(3, 10), rat(1, 4)).is_err());
        assert!(quantization_cover_check(&s, rat(3, 5), rat(1, 4)).unwrap());
        assert!(quantization_cover_check(&s, rat(3, 10), rat(1, 8)).unwrap());
    }

    #[test]
    fn loss_class_transfer() {
        // zero labels: the loss rows equal the value rows
        let f = gen_random(4, 9, 5, 5300).unwrap();
        let z: LabeledSample = (0..4).map(|x| (x, rat(0, 1))).collect();
        assert!(loss_class_cover_check(&f, &z, rat(1, 5)).unwrap());
        // singleton class
        let single = FunctionClass::new(FunctionClass::default_domain(2), 2, vec![vec![1, 2]]).unwrap();
        let z: LabeledSample = vec![(0, rat(1, 3)), (1, rat(1, 1))];
        assert!(loss_class_cover_check(&single, &z, rat(1, 10)).unwrap());
        for seed in 0..20u64 {
            let f = gen_random(3, 10, 6, 5400 + seed).unwrap();
            let labels = gen_random(3, 1, 9, 9900 + seed).unwrap();
            let z: LabeledSample = (0..3).map(|x| (x, labels.value(0, x))).collect();
            assert!(loss_class_cover_check(&f, &z, rat(1, 4)).unwrap());
        }
    }

    #[test]
    fn guards_refuse_oversized_matrices() {
        let rows: Vec<Vec<Rat>> = (0..65).map(|i| vec![rat(i % 2, 1)]).collect();
        assert!(matches!(
            packing_exact(&rows, rat(1, 2)),
            Err(Error::GuardExceeded { .. })
        ));
        assert!(matches!(
            cover_proper_exact(&rows, rat(1, 2)),
            Err(Error::GuardExceeded { .. })
        ));
    }
}
