//! Exact computation of four combinatorial dimensions of a finite class:
//! VC-dimension over ternary patterns (don't-cares never match), fatV
//! (one shared threshold), fat (per-point thresholds), and sfat (exact
//! two-value shattering). Every search returns a witness that re-verifies
//! under the definitional check.
//!
//! All searches are exponential in the domain size by nature; inputs above
//! the guard limits are rejected up front (see `guard`).

use crate::class::{psi_class, FunctionClass, Ternary, TernaryClass};
use crate::value::{format_rat, Rat};
use crate::{guard, Result};
use num::{One, Signed, Zero};
use std::collections::BTreeSet;

/// Which search produced a witness.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DimKind {
    VcdimStar,
    Fatv,
    Fat,
    Sfat,
}

impl DimKind {
    pub fn name(self) -> &'static str {
        match self {
            DimKind::VcdimStar => "vcdim_star",
            DimKind::Fatv => "fatv",
            DimKind::Fat => "fat",
            DimKind::Sfat => "sfat",
        }
    }
}

/// Thresholds attached to a shattering witness.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WitnessThresholds {
    /// vcdim_star: none.
    None,
    /// fatv: the single maximizing r.
    Single(Rat),
    /// fat: one r_i per witness point.
    PerPoint(Vec<Rat>),
    /// sfat: one (l_i, u_i) pair per witness point.
    Pairs(Vec<(Rat, Rat)>),
}

/// A shattering witness: the points, in ascending index order, plus the
/// thresholds that make every bit pattern realized.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DimensionWitness {
    pub kind: DimKind,
    pub points: Vec<usize>,
    pub thresholds: WitnessThresholds,
}

impl DimensionWitness {
    pub fn size(&self) -> usize {
        self.points.len()
    }

    /// Comma-joined threshold rendering for CSV output.
    pub fn thresholds_csv(&self) -> String {
        match &self.thresholds {
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
}

/// Row subset as a fixed-width bitset; classes are capped at 4096 rows.
#[derive(Clone, PartialEq, Eq, Debug)]
struct Bits(Vec<u64>);

impl Bits {
    fn full(n: usize) -> Self {
        let words = n.div_ceil(64);
        let mut v = vec![u64::MAX; words];
        if n % 64 != 0 {
            v[words - 1] = (1u64 << (n % 64)) - 1;
        }
        Bits(v)
    }

    fn empty(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn any(&self) -> bool {
        self.0.iter().any(|w| *w != 0)
    }
}

fn check_dims_guard(points: usize, rows: usize) -> Result<()> {
    guard::check("dimension search domain points", points as u128, guard::MAX_DIM_POINTS as u128)?;
    guard::check("dimension search rows", rows as u128, guard::MAX_DIM_ROWS as u128)
}

/// Visit k-subsets of `items` in lexicographic order until `f` returns true;
/// returns the accepting subset.
fn first_combination<T: Copy>(
    items: &[T],
    k: usize,
    mut f: impl FnMut(&[T]) -> bool,
) -> Option<Vec<T>> {
    if k > items.len() {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut buf: Vec<T> = idx.iter().map(|&i| items[i]).collect();
    loop {
        if f(&buf) {
            return Some(buf);
        }
        // advance idx to the next lexicographic combination
        let mut j = k;
        loop {
            if j == 0 {
                return None;
            }
            j -= 1;
            if idx[j] != j + items.len() - k {
                break;
            }
            if j == 0 {
                return None;
            }
        }
        idx[j] += 1;
        for t in j + 1..k {
            idx[t] = idx[t - 1] + 1;
        }
        for t in j..k {
            buf[t] = items[idx[t]];
        }
    }
}

fn log2_floor(n: usize) -> usize {
    (usize::BITS - 1 - n.leading_zeros()) as usize
}

/// Do the rows realize all 2^d bit patterns on `points`? Star never matches.
fn shatters_ternary(g: &TernaryClass, points: &[usize]) -> bool {
    let d = points.len();
    let want = 1usize << d;
    let mut seen = vec![false; want];
    let mut count = 0;
    'rows: for row in g.rows() {
        let mut idx = 0usize;
        for (j, &x) in points.iter().enumerate() {
            match row[x] {
                Ternary::Star => continue 'rows,
                Ternary::One => idx |= 1 << j,
                Ternary::Zero => {}
            }
        }
        if !seen[idx] {
            seen[idx] = true;
            count += 1;
            if count == want {
                return true;
            }
        }
    }
    false
}

/// Largest d such that some d-point subset realizes every bit pattern.
pub fn vcdim_star(g: &TernaryClass) -> Result<(usize, DimensionWitness)> {
    check_dims_guard(g.n_points(), g.n_rows())?;
    // a participating point must individually realize both bits
    let eligible: Vec<usize> = (0..g.n_points())
        .filter(|&x| {
            let mut has0 = false;
            let mut has1 = false;
            for row in g.rows() {
                match row[x] {
                    Ternary::Zero => has0 = true,
                    Ternary::One => has1 = true,
                    Ternary::Star => {}
                }
            }
            has0 && has1
        })
        .collect();
    let dmax = eligible.len().min(log2_floor(g.n_rows()));
    for d in (1..=dmax).rev() {
        if let Some(points) = first_combination(&eligible, d, |pts| shatters_ternary(g, pts)) {
            return Ok((
                d,
                DimensionWitness { kind: DimKind::VcdimStar, points, thresholds: WitnessThresholds::None },
            ));
        }
    }
    Ok((0, DimensionWitness { kind: DimKind::VcdimStar, points: vec![], thresholds: WitnessThresholds::None }))
}

fn clamp01(x: Rat) -> Rat {
    if x.is_negative() {
        Rat::zero()
    } else if x > Rat::one() {
        Rat::one()
    } else {
        x
    }
}

/// fatV: one shared threshold r. The realized pattern set changes only when
/// r crosses an entry plus or minus gamma, and each pattern's feasible r-set
/// is a closed interval with endpoints in that candidate set, so scanning
/// the (clamped) candidates is a complete search for the supremum.
pub fn fatv(f: &FunctionClass, gamma: Rat) -> Result<(usize, DimensionWitness)> {
    crate::value::require_positive("gamma", &gamma)?;
    check_dims_guard(f.n_points(), f.n_functions())?;
    let mut candidates: BTreeSet<Rat> = BTreeSet::new();
    for fi in 0..f.n_functions() {
        for x in 0..f.n_points() {
            let v = f.value(fi, x);
            candidates.insert(clamp01(v - gamma));
            candidates.insert(clamp01(v + gamma));
        }
    }
    let mut best: (usize, Rat, Vec<usize>) = (0, *candidates.iter().next().expect("non-empty"), vec![]);
    for &r in &candidates {
        let g = psi_class(f, r, gamma)?;
        let (d, w) = vcdim_star(&g)?;
        if d > best.0 {
            best = (d, r, w.points);
        }
    }
    Ok((
        best.0,
        DimensionWitness {
            kind: DimKind::Fatv,
            points: best.2,
            thresholds: WitnessThresholds::Single(best.1),
        },
    ))
}

/// One candidate threshold at a coordinate: rows >= r+gamma and rows <= r-gamma.
struct Cut {
    r: Rat,
    hi: Bits,
    lo: Bits,
}

/// Candidate cuts at one coordinate, deduplicated by their (hi, lo) split,
/// keeping the smallest r per split; splits missing a side are dropped.
fn coordinate_cuts(f: &FunctionClass, x: usize, gamma: Rat) -> Vec<Cut> {
    let rows = f.n_functions();
    let mut rs: BTreeSet<Rat> = BTreeSet::new();
    for v in f.values_at(x) {
        let v = crate::rat(v, f.denominator());
        for r in [v - gamma, v + gamma] {
            if !r.is_negative() && r <= Rat::one() {
                rs.insert(r);
            }
        }
    }
    let mut cuts: Vec<Cut> = Vec::new();
    for r in rs {
        let mut hi = Bits::empty(rows);
        let mut lo = Bits::empty(rows);
        for fi in 0..rows {
            let v = f.value(fi, x);
            if v >= r + gamma {
                hi.set(fi);
            }
            if v <= r - gamma {
                lo.set(fi);
            }
        }
        if hi.any() && lo.any() && !cuts.iter().any(|c| c.hi == hi && c.lo == lo) {
            cuts.push(Cut { r, hi, lo });
        }
    }
    cuts
}

/// Depth-first search for one cut per coordinate making every pattern
/// non-empty. `masks[t]` holds the rows matching pattern t on the prefix.
fn assign_cuts(cuts: &[Vec<Cut>], j: usize, masks: &Vec<Bits>, chosen: &mut Vec<Rat>) -> bool {
    if j == cuts.len() {
        return true;
    }
    'cut: for cut in &cuts[j] {
        let mut next = Vec::with_capacity(masks.len() * 2);
        for m in masks {
            let m0 = m.and(&cut.lo);
            let m1 = m.and(&cut.hi);
            if !m0.any() || !m1.any() {
                continue 'cut;
            }
            next.push(m0);
            next.push(m1);
        }
        chosen.push(cut.r);
        if assign_cuts(cuts, j + 1, &next, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// fat: per-point thresholds r_i. Candidates per coordinate are the entries
/// at that coordinate shifted by plus/minus gamma, kept inside [0, 1]
/// (complete: a valid r_i can always be lowered to max{v used as a 0-bit}+gamma,
/// which is such a candidate).
pub fn fat(f: &FunctionClass, gamma: Rat) -> Result<(usize, DimensionWitness)> {
    crate::value::require_positive("gamma", &gamma)?;
    check_dims_guard(f.n_points(), f.n_functions())?;
    let all_cuts: Vec<Vec<Cut>> = (0..f.n_points()).map(|x| coordinate_cuts(f, x, gamma)).collect();
    let eligible: Vec<usize> = (0..f.n_points()).filter(|&x| !all_cuts[x].is_empty()).collect();
    let dmax = eligible.len().min(log2_floor(f.n_functions()));
    for d in (1..=dmax).rev() {
        let mut chosen: Vec<Rat> = Vec::new();
        let found = first_combination(&eligible, d, |pts| {
            chosen.clear();
            let cuts: Vec<Vec<Cut>> = pts
                .iter()
                .map(|&x| all_cuts[x].iter().map(|c| Cut { r: c.r, hi: c.hi.clone(), lo: c.lo.clone() }).collect())
                .collect();
            assign_cuts(&cuts, 0, &vec![Bits::full(f.n_functions())], &mut chosen)
        });
        if let Some(points) = found {
            return Ok((
                d,
                DimensionWitness {
                    kind: DimKind::Fat,
                    points,
                    thresholds: WitnessThresholds::PerPoint(chosen),
                },
            ));
        }
    }
    Ok((0, DimensionWitness { kind: DimKind::Fat, points: vec![], thresholds: WitnessThresholds::PerPoint(vec![]) }))
}

/// One candidate value pair at a coordinate for sfat.
struct Pair {
    l: Rat,
    u: Rat,
    eq_l: Bits,
    eq_u: Bits,
}

fn coordinate_pairs(f: &FunctionClass, x: usize, gamma: Rat) -> Vec<Pair> {
    let rows = f.n_functions();
    let vals = f.values_at(x);
    let two_gamma = gamma + gamma;
    let mut out = Vec::new();
    for (i, &ln) in vals.iter().enumerate() {
        for &un in &vals[i + 1..] {
            let l = crate::rat(ln, f.denominator());
            let u = crate::rat(un, f.denominator());
            if u - l < two_gamma {
                continue;
            }
            let mut eq_l = Bits::empty(rows);
            let mut eq_u = Bits::empty(rows);
            for fi in 0..rows {
                let n = f.numerators(fi)[x];
                if n == ln {
                    eq_l.set(fi);
                }
                if n == un {
                    eq_u.set(fi);
                }
            }
            out.push(Pair { l, u, eq_l, eq_u });
        }
    }
    out
}

fn assign_pairs(
    pairs: &[Vec<Pair>],
    j: usize,
    masks: &Vec<Bits>,
    chosen: &mut Vec<(Rat, Rat)>,
) -> bool {
    if j == pairs.len() {
        return true;
    }
    'pair: for p in &pairs[j] {
        let mut next = Vec::with_capacity(masks.len() * 2);
        for m in masks {
            let m0 = m.and(&p.eq_l);
            let m1 = m.and(&p.eq_u);
            if !m0.any() || !m1.any() {
                continue 'pair;
            }
            next.push(m0);
            next.push(m1);
        }
        chosen.push((p.l, p.u));
        if assign_pairs(pairs, j + 1, &next, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// sfat: strong shattering with exact values. Bit 1 at point i means the
/// function equals u_i there, bit 0 means exactly l_i, with u_i >= l_i + 2*gamma.
/// Candidates are value pairs actually appearing at the coordinate, which is
/// complete because the definition demands exact equality.
pub fn sfat(f: &FunctionClass, gamma: Rat) -> Result<(usize, DimensionWitness)> {
    crate::value::require_positive("gamma", &gamma)?;
    check_dims_guard(f.n_points(), f.n_functions())?;
    let all_pairs: Vec<Vec<Pair>> =
        (0..f.n_points()).map(|x| coordinate_pairs(f, x, gamma)).collect();
    let eligible: Vec<usize> = (0..f.n_points()).filter(|&x| !all_pairs[x].is_empty()).collect();
    let dmax = eligible.len().min(log2_floor(f.n_functions()));
    for d in (1..=dmax).rev() {
        let mut chosen: Vec<(Rat, Rat)> = Vec::new();
        let found = first_combination(&eligible, d, |pts| {
            chosen.clear();
            let pairs: Vec<Vec<Pair>> = pts
                .iter()
                .map(|&x| {
                    all_pairs[x]
                        .iter()
                        .map(|p| Pair { l: p.l, u: p.u, eq_l: p.eq_l.clone(), eq_u: p.eq_u.clone() })
                        .collect()
                })
                .collect();
            assign_pairs(&pairs, 0, &vec![Bits::full(f.n_functions())], &mut chosen)
        });
        if let Some(points) = found {
            return Ok((
                d,
                DimensionWitness {
                    kind: DimKind::Sfat,
                    points,
                    thresholds: WitnessThresholds::Pairs(chosen),
                },
            ));
        }
    }
    Ok((0, DimensionWitness { kind: DimKind::Sfat, points: vec![], thresholds: WitnessThresholds::Pairs(vec![]) }))
}

/// Replay a witness against the definitional check it claims to pass.
pub fn verify_witness(
    f_opt: Option<&FunctionClass>,
    g_opt: Option<&TernaryClass>,
    gamma: Option<Rat>,
    w: &DimensionWitness,
) -> bool {
    match (w.kind, &w.thresholds) {
        (DimKind::VcdimStar, WitnessThresholds::None) => {
            let Some(g) = g_opt else { return false };
            w.points.is_empty() || shatters_ternary(g, &w.points)
        }
        (DimKind::Fatv, WitnessThresholds::Single(r)) => {
            let (Some(f), Some(gamma)) = (f_opt, gamma) else { return false };
            if w.points.is_empty() {
                return true;
            }
            let Ok(g) = psi_class(f, *r, gamma) else { return false };
            shatters_ternary(&g, &w.points)
        }
        (DimKind::Fat, WitnessThresholds::PerPoint(rs)) => {
            let (Some(f), Some(gamma)) = (f_opt, gamma) else { return false };
            if rs.len() != w.points.len() {
                return false;
            }
            verify_fat_shattering(f, gamma, &w.points, rs)
        }
        (DimKind::Sfat, WitnessThresholds::Pairs(ps)) => {
            let (Some(f), Some(gamma)) = (f_opt, gamma) else { return false };
            if ps.len() != w.points.len() {
                return false;
            }
            verify_sfat_shattering(f, gamma, &w.points, ps)
        }
        _ => false,
    }
}

/// Definitional fat-shattering check for explicit points and thresholds.
pub fn verify_fat_shattering(f: &FunctionClass, gamma: Rat, points: &[usize], rs: &[Rat]) -> bool {
    let d = points.len();
    if rs.len() != d {
        return false;
    }
    if rs.iter().any(|r| r.is_negative() || *r > Rat::one()) {
        return false;
    }
    for pat in 0..(1usize << d) {
        let realized = (0..f.n_functions()).any(|fi| {
            points.iter().enumerate().all(|(j, &x)| {
                let v = f.value(fi, x);
                if pat >> j & 1 == 1 {
                    v >= rs[j] + gamma
                } else {
                    v <= rs[j] - gamma
                }
            })
        });
        if !realized {
            return false;
        }
    }
    true
}

/// Definitional sfat check for explicit points and value pairs.
pub fn verify_sfat_shattering(
    f: &FunctionClass,
    gamma: Rat,
    points: &[usize],
    pairs: &[(Rat, Rat)],
) -> bool {
    let d = points.len();
    if pairs.len() != d {
        return false;
    }
    if pairs.iter().any(|(l, u)| *u - *l < gamma + gamma) {
        return false;
    }
    for pat in 0..(1usize << d) {
        let realized = (0..f.n_functions()).any(|fi| {
            points.iter().enumerate().all(|(j, &x)| {
                let v = f.value(fi, x);
                if pat >> j & 1 == 1 {
                    v == pairs[j].1
                } else {
                    v == pairs[j].0
                }
            })
        });
        if !realized {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class::quantize;
    use crate::generators::{gen_binary_cube, gen_random};
    use crate::rat;

    #[test]
    fn vcdim_star_examples() {
        let g = TernaryClass::new(
            FunctionClass::default_domain(2),
            vec![
                vec![Ternary::Zero, Ternary::Star],
                vec![Ternary::One, Ternary::Star],
                vec![Ternary::Star, Ternary::Star],
            ],
        )
        .unwrap();
        let (d, w) = vcdim_star(&g).unwrap();
        assert_eq!(d, 1);
        assert_eq!(w.points, vec![0]);
        assert!(verify_witness(None, Some(&g), None, &w));

        let full = TernaryClass::new(
            FunctionClass::default_domain(2),
            vec![
                vec![Ternary::Zero, Ternary::Zero],
                vec![Ternary::Zero, Ternary::One],
                vec![Ternary::One, Ternary::Zero],
                vec![Ternary::One, Ternary::One],
            ],
        )
        .unwrap();
        assert_eq!(vcdim_star(&full).unwrap().0, 2);

        let all_star = TernaryClass::new(
            FunctionClass::default_domain(1),
            vec![vec![Ternary::Star]],
        )
        .unwrap();
        let (d0, w0) = vcdim_star(&all_star).unwrap();
        assert_eq!(d0, 0);
        assert!(w0.points.is_empty());
    }

    #[test]
    fn fatv_cube_and_constant() {
        let cube = gen_binary_cube(3).unwrap();
        let (d, w) = fatv(&cube, rat(2, 5)).unwrap();
        assert_eq!(d, 3);
        assert!(verify_witness(Some(&cube), None, Some(rat(2, 5)), &w));
        let WitnessThresholds::Single(r) = w.thresholds else { panic!() };
        // 1 >= r + 2/5 and 0 <= r - 2/5 both hold at the recorded r
        assert!(rat(1, 1) >= r + rat(2, 5) && rat(0, 1) <= r - rat(2, 5));

        let c = FunctionClass::new(FunctionClass::default_domain(2), 2, vec![vec![1, 1]]).unwrap();
        assert_eq!(fatv(&c, rat(1, 10)).unwrap().0, 0);
        assert!(fatv(&c, rat(0, 1)).is_err());
    }

    #[test]
    fn fat_cube_boundary_and_constant() {
        let cube = gen_binary_cube(3).unwrap();
        let (d, w) = fat(&cube, rat(1, 2)).unwrap();
        assert_eq!(d, 3);
        let WitnessThresholds::PerPoint(rs) = &w.thresholds else { panic!() };
        assert!(rs.iter().all(|r| *r == rat(1, 2)));
        assert!(verify_witness(Some(&cube), None, Some(rat(1, 2)), &w));

        let c = FunctionClass::new(FunctionClass::default_domain(2), 2, vec![vec![1, 1]]).unwrap();
        assert_eq!(fat(&c, rat(1, 10)).unwrap().0, 0);
    }

    #[test]
    fn sfat_two_point_examples() {
        let f = FunctionClass::new(FunctionClass::default_domain(1), 1, vec![vec![0], vec![1]]).unwrap();
        let (d, w) = sfat(&f, rat(1, 2)).unwrap();
        assert_eq!(d, 1);
        let WitnessThresholds::Pairs(ps) = &w.thresholds else { panic!() };
        assert_eq!(ps[0], (rat(0, 1), rat(1, 1)));
        assert!(verify_witness(Some(&f), None, Some(rat(1, 2)), &w));
        assert_eq!(sfat(&f, rat(3, 5)).unwrap().0, 0);
    }

    #[test]
    fn dimension_inequalities_and_monotonicity_on_random_classes() {
        for seed in 0..40u64 {
            let f = gen_random(4, 8, 4, 1100 + seed).unwrap();
            let gammas = [rat(1, 10), rat(1, 5), rat(2, 5)];
            let mut prev: Option<(usize, usize, usize)> = None;
            for g in gammas {
                let dv = fatv(&f, g).unwrap().0;
                let df = fat(&f, g).unwrap().0;
                let ds = sfat(&f, g).unwrap().0;
                assert!(ds <= df, "sfat {ds} > fat {df}");
                assert!(dv <= df, "fatv {dv} > fat {df}");
                if let Some((pv, pf, ps)) = prev {
                    // gamma grew, dimensions must not
                    assert!(dv <= pv && df <= pf && ds <= ps);
                }
                prev = Some((dv, df, ds));
                // psi_class VC-dimension never exceeds fatv at the same gamma
                for rnum in 0..=4 {
                    let r = rat(rnum, 4);
                    let vc = vcdim_star(&psi_class(&f, r, g).unwrap()).unwrap().0;
                    assert!(vc <= dv, "vcdim {vc} > fatv {dv} at r={rnum}/4");
                }
            }
        }
    }

    #[test]
    fn quantized_fat_bound() {
        for seed in 0..25u64 {
            let f = gen_random(4, 8, 6, 1700 + seed).unwrap();
            let gamma = rat(2, 5);
            let beta = rat(1, 6);
            let q = quantize(&f, beta).unwrap();
            let lhs = fat(&q, gamma).unwrap().0;
            let rhs = fat(&f, gamma - beta).unwrap().0;
            assert!(lhs <= rhs, "fat(Q) {lhs} > fat at reduced scale {rhs}");
        }
    }

    #[test]
    fn invariance_under_row_duplication_and_column_permutation() {
        for seed in 0..10u64 {
            let f = gen_random(4, 6, 4, 2300 + seed).unwrap();
            let gamma = rat(1, 5);
            let base = (fatv(&f, gamma).unwrap().0, fat(&f, gamma).unwrap().0, sfat(&f, gamma).unwrap().0);
            // duplicate every row
            let mut rows = f.rows();
            rows.extend(f.rows());
            let dup = FunctionClass::from_rows(f.domain().to_vec(), &rows).unwrap();
            let d2 = (fatv(&dup, gamma).unwrap().0, fat(&dup, gamma).unwrap().0, sfat(&dup, gamma).unwrap().0);
            assert_eq!(base, d2);
            // reverse the columns
            let perm: Vec<usize> = (0..f.n_points()).rev().collect();
            let permuted = f.restrict_class(&perm).unwrap();
            let d3 = (
                fatv(&permuted, gamma).unwrap().0,
                fat(&permuted, gamma).unwrap().0,
                sfat(&permuted, gamma).unwrap().0,
            );
            assert_eq!(base, d3);
        }
    }

    #[test]
    fn guard_rejects_oversized_inputs() {
        let big = FunctionClass::new(
            FunctionClass::default_domain(13),
            1,
            vec![vec![0; 13]],
        )
        .unwrap();
        assert!(matches!(fatv(&big, rat(1, 10)), Err(crate::Error::GuardExceeded { .. })));
    }
}
