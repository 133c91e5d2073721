//! Exact rational rates, the strong-partition cut lower bound, and the
//! closed-form capacities for rank-1 and rank-s targets.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::ffield::Matrix;
use crate::model::Model;
use crate::network::{mask_to_vec, to_network, CutSet, Network};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoundsError {
    #[error("cut has {0} edges, above the partition-enumeration cap of 12")]
    CutTooLarge(usize),
    #[error("the closed formula needs rank(T) = {expected}, got {got}")]
    WrongRankForFormula { expected: usize, got: usize },
    #[error("instance too large for exact cut enumeration")]
    InstanceTooLarge,
    #[error("zero denominator")]
    ZeroDenominator,
}

/// Exact nonnegative rational, stored reduced; totally ordered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: u64,
    den: u64,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Rational {
    pub fn new(num: u64, den: u64) -> Rational {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den);
        if g == 0 {
            Rational { num: 0, den: 1 }
        } else {
            Rational { num: num / g, den: den / g }
        }
    }

    pub fn integer(n: u64) -> Rational {
        Rational { num: n, den: 1 }
    }

    pub fn zero() -> Rational {
        Rational { num: 0, den: 1 }
    }

    pub fn num(&self) -> u64 {
        self.num
    }
    pub fn den(&self) -> u64 {
        self.den
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    /// Cross-multiplication in 128-bit integers; no overflow at this scale.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Rational {
    type Err = BoundsError;

    fn from_str(s: &str) -> Result<Rational, BoundsError> {
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num: u64 = n.trim().parse().map_err(|_| BoundsError::ZeroDenominator)?;
        let den: u64 = d.trim().parse().map_err(|_| BoundsError::ZeroDenominator)?;
        if den == 0 {
            return Err(BoundsError::ZeroDenominator);
        }
        Ok(Rational::new(num, den))
    }
}

/// A partition of a cut into parts that each separate some source and do
/// not interfere: part i's separated sources are disjoint from part j's
/// upstream sources for i != j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongPartition {
    /// Disjoint nonempty edge-index subsets covering the cut.
    pub parts: Vec<Vec<usize>>,
}

/// All strong partitions of a cut, enumerated via restricted-growth
/// strings (so each set partition appears exactly once). The trivial
/// one-part partition is always present for a genuine cut set.
pub fn strong_partitions(net: &Network, cut: &CutSet) -> Result<Vec<StrongPartition>, BoundsError> {
    let edges = &cut.edges;
    let n = edges.len();
    if n > 12 {
        return Err(BoundsError::CutTooLarge(n));
    }
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    loop {
        let nparts = rgs.iter().copied().max().map_or(0, |x| x + 1);
        let mut part_masks = vec![0u32; nparts];
        for (pos, &block) in rgs.iter().enumerate() {
            part_masks[block] |= 1 << edges[pos];
        }
        if is_strong(net, &part_masks) {
            out.push(StrongPartition {
                parts: part_masks
                    .iter()
                    .map(|&mask| mask_to_vec(mask, net.edge_count()))
                    .collect(),
            });
        }
        if !next_rgs(&mut rgs) {
            break;
        }
    }
    Ok(out)
}

fn is_strong(net: &Network, part_masks: &[u32]) -> bool {
    let i_sets: Vec<u32> = part_masks.iter().map(|&mask| net.i_of_cut_mask(mask)).collect();
    if i_sets.iter().any(|&i| i == 0) {
        return false;
    }
    if part_masks.len() == 1 {
        return true;
    }
    let k_sets: Vec<u32> = part_masks.iter().map(|&mask| net.k_of_cut_mask(mask)).collect();
    for a in 0..part_masks.len() {
        for b in 0..part_masks.len() {
            if a != b && i_sets[a] & k_sets[b] != 0 {
                return false;
            }
        }
    }
    true
}

/// Advances a restricted-growth string; false when exhausted.
fn next_rgs(rgs: &mut [usize]) -> bool {
    let n = rgs.len();
    for pos in (1..n).rev() {
        let max_prefix = rgs[..pos].iter().copied().max().unwrap_or(0);
        if rgs[pos] <= max_prefix {
            rgs[pos] += 1;
            for x in rgs[pos + 1..].iter_mut() {
                *x = 0;
            }
            return true;
        }
    }
    false
}

/// The rank functional of a strong partition:
/// sum of part ranks, plus the whole-cut rank, minus the rank of the
/// union of the part source sets. Empty source sets contribute rank 0.
pub fn rank_partition(t: &Matrix, net: &Network, p: &StrongPartition) -> usize {
    let rank_of = |mask: u32| -> usize {
        let rows = mask_to_vec(mask, t.rows());
        if rows.is_empty() {
            0
        } else {
            t.select_rows(&rows).rank()
        }
    };
    let mut cut_mask = 0u32;
    let mut union_i = 0u32;
    let mut total = 0usize;
    for part in &p.parts {
        let pm = part.iter().fold(0u32, |acc, &e| acc | 1 << e);
        cut_mask |= pm;
        let i = net.i_of_cut_mask(pm);
        union_i |= i;
        total += rank_of(i);
    }
    total + rank_of(net.i_of_cut_mask(cut_mask)) - rank_of(union_i)
}

/// Max over nonempty encoder subsets of rank(T[I_Gamma]) / |Gamma|.
pub fn lower_bound_gamma(model: &Model) -> Rational {
    let m = model.m();
    let mut best = Rational::zero();
    for gmask in 1u32..1 << m {
        let gamma: Vec<usize> = mask_to_vec(gmask, m);
        let i_set = crate::network::i_gamma(model.omega(), &gamma);
        let rank = if i_set.is_empty() { 0 } else { model.t_rows(&i_set).rank() };
        best = best.max(Rational::new(rank as u64, gamma.len() as u64));
    }
    best
}

/// Exact max of rank_partition / |C| over all cut sets and all strong
/// partitions. Large cuts are skipped only when they provably cannot beat
/// the running best (the functional never exceeds s + r - 1).
pub fn lower_bound_general(model: &Model) -> Result<Rational, BoundsError> {
    lower_bound_general_impl(model, true)
}

/// Same value with the size-based skipping disabled; every cut set is
/// visited. Only usable on networks small enough to enumerate fully.
pub fn lower_bound_general_unpruned(model: &Model) -> Result<Rational, BoundsError> {
    lower_bound_general_impl(model, false)
}

fn lower_bound_general_impl(model: &Model, prune: bool) -> Result<Rational, BoundsError> {
    let net = to_network(model);
    let ne = net.edge_count();
    if ne > 24 {
        return Err(BoundsError::InstanceTooLarge);
    }
    let rank_cap = (model.s() + model.r() - 1) as u64;
    let mut best = lower_bound_gamma(model);
    let t = model.t();

    for size in 1..=ne {
        if prune && Rational::new(rank_cap, size as u64) <= best {
            break;
        }
        if size > 12 {
            // A cut this wide would need partition enumeration beyond the
            // cap; unreachable for the supported instance sizes.
            return Err(BoundsError::InstanceTooLarge);
        }
        let mut comb: Vec<usize> = (0..size).collect();
        loop {
            let mask = comb.iter().fold(0u32, |acc, &e| acc | 1 << e);
            if net.i_of_cut_mask(mask) != 0 {
                let cut = CutSet { edges: comb.clone() };
                for p in strong_partitions(&net, &cut)? {
                    let val = Rational::new(rank_partition(t, &net, &p) as u64, size as u64);
                    best = best.max(val);
                }
            }
            if !next_combination(&mut comb, ne) {
                break;
            }
        }
    }
    Ok(best)
}

/// Advances a sorted combination of indices below `n`; false at the end.
fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    for i in (0..k).rev() {
        if comb[i] < n - k + i {
            comb[i] += 1;
            for j in i + 1..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Closed form for rank-1 targets: max over sources of 1 / |gamma_i|.
pub fn capacity_sum(model: &Model) -> Result<Rational, BoundsError> {
    if model.t().rank() != 1 {
        return Err(BoundsError::WrongRankForFormula { expected: 1, got: model.t().rank() });
    }
    let min_gamma = (0..model.s())
        .map(|i| model.omega().gamma(i).len())
        .min()
        .expect("model has at least one source");
    Ok(Rational::new(1, min_gamma as u64))
}

/// Closed form for rank-s targets: max over nonempty encoder subsets of
/// |I_Gamma| / |Gamma|.
pub fn capacity_id(model: &Model) -> Result<Rational, BoundsError> {
    if model.t().rank() != model.s() {
        return Err(BoundsError::WrongRankForFormula { expected: model.s(), got: model.t().rank() });
    }
    let m = model.m();
    let mut best = Rational::zero();
    for gmask in 1u32..1 << m {
        let gamma: Vec<usize> = mask_to_vec(gmask, m);
        let i_set = crate::network::i_gamma(model.omega(), &gamma);
        best = best.max(Rational::new(i_set.len() as u64, gamma.len() as u64));
    }
    Ok(best)
}
