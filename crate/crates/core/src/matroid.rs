//! Colored matroids behind an independence oracle.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::dsu::DisjointSetUnion;
use crate::error::{Error, Result};
use crate::graph::{Color, EdgeColoredGraph};

pub trait IndependenceOracle: Send + Sync {
    fn ground_size(&self) -> usize;
    fn is_independent(&self, set: &[usize]) -> bool;
}

/// Forests of a graph.
#[derive(Debug, Clone)]
pub struct GraphicMatroid {
    graph: EdgeColoredGraph,
}

impl GraphicMatroid {
    pub fn new(graph: EdgeColoredGraph) -> Self {
        Self { graph }
    }

    pub fn graph(&self) -> &EdgeColoredGraph {
        &self.graph
    }

    /// The graphic matroid with elements colored like the edges.
    pub fn colored(graph: EdgeColoredGraph) -> ColoredMatroid {
        let colors = graph.edges().iter().map(|e| e.color).collect();
        ColoredMatroid::new(Box::new(Self::new(graph)), colors).expect("one color per edge")
    }
}

impl IndependenceOracle for GraphicMatroid {
    fn ground_size(&self) -> usize {
        self.graph.m()
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        let mut dsu = DisjointSetUnion::new(self.graph.n());
        set.iter().all(|&id| {
            let e = self.graph.edge(id);
            dsu.union(e.u, e.v)
        })
    }
}

/// U_{n,k}: a set is independent iff it has at most `threshold` elements.
#[derive(Debug, Clone, Copy)]
pub struct UniformMatroid {
    pub n: usize,
    pub threshold: usize,
}

impl UniformMatroid {
    pub fn colored(n: usize, threshold: usize, colors: Vec<Color>) -> Result<ColoredMatroid> {
        ColoredMatroid::new(Box::new(Self { n, threshold }), colors)
    }
}

impl IndependenceOracle for UniformMatroid {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        set.len() <= self.threshold
    }
}

/// Wraps a caller-supplied predicate.
pub struct FnOracle<F> {
    size: usize,
    f: F,
}

impl<F: Fn(&[usize]) -> bool + Send + Sync> FnOracle<F> {
    pub fn new(size: usize, f: F) -> Self {
        Self { size, f }
    }
}

impl<F: Fn(&[usize]) -> bool + Send + Sync> IndependenceOracle for FnOracle<F> {
    fn ground_size(&self) -> usize {
        self.size
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        (self.f)(set)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IncreaseRankVariant {
    /// Minimum-weight basis with weight 0 on T and 1 elsewhere.
    #[default]
    WeightedGreedy,
    /// Adds each element that raises the rank, recomputing ranks from scratch.
    SimpleScan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SelectionTag {
    Basis,
    Repair(Color),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionResult {
    /// Selected elements in ascending order.
    pub selected: Vec<usize>,
    /// Tag of each entry of `selected`.
    pub tags: Vec<SelectionTag>,
    pub oracle_calls: u64,
}

pub struct ColoredMatroid {
    oracle: Box<dyn IndependenceOracle>,
    colors: Vec<Color>,
    calls: AtomicU64,
}

impl fmt::Debug for ColoredMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ColoredMatroid")
            .field("ground_size", &self.colors.len())
            .field("colors", &self.colors)
            .finish_non_exhaustive()
    }
}

impl ColoredMatroid {
    pub fn new(oracle: Box<dyn IndependenceOracle>, colors: Vec<Color>) -> Result<Self> {
        if colors.len() != oracle.ground_size() {
            return Err(Error::ColorCountMismatch {
                expected: oracle.ground_size(),
                found: colors.len(),
            });
        }
        Ok(Self {
            oracle,
            colors,
            calls: AtomicU64::new(0),
        })
    }

    pub fn ground_size(&self) -> usize {
        self.colors.len()
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, s: usize) -> Color {
        self.colors[s]
    }

    pub fn used_colors(&self) -> Vec<Color> {
        self.colors
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    pub fn oracle_calls(&self) -> u64 {
        self.calls.load(Ordering::Relaxed)
    }

    pub fn reset_oracle_calls(&self) {
        self.calls.store(0, Ordering::Relaxed);
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        self.calls.fetch_add(1, Ordering::Relaxed);
        self.oracle.is_independent(set)
    }

    /// Greedy independent subset of `seq`, scanned in order.
    pub fn greedy_basis(&self, seq: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut basis = Vec::new();
        for s in seq {
            basis.push(s);
            if !self.is_independent(&basis) {
                basis.pop();
            }
        }
        basis
    }

    pub fn rank(&self, x: &[usize]) -> usize {
        self.greedy_basis(x.iter().copied()).len()
    }

    pub fn full_rank(&self) -> usize {
        self.rank(&(0..self.ground_size()).collect::<Vec<_>>())
    }

    fn without_color(&self, x: &[usize], c: Color) -> Vec<usize> {
        x.iter().copied().filter(|&s| self.colors[s] != c).collect()
    }

    /// First used color whose deletion lowers the rank.
    pub fn courteous_violation(&self) -> Option<Color> {
        let all: Vec<usize> = (0..self.ground_size()).collect();
        let r = self.rank(&all);
        self.used_colors()
            .into_iter()
            .find(|&c| self.rank(&self.without_color(&all, c)) < r)
    }

    pub fn is_courteous(&self) -> bool {
        self.courteous_violation().is_none()
    }

    /// Whether restricting to `subset` keeps rank `r` after deleting any one color.
    pub fn is_courteous_spanning(&self, subset: &[usize], r: usize) -> bool {
        self.rank(subset) == r
            && self
                .used_colors()
                .into_iter()
                .all(|c| self.rank(&self.without_color(subset, c)) == r)
    }

    /// Extends `t` to a set of full rank in the submatroid on `ground` (scanned in order).
    pub fn increase_rank_within(
        &self,
        ground: &[usize],
        t: &[usize],
        variant: IncreaseRankVariant,
    ) -> Vec<usize> {
        let mut out = t.to_vec();
        let mut in_t = vec![false; self.ground_size()];
        for &s in t {
            in_t[s] = true;
        }
        match variant {
            IncreaseRankVariant::WeightedGreedy => {
                let seq = t
                    .iter()
                    .copied()
                    .chain(ground.iter().copied().filter(|&s| !in_t[s]));
                out.extend(self.greedy_basis(seq).into_iter().filter(|&s| !in_t[s]));
            }
            IncreaseRankVariant::SimpleScan => {
                let mut r = self.rank(&out);
                for &s in ground {
                    if in_t[s] {
                        continue;
                    }
                    out.push(s);
                    let grown = self.rank(&out);
                    if grown > r {
                        r = grown;
                        in_t[s] = true;
                    } else {
                        out.pop();
                    }
                }
            }
        }
        out
    }

    /// Extends `t` to a spanning set of the whole matroid.
    pub fn increase_rank(&self, t: &[usize], variant: IncreaseRankVariant) -> Vec<usize> {
        let ground: Vec<usize> = (0..self.ground_size()).collect();
        self.increase_rank_within(&ground, t, variant)
    }

    /// Exhaustively checks the independence axioms. Refuses ground sets above 10 elements.
    pub fn validate_axioms(&self) -> std::result::Result<(), String> {
        let n = self.ground_size();
        if n > 10 {
            return Err(format!(
                "ground set of {n} elements is too large to validate"
            ));
        }
        let members = |mask: usize| (0..n).filter(move |i| mask >> i & 1 == 1);
        let indep: Vec<bool> = (0..1usize << n)
            .map(|mask| {
                self.oracle
                    .is_independent(&members(mask).collect::<Vec<_>>())
            })
            .collect();
        if !indep[0] {
            return Err("the empty set is dependent".into());
        }
        for a in (0..1usize << n).filter(|&a| indep[a]) {
            if let Some(i) = members(a).find(|&i| !indep[a & !(1 << i)]) {
                return Err(format!("downward closure fails removing {i} from {a:#b}"));
            }
            for b in (0..1usize << n).filter(|&b| indep[b]) {
                if b.count_ones() > a.count_ones() && !members(b & !a).any(|x| indep[a | 1 << x]) {
                    return Err(format!("exchange fails for {a:#b} and {b:#b}"));
                }
            }
        }
        Ok(())
    }
}

/// Closed-form courteousness of a colored uniform matroid.
pub fn uniform_is_courteous(n: usize, threshold: usize, colors: &[Color]) -> bool {
    let mut counts = std::collections::HashMap::new();
    for &c in colors {
        *counts.entry(c).or_insert(0usize) += 1;
    }
    let max = counts.values().copied().max().unwrap_or(0);
    max <= n - threshold.min(n)
}

/// Courteous rank-preserving restriction: a basis, then per-color repairs.
///
/// `order` is the element sequence used for the basis scan and for every repair scan.
pub fn courteous_restriction(
    m: &ColoredMatroid,
    order: &[usize],
    variant: IncreaseRankVariant,
) -> Result<RestrictionResult> {
    let start = m.oracle_calls();
    if let Some(color) = m.courteous_violation() {
        return Err(Error::NotCourteous { color });
    }
    let n = m.ground_size();
    let mut tag: Vec<Option<SelectionTag>> = vec![None; n];
    for s in m.greedy_basis(order.iter().copied()) {
        tag[s] = Some(SelectionTag::Basis);
    }
    let r = tag.iter().flatten().count();
    for c in m.used_colors() {
        let t_c: Vec<usize> = order
            .iter()
            .copied()
            .filter(|&s| tag[s].is_some() && m.color(s) != c)
            .collect();
        if m.rank(&t_c) >= r {
            continue;
        }
        let ground: Vec<usize> = order.iter().copied().filter(|&s| m.color(s) != c).collect();
        for s in m.increase_rank_within(&ground, &t_c, variant) {
            tag[s].get_or_insert(SelectionTag::Repair(c));
        }
    }
    let (selected, tags) = tag
        .iter()
        .enumerate()
        .filter_map(|(s, t)| t.map(|t| (s, t)))
        .unzip();
    Ok(RestrictionResult {
        selected,
        tags,
        oracle_calls: m.oracle_calls() - start,
    })
}

fn deletion_pass(
    m: &ColoredMatroid,
    start: &[usize],
    seq: impl IntoIterator<Item = usize>,
) -> Vec<usize> {
    let r = m.full_rank();
    let mut keep = vec![false; m.ground_size()];
    for &s in start {
        keep[s] = true;
    }
    for s in seq {
        if !keep[s] {
            continue;
        }
        keep[s] = false;
        let candidate: Vec<usize> = (0..keep.len()).filter(|&x| keep[x]).collect();
        if !m.is_courteous_spanning(&candidate, r) {
            keep[s] = true;
        }
    }
    (0..keep.len()).filter(|&x| keep[x]).collect()
}

/// Drops selected elements, highest index first, while the restriction stays courteous and spanning.
pub fn prune_restriction(m: &ColoredMatroid, selected: &[usize]) -> Vec<usize> {
    let mut seq = selected.to_vec();
    seq.sort_unstable_by(|a, b| b.cmp(a));
    deletion_pass(m, selected, seq)
}

/// Deletes ground elements in ascending order whenever courteousness and rank survive.
pub fn greedy_minimal_restriction(m: &ColoredMatroid) -> Result<Vec<usize>> {
    if let Some(color) = m.courteous_violation() {
        return Err(Error::NotCourteous { color });
    }
    let all: Vec<usize> = (0..m.ground_size()).collect();
    Ok(deletion_pass(m, &all, all.clone()))
}

/// Smallest possible courteous restriction of rank `r` using `k` colors.
pub fn min_elements_bound(k: usize, r: usize) -> Result<usize> {
    if r == 0 {
        return Ok(0);
    }
    if k < 2 {
        return Err(Error::InfeasibleParameters(format!(
            "a courteous matroid of rank {r} needs at least two colors"
        )));
    }
    Ok((k * r).div_ceil(k - 1))
}
