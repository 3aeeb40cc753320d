//! Exact minimum spanning substructures by exhaustive search, for small instances.
//!
//! Subsets are enumerated by increasing size and, within a size, lexicographically, so the
//! returned witness is the lexicographically smallest optimum. Pruning only discards
//! branches in which no completion can have the property.

use crate::connectivity::Notion;
use crate::error::{Error, Result};
use crate::extremal::Family;
use crate::graph::Color;
use crate::matroid::ColoredMatroid;
use crate::random::{random_valid, seeded};
use crate::sparsify::{min_edges_bound, GraphRef};

pub const DEFAULT_BUDGET: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub optimum_size: usize,
    /// Sorted ids of the lexicographically smallest optimum.
    pub witness: Vec<usize>,
    /// Property evaluations performed, including pruning probes.
    pub instances_searched: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactOptions {
    /// Largest ground set the search accepts.
    pub budget: usize,
    /// Disable to enumerate every subset from size zero.
    pub pruning: bool,
}

impl Default for ExactOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            pruning: true,
        }
    }
}

impl ExactOptions {
    pub fn with_budget(budget: usize) -> Self {
        Self {
            budget,
            ..Self::default()
        }
    }

    pub fn unpruned(budget: usize) -> Self {
        Self {
            budget,
            pruning: false,
        }
    }
}

/// Counting constraint: any feasible set holds at least `need` elements flagged in `relevant`.
struct Quota {
    relevant: Vec<bool>,
    need: usize,
    /// `suffix[i]` is the number of relevant elements with index `>= i`.
    suffix: Vec<usize>,
}

impl Quota {
    fn new(relevant: Vec<bool>, need: usize) -> Self {
        let mut suffix = vec![0; relevant.len() + 1];
        for i in (0..relevant.len()).rev() {
            suffix[i] = suffix[i + 1] + usize::from(relevant[i]);
        }
        Self {
            relevant,
            need,
            suffix,
        }
    }
}

struct Search<F: FnMut(&[usize]) -> bool> {
    m: usize,
    feasible: F,
    quotas: Vec<Quota>,
    pruning: bool,
    searched: u64,
    chosen: Vec<usize>,
    scratch: Vec<usize>,
}

impl<F: FnMut(&[usize]) -> bool> Search<F> {
    fn run(mut self, lower: usize) -> ExactResult {
        let start = if self.pruning { lower.min(self.m) } else { 0 };
        for size in start..=self.m {
            if self.dfs(0, size) {
                return ExactResult {
                    optimum_size: size,
                    witness: self.chosen,
                    instances_searched: self.searched,
                };
            }
        }
        unreachable!("the full ground set is feasible by precondition")
    }

    fn eval(&mut self, set_is_scratch: bool) -> bool {
        self.searched += 1;
        if set_is_scratch {
            (self.feasible)(&self.scratch)
        } else {
            (self.feasible)(&self.chosen)
        }
    }

    fn quotas_met(&self, next: usize, slots: usize) -> bool {
        self.quotas.iter().all(|q| {
            let have = self.chosen.iter().filter(|&&e| q.relevant[e]).count();
            have + q.suffix[next].min(slots) >= q.need
        })
    }

    fn dfs(&mut self, start: usize, size: usize) -> bool {
        let slots = size - self.chosen.len();
        if slots == 0 {
            return self.eval(false);
        }
        for j in start..=self.m - slots {
            if self.pruning {
                if !self.quotas_met(j, slots) {
                    break;
                }
                if j > start {
                    self.scratch.clear();
                    self.scratch.extend_from_slice(&self.chosen);
                    self.scratch.extend(j..self.m);
                    if !self.eval(true) {
                        break;
                    }
                }
            }
            self.chosen.push(j);
            if self.dfs(j + 1, size) {
                return true;
            }
            self.chosen.pop();
        }
        false
    }
}

fn check_budget(size: usize, budget: usize) -> Result<()> {
    if size > budget {
        return Err(Error::BudgetExceeded { size, budget });
    }
    Ok(())
}

/// Minimum spanning subgraph with the property, with the default options.
pub fn min_subgraph_exact(g: GraphRef<'_>, notion: Notion, budget: usize) -> Result<ExactResult> {
    min_subgraph_exact_with(g, notion, ExactOptions::with_budget(budget))
}

pub fn min_subgraph_exact_with(
    g: GraphRef<'_>,
    notion: Notion,
    opts: ExactOptions,
) -> Result<ExactResult> {
    check_budget(g.m(), opts.budget)?;
    let all: Vec<usize> = (0..g.m()).collect();
    let verdict = g.check(notion, &all);
    if let Some(witness) = verdict.witness {
        return Err(Error::PreconditionFailed {
            notion: notion.name(),
            witness,
        });
    }
    let n = g.n();
    let mut quotas = vec![Quota::new(vec![true; g.m()], n.saturating_sub(1))];
    match g {
        GraphRef::Edge(h) => {
            for c in h.used_colors() {
                let relevant = h.edges().iter().map(|e| e.color != c).collect();
                quotas.push(Quota::new(relevant, n.saturating_sub(1)));
            }
        }
        GraphRef::Vertex(h) => {
            for c in h.used_colors() {
                let rest = h.colors().iter().filter(|&&x| x != c).count();
                let relevant = h
                    .edges()
                    .iter()
                    .map(|&(u, v)| h.color(u) != c && h.color(v) != c)
                    .collect();
                quotas.push(Quota::new(relevant, rest.saturating_sub(1)));
            }
        }
    }
    let search = Search {
        m: g.m(),
        feasible: |ids: &[usize]| g.satisfies(notion, ids),
        quotas,
        pruning: opts.pruning,
        searched: 0,
        chosen: Vec::new(),
        scratch: Vec::new(),
    };
    Ok(search.run(n.saturating_sub(1)))
}

/// Minimum subset whose restriction is courteous and has full rank, with the default options.
pub fn min_restriction_exact(m: &ColoredMatroid, budget: usize) -> Result<ExactResult> {
    min_restriction_exact_with(m, ExactOptions::with_budget(budget))
}

pub fn min_restriction_exact_with(m: &ColoredMatroid, opts: ExactOptions) -> Result<ExactResult> {
    check_budget(m.ground_size(), opts.budget)?;
    if let Some(color) = m.courteous_violation() {
        return Err(Error::NotCourteous { color });
    }
    let r = m.full_rank();
    let used: Vec<Color> = m.used_colors();
    let mut quotas = vec![Quota::new(vec![true; m.ground_size()], r)];
    for &c in &used {
        quotas.push(Quota::new(m.colors().iter().map(|&x| x != c).collect(), r));
    }
    let search = Search {
        m: m.ground_size(),
        feasible: |ids: &[usize]| m.is_courteous_spanning(ids, r),
        quotas,
        pruning: opts.pruning,
        searched: 0,
        chosen: Vec::new(),
        scratch: Vec::new(),
    };
    Ok(search.run(r))
}

/// Outcome of comparing closed-form lower bounds with exact optima.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBoundReport {
    pub notion: Notion,
    pub k: usize,
    pub n: usize,
    pub bound: usize,
    /// Exact optimum of the minimum construction, when it exists and fits the budget.
    pub generator_optimum: Option<usize>,
    pub samples_solved: usize,
    pub smallest_sample_optimum: Option<usize>,
    /// Sample optima strictly below the bound.
    pub violations: Vec<usize>,
}

impl LowerBoundReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty() && self.generator_optimum.map_or(true, |o| o == self.bound)
    }
}

/// Solves the minimum construction and `samples` seeded random instances with exactly `k`
/// colors on `n` vertices, comparing each optimum with `min_edges_bound`.
pub fn verify_lower_bound(
    notion: Notion,
    k: usize,
    n: usize,
    samples: usize,
    seed: u64,
) -> Result<LowerBoundReport> {
    let bound = min_edges_bound(notion, k, n)?;
    let family = match notion {
        Notion::Eca => Family::EcaMin,
        Notion::Vca => Family::VcaMin,
        Notion::Ivca => Family::IvcaMin,
    };
    let generator_optimum = match family.generate(k, n) {
        Ok(c) if c.graph.as_ref().m() <= DEFAULT_BUDGET => {
            Some(min_subgraph_exact(c.graph.as_ref(), notion, DEFAULT_BUDGET)?.optimum_size)
        }
        _ => None,
    };
    let mut rng = seeded(seed);
    let (mut solved, mut smallest, mut violations) = (0, None::<usize>, Vec::new());
    for _ in 0..samples {
        let Some(g) = random_valid(&mut rng, notion, n, k, 16) else {
            continue;
        };
        let opt = min_subgraph_exact(g.as_ref(), notion, DEFAULT_BUDGET)?.optimum_size;
        solved += 1;
        smallest = Some(smallest.map_or(opt, |s| s.min(opt)));
        if opt < bound {
            violations.push(opt);
        }
    }
    Ok(LowerBoundReport {
        notion,
        k,
        n,
        bound,
        generator_optimum,
        samples_solved: solved,
        smallest_sample_optimum: smallest,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{gen_eca_tight_ratio, gen_vca_min, gen_vca_tight_ratio};
    use crate::graph::EdgeColoredGraph;
    use crate::matroid::{GraphicMatroid, UniformMatroid};
    use crate::random::random_valid;
    use proptest::prelude::*;

    #[test]
    fn reference_optima() {
        let c = gen_eca_tight_ratio(3, 7).unwrap();
        assert_eq!(
            min_subgraph_exact(c.graph.as_ref(), Notion::Eca, 20)
                .unwrap()
                .optimum_size,
            9
        );
        let c = gen_vca_tight_ratio(2, 7).unwrap();
        assert_eq!(
            min_subgraph_exact(c.graph.as_ref(), Notion::Vca, 20)
                .unwrap()
                .optimum_size,
            6
        );
        let c = gen_vca_tight_ratio(4, 9).unwrap();
        assert_eq!(
            min_subgraph_exact(c.graph.as_ref(), Notion::Vca, 24)
                .unwrap()
                .optimum_size,
            9
        );
        let c = gen_vca_min(4, 6).unwrap();
        let r = min_subgraph_exact(c.graph.as_ref(), Notion::Vca, 20).unwrap();
        assert_eq!(r.witness, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn matroid_optima() {
        let c = gen_eca_tight_ratio(3, 7).unwrap();
        let m = GraphicMatroid::colored(c.edge_colored().clone());
        assert_eq!(min_restriction_exact(&m, 20).unwrap().optimum_size, 9);
        let empty = GraphicMatroid::colored(EdgeColoredGraph::new(3, vec![], 1).unwrap());
        let r = min_restriction_exact(&empty, 20).unwrap();
        assert_eq!((r.optimum_size, r.witness), (0, vec![]));
        let u = UniformMatroid::colored(6, 2, [0, 0, 1, 1, 2, 2].map(Color).to_vec()).unwrap();
        assert_eq!(min_restriction_exact(&u, 20).unwrap().optimum_size, 3);
    }

    #[test]
    fn refusals() {
        let c = gen_eca_tight_ratio(3, 7).unwrap();
        assert_eq!(
            min_subgraph_exact(c.graph.as_ref(), Notion::Eca, 10),
            Err(Error::BudgetExceeded {
                size: 15,
                budget: 10
            })
        );
        let path = EdgeColoredGraph::from_triples(3, &[(0, 1, 0), (1, 2, 1)], 2).unwrap();
        assert!(matches!(
            min_subgraph_exact(GraphRef::Edge(&path), Notion::Eca, 20),
            Err(Error::PreconditionFailed { .. })
        ));
        assert!(matches!(
            min_restriction_exact(&GraphicMatroid::colored(path), 20),
            Err(Error::NotCourteous { .. })
        ));
    }

    #[test]
    fn lower_bound_reports() {
        let r = verify_lower_bound(Notion::Eca, 3, 7, 5, 1).unwrap();
        assert!(r.holds(), "{r:?}");
        let r = verify_lower_bound(Notion::Ivca, 1, 5, 3, 1).unwrap();
        assert_eq!((r.bound, r.generator_optimum), (10, Some(10)));
        let r = verify_lower_bound(Notion::Vca, 2, 6, 5, 2).unwrap();
        assert_eq!(r.generator_optimum, Some(5));
        assert!(r.holds());
    }

    fn notion_strategy() -> impl Strategy<Value = Notion> {
        prop_oneof![Just(Notion::Eca), Just(Notion::Vca), Just(Notion::Ivca)]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn pruned_matches_unpruned(seed in any::<u64>(), notion in notion_strategy(), n in 3usize..7, k in 1usize..4) {
            let Some(g) = random_valid(&mut seeded(seed), notion, n, k, 12) else { return Ok(()) };
            let a = min_subgraph_exact_with(g.as_ref(), notion, ExactOptions::default()).unwrap();
            let b = min_subgraph_exact_with(g.as_ref(), notion, ExactOptions::unpruned(14)).unwrap();
            prop_assert_eq!(&a.witness, &b.witness);
            prop_assert!(g.as_ref().satisfies(notion, &a.witness));
        }

        #[test]
        fn adding_edges_never_raises_the_optimum(seed in any::<u64>(), notion in notion_strategy(), drop in 0usize..12) {
            let Some(g) = random_valid(&mut seeded(seed), notion, 6, 2, 12) else { return Ok(()) };
            let gr = g.as_ref();
            let keep: Vec<usize> = (0..gr.m()).filter(|&e| e != drop % gr.m()).collect();
            if !gr.satisfies(notion, &keep) {
                return Ok(());
            }
            let full = min_subgraph_exact(gr, notion, 20).unwrap().optimum_size;
            let smaller = match gr {
                GraphRef::Edge(h) => min_subgraph_exact(GraphRef::Edge(&h.subgraph(&keep)), notion, 20),
                GraphRef::Vertex(h) => min_subgraph_exact(GraphRef::Vertex(&h.subgraph(&keep)), notion, 20),
            }
            .unwrap()
            .optimum_size;
            prop_assert!(full <= smaller);
        }
    }
}
