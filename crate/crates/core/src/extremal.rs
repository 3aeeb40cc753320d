//! Deterministic extremal constructions.
//!
//! Every generator lists its edges in canonical order (sorted by endpoints, then color).
//! Tight-ratio families also carry the edge ids of an optimum and of an adversarial
//! subgraph, plus the explicit scan order that drives the approximation algorithm to
//! the adversarial one.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::connectivity::Notion;
use crate::error::{Error, Result};
use crate::graph::{Color, Edge, EdgeColoredGraph, VertexColoredGraph};
use crate::order::Order;
use crate::sparsify::GraphRef;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    EcaMin,
    EcaTight,
    EcaMaximal,
    VcaMin,
    VcaTight,
    VcaMaximalK3,
    IvcaMin,
    IvcaTight,
    IvcaMaximalK2,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::EcaMin,
        Family::EcaTight,
        Family::EcaMaximal,
        Family::VcaMin,
        Family::VcaTight,
        Family::VcaMaximalK3,
        Family::IvcaMin,
        Family::IvcaTight,
        Family::IvcaMaximalK2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::EcaMin => "eca_min",
            Family::EcaTight => "eca_tight",
            Family::EcaMaximal => "eca_maximal",
            Family::VcaMin => "vca_min",
            Family::VcaTight => "vca_tight",
            Family::VcaMaximalK3 => "vca_maximal_k3",
            Family::IvcaMin => "ivca_min",
            Family::IvcaTight => "ivca_tight",
            Family::IvcaMaximalK2 => "ivca_maximal_k2",
        }
    }

    pub fn notion(self) -> Notion {
        match self {
            Family::EcaMin | Family::EcaTight | Family::EcaMaximal => Notion::Eca,
            Family::VcaMin | Family::VcaTight | Family::VcaMaximalK3 => Notion::Vca,
            Family::IvcaMin | Family::IvcaTight | Family::IvcaMaximalK2 => Notion::Ivca,
        }
    }

    /// Families whose color count is fixed take only `n`.
    pub fn fixed_k(self) -> Option<usize> {
        match self {
            Family::VcaMaximalK3 => Some(3),
            Family::IvcaMaximalK2 => Some(2),
            _ => None,
        }
    }

    pub fn generate(self, k: usize, n: usize) -> Result<Construction> {
        match self {
            Family::EcaMin => gen_eca_min(k, n.saturating_sub(1)),
            Family::EcaTight => gen_eca_tight_ratio(k, n),
            Family::EcaMaximal => gen_eca_maximal(k, n),
            Family::VcaMin => gen_vca_min(k, n),
            Family::VcaTight => gen_vca_tight_ratio(k, n),
            Family::VcaMaximalK3 => gen_vca_maximal_k3(n),
            Family::IvcaMin => gen_ivca_min(k, n),
            Family::IvcaTight => gen_ivca_tight_ratio(k, n),
            Family::IvcaMaximalK2 => gen_ivca_maximal_k2(n),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InfeasibleParameters(format!("unknown family {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionSpec {
    pub family: Family,
    pub k: usize,
    pub n: usize,
    /// `(m, l)` with `n = (2k-2)m + l + 3`, for the internal families.
    pub ladder: Option<(usize, usize)>,
    pub expected_edges: usize,
    pub expected_optimum: Option<usize>,
    pub expected_adversarial: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoredGraph {
    Edge(EdgeColoredGraph),
    Vertex(VertexColoredGraph),
}

impl ColoredGraph {
    pub fn as_ref(&self) -> GraphRef<'_> {
        match self {
            ColoredGraph::Edge(g) => GraphRef::Edge(g),
            ColoredGraph::Vertex(g) => GraphRef::Vertex(g),
        }
    }

    pub fn edge_colored(&self) -> Option<&EdgeColoredGraph> {
        match self {
            ColoredGraph::Edge(g) => Some(g),
            ColoredGraph::Vertex(_) => None,
        }
    }

    pub fn vertex_colored(&self) -> Option<&VertexColoredGraph> {
        match self {
            ColoredGraph::Vertex(g) => Some(g),
            ColoredGraph::Edge(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub spec: ConstructionSpec,
    pub graph: ColoredGraph,
    /// Edge ids of a minimum subgraph with the property, when the family claims one.
    pub optimum: Option<Vec<usize>>,
    /// Edge ids the approximation algorithm returns under `adversarial_order`.
    pub adversarial: Option<Vec<usize>>,
    pub adversarial_order: Option<Order>,
}

impl Construction {
    pub fn edge_colored(&self) -> &EdgeColoredGraph {
        self.graph.edge_colored().expect("edge-colored family")
    }

    pub fn vertex_colored(&self) -> &VertexColoredGraph {
        self.graph.vertex_colored().expect("vertex-colored family")
    }
}

fn infeasible(msg: String) -> Error {
    Error::InfeasibleParameters(msg)
}

/// Edges in construction order, with named subsets also given in construction order.
struct Draft {
    n: usize,
    k: usize,
    edges: Vec<(usize, usize, usize)>,
    index: HashMap<(usize, usize, usize), usize>,
    vertex_colors: Option<Vec<usize>>,
}

impl Draft {
    fn new(n: usize, k: usize, vertex_colors: Option<Vec<usize>>) -> Self {
        Self {
            n,
            k,
            edges: Vec::new(),
            index: HashMap::new(),
            vertex_colors,
        }
    }

    /// Adds an edge (merged with an identical one) and returns its draft id.
    fn add(&mut self, u: usize, v: usize, c: usize) -> usize {
        let key = (u.min(v), u.max(v), c);
        let next = self.edges.len();
        let id = *self.index.entry(key).or_insert(next);
        if id == next {
            self.edges.push(key);
        }
        id
    }

    fn finish(
        self,
        spec: ConstructionSpec,
        optimum: Option<Vec<usize>>,
        adversarial: Option<Vec<usize>>,
    ) -> Result<Construction> {
        let mut sorted: Vec<usize> = (0..self.edges.len()).collect();
        sorted.sort_by_key(|&i| self.edges[i]);
        let mut new_id = vec![0; self.edges.len()];
        for (pos, &i) in sorted.iter().enumerate() {
            new_id[i] = pos;
        }
        let remap = |ids: Option<Vec<usize>>| {
            ids.map(|ids| {
                let mut out: Vec<usize> = ids.into_iter().map(|i| new_id[i]).collect();
                out.sort_unstable();
                out.dedup();
                out
            })
        };
        let adversarial_order = adversarial.is_some().then(|| Order::edges(new_id.clone()));
        let graph = match self.vertex_colors {
            None => ColoredGraph::Edge(EdgeColoredGraph::new(
                self.n,
                sorted
                    .iter()
                    .map(|&i| {
                        let (u, v, c) = self.edges[i];
                        Edge::new(u, v, c)
                    })
                    .collect(),
                self.k,
            )?),
            Some(colors) => ColoredGraph::Vertex(VertexColoredGraph::new(
                self.n,
                sorted
                    .iter()
                    .map(|&i| (self.edges[i].0, self.edges[i].1))
                    .collect(),
                colors.into_iter().map(Color).collect(),
                self.k,
            )?),
        };
        Ok(Construction {
            spec,
            graph,
            optimum: remap(optimum),
            adversarial: remap(adversarial),
            adversarial_order,
        })
    }
}

fn spec(family: Family, k: usize, n: usize, expected_edges: usize) -> ConstructionSpec {
    ConstructionSpec {
        family,
        k,
        n,
        ladder: None,
        expected_edges,
        expected_optimum: None,
        expected_adversarial: None,
    }
}

/// Minimum edge-color-avoiding graph of rank `r` (on `r + 1` vertices) with `k` colors.
pub fn gen_eca_min(k: usize, r: usize) -> Result<Construction> {
    if k < 2 || r + 1 < k {
        return Err(infeasible(format!(
            "eca_min needs k >= 2 and r >= k - 1, got k = {k}, r = {r}"
        )));
    }
    let mut d = Draft::new(r + 1, k, None);
    let mut all = Vec::new();
    for j in 0..r {
        all.push(d.add(j, j + 1, j % (k - 1)));
    }
    for j in (0..r).step_by(k - 1) {
        all.push(d.add(j, (j + k - 1).min(r), k - 1));
    }
    let count = r + r.div_ceil(k - 1);
    let mut s = spec(Family::EcaMin, k, r + 1, count);
    s.expected_optimum = Some(count);
    d.finish(s, Some(all), None)
}

/// Path in two interleaved colorings plus long chords; requires `(k-1) | (n-1)`.
pub fn gen_eca_tight_ratio(k: usize, n: usize) -> Result<Construction> {
    if k < 2 || n < k || n < 2 || (n - 1) % (k - 1) != 0 {
        return Err(infeasible(format!(
            "eca_tight needs k >= 2, n >= k and (k - 1) | (n - 1), got k = {k}, n = {n}"
        )));
    }
    let mut d = Draft::new(n, k, None);
    let base: Vec<usize> = (0..n - 1).map(|j| d.add(j, j + 1, j % (k - 1))).collect();
    let shifted: Vec<usize> = if k >= 3 {
        (0..n - 1)
            .map(|j| d.add(j, j + 1, (j + 1) % (k - 1)))
            .collect()
    } else {
        Vec::new()
    };
    let chords: Vec<usize> = (0..n - 1)
        .step_by(k - 1)
        .map(|j| d.add(j, j + k - 1, k - 1))
        .collect();
    let optimum: Vec<usize> = base.iter().chain(&chords).copied().collect();
    let adversarial: Vec<usize> = if k >= 3 {
        base.iter().chain(&shifted).copied().collect()
    } else {
        optimum.clone()
    };
    let mut s = spec(Family::EcaTight, k, n, d.edges.len());
    s.expected_optimum = Some(k * (n - 1) / (k - 1));
    s.expected_adversarial = Some(2 * (n - 1));
    d.finish(s, Some(optimum), Some(adversarial))
}

/// Doubled path where the copies of edge `j` have colors `j` and `j + 1` mod `k`.
pub fn gen_eca_maximal(k: usize, n: usize) -> Result<Construction> {
    if k < 2 || n < k {
        return Err(infeasible(format!(
            "eca_maximal needs k >= 2 and n >= k, got k = {k}, n = {n}"
        )));
    }
    let mut d = Draft::new(n, k, None);
    for j in 0..n - 1 {
        d.add(j, j + 1, j % k);
        d.add(j, j + 1, (j + 1) % k);
    }
    d.finish(spec(Family::EcaMaximal, k, n, 2 * (n - 1)), None, None)
}

/// Minimum vertex-color-avoiding graph: a path for `k <= 2`, otherwise a cycle.
pub fn gen_vca_min(k: usize, n: usize) -> Result<Construction> {
    if k == 0 || n < k || (k >= 3 && n < 3) {
        return Err(infeasible(format!(
            "vca_min needs 1 <= k <= n, got k = {k}, n = {n}"
        )));
    }
    let colors: Vec<usize> = if k <= 2 {
        (0..n).map(|v| usize::from(k == 2 && v == n - 1)).collect()
    } else {
        (0..n).map(|v| v.min(k - 1)).collect()
    };
    let mut d = Draft::new(n, k, Some(colors));
    let mut all: Vec<usize> = (0..n.saturating_sub(1))
        .map(|j| d.add(j, j + 1, 0))
        .collect();
    if k >= 3 {
        all.push(d.add(n - 1, 0, 0));
    }
    let count = all.len();
    let mut s = spec(Family::VcaMin, k, n, count);
    s.expected_optimum = Some(count);
    d.finish(s, Some(all), None)
}

fn path_and_chords(d: &mut Draft, seq: &[usize]) -> Vec<usize> {
    let mut ids: Vec<usize> = seq.windows(2).map(|w| d.add(w[1], w[0], 0)).collect();
    ids.extend(seq.windows(3).map(|w| d.add(w[0], w[2], 0)));
    ids
}

/// Path plus distance-two chords, together with a sparse optimum.
pub fn gen_vca_tight_ratio(k: usize, n: usize) -> Result<Construction> {
    if k < 2 || n < k.max(4) {
        return Err(infeasible(format!(
            "vca_tight needs k >= 2 and n >= max(k, 4), got k = {k}, n = {n}"
        )));
    }
    let mut d = Draft::new(n, k, Some((0..n).map(|v| v % k).collect()));
    let seq: Vec<usize> = (0..n).collect();
    let adversarial = path_and_chords(&mut d, &seq);
    let optimum: Vec<usize> = if k == 2 {
        let mut opt: Vec<usize> = (0..n - 2).map(|j| d.add(j, j + 2, 0)).collect();
        opt.push(d.add(0, 1, 0));
        opt
    } else {
        let mut opt: Vec<usize> = (0..n - k).map(|j| d.add(j, j + k, 0)).collect();
        opt.extend((n - k..n).map(|j| d.add(j, (j + 1) % k, 0)));
        opt
    };
    let mut s = spec(Family::VcaTight, k, n, d.edges.len());
    s.expected_optimum = Some(if k == 2 { n - 1 } else { n });
    s.expected_adversarial = Some(2 * n - 3);
    d.finish(s, Some(optimum), Some(adversarial))
}

/// Path plus distance-two chords with colors `j mod 3`; no edge is removable.
pub fn gen_vca_maximal_k3(n: usize) -> Result<Construction> {
    if n < 4 {
        return Err(infeasible(format!("vca_maximal_k3 needs n >= 4, got {n}")));
    }
    let mut d = Draft::new(n, 3, Some((0..n).map(|v| v % 3).collect()));
    path_and_chords(&mut d, &(0..n).collect::<Vec<_>>());
    d.finish(spec(Family::VcaMaximalK3, 3, n, 2 * n - 3), None, None)
}

/// Ladder of `2k - 2` rows; `key(i, j)` is the 1-based row `i` and column `j`.
struct Ladder {
    k: usize,
    m: usize,
    l: usize,
    cells: Vec<(usize, usize)>,
}

impl Ladder {
    fn new(k: usize, n: usize) -> Self {
        let rows = 2 * k - 2;
        let m = (n - 3) / rows;
        let l = (n - 3) % rows;
        let mut cells = Vec::new();
        for i in 1..=rows {
            for j in 1..=m {
                cells.push((i, j));
            }
        }
        if l == 0 {
            cells.extend([(1, m + 1), (1, m + 2), (rows, m + 1)]);
        } else {
            cells.extend((1..=l).map(|i| (i, m + 1)));
            cells.extend([(1, m + 2), (rows, m + 1), (rows, m + 2)]);
        }
        Self { k, m, l, cells }
    }

    fn color(&self, (i, _): (usize, usize)) -> usize {
        match i {
            1 => 0,
            i if i == 2 * self.k - 2 => self.k - 1,
            i => i / 2,
        }
    }

    fn edges(&self) -> Vec<((usize, usize), (usize, usize))> {
        let (k, m, l) = (self.k, self.m, self.l);
        let rows = 2 * k - 2;
        let mut e = Vec::new();
        e.extend((1..=m + 1).map(|j| ((1, j), (1, j + 1))));
        let last = if l == 0 { m } else { m + 1 };
        e.extend((1..=last).map(|j| ((rows, j), (rows, j + 1))));
        for j in 1..=m {
            e.extend((1..rows).map(|i| ((i, j), (i + 1, j))));
        }
        if l == 0 {
            e.push(((1, m + 1), (rows, m + 1)));
            e.push(((1, m + 2), (rows, m + 1)));
        } else {
            e.extend((1..l).map(|i| ((i, m + 1), (i + 1, m + 1))));
            e.push(((l, m + 1), (rows, m + 1)));
            e.push(((1, m + 2), (rows, m + 2)));
        }
        e
    }
}

fn ladder_feasible(k: usize, n: usize) -> bool {
    k >= 2 && n > 2 * k
}

/// Minimum internally vertex-color-avoiding graph: `K_n` for one color, else a colored ladder.
pub fn gen_ivca_min(k: usize, n: usize) -> Result<Construction> {
    if k == 1 {
        if n == 0 {
            return Err(infeasible("ivca_min needs n >= 1".into()));
        }
        let mut d = Draft::new(n, 1, Some(vec![0; n]));
        let all: Vec<usize> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .map(|(u, v)| d.add(u, v, 0))
            .collect();
        let count = all.len();
        let mut s = spec(Family::IvcaMin, 1, n, count);
        s.expected_optimum = Some(count);
        return d.finish(s, Some(all), None);
    }
    if !ladder_feasible(k, n) {
        return Err(infeasible(format!(
            "ivca_min needs k = 1 or n >= 2k + 1, got k = {k}, n = {n}"
        )));
    }
    let ladder = Ladder::new(k, n);
    let id: HashMap<_, _> = ladder
        .cells
        .iter()
        .enumerate()
        .map(|(v, &c)| (c, v))
        .collect();
    let colors = ladder.cells.iter().map(|&c| ladder.color(c)).collect();
    let mut d = Draft::new(n, k, Some(colors));
    let all: Vec<usize> = ladder
        .edges()
        .into_iter()
        .map(|(a, b)| d.add(id[&a], id[&b], 0))
        .collect();
    let count = all.len();
    let mut s = spec(Family::IvcaMin, k, n, count);
    s.ladder = Some((ladder.m, ladder.l));
    s.expected_optimum = Some(count);
    d.finish(s, Some(all), None)
}

/// Ladder cells in the order `w_0, ..., w_{n-1}`.
fn ladder_walk(k: usize, m: usize) -> Vec<(usize, usize)> {
    let rows = 2 * k - 2;
    let mut w = vec![(0, 0); rows * m + 3];
    for j in 0..m {
        w[2 * j * (k - 1)] = (1, j + 1);
        w[(2 * j + 1) * (k - 1)] = (rows, j + 1);
        for i in 1..k - 1 {
            w[i + 2 * j * (k - 1)] = (2 * i, j + 1);
        }
    }
    for j in 0..m.saturating_sub(1) {
        for i in 1..k - 1 {
            w[i + (2 * j + 1) * (k - 1)] = (2 * i + 1, j + 1);
        }
    }
    let tail = (2 * m - 1) * (k - 1) + 1;
    w[tail] = (1, m + 2);
    for i in 1..k - 1 {
        w[i + tail] = (2 * i + 1, m);
    }
    w[2 * m * (k - 1) + 1] = (1, m + 1);
    w[2 * m * (k - 1) + 2] = (rows, m + 1);
    w
}

/// The minimum ladder overlaid with a path-plus-chords walk; requires `k >= 3`, `(2k-2) | (n-3)`, `n >= 4k - 1`.
pub fn gen_ivca_tight_ratio(k: usize, n: usize) -> Result<Construction> {
    if k < 3 || n < 4 * k - 1 || (n - 3) % (2 * k - 2) != 0 {
        return Err(infeasible(format!(
            "ivca_tight needs k >= 3, n >= 4k - 1 and (2k - 2) | (n - 3), got k = {k}, n = {n}"
        )));
    }
    let ladder = Ladder::new(k, n);
    let walk = ladder_walk(k, ladder.m);
    let id: HashMap<_, _> = walk.iter().enumerate().map(|(v, &c)| (c, v)).collect();
    debug_assert_eq!(id.len(), n);
    let colors = walk.iter().map(|&c| ladder.color(c)).collect();
    let mut d = Draft::new(n, k, Some(colors));
    let adversarial = path_and_chords(&mut d, &(0..n).collect::<Vec<_>>());
    let optimum: Vec<usize> = ladder
        .edges()
        .into_iter()
        .map(|(a, b)| d.add(id[&a], id[&b], 0))
        .collect();
    let mut s = spec(Family::IvcaTight, k, n, d.edges.len());
    s.ladder = Some((ladder.m, ladder.l));
    s.expected_optimum = Some(optimum.len());
    s.expected_adversarial = Some(2 * n - 3);
    d.finish(s, Some(optimum), Some(adversarial))
}

/// A star centered at the only color-0 vertex plus a path through the leaves.
pub fn gen_ivca_maximal_k2(n: usize) -> Result<Construction> {
    if n < 3 {
        return Err(infeasible(format!("ivca_maximal_k2 needs n >= 3, got {n}")));
    }
    let mut colors = vec![1; n];
    colors[0] = 0;
    let mut d = Draft::new(n, 2, Some(colors));
    for j in 1..n {
        d.add(0, j, 0);
    }
    for j in 1..n - 1 {
        d.add(j, j + 1, 0);
    }
    d.finish(spec(Family::IvcaMaximalK2, 2, n, 2 * n - 3), None, None)
}
