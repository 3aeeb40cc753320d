//! Sparse color-avoiding connected spanning subgraphs.

use std::collections::BTreeMap;
use std::fmt;

use crate::connectivity::{
    is_eca_connected, is_ivca_connected, is_vca_connected, CaVerdict, Notion,
};
use crate::dsu::DisjointSetUnion;
use crate::error::{Error, Result};
use crate::graph::{spanning_forest, Color, Edge, EdgeColoredGraph, Partition, VertexColoredGraph};
use crate::order::Order;

/// Either kind of colored graph, for code that is generic over the notion.
#[derive(Debug, Clone, Copy)]
pub enum GraphRef<'a> {
    Edge(&'a EdgeColoredGraph),
    Vertex(&'a VertexColoredGraph),
}

impl<'a> GraphRef<'a> {
    pub fn n(&self) -> usize {
        match self {
            GraphRef::Edge(g) => g.n(),
            GraphRef::Vertex(g) => g.n(),
        }
    }

    pub fn m(&self) -> usize {
        match self {
            GraphRef::Edge(g) => g.m(),
            GraphRef::Vertex(g) => g.m(),
        }
    }

    pub fn endpoints(&self, id: usize) -> (usize, usize) {
        match self {
            GraphRef::Edge(g) => g.edge(id).endpoints(),
            GraphRef::Vertex(g) => g.edges()[id],
        }
    }

    /// Number of colors in use.
    pub fn colors_used(&self) -> usize {
        match self {
            GraphRef::Edge(g) => g.used_colors().len(),
            GraphRef::Vertex(g) => g.used_colors().len(),
        }
    }

    /// Checks `notion` on the spanning subgraph with the given edge ids.
    pub fn check(&self, notion: Notion, ids: &[usize]) -> CaVerdict {
        match (self, notion) {
            (GraphRef::Edge(g), Notion::Eca) => is_eca_connected(&g.subgraph(ids)),
            (GraphRef::Vertex(g), Notion::Vca) => is_vca_connected(&g.subgraph(ids)),
            (GraphRef::Vertex(g), Notion::Ivca) => is_ivca_connected(&g.subgraph(ids)),
            _ => panic!("{notion} does not apply to this graph type"),
        }
    }

    pub fn satisfies(&self, notion: Notion, ids: &[usize]) -> bool {
        self.check(notion, ids).holds
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PhaseTag {
    SpanningTree,
    DifferentColorNeighbor,
    TreeCompletion,
    ColorRepair(Color),
    WholeGraph,
}

impl fmt::Display for PhaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PhaseTag::SpanningTree => f.write_str("spanning_tree"),
            PhaseTag::DifferentColorNeighbor => f.write_str("different_color_neighbor"),
            PhaseTag::TreeCompletion => f.write_str("tree_completion"),
            PhaseTag::ColorRepair(c) => write!(f, "repair_color_{c}"),
            PhaseTag::WholeGraph => f.write_str("whole_graph"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsifyResult {
    /// Selected edge ids in ascending order.
    pub selected: Vec<usize>,
    /// Phase that selected each entry of `selected`.
    pub tags: Vec<PhaseTag>,
}

impl SparsifyResult {
    fn from_tags(tag: Vec<Option<PhaseTag>>) -> Self {
        let (selected, tags) = tag
            .into_iter()
            .enumerate()
            .filter_map(|(id, t)| t.map(|t| (id, t)))
            .unzip();
        Self { selected, tags }
    }

    pub fn len(&self) -> usize {
        self.selected.len()
    }

    pub fn is_empty(&self) -> bool {
        self.selected.is_empty()
    }

    pub fn phase_counts(&self) -> BTreeMap<PhaseTag, usize> {
        let mut counts = BTreeMap::new();
        for &t in &self.tags {
            *counts.entry(t).or_insert(0) += 1;
        }
        counts
    }

    pub fn with_tag(&self, tag: PhaseTag) -> Vec<usize> {
        self.selected
            .iter()
            .zip(&self.tags)
            .filter(|(_, &t)| t == tag)
            .map(|(&id, _)| id)
            .collect()
    }
}

fn require(notion: Notion, verdict: CaVerdict) -> Result<()> {
    match verdict.witness {
        Some(witness) if !verdict.holds => Err(Error::PreconditionFailed {
            notion: match notion {
                Notion::Eca => "edge-color-avoiding",
                Notion::Vca => "vertex-color-avoiding",
                Notion::Ivca => "internally vertex-color-avoiding",
            },
            witness,
        }),
        _ => Ok(()),
    }
}

/// Components of the selected edges among `alive` vertices, contracted inside the
/// candidate edges (already in scan order); returns the original ids of a spanning
/// tree of the contraction.
fn contract_and_span(
    n: usize,
    alive: &[bool],
    selected: &[bool],
    candidates: &[usize],
    endpoints: impl Fn(usize) -> (usize, usize),
    color: impl Fn(usize) -> Color,
) -> Vec<usize> {
    let mut local = vec![usize::MAX; n];
    let mut count = 0;
    for v in 0..n {
        if alive[v] {
            local[v] = count;
            count += 1;
        }
    }
    let mut dsu = DisjointSetUnion::new(count);
    for (id, _) in selected.iter().enumerate().filter(|(_, &s)| s) {
        let (u, v) = endpoints(id);
        if alive[u] && alive[v] {
            dsu.union(local[u], local[v]);
        }
    }
    if dsu.components() <= 1 {
        return Vec::new();
    }
    let sub = EdgeColoredGraph::new(
        count,
        candidates
            .iter()
            .map(|&id| {
                let (u, v) = endpoints(id);
                Edge::new(local[u], local[v], color(id))
            })
            .collect(),
        0,
    )
    .expect("candidate edges lie inside the alive vertices");
    let w = Partition::from_labels(&dsu.labels());
    let (h, back) = sub
        .contract_partition(&w)
        .expect("labels cover every alive vertex");
    spanning_forest(h.n(), 0..h.m(), |i| h.edge(i).endpoints())
        .into_iter()
        .map(|i| candidates[back[i]])
        .collect()
}

fn select(tag: &mut [Option<PhaseTag>], ids: impl IntoIterator<Item = usize>, t: PhaseTag) {
    for id in ids {
        tag[id].get_or_insert(t);
    }
}

fn selected_mask(tag: &[Option<PhaseTag>]) -> Vec<bool> {
    tag.iter().map(Option::is_some).collect()
}

/// Spanning tree followed by one contraction repair per color.
pub fn eca_sparsify(g: &EdgeColoredGraph, order: &Order) -> Result<SparsifyResult> {
    require(Notion::Eca, is_eca_connected(g))?;
    let seq = order.edge_sequence(g.m())?;
    let mut tag = vec![None; g.m()];
    let ends = |id: usize| g.edge(id).endpoints();
    select(
        &mut tag,
        spanning_forest(g.n(), seq.iter().copied(), ends),
        PhaseTag::SpanningTree,
    );
    let alive = vec![true; g.n()];
    for c in order.color_sequence(&g.used_colors())? {
        let mut mask = selected_mask(&tag);
        for (id, e) in g.edges().iter().enumerate() {
            mask[id] &= e.color != c;
        }
        let candidates: Vec<usize> = seq
            .iter()
            .copied()
            .filter(|&id| g.edge(id).color != c)
            .collect();
        let added = contract_and_span(g.n(), &alive, &mask, &candidates, ends, |id| {
            g.edge(id).color
        });
        select(&mut tag, added, PhaseTag::ColorRepair(c));
    }
    Ok(SparsifyResult::from_tags(tag))
}

fn vertex_repairs(
    g: &VertexColoredGraph,
    order: &Order,
    seq: &[usize],
    tag: &mut [Option<PhaseTag>],
) -> Result<()> {
    let ends = |id: usize| g.edges()[id];
    for c in order.color_sequence(&g.used_colors())? {
        let alive: Vec<bool> = g.colors().iter().map(|&x| x != c).collect();
        let candidates: Vec<usize> = seq
            .iter()
            .copied()
            .filter(|&id| {
                let (u, v) = ends(id);
                alive[u] && alive[v]
            })
            .collect();
        let mask = selected_mask(tag);
        let added = contract_and_span(g.n(), &alive, &mask, &candidates, ends, |_| Color(0));
        select(tag, added, PhaseTag::ColorRepair(c));
    }
    Ok(())
}

/// Spanning tree followed by one contraction repair per deleted color class.
pub fn vca_sparsify(g: &VertexColoredGraph, order: &Order) -> Result<SparsifyResult> {
    require(Notion::Vca, is_vca_connected(g))?;
    let seq = order.edge_sequence(g.m())?;
    let mut tag = vec![None; g.m()];
    let tree = spanning_forest(g.n(), seq.iter().copied(), |id| g.edges()[id]);
    select(&mut tag, tree, PhaseTag::SpanningTree);
    vertex_repairs(g, order, &seq, &mut tag)?;
    Ok(SparsifyResult::from_tags(tag))
}

/// Different-color neighbors first, then tree completion and per-color repairs.
pub fn ivca_sparsify(g: &VertexColoredGraph, order: &Order) -> Result<SparsifyResult> {
    require(Notion::Ivca, is_ivca_connected(g))?;
    if g.used_colors().len() <= 1 {
        return Ok(SparsifyResult::from_tags(vec![
            Some(PhaseTag::WholeGraph);
            g.m()
        ]));
    }
    let seq = order.edge_sequence(g.m())?;
    let mut rank = vec![0; g.m()];
    for (pos, &id) in seq.iter().enumerate() {
        rank[id] = pos;
    }
    let adj = g.adjacency();
    let col = g.colors();
    let mut tag = vec![None; g.m()];
    let mut has_other = vec![false; g.n()];
    for v in order.vertex_sequence(g.n())? {
        if has_other[v] {
            continue;
        }
        let best = adj[v]
            .iter()
            .filter(|&&(w, _)| col[w] != col[v])
            .min_by_key(|&&(_, id)| rank[id]);
        if let Some(&(w, id)) = best {
            tag[id] = Some(PhaseTag::DifferentColorNeighbor);
            has_other[v] = true;
            has_other[w] = true;
        }
    }
    let all = vec![true; g.n()];
    let mask = selected_mask(&tag);
    let added = contract_and_span(g.n(), &all, &mask, &seq, |id| g.edges()[id], |_| Color(0));
    select(&mut tag, added, PhaseTag::TreeCompletion);
    vertex_repairs(g, order, &seq, &mut tag)?;
    Ok(SparsifyResult::from_tags(tag))
}

/// Dispatches on `notion`.
pub fn sparsify(g: GraphRef<'_>, notion: Notion, order: &Order) -> Result<SparsifyResult> {
    match (g, notion) {
        (GraphRef::Edge(g), Notion::Eca) => eca_sparsify(g, order),
        (GraphRef::Vertex(g), Notion::Vca) => vca_sparsify(g, order),
        (GraphRef::Vertex(g), Notion::Ivca) => ivca_sparsify(g, order),
        _ => Err(Error::InfeasibleParameters(format!(
            "{notion} does not apply to this graph type"
        ))),
    }
}

/// Removes edges, highest id first, while the property survives. The result is deletion-minimal.
pub fn prune_subgraph(g: GraphRef<'_>, selected: &[usize], notion: Notion) -> Vec<usize> {
    let mut keep = selected.to_vec();
    keep.sort_unstable();
    for pos in (0..keep.len()).rev() {
        let id = keep.remove(pos);
        if !g.satisfies(notion, &keep) {
            keep.insert(pos, id);
        }
    }
    keep
}

/// Optimal VCA subgraph for two colors: a tree in each color class plus one bichromatic edge.
pub fn vca_optimal_k2(g: &VertexColoredGraph) -> Result<Vec<usize>> {
    let used = g.used_colors();
    if used.len() != 2 {
        return Err(Error::WrongColorCount {
            expected: 2,
            found: used.len(),
        });
    }
    let col = g.colors();
    let mut picked = Vec::new();
    for &c in &used {
        let (sub, map) = g.delete_color_vertices(if c == used[0] { used[1] } else { used[0] });
        if !sub.is_connected() {
            return Err(Error::DisconnectedColorClass { color: c });
        }
        let inside: Vec<usize> = (0..g.m())
            .filter(|&id| {
                let (u, v) = g.edges()[id];
                col[u] == c && col[v] == c
            })
            .collect();
        picked.extend(spanning_forest(g.n(), inside, |id| {
            let (u, v) = g.edges()[id];
            (map[u].unwrap(), map[v].unwrap())
        }));
    }
    require(Notion::Vca, is_vca_connected(g))?;
    let bridge = (0..g.m())
        .find(|&id| {
            let (u, v) = g.edges()[id];
            col[u] != col[v]
        })
        .expect("a connected two-colored graph has a bichromatic edge");
    picked.push(bridge);
    picked.sort_unstable();
    Ok(picked)
}

/// Fewest edges a spanning subgraph with the property can have, on `n` vertices using exactly `k` colors.
pub fn min_edges_bound(notion: Notion, k: usize, n: usize) -> Result<usize> {
    let infeasible = || {
        Err(Error::InfeasibleParameters(format!(
            "no {notion}-connected graph on {n} vertices uses exactly {k} colors"
        )))
    };
    if n == 0 {
        return if k == 0 { Ok(0) } else { infeasible() };
    }
    match notion {
        Notion::Eca => match (k, n) {
            (_, 1) => Ok(0),
            (0 | 1, _) => infeasible(),
            _ => Ok((k * (n - 1)).div_ceil(k - 1)),
        },
        Notion::Vca if k == 0 || k > n => infeasible(),
        Notion::Vca if k <= 2 => Ok(n - 1),
        Notion::Vca => Ok(n),
        Notion::Ivca if k == 0 || k > n => infeasible(),
        Notion::Ivca if k == 1 => Ok(n * (n - 1) / 2),
        Notion::Ivca => Ok(((2 * k - 1) * n - 2 * k).div_ceil(2 * k - 2)),
    }
}
