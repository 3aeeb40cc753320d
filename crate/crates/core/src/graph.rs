//! Colored graph types and the primitives shared by every other module.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use crate::dsu::DisjointSetUnion;
use crate::error::{Error, Result};

/// A dense color id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Color(pub usize);

impl Color {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<usize> for Color {
    fn from(c: usize) -> Self {
        Color(c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub color: Color,
}

impl Edge {
    pub fn new(u: usize, v: usize, color: impl Into<Color>) -> Self {
        Self {
            u,
            v,
            color: color.into(),
        }
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }
}

fn check_endpoints(u: usize, v: usize, n: usize) -> Result<()> {
    for x in [u, v] {
        if x >= n {
            return Err(Error::InvalidVertex { vertex: x, n });
        }
    }
    if u == v {
        return Err(Error::SelfLoop { vertex: u });
    }
    Ok(())
}

fn sorted_used(colors: impl Iterator<Item = Color>) -> Vec<Color> {
    colors.collect::<BTreeSet<_>>().into_iter().collect()
}

fn canonical(used: &[Color], k: usize) -> bool {
    used.len() == k && used.iter().all(|c| c.0 < k)
}

/// Multigraph with one color per edge. Parallel edges are allowed, self-loops are not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoredGraph {
    n: usize,
    edges: Vec<Edge>,
    k: usize,
}

impl EdgeColoredGraph {
    pub fn new(n: usize, edges: Vec<Edge>, k: usize) -> Result<Self> {
        for e in &edges {
            check_endpoints(e.u, e.v, n)?;
        }
        Ok(Self { n, edges, k })
    }

    pub fn from_triples(n: usize, triples: &[(usize, usize, usize)], k: usize) -> Result<Self> {
        Self::new(
            n,
            triples
                .iter()
                .map(|&(u, v, c)| Edge::new(u, v, c))
                .collect(),
            k,
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Edge {
        self.edges[id]
    }

    pub fn used_colors(&self) -> Vec<Color> {
        sorted_used(self.edges.iter().map(|e| e.color))
    }

    /// Size of the color range checks iterate over: declared colors plus any stray ids.
    pub fn color_universe(&self) -> usize {
        self.edges
            .iter()
            .map(|e| e.color.0 + 1)
            .max()
            .unwrap_or(0)
            .max(self.k)
    }

    pub fn is_canonically_colored(&self) -> bool {
        canonical(&self.used_colors(), self.k)
    }

    /// G with every edge of color `c` removed.
    pub fn delete_color_edges(&self, c: Color) -> EdgeColoredGraph {
        Self {
            n: self.n,
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|e| e.color != c)
                .collect(),
            k: self.k,
        }
    }

    /// Spanning subgraph keeping the given edge ids, in the given order.
    pub fn subgraph(&self, ids: &[usize]) -> EdgeColoredGraph {
        Self {
            n: self.n,
            edges: ids.iter().map(|&i| self.edges[i]).collect(),
            k: self.k,
        }
    }

    pub fn is_connected(&self) -> bool {
        is_connected(self.n, self.edges.iter().map(Edge::endpoints))
    }

    /// Contracts each part of `w` to a single vertex.
    ///
    /// Crossing edges are kept once per (part pair, color); the back-map gives the
    /// id in `self` of the first edge that produced each contracted edge.
    pub fn contract_partition(&self, w: &Partition) -> Result<(EdgeColoredGraph, Vec<usize>)> {
        if w.universe() != self.n {
            return Err(Error::NotAPartition(format!(
                "partition covers {} vertices, graph has {}",
                w.universe(),
                self.n
            )));
        }
        let part = w.part_of();
        let mut seen = HashSet::new();
        let mut edges = Vec::new();
        let mut back = Vec::new();
        for (id, e) in self.edges.iter().enumerate() {
            let (a, b) = (part[e.u], part[e.v]);
            if a == b {
                continue;
            }
            if seen.insert((a.min(b), a.max(b), e.color)) {
                edges.push(Edge::new(a, b, e.color));
                back.push(id);
            }
        }
        let g = Self {
            n: w.len(),
            edges,
            k: self.k,
        };
        Ok((g, back))
    }
}

/// Simple graph with one color per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexColoredGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    colors: Vec<Color>,
    k: usize,
}

impl VertexColoredGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>, colors: Vec<Color>, k: usize) -> Result<Self> {
        if colors.len() != n {
            return Err(Error::ColorCountMismatch {
                expected: n,
                found: colors.len(),
            });
        }
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v) in &edges {
            check_endpoints(u, v, n)?;
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::ParallelEdge { u, v });
            }
        }
        Ok(Self {
            n,
            edges,
            colors,
            k,
        })
    }

    pub fn from_parts(
        n: usize,
        edges: &[(usize, usize)],
        colors: &[usize],
        k: usize,
    ) -> Result<Self> {
        Self::new(
            n,
            edges.to_vec(),
            colors.iter().map(|&c| Color(c)).collect(),
            k,
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn used_colors(&self) -> Vec<Color> {
        sorted_used(self.colors.iter().copied())
    }

    pub fn color_universe(&self) -> usize {
        self.colors
            .iter()
            .map(|c| c.0 + 1)
            .max()
            .unwrap_or(0)
            .max(self.k)
    }

    pub fn is_canonically_colored(&self) -> bool {
        canonical(&self.used_colors(), self.k)
    }

    /// Adjacency lists of `(neighbor, edge id)`, in edge-list order.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        adj
    }

    /// Induced subgraph on the vertices whose color is not `c`, with the old-to-new index map.
    pub fn delete_color_vertices(&self, c: Color) -> (VertexColoredGraph, Vec<Option<usize>>) {
        let mut map = vec![None; self.n];
        let mut colors = Vec::new();
        for (slot, &col) in map.iter_mut().zip(&self.colors) {
            if col != c {
                *slot = Some(colors.len());
                colors.push(col);
            }
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((map[u]?, map[v]?)))
            .collect();
        let g = Self {
            n: colors.len(),
            edges,
            colors,
            k: self.k,
        };
        (g, map)
    }

    /// Spanning subgraph keeping the given edge ids, in the given order.
    pub fn subgraph(&self, ids: &[usize]) -> VertexColoredGraph {
        Self {
            n: self.n,
            edges: ids.iter().map(|&i| self.edges[i]).collect(),
            colors: self.colors.clone(),
            k: self.k,
        }
    }

    pub fn is_connected(&self) -> bool {
        is_connected(self.n, self.edges.iter().copied())
    }
}

/// Disjoint vertex sets covering `0..universe`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    universe: usize,
    parts: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(universe: usize, parts: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; universe];
        for part in &parts {
            if part.is_empty() {
                return Err(Error::NotAPartition("empty part".into()));
            }
            for &v in part {
                if v >= universe {
                    return Err(Error::NotAPartition(format!("vertex {v} outside universe")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::NotAPartition(format!("vertex {v} appears twice")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::NotAPartition(format!("vertex {v} not covered")));
        }
        Ok(Self { universe, parts })
    }

    /// Builds the partition whose parts are the classes of equal labels.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut index: HashMap<usize, usize> = HashMap::new();
        let mut parts: Vec<Vec<usize>> = Vec::new();
        for (v, &l) in labels.iter().enumerate() {
            let p = *index.entry(l).or_insert_with(|| {
                parts.push(Vec::new());
                parts.len() - 1
            });
            parts[p].push(v);
        }
        Self {
            universe: labels.len(),
            parts,
        }
    }

    pub fn singletons(universe: usize) -> Self {
        Self {
            universe,
            parts: (0..universe).map(|v| vec![v]).collect(),
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part index of every vertex.
    pub fn part_of(&self) -> Vec<usize> {
        let mut of = vec![0; self.universe];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                of[v] = i;
            }
        }
        of
    }
}

/// Connectivity of an undirected graph on `0..n`. The empty graph counts as connected.
pub fn is_connected(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> bool {
    if n <= 1 {
        return true;
    }
    let mut dsu = DisjointSetUnion::new(n);
    for (u, v) in edges {
        dsu.union(u, v);
        if dsu.components() == 1 {
            return true;
        }
    }
    false
}

/// BFS component labels; vertices with `alive[v] == false` get `usize::MAX`.
pub(crate) fn components_masked(
    adj: &[Vec<(usize, usize)>],
    alive: &[bool],
) -> (Vec<usize>, usize) {
    let n = adj.len();
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    let mut queue = VecDeque::new();
    for s in 0..n {
        if !alive[s] || label[s] != usize::MAX {
            continue;
        }
        label[s] = count;
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            for &(y, _) in &adj[x] {
                if alive[y] && label[y] == usize::MAX {
                    label[y] = count;
                    queue.push_back(y);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

/// Kruskal scan: keeps each edge id (in the given sequence) that joins two new components.
pub fn spanning_forest(
    n: usize,
    ids: impl IntoIterator<Item = usize>,
    endpoints: impl Fn(usize) -> (usize, usize),
) -> Vec<usize> {
    let mut dsu = DisjointSetUnion::new(n);
    let mut picked = Vec::new();
    for id in ids {
        let (u, v) = endpoints(id);
        if dsu.union(u, v) {
            picked.push(id);
            if dsu.components() == 1 {
                break;
            }
        }
    }
    picked
}
