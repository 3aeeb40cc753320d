//! Recognition of edge-, vertex- and internally vertex-color-avoiding connectivity.

use std::collections::VecDeque;
use std::fmt;

use crate::graph::{components_masked, Color, EdgeColoredGraph, VertexColoredGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Notion {
    Eca,
    Vca,
    Ivca,
}

impl Notion {
    pub fn name(self) -> &'static str {
        match self {
            Notion::Eca => "eca",
            Notion::Vca => "vca",
            Notion::Ivca => "ivca",
        }
    }
}

impl fmt::Display for Notion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Notion::Eca => "ECA",
            Notion::Vca => "VCA",
            Notion::Ivca => "IVCA",
        })
    }
}

impl std::str::FromStr for Notion {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "eca" => Ok(Notion::Eca),
            "vca" => Ok(Notion::Vca),
            "ivca" => Ok(Notion::Ivca),
            other => Err(format!("unknown notion {other:?}")),
        }
    }
}

/// A color and a vertex pair `u < v` that are not connected avoiding that color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Witness {
    pub color: Color,
    pub u: usize,
    pub v: usize,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "vertices {} and {} are not connected avoiding color {}",
            self.u, self.v, self.color
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CaVerdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl CaVerdict {
    pub const HOLDS: CaVerdict = CaVerdict {
        holds: true,
        witness: None,
    };

    pub fn fails(w: Witness) -> Self {
        Self {
            holds: false,
            witness: Some(w),
        }
    }
}

/// Colors a checker must quantify over. At least one, so plain connectivity is always tested.
fn color_range(universe: usize) -> impl Iterator<Item = Color> {
    (0..universe.max(1)).map(Color)
}

fn first_outside(labels: &[usize]) -> Option<usize> {
    labels.iter().position(|&l| l != labels[0])
}

fn edge_adjacency(g: &EdgeColoredGraph, skip: Option<Color>) -> Vec<Vec<(usize, usize)>> {
    let mut adj = vec![Vec::new(); g.n()];
    for (id, e) in g.edges().iter().enumerate() {
        if Some(e.color) != skip {
            adj[e.u].push((e.v, id));
            adj[e.v].push((e.u, id));
        }
    }
    adj
}

pub fn is_eca_connected(g: &EdgeColoredGraph) -> CaVerdict {
    let n = g.n();
    if n <= 1 {
        return CaVerdict::HOLDS;
    }
    let alive = vec![true; n];
    for c in color_range(g.color_universe()) {
        let (labels, count) = components_masked(&edge_adjacency(g, Some(c)), &alive);
        if count > 1 {
            let v = first_outside(&labels).expect("more than one component");
            return CaVerdict::fails(Witness { color: c, u: 0, v });
        }
    }
    CaVerdict::HOLDS
}

/// Vertices reachable from `s` by a path whose internal vertices avoid `c`.
fn internal_reach(adj: &[Vec<(usize, usize)>], colors: &[Color], s: usize, c: Color) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    seen[s] = true;
    let mut queue = VecDeque::from([s]);
    while let Some(x) = queue.pop_front() {
        if x != s && colors[x] == c {
            continue;
        }
        for &(y, _) in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    seen
}

fn smallest_pair(n: usize, mut fails: impl FnMut(usize) -> Option<usize>) -> (usize, usize) {
    (0..n)
        .find_map(|u| fails(u).map(|v| (u, v)))
        .expect("a failing color has a failing pair")
}

pub fn is_vca_connected(g: &VertexColoredGraph) -> CaVerdict {
    let n = g.n();
    if n <= 1 {
        return CaVerdict::HOLDS;
    }
    let adj = g.adjacency();
    let colors = g.colors();
    let (all, all_count) = components_masked(&adj, &vec![true; n]);
    for c in color_range(g.color_universe()) {
        let alive: Vec<bool> = colors.iter().map(|&x| x != c).collect();
        let (avoid, avoid_count) = components_masked(&adj, &alive);
        if all_count == 1 && avoid_count <= 1 {
            continue;
        }
        let (u, v) = smallest_pair(n, |u| {
            (u + 1..n).find(|&v| all[u] != all[v] || (alive[u] && alive[v] && avoid[u] != avoid[v]))
        });
        return CaVerdict::fails(Witness { color: c, u, v });
    }
    CaVerdict::HOLDS
}

pub fn is_ivca_connected(g: &VertexColoredGraph) -> CaVerdict {
    let n = g.n();
    if n <= 1 {
        return CaVerdict::HOLDS;
    }
    let adj = g.adjacency();
    let colors = g.colors();
    for c in color_range(g.color_universe()) {
        let alive: Vec<bool> = colors.iter().map(|&x| x != c).collect();
        let outside = alive.iter().filter(|&&a| a).count();
        let ok = if outside == 0 {
            g.m() == n * (n - 1) / 2
        } else {
            let (_, count) = components_masked(&adj, &alive);
            count == 1 && (0..n).all(|v| alive[v] || adj[v].iter().any(|&(w, _)| alive[w]))
        };
        if ok {
            continue;
        }
        let (u, v) = smallest_pair(n, |u| {
            let reach = internal_reach(&adj, colors, u, c);
            (u + 1..n).find(|&v| !reach[v])
        });
        return CaVerdict::fails(Witness { color: c, u, v });
    }
    CaVerdict::HOLDS
}

pub fn check_vertex(notion: Notion, g: &VertexColoredGraph) -> CaVerdict {
    match notion {
        Notion::Vca => is_vca_connected(g),
        Notion::Ivca => is_ivca_connected(g),
        Notion::Eca => panic!("ECA is defined on edge-colored graphs"),
    }
}

/// Literal per-pair, per-color evaluation of the definitions. Cubic and meant as a test oracle.
pub mod definitional {
    use super::*;
    use crate::error::{Error, Result};

    pub const DEFAULT_CAP: usize = 12;

    fn guard(n: usize, cap: Option<usize>) -> Result<()> {
        match cap {
            Some(cap) if n > cap => Err(Error::TooLarge { n, cap }),
            _ => Ok(()),
        }
    }

    /// BFS from `s` to `t` through vertices allowed by `pass`; endpoints are always allowed.
    fn path_exists(
        adj: &[Vec<(usize, usize)>],
        s: usize,
        t: usize,
        pass: impl Fn(usize) -> bool,
    ) -> bool {
        let mut seen = vec![false; adj.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            if x == t {
                return true;
            }
            if x != s && !pass(x) {
                continue;
            }
            for &(y, _) in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        false
    }

    fn scan(
        n: usize,
        universe: usize,
        mut ok: impl FnMut(Color, usize, usize) -> bool,
    ) -> CaVerdict {
        for c in color_range(universe) {
            for u in 0..n {
                for v in u + 1..n {
                    if !ok(c, u, v) {
                        return CaVerdict::fails(Witness { color: c, u, v });
                    }
                }
            }
        }
        CaVerdict::HOLDS
    }

    pub fn is_eca_connected(g: &EdgeColoredGraph, cap: Option<usize>) -> Result<CaVerdict> {
        guard(g.n(), cap)?;
        let per_color: Vec<_> = color_range(g.color_universe())
            .map(|c| edge_adjacency(g, Some(c)))
            .collect();
        Ok(scan(g.n(), g.color_universe(), |c, u, v| {
            path_exists(&per_color[c.0], u, v, |_| true)
        }))
    }

    pub fn is_vca_connected(g: &VertexColoredGraph, cap: Option<usize>) -> Result<CaVerdict> {
        guard(g.n(), cap)?;
        let adj = g.adjacency();
        let col = g.colors();
        Ok(scan(g.n(), g.color_universe(), |c, u, v| {
            if !path_exists(&adj, u, v, |_| true) {
                return false;
            }
            col[u] == c || col[v] == c || path_exists(&adj, u, v, |x| col[x] != c)
        }))
    }

    pub fn is_ivca_connected(g: &VertexColoredGraph, cap: Option<usize>) -> Result<CaVerdict> {
        guard(g.n(), cap)?;
        let adj = g.adjacency();
        let col = g.colors();
        Ok(scan(g.n(), g.color_universe(), |c, u, v| {
            path_exists(&adj, u, v, |x| col[x] != c)
        }))
    }
}

/// A component of G − v, flagged by whether all of its vertices share v's color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutComponent {
    pub vertices: Vec<usize>,
    pub only_cut_color: bool,
}

/// Components of G − v in order of their smallest vertex.
pub fn cut_vertex_color_components(g: &VertexColoredGraph, v: usize) -> Vec<CutComponent> {
    let adj = g.adjacency();
    let mut alive = vec![true; g.n()];
    alive[v] = false;
    let (labels, count) = components_masked(&adj, &alive);
    let mut parts = vec![
        CutComponent {
            vertices: Vec::new(),
            only_cut_color: true,
        };
        count
    ];
    for (x, &l) in labels.iter().enumerate() {
        if l == usize::MAX {
            continue;
        }
        parts[l].vertices.push(x);
        if g.color(x) != g.color(v) {
            parts[l].only_cut_color = false;
        }
    }
    parts
}

fn lowlink(n: usize, adj: &[Vec<(usize, usize)>]) -> (Vec<usize>, Vec<usize>) {
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut bridges = Vec::new();
    let mut cut = vec![false; n];
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(top) = stack.last_mut() {
            let (v, parent_edge, i) = *top;
            if i < adj[v].len() {
                top.2 += 1;
                let (w, id) = adj[v][i];
                if id == parent_edge {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, id, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        bridges.push(parent_edge);
                    }
                    if p != root && low[v] >= disc[p] {
                        cut[p] = true;
                    }
                }
            }
        }
        if root_children >= 2 {
            cut[root] = true;
        }
    }
    bridges.sort_unstable();
    let cut = (0..n).filter(|&v| cut[v]).collect();
    (bridges, cut)
}

/// Ids of bridge edges. A parallel pair is never a bridge.
pub fn bridges(g: &EdgeColoredGraph) -> Vec<usize> {
    lowlink(g.n(), &edge_adjacency(g, None)).0
}

/// Cut vertices in ascending order.
pub fn articulation_points(g: &VertexColoredGraph) -> Vec<usize> {
    lowlink(g.n(), &g.adjacency()).1
}
