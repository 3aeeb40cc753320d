//! Seeded random instances for property suites and benchmarks.

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::connectivity::Notion;
use crate::extremal::ColoredGraph;
use crate::graph::{Color, Edge, EdgeColoredGraph, VertexColoredGraph};

const ATTEMPTS: usize = 400;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `len` colors from `0..k`, each used at least once when `len >= k`.
pub fn surjective_colors<R: Rng>(rng: &mut R, len: usize, k: usize) -> Vec<Color> {
    assert!(k > 0 || len == 0, "cannot color with zero colors");
    let mut colors: Vec<Color> = (0..len)
        .map(|i| {
            if i < k {
                Color(i)
            } else {
                Color(rng.gen_range(0..k))
            }
        })
        .collect();
    colors.shuffle(rng);
    colors
}

/// Multigraph with `m` edges between uniform random distinct endpoints.
pub fn random_edge_colored<R: Rng>(rng: &mut R, n: usize, m: usize, k: usize) -> EdgeColoredGraph {
    assert!(n >= 2 || m == 0, "edges need two vertices");
    let colors = surjective_colors(rng, m, k);
    let edges = colors
        .into_iter()
        .map(|c| {
            let u = rng.gen_range(0..n);
            let mut v = rng.gen_range(0..n - 1);
            if v >= u {
                v += 1;
            }
            Edge::new(u, v, c)
        })
        .collect();
    EdgeColoredGraph::new(n, edges, k).expect("endpoints are in range")
}

/// Simple graph with `m` distinct uniform random edges.
pub fn random_vertex_colored<R: Rng>(
    rng: &mut R,
    n: usize,
    m: usize,
    k: usize,
) -> VertexColoredGraph {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let m = m.min(pairs.len());
    let edges = index::sample(rng, pairs.len(), m)
        .into_iter()
        .map(|i| pairs[i])
        .collect();
    let colors = surjective_colors(rng, n, k);
    VertexColoredGraph::new(n, edges, colors, k).expect("sampled pairs are distinct")
}

/// A random graph with `n` vertices, exactly `k` colors, at most `max_edges` edges and the
/// given property, by rejection sampling. `None` when no sample succeeds.
pub fn random_valid<R: Rng>(
    rng: &mut R,
    notion: Notion,
    n: usize,
    k: usize,
    max_edges: usize,
) -> Option<ColoredGraph> {
    if k == 0 || n == 0 {
        return None;
    }
    for _ in 0..ATTEMPTS {
        let g = match notion {
            Notion::Eca => {
                if n < 2 || max_edges < k.max(n - 1) {
                    return None;
                }
                let m = rng.gen_range(k.max(n - 1)..=max_edges);
                ColoredGraph::Edge(random_edge_colored(rng, n, m, k))
            }
            Notion::Vca | Notion::Ivca => {
                let most = max_edges.min(n * (n - 1) / 2);
                if n < k || most + 1 < n {
                    return None;
                }
                let m = rng.gen_range(n - 1..=most);
                ColoredGraph::Vertex(random_vertex_colored(rng, n, m, k))
            }
        };
        let all: Vec<usize> = (0..g.as_ref().m()).collect();
        if g.as_ref().satisfies(notion, &all) {
            return Some(g);
        }
    }
    None
}

/// Edge-colored graph whose graphic matroid is courteous.
pub fn random_courteous_graphic<R: Rng>(
    rng: &mut R,
    n: usize,
    k: usize,
    max_edges: usize,
) -> Option<EdgeColoredGraph> {
    if n < 2 || k == 0 || max_edges < k {
        return None;
    }
    for _ in 0..ATTEMPTS {
        let m = rng.gen_range(k..=max_edges);
        let g = random_edge_colored(rng, n, m, k);
        let courteous = (0..k).all(|c| {
            let rest = g.delete_color_edges(Color(c));
            forest_rank(&rest) == forest_rank(&g)
        });
        if courteous {
            return Some(g);
        }
    }
    None
}

fn forest_rank(g: &EdgeColoredGraph) -> usize {
    let mut dsu = crate::dsu::DisjointSetUnion::new(g.n());
    g.edges().iter().filter(|e| dsu.union(e.u, e.v)).count()
}
