//! Instances shared by the benchmarks.

use coloravoid::extremal::{ColoredGraph, Family};
use coloravoid::random::{random_edge_colored, seeded};
use coloravoid::{is_eca_connected, EdgeColoredGraph, Notion};

/// An edge-color-avoiding connected multigraph with roughly `density * n` edges.
pub fn eca_instance(n: usize, k: usize, density: usize, seed: u64) -> EdgeColoredGraph {
    let mut rng = seeded(seed);
    loop {
        let g = random_edge_colored(&mut rng, n, density * n, k);
        if is_eca_connected(&g).holds {
            return g;
        }
    }
}

/// The tight-ratio construction for `notion` with about `n` vertices.
pub fn tight_instance(notion: Notion, k: usize, n: usize) -> ColoredGraph {
    let (family, n) = match notion {
        Notion::Eca => (Family::EcaTight, n - (n - 1) % (k - 1)),
        Notion::Vca => (Family::VcaTight, n),
        Notion::Ivca => (Family::IvcaTight, n - (n - 3) % (2 * k - 2)),
    };
    family.generate(k, n).expect("feasible parameters").graph
}
