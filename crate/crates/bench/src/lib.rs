use edgeideal::{Graph, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Edge-probability random graph, deterministic in the seed. Benchmarks need
/// inputs denser than paths and cycles but stable across runs.
pub fn seeded_graph(n: usize, edge_probability: f64, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in (u + 1)..=n {
            if rng.gen_bool(edge_probability) {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_graphs_are_reproducible() {
        let a = seeded_graph(18, 0.2, 18).unwrap();
        let b = seeded_graph(18, 0.2, 18).unwrap();
        assert_eq!(a.edges(), b.edges());
        assert!(a.edge_count() > 10, "density too low to exercise anything");
        let c = seeded_graph(18, 0.2, 19).unwrap();
        assert_ne!(a.edges(), c.edges());
    }
}
