//! Benchmark-only crate; see `benches/kernels.rs`. Fixture graphs live here
//! so the bench target stays a thin harness.

use hopfgraph::SimpleGraph;

/// 3-dimensional hypercube: 8 vertices, 12 edges, vertex-transitive, which
/// makes the canonical-labeling search do real work.
pub fn cube() -> SimpleGraph {
    let mut g = SimpleGraph::new(8).unwrap();
    for u in 0..8u32 {
        for bit in 0..3 {
            let v = u ^ (1 << bit);
            if u < v {
                g.add_edge(u as usize, v as usize).unwrap();
            }
        }
    }
    g
}

/// Petersen graph: 10 vertices, 15 edges, the classic hard case for naive
/// isomorphism heuristics.
pub fn petersen() -> SimpleGraph {
    let mut g = SimpleGraph::new(10).unwrap();
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5).unwrap();
        g.add_edge(i, i + 5).unwrap();
        g.add_edge(i + 5, 5 + (i + 2) % 5).unwrap();
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_have_expected_shape() {
        assert_eq!((cube().n(), cube().edge_count()), (8, 12));
        assert_eq!((petersen().n(), petersen().edge_count()), (10, 15));
        assert!(cube().is_connected());
        assert!(petersen().is_connected());
    }
}
