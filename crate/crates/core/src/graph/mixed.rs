//! Mixed graphs: each vertex pair carries an edge, a single arc, or nothing.
//!
//! These are the partial orientations of their underlying simple graph:
//! opposite arc pairs are excluded by construction, unlike in
//! [`OrientedGraph`](crate::graph::OrientedGraph).

use crate::canon::Canonize;
use crate::error::{Error, Result};
use crate::graph::{bits, check_order, check_vertex, component_masks_of, full_mask};
use crate::graph::{OrientedGraph, SimpleGraph};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedGraph {
    n: usize,
    edge_adj: Vec<u64>,
    out: Vec<u64>,
}

/// Serialization shape for mixed graphs.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MixedGraphData {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub arcs: Vec<(usize, usize)>,
}

impl MixedGraph {
    pub fn new(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(MixedGraph {
            n,
            edge_adj: vec![0; n],
            out: vec![0; n],
        })
    }

    fn pair_taken(&self, u: usize, v: usize) -> bool {
        self.edge_adj[u] & (1u64 << v) != 0
            || self.out[u] & (1u64 << v) != 0
            || self.out[v] & (1u64 << u) != 0
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        check_vertex(u, self.n)?;
        check_vertex(v, self.n)?;
        if u == v {
            return Err(Error::LoopUnsupported(u));
        }
        if self.pair_taken(u, v) {
            return Err(Error::ConflictingPair { u, v });
        }
        self.edge_adj[u] |= 1u64 << v;
        self.edge_adj[v] |= 1u64 << u;
        Ok(())
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        check_vertex(u, self.n)?;
        check_vertex(v, self.n)?;
        if u == v {
            return Err(Error::LoopUnsupported(u));
        }
        if self.pair_taken(u, v) {
            return Err(Error::ConflictingPair { u, v });
        }
        self.out[u] |= 1u64 << v;
        Ok(())
    }

    pub fn from_data(data: &MixedGraphData) -> Result<Self> {
        let mut g = MixedGraph::new(data.n)?;
        for &(u, v) in &data.edges {
            g.add_edge(u, v)?;
        }
        for &(u, v) in &data.arcs {
            g.add_arc(u, v)?;
        }
        Ok(g)
    }

    pub fn to_data(&self) -> MixedGraphData {
        MixedGraphData {
            n: self.n,
            edges: self.edges(),
            arcs: self.arcs(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.edge_adj[u] & (1u64 << v) != 0
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.out[u] & (1u64 << v) != 0
    }

    pub fn edge_count(&self) -> usize {
        self.edge_adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|m| m.count_ones() as usize).sum()
    }

    /// Unoriented edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in bits(self.edge_adj[u]) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in bits(self.out[u]) {
                out.push((u, v));
            }
        }
        out
    }

    /// Forgets all orientations: edges and arcs both become edges.
    pub fn gr(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n).expect("order already validated");
        for (u, v) in self.edges() {
            g.add_edge(u, v).expect("edge in range");
        }
        for (u, v) in self.arcs() {
            g.add_edge(u, v).expect("arc endpoints in range");
        }
        g
    }

    /// Deletes the oriented pairs, keeping only the unoriented edges.
    pub fn gr0(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n).expect("order already validated");
        for (u, v) in self.edges() {
            g.add_edge(u, v).expect("edge in range");
        }
        g
    }

    /// Deletes the unoriented edges, keeping only the arcs.
    pub fn oriented_part(&self) -> OrientedGraph {
        let mut g = OrientedGraph::new(self.n).expect("order already validated");
        for (u, v) in self.arcs() {
            g.add_arc(u, v).expect("arc in range");
        }
        g
    }

    /// No closed mixed walk traverses edges freely and arcs forward while
    /// using at least one arc. Equivalently: no arc joins two vertices in a
    /// common component of the unoriented part, and contracting each such
    /// component to a point leaves an acyclic digraph.
    pub fn is_totally_acyclic(&self) -> bool {
        let comps = component_masks_of(&self.edge_adj, full_mask(self.n));
        let mut comp_of = vec![usize::MAX; self.n];
        for (i, &c) in comps.iter().enumerate() {
            for v in bits(c) {
                comp_of[v] = i;
            }
        }
        let mut quotient = OrientedGraph::new(comps.len()).expect("component count <= n");
        for (u, v) in self.arcs() {
            if comp_of[u] == comp_of[v] {
                return false;
            }
            quotient.add_arc(comp_of[u], comp_of[v]).expect("component index in range");
        }
        quotient.is_acyclic()
    }

    pub fn relabel(&self, perm: &[usize]) -> MixedGraph {
        let mut g = MixedGraph::new(self.n).expect("order already validated");
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]).expect("permuted edge in range");
        }
        for (u, v) in self.arcs() {
            g.add_arc(perm[u], perm[v]).expect("permuted arc in range");
        }
        g
    }

    pub fn canonical(&self) -> (MixedGraph, crate::canon::CanonicalKey) {
        crate::canon::canonical_form(self)
    }

    pub fn canonical_key(&self) -> crate::canon::CanonicalKey {
        self.canonical().1
    }
}

impl Canonize for MixedGraph {
    fn type_tag(&self) -> u8 {
        3
    }

    fn size(&self) -> usize {
        self.n
    }

    fn vertex_color(&self, _v: usize) -> u8 {
        0
    }

    fn pair_code(&self, u: usize, v: usize) -> u8 {
        if self.has_edge(u, v) {
            1
        } else if self.has_arc(u, v) {
            2
        } else if self.has_arc(v, u) {
            3
        } else {
            0
        }
    }

    fn apply_perm(&self, perm: &[usize]) -> Self {
        self.relabel(perm)
    }
}

impl std::fmt::Display for MixedGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> =
            self.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
        parts.extend(self.arcs().iter().map(|(u, v)| format!("{u}>{v}")));
        write!(f, "M[n={}; {}]", self.n, parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Walk-search reference for total acyclicity: a closed mixed walk with
    /// an arc exists iff some arc's head reaches its tail through edges
    /// (either way) and arcs (forward).
    fn totally_acyclic_by_walks(g: &MixedGraph) -> bool {
        let step = |from: u64| -> u64 {
            let mut next = from;
            for v in bits(from) {
                next |= g.edge_adj[v] | g.out[v];
            }
            next
        };
        for (u, v) in g.arcs() {
            let mut reach = 1u64 << v;
            loop {
                let next = step(reach);
                if next == reach {
                    break;
                }
                reach = next;
            }
            if reach & (1u64 << u) != 0 {
                return false;
            }
        }
        true
    }

    #[test]
    fn pair_exclusivity() {
        let mut g = MixedGraph::new(3).unwrap();
        g.add_edge(0, 1).unwrap();
        assert!(g.add_arc(0, 1).is_err());
        assert!(g.add_arc(1, 0).is_err());
        g.add_arc(1, 2).unwrap();
        assert!(g.add_arc(2, 1).is_err());
        assert!(g.add_edge(2, 1).is_err());
        assert!(g.add_edge(0, 0).is_err());
    }

    #[test]
    fn gr_and_gr0_split_the_pairs() {
        let mut g = MixedGraph::new(3).unwrap();
        g.add_edge(0, 1).unwrap();
        g.add_arc(2, 1).unwrap();
        assert_eq!(g.gr().edge_count(), 2);
        assert_eq!(g.gr0().edges(), vec![(0, 1)]);
        assert_eq!(g.oriented_part().arcs(), vec![(2, 1)]);
    }

    #[test]
    fn total_acyclicity_examples() {
        // Fully unoriented graphs are totally acyclic.
        let mut g = MixedGraph::new(3).unwrap();
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 2).unwrap();
        g.add_edge(0, 2).unwrap();
        assert!(g.is_totally_acyclic());

        // Arc into a component that walks back to the tail.
        let mut h = MixedGraph::new(3).unwrap();
        h.add_edge(0, 1).unwrap();
        h.add_edge(1, 2).unwrap();
        h.add_arc(2, 0).unwrap();
        assert!(!h.is_totally_acyclic());

        // Directed triangle.
        let mut c = MixedGraph::new(3).unwrap();
        c.add_arc(0, 1).unwrap();
        c.add_arc(1, 2).unwrap();
        c.add_arc(2, 0).unwrap();
        assert!(!c.is_totally_acyclic());

        // Acyclic orientation of the triangle.
        let mut a = MixedGraph::new(3).unwrap();
        a.add_arc(0, 1).unwrap();
        a.add_arc(0, 2).unwrap();
        a.add_arc(1, 2).unwrap();
        assert!(a.is_totally_acyclic());
    }

    #[test]
    fn total_acyclicity_matches_walk_search() {
        // All mixed graphs on 4 vertices: each of the 6 pairs takes one of
        // 4 states.
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        for code in 0..4096u32 {
            let mut g = MixedGraph::new(4).unwrap();
            let mut c = code;
            for &(u, v) in &pairs {
                match c % 4 {
                    1 => g.add_edge(u, v).unwrap(),
                    2 => g.add_arc(u, v).unwrap(),
                    3 => g.add_arc(v, u).unwrap(),
                    _ => {}
                }
                c /= 4;
            }
            assert_eq!(
                g.is_totally_acyclic(),
                totally_acyclic_by_walks(&g),
                "disagreement on {g}"
            );
        }
    }

    #[test]
    fn data_round_trip() {
        let mut g = MixedGraph::new(4).unwrap();
        g.add_edge(0, 1).unwrap();
        g.add_arc(3, 2).unwrap();
        let d = g.to_data();
        assert_eq!(MixedGraph::from_data(&d).unwrap(), g);
    }
}
