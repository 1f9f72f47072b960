//! Finite simple graphs on `0..n` with bitmask adjacency rows.

use crate::canon::Canonize;
use crate::error::{Error, Result};
use crate::graph::{bits, check_order, check_vertex, component_masks_of, full_mask, rank_in_mask};
use crate::graph::SetPartition;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(SimpleGraph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SimpleGraph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn edgeless(n: usize) -> Result<Self> {
        SimpleGraph::new(n)
    }

    pub fn single_vertex() -> Self {
        SimpleGraph { n: 1, adj: vec![0] }
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = SimpleGraph::new(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        let mut g = SimpleGraph::new(n)?;
        for v in 1..n {
            g.add_edge(v - 1, v)?;
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let mut g = SimpleGraph::path(n)?;
        if n >= 3 {
            g.add_edge(n - 1, 0)?;
        }
        Ok(g)
    }

    /// Star with `leaves` leaves attached to vertex 0.
    pub fn star(leaves: usize) -> Result<Self> {
        let mut g = SimpleGraph::new(leaves + 1)?;
        for v in 1..=leaves {
            g.add_edge(0, v)?;
        }
        Ok(g)
    }

    /// Inserts the edge `{u, v}`; inserting an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        check_vertex(u, self.n)?;
        check_vertex(v, self.n)?;
        if u == v {
            return Err(Error::LoopUnsupported(u));
        }
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1u64 << v) != 0
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn adjacency(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adjacency_rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] & !((1u64 << u) | (1u64 << u).wrapping_sub(1))) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn component_masks(&self) -> Vec<u64> {
        component_masks_of(&self.adj, full_mask(self.n))
    }

    pub fn cc(&self) -> usize {
        self.component_masks().len()
    }

    pub fn is_connected(&self) -> bool {
        self.cc() <= 1
    }

    /// Components as a set partition of the vertex set.
    pub fn connected_components(&self) -> SetPartition {
        SetPartition::from_blocks(self.n, &self.component_masks())
            .expect("component masks partition the vertex set")
    }

    pub fn rank(&self) -> usize {
        self.n - self.cc()
    }

    pub fn nullity(&self) -> usize {
        self.edge_count() - self.rank()
    }

    /// Subgraph induced by the vertices in `mask`, relabelled in mask order.
    pub fn induced(&self, mask: u64) -> SimpleGraph {
        let mask = mask & full_mask(self.n);
        let rank = rank_in_mask(mask);
        let mut g = SimpleGraph::new(mask.count_ones() as usize).expect("mask within order bound");
        for u in bits(mask) {
            for v in bits(self.adj[u] & mask) {
                if u < v {
                    g.add_edge(rank[u], rank[v]).expect("relabelled edge in range");
                }
            }
        }
        g
    }

    pub fn induced_by_vertices(&self, vs: &[usize]) -> Result<SimpleGraph> {
        let mut mask = 0u64;
        for &v in vs {
            check_vertex(v, self.n)?;
            mask |= 1u64 << v;
        }
        Ok(self.induced(mask))
    }

    /// Spanning subgraph keeping exactly the listed edges.
    pub fn spanning_subgraph(&self, keep: &[(usize, usize)]) -> Result<SimpleGraph> {
        let mut g = SimpleGraph::new(self.n)?;
        for &(u, v) in keep {
            if !self.has_edge(u, v) {
                return Err(Error::NotAnEdge { u, v });
            }
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Spanning subgraph keeping the edges selected by `mask`, a bitmask
    /// into `self.edges()` order.
    pub fn spanning_by_mask(&self, edge_list: &[(usize, usize)], mask: u64) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n).expect("order already validated");
        for (i, &(u, v)) in edge_list.iter().enumerate() {
            if mask & (1u64 << i) != 0 {
                g.add_edge(u, v).expect("edge in range");
            }
        }
        g
    }

    /// Number of components of the spanning subgraph with edge set `mask`.
    pub fn cc_of_edge_mask(&self, edge_list: &[(usize, usize)], mask: u64) -> usize {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut cc = self.n;
        for (i, &(u, v)) in edge_list.iter().enumerate() {
            if mask & (1u64 << i) != 0 {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                if ru != rv {
                    parent[ru] = rv;
                    cc -= 1;
                }
            }
        }
        cc
    }

    /// Quotient by a partition: one vertex per block, an edge between two
    /// blocks when some original edge joins them. Parallel edges collapse and
    /// internal edges vanish, so the quotient is again simple.
    pub fn contract(&self, p: &SetPartition) -> Result<SimpleGraph> {
        if p.n() != self.n {
            return Err(Error::PartitionSizeMismatch {
                partition_n: p.n(),
                graph_n: self.n,
            });
        }
        let mut g = SimpleGraph::new(p.block_count())?;
        for (u, v) in self.edges() {
            let (bu, bv) = (p.block_index_of(u), p.block_index_of(v));
            if bu != bv {
                g.add_edge(bu, bv)?;
            }
        }
        Ok(g)
    }

    /// Keeps only the edges internal to blocks of the partition; the result
    /// is the disjoint union of the induced block subgraphs, on the same
    /// vertex set.
    pub fn restrict(&self, p: &SetPartition) -> Result<SimpleGraph> {
        if p.n() != self.n {
            return Err(Error::PartitionSizeMismatch {
                partition_n: p.n(),
                graph_n: self.n,
            });
        }
        let mut g = SimpleGraph::new(self.n)?;
        for (u, v) in self.edges() {
            if p.block_index_of(u) == p.block_index_of(v) {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    pub fn disjoint_union(&self, other: &SimpleGraph) -> Result<SimpleGraph> {
        let n = self.n + other.n;
        let mut g = SimpleGraph::new(n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v)?;
        }
        Ok(g)
    }

    /// Partitions of the vertex set whose blocks induce connected subgraphs.
    pub fn connected_partitions(&self) -> Vec<SetPartition> {
        SetPartition::connected_partitions(self.n, &self.adj)
    }

    /// Relabels vertices; `perm[old] = new` must be a permutation.
    pub fn relabel(&self, perm: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n).expect("order already validated");
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]).expect("permuted edge in range");
        }
        g
    }

    /// Smallest graph6-and-isomorphism canonical form.
    pub fn canonical(&self) -> (SimpleGraph, crate::canon::CanonicalKey) {
        crate::canon::canonical_form(self)
    }

    pub fn canonical_key(&self) -> crate::canon::CanonicalKey {
        self.canonical().1
    }
}

impl Canonize for SimpleGraph {
    fn type_tag(&self) -> u8 {
        1
    }

    fn size(&self) -> usize {
        self.n
    }

    fn vertex_color(&self, _v: usize) -> u8 {
        0
    }

    fn pair_code(&self, u: usize, v: usize) -> u8 {
        self.has_edge(u, v) as u8
    }

    fn apply_perm(&self, perm: &[usize]) -> Self {
        self.relabel(perm)
    }
}

impl std::fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let es: Vec<String> = self.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
        write!(f, "G[n={}; {}]", self.n, es.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_validation() {
        assert!(SimpleGraph::new(65).is_err());
        let mut g = SimpleGraph::new(3).unwrap();
        assert!(g.add_edge(0, 3).is_err());
        assert!(g.add_edge(1, 1).is_err());
        g.add_edge(0, 1).unwrap();
        g.add_edge(0, 1).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(1, 0));
    }

    #[test]
    fn edges_are_lexicographic() {
        let g = SimpleGraph::from_edges(4, &[(2, 3), (0, 2), (0, 1)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (2, 3)]);
    }

    #[test]
    fn components_rank_nullity() {
        let g = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(g.component_masks(), vec![0b00111, 0b11000]);
        assert_eq!(g.cc(), 2);
        assert_eq!(g.rank(), 3);
        assert_eq!(g.nullity(), 0);
        let c = SimpleGraph::cycle(4).unwrap();
        assert_eq!(c.rank(), 3);
        assert_eq!(c.nullity(), 1);
    }

    #[test]
    fn induced_subgraph_relabels_in_order() {
        let g = SimpleGraph::cycle(4).unwrap();
        let h = g.induced(0b1011);
        assert_eq!(h.n(), 3);
        assert_eq!(h.edges(), vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn contract_and_restrict_on_triangle() {
        let k3 = SimpleGraph::complete(3).unwrap();
        let p = SetPartition::from_blocks(3, &[0b011, 0b100]).unwrap();
        let q = k3.contract(&p).unwrap();
        assert_eq!((q.n(), q.edge_count()), (2, 1));
        let r = k3.restrict(&p).unwrap();
        assert_eq!(r.edges(), vec![(0, 1)]);
        let one = k3.contract(&SetPartition::one_block(3)).unwrap();
        assert_eq!((one.n(), one.edge_count()), (1, 0));
    }

    #[test]
    fn edge_mask_component_counts() {
        let g = SimpleGraph::complete(3).unwrap();
        let edges = g.edges();
        assert_eq!(g.cc_of_edge_mask(&edges, 0), 3);
        assert_eq!(g.cc_of_edge_mask(&edges, 0b001), 2);
        assert_eq!(g.cc_of_edge_mask(&edges, 0b111), 1);
    }

    #[test]
    fn disjoint_union_offsets_labels() {
        let a = SimpleGraph::complete(2).unwrap();
        let b = SimpleGraph::path(3).unwrap();
        let u = a.disjoint_union(&b).unwrap();
        assert_eq!(u.n(), 5);
        assert_eq!(u.edges(), vec![(0, 1), (2, 3), (3, 4)]);
    }

    #[test]
    fn connected_partitions_of_triangle() {
        assert_eq!(SimpleGraph::complete(3).unwrap().connected_partitions().len(), 5);
        assert_eq!(SimpleGraph::path(3).unwrap().connected_partitions().len(), 4);
    }
}
