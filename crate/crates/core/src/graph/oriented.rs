//! Oriented graphs: loopless digraphs, with opposite arc pairs allowed.

use crate::canon::Canonize;
use crate::error::{Error, Result};
use crate::graph::{bits, check_order, check_vertex, component_masks_of, full_mask, rank_in_mask};
use crate::graph::{SetPartition, SimpleGraph};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrientedGraph {
    n: usize,
    out: Vec<u64>,
}

impl OrientedGraph {
    pub fn new(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(OrientedGraph { n, out: vec![0; n] })
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut g = OrientedGraph::new(n)?;
        for &(u, v) in arcs {
            g.add_arc(u, v)?;
        }
        Ok(g)
    }

    pub fn single_vertex() -> Self {
        OrientedGraph { n: 1, out: vec![0] }
    }

    /// One arc `0 -> 1`.
    pub fn single_arc() -> Self {
        OrientedGraph::from_arcs(2, &[(0, 1)]).expect("static arcs are valid")
    }

    /// Arcs both ways between two vertices.
    pub fn two_cycle() -> Self {
        OrientedGraph::from_arcs(2, &[(0, 1), (1, 0)]).expect("static arcs are valid")
    }

    /// Inserts the arc `u -> v`; inserting an existing arc is a no-op, and
    /// the opposite arc may coexist.
    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        check_vertex(u, self.n)?;
        check_vertex(v, self.n)?;
        if u == v {
            return Err(Error::LoopUnsupported(u));
        }
        self.out[u] |= 1u64 << v;
        Ok(())
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.out[u] & (1u64 << v) != 0
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn out_mask(&self, v: usize) -> u64 {
        self.out[v]
    }

    pub fn in_mask(&self, v: usize) -> u64 {
        let mut m = 0u64;
        for u in 0..self.n {
            if self.out[u] & (1u64 << v) != 0 {
                m |= 1u64 << u;
            }
        }
        m
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|m| m.count_ones() as usize).sum()
    }

    /// Arcs `(u, v)` in lexicographic order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.arc_count());
        for u in 0..self.n {
            for v in bits(self.out[u]) {
                out.push((u, v));
            }
        }
        out
    }

    /// Underlying simple graph: an edge wherever at least one arc runs.
    pub fn underlying(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n).expect("order already validated");
        for (u, v) in self.arcs() {
            g.add_edge(u, v).expect("arc endpoints in range");
        }
        g
    }

    fn underlying_rows(&self) -> Vec<u64> {
        let mut rows = self.out.clone();
        for u in 0..self.n {
            for v in bits(self.out[u]) {
                rows[v] |= 1u64 << u;
            }
        }
        rows
    }

    /// Weak components, as masks sorted by smallest member.
    pub fn component_masks(&self) -> Vec<u64> {
        component_masks_of(&self.underlying_rows(), full_mask(self.n))
    }

    pub fn cc(&self) -> usize {
        self.component_masks().len()
    }

    pub fn connected_components(&self) -> SetPartition {
        SetPartition::from_blocks(self.n, &self.component_masks())
            .expect("component masks partition the vertex set")
    }

    pub fn is_connected(&self) -> bool {
        self.cc() <= 1
    }

    pub fn induced(&self, mask: u64) -> OrientedGraph {
        let mask = mask & full_mask(self.n);
        let rank = rank_in_mask(mask);
        let mut g = OrientedGraph::new(mask.count_ones() as usize).expect("mask within order bound");
        for u in bits(mask) {
            for v in bits(self.out[u] & mask) {
                g.add_arc(rank[u], rank[v]).expect("relabelled arc in range");
            }
        }
        g
    }

    /// Vertex subsets closed under outgoing arcs: if `x` is in the set and
    /// `x -> y` is an arc then `y` is in the set. Ascending mask order.
    pub fn ideals(&self) -> Vec<u64> {
        let full = full_mask(self.n);
        let mut out = Vec::new();
        for mask in 0..=full {
            let closed = bits(mask).all(|v| self.out[v] & !mask == 0);
            if closed {
                out.push(mask);
            }
            if mask == full {
                break;
            }
        }
        out
    }

    /// Quotient by a partition: arcs keep their direction between distinct
    /// blocks; opposite arcs between two blocks may survive side by side.
    pub fn contract(&self, p: &SetPartition) -> Result<OrientedGraph> {
        if p.n() != self.n {
            return Err(Error::PartitionSizeMismatch {
                partition_n: p.n(),
                graph_n: self.n,
            });
        }
        let mut g = OrientedGraph::new(p.block_count())?;
        for (u, v) in self.arcs() {
            let (bu, bv) = (p.block_index_of(u), p.block_index_of(v));
            if bu != bv {
                g.add_arc(bu, bv)?;
            }
        }
        Ok(g)
    }

    /// Keeps only the arcs internal to blocks of the partition.
    pub fn restrict(&self, p: &SetPartition) -> Result<OrientedGraph> {
        if p.n() != self.n {
            return Err(Error::PartitionSizeMismatch {
                partition_n: p.n(),
                graph_n: self.n,
            });
        }
        let mut g = OrientedGraph::new(self.n)?;
        for (u, v) in self.arcs() {
            if p.block_index_of(u) == p.block_index_of(v) {
                g.add_arc(u, v)?;
            }
        }
        Ok(g)
    }

    pub fn disjoint_union(&self, other: &OrientedGraph) -> Result<OrientedGraph> {
        let n = self.n + other.n;
        let mut g = OrientedGraph::new(n)?;
        for (u, v) in self.arcs() {
            g.add_arc(u, v)?;
        }
        for (u, v) in other.arcs() {
            g.add_arc(self.n + u, self.n + v)?;
        }
        Ok(g)
    }

    pub fn connected_partitions(&self) -> Vec<SetPartition> {
        SetPartition::connected_partitions(self.n, &self.underlying_rows())
    }

    pub fn relabel(&self, perm: &[usize]) -> OrientedGraph {
        let mut g = OrientedGraph::new(self.n).expect("order already validated");
        for (u, v) in self.arcs() {
            g.add_arc(perm[u], perm[v]).expect("permuted arc in range");
        }
        g
    }

    /// True when no directed cycle exists (a pair of opposite arcs counts).
    pub fn is_acyclic(&self) -> bool {
        let mut alive = full_mask(self.n);
        'outer: while alive != 0 {
            for v in bits(alive) {
                let has_in = bits(alive).any(|u| u != v && self.out[u] & (1u64 << v) != 0);
                if !has_in {
                    alive &= !(1u64 << v);
                    continue 'outer;
                }
            }
            return false;
        }
        true
    }

    /// Vertices reachable from `v` by directed paths, including `v`.
    pub fn reach_mask(&self, v: usize) -> u64 {
        let mut reach = 1u64 << v;
        loop {
            let mut next = reach;
            for u in bits(reach) {
                next |= self.out[u];
            }
            if next == reach {
                return reach;
            }
            reach = next;
        }
    }

    /// True when every weak component is strongly connected. Holds
    /// vacuously for isolated vertices and the empty graph.
    pub fn all_components_strongly_connected(&self) -> bool {
        self.component_masks()
            .into_iter()
            .all(|comp| bits(comp).all(|v| self.reach_mask(v) & comp == comp))
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.cc() <= 1 && self.all_components_strongly_connected()
    }

    pub fn canonical(&self) -> (OrientedGraph, crate::canon::CanonicalKey) {
        crate::canon::canonical_form(self)
    }

    pub fn canonical_key(&self) -> crate::canon::CanonicalKey {
        self.canonical().1
    }
}

impl Canonize for OrientedGraph {
    fn type_tag(&self) -> u8 {
        2
    }

    fn size(&self) -> usize {
        self.n
    }

    fn vertex_color(&self, _v: usize) -> u8 {
        0
    }

    fn pair_code(&self, u: usize, v: usize) -> u8 {
        self.has_arc(u, v) as u8 | ((self.has_arc(v, u) as u8) << 1)
    }

    fn apply_perm(&self, perm: &[usize]) -> Self {
        self.relabel(perm)
    }
}

impl std::fmt::Display for OrientedGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let arcs: Vec<String> = self.arcs().iter().map(|(u, v)| format!("{u}>{v}")).collect();
        write!(f, "D[n={}; {}]", self.n, arcs.join(" "))
    }
}
