//! Multigraphs with edge multiplicities and loops.
//!
//! Deletion-contraction recursions leave the simple graphs, so the oracle
//! that drives them works here. Multiplicities are `u8`: contracting can only
//! merge the at most 21 edges of a seven-vertex start graph.

use crate::canon::Canonize;
use crate::error::Result;
use crate::graph::{check_order, check_vertex, SimpleGraph};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    mult: Vec<Vec<u8>>,
    loops: Vec<u8>,
}

impl Multigraph {
    pub fn new(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Multigraph {
            n,
            mult: vec![vec![0; n]; n],
            loops: vec![0; n],
        })
    }

    pub fn from_simple(g: &SimpleGraph) -> Multigraph {
        let mut m = Multigraph::new(g.n()).expect("order already validated");
        for (u, v) in g.edges() {
            m.add_edge(u, v).expect("edge in range");
        }
        m
    }

    /// Adds one copy of the edge `{u, v}`; `u == v` adds a loop.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        check_vertex(u, self.n)?;
        check_vertex(v, self.n)?;
        if u == v {
            self.loops[u] += 1;
        } else {
            self.mult[u][v] += 1;
            self.mult[v][u] += 1;
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u8 {
        self.mult[u][v]
    }

    pub fn loops_at(&self, v: usize) -> u8 {
        self.loops[v]
    }

    pub fn edge_count(&self) -> usize {
        let non_loop: usize = (0..self.n)
            .map(|u| (u + 1..self.n).map(|v| self.mult[u][v] as usize).sum::<usize>())
            .sum();
        non_loop + self.loops.iter().map(|&l| l as usize).sum::<usize>()
    }

    /// Smallest vertex carrying a loop, if any.
    pub fn first_loop(&self) -> Option<usize> {
        (0..self.n).find(|&v| self.loops[v] > 0)
    }

    /// Lexicographically smallest non-loop edge, if any.
    pub fn first_edge(&self) -> Option<(usize, usize)> {
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.mult[u][v] > 0 {
                    return Some((u, v));
                }
            }
        }
        None
    }

    pub fn remove_loop(&self, v: usize) -> Multigraph {
        let mut g = self.clone();
        g.loops[v] -= 1;
        g
    }

    /// Removes one copy of `{u, v}`.
    pub fn delete_edge(&self, u: usize, v: usize) -> Multigraph {
        let mut g = self.clone();
        g.mult[u][v] -= 1;
        g.mult[v][u] -= 1;
        g
    }

    /// Contracts one copy of `{u, v}`: the endpoints merge, the remaining
    /// copies become loops, and other incidences add up.
    pub fn contract_edge(&self, u: usize, v: usize) -> Multigraph {
        let (u, v) = (u.min(v), u.max(v));
        let mut g = Multigraph::new(self.n - 1).expect("shrinking keeps the order bound");
        let map = |w: usize| if w == v { u } else if w > v { w - 1 } else { w };
        for w in 0..self.n {
            g.loops[map(w)] += self.loops[w];
        }
        g.loops[u] += self.mult[u][v] - 1;
        for a in 0..self.n {
            for b in a + 1..self.n {
                if (a, b) == (u, v) {
                    continue;
                }
                let (ma, mb) = (map(a), map(b));
                if ma == mb {
                    g.loops[ma] += self.mult[a][b];
                } else {
                    g.mult[ma][mb] += self.mult[a][b];
                    g.mult[mb][ma] += self.mult[a][b];
                }
            }
        }
        g
    }

    /// A bridge is a single-multiplicity edge whose removal separates its
    /// endpoints.
    pub fn is_bridge(&self, u: usize, v: usize) -> bool {
        if self.mult[u][v] != 1 {
            return false;
        }
        let removed = self.delete_edge(u, v);
        let mut reach = 1u64 << u;
        loop {
            let mut next = reach;
            for w in 0..self.n {
                if reach & (1u64 << w) != 0 {
                    for x in 0..self.n {
                        if removed.mult[w][x] > 0 {
                            next |= 1u64 << x;
                        }
                    }
                }
            }
            if next == reach {
                break;
            }
            reach = next;
        }
        reach & (1u64 << v) == 0
    }

    pub fn relabel(&self, perm: &[usize]) -> Multigraph {
        let mut g = Multigraph::new(self.n).expect("order already validated");
        for v in 0..self.n {
            g.loops[perm[v]] = self.loops[v];
        }
        for u in 0..self.n {
            for v in u + 1..self.n {
                g.mult[perm[u]][perm[v]] = self.mult[u][v];
                g.mult[perm[v]][perm[u]] = self.mult[u][v];
            }
        }
        g
    }

    pub fn canonical_key(&self) -> crate::canon::CanonicalKey {
        crate::canon::canonical_form(self).1
    }
}

impl Canonize for Multigraph {
    fn type_tag(&self) -> u8 {
        4
    }

    fn size(&self) -> usize {
        self.n
    }

    fn vertex_color(&self, v: usize) -> u8 {
        self.loops[v]
    }

    fn pair_code(&self, u: usize, v: usize) -> u8 {
        self.mult[u][v]
    }

    fn apply_perm(&self, perm: &[usize]) -> Self {
        self.relabel(perm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_simple_and_counts() {
        let g = Multigraph::from_simple(&SimpleGraph::complete(3).unwrap());
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.first_edge(), Some((0, 1)));
        assert_eq!(g.first_loop(), None);
    }

    #[test]
    fn contraction_merges_incidences() {
        // Triangle: contract one edge, get a double edge.
        let k3 = Multigraph::from_simple(&SimpleGraph::complete(3).unwrap());
        let c = k3.contract_edge(0, 1);
        assert_eq!(c.n(), 2);
        assert_eq!(c.multiplicity(0, 1), 2);
        assert_eq!(c.loops_at(0), 0);

        // Double edge: contract one copy, the other becomes a loop.
        let cc = c.contract_edge(0, 1);
        assert_eq!(cc.n(), 1);
        assert_eq!(cc.loops_at(0), 1);
    }

    #[test]
    fn bridges() {
        let p3 = Multigraph::from_simple(&SimpleGraph::path(3).unwrap());
        assert!(p3.is_bridge(0, 1));
        let k3 = Multigraph::from_simple(&SimpleGraph::complete(3).unwrap());
        assert!(!k3.is_bridge(0, 1));
        let mut doubled = Multigraph::new(2).unwrap();
        doubled.add_edge(0, 1).unwrap();
        doubled.add_edge(0, 1).unwrap();
        assert!(!doubled.is_bridge(0, 1));
    }
}
