//! Canonical forms for small graphs of every flavor.
//!
//! A graph is flattened to a byte code by placing its vertices one at a time:
//! each placement contributes the vertex color and the pair codes against the
//! vertices placed before it. The canonical form is the placement whose code
//! is lexicographically smallest; the search prunes any branch whose partial
//! code already exceeds the best known one, ordering candidates by a cheap
//! color refinement so the first leaf is usually optimal. Factorial in the
//! worst case, which is fine at seven vertices.

use std::cmp::Ordering;

/// Byte-code interface a graph flavor exposes to the canonical search.
pub trait Canonize: Sized + Clone {
    /// Distinguishes flavors inside [`CanonicalKey`]s so keys of different
    /// graph kinds never collide.
    fn type_tag(&self) -> u8;
    fn size(&self) -> usize;
    /// Isomorphism-invariant vertex attribute (loop count on multigraphs).
    fn vertex_color(&self, v: usize) -> u8;
    /// Full state of the ordered pair `(u, v)`; must determine the state of
    /// `(v, u)` as well.
    fn pair_code(&self, u: usize, v: usize) -> u8;
    /// Relabels with `perm[old] = new`.
    fn apply_perm(&self, perm: &[usize]) -> Self;
}

/// Total invariant of an isomorphism class. Keys order first by flavor, then
/// by vertex count, then by the canonical placement code.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Box<[u8]>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

struct Search<'a, T: Canonize> {
    g: &'a T,
    n: usize,
    rank: Vec<u32>,
    best: Option<Vec<u8>>,
    best_placement: Vec<usize>,
}

impl<'a, T: Canonize> Search<'a, T> {
    /// One-dimensional refinement: ranks vertices by color, then repeatedly
    /// by the multiset of (pair code, neighbor rank) signatures.
    fn refine(g: &T) -> Vec<u32> {
        let n = g.size();
        let mut rank: Vec<u32> = (0..n).map(|v| g.vertex_color(v) as u32).collect();
        for _ in 0..3 {
            let mut sigs: Vec<(u32, Vec<(u8, u32)>, usize)> = (0..n)
                .map(|v| {
                    let mut s: Vec<(u8, u32)> = (0..n)
                        .filter(|&u| u != v)
                        .map(|u| (g.pair_code(v, u), rank[u]))
                        .collect();
                    s.sort_unstable();
                    (rank[v], s, v)
                })
                .collect();
            sigs.sort();
            let mut next = vec![0u32; n];
            let mut r = 0u32;
            for i in 0..n {
                if i > 0 && (sigs[i].0, &sigs[i].1) != (sigs[i - 1].0, &sigs[i - 1].1) {
                    r += 1;
                }
                next[sigs[i].2] = r;
            }
            if next == rank {
                break;
            }
            rank = next;
        }
        rank
    }

    fn placement_bytes(&self, placed: &[usize], v: usize, out: &mut Vec<u8>) {
        out.push(self.g.vertex_color(v));
        for &p in placed {
            out.push(self.g.pair_code(p, v));
        }
    }

    fn dfs(&mut self, placed: &mut Vec<usize>, used: u64, code: &mut Vec<u8>) {
        if placed.len() == self.n {
            if self.best.as_ref().is_none_or(|b| code[..] < b[..]) {
                self.best = Some(code.clone());
                self.best_placement = placed.clone();
            }
            return;
        }
        let mut candidates: Vec<usize> = (0..self.n).filter(|&v| used & (1u64 << v) == 0).collect();
        candidates.sort_by_key(|&v| (self.rank[v], v));
        let mut ext = Vec::new();
        for v in candidates {
            ext.clear();
            self.placement_bytes(placed, v, &mut ext);
            let pos = code.len();
            if let Some(b) = &self.best {
                match ext[..].cmp(&b[pos..pos + ext.len()]) {
                    Ordering::Greater => continue,
                    Ordering::Less => {
                        // Strictly better prefix: every completion beats the
                        // old best, so drop the bound and let the first leaf
                        // of this subtree re-seed it.
                        self.best = None;
                    }
                    Ordering::Equal => {}
                }
            }
            code.extend_from_slice(&ext);
            placed.push(v);
            self.dfs(placed, used | (1u64 << v), code);
            placed.pop();
            code.truncate(pos);
        }
    }
}

pub fn canonical_form<T: Canonize>(g: &T) -> (T, CanonicalKey) {
    let n = g.size();
    assert!(n <= 64, "canonical search is for small graphs");
    let mut search = Search {
        g,
        n,
        rank: Search::refine(g),
        best: None,
        best_placement: Vec::new(),
    };
    search.dfs(&mut Vec::new(), 0, &mut Vec::new());
    let code = search.best.unwrap_or_default();
    let mut perm = vec![0usize; n];
    for (pos, &v) in search.best_placement.iter().enumerate() {
        perm[v] = pos;
    }
    let mut bytes = Vec::with_capacity(code.len() + 2);
    bytes.push(g.type_tag());
    bytes.push(n as u8);
    bytes.extend_from_slice(&code);
    (g.apply_perm(&perm), CanonicalKey(bytes.into_boxed_slice()))
}

#[cfg(test)]
mod tests {
    use crate::graph::{Multigraph, OrientedGraph, SimpleGraph};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    #[test]
    fn isomorphic_labelings_share_keys() {
        let a = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = SimpleGraph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(a.canonical_key(), b.canonical_key());
        let c = SimpleGraph::star(3).unwrap();
        assert_ne!(a.canonical_key(), c.canonical_key());
    }

    #[test]
    fn keys_are_stable_under_random_relabeling() {
        let g = SimpleGraph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (1, 5)])
            .unwrap();
        let key = g.canonical_key();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let mut perm: Vec<usize> = (0..6).collect();
            perm.shuffle(&mut rng);
            assert_eq!(g.relabel(&perm).canonical_key(), key);
        }
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let g = SimpleGraph::from_edges(5, &[(0, 3), (3, 1), (1, 4), (4, 0), (0, 1)]).unwrap();
        let (canon, key) = g.canonical();
        let (canon2, key2) = canon.canonical();
        assert_eq!(key, key2);
        assert_eq!(canon, canon2);
    }

    #[test]
    fn counts_isomorphism_classes_on_four_vertices() {
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let mut keys = std::collections::BTreeSet::new();
        for mask in 0u32..64 {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            keys.insert(SimpleGraph::from_edges(4, &edges).unwrap().canonical_key());
        }
        assert_eq!(keys.len(), 11);
    }

    #[test]
    fn oriented_keys_respect_direction_patterns() {
        let fwd = OrientedGraph::single_arc();
        let bwd = OrientedGraph::from_arcs(2, &[(1, 0)]).unwrap();
        assert_eq!(fwd.canonical_key(), bwd.canonical_key());
        assert_ne!(fwd.canonical_key(), OrientedGraph::two_cycle().canonical_key());

        let path_out = OrientedGraph::from_arcs(3, &[(1, 0), (1, 2)]).unwrap();
        let path_in = OrientedGraph::from_arcs(3, &[(0, 1), (2, 1)]).unwrap();
        assert_ne!(path_out.canonical_key(), path_in.canonical_key());
    }

    #[test]
    fn flavor_tags_separate_key_spaces() {
        let k2 = SimpleGraph::complete(2).unwrap();
        let m = Multigraph::from_simple(&k2);
        assert_ne!(k2.canonical_key(), m.canonical_key());
    }

    #[test]
    fn multigraph_keys_see_loops_and_multiplicity() {
        let mut a = Multigraph::new(2).unwrap();
        a.add_edge(0, 1).unwrap();
        let mut b = Multigraph::new(2).unwrap();
        b.add_edge(0, 1).unwrap();
        b.add_edge(0, 1).unwrap();
        assert_ne!(a.canonical_key(), b.canonical_key());
        let mut c = a.clone();
        c.add_edge(0, 0).unwrap();
        let mut d = a.clone();
        d.add_edge(1, 1).unwrap();
        assert_eq!(c.canonical_key(), d.canonical_key());
        assert_ne!(a.canonical_key(), c.canonical_key());
    }

    #[test]
    fn empty_and_single_vertex() {
        let e = SimpleGraph::new(0).unwrap();
        assert_eq!(e.canonical_key().as_bytes(), &[1, 0]);
        let v = SimpleGraph::single_vertex();
        assert_eq!(v.canonical_key().as_bytes(), &[1, 1, 0]);
    }
}
