//! Set partitions of `{0, .., n-1}` with bitmask blocks.

use crate::error::{Error, Result};
use crate::graph::{bits, full_mask};

/// A partition of the vertex set into nonempty blocks.
///
/// Blocks are kept sorted by their smallest member, which makes equality and
/// iteration order canonical for a fixed labelling.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<u64>,
}

impl SetPartition {
    pub fn from_blocks(n: usize, blocks: &[u64]) -> Result<Self> {
        crate::graph::check_order(n)?;
        let mut seen = 0u64;
        for &b in blocks {
            if b == 0 {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            if b & !full_mask(n) != 0 {
                return Err(Error::InvalidPartition(format!(
                    "block {b:#x} leaves the vertex range 0..{n}"
                )));
            }
            if b & seen != 0 {
                return Err(Error::InvalidPartition(format!(
                    "block {b:#x} overlaps an earlier block"
                )));
            }
            seen |= b;
        }
        if seen != full_mask(n) {
            return Err(Error::InvalidPartition(format!(
                "blocks cover {seen:#x}, not all of 0..{n}"
            )));
        }
        let mut blocks = blocks.to_vec();
        blocks.sort_by_key(|b| b.trailing_zeros());
        Ok(SetPartition { n, blocks })
    }

    /// Builds a partition from vertex lists, one list per block.
    pub fn from_vertex_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut masks = Vec::with_capacity(blocks.len());
        for block in blocks {
            let mut m = 0u64;
            for &v in block {
                crate::graph::check_vertex(v, n)?;
                m |= 1u64 << v;
            }
            masks.push(m);
        }
        SetPartition::from_blocks(n, &masks)
    }

    pub fn singletons(n: usize) -> Self {
        let blocks = (0..n).map(|v| 1u64 << v).collect();
        SetPartition { n, blocks }
    }

    pub fn one_block(n: usize) -> Self {
        SetPartition {
            n,
            blocks: if n == 0 { vec![] } else { vec![full_mask(n)] },
        }
    }

    /// The partition whose only nontrivial block is `{u, v}`.
    pub fn merge_pair(n: usize, u: usize, v: usize) -> Result<Self> {
        crate::graph::check_vertex(u, n)?;
        crate::graph::check_vertex(v, n)?;
        if u == v {
            return Err(Error::InvalidPartition("pair block needs two vertices".into()));
        }
        let pair = (1u64 << u) | (1u64 << v);
        let mut blocks = vec![pair];
        for w in 0..n {
            if w != u && w != v {
                blocks.push(1u64 << w);
            }
        }
        SetPartition::from_blocks(n, &blocks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    /// Index (in block order) of the block containing `v`.
    pub fn block_index_of(&self, v: usize) -> usize {
        let bit = 1u64 << v;
        self.blocks
            .iter()
            .position(|&b| b & bit != 0)
            .expect("every vertex lies in a block")
    }

    pub fn is_singletons(&self) -> bool {
        self.blocks.iter().all(|b| b.count_ones() == 1)
    }

    pub fn is_one_block(&self) -> bool {
        self.blocks.len() <= 1
    }

    /// All set partitions of `{0, .., n-1}`, by restricted-growth strings.
    pub fn enumerate_all(n: usize) -> Vec<SetPartition> {
        let mut out = Vec::new();
        let mut rgs = vec![0usize; n];
        fn rec(rgs: &mut Vec<usize>, pos: usize, max_used: usize, out: &mut Vec<SetPartition>) {
            let n = rgs.len();
            if pos == n {
                let blocks = (0..=max_used)
                    .map(|b| {
                        let mut m = 0u64;
                        for (v, &label) in rgs.iter().enumerate() {
                            if label == b {
                                m |= 1u64 << v;
                            }
                        }
                        m
                    })
                    .collect::<Vec<_>>();
                out.push(SetPartition {
                    n,
                    blocks: if n == 0 { vec![] } else { blocks },
                });
                return;
            }
            for label in 0..=max_used + 1 {
                rgs[pos] = label;
                rec(rgs, pos + 1, max_used.max(label), out);
            }
        }
        if n == 0 {
            out.push(SetPartition { n: 0, blocks: vec![] });
        } else {
            rgs[0] = 0;
            rec(&mut rgs, 1, 0, &mut out);
        }
        out
    }

    /// Partitions of `{0, .., n-1}` all of whose blocks induce connected
    /// subgraphs of the graph given by `adjacency`.
    ///
    /// Blocks are built by growing the block of the smallest unassigned
    /// vertex one adjacent vertex at a time, so only connected candidates are
    /// ever touched.
    pub fn connected_partitions(n: usize, adjacency: &[u64]) -> Vec<SetPartition> {
        fn connected_subsets_containing(
            seed: usize,
            avail: u64,
            adjacency: &[u64],
            out: &mut Vec<u64>,
        ) {
            // Classic connected-subgraph enumeration: each subset is emitted
            // once because a vertex removed from `ext` is barred from every
            // extension explored later at the same depth.
            fn rec(set: u64, ext: u64, adjacency: &[u64], out: &mut Vec<u64>) {
                out.push(set);
                let mut boundary = 0u64;
                for v in bits(set) {
                    boundary |= adjacency[v];
                }
                let mut candidates = ext & boundary & !set;
                let mut allowed = ext;
                while candidates != 0 {
                    let u = candidates.trailing_zeros() as usize;
                    candidates &= candidates - 1;
                    allowed &= !(1u64 << u);
                    rec(set | (1u64 << u), allowed, adjacency, out);
                }
            }
            rec(1u64 << seed, avail & !(1u64 << seed), adjacency, out);
        }

        fn rec(
            remaining: u64,
            acc: &mut Vec<u64>,
            n: usize,
            adjacency: &[u64],
            out: &mut Vec<SetPartition>,
        ) {
            if remaining == 0 {
                let mut blocks = acc.clone();
                blocks.sort_by_key(|b| b.trailing_zeros());
                out.push(SetPartition { n, blocks });
                return;
            }
            let seed = remaining.trailing_zeros() as usize;
            let mut subsets = Vec::new();
            connected_subsets_containing(seed, remaining, adjacency, &mut subsets);
            for s in subsets {
                acc.push(s);
                rec(remaining & !s, acc, n, adjacency, out);
                acc.pop();
            }
        }

        let mut out = Vec::new();
        if n == 0 {
            out.push(SetPartition { n: 0, blocks: vec![] });
            return out;
        }
        rec(full_mask(n), &mut Vec::new(), n, adjacency, &mut out);
        out.sort();
        out
    }
}

impl std::fmt::Display for SetPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|&b| {
                let vs: Vec<String> = bits(b).map(|v| v.to_string()).collect();
                format!("{{{}}}", vs.join(" "))
            })
            .collect();
        write!(f, "{}", parts.join(" | "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_rejects_bad_partitions() {
        assert!(SetPartition::from_blocks(3, &[0b011, 0b110]).is_err());
        assert!(SetPartition::from_blocks(3, &[0b011]).is_err());
        assert!(SetPartition::from_blocks(3, &[0b011, 0b100, 0]).is_err());
        assert!(SetPartition::from_blocks(2, &[0b01, 0b110]).is_err());
        assert!(SetPartition::from_blocks(3, &[0b011, 0b100]).is_ok());
    }

    #[test]
    fn enumerate_all_matches_bell_numbers() {
        let bell = [1usize, 1, 2, 5, 15, 52];
        for (n, &b) in bell.iter().enumerate() {
            assert_eq!(SetPartition::enumerate_all(n).len(), b, "n = {n}");
        }
    }

    #[test]
    fn blocks_are_sorted_by_minimum() {
        let p = SetPartition::from_blocks(4, &[0b1010, 0b0101]).unwrap();
        assert_eq!(p.blocks(), &[0b0101, 0b1010]);
        assert_eq!(p.block_index_of(0), 0);
        assert_eq!(p.block_index_of(1), 1);
        assert_eq!(p.block_index_of(3), 1);
    }

    #[test]
    fn connected_partitions_of_path_and_triangle() {
        // Path 0-1-2: every partition except {0,2}|{1} has connected blocks.
        let path_adj = vec![0b010, 0b101, 0b010];
        let cp = SetPartition::connected_partitions(3, &path_adj);
        assert_eq!(cp.len(), 4);
        assert!(!cp
            .iter()
            .any(|p| p.blocks().contains(&0b101u64)));

        // Triangle: all five partitions qualify.
        let tri_adj = vec![0b110, 0b101, 0b011];
        assert_eq!(SetPartition::connected_partitions(3, &tri_adj).len(), 5);

        // Edgeless on 3 vertices: only singletons.
        let no_adj = vec![0, 0, 0];
        let cp = SetPartition::connected_partitions(3, &no_adj);
        assert_eq!(cp.len(), 1);
        assert!(cp[0].is_singletons());
    }

    #[test]
    fn connected_partitions_agree_with_filtering() {
        // Cross-check the growth enumeration against brute-force filtering
        // on a graph with a cut vertex: the "paw" (triangle plus pendant).
        let adj = vec![0b0110, 0b1101, 0b0011, 0b0010];
        let filtered: Vec<SetPartition> = SetPartition::enumerate_all(4)
            .into_iter()
            .filter(|p| {
                p.blocks()
                    .iter()
                    .all(|&b| crate::graph::component_masks_of(&adj, b).len() == 1)
            })
            .collect();
        let mut grown = SetPartition::connected_partitions(4, &adj);
        let mut filtered = filtered;
        grown.sort();
        filtered.sort();
        assert_eq!(grown, filtered);
    }

    #[test]
    fn trivial_cases() {
        assert_eq!(SetPartition::enumerate_all(0).len(), 1);
        assert_eq!(SetPartition::connected_partitions(0, &[]).len(), 1);
        assert!(SetPartition::one_block(0).blocks().is_empty());
        let p = SetPartition::merge_pair(4, 2, 0).unwrap();
        assert_eq!(p.block_count(), 3);
        assert_eq!(p.block_index_of(2), 0);
    }
}
