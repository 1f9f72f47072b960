//! Graph carriers: simple, oriented, mixed, multigraphs, and set partitions.
//!
//! Vertices are `0..n` with `n <= 64`; vertex subsets are `u64` bitmasks.

mod mixed;
mod multigraph;
mod oriented;
mod partition;
mod simple;

pub use mixed::MixedGraph;
pub use multigraph::Multigraph;
pub use oriented::OrientedGraph;
pub use partition::SetPartition;
pub use simple::SimpleGraph;

use crate::error::{Error, Result};

pub(crate) fn check_order(n: usize) -> Result<()> {
    if n > 64 {
        return Err(Error::TooManyVertices(n));
    }
    Ok(())
}

pub(crate) fn check_vertex(v: usize, n: usize) -> Result<()> {
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    Ok(())
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask in increasing order.
pub(crate) fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(v)
        }
    })
}

/// Connected components of the graph `adjacency` restricted to `within`,
/// as masks sorted by smallest member.
pub(crate) fn component_masks_of(adjacency: &[u64], within: u64) -> Vec<u64> {
    let mut seen = 0u64;
    let mut out = Vec::new();
    let mut rest = within;
    while rest != 0 {
        let start = rest.trailing_zeros() as usize;
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let mut grow = 0u64;
            for v in bits(frontier) {
                grow |= adjacency[v] & within;
            }
            frontier = grow & !comp;
            comp |= grow & within;
        }
        out.push(comp);
        seen |= comp;
        rest = within & !seen;
    }
    out
}

/// Positions of the set bits of `mask`, so vertex `v` with `v` in `mask`
/// gets the new label `rank[v]`.
pub(crate) fn rank_in_mask(mask: u64) -> Vec<usize> {
    let mut rank = vec![usize::MAX; 64];
    for (i, v) in bits(mask).enumerate() {
        rank[v] = i;
    }
    rank
}
