//! Exhaustive enumeration over small graphs: edge-subset families,
//! orientations, totally acyclic partial orientations, and catalogues of
//! isomorphism classes.

use crate::canon::CanonicalKey;
use crate::error::{Error, Result};
use crate::graph::{MixedGraph, OrientedGraph, SimpleGraph};
use crate::hopf::GraphSum;
use num::BigRational;
use std::collections::BTreeMap;
use std::sync::{LazyLock, OnceLock, RwLock};

fn assert_edge_word(g: &SimpleGraph) {
    assert!(g.edge_count() <= 63, "edge subsets are enumerated as u64 masks");
}

/// All spanning subgraphs: one per edge subset.
pub fn spanning_subgraphs(g: &SimpleGraph) -> Vec<SimpleGraph> {
    assert_edge_word(g);
    let edges = g.edges();
    (0..1u64 << edges.len())
        .map(|mask| g.spanning_by_mask(&edges, mask))
        .collect()
}

/// Spanning subgraphs with the same number of components as the host.
pub fn covering_subgraphs(g: &SimpleGraph) -> Vec<SimpleGraph> {
    assert_edge_word(g);
    let edges = g.edges();
    let cc = g.cc();
    (0..1u64 << edges.len())
        .filter(|&mask| g.cc_of_edge_mask(&edges, mask) == cc)
        .map(|mask| g.spanning_by_mask(&edges, mask))
        .collect()
}

/// Spanning subgraphs without cycles.
pub fn spanning_forests(g: &SimpleGraph) -> Vec<SimpleGraph> {
    assert_edge_word(g);
    let edges = g.edges();
    let n = g.n();
    (0..1u64 << edges.len())
        .filter(|&mask| {
            let k = mask.count_ones() as usize;
            g.cc_of_edge_mask(&edges, mask) + k == n
        })
        .map(|mask| g.spanning_by_mask(&edges, mask))
        .collect()
}

/// Cycle-free covering subgraphs: one spanning tree per component.
pub fn covering_forests(g: &SimpleGraph) -> Vec<SimpleGraph> {
    assert_edge_word(g);
    let edges = g.edges();
    let n = g.n();
    let cc = g.cc();
    (0..1u64 << edges.len())
        .filter(|&mask| {
            let k = mask.count_ones() as usize;
            k + cc == n && g.cc_of_edge_mask(&edges, mask) == cc
        })
        .map(|mask| g.spanning_by_mask(&edges, mask))
        .collect()
}

pub fn covering_count(g: &SimpleGraph) -> u64 {
    covering_counts_by_edges(g).iter().sum()
}

pub fn spanning_forest_count(g: &SimpleGraph) -> u64 {
    assert_edge_word(g);
    let edges = g.edges();
    let n = g.n();
    (0..1u64 << edges.len())
        .filter(|&mask| {
            let k = mask.count_ones() as usize;
            g.cc_of_edge_mask(&edges, mask) + k == n
        })
        .count() as u64
}

pub fn covering_forest_count(g: &SimpleGraph) -> u64 {
    covering_forests(g).len() as u64
}

/// Entry `k` counts the covering subgraphs with exactly `k` edges.
pub fn covering_counts_by_edges(g: &SimpleGraph) -> Vec<u64> {
    assert_edge_word(g);
    let edges = g.edges();
    let cc = g.cc();
    let mut out = vec![0u64; edges.len() + 1];
    for mask in 0..1u64 << edges.len() {
        if g.cc_of_edge_mask(&edges, mask) == cc {
            out[mask.count_ones() as usize] += 1;
        }
    }
    out
}

/// All `2^{|E|}` orientations, in edge-list bit order (bit set orients the
/// edge from its larger to its smaller endpoint).
pub fn orientations(g: &SimpleGraph) -> Vec<OrientedGraph> {
    assert_edge_word(g);
    let edges = g.edges();
    (0..1u64 << edges.len())
        .map(|mask| {
            let mut h = OrientedGraph::new(g.n()).expect("order already validated");
            for (i, &(u, v)) in edges.iter().enumerate() {
                if mask & (1u64 << i) != 0 {
                    h.add_arc(v, u).expect("edge endpoints in range");
                } else {
                    h.add_arc(u, v).expect("edge endpoints in range");
                }
            }
            h
        })
        .collect()
}

pub fn acyclic_orientations(g: &SimpleGraph) -> Vec<OrientedGraph> {
    orientations(g).into_iter().filter(|h| h.is_acyclic()).collect()
}

/// Orientations all of whose components are strongly connected. An edgeless
/// graph has exactly one, vacuously.
pub fn strongly_connected_orientations(g: &SimpleGraph) -> Vec<OrientedGraph> {
    orientations(g)
        .into_iter()
        .filter(|h| h.all_components_strongly_connected())
        .collect()
}

/// Acyclic orientation count; finite, positive, and equal to the chromatic
/// polynomial at -1 up to sign.
pub fn stanley_count(g: &SimpleGraph) -> u64 {
    let edges = g.edges();
    (0..1u64 << edges.len())
        .filter(|&mask| {
            let mut h = OrientedGraph::new(g.n()).expect("order already validated");
            for (i, &(u, v)) in edges.iter().enumerate() {
                if mask & (1u64 << i) != 0 {
                    h.add_arc(v, u).expect("edge endpoints in range");
                } else {
                    h.add_arc(u, v).expect("edge endpoints in range");
                }
            }
            h.is_acyclic()
        })
        .count() as u64
}

/// Hard cap on `|E|` for partial-orientation sweeps, which visit `3^{|E|}`
/// states.
pub const PARTIAL_ORIENTATION_EDGE_CAP: usize = 15;

/// Partial orientations of `g` (each edge left alone or given one
/// direction) without any closed mixed walk that uses an arc. States are
/// swept in base-3 edge-list order, so output order is deterministic.
pub fn totally_acyclic_partial_orientations(g: &SimpleGraph) -> Result<Vec<MixedGraph>> {
    let edges = g.edges();
    if edges.len() > PARTIAL_ORIENTATION_EDGE_CAP {
        return Err(Error::EdgeCapExceeded {
            edges: edges.len(),
            cap: PARTIAL_ORIENTATION_EDGE_CAP,
        });
    }
    let mut out = Vec::new();
    let total = 3u64.pow(edges.len() as u32);
    for code in 0..total {
        let mut h = MixedGraph::new(g.n())?;
        let mut c = code;
        for &(u, v) in &edges {
            match c % 3 {
                0 => h.add_edge(u, v)?,
                1 => h.add_arc(u, v)?,
                _ => h.add_arc(v, u)?,
            }
            c /= 3;
        }
        if h.is_totally_acyclic() {
            out.push(h);
        }
    }
    Ok(out)
}

/// Antipode of the bipartition Hopf structure in closed form: the signed sum
/// of unoriented parts over all totally acyclic partial orientations, the
/// sign being the component count of that unoriented part.
pub fn antipode_orientation_formula(g: &SimpleGraph) -> Result<GraphSum<SimpleGraph>> {
    let mut out = GraphSum::zero();
    for h in totally_acyclic_partial_orientations(g)? {
        let core = h.gr0();
        let sign = if core.cc() % 2 == 0 { 1 } else { -1 };
        out.add_term(&core, BigRational::from_integer(sign.into()));
    }
    Ok(out)
}

const SIMPLE_CATALOGUE_MAX: usize = 7;
const ORIENTED_CATALOGUE_MAX: usize = 4;

static SIMPLE_CLASSES: [OnceLock<Vec<SimpleGraph>>; SIMPLE_CATALOGUE_MAX + 1] =
    [const { OnceLock::new() }; SIMPLE_CATALOGUE_MAX + 1];
static ORIENTED_CLASSES: [OnceLock<Vec<OrientedGraph>>; ORIENTED_CATALOGUE_MAX + 1] =
    [const { OnceLock::new() }; ORIENTED_CATALOGUE_MAX + 1];

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}

/// All isomorphism classes of simple graphs on exactly `n` vertices,
/// including disconnected ones, in canonical form, ordered by edge count and
/// canonical key.
pub fn simple_isoclasses(n: usize) -> &'static [SimpleGraph] {
    assert!(
        n <= SIMPLE_CATALOGUE_MAX,
        "simple-graph catalogue stops at {SIMPLE_CATALOGUE_MAX} vertices"
    );
    SIMPLE_CLASSES[n].get_or_init(|| {
        let pairs = all_pairs(n);
        let mut seen: BTreeMap<CanonicalKey, SimpleGraph> = BTreeMap::new();
        for mask in 0..1u64 << pairs.len() {
            let mut g = SimpleGraph::new(n).expect("order already validated");
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask & (1u64 << i) != 0 {
                    g.add_edge(u, v).expect("pair in range");
                }
            }
            let (canon, key) = g.canonical();
            seen.entry(key).or_insert(canon);
        }
        let mut out: Vec<SimpleGraph> = seen.into_values().collect();
        out.sort_by_key(|g| (g.edge_count(), g.canonical_key()));
        out
    })
}

/// All isomorphism classes on at most `n` vertices.
pub fn simple_isoclasses_upto(n: usize) -> Vec<SimpleGraph> {
    (0..=n).flat_map(|k| simple_isoclasses(k).iter().cloned()).collect()
}

/// All isomorphism classes of oriented graphs on exactly `n` vertices. Each
/// vertex pair takes one of four states, so this is kept to four vertices.
pub fn oriented_isoclasses(n: usize) -> &'static [OrientedGraph] {
    assert!(
        n <= ORIENTED_CATALOGUE_MAX,
        "oriented-graph catalogue stops at {ORIENTED_CATALOGUE_MAX} vertices"
    );
    ORIENTED_CLASSES[n].get_or_init(|| {
        let pairs = all_pairs(n);
        let mut seen: BTreeMap<CanonicalKey, OrientedGraph> = BTreeMap::new();
        let total = 4u64.pow(pairs.len() as u32);
        for code in 0..total {
            let mut g = OrientedGraph::new(n).expect("order already validated");
            let mut c = code;
            for &(u, v) in &pairs {
                if c & 1 != 0 {
                    g.add_arc(u, v).expect("pair in range");
                }
                if c & 2 != 0 {
                    g.add_arc(v, u).expect("pair in range");
                }
                c >>= 2;
            }
            let (canon, key) = g.canonical();
            seen.entry(key).or_insert(canon);
        }
        let mut out: Vec<OrientedGraph> = seen.into_values().collect();
        out.sort_by_key(|g| (g.arc_count(), g.canonical_key()));
        out
    })
}

pub fn oriented_isoclasses_upto(n: usize) -> Vec<OrientedGraph> {
    (0..=n).flat_map(|k| oriented_isoclasses(k).iter().cloned()).collect()
}

/// Connected classes only, for per-component tabulations.
pub fn connected_simple_isoclasses(n: usize) -> Vec<SimpleGraph> {
    simple_isoclasses(n).iter().filter(|g| g.is_connected()).cloned().collect()
}

/// Count of totally acyclic partial orientations, via the cached catalogue
/// of small cases when possible.
pub fn totally_acyclic_count(g: &SimpleGraph) -> Result<u64> {
    static CACHE: LazyLock<RwLock<std::collections::HashMap<CanonicalKey, u64>>> =
        LazyLock::new(|| RwLock::new(std::collections::HashMap::new()));
    let key = g.canonical_key();
    if let Some(&hit) = CACHE.read().expect("count cache lock").get(&key) {
        return Ok(hit);
    }
    let value = totally_acyclic_partial_orientations(g)?.len() as u64;
    CACHE.write().expect("count cache lock").insert(key, value);
    Ok(value)
}
