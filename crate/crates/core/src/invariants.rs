//! Graph polynomials: chromatic, subgraph partition function, rank
//! generating, Tutte, and the exact changes of variables between them.

use crate::canon::CanonicalKey;
use crate::error::{Error, Result};
use crate::graph::{Multigraph, SetPartition, SimpleGraph};
use crate::poly::{binomial, q, BiPoly, UniPoly};
use num::{BigRational, One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::sync::{LazyLock, RwLock};

pub use crate::poly::{add_coproduct_eval, mult_coproduct_eval};

static CHROMATIC_MEMO: LazyLock<RwLock<HashMap<CanonicalKey, UniPoly>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));
static FK_MEMO: LazyLock<RwLock<HashMap<CanonicalKey, BiPoly>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));
static TUTTE_MEMO: LazyLock<RwLock<HashMap<CanonicalKey, BiPoly>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// Proper-coloring counting polynomial, by deletion-contraction with
/// memoization on isomorphism classes.
pub fn chromatic_polynomial(g: &SimpleGraph) -> UniPoly {
    let mut out = UniPoly::one();
    for mask in g.component_masks() {
        out = &out * &chromatic_connected(&g.induced(mask));
    }
    out
}

fn chromatic_connected(g: &SimpleGraph) -> UniPoly {
    let (canon, key) = g.canonical();
    if let Some(hit) = CHROMATIC_MEMO.read().expect("chromatic cache lock").get(&key) {
        return hit.clone();
    }
    let value = match canon.edges().first() {
        None => UniPoly::monomial(canon.n(), BigRational::one()),
        Some(&(u, v)) => {
            // Rebuild without the chosen edge; SimpleGraph has no removal.
            let mut deleted = SimpleGraph::new(canon.n()).expect("order already validated");
            for (a, b) in canon.edges() {
                if (a, b) != (u, v) {
                    deleted.add_edge(a, b).expect("edge in range");
                }
            }
            let contracted = canon
                .contract(&SetPartition::merge_pair(canon.n(), u, v).expect("edge endpoints"))
                .expect("partition fits");
            &chromatic_polynomial(&deleted) - &chromatic_polynomial(&contracted)
        }
    };
    CHROMATIC_MEMO
        .write()
        .expect("chromatic cache lock")
        .insert(key, value.clone());
    value
}

/// Partition function of the random-cluster model: the sum over edge
/// subsets of `X^{components} Y^{edges}`.
pub fn fk_polynomial(g: &SimpleGraph) -> BiPoly {
    let (canon, key) = g.canonical();
    if let Some(hit) = FK_MEMO.read().expect("fk cache lock").get(&key) {
        return hit.clone();
    }
    let edges = canon.edges();
    assert!(edges.len() <= 63, "edge subsets are enumerated as u64 masks");
    let mut counts: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for mask in 0..1u64 << edges.len() {
        let cc = canon.cc_of_edge_mask(&edges, mask);
        *counts.entry((cc, mask.count_ones() as usize)).or_insert(0) += 1;
    }
    let mut value = BiPoly::zero();
    for ((i, j), c) in counts {
        value.add_term(i, j, BigRational::from_integer(c.into()));
    }
    FK_MEMO.write().expect("fk cache lock").insert(key, value.clone());
    value
}

/// Whitney rank generating polynomial: edge subsets weighted by corank and
/// nullity.
pub fn rank_generating_polynomial(g: &SimpleGraph) -> BiPoly {
    let edges = g.edges();
    assert!(edges.len() <= 63, "edge subsets are enumerated as u64 masks");
    let n = g.n();
    let rank = g.rank();
    let mut out = BiPoly::zero();
    for mask in 0..1u64 << edges.len() {
        let cc = g.cc_of_edge_mask(&edges, mask);
        let sub_rank = n - cc;
        let nullity = mask.count_ones() as usize - sub_rank;
        out.add_term(rank - sub_rank, nullity, BigRational::one());
    }
    out
}

/// Tutte polynomial as the shifted rank generating polynomial.
pub fn tutte_polynomial(g: &SimpleGraph) -> BiPoly {
    rank_generating_polynomial(g)
        .substitute_linear_x(&q(-1), &q(1))
        .substitute_linear_y(&q(-1), &q(1))
}

/// Tutte polynomial by deletion-contraction on multigraphs: loops give a
/// `Y` factor, bridges an `X` factor, every other edge splits into deletion
/// plus contraction. Memoized on multigraph isomorphism classes.
pub fn tutte_deletion_contraction(g: &Multigraph) -> BiPoly {
    let key = g.canonical_key();
    if let Some(hit) = TUTTE_MEMO.read().expect("tutte cache lock").get(&key) {
        return hit.clone();
    }
    let value = if let Some(v) = g.first_loop() {
        &BiPoly::y() * &tutte_deletion_contraction(&g.remove_loop(v))
    } else if let Some((u, v)) = g.first_edge() {
        if g.is_bridge(u, v) {
            &BiPoly::x() * &tutte_deletion_contraction(&g.contract_edge(u, v))
        } else {
            &tutte_deletion_contraction(&g.delete_edge(u, v))
                + &tutte_deletion_contraction(&g.contract_edge(u, v))
        }
    } else {
        BiPoly::one()
    };
    TUTTE_MEMO.write().expect("tutte cache lock").insert(key, value.clone());
    value
}

pub fn tutte_deletion_contraction_oracle(g: &SimpleGraph) -> BiPoly {
    tutte_deletion_contraction(&Multigraph::from_simple(g))
}

/// Partition function from the Tutte polynomial:
/// `Z = X^{cc} Y^{n-cc} T(X/Y + 1, Y + 1)` expanded exactly. Terms of the
/// input whose degree is out of range surface as a negative-exponent error.
pub fn fk_from_tutte(t: &BiPoly, n: usize, cc: usize) -> Result<BiPoly> {
    let mut laurent: BTreeMap<(i64, i64), BigRational> = BTreeMap::new();
    for ((i, j), c) in t.terms() {
        for a in 0..=i {
            for b in 0..=j {
                let coef = c
                    * BigRational::from_integer(binomial(i, a))
                    * BigRational::from_integer(binomial(j, b));
                let xe = a as i64 + cc as i64;
                let ye = b as i64 - a as i64 + n as i64 - cc as i64;
                let entry = laurent.entry((xe, ye)).or_insert_with(BigRational::zero);
                *entry += coef;
            }
        }
    }
    let mut out = BiPoly::zero();
    for ((xe, ye), c) in laurent {
        if c.is_zero() {
            continue;
        }
        if xe < 0 || ye < 0 {
            return Err(Error::NegativeExponent { x: xe, y: ye });
        }
        out.add_term(xe as usize, ye as usize, c);
    }
    Ok(out)
}

/// Tutte polynomial from the partition function:
/// `T = (X-1)^{-cc} (Y-1)^{-n} Z((X-1)(Y-1), Y-1)`. The substitution is
/// collected in the shifted variables, divided exactly, and shifted back;
/// inputs that are not partition functions fail the division.
pub fn tutte_from_fk(z: &BiPoly, n: usize, cc: usize) -> Result<BiPoly> {
    // In U = X-1, V = Y-1: Z(UV, V) has coefficient z_ij at U^i V^{i+j}.
    let mut shifted = BiPoly::zero();
    for ((i, j), c) in z.terms() {
        shifted.add_term(i, i + j, c.clone());
    }
    let divided = shifted.divide_by_monomial(cc, n)?;
    Ok(divided
        .substitute_linear_x(&q(-1), &q(1))
        .substitute_linear_y(&q(-1), &q(1)))
}

/// Partition function with the second variable fixed.
pub fn zeta_polynomial(g: &SimpleGraph, y: &BigRational) -> UniPoly {
    fk_polynomial(g).at_y(y)
}

pub fn phi0_polynomial(g: &SimpleGraph) -> UniPoly {
    UniPoly::monomial(g.n(), BigRational::one())
}
