//! The orientation-sum maps from simple to oriented graph spans.
//!
//! Summing all orientations of a graph respects products and the
//! bipartition coproducts on both sides, but not the contraction
//! coproducts: contracting can merge differently oriented edges into
//! opposite arc pairs that no orientation of the quotient produces.
//! Restricting to acyclic orientations and passing to the quotient by the
//! span of graphs with directed cycles repairs this.

use crate::graph::{OrientedGraph, SimpleGraph};
use crate::hopf::{GraphSum, TensorSum};
use num::{BigRational, One};

/// Sum of all `2^{|E|}` orientations.
pub fn theta(g: &SimpleGraph) -> GraphSum<OrientedGraph> {
    let mut out = GraphSum::zero();
    for h in crate::enumerate::orientations(g) {
        out.add_term(&h, BigRational::one());
    }
    out
}

/// Sum of the acyclic orientations only.
pub fn theta_acyclic(g: &SimpleGraph) -> GraphSum<OrientedGraph> {
    let mut out = GraphSum::zero();
    for h in crate::enumerate::acyclic_orientations(g) {
        out.add_term(&h, BigRational::one());
    }
    out
}

/// Projection that kills every oriented graph containing a directed cycle
/// (opposite arc pairs included).
pub fn project_acyclic(s: &GraphSum<OrientedGraph>) -> GraphSum<OrientedGraph> {
    let mut out = GraphSum::zero();
    for (g, c) in s.terms() {
        if g.is_acyclic() {
            out.add_term(g, c.clone());
        }
    }
    out
}

/// The same projection on both factors of a tensor.
pub fn project_acyclic_tensor(t: &TensorSum<OrientedGraph>) -> TensorSum<OrientedGraph> {
    let mut out = TensorSum::zero();
    for (l, r, c) in t.terms() {
        if l.is_acyclic() && r.is_acyclic() {
            out.add_term(l, r, c.clone());
        }
    }
    out
}
