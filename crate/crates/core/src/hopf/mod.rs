//! Bialgebra structure on linear spans of graphs.
//!
//! The underlying algebra is free commutative on connected graphs: a basis
//! element is a graph, multiplication is disjoint union, the unit is the
//! empty graph. Two coproducts coexist:
//!
//! * the bipartition coproduct splits the vertex set in two (over all
//!   subsets for simple graphs, over ideals for oriented ones) and is a Hopf
//!   algebra coproduct;
//! * the contraction coproduct sums over partitions with connected blocks,
//!   pairing the quotient with the restriction, and is only a bialgebra
//!   coproduct.
//!
//! [`BasisGraph`] abstracts the two graph flavors so sums, convolutions and
//! the antipode are written once.

pub mod character;
pub mod morphism;
pub mod theta;

pub use character::{
    alpha, chromatic_at, counit_bipartition_character, counit_contraction_character,
    counit_contraction_star_inverse, counting_at, lambda_y, mu_strong, mu_y, one_character,
    Character, CharacterSpec,
};
pub use morphism::{
    phi_chromatic, phi_from_character, phi_vertex_power, zeta_at, PolyMorphism,
};
pub use theta::{project_acyclic, project_acyclic_tensor, theta, theta_acyclic};

use crate::canon::CanonicalKey;
use crate::error::{Error, Result};
use crate::graph::{OrientedGraph, SimpleGraph};
use num::{BigRational, One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::sync::{LazyLock, RwLock};

/// A graph flavor usable as the basis of the double bialgebra.
pub trait BasisGraph: Clone + Send + Sync + 'static {
    fn vertex_count(&self) -> usize;
    fn edge_count(&self) -> usize;
    fn empty() -> Self;
    fn single_vertex() -> Self;
    fn canonical(&self) -> (Self, CanonicalKey);
    /// Connected components as vertex masks, sorted by smallest member.
    fn component_masks(&self) -> Vec<u64>;
    fn induce(&self, mask: u64) -> Self;
    fn disjoint_union(&self, other: &Self) -> Self;
    /// All bipartition coproduct terms `(left, right)`, including the
    /// trivial ones with an empty side.
    fn bipartition_splits(&self) -> Vec<(Self, Self)>;
    /// All contraction coproduct terms `(quotient, restriction)`, one per
    /// partition of the vertex set into connected blocks.
    fn contraction_splits(&self) -> Vec<(Self, Self)>;
    /// Process-wide antipode cache for this flavor.
    fn antipode_memo() -> &'static RwLock<HashMap<CanonicalKey, GraphSum<Self>>>;
    /// Compact text form (graph6 or digraph6) for display and reporting.
    fn text_label(&self) -> String;

    fn is_empty_graph(&self) -> bool {
        self.vertex_count() == 0
    }

    fn canonical_key(&self) -> CanonicalKey {
        self.canonical().1
    }
}

impl BasisGraph for SimpleGraph {
    fn vertex_count(&self) -> usize {
        self.n()
    }

    fn edge_count(&self) -> usize {
        SimpleGraph::edge_count(self)
    }

    fn empty() -> Self {
        SimpleGraph::new(0).expect("empty graph is valid")
    }

    fn single_vertex() -> Self {
        SimpleGraph::single_vertex()
    }

    fn canonical(&self) -> (Self, CanonicalKey) {
        SimpleGraph::canonical(self)
    }

    fn component_masks(&self) -> Vec<u64> {
        SimpleGraph::component_masks(self)
    }

    fn induce(&self, mask: u64) -> Self {
        self.induced(mask)
    }

    fn disjoint_union(&self, other: &Self) -> Self {
        SimpleGraph::disjoint_union(self, other).expect("union of small graphs stays small")
    }

    fn bipartition_splits(&self) -> Vec<(Self, Self)> {
        let n = self.n();
        let full = crate::graph::full_mask(n);
        let mut out = Vec::with_capacity(1 << n);
        for mask in 0..=full {
            out.push((self.induced(mask), self.induced(full & !mask)));
            if mask == full {
                break;
            }
        }
        out
    }

    fn contraction_splits(&self) -> Vec<(Self, Self)> {
        self.connected_partitions()
            .into_iter()
            .map(|p| {
                let q = self.contract(&p).expect("partition fits the graph");
                let r = self.restrict(&p).expect("partition fits the graph");
                (q, r)
            })
            .collect()
    }

    fn antipode_memo() -> &'static RwLock<HashMap<CanonicalKey, GraphSum<SimpleGraph>>> {
        static MEMO: LazyLock<RwLock<HashMap<CanonicalKey, GraphSum<SimpleGraph>>>> =
            LazyLock::new(|| RwLock::new(HashMap::new()));
        &MEMO
    }

    fn text_label(&self) -> String {
        crate::graph6::to_graph6(self)
    }
}

impl BasisGraph for OrientedGraph {
    fn vertex_count(&self) -> usize {
        self.n()
    }

    fn edge_count(&self) -> usize {
        self.arc_count()
    }

    fn empty() -> Self {
        OrientedGraph::new(0).expect("empty graph is valid")
    }

    fn single_vertex() -> Self {
        OrientedGraph::single_vertex()
    }

    fn canonical(&self) -> (Self, CanonicalKey) {
        OrientedGraph::canonical(self)
    }

    fn component_masks(&self) -> Vec<u64> {
        OrientedGraph::component_masks(self)
    }

    fn induce(&self, mask: u64) -> Self {
        self.induced(mask)
    }

    fn disjoint_union(&self, other: &Self) -> Self {
        OrientedGraph::disjoint_union(self, other).expect("union of small graphs stays small")
    }

    /// Splits run over ideals: the left side is closed under outgoing arcs.
    fn bipartition_splits(&self) -> Vec<(Self, Self)> {
        let full = crate::graph::full_mask(self.n());
        self.ideals()
            .into_iter()
            .map(|i| (self.induced(i), self.induced(full & !i)))
            .collect()
    }

    fn contraction_splits(&self) -> Vec<(Self, Self)> {
        self.connected_partitions()
            .into_iter()
            .map(|p| {
                let q = self.contract(&p).expect("partition fits the graph");
                let r = self.restrict(&p).expect("partition fits the graph");
                (q, r)
            })
            .collect()
    }

    fn antipode_memo() -> &'static RwLock<HashMap<CanonicalKey, GraphSum<OrientedGraph>>> {
        static MEMO: LazyLock<RwLock<HashMap<CanonicalKey, GraphSum<OrientedGraph>>>> =
            LazyLock::new(|| RwLock::new(HashMap::new()));
        &MEMO
    }

    fn text_label(&self) -> String {
        crate::graph6::to_digraph6(self)
    }
}

/// Finite rational linear combination of isomorphism classes of graphs.
#[derive(Debug, Clone)]
pub struct GraphSum<G: BasisGraph> {
    terms: BTreeMap<CanonicalKey, (G, BigRational)>,
}

impl<G: BasisGraph> GraphSum<G> {
    pub fn zero() -> Self {
        GraphSum { terms: BTreeMap::new() }
    }

    /// The algebra unit: the empty graph with coefficient one.
    pub fn unit() -> Self {
        GraphSum::from_graph(&G::empty())
    }

    pub fn from_graph(g: &G) -> Self {
        let mut s = GraphSum::zero();
        s.add_term(g, BigRational::one());
        s
    }

    pub fn add_term(&mut self, g: &G, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let (canon, key) = g.canonical();
        let entry = self
            .terms
            .entry(key)
            .or_insert_with(|| (canon, BigRational::zero()));
        entry.1 += coeff;
        if entry.1.is_zero() {
            let key = g.canonical_key();
            self.terms.remove(&key);
        }
    }

    pub fn add_scaled(&mut self, other: &GraphSum<G>, coeff: &BigRational) {
        for (g, c) in other.terms() {
            self.add_term(g, c * coeff);
        }
    }

    pub fn add(&self, other: &GraphSum<G>) -> GraphSum<G> {
        let mut out = self.clone();
        out.add_scaled(other, &BigRational::one());
        out
    }

    pub fn sub(&self, other: &GraphSum<G>) -> GraphSum<G> {
        let mut out = self.clone();
        out.add_scaled(other, &-BigRational::one());
        out
    }

    pub fn neg(&self) -> GraphSum<G> {
        self.scale(&-BigRational::one())
    }

    pub fn scale(&self, coeff: &BigRational) -> GraphSum<G> {
        let mut out = GraphSum::zero();
        out.add_scaled(self, coeff);
        out
    }

    /// Bilinear product: disjoint union on basis elements.
    pub fn mul(&self, other: &GraphSum<G>) -> GraphSum<G> {
        let mut out = GraphSum::zero();
        for (g, c) in self.terms() {
            for (h, d) in other.terms() {
                out.add_term(&g.disjoint_union(h), c * d);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical key order.
    pub fn terms(&self) -> impl Iterator<Item = (&G, &BigRational)> {
        self.terms.values().map(|(g, c)| (g, c))
    }

    pub fn coeff_of(&self, g: &G) -> BigRational {
        self.terms
            .get(&g.canonical_key())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigRational::zero)
    }
}

impl<G: BasisGraph> PartialEq for GraphSum<G> {
    fn eq(&self, other: &Self) -> bool {
        self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .zip(other.terms.iter())
                .all(|((k1, (_, c1)), (k2, (_, c2)))| k1 == k2 && c1 == c2)
    }
}

impl<G: BasisGraph> Eq for GraphSum<G> {}

impl<G: BasisGraph> std::fmt::Display for GraphSum<G> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (g, c)) in self.terms().enumerate() {
            let label = if g.is_empty_graph() {
                "1".to_string()
            } else {
                format!("[{}]", g.text_label())
            };
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            write!(f, "{label}")?;
        }
        Ok(())
    }
}

/// Rational combination of ordered pairs of graph classes.
#[derive(Debug, Clone)]
pub struct TensorSum<G: BasisGraph> {
    terms: BTreeMap<(CanonicalKey, CanonicalKey), (G, G, BigRational)>,
}

impl<G: BasisGraph> TensorSum<G> {
    pub fn zero() -> Self {
        TensorSum { terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, left: &G, right: &G, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let (lc, lk) = left.canonical();
        let (rc, rk) = right.canonical();
        let entry = self
            .terms
            .entry((lk, rk))
            .or_insert_with(|| (lc, rc, BigRational::zero()));
        entry.2 += coeff;
        if entry.2.is_zero() {
            self.terms.remove(&(left.canonical_key(), right.canonical_key()));
        }
    }

    pub fn add_scaled(&mut self, other: &TensorSum<G>, coeff: &BigRational) {
        for (l, r, c) in other.terms() {
            self.add_term(l, r, c * coeff);
        }
    }

    pub fn sub(&self, other: &TensorSum<G>) -> TensorSum<G> {
        let mut out = self.clone();
        out.add_scaled(other, &-BigRational::one());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&G, &G, &BigRational)> {
        self.terms.values().map(|(l, r, c)| (l, r, c))
    }

    /// Exchanges the two tensor factors.
    pub fn swap(&self) -> TensorSum<G> {
        let mut out = TensorSum::zero();
        for (l, r, c) in self.terms() {
            out.add_term(r, l, c.clone());
        }
        out
    }
}

impl<G: BasisGraph> PartialEq for TensorSum<G> {
    fn eq(&self, other: &Self) -> bool {
        self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .zip(other.terms.iter())
                .all(|((k1, (_, _, c1)), (k2, (_, _, c2)))| k1 == k2 && c1 == c2)
    }
}

impl<G: BasisGraph> Eq for TensorSum<G> {}

impl<G: BasisGraph> std::fmt::Display for TensorSum<G> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let label = |g: &G| {
            if g.is_empty_graph() {
                "1".to_string()
            } else {
                format!("[{}]", g.text_label())
            }
        };
        for (i, (l, r, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){} (x) {}", label(l), label(r))?;
        }
        Ok(())
    }
}

/// Rational combination of ordered tuples of graph classes, for the
/// higher-arity sides of the coproduct laws.
#[derive(Debug, Clone)]
pub struct MultiSum<G: BasisGraph> {
    arity: usize,
    terms: BTreeMap<Vec<CanonicalKey>, BigRational>,
    _marker: std::marker::PhantomData<G>,
}

impl<G: BasisGraph> PartialEq for MultiSum<G> {
    fn eq(&self, other: &Self) -> bool {
        self.arity == other.arity && self.terms == other.terms
    }
}

impl<G: BasisGraph> Eq for MultiSum<G> {}

impl<G: BasisGraph> MultiSum<G> {
    pub fn zero(arity: usize) -> Self {
        MultiSum {
            arity,
            terms: BTreeMap::new(),
            _marker: std::marker::PhantomData,
        }
    }

    pub fn add_term(&mut self, factors: &[G], coeff: BigRational) {
        assert_eq!(factors.len(), self.arity, "tensor arity mismatch");
        if coeff.is_zero() {
            return;
        }
        let key: Vec<CanonicalKey> = factors.iter().map(|g| g.canonical_key()).collect();
        let entry = self.terms.entry(key.clone()).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn sub(&self, other: &MultiSum<G>) -> MultiSum<G> {
        assert_eq!(self.arity, other.arity, "tensor arity mismatch");
        let mut out = self.clone();
        for (k, c) in &other.terms {
            let entry = out.terms.entry(k.clone()).or_insert_with(BigRational::zero);
            *entry -= c;
            if entry.is_zero() {
                out.terms.remove(k);
            }
        }
        out
    }
}

/// Bipartition coproduct of a basis graph (ideal-based for oriented graphs).
pub fn coproduct_bipartition<G: BasisGraph>(g: &G) -> TensorSum<G> {
    let mut out = TensorSum::zero();
    for (l, r) in g.bipartition_splits() {
        out.add_term(&l, &r, BigRational::one());
    }
    out
}

/// The bipartition coproduct of an oriented graph, named for what indexes
/// it: the sum runs over the ideals of the arc relation.
pub fn coproduct_ideal(g: &OrientedGraph) -> TensorSum<OrientedGraph> {
    coproduct_bipartition(g)
}

/// Contraction coproduct: quotient tensor restriction, over partitions of
/// the vertex set into connected blocks.
pub fn coproduct_contraction<G: BasisGraph>(g: &G) -> TensorSum<G> {
    let mut out = TensorSum::zero();
    for (quotient, restriction) in g.contraction_splits() {
        out.add_term(&quotient, &restriction, BigRational::one());
    }
    out
}

/// Counit of the bipartition coproduct: the coefficient of the empty graph.
pub fn counit_bipartition<G: BasisGraph>(s: &GraphSum<G>) -> BigRational {
    s.coeff_of(&G::empty())
}

/// Counit of the contraction coproduct: the total coefficient of edgeless
/// graphs.
pub fn counit_contraction<G: BasisGraph>(s: &GraphSum<G>) -> BigRational {
    s.terms()
        .filter(|(g, _)| g.edge_count() == 0)
        .map(|(_, c)| c.clone())
        .fold(BigRational::zero(), |acc, c| acc + c)
}

pub fn counit_bipartition_of<G: BasisGraph>(g: &G) -> BigRational {
    if g.is_empty_graph() {
        BigRational::one()
    } else {
        BigRational::zero()
    }
}

pub fn counit_contraction_of<G: BasisGraph>(g: &G) -> BigRational {
    if g.edge_count() == 0 {
        BigRational::one()
    } else {
        BigRational::zero()
    }
}

/// Reduced bipartition coproduct of a sum in the augmentation ideal (no
/// constant term): drops the two trivial splits of every basis term.
pub fn reduced_coproduct<G: BasisGraph>(s: &GraphSum<G>) -> Result<TensorSum<G>> {
    if !counit_bipartition(s).is_zero() {
        return Err(Error::OutsideAugmentationIdeal);
    }
    let mut out = TensorSum::zero();
    for (g, c) in s.terms() {
        for (l, r) in g.bipartition_splits() {
            if l.is_empty_graph() || r.is_empty_graph() {
                continue;
            }
            out.add_term(&l, &r, c.clone());
        }
    }
    Ok(out)
}

/// `k`-fold tensor refinement of a basis graph under the reduced
/// bipartition coproduct: arity-`k` tuples of nonempty parts. `k = 1` is
/// the identity. Zero as soon as `k` exceeds the vertex count.
pub fn iterated_reduced_coproduct<G: BasisGraph>(g: &G, k: usize) -> Result<MultiSum<G>> {
    if g.is_empty_graph() {
        return Err(Error::OutsideAugmentationIdeal);
    }
    assert!(k >= 1, "arity must be at least 1");
    let mut acc = MultiSum::zero(k);
    fn rec<G: BasisGraph>(
        g: &G,
        k: usize,
        prefix: &mut Vec<G>,
        acc: &mut MultiSum<G>,
    ) {
        if k == 1 {
            prefix.push(g.clone());
            let coeff = BigRational::one();
            acc.add_term(prefix, coeff);
            prefix.pop();
            return;
        }
        for (l, r) in g.bipartition_splits() {
            if l.is_empty_graph() || r.is_empty_graph() {
                continue;
            }
            prefix.push(l);
            rec(&r, k - 1, prefix, acc);
            prefix.pop();
        }
    }
    rec(g, k, &mut Vec::new(), &mut acc);
    Ok(acc)
}

/// `a (x) b (x) c (x) d -> a (x) c (x) bd`, the mixed product appearing in
/// the compatibility law between the two coproducts.
pub fn m_1_3_24<G: BasisGraph>(factors: &[G; 4], coeff: BigRational, acc: &mut MultiSum<G>) {
    let product = factors[1].disjoint_union(&factors[3]);
    acc.add_term(&[factors[0].clone(), factors[2].clone(), product], coeff);
}

/// Hopf antipode of the bipartition coproduct, by the triangular recursion
/// `S(g) = -g - sum S(l) r` over the proper splits. Memoized per flavor.
pub fn antipode_recursive<G: BasisGraph>(g: &G) -> GraphSum<G> {
    if g.is_empty_graph() {
        return GraphSum::unit();
    }
    let (canon, key) = g.canonical();
    if let Some(hit) = G::antipode_memo().read().expect("antipode cache lock").get(&key) {
        return hit.clone();
    }
    let mut out = GraphSum::from_graph(&canon).neg();
    for (l, r) in canon.bipartition_splits() {
        if l.is_empty_graph() || r.is_empty_graph() {
            continue;
        }
        let s_l = antipode_recursive(&l);
        out.add_scaled(&s_l.mul(&GraphSum::from_graph(&r)), &-BigRational::one());
    }
    G::antipode_memo()
        .write()
        .expect("antipode cache lock")
        .insert(key, out.clone());
    out
}

/// Linear extension of the antipode to sums.
pub fn antipode_sum<G: BasisGraph>(s: &GraphSum<G>) -> GraphSum<G> {
    let mut out = GraphSum::zero();
    for (g, c) in s.terms() {
        out.add_scaled(&antipode_recursive(g), c);
    }
    out
}
