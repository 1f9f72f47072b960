//! Algebra morphisms from graph spans into univariate polynomials, the
//! action of characters on them, and the universal morphism attached to a
//! character.

use crate::canon::CanonicalKey;
use crate::graph::SimpleGraph;
use crate::hopf::{BasisGraph, Character, GraphSum};
use crate::poly::{factorial, UniPoly};
use num::{BigRational, One, Zero};
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

#[derive(Clone)]
pub struct PolyMorphism<G: BasisGraph> {
    name: String,
    rule: Arc<dyn Fn(&G) -> UniPoly + Send + Sync>,
    cache: Arc<RwLock<HashMap<CanonicalKey, UniPoly>>>,
}

impl<G: BasisGraph> PolyMorphism<G> {
    /// Builds a morphism from its restriction to connected graphs; values
    /// extend multiplicatively, with the empty graph mapping to one.
    pub fn from_rule(
        name: impl Into<String>,
        rule: impl Fn(&G) -> UniPoly + Send + Sync + 'static,
    ) -> Self {
        PolyMorphism {
            name: name.into(),
            rule: Arc::new(rule),
            cache: Arc::new(RwLock::new(HashMap::new())),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, g: &G) -> UniPoly {
        let mut out = UniPoly::one();
        for mask in g.component_masks() {
            out = &out * &self.eval_connected(&g.induce(mask));
        }
        out
    }

    fn eval_connected(&self, g: &G) -> UniPoly {
        let (canon, key) = g.canonical();
        if let Some(hit) = self.cache.read().expect("morphism cache lock").get(&key) {
            return hit.clone();
        }
        let value = (self.rule)(&canon);
        self.cache
            .write()
            .expect("morphism cache lock")
            .insert(key, value.clone());
        value
    }

    pub fn eval_sum(&self, s: &GraphSum<G>) -> UniPoly {
        let mut out = UniPoly::zero();
        for (g, c) in s.terms() {
            out = &out + &self.eval(g).scale(c);
        }
        out
    }

    /// Action of a character: pair the contraction coproduct with the
    /// morphism on quotients and the character on restrictions.
    pub fn act(&self, lam: &Character<G>) -> PolyMorphism<G> {
        let phi = self.clone();
        let lam2 = lam.clone();
        Self::from_rule(format!("({} <- {})", self.name, lam.name()), move |g| {
            let mut out = UniPoly::zero();
            for (quotient, restriction) in g.contraction_splits() {
                out = &out + &phi.eval(&quotient).scale(&lam2.eval(&restriction));
            }
            out
        })
    }
}

/// Coefficient vector of the universal polynomial morphism at `g`: entry
/// `k-1` sums the character over all ways of peeling `k` nonempty layers
/// off `g` with the reduced bipartition coproduct.
fn layer_sums<G: BasisGraph>(
    lam: &Character<G>,
    g: &G,
    memo: &Arc<RwLock<HashMap<CanonicalKey, Vec<BigRational>>>>,
) -> Vec<BigRational> {
    let (canon, key) = g.canonical();
    if let Some(hit) = memo.read().expect("layer cache lock").get(&key) {
        return hit.clone();
    }
    let n = canon.vertex_count();
    let mut c = vec![BigRational::zero(); n];
    c[0] = lam.eval(&canon);
    for (l, r) in canon.bipartition_splits() {
        if l.is_empty_graph() || r.is_empty_graph() {
            continue;
        }
        let lam_l = lam.eval(&l);
        let inner = layer_sums(lam, &r, memo);
        for (i, v) in inner.iter().enumerate() {
            // A k-layer peeling of the remainder extends to k+1 layers here.
            c[i + 1] += &lam_l * v;
        }
    }
    memo.write().expect("layer cache lock").insert(key, c.clone());
    c
}

/// The unique polynomial morphism with contraction counit `lam`: layer
/// sums paired with binomial-type basis polynomials `X(X-1)..(X-k+1)/k!`.
pub fn phi_from_character<G: BasisGraph>(lam: &Character<G>) -> PolyMorphism<G> {
    let lam = lam.clone();
    let memo: Arc<RwLock<HashMap<CanonicalKey, Vec<BigRational>>>> =
        Arc::new(RwLock::new(HashMap::new()));
    PolyMorphism::from_rule(format!("phi[{}]", lam.name()), move |g| {
        let c = layer_sums(&lam, g, &memo);
        let mut out = UniPoly::zero();
        for (i, v) in c.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let k = i + 1;
            let basis = UniPoly::falling_factorial(k)
                .scale(&BigRational::from_integer(factorial(k)).recip());
            out = &out + &basis.scale(v);
        }
        out
    })
}

/// Sends every graph to `X^{|V|}`.
pub fn phi_vertex_power<G: BasisGraph>() -> PolyMorphism<G> {
    PolyMorphism::from_rule("phi0", |g: &G| UniPoly::monomial(g.vertex_count(), BigRational::one()))
}

/// The chromatic polynomial as a morphism.
pub fn phi_chromatic() -> PolyMorphism<SimpleGraph> {
    PolyMorphism::from_rule("chromatic", crate::invariants::chromatic_polynomial)
}

/// Partition function with the second variable frozen: `g` maps to the
/// subgraph expansion in `X` at `Y = y`.
pub fn zeta_at(y: &BigRational) -> PolyMorphism<SimpleGraph> {
    let y = y.clone();
    PolyMorphism::from_rule(format!("zeta({y})"), move |g| {
        crate::invariants::fk_polynomial(g).at_y(&y)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::character::{
        counit_contraction_character, lambda_y, mu_y, one_character,
    };
    use crate::poly::q;

    fn k(n: usize) -> SimpleGraph {
        SimpleGraph::complete(n).unwrap()
    }

    #[test]
    fn universal_morphism_at_the_contraction_counit_is_chromatic() {
        let phi = phi_from_character(&counit_contraction_character());
        for g in [
            SimpleGraph::single_vertex(),
            k(2),
            k(3),
            SimpleGraph::path(3).unwrap(),
            SimpleGraph::star(3).unwrap(),
        ] {
            assert_eq!(phi.eval(&g), crate::invariants::chromatic_polynomial(&g), "at {g}");
        }
    }

    #[test]
    fn universal_morphism_at_constant_character_is_vertex_power() {
        let phi = phi_from_character(&one_character());
        assert_eq!(phi.eval(&k(3)), UniPoly::monomial(3, q(1)));
        assert_eq!(phi.eval(&SimpleGraph::path(4).unwrap()), UniPoly::monomial(4, q(1)));
    }

    #[test]
    fn universal_morphism_at_mu_one_on_an_edge() {
        // Layers of the edge: the whole graph (mu_1 = 2), or two single
        // vertices in either order; the result is 2X + 2(X^2-X)/2 = X^2 + X.
        let phi = phi_from_character(&mu_y(&q(1)));
        let p = phi.eval(&k(2));
        assert_eq!(p, &UniPoly::monomial(2, q(1)) + &UniPoly::x());
        // Its contraction counit (value at 1) returns mu_1.
        assert_eq!(p.eval(&q(1)), q(2));
    }

    #[test]
    fn action_reconstructs_the_partition_function() {
        let y = q(3);
        let act = phi_vertex_power().act(&lambda_y(&y));
        assert_eq!(act.eval(&k(2)), zeta_at(&y).eval(&k(2)));
        assert_eq!(act.eval(&k(3)), zeta_at(&y).eval(&k(3)));
        let act2 = phi_chromatic().act(&mu_y(&y));
        assert_eq!(act2.eval(&k(3)), zeta_at(&y).eval(&k(3)));
    }

    #[test]
    fn morphisms_multiply_over_components() {
        let phi = phi_chromatic();
        let g = k(2).disjoint_union(&k(2)).unwrap();
        let edge = phi.eval(&k(2));
        assert_eq!(phi.eval(&g), &edge * &edge);
        assert_eq!(phi.eval(&SimpleGraph::empty()), UniPoly::one());
    }
}
