//! Characters of the graph algebra: multiplicative linear forms, their two
//! convolution monoids, and inverses.
//!
//! A character is determined by its values on connected graphs and extends
//! multiplicatively over disjoint unions. Each coproduct induces a
//! convolution product on characters; the bipartition convolution makes the
//! characters a group (inverses through the antipode), the contraction
//! convolution a monoid whose invertible elements are the characters that do
//! not vanish on the single vertex.

use crate::canon::CanonicalKey;
use crate::error::{Error, Result};
use crate::graph::{OrientedGraph, SimpleGraph};
use crate::hopf::{antipode_recursive, BasisGraph, GraphSum};
use crate::poly::qpow;
use num::{BigRational, One, Zero};
use std::collections::HashMap;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

#[derive(Clone)]
pub struct Character<G: BasisGraph> {
    name: String,
    rule: Arc<dyn Fn(&G) -> BigRational + Send + Sync>,
    cache: Arc<RwLock<HashMap<CanonicalKey, BigRational>>>,
}

impl<G: BasisGraph> Character<G> {
    /// Builds a character from its restriction to connected graphs. The
    /// rule is only ever called on connected graphs with at least one
    /// vertex, in canonical form.
    pub fn from_rule(
        name: impl Into<String>,
        rule: impl Fn(&G) -> BigRational + Send + Sync + 'static,
    ) -> Self {
        Character {
            name: name.into(),
            rule: Arc::new(rule),
            cache: Arc::new(RwLock::new(HashMap::new())),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, g: &G) -> BigRational {
        g.component_masks()
            .into_iter()
            .map(|mask| self.eval_connected_raw(&g.induce(mask)))
            .fold(BigRational::one(), |acc, v| acc * v)
    }

    fn eval_connected_raw(&self, g: &G) -> BigRational {
        let (canon, key) = g.canonical();
        if let Some(hit) = self.cache.read().expect("character cache lock").get(&key) {
            return hit.clone();
        }
        let value = (self.rule)(&canon);
        self.cache
            .write()
            .expect("character cache lock")
            .insert(key, value.clone());
        value
    }

    /// Linear extension to sums of graphs.
    pub fn eval_sum(&self, s: &GraphSum<G>) -> BigRational {
        s.terms()
            .map(|(g, c)| c * self.eval(g))
            .fold(BigRational::zero(), |acc, v| acc + v)
    }

    /// Convolution along the bipartition coproduct.
    pub fn convolve_bipartition(&self, other: &Character<G>) -> Character<G> {
        let (a, b) = (self.clone(), other.clone());
        Self::from_rule(format!("({} * {})", self.name, other.name), move |g| {
            g.bipartition_splits()
                .into_iter()
                .map(|(l, r)| a.eval(&l) * b.eval(&r))
                .fold(BigRational::zero(), |acc, v| acc + v)
        })
    }

    /// Convolution along the contraction coproduct.
    pub fn convolve_contraction(&self, other: &Character<G>) -> Character<G> {
        let (a, b) = (self.clone(), other.clone());
        Self::from_rule(format!("({} . {})", self.name, other.name), move |g| {
            g.contraction_splits()
                .into_iter()
                .map(|(q, r)| a.eval(&q) * b.eval(&r))
                .fold(BigRational::zero(), |acc, v| acc + v)
        })
    }

    /// Inverse in the bipartition convolution group: composition with the
    /// antipode.
    pub fn inverse_bipartition(&self) -> Character<G> {
        let a = self.clone();
        Character::from_rule(format!("{}^(*-1)", self.name), move |g| {
            a.eval_sum(&antipode_recursive(g))
        })
    }

    /// Inverse in the contraction convolution monoid. Exists exactly when
    /// the character does not vanish on the single vertex.
    pub fn inverse_contraction(&self) -> Result<Character<G>> {
        let dot_value = self.eval(&G::single_vertex());
        if dot_value.is_zero() {
            return Err(Error::NonInvertible);
        }
        let inv_dot = dot_value.recip();
        let lam = self.clone();
        let memo: Arc<RwLock<HashMap<CanonicalKey, BigRational>>> =
            Arc::new(RwLock::new(HashMap::new()));
        Ok(Character::from_rule(
            format!("{}^(.-1)", self.name),
            move |g| star_inverse_connected(&lam, &inv_dot, g, &memo),
        ))
    }
}

/// Value of the contraction-convolution inverse on a connected graph, by
/// peeling off the one-block partition: the inverse at `g` is determined by
/// the character on quotients and the inverse on strictly smaller
/// restrictions.
fn star_inverse_connected<G: BasisGraph>(
    lam: &Character<G>,
    inv_dot: &BigRational,
    g: &G,
    memo: &Arc<RwLock<HashMap<CanonicalKey, BigRational>>>,
) -> BigRational {
    if g.vertex_count() == 1 {
        return inv_dot.clone();
    }
    let (canon, key) = g.canonical();
    if let Some(hit) = memo.read().expect("inverse cache lock").get(&key) {
        return hit.clone();
    }
    let mut acc = BigRational::zero();
    for (quotient, restriction) in canon.contraction_splits() {
        // The one-block partition carries the unknown value; everything else
        // has strictly smaller blocks.
        if quotient.vertex_count() == 1 {
            continue;
        }
        let mut blocks_value = BigRational::one();
        for mask in restriction.component_masks() {
            blocks_value *= star_inverse_connected(lam, inv_dot, &restriction.induce(mask), memo);
        }
        acc += lam.eval(&quotient) * blocks_value;
    }
    let value = -inv_dot * acc;
    memo.write().expect("inverse cache lock").insert(key, value.clone());
    value
}

/// Counit of the bipartition coproduct as a character: one on the empty
/// graph only.
pub fn counit_bipartition_character<G: BasisGraph>() -> Character<G> {
    Character::from_rule("eps-bipartition", |_| BigRational::zero())
}

/// Counit of the contraction coproduct as a character: one exactly on
/// edgeless graphs.
pub fn counit_contraction_character<G: BasisGraph>() -> Character<G> {
    Character::from_rule("eps-contraction", |g: &G| {
        if g.edge_count() == 0 {
            BigRational::one()
        } else {
            BigRational::zero()
        }
    })
}

/// The constant character: one on every graph.
pub fn one_character<G: BasisGraph>() -> Character<G> {
    Character::from_rule("one", |_| BigRational::one())
}

/// `(1 + y)^{|E|}`: counts spanning subgraphs weighted by edges kept.
pub fn mu_y(y: &BigRational) -> Character<SimpleGraph> {
    let base = BigRational::one() + y;
    Character::from_rule(format!("mu({y})"), move |g: &SimpleGraph| qpow(&base, g.edge_count()))
}

/// Weighted count of covering subgraphs: those spanning subgraphs with the
/// same component count as the host, each weighted by `y^{edges}`.
pub fn lambda_y(y: &BigRational) -> Character<SimpleGraph> {
    let y = y.clone();
    Character::from_rule(format!("lambda({y})"), move |g| {
        crate::enumerate::covering_counts_by_edges(g)
            .into_iter()
            .enumerate()
            .map(|(k, count)| BigRational::from_integer(count.into()) * qpow(&y, k))
            .fold(BigRational::zero(), |acc, v| acc + v)
    })
}

/// Signed count of orientations whose components are all strongly
/// connected; the sign is the component count.
pub fn alpha() -> Character<SimpleGraph> {
    Character::from_rule("alpha", |g| {
        let count = crate::enumerate::strongly_connected_orientations(g).len() as i64;
        -BigRational::from_integer(count.into())
    })
}

/// On oriented graphs: minus one on strongly connected graphs, zero on
/// other connected ones, extended multiplicatively.
pub fn mu_strong() -> Character<OrientedGraph> {
    Character::from_rule("mu-strong", |g: &OrientedGraph| {
        if g.all_components_strongly_connected() {
            -BigRational::one()
        } else {
            BigRational::zero()
        }
    })
}

/// Chromatic polynomial evaluated at a fixed color count.
pub fn chromatic_at(x: &BigRational) -> Character<SimpleGraph> {
    let x = x.clone();
    Character::from_rule(format!("chromatic-at({x})"), move |g| {
        crate::invariants::chromatic_polynomial(g).eval(&x)
    })
}

/// Partition-function character: the two-variable subgraph expansion
/// evaluated at a fixed point.
pub fn counting_at(x: &BigRational, y: &BigRational) -> Character<SimpleGraph> {
    let (x, y) = (x.clone(), y.clone());
    Character::from_rule(format!("counting-at({x},{y})"), move |g| {
        crate::invariants::fk_polynomial(g).eval(&x, &y)
    })
}

/// Closed form of the contraction-convolution inverse of the contraction
/// counit: the chromatic polynomial at -1.
pub fn counit_contraction_star_inverse() -> Character<SimpleGraph> {
    chromatic_at(&-BigRational::one())
}

/// Named character selection, as used by the command line.
#[derive(Debug, Clone, PartialEq)]
pub enum CharacterSpec {
    CounitBipartition,
    CounitContraction,
    One,
    MuY(BigRational),
    LambdaY(BigRational),
    Alpha,
    ChromaticAt(BigRational),
    CountingAt(BigRational, BigRational),
}

impl CharacterSpec {
    /// Accepted forms: `eps-bipartition`, `eps-contraction`, `one`,
    /// `alpha`, `mu(y)`, `lambda(y)`, `chromatic-at(q)`,
    /// `counting-at(x,y)`, with exact rational arguments like `2`, `-1`, or
    /// `3/2`.
    pub fn parse(input: &str) -> Result<CharacterSpec> {
        let s = input.trim();
        let bad = || Error::Unsupported(format!("unknown character {s:?}"));
        match s {
            "eps-bipartition" => return Ok(CharacterSpec::CounitBipartition),
            "eps-contraction" => return Ok(CharacterSpec::CounitContraction),
            "one" => return Ok(CharacterSpec::One),
            "alpha" => return Ok(CharacterSpec::Alpha),
            _ => {}
        }
        let (head, rest) = s.split_once('(').ok_or_else(bad)?;
        let args = rest.strip_suffix(')').ok_or_else(bad)?;
        let parsed: Vec<BigRational> = args
            .split(',')
            .map(|a| BigRational::from_str(a.trim()).map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match (head, parsed.as_slice()) {
            ("mu", [y]) => Ok(CharacterSpec::MuY(y.clone())),
            ("lambda", [y]) => Ok(CharacterSpec::LambdaY(y.clone())),
            ("chromatic-at", [q]) => Ok(CharacterSpec::ChromaticAt(q.clone())),
            ("counting-at", [x, y]) => Ok(CharacterSpec::CountingAt(x.clone(), y.clone())),
            _ => Err(bad()),
        }
    }

    pub fn build(&self) -> Character<SimpleGraph> {
        match self {
            CharacterSpec::CounitBipartition => counit_bipartition_character(),
            CharacterSpec::CounitContraction => counit_contraction_character(),
            CharacterSpec::One => one_character(),
            CharacterSpec::MuY(y) => mu_y(y),
            CharacterSpec::LambdaY(y) => lambda_y(y),
            CharacterSpec::Alpha => alpha(),
            CharacterSpec::ChromaticAt(q) => chromatic_at(q),
            CharacterSpec::CountingAt(x, y) => counting_at(x, y),
        }
    }

    /// Every parameter-free builtin plus representative parameter choices,
    /// for exercising the whole menu.
    pub fn builtin_names() -> Vec<&'static str> {
        vec![
            "eps-bipartition",
            "eps-contraction",
            "one",
            "alpha",
            "mu(1)",
            "lambda(1)",
            "chromatic-at(-1)",
            "counting-at(2,1)",
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q;

    fn k(n: usize) -> SimpleGraph {
        SimpleGraph::complete(n).unwrap()
    }

    #[test]
    fn builtin_values_on_the_triangle() {
        assert_eq!(mu_y(&q(1)).eval(&k(3)), q(8));
        assert_eq!(mu_y(&q(0)).eval(&k(3)), q(1));
        assert_eq!(lambda_y(&q(1)).eval(&k(3)), q(4));
        assert_eq!(lambda_y(&q(0)).eval(&k(3)), q(0));
        assert_eq!(lambda_y(&q(-1)).eval(&k(3)), q(2));
        assert_eq!(alpha().eval(&k(3)), q(-2));
        assert_eq!(alpha().eval(&k(2)), q(0));
        assert_eq!(counit_contraction_character().eval(&k(3)), q(0));
        assert_eq!(counit_contraction_character().eval(&SimpleGraph::new(3).unwrap()), q(1));
        assert_eq!(counit_bipartition_character().eval(&SimpleGraph::empty()), q(1));
    }

    #[test]
    fn characters_are_multiplicative() {
        let g = k(3).disjoint_union(&k(2)).unwrap();
        assert_eq!(mu_y(&q(1)).eval(&g), q(16));
        assert_eq!(alpha().eval(&g), q(0));
        let h = k(3).disjoint_union(&k(3)).unwrap();
        assert_eq!(alpha().eval(&h), q(4));
    }

    #[test]
    fn contraction_convolution_recovers_mu_from_lambda() {
        // On one edge: quotients contribute 1 + y at every y.
        let y = q(3);
        let conv = one_character().convolve_contraction(&lambda_y(&y));
        assert_eq!(conv.eval(&k(2)), q(4));
        assert_eq!(conv.eval(&k(3)), mu_y(&y).eval(&k(3)));
    }

    #[test]
    fn bipartition_inverse_of_mu_one_is_alpha() {
        let inv = mu_y(&q(1)).inverse_bipartition();
        for g in [
            SimpleGraph::single_vertex(),
            k(2),
            k(3),
            SimpleGraph::path(3).unwrap(),
            SimpleGraph::cycle(4).unwrap(),
        ] {
            assert_eq!(inv.eval(&g), alpha().eval(&g), "at {g}");
        }
        // And the convolution of the two is the bipartition counit.
        let conv = mu_y(&q(1)).convolve_bipartition(&alpha());
        assert_eq!(conv.eval(&k(3)), q(0));
        assert_eq!(conv.eval(&SimpleGraph::single_vertex()), q(0));
    }

    #[test]
    fn contraction_inverse_of_the_constant_character() {
        let inv = one_character::<SimpleGraph>().inverse_contraction().unwrap();
        for g in [k(3), SimpleGraph::path(3).unwrap(), SimpleGraph::cycle(4).unwrap()] {
            assert_eq!(inv.eval(&g), lambda_y(&q(-1)).eval(&g), "at {g}");
        }
        // Convolving back gives the contraction counit on both sides.
        let left = one_character::<SimpleGraph>().convolve_contraction(&inv);
        let right = inv.convolve_contraction(&one_character());
        for g in [k(2), k(3), SimpleGraph::path(4).unwrap()] {
            assert_eq!(left.eval(&g), q(0), "left at {g}");
            assert_eq!(right.eval(&g), q(0), "right at {g}");
        }
        assert_eq!(left.eval(&SimpleGraph::single_vertex()), q(1));
    }

    #[test]
    fn counit_character_refuses_contraction_inversion() {
        assert!(counit_bipartition_character::<SimpleGraph>()
            .inverse_contraction()
            .is_err());
    }

    #[test]
    fn strong_character_inverts_the_constant_on_oriented_graphs() {
        let conv = one_character::<OrientedGraph>().convolve_bipartition(&mu_strong());
        let arc = OrientedGraph::single_arc();
        let cyc = OrientedGraph::two_cycle();
        let dot = OrientedGraph::single_vertex();
        assert_eq!(conv.eval(&arc), q(0));
        assert_eq!(conv.eval(&cyc), q(0));
        assert_eq!(conv.eval(&dot), q(0));
        assert_eq!(conv.eval(&OrientedGraph::empty()), q(1));
        let inv = one_character::<OrientedGraph>().inverse_bipartition();
        for g in [arc, cyc, dot] {
            assert_eq!(inv.eval(&g), mu_strong().eval(&g), "at {g}");
        }
    }

    #[test]
    fn character_spec_round_trips() {
        assert_eq!(CharacterSpec::parse("one").unwrap(), CharacterSpec::One);
        assert_eq!(
            CharacterSpec::parse("mu(3/2)").unwrap(),
            CharacterSpec::MuY(crate::poly::qq(3, 2))
        );
        assert_eq!(
            CharacterSpec::parse("counting-at(2, -1)").unwrap(),
            CharacterSpec::CountingAt(q(2), q(-1))
        );
        assert!(CharacterSpec::parse("zeta(2)").is_err());
        assert!(CharacterSpec::parse("mu(x)").is_err());
        for name in CharacterSpec::builtin_names() {
            assert!(CharacterSpec::parse(name).is_ok(), "builtin {name} must parse");
        }
    }
}
