//! Randomized and oracle-backed invariants that complement the exhaustive
//! verification suites: census counts, grading of the coproducts, sign
//! patterns, multiplicativity over disjoint unions, and canonical-key
//! stability under relabeling.

use hopfgraph::coloring::compatible_pair_count;
use hopfgraph::enumerate::{
    connected_simple_isoclasses, covering_count, oriented_isoclasses, simple_isoclasses,
    simple_isoclasses_upto,
};
use hopfgraph::graph6::{parse_digraph6, parse_graph6, to_digraph6, to_graph6};
use hopfgraph::hopf::{alpha, coproduct_bipartition, coproduct_contraction, lambda_y, mu_y};
use hopfgraph::invariants::{chromatic_polynomial, fk_polynomial, tutte_polynomial};
use hopfgraph::poly::{q, UniPoly};
use hopfgraph::{OrientedGraph, SetPartition, SimpleGraph};
use num::{BigRational, One, Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> SimpleGraph {
    let mut g = SimpleGraph::new(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

fn random_orientation(rng: &mut ChaCha8Rng, g: &SimpleGraph) -> OrientedGraph {
    let mut o = OrientedGraph::new(g.n()).unwrap();
    for (u, v) in g.edges() {
        if rng.gen_bool(0.5) {
            o.add_arc(u, v).unwrap();
        } else {
            o.add_arc(v, u).unwrap();
        }
    }
    o
}

fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    perm
}

#[test]
fn simple_isoclass_census() {
    let expected = [1usize, 1, 2, 4, 11, 34, 156];
    for (n, want) in expected.iter().enumerate() {
        assert_eq!(simple_isoclasses(n).len(), *want, "census at {n} vertices");
    }
    assert_eq!(simple_isoclasses_upto(6).len(), expected.iter().sum::<usize>());
}

#[test]
fn connected_simple_isoclass_census() {
    let expected = [1usize, 1, 2, 6, 21, 112];
    for (k, want) in expected.iter().enumerate() {
        let n = k + 1;
        assert_eq!(connected_simple_isoclasses(n).len(), *want, "census at {n} vertices");
    }
}

#[test]
fn oriented_isoclass_census() {
    let expected = [1usize, 1, 3, 16, 218];
    for (n, want) in expected.iter().enumerate() {
        assert_eq!(oriented_isoclasses(n).len(), *want, "census at {n} vertices");
    }
}

#[test]
fn bipartition_coproduct_is_vertex_graded() {
    for g in simple_isoclasses_upto(5) {
        let n = g.n();
        let total = (BigRational::one() + BigRational::one()).pow(n as i32);
        let mut mass = BigRational::zero();
        for (l, r, c) in coproduct_bipartition(&g).terms() {
            assert_eq!(l.n() + r.n(), n, "side sizes must sum to |V|");
            assert!(c > &BigRational::zero());
            mass += c;
        }
        assert_eq!(mass, total, "one term per vertex subset");
    }
}

#[test]
fn contraction_coproduct_fixes_right_vertices_and_components() {
    for g in simple_isoclasses_upto(5) {
        for (l, r, c) in coproduct_contraction(&g).terms() {
            assert_eq!(r.n(), g.n(), "extraction keeps the whole vertex set");
            assert_eq!(l.cc(), g.cc(), "contraction preserves component count");
            assert!(l.n() <= g.n());
            assert!(c > &BigRational::zero());
        }
    }
}

#[test]
fn chromatic_coefficients_alternate_in_sign() {
    for g in simple_isoclasses_upto(6) {
        let p = chromatic_polynomial(&g);
        let n = g.n();
        let cc = g.cc();
        if n == 0 {
            assert_eq!(p, UniPoly::one());
            continue;
        }
        assert_eq!(p.degree(), Some(n));
        assert!(p.coeff(n).is_one());
        for k in 0..cc {
            assert!(p.coeff(k).is_zero(), "no terms below X^cc");
        }
        for k in cc..=n {
            let c = p.coeff(k);
            assert!(!c.is_zero(), "coefficients are nonzero from X^cc up");
            let positive = (n - k) % 2 == 0;
            assert_eq!(c.is_positive(), positive, "sign alternates from the top");
        }
    }
}

#[test]
fn invariants_are_multiplicative_over_disjoint_unions() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let characters = [mu_y(&q(2)), lambda_y(&q(2)), alpha()];
    for _ in 0..50 {
        let (n1, n2) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let g = random_graph(&mut rng, n1, 0.5);
        let h = random_graph(&mut rng, n2, 0.5);
        let u = g.disjoint_union(&h).unwrap();
        let chrom = &chromatic_polynomial(&g) * &chromatic_polynomial(&h);
        assert_eq!(chromatic_polynomial(&u), chrom);
        let fk = &fk_polynomial(&g) * &fk_polynomial(&h);
        assert_eq!(fk_polynomial(&u), fk);
        let tutte = &tutte_polynomial(&g) * &tutte_polynomial(&h);
        assert_eq!(tutte_polynomial(&u), tutte);
        assert_eq!(covering_count(&u), covering_count(&g) * covering_count(&h));
        for chi in &characters {
            assert_eq!(chi.eval(&u), chi.eval(&g) * chi.eval(&h), "{}", chi.name());
        }
    }
}

#[test]
fn canonical_key_is_relabeling_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xcafe);
    for _ in 0..100 {
        let n = rng.gen_range(0..=7);
        let g = random_graph(&mut rng, n, 0.5);
        let perm = random_permutation(&mut rng, n);
        assert_eq!(g.canonical_key(), g.relabel(&perm).canonical_key());
        let o = random_orientation(&mut rng, &g);
        assert_eq!(o.canonical_key(), o.relabel(&perm).canonical_key());
    }
}

#[test]
fn connected_partitions_match_filter_oracle() {
    for g in simple_isoclasses_upto(5) {
        let fast = g.connected_partitions();
        let slow: Vec<SetPartition> = SetPartition::enumerate_all(g.n())
            .into_iter()
            .filter(|p| {
                p.blocks()
                    .iter()
                    .all(|&block| g.induced(block).is_connected())
            })
            .collect();
        let mut fast_blocks: Vec<Vec<u64>> = fast.iter().map(|p| p.blocks().to_vec()).collect();
        let mut slow_blocks: Vec<Vec<u64>> = slow.iter().map(|p| p.blocks().to_vec()).collect();
        fast_blocks.sort();
        slow_blocks.sort();
        assert_eq!(fast_blocks, slow_blocks, "partition sets differ on {}", to_graph6(&g));
    }
}

#[test]
fn partition_function_counts_compatible_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xfeed);
    for _ in 0..25 {
        let n = rng.gen_range(0..=5);
        let g = random_graph(&mut rng, n, 0.4);
        let z = fk_polynomial(&g);
        for x in 0..=3u64 {
            for y in 0..=3u64 {
                let count = compatible_pair_count(&g, x, y);
                assert_eq!(count, z.eval(&q(x as i64), &q(y as i64 - 1)));
            }
        }
    }
}

#[test]
fn covering_weight_specializes_tutte() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xbead);
    for _ in 0..25 {
        let n = rng.gen_range(1..=5);
        let g = random_graph(&mut rng, n, 0.5);
        let t = tutte_polynomial(&g);
        let exp = (g.n() - g.cc()) as i32;
        for y in 1..=3i64 {
            let lhs = lambda_y(&q(y)).eval(&g);
            let rhs = q(y).pow(exp) * t.eval(&q(1), &q(1 + y));
            assert_eq!(lhs, rhs, "covering weight at y = {y}");
        }
    }
}

#[test]
fn graph6_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xdead);
    for _ in 0..50 {
        let n = rng.gen_range(0..=7);
        let g = random_graph(&mut rng, n, 0.5);
        let back = parse_graph6(&to_graph6(&g)).unwrap();
        assert_eq!(g.n(), back.n());
        assert_eq!(g.edges(), back.edges());
        let o = random_orientation(&mut rng, &g);
        let back = parse_digraph6(&to_digraph6(&o)).unwrap();
        assert_eq!(o.n(), back.n());
        assert_eq!(o.arcs(), back.arcs());
    }
}

fn small_poly() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-9i64..=9, 0..6).prop_map(|coeffs| {
        let mut p = UniPoly::zero();
        for (k, c) in coeffs.into_iter().enumerate() {
            p.add_term(k, q(c));
        }
        p
    })
}

proptest! {
    #[test]
    fn linear_substitution_commutes_with_evaluation(
        p in small_poly(),
        a in -5i64..=5,
        b in -5i64..=5,
        t in -5i64..=5,
    ) {
        let substituted = p.substitute_linear(&q(a), &q(b));
        prop_assert_eq!(substituted.eval(&q(t)), p.eval(&(q(a) + q(b) * q(t))));
    }

    #[test]
    fn polynomial_ring_operations_match_pointwise(
        p in small_poly(),
        r in small_poly(),
        t in -5i64..=5,
    ) {
        let at = q(t);
        prop_assert_eq!((&p + &r).eval(&at), p.eval(&at) + r.eval(&at));
        prop_assert_eq!((&p * &r).eval(&at), p.eval(&at) * r.eval(&at));
    }

    #[test]
    fn edge_masks_count_components_like_rebuilt_subgraphs(
        edges in prop::collection::vec((0usize..6, 0usize..6), 0..10),
        mask in 0u64..1024,
    ) {
        let mut g = SimpleGraph::new(6).unwrap();
        for (u, v) in edges {
            if u != v {
                let _ = g.add_edge(u, v);
            }
        }
        let list = g.edges();
        let mask = mask & ((1u64 << list.len()) - 1);
        let sub = g.spanning_by_mask(&list, mask);
        prop_assert_eq!(g.cc_of_edge_mask(&list, mask), sub.cc());
    }
}
