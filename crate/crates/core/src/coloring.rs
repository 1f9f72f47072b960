//! Brute-force coloring oracles: vertex-edge coloring pairs, their signed
//! sums, and the orientation-augmented variants, together with the exact
//! Tutte evaluations they certify at shifted and negated arguments.
//!
//! A pair with edge range `r` assigns a color in `1..=x` to every vertex
//! and a value in `0..=r` to every edge, an edge taking a nonzero value
//! exactly when its endpoints agree. Counts loop over vertex colorings
//! only: once vertex colors are fixed, each monochromatic edge has `r`
//! admissible values and each bichromatic edge exactly one, so the inner
//! sum collapses to a product. The signed sums weight a pair by the parity
//! of its nonzero-valued edges, so a monochromatic edge contributes `-r`.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::invariants::tutte_polynomial;
use crate::poly::{q, qpow};
use num::{BigRational, Zero};

fn vertex_colorings(n: usize, x: u64) -> impl Iterator<Item = Vec<u64>> {
    let total = x.checked_pow(n as u32).expect("coloring space fits in u64");
    (0..total).map(move |mut code| {
        (0..n)
            .map(|_| {
                let c = code % x;
                code /= x;
                c
            })
            .collect()
    })
}

fn monochromatic_edges(g: &SimpleGraph, coloring: &[u64]) -> usize {
    g.edges()
        .iter()
        .filter(|&&(u, v)| coloring[u] == coloring[v])
        .count()
}

fn pair_count_range(g: &SimpleGraph, x: u64, range: u64) -> BigRational {
    let mut total = BigRational::zero();
    for c in vertex_colorings(g.n(), x) {
        total += qpow(&q(range as i64), monochromatic_edges(g, &c));
    }
    total
}

fn pair_signed_range(g: &SimpleGraph, x: u64, range: u64) -> BigRational {
    let mut total = BigRational::zero();
    for c in vertex_colorings(g.n(), x) {
        total += qpow(&q(-(range as i64)), monochromatic_edges(g, &c));
    }
    total
}

/// Number of compatible pairs with vertex colors in `1..=x` and edge
/// values in `0..=y`; equals the partition function at `(x, y - 1)`.
pub fn compatible_pair_count(g: &SimpleGraph, x: u64, y: u64) -> BigRational {
    pair_count_range(g, x, y)
}

/// Signed sum over compatible pairs with edge values in `0..=y-1`, each
/// pair weighted by the parity of its nonzero-valued edges; equals the
/// partition function at `(x, -y)`. Needs `y >= 1`.
pub fn compatible_pair_signed_sum(g: &SimpleGraph, x: u64, y: u64) -> BigRational {
    assert!(y >= 1, "signed pair sums need y >= 1");
    pair_signed_range(g, x, y - 1)
}

/// Proper coloring count: compatible pairs with no edge values at all.
pub fn proper_coloring_count(g: &SimpleGraph, x: u64) -> BigRational {
    pair_count_range(g, x, 0)
}

/// Selects which partition-function value the orientation-coloring sum
/// reproduces: `(-x, y)` for `NonNegative`, `(-x, -y)` for `Negative`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeSignVariant {
    NonNegative,
    Negative,
}

fn opc_sum_range(g: &SimpleGraph, x: u64, range: u64, signed: bool) -> Result<BigRational> {
    let mut total = BigRational::zero();
    for h in crate::enumerate::totally_acyclic_partial_orientations(g)? {
        let unoriented = h.gr0();
        let sign = if unoriented.cc() % 2 == 0 { q(1) } else { q(-1) };
        let inner = if signed {
            pair_signed_range(&unoriented, x, range)
        } else {
            pair_count_range(&unoriented, x, range)
        };
        total += sign * inner;
    }
    Ok(total)
}

/// Signed sum over triples of a totally acyclic partial orientation and a
/// compatible pair on its unoriented part, each triple weighted by the
/// component-count parity of that part. The `NonNegative` variant uses
/// edge values `0..=y+1` and equals the partition function at `(-x, y)`;
/// the `Negative` variant uses `0..=y-1`, additionally weights by the
/// nonzero-edge parity, and equals the value at `(-x, -y)` for `y >= 1`.
pub fn opc_signed_sum(
    g: &SimpleGraph,
    x: u64,
    y: u64,
    variant: EdgeSignVariant,
) -> Result<BigRational> {
    match variant {
        EdgeSignVariant::NonNegative => opc_sum_range(g, x, y + 1, false),
        EdgeSignVariant::Negative => {
            if y < 1 {
                return Err(Error::Unsupported(
                    "negative-variant orientation sums need y >= 1".into(),
                ));
            }
            opc_sum_range(g, x, y - 1, true)
        }
    }
}

/// Which sign pattern of Tutte arguments a combinatorial certificate
/// covers; the stored values are the magnitudes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quadrant {
    PosPos,
    NegNeg,
    NegPos,
    PosNeg,
}

/// Evaluates the Tutte polynomial at signed arguments `(±x, ±y)` and the
/// matching coloring certificate, returning both so callers can compare.
///
/// Domains: a positive argument must be at least 2 because the
/// certificates divide by `x - 1` or `y - 1`; out-of-domain requests are
/// errors.
pub fn tutte_negative_check(
    g: &SimpleGraph,
    x: u64,
    y: u64,
    quadrant: Quadrant,
) -> Result<(BigRational, BigRational)> {
    let cc = g.cc();
    let n = g.n();
    let t = tutte_polynomial(g);
    let domain = |ok: bool, what: &str| {
        if ok {
            Ok(())
        } else {
            Err(Error::Unsupported(format!(
                "quadrant {quadrant:?} needs {what}, got x={x}, y={y}"
            )))
        }
    };
    let parity_sign = |k: usize| if k % 2 == 0 { q(1) } else { q(-1) };
    match quadrant {
        Quadrant::PosPos => {
            domain(x >= 2 && y >= 2, "x >= 2 and y >= 2")?;
            let lhs = t.eval(&q(x as i64), &q(y as i64));
            let pairs = pair_count_range(g, (x - 1) * (y - 1), y);
            let scale = qpow(&q(x as i64 - 1), cc) * qpow(&q(y as i64 - 1), n);
            Ok((lhs, pairs / scale))
        }
        Quadrant::NegNeg => {
            let lhs = t.eval(&q(-(x as i64)), &q(-(y as i64)));
            let pairs = pair_signed_range(g, (x + 1) * (y + 1), y);
            let scale = qpow(&q(x as i64 + 1), cc) * qpow(&q(y as i64 + 1), n);
            Ok((lhs, parity_sign(cc + n) * pairs / scale))
        }
        Quadrant::NegPos => {
            domain(y >= 2, "y >= 2")?;
            let lhs = t.eval(&q(-(x as i64)), &q(y as i64));
            let triples = opc_sum_range(g, (x + 1) * (y - 1), y, false)?;
            let scale = qpow(&q(x as i64 + 1), cc) * qpow(&q(y as i64 - 1), n);
            Ok((lhs, parity_sign(cc) * triples / scale))
        }
        Quadrant::PosNeg => {
            domain(x >= 2, "x >= 2")?;
            let lhs = t.eval(&q(x as i64), &q(-(y as i64)));
            let triples = opc_sum_range(g, (x - 1) * (y + 1), y, true)?;
            let scale = qpow(&q(x as i64 - 1), cc) * qpow(&q(y as i64 + 1), n);
            Ok((lhs, parity_sign(n) * triples / scale))
        }
    }
}
