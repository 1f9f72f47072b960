//! Deterministic text renderings: polynomials with sorted exponents, signed
//! sums of graphs, and minimally quoted CSV fields.

use hopfgraph::poly::{BiPoly, UniPoly};
use num::{BigRational, One, Signed, Zero};

/// Terms of a univariate polynomial as (dx, dy, coeff) rows with dy = 0,
/// ascending in dx.
pub fn uni_terms(p: &UniPoly) -> Vec<(usize, usize, BigRational)> {
    p.terms().map(|(dx, c)| (dx, 0, c.clone())).collect()
}

/// Terms of a bivariate polynomial as (dx, dy, coeff) rows, ascending in
/// (dx, dy).
pub fn bi_terms(p: &BiPoly) -> Vec<(usize, usize, BigRational)> {
    p.terms().map(|((dx, dy), c)| (dx, dy, c.clone())).collect()
}

fn monomial(dx: usize, dy: usize) -> String {
    let mut s = String::new();
    match dx {
        0 => {}
        1 => s.push('X'),
        _ => s.push_str(&format!("X^{dx}")),
    }
    if dy > 0 {
        if !s.is_empty() {
            s.push('*');
        }
        match dy {
            1 => s.push('Y'),
            _ => s.push_str(&format!("Y^{dy}")),
        }
    }
    s
}

/// Human-oriented polynomial string, highest powers first: `X^2 + X*Y - 3`.
pub fn pretty_poly(terms: &[(usize, usize, BigRational)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (dx, dy, c) in terms.iter().rev() {
        if c.is_zero() {
            continue;
        }
        let first = out.is_empty();
        if first {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let mono = monomial(*dx, *dy);
        let mag = c.abs();
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Signed combination of labeled terms: `A_ - 2*B?`. Labels are graph6
/// strings, whose alphabet avoids the `+ - *` separators.
pub fn pretty_sum(terms: &[(String, BigRational)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (label, c) in terms {
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let mag = c.abs();
        if mag.is_one() {
            out.push_str(label);
        } else {
            out.push_str(&format!("{mag}*{label}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Quote a CSV field only when it contains a comma, quote, or newline.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Compact structural description: vertex count plus edge or arc list.
pub fn describe_simple(g: &hopfgraph::SimpleGraph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    if edges.is_empty() {
        format!("n={}", g.n())
    } else {
        format!("n={} {}", g.n(), edges.join(" "))
    }
}

pub fn describe_oriented(g: &hopfgraph::OrientedGraph) -> String {
    let arcs: Vec<String> = g.arcs().iter().map(|(u, v)| format!("{u}>{v}")).collect();
    if arcs.is_empty() {
        format!("n={}", g.n())
    } else {
        format!("n={} {}", g.n(), arcs.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopfgraph::poly::q;

    #[test]
    fn polynomials_print_highest_first() {
        let mut p = BiPoly::zero();
        p.add_term(2, 0, q(1));
        p.add_term(1, 1, q(1));
        p.add_term(0, 0, q(-3));
        assert_eq!(pretty_poly(&bi_terms(&p)), "X^2 + X*Y - 3");
        assert_eq!(pretty_poly(&[]), "0");
    }

    #[test]
    fn sums_fold_unit_coefficients() {
        let terms = vec![("A_".to_string(), q(1)), ("B?".to_string(), q(-2))];
        assert_eq!(pretty_sum(&terms), "A_ - 2*B?");
    }

    #[test]
    fn csv_fields_escape_only_when_needed() {
        assert_eq!(csv_field("plain"), "plain");
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    }
}
