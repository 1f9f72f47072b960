//! Command-line frontend: polynomial invariants, coproducts, antipodes,
//! orientation counts, character evaluation, and the verification suites.
//!
//! Graph input is graph6 or digraph6, one graph per line, given inline, as a
//! file path, or as `-` for stdin. All output is deterministic for a fixed
//! input and flag set (verification timings excepted).

mod render;

use std::io::Read;
use std::path::Path;
use std::process::ExitCode;
use std::{fs, io};

use clap::{Parser, Subcommand, ValueEnum};
use hopfgraph::enumerate::{
    acyclic_orientations, antipode_orientation_formula, orientations, stanley_count,
    strongly_connected_orientations, totally_acyclic_count,
};
use hopfgraph::graph6::{parse_any, to_digraph6, to_graph6, ParsedGraph};
use hopfgraph::hopf::{
    antipode_recursive, coproduct_bipartition, coproduct_contraction, coproduct_ideal,
    CharacterSpec,
};
use hopfgraph::invariants::{
    chromatic_polynomial, fk_polynomial, rank_generating_polynomial, tutte_polynomial,
};
use hopfgraph::verify::{run_suite, suite_names, CheckStatus, SuiteParams};
use num::BigRational;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "hopfgraph",
    version,
    about = "Exact graph polynomials, graph coproducts, antipodes, and verification suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a polynomial invariant for each input graph
    Invariant {
        /// Polynomial to compute
        #[arg(long, value_enum)]
        which: InvariantKind,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Inline graph6, a file of graph6 lines, or - for stdin
        input: String,
    },
    /// Expand a coproduct of each input graph into tensor terms
    Coproduct {
        /// Bipartition coproduct (vertex subsets, or ideals for digraphs)
        /// or contraction coproduct (connected set partitions)
        #[arg(long, value_enum)]
        which: CoproductKind,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Inline graph6/digraph6, a file, or - for stdin
        input: String,
    },
    /// Expand the antipode of each input graph
    Antipode {
        /// Recursive convolution-inverse expansion, or the signed sum over
        /// totally acyclic partial orientations (undirected input only)
        #[arg(long, value_enum, default_value_t = Method::Recursive)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Inline graph6/digraph6, a file, or - for stdin
        input: String,
    },
    /// Count orientations of each input graph by family
    Orientations {
        #[arg(long, value_enum, default_value_t = OrientationKind::All)]
        which: OrientationKind,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Inline graph6, a file of graph6 lines, or - for stdin
        input: String,
    },
    /// Evaluate a named character on each input graph
    Character {
        /// Character name, e.g. alpha, mu(2), lambda(-1), chromatic-at(3),
        /// counting-at(2,1), eps-bipartition, eps-contraction, one
        #[arg(long)]
        name: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Inline graph6, a file of graph6 lines, or - for stdin
        input: String,
    },
    /// Run a verification suite over all isomorphism classes within bounds
    Verify {
        /// Suite name; `all` runs every suite
        #[arg(long, default_value = "all")]
        suite: String,
        /// Largest vertex count to enumerate (1 to 7)
        #[arg(long, default_value_t = 5)]
        max_vertices: usize,
        /// Skip graphs with more edges than this
        #[arg(long, default_value_t = 15)]
        max_edges: usize,
        /// Worker threads for the sweep (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum InvariantKind {
    Chromatic,
    Tutte,
    Fk,
    RankGen,
}

impl InvariantKind {
    fn name(self) -> &'static str {
        match self {
            InvariantKind::Chromatic => "chromatic",
            InvariantKind::Tutte => "tutte",
            InvariantKind::Fk => "fk",
            InvariantKind::RankGen => "rank-gen",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CoproductKind {
    Bipartition,
    Contraction,
}

impl CoproductKind {
    fn name(self) -> &'static str {
        match self {
            CoproductKind::Bipartition => "bipartition",
            CoproductKind::Contraction => "contraction",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Recursive,
    Orientations,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Recursive => "recursive",
            Method::Orientations => "orientations",
        }
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum OrientationKind {
    /// Every family below
    All,
    /// Every orientation of every edge
    Total,
    Acyclic,
    Strong,
    PartialAcyclic,
    Stanley,
}

/// Usage and parse problems exit with 2, everything else that fails with 1.
enum Failure {
    Usage(String),
    Check(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: Command) -> Result<(), Failure> {
    match command {
        Command::Invariant { which, format, input } => cmd_invariant(which, format, &input),
        Command::Coproduct { which, format, input } => cmd_coproduct(which, format, &input),
        Command::Antipode { method, format, input } => cmd_antipode(method, format, &input),
        Command::Orientations { which, format, input } => cmd_orientations(which, format, &input),
        Command::Character { name, format, input } => cmd_character(&name, format, &input),
        Command::Verify { suite, max_vertices, max_edges, jobs, format } => {
            cmd_verify(&suite, max_vertices, max_edges, jobs, format)
        }
    }
}

fn read_source(input: &str) -> Result<String, Failure> {
    if input == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        Ok(buf)
    } else if Path::new(input).is_file() {
        fs::read_to_string(input).map_err(|e| Failure::Usage(format!("{input}: {e}")))
    } else {
        Ok(input.to_string())
    }
}

/// Non-empty input lines parsed as graph6/digraph6, with 1-based line numbers
/// for error reporting.
fn parse_lines(source: &str) -> Result<Vec<(usize, String, ParsedGraph)>, Failure> {
    let mut out = Vec::new();
    for (idx, raw) in source.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let parsed = parse_any(line)
            .map_err(|e| Failure::Usage(format!("line {}: {e}", idx + 1)))?;
        out.push((idx + 1, line.to_string(), parsed));
    }
    Ok(out)
}

fn require_simple<'a>(
    line_no: usize,
    parsed: &'a ParsedGraph,
    context: &str,
) -> Result<&'a hopfgraph::SimpleGraph, Failure> {
    match parsed {
        ParsedGraph::Simple(g) => Ok(g),
        ParsedGraph::Oriented(_) => Err(Failure::Usage(format!(
            "line {line_no}: {context} expects an undirected graph6 line"
        ))),
    }
}

fn cmd_invariant(which: InvariantKind, format: Format, input: &str) -> Result<(), Failure> {
    let mut emitted_header = false;
    for (line_no, raw, parsed) in parse_lines(&read_source(input)?)? {
        let g = require_simple(line_no, &parsed, which.name())?;
        let terms = match which {
            InvariantKind::Chromatic => render::uni_terms(&chromatic_polynomial(g)),
            InvariantKind::Tutte => render::bi_terms(&tutte_polynomial(g)),
            InvariantKind::Fk => render::bi_terms(&fk_polynomial(g)),
            InvariantKind::RankGen => render::bi_terms(&rank_generating_polynomial(g)),
        };
        match format {
            Format::Text => {
                println!("{raw}\t{}\t{}", which.name(), render::pretty_poly(&terms));
            }
            Format::Json => {
                let rows: Vec<_> = terms
                    .iter()
                    .map(|(dx, dy, c)| json!({"dx": dx, "dy": dy, "coeff": c.to_string()}))
                    .collect();
                println!(
                    "{}",
                    json!({"graph": raw, "invariant": which.name(), "terms": rows})
                );
            }
            Format::Csv => {
                if !emitted_header {
                    println!("graph,invariant,dx,dy,coeff");
                    emitted_header = true;
                }
                for (dx, dy, c) in &terms {
                    println!("{raw},{},{dx},{dy},{}", which.name(), render::csv_field(&c.to_string()));
                }
            }
        }
    }
    Ok(())
}

/// Tensor terms of either coproduct, rendered flavor-appropriately.
fn coproduct_rows(which: CoproductKind, parsed: &ParsedGraph) -> Vec<(String, String, String, BigRational)> {
    match parsed {
        ParsedGraph::Simple(g) => {
            let sum = match which {
                CoproductKind::Bipartition => coproduct_bipartition(g),
                CoproductKind::Contraction => coproduct_contraction(g),
            };
            sum.terms()
                .map(|(l, r, c)| {
                    (
                        to_graph6(l),
                        to_graph6(r),
                        format!("{} (x) {}", render::describe_simple(l), render::describe_simple(r)),
                        c.clone(),
                    )
                })
                .collect()
        }
        ParsedGraph::Oriented(g) => {
            let sum = match which {
                CoproductKind::Bipartition => coproduct_ideal(g),
                CoproductKind::Contraction => coproduct_contraction(g),
            };
            sum.terms()
                .map(|(l, r, c)| {
                    (
                        to_digraph6(l),
                        to_digraph6(r),
                        format!("{} (x) {}", render::describe_oriented(l), render::describe_oriented(r)),
                        c.clone(),
                    )
                })
                .collect()
        }
    }
}

fn cmd_coproduct(which: CoproductKind, format: Format, input: &str) -> Result<(), Failure> {
    let mut emitted_header = false;
    for (_line_no, raw, parsed) in parse_lines(&read_source(input)?)? {
        let rows = coproduct_rows(which, &parsed);
        match format {
            Format::Text => {
                println!("{raw} {}: {} terms", which.name(), rows.len());
                for (left, right, description, c) in &rows {
                    println!("  {c}\t{left} (x) {right}\t{description}");
                }
            }
            Format::Json => {
                let terms: Vec<_> = rows
                    .iter()
                    .map(|(l, r, _, c)| json!({"left": l, "right": r, "coeff": c.to_string()}))
                    .collect();
                println!(
                    "{}",
                    json!({"graph": raw, "coproduct": which.name(), "terms": terms})
                );
            }
            Format::Csv => {
                if !emitted_header {
                    println!("graph,coproduct,left,right,coeff");
                    emitted_header = true;
                }
                for (left, right, _, c) in &rows {
                    println!("{raw},{},{left},{right},{}", which.name(), render::csv_field(&c.to_string()));
                }
            }
        }
    }
    Ok(())
}

fn antipode_rows(
    line_no: usize,
    method: Method,
    parsed: &ParsedGraph,
) -> Result<Vec<(String, BigRational)>, Failure> {
    match (parsed, method) {
        (ParsedGraph::Simple(g), Method::Recursive) => Ok(antipode_recursive(g)
            .terms()
            .map(|(t, c)| (to_graph6(t), c.clone()))
            .collect()),
        (ParsedGraph::Simple(g), Method::Orientations) => {
            let sum = antipode_orientation_formula(g)
                .map_err(|e| Failure::Check(format!("line {line_no}: {e}")))?;
            Ok(sum.terms().map(|(t, c)| (to_graph6(t), c.clone())).collect())
        }
        (ParsedGraph::Oriented(g), Method::Recursive) => Ok(antipode_recursive(g)
            .terms()
            .map(|(t, c)| (to_digraph6(t), c.clone()))
            .collect()),
        (ParsedGraph::Oriented(_), Method::Orientations) => Err(Failure::Usage(format!(
            "line {line_no}: the orientations method expects an undirected graph6 line"
        ))),
    }
}

fn cmd_antipode(method: Method, format: Format, input: &str) -> Result<(), Failure> {
    let mut emitted_header = false;
    for (line_no, raw, parsed) in parse_lines(&read_source(input)?)? {
        let rows = antipode_rows(line_no, method, &parsed)?;
        match format {
            Format::Text => {
                println!("{raw}\t{}\t{}", method.name(), render::pretty_sum(&rows));
            }
            Format::Json => {
                let terms: Vec<_> = rows
                    .iter()
                    .map(|(t, c)| json!({"term": t, "coeff": c.to_string()}))
                    .collect();
                println!(
                    "{}",
                    json!({"graph": raw, "method": method.name(), "terms": terms})
                );
            }
            Format::Csv => {
                if !emitted_header {
                    println!("graph,method,term,coeff");
                    emitted_header = true;
                }
                for (t, c) in &rows {
                    println!("{raw},{},{t},{}", method.name(), render::csv_field(&c.to_string()));
                }
            }
        }
    }
    Ok(())
}

fn orientation_counts(
    line_no: usize,
    which: OrientationKind,
    g: &hopfgraph::SimpleGraph,
) -> Result<Vec<(&'static str, u64)>, Failure> {
    let selected = |kind| which == OrientationKind::All || which == kind;
    let mut rows = Vec::new();
    if selected(OrientationKind::Total) {
        rows.push(("total", orientations(g).len() as u64));
    }
    if selected(OrientationKind::Acyclic) {
        rows.push(("acyclic", acyclic_orientations(g).len() as u64));
    }
    if selected(OrientationKind::Strong) {
        rows.push(("strong", strongly_connected_orientations(g).len() as u64));
    }
    if selected(OrientationKind::PartialAcyclic) {
        let count = totally_acyclic_count(g)
            .map_err(|e| Failure::Check(format!("line {line_no}: {e}")))?;
        rows.push(("partial-acyclic", count));
    }
    if selected(OrientationKind::Stanley) {
        rows.push(("stanley", stanley_count(g)));
    }
    Ok(rows)
}

fn cmd_orientations(which: OrientationKind, format: Format, input: &str) -> Result<(), Failure> {
    let mut emitted_header = false;
    for (line_no, raw, parsed) in parse_lines(&read_source(input)?)? {
        let g = require_simple(line_no, &parsed, "orientations")?;
        let rows = orientation_counts(line_no, which, g)?;
        match format {
            Format::Text => {
                for (kind, count) in &rows {
                    println!("{raw}\t{kind}\t{count}");
                }
            }
            Format::Json => {
                let counts: serde_json::Map<String, serde_json::Value> = rows
                    .iter()
                    .map(|(kind, count)| (kind.to_string(), json!(count)))
                    .collect();
                println!("{}", json!({"graph": raw, "counts": counts}));
            }
            Format::Csv => {
                if !emitted_header {
                    println!("graph,kind,count");
                    emitted_header = true;
                }
                for (kind, count) in &rows {
                    println!("{raw},{kind},{count}");
                }
            }
        }
    }
    Ok(())
}

fn cmd_character(name: &str, format: Format, input: &str) -> Result<(), Failure> {
    let spec = CharacterSpec::parse(name).map_err(|e| {
        Failure::Usage(format!(
            "{e}; builtins: {}",
            CharacterSpec::builtin_names().join(", ")
        ))
    })?;
    let character = spec.build();
    let mut emitted_header = false;
    for (line_no, raw, parsed) in parse_lines(&read_source(input)?)? {
        let g = require_simple(line_no, &parsed, "character evaluation")?;
        let value = character.eval(g);
        match format {
            Format::Text => println!("{raw}\t{name}\t{value}"),
            Format::Json => println!(
                "{}",
                json!({"graph": raw, "character": name, "value": value.to_string()})
            ),
            Format::Csv => {
                if !emitted_header {
                    println!("graph,character,value");
                    emitted_header = true;
                }
                println!(
                    "{raw},{},{}",
                    render::csv_field(name),
                    render::csv_field(&value.to_string())
                );
            }
        }
    }
    Ok(())
}

fn cmd_verify(
    suite: &str,
    max_vertices: usize,
    max_edges: usize,
    jobs: Option<usize>,
    format: Format,
) -> Result<(), Failure> {
    if !(1..=7).contains(&max_vertices) {
        return Err(Failure::Usage("--max-vertices must be between 1 and 7".to_string()));
    }
    if let Some(threads) = jobs {
        if threads == 0 {
            return Err(Failure::Usage("--jobs must be positive".to_string()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Failure::Check(format!("thread pool: {e}")))?;
    }
    let params = SuiteParams { max_vertices, max_edges };
    let report = run_suite(suite, &params).map_err(|e| {
        Failure::Usage(format!("{e}; suites: {}", suite_names().join(", ")))
    })?;
    match format {
        Format::Text => {
            for check in &report.checks {
                let status = match check.status {
                    CheckStatus::Pass => "PASS",
                    CheckStatus::Fail => "FAIL",
                    CheckStatus::Skipped => "SKIP",
                };
                println!("{status} {} ({} ms) {}", check.name, check.millis, check.detail);
                if let Some(cx) = &check.counterexample {
                    println!("  counterexample: {cx}");
                }
            }
            println!(
                "suite {}: {} ({} checks, {} ms)",
                report.suite,
                if report.passed { "PASS" } else { "FAIL" },
                report.checks.len(),
                report.total_millis
            );
        }
        Format::Json => {
            let rendered = serde_json::to_string_pretty(&report)
                .map_err(|e| Failure::Check(format!("serialize report: {e}")))?;
            println!("{rendered}");
        }
        Format::Csv => {
            println!("name,status,millis,detail,counterexample");
            for check in &report.checks {
                let status = match check.status {
                    CheckStatus::Pass => "pass",
                    CheckStatus::Fail => "fail",
                    CheckStatus::Skipped => "skipped",
                };
                println!(
                    "{},{},{},{},{}",
                    render::csv_field(&check.name),
                    status,
                    check.millis,
                    render::csv_field(&check.detail),
                    render::csv_field(check.counterexample.as_deref().unwrap_or(""))
                );
            }
        }
    }
    if report.passed {
        Ok(())
    } else {
        Err(Failure::Check(format!("suite {suite} failed")))
    }
}
