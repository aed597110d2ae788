use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sqfree_core::{
    basic_monomials, classify, construct_ideal, count_upto, degree_sequence, enumerate_corner_configs, extremal_betti,
    feasibility_bounds, graded_betti, lex_corner_ideal, minimal_generators, strongly_stable_closure, CornerReport,
    EnumerateOptions, FeasibilityReport, MonomialIdeal, MonomialSet, SquarefreeMonomial, DEFAULT_ENUMERATION_BOUND,
};

use crate::json::{self, SpecJson};
use crate::render::render_betti;
use crate::text::{emit_ideal, parse_ideal, parse_monomials, ParseError};

/// Environment variable raising the largest `n` accepted by `enumerate`.
pub const ENUMERATE_MAX_N_VAR: &str = "SQFREE_ENUMERATE_MAX_N";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Ascii,
    Json,
}

/// Betti numbers, corners and realizability for squarefree strongly stable
/// ideals.
///
/// Ideals are read as text: monomials such as `x1*x2` or `{1,2}`, separated
/// by commas or newlines, `#` comments, and an optional `n=<count>` line. An
/// INPUT argument is a file path, `-` for standard input, or the text itself.
#[derive(Debug, Parser)]
#[command(name = "sqfree", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Ascii, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Graded Betti numbers of a squarefree stable ideal.
    Betti { input: String },
    /// Corners (extremal Betti numbers) and the degree sequence.
    Corners { input: String },
    /// Position of a monomial inside A(k, l), the degree-l monomials with
    /// maximal variable x_{k+l}, in squarefree lex order.
    Count {
        monomial: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        /// Ambient number of variables; defaults to k + l.
        #[arg(long)]
        n: Option<usize>,
        /// Show the nested binomial decomposition.
        #[arg(long)]
        trace: bool,
    },
    /// Smallest squarefree strongly stable ideal with given corners and
    /// corner values.
    ///
    /// SPEC is JSON such as {"n": 11, "corners": [[8,3],[4,5]], "values": [7,5]},
    /// given as a path, `-` or inline. Exits with 1 when the data is not
    /// realizable. Over a field of characteristic zero, data realizable by
    /// any squarefree monomial ideal is realizable by a squarefree strongly
    /// stable one, so only the latter is searched.
    Construct { spec: String },
    /// Squarefree lex ideal of initial degree l1 with the maximal number of
    /// corners.
    Lex {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l1: usize,
    },
    /// Every corner configuration realized in n variables, with the smallest
    /// realizing ideal. Exhaustive; n is capped by SQFREE_ENUMERATE_MAX_N
    /// (default 5).
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Skip ideals with generators below this degree.
        #[arg(long, default_value_t = 1)]
        min_degree: usize,
    },
    /// Ideal generated by the strongly stable closures of the given monomials.
    Closure { monomials: String },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Core(#[from] sqfree_core::Error),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("invalid spec: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Infeasible(String),
}

impl CliError {
    /// 1 for unrealizable data, 2 for everything the user has to fix.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Infeasible(_) => 1,
            _ => 2,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn read_input(arg: &str) -> CliResult<String> {
    if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|source| CliError::Io { path: "standard input".into(), source })?;
        return Ok(s);
    }
    let path = Path::new(arg);
    if path.is_file() {
        return std::fs::read_to_string(path).map_err(|source| CliError::Io { path: arg.into(), source });
    }
    Ok(arg.to_string())
}

fn write_json(out: &mut dyn Write, value: &Value) -> CliResult<()> {
    let text = serde_json::to_string_pretty(value)?;
    writeln!(out, "{text}").map_err(|source| CliError::Io { path: "standard output".into(), source })
}

fn write_text(out: &mut dyn Write, text: &str) -> CliResult<()> {
    out.write_all(text.as_bytes()).map_err(|source| CliError::Io { path: "standard output".into(), source })
}

fn corners_text(report: &CornerReport) -> String {
    let mut s = String::new();
    if report.is_empty() {
        s.push_str("no corners\n");
    }
    for c in &report.corners {
        let _ = writeln!(s, "corner ({}, {}): beta_{{{},{}}} = {}", c.k, c.l, c.k, c.k + c.l, c.value);
    }
    s
}

fn ideal_block(ideal: &MonomialIdeal) -> CliResult<(String, Value)> {
    let table = graded_betti(ideal)?;
    let report = extremal_betti(ideal)?;
    let text = format!("{}\n{}\n{}", emit_ideal(ideal), render_betti(&table), corners_text(&report));
    let value = json!({
        "n": ideal.n(),
        "generators": json::generators(ideal),
        "betti": json::betti(&table),
        "corners": json::corners(&report),
    });
    Ok((text, value))
}

fn betti(input: &str) -> CliResult<(String, Value)> {
    let ideal = parse_ideal(&read_input(input)?)?;
    let table = graded_betti(&ideal)?;
    Ok((render_betti(&table), json!({ "n": ideal.n(), "betti": json::betti(&table) })))
}

fn corners(input: &str) -> CliResult<(String, Value)> {
    let ideal = parse_ideal(&read_input(input)?)?;
    let report = extremal_betti(&ideal)?;
    let seq = degree_sequence(&ideal)?;
    let deltas: Vec<String> = seq.deltas.iter().map(ToString::to_string).collect();
    let text = format!(
        "{}degree sequence: ({})\ndegree length: {}\n",
        corners_text(&report),
        deltas.join(", "),
        seq.degree_length
    );
    let mut value = json::corners(&report);
    value["n"] = json!(ideal.n());
    value["degree_sequence"] = json!(seq.deltas);
    value["generator_degrees"] = json!(seq.generator_degrees);
    Ok((text, value))
}

fn count(monomial: &str, k: usize, l: usize, n: Option<usize>, trace: bool) -> CliResult<(String, Value)> {
    let n = n.unwrap_or(k + l);
    if l == 0 || k + l > n {
        return Err(CliError::Usage(format!("need l >= 1 and k + l <= n, got k = {k}, l = {l}, n = {n}")));
    }
    let u = SquarefreeMonomial::parse(n, monomial)?;
    if u.degree() != l || u.max_index() != k + l {
        return Err(CliError::Usage(format!("{u} is not in A({k},{l}): it needs degree {l} and maximal variable x{}", k + l)));
    }
    let (position, decomposition) = count_upto(&u)?;
    let mut text = format!("position of {u} in A({k},{l}): {position}\n");
    if trace {
        for step in &decomposition.steps {
            let row: Vec<String> = step.terms.iter().map(ToString::to_string).collect();
            let kept: Vec<String> = step.selected_terms().iter().map(ToString::to_string).collect();
            let kept = if kept.is_empty() { "nothing".to_string() } else { kept.join(" + ") };
            let _ = writeln!(
                text,
                "level {}: {} = {}; keep {} = {}",
                step.level,
                step.identity,
                row.join(" + "),
                kept,
                step.contributed
            );
        }
        let _ = writeln!(text, "plus C(0,0) for {u}: {} binomials in total", decomposition.term_count);
    }
    let steps: Vec<Value> = decomposition
        .steps
        .iter()
        .map(|s| {
            json!({
                "level": s.level,
                "identity": s.identity.to_string(),
                "terms": s.terms.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "selected": s.selected,
                "contributed": json::big(&s.contributed),
            })
        })
        .collect();
    let value = json!({
        "monomial": u.to_string(),
        "k": k,
        "l": l,
        "position": json::big(&position),
        "term_count": decomposition.term_count,
        "steps": steps,
    });
    Ok((text, value))
}

fn report_text(report: &FeasibilityReport) -> String {
    let show = |x: Option<String>| x.unwrap_or_else(|| "-".into());
    let mut s = String::new();
    for (i, b) in report.per_corner.iter().enumerate() {
        let _ = writeln!(
            s,
            "corner {} ({}, {}), a = {}: v = {}, n = {}, head = {}, p = {}, admissible = {}",
            i + 1,
            b.k,
            b.l,
            b.value,
            show(b.v.map(|u| u.to_string())),
            show(b.upper.as_ref().map(ToString::to_string)),
            show(b.head.map(|u| u.to_string())),
            show(b.above.as_ref().map(ToString::to_string)),
            show(b.admissible.as_ref().map(ToString::to_string)),
        );
    }
    if let (Some(corner), Some(reason)) = (report.failing_corner, &report.reason) {
        let _ = writeln!(s, "infeasible at corner {corner}: {reason}");
    }
    s
}

fn construct(spec: &str, format: Format, out: &mut dyn Write) -> CliResult<()> {
    let parsed: SpecJson = serde_json::from_str(&read_input(spec)?)?;
    let spec = parsed.into_spec()?;
    let report = feasibility_bounds(&spec)?;
    if !report.feasible {
        match format {
            Format::Ascii => write_text(out, &report_text(&report))?,
            Format::Json => write_json(out, &json::feasibility(&report))?,
        }
        let corner = report.failing_corner.unwrap_or(0);
        return Err(CliError::Infeasible(format!(
            "no squarefree strongly stable ideal has these corners and values: corner {corner} fails ({})",
            report.reason.clone().unwrap_or_default()
        )));
    }
    let basics = basic_monomials(&spec)?;
    let ideal = construct_ideal(&spec)?;
    let (block, mut value) = ideal_block(&ideal)?;
    match format {
        Format::Ascii => {
            let mut text = report_text(&report);
            text.push_str("basic monomials:\n");
            for (i, corner) in basics.per_corner.iter().enumerate() {
                let list: Vec<String> = corner.iter().map(ToString::to_string).collect();
                let _ = writeln!(text, "  corner {}: {}", i + 1, list.join(", "));
            }
            text.push('\n');
            text.push_str(&block);
            write_text(out, &text)
        }
        Format::Json => {
            value["feasibility"] = json::feasibility(&report);
            value["basic_monomials"] = basics
                .per_corner
                .iter()
                .map(|c| c.iter().map(json::monomial).collect::<Vec<_>>())
                .collect::<Vec<_>>()
                .into();
            write_json(out, &value)
        }
    }
}

fn enumerate(n: usize, min_degree: usize) -> CliResult<(String, Value)> {
    let max_n = match std::env::var(ENUMERATE_MAX_N_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{ENUMERATE_MAX_N_VAR} must be a number, got `{v}`")))?,
        Err(_) => DEFAULT_ENUMERATION_BOUND,
    };
    if n > max_n {
        return Err(CliError::Usage(format!(
            "enumerate is exhaustive and capped at n = {max_n}; set {ENUMERATE_MAX_N_VAR} to go further (n = 6 takes seconds, n = 7 is impractical)"
        )));
    }
    let configs = enumerate_corner_configs(n, EnumerateOptions { min_initial_degree: min_degree, max_n })?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for c in &configs {
        let corners: Vec<String> = c.report.positions().iter().map(|(k, l)| format!("({k},{l})")).collect();
        let values: Vec<String> = c.report.values().iter().map(ToString::to_string).collect();
        let gens: Vec<String> = c.witness.generators().iter().map(ToString::to_string).collect();
        let _ = writeln!(
            text,
            "C = {{{}}}  a = ({})  I = ({})  realizers: {}",
            corners.join(", "),
            values.join(", "),
            gens.join(", "),
            c.realizers
        );
        let mut row = json::corners(&c.report);
        row["witness"] = json::generators(&c.witness);
        row["realizers"] = json!(c.realizers);
        rows.push(row);
    }
    let _ = writeln!(text, "{} configurations", configs.len());
    Ok((text, json!({ "n": n, "configurations": rows })))
}

fn closure(monomials: &str) -> CliResult<(String, Value)> {
    let list = parse_monomials(&read_input(monomials)?)?;
    let mut by_degree: BTreeMap<usize, Vec<SquarefreeMonomial>> = BTreeMap::new();
    for u in list.monomials {
        by_degree.entry(u.degree()).or_default().push(u);
    }
    let mut all = MonomialSet::new();
    for seeds in by_degree.values() {
        all.extend(strongly_stable_closure(seeds)?);
    }
    let ideal = minimal_generators(list.n, all)?;
    let class = classify(&ideal);
    let text = format!(
        "{}strongly stable: {}, lex: {}\n",
        emit_ideal(&ideal),
        class.is_strongly_stable,
        class.is_lex
    );
    let value = json!({
        "n": ideal.n(),
        "generators": json::generators(&ideal),
        "strongly_stable": class.is_strongly_stable,
        "lex": class.is_lex,
    });
    Ok((text, value))
}

/// Runs one command, writing results to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> CliResult<()> {
    let (text, value) = match &cli.command {
        Command::Betti { input } => betti(input)?,
        Command::Corners { input } => corners(input)?,
        Command::Count { monomial, k, l, n, trace } => count(monomial, *k, *l, *n, *trace)?,
        Command::Construct { spec } => return construct(spec, cli.format, out),
        Command::Lex { n, l1 } => ideal_block(&lex_corner_ideal(*n, *l1)?)?,
        Command::Enumerate { n, min_degree } => enumerate(*n, *min_degree)?,
        Command::Closure { monomials } => closure(monomials)?,
    };
    match cli.format {
        Format::Ascii => write_text(out, &text),
        Format::Json => write_json(out, &value),
    }
}
