//! `curv` — curvature reports for weighted graphs and 2-complexes.
//!
//! Reads a complex from a JSON file (see [`curv_cli::input`]) and prints a
//! JSON report (`--format table` for a human-readable one).  Exit codes:
//! 0 success, 1 a requested check or assertion failed, 2 unreadable input or
//! bad usage, 3 the input parsed but is not a valid weighted complex.

use std::collections::BTreeSet;
use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use curv::analysis::{check_diameter_bound, semigroup_contractivity_check};
use curv::analysis::{DiameterBound, SemigroupSamples};
use curv::cellcomplex::{attach_two_cells, CycleCriterion};
use curv::curvature::{
    check_condition_a, check_condition_b, forman_all, kantorovich_curvature, max_forman_edge,
    maxmin_forman, ollivier_edge, ollivier_oneform, penalty_transport_curvature,
};
use curv::{CellComplex, CurvatureValue, Cycle, Error, Mat, Rational, Scalar, WeightedGraph,
    Witness};

use curv_cli::input::{cycle_json, Input};

#[derive(Parser)]
#[command(
    name = "curv",
    version,
    about = "Curvature of weighted graphs and two-dimensional cell complexes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Exact rational arithmetic end to end (default: floating point with a
    /// small tolerance).
    #[arg(long, global = true)]
    exact: bool,
    /// Worker threads for per-edge computations; 0 means one per processor.
    /// The CURV_JOBS environment variable overrides this flag.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    /// Machine-readable JSON (schema 1).
    Json,
    /// Human-readable tables.
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Forman curvature of every cell of one dimension.
    Forman(FormanArgs),
    /// Ollivier curvature of one edge or of all edges.
    Ollivier(OllivierArgs),
    /// Best uniform curvature bound over 2-cell weights, with dual
    /// certificate.
    Maxmin(MaxminArgs),
    /// Verify curvature theorems on the input; exit 0 iff every requested
    /// check passes.
    Check(CheckArgs),
}

impl Command {
    fn input(&self) -> &PathBuf {
        match self {
            Command::Forman(a) => &a.input,
            Command::Ollivier(a) => &a.input,
            Command::Maxmin(a) => &a.input,
            Command::Check(a) => &a.input,
        }
    }
}

#[derive(Args)]
struct FormanArgs {
    /// Input complex (JSON file).
    input: PathBuf,
    /// Cell dimension: 0, 1, or 2.
    #[arg(long, default_value_t = 1)]
    dim: usize,
    /// Also report F_omega for the edge lengths given in the file.
    #[arg(long)]
    omega: bool,
}

#[derive(Args)]
#[command(group = ArgGroup::new("target").required(true))]
struct OllivierArgs {
    /// Input complex (JSON file).
    input: PathBuf,
    /// One edge, by endpoint ids.
    #[arg(long, num_args = 2, value_names = ["U", "V"], group = "target")]
    edge: Option<Vec<i64>>,
    /// Every edge of the graph.
    #[arg(long, group = "target")]
    all: bool,
    /// Formulation to solve.
    #[arg(long, value_enum, default_value_t = Method::Potential)]
    method: Method,
    /// Solve all four formulations and fail (exit 1) on disagreement.
    #[arg(long)]
    verify_all_methods: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Linear program over vertex potentials (the defining infimum).
    Potential,
    /// Linear program over one-forms, with a 2-cell attached for every
    /// shortcutting cycle.
    Oneform,
    /// Kantorovich transport between unit balls (unit edge lengths only).
    Kantorovich,
    /// Penalty transport on punctured neighborhoods (unit edge lengths
    /// only).
    Penalty,
}

impl Method {
    const ALL: [Method; 4] = [
        Method::Potential,
        Method::Oneform,
        Method::Kantorovich,
        Method::Penalty,
    ];

    fn name(self) -> &'static str {
        match self {
            Method::Potential => "potential",
            Method::Oneform => "oneform",
            Method::Kantorovich => "kantorovich",
            Method::Penalty => "penalty",
        }
    }
}

#[derive(Args)]
struct MaxminArgs {
    /// Input complex (JSON file); its own 2-cells are ignored, the
    /// optimization chooses weights on the candidate cycles.
    input: PathBuf,
    /// Candidates: every cycle with at most this many edges.
    #[arg(long, default_value_t = 5, conflicts_with = "shortcutting")]
    max_cycle_length: usize,
    /// Candidates: the union of shortcutting cycles over all edges.
    #[arg(long)]
    shortcutting: bool,
    /// Include the dual operator J and the zero cycle weights in the report.
    #[arg(long)]
    emit_witness: bool,
}

#[derive(Args)]
struct CheckArgs {
    /// Input complex (JSON file).
    input: PathBuf,
    /// Ollivier curvature equals max-over-weights Forman on every edge.
    #[arg(long)]
    coincidence: bool,
    /// diam ≤ 2·min(D_0, D_1)/R when the curvature bound R is positive.
    #[arg(long)]
    diameter: bool,
    /// Hodge semigroup contracts at rate R = min edge Forman curvature.
    #[arg(long)]
    semigroup: bool,
}

/// A failure after argument parsing: bad usage (exit 2) or an error from the
/// library (exit 2 for unreadable weights, 3 otherwise).
enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Domain(e)
    }
}

/// A finished report: one JSON document, one plain-text rendering, and
/// whether every assertion it made held.
struct Report {
    json: Value,
    table: String,
    pass: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let path = cli.command.input();
    let text = match std::fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return ExitCode::from(2);
        }
    };
    let parsed = match Input::parse(&text) {
        Ok(input) => input,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let outcome = init_jobs(cli.jobs).and_then(|()| {
        if cli.exact {
            run::<Rational>(&cli, &parsed)
        } else {
            run::<f64>(&cli, &parsed)
        }
    });
    match outcome {
        Ok(report) => {
            let rendered = match cli.format {
                Format::Json => {
                    let mut doc =
                        serde_json::to_string_pretty(&report.json).expect("report serializes");
                    doc.push('\n');
                    doc
                }
                Format::Table => report.table,
            };
            // A closed pipe (`curv ... | head`) is the reader's choice, not
            // an error worth a panic; anything else is.
            if let Err(e) = io::Write::write_all(&mut io::stdout(), rendered.as_bytes()) {
                if e.kind() != io::ErrorKind::BrokenPipe {
                    eprintln!("error: cannot write report: {e}");
                    return ExitCode::from(3);
                }
            }
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse(_) => ExitCode::from(2),
                _ => ExitCode::from(3),
            }
        }
    }
}

fn init_jobs(flag: usize) -> Result<(), Failure> {
    let jobs = match std::env::var("CURV_JOBS") {
        Ok(text) => text
            .trim()
            .parse::<usize>()
            .map_err(|_| Failure::Usage(format!("CURV_JOBS must be a number, got {text:?}")))?,
        Err(_) => flag,
    };
    if jobs > 0 {
        // Err only if a global pool already exists, which is equally fine.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    Ok(())
}

fn run<S: Scalar>(cli: &Cli, input: &Input) -> Result<Report, Failure> {
    match &cli.command {
        Command::Forman(args) => cmd_forman::<S>(input, args),
        Command::Ollivier(args) => cmd_ollivier::<S>(input, args),
        Command::Maxmin(args) => cmd_maxmin::<S>(input, args),
        Command::Check(args) => cmd_check::<S>(input, args),
    }
}

/// Edge lengths from the file, validated positive; all-unit lengths
/// normalize to `None` (the two notions coincide everywhere).
fn file_omega<S: Scalar>(input: &Input, g: &WeightedGraph<S>) -> Result<Option<Vec<S>>, Failure> {
    let Some(omega) = input.omega::<S>(g)? else {
        return Ok(None);
    };
    for (e, w) in omega.iter().enumerate() {
        if !w.is_positive() {
            let (u, v) = g.edge_ids(e);
            return Err(Failure::Domain(Error::NonPositiveWeight(format!(
                "omega on edge ({u},{v})"
            ))));
        }
    }
    if omega.iter().all(|w| *w == S::one()) {
        return Ok(None);
    }
    Ok(Some(omega))
}

fn values_agree<S: Scalar>(a: &CurvatureValue<S>, b: &CurvatureValue<S>) -> bool {
    match (a, b) {
        (CurvatureValue::Finite(x), CurvatureValue::Finite(y)) => x.approx_eq(y),
        (CurvatureValue::Infinite, CurvatureValue::Infinite) => true,
        _ => false,
    }
}

fn value_json<S: Scalar>(v: &CurvatureValue<S>) -> Value {
    match v {
        CurvatureValue::Finite(x) => x.to_json(),
        CurvatureValue::Infinite => Value::Null,
    }
}

fn json_matrix<S: Scalar>(m: &Mat<S>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array((0..m.cols()).map(|c| m[(r, c)].to_json()).collect()))
            .collect(),
    )
}

/// Left-aligned columns separated by two spaces, one trailing newline per
/// row.
fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let render = |cells: &[String]| -> String {
        let mut line = String::new();
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(&format!("{:<width$}", cell, width = widths[i]));
        }
        line.trim_end().to_string()
    };
    let headers: Vec<String> = headers.iter().map(|h| h.to_string()).collect();
    let mut out = render(&headers);
    out.push('\n');
    for row in rows {
        out.push_str(&render(row));
        out.push('\n');
    }
    out
}

/// `(json reference, display name)` of a cell, e.g. `[1,2]` / `(1,2)` for an
/// edge.
fn cell_ref<S: Scalar>(c: &CellComplex<S>, dim: usize, i: usize) -> (Value, String) {
    match dim {
        0 => {
            let id = c.vertex_ids()[i];
            (json!(id), id.to_string())
        }
        1 => {
            let (u, v) = c.skeleton().edge_ids(i);
            (json!([u, v]), format!("({u},{v})"))
        }
        _ => {
            let cycle = &c.two_cells()[i];
            (cycle_json(cycle), cycle.to_string())
        }
    }
}

fn cmd_forman<S: Scalar>(input: &Input, args: &FormanArgs) -> Result<Report, Failure> {
    if args.dim > 2 {
        return Err(Failure::Usage("--dim must be 0, 1, or 2".into()));
    }
    if args.omega && args.dim != 1 {
        return Err(Failure::Usage(
            "--omega applies to edge lengths; use --dim 1".into(),
        ));
    }
    let c: CellComplex<S> = input.complex()?;
    let f = forman_all(&c, args.dim, None);
    let f_omega = if args.omega {
        let omega = file_omega::<S>(input, c.skeleton())?;
        Some(forman_all(&c, args.dim, omega.as_deref()))
    } else {
        None
    };

    let mut cells = Vec::new();
    let mut rows = Vec::new();
    for i in 0..c.n_cells(args.dim) {
        let (cell, name) = cell_ref(&c, args.dim, i);
        let mut entry = json!({ "cell": cell, "f": f[i].to_json() });
        let mut row = vec![name, f[i].to_string()];
        if let Some(fo) = &f_omega {
            entry["f_omega"] = fo[i].to_json();
            row.push(fo[i].to_string());
        }
        cells.push(entry);
        rows.push(row);
    }
    let headers: &[&str] = if f_omega.is_some() {
        &["cell", "F", "F_omega"]
    } else {
        &["cell", "F"]
    };
    Ok(Report {
        json: json!({ "schema": 1, "command": "forman", "dim": args.dim, "cells": cells }),
        table: table(headers, &rows),
        pass: true,
    })
}

/// The input complex with an extra unit-weight 2-cell for every shortcutting
/// cycle of the given edges that is not already a 2-cell.  This satisfies the
/// hypothesis of the one-form program, whose value does not depend on 2-cell
/// weights, and the surplus cells leave its optimum unchanged (they can only
/// be assigned weights that keep Forman below the Ollivier value, which the
/// shortcutting cells already attain).
fn with_shortcutting_cells<S: Scalar>(
    c: &CellComplex<S>,
    edges: &[usize],
    omega: Option<&[S]>,
) -> Result<CellComplex<S>, Error> {
    let g = c.skeleton();
    let mut cells: Vec<(Cycle, S)> = c
        .two_cells()
        .iter()
        .enumerate()
        .map(|(z, cycle)| (cycle.clone(), c.weight(2, z).clone()))
        .collect();
    let mut present: BTreeSet<Cycle> = cells.iter().map(|(cycle, _)| cycle.clone()).collect();
    for &edge in edges {
        for cycle in g.enumerate_cycles(CycleCriterion::Shortcutting { edge, omega }) {
            if present.insert(cycle.clone()) {
                cells.push((cycle, S::one()));
            }
        }
    }
    attach_two_cells(g.clone(), &cells)
}

fn cmd_ollivier<S: Scalar>(input: &Input, args: &OllivierArgs) -> Result<Report, Failure> {
    let c: CellComplex<S> = input.complex()?;
    let g = c.skeleton();
    let omega = file_omega::<S>(input, g)?;
    let edges: Vec<usize> = if args.all {
        (0..g.n_edges()).collect()
    } else {
        let ids = args.edge.as_ref().expect("clap enforces a target");
        vec![g.edge_index_by_ids(ids[0], ids[1])?]
    };
    let methods: Vec<Method> = if args.verify_all_methods {
        Method::ALL.to_vec()
    } else {
        vec![args.method]
    };

    if omega.is_some() {
        if let Some(m) = methods
            .iter()
            .find(|m| matches!(m, Method::Kantorovich | Method::Penalty))
        {
            return Err(Failure::Usage(format!(
                "the {} formulation is defined for unit edge lengths, but the input sets omega",
                m.name()
            )));
        }
    }

    let oneform_complex = if methods.contains(&Method::Oneform) {
        Some(with_shortcutting_cells(&c, &edges, omega.as_deref())?)
    } else {
        None
    };

    let computed: Vec<Result<Vec<CurvatureValue<S>>, Error>> = edges
        .par_iter()
        .map(|&edge| {
            methods
                .iter()
                .map(|method| {
                    let cert = match method {
                        Method::Potential => ollivier_edge(&c, edge, omega.as_deref())?,
                        Method::Oneform => ollivier_oneform(
                            oneform_complex.as_ref().expect("built above"),
                            edge,
                            omega.as_deref(),
                        )?,
                        Method::Kantorovich => kantorovich_curvature(g, edge)?,
                        Method::Penalty => penalty_transport_curvature(g, edge)?,
                    };
                    Ok(cert.value)
                })
                .collect()
        })
        .collect();

    let mut entries = Vec::new();
    let mut rows = Vec::new();
    let mut overall = true;
    for (&edge, result) in edges.iter().zip(computed) {
        let values = result?;
        let agree = values.windows(2).all(|w| values_agree(&w[0], &w[1]));
        overall &= agree;
        let (u, v) = g.edge_ids(edge);
        let mut kappa = serde_json::Map::new();
        for (method, value) in methods.iter().zip(&values) {
            kappa.insert(method.name().to_string(), value_json(value));
        }
        entries.push(json!({ "edge": [u, v], "kappa": kappa, "agree": agree }));
        let mut row = vec![format!("({u},{v})")];
        row.extend(values.iter().map(|v| v.to_string()));
        if methods.len() > 1 {
            row.push(if agree { "yes" } else { "NO" }.to_string());
        }
        rows.push(row);
    }

    let mut headers = vec!["edge"];
    headers.extend(methods.iter().map(|m| m.name()));
    if methods.len() > 1 {
        headers.push("agree");
    }
    Ok(Report {
        json: json!({
            "schema": 1,
            "command": "ollivier",
            "methods": methods.iter().map(|m| m.name()).collect::<Vec<_>>(),
            "edges": entries,
            "agree": overall,
        }),
        table: table(&headers, &rows),
        pass: overall,
    })
}

fn cmd_maxmin<S: Scalar>(input: &Input, args: &MaxminArgs) -> Result<Report, Failure> {
    let c: CellComplex<S> = input.complex()?;
    let g = c.skeleton();
    if g.n_edges() == 0 {
        return Err(Failure::Domain(Error::InvalidComplex(
            "the graph has no edges".into(),
        )));
    }
    let omega = file_omega::<S>(input, g)?;
    let candidates: Vec<Cycle> = if args.shortcutting {
        let mut set = BTreeSet::new();
        for edge in 0..g.n_edges() {
            for cycle in g.enumerate_cycles(CycleCriterion::Shortcutting {
                edge,
                omega: omega.as_deref(),
            }) {
                set.insert(cycle);
            }
        }
        set.into_iter().collect()
    } else {
        g.enumerate_cycles(CycleCriterion::MaxLength(args.max_cycle_length))
    };

    let cert = maxmin_forman(g, &candidates, omega.as_deref())?;
    let CurvatureValue::Finite(r_star) = &cert.value else {
        return Err(Failure::Domain(Error::UnexpectedLpStatus(
            "unbounded max-min program",
        )));
    };
    let Witness::DualOperator { j, cycle_weights } = &cert.witness else {
        unreachable!("maxmin always carries a dual operator witness");
    };

    // Re-derive everything the certificate asserts: the dual value from J,
    // J's feasibility, and the Forman curvatures under the optimal weights.
    let down = CellComplex::from_graph(g.clone()).down_laplacian(1);
    let dual_value = down.mul(j).trace();
    let primal_dual_equal = dual_value.approx_eq(r_star);
    let dual_feasible = j.trace().approx_eq(&S::one())
        && check_condition_a(j, g.edge_weights(), omega.as_deref())
        && check_condition_b(j, g, &candidates)?;
    let optimal = attach_two_cells(g.clone(), cycle_weights)?;
    let f = forman_all(&optimal, 1, omega.as_deref());
    let min_f = f
        .iter()
        .cloned()
        .reduce(|a, b| if b < a { b } else { a })
        .expect("at least one edge");
    let min_matches = min_f.approx_eq(r_star);
    let pass = primal_dual_equal && dual_feasible && min_matches;

    let nonzero: Vec<Value> = cycle_weights
        .iter()
        .filter(|(_, w)| !w.is_zero())
        .map(|(cycle, w)| json!({ "cycle": cycle_json(cycle), "weight": w.to_json() }))
        .collect();
    let forman_entries: Vec<Value> = (0..g.n_edges())
        .map(|e| {
            let (u, v) = g.edge_ids(e);
            json!({ "edge": [u, v], "f": f[e].to_json() })
        })
        .collect();
    let mut report = json!({
        "schema": 1,
        "command": "maxmin",
        "candidates": candidates.len(),
        "r_star": r_star.to_json(),
        "dual_value": dual_value.to_json(),
        "primal_dual_equal": primal_dual_equal,
        "dual_feasible": dual_feasible,
        "min_forman": min_f.to_json(),
        "cycle_weights": nonzero,
        "forman": forman_entries,
    });
    if args.emit_witness {
        let all_weights: Vec<Value> = cycle_weights
            .iter()
            .map(|(cycle, w)| json!({ "cycle": cycle_json(cycle), "weight": w.to_json() }))
            .collect();
        report["witness"] = json!({ "j": json_matrix(j), "cycle_weights": all_weights });
    }

    let mut text = table(
        &["quantity", "value"],
        &[
            vec!["R*".into(), r_star.to_string()],
            vec!["dual value".into(), dual_value.to_string()],
            vec!["min Forman".into(), min_f.to_string()],
            vec!["candidates".into(), candidates.len().to_string()],
            vec!["dual feasible".into(), dual_feasible.to_string()],
        ],
    );
    text.push('\n');
    let weight_rows: Vec<Vec<String>> = cycle_weights
        .iter()
        .filter(|(_, w)| args.emit_witness || !w.is_zero())
        .map(|(cycle, w)| vec![cycle.to_string(), w.to_string()])
        .collect();
    text.push_str(&table(&["cycle", "weight"], &weight_rows));
    text.push('\n');
    let forman_rows: Vec<Vec<String>> = (0..g.n_edges())
        .map(|e| {
            let (u, v) = g.edge_ids(e);
            vec![format!("({u},{v})"), f[e].to_string()]
        })
        .collect();
    text.push_str(&table(&["edge", "F"], &forman_rows));
    if args.emit_witness {
        text.push('\n');
        text.push_str("J\n");
        for r in 0..j.rows() {
            let row: Vec<String> = (0..j.cols()).map(|c| j[(r, c)].to_string()).collect();
            text.push_str(&row.join("  "));
            text.push('\n');
        }
    }

    Ok(Report {
        json: report,
        table: text,
        pass,
    })
}

fn coincidence_check<S: Scalar>(
    c: &CellComplex<S>,
    omega: Option<&[S]>,
) -> Result<(bool, Value, String), Error> {
    let g = c.skeleton();
    // With unit lengths one candidate list serves every edge; general omega
    // needs the shortcutting cycles of each edge separately.
    let shared: Option<Vec<Cycle>> =
        (omega.is_none()).then(|| g.enumerate_cycles(CycleCriterion::MaxLength(5)));
    let per_edge: Vec<Result<(CurvatureValue<S>, CurvatureValue<S>), Error>> = (0..g.n_edges())
        .into_par_iter()
        .map(|edge| {
            let kappa = ollivier_edge(c, edge, omega)?.value;
            let owned;
            let candidates: &[Cycle] = match &shared {
                Some(cycles) => cycles,
                None => {
                    owned = g.enumerate_cycles(CycleCriterion::Shortcutting { edge, omega });
                    &owned
                }
            };
            let max_f = max_forman_edge(g, edge, candidates, omega)?.value;
            Ok((kappa, max_f))
        })
        .collect();

    let mut entries = Vec::new();
    let mut mismatches = 0usize;
    for (edge, result) in per_edge.into_iter().enumerate() {
        let (kappa, max_f) = result?;
        let equal = values_agree(&kappa, &max_f);
        mismatches += usize::from(!equal);
        let (u, v) = c.skeleton().edge_ids(edge);
        entries.push(json!({
            "edge": [u, v],
            "kappa": value_json(&kappa),
            "max_forman": value_json(&max_f),
            "equal": equal,
        }));
    }
    let pass = mismatches == 0;
    let brief = format!("{} edges, {mismatches} mismatches", entries.len());
    let value = json!({
        "name": "coincidence",
        "status": if pass { "pass" } else { "fail" },
        "edges": entries,
    });
    Ok((pass, value, brief))
}

fn diameter_check<S: Scalar>(c: &CellComplex<S>, omega: Option<&[S]>) -> (bool, Value, String) {
    match check_diameter_bound(c, omega) {
        DiameterBound::NotApplicable { reason } => {
            let brief = reason.clone();
            (
                true,
                json!({ "name": "diameter", "status": "not applicable", "reason": reason }),
                brief,
            )
        }
        DiameterBound::Checked {
            r,
            diam,
            bound,
            pass,
        } => {
            let brief = format!("r={r}, diam={diam}, bound={bound}");
            let value = json!({
                "name": "diameter",
                "status": if pass { "pass" } else { "fail" },
                "r": r.to_json(),
                "diam": diam.to_json(),
                "bound": bound.to_json(),
            });
            (pass, value, brief)
        }
    }
}

/// The semigroup check runs in floating point whatever the ambient scalar:
/// the matrix exponential is inherently approximate.
fn semigroup_check(input: &Input) -> Result<(bool, Value, String), Failure> {
    let c: CellComplex<f64> = input.complex()?;
    let g = c.skeleton();
    if g.n_edges() == 0 {
        return Ok((
            true,
            json!({
                "name": "semigroup",
                "status": "not applicable",
                "reason": "the complex has no edges",
            }),
            "the complex has no edges".into(),
        ));
    }
    let omega = file_omega::<f64>(input, g)?;
    let f = forman_all(&c, 1, omega.as_deref());
    let rate = f.iter().cloned().fold(f64::INFINITY, f64::min);
    let a = c.hodge_matrix(1);
    let report = semigroup_contractivity_check(
        &a,
        g.edge_weights(),
        rate,
        omega.as_deref(),
        &SemigroupSamples::default(),
    )?;
    let pass = report.pass();
    let brief = format!(
        "rate {rate}, {} norm and {} derivative checks, {} failures",
        report.norm_checks,
        report.derivative_checks,
        report.failures.len()
    );
    let value = json!({
        "name": "semigroup",
        "status": if pass { "pass" } else { "fail" },
        "rate": rate,
        "norm_checks": report.norm_checks,
        "derivative_checks": report.derivative_checks,
        "failures": report.failures,
    });
    Ok((pass, value, brief))
}

fn cmd_check<S: Scalar>(input: &Input, args: &CheckArgs) -> Result<Report, Failure> {
    let all = !(args.coincidence || args.diameter || args.semigroup);
    let c: CellComplex<S> = input.complex()?;
    let omega = file_omega::<S>(input, c.skeleton())?;

    let mut checks = Vec::new();
    let mut rows = Vec::new();
    let mut pass = true;
    let mut push = |ok: bool, value: Value, brief: String| {
        let name = value["name"].as_str().expect("check is named").to_string();
        let status = value["status"].as_str().expect("check has status").to_string();
        rows.push(vec![name, status, brief]);
        checks.push(value);
        ok
    };

    if all || args.coincidence {
        let (ok, value, brief) = coincidence_check(&c, omega.as_deref())?;
        pass &= push(ok, value, brief);
    }
    if all || args.diameter {
        let (ok, value, brief) = diameter_check(&c, omega.as_deref());
        pass &= push(ok, value, brief);
    }
    if all || args.semigroup {
        let (ok, value, brief) = semigroup_check(input)?;
        pass &= push(ok, value, brief);
    }
    drop(push);

    Ok(Report {
        json: json!({ "schema": 1, "command": "check", "checks": checks, "pass": pass }),
        table: table(&["check", "status", "detail"], &rows),
        pass,
    })
}
