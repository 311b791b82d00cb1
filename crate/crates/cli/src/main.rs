//! Command-line front end: construct symmetric bases, run the certificate
//! suite for the cover family, and compute automorphism groups of graphs
//! supplied in graph6 or edge-list form.
//!
//! Exit codes: 0 success (including a NOT-EXISTS basis answer), 1 a
//! requested mathematical check failed, 2 usage or input errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cubecover::extraspecial::ExtraspecialGroup;
use cubecover::formats::{from_edge_list, from_graph6, to_graph6};
use cubecover::quadratic::{FormType, QuadraticForm};
use cubecover::symmetric_basis::{
    brute_force_symmetric_basis, construct_symmetric_basis, exists_symmetric_basis,
    is_symmetric_basis, non_existence_reason,
};
use cubecover::{
    automorphism_group, build_cayley, is_two_arc_transitive, is_vertex_transitive,
    verify_main_theorem_with, Error, Graph,
};

#[derive(Parser)]
#[command(name = "cubecover", version, disable_help_subcommand = true)]
#[command(about = "Symmetric bases, extraspecial Cayley covers of hypercubes, and their automorphisms")]
struct Cli {
    /// Output rendering
    #[arg(long, global = true, value_enum, default_value_t = Out::Table)]
    out: Out,
    /// Seed echoed into reports; all commands are deterministic
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for parallel searches (0 keeps the library default)
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Construct or search for a symmetric basis at rank r
    Basis {
        r: usize,
        #[arg(value_enum)]
        form_type: TypeArg,
        #[arg(long, value_enum, default_value_t = Method::Construct)]
        method: Method,
    },
    /// Run the certificate suite for the rank-r cover graph
    Verify {
        r: usize,
        /// Comma-separated selection of certificate groups
        #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
        checks: Vec<CheckSel>,
        /// Write the graph to this path in graph6 form
        #[arg(long, value_name = "PATH")]
        export_graph: Option<PathBuf>,
    },
    /// Automorphism group of a graph read from a file
    Aut {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Fmt::Graph6)]
        format: Fmt,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Out {
    Json,
    Table,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TypeArg {
    Hyperbolic,
    Elliptic,
}

impl TypeArg {
    fn form(self) -> FormType {
        match self {
            TypeArg::Hyperbolic => FormType::Hyperbolic,
            TypeArg::Elliptic => FormType::Elliptic,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Construct,
    Brute,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckSel {
    All,
    Cover,
    #[value(name = "2at")]
    TwoArc,
    Normal,
    Stab,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Fmt {
    Graph6,
    Edges,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if cli.threads > 0 {
        // A failure here means a pool already exists; the default is fine.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global();
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<bool, String> {
    match &cli.cmd {
        Cmd::Basis { r, form_type, method } => cmd_basis(cli, *r, form_type.form(), *method),
        Cmd::Verify { r, checks, export_graph } => {
            cmd_verify(cli, *r, checks, export_graph.as_deref())
        }
        Cmd::Aut { path, format } => cmd_aut(cli, path, *format),
    }
}

#[derive(Serialize)]
struct BasisReport {
    command: &'static str,
    r: usize,
    form_type: String,
    method: &'static str,
    seed: u64,
    dim: usize,
    exists: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    /// Basis vectors as hex words over the coordinate bits
    #[serde(skip_serializing_if = "Option::is_none")]
    vectors: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<bool>,
    elapsed_ms: u128,
}

fn cmd_basis(cli: &Cli, r: usize, t: FormType, method: Method) -> Result<bool, String> {
    let start = Instant::now();
    let method_name = match method {
        Method::Construct => "construct",
        Method::Brute => "brute",
    };
    let mut report = BasisReport {
        command: "basis",
        r,
        form_type: t.to_string(),
        method: method_name,
        seed: cli.seed,
        dim: 2 * r,
        exists: false,
        reason: None,
        vectors: None,
        verified: None,
        elapsed_ms: 0,
    };

    let found = match method {
        Method::Construct => {
            if exists_symmetric_basis(r, t) {
                let outcome = construct_symmetric_basis(r, t).map_err(|e| e.to_string())?;
                outcome.found().cloned()
            } else {
                None
            }
        }
        Method::Brute => {
            let form = QuadraticForm::standard_form(r, t).map_err(|e| e.to_string())?;
            let outcome = brute_force_symmetric_basis(&form).map_err(|e| e.to_string())?;
            outcome.found().cloned()
        }
    };

    match found {
        Some(basis) => {
            report.exists = true;
            report.verified = Some(
                is_symmetric_basis(basis.form(), basis.vectors()).map_err(|e| e.to_string())?,
            );
            report.vectors = Some(basis.vectors().iter().map(|v| v.to_hex()).collect());
            report.elapsed_ms = start.elapsed().as_millis();
            match cli.out {
                Out::Json => print_json(&report)?,
                Out::Table => {
                    println!(
                        "basis r={r} type={t} method={method_name}: {} vectors in dimension {}",
                        basis.vectors().len(),
                        2 * r
                    );
                    for (i, v) in basis.vectors().iter().enumerate() {
                        let support: Vec<String> =
                            v.support().map(|b| b.to_string()).collect();
                        println!("  v{} = {:>6}  bits {{{}}}", i + 1, v.to_hex(), support.join(", "));
                    }
                    println!("verified: {}", report.verified.unwrap());
                }
            }
        }
        None => {
            report.reason = Some(non_existence_reason(r, t));
            report.elapsed_ms = start.elapsed().as_millis();
            match cli.out {
                Out::Json => print_json(&report)?,
                Out::Table => {
                    println!(
                        "basis r={r} type={t} method={method_name}: NOT-EXISTS ({})",
                        report.reason.as_deref().unwrap()
                    );
                }
            }
        }
    }
    Ok(true)
}

#[derive(Serialize)]
struct CheckRow {
    name: String,
    passed: bool,
    detail: String,
    millis: u128,
}

#[derive(Serialize)]
struct VerifyReport {
    command: &'static str,
    r: usize,
    vertices: usize,
    seed: u64,
    requested: Vec<String>,
    full_group_computed: bool,
    checks: Vec<CheckRow>,
    /// Order predicted by the semidirect pattern 2^(2r+1) * (2r)!
    pattern_order: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    aut_order: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    exported: Option<String>,
    all_requested_passed: bool,
    elapsed_ms: u128,
}

fn selection_names(sel: &[CheckSel]) -> Option<Vec<&'static str>> {
    if sel.contains(&CheckSel::All) {
        return None;
    }
    let mut names = Vec::new();
    for s in sel {
        let add: &[&'static str] = match s {
            CheckSel::All => unreachable!(),
            CheckSel::Cover => &["shape", "cover"],
            CheckSel::TwoArc => &["two-arc-transitive"],
            CheckSel::Normal => &["normal-cayley"],
            CheckSel::Stab => &["local-triviality"],
        };
        for name in add {
            if !names.contains(name) {
                names.push(name);
            }
        }
    }
    Some(names)
}

fn cmd_verify(
    cli: &Cli,
    r: usize,
    sel: &[CheckSel],
    export: Option<&std::path::Path>,
) -> Result<bool, String> {
    if !(1..=4).contains(&r) {
        return Err(format!("verify expects a rank between 1 and 4, got {r}"));
    }
    let start = Instant::now();
    // Ranks 1..3 always run the full group search; rank 4 stays on the
    // subgroup certificates unless the stabilizer check demands the group.
    let needs_full = r <= 3 || sel.contains(&CheckSel::Stab);
    let report = verify_main_theorem_with(r, needs_full).map_err(|e| e.to_string())?;

    let wanted = selection_names(sel);
    let rows: Vec<CheckRow> = report
        .checks
        .iter()
        .filter(|c| wanted.as_ref().is_none_or(|w| w.contains(&c.name)))
        .map(|c| CheckRow {
            name: c.name.to_string(),
            passed: c.passed,
            detail: c.detail.clone(),
            millis: c.millis,
        })
        .collect();
    if rows.is_empty() {
        return Err("the requested checks produced no certificate rows".into());
    }

    let exported = match export {
        Some(path) => {
            let group = ExtraspecialGroup::from_symmetric_generators(r).map_err(|e| e.to_string())?;
            let graph = build_cayley(&group, &group.generators()).map_err(|e| e.to_string())?;
            fs::write(path, to_graph6(&graph) + "\n")
                .map_err(|e| format!("writing {}: {e}", path.display()))?;
            Some(path.display().to_string())
        }
        None => None,
    };

    let all_passed = rows.iter().all(|row| row.passed);
    let out = VerifyReport {
        command: "verify",
        r,
        vertices: report.vertex_count,
        seed: cli.seed,
        requested: sel.iter().map(|s| sel_name(*s).to_string()).collect(),
        full_group_computed: report.full_aut_computed,
        checks: rows,
        pattern_order: report.expected_aut_order.to_string(),
        aut_order: report.aut_order.as_ref().map(|o| o.to_string()),
        exported,
        all_requested_passed: all_passed,
        elapsed_ms: start.elapsed().as_millis(),
    };

    match cli.out {
        Out::Json => print_json(&out)?,
        Out::Table => {
            println!(
                "verify r={r}: {} vertices, {}",
                out.vertices,
                if out.full_group_computed {
                    "full group computed"
                } else {
                    "subgroup certificates only"
                }
            );
            for row in &out.checks {
                println!(
                    "  [{}] {:<18} {:>5} ms  {}",
                    if row.passed { "pass" } else { "FAIL" },
                    row.name,
                    row.millis,
                    row.detail
                );
            }
            match &out.aut_order {
                Some(order) => println!("order: measured {order}, pattern {}", out.pattern_order),
                None => println!("order: pattern {} (full group not computed)", out.pattern_order),
            }
            if let Some(path) = &out.exported {
                println!("exported graph6 to {path}");
            }
            println!("result: {}", if all_passed { "pass" } else { "FAIL" });
        }
    }
    Ok(all_passed)
}

#[derive(Serialize)]
struct AutReport {
    command: &'static str,
    input: String,
    format: &'static str,
    seed: u64,
    vertices: usize,
    edges: usize,
    order: String,
    /// Generators in disjoint cycle notation on 0-based points
    generators: Vec<String>,
    vertex_transitive: bool,
    /// Absent when the graph is not connected and regular of valency >= 2
    two_arc_transitive: Option<bool>,
    elapsed_ms: u128,
}

fn sel_name(s: CheckSel) -> &'static str {
    match s {
        CheckSel::All => "all",
        CheckSel::Cover => "cover",
        CheckSel::TwoArc => "2at",
        CheckSel::Normal => "normal",
        CheckSel::Stab => "stab",
    }
}

fn cmd_aut(cli: &Cli, path: &std::path::Path, format: Fmt) -> Result<bool, String> {
    let start = Instant::now();
    let text = fs::read_to_string(path).map_err(|e| format!("reading {}: {e}", path.display()))?;
    let (graph, format_name): (Graph, _) = match format {
        Fmt::Graph6 => (from_graph6(&text).map_err(|e| e.to_string())?, "graph6"),
        Fmt::Edges => (from_edge_list(&text).map_err(|e| e.to_string())?, "edges"),
    };
    let aut = automorphism_group(&graph).map_err(|e| e.to_string())?;
    let two_arc = match is_two_arc_transitive(&graph, &aut) {
        Ok(answer) => Some(answer),
        Err(Error::GraphShape { .. }) => None,
        Err(e) => return Err(e.to_string()),
    };
    let report = AutReport {
        command: "aut",
        input: path.display().to_string(),
        format: format_name,
        seed: cli.seed,
        vertices: graph.n(),
        edges: graph.edge_count(),
        order: aut.order().to_string(),
        generators: aut.generators().iter().map(|g| g.to_string()).collect(),
        vertex_transitive: is_vertex_transitive(&graph, &aut),
        two_arc_transitive: two_arc,
        elapsed_ms: start.elapsed().as_millis(),
    };
    match cli.out {
        Out::Json => print_json(&report)?,
        Out::Table => {
            println!(
                "graph: {} vertices, {} edges ({} from {})",
                report.vertices, report.edges, report.format, report.input
            );
            println!("|Aut| = {}", report.order);
            println!("generators:");
            for g in &report.generators {
                println!("  {g}");
            }
            println!("vertex-transitive: {}", report.vertex_transitive);
            match report.two_arc_transitive {
                Some(answer) => println!("2-arc-transitive: {answer}"),
                None => println!("2-arc-transitive: not applicable"),
            }
        }
    }
    Ok(true)
}

fn print_json<T: Serialize>(value: &T) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    println!("{text}");
    Ok(())
}
