//! Command-line front door for the dismantling engine.
//!
//! Exit codes: 0 decided / valid, 1 negative decision or invalid
//! certificate, 2 indeterminate (budget exhausted), 3 usage error,
//! 4 input/output error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use dismantle::cert::{verify_move_sequence, Certificate};
use dismantle::cliques;
use dismantle::engine::{
    is_k_dismantlable, is_non_evasive, k_dismantlable_vertices, min_dismantling_index, stiff_core,
    ws_dismantlable, KVertices, MinIndexValue, Status, StiffOrder,
};
use dismantle::game::evasiveness_game_depth;
use dismantle::generators::{self, parse_family};
use dismantle::graph::Graph;
use dismantle::suite::{run_suite, SuiteConfig};
use dismantle::transitivity;

const EXIT_NEGATIVE: u8 = 1;
const EXIT_INDETERMINATE: u8 = 2;
const EXIT_USAGE: u8 = 3;
const EXIT_IO: u8 = 4;

#[derive(Parser)]
#[command(
    name = "dismantle",
    version,
    about = "k-dismantlability decisions and certificates for finite simple graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Search-tree node budget.
    #[arg(long, default_value_t = 10_000_000)]
    budget: u64,
    /// Rayon worker threads (0 = library default).
    #[arg(long, default_value_t = 0)]
    threads: usize,
    /// Pin deterministic reporting (deterministic is also the default;
    /// the flag exists so scripts can say it explicitly).
    #[arg(long)]
    deterministic: bool,
    /// Emit machine-readable JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named family member and write it as an edge list.
    Gen {
        /// Family: complete | cycle | path | octahedron | cubion | parasol |
        /// parasol_plus | dunce_hat | bings_house | kneser | wheel |
        /// hypercube_clique
        #[arg(short, long)]
        family: String,
        #[arg(short, long)]
        n: Option<usize>,
        #[arg(short, long)]
        k: Option<usize>,
        /// Output file (stdout when omitted).
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Emit DOT instead of the native edge list.
        #[arg(long)]
        dot: bool,
    },
    /// Decide dismantlability questions about a graph.
    Decide {
        #[arg(short, long)]
        graph: PathBuf,
        /// Decide membership in D_k for this k (>= -1).
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
        /// Report the smallest k with the graph in D_k.
        #[arg(long)]
        min_k: bool,
        /// Decide non-evasiveness (membership in some D_k).
        #[arg(long)]
        non_evasive: bool,
        /// Decide ws-dismantlability (vertex and edge moves).
        #[arg(long)]
        ws: bool,
        /// List the k-dismantlable vertices instead of deciding membership.
        #[arg(long)]
        vertices: bool,
        /// Write the certificate of a positive answer to this file.
        #[arg(long)]
        cert_out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Replay a certificate against a graph.
    Certify {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        cert: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Greedily delete k-dismantlable vertices and report the stiff core.
    Stiff {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 0)]
        k: i64,
        /// Random deletion order with this seed (deterministic otherwise).
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        cert_out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Maximal cliques, clique number and an optional hitting clique.
    Cliques {
        #[arg(short, long)]
        graph: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Automorphism count, vertex-transitivity and ordered-clique
    /// transitivity up to --i.
    Aut {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 1)]
        i: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Optimal depth of the clique membership query game.
    Game {
        #[arg(short, long)]
        graph: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Run the built-in verification suite.
    Suite {
        /// Also run the long exhaustive rows.
        #[arg(long)]
        extended: bool,
        #[command(flatten)]
        common: Common,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // keep clap's help/version on stdout with success, errors on 3
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = e.print();
                    return ExitCode::SUCCESS;
                }
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_IO)
        }
    }
}

fn setup_threads(common: &Common) -> Result<(), String> {
    if common.budget == 0 {
        return Err("budget must be positive".to_string());
    }
    if common.threads > 0 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(common.threads)
            .build_global();
    }
    Ok(())
}

fn load_graph(path: &PathBuf) -> Result<Graph, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    generators::read_graph(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_out(path: &Option<PathBuf>, body: &str) -> Result<(), String> {
    match path {
        Some(p) => std::fs::write(p, body).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn status_code(status: Status) -> u8 {
    match status {
        Status::Yes => 0,
        Status::No => EXIT_NEGATIVE,
        Status::Indeterminate => EXIT_INDETERMINATE,
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Gen {
            family,
            n,
            k,
            out,
            dot,
        } => {
            let spec = parse_family(&family, n, k).map_err(|e| e.to_string())?;
            let g = generators::generate(&spec).map_err(|e| e.to_string())?;
            let body = if dot {
                generators::write_dot(&g)
            } else {
                generators::write_graph(&g)
            };
            write_out(&out, &body)?;
            Ok(0)
        }
        Command::Decide {
            graph,
            k,
            min_k,
            non_evasive,
            ws,
            vertices,
            cert_out,
            common,
        } => {
            setup_threads(&common).map_err(|e| e.to_string())?;
            let g = load_graph(&graph)?;
            let modes = usize::from(k.is_some())
                + usize::from(min_k)
                + usize::from(non_evasive)
                + usize::from(ws);
            if modes != 1 {
                eprintln!("choose exactly one of --k, --min-k, --non-evasive, --ws");
                return Ok(EXIT_USAGE);
            }
            if min_k {
                let mut r = min_dismantling_index(&g, common.budget).map_err(|e| e.to_string())?;
                if common.deterministic {
                    r.stats.elapsed_ms = 0;
                }
                if common.json {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&serde_json::json!({
                            "schema": "report_v1",
                            "question": "min_dismantling_index",
                            "value": r.value,
                            "stats": r.stats,
                            "budget": r.budget,
                        }))
                        .unwrap()
                    );
                } else {
                    match r.value {
                        MinIndexValue::Index(k) => println!("min dismantling index: {k}"),
                        MinIndexValue::NotInDInfinity => println!("not dismantlable at any level"),
                        MinIndexValue::Indeterminate => {
                            println!("indeterminate (budget exhausted)")
                        }
                    }
                }
                if let (Some(path), Some(cert)) = (&cert_out, &r.certificate) {
                    std::fs::write(path, cert.to_json()).map_err(|e| e.to_string())?;
                }
                return Ok(match r.value {
                    MinIndexValue::Index(_) => 0,
                    MinIndexValue::NotInDInfinity => EXIT_NEGATIVE,
                    MinIndexValue::Indeterminate => EXIT_INDETERMINATE,
                });
            }
            if vertices {
                let k = k.ok_or_else(|| "--vertices needs --k".to_string())?;
                let (vs, mut stats) =
                    k_dismantlable_vertices(&g, k, common.budget).map_err(|e| e.to_string())?;
                if common.deterministic {
                    stats.elapsed_ms = 0;
                }
                return Ok(match vs {
                    KVertices::Decided(list) => {
                        if common.json {
                            println!(
                                "{}",
                                serde_json::to_string_pretty(&serde_json::json!({
                                    "schema": "report_v1",
                                    "question": format!("d{k}_vertices"),
                                    "vertices": list,
                                    "stats": stats,
                                }))
                                .unwrap()
                            );
                        } else {
                            println!("{k}-dismantlable vertices: {list:?}");
                        }
                        0
                    }
                    KVertices::Indeterminate => {
                        println!("indeterminate (budget exhausted)");
                        EXIT_INDETERMINATE
                    }
                });
            }
            let (question, mut r) = if non_evasive {
                (
                    "non_evasive",
                    is_non_evasive(&g, common.budget).map_err(|e| e.to_string())?,
                )
            } else if ws {
                (
                    "ws_dismantlable",
                    ws_dismantlable(&g, common.budget).map_err(|e| e.to_string())?,
                )
            } else {
                let k = k.unwrap();
                if k < -1 {
                    eprintln!("k must be at least -1");
                    return Ok(EXIT_USAGE);
                }
                (
                    "k_dismantlable",
                    is_k_dismantlable(&g, k, common.budget).map_err(|e| e.to_string())?,
                )
            };
            if common.deterministic {
                r.stats.elapsed_ms = 0;
            }
            if common.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::json!({
                        "schema": "report_v1",
                        "question": question,
                        "k": k,
                        "status": r.status,
                        "certificate": r.certificate,
                        "stats": r.stats,
                        "budget": r.budget,
                    }))
                    .unwrap()
                );
            } else {
                println!(
                    "{question}: {:?} ({} nodes, {} memo hits, {} ms)",
                    r.status, r.stats.expanded, r.stats.memo_hits, r.stats.elapsed_ms
                );
            }
            if let (Some(path), Some(cert)) = (&cert_out, &r.certificate) {
                std::fs::write(path, cert.to_json()).map_err(|e| e.to_string())?;
            }
            Ok(status_code(r.status))
        }
        Command::Certify {
            graph,
            cert,
            common,
        } => {
            setup_threads(&common).map_err(|e| e.to_string())?;
            let g = load_graph(&graph)?;
            let text =
                std::fs::read_to_string(&cert).map_err(|e| format!("{}: {e}", cert.display()))?;
            let cert =
                Certificate::from_json(&text).map_err(|e| format!("bad certificate: {e}"))?;
            let report = verify_move_sequence(&g, &cert, common.budget);
            if common.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::json!({
                        "schema": "report_v1",
                        "question": "certify",
                        "report": report,
                    }))
                    .unwrap()
                );
            } else {
                println!("{:?}", report.outcome);
            }
            Ok(match report.outcome {
                dismantle::VerifyOutcome::Valid => 0,
                dismantle::VerifyOutcome::Indeterminate { .. } => EXIT_INDETERMINATE,
                _ => EXIT_NEGATIVE,
            })
        }
        Command::Stiff {
            graph,
            k,
            seed,
            cert_out,
            common,
        } => {
            setup_threads(&common).map_err(|e| e.to_string())?;
            let g = load_graph(&graph)?;
            let order = match seed {
                Some(s) => StiffOrder::Seeded(s),
                None => StiffOrder::Deterministic,
            };
            let (core, cert) = stiff_core(&g, k, order).map_err(|e| e.to_string())?;
            if common.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::json!({
                        "schema": "report_v1",
                        "question": "stiff_core",
                        "k": k,
                        "core": core,
                        "deleted": cert.moves.len(),
                    }))
                    .unwrap()
                );
            } else {
                println!("{k}-stiff core: {core:?} ({} deletions)", cert.moves.len());
            }
            if let Some(path) = &cert_out {
                std::fs::write(path, cert.to_json()).map_err(|e| e.to_string())?;
            }
            Ok(0)
        }
        Command::Cliques { graph, common } => {
            setup_threads(&common).map_err(|e| e.to_string())?;
            let g = load_graph(&graph)?;
            let report = cliques::clique_report(&g);
            if common.json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                println!("omega = {}", report.omega);
                println!("maximal cliques ({}):", report.maximal_cliques.len());
                for c in &report.maximal_cliques {
                    println!("  {c:?}");
                }
                match &report.star_cluster {
                    Some(a) => println!("hitting clique: {a:?}"),
                    None => println!("hitting clique: none"),
                }
            }
            Ok(0)
        }
        Command::Aut { graph, i, common } => {
            setup_threads(&common).map_err(|e| e.to_string())?;
            let g = load_graph(&graph)?;
            let aut = transitivity::automorphisms(&g).map_err(|e| e.to_string())?;
            let vt = transitivity::is_vertex_transitive(&g).map_err(|e| e.to_string())?;
            let ict =
                transitivity::is_i_complete_transitive(&g, i.max(1)).map_err(|e| e.to_string())?;
            if common.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::json!({
                        "schema": "report_v1",
                        "question": "automorphisms",
                        "order": aut.order(),
                        "vertex_transitive": vt,
                        "i": i.max(1),
                        "i_complete_transitive": ict,
                    }))
                    .unwrap()
                );
            } else {
                println!("|Aut| = {}", aut.order());
                println!("vertex-transitive: {vt}");
                println!("{}-complete-transitive: {ict}", i.max(1));
            }
            Ok(0)
        }
        Command::Game { graph, common } => {
            setup_threads(&common).map_err(|e| e.to_string())?;
            let g = load_graph(&graph)?;
            let depth = evasiveness_game_depth(&g).map_err(|e| e.to_string())?;
            let non_evasive = depth < g.n();
            if common.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::json!({
                        "schema": "report_v1",
                        "question": "game_depth",
                        "depth": depth,
                        "n": g.n(),
                        "non_evasive": non_evasive,
                    }))
                    .unwrap()
                );
            } else {
                println!(
                    "game depth {depth} of {} vertices; non-evasive: {non_evasive}",
                    g.n()
                );
            }
            Ok(if non_evasive { 0 } else { EXIT_NEGATIVE })
        }
        Command::Suite { extended, common } => {
            setup_threads(&common).map_err(|e| e.to_string())?;
            let mut rows = run_suite(SuiteConfig {
                budget: common.budget,
                extended,
            });
            if common.deterministic {
                for r in &mut rows {
                    r.millis = 0;
                }
            }
            let all_pass = rows.iter().all(|r| r.passed);
            if common.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::json!({
                        "schema": "suite_v1",
                        "rows": rows,
                        "passed": all_pass,
                    }))
                    .unwrap()
                );
            } else {
                for r in &rows {
                    println!(
                        "{:<28} {}  [{} ms]  {}",
                        r.name,
                        if r.passed { "pass" } else { "FAIL" },
                        r.millis,
                        r.detail
                    );
                }
            }
            Ok(if all_pass { 0 } else { EXIT_NEGATIVE })
        }
    }
}
