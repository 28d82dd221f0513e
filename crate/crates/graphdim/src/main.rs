use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use graphdim::cover;
use graphdim::dim;
use graphdim::ecc;
use graphdim::formats::{self, GraphFormat};
use graphdim::generators::{Family, GenSpec};
use graphdim::graph::Graph;
use graphdim::ratio::{format_decimal, format_exact};
use graphdim::report;
use graphdim::suite::{self, SuiteConfig};
use graphdim::GraphError;

// exit codes: 1 parse/input error, 2 usage (clap), 3 resource limit,
// 4 law violation
const EXIT_PARSE: u8 = 1;
const EXIT_RESOURCE: u8 = 3;
const EXIT_VIOLATION: u8 = 4;

#[derive(Parser)]
#[command(name = "graphdim", version, about = "Exact inductive graph dimension toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Graph file ("-" for stdin)
    file: String,
    /// Input format: edge-list or graph6
    #[arg(long, default_value = "edge-list")]
    format: GraphFormat,
}

#[derive(Subcommand)]
enum Command {
    /// Print the inductive dimension as an exact rational
    Dim {
        #[command(flatten)]
        input: InputArgs,
        /// Emit the full JSON analysis report
        #[arg(long)]
        json: bool,
    },
    /// Per-vertex dimensions plus uniformity and purity flags
    Spectrum {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
    },
    /// Maximal cliques and the clique numbers omega and gamma
    Cliques {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Minimum edge clique cover and theta_e
    Ecc {
        #[command(flatten)]
        input: InputArgs,
        /// Branch-and-bound node budget (also settable via GRAPHDIM_BUDGET)
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Exact-equality law checks; nonzero exit on any violation
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// join | union | theorem4 | ball | bounds | all
        #[arg(long, default_value = "all")]
        law: String,
    },
    /// Emit a generated graph
    Gen {
        /// complete | cycle | path | star_clique | inflated_cube |
        /// double_clique_matching | windmill | pure_glued | erdos_renyi
        #[arg(long)]
        family: Family,
        /// Family parameters, e.g. "k=4,n=12" or "n=8,p=1/2"
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Output format: edge-list, graph6, or dot
        #[arg(long, default_value = "edge-list")]
        format: String,
    },
    /// Run the full verification suite and print a JSON summary
    Suite {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 20240817)]
        seed: u64,
    },
}

fn exit_code_for(err: &GraphError) -> u8 {
    match err {
        GraphError::ResourceLimit { .. } => EXIT_RESOURCE,
        _ => EXIT_PARSE,
    }
}

fn read_graph(input: &InputArgs) -> Result<Graph, GraphError> {
    let text = if input.file == "-" {
        use std::io::Read;
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| GraphError::Parse {
                line: 0,
                message: e.to_string(),
            })?;
        buf
    } else {
        std::fs::read_to_string(&input.file).map_err(|e| GraphError::Parse {
            line: 0,
            message: format!("{}: {e}", input.file),
        })?
    };
    formats::parse_graph(&text, input.format)
}

fn node_budget(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("GRAPHDIM_BUDGET")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(ecc::DEFAULT_NODE_BUDGET)
}

fn run() -> Result<u8, GraphError> {
    match Cli::parse().command {
        Command::Dim { input, json } => {
            let g = read_graph(&input)?;
            if json {
                let r = report::analyze(&g, Some(input.file.clone()), node_budget(None))?;
                println!("{}", r.to_json());
            } else {
                println!("{}", format_exact(&dim::dim(&g)));
            }
            Ok(0)
        }
        Command::Spectrum { input, json } => {
            let g = read_graph(&input)?;
            let r = dim::dim_spectrum(&g);
            if json {
                let full = report::analyze(&g, Some(input.file.clone()), node_budget(None))?;
                println!("{}", full.to_json());
            } else {
                for (v, d) in r.vertex_dims.iter().enumerate() {
                    println!("{v}\t{}\t{}", format_exact(d), format_decimal(d));
                }
                println!("graph\t{}", format_exact(&r.graph_dim));
                println!("uniform\t{}", r.is_uniform);
                println!("pure\t{}", r.is_pure);
            }
            Ok(0)
        }
        Command::Cliques { input } => {
            let g = read_graph(&input)?;
            let cliques = graphdim::cliques::maximal_cliques(&g)?;
            for c in &cliques {
                let members: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                println!("{}", members.join(" "));
            }
            if !g.is_graph_empty() {
                println!("omega\t{}", graphdim::cliques::clique_number(&g)?);
                println!("gamma\t{}", graphdim::cliques::min_clique_number(&g)?);
            }
            Ok(0)
        }
        Command::Ecc { input, budget } => {
            let g = read_graph(&input)?;
            let cover = ecc::min_edge_clique_cover_with_budget(&g, node_budget(budget))?;
            for c in &cover.cliques {
                let members: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                println!("{}", members.join(" "));
            }
            println!("theta_e\t{}", cover.size());
            if cover.edgeless {
                println!("warning\tgraph has no edges; cover is empty");
            }
            Ok(0)
        }
        Command::Verify { input, law } => {
            let g = read_graph(&input)?;
            let violations = run_verify(&g, &law)?;
            if violations == 0 {
                Ok(0)
            } else {
                Ok(EXIT_VIOLATION)
            }
        }
        Command::Gen {
            family,
            params,
            seed,
            out,
            format,
        } => {
            let spec = GenSpec::new(family, GenSpec::parse_params(&params)?, seed);
            let g = spec.generate()?;
            let text = match format.as_str() {
                "edge-list" | "edges" => formats::serialize_edge_list(&g),
                "graph6" | "g6" => format!("{}\n", formats::serialize_graph6(&g)?),
                "dot" => formats::to_dot(&g, None),
                other => {
                    return Err(GraphError::InvalidParams(format!(
                        "unknown output format '{other}'"
                    )))
                }
            };
            match out {
                Some(path) => std::fs::write(&path, text).map_err(|e| GraphError::Parse {
                    line: 0,
                    message: format!("{}: {e}", path.display()),
                })?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Command::Suite {
            max_n,
            samples,
            seed,
        } => {
            let summary = suite::run_suite(&SuiteConfig {
                max_n,
                samples,
                seed,
            });
            println!("{}", serde_json::to_string_pretty(&summary).expect("summary serializes"));
            if summary.passed {
                Ok(0)
            } else {
                Ok(EXIT_VIOLATION)
            }
        }
    }
}

/// Returns the number of violated laws.
fn run_verify(g: &Graph, law: &str) -> Result<usize, GraphError> {
    let mut violations = 0;
    let laws: Vec<&str> = if law == "all" {
        vec!["union", "join", "ball", "theorem4", "bounds"]
    } else {
        vec![law]
    };
    for l in &laws {
        match *l {
            "union" => {
                // weighted-average identity over the graph's own components
                if g.is_graph_empty() {
                    println!("union\tSKIP\tempty graph");
                    continue;
                }
                let parts: Vec<Graph> = g
                    .connected_components()
                    .iter()
                    .map(|c| g.induced_subgraph(c).expect("component in range").0)
                    .collect();
                let (lhs, rhs) = dim::check_disjoint_union_law(&parts)?;
                report_law("union", &lhs, &rhs, &mut violations);
            }
            "join" => {
                // join the input with small probes and check the sum formula
                let probes: Vec<(&str, Graph)> = vec![
                    ("K_1", Graph::edgeless(1)),
                    ("2K_1", Graph::edgeless(2)),
                    ("K_2", Graph::from_edges(2, &[(0, 1)]).unwrap()),
                ];
                for (name, probe) in probes {
                    let (lhs, rhs) = dim::check_join_law(g, &probe);
                    report_law(&format!("join({name})"), &lhs, &rhs, &mut violations);
                }
            }
            "ball" => {
                let mut cache = dim::DimCache::new();
                let mut bad = 0;
                for v in 0..g.order() {
                    let direct = dim::vertex_dim_cached(g, v, &mut cache)?;
                    let ball = dim::dim(&g.unit_ball(v)?);
                    if direct != ball {
                        bad += 1;
                    }
                }
                if bad == 0 {
                    println!("ball\tOK\tall {} vertices", g.order());
                } else {
                    println!("ball\tFAIL\t{bad} vertices violate the identity");
                    violations += 1;
                }
            }
            "theorem4" => {
                if g.is_graph_empty() {
                    println!("theorem4\tSKIP\tempty graph");
                    continue;
                }
                let cover = cover::augmented_min_cover(g)?;
                let (lhs, rhs) = cover::cover_identity_sides(g, &cover)?;
                report_law("theorem4", &lhs, &rhs, &mut violations);
            }
            "bounds" => {
                if g.is_graph_empty() {
                    println!("bounds\tSKIP\tempty graph");
                    continue;
                }
                let b = cover::bounds_report(g)?;
                let ok = b.lower_basic <= b.dim
                    && b.dim <= b.upper
                    && b.lower_connected.as_ref().map_or(true, |lc| *lc <= b.dim);
                if ok {
                    let lc = b
                        .lower_connected
                        .as_ref()
                        .map(|r| format!(", lower_connected = {}", format_exact(r)))
                        .unwrap_or_default();
                    println!(
                        "bounds\tOK\tlower_basic = {}, dim = {}, upper = {}{}{}",
                        format_exact(&b.lower_basic),
                        format_exact(&b.dim),
                        format_exact(&b.upper),
                        lc,
                        if b.saturated_lower { ", saturated lower" } else { "" },
                    );
                } else {
                    println!("bounds\tFAIL\tdim {} outside bounds", format_exact(&b.dim));
                    violations += 1;
                }
            }
            other => {
                return Err(GraphError::InvalidParams(format!("unknown law '{other}'")));
            }
        }
    }
    Ok(violations)
}

fn report_law(
    name: &str,
    lhs: &graphdim::Rational,
    rhs: &graphdim::Rational,
    violations: &mut usize,
) {
    if lhs == rhs {
        println!("{name}\tOK\t{} = {}", format_exact(lhs), format_exact(rhs));
    } else {
        println!(
            "{name}\tFAIL\t{} != {}",
            format_exact(lhs),
            format_exact(rhs)
        );
        *violations += 1;
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
