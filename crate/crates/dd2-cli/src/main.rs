//! Command-line surface over the dd2 library: every operation on files,
//! with a 0/1/2 exit-code convention (positive decision / negative
//! decision / usage or input error) so shell tests can tell "no" from
//! "broken".

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use dd2::generators::{self, Family, GnkVariant};
use dd2::graph::{self, Graph};
use dd2::minimal;
use dd2::optimize::{self, Objective, SearchLimits};
use dd2::recognition;
use dd2::reductions::{self, SetCoverInstance, ThreeDM3Instance};

#[derive(Parser)]
#[command(
    name = "dd2",
    version,
    about = "Disjoint dominating and 2-dominating set toolkit"
)]
struct Cli {
    /// Print decisions only, suppressing certificates.
    #[arg(long, global = true)]
    quiet: bool,
    /// Lift the built-in search guards (at your own risk).
    #[arg(long, global = true)]
    force: bool,
    /// Worker threads for the exhaustive searches.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide membership; prints a witness pair or the blocking weak support.
    Recognize { graph: PathBuf },
    /// Construct the canonical pair for a member graph.
    Pair { graph: PathBuf },
    /// Report whether a vertex set is a certified dominating set.
    Certified {
        graph: PathBuf,
        /// The candidate dominating set.
        vertices: Vec<usize>,
    },
    /// Decide minimality; prints the shape of every component.
    Minimal { graph: PathBuf },
    /// Split a subdivision graph into the multigraph it subdivides.
    Decompose { graph: PathBuf },
    /// Minimum |D| + |D2| over all valid pairs, with a witness.
    Gamma2 { graph: PathBuf },
    /// Minimum edge subdivisions until the graph admits a pair.
    SubdivideMin { graph: PathBuf },
    /// Minimum edge additions until the graph admits a pair.
    AddMin {
        graph: PathBuf,
        /// Largest addition size to try.
        #[arg(long = "k-max", default_value_t = 2)]
        k_max: usize,
    },
    /// Extremal spanning subgraph with every component minimal.
    SpanSearch {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = ObjectiveArg::Min)]
        objective: ObjectiveArg,
    },
    /// Emit a named graph family as an edge-list document.
    Generate {
        #[command(subcommand)]
        family: GenerateCmd,
    },
    /// Build the spanning-size supergraph from a 3DM3 instance.
    Reduce3dm3 { instance: PathBuf },
    /// Build the edge-addition graph from a Set Cover instance.
    ReduceSetcover { instance: PathBuf },
    /// Recover a source solution from a reduction witness.
    Extract {
        #[arg(value_enum)]
        kind: ReductionKind,
        instance: PathBuf,
        /// Edge list, one "u v" pair per line.
        witness: PathBuf,
    },
    /// Run a brute-force oracle.
    Oracle {
        #[arg(value_enum)]
        kind: OracleKind,
        input: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectiveArg {
    Min,
    Max,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReductionKind {
    #[value(name = "3dm3")]
    Dm3,
    Setcover,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleKind {
    Dd2,
    Minimal,
    Setcover,
    #[value(name = "3dm3")]
    Dm3,
}

#[derive(Subcommand)]
enum GenerateCmd {
    Path { n: usize },
    Cycle { n: usize },
    Star { n: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    /// Attach t pendant leaves to every vertex of the given graph.
    Corona { graph: PathBuf, t: usize },
    /// The n-vertex family with pair-size value exactly k (variant 1 or 2).
    Gnk { n: usize, k: usize, variant: u8 },
    /// Seeded random corona multigraph.
    RandomCoronaMultigraph {
        nodes: usize,
        extra_edges: usize,
        max_mult: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The index-th labeled graph on n vertices in edge-mask order.
    Enumerate { n: usize, index: u64 },
}

enum Failure {
    Lib(dd2::Error),
    Usage(String),
}

impl From<dd2::Error> for Failure {
    fn from(e: dd2::Error) -> Self {
        Failure::Lib(e)
    }
}

type CmdResult = Result<u8, Failure>;

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    Ok(graph::parse_graph(&read_file(path)?)?)
}

fn load_witness_edges(path: &Path) -> Result<Vec<(usize, usize)>, Failure> {
    let text = read_file(path)?;
    let mut edges = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_ascii_whitespace().collect();
        if fields.len() != 2 {
            return Err(Failure::Usage(format!(
                "{}: line {}: expected `u v`",
                path.display(),
                i + 1
            )));
        }
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| {
                Failure::Usage(format!(
                    "{}: line {}: invalid integer",
                    path.display(),
                    i + 1
                ))
            })
        };
        edges.push((parse(fields[0])?, parse(fields[1])?));
    }
    Ok(edges)
}

fn limits(cli: &Cli) -> SearchLimits {
    let mut limits = SearchLimits {
        threads: cli.threads.max(1),
        ..SearchLimits::default()
    };
    if cli.force {
        limits = limits.unguarded();
    }
    limits
}

fn print_ids(name: &str, ids: &[usize]) {
    print!("{name}");
    for v in ids {
        print!(" {v}");
    }
    println!();
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Recognize { graph } => {
            let g = load_graph(graph)?;
            let verdict = recognition::is_dd2(&g)?;
            if cli.quiet {
                println!("is_dd2 {}", verdict.is_dd2);
            } else {
                print!("{verdict}");
            }
            Ok(u8::from(!verdict.is_dd2))
        }
        Command::Pair { graph } => {
            let g = load_graph(graph)?;
            let verdict = recognition::is_dd2(&g)?;
            match verdict.pair {
                Some(ref pair) => {
                    if !cli.quiet {
                        print!("{pair}");
                    }
                    Ok(0)
                }
                None => {
                    print!("{verdict}");
                    Ok(1)
                }
            }
        }
        Command::Certified { graph, vertices } => {
            let g = load_graph(graph)?;
            let report = recognition::certified_dom_report(&g, vertices)?;
            if cli.quiet {
                println!("certified {}", report.is_certified);
            } else {
                print!("{report}");
            }
            Ok(u8::from(!report.is_certified))
        }
        Command::Minimal { graph } => {
            let g = load_graph(graph)?;
            let verdict = minimal::is_minimal_dd2(&g);
            if cli.quiet {
                println!("is_minimal {}", verdict.is_minimal);
            } else {
                print!("{verdict}");
            }
            Ok(u8::from(!verdict.is_minimal))
        }
        Command::Decompose { graph } => {
            let g = load_graph(graph)?;
            match minimal::corona_decompose(&g) {
                Some(d) => {
                    print!("{}", d.multigraph.to_edge_list());
                    if !cli.quiet {
                        print_ids("vertex-map", &d.vertex_map);
                        print_ids("edge-map", &d.edge_map);
                    }
                    Ok(0)
                }
                None => {
                    println!("no decomposition");
                    Ok(1)
                }
            }
        }
        Command::Gamma2 { graph } => {
            let g = load_graph(graph)?;
            match optimize::gamma_gamma2(&g, &limits(cli))? {
                Some(result) => {
                    if cli.quiet {
                        println!("value {}", result.value);
                    } else {
                        print!("{result}");
                    }
                    Ok(0)
                }
                None => {
                    println!("not a dd2-graph");
                    Ok(1)
                }
            }
        }
        Command::SubdivideMin { graph } => {
            let g = load_graph(graph)?;
            let plan = optimize::min_subdivisions_to_dd2(&g)?;
            if cli.quiet {
                println!("count {}", plan.count);
            } else {
                print!("{plan}");
            }
            Ok(0)
        }
        Command::AddMin { graph, k_max } => {
            let g = load_graph(graph)?;
            match optimize::min_edges_to_dd2(&g, *k_max, &limits(cli))? {
                Some(result) => {
                    if cli.quiet {
                        println!("k {}", result.k);
                    } else {
                        print!("{result}");
                    }
                    Ok(0)
                }
                None => {
                    println!("no addition of size <= {k_max}");
                    Ok(1)
                }
            }
        }
        Command::SpanSearch { graph, objective } => {
            let g = load_graph(graph)?;
            let objective = match objective {
                ObjectiveArg::Min => Objective::Min,
                ObjectiveArg::Max => Objective::Max,
            };
            match optimize::spanning_minimal_search(&g, objective, &limits(cli))? {
                Some(result) => {
                    if cli.quiet {
                        println!("size {}", result.size);
                    } else {
                        print!("{result}");
                    }
                    Ok(0)
                }
                None => {
                    println!("not a dd2-graph");
                    Ok(1)
                }
            }
        }
        Command::Generate { family } => {
            print!("{}", generate(family)?);
            Ok(0)
        }
        Command::Reduce3dm3 { instance } => {
            let inst = ThreeDM3Instance::parse(&read_file(instance)?)?;
            let red = reductions::build_3dm3_supergraph(&inst);
            if cli.quiet {
                println!("k {}", red.k);
                print!("graph\n{}", red.graph.to_edge_list());
            } else {
                print!("{red}");
            }
            Ok(0)
        }
        Command::ReduceSetcover { instance } => {
            let inst = SetCoverInstance::parse(&read_file(instance)?)?;
            let red = reductions::build_setcover_reduction(&inst);
            if cli.quiet {
                println!("k {}", red.k);
                print!("graph\n{}", red.graph.to_edge_list());
            } else {
                print!("{red}");
            }
            Ok(0)
        }
        Command::Extract {
            kind,
            instance,
            witness,
        } => {
            let edges = load_witness_edges(witness)?;
            let solution = match kind {
                ReductionKind::Dm3 => {
                    let inst = ThreeDM3Instance::parse(&read_file(instance)?)?;
                    let red = reductions::build_3dm3_supergraph(&inst);
                    reductions::extract_3dm3_solution(&inst, &red, &edges)
                }
                ReductionKind::Setcover => {
                    let inst = SetCoverInstance::parse(&read_file(instance)?)?;
                    let red = reductions::build_setcover_reduction(&inst);
                    reductions::extract_setcover_solution(&inst, &red, &edges)
                }
            };
            match solution {
                Some(ids) => {
                    print_ids("solution", &ids);
                    Ok(0)
                }
                None => {
                    println!("no solution extracted");
                    Ok(1)
                }
            }
        }
        Command::Oracle { kind, input } => oracle(cli, *kind, input),
    }
}

fn generate(cmd: &GenerateCmd) -> Result<String, Failure> {
    Ok(match cmd {
        GenerateCmd::Path { n } => generators::make(Family::Path(*n))?.to_edge_list(),
        GenerateCmd::Cycle { n } => generators::make(Family::Cycle(*n))?.to_edge_list(),
        GenerateCmd::Star { n } => generators::make(Family::Star(*n))?.to_edge_list(),
        GenerateCmd::Complete { n } => generators::make(Family::Complete(*n))?.to_edge_list(),
        GenerateCmd::CompleteBipartite { a, b } => {
            generators::make(Family::CompleteBipartite(*a, *b))?.to_edge_list()
        }
        GenerateCmd::Corona { graph, t } => {
            let g = load_graph(graph)?;
            generators::corona(&g, *t)?.to_edge_list()
        }
        GenerateCmd::Gnk { n, k, variant } => {
            let variant = match variant {
                1 => GnkVariant::CliqueRest,
                2 => GnkVariant::BicliqueRest,
                other => {
                    return Err(Failure::Usage(format!(
                        "gnk variant must be 1 or 2, got {other}"
                    )))
                }
            };
            generators::gnk(*n, *k, variant)?.to_edge_list()
        }
        GenerateCmd::RandomCoronaMultigraph {
            nodes,
            extra_edges,
            max_mult,
            seed,
        } => generators::random_corona_multigraph(*nodes, *extra_edges, *max_mult, *seed)?
            .to_edge_list(),
        GenerateCmd::Enumerate { n, index } => {
            let mut stream = generators::enumerate_graphs(*n)?;
            match stream.nth(*index as usize) {
                Some(g) => g.to_edge_list(),
                None => {
                    return Err(Failure::Usage(format!(
                        "index {index} out of range for n = {n}"
                    )))
                }
            }
        }
    })
}

fn oracle(cli: &Cli, kind: OracleKind, input: &Path) -> CmdResult {
    match kind {
        OracleKind::Dd2 => {
            let g = load_graph(input)?;
            match recognition::is_dd2_bruteforce(&g)? {
                Some(pair) => {
                    println!("is_dd2 true");
                    if !cli.quiet {
                        print!("{pair}");
                    }
                    Ok(0)
                }
                None => {
                    println!("is_dd2 false");
                    Ok(1)
                }
            }
        }
        OracleKind::Minimal => {
            let g = load_graph(input)?;
            let minimal = minimal::is_minimal_dd2_bruteforce(&g)?;
            println!("is_minimal {minimal}");
            Ok(u8::from(!minimal))
        }
        OracleKind::Setcover => {
            let inst = SetCoverInstance::parse(&read_file(input)?)?;
            match reductions::solve_setcover_bruteforce(&inst)? {
                Some(ids) => {
                    print_ids("solution", &ids);
                    Ok(0)
                }
                None => {
                    println!("infeasible");
                    Ok(1)
                }
            }
        }
        OracleKind::Dm3 => {
            let inst = ThreeDM3Instance::parse(&read_file(input)?)?;
            match reductions::solve_3dm3_bruteforce(&inst)? {
                Some(ids) => {
                    print_ids("solution", &ids);
                    Ok(0)
                }
                None => {
                    println!("infeasible");
                    Ok(1)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
