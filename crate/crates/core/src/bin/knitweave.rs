use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use knitweave::certify::{common_neighbor_certificate, dense_conditions, find_dense_neighborhood, greedy_link, knitted1_check, Knitted1Status};
use knitweave::coloring::{chromatic_number, dirac_neighborhood_check, is_contraction_critical};
use knitweave::harness::{
    campaign_lemma_si, campaign_pipeline_4linked, gen_dense_neighborhood, gen_min_degree, gen_separated_host,
    gen_universal_vertex, parse_edge_list, parse_graph, parse_graph6, write_edge_list, write_graph6, HostFamily,
    PipelineCampaign, SiCampaign,
};
use knitweave::solver::{disjoint_paths, is_profile_knitted, knit, TerminalSpec};
use knitweave::structure::{enumerate_separations, is_p_massed, is_rigid, minimize_pair, KnitConvention, MinimizeOptions};
use knitweave::{Error, Graph, VertexSet};

#[derive(Parser)]
#[command(name = "knitweave", version, about = "Linkage, knittedness and contraction-criticality tools for small dense graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Graph file (graph6 or edge list); stdin when absent or `-`.
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    format: InputFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Auto,
    Graph6,
    EdgeList,
}

#[derive(Subcommand)]
enum Command {
    /// Disjoint paths joining consecutive terminal pairs.
    Linkage {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',', required = true)]
        terminals: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        forbidden: Vec<usize>,
        /// Maximum vertices per path.
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// A knit for terminals split consecutively by the profile.
    Knit {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',', required = true)]
        terminals: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        profile: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        forbidden: Vec<usize>,
    },
    /// Whether every partition of the terminals with the profile has a knit.
    ProfileKnitted {
        #[command(flatten)]
        input: Input,
        /// Terminal set; every vertex when absent.
        #[arg(long, value_delimiter = ',')]
        terminals: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        profile: Vec<usize>,
    },
    /// Whether the pair (graph, terminals) is p-massed.
    Massed {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',', required = true)]
        terminals: Vec<usize>,
        #[arg(long)]
        p: usize,
    },
    /// Local descent to a minimal massed pair.
    Minimize {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',', required = true)]
        terminals: Vec<usize>,
        #[arg(long)]
        p: usize,
        /// Bound on the terminal count; defaults to the number of terminals.
        #[arg(long)]
        limit: Option<usize>,
        /// Keep descending through knitted pairs.
        #[arg(long)]
        relaxed: bool,
    },
    /// Rigidity of each separation of order at most `max-order`.
    Rigid {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',', required = true)]
        terminals: Vec<usize>,
        #[arg(long)]
        max_order: usize,
        /// Stop after this many separations.
        #[arg(long, default_value_t = 100)]
        limit: usize,
    },
    /// Chromatic number with an optimal coloring.
    Chromatic {
        #[command(flatten)]
        input: Input,
    },
    /// Contraction-criticality by minor enumeration.
    Critical {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
    },
    /// Vertices whose neighborhoods have too large independent sets.
    Dirac {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
    },
    /// Common-neighbor certificate for k-linkedness.
    CertifyCommon {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        knitted: bool,
    },
    /// Greedy linking of consecutive terminal pairs.
    CertifyGreedy {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',', required = true)]
        terminals: Vec<usize>,
        /// Vertex the paths must avoid (the knitted variant).
        #[arg(long)]
        avoid: Option<usize>,
    },
    /// Density conditions of the graph and of closed neighborhoods outside the terminals.
    Dense {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        p: usize,
        #[arg(long, value_delimiter = ',')]
        terminals: Vec<usize>,
    },
    /// Search for the knitted or linked subgraph promised for p.
    Knitted1 {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Sweep of the s_i claims over random configurations.
    CampaignSi {
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_delimiter = ',', num_args = 2, default_values_t = [12, 20])]
        sizes: Vec<usize>,
        #[arg(long, value_delimiter = ',', num_args = 2, default_values_t = [3, 12])]
        degrees: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Family::Mixed)]
        family: Family,
        #[arg(long)]
        no_timestamps: bool,
    },
    /// Replay of the 4-linkage pipeline on dense hosts.
    #[command(name = "campaign-4linked")]
    Campaign4linked {
        #[arg(long, default_value_t = 2)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        spot_checks: usize,
        #[arg(long)]
        no_timestamps: bool,
    },
    /// Random graph, printed as graph6 or an edge list.
    Gen {
        #[arg(long, value_enum, default_value_t = GenKind::MinDegree)]
        kind: GenKind,
        #[arg(long, default_value_t = 16)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        delta: usize,
        /// For `dense`: the density parameter.
        #[arg(long, default_value_t = 18)]
        p: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Graph6)]
        to: OutputFormat,
    },
    /// Re-encode a graph.
    Convert {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = OutputFormat::Graph6)]
        to: OutputFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    MinDegree,
    Separated,
    DenseSeparated,
    Mixed,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    MinDegree,
    Universal,
    Dense,
    Separated,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Graph6,
    EdgeList,
}

/// Exit status of a computed verdict.
enum Outcome {
    Verdict,
    Finding,
}

fn read_graph(input: &Input) -> knitweave::Result<Graph> {
    let text = match &input.input {
        Some(path) if path.as_os_str() != "-" => std::fs::read_to_string(path)?,
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    match input.format {
        InputFormat::Auto => parse_graph(&text),
        InputFormat::Graph6 => parse_graph6(text.trim()),
        InputFormat::EdgeList => parse_edge_list(&text),
    }
}

fn pairs_of(terminals: &[usize]) -> knitweave::Result<Vec<(usize, usize)>> {
    if !terminals.len().is_multiple_of(2) {
        return Err(Error::Input("terminals must come in pairs".into()));
    }
    Ok(terminals.chunks(2).map(|c| (c[0], c[1])).collect())
}

fn set_of(vs: &[usize]) -> knitweave::Result<VertexSet> {
    if let Some(&v) = vs.iter().find(|&&v| v >= 64) {
        return Err(Error::Input(format!("vertex {v} is out of range")));
    }
    Ok(vs.iter().collect())
}

/// Writes to stdout; a closed pipe is not an error.
fn out(text: &str) -> knitweave::Result<()> {
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn emit<T: Serialize>(value: &T) -> knitweave::Result<()> {
    out(&(serde_json::to_string_pretty(value)? + "\n"))
}

fn write_graph(g: &Graph, to: OutputFormat) -> knitweave::Result<()> {
    match to {
        OutputFormat::Graph6 => out(&(write_graph6(g) + "\n")),
        OutputFormat::EdgeList => out(&write_edge_list(g)),
    }
}

fn run(cli: Cli) -> knitweave::Result<Outcome> {
    match cli.command {
        Command::Linkage {
            input,
            terminals,
            forbidden,
            max_len,
        } => {
            let g = read_graph(&input)?;
            let spec = TerminalSpec::pairs(&pairs_of(&terminals)?, set_of(&forbidden)?)?;
            let linkage = disjoint_paths(&g, &spec, max_len)?;
            emit(&json!({ "linked": linkage.is_some(), "linkage": linkage }))?;
        }
        Command::Knit {
            input,
            terminals,
            profile,
            forbidden,
        } => {
            let g = read_graph(&input)?;
            if profile.iter().sum::<usize>() != terminals.len() {
                return Err(Error::Input("profile sizes must add up to the number of terminals".into()));
            }
            let mut parts = Vec::with_capacity(profile.len());
            let mut rest = &terminals[..];
            for &size in &profile {
                let (part, tail) = rest.split_at(size);
                parts.push(set_of(part)?);
                rest = tail;
            }
            let spec = TerminalSpec::new(parts, set_of(&forbidden)?)?;
            let found = knit(&g, &spec)?;
            emit(&json!({ "knitted": found.is_some(), "parts": spec.parts, "knit": found }))?;
        }
        Command::ProfileKnitted { input, terminals, profile } => {
            let g = read_graph(&input)?;
            let s = if terminals.is_empty() { g.vertices() } else { set_of(&terminals)? };
            emit(&is_profile_knitted(&g, s, &profile)?)?;
        }
        Command::Massed { input, terminals, p } => {
            let g = read_graph(&input)?;
            emit(&is_p_massed(&g, set_of(&terminals)?, p)?)?;
        }
        Command::Minimize {
            input,
            terminals,
            p,
            limit,
            relaxed,
        } => {
            let g = read_graph(&input)?;
            let options = MinimizeOptions {
                allow_knitted: relaxed,
                ..MinimizeOptions::default()
            };
            let out = minimize_pair(&g, set_of(&terminals)?, p, limit.unwrap_or(terminals.len()), &options)?;
            emit(&json!({ "graph6": write_graph6(&out.graph), "outcome": out }))?;
        }
        Command::Rigid {
            input,
            terminals,
            max_order,
            limit,
        } => {
            let g = read_graph(&input)?;
            let stream = enumerate_separations(&g, set_of(&terminals)?, max_order)?;
            let mut out = Vec::new();
            for sep in stream.take(limit) {
                let verdict = is_rigid(&g, &sep, &KnitConvention::EveryPartition)?;
                out.push(json!({ "separation": sep, "rigid": verdict }));
            }
            emit(&out)?;
        }
        Command::Chromatic { input } => {
            let g = read_graph(&input)?;
            let (chi, coloring) = chromatic_number(&g);
            emit(&json!({ "chromatic_number": chi, "coloring": coloring }))?;
        }
        Command::Critical { input, k } => {
            let g = read_graph(&input)?;
            emit(&is_contraction_critical(&g, k)?)?;
        }
        Command::Dirac { input, k } => {
            let g = read_graph(&input)?;
            emit(&dirac_neighborhood_check(&g, k))?;
        }
        Command::CertifyCommon { input, k, knitted } => {
            let g = read_graph(&input)?;
            emit(&common_neighbor_certificate(&g, k, knitted)?)?;
        }
        Command::CertifyGreedy { input, terminals, avoid } => {
            let g = read_graph(&input)?;
            let forbidden = avoid.map(VertexSet::singleton).unwrap_or_default();
            let spec = TerminalSpec::pairs(&pairs_of(&terminals)?, forbidden)?;
            emit(&greedy_link(&g, &spec, avoid.is_some())?)?;
        }
        Command::Dense { input, p, terminals } => {
            let g = read_graph(&input)?;
            let whole = dense_conditions(&g, p);
            let found = find_dense_neighborhood(&g, set_of(&terminals)?, p)?;
            emit(&json!({ "graph": whole, "neighborhood": found }))?;
        }
        Command::Knitted1 { input, p, samples, seed } => {
            let g = read_graph(&input)?;
            let verdict = knitted1_check(&g, p, samples, seed)?;
            emit(&verdict)?;
            if verdict.status == Knitted1Status::NotFound {
                return Ok(Outcome::Finding);
            }
        }
        Command::CampaignSi {
            samples,
            seed,
            sizes,
            degrees,
            family,
            no_timestamps,
        } => {
            let params = SiCampaign {
                samples,
                seed,
                sizes: (sizes[0], sizes[1]),
                degrees: (degrees[0], degrees[1]),
                family: match family {
                    Family::MinDegree => HostFamily::MinDegree,
                    Family::Separated => HostFamily::Separated,
                    Family::DenseSeparated => HostFamily::DenseSeparated,
                    Family::Mixed => HostFamily::Mixed,
                },
                timing: !no_timestamps,
            };
            let report = campaign_lemma_si(&params)?;
            report.revalidate()?;
            out(&(report.to_json()? + "\n"))?;
            if report.has_findings() {
                return Ok(Outcome::Finding);
            }
        }
        Command::Campaign4linked {
            samples,
            seed,
            spot_checks,
            no_timestamps,
        } => {
            let params = PipelineCampaign {
                samples,
                seed,
                spot_checks,
                timing: !no_timestamps,
            };
            let report = campaign_pipeline_4linked(&params)?;
            report.revalidate()?;
            out(&(report.to_json()? + "\n"))?;
            if report.has_findings() {
                return Ok(Outcome::Finding);
            }
        }
        Command::Gen {
            kind,
            n,
            delta,
            p,
            seed,
            to,
        } => {
            let g = match kind {
                GenKind::MinDegree => gen_min_degree(n, delta, seed)?,
                GenKind::Universal => gen_universal_vertex(n, delta, seed)?.0,
                GenKind::Dense => gen_dense_neighborhood(n, p, seed)?.0,
                GenKind::Separated => gen_separated_host(seed, false)?.0,
            };
            write_graph(&g, to)?;
        }
        Command::Convert { input, to } => {
            let g = read_graph(&input)?;
            write_graph(&g, to)?;
        }
    }
    Ok(Outcome::Verdict)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(Outcome::Verdict) => ExitCode::SUCCESS,
        Ok(Outcome::Finding) => ExitCode::from(1),
        Err(e @ Error::Inconsistent(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
