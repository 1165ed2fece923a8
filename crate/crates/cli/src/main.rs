use std::collections::BTreeMap;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use packcrit::canon::canonical_form;
use packcrit::classify::classify;
use packcrit::criticality::{is_edge_critical, is_vertex_critical, CriticalityReport, Deletion};
use packcrit::enumeration::{enumerate_graphs, EnumerationFilter, StructuralClass};
use packcrit::families::FamilySpec;
use packcrit::io::{emit_dot, emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
use packcrit::packing::chi_rho;
use packcrit::verify::{run_sweep, Report, SweepConfig, THEOREM_IDS};
use packcrit::Graph;

#[derive(Parser)]
#[command(
    name = "packcrit",
    version,
    about = "Packing chromatic numbers and criticality of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Packing chromatic number of a graph.
    Chirho {
        #[command(flatten)]
        source: Source,
        /// Print `vertex:color` lines for an optimal coloring.
        #[arg(long)]
        witness: bool,
        /// Emit the optimal coloring as DOT.
        #[arg(long, conflicts_with = "witness")]
        dot: bool,
    },
    /// Decide packing-chromatic criticality.
    Critical {
        #[command(flatten)]
        source: Source,
        /// Test single-vertex deletions instead of edge deletions.
        #[arg(long)]
        vertex: bool,
    },
    /// Apply the matching characterization theorem.
    Classify {
        #[command(flatten)]
        source: Source,
        /// Also run the exact criticality test and report agreement.
        #[arg(long)]
        check: bool,
    },
    /// Run a theorem-verification sweep (`all` runs every sweep).
    Verify {
        theorem: String,
        #[arg(long, env = "PACKCRIT_MAX_N")]
        max_vertices: Option<usize>,
        /// Largest base graph for hub constructions.
        #[arg(long)]
        base_max: Option<usize>,
        /// Worker threads (default: available parallelism).
        #[arg(long)]
        jobs: Option<usize>,
        /// Write line-delimited JSON records here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a family member from its spec.
    Gen {
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// List graphs up to isomorphism as graph6 lines.
    Enumerate(EnumerateArgs),
}

#[derive(Args)]
struct Source {
    /// File (graph6 or edge list), family spec such as `G1^5(0,2)`, or graph6 string.
    input: String,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, group = "class")]
    cactus: bool,
    #[arg(long, group = "class")]
    tree: bool,
    #[arg(long, group = "class")]
    block: bool,
    #[arg(long)]
    connected: bool,
    #[arg(long)]
    rad: Option<u32>,
    #[arg(long)]
    diam: Option<u32>,
    #[arg(long, default_value_t = 1)]
    min_n: usize,
    #[arg(long, env = "PACKCRIT_MAX_N", default_value_t = 6)]
    max_n: usize,
    /// Filter and deduplicate graph6 lines from this file instead of generating.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edges,
    Dot,
}

fn render(g: &Graph, format: Format) -> Result<String> {
    Ok(match format {
        Format::Graph6 => format!("{}\n", emit_graph6(g)?),
        Format::Edges => emit_edge_list(g),
        Format::Dot => emit_dot(g, None),
    })
}

fn load(input: &str) -> Result<Graph> {
    let path = std::path::Path::new(input);
    if path.is_file() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {input}"))?;
        let first = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'))
            .unwrap_or("");
        if let Ok(g) = parse_graph6(first.as_bytes()) {
            return Ok(g);
        }
        return parse_edge_list(&text).with_context(|| format!("parsing {input}"));
    }
    match input.parse::<FamilySpec>() {
        Ok(spec) => spec.build().map(|b| b.graph).map_err(anyhow::Error::msg),
        Err(spec_err) => match parse_graph6(input.as_bytes()) {
            Ok(g) => Ok(g),
            Err(g6_err) => {
                bail!("{input:?} is neither a file, a family spec nor graph6\n{spec_err}\n{g6_err}")
            }
        },
    }
}

fn deletion(d: Deletion) -> String {
    match d {
        Deletion::Edge(u, v) => format!("edge {u}-{v}"),
        Deletion::Vertex(v) => format!("vertex {v}"),
    }
}

fn print_critical(r: &CriticalityReport) {
    println!(
        "{}",
        if r.critical {
            "critical"
        } else {
            "not critical"
        }
    );
    println!("chi_rho {}", r.base_chi_rho);
    if let Some(w) = r.witness {
        let after = r
            .table
            .iter()
            .find(|(d, _)| *d == w)
            .map(|(_, v)| *v)
            .unwrap_or(r.base_chi_rho);
        println!("witness {} (chi_rho after deletion {after})", deletion(w));
    }
}

fn verify(
    theorem: &str,
    cfg: SweepConfig,
    jobs: Option<usize>,
    out: Option<PathBuf>,
) -> Result<bool> {
    if let Some(j) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build_global()?;
    }
    let ids: Vec<&str> = if theorem == "all" {
        THEOREM_IDS.to_vec()
    } else {
        vec![theorem]
    };
    if let Some(bad) = ids.iter().find(|id| !THEOREM_IDS.contains(id)) {
        bail!(
            "unknown theorem id {bad:?}; known: all, {}",
            THEOREM_IDS.join(", ")
        );
    }
    let reports: Vec<Report> = ids
        .iter()
        .map(|id| run_sweep(id, cfg).with_context(|| format!("sweep {id}")))
        .collect::<Result<_>>()?;
    if let Some(path) = out {
        let mut w = BufWriter::new(
            fs::File::create(&path).with_context(|| format!("creating {}", path.display()))?,
        );
        for rec in reports.iter().flat_map(|r| &r.records) {
            serde_json::to_writer(&mut w, rec)?;
            writeln!(w)?;
        }
        w.flush()?;
    }
    for r in &reports {
        let status = if r.all_agree() { "ok" } else { "DISAGREE" };
        println!(
            "{:<14} {:<8} {:>6} agree {:>4} disagree {:>9.3}s  {}",
            r.theorem,
            status,
            r.agreed,
            r.disagreed,
            r.micros as f64 / 1e6,
            r.range
        );
        for rec in r.records.iter().filter(|x| !x.agree) {
            println!(
                "  {} {} predicted {} oracle {}",
                rec.instance_g6,
                rec.spec.as_deref().unwrap_or("-"),
                rec.predicted,
                rec.oracle
            );
        }
        for note in &r.notes {
            println!("  note: {note}");
        }
    }
    Ok(reports.iter().all(Report::all_agree))
}

fn enumerate(a: EnumerateArgs) -> Result<()> {
    let class = if a.cactus {
        StructuralClass::Cactus
    } else if a.tree {
        StructuralClass::Tree
    } else if a.block {
        StructuralClass::BlockGraph
    } else {
        StructuralClass::All
    };
    let mut filter = EnumerationFilter::new(class, a.min_n, a.max_n);
    filter.connected |= a.connected;
    filter.radius = a.rad;
    filter.diameter = a.diam;
    let graphs = match &a.input {
        None => enumerate_graphs(&filter)?,
        Some(path) => ingest(path, &filter)?,
    };
    let stdout = std::io::stdout();
    let mut w = BufWriter::new(stdout.lock());
    for g in &graphs {
        w.write_all(render(g, a.format)?.as_bytes())?;
    }
    w.flush()?;
    Ok(())
}

fn ingest(path: &PathBuf, f: &EnumerationFilter) -> Result<Vec<Graph>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut unique = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = parse_graph6(line.as_bytes())
            .with_context(|| format!("{}:{}", path.display(), i + 1))?;
        if g.n() < f.min_n || g.n() > f.max_n {
            continue;
        }
        let class_ok = match f.class {
            StructuralClass::All => !f.connected || g.is_connected(),
            StructuralClass::Tree => g.is_tree(),
            StructuralClass::Cactus => g.is_cactus(),
            StructuralClass::BlockGraph => g.is_block_graph(),
        };
        let metric_ok = |want: Option<u32>, got: packcrit::Result<u32>| {
            want.is_none_or(|w| got.ok() == Some(w))
        };
        if class_ok && metric_ok(f.radius, g.radius()) && metric_ok(f.diameter, g.diameter()) {
            let c = canonical_form(&g)?;
            unique
                .entry((g.n(), c.certificate))
                .or_insert_with(|| c.graph(&g));
        }
    }
    Ok(unique.into_values().collect())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Chirho {
            source,
            witness,
            dot,
        } => {
            let g = load(&source.input)?;
            let r = chi_rho(&g)?;
            if dot {
                print!("{}", emit_dot(&g, Some(r.witness.colors())));
            } else {
                println!("{}", r.value);
                if witness {
                    for (v, c) in r.witness.colors().iter().enumerate() {
                        println!("{v}:{c}");
                    }
                }
            }
        }
        Command::Critical { source, vertex } => {
            let g = load(&source.input)?;
            let r = if vertex {
                is_vertex_critical(&g)?
            } else {
                is_edge_critical(&g)?
            };
            print_critical(&r);
        }
        Command::Classify { source, check } => {
            let g = load(&source.input)?;
            let v = classify(&g)?;
            if !v.applicable {
                println!(
                    "out of characterized scope: {}",
                    v.evidence
                        .note
                        .as_deref()
                        .unwrap_or("no applicable theorem")
                );
                return Ok(true);
            }
            println!("theorem {}", v.theorem);
            println!("clause {}", v.clause);
            println!(
                "predicted {}",
                if v.predicted_critical {
                    "critical"
                } else {
                    "not critical"
                }
            );
            println!("evidence {}", serde_json::to_string(&v.evidence)?);
            if check {
                let o = is_edge_critical(&g)?.critical;
                let agree = o == v.predicted_critical;
                println!("oracle {}", if o { "critical" } else { "not critical" });
                println!("agree {agree}");
                return Ok(agree);
            }
        }
        Command::Verify {
            theorem,
            max_vertices,
            base_max,
            jobs,
            out,
        } => {
            return verify(
                &theorem,
                SweepConfig {
                    max_vertices,
                    base_max,
                },
                jobs,
                out,
            );
        }
        Command::Gen { spec, format } => {
            let spec: FamilySpec = spec.parse().map_err(|e| anyhow::anyhow!("{e}"))?;
            let g = spec.build().map_err(anyhow::Error::msg)?.graph;
            print!("{}", render(&g, format)?);
        }
        Command::Enumerate(a) => enumerate(a)?,
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
