//! Command-line surface. Artifacts (colorings, reports, drawings) go to
//! stdout or --out; progress notes and provenance go to stderr, so pipelines
//! can consume the artifact stream directly.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use gridcolor::assembly::{construct_gn, ConstructMethod};
use gridcolor::blocks::{modified_roichman_coloring, roichman_coloring, two_ribbon_coloring};
use gridcolor::bounds::grid_gamma_upper;
use gridcolor::interchange::{from_json, to_json};
use gridcolor::paths::{achromatic_path_coloring, complete_path_coloring};
use gridcolor::render::{render, Palette, RenderFormat, RenderSpec};
use gridcolor::search::{
    exhaustive_search, local_search, Budget, SearchConfig, SearchStatus, SearchStrategy,
};
use gridcolor::verify::VerificationReport;
use gridcolor::{verify, GridGraph, PairSet, PartialColoring};

#[derive(Parser)]
#[command(
    name = "gridcolor",
    version,
    about = "Complete colorings of grid graphs"
)]
struct Cli {
    /// Write the artifact to this file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Artifact format. bounds/verify take text|json, render takes
    /// ascii|svg|json; coloring generators always emit interchange json.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Seed for randomized search.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Ascii,
    Svg,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Ascii => "ascii",
            Format::Svg => "svg",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Theorem2,
    Search,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Exhaustive,
    Local,
}

#[derive(Clone, Copy, ValueEnum)]
enum PaletteArg {
    Golden,
    Grayscale,
}

#[derive(Subcommand)]
enum Cmd {
    /// Counting upper bounds on the complete coloring number of a grid.
    Bounds {
        /// Grid dimensions, comma separated: m,n[,p,...].
        #[arg(long, value_delimiter = ',', required = true, value_name = "DIMS")]
        dims: Vec<usize>,
    },

    /// Optimal complete proper coloring of the path with n edges.
    Path {
        /// Edge count of the path (n+1 vertices).
        #[arg(long)]
        n: usize,
        /// Color count; defaults to the achromatic number of the path.
        #[arg(long)]
        k: Option<u32>,
    },

    /// Roichman rectangle: 8(m-2) colors on a [16(m-2)+2, m] grid.
    Roichman {
        #[arg(long)]
        m: usize,
        /// Also color the spare boundary cells so the result is proper.
        #[arg(long)]
        fill: bool,
    },

    /// Modified Roichman rectangle: total, (8m-7)-complete, [16m-15, m].
    ModifiedRoichman {
        #[arg(long)]
        m: usize,
    },

    /// Two-ribbon block: extends k base colors by three fresh ones on [2, k+3].
    Ribbon {
        #[arg(long)]
        k: u32,
    },

    /// Complete coloring of the n x n grid with as many colors as possible.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },

    /// Search for a k-complete coloring. Exit 0 found, 1 exhausted-none,
    /// 2 budget-exceeded.
    Search {
        #[arg(long, value_delimiter = ',', required = true, value_name = "DIMS")]
        dims: Vec<usize>,
        #[arg(long)]
        k: u32,
        /// Require the witness to be proper as well.
        #[arg(long)]
        proper: bool,
        #[arg(long, value_enum, default_value_t = StrategyArg::Local)]
        strategy: StrategyArg,
        /// Wall-clock limit in seconds.
        #[arg(long, value_name = "T")]
        budget_secs: Option<f64>,
        /// Node limit. Local search defaults to 50M nodes when no budget
        /// is given; exhaustive runs unbounded.
        #[arg(long, value_name = "N")]
        budget_nodes: Option<u64>,
        /// Independent annealing runs splitting the node budget.
        #[arg(long, default_value_t = 4)]
        restarts: u32,
        /// Disable transpose pruning on square grids.
        #[arg(long)]
        no_symmetry: bool,
    },

    /// Check a stored coloring. Exit 0 complete (and proper when --proper),
    /// 1 otherwise, 3 malformed input.
    Verify {
        file: PathBuf,
        #[arg(long)]
        k: u32,
        /// Fail unless the coloring is also proper.
        #[arg(long)]
        proper: bool,
        /// JSON file of color pairs the coloring is allowed to miss,
        /// e.g. [[1,3],[2,5]]. Overrides any remainder stored in FILE.
        #[arg(long, value_name = "FILE")]
        remainder: Option<PathBuf>,
    },

    /// Draw a stored coloring (ascii unless --format says otherwise).
    Render {
        file: PathBuf,
        /// Render this first-axis layer (1-based) of a 3D coloring.
        #[arg(long, value_name = "Z")]
        slice: Option<usize>,
        /// Svg cell edge in pixels.
        #[arg(long, default_value_t = 32)]
        cell_size: u32,
        #[arg(long, value_enum, default_value_t = PaletteArg::Golden)]
        palette: PaletteArg,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let out = cli.out.as_deref();
    match cli.cmd {
        Cmd::Bounds { dims } => {
            let report = grid_gamma_upper(&dims)?;
            let doc = match cli.format.unwrap_or(Format::Text) {
                Format::Text => report.to_string(),
                Format::Json => serde_json::to_string(&report)?,
                other => bail!("bounds prints text or json, not {}", other.name()),
            };
            emit(&doc, out)?;
            Ok(0)
        }

        Cmd::Path { n, k } => {
            let p = match k {
                Some(q) => complete_path_coloring(n, q)?,
                None => achromatic_path_coloring(n)?,
            };
            eprintln!("path with {n} edges, {} colors", p.k());
            emit_coloring(&p.to_partial(), out, cli.format)?;
            Ok(0)
        }

        Cmd::Roichman { m, fill } => {
            let r = roichman_coloring(m, fill)?;
            eprintln!(
                "roichman rectangle [{}, {}], {}-complete{}",
                r.height,
                r.m,
                r.psi_hat,
                if fill { ", filled proper" } else { "" }
            );
            emit_coloring(&r.coloring, out, cli.format)?;
            Ok(0)
        }

        Cmd::ModifiedRoichman { m } => {
            let r = modified_roichman_coloring(m)?;
            eprintln!(
                "modified roichman rectangle [{}, {}], {}-complete, total",
                r.height, r.m, r.psi_bar
            );
            emit_coloring(&r.coloring, out, cli.format)?;
            Ok(0)
        }

        Cmd::Ribbon { k } => {
            let t = two_ribbon_coloring(k)?;
            eprintln!("two-ribbon [2, {}], colors 1..={}", k + 3, k + 3);
            emit_coloring(&t.coloring, out, cli.format)?;
            Ok(0)
        }

        Cmd::Construct { n, method } => {
            let method = match method {
                MethodArg::Auto => ConstructMethod::Auto,
                MethodArg::Theorem2 => ConstructMethod::Pipeline,
                MethodArg::Search => ConstructMethod::Search,
            };
            let got = construct_gn(n, method, cli.seed)?;
            // provenance record; the coloring itself is the artifact
            eprintln!(
                "{{\"method\":\"{}\",\"k_achieved\":{},\"upper_bound\":{}}}",
                got.method, got.k_achieved, got.upper_bound
            );
            emit_coloring(&got.coloring, out, cli.format)?;
            Ok(0)
        }

        Cmd::Search {
            dims,
            k,
            proper,
            strategy,
            budget_secs,
            budget_nodes,
            restarts,
            no_symmetry,
        } => {
            let g = GridGraph::new(&dims)?;
            let strategy = match strategy {
                StrategyArg::Exhaustive => SearchStrategy::Exhaustive,
                StrategyArg::Local => SearchStrategy::Local,
            };
            let mut cfg = SearchConfig::new(k, strategy);
            cfg.proper_only = proper;
            cfg.seed = cli.seed;
            cfg.restarts = restarts;
            cfg.symmetry = !no_symmetry;
            cfg.budget = Budget {
                max_nodes: budget_nodes,
                max_seconds: budget_secs,
            };
            if budget_nodes.is_none() && budget_secs.is_none() && strategy == SearchStrategy::Local
            {
                cfg.budget = Budget::nodes(50_000_000);
            }
            let outcome = match strategy {
                SearchStrategy::Exhaustive => exhaustive_search(&g, &cfg),
                SearchStrategy::Local => local_search(&g, &cfg),
            };
            eprintln!(
                "status={} nodes={} elapsed={:.3}s best_missing={}",
                status_name(outcome.status),
                outcome.nodes_explored,
                outcome.elapsed_seconds,
                outcome.best_missing
            );
            if let Some(w) = &outcome.witness {
                emit_coloring(w, out, cli.format)?;
            }
            Ok(match outcome.status {
                SearchStatus::Found => 0,
                SearchStatus::ExhaustedNone => 1,
                SearchStatus::BudgetExceeded => 2,
            })
        }

        Cmd::Verify {
            file,
            k,
            proper,
            remainder,
        } => {
            let report = load_and_verify(&file, k, remainder.as_deref());
            let report = match report {
                Ok(r) => r,
                Err(err) => {
                    eprintln!("error: {err:#}");
                    return Ok(3);
                }
            };
            let doc = match cli.format.unwrap_or(Format::Text) {
                Format::Text => report.to_string(),
                Format::Json => serde_json::to_string(&report)?,
                other => bail!("verify prints text or json, not {}", other.name()),
            };
            emit(&doc, out)?;
            let ok = report.is_complete && (!proper || report.is_proper);
            Ok(if ok { 0 } else { 1 })
        }

        Cmd::Render {
            file,
            slice,
            cell_size,
            palette,
        } => {
            let text =
                fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let (mut c, mut rem) = from_json(&text)?;
            if let Some(z) = slice {
                c = c.slice_first_axis(z)?;
                rem = None; // the remainder describes the whole coloring
            }
            let format = match cli.format.unwrap_or(Format::Ascii) {
                Format::Ascii => RenderFormat::Ascii,
                Format::Svg => RenderFormat::Svg,
                Format::Json => RenderFormat::Json,
                Format::Text => bail!("render formats are ascii, svg and json"),
            };
            let mut spec = RenderSpec::new(format);
            spec.cell_size = cell_size;
            spec.palette = match palette {
                PaletteArg::Golden => Palette::GoldenAngle,
                PaletteArg::Grayscale => Palette::Grayscale,
            };
            emit(&render(&c, rem.as_ref(), &spec)?, out)?;
            Ok(0)
        }
    }
}

/// Everything that must exit 3 on failure: reading, parsing, and the
/// k/remainder consistency checks inside verify.
fn load_and_verify(
    file: &Path,
    k: u32,
    remainder: Option<&Path>,
) -> anyhow::Result<VerificationReport> {
    let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let (c, file_rem) = from_json(&text)?;
    let rem = match remainder {
        Some(path) => {
            let rtext =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let pairs: Vec<(u32, u32)> = serde_json::from_str(&rtext)
                .with_context(|| format!("parsing remainder {}", path.display()))?;
            Some(PairSet::from_pairs(k, &pairs)?)
        }
        None => file_rem,
    };
    Ok(verify(&c, k, rem.as_ref())?)
}

fn emit_coloring(
    c: &PartialColoring,
    out: Option<&Path>,
    format: Option<Format>,
) -> anyhow::Result<()> {
    if let Some(f) = format {
        if f != Format::Json {
            bail!(
                "colorings are emitted as interchange json; pipe the file into \
                 `gridcolor render` for {}",
                f.name()
            );
        }
    }
    emit(&to_json(c, None), out)
}

fn emit(doc: &str, out: Option<&Path>) -> anyhow::Result<()> {
    let text = if doc.ends_with('\n') {
        doc.to_string()
    } else {
        format!("{doc}\n")
    };
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn status_name(status: SearchStatus) -> &'static str {
    match status {
        SearchStatus::Found => "found",
        SearchStatus::ExhaustedNone => "exhausted-none",
        SearchStatus::BudgetExceeded => "budget-exceeded",
    }
}
