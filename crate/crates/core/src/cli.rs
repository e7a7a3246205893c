//! The `potseq` command line.
//!
//! Exit codes: 0 success or "true", 1 "false" or a failed check, 2 usage
//! error, 3 resource limit.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::certificate::Certificate;
use crate::decompose::hamiltonian_decomposition;
use crate::error::Error;
use crate::graph::{parse_part_list, MultipartiteSpec, SimpleGraph};
use crate::oracle::{
    sigma_cached, sigma_exact, SigmaCache, SigmaOptions, CACHE_ENV, DEFAULT_LIMIT,
};
use crate::sequence::DegreeSequence;
use crate::witness::{best_bound, WitnessSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "potseq",
    version,
    about = "Potentially K_{p1,...,pt}-graphic sequences: bounds, witnesses and exact sigma"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct SpecArgs {
    /// Part sizes, comma separated (e.g. 2,1,1)
    #[arg(short = 'p', long = "parts")]
    parts: String,
    /// Cut index i, 2 <= i <= t
    #[arg(short = 'i', long = "cut")]
    cut: usize,
    /// Number of terms n >= p1+...+pt
    #[arg(short = 'n')]
    n: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphFormat {
    Graph6,
    Dot,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate the lower bound on sigma(K_{p1,...,pt}, n)
    Bound {
        #[arg(short = 'p', long = "parts")]
        parts: String,
        #[arg(short = 'i', long = "cut", required_unless_present = "best")]
        cut: Option<usize>,
        #[arg(short = 'n')]
        n: usize,
        /// Maximize over every cut index
        #[arg(long)]
        best: bool,
    },
    /// Build the extremal witness graph
    Witness {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value = "graph6")]
        format: GraphFormat,
        /// Write the graph here instead of stdout
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Build the witness and verify every proof obligation
    Certify {
        #[command(flatten)]
        spec: SpecArgs,
        /// Largest n for the exhaustive oracle check
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Compute sigma(H, n) exactly by exhaustion
    Sigma {
        /// Target graph: graph6 text or a part list for K_{p1,...,pt}
        #[arg(short = 'H', long = "target")]
        target: String,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
        #[arg(long)]
        threads: Option<usize>,
        /// Cache file (defaults to $POTSEQ_CACHE)
        #[arg(long)]
        cache: Option<PathBuf>,
        #[arg(long)]
        no_cache: bool,
        /// Only consider sequences without zero terms
        #[arg(long)]
        no_zero_terms: bool,
    },
    /// Test whether a sequence is graphical
    Check {
        #[arg(short = 's', long = "sequence")]
        sequence: String,
    },
    /// Print the Havel–Hakimi realization of a sequence
    Realize {
        #[arg(short = 's', long = "sequence")]
        sequence: String,
        #[arg(long, value_enum, default_value = "graph6")]
        format: GraphFormat,
    },
    /// Print the Hamiltonian decomposition of K_N
    Decompose {
        #[arg(short = 'N')]
        order: usize,
        #[arg(long)]
        dot: bool,
    },
}

/// Runs the CLI against process stdout/stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI with explicit output streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::TooLarge { .. } => EXIT_LIMIT,
                Error::NotGraphical(_) => EXIT_FALSE,
                Error::Io { .. } => EXIT_FALSE,
                _ => EXIT_USAGE,
            }
        }
    }
}

type CmdResult = std::result::Result<i32, Error>;

fn parse_parts(text: &str, err: &mut dyn Write) -> Result<MultipartiteSpec, Error> {
    let (parts, reordered) = MultipartiteSpec::normalized(parse_part_list(text)?)?;
    if reordered {
        let _ = writeln!(err, "warning: part sizes reordered to {parts}");
    }
    Ok(parts)
}

fn witness_spec(args: &SpecArgs, err: &mut dyn Write) -> Result<WitnessSpec, Error> {
    WitnessSpec::new(parse_parts(&args.parts, err)?, args.cut, args.n)
}

fn io_error(path: &std::path::Path, e: std::io::Error) -> Error {
    Error::Io {
        path: path.to_path_buf(),
        reason: e.to_string(),
    }
}

fn emit(out: &mut dyn Write, file: Option<&PathBuf>, text: &str) -> Result<(), Error> {
    match file {
        Some(path) => fs::write(path, text).map_err(|e| io_error(path, e)),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| io_error(std::path::Path::new("<stdout>"), e)),
    }
}

fn render(g: &SimpleGraph, format: GraphFormat, name: &str) -> String {
    match format {
        GraphFormat::Graph6 => format!("{}\n", g.to_graph6()),
        GraphFormat::Dot => g.to_dot(name),
    }
}

fn parse_target(text: &str, err: &mut dyn Write) -> Result<SimpleGraph, Error> {
    let looks_like_parts = text
        .chars()
        .all(|c| c.is_ascii_digit() || c == ',' || c == ' ');
    if looks_like_parts {
        Ok(parse_parts(text, err)?.complete_multipartite())
    } else {
        SimpleGraph::from_graph6(text)
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match command {
        Command::Bound {
            parts,
            cut,
            n,
            best,
        } => {
            let parts = parse_parts(&parts, err)?;
            if best {
                let (i, value) = best_bound(&parts, n)?;
                let _ = writeln!(out, "{value} i={i}");
            } else {
                let cut = cut.expect("clap enforces -i without --best");
                let _ = writeln!(out, "{}", WitnessSpec::new(parts, cut, n)?.bound());
            }
            Ok(EXIT_OK)
        }
        Command::Witness {
            spec,
            format,
            output,
        } => {
            let spec = witness_spec(&spec, err)?;
            let graph = spec.build()?;
            emit(out, output.as_ref(), &render(&graph, format, "witness"))?;
            let _ = writeln!(out, "sequence: {}", spec.sequence());
            let _ = writeln!(out, "bound: {}", spec.bound());
            Ok(EXIT_OK)
        }
        Command::Certify {
            spec,
            limit,
            output,
        } => {
            let spec = witness_spec(&spec, err)?;
            let cert = Certificate::issue(&spec, limit)?;
            emit(out, output.as_ref(), &cert.to_text())?;
            Ok(if cert.all_passed() {
                EXIT_OK
            } else {
                EXIT_FALSE
            })
        }
        Command::Sigma {
            target,
            n,
            limit,
            threads,
            cache,
            no_cache,
            no_zero_terms,
        } => {
            let target = parse_target(&target, err)?;
            let options = SigmaOptions {
                limit,
                threads,
                exclude_zero_terms: no_zero_terms,
            };
            let cache_path = cache.or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from));
            let (record, hit) = match cache_path.filter(|_| !no_cache) {
                Some(path) => {
                    let (mut store, problem) = SigmaCache::load_or_empty(&path);
                    if let Some(problem) = problem {
                        let _ = writeln!(err, "warning: {problem}; continuing with an empty cache");
                    }
                    sigma_cached(&target, n, &options, &mut store)?
                }
                None => (sigma_exact(&target, n, &options)?, false),
            };
            let _ = writeln!(out, "sigma = {}", record.value);
            match &record.extremal {
                Some(s) => {
                    let _ = writeln!(out, "extremal: {s}");
                }
                None => {
                    let _ = writeln!(
                        out,
                        "extremal: none (every graphical sequence is potentially H-graphic)"
                    );
                }
            }
            let _ = writeln!(out, "target: {}", record.target.to_graph6());
            let _ = writeln!(out, "n: {n}");
            let _ = writeln!(out, "source: {}", if hit { "cache" } else { "computed" });
            Ok(EXIT_OK)
        }
        Command::Check { sequence } => {
            let s: DegreeSequence = sequence.parse()?;
            if s.is_graphical() {
                let _ = writeln!(out, "graphical");
                Ok(EXIT_OK)
            } else {
                let _ = writeln!(out, "not graphical");
                Ok(EXIT_FALSE)
            }
        }
        Command::Realize { sequence, format } => {
            let s: DegreeSequence = sequence.parse()?;
            let graph = s.realize()?;
            let _ = write!(out, "{}", render(&graph, format, "realization"));
            if let GraphFormat::Graph6 = format {
                let edges: Vec<String> = graph.edges().map(|(u, v)| format!("{u}-{v}")).collect();
                let _ = writeln!(out, "edges: {}", edges.join(" "));
            }
            Ok(EXIT_OK)
        }
        Command::Decompose { order, dot } => {
            let d = hamiltonian_decomposition(order)?;
            if dot {
                let _ = write!(out, "{}", d.to_dot());
            } else {
                if let Some(m) = d.matching() {
                    let pairs: Vec<String> = m.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                    let _ = writeln!(out, "matching: {}", pairs.join(" "));
                }
                for (k, c) in d.cycles().iter().enumerate() {
                    let verts: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                    let _ = writeln!(out, "cycle {}: {}", k + 1, verts.join(" "));
                }
            }
            Ok(EXIT_OK)
        }
    }
}
