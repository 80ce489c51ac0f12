//! polycut — analyze, verify, and construct 3-connected planar graphs.
//!
//! Three subcommands:
//!   analyze    read graphs (planar_code file or a builtin name) and print
//!              one record per graph: cut structure, spanning cycle/path
//!              existence, toughness invariants.
//!   verify     exhaustively check a claim over the internally generated
//!              corpus (or externally supplied seed triangulations).
//!   construct  emit named graphs or whole generated families as
//!              planar_code.
//!
//! Exit codes: 0 clean, 1 a verified claim found a counterexample, 2 usage
//! or input errors.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use polycut::code;
use polycut::construct;
use polycut::corpus::{self, CorpusRecord, RecordOptions, VerifyConfig};
use polycut::cuts;
use polycut::embed::PlanarGraph;
use polycut::oracle;
use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "polycut", version, about = "3-connected planar graph analysis toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze graphs and print one record per graph.
    Analyze(AnalyzeArgs),
    /// Exhaustively verify a claim over a generated corpus.
    Verify(VerifyArgs),
    /// Emit named graphs or generated families as planar_code.
    Construct(ConstructArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// planar_code file, or a builtin: k4, herschel, double-wheel:N,
    /// non-traceable:D, triangulations:N
    input: String,
    /// Sort records by canonical code.
    #[arg(long)]
    sort: bool,
    /// Cross-check records against brute-force oracles (cut enumeration on
    /// every graph; spanning cycle/path by permutation for n <= 9).
    #[arg(long)]
    oracle: bool,
    /// Skip the exponential toughness fields.
    #[arg(long)]
    no_toughness: bool,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Text,
}

#[derive(Args)]
struct VerifyArgs {
    /// Claim to check: ham3cuts, trace4cuts, ham5cuts, trace7cuts,
    /// tough5cuts, scatter7cuts, cutbound
    claim: String,
    /// Largest order to generate (default: the claim's own).
    #[arg(long)]
    max_n: Option<usize>,
    /// Override the cut-count range, as lo:hi.
    #[arg(long)]
    cuts: Option<String>,
    /// Walk these seed triangulations (planar_code file) instead of
    /// generating internally.
    #[arg(long)]
    seeds: Option<PathBuf>,
    /// Worker threads (default: POLYCUT_THREADS or 1).
    #[arg(long)]
    threads: Option<usize>,
    /// Disable the spanning-cycle cache carried along removal chains.
    #[arg(long)]
    no_cache: bool,
    /// Where to write counterexamples as planar_code (default:
    /// <claim>.counterexamples in the working directory).
    #[arg(long)]
    counterexamples: Option<PathBuf>,
}

#[derive(Args)]
struct ConstructArgs {
    /// What to build: k4, herschel, double-wheel:N, non-traceable:D,
    /// triangulations:N, polyhedra:N
    name: String,
    /// Restrict polyhedra:N output to this cut-count range, as lo:hi.
    #[arg(long)]
    cuts: Option<String>,
    /// Output file (default: stdout).
    #[arg(long, short)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Analyze(a) => cmd_analyze(a),
        Command::Verify(v) => cmd_verify(v),
        Command::Construct(c) => cmd_construct(c),
    };
    match outcome {
        Ok(clean) => {
            if clean {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            // A consumer like `head` closing stdout early is not a failure.
            if e.downcast_ref::<std::io::Error>()
                .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
            {
                return ExitCode::SUCCESS;
            }
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Parse "lo:hi" into a cut range.
fn parse_cut_range(s: &str) -> Result<(usize, usize)> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| anyhow!("cut range must be lo:hi, got {s:?}"))?;
    let lo: usize = lo.parse().with_context(|| format!("bad lower bound {lo:?}"))?;
    let hi: usize = hi.parse().with_context(|| format!("bad upper bound {hi:?}"))?;
    if lo > hi {
        bail!("empty cut range {lo}:{hi}");
    }
    Ok((lo, hi))
}

/// Resolve a builtin graph-source name. `name[:param]` syntax.
fn builtin_graphs(name: &str) -> Option<Result<Vec<PlanarGraph>>> {
    let (head, param) = match name.split_once(':') {
        Some((h, p)) => (h, Some(p)),
        None => (name, None),
    };
    let need = |p: Option<&str>| -> Result<usize> {
        p.ok_or_else(|| anyhow!("{head} needs a numeric parameter, e.g. {head}:8"))?
            .parse::<usize>()
            .map_err(|e| anyhow!("bad parameter for {head}: {e}"))
    };
    match head {
        "k4" => Some(Ok(vec![construct::k4()])),
        "herschel" => Some(Ok(vec![construct::herschel()])),
        "double-wheel" => Some(
            need(param).and_then(|n| Ok(vec![construct::double_wheel(n)?])),
        ),
        "non-traceable" => Some(
            need(param).and_then(|d| Ok(vec![construct::non_traceable_family(d)?])),
        ),
        "triangulations" => Some(need(param).and_then(|n| Ok(construct::generate_triangulations(n)?))),
        _ => None,
    }
}

fn load_graphs(input: &str) -> Result<Vec<PlanarGraph>> {
    if let Some(built) = builtin_graphs(input) {
        return built;
    }
    let bytes = fs::read(input).with_context(|| format!("reading {input}"))?;
    code::read_planar_code(&bytes).map_err(|e| anyhow!("{input}: {e}"))
}

const CSV_HEADER: &str =
    "code,n,m,cuts,trivial_cuts,hamiltonian,traceable,one_tough,scattering,nodes_expanded";

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn record_csv(r: &CorpusRecord) -> String {
    let opt_bool = |b: Option<bool>| b.map(|v| v.to_string()).unwrap_or_default();
    let opt_i32 = |v: Option<i32>| v.map(|v| v.to_string()).unwrap_or_default();
    format!(
        "{},{},{},{},{},{},{},{},{},{}",
        hex(&r.code),
        r.n,
        r.m,
        r.cut_count,
        r.trivial_cut_count,
        r.hamiltonian,
        r.traceable,
        opt_bool(r.one_tough),
        opt_i32(r.scattering),
        r.nodes_expanded
    )
}

fn record_text(r: &CorpusRecord) -> String {
    let tough = match r.one_tough {
        Some(t) => format!("one_tough={t}"),
        None => "one_tough=skipped".into(),
    };
    let scatter = match r.scattering {
        Some(s) => format!("scattering={s}"),
        None => "scattering=undefined".into(),
    };
    format!(
        "n={} m={} cuts={} trivial={} hamiltonian={} traceable={} {} {} nodes={} code={}",
        r.n,
        r.m,
        r.cut_count,
        r.trivial_cut_count,
        r.hamiltonian,
        r.traceable,
        tough,
        scatter,
        r.nodes_expanded,
        hex(&r.code)
    )
}

fn cross_check(g: &PlanarGraph, r: &CorpusRecord) -> Result<()> {
    let cuts_by_deletion = oracle::cut_triples_by_deletion(g);
    if cuts_by_deletion.len() != r.cut_count {
        bail!(
            "oracle mismatch on {}: {} cuts by face criterion, {} by deletion",
            hex(&r.code),
            r.cut_count,
            cuts_by_deletion.len()
        );
    }
    if g.n() <= 9 {
        if oracle::is_hamiltonian_by_permutation(g) != r.hamiltonian {
            bail!("oracle mismatch on {}: spanning cycle", hex(&r.code));
        }
        if oracle::is_traceable_by_permutation(g) != r.traceable {
            bail!("oracle mismatch on {}: spanning path", hex(&r.code));
        }
    }
    Ok(())
}

fn cmd_analyze(a: AnalyzeArgs) -> Result<bool> {
    let graphs = load_graphs(&a.input)?;
    let opts = RecordOptions {
        toughness_cap: if a.no_toughness {
            None
        } else {
            RecordOptions::default().toughness_cap
        },
    };
    let mut records: Vec<(PlanarGraph, CorpusRecord)> = graphs
        .into_iter()
        .map(|g| {
            let report = cuts::enumerate_3cuts(&g)
                .map_err(|e| anyhow!("input graph is not a polyhedron: {e}"))?;
            let rec = CorpusRecord::assemble(&g, &report, &opts);
            Ok((g, rec))
        })
        .collect::<Result<_>>()?;
    if a.sort {
        records.sort_by(|x, y| x.1.code.cmp(&y.1.code));
    }
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if a.format == Format::Csv {
        writeln!(out, "{CSV_HEADER}")?;
    }
    for (g, rec) in &records {
        if a.oracle {
            cross_check(g, rec)?;
        }
        let line = match a.format {
            Format::Csv => record_csv(rec),
            Format::Text => record_text(rec),
        };
        writeln!(out, "{line}")?;
    }
    Ok(true)
}

fn thread_count(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("POLYCUT_THREADS")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(1)
    .max(1)
}

fn cmd_verify(v: VerifyArgs) -> Result<bool> {
    let spec = corpus::claim_by_id(&v.claim).ok_or_else(|| {
        anyhow!(
            "unknown claim {:?}; valid: {}",
            v.claim,
            corpus::CLAIMS
                .iter()
                .map(|c| c.id)
                .collect::<Vec<_>>()
                .join(", ")
        )
    })?;
    let (lo, hi) = match &v.cuts {
        Some(s) => parse_cut_range(s)?,
        None => (0, spec.hi),
    };
    let max_n = v.max_n.unwrap_or(spec.max_n);
    let cfg = VerifyConfig {
        max_n,
        lo,
        hi,
        threads: thread_count(v.threads),
        use_cache: !v.no_cache,
    };
    let summary = match &v.seeds {
        None => corpus::run_claim(spec.id, spec.kind, &cfg).map_err(|e| {
            anyhow!("{e}; orders above the internal generation cap need --seeds")
        })?,
        Some(path) => {
            let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
            let seeds =
                code::read_planar_code(&bytes).map_err(|e| anyhow!("{}: {e}", path.display()))?;
            for (i, t) in seeds.iter().enumerate() {
                if !t.faces().iter().all(|f| f.is_triangle()) || !t.is_three_connected() {
                    bail!("seed {i} is not a 3-connected triangulation");
                }
            }
            corpus::run_claim_seeded(spec.id, spec.kind, &seeds, &cfg)
        }
    };
    let hi_text = if summary.cut_range.1 == usize::MAX {
        "inf".to_string()
    } else {
        summary.cut_range.1.to_string()
    };
    println!(
        "claim={} n={}..{} cuts={}..{} graphs={} counterexamples={} wall_ms={} visited={} cache_hits={} searches={}",
        summary.claim,
        summary.n_range.0,
        summary.n_range.1,
        summary.cut_range.0,
        hi_text,
        summary.graphs_tested,
        summary.counterexamples.len(),
        summary.wall_ms,
        summary.expand.visited,
        summary.run.cache_hits + summary.run.inherited_nonham,
        summary.run.searches,
    );
    if summary.passed() {
        return Ok(true);
    }
    // Canonical codes are valid planar_code records, so the dump is a
    // readable corpus of the violating graphs.
    let path = v
        .counterexamples
        .unwrap_or_else(|| PathBuf::from(format!("{}.counterexamples", summary.claim)));
    let mut bytes = Vec::from(code::PLANAR_CODE_HEADER.as_slice());
    for c in &summary.counterexamples {
        bytes.extend_from_slice(c);
    }
    fs::write(&path, bytes).with_context(|| format!("writing {}", path.display()))?;
    eprintln!(
        "{} counterexamples written to {}",
        summary.counterexamples.len(),
        path.display()
    );
    Ok(false)
}

fn cmd_construct(c: ConstructArgs) -> Result<bool> {
    let (head, _) = c.name.split_once(':').unwrap_or((c.name.as_str(), ""));
    let graphs = if head == "polyhedra" {
        let n: usize = c
            .name
            .split_once(':')
            .ok_or_else(|| anyhow!("polyhedra needs an order, e.g. polyhedra:8"))?
            .1
            .parse()
            .context("bad order for polyhedra")?;
        let (lo, hi) = match &c.cuts {
            Some(s) => parse_cut_range(s)?,
            None => (0, usize::MAX),
        };
        corpus::collect_order(n, lo, hi)?
            .into_iter()
            .map(|(g, _)| g)
            .collect()
    } else {
        builtin_graphs(&c.name)
            .ok_or_else(|| anyhow!("unknown constructor {:?}", c.name))??
    };
    let bytes = code::write_planar_code(&graphs);
    match c.out {
        Some(path) => fs::write(&path, bytes).with_context(|| format!("writing {}", path.display()))?,
        None => std::io::stdout().write_all(&bytes)?,
    }
    Ok(true)
}
