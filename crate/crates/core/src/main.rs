use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use sigdim::embedder::{dimension_bound, embed_with_r, EmbedError, Embedding};
use sigdim::graph::{parse_graph, Graph};
use sigdim::harness::{run_exhaustive, run_fuzz, FuzzConfig};
use sigdim::pseudo::default_r;
use sigdim::rational::{from_json_vec, is_positive, parse_rational, JsonRational, Rational};
use sigdim::sig::{compute_sig, oracle_embed_2ia, PointSet};
use sigdim::verifier::{verify, VerificationReport};

const EXIT_INPUT: u8 = 1;
const EXIT_VERIFY: u8 = 2;
const EXIT_PIPELINE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "sigdim",
    version,
    about = "Exact sup-norm sphere-of-influence embeddings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Embed a graph and verify the result.
    Embed {
        graph: PathBuf,
        /// Write the embedding JSON here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Global radius, e.g. `36` or `7/3`. Defaults to 12n.
        #[arg(long = "r")]
        r: Option<String>,
        /// Also write the verification report here.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Also write the factor, pick sequence and radius schedule here.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Print the sphere-of-influence graph of a point set.
    Sig { points: PathBuf },
    /// Check a point set against a graph and the pipeline's radius schedule.
    Verify {
        graph: PathBuf,
        points: PathBuf,
        #[arg(long = "r")]
        r: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Print the rows of 2I + A and check that they realize the graph.
    Oracle { graph: PathBuf },
    /// Embed and verify seeded random graphs.
    Fuzz {
        #[arg(long, default_value_t = 8)]
        n_min: usize,
        #[arg(long, default_value_t = 20)]
        n_max: usize,
        /// Edge probabilities, comma separated, cycled over the cases.
        #[arg(long, default_value = "1/2", value_delimiter = ',')]
        p: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Directory for shrunk counterexample bundles.
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Embed and verify every graph without isolated vertices up to `max_n`.
    Exhaustive {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn input_err(message: impl ToString) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.to_string(),
    }
}

type CmdResult = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_err(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| input_err(format!("{}: {e}", path.display())))
}

fn to_json(value: &impl Serialize) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    let g = parse_graph(&read(path)?).map_err(|e| input_err(format!("{}: {e}", path.display())))?;
    g.check_pipeline_input()
        .map_err(|e| input_err(format!("{}: {e}", path.display())))?;
    Ok(g)
}

fn parse_r(r: Option<&str>, n: usize) -> Result<Rational, Failure> {
    match r {
        None => Ok(default_r(n)),
        Some(s) => {
            let x = parse_rational(s).map_err(input_err)?;
            if !is_positive(&x) {
                return Err(input_err(format!("--r must be positive, got {s}")));
            }
            Ok(x)
        }
    }
}

/// Reads `coords` (and `r`, when present) from an embedding JSON object, or
/// a bare array of points.
fn load_points(path: &Path) -> Result<(Vec<Vec<Rational>>, Option<Rational>), Failure> {
    let bad = |e: serde_json::Error| input_err(format!("{}: {e}", path.display()));
    let value: Value = serde_json::from_str(&read(path)?).map_err(bad)?;
    let (coords, r) = match value {
        Value::Object(mut obj) => {
            let coords = obj
                .remove("coords")
                .ok_or_else(|| input_err(format!("{}: no `coords` field", path.display())))?;
            let r = obj
                .remove("r")
                .map(serde_json::from_value::<JsonRational>)
                .transpose()
                .map_err(bad)?;
            (coords, r.map(|x| x.0))
        }
        other => (other, None),
    };
    let coords: Vec<Vec<JsonRational>> = serde_json::from_value(coords).map_err(bad)?;
    Ok((coords.iter().map(|c| from_json_vec(c)).collect(), r))
}

fn pipeline_failure(e: EmbedError) -> Failure {
    let code = if matches!(e, EmbedError::Input(_)) {
        EXIT_INPUT
    } else {
        EXIT_PIPELINE
    };
    Failure {
        code,
        message: format!("{} diagnostic: {e}", e.stage()),
    }
}

fn verified(g: &Graph, e: &Embedding) -> Result<VerificationReport, Failure> {
    verify(g, e).map_err(input_err)
}

fn summary_line(rep: &VerificationReport) -> String {
    let refined = rep
        .bound
        .refined
        .map(|b| format!(", refined {b}"))
        .unwrap_or_default();
    format!(
        "n = {}, d = {}, bound {}{refined}, verdict {}",
        rep.n,
        rep.d,
        rep.bound.general,
        if rep.passed() { "pass" } else { "fail" }
    )
}

fn verdict_code(rep: &VerificationReport) -> u8 {
    if rep.passed() {
        0
    } else {
        EXIT_VERIFY
    }
}

fn cmd_embed(
    graph: &Path,
    output: Option<&Path>,
    r: Option<&str>,
    report: Option<&Path>,
    trace: Option<&Path>,
) -> CmdResult {
    let g = load_graph(graph)?;
    let r = parse_r(r, g.n())?;
    let e = embed_with_r(&g, r).map_err(pipeline_failure)?;
    let rep = verified(&g, &e)?;
    let json = to_json(&e.to_json());
    match output {
        Some(path) => {
            write(path, &json)?;
            println!("{}", summary_line(&rep));
        }
        None => {
            print!("{json}");
            eprintln!("{}", summary_line(&rep));
        }
    }
    if let Some(path) = report {
        write(path, &to_json(&rep))?;
    }
    if let Some(path) = trace {
        write(path, &to_json(&e.trace()))?;
    }
    for d in &rep.diagnostics {
        eprintln!("{d}");
    }
    Ok(verdict_code(&rep))
}

fn cmd_sig(points: &Path) -> CmdResult {
    let (coords, _) = load_points(points)?;
    let ps = PointSet::new(coords).map_err(input_err)?;
    print!("{}", compute_sig(&ps).to_edge_list());
    Ok(0)
}

fn cmd_verify(graph: &Path, points: &Path, r: Option<&str>, format: Format) -> CmdResult {
    let g = load_graph(graph)?;
    let (coords, file_r) = load_points(points)?;
    let r = match (r, file_r) {
        (Some(_), _) | (None, None) => parse_r(r, g.n())?,
        (None, Some(x)) => x,
    };
    let e = embed_with_r(&g, r).map_err(pipeline_failure)?;
    let e = e.with_coords(coords).map_err(input_err)?;
    let rep = verified(&g, &e)?;
    match format {
        Format::Json => print!("{}", to_json(&rep)),
        Format::Text => {
            println!("{}", summary_line(&rep));
            rep.diagnostics.iter().for_each(|d| println!("{d}"));
        }
    }
    Ok(verdict_code(&rep))
}

#[derive(Serialize)]
struct OracleJson {
    n: usize,
    d: usize,
    realizes: bool,
    coords: Vec<Vec<JsonRational>>,
}

fn cmd_oracle(graph: &Path) -> CmdResult {
    let g = load_graph(graph)?;
    let ps = oracle_embed_2ia(&g).map_err(input_err)?;
    let realizes = compute_sig(&ps) == g;
    let out = OracleJson {
        n: g.n(),
        d: ps.dim(),
        realizes,
        coords: ps
            .points()
            .iter()
            .map(|p| p.iter().copied().map(JsonRational).collect())
            .collect(),
    };
    print!("{}", to_json(&out));
    Ok(if realizes { 0 } else { EXIT_VERIFY })
}

fn write_bundles(dir: &Path, bundles: &[sigdim::harness::Bundle]) -> Result<(), Failure> {
    fs::create_dir_all(dir).map_err(|e| input_err(format!("{}: {e}", dir.display())))?;
    for (i, b) in bundles.iter().enumerate() {
        write(&dir.join(format!("bundle-{i}.json")), &to_json(b))?;
        write(&dir.join(format!("bundle-{i}.graph")), &b.graph)?;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_fuzz(
    n_min: usize,
    n_max: usize,
    p: &[String],
    seed: u64,
    count: usize,
    out_dir: Option<&Path>,
    format: Format,
) -> CmdResult {
    let p = p
        .iter()
        .map(|s| parse_rational(s).map_err(input_err))
        .collect::<Result<Vec<_>, _>>()?;
    let cfg = FuzzConfig {
        n_min,
        n_max,
        p,
        seed,
        count,
    };
    let s = run_fuzz(&cfg).map_err(input_err)?;
    if let Some(dir) = out_dir {
        write_bundles(dir, &s.bundles)?;
    }
    match format {
        Format::Json => print!("{}", to_json(&s)),
        Format::Text => {
            println!(
                "{} pass, {} fail, {} bound violations",
                s.pass, s.fail, s.bound_violations
            );
            for (key, c) in &s.failures {
                println!("  {key}: {c}");
            }
            println!("dimensions:");
            for (n, hist) in &s.histogram {
                let b = dimension_bound(*n);
                let cells: Vec<String> = hist.iter().map(|(d, c)| format!("d={d}:{c}")).collect();
                println!("  n={n} (bound {}) {}", b.general, cells.join(" "));
            }
            println!("coverage:");
            print_coverage(&s.coverage);
        }
    }
    Ok(0)
}

fn print_coverage(cov: &sigdim::harness::Coverage) {
    for (key, c) in cov {
        println!("  {key}: {c}");
    }
}

fn cmd_exhaustive(max_n: usize, out_dir: Option<&Path>, format: Format) -> CmdResult {
    let s = run_exhaustive(max_n).map_err(input_err)?;
    if let Some(dir) = out_dir {
        write_bundles(dir, &s.bundles)?;
    }
    match format {
        Format::Json => print!("{}", to_json(&s)),
        Format::Text => {
            for (n, t) in &s.by_n {
                println!(
                    "n={n}: {} graphs, {} pass, {} verify fail, {} diagnostic, oracle {}/{}, max d {}",
                    t.graphs, t.pass, t.verify_fail, t.diagnostic, t.oracle_ok, t.graphs, t.max_d
                );
            }
            for (key, c) in &s.failures {
                println!("  {key}: {c}");
            }
            println!("coverage:");
            print_coverage(&s.coverage);
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Embed {
            graph,
            output,
            r,
            report,
            trace,
        } => cmd_embed(
            graph,
            output.as_deref(),
            r.as_deref(),
            report.as_deref(),
            trace.as_deref(),
        ),
        Command::Sig { points } => cmd_sig(points),
        Command::Verify {
            graph,
            points,
            r,
            format,
        } => cmd_verify(graph, points, r.as_deref(), *format),
        Command::Oracle { graph } => cmd_oracle(graph),
        Command::Fuzz {
            n_min,
            n_max,
            p,
            seed,
            count,
            out_dir,
            format,
        } => cmd_fuzz(
            *n_min,
            *n_max,
            p,
            *seed,
            *count,
            out_dir.as_deref(),
            *format,
        ),
        Command::Exhaustive {
            max_n,
            out_dir,
            format,
        } => cmd_exhaustive(*max_n, out_dir.as_deref(), *format),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
