mod report;

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use thiserror::Error;

use qec_core::classify::{
    classify_with, enumerate_connected, sieve_trace_with, SieveContext, MAX_ENUMERATION_ORDER,
};
use qec_core::embedding::EMBEDDING_TOL;
use qec_core::{
    build_family, distance_matrix, embed, family_closed_form, is_cnd_exact, load_catalog,
    parse_graph6, qec, verify_embedding, Catalog, FamilySpec, Graph, Graph6Error,
};

use report::{fmt_sig, Counts, Record, Report};

#[derive(Parser, Debug)]
#[command(
    name = "qec",
    version,
    about = "Quadratic embedding constants of small connected graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the quadratic embedding constant and its certificate data.
    Compute {
        /// graph6 string, or `-` to read from stdin
        graph: String,
        /// Add the exact rational QE verdict.
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        json: bool,
    },
    /// QE / primary / non-primary verdict with witness.
    Classify {
        graph: String,
        #[arg(long)]
        json: bool,
    },
    /// Classify every connected graph on `n` vertices.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Label records with ids from a graph6 catalog.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Closed-form value next to the engine value, e.g. `path:6`, `wedge:5,2`.
    Family { spec: String },
    /// Coordinates of a quadratic embedding as CSV.
    Embed {
        graph: String,
        /// Verify the embedding and report the largest defect on stderr.
        #[arg(long)]
        check: bool,
    },
    /// Look a graph up in a catalog of `id graph6` lines.
    Identify {
        graph: String,
        #[arg(long)]
        catalog: PathBuf,
    },
    /// Replay the six-step sieve.
    Trace { graph: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Input(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<qec_core::Error> for CliError {
    fn from(e: qec_core::Error) -> Self {
        match e {
            qec_core::Error::BadParams(_) => CliError::Usage(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn read_graph(arg: &str) -> CliResult<(String, Graph)> {
    let text = if arg == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Usage(format!("reading stdin: {e}")))?;
        buf.lines()
            .find(|l| !l.trim().is_empty())
            .unwrap_or("")
            .trim()
            .to_string()
    } else {
        arg.trim().to_string()
    };
    let g = parse_graph6(&text).map_err(|e| match e {
        Graph6Error::OrderTooLarge(_) => CliError::Input(format!("{text:?}: {e}")),
        _ => CliError::Usage(format!("{text:?}: {e}")),
    })?;
    Ok((text, g))
}

fn read_catalog(path: &PathBuf) -> CliResult<Catalog> {
    load_catalog(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn require_connected(g: &Graph) -> CliResult<()> {
    if g.order() < 2 {
        return Err(qec_core::Error::OrderOne.into());
    }
    if !g.is_connected() {
        return Err(qec_core::Error::Disconnected.into());
    }
    Ok(())
}

fn single_report(input: String, g: &Graph) -> CliResult<Report> {
    let ctx = SieveContext::new(g.order())?;
    let r = classify_with(&ctx, g)?;
    let summary = Counts::from(qec_core::Summary::of(std::slice::from_ref(&r)));
    Ok(Report::new(
        input,
        vec![Record::new(&r, &ctx, None)],
        summary,
    ))
}

fn compute(arg: &str, exact: bool, json: bool) -> CliResult<()> {
    let (text, g) = read_graph(arg)?;
    require_connected(&g)?;
    if json {
        println!("{}", single_report(text, &g)?.to_json());
        return Ok(());
    }
    let r = qec(&g)?;
    println!("graph6: {text}");
    println!("n: {} edges: {}", g.order(), g.edge_count());
    println!("value: {}", fmt_sig(r.value));
    println!("verdict: {}", if r.value <= 1e-9 { "QE" } else { "non-QE" });
    println!("mu: {}", fmt_sig(r.mu));
    println!("residual: {:.3e}", r.residual);
    println!("lambda1: {}", fmt_sig(r.lambda1));
    println!("lambda2: {}", fmt_sig(r.lambda2));
    let f: Vec<String> = r.maximizer.iter().map(|&x| fmt_sig(x)).collect();
    println!("maximizer: {}", f.join(" "));
    if exact {
        let qe = is_cnd_exact(&g)?;
        println!("exact: {}", if qe { "QE" } else { "non-QE" });
        if qe != (r.value <= 1e-9) {
            return Err(CliError::Internal(format!(
                "numeric value {} disagrees with exact test",
                r.value
            )));
        }
    }
    Ok(())
}

fn classify_cmd(arg: &str, json: bool) -> CliResult<()> {
    let (text, g) = read_graph(arg)?;
    require_connected(&g)?;
    let report = single_report(text, &g)?;
    if json {
        println!("{}", report.to_json());
        return Ok(());
    }
    let r = &report.records[0];
    println!("verdict: {}", r.verdict);
    match &r.witness {
        Some(w) => println!(
            "witness: {}",
            w.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
        ),
        None => println!("witness: none"),
    }
    println!("qec: {}", fmt_sig(r.qec));
    println!("step: {}", r.sieve_step);
    Ok(())
}

fn enumerate(
    n: usize,
    out: Option<PathBuf>,
    format: Option<Format>,
    catalog: Option<PathBuf>,
) -> CliResult<()> {
    if !(2..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(CliError::Usage(format!(
            "--n must lie in 2..={MAX_ENUMERATION_ORDER}"
        )));
    }
    let catalog = catalog.as_ref().map(read_catalog).transpose()?;
    let ctx = SieveContext::new(n)?;
    let graphs = enumerate_connected(n)?;
    let mut classified: Vec<_> = graphs
        .par_iter()
        .map(|g| classify_with(&ctx, g))
        .collect::<Result<_, _>>()?;
    classified.sort_by_key(|r| r.cert);
    let summary = qec_core::Summary::of(&classified);
    let records = classified
        .iter()
        .map(|r| Record::new(r, &ctx, catalog.as_ref()))
        .collect();
    let report = Report::new(
        format!("all connected graphs on {n} vertices"),
        records,
        summary.into(),
    );
    let render = |f: Format| -> CliResult<String> {
        match f {
            Format::Json => Ok(report.to_json() + "\n"),
            Format::Csv => report
                .to_csv()
                .map_err(|e| CliError::Internal(e.to_string())),
        }
    };
    match (out, format) {
        (Some(path), f) => {
            let body = render(f.unwrap_or(Format::Json))?;
            fs::write(&path, body)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            println!("{summary}");
        }
        (None, Some(f)) => print!("{}", render(f)?),
        (None, None) => println!("{summary}"),
    }
    Ok(())
}

fn family(spec: &str) -> CliResult<()> {
    let spec: FamilySpec = spec.parse()?;
    spec.validate()?;
    let cf = family_closed_form(&spec)?;
    let g = build_family(&spec)?;
    let engine = qec(&g)?.value;
    let delta = (cf.value - engine).abs();
    println!("family: {spec}");
    println!("expression: {}", cf.expression);
    println!("formula: {}", fmt_sig(cf.value));
    println!("engine: {}", fmt_sig(engine));
    println!("delta: {delta:.3e}");
    if delta > 1e-8 {
        return Err(CliError::Internal(format!(
            "closed form and engine differ by {delta:e}"
        )));
    }
    Ok(())
}

fn embed_cmd(arg: &str, check: bool) -> CliResult<()> {
    let (_, g) = read_graph(arg)?;
    require_connected(&g)?;
    let e = embed(&g)?;
    let mut header = vec!["vertex".to_string()];
    header.extend((1..=e.dim).map(|k| format!("x{k}")));
    println!("{}", header.join(","));
    for (v, p) in e.coords.iter().enumerate() {
        let mut row = vec![v.to_string()];
        row.extend(p.iter().map(|&x| fmt_sig(x)));
        println!("{}", row.join(","));
    }
    if check {
        let defect = verify_embedding(&e, &distance_matrix(&g)?)?;
        eprintln!("defect: {defect:.3e}");
        if defect > EMBEDDING_TOL {
            return Err(CliError::Internal(format!(
                "embedding defect {defect:e} exceeds {EMBEDDING_TOL:e}"
            )));
        }
    }
    Ok(())
}

fn identify_cmd(arg: &str, catalog: &PathBuf) -> CliResult<()> {
    let (text, g) = read_graph(arg)?;
    let catalog = read_catalog(catalog)?;
    match catalog.identify(&g) {
        Some(id) => {
            println!("{id}");
            Ok(())
        }
        None => Err(CliError::Input(format!("{text} is not in the catalog"))),
    }
}

fn trace(arg: &str) -> CliResult<()> {
    let (_, g) = read_graph(arg)?;
    require_connected(&g)?;
    let ctx = SieveContext::new(g.order())?;
    let t = sieve_trace_with(&ctx, &g)?;
    for e in &t.entries {
        println!("{}: {}", e.step, e.outcome);
    }
    println!("verdict: {} (decided at {})", t.verdict, t.deciding_step);
    Ok(())
}

fn configure_threads() -> CliResult<()> {
    let Ok(raw) = std::env::var("QEC_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw.trim().parse().ok().filter(|&t| t > 0).ok_or_else(|| {
        CliError::Usage(format!(
            "QEC_THREADS must be a positive integer, got {raw:?}"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Internal(e.to_string()))
}

fn run(cli: Cli) -> CliResult<()> {
    configure_threads()?;
    match cli.command {
        Command::Compute { graph, exact, json } => compute(&graph, exact, json),
        Command::Classify { graph, json } => classify_cmd(&graph, json),
        Command::Enumerate {
            n,
            out,
            format,
            catalog,
        } => enumerate(n, out, format, catalog),
        Command::Family { spec } => family(&spec),
        Command::Embed { graph, check } => embed_cmd(&graph, check),
        Command::Identify { graph, catalog } => identify_cmd(&graph, &catalog),
        Command::Trace { graph } => trace(&graph),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
