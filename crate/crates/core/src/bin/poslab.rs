//! Command-line front end.
//!
//! Exit codes: 0 smooth (or success), 10 singular, 11 not on the variety,
//! 2 bad input, 70 internal disagreement, 74 cache or i/o failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use poslab::atomic::{atomic_witness, children_with_empty, generate_atomic, is_atomic, structural_atomic_check};
use poslab::equiv::{ajs_class_cells, ajs_class_roots_in_order, random_linear_extension, specialize};
use poslab::io::{parse_any_siteswap, parse_column_set, parse_one_line};
use poslab::permcore::{contains_point, window_from_siteswap, ColumnSet, PositroidPair, Siteswap};
use poslab::pipedream::{bottom_pd, contract_pd, delete_pd, enumerate, to_json, top_pd, PipeDream, Reduction};
use poslab::render::{to_svg, to_text};
use poslab::schubert::{schubert_smooth_at, SchubertStatus};
use poslab::shape::strip;
use poslab::smooth::{smooth_everywhere, smooth_with, Method, Status};
use poslab::survey::{run_survey, summarize, summary_table};
use poslab::Error;

/// `println!` that stops quietly when stdout is closed.
macro_rules! say {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

#[derive(Parser)]
#[command(name = "poslab", version, about = "Smoothness of positroid varieties at fixed points")]
struct Cli {
    /// Worker threads for parallel work (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct PairArgs {
    /// Siteswap (`340362`, `3,4,0,3,6,2`) or window (`g:4,6,3,7,11,8`).
    #[arg(long)]
    f: String,
    /// Fixed point as a k-subset of columns, e.g. `{1,2,5}`.
    #[arg(long)]
    lambda: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Rect,
    Count,
    Topbottom,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Fmt {
    Ascii,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Bottom,
    Top,
    All,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print a bounded affine permutation as siteswap and window.
    Convert {
        input: Option<String>,
        #[arg(long)]
        f: Option<String>,
    },
    /// Decide smoothness at one fixed point, or at all of them without --lambda.
    Smooth {
        #[arg(long)]
        f: String,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long, value_enum, default_value = "rect")]
        method: MethodArg,
    },
    /// Classify every pair with n <= N, resuming from the cache.
    Survey {
        #[arg(long)]
        n: usize,
        /// Cache file (overridden by POSLAB_CACHE).
        #[arg(long)]
        resume: Option<PathBuf>,
        /// Write the summary table here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw pipe dreams of a pair.
    Render {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum, default_value = "ascii")]
        fmt: Fmt,
        #[arg(long, value_enum, default_value = "bottom")]
        pd: Which,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Delete column i (not in lambda).
    Del {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        i: usize,
    },
    /// Contract column i (in lambda).
    Contr {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        i: usize,
    },
    /// Atomicity and children of a pair, or the atomic pairs of Gr(k, 2k) with --k.
    Atomic {
        #[arg(long)]
        f: Option<String>,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Equivariant class as a sum over pipe dreams, and its specialization.
    Ajs {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Smoothness of the Schubert variety of w at v (v 321-avoiding).
    Schubert {
        #[arg(long)]
        w: String,
        #[arg(long)]
        v: String,
    },
}

enum Fail {
    Lib(Error),
    Usage(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

impl From<std::io::Error> for Fail {
    fn from(e: std::io::Error) -> Self {
        Fail::Lib(e.into())
    }
}

type Out = Result<u8, Fail>;

fn exit_for(e: &Error) -> u8 {
    match e {
        Error::PointNotOnVariety => 11,
        Error::InvariantViolation(_) | Error::CalibrationFailure(_) => 70,
        Error::CacheCorrupt { .. } | Error::Io(_) => 74,
        _ => 2,
    }
}

fn status_code(s: Status) -> u8 {
    match s {
        Status::Smooth => 0,
        Status::Singular => 10,
        Status::NotOnVariety => 11,
    }
}

fn pair_of(p: &PairArgs) -> Result<(Siteswap, ColumnSet), Error> {
    let f = parse_any_siteswap(&p.f)?;
    let lambda = parse_column_set(&p.lambda, f.n())?;
    PositroidPair::new(f.clone(), lambda.clone())?;
    Ok((f, lambda))
}

fn print_json(v: &impl serde::Serialize) {
    say!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn convert(input: Option<String>, f: Option<String>) -> Out {
    let s = input.or(f).ok_or_else(|| Fail::Usage("convert needs an input".into()))?;
    let f = parse_any_siteswap(&s)?;
    say!("siteswap {f}");
    say!("window   {}", window_from_siteswap(&f));
    say!("k {} n {}", f.k(), f.n());
    Ok(0)
}

fn smooth(f: &str, lambda: Option<&str>, method: MethodArg) -> Out {
    let f = parse_any_siteswap(f)?;
    let Some(lambda) = lambda else {
        let (ok, singular) = smooth_everywhere(&f)?;
        let singular: Vec<String> = singular.iter().map(|l| l.to_string()).collect();
        print_json(&json!({ "f": f, "smooth_everywhere": ok, "singular": singular }));
        return Ok(if ok { 0 } else { 10 });
    };
    let lambda = parse_column_set(lambda, f.n())?;
    PositroidPair::new(f.clone(), lambda.clone())?;
    let method = match method {
        MethodArg::Rect => Method::Rect,
        MethodArg::Count => Method::Count,
        MethodArg::Topbottom => Method::TopBottom,
        MethodArg::All => Method::All,
    };
    let v = smooth_with(&f, &lambda, method)?;
    print_json(&v);
    Ok(status_code(v.status))
}

fn survey(n: usize, resume: Option<PathBuf>, out: Option<PathBuf>) -> Out {
    let cache = std::env::var_os("POSLAB_CACHE")
        .map(PathBuf::from)
        .or(resume)
        .unwrap_or_else(|| PathBuf::from("poslab-survey.jsonl"));
    let outcome = run_survey(n, &cache)?;
    eprintln!("cache {}: {} reused, {} computed", cache.display(), outcome.reused, outcome.computed);
    let table = summary_table(&summarize(&outcome.records)?);
    match out {
        Some(p) => std::fs::write(p, table)?,
        None => say!("{}", table.trim_end()),
    }
    Ok(0)
}

fn numbered(path: &Path, i: usize) -> PathBuf {
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("pd");
    let name = match path.extension().and_then(|s| s.to_str()) {
        Some(ext) => format!("{stem}-{i}.{ext}"),
        None => format!("{stem}-{i}"),
    };
    path.with_file_name(name)
}

fn render(pair: &PairArgs, fmt: Fmt, which: Which, out: Option<PathBuf>) -> Out {
    let (f, lambda) = pair_of(pair)?;
    if !contains_point(&f, &lambda)? {
        return Err(Error::PointNotOnVariety.into());
    }
    let pds: Vec<PipeDream> = match which {
        Which::Bottom => vec![bottom_pd(&f, &lambda)?],
        Which::Top => vec![top_pd(&f, &lambda)?],
        Which::All => enumerate(&f, &lambda)?,
    };
    let draw = |pd: &PipeDream| match fmt {
        Fmt::Ascii => to_text(pd),
        Fmt::Svg => to_svg(pd),
    };
    let pics: Vec<String> = pds.iter().map(draw).collect::<Result<_, _>>()?;
    match (out, fmt) {
        (Some(path), Fmt::Svg) if pics.len() > 1 => {
            for (i, p) in pics.iter().enumerate() {
                std::fs::write(numbered(&path, i + 1), p)?;
            }
        }
        (Some(path), _) => std::fs::write(path, pics.join("\n"))?,
        (None, _) => say!("{}", pics.join("\n").trim_end()),
    }
    Ok(0)
}

fn reduction(pair: &PairArgs, i: usize, contract: bool) -> Out {
    let (f, lambda) = pair_of(pair)?;
    let r: Option<Reduction> = if contract { contract_pd(&f, &lambda, i)? } else { delete_pd(&f, &lambda, i)? };
    match r {
        None => print_json(&json!({ "empty": true })),
        Some(r) => print_json(&json!({
            "empty": false,
            "op": r.op.to_string(),
            "unreindexed": r.unreindexed,
            "f": r.pair.f,
            "lambda": r.pair.lambda,
            "pipe_dream": to_json(&r.child)?,
        })),
    }
    Ok(0)
}

fn atomic(f: Option<String>, lambda: Option<String>, k: Option<usize>) -> Out {
    if let Some(k) = k {
        let pairs: Vec<PositroidPair> = generate_atomic(k)?;
        print_json(&pairs);
        return Ok(0);
    }
    let (Some(f), Some(lambda)) = (f, lambda) else {
        return Err(Fail::Usage("atomic needs --f and --lambda, or --k".into()));
    };
    let (f, lambda) = pair_of(&PairArgs { f, lambda })?;
    if !contains_point(&f, &lambda)? {
        return Err(Error::PointNotOnVariety.into());
    }
    let pair = PositroidPair::new(f.clone(), lambda.clone())?;
    let status = smooth_with(&f, &lambda, Method::Rect)?.status;
    let mut kids = Vec::new();
    for (op, child) in children_with_empty(&pair)? {
        kids.push(match child {
            None => json!({ "op": op.to_string(), "empty": true }),
            Some(c) => json!({
                "op": op.to_string(),
                "empty": false,
                "pair": c.pair,
                "status": smooth_with(&c.pair.f, &c.pair.lambda, Method::Rect)?.status,
            }),
        });
    }
    print_json(&json!({
        "pair": pair,
        "status": status,
        "atomic": is_atomic(&pair)?,
        "structural": structural_atomic_check(&bottom_pd(&f, &lambda)?),
        "witness": atomic_witness(&pair)?,
        "children": kids,
    }));
    Ok(0)
}

fn ajs(pair: &PairArgs, seed: u64) -> Out {
    let (f, lambda) = pair_of(pair)?;
    if !contains_point(&f, &lambda)? {
        return Err(Error::PointNotOnVariety.into());
    }
    let cls = ajs_class_cells(&f, &lambda)?;
    say!("{}", cls.to_string().trim_end());
    let (m, l) = specialize(&cls, &lambda)?;
    say!("specialization: {m}·h^{l}");
    let shape = strip(lambda.k(), lambda.n(), &lambda)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let order = random_linear_extension(&shape, &mut rng);
    let (roots, _) = ajs_class_roots_in_order(&f, &lambda, &order)?;
    if roots.expand() != cls.expand() {
        return Err(Error::InvariantViolation(format!("root class in a random reading order (seed {seed}) differs")).into());
    }
    say!("root class agrees in a random reading order (seed {seed})");
    Ok(0)
}

fn schubert(w: &str, v: &str) -> Out {
    let w = parse_one_line(w)?;
    let v = parse_one_line(v)?;
    let verdict = schubert_smooth_at(&w, &v)?;
    print_json(&verdict);
    Ok(match verdict.status {
        SchubertStatus::Smooth => 0,
        SchubertStatus::Singular => 10,
        SchubertStatus::NotContained => 11,
    })
}

fn run(cli: Cli) -> Out {
    if let Some(j) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .map_err(|e| Fail::Usage(e.to_string()))?;
    }
    match cli.cmd {
        Cmd::Convert { input, f } => convert(input, f),
        Cmd::Smooth { f, lambda, method } => smooth(&f, lambda.as_deref(), method),
        Cmd::Survey { n, resume, out } => survey(n, resume, out),
        Cmd::Render { pair, fmt, pd, out } => render(&pair, fmt, pd, out),
        Cmd::Del { pair, i } => reduction(&pair, i, false),
        Cmd::Contr { pair, i } => reduction(&pair, i, true),
        Cmd::Atomic { f, lambda, k } => atomic(f, lambda, k),
        Cmd::Ajs { pair } => ajs(&pair, cli.seed),
        Cmd::Schubert { w, v } => schubert(&w, &v),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(Fail::Usage(msg)) => {
            eprintln!("poslab: {msg}");
            ExitCode::from(2)
        }
        Err(Fail::Lib(e)) => {
            eprintln!("poslab: {e}");
            ExitCode::from(exit_for(&e))
        }
    }
}
