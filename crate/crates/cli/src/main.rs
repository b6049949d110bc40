//! `hpd`: profile arithmetic, Plücker checks, proof replays and drawings.
//!
//! Exit status: 0 success, 1 a mathematical verdict came out false, 2 usage
//! or I/O error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use hpd_core::chessboard::{staircase_e, staircase_pi_s, staircase_pi_t, ChessboardSpec, Region};
use hpd_core::io::{profile_from_json, profile_to_json};
use hpd_core::prover::{check_ff_pi_s, check_ff_pi_t, check_generation, check_main_theorem, Phase, ProofTrace};
use hpd_core::render::{render_chessboard, render_profile_pair, render_trace, Format, RenderOptions, Style};
use hpd_core::synthesis::{
    builtin_examples, euler_h_consistency, find_example, intersect_decompositions, parse_examples,
    plucker_check, plucker_predict, ExampleRecord,
};
use hpd_core::Profile;

#[derive(Parser)]
#[command(name = "hpd", version, about = "Lefschetz profile calculus and chessboard proof replays")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a profile file against the profile invariants.
    Validate { profile: PathBuf },
    /// Write the dual profile.
    Dualize {
        profile: PathBuf,
        /// Output file; stdout when omitted.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Euler characteristics of a profile and of its dual.
    Euler { profile: PathBuf },
    /// Component reports for the two intersections.
    Intersect {
        #[command(flatten)]
        pair: Pair,
        /// Known χ(X_T); resolves χ(E).
        #[arg(long, allow_hyphen_values = true)]
        chi_xt: Option<i64>,
    },
    /// Plücker identity for a bundled example or explicit values.
    Plucker {
        #[arg(long, conflicts_with = "chi")]
        example: Option<String>,
        /// χ(X) χ(Y) χ(S) χ(T) χ(X_T) χ(Y_S).
        #[arg(long, num_args = 6, allow_hyphen_values = true, requires = "n")]
        chi: Option<Vec<i64>>,
        #[arg(long)]
        n: Option<i64>,
        /// Alternative example file in the bundled schema.
        #[arg(long)]
        examples: Option<PathBuf>,
    },
    /// Replay the proof obligations for one pair of profiles.
    Prove {
        #[command(flatten)]
        pair: Pair,
        /// Restrict to these phases (FF_piT, FF_piS, Generation_Step1, ...).
        #[arg(long, value_delimiter = ',')]
        phase: Vec<String>,
        /// Write the trace here; stdout when omitted.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Replay the proof over a parameter grid of generic profiles.
    Sweep {
        /// Range of i, `a..b` inclusive.
        #[arg(long = "i", default_value = "2..10")]
        i_range: String,
        #[arg(long = "l", default_value = "2..10")]
        l_range: String,
        /// Smallest N; defaults to max(i, l) + 1 per spec.
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long, default_value_t = 25)]
        n_max: usize,
        /// Worker threads; 0 uses all cores.
        #[arg(long, env = "HPD_JOBS", default_value_t = 0)]
        jobs: usize,
        /// Print one line per spec.
        #[arg(long)]
        verbose: bool,
    },
    /// Draw a profile, a chessboard or a proof trace.
    Render {
        #[command(subcommand)]
        target: RenderTarget,
    },
}

#[derive(Args, Clone)]
struct Pair {
    /// Profile of X.
    #[arg(long = "ix")]
    x: PathBuf,
    /// Profile of S.
    #[arg(long = "is")]
    s: PathBuf,
}

#[derive(Args, Clone)]
struct DrawOpts {
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// SVG pixels per cell.
    #[arg(long, default_value_t = 16)]
    cell_size: u32,
    /// Output file; stdout when omitted.
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Svg,
}

#[derive(Subcommand)]
enum RenderTarget {
    /// Lefschetz strip against its complementary dual.
    Profile {
        profile: PathBuf,
        #[command(flatten)]
        draw: DrawOpts,
    },
    /// Chessboard with optional highlights `pi_t:K`, `pi_s:K` or `e`, each
    /// optionally suffixed by `@style`.
    Chessboard {
        #[command(flatten)]
        pair: Pair,
        /// Region to shade; repeatable.
        #[arg(long)]
        highlight: Vec<String>,
        /// Always draw the C^L columns.
        #[arg(long)]
        cl: bool,
        #[command(flatten)]
        draw: DrawOpts,
    },
    /// Proof trace table, or the board with the Zig-Zag path as SVG.
    Trace {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        draw: DrawOpts,
    },
}

/// Mathematical verdict of a command; errors travel separately.
struct Verdict(bool);

fn read_profile(path: &Path) -> Result<Profile> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    profile_from_json(&text).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn read_spec(pair: &Pair) -> Result<ChessboardSpec> {
    let x = read_profile(&pair.x)?;
    let s = read_profile(&pair.s)?;
    ChessboardSpec::new(x, s).map_err(|e| anyhow!("{e}"))
}

fn emit(out: &Option<PathBuf>, bytes: &[u8]) -> Result<()> {
    match out {
        Some(p) => fs::write(p, bytes).with_context(|| format!("cannot write {}", p.display())),
        None => std::io::stdout().write_all(bytes).context("stdout"),
    }
}

fn draw_options(d: &DrawOpts) -> RenderOptions {
    RenderOptions {
        format: match d.format {
            FormatArg::Text => Format::Text,
            FormatArg::Svg => Format::Svg,
        },
        cell_size: d.cell_size,
        ..RenderOptions::default()
    }
}

/// Inclusive range `a..b`, `a..=b` or a single value.
fn parse_range(s: &str) -> Result<(usize, usize)> {
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.trim_start_matches('=')),
        None => (s, s),
    };
    let a: usize = a.trim().parse().with_context(|| format!("bad range `{s}`"))?;
    let b: usize = b.trim().parse().with_context(|| format!("bad range `{s}`"))?;
    if a > b {
        bail!("empty range `{s}`");
    }
    Ok((a, b))
}

fn parse_highlight(spec: &ChessboardSpec, h: &str) -> Result<(Region, Style)> {
    let (what, style) = match h.split_once('@') {
        Some((w, st)) => (w, Style::parse(st).ok_or_else(|| anyhow!("unknown style `{st}`"))?),
        None => (h, Style::Primary),
    };
    let region = match what.split_once(':') {
        Some(("pi_t", k)) => staircase_pi_t(k.parse()?, spec)?,
        Some(("pi_s", k)) => staircase_pi_s(k.parse()?, spec)?,
        None if what == "e" => staircase_e(spec),
        _ => bail!("unknown highlight `{h}`"),
    };
    Ok((region, style))
}

fn cmd_validate(path: &Path) -> Result<Verdict> {
    let p = read_profile(path)?;
    let report = p.validate();
    for w in &report.warnings {
        println!("warning: {w}");
    }
    for v in &report.violations {
        println!("violation: {v}");
    }
    if report.is_valid() {
        println!("{}: valid (i = {}, N = {})", p.name, p.len(), p.n);
    }
    Ok(Verdict(report.is_valid()))
}

fn cmd_euler(path: &Path) -> Result<Verdict> {
    let p = read_profile(path)?;
    p.ensure_valid()?;
    let d = p.dualize()?;
    let (amb, tot, dtot) = (p.euler_ambient(), p.euler_total(), d.euler_total());
    let n = p.n as i64;
    println!("profile         {}", p.name);
    println!("e-vector        {:?}", p.evector());
    println!("euler_ambient   {amb}");
    println!("euler_total     {tot}");
    println!("dual e-vector   {:?}", d.evector());
    println!("dual total      {dtot}");
    let ok = tot + dtot == n * amb;
    println!("identity        {tot} + {dtot} = {n}·{amb}: {}", if ok { "holds" } else { "FAILS" });
    Ok(Verdict(ok))
}

fn cmd_intersect(pair: &Pair, chi_xt: Option<i64>) -> Result<Verdict> {
    let x = read_profile(&pair.x)?;
    let s = read_profile(&pair.s)?;
    let (xt, ys) = intersect_decompositions(&x, &s)?;
    println!("{xt}");
    println!("{ys}");
    if let Some(c) = chi_xt {
        let chi_e = c - xt.total.constant;
        println!("χ(E) = {chi_e}");
        println!("χ(Y_S) = {}", ys.total.eval(&chi_e));
        let pred = plucker_predict(&x, &s, c)?;
        println!("Plücker prediction χ(Y_S) = {}", pred.value);
        if let Some(w) = pred.warning {
            println!("warning: {w}");
        }
        let h = euler_h_consistency(&x, &s, c, ys.total.eval(&chi_e))?;
        println!("χ(H) = {} = {}: {}", h.via_xt, h.via_ys, if h.holds { "consistent" } else { "INCONSISTENT" });
        return Ok(Verdict(h.holds));
    }
    Ok(Verdict(true))
}

fn print_example(r: &ExampleRecord) -> bool {
    println!("example {} (N = {})", r.name, r.n);
    println!("χ(X) = {}, χ(Y) = {}, χ(S) = {}, χ(T) = {}", r.chi_x, r.chi_y, r.chi_s, r.chi_t);
    match r.plucker() {
        Some(out) => {
            println!("χ(X_T) = {}, χ(Y_S) = {}", r.chi_xt.unwrap_or_default(), r.chi_ys.unwrap_or_default());
            println!("lhs = {}", out.lhs);
            println!("rhs = {}", out.rhs);
            println!("plucker: {}", if out.holds { "holds" } else { "FAILS" });
            out.holds
        }
        None => {
            // Symbolic: χ(X_T) - χ(Y_S) is forced to a constant.
            let probe = plucker_check(r.chi_x, r.chi_y, r.chi_s, r.chi_t, 0, 0, r.n as i64);
            let gap = probe.rhs - probe.lhs;
            if gap == 0.into() {
                println!("plucker: χ(X_T) = χ(Y_S)");
            } else {
                println!("plucker: χ(X_T) = χ(Y_S) + {gap}");
            }
            true
        }
    }
}

fn cmd_plucker(example: Option<String>, chi: Option<Vec<i64>>, n: Option<i64>, file: Option<PathBuf>) -> Result<Verdict> {
    if let Some(c) = chi {
        let n = n.ok_or_else(|| anyhow!("--n is required with --chi"))?;
        if n <= 0 {
            bail!("N must be positive");
        }
        let out = plucker_check(c[0], c[1], c[2], c[3], c[4], c[5], n);
        println!("lhs = {}", out.lhs);
        println!("rhs = {}", out.rhs);
        println!("plucker: {}", if out.holds { "holds" } else { "FAILS" });
        return Ok(Verdict(out.holds));
    }
    let records = match file {
        Some(p) => {
            let text = fs::read_to_string(&p).with_context(|| format!("cannot read {}", p.display()))?;
            parse_examples(&text).map_err(|e| anyhow!("{}: {e}", p.display()))?
        }
        None => builtin_examples(),
    };
    let Some(name) = example else {
        let mut ok = true;
        for r in &records {
            ok &= print_example(r);
            println!();
        }
        return Ok(Verdict(ok));
    };
    let r = find_example(&records, &name).ok_or_else(|| anyhow!("no example named `{name}`"))?;
    Ok(Verdict(print_example(r)))
}

fn cmd_prove(pair: &Pair, phases: &[String], out: &Option<PathBuf>) -> Result<Verdict> {
    let spec = read_spec(pair)?;
    let wanted: Vec<Phase> = phases
        .iter()
        .map(|p| Phase::parse(p).ok_or_else(|| anyhow!("unknown phase `{p}`")))
        .collect::<Result<_>>()?;
    let trace = if wanted.is_empty() {
        check_main_theorem(&spec)
    } else {
        let mut t = ProofTrace::new(spec.clone());
        if wanted.contains(&Phase::FfPiT) {
            t.extend(check_ff_pi_t(&spec));
        }
        if wanted.contains(&Phase::FfPiS) {
            t.extend(check_ff_pi_s(&spec));
        }
        if wanted.iter().any(|p| matches!(p, Phase::GenerationStep1 | Phase::GenerationStep2 | Phase::GenerationFinal)) {
            t.extend(check_generation(&spec));
        }
        t.filter_phases(&wanted)
    };
    emit(out, trace.to_text().as_bytes())?;
    let failed = trace.failed().count();
    eprintln!(
        "i = {}, l = {}, N = {}: {} obligations, {failed} failed",
        spec.i(),
        spec.l(),
        spec.n(),
        trace.obligations.len()
    );
    Ok(Verdict(trace.success()))
}

fn generic_spec(i: usize, l: usize, n: usize) -> Result<ChessboardSpec> {
    ChessboardSpec::generic(i, l, n).map_err(|e| anyhow!("{e}"))
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(i_range: &str, l_range: &str, n_min: Option<usize>, n_max: usize, jobs: usize, verbose: bool) -> Result<Verdict> {
    let (i0, i1) = parse_range(i_range)?;
    let (l0, l1) = parse_range(l_range)?;
    if i0 == 0 || l0 == 0 {
        bail!("lengths start at 1");
    }
    let mut points = Vec::new();
    for i in i0..=i1 {
        for l in l0..=l1 {
            for n in n_min.unwrap_or(0).max(i.max(l) + 1)..=n_max {
                points.push((i, l, n));
            }
        }
    }
    if points.is_empty() {
        bail!("the sweep ranges contain no admissible spec");
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    // par_iter keeps input order in collect, so output is scheduling independent.
    let results: Vec<(usize, usize, usize, usize, usize)> = pool.install(|| {
        points
            .par_iter()
            .map(|&(i, l, n)| {
                let t = check_main_theorem(&generic_spec(i, l, n).expect("admissible by construction"));
                (i, l, n, t.obligations.len(), t.failed().count())
            })
            .collect()
    });
    let mut bad = 0;
    let mut total = 0;
    for (i, l, n, count, failed) in &results {
        total += count;
        if *failed > 0 {
            bad += 1;
            println!("i = {i}, l = {l}, N = {n}: {failed} of {count} obligations failed");
        } else if verbose {
            println!("i = {i}, l = {l}, N = {n}: {count} obligations discharged");
        }
    }
    println!("{} specs, {total} obligations", results.len());
    if bad == 0 {
        println!("all specs verified");
    } else {
        println!("{bad} specs failed");
    }
    Ok(Verdict(bad == 0))
}

fn cmd_render(target: &RenderTarget) -> Result<Verdict> {
    match target {
        RenderTarget::Profile { profile, draw } => {
            let p = read_profile(profile)?;
            emit(&draw.out, &render_profile_pair(&p, &draw_options(draw))?)?;
        }
        RenderTarget::Chessboard { pair, highlight, cl, draw } => {
            let spec = read_spec(pair)?;
            let mut opts = draw_options(draw);
            opts.cl_columns = *cl;
            for h in highlight {
                opts.highlight.push(parse_highlight(&spec, h)?);
            }
            emit(&draw.out, &render_chessboard(&spec, &opts)?)?;
        }
        RenderTarget::Trace { pair, draw } => {
            let spec = read_spec(pair)?;
            let trace = check_main_theorem(&spec);
            emit(&draw.out, &render_trace(&trace, &draw_options(draw))?)?;
        }
    }
    Ok(Verdict(true))
}

fn run(cli: Cli) -> Result<Verdict> {
    match cli.command {
        Command::Validate { profile } => cmd_validate(&profile),
        Command::Dualize { profile, out } => {
            let p = read_profile(&profile)?;
            let d = p.dualize()?;
            emit(&out, profile_to_json(&d).as_bytes())?;
            Ok(Verdict(true))
        }
        Command::Euler { profile } => cmd_euler(&profile),
        Command::Intersect { pair, chi_xt } => cmd_intersect(&pair, chi_xt),
        Command::Plucker { example, chi, n, examples } => cmd_plucker(example, chi, n, examples),
        Command::Prove { pair, phase, out } => cmd_prove(&pair, &phase, &out),
        Command::Sweep { i_range, l_range, n_min, n_max, jobs, verbose } => {
            cmd_sweep(&i_range, &l_range, n_min, n_max, jobs, verbose)
        }
        Command::Render { target } => cmd_render(&target),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Verdict(true)) => ExitCode::SUCCESS,
        Ok(Verdict(false)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
