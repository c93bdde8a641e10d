//! Command-line front end.
//!
//! Exit codes: 0 verified, 1 bad input or parameters, 2 layout infeasible or
//! retry budget exhausted, 3 labeling is not antimagic.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::format::{read_instance, write_instance, ResultFile};
use crate::gen::{assemble, ComponentSpec};
use crate::layout::DEFAULT_RETRY_BUDGET;
use crate::pipeline::{construct, Config};
use crate::verify::{verify_construction, VerificationReport};
use crate::x0::solve_x0;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;
pub const EXIT_NOT_ANTIMAGIC: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "antimagic",
    version,
    about = "Antimagic orientations of 2d-regular graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Orient and label an instance, verify the result and write it.
    Orient(OrientArgs),
    /// Re-check a result file against its instance.
    Verify(VerifyArgs),
    /// Write a disjoint union of circulants C_n(1..d).
    Gen(GenArgs),
    /// Print x0 and the minimum order of the smallest odd component.
    X0(X0Args),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, clap::Args)]
pub struct OrientArgs {
    /// Instance file: vertex count, then one `u v` edge per line.
    pub input: PathBuf,
    #[arg(long, env = "ANTIMAGIC_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Tours tried per component before giving up.
    #[arg(long, default_value_t = DEFAULT_RETRY_BUDGET)]
    pub retry_budget: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Defaults to stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    /// Result file, text or JSON.
    pub result: PathBuf,
    pub instance: PathBuf,
}

#[derive(Debug, clap::Args)]
pub struct GenArgs {
    #[arg(long)]
    pub d: usize,
    /// Comma-separated component orders.
    #[arg(long, value_delimiter = ',', required = true)]
    pub orders: Vec<usize>,
    /// Defaults to stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct X0Args {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub d: usize,
}

/// Parses `args` (program name first) and runs the command, returning the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(rendered.as_bytes());
                    EXIT_INPUT
                }
            };
        }
    };
    let result = match cli.command {
        Command::Orient(a) => orient(&a, out, err),
        Command::Verify(a) => verify(&a, out),
        Command::Gen(a) => gen(&a, out, err),
        Command::X0(a) => x0(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure(code, message)) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

struct Failure(i32, String);

fn input_error(e: impl std::fmt::Display) -> Failure {
    Failure(EXIT_INPUT, e.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

/// Writes through a temporary file in the target directory, then renames.
fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn emit(output: Option<&Path>, contents: &str, out: &mut dyn Write) -> Result<(), Failure> {
    match output {
        Some(p) => write_atomic(p, contents)
            .map_err(|e| input_error(format!("cannot write {}: {e}", p.display()))),
        None => out.write_all(contents.as_bytes()).map_err(input_error),
    }
}

fn describe_collisions(report: &VerificationReport) -> String {
    if !report.bijection_ok {
        return "labels are not a bijection onto [1, m]".into();
    }
    let shown: Vec<String> = report
        .collisions
        .iter()
        .take(5)
        .map(|c| format!("s({}) = s({}) = {}", c.u, c.v, c.sum))
        .collect();
    let more = report.collisions.len().saturating_sub(shown.len());
    let mut s = format!("vertex sums collide: {}", shown.join(", "));
    if more > 0 {
        s.push_str(&format!(" and {more} more"));
    }
    s
}

fn orient(a: &OrientArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let g = read_instance(&read(&a.input)?).map_err(input_error)?;
    let config = Config {
        seed: a.seed,
        retry_budget: a.retry_budget,
    };
    let c = construct(&g, &config).map_err(|e| {
        let code = if e.is_infeasible() {
            EXIT_INFEASIBLE
        } else {
            EXIT_INPUT
        };
        Failure(code, e.to_string())
    })?;

    let report = verify_construction(&c);
    if !report.antimagic_ok {
        return Err(Failure(
            EXIT_NOT_ANTIMAGIC,
            format!(
                "construction failed verification, nothing written: {}",
                describe_collisions(&report)
            ),
        ));
    }
    for inv in report.invariant_results.iter().filter(|i| !i.ok) {
        let _ = writeln!(
            err,
            "warning: invariant {} failed: {}",
            inv.name, inv.detail
        );
    }

    let result = ResultFile::from_construction(&c, &report);
    let text = match a.format {
        Format::Text => result.to_text(),
        Format::Json => result.to_json(),
        Format::Dot => result.to_dot(),
    };
    emit(a.output.as_deref(), &text, out)?;
    let _ = writeln!(
        err,
        "verified: {} vertices, {} arcs, k = {}, q = {}",
        result.vertex_count,
        result.arcs.len(),
        result.k,
        result.q
    );
    Ok(EXIT_OK)
}

fn verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let result = ResultFile::parse(&read(&a.result)?).map_err(input_error)?;
    let g = read_instance(&read(&a.instance)?).map_err(input_error)?;
    let report = result.check_against(&g).map_err(input_error)?;
    if report.antimagic_ok {
        let _ = writeln!(
            out,
            "antimagic: {} arcs, {} distinct sums",
            result.arcs.len(),
            report.sums.len()
        );
        Ok(EXIT_OK)
    } else {
        Err(Failure(EXIT_NOT_ANTIMAGIC, describe_collisions(&report)))
    }
}

fn gen(a: &GenArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    if a.d < 2 {
        return Err(input_error(format!("--d must be at least 2, got {}", a.d)));
    }
    let (g, report) = assemble(&ComponentSpec {
        d: a.d,
        orders: a.orders.clone(),
    })
    .map_err(input_error)?;
    emit(a.output.as_deref(), &write_instance(&g), out)?;
    let x0 = report.x0.map_or("none".to_string(), |x| x.x0.to_string());
    let _ = writeln!(
        err,
        "k = {}, q = {}, x0 = {x0}, smallest odd order {}: precondition {}",
        report.k,
        report.q,
        report
            .min_odd_order
            .map_or("-".to_string(), |t| t.to_string()),
        if report.satisfied {
            "satisfied"
        } else {
            "violated"
        }
    );
    Ok(EXIT_OK)
}

fn x0(a: &X0Args, out: &mut dyn Write) -> Result<i32, Failure> {
    match solve_x0(a.k, a.d).map_err(input_error)? {
        Some(x) => writeln!(out, "x0={} min_first_order={}", x.x0, x.min_first_order),
        None => writeln!(out, "none (k <= 5d+4)"),
    }
    .map_err(input_error)?;
    Ok(EXIT_OK)
}
