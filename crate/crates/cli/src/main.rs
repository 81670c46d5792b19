//! `qudit-x`: analyze X-state matrix files and generate Werner-family data.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 the matrix is not a valid X-state,
//! 3 malformed input file or flags.

mod report;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use qudit_x::io::{self as fileio, MatrixFile, MatrixFileError, SweepRange};
use qudit_x::linalg::hermitian_eigenvalues;
use qudit_x::state::validate;
use qudit_x::werner::{self, Classification};
use qudit_x::{tol, BRule, SweepRow, XState};

use report::{validation_text, Analysis};

const EXIT_IO: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_PARSE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "qudit-x",
    version,
    about = "Separability and entanglement of spin-3/2 X-states"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a 4x4 X-shaped density matrix read from a file.
    ///
    /// The file holds 4 rows of 4 entries. Entries are `<float>`,
    /// `<float>+<float>i` or `<float>-<float>i`; `#` starts a comment.
    Analyze(AnalyzeArgs),
    /// Evaluate the two-parameter Werner family at a point or along a sweep.
    Werner(WernerArgs),
    /// Classify a uniform (p, b) grid as invalid, separable or entangled.
    Region(RegionArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Matrix file to read.
    path: PathBuf,
    /// Comma-separated entropy indices for Tsallis and Renyi entropies
    /// (each q > 0 and q != 1).
    #[arg(long, value_parser = parse_qs)]
    q: Option<QList>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["p", "sweep"])))]
struct WernerArgs {
    /// Mixing parameter of a single point.
    #[arg(long, requires = "b", allow_negative_numbers = true, value_parser = parse_number)]
    p: Option<f64>,
    /// Inner coherence of a single point.
    #[arg(long, requires = "p", allow_negative_numbers = true, value_parser = parse_number)]
    b: Option<f64>,
    /// Sweep over p as start:stop:step.
    #[arg(long, requires = "b_rule", conflicts_with_all = ["p", "b"], allow_hyphen_values = true,
          value_parser = parse_range)]
    sweep: Option<SweepRange>,
    /// How b follows p during a sweep: const:<v> or scaled:<k> for b = (1-p)/k.
    #[arg(long, requires = "sweep", allow_hyphen_values = true, value_parser = parse_rule)]
    b_rule: Option<BRule>,
    /// Output file (standard output when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RegionArgs {
    /// Grid points along p in [-1/3, 1].
    #[arg(long, default_value_t = 200)]
    p_steps: usize,
    /// Grid points along b in [-1/2, 1/2].
    #[arg(long, default_value_t = 200)]
    b_steps: usize,
    /// Output file (standard output when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone)]
struct QList(Vec<f64>);

fn parse_number(text: &str) -> Result<f64, String> {
    fileio::parse_float(text).ok_or_else(|| format!("`{text}` is not a finite number"))
}

fn parse_qs(text: &str) -> Result<QList, String> {
    let qs = fileio::parse_q_list(text).map_err(|e| e.to_string())?;
    if let Some(bad) = qs.iter().find(|&&q| q <= 0.0 || q == 1.0) {
        return Err(format!("q = {bad} must be positive and different from 1"));
    }
    Ok(QList(qs))
}

fn parse_range(text: &str) -> Result<SweepRange, String> {
    fileio::parse_sweep_range(text).map_err(|e| e.to_string())
}

fn parse_rule(text: &str) -> Result<BRule, String> {
    let rule = fileio::parse_b_rule(text).map_err(|e| e.to_string())?;
    rule.check().map_err(|e| e.to_string())
}

/// A failure that maps onto one exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

fn io_failure(path: Option<&Path>, err: io::Error) -> Failure {
    match path {
        Some(p) => Failure::new(EXIT_IO, format!("cannot write {}: {err}", p.display())),
        None => Failure::new(EXIT_IO, format!("cannot write output: {err}")),
    }
}

fn with_output<F>(path: Option<&Path>, write: F) -> Result<(), Failure>
where
    F: FnOnce(&mut dyn Write) -> io::Result<()>,
{
    let result = match path {
        Some(p) => File::create(p).and_then(|f| {
            let mut w = BufWriter::new(f);
            write(&mut w)?;
            w.flush()
        }),
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            write(&mut lock)
        }
    };
    result.map_err(|e| io_failure(path, e))
}

fn analyze(args: &AnalyzeArgs) -> Result<(), Failure> {
    let file = MatrixFile::read(&args.path).map_err(|e| match e {
        MatrixFileError::Io { .. } => Failure::new(EXIT_IO, e.to_string()),
        MatrixFileError::Parse { .. } => Failure::new(EXIT_PARSE, format!("parse error: {e}")),
    })?;
    let matrix = file.parsed;
    let validation = validate(&matrix);
    if !validation.passed() {
        return Err(Failure::new(
            EXIT_INVALID,
            format!(
                "invalid density matrix: {}\n{}",
                validation.failures().join(", "),
                validation_text(&validation)
            ),
        ));
    }
    let x = XState::from_matrix(&matrix, tol::X_SHAPE_FILE)
        .map_err(|e| Failure::new(EXIT_INVALID, e.to_string()))?;
    let oracle = hermitian_eigenvalues(matrix.matrix())
        .map_err(|e| Failure::new(EXIT_INVALID, e.to_string()))?;
    let qs = args.q.as_ref().map(|q| q.0.as_slice()).unwrap_or(&[]);
    let analysis = Analysis::new(matrix, validation, &x, oracle, qs);
    let text = match args.format {
        Format::Text => analysis.text(),
        Format::Csv => analysis.csv(),
    };
    with_output(None, |w| w.write_all(text.as_bytes()))
}

fn werner_cmd(args: &WernerArgs) -> Result<(), Failure> {
    let out = args.out.as_deref();
    if let (Some(range), Some(rule)) = (args.sweep, args.b_rule) {
        let rows = werner::sweep(rule, range.start, range.stop, range.step)
            .map_err(|e| Failure::new(EXIT_PARSE, e.to_string()))?;
        return with_output(out, |w| fileio::write_sweep_csv(w, &rows));
    }
    let (Some(p), Some(b)) = (args.p, args.b) else {
        return Err(Failure::new(
            EXIT_PARSE,
            "give --p and --b, or --sweep and --b-rule",
        ));
    };
    let text = report::werner_point_text(&SweepRow::at(p, b));
    with_output(out, |w| w.write_all(text.as_bytes()))
}

fn region_cmd(args: &RegionArgs) -> Result<(), Failure> {
    let points = werner::region_grid(args.p_steps, args.b_steps)
        .map_err(|e| Failure::new(EXIT_PARSE, e.to_string()))?;
    with_output(args.out.as_deref(), |w| {
        fileio::write_region_csv(w, &points)
    })?;
    if args.out.is_some() {
        let count = |c: Classification| points.iter().filter(|pt| pt.classification == c).count();
        eprintln!(
            "{} points: {} invalid, {} separable, {} entangled",
            points.len(),
            count(Classification::Invalid),
            count(Classification::Separable),
            count(Classification::Entangled)
        );
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() {
                ExitCode::from(EXIT_PARSE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match &cli.command {
        Command::Analyze(args) => analyze(args),
        Command::Werner(args) => werner_cmd(args),
        Command::Region(args) => region_cmd(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
