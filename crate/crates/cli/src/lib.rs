//! `ripple-ct`: synthesize, compile, measure, verify and export ripple-carry
//! adders and comparators.
//!
//! Exit codes: 0 success, 1 data error, 2 usage error, 3 verification failure.

pub mod error;
pub mod qasm;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use circuit_core::{
    json::parse_doc, metrics, to_json_with, Circuit, CircuitError, GateKind, Metadata,
};
use clap::{Parser, Subcommand, ValueEnum};
use cliffordt::{compile, CompileMode};
use synthesis::{build, Family};
use verify_bench::{
    reproduce_table, verify_circuit, verify_unitary, verify_unitary_circuit, Strategy, VerifyError,
    VerifyMode, VerifyReport, Which, DEFAULT_SEED, MAX_TABLE_N, MIN_TABLE_N,
};

pub use error::CliError;

/// Smallest operand width accepted on the command line.
pub const MIN_N: usize = 2;

#[derive(Debug, Parser)]
#[command(
    name = "ripple-ct",
    version,
    about = "Ripple-carry adders and comparators over Clifford+T"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a reversible circuit for one family.
    Synth {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Expand composite gates into Clifford+T.
    Compile {
        input: PathBuf,
        #[arg(long, value_parser = parse_compile_mode, default_value = "optimized")]
        mode: CompileMode,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report T-count, T-depth, CNOT-count and CNOT-depth.
    Metrics {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = MetricsFormat::Json)]
        format: MetricsFormat,
    },
    /// Check a circuit against its integer oracle or reference unitary.
    Verify {
        input: Option<PathBuf>,
        #[arg(long, value_parser = parse_family)]
        family: Option<Family>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Level::Exhaustive)]
        level: Level,
        #[arg(long, value_parser = parse_verify_mode)]
        mode: Option<VerifyMode>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Compare measured costs with the closed-form rows.
    Table {
        #[arg(long, value_parser = parse_which)]
        which: Which,
        #[arg(long = "n", required = true, num_args = 1..)]
        n: Vec<usize>,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Write a circuit as OpenQASM 2.0.
    Export {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = ExportFormat::Qasm2)]
        format: ExportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MetricsFormat {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Exhaustive,
    Random,
    Unitary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Qasm2,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
        .map_err(|e: synthesis::SynthesisError| e.to_string())
}

fn parse_compile_mode(s: &str) -> Result<CompileMode, String> {
    s.parse()
}

fn parse_verify_mode(s: &str) -> Result<VerifyMode, String> {
    s.parse()
}

fn parse_which(s: &str) -> Result<Which, String> {
    s.parse()
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run_from<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    match run(cli.command, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn run(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Synth {
            family,
            n,
            out: path,
        } => {
            check_n(n)?;
            let circuit = build(family, n).map_err(|e| CliError::Usage(e.to_string()))?;
            let meta = Metadata {
                family: Some(family.name().to_string()),
                n: Some(n),
                ..Metadata::default()
            };
            emit(&to_json_with(&circuit, Some(meta)), path.as_deref(), out)
        }
        Command::Compile {
            input,
            mode,
            out: path,
        } => {
            let (circuit, meta) = load(&input)?;
            let compiled = compile(&circuit, mode);
            for w in compiled.warnings() {
                let _ = writeln!(err, "warning: {w}");
            }
            let meta = Metadata {
                mode: Some(mode.name().to_string()),
                warnings: compiled.warnings().iter().map(|w| w.to_string()).collect(),
                ..meta
            };
            emit(
                &to_json_with(&compiled.circuit, Some(meta)),
                path.as_deref(),
                out,
            )
        }
        Command::Metrics { input, format } => {
            let (circuit, _) = load(&input)?;
            let m = metrics(&circuit).map_err(|e| match e {
                CircuitError::CompositeGatePresent { .. } => {
                    CliError::Data(format!("{e} (run `ripple-ct compile` first)"))
                }
                other => CliError::Data(other.to_string()),
            })?;
            let text = match format {
                MetricsFormat::Json => {
                    serde_json::to_string_pretty(&m).expect("metric reports serialize")
                }
                MetricsFormat::Table => format!(
                    "{:>10}  {:>10}  {:>7}  {:>7}\n{:>10}  {:>10}  {:>7}  {:>7}",
                    "CNOT-depth",
                    "CNOT-count",
                    "T-depth",
                    "T-count",
                    m.cnot_depth,
                    m.cnot_count,
                    m.t_depth,
                    m.t_count
                ),
            };
            emit(&text, None, out)
        }
        Command::Verify {
            input,
            family,
            n,
            level,
            mode,
            seed,
            samples,
        } => {
            let report = verify(input.as_deref(), family, n, level, mode, seed, samples)?;
            emit(&report.to_json(), None, out)?;
            if report.pass {
                Ok(())
            } else {
                Err(CliError::Failed(format!(
                    "{} n={} {} check failed",
                    report.family, report.n, report.check
                )))
            }
        }
        Command::Table { which, n, format } => {
            if let Some(&bad) = n
                .iter()
                .find(|&&n| !(MIN_TABLE_N..=MAX_TABLE_N).contains(&n))
            {
                return Err(CliError::Usage(format!(
                    "n={bad} is outside [{MIN_TABLE_N}, {MAX_TABLE_N}]"
                )));
            }
            let table = reproduce_table(which, &n).map_err(verify_error)?;
            let text = match format {
                TableFormat::Text => table.render(),
                TableFormat::Json => table.to_json(),
            };
            emit(&text, None, out)?;
            if table.passed() {
                Ok(())
            } else {
                Err(CliError::Failed(
                    "some rows do not match their formulas".into(),
                ))
            }
        }
        Command::Export {
            input,
            format,
            out: path,
        } => {
            let ExportFormat::Qasm2 = format;
            let (mut circuit, _) = load(&input)?;
            if circuit.has_composites() {
                let _ = writeln!(
                    err,
                    "notice: input has composite gates; compiling with mode naive"
                );
                circuit = compile(&circuit, CompileMode::Naive).circuit;
            }
            let text = qasm::to_qasm(&circuit).map_err(|e| CliError::Data(e.to_string()))?;
            emit(text.trim_end(), path.as_deref(), out)
        }
    }
}

fn check_n(n: usize) -> Result<(), CliError> {
    if n < MIN_N {
        return Err(CliError::Usage(format!(
            "n={n} is too small (need n >= {MIN_N})"
        )));
    }
    Ok(())
}

fn verify_error(e: VerifyError) -> CliError {
    match e {
        VerifyError::TooLargeForExhaustive { .. }
        | VerifyError::TooLarge { .. }
        | VerifyError::OutOfRange { .. } => CliError::Usage(e.to_string()),
        other => CliError::Data(other.to_string()),
    }
}

fn load(path: &Path) -> Result<(Circuit, Metadata), CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let doc = parse_doc(&text).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
    let meta = doc.metadata.clone().unwrap_or_default();
    let circuit = doc
        .to_circuit()
        .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
    Ok((circuit, meta))
}

fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, format!("{text}\n")).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => match writeln!(out, "{text}") {
            Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(CliError::Io {
                path: "<stdout>".into(),
                source: e,
            }),
            _ => Ok(()),
        },
    }
}

fn is_classical(circuit: &Circuit) -> bool {
    circuit
        .gates()
        .iter()
        .all(|g| !matches!(g.kind(), GateKind::H | GateKind::T | GateKind::Tdg))
}

#[allow(clippy::too_many_arguments)]
fn verify(
    input: Option<&Path>,
    family: Option<Family>,
    n: Option<usize>,
    level: Level,
    mode: Option<VerifyMode>,
    seed: u64,
    samples: usize,
) -> Result<VerifyReport, CliError> {
    let strategy = match level {
        Level::Random => Some(Strategy::Random { samples, seed }),
        Level::Exhaustive => Some(Strategy::Exhaustive),
        Level::Unitary => None,
    };
    match input {
        Some(path) => {
            let (circuit, meta) = load(path)?;
            let family = match family {
                Some(f) => f,
                None => {
                    let name = meta.family.as_deref().ok_or_else(|| {
                        CliError::Usage("input has no family metadata; pass --family".into())
                    })?;
                    parse_family(name).map_err(CliError::Data)?
                }
            };
            let n = n
                .or(meta.n)
                .ok_or_else(|| CliError::Usage("input has no width metadata; pass --n".into()))?;
            check_n(n)?;
            let mode = match mode {
                Some(m) => m,
                None => match meta.mode.as_deref() {
                    Some(m) => parse_verify_mode(m).map_err(CliError::Data)?,
                    None if is_classical(&circuit) => VerifyMode::HighLevel,
                    None => VerifyMode::Optimized,
                },
            };
            if circuit.n_qubits() != family.wire_count(n) {
                return Err(CliError::Data(format!(
                    "circuit has {} qubits but {family} at n={n} needs {}",
                    circuit.n_qubits(),
                    family.wire_count(n)
                )));
            }
            match strategy {
                Some(s) => verify_circuit(&circuit, family, n, mode, s),
                None => verify_unitary_circuit(&circuit, family, n, mode),
            }
            .map_err(verify_error)
        }
        None => {
            let family =
                family.ok_or_else(|| CliError::Usage("pass an input file or --family".into()))?;
            let n = n.ok_or_else(|| CliError::Usage("--n is required with --family".into()))?;
            check_n(n)?;
            let mode = mode.unwrap_or(VerifyMode::Optimized);
            match strategy {
                Some(s) => {
                    let high = build(family, n).map_err(|e| CliError::Usage(e.to_string()))?;
                    let circuit = match mode.compile_mode() {
                        Some(m) => compile(&high, m).circuit,
                        None => high,
                    };
                    verify_circuit(&circuit, family, n, mode, s)
                }
                None => verify_unitary(family, n),
            }
            .map_err(verify_error)
        }
    }
}
