//! Command-line front end: `ryser <command> [options]`.
//!
//! [`run`] does all the work against injected streams so the binary is a
//! thin wrapper and the tests can drive it in-process.

mod commands;
pub mod report;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::time::{Duration, Instant};

use clap::error::ErrorKind as ClapErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use ryser_core::OracleLimits;
use sha2::{Digest, Sha256};
use thiserror::Error;

pub use report::{Assertion, ErrorKind, InputFingerprint, ReportError, RunReport, Timings, SCHEMA};

#[derive(Debug, Parser)]
#[command(name = "ryser", version, about = "Covers, oracles and constructions for Ryser's conjecture")]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Replace a coloured graph by its transitive closure after loading it.
    #[arg(long, global = true)]
    closure: bool,

    #[command(flatten)]
    limits: LimitArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct LimitArgs {
    /// Largest vertex count the exact oracles accept.
    #[arg(long, global = true, default_value_t = OracleLimits::default().max_vertices)]
    max_vertices: usize,

    /// Largest edge count the exact oracles accept.
    #[arg(long, global = true, default_value_t = OracleLimits::default().max_edges)]
    max_edges: usize,

    /// Largest number of distinct components the set-cover oracle accepts.
    #[arg(long, global = true, default_value_t = OracleLimits::default().max_components)]
    max_components: usize,

    /// Largest number of component tuples the partial-cover oracle enumerates.
    #[arg(long, global = true, default_value_t = OracleLimits::default().max_tuples)]
    max_tuples: u64,
}

impl LimitArgs {
    fn limits(&self) -> OracleLimits {
        OracleLimits {
            max_vertices: self.max_vertices,
            max_edges: self.max_edges,
            max_components: self.max_components,
            max_tuples: self.max_tuples,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a hypergraph and compute its exact parameters, or summarize a coloured graph.
    Analyze {
        /// HGF or CGF file, `-` for stdin.
        input: String,
    },
    /// Gyárfás graph of an intersecting r-partite hypergraph, written as CGF.
    Gyarfas {
        /// HGF file, `-` for stdin.
        input: String,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Transitive closure of a coloured graph, written as CGF.
    Closure {
        /// CGF file, `-` for stdin.
        input: String,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Cover a transitive colouring whose pairs carry at least t colours by at most r - t components.
    CoverT {
        /// CGF file, `-` for stdin.
        input: String,
        /// Colours guaranteed on every pair; needs r/4 < t <= r - 1.
        #[arg(long)]
        t: usize,
    },
    /// Cover a large share of the vertices by r - 1 components of distinct colours.
    CoverPartial {
        /// CGF file, `-` for stdin.
        input: String,
    },
    /// Compare the exact partial-cover optimum with the bound and look for an affine-plane blowup.
    Sharp {
        /// CGF file, `-` for stdin.
        input: String,
    },
    /// Vertex cover of size at most (r - 1) nu for a hypergraph of maximum degree 2.
    Delta2 {
        /// HGF file, `-` for stdin.
        input: String,
    },
    /// One exact parameter.
    Oracle {
        #[arg(value_enum)]
        which: OracleKind,
        /// HGF file (tau, nu, rho, alpha, alphaprime) or CGF file (mincover, maxpartial).
        input: String,
    },
    /// Write a construction or a seeded random instance.
    Gen {
        #[command(flatten)]
        output: OutputArg,
        #[command(subcommand)]
        what: GenCommand,
    },
    /// Run the acceptance suite.
    Selftest,
}

#[derive(Debug, Args)]
struct OutputArg {
    /// Where to write the generated file, `-` for stdout.
    #[arg(short, long, global = true, default_value = "-")]
    output: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OracleKind {
    Tau,
    Nu,
    Rho,
    Alpha,
    Alphaprime,
    Mincover,
    Maxpartial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Mixed,
    Cycle,
    Disjoint,
}

#[derive(Debug, Subcommand)]
enum GenCommand {
    /// Truncated projective plane (HGF, default) or affine plane (HGF) of order q.
    Plane {
        #[arg(long)]
        q: usize,
        #[arg(long, conflicts_with = "truncated")]
        affine: bool,
        #[arg(long)]
        truncated: bool,
    },
    /// Blowup of the affine plane of order q, each point cloned b times (CGF).
    Blowup {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        b: usize,
    },
    /// Blowup with two components of one random colour merged (CGF).
    CoarsenedBlowup {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        b: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Transitive colouring with at least `min-colors` colours on every pair (CGF).
    RandomColored {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 1)]
        min_colors: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// r-partite t-intersecting hypergraph with up to m edges (HGF).
    RandomHyp {
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 1)]
        t: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 3)]
        class_size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// r-uniform hypergraph with m edges and maximum degree 2 (HGF).
    RandomDelta2 {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::Mixed)]
        mode: ModeArg,
    },
}

#[derive(Debug, Error)]
pub(crate) enum CliError {
    #[error(transparent)]
    Core(#[from] ryser_core::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn kind(&self) -> ErrorKind {
        match self {
            CliError::Core(e) if e.is_internal() => ErrorKind::Internal,
            _ => ErrorKind::Input,
        }
    }
}

/// What a command hands back before the report is assembled.
#[derive(Default)]
pub(crate) struct Output {
    pub outputs: serde_json::Value,
    pub assertions: Vec<Assertion>,
    /// A generated file: format name and contents.
    pub artifact: Option<(&'static str, String)>,
}

impl Output {
    pub fn new(outputs: serde_json::Value) -> Self {
        Output {
            outputs,
            ..Output::default()
        }
    }

    pub fn check(mut self, name: &str, passed: bool) -> Self {
        self.assertions.push(Assertion {
            name: name.into(),
            passed,
        });
        self
    }
}

/// Input handling shared by the commands.
pub(crate) struct Ctx<'a> {
    stdin: &'a mut dyn Read,
    pub closure: bool,
    pub limits: OracleLimits,
    pub input: Option<InputFingerprint>,
    pub parse_time: Duration,
}

impl Ctx<'_> {
    pub fn read(&mut self, path: &str) -> Result<String, CliError> {
        let io = |source| CliError::Io {
            path: path.to_string(),
            source,
        };
        let bytes = if path == "-" {
            let mut buf = Vec::new();
            self.stdin.read_to_end(&mut buf).map_err(io)?;
            buf
        } else {
            std::fs::read(path).map_err(io)?
        };
        self.input = Some(InputFingerprint {
            path: path.to_string(),
            sha256: hex::encode(Sha256::digest(&bytes)),
            bytes: bytes.len(),
        });
        String::from_utf8(bytes).map_err(|e| CliError::Usage(format!("{path}: not UTF-8: {e}")))
    }

    pub fn timed<T>(&mut self, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.parse_time += start.elapsed();
        out
    }
}

/// Runs one invocation and returns its exit code: 0 on success, 1 when a
/// check on the result fails, 2 on bad arguments or input.
///
/// `args` includes the program name, like [`std::env::args_os`].
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ClapErrorKind::DisplayHelp | ClapErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{text}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{text}");
                    2
                }
            };
        }
    };
    let command: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let mut ctx = Ctx {
        stdin,
        closure: cli.closure,
        limits: cli.limits.limits(),
        input: None,
        parse_time: Duration::ZERO,
    };

    let start = Instant::now();
    let mut streamed = false;
    let result = match &cli.command {
        Command::Selftest => {
            streamed = !cli.json;
            Ok(commands::selftest(|line| {
                if streamed {
                    let _ = writeln!(stdout, "{line}");
                }
            }))
        }
        command => commands::dispatch(command, &mut ctx),
    };
    let total = start.elapsed();
    let timings = Timings {
        parse_micros: ctx.parse_time.as_micros() as u64,
        compute_micros: total.saturating_sub(ctx.parse_time).as_micros() as u64,
    };

    let output_path = match &cli.command {
        Command::Gyarfas { output, .. } | Command::Closure { output, .. } | Command::Gen { output, .. } => {
            Some(output.output.as_str())
        }
        _ => None,
    };

    let (mut output, error) = match result {
        Ok(o) => (o, None),
        Err(e) => (
            Output::new(serde_json::Value::Null),
            Some(ReportError {
                kind: e.kind(),
                message: e.to_string(),
            }),
        ),
    };

    let mut error = error;
    if let (Some((format, text)), Some(path)) = (&output.artifact, output_path) {
        if path != "-" {
            if let Err(source) = std::fs::write(path, text) {
                error = Some(ReportError {
                    kind: ErrorKind::Input,
                    message: CliError::Io {
                        path: path.to_string(),
                        source,
                    }
                    .to_string(),
                });
            }
        } else if cli.json {
            if let serde_json::Value::Object(map) = &mut output.outputs {
                map.insert("format".into(), (*format).into());
                map.insert("text".into(), text.clone().into());
            }
        } else if error.is_none() {
            let _ = write!(stdout, "{text}");
        }
    }

    let mut report = RunReport {
        schema: SCHEMA,
        command,
        input: ctx.input,
        ok: false,
        outputs: output.outputs,
        assertions: output.assertions,
        error,
        timings,
    };
    let code = report.exit_code();
    report.ok = code == 0;

    if cli.json {
        let _ = writeln!(stdout, "{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    } else if !streamed && !(output.artifact.is_some() && output_path == Some("-")) {
        let _ = write!(stdout, "{}", report.to_text());
    }
    if let Some(e) = &report.error {
        let _ = writeln!(stderr, "error: {}", e.message);
    } else if let Some(a) = report.assertions.iter().find(|a| !a.passed) {
        let _ = writeln!(stderr, "error: check {} failed", a.name);
    }
    code
}
