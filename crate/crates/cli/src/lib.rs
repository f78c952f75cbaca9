//! Command-line front end: argument parsing, dispatch to `sra-core`, and
//! JSON or text rendering of the reports.

mod reports;
mod text;

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use sra_core::autos::DEFAULT_SEARCH_CAP;
use sra_core::group::DEFAULT_CLOSURE_CAP;
use sra_core::hp0::DEFAULT_MAX_DEGREE;
use sra_core::reflections::ReflectionParameter;

use reports::{Report, Setting};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SINGULAR: i32 = 1;
pub const EXIT_VERIFICATION: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Order, classes, center and reflection classes of G.
    Facts,
    /// Character table with orthogonality checks.
    Chartable,
    /// Check every proper nonzero subrepresentation against the 21 hyperplanes.
    Classify,
    /// Smoothness verdict for a parameter file.
    Smooth {
        /// JSON file {"R1": "1", ..., "R5": "1/7"}.
        #[arg(long = "c", value_name = "FILE")]
        c_file: Option<PathBuf>,
    },
    /// Two-dimensional leaf count for a parameter file.
    Leaves {
        #[arg(long = "c", value_name = "FILE")]
        c_file: Option<PathBuf>,
    },
    /// Graded zeroth Poisson homology up to a degree cutoff.
    Hp0 {
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
    },
    /// Molien series coefficients.
    Molien {
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
    },
    /// Automorphism group and its action on the reflection classes.
    Aut,
    /// facts, chartable, classify, smooth with c = 1, hp0 and aut.
    All {
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Facts => "facts",
            Command::Chartable => "chartable",
            Command::Classify => "classify",
            Command::Smooth { .. } => "smooth",
            Command::Leaves { .. } => "leaves",
            Command::Hp0 { .. } => "hp0",
            Command::Molien { .. } => "molien",
            Command::Aut => "aut",
            Command::All { .. } => "all",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Parser)]
#[command(
    name = "sra",
    version,
    about = "Exact verification reports for the group Q8 x_{Z/2} D8"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Bound on the size of the generated matrix group.
    #[arg(long, global = true, default_value_t = DEFAULT_CLOSURE_CAP)]
    pub closure_cap: usize,
    /// Bound on the automorphism search space.
    #[arg(long, global = true, default_value_t = DEFAULT_SEARCH_CAP)]
    pub search_cap: u64,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            jobs: None,
            format: Format::Json,
            closure_cap: DEFAULT_CLOSURE_CAP,
            search_cap: DEFAULT_SEARCH_CAP,
        }
    }

    pub fn workers(&self) -> usize {
        self.jobs
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.jobs == Some(0) {
            return Err("--jobs must be at least 1".into());
        }
        match &self.command {
            Command::Smooth { c_file: None } | Command::Leaves { c_file: None } => {
                Err(format!("{} requires --c <FILE>", self.command.name()))
            }
            Command::Hp0 { max_degree } | Command::All { max_degree } if *max_degree < 2 => {
                Err(format!("--max-degree must be at least 2, got {max_degree}"))
            }
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl RunOutput {
    fn error(exit_code: i32, message: String) -> Self {
        Self {
            exit_code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

#[derive(Debug)]
pub(crate) enum Failure {
    Usage(String),
    Verification(String),
}

impl Failure {
    fn into_output(self) -> RunOutput {
        match self {
            Failure::Usage(m) => RunOutput::error(EXIT_USAGE, m),
            Failure::Verification(m) => RunOutput::error(EXIT_VERIFICATION, m),
        }
    }
}

fn read_parameter(path: &PathBuf) -> Result<ReflectionParameter, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    ReflectionParameter::from_json(&text)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

type Section<'a> = (&'a str, &'a dyn Fn() -> Result<Report, Failure>);

fn dispatch(
    config: &RunConfig,
    setting: &Setting,
    timings: &mut Map<String, Value>,
) -> Result<Report, Failure> {
    let jobs = config.workers();
    let timed =
        |name: &str, timings: &mut Map<String, Value>, f: &dyn Fn() -> Result<Report, Failure>| {
            let start = Instant::now();
            let r = f();
            timings.insert(name.into(), json!(start.elapsed().as_millis() as u64));
            r
        };
    match &config.command {
        Command::Facts => timed("facts", timings, &|| Ok(reports::facts(setting))),
        Command::Chartable => timed("chartable", timings, &|| Ok(reports::chartable(setting))),
        Command::Classify => timed("classify", timings, &|| reports::classify(setting, jobs)),
        Command::Smooth { c_file } => {
            let c = read_parameter(c_file.as_ref().expect("validated"))?;
            timed("smooth", timings, &|| reports::smooth(setting, &c))
        }
        Command::Leaves { c_file } => {
            let c = read_parameter(c_file.as_ref().expect("validated"))?;
            timed("leaves", timings, &|| reports::leaves(setting, &c))
        }
        Command::Hp0 { max_degree } => {
            timed("hp0", timings, &|| reports::hp0(setting, *max_degree, jobs))
        }
        Command::Molien { max_degree } => {
            timed("molien", timings, &|| reports::molien(setting, *max_degree))
        }
        Command::Aut => timed("aut", timings, &|| {
            reports::aut(setting, config.search_cap, jobs)
        }),
        Command::All { max_degree } => {
            let ones = ReflectionParameter::ones();
            let sections: [Section; 6] = [
                ("facts", &|| Ok(reports::facts(setting))),
                ("chartable", &|| Ok(reports::chartable(setting))),
                ("classify", &|| reports::classify(setting, jobs)),
                ("smooth", &|| reports::smooth(setting, &ones)),
                ("hp0", &|| reports::hp0(setting, *max_degree, jobs)),
                ("aut", &|| reports::aut(setting, config.search_cap, jobs)),
            ];
            let mut content = Map::new();
            let mut exit_code = EXIT_OK;
            for (name, f) in sections {
                let r = timed(name, timings, f)?;
                exit_code = exit_code.max(r.exit_code);
                content.insert(name.into(), Value::Object(r.content));
            }
            Ok(Report { content, exit_code })
        }
    }
}

/// Runs a validated configuration and renders its report.
pub fn run(config: &RunConfig) -> RunOutput {
    if let Err(m) = config.validate() {
        return RunOutput::error(EXIT_USAGE, m);
    }
    let start = Instant::now();
    let setting = match Setting::build(config.closure_cap) {
        Ok(s) => s,
        Err(f) => return f.into_output(),
    };
    let mut timings = Map::new();
    timings.insert("setup".into(), json!(start.elapsed().as_millis() as u64));
    let report = match dispatch(config, &setting, &mut timings) {
        Ok(r) => r,
        Err(f) => return f.into_output(),
    };
    timings.insert("total".into(), json!(start.elapsed().as_millis() as u64));

    let mut content = report.content;
    content.insert(
        "meta".into(),
        json!({"command": config.command.name(), "jobs": config.workers(), "elapsed_ms": timings}),
    );
    let value = Value::Object(content);
    let stdout = match config.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&value).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => text::to_text(&value),
    };
    RunOutput {
        exit_code: report.exit_code,
        stdout,
        stderr: String::new(),
    }
}

/// Parses `args` (including the program name) and runs. Usage errors exit
/// with [`EXIT_USAGE`]; `--help` and `--version` exit with 0.
pub fn main_with<I, T>(args: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(&config),
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                RunOutput {
                    exit_code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                RunOutput {
                    exit_code: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                }
            }
        }
    }
}
