//! The `exact1q` command line.
//!
//! Exit status: 0 on success, 2 when an input violates a precondition
//! (constant function, arity cap, malformed JSON or rational), 3 on I/O
//! failure, 4 when a self-check fails (a bug, never a user error).

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;

use crate::classify::{self, tables, ClassificationRecord};
use crate::construct::{self, GroupedWeightProfile};
use crate::feasibility::{self, FeasibilityResult, WeightVector};
use crate::json::{self, FunctionJson};
use crate::pbf::format_mask;
use crate::poly::{self, Degree1Polynomial, FunctionClasses};
use crate::rational::{self, Rational};
use crate::reduce::reduce;
use crate::simulate;
use crate::Error;

pub const WORKERS_ENV: &str = "EXACT1Q_WORKERS";

#[derive(Debug, Parser)]
#[command(
    name = "exact1q",
    version,
    about = "Exact quantum 1-query computability of partial Boolean functions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide exact 1-query computability of a function.
    Decide {
        function: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the reduced form (zeros = {0...0}).
    Reduce {
        function: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Degree-1 polynomial representing the reduced form.
    Represent {
        function: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Zero, one and undefined classes of a degree-1 polynomial.
    Polyfn {
        /// Comma-separated coefficients, e.g. 1/2,1/2,1/2.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Function computed by a grouped-weight algorithm.
    Construct {
        /// Group boundaries including the leading 0, e.g. 0,2,6.
        #[arg(long)]
        k: String,
        /// Per-group weights, e.g. 1/6,1/12.
        #[arg(long)]
        a: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Functions computed by the Deutsch-Jozsa algorithm on n bits.
    Dj {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify every reduced function on n bits.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Emit only this slice of the enumeration (no maximality columns).
        #[arg(long, requires = "shards")]
        shard: Option<usize>,
        #[arg(long, requires = "shard")]
        shards: Option<usize>,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-derive the published 3- or 4-bit table.
    Tables {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Simulate the 1-query algorithm for a function and witness.
    Simulate {
        function: PathBuf,
        #[arg(long)]
        witness: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
pub enum CliError {
    Precondition(Error),
    Io(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Precondition(_) => 2,
            CliError::Io(_) => 3,
            CliError::Internal(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Precondition(e) => write!(f, "error: {e}"),
            CliError::Io(m) => write!(f, "I/O error: {m}"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Precondition(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Weights as written to and read from JSON.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessJson {
    #[serde(default)]
    pub z0: Option<String>,
    pub z: Vec<String>,
}

impl From<&WeightVector> for WitnessJson {
    fn from(w: &WeightVector) -> Self {
        Self {
            z0: Some(rational::format(w.z0())),
            z: w.z().iter().map(rational::format).collect(),
        }
    }
}

impl WitnessJson {
    pub fn to_weights(&self) -> crate::Result<WeightVector> {
        let z: Vec<Rational> = self
            .z
            .iter()
            .map(|s| rational::parse(s))
            .collect::<crate::Result<_>>()?;
        let w = match &self.z0 {
            Some(z0) => WeightVector::from_parts(rational::parse(z0)?, z),
            None => WeightVector::new(z),
        };
        if !w.is_valid() {
            return Err(Error::InvalidWitness(
                "weights must be non-negative with z0 = 1 - sum z >= 0".into(),
            ));
        }
        Ok(w)
    }
}

#[derive(Debug, Serialize)]
struct DecideJson {
    feasible: bool,
    witness: Option<WitnessJson>,
    certificate: Option<Vec<String>>,
}

#[derive(Debug, Serialize)]
struct CoefficientsJson {
    coefficients: Vec<String>,
}

#[derive(Debug, Serialize)]
struct ClassesJson {
    n: usize,
    zero: Vec<String>,
    one: Vec<String>,
    star: Vec<String>,
}

#[derive(Debug, Serialize)]
struct ConstructJson {
    function: FunctionJson,
    level_solutions: Vec<construct::LevelSolution>,
}

#[derive(Debug, Serialize)]
struct RecordJson {
    support: Vec<String>,
    feasible: bool,
    witness: Option<WitnessJson>,
    symmetric: bool,
    fewer_bits: bool,
    dj_computable: bool,
    maximal: bool,
    included_by: Option<Vec<String>>,
    non_trivial: bool,
}

impl From<&ClassificationRecord> for RecordJson {
    fn from(r: &ClassificationRecord) -> Self {
        Self {
            support: r.support_strings(),
            feasible: r.feasible,
            witness: r.witness.as_ref().map(WitnessJson::from),
            symmetric: r.flags.symmetric,
            fewer_bits: r.flags.fewer_bits,
            dj_computable: r.flags.dj_computable,
            maximal: r.maximal,
            included_by: r
                .included_by
                .as_ref()
                .map(|s| s.iter().map(|&x| format_mask(x, r.arity)).collect()),
            non_trivial: r.non_trivial(),
        }
    }
}

#[derive(Debug, Serialize)]
struct ProbabilityJson {
    p0: Box<RawValue>,
    p1: Box<RawValue>,
}

#[derive(Debug, Serialize)]
struct SimulationJson {
    per_input: std::collections::BTreeMap<String, ProbabilityJson>,
    min_success: Box<RawValue>,
}

/// `x` with 12 significant digits in plain decimal notation.
pub fn format_sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return "0".into();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).clamp(0, 30) as usize;
    format!("{x:.decimals$}")
}

fn raw(x: f64) -> Box<RawValue> {
    RawValue::from_string(format_sig12(x)).expect("decimal literal is valid JSON")
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn parse_list<T>(s: &str, what: &str, f: impl Fn(&str) -> crate::Result<T>) -> CliResult<Vec<T>> {
    s.split(',')
        .map(|t| f(t.trim()))
        .collect::<crate::Result<_>>()
        .map_err(|e| CliError::Precondition(Error::Parse(format!("{what}: {e}"))))
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable output");
    s.push('\n');
    s
}

fn workers(flag: Option<usize>) -> CliResult<usize> {
    let from_env = match std::env::var(WORKERS_ENV) {
        Ok(v) => Some(v.trim().parse::<usize>().ok().filter(|&w| w > 0).ok_or_else(|| {
            CliError::Precondition(Error::Parse(format!(
                "{WORKERS_ENV} must be a positive integer, got {v:?}"
            )))
        })?),
        Err(_) => None,
    };
    match from_env.or(flag) {
        Some(0) => Err(CliError::Precondition(Error::Parse(
            "--workers must be positive".into(),
        ))),
        Some(w) => Ok(w),
        None => Ok(1),
    }
}

/// Runs one command and returns what it prints (or writes to `--out`).
fn execute(command: &Command) -> CliResult<(String, Option<PathBuf>)> {
    Ok(match command {
        Command::Decide { function, out } => {
            let f = json::parse_function(&read(function)?)?;
            let result = feasibility::decide(&f)?;
            if !feasibility::verify_decision(&f, &result) {
                return Err(CliError::Internal("decision failed its own verification".into()));
            }
            let body = DecideJson {
                feasible: result.is_feasible(),
                witness: result.witness().map(WitnessJson::from),
                certificate: result
                    .certificate()
                    .map(|c| c.multipliers.iter().map(rational::format).collect()),
            };
            (to_json(&body), out.clone())
        }
        Command::Reduce { function, out } => {
            let f = json::parse_function(&read(function)?)?;
            let g = reduce(&f)?;
            (json::function_to_string(&g.to_partial()) + "\n", out.clone())
        }
        Command::Represent { function, out } => {
            let f = json::parse_function(&read(function)?)?;
            let g = reduce(&f)?;
            let p = poly::represent(&g)?;
            let check = FeasibilityResult::Feasible(WeightVector::new(
                p.coefficients().iter().map(|c| c / rational::int(2)).collect(),
            ));
            if !feasibility::verify_result(&g, &check) {
                return Err(CliError::Internal("representation failed its own verification".into()));
            }
            let body = CoefficientsJson {
                coefficients: p.coefficients().iter().map(rational::format).collect(),
            };
            (to_json(&body), out.clone())
        }
        Command::Polyfn { coeffs, out } => {
            let c = parse_list(coeffs, "--coeffs", rational::parse)?;
            let classes = Degree1Polynomial::new(c)?.function_of()?;
            let n = classes.arity;
            let body = ClassesJson {
                n,
                zero: FunctionClasses::strings(&classes.zero, n),
                one: FunctionClasses::strings(&classes.one, n),
                star: FunctionClasses::strings(&classes.star, n),
            };
            (to_json(&body), out.clone())
        }
        Command::Construct { k, a, out } => {
            let boundaries = parse_list(k, "--k", |t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("{t:?} is not a non-negative integer")))
            })?;
            let values = parse_list(a, "--a", rational::parse)?;
            let profile = GroupedWeightProfile::new(boundaries, values)?;
            let f = construct::construct(&profile)?;
            let body = ConstructJson {
                function: FunctionJson::from(&f),
                level_solutions: construct::level_solutions(&profile),
            };
            (to_json(&body), out.clone())
        }
        Command::Dj { n, out } => {
            let fam: Vec<FunctionJson> = construct::dj_family(*n)?.iter().map(FunctionJson::from).collect();
            (to_json(&fam), out.clone())
        }
        Command::Enumerate {
            n,
            format,
            shard,
            shards,
            workers: w,
            out,
        } => {
            let records = match (shard, shards) {
                (Some(i), Some(k)) => {
                    if *k == 0 || i >= k {
                        return Err(CliError::Precondition(Error::Parse(format!(
                            "shard index {i} must be below shard count {k}"
                        ))));
                    }
                    classify::enumerate_shard(*n, *i, *k)?
                }
                _ => classify::enumerate_reduced_with_workers(*n, workers(*w)?)?,
            };
            let text = match format {
                Format::Csv => classify::records_to_csv(&records)?,
                Format::Json => to_json(&records.iter().map(RecordJson::from).collect::<Vec<_>>()),
            };
            (text, out.clone())
        }
        Command::Tables { n, workers: w, out } => {
            if *n != 3 && *n != 4 {
                return Err(CliError::Precondition(Error::Parse(format!(
                    "--n must be 3 or 4, got {n}"
                ))));
            }
            let report = tables::reproduce_tables_with_workers(*n, workers(*w)?)?;
            (to_json(&report), out.clone())
        }
        Command::Simulate { function, witness, out } => {
            let f = json::parse_function(&read(function)?)?;
            let w: WitnessJson = serde_json::from_str(&read(witness)?)
                .map_err(|e| CliError::Precondition(Error::Parse(format!("witness JSON: {e}"))))?;
            let z = w.to_weights()?;
            let report = simulate::success_probabilities(&f, &z)?;
            let n = f.arity();
            let body = SimulationJson {
                per_input: report
                    .per_input
                    .iter()
                    .map(|(&x, &(p0, p1))| {
                        (
                            format_mask(x, n),
                            ProbabilityJson {
                                p0: raw(p0),
                                p1: raw(p1),
                            },
                        )
                    })
                    .collect(),
                min_success: raw(report.min_success),
            };
            (to_json(&body), out.clone())
        }
    })
}

/// Parses `args` (including the program name) and runs the command, writing
/// normal output to `stdout` and diagnostics to `stderr`. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(stderr, "{e}")
            } else {
                write!(stdout, "{e}")
            };
            return code;
        }
    };
    let outcome = execute(&cli.command).and_then(|(text, out)| match out {
        Some(path) => std::fs::write(&path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(e.to_string())),
    });
    match outcome {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "{e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig12() {
        assert_eq!(format_sig12(1.0), "1.00000000000");
        assert_eq!(format_sig12(0.5), "0.500000000000");
        assert_eq!(format_sig12(0.0), "0");
        assert_eq!(format_sig12(123.456), "123.456000000");
    }

    #[test]
    fn witness_json_validation() {
        let ok = WitnessJson {
            z0: None,
            z: vec!["1/2".into(), "1/2".into()],
        };
        assert_eq!(ok.to_weights().unwrap().z0(), &rational::int(0));
        let bad = WitnessJson {
            z0: Some("1/2".into()),
            z: vec!["1/2".into(), "1/2".into()],
        };
        assert!(bad.to_weights().is_err());
        let neg = WitnessJson {
            z0: None,
            z: vec!["-1/2".into()],
        };
        assert!(neg.to_weights().is_err());
    }

    #[test]
    fn polyfn_in_process() {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(["exact1q", "polyfn", "--coeffs", "1/2,1/2,1/2"], &mut out, &mut err);
        assert_eq!(code, 0, "{}", String::from_utf8_lossy(&err));
        let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
        assert_eq!(v["one"], serde_json::json!(["011", "101", "110"]));
    }

    #[test]
    fn bad_rational_exits_2() {
        let mut out = Vec::new();
        let mut err = Vec::new();
        assert_eq!(run(["exact1q", "polyfn", "--coeffs", "1/0"], &mut out, &mut err), 2);
        assert_eq!(run(["exact1q", "frobnicate"], &mut out, &mut err), 2);
    }
}
