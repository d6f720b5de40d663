//! The `growthforge` command-line tool.
//!
//! [`run`] is the whole program minus process plumbing: it parses the
//! arguments, executes one command and writes the report. Exit codes are
//! 0 on success, 1 for usage, parse and validation errors, and 2 when the
//! input is well formed but the requested result does not exist (for
//! example a free-semigroup witness for a polynomial-growth group).

pub mod spec_file;

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use growthforge::groups::{GeneratingSet, GroupError, Word};
use growthforge::growth::{enumerate_ball_with, rate_bounds, GrowthError, GrowthReport, Threads, DEFAULT_BUDGET};
use growthforge::spectra::{char_poly, kronecker_all_roots_of_unity};
use growthforge::witness::{
    classify_split_extension, free_pair_standard_with_depth, verify_free_semigroup, witness_search_with_depth,
    Construction, SearchBranch, Verdict, Verification, WitnessError, DEFAULT_VERIFY_DEPTH,
};
use growthforge::{BigInt, IntGroupSpec, IntPolynomial, IntWitness, Scalar};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};
use thiserror::Error;

pub use spec_file::{parse_group_spec, serialize_group_spec, spec_to_json};

/// Environment variable capping internal parallelism (0 = sequential).
pub const THREADS_ENV: &str = "GROWTHFORGE_THREADS";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Io(String),
    #[error("{message}")]
    Domain { tag: &'static str, message: String },
}

impl CliError {
    pub fn from_group(e: GroupError) -> Self {
        CliError::Validation(e.to_string())
    }

    /// Machine-readable tag printed as `error[tag]: message`.
    pub fn tag(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Parse { .. } => "parse",
            CliError::Validation(_) => "validation",
            CliError::Io(_) => "io",
            CliError::Domain { tag, .. } => tag,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain { .. } => 2,
            _ => 1,
        }
    }
}

impl From<WitnessError> for CliError {
    fn from(e: WitnessError) -> Self {
        let tag = match &e {
            WitnessError::Group(g) => return CliError::from_group(g.clone()),
            WitnessError::Spectra(_) => "spectra",
            WitnessError::Exact(_) => "exact",
            WitnessError::AllRootsOfUnity => "all_roots_of_unity",
            WitnessError::NoCyclicSupport => "no_cyclic_support",
            WitnessError::NotExponential => "not_exponential",
            WitnessError::DegenerateGeneratingSet => "degenerate_generating_set",
            WitnessError::RecursionExhausted(_) => "recursion_exhausted",
            WitnessError::BudgetExceeded { .. } => "budget_exceeded",
            WitnessError::InvalidDepth => return CliError::Usage(e.to_string()),
            WitnessError::KindMismatch(_) => "kind_mismatch",
            WitnessError::VerificationFailed { .. } => "verification_failed",
            WitnessError::LengthBoundViolated { .. } => "length_bound_violated",
        };
        CliError::Domain { tag, message: e.to_string() }
    }
}

impl From<GrowthError> for CliError {
    fn from(e: GrowthError) -> Self {
        let tag = match &e {
            GrowthError::Group(g) => return CliError::from_group(g.clone()),
            GrowthError::InvalidBudget => return CliError::Usage(e.to_string()),
            GrowthError::BudgetExceeded { .. } => "budget_exceeded",
            GrowthError::EmptyReport => "empty_report",
            GrowthError::InconsistentBounds { .. } => "inconsistent_bounds",
            GrowthError::ThreadPool(_) => "thread_pool",
        };
        CliError::Domain { tag, message: e.to_string() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "growthforge", version, about = "Exact growth analysis for abelian-by-cyclic groups")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "human", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide polynomial or uniform exponential growth of a split extension.
    Classify {
        /// Spec file, or inline JSON starting with `{`.
        #[arg(long)]
        group: String,
    },
    /// Count balls in the Cayley graph.
    Growth {
        #[arg(long)]
        group: String,
        #[arg(long)]
        radius: usize,
        /// Cap on distinct elements visited.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Also write the table to this file.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Generating set as `label=word, ...` over the spec's generators.
        #[arg(long)]
        gens: Option<String>,
    },
    /// Construct and check a pair of words generating a free semigroup.
    Witness {
        #[arg(long)]
        group: String,
        #[arg(long)]
        gens: Option<String>,
        #[arg(long, default_value_t = DEFAULT_VERIFY_DEPTH)]
        verify_depth: u32,
    },
    /// Check by enumeration whether two words generate a free semigroup.
    Verify {
        #[arg(long)]
        group: String,
        #[arg(long)]
        word_a: String,
        #[arg(long)]
        word_b: String,
        #[arg(long, default_value_t = DEFAULT_VERIFY_DEPTH)]
        depth: u32,
    },
    /// Are all roots of a monic integer polynomial roots of unity?
    Kronecker {
        /// Coefficients, highest degree first, comma separated (`1,-3,1`).
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
}

/// Command outcome before rendering.
struct Outcome {
    command: &'static str,
    inputs: Value,
    results: Value,
    human: String,
    error: Option<CliError>,
}

impl Outcome {
    fn ok(command: &'static str, inputs: Value, results: Value, human: String) -> Self {
        Outcome { command, inputs, results, human, error: None }
    }
}

/// Runs one invocation. `args` includes the program name; `threads` is the
/// value of [`THREADS_ENV`], if set.
pub fn run<I, S>(args: I, threads: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let text = text.strip_prefix("error: ").unwrap_or(&text);
                    let _ = write!(err, "error[usage]: {text}");
                    1
                }
            };
        }
    };
    let start = Instant::now();
    let outcome = parse_threads(threads).and_then(|threads| execute(cli.command, threads));
    let elapsed = start.elapsed();
    match outcome {
        Ok(o) => {
            let report = run_report(&o, elapsed.as_secs_f64());
            match cli.format {
                Format::Human => {
                    let _ = write!(out, "{}", o.human);
                }
                Format::Json => {
                    let _ = writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("report serializes"));
                }
            }
            match &o.error {
                None => 0,
                Some(e) => {
                    let _ = writeln!(err, "error[{}]: {e}", e.tag());
                    e.exit_code()
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error[{}]: {e}", e.tag());
            e.exit_code()
        }
    }
}

fn parse_threads(value: Option<&str>) -> Result<Threads, CliError> {
    match value {
        None => Ok(Threads::Ambient),
        Some(v) => v
            .trim()
            .parse::<usize>()
            .map(Threads::from_count)
            .map_err(|_| CliError::Usage(format!("{THREADS_ENV} must be a non-negative integer, got `{v}`"))),
    }
}

/// The machine-readable report. Everything but `timings` is a function of
/// the inputs alone.
fn run_report(o: &Outcome, seconds: f64) -> Value {
    let canonical = serde_json::to_string(&json!({"command": o.command, "inputs": o.inputs})).expect("inputs serialize");
    let digest = hex::encode(Sha256::digest(canonical.as_bytes()));
    let mut report = Map::new();
    report.insert("command".into(), json!(o.command));
    report.insert("tool_version".into(), json!(env!("CARGO_PKG_VERSION")));
    report.insert("inputs_digest".into(), json!(digest));
    report.insert("inputs".into(), o.inputs.clone());
    report.insert("results".into(), o.results.clone());
    if let Some(e) = &o.error {
        report.insert("error".into(), json!({"tag": e.tag(), "message": e.to_string()}));
    }
    report.insert("timings".into(), json!({"wall_seconds": seconds}));
    Value::Object(report)
}

fn execute(command: Command, threads: Threads) -> Result<Outcome, CliError> {
    match command {
        Command::Classify { group } => classify(&load_group(&group)?),
        Command::Growth { group, radius, budget, csv, gens } => {
            growth(&load_group(&group)?, radius, budget, csv, gens.as_deref(), threads)
        }
        Command::Witness { group, gens, verify_depth } => witness(&load_group(&group)?, gens.as_deref(), verify_depth),
        Command::Verify { group, word_a, word_b, depth } => verify(&load_group(&group)?, &word_a, &word_b, depth),
        Command::Kronecker { poly } => kronecker(&poly),
    }
}

/// Reads `--group`: inline JSON when it starts with `{`, a path otherwise.
pub fn load_group(arg: &str) -> Result<IntGroupSpec, CliError> {
    if arg.trim_start().starts_with('{') {
        return parse_group_spec(arg);
    }
    let text = std::fs::read_to_string(arg).map_err(|e| CliError::Io(format!("{arg}: {e}")))?;
    parse_group_spec(&text)
}

fn parse_word(text: &str) -> Result<Word, CliError> {
    Word::parse(text).map_err(CliError::from_group)
}

fn parse_gens(spec: &IntGroupSpec, gens: Option<&str>) -> Result<GeneratingSet, CliError> {
    let set = match gens {
        None => GeneratingSet::standard(spec),
        Some(text) => GeneratingSet::parse(text).map_err(CliError::from_group)?,
    };
    set.check_against(spec).map_err(CliError::from_group)?;
    Ok(set)
}

fn ints(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(spec_file::int_json).collect())
}

fn poly_json(p: &IntPolynomial) -> Value {
    ints(p.coeffs_high_first())
}

fn witness_json(w: &IntWitness) -> Value {
    let construction = match &w.construction {
        Construction::Standard { power, vector } => {
            json!({"kind": "standard", "power": power, "vector": ints(vector)})
        }
        Construction::Search { trace } => {
            let steps: Vec<Value> = trace
                .iter()
                .map(|s| {
                    let branch = match &s.branch {
                        SearchBranch::Base { vector, word } => {
                            json!({"kind": "base", "vector": ints(vector), "word": word.to_string()})
                        }
                        SearchBranch::Quotient { index, generators } => {
                            json!({"kind": "quotient", "index": index, "generators": generators})
                        }
                    };
                    json!({
                        "rank": s.rank,
                        "t_hat": s.t_hat.to_string(),
                        "exponent": s.exponent,
                        "power": s.power,
                        "conjugates": s.conjugates,
                        "sublattice_rank": s.sublattice_rank,
                        "branch": branch,
                    })
                })
                .collect();
            json!({"kind": "search", "trace": steps})
        }
    };
    json!({
        "word_a": w.word_a.to_string(),
        "word_b": w.word_b.to_string(),
        "max_length": w.max_length(),
        "rate_lower_bound": w.rate_lower_bound_display(),
        "verified_depth": w.verified_depth,
        "construction": construction,
    })
}

fn witness_human(w: &IntWitness) -> String {
    format!(
        "witness: a = {}, b = {}\nmax length: {}\nverified depth: {}\nlower bound: {}\n",
        w.word_a,
        w.word_b,
        w.max_length(),
        w.verified_depth,
        w.rate_lower_bound_display()
    )
}

fn classify(spec: &IntGroupSpec) -> Result<Outcome, CliError> {
    let inputs = json!({"group": spec_to_json(spec)});
    let c = classify_split_extension(spec)?;
    let a = spec.action().expect("classification succeeded on a split extension");
    let p = char_poly(a).map_err(WitnessError::from)?;
    let mut human = format!("verdict: {}\ncharacteristic polynomial: {p}\n", c.verdict.as_str());
    let results = match c.witness() {
        Some(w) => {
            human.push_str(&witness_human(w));
            json!({"verdict": c.verdict.as_str(), "char_poly": poly_json(&p), "evidence": "witness", "witness": witness_json(w)})
        }
        None => {
            human.push_str("evidence: every eigenvalue is a root of unity\n");
            json!({"verdict": c.verdict.as_str(), "char_poly": poly_json(&p), "evidence": "kronecker", "witness": null})
        }
    };
    Ok(Outcome::ok("classify", inputs, results, human))
}

fn growth_results(report: &GrowthReport) -> Value {
    let roots: Vec<String> = report
        .nth_root_upper_bounds()
        .into_iter()
        .map(|r| r.map(|x| growthforge::growth::format_significant(x, 6)).unwrap_or_default())
        .collect();
    json!({
        "requested_radius": report.requested_radius,
        "radius": report.radius(),
        "complete": report.is_complete(),
        "elements_visited": report.elements_visited,
        "ball_sizes": report.ball_sizes,
        "nth_root": roots,
    })
}

/// Lower-bound witness for the growth summary, when one exists.
fn growth_witness(spec: &IntGroupSpec, set: &GeneratingSet) -> Option<IntWitness> {
    let c = classify_split_extension(spec).ok()?;
    if c.verdict != Verdict::UniformExponentialGrowth {
        return None;
    }
    witness_search_with_depth(spec, set, DEFAULT_VERIFY_DEPTH).ok()
}

fn growth(
    spec: &IntGroupSpec,
    radius: usize,
    budget: u64,
    csv: Option<PathBuf>,
    gens: Option<&str>,
    threads: Threads,
) -> Result<Outcome, CliError> {
    let set = parse_gens(spec, gens)?;
    let inputs = json!({
        "group": spec_to_json(spec),
        "generating_set": set.to_string(),
        "radius": radius,
        "budget": budget,
    });
    let (report, error) = match enumerate_ball_with(spec, &set, radius, budget, threads) {
        Ok(r) => (r, None),
        Err(GrowthError::BudgetExceeded { partial }) => {
            let e = CliError::from(GrowthError::BudgetExceeded { partial: partial.clone() });
            (*partial, Some(e))
        }
        Err(e) => return Err(e.into()),
    };
    let table = report.to_csv();
    if let Some(path) = &csv {
        std::fs::write(path, &table).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    }
    let mut results = growth_results(&report);
    let mut human = table;
    if report.radius() >= 1 {
        let witness = growth_witness(spec, &set);
        let bounds = rate_bounds(&report, witness.as_ref())?;
        human.push_str(&format!("upper bound: {} (n = {})\n", bounds.upper_display(), bounds.upper_radius));
        human.push_str(&format!("lower bound: {}\n", bounds.lower_display()));
        if let Some(w) = &witness {
            human.push_str(&format!("lower bound witness: a = {}, b = {}\n", w.word_a, w.word_b));
        }
        results["upper_bound"] = json!({"value": bounds.upper_display(), "radius": bounds.upper_radius});
        results["lower_bound"] = json!({
            "value": bounds.lower_display(),
            "witness": witness.as_ref().map(witness_json),
        });
    }
    human.push_str(&format!("elements visited: {}\n", report.elements_visited));
    let mut o = Outcome::ok("growth", inputs, results, human);
    o.error = error;
    Ok(o)
}

fn witness(spec: &IntGroupSpec, gens: Option<&str>, depth: u32) -> Result<Outcome, CliError> {
    let set = parse_gens(spec, gens)?;
    let inputs = json!({"group": spec_to_json(spec), "generating_set": set.to_string(), "verify_depth": depth});
    let w = match gens {
        None => free_pair_standard_with_depth(spec.action().ok_or_else(|| not_split(spec))?, depth)?,
        Some(_) => witness_search_with_depth(spec, &set, depth)?,
    };
    Ok(Outcome::ok("witness", inputs, json!({"witness": witness_json(&w)}), witness_human(&w)))
}

fn not_split(spec: &IntGroupSpec) -> CliError {
    WitnessError::KindMismatch(spec.kind().name().into()).into()
}

fn verify(spec: &IntGroupSpec, a: &str, b: &str, depth: u32) -> Result<Outcome, CliError> {
    let (wa, wb) = (parse_word(a)?, parse_word(b)?);
    let inputs = json!({
        "group": spec_to_json(spec),
        "word_a": wa.to_string(),
        "word_b": wb.to_string(),
        "depth": depth,
    });
    let (results, human) = match verify_free_semigroup(spec, &wa, &wb, depth)? {
        Verification::Free { distinct } => (
            json!({"free": true, "distinct": distinct}),
            format!("free to depth {depth}: {distinct} distinct elements\n"),
        ),
        Verification::Collision { earlier, later } => (
            json!({"free": false, "collision": {"earlier": earlier, "later": later}}),
            format!("not free: `{earlier}` and `{later}` are equal\n"),
        ),
    };
    Ok(Outcome::ok("verify", inputs, results, human))
}

/// Parses `1,-3,1` into a monic polynomial, highest degree first.
pub fn parse_poly(text: &str) -> Result<IntPolynomial, CliError> {
    let coeffs = text
        .split(',')
        .map(|c| BigInt::parse_decimal(c).ok_or_else(|| CliError::Usage(format!("`{}` is not an integer", c.trim()))))
        .collect::<Result<Vec<_>, _>>()?;
    if coeffs.first() != Some(&BigInt::from(1)) {
        return Err(CliError::Usage("coefficients are highest degree first and must start with 1".into()));
    }
    Ok(IntPolynomial::new(coeffs))
}

fn kronecker(text: &str) -> Result<Outcome, CliError> {
    let p = parse_poly(text)?;
    let inputs = json!({"poly": poly_json(&p)});
    let all = kronecker_all_roots_of_unity(&p).map_err(WitnessError::from)?;
    Ok(Outcome::ok("kronecker", inputs, json!({"all_roots_of_unity": all}), format!("{all}\n")))
}
