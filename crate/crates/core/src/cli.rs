//! The `udcodes` command-line front end.
//!
//! Every command except `classify-all` writes a single JSON document to
//! standard output:
//!
//! ```json
//! {"command": "...", "inputs": {...}, "results": {...}, "status": "ok"}
//! ```
//!
//! with `"status": "error"` and a `"message"` on failure. Counts, Kraft sums
//! and ratios are exact and serialized as decimal strings. Keys are sorted, so
//! identical invocations produce identical bytes. `--pretty` prints the same
//! content as indented `key: value` lines instead.
//!
//! Exit status is 0 on success, 1 when a verification or cross-check finds a
//! discrepancy, and 2 on usage, input or parse errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Map, Value};

use crate::census::ratio_lower_bound_with_cap;
use crate::decide::{delay_analysis, sardinas_patterson, DelayReport, Termination, WitnessKind};
use crate::enumerate::{
    census_with_cap, classify, safe_bound, two_factorization_search, Classification, Mode,
    Universe, DEFAULT_UNIVERSE_CAP,
};
use crate::error::{Error, Result};
use crate::kraft::{
    canonical_prefix_code, count_anchored_prefix_codes, infinite_delay_witness, kraft_sum,
    ud_nonprefix_witness,
};
use crate::verify::{parse_lengths, run as run_suite, Suite, VerifyOptions};
use crate::words::{Alphabet, Code, LengthProfile, Word};

/// Environment variable overriding the enumeration cap.
pub const UNIVERSE_CAP_VAR: &str = "CODES_UNIVERSE_CAP";

#[derive(Debug, Parser)]
#[command(
    name = "udcodes",
    version,
    about = "Uniquely decodable, prefix and finite-delay codes"
)]
pub struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone)]
pub struct Lengths(pub Vec<usize>);

#[derive(Debug, Clone, Copy)]
pub struct Pair(pub usize, pub usize);

fn lengths_arg(s: &str) -> std::result::Result<Lengths, String> {
    parse_lengths(s).map(Lengths)
}

fn pair_arg(s: &str) -> std::result::Result<Pair, String> {
    match parse_lengths(s)?.as_slice() {
        [a, b] => Ok(Pair(*a, *b)),
        _ => Err("expected two lengths a,b".into()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Formula,
    Enumerate,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WitnessKindArg {
    Prefix,
    UdNonprefix,
    InfiniteDelay,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify the code in a code file.
    Check {
        file: PathBuf,
        /// Include the Sardinas–Patterson rounds.
        #[arg(long)]
        trace: bool,
        /// Include the deciphering delay and, if infinite, a witness.
        #[arg(long)]
        delay: bool,
    },
    /// Count prefix, finite-delay and uniquely decodable codes.
    Count {
        #[arg(long, value_parser = lengths_arg)]
        lengths: Lengths,
        #[arg(long, default_value_t = 2)]
        alphabet: usize,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
        /// Also count prefix codes holding the anchors 0^(a-1)1 and 0^(b-1)1,
        /// and check the resulting lower bound on |UD|/|PR|.
        #[arg(long, value_parser = pair_arg)]
        anchored: Option<Pair>,
    },
    /// Construct a code with the given lengths.
    Witness {
        #[arg(long, value_enum)]
        kind: WitnessKindArg,
        #[arg(long, value_parser = lengths_arg)]
        lengths: Lengths,
        #[arg(long, default_value_t = 2)]
        alphabet: usize,
    },
    /// Cross-check formulas, decision procedures and brute force over a suite.
    Verify {
        /// One comma-separated length sequence per line; built-in suite if absent.
        #[arg(long)]
        suite: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        alphabet_max: u32,
    },
    /// Classify every code with the given lengths, as CSV.
    ClassifyAll {
        #[arg(long, value_parser = lengths_arg)]
        lengths: Lengths,
        #[arg(long, default_value_t = 2)]
        alphabet: usize,
        /// Write the CSV here and a JSON summary to standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

/// A command's outcome before serialization.
struct Outcome {
    results: Value,
    discrepancy: bool,
}

fn ok(results: Value) -> Result<Outcome> {
    Ok(Outcome {
        results,
        discrepancy: false,
    })
}

fn big(v: &BigUint) -> Value {
    Value::String(v.to_string())
}

fn opt_big(v: &Option<BigUint>) -> Value {
    v.as_ref().map_or(Value::Null, big)
}

fn words_json(c: &Code) -> Value {
    c.words()
        .iter()
        .map(|w| Value::String(w.to_string()))
        .collect()
}

fn word_json(w: &Word) -> Value {
    Value::String(w.to_string())
}

fn classification_json(c: &Classification) -> Value {
    json!({
        "injective": c.injective,
        "prefix": c.prefix,
        "ud": c.ud,
        "finite_delay": c.finite_delay,
        "delay": c.delay,
    })
}

fn delay_json(report: &DelayReport) -> Value {
    let witness = report.witness.as_ref().map(|w| {
        let (preamble, period) = w.normalized();
        json!({
            "kind": match w.kind { WitnessKind::Cycle => "cycle", WitnessKind::CatchUp => "catch-up" },
            "first_words": [w.first_words.0, w.first_words.1],
            "preamble": word_json(&w.preamble),
            "period": word_json(&w.period),
            "rendered": w.render(),
            "normalized": {"preamble": word_json(&preamble), "period": word_json(&period)},
        })
    });
    json!({
        "finite": report.finite,
        "delay": report.delay,
        "witness": witness,
    })
}

/// The enumeration cap from the environment, or the default.
pub fn universe_cap() -> Result<u64> {
    match std::env::var(UNIVERSE_CAP_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Error::Argument(format!(
                "{UNIVERSE_CAP_VAR} must be a non-negative integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_UNIVERSE_CAP),
    }
}

fn profile_of(lengths: &Lengths) -> Result<LengthProfile> {
    LengthProfile::from_lengths(&lengths.0)
}

fn cmd_check(file: &PathBuf, trace: bool, delay: bool) -> Result<Outcome> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Error::Argument(format!("{}: {e}", file.display())))?;
    let code = Code::parse_file(&text)?;
    let sp = sardinas_patterson(&code);
    let mut results = Map::new();
    results.insert("alphabet".into(), json!(code.alphabet().size()));
    results.insert("code".into(), words_json(&code));
    results.insert("injective".into(), json!(code.is_injective()));
    results.insert("prefix".into(), json!(crate::decide::is_prefix_code(&code)));
    results.insert("ud".into(), json!(sp.is_unique()));
    if !sp.is_unique() {
        let found = two_factorization_search(&code, safe_bound(&code));
        results.insert(
            "counterexample".into(),
            found.map_or(
                Value::Null,
                |a| json!({"word": word_json(&a.word), "factorizations": [a.first, a.second]}),
            ),
        );
    }
    if trace {
        let rounds: Vec<Value> = sp
            .rounds
            .iter()
            .map(|r| r.iter().map(word_json).collect())
            .collect();
        let termination = match sp.termination {
            Termination::EmptySet => json!({"kind": "empty"}),
            Termination::Cycle { repeats } => json!({"kind": "cycle", "repeats": repeats}),
        };
        results.insert(
            "trace".into(),
            json!({
                "rounds": rounds,
                "termination": termination,
                "violation": sp.violation.as_ref().map(|(i, w)| json!({"round": i, "word": word_json(w)})),
                "duplicate": sp.duplicate.map(|(i, j)| json!([i, j])),
            }),
        );
    }
    if delay {
        let value = match delay_analysis(&code) {
            Ok(report) => delay_json(&report),
            Err(e) => json!({"error": e.to_string()}),
        };
        results.insert("delay".into(), value);
    }
    ok(Value::Object(results))
}

fn cmd_count(
    lengths: &Lengths,
    n: usize,
    method: Method,
    anchored: Option<Pair>,
    cap: u64,
) -> Result<Outcome> {
    let alphabet = Alphabet::new(n)?;
    let n = alphabet.size() as u32;
    let profile = profile_of(lengths)?;
    let mode = match method {
        Method::Formula => Mode::Formula,
        Method::Enumerate => Mode::Enumeration,
        Method::Both => Mode::Both,
    };
    let report = census_with_cap(&profile, n, mode, cap)?;
    let sum = kraft_sum(&profile, n);
    let mut results = Map::new();
    results.insert("profile".into(), Value::String(profile.to_string()));
    results.insert("kraft_sum".into(), Value::String(sum.to_string()));
    results.insert("feasible".into(), json!(*sum.numer() <= *sum.denom()));
    results.insert("total".into(), big(&report.total));
    results.insert("pr".into(), big(&report.pr));
    results.insert("fd".into(), opt_big(&report.fd));
    results.insert("ud".into(), opt_big(&report.ud));
    results.insert(
        "source".into(),
        json!(match report.source {
            Mode::Formula => "formula",
            Mode::Enumeration => "enumeration",
            Mode::Both => "both",
        }),
    );
    let discrepancies: Vec<Value> = report
        .discrepancies
        .iter()
        .map(|d| json!({"quantity": d.quantity, "formula": big(&d.formula), "enumeration": big(&d.enumeration)}))
        .collect();
    let mut discrepancy = !discrepancies.is_empty();
    results.insert("discrepancies".into(), Value::Array(discrepancies));

    if let Some(Pair(a, b)) = anchored {
        let (lo, hi) = (a.min(b), a.max(b));
        let family = count_anchored_prefix_codes(&profile, n, lo, hi)?;
        results.insert(
            "anchored".into(),
            json!({
                "a": lo,
                "b": hi,
                "anchors": [word_json(&family.anchor_a), word_json(&family.anchor_b)],
                "count": big(&family.count),
            }),
        );
        let bound = ratio_lower_bound_with_cap(&profile, n, a, b, cap)?;
        if bound.satisfied == Some(false) {
            discrepancy = true;
        }
        let pr_plus_anchored = &bound.pr_count + &family.count;
        results.insert(
            "bound".into(),
            json!({
                "lower_bound": bound.lower_bound.to_string(),
                "pr": big(&bound.pr_count),
                "ud": opt_big(&bound.ud_count),
                "ratio": bound.ratio.as_ref().map(|r| r.to_string()),
                "satisfied": bound.satisfied,
                "pr_plus_anchored": big(&pr_plus_anchored),
                "pr_plus_anchored_le_ud": bound.ud_count.as_ref().map(|ud| pr_plus_anchored <= *ud),
            }),
        );
    }
    Ok(Outcome {
        results: Value::Object(results),
        discrepancy,
    })
}

fn cmd_witness(kind: WitnessKindArg, lengths: &Lengths, n: usize) -> Result<Outcome> {
    let alphabet = Alphabet::new(n)?;
    let profile = profile_of(lengths)?;
    let mut results = Map::new();
    let code = match kind {
        WitnessKindArg::Prefix => canonical_prefix_code(&profile, alphabet)?,
        WitnessKindArg::UdNonprefix => ud_nonprefix_witness(&profile, alphabet)?,
        WitnessKindArg::InfiniteDelay => {
            let (code, construction) = infinite_delay_witness(&profile, alphabet)?;
            results.insert(
                "construction".into(),
                json!({"case": construction.case.name(), "a": construction.a, "b": construction.b, "eta": construction.eta, "q": construction.q}),
            );
            code
        }
    }
    .arrange_to(&lengths.0)?;
    results.insert("code".into(), words_json(&code));
    results.insert("file".into(), Value::String(code.to_file_string()));
    results.insert(
        "classification".into(),
        classification_json(&classify(&code)),
    );
    ok(Value::Object(results))
}

fn cmd_verify(suite: &Option<PathBuf>, alphabet_max: u32, cap: u64) -> Result<Outcome> {
    let suite = match suite {
        Some(path) => Suite::parse(
            &std::fs::read_to_string(path)
                .map_err(|e| Error::Argument(format!("{}: {e}", path.display())))?,
        )?,
        None => Suite::builtin(),
    };
    let opts = VerifyOptions {
        alphabet_max,
        universe_cap: cap,
        ..VerifyOptions::default()
    };
    let outcomes = run_suite(&suite, &opts)?;
    let failures = outcomes.iter().filter(|o| !o.passed).count();
    let checks: Vec<Value> = outcomes
        .iter()
        .map(|o| {
            json!({
                "profile": o.profile.to_string(),
                "n": o.n,
                "check": o.check,
                "passed": o.passed,
                "detail": o.detail,
            })
        })
        .collect();
    Ok(Outcome {
        results: json!({
            "profiles": suite.profiles.len(),
            "checks": outcomes.len(),
            "failures": failures,
            "outcomes": checks,
        }),
        discrepancy: failures > 0,
    })
}

/// CSV rows for every code with the given lengths, in enumeration order.
pub fn write_classification_csv<W: Write>(universe: &Universe, out: W) -> Result<u64> {
    let mut writer = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Argument(format!("writing CSV: {e}"));
    writer
        .write_record(["code", "injective", "prefix", "ud", "finite_delay", "delay"])
        .map_err(io)?;
    let mut rows = 0;
    for code in universe.iter() {
        let c = classify(&code);
        let delay = match (c.injective, c.delay) {
            (_, Some(d)) => d.to_string(),
            (true, None) => "inf".into(),
            (false, None) => String::new(),
        };
        writer
            .write_record([
                code.join(";"),
                c.injective.to_string(),
                c.prefix.to_string(),
                c.ud.to_string(),
                c.finite_delay.to_string(),
                delay,
            ])
            .map_err(io)?;
        rows += 1;
    }
    writer
        .flush()
        .map_err(|e| Error::Argument(format!("writing CSV: {e}")))?;
    Ok(rows)
}

fn inputs_json(command: &Command) -> (&'static str, Value) {
    match command {
        Command::Check { file, trace, delay } => (
            "check",
            json!({"file": file.display().to_string(), "trace": trace, "delay": delay}),
        ),
        Command::Count {
            lengths,
            alphabet,
            method,
            anchored,
        } => (
            "count",
            json!({
                "lengths": lengths.0,
                "alphabet": alphabet,
                "method": format!("{method:?}").to_lowercase(),
                "anchored": anchored.map(|Pair(a, b)| json!([a, b])),
            }),
        ),
        Command::Witness {
            kind,
            lengths,
            alphabet,
        } => (
            "witness",
            json!({
                "kind": match kind {
                    WitnessKindArg::Prefix => "prefix",
                    WitnessKindArg::UdNonprefix => "ud-nonprefix",
                    WitnessKindArg::InfiniteDelay => "infinite-delay",
                },
                "lengths": lengths.0,
                "alphabet": alphabet,
            }),
        ),
        Command::Verify {
            suite,
            alphabet_max,
        } => (
            "verify",
            json!({
                "suite": suite.as_ref().map_or("built-in".to_string(), |p| p.display().to_string()),
                "alphabet_max": alphabet_max,
            }),
        ),
        Command::ClassifyAll {
            lengths,
            alphabet,
            output,
        } => (
            "classify-all",
            json!({
                "lengths": lengths.0,
                "alphabet": alphabet,
                "output": output.as_ref().map(|p| p.display().to_string()),
            }),
        ),
    }
}

fn pretty(value: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        pretty(v, indent + 1, out);
                    }
                    Value::Array(items) if items.iter().any(|i| i.is_object() || i.is_array()) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        pretty(v, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(v))),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}-\n"));
                        pretty(item, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}- {}\n", scalar(item))),
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", scalar(value))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.replace('\n', " | "),
        Value::Null => "-".into(),
        Value::Array(items) => items.iter().map(scalar).collect::<Vec<_>>().join(", "),
        other => other.to_string(),
    }
}

fn render(report: &Value, pretty_output: bool) -> String {
    if pretty_output {
        let mut out = String::new();
        pretty(report, 0, &mut out);
        out
    } else {
        format!("{report}\n")
    }
}

/// Run the CLI on `args` (including the program name), writing the report
/// to `stdout` and diagnostics to `stderr`. Returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let (name, inputs) = inputs_json(&cli.command);

    let outcome = universe_cap().and_then(|cap| match &cli.command {
        Command::Check { file, trace, delay } => cmd_check(file, *trace, *delay),
        Command::Count {
            lengths,
            alphabet,
            method,
            anchored,
        } => cmd_count(lengths, *alphabet, *method, *anchored, cap),
        Command::Witness {
            kind,
            lengths,
            alphabet,
        } => cmd_witness(*kind, lengths, *alphabet),
        Command::Verify {
            suite,
            alphabet_max,
        } => cmd_verify(suite, *alphabet_max, cap),
        Command::ClassifyAll {
            lengths,
            alphabet,
            output,
        } => {
            let universe = Universe::for_lengths(&lengths.0, Alphabet::new(*alphabet)?, cap)?;
            match output {
                None => {
                    write_classification_csv(&universe, &mut *stdout)?;
                    ok(Value::Null)
                }
                Some(path) => {
                    let file = std::fs::File::create(path)
                        .map_err(|e| Error::Argument(format!("{}: {e}", path.display())))?;
                    let rows = write_classification_csv(&universe, std::io::BufWriter::new(file))?;
                    ok(json!({"rows": rows, "output": path.display().to_string()}))
                }
            }
        }
    });

    let (report, status) = match outcome {
        Ok(Outcome {
            results: Value::Null,
            ..
        }) => return 0,
        Ok(Outcome {
            results,
            discrepancy,
        }) => (
            json!({"command": name, "inputs": inputs, "results": results, "status": "ok"}),
            if discrepancy { 1 } else { 0 },
        ),
        Err(e) => (
            json!({
                "command": name,
                "inputs": inputs,
                "results": Value::Null,
                "status": "error",
                "message": e.to_string(),
            }),
            2,
        ),
    };
    let _ = stdout.write_all(render(&report, cli.pretty).as_bytes());
    status
}
