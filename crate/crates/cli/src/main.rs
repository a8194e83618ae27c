//! Command-line front end: parses vector files, dispatches to the
//! completion engine and the census, and prints aligned text or JSON.
//!
//! Exit codes: 0 success, 1 certified impossibility (or no partner),
//! 2 usage / IO / unsupported input, 3 search budget exceeded.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use orthoext::census::{
    classify_d3, difference_set_d3, enumerate_reps, find_partner, verify_curious, Budget, Witness,
};
use orthoext::clifford::search_max_family;
use orthoext::completion::{complete, Status};
use orthoext::error::Error;
use orthoext::intvec::{parse_vector_set, verify_ortho_set, IntVector};
use orthoext::octonion::{cross7, cross8_ternary};

#[derive(Parser)]
#[command(
    name = "orthoext",
    about = "Equal-norm orthogonal extensions of integral vector sets",
    version
)]
struct Cli {
    /// Emit a JSON object instead of aligned text.
    #[arg(long, global = true)]
    json: bool,

    /// Cap on exhaustive census searches (largest squared norm).
    #[arg(long, global = true)]
    budget: Option<i64>,

    /// Worker threads for census commands (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Key=value file providing defaults for budget and json.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct VectorInput {
    /// Path to a vector file: one vector per line, whitespace-separated
    /// integers; blank lines and # comments ignored.
    #[arg(long)]
    file: Option<PathBuf>,

    /// Inline vector such as "1 3 5"; repeat for several vectors.
    #[arg(long = "vec", value_name = "COORDS", allow_hyphen_values = true)]
    vectors: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Extend the given orthogonal set to an orthogonal basis of equal norm.
    Complete(VectorInput),
    /// Search for an equal-norm orthogonal partner of a 3-dimensional vector.
    Partner(VectorInput),
    /// List canonical representations of N as a sum of `dim` squares.
    Enumerate {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, default_value_t = 3)]
        dim: usize,
    },
    /// Classify a squared norm: pair and basis extendability in dimension 3.
    Classify {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Norms below the limit that extend to pairs but never to bases.
    Diffset {
        #[arg(long)]
        limit: i64,
    },
    /// Verify that no orthogonal pair violates the two-square criterion.
    Curious {
        #[arg(long)]
        limit: i64,
    },
    /// Find the largest index family for the Clifford frame construction.
    #[command(name = "clifford-search")]
    CliffordSearch {
        #[arg(long)]
        n: usize,
    },
    /// The 7-dimensional cross product of two vectors.
    Cross7(VectorInput),
    /// The 8-dimensional ternary cross product of three vectors.
    Cross8(VectorInput),
    /// Check that the input is an orthogonal set of equal squared norm.
    Verify(VectorInput),
}

struct Settings {
    json: bool,
    budget: Budget,
    threads: Option<usize>,
}

enum Outcome {
    Success(Value, String),
    Impossible(Value, String),
    Usage(String),
    BudgetExceeded(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let settings = match resolve_settings(&cli) {
        Ok(s) => s,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    if let Some(threads) = settings.threads {
        if threads == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        if rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .is_err()
        {
            eprintln!("error: thread pool already initialized");
            return ExitCode::from(2);
        }
    }
    match run(&cli.command, &settings) {
        Outcome::Success(value, text) => {
            emit(&settings, value, text);
            ExitCode::SUCCESS
        }
        Outcome::Impossible(value, text) => {
            emit(&settings, value, text);
            ExitCode::from(1)
        }
        Outcome::Usage(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Outcome::BudgetExceeded(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn emit(settings: &Settings, value: Value, text: String) {
    if settings.json {
        println!("{value}");
    } else {
        print!("{text}");
    }
}

fn resolve_settings(cli: &Cli) -> Result<Settings, String> {
    let mut json = cli.json;
    let mut budget: Option<i64> = None;
    let mut threads: Option<usize> = None;

    if let Ok(env_budget) = std::env::var("ORTHO_BUDGET") {
        let parsed = env_budget
            .parse::<i64>()
            .map_err(|_| format!("ORTHO_BUDGET is not an integer: {env_budget:?}"))?;
        budget = Some(parsed);
    }
    if let Some(path) = &cli.config {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(format!(
                    "config line {} is not key=value: {line:?}",
                    lineno + 1
                ));
            };
            match (key.trim(), value.trim()) {
                ("budget", v) => {
                    budget = Some(
                        v.parse::<i64>()
                            .map_err(|_| format!("config budget is not an integer: {v:?}"))?,
                    );
                }
                ("json", v) => {
                    json = json
                        || v.parse::<bool>()
                            .map_err(|_| format!("config json is not a bool: {v:?}"))?;
                }
                ("threads", v) => {
                    threads = Some(
                        v.parse::<usize>()
                            .map_err(|_| format!("config threads is not an integer: {v:?}"))?,
                    );
                }
                (other, _) => return Err(format!("unknown config key {other:?}")),
            }
        }
    }
    // The command-line flag wins over both the config file and the
    // environment override.
    if let Some(flag_budget) = cli.budget {
        budget = Some(flag_budget);
    }
    if cli.threads.is_some() {
        threads = cli.threads;
    }
    let budget = match budget {
        Some(b) if b > 0 => Budget::new(b),
        Some(b) => return Err(format!("budget must be positive, got {b}")),
        None => Budget::default(),
    };
    Ok(Settings {
        json,
        budget,
        threads,
    })
}

fn read_vectors(input: &VectorInput) -> Result<Vec<IntVector>, String> {
    match (&input.file, input.vectors.is_empty()) {
        (Some(_), false) => Err("pass either --file or --vec, not both".into()),
        (Some(path), true) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            parse_vector_set(&text).map_err(|e| format!("{}: {e}", path.display()))
        }
        (None, false) => {
            let mut out: Vec<IntVector> = Vec::with_capacity(input.vectors.len());
            for (i, s) in input.vectors.iter().enumerate() {
                let v =
                    IntVector::from_str(s).map_err(|e| format!("--vec argument {}: {e}", i + 1))?;
                if let Some(first) = out.first() {
                    if v.dim() != first.dim() {
                        return Err(format!(
                            "--vec argument {}: expected {} coordinates, got {}",
                            i + 1,
                            first.dim(),
                            v.dim()
                        ));
                    }
                }
                out.push(v);
            }
            Ok(out)
        }
        (None, true) => Err("no vectors given; use --file or --vec".into()),
    }
}

fn vectors_json(vectors: &[IntVector]) -> Value {
    Value::Array(
        vectors
            .iter()
            .map(|v| Value::Array(v.coords().iter().map(|&c| json!(c)).collect()))
            .collect(),
    )
}

fn payload(command: &str, input: Value, status: &str, n_squared: Option<i64>) -> Value {
    json!({
        "command": command,
        "input": input,
        "status": status,
        "n_squared": n_squared,
    })
}

fn domain_error_outcome(command: &str, err: &Error) -> Outcome {
    match err {
        Error::BudgetExceeded { .. } => Outcome::BudgetExceeded(err.to_string()),
        Error::Internal(_) => Outcome::Usage(format!("internal error: {err}")),
        _ => Outcome::Usage(format!("{command}: {err}")),
    }
}

fn run(command: &Command, settings: &Settings) -> Outcome {
    match command {
        Command::Complete(input) => run_complete(input),
        Command::Partner(input) => run_partner(input, settings),
        Command::Enumerate { n, dim } => run_enumerate(*n, *dim, settings),
        Command::Classify { n } => run_classify(*n, settings),
        Command::Diffset { limit } => run_diffset(*limit, settings),
        Command::Curious { limit } => run_curious(*limit, settings),
        Command::CliffordSearch { n } => run_clifford_search(*n),
        Command::Cross7(input) => run_cross7(input),
        Command::Cross8(input) => run_cross8(input),
        Command::Verify(input) => run_verify(input),
    }
}

fn run_complete(input: &VectorInput) -> Outcome {
    let vectors = match read_vectors(input) {
        Ok(v) => v,
        Err(msg) => return Outcome::Usage(msg),
    };
    let input_json = vectors_json(&vectors);
    let n_squared = vectors[0].squared_norm().ok();
    let result = match complete(&vectors) {
        Ok(r) => r,
        Err(e) => return domain_error_outcome("complete", &e),
    };
    let mut value = payload("complete", input_json, result.status.as_str(), n_squared);
    value["added"] = vectors_json(&result.added);
    if let Some(reason) = &result.reason {
        value["reason"] = json!(reason.to_string());
    }

    let mut text = String::new();
    let _ = writeln!(text, "command: complete");
    let _ = writeln!(text, "status: {}", result.status.as_str());
    if let Some(n) = n_squared {
        let _ = writeln!(text, "n_squared: {n}");
    }
    match result.status {
        Status::Completed | Status::PartiallyExtended => {
            let heading = if result.status == Status::Completed {
                "basis:"
            } else {
                "extended:"
            };
            let _ = writeln!(text, "{heading}");
            for v in vectors.iter().chain(result.added.iter()) {
                let _ = writeln!(text, "{v}");
            }
            if let Some(n) = n_squared {
                let _ = writeln!(text, "gram: {n}*I");
            }
            Outcome::Success(value, text)
        }
        Status::Impossible => {
            let reason = result
                .reason
                .map(|r| r.to_string())
                .unwrap_or_else(|| "impossible".into());
            let _ = writeln!(text, "reason: {reason}");
            Outcome::Impossible(value, text)
        }
        Status::NotSupported => {
            let reason = result
                .reason
                .map(|r| r.to_string())
                .unwrap_or_else(|| "not supported".into());
            Outcome::Usage(format!("complete: {reason}"))
        }
    }
}

fn run_partner(input: &VectorInput, settings: &Settings) -> Outcome {
    let vectors = match read_vectors(input) {
        Ok(v) => v,
        Err(msg) => return Outcome::Usage(msg),
    };
    if vectors.len() != 1 {
        return Outcome::Usage(format!("partner expects one vector, got {}", vectors.len()));
    }
    let v = &vectors[0];
    let input_json = vectors_json(&vectors);
    let n_squared = v.squared_norm().ok();
    match find_partner(v, &settings.budget) {
        Ok(Some(w)) => {
            let mut value = payload("partner", input_json, "found", n_squared);
            value["result"] = vectors_json(std::slice::from_ref(&w));
            let text = format!(
                "command: partner\nstatus: found\nn_squared: {}\npartner:\n{w}\n",
                n_squared.unwrap_or_default()
            );
            Outcome::Success(value, text)
        }
        Ok(None) => {
            let reason = "no equal-norm orthogonal partner (exhaustive)";
            let mut value = payload("partner", input_json, "impossible", n_squared);
            value["reason"] = json!(reason);
            let text = format!(
                "command: partner\nstatus: impossible\nn_squared: {}\nreason: {reason}\n",
                n_squared.unwrap_or_default()
            );
            Outcome::Impossible(value, text)
        }
        Err(e) => domain_error_outcome("partner", &e),
    }
}

fn run_enumerate(n: i64, dim: usize, settings: &Settings) -> Outcome {
    match enumerate_reps(n, dim, &settings.budget) {
        Ok(reps) => {
            let mut value = payload("enumerate", json!({"n": n, "dim": dim}), "ok", Some(n));
            value["result"] = vectors_json(&reps);
            let mut text = String::new();
            for r in &reps {
                let _ = writeln!(text, "{r}");
            }
            Outcome::Success(value, text)
        }
        Err(e) => domain_error_outcome("enumerate", &e),
    }
}

fn witness_json(witness: &Witness) -> Value {
    match witness {
        Witness::Partner(w) => json!({"partner": w.coords()}),
        Witness::Basis(ws) => json!({"basis": ws.iter().map(|w| w.coords()).collect::<Vec<_>>()}),
        Witness::NoPartner => json!({"exhausted": true}),
    }
}

fn run_classify(n: i64, settings: &Settings) -> Outcome {
    let report = match classify_d3(n, &settings.budget) {
        Ok(r) => r,
        Err(e) => return domain_error_outcome("classify", &e),
    };
    let witnesses: Vec<Value> = report
        .witnesses
        .iter()
        .map(|(rep, w)| json!({"rep": rep.coords(), "witness": witness_json(w)}))
        .collect();
    let mut value = payload("classify", json!({"n": n}), "ok", Some(n));
    value["result"] = json!({
        "dim": report.dim,
        "representations": report.reps_canonical.len(),
        "in_c3_1_2": report.in_c3_1_2,
        "in_c3_1_3": report.in_c3_1_3,
        "trivial": report.trivial,
        "witnesses": witnesses,
    });

    let mut text = String::new();
    let _ = writeln!(text, "command: classify");
    let _ = writeln!(text, "status: ok");
    let _ = writeln!(text, "n_squared: {n}");
    let _ = writeln!(text, "representations: {}", report.reps_canonical.len());
    let _ = writeln!(text, "trivial: {}", report.trivial);
    let _ = writeln!(text, "in_c3_1_2: {}", report.in_c3_1_2);
    let _ = writeln!(text, "in_c3_1_3: {}", report.in_c3_1_3);
    for (rep, w) in &report.witnesses {
        match w {
            Witness::Partner(p) => {
                let _ = writeln!(text, "rep {rep}: partner {p}");
            }
            Witness::Basis(ws) => {
                let joined: Vec<String> = ws.iter().map(|x| x.to_string()).collect();
                let _ = writeln!(text, "rep {rep}: basis {}", joined.join(" | "));
            }
            Witness::NoPartner => {
                let _ = writeln!(text, "rep {rep}: no partner (exhaustive)");
            }
        }
    }
    Outcome::Success(value, text)
}

fn run_diffset(limit: i64, settings: &Settings) -> Outcome {
    match difference_set_d3(limit, &settings.budget) {
        Ok(set) => {
            let mut value = payload("diffset", json!({"limit": limit}), "ok", None);
            value["result"] = json!(set);
            let mut text = String::new();
            let _ = writeln!(text, "command: diffset");
            let _ = writeln!(text, "status: ok");
            let _ = writeln!(text, "limit: {limit}");
            let _ = writeln!(text, "count: {}", set.len());
            for n in &set {
                let _ = writeln!(text, "{n}");
            }
            Outcome::Success(value, text)
        }
        Err(e) => domain_error_outcome("diffset", &e),
    }
}

fn run_curious(limit: i64, settings: &Settings) -> Outcome {
    match verify_curious(limit, &settings.budget) {
        Ok(report) => {
            let mut value = payload("curious", json!({"limit": limit}), "ok", None);
            value["result"] = json!({
                "norms_with_pairs": report.norms_with_pairs.len(),
                "violations": report.violations,
            });
            let text = format!(
                "command: curious\nstatus: ok\nlimit: {limit}\nnorms_with_pairs: {}\nviolations: {}\n",
                report.norms_with_pairs.len(),
                report.violations.len()
            );
            Outcome::Success(value, text)
        }
        Err(e) => domain_error_outcome("curious", &e),
    }
}

fn run_clifford_search(n: usize) -> Outcome {
    match search_max_family(n) {
        Ok(family) => {
            let patterns: Vec<String> = family.iter().map(|b| b.tuple_string()).collect();
            let mut value = payload("clifford-search", json!({"n": n}), "ok", None);
            value["result"] = json!({
                "cardinality": patterns.len(),
                "family": patterns,
            });
            let mut text = String::new();
            let _ = writeln!(text, "command: clifford-search");
            let _ = writeln!(text, "status: ok");
            let _ = writeln!(text, "n: {n}");
            let _ = writeln!(text, "cardinality: {}", family.len());
            for p in &patterns {
                let _ = writeln!(text, "{p}");
            }
            Outcome::Success(value, text)
        }
        Err(e) => domain_error_outcome("clifford-search", &e),
    }
}

fn run_cross7(input: &VectorInput) -> Outcome {
    let vectors = match read_vectors(input) {
        Ok(v) => v,
        Err(msg) => return Outcome::Usage(msg),
    };
    if vectors.len() != 2 {
        return Outcome::Usage(format!("cross7 expects two vectors, got {}", vectors.len()));
    }
    let input_json = vectors_json(&vectors);
    match cross7(&vectors[0], &vectors[1]) {
        Ok(c) => {
            let mut value = payload("cross7", input_json, "ok", None);
            value["result"] = vectors_json(std::slice::from_ref(&c));
            let text = format!("command: cross7\nstatus: ok\ncross:\n{c}\n");
            Outcome::Success(value, text)
        }
        Err(e) => domain_error_outcome("cross7", &e),
    }
}

fn run_cross8(input: &VectorInput) -> Outcome {
    let vectors = match read_vectors(input) {
        Ok(v) => v,
        Err(msg) => return Outcome::Usage(msg),
    };
    if vectors.len() != 3 {
        return Outcome::Usage(format!(
            "cross8 expects three vectors, got {}",
            vectors.len()
        ));
    }
    let input_json = vectors_json(&vectors);
    match cross8_ternary(&vectors[0], &vectors[1], &vectors[2]) {
        Ok(c) => {
            let mut value = payload("cross8", input_json, "ok", None);
            value["result"] = vectors_json(std::slice::from_ref(&c));
            let text = format!("command: cross8\nstatus: ok\ncross:\n{c}\n");
            Outcome::Success(value, text)
        }
        Err(e) => domain_error_outcome("cross8", &e),
    }
}

fn run_verify(input: &VectorInput) -> Outcome {
    let vectors = match read_vectors(input) {
        Ok(v) => v,
        Err(msg) => return Outcome::Usage(msg),
    };
    let input_json = vectors_json(&vectors);
    match verify_ortho_set(vectors.clone()) {
        Ok(set) => {
            let mut value = payload("verify", input_json, "ok", Some(set.squared_norm()));
            value["result"] = json!({
                "count": set.len(),
                "dim": set.dim(),
            });
            let text = format!(
                "command: verify\nstatus: ok\nn_squared: {}\ncount: {}\ndim: {}\n",
                set.squared_norm(),
                set.len(),
                set.dim()
            );
            Outcome::Success(value, text)
        }
        Err(e @ (Error::NotOrthogonal { .. } | Error::NormMismatch { .. })) => {
            let mut value = payload("verify", input_json, "invalid", None);
            value["reason"] = json!(e.to_string());
            let text = format!("command: verify\nstatus: invalid\nreason: {e}\n");
            Outcome::Impossible(value, text)
        }
        Err(e) => domain_error_outcome("verify", &e),
    }
}
