//! Command-line front end. Every subcommand writes one JSON document with
//! sorted keys and a trailing newline.
//!
//! Exit codes: 0 success, 1 verification failure, 2 precondition violation,
//! 3 I/O or parse error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::cubicrel::{
    convention_transcript, default_m_basis, relation_coefficients, to_moduli_point, PointConfiguration,
};
use crate::error::{Error, Result};
use crate::monomial::SquarefreeIdeal;
use crate::picard::{gram_report, root_system_check, verify_mutation_chain};
use crate::pipeline::{
    component_summaries, run_connectedness_detailed, toric_ideal, truncated_subgraph_connected,
};
use crate::quiver::{self, canonical_q, canonical_qtilde};
use crate::rational::{parse_rat, rat_from_json};
use crate::toricgit::{
    canonical_triviality_vector, hm_semistable, hm_stable, king_semistable, king_stable, lattice_report,
    strong_convexity_pairings, CoordinatePoint, StabilityCharacter, WeightAction,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "qgm", version, about = "Exact computations on the cubic-surface quiver")]
pub struct Cli {
    /// Worker threads for parallel sections. Results do not depend on it.
    #[arg(long, global = true, env = "QGM_JOBS")]
    pub jobs: Option<usize>,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Connectedness of the semistable locus cut out by a monomial ideal.
    Connectedness {
        /// Comma-separated vertex weights, or `default`.
        #[arg(long, default_value = "default", allow_hyphen_values = true)]
        theta: String,
        /// `builtin-I0`, `empty`, inline JSON, or a path to a JSON file.
        #[arg(long, default_value = "builtin-I0")]
        ideal: String,
        /// Treat V(ideal) as reduced, allowing an h0 verdict.
        #[arg(long)]
        assume_reduced: bool,
        /// Add per-component data and the two-neighbour subgraph check.
        #[arg(long)]
        details: bool,
    },
    /// Coefficients of the nine relations for a point configuration.
    Relations {
        #[arg(long, allow_hyphen_values = true, required_unless_present = "input")]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "input")]
        b: Option<String>,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "input")]
        c: Option<String>,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "input")]
        d: Option<String>,
        /// `{"a": .., "b": .., "c": .., "d": ..}` inline or as a path.
        #[arg(long, conflicts_with_all = ["a", "b", "c", "d"])]
        input: Option<String>,
    },
    /// Lattice ranks, strong convexity and canonical triviality.
    Lattice {
        #[arg(long, value_enum, default_value = "both")]
        quiver: QuiverChoice,
    },
    /// Checks on the Picard lattice and the exceptional collections.
    Picard {
        #[arg(long, value_enum, default_value = "all")]
        check: PicardCheck,
    },
    /// Stability of a point of the representation space of Q.
    Stability {
        /// 18 values, `{"values": [..]}`, `{"support": [..]}`, inline or as a path.
        #[arg(long, required_unless_present_any = ["fuzz", "action"])]
        point: Option<String>,
        #[arg(long, default_value = "default", allow_hyphen_values = true)]
        theta: String,
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
        /// Compare both methods on this many random points.
        #[arg(long, conflicts_with = "point")]
        fuzz: Option<usize>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Custom action `{"weights": [[..]], "theta": [..]}`; cone method only.
        #[arg(long)]
        action: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum QuiverChoice {
    #[value(name = "Q")]
    Q,
    #[value(name = "Qtilde")]
    Qtilde,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PicardCheck {
    Gram,
    Roots,
    Chain,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Cone,
    King,
    Both,
}

/// A report and the exit code it implies.
pub struct Outcome {
    pub report: Value,
    pub code: i32,
}

fn outcome(report: Value, ok: bool) -> Outcome {
    Outcome {
        report,
        code: if ok { EXIT_OK } else { EXIT_FAILED },
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NonGenericTheta(_)
        | Error::NonGenericCharacter(_)
        | Error::DegenerateConfiguration(_)
        | Error::ZeroCoefficient(_)
        | Error::ColumnRankDeficient { .. }
        | Error::IncompatiblePairing { .. }
        | Error::DegeneratePotential(_) => EXIT_PRECONDITION,
        Error::ChainMismatch { .. } => EXIT_FAILED,
        Error::Parse(_)
        | Error::Io(_)
        | Error::DimensionMismatch { .. }
        | Error::IndexOutOfRange { .. }
        | Error::UnknownVertex(_)
        | Error::UnknownArrow(_) => EXIT_PARSE,
    }
}

/// Parses arguments, runs, writes the report. Returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_PARSE,
            };
        }
    };
    let result = with_jobs(cli.jobs, || execute(&cli.command)).and_then(|o| {
        write_report(cli.out.as_deref(), &o.report)?;
        Ok(o.code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("qgm: {e}");
            exit_code(&e)
        }
    }
}

fn with_jobs<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> Result<R> + Send) -> Result<R> {
    match jobs {
        None => f(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Parse(format!("--jobs: {e}")))?
            .install(f),
    }
}

pub fn render(report: &Value) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("json values serialize");
    s.push('\n');
    s
}

fn write_report(out: Option<&Path>, report: &Value) -> Result<()> {
    let text = render(report);
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Runs a parsed command without touching stdout.
pub fn execute(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Connectedness {
            theta,
            ideal,
            assume_reduced,
            details,
        } => connectedness(theta, ideal, *assume_reduced, *details),
        Command::Relations { a, b, c, d, input } => {
            let cfg = match input {
                Some(src) => PointConfiguration::from_json(&load_json(src)?)?,
                None => {
                    let get = |x: &Option<String>| parse_rat(x.as_deref().unwrap_or_default());
                    PointConfiguration::new(get(a)?, get(b)?, get(c)?, get(d)?)?
                }
            };
            relations(&cfg)
        }
        Command::Lattice { quiver } => Ok(lattice(*quiver)),
        Command::Picard { check } => Ok(picard(*check)),
        Command::Stability {
            point,
            theta,
            method,
            fuzz,
            seed,
            action,
        } => match (action, fuzz) {
            (Some(src), _) => stability_custom(src, point.as_deref()),
            (None, Some(n)) => stability_fuzz(theta, *n, *seed),
            (None, None) => stability(point.as_deref().unwrap_or_default(), theta, *method),
        },
    }
}

/// Inline JSON if it looks like JSON, otherwise a file path.
fn load_json(src: &str) -> Result<Value> {
    let t = src.trim_start();
    let text = if t.starts_with('{') || t.starts_with('[') {
        src.to_string()
    } else {
        std::fs::read_to_string(src)?
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn parse_theta(s: &str, len: usize) -> Result<StabilityCharacter> {
    if s.trim() == "default" {
        return Ok(StabilityCharacter::special());
    }
    let v: Vec<i64> = s
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad theta entry {x:?}")))
        })
        .collect::<Result<_>>()?;
    if v.len() != len {
        return Err(Error::DimensionMismatch {
            expected: len,
            found: v.len(),
        });
    }
    Ok(StabilityCharacter::new(&v))
}

fn connectedness(theta: &str, ideal: &str, assume_reduced: bool, details: bool) -> Result<Outcome> {
    let q = canonical_q();
    let theta = parse_theta(theta, q.vertex_count())?;
    let ideal = match ideal {
        "builtin-I0" => toric_ideal(),
        "empty" => SquarefreeIdeal::new(q.arrow_count(), Vec::<Vec<usize>>::new())?,
        src => SquarefreeIdeal::from_json(&load_json(src)?)?,
    };
    let run = run_connectedness_detailed(&q, &theta, &ideal, assume_reduced)?;
    let mut report = serde_json::to_value(&run.report).expect("report serializes");
    if details {
        let extra = json!({
            "components": component_summaries(&run.report, &run.components),
            "truncatedSubgraphConnected": truncated_subgraph_connected(&run.report),
        });
        report = json!({ "report": report, "details": extra });
    }
    Ok(outcome(report, run.report.connected))
}

fn relations(cfg: &PointConfiguration) -> Result<Outcome> {
    let rc = relation_coefficients(cfg)?;
    let point = to_moduli_point(&rc, &default_m_basis())?;
    let vector: Vec<String> = rc.vector27().iter().map(crate::rational::format_rat).collect();
    let report = json!({
        "configuration": cfg.to_json(),
        "triples": rc.triples_json(),
        "vector27": vector,
        "torusPoint": point.to_json(),
        "identitiesVerified": true,
        "transcript": convention_transcript(cfg)?,
    });
    Ok(outcome(report, true))
}

fn lattice_q() -> (Value, bool) {
    let q = canonical_q();
    let r = lattice_report(&q);
    let triv = canonical_triviality_vector(&q);
    let trivial = triv.as_ref().is_ok_and(|v| v.iter().all(num_traits::Zero::is_zero));
    let report = json!({
        "quiver": "Q",
        "vertices": r.vertex_count,
        "arrows": r.arrow_count,
        "rankL": r.rank_l,
        "rankK": r.rank_sfk,
        "rankT": r.rank_sft,
        "rankM": r.rank_sfm,
        "torsion": r.sft_torsion,
        "canonicalTriviality": trivial,
        "canonicalTrivialityVector": triv.map(|v| v.iter().map(ToString::to_string).collect::<Vec<_>>()).ok(),
    });
    (report, trivial)
}

fn lattice_qtilde() -> (Value, bool) {
    let r = lattice_report(&canonical_qtilde());
    let p = r.potentials.expect("rolled-up quiver has potentials");
    let pairings = strong_convexity_pairings(&quiver::rho_weight_matrix());
    let convex = pairings.iter().all(|x| x > &num_bigint::BigInt::from(0));
    let report = json!({
        "quiver": "Qtilde",
        "vertices": r.vertex_count,
        "arrows": r.arrow_count,
        "cycles": p.cycle_count,
        "gaugeRank": r.rank_sfk,
        "rankK": p.rank_k,
        "kTorsion": p.k_torsion,
        "rankT": p.rank_t,
        "rankN": p.rank_n,
        "rankM": p.rank_m,
        "mBasis": p.m_basis,
        "sequenceExact": p.sequence_exact,
        "strongConvexity": convex,
        "strongConvexityPairings": pairings.iter().map(ToString::to_string).collect::<Vec<_>>(),
    });
    (report, convex && p.sequence_exact)
}

pub fn lattice(choice: QuiverChoice) -> Outcome {
    match choice {
        QuiverChoice::Q => {
            let (r, ok) = lattice_q();
            outcome(r, ok)
        }
        QuiverChoice::Qtilde => {
            let (r, ok) = lattice_qtilde();
            outcome(r, ok)
        }
        QuiverChoice::Both => {
            let (q, ok_q) = lattice_q();
            let (qt, ok_qt) = lattice_qtilde();
            let report = json!({
                "Q": q,
                "Qtilde": qt,
                "canonicalTriviality": ok_q,
                "strongConvexity": qt["strongConvexity"],
            });
            outcome(report, ok_q && ok_qt)
        }
    }
}

pub fn picard(check: PicardCheck) -> Outcome {
    let mut report = serde_json::Map::new();
    let mut ok = true;
    let all = check == PicardCheck::All;
    if all || check == PicardCheck::Gram {
        let g = gram_report();
        ok &= g.matches;
        report.insert("gram".into(), json!(g));
    }
    if all || check == PicardCheck::Roots {
        let r = root_system_check();
        ok &= r.root_count == 72 && r.all_orthogonal_to_delta && r.gram_is_negative_cartan;
        report.insert("roots".into(), json!(r));
    }
    if all || check == PicardCheck::Chain {
        let chain = match verify_mutation_chain() {
            Ok(stages) => json!({ "passed": true, "stages": stages }),
            Err(e) => {
                ok = false;
                json!({ "passed": false, "firstFailure": e.to_string() })
            }
        };
        report.insert("chain".into(), chain);
    }
    report.insert("passed".into(), json!(ok));
    outcome(Value::Object(report), ok)
}

fn parse_point(v: &Value, len: usize) -> Result<CoordinatePoint> {
    let values = |arr: &Vec<Value>| -> Result<CoordinatePoint> {
        if arr.len() != len {
            return Err(Error::DimensionMismatch {
                expected: len,
                found: arr.len(),
            });
        }
        Ok(CoordinatePoint::from_values(
            arr.iter().map(rat_from_json).collect::<Result<_>>()?,
        ))
    };
    match v {
        Value::Array(arr) => values(arr),
        Value::Object(o) => {
            if let Some(Value::Array(arr)) = o.get("values") {
                values(arr)
            } else if let Some(Value::Array(s)) = o.get("support") {
                let idx = s
                    .iter()
                    .map(|x| {
                        x.as_u64()
                            .map(|i| i as usize)
                            .ok_or_else(|| Error::Parse(format!("bad support index {x}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                CoordinatePoint::from_support(len, idx)
            } else {
                Err(Error::Parse("point needs \"values\" or \"support\"".into()))
            }
        }
        _ => Err(Error::Parse("point must be an array or an object".into())),
    }
}

fn verdicts(stable: bool, semistable: bool) -> Value {
    json!({ "stable": stable, "semistable": semistable })
}

fn stability(point: &str, theta: &str, method: Method) -> Result<Outcome> {
    let q = canonical_q();
    let theta = parse_theta(theta, q.vertex_count())?;
    let p = parse_point(&load_json(point)?, q.arrow_count())?;
    let mut report = serde_json::Map::new();
    let mut cone = None;
    let mut king = None;
    if method != Method::King {
        let w = WeightAction::for_quiver(&q);
        let v = (hm_stable(&w, &theta, &p)?, hm_semistable(&w, &theta, &p)?);
        report.insert("cone".into(), verdicts(v.0, v.1));
        cone = Some(v);
    }
    if method != Method::Cone {
        let v = (king_stable(&q, &theta, &p)?, king_semistable(&q, &theta, &p)?);
        report.insert("king".into(), verdicts(v.0, v.1));
        king = Some(v);
    }
    let mut ok = true;
    if let (Some(c), Some(k)) = (cone, king) {
        ok = c == k;
        report.insert("agree".into(), json!(ok));
    }
    Ok(outcome(Value::Object(report), ok))
}

fn stability_fuzz(theta: &str, n: usize, seed: u64) -> Result<Outcome> {
    let q = canonical_q();
    let theta = parse_theta(theta, q.vertex_count())?;
    let w = WeightAction::for_quiver(&q);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<CoordinatePoint> = (0..n).map(|_| CoordinatePoint::random(&mut rng, q.arrow_count())).collect();
    let (mut agree_stable, mut agree_semi, mut stable, mut semi) = (0, 0, 0, 0);
    for p in &points {
        let cone = (hm_stable(&w, &theta, p)?, hm_semistable(&w, &theta, p)?);
        let king = (king_stable(&q, &theta, p)?, king_semistable(&q, &theta, p)?);
        agree_stable += usize::from(cone.0 == king.0);
        agree_semi += usize::from(cone.1 == king.1);
        stable += usize::from(king.0);
        semi += usize::from(king.1);
    }
    let full = agree_stable == n && agree_semi == n;
    let pct = if n == 0 { 100.0 } else { 100.0 * (agree_stable.min(agree_semi)) as f64 / n as f64 };
    let report = json!({
        "points": n,
        "seed": seed,
        "agreeStable": agree_stable,
        "agreeSemistable": agree_semi,
        "stableCount": stable,
        "semistableCount": semi,
        "agreement": format!("{pct}%"),
    });
    Ok(outcome(report, full))
}

fn stability_custom(action: &str, point: Option<&str>) -> Result<Outcome> {
    let (w, chi) = WeightAction::from_json(&load_json(action)?)?;
    let p = match point {
        Some(src) => parse_point(&load_json(src)?, w.coordinate_count())?,
        None => CoordinatePoint::full(w.coordinate_count()),
    };
    let report = json!({ "cone": verdicts(hm_stable(&w, &chi, &p)?, hm_semistable(&w, &chi, &p)?) });
    Ok(outcome(report, true))
}
