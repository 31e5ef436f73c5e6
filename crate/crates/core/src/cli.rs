//! Command-line front end. Every command prints one JSON [`Report`].
//!
//! Exit status: 0 for success, `Passes`, `Decided(yes)`, a found certificate
//! or `Unknown`; 1 for `Obstructed`, `Decided(no)` and failed searches; 2 for
//! input errors.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::catalog::{self, CatalogError};
use crate::concordance::{
    classical_obstructions, decide_simple_type, immersed_cylinder_exists, lagrangian_cobordism_genus,
    lagrangian_filling_constraints, lisca_matic_check, CobordismGenus, FillingHypothesis, ObstructionVerdict,
    VerdictStatus,
};
use crate::front::{checked_trace, parse_front, random_diagram, validate, FrontDiagram, FrontError};
use crate::invariants::{front_jones, InvariantError, InvariantRecord};
use crate::moves::{applicable_moves, apply_move, stabilize, ArcSelector, MoveError, MoveInstance, StabilizationSign};
use crate::render::render_svg;
use crate::search::{isotopy_search, replay, IsotopyCertificate, SearchBudget, SearchOutcome};

pub const SEED_VAR: &str = "LEGKIT_SEED";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<String>,
    pub result: Value,
    pub version: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error("{0}")]
    Front(#[from] FrontError),
    #[error("{0}")]
    Move(#[from] MoveError),
    #[error("{0}")]
    Invariant(#[from] InvariantError),
    #[error("{0}")]
    Catalog(#[from] CatalogError),
    #[error("bad JSON argument: {0}")]
    Json(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "Io",
            CliError::Front(_) => "Front",
            CliError::Move(_) => "Move",
            CliError::Invariant(_) => "Invariant",
            CliError::Catalog(_) => "Catalog",
            CliError::Json(_) => "Json",
            CliError::Usage(_) => "Usage",
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "legkit", version, about = "Legendrian knot fronts: invariants, moves and concordance checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that a front word describes a single knot.
    Validate { file: PathBuf },
    /// Classical invariants of a front.
    Invariants {
        file: PathBuf,
        #[arg(long)]
        reverse_orientation: bool,
    },
    /// List every applicable move.
    Moves { file: PathBuf },
    /// Apply one move given as JSON text or a JSON file.
    Apply { file: PathBuf, r#move: String },
    /// Replay a certificate or a list of moves.
    Replay { file: PathBuf, certificate: String },
    /// Add a zigzag on the arc `E:L` (after event E, at level L).
    Stabilize {
        file: PathBuf,
        arc: ArcSelector,
        #[arg(value_parser = parse_sign)]
        sign: StabilizationSign,
    },
    /// Bounded search for a Legendrian isotopy.
    SearchIsotopy {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value_t = SearchBudget::DEFAULT_DEPTH)]
        depth: usize,
        /// Extra word length allowed beyond the longer input.
        #[arg(long, default_value_t = SearchBudget::DEFAULT_SLACK)]
        slack: usize,
    },
    /// Classical obstructions to a Lagrangian concordance from `a` to `b`.
    CheckConcordance {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        reverse_a: bool,
        #[arg(long)]
        reverse_b: bool,
    },
    /// Constraints on a Lagrangian filling of the given genus.
    CheckFilling {
        file: PathBuf,
        #[arg(long)]
        genus: u64,
        #[arg(long)]
        slice_genus: Option<u64>,
    },
    /// Genus forced on a Lagrangian cobordism from `a` to `b`.
    CobordismGenus { a: PathBuf, b: PathBuf },
    /// Concordance in a Legendrian simple knot type.
    DecideSimple {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, action = clap::ArgAction::Set)]
        same_smooth_type: bool,
        #[arg(long, action = clap::ArgAction::Set, default_value_t = true)]
        simple: bool,
    },
    /// Immersed Lagrangian cylinder criterion.
    ImmersedCylinder {
        #[arg(allow_hyphen_values = true)]
        r0: i64,
        #[arg(allow_hyphen_values = true)]
        r1: i64,
        #[arg(long, action = clap::ArgAction::Set)]
        smoothly_concordant: bool,
    },
    /// Adjunction bound `tb + |r| <= 2g - 1`.
    LiscaMatic {
        #[arg(allow_hyphen_values = true)]
        tb: i64,
        #[arg(allow_hyphen_values = true)]
        r: i64,
        g: u64,
    },
    /// Reference fronts.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Draw a front as SVG.
    Render {
        file: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Jones polynomial of the smoothed front.
    Jones { file: PathBuf },
    /// Random valid front; the seed comes from --seed or LEGKIT_SEED.
    Random {
        #[arg(long, default_value_t = 12)]
        size: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List,
    Get { name: String },
    Torus { p: u64, q: u64 },
}

fn parse_sign(s: &str) -> Result<StabilizationSign, String> {
    match s {
        "+" => Ok(StabilizationSign::Positive),
        "-" => Ok(StabilizationSign::Negative),
        _ => Err(format!("expected + or -, got {s:?}")),
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io { path: path.to_path_buf(), message: e.to_string() })
}

fn load(path: &Path) -> Result<FrontDiagram, CliError> {
    let d = parse_front(&read_text(path)?)?;
    checked_trace(&d)?;
    Ok(d)
}

/// JSON given inline, or the contents of a file.
fn json_arg<T: serde::de::DeserializeOwned>(arg: &str) -> Result<T, CliError> {
    let text = if arg.trim_start().starts_with(['{', '[']) { arg.to_string() } else { read_text(Path::new(arg))? };
    serde_json::from_str(&text).map_err(|e| CliError::Json(e.to_string()))
}

fn record(path: &Path, reverse: bool) -> Result<InvariantRecord, CliError> {
    Ok(InvariantRecord::compute(&load(path)?, reverse)?)
}

fn verdict_code(v: &ObstructionVerdict) -> i32 {
    match v.status {
        VerdictStatus::Obstructed | VerdictStatus::DecidedNo => 1,
        VerdictStatus::Passes | VerdictStatus::DecidedYes | VerdictStatus::Unknown => 0,
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report payloads serialize")
}

fn execute(cmd: Command) -> Result<(i32, Value), CliError> {
    Ok(match cmd {
        Command::Validate { file } => {
            let d = parse_front(&read_text(&file)?)?;
            let report = validate(&d);
            (if report.ok { 0 } else { 2 }, to_value(&report))
        }
        Command::Invariants { file, reverse_orientation } => (0, to_value(&record(&file, reverse_orientation)?)),
        Command::Moves { file } => (0, to_value(&applicable_moves(&load(&file)?)?)),
        Command::Apply { file, r#move } => {
            let m: MoveInstance = json_arg(&r#move)?;
            let out = apply_move(&load(&file)?, &m)?;
            (0, json!({ "word": out }))
        }
        Command::Replay { file, certificate } => {
            let d = load(&file)?;
            let value: Value = json_arg(&certificate)?;
            let (moves, end) = if value.is_array() {
                (serde_json::from_value::<Vec<MoveInstance>>(value).map_err(|e| CliError::Json(e.to_string()))?, None)
            } else {
                let c: IsotopyCertificate = serde_json::from_value(value).map_err(|e| CliError::Json(e.to_string()))?;
                (c.moves, Some(c.end))
            };
            match replay(&d, &moves) {
                Ok(out) => {
                    let matches = end.as_ref().map(|e| *e == out);
                    let code = if matches == Some(false) { 1 } else { 0 };
                    (code, json!({ "replayed": true, "word": out, "matches_end": matches }))
                }
                Err(e) => (1, json!({ "replayed": false, "error": e.to_string() })),
            }
        }
        Command::Stabilize { file, arc, sign } => {
            let d = load(&file)?;
            let out = stabilize(&d, arc, sign)?;
            (0, json!({ "word": out, "invariants": InvariantRecord::compute(&out, false)? }))
        }
        Command::SearchIsotopy { a, b, depth, slack } => {
            let (da, db) = (load(&a)?, load(&b)?);
            let budget = SearchBudget { max_depth: depth, max_len: da.len().max(db.len()) + slack };
            let out = isotopy_search(&da, &db, budget)?;
            let code = match out {
                SearchOutcome::Found(_) => 0,
                SearchOutcome::NotFound { .. } => 1,
            };
            (code, to_value(&out))
        }
        Command::CheckConcordance { a, b, reverse_a, reverse_b } => {
            let v = classical_obstructions(&record(&a, reverse_a)?, &record(&b, reverse_b)?);
            (verdict_code(&v), to_value(&v))
        }
        Command::CheckFilling { file, genus, slice_genus } => {
            let rec = record(&file, false)?;
            let h = FillingHypothesis { tb: rec.tb, r: rec.r, g: genus, g_s: slice_genus };
            let v = lagrangian_filling_constraints(&h);
            (verdict_code(&v), to_value(&v))
        }
        Command::CobordismGenus { a, b } => match lagrangian_cobordism_genus(record(&a, false)?.tb, record(&b, false)?.tb) {
            CobordismGenus::Genus(g) => (0, json!({ "genus": g })),
            CobordismGenus::Impossible(reason) => (1, json!({ "impossible": reason })),
        },
        Command::DecideSimple { a, b, same_smooth_type, simple } => {
            let (da, db) = (load(&a)?, load(&b)?);
            // Distinct Jones polynomials certify distinct smooth types.
            let jones_differ = match (front_jones(&da), front_jones(&db)) {
                (Ok(x), Ok(y)) => Some(x != y),
                _ => None,
            };
            let same = same_smooth_type && jones_differ != Some(true);
            let ra = InvariantRecord::compute(&da, false)?;
            let rb = InvariantRecord::compute(&db, false)?;
            let v = decide_simple_type(&ra, &rb, same, simple);
            let overridden = same != same_smooth_type;
            (verdict_code(&v), json!({ "verdict": v, "same_smooth_type": same, "jones_override": overridden }))
        }
        Command::ImmersedCylinder { r0, r1, smoothly_concordant } => {
            let exists = immersed_cylinder_exists(r0, r1, smoothly_concordant);
            (if exists { 0 } else { 1 }, json!({ "exists": exists }))
        }
        Command::LiscaMatic { tb, r, g } => {
            let holds = lisca_matic_check(tb, r, g);
            (if holds { 0 } else { 1 }, json!({ "holds": holds, "slack": 2 * g as i64 - 1 - tb - r.abs() }))
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => (0, to_value(&catalog::all_named())),
            CatalogAction::Get { name } => (0, to_value(&catalog::named_front(&name)?)),
            CatalogAction::Torus { p, q } => (0, to_value(&catalog::torus_front(p, q)?)),
        },
        Command::Render { file, output } => {
            let svg = render_svg(&load(&file)?);
            fs::write(&output, &svg).map_err(|e| CliError::Io { path: output.clone(), message: e.to_string() })?;
            (0, json!({ "path": output, "bytes": svg.len() }))
        }
        Command::Jones { file } => {
            let d = load(&file)?;
            let j = front_jones(&d)?;
            (0, json!({ "jones": j, "text": j.to_string() }))
        }
        Command::Random { size, seed } => {
            let seed = match seed {
                Some(s) => s,
                None => match std::env::var(SEED_VAR) {
                    Ok(v) => v.parse().map_err(|_| CliError::Usage(format!("{SEED_VAR} must be an integer")))?,
                    Err(_) => 0,
                },
            };
            (0, json!({ "seed": seed, "word": random_diagram(seed, size) }))
        }
    })
}

fn command_name(cmd: &Command) -> String {
    let name = match cmd {
        Command::Validate { .. } => "validate",
        Command::Invariants { .. } => "invariants",
        Command::Moves { .. } => "moves",
        Command::Apply { .. } => "apply",
        Command::Replay { .. } => "replay",
        Command::Stabilize { .. } => "stabilize",
        Command::SearchIsotopy { .. } => "search-isotopy",
        Command::CheckConcordance { .. } => "check-concordance",
        Command::CheckFilling { .. } => "check-filling",
        Command::CobordismGenus { .. } => "cobordism-genus",
        Command::DecideSimple { .. } => "decide-simple",
        Command::ImmersedCylinder { .. } => "immersed-cylinder",
        Command::LiscaMatic { .. } => "lisca-matic",
        Command::Catalog { .. } => "catalog",
        Command::Render { .. } => "render",
        Command::Jones { .. } => "jones",
        Command::Random { .. } => "random",
    };
    name.to_string()
}

/// Runs one command line; `argv[0]` is the program name.
pub fn run<I, S>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                CliOutput { code, stdout: text, stderr: String::new() }
            } else {
                CliOutput { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let command = command_name(&cli.command);
    let (code, result, stderr) = match execute(cli.command) {
        Ok((code, result)) => (code, result, String::new()),
        Err(e) => (2, json!({ "error": e.kind(), "message": e.to_string() }), format!("error: {e}\n")),
    };
    let report = Report {
        command,
        inputs: argv.iter().skip(1).cloned().collect(),
        result,
        version: env!("CARGO_PKG_VERSION").to_string(),
    };
    let mut stdout = serde_json::to_string_pretty(&report).expect("reports serialize");
    stdout.push('\n');
    CliOutput { code, stdout, stderr }
}
