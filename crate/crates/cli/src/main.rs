//! Command-line surface: evaluate a single series, browse the relation
//! catalog, run randomized verification campaigns, and study how q-side
//! coefficients degenerate toward their classical counterparts.
//!
//! Exit codes: 0 success / all checks passed; 1 verification or limit
//! failure; 2 usage, parse, or domain error; 3 series did not converge
//! within the term budget.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qcontig::relations::{self, Relation};
use qcontig::scalar::{PrecisionMode, PrecisionPolicy, Scalar};
use qcontig::series::{self, SeriesKind, SeriesSpec};
use qcontig::verify::{self, VerificationReport};
use qcontig::Error;

#[derive(Parser)]
#[command(
    name = "qcontig",
    version,
    about = "Numerical engine and verified catalog of 3-phi-2 contiguous relations"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalOpts {
    /// Working precision (default standard; env QCONTIG_PRECISION overrides
    /// the default, this flag overrides both).
    #[arg(long, global = true, value_enum)]
    precision: Option<ModeArg>,
    /// Relative stopping tolerance (default 1e-12 standard, 1e-30 extended).
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Per-series term budget (default 10000).
    #[arg(long, global = true)]
    max_terms: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Standard,
    Extended,
}

impl From<ModeArg> for PrecisionMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Standard => PrecisionMode::Standard,
            ModeArg::Extended => PrecisionMode::Extended,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one hypergeometric series at a point.
    Eval(EvalArgs),
    /// List catalog entries.
    List(ListArgs),
    /// Run a randomized residual campaign over one relation or the catalog.
    Verify(VerifyArgs),
    /// Track coefficient gaps of a q/classical pair as the base approaches 1.
    Limit(LimitArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// Series kind: `<r>phi<s>` (q side, e.g. 3phi2, 2phi1) or `<r>f<s>`
    /// (classical, e.g. 3f2); a trailing `*` selects the shifted kind.
    #[arg(long)]
    kind: String,
    /// Comma-separated numerator parameters; complex literals are written
    /// RE, RE+IMi, or RE-IMi.
    #[arg(long)]
    num: String,
    /// Comma-separated denominator parameters.
    #[arg(long)]
    den: String,
    /// Base q (phi kinds only; must satisfy |q| < 1).
    #[arg(long)]
    q: Option<String>,
    /// Argument z (defaults: 0 for phi kinds, 1 for f kinds).
    #[arg(long)]
    z: Option<String>,
}

#[derive(Args)]
struct ListArgs {
    /// Keep only entries of one family (pattern, two_term, three_term,
    /// proposition, corollary_classical); unknown names match nothing.
    #[arg(long)]
    family: Option<String>,
    /// Emit the listing as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Verify a single relation by id.
    #[arg(long, conflicts_with = "all", required_unless_present = "all")]
    relation: Option<String>,
    /// Verify every catalog entry.
    #[arg(long)]
    all: bool,
    /// Sample points per relation.
    #[arg(long, default_value_t = 50)]
    samples: usize,
    /// Campaign seed.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Write the full report to this path (atomic: temp file + rename).
    #[arg(long)]
    report: Option<PathBuf>,
    /// Format of the report file (and of stdout when no --report is given).
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Args)]
struct LimitArgs {
    /// The pair to study, written `qid:cid` (a recorded correspondence,
    /// e.g. pattern-A-eq-a:corl-pattern-A-eq-a).
    #[arg(long)]
    pair: String,
    /// Comma-separated strictly decreasing epsilons; the base runs over 1-ε.
    #[arg(long, default_value = "1e-2,1e-3,1e-4")]
    eps: String,
    /// Exponent-assignment seed.
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

/// Failure carrying the process exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }

    fn run(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }

    fn not_converged(message: impl Into<String>) -> Self {
        Self {
            code: 3,
            message: message.into(),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let policy = match resolve_policy(&cli.global) {
        Ok(p) => p,
        Err(f) => return fail(f),
    };
    // Commands render into a buffer; writing happens once at the end, so a
    // reader that stops early (e.g. piping into `head`) never panics us.
    let mut out = String::new();
    let outcome = match cli.command {
        Command::Eval(args) => cmd_eval(&args, &policy, &mut out),
        Command::List(args) => cmd_list(&args, &mut out),
        Command::Verify(args) => cmd_verify(&args, &policy, &mut out),
        Command::Limit(args) => cmd_limit(&args, &policy, &mut out),
    };
    if let Err(e) = std::io::stdout().write_all(out.as_bytes()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: writing stdout: {e}");
            return ExitCode::from(1);
        }
    }
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => fail(f),
    }
}

fn fail(f: Failure) -> ExitCode {
    if !f.message.is_empty() {
        eprintln!("error: {}", f.message);
    }
    ExitCode::from(f.code)
}

/// Mode from flag > environment > standard; tol and max_terms overrides are
/// validated against the mode's invariants.
fn resolve_policy(global: &GlobalOpts) -> Result<PrecisionPolicy, Failure> {
    let mode: PrecisionMode = match global.precision {
        Some(m) => m.into(),
        None => match std::env::var("QCONTIG_PRECISION") {
            Ok(v) if v.eq_ignore_ascii_case("extended") => PrecisionMode::Extended,
            Ok(v) if v.eq_ignore_ascii_case("standard") || v.is_empty() => {
                PrecisionMode::Standard
            }
            Ok(v) => {
                return Err(Failure::usage(format!(
                    "QCONTIG_PRECISION must be `standard` or `extended`, got `{v}`"
                )))
            }
            Err(_) => PrecisionMode::Standard,
        },
    };
    let base = match mode {
        PrecisionMode::Standard => PrecisionPolicy::standard(),
        PrecisionMode::Extended => PrecisionPolicy::extended(),
    };
    let tol = global.tol.unwrap_or(base.tol);
    let max_terms = global.max_terms.unwrap_or(base.max_terms);
    PrecisionPolicy::new(mode, base.decimal_digits, tol, max_terms)
        .map_err(|e| Failure::usage(format!("--tol/--max-terms: {e}")))
}

// ---------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------

fn parse_kind(text: &str) -> Option<(SeriesKind, usize, usize)> {
    let (body, star) = match text.strip_suffix('*') {
        Some(b) => (b, true),
        None => (text, false),
    };
    let (is_q, r, s) = if let Some((r, s)) = body.split_once("phi") {
        (true, r.parse().ok()?, s.parse().ok()?)
    } else if let Some((r, s)) = body.split_once('f') {
        (false, r.parse().ok()?, s.parse().ok()?)
    } else {
        return None;
    };
    let kind = match (is_q, star) {
        (true, false) => SeriesKind::QPhi,
        (true, true) => SeriesKind::QPhiStar,
        (false, false) => SeriesKind::ClassicalF,
        (false, true) => SeriesKind::ClassicalFStar,
    };
    Some((kind, r, s))
}

fn parse_scalar_list(text: &str, flag: &str, policy: &PrecisionPolicy) -> Result<Vec<Scalar>, Failure> {
    text.split(',')
        .enumerate()
        .map(|(i, part)| {
            policy.parse_scalar(part).map_err(|e| {
                Failure::usage(format!("{flag} entry {} (`{}`): {e}", i + 1, part.trim()))
            })
        })
        .collect()
}

/// Which flag most plausibly caused a domain rejection, from the error shape.
fn eval_flag_hint(e: &Error) -> &'static str {
    match e {
        Error::BaseOutOfDomain { .. } => "--q",
        Error::SingularDenominator { .. } | Error::Pole(_) => "--den",
        Error::DomainViolation(msg) => {
            if msg.contains("base") {
                "--q"
            } else if msg.contains("argument") {
                "--z"
            } else {
                "--num/--den"
            }
        }
        _ => "--kind",
    }
}

fn cmd_eval(args: &EvalArgs, policy: &PrecisionPolicy, out: &mut String) -> CmdResult {
    let Some((kind, r, s)) = parse_kind(&args.kind) else {
        return Err(Failure::usage(format!(
            "--kind `{}` not recognized; expected <r>phi<s> or <r>f<s>, optionally \
             with a trailing `*` (e.g. 3phi2, 2phi1*, 3f2)",
            args.kind
        )));
    };
    let nums = parse_scalar_list(&args.num, "--num", policy)?;
    let dens = parse_scalar_list(&args.den, "--den", policy)?;
    if nums.len() != r {
        return Err(Failure::usage(format!(
            "--num has {} entries but kind {} expects {r}",
            nums.len(),
            args.kind
        )));
    }
    if dens.len() != s {
        return Err(Failure::usage(format!(
            "--den has {} entries but kind {} expects {s}",
            dens.len(),
            args.kind
        )));
    }
    let base = if kind.is_q() {
        let Some(q_text) = args.q.as_deref() else {
            return Err(Failure::usage(format!(
                "--q is required for kind {}",
                args.kind
            )));
        };
        policy
            .parse_scalar(q_text)
            .map_err(|e| Failure::usage(format!("--q (`{q_text}`): {e}")))?
    } else {
        if args.q.is_some() {
            return Err(Failure::usage(format!(
                "--q does not apply to classical kind {}",
                args.kind
            )));
        }
        policy.zero()
    };
    let argument = match args.z.as_deref() {
        Some(z_text) => policy
            .parse_scalar(z_text)
            .map_err(|e| Failure::usage(format!("--z (`{z_text}`): {e}")))?,
        None if kind.is_q() => policy.zero(),
        None => policy.one(),
    };
    let spec = SeriesSpec::new(kind, nums, dens, base, argument);
    let value = match series::eval_series(&spec, policy) {
        Ok(v) => v,
        Err(e @ Error::NotConverged { .. }) => {
            return Err(Failure::not_converged(e.to_string()));
        }
        Err(e) => {
            return Err(Failure::usage(format!("{} ({e})", eval_flag_hint(&e))));
        }
    };
    let _ = writeln!(
        out,
        "value      = {}",
        value.value.to_display(policy.decimal_digits as usize)
    );
    let _ = writeln!(out, "terms_used = {}", value.terms_used);
    let _ = writeln!(out, "tail_bound = {:e}", value.tail_bound);
    let _ = writeln!(out, "converged  = {}", value.converged);
    if value.converged {
        Ok(())
    } else {
        Err(Failure::not_converged(format!(
            "series did not converge within {} terms",
            policy.max_terms
        )))
    }
}

// ---------------------------------------------------------------------
// list
// ---------------------------------------------------------------------

fn sorted_entries(family: Option<&str>) -> Vec<&'static Relation> {
    let mut rows: Vec<&Relation> = relations::registry()
        .iter()
        .filter(|r| family.map_or(true, |f| r.family.as_str() == f))
        .collect();
    rows.sort_by_key(|r| r.id);
    rows
}

fn cmd_list(args: &ListArgs, out: &mut String) -> CmdResult {
    let rows = sorted_entries(args.family.as_deref());
    if args.json {
        let values: Vec<serde_json::Value> = rows
            .iter()
            .map(|r| {
                serde_json::json!({
                    "id": r.id,
                    "family": r.family.as_str(),
                    "free_params": r.free_params,
                    "constraints": r.constraint_names(),
                    "paper_anchor": r.paper_anchor,
                    "notes": r.notes,
                })
            })
            .collect();
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&values).expect("listing serializes")
        );
    } else {
        for r in &rows {
            let _ = writeln!(
                out,
                "{:<24} {:<20} [{}]  {}",
                r.id,
                r.family.as_str(),
                r.free_params.join(","),
                r.paper_anchor
            );
        }
        let _ = writeln!(out, "{} entries", rows.len());
    }
    Ok(())
}

// ---------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------

fn render_reports(reports: &[VerificationReport], format: FormatArg) -> String {
    match format {
        FormatArg::Json => {
            serde_json::to_string_pretty(reports).expect("reports serialize")
        }
        FormatArg::Csv => verify::csv_summary(reports),
        FormatArg::Text => {
            let mut out = String::new();
            for r in reports {
                out.push_str(&format!(
                    "{:<24} samples {:>4}  max_residual {:9.3e}  {}\n",
                    r.relation_id,
                    r.samples,
                    r.max_residual,
                    if r.pass() { "pass" } else { "FAIL" }
                ));
                for f in &r.failures {
                    match (&f.residual, &f.error) {
                        (Some(res), _) => {
                            out.push_str(&format!("    residual {res:9.3e} at {:?}\n", f.point))
                        }
                        (None, Some(e)) => out.push_str(&format!("    error: {e}\n")),
                        (None, None) => {}
                    }
                }
            }
            out
        }
    }
}

/// Write via a sibling temp file and rename, so readers never observe a
/// partially written report.
fn write_atomic(path: &std::path::Path, content: &str) -> std::io::Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    std::fs::write(&tmp, content)?;
    std::fs::rename(&tmp, path)
}

fn cmd_verify(args: &VerifyArgs, policy: &PrecisionPolicy, out: &mut String) -> CmdResult {
    if args.samples == 0 {
        return Err(Failure::usage("--samples must be at least 1"));
    }
    let reports = if args.all {
        verify::verify_all(args.seed, args.samples, policy)
    } else {
        let id = args.relation.as_deref().expect("clap enforces the pair");
        relations::find(id).map_err(|e| Failure::usage(format!("--relation: {e}")))?;
        vec![verify::verify_relation_report(
            id,
            args.seed,
            args.samples,
            policy,
        )]
    };
    match &args.report {
        Some(path) => {
            write_atomic(path, &render_reports(&reports, args.format)).map_err(|e| {
                Failure::run(format!("--report {}: {e}", path.display()))
            })?;
            // Keep stdout human-readable when the full report goes to a file.
            out.push_str(&render_reports(&reports, FormatArg::Text));
        }
        None => out.push_str(&render_reports(&reports, args.format)),
    }
    let failing = reports.iter().filter(|r| !r.pass()).count();
    if args.format == FormatArg::Text || args.report.is_some() {
        let _ = writeln!(
            out,
            "verified {} relation(s): {}",
            reports.len(),
            if failing == 0 {
                "all pass".to_string()
            } else {
                format!("{failing} failing")
            }
        );
    }
    if failing == 0 {
        Ok(())
    } else {
        Err(Failure {
            code: 1,
            message: String::new(),
        })
    }
}

// ---------------------------------------------------------------------
// limit
// ---------------------------------------------------------------------

fn cmd_limit(args: &LimitArgs, policy: &PrecisionPolicy, out: &mut String) -> CmdResult {
    let Some((qid, cid)) = args.pair.split_once(':') else {
        return Err(Failure::usage(format!(
            "--pair `{}` must be written qid:cid",
            args.pair
        )));
    };
    if qid.is_empty() || cid.is_empty() {
        return Err(Failure::usage("--pair needs both a q id and a classical id"));
    }
    let epsilons: Vec<f64> = args
        .eps
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<f64>()
                .map_err(|e| Failure::usage(format!("--eps entry `{}`: {e}", part.trim())))
        })
        .collect::<Result<_, _>>()?;
    let report = match verify::limit_check(qid, cid, &epsilons, args.seed, policy) {
        Ok(r) => r,
        Err(
            e @ (Error::UnknownRelation(_) | Error::UnknownPair(..) | Error::DomainViolation(_)),
        ) => return Err(Failure::usage(format!("--pair/--eps: {e}"))),
        Err(e) => return Err(Failure::run(e.to_string())),
    };
    let _ = writeln!(
        out,
        "pair        = {} : {}",
        report.q_relation_id, report.classical_relation_id
    );
    let exponents = report
        .exponent_assignment
        .iter()
        .map(|(name, x)| format!("{name}={x:.6}"))
        .collect::<Vec<_>>()
        .join("  ");
    let _ = writeln!(out, "exponents   = {exponents}");
    for (eps, gap) in report.epsilons.iter().zip(&report.coefficient_gaps) {
        let _ = writeln!(out, "  eps {eps:9.3e}  coefficient_gap {gap:9.3e}");
    }
    let _ = writeln!(out, "decreasing  = {}", report.decreasing);
    if report.decreasing {
        Ok(())
    } else {
        Err(Failure {
            code: 1,
            message: String::new(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn kind_grammar_accepts_the_catalog_shapes() {
        assert_eq!(parse_kind("3phi2"), Some((SeriesKind::QPhi, 3, 2)));
        assert_eq!(parse_kind("3phi2*"), Some((SeriesKind::QPhiStar, 3, 2)));
        assert_eq!(parse_kind("2phi1"), Some((SeriesKind::QPhi, 2, 1)));
        assert_eq!(parse_kind("3f2"), Some((SeriesKind::ClassicalF, 3, 2)));
        assert_eq!(parse_kind("2f1*"), Some((SeriesKind::ClassicalFStar, 2, 1)));
        assert_eq!(parse_kind("phi"), None);
        assert_eq!(parse_kind("3phi"), None);
        assert_eq!(parse_kind("weird"), None);
    }

    #[test]
    fn listing_orders_by_id_and_filters() {
        let all = sorted_entries(None);
        assert!(all.len() >= 100);
        assert!(all.windows(2).all(|w| w[0].id < w[1].id));
        let patterns = sorted_entries(Some("pattern"));
        assert_eq!(patterns.len(), 8);
        assert!(sorted_entries(Some("no-such-family")).is_empty());
    }

    #[test]
    fn registry_ids_survive_the_json_round_trip() {
        let rows = sorted_entries(None);
        let values: Vec<serde_json::Value> = rows
            .iter()
            .map(|r| serde_json::json!({ "id": r.id }))
            .collect();
        let text = serde_json::to_string(&values).unwrap();
        let parsed: Vec<serde_json::Value> = serde_json::from_str(&text).unwrap();
        let ids: BTreeSet<&str> = parsed
            .iter()
            .map(|v| v.get("id").and_then(|s| s.as_str()).unwrap())
            .collect();
        let expected: BTreeSet<&str> = relations::registry().iter().map(|r| r.id).collect();
        assert_eq!(ids, expected);
    }
}
