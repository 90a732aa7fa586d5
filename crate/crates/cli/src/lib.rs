//! `regmap` command line: classification runs, triple inspection, the
//! `PGL₂(9)` construction and the theorem grid.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use regmap::census;
use regmap::classify::{self, expected_count, CellStatus, ClassifyError, TheoremReport, DEFAULT_BUDGET};
use regmap::map::{self, AdmissibleTriple, MapInvariants, ValidationReport};
use regmap::pgl::{self, PglReport};
use regmap::{named_triple, ClassifyOptions, MapRecord, Perm};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "regmap", version, about = "Regular maps on Hamming graphs")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Table)]
    pub format: Format,
    /// Largest group order and candidate count a run may attempt.
    #[arg(long, global = true, env = "REGMAP_BUDGET", default_value_t = DEFAULT_BUDGET, value_parser = positive)]
    pub budget: usize,
    /// Worker threads; defaults to one per core.
    #[arg(long, global = true, value_parser = positive)]
    pub threads: Option<usize>,
    /// Write to this file instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify the nonorientable regular embeddings of H(d,n).
    Classify(ClassifyArgs),
    /// Validate a triple, or revalidate every record of a census file.
    Invariants(InvariantsArgs),
    /// The two maps built from PGL(2,9).
    Pgl29 {
        /// Run every check instead of only printing invariants.
        #[arg(long)]
        verify: bool,
    },
    /// Compare classification counts with the expected grid.
    VerifyTheorem {
        #[arg(long, default_value_t = 3, value_parser = positive)]
        max_d: usize,
        #[arg(long, default_value_t = 7, value_parser = positive)]
        max_n: usize,
    },
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long, value_parser = positive)]
    pub d: usize,
    #[arg(long, value_parser = positive)]
    pub n: usize,
    #[arg(long, default_value_t = classify::DEFAULT_WITNESS_LEN)]
    pub max_witness_len: usize,
    /// Try every admissible coordinate involution, not only the reversal.
    #[arg(long)]
    pub full_theta: bool,
    /// Skip the stabiliser precheck and build every candidate group.
    #[arg(long)]
    pub no_precheck: bool,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct InvariantsArgs {
    /// Built-in name (h22-octagon, k3-hexagon, pgl29, pgl29-petrie) or a triple file.
    #[arg(long)]
    pub triple: Option<String>,
    /// Census JSON whose records are rebuilt and checked.
    #[arg(long)]
    pub census: Option<PathBuf>,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

/// What a command produced: text for the output sink, and an exit code.
struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Outcome {
        Outcome { text, code: EXIT_OK }
    }
}

/// A failure reported on the error stream with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }
}

impl From<ClassifyError> for Failure {
    fn from(e: ClassifyError) -> Failure {
        let code = match e {
            ClassifyError::OverBudget { .. } => EXIT_BUDGET,
            ClassifyError::BadRecord { .. } => EXIT_MISMATCH,
            ClassifyError::Wreath(_) | ClassifyError::Map(_) => EXIT_INVALID,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Runs one command. Output goes to `--output` or `out`; diagnostics go to
/// `err`. Returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INVALID;
        }
    };
    let mut notes = String::new();
    let result = pool.install(|| dispatch(cli, &mut notes));
    let _ = err.write_all(notes.as_bytes());
    match result {
        Ok(outcome) => {
            if let Err(e) = emit(cli.output.as_deref(), &outcome.text, out) {
                let _ = writeln!(err, "error: {e}");
                return EXIT_INVALID;
            }
            outcome.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn emit(path: Option<&Path>, text: &str, out: &mut dyn Write) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => out.write_all(text.as_bytes()),
    }
}

fn dispatch(cli: &Cli, notes: &mut String) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Classify(args) => run_classify(cli, args, notes),
        Command::Invariants(args) => match (&args.triple, &args.census) {
            (Some(t), _) => run_triple(cli, t),
            (None, Some(path)) => run_census(cli, path),
            (None, None) => Err(Failure::invalid("one of --triple or --census is required")),
        },
        Command::Pgl29 { verify } => run_pgl(cli, *verify),
        Command::VerifyTheorem { max_d, max_n } => run_theorem(cli, *max_d, *max_n),
    }
}

fn options(cli: &Cli) -> ClassifyOptions {
    ClassifyOptions {
        budget: cli.budget,
        ..ClassifyOptions::default()
    }
}

fn to_json<T: serde::Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialisable");
    s.push('\n');
    s
}

fn run_classify(cli: &Cli, args: &ClassifyArgs, notes: &mut String) -> Result<Outcome, Failure> {
    let opts = ClassifyOptions {
        max_witness_len: args.max_witness_len,
        full_theta_sweep: args.full_theta,
        stabilizer_precheck: !args.no_precheck,
        ..options(cli)
    };
    let c = classify::classify(args.d, args.n, &opts)?;
    let diag = &c.diagnostics;
    let _ = writeln!(
        notes,
        "H({},{}): {} candidates, {} orientable, {} nonorientable, {} duplicates",
        c.d, c.n, diag.candidates, diag.orientable, diag.nonorientable, diag.duplicates
    );
    let text = match cli.format {
        Format::Json => census::to_json(&c.records),
        Format::Table => records_table(&c.records),
    };
    let expected = expected_count(args.d, args.n);
    let code = if c.records.len() == expected {
        EXIT_OK
    } else {
        let _ = writeln!(
            notes,
            "mismatch: expected {expected} embeddings, found {}",
            c.records.len()
        );
        EXIT_MISMATCH
    };
    Ok(Outcome { text, code })
}

fn records_table(records: &[MapRecord]) -> String {
    let mut s = format!(
        "{:<3} {:<3} {:<11} {:>6} {:>6} {:>6} {:>7} {:>6} {:>7}  {:<28} {:<14} note\n",
        "d", "n", "type", "V", "E", "F", "chi", "genus", "|G|", "sigma", "witness"
    );
    for r in records {
        let inv = &r.invariants;
        let sigma = r.params.sigma.iter().map(cycle_notation).collect::<Vec<_>>().join(",");
        let witness = r.witness.as_ref().map_or("-".into(), |w| format!("{w:?}"));
        let _ = writeln!(
            s,
            "{:<3} {:<3} {:<11} {:>6} {:>6} {:>6} {:>7} {:>6} {:>7}  {:<28} {:<14} {}",
            r.d(),
            r.n(),
            inv.map_type.to_string(),
            inv.vertices,
            inv.edges,
            inv.faces,
            inv.euler,
            inv.genus,
            inv.group_order,
            sigma,
            witness,
            r.census_note.as_deref().unwrap_or("")
        );
    }
    if records.is_empty() {
        s.push_str("(no nonorientable regular embeddings)\n");
    }
    s
}

fn cycle_notation(p: &Perm) -> String {
    let cycles: Vec<Vec<usize>> = p.cycles().into_iter().filter(|c| c.len() > 1).collect();
    if cycles.is_empty() {
        return "id".into();
    }
    cycles
        .iter()
        .map(|c| format!("({})", c.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")))
        .collect()
}

fn load_triple(name: &str) -> Result<AdmissibleTriple, Failure> {
    if let Some(t) = named_triple(name) {
        return Ok(t);
    }
    let text = std::fs::read_to_string(name).map_err(|e| Failure::invalid(format!("{name}: {e}")))?;
    AdmissibleTriple::parse(&text).map_err(|e| Failure::invalid(format!("{name}: {e}")))
}

fn invariants_table(inv: &MapInvariants) -> String {
    format!(
        "type        {}\nV E F       {} {} {}\nchi         {}\norientable  {}\ngenus       {}\n|G|         {}\n",
        inv.map_type, inv.vertices, inv.edges, inv.faces, inv.euler, inv.orientable, inv.genus, inv.group_order
    )
}

fn report_table(report: &ValidationReport) -> String {
    report
        .checks
        .iter()
        .map(|c| format!("[{}] {}: {}\n", if c.passed { "ok" } else { "FAIL" }, c.name, c.detail))
        .collect()
}

fn run_triple(cli: &Cli, name: &str) -> Result<Outcome, Failure> {
    let triple = load_triple(name)?;
    let report = map::validate_admissible(&triple, cli.budget);
    if !report.ok {
        let over_cap = report.group_order.is_none() && report.checks.iter().any(|c| c.name == "closure" && !c.passed);
        return Err(Failure {
            code: if over_cap { EXIT_BUDGET } else { EXIT_INVALID },
            message: format!(
                "{name} is not an admissible triple\n{}",
                report_table(&report).trim_end()
            ),
        });
    }
    let checks = report.clone();
    let map = regmap::RegularMap::from_report(triple, report).map_err(|e| Failure::invalid(e.to_string()))?;
    let inv = map.invariants().map_err(|e| Failure::invalid(e.to_string()))?;
    let witness = map.nonorientability_witness(classify::DEFAULT_WITNESS_LEN);
    let text = match cli.format {
        Format::Json => to_json(&serde_json::json!({
            "invariants": inv,
            "validation": checks,
            "witness": witness,
        })),
        Format::Table => {
            let w = witness.map_or("-".into(), |w| format!("{w:?}"));
            format!("{}{}witness     {w}\n", report_table(&checks), invariants_table(&inv))
        }
    };
    Ok(Outcome::ok(text))
}

fn run_census(cli: &Cli, path: &Path) -> Result<Outcome, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))?;
    let records = census::from_json(&text).map_err(|e| match e {
        ClassifyError::BadRecord { .. } => Failure::from(e),
        other => Failure::invalid(format!("{}: {other}", path.display())),
    })?;
    let text = match cli.format {
        Format::Json => to_json(&serde_json::json!({ "revalidated": records.len() })),
        Format::Table => format!("{}{} records revalidated\n", records_table(&records), records.len()),
    };
    Ok(Outcome::ok(text))
}

fn pgl_table(report: &PglReport) -> String {
    let mut s: String = report
        .checks
        .iter()
        .map(|c| format!("[{}] {}: {}\n", if c.passed { "ok" } else { "FAIL" }, c.name, c.detail))
        .collect();
    let _ = writeln!(
        s,
        "{}",
        if report.ok {
            "all checks passed"
        } else {
            "some checks failed"
        }
    );
    s
}

fn run_pgl(cli: &Cli, verify: bool) -> Result<Outcome, Failure> {
    if verify {
        let report = pgl::verify_construction();
        let text = match cli.format {
            Format::Json => to_json(&report),
            Format::Table => pgl_table(&report),
        };
        return Ok(Outcome {
            text,
            code: if report.ok { EXIT_OK } else { EXIT_MISMATCH },
        });
    }
    let triple = pgl::pgl29_triple();
    let m = map::invariants(&triple, cli.budget).map_err(|e| Failure::invalid(e.to_string()))?;
    let n = map::invariants(&triple.petrie_dual(), cli.budget).map_err(|e| Failure::invalid(e.to_string()))?;
    let text = match cli.format {
        Format::Json => to_json(&serde_json::json!({ "map": m, "petrie_dual": n })),
        Format::Table => format!("map\n{}\npetrie dual\n{}", invariants_table(&m), invariants_table(&n)),
    };
    Ok(Outcome::ok(text))
}

fn theorem_table(report: &TheoremReport) -> String {
    let mut s = format!(
        "{:<3} {:<3} {:>8} {:>5}  {:<7}  {:<24} genera\n",
        "d", "n", "expected", "found", "status", "types"
    );
    for c in &report.cells {
        let status = match c.status {
            CellStatus::Pass => "pass",
            CellStatus::Fail => "FAIL",
            CellStatus::Skipped => "skipped",
        };
        let found = c.found.map_or("-".into(), |f| f.to_string());
        let genera = c.genera.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        let _ = write!(
            s,
            "{:<3} {:<3} {:>8} {:>5}  {:<7}  {:<24} {}",
            c.d,
            c.n,
            c.expected,
            found,
            status,
            c.types.join(","),
            genera
        );
        if let Some(note) = &c.note {
            let _ = write!(s, "  ({note})");
        }
        s.push('\n');
    }
    let failed = report.cells.iter().any(|c| c.status == CellStatus::Fail);
    let verdict = match (failed, report.complete) {
        (false, true) => "all cells pass",
        (false, false) => "no failures, but some cells were skipped",
        (true, _) => "some cells FAIL",
    };
    let _ = writeln!(s, "{verdict}");
    s
}

fn run_theorem(cli: &Cli, max_d: usize, max_n: usize) -> Result<Outcome, Failure> {
    let report = classify::verify_theorem(max_d, max_n, &options(cli));
    let text = match cli.format {
        Format::Json => to_json(&report),
        Format::Table => theorem_table(&report),
    };
    let failed = report.cells.iter().any(|c| c.status == CellStatus::Fail);
    let code = if failed {
        EXIT_MISMATCH
    } else if !report.complete {
        EXIT_BUDGET
    } else {
        EXIT_OK
    };
    Ok(Outcome { text, code })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_parse_globally() {
        let cli = Cli::try_parse_from(["regmap", "classify", "--d", "2", "--n", "6", "--format", "json"]).unwrap();
        assert_eq!(cli.format, Format::Json);
        assert!(matches!(cli.command, Command::Classify(ClassifyArgs { d: 2, n: 6, .. })));
        assert!(Cli::try_parse_from(["regmap", "invariants"]).is_err());
        assert!(Cli::try_parse_from(["regmap", "--threads", "0", "pgl29"]).is_err());
    }

    #[test]
    fn cycle_notation_drops_fixed_points() {
        assert_eq!(cycle_notation(&Perm::identity(4)), "id");
        assert_eq!(cycle_notation(&Perm::from_cycles(6, &[&[0, 1], &[2, 5]]).unwrap()), "(0 1)(2 5)");
    }

    #[test]
    fn run_writes_to_the_given_sink() {
        let cli = Cli::try_parse_from(["regmap", "invariants", "--triple", "k3-hexagon"]).unwrap();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run(&cli, &mut out, &mut err), EXIT_OK);
        assert!(String::from_utf8(out).unwrap().contains("{6,2}_3"));
    }
}
