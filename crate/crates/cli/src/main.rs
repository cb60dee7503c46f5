use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rgf_core::formulas::{lookup, registry, Level};
use rgf_core::genfun::{oracle_f, oracle_single};
use rgf_core::pattern::{avoidance_class, characterized_class, TABLE1, TABLE2};
use rgf_core::poly::PolyFormat;
use rgf_core::stats::{letter_table, stat_vector};
use rgf_core::verify::{verify_all, Findings, DEFAULT_N_MAX};
use rgf_core::{Error, MultiPoly, PatternSet, RgfWord, StatName};

#[derive(Parser)]
#[command(
    name = "rgf",
    version,
    about = "Set partitions as restricted growth functions: avoidance classes, statistics and their generating polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the RGFs of length n avoiding a pattern set
    Enumerate(EnumerateArgs),
    /// Per-letter lb/ls/rb/rs of one word
    Stats(StatsArgs),
    /// Generating polynomial of an avoidance class, by enumeration
    Poly(PolyArgs),
    /// Evaluate a registered closed form, or list the registry
    Formula(FormulaArgs),
    /// Check registered claims against enumeration
    Verify(VerifyArgs),
    /// Tabulated two-, three- and four-pattern classes
    Table(TableArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum PlainFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyOut {
    Text,
    Latex,
    Json,
}

impl From<PolyOut> for PolyFormat {
    fn from(f: PolyOut) -> Self {
        match f {
            PolyOut::Text => PolyFormat::Text,
            PolyOut::Latex => PolyFormat::Latex,
            PolyOut::Json => PolyFormat::Json,
        }
    }
}

#[derive(Args)]
struct Jobs {
    /// Worker threads (0 = one per core)
    #[arg(long, env = "RGF_JOBS")]
    jobs: Option<usize>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: Option<usize>,
    /// Patterns separated by ';', word patterns prefixed with 'w:'
    #[arg(long, default_value = "")]
    avoid: String,
    #[arg(long, value_enum, default_value = "text")]
    format: PlainFormat,
}

#[derive(Args)]
struct StatsArgs {
    #[arg(long)]
    word: String,
    /// Use lbe/lse/rbe/rse
    #[arg(long)]
    equal_variant: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: PlainFormat,
}

#[derive(Args)]
struct PolyArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value = "")]
    avoid: String,
    /// One of lb, ls, rb, rs, lbe, lse, rbe, rse, or all
    #[arg(long, default_value = "all")]
    stat: String,
    #[arg(long)]
    equal_variant: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: PolyOut,
    #[command(flatten)]
    jobs: Jobs,
}

#[derive(Args)]
struct FormulaArgs {
    #[arg(long, conflicts_with = "list", required_unless_present = "list")]
    id: Option<String>,
    #[arg(long, required_unless_present = "list")]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    list: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: PolyOut,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = DEFAULT_N_MAX)]
    n_max: usize,
    /// Glob over ids, e.g. 'thm7.1.*'
    #[arg(long)]
    id: Option<String>,
    /// Write the JSON report here
    #[arg(long)]
    out: Option<PathBuf>,
    /// Findings to compare against (defaults to the built-in file)
    #[arg(long)]
    findings: Option<PathBuf>,
    /// Write findings from this run instead of comparing
    #[arg(long, conflicts_with = "findings")]
    write_findings: Option<PathBuf>,
    #[command(flatten)]
    jobs: Jobs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Table1,
    Table2,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    which: Which,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: PlainFormat,
}

enum Failure {
    Domain(Error),
    Io(String),
    Deviation,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = Result<String, Failure>;

fn pattern_set(text: &str) -> Result<PatternSet, Error> {
    if text.trim().is_empty() {
        Ok(PatternSet::default())
    } else {
        text.parse()
    }
}

fn with_jobs<T: Send>(jobs: &Jobs, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    match jobs.jobs {
        None => Ok(f()),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| Failure::Io(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

fn json_out(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

fn enumerate(a: &EnumerateArgs) -> Outcome {
    let ps = pattern_set(&a.avoid)?;
    let words: Vec<String> = avoidance_class(a.n, a.k, &ps)?
        .map(|w| w.to_string())
        .collect();
    Ok(match a.format {
        PlainFormat::Text => words.iter().map(|w| format!("{w}\n")).collect(),
        PlainFormat::Json => json_out(&json!({
            "n": a.n,
            "k": a.k,
            "avoid": ps.to_string(),
            "count": words.len(),
            "words": words,
        })),
    })
}

fn stats(a: &StatsArgs) -> Outcome {
    let w: RgfWord = a.word.parse()?;
    let rows = letter_table(&w, a.equal_variant);
    let total = stat_vector(&w, a.equal_variant);
    let names: [&str; 4] = if a.equal_variant {
        ["lbe", "lse", "rbe", "rse"]
    } else {
        ["lb", "ls", "rb", "rs"]
    };
    match a.format {
        PlainFormat::Text => {
            let mut out = format!("pos\tletter\t{}\n", names.join("\t"));
            for (i, (row, letter)) in rows.iter().zip(w.letters()).enumerate() {
                let [x, y, z, u] = row.as_array();
                let _ = writeln!(out, "{}\t{letter}\t{x}\t{y}\t{z}\t{u}", i + 1);
            }
            let totals: Vec<String> = names
                .iter()
                .zip(total.as_array())
                .map(|(name, v)| format!("{name}={v}"))
                .collect();
            let _ = writeln!(out, "{}", totals.join(" "));
            Ok(out)
        }
        PlainFormat::Json => {
            let letters: Vec<Value> = rows
                .iter()
                .zip(w.letters())
                .enumerate()
                .map(|(i, (row, letter))| {
                    let mut m = serde_json::Map::new();
                    m.insert("position".into(), json!(i + 1));
                    m.insert("letter".into(), json!(letter));
                    for (name, v) in names.iter().zip(row.as_array()) {
                        m.insert((*name).into(), json!(v));
                    }
                    Value::Object(m)
                })
                .collect();
            let totals: serde_json::Map<String, Value> = names
                .iter()
                .zip(total.as_array())
                .map(|(name, v)| ((*name).to_string(), json!(v)))
                .collect();
            Ok(json_out(&json!({
                "word": w.to_string(),
                "equal_variant": a.equal_variant,
                "letters": letters,
                "totals": totals,
            })))
        }
    }
}

fn poly(a: &PolyArgs) -> Outcome {
    let ps = pattern_set(&a.avoid)?;
    if let Some(k) = a.k {
        if k == 0 || k > a.n {
            return Err(Error::Domain(format!("need 1 <= k <= n (got n={}, k={k})", a.n)).into());
        }
    }
    let p = if a.stat == "all" {
        with_jobs(&a.jobs, || oracle_f(a.n, a.k, &ps, a.equal_variant))??
    } else {
        let mut stat: StatName = a.stat.parse()?;
        if a.equal_variant {
            stat = stat.to_equal_variant();
        }
        with_jobs(&a.jobs, || oracle_single(a.n, a.k, &ps, stat))??
    };
    Ok(render(&p, a.format))
}

fn render(p: &MultiPoly, format: PolyOut) -> String {
    let mut s = p.render(format.into());
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn formula(a: &FormulaArgs) -> Outcome {
    if a.list {
        let mut out = String::new();
        for e in registry() {
            let level = match e.level {
                Level::PerK => "per-k",
                Level::AllK => "all-k",
            };
            let kind = if e.is_identity() {
                "identity"
            } else {
                "closed"
            };
            let _ = writeln!(out, "{}\t{level}\t{kind}\t{}", e.id, e.about);
        }
        return Ok(out);
    }
    let id = a.id.as_deref().expect("clap requires --id");
    let n = a.n.expect("clap requires --n");
    let p = lookup(id)?.eval(n, a.k)?;
    Ok(render(&p, a.format))
}

fn verify(a: &VerifyArgs) -> Outcome {
    let report = with_jobs(&a.jobs, || verify_all(a.n_max, a.id.as_deref()))??;
    if let Some(path) = &a.out {
        fs::write(path, report.to_json())
            .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    }
    let mut out = String::new();
    for (id, o) in &report.ids {
        match o.first_mismatch_n {
            Some(m) => {
                let _ = writeln!(out, "{id}\t{}\tfirst mismatch at n={m}", o.status);
            }
            None => {
                let _ = writeln!(out, "{id}\t{}", o.status);
            }
        }
    }
    let s = report.summary;
    let _ = writeln!(
        out,
        "cells: {} confirmed, {} mismatch, {} out of regime",
        s.confirmed, s.mismatch, s.out_of_regime
    );
    if let Some(path) = &a.write_findings {
        let findings = Findings::from_report(&report);
        fs::write(path, findings.to_json())
            .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
        return Ok(out);
    }
    let findings = match &a.findings {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            Findings::from_json(&text)?
        }
        None => Findings::shipped(),
    };
    let deviations = findings.deviations(&report);
    if deviations.is_empty() {
        return Ok(out);
    }
    print!("{out}");
    for d in deviations {
        eprintln!("deviation: {d}");
    }
    Err(Failure::Deviation)
}

fn table(a: &TableArgs) -> Outcome {
    let sets: &[&str] = match a.which {
        Which::Table1 => &TABLE1,
        Which::Table2 => &TABLE2,
    };
    let mut rows = Vec::new();
    for set in sets {
        let ps: PatternSet = set.parse()?;
        let mut by_k = Vec::new();
        for k in 1..=a.n {
            let words = characterized_class(a.n, k, &ps)?;
            if !words.is_empty() {
                by_k.push((k, words.iter().map(|w| w.to_string()).collect::<Vec<_>>()));
            }
        }
        rows.push((ps.to_string(), by_k));
    }
    Ok(match a.format {
        PlainFormat::Text => {
            let mut out = String::new();
            for (set, by_k) in &rows {
                let _ = writeln!(out, "{set}");
                for (k, words) in by_k {
                    let _ = writeln!(out, "  k={k}: {}", words.join(" "));
                }
            }
            out
        }
        PlainFormat::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|(set, by_k)| {
                    let classes: Vec<Value> = by_k
                        .iter()
                        .map(|(k, words)| json!({ "k": k, "words": words }))
                        .collect();
                    json!({ "avoid": set, "classes": classes })
                })
                .collect();
            json_out(&json!({ "n": a.n, "rows": rows }))
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Enumerate(a) => enumerate(a),
        Command::Stats(a) => stats(a),
        Command::Poly(a) => poly(a),
        Command::Formula(a) => formula(a),
        Command::Verify(a) => verify(a),
        Command::Table(a) => table(a),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Deviation) => ExitCode::from(1),
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
