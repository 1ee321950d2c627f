//! `braceforge` command-line tool.

use std::fmt::Write as _;
use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use braceforge::brace::BraceSignature;
use braceforge::constructions::{
    brace_from_cocycle, enumerate_braces_with, z_window_check_with, EnumerationOptions, WindowKind,
    DEFAULT_ENUMERATION_CAP,
};
use braceforge::io::{
    load_brace, load_cocycle, load_group, load_solution, read_json, save_brace, save_solution, write_json,
};
use braceforge::laws::{enumerated_corpus, run_laws, CorpusEntry, LawOptions, LawsReport};
use braceforge::series::{
    left_series, nilpotency_report, right_series, socle_series_and_mpl, strong_series, SeriesReport,
};
use braceforge::substructure::{fix, ker_lambda, socle};
use braceforge::ybe::{orbits, restrict_solution, solution_from_brace, validate_solution_with, SolutionReport};
use braceforge::{ElementSet, Exec, SkewBrace, Solution};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

const CAP_VAR: &str = "BRACEFORGE_CAP";

#[derive(Parser)]
#[command(
    name = "braceforge",
    version,
    about = "Finite skew left braces and Yang-Baxter solutions"
)]
struct Cli {
    /// Print machine-readable JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Run every loop on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a file holds a skew left brace.
    Validate { file: PathBuf },
    /// Classification, socle, Fix, ker λ, nilpotency and mpl.
    Info { file: PathBuf },
    /// Print a series of a brace.
    Series {
        #[arg(long, value_enum)]
        kind: SeriesChoice,
        file: PathBuf,
    },
    /// Emit the solution of a brace, or check a solution file.
    Ybe {
        /// Brace file, or solution file with --check.
        file: PathBuf,
        /// Treat FILE as a solution and validate it.
        #[arg(long)]
        check: bool,
        /// Write the emitted solution here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Orbits of the solution of a brace or of a solution file.
    Orbits { file: PathBuf },
    /// Restrict a solution to an invariant subset.
    Restrict {
        /// Brace or solution file.
        file: PathBuf,
        /// Comma-separated elements, e.g. 1,5.
        #[arg(long, value_delimiter = ',', required = true)]
        subset: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Every brace of an order up to isomorphism.
    Enumerate {
        #[arg(long)]
        order: usize,
        /// Restrict to this additive group (group file).
        #[arg(long)]
        additive: Option<PathBuf>,
        /// Write brace_<order>_<seq>.json files and manifest.json here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the brace of a bijective 1-cocycle.
    Cocycle {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive check of a brace on ℤ over [−N, N]³.
    Window {
        #[arg(long, value_enum)]
        kind: WindowChoice,
        #[arg(long)]
        n: i64,
    },
    /// Run the law suites over a corpus.
    Laws {
        /// Orders to enumerate, e.g. 1..8 (inclusive), 1..=8 or 6.
        #[arg(long)]
        orders: Option<String>,
        /// Directory of brace files to add to the corpus.
        #[arg(long)]
        dir: Option<PathBuf>,
        /// Also scan for candidate answers to the open nil questions.
        #[arg(long)]
        scan_questions: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesChoice {
    Left,
    Right,
    Strong,
    Socle,
}

#[derive(Clone, Copy, ValueEnum)]
enum WindowChoice {
    Rump,
    Dihedral,
}

/// Exit status 1 is a failed check, 2 a usage error.
enum Failure {
    Check(anyhow::Error),
    Usage(String),
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Check(e.into())
    }
}

/// Human text and JSON for one command. `ok` decides the exit status.
struct Output {
    text: String,
    json: serde_json::Value,
    ok: bool,
}

impl Output {
    fn new(text: String, json: impl Serialize, ok: bool) -> Self {
        Output {
            text,
            json: serde_json::to_value(json).expect("reports serialize"),
            ok,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = if cli.sequential {
        Exec::Sequential
    } else {
        Exec::Parallel
    };
    match run(cli.command, exec) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("values serialize"));
            } else {
                print!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Check(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, exec: Exec) -> Result<Output, Failure> {
    match command {
        Command::Validate { file } => validate(&file),
        Command::Info { file } => info(&file),
        Command::Series { kind, file } => series(kind, &file),
        Command::Ybe { file, check, out } => ybe(&file, check, out.as_deref(), exec),
        Command::Orbits { file } => orbits_cmd(&file),
        Command::Restrict { file, subset, out } => restrict(&file, &subset, out.as_deref(), exec),
        Command::Enumerate { order, additive, out } => enumerate(order, additive.as_deref(), out.as_deref(), exec),
        Command::Cocycle { file, out } => cocycle(&file, out.as_deref()),
        Command::Window { kind, n } => window(kind, n, exec),
        Command::Laws {
            orders,
            dir,
            scan_questions,
        } => laws(orders.as_deref(), dir.as_deref(), scan_questions, exec),
    }
}

fn type_name(a: &SkewBrace) -> &'static str {
    let c = a.classify();
    if c.abelian_type {
        "abelian type"
    } else if c.nilpotent_type {
        "nilpotent non-abelian type"
    } else {
        "non-nilpotent type"
    }
}

fn validate(file: &Path) -> Result<Output, Failure> {
    #[derive(Serialize)]
    struct Report {
        valid: bool,
        order: Option<usize>,
        error: Option<String>,
        classification: Option<braceforge::brace::Classification>,
    }
    Ok(match load_brace(file) {
        Ok(a) => Output::new(
            format!("valid skew left brace, order {}, {}\n", a.order(), type_name(&a)),
            Report {
                valid: true,
                order: Some(a.order()),
                error: None,
                classification: Some(a.classify()),
            },
            true,
        ),
        Err(e) => Output::new(
            format!("invalid: {e}\n"),
            Report {
                valid: false,
                order: None,
                error: Some(e.to_string()),
                classification: None,
            },
            false,
        ),
    })
}

fn info(file: &Path) -> Result<Output, Failure> {
    let a = load_brace(file)?;
    let c = a.classify();
    let nil = nilpotency_report(&a);
    let soc = socle_series_and_mpl(&a);
    #[derive(Serialize)]
    struct Report {
        order: usize,
        classification: braceforge::brace::Classification,
        socle: Vec<usize>,
        fix: Vec<usize>,
        ker_lambda: Vec<usize>,
        nilpotency: braceforge::series::NilpotencyVerdict,
        mpl: Option<usize>,
        tower_index: Option<usize>,
        stall_index: usize,
    }
    let report = Report {
        order: a.order(),
        classification: c,
        socle: socle(&a).members().to_vec(),
        fix: fix(&a).members().to_vec(),
        ker_lambda: ker_lambda(&a).members().to_vec(),
        nilpotency: nil,
        mpl: soc.mpl,
        tower_index: soc.tower_index,
        stall_index: soc.stall_index,
    };
    let mut text = String::new();
    let _ = writeln!(text, "order            {}", report.order);
    let _ = writeln!(text, "type             {}", type_name(&a));
    let _ = writeln!(text, "trivial          {}", c.trivial);
    let _ = writeln!(text, "socle            {} {:?}", report.socle.len(), report.socle);
    let _ = writeln!(text, "fix              {} {:?}", report.fix.len(), report.fix);
    let _ = writeln!(
        text,
        "ker lambda       {} {:?}",
        report.ker_lambda.len(),
        report.ker_lambda
    );
    let verdict = |b: bool, len: Option<usize>| match len {
        Some(k) if b => format!("yes (zero at term {k})"),
        _ => "no".to_string(),
    };
    let w = nil.witness_lengths;
    let _ = writeln!(text, "left nilpotent   {}", verdict(nil.left, w.left));
    let _ = writeln!(text, "right nilpotent  {}", verdict(nil.right, w.right));
    let _ = writeln!(text, "strong nilpotent {}", verdict(nil.strong, w.strong));
    let _ = writeln!(
        text,
        "mpl              {}",
        soc.mpl.map_or("none".to_string(), |m| m.to_string())
    );
    let _ = writeln!(text, "socle stall      {}", soc.stall_index);
    Ok(Output::new(text, report, true))
}

fn series_text(s: &SeriesReport) -> String {
    let mut text = String::new();
    let sizes: Vec<String> = s.terms.iter().map(|t| t.len().to_string()).collect();
    let _ = writeln!(text, "sizes {}", sizes.join(","));
    for (k, t) in s.terms.iter().enumerate() {
        let _ = writeln!(text, "term {:>2}: {:?}", k + 1, t.members());
    }
    let end = if s.reaches_zero_or_full {
        "reaches its end"
    } else {
        "stabilizes"
    };
    let _ = writeln!(text, "{end}");
    text
}

fn series(kind: SeriesChoice, file: &Path) -> Result<Output, Failure> {
    let a = load_brace(file)?;
    Ok(match kind {
        SeriesChoice::Left => {
            let s = left_series(&a);
            Output::new(series_text(&s), s, true)
        }
        SeriesChoice::Right => {
            let s = right_series(&a);
            Output::new(series_text(&s), s, true)
        }
        SeriesChoice::Strong => {
            let s = strong_series(&a);
            Output::new(series_text(&s), s, true)
        }
        SeriesChoice::Socle => {
            let s = socle_series_and_mpl(&a);
            let mut text = series_text(&s.series);
            let _ = writeln!(
                text,
                "mpl {}, stall index {}",
                s.mpl.map_or("none".to_string(), |m| m.to_string()),
                s.stall_index
            );
            Output::new(text, s, true)
        }
    })
}

/// A brace file or a solution file, told apart by their keys.
fn load_solution_or_brace(file: &Path) -> anyhow::Result<Solution> {
    let value: serde_json::Value = read_json(file)?;
    if value.get("sigma").is_some() {
        Ok(load_solution(file)?)
    } else {
        Ok(solution_from_brace(&load_brace(file)?))
    }
}

fn report_text(r: &SolutionReport) -> String {
    let mut text = format!(
        "braid relation {}, non-degenerate {}, involutive {}\n",
        r.ybe, r.nondegenerate, r.involutive
    );
    if let Some(w) = r.ybe_witness {
        let _ = writeln!(text, "braid relation fails at {w:?}");
    }
    if let Some(w) = &r.degenerate_witness {
        let _ = writeln!(text, "{}_{} is not a bijection", w.map, w.index);
    }
    text
}

fn ybe(file: &Path, check: bool, out: Option<&Path>, exec: Exec) -> Result<Output, Failure> {
    #[derive(Serialize)]
    struct Report<'a> {
        report: &'a SolutionReport,
        solution: Option<&'a Solution>,
    }
    let s = if check {
        load_solution(file)?
    } else {
        solution_from_brace(&load_brace(file)?)
    };
    let report = validate_solution_with(&s, exec);
    let mut text = report_text(&report);
    if let Some(path) = out {
        save_solution(path, &s)?;
        let _ = writeln!(text, "wrote {}", path.display());
    }
    let emitted = (!check && out.is_none()).then_some(&s);
    let ok = report.is_valid();
    Ok(Output::new(
        text,
        Report {
            report: &report,
            solution: emitted,
        },
        ok,
    ))
}

fn orbits_cmd(file: &Path) -> Result<Output, Failure> {
    let s = load_solution_or_brace(file)?;
    let classes: Vec<Vec<usize>> = orbits(&s).iter().map(|o| o.members().to_vec()).collect();
    let mut text = format!("{} orbit(s)\n", classes.len());
    for c in &classes {
        let _ = writeln!(text, "{c:?}");
    }
    Ok(Output::new(text, serde_json::json!({ "orbits": classes }), true))
}

fn restrict(file: &Path, subset: &[usize], out: Option<&Path>, exec: Exec) -> Result<Output, Failure> {
    let s = load_solution_or_brace(file)?;
    let y = ElementSet::new(s.size(), subset.iter().copied()).map_err(|e| Failure::Usage(format!("--subset: {e}")))?;
    let r = restrict_solution(&s, &y).context("restriction failed")?;
    let report = validate_solution_with(&r, exec);
    let classes: Vec<Vec<usize>> = orbits(&r).iter().map(|o| o.members().to_vec()).collect();
    let mut text = report_text(&report);
    let _ = writeln!(text, "{} orbit(s) in the restriction: {classes:?}", classes.len());
    if let Some(path) = out {
        save_solution(path, &r)?;
        let _ = writeln!(text, "wrote {}", path.display());
    }
    let json = serde_json::json!({ "report": report, "orbits": classes, "solution": r });
    Ok(Output::new(text, json, report.is_valid()))
}

fn enumeration_cap() -> Result<usize, Failure> {
    match std::env::var(CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{CAP_VAR}={v:?} is not a number"))),
        Err(_) => Ok(DEFAULT_ENUMERATION_CAP),
    }
}

fn enumerate(order: usize, additive: Option<&Path>, out: Option<&Path>, exec: Exec) -> Result<Output, Failure> {
    let opts = EnumerationOptions {
        cap: enumeration_cap()?,
        exec,
    };
    let group = additive.map(load_group).transpose()?;
    let braces = enumerate_braces_with(order, group.as_ref(), &opts).map_err(|e| match e {
        braceforge::constructions::ConstructionError::CapExceeded { .. } => {
            Failure::Usage(format!("--order {order}: {e} (raise {CAP_VAR})"))
        }
        e => Failure::Check(e.into()),
    })?;

    #[derive(Serialize)]
    struct Entry {
        file: String,
        signature: BraceSignature,
    }
    #[derive(Serialize)]
    struct Manifest {
        order: usize,
        count: usize,
        braces: Vec<Entry>,
    }
    let manifest = Manifest {
        order,
        count: braces.len(),
        braces: braces
            .iter()
            .enumerate()
            .map(|(i, a)| Entry {
                file: format!("brace_{order}_{}.json", i + 1),
                signature: BraceSignature::of(a),
            })
            .collect(),
    };
    let mut text = String::new();
    for (entry, a) in manifest.braces.iter().zip(&braces) {
        let _ = writeln!(
            text,
            "{}  {}, socle {}, {}",
            entry.file,
            type_name(a),
            entry.signature.socle,
            if a.is_trivial() { "trivial" } else { "non-trivial" }
        );
    }
    let _ = writeln!(text, "{} brace(s) of order {order}", braces.len());
    if let Some(dir) = out {
        fs::create_dir_all(dir).with_context(|| format!("{}: cannot create directory", dir.display()))?;
        for (entry, a) in manifest.braces.iter().zip(&braces) {
            save_brace(&dir.join(&entry.file), a)?;
        }
        write_json(&dir.join("manifest.json"), &manifest)?;
        let _ = writeln!(text, "wrote {}", dir.display());
    }
    Ok(Output::new(text, manifest, true))
}

fn cocycle(file: &Path, out: Option<&Path>) -> Result<Output, Failure> {
    let datum = load_cocycle(file)?;
    let a = brace_from_cocycle(&datum).with_context(|| format!("{}", file.display()))?;
    let mut text = format!("skew left brace of order {}, {}\n", a.order(), type_name(&a));
    if let Some(path) = out {
        save_brace(path, &a)?;
        let _ = writeln!(text, "wrote {}", path.display());
    }
    Ok(Output::new(text, a.to_file(), true))
}

fn window(kind: WindowChoice, n: i64, exec: Exec) -> Result<Output, Failure> {
    if n < 0 {
        return Err(Failure::Usage(format!("--n {n}: the window size must be non-negative")));
    }
    let kind = match kind {
        WindowChoice::Rump => WindowKind::RumpCyclic,
        WindowChoice::Dihedral => WindowKind::DihedralZ,
    };
    let r = z_window_check_with(kind, n, exec);
    let mut text = format!(
        "{}: {} triples on [-{n}, {n}], {} failure(s)\n",
        r.kind, r.triples_checked, r.failure_count
    );
    for f in &r.failures {
        let _ = writeln!(text, "  fails at {f:?}");
    }
    let ok = r.passed();
    Ok(Output::new(text, r, ok))
}

/// `a..b` and `a..=b` are both inclusive; a single number is one order.
fn parse_orders(s: &str) -> Result<RangeInclusive<usize>, Failure> {
    let bad = || Failure::Usage(format!("--orders {s:?}: expected N, A..B or A..=B"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let range = match s.split_once("..") {
        Some((lo, hi)) => num(lo)?..=num(hi.strip_prefix('=').unwrap_or(hi))?,
        None => num(s)?..=num(s)?,
    };
    if range.is_empty() || *range.start() == 0 {
        return Err(bad());
    }
    Ok(range)
}

fn load_dir(dir: &Path) -> anyhow::Result<Vec<CorpusEntry>> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .with_context(|| format!("{}: cannot read directory", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    let mut corpus = Vec::new();
    for path in files {
        let value: serde_json::Value = read_json(&path)?;
        // Manifests and solution files live alongside braces.
        if value.get("circle").is_none() {
            continue;
        }
        corpus.push(CorpusEntry {
            label: path
                .file_stem()
                .map_or_else(String::new, |s| s.to_string_lossy().into_owned()),
            brace: load_brace(&path)?,
        });
    }
    if corpus.is_empty() {
        return Err(anyhow!("{}: no brace files", dir.display()));
    }
    Ok(corpus)
}

fn laws(orders: Option<&str>, dir: Option<&Path>, scan_questions: bool, exec: Exec) -> Result<Output, Failure> {
    if orders.is_none() && dir.is_none() {
        return Err(Failure::Usage("laws needs --orders or --dir".into()));
    }
    let mut corpus = Vec::new();
    let mut description = Vec::new();
    if let Some(s) = orders {
        let range = parse_orders(s)?;
        let opts = EnumerationOptions {
            cap: enumeration_cap()?,
            exec,
        };
        if *range.end() > opts.cap.min(braceforge::constructions::HARD_ENUMERATION_CAP) {
            return Err(Failure::Usage(format!(
                "--orders {s}: order {} exceeds the enumeration cap {} (raise {CAP_VAR})",
                range.end(),
                opts.cap
            )));
        }
        description.push(format!("enumerated orders {}..={}", range.start(), range.end()));
        corpus.extend(enumerated_corpus(range, &opts).map_err(anyhow::Error::from)?);
    }
    if let Some(d) = dir {
        description.push(format!("directory {}", d.display()));
        corpus.extend(load_dir(d)?);
    }
    let opts = LawOptions {
        exec,
        scan_questions,
        nil_cutoff: None,
    };
    let report = run_laws(&description.join(" + "), &corpus, &opts);
    let ok = report.all_passed;
    Ok(Output::new(laws_text(&report), &report, ok))
}

fn laws_text(r: &LawsReport) -> String {
    let mut text = format!("corpus: {} ({} braces)\n\n", r.corpus, r.brace_count);
    let _ = writeln!(text, "{:<44} {:>8} {:>8} {:>8}", "law", "checked", "failed", "vacuous");
    for law in &r.laws {
        let _ = writeln!(
            text,
            "{:<44} {:>8} {:>8} {:>8}",
            law.name, law.checked, law.failed, law.vacuous
        );
    }
    for law in r.laws.iter().filter(|l| l.failed > 0) {
        let _ = writeln!(text, "\nFAILED {}: {}", law.name, law.statement);
        for f in &law.failures {
            let _ = writeln!(text, "  {} at {:?}: {}", f.brace_label, f.triple, f.detail);
        }
    }
    if !r.observations.is_empty() {
        let _ = writeln!(text, "\nobservations (not asserted)");
        for o in &r.observations {
            let _ = writeln!(text, "  {:<42} holds {:>5}, fails {:>5}", o.name, o.holds, o.fails);
        }
    }
    if let Some(scan) = &r.question_scan {
        let _ = writeln!(
            text,
            "\nquestion scan: {} braces scanned, {} undetermined, {} candidate(s)",
            scan.scanned,
            scan.undetermined,
            scan.candidates.len()
        );
        for c in &scan.candidates {
            let _ = writeln!(text, "  [{}] {}: {}", c.question, c.brace_label, c.detail);
        }
        if let Some(c) = scan.candidates.first() {
            let _ = writeln!(text, "  note: {}", c.caveat);
        }
    }
    let failed = r.laws.iter().filter(|l| l.failed > 0).count();
    let _ = writeln!(
        text,
        "\n{}",
        if failed == 0 {
            "all laws passed".to_string()
        } else {
            format!("{failed} law(s) failed")
        }
    );
    text
}
