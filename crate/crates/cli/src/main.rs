//! Batch front end: parses quantale/category/module JSON files, runs
//! distance computations and law suites, and emits text or JSON reports.
//!
//! Exit codes: 0 = success/pass, 1 = law violation or `--expect` mismatch,
//! 2 = input error (malformed file, unknown flag value, violated
//! precondition, or exceeded cap).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value as Json};

use vqcat::enriched::{classify, enumerate_vcategories, VCategory};
use vqcat::gromov::{
    check_gromov_laws, gromov, symmetrized_distance, GromovQuery, GromovSuite, GromovVariant,
    Strategy, Sublifting, DEFAULT_ENUM_CAP,
};
use vqcat::hausdorff::{
    check_hausdorff_laws, hausdorff_category, HausdorffSuite, HausdorffVariant,
};
use vqcat::json::{
    category_from_json, module_from_json, quantale_to_json, read_json_file, result_to_json,
    value_from_json,
};
use vqcat::presheaf::{check_presheaf_laws, PresheafSuite};
use vqcat::quantale::{check_quantale_laws, parse_cost, CheckMode, Cost, Quantale, Value};
use vqcat::vmodule::VModule;
use vqcat::{hausdorff::htilde, Error, LawReport, LawStatus, Result};

/// Toolkit for quantale-enriched categories: Hausdorff liftings, module
/// extensions, and Gromov distances.
#[derive(Parser)]
#[command(name = "vqcat", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Operations on the built-in quantales.
    Quantale {
        #[command(subcommand)]
        action: QuantaleAction,
    },
    /// Validates a category file and prints its classification flags.
    Check {
        /// Path to a category JSON file.
        #[arg(long)]
        category: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Prints Hausdorff-lifted structure values of a category.
    Hausdorff {
        /// Path to a category JSON file.
        #[arg(long)]
        category: PathBuf,
        /// Lifting variant.
        #[arg(long, value_enum, default_value = "plain")]
        variant: Variant,
        /// One subset pair `A;B` (comma-separated labels on each side, empty
        /// side for the empty subset). Without it the full table is printed.
        #[arg(long)]
        pairs: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluates the lifted value of a module between two subsets.
    Htilde {
        /// Path to a module JSON file.
        #[arg(long)]
        module: PathBuf,
        /// Comma-separated labels of the source subset (empty for ∅).
        #[arg(long, default_value = "")]
        a: String,
        /// Comma-separated labels of the target subset (empty for ∅).
        #[arg(long, default_value = "")]
        b: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Computes a Gromov distance between two category files.
    Gromov(GromovArgs),
    /// Runs a law suite and reports pass/fail/skip.
    Laws {
        /// Suite name: quantale, monad, kz, lax_naturality, monad_morphism,
        /// em, em_tilde, yoneda, presheaf_kz, adjunction, vcat_laws,
        /// iso_invariance, monotone_in_K, cor84, cor91, chaos, monoid,
        /// homomorphism.
        #[arg(long)]
        suite: String,
        /// Directory of category JSON files to use as the corpus
        /// (category-level suites only; defaults to a built-in corpus).
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Seed for sampled checks.
        #[arg(long, default_value = "7")]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum QuantaleAction {
    /// Lists the built-in quantales with their descriptors.
    List {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    Plain,
    Sym,
    Down,
}

#[derive(Args)]
struct GromovArgs {
    /// Path to the first category JSON file.
    #[arg(long)]
    x: PathBuf,
    /// Path to the second category JSON file.
    #[arg(long)]
    y: PathBuf,
    #[arg(long, value_enum, default_value = "plain")]
    variant: CliGromovVariant,
    /// Sublifting of the powerset functor.
    #[arg(long, value_enum, default_value = "h")]
    sublifting: CliSublifting,
    #[arg(long, value_enum, default_value = "enumerate")]
    strategy: CliStrategy,
    /// Compute the meet of the two directional distances.
    #[arg(long)]
    symmetrize: bool,
    /// Swap the two inputs before computing.
    #[arg(long)]
    swap: bool,
    /// Expected value literal; a mismatch exits with code 1.
    #[arg(long)]
    expect: Option<String>,
    /// Tolerance for `--expect` on the cost quantale (rational or decimal).
    /// Defaults to 0, or 1/1000000 for optimizer results.
    #[arg(long)]
    tol: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CliGromovVariant {
    Plain,
    SymPair,
    SymMod,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CliSublifting {
    H,
    HDown,
    HSym,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CliStrategy {
    Enumerate,
    Optimize,
    Gluing,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Enumeration cap, overridable through `VQCAT_MAX_ENUM`.
fn enum_cap() -> Result<u128> {
    match std::env::var("VQCAT_MAX_ENUM") {
        Ok(s) => s
            .parse::<u128>()
            .ok()
            .filter(|n| *n > 0)
            .ok_or_else(|| Error::Parse(format!("VQCAT_MAX_ENUM must be a positive integer, got `{s}`"))),
        Err(_) => Ok(DEFAULT_ENUM_CAP),
    }
}

fn load_category(path: &Path) -> Result<VCategory> {
    category_from_json(&read_json_file(&path.display().to_string())?)
}

fn load_module(path: &Path) -> Result<VModule> {
    let text = read_json_file(&path.display().to_string())?;
    let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
    let resolve = move |rel: &str| -> Result<VCategory> { load_category(&base.join(rel)) };
    module_from_json(&text, &resolve)
}

/// Resolves a comma-separated label list to a subset mask of a category.
fn mask_from_labels(cat: &VCategory, labels: &str) -> Result<u32> {
    let mut mask = 0u32;
    if labels.trim().is_empty() {
        return Ok(mask);
    }
    for l in labels.split(',') {
        mask |= 1 << cat.index(l.trim())?;
    }
    Ok(mask)
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Quantale { action } => {
            let QuantaleAction::List { format } = action;
            let builtins = [
                Quantale::Bool2,
                Quantale::Cost,
                Quantale::Lukasiewicz { levels: 4 },
                Quantale::ThreeChain,
            ];
            match format {
                Format::Json => {
                    let list: Vec<Json> = builtins.iter().map(quantale_to_json).collect();
                    println!("{}", serde_json::to_string_pretty(&Json::Array(list)).unwrap());
                }
                Format::Text => {
                    println!("bool2            two-element chain, tensor = meet");
                    println!("cost             extended non-negative reals ordered by >=, tensor = +");
                    println!("lukasiewicz(n)   chain 0, 1/n, ..., 1 with truncated addition (levels parameter)");
                    println!("three_chain      bot < k < top with idempotent tensor and unit k < top");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { category, format } => {
            let cat = load_category(&category)?;
            let flags = classify(&cat)?;
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "valid": true,
                        "quantale": quantale_to_json(cat.quantale()),
                        "elements": cat.carrier(),
                        "symmetric": flags.symmetric,
                        "separated": flags.separated,
                    }))
                    .unwrap()
                ),
                Format::Text => {
                    println!("valid category over {}", cat.quantale().name());
                    println!("elements: {}", cat.carrier().join(", "));
                    println!("symmetric: {}", flags.symmetric);
                    println!("separated: {}", flags.separated);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Hausdorff {
            category,
            variant,
            pairs,
            format,
        } => {
            let cat = load_category(&category)?;
            let variant = match variant {
                Variant::Plain => HausdorffVariant::Plain,
                Variant::Sym => HausdorffVariant::Sym,
                Variant::Down => HausdorffVariant::Down,
            };
            let lifted = hausdorff_category(&cat, variant)?;
            let q = *cat.quantale();
            if let Some(selection) = pairs {
                let (a, b) = selection.split_once(';').ok_or_else(|| {
                    Error::Parse("--pairs takes `A;B` with comma-separated labels per side".into())
                })?;
                let am = lifted.mask_from_labels(a)?;
                let bm = lifted.mask_from_labels(b)?;
                let v = lifted.h_masks(am, bm)?;
                match format {
                    Format::Json => println!(
                        "{}",
                        json!({"value": vqcat::json::value_to_json(&q, v)})
                    ),
                    Format::Text => println!("{}", q.format_value(v)),
                }
            } else {
                match format {
                    Format::Json => {
                        let mut rows = Vec::new();
                        for i in 0..lifted.len() {
                            let mut row = Vec::new();
                            for j in 0..lifted.len() {
                                row.push(vqcat::json::value_to_json(&q, lifted.h(i, j)?));
                            }
                            rows.push(Json::Array(row));
                        }
                        println!(
                            "{}",
                            serde_json::to_string_pretty(&json!({
                                "subsets": (0..lifted.len()).map(|i| lifted.label(i)).collect::<Vec<_>>(),
                                "structure": rows,
                            }))
                            .unwrap()
                        );
                    }
                    Format::Text => {
                        for i in 0..lifted.len() {
                            for j in 0..lifted.len() {
                                println!(
                                    "h({}, {}) = {}",
                                    lifted.label(i),
                                    lifted.label(j),
                                    q.format_value(lifted.h(i, j)?)
                                );
                            }
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Htilde {
            module,
            a,
            b,
            format,
        } => {
            let phi = load_module(&module)?;
            let am = mask_from_labels(phi.source(), &a)?;
            let bm = mask_from_labels(phi.target(), &b)?;
            let v = htilde(&phi, am, bm)?;
            let q = phi.quantale();
            match format {
                Format::Json => println!("{}", json!({"value": vqcat::json::value_to_json(q, v)})),
                Format::Text => println!("{}", q.format_value(v)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gromov(args) => run_gromov(args),
        Command::Laws {
            suite,
            corpus,
            seed,
            format,
        } => run_laws(&suite, corpus.as_deref(), seed, format),
    }
}

fn run_gromov(args: GromovArgs) -> Result<ExitCode> {
    let (mut x, mut y) = (load_category(&args.x)?, load_category(&args.y)?);
    if args.swap {
        std::mem::swap(&mut x, &mut y);
    }
    let variant = match args.variant {
        CliGromovVariant::Plain => GromovVariant::Plain,
        CliGromovVariant::SymPair => GromovVariant::SymPair,
        CliGromovVariant::SymMod => GromovVariant::SymMod,
    };
    let sublifting = match args.sublifting {
        CliSublifting::H => Sublifting::H,
        CliSublifting::HDown => Sublifting::HDown,
        CliSublifting::HSym => Sublifting::HSym,
    };
    let strategy = match args.strategy {
        CliStrategy::Enumerate => Strategy::Enumerate,
        CliStrategy::Optimize => Strategy::Optimize,
        CliStrategy::Gluing => Strategy::Gluing,
    };
    let q = *x.quantale();
    let cap = enum_cap()?;
    let (value, result_json) = if args.symmetrize {
        let v = symmetrized_distance(&x, &y, variant, sublifting, strategy)?;
        (v, json!({"value": vqcat::json::value_to_json(&q, v)}))
    } else {
        let r = gromov(&GromovQuery {
            x: x.clone(),
            y: y.clone(),
            variant,
            sublifting,
            strategy,
            cap,
        })?;
        let j = result_to_json(&q, &r);
        (r.value, j)
    };
    match args.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&result_json).unwrap()),
        Format::Text => println!("{}", q.format_value(value)),
    }
    if let Some(expect) = &args.expect {
        let expected = parse_value_literal(&q, expect)?;
        let tol = match &args.tol {
            Some(t) => Some(parse_cost(t)?),
            None if q == Quantale::Cost && strategy == Strategy::Optimize => {
                Some(Cost::ratio(1, 1_000_000))
            }
            None => None,
        };
        if !values_match(&q, value, expected, tol) {
            eprintln!(
                "expectation failed: computed {}, expected {}",
                q.format_value(value),
                q.format_value(expected)
            );
            return Ok(ExitCode::from(1));
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Parses a value literal given on the command line.
fn parse_value_literal(q: &Quantale, text: &str) -> Result<Value> {
    let literal = match q {
        Quantale::Bool2 => Json::Bool(text.trim().parse::<bool>().map_err(|_| {
            Error::Parse(format!("expected true/false, got `{text}`"))
        })?),
        _ => Json::String(text.into()),
    };
    value_from_json(q, &literal)
}

/// Equality up to an optional symmetric tolerance (cost quantale only).
fn values_match(q: &Quantale, got: Value, want: Value, tol: Option<Cost>) -> bool {
    match (q, got, want, tol) {
        (Quantale::Cost, Value::Cost(g), Value::Cost(w), Some(t)) => {
            let diff = if g.real_leq(w) {
                w.truncated_sub(g)
            } else {
                g.truncated_sub(w)
            };
            match (g, w) {
                (Cost::Infinite, Cost::Infinite) => true,
                (Cost::Infinite, _) | (_, Cost::Infinite) => false,
                _ => diff.real_leq(t),
            }
        }
        _ => got == want,
    }
}

/// The built-in corpus for category-level suites: every category with at
/// most `max` elements over the given quantale.
fn builtin_corpus(q: &Quantale, max: usize) -> Result<Vec<VCategory>> {
    let mut out = Vec::new();
    for size in 0..=max {
        out.extend(enumerate_vcategories(q, size)?);
    }
    Ok(out)
}

fn corpus_from_dir(dir: &Path) -> Result<Vec<VCategory>> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|source| Error::Io {
            path: dir.display().to_string(),
            source,
        })?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    let mut cats = Vec::new();
    for p in paths {
        let parsed = read_json_file(&p.display().to_string())?;
        // directories may also hold module files; only category objects count
        if parsed.get("elements").is_some() {
            cats.push(category_from_json(&parsed)?);
        }
    }
    Ok(cats)
}

fn run_laws(suite: &str, corpus: Option<&Path>, seed: u64, format: Format) -> Result<ExitCode> {
    let reports = collect_reports(suite, corpus, seed)?;
    let mut failed = false;
    match format {
        Format::Json => {
            let list: Vec<Json> = reports.iter().map(LawReport::to_json).collect();
            println!("{}", serde_json::to_string_pretty(&Json::Array(list)).unwrap());
        }
        Format::Text => {
            for r in &reports {
                println!("{r}");
            }
        }
    }
    for r in &reports {
        if matches!(r.status, LawStatus::Fail(_)) {
            failed = true;
        }
    }
    Ok(if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn collect_reports(suite: &str, corpus: Option<&Path>, seed: u64) -> Result<Vec<LawReport>> {
    if suite == "quantale" {
        let mut out = Vec::new();
        for q in [
            Quantale::Bool2,
            Quantale::ThreeChain,
            Quantale::Lukasiewicz { levels: 4 },
        ] {
            out.push(check_quantale_laws(&q, CheckMode::Exhaustive)?);
        }
        out.push(check_quantale_laws(
            &Quantale::Cost,
            CheckMode::Sampled { seed, n: 1000 },
        )?);
        return Ok(out);
    }
    if let Ok(hs) = HausdorffSuite::parse(suite) {
        let cats = category_corpus(corpus)?;
        let per_cat: Vec<LawReport> = cats
            .iter()
            .map(|c| check_hausdorff_laws(c, hs))
            .collect::<Result<_>>()?;
        return Ok(vec![merge_reports(per_cat)]);
    }
    let presheaf_name = suite.strip_prefix("presheaf_").unwrap_or(suite);
    if let Ok(ps) = PresheafSuite::parse(presheaf_name) {
        let cats = category_corpus(corpus)?;
        let per_cat: Vec<LawReport> = cats
            .iter()
            .map(|c| check_presheaf_laws(c, ps))
            .collect::<Result<_>>()?;
        return Ok(vec![merge_reports(per_cat)]);
    }
    if let Ok(gs) = GromovSuite::parse(suite) {
        let mut out = vec![check_gromov_laws(&Quantale::Bool2, gs, seed)?];
        if matches!(gs, GromovSuite::Monoid | GromovSuite::Homomorphism) {
            out.push(check_gromov_laws(&Quantale::Cost, gs, seed)?);
            out.push(check_gromov_laws(&Quantale::ThreeChain, gs, seed)?);
        }
        return Ok(out);
    }
    Err(Error::Parse(format!("unknown law suite `{suite}`")))
}

/// Folds per-category reports of one suite into a single report: the first
/// failure wins, `checked` counts accumulate, and notes are concatenated.
fn merge_reports(reports: Vec<LawReport>) -> LawReport {
    let suite = reports
        .first()
        .map(|r| r.suite.clone())
        .unwrap_or_else(|| "empty corpus".into());
    let mut merged = LawReport::pass(suite, 0);
    for r in reports {
        merged.checked += r.checked;
        for n in r.notes {
            merged.note(n);
        }
        if matches!(merged.status, LawStatus::Pass) && !matches!(r.status, LawStatus::Pass) {
            merged.status = r.status;
        }
    }
    merged
}

fn category_corpus(corpus: Option<&Path>) -> Result<Vec<VCategory>> {
    match corpus {
        Some(dir) => {
            let cats = corpus_from_dir(dir)?;
            if cats.is_empty() {
                return Err(Error::Precondition(format!(
                    "corpus directory {} holds no category files",
                    dir.display()
                )));
            }
            Ok(cats)
        }
        None => {
            let mut cats = builtin_corpus(&Quantale::Bool2, 2)?;
            cats.extend(builtin_corpus(&Quantale::Lukasiewicz { levels: 2 }, 2)?);
            Ok(cats)
        }
    }
}
