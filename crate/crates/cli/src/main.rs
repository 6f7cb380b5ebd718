mod cache;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use cache::Cache;
use ringlab::expr::{CorpusFile, RingExpr};
use ringlab::harness::{
    default_corpus, run_rules, search_counterexample, AnalysisReport, Corpus, Literal,
    RuleStatus, SearchOutcome,
};
use ringlab::invariants::{
    all_left_ideals, all_right_ideals, all_two_sided_ideals, IdealLattice, RadicalReport,
    DEFAULT_LATTICE_CAP,
};
use ringlab::properties::{Property, PropertyVerdict, Witness};
use ringlab::{set_max_order, Error, FiniteRing, Result, SubsetMask};

/// Analyze finite rings given as construction expressions.
#[derive(Parser)]
#[command(name = "ringlab", version)]
struct Cli {
    /// Print machine-readable JSON instead of tables.
    #[arg(long, global = true)]
    json: bool,
    /// Largest ring order any construction may produce.
    #[arg(long, global = true, value_name = "N")]
    max_order: Option<usize>,
    /// Directory for cached analysis reports.
    #[arg(long, global = true, env = "RINGLAB_CACHE", value_name = "DIR")]
    cache: Option<PathBuf>,
    /// Worker threads for the scans (default: available parallelism).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    /// Ignore the cache even when a directory is configured.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Radicals, element sets and every ring-class predicate.
    Analyze { expr: String },
    /// One predicate: exit 0 if it holds, 1 if it fails.
    Prop { name: String, expr: String },
    /// Units, nilpotents, idempotents, center, J and the nilradicals.
    Radical { expr: String },
    /// Check the rule catalog over a corpus; exit 0 iff nothing fails.
    Verify {
        /// Corpus file: one expression per line (default: built-in corpus).
        #[arg(long, value_name = "FILE")]
        corpus: Option<PathBuf>,
        /// Comma-separated rule ids, e.g. R1,R24 (default: all).
        #[arg(long, value_name = "LIST", value_delimiter = ',')]
        rules: Vec<String>,
    },
    /// First corpus ring satisfying the hypotheses on which a property fails.
    Search {
        /// Comma-separated properties that must hold (`!p` must fail).
        #[arg(long, value_name = "P1,P2", value_delimiter = ',')]
        hyp: Vec<String>,
        /// Property that must fail.
        #[arg(long = "not", value_name = "Q")]
        target: String,
        /// Append seeded random compositions to the corpus.
        #[arg(long)]
        seed: Option<u64>,
        /// Examine at most this many rings.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Left, right and two-sided ideal lattices.
    Ideals {
        expr: String,
        /// Stop enumerating after this many ideals.
        #[arg(long, default_value_t = DEFAULT_LATTICE_CAP)]
        cap: usize,
    },
}

/// Random entries appended by `search --seed`.
const SEARCH_RANDOM_COUNT: usize = 64;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.max_order {
        set_max_order(n);
    }
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let cache = match (&cli.cache, cli.no_cache) {
        (Some(dir), false) => Cache::new(Some(dir.clone())),
        _ => Cache::disabled(),
    };
    match run(&cli, &cache) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn build(src: &str) -> Result<FiniteRing> {
    Ok(RingExpr::parse(src)?.eval(Path::new("."))?.ring)
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("output serializes"));
}

fn run(cli: &Cli, cache: &Cache) -> Result<u8> {
    match &cli.command {
        Command::Analyze { expr } => analyze(cli, cache, expr),
        Command::Prop { name, expr } => prop(cli, cache, name, expr),
        Command::Radical { expr } => radical(cli, expr),
        Command::Verify { corpus, rules } => verify(cli, corpus.as_deref(), rules),
        Command::Search { hyp, target, seed, budget } => search(cli, hyp, target, *seed, *budget),
        Command::Ideals { expr, cap } => ideals(cli, expr, *cap),
    }
}

fn element(ring: &FiniteRing, x: usize) -> String {
    let label = ring.label(x);
    if label == x.to_string() {
        label
    } else {
        format!("{x} {label}")
    }
}

fn show_witness(ring: &FiniteRing, w: &Witness) -> String {
    let mut parts: Vec<String> = w
        .elements
        .iter()
        .map(|(role, x)| format!("{role}={}", element(ring, *x)))
        .collect();
    if let Some(ideal) = &w.ideal {
        parts.push(format!("ideal {ideal:?}"));
    }
    parts.join(", ")
}

fn show_mask(m: &SubsetMask) -> String {
    format!("{:?}", m.to_vec())
}

fn radical_lines(r: &RadicalReport) -> String {
    let nil = |m: &Option<SubsetMask>| m.as_ref().map_or("(lattice truncated)".to_string(), show_mask);
    format!(
        "units        {}\nnilpotents   {}\nidempotents  {}\ncenter       {}\nJ            {}\nN_* (lower)  {}\nN^* (upper)  {}\n",
        show_mask(&r.units),
        show_mask(&r.nilpotents),
        show_mask(&r.idempotents),
        show_mask(&r.center),
        show_mask(&r.jacobson),
        nil(&r.lower_nil),
        nil(&r.upper_nil),
    )
}

fn verdict_line(ring: &FiniteRing, v: &PropertyVerdict) -> String {
    match &v.witness {
        None => format!("{:<18} yes", v.property),
        Some(w) => format!("{:<18} no   {}", v.property, show_witness(ring, w)),
    }
}

fn analyze(cli: &Cli, cache: &Cache, expr: &str) -> Result<u8> {
    let ring = build(expr)?;
    let report: AnalysisReport = cache.analysis(&ring, DEFAULT_LATTICE_CAP)?;
    if cli.json {
        println!("{}", report.to_json());
    } else {
        println!("{}  order {}  fingerprint {}", report.name, report.order, report.fingerprint);
        print!("{}", radical_lines(&report.radical));
        println!();
        for v in &report.verdicts {
            println!("{}", verdict_line(&ring, v));
        }
        for u in &report.undecided {
            println!("{:<18} ?    {}", u.property, u.reason);
        }
    }
    if let Some(u) = report.undecided.first() {
        eprintln!("error: {} undecided: {}", u.property, u.reason);
        return Ok(2);
    }
    Ok(0)
}

fn prop(cli: &Cli, cache: &Cache, name: &str, expr: &str) -> Result<u8> {
    let p: Property = name.parse()?;
    let ring = build(expr)?;
    let verdict = match cache.cached(&ring, DEFAULT_LATTICE_CAP).and_then(|r| r.verdict(p).cloned()) {
        Some(v) => v,
        None => p.check(&ring)?,
    };
    if cli.json {
        print_json(&verdict);
    } else {
        match &verdict.witness {
            None => println!("{p} holds on {}", ring.name()),
            Some(w) => println!("{p} fails on {}: {}", ring.name(), show_witness(&ring, w)),
        }
    }
    Ok(if verdict.holds { 0 } else { 1 })
}

fn radical(cli: &Cli, expr: &str) -> Result<u8> {
    let ring = build(expr)?;
    let report = ringlab::invariants::radical_report(&ring, DEFAULT_LATTICE_CAP);
    if cli.json {
        println!("{}", report.to_json());
    } else {
        println!("{}  order {}", ring.name(), ring.order());
        print!("{}", radical_lines(&report));
    }
    if report.lower_nil.is_none() {
        eprintln!("error: {}", Error::LatticeTruncated { cap: DEFAULT_LATTICE_CAP });
        return Ok(2);
    }
    Ok(0)
}

fn verify(cli: &Cli, corpus_file: Option<&Path>, rules: &[String]) -> Result<u8> {
    let corpus = match corpus_file {
        None => default_corpus(),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            let dir = path.parent().unwrap_or(Path::new("."));
            Corpus::from_file(&CorpusFile::parse(&text)?, dir)
        }
    };
    let report = run_rules(&corpus, rules)?;
    if cli.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.table());
    }
    if let Some((rule, outcome)) = report.failures().next() {
        // Every failure is a bug in the library, so dump what is needed to
        // reproduce it.
        eprintln!("rule {} failed on {}", rule.id, outcome.ring);
        if let RuleStatus::Fail { witness, detail } = &outcome.status {
            eprintln!("detail: {detail}");
            if let Some(w) = witness {
                eprintln!("witness: {w}");
            }
        }
        if let Some(e) = corpus.entries.iter().find(|e| e.name == outcome.ring) {
            eprintln!("{}", e.ring.to_text());
        }
        return Ok(1);
    }
    Ok(0)
}

#[derive(Serialize)]
#[serde(tag = "outcome", rename_all = "lowercase")]
enum SearchJson<'a> {
    Found {
        format: &'static str,
        hypotheses: Vec<String>,
        target: String,
        ring: &'a str,
        order: usize,
        fingerprint: String,
        verdicts: &'a [PropertyVerdict],
    },
    Exhausted {
        format: &'static str,
        hypotheses: Vec<String>,
        target: String,
        examined: usize,
    },
}

fn search(cli: &Cli, hyp: &[String], target: &str, seed: Option<u64>, budget: Option<usize>) -> Result<u8> {
    let hypotheses: Vec<Literal> = hyp.iter().map(|h| h.parse()).collect::<Result<_>>()?;
    let target: Property = target.parse()?;
    let mut corpus = default_corpus();
    if let Some(seed) = seed {
        corpus.extend_random(seed, SEARCH_RANDOM_COUNT);
    }
    let outcome =
        search_counterexample(&hypotheses, target, &corpus.entries, budget.unwrap_or(usize::MAX));
    let hyp_names: Vec<String> = hypotheses.iter().map(ToString::to_string).collect();
    let format = "search v1";
    match &outcome {
        SearchOutcome::Found { name, ring, verdicts } => {
            if cli.json {
                print_json(&SearchJson::Found {
                    format,
                    hypotheses: hyp_names,
                    target: target.to_string(),
                    ring: name,
                    order: ring.order(),
                    fingerprint: ring.fingerprint().to_string(),
                    verdicts,
                });
            } else {
                println!("found {name} (order {})", ring.order());
                for v in verdicts {
                    println!("{}", verdict_line(ring, v));
                }
            }
            Ok(0)
        }
        SearchOutcome::Exhausted { examined } => {
            if cli.json {
                print_json(&SearchJson::Exhausted {
                    format,
                    hypotheses: hyp_names,
                    target: target.to_string(),
                    examined: *examined,
                });
            } else {
                println!("exhausted({examined}): no ring found");
            }
            Ok(1)
        }
    }
}

#[derive(Serialize)]
struct LatticeJson {
    truncated: bool,
    count: usize,
    ideals: Vec<Vec<usize>>,
    maximal: Option<Vec<Vec<usize>>>,
}

impl LatticeJson {
    fn of(l: &IdealLattice, cap: usize) -> Self {
        Self {
            truncated: l.truncated,
            count: l.len(),
            ideals: l.ideals.iter().map(SubsetMask::to_vec).collect(),
            maximal: l
                .maximal(cap)
                .ok()
                .map(|m| m.iter().map(SubsetMask::to_vec).collect()),
        }
    }
}

#[derive(Serialize)]
struct IdealsJson {
    format: &'static str,
    ring: String,
    order: usize,
    cap: usize,
    left: LatticeJson,
    right: LatticeJson,
    two_sided: LatticeJson,
}

fn ideals(cli: &Cli, expr: &str, cap: usize) -> Result<u8> {
    let ring = build(expr)?;
    let out = IdealsJson {
        format: "ideals v1",
        ring: ring.name().to_string(),
        order: ring.order(),
        cap,
        left: LatticeJson::of(&all_left_ideals(&ring, cap), cap),
        right: LatticeJson::of(&all_right_ideals(&ring, cap), cap),
        two_sided: LatticeJson::of(&all_two_sided_ideals(&ring, cap), cap),
    };
    if cli.json {
        print_json(&out);
    } else {
        println!("{}  order {}", out.ring, out.order);
        for (kind, l) in [("left", &out.left), ("right", &out.right), ("two-sided", &out.two_sided)] {
            let more = if l.truncated { "+ (truncated)" } else { "" };
            println!("\n{kind} ideals: {}{more}", l.count);
            for i in &l.ideals {
                let mark = match &l.maximal {
                    Some(m) if m.contains(i) => "  maximal",
                    _ => "",
                };
                println!("  {i:?}{mark}");
            }
        }
    }
    let truncated = out.left.truncated || out.right.truncated || out.two_sided.truncated;
    if truncated {
        eprintln!("error: {}", Error::LatticeTruncated { cap });
        return Ok(2);
    }
    Ok(0)
}
