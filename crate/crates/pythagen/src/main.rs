//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage/input error,
//! 3 a pair that generates no integer triple.

use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand};
use num::BigUint;

use pythagen::oracle::{sweep_verify_with_jobs, CHECK_NAMES};
use pythagen::pairs::{analyze, triple_from_pair, GeneratorPair};
use pythagen::report;
use pythagen::text;
use pythagen::triple::{enumerate, PythTriple};
use pythagen::Error;

#[derive(Parser)]
#[command(
    name = "pythagen",
    about = "Exact generator-pair analysis of Pythagorean triples",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one triple: generator pairs, classifications, identities
    Analyze {
        /// Sides of the triple, in any order
        a: String,
        b: String,
        c: String,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a generator pair back to its triple
    Pair {
        /// First member, e.g. "1" or "1/2*sqrt(2)"
        x: String,
        /// Second member
        y: String,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate all triples with hypotenuse up to a bound
    Generate {
        #[arg(long = "max-c")]
        max_c: u64,
        #[arg(long)]
        primitive_only: bool,
        #[arg(long)]
        json: bool,
    },
    /// Verify every identity on every triple up to a bound
    Sweep {
        #[arg(long = "max-c")]
        max_c: u64,
        /// Worker threads; the output is the same for any value
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        json: bool,
    },
}

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NON_INTEGER: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze { a, b, c, json } => run_analyze(&a, &b, &c, json),
        Command::Pair { x, y, json } => run_pair(&x, &y, json),
        Command::Generate {
            max_c,
            primitive_only,
            json,
        } => run_generate(max_c, primitive_only, json),
        Command::Sweep { max_c, jobs, json } => run_sweep(max_c, jobs, json),
    }
}

fn parse_side(s: &str) -> Result<BigUint, String> {
    BigUint::from_str(s).map_err(|_| format!("invalid side {s:?}: expected a positive integer"))
}

fn run_analyze(a: &str, b: &str, c: &str, json: bool) -> ExitCode {
    let sides: Result<Vec<BigUint>, String> = [a, b, c].iter().map(|s| parse_side(s)).collect();
    let sides = match sides {
        Ok(s) => s,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let [a, b, c] = <[BigUint; 3]>::try_from(sides).unwrap();
    let triple = match PythTriple::from_sides_any_order(a, b, c) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let report = analyze(&triple);
    if json {
        println!("{}", report::analysis_json(&report));
    } else {
        print_analysis(&report);
    }
    ExitCode::SUCCESS
}

fn print_analysis(r: &pythagen::pairs::AnalysisReport) {
    println!("triple: {}", r.triple);
    println!(
        "beta: {}  primitive part: {} {} {}",
        r.decomposition.beta, r.decomposition.m, r.decomposition.n, r.decomposition.k
    );
    for (pair, kind) in &r.pairs {
        let leg = pair.source_leg().expect("leg pair");
        println!(
            "pair from leg {leg}: x = {}, y = {}  ({})",
            pair.x(),
            pair.y(),
            kind.as_str()
        );
    }
    if let Some((pair3, pair4)) = &r.scaled {
        println!(
            "scaled pair 3: x = {}, y = {}  ({})",
            pair3.x(),
            pair3.y(),
            pair3.classify().as_str()
        );
        println!(
            "scaled pair 4: x = {}, y = {}  ({})",
            pair4.x(),
            pair4.y(),
            pair4.classify().as_str()
        );
    }
    println!("identities:");
    for (name, ok) in r.identities.checks() {
        println!("  {name}: {ok}");
    }
}

fn run_pair(x: &str, y: &str, json: bool) -> ExitCode {
    let parse = |s: &str| -> Result<_, Error> { text::parse_value(s) };
    let (x, y) = match (parse(x), parse(y)) {
        (Ok(x), Ok(y)) => (x, y),
        (Err(e), _) | (_, Err(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let pair = match GeneratorPair::new(x, y) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match triple_from_pair(&pair) {
        Ok(t) => {
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "a": t.leg_a().to_string(),
                        "b": t.leg_b().to_string(),
                        "c": t.hyp().to_string(),
                    })
                );
            } else {
                println!("{t}");
            }
            ExitCode::SUCCESS
        }
        Err(e @ Error::NonIntegerSide(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_NON_INTEGER)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run_generate(max_c: u64, primitive_only: bool, json: bool) -> ExitCode {
    if max_c < 5 {
        eprintln!("error: --max-c must be at least 5");
        return ExitCode::from(EXIT_USAGE);
    }
    for t in enumerate(max_c, primitive_only) {
        let r = analyze(&t);
        let kinds = [r.pairs[0].1, r.pairs[1].1];
        if json {
            println!("{}", report::generate_line_json(&t, kinds));
        } else {
            println!("{t} {} {}", kinds[0].as_str(), kinds[1].as_str());
        }
    }
    ExitCode::SUCCESS
}

fn run_sweep(max_c: u64, jobs: usize, json: bool) -> ExitCode {
    if max_c < 5 {
        eprintln!("error: --max-c must be at least 5");
        return ExitCode::from(EXIT_USAGE);
    }
    if jobs < 1 {
        eprintln!("error: --jobs must be at least 1");
        return ExitCode::from(EXIT_USAGE);
    }
    let start = Instant::now();
    let summary = sweep_verify_with_jobs(max_c, jobs);
    // elapsed goes to stderr so stdout is identical for any --jobs
    eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    if json {
        println!("{}", report::sweep_json(&summary));
    } else {
        println!("triples: {}", summary.triples);
        for name in CHECK_NAMES {
            println!("{name}: {}/{}", summary.passed(name), summary.triples);
        }
        println!("violations: {}", summary.violations.len());
        for v in &summary.violations {
            println!(
                "violation: triple {} check {} expected {} actual {}",
                v.triple, v.check, v.expected, v.actual
            );
        }
    }
    if summary.is_clean() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VIOLATION)
    }
}
