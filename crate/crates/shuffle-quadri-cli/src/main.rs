//! Command-line front end for the shuffle quadri-algebra.
//!
//! Subcommands:
//!
//! * `eval <EXPR>` — parse and evaluate an expression, print the normalized
//!   result;
//! * `check` — run the law catalog over an exhaustively enumerated universe
//!   of words, exiting nonzero if any law fails;
//! * `laws` — list the catalog;
//! * `example` — print both sides of the pinned worked example.
//!
//! Exit codes: 0 on success, 1 when a checked law fails, 2 on usage, parse,
//! or evaluation errors.

mod eval;
mod expr;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use shuffle_quadri::{
    run_suite, Alphabet, InstanceSpec, LawId, LawKind, QuadriAlgebra, UnitTable, UnitTableEntry,
    Value, MAX_ALPHABET,
};

#[derive(Parser)]
#[command(
    name = "shuffle-quadri",
    about = "Symbolic shuffle quadri-algebra calculator and law checker",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression and print the normalized result.
    Eval(EvalArgs),
    /// Check laws by exhaustive enumeration over a finite universe.
    Check(CheckArgs),
    /// List the law catalog.
    Laws,
    /// Print both sides of the pinned worked example.
    Example,
}

#[derive(Args)]
struct EvalArgs {
    /// The expression, e.g. "sh(ab, cd)" or "2*ab - ne(a,b)".
    expr: String,
    /// Letters of the alphabet (lowercase, distinct). Defaults to a–z.
    #[arg(long)]
    alphabet: Option<String>,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct CheckArgs {
    /// Check only the named law (repeatable). Defaults to the whole catalog.
    #[arg(long, conflicts_with = "all")]
    law: Vec<String>,
    /// Check the whole catalog (the default when no --law is given).
    #[arg(long)]
    all: bool,
    /// Number of letters in the enumeration alphabet.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=MAX_ALPHABET as i64))]
    alphabet_size: u8,
    /// Maximum summed length of the instantiated words.
    #[arg(long, default_value_t = 5)]
    max_len: usize,
    /// Worker threads for fanning out laws.
    #[arg(long)]
    jobs: Option<usize>,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Flip one unit-table entry (e.g. "se-left") before checking; a test
    /// fixture for validating that the checker catches broken tables.
    #[arg(long, hide = true)]
    corrupt_unit: Option<String>,
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Eval(args) => run_eval(&args),
        Command::Check(args) => run_check(&args),
        Command::Laws => run_laws(),
        Command::Example => run_example(),
    }
}

/// Usage, parse, and evaluation failures all exit with this code.
const EXIT_USAGE: u8 = 2;
/// A checked law failed.
const EXIT_LAW_FAILURE: u8 = 1;

fn run_eval(args: &EvalArgs) -> ExitCode {
    let alphabet = match &args.alphabet {
        None => Alphabet::latin(MAX_ALPHABET).expect("full alphabet is valid"),
        Some(text) => match Alphabet::from_chars(text) {
            Ok(alphabet) => alphabet,
            Err(error) => {
                eprintln!("error: {}: {error}", error.code());
                return ExitCode::from(EXIT_USAGE);
            }
        },
    };
    let expr = match expr::parse(&args.expr) {
        Ok(expr) => expr,
        Err(error) => {
            eprintln!("error: {error}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match eval::eval(&expr, &alphabet, &QuadriAlgebra::new()) {
        Ok(value) => {
            match args.format {
                Format::Text => println!("{}", value.display(&alphabet)),
                Format::Json => println!("{}", value.to_json(&alphabet)),
            }
            ExitCode::SUCCESS
        }
        Err(error) => {
            eprintln!("error: {}: {error}", error.code());
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run_check(args: &CheckArgs) -> ExitCode {
    let laws: Vec<LawId> = if args.law.is_empty() {
        LawId::all().collect()
    } else {
        let mut laws = Vec::new();
        for name in &args.law {
            match LawId::from_name(name) {
                Some(law) => laws.push(law),
                None => {
                    eprintln!("error: unknown law `{name}` (run `shuffle-quadri laws` to list them)");
                    return ExitCode::from(EXIT_USAGE);
                }
            }
        }
        laws
    };
    let alg = match &args.corrupt_unit {
        None => QuadriAlgebra::new(),
        Some(entry) => match entry.parse::<UnitTableEntry>() {
            Ok(entry) => QuadriAlgebra::with_unit_table(UnitTable::standard().with_flipped(entry)),
            Err(message) => {
                eprintln!("error: {message}");
                return ExitCode::from(EXIT_USAGE);
            }
        },
    };
    let jobs = args.jobs.unwrap_or_else(|| {
        std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
    });
    let reports = run_suite(&alg, args.alphabet_size as usize, args.max_len, &laws, jobs);
    let all_passed = reports.iter().all(|r| r.passed);
    match args.format {
        Format::Text => {
            for report in &reports {
                println!("{}", report.display_line());
            }
            let failed = reports.iter().filter(|r| !r.passed).count();
            println!(
                "{} laws checked, {} passed, {} failed (alphabet size {}, max total length {})",
                reports.len(),
                reports.len() - failed,
                failed,
                args.alphabet_size,
                args.max_len
            );
        }
        Format::Json => {
            let json: Vec<_> = reports.iter().map(|r| r.to_json()).collect();
            println!("{}", serde_json::Value::Array(json));
        }
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_LAW_FAILURE)
    }
}

fn run_laws() -> ExitCode {
    for law in LawId::all() {
        let def = law.def();
        let kind = match def.kind {
            LawKind::Identity => "identity",
            LawKind::CounterexampleSearch => "search",
            LawKind::WorkedExample => "example",
        };
        println!("{:<34} [{kind}, arity {}] {}", def.name, def.arity, def.statement);
    }
    ExitCode::SUCCESS
}

fn run_example() -> ExitCode {
    let alg = QuadriAlgebra::new();
    let law = LawId::from_name("worked_example").expect("catalog contains the worked example");
    let alphabet = Alphabet::latin(MAX_ALPHABET).expect("full alphabet is valid");
    let spec = InstanceSpec::for_law(law, 5, 5);
    let report = shuffle_quadri::check_law(&alg, law, &spec).expect("spec matches the law");
    println!("{}", law.def().statement);
    let ab = alphabet.word("ab").expect("letters in range");
    let cd = alphabet.word("cd").expect("letters in range");
    let e = alphabet.word("e").expect("letters in range");
    let sides = law.evaluate(&alg, &[ab, cd, e]).expect("pinned instance is in the domain");
    let show = |value: &Value| value.display(&alphabet);
    println!("  u ⧢ (v·w)                       = {}", show(&sides[0].0));
    println!("  Σ (u¹ ∨ v)·(u² ⧢ w)             = {}", show(&sides[0].1));
    println!("  Σ (u¹ ⧢ v)·(u² ≻ w)             = {}", show(&sides[1].1));
    println!("  interleaving enumeration oracle = {}", show(&sides[2].1));
    println!("  coefficient sum                 = {}", show(&sides[3].1));
    println!("{}", report.display_line());
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_LAW_FAILURE)
    }
}
