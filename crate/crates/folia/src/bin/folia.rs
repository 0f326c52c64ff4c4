use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use folia::dsl;
use folia::groebner::limits;
use folia::poly::MonomialOrder;
use folia::report::{render_text, run_analysis, Command, Options};

/// Singularity analysis of polynomial foliation forms: the singular,
/// persistent and Kupka ideals, integrability checks, tangent frames and
/// first-order unfoldings, all over exact rational arithmetic.
#[derive(Parser)]
#[command(name = "folia", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,

    /// Emit the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Include wall-clock timing in the report (off by default so that
    /// identical inputs give byte-identical reports).
    #[arg(long, global = true)]
    timing: bool,

    /// S-pair budget for Groebner computations.
    #[arg(long, global = true, value_name = "N")]
    max_spairs: Option<usize>,

    /// Graded bound for the truncation oracle (default: component degree + 3).
    #[arg(long, global = true, value_name = "N")]
    max_degree: Option<u32>,

    /// Monomial order for the ring of the input document.
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Degrevlex)]
    order: OrderArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Degrevlex,
    Lex,
}

#[derive(Subcommand)]
enum Cmd {
    /// Pluecker, integrability, descent and codimension checks.
    Check { file: PathBuf },
    /// The ideals J, I, K with dimensions and inclusion facts.
    Ideals { file: PathBuf },
    /// Ideals plus radical comparisons and the truncation-oracle cross-check.
    Compare { file: PathBuf },
    /// Tangent 1-form module, its relations and the decomposability defect.
    Decompose { file: PathBuf },
    /// Construct and verify a first-order unfolding when one exists.
    Unfold { file: PathBuf },
    /// Run the built-in corpus of worked examples.
    Corpus,
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    if let Ok(env) = std::env::var("FOLIA_LIMITS") {
        limits::apply_env(&env);
    }
    if let Some(n) = cli.max_spairs {
        limits::set_max_spairs(n);
    }

    let (command, file) = match &cli.cmd {
        Cmd::Check { file } => (Command::Check, file),
        Cmd::Ideals { file } => (Command::Ideals, file),
        Cmd::Compare { file } => (Command::Compare, file),
        Cmd::Decompose { file } => (Command::Decompose, file),
        Cmd::Unfold { file } => (Command::Unfold, file),
        Cmd::Corpus => return run_corpus(cli.json),
    };

    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {}", file.display(), e);
            return ExitCode::from(2);
        }
    };
    let order = match cli.order {
        OrderArg::Degrevlex => MonomialOrder::DegRevLex,
        OrderArg::Lex => MonomialOrder::Lex,
    };
    let doc = match dsl::parse_with_order(&text, order) {
        Ok(doc) => doc,
        Err(e) => {
            eprintln!("error: {}: {}", file.display(), e);
            return ExitCode::from(2);
        }
    };

    let options = Options { max_degree: cli.max_degree, timing: cli.timing };
    let (report, code) = run_analysis(&doc, command, &options);
    if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        );
    } else {
        print!("{}", render_text(&report));
    }
    ExitCode::from(code as u8)
}

fn run_corpus(json: bool) -> ExitCode {
    let outcomes = folia::corpus::run_corpus();
    let failed: Vec<&folia::corpus::CaseOutcome> =
        outcomes.iter().filter(|o| !o.passed).collect();
    if json {
        let rows: Vec<serde_json::Value> = outcomes
            .iter()
            .map(|o| {
                serde_json::json!({
                    "name": o.name,
                    "passed": o.passed,
                    "detail": o.detail,
                })
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&serde_json::json!({
                "version": env!("CARGO_PKG_VERSION"),
                "cases": rows,
                "failed": failed.len(),
            }))
            .expect("corpus report serializes")
        );
    } else {
        for o in &outcomes {
            println!(
                "{} {} - {}",
                if o.passed { "pass" } else { "FAIL" },
                o.name,
                o.detail
            );
        }
        println!("{} cases, {} failed", outcomes.len(), failed.len());
    }
    if let Some(first) = failed.first() {
        eprintln!("first failing case: {}", first.name);
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}
