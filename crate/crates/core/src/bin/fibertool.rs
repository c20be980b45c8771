//! Command-line front end: parse an instance file, run one analysis command,
//! and emit a deterministic JSON or text report.
//!
//! Exit codes: 0 success, 2 parse/usage error, 3 undecided (with advice),
//! 4 refuted verdict, 1 other engine failure.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fibertool::error::Error;
use fibertool::parse::{parse_instance, Instance};
use fibertool::report::{
    render_text, run_check, run_fiber, run_invariants, run_reduction, run_superficial, run_tor,
    Report,
};
use fibertool::verdict::Params;

#[derive(Parser)]
#[command(name = "fibertool", version, about = "graded blow-up algebra analyzer")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ring and module invariants: dimension, depth, Betti table, Hilbert function
    Invariants(RunArgs),
    /// Tor-length sequence and its eventual polynomial
    Tor(RunArgs),
    /// Fiber cone F(I) and fiber module F_I(M)
    Fiber(RunArgs),
    /// Randomized minimal-reduction search with membership certificates
    Reduction(RunArgs),
    /// Superficial-element search with Valabrega-Valla verification
    Superficial(RunArgs),
    /// Full hypothesis report and all statement verdicts
    Check(RunArgs),
    /// Run the built-in golden corpus; nonzero exit on any refuted verdict
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Instance file (the small algebra DSL)
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    cutoff: Option<u32>,
    #[arg(long)]
    nmax: Option<u32>,
    #[arg(long)]
    window: Option<usize>,
    #[arg(long)]
    trials: Option<u32>,
    #[arg(long)]
    mmax: Option<u32>,
    #[arg(long)]
    retries: Option<u32>,
    #[arg(long)]
    cmax: Option<u32>,
    /// RNG seed; required for `check` (or via FIBERTOOL_SEED)
    #[arg(long)]
    seed: Option<u64>,
    /// Output format: text or json
    #[arg(long, default_value = "text")]
    format: String,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SelftestArgs {
    #[arg(long, default_value = "text")]
    format: String,
}

const GOLDEN: &[(&str, &str)] = &[
    ("ex5", include_str!("../../instances/ex5.alg")),
    ("lemma21", include_str!("../../instances/lemma21.alg")),
    ("a1", include_str!("../../instances/a1.alg")),
    ("free", include_str!("../../instances/free.alg")),
];

fn resolve_params(args: &RunArgs, inst: &Instance, seed_required: bool) -> Result<Params, String> {
    let mut p = Params::default().with_file_params(&inst.params);
    if let Some(v) = args.cutoff {
        p.cutoff = v;
    }
    if let Some(v) = args.nmax {
        p.nmax = v;
    }
    if let Some(v) = args.window {
        p.window = v;
    }
    if let Some(v) = args.trials {
        p.trials = v;
    }
    if let Some(v) = args.mmax {
        p.mmax = v;
    }
    if let Some(v) = args.retries {
        p.retries = v;
    }
    if let Some(v) = args.cmax {
        p.cmax = v;
    }
    let env_seed = std::env::var("FIBERTOOL_SEED")
        .ok()
        .and_then(|s| s.parse::<u64>().ok());
    match args.seed.or(inst.params.get("seed").map(|&s| s as u64)).or(env_seed) {
        Some(s) => p.seed = s,
        None if seed_required => {
            return Err("check requires --seed (or FIBERTOOL_SEED, or a seed param)".into())
        }
        None => {}
    }
    Ok(p)
}

fn emit(report: &Report, format: &str, out: &Option<PathBuf>) -> Result<(), Error> {
    let body = if format == "json" {
        let mut s = serde_json::to_string_pretty(report).expect("report serializes");
        s.push('\n');
        s
    } else {
        render_text(report)
    };
    match out {
        Some(path) => std::fs::write(path, body)?,
        None => print!("{body}"),
    }
    Ok(())
}

fn run_command(args: &RunArgs, which: &str) -> ExitCode {
    let text = match std::fs::read_to_string(&args.input) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", args.input.display());
            return ExitCode::from(2);
        }
    };
    let inst = match parse_instance(&text) {
        Ok(i) => i,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let params = match resolve_params(args, &inst, which == "check") {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let result = match which {
        "invariants" => run_invariants(&inst, &params),
        "tor" => run_tor(&inst, &params),
        "fiber" => run_fiber(&inst, &params),
        "reduction" => run_reduction(&inst, &params),
        "superficial" => run_superficial(&inst, &params),
        "check" => run_check(&inst, &params),
        _ => unreachable!(),
    };
    match result {
        Ok(report) => {
            if let Err(e) = emit(&report, &args.format, &args.out) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(Error::Parse { line, col, msg }) => {
            eprintln!("error: parse error at {line}:{col}: {msg}");
            ExitCode::from(2)
        }
        Err(e @ (Error::NotStabilized { .. } | Error::UndecidedWithinBound { .. })) => {
            eprintln!("undecided: {e}");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn selftest(args: &SelftestArgs) -> ExitCode {
    let mut worst = 0i32;
    for (name, text) in GOLDEN {
        let inst = match parse_instance(text) {
            Ok(i) => i,
            Err(e) => {
                println!("[fail] {name}: parse error: {e}");
                worst = worst.max(4);
                continue;
            }
        };
        let mut params = Params::default().with_file_params(&inst.params);
        if !inst.params.contains_key("seed") {
            params.seed = 42;
        }
        match run_check(&inst, &params) {
            Ok(report) => {
                let code = report.exit_code();
                worst = worst.max(code);
                let tag = match code {
                    0 => "ok",
                    3 => "undecided",
                    _ => "REFUTED",
                };
                println!("[{tag}] {name}: exit {code}");
                if args.format == "json" {
                    println!("{}", serde_json::to_string(&report).expect("serializes"));
                }
            }
            Err(e) => {
                println!("[fail] {name}: engine error: {e}");
                worst = worst.max(4);
            }
        }
    }
    ExitCode::from(worst as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Invariants(a) => run_command(a, "invariants"),
        Command::Tor(a) => run_command(a, "tor"),
        Command::Fiber(a) => run_command(a, "fiber"),
        Command::Reduction(a) => run_command(a, "reduction"),
        Command::Superficial(a) => run_command(a, "superficial"),
        Command::Check(a) => run_command(a, "check"),
        Command::Selftest(a) => selftest(a),
    }
}
