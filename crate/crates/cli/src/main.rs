use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use rootjones_cli::commands::{self, Estimator};
use rootjones_cli::input::{parse_braid, parse_input, read_source};
use rootjones_cli::verify::{parse_suite, run_suite, summary_line, VerifyOptions, DEFAULT_SEED};
use rootjones_cli::RunReport;
use rootjones_core::{Closure, RootOfUnity};

/// Exact Jones values at roots of unity, diagram statistics, Vogel braiding,
/// twist surgery and simulated quantum estimators.
#[derive(Parser)]
#[command(name = "rootjones", version)]
struct Cli {
    /// Root of unity index (r >= 5, r != 6)
    #[arg(long, global = true, default_value_t = 5, value_parser = parse_r)]
    r: u32,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClosureArg {
    Plat,
    Trace,
}

impl From<ClosureArg> for Closure {
    fn from(c: ClosureArg) -> Self {
        match c {
            ClosureArg::Plat => Closure::Plat,
            ClosureArg::Trace => Closure::Trace,
        }
    }
}

/// A braid word such as "1 -2 1" or a diagram JSON document, inline or as a
/// file path.
#[derive(Args)]
struct Source {
    #[arg(allow_hyphen_values = true)]
    input: String,
    /// Strand count of a braid (default: largest generator + 1)
    #[arg(long)]
    strands: Option<usize>,
    #[arg(long, value_enum, default_value_t = ClosureArg::Trace)]
    closure: ClosureArg,
}

#[derive(Args)]
struct Simulation {
    /// Braid word, inline or as a file path
    #[arg(allow_hyphen_values = true)]
    braid: String,
    #[arg(long)]
    strands: Option<usize>,
    #[arg(long, default_value_t = 0.1)]
    eps: f64,
    /// Draws per real/imaginary part (default: the accuracy budget for --eps)
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 1)]
    reps: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Girth, crossings, components, Seifert circles and genus
    Stats(Source),
    /// Exact bracket and Jones value at the root of unity
    Jones {
        #[command(flatten)]
        source: Source,
        /// Skip the state-sum cross-check
        #[arg(long)]
        no_oracle: bool,
    },
    /// Closed-braid form by Reidemeister II moves
    Vogel(Source),
    /// Insert full twists on a strand window and compare |J|^2
    Twist {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        level: Option<usize>,
        /// First strand of the window
        #[arg(long, default_value_t = 0)]
        p: usize,
        /// Window width
        #[arg(long, default_value_t = 2)]
        m: usize,
        /// Number of full twists (default 4r)
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
    },
    /// Hadamard-test estimate of the plat closure
    SimulatePlat(Simulation),
    /// One-clean-qubit estimate of the trace closure
    SimulateDqc1(Simulation),
    /// Plat closure estimated through its Vogel trace form
    Pipeline(Simulation),
    /// Run acceptance criteria; exit code 1 if any fails
    Verify {
        /// all, quick, or a list such as 2,3,5-7
        #[arg(long, default_value = "all")]
        suite: String,
        /// Negative control: check against a wrong frozen constant
        #[arg(long)]
        corrupt_constant: bool,
    },
}

fn parse_r(s: &str) -> Result<u32, String> {
    let r: u32 = s.parse().map_err(|e| format!("{e}"))?;
    RootOfUnity::new(r).map(|_| r).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<(RunReport, bool)> {
    let root = RootOfUnity::new(cli.r)?;
    let r = cli.r;
    let report = match cli.command {
        Command::Stats(s) => {
            let input = parse_input(&s.input, s.strands)?;
            let closure = s.closure.into();
            RunReport::timed("stats", input.describe(closure), None, || {
                Ok(commands::stats(&input.diagram(closure)?))
            })?
        }
        Command::Jones { source: s, no_oracle } => {
            let input = parse_input(&s.input, s.strands)?;
            let closure = s.closure.into();
            let mut inputs = input.describe(closure);
            inputs["r"] = json!(r);
            RunReport::timed("jones", inputs, None, || commands::jones(&input, closure, &root, !no_oracle))?
        }
        Command::Vogel(s) => {
            let input = parse_input(&s.input, s.strands)?;
            let closure = s.closure.into();
            RunReport::timed("vogel", input.describe(closure), None, || commands::vogel(&input, closure, &root))?
        }
        Command::Twist { source: s, level, p, m, k } => {
            let input = parse_input(&s.input, s.strands)?;
            let closure = s.closure.into();
            let mut inputs = input.describe(closure);
            inputs["r"] = json!(r);
            RunReport::timed("twist", inputs, None, || {
                commands::twist(&input, closure, &root, level, p, m, k)
            })?
        }
        Command::SimulatePlat(s) => simulation("simulate-plat", Estimator::Plat, s, r, cli.seed)?,
        Command::SimulateDqc1(s) => simulation("simulate-dqc1", Estimator::Dqc1, s, r, cli.seed)?,
        Command::Pipeline(s) => simulation("pipeline", Estimator::Pipeline, s, r, cli.seed)?,
        Command::Verify { suite, corrupt_constant } => {
            let ids = parse_suite(&suite)?;
            let opts = VerifyOptions {
                seed: cli.seed,
                corrupt_constant,
            };
            let inputs = json!({ "suite": ids, "corrupt_constant": corrupt_constant });
            let mut timings = Vec::new();
            let mut report = RunReport::timed("verify", inputs, Some(cli.seed), || {
                let (results, ms) = run_suite(&ids, &opts);
                for (res, t) in results.iter().zip(&ms) {
                    eprintln!("{}", summary_line(res, *t));
                }
                timings = ms;
                let passed = results.iter().all(|c| c.passed);
                Ok(json!({ "passed": passed, "criteria": results }))
            })?;
            for (id, t) in ids.iter().zip(timings) {
                report.timings_ms.insert(format!("criterion_{id}"), t);
            }
            let passed = report.outputs["passed"] == true;
            return Ok((report, passed));
        }
    };
    Ok((report, true))
}

fn simulation(name: &str, which: Estimator, s: Simulation, r: u32, seed: u64) -> Result<RunReport> {
    let braid = parse_braid(read_source(&s.braid)?.trim(), s.strands)?;
    let inputs = json!({
        "braid": braid.to_string(),
        "strands": braid.strands(),
        "r": r,
        "eps": s.eps,
        "samples": s.samples,
        "reps": s.reps,
    });
    RunReport::timed(name, inputs, Some(seed), || {
        commands::simulate(which, &braid, r, s.eps, s.samples, seed, s.reps)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok((report, passed)) => {
            match format {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => println!("{}", report.to_text()),
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
