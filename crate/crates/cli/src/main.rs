use std::io::{self, BufWriter, Write};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use tricomm::census::census_table;
use tricomm::oracle::{BruteOptions, MAX_DEGREE};
use tricomm_cli::render::{write_rows, Family, Format};
use tricomm_cli::suites::{run_suite, Suite, VerifyConfig};

const USAGE_ERROR: u8 = 2;

#[derive(Parser)]
#[command(
    name = "tricomm",
    version,
    about = "Counts of permutation pairs with a 3-cycle commutator"
)]
struct Cli {
    /// Worker threads (defaults to all cores)
    #[arg(long, global = true, env = "TRICOMM_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the census table for a range of degrees
    Census(CensusArgs),
    /// Run verification suites
    Verify(VerifyArgs),
}

#[derive(Args)]
struct CensusArgs {
    #[arg(long, default_value_t = 3)]
    from: usize,
    #[arg(long, default_value_t = 255)]
    to: usize,
    #[arg(long, value_enum, default_value_t = Family::Main)]
    family: Family,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated suites; all of them by default
    #[arg(long, value_enum, value_delimiter = ',')]
    suites: Vec<Suite>,
    /// Largest degree for brute-force enumeration
    #[arg(long, default_value_t = 7)]
    max_n: usize,
    /// Permit enumeration at degree 8
    #[arg(long)]
    allow_n8: bool,
    /// Print a JSON report instead of text
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if threads == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(USAGE_ERROR);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .expect("global pool is configured once");
    }
    let result = match cli.command {
        Command::Census(args) => census(args),
        Command::Verify(args) => verify(args),
    };
    match result {
        Ok(code) => code,
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn census(args: CensusArgs) -> io::Result<ExitCode> {
    if args.from < 3 || args.from > args.to {
        eprintln!(
            "error: need 3 <= from <= to, got from={} to={}",
            args.from, args.to
        );
        return Ok(ExitCode::from(USAGE_ERROR));
    }
    let rows = census_table(args.from, args.to).map_err(io::Error::other)?;
    let mut out = BufWriter::new(io::stdout().lock());
    write_rows(&mut out, &rows, args.family, args.format)?;
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn verify(args: VerifyArgs) -> io::Result<ExitCode> {
    if args.max_n > MAX_DEGREE || (args.max_n == MAX_DEGREE && !args.allow_n8) {
        eprintln!(
            "error: --max-n {} needs --allow-n8 and must not exceed {MAX_DEGREE}",
            args.max_n
        );
        return Ok(ExitCode::from(USAGE_ERROR));
    }
    let mut suites = if args.suites.is_empty() {
        Suite::ALL.to_vec()
    } else {
        args.suites
    };
    suites.sort();
    suites.dedup();

    let progress: Arc<dyn Fn(usize, usize) + Send + Sync> =
        Arc::new(|done, total| eprintln!("  enumeration: {done}/{total} classes"));
    let config = VerifyConfig {
        max_n: args.max_n,
        brute: BruteOptions {
            allow_n8: args.allow_n8,
            progress: (!args.json).then_some(progress),
            ..Default::default()
        },
    };

    let mut reports = Vec::new();
    for suite in suites {
        eprintln!("running {suite:?}");
        reports.push(run_suite(suite, &config));
    }
    let passed = reports.iter().all(|r| r.passed);

    let mut out = io::stdout().lock();
    if args.json {
        let doc = serde_json::json!({ "passed": passed, "suites": reports });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
    } else {
        for report in &reports {
            writeln!(
                out,
                "{:?}: {}",
                report.suite,
                if report.passed { "pass" } else { "FAIL" }
            )?;
            for check in &report.checks {
                let status = if check.passed() { "ok" } else { "FAIL" };
                writeln!(
                    out,
                    "  {status:4} {} ({} checked, {} failed)",
                    check.name, check.checked, check.failed
                )?;
                for msg in &check.failures {
                    writeln!(out, "       {msg}")?;
                }
                for note in &check.notes {
                    writeln!(out, "       note: {note}")?;
                }
            }
        }
    }
    Ok(if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}
