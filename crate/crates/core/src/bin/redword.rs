use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};

use redword::expectations::{
    asymptotic_noncommuting, expected_commutations, expected_commutations_f64,
    expected_noncommuting_f64, proportions, to_f64, ExpectationReport, Method, DP_MAX_N,
    ENUMERATE_MAX_N, EXACT_CLOSED_MAX_N, NONCOMMUTING_SLOPE,
};
use redword::table::{self, format_sig17, TABLE_EXACT_MAX_N};
use redword::tableaux::{hook_length_count, staircase};
use redword::verify::{self, VerifyConfig, VERIFY_MAX_N};
use redword::{longest_length, sampler, CountingSession, Error, Permutation};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE_CAP: u8 = 3;

/// Statistics of reduced words for the longest permutation.
#[derive(Parser, Debug)]
#[command(name = "redword", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count the reduced words of w0 by DP and by the hook-length formula.
    Count {
        #[arg(long)]
        n: usize,
    },
    /// Expected number of commutation positions, E(C_n).
    Expect {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Closed)]
        method: MethodArg,
    },
    /// Monte Carlo estimate from exactly uniform reduced words (JSON on stdout).
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Table of expectations for a range of n.
    Table {
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Leading-order growth of noncommuting pairs and the asymptotic proportions.
    Asymptotics {
        #[arg(long)]
        n: usize,
    },
    /// Run the self-verification suite.
    Verify {
        #[arg(long = "max-n", default_value_t = 6)]
        max_n: usize,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Closed,
    Dp,
    Enumerate,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Closed => Method::ClosedForm,
            MethodArg::Dp => Method::Dp,
            MethodArg::Enumerate => Method::Enumeration,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::ResourceCap { .. } => EXIT_RESOURCE_CAP,
            Error::Io { .. } | Error::Table(_) | Error::NotPrepared(_) => EXIT_VERIFY_FAILED,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: String) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message,
    }
}

type CmdResult = Result<(), Failure>;

fn cmd_count(n: usize) -> CmdResult {
    if !(2..=DP_MAX_N).contains(&n) {
        return Err(usage(format!("count needs 2 <= n <= {DP_MAX_N}, got {n}")));
    }
    let dp = CountingSession::new(n)?.count(&Permutation::longest_element(n)?)?;
    let hooks = hook_length_count(&staircase(n)?);
    if dp != hooks {
        return Err(Failure {
            code: EXIT_VERIFY_FAILED,
            message: format!("dp count {dp} disagrees with hook-length count {hooks}"),
        });
    }
    println!("{dp}");
    Ok(())
}

fn cmd_expect(n: usize, method: MethodArg) -> CmdResult {
    let method = Method::from(method);
    let legal = method.max_n();
    if method == Method::ClosedForm && n > EXACT_CLOSED_MAX_N {
        let ec = expected_commutations_f64(n)?;
        println!("n: {n}");
        println!("method: closed_form (log space)");
        println!("e_commutations: n/a");
        println!("e_commutations_float: {}", format_sig17(ec));
        println!("e_noncommuting_float: {}", format_sig17(expected_noncommuting_f64(n)?));
        return Ok(());
    }
    let report = ExpectationReport::compute(n, method).map_err(|e| match e {
        Error::ResourceCap { .. } => Failure {
            code: EXIT_RESOURCE_CAP,
            message: format!("method {method:?} accepts n in [3, {legal}], got {n}"),
        },
        other => other.into(),
    })?;
    if method != Method::ClosedForm {
        let closed = expected_commutations(n)?;
        if closed != report.e_commutations {
            return Err(Failure {
                code: EXIT_VERIFY_FAILED,
                message: format!(
                    "{method:?} gives {} but the closed form gives {closed}",
                    report.e_commutations
                ),
            });
        }
    }
    println!("n: {n}");
    println!("method: {}", serde_json::to_value(method).unwrap_or_default().as_str().unwrap_or(""));
    println!("e_commutations: {}", report.e_commutations);
    println!("e_commutations_float: {}", format_sig17(report.float_value));
    println!("e_noncommuting: {}", report.e_noncommuting);
    println!("e_noncommuting_float: {}", format_sig17(to_f64(&report.e_noncommuting)));
    println!("e_braids: {}", report.e_braids_reference);
    Ok(())
}

fn cmd_sample(n: usize, trials: u64, seed: u64, jobs: usize) -> CmdResult {
    if trials == 0 {
        return Err(usage("--trials must be at least 1".into()));
    }
    if n < 2 {
        return Err(usage(format!("sample needs n >= 2, got {n}")));
    }
    let summary = sampler::monte_carlo(n, trials, seed, jobs)?;
    if summary.se_undefined() {
        eprintln!("warning: standard errors are undefined for a single trial");
    }
    let json = serde_json::to_string(&summary).map_err(|e| Failure {
        code: EXIT_VERIFY_FAILED,
        message: e.to_string(),
    })?;
    println!("{json}");
    Ok(())
}

fn cmd_table(from: usize, to: usize, format: Format, out: Option<PathBuf>) -> CmdResult {
    let rows = table::rows(from, to)?;
    let mut buf = Vec::new();
    match format {
        Format::Csv => table::write_csv(&rows, &mut buf)?,
        Format::Json => table::write_json(&rows, &mut buf)?,
    }
    match out {
        Some(path) => fs::write(&path, &buf).map_err(|e| {
            Failure::from(Error::Io {
                path: path.display().to_string(),
                message: e.to_string(),
            })
        }),
        None => std::io::stdout().write_all(&buf).map_err(|e| {
            Failure::from(Error::Io {
                path: "<stdout>".into(),
                message: e.to_string(),
            })
        }),
    }
}

fn cmd_asymptotics(n: usize) -> CmdResult {
    if n < 3 {
        return Err(usage(format!("asymptotics needs n >= 3, got {n}")));
    }
    let ell = longest_length(n) as f64;
    let noncomm = expected_noncommuting_f64(n)?;
    let p = proportions(n);
    println!("n: {n}");
    println!("slope_128_over_9pi2: {}", format_sig17(NONCOMMUTING_SLOPE));
    println!("asymptotic_noncommuting: {}", format_sig17(asymptotic_noncommuting(n)));
    println!("e_noncommuting: {}", format_sig17(noncomm));
    println!("e_commutations: {}", format_sig17(expected_commutations_f64(n)?));
    println!("proportion_commutations: {}", format_sig17((ell - 1.0 - noncomm) / ell));
    println!("proportion_noncommuting: {}", format_sig17(noncomm / ell));
    println!("proportion_braids: {}", format_sig17(1.0 / ell));
    println!("leading_proportion_commutations: {}", format_sig17(p.commutations));
    println!("leading_proportion_noncommuting: {}", format_sig17(p.noncommuting));
    println!("leading_proportion_braids: {}", format_sig17(p.braids));
    Ok(())
}

fn cmd_verify(max_n: usize) -> CmdResult {
    if !(3..=VERIFY_MAX_N).contains(&max_n) {
        return Err(usage(format!("--max-n must lie in [3, {VERIFY_MAX_N}], got {max_n}")));
    }
    let report = verify::run(&VerifyConfig::new(max_n), |c| println!("{}", c.line()))?;
    match report.first_failure() {
        None => Ok(()),
        Some(f) => Err(Failure {
            code: EXIT_VERIFY_FAILED,
            message: format!("first failure: {}: {}", f.name, f.detail),
        }),
    }
}

fn main() -> ExitCode {
    let command = Cli::command().after_help(format!(
        "Caps: enumerate n <= {ENUMERATE_MAX_N}; dp and count n <= {DP_MAX_N}; \
         exact closed form n <= {EXACT_CLOSED_MAX_N} (log space beyond); \
         exact table columns n <= {TABLE_EXACT_MAX_N}; verify max-n <= {VERIFY_MAX_N}.\n\
         Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource-cap refusal."
    ));
    let cli = match Cli::from_arg_matches(&command.get_matches()) {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let result = match cli.command {
        Command::Count { n } => cmd_count(n),
        Command::Expect { n, method } => cmd_expect(n, method),
        Command::Sample { n, trials, seed, jobs } => cmd_sample(n, trials, seed, jobs),
        Command::Table { from, to, format, out } => cmd_table(from, to, format, out),
        Command::Asymptotics { n } => cmd_asymptotics(n),
        Command::Verify { max_n } => cmd_verify(max_n),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
