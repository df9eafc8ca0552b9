//! Thin command-line front end over the library.
//!
//! Exit codes: 0 on success, 1 when a requested property fails to hold
//! (verification violations, unequal swapped distributions), 2 on usage or
//! parse errors.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use parity_involution::{
    involution, joint_distribution_capped, render_distribution, render_report, render_stats,
    render_trace, spot_check, trace, verify_capped, Check, KeyKind, OutputFormat, Permutation,
    DEFAULT_MAX_N, HARD_MAX_N,
};

#[derive(Parser)]
#[command(
    name = "parity-involution",
    about = "Parity-sensitive permutation statistics and the insertion involution that exchanges them",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FormatArg {
    /// Output format: plain, json, csv, or md.
    #[arg(long, default_value = "plain")]
    format: OutputFormat,
}

#[derive(Subcommand)]
enum Command {
    /// Print every statistic of one permutation (quadruple, s10/s12, gap profile).
    Stats {
        /// Permutation as space/comma-separated values, compact digits, or `-` for stdin.
        perm: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Apply the involution to one permutation and print the image.
    Apply {
        /// Permutation as space/comma-separated values, compact digits, or `-` for stdin.
        perm: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Print the level-by-level construction table for a permutation and its image.
    Trace {
        /// Permutation as space/comma-separated values, compact digits, or `-` for stdin.
        perm: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Tabulate the joint distribution of the statistics over all of S_n.
    Dist {
        /// Length n (all n! permutations are enumerated).
        n: usize,
        /// Which statistics key the table: quadruple (t1,t2,t3,s17) or triple (s10,s12,s17).
        #[arg(long, default_value = "quadruple")]
        keys: KeyKind,
        /// Also compare the table against its swapped-key counterpart.
        #[arg(long)]
        check_swap: bool,
        /// Worker threads for the enumeration (output is identical for any count).
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Raise the length cap from the default toward the u64 limit.
        #[arg(long)]
        max_n_override: Option<usize>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Check the involution's properties over all of S_n, or a random sample.
    Verify {
        /// Length n.
        n: usize,
        /// Comma-separated checks to run (default: all). Known checks:
        /// involution, swap, corollary_swap, parity_relations, s17_preserved,
        /// trace_consistency.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<Check>,
        /// Worker threads (report is identical for any count).
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Check this many seeded random permutations instead of all n!.
        #[arg(long)]
        sample: Option<u64>,
        /// Seed for --sample.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Raise the length cap from the default toward the u64 limit.
        #[arg(long)]
        max_n_override: Option<usize>,
        #[command(flatten)]
        format: FormatArg,
    },
}

fn read_perm(arg: &str) -> Result<Permutation, String> {
    let text = if arg == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("failed to read stdin: {e}"))?;
        buf
    } else {
        arg.to_string()
    };
    text.trim().parse::<Permutation>().map_err(|e| e.to_string())
}

fn effective_cap(max_n_override: Option<usize>) -> usize {
    max_n_override.unwrap_or(DEFAULT_MAX_N).min(HARD_MAX_N)
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Stats { perm, format } => {
            let p = read_perm(&perm)?;
            print!("{}", render_stats(&p, format.format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Apply { perm, format } => {
            let p = read_perm(&perm)?;
            let image = involution(&p);
            match format.format {
                OutputFormat::Json => {
                    println!(
                        "{}",
                        serde_json::json!({
                            "permutation": p.to_string(),
                            "image": image.to_string(),
                        })
                    );
                }
                _ => println!("{image}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Trace { perm, format } => {
            let p = read_perm(&perm)?;
            print!("{}", render_trace(&trace(&p), format.format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Dist {
            n,
            keys,
            check_swap,
            workers,
            max_n_override,
            format,
        } => {
            let cap = effective_cap(max_n_override);
            let table =
                joint_distribution_capped(n, keys, workers, cap).map_err(|e| e.to_string())?;
            let cmp = check_swap.then(|| table.compare(&table.swapped()));
            print!("{}", render_distribution(&table, format.format, cmp.as_ref()));
            match cmp {
                Some(cmp) if !cmp.equal => Ok(ExitCode::FAILURE),
                _ => Ok(ExitCode::SUCCESS),
            }
        }
        Command::Verify {
            n,
            checks,
            workers,
            sample,
            seed,
            max_n_override,
            format,
        } => {
            let checks = if checks.is_empty() { Check::ALL.to_vec() } else { checks };
            let report = match sample {
                Some(samples) => spot_check(n, samples, seed, &checks),
                None => verify_capped(n, &checks, workers, effective_cap(max_n_override)),
            }
            .map_err(|e| e.to_string())?;
            print!("{}", render_report(&report, format.format));
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::FAILURE)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
