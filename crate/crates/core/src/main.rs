use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use braid3::bench::BenchOp;
use braid3::cli::{self, BatchOp, CommandResult};

#[derive(Parser)]
#[command(
    name = "braid3",
    version,
    about = "Word and conjugacy problems in the braid group B3"
)]
struct Cli {
    /// Emit JSON lines instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether two words are equal in B3.
    Eq { w1: String, w2: String },
    /// Decide whether two words are conjugate in B3.
    Conj { w1: String, w2: String },
    /// Print the Δ-shifted normal form of a word.
    Nf { w: String },
    /// Print rho, the class invariant and the normal form of a word.
    Inv { w: String },
    /// Process a file with one word per line.
    Batch {
        #[arg(long)]
        file: PathBuf,
        /// eq-self, invariants or mu.
        #[arg(long)]
        op: BatchOp,
    },
    /// Time rho, mu or nf on random words.
    Bench {
        /// rho, mu or nf.
        #[arg(long, default_value = "rho")]
        op: BenchOp,
        #[arg(long, value_delimiter = ',', required = true)]
        lengths: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print a uniformly random word.
    Gen {
        #[arg(long)]
        len: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn emit(out: &mut impl Write, result: &CommandResult, as_json: bool) -> std::io::Result<()> {
    if as_json {
        writeln!(out, "{}", result.to_json())
    } else {
        writeln!(out, "{}", result.human())
    }
}

fn run(cli: Cli) -> std::io::Result<u8> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let single = match cli.command {
        Command::Eq { w1, w2 } => cli::cmd_eq(&w1, &w2),
        Command::Conj { w1, w2 } => cli::cmd_conj(&w1, &w2),
        Command::Nf { w } => cli::cmd_nf(&w),
        Command::Inv { w } => cli::cmd_invariants(&w),
        Command::Gen { len, seed } => {
            let result = cli::cmd_gen(len, seed);
            if !cli.json {
                writeln!(out, "{}", result.payload["word"].as_str().unwrap_or(""))?;
                return Ok(0);
            }
            result
        }
        Command::Batch { file, op } => {
            let results = match cli::cmd_batch(&file, op) {
                Ok(results) => results,
                Err(e) => {
                    eprintln!("error: cannot read {}: {e}", file.display());
                    return Ok(2);
                }
            };
            for result in &results {
                if cli.json {
                    writeln!(out, "{}", result.to_json())?;
                } else {
                    let line = &result.payload["line"];
                    writeln!(out, "line {line}: {}", result.human().replace('\n', "; "))?;
                }
            }
            return Ok(0);
        }
        Command::Bench {
            op,
            lengths,
            trials,
            seed,
        } => {
            let report = match cli::cmd_bench(op, &lengths, trials, seed) {
                Ok(report) => report,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(2);
                }
            };
            if cli.json {
                for record in &report.records {
                    writeln!(out, "{}", record.to_json())?;
                }
                writeln!(out, "{}", report.summary_json())?;
            } else {
                writeln!(
                    out,
                    "{:>10} {:>7} {:>14} {:>10}",
                    "length", "trials", "median_ns", "max_bits"
                )?;
                for r in &report.records {
                    writeln!(
                        out,
                        "{:>10} {:>7} {:>14} {:>10}",
                        r.length, r.trials, r.elapsed_ns, r.bit_size
                    )?;
                }
                match report.slope {
                    Some(slope) => writeln!(out, "log-log slope: {slope:.3}")?,
                    None => writeln!(out, "log-log slope: n/a (need two distinct lengths)")?,
                }
                writeln!(out, "max entry bit size: {}", report.max_bit_size)?;
            }
            return Ok(0);
        }
    };
    if single.status == cli::Status::Error && !cli.json {
        eprintln!("{}", single.human());
    } else {
        emit(&mut out, &single, cli.json)?;
    }
    Ok(single.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
