//! Timing harness for `ρ`, `μ` and the normal form on random words.
//!
//! Matrix entries of `φ(w)` grow linearly in bit length with the word, so
//! each syllable costs a bignum multiply-add rather than a unit-cost step.
//! Records carry the largest entry bit size next to the timing so that this
//! is visible in the fitted slope.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde_json::{json, Value};

use crate::conjugacy::mu;
use crate::error::{Error, Result};
use crate::modular::phi_matrix;
use crate::word_problem::{normal_form, rho};
use crate::words::{random_word, BraidWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchOp {
    Rho,
    Mu,
    Nf,
}

impl BenchOp {
    pub fn as_str(self) -> &'static str {
        match self {
            BenchOp::Rho => "rho",
            BenchOp::Mu => "mu",
            BenchOp::Nf => "nf",
        }
    }

    fn run(self, word: &BraidWord) {
        match self {
            BenchOp::Rho => {
                std::hint::black_box(rho(word));
            }
            BenchOp::Mu => {
                std::hint::black_box(mu(word));
            }
            BenchOp::Nf => {
                std::hint::black_box(normal_form(word).expect("normal form"));
            }
        }
    }
}

impl FromStr for BenchOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rho" => Ok(BenchOp::Rho),
            "mu" => Ok(BenchOp::Mu),
            "nf" => Ok(BenchOp::Nf),
            other => Err(Error::Precondition(format!("unknown bench op {other:?}"))),
        }
    }
}

impl fmt::Display for BenchOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub op: BenchOp,
    pub length: usize,
    pub trials: usize,
    pub seed: u64,
    /// Median nanoseconds per trial.
    pub elapsed_ns: u64,
    /// Largest bit length of any entry of `φ(w)` over the trials.
    pub bit_size: u64,
}

impl BenchRecord {
    pub fn to_json(&self) -> Value {
        json!({
            "op": self.op.as_str(),
            "length": self.length,
            "trials": self.trials,
            "seed": self.seed,
            "elapsed_ns": self.elapsed_ns,
            "bit_size": self.bit_size,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub op: BenchOp,
    pub records: Vec<BenchRecord>,
    /// Least-squares slope of `ln(elapsed)` against `ln(length)`; `None` with
    /// fewer than two distinct lengths.
    pub slope: Option<f64>,
    pub max_bit_size: u64,
}

impl BenchReport {
    pub fn summary_json(&self) -> Value {
        json!({
            "summary": true,
            "op": self.op.as_str(),
            "lengths": self.records.len(),
            "slope": self.slope,
            "max_bit_size": self.max_bit_size,
        })
    }
}

/// Seed of the `trial`-th word at `length`; distinct lengths and trials get
/// distinct streams, and the mapping depends only on its inputs.
pub fn trial_seed(seed: u64, length: usize, trial: usize) -> u64 {
    seed ^ (length as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ (trial as u64).rotate_left(32)
}

pub fn trial_word(seed: u64, length: usize, trial: usize) -> BraidWord {
    random_word(length, trial_seed(seed, length, trial))
}

pub fn run_bench(op: BenchOp, lengths: &[usize], trials: usize, seed: u64) -> Result<BenchReport> {
    if lengths.is_empty() {
        return Err(Error::Precondition(
            "bench needs at least one length".into(),
        ));
    }
    if let Some(bad) = lengths.iter().find(|&&l| l == 0) {
        return Err(Error::Precondition(format!(
            "bench length {bad} must be ≥ 1"
        )));
    }
    if trials == 0 {
        return Err(Error::Precondition("bench needs at least one trial".into()));
    }
    let mut records = Vec::with_capacity(lengths.len());
    for &length in lengths {
        let mut times = Vec::with_capacity(trials);
        let mut bit_size = 0;
        for trial in 0..trials {
            let word = trial_word(seed, length, trial);
            bit_size = bit_size.max(phi_matrix(&word).max_bits());
            let start = Instant::now();
            op.run(&word);
            times.push(start.elapsed().as_nanos().max(1) as u64);
        }
        times.sort_unstable();
        records.push(BenchRecord {
            op,
            length,
            trials,
            seed,
            elapsed_ns: times[times.len() / 2],
            bit_size,
        });
    }
    let slope = log_log_slope(&records);
    let max_bit_size = records.iter().map(|r| r.bit_size).max().unwrap_or(0);
    Ok(BenchReport {
        op,
        records,
        slope,
        max_bit_size,
    })
}

fn log_log_slope(records: &[BenchRecord]) -> Option<f64> {
    let points: Vec<(f64, f64)> = records
        .iter()
        .map(|r| ((r.length as f64).ln(), (r.elapsed_ns as f64).ln()))
        .collect();
    let n = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    Some(sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(length: usize, elapsed_ns: u64) -> BenchRecord {
        BenchRecord {
            op: BenchOp::Rho,
            length,
            trials: 1,
            seed: 0,
            elapsed_ns,
            bit_size: 0,
        }
    }

    #[test]
    fn slope_of_exact_power_laws() {
        let linear = [record(10, 100), record(100, 1000), record(1000, 10_000)];
        assert!((log_log_slope(&linear).unwrap() - 1.0).abs() < 1e-12);
        let quadratic = [record(10, 100), record(20, 400)];
        assert!((log_log_slope(&quadratic).unwrap() - 2.0).abs() < 1e-12);
        assert_eq!(log_log_slope(&[record(10, 5), record(10, 7)]), None);
    }

    #[test]
    fn single_length_report() {
        let report = run_bench(BenchOp::Rho, &[1000], 5, 7).unwrap();
        assert_eq!(report.records.len(), 1);
        assert!(report.records[0].elapsed_ns > 0);
        assert!(report.records[0].bit_size > 0);
        assert_eq!(report.slope, None);
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(run_bench(BenchOp::Rho, &[], 1, 0).is_err());
        assert!(run_bench(BenchOp::Rho, &[0], 1, 0).is_err());
        assert!(run_bench(BenchOp::Rho, &[10], 0, 0).is_err());
    }

    #[test]
    fn word_streams_are_reproducible() {
        for trial in 0..3 {
            assert_eq!(trial_word(11, 500, trial), trial_word(11, 500, trial));
        }
        assert_ne!(trial_word(11, 500, 0), trial_word(11, 500, 1));
    }

    #[test]
    fn ops_parse() {
        assert_eq!("nf".parse::<BenchOp>().unwrap(), BenchOp::Nf);
        assert!("foo".parse::<BenchOp>().is_err());
    }
}
