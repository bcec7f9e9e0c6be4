//! Command implementations behind the `braid3` executable. Each command
//! returns a [`CommandResult`]; the binary only handles argument parsing and
//! printing.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::bench::{run_bench, BenchOp, BenchReport};
use crate::conjugacy::{central_twist, mu};
use crate::error::{Error, ParseError};
use crate::json;
use crate::word_problem::{normal_form, rho, words_equal};
use crate::words::{parse_word, random_word, BraidWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Equal,
    NotEqual,
    Conjugate,
    NotConjugate,
    Ok,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Equal => "equal",
            Status::NotEqual => "not-equal",
            Status::Conjugate => "conjugate",
            Status::NotConjugate => "not-conjugate",
            Status::Ok => "ok",
            Status::Error => "error",
        }
    }

    /// `0` for equal, conjugate and ok; `1` for the negative verdicts; `2` for
    /// errors.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Equal | Status::Conjugate | Status::Ok => 0,
            Status::NotEqual | Status::NotConjugate => 1,
            Status::Error => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
}

impl CommandResult {
    fn new(status: Status, payload: Value) -> Self {
        Self { status, payload }
    }

    fn error(message: impl Into<String>) -> Self {
        Self::new(Status::Error, json!({ "error": message.into() }))
    }

    fn parse_error(argument: &str, err: &ParseError) -> Self {
        Self::new(
            Status::Error,
            json!({
                "error": err.to_string(),
                "argument": argument,
                "position": err.position,
            }),
        )
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    /// The payload with `"status"` as its first field.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        map.insert("status".into(), Value::String(self.status.as_str().into()));
        match &self.payload {
            Value::Object(fields) => {
                for (k, v) in fields {
                    map.insert(k.clone(), v.clone());
                }
            }
            Value::Null => {}
            other => {
                map.insert("result".into(), other.clone());
            }
        }
        Value::Object(map)
    }

    /// Plain-text rendering for terminals.
    pub fn human(&self) -> String {
        let mut out = String::new();
        let p = &self.payload;
        let text = |v: &Value| match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        match self.status {
            Status::Error => {
                let _ = write!(out, "error: {}", text(&p["error"]));
            }
            Status::Equal | Status::NotEqual => {
                let verdict = if self.status == Status::Equal {
                    "equal"
                } else {
                    "not equal"
                };
                let _ = writeln!(out, "{verdict}");
                for side in ["left", "right"] {
                    let r = &p[side]["rho"];
                    let _ = writeln!(
                        out,
                        "  rho({}) = ({}, {}, {})",
                        text(&p[side]["word"]),
                        text(&r["rho1"]),
                        text(&r["rho2"]),
                        text(&r["eps"])
                    );
                }
            }
            Status::Conjugate | Status::NotConjugate => {
                let verdict = if self.status == Status::Conjugate {
                    "conjugate"
                } else {
                    "not conjugate"
                };
                let _ = writeln!(out, "{verdict}");
                for side in ["left", "right"] {
                    let _ = writeln!(out, "  mu({}) = {}", text(&p[side]["word"]), p[side]["mu"]);
                }
                if !p["twist"].is_null() {
                    let _ = writeln!(
                        out,
                        "  images conjugate in PSL2(Z); left ~ D^(2k)·right with k = {}",
                        p["twist"]
                    );
                }
            }
            Status::Ok => {
                if let Some(obj) = p.as_object() {
                    for (k, v) in obj {
                        let _ = writeln!(out, "{k}: {}", text(v));
                    }
                }
            }
        }
        out.trim_end().to_string()
    }
}

fn parse_arg(argument: &str, text: &str) -> Result<BraidWord, CommandResult> {
    parse_word(text).map_err(|e| CommandResult::parse_error(argument, &e))
}

fn word_field(word: &BraidWord) -> Value {
    Value::String(word.to_string())
}

pub fn cmd_eq(w1: &str, w2: &str) -> CommandResult {
    let (u, v) = match (parse_arg("W1", w1), parse_arg("W2", w2)) {
        (Ok(u), Ok(v)) => (u, v),
        (Err(e), _) | (_, Err(e)) => return e,
    };
    let status = if words_equal(&u, &v) {
        Status::Equal
    } else {
        Status::NotEqual
    };
    CommandResult::new(
        status,
        json!({
            "left": { "word": word_field(&u), "rho": json::rho(&rho(&u)) },
            "right": { "word": word_field(&v), "rho": json::rho(&rho(&v)) },
        }),
    )
}

pub fn cmd_conj(w1: &str, w2: &str) -> CommandResult {
    let (u, v) = match (parse_arg("W1", w1), parse_arg("W2", w2)) {
        (Ok(u), Ok(v)) => (u, v),
        (Err(e), _) | (_, Err(e)) => return e,
    };
    let twist = match central_twist(&u, &v) {
        Ok(k) => k,
        Err(e) => return CommandResult::error(e.to_string()),
    };
    let (mu_u, mu_v) = (mu(&u), mu(&v));
    let status = if mu_u == mu_v {
        Status::Conjugate
    } else {
        Status::NotConjugate
    };
    CommandResult::new(
        status,
        json!({
            "left": { "word": word_field(&u), "mu": json::mu(&mu_u) },
            "right": { "word": word_field(&v), "mu": json::mu(&mu_v) },
            "twist": twist.as_ref().map(json::int),
        }),
    )
}

pub fn cmd_nf(w: &str) -> CommandResult {
    let word = match parse_arg("W", w) {
        Ok(word) => word,
        Err(e) => return e,
    };
    match normal_form(&word) {
        Ok(nf) => {
            let mut payload = json::normal_form(&nf);
            payload["word"] = word_field(&nf.to_word());
            CommandResult::new(Status::Ok, payload)
        }
        Err(e) => CommandResult::error(e.to_string()),
    }
}

pub fn cmd_invariants(w: &str) -> CommandResult {
    match parse_arg("W", w) {
        Ok(word) => invariants_of(&word),
        Err(e) => e,
    }
}

fn invariants_of(word: &BraidWord) -> CommandResult {
    let nf = match normal_form(word) {
        Ok(nf) => nf,
        Err(e) => return CommandResult::error(e.to_string()),
    };
    let r = rho(word);
    CommandResult::new(
        Status::Ok,
        json!({
            "rho1": json::point(&r.rho1),
            "rho2": json::point(&r.rho2),
            "eps": json::int(&r.eps),
            "class": json::class_invariant(&mu(word).cls),
            "normal_form": nf.to_string(),
        }),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BatchOp {
    /// Re-expands the normal form and checks it against the input word.
    EqSelf,
    Invariants,
    Mu,
}

impl FromStr for BatchOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "eq-self" => Ok(BatchOp::EqSelf),
            "invariants" | "inv" => Ok(BatchOp::Invariants),
            "mu" => Ok(BatchOp::Mu),
            other => Err(Error::Precondition(format!("unknown batch op {other:?}"))),
        }
    }
}

fn batch_one(op: BatchOp, text: &str) -> CommandResult {
    let word = match parse_arg("line", text) {
        Ok(word) => word,
        Err(e) => return e,
    };
    match op {
        BatchOp::Invariants => invariants_of(&word),
        BatchOp::Mu => CommandResult::new(
            Status::Ok,
            json!({ "word": word_field(&word), "mu": json::mu(&mu(&word)) }),
        ),
        BatchOp::EqSelf => match normal_form(&word) {
            Ok(nf) => {
                let expanded = nf.to_word();
                let status = if words_equal(&word, &expanded) {
                    Status::Equal
                } else {
                    Status::NotEqual
                };
                CommandResult::new(
                    status,
                    json!({
                        "word": word_field(&word),
                        "normal_form": nf.to_string(),
                        "rho": json::rho(&rho(&word)),
                    }),
                )
            }
            Err(e) => CommandResult::error(e.to_string()),
        },
    }
}

/// One result per non-blank, non-comment line, in input order. `#` starts a
/// comment that runs to the end of the line. Every payload carries the
/// 1-based source line number as `"line"`.
pub fn batch_lines(input: &str, op: BatchOp) -> Vec<CommandResult> {
    let jobs: Vec<(usize, &str)> = input
        .lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let content = line.split('#').next().unwrap_or("").trim();
            (!content.is_empty()).then_some((i + 1, content))
        })
        .collect();
    jobs.par_iter()
        .map(|&(line_no, content)| {
            let mut result = batch_one(op, content);
            if let Value::Object(map) = &mut result.payload {
                map.insert("line".into(), json!(line_no));
            }
            result
        })
        .collect()
}

pub fn cmd_batch(path: &Path, op: BatchOp) -> std::io::Result<Vec<CommandResult>> {
    let input = std::fs::read_to_string(path)?;
    Ok(batch_lines(&input, op))
}

pub fn cmd_bench(
    op: BenchOp,
    lengths: &[usize],
    trials: usize,
    seed: u64,
) -> Result<BenchReport, Error> {
    run_bench(op, lengths, trials, seed)
}

pub fn cmd_gen(length: usize, seed: u64) -> CommandResult {
    let word = random_word(length, seed);
    CommandResult::new(
        Status::Ok,
        json!({ "word": word_field(&word), "length": length, "seed": seed }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eq_verdicts() {
        assert_eq!(cmd_eq("aba", "bab").status, Status::Equal);
        assert_eq!(cmd_eq("a", "b").status, Status::NotEqual);
        assert_eq!(cmd_eq("a^2 b", "aab").status, Status::Equal);
        let bad = cmd_eq("a", "xyz");
        assert_eq!(bad.status, Status::Error);
        assert_eq!(bad.exit_code(), 2);
        assert_eq!(bad.payload["argument"], "W2");
    }

    #[test]
    fn conj_verdicts() {
        assert_eq!(cmd_conj("a", "b").status, Status::Conjugate);
        assert_eq!(cmd_conj("aB", "aBaB").status, Status::NotConjugate);
        let r = cmd_conj("aba", "abaabaaba");
        assert_eq!(r.status, Status::NotConjugate);
        assert_eq!(r.payload["twist"], json!(-1));
        assert_eq!(cmd_conj("a", "aB").payload["twist"], Value::Null);
    }

    #[test]
    fn invariants_payload() {
        let r = cmd_invariants("a");
        assert_eq!(r.status, Status::Ok);
        assert_eq!(r.payload["rho1"], "1/0");
        assert_eq!(r.payload["rho2"], "1/1");
        assert_eq!(r.payload["eps"], json!(1));
        assert_eq!(r.payload["class"], json!({"type": "parabolic", "s": 1}));

        let r = cmd_invariants("");
        assert_eq!(
            (r.payload["rho1"].as_str(), r.payload["rho2"].as_str()),
            (Some("1/0"), Some("0/1"))
        );
        assert_eq!(r.payload["eps"], json!(0));

        let r = cmd_invariants("aB");
        assert_eq!(
            r.payload["class"],
            json!({"type": "hyperbolic", "trace": 3, "period": [1], "phase": 0})
        );
    }

    #[test]
    fn nf_payload() {
        let r = cmd_nf("A");
        assert_eq!(r.payload["k"], json!(-1));
        assert_eq!(r.payload["tail"], json!([[1, 1]]));
        assert_eq!(r.payload["text"], "D^-1 · s1^1 s2^1");
    }

    #[test]
    fn batch_skips_comments_and_survives_errors() {
        let input = "# header\naba\n\nxyz\nab # trailing comment\n   \n";
        let results = batch_lines(input, BatchOp::Mu);
        assert_eq!(results.len(), 3);
        assert_eq!(results[0].payload["line"], json!(2));
        assert_eq!(results[1].status, Status::Error);
        assert_eq!(results[1].payload["line"], json!(4));
        assert_eq!(
            results[2].payload["mu"],
            json!({"type": "elliptic3", "sign": 1, "eps": 2})
        );
        assert!(batch_lines("", BatchOp::Invariants).is_empty());
    }

    #[test]
    fn eq_self_batch() {
        let results = batch_lines("aba\nAbAbaB\nb^5 A^3", BatchOp::EqSelf);
        assert!(results.iter().all(|r| r.status == Status::Equal));
    }

    #[test]
    fn status_is_first_json_field() {
        let text = cmd_eq("a", "a").to_json().to_string();
        assert!(text.starts_with(r#"{"status":"equal""#), "{text}");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(Status::Equal.exit_code(), 0);
        assert_eq!(Status::Conjugate.exit_code(), 0);
        assert_eq!(Status::Ok.exit_code(), 0);
        assert_eq!(Status::NotEqual.exit_code(), 1);
        assert_eq!(Status::NotConjugate.exit_code(), 1);
        assert_eq!(Status::Error.exit_code(), 2);
    }
}
