//! JSON encodings of the invariants.
//!
//! Integers are emitted as exact JSON numbers of any size; points of ℙ¹ as
//! `"num/den"` strings with `∞ = "1/0"`.

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use crate::cf::{PeriodWord, PhasedPeriod};
use crate::conjugacy::{ClassInvariant, MuInvariant};
use crate::error::{Error, Result};
use crate::modular::ProjPoint;
use crate::word_problem::{NormalForm, RhoInvariant};

pub fn int(n: &BigInt) -> Value {
    Value::Number(n.to_string().parse::<Number>().expect("decimal integer"))
}

fn parse_int(value: &Value, field: &str) -> Result<BigInt> {
    match value {
        Value::Number(n) => n
            .to_string()
            .parse()
            .map_err(|_| bad(format!("field {field:?} is not an integer"))),
        _ => Err(bad(format!("field {field:?} is not a number"))),
    }
}

fn bad(msg: String) -> Error {
    Error::Precondition(format!("invalid invariant JSON: {msg}"))
}

pub fn point(p: &ProjPoint) -> Value {
    Value::String(p.to_string())
}

pub fn rho(r: &RhoInvariant) -> Value {
    json!({
        "rho1": point(&r.rho1),
        "rho2": point(&r.rho2),
        "eps": int(&r.eps),
    })
}

pub fn normal_form(nf: &NormalForm) -> Value {
    let tail: Vec<Value> = nf
        .tail()
        .iter()
        .map(|(a, b)| Value::Array(vec![int(a), int(b)]))
        .collect();
    json!({
        "k": int(nf.k()),
        "tail": tail,
        "text": nf.to_string(),
    })
}

fn class_map(cls: &ClassInvariant) -> Map<String, Value> {
    let value = match cls {
        ClassInvariant::Elliptic2 => json!({"type": "elliptic2"}),
        ClassInvariant::Elliptic3 { sign } => json!({"type": "elliptic3", "sign": sign}),
        ClassInvariant::Parabolic { s } => json!({"type": "parabolic", "s": int(s)}),
        ClassInvariant::Hyperbolic {
            trace,
            period,
            phase,
        } => json!({
            "type": "hyperbolic",
            "trace": int(trace),
            "period": period.entries().iter().map(int).collect::<Vec<_>>(),
            "phase": phase,
        }),
    };
    match value {
        Value::Object(map) => map,
        _ => unreachable!("json! object literal"),
    }
}

/// `{"type":"elliptic2"} | {"type":"elliptic3","sign":±1} |
/// {"type":"parabolic","s":n} |
/// {"type":"hyperbolic","trace":n,"period":[…],"phase":0|1}`
pub fn class_invariant(cls: &ClassInvariant) -> Value {
    Value::Object(class_map(cls))
}

/// The class-invariant object with an added `"eps"` field.
pub fn mu(m: &MuInvariant) -> Value {
    let mut map = class_map(&m.cls);
    map.insert("eps".into(), int(&m.eps));
    Value::Object(map)
}

pub fn class_invariant_from_json(value: &Value) -> Result<ClassInvariant> {
    let obj = value
        .as_object()
        .ok_or_else(|| bad("not an object".into()))?;
    let field = |name: &str| {
        obj.get(name)
            .ok_or_else(|| bad(format!("missing {name:?}")))
    };
    let kind = field("type")?
        .as_str()
        .ok_or_else(|| bad("\"type\" is not a string".into()))?;
    match kind {
        "elliptic2" => Ok(ClassInvariant::Elliptic2),
        "elliptic3" => match field("sign")?.as_i64() {
            Some(1) => Ok(ClassInvariant::Elliptic3 { sign: 1 }),
            Some(-1) => Ok(ClassInvariant::Elliptic3 { sign: -1 }),
            _ => Err(bad("\"sign\" must be 1 or -1".into())),
        },
        "parabolic" => Ok(ClassInvariant::Parabolic {
            s: parse_int(field("s")?, "s")?,
        }),
        "hyperbolic" => {
            let trace = parse_int(field("trace")?, "trace")?;
            let entries = field("period")?
                .as_array()
                .ok_or_else(|| bad("\"period\" is not an array".into()))?
                .iter()
                .map(|v| parse_int(v, "period"))
                .collect::<Result<Vec<_>>>()?;
            let period = PeriodWord::canonical(&entries)?;
            if period.entries() != entries.as_slice() {
                return Err(bad("\"period\" is not in canonical form".into()));
            }
            let phase = field("phase")?
                .as_u64()
                .and_then(|p| u8::try_from(p).ok())
                .ok_or_else(|| bad("\"phase\" is not 0 or 1".into()))?;
            let PhasedPeriod { period, phase } = PhasedPeriod::new(period, phase)?;
            Ok(ClassInvariant::Hyperbolic {
                trace,
                period,
                phase,
            })
        }
        other => Err(bad(format!("unknown type {other:?}"))),
    }
}

pub fn mu_from_json(value: &Value) -> Result<MuInvariant> {
    let cls = class_invariant_from_json(value)?;
    let eps = value
        .get("eps")
        .ok_or_else(|| bad("missing \"eps\"".into()))
        .and_then(|v| parse_int(v, "eps"))?;
    Ok(MuInvariant { cls, eps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conjugacy::mu as mu_of;
    use crate::words::{parse_word, random_word};

    #[test]
    fn encodes_each_class() {
        let word = |t: &str| mu_of(&parse_word(t).unwrap());
        assert_eq!(
            mu(&word("aba")).to_string(),
            r#"{"type":"elliptic2","eps":3}"#
        );
        assert_eq!(
            mu(&word("BA")).to_string(),
            r#"{"type":"elliptic3","sign":-1,"eps":-2}"#
        );
        assert_eq!(
            mu(&word("a")).to_string(),
            r#"{"type":"parabolic","s":1,"eps":1}"#
        );
        assert_eq!(
            mu(&word("aaB")).to_string(),
            r#"{"type":"hyperbolic","trace":4,"period":[1,2],"phase":1,"eps":1}"#
        );
    }

    #[test]
    fn big_integers_stay_exact() {
        let huge: BigInt = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(int(&huge).to_string(), "123456789012345678901234567890");
        let cls = ClassInvariant::Parabolic { s: -huge.clone() };
        assert_eq!(
            class_invariant_from_json(&class_invariant(&cls)).unwrap(),
            cls
        );
    }

    #[test]
    fn decodes_what_it_encodes() {
        for seed in 0..200 {
            let m = mu_of(&random_word(12, seed));
            let text = mu(&m).to_string();
            let back = mu_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
            assert_eq!(back, m);
        }
    }

    #[test]
    fn rejects_malformed() {
        let cases = [
            r#"{"type":"elliptic3","sign":2}"#,
            r#"{"type":"hyperbolic","trace":3,"period":[2,1]}"#,
            r#"{"type":"hyperbolic","trace":3,"period":[]}"#,
            r#"{"type":"hyperbolic","trace":3,"period":[1]}"#,
            r#"{"type":"hyperbolic","trace":3,"period":[1],"phase":1}"#,
            r#"{"type":"hyperbolic","trace":4,"period":[1,2],"phase":2}"#,
            r#"{"type":"parabolic"}"#,
            r#"{"type":"loxodromic"}"#,
            r#"[1]"#,
        ];
        for text in cases {
            let value: Value = serde_json::from_str(text).unwrap();
            assert!(class_invariant_from_json(&value).is_err(), "{text}");
        }
    }

    #[test]
    fn rho_and_points() {
        let r = crate::word_problem::rho(&parse_word("a").unwrap());
        assert_eq!(
            rho(&r).to_string(),
            r#"{"rho1":"1/0","rho2":"1/1","eps":1}"#
        );
    }
}
