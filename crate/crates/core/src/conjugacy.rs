//! Conjugacy-class invariants of PSL₂(ℤ) and B₃.
//!
//! `λ` classifies a PSL₂(ℤ) element by trace: the order-2 class, the two
//! order-3 classes, the parabolic translation length `s`, or, for
//! hyperbolics, the trace together with the canonical period of the
//! expanding fixed point and the phase of that period. `μ` pairs `λ(φ(w))` with the exponent sum, which is
//! a complete conjugacy invariant of B₃.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cf::{surd_phased_period, PeriodWord, PhasedPeriod, QuadSurd};
use crate::error::{Error, Result};
use crate::modular::{phi, Psl2Elem};
use crate::word_problem::psl2_normal_form;
use crate::words::BraidWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TraceClass {
    /// trace 0, order 2
    Elliptic0,
    /// trace 1, order 3
    Elliptic1,
    Parabolic,
    Hyperbolic,
}

pub fn classify(g: &Psl2Elem) -> TraceClass {
    let trace = g.trace_abs();
    if trace.is_zero() {
        TraceClass::Elliptic0
    } else if trace.is_one() {
        TraceClass::Elliptic1
    } else if trace == BigInt::from(2) {
        TraceClass::Parabolic
    } else {
        TraceClass::Hyperbolic
    }
}

/// Which of the two order-3 classes `g` lies in: `+1` when `b > 0`, `−1` when
/// `c > 0`, read from the trace `+1` representative.
pub fn elliptic3_sign(g: &Psl2Elem) -> Result<i8> {
    if classify(g) != TraceClass::Elliptic1 {
        return Err(Error::Precondition(format!(
            "elliptic3_sign: trace of {g} is not 1"
        )));
    }
    let m = g.matrix();
    // bc = −(a² − a + 1) < 0, so exactly one of b, c is positive.
    if m.b().is_positive() {
        Ok(1)
    } else {
        debug_assert!(m.c().is_positive());
        Ok(-1)
    }
}

/// `u = gcd(a − 1, c)` and a pair `(r, t)` with `(a − 1)t − cr = u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutWitness {
    pub u: BigInt,
    pub r: BigInt,
    pub t: BigInt,
}

impl BezoutWitness {
    fn for_matrix(g: &Psl2Elem) -> Self {
        let m = g.matrix();
        let (u, t, minus_r) = extended_gcd(&(m.a() - 1u32), m.c());
        Self { u, r: -minus_r, t }
    }

    /// Another valid witness for the same matrix:
    /// `(r + k(a − 1)/u, t + kc/u)`.
    pub fn shifted(&self, g: &Psl2Elem, k: &BigInt) -> Self {
        let m = g.matrix();
        let a1 = m.a() - 1u32;
        Self {
            u: self.u.clone(),
            r: &self.r + k * (&a1 / &self.u),
            t: &self.t + k * (m.c() / &self.u),
        }
    }
}

/// Returns `(g, x, y)` with `a·x + b·y = g = gcd(a, b) ≥ 0`.
fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_x, mut x) = (BigInt::one(), BigInt::zero());
    let (mut old_y, mut y) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_x = &old_x - &q * &x;
        old_x = std::mem::replace(&mut x, next_x);
        let next_y = &old_y - &q * &y;
        old_y = std::mem::replace(&mut y, next_y);
    }
    if old_r.is_negative() {
        (-old_r, -old_x, -old_y)
    } else {
        (old_r, old_x, old_y)
    }
}

/// The unique `s` with `g` conjugate to `±[[1, s], [0, 1]]`, plus the Bézout
/// witness used (none when `g` already has that shape).
pub fn parabolic_s(g: &Psl2Elem) -> Result<(BigInt, Option<BezoutWitness>)> {
    if classify(g) != TraceClass::Parabolic {
        return Err(Error::Precondition(format!(
            "parabolic_s: trace of {g} is not 2"
        )));
    }
    let m = g.matrix();
    if m.a().is_one() && m.c().is_zero() {
        return Ok((m.b().clone(), None));
    }
    let witness = BezoutWitness::for_matrix(g);
    let s = parabolic_s_with(g, &witness)?;
    Ok((s, Some(witness)))
}

/// Evaluates `s` from a caller-supplied witness, checking the witness and the
/// integrality of every quotient involved.
pub fn parabolic_s_with(g: &Psl2Elem, w: &BezoutWitness) -> Result<BigInt> {
    if classify(g) != TraceClass::Parabolic {
        return Err(Error::Precondition(format!(
            "parabolic_s: trace of {g} is not 2"
        )));
    }
    let m = g.matrix();
    let a1 = m.a() - 1u32;
    let d1 = m.d() - 1u32;
    if a1.is_zero() && m.c().is_zero() {
        return Err(Error::Precondition(
            "parabolic_s_with: a = 1 and c = 0".into(),
        ));
    }
    if w.u != a1.gcd(m.c()) || &a1 * &w.t - m.c() * &w.r != w.u {
        return Err(Error::Precondition(format!(
            "({}, {}, {}) is not a Bézout witness for {g}",
            w.u, w.r, w.t
        )));
    }
    let exact = |num: BigInt, den: &BigInt| -> Result<BigInt> {
        let (q, rem) = num.div_rem(den);
        if rem.is_zero() {
            Ok(q)
        } else {
            Err(Error::InvariantViolation(format!(
                "parabolic s is not integral ({num}/{den})"
            )))
        }
    };
    let via_a = if a1.is_zero() {
        None
    } else {
        Some(exact(&w.u * (&a1 * &w.r + m.b() * &w.t), &a1)?)
    };
    let via_c = if m.c().is_zero() {
        None
    } else {
        Some(exact(&w.u * (m.c() * &w.r + &d1 * &w.t), m.c())?)
    };
    match (via_a, via_c) {
        (Some(x), Some(y)) if x != y => Err(Error::InvariantViolation(format!(
            "parabolic s formulas disagree: {x} vs {y}"
        ))),
        (Some(x), _) | (None, Some(x)) => Ok(x),
        (None, None) => unreachable!("handled above"),
    }
}

/// The fixed point `κ` of a hyperbolic `g` whose eigenvalue `cκ + d` exceeds 1:
/// `κ = (a − d + √(tr² − 4)) / (2c)`.
pub fn hyperbolic_kappa(g: &Psl2Elem) -> Result<QuadSurd> {
    if classify(g) != TraceClass::Hyperbolic {
        return Err(Error::Precondition(format!(
            "hyperbolic_kappa: {g} is not hyperbolic"
        )));
    }
    let m = g.matrix();
    let trace = m.trace();
    QuadSurd::new(m.a() - m.d(), m.c() * 2u32, &trace * &trace - 4u32)
}

/// Reads the period of `κ(g)` directly off the normal form of `g` (or of `g²`
/// when the normal form starts with `ι`). Returns `None` for shapes outside
/// the four purely periodic cases, e.g. a positive final `bₙ`.
///
/// Each block below starts with an `S`-exponent and is the full period of a
/// purely periodic point in the PSL₂(ℤ)-orbit of `κ(g)`, so it sits at an even
/// index and gives the phase directly.
pub fn symbolic_period(g: &Psl2Elem) -> Option<PhasedPeriod> {
    if classify(g) != TraceClass::Hyperbolic {
        return None;
    }
    let mut nf = psl2_normal_form(g);
    if nf.delta {
        nf = psl2_normal_form(&g.pow(2));
        if nf.delta {
            return None;
        }
    }
    let tail = nf.tail;
    let n = tail.len();
    let (a_first, b_first) = tail.first()?;
    let (a_last, b_last) = tail.last()?;
    if b_last.is_positive() {
        return None;
    }
    let mut block: Vec<BigInt> = Vec::with_capacity(2 * n);
    match (a_first.is_zero(), b_last.is_zero()) {
        (false, false) => {
            for (a, b) in &tail {
                block.push(a.clone());
                block.push(-b);
            }
        }
        // T^{b₁}S^{a₂}⋯S^{aₙ}: rotate S^{aₙ} to the front.
        (true, true) => {
            if n < 2 {
                return None;
            }
            block.push(a_last.clone());
            for (i, (a, b)) in tail[..n - 1].iter().enumerate() {
                if i > 0 {
                    block.push(a.clone());
                }
                block.push(-b);
            }
        }
        // T^{b₁}S^{a₂}⋯S^{aₙ}T^{bₙ}: conjugate by T^{b₁} to merge the ends.
        (true, false) => {
            if n < 2 {
                return None;
            }
            for (a, b) in &tail[1..n - 1] {
                block.push(a.clone());
                block.push(-b);
            }
            block.push(a_last.clone());
            block.push(-(b_last + b_first));
        }
        // S^{a₁}T^{b₁}⋯S^{aₙ}: conjugate by S^{aₙ} to merge the ends.
        (false, true) => {
            if n < 2 {
                return None;
            }
            block.push(a_last + a_first);
            block.push(-b_first);
            for (a, b) in &tail[1..n - 1] {
                block.push(a.clone());
                block.push(-b);
            }
        }
    }
    PhasedPeriod::from_block(&block, 0).ok()
}

/// Period and phase of `κ(g)` from the surd iteration.
pub fn surd_period(g: &Psl2Elem) -> Result<PhasedPeriod> {
    Ok(surd_phased_period(&hyperbolic_kappa(g)?))
}

/// The canonical fundamental period of the expanding fixed point of `g`.
pub fn hyperbolic_period(g: &Psl2Elem) -> Result<PeriodWord> {
    Ok(hyperbolic_phased_period(g)?.period)
}

/// Fundamental period and phase of the expanding fixed point of `g`; the
/// symbolic reading when the normal form allows it, the surd iteration
/// otherwise.
pub fn hyperbolic_phased_period(g: &Psl2Elem) -> Result<PhasedPeriod> {
    if classify(g) != TraceClass::Hyperbolic {
        return Err(Error::Precondition(format!(
            "hyperbolic_period: {g} is not hyperbolic"
        )));
    }
    match symbolic_period(g) {
        Some(period) => Ok(period),
        None => surd_period(g),
    }
}

/// `λ`, with the symbolic values `i`, `ω`, `−ω` encoded as tags. A
/// hyperbolic class is pinned down by its trace, the fundamental period of
/// `κ` and the phase of that period (see [`PhasedPeriod`]); the period alone
/// only determines the class up to a determinant −1 conjugation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ClassInvariant {
    Elliptic2,
    Elliptic3 {
        sign: i8,
    },
    Parabolic {
        s: BigInt,
    },
    Hyperbolic {
        trace: BigInt,
        period: PeriodWord,
        phase: u8,
    },
}

impl fmt::Display for ClassInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassInvariant::Elliptic2 => write!(f, "elliptic (order 2)"),
            ClassInvariant::Elliptic3 { sign } => {
                write!(
                    f,
                    "elliptic (order 3, {})",
                    if *sign > 0 { "+ω" } else { "−ω" }
                )
            }
            ClassInvariant::Parabolic { s } => write!(f, "parabolic s={s}"),
            ClassInvariant::Hyperbolic {
                trace,
                period,
                phase,
            } => {
                write!(f, "hyperbolic trace={trace} period={period} phase={phase}")
            }
        }
    }
}

pub fn lambda_invariant(g: &Psl2Elem) -> ClassInvariant {
    match classify(g) {
        TraceClass::Elliptic0 => ClassInvariant::Elliptic2,
        TraceClass::Elliptic1 => ClassInvariant::Elliptic3 {
            sign: elliptic3_sign(g).expect("trace checked"),
        },
        TraceClass::Parabolic => ClassInvariant::Parabolic {
            s: parabolic_s(g).expect("trace checked").0,
        },
        TraceClass::Hyperbolic => {
            let PhasedPeriod { period, phase } =
                hyperbolic_phased_period(g).expect("trace checked");
            ClassInvariant::Hyperbolic {
                trace: g.trace_abs(),
                period,
                phase,
            }
        }
    }
}

/// `μ = λ·x^ε`, kept as the pair `(λ, ε)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MuInvariant {
    pub cls: ClassInvariant,
    pub eps: BigInt,
}

impl fmt::Display for MuInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} · x^{}", self.cls, self.eps)
    }
}

pub fn mu(word: &BraidWord) -> MuInvariant {
    MuInvariant {
        cls: lambda_invariant(&phi(word)),
        eps: word.exponent_sum(),
    }
}

pub fn conjugate(u: &BraidWord, v: &BraidWord) -> bool {
    mu(u) == mu(v)
}

/// When `φ(u)` and `φ(v)` are conjugate, `u ~ Δ^{2k}v` with
/// `k = (ε(u) − ε(v))/6`; returns that `k`, or `None` otherwise.
pub fn central_twist(u: &BraidWord, v: &BraidWord) -> Result<Option<BigInt>> {
    if lambda_invariant(&phi(u)) != lambda_invariant(&phi(v)) {
        return Ok(None);
    }
    let diff = u.exponent_sum() - v.exponent_sum();
    let (k, rem) = diff.div_rem(&BigInt::from(6));
    if !rem.is_zero() {
        return Err(Error::InvariantViolation(format!(
            "conjugate images with exponent difference {diff} not divisible by 6"
        )));
    }
    Ok(Some(k))
}
