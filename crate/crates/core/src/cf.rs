//! Continued fractions: finite evaluation over ℙ¹, odd-length simple
//! expansions of rationals, and the periodic expansion of real quadratic
//! irrationals together with their canonical period.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::modular::{ProjPoint, UniMat};

/// `[c₀, c₁, …, cₙ]` with `cᵢ ≠ 0` for `i ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteCf {
    entries: Vec<BigInt>,
}

impl FiniteCf {
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::ContinuedFraction("no entries".into()));
        }
        if let Some(i) = entries.iter().skip(1).position(Zero::is_zero) {
            return Err(Error::ContinuedFraction(format!("entry {} is zero", i + 1)));
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.entries
    }

    pub fn eval(&self) -> ProjPoint {
        eval_cf(&self.entries)
    }
}

/// Evaluates `[c₀, …, cₙ]` right to left over ℙ¹ with `1/0 = ∞` and
/// `1/∞ = 0`. Total on any integer entries, including zeros; an empty slice
/// evaluates to `0`.
pub fn eval_cf(entries: &[BigInt]) -> ProjPoint {
    apply_cf(entries, &ProjPoint::zero())
}

/// The map `z ↦ [c₀, …, cₙ + z]`. With no entries this is the identity.
pub fn apply_cf(entries: &[BigInt], z: &ProjPoint) -> ProjPoint {
    let Some((last, rest)) = entries.split_last() else {
        return z.clone();
    };
    // [num : den] = cₙ + z
    let mut num = last * z.den() + z.num();
    let mut den = z.den().clone();
    for c in rest.iter().rev() {
        // c + 1/(num/den) = (c·num + den)/num
        let next_num = c * &num + &den;
        den = std::mem::replace(&mut num, next_num);
    }
    ProjPoint::normalize(num, den)
}

/// The simple continued fraction of a rational `p ≥ 0` with an odd number of
/// entries: `c₀ ≥ 0` and `cᵢ ≥ 1` afterwards.
pub fn simple_cf_odd(p: &ProjPoint) -> Result<FiniteCf> {
    if p.is_infinite() {
        return Err(Error::Precondition("simple_cf_odd: input is ∞".into()));
    }
    if p.num().is_negative() {
        return Err(Error::Precondition(format!(
            "simple_cf_odd: input {p} is negative"
        )));
    }
    let mut entries = euclid_expansion(p.num(), p.den());
    if entries.len().is_multiple_of(2) {
        let last = entries.pop().expect("even length ≥ 2");
        if last > BigInt::one() {
            entries.push(last - 1u32);
            entries.push(BigInt::one());
        } else {
            *entries.last_mut().expect("even length ≥ 2") += 1u32;
        }
    }
    FiniteCf::new(entries)
}

fn euclid_expansion(num: &BigInt, den: &BigInt) -> Vec<BigInt> {
    let (mut num, mut den) = (num.clone(), den.clone());
    let mut entries = Vec::new();
    loop {
        let (q, r) = num.div_mod_floor(&den);
        entries.push(q);
        if r.is_zero() {
            return entries;
        }
        num = std::mem::replace(&mut den, r);
    }
}

/// The real quadratic irrational `(P + √D) / Q` with `D > 0` not a square,
/// `Q ≠ 0`, and `Q | D − P²`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadSurd {
    p: BigInt,
    q: BigInt,
    d: BigInt,
}

impl QuadSurd {
    /// Builds `(P + √D)/Q`. When `Q ∤ D − P²` the triple is rescaled to
    /// `(P|Q|, Q|Q|, DQ²)`, which denotes the same number.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Self> {
        let (p, q, d) = (p.into(), q.into(), d.into());
        if q.is_zero() {
            return Err(Error::Surd("denominator is zero".into()));
        }
        if !d.is_positive() {
            return Err(Error::Surd(format!("radicand {d} is not positive")));
        }
        let root = d.sqrt();
        if &root * &root == d {
            return Err(Error::Surd(format!("radicand {d} is a perfect square")));
        }
        if (&d - &p * &p).is_multiple_of(&q) {
            return Ok(Self { p, q, d });
        }
        let scale = q.abs();
        let d = d * &scale * &scale;
        Ok(Self {
            p: p * &scale,
            q: q * scale,
            d,
        })
    }

    /// Builds `(P − √D)/Q`, stored as `(−P + √D)/(−Q)`.
    pub fn from_negative_root(
        p: impl Into<BigInt>,
        q: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let (p, q) = (p.into(), q.into());
        Self::new(-p, -q, d)
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }
    pub fn q(&self) -> &BigInt {
        &self.q
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    /// `⌊(P + √D)/Q⌋`, exactly.
    pub fn floor(&self) -> BigInt {
        let root = self.d.sqrt();
        if self.q.is_positive() {
            (&self.p + root).div_floor(&self.q)
        } else {
            (&self.p + root + 1u32).div_floor(&self.q)
        }
    }

    /// Compares this number with the rational `num/den`.
    pub fn cmp_rational(&self, num: &BigInt, den: &BigInt) -> Ordering {
        assert!(!den.is_zero(), "rational with zero denominator");
        let (num, den) = if den.is_negative() {
            (-num, -den)
        } else {
            (num.clone(), den.clone())
        };
        // (P + √D)/Q  vs  num/den   ⇔   √D  vs  (num·Q − P·den)/den, flipped if Q < 0.
        let rhs = &num * &self.q - &self.p * &den;
        let root_vs = if rhs.is_negative() {
            Ordering::Greater
        } else {
            (&self.d * &den * &den).cmp(&(&rhs * &rhs))
        };
        if self.q.is_negative() {
            root_vs.reverse()
        } else {
            root_vs
        }
    }

    /// The image under `z ↦ (az + b)/(cz + d)`.
    pub fn transform(&self, m: &UniMat) -> Self {
        // (a·x + b)/(c·x + d) with x = (P + √D)/Q becomes (X + Q√D)/N after
        // rationalizing, where N = (cP + dQ)² − c²D.
        let lin_num = m.a() * &self.p + m.b() * &self.q;
        let lin_den = m.c() * &self.p + m.d() * &self.q;
        let n = &lin_den * &lin_den - m.c() * m.c() * &self.d;
        let x = &lin_num * &lin_den - m.a() * m.c() * &self.d;
        let d = &self.q * &self.q * &self.d;
        let surd = if self.q.is_positive() {
            Self::new(x, n, d)
        } else {
            Self::new(-x, -n, d)
        };
        surd.expect("image of an irrational is irrational")
    }

    /// The expansion `[preperiod; period, period, …]`, see [`surd_cf_period`].
    pub fn cf_period(&self) -> (Vec<BigInt>, PeriodWord) {
        surd_cf_period(self)
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + √{})/{}", self.p, self.d, self.q)
    }
}

/// Runs the classical surd iteration `c = ⌊(P+√D)/Q⌋`, `P′ = cQ − P`,
/// `Q′ = (D − P′²)/Q` until a state `(P, Q)` repeats, and returns the
/// entries before the cycle together with the canonical period.
pub fn surd_cf_period(x: &QuadSurd) -> (Vec<BigInt>, PeriodWord) {
    let (pre, block) = surd_cf_expansion(x);
    let period =
        PeriodWord::canonical(&block).expect("tail entries of a surd expansion are positive");
    (pre, period)
}

/// The canonical period of `x` with the phase of its canonical rotation.
pub fn surd_phased_period(x: &QuadSurd) -> PhasedPeriod {
    let (pre, block) = surd_cf_expansion(x);
    PhasedPeriod::from_block(&block, pre.len())
        .expect("tail entries of a surd expansion are positive")
}

/// Preperiod and the repeating block exactly as the iteration emits them,
/// so that `x = [pre; block, block, …]`.
pub fn surd_cf_expansion(x: &QuadSurd) -> (Vec<BigInt>, Vec<BigInt>) {
    let d = &x.d;
    let root = d.sqrt();
    let mut p = x.p.clone();
    let mut q = x.q.clone();
    let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();
    let mut entries: Vec<BigInt> = Vec::new();
    loop {
        match seen.entry((p.clone(), q.clone())) {
            std::collections::hash_map::Entry::Occupied(slot) => {
                let block = entries.split_off(*slot.get());
                return (entries, block);
            }
            std::collections::hash_map::Entry::Vacant(slot) => {
                slot.insert(entries.len());
            }
        }
        let c = if q.is_positive() {
            (&p + &root).div_floor(&q)
        } else {
            (&p + &root + 1u32).div_floor(&q)
        };
        let next_p = &c * &q - &p;
        let next_q = (d - &next_p * &next_p) / &q;
        entries.push(c);
        p = next_p;
        q = next_q;
    }
}

/// Index of the lexicographically least rotation, in linear time.
pub fn least_rotation_index<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        match s[(i + k) % n].cmp(&s[(j + k) % n]) {
            Ordering::Equal => k += 1,
            Ordering::Greater => {
                i += k + 1;
                if i == j {
                    i += 1;
                }
                k = 0;
            }
            Ordering::Less => {
                j += k + 1;
                if i == j {
                    j += 1;
                }
                k = 0;
            }
        }
    }
    i.min(j)
}

pub fn least_rotation<T: Ord + Clone>(s: &[T]) -> Vec<T> {
    let start = least_rotation_index(s);
    s[start..].iter().chain(&s[..start]).cloned().collect()
}

/// Shortest block `b` such that `s` is `b` repeated.
pub fn primitive_period<T: Eq + Clone>(s: &[T]) -> Vec<T> {
    let n = s.len();
    if n == 0 {
        return Vec::new();
    }
    // Prefix function; the smallest period is n − border(n).
    let mut border = vec![0usize; n];
    for i in 1..n {
        let mut k = border[i - 1];
        while k > 0 && s[i] != s[k] {
            k = border[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        border[i] = k;
    }
    let period = n - border[n - 1];
    if n.is_multiple_of(period) {
        s[..period].to_vec()
    } else {
        s.to_vec()
    }
}

/// A primitive period of positive entries in its least rotation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PeriodWord {
    entries: Vec<BigInt>,
}

impl PeriodWord {
    /// Canonicalizes any full period of a purely periodic tail.
    pub fn canonical(block: &[BigInt]) -> Result<Self> {
        Ok(PhasedPeriod::from_block(block, 0)?.period)
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }
}

/// A canonical period together with the parity of the index at which the
/// canonical rotation starts in the expansion it came from.
///
/// Dropping one leading entry of an expansion is a change of variable of
/// determinant −1, so when the period has even length this parity separates
/// PSL₂(ℤ)-orbits that share a period: `1 + √3 = [2; 1, 2, …]` and
/// `(1 + √3)/2 = [1; 2, 1, …]` both have period `[1, 2]` but phases 1 and 0.
/// An odd-length period lets any shift be undone by a full turn, and its phase
/// is always 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PhasedPeriod {
    pub period: PeriodWord,
    pub phase: u8,
}

impl PhasedPeriod {
    /// `block` is a full period whose first entry sits at index `start` of
    /// the expansion.
    pub fn from_block(block: &[BigInt], start: usize) -> Result<Self> {
        if block.is_empty() {
            return Err(Error::ContinuedFraction("empty period".into()));
        }
        if let Some(bad) = block.iter().find(|c| !c.is_positive()) {
            return Err(Error::ContinuedFraction(format!(
                "period entry {bad} is not positive"
            )));
        }
        let primitive = primitive_period(block);
        let shift = least_rotation_index(&primitive);
        let phase = if primitive.len().is_multiple_of(2) {
            ((start + shift) % 2) as u8
        } else {
            0
        };
        let entries = primitive[shift..]
            .iter()
            .chain(&primitive[..shift])
            .cloned()
            .collect();
        Ok(Self {
            period: PeriodWord { entries },
            phase,
        })
    }

    /// Checks that `phase` is 0 or 1, and 0 for odd-length periods.
    pub fn new(period: PeriodWord, phase: u8) -> Result<Self> {
        if phase > 1 || (phase == 1 && period.entries.len() % 2 == 1) {
            return Err(Error::ContinuedFraction(format!(
                "phase {phase} is invalid for period {period}"
            )));
        }
        Ok(Self { period, phase })
    }

    /// The invariant of the image under a determinant −1 change of variable.
    pub fn mirrored(&self) -> Self {
        let phase = if self.period.entries.len().is_multiple_of(2) {
            1 - self.phase
        } else {
            0
        };
        Self {
            period: self.period.clone(),
            phase,
        }
    }
}

impl fmt::Display for PhasedPeriod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} phase {}", self.period, self.phase)
    }
}

impl fmt::Display for PeriodWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}
