//! Words in the Artin generators of B3.
//!
//! A word is kept as a sequence of syllables `σᵢ^k` with arbitrary-precision
//! exponents, so `a^1000000000` costs one syllable rather than a billion
//! letters.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, ParseError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Sigma1,
    Sigma2,
}

impl Generator {
    pub fn index(self) -> u8 {
        match self {
            Generator::Sigma1 => 1,
            Generator::Sigma2 => 2,
        }
    }

    pub fn from_index(index: u8) -> Option<Self> {
        match index {
            1 => Some(Generator::Sigma1),
            2 => Some(Generator::Sigma2),
            _ => None,
        }
    }

    pub fn other(self) -> Self {
        match self {
            Generator::Sigma1 => Generator::Sigma2,
            Generator::Sigma2 => Generator::Sigma1,
        }
    }

    fn letters(self) -> (char, char) {
        match self {
            Generator::Sigma1 => ('a', 'A'),
            Generator::Sigma2 => ('b', 'B'),
        }
    }
}

/// `σᵢ^k` with `k ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Syllable {
    generator: Generator,
    exponent: BigInt,
}

impl Syllable {
    pub fn new(generator: Generator, exponent: impl Into<BigInt>) -> Result<Self> {
        let exponent = exponent.into();
        if exponent.is_zero() {
            return Err(Error::Precondition(
                "syllable exponent must be nonzero".into(),
            ));
        }
        Ok(Self {
            generator,
            exponent,
        })
    }

    pub fn generator(&self) -> Generator {
        self.generator
    }

    pub fn exponent(&self) -> &BigInt {
        &self.exponent
    }

    fn inverse(&self) -> Self {
        Self {
            generator: self.generator,
            exponent: -&self.exponent,
        }
    }
}

/// A finite word in `σ₁^±1, σ₂^±1`. The empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BraidWord {
    syllables: Vec<Syllable>,
}

impl BraidWord {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a word from syllables as given, without reduction.
    pub fn from_syllables(syllables: Vec<Syllable>) -> Self {
        Self { syllables }
    }

    /// Convenience constructor from `(generator index, exponent)` pairs.
    /// Zero exponents are dropped; indices other than 1 and 2 are rejected.
    pub fn from_pairs<I, E>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u8, E)>,
        E: Into<BigInt>,
    {
        let mut syllables = Vec::new();
        for (index, exp) in pairs {
            let generator = Generator::from_index(index).ok_or_else(|| {
                Error::Precondition(format!("generator index {index} is not 1 or 2"))
            })?;
            let exp = exp.into();
            if !exp.is_zero() {
                syllables.push(Syllable {
                    generator,
                    exponent: exp,
                });
            }
        }
        Ok(Self { syllables })
    }

    /// The Garside element `Δ = σ₁σ₂σ₁`.
    pub fn delta() -> Self {
        Self::from_pairs([(1, 1), (2, 1), (1, 1)]).expect("static word")
    }

    /// `Δ^k` as an explicit word.
    pub fn delta_power(k: &BigInt) -> Self {
        let unit = if k.is_negative() {
            Self::delta().inverse()
        } else {
            Self::delta()
        };
        let mut syllables = Vec::new();
        let mut remaining = k.abs();
        while remaining.is_positive() {
            syllables.extend(unit.syllables.iter().cloned());
            remaining -= 1;
        }
        Self { syllables }
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters, i.e. the sum of `|exponent|` over syllables.
    pub fn letter_length(&self) -> BigInt {
        self.syllables.iter().map(|s| s.exponent.abs()).sum()
    }

    /// The abelianization `ε`: the sum of all exponents.
    pub fn exponent_sum(&self) -> BigInt {
        self.syllables.iter().map(|s| &s.exponent).sum()
    }

    pub fn is_reduced(&self) -> bool {
        self.syllables
            .windows(2)
            .all(|pair| pair[0].generator != pair[1].generator)
    }

    /// Free reduction: merges neighbouring syllables on the same generator
    /// and removes the ones that cancel, cascading as needed.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<Syllable> = Vec::with_capacity(self.syllables.len());
        for syllable in &self.syllables {
            push_reduced(&mut out, syllable.clone());
        }
        Self { syllables: out }
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut out = self.free_reduce().syllables;
        for syllable in &other.syllables {
            push_reduced(&mut out, syllable.clone());
        }
        Self { syllables: out }
    }

    pub fn inverse(&self) -> Self {
        Self {
            syllables: self.syllables.iter().rev().map(Syllable::inverse).collect(),
        }
    }

    /// `c · self · c⁻¹`, free-reduced.
    pub fn conjugate_by(&self, c: &Self) -> Self {
        c.concat(self).concat(&c.inverse())
    }

    /// Splits the word into the pairs `(aᵢ, bᵢ)` of `∏ σ₁^{aᵢ} σ₂^{bᵢ}`,
    /// after free reduction. A leading `σ₂` gives `a₁ = 0`, a trailing `σ₁`
    /// gives `bₙ = 0`. The empty word gives no pairs.
    pub fn syllable_pairs(&self) -> Vec<(BigInt, BigInt)> {
        let reduced = self.free_reduce();
        let mut pairs = Vec::new();
        let mut iter = reduced.syllables.into_iter().peekable();
        while let Some(first) = iter.next() {
            match first.generator {
                Generator::Sigma1 => {
                    let b = match iter.peek() {
                        Some(next) if next.generator == Generator::Sigma2 => {
                            iter.next().expect("peeked").exponent
                        }
                        _ => BigInt::zero(),
                    };
                    pairs.push((first.exponent, b));
                }
                Generator::Sigma2 => pairs.push((BigInt::zero(), first.exponent)),
            }
        }
        pairs
    }

    /// Inverse of [`BraidWord::syllable_pairs`]: `∏ σ₁^{aᵢ} σ₂^{bᵢ}`, free-reduced.
    pub fn from_syllable_pairs<'a, I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = &'a (BigInt, BigInt)>,
    {
        let mut out = Vec::new();
        for (a, b) in pairs {
            if !a.is_zero() {
                push_reduced(
                    &mut out,
                    Syllable::new(Generator::Sigma1, a.clone()).expect("nonzero"),
                );
            }
            if !b.is_zero() {
                push_reduced(
                    &mut out,
                    Syllable::new(Generator::Sigma2, b.clone()).expect("nonzero"),
                );
            }
        }
        Self { syllables: out }
    }

    /// Renders with the explicit grammar, e.g. `s1^3 s2^-2`.
    pub fn render_explicit(&self) -> String {
        let tokens: Vec<String> = self
            .syllables
            .iter()
            .map(|s| {
                if s.exponent.is_one() {
                    format!("s{}", s.generator.index())
                } else {
                    format!("s{}^{}", s.generator.index(), s.exponent)
                }
            })
            .collect();
        tokens.join(" ")
    }
}

fn push_reduced(out: &mut Vec<Syllable>, syllable: Syllable) {
    if let Some(last) = out.last_mut() {
        if last.generator == syllable.generator {
            last.exponent += syllable.exponent;
            if last.exponent.is_zero() {
                out.pop();
            }
            return;
        }
    }
    out.push(syllable);
}

/// Compact rendering: `a`, `A`, `a^5`, `A^5` (the latter meaning `σ₁^-5`).
impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.syllables {
            let (pos, neg) = s.generator.letters();
            let letter = if s.exponent.is_positive() { pos } else { neg };
            let magnitude = s.exponent.abs();
            if magnitude.is_one() {
                write!(f, "{letter}")?;
            } else {
                write!(f, "{letter}^{magnitude}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_word(s)
    }
}

/// Parses either grammar (or a mix of both):
///
/// ```text
/// compact:  word := (letter exp?)*   letter := a | A | b | B
/// explicit: (s1 | s2) exp?  separated by whitespace
/// exp := '^' '-'? digit+
/// ```
///
/// Whitespace is ignored. Zero exponents produce no syllable. The result is
/// not free-reduced.
pub fn parse_word(text: &str) -> Result<BraidWord, ParseError> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut syllables = Vec::new();
    while pos < bytes.len() {
        let ch = bytes[pos];
        if ch.is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        let start = pos;
        let (generator, sign) = match ch {
            b'a' => (Generator::Sigma1, 1),
            b'A' => (Generator::Sigma1, -1),
            b'b' => (Generator::Sigma2, 1),
            b'B' => (Generator::Sigma2, -1),
            b's' => {
                pos += 1;
                match bytes.get(pos) {
                    Some(b'1') => (Generator::Sigma1, 1),
                    Some(b'2') => (Generator::Sigma2, 1),
                    _ => return Err(ParseError::new(pos, "expected '1' or '2' after 's'")),
                }
            }
            _ => {
                let found = text[pos..].chars().next().expect("in bounds");
                return Err(ParseError::new(
                    pos,
                    format!("unexpected character {found:?}"),
                ));
            }
        };
        pos += 1;
        let mut exponent = BigInt::from(sign);
        if bytes.get(pos) == Some(&b'^') {
            pos += 1;
            let negative = bytes.get(pos) == Some(&b'-');
            if negative {
                pos += 1;
            }
            let digits_start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if digits_start == pos {
                return Err(ParseError::new(pos, "expected digits after '^'"));
            }
            let magnitude: BigInt = text[digits_start..pos].parse().expect("ascii digits");
            exponent *= if negative { -magnitude } else { magnitude };
        }
        if exponent.is_zero() {
            continue;
        }
        debug_assert!(start < pos);
        syllables.push(Syllable {
            generator,
            exponent,
        });
    }
    Ok(BraidWord { syllables })
}

/// A word of `length` letters drawn uniformly and independently from
/// `{a, A, b, B}`. Deterministic in `seed`; one syllable per letter, so the
/// result is generally not free-reduced.
pub fn random_word(length: usize, seed: u64) -> BraidWord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_word_with(length, &mut rng)
}

pub fn random_word_with<R: Rng + ?Sized>(length: usize, rng: &mut R) -> BraidWord {
    let syllables = (0..length)
        .map(|_| {
            let (generator, exp) = match rng.gen_range(0..4u8) {
                0 => (Generator::Sigma1, 1),
                1 => (Generator::Sigma1, -1),
                2 => (Generator::Sigma2, 1),
                _ => (Generator::Sigma2, -1),
            };
            Syllable {
                generator,
                exponent: BigInt::from(exp),
            }
        })
        .collect();
    BraidWord { syllables }
}
