//! Exact 2×2 unimodular matrices, PSL₂(ℤ), and its action on ℙ¹(ℚ).

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::words::{BraidWord, Generator};

/// `[[a, b], [c, d]]` with `ad − bc = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniMat {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl UniMat {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let m = Self {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        };
        let det = m.det();
        if !det.is_one() {
            return Err(Error::Determinant(det.to_string()));
        }
        Ok(m)
    }

    fn from_entries_unchecked(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        let m = Self { a, b, c, d };
        debug_assert!(m.det().is_one(), "determinant drifted from 1");
        m
    }

    pub fn identity() -> Self {
        Self::from_entries_unchecked(BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one())
    }

    /// `Sᵏ = [[1, k], [0, 1]]`.
    pub fn s_pow(k: &BigInt) -> Self {
        Self::from_entries_unchecked(BigInt::one(), k.clone(), BigInt::zero(), BigInt::one())
    }

    /// `Tᵏ = [[1, 0], [−k, 1]]`.
    pub fn t_pow(k: &BigInt) -> Self {
        Self::from_entries_unchecked(BigInt::one(), BigInt::zero(), -k, BigInt::one())
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn inverse(&self) -> Self {
        Self::from_entries_unchecked(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }

    pub fn negate(&self) -> Self {
        Self::from_entries_unchecked(-&self.a, -&self.b, -&self.c, -&self.d)
    }

    /// `self ← self · Sᵏ`.
    pub fn mul_s_pow_assign(&mut self, k: &BigInt) {
        self.b += &self.a * k;
        self.d += &self.c * k;
    }

    /// `self ← self · Tᵏ`.
    pub fn mul_t_pow_assign(&mut self, k: &BigInt) {
        self.a -= &self.b * k;
        self.c -= &self.d * k;
    }

    /// Largest bit length among the four entries.
    pub fn max_bits(&self) -> u64 {
        [&self.a, &self.b, &self.c, &self.d]
            .iter()
            .map(|x| x.bits())
            .max()
            .unwrap_or(0)
    }

    pub fn into_entries(self) -> (BigInt, BigInt, BigInt, BigInt) {
        (self.a, self.b, self.c, self.d)
    }
}

impl Mul for &UniMat {
    type Output = UniMat;

    fn mul(self, rhs: &UniMat) -> UniMat {
        UniMat::from_entries_unchecked(
            &self.a * &rhs.a + &self.b * &rhs.c,
            &self.a * &rhs.b + &self.b * &rhs.d,
            &self.c * &rhs.a + &self.d * &rhs.c,
            &self.c * &rhs.b + &self.d * &rhs.d,
        )
    }
}

impl Mul for UniMat {
    type Output = UniMat;

    fn mul(self, rhs: UniMat) -> UniMat {
        &self * &rhs
    }
}

impl fmt::Display for UniMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// An element of PSL₂(ℤ), stored as the representative with trace > 0, or
/// trace 0 and `c > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Psl2Elem {
    rep: UniMat,
}

impl Psl2Elem {
    pub fn from_mat(m: UniMat) -> Self {
        let trace = m.trace();
        let flip = trace.is_negative() || (trace.is_zero() && m.c.is_negative());
        Self {
            rep: if flip { m.negate() } else { m },
        }
    }

    pub fn identity() -> Self {
        Self::from_mat(UniMat::identity())
    }

    /// `ι = STS`, acting as `z ↦ −1/z`.
    pub fn iota() -> Self {
        Self::from_mat(UniMat::from_entries_unchecked(
            BigInt::zero(),
            BigInt::one(),
            -BigInt::one(),
            BigInt::zero(),
        ))
    }

    pub fn s_pow(k: &BigInt) -> Self {
        Self::from_mat(UniMat::s_pow(k))
    }

    pub fn t_pow(k: &BigInt) -> Self {
        Self::from_mat(UniMat::t_pow(k))
    }

    pub fn matrix(&self) -> &UniMat {
        &self.rep
    }

    pub fn inverse(&self) -> Self {
        Self::from_mat(self.rep.inverse())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = UniMat::identity();
        for _ in 0..n {
            acc = &acc * &self.rep;
        }
        Self::from_mat(acc)
    }

    pub fn conjugate_by(&self, c: &Psl2Elem) -> Self {
        Self::from_mat(&(&c.rep * &self.rep) * &c.rep.inverse())
    }

    /// `|a + d|`.
    pub fn trace_abs(&self) -> BigInt {
        self.rep.trace().abs()
    }

    /// The image of `p` under `z ↦ (az + b)/(cz + d)`.
    pub fn act(&self, p: &ProjPoint) -> ProjPoint {
        let m = &self.rep;
        ProjPoint::normalize(&m.a * &p.num + &m.b * &p.den, &m.c * &p.num + &m.d * &p.den)
    }
}

impl Mul for &Psl2Elem {
    type Output = Psl2Elem;

    fn mul(self, rhs: &Psl2Elem) -> Psl2Elem {
        Psl2Elem::from_mat(&self.rep * &rhs.rep)
    }
}

impl fmt::Display for Psl2Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "±{}", self.rep)
    }
}

/// The homomorphism `B₃ → PSL₂(ℤ)` with `σ₁ ↦ S`, `σ₂ ↦ T`.
pub fn phi(word: &BraidWord) -> Psl2Elem {
    Psl2Elem::from_mat(phi_matrix(word))
}

/// The SL₂(ℤ) product behind [`phi`], before sign canonicalization.
pub fn phi_matrix(word: &BraidWord) -> UniMat {
    let mut m = UniMat::identity();
    for syllable in word.syllables() {
        match syllable.generator() {
            Generator::Sigma1 => m.mul_s_pow_assign(syllable.exponent()),
            Generator::Sigma2 => m.mul_t_pow_assign(syllable.exponent()),
        }
    }
    m
}

/// A point of ℙ¹(ℚ) as a reduced fraction. `∞` is `1/0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    num: BigInt,
    den: BigInt,
}

impl ProjPoint {
    /// Normalizes `[num : den]`. Fails only for `(0, 0)`.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let (num, den) = (num.into(), den.into());
        if num.is_zero() && den.is_zero() {
            return Err(Error::ProjPoint(num.to_string(), den.to_string()));
        }
        Ok(Self::normalize(num, den))
    }

    pub(crate) fn normalize(num: BigInt, den: BigInt) -> Self {
        debug_assert!(!(num.is_zero() && den.is_zero()));
        if den.is_zero() {
            return Self::infinity();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / &g, den / &g);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Self { num, den }
    }

    pub fn infinity() -> Self {
        Self {
            num: BigInt::one(),
            den: BigInt::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::from_int(BigInt::zero())
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self {
            num: n.into(),
            den: BigInt::one(),
        }
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    /// True for finite points `≥ 0`.
    pub fn is_nonnegative_finite(&self) -> bool {
        !self.is_infinite() && !self.num.is_negative()
    }
}

/// `num/den`, with `∞` written as `1/0`.
impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for ProjPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ProjPoint(s.to_string(), String::new());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        Self::new(num, den)
    }
}
