//! The complete word-problem invariant `ρ = (ρ₁, ρ₂, ε)` and the
//! `Δᵏ`-shifted normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cf::simple_cf_odd;
use crate::error::{Error, Result};
use crate::modular::{phi, ProjPoint, Psl2Elem, UniMat};
use crate::words::BraidWord;

/// `ρ₁ = φ(w)·∞`, `ρ₂ = φ(w)·0`, and the exponent sum.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RhoInvariant {
    pub rho1: ProjPoint,
    pub rho2: ProjPoint,
    pub eps: BigInt,
}

impl fmt::Display for RhoInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.rho1, self.rho2, self.eps)
    }
}

/// Reads `ρ` off the columns of `φ(w)`.
pub fn rho(word: &BraidWord) -> RhoInvariant {
    let (a, b, c, d) = phi(word).matrix().clone().into_entries();
    RhoInvariant {
        rho1: ProjPoint::normalize(a, c),
        rho2: ProjPoint::normalize(b, d),
        eps: word.exponent_sum(),
    }
}

pub fn words_equal(u: &BraidWord, v: &BraidWord) -> bool {
    rho(u) == rho(v)
}

/// `g = ι^δ · S^{a₁}T^{b₁}⋯S^{aₙ}T^{bₙ}` in PSL₂(ℤ).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Psl2NormalForm {
    pub delta: bool,
    pub tail: Vec<(BigInt, BigInt)>,
}

/// Normal form in PSL₂(ℤ). `δ` is chosen so that `ι^{−δ}g` sends `0` into
/// `[0, ∞)`; the odd-length simple expansion of that point gives
/// `[a₁, −b₁, …, aₙ]`, and the residual stabilizer of `0` is `T^{bₙ}`.
pub fn psl2_normal_form(g: &Psl2Elem) -> Psl2NormalForm {
    let delta = !g.act(&ProjPoint::zero()).is_nonnegative_finite();
    let h = if delta {
        &Psl2Elem::iota().inverse() * g
    } else {
        g.clone()
    };
    let base = h.act(&ProjPoint::zero());
    let cf = simple_cf_odd(&base).expect("point lies in the fundamental domain");
    let entries = cf.into_entries();

    let mut w = UniMat::identity();
    let mut tail = Vec::with_capacity(entries.len() / 2 + 1);
    for (i, c) in entries.iter().enumerate() {
        if i % 2 == 0 {
            w.mul_s_pow_assign(c);
        } else {
            let b = -c;
            w.mul_t_pow_assign(&b);
            let a = entries[i - 1].clone();
            tail.push((a, b));
        }
    }
    let a_last = entries.last().expect("nonempty").clone();

    // V = W⁻¹·h fixes 0, so V = ±T^{bₙ} = ±[[1, 0], [−bₙ, 1]].
    let v = &w.inverse() * h.matrix();
    debug_assert!(v.b().is_zero() && v.a().abs().is_one() && v.a() == v.d());
    let b_last = -(v.c() * v.d());
    tail.push((a_last, b_last));

    if tail.len() == 1 && tail[0].0.is_zero() && tail[0].1.is_zero() {
        tail.clear();
    }
    Psl2NormalForm { delta, tail }
}

/// `Δᵏ ∏ σ₁^{aᵢ} σ₂^{bᵢ}` with `a₁ ≥ 0`, `aᵢ ≥ 1` for `i ≥ 2`, `bᵢ ≤ −1`
/// for `i < n`, `bₙ` unrestricted, and no lone `(0, 0)` pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    k: BigInt,
    tail: Vec<(BigInt, BigInt)>,
}

impl NormalForm {
    pub fn new(k: BigInt, tail: Vec<(BigInt, BigInt)>) -> Result<Self> {
        check_tail(&tail)?;
        Ok(Self { k, tail })
    }

    pub fn k(&self) -> &BigInt {
        &self.k
    }

    pub fn tail(&self) -> &[(BigInt, BigInt)] {
        &self.tail
    }

    /// `Δᵏ` followed by the tail syllables, free-reduced.
    pub fn to_word(&self) -> BraidWord {
        BraidWord::delta_power(&self.k).concat(&BraidWord::from_syllable_pairs(&self.tail))
    }
}

fn check_tail(tail: &[(BigInt, BigInt)]) -> Result<()> {
    let n = tail.len();
    let bad = |msg: String| {
        Err(Error::InvariantViolation(format!(
            "normal form tail: {msg}"
        )))
    };
    if n == 1 && tail[0].0.is_zero() && tail[0].1.is_zero() {
        return bad("lone (0, 0) pair".into());
    }
    for (i, (a, b)) in tail.iter().enumerate() {
        if i == 0 && a.is_negative() {
            return bad(format!("a₁ = {a} < 0"));
        }
        if i > 0 && !a.is_positive() {
            return bad(format!("a{} = {a} < 1", i + 1));
        }
        if i + 1 < n && !b.is_negative() {
            return bad(format!("b{} = {b} > −1", i + 1));
        }
    }
    Ok(())
}

/// Rendered as `D^k · s1^a1 s2^b1 · …`, or `D^k` for an empty tail.
impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.k)?;
        for (a, b) in &self.tail {
            write!(f, " · s1^{a} s2^{b}")?;
        }
        Ok(())
    }
}

pub fn normal_form(word: &BraidWord) -> Result<NormalForm> {
    let Psl2NormalForm { delta, tail } = psl2_normal_form(&phi(word));
    let tail_eps: BigInt = tail.iter().map(|(a, b)| a + b).sum();
    let (k, rem) = (word.exponent_sum() - tail_eps).div_rem(&BigInt::from(3));
    if !rem.is_zero() {
        return Err(Error::InvariantViolation(format!(
            "exponent difference not divisible by 3 (remainder {rem})"
        )));
    }
    if k.is_odd() != delta {
        return Err(Error::InvariantViolation(format!(
            "Δ power {k} disagrees with parity {}",
            u8::from(delta)
        )));
    }
    NormalForm::new(k, tail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cf::eval_cf;
    use crate::words::parse_word;
    use proptest::prelude::*;

    fn p(text: &str) -> BraidWord {
        parse_word(text).unwrap()
    }

    fn pairs(xs: &[(i64, i64)]) -> Vec<(BigInt, BigInt)> {
        xs.iter()
            .map(|&(a, b)| (BigInt::from(a), BigInt::from(b)))
            .collect()
    }

    fn pt(n: i64, d: i64) -> ProjPoint {
        ProjPoint::new(n, d).unwrap()
    }

    #[test]
    fn rho_examples() {
        assert_eq!(
            rho(&p("a")),
            RhoInvariant {
                rho1: ProjPoint::infinity(),
                rho2: pt(1, 1),
                eps: BigInt::one()
            }
        );
        assert_eq!(
            rho(&p("b")),
            RhoInvariant {
                rho1: pt(-1, 1),
                rho2: pt(0, 1),
                eps: BigInt::one()
            }
        );
        assert_eq!(
            rho(&p("")),
            RhoInvariant {
                rho1: ProjPoint::infinity(),
                rho2: pt(0, 1),
                eps: BigInt::zero()
            }
        );
        assert_eq!(rho(&p("abaaba")).eps, BigInt::from(6));
    }

    #[test]
    fn equality_examples() {
        assert!(words_equal(&p("aba"), &p("bab")));
        assert!(words_equal(&p("aA"), &p("")));
        assert!(!words_equal(&p("a"), &p("b")));
        assert!(words_equal(&p("ababab"), &p("abaaba")));
    }

    #[test]
    fn psl2_normal_form_examples() {
        let nf = psl2_normal_form(&phi(&p("a")));
        assert_eq!(
            nf,
            Psl2NormalForm {
                delta: false,
                tail: pairs(&[(1, 0)])
            }
        );
        let nf = psl2_normal_form(&phi(&p("A")));
        assert_eq!(
            nf,
            Psl2NormalForm {
                delta: true,
                tail: pairs(&[(1, 1)])
            }
        );
        let nf = psl2_normal_form(&phi(&p("aba")));
        assert_eq!(
            nf,
            Psl2NormalForm {
                delta: true,
                tail: vec![]
            }
        );
        let nf = psl2_normal_form(&Psl2Elem::identity());
        assert_eq!(
            nf,
            Psl2NormalForm {
                delta: false,
                tail: vec![]
            }
        );
    }

    #[test]
    fn normal_form_examples() {
        let nf = normal_form(&p("A")).unwrap();
        assert_eq!(
            (nf.k(), nf.tail()),
            (&BigInt::from(-1), &pairs(&[(1, 1)])[..])
        );
        let nf = normal_form(&p("aba")).unwrap();
        assert_eq!((nf.k(), nf.tail()), (&BigInt::one(), &[][..]));
        let nf = normal_form(&p("ab")).unwrap();
        assert_eq!(
            (nf.k(), nf.tail()),
            (&BigInt::zero(), &pairs(&[(1, 1)])[..])
        );
        assert_eq!(nf.to_string(), "D^0 · s1^1 s2^1");
        assert_eq!(normal_form(&p("abaaba")).unwrap().to_string(), "D^2");
    }

    #[test]
    fn normal_form_to_word_examples() {
        let nf = NormalForm::new(BigInt::from(-1), pairs(&[(1, 1)])).unwrap();
        assert!(words_equal(&nf.to_word(), &p("A")));
        assert!(NormalForm::new(BigInt::zero(), vec![])
            .unwrap()
            .to_word()
            .is_empty());
        assert_eq!(
            NormalForm::new(BigInt::from(2), vec![]).unwrap().to_word(),
            p("abaaba").free_reduce()
        );
    }

    #[test]
    fn malformed_tails_are_rejected() {
        for bad in [
            &[(0, 0)][..],
            &[(-1, 2)],
            &[(1, 0), (2, 1)],
            &[(1, -1), (0, 1)],
        ] {
            assert!(matches!(
                NormalForm::new(BigInt::zero(), pairs(bad)),
                Err(Error::InvariantViolation(_))
            ));
        }
        assert!(NormalForm::new(BigInt::zero(), pairs(&[(0, 5)])).is_ok());
        assert!(NormalForm::new(BigInt::zero(), pairs(&[(0, -1), (3, 7)])).is_ok());
    }

    fn arb_word() -> impl Strategy<Value = BraidWord> {
        prop::collection::vec((1u8..=2, -3i64..=3), 0..24)
            .prop_map(|pairs| BraidWord::from_pairs(pairs).unwrap())
    }

    proptest! {
        #[test]
        fn normal_form_is_valid_and_equal(word in arb_word()) {
            let nf = normal_form(&word).unwrap();
            prop_assert!(check_tail(nf.tail()).is_ok());
            prop_assert_eq!(rho(&nf.to_word()), rho(&word));
            prop_assert_eq!(normal_form(&nf.to_word()).unwrap(), nf);
        }

        #[test]
        fn rho_matches_continued_fractions(word in arb_word()) {
            let pairs = word.syllable_pairs();
            let mut entries = Vec::new();
            for (a, b) in &pairs {
                entries.push(a.clone());
                entries.push(-b);
            }
            let r = rho(&word);
            if pairs.is_empty() {
                prop_assert_eq!(r.rho1, ProjPoint::infinity());
                prop_assert_eq!(r.rho2, ProjPoint::zero());
            } else {
                prop_assert_eq!(&r.rho1, &eval_cf(&entries));
                entries.pop();
                prop_assert_eq!(&r.rho2, &eval_cf(&entries));
            }
        }

        #[test]
        fn central_square_shifts_eps_by_six(word in arb_word()) {
            let base = rho(&word);
            let shifted = rho(&p("abaaba").concat(&word));
            prop_assert_eq!(shifted.rho1, base.rho1);
            prop_assert_eq!(shifted.rho2, base.rho2);
            prop_assert_eq!(shifted.eps, base.eps + 6);
        }
    }
}
