//! Word and conjugacy problems in the braid group B₃.
//!
//! B₃ maps onto PSL₂(ℤ) by `σ₁ ↦ S = [[1,1],[0,1]]`, `σ₂ ↦ T = [[1,0],[−1,1]]`
//! with kernel generated by the central element `Δ²`. A braid is determined
//! by the two points `φ(w)·∞`, `φ(w)·0` of ℙ¹(ℚ) together with its exponent
//! sum ([`rho`]); its conjugacy class is determined by the conjugacy class of
//! `φ(w)` in PSL₂(ℤ) together with the exponent sum ([`mu`]). Hyperbolic
//! classes are recognised by the trace and the periodic continued fraction of
//! the expanding fixed point, including the parity of where its period starts
//! ([`PhasedPeriod`]).
//!
//! ```
//! use braid3::{conjugate, parse_word, words_equal};
//!
//! let aba = parse_word("aba").unwrap();
//! let bab = parse_word("bab").unwrap();
//! assert!(words_equal(&aba, &bab));
//!
//! let a = parse_word("a").unwrap();
//! let b = parse_word("b").unwrap();
//! assert!(!words_equal(&a, &b));
//! assert!(conjugate(&a, &b));
//! ```

pub mod bench;
pub mod cf;
pub mod cli;
pub mod conjugacy;
pub mod error;
pub mod json;
pub mod modular;
pub mod oracle;
pub mod word_problem;
pub mod words;

pub use cf::{
    eval_cf, least_rotation, primitive_period, simple_cf_odd, surd_cf_expansion, surd_cf_period,
    surd_phased_period, FiniteCf, PeriodWord, PhasedPeriod, QuadSurd,
};
pub use conjugacy::{
    central_twist, classify, conjugate, elliptic3_sign, hyperbolic_kappa, hyperbolic_period,
    hyperbolic_phased_period, lambda_invariant, mu, parabolic_s, BezoutWitness, ClassInvariant,
    MuInvariant, TraceClass,
};
pub use error::{Error, ParseError, Result};
pub use modular::{phi, ProjPoint, Psl2Elem, UniMat};
pub use oracle::conjugator_search_oracle;
pub use word_problem::{
    normal_form, psl2_normal_form, rho, words_equal, NormalForm, Psl2NormalForm, RhoInvariant,
};
pub use words::{parse_word, random_word, BraidWord, Generator, Syllable};
