//! Exhaustive conjugator search, used as an independent check on `μ`.
//!
//! Nothing here consults `λ` or `μ`: a candidate `c` is accepted when
//! `φ(c)φ(u)φ(c)⁻¹ = φ(v)` and `ε(u) = ε(v)`, which by injectivity of `ρ` is
//! exactly `c·u·c⁻¹ = v` in B₃. The cost is exponential in `max_len`.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::modular::{phi, Psl2Elem};
use crate::words::{parse_word, BraidWord};

const LETTERS: [&str; 4] = ["a", "A", "b", "B"];

/// All words over `{a, A, b, B}` with at most `max_len` letters, in shortlex
/// order (`a < A < b < B`), starting with the empty word. Words containing a
/// cancelling pair are included.
pub fn words_up_to(max_len: usize) -> Vec<BraidWord> {
    words_text_up_to(max_len)
        .iter()
        .map(|text| parse_word(text).expect("generated text parses"))
        .collect()
}

fn words_text_up_to(max_len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut frontier = vec![String::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(frontier.len() * 4);
        for prefix in &frontier {
            for letter in LETTERS {
                next.push(format!("{prefix}{letter}"));
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Precomputed `(c, φ(c), φ(c)⁻¹)` for every candidate conjugator up to a
/// length, reusable across many searches.
pub struct ConjugatorTable {
    entries: Vec<(BraidWord, Psl2Elem, Psl2Elem)>,
}

impl ConjugatorTable {
    pub fn new(max_len: usize) -> Self {
        let entries = words_up_to(max_len)
            .into_par_iter()
            .map(|c| {
                let image = phi(&c);
                let inverse = image.inverse();
                (c, image, inverse)
            })
            .collect();
        Self { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// First conjugator in shortlex order with `c·u·c⁻¹ = v`, if any.
    pub fn find(&self, u: &BraidWord, v: &BraidWord) -> Option<BraidWord> {
        if u.exponent_sum() != v.exponent_sum() {
            return None;
        }
        let (gu, gv) = (phi(u), phi(v));
        self.entries
            .par_iter()
            .find_first(|(_, c, c_inv)| &(c * &gu) * c_inv == gv)
            .map(|(word, _, _)| word.clone())
    }

    /// `{φ(c·u·c⁻¹)}` over the table. Two words `u`, `v` with equal exponent
    /// sum are related by a tabled conjugator iff `φ(v)` is in this set.
    pub fn conjugate_images(&self, u: &BraidWord) -> HashSet<Psl2Elem> {
        let gu = phi(u);
        self.entries
            .iter()
            .map(|(_, c, c_inv)| &(c * &gu) * c_inv)
            .collect()
    }
}

/// Breadth-first search over conjugators of at most `max_len` letters.
pub fn conjugator_search_oracle(u: &BraidWord, v: &BraidWord, max_len: usize) -> Option<BraidWord> {
    ConjugatorTable::new(max_len).find(u, v)
}
