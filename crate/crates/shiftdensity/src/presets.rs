//! The recurring example systems: standard shifts and morphisms used by the
//! CLI fixtures, the probes and the test suites.

use std::sync::Arc;

use crate::algebra::{FiniteGroup, GroupMorphism};
use crate::shifts::ShiftSpec;
use crate::words::Alphabet;

/// Fibonacci substitution `a ↦ ab, b ↦ a`.
pub fn fibonacci() -> ShiftSpec {
    let a = Alphabet::from_chars("ab");
    ShiftSpec::substitution(
        a.clone(),
        vec![a.parse_word("ab").unwrap(), a.parse_word("a").unwrap()],
    )
    .unwrap()
}

/// Thue–Morse substitution `a ↦ ab, b ↦ ba`.
pub fn thue_morse() -> ShiftSpec {
    let a = Alphabet::from_chars("ab");
    ShiftSpec::substitution(
        a.clone(),
        vec![a.parse_word("ab").unwrap(), a.parse_word("ba").unwrap()],
    )
    .unwrap()
}

/// Golden mean SFT: binary sequences avoiding `bb`.
pub fn golden_mean() -> ShiftSpec {
    let a = Alphabet::from_chars("ab");
    ShiftSpec::sft(a.clone(), 1, vec![a.parse_word("bb").unwrap()]).unwrap()
}

/// Full shift on two letters.
pub fn full_two_shift() -> ShiftSpec {
    ShiftSpec::sft(Alphabet::from_chars("ab"), 1, vec![]).unwrap()
}

/// Three-point orbit of `(abc)^∞`.
pub fn periodic_abc() -> ShiftSpec {
    let a = Alphabet::from_chars("abc");
    ShiftSpec::periodic(a.clone(), a.parse_word("abc").unwrap()).unwrap()
}

/// Irreducible but not strongly irreducible 1-step SFT on `{a,b,c}`
/// avoiding `ca, ab, bb, cc`.
pub fn not_si() -> ShiftSpec {
    let a = Alphabet::from_chars("abc");
    ShiftSpec::sft(
        a.clone(),
        1,
        ["ca", "ab", "bb", "cc"].iter().map(|w| a.parse_word(w).unwrap()).collect(),
    )
    .unwrap()
}

/// Three-letter substitution `a ↦ aab, b ↦ acb, c ↦ ba` whose skew product
/// with `S₃` has three minimal subsets.
pub fn unimodular() -> ShiftSpec {
    let a = Alphabet::from_chars("abc");
    ShiftSpec::substitution(
        a.clone(),
        vec![
            a.parse_word("aab").unwrap(),
            a.parse_word("acb").unwrap(),
            a.parse_word("ba").unwrap(),
        ],
    )
    .unwrap()
}

/// Four-letter substitution `a ↦ baa, b ↦ adc, c ↦ cdc, d ↦ ad`, invertible
/// with `φ∘σ = φ` for the parity morphism below.
pub fn four_letter() -> ShiftSpec {
    let a = Alphabet::from_chars("abcd");
    ShiftSpec::substitution(
        a.clone(),
        vec![
            a.parse_word("baa").unwrap(),
            a.parse_word("adc").unwrap(),
            a.parse_word("cdc").unwrap(),
            a.parse_word("ad").unwrap(),
        ],
    )
    .unwrap()
}

/// Parity morphism `a ↦ 1, b ↦ 0` on a two-letter alphabet into ℤ/2ℤ.
pub fn parity_ab_z2() -> GroupMorphism {
    let g = Arc::new(FiniteGroup::cyclic(2).unwrap());
    GroupMorphism::new(g, Alphabet::from_chars("ab"), vec![1, 0]).unwrap()
}

/// `a, b ↦ 1, c ↦ 0` into ℤ/2ℤ on `{a,b,c}`.
pub fn abc_z2() -> GroupMorphism {
    let g = Arc::new(FiniteGroup::cyclic(2).unwrap());
    GroupMorphism::new(g, Alphabet::from_chars("abc"), vec![1, 1, 0]).unwrap()
}

/// `a ↦ (1 2), b ↦ (1 3)` into S₃ on `{a,b}`.
pub fn fibonacci_s3_morphism() -> GroupMorphism {
    let g = Arc::new(FiniteGroup::symmetric(3).unwrap());
    let a = g.element_by_label("(1 2)").unwrap();
    let b = g.element_by_label("(1 3)").unwrap();
    GroupMorphism::new(g, Alphabet::from_chars("ab"), vec![a, b]).unwrap()
}

/// `a, c ↦ (1 2 3), b ↦ (1 2)` into S₃ on `{a,b,c}`.
pub fn unimodular_s3_morphism() -> GroupMorphism {
    let g = Arc::new(FiniteGroup::symmetric(3).unwrap());
    let cyc = g.element_by_label("(1 2 3)").unwrap();
    let t = g.element_by_label("(1 2)").unwrap();
    GroupMorphism::new(g, Alphabet::from_chars("abc"), vec![cyc, t, cyc]).unwrap()
}

/// `a, b ↦ 0, c, d ↦ 1` into ℤ/2ℤ on `{a,b,c,d}`.
pub fn four_letter_z2_morphism() -> GroupMorphism {
    let g = Arc::new(FiniteGroup::cyclic(2).unwrap());
    GroupMorphism::new(g, Alphabet::from_chars("abcd"), vec![0, 0, 1, 1]).unwrap()
}
