//! Letters, words and alphabets.
//!
//! Internally a letter is an index into an [`Alphabet`] and a word is a
//! `Vec<Letter>`. Alphabets parsed from JSON use single Unicode scalars as
//! labels; derived alphabets (higher-block letters, skew letters `g:a`)
//! carry longer labels and are display-only.

use crate::error::{Error, Result};

pub type Letter = u8;
pub type Word = Vec<Letter>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    labels: Vec<String>,
}

impl Alphabet {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidShift("alphabet is empty".into()));
        }
        if labels.len() > 250 {
            return Err(Error::InvalidShift("alphabet too large".into()));
        }
        let mut seen = std::collections::BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(Error::InvalidShift(format!("duplicate letter {l:?}")));
            }
        }
        Ok(Alphabet { labels })
    }

    /// Alphabet with single-character labels, e.g. `Alphabet::from_chars("abc")`.
    pub fn from_chars(chars: &str) -> Self {
        Alphabet { labels: chars.chars().map(|c| c.to_string()).collect() }
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (0..self.labels.len() as u8).collect::<Vec<_>>().into_iter()
    }

    pub fn label(&self, l: Letter) -> &str {
        &self.labels[l as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<Letter> {
        self.labels.iter().position(|l| l == label).map(|i| i as Letter)
    }

    /// Parse a word given as a string of single-scalar letters.
    pub fn parse_word(&self, s: &str) -> Result<Word> {
        let single = self.labels.iter().all(|l| l.chars().count() == 1);
        if !single {
            return Err(Error::InvalidShift(
                "words can only be parsed over single-character alphabets".into(),
            ));
        }
        s.chars()
            .map(|c| {
                self.index_of(&c.to_string())
                    .ok_or_else(|| Error::UnknownLetter(c.to_string()))
            })
            .collect()
    }

    /// Human-readable rendering; concatenated for single-char alphabets,
    /// interpunct-joined otherwise.
    pub fn display_word(&self, w: &[Letter]) -> String {
        let single = self.labels.iter().all(|l| l.chars().count() == 1);
        let parts: Vec<&str> = w.iter().map(|&l| self.label(l)).collect();
        if single {
            parts.concat()
        } else {
            parts.join("·")
        }
    }
}

/// A two-sided point of a shift, queried letter by letter. `None` means the
/// handle cannot produce the letter at that index.
pub trait BiInfinitePoint {
    fn letter_at(&self, n: i64) -> Option<Letter>;
}

/// The orbit point `(p)^∞`, indexed two-sidedly.
#[derive(Debug, Clone)]
pub struct PeriodicPoint {
    pub period: Word,
}

impl BiInfinitePoint for PeriodicPoint {
    fn letter_at(&self, n: i64) -> Option<Letter> {
        let m = self.period.len() as i64;
        let idx = n.rem_euclid(m) as usize;
        Some(self.period[idx])
    }
}

/// One-sided point backed by a precomputed prefix; negative indices are
/// unavailable.
#[derive(Debug, Clone)]
pub struct PrefixPoint {
    pub prefix: Word,
}

impl BiInfinitePoint for PrefixPoint {
    fn letter_at(&self, n: i64) -> Option<Letter> {
        if n < 0 {
            return None;
        }
        self.prefix.get(n as usize).copied()
    }
}

/// Least rotation of a word (Booth-style by direct comparison; words here
/// are short).
pub fn least_rotation(w: &[Letter]) -> Word {
    let n = w.len();
    let mut best = w.to_vec();
    for k in 1..n {
        let rot: Word = w[k..].iter().chain(w[..k].iter()).copied().collect();
        if rot < best {
            best = rot;
        }
    }
    best
}

/// Primitive root of a word: the shortest `p` with `w = p^k`.
pub fn primitive_root(w: &[Letter]) -> Word {
    let n = w.len();
    for d in 1..=n {
        if n % d == 0 {
            let p = &w[..d];
            if w.chunks(d).all(|c| c == p) {
                return p.to_vec();
            }
        }
    }
    w.to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphabet_roundtrip() {
        let a = Alphabet::from_chars("abc");
        assert_eq!(a.size(), 3);
        assert_eq!(a.parse_word("cab").unwrap(), vec![2, 0, 1]);
        assert_eq!(a.display_word(&[2, 0, 1]), "cab");
        assert!(a.parse_word("abd").is_err());
    }

    #[test]
    fn rotations_and_roots() {
        let a = Alphabet::from_chars("ab");
        let w = a.parse_word("baab").unwrap();
        assert_eq!(least_rotation(&w), a.parse_word("aabb").unwrap());
        let p = a.parse_word("abab").unwrap();
        assert_eq!(primitive_root(&p), a.parse_word("ab").unwrap());
        let q = a.parse_word("aab").unwrap();
        assert_eq!(primitive_root(&q), q);
    }

    #[test]
    fn periodic_point_indexing() {
        let p = PeriodicPoint { period: vec![0, 1, 2] };
        assert_eq!(p.letter_at(0), Some(0));
        assert_eq!(p.letter_at(-1), Some(2));
        assert_eq!(p.letter_at(-3), Some(0));
        assert_eq!(p.letter_at(7), Some(1));
    }
}
