//! Cylinder-measure oracles `w ↦ μ(w)`: stationary Markov measures on SFTs
//! (including the Parry measure), the unique ergodic measure of a primitive
//! substitution shift via induced block substitutions, and counting
//! measures on periodic orbits.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::shifts::{apply_rules, LanguageOracle, ShiftKind};
use crate::words::{Letter, Word};

/// Residual target for eigenvector iterations.
pub const EIGEN_TOL: f64 = 1e-13;
pub const EIGEN_MAX_STEPS: usize = 1_000_000;

/// Power iteration for the Perron pair of a nonnegative sparse matrix,
/// given as rows of `(column, weight)`. Iterates with a `+I` spectral shift
/// so irreducible-but-periodic matrices still converge; returns
/// `(lambda, v)` with `v ≥ 0`, `‖v‖₁ = 1` and `‖Mv − λv‖∞ ≤ tol`.
pub fn perron_vector(rows: &[Vec<(usize, f64)>], tol: f64) -> Result<(f64, Vec<f64>)> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::Internal("empty matrix".into()));
    }
    let mul = |v: &[f64]| -> Vec<f64> {
        let mut out = vec![0.0; n];
        for (i, row) in rows.iter().enumerate() {
            let vi = v[i];
            if vi == 0.0 {
                continue;
            }
            for &(j, w) in row {
                out[j] += vi * w;
            }
        }
        out
    };
    let mut v = vec![1.0 / n as f64; n];
    for step in 0..EIGEN_MAX_STEPS {
        let mv = mul(&v);
        let lambda: f64 = mv.iter().sum();
        let residual = mv
            .iter()
            .zip(&v)
            .map(|(a, b)| (a - lambda * b).abs())
            .fold(0.0f64, f64::max);
        if residual <= tol * lambda.max(1.0) {
            return Ok((lambda, v));
        }
        let mut next: Vec<f64> = mv.iter().zip(&v).map(|(a, b)| a + b).collect();
        let norm: f64 = next.iter().sum();
        if !(norm > 0.0) {
            return Err(Error::NoConvergence { steps: step, residual });
        }
        for x in &mut next {
            *x /= norm;
        }
        v = next;
    }
    Err(Error::NoConvergence { steps: EIGEN_MAX_STEPS, residual: f64::NAN })
}

/// Stationary Markov data over the essential `r`-blocks of an SFT.
#[derive(Debug, Clone)]
pub struct MarkovData {
    pub step: usize,
    pub blocks: Vec<Word>,
    pub pi: Vec<f64>,
    /// Per block: `(appended letter, probability, target block)`.
    pub trans: Vec<Vec<(Letter, f64, usize)>>,
}

impl MarkovData {
    fn block_index(&self, w: &[Letter]) -> Option<usize> {
        self.blocks.binary_search_by(|b| b.as_slice().cmp(w)).ok()
    }

    pub fn entropy(&self) -> f64 {
        let mut h = 0.0;
        for (i, row) in self.trans.iter().enumerate() {
            for &(_, p, _) in row {
                if p > 0.0 {
                    h -= self.pi[i] * p * p.ln();
                }
            }
        }
        h
    }
}

enum Backend {
    Markov(MarkovData),
    SubstitutionPerron { levels: Mutex<HashMap<usize, Arc<FreqLevel>>> },
    PeriodicCounting,
}

/// Frequencies of all words of one length in a substitution shift.
pub struct FreqLevel {
    pub words: Arc<Vec<Word>>,
    pub freq: Vec<f64>,
}

impl FreqLevel {
    pub fn value(&self, w: &[Letter]) -> f64 {
        match self.words.binary_search_by(|probe| probe.as_slice().cmp(w)) {
            Ok(i) => self.freq[i],
            Err(_) => 0.0,
        }
    }
}

/// A cylinder-measure oracle tied to one shift.
pub struct CylinderMeasure {
    oracle: Arc<LanguageOracle>,
    backend: Backend,
}

impl CylinderMeasure {
    pub fn oracle(&self) -> &Arc<LanguageOracle> {
        &self.oracle
    }

    pub fn backend_name(&self) -> &'static str {
        match self.backend {
            Backend::Markov(_) => "markov",
            Backend::SubstitutionPerron { .. } => "substitution-perron",
            Backend::PeriodicCounting => "periodic-counting",
        }
    }

    pub fn markov_data(&self) -> Option<&MarkovData> {
        match &self.backend {
            Backend::Markov(d) => Some(d),
            _ => None,
        }
    }

    /// μ of the cylinder of `w`; zero off the language.
    pub fn value(&self, w: &[Letter]) -> f64 {
        if w.is_empty() {
            return 1.0;
        }
        match &self.backend {
            Backend::Markov(d) => markov_value(d, w),
            Backend::SubstitutionPerron { .. } => {
                self.freq_level(w.len()).map(|l| l.value(w)).unwrap_or(0.0)
            }
            Backend::PeriodicCounting =>

                self.periodic_rational(w).map(rational_to_f64).unwrap_or(0.0),
        }
    }

    /// Exact value for backends with rational data (periodic counting).
    pub fn rational_value(&self, w: &[Letter]) -> Option<Ratio<i64>> {
        match &self.backend {
            Backend::PeriodicCounting => Some(self.periodic_rational(w).unwrap_or_else(|| Ratio::new(0, 1))),
            _ => None,
        }
    }

    fn periodic_rational(&self, w: &[Letter]) -> Option<Ratio<i64>> {
        let p = self.oracle.spec().periodic_word()?;
        let m = p.len();
        if w.is_empty() {
            return Some(Ratio::new(1, 1));
        }
        let count = (0..m)
            .filter(|&j| (0..w.len()).all(|i| p[(j + i) % m] == w[i]))
            .count();
        Some(Ratio::new(count as i64, m as i64))
    }

    /// Frequencies of every word of length `n` (substitution backend).
    pub fn freq_level(&self, n: usize) -> Result<Arc<FreqLevel>> {
        let levels = match &self.backend {
            Backend::SubstitutionPerron { levels } => levels,
            _ => {
                return Err(Error::WrongShiftKind {
                    expected: "substitution",
                    got: self.oracle.spec().kind_name(),
                })
            }
        };
        if let Some(hit) = levels.lock().unwrap().get(&n) {
            return Ok(hit.clone());
        }
        let rules = self
            .oracle
            .spec()
            .substitution_rules()
            .ok_or(Error::Internal("substitution backend on non-substitution shift".into()))?
            .to_vec();
        let computed = Arc::new(block_frequencies(&self.oracle, &rules, n)?);
        levels.lock().unwrap().insert(n, computed.clone());
        Ok(computed)
    }
}

fn rational_to_f64(r: Ratio<i64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn markov_value(d: &MarkovData, w: &[Letter]) -> f64 {
    let r = d.step;
    if w.len() < r {
        // marginal over all blocks extending w
        return d
            .blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| b.starts_with(w))
            .map(|(i, _)| d.pi[i])
            .sum();
    }
    let mut idx = match d.block_index(&w[..r]) {
        Some(i) => i,
        None => return 0.0,
    };
    let mut prob = d.pi[idx];
    for &l in &w[r..] {
        match d.trans[idx].iter().find(|&&(a, _, _)| a == l) {
            Some(&(_, p, t)) => {
                prob *= p;
                idx = t;
            }
            None => return 0.0,
        }
    }
    prob
}

/// Maximal-entropy Markov measure of an irreducible SFT, from the left and
/// right Perron eigenvectors of the block adjacency matrix.
pub fn parry_measure(oracle: Arc<LanguageOracle>) -> Result<CylinderMeasure> {
    let s = oracle
        .sft_structure()
        .ok_or(Error::WrongShiftKind { expected: "sft", got: oracle.spec().kind_name() })?;
    if !s.is_irreducible() {
        return Err(Error::ReducibleSft(
            "the Parry measure is only defined on an irreducible SFT".into(),
        ));
    }
    let n = s.blocks.len();
    let rows: Vec<Vec<(usize, f64)>> = s
        .out
        .iter()
        .map(|edges| edges.iter().map(|&(_, j)| (j, 1.0)).collect())
        .collect();
    // rows encode A as v ↦ vA (left action); transpose for Av
    let mut rows_t: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
    for (i, row) in rows.iter().enumerate() {
        for &(j, w) in row {
            rows_t[j].push((i, w));
        }
    }
    let (lambda, right) = perron_vector(&rows_t, EIGEN_TOL)?; // A·right = λ·right
    let (_, left) = perron_vector(&rows, EIGEN_TOL)?; // left·A = λ·left
    let mut trans: Vec<Vec<(Letter, f64, usize)>> = vec![Vec::new(); n];
    for (i, edges) in s.out.iter().enumerate() {
        for &(l, j) in edges {
            trans[i].push((l, right[j] / (lambda * right[i]), j));
        }
    }
    let dot: f64 = left.iter().zip(&right).map(|(a, b)| a * b).sum();
    let pi: Vec<f64> = left.iter().zip(&right).map(|(a, b)| a * b / dot).collect();
    let data = MarkovData { step: s.step, blocks: s.blocks.clone(), pi, trans };
    Ok(CylinderMeasure { oracle, backend: Backend::Markov(data) })
}

/// User-specified invariant Markov measure on an SFT. `transitions` gives
/// `P(block → letter)`; `pi` may be omitted, in which case the stationary
/// vector is solved by power iteration.
pub fn markov_measure(
    oracle: Arc<LanguageOracle>,
    transitions: &BTreeMap<Word, BTreeMap<Letter, f64>>,
    pi: Option<&BTreeMap<Word, f64>>,
) -> Result<CylinderMeasure> {
    let s = oracle
        .sft_structure()
        .ok_or(Error::WrongShiftKind { expected: "sft", got: oracle.spec().kind_name() })?;
    let n = s.blocks.len();
    let mut trans: Vec<Vec<(Letter, f64, usize)>> = vec![Vec::new(); n];
    for (i, b) in s.blocks.iter().enumerate() {
        let row = transitions.get(b).ok_or_else(|| {
            Error::InvalidMeasure(format!(
                "missing transition row for block {:?}",
                oracle.alphabet().display_word(b)
            ))
        })?;
        let mut total = 0.0;
        for &(l, j) in &s.out[i] {
            let p = *row.get(&l).ok_or_else(|| {
                Error::InvalidMeasure(format!(
                    "missing probability for {:?} → {:?} (full support required)",
                    oracle.alphabet().display_word(b),
                    oracle.alphabet().label(l)
                ))
            })?;
            if !(p > 0.0) {
                return Err(Error::InvalidMeasure("transition probabilities must be positive on allowed edges".into()));
            }
            trans[i].push((l, p, j));
            total += p;
        }
        if (total - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidMeasure(format!(
                "row for {:?} sums to {total}, not 1",
                oracle.alphabet().display_word(b)
            )));
        }
        let allowed: Vec<Letter> = s.out[i].iter().map(|&(l, _)| l).collect();
        for l in row.keys() {
            if !allowed.contains(l) {
                return Err(Error::InvalidMeasure(format!(
                    "support mismatch: {:?} → {:?} is not an allowed edge",
                    oracle.alphabet().display_word(b),
                    oracle.alphabet().label(*l)
                )));
            }
        }
    }
    let pi_vec = match pi {
        Some(map) => {
            let mut v = vec![0.0; n];
            for (i, b) in s.blocks.iter().enumerate() {
                v[i] = *map.get(b).ok_or_else(|| {
                    Error::InvalidMeasure(format!(
                        "missing stationary entry for block {:?}",
                        oracle.alphabet().display_word(b)
                    ))
                })?;
            }
            let total: f64 = v.iter().sum();
            if (total - 1.0).abs() > 1e-9 {
                return Err(Error::InvalidMeasure("stationary vector does not sum to 1".into()));
            }
            // verify stationarity
            let mut img = vec![0.0; n];
            for (i, row) in trans.iter().enumerate() {
                for &(_, p, j) in row {
                    img[j] += v[i] * p;
                }
            }
            let err = img.iter().zip(&v).map(|(a, b)| (a - b).abs()).fold(0.0f64, f64::max);
            if err > 1e-9 {
                return Err(Error::InvalidMeasure(format!(
                    "supplied vector is not stationary (residual {err:e})"
                )));
            }
            v
        }
        None => {
            let rows: Vec<Vec<(usize, f64)>> = trans
                .iter()
                .map(|row| row.iter().map(|&(_, p, j)| (j, p)).collect())
                .collect();
            let (_, v) = perron_vector(&rows, EIGEN_TOL)?;
            v
        }
    };
    let data = MarkovData { step: s.step, blocks: s.blocks.clone(), pi: pi_vec, trans };
    Ok(CylinderMeasure { oracle, backend: Backend::Markov(data) })
}

/// Unique ergodic measure of a primitive substitution shift; frequencies of
/// length-`n` words come from the right Perron eigenvector of the induced
/// `n`-block substitution.
pub fn substitution_measure(oracle: Arc<LanguageOracle>) -> Result<CylinderMeasure> {
    if oracle.spec().substitution_rules().is_none() {
        return Err(Error::WrongShiftKind {
            expected: "substitution",
            got: oracle.spec().kind_name(),
        });
    }
    Ok(CylinderMeasure {
        oracle,
        backend: Backend::SubstitutionPerron { levels: Mutex::new(HashMap::new()) },
    })
}

/// Uniform measure on a periodic orbit.
pub fn periodic_measure(oracle: Arc<LanguageOracle>) -> Result<CylinderMeasure> {
    if oracle.spec().periodic_word().is_none() {
        return Err(Error::WrongShiftKind { expected: "periodic", got: oracle.spec().kind_name() });
    }
    Ok(CylinderMeasure { oracle, backend: Backend::PeriodicCounting })
}

/// The default measure of a shift: Parry for SFTs, the unique ergodic
/// measure otherwise.
pub fn default_measure(oracle: Arc<LanguageOracle>) -> Result<CylinderMeasure> {
    match oracle.spec().kind() {
        ShiftKind::Sft { .. } => parry_measure(oracle),
        ShiftKind::Substitution { .. } => substitution_measure(oracle),
        ShiftKind::Periodic { .. } => periodic_measure(oracle),
    }
}

/// Builds the induced `n`-block substitution and returns the frequency
/// vector of `L(X) ∩ Aⁿ`. The image of a block `w` is the sequence of
/// `n`-windows of `σ(w)` at offsets `0 .. |σ(w₀)|`, which always fit inside
/// `σ(w)`.
fn block_frequencies(
    oracle: &Arc<LanguageOracle>,
    rules: &[Word],
    n: usize,
) -> Result<FreqLevel> {
    let words = oracle.words(n);
    if n == 0 {
        return Ok(FreqLevel { words, freq: vec![1.0] });
    }
    let m = words.len();
    let lookup = |w: &[Letter]| -> Result<usize> {
        words
            .binary_search_by(|probe| probe.as_slice().cmp(w))
            .map_err(|_| Error::Internal("induced block image left the language".into()))
    };
    // occ[u] lists (v, count): occurrences of block v in the image of u
    let mut occ: Vec<Vec<(usize, f64)>> = vec![Vec::new(); m];
    for (u, w) in words.iter().enumerate() {
        let img = apply_rules(rules, w);
        let span = rules[w[0] as usize].len();
        debug_assert!(img.len() >= span + n - 1);
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for o in 0..span {
            let v = lookup(&img[o..o + n])?;
            *counts.entry(v).or_default() += 1;
        }
        occ[u] = counts.into_iter().map(|(v, c)| (v, c as f64)).collect();
    }
    if m <= 400 {
        // primitivity of the induced matrix, expected for aperiodic primitive σ
        let mut adj = vec![vec![false; m]; m];
        for (u, row) in occ.iter().enumerate() {
            for &(v, _) in row {
                adj[u][v] = true;
            }
        }
        if !bool_matrix_primitive(&adj) {
            return Err(Error::InvalidMeasure(format!(
                "induced {n}-block substitution is not primitive"
            )));
        }
    }
    // counts evolve by c ↦ occᵀ·c; frequencies are its Perron direction
    let mut occ_t: Vec<Vec<(usize, f64)>> = vec![Vec::new(); m];
    for (u, row) in occ.iter().enumerate() {
        for &(v, c) in row {
            occ_t[u].push((v, c));
        }
    }
    let (_, freq) = perron_vector(&occ_t, EIGEN_TOL)?;
    Ok(FreqLevel { words, freq })
}

fn bool_matrix_primitive(adj: &[Vec<bool>]) -> bool {
    let n = adj.len();
    let mut p = adj.to_vec();
    let all = |q: &[Vec<bool>]| q.iter().all(|r| r.iter().all(|&x| x));
    for _ in 0..(2 * n * n).max(4) {
        if all(&p) {
            return true;
        }
        let mut next = vec![vec![false; n]; n];
        for a in 0..n {
            for c in 0..n {
                if p[a][c] {
                    for b in 0..n {
                        if adj[c][b] {
                            next[a][b] = true;
                        }
                    }
                }
            }
        }
        if next == p {
            return all(&next);
        }
        p = next;
    }
    all(&p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use crate::shifts::ShiftSpec;
    use crate::words::Alphabet;

    const PHI: f64 = 1.618033988749894848;

    fn oracle(spec: ShiftSpec) -> Arc<LanguageOracle> {
        Arc::new(LanguageOracle::new(spec))
    }

    fn mu_of(measure: &CylinderMeasure, w: &str) -> f64 {
        let word = measure.oracle().alphabet().parse_word(w).unwrap();
        measure.value(&word)
    }

    #[test]
    fn full_shift_parry_is_uniform_bernoulli() {
        let m = parry_measure(oracle(presets::full_two_shift())).unwrap();
        assert!((mu_of(&m, "ab") - 0.25).abs() < 1e-12);
        assert!((mu_of(&m, "aaa") - 0.125).abs() < 1e-12);
    }

    #[test]
    fn golden_mean_parry_against_power_iteration_oracle() {
        let m = parry_measure(oracle(presets::golden_mean())).unwrap();
        // brute-force dense power iteration on the adjacency matrix
        let a = [[1.0f64, 1.0], [1.0, 0.0]];
        let mut v = [1.0f64, 1.0];
        let mut u = [1.0f64, 1.0];
        for _ in 0..200 {
            v = [a[0][0] * v[0] + a[0][1] * v[1], a[1][0] * v[0] + a[1][1] * v[1]];
            let s = v[0] + v[1];
            v = [v[0] / s, v[1] / s];
            u = [a[0][0] * u[0] + a[1][0] * u[1], a[0][1] * u[0] + a[1][1] * u[1]];
            let s = u[0] + u[1];
            u = [u[0] / s, u[1] / s];
        }
        let dot = u[0] * v[0] + u[1] * v[1];
        let pi_b = u[1] * v[1] / dot;
        assert!((mu_of(&m, "b") - pi_b).abs() < 1e-12);
        // closed form: π(b) = 1/(φ² + 1)
        assert!((mu_of(&m, "b") - 1.0 / (PHI * PHI + 1.0)).abs() < 1e-9);
    }

    #[test]
    fn parry_invariance_on_random_cylinders() {
        let m = parry_measure(oracle(presets::golden_mean())).unwrap();
        let words = m.oracle().words(8);
        for w in words.iter() {
            let total: f64 = m
                .oracle()
                .left_extensions(w)
                .iter()
                .map(|&l| {
                    let mut lw = vec![l];
                    lw.extend_from_slice(w);
                    m.value(&lw)
                })
                .sum();
            assert!((total - m.value(w)).abs() < 1e-12);
        }
    }

    #[test]
    fn user_markov_on_golden_mean() {
        let orc = oracle(presets::golden_mean());
        let ab = orc.alphabet().clone();
        let mut trans = BTreeMap::new();
        trans.insert(
            ab.parse_word("a").unwrap(),
            BTreeMap::from([(0 as Letter, 0.5f64), (1 as Letter, 0.5)]),
        );
        trans.insert(ab.parse_word("b").unwrap(), BTreeMap::from([(0 as Letter, 1.0f64)]));
        let m = markov_measure(orc, &trans, None).unwrap();
        // solved stationary vector: π = (2/3, 1/3); μ(ab) = 2/3 · 1/2
        assert!((mu_of(&m, "a") - 2.0 / 3.0).abs() < 1e-12);
        assert!((mu_of(&m, "ab") - 1.0 / 3.0).abs() < 1e-12);
        assert_eq!(mu_of(&m, "bb"), 0.0);
    }

    #[test]
    fn bernoulli_on_full_shift() {
        let orc = oracle(presets::full_two_shift());
        let ab = orc.alphabet().clone();
        let mut trans = BTreeMap::new();
        for w in ["a", "b"] {
            trans.insert(
                ab.parse_word(w).unwrap(),
                BTreeMap::from([(0 as Letter, 0.5f64), (1 as Letter, 0.5)]),
            );
        }
        let m = markov_measure(orc, &trans, None).unwrap();
        assert!((mu_of(&m, "aab") - 0.125).abs() < 1e-12);
    }

    #[test]
    fn thue_morse_figure_values() {
        let m = substitution_measure(oracle(presets::thue_morse())).unwrap();
        let expect = [
            ("a", 1.0 / 2.0),
            ("b", 1.0 / 2.0),
            ("aa", 1.0 / 6.0),
            ("ab", 1.0 / 3.0),
            ("ba", 1.0 / 3.0),
            ("bb", 1.0 / 6.0),
            ("aab", 1.0 / 6.0),
            ("aba", 1.0 / 6.0),
            ("abb", 1.0 / 6.0),
            ("baa", 1.0 / 6.0),
            ("bab", 1.0 / 6.0),
            ("bba", 1.0 / 6.0),
            ("aaba", 1.0 / 12.0),
            ("aabb", 1.0 / 12.0),
            ("abaa", 1.0 / 12.0),
            ("abab", 1.0 / 12.0),
            ("abba", 1.0 / 6.0),
            ("baab", 1.0 / 6.0),
            ("baba", 1.0 / 12.0),
            ("babb", 1.0 / 12.0),
            ("bbaa", 1.0 / 12.0),
            ("bbab", 1.0 / 12.0),
        ];
        for (w, v) in expect {
            assert!(
                (mu_of(&m, w) - v).abs() < 1e-9,
                "μ({w}) = {} ≠ {v}",
                mu_of(&m, w)
            );
        }
    }

    #[test]
    fn fibonacci_figure_values() {
        let m = substitution_measure(oracle(presets::fibonacci())).unwrap();
        let p = |k: i32| PHI.powi(-k);
        let expect = [
            ("a", p(1)),
            ("b", p(2)),
            ("aa", p(3)),
            ("ab", p(2)),
            ("ba", p(2)),
            ("aab", p(3)),
            ("aba", p(2)),
            ("baa", p(3)),
            ("bab", p(4)),
            ("aaba", p(3)),
            ("abaa", p(3)),
            ("abab", p(4)),
            ("baab", p(3)),
            ("baba", p(4)),
            ("aabaa", p(5)),
            ("aabab", p(4)),
            ("abaab", p(3)),
            ("ababa", p(4)),
            ("baaba", p(3)),
            ("babaa", p(4)),
        ];
        for (w, v) in expect {
            assert!(
                (mu_of(&m, w) - v).abs() < 1e-9,
                "μ({w}) = {} ≠ {v}",
                mu_of(&m, w)
            );
        }
    }

    #[test]
    fn substitution_level_sums_to_one() {
        let m = substitution_measure(oracle(presets::fibonacci())).unwrap();
        let level = m.freq_level(5).unwrap();
        let total: f64 = level.freq.iter().sum();
        assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn consistency_and_invariance_identities() {
        let measures: Vec<CylinderMeasure> = vec![
            substitution_measure(oracle(presets::fibonacci())).unwrap(),
            substitution_measure(oracle(presets::thue_morse())).unwrap(),
            parry_measure(oracle(presets::golden_mean())).unwrap(),
            periodic_measure(oracle(presets::periodic_abc())).unwrap(),
        ];
        for m in &measures {
            assert_eq!(m.value(&[]), 1.0);
            for n in 0..8usize {
                for w in m.oracle().words(n).iter() {
                    let right: f64 = (0..m.oracle().alphabet().size() as Letter)
                        .map(|l| {
                            let mut wa = w.clone();
                            wa.push(l);
                            m.value(&wa)
                        })
                        .sum();
                    let left: f64 = (0..m.oracle().alphabet().size() as Letter)
                        .map(|l| {
                            let mut aw = vec![l];
                            aw.extend_from_slice(w);
                            m.value(&aw)
                        })
                        .sum();
                    let v = m.value(w);
                    assert!((right - v).abs() < 1e-10, "right consistency fails");
                    assert!((left - v).abs() < 1e-10, "shift invariance fails");
                }
            }
        }
    }

    #[test]
    fn substitution_against_empirical_frequencies() {
        use crate::shifts::fixed_point_prefix;
        for spec in [presets::fibonacci(), presets::thue_morse()] {
            let m = substitution_measure(oracle(spec.clone())).unwrap();
            let prefix = fixed_point_prefix(&spec, 120_000).unwrap();
            for n in 1..=5usize {
                let mut counts: BTreeMap<Word, usize> = BTreeMap::new();
                for i in 0..prefix.len() - n {
                    *counts.entry(prefix[i..i + n].to_vec()).or_default() += 1;
                }
                let total = (prefix.len() - n) as f64;
                for (w, c) in counts {
                    let emp = c as f64 / total;
                    assert!(
                        (emp - m.value(&w)).abs() < 5e-3,
                        "empirical vs Perron at {w:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn periodic_counting_values() {
        let m = periodic_measure(oracle(presets::periodic_abc())).unwrap();
        assert!((mu_of(&m, "abc") - 1.0 / 3.0).abs() < 1e-15);
        assert!((mu_of(&m, "ab") - 1.0 / 3.0).abs() < 1e-15);
        assert!((mu_of(&m, "a") - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(mu_of(&m, "bb"), 0.0);
        assert_eq!(
            m.rational_value(&m.oracle().alphabet().parse_word("ab").unwrap()),
            Some(Ratio::new(1, 3))
        );
    }

    #[test]
    fn parry_maximizes_entropy_among_perturbations() {
        let orc = oracle(presets::golden_mean());
        let parry = parry_measure(orc.clone()).unwrap();
        let h_parry = parry.markov_data().unwrap().entropy();
        let ab = orc.alphabet().clone();
        for t in [0.3f64, 0.4, 0.55, 0.7, 0.8] {
            let mut trans = BTreeMap::new();
            trans.insert(
                ab.parse_word("a").unwrap(),
                BTreeMap::from([(0 as Letter, t), (1 as Letter, 1.0 - t)]),
            );
            trans.insert(ab.parse_word("b").unwrap(), BTreeMap::from([(0 as Letter, 1.0f64)]));
            let m = markov_measure(orc.clone(), &trans, None).unwrap();
            assert!(m.markov_data().unwrap().entropy() <= h_parry + 1e-9);
        }
    }

    #[test]
    fn reducible_sft_rejected_by_parry() {
        let ab = Alphabet::from_chars("ab");
        // a and b both fixed but no transitions between: forbidden ab, ba
        let spec = ShiftSpec::sft(
            ab.clone(),
            1,
            vec![ab.parse_word("ab").unwrap(), ab.parse_word("ba").unwrap()],
        )
        .unwrap();
        assert!(matches!(
            parry_measure(oracle(spec)),
            Err(Error::ReducibleSft(_))
        ));
    }
}
