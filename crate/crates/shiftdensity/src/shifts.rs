//! Shift-space backends (SFT, primitive substitution, periodic) behind one
//! language oracle, plus return words, extension graphs and higher-block
//! recodings.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::words::{least_rotation, primitive_root, Alphabet, Letter, Word};

/// Default cap on scan windows (letters) for return-word certification.
pub const WINDOW_CAP: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShiftKind {
    /// `step`-step SFT with forbidden factors of length `step + 1`.
    Sft { step: usize, forbidden: BTreeSet<Word> },
    /// Shift generated by a primitive substitution.
    Substitution { rules: Vec<Word> },
    /// Orbit of a periodic word (stored as its primitive root in least
    /// rotation).
    Periodic { word: Word },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftSpec {
    alphabet: Alphabet,
    kind: ShiftKind,
}

impl ShiftSpec {
    pub fn sft(alphabet: Alphabet, step: usize, forbidden: Vec<Word>) -> Result<Self> {
        if step == 0 {
            return Err(Error::InvalidShift("SFT step must be ≥ 1".into()));
        }
        let mut set = BTreeSet::new();
        for w in forbidden {
            if w.len() != step + 1 {
                return Err(Error::InvalidShift(format!(
                    "forbidden word of length {} in a {step}-step SFT (expected {})",
                    w.len(),
                    step + 1
                )));
            }
            for &l in &w {
                if l as usize >= alphabet.size() {
                    return Err(Error::InvalidShift("forbidden word uses unknown letter".into()));
                }
            }
            set.insert(w);
        }
        Ok(ShiftSpec { alphabet, kind: ShiftKind::Sft { step, forbidden: set } })
    }

    pub fn substitution(alphabet: Alphabet, rules: Vec<Word>) -> Result<Self> {
        if rules.len() != alphabet.size() {
            return Err(Error::InvalidShift("one rule per letter required".into()));
        }
        for r in &rules {
            if r.is_empty() {
                return Err(Error::InvalidShift("empty substitution image".into()));
            }
            for &l in r {
                if l as usize >= alphabet.size() {
                    return Err(Error::InvalidShift("rule uses unknown letter".into()));
                }
            }
        }
        if !is_primitive(&rules) {
            return Err(Error::NotPrimitive);
        }
        Ok(ShiftSpec { alphabet, kind: ShiftKind::Substitution { rules } })
    }

    pub fn periodic(alphabet: Alphabet, word: Word) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::InvalidShift("empty periodic word".into()));
        }
        for &l in &word {
            if l as usize >= alphabet.size() {
                return Err(Error::InvalidShift("periodic word uses unknown letter".into()));
            }
        }
        let word = least_rotation(&primitive_root(&word));
        Ok(ShiftSpec { alphabet, kind: ShiftKind::Periodic { word } })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn kind(&self) -> &ShiftKind {
        &self.kind
    }

    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            ShiftKind::Sft { .. } => "sft",
            ShiftKind::Substitution { .. } => "substitution",
            ShiftKind::Periodic { .. } => "periodic",
        }
    }

    pub fn is_minimal_kind(&self) -> bool {
        !matches!(self.kind, ShiftKind::Sft { .. })
    }

    pub fn substitution_rules(&self) -> Option<&[Word]> {
        match &self.kind {
            ShiftKind::Substitution { rules } => Some(rules),
            _ => None,
        }
    }

    pub fn periodic_word(&self) -> Option<&Word> {
        match &self.kind {
            ShiftKind::Periodic { word } => Some(word),
            _ => None,
        }
    }

    pub fn sft_step(&self) -> Option<usize> {
        match &self.kind {
            ShiftKind::Sft { step, .. } => Some(*step),
            _ => None,
        }
    }
}

/// True iff some power `k ≤ 2·|A|²` of the incidence matrix is entrywise
/// positive.
pub fn is_primitive(rules: &[Word]) -> bool {
    let n = rules.len();
    if n == 0 || rules.iter().any(|r| r.is_empty()) {
        return false;
    }
    // occurs[a][b] = letter b occurs in σ(a)
    let mut m = vec![vec![false; n]; n];
    for (a, img) in rules.iter().enumerate() {
        for &b in img {
            m[a][b as usize] = true;
        }
    }
    let mut p = m.clone();
    let all_positive = |q: &Vec<Vec<bool>>| q.iter().all(|row| row.iter().all(|&x| x));
    for _ in 1..=(2 * n * n) {
        if all_positive(&p) {
            return true;
        }
        let mut next = vec![vec![false; n]; n];
        for a in 0..n {
            for c in 0..n {
                if p[a][c] {
                    for b in 0..n {
                        if m[c][b] {
                            next[a][b] = true;
                        }
                    }
                }
            }
        }
        if next == p {
            return all_positive(&next);
        }
        p = next;
    }
    all_positive(&p)
}

/// Follower structure of an SFT on its essential `r`-blocks (the blocks
/// lying on bi-infinite paths).
#[derive(Debug, Clone)]
pub struct SftStructure {
    pub step: usize,
    pub blocks: Vec<Word>,
    pub block_index: HashMap<Word, usize>,
    /// `out[i]` lists `(appended letter, target block)`.
    pub out: Vec<Vec<(Letter, usize)>>,
}

impl SftStructure {
    pub fn build(alphabet: &Alphabet, step: usize, forbidden: &BTreeSet<Word>) -> Self {
        let k = alphabet.size();
        // all r-blocks, with edges u→v when the (r+1)-word u·v[r-1] is allowed
        let mut blocks: Vec<Word> = vec![vec![]];
        for _ in 0..step {
            let mut next = Vec::new();
            for b in &blocks {
                for l in 0..k as Letter {
                    let mut w = b.clone();
                    w.push(l);
                    next.push(w);
                }
            }
            blocks = next;
        }
        blocks.sort();
        let index: HashMap<Word, usize> =
            blocks.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let mut out: Vec<Vec<(Letter, usize)>> = vec![Vec::new(); blocks.len()];
        for (i, u) in blocks.iter().enumerate() {
            for l in 0..k as Letter {
                let mut ext = u.clone();
                ext.push(l);
                if forbidden.contains(&ext) {
                    continue;
                }
                let v: Word = ext[1..].to_vec();
                out[i].push((l, index[&v]));
            }
        }
        // trim to the essential part: repeatedly drop sources and sinks
        let n = blocks.len();
        let mut alive = vec![true; n];
        loop {
            let mut indeg = vec![0usize; n];
            let mut outdeg = vec![0usize; n];
            for i in 0..n {
                if !alive[i] {
                    continue;
                }
                for &(_, j) in &out[i] {
                    if alive[j] {
                        outdeg[i] += 1;
                        indeg[j] += 1;
                    }
                }
            }
            let mut changed = false;
            for i in 0..n {
                if alive[i] && (indeg[i] == 0 || outdeg[i] == 0) {
                    alive[i] = false;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let kept: Vec<usize> = (0..n).filter(|&i| alive[i]).collect();
        let remap: HashMap<usize, usize> =
            kept.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let new_blocks: Vec<Word> = kept.iter().map(|&i| blocks[i].clone()).collect();
        let new_out: Vec<Vec<(Letter, usize)>> = kept
            .iter()
            .map(|&i| {
                out[i]
                    .iter()
                    .filter(|&&(_, j)| alive[j])
                    .map(|&(l, j)| (l, remap[&j]))
                    .collect()
            })
            .collect();
        let new_index: HashMap<Word, usize> =
            new_blocks.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        SftStructure { step, blocks: new_blocks, block_index: new_index, out: new_out }
    }

    /// Strongly connected components (Tarjan), as block-index sets.
    pub fn sccs(&self) -> Vec<Vec<usize>> {
        let n = self.blocks.len();
        let mut index = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let mut counter = 0usize;
        let mut out_sccs = Vec::new();
        // iterative Tarjan
        enum Frame {
            Enter(usize),
            Resume(usize, usize),
        }
        for root in 0..n {
            if index[root] != usize::MAX {
                continue;
            }
            let mut call = vec![Frame::Enter(root)];
            while let Some(frame) = call.pop() {
                match frame {
                    Frame::Enter(v) => {
                        index[v] = counter;
                        low[v] = counter;
                        counter += 1;
                        stack.push(v);
                        on_stack[v] = true;
                        call.push(Frame::Resume(v, 0));
                    }
                    Frame::Resume(v, mut ei) => {
                        let mut descended = false;
                        while ei < self.out[v].len() {
                            let (_, w) = self.out[v][ei];
                            ei += 1;
                            if index[w] == usize::MAX {
                                call.push(Frame::Resume(v, ei));
                                call.push(Frame::Enter(w));
                                descended = true;
                                break;
                            } else if on_stack[w] {
                                low[v] = low[v].min(index[w]);
                            }
                        }
                        if descended {
                            continue;
                        }
                        if low[v] == index[v] {
                            let mut comp = Vec::new();
                            loop {
                                let w = stack.pop().unwrap();
                                on_stack[w] = false;
                                comp.push(w);
                                if w == v {
                                    break;
                                }
                            }
                            out_sccs.push(comp);
                        } else {
                            // propagate lowlink to parent
                            if let Some(Frame::Resume(p, _)) = call.last() {
                                let p = *p;
                                low[p] = low[p].min(low[v]);
                            }
                        }
                    }
                }
            }
        }
        out_sccs
    }

    /// An essential SFT graph presents an irreducible shift iff it is one
    /// strongly connected component.
    pub fn is_irreducible(&self) -> bool {
        !self.blocks.is_empty() && self.sccs().len() == 1
    }
}

/// Memoized language oracle `n ↦ L(X) ∩ Aⁿ` (sorted). Query results are
/// immutable snapshots; the cache fill is serialized behind a mutex.
pub struct LanguageOracle {
    spec: ShiftSpec,
    cache: Mutex<HashMap<usize, Arc<Vec<Word>>>>,
    sft: Option<SftStructure>,
    two_blocks: Mutex<Option<Arc<Vec<Word>>>>,
}

impl LanguageOracle {
    pub fn new(spec: ShiftSpec) -> Self {
        let sft = match spec.kind() {
            ShiftKind::Sft { step, forbidden } => {
                Some(SftStructure::build(spec.alphabet(), *step, forbidden))
            }
            _ => None,
        };
        LanguageOracle { spec, cache: Mutex::new(HashMap::new()), sft, two_blocks: Mutex::new(None) }
    }

    pub fn spec(&self) -> &ShiftSpec {
        &self.spec
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.spec.alphabet()
    }

    pub fn sft_structure(&self) -> Option<&SftStructure> {
        self.sft.as_ref()
    }

    /// Exactly `L(X) ∩ Aⁿ`, sorted.
    pub fn words(&self, n: usize) -> Arc<Vec<Word>> {
        if let Some(hit) = self.cache.lock().unwrap().get(&n) {
            return hit.clone();
        }
        let computed = Arc::new(self.compute_words(n));
        self.cache.lock().unwrap().insert(n, computed.clone());
        computed
    }

    pub fn contains(&self, w: &[Letter]) -> bool {
        let level = self.words(w.len());
        level.binary_search_by(|probe| probe.as_slice().cmp(w)).is_ok()
    }

    pub fn right_extensions(&self, w: &[Letter]) -> Vec<Letter> {
        let level = self.words(w.len() + 1);
        let mut out = Vec::new();
        for l in 0..self.alphabet().size() as Letter {
            let mut ext = w.to_vec();
            ext.push(l);
            if level.binary_search(&ext).is_ok() {
                out.push(l);
            }
        }
        out
    }

    pub fn left_extensions(&self, w: &[Letter]) -> Vec<Letter> {
        let level = self.words(w.len() + 1);
        let mut out = Vec::new();
        for l in 0..self.alphabet().size() as Letter {
            let mut ext = vec![l];
            ext.extend_from_slice(w);
            if level.binary_search(&ext).is_ok() {
                out.push(l);
            }
        }
        out
    }

    fn compute_words(&self, n: usize) -> Vec<Word> {
        if n == 0 {
            return vec![vec![]];
        }
        match self.spec.kind() {
            ShiftKind::Sft { .. } => self.sft_words(n),
            ShiftKind::Substitution { rules } => self.substitution_words(rules, n),
            ShiftKind::Periodic { word } => periodic_words(word, n),
        }
    }

    fn sft_words(&self, n: usize) -> Vec<Word> {
        let s = self.sft.as_ref().expect("SFT structure present");
        let r = s.step;
        let mut set = BTreeSet::new();
        if n <= r {
            for b in &s.blocks {
                set.insert(b[..n].to_vec());
            }
        } else {
            // words of length n are paths with n-r edges from each block
            for (i, b) in s.blocks.iter().enumerate() {
                let mut stack = vec![(i, b.clone())];
                while let Some((v, w)) = stack.pop() {
                    if w.len() == n {
                        set.insert(w);
                        continue;
                    }
                    for &(l, t) in &s.out[v] {
                        let mut ext = w.clone();
                        ext.push(l);
                        stack.push((t, ext));
                    }
                }
            }
        }
        set.into_iter().collect()
    }

    /// The 2-block set of a substitution shift, by cumulative closure of
    /// the images of known 2-blocks.
    pub fn two_blocks(&self) -> Arc<Vec<Word>> {
        if let Some(hit) = self.two_blocks.lock().unwrap().as_ref() {
            return hit.clone();
        }
        let rules = match self.spec.kind() {
            ShiftKind::Substitution { rules } => rules,
            _ => {
                let computed = Arc::new(self.words(2).as_ref().clone());
                *self.two_blocks.lock().unwrap() = Some(computed.clone());
                return computed;
            }
        };
        let mut seed: Word = vec![0];
        while seed.len() < 2 {
            seed = apply_rules(rules, &seed);
        }
        let mut set: BTreeSet<Word> = windows(&seed, 2).collect();
        loop {
            let mut grew = false;
            let snapshot: Vec<Word> = set.iter().cloned().collect();
            for bc in snapshot {
                let img = apply_rules(rules, &bc);
                for w in windows(&img, 2) {
                    grew |= set.insert(w);
                }
            }
            if !grew {
                break;
            }
        }
        let computed = Arc::new(set.into_iter().collect::<Vec<_>>());
        *self.two_blocks.lock().unwrap() = Some(computed.clone());
        computed
    }

    fn substitution_words(&self, rules: &[Word], n: usize) -> Vec<Word> {
        // iterate σ until every letter image has length ≥ n; then the
        // n-windows of σᵏ(bc) over 2-blocks bc are exactly L(X)∩Aⁿ
        let k = self.alphabet().size();
        let mut images: Vec<Word> = (0..k as Letter).map(|l| vec![l]).collect();
        while images.iter().any(|w| w.len() < n) {
            images = images.iter().map(|w| apply_rules(rules, w)).collect();
        }
        let mut set = BTreeSet::new();
        if n == 1 {
            // primitivity puts every letter in the language
            return (0..k as Letter).map(|l| vec![l]).collect();
        }
        for bc in self.two_blocks().iter() {
            let mut img = images[bc[0] as usize].clone();
            img.extend_from_slice(&images[bc[1] as usize]);
            for w in windows(&img, n) {
                set.insert(w);
            }
        }
        set.into_iter().collect()
    }
}

fn periodic_words(p: &Word, n: usize) -> Vec<Word> {
    let m = p.len();
    let mut set = BTreeSet::new();
    for j in 0..m {
        let w: Word = (0..n).map(|i| p[(j + i) % m]).collect();
        set.insert(w);
    }
    set.into_iter().collect()
}

pub fn apply_rules(rules: &[Word], w: &[Letter]) -> Word {
    let mut out = Vec::new();
    for &l in w {
        out.extend_from_slice(&rules[l as usize]);
    }
    out
}

fn windows(w: &[Letter], n: usize) -> impl Iterator<Item = Word> + '_ {
    (0..w.len().saturating_sub(n - 1)).map(move |i| w[i..i + n].to_vec())
}

fn occurrences(hay: &[Letter], needle: &[Letter]) -> Vec<usize> {
    if needle.is_empty() {
        return (0..=hay.len()).collect();
    }
    (0..hay.len().saturating_sub(needle.len() - 1))
        .filter(|&i| &hay[i..i + needle.len()] == needle)
        .collect()
}

/// Complete right-return set for `u` with a validity certificate: the scan
/// window `N` satisfies `N ≥ 2·max_gap + 2|u|` and every word of
/// `L(X) ∩ A^N` contains at least two occurrences of `u`.
#[derive(Debug, Clone)]
pub struct ReturnWordCertificate {
    pub word: Word,
    pub returns: BTreeSet<Word>,
    pub window: usize,
    pub max_gap: usize,
}

pub fn return_words(oracle: &LanguageOracle, u: &[Letter]) -> Result<ReturnWordCertificate> {
    if !oracle.spec().is_minimal_kind() {
        return Err(Error::WrongShiftKind {
            expected: "substitution or periodic",
            got: oracle.spec().kind_name(),
        });
    }
    if u.is_empty() {
        // returns to ε are the single letters
        let returns: BTreeSet<Word> = oracle.words(1).iter().cloned().collect();
        return Ok(ReturnWordCertificate { word: vec![], returns, window: 2, max_gap: 1 });
    }
    if !oracle.contains(u) {
        return Err(Error::NotInLanguage(oracle.alphabet().display_word(u)));
    }
    let mut n = (4 * u.len()).max(8);
    loop {
        if n > WINDOW_CAP {
            return Err(Error::WindowExhausted {
                context: format!(
                    "certifying return words of {:?}",
                    oracle.alphabet().display_word(u)
                ),
                cap: WINDOW_CAP,
            });
        }
        let level = oracle.words(n);
        let all_twice = level.iter().all(|w| occurrences(w, u).len() >= 2);
        if !all_twice {
            n *= 2;
            continue;
        }
        let max_gap = level
            .iter()
            .flat_map(|w| {
                let occ = occurrences(w, u);
                occ.windows(2).map(|p| p[1] - p[0]).collect::<Vec<_>>()
            })
            .max()
            .unwrap_or(0);
        let needed = 2 * max_gap + 2 * u.len();
        if n < needed {
            n = needed;
            continue;
        }
        let mut returns = BTreeSet::new();
        for w in level.iter() {
            let occ = occurrences(w, u);
            for p in occ.windows(2) {
                returns.insert(w[p[0]..p[1]].to_vec());
            }
        }
        let cert = ReturnWordCertificate { word: u.to_vec(), returns, window: n, max_gap };
        validate_returns(oracle, &cert)?;
        return Ok(cert);
    }
}

fn validate_returns(oracle: &LanguageOracle, cert: &ReturnWordCertificate) -> Result<()> {
    let u = &cert.word;
    for r in &cert.returns {
        let mut ru = r.clone();
        ru.extend_from_slice(u);
        if !ru.starts_with(u) {
            return Err(Error::Internal("return word does not restart the base word".into()));
        }
        if !oracle.contains(&ru) {
            return Err(Error::Internal("return concatenation left the language".into()));
        }
        if occurrences(&ru, u).len() != 2 {
            return Err(Error::Internal("return word contains an inner occurrence".into()));
        }
    }
    Ok(())
}

/// Bipartite extension graph of a word: left/right one-letter extensions
/// with edges `(a, b)` for `awb ∈ L(X)`.
#[derive(Debug, Clone)]
pub struct ExtensionGraph {
    pub word: Word,
    pub left: Vec<Letter>,
    pub right: Vec<Letter>,
    pub edges: Vec<(Letter, Letter)>,
}

impl ExtensionGraph {
    pub fn is_connected(&self) -> bool {
        let nl = self.left.len();
        let nr = self.right.len();
        if nl + nr == 0 {
            return false;
        }
        let mut parent: Vec<usize> = (0..nl + nr).collect();
        fn find(p: &mut Vec<usize>, i: usize) -> usize {
            if p[i] != i {
                let r = find(p, p[i]);
                p[i] = r;
            }
            p[i]
        }
        for &(a, b) in &self.edges {
            let ia = self.left.iter().position(|&x| x == a).unwrap();
            let ib = nl + self.right.iter().position(|&x| x == b).unwrap();
            let (ra, rb) = (find(&mut parent, ia), find(&mut parent, ib));
            parent[ra] = rb;
        }
        let root = find(&mut parent, 0);
        (0..nl + nr).all(|i| find(&mut parent, i) == root)
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edges.len() + 1 == self.left.len() + self.right.len()
    }
}

pub fn extension_graph(oracle: &LanguageOracle, w: &[Letter]) -> Result<ExtensionGraph> {
    if !oracle.contains(w) {
        return Err(Error::NotInLanguage(oracle.alphabet().display_word(w)));
    }
    let left = oracle.left_extensions(w);
    let right = oracle.right_extensions(w);
    let level = oracle.words(w.len() + 2);
    let mut edges = Vec::new();
    for &a in &left {
        for &b in &right {
            let mut awb = vec![a];
            awb.extend_from_slice(w);
            awb.push(b);
            if level.binary_search(&awb).is_ok() {
                edges.push((a, b));
            }
        }
    }
    Ok(ExtensionGraph { word: w.to_vec(), left, right, edges })
}

/// Checks `E(w)` is a tree for every `w` with `|w| ≤ n`; on failure returns
/// the shortest (then lexicographically first) counterexample.
pub fn dendric_up_to(oracle: &LanguageOracle, n: usize) -> Result<(bool, Option<Word>)> {
    for m in 0..=n {
        for w in oracle.words(m).iter() {
            if !extension_graph(oracle, w)?.is_tree() {
                return Ok((false, Some(w.clone())));
            }
        }
    }
    Ok((true, None))
}

/// Word-level coding maps of the higher-block recoding `β_r`.
#[derive(Debug, Clone)]
pub struct BlockCoding {
    pub r: usize,
    pub block_alphabet: Alphabet,
    pub blocks: Vec<Word>,
}

impl BlockCoding {
    /// `block(w)[i] = w_{[i, i+r)}`, defined for `|w| ≥ r`.
    pub fn block(&self, w: &[Letter]) -> Result<Word> {
        if w.len() < self.r {
            return Err(Error::Precondition(format!("word shorter than block size {}", self.r)));
        }
        let mut out = Vec::with_capacity(w.len() - self.r + 1);
        for i in 0..=w.len() - self.r {
            let idx = self
                .blocks
                .binary_search_by(|b| b.as_slice().cmp(&w[i..i + self.r]))
                .map_err(|_| Error::NotInLanguage(format!("{:?}", &w[i..i + self.r])))?;
            out.push(idx as Letter);
        }
        Ok(out)
    }

    pub fn unblock(&self, w: &[Letter]) -> Result<Word> {
        if w.is_empty() {
            return Err(Error::Precondition("empty block word".into()));
        }
        let mut out: Word = self.blocks[w[0] as usize].clone();
        for &b in &w[1..] {
            let blk = &self.blocks[b as usize];
            out.push(blk[self.r - 1]);
        }
        Ok(out)
    }
}

/// Recode an SFT to the 1-step SFT on its `r`-blocks.
pub fn higher_block(spec: &ShiftSpec, r: usize) -> Result<(ShiftSpec, BlockCoding)> {
    let (step, forbidden) = match spec.kind() {
        ShiftKind::Sft { step, forbidden } => (*step, forbidden),
        _ => {
            return Err(Error::WrongShiftKind { expected: "sft", got: spec.kind_name() });
        }
    };
    if r < step {
        return Err(Error::Precondition(format!(
            "block size {r} below the SFT step {step}"
        )));
    }
    if spec.alphabet().size().pow(r as u32) > 1 << 20 {
        return Err(Error::Precondition(format!("block size {r} larger than supported cache")));
    }
    // blocks of length r with edges from the r-step presentation
    let s = SftStructure::build(spec.alphabet(), r, &lift_forbidden(spec.alphabet(), step, forbidden, r));
    let blocks = s.blocks.clone();
    let labels: Vec<String> = blocks.iter().map(|b| spec.alphabet().display_word(b)).collect();
    let block_alphabet = Alphabet::new(labels)?;
    let mut forb2 = Vec::new();
    for (i, _) in blocks.iter().enumerate() {
        let succ: BTreeSet<usize> = s.out[i].iter().map(|&(_, j)| j).collect();
        for j in 0..blocks.len() {
            if !succ.contains(&j) {
                forb2.push(vec![i as Letter, j as Letter]);
            }
        }
    }
    let sft = ShiftSpec::sft(block_alphabet.clone(), 1, forb2)?;
    Ok((sft, BlockCoding { r, block_alphabet, blocks }))
}

/// Forbidden set of the same shift presented with memory `r ≥ step`.
fn lift_forbidden(
    alphabet: &Alphabet,
    step: usize,
    forbidden: &BTreeSet<Word>,
    r: usize,
) -> BTreeSet<Word> {
    if r == step {
        return forbidden.clone();
    }
    let k = alphabet.size();
    let mut out = BTreeSet::new();
    let mut stack: Vec<Word> = vec![vec![]];
    while let Some(w) = stack.pop() {
        if w.len() == r + 1 {
            let bad = (0..=w.len() - (step + 1))
                .any(|i| forbidden.contains(&w[i..i + step + 1].to_vec()));
            if bad {
                out.insert(w);
            }
            continue;
        }
        for l in 0..k as Letter {
            let mut ext = w.clone();
            ext.push(l);
            stack.push(ext);
        }
    }
    out
}

/// Present a periodic shift as the 1-step SFT whose allowed 2-blocks are the
/// consecutive pairs of the orbit.
pub fn periodic_as_sft(spec: &ShiftSpec) -> Result<ShiftSpec> {
    let p = spec
        .periodic_word()
        .ok_or(Error::WrongShiftKind { expected: "periodic", got: spec.kind_name() })?;
    let m = p.len();
    let allowed: BTreeSet<Word> = (0..m).map(|i| vec![p[i], p[(i + 1) % m]]).collect();
    let k = spec.alphabet().size();
    let mut forbidden = Vec::new();
    for a in 0..k as Letter {
        for b in 0..k as Letter {
            if !allowed.contains(&vec![a, b]) {
                forbidden.push(vec![a, b]);
            }
        }
    }
    ShiftSpec::sft(spec.alphabet().clone(), 1, forbidden)
}

/// Prefix of a fixed point of the substitution (or of the periodic word).
/// For a substitution, the seed is the smallest `(k, a)` with `σᵏ(a)`
/// starting with `a` and growing.
pub fn fixed_point_prefix(spec: &ShiftSpec, len: usize) -> Result<Word> {
    match spec.kind() {
        ShiftKind::Periodic { word } => {
            Ok((0..len).map(|i| word[i % word.len()]).collect())
        }
        ShiftKind::Substitution { rules } => {
            let k = spec.alphabet().size();
            let mut seed = None;
            'outer: for power in 1..=k.max(1) {
                for a in 0..k as Letter {
                    let mut img = vec![a];
                    for _ in 0..power {
                        img = apply_rules(rules, &img);
                    }
                    if img.len() > 1 && img[0] == a {
                        seed = Some((power, a));
                        break 'outer;
                    }
                }
            }
            let (power, a) =
                seed.ok_or_else(|| Error::Internal("no growing fixed-point seed found".into()))?;
            let mut w: Word = vec![a];
            while w.len() < len {
                for _ in 0..power {
                    w = apply_rules(rules, &w);
                }
            }
            w.truncate(len);
            Ok(w)
        }
        ShiftKind::Sft { .. } => {
            Err(Error::WrongShiftKind { expected: "substitution or periodic", got: "sft" })
        }
    }
}
