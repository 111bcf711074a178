//! Finite groups, subgroups, right cosets and monoid morphisms `A* → G`.
//!
//! One multiplication convention is used everywhere: words map
//! left-to-right and permutations act on the right, so `mul(s, t)` is
//! "apply `s`, then `t`". This makes right cosets `Hg` and the right
//! action of `G` on `H\G` literal, and it is pinned by tests.

use std::collections::{BTreeSet, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::words::{Alphabet, BiInfinitePoint, Letter, Word};

pub type Elem = u16;

pub const MAX_ORDER: usize = 10_000;

/// A finite group given by its full multiplication table over element
/// indices `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<Elem>, // row-major, table[a*order + b] = a·b
    identity: Elem,
    inverse: Vec<Elem>,
    labels: Vec<String>,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a as usize]
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.order as Elem).collect::<Vec<_>>().into_iter()
    }

    pub fn label(&self, a: Elem) -> &str {
        &self.labels[a as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn element_by_label(&self, label: &str) -> Option<Elem> {
        self.labels.iter().position(|l| l == label).map(|i| i as Elem)
    }

    pub fn pow(&self, a: Elem, n: u64) -> Elem {
        let mut acc = self.identity;
        let mut base = a;
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    /// Conjugate `x⁻¹ a x`.
    pub fn conj(&self, a: Elem, x: Elem) -> Elem {
        self.mul(self.mul(self.inv(x), a), x)
    }

    /// Build from an explicit table; derives identity and inverses and
    /// validates the group laws (exhaustively for order ≤ 64, sampled
    /// beyond).
    pub fn from_table(table_rows: Vec<Vec<Elem>>, labels: Option<Vec<String>>) -> Result<Self> {
        let order = table_rows.len();
        if order == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        if order > MAX_ORDER {
            return Err(Error::InvalidGroup(format!("order {order} exceeds cap {MAX_ORDER}")));
        }
        let mut table = Vec::with_capacity(order * order);
        for row in &table_rows {
            if row.len() != order {
                return Err(Error::InvalidGroup("table is not square".into()));
            }
            for &e in row {
                if e as usize >= order {
                    return Err(Error::InvalidGroup(format!("element index {e} out of range")));
                }
                table.push(e);
            }
        }
        // identity: the unique e with e·x = x for all x
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| table[e * order + x] == x as Elem))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?
            as Elem;
        if !(0..order).all(|x| table[x * order + identity as usize] == x as Elem) {
            return Err(Error::InvalidGroup("identity fails on the right".into()));
        }
        let mut inverse = vec![0 as Elem; order];
        for a in 0..order {
            let inv = (0..order)
                .find(|&b| table[a * order + b] == identity && table[b * order + a] == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {a} has no inverse")))?;
            inverse[a] = inv as Elem;
        }
        let labels = match labels {
            Some(ls) => {
                if ls.len() != order {
                    return Err(Error::InvalidGroup("label count mismatch".into()));
                }
                ls
            }
            None => (0..order).map(|i| format!("g{i}")).collect(),
        };
        let g = FiniteGroup { order, table, identity, inverse, labels };
        g.check_associativity()?;
        Ok(g)
    }

    fn check_associativity(&self) -> Result<()> {
        let n = self.order;
        if n <= 64 {
            for a in 0..n as Elem {
                for b in 0..n as Elem {
                    let ab = self.mul(a, b);
                    for c in 0..n as Elem {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(Error::InvalidGroup(format!(
                                "associativity fails on ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            // deterministic sample of triples
            let mut state = 0x9e3779b97f4a7c15u64;
            for _ in 0..20_000 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let a = ((state >> 16) as usize % n) as Elem;
                let b = ((state >> 32) as usize % n) as Elem;
                let c = ((state >> 48) as usize % n) as Elem;
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return Err(Error::InvalidGroup(format!(
                        "associativity fails on ({a},{b},{c})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Cyclic group of order `n`, elements labeled by residues.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::InvalidGroup(format!("cyclic order {n} out of range")));
        }
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(((a + b) % n) as Elem);
            }
        }
        let labels = (0..n).map(|i| i.to_string()).collect();
        Ok(FiniteGroup {
            order: n,
            table,
            identity: 0,
            inverse: (0..n).map(|a| ((n - a) % n) as Elem).collect(),
            labels,
        })
    }

    /// Symmetric group on `n` points, generated by `(1 2)` and `(1 2 … n)`.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > 6 {
            return Err(Error::InvalidGroup(format!("symmetric degree {n} out of range 1..=6")));
        }
        if n == 1 {
            return Self::from_permutations(1, vec![vec![0]]);
        }
        let mut transp: Perm = (0..n as u8).collect();
        transp.swap(0, 1);
        let cycle: Perm = (0..n as u8).map(|i| ((i as usize + 1) % n) as u8).collect();
        Self::from_permutations(n, vec![transp, cycle])
    }

    /// Group generated by permutations on `degree ≤ 8` points. Elements are
    /// ordered breadth-first from the identity over the sorted generators,
    /// so labels are deterministic across runs.
    pub fn from_permutations(degree: usize, generators: Vec<Perm>) -> Result<Self> {
        if degree == 0 || degree > 8 {
            return Err(Error::InvalidGroup(format!("permutation degree {degree} out of range 1..=8")));
        }
        for g in &generators {
            if g.len() != degree {
                return Err(Error::InvalidGroup("generator degree mismatch".into()));
            }
            let mut seen = vec![false; degree];
            for &p in g {
                if p as usize >= degree || seen[p as usize] {
                    return Err(Error::InvalidGroup("generator is not a permutation (repeated point)".into()));
                }
                seen[p as usize] = true;
            }
        }
        let mut gens = generators;
        gens.sort();
        gens.dedup();
        let id: Perm = (0..degree as u8).collect();
        let mut elems: Vec<Perm> = vec![id.clone()];
        let mut index = std::collections::HashMap::new();
        index.insert(id, 0usize);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let cur = elems[i].clone();
            for g in &gens {
                let next = perm_compose(&cur, g);
                if !index.contains_key(&next) {
                    if elems.len() >= MAX_ORDER {
                        return Err(Error::InvalidGroup(format!("order exceeds cap {MAX_ORDER}")));
                    }
                    index.insert(next.clone(), elems.len());
                    elems.push(next);
                    queue.push_back(elems.len() - 1);
                }
            }
        }
        let order = elems.len();
        let mut table = vec![0 as Elem; order * order];
        for a in 0..order {
            for b in 0..order {
                let prod = perm_compose(&elems[a], &elems[b]);
                table[a * order + b] = index[&prod] as Elem;
            }
        }
        let labels = elems.iter().map(|p| cycle_notation(p)).collect();
        let mut inverse = vec![0 as Elem; order];
        let identity = 0 as Elem;
        for a in 0..order {
            let inv_perm = perm_inverse(&elems[a]);
            inverse[a] = index[&inv_perm] as Elem;
        }
        let g = FiniteGroup { order, table, identity, inverse, labels };
        g.check_associativity()?;
        Ok(g)
    }

    /// Direct product; element `(x, y, …)` is labeled `(lx,ly,…)` and ordered
    /// lexicographically by factor indices.
    pub fn product(factors: &[FiniteGroup]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidGroup("empty product".into()));
        }
        let order: usize = factors.iter().map(|f| f.order).product();
        if order > MAX_ORDER {
            return Err(Error::InvalidGroup(format!("order {order} exceeds cap {MAX_ORDER}")));
        }
        let decode = |mut i: usize| -> Vec<Elem> {
            let mut parts = vec![0 as Elem; factors.len()];
            for (k, f) in factors.iter().enumerate().rev() {
                parts[k] = (i % f.order) as Elem;
                i /= f.order;
            }
            parts
        };
        let encode = |parts: &[Elem]| -> usize {
            let mut i = 0usize;
            for (k, f) in factors.iter().enumerate() {
                i = i * f.order + parts[k] as usize;
            }
            i
        };
        let mut table = vec![0 as Elem; order * order];
        for a in 0..order {
            let pa = decode(a);
            for b in 0..order {
                let pb = decode(b);
                let prod: Vec<Elem> =
                    factors.iter().enumerate().map(|(k, f)| f.mul(pa[k], pb[k])).collect();
                table[a * order + b] = encode(&prod) as Elem;
            }
        }
        let labels = (0..order)
            .map(|i| {
                let parts = decode(i);
                let inner: Vec<&str> =
                    factors.iter().enumerate().map(|(k, f)| f.label(parts[k])).collect();
                format!("({})", inner.join(","))
            })
            .collect();
        let identity = encode(&factors.iter().map(|f| f.identity).collect::<Vec<_>>()) as Elem;
        let inverse = (0..order)
            .map(|a| {
                let pa = decode(a);
                let pi: Vec<Elem> =
                    factors.iter().enumerate().map(|(k, f)| f.inv(pa[k])).collect();
                encode(&pi) as Elem
            })
            .collect();
        Ok(FiniteGroup { order, table, identity, inverse, labels })
    }
}

/// One-line permutation on points `0..degree`; `p[i]` is the image of `i`.
pub type Perm = Vec<u8>;

/// Right-action composition: apply `a`, then `b`.
pub fn perm_compose(a: &Perm, b: &Perm) -> Perm {
    a.iter().map(|&i| b[i as usize]).collect()
}

pub fn perm_inverse(a: &Perm) -> Perm {
    let mut inv = vec![0u8; a.len()];
    for (i, &p) in a.iter().enumerate() {
        inv[p as usize] = i as u8;
    }
    inv
}

/// Cycle notation with 1-based points, fixed points omitted; identity is "e".
pub fn cycle_notation(p: &Perm) -> String {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p[start] as usize == start {
            seen[start] = true;
            continue;
        }
        let mut cyc = vec![start];
        seen[start] = true;
        let mut cur = p[start] as usize;
        while cur != start {
            seen[cur] = true;
            cyc.push(cur);
            cur = p[cur] as usize;
        }
        out.push('(');
        out.push_str(
            &cyc.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(" "),
        );
        out.push(')');
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

/// Parse cycle notation like `"(1 2)(3 4)"` (1-based, whitespace or comma
/// separated); `"e"` and `"()"` denote the identity.
pub fn parse_cycles(s: &str, degree: usize) -> Result<Perm> {
    let mut p: Perm = (0..degree as u8).collect();
    let s = s.trim();
    if s == "e" || s == "()" || s.is_empty() {
        return Ok(p);
    }
    if !s.starts_with('(') {
        return Err(Error::InvalidGroup(format!("bad cycle notation {s:?}")));
    }
    for chunk in s.split(')') {
        let chunk = chunk.trim();
        if chunk.is_empty() {
            continue;
        }
        let chunk = chunk
            .strip_prefix('(')
            .ok_or_else(|| Error::InvalidGroup(format!("bad cycle notation {s:?}")))?;
        let pts: Vec<usize> = chunk
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidGroup(format!("bad point {t:?} in cycle")))
            })
            .collect::<Result<_>>()?;
        if pts.is_empty() {
            continue;
        }
        for &pt in &pts {
            if pt == 0 || pt > degree {
                return Err(Error::InvalidGroup(format!("point {pt} out of range 1..={degree}")));
            }
        }
        let mut dedup = pts.clone();
        dedup.sort_unstable();
        dedup.dedup();
        if dedup.len() != pts.len() {
            return Err(Error::InvalidGroup("generator permutation with repeated points".into()));
        }
        // cycle (p1 p2 … pk): p1↦p2, …, pk↦p1, composed on the right
        let mut cyc: Perm = (0..degree as u8).collect();
        for w in pts.windows(2) {
            cyc[w[0] - 1] = (w[1] - 1) as u8;
        }
        cyc[pts[pts.len() - 1] - 1] = (pts[0] - 1) as u8;
        p = perm_compose(&p, &cyc);
    }
    Ok(p)
}

/// A subgroup, stored as its sorted member set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Subgroup {
    members: Vec<Elem>,
}

impl Subgroup {
    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.members.binary_search(&e).is_ok()
    }

    pub fn is_whole(&self, g: &FiniteGroup) -> bool {
        self.members.len() == g.order()
    }

    pub fn is_trivial(&self, g: &FiniteGroup) -> bool {
        self.members.len() == 1 && self.members[0] == g.identity()
    }

    /// Validates closure, identity, inverses and Lagrange divisibility.
    pub fn validate(&self, g: &FiniteGroup) -> Result<()> {
        if !self.contains(g.identity()) {
            return Err(Error::InvalidGroup("subgroup misses the identity".into()));
        }
        for &a in &self.members {
            if !self.contains(g.inv(a)) {
                return Err(Error::InvalidGroup("subgroup not closed under inverse".into()));
            }
            for &b in &self.members {
                if !self.contains(g.mul(a, b)) {
                    return Err(Error::InvalidGroup("subgroup not closed under product".into()));
                }
            }
        }
        if g.order() % self.members.len() != 0 {
            return Err(Error::Internal("Lagrange violated".into()));
        }
        Ok(())
    }

    /// Conjugate subgroup `x⁻¹ H x`.
    pub fn conjugate(&self, g: &FiniteGroup, x: Elem) -> Subgroup {
        let mut members: Vec<Elem> = self.members.iter().map(|&h| g.conj(h, x)).collect();
        members.sort_unstable();
        Subgroup { members }
    }

    /// Lexicographically minimal member set among all conjugates.
    pub fn conjugacy_canonical(&self, g: &FiniteGroup) -> Subgroup {
        g.elements().map(|x| self.conjugate(g, x)).min().expect("group is nonempty")
    }

    pub fn is_conjugate_to(&self, g: &FiniteGroup, other: &Subgroup) -> bool {
        g.elements().any(|x| &self.conjugate(g, x) == other)
    }
}

/// Smallest subgroup containing `gens` (multiplicative closure). Empty
/// generators give the trivial subgroup.
pub fn subgroup_generated(g: &FiniteGroup, gens: &[Elem]) -> Subgroup {
    let mut members = BTreeSet::new();
    members.insert(g.identity());
    let mut queue: VecDeque<Elem> = gens.iter().copied().collect();
    for &e in gens {
        members.insert(e);
    }
    while let Some(a) = queue.pop_front() {
        let snapshot: Vec<Elem> = members.iter().copied().collect();
        for b in snapshot {
            for prod in [g.mul(a, b), g.mul(b, a), g.inv(a)] {
                if members.insert(prod) {
                    queue.push_back(prod);
                }
            }
        }
    }
    Subgroup { members: members.into_iter().collect() }
}

/// Partition of `G` into right cosets `Hg` with canonical (minimal-index)
/// representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetPartition {
    pub cosets: Vec<Vec<Elem>>,
    pub representative: Vec<Elem>,
    coset_of: Vec<usize>,
}

impl CosetPartition {
    pub fn count(&self) -> usize {
        self.cosets.len()
    }

    pub fn coset_of(&self, e: Elem) -> usize {
        self.coset_of[e as usize]
    }

    /// Right action: `Hg · k = H(gk)`.
    pub fn act(&self, g: &FiniteGroup, coset: usize, k: Elem) -> usize {
        self.coset_of(g.mul(self.representative[coset], k))
    }
}

pub fn right_cosets(g: &FiniteGroup, h: &Subgroup) -> Result<CosetPartition> {
    h.validate(g)?;
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut cosets = Vec::new();
    let mut representative = Vec::new();
    for e in g.elements() {
        if coset_of[e as usize] != usize::MAX {
            continue;
        }
        let idx = cosets.len();
        let mut members: Vec<Elem> = h.members().iter().map(|&x| g.mul(x, e)).collect();
        members.sort_unstable();
        for &m in &members {
            coset_of[m as usize] = idx;
        }
        representative.push(members[0]);
        cosets.push(members);
    }
    Ok(CosetPartition { cosets, representative, coset_of })
}

/// All subgroups of `G`, for `|G| ≤ 24`, by closure over incremental
/// generator sets.
pub fn all_subgroups(g: &FiniteGroup) -> Result<Vec<Subgroup>> {
    if g.order() > 24 {
        return Err(Error::InvalidGroup(format!(
            "subgroup enumeration capped at order 24, got {}",
            g.order()
        )));
    }
    let mut found: BTreeSet<Subgroup> = BTreeSet::new();
    let trivial = subgroup_generated(g, &[]);
    let mut queue = VecDeque::from([trivial.clone()]);
    found.insert(trivial);
    while let Some(h) = queue.pop_front() {
        for e in g.elements() {
            if h.contains(e) {
                continue;
            }
            let mut gens: Vec<Elem> = h.members().to_vec();
            gens.push(e);
            let bigger = subgroup_generated(g, &gens);
            if found.insert(bigger.clone()) {
                queue.push_back(bigger);
            }
        }
    }
    Ok(found.into_iter().collect())
}

/// Conjugacy-class representatives of all subgroups (lex-minimal member
/// sets), sorted by (order, members).
pub fn subgroup_conjugacy_representatives(g: &FiniteGroup) -> Result<Vec<Subgroup>> {
    let mut reps = BTreeSet::new();
    for h in all_subgroups(g)? {
        reps.insert(h.conjugacy_canonical(g));
    }
    let mut out: Vec<Subgroup> = reps.into_iter().collect();
    out.sort_by_key(|h| (h.len(), h.members().to_vec()));
    Ok(out)
}

/// A monoid morphism `A* → G` given by its letter images.
#[derive(Debug, Clone)]
pub struct GroupMorphism {
    group: Arc<FiniteGroup>,
    alphabet: Alphabet,
    images: Vec<Elem>,
}

impl GroupMorphism {
    pub fn new(group: Arc<FiniteGroup>, alphabet: Alphabet, images: Vec<Elem>) -> Result<Self> {
        if images.len() != alphabet.size() {
            return Err(Error::InvalidGroup("one image per letter required".into()));
        }
        for &e in &images {
            if e as usize >= group.order() {
                return Err(Error::InvalidGroup(format!("image index {e} out of range")));
            }
        }
        Ok(GroupMorphism { group, alphabet, images })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn letter_image(&self, l: Letter) -> Elem {
        self.images[l as usize]
    }

    /// Left-to-right product of letter images; the empty word maps to the
    /// identity.
    pub fn word_image(&self, w: &[Letter]) -> Elem {
        w.iter().fold(self.group.identity(), |acc, &l| self.group.mul(acc, self.images[l as usize]))
    }

    /// Whether the letter images generate all of `G`.
    pub fn is_onto(&self) -> bool {
        subgroup_generated(&self.group, &self.images).is_whole(&self.group)
    }

    /// Two-sided cocycle: image of `x_{[0,n)}` for `n ≥ 0`, inverse image of
    /// `x_{[n,0)}` for `n < 0`.
    pub fn cocycle(&self, x: &dyn BiInfinitePoint, n: i64) -> Result<Elem> {
        let (lo, hi) = if n >= 0 { (0, n) } else { (n, 0) };
        let mut acc = self.group.identity();
        for i in lo..hi {
            let l = x
                .letter_at(i)
                .ok_or(Error::IndexUnavailable { lo, hi })?;
            acc = self.group.mul(acc, self.images[l as usize]);
        }
        Ok(if n >= 0 { acc } else { self.group.inv(acc) })
    }
}

/// Constructor-level group description (the CLI JSON grammar mirrors this).
#[derive(Debug, Clone)]
pub enum GroupSpec {
    Cyclic { n: usize },
    Symmetric { n: usize },
    Permutations { degree: usize, generators: Vec<Perm> },
    Table { table: Vec<Vec<Elem>> },
    Product { factors: Vec<GroupSpec> },
}

pub fn build_group(spec: &GroupSpec) -> Result<FiniteGroup> {
    match spec {
        GroupSpec::Cyclic { n } => FiniteGroup::cyclic(*n),
        GroupSpec::Symmetric { n } => FiniteGroup::symmetric(*n),
        GroupSpec::Permutations { degree, generators } => {
            FiniteGroup::from_permutations(*degree, generators.clone())
        }
        GroupSpec::Table { table } => FiniteGroup::from_table(table.clone(), None),
        GroupSpec::Product { factors } => {
            let built: Vec<FiniteGroup> = factors.iter().map(build_group).collect::<Result<_>>()?;
            FiniteGroup::product(&built)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        FiniteGroup::symmetric(3).unwrap()
    }

    #[test]
    fn cyclic_two_table() {
        let g = FiniteGroup::cyclic(2).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.mul(0, 1), 1);
        assert_eq!(g.mul(1, 1), 0);
        assert_eq!(g.inv(1), 1);
    }

    #[test]
    fn symmetric_three_order() {
        assert_eq!(s3().order(), 6);
    }

    #[test]
    fn gl2z2_from_transpositions() {
        let g = FiniteGroup::from_permutations(
            3,
            vec![parse_cycles("(1 2)", 3).unwrap(), parse_cycles("(1 3)", 3).unwrap()],
        )
        .unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn composition_is_left_to_right() {
        // (1 2)(1 3) = (1 2 3) under "apply left first"
        let a = parse_cycles("(1 2)", 3).unwrap();
        let b = parse_cycles("(1 3)", 3).unwrap();
        let ab = perm_compose(&a, &b);
        assert_eq!(cycle_notation(&ab), "(1 2 3)");
        // and (1 3)(1 2) = (1 3 2)
        let ba = perm_compose(&b, &a);
        assert_eq!(cycle_notation(&ba), "(1 3 2)");
    }

    #[test]
    fn subgroup_generated_examples() {
        let g = s3();
        let trivial = subgroup_generated(&g, &[]);
        assert_eq!(trivial.members(), &[g.identity()]);
        let t = g.element_by_label("(1 2)").unwrap();
        let h = subgroup_generated(&g, &[t]);
        assert_eq!(h.len(), 2);
        let c = g.element_by_label("(1 2 3)").unwrap();
        let h3 = subgroup_generated(&g, &[c]);
        assert_eq!(h3.len(), 3);
    }

    #[test]
    fn right_cosets_of_s3() {
        let g = s3();
        let whole = subgroup_generated(&g, &g.elements().collect::<Vec<_>>());
        assert_eq!(right_cosets(&g, &whole).unwrap().count(), 1);
        let t = g.element_by_label("(1 2)").unwrap();
        let h = subgroup_generated(&g, &[t]);
        let parts = right_cosets(&g, &h).unwrap();
        assert_eq!(parts.count(), 3);
        for c in &parts.cosets {
            assert_eq!(c.len(), 2);
        }
        // right-coset law: same coset iff g·g'⁻¹ ∈ H
        for a in g.elements() {
            for b in g.elements() {
                let same = parts.coset_of(a) == parts.coset_of(b);
                assert_eq!(same, h.contains(g.mul(a, g.inv(b))));
            }
        }
    }

    #[test]
    fn cyclic_six_cosets() {
        let g = FiniteGroup::cyclic(6).unwrap();
        let h = subgroup_generated(&g, &[3]);
        assert_eq!(h.members(), &[0, 3]);
        assert_eq!(right_cosets(&g, &h).unwrap().count(), 3);
    }

    #[test]
    fn word_images() {
        let g = Arc::new(FiniteGroup::cyclic(2).unwrap());
        let ab = Alphabet::from_chars("ab");
        let phi = GroupMorphism::new(g.clone(), ab.clone(), vec![1, 0]).unwrap();
        assert_eq!(phi.word_image(&[]), 0);
        let w = ab.parse_word("abaab").unwrap();
        assert_eq!(phi.word_image(&w), 1);

        let s3 = Arc::new(s3());
        let a = s3.element_by_label("(1 2)").unwrap();
        let b = s3.element_by_label("(1 3)").unwrap();
        let phi3 = GroupMorphism::new(s3.clone(), ab.clone(), vec![a, b]).unwrap();
        assert_eq!(phi3.word_image(&ab.parse_word("aa").unwrap()), s3.identity());
    }

    #[test]
    fn cocycle_on_periodic_point() {
        use crate::words::PeriodicPoint;
        let g = Arc::new(FiniteGroup::cyclic(2).unwrap());
        let abc = Alphabet::from_chars("abc");
        let phi = GroupMorphism::new(g, abc.clone(), vec![1, 1, 0]).unwrap();
        let x = PeriodicPoint { period: abc.parse_word("abc").unwrap() };
        assert_eq!(phi.cocycle(&x, 0).unwrap(), 0);
        assert_eq!(phi.cocycle(&x, 3).unwrap(), 0);
        assert_eq!(phi.cocycle(&x, -3).unwrap(), 0);
        assert_eq!(phi.cocycle(&x, 1).unwrap(), 1);
        // cocycle law on shifted points: φ⁽ᵐ⁺ⁿ⁾(x) = φ⁽ᵐ⁾(x)·φ⁽ⁿ⁾(Sᵐx)
        for m in -12..=12i64 {
            for n in -12..=12i64 {
                let shifted = PeriodicPoint {
                    period: {
                        let k = m.rem_euclid(3) as usize;
                        let p = &x.period;
                        p[k..].iter().chain(p[..k].iter()).copied().collect()
                    },
                };
                let lhs = phi.cocycle(&x, m + n).unwrap();
                let rhs = phi
                    .group()
                    .mul(phi.cocycle(&x, m).unwrap(), phi.cocycle(&shifted, n).unwrap());
                assert_eq!(lhs, rhs, "cocycle law fails at m={m}, n={n}");
            }
        }
    }

    #[test]
    fn all_subgroups_of_s3() {
        let g = s3();
        let subs = all_subgroups(&g).unwrap();
        assert_eq!(subs.len(), 6); // 1, three ⟨transposition⟩, ⟨3-cycle⟩, S₃
        let reps = subgroup_conjugacy_representatives(&g).unwrap();
        assert_eq!(reps.len(), 4);
        assert_eq!(reps[0].len(), 1);
        assert_eq!(reps[1].len(), 2);
        assert_eq!(reps[2].len(), 3);
        assert_eq!(reps[3].len(), 6);
    }

    #[test]
    fn rejects_non_associative_table() {
        // 2x2 latin square that is a group; corrupting one entry kills
        // either identity or associativity
        let bad = vec![vec![0u16, 1], vec![1, 1]];
        assert!(FiniteGroup::from_table(bad, None).is_err());
    }

    #[test]
    fn rejects_repeated_points() {
        assert!(parse_cycles("(1 1)", 3).is_err());
        assert!(FiniteGroup::from_permutations(3, vec![vec![0, 0, 2]]).is_err());
    }

    #[test]
    fn product_group() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let p = FiniteGroup::product(&[z2, z3]).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.label(p.identity()), "(0,0)");
    }
}
