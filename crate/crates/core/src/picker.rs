//! Ordered vertex picking over a star-triangle factor.
//!
//! The picker walks a fixed 47-step procedure. Step numbers are recorded on
//! every pick and in every diagnostic so traces can be followed by hand. All
//! searches are deterministic: candidate sets are scanned in lexicographic
//! order of their (role-ordered) vertex tuples.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::factor::StarTriangleFactor;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PickClass {
    /// I
    RandomPairOrSingleton,
    /// II
    ResidualSet,
    /// III
    IndependentPair,
    /// IV
    CliqueTriple,
    /// V
    V0W1W2,
    /// VI
    W0V1V2,
    /// VII
    OneEdgeTriplet,
    /// VIII
    SuperTriplet,
}

impl PickClass {
    pub fn roman(self) -> &'static str {
        match self {
            PickClass::RandomPairOrSingleton => "I",
            PickClass::ResidualSet => "II",
            PickClass::IndependentPair => "III",
            PickClass::CliqueTriple => "IV",
            PickClass::V0W1W2 => "V",
            PickClass::W0V1V2 => "VI",
            PickClass::OneEdgeTriplet => "VII",
            PickClass::SuperTriplet => "VIII",
        }
    }
}

impl fmt::Display for PickClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.roman())
    }
}

/// Role labels of a picked set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Roles {
    /// Singleton or pair, in index order.
    Loose {
        members: Vec<usize>,
    },
    /// Residual members `e_1..e_m` in index order.
    Residual {
        members: Vec<usize>,
    },
    /// Non-adjacent pair, `p < q`.
    Pair {
        p: usize,
        q: usize,
    },
    /// Clique triple in index order.
    Clique {
        p: usize,
        q: usize,
        s: usize,
    },
    /// `w` is the center whose leaves contain `w1 < w2`.
    V0W1W2 {
        v0: usize,
        w1: usize,
        w2: usize,
        w: usize,
    },
    /// `w0` is a leaf of `w`, adjacent to `v1` but not `v2`.
    W0V1V2 {
        w0: usize,
        v1: usize,
        v2: usize,
        w: usize,
    },
    /// `p q` is the only edge, `p < q`.
    OneEdge {
        p: usize,
        q: usize,
        s: usize,
    },
    Super {
        a: usize,
        b: usize,
        c: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PickedSet {
    pub k: usize,
    pub class: PickClass,
    /// Step of the procedure that emitted this set.
    pub step: u8,
    /// Members in role order.
    pub vertices: Vec<usize>,
    pub roles: Roles,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error, Serialize, Deserialize)]
#[error("picking failed at step {step}: {message}")]
pub struct PickError {
    pub step: u8,
    pub message: String,
}

fn fail<T>(step: u8, message: impl Into<String>) -> Result<T, PickError> {
    Err(PickError {
        step,
        message: message.into(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PickSequence {
    pub picks: Vec<PickedSet>,
    /// `pick_of[v]` is the index `k` of the set containing `v`.
    pub pick_of: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SequenceViolation {
    #[error("vertex {0} is picked {1} times")]
    Cover(usize, usize),
    #[error("pick {k}: {reason}")]
    Class { k: usize, reason: String },
    #[error("{0} residual sets")]
    TooManyResiduals(usize),
    #[error("{0} class I sets")]
    TooManyLoose(usize),
    #[error("a step-30 pick coexists with a residual set")]
    Step30WithResidual,
    #[error("accounting identity fails: n = {n} but parts sum to {sum}")]
    Accounting { n: usize, sum: usize },
}

/// Breakdown `n = 3|C_t| + 2|C_p| + |R_t| + sum k_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Accounting {
    pub triples: usize,
    pub pairs: usize,
    pub residual: usize,
    pub loose: usize,
}

impl Accounting {
    pub fn total(&self) -> usize {
        3 * self.triples + 2 * self.pairs + self.residual + self.loose
    }
}

impl PickSequence {
    pub fn len(&self) -> usize {
        self.picks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.picks.is_empty()
    }

    pub fn accounting(&self) -> Accounting {
        let mut a = Accounting {
            triples: 0,
            pairs: 0,
            residual: 0,
            loose: 0,
        };
        for p in &self.picks {
            match p.class {
                PickClass::RandomPairOrSingleton => a.loose += p.vertices.len(),
                PickClass::ResidualSet => a.residual += p.vertices.len(),
                PickClass::IndependentPair => a.pairs += 1,
                _ => a.triples += 1,
            }
        }
        a
    }

    /// Partition, per-class structure, multiplicity limits and accounting.
    pub fn validate(&self, g: &Graph, f: &StarTriangleFactor) -> Result<(), SequenceViolation> {
        let n = g.n();
        let mut cover = vec![0usize; n];
        for p in &self.picks {
            p.vertices.iter().for_each(|&v| cover[v] += 1);
        }
        if let Some(v) = (0..n).find(|&v| cover[v] != 1) {
            return Err(SequenceViolation::Cover(v, cover[v]));
        }
        for p in &self.picks {
            let bad = |reason: &str| SequenceViolation::Class {
                k: p.k,
                reason: reason.to_string(),
            };
            let vs = &p.vertices;
            let no_shared_leaf_set = |vs: &[usize]| {
                vs.iter()
                    .enumerate()
                    .all(|(i, &a)| vs[i + 1..].iter().all(|&b| !f.share_leaf_set(a, b)))
            };
            match &p.roles {
                Roles::Super { .. } => {
                    if !g.is_independent(vs) || !no_shared_leaf_set(vs) {
                        return Err(bad("super triplet not independent across stars"));
                    }
                }
                Roles::OneEdge { p: a, q: b, s } => {
                    if g.edges_within(vs) != 1
                        || !g.has_edge(*a, *b)
                        || !no_shared_leaf_set(vs)
                        || *s == *a
                    {
                        return Err(bad("one-edge triplet malformed"));
                    }
                }
                Roles::V0W1W2 { v0, w1, w2, w } => {
                    let leaf_of_w = |x: usize| f.leaf_center(x) == Some(*w);
                    if leaf_of_w(*v0) || !leaf_of_w(*w1) || !leaf_of_w(*w2) || !g.is_independent(vs)
                    {
                        return Err(bad("v0/w1/w2 triple malformed"));
                    }
                }
                Roles::W0V1V2 { w0, v1, v2, w } => {
                    if f.leaf_center(*w0) != Some(*w)
                        || g.edges_within(vs) != 2
                        || !g.has_edge(*v1, *v2)
                        || !g.has_edge(*w0, *v1)
                    {
                        return Err(bad("w0/v1/v2 triple malformed"));
                    }
                }
                Roles::Pair { p: a, q: b } => {
                    if g.has_edge(*a, *b) {
                        return Err(bad("independent pair is adjacent"));
                    }
                }
                Roles::Clique { .. } => {
                    if g.edges_within(vs) != 3 {
                        return Err(bad("clique triple is not a clique"));
                    }
                }
                Roles::Loose { members } => {
                    if members.is_empty() || members.len() > 2 {
                        return Err(bad("class I set must have one or two vertices"));
                    }
                }
                Roles::Residual { members } => {
                    if members.is_empty() {
                        return Err(bad("empty residual set"));
                    }
                }
            }
        }
        let residuals = self
            .picks
            .iter()
            .filter(|p| p.class == PickClass::ResidualSet)
            .count();
        if residuals > 1 {
            return Err(SequenceViolation::TooManyResiduals(residuals));
        }
        let loose = self
            .picks
            .iter()
            .filter(|p| p.class == PickClass::RandomPairOrSingleton)
            .count();
        if loose > 3 {
            return Err(SequenceViolation::TooManyLoose(loose));
        }
        if residuals > 0 && self.picks.iter().any(|p| p.step == 30) {
            return Err(SequenceViolation::Step30WithResidual);
        }
        let sum = self.accounting().total();
        if sum != n {
            return Err(SequenceViolation::Accounting { n, sum });
        }
        Ok(())
    }

    /// Adjacency forced on later picks by residual sets, independent pairs and
    /// `v0, w1, w2` triples. Each violation names the pick and the witness pair.
    pub fn adjacency_violations(&self, g: &Graph, f: &StarTriangleFactor) -> Vec<String> {
        let mut out = Vec::new();
        for p in &self.picks {
            let later = (0..g.n()).filter(|&v| self.pick_of[v] > p.k);
            let (must, label): (&[usize], &str) = match &p.roles {
                Roles::Residual { members } => (members, "residual set"),
                Roles::Pair { .. } => (&p.vertices, "independent pair"),
                Roles::V0W1W2 { .. } => (&p.vertices, "v0/w1/w2 triple"),
                _ => continue,
            };
            let w = match p.roles {
                Roles::V0W1W2 { w, .. } => Some(w),
                _ => None,
            };
            for v in later {
                if w.is_some() && f.leaf_center(v) == w {
                    continue;
                }
                if let Some(&u) = must.iter().find(|&&u| !g.has_edge(u, v)) {
                    out.push(format!(
                        "pick {} ({label}): {u} and later {v} are not adjacent",
                        p.k
                    ));
                }
            }
        }
        out
    }
}

struct Picker<'a> {
    g: &'a Graph,
    f: &'a StarTriangleFactor,
    pick_of: Vec<Option<usize>>,
    picks: Vec<PickedSet>,
    /// Current unpicked leaves per center, indexed by vertex.
    leaves: Vec<Vec<usize>>,
    a: BTreeSet<usize>,
    b: BTreeSet<usize>,
}

impl<'a> Picker<'a> {
    fn new(g: &'a Graph, f: &'a StarTriangleFactor) -> Self {
        let mut leaves = vec![Vec::new(); g.n()];
        for s in &f.stars {
            leaves[s.center] = s.leaves.clone();
        }
        Picker {
            g,
            f,
            pick_of: vec![None; g.n()],
            picks: Vec::new(),
            leaves,
            a: f.stars.iter().map(|s| s.center).collect(),
            b: BTreeSet::new(),
        }
    }

    fn is_picked(&self, v: usize) -> bool {
        self.pick_of[v].is_some()
    }

    fn unpicked(&self) -> Vec<usize> {
        (0..self.g.n()).filter(|&v| !self.is_picked(v)).collect()
    }

    fn emit(&mut self, class: PickClass, step: u8, roles: Roles) {
        let vertices = match &roles {
            Roles::Loose { members } | Roles::Residual { members } => members.clone(),
            Roles::Pair { p, q } => vec![*p, *q],
            Roles::Clique { p, q, s } | Roles::OneEdge { p, q, s } => vec![*p, *q, *s],
            Roles::V0W1W2 { v0, w1, w2, .. } => vec![*v0, *w1, *w2],
            Roles::W0V1V2 { w0, v1, v2, .. } => vec![*w0, *v1, *v2],
            Roles::Super { a, b, c } => vec![*a, *b, *c],
        };
        let k = self.picks.len();
        for &v in &vertices {
            debug_assert!(self.pick_of[v].is_none());
            self.pick_of[v] = Some(k);
            if let Some(c) = self.f.leaf_center(v) {
                self.leaves[c].retain(|&x| x != v);
            }
        }
        self.picks.push(PickedSet {
            k,
            class,
            step,
            vertices,
            roles,
        });
    }

    /// Star-set bookkeeping after a pick made while stars are still tracked.
    fn track(&mut self, picked: &[usize]) {
        for &v in picked {
            self.a.remove(&v);
            self.b.remove(&v);
            if let Some(c) = self.f.leaf_center(v) {
                if self.a.remove(&c) && !self.leaves[c].is_empty() {
                    self.b.insert(c);
                }
            }
        }
        let emptied: Vec<usize> = self
            .a
            .iter()
            .chain(self.b.iter())
            .copied()
            .filter(|&c| self.leaves[c].is_empty())
            .collect();
        for c in emptied {
            self.a.remove(&c);
            self.b.remove(&c);
        }
    }

    fn super_triplet(&self, mut vs: [usize; 3], step: u8) -> Roles {
        vs.sort_unstable();
        match vs.iter().position(|&v| self.f.is_leaf(v)) {
            Some(i) if step < 22 => {
                let b = vs[i];
                let rest: Vec<usize> = vs.iter().copied().filter(|&v| v != b).collect();
                Roles::Super {
                    a: rest[0],
                    b,
                    c: rest[1],
                }
            }
            _ => Roles::Super {
                a: vs[0],
                b: vs[1],
                c: vs[2],
            },
        }
    }

    fn stars_phase(&mut self) -> Result<(), PickError> {
        while self.a.len() + self.b.len() >= 3 {
            if self.b.len() > 3 {
                return fail(2, format!("|B| = {} exceeds 3", self.b.len()));
            }
            let from_b = self.b.len();
            let mut chosen: Vec<usize> = self.a.iter().copied().take(3 - from_b).collect();
            chosen.extend(self.b.iter().copied());
            let [x, y, z] = [chosen[0], chosen[1], chosen[2]];
            let first = |c: usize| self.leaves[c][0];
            let (x1, y1, z1) = (first(x), first(y), first(z));
            let candidates: [(u8, [usize; 3]); 7] = [
                (7, [x, y, z]),
                (9, [x1, y, z]),
                (9, [x, y1, z]),
                (9, [x, y, z1]),
                (10, [x, y1, z1]),
                (10, [x1, y, z1]),
                (10, [x1, y1, z]),
            ];
            let (step, triple) = candidates
                .into_iter()
                .find(|(_, t)| self.g.is_independent(t))
                .unwrap_or((11, [x1, y1, z1]));
            if !self.g.is_independent(&triple) {
                return fail(11, format!("leaf triple {x1} {y1} {z1} is not independent"));
            }
            let roles = self.super_triplet(triple, step);
            self.emit(PickClass::SuperTriplet, step, roles);
            self.track(&triple);
        }
        let rest: Vec<usize> = self
            .a
            .iter()
            .chain(self.b.iter())
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        match rest.len() {
            2 => self.emit(
                PickClass::RandomPairOrSingleton,
                18,
                Roles::Loose { members: rest },
            ),
            1 => self.emit(
                PickClass::RandomPairOrSingleton,
                19,
                Roles::Loose { members: rest },
            ),
            _ => {}
        }
        self.a.clear();
        self.b.clear();
        Ok(())
    }

    fn separated(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| !self.f.share_leaf_set(a, b)))
    }

    fn find_triple(&self, edges: usize) -> Option<[usize; 3]> {
        let c = self.unpicked();
        for (i, &p) in c.iter().enumerate() {
            for (j, &q) in c.iter().enumerate().skip(i + 1) {
                if self.f.share_leaf_set(p, q) {
                    continue;
                }
                for &s in &c[j + 1..] {
                    let t = [p, q, s];
                    if self.g.edges_within(&t) == edges && self.separated(&t) {
                        return Some(t);
                    }
                }
            }
        }
        None
    }

    /// Picked centers whose leaf sets still hold unpicked vertices.
    fn open_leaf_sets(&self) -> Vec<usize> {
        self.f
            .stars
            .iter()
            .map(|s| s.center)
            .filter(|&c| !self.leaves[c].is_empty())
            .collect()
    }

    fn triples_phase(&mut self) -> Result<(), PickError> {
        while let Some(t) = self.find_triple(0) {
            let roles = self.super_triplet(t, 22);
            self.emit(PickClass::SuperTriplet, 22, roles);
        }
        while let Some(t) = self.find_triple(1) {
            let (p, q, s) = if self.g.has_edge(t[0], t[1]) {
                (t[0], t[1], t[2])
            } else if self.g.has_edge(t[0], t[2]) {
                (t[0], t[2], t[1])
            } else {
                (t[1], t[2], t[0])
            };
            self.emit(PickClass::OneEdgeTriplet, 24, Roles::OneEdge { p, q, s });
        }
        Ok(())
    }

    /// Steps 26 to 39. Returns `true` when the procedure stops at step 32.
    fn leaf_sets_phase(&mut self) -> Result<bool, PickError> {
        let open = self.open_leaf_sets();
        if let Some(&c) = open.iter().find(|&&c| !self.is_picked(c)) {
            return fail(
                26,
                format!("center {c} is unpicked while its leaves remain"),
            );
        }
        match open.len() {
            0 => return Ok(false),
            1 => {}
            2 => {
                let mut members: Vec<usize> =
                    open.iter().flat_map(|&c| self.leaves[c].clone()).collect();
                members.sort_unstable();
                self.emit(PickClass::ResidualSet, 27, Roles::Residual { members });
                return Ok(false);
            }
            k => {
                return fail(
                    26,
                    format!("{k} leaf sets still hold unpicked vertices: centers {open:?}"),
                )
            }
        }
        let w = open[0];
        loop {
            let dw = self.leaves[w].clone();
            if dw.len() <= 2 {
                self.emit(
                    PickClass::RandomPairOrSingleton,
                    30,
                    Roles::Loose { members: dw },
                );
                return Ok(false);
            }
            let outside: Vec<usize> = self
                .unpicked()
                .into_iter()
                .filter(|v| !dw.contains(v))
                .collect();
            if outside.is_empty() {
                self.emit(PickClass::ResidualSet, 32, Roles::Residual { members: dw });
                return Ok(true);
            }
            if let Some(roles) = self.find_v0w1w2(w, &dw, &outside) {
                self.emit(PickClass::V0W1W2, 33, roles);
                continue;
            }
            if let Some(roles) = self.find_w0v1v2(w, &dw, &outside) {
                self.emit(PickClass::W0V1V2, 35, roles);
                continue;
            }
            if outside.len() == 1 {
                self.emit(
                    PickClass::RandomPairOrSingleton,
                    37,
                    Roles::Loose { members: outside },
                );
            }
            self.emit(PickClass::ResidualSet, 38, Roles::Residual { members: dw });
            return Ok(false);
        }
    }

    fn find_v0w1w2(&self, w: usize, dw: &[usize], outside: &[usize]) -> Option<Roles> {
        for &v0 in outside {
            for (i, &w1) in dw.iter().enumerate() {
                if self.g.has_edge(v0, w1) {
                    continue;
                }
                for &w2 in &dw[i + 1..] {
                    if self.g.is_independent(&[v0, w1, w2]) {
                        return Some(Roles::V0W1W2 { v0, w1, w2, w });
                    }
                }
            }
        }
        None
    }

    fn find_w0v1v2(&self, w: usize, dw: &[usize], outside: &[usize]) -> Option<Roles> {
        for &w0 in dw {
            for (i, &a) in outside.iter().enumerate() {
                for &b in &outside[i + 1..] {
                    if !self.g.has_edge(a, b) {
                        continue;
                    }
                    match (self.g.has_edge(w0, a), self.g.has_edge(w0, b)) {
                        (true, false) => {
                            return Some(Roles::W0V1V2 {
                                w0,
                                v1: a,
                                v2: b,
                                w,
                            })
                        }
                        (false, true) => {
                            return Some(Roles::W0V1V2 {
                                w0,
                                v1: b,
                                v2: a,
                                w,
                            })
                        }
                        _ => {}
                    }
                }
            }
        }
        None
    }

    fn clique_phase(&mut self) -> Result<(), PickError> {
        'pairs: loop {
            let c = self.unpicked();
            for (i, &p) in c.iter().enumerate() {
                if let Some(&q) = c[i + 1..].iter().find(|&&q| !self.g.has_edge(p, q)) {
                    self.emit(PickClass::IndependentPair, 40, Roles::Pair { p, q });
                    continue 'pairs;
                }
            }
            break;
        }
        let c = self.unpicked();
        if self.g.edges_within(&c) != c.len() * c.len().saturating_sub(1) / 2 {
            return fail(42, "unpicked vertices do not form a clique");
        }
        let mut chunks = c.chunks_exact(3);
        for t in chunks.by_ref() {
            self.emit(
                PickClass::CliqueTriple,
                43,
                Roles::Clique {
                    p: t[0],
                    q: t[1],
                    s: t[2],
                },
            );
        }
        let rest = chunks.remainder().to_vec();
        if !rest.is_empty() {
            self.emit(
                PickClass::RandomPairOrSingleton,
                45,
                Roles::Loose { members: rest },
            );
        }
        Ok(())
    }
}

pub fn pick_vertices(g: &Graph, f: &StarTriangleFactor) -> Result<PickSequence, PickError> {
    let mut p = Picker::new(g, f);
    p.stars_phase()?;
    p.triples_phase()?;
    if !p.leaf_sets_phase()? {
        p.clique_phase()?;
    }
    if let Some(v) = p.unpicked().first() {
        return fail(47, format!("vertex {v} left unpicked"));
    }
    let pick_of = p
        .pick_of
        .into_iter()
        .map(|k| k.expect("all picked"))
        .collect();
    Ok(PickSequence {
        picks: p.picks,
        pick_of,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::star_triangle_factor;
    use crate::graph::generate_exhaustive;
    use crate::matching::maximum_matching;

    fn run(g: &Graph) -> (StarTriangleFactor, PickSequence) {
        let f = star_triangle_factor(g, &maximum_matching(g)).unwrap();
        let ps = pick_vertices(g, &f).unwrap();
        ps.validate(g, &f).unwrap();
        assert_eq!(
            ps.adjacency_violations(g, &f),
            Vec::<String>::new(),
            "{:?}",
            g.edges()
        );
        (f, ps)
    }

    fn summary(ps: &PickSequence) -> Vec<(PickClass, u8, Vec<usize>)> {
        ps.picks
            .iter()
            .map(|p| (p.class, p.step, p.vertices.clone()))
            .collect()
    }

    #[test]
    fn k2_trace() {
        let (_, ps) = run(&Graph::from_edges(2, [(0, 1)]));
        assert_eq!(
            summary(&ps),
            vec![(PickClass::RandomPairOrSingleton, 45, vec![0, 1])]
        );
    }

    #[test]
    fn c3_trace() {
        let (_, ps) = run(&Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]));
        assert_eq!(
            summary(&ps),
            vec![(PickClass::CliqueTriple, 43, vec![0, 1, 2])]
        );
    }

    #[test]
    fn two_k2_trace() {
        let (_, ps) = run(&Graph::from_edges(4, [(0, 1), (2, 3)]));
        assert_eq!(
            summary(&ps),
            vec![
                (PickClass::OneEdgeTriplet, 24, vec![0, 1, 2]),
                (PickClass::RandomPairOrSingleton, 45, vec![3]),
            ]
        );
        assert_eq!(ps.picks[0].roles, Roles::OneEdge { p: 0, q: 1, s: 2 });
    }

    #[test]
    fn claw_trace() {
        let (_, ps) = run(&Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]));
        assert_eq!(
            summary(&ps),
            vec![
                (PickClass::RandomPairOrSingleton, 19, vec![0]),
                (PickClass::ResidualSet, 32, vec![1, 2, 3]),
            ]
        );
    }

    #[test]
    fn three_claws_use_the_star_loop() {
        // Centers 0, 4, 8 with leaves {1,2,3}, {5,6,7}, {9,10,11}.
        let mut e = Vec::new();
        for c in [0, 4, 8] {
            e.extend((1..4).map(|i| (c, c + i)));
        }
        let (_, ps) = run(&Graph::from_edges(12, e));
        assert_eq!(ps.picks[0].class, PickClass::SuperTriplet);
        assert_eq!(ps.picks[0].step, 7);
        assert_eq!(ps.picks[0].vertices, vec![0, 4, 8]);
    }

    #[test]
    fn sequences_valid_on_small_corpus() {
        for n in 2..=5 {
            for g in generate_exhaustive(n).unwrap() {
                run(&g);
            }
        }
    }
}
