//! Maximum cardinality matching in general graphs (Edmonds' blossom
//! algorithm) and an exhaustive-search oracle for small graphs.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatchingError {
    #[error("brute-force matching supports n <= 12, got {0}")]
    TooLarge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    mate: Vec<Option<usize>>,
}

impl Matching {
    pub fn empty(n: usize) -> Self {
        Matching {
            mate: vec![None; n],
        }
    }

    /// Panics if two edges share a vertex.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut m = Matching::empty(n);
        for &(u, v) in edges {
            assert!(
                m.mate[u].is_none() && m.mate[v].is_none(),
                "edges share a vertex"
            );
            m.mate[u] = Some(v);
            m.mate[v] = Some(u);
        }
        m
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate[v]
    }

    pub fn is_saturated(&self, v: usize) -> bool {
        self.mate[v].is_some()
    }

    pub fn size(&self) -> usize {
        self.mate.iter().filter(|m| m.is_some()).count() / 2
    }

    /// `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v)))
            .collect()
    }

    pub fn unsaturated(&self) -> Vec<usize> {
        (0..self.mate.len())
            .filter(|&v| self.mate[v].is_none())
            .collect()
    }

    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.mate.len() == g.n()
            && self.mate.iter().enumerate().all(|(u, m)| match *m {
                None => true,
                Some(v) => v != u && self.mate[v] == Some(u) && g.has_edge(u, v),
            })
    }
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS over alternating paths from `root`; returns the free endpoint reached.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for i in 0..n {
            self.base[i] = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }
}

/// Deterministic: roots and neighbor lists are scanned in increasing index order.
pub fn maximum_matching(g: &Graph) -> Matching {
    let n = g.n();
    let mut b = Blossom {
        g,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
        queue: VecDeque::new(),
    };
    for root in 0..n {
        if b.mate[root] != NONE {
            continue;
        }
        if let Some(mut v) = b.find_path(root) {
            while v != NONE {
                let pv = b.parent[v];
                let ppv = b.mate[pv];
                b.mate[v] = pv;
                b.mate[pv] = v;
                v = ppv;
            }
        }
    }
    Matching {
        mate: b
            .mate
            .into_iter()
            .map(|m| (m != NONE).then_some(m))
            .collect(),
    }
}

/// Maximum matching size by exhaustive branching; each free vertex is either
/// left unmatched or matched to a later free neighbor.
pub fn brute_force_matching(g: &Graph) -> Result<usize, MatchingError> {
    if g.n() > 12 {
        return Err(MatchingError::TooLarge(g.n()));
    }
    fn go(g: &Graph, from: usize, used: &mut [bool], cur: usize, best: &mut usize) {
        let free = (from..g.n()).filter(|&v| !used[v]).count();
        if cur + free / 2 <= *best {
            return;
        }
        let Some(v) = (from..g.n()).find(|&v| !used[v]) else {
            *best = cur;
            return;
        };
        used[v] = true;
        for &u in g.neighbors(v) {
            if u > v && !used[u] {
                used[u] = true;
                go(g, v + 1, used, cur + 1, best);
                used[u] = false;
            }
        }
        go(g, v + 1, used, cur, best);
        used[v] = false;
    }
    let mut best = 0;
    go(g, 0, &mut vec![false; g.n()], 0, &mut best);
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate_exhaustive;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    fn petersen() -> Graph {
        let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend((0..5).map(|i| (i, i + 5)));
        e.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        Graph::from_edges(10, e)
    }

    #[test]
    fn small_examples() {
        let k2 = Graph::from_edges(2, [(0, 1)]);
        assert_eq!(maximum_matching(&k2).size(), 1);
        assert_eq!(maximum_matching(&cycle(5)).size(), 2);
        let p = petersen();
        assert_eq!(brute_force_matching(&p).unwrap(), 5);
        assert_eq!(maximum_matching(&p).size(), 5);
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        assert_eq!(brute_force_matching(&p4).unwrap(), 2);
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(brute_force_matching(&k4).unwrap(), 2);
        assert_eq!(brute_force_matching(&cycle(7)).unwrap(), 3);
        assert_eq!(
            brute_force_matching(&Graph::empty(13)),
            Err(MatchingError::TooLarge(13))
        );
    }

    #[test]
    fn blossom_needs_contraction() {
        // Odd cycle with a pendant path: greedy augmentations alone fail here.
        let g = Graph::from_edges(
            8,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (2, 5),
                (5, 6),
                (3, 7),
            ],
        );
        assert_eq!(
            maximum_matching(&g).size(),
            brute_force_matching(&g).unwrap()
        );
    }

    #[test]
    fn matches_oracle_on_small_corpus() {
        for n in 2..=5 {
            for g in generate_exhaustive(n).unwrap() {
                let m = maximum_matching(&g);
                assert!(m.is_valid_for(&g));
                assert_eq!(m.size(), brute_force_matching(&g).unwrap(), "{g:?}");
                assert!(g.is_independent(&m.unsaturated()));
            }
        }
    }

    #[test]
    fn deterministic() {
        let g = petersen();
        assert_eq!(maximum_matching(&g), maximum_matching(&g));
    }
}
