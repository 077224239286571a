//! Simple undirected graphs on vertices `0..n`, the edge-list text format,
//! and the exhaustive/random test corpora.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("line {line}: malformed ({reason})")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: endpoint {vertex} out of range for n = {n}")]
    OutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("header announces {expected} edges but {found} were listed")]
    EdgeCount { expected: usize, found: usize },
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("graph needs at least 2 vertices, got {0}")]
    TooSmall(usize),
    #[error("exhaustive generation supports 2 <= n <= 6, got {0}")]
    UnsupportedOrder(usize),
    #[error("edge probability must lie in [0, 1], got {0}")]
    BadProbability(String),
}

/// Immutable once built; adjacency is kept both as a matrix and as sorted lists.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    matrix: Vec<bool>,
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            matrix: vec![false; n * n],
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph, silently ignoring repeated edges. Panics on self-loops
    /// or out-of-range endpoints; use [`parse_graph`] for untrusted input.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            assert!(
                u < n && v < n && u != v,
                "invalid edge ({u}, {v}) for n = {n}"
            );
            g.insert(u, v);
        }
        g
    }

    fn insert(&mut self, u: usize, v: usize) -> bool {
        if self.matrix[u * self.n + v] {
            return false;
        }
        self.matrix[u * self.n + v] = true;
        self.matrix[v * self.n + u] = true;
        let pos = self.adj[u].partition_point(|&x| x < v);
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].partition_point(|&x| x < u);
        self.adj[v].insert(pos, u);
        self.m += 1;
        true
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.matrix[u * self.n + v]
    }

    /// Sorted ascending.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// The pipeline precondition: `n >= 2` and minimum degree at least one.
    pub fn check_pipeline_input(&self) -> Result<(), GraphError> {
        if self.n < 2 {
            return Err(GraphError::TooSmall(self.n));
        }
        match self.isolated_vertices().first() {
            Some(&v) => Err(GraphError::IsolatedVertex(v)),
            None => Ok(()),
        }
    }

    pub fn is_independent(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    pub fn edges_within(&self, vs: &[usize]) -> usize {
        let mut c = 0;
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                c += self.has_edge(u, v) as usize;
            }
        }
        c
    }

    /// Subgraph induced on `keep` (in the given order), relabelled to `0..keep.len()`.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut g = Graph::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.insert(i, j);
                }
            }
        }
        g
    }

    /// Canonical edge-list text: header `n m`, then edges sorted.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.m);
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

impl FromStr for Graph {
    type Err = GraphError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_graph(s)
    }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), GraphError> {
    let mut it = text.split_whitespace();
    let malformed = |reason: &str| GraphError::Malformed {
        line,
        reason: reason.to_string(),
    };
    let a = it
        .next()
        .ok_or_else(|| malformed("expected two integers"))?;
    let b = it
        .next()
        .ok_or_else(|| malformed("expected two integers"))?;
    if it.next().is_some() {
        return Err(malformed("trailing tokens"));
    }
    let a = a
        .parse()
        .map_err(|_| malformed("not a non-negative integer"))?;
    let b = b
        .parse()
        .map_err(|_| malformed("not a non-negative integer"))?;
    Ok((a, b))
}

/// Parses the `n m` + `u v` lines format. Blank lines and `#` comments are skipped.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or(GraphError::Malformed {
        line: 1,
        reason: "missing header".into(),
    })?;
    let (n, m) = parse_pair(hl, header)?;
    let mut g = Graph::empty(n);
    let mut found = 0;
    for (line, l) in lines {
        let (u, v) = parse_pair(line, l)?;
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::OutOfRange { line, vertex: x, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { line, vertex: u });
        }
        if !g.insert(u, v) {
            return Err(GraphError::DuplicateEdge { line, u, v });
        }
        found += 1;
    }
    if found != m {
        return Err(GraphError::EdgeCount { expected: m, found });
    }
    Ok(g)
}

/// All labeled graphs on `n` vertices with no isolated vertex, ordered by the
/// bitmask over lexicographically ordered vertex pairs.
pub fn generate_exhaustive(n: usize) -> Result<impl Iterator<Item = Graph>, GraphError> {
    if !(2..=6).contains(&n) {
        return Err(GraphError::UnsupportedOrder(n));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total: u64 = 1 << pairs.len();
    Ok((0..total).filter_map(move |mask| {
        let mut deg = vec![0u8; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        if deg.contains(&0) {
            return None;
        }
        Some(Graph::from_edges(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e),
        ))
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomGraphMeta {
    pub n: usize,
    pub p: String,
    pub seed: u64,
    /// Edges added to give isolated vertices a neighbor, in insertion order.
    pub repairs: Vec<(usize, usize)>,
}

/// G(n, p) sample followed by isolated-vertex repair.
pub fn generate_random(
    n: usize,
    p: Rational,
    seed: u64,
) -> Result<(Graph, RandomGraphMeta), GraphError> {
    if n < 2 {
        return Err(GraphError::TooSmall(n));
    }
    if p < Rational::zero() || p > Rational::one() {
        return Err(GraphError::BadProbability(
            crate::rational::format_rational(&p),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let num = *p.numer() as u128;
    let den = *p.denom() as u128;
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_range(0..den) < num {
                g.insert(u, v);
            }
        }
    }
    let mut repairs = Vec::new();
    for v in 0..n {
        if g.degree(v) == 0 {
            let mut u = rng.gen_range(0..n - 1);
            if u >= v {
                u += 1;
            }
            g.insert(v, u);
            repairs.push((v, u));
        }
    }
    let meta = RandomGraphMeta {
        n,
        p: crate::rational::format_rational(&p),
        seed,
        repairs,
    };
    Ok((g, meta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    #[test]
    fn parses_examples() {
        let g = parse_graph("2 1\n0 1").unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);
        let c3 = parse_graph("3 3\n0 1\n1 2\n0 2").unwrap();
        assert_eq!(c3.edges(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(
            parse_graph("3 1\n0 0"),
            Err(GraphError::SelfLoop { line: 2, vertex: 0 })
        );
    }

    #[test]
    fn distinct_parse_errors() {
        assert!(matches!(
            parse_graph("3 1\n0 x"),
            Err(GraphError::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("3 1\n0 3"),
            Err(GraphError::OutOfRange { vertex: 3, .. })
        ));
        assert!(matches!(
            parse_graph("3 2\n0 1\n1 0"),
            Err(GraphError::DuplicateEdge { line: 3, .. })
        ));
        assert!(matches!(
            parse_graph("3 2\n0 1"),
            Err(GraphError::EdgeCount { .. })
        ));
        assert!(matches!(parse_graph(""), Err(GraphError::Malformed { .. })));
    }

    #[test]
    fn pipeline_precondition() {
        let g = parse_graph("3 1\n0 1").unwrap();
        assert_eq!(g.check_pipeline_input(), Err(GraphError::IsolatedVertex(2)));
        assert_eq!(
            Graph::empty(1).check_pipeline_input(),
            Err(GraphError::TooSmall(1))
        );
    }

    /// Labeled graphs on n vertices with minimum degree >= 1, by
    /// inclusion-exclusion over the set of forced-isolated vertices.
    fn count_no_isolated(n: u32) -> u64 {
        fn binom(n: u64, k: u64) -> u64 {
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        }
        let mut total: i64 = 0;
        for k in 0..=n as u64 {
            let rest = n as u64 - k;
            let term = binom(n as u64, k) as i64 * (1i64 << (rest * rest.saturating_sub(1) / 2));
            total += if k % 2 == 0 { term } else { -term };
        }
        total as u64
    }

    #[test]
    fn exhaustive_counts_match_inclusion_exclusion() {
        for n in 2..=6usize {
            let graphs: Vec<Graph> = generate_exhaustive(n).unwrap().collect();
            assert_eq!(graphs.len() as u64, count_no_isolated(n as u32), "n = {n}");
            let unique: HashSet<String> = graphs.iter().map(|g| g.to_edge_list()).collect();
            assert_eq!(unique.len(), graphs.len());
            assert!(graphs.iter().all(|g| g.isolated_vertices().is_empty()));
        }
        assert_eq!(count_no_isolated(3), 4);
        assert_eq!(count_no_isolated(4), 41);
        assert!(generate_exhaustive(7).is_err());
        assert!(generate_exhaustive(1).is_err());
    }

    #[test]
    fn random_generator_examples() {
        let (k5, meta) = generate_random(5, Rational::one(), 3).unwrap();
        assert_eq!(k5.edge_count(), 10);
        assert!(meta.repairs.is_empty());
        let (g, meta) = generate_random(4, Rational::zero(), 11).unwrap();
        assert_eq!(g.edges().len(), meta.repairs.len());
        assert!(g.isolated_vertices().is_empty());
        let half = Rational::new(1, 2);
        assert_eq!(
            generate_random(10, half, 7).unwrap(),
            generate_random(10, half, 7).unwrap()
        );
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..12).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e))
            })
        })
    }

    proptest! {
        #[test]
        fn parse_serialize_roundtrip(g in arb_graph()) {
            prop_assert_eq!(parse_graph(&g.to_edge_list()).unwrap(), g);
        }

        #[test]
        fn random_has_min_degree_one(n in 2usize..30, num in 0i128..=10, seed in any::<u64>()) {
            let (g, _) = generate_random(n, Rational::new(num, 10), seed).unwrap();
            prop_assert!(g.isolated_vertices().is_empty());
        }
    }
}
