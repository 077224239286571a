//! Exhaustive and randomized runs of the full pipeline, with shrinking of
//! failing inputs to minimal counterexample bundles.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::embedder::{dimension_bound, embed, DimensionBound, EmbedError, Embedding};
use crate::factor::{star_triangle_factor, StarTriangleFactor};
use crate::graph::{generate_exhaustive, generate_random, Graph, GraphError, RandomGraphMeta};
use crate::matching::maximum_matching;
use crate::picker::{pick_vertices, PickSequence};
use crate::rational::Rational;
use crate::sig::{compute_sig, oracle_embed_2ia};
use crate::verifier::{verify, InequalityFailure, VerificationReport};

/// Result of running embed + verify on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass {
        d: usize,
    },
    /// The embedding was built but did not verify.
    VerifyFail(Box<VerificationReport>),
    /// The pipeline stopped with a diagnostic.
    Diagnostic(EmbedError),
}

impl Outcome {
    pub fn passed(&self) -> bool {
        matches!(self, Outcome::Pass { .. })
    }

    /// Coarse failure class kept fixed while shrinking.
    pub fn failure_key(&self) -> Option<String> {
        match self {
            Outcome::Pass { .. } => None,
            Outcome::VerifyFail(rep) => Some(match rep.inequality_failures.first() {
                Some(f) => format!("verify:{}:family{}", f.class.roman(), f.id),
                None if !rep.sig_equal => "verify:sig".to_string(),
                None if !rep.radius_agree => "verify:radius".to_string(),
                None => "verify:bound".to_string(),
            }),
            Outcome::Diagnostic(e) => Some(match e {
                EmbedError::Pick(p) => format!("picker:step{}", p.step),
                EmbedError::Unreachable { table, .. } => format!("embedder:{table}"),
                EmbedError::Roles { .. } => "embedder:roles".to_string(),
                other => other.stage().to_string(),
            }),
        }
    }

    pub fn message(&self) -> String {
        match self {
            Outcome::Pass { d } => format!("pass (d = {d})"),
            Outcome::VerifyFail(rep) => rep.diagnostics.join("; "),
            Outcome::Diagnostic(e) => e.to_string(),
        }
    }
}

/// Counts of `step <class> <step>` and `row <class> <label>` keys: which
/// picking steps and table rows a run exercised.
pub type Coverage = BTreeMap<String, usize>;

fn record(cov: &mut Coverage, e: &Embedding) {
    for b in &e.blocks {
        *cov.entry(format!("step {} {}", b.class.roman(), b.step))
            .or_default() += 1;
        for row in &b.rows {
            *cov.entry(format!("row {} {row}", b.class.roman()))
                .or_default() += 1;
        }
    }
}

fn merge(into: &mut Coverage, from: Coverage) {
    for (k, c) in from {
        *into.entry(k).or_default() += c;
    }
}

pub fn run_case(g: &Graph) -> Outcome {
    evaluate(g).0
}

/// [`run_case`] plus the coverage of the embedding, when one was built.
pub fn evaluate(g: &Graph) -> (Outcome, Coverage) {
    let mut cov = Coverage::new();
    let outcome = match embed(g) {
        Err(e) => Outcome::Diagnostic(e),
        Ok(e) => {
            record(&mut cov, &e);
            judge(g, &e)
        }
    };
    (outcome, cov)
}

fn judge(g: &Graph, e: &Embedding) -> Outcome {
    match verify(g, e) {
        Ok(rep) if rep.passed() => Outcome::Pass { d: e.d },
        Ok(rep) => Outcome::VerifyFail(Box::new(rep)),
        Err(err) => Outcome::VerifyFail(Box::new(VerificationReport {
            n: g.n(),
            d: e.d,
            bound: dimension_bound(g.n()),
            sig_equal: false,
            radius_agree: false,
            bound_ok: dimension_bound(g.n()).admits(e.d),
            missing_edges: Vec::new(),
            extra_edges: Vec::new(),
            radius_mismatches: Vec::new(),
            inequality_failures: Vec::new(),
            verdict: crate::verifier::Verdict::Fail,
            diagnostics: vec![err.to_string()],
        })),
    }
}

pub fn oracle_round_trip(g: &Graph) -> bool {
    oracle_embed_2ia(g)
        .map(|ps| compute_sig(&ps) == *g)
        .unwrap_or(false)
}

/// Deletes `v` and then every vertex left isolated.
pub fn delete_vertex(g: &Graph, v: usize) -> Graph {
    let keep: Vec<usize> = (0..g.n()).filter(|&u| u != v).collect();
    let h = g.induced(&keep);
    let keep: Vec<usize> = (0..h.n()).filter(|&u| h.degree(u) > 0).collect();
    h.induced(&keep)
}

/// Deletes edge `uv` and then every vertex left isolated.
pub fn delete_edge(g: &Graph, u: usize, v: usize) -> Graph {
    let edges = g.edges().into_iter().filter(|&e| e != (u.min(v), u.max(v)));
    let h = Graph::from_edges(g.n(), edges);
    let keep: Vec<usize> = (0..h.n()).filter(|&w| h.degree(w) > 0).collect();
    h.induced(&keep)
}

/// Greedy shrinking while `still_fails` holds: vertex deletions first, then
/// edge deletions. Every accepted step lowers `(n, m)` lexicographically, so
/// this terminates.
pub fn shrink(g: &Graph, still_fails: impl Fn(&Graph) -> bool) -> Graph {
    let mut cur = g.clone();
    'outer: loop {
        for v in 0..cur.n() {
            let h = delete_vertex(&cur, v);
            if h.n() >= 2 && still_fails(&h) {
                cur = h;
                continue 'outer;
            }
        }
        for (u, v) in cur.edges() {
            let h = delete_edge(&cur, u, v);
            if h.n() >= 2 && still_fails(&h) {
                cur = h;
                continue 'outer;
            }
        }
        return cur;
    }
}

/// Everything needed to reproduce and inspect a failure by hand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bundle {
    pub failure: String,
    pub message: String,
    /// Edge-list text accepted by the graph parser.
    pub graph: String,
    pub original_n: usize,
    pub factor: Option<StarTriangleFactor>,
    pub picks: Option<PickSequence>,
    /// Block that failed, when one is known.
    pub block: Option<usize>,
    pub inequality_failures: Vec<InequalityFailure>,
}

pub fn make_bundle(original: &Graph, g: &Graph, outcome: &Outcome) -> Bundle {
    let factor = star_triangle_factor(g, &maximum_matching(g)).ok();
    let picks = factor.as_ref().and_then(|f| pick_vertices(g, f).ok());
    let (block, inequality_failures) = match outcome {
        Outcome::Diagnostic(EmbedError::Unreachable { k, .. } | EmbedError::Roles { k, .. }) => {
            (Some(*k), Vec::new())
        }
        Outcome::VerifyFail(rep) => (
            rep.inequality_failures.first().map(|f| f.k),
            rep.inequality_failures.clone(),
        ),
        _ => (None, Vec::new()),
    };
    Bundle {
        failure: outcome.failure_key().unwrap_or_default(),
        message: outcome.message(),
        graph: g.to_edge_list(),
        original_n: original.n(),
        factor,
        picks,
        block,
        inequality_failures,
    }
}

/// Shrinks a failing graph, keeping its failure class, and bundles the result.
pub fn minimize(g: &Graph, outcome: &Outcome) -> Bundle {
    let key = outcome.failure_key();
    let small = shrink(g, |h| run_case(h).failure_key() == key);
    make_bundle(g, &small, &run_case(&small))
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub graphs: usize,
    pub pass: usize,
    pub verify_fail: usize,
    pub diagnostic: usize,
    pub oracle_ok: usize,
    /// Largest `d` seen among passing graphs.
    pub max_d: usize,
    pub bound: Option<DimensionBound>,
    pub bound_violations: usize,
}

impl Tally {
    fn add(&mut self, n: usize, outcome: &Outcome, oracle_ok: bool) {
        self.graphs += 1;
        self.bound = Some(dimension_bound(n));
        if oracle_ok {
            self.oracle_ok += 1;
        }
        match outcome {
            Outcome::Pass { d } => {
                self.pass += 1;
                self.max_d = self.max_d.max(*d);
            }
            Outcome::VerifyFail(rep) => {
                self.verify_fail += 1;
                if !rep.bound_ok {
                    self.bound_violations += 1;
                }
            }
            Outcome::Diagnostic(_) => self.diagnostic += 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExhaustiveSummary {
    pub max_n: usize,
    pub by_n: BTreeMap<usize, Tally>,
    /// Failure classes with their counts.
    pub failures: BTreeMap<String, usize>,
    /// One shrunk bundle per failure class.
    pub bundles: Vec<Bundle>,
    pub coverage: Coverage,
}

impl ExhaustiveSummary {
    pub fn total(&self) -> Tally {
        let mut t = Tally::default();
        for x in self.by_n.values() {
            t.graphs += x.graphs;
            t.pass += x.pass;
            t.verify_fail += x.verify_fail;
            t.diagnostic += x.diagnostic;
            t.oracle_ok += x.oracle_ok;
            t.max_d = t.max_d.max(x.max_d);
            t.bound_violations += x.bound_violations;
        }
        t
    }
}

fn collect_failures(
    cases: &[(Graph, Outcome)],
    failures: &mut BTreeMap<String, usize>,
    bundles: &mut Vec<Bundle>,
) {
    let mut first: BTreeMap<String, usize> = BTreeMap::new();
    for (i, (_, o)) in cases.iter().enumerate() {
        if let Some(key) = o.failure_key() {
            *failures.entry(key.clone()).or_default() += 1;
            first.entry(key).or_insert(i);
        }
    }
    let mut idx: Vec<usize> = first.into_values().collect();
    idx.sort_unstable();
    bundles.extend(
        idx.par_iter()
            .map(|&i| minimize(&cases[i].0, &cases[i].1))
            .collect::<Vec<_>>(),
    );
}

pub fn run_exhaustive(max_n: usize) -> Result<ExhaustiveSummary, GraphError> {
    if !(2..=6).contains(&max_n) {
        return Err(GraphError::UnsupportedOrder(max_n));
    }
    let mut by_n = BTreeMap::new();
    let mut cases = Vec::new();
    let mut coverage = Coverage::new();
    for n in 2..=max_n {
        let graphs: Vec<Graph> = generate_exhaustive(n)?.collect();
        let results: Vec<(Outcome, Coverage, bool)> = graphs
            .par_iter()
            .map(|g| {
                let (o, c) = evaluate(g);
                (o, c, oracle_round_trip(g))
            })
            .collect();
        let tally: &mut Tally = by_n.entry(n).or_default();
        for (g, (o, c, ok)) in graphs.into_iter().zip(results) {
            tally.add(n, &o, ok);
            merge(&mut coverage, c);
            if !o.passed() {
                cases.push((g, o));
            }
        }
    }
    let mut failures = BTreeMap::new();
    let mut bundles = Vec::new();
    collect_failures(&cases, &mut failures, &mut bundles);
    Ok(ExhaustiveSummary {
        max_n,
        by_n,
        failures,
        bundles,
        coverage,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzConfig {
    pub n_min: usize,
    pub n_max: usize,
    /// Edge probabilities, cycled over the cases.
    #[serde(with = "crate::rational::serde_vec")]
    pub p: Vec<Rational>,
    pub seed: u64,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzCase {
    pub index: usize,
    pub meta: RandomGraphMeta,
    pub d: Option<usize>,
    pub failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzSummary {
    pub config: FuzzConfig,
    pub pass: usize,
    pub fail: usize,
    pub failures: BTreeMap<String, usize>,
    /// `n -> (d -> count)` over passing graphs.
    pub histogram: BTreeMap<usize, BTreeMap<usize, usize>>,
    pub bound_violations: usize,
    pub cases: Vec<FuzzCase>,
    pub bundles: Vec<Bundle>,
    pub coverage: Coverage,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FuzzError {
    #[error("need 2 <= n-min <= n-max, got {0}..{1}")]
    Range(usize, usize),
    #[error("need at least one edge probability")]
    NoProbability,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Case parameters `(n, p, seed)` derived from the master seed.
pub fn fuzz_params(cfg: &FuzzConfig) -> Vec<(usize, Rational, u64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    (0..cfg.count)
        .map(|i| {
            (
                rng.gen_range(cfg.n_min..=cfg.n_max),
                cfg.p[i % cfg.p.len()],
                rng.gen(),
            )
        })
        .collect()
}

pub fn run_fuzz(cfg: &FuzzConfig) -> Result<FuzzSummary, FuzzError> {
    if cfg.n_min < 2 || cfg.n_min > cfg.n_max {
        return Err(FuzzError::Range(cfg.n_min, cfg.n_max));
    }
    if cfg.p.is_empty() {
        return Err(FuzzError::NoProbability);
    }
    let graphs = fuzz_params(cfg)
        .into_iter()
        .map(|(n, p, seed)| generate_random(n, p, seed))
        .collect::<Result<Vec<_>, _>>()?;
    let outcomes: Vec<(Outcome, Coverage)> = graphs.par_iter().map(|(g, _)| evaluate(g)).collect();

    let mut summary = FuzzSummary {
        config: cfg.clone(),
        pass: 0,
        fail: 0,
        failures: BTreeMap::new(),
        histogram: BTreeMap::new(),
        bound_violations: 0,
        cases: Vec::with_capacity(cfg.count),
        bundles: Vec::new(),
        coverage: Coverage::new(),
    };
    let mut failed = Vec::new();
    for (index, ((g, meta), (o, c))) in graphs.into_iter().zip(outcomes).enumerate() {
        merge(&mut summary.coverage, c);
        let d = match &o {
            Outcome::Pass { d } => {
                summary.pass += 1;
                *summary
                    .histogram
                    .entry(g.n())
                    .or_default()
                    .entry(*d)
                    .or_default() += 1;
                Some(*d)
            }
            Outcome::VerifyFail(rep) => {
                summary.fail += 1;
                if !rep.bound_ok {
                    summary.bound_violations += 1;
                }
                Some(rep.d)
            }
            Outcome::Diagnostic(_) => {
                summary.fail += 1;
                None
            }
        };
        summary.cases.push(FuzzCase {
            index,
            meta,
            d,
            failure: o.failure_key(),
        });
        if !o.passed() {
            failed.push((g, o));
        }
    }
    collect_failures(&failed, &mut summary.failures, &mut summary.bundles);
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn delete_vertex_drops_new_isolates() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]);
        let h = delete_vertex(&p3, 1);
        assert_eq!(h.n(), 0);
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert_eq!(
            delete_vertex(&c4, 0),
            Graph::from_edges(3, [(0, 1), (1, 2)])
        );
    }

    #[test]
    fn shrink_reaches_a_minimal_failing_graph() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5)]);
        let has_triangle = |h: &Graph| {
            (0..h.n()).any(|a| {
                (a + 1..h.n()).any(|b| (b + 1..h.n()).any(|c| h.edges_within(&[a, b, c]) == 3))
            })
        };
        let s = shrink(&g, has_triangle);
        assert_eq!(s.n(), 3);
        assert_eq!(s.edge_count(), 3);
    }

    #[test]
    fn small_corpus_passes() {
        let s = run_exhaustive(4).unwrap();
        let t = s.total();
        assert_eq!(t.graphs, 1 + 4 + 41);
        assert_eq!(t.oracle_ok, t.graphs);
        assert_eq!(t.pass, t.graphs, "{:?}", s.bundles);
    }

    #[test]
    fn fuzz_is_deterministic() {
        let cfg = FuzzConfig {
            n_min: 6,
            n_max: 12,
            p: vec![Rational::new(1, 2)],
            seed: 7,
            count: 20,
        };
        let a = run_fuzz(&cfg).unwrap();
        let b = run_fuzz(&cfg).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.pass + a.fail, 20);
    }

    #[test]
    fn fuzz_on_two_vertices_only_sees_k2() {
        let cfg = FuzzConfig {
            n_min: 2,
            n_max: 2,
            p: vec![int(0), int(1)],
            seed: 1,
            count: 10,
        };
        let s = run_fuzz(&cfg).unwrap();
        assert_eq!(s.pass, 10);
        assert_eq!(s.histogram[&2][&2], 10);
    }

    #[test]
    fn rejects_bad_ranges() {
        let cfg = FuzzConfig {
            n_min: 5,
            n_max: 4,
            p: vec![int(1)],
            seed: 0,
            count: 1,
        };
        assert_eq!(run_fuzz(&cfg), Err(FuzzError::Range(5, 4)));
    }
}
