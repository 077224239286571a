//! Certification of an embedding: direct SIG recomputation, radius agreement,
//! the dimension bound, and the per-block inequality families.
//!
//! Families checked for block `k` (`|.|_k` is the sup-norm over block `k`):
//!
//! 1. `|c(u) - c(x)|_k <= r(u)` for every `u` and `x` in `N(u)`;
//! 2. `|c(u) - c(v)|_k >= max(r(u), r(v))` for `u` in `P_k`, `v` picked at or before `k`;
//! 3. `|c(u) - c(v)|_k >= r(u) + r(v)` on the same domain, non-edges inside one leaf set;
//! 4. `|c(u) - c(v)|_k >= r(u) + r(v)` for `u` in `P_k`, `v` picked at or after `k`,
//!    non-edges not inside one leaf set;
//! 5. `|c(u) - c(v)|_k < r(u) + r(v)` for every edge.
//!
//! Direct SIG equality is authoritative; the families localize failures.

use serde::{Deserialize, Serialize};

use crate::embedder::{dimension_bound, DimensionBound, Embedding};
use crate::graph::Graph;
use crate::picker::PickClass;
use crate::rational::{format_rational, serde_scalar, Rational};
use crate::sig::{compute_radii, compute_sig, sup_distance, PointSet, SigError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("graph has {graph} vertices but the embedding has {embedding}")]
    VertexCount { graph: usize, embedding: usize },
    #[error("point {vertex} has dimension {found}, expected {expected}")]
    Dimension {
        vertex: usize,
        expected: usize,
        found: usize,
    },
    #[error(transparent)]
    Points(#[from] SigError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityFailure {
    pub k: usize,
    pub class: PickClass,
    pub step: u8,
    pub id: u8,
    pub u: usize,
    pub v: usize,
    #[serde(with = "serde_scalar")]
    pub lhs: Rational,
    #[serde(with = "serde_scalar")]
    pub rhs: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n: usize,
    pub d: usize,
    pub bound: DimensionBound,
    pub sig_equal: bool,
    pub radius_agree: bool,
    pub bound_ok: bool,
    pub missing_edges: Vec<(usize, usize)>,
    pub extra_edges: Vec<(usize, usize)>,
    pub radius_mismatches: Vec<usize>,
    pub inequality_failures: Vec<InequalityFailure>,
    pub verdict: Verdict,
    pub diagnostics: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

fn block_distance(e: &Embedding, k: usize, u: usize, v: usize) -> Rational {
    let dims = e.blocks[k].dims.clone();
    sup_distance(&e.coords[u][dims.clone()], &e.coords[v][dims])
}

/// Failures of the five families on block `k`.
pub fn check_inequalities(g: &Graph, e: &Embedding, k: usize) -> Vec<InequalityFailure> {
    let n = e.n;
    let r = &e.schedule.rv;
    let pick_of = &e.picks.pick_of;
    let mut out = Vec::new();
    let (class, step) = (e.picks.picks[k].class, e.picks.picks[k].step);
    let mut fail = |id: u8, u: usize, v: usize, lhs: Rational, rhs: Rational| {
        out.push(InequalityFailure {
            k,
            class,
            step,
            id,
            u,
            v,
            lhs,
            rhs,
        });
    };

    for u in 0..n {
        for &x in &e.pseudo.n1[u] {
            let lhs = block_distance(e, k, u, x);
            if lhs > r[u] {
                fail(1, u, x, lhs, r[u]);
            }
        }
    }

    for &u in &e.picks.picks[k].vertices {
        for v in 0..n {
            if v == u || (pick_of[v] == k && v < u) {
                continue;
            }
            let lhs = block_distance(e, k, u, v);
            let sum = r[u] + r[v];
            let non_edge = !g.has_edge(u, v);
            let shared = e.factor.share_leaf_set(u, v);
            if pick_of[v] <= k {
                let max = r[u].max(r[v]);
                if lhs < max {
                    fail(2, u, v, lhs, max);
                }
                if non_edge && shared && lhs < sum {
                    fail(3, u, v, lhs, sum);
                }
            }
            if pick_of[v] >= k && non_edge && !shared && lhs < sum {
                fail(4, u, v, lhs, sum);
            }
        }
    }

    for (u, v) in g.edges() {
        let lhs = block_distance(e, k, u, v);
        let sum = r[u] + r[v];
        if lhs >= sum {
            fail(5, u, v, lhs, sum);
        }
    }
    out
}

pub fn verify(g: &Graph, e: &Embedding) -> Result<VerificationReport, VerifyError> {
    if g.n() != e.n || e.coords.len() != e.n {
        return Err(VerifyError::VertexCount {
            graph: g.n(),
            embedding: e.coords.len(),
        });
    }
    if let Some((vertex, c)) = e.coords.iter().enumerate().find(|(_, c)| c.len() != e.d) {
        return Err(VerifyError::Dimension {
            vertex,
            expected: e.d,
            found: c.len(),
        });
    }
    let ps = PointSet::new(e.coords.clone())?;
    let mut diagnostics = Vec::new();

    let h = compute_sig(&ps);
    let radii = compute_radii(&ps);
    let witness = |u: usize, v: usize| {
        format!(
            "rho({u},{v}) = {}, r_{u} + r_{v} = {}",
            format_rational(&sup_distance(&e.coords[u], &e.coords[v])),
            format_rational(&(radii[u] + radii[v])),
        )
    };
    let missing_edges: Vec<_> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| !h.has_edge(u, v))
        .collect();
    let extra_edges: Vec<_> = h
        .edges()
        .into_iter()
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    for &(u, v) in &missing_edges {
        diagnostics.push(format!("missing edge {u}-{v}: {}", witness(u, v)));
    }
    for &(u, v) in &extra_edges {
        diagnostics.push(format!("extra edge {u}-{v}: {}", witness(u, v)));
    }

    let radius_mismatches: Vec<usize> =
        (0..e.n).filter(|&v| radii[v] != e.schedule.rv[v]).collect();
    for &v in &radius_mismatches {
        let nearest = (0..e.n)
            .filter(|&u| u != v)
            .min_by_key(|&u| sup_distance(&e.coords[u], &e.coords[v]))
            .expect("n >= 2");
        diagnostics.push(format!(
            "radius of {v}: computed {} (nearest {nearest}), scheduled {}",
            format_rational(&radii[v]),
            format_rational(&e.schedule.rv[v]),
        ));
    }

    let bound = dimension_bound(e.n);
    let bound_ok = bound.admits(e.d);
    if !bound_ok {
        diagnostics.push(format!("dimension {} exceeds bound {:?}", e.d, bound));
    }

    let inequality_failures: Vec<InequalityFailure> = (0..e.blocks.len())
        .flat_map(|k| check_inequalities(g, e, k))
        .collect();
    for f in &inequality_failures {
        diagnostics.push(format!(
            "block {} ({}, step {}): family {} fails on {}-{}: lhs {}, rhs {}",
            f.k,
            e.blocks[f.k].class.roman(),
            e.blocks[f.k].step,
            f.id,
            f.u,
            f.v,
            format_rational(&f.lhs),
            format_rational(&f.rhs),
        ));
    }

    let sig_equal = missing_edges.is_empty() && extra_edges.is_empty();
    let radius_agree = radius_mismatches.is_empty();
    let verdict = if sig_equal && radius_agree && bound_ok && inequality_failures.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(VerificationReport {
        n: e.n,
        d: e.d,
        bound,
        sig_equal,
        radius_agree,
        bound_ok,
        missing_edges,
        extra_edges,
        radius_mismatches,
        inequality_failures,
        verdict,
        diagnostics,
    })
}
