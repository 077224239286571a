//! Pseudo-neighborhoods inside factor components and the radius schedule.
//!
//! `N` pairs every vertex with its partners in its own factor component:
//! a star center with its leaves (and each leaf with the center), a matching
//! edge's ends with each other, and a triangle's earliest-picked vertex with
//! the other two. `N2(v)` is the union of `N` over `N(v)` and always holds `v`.

use serde::{Deserialize, Serialize};

use crate::factor::StarTriangleFactor;
use crate::picker::PickSequence;
use crate::rational::{int, is_positive, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PseudoError {
    #[error("vertex {0} is not covered by the factor")]
    Uncovered(usize),
    #[error("factor and pick sequence disagree on the vertex count ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("radius parameter must be positive, got {0}")]
    NonPositiveRadius(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PseudoNeighborhood {
    /// `N(v)`, sorted.
    pub n1: Vec<Vec<usize>>,
    /// `N2(v)`, sorted; contains `v`.
    pub n2: Vec<Vec<usize>>,
    /// `N_k` for each pick `k`, sorted.
    pub nk: Vec<Vec<usize>>,
}

impl PseudoNeighborhood {
    /// `v` is a pseudo-neighbor of `x`.
    pub fn in_n(&self, v: usize, x: usize) -> bool {
        self.n1[x].binary_search(&v).is_ok()
    }

    pub fn in_n2(&self, v: usize, x: usize) -> bool {
        self.n2[x].binary_search(&v).is_ok()
    }

    /// `v` lies in `N(x) ∪ N2(x)`.
    pub fn near(&self, v: usize, x: usize) -> bool {
        self.in_n(v, x) || self.in_n2(v, x)
    }

    /// `v` lies in `N(x) ∪ N2(x)` but is not `x` itself.
    pub fn near_excl(&self, v: usize, x: usize) -> bool {
        v != x && self.near(v, x)
    }

    pub fn in_nk(&self, k: usize, v: usize) -> bool {
        self.nk[k].binary_search(&v).is_ok()
    }

    pub fn is_central(&self, v: usize) -> bool {
        self.n2[v].len() == 1 && self.n2[v][0] == v
    }
}

pub fn build_pseudo(
    f: &StarTriangleFactor,
    picks: &PickSequence,
) -> Result<PseudoNeighborhood, PseudoError> {
    let n = f.n;
    if picks.pick_of.len() != n {
        return Err(PseudoError::SizeMismatch(n, picks.pick_of.len()));
    }
    let mut n1: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut covered = vec![false; n];
    for s in &f.stars {
        n1[s.center] = s.leaves.clone();
        covered[s.center] = true;
        for &l in &s.leaves {
            n1[l] = vec![s.center];
            covered[l] = true;
        }
    }
    for t in &f.triangles {
        let mut order = *t;
        order.sort_by_key(|&v| (picks.pick_of[v], v));
        let [x, y, z] = order;
        n1[x] = vec![y.min(z), y.max(z)];
        n1[y] = vec![x];
        n1[z] = vec![x];
        t.iter().for_each(|&v| covered[v] = true);
    }
    for &(u, v) in &f.matching {
        n1[u] = vec![v];
        n1[v] = vec![u];
        covered[u] = true;
        covered[v] = true;
    }
    if let Some(v) = covered.iter().position(|c| !c) {
        return Err(PseudoError::Uncovered(v));
    }
    let n2: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut s: Vec<usize> = n1[v].iter().flat_map(|&u| n1[u].iter().copied()).collect();
            s.sort_unstable();
            s.dedup();
            s
        })
        .collect();
    let nk = picks
        .picks
        .iter()
        .map(|p| {
            let mut s: Vec<usize> = p
                .vertices
                .iter()
                .flat_map(|&v| n1[v].iter().chain(n2[v].iter()).copied())
                .collect();
            s.sort_unstable();
            s.dedup();
            s
        })
        .collect();
    debug_assert!((0..n).all(|v| n2[v].contains(&v)));
    Ok(PseudoNeighborhood { n1, n2, nk })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadiusSchedule {
    #[serde(with = "crate::rational::serde_scalar")]
    pub r: Rational,
    #[serde(with = "crate::rational::serde_scalar")]
    pub delta: Rational,
    /// Earliest pick meeting `N(v) ∪ N2(v)`.
    pub m: Vec<usize>,
    /// `r - 2 delta m(v)`.
    #[serde(with = "crate::rational::serde_vec")]
    pub rv: Vec<Rational>,
}

impl RadiusSchedule {
    pub fn radius(&self, v: usize) -> Rational {
        self.rv[v]
    }

    /// `r - 2 delta (k + 1)`.
    pub fn floor_after(&self, k: usize) -> Rational {
        self.r - int(2) * self.delta * int(k as i128 + 1)
    }
}

/// The default global radius `12 n`, which makes `delta = 2`.
pub fn default_r(n: usize) -> Rational {
    int(12 * n as i128)
}

pub fn radius_schedule(
    pn: &PseudoNeighborhood,
    picks: &PickSequence,
    r: Rational,
) -> Result<RadiusSchedule, PseudoError> {
    if !is_positive(&r) {
        return Err(PseudoError::NonPositiveRadius(
            crate::rational::format_rational(&r),
        ));
    }
    let n = pn.n1.len();
    let delta = r / int(6 * n as i128);
    let m: Vec<usize> = (0..n)
        .map(|v| {
            pn.n1[v]
                .iter()
                .chain(pn.n2[v].iter())
                .map(|&x| picks.pick_of[x])
                .min()
                .expect("N2(v) contains v")
        })
        .collect();
    let rv = m
        .iter()
        .map(|&mv| r - int(2) * delta * int(mv as i128))
        .collect();
    Ok(RadiusSchedule { r, delta, m, rv })
}
