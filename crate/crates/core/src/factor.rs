//! Induced star-triangle factor built from a maximum matching.
//!
//! Every unmatched vertex hangs off the smallest-index neighbor `u` and joins
//! the leaf set of `u`, whose first leaf is `u`'s original matching partner.
//! Two-leaf stars whose leaves are adjacent then become triangles.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphError};
use crate::matching::Matching;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FactorError {
    #[error(transparent)]
    Input(#[from] GraphError),
    #[error("matching is not a valid matching of the graph")]
    InvalidMatching,
    #[error("unmatched vertex {v} has unmatched neighbor {u}; the matching is not maximum")]
    NotMaximum { v: usize, u: usize },
    #[error("factor invariant violated: {0}")]
    Invariant(#[from] FactorViolation),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error, Serialize, Deserialize)]
pub enum FactorViolation {
    #[error("vertex {0} is covered {1} times")]
    Cover(usize, usize),
    #[error("star centered at {0} has fewer than two leaves")]
    SmallStar(usize),
    #[error("star center {center} is not adjacent to leaf {leaf}")]
    MissingSpoke { center: usize, leaf: usize },
    #[error("leaves {0} and {1} of the same star are adjacent")]
    NotInduced(usize, usize),
    #[error("leaves {0} and {1} of different stars are adjacent")]
    CrossStarLeaves(usize, usize),
    #[error("triple {0:?} is not a triangle")]
    NotTriangle([usize; 3]),
    #[error("matching pair ({0}, {1}) is not an edge")]
    NotEdge(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Component {
    Center,
    Leaf { center: usize },
    Triangle { index: usize },
    Matched { partner: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Star {
    pub center: usize,
    pub leaves: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarTriangleFactor {
    pub n: usize,
    /// Sorted by center; leaves sorted.
    pub stars: Vec<Star>,
    /// Each triple sorted; in order of creation.
    pub triangles: Vec<[usize; 3]>,
    /// Residual matching edges `(u, v)`, `u < v`, sorted.
    pub matching: Vec<(usize, usize)>,
    #[serde(skip)]
    component: Vec<Option<Component>>,
}

impl StarTriangleFactor {
    pub fn component(&self, v: usize) -> Component {
        self.component[v].expect("factor covers every vertex")
    }

    pub fn star(&self, center: usize) -> Option<&Star> {
        self.stars.iter().find(|s| s.center == center)
    }

    /// Center of the star whose leaf set contains `v`.
    pub fn leaf_center(&self, v: usize) -> Option<usize> {
        match self.component[v] {
            Some(Component::Leaf { center }) => Some(center),
            _ => None,
        }
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.leaf_center(v).is_some()
    }

    /// Two distinct vertices lying in one leaf set.
    pub fn share_leaf_set(&self, u: usize, v: usize) -> bool {
        u != v && matches!((self.leaf_center(u), self.leaf_center(v)), (Some(a), Some(b)) if a == b)
    }

    /// Third vertex of the triangle containing both `u` and `v`, if any.
    pub fn triangle_apex(&self, u: usize, v: usize) -> Option<usize> {
        match (self.component[u], self.component[v]) {
            (Some(Component::Triangle { index: a }), Some(Component::Triangle { index: b }))
                if a == b =>
            {
                self.triangles[a]
                    .iter()
                    .copied()
                    .find(|&x| x != u && x != v)
            }
            _ => None,
        }
    }

    fn rebuild_components(&mut self) {
        let mut comp = vec![None; self.n];
        for s in &self.stars {
            comp[s.center] = Some(Component::Center);
            for &l in &s.leaves {
                comp[l] = Some(Component::Leaf { center: s.center });
            }
        }
        for (i, t) in self.triangles.iter().enumerate() {
            for &x in t {
                comp[x] = Some(Component::Triangle { index: i });
            }
        }
        for &(u, v) in &self.matching {
            comp[u] = Some(Component::Matched { partner: v });
            comp[v] = Some(Component::Matched { partner: u });
        }
        self.component = comp;
    }

    /// Restores the derived lookup table after deserialization.
    pub fn reindex(mut self) -> Self {
        self.rebuild_components();
        self
    }

    /// Checks partition, induced stars, leaf independence and triangle edges.
    pub fn validate(&self, g: &Graph) -> Result<(), FactorViolation> {
        let mut cover = vec![0usize; g.n()];
        for s in &self.stars {
            cover[s.center] += 1;
            if s.leaves.len() < 2 {
                return Err(FactorViolation::SmallStar(s.center));
            }
            for &l in &s.leaves {
                cover[l] += 1;
                if !g.has_edge(s.center, l) {
                    return Err(FactorViolation::MissingSpoke {
                        center: s.center,
                        leaf: l,
                    });
                }
            }
        }
        for t in &self.triangles {
            t.iter().for_each(|&x| cover[x] += 1);
            if g.edges_within(t) != 3 {
                return Err(FactorViolation::NotTriangle(*t));
            }
        }
        for &(u, v) in &self.matching {
            cover[u] += 1;
            cover[v] += 1;
            if !g.has_edge(u, v) {
                return Err(FactorViolation::NotEdge(u, v));
            }
        }
        if let Some(v) = (0..g.n()).find(|&v| cover[v] != 1) {
            return Err(FactorViolation::Cover(v, cover[v]));
        }
        let leaves: Vec<(usize, usize)> = self
            .stars
            .iter()
            .flat_map(|s| s.leaves.iter().map(move |&l| (l, s.center)))
            .collect();
        for (i, &(a, ca)) in leaves.iter().enumerate() {
            for &(b, cb) in &leaves[i + 1..] {
                if g.has_edge(a, b) {
                    return Err(if ca == cb {
                        FactorViolation::NotInduced(a.min(b), a.max(b))
                    } else {
                        FactorViolation::CrossStarLeaves(a.min(b), a.max(b))
                    });
                }
            }
        }
        Ok(())
    }
}

pub fn star_triangle_factor(g: &Graph, m0: &Matching) -> Result<StarTriangleFactor, FactorError> {
    g.check_pipeline_input()?;
    if !m0.is_valid_for(g) {
        return Err(FactorError::InvalidMatching);
    }
    let mut leaves: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut in_m: Vec<bool> = (0..g.n()).map(|v| m0.is_saturated(v)).collect();
    for v in m0.unsaturated() {
        let u = g.neighbors(v)[0];
        let Some(w) = m0.mate(u) else {
            return Err(FactorError::NotMaximum { v, u });
        };
        match leaves.get_mut(&u) {
            Some(s) => s.push(v),
            None => {
                leaves.insert(u, vec![w, v]);
                in_m[u] = false;
                in_m[w] = false;
            }
        }
    }
    let mut stars = Vec::new();
    let mut triangles = Vec::new();
    for (center, mut ls) in leaves {
        ls.sort_unstable();
        if ls.len() == 2 && g.has_edge(ls[0], ls[1]) {
            let mut t = [center, ls[0], ls[1]];
            t.sort_unstable();
            triangles.push(t);
        } else {
            stars.push(Star { center, leaves: ls });
        }
    }
    let matching = m0.edges().into_iter().filter(|&(u, _)| in_m[u]).collect();
    let mut f = StarTriangleFactor {
        n: g.n(),
        stars,
        triangles,
        matching,
        component: Vec::new(),
    };
    f.rebuild_components();
    f.validate(g)?;
    Ok(f)
}
