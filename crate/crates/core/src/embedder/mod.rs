//! Coordinate blocks, one per picked set, and assembly of the full embedding.
//!
//! Each picked set `P_k` contributes a block of one or two dimensions (or a
//! logarithmic number for the residual set). Inside a block every vertex is
//! matched against an ordered list of table rows; the first matching row
//! fixes its coordinates. A vertex matching no row is reported, never guessed.

mod clique;
mod leaf_sets;
mod loose;
mod one_edge;
mod pair;
mod residual;
mod super_triplet;

use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::factor::{star_triangle_factor, FactorError, StarTriangleFactor};
use crate::graph::{Graph, GraphError};
use crate::matching::{maximum_matching, Matching};
use crate::picker::{pick_vertices, PickClass, PickError, PickSequence, PickedSet, Roles};
use crate::pseudo::{
    build_pseudo, default_r, radius_schedule, PseudoError, PseudoNeighborhood, RadiusSchedule,
};
use crate::rational::{int, to_json_vec, JsonRational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EmbedError {
    #[error(transparent)]
    Input(#[from] GraphError),
    #[error(transparent)]
    Factor(#[from] FactorError),
    #[error(transparent)]
    Pick(#[from] PickError),
    #[error(transparent)]
    Pseudo(#[from] PseudoError),
    #[error("block {k}: vertex {vertex} matches no row of table {table}")]
    Unreachable {
        k: usize,
        vertex: usize,
        table: &'static str,
    },
    #[error("block {k}: {message}")]
    Roles { k: usize, message: String },
}

impl EmbedError {
    /// Pipeline stage that produced the error.
    pub fn stage(&self) -> &'static str {
        match self {
            EmbedError::Input(_) => "input",
            EmbedError::Factor(_) => "factor",
            EmbedError::Pick(_) => "picker",
            EmbedError::Pseudo(_) => "pseudo",
            EmbedError::Unreachable { .. } | EmbedError::Roles { .. } => "embedder",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionBlock {
    pub k: usize,
    pub class: PickClass,
    pub step: u8,
    pub dims: Range<usize>,
    /// `values[v]` has one entry per dimension of the block.
    #[serde(with = "crate::rational::serde_matrix")]
    pub values: Vec<Vec<Rational>>,
    /// Table row that produced `values[v]`.
    pub rows: Vec<String>,
}

impl DimensionBlock {
    pub fn width(&self) -> usize {
        self.dims.len()
    }
}

/// A complete embedding together with the certificate data it was built
/// from: factor, pick order, pseudo-neighborhoods and radius schedule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub n: usize,
    pub d: usize,
    pub coords: Vec<Vec<Rational>>,
    pub blocks: Vec<DimensionBlock>,
    pub schedule: RadiusSchedule,
    pub pseudo: PseudoNeighborhood,
    pub factor: StarTriangleFactor,
    pub picks: PickSequence,
    pub matching: Matching,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockJson {
    pub k: usize,
    pub class: String,
    pub dims: Vec<usize>,
    pub step: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingJson {
    pub n: usize,
    pub d: usize,
    pub r: JsonRational,
    pub delta: JsonRational,
    pub blocks: Vec<BlockJson>,
    pub coords: Vec<Vec<JsonRational>>,
}

/// Certificate data behind an embedding, for reading a run by hand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceJson {
    pub matching: Vec<(usize, usize)>,
    pub factor: StarTriangleFactor,
    pub picks: Vec<PickedSet>,
    pub pseudo: PseudoNeighborhood,
    pub schedule: RadiusSchedule,
    /// `rows[k][v]` is the table row that placed `v` in block `k`.
    pub rows: Vec<Vec<String>>,
}

impl Embedding {
    pub fn trace(&self) -> TraceJson {
        TraceJson {
            matching: self.matching.edges(),
            factor: self.factor.clone(),
            picks: self.picks.picks.clone(),
            pseudo: self.pseudo.clone(),
            schedule: self.schedule.clone(),
            rows: self.blocks.iter().map(|b| b.rows.clone()).collect(),
        }
    }

    pub fn to_json(&self) -> EmbeddingJson {
        EmbeddingJson {
            n: self.n,
            d: self.d,
            r: JsonRational(self.schedule.r),
            delta: JsonRational(self.schedule.delta),
            blocks: self
                .blocks
                .iter()
                .map(|b| BlockJson {
                    k: b.k,
                    class: b.class.roman().to_string(),
                    dims: b.dims.clone().collect(),
                    step: b.step,
                })
                .collect(),
            coords: self.coords.iter().map(|c| to_json_vec(c)).collect(),
        }
    }

    /// The same certificate with a different coordinate matrix, e.g. points
    /// read back from disk. Block values are re-sliced from `coords`.
    pub fn with_coords(&self, coords: Vec<Vec<Rational>>) -> Result<Embedding, String> {
        if coords.len() != self.n {
            return Err(format!("expected {} points, got {}", self.n, coords.len()));
        }
        if let Some((v, c)) = coords.iter().enumerate().find(|(_, c)| c.len() != self.d) {
            return Err(format!(
                "point {v} has dimension {}, expected {}",
                c.len(),
                self.d
            ));
        }
        let mut e = self.clone();
        for b in &mut e.blocks {
            b.values = coords.iter().map(|c| c[b.dims.clone()].to_vec()).collect();
        }
        e.coords = coords;
        Ok(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionBound {
    pub general: usize,
    /// Present only when `3` does not divide `n`.
    pub refined: Option<usize>,
}

impl DimensionBound {
    pub fn admits(&self, d: usize) -> bool {
        d <= self.general && self.refined.is_none_or(|b| d <= b)
    }
}

pub fn dimension_bound(n: usize) -> DimensionBound {
    DimensionBound {
        general: 2 * n / 3 + 2,
        refined: (!n.is_multiple_of(3)).then(|| ceil_two_thirds(n) + 1),
    }
}

pub fn ceil_two_thirds(k: usize) -> usize {
    (2 * k).div_ceil(3)
}

/// `ceil(log2(m + 1))`: the number of sign coordinates needed for `m + 1`
/// distinct sign vectors.
pub fn sign_width(m: usize) -> usize {
    (usize::BITS - m.leading_zeros()) as usize
}

/// Shared read-only view for computing block `k`.
pub(crate) struct Cx<'a> {
    pub g: &'a Graph,
    pub f: &'a StarTriangleFactor,
    pub picks: &'a PickSequence,
    pub pn: &'a PseudoNeighborhood,
    pub s: &'a RadiusSchedule,
    pub k: usize,
}

pub(crate) type Row = (&'static str, Vec<Rational>);

impl<'a> Cx<'a> {
    pub fn n(&self) -> usize {
        self.g.n()
    }

    pub fn r(&self, v: usize) -> Rational {
        self.s.rv[v]
    }

    pub fn big_r(&self) -> Rational {
        self.s.r
    }

    pub fn delta(&self) -> Rational {
        self.s.delta
    }

    /// `-r + 2 delta (k + 1)`.
    pub fn z(&self) -> Rational {
        -self.s.floor_after(self.k)
    }

    /// `-r/2 + delta (k + 1)`.
    pub fn h(&self) -> Rational {
        self.z() / int(2)
    }

    pub fn before(&self, v: usize) -> bool {
        self.picks.pick_of[v] < self.k
    }

    pub fn adj(&self, u: usize, v: usize) -> bool {
        self.g.has_edge(u, v)
    }

    pub fn leaf(&self, v: usize) -> bool {
        self.f.is_leaf(v)
    }

    pub fn in_nk(&self, v: usize) -> bool {
        self.pn.in_nk(self.k, v)
    }

    pub fn unreachable(&self, vertex: usize, table: &'static str) -> EmbedError {
        EmbedError::Unreachable {
            k: self.k,
            vertex,
            table,
        }
    }

    pub fn roles_error(&self, message: impl Into<String>) -> EmbedError {
        EmbedError::Roles {
            k: self.k,
            message: message.into(),
        }
    }
}

pub(crate) fn pt(x: Rational, y: Rational) -> Vec<Rational> {
    vec![x, y]
}

fn assign_rows(
    cx: &Cx,
    pick: &PickedSet,
    width: usize,
    row: impl Fn(usize) -> Result<Row, EmbedError>,
) -> Result<(Vec<Vec<Rational>>, Vec<String>), EmbedError> {
    let mut values = Vec::with_capacity(cx.n());
    let mut rows = Vec::with_capacity(cx.n());
    for v in 0..cx.n() {
        let (label, val) = row(v)?;
        debug_assert_eq!(val.len(), width, "block {} row {label}", pick.k);
        values.push(val);
        rows.push(label.to_string());
    }
    Ok((values, rows))
}

/// Computes block `k`; `offset` is the index of its first dimension.
pub fn assign_block(
    k: usize,
    offset: usize,
    g: &Graph,
    f: &StarTriangleFactor,
    picks: &PickSequence,
    pn: &PseudoNeighborhood,
    sched: &RadiusSchedule,
) -> Result<DimensionBlock, EmbedError> {
    let cx = Cx {
        g,
        f,
        picks,
        pn,
        s: sched,
        k,
    };
    let pick = &picks.picks[k];
    let (values, rows) = match &pick.roles {
        Roles::Loose { members } => loose::assign(&cx, pick, members)?,
        Roles::Residual { members } => residual::assign(&cx, pick, members)?,
        Roles::Pair { p, q } => assign_rows(&cx, pick, 1, |v| pair::row(&cx, *p, *q, v))?,
        Roles::Clique { p, q, s } => {
            let case = clique::Case::classify(&cx, [*p, *q, *s])?;
            assign_rows(&cx, pick, 2, |v| case.row(&cx, v))?
        }
        Roles::V0W1W2 { v0, w1, w2, w } => assign_rows(&cx, pick, 2, |v| {
            leaf_sets::v0w1w2_row(&cx, *v0, *w1, *w2, *w, v)
        })?,
        Roles::W0V1V2 { w0, v1, v2, .. } => assign_rows(&cx, pick, 2, |v| {
            leaf_sets::w0v1v2_row(&cx, *w0, *v1, *v2, v)
        })?,
        Roles::OneEdge { p, q, s } => {
            let t = f.triangle_apex(*p, *q);
            assign_rows(&cx, pick, 2, |v| one_edge::row(&cx, *p, *q, *s, t, v))?
        }
        Roles::Super { a, b, c } => super_triplet::assign(&cx, pick, *a, *b, *c)?,
    };
    let width = values.first().map_or(0, |v: &Vec<Rational>| v.len());
    Ok(DimensionBlock {
        k,
        class: pick.class,
        step: pick.step,
        dims: offset..offset + width,
        values,
        rows,
    })
}

/// Runs the full pipeline with the default `r = 12 n`.
pub fn embed(g: &Graph) -> Result<Embedding, EmbedError> {
    embed_with_r(g, default_r(g.n()))
}

pub fn embed_with_r(g: &Graph, r: Rational) -> Result<Embedding, EmbedError> {
    g.check_pipeline_input()?;
    let matching = maximum_matching(g);
    let factor = star_triangle_factor(g, &matching)?;
    let picks = pick_vertices(g, &factor)?;
    let pseudo = build_pseudo(&factor, &picks)?;
    let schedule = radius_schedule(&pseudo, &picks, r)?;
    let mut blocks = Vec::with_capacity(picks.len());
    let mut d = 0;
    for k in 0..picks.len() {
        let b = assign_block(k, d, g, &factor, &picks, &pseudo, &schedule)?;
        d = b.dims.end;
        blocks.push(b);
    }
    let coords = (0..g.n())
        .map(|v| {
            blocks
                .iter()
                .flat_map(|b| b.values[v].iter().copied())
                .collect()
        })
        .collect();
    Ok(Embedding {
        n: g.n(),
        d,
        coords,
        blocks,
        schedule,
        pseudo,
        factor,
        picks,
        matching,
    })
}
