//! Two dimensions for a clique triple, split by how its members relate
//! through pseudo-neighborhoods.

use super::{pt, Cx, EmbedError, Row};
use crate::rational::int;

pub(super) enum Case {
    /// No two members related; `x` has the largest radius.
    Unrelated { x: usize, y: usize, z: usize },
    /// `p` and `q` related, `s` related to neither.
    OnePair { p: usize, q: usize, s: usize },
    /// The triple is a factor triangle, in index order.
    Triangle { p: usize, q: usize, s: usize },
}

impl Case {
    pub fn classify(cx: &Cx, t: [usize; 3]) -> Result<Case, EmbedError> {
        let [p, q, s] = t;
        let mut sorted = t;
        sorted.sort_unstable();
        if cx.f.triangles.contains(&sorted) {
            return Ok(Case::Triangle { p, q, s });
        }
        let related = |a: usize, b: usize| cx.pn.near(a, b) || cx.pn.near(b, a);
        let pairs: Vec<(usize, usize, usize)> = [(p, q, s), (p, s, q), (q, s, p)]
            .into_iter()
            .filter(|&(a, b, _)| related(a, b))
            .collect();
        match pairs.as_slice() {
            [] => {
                let mut order = t;
                order.sort_by(|&a, &b| cx.r(b).cmp(&cx.r(a)).then(a.cmp(&b)));
                let [x, y, z] = order;
                let (y, z) = (y.min(z), y.max(z));
                Ok(Case::Unrelated { x, y, z })
            }
            [(a, b, c)] => Ok(Case::OnePair {
                p: *a.min(b),
                q: *a.max(b),
                s: *c,
            }),
            _ => Err(cx.roles_error(format!(
                "clique triple {t:?} has {} related pairs but is not a factor triangle",
                pairs.len()
            ))),
        }
    }

    pub fn row(&self, cx: &Cx, v: usize) -> Result<Row, EmbedError> {
        let r = cx.big_r();
        let rv = cx.r(v);
        let zero = int(0);
        Ok(match *self {
            Case::Unrelated { x, y, z } => {
                if v == x {
                    ("x", pt(zero, zero))
                } else if v == y {
                    ("y", pt(zero, r))
                } else if v == z {
                    ("z", pt(r, zero))
                } else if cx.pn.in_n(v, x) {
                    ("nx", pt(cx.r(x), cx.r(x)))
                } else if cx.pn.in_n(v, y) {
                    ("ny", pt(cx.r(y), r))
                } else if cx.pn.in_n(v, z) {
                    ("nz", pt(r, cx.r(z)))
                } else {
                    ("other", pt(r, r))
                }
            }
            Case::OnePair { p, q, s } => {
                if v == p {
                    ("p", pt(zero, r - rv))
                } else if v == q {
                    ("q", pt(zero, r))
                } else if cx.pn.in_n(v, p) || cx.pn.in_n(v, q) {
                    ("np/nq", pt(rv, r))
                } else if v == s {
                    ("s", pt(r, zero))
                } else if cx.pn.in_n(v, s) {
                    ("ns", pt(r, rv))
                } else {
                    ("other", pt(r, r))
                }
            }
            Case::Triangle { p, q, s } => {
                if v == p {
                    ("p", pt(-rv, zero))
                } else if v == q {
                    ("q", pt(-rv, -rv))
                } else if v == s {
                    ("s", pt(zero, -rv))
                } else {
                    ("other", pt(rv - cx.delta(), rv - cx.delta()))
                }
            }
        })
    }
}
