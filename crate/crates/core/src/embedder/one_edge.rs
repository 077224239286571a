//! Two dimensions for a triple whose only edge is `p q`.
//!
//! `Z = -r + 2 delta (k + 1)` and `H = Z / 2` throughout.

use super::{pt, Cx, EmbedError, Row};
use crate::rational::{int, Rational};

/// Rows shared by `N(s)` and `N2(s)` outside the earlier picks, keyed on
/// adjacency to `p` and `q`.
fn s_side(cx: &Cx, p: usize, q: usize, s: usize, v: usize) -> Row {
    let x = cx.z() + cx.r(s);
    let zero = int(0);
    match (cx.adj(v, p), cx.adj(v, q)) {
        (true, true) => ("s-side pq", pt(zero, zero)),
        (false, true) => ("s-side q", pt(x, zero)),
        (true, false) => ("s-side p", pt(zero, x)),
        (false, false) => ("s-side none", pt(x, x)),
    }
}

fn outside(cx: &Cx, p: usize, q: usize, s: usize, v: usize) -> Result<Row, EmbedError> {
    let (z, h) = (cx.z(), cx.h());
    let rv = cx.r(v);
    let y = z + rv;
    if cx.before(v) {
        return Ok(("outside early", pt(h, h)));
    }
    Ok(match (cx.adj(v, p), cx.adj(v, q), cx.adj(v, s)) {
        (true, true, true) => ("outside pqs", pt(h, h)),
        (false, true, true) => ("outside qs", pt(y, h)),
        (true, false, true) => ("outside ps", pt(h, y)),
        (true, true, false) => ("outside pq", pt(-rv, -rv)),
        (false, false, true) => ("outside s", pt(y, y)),
        _ => return Err(cx.unreachable(v, "VII outside N_k")),
    })
}

pub(super) fn row(
    cx: &Cx,
    p: usize,
    q: usize,
    s: usize,
    t: Option<usize>,
    v: usize,
) -> Result<Row, EmbedError> {
    let (z, h, d) = (cx.z(), cx.h(), cx.delta());
    let rv = cx.r(v);
    let zero = int(0);
    let before = cx.before(v);
    if v == s {
        return Ok(("s", pt(rv, rv)));
    }
    if cx.pn.near(p, q) {
        return Ok(if v == p {
            ("p", pt(z - rv, z))
        } else if v == q {
            ("q", pt(z - d, z - rv))
        } else if Some(v) == t {
            if before || cx.adj(v, s) {
                ("t", pt(z, z))
            } else {
                ("t far", pt(-rv, -rv))
            }
        } else if cx.pn.in_n(v, s) {
            if before {
                ("ns early", pt(zero, zero))
            } else {
                s_side(cx, p, q, s, v)
            }
        } else if cx.pn.near_excl(v, s) {
            if before && cx.leaf(v) {
                ("n2s early leaf", pt(z + cx.r(s) - d, -cx.r(s)))
            } else if before {
                ("n2s early", pt(zero, zero))
            } else {
                s_side(cx, p, q, s, v)
            }
        } else if !cx.in_nk(v) {
            outside(cx, p, q, s, v)?
        } else {
            return Err(cx.unreachable(v, "VII-1"));
        });
    }
    let p_side = |v: usize, table: &'static str| -> Result<Row, EmbedError> {
        let rp = cx.r(p);
        Ok(match (cx.adj(v, q), cx.adj(v, s)) {
            (true, true) => ("p-side qs", pt(z, zero)),
            (true, false) => ("p-side q", pt(-rp, zero)),
            (false, true) => ("p-side s", pt(z, z + rp)),
            (false, false) => return Err(cx.unreachable(v, table)),
        })
    };
    let q_side = |v: usize, table: &'static str| -> Result<Row, EmbedError> {
        let rq = cx.r(q);
        Ok(match (cx.adj(v, p), cx.adj(v, s)) {
            (true, true) => ("q-side ps", pt(zero, z)),
            (true, false) => ("q-side p", pt(zero, -rq)),
            (false, true) => ("q-side s", pt(z + rq, z)),
            (false, false) => return Err(cx.unreachable(v, table)),
        })
    };
    let early = |a: Rational, b: Rational, label: &'static str| -> Row { (label, pt(a, b)) };
    Ok(if v == p {
        ("p", pt(z - rv, z + rv - d))
    } else if v == q {
        ("q", pt(z + rv - d, z - rv))
    } else if cx.pn.in_n(v, p) {
        if before {
            early(z, zero, "np early")
        } else {
            p_side(v, "VII-2 np")?
        }
    } else if cx.pn.near_excl(v, p) {
        if before && cx.leaf(v) {
            early(z + cx.r(p), h, "n2p early leaf")
        } else if before {
            early(z, zero, "n2p early")
        } else {
            p_side(v, "VII-2 n2p")?
        }
    } else if cx.pn.in_n(v, q) {
        if before {
            early(zero, z, "nq early")
        } else {
            q_side(v, "VII-2 nq")?
        }
    } else if cx.pn.near_excl(v, q) {
        if before && cx.leaf(v) {
            early(h, z + cx.r(q), "n2q early leaf")
        } else if before {
            early(zero, z, "n2q early")
        } else {
            q_side(v, "VII-2 n2q")?
        }
    } else if cx.pn.in_n(v, s) {
        if before {
            early(zero, zero, "ns early")
        } else {
            s_side(cx, p, q, s, v)
        }
    } else if cx.pn.near_excl(v, s) {
        if before && cx.leaf(v) {
            early(-cx.r(s), -cx.r(s), "n2s early leaf")
        } else if before {
            early(zero, zero, "n2s early")
        } else {
            s_side(cx, p, q, s, v)
        }
    } else if !cx.in_nk(v) {
        outside(cx, p, q, s, v)?
    } else {
        return Err(cx.unreachable(v, "VII-2"));
    })
}
