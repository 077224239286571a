//! Two-dimensional blocks for triples drawn partly from the last open leaf
//! set `D_w`: the independent `v0, w1, w2` and the two-edge `w0, v1, v2`.

use super::{pt, Cx, EmbedError, Row};
use crate::rational::int;

pub(super) fn v0w1w2_row(
    cx: &Cx,
    v0: usize,
    w1: usize,
    w2: usize,
    w: usize,
    v: usize,
) -> Result<Row, EmbedError> {
    let (h, d) = (cx.h(), cx.delta());
    let rw = cx.r(w);
    let rv = cx.r(v);
    let zero = int(0);
    Ok(if v == w1 {
        ("w1", pt(-rw + h, rw))
    } else if v == w2 {
        ("w2", pt(-rw + h, -rw))
    } else if v == v0 {
        ("v0", pt(cx.r(v0) - h, cx.r(v0)))
    } else if v == w {
        ("w", pt(h, zero))
    } else if cx.pn.in_n(v, w) {
        if cx.before(v) || cx.adj(v, v0) {
            ("wj raised", pt(rw + h, -rw + d))
        } else {
            ("wj", pt(rw + h, -rw))
        }
    } else if cx.pn.near_excl(v, v0) {
        ("near v0", pt(-h, zero))
    } else if !cx.in_nk(v) {
        ("other", pt(rv + h - d, -rv + d))
    } else {
        return Err(cx.unreachable(v, "V"));
    })
}

pub(super) fn w0v1v2_row(
    cx: &Cx,
    w0: usize,
    v1: usize,
    v2: usize,
    v: usize,
) -> Result<Row, EmbedError> {
    let (h, z, d) = (cx.h(), cx.z(), cx.delta());
    let rv = cx.r(v);
    let zero = int(0);
    if v == w0 {
        return Ok(("w0", pt(rv - d, rv - h)));
    }
    let before = cx.before(v);
    let in_n2_w0 = v != w0 && cx.pn.in_n2(v, w0);
    if !cx.pn.near(v2, v1) {
        Ok(if v == v1 {
            ("a v1", pt(-rv, rv + h - d))
        } else if v == v2 {
            ("a v2", pt(rv - d, -rv + h))
        } else if !cx.in_nk(v) {
            if before || cx.adj(v, v1) {
                ("a other raised", pt(rv - d, zero))
            } else {
                ("a other", pt(rv, zero))
            }
        } else if cx.pn.near_excl(v, v1) {
            ("a near v1", pt(zero, zero))
        } else if cx.pn.near_excl(v, v2) {
            if before || cx.adj(v, v1) {
                ("a near v2 raised", pt(rv - d, h))
            } else {
                ("a near v2", pt(rv, h))
            }
        } else if cx.pn.in_n(v, w0) {
            ("a nw0", pt(-z, -h))
        } else if in_n2_w0 {
            if before {
                ("a n2w0 early", pt(-rv - z, -rv - h))
            } else if cx.adj(v, v1) {
                ("a n2w0 raised", pt(rv - d, -h))
            } else {
                ("a n2w0", pt(rv, -h))
            }
        } else {
            return Err(cx.unreachable(v, "VI-a"));
        })
    } else {
        Ok(if v == v1 {
            ("b v1", pt(-rv, h))
        } else if v == v2 {
            ("b v2", pt(-rv + d, -rv + h))
        } else if !cx.in_nk(v) {
            if before {
                ("b other early", pt(rv - d, zero))
            } else {
                ("b other", pt(rv, zero))
            }
        } else if cx.pn.near_excl(v, v1) || cx.pn.near_excl(v, v2) {
            ("b near v1/v2", pt(zero, h))
        } else if cx.pn.in_n(v, w0) {
            ("b nw0", pt(rv - d, -h))
        } else if in_n2_w0 {
            if before {
                ("b n2w0 early", pt(rv - d, -rv - h))
            } else if cx.adj(v, v2) {
                ("b n2w0 raised", pt(rv - d, -h))
            } else {
                ("b n2w0", pt(rv, -h))
            }
        } else {
            return Err(cx.unreachable(v, "VI-b"));
        })
    }
}
