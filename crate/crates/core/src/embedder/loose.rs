//! One dimension per vertex of a singleton or pair.

use super::{Cx, EmbedError};
use crate::picker::PickedSet;
use crate::rational::Rational;

fn coordinate(cx: &Cx, w: usize, v: usize) -> (&'static str, Rational) {
    if v == w {
        ("w", -cx.r(w))
    } else if cx.pn.in_n(v, w) {
        ("nw", Rational::from_integer(0))
    } else if cx.adj(v, w) {
        ("adjacent", cx.r(v) - cx.delta())
    } else {
        ("far", cx.r(v))
    }
}

pub(super) fn assign(
    cx: &Cx,
    _pick: &PickedSet,
    members: &[usize],
) -> Result<(Vec<Vec<Rational>>, Vec<String>), EmbedError> {
    let mut values = Vec::with_capacity(cx.n());
    let mut rows = Vec::with_capacity(cx.n());
    for v in 0..cx.n() {
        let (labels, vals): (Vec<&str>, Vec<Rational>) =
            members.iter().map(|&w| coordinate(cx, w, v)).unzip();
        values.push(vals);
        rows.push(labels.join("+"));
    }
    Ok((values, rows))
}
