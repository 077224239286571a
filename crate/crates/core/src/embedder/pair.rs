//! One dimension for a non-adjacent pair `p, q`.

use super::{Cx, EmbedError, Row};
use crate::rational::int;

pub(super) fn row(cx: &Cx, p: usize, q: usize, v: usize) -> Result<Row, EmbedError> {
    let h = cx.h();
    Ok(if v == p {
        ("p", vec![-cx.r(p) + h])
    } else if v == q {
        ("q", vec![cx.r(q) - h])
    } else if cx.pn.near_excl(v, p) {
        ("near p", vec![h])
    } else if cx.pn.near_excl(v, q) {
        ("near q", vec![-h])
    } else {
        ("other", vec![int(0)])
    })
}
