//! Two dimensions for an independent triple `a, b, c` with no two members in
//! one leaf set.
//!
//! `Z = -r + 2 delta (i + 1)` and `H = Z / 2` throughout.

use super::{pt, Cx, EmbedError, Row};
use crate::picker::PickedSet;
use crate::rational::{int, Rational};

struct Triple {
    a: usize,
    b: usize,
    c: usize,
}

impl Triple {
    fn na(&self, cx: &Cx, v: usize) -> Row {
        let z = cx.z();
        let ra = cx.r(self.a);
        let zero = int(0);
        if cx.before(v) {
            return ("na early", pt(z, zero));
        }
        match (cx.adj(v, self.b), cx.adj(v, self.c)) {
            (false, false) => ("a-side none", pt(-ra, zero)),
            (true, true) => ("a-side bc", pt(z, zero)),
            (false, true) => ("a-side c", pt(-ra + cx.delta(), zero)),
            (true, false) => ("a-side b", pt(z, z + ra)),
        }
    }

    fn b_side(&self, cx: &Cx, v: usize, guard: bool) -> Result<Row, EmbedError> {
        let d = cx.delta();
        let x = cx.z() + cx.r(self.b);
        Ok(match (cx.adj(v, self.a), cx.adj(v, self.c)) {
            (true, true) => ("b-side ac", pt(d, d)),
            (true, false) => ("b-side a", pt(d, x)),
            (false, true) => ("b-side c", pt(x, d)),
            (false, false) => {
                if guard && cx.f.star(v).is_some() {
                    return Err(cx.unreachable(v, "VIII nb (star center)"));
                }
                ("b-side none", pt(x, x))
            }
        })
    }

    fn nb(&self, cx: &Cx, v: usize) -> Result<Row, EmbedError> {
        if cx.before(v) {
            let d = cx.delta();
            return Ok(("nb early", pt(d, d)));
        }
        self.b_side(cx, v, true)
    }

    fn nc(&self, cx: &Cx, v: usize) -> Row {
        let z = cx.z();
        let rc = cx.r(self.c);
        let zero = int(0);
        if cx.before(v) {
            return ("nc early", pt(zero, z));
        }
        match (cx.adj(v, self.a), cx.adj(v, self.b)) {
            (false, false) => ("c-side none", pt(zero, -rc)),
            (true, true) => ("c-side ab", pt(zero, z)),
            (true, false) => ("c-side a", pt(zero, -rc + cx.delta())),
            (false, true) => ("c-side b", pt(z + rc, z)),
        }
    }

    /// The pseudo-neighbor of `x` through which `v` lies in `N2(x)`.
    fn parent(cx: &Cx, x: usize, v: usize) -> usize {
        *cx.pn.n1[x]
            .iter()
            .find(|&&u| cx.pn.in_n(v, u))
            .expect("v lies in N2(x)")
    }

    fn row(&self, cx: &Cx, v: usize) -> Result<Row, EmbedError> {
        let (a, b, c) = (self.a, self.b, self.c);
        let (z, h, d) = (cx.z(), cx.h(), cx.delta());
        let rv = cx.r(v);
        let zero = int(0);
        let before = cx.before(v);
        Ok(if v == a {
            ("a", pt(z - rv, rv))
        } else if v == b {
            ("b", pt(d + rv, d + rv))
        } else if v == c {
            ("c", pt(rv, z - rv))
        } else if cx.pn.in_n(v, a) {
            self.na(cx, v)
        } else if cx.pn.in_n(v, b) {
            self.nb(cx, v)?
        } else if cx.pn.in_n(v, c) {
            self.nc(cx, v)
        } else if cx.pn.in_n2(v, a) {
            let ra = cx.r(a);
            if before && cx.leaf(v) {
                let (_, parent) = self.na(cx, Self::parent(cx, a, v));
                if parent[0] != z {
                    ("n2a early leaf", pt(z, -ra))
                } else {
                    ("n2a early leaf flush", pt(z + ra, h))
                }
            } else if before {
                ("n2a early", pt(z, zero))
            } else {
                self.na(cx, v)
            }
        } else if cx.pn.in_n2(v, b) {
            let rb = cx.r(b);
            if before && cx.leaf(v) {
                let (_, parent) = self.nb(cx, Self::parent(cx, b, v))?;
                let x = z + rb;
                if parent == pt(d, d) {
                    ("n2b early leaf", pt(d - rb, d - rb))
                } else if parent == pt(d, x) {
                    ("n2b early leaf a", pt(d - rb, z))
                } else if parent == pt(x, d) {
                    ("n2b early leaf c", pt(z, d - rb))
                } else {
                    return Err(cx.unreachable(v, "VIII n2b (parent row)"));
                }
            } else if before {
                ("n2b early", pt(d, d))
            } else {
                self.b_side(cx, v, false)?
            }
        } else if cx.pn.in_n2(v, c) {
            let rc = cx.r(c);
            if before && cx.leaf(v) {
                let (_, parent) = self.nc(cx, Self::parent(cx, c, v));
                if parent[1] != z {
                    ("n2c early leaf", pt(-rc, z))
                } else {
                    ("n2c early leaf flush", pt(h, z + rc))
                }
            } else if before {
                ("n2c early", pt(zero, z))
            } else {
                self.nc(cx, v)
            }
        } else if !cx.in_nk(v) {
            if before {
                let half = -rv / int(2);
                ("outside early", pt(half, half))
            } else {
                let y = z + rv;
                let two_d = d * int(2);
                match (cx.adj(v, a), cx.adj(v, b), cx.adj(v, c)) {
                    (false, false, false) => ("outside none", pt(-rv, -rv)),
                    (true, false, false) => ("outside a", pt(-rv, -rv + d)),
                    (false, true, false) => ("outside b", pt(y, y)),
                    (false, false, true) => ("outside c", pt(-rv + d, -rv)),
                    (true, true, false) => ("outside ab", pt(-rv + two_d, y)),
                    (true, false, true) => ("outside ac", pt(-rv + d, -rv + d)),
                    (false, true, true) => ("outside bc", pt(y, -rv + two_d)),
                    (true, true, true) => ("outside abc", pt(-rv + two_d, -rv + two_d)),
                }
            }
        } else {
            return Err(cx.unreachable(v, "VIII"));
        })
    }
}

pub(super) fn assign(
    cx: &Cx,
    _pick: &PickedSet,
    a: usize,
    b: usize,
    c: usize,
) -> Result<(Vec<Vec<Rational>>, Vec<String>), EmbedError> {
    let t = Triple { a, b, c };
    let mut values = Vec::with_capacity(cx.n());
    let mut rows = Vec::with_capacity(cx.n());
    for v in 0..cx.n() {
        let (label, val) = t.row(cx, v)?;
        values.push(val);
        rows.push(label.to_string());
    }
    Ok((values, rows))
}
