//! Sign-vector block for the residual set.

use super::{sign_width, Cx, EmbedError};
use crate::picker::PickedSet;
use crate::rational::{int, Rational};

/// The `i`-th sign vector (0-based) of the given width: the binary digits of
/// `i`, most significant first, with 0 mapped to `+1` and 1 to `-1`.
pub fn sign_vector(i: usize, width: usize) -> Vec<i128> {
    (0..width)
        .rev()
        .map(|bit| if i >> bit & 1 == 0 { 1 } else { -1 })
        .collect()
}

fn scaled(scale: Rational, signs: &[i128]) -> Vec<Rational> {
    signs.iter().map(|&s| scale * int(s)).collect()
}

pub(super) fn assign(
    cx: &Cx,
    _pick: &PickedSet,
    members: &[usize],
) -> Result<(Vec<Vec<Rational>>, Vec<String>), EmbedError> {
    let m = members.len();
    let width = sign_width(m);
    let outside = sign_vector(m, width);
    let in_n_of_set = |v: usize| members.iter().any(|&e| cx.pn.in_n(v, e));
    let in_n2_of_set = |v: usize| members.iter().any(|&e| cx.pn.in_n2(v, e));
    let mut values = Vec::with_capacity(cx.n());
    let mut rows = Vec::with_capacity(cx.n());
    for v in 0..cx.n() {
        let (row, val) = if let Some(i) = members.iter().position(|&e| e == v) {
            ("member", scaled(cx.r(v), &sign_vector(i, width)))
        } else if in_n_of_set(v) {
            ("n", vec![int(0); width])
        } else if in_n2_of_set(v) {
            ("n2", scaled(cx.r(v), &outside))
        } else {
            ("other", scaled(cx.r(v) - cx.delta(), &outside))
        };
        values.push(val);
        rows.push(row.to_string());
    }
    Ok((values, rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_vectors_count_in_binary() {
        assert_eq!(sign_vector(0, 2), vec![1, 1]);
        assert_eq!(sign_vector(1, 2), vec![1, -1]);
        assert_eq!(sign_vector(2, 2), vec![-1, 1]);
        assert_eq!(sign_vector(3, 2), vec![-1, -1]);
        for w in 1..6 {
            let all: std::collections::HashSet<Vec<i128>> =
                (0..1 << w).map(|i| sign_vector(i, w)).collect();
            assert_eq!(all.len(), 1 << w);
        }
    }
}
