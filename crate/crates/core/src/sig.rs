//! Sup-norm sphere-of-influence graphs over exact rational points, and the
//! `2I + A` realization used as an oracle.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphError};
use crate::rational::{abs_diff, int, serde_matrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SigError {
    #[error("need at least two points, got {0}")]
    TooFewPoints(usize),
    #[error("point {index} has dimension {found}, expected {expected}")]
    Ragged {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("points {0} and {1} coincide")]
    Duplicate(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSet {
    #[serde(with = "serde_matrix")]
    points: Vec<Vec<Rational>>,
}

impl PointSet {
    pub fn new(points: Vec<Vec<Rational>>) -> Result<Self, SigError> {
        if points.len() < 2 {
            return Err(SigError::TooFewPoints(points.len()));
        }
        let d = points[0].len();
        if let Some((index, p)) = points.iter().enumerate().find(|(_, p)| p.len() != d) {
            return Err(SigError::Ragged {
                index,
                expected: d,
                found: p.len(),
            });
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if points[i] == points[j] {
                    return Err(SigError::Duplicate(i, j));
                }
            }
        }
        Ok(PointSet { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.points[0].len()
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    pub fn into_points(self) -> Vec<Vec<Rational>> {
        self.points
    }
}

/// `max_j |x[j] - y[j]|`; zero for zero-dimensional points.
pub fn sup_distance(x: &[Rational], y: &[Rational]) -> Rational {
    x.iter()
        .zip(y)
        .map(|(a, b)| abs_diff(a, b))
        .max()
        .unwrap_or_else(|| int(0))
}

fn distance_matrix(ps: &PointSet) -> Vec<Vec<Rational>> {
    let n = ps.len();
    let mut dist = vec![vec![int(0); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let d = sup_distance(&ps.points[i], &ps.points[j]);
            dist[i][j] = d;
            dist[j][i] = d;
        }
    }
    dist
}

fn radii_from(dist: &[Vec<Rational>]) -> Vec<Rational> {
    (0..dist.len())
        .map(|i| {
            (0..dist.len())
                .filter(|&j| j != i)
                .map(|j| dist[i][j])
                .min()
                .expect("at least two points")
        })
        .collect()
}

/// Nearest-neighbor distance of every point.
pub fn compute_radii(ps: &PointSet) -> Vec<Rational> {
    radii_from(&distance_matrix(ps))
}

/// Edge `uv` iff `rho(u, v) < r_u + r_v`, compared exactly.
pub fn compute_sig(ps: &PointSet) -> Graph {
    let dist = distance_matrix(ps);
    let radii = radii_from(&dist);
    let n = ps.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if dist[u][v] < radii[u] + radii[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Rows of `2I + A`.
pub fn oracle_embed_2ia(g: &Graph) -> Result<PointSet, GraphError> {
    g.check_pipeline_input()?;
    let n = g.n();
    let points = (0..n)
        .map(|v| {
            (0..n)
                .map(|j| {
                    if j == v {
                        int(2)
                    } else if g.has_edge(v, j) {
                        int(1)
                    } else {
                        int(0)
                    }
                })
                .collect()
        })
        .collect();
    Ok(PointSet::new(points).expect("rows of 2I + A are distinct"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate_exhaustive;
    use proptest::prelude::*;

    fn ints(rows: &[&[i128]]) -> PointSet {
        PointSet::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn boundary_is_strict() {
        let ps = ints(&[&[0], &[1], &[10]]);
        assert_eq!(compute_radii(&ps), vec![int(1), int(1), int(9)]);
        assert_eq!(compute_sig(&ps).edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn two_points_are_adjacent() {
        let ps = ints(&[&[-24, 0], &[0, -24]]);
        assert_eq!(compute_radii(&ps), vec![int(24), int(24)]);
        assert_eq!(compute_sig(&ps).edges(), vec![(0, 1)]);
    }

    #[test]
    fn triangle_points() {
        let ps = ints(&[&[-36, 0], &[-36, -36], &[0, -36]]);
        assert_eq!(compute_sig(&ps).edges(), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn rejects_bad_point_sets() {
        assert_eq!(
            PointSet::new(vec![vec![int(0)]]),
            Err(SigError::TooFewPoints(1))
        );
        assert!(matches!(
            PointSet::new(vec![vec![int(0)], vec![int(0), int(1)]]),
            Err(SigError::Ragged { .. })
        ));
        assert_eq!(
            PointSet::new(vec![vec![int(3)], vec![int(3)]]),
            Err(SigError::Duplicate(0, 1))
        );
    }

    #[test]
    fn oracle_small_cases() {
        let k2 = Graph::from_edges(2, [(0, 1)]);
        let ps = oracle_embed_2ia(&k2).unwrap();
        assert_eq!(ps, ints(&[&[2, 1], &[1, 2]]));
        assert_eq!(compute_radii(&ps), vec![int(1), int(1)]);
        assert_eq!(compute_sig(&ps), k2);
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]);
        assert_eq!(compute_sig(&oracle_embed_2ia(&p3).unwrap()), p3);
    }

    #[test]
    fn oracle_round_trip_small_corpus() {
        for n in 2..=5 {
            for g in generate_exhaustive(n).unwrap() {
                assert_eq!(compute_sig(&oracle_embed_2ia(&g).unwrap()), g);
            }
        }
    }

    fn arb_points() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (2usize..7, 1usize..4).prop_flat_map(|(n, d)| {
            proptest::collection::vec(proptest::collection::vec(-20i64..20, d), n)
        })
    }

    fn to_set(raw: &[Vec<i64>]) -> Option<PointSet> {
        PointSet::new(
            raw.iter()
                .map(|p| p.iter().map(|&x| int(x as i128)).collect())
                .collect(),
        )
        .ok()
    }

    proptest! {
        #[test]
        fn invariant_under_translation_and_scaling(
            raw in arb_points(),
            shift in -50i64..50,
            num in 1i128..20,
            den in 1i128..20,
        ) {
            let Some(ps) = to_set(&raw) else { return Ok(()) };
            let g = compute_sig(&ps);
            let scale = Rational::new(num, den);
            let moved: Vec<Vec<Rational>> = ps
                .points()
                .iter()
                .map(|p| p.iter().enumerate().map(|(j, &x)| x * scale + int(shift as i128 * (j as i128 + 1))).collect())
                .collect();
            prop_assert_eq!(compute_sig(&PointSet::new(moved).unwrap()), g);
        }

        #[test]
        fn invariant_under_zero_padding(raw in arb_points(), extra in 1usize..4) {
            let Some(ps) = to_set(&raw) else { return Ok(()) };
            let padded: Vec<Vec<Rational>> = ps
                .points()
                .iter()
                .map(|p| p.iter().copied().chain(std::iter::repeat_n(int(0), extra)).collect())
                .collect();
            prop_assert_eq!(compute_sig(&PointSet::new(padded).unwrap()), compute_sig(&ps));
        }
    }
}
