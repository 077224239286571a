//! Structured graph families that reach every picker step, plus the
//! residual-block counterexample they surface.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sigdim::embedder::embed;
use sigdim::factor::star_triangle_factor;
use sigdim::graph::{parse_graph, Graph};
use sigdim::harness::{evaluate, minimize, run_case, Coverage, Outcome};
use sigdim::matching::maximum_matching;
use sigdim::picker::{pick_vertices, PickClass};
use sigdim::rational::int;
use sigdim::verifier::verify;

const GAP_KEY: &str = "verify:II:family2";

fn relabel(g: &Graph, rng: &mut ChaCha8Rng) -> Graph {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    Graph::from_edges(n, g.edges().into_iter().map(|(u, v)| (perm[u], perm[v])))
}

fn without_isolates(n: usize, mut e: Vec<(usize, usize)>, rng: &mut ChaCha8Rng) -> Graph {
    let mut deg = vec![0; n];
    for &(u, v) in &e {
        deg[u] += 1;
        deg[v] += 1;
    }
    for v in 0..n {
        if deg[v] == 0 {
            let mut u = rng.gen_range(0..n - 1);
            if u >= v {
                u += 1;
            }
            e.push((u, v));
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    Graph::from_edges(n, e)
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

/// Graph number `seed`; the family is `seed % 6`.
fn family(seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n: usize = rng.gen_range(5..26);
    let mut e = Vec::new();
    match seed % 6 {
        0 => {
            // planted stars
            let c = rng.gen_range(1..=(n / 3).max(1));
            let p1: f64 = rng.gen_range(0.1..0.9);
            let p2: f64 = rng.gen_range(0.0..0.9);
            let p3 = [0.0, 0.0, 0.05, 0.15][rng.gen_range(0..4)];
            for (u, v) in pairs(n) {
                let p = if v < c {
                    p2
                } else if u < c {
                    p1
                } else {
                    p3
                };
                if rng.gen_bool(p) {
                    e.push((u, v));
                }
            }
        }
        1 => {
            // tree with a few chords
            for v in 1..n {
                e.push((rng.gen_range(0..v), v));
            }
            for _ in 0..rng.gen_range(0..3) {
                let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
                if a != b {
                    e.push((a, b));
                }
            }
        }
        2 => {
            // disjoint small components
            let mut v0 = 0;
            while v0 + 2 <= n {
                let k = rng.gen_range(2..=5).min(n - v0);
                let p: f64 = rng.gen_range(0.3..1.0);
                for (a, b) in pairs(k) {
                    if rng.gen_bool(p) {
                        e.push((v0 + a, v0 + b));
                    }
                }
                for a in 1..k {
                    if !e.iter().any(|&(x, y)| x == v0 + a || y == v0 + a) {
                        e.push((v0, v0 + a));
                    }
                }
                v0 += k;
            }
        }
        3 => {
            // planted triangles and stars with sparse noise
            let mut v0 = 0;
            while v0 + 3 <= n {
                if rng.gen_bool(0.5) {
                    e.extend([(v0, v0 + 1), (v0 + 1, v0 + 2), (v0, v0 + 2)]);
                    v0 += 3;
                } else {
                    let k = rng.gen_range(3..=5).min(n - v0);
                    e.extend((1..k).map(|a| (v0, v0 + a)));
                    v0 += k;
                }
            }
            let q: f64 = rng.gen_range(0.0..0.2);
            e.extend(pairs(n).filter(|_| rng.gen_bool(q)));
        }
        4 => {
            // unbalanced bipartite with edges inside the small side
            let a = rng.gen_range(1..=(n / 3).max(1));
            let p: f64 = rng.gen_range(0.2..0.9);
            let q: f64 = rng.gen_range(0.0..0.7);
            for (u, v) in pairs(n).filter(|&(u, _)| u < a) {
                if rng.gen_bool(if v < a { q } else { p }) {
                    e.push((u, v));
                }
            }
        }
        _ => {
            // near cliques
            let p: f64 = rng.gen_range(0.6..0.97);
            e.extend(pairs(n).filter(|_| rng.gen_bool(p)));
        }
    }
    let g = without_isolates(n, e, &mut rng);
    relabel(&g, &mut rng)
}

fn count() -> u64 {
    std::env::var("SIGDIM_FAMILY_COUNT")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(12000)
}

#[test]
fn families_fail_only_on_the_residual_gap() {
    let mut failures: BTreeMap<String, usize> = BTreeMap::new();
    let mut coverage = Coverage::new();
    for seed in 0..count() {
        let g = family(seed);
        let f = star_triangle_factor(&g, &maximum_matching(&g)).unwrap();
        let picks = pick_vertices(&g, &f).unwrap();
        assert_eq!(picks.adjacency_violations(&g, &f), Vec::<String>::new());
        let (o, c) = evaluate(&g);
        for (k, x) in c {
            *coverage.entry(k).or_default() += x;
        }
        if let Outcome::VerifyFail(rep) = &o {
            assert!(
                rep.sig_equal && rep.radius_agree && rep.bound_ok,
                "seed {seed}"
            );
            assert!(rep
                .inequality_failures
                .iter()
                .all(|f| f.id == 2 && f.class == PickClass::ResidualSet));
        }
        if let Some(key) = o.failure_key() {
            *failures.entry(key).or_default() += 1;
        }
    }
    println!("{failures:?}");
    assert!(failures.keys().all(|k| k == GAP_KEY), "{failures:?}");
    for key in [
        "step VIII 7",
        "step VIII 9",
        "step VIII 10",
        "step VIII 11",
        "step I 18",
        "step I 19",
        "step VIII 22",
        "step VII 24",
        "step II 27",
        "step I 30",
        "step II 32",
        "step V 33",
        "step VI 35",
        "step I 37",
        "step II 38",
        "step III 40",
        "step IV 43",
        "step I 45",
    ] {
        assert!(coverage.contains_key(key), "{key} never reached");
    }
}

#[test]
fn residual_gap_counterexample() {
    let g = parse_graph(include_str!("fixtures/residual_gap.graph")).unwrap();
    let e = embed(&g).unwrap();
    let classes: Vec<(&str, u8)> = e
        .picks
        .picks
        .iter()
        .map(|p| (p.class.roman(), p.step))
        .collect();
    assert_eq!(
        classes,
        [
            ("VIII", 7),
            ("I", 19),
            ("VIII", 22),
            ("VIII", 22),
            ("II", 27)
        ]
    );
    let rep = verify(&g, &e).unwrap();
    assert!(rep.sig_equal && rep.radius_agree && rep.bound_ok);
    assert_eq!(rep.d, 9);
    assert_eq!(rep.inequality_failures.len(), 1);
    let f = &rep.inequality_failures[0];
    assert_eq!((f.k, f.id, f.u, f.v), (4, 2, 9, 0));
    assert_eq!((f.lhs, f.rhs), (int(140), int(144)));
    assert_eq!(e.schedule.rv[0], int(144));
    assert_eq!(e.schedule.rv[9], int(140));

    let outcome = run_case(&g);
    assert_eq!(outcome.failure_key().as_deref(), Some(GAP_KEY));
    let bundle = minimize(&g, &outcome);
    let shrunk = parse_graph(&bundle.graph).unwrap();
    assert_eq!(run_case(&shrunk).failure_key().as_deref(), Some(GAP_KEY));
    assert_eq!(shrunk.n(), 12);
}

#[test]
fn canonical_labelling_of_the_same_graph_passes() {
    let g = Graph::from_edges(
        12,
        (0..4).flat_map(|i| [(3 * i, 3 * i + 1), (3 * i + 1, 3 * i + 2)]),
    );
    assert!(run_case(&g).passed());
}
