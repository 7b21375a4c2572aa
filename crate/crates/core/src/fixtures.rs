//! Small named graphs and seeded random families.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Edge, Graph};

/// Path on `n` vertices `1 - 2 - ... - n`.
pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i, i + 1))).expect("valid path")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::new(n, (1..=n).map(|i| (i, i % n + 1))).expect("valid cycle")
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (1..=n).flat_map(|a| ((a + 1)..=n).map(move |b| (a, b)))).expect("valid clique")
}

/// `K_{a,b}` with sides `1..=a` and `a+1..=a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::new(a + b, (1..=a).flat_map(|x| ((a + 1)..=(a + b)).map(move |y| (x, y)))).expect("valid K_ab")
}

pub fn petersen() -> Graph {
    let mut es = Vec::new();
    for i in 0..5 {
        es.push((i + 1, (i + 1) % 5 + 1));
        es.push((i + 1, i + 6));
        es.push((i + 6, (i + 2) % 5 + 6));
    }
    Graph::new(10, es).expect("valid Petersen")
}

/// Two adjacent degree-3 centres, each carrying two pendant paths of length
/// two. Ten vertices, nine edges, a unique perfect matching that uses the
/// centre edge `{1, 6}`, `nu = 5`, `nu_2 = 8`.
///
/// Coordinates are the drawing's positions halved, so `x + y` parity is a
/// valid bipartition.
pub fn twin_spider() -> Graph {
    let edges = [(1, 2), (2, 3), (1, 4), (4, 5), (1, 6), (6, 7), (7, 8), (6, 9), (9, 10)];
    let coords = BTreeMap::from([
        (1, (0, 0)),
        (2, (-1, 0)),
        (3, (-2, 0)),
        (4, (0, 1)),
        (5, (0, 2)),
        (6, (1, 0)),
        (7, (2, 0)),
        (8, (3, 0)),
        (9, (1, 1)),
        (10, (1, 2)),
    ]);
    Graph::build(10, edges, Some(coords)).expect("valid twin spider").0
}

/// Erdős–Rényi `G(n, p)` drawn from a seeded ChaCha stream.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_gnp_with(n, p, &mut rng)
}

pub fn random_gnp_with<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut es = Vec::new();
    for a in 1..=n {
        for b in (a + 1)..=n {
            if rng.gen_bool(p) {
                es.push(Edge::new(a, b));
            }
        }
    }
    Graph::new(n, es).expect("valid random graph")
}

/// Random bipartite graph with sides `1..=left` and `left+1..=left+right`.
pub fn random_bipartite_with<R: Rng>(left: usize, right: usize, p: f64, rng: &mut R) -> Graph {
    let mut es = Vec::new();
    for a in 1..=left {
        for b in (left + 1)..=(left + right) {
            if rng.gen_bool(p) {
                es.push(Edge::new(a, b));
            }
        }
    }
    Graph::new(left + right, es).expect("valid random bipartite graph")
}

pub fn random_bipartite(left: usize, right: usize, p: f64, seed: u64) -> Graph {
    random_bipartite_with(left, right, p, &mut ChaCha8Rng::seed_from_u64(seed))
}
