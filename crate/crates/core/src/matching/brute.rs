//! Exhaustive oracles. Exponential; intended for cross-checking the
//! polynomial algorithms on small graphs.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

pub const DEFAULT_NU_CAP: usize = 24;
pub const DEFAULT_NU_K_CAP: usize = 20;

/// Matching number by exhaustive search with the default edge cap.
pub fn nu_bruteforce(g: &Graph) -> Result<usize> {
    nu_bruteforce_capped(g, DEFAULT_NU_CAP)
}

pub fn nu_bruteforce_capped(g: &Graph, cap: usize) -> Result<usize> {
    nu_k_bruteforce_capped(g, 1, cap)
}

/// `nu_k`: largest union of `k` disjoint matchings, by exhaustive search.
pub fn nu_k_bruteforce(g: &Graph, k: usize) -> Result<usize> {
    nu_k_bruteforce_capped(g, k, DEFAULT_NU_K_CAP)
}

pub fn nu_k_bruteforce_capped(g: &Graph, k: usize, cap: usize) -> Result<usize> {
    if g.edge_count() > cap {
        return Err(Error::CapExceeded { edges: g.edge_count(), cap });
    }
    if k == 0 || g.edge_count() == 0 {
        return Ok(0);
    }
    let mut search = ColorSearch {
        edges: g.edges(),
        k,
        // colour bitmask per vertex
        used: vec![0u32; g.vertex_count() + 1],
        degree: vec![0usize; g.vertex_count() + 1],
        best: 0,
    };
    search.run(0, 0, 0);
    Ok(search.best)
}

struct ColorSearch<'a> {
    edges: &'a [Edge],
    k: usize,
    used: Vec<u32>,
    degree: Vec<usize>,
    best: usize,
}

impl ColorSearch<'_> {
    // `colors_open`: how many colours have been used so far (symmetry break:
    // a new colour may only be the next unused one)
    fn run(&mut self, idx: usize, taken: usize, colors_open: usize) {
        if taken > self.best {
            self.best = taken;
        }
        if idx == self.edges.len() || taken + (self.edges.len() - idx) <= self.best {
            return;
        }
        let e = self.edges[idx];
        let (a, b) = (e.u(), e.v());
        if self.degree[a] < self.k && self.degree[b] < self.k {
            let limit = (colors_open + 1).min(self.k);
            for c in 0..limit {
                let bit = 1u32 << c;
                if self.used[a] & bit != 0 || self.used[b] & bit != 0 {
                    continue;
                }
                self.used[a] |= bit;
                self.used[b] |= bit;
                self.degree[a] += 1;
                self.degree[b] += 1;
                self.run(idx + 1, taken + 1, colors_open.max(c + 1));
                self.used[a] &= !bit;
                self.used[b] &= !bit;
                self.degree[a] -= 1;
                self.degree[b] -= 1;
            }
        }
        self.run(idx + 1, taken, colors_open);
    }
}

/// Calls `visit` once for every matching of `g` (including the empty one).
pub fn for_each_matching<F: FnMut(&[Edge])>(g: &Graph, visit: F) -> Result<()> {
    for_each_matching_capped(g, DEFAULT_NU_CAP, visit)
}

pub fn for_each_matching_capped<F: FnMut(&[Edge])>(g: &Graph, cap: usize, mut visit: F) -> Result<()> {
    if g.edge_count() > cap {
        return Err(Error::CapExceeded { edges: g.edge_count(), cap });
    }
    fn go<F: FnMut(&[Edge])>(edges: &[Edge], idx: usize, covered: &mut [bool], cur: &mut Vec<Edge>, visit: &mut F) {
        if idx == edges.len() {
            visit(cur);
            return;
        }
        go(edges, idx + 1, covered, cur, visit);
        let e = edges[idx];
        if !covered[e.u()] && !covered[e.v()] {
            covered[e.u()] = true;
            covered[e.v()] = true;
            cur.push(e);
            go(edges, idx + 1, covered, cur, visit);
            cur.pop();
            covered[e.u()] = false;
            covered[e.v()] = false;
        }
    }
    let mut covered = vec![false; g.vertex_count() + 1];
    go(g.edges(), 0, &mut covered, &mut Vec::new(), &mut visit);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let mut es = Vec::new();
        for i in 0..5 {
            es.push((i + 1, (i + 1) % 5 + 1));
            es.push((i + 1, i + 6));
            es.push((i + 6, (i + 2) % 5 + 6));
        }
        Graph::new(10, es).unwrap()
    }

    fn k4() -> Graph {
        Graph::new(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn small_values() {
        let p5 = Graph::new(5, [(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        assert_eq!(nu_bruteforce(&p5).unwrap(), 2);
        assert_eq!(nu_bruteforce(&k4()).unwrap(), 2);
        let p = petersen();
        assert_eq!(p.edge_count(), 15);
        assert_eq!(nu_bruteforce(&p).unwrap(), 5);
    }

    #[test]
    fn nu_k_values() {
        let g = k4();
        assert_eq!(nu_k_bruteforce(&g, 0).unwrap(), 0);
        assert_eq!(nu_k_bruteforce(&g, 1).unwrap(), 2);
        // two disjoint perfect matchings of K4 form a 4-cycle
        assert_eq!(nu_k_bruteforce(&g, 2).unwrap(), 4);
        assert_eq!(nu_k_bruteforce(&g, 3).unwrap(), 6);
    }

    #[test]
    fn k4_nu2_by_matching_pairs() {
        // independent check: best union of two disjoint matchings of K4
        let g = k4();
        let mut ms: Vec<Vec<Edge>> = Vec::new();
        for_each_matching(&g, |m| ms.push(m.to_vec())).unwrap();
        let best = ms
            .iter()
            .flat_map(|a| ms.iter().map(move |b| (a, b)))
            .filter(|(a, b)| a.iter().all(|e| !b.contains(e)))
            .map(|(a, b)| a.len() + b.len())
            .max()
            .unwrap();
        assert_eq!(best, 4);
    }

    #[test]
    fn caps_refuse() {
        let g = Graph::new(8, (1..=8).flat_map(|a| ((a + 1)..=8).map(move |b| (a, b)))).unwrap();
        assert!(matches!(nu_bruteforce(&g), Err(Error::CapExceeded { edges: 28, cap: 24 })));
        assert!(matches!(nu_k_bruteforce(&g, 2), Err(Error::CapExceeded { cap: 20, .. })));
    }
}
