//! Maximum matchings and matching validation.

mod bipartite;
mod blossom;
pub mod brute;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};

pub use bipartite::max_matching_bipartite;
pub use blossom::max_matching;

/// Seed used by [`nu`] and anywhere a single canonical matching is wanted.
pub const DEFAULT_SEED: u64 = 0;

/// A set of pairwise vertex-disjoint edges of some host graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matching {
    edges: Vec<Edge>,
    host_size: usize,
}

impl Matching {
    /// Sorts `edges` and checks that no two share a vertex.
    pub fn new(host_size: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let m = Self::new_unchecked(host_size, edges);
        let mut seen = vec![false; host_size + 1];
        for e in &m.edges {
            for x in [e.u(), e.v()] {
                if x == 0 || x > host_size {
                    return Err(Error::InvalidMatching(format!("edge {e} leaves 1..={host_size}")));
                }
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidMatching(format!("vertex {x} is covered twice")));
                }
            }
        }
        Ok(m)
    }

    /// Builds a matching without checking disjointness; use
    /// [`validate_matching`] to inspect the result.
    pub fn new_unchecked(host_size: usize, edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        Matching { edges, host_size }
    }

    pub(crate) fn from_mate(mate: &[Option<Vertex>]) -> Self {
        let edges = mate.iter().enumerate().skip(1).filter_map(|(v, &w)| w.filter(|&w| v < w).map(|w| Edge::new(v, w))).collect();
        Matching { edges, host_size: mate.len() - 1 }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn host_size(&self) -> usize {
        self.host_size
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn covers(&self, v: Vertex) -> bool {
        self.edges.iter().any(|e| e.touches(v))
    }

    /// `mate[v]` for `v` in `1..=host_size`; slot 0 unused.
    pub fn mates(&self) -> Vec<Option<Vertex>> {
        let mut mate = vec![None; self.host_size + 1];
        for e in &self.edges {
            mate[e.u()] = Some(e.v());
            mate[e.v()] = Some(e.u());
        }
        mate
    }
}

impl Serialize for Matching {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.edges.serialize(s)
    }
}

/// Matching number of `g`.
pub fn nu(g: &Graph) -> usize {
    max_matching(g, DEFAULT_SEED).len()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MatchingFlags {
    pub valid: bool,
    pub maximal: bool,
    pub maximum: bool,
    pub perfect: bool,
}

/// Classifies `f` against `g`. `maximal`, `maximum`, and `perfect` are only
/// ever set on valid matchings.
pub fn validate_matching(g: &Graph, f: &Matching) -> MatchingFlags {
    let mut covered = vec![false; g.vertex_count() + 1];
    let mut valid = f.host_size == g.vertex_count();
    for e in &f.edges {
        if !valid {
            break;
        }
        if !g.has_edge(*e) || covered[e.u()] || covered[e.v()] {
            valid = false;
            break;
        }
        covered[e.u()] = true;
        covered[e.v()] = true;
    }
    if !valid {
        return MatchingFlags { valid, maximal: false, maximum: false, perfect: false };
    }
    let maximal = g.edges().iter().all(|e| covered[e.u()] || covered[e.v()]);
    let maximum = f.len() == nu(g);
    let perfect = 2 * f.len() == g.vertex_count();
    MatchingFlags { valid, maximal, maximum, perfect }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p5() -> Graph {
        Graph::new(5, [(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap()
    }

    fn m(host: usize, es: &[(usize, usize)]) -> Matching {
        Matching::new_unchecked(host, es.iter().map(|&p| Edge::from(p)))
    }

    #[test]
    fn p5_flags() {
        let g = p5();
        let f = validate_matching(&g, &m(5, &[(1, 2), (3, 4)]));
        assert_eq!(f, MatchingFlags { valid: true, maximal: true, maximum: true, perfect: false });

        let f = validate_matching(&g, &m(5, &[(2, 3)]));
        assert!(f.valid && !f.maximum && !f.perfect);
        // {4,5} can still be added, so {2,3} alone is not maximal
        assert!(!f.maximal);

        let f = validate_matching(&g, &m(5, &[(2, 3), (4, 5)]));
        assert!(f.valid && f.maximal && f.maximum);
    }

    #[test]
    fn p5_maximality_matches_enumeration() {
        // every matching of P5, checked for maximality by trying all additions
        let g = p5();
        let mut all = Vec::new();
        brute::for_each_matching(&g, |es| all.push(es.to_vec())).unwrap();
        assert_eq!(all.len(), 8);
        for es in all {
            let f = Matching::new(5, es.iter().copied()).unwrap();
            let extendable = g.edges().iter().any(|e| !es.iter().any(|x| x.shares_vertex(*e)));
            assert_eq!(validate_matching(&g, &f).maximal, !extendable, "{es:?}");
        }
    }

    #[test]
    fn c4_perfect() {
        let g = Graph::new(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        for es in [[(1, 2), (3, 4)], [(2, 3), (1, 4)]] {
            assert!(validate_matching(&g, &m(4, &es)).perfect);
        }
    }

    #[test]
    fn invalid_matchings() {
        let g = p5();
        assert!(!validate_matching(&g, &m(5, &[(1, 2), (2, 3)])).valid);
        assert!(!validate_matching(&g, &m(5, &[(1, 3)])).valid);
        assert!(!validate_matching(&g, &m(6, &[(1, 2)])).valid);
        assert!(Matching::new(5, [Edge::new(1, 2), Edge::new(2, 3)]).is_err());
    }

    #[test]
    fn nu_small_cases() {
        assert_eq!(nu(&Graph::new(2, [(1, 2)]).unwrap()), 1);
        assert_eq!(nu(&Graph::new(4, Vec::<Edge>::new()).unwrap()), 0);
    }
}
