//! Branch-and-bound enumeration of all maximum matchings.
//!
//! Each search node fixes a set of chosen edges and a set of still-allowed
//! edges. It branches on one allowed edge (take it / forbid it), so the two
//! subtrees hold disjoint sets of matchings and nothing is produced twice. A
//! node is pruned when `|chosen| + nu(allowed)` falls short of `nu(g)`.

use crate::graph::{Edge, Graph};
use crate::matching::{max_matching, Matching, DEFAULT_SEED};

struct Node {
    chosen: Vec<usize>,
    // indices into g.edges(), none touching a chosen edge
    allowed: Vec<usize>,
}

/// Iterator over the maximum matchings of a graph, in a deterministic
/// depth-first order. Stops after `cap` matchings; [`truncated`] then
/// reports whether more exist.
///
/// [`truncated`]: MaximumMatchings::truncated
pub struct MaximumMatchings<'g> {
    g: &'g Graph,
    target: usize,
    stack: Vec<Node>,
    cap: usize,
    yielded: usize,
    truncated: bool,
}

pub fn enumerate_maximum_matchings(g: &Graph, cap: usize) -> MaximumMatchings<'_> {
    let target = max_matching(g, DEFAULT_SEED).len();
    let root = Node { chosen: Vec::new(), allowed: (0..g.edge_count()).collect() };
    MaximumMatchings { g, target, stack: vec![root], cap, yielded: 0, truncated: false }
}

impl<'g> MaximumMatchings<'g> {
    pub fn nu(&self) -> usize {
        self.target
    }

    /// Whether enumeration stopped at the cap with matchings left over.
    /// Meaningful once the iterator has returned `None`.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    pub fn count_yielded(&self) -> usize {
        self.yielded
    }

    fn next_leaf(&mut self) -> Option<Vec<usize>> {
        let edges = self.g.edges();
        while let Some(node) = self.stack.pop() {
            if node.chosen.len() == self.target {
                return Some(node.chosen);
            }
            if node.allowed.is_empty() {
                continue;
            }
            let sub = Graph::new(self.g.vertex_count(), node.allowed.iter().map(|&i| edges[i])).expect("subgraph");
            if node.chosen.len() + max_matching(&sub, DEFAULT_SEED).len() < self.target {
                continue;
            }

            // branch on the lowest edge at a minimum-degree vertex of the
            // allowed subgraph
            let pivot_vertex =
                sub.vertices().filter(|&v| sub.degree(v) > 0).min_by_key(|&v| (sub.degree(v), v)).expect("non-empty subgraph");
            let pivot = Edge::new(pivot_vertex, sub.neighbors(pivot_vertex)[0]);
            let pivot_idx = self.g.edge_index(pivot).expect("edge of g");

            let without: Vec<usize> = node.allowed.iter().copied().filter(|&i| i != pivot_idx).collect();
            let with_allowed: Vec<usize> = node.allowed.iter().copied().filter(|&i| !edges[i].shares_vertex(pivot)).collect();
            let mut with_chosen = node.chosen.clone();
            with_chosen.push(pivot_idx);

            self.stack.push(Node { chosen: node.chosen, allowed: without });
            // the pushed-last branch is explored first
            self.stack.push(Node { chosen: with_chosen, allowed: with_allowed });
        }
        None
    }
}

impl Iterator for MaximumMatchings<'_> {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        if self.truncated {
            return None;
        }
        let leaf = self.next_leaf()?;
        if self.yielded == self.cap {
            self.truncated = true;
            self.stack.clear();
            return None;
        }
        self.yielded += 1;
        let edges = self.g.edges();
        Some(Matching::new_unchecked(self.g.vertex_count(), leaf.into_iter().map(|i| edges[i])))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::matching::brute::for_each_matching;
    use std::collections::BTreeSet;

    fn all(g: &Graph) -> BTreeSet<Vec<Edge>> {
        enumerate_maximum_matchings(g, usize::MAX).map(|m| m.edges().to_vec()).collect()
    }

    #[test]
    fn p5_has_three() {
        let got = all(&fixtures::path(5));
        let expect: BTreeSet<Vec<Edge>> =
            [[(1, 2), (3, 4)], [(1, 2), (4, 5)], [(2, 3), (4, 5)]].iter().map(|m| m.iter().map(|&p| Edge::from(p)).collect()).collect();
        assert_eq!(got, expect);

        // cross-check against the exhaustive pair scan
        let mut brute = BTreeSet::new();
        for_each_matching(&fixtures::path(5), |m| {
            if m.len() == 2 {
                brute.insert(m.to_vec());
            }
        })
        .unwrap();
        assert_eq!(got, brute);
    }

    #[test]
    fn c4_and_unique() {
        assert_eq!(all(&fixtures::cycle(4)).len(), 2);
        assert_eq!(all(&fixtures::twin_spider()).len(), 1);
        let empty = Graph::new(3, Vec::<Edge>::new()).unwrap();
        assert_eq!(all(&empty), BTreeSet::from([vec![]]));
    }

    #[test]
    fn truncation_flag() {
        let k6 = fixtures::complete(6); // 15 perfect matchings
        let mut it = enumerate_maximum_matchings(&k6, 15);
        assert_eq!(it.by_ref().count(), 15);
        assert!(!it.truncated());
        let mut it = enumerate_maximum_matchings(&k6, 4);
        assert_eq!(it.by_ref().count(), 4);
        assert!(it.truncated());
    }

    #[test]
    fn deterministic_order() {
        let g = fixtures::random_gnp(8, 0.5, 11);
        let a: Vec<_> = enumerate_maximum_matchings(&g, 1000).collect();
        let b: Vec<_> = enumerate_maximum_matchings(&g, 1000).collect();
        assert_eq!(a, b);
    }
}
