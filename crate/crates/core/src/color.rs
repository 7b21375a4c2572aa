//! Maximum 2-edge-colourable subgraphs of bipartite graphs.
//!
//! In a bipartite graph every subgraph of maximum degree two is a disjoint
//! union of paths and even cycles, hence 2-edge-colourable, so `nu_2` is the
//! size of a largest degree-constrained subgraph. That is a max-flow problem:
//! source to each `side0` vertex and each `side1` vertex to sink with
//! capacity 2, one unit arc per edge.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::Result;
use crate::flow::FlowNetwork;
use crate::graph::{Bipartition, Edge, Graph, Vertex};
use crate::matching::nu;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColorableResult {
    pub k: usize,
    pub size: usize,
    /// One edge list per colour; each is a matching.
    pub classes: Vec<Vec<Edge>>,
}

impl ColorableResult {
    pub fn witness_edges(&self) -> impl Iterator<Item = &Edge> {
        self.classes.iter().flatten()
    }
}

pub fn nu2_bipartite(g: &Graph, b: &Bipartition) -> Result<ColorableResult> {
    b.validate(g)?;
    let n = g.vertex_count();
    let (source, sink) = (0, n + 1);
    let mut net = FlowNetwork::new(n + 2);
    for v in g.vertices() {
        if b.side_of(v) == 0 {
            net.add_arc(source, v, 2);
        } else {
            net.add_arc(v, sink, 2);
        }
    }
    let arcs: Vec<(Edge, usize)> = g
        .edges()
        .iter()
        .map(|&e| {
            let (l, r) = if b.side_of(e.u()) == 0 { (e.u(), e.v()) } else { (e.v(), e.u()) };
            (e, net.add_arc(l, r, 1))
        })
        .collect();
    let size = net.max_flow(source, sink) as usize;
    let chosen: Vec<Edge> = arcs.into_iter().filter(|&(_, id)| net.flow(id) == 1).map(|(e, _)| e).collect();
    debug_assert_eq!(chosen.len(), size);
    let classes = Vec::from(two_color(n, &chosen));
    Ok(ColorableResult { k: 2, size, classes })
}

/// Splits a max-degree-2 subgraph without odd cycles into two matchings by
/// alternating colours along each path and cycle. Paths start from their
/// lowest-indexed endpoint, cycles from their lowest vertex.
fn two_color(n: usize, edges: &[Edge]) -> [Vec<Edge>; 2] {
    let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); n + 1];
    for e in edges {
        adj[e.u()].push(e.v());
        adj[e.v()].push(e.u());
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let mut done: BTreeSet<Edge> = BTreeSet::new();
    let mut classes = [Vec::new(), Vec::new()];

    let walk = |start: Vertex, done: &mut BTreeSet<Edge>, classes: &mut [Vec<Edge>; 2]| {
        let mut cur = start;
        let mut color = 0;
        while let Some(&next) = adj[cur].iter().find(|&&w| !done.contains(&Edge::new(cur, w))) {
            let e = Edge::new(cur, next);
            done.insert(e);
            classes[color].push(e);
            color ^= 1;
            cur = next;
        }
    };
    // paths first (endpoints have degree 1), then whatever is left is cycles
    for (v, nbrs) in adj.iter().enumerate().skip(1) {
        if nbrs.len() == 1 && !done.contains(&Edge::new(v, nbrs[0])) {
            walk(v, &mut done, &mut classes);
        }
    }
    for (v, nbrs) in adj.iter().enumerate().skip(1) {
        if nbrs.iter().any(|&w| !done.contains(&Edge::new(v, w))) {
            walk(v, &mut done, &mut classes);
        }
    }
    for c in &mut classes {
        c.sort_unstable();
    }
    classes
}

/// `nu_2(g) - nu(g)`, an upper bound on `L(g)` for bipartite `g`: for any
/// maximum matching `F` and matching `M` of `g \ F`, `F ∪ M` is
/// 2-edge-colourable.
pub fn upper_bound_l(g: &Graph, b: &Bipartition) -> Result<usize> {
    Ok(nu2_bipartite(g, b)?.size - nu(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::matching::{validate_matching, Matching};

    fn check_witness(g: &Graph, r: &ColorableResult) {
        assert_eq!(r.witness_edges().count(), r.size);
        for class in &r.classes {
            let m = Matching::new(g.vertex_count(), class.iter().copied()).unwrap();
            assert!(validate_matching(g, &m).valid);
        }
    }

    #[test]
    fn figure_one_tree() {
        let g = fixtures::twin_spider();
        let b = g.bipartition().unwrap();
        let r = nu2_bipartite(&g, &b).unwrap();
        assert_eq!(r.size, 8);
        check_witness(&g, &r);
        // the only edge left out joins the two degree-3 centres
        let centre_edge = Edge::new(1, 6);
        assert!(!r.witness_edges().any(|&e| e == centre_edge));
        assert_eq!(upper_bound_l(&g, &b).unwrap(), 3);
    }

    #[test]
    fn path_and_even_cycles() {
        let p5 = fixtures::path(5);
        let r = nu2_bipartite(&p5, &p5.bipartition().unwrap()).unwrap();
        assert_eq!(r.size, 4);
        check_witness(&p5, &r);
        assert_eq!(r.classes[0], vec![Edge::new(1, 2), Edge::new(3, 4)]);
        assert_eq!(upper_bound_l(&p5, &p5.bipartition().unwrap()).unwrap(), 2);

        for n in [4, 6] {
            let c = fixtures::cycle(n);
            let r = nu2_bipartite(&c, &c.bipartition().unwrap()).unwrap();
            assert_eq!(r.size, n);
            check_witness(&c, &r);
        }
        let c4 = fixtures::cycle(4);
        assert_eq!(upper_bound_l(&c4, &c4.bipartition().unwrap()).unwrap(), 2);
    }

    #[test]
    fn invalid_bipartition_rejected() {
        let p3 = fixtures::path(3);
        let b = fixtures::path(4).bipartition().unwrap();
        assert!(nu2_bipartite(&p3, &b).is_err());
    }
}
