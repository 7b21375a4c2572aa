//! Immutable simple undirected graphs with 1-indexed vertices.
//!
//! A [`Graph`] optionally carries integer lattice coordinates per vertex. The
//! coordinates are metadata only: adjacency never depends on them, but the
//! bipartition routine prefers the `x + y` parity split whenever it is a
//! valid 2-colouring.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex label, `1..=vertex_count`.
pub type Vertex = usize;

/// Integer lattice point attached to a vertex.
pub type Point = (i64, i64);

/// Unordered vertex pair stored with the smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[Vertex; 2]", from = "[Vertex; 2]")]
pub struct Edge(Vertex, Vertex);

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    #[inline]
    pub fn u(self) -> Vertex {
        self.0
    }

    #[inline]
    pub fn v(self) -> Vertex {
        self.1
    }

    pub fn touches(self, x: Vertex) -> bool {
        self.0 == x || self.1 == x
    }

    /// The endpoint opposite `x`. `x` must be an endpoint.
    pub fn other(self, x: Vertex) -> Vertex {
        debug_assert!(self.touches(x));
        if self.0 == x {
            self.1
        } else {
            self.0
        }
    }

    pub fn shares_vertex(self, other: Edge) -> bool {
        self.touches(other.0) || self.touches(other.1)
    }
}

impl From<Edge> for [Vertex; 2] {
    fn from(e: Edge) -> Self {
        [e.0, e.1]
    }
}

impl From<[Vertex; 2]> for Edge {
    fn from(p: [Vertex; 2]) -> Self {
        Edge::new(p[0], p[1])
    }
}

impl From<(Vertex, Vertex)> for Edge {
    fn from(p: (Vertex, Vertex)) -> Self {
        Edge::new(p.0, p.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<Edge>,
    // adjacency[v] for v in 1..=n; slot 0 unused
    adjacency: Vec<Vec<Vertex>>,
    coords: BTreeMap<Vertex, Point>,
}

impl Graph {
    /// Builds a graph, collapsing duplicate pairs. Returns the graph and the
    /// number of duplicate pairs that were dropped.
    pub fn build<I, E>(vertex_count: usize, edge_list: I, coords: Option<BTreeMap<Vertex, Point>>) -> Result<(Self, usize)>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut set = BTreeSet::new();
        let mut duplicates = 0;
        for e in edge_list {
            let e = e.into();
            if e.u() == e.v() {
                return Err(Error::SelfLoop { v: e.u() });
            }
            if e.u() == 0 || e.v() > vertex_count {
                return Err(Error::EndpointOutOfRange { u: e.u(), v: e.v(), vertex_count });
            }
            if !set.insert(e) {
                duplicates += 1;
            }
        }

        let coords = coords.unwrap_or_default();
        let mut seen: HashMap<Point, Vertex> = HashMap::with_capacity(coords.len());
        for (&v, &p) in &coords {
            if v == 0 || v > vertex_count {
                return Err(Error::CoordinateOutOfRange { v, vertex_count });
            }
            if let Some(&first) = seen.get(&p) {
                return Err(Error::DuplicateCoordinate { first, second: v, x: p.0, y: p.1 });
            }
            seen.insert(p, v);
        }

        let edges: Vec<Edge> = set.into_iter().collect();
        let mut adjacency = vec![Vec::new(); vertex_count + 1];
        for e in &edges {
            adjacency[e.u()].push(e.v());
            adjacency[e.v()].push(e.u());
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok((Graph { vertex_count, edges, adjacency, coords }, duplicates))
    }

    /// Convenience wrapper around [`Graph::build`] without coordinates.
    pub fn new<I, E>(vertex_count: usize, edge_list: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        Self::build(vertex_count, edge_list, None).map(|(g, _)| g)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical (lexicographic) order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        1..=self.vertex_count
    }

    /// Sorted neighbour list.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        e.v() <= self.vertex_count && self.adjacency[e.u()].binary_search(&e.v()).is_ok()
    }

    pub fn coords(&self) -> &BTreeMap<Vertex, Point> {
        &self.coords
    }

    pub fn coord(&self, v: Vertex) -> Option<Point> {
        self.coords.get(&v).copied()
    }

    pub fn has_full_coords(&self) -> bool {
        self.coords.len() == self.vertex_count
    }

    /// Index of `e` in [`Graph::edges`].
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    /// `G \ F`: same vertex set, the edges of `f` removed.
    pub fn delete_edges<'a, I>(&self, f: I) -> Result<Graph>
    where
        I: IntoIterator<Item = &'a Edge>,
    {
        let mut removed = BTreeSet::new();
        for &e in f {
            if !self.has_edge(e) {
                return Err(Error::EdgeNotInGraph { u: e.u(), v: e.v() });
            }
            removed.insert(e);
        }
        let kept = self.edges.iter().copied().filter(|e| !removed.contains(e));
        let (g, _) = Graph::build(self.vertex_count, kept, Some(self.coords.clone()))?;
        Ok(g)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.vertex_count + 1];
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True iff there is exactly one component. The vertexless graph counts
    /// as connected.
    pub fn is_connected(&self) -> bool {
        self.vertex_count == 0 || self.components().len() == 1
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut histogram = BTreeMap::new();
        for v in self.vertices() {
            *histogram.entry(self.degree(v)).or_insert(0) += 1;
        }
        DegreeProfile {
            max_degree: histogram.keys().next_back().copied().unwrap_or(0),
            min_degree: histogram.keys().next().copied().unwrap_or(0),
            histogram,
        }
    }

    /// Two-colouring of the vertices, or `None` if there is an odd cycle.
    ///
    /// When every vertex has coordinates and the `x + y` parity classes form
    /// a valid bipartition, those classes are returned (even sums in
    /// `side0`). Otherwise each component is BFS-coloured from its smallest
    /// vertex, which lands in `side0`.
    pub fn bipartition(&self) -> Option<Bipartition> {
        if self.has_full_coords() {
            let parity = |v: Vertex| {
                let (x, y) = self.coords[&v];
                (x + y).rem_euclid(2) as u8
            };
            if self.edges.iter().all(|e| parity(e.u()) != parity(e.v())) {
                let side = (0..=self.vertex_count).map(|v| if v == 0 { 0 } else { parity(v) }).collect();
                return Some(Bipartition::from_sides(side));
            }
        }

        let mut side = vec![u8::MAX; self.vertex_count + 1];
        for start in self.vertices() {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &y in self.neighbors(x) {
                    if side[y] == u8::MAX {
                        side[y] = 1 - side[x];
                        queue.push_back(y);
                    } else if side[y] == side[x] {
                        return None;
                    }
                }
            }
        }
        side[0] = 0;
        Some(Bipartition::from_sides(side))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub max_degree: usize,
    pub min_degree: usize,
    pub histogram: BTreeMap<usize, usize>,
}

/// A split of the vertex set into two independent sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    // side[v] in {0, 1}; slot 0 unused
    side: Vec<u8>,
}

impl Bipartition {
    fn from_sides(side: Vec<u8>) -> Self {
        Bipartition { side }
    }

    /// Builds a bipartition from explicit sides and checks it against `g`.
    pub fn from_sets(g: &Graph, side0: &[Vertex], side1: &[Vertex]) -> Result<Self> {
        let mut side = vec![u8::MAX; g.vertex_count() + 1];
        for (label, set) in [(0u8, side0), (1u8, side1)] {
            for &v in set {
                if v == 0 || v > g.vertex_count() {
                    return Err(Error::InvalidBipartition(format!("vertex {v} is not in the graph")));
                }
                if side[v] != u8::MAX {
                    return Err(Error::InvalidBipartition(format!("vertex {v} appears twice")));
                }
                side[v] = label;
            }
        }
        side[0] = 0;
        let b = Bipartition { side };
        b.validate(g)?;
        Ok(b)
    }

    pub fn side_of(&self, v: Vertex) -> u8 {
        self.side[v]
    }

    pub fn side0(&self) -> Vec<Vertex> {
        (1..self.side.len()).filter(|&v| self.side[v] == 0).collect()
    }

    pub fn side1(&self) -> Vec<Vertex> {
        (1..self.side.len()).filter(|&v| self.side[v] == 1).collect()
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.side.len() != g.vertex_count() + 1 {
            return Err(Error::InvalidBipartition(format!(
                "covers {} vertices, graph has {}",
                self.side.len().saturating_sub(1),
                g.vertex_count()
            )));
        }
        if let Some(v) = g.vertices().find(|&v| self.side[v] > 1) {
            return Err(Error::InvalidBipartition(format!("vertex {v} is unassigned")));
        }
        if let Some(e) = g.edges().iter().find(|e| self.side[e.u()] == self.side[e.v()]) {
            return Err(Error::InvalidBipartition(format!("edge {e} lies inside one side")));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p5() -> Graph {
        Graph::new(5, [(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap()
    }

    #[test]
    fn build_collapses_duplicates() {
        let (g, dup) = Graph::build(3, [(1, 2), (1, 2), (2, 3)], None).unwrap();
        assert_eq!(dup, 1);
        assert_eq!(g.edges(), &[Edge::new(1, 2), Edge::new(2, 3)]);
        let (g, dup) = Graph::build(3, [(2, 1), (1, 2)], None).unwrap();
        assert_eq!((g.edge_count(), dup), (1, 1));
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(Graph::new(3, [(2, 2)]).unwrap_err(), Error::SelfLoop { v: 2 });
        assert!(matches!(Graph::new(3, [(1, 4)]), Err(Error::EndpointOutOfRange { u: 1, v: 4, .. })));
        assert!(matches!(Graph::new(3, [(0, 1)]), Err(Error::EndpointOutOfRange { .. })));
    }

    #[test]
    fn coords_must_be_injective() {
        let coords = BTreeMap::from([(1, (0, 0)), (2, (0, 0))]);
        assert!(matches!(Graph::build(2, [(1, 2)], Some(coords)), Err(Error::DuplicateCoordinate { .. })));
    }

    #[test]
    fn isolated_vertex() {
        let g = Graph::new(1, Vec::<(usize, usize)>::new()).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert!(g.is_connected());
        assert_eq!(g.degree_profile().max_degree, 0);
    }

    #[test]
    fn path_profile_and_bipartition() {
        let g = p5();
        let prof = g.degree_profile();
        assert_eq!((prof.max_degree, prof.min_degree), (2, 1));
        assert_eq!(prof.histogram, BTreeMap::from([(1, 2), (2, 3)]));
        let b = g.bipartition().unwrap();
        assert_eq!(b.side0(), vec![1, 3, 5]);
        assert_eq!(b.side1(), vec![2, 4]);
        assert!(g.is_connected());
    }

    #[test]
    fn triangle_has_no_bipartition() {
        let g = Graph::new(3, [(1, 2), (2, 3), (1, 3)]).unwrap();
        assert!(g.bipartition().is_none());
    }

    #[test]
    fn disjoint_edges_disconnected() {
        let g = Graph::new(4, [(1, 2), (3, 4)]).unwrap();
        assert!(!g.is_connected());
        assert!(Graph::new(0, Vec::<Edge>::new()).unwrap().is_connected());
    }

    #[test]
    fn parity_split_preferred() {
        // path laid out so that BFS from vertex 1 would put 1 on side 0 but
        // the parity of (1, 0) is odd
        let coords = BTreeMap::from([(1, (1, 0)), (2, (2, 0)), (3, (3, 0))]);
        let (g, _) = Graph::build(3, [(1, 2), (2, 3)], Some(coords)).unwrap();
        let b = g.bipartition().unwrap();
        assert_eq!(b.side0(), vec![2]);
        assert_eq!(b.side1(), vec![1, 3]);
    }

    #[test]
    fn delete_edges_keeps_vertices() {
        let g = p5();
        let h = g.delete_edges(&[Edge::new(2, 3), Edge::new(4, 5)]).unwrap();
        assert_eq!(h.vertex_count(), 5);
        assert_eq!(h.edges(), &[Edge::new(1, 2), Edge::new(3, 4)]);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.delete_edges(&[]).unwrap(), g);
        assert_eq!(g.delete_edges(&[Edge::new(1, 3)]).unwrap_err(), Error::EdgeNotInGraph { u: 1, v: 3 });
    }

    #[test]
    fn explicit_bipartition_checked() {
        let g = p5();
        assert!(Bipartition::from_sets(&g, &[1, 3, 5], &[2, 4]).is_ok());
        assert!(Bipartition::from_sets(&g, &[1, 2, 5], &[3, 4]).is_err());
        assert!(Bipartition::from_sets(&g, &[1, 3], &[2, 4]).is_err());
    }
}
