//! Lattice construction of the reduction graphs.
//!
//! Every vertex is an integer point. For a literal on variable `i` in
//! clause `j`, the gadget's `v`-square always sits at columns `4i-1, 4i`,
//! rows `4j-1, 4j`; its `u`-square sits below it (rows `4j-3, 4j-2`) for a
//! positive literal and to its left (columns `4i-3, 4i-2`) for a negated
//! one. The `v`-squares of a variable's occurrences are chained into one
//! even cycle, and a path along column `-1` ties every clause together.
//!
//! The two variants differ only in how a clause's three gadgets are joined:
//!
//! * [`Variant::BigL`]: four clause vertices in column 0; `(0,4j-3)` and
//!   `(0,4j-1)` are joined to the `v12` vertex of each gadget.
//! * [`Variant::Ell`]: no clause vertices; `v12` of each gadget is joined to
//!   the entry vertex of the next one ([`Gadget::entry`]).
//!
//! Path vertex `(-1,4j-2)` is joined to `u11` of the first gadget of every
//! clause `j`, which keeps the graph connected without disturbing the
//! path's residual contribution of `2m - 1`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::cnf::{CnfInstance, Literal};
use crate::error::Error;
use crate::graph::{Edge, Graph, Point, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    /// Maximum degree four, `32m` vertices; residual `10m - 1 + |Sat|`.
    #[serde(rename = "L")]
    BigL,
    /// Maximum degree three, `28m` vertices; residual `11m - 1 - |Sat|`.
    #[serde(rename = "ell")]
    Ell,
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "L" => Ok(Variant::BigL),
            "ell" | "l" => Ok(Variant::Ell),
            _ => Err(Error::Usage(format!("unknown variant {s:?}; expected L or ell"))),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::BigL => "L",
            Variant::Ell => "ell",
        })
    }
}

/// Whether a variable-cycle edge runs along a column or a row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Vertical,
    Horizontal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CycleEdge {
    pub edge: Edge,
    pub orientation: Orientation,
}

/// Role-labelled vertices of one literal gadget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Gadget {
    pub literal: (usize, bool),
    pub u11: Vertex,
    pub u12: Vertex,
    pub u21: Vertex,
    pub u22: Vertex,
    pub v11: Vertex,
    pub v12: Vertex,
    pub v21: Vertex,
    pub v22: Vertex,
}

impl Gadget {
    /// The `v`-square vertex not already joined to the `u`-square: `v11`
    /// for a positive literal, `v22` for a negated one.
    pub fn entry(&self) -> Vertex {
        if self.literal.1 {
            self.v11
        } else {
            self.v22
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub vertices: usize,
    /// Edge count predicted by the construction rules used here.
    pub edges: usize,
    /// Edge count as stated alongside the drawings (`37m-1` / `31m-1`).
    pub stated_edges: usize,
    /// Edge count when the connecting path is joined to the first and last
    /// clause only, exactly as drawn.
    pub figure_literal_edges: usize,
    pub nu: usize,
    pub max_degree: usize,
    /// `11m - 1` for the L-variant.
    pub k_param: Option<usize>,
}

/// Connectivity rule, as reported in certificates.
pub const EDGE_RULE: &str = "path vertex (-1,4j-2) joined to u11 of the first literal gadget of clause j, for every j";

/// Clause rule of the ell-variant, as reported in certificates.
pub const ELL_JOIN_RULE: &str = "v12 of slot t joined to v11 (positive literal) or v22 (negated literal) of slot t+1";

#[derive(Clone, Debug)]
pub struct ReductionArtifact {
    pub variant: Variant,
    pub cnf: CnfInstance,
    pub graph: Graph,
    /// `gadgets[j-1][t]`: slot `t` of clause `j`, slots ordered by variable.
    pub gadgets: Vec<[Gadget; 3]>,
    /// Variable `i` → its cycle, starting at `v21` of the first occurrence.
    pub cycles: BTreeMap<usize, Vec<CycleEdge>>,
    /// Connecting path `(-1,1), ..., (-1,4m)`.
    pub path: Vec<Vertex>,
    /// L-variant: `(0,4j-3), (0,4j-2), (0,4j-1), (0,4j)` per clause.
    pub clause_vertices: Vec<[Vertex; 4]>,
    pub expected: Expected,
}

impl ReductionArtifact {
    pub fn m(&self) -> usize {
        self.cnf.num_clauses()
    }

    pub fn n(&self) -> usize {
        self.cnf.num_vars()
    }

    /// Swaps in a different graph (e.g. one loaded from disk) so that the
    /// certificate checks run against it.
    pub fn with_graph(mut self, g: Graph) -> Self {
        self.graph = g;
        self
    }
}

#[derive(Default)]
struct Lattice {
    ids: HashMap<Point, Vertex>,
    coords: BTreeMap<Vertex, Point>,
    edges: Vec<Edge>,
}

impl Lattice {
    fn vertex(&mut self, p: Point) -> Vertex {
        let next = self.ids.len() + 1;
        let id = *self.ids.entry(p).or_insert(next);
        self.coords.insert(id, p);
        id
    }

    fn join(&mut self, a: Vertex, b: Vertex) {
        self.edges.push(Edge::new(a, b));
    }

    fn gadget(&mut self, lit: Literal, j: usize) -> Gadget {
        let (i, j) = (lit.variable as i64, j as i64);
        let (u11, u12, u21, u22) = if lit.positive {
            ((4 * i - 1, 4 * j - 3), (4 * i - 1, 4 * j - 2), (4 * i, 4 * j - 3), (4 * i, 4 * j - 2))
        } else {
            ((4 * i - 3, 4 * j - 1), (4 * i - 2, 4 * j - 1), (4 * i - 3, 4 * j), (4 * i - 2, 4 * j))
        };
        let g = Gadget {
            literal: (lit.variable, lit.positive),
            u11: self.vertex(u11),
            u12: self.vertex(u12),
            u21: self.vertex(u21),
            u22: self.vertex(u22),
            v11: self.vertex((4 * i - 1, 4 * j)),
            v12: self.vertex((4 * i, 4 * j)),
            v21: self.vertex((4 * i - 1, 4 * j - 1)),
            v22: self.vertex((4 * i, 4 * j - 1)),
        };
        self.join(g.u11, g.u12);
        self.join(g.u21, g.u22);
        self.join(g.u12, g.v21);
        if lit.positive {
            self.join(g.u22, g.v22);
        } else {
            self.join(g.u22, g.v11);
        }
        self.join(g.v21, g.v22);
        self.join(g.v22, g.v12);
        self.join(g.v11, g.v12);
        g
    }
}

pub fn build_artifact(cnf: &CnfInstance, variant: Variant) -> ReductionArtifact {
    let m = cnf.num_clauses();
    let mut lat = Lattice::default();

    let path: Vec<Vertex> = (1..=4 * m as i64).map(|y| lat.vertex((-1, y))).collect();
    for w in path.windows(2) {
        lat.join(w[0], w[1]);
    }

    let mut gadgets = Vec::with_capacity(m);
    let mut clause_vertices = Vec::new();
    for (jj, clause) in cnf.clauses().iter().enumerate() {
        let j = jj + 1;
        let mut lits = *clause;
        lits.sort_by_key(|l| l.variable);

        let column = (variant == Variant::BigL).then(|| {
            let y = 4 * j as i64;
            [lat.vertex((0, y - 3)), lat.vertex((0, y - 2)), lat.vertex((0, y - 1)), lat.vertex((0, y))]
        });
        let slots = lits.map(|l| lat.gadget(l, j));

        match column {
            Some(c) => {
                lat.join(c[0], c[1]);
                lat.join(c[2], c[3]);
                for g in &slots {
                    lat.join(c[2], g.v12);
                    lat.join(c[0], g.v12);
                }
                clause_vertices.push(c);
            }
            None => {
                for t in 0..2 {
                    lat.join(slots[t].v12, slots[t + 1].entry());
                }
            }
        }
        lat.join(path[4 * j - 3], slots[0].u11);
        gadgets.push(slots);
    }

    let mut cycles = BTreeMap::new();
    for i in 1..=cnf.num_vars() {
        let occ: Vec<Gadget> = cnf
            .occurrences(i)
            .into_iter()
            .map(|j| *gadgets[j - 1].iter().find(|g| g.literal.0 == i).expect("variable occurs in clause"))
            .collect();
        let mut cycle = Vec::with_capacity(4 * occ.len());
        for (a, g) in occ.iter().enumerate() {
            let next = &occ[(a + 1) % occ.len()];
            let h = |e| CycleEdge { edge: e, orientation: Orientation::Horizontal };
            let v = |e| CycleEdge { edge: e, orientation: Orientation::Vertical };
            cycle.push(h(Edge::new(g.v21, g.v22)));
            cycle.push(v(Edge::new(g.v22, g.v12)));
            cycle.push(h(Edge::new(g.v12, g.v11)));
            let connector = Edge::new(g.v11, next.v21);
            lat.join(connector.u(), connector.v());
            cycle.push(v(connector));
        }
        cycles.insert(i, cycle);
    }

    let (graph, duplicates) = Graph::build(lat.coords.len(), lat.edges, Some(lat.coords)).expect("lattice graph is simple");
    debug_assert_eq!(duplicates, 0);

    ReductionArtifact { variant, cnf: cnf.clone(), graph, gadgets, cycles, path, clause_vertices, expected: expected_counts(variant, m) }
}

/// Counts the construction must hit, derived from the per-part census:
/// seven edges per gadget, one cycle connector per literal occurrence, the
/// path, one path anchor per clause, and the per-clause joins (eight for
/// the L-variant, two for the ell-variant).
pub fn expected_counts(variant: Variant, m: usize) -> Expected {
    let gadget_edges = 21 * m;
    let connectors = 3 * m;
    let path_edges = 4 * m - 1;
    let (clause_edges, per_clause_vertices, max_degree) = match variant {
        Variant::BigL => (8 * m, 32, 4),
        Variant::Ell => (2 * m, 28, 3),
    };
    let base = gadget_edges + connectors + path_edges + clause_edges;
    // as drawn: anchors at (-1,4) and (-1,4m) only, one edge when m = 1
    let figure_anchors = if m == 1 { 1 } else { 2 };
    let vertices = per_clause_vertices * m;
    Expected {
        vertices,
        edges: base + m,
        stated_edges: match variant {
            Variant::BigL => 37 * m - 1,
            Variant::Ell => 31 * m - 1,
        },
        figure_literal_edges: base + figure_anchors,
        nu: vertices / 2,
        max_degree,
        k_param: (variant == Variant::BigL).then(|| 11 * m - 1),
    }
}
