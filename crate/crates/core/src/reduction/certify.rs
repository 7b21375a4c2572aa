//! Assignment/matching correspondence and certificates for built artifacts.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use super::cnf::Assignment;
use super::construct::{expected_counts, Orientation, ReductionArtifact, Variant};
use crate::error::{Error, Result};
use crate::graph::Edge;
use crate::matching::{nu, validate_matching, Matching};
use crate::spectrum::enumerate_maximum_matchings;
use crate::spectrum::residual_nu;

/// Default largest `n` for which [`verify_artifact`] sweeps all assignments.
pub const DEFAULT_EXHAUSTIVE_VARS: usize = 16;

fn true_orientation(variant: Variant) -> Orientation {
    match variant {
        Variant::BigL => Orientation::Vertical,
        Variant::Ell => Orientation::Horizontal,
    }
}

/// The perfect matching that encodes `alpha`: the path's perfect matching,
/// the `u`-edges of every gadget, the clause-column edges, and on each
/// variable cycle the edges of the orientation picked by the variable's value.
pub fn encode_assignment(a: &ReductionArtifact, alpha: &Assignment) -> Result<Matching> {
    a.cnf.check_total(alpha)?;
    let mut edges = Vec::with_capacity(a.graph.vertex_count() / 2);
    edges.extend(a.path.chunks(2).map(|p| Edge::new(p[0], p[1])));
    for clause in &a.gadgets {
        for g in clause {
            edges.push(Edge::new(g.u11, g.u12));
            edges.push(Edge::new(g.u21, g.u22));
        }
    }
    for c in &a.clause_vertices {
        edges.push(Edge::new(c[0], c[1]));
        edges.push(Edge::new(c[2], c[3]));
    }
    let on = true_orientation(a.variant);
    for (&i, cycle) in &a.cycles {
        let want = if alpha.value(i) { on } else { flip(on) };
        edges.extend(cycle.iter().filter(|ce| ce.orientation == want).map(|ce| ce.edge));
    }
    Matching::new(a.graph.vertex_count(), edges)
}

fn flip(o: Orientation) -> Orientation {
    match o {
        Orientation::Vertical => Orientation::Horizontal,
        Orientation::Horizontal => Orientation::Vertical,
    }
}

/// Reads the assignment back off a perfect matching of the artifact graph.
pub fn decode_matching(a: &ReductionArtifact, f: &Matching) -> Result<Assignment> {
    let flags = validate_matching(&a.graph, f);
    if !flags.valid || !flags.perfect {
        return Err(Error::NotPerfect(format!("{} edges on {} vertices", f.len(), a.graph.vertex_count())));
    }
    let on = true_orientation(a.variant);
    let mut values = Vec::with_capacity(a.n());
    for (&i, cycle) in &a.cycles {
        let chosen: BTreeSet<Orientation> = cycle.iter().filter(|ce| f.contains(ce.edge)).map(|ce| ce.orientation).collect();
        let used = cycle.iter().filter(|ce| f.contains(ce.edge)).count();
        if chosen.len() != 1 || used * 2 != cycle.len() {
            return Err(Error::NonConformingMatching(format!("cycle of variable {i} is not matched along one orientation")));
        }
        values.push(chosen.contains(&on));
    }
    Ok(Assignment::new(values))
}

/// Edges any encoded assignment may use that are absent from the graph.
fn missing_encoding_edges(a: &ReductionArtifact) -> Vec<Edge> {
    let mut wanted: Vec<Edge> = a.path.chunks(2).map(|p| Edge::new(p[0], p[1])).collect();
    for g in a.gadgets.iter().flatten() {
        wanted.push(Edge::new(g.u11, g.u12));
        wanted.push(Edge::new(g.u21, g.u22));
    }
    for c in &a.clause_vertices {
        wanted.push(Edge::new(c[0], c[1]));
        wanted.push(Edge::new(c[2], c[3]));
    }
    wanted.extend(a.cycles.values().flatten().map(|ce| ce.edge));
    wanted.retain(|&e| !a.graph.has_edge(e));
    wanted
}

/// Every vertex has coordinates and every edge joins an even `x+y` to an odd one.
fn parity_bipartite(g: &crate::graph::Graph) -> bool {
    g.has_full_coords()
        && g.edges().iter().all(|e| {
            let (p, q) = (g.coord(e.u()).unwrap(), g.coord(e.v()).unwrap());
            (p.0 + p.1 - q.0 - q.1).rem_euclid(2) == 1
        })
}

/// `10m - 1 + sat` for the L-variant, `11m - 1 - sat` for the ell-variant.
pub fn expected_residual(variant: Variant, m: usize, sat: usize) -> usize {
    match variant {
        Variant::BigL => 10 * m - 1 + sat,
        Variant::Ell => 11 * m - 1 - sat,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AssignmentRow {
    pub assignment: Assignment,
    pub sat: usize,
    pub residual: usize,
    pub expected: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Structure {
    pub vertices: usize,
    pub edges: usize,
    pub expected_vertices: usize,
    pub expected_edges: usize,
    pub stated_edges: usize,
    pub figure_literal_edges: usize,
    pub max_degree: usize,
    pub expected_max_degree: usize,
    pub bipartite: bool,
    pub connected: bool,
    pub nu: usize,
    pub perfect: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct EnumerationCheck {
    pub maximum_matchings: usize,
    pub expected: u64,
    pub truncated: bool,
    pub all_decode: bool,
    pub ell: Option<usize>,
    pub big_l: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub variant: Variant,
    pub m: usize,
    pub n: usize,
    pub edge_rule: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub join_rule: Option<&'static str>,
    pub structure: Structure,
    /// `None` when `n` exceeds the exhaustive limit.
    pub rows: Option<Vec<AssignmentRow>>,
    pub max_sat: Option<usize>,
    /// Residual extreme that tracks `max_sat`: `L` for the L-variant,
    /// `ell` for the ell-variant, taken over the encoded assignments.
    pub extreme_residual: Option<usize>,
    /// L-variant only: `L(G) = 11m - 1` exactly when the formula is satisfiable.
    pub k_param: Option<usize>,
    pub satisfiable: Option<bool>,
    pub enumeration: Option<EnumerationCheck>,
    pub discrepancies: Vec<String>,
}

impl Certificate {
    pub fn ok(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub exhaustive_vars: usize,
    /// Also enumerate every maximum matching of the graph (up to `cap`).
    pub enumerate: bool,
    pub cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { exhaustive_vars: DEFAULT_EXHAUSTIVE_VARS, enumerate: false, cap: crate::spectrum::DEFAULT_CAP }
    }
}

pub fn verify_artifact(a: &ReductionArtifact, opts: VerifyOptions) -> Result<Certificate> {
    let g = &a.graph;
    let (m, n) = (a.m(), a.n());
    let exp = expected_counts(a.variant, m);
    let mut issues = Vec::new();

    let profile = g.degree_profile();
    let graph_nu = nu(g);
    let structure = Structure {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        expected_vertices: exp.vertices,
        expected_edges: exp.edges,
        stated_edges: exp.stated_edges,
        figure_literal_edges: exp.figure_literal_edges,
        max_degree: profile.max_degree,
        expected_max_degree: exp.max_degree,
        bipartite: parity_bipartite(g),
        connected: g.is_connected(),
        nu: graph_nu,
        perfect: 2 * graph_nu == g.vertex_count(),
    };
    if structure.vertices != structure.expected_vertices {
        issues.push(format!("vertex count {} != {}", structure.vertices, structure.expected_vertices));
    }
    if structure.edges != structure.expected_edges {
        issues.push(format!("edge count {} != {}", structure.edges, structure.expected_edges));
    }
    if structure.max_degree != structure.expected_max_degree {
        issues.push(format!("max degree {} != {}", structure.max_degree, structure.expected_max_degree));
    }
    if !structure.bipartite {
        issues.push("some edge joins two vertices with the same x+y parity".into());
    }
    if !structure.connected {
        issues.push("graph is not connected".into());
    }
    if !structure.perfect {
        issues.push(format!("no perfect matching (nu = {graph_nu})"));
    }

    let mut cert = Certificate {
        variant: a.variant,
        m,
        n,
        edge_rule: super::construct::EDGE_RULE,
        join_rule: (a.variant == Variant::Ell).then_some(super::construct::ELL_JOIN_RULE),
        structure,
        rows: None,
        max_sat: None,
        extreme_residual: None,
        k_param: exp.k_param,
        satisfiable: None,
        enumeration: None,
        discrepancies: Vec::new(),
    };

    let missing = missing_encoding_edges(a);
    for e in &missing {
        issues.push(format!("edge {e} used by the assignment encoding is missing"));
    }

    if n <= opts.exhaustive_vars && missing.is_empty() {
        let rows: Vec<AssignmentRow> = (0..1u64 << n)
            .into_par_iter()
            .map(|bits| {
                let alpha = Assignment::from_bits(n, bits);
                let f = encode_assignment(a, &alpha)?;
                let sat = a.cnf.sat_count(&alpha)?;
                let residual = residual_nu(g, &f);
                Ok(AssignmentRow { assignment: alpha, sat, residual, expected: expected_residual(a.variant, m, sat) })
            })
            .collect::<Result<_>>()?;
        for r in &rows {
            if r.residual != r.expected {
                issues.push(format!("assignment {}: residual {} != {}", r.assignment, r.residual, r.expected));
            }
            let f = encode_assignment(a, &r.assignment)?;
            match decode_matching(a, &f) {
                Ok(back) if back == r.assignment => {}
                _ => issues.push(format!("assignment {} does not survive encode/decode", r.assignment)),
            }
        }
        let max_sat = rows.iter().map(|r| r.sat).max().unwrap_or(0);
        let extreme = match a.variant {
            Variant::BigL => rows.iter().map(|r| r.residual).max(),
            Variant::Ell => rows.iter().map(|r| r.residual).min(),
        };
        cert.satisfiable = Some(max_sat == m);
        cert.max_sat = Some(max_sat);
        cert.extreme_residual = extreme;
        cert.rows = Some(rows);
    }

    if opts.enumerate {
        let mut it = enumerate_maximum_matchings(g, opts.cap);
        let mut count = 0usize;
        let mut all_decode = true;
        let (mut lo, mut hi) = (usize::MAX, 0usize);
        for f in it.by_ref() {
            count += 1;
            if decode_matching(a, &f).is_err() {
                all_decode = false;
            }
            let r = residual_nu(g, &f);
            lo = lo.min(r);
            hi = hi.max(r);
        }
        let check = EnumerationCheck {
            maximum_matchings: count,
            expected: 1u64 << n,
            truncated: it.truncated(),
            all_decode,
            ell: (count > 0).then_some(lo),
            big_l: (count > 0).then_some(hi),
        };
        if check.truncated {
            issues.push(format!("enumeration truncated at {}", opts.cap));
        } else if check.maximum_matchings as u64 != check.expected {
            issues.push(format!("{} maximum matchings, expected 2^{n}", check.maximum_matchings));
        }
        if !check.all_decode {
            issues.push("some maximum matching does not decode to an assignment".into());
        }
        if let Some(rows) = &cert.rows {
            if !check.truncated {
                let lo_rows = rows.iter().map(|r| r.residual).min();
                let hi_rows = rows.iter().map(|r| r.residual).max();
                if check.ell != lo_rows || check.big_l != hi_rows {
                    issues.push("enumerated spectrum disagrees with encoded assignments".into());
                }
            }
        }
        cert.enumeration = Some(check);
    }

    cert.discrepancies = issues;
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduction::cnf::CnfInstance;
    use crate::reduction::construct::build_artifact;

    #[test]
    fn single_clause_both_variants() {
        let cnf = CnfInstance::from_signed(3, &[[1, 2, 3]]).unwrap();
        for variant in [Variant::BigL, Variant::Ell] {
            let a = build_artifact(&cnf, variant);
            let cert = verify_artifact(&a, VerifyOptions { enumerate: true, ..Default::default() }).unwrap();
            assert!(cert.ok(), "{variant}: {:?}", cert.discrepancies);
        }
    }

    #[test]
    fn decode_rejects_mixed_cycle() {
        let cnf = CnfInstance::from_signed(3, &[[1, 2, 3]]).unwrap();
        let a = build_artifact(&cnf, Variant::BigL);
        assert!(decode_matching(&a, &Matching::new_unchecked(a.graph.vertex_count(), [])).is_err());
        let alpha = Assignment::new(vec![true, false, true]);
        let f = encode_assignment(&a, &alpha).unwrap();
        assert_eq!(decode_matching(&a, &f).unwrap(), alpha);
        assert!(encode_assignment(&a, &Assignment::new(vec![true])).is_err());
    }
}
