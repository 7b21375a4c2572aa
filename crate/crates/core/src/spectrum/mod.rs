//! Exact residual spectrum `{ nu(G \ F) : F a maximum matching of G }`,
//! its extremes `ell(G)` and `L(G)`, and the checks built on top of them.

mod enumerate;
mod tolerance;

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::{max_matching, nu, Matching};
use crate::rational::{ratio, serde_rational, Rational};

pub use enumerate::{enumerate_maximum_matchings, MaximumMatchings};
pub use tolerance::{ToleranceFunction, ToleranceKind};

pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub nu: usize,
    pub ell: usize,
    #[serde(rename = "L")]
    pub big_l: usize,
    pub achieved: BTreeSet<usize>,
    pub witness_min: Matching,
    pub witness_max: Matching,
    pub matchings_enumerated: usize,
    pub truncated: bool,
}

/// `nu(g \ f)`; `f` must be a set of edges of `g`.
pub fn residual_nu(g: &Graph, f: &Matching) -> usize {
    nu(&g.delete_edges(f.edges()).expect("matching edges belong to the graph"))
}

/// Enumerates maximum matchings (up to `cap`) and records every residual
/// value. Exact whenever `truncated` is false.
pub fn spectrum(g: &Graph, cap: usize) -> Result<SpectrumReport> {
    if cap == 0 {
        return Err(Error::ZeroCap);
    }
    let mut it = enumerate_maximum_matchings(g, cap);
    let mut achieved = BTreeSet::new();
    let mut min: Option<(usize, Matching)> = None;
    let mut max: Option<(usize, Matching)> = None;
    for f in it.by_ref() {
        let r = residual_nu(g, &f);
        achieved.insert(r);
        if min.as_ref().is_none_or(|(v, _)| r < *v) {
            min = Some((r, f.clone()));
        }
        if max.as_ref().is_none_or(|(v, _)| r > *v) {
            max = Some((r, f));
        }
    }
    let (ell, witness_min) = min.expect("every graph has a maximum matching");
    let (big_l, witness_max) = max.expect("every graph has a maximum matching");
    Ok(SpectrumReport {
        nu: it.nu(),
        ell,
        big_l,
        achieved,
        witness_min,
        witness_max,
        matchings_enumerated: it.count_yielded(),
        truncated: it.truncated(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Problem1Outcome {
    pub answer: Answer,
    pub witness: Option<Matching>,
    pub residual: Option<usize>,
    pub matchings_enumerated: usize,
}

/// Is there a maximum matching `F` with `|nu(g \ F) - k| <= f(|V|)`?
///
/// For the identity tolerance every instance is a yes-instance (both terms
/// are at most `|V|/2`), so the answer is returned with a single maximum
/// matching as witness and no enumeration.
pub fn decide_problem1(g: &Graph, k: i64, f: &ToleranceFunction, cap: usize) -> Result<Problem1Outcome> {
    let max_k = g.vertex_count() / 2;
    if k < 0 || k as u64 > max_k as u64 {
        return Err(Error::KOutOfRange { k, max: max_k });
    }
    if cap == 0 {
        return Err(Error::ZeroCap);
    }
    let n = g.vertex_count() as u64;
    if f.kind() == ToleranceKind::Identity {
        let w = max_matching(g, crate::matching::DEFAULT_SEED);
        return Ok(Problem1Outcome { answer: Answer::Yes, witness: Some(w), residual: None, matchings_enumerated: 0 });
    }
    let mut it = enumerate_maximum_matchings(g, cap);
    for m in it.by_ref() {
        let r = residual_nu(g, &m);
        if f.admits(n, r.abs_diff(k as usize) as u64) {
            return Ok(Problem1Outcome {
                answer: Answer::Yes,
                witness: Some(m),
                residual: Some(r),
                matchings_enumerated: it.count_yielded(),
            });
        }
    }
    let answer = if it.truncated() { Answer::Unknown } else { Answer::No };
    Ok(Problem1Outcome { answer, witness: None, residual: None, matchings_enumerated: it.count_yielded() })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub ell: usize,
    #[serde(rename = "L")]
    pub big_l: usize,
    pub has_perfect_matching: bool,
    pub ell_le_l: bool,
    pub l_le_two_ell: bool,
    /// `2L <= 3 ell`; only checked when a perfect matching exists.
    pub three_halves: Option<bool>,
    pub violations: Vec<String>,
}

impl BoundReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `ell <= L <= 2 ell`, and `2L <= 3 ell` when `g` has a perfect
/// matching. These are theorems, so any violation indicates a bug.
pub fn check_bounds(g: &Graph, cap: usize) -> Result<BoundReport> {
    let s = spectrum(g, cap)?;
    if s.truncated {
        return Err(Error::Truncated { cap });
    }
    Ok(bounds_from_spectrum(g, &s))
}

pub fn bounds_from_spectrum(g: &Graph, s: &SpectrumReport) -> BoundReport {
    let has_perfect_matching = 2 * s.nu == g.vertex_count();
    let ell_le_l = s.ell <= s.big_l;
    let l_le_two_ell = s.big_l <= 2 * s.ell;
    let three_halves = has_perfect_matching.then_some(2 * s.big_l <= 3 * s.ell);
    let mut violations = Vec::new();
    if !ell_le_l {
        violations.push(format!("ell = {} > L = {}", s.ell, s.big_l));
    }
    if !l_le_two_ell {
        violations.push(format!("L = {} > 2 ell = {}", s.big_l, 2 * s.ell));
    }
    if three_halves == Some(false) {
        violations.push(format!("perfect matching exists but 2L = {} > 3 ell = {}", 2 * s.big_l, 3 * s.ell));
    }
    BoundReport { ell: s.ell, big_l: s.big_l, has_perfect_matching, ell_le_l, l_le_two_ell, three_halves, violations }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Trial {
    pub seed: u64,
    pub residual: usize,
    /// `nu(g \ F) / ell(g)`; absent when `ell = 0`.
    #[serde(with = "serde_rational::option")]
    pub ratio_ell: Option<Rational>,
    /// `nu(g \ F) / L(g)`; absent when `L = 0`.
    #[serde(with = "serde_rational::option", rename = "ratio_L")]
    pub ratio_big_l: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ApproxReport {
    pub ell: usize,
    #[serde(rename = "L")]
    pub big_l: usize,
    pub trials: Vec<Trial>,
    pub violations: Vec<String>,
}

impl ApproxReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Runs the seeded maximum-matching algorithm once per seed and measures how
/// far each result is from the extremes. Expected: `1 <= r_ell <= 2` and
/// `1/2 <= r_L <= 1`.
pub fn approx_trial(g: &Graph, seeds: &[u64], cap: usize) -> Result<ApproxReport> {
    let s = spectrum(g, cap)?;
    if s.truncated {
        return Err(Error::Truncated { cap });
    }
    Ok(approx_from_spectrum(g, &s, seeds))
}

pub fn approx_from_spectrum(g: &Graph, s: &SpectrumReport, seeds: &[u64]) -> ApproxReport {
    let one = ratio(1, 1);
    let two = ratio(2, 1);
    let half = ratio(1, 2);
    let mut trials = Vec::with_capacity(seeds.len());
    let mut violations = Vec::new();
    for &seed in seeds {
        let f = max_matching(g, seed);
        let residual = residual_nu(g, &f);
        let ratio_ell = (s.ell > 0).then(|| ratio(residual as i64, s.ell as i64));
        let ratio_big_l = (s.big_l > 0).then(|| ratio(residual as i64, s.big_l as i64));
        if let Some(r) = &ratio_ell {
            if *r < one || *r > two {
                violations.push(format!("seed {seed}: r_ell = {r} outside [1, 2]"));
            }
        }
        if let Some(r) = &ratio_big_l {
            if *r < half || *r > one {
                violations.push(format!("seed {seed}: r_L = {r} outside [1/2, 1]"));
            }
        }
        if !s.achieved.contains(&residual) {
            violations.push(format!("seed {seed}: residual {residual} not in the enumerated spectrum"));
        }
        trials.push(Trial { seed, residual, ratio_ell, ratio_big_l });
    }
    ApproxReport { ell: s.ell, big_l: s.big_l, trials, violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::Edge;
    use crate::matching::validate_matching;
    use crate::rational::int;

    #[test]
    fn p5_spectrum() {
        let s = spectrum(&fixtures::path(5), DEFAULT_CAP).unwrap();
        assert_eq!((s.nu, s.ell, s.big_l), (2, 1, 2));
        assert_eq!(s.achieved, BTreeSet::from([1, 2]));
        assert_eq!(s.matchings_enumerated, 3);
        assert!(!s.truncated);
        let g = fixtures::path(5);
        for w in [&s.witness_min, &s.witness_max] {
            assert!(validate_matching(&g, w).maximum);
        }
        assert_eq!(residual_nu(&g, &s.witness_min), 1);
        assert_eq!(residual_nu(&g, &s.witness_max), 2);
    }

    #[test]
    fn figure_one_and_single_edge() {
        let s = spectrum(&fixtures::twin_spider(), DEFAULT_CAP).unwrap();
        assert_eq!((s.nu, s.ell, s.big_l, s.matchings_enumerated), (5, 2, 2, 1));
        let s = spectrum(&fixtures::path(2), DEFAULT_CAP).unwrap();
        assert_eq!((s.ell, s.big_l), (0, 0));
        let s = spectrum(&Graph::new(3, Vec::<Edge>::new()).unwrap(), 5).unwrap();
        assert_eq!(s.achieved, BTreeSet::from([0]));
    }

    #[test]
    fn problem1_on_p5() {
        let g = fixtures::path(5);
        let zero = ToleranceFunction::constant(int(0)).unwrap();
        let yes = decide_problem1(&g, 2, &zero, DEFAULT_CAP).unwrap();
        assert_eq!(yes.answer, Answer::Yes);
        assert_eq!(residual_nu(&g, yes.witness.as_ref().unwrap()), 2);
        let no = decide_problem1(&g, 0, &zero, DEFAULT_CAP).unwrap();
        assert_eq!(no.answer, Answer::No);
        let id = decide_problem1(&g, 0, &ToleranceFunction::identity(), DEFAULT_CAP).unwrap();
        assert_eq!((id.answer, id.matchings_enumerated), (Answer::Yes, 0));
        assert!(matches!(decide_problem1(&g, 3, &zero, 10), Err(Error::KOutOfRange { k: 3, max: 2 })));
        assert!(decide_problem1(&g, -1, &zero, 10).is_err());
    }

    #[test]
    fn problem1_unknown_on_truncation() {
        // K6: every maximum matching is perfect and leaves K6 minus a
        // perfect matching, whose matching number is 3
        let g = fixtures::complete(6);
        let zero = ToleranceFunction::constant(int(0)).unwrap();
        assert_eq!(decide_problem1(&g, 0, &zero, 2).unwrap().answer, Answer::Unknown);
        assert_eq!(decide_problem1(&g, 0, &zero, DEFAULT_CAP).unwrap().answer, Answer::No);
    }

    #[test]
    fn bounds_examples() {
        let b = check_bounds(&fixtures::path(5), DEFAULT_CAP).unwrap();
        assert!(b.holds() && b.l_le_two_ell && b.big_l == 2 * b.ell);
        assert_eq!(b.three_halves, None);
        let b = check_bounds(&fixtures::cycle(4), DEFAULT_CAP).unwrap();
        assert_eq!((b.ell, b.big_l, b.three_halves), (2, 2, Some(true)));
        assert!(matches!(check_bounds(&fixtures::complete(6), 3), Err(Error::Truncated { cap: 3 })));
    }

    #[test]
    fn approx_examples() {
        let r = approx_trial(&fixtures::path(5), &(1..=10).collect::<Vec<_>>(), DEFAULT_CAP).unwrap();
        assert!(r.holds());
        for t in &r.trials {
            let re = t.ratio_ell.clone().unwrap();
            assert!(re == int(1) || re == int(2));
        }
        let r = approx_trial(&fixtures::twin_spider(), &[0, 1, 2], DEFAULT_CAP).unwrap();
        assert!(r.trials.iter().all(|t| t.ratio_ell == Some(int(1)) && t.ratio_big_l == Some(int(1))));
        let r = approx_trial(&fixtures::path(2), &[0], DEFAULT_CAP).unwrap();
        assert_eq!((r.trials[0].ratio_ell.clone(), r.trials[0].ratio_big_l.clone()), (None, None));
    }

    #[test]
    fn json_shape() {
        let s = spectrum(&fixtures::path(5), DEFAULT_CAP).unwrap();
        let v = serde_json::to_value(&s).unwrap();
        assert_eq!(v["L"], 2);
        assert_eq!(v["ell"], 1);
        assert_eq!(v["achieved"], serde_json::json!([1, 2]));
        assert!(v["witness_min"][0].is_array());
    }
}
