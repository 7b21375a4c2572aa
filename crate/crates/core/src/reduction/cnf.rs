//! Exact-3SAT instances and truth assignments.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub variable: usize,
    pub positive: bool,
}

impl Literal {
    pub fn from_dimacs(x: i64) -> Self {
        Literal { variable: x.unsigned_abs() as usize, positive: x > 0 }
    }

    pub fn to_dimacs(self) -> i64 {
        let v = self.variable as i64;
        if self.positive {
            v
        } else {
            -v
        }
    }
}

/// A formula with exactly three literals on three distinct variables per
/// clause, where every variable `1..=num_vars` occurs somewhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfInstance {
    num_vars: usize,
    clauses: Vec<[Literal; 3]>,
}

impl CnfInstance {
    pub fn new(num_vars: usize, clauses: Vec<[Literal; 3]>) -> Result<Self> {
        if num_vars == 0 {
            return Err(Error::Dimacs("at least one variable is required".into()));
        }
        let mut used = vec![false; num_vars + 1];
        for (j, clause) in clauses.iter().enumerate() {
            let index = j + 1;
            for (t, lit) in clause.iter().enumerate() {
                if lit.variable == 0 || lit.variable > num_vars {
                    return Err(Error::Clause { clause: index, message: format!("variable {} out of range 1..={num_vars}", lit.variable) });
                }
                if clause[..t].iter().any(|l| l.variable == lit.variable) {
                    return Err(Error::Clause { clause: index, message: format!("repeated variable {}", lit.variable) });
                }
                used[lit.variable] = true;
            }
        }
        if let Some(v) = (1..=num_vars).find(|&v| !used[v]) {
            return Err(Error::Dimacs(format!("variable {v} occurs in no clause")));
        }
        Ok(CnfInstance { num_vars, clauses })
    }

    /// Convenience constructor from DIMACS-style signed integers.
    pub fn from_signed(num_vars: usize, clauses: &[[i64; 3]]) -> Result<Self> {
        Self::new(num_vars, clauses.iter().map(|c| c.map(Literal::from_dimacs)).collect())
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    /// Clause indices (1-based) that mention `variable`, ascending.
    pub fn occurrences(&self, variable: usize) -> Vec<usize> {
        self.clauses.iter().enumerate().filter(|(_, c)| c.iter().any(|l| l.variable == variable)).map(|(j, _)| j + 1).collect()
    }

    /// Number of clauses satisfied by `alpha`.
    pub fn sat_count(&self, alpha: &Assignment) -> Result<usize> {
        self.check_total(alpha)?;
        Ok(self.clauses.iter().filter(|c| c.iter().any(|l| alpha.value(l.variable) == l.positive)).count())
    }

    pub fn check_total(&self, alpha: &Assignment) -> Result<()> {
        if alpha.len() != self.num_vars {
            return Err(Error::PartialAssignment { given: alpha.len(), expected: self.num_vars });
        }
        Ok(())
    }

    /// Largest `sat_count` over all assignments, by enumeration.
    pub fn max_sat(&self) -> usize {
        Assignment::all(self.num_vars).map(|a| self.sat_count(&a).expect("total")).max().unwrap_or(0)
    }

    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            s.push_str(&format!("{} {} {} 0\n", c[0].to_dimacs(), c[1].to_dimacs(), c[2].to_dimacs()));
        }
        s
    }
}

/// Parses DIMACS CNF, enforcing the exact-3SAT shape.
pub fn parse_dimacs(text: &str) -> Result<CnfInstance> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<[Literal; 3]> = Vec::new();
    let mut current: Vec<i64> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        if line.starts_with('p') {
            let f: Vec<&str> = line.split_whitespace().collect();
            if header.is_some() || f.len() != 4 || f[0] != "p" || f[1] != "cnf" {
                return Err(Error::Dimacs(format!("line {}: malformed header {line:?}", idx + 1)));
            }
            let n = f[2].parse().map_err(|_| Error::Dimacs(format!("line {}: bad variable count", idx + 1)))?;
            let m = f[3].parse().map_err(|_| Error::Dimacs(format!("line {}: bad clause count", idx + 1)))?;
            header = Some((n, m));
            continue;
        }
        let Some((n, _)) = header else {
            return Err(Error::Dimacs(format!("line {}: clause before \"p cnf\" header", idx + 1)));
        };
        for tok in line.split_whitespace() {
            let x: i64 = tok.parse().map_err(|_| Error::Dimacs(format!("line {}: bad literal {tok:?}", idx + 1)))?;
            if x == 0 {
                let index = clauses.len() + 1;
                clauses.push(finish_clause(&current, index, n)?);
                current.clear();
            } else {
                current.push(x);
            }
        }
    }
    let (n, m) = header.ok_or_else(|| Error::Dimacs("missing \"p cnf\" header".into()))?;
    if !current.is_empty() {
        return Err(Error::Clause { clause: clauses.len() + 1, message: "missing terminating 0".into() });
    }
    if clauses.len() != m {
        return Err(Error::Dimacs(format!("header declares {m} clauses, found {}", clauses.len())));
    }
    CnfInstance::new(n, clauses)
}

fn finish_clause(lits: &[i64], index: usize, n: usize) -> Result<[Literal; 3]> {
    if lits.len() != 3 {
        return Err(Error::Clause { clause: index, message: format!("has {} literals, expected exactly 3", lits.len()) });
    }
    for (t, &x) in lits.iter().enumerate() {
        if x.unsigned_abs() as usize > n {
            return Err(Error::Clause { clause: index, message: format!("variable {} out of range 1..={n}", x.abs()) });
        }
        if lits[..t].iter().any(|y| y.abs() == x.abs()) {
            return Err(Error::Clause { clause: index, message: format!("repeated variable {}", x.abs()) });
        }
    }
    Ok([Literal::from_dimacs(lits[0]), Literal::from_dimacs(lits[1]), Literal::from_dimacs(lits[2])])
}

/// Total truth assignment; variable `i` lives at position `i - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assignment {
    values: Vec<bool>,
}

impl Assignment {
    pub fn new(values: Vec<bool>) -> Self {
        Assignment { values }
    }

    /// Assignment whose variable `i` is bit `i - 1` of `bits`.
    pub fn from_bits(n: usize, bits: u64) -> Self {
        Assignment { values: (0..n).map(|i| bits >> i & 1 == 1).collect() }
    }

    /// All `2^n` assignments in `from_bits` order.
    pub fn all(n: usize) -> impl Iterator<Item = Assignment> {
        assert!(n < 64);
        (0..1u64 << n).map(move |b| Assignment::from_bits(n, b))
    }

    pub fn value(&self, variable: usize) -> bool {
        self.values[variable - 1]
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// `T`/`F` per variable, e.g. `TFT`.
impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &v in &self.values {
            f.write_str(if v { "T" } else { "F" })?;
        }
        Ok(())
    }
}

impl Serialize for Assignment {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
