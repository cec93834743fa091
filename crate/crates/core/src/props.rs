//! Axiom validation and structural predicates.

use std::fmt;

use crate::error::{Error, Result};
use crate::rack::RackTable;

/// A concrete failure of one rack axiom, in 1-based labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    /// Axiom (i): rows `first` and `second` of `column` share the image `image`.
    ColumnNotBijective {
        column: usize,
        first: usize,
        second: usize,
        image: usize,
    },
    /// Axiom (ii): `(x▷y)▷z ≠ (x▷z)▷(y▷z)`.
    NotDistributive { x: usize, y: usize, z: usize },
}

impl AxiomViolation {
    /// Re-checks the witness against `table`.
    pub fn holds_in(&self, table: &RackTable) -> bool {
        match *self {
            AxiomViolation::ColumnNotBijective {
                column,
                first,
                second,
                image,
            } => {
                first != second
                    && table.op(first, column) == image
                    && table.op(second, column) == image
            }
            AxiomViolation::NotDistributive { x, y, z } => {
                table.op(table.op(x, y), z) != table.op(table.op(x, z), table.op(y, z))
            }
        }
    }
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::ColumnNotBijective {
                column,
                first,
                second,
                image,
            } => write!(
                f,
                "column {column} is not a bijection: {first}>{column} = {second}>{column} = {image}"
            ),
            AxiomViolation::NotDistributive { x, y, z } => write!(
                f,
                "distributivity fails at ({x},{y},{z}): ({x}>{y})>{z} != ({x}>{z})>({y}>{z})"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub is_rack: bool,
    pub is_quandle: bool,
    pub is_crossed_set: bool,
    pub is_abelian: bool,
    pub is_latin: bool,
    pub axiom_violations: Vec<AxiomViolation>,
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rack: {}", self.is_rack)?;
        writeln!(f, "quandle: {}", self.is_quandle)?;
        writeln!(f, "crossed_set: {}", self.is_crossed_set)?;
        writeln!(f, "abelian: {}", self.is_abelian)?;
        writeln!(f, "latin: {}", self.is_latin)?;
        for v in &self.axiom_violations {
            writeln!(f, "violation: {v}")?;
        }
        Ok(())
    }
}

fn column_violations(t: &RackTable) -> Vec<AxiomViolation> {
    let n = t.size();
    let mut out = Vec::new();
    for y in 0..n {
        let mut preimage = vec![None; n];
        for x in 0..n {
            let v = t.act(x, y);
            match preimage[v] {
                Some(first) => {
                    out.push(AxiomViolation::ColumnNotBijective {
                        column: y + 1,
                        first: first + 1,
                        second: x + 1,
                        image: v + 1,
                    });
                    break;
                }
                None => preimage[v] = Some(x),
            }
        }
    }
    out
}

fn distributivity_violations(t: &RackTable) -> Vec<AxiomViolation> {
    let n = t.size();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let xy = t.act(x, y);
            for z in 0..n {
                if t.act(xy, z) != t.act(t.act(x, z), t.act(y, z)) {
                    out.push(AxiomViolation::NotDistributive {
                        x: x + 1,
                        y: y + 1,
                        z: z + 1,
                    });
                }
            }
        }
    }
    out
}

fn is_quandle_table(t: &RackTable) -> bool {
    (0..t.size()).all(|x| t.act(x, x) == x)
}

fn is_crossed(t: &RackTable) -> bool {
    let n = t.size();
    (0..n).all(|x| (0..n).all(|y| (t.act(x, y) == x) == (t.act(y, x) == y)))
}

fn is_abelian(t: &RackTable) -> bool {
    let n = t.size();
    for x in 0..n {
        for y in 0..n {
            let xy = t.act(x, y);
            for z in 0..n {
                let xz = t.act(x, z);
                for w in 0..n {
                    if t.act(xy, t.act(z, w)) != t.act(xz, t.act(y, w)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn is_latin(t: &RackTable) -> bool {
    let n = t.size();
    (0..n).all(|x| {
        let mut seen = vec![false; n];
        (0..n).all(|y| !std::mem::replace(&mut seen[t.act(x, y)], true))
    })
}

/// Checks every axiom and predicate directly from its quantified definition.
/// Never fails; the report carries any axiom violations.
pub fn validate_rack(t: &RackTable) -> PropertyReport {
    let mut violations = column_violations(t);
    violations.extend(distributivity_violations(t));
    let is_rack = violations.is_empty();
    let is_quandle = is_rack && is_quandle_table(t);
    PropertyReport {
        is_rack,
        is_quandle,
        is_crossed_set: is_quandle && is_crossed(t),
        is_abelian: is_rack && is_abelian(t),
        is_latin: is_rack && is_latin(t),
        axiom_violations: violations,
    }
}

/// The property report of a table that must already be a rack.
pub fn properties_report(t: &RackTable) -> Result<PropertyReport> {
    let report = validate_rack(t);
    if !report.is_rack {
        return Err(not_a_rack(&report));
    }
    Ok(report)
}

fn not_a_rack(report: &PropertyReport) -> Error {
    let first = &report.axiom_violations[0];
    let more = report.axiom_violations.len() - 1;
    if more == 0 {
        Error::NotARack(first.to_string())
    } else {
        Error::NotARack(format!("{first} (and {more} more)"))
    }
}

/// Cheap rack check that skips the extra predicates.
pub(crate) fn ensure_rack(t: &RackTable) -> Result<()> {
    let mut violations = column_violations(t);
    if violations.is_empty() {
        violations = distributivity_violations(t);
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(not_a_rack(&PropertyReport {
            is_rack: false,
            is_quandle: false,
            is_crossed_set: false,
            is_abelian: false,
            is_latin: false,
            axiom_violations: violations,
        }))
    }
}

/// Whether `p ▷ q = p`, the relation used to probe `(1−t)`-equivalence.
pub fn fixes(t: &RackTable, p: usize, q: usize) -> bool {
    t.op(p, q) == p
}
