//! Congruences, quotient racks and the operator-equivalence quotient.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::props;
use crate::rack::RackTable;

/// A partition of `{1..n}`; classes are sorted internally and ordered by
/// least member.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    classes: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(n: usize, classes: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut classes: Vec<Vec<usize>> = classes
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        for class in &classes {
            if class.is_empty() {
                return Err(Error::InvalidPartition("empty class".into()));
            }
            for &x in class {
                if !(1..=n).contains(&x) {
                    return Err(Error::InvalidPartition(format!("{x} outside 1..={n}")));
                }
                if std::mem::replace(&mut seen[x - 1], true) {
                    return Err(Error::InvalidPartition(format!("{x} appears twice")));
                }
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!(
                "{} is not covered",
                missing + 1
            )));
        }
        classes.sort_unstable_by_key(|c| c[0]);
        Ok(Partition { classes })
    }

    pub fn discrete(n: usize) -> Self {
        Partition {
            classes: (1..=n).map(|x| vec![x]).collect(),
        }
    }

    /// Builds the partition from integer keys (0-based element index → key).
    pub(crate) fn from_keys<K: Eq>(keys: &[K]) -> Self {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut reps: Vec<usize> = Vec::new();
        for (x, key) in keys.iter().enumerate() {
            match reps.iter().position(|&r| keys[r] == *key) {
                Some(i) => classes[i].push(x + 1),
                None => {
                    reps.push(x);
                    classes.push(vec![x + 1]);
                }
            }
        }
        Partition { classes }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn size(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }

    /// Class index (0-based) of each 0-based element.
    fn class_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.size()];
        for (i, class) in self.classes.iter().enumerate() {
            for &x in class {
                out[x - 1] = i;
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .classes
            .iter()
            .map(|c| {
                let labels: Vec<String> = c.iter().map(usize::to_string).collect();
                format!("{{{}}}", labels.join(","))
            })
            .collect();
        f.write_str(&parts.join(","))
    }
}

/// Parses `{1},{2},{3},{4,5}`. The element count is taken from the classes.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut classes = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('{')
                .ok_or_else(|| Error::InvalidPartition(format!("expected '{{' in {text:?}")))?;
            let close = body
                .find('}')
                .ok_or_else(|| Error::InvalidPartition(format!("unclosed class in {text:?}")))?;
            let class = body[..close]
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::InvalidPartition(format!("bad element {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            classes.push(class);
            rest = body[close + 1..].trim_start();
            rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
        }
        let n = classes.iter().map(Vec::len).sum();
        Partition::new(n, classes)
    }
}

/// Checks that `partition` is a congruence of `t`, returning a witness
/// `(x, x', y, y')` on failure.
pub fn check_congruence(t: &RackTable, partition: &Partition) -> Result<()> {
    let class = partition.class_of();
    let n = t.size();
    let witness = |x: usize, xp: usize, y: usize, yp: usize| Error::NotACongruence {
        x: x + 1,
        x_prime: xp + 1,
        y: y + 1,
        y_prime: yp + 1,
        xy: t.act(x, y) + 1,
        xy_prime: t.act(xp, yp) + 1,
    };
    // Left and right compatibility separately imply the joint condition.
    for x in 0..n {
        for xp in 0..n {
            if x == xp || class[x] != class[xp] {
                continue;
            }
            for y in 0..n {
                if class[t.act(x, y)] != class[t.act(xp, y)] {
                    return Err(witness(x, xp, y, y));
                }
            }
        }
    }
    for y in 0..n {
        for yp in 0..n {
            if y == yp || class[y] != class[yp] {
                continue;
            }
            for x in 0..n {
                if class[t.act(x, y)] != class[t.act(x, yp)] {
                    return Err(witness(x, x, y, yp));
                }
            }
        }
    }
    Ok(())
}

/// The quotient rack `X/∼` with `[x]▷[y] = [x▷y]`, classes numbered by
/// least member.
pub fn quotient_by(t: &RackTable, partition: &Partition) -> Result<RackTable> {
    props::ensure_rack(t)?;
    if partition.size() != t.size() {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} elements, table has {}",
            partition.size(),
            t.size()
        )));
    }
    check_congruence(t, partition)?;
    let class = partition.class_of();
    let reps: Vec<usize> = partition.classes().iter().map(|c| c[0] - 1).collect();
    Ok(RackTable::from_fn(reps.len(), |a, b| {
        class[t.act(reps[a], reps[b])]
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorQuotient {
    pub partition: Partition,
    pub quotient: RackTable,
    pub is_quandle: bool,
}

/// Groups elements acting identically (`z▷x = z▷y` for all `z`), checks the
/// grouping is a congruence and reports whether the quotient is a quandle.
pub fn operator_equivalence_quotient(t: &RackTable) -> Result<OperatorQuotient> {
    props::ensure_rack(t)?;
    let n = t.size();
    let columns: Vec<Vec<usize>> = (0..n)
        .map(|y| (0..n).map(|z| t.act(z, y)).collect())
        .collect();
    let partition = Partition::from_keys(&columns);
    let quotient = quotient_by(t, &partition)?;
    let is_quandle = (1..=quotient.size()).all(|x| quotient.op(x, x) == x);
    Ok(OperatorQuotient {
        partition,
        quotient,
        is_quandle,
    })
}
