//! The rack matrix: an `n×n` operation table over `{1..n}`.
//!
//! Row `i`, column `j` holds `k` when `x_i ▷ x_j = x_k`. Column `j` is the
//! right action of `x_j`, so axiom (i) asks every column to be a bijection.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::props;

/// A finite binary operation table. Construction checks shape and range
/// only; use [`props::validate_rack`] for the rack axioms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RackTable {
    n: usize,
    // Row-major, 0-based: entries[x * n + y] = x ▷ y.
    entries: Vec<usize>,
}

impl RackTable {
    /// Builds a table from 1-based rows.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::WrongRowLength {
                    line: i + 1,
                    expected: n,
                    found: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if !(1..=n).contains(&v) {
                    return Err(Error::EntryOutOfRange {
                        row: i + 1,
                        column: j + 1,
                        value: v as i64,
                        n,
                    });
                }
                entries.push(v - 1);
            }
        }
        Ok(RackTable { n, entries })
    }

    /// Builds a table from a 0-based operation.
    pub(crate) fn from_fn(n: usize, op: impl Fn(usize, usize) -> usize) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let v = op(x, y);
                debug_assert!(v < n);
                entries.push(v);
            }
        }
        RackTable { n, entries }
    }

    /// The trivial quandle of order `n`: `x ▷ y = x`.
    pub fn trivial(n: usize) -> Self {
        Self::from_fn(n, |x, _| x)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// `x ▷ y` on 1-based labels.
    ///
    /// Panics if either label is outside `1..=n`.
    pub fn op(&self, x: usize, y: usize) -> usize {
        assert!(
            (1..=self.n).contains(&x) && (1..=self.n).contains(&y),
            "element out of range"
        );
        self.act(x - 1, y - 1) + 1
    }

    #[inline]
    pub(crate) fn act(&self, x: usize, y: usize) -> usize {
        self.entries[x * self.n + y]
    }

    pub(crate) fn check_element(&self, x: usize) -> Result<()> {
        if (1..=self.n).contains(&x) {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element: x,
                n: self.n,
            })
        }
    }

    /// 1-based rows.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.entries
            .chunks(self.n)
            .map(|row| row.iter().map(|v| v + 1).collect())
            .collect()
    }

    /// Column `y` (1-based) as a permutation, or `None` when it is not a bijection.
    pub fn column(&self, y: usize) -> Option<Permutation> {
        self.column0(y - 1)
    }

    pub(crate) fn column0(&self, y: usize) -> Option<Permutation> {
        Permutation::from_zero_based((0..self.n).map(|x| self.act(x, y)).collect()).ok()
    }

    /// All column permutations, failing on the first non-bijective column.
    pub(crate) fn columns(&self) -> Result<Vec<Permutation>> {
        (0..self.n)
            .map(|y| {
                self.column0(y)
                    .ok_or_else(|| Error::NotARack(format!("column {} is not a bijection", y + 1)))
            })
            .collect()
    }

    /// Iterated operation `x ▷^i y = σ_y^i(x)`, with negative `i` iterating
    /// the dual operation. The exponent is reduced modulo the order of `σ_y`.
    pub fn op_iter(&self, x: usize, y: usize, i: i64) -> Result<usize> {
        self.check_element(x)?;
        self.check_element(y)?;
        let column = self
            .column(y)
            .ok_or_else(|| Error::NotARack(format!("column {y} is not a bijection")))?;
        let order = column.order() as i64;
        let steps = i.rem_euclid(order);
        let mut z = x - 1;
        for _ in 0..steps {
            z = column.apply0(z);
        }
        Ok(z + 1)
    }

    /// The dual rack `(X, ▷^{-1})`: every column permutation inverted.
    pub fn dual(&self) -> Result<RackTable> {
        props::ensure_rack(self)?;
        Ok(self.invert_columns())
    }

    pub(crate) fn invert_columns(&self) -> RackTable {
        let n = self.n;
        let mut entries = vec![0; n * n];
        for y in 0..n {
            for x in 0..n {
                let image = self.act(x, y);
                entries[image * n + y] = x;
            }
        }
        RackTable { n, entries }
    }

    /// The kink map `x ↦ x ▷ x`.
    pub fn diagonal_perm(&self) -> Result<Permutation> {
        let images: Vec<usize> = (0..self.n).map(|x| self.act(x, x)).collect();
        let mut preimage = vec![None; self.n];
        for (x, &v) in images.iter().enumerate() {
            if let Some(other) = preimage[v] {
                return Err(Error::DiagonalNotBijective(other + 1, x + 1));
            }
            preimage[v] = Some(x);
        }
        Permutation::from_zero_based(images)
    }

    /// Rack rank `N(T)`: the order of the diagonal permutation.
    pub fn rack_rank(&self) -> Result<u64> {
        Ok(self.diagonal_perm()?.order())
    }

    /// Lcm of all column orders; rack polynomials are periodic in `m` and
    /// `n` with this period.
    pub fn column_order_lcm(&self) -> Result<u64> {
        Ok(self
            .columns()?
            .iter()
            .fold(1, |acc, c| crate::perm::lcm(acc, c.order())))
    }

    /// The operation restricted to a closed subset, relabelled `1..|S|` in
    /// ascending order of the original labels.
    pub fn restrict(&self, subset: &crate::Subset) -> Result<RackTable> {
        crate::rackpoly::ensure_closed(self, subset)?;
        let labels = subset.elements();
        let mut index = vec![usize::MAX; self.n];
        for (i, &x) in labels.iter().enumerate() {
            index[x - 1] = i;
        }
        Ok(RackTable::from_fn(labels.len(), |a, b| {
            index[self.act(labels[a] - 1, labels[b] - 1)]
        }))
    }
}

impl fmt::Debug for RackTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RackTable")
            .field("n", &self.n)
            .field("rows", &self.rows())
            .finish()
    }
}

/// The rack table text format: `n` on the first line, then `n` rows of `n`
/// space-separated 1-based labels.
impl fmt::Display for RackTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for row in self.entries.chunks(self.n) {
            let labels: Vec<String> = row.iter().map(|v| (v + 1).to_string()).collect();
            writeln!(f, "{}", labels.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for RackTable {
    type Err = Error;

    /// Parses the text format. Blank lines and lines starting with `#` are
    /// skipped. Rack axioms are not checked.
    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let parse_line = |line: usize, l: &str| -> Result<Vec<i64>> {
            l.split_whitespace()
                .map(|tok| {
                    tok.parse::<i64>().map_err(|_| Error::NonInteger {
                        line,
                        token: tok.to_string(),
                    })
                })
                .collect()
        };

        let (first_line, header) = lines.next().ok_or(Error::EmptyTable)?;
        let header = parse_line(first_line, header)?;
        if header.len() != 1 {
            return Err(Error::WrongRowLength {
                line: first_line,
                expected: 1,
                found: header.len(),
            });
        }
        if header[0] < 1 {
            return Err(Error::ZeroSize);
        }
        let n = header[0] as usize;

        let mut entries = Vec::with_capacity(n * n);
        let mut rows = 0;
        for (line, l) in lines {
            let values = parse_line(line, l)?;
            rows += 1;
            if rows > n {
                continue;
            }
            if values.len() != n {
                return Err(Error::WrongRowLength {
                    line,
                    expected: n,
                    found: values.len(),
                });
            }
            for (j, v) in values.into_iter().enumerate() {
                if v < 1 || v as usize > n {
                    return Err(Error::EntryOutOfRange {
                        row: rows,
                        column: j + 1,
                        value: v,
                        n,
                    });
                }
                entries.push(v as usize - 1);
            }
        }
        if rows != n {
            return Err(Error::WrongRowCount {
                expected: n,
                found: rows,
            });
        }
        Ok(RackTable { n, entries })
    }
}
