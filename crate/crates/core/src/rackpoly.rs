//! Generalized rack polynomials, exponent profiles, subracks and subrack
//! polynomials.
//!
//! For an element `x` of a finite rack and positive integers `m`, `n`:
//!
//! * `c_m(x)` counts the `y` with `y ▷^m x = y`, i.e. the fixed points of
//!   `σ_x^m` where `σ_x` is column `x`;
//! * `r_n(x)` counts the `y` with `x ▷^n y = x`, i.e. the columns `y` whose
//!   `n`-th power fixes `x`.
//!
//! How the two counts are attached to `s` and `t` is selected by
//! [`IndexConvention`].

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poly::TwoVarPoly;
use crate::props;
use crate::rack::RackTable;

/// How `rp_{m,n}` assembles the exponent counts into monomials.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum IndexConvention {
    /// `Σ_x s^{c_m(x)} t^{r_n(x)}`, the formula as it is usually defined.
    Definition,
    /// `Σ_x s^{r_m(x)} t^{c_n(x)}`, the form under which the constant-action
    /// closed form `b·s^k·t^a + (k−b)·t^a` and the example value `2t + s³t`
    /// hold.
    #[default]
    Transposed,
}

impl fmt::Display for IndexConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IndexConvention::Definition => "def",
            IndexConvention::Transposed => "prop3",
        })
    }
}

impl FromStr for IndexConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "def" => Ok(IndexConvention::Definition),
            "prop3" => Ok(IndexConvention::Transposed),
            other => Err(Error::InvalidConvention(other.to_string())),
        }
    }
}

/// A subset of `{1..n}`, kept sorted and duplicate-free. Prints as `{a,b,c}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    elements: Vec<usize>,
}

impl Subset {
    pub fn new(mut elements: Vec<usize>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        Subset { elements }
    }

    pub fn full(n: usize) -> Self {
        Subset {
            elements: (1..=n).collect(),
        }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    fn from_mask(mask: &[bool]) -> Self {
        Subset {
            elements: mask
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(i, _)| i + 1)
                .collect(),
        }
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.elements.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", labels.join(","))
    }
}

/// Parses `{1,2,3}` or a bare `1,2,3`.
impl FromStr for Subset {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim();
        let body = t
            .strip_prefix('{')
            .and_then(|b| b.strip_suffix('}'))
            .unwrap_or(t);
        let elements = body
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| Error::InvalidSubset(format!("bad element {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if elements.is_empty() {
            return Err(Error::InvalidSubset("empty subset".into()));
        }
        Ok(Subset::new(elements))
    }
}

/// Per-element exponent counts `(c_m(x), r_n(x))` for a fixed `(m, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentProfile {
    pub m: u64,
    pub n: u64,
    counts: Vec<(u32, u32)>,
}

impl ExponentProfile {
    /// `(c_m(x), r_n(x))` for the 1-based element `x`.
    pub fn get(&self, x: usize) -> (u32, u32) {
        self.counts[x - 1]
    }

    pub fn counts(&self) -> &[(u32, u32)] {
        &self.counts
    }

    /// `Σ_x s^{c_m(x)} t^{r_n(x)}` over the given elements.
    fn sum_over<'a>(&self, elements: impl Iterator<Item = &'a usize>) -> TwoVarPoly {
        let mut p = TwoVarPoly::new();
        for &x in elements {
            let (c, r) = self.get(x);
            p.add_term(c, r, 1);
        }
        p
    }
}

/// One line per element: `x: c r`.
impl fmt::Display for ExponentProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, r)) in self.counts.iter().enumerate() {
            writeln!(f, "{}: {c} {r}", i + 1)?;
        }
        Ok(())
    }
}

fn check_exponents(m: i64, n: i64) -> Result<(u64, u64)> {
    if m < 1 {
        return Err(Error::InvalidExponent {
            name: "m",
            value: m,
        });
    }
    if n < 1 {
        return Err(Error::InvalidExponent {
            name: "n",
            value: n,
        });
    }
    Ok((m as u64, n as u64))
}

/// Cycle length of element `x` under column `y`, for every pair.
struct CycleLengths {
    n: usize,
    // lengths[y * n + x]
    lengths: Vec<u64>,
}

impl CycleLengths {
    fn new(t: &RackTable) -> Result<Self> {
        let n = t.size();
        let mut lengths = Vec::with_capacity(n * n);
        for column in t.columns()? {
            lengths.extend(column.cycle_lengths().into_iter().map(|l| l as u64));
        }
        Ok(CycleLengths { n, lengths })
    }

    fn of(&self, x: usize, column: usize) -> u64 {
        self.lengths[column * self.n + x]
    }
}

/// Computes `(c_m(x), r_n(x))` for every element.
pub fn exponent_profile(t: &RackTable, m: i64, n: i64) -> Result<ExponentProfile> {
    let (m, n) = check_exponents(m, n)?;
    props::ensure_rack(t)?;
    let lengths = CycleLengths::new(t)?;
    Ok(profile_from(&lengths, m, n))
}

fn profile_from(lengths: &CycleLengths, m: u64, n: u64) -> ExponentProfile {
    let size = lengths.n;
    let counts = (0..size)
        .map(|x| {
            let c = (0..size)
                .filter(|&y| m.is_multiple_of(lengths.of(y, x)))
                .count();
            let r = (0..size)
                .filter(|&y| n.is_multiple_of(lengths.of(x, y)))
                .count();
            (c as u32, r as u32)
        })
        .collect();
    ExponentProfile { m, n, counts }
}

/// Precomputed cycle data for evaluating many `rp_{m,n}` of one rack.
pub struct RackPolynomials {
    lengths: CycleLengths,
    convention: IndexConvention,
}

impl RackPolynomials {
    pub fn new(t: &RackTable, convention: IndexConvention) -> Result<Self> {
        props::ensure_rack(t)?;
        Ok(RackPolynomials {
            lengths: CycleLengths::new(t)?,
            convention,
        })
    }

    pub fn size(&self) -> usize {
        self.lengths.n
    }

    pub fn subrack(&self, subset: &Subset, m: u64, n: u64) -> TwoVarPoly {
        match self.convention {
            IndexConvention::Definition => {
                profile_from(&self.lengths, m, n).sum_over(subset.elements().iter())
            }
            IndexConvention::Transposed => profile_from(&self.lengths, n, m)
                .sum_over(subset.elements().iter())
                .swap_variables(),
        }
    }

    pub fn full(&self, m: u64, n: u64) -> TwoVarPoly {
        self.subrack(&Subset::full(self.size()), m, n)
    }
}

/// `rp_{m,n}` under the default [`IndexConvention::Transposed`].
pub fn rack_polynomial(t: &RackTable, m: i64, n: i64) -> Result<TwoVarPoly> {
    rack_polynomial_with(t, m, n, IndexConvention::default())
}

pub fn rack_polynomial_with(
    t: &RackTable,
    m: i64,
    n: i64,
    convention: IndexConvention,
) -> Result<TwoVarPoly> {
    let (m, n) = check_exponents(m, n)?;
    Ok(RackPolynomials::new(t, convention)?.full(m, n))
}

/// Finds a pair `(a, b)` in `subset` with `a ▷ b` outside it.
pub(crate) fn ensure_closed(t: &RackTable, subset: &Subset) -> Result<()> {
    for &x in subset.elements() {
        t.check_element(x)?;
    }
    if subset.is_empty() {
        return Err(Error::InvalidSubset("empty subset".into()));
    }
    for &a in subset.elements() {
        for &b in subset.elements() {
            let product = t.op(a, b);
            if !subset.contains(product) {
                return Err(Error::NotASubrack { a, b, product });
            }
        }
    }
    Ok(())
}

/// Smallest `▷`-closed subset containing the given 1-based elements.
pub fn closure(t: &RackTable, generators: &[usize]) -> Result<Subset> {
    for &x in generators {
        t.check_element(x)?;
    }
    let mut mask = vec![false; t.size()];
    let mut members = Vec::new();
    for &g in generators {
        if !std::mem::replace(&mut mask[g - 1], true) {
            members.push(g - 1);
        }
    }
    close_in_place(t, &mut mask, &mut members);
    Ok(Subset::from_mask(&mask))
}

fn close_in_place(t: &RackTable, mask: &mut [bool], members: &mut Vec<usize>) {
    close_from(t, mask, members, 0);
}

/// Largest rack order accepted by [`enumerate_subracks`].
pub const MAX_SUBRACK_ORDER: usize = 64;

/// Every non-empty `▷`-closed subset, ordered by size then lexicographically.
///
/// Closed subsets are grown one generator at a time from the singleton
/// closures; every subrack arises this way, so the search is complete.
pub fn enumerate_subracks(t: &RackTable) -> Result<Vec<Subset>> {
    props::ensure_rack(t)?;
    let n = t.size();
    if n > MAX_SUBRACK_ORDER {
        return Err(Error::TooLarge {
            n,
            max: MAX_SUBRACK_ORDER,
        });
    }
    let to_bits = |mask: &[bool]| -> u64 {
        mask.iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .fold(0u64, |acc, (i, _)| acc | (1 << i))
    };

    let mut seen: HashSet<u64> = HashSet::new();
    let mut queue: Vec<Vec<bool>> = Vec::new();
    for x in 0..n {
        let mut mask = vec![false; n];
        mask[x] = true;
        let mut members = vec![x];
        close_in_place(t, &mut mask, &mut members);
        if seen.insert(to_bits(&mask)) {
            queue.push(mask);
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let base = queue[head].clone();
        head += 1;
        for x in 0..n {
            if base[x] {
                continue;
            }
            let mut mask = base.clone();
            let mut members: Vec<usize> = (0..n).filter(|&i| mask[i]).collect();
            // Products among the old members are already inside; start the
            // worklist so that only pairs involving new elements are formed.
            let old = members.len();
            mask[x] = true;
            members.push(x);
            close_from(t, &mut mask, &mut members, old);
            if seen.insert(to_bits(&mask)) {
                queue.push(mask);
            }
        }
    }
    let mut out: Vec<Subset> = queue.iter().map(|m| Subset::from_mask(m)).collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

fn close_from(t: &RackTable, mask: &mut [bool], members: &mut Vec<usize>, closed_prefix: usize) {
    let mut done = closed_prefix;
    while done < members.len() {
        let new = members[done];
        done += 1;
        let mut i = 0;
        while i < done {
            let other = members[i];
            i += 1;
            for product in [t.act(new, other), t.act(other, new)] {
                if !std::mem::replace(&mut mask[product], true) {
                    members.push(product);
                }
            }
        }
    }
}

/// `srp^{m,n}_{S⊂X}` under the default convention. Exponents are counted
/// in the ambient rack, not inside `S`.
pub fn subrack_polynomial(t: &RackTable, subset: &Subset, m: i64, n: i64) -> Result<TwoVarPoly> {
    subrack_polynomial_with(t, subset, m, n, IndexConvention::default())
}

pub fn subrack_polynomial_with(
    t: &RackTable,
    subset: &Subset,
    m: i64,
    n: i64,
    convention: IndexConvention,
) -> Result<TwoVarPoly> {
    let (m, n) = check_exponents(m, n)?;
    ensure_closed(t, subset)?;
    Ok(RackPolynomials::new(t, convention)?.subrack(subset, m, n))
}
