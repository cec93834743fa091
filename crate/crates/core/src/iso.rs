//! Rack isomorphism testing and rack-polynomial family scans.

use std::fmt;

use crate::error::{Error, Result};
use crate::gen::constant_action;
use crate::perm::{lcm, CycleType, Permutation};
use crate::poly::TwoVarPoly;
use crate::props;
use crate::rack::RackTable;
use crate::rackpoly::{exponent_profile, IndexConvention, RackPolynomials};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoResult {
    pub isomorphic: bool,
    /// Maps elements of the first rack to the second.
    pub witness: Option<Permutation>,
}

/// Whether `f(x▷y) = f(x)▷f(y)` for all `x, y`.
pub fn is_homomorphism(a: &RackTable, b: &RackTable, f: &Permutation) -> bool {
    let n = a.size();
    f.len() == n
        && b.size() == n
        && (0..n).all(|x| (0..n).all(|y| f.apply0(a.act(x, y)) == b.act(f.apply0(x), f.apply0(y))))
}

/// Isomorphism-invariant data attached to one element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct ElementKey {
    column_type: CycleType,
    diagonal_cycle: usize,
    profile: (u32, u32),
}

fn element_keys(t: &RackTable) -> Result<Vec<ElementKey>> {
    let columns = t.columns()?;
    let diagonal = t.diagonal_perm()?.cycle_lengths();
    let profile = exponent_profile(t, 1, 1)?;
    Ok((0..t.size())
        .map(|x| ElementKey {
            column_type: columns[x].cycle_type(),
            diagonal_cycle: diagonal[x],
            profile: profile.get(x + 1),
        })
        .collect())
}

struct Search<'a> {
    a: &'a RackTable,
    b: &'a RackTable,
    keys_a: Vec<ElementKey>,
    keys_b: Vec<ElementKey>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
    trail: Vec<usize>,
}

impl Search<'_> {
    /// Assigns `x ↦ u` and everything it forces; on conflict the partial
    /// assignment is left for the caller to undo.
    fn assign(&mut self, x: usize, u: usize) -> bool {
        let mut pending = vec![(x, u)];
        while let Some((x, u)) = pending.pop() {
            if let Some(v) = self.map[x] {
                if v != u {
                    return false;
                }
                continue;
            }
            if self.used[u] || self.keys_a[x] != self.keys_b[u] {
                return false;
            }
            self.map[x] = Some(u);
            self.used[u] = true;
            self.trail.push(x);
            for i in 0..self.trail.len() {
                let y = self.trail[i];
                let v = self.map[y].unwrap();
                pending.push((self.a.act(x, y), self.b.act(u, v)));
                pending.push((self.a.act(y, x), self.b.act(v, u)));
            }
        }
        true
    }

    fn undo(&mut self, len: usize) {
        while self.trail.len() > len {
            let x = self.trail.pop().unwrap();
            let u = self.map[x].take().unwrap();
            self.used[u] = false;
        }
    }

    fn solve(&mut self) -> bool {
        let n = self.a.size();
        let Some(x) = (0..n).find(|&x| self.map[x].is_none()) else {
            return true;
        };
        for u in 0..n {
            if self.used[u] || self.keys_a[x] != self.keys_b[u] {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(x, u) && self.solve() {
                return true;
            }
            self.undo(mark);
        }
        false
    }
}

/// Exact isomorphism test by propagating backtracking search. Any witness
/// is re-verified before it is returned.
pub fn isomorphic(a: &RackTable, b: &RackTable) -> Result<IsoResult> {
    props::ensure_rack(a)?;
    props::ensure_rack(b)?;
    let none = IsoResult {
        isomorphic: false,
        witness: None,
    };
    if a.size() != b.size() {
        return Ok(none);
    }
    let keys_a = element_keys(a)?;
    let keys_b = element_keys(b)?;
    let mut sorted_a = keys_a.clone();
    let mut sorted_b = keys_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return Ok(none);
    }
    let n = a.size();
    let mut search = Search {
        a,
        b,
        keys_a,
        keys_b,
        map: vec![None; n],
        used: vec![false; n],
        trail: Vec::with_capacity(n),
    };
    if !search.solve() {
        return Ok(none);
    }
    let images = search.map.iter().map(|v| v.unwrap()).collect();
    let witness = Permutation::from_zero_based(images)?;
    assert!(
        is_homomorphism(a, b, &witness),
        "isomorphism search produced an invalid witness"
    );
    Ok(IsoResult {
        isomorphic: true,
        witness: Some(witness),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disagreement {
    pub m: u64,
    pub n: u64,
    pub first: TwoVarPoly,
    pub second: TwoVarPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub bound: u64,
    /// Ordered by `(m, n)`.
    pub differences: Vec<Disagreement>,
}

impl ScanReport {
    pub fn agrees(&self) -> bool {
        self.differences.is_empty()
    }

    pub fn differs_at(&self, m: u64, n: u64) -> bool {
        self.differences.iter().any(|d| d.m == m && d.n == n)
    }
}

/// One line per disagreement: `(m,n): polyA != polyB`.
impl fmt::Display for ScanReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.differences {
            writeln!(f, "({},{}): {} != {}", d.m, d.n, d.first, d.second)?;
        }
        Ok(())
    }
}

/// Lcm of the column orders of both racks. Rack polynomials are periodic in
/// each index with this period, so a scan up to it covers the whole family.
pub fn complete_scan_bound(a: &RackTable, b: &RackTable) -> Result<u64> {
    Ok(lcm(a.column_order_lcm()?, b.column_order_lcm()?))
}

/// Compares `rp_{m,n}` of two racks for all `1 ≤ m, n ≤ bound`.
pub fn rp_family_scan(
    a: &RackTable,
    b: &RackTable,
    bound: u64,
    convention: IndexConvention,
) -> Result<ScanReport> {
    if bound < 1 {
        return Err(Error::InvalidExponent {
            name: "bound",
            value: bound as i64,
        });
    }
    let pa = RackPolynomials::new(a, convention)?;
    let pb = RackPolynomials::new(b, convention)?;
    let mut differences = Vec::new();
    for m in 1..=bound {
        for n in 1..=bound {
            let first = pa.full(m, n);
            let second = pb.full(m, n);
            if first != second {
                differences.push(Disagreement {
                    m,
                    n,
                    first,
                    second,
                });
            }
        }
    }
    Ok(ScanReport { bound, differences })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SameTypeCheck {
    pub cycle_type: CycleType,
    pub isomorphic: bool,
    pub family_agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCheck {
    pub first: CycleType,
    pub second: CycleType,
    /// First `(m, n)` where the rack polynomials differ, searching
    /// `(m, 1)` for `m = 1..L` before the remaining pairs.
    pub distinguished_at: Option<(u64, u64)>,
    pub isomorphic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub k: usize,
    pub same_type: Vec<SameTypeCheck>,
    pub pairs: Vec<PairCheck>,
}

impl ClassificationReport {
    /// Same type ⇒ isomorphic with agreeing family; distinct types ⇒
    /// distinguished and not isomorphic.
    pub fn confirmed(&self) -> bool {
        self.same_type
            .iter()
            .all(|c| c.isomorphic && c.family_agrees)
            && self
                .pairs
                .iter()
                .all(|p| p.distinguished_at.is_some() && !p.isomorphic)
    }
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.same_type {
            writeln!(
                f,
                "{} ~ {}: {}, {}",
                c.cycle_type,
                c.cycle_type,
                if c.isomorphic {
                    "isomorphic"
                } else {
                    "not isomorphic"
                },
                if c.family_agrees {
                    "rp family agrees"
                } else {
                    "rp family differs"
                }
            )?;
        }
        for p in &self.pairs {
            let at = match p.distinguished_at {
                Some((m, n)) => format!("distinguished at ({m},{n})"),
                None => "not distinguished".to_string(),
            };
            writeln!(
                f,
                "{} vs {}: {at}, {}",
                p.first,
                p.second,
                if p.isomorphic {
                    "isomorphic"
                } else {
                    "not isomorphic"
                }
            )?;
        }
        writeln!(f, "confirmed: {}", self.confirmed())
    }
}

/// Largest degree accepted by [`verify_constant_action_classification`].
pub const MAX_CLASSIFICATION_DEGREE: usize = 9;

fn relabelled(sigma: &Permutation) -> Permutation {
    let k = sigma.len();
    let reverse = Permutation::from_zero_based((0..k).rev().collect()).unwrap();
    reverse.compose(sigma).compose(&reverse.inverse())
}

/// Checks on every cycle type of `k` points that constant action racks are
/// isomorphic exactly when their cycle types agree, and exactly when their
/// full rack polynomial families agree.
pub fn verify_constant_action_classification(
    k: usize,
    convention: IndexConvention,
) -> Result<ClassificationReport> {
    if k > MAX_CLASSIFICATION_DEGREE {
        return Err(Error::TooLarge {
            n: k,
            max: MAX_CLASSIFICATION_DEGREE,
        });
    }
    if k == 0 {
        return Err(Error::ZeroSize);
    }
    let types = CycleType::all(k);
    let racks: Vec<RackTable> = types
        .iter()
        .map(|ty| constant_action(&ty.canonical_permutation()))
        .collect();

    let mut same_type = Vec::with_capacity(types.len());
    for (ty, rack) in types.iter().zip(&racks) {
        let other = constant_action(&relabelled(&ty.canonical_permutation()));
        let bound = complete_scan_bound(rack, &other)?;
        same_type.push(SameTypeCheck {
            cycle_type: ty.clone(),
            isomorphic: isomorphic(rack, &other)?.isomorphic,
            family_agrees: rp_family_scan(rack, &other, bound, convention)?.agrees(),
        });
    }

    let mut pairs = Vec::new();
    for i in 0..types.len() {
        for j in i + 1..types.len() {
            let bound = lcm(types[i].order(), types[j].order());
            let pa = RackPolynomials::new(&racks[i], convention)?;
            let pb = RackPolynomials::new(&racks[j], convention)?;
            let order = (1..=bound)
                .map(|m| (m, 1))
                .chain((1..=bound).flat_map(|m| (2..=bound).map(move |n| (m, n))));
            let distinguished_at = order
                .into_iter()
                .find(|&(m, n)| pa.full(m, n) != pb.full(m, n));
            pairs.push(PairCheck {
                first: types[i].clone(),
                second: types[j].clone(),
                distinguished_at,
                isomorphic: isomorphic(&racks[i], &racks[j])?.isomorphic,
            });
        }
    }
    Ok(ClassificationReport {
        k,
        same_type,
        pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ca(n: usize, cycles: &str) -> RackTable {
        constant_action(&Permutation::parse_cycles(n, cycles).unwrap())
    }

    #[test]
    fn self_isomorphism_has_identity_witness() {
        let t: RackTable = "5\n1 3 2 1 1\n3 2 1 2 2\n2 1 3 3 3\n4 4 4 5 5\n5 5 5 4 4"
            .parse()
            .unwrap();
        let r = isomorphic(&t, &t).unwrap();
        assert!(r.isomorphic);
        assert!(is_homomorphism(&t, &t, r.witness.as_ref().unwrap()));
    }

    #[test]
    fn relabelled_constant_action_is_isomorphic() {
        let a = ca(5, "(1 2 3)(4 5)");
        let b = ca(5, "(2 5)(1 4 3)");
        let r = isomorphic(&a, &b).unwrap();
        assert!(r.isomorphic);
        assert!(is_homomorphism(&a, &b, r.witness.as_ref().unwrap()));
        assert!(!isomorphic(&a, &ca(5, "(1 2 3 4 5)")).unwrap().isomorphic);
    }

    #[test]
    fn sizes_must_match() {
        assert!(
            !isomorphic(&RackTable::trivial(2), &RackTable::trivial(3))
                .unwrap()
                .isomorphic
        );
    }

    #[test]
    fn scan_of_m_x_and_m_y() {
        let x = ca(6, "(12)(34)(56)");
        let y = ca(6, "(123)(456)");
        let report = rp_family_scan(&x, &y, 6, IndexConvention::default()).unwrap();
        assert!(!report.differs_at(1, 1));
        assert!(report.differs_at(2, 1));
        assert!(rp_family_scan(&x, &x, 6, IndexConvention::default())
            .unwrap()
            .agrees());
    }

    #[test]
    fn classification_small_degrees() {
        let r1 = verify_constant_action_classification(1, IndexConvention::default()).unwrap();
        assert!(r1.pairs.is_empty() && r1.confirmed());
        let r4 = verify_constant_action_classification(4, IndexConvention::default()).unwrap();
        assert_eq!(r4.same_type.len(), 5);
        assert_eq!(r4.pairs.len(), 10);
        assert!(r4.confirmed());
        assert!(matches!(
            verify_constant_action_classification(10, IndexConvention::default()),
            Err(Error::TooLarge { .. })
        ));
    }
}
