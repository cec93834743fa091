//! Rack counting invariants and their subrack-polynomial enhancements.
//!
//! For a rack `T` of rank `N`, framings only matter modulo `N`. A diagram
//! with self-writhe vector `w` is kinked by every `d ∈ {0..N−1}^c`; the
//! colorings of the kinked diagram are filed under the framing class
//! `(w + d) mod N`.

use std::collections::BTreeMap;
use std::fmt;

use crate::coloring::{enumerate_colorings, image_subrack, Coloring};
use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use crate::poly::TwoVarPoly;
use crate::props;
use crate::rack::RackTable;
use crate::rackpoly::{IndexConvention, RackPolynomials, Subset};

/// Framing class per component, each entry in `0..N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FramingVector(pub Vec<u64>);

impl FramingVector {
    /// `q1^a*q2^b...` with zero exponents dropped; `None` when all are zero.
    fn monomial(&self) -> Option<String> {
        let factors: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("q{}", i + 1)
                } else {
                    format!("q{}^{e}", i + 1)
                }
            })
            .collect();
        (!factors.is_empty()).then(|| factors.join("*"))
    }
}

/// `k*rest`, with `k` dropped when it is 1 and `rest` is present.
fn with_coefficient(k: u64, rest: Option<String>) -> String {
    match rest {
        None => k.to_string(),
        Some(r) if k == 1 => r,
        Some(r) => format!("{k}*{r}"),
    }
}

/// One coloring of one kinked diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramedColoring {
    pub framing: FramingVector,
    pub kinks: Vec<u32>,
    pub coloring: Coloring,
    pub image: Subset,
}

fn kink_vectors(rank: u64, components: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; components];
    loop {
        out.push(current.clone());
        let mut i = components;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            current[i] += 1;
            if (current[i] as u64) < rank {
                break;
            }
            current[i] = 0;
        }
    }
}

/// Colorings of the diagram kinked into every framing class, with their
/// framing labels and image subracks.
pub fn framed_colorings(d: &LinkDiagram, t: &RackTable) -> Result<Vec<FramedColoring>> {
    props::ensure_rack(t)?;
    let rank = t.rack_rank()?;
    let writhe = d.self_writhe();
    let mut out = Vec::new();
    for kinks in kink_vectors(rank, d.component_count()) {
        let framing = FramingVector(
            writhe
                .iter()
                .zip(&kinks)
                .map(|(&w, &k)| (w + k as i64).rem_euclid(rank as i64) as u64)
                .collect(),
        );
        let kinked = d.add_kinks(&kinks)?;
        for coloring in enumerate_colorings(&kinked, t)? {
            let image = image_subrack(t, &coloring)?;
            out.push(FramedColoring {
                framing: framing.clone(),
                kinks: kinks.clone(),
                coloring,
                image,
            });
        }
    }
    Ok(out)
}

/// The simple rack counting invariant and the rack counting polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RackCount {
    pub sr: u64,
    /// Every framing class, including those with no colorings.
    pub pr: BTreeMap<FramingVector, u64>,
}

impl RackCount {
    /// `PR` as a polynomial in `q1..qc`; classes with no colorings omitted.
    pub fn pr_string(&self) -> String {
        let terms: Vec<String> = self
            .pr
            .iter()
            .filter(|(_, &k)| k > 0)
            .map(|(w, &k)| with_coefficient(k, w.monomial()))
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

pub fn rack_counting(d: &LinkDiagram, t: &RackTable) -> Result<RackCount> {
    props::ensure_rack(t)?;
    let rank = t.rack_rank()?;
    let writhe = d.self_writhe();
    let mut pr = BTreeMap::new();
    for kinks in kink_vectors(rank, d.component_count()) {
        let framing = FramingVector(
            writhe
                .iter()
                .zip(&kinks)
                .map(|(&w, &k)| (w + k as i64).rem_euclid(rank as i64) as u64)
                .collect(),
        );
        let count = enumerate_colorings(&d.add_kinks(&kinks)?, t)?.len() as u64;
        pr.insert(framing, count);
    }
    Ok(RackCount {
        sr: pr.values().sum(),
        pr,
    })
}

/// The multiset of (framing class, subrack polynomial of the image) over all
/// colorings in all framing classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnhancedInvariant {
    pub m: u64,
    pub n: u64,
    pub components: usize,
    pub terms: BTreeMap<(FramingVector, TwoVarPoly), u64>,
}

impl EnhancedInvariant {
    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    /// Framing dropped: the simple enhanced multiset.
    pub fn srpm(&self) -> BTreeMap<TwoVarPoly, u64> {
        let mut out = BTreeMap::new();
        for ((_, p), &k) in &self.terms {
            *out.entry(p.clone()).or_insert(0) += k;
        }
        out
    }

    /// Setting `z = 1`: colorings per framing class.
    pub fn specialize_z(&self) -> BTreeMap<FramingVector, u64> {
        let mut out = BTreeMap::new();
        for ((w, _), &k) in &self.terms {
            *out.entry(w.clone()).or_insert(0) += k;
        }
        out
    }

    /// `srpp`: `Σ k*z^{poly}`, sorted by the polynomial's canonical string.
    pub fn srpp_string(&self) -> String {
        let mut terms: Vec<(String, u64)> = self
            .srpm()
            .into_iter()
            .map(|(p, k)| (p.to_string(), k))
            .collect();
        terms.sort();
        let rendered: Vec<String> = terms
            .into_iter()
            .map(|(p, k)| with_coefficient(k, Some(format!("z^{{{p}}}"))))
            .collect();
        join_or_zero(rendered)
    }

    /// `rpp`: `Σ k*q1^a*...*z^{poly}`, sorted by framing vector and then by
    /// the polynomial's canonical string.
    pub fn rpp_string(&self) -> String {
        let mut terms: Vec<(&FramingVector, String, u64)> = self
            .terms
            .iter()
            .map(|((w, p), &k)| (w, p.to_string(), k))
            .collect();
        terms.sort();
        let rendered: Vec<String> = terms
            .into_iter()
            .map(|(w, p, k)| {
                let z = format!("z^{{{p}}}");
                let rest = match w.monomial() {
                    Some(q) => format!("{q}*{z}"),
                    None => z,
                };
                with_coefficient(k, Some(rest))
            })
            .collect();
        join_or_zero(rendered)
    }
}

fn join_or_zero(terms: Vec<String>) -> String {
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

impl fmt::Display for EnhancedInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.rpp_string())
    }
}

/// The `(m,n)` subrack polynomial enhanced rack counting invariant.
pub fn enhanced_invariant(
    d: &LinkDiagram,
    t: &RackTable,
    m: i64,
    n: i64,
    convention: IndexConvention,
) -> Result<EnhancedInvariant> {
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
    let polys = RackPolynomials::new(t, convention)?;
    let mut cache: BTreeMap<Subset, TwoVarPoly> = BTreeMap::new();
    let mut terms = BTreeMap::new();
    for fc in framed_colorings(d, t)? {
        let poly = cache
            .entry(fc.image.clone())
            .or_insert_with(|| polys.subrack(&fc.image, m as u64, n as u64))
            .clone();
        *terms.entry((fc.framing, poly)).or_insert(0) += 1;
    }
    Ok(EnhancedInvariant {
        m: m as u64,
        n: n as u64,
        components: d.component_count(),
        terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Crossing;

    fn m_t() -> RackTable {
        "5\n1 3 2 1 1\n3 2 1 2 2\n2 1 3 3 3\n4 4 4 5 5\n5 5 5 4 4"
            .parse()
            .unwrap()
    }

    fn trefoil() -> LinkDiagram {
        LinkDiagram::new(
            vec![
                Crossing::new(1, 2, 1, 3),
                Crossing::new(1, 3, 2, 1),
                Crossing::new(1, 1, 3, 2),
            ],
            vec![],
        )
        .unwrap()
    }

    #[test]
    fn trefoil_counting() {
        let count = rack_counting(&trefoil(), &m_t()).unwrap();
        assert_eq!(count.sr, 20);
        assert_eq!(count.pr_string(), "11 + 9*q1");
    }

    #[test]
    fn unknot_counts_fixed_points_of_kink_powers() {
        let unknot = LinkDiagram::new(vec![], vec![1]).unwrap();
        let count = rack_counting(&unknot, &m_t()).unwrap();
        assert_eq!(count.pr_string(), "5 + 3*q1");
        assert_eq!(count.sr, 8);
    }

    #[test]
    fn quandle_has_one_class() {
        let dihedral: RackTable = "3\n1 3 2\n3 2 1\n2 1 3".parse().unwrap();
        let count = rack_counting(&trefoil(), &dihedral).unwrap();
        assert_eq!(count.pr_string(), "9");
    }

    #[test]
    fn one_element_rack() {
        let one = RackTable::trivial(1);
        let inv = enhanced_invariant(&trefoil(), &one, 1, 1, IndexConvention::default()).unwrap();
        assert_eq!(inv.rpp_string(), "z^{s*t}");
    }

    #[test]
    fn two_component_labels() {
        let hopf = LinkDiagram::new(
            vec![Crossing::new(1, 2, 1, 1), Crossing::new(1, 1, 2, 2)],
            vec![],
        )
        .unwrap();
        let count = rack_counting(&hopf, &m_t()).unwrap();
        assert_eq!(count.pr.len(), 4);
        assert_eq!(count.sr, count.pr.values().sum::<u64>());
        let inv = enhanced_invariant(&hopf, &m_t(), 1, 1, IndexConvention::default()).unwrap();
        assert_eq!(inv.specialize_z(), count.pr);
    }
}
