//! Oriented link diagrams as lists of signed crossings over arc labels.
//!
//! An arc runs from one undercrossing to the next. Each crossing records
//! the over arc and the under arcs entering and leaving it. A component
//! with no crossings is a free arc.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    /// `1` or `-1`.
    pub sign: i8,
    pub over: u32,
    pub under_in: u32,
    pub under_out: u32,
}

impl Crossing {
    pub fn new(sign: i8, over: u32, under_in: u32, under_out: u32) -> Self {
        Crossing {
            sign,
            over,
            under_in,
            under_out,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramFile {
    crossings: Vec<Crossing>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    free_arcs: Vec<u32>,
}

/// A structurally validated diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    free_arcs: Vec<u32>,
    arcs: Vec<u32>,
    components: Vec<Vec<u32>>,
}

impl LinkDiagram {
    pub fn new(crossings: Vec<Crossing>, free_arcs: Vec<u32>) -> Result<Self> {
        let mut under_in: BTreeMap<u32, usize> = BTreeMap::new();
        let mut under_out: BTreeMap<u32, usize> = BTreeMap::new();
        for c in &crossings {
            if c.sign != 1 && c.sign != -1 {
                return Err(Error::MalformedDiagram(format!(
                    "crossing sign must be 1 or -1, got {}",
                    c.sign
                )));
            }
            if c.over == 0 || c.under_in == 0 || c.under_out == 0 {
                return Err(Error::MalformedDiagram("arc ids must be positive".into()));
            }
            *under_in.entry(c.under_in).or_default() += 1;
            *under_out.entry(c.under_out).or_default() += 1;
        }
        let under_arcs: BTreeSet<u32> = under_in.keys().chain(under_out.keys()).copied().collect();
        for &arc in &under_arcs {
            for (role, counts) in [("under_in", &under_in), ("under_out", &under_out)] {
                let count = counts.get(&arc).copied().unwrap_or(0);
                if count != 1 {
                    return Err(Error::ArcMultiplicity { arc, role, count });
                }
            }
        }
        let mut free: BTreeSet<u32> = BTreeSet::new();
        for &arc in &free_arcs {
            if arc == 0 {
                return Err(Error::MalformedDiagram("arc ids must be positive".into()));
            }
            if !free.insert(arc) {
                return Err(Error::MalformedDiagram(format!(
                    "free arc {arc} listed twice"
                )));
            }
        }
        for (i, c) in crossings.iter().enumerate() {
            for arc in [c.over, c.under_in, c.under_out] {
                if free.contains(&arc) {
                    return Err(Error::FreeArcInCrossing(arc));
                }
            }
            if !under_arcs.contains(&c.over) {
                return Err(Error::UnknownArc {
                    crossing: i + 1,
                    arc: c.over,
                });
            }
        }

        let successor: BTreeMap<u32, u32> = crossings
            .iter()
            .map(|c| (c.under_in, c.under_out))
            .collect();
        let mut seen: BTreeSet<u32> = BTreeSet::new();
        let mut components = Vec::new();
        let arcs: Vec<u32> = under_arcs.union(&free).copied().collect();
        for &start in &arcs {
            if seen.contains(&start) {
                continue;
            }
            let mut component = vec![start];
            seen.insert(start);
            if !free.contains(&start) {
                let mut arc = successor[&start];
                while arc != start {
                    seen.insert(arc);
                    component.push(arc);
                    arc = successor[&arc];
                }
            }
            components.push(component);
        }

        Ok(LinkDiagram {
            crossings,
            free_arcs: free.into_iter().collect(),
            arcs,
            components,
        })
    }

    /// Parses the JSON diagram format.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: DiagramFile =
            serde_json::from_str(text).map_err(|e| Error::MalformedDiagram(e.to_string()))?;
        Self::new(file.crossings, file.free_arcs)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&DiagramFile {
            crossings: self.crossings.clone(),
            free_arcs: self.free_arcs.clone(),
        })
        .expect("diagram serializes")
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn free_arcs(&self) -> &[u32] {
        &self.free_arcs
    }

    /// All arc ids, ascending.
    pub fn arcs(&self) -> &[u32] {
        &self.arcs
    }

    /// Components ordered by smallest arc id; each lists its arcs in the
    /// order they are traversed, starting from the smallest.
    pub fn components(&self) -> &[Vec<u32>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    fn component_index(&self) -> BTreeMap<u32, usize> {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.iter().map(move |&a| (a, i)))
            .collect()
    }

    /// Sum of crossing signs over crossings whose arcs all lie in one
    /// component, per component.
    pub fn self_writhe(&self) -> Vec<i64> {
        let index = self.component_index();
        let mut writhe = vec![0i64; self.components.len()];
        for c in &self.crossings {
            let comp = index[&c.under_in];
            if index[&c.over] == comp {
                writhe[comp] += c.sign as i64;
            }
        }
        writhe
    }

    /// Inserts `kinks[i]` positive kinks into component `i`.
    ///
    /// Each kink sits on the component's smallest arc `a`, just before its
    /// terminal undercrossing: a fresh arc `a′` takes over that undercrossing
    /// and the new crossing `(+1, over a, under a → a′)` is appended. A free
    /// loop first becomes the one-arc curl `(+1, a, a → a)`.
    pub fn add_kinks(&self, kinks: &[u32]) -> Result<LinkDiagram> {
        if kinks.len() != self.components.len() {
            return Err(Error::MalformedDiagram(format!(
                "expected {} kink counts, got {}",
                self.components.len(),
                kinks.len()
            )));
        }
        let mut crossings = self.crossings.clone();
        let mut free: Vec<u32> = self.free_arcs.clone();
        let mut next_arc = self.arcs.last().copied().unwrap_or(0) + 1;
        for (component, &count) in self.components.iter().zip(kinks) {
            let anchor = component[0];
            let mut remaining = count;
            if remaining > 0 && free.contains(&anchor) {
                free.retain(|&a| a != anchor);
                crossings.push(Crossing::new(1, anchor, anchor, anchor));
                remaining -= 1;
            }
            for _ in 0..remaining {
                let fresh = next_arc;
                next_arc += 1;
                let terminal = crossings
                    .iter_mut()
                    .find(|c| c.under_in == anchor)
                    .expect("every non-free arc ends at an undercrossing");
                terminal.under_in = fresh;
                crossings.push(Crossing::new(1, anchor, anchor, fresh));
            }
        }
        LinkDiagram::new(crossings, free)
    }
}

/// Components and their self-writhe.
pub fn components_and_writhe(d: &LinkDiagram) -> (Vec<Vec<u32>>, Vec<i64>) {
    (d.components().to_vec(), d.self_writhe())
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = r#"{"crossings":[
        {"sign":1,"over":2,"under_in":1,"under_out":3},
        {"sign":1,"over":3,"under_in":2,"under_out":1},
        {"sign":1,"over":1,"under_in":3,"under_out":2}]}"#;

    fn trefoil() -> LinkDiagram {
        LinkDiagram::from_json(TREFOIL).unwrap()
    }

    fn hopf() -> LinkDiagram {
        LinkDiagram::new(
            vec![Crossing::new(1, 2, 1, 1), Crossing::new(1, 1, 2, 2)],
            vec![],
        )
        .unwrap()
    }

    #[test]
    fn trefoil_structure() {
        let d = trefoil();
        assert_eq!(d.arcs(), &[1, 2, 3]);
        assert_eq!(d.components(), &[vec![1, 3, 2]]);
        assert_eq!(d.self_writhe(), vec![3]);
    }

    #[test]
    fn hopf_has_no_self_crossings() {
        let (components, writhe) = components_and_writhe(&hopf());
        assert_eq!(components, vec![vec![1], vec![2]]);
        assert_eq!(writhe, vec![0, 0]);
    }

    #[test]
    fn unknot() {
        let d = LinkDiagram::from_json(r#"{"crossings":[],"free_arcs":[1]}"#).unwrap();
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.self_writhe(), vec![0]);
    }

    #[test]
    fn rejects_bad_diagrams() {
        let unknown = r#"{"crossings":[
            {"sign":1,"over":9,"under_in":1,"under_out":3},
            {"sign":1,"over":3,"under_in":2,"under_out":1},
            {"sign":1,"over":1,"under_in":3,"under_out":2}]}"#;
        assert_eq!(
            LinkDiagram::from_json(unknown),
            Err(Error::UnknownArc {
                crossing: 1,
                arc: 9
            })
        );
        let twice = r#"{"crossings":[
            {"sign":1,"over":2,"under_in":1,"under_out":2},
            {"sign":1,"over":1,"under_in":1,"under_out":1}]}"#;
        assert!(matches!(
            LinkDiagram::from_json(twice),
            Err(Error::ArcMultiplicity { .. })
        ));
        assert!(matches!(
            LinkDiagram::from_json("{not json"),
            Err(Error::MalformedDiagram(_))
        ));
        let sign = r#"{"crossings":[{"sign":2,"over":1,"under_in":1,"under_out":1}]}"#;
        assert!(matches!(
            LinkDiagram::from_json(sign),
            Err(Error::MalformedDiagram(_))
        ));
        let free =
            r#"{"crossings":[{"sign":1,"over":1,"under_in":1,"under_out":1}],"free_arcs":[1]}"#;
        assert_eq!(
            LinkDiagram::from_json(free),
            Err(Error::FreeArcInCrossing(1))
        );
    }

    #[test]
    fn kinks_on_trefoil() {
        let k = trefoil().add_kinks(&[1]).unwrap();
        assert_eq!(k.arcs().len(), 4);
        assert_eq!(k.crossings().len(), 4);
        assert_eq!(k.self_writhe(), vec![4]);
        assert_eq!(trefoil().add_kinks(&[0]).unwrap(), trefoil());
        assert_eq!(trefoil().add_kinks(&[3]).unwrap().self_writhe(), vec![6]);
        assert!(trefoil().add_kinks(&[1, 1]).is_err());
    }

    #[test]
    fn kinks_on_free_loop() {
        let d = LinkDiagram::new(vec![], vec![1]).unwrap();
        let one = d.add_kinks(&[1]).unwrap();
        assert_eq!(one.crossings(), &[Crossing::new(1, 1, 1, 1)]);
        let two = d.add_kinks(&[2]).unwrap();
        assert_eq!(two.crossings().len(), 2);
        assert_eq!(two.arcs(), &[1, 2]);
        assert_eq!(two.self_writhe(), vec![2]);
        assert_eq!(two.component_count(), 1);
    }

    #[test]
    fn kinks_per_component() {
        let k = hopf().add_kinks(&[1, 2]).unwrap();
        assert_eq!(k.self_writhe(), vec![1, 2]);
        assert_eq!(k.component_count(), 2);
    }

    #[test]
    fn json_round_trip() {
        let d = trefoil();
        assert_eq!(LinkDiagram::from_json(&d.to_json()).unwrap(), d);
    }
}
