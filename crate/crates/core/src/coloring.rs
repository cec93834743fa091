//! Rack colorings of link diagrams.
//!
//! At a positive crossing the outgoing under arc is colored
//! `under_in ▷ over`; at a negative crossing `under_in ▷^{-1} over`.

use std::collections::BTreeMap;

use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use crate::props;
use crate::rack::RackTable;
use crate::rackpoly::{closure, Subset};

/// Arc id → rack element (1-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    colors: BTreeMap<u32, usize>,
}

impl Coloring {
    pub fn new(colors: BTreeMap<u32, usize>) -> Self {
        Coloring { colors }
    }

    pub fn color(&self, arc: u32) -> Option<usize> {
        self.colors.get(&arc).copied()
    }

    pub fn colors(&self) -> &BTreeMap<u32, usize> {
        &self.colors
    }

    /// Distinct colors used, ascending.
    pub fn used_colors(&self) -> Vec<usize> {
        let mut used: Vec<usize> = self.colors.values().copied().collect();
        used.sort_unstable();
        used.dedup();
        used
    }
}

/// Checks every crossing relation of `f` on `d`.
pub fn is_coloring(d: &LinkDiagram, t: &RackTable, f: &Coloring) -> bool {
    if f.colors.len() != d.arcs().len() || d.arcs().iter().any(|a| !f.colors.contains_key(a)) {
        return false;
    }
    d.crossings().iter().all(|c| {
        let (over, inc, out) = (
            f.colors[&c.over],
            f.colors[&c.under_in],
            f.colors[&c.under_out],
        );
        if c.sign > 0 {
            t.op(inc, over) == out
        } else {
            t.op(out, over) == inc
        }
    })
}

struct IndexedCrossing {
    positive: bool,
    over: usize,
    under_in: usize,
    under_out: usize,
}

struct Enumerator<'a> {
    table: &'a RackTable,
    dual: RackTable,
    crossings: Vec<IndexedCrossing>,
    arcs: &'a [u32],
    found: Vec<Coloring>,
}

impl Enumerator<'_> {
    /// Runs crossing relations to a fixed point; `false` on contradiction.
    fn propagate(&self, colors: &mut [Option<usize>]) -> bool {
        loop {
            let mut changed = false;
            for c in &self.crossings {
                let Some(over) = colors[c.over] else { continue };
                let (forward, backward) = if c.positive {
                    (self.table, &self.dual)
                } else {
                    (&self.dual, self.table)
                };
                match (colors[c.under_in], colors[c.under_out]) {
                    (Some(i), Some(o)) => {
                        if forward.act(i, over) != o {
                            return false;
                        }
                    }
                    (Some(i), None) => {
                        colors[c.under_out] = Some(forward.act(i, over));
                        changed = true;
                    }
                    (None, Some(o)) => {
                        colors[c.under_in] = Some(backward.act(o, over));
                        changed = true;
                    }
                    (None, None) => {}
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn search(&mut self, mut colors: Vec<Option<usize>>) {
        if !self.propagate(&mut colors) {
            return;
        }
        match colors.iter().position(Option::is_none) {
            None => {
                let map = self
                    .arcs
                    .iter()
                    .zip(&colors)
                    .map(|(&a, c)| (a, c.unwrap() + 1))
                    .collect();
                self.found.push(Coloring::new(map));
            }
            Some(arc) => {
                for x in 0..self.table.size() {
                    let mut next = colors.clone();
                    next[arc] = Some(x);
                    self.search(next);
                }
            }
        }
    }
}

/// All colorings of `d` by `t`, exact and duplicate-free, in lexicographic
/// order of the color vector indexed by ascending arc id.
pub fn enumerate_colorings(d: &LinkDiagram, t: &RackTable) -> Result<Vec<Coloring>> {
    props::ensure_rack(t)?;
    let arcs = d.arcs();
    let index = |arc: u32| arcs.binary_search(&arc).expect("validated diagram");
    let crossings = d
        .crossings()
        .iter()
        .map(|c| IndexedCrossing {
            positive: c.sign > 0,
            over: index(c.over),
            under_in: index(c.under_in),
            under_out: index(c.under_out),
        })
        .collect();
    let mut e = Enumerator {
        table: t,
        dual: t.invert_columns(),
        crossings,
        arcs,
        found: Vec::new(),
    };
    e.search(vec![None; arcs.len()]);
    debug_assert!(e.found.iter().all(|f| is_coloring(d, t, f)));
    Ok(e.found)
}

/// The subrack generated by the colors of `f`, which is the image of the
/// induced homomorphism since arcs generate the fundamental rack.
pub fn image_subrack(t: &RackTable, f: &Coloring) -> Result<Subset> {
    let used = f.used_colors();
    if used.is_empty() {
        return Err(Error::ColoringMismatch { arcs: 0 });
    }
    closure(t, &used)
}
