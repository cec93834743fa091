//! Fixtures and brute-force oracles shared by the integration tests.
//!
//! The oracles only use `RackTable::op` / `op_iter` and the diagram's raw
//! crossing list, so they stay independent of the code paths they check.
#![allow(dead_code)]

use std::path::PathBuf;

use rackkit::{
    alexander, constant_action, ts_rack, Crossing, IndexConvention, LinkDiagram, Permutation,
    RackTable, TwoVarPoly,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

pub fn rack(name: &str) -> RackTable {
    std::fs::read_to_string(fixture_path(name))
        .unwrap()
        .parse()
        .unwrap()
}

pub fn link(name: &str) -> LinkDiagram {
    LinkDiagram::from_json(&std::fs::read_to_string(fixture_path(name)).unwrap()).unwrap()
}

pub const RACK_FIXTURES: &[&str] = &[
    "ex2.rack", "ex3.rack", "T5.rack", "Q6.rack", "R6.rack", "X6.rack", "Y6.rack", "R3.rack",
];

pub const LINK_FIXTURES: &[&str] = &[
    "trefoil.link",
    "trefoil_r2.link",
    "trefoil_r1pair.link",
    "trefoil_kinked.link",
    "figure8.link",
    "hopf.link",
    "unknot.link",
    "unlink2.link",
];

/// Racks of order at most 5 used for coloring oracles.
pub fn small_racks() -> Vec<(String, RackTable)> {
    let mut out: Vec<(String, RackTable)> = ["ex2.rack", "ex3.rack", "T5.rack", "R3.rack"]
        .iter()
        .map(|n| (n.to_string(), rack(n)))
        .collect();
    out.push(("trivial(1)".into(), RackTable::trivial(1)));
    out.push(("trivial(2)".into(), RackTable::trivial(2)));
    out.push(("alexander(4,3)".into(), alexander(4, 3).unwrap()));
    out.push(("alexander(5,2)".into(), alexander(5, 2).unwrap()));
    out.push(("alexander(5,4)".into(), alexander(5, 4).unwrap()));
    out.push(("ts(4,1,2)".into(), ts_rack(4, 1, 2).unwrap()));
    out.push((
        "constant(4 cycle)".into(),
        constant_action(&Permutation::parse_cycles(4, "(1234)").unwrap()),
    ));
    out
}

/// `rp_{m,n}` straight from the set definitions by iterating the operation.
pub fn rp_oracle(t: &RackTable, m: i64, n: i64, convention: IndexConvention) -> TwoVarPoly {
    let size = t.size();
    let c = |x: usize, k: i64| {
        (1..=size)
            .filter(|&y| t.op_iter(y, x, k).unwrap() == y)
            .count() as u32
    };
    let r = |x: usize, k: i64| {
        (1..=size)
            .filter(|&y| t.op_iter(x, y, k).unwrap() == x)
            .count() as u32
    };
    let mut p = TwoVarPoly::new();
    for x in 1..=size {
        match convention {
            IndexConvention::Definition => p.add_term(c(x, m), r(x, n), 1),
            IndexConvention::Transposed => p.add_term(r(x, m), c(x, n), 1),
        }
    }
    p
}

/// The same sum restricted to `subset`, exponents counted in the full rack.
pub fn srp_oracle(t: &RackTable, subset: &[usize], m: i64, n: i64) -> TwoVarPoly {
    let size = t.size();
    let mut p = TwoVarPoly::new();
    for &x in subset {
        let r = (1..=size)
            .filter(|&y| t.op_iter(x, y, m).unwrap() == x)
            .count() as u32;
        let c = (1..=size)
            .filter(|&y| t.op_iter(y, x, n).unwrap() == y)
            .count() as u32;
        p.add_term(r, c, 1);
    }
    p
}

/// Every closed non-empty subset by checking all `2^n − 1` candidates.
pub fn subracks_oracle(t: &RackTable) -> Vec<Vec<usize>> {
    let n = t.size();
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let members: Vec<usize> = (1..=n).filter(|x| mask & (1 << (x - 1)) != 0).collect();
        let closed = members
            .iter()
            .all(|&a| members.iter().all(|&b| members.contains(&t.op(a, b))));
        if closed {
            out.push(members);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Exhaustive `|T|^#arcs` coloring count.
pub fn brute_force_colorings(d: &LinkDiagram, t: &RackTable) -> Vec<Vec<usize>> {
    let arcs = d.arcs();
    let pos = |a: u32| arcs.iter().position(|&x| x == a).unwrap();
    let crossings: Vec<(i64, usize, usize, usize)> = d
        .crossings()
        .iter()
        .map(|c: &Crossing| {
            (
                c.sign as i64,
                pos(c.over),
                pos(c.under_in),
                pos(c.under_out),
            )
        })
        .collect();
    let size = t.size();
    let total = size.pow(arcs.len() as u32);
    let mut out = Vec::new();
    for mut code in 0..total {
        let colors: Vec<usize> = (0..arcs.len())
            .map(|_| {
                let c = code % size + 1;
                code /= size;
                c
            })
            .collect();
        let ok = crossings
            .iter()
            .all(|&(sign, o, i, u)| t.op_iter(colors[i], colors[o], sign).unwrap() == colors[u]);
        if ok {
            out.push(colors);
        }
    }
    out.sort();
    out
}

pub fn random_permutation(rng: &mut StdRng, k: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=k).collect();
    images.shuffle(rng);
    Permutation::from_images(&images).unwrap()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn units(n: u64) -> Vec<i64> {
    (0..n as i64).filter(|&t| gcd(t as u64, n) == 1).collect()
}

/// A random rack from the constant-action, Alexander and `(t,s)` families.
pub fn random_rack(rng: &mut StdRng) -> RackTable {
    match rng.gen_range(0..3) {
        0 => {
            let k = rng.gen_range(1..=8);
            constant_action(&random_permutation(rng, k))
        }
        1 => {
            let n = rng.gen_range(1..=12u64);
            let us = units(n);
            let t = if n == 1 { 0 } else { *us.choose(rng).unwrap() };
            alexander(n, t).unwrap()
        }
        _ => loop {
            let n = rng.gen_range(1..=12u64);
            let us = units(n);
            let t = if n == 1 { 0 } else { *us.choose(rng).unwrap() };
            let ni = n as i64;
            let ss: Vec<i64> = (0..ni)
                .filter(|&s| (s * (1 - t - s)).rem_euclid(ni) == 0)
                .collect();
            if let Some(&s) = ss.choose(rng) {
                break ts_rack(n, t, s).unwrap();
            }
        },
    }
}

/// `π(T)` relabelling: the table of `σ(x) ▷' σ(y) = σ(x ▷ y)`.
pub fn relabel(t: &RackTable, sigma: &Permutation) -> RackTable {
    let n = t.size();
    let mut rows = vec![vec![0; n]; n];
    for x in 1..=n {
        for y in 1..=n {
            rows[sigma.apply(x) - 1][sigma.apply(y) - 1] = sigma.apply(t.op(x, y));
        }
    }
    RackTable::from_rows(&rows).unwrap()
}
