//! Brute-force oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use glider_core::exact_linear::{CycMatrix, CycScalar};
use glider_core::group_core::{catalog, FiniteGroup, Subgroup};
use glider_core::rep_theory::{AmbientModule, RepData};

/// Catalog groups of order at most 27 used across the suites.
pub const SMALL_CATALOG: &[&str] = &[
    "cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:5", "cyclic:6", "cyclic:8", "c2xc2", "s3", "q8", "d8",
    "dihedral:5", "dihedral:6", "a4", "heisenberg:2", "heisenberg:3",
];

pub fn group(name: &str) -> FiniteGroup {
    catalog(name).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn rep(name: &str) -> RepData {
    let g = group(name);
    let e = g.exponent() as u32;
    RepData::new(g, e).unwrap()
}

/// Every subset containing the identity that is closed under multiplication.
pub fn brute_force_subgroups(g: &FiniteGroup) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    assert!(n <= 20, "subset enumeration is only for tiny groups");
    let others: Vec<usize> = (0..n).filter(|&x| x != g.identity()).collect();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << others.len()) {
        let mut elems = vec![g.identity()];
        elems.extend(others.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &x)| x));
        let set: BTreeSet<usize> = elems.iter().copied().collect();
        if elems.iter().all(|&a| elems.iter().all(|&b| set.contains(&g.mul(a, b)))) {
            out.insert(set.into_iter().collect());
        }
    }
    out
}

/// Closure of a generating set by repeated multiplication.
pub fn closure(g: &FiniteGroup, gens: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = gens.clone();
    set.insert(g.identity());
    loop {
        let new: BTreeSet<usize> =
            set.iter().flat_map(|&a| set.iter().map(move |&b| g.mul(a, b))).collect();
        if new.len() == set.len() {
            return set;
        }
        set = new;
    }
}

/// `[G, G]` from all commutators `a⁻¹ b⁻¹ a b`.
pub fn naive_derived(g: &FiniteGroup) -> BTreeSet<usize> {
    let n = g.order();
    let comms: BTreeSet<usize> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)))
        .collect();
    closure(g, &comms)
}

/// Conjugacy class sizes by scanning `h g h⁻¹`.
pub fn naive_class_sizes(g: &FiniteGroup) -> Vec<usize> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut sizes = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let class: BTreeSet<usize> = (0..n).map(|h| g.mul(g.mul(h, x), g.inv(h))).collect();
        for &c in &class {
            seen[c] = true;
        }
        sizes.push(class.len());
    }
    sizes.sort_unstable();
    sizes
}

/// Center by direct commutation checks.
pub fn naive_center(g: &FiniteGroup) -> BTreeSet<usize> {
    (0..g.order()).filter(|&z| (0..g.order()).all(|h| g.mul(z, h) == g.mul(h, z))).collect()
}

pub fn as_set(s: &Subgroup) -> BTreeSet<usize> {
    s.elements.iter().copied().collect()
}

/// Rank of the literal orbit `{g·v : g ∈ G}`.
pub fn orbit_span_rank(rep: &RepData, module: &AmbientModule, v: &[CycScalar]) -> usize {
    let rows: Vec<Vec<CycScalar>> = (0..rep.order()).map(|g| module.act(rep, g, v).unwrap()).collect();
    CycMatrix::from_rows(rep.conductor, module.total_dim, rows).unwrap().rank()
}

/// Rank of the orbit vectors projected onto the blocks of irreducible `i`.
pub fn isotypic_projection_rank(rep: &RepData, module: &AmbientModule, v: &[CycScalar], i: usize) -> usize {
    let mut mask = Vec::with_capacity(module.total_dim);
    for &(k, m) in &module.components {
        mask.extend(std::iter::repeat_n(k == i, m * rep.dim(k)));
    }
    let rows: Vec<Vec<CycScalar>> = (0..rep.order())
        .map(|g| {
            module
                .act(rep, g, v)
                .unwrap()
                .into_iter()
                .zip(&mask)
                .filter(|(_, &keep)| keep)
                .map(|(x, _)| x)
                .collect()
        })
        .collect();
    let width = mask.iter().filter(|&&k| k).count();
    if width == 0 {
        return 0;
    }
    CycMatrix::from_rows(rep.conductor, width, rows).unwrap().rank()
}

/// Index in the abelianization of the element with the given name.
pub fn linear(rep: &RepData, name: &str) -> usize {
    rep.linear.abelianization.quotient.index_of(name).unwrap_or_else(|| panic!("no element `{name}`"))
}

/// The unique irreducible of dimension at least two, if there is exactly one.
pub fn only_higher(rep: &RepData) -> usize {
    let higher: Vec<usize> = (0..rep.irrep_count()).filter(|&i| rep.dim(i) >= 2).collect();
    assert_eq!(higher.len(), 1);
    higher[0]
}

pub fn ring(name: &str) -> glider_core::glider_ring::GliderRing {
    glider_core::glider_ring::GliderRing::new(group(name)).unwrap()
}

/// `Σ_H |H / [H, H]|` over the given subgroups.
pub fn abelianization_order_sum(g: &FiniteGroup, subgroups: &BTreeSet<Vec<usize>>) -> usize {
    subgroups
        .iter()
        .map(|h| {
            let comms: BTreeSet<usize> = h
                .iter()
                .flat_map(|&a| h.iter().map(move |&b| (a, b)))
                .map(|(a, b)| g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)))
                .collect();
            h.len() / closure(g, &comms).len()
        })
        .sum()
}

/// Linear characters trivial on `h`, read off the character table.
pub fn characters_trivial_on(rep: &RepData, h: &[usize]) -> BTreeSet<usize> {
    (0..rep.linear.count())
        .filter(|&z| {
            let chi = &rep.characters[rep.linear_to_irrep[z]];
            h.iter().all(|&g| chi.values[rep.class_of[g]].is_one())
        })
        .collect()
}

/// Subgroups generated by at most two elements; this is every subgroup when
/// all subgroups are 2-generated (e.g. groups of order `p³`).
pub fn two_generated_subgroups(g: &FiniteGroup) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    (0..n)
        .flat_map(|a| (a..n).map(move |b| (a, b)))
        .map(|(a, b)| closure(g, &BTreeSet::from([a, b])).into_iter().collect())
        .collect()
}
