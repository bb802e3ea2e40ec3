//! Subgroups, the subgroup lattice, quotients and abelian bases.

use std::collections::{BTreeMap, HashSet, VecDeque};

use super::group::FiniteGroup;
use crate::error::{Error, Result};

/// Default upper bound on the group order for lattice enumeration.
pub const DEFAULT_SUBGROUP_BOUND: usize = 256;

/// A subgroup given by its sorted element indices in the parent group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    pub elements: Vec<usize>,
}

impl Subgroup {
    pub fn new(mut elements: Vec<usize>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        Subgroup { elements }
    }

    pub fn whole(group: &FiniteGroup) -> Self {
        Subgroup { elements: (0..group.order()).collect() }
    }

    pub fn trivial(group: &FiniteGroup) -> Self {
        Subgroup { elements: vec![group.identity()] }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&g| other.contains(g))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup { elements: self.elements.iter().copied().filter(|&g| other.contains(g)).collect() }
    }

    /// The subgroup generated by both.
    pub fn join(&self, other: &Subgroup, group: &FiniteGroup) -> Subgroup {
        let mut gens = group.generators_of(&self.elements);
        gens.extend(group.generators_of(&other.elements));
        Subgroup { elements: group.generate(&gens) }
    }

    /// Canonical comparison key: (order, lexicographic elements).
    pub fn sort_key(&self) -> (usize, &[usize]) {
        (self.elements.len(), &self.elements)
    }
}

/// All subgroups of a group with their inclusion relation.
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    pub subgroups: Vec<Subgroup>,
    /// `includes[i][j]` is true when subgroup `i` contains subgroup `j`.
    pub includes: Vec<Vec<bool>>,
}

impl SubgroupLattice {
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn position(&self, h: &Subgroup) -> Option<usize> {
        self.subgroups.iter().position(|s| s == h)
    }
}

fn bits_of(elements: &[usize], words: usize) -> Vec<u64> {
    let mut b = vec![0u64; words];
    for &x in elements {
        b[x / 64] |= 1 << (x % 64);
    }
    b
}

/// Subgroup lattice by cyclic extension: starting from the trivial group,
/// repeatedly join found subgroups with cyclic subgroups.
pub fn subgroup_lattice(group: &FiniteGroup, bound: usize) -> Result<SubgroupLattice> {
    let n = group.order();
    if n > bound {
        return Err(Error::BoundExceeded { order: n, bound });
    }
    let words = n.div_ceil(64);
    // cyclic subgroups with one generator each
    let mut cyclic: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut cyclic_seen = HashSet::new();
    for g in 0..n {
        let c = group.generate(&[g]);
        let bits = bits_of(&c, words);
        if cyclic_seen.insert(bits.clone()) {
            cyclic.push((g, bits));
        }
    }
    let mut found: HashSet<Vec<u64>> = HashSet::new();
    let mut list: Vec<(Vec<usize>, Vec<usize>)> = Vec::new(); // (elements, generators)
    let trivial = vec![group.identity()];
    found.insert(bits_of(&trivial, words));
    list.push((trivial, Vec::new()));
    let mut queue = VecDeque::from([0usize]);
    while let Some(idx) = queue.pop_front() {
        let (elems, gens) = list[idx].clone();
        let bits = bits_of(&elems, words);
        for (g, cbits) in &cyclic {
            if cbits.iter().zip(&bits).all(|(c, b)| c & !b == 0) {
                continue;
            }
            let mut new_gens = gens.clone();
            new_gens.push(*g);
            let closure = group.generate(&new_gens);
            let cb = bits_of(&closure, words);
            if found.insert(cb) {
                list.push((closure, new_gens));
                queue.push_back(list.len() - 1);
            }
        }
    }
    let mut subgroups: Vec<Subgroup> = list.into_iter().map(|(e, _)| Subgroup { elements: e }).collect();
    subgroups.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    let bitsets: Vec<Vec<u64>> = subgroups.iter().map(|s| bits_of(&s.elements, words)).collect();
    let includes = bitsets
        .iter()
        .map(|big| bitsets.iter().map(|small| small.iter().zip(big).all(|(s, b)| s & !b == 0)).collect())
        .collect();
    Ok(SubgroupLattice { subgroups, includes })
}

/// All `L` with `lower ≤ L ⊊ upper` maximal among such subgroups.
pub fn maximal_subgroups_between(
    lattice: &SubgroupLattice,
    lower: &Subgroup,
    upper: &Subgroup,
) -> Result<Vec<Subgroup>> {
    if !lower.is_subset_of(upper) {
        return Err(Error::NotContained("lower subgroup is not contained in the upper one".into()));
    }
    let between: Vec<&Subgroup> = lattice
        .subgroups
        .iter()
        .filter(|s| lower.is_subset_of(s) && s.is_subset_of(upper) && s.order() < upper.order())
        .collect();
    Ok(between
        .iter()
        .filter(|s| !between.iter().any(|t| t.order() > s.order() && s.is_subset_of(t)))
        .map(|s| (*s).clone())
        .collect())
}

/// A quotient `G/N` with its coset table and projection.
#[derive(Debug, Clone)]
pub struct QuotientGroup {
    pub normal_subgroup: Subgroup,
    /// Cosets ordered by their minimal element.
    pub cosets: Vec<Vec<usize>>,
    pub quotient: FiniteGroup,
    pub projection: Vec<usize>,
}

pub fn quotient_group(group: &FiniteGroup, normal: &Subgroup) -> Result<QuotientGroup> {
    if !group.is_subgroup(&normal.elements) {
        return Err(Error::NotContained("not a subgroup".into()));
    }
    if !group.is_normal(&normal.elements) {
        return Err(Error::NotNormal);
    }
    let n = group.order();
    let mut projection = vec![usize::MAX; n];
    let mut cosets: Vec<Vec<usize>> = Vec::new();
    for g in 0..n {
        if projection[g] != usize::MAX {
            continue;
        }
        let mut coset: Vec<usize> = normal.elements.iter().map(|&h| group.mul(g, h)).collect();
        coset.sort_unstable();
        for &x in &coset {
            projection[x] = cosets.len();
        }
        cosets.push(coset);
    }
    let m = cosets.len();
    let mut flat = Vec::with_capacity(m * m);
    for a in &cosets {
        for b in &cosets {
            flat.push(projection[group.mul(a[0], b[0])]);
        }
    }
    let names = cosets
        .iter()
        .map(|c| group.name(c[0]).to_string())
        .collect();
    let quotient = FiniteGroup::from_flat(m, flat, Some(names), false)?;
    Ok(QuotientGroup { normal_subgroup: normal.clone(), cosets, quotient, projection })
}

/// Abelianization `G/G'`.
pub fn abelianization(group: &FiniteGroup) -> QuotientGroup {
    let derived = Subgroup::new(group.derived_subgroup());
    quotient_group(group, &derived).expect("the derived subgroup is normal")
}

/// A decomposition of an abelian group as a direct product of cyclic groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianBasis {
    /// Basis elements with their orders.
    pub generators: Vec<(usize, usize)>,
    /// Exponent coordinates of every element with respect to the basis.
    pub coordinates: Vec<Vec<usize>>,
}

/// Deterministic basis of an abelian group: depth-first search over elements
/// sorted by (decreasing order, index), keeping only independent choices.
pub fn abelian_basis(group: &FiniteGroup) -> Result<AbelianBasis> {
    if !group.is_abelian() {
        return Err(Error::UnsupportedGroup("abelian basis of a non-abelian group".into()));
    }
    let n = group.order();
    let mut candidates: Vec<usize> = (0..n).filter(|&g| g != group.identity()).collect();
    candidates.sort_by_key(|&g| (std::cmp::Reverse(group.element_order(g)), g));
    fn search(
        group: &FiniteGroup,
        candidates: &[usize],
        start: usize,
        chosen: &mut Vec<usize>,
        span: &[usize],
    ) -> bool {
        if span.len() == group.order() {
            return true;
        }
        for (pos, &g) in candidates.iter().enumerate().skip(start) {
            let ord = group.element_order(g);
            let mut gens = chosen.clone();
            gens.push(g);
            let new_span = group.generate(&gens);
            if new_span.len() != span.len() * ord {
                continue;
            }
            chosen.push(g);
            if search(group, candidates, pos + 1, chosen, &new_span) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    let found = search(group, &candidates, 0, &mut chosen, &[group.identity()]);
    debug_assert!(found || n == 1);
    let generators: Vec<(usize, usize)> = chosen.iter().map(|&g| (g, group.element_order(g))).collect();
    let mut coordinates = vec![Vec::new(); n];
    let mut coords = vec![0usize; generators.len()];
    loop {
        let mut x = group.identity();
        for (k, &(g, _)) in generators.iter().enumerate() {
            x = group.mul(x, group.power(g, coords[k] as u64));
        }
        coordinates[x] = coords.clone();
        // odometer increment
        let mut k = 0;
        loop {
            if k == generators.len() {
                return Ok(AbelianBasis { generators, coordinates });
            }
            coords[k] += 1;
            if coords[k] == generators[k].1 {
                coords[k] = 0;
                k += 1;
            } else {
                break;
            }
        }
    }
}

/// Isomorphism-invariant summary of an abelian group: sorted cyclic factor orders.
pub fn abelian_invariants(group: &FiniteGroup) -> Vec<usize> {
    let basis = abelian_basis(group).expect("abelian input");
    let mut orders: Vec<usize> = basis.generators.iter().map(|&(_, o)| o).collect();
    // split into prime powers for a canonical form
    let mut parts = Vec::new();
    for o in orders.drain(..) {
        let mut m = o;
        let mut p = 2;
        while m > 1 {
            if m % p == 0 {
                let mut q = 1;
                while m % p == 0 {
                    m /= p;
                    q *= p;
                }
                parts.push(q);
            }
            p += 1;
        }
    }
    parts.sort_unstable();
    parts
}

/// Multiset of (order, abelianization invariants) over a list of subgroups.
pub fn subgroup_profile(group: &FiniteGroup, subgroups: &[Subgroup]) -> BTreeMap<(usize, Vec<usize>), usize> {
    let mut profile = BTreeMap::new();
    for s in subgroups {
        let h = group.induced_subgroup(&s.elements).expect("lattice members are subgroups");
        let ab = abelianization(&h);
        *profile.entry((s.order(), abelian_invariants(&ab.quotient))).or_insert(0) += 1;
    }
    profile
}
