//! Finite groups given by an explicit Cayley table.

use std::collections::{BTreeSet, VecDeque};

use num_integer::Integer;

use crate::error::{Error, Result};

/// A finite group stored as a dense multiplication table over indices `0..order`.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    names: Vec<String>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup(order {})", self.order)
    }
}

impl FiniteGroup {
    /// Validates a Cayley table (Latin square, identity, exhaustive associativity).
    pub fn from_table(table: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!("row {i} has length {}", row.len())));
            }
            let mut seen = vec![false; n];
            for &x in row {
                if x >= n {
                    return Err(Error::InvalidTable(format!("entry {x} out of range in row {i}")));
                }
                if seen[x] {
                    return Err(Error::InvalidTable(format!("row {i} is not a permutation")));
                }
                seen[x] = true;
            }
            flat.extend_from_slice(row);
        }
        for j in 0..n {
            let mut seen = vec![false; n];
            for i in 0..n {
                let x = flat[i * n + j];
                if seen[x] {
                    return Err(Error::InvalidTable(format!("column {j} is not a permutation")));
                }
                seen[x] = true;
            }
        }
        Self::from_flat(n, flat, names, true)
    }

    /// Builds a group from a flat table; `check_assoc` runs the exhaustive associativity test.
    pub(crate) fn from_flat(n: usize, flat: Vec<usize>, names: Option<Vec<String>>, check_assoc: bool) -> Result<Self> {
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| flat[e * n + g] == g && flat[g * n + e] == g))
            .ok_or_else(|| Error::InvalidTable("no identity element".into()))?;
        let mut inverses = vec![usize::MAX; n];
        for g in 0..n {
            let h = (0..n)
                .find(|&h| flat[g * n + h] == identity)
                .ok_or_else(|| Error::InvalidTable(format!("element {g} has no inverse")))?;
            if flat[h * n + g] != identity {
                return Err(Error::InvalidTable(format!("left and right inverse of {g} differ")));
            }
            inverses[g] = h;
        }
        if check_assoc {
            for a in 0..n {
                for b in 0..n {
                    let ab = flat[a * n + b];
                    for c in 0..n {
                        if flat[ab * n + c] != flat[a * n + flat[b * n + c]] {
                            return Err(Error::NotAssociative(a, b, c));
                        }
                    }
                }
            }
        }
        let names = match names {
            Some(names) => {
                if names.len() != n {
                    return Err(Error::InvalidTable(format!("{} names for {n} elements", names.len())));
                }
                let distinct: BTreeSet<&String> = names.iter().collect();
                if distinct.len() != n {
                    return Err(Error::InvalidTable("duplicate element names".into()));
                }
                names
            }
            None => (0..n).map(|i| i.to_string()).collect(),
        };
        Ok(FiniteGroup { order: n, table: flat, identity, inverses, names })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Rows of the Cayley table.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn conjugate(&self, g: usize, by: usize) -> usize {
        // by * g * by^{-1}
        self.mul(self.mul(by, g), self.inv(by))
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn power(&self, a: usize, k: u64) -> usize {
        let mut acc = self.identity;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order).fold(1, |acc, g| acc.lcm(&self.element_order(g)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Closure of a set of generators; returns the sorted element list.
    pub fn generate(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order];
        inside[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order).filter(|&i| inside[i]).collect()
    }

    /// Whether a sorted, duplicate-free element list is a subgroup.
    pub fn is_subgroup(&self, elements: &[usize]) -> bool {
        let mut inside = vec![false; self.order];
        for &x in elements {
            inside[x] = true;
        }
        inside[self.identity]
            && elements
                .iter()
                .all(|&a| inside[self.inv(a)] && elements.iter().all(|&b| inside[self.mul(a, b)]))
    }

    /// A small generating set chosen greedily in index order.
    pub fn generators_of(&self, elements: &[usize]) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = vec![self.identity];
        // prefer elements of large order so that few generators are needed
        let mut candidates: Vec<usize> = elements.to_vec();
        candidates.sort_by_key(|&g| (std::cmp::Reverse(self.element_order(g)), g));
        for g in candidates {
            if current.len() == elements.len() {
                break;
            }
            if current.binary_search(&g).is_err() {
                gens.push(g);
                current = self.generate(&gens);
            }
        }
        gens
    }

    pub fn generators(&self) -> Vec<usize> {
        let all: Vec<usize> = (0..self.order).collect();
        self.generators_of(&all)
    }

    /// Conjugacy classes sorted by (size, minimal element).
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for g in 0..self.order {
            if seen[g] {
                continue;
            }
            let class: BTreeSet<usize> = (0..self.order).map(|x| self.conjugate(g, x)).collect();
            for &c in &class {
                seen[c] = true;
            }
            classes.push(class.into_iter().collect::<Vec<_>>());
        }
        classes.sort_by_key(|c| (c.len(), c[0]));
        classes
    }

    /// Subgroup generated by all commutators of elements of `a` and `b`.
    pub fn commutator_subgroup(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        let gens: BTreeSet<usize> = a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))).map(|(x, y)| self.commutator(x, y)).collect();
        let gens: Vec<usize> = gens.into_iter().collect();
        self.generate(&gens)
    }

    pub fn derived_subgroup(&self) -> Vec<usize> {
        let all: Vec<usize> = (0..self.order).collect();
        self.commutator_subgroup(&all, &all)
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order).filter(|&z| (0..self.order).all(|g| self.mul(z, g) == self.mul(g, z))).collect()
    }

    /// `G ≥ [G,G] ≥ [G,[G,G]] ≥ …` until it stabilizes.
    pub fn lower_central_series(&self) -> Vec<Vec<usize>> {
        let all: Vec<usize> = (0..self.order).collect();
        let mut series = vec![all.clone()];
        loop {
            let next = self.commutator_subgroup(&all, series.last().expect("nonempty series"));
            if &next == series.last().expect("nonempty series") {
                break;
            }
            series.push(next);
        }
        series
    }

    /// Nilpotency class, or `None` when the lower central series stalls above the identity.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let series = self.lower_central_series();
        if series.last().map(Vec::len) == Some(1) {
            Some(series.len() - 1)
        } else {
            None
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class().is_some()
    }

    pub fn is_normal(&self, elements: &[usize]) -> bool {
        let mut inside = vec![false; self.order];
        for &x in elements {
            inside[x] = true;
        }
        elements.iter().all(|&h| (0..self.order).all(|g| inside[self.conjugate(h, g)]))
    }

    /// The subgroup on `elements` as a group in its own right; local index `i`
    /// corresponds to `elements[i]`.
    pub fn induced_subgroup(&self, elements: &[usize]) -> Result<FiniteGroup> {
        if !self.is_subgroup(elements) {
            return Err(Error::InvalidTable("element set is not a subgroup".into()));
        }
        let n = elements.len();
        let mut local = vec![usize::MAX; self.order];
        for (i, &x) in elements.iter().enumerate() {
            local[x] = i;
        }
        let mut flat = Vec::with_capacity(n * n);
        for &a in elements {
            for &b in elements {
                flat.push(local[self.mul(a, b)]);
            }
        }
        let names = elements.iter().map(|&x| self.names[x].clone()).collect();
        Self::from_flat(n, flat, Some(names), false)
    }

    /// Renames elements (used by catalog constructors).
    pub(crate) fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.order);
        self.names = names;
        self
    }
}
