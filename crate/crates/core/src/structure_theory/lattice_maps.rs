//! The order-reversing maps between subgroups `G' ≤ H ≤ G` and subgroups of
//! `G^ab` given by kernels of linear characters.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::group_core::Subgroup;
use crate::rep_theory::RepData;

/// `A_ι(H) = {z ∈ G^ab : T_z restricted to H is trivial}`; requires `G' ≤ H`.
pub fn a_iota(rep: &RepData, h: &Subgroup) -> Result<BTreeSet<usize>> {
    let derived = rep.linear.abelianization.normal_subgroup.clone();
    if !derived.is_subset_of(h) {
        return Err(Error::NotContained("subgroup does not contain the derived subgroup".into()));
    }
    Ok((0..rep.linear.count())
        .filter(|&z| h.elements.iter().all(|&g| rep.linear.exponents[z][g] == 0))
        .collect())
}

/// `𝓛(N) = ∩_{z ∈ N} ker T_z` (the whole group for empty `N`).
pub fn l_of(rep: &RepData, n: &BTreeSet<usize>) -> Subgroup {
    Subgroup::new(
        (0..rep.order())
            .filter(|&g| n.iter().all(|&z| rep.linear.exponents[z][g] == 0))
            .collect(),
    )
}

/// Subgroup of `G^ab` generated by a set of elements.
pub fn generated_in_abelianization(rep: &RepData, set: &BTreeSet<usize>) -> BTreeSet<usize> {
    let q = &rep.linear.abelianization.quotient;
    let gens: Vec<usize> = set.iter().copied().collect();
    q.generate(&gens).into_iter().collect()
}

/// Product set `A·B` inside `G^ab`.
pub fn product_set(rep: &RepData, a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> BTreeSet<usize> {
    a.iter().flat_map(|&x| b.iter().map(move |&y| rep.linear.product(x, y))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_core::catalog;

    #[test]
    fn extremes_and_q8_cyclic() {
        let g = catalog("q8").unwrap();
        let rep = RepData::new(g.clone(), 4).unwrap();
        let whole = Subgroup::whole(&g);
        let trivial_char: BTreeSet<usize> = [rep.linear.trivial()].into();
        assert_eq!(a_iota(&rep, &whole).unwrap(), trivial_char);
        assert_eq!(l_of(&rep, &trivial_char), whole);
        let derived = Subgroup::new(g.derived_subgroup());
        assert_eq!(a_iota(&rep, &derived).unwrap().len(), 4);
        let all: BTreeSet<usize> = (0..4).collect();
        assert_eq!(l_of(&rep, &all), derived);
        let i = g.index_of("i").unwrap();
        let ci = Subgroup::new(g.generate(&[i]));
        let a = a_iota(&rep, &ci).unwrap();
        assert_eq!(a.len(), 2);
        assert!(a.contains(&rep.linear.trivial()));
        assert!(matches!(a_iota(&rep, &Subgroup::trivial(&g)), Err(Error::NotContained(_))));
    }
}
