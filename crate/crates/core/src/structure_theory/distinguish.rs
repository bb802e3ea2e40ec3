//! Comparing two groups by representation-ring and glider-ring invariants.

use serde::Serialize;

use crate::error::Result;
use crate::group_core::subgroup::subgroup_profile;
use crate::group_core::{subgroup_lattice, FiniteGroup};
use crate::rep_theory::RepData;

/// Subgroups of a given order with given abelianization invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProfileEntry {
    pub order: usize,
    pub abelianization: Vec<usize>,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupInvariants {
    pub order: usize,
    pub class_count: usize,
    /// Sorted character degrees.
    pub degrees: Vec<usize>,
    pub subgroup_count: usize,
    pub subgroup_profile: Vec<ProfileEntry>,
}

impl GroupInvariants {
    pub fn compute(group: &FiniteGroup, subgroup_bound: usize) -> Result<Self> {
        let rep = RepData::new(group.clone(), group.exponent() as u32)?;
        let mut degrees = rep.degrees();
        degrees.sort_unstable();
        let lattice = subgroup_lattice(group, subgroup_bound)?;
        let subgroup_profile = subgroup_profile(group, &lattice.subgroups)
            .into_iter()
            .map(|((order, abelianization), count)| ProfileEntry { order, abelianization, count })
            .collect();
        Ok(GroupInvariants {
            order: group.order(),
            class_count: rep.classes.len(),
            degrees,
            subgroup_count: lattice.len(),
            subgroup_profile,
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DistinguishReport {
    pub left: GroupInvariants,
    pub right: GroupInvariants,
    /// Degree multisets and class counts agree.
    pub representation_invariants_equal: bool,
    /// Subgroup counts or profiles differ.
    pub glider_invariants_differ: bool,
    pub glider_distinguishable: bool,
}

pub fn distinguish(left: &FiniteGroup, right: &FiniteGroup, subgroup_bound: usize) -> Result<DistinguishReport> {
    let left = GroupInvariants::compute(left, subgroup_bound)?;
    let right = GroupInvariants::compute(right, subgroup_bound)?;
    let representation_invariants_equal =
        left.order == right.order && left.class_count == right.class_count && left.degrees == right.degrees;
    let glider_invariants_differ =
        left.subgroup_count != right.subgroup_count || left.subgroup_profile != right.subgroup_profile;
    Ok(DistinguishReport {
        glider_distinguishable: representation_invariants_equal && glider_invariants_differ,
        left,
        right,
        representation_invariants_equal,
        glider_invariants_differ,
    })
}
