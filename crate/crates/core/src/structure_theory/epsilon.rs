//! The orthogonal idempotents attached to chain terminals.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::One;
use serde::Serialize;

use super::chain::ChainData;
use super::lattice_maps::a_iota;
use crate::error::Result;
use crate::glider_ring::{GliderKey, GliderRing, GroupContext, RingElement};
use crate::group_core::{maximal_subgroups_between, Subgroup};

/// `ε_H` together with its expansion in the key basis.
#[derive(Debug, Clone)]
pub struct EpsilonIdempotent {
    /// Root indices of the terminal subgroup.
    pub subgroup: Vec<usize>,
    /// The idempotent key whose chain ends at `subgroup`.
    pub leading_key: GliderKey,
    pub element: RingElement,
}

impl EpsilonIdempotent {
    /// Terms other than the leading key.
    pub fn tail(&self) -> RingElement {
        let mut tail = self.element.clone();
        tail.add_term(self.leading_key.clone(), -self.element.coefficient(&self.leading_key));
        tail
    }

    /// Leading coefficient 1 and every tail key has an `A`-part containing
    /// that of the leading key.
    pub fn has_canonical_form(&self) -> bool {
        self.element.coefficient(&self.leading_key).is_one()
            && self.tail().terms().keys().all(|k| k.a.is_superset(&self.leading_key.a))
    }

    /// The stronger form in which every tail `A`-part strictly contains the
    /// leading one. It fails when the chain terminal is `G'` and `C = G^ab`.
    pub fn has_strict_canonical_form(&self) -> bool {
        self.has_canonical_form() && self.tail().terms().keys().all(|k| k.a.len() > self.leading_key.a.len())
    }
}

/// Summary row used in reports.
#[derive(Debug, Clone, Serialize)]
pub struct EpsilonSummary {
    pub subgroup_order: usize,
    pub terms: usize,
    pub idempotent: bool,
    pub canonical_form: bool,
    pub strict_canonical_form: bool,
}

/// `ε(H, K) = M_{(A_ι(H),∅)} · ∏_{L ∈ 𝓜(H/K')} (M_{({T_K},∅)} − M_{(A_ι(L),∅)})`
/// in the ring of `ctx = K`, for `K' ≤ H ≤ K` given in local indices of `K`.
pub fn epsilon_subgroup(ctx: &GroupContext, h: &Subgroup) -> Result<RingElement> {
    let rep = &ctx.rep;
    let derived = Subgroup::new(ctx.group().derived_subgroup());
    let linear_key = |set: BTreeSet<usize>| RingElement::from_key(GliderKey::from_linear_set(set));
    let mut element = linear_key(a_iota(rep, h)?);
    let unit = RingElement::from_key(GliderKey::unit(rep));
    for l in maximal_subgroups_between(ctx.lattice()?, &derived, h)? {
        let factor = unit.sub(&linear_key(a_iota(rep, &l)?));
        element = element.mul(&factor, ctx);
        if element.is_zero() {
            break;
        }
    }
    Ok(element)
}

/// `ε(C, D) = ∏_{i<m} ℐnd_{H_i}^G(ε(H_{i+1}, H_i)) · ℐnd_{H_m}^G(ε(H_m, H_m))`.
pub fn epsilon_chain(ring: &GliderRing, chain: &ChainData) -> Result<EpsilonIdempotent> {
    let root = ring.root().clone();
    let mut element = RingElement::from_key(GliderKey::unit(&root.rep));
    let levels = &chain.levels;
    for (i, level) in levels.iter().enumerate() {
        let ctx: &Arc<GroupContext> = &level.context;
        let factor = match levels.get(i + 1) {
            Some(next) => epsilon_subgroup(ctx, &ctx.to_local(&next.context.root_elements)?)?,
            None => epsilon_subgroup(ctx, &Subgroup::whole(ctx.group()))?,
        };
        let induced = factor.induce(&*ring.inclusion(&root, ctx)?);
        element = element.mul(&induced, &root);
    }
    Ok(EpsilonIdempotent {
        subgroup: chain.terminal_elements().to_vec(),
        leading_key: chain.start_key.clone(),
        element,
    })
}

/// `ε·ε = ε`.
pub fn is_idempotent_element(ctx: &GroupContext, x: &RingElement) -> bool {
    &x.mul(x, ctx) == x
}
