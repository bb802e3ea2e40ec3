//! Restriction chains of idempotents and the set of their terminal subgroups.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::lattice_maps::l_of;
use crate::error::{Error, Result};
use crate::glider_ring::{semigroup_orbit, GliderKey, GliderRing, GroupContext};
use crate::group_core::Subgroup;

/// One level `(H_i, M_{(C_i, D_i)})` of a chain.
#[derive(Debug, Clone)]
pub struct ChainLevel {
    pub context: Arc<GroupContext>,
    pub key: GliderKey,
}

/// `G = H_0 ⊋ H_1 ⊋ … ⊋ H_m` with `H_{i+1} = 𝓛(C_i)` computed inside `H_i`
/// and level keys obtained by restriction.
#[derive(Debug, Clone)]
pub struct ChainData {
    pub start_key: GliderKey,
    pub levels: Vec<ChainLevel>,
}

impl ChainData {
    pub fn terminal(&self) -> &Arc<GroupContext> {
        &self.levels.last().expect("chains have at least one level").context
    }

    /// Root indices of the terminal subgroup `H(C, D)`.
    pub fn terminal_elements(&self) -> &[usize] {
        &self.terminal().root_elements
    }

    /// Orders of `H_0, …, H_m`.
    pub fn orders(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.context.order()).collect()
    }
}

/// Builds the chain of an idempotent key with nonempty `A`-part over `ctx`.
pub fn chain_of_idempotent(ring: &GliderRing, ctx: &Arc<GroupContext>, x: &GliderKey) -> Result<ChainData> {
    if !ctx.is_idempotent(x) {
        return Err(Error::NotIdempotent);
    }
    if x.a.is_empty() {
        return Err(Error::EmptyAPart);
    }
    let mut levels = vec![ChainLevel { context: ctx.clone(), key: x.clone() }];
    loop {
        let level = levels.last().expect("nonempty");
        let rep = &level.context.rep;
        let trivial = rep.linear.trivial();
        if level.key.a.len() == 1 && level.key.a.contains(&trivial) {
            break;
        }
        let next_local = l_of(rep, &level.key.a);
        if next_local.order() == level.context.order() {
            return Err(Error::NotContained("chain step did not descend".into()));
        }
        let next_ctx = ring.context(&level.context.to_root(&next_local))?;
        let key = ring.restrict(&level.context, &next_ctx, &level.key)?;
        levels.push(ChainLevel { context: next_ctx, key });
    }
    Ok(ChainData { start_key: x.clone(), levels })
}

/// `Sub(G)` with one chain per terminal.
#[derive(Debug, Clone)]
pub struct SubGroups {
    /// Terminals sorted by (order, elements), each with the first chain found.
    pub terminals: BTreeMap<(usize, Vec<usize>), ChainData>,
    /// Candidate keys whose orbit did not resolve.
    pub unresolved: Vec<GliderKey>,
    /// Set when the group is not nilpotent and the candidate list may be incomplete.
    pub coverage_caveat: bool,
}

impl SubGroups {
    pub fn subgroups(&self) -> Vec<Subgroup> {
        self.terminals.keys().map(|(_, e)| Subgroup::new(e.clone())).collect()
    }
}

/// Terminals of the chains of `ℐnd_H^G(({T_H}, ∅))` for all `H ≤ G`; for
/// non-nilpotent groups also of the orbit idempotents of `ℐnd_H^G(M_z)`.
pub fn sub_g(ring: &GliderRing, max_iter: usize) -> Result<SubGroups> {
    let root = ring.root().clone();
    let nilpotent = root.group().is_nilpotent();
    let lattice = root.lattice()?.clone();
    let mut terminals = BTreeMap::new();
    let mut unresolved = Vec::new();
    for h in &lattice.subgroups {
        let hctx = ring.context(&root.to_root(h))?;
        let mut candidates = vec![GliderKey::unit(&hctx.rep)];
        if !nilpotent {
            candidates.extend((0..hctx.rep.linear.count()).map(GliderKey::linear));
        }
        for cand in candidates {
            let induced = ring.induce(&hctx, &root, &cand)?;
            let orbit = semigroup_orbit(&root, &induced, max_iter);
            let Some(idem) = orbit.idempotent else {
                unresolved.push(induced);
                continue;
            };
            if idem.a.is_empty() {
                continue;
            }
            let chain = chain_of_idempotent(ring, &root, &idem)?;
            let t = chain.terminal_elements().to_vec();
            terminals.entry((t.len(), t)).or_insert(chain);
        }
    }
    Ok(SubGroups { terminals, unresolved, coverage_caveat: !nilpotent })
}
