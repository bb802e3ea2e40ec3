//! Explicit nilpotency witnesses `(x − ℐnd_{𝓛(C)} ℛes_{𝓛(C)}(x))^n = 0`.

use std::collections::BTreeSet;

use super::lattice_maps::l_of;
use crate::error::{Error, Result};
use crate::glider_ring::{semigroup_orbit, GliderKey, GliderRing, GroupContext, RingElement};

/// Outcome of a witness search for one key over the root group.
#[derive(Debug, Clone)]
pub struct NilpotencyWitness {
    /// `A`-part `C` of the orbit idempotent.
    pub idempotent_a: BTreeSet<usize>,
    /// Root indices of `𝓛(C)`.
    pub kernel_subgroup: Vec<usize>,
    /// `d = x − ℐnd ℛes(x)`.
    pub rewrite: RingElement,
    /// Smallest `n` with `d^n = 0`, if found within the bound.
    pub power: Option<usize>,
    /// Largest power tried (`preperiod + period`, at least 1).
    pub bound: usize,
}

impl NilpotencyWitness {
    pub fn verified(&self) -> bool {
        self.power.is_some()
    }
}

/// Smallest `n ≤ bound` with `d^n = 0`.
pub fn nilpotent_power(ctx: &GroupContext, d: &RingElement, bound: usize) -> Option<usize> {
    let mut acc = d.clone();
    for n in 1..=bound {
        if acc.is_zero() {
            return Some(n);
        }
        if n < bound {
            acc = acc.mul(d, ctx);
        }
    }
    None
}

/// Builds and checks the witness for `x` over the root group of `ring`.
pub fn nilpotency_witness(ring: &GliderRing, x: &GliderKey, max_iter: usize) -> Result<NilpotencyWitness> {
    let root = ring.root().clone();
    let orbit = semigroup_orbit(&root, x, max_iter);
    let idem = orbit.idempotent.as_ref().ok_or(Error::Unresolved(max_iter))?;
    if idem.a.is_empty() {
        return Err(Error::EmptyAPart);
    }
    let kernel = l_of(&root.rep, &idem.a);
    let small = ring.context(&root.to_root(&kernel))?;
    let inclusion = ring.inclusion(&root, &small)?;
    let pulled = inclusion.induce(&inclusion.restrict(x));
    let rewrite = RingElement::from_key(x.clone()).sub(&RingElement::from_key(pulled));
    let bound = (orbit.preperiod.unwrap_or(1) + orbit.period.unwrap_or(0)).max(1);
    let power = nilpotent_power(&root, &rewrite, bound);
    Ok(NilpotencyWitness {
        idempotent_a: idem.a.clone(),
        kernel_subgroup: small.root_elements.clone(),
        rewrite,
        power,
        bound,
    })
}

/// Aggregate of witness searches over seeded random keys.
#[derive(Debug, Clone, Default, serde::Serialize)]
pub struct WitnessSummary {
    pub samples: usize,
    pub verified: usize,
    /// Keys whose orbit idempotent has an empty `A`-part.
    pub skipped_empty_a: usize,
    pub unresolved: usize,
    /// Witnesses that did not reach zero within their bound.
    pub failed: usize,
    /// `(n, count)` pairs of witness powers.
    pub powers: Vec<(usize, usize)>,
}

/// Runs [`nilpotency_witness`] on `samples` seeded random keys.
pub fn witness_probe(ring: &GliderRing, samples: usize, seed: u64, max_iter: usize) -> Result<WitnessSummary> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut summary = WitnessSummary { samples, ..Default::default() };
    let mut powers = std::collections::BTreeMap::new();
    for _ in 0..samples {
        let x = crate::glider_ring::random_key(&mut rng, &ring.root().rep);
        match nilpotency_witness(ring, &x, max_iter) {
            Ok(w) => match w.power {
                Some(n) => {
                    summary.verified += 1;
                    *powers.entry(n).or_insert(0) += 1;
                }
                None => summary.failed += 1,
            },
            Err(Error::EmptyAPart) => summary.skipped_empty_a += 1,
            Err(Error::Unresolved(_)) => summary.unresolved += 1,
            Err(e) => return Err(e),
        }
    }
    summary.powers = powers.into_iter().collect();
    Ok(summary)
}
