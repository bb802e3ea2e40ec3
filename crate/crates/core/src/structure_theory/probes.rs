//! Evidence gathering for the obstruction modules `P`, `R`, `E` and the
//! tensor-power linearization of irreducibles.

use std::collections::{BTreeSet, HashSet};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::glider_ring::{random_key, semigroup_orbit, GliderKey, GliderRing};
use crate::rep_theory::RepData;

/// Whether `x` is an idempotent of shape `({1}, D)` with `D ≠ ∅`.
fn is_r_witness(rep: &RepData, x: &GliderKey) -> bool {
    !x.b.is_empty() && x.a.len() == 1 && x.a.contains(&rep.linear.trivial())
}

/// Orbit idempotents of `ℐnd_H^G(({T_H}, ∅))` over all subgroups that have the
/// shape `({1}, D ≠ ∅)`, deduplicated and sorted.
pub fn structured_r_witnesses(ring: &GliderRing, max_iter: usize) -> Result<Vec<GliderKey>> {
    let root = ring.root().clone();
    let mut found = BTreeSet::new();
    for h in &root.lattice()?.subgroups {
        let hctx = ring.context(&root.to_root(h))?;
        let induced = ring.induce(&hctx, &root, &GliderKey::unit(&hctx.rep))?;
        if let Some(idem) = semigroup_orbit(&root, &induced, max_iter).idempotent {
            if is_r_witness(&root.rep, &idem) {
                found.insert(idem);
            }
        }
    }
    Ok(found.into_iter().collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct RProbeReport {
    pub nilpotent: bool,
    /// Idempotents `({1}, D)` with `D ≠ ∅`.
    #[serde(skip)]
    pub witnesses: Vec<GliderKey>,
    pub witness_count: usize,
    pub random_samples: usize,
    /// `true` when the observation agrees with "nilpotent iff no witness".
    pub nilpotent_iff_trivial: bool,
}

/// Searches structured candidates and `samples` seeded random keys.
pub fn r_probe(ring: &GliderRing, samples: usize, seed: u64, max_iter: usize) -> Result<RProbeReport> {
    let root = ring.root().clone();
    let mut found: BTreeSet<GliderKey> = structured_r_witnesses(ring, max_iter)?.into_iter().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let x = random_key(&mut rng, &root.rep);
        if let Some(idem) = semigroup_orbit(&root, &x, max_iter).idempotent {
            if is_r_witness(&root.rep, &idem) {
                found.insert(idem);
            }
        }
    }
    let nilpotent = root.group().is_nilpotent();
    let found_none = found.is_empty();
    Ok(RProbeReport {
        nilpotent,
        witness_count: found.len(),
        witnesses: found.into_iter().collect(),
        random_samples: samples,
        nilpotent_iff_trivial: nilpotent == found_none,
    })
}

/// Smallest `n` with `V^{⊗n}` a sum of linear characters, or `None` when the
/// supports of the tensor powers enter a cycle first.
#[derive(Debug, Clone, Serialize)]
pub struct Linearization {
    pub irrep: usize,
    pub dim: usize,
    pub power: Option<usize>,
}

pub fn class2_linearization(rep: &RepData) -> Vec<Linearization> {
    (0..rep.irrep_count())
        .map(|i| {
            let mut support: BTreeSet<usize> = [i].into();
            let mut seen: HashSet<BTreeSet<usize>> = HashSet::new();
            let mut n = 1;
            let power = loop {
                if support.iter().all(|&k| rep.dim(k) == 1) {
                    break Some(n);
                }
                if !seen.insert(support.clone()) {
                    break None;
                }
                support = support.iter().flat_map(|&k| rep.tensor_decompose(k, i).into_iter().map(|(m, _)| m)).collect();
                n += 1;
            };
            Linearization { irrep: i, dim: rep.dim(i), power }
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct ObstructionReport {
    pub random_samples: usize,
    pub structured_samples: usize,
    pub resolved: usize,
    /// Keys whose orbit did not reach a repeat within the cap.
    #[serde(skip)]
    pub p_unresolved: Vec<GliderKey>,
    /// Orbit idempotents with empty `A`-part.
    #[serde(skip)]
    pub e_witnesses: Vec<GliderKey>,
}

/// Runs orbits of seeded random keys and of structured keys (regular key,
/// single components, induced trivial keys).
pub fn obstruction_probe(ring: &GliderRing, samples: usize, seed: u64, max_iter: usize) -> Result<ObstructionReport> {
    let root = ring.root().clone();
    let rep = &root.rep;
    let mut structured = vec![GliderKey::regular(rep)];
    structured.extend((0..rep.linear.count()).map(GliderKey::linear));
    for i in 0..rep.irrep_count() {
        if rep.dim(i) >= 2 {
            let mut key = GliderKey::zero();
            key.b.insert(i, crate::exact_linear::CycMatrix::identity(rep.conductor, rep.dim(i)));
            structured.push(key);
        }
    }
    for h in &root.lattice()?.subgroups {
        let hctx = ring.context(&root.to_root(h))?;
        structured.push(ring.induce(&hctx, &root, &GliderKey::unit(&hctx.rep))?);
    }
    let structured_samples = structured.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let keys = structured.into_iter().chain((0..samples).map(|_| random_key(&mut rng, rep)));
    let mut resolved = 0;
    let mut p_unresolved = BTreeSet::new();
    let mut e_witnesses = BTreeSet::new();
    for x in keys {
        match semigroup_orbit(&root, &x, max_iter).idempotent {
            Some(idem) => {
                resolved += 1;
                if idem.a.is_empty() {
                    e_witnesses.insert(idem);
                }
            }
            None => {
                p_unresolved.insert(x);
            }
        }
    }
    Ok(ObstructionReport {
        random_samples: samples,
        structured_samples,
        resolved,
        p_unresolved: p_unresolved.into_iter().collect(),
        e_witnesses: e_witnesses.into_iter().collect(),
    })
}
