//! Verification of the decomposition `⊕_{H ∈ Sub(G)} ℚ[H^ab] → ℚ(G̃)/N`
//! through the idempotents `ε_H`.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use super::chain::{sub_g, ChainData};
use super::epsilon::{epsilon_chain, is_idempotent_element, EpsilonIdempotent, EpsilonSummary};
use super::probes::structured_r_witnesses;
use super::witness::nilpotent_power;
use crate::error::Result;
use crate::exact_linear::{CycMatrix, CycScalar};
use crate::glider_ring::serialize::{format_key, key_to_json};
use crate::glider_ring::{GliderKey, GliderRing, RingElement};

/// Default number of sampled multiplicativity pairs.
pub const DEFAULT_MULTIPLICATIVITY_SAMPLES: usize = 50;
/// Default cap on the power used in multiplicativity witnesses.
pub const DEFAULT_WITNESS_POWER: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Falsified,
    /// The input is not nilpotent; only the structural checks were run.
    Partial,
    /// Some orbit did not resolve within the iteration cap.
    Unresolved,
}

#[derive(Debug, Clone)]
pub struct DecomposeOptions {
    pub max_iter: usize,
    pub samples: usize,
    pub seed: u64,
    pub max_power: usize,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        DecomposeOptions {
            max_iter: crate::glider_ring::DEFAULT_MAX_ITER,
            samples: DEFAULT_MULTIPLICATIVITY_SAMPLES,
            seed: 0,
            max_power: DEFAULT_WITNESS_POWER,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SubgroupEntry {
    pub elements: Vec<String>,
    pub order: usize,
    pub abelianization_order: usize,
    pub chain_orders: Vec<usize>,
    pub leading_key: Value,
    pub leading_key_text: String,
}

/// One sampled pair `(H, h), (H', h')` with `d = φ(h)φ(h') − [H = H'] φ(hh')`.
#[derive(Debug, Clone, Serialize)]
pub struct MultiplicativitySample {
    pub left: (usize, String),
    pub right: (usize, String),
    /// Smallest `n` with `d^n = 0`, or `None` if the cap was reached.
    pub power: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionReport {
    pub order: usize,
    pub nilpotent: bool,
    pub sub_g: Vec<SubgroupEntry>,
    pub subgroup_count: usize,
    pub sub_g_is_all_subgroups: bool,
    pub coverage_caveat: bool,
    pub unresolved: Vec<Value>,
    pub chain_properties_hold: bool,
    pub epsilons: Vec<EpsilonSummary>,
    /// Diagonal: `ε_H` idempotent; off-diagonal: `ε_H ε_{H'} = 0`.
    pub orthogonality: Vec<Vec<bool>>,
    pub orthogonal: bool,
    pub dims: usize,
    pub image_rank: usize,
    pub seed: u64,
    pub multiplicativity: Vec<MultiplicativitySample>,
    /// Idempotents `({1}, D)` with `D ≠ ∅` (reported for non-nilpotent input).
    pub r_witnesses: Vec<Value>,
    pub verdict: Verdict,
    #[serde(skip)]
    pub epsilon_elements: Vec<EpsilonIdempotent>,
    #[serde(skip)]
    pub chains: Vec<ChainData>,
}

/// Checks (i) level keys are restrictions of the start key and idempotent,
/// (iii) inducing each level key back gives the start key.
pub fn chain_properties(ring: &GliderRing, chain: &ChainData) -> Result<bool> {
    let root = ring.root().clone();
    for level in &chain.levels {
        let inclusion = ring.inclusion(&root, &level.context)?;
        if inclusion.restrict(&chain.start_key) != level.key
            || !level.context.is_idempotent(&level.key)
            || inclusion.induce(&level.key) != chain.start_key
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rank over `ℚ` of a family of ring elements in the key basis.
pub fn rational_rank(elements: &[RingElement]) -> usize {
    let mut columns: BTreeMap<&GliderKey, usize> = BTreeMap::new();
    for e in elements {
        for k in e.terms().keys() {
            let next = columns.len();
            columns.entry(k).or_insert(next);
        }
    }
    let rows: Vec<Vec<CycScalar>> = elements
        .iter()
        .map(|e| {
            let mut row = vec![CycScalar::zero(1); columns.len()];
            for (k, q) in e.terms() {
                row[columns[k]] = CycScalar::from_rational(1, q.clone());
            }
            row
        })
        .collect();
    CycMatrix::from_rows(1, columns.len(), rows).map(|m| m.rank()).unwrap_or(0)
}

/// Builds `Sub(G)`, the `ε_H`, the image family `ℐnd_H^G(M_h)·ε_H` and
/// sampled multiplicativity witnesses.
pub fn decompose(ring: &GliderRing, options: &DecomposeOptions) -> Result<DecompositionReport> {
    let root = ring.root().clone();
    let group = root.group();
    let nilpotent = group.is_nilpotent();
    let subs = sub_g(ring, options.max_iter)?;
    let subgroup_count = root.lattice()?.len();
    let chains: Vec<ChainData> = subs.terminals.values().cloned().collect();

    let mut chain_ok = true;
    let mut epsilons = Vec::with_capacity(chains.len());
    for chain in &chains {
        chain_ok &= chain_properties(ring, chain)?;
        epsilons.push(epsilon_chain(ring, chain)?);
    }

    let n = epsilons.len();
    let mut orthogonality = vec![vec![false; n]; n];
    for i in 0..n {
        orthogonality[i][i] = is_idempotent_element(&root, &epsilons[i].element);
        for j in (i + 1)..n {
            let zero = epsilons[i].element.mul(&epsilons[j].element, &root).is_zero();
            orthogonality[i][j] = zero;
            orthogonality[j][i] = zero;
        }
    }
    let orthogonal = orthogonality.iter().all(|r| r.iter().all(|&b| b));

    // image family, indexed by (terminal index, element of H^ab)
    let mut images: Vec<Vec<RingElement>> = Vec::with_capacity(n);
    let mut entries = Vec::with_capacity(n);
    for (chain, eps) in chains.iter().zip(&epsilons) {
        let hctx = chain.terminal().clone();
        let inclusion = ring.inclusion(&root, &hctx)?;
        let row: Vec<RingElement> = (0..hctx.rep.linear.count())
            .map(|h| RingElement::from_key(inclusion.induce(&GliderKey::linear(h))).mul(&eps.element, &root))
            .collect();
        images.push(row);
        entries.push(SubgroupEntry {
            elements: hctx.root_elements.iter().map(|&g| group.name(g).to_string()).collect(),
            order: hctx.order(),
            abelianization_order: hctx.rep.linear.count(),
            chain_orders: chain.orders(),
            leading_key: key_to_json(&root.rep, &chain.start_key),
            leading_key_text: format_key(&root.rep, &chain.start_key),
        });
    }
    let dims: usize = images.iter().map(Vec::len).sum();
    let flat: Vec<RingElement> = images.iter().flatten().cloned().collect();
    let image_rank = rational_rank(&flat);

    let basis: Vec<(usize, usize)> =
        images.iter().enumerate().flat_map(|(t, row)| (0..row.len()).map(move |h| (t, h))).collect();
    let mut pairs: Vec<((usize, usize), (usize, usize))> = Vec::new();
    for (a, &x) in basis.iter().enumerate() {
        for &y in &basis[a..] {
            pairs.push((x, y));
        }
    }
    if pairs.len() > options.samples {
        let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
        pairs.shuffle(&mut rng);
        pairs.truncate(options.samples);
        pairs.sort_unstable();
    }
    let mut multiplicativity = Vec::with_capacity(pairs.len());
    for ((t1, h1), (t2, h2)) in pairs {
        let mut d = images[t1][h1].mul(&images[t2][h2], &root);
        if t1 == t2 {
            let hh = chains[t1].terminal().rep.linear.product(h1, h2);
            d = d.sub(&images[t1][hh]);
        }
        let name = |t: usize, h: usize| chains[t].terminal().rep.linear.name(h).to_string();
        multiplicativity.push(MultiplicativitySample {
            left: (t1, name(t1, h1)),
            right: (t2, name(t2, h2)),
            power: nilpotent_power(&root, &d, options.max_power),
        });
    }

    let r_witnesses = if nilpotent {
        Vec::new()
    } else {
        structured_r_witnesses(ring, options.max_iter)?.iter().map(|k| key_to_json(&root.rep, k)).collect()
    };

    let canonical = !nilpotent || epsilons.iter().all(EpsilonIdempotent::has_canonical_form);
    let all_ok = chain_ok
        && orthogonal
        && canonical
        && image_rank == dims
        && multiplicativity.iter().all(|m| m.power.is_some())
        && (!nilpotent || subs.terminals.len() == subgroup_count);
    let verdict = if !subs.unresolved.is_empty() {
        Verdict::Unresolved
    } else if !nilpotent {
        Verdict::Partial
    } else if all_ok {
        Verdict::Verified
    } else {
        Verdict::Falsified
    };

    Ok(DecompositionReport {
        order: group.order(),
        nilpotent,
        sub_g_is_all_subgroups: subs.terminals.len() == subgroup_count,
        sub_g: entries,
        subgroup_count,
        coverage_caveat: subs.coverage_caveat,
        unresolved: subs.unresolved.iter().map(|k| key_to_json(&root.rep, k)).collect(),
        chain_properties_hold: chain_ok,
        epsilons: epsilons
            .iter()
            .zip(&orthogonality)
            .enumerate()
            .map(|(i, (e, row))| EpsilonSummary {
                subgroup_order: e.subgroup.len(),
                terms: e.element.len(),
                idempotent: row[i],
                canonical_form: e.has_canonical_form(),
                strict_canonical_form: e.has_strict_canonical_form(),
            })
            .collect(),
        orthogonality,
        orthogonal,
        dims,
        image_rank,
        seed: options.seed,
        multiplicativity,
        r_witnesses,
        verdict,
        epsilon_elements: epsilons,
        chains,
    })
}
