//! Canonical keys `(A, B)` of irreducible length-one gliders.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;

use crate::exact_linear::{CycMatrix, CycScalar};
use crate::rep_theory::{decompose_cyclic, AmbientModule, CyclicDecomposition, RepData};
use crate::error::Result;

/// `A` is a set of `G^ab` elements (the linear constituents `T_z`), `B` maps
/// each irreducible of dimension at least two to an RREF basis of a subspace
/// of its model. The key with both parts empty is the zero glider.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GliderKey {
    pub a: BTreeSet<usize>,
    pub b: BTreeMap<usize, CycMatrix>,
}

/// Component rows of a key: for every irreducible index, the vectors spanning
/// the chosen subspace of its model.
pub type Components = BTreeMap<usize, Vec<Vec<CycScalar>>>;

impl GliderKey {
    pub fn zero() -> Self {
        GliderKey { a: BTreeSet::new(), b: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_empty() && self.b.is_empty()
    }

    /// Key `({z}, ∅)` of a single linear character.
    pub fn linear(z: usize) -> Self {
        GliderKey { a: BTreeSet::from([z]), b: BTreeMap::new() }
    }

    /// Key `(A, ∅)`.
    pub fn from_linear_set(a: impl IntoIterator<Item = usize>) -> Self {
        GliderKey { a: a.into_iter().collect(), b: BTreeMap::new() }
    }

    /// The unit `({1}, ∅)`.
    pub fn unit(rep: &RepData) -> Self {
        Self::linear(rep.linear.trivial())
    }

    /// The regular glider `(K·1 ⊆ K[G])`: every linear character and the full
    /// space of every higher-dimensional model.
    pub fn regular(rep: &RepData) -> Self {
        let a = (0..rep.linear.count()).collect();
        let b = (0..rep.irrep_count())
            .filter(|&i| rep.dim(i) >= 2)
            .map(|i| (i, CycMatrix::identity(rep.conductor, rep.dim(i))))
            .collect();
        GliderKey { a, b }
    }

    /// Canonicalizes arbitrary component vectors (rows are reduced per irreducible).
    pub fn from_components(rep: &RepData, components: Components) -> Result<Self> {
        let mut key = GliderKey::zero();
        for (i, rows) in components {
            let rows: Vec<Vec<CycScalar>> = rows.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect();
            if rows.is_empty() {
                continue;
            }
            if let Some(z) = rep.irrep_to_linear[i] {
                key.a.insert(z);
            } else {
                let point = CycMatrix::from_rows(rep.conductor, rep.dim(i), rows)?.row_space();
                key.b.insert(i, point);
            }
        }
        Ok(key)
    }

    /// Key of a cyclic decomposition.
    pub fn from_decomposition(rep: &RepData, decomposition: &CyclicDecomposition) -> Self {
        let mut key = GliderKey::zero();
        for (&i, point) in &decomposition.points {
            match rep.irrep_to_linear[i] {
                Some(z) => {
                    key.a.insert(z);
                }
                None => {
                    key.b.insert(i, point.clone());
                }
            }
        }
        key
    }

    /// Representative component vectors: `t_z = 1` for `z ∈ A`, RREF rows for `B`.
    pub fn components(&self, rep: &RepData) -> Components {
        let e = rep.conductor;
        let mut out = Components::new();
        for &z in &self.a {
            out.insert(rep.linear_to_irrep[z], vec![vec![CycScalar::one(e)]]);
        }
        for (&i, m) in &self.b {
            out.insert(i, m.row_vecs());
        }
        out
    }

    /// Ambient module `⊕ V_i^{l_i}` and the vector realizing this key.
    pub fn realize(&self, rep: &RepData) -> (AmbientModule, Vec<CycScalar>) {
        let comps = self.components(rep);
        let mut vector = Vec::new();
        let mut parts = Vec::new();
        for (i, rows) in comps {
            parts.push((i, rows.len()));
            for r in rows {
                vector.extend(r);
            }
        }
        let module = AmbientModule::new(rep, parts).expect("key indices are irreducibles");
        (module, vector)
    }

    /// `m_i = 1` for linear members of `A`, row count of `B[i]`, else 0.
    pub fn multiplicity_vector(&self, rep: &RepData) -> Vec<usize> {
        let mut m = vec![0; rep.irrep_count()];
        for &z in &self.a {
            m[rep.linear_to_irrep[z]] = 1;
        }
        for (&i, p) in &self.b {
            m[i] = p.rows();
        }
        m
    }

    pub fn total_dimension(&self, rep: &RepData) -> usize {
        self.multiplicity_vector(rep).iter().enumerate().map(|(i, &m)| m * rep.dim(i)).sum()
    }

    /// Whether every higher-dimensional part is the full space `*_U`.
    pub fn b_is_full(&self, rep: &RepData) -> bool {
        self.b.iter().all(|(&i, p)| p.rows() == rep.dim(i))
    }
}

/// `canonical_key(v, M)`: the key of `(Kv ⊆ K[G]v)`; zero iff `v = 0`.
pub fn canonical_key(rep: &RepData, module: &AmbientModule, v: &[CycScalar]) -> Result<GliderKey> {
    let decomposition = decompose_cyclic(rep, module, v)?;
    Ok(GliderKey::from_decomposition(rep, &decomposition))
}

/// A small random scalar `n ζ^k` with `|n| ≤ 2`.
pub fn random_scalar<R: Rng>(rng: &mut R, conductor: u32) -> CycScalar {
    let n: i64 = rng.gen_range(-2..=2);
    if n == 0 {
        return CycScalar::zero(conductor);
    }
    let k: i64 = rng.gen_range(0..conductor as i64);
    CycScalar::root_of_unity(conductor, k).scale(&num_rational::BigRational::from_integer(n.into()))
}

/// A random nonzero key: each linear character with probability one half,
/// each higher irreducible with a random subspace (possibly absent).
pub fn random_key<R: Rng>(rng: &mut R, rep: &RepData) -> GliderKey {
    loop {
        let mut comps = Components::new();
        for z in 0..rep.linear.count() {
            if rng.gen_bool(0.5) {
                comps.insert(rep.linear_to_irrep[z], vec![vec![CycScalar::one(rep.conductor)]]);
            }
        }
        for i in 0..rep.irrep_count() {
            let d = rep.dim(i);
            if d < 2 {
                continue;
            }
            let l = rng.gen_range(0..=d);
            let rows: Vec<Vec<CycScalar>> =
                (0..l).map(|_| (0..d).map(|_| random_scalar(rng, rep.conductor)).collect()).collect();
            if !rows.is_empty() {
                comps.insert(i, rows);
            }
        }
        let key = GliderKey::from_components(rep, comps).expect("random rows have model dimension");
        if !key.is_zero() {
            return key;
        }
    }
}
