//! Modules `M = ⊕ V_i^{m_i}` built from the fixed irreducible models, and the
//! decomposition of cyclic submodules `K[G]v ⊆ M`.

use std::collections::BTreeMap;

use super::RepData;
use crate::error::{Error, Result};
use crate::exact_linear::{CycMatrix, CycScalar};

/// A direct sum of copies of irreducible models; vectors are concatenations
/// of blocks in component order, one block per copy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmbientModule {
    /// `(irrep index, multiplicity)` pairs.
    pub components: Vec<(usize, usize)>,
    pub total_dim: usize,
}

impl AmbientModule {
    pub fn new(rep: &RepData, components: Vec<(usize, usize)>) -> Result<Self> {
        let mut total_dim = 0;
        for &(i, m) in &components {
            if i >= rep.irrep_count() {
                return Err(Error::DimensionMismatch(format!("no irreducible with index {i}")));
            }
            total_dim += m * rep.dim(i);
        }
        Ok(AmbientModule { components, total_dim })
    }

    /// Splits a vector into `(irrep, copy vector)` blocks.
    pub fn blocks<'a>(&self, rep: &RepData, v: &'a [CycScalar]) -> Result<Vec<(usize, &'a [CycScalar])>> {
        if v.len() != self.total_dim {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in a module of dimension {}",
                v.len(),
                self.total_dim
            )));
        }
        let mut out = Vec::new();
        let mut offset = 0;
        for &(i, m) in &self.components {
            let d = rep.dim(i);
            for _ in 0..m {
                out.push((i, &v[offset..offset + d]));
                offset += d;
            }
        }
        Ok(out)
    }

    /// `g · v` using the block-diagonal action.
    pub fn act(&self, rep: &RepData, g: usize, v: &[CycScalar]) -> Result<Vec<CycScalar>> {
        let mut out = Vec::with_capacity(v.len());
        for (i, block) in self.blocks(rep, v)? {
            out.extend(rep.irreps[i].matrices[g].apply(block)?);
        }
        Ok(out)
    }
}

/// Isomorphism data of `(Kv ⊆ K[G]v)`: multiplicities `l_i` and, for each
/// irreducible with `l_i ≥ 1`, the RREF basis of the span of the component
/// vectors of `v` in `V_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicDecomposition {
    pub multiplicities: Vec<usize>,
    pub points: BTreeMap<usize, CycMatrix>,
}

impl CyclicDecomposition {
    /// `dim K[G]v = Σ l_i dim V_i`.
    pub fn dimension(&self, rep: &RepData) -> usize {
        self.multiplicities.iter().enumerate().map(|(i, &l)| l * rep.dim(i)).sum()
    }
}

/// Canonical decomposition of `K[G]v` for `v ∈ M`: the `V_i`-isotypic part of
/// `K[G]v` is `V_i ⊗ span`, so `l_i` is the rank of the component vectors.
pub fn decompose_cyclic(rep: &RepData, module: &AmbientModule, v: &[CycScalar]) -> Result<CyclicDecomposition> {
    let mut per_irrep: BTreeMap<usize, Vec<Vec<CycScalar>>> = BTreeMap::new();
    for (i, block) in module.blocks(rep, v)? {
        if block.iter().any(|x| !x.is_zero()) {
            per_irrep.entry(i).or_default().push(block.to_vec());
        }
    }
    let mut multiplicities = vec![0; rep.irrep_count()];
    let mut points = BTreeMap::new();
    for (i, rows) in per_irrep {
        let point = CycMatrix::from_rows(rep.conductor, rep.dim(i), rows)?.row_space();
        multiplicities[i] = point.rows();
        points.insert(i, point);
    }
    Ok(CyclicDecomposition { multiplicities, points })
}
