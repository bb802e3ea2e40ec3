//! Explicit matrix models of irreducible representations and intertwiner spaces.

use crate::exact_linear::{CycMatrix, CycScalar};
use crate::group_core::FiniteGroup;

/// Matrix model of an irreducible representation, induced from a linear
/// character of a subgroup.
#[derive(Debug, Clone)]
pub struct IrrepModel {
    /// Index of the character in the table.
    pub character: usize,
    pub dim: usize,
    /// `matrices[g]` for every group element.
    pub matrices: Vec<CycMatrix>,
    /// Sorted elements of the subgroup the model is induced from.
    pub source_subgroup: Vec<usize>,
    /// Exponents of the linear character on `source_subgroup` (`ζ_e^k`).
    pub source_character: Vec<u32>,
}

impl IrrepModel {
    pub fn matrix(&self, g: usize) -> &CycMatrix {
        &self.matrices[g]
    }
}

/// Left transversal of `subgroup`: the identity first, then the least element
/// of every new coset `gH` in index order.
pub fn left_transversal(group: &FiniteGroup, subgroup: &[usize]) -> Vec<usize> {
    let mut covered = vec![false; group.order()];
    let mut reps = Vec::new();
    let mut push = |g: usize, covered: &mut Vec<bool>| {
        for &h in subgroup {
            covered[group.mul(g, h)] = true;
        }
        reps.push(g);
    };
    push(group.identity(), &mut covered);
    for g in 0..group.order() {
        if !covered[g] {
            push(g, &mut covered);
        }
    }
    reps
}

/// Monomial matrices of `Ind_H^G(λ)` on the basis `t_i ⊗ 1`:
/// `ρ(g)[i][j] = λ(t_i^{-1} g t_j)` when that element lies in `H`.
pub fn induced_matrices(group: &FiniteGroup, subgroup: &[usize], exponents: &[u32], conductor: u32) -> Vec<CycMatrix> {
    let mut local = vec![usize::MAX; group.order()];
    for (i, &h) in subgroup.iter().enumerate() {
        local[h] = i;
    }
    let reps = left_transversal(group, subgroup);
    let d = reps.len();
    (0..group.order())
        .map(|g| {
            let mut m = CycMatrix::zeros(conductor, d, d);
            for j in 0..d {
                let gt = group.mul(g, reps[j]);
                for i in 0..d {
                    let x = group.mul(group.inv(reps[i]), gt);
                    if local[x] != usize::MAX {
                        m.set(i, j, CycScalar::root_of_unity(conductor, exponents[local[x]] as i64));
                        break;
                    }
                }
            }
            m
        })
        .collect()
}

/// Basis of `{X : target(g) X = X source(g)}` for the listed generators, as
/// `target_dim x source_dim` matrices; canonical because the kernel is RREF.
pub fn intertwiners(
    conductor: u32,
    generators: &[usize],
    source: impl Fn(usize) -> CycMatrix,
    target: impl Fn(usize) -> CycMatrix,
    source_dim: usize,
    target_dim: usize,
) -> Vec<CycMatrix> {
    let vars = source_dim * target_dim;
    let var = |a: usize, b: usize| a * source_dim + b;
    let mut rows: Vec<Vec<CycScalar>> = Vec::new();
    for &g in generators {
        let s = source(g);
        let t = target(g);
        for a in 0..target_dim {
            for b in 0..source_dim {
                let mut row = vec![CycScalar::zero(conductor); vars];
                for c in 0..target_dim {
                    let x = t.get(a, c);
                    if !x.is_zero() {
                        row[var(c, b)] += x;
                    }
                }
                for c in 0..source_dim {
                    let x = s.get(c, b);
                    if !x.is_zero() {
                        let neg = -x;
                        row[var(a, c)] += &neg;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = if rows.is_empty() {
        CycMatrix::identity(conductor, vars)
    } else {
        CycMatrix::from_rows(conductor, vars, rows).expect("rows have matching length").kernel()
    };
    (0..kernel.rows())
        .map(|r| CycMatrix::from_fn(conductor, target_dim, source_dim, |a, b| kernel.get(r, var(a, b)).clone()))
        .collect()
}
