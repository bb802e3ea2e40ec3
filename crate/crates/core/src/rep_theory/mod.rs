//! Character tables, explicit irreducible models (monomial strategy), tensor
//! decompositions and cyclic-submodule decomposition.

pub mod ambient;
pub mod character;
pub mod models;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact_linear::{CycMatrix, CycScalar};
use crate::group_core::{subgroup_lattice, FiniteGroup};

pub use ambient::{decompose_cyclic, AmbientModule, CyclicDecomposition};
pub use character::{inner_product, Character, LinearCharacters};
pub use models::{intertwiners, IrrepModel};

/// Values, degree, source subgroup and source exponents of an irreducible
/// found as an induced linear character.
type FoundCharacter = (Vec<CycScalar>, usize, Vec<usize>, Vec<u32>);

/// Character table and irreducible models of one group over `Q(ζ_e)`.
#[derive(Debug, Clone)]
pub struct RepData {
    pub group: FiniteGroup,
    pub conductor: u32,
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    pub class_sizes: Vec<usize>,
    pub linear: LinearCharacters,
    /// Irreducible characters ordered by (degree, trivial first, values).
    pub characters: Vec<Character>,
    pub irreps: Vec<IrrepModel>,
    /// Table index of the linear character `T_z` for each `G^ab` element `z`.
    pub linear_to_irrep: Vec<usize>,
    /// Inverse of `linear_to_irrep` on degree-one characters.
    pub irrep_to_linear: Vec<Option<usize>>,
    pub generators: Vec<usize>,
}

impl RepData {
    /// Builds the table by inducing linear characters of subgroups (largest
    /// first) and keeping norm-one results until `Σ d² = |G|`.
    pub fn new(group: FiniteGroup, conductor: u32) -> Result<Self> {
        let exponent = group.exponent();
        if !(conductor as usize).is_multiple_of(exponent) {
            return Err(Error::DimensionMismatch(format!(
                "conductor {conductor} is not a multiple of the exponent {exponent}"
            )));
        }
        let classes = group.conjugacy_classes();
        let mut class_of = vec![0; group.order()];
        for (c, class) in classes.iter().enumerate() {
            for &g in class {
                class_of[g] = c;
            }
        }
        let class_sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
        let linear = LinearCharacters::new(&group, conductor);
        let all: Vec<usize> = (0..group.order()).collect();

        let mut found: Vec<FoundCharacter> = Vec::new();
        for exps in &linear.exponents {
            let values = classes
                .iter()
                .map(|c| CycScalar::root_of_unity(conductor, exps[c[0]] as i64))
                .collect();
            found.push((values, 1, all.clone(), exps.clone()));
        }
        let mut total: usize = found.len();
        if total < group.order() {
            let lattice = subgroup_lattice(&group, group.order())?;
            let mut seen: BTreeSet<Vec<CycScalar>> = found.iter().map(|f| f.0.clone()).collect();
            for sub in lattice.subgroups.iter().rev() {
                if total == group.order() {
                    break;
                }
                let d = group.order() / sub.order();
                if d == 1 || d * d > group.order() - total {
                    continue;
                }
                let h = group.induced_subgroup(&sub.elements)?;
                let h_linear = LinearCharacters::new(&h, conductor);
                for exps in &h_linear.exponents {
                    let values =
                        character::induced_linear_values(&group, &classes, &sub.elements, exps, conductor);
                    if seen.contains(&values) || !character::is_irreducible(&values, &class_sizes, group.order()) {
                        continue;
                    }
                    seen.insert(values.clone());
                    found.push((values, d, sub.elements.clone(), exps.clone()));
                    total += d * d;
                    if total >= group.order() {
                        break;
                    }
                }
            }
        }
        if total != group.order() {
            return Err(Error::UnsupportedGroup(format!(
                "monomial construction reached Σ d² = {total} < |G| = {}",
                group.order()
            )));
        }
        let trivial_values: Vec<CycScalar> = classes.iter().map(|_| CycScalar::one(conductor)).collect();
        found.sort_by(|a, b| {
            (a.1, a.0 != trivial_values, &a.0).cmp(&(b.1, b.0 != trivial_values, &b.0))
        });

        let mut characters = Vec::with_capacity(found.len());
        let mut irreps = Vec::with_capacity(found.len());
        for (idx, (values, degree, source, exps)) in found.into_iter().enumerate() {
            let matrices = models::induced_matrices(&group, &source, &exps, conductor);
            for (c, class) in classes.iter().enumerate() {
                if matrices[class[0]].trace() != values[c] {
                    return Err(Error::UnsupportedGroup("induced model does not reproduce its character".into()));
                }
            }
            characters.push(Character { values, degree });
            irreps.push(IrrepModel {
                character: idx,
                dim: degree,
                matrices,
                source_subgroup: source,
                source_character: exps,
            });
        }
        let linear_to_irrep: Vec<usize> = linear
            .exponents
            .iter()
            .map(|exps| {
                let values: Vec<CycScalar> =
                    classes.iter().map(|c| CycScalar::root_of_unity(conductor, exps[c[0]] as i64)).collect();
                characters.iter().position(|ch| ch.values == values).expect("linear characters are in the table")
            })
            .collect();
        let mut irrep_to_linear = vec![None; characters.len()];
        for (z, &i) in linear_to_irrep.iter().enumerate() {
            irrep_to_linear[i] = Some(z);
        }
        let generators = group.generators();
        Ok(RepData {
            group,
            conductor,
            classes,
            class_of,
            class_sizes,
            linear,
            characters,
            irreps,
            linear_to_irrep,
            irrep_to_linear,
            generators,
        })
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn irrep_count(&self) -> usize {
        self.characters.len()
    }

    pub fn dim(&self, i: usize) -> usize {
        self.irreps[i].dim
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.characters.iter().map(|c| c.degree).collect()
    }

    pub fn trivial_irrep(&self) -> usize {
        self.linear_to_irrep[self.linear.trivial()]
    }

    /// Value of irreducible character `i` at element `g`.
    pub fn value(&self, i: usize, g: usize) -> &CycScalar {
        &self.characters[i].values[self.class_of[g]]
    }

    pub fn inner(&self, a: &Character, b: &Character) -> CycScalar {
        inner_product(a, b, &self.class_sizes, self.order())
    }

    /// Multiplicity of every irreducible in a character.
    pub fn decompose_character(&self, chi: &Character) -> Vec<(usize, usize)> {
        self.characters
            .iter()
            .enumerate()
            .filter_map(|(k, psi)| {
                let m = self.inner(chi, psi).as_rational().expect("multiplicities are rational");
                let m: usize = m.to_integer().try_into().expect("multiplicities are nonnegative");
                (m > 0).then_some((k, m))
            })
            .collect()
    }

    /// Constituents of `V_i ⊗ V_j` with multiplicities.
    pub fn tensor_decompose(&self, i: usize, j: usize) -> Vec<(usize, usize)> {
        let prod = character::product(&self.characters[i], &self.characters[j]);
        self.decompose_character(&prod)
    }

    /// Restriction of a character to a subgroup described by `small` with
    /// `embedding[h]` = index in this group of local element `h`.
    pub fn restrict_character(&self, chi: &Character, small: &RepData, embedding: &[usize]) -> Character {
        let values = small
            .classes
            .iter()
            .map(|c| chi.values[self.class_of[embedding[c[0]]]].clone())
            .collect();
        Character { values, degree: chi.degree }
    }

    /// Frobenius induction of a character of a subgroup.
    pub fn induce_character(&self, psi: &Character, small: &RepData, embedding: &[usize]) -> Character {
        let e = self.conductor;
        let mut local = vec![usize::MAX; self.order()];
        for (h, &g) in embedding.iter().enumerate() {
            local[g] = h;
        }
        let scale = BigRational::new(BigInt::one(), BigInt::from(small.order()));
        let values: Vec<CycScalar> = self
            .classes
            .iter()
            .map(|class| {
                let g = class[0];
                let mut acc = CycScalar::zero(e);
                for x in 0..self.order() {
                    let c = self.group.conjugate(g, x);
                    if local[c] != usize::MAX {
                        acc += &psi.values[small.class_of[local[c]]];
                    }
                }
                acc.scale(&scale)
            })
            .collect();
        let degree = psi.degree * self.order() / small.order();
        Character { values, degree }
    }

    /// Action of `g` on `V_i ⊗ V_j` (Kronecker index `a * d_j + b`).
    pub fn tensor_matrix(&self, i: usize, j: usize, g: usize) -> CycMatrix {
        self.irreps[i].matrices[g].kron(&self.irreps[j].matrices[g])
    }

    /// Identity class index.
    pub fn identity_class(&self) -> usize {
        self.class_of[self.group.identity()]
    }
}
