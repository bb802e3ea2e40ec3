//! Linear characters, class functions and the character table.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::exact_linear::CycScalar;
use crate::group_core::{abelian_basis, abelianization, AbelianBasis, FiniteGroup, QuotientGroup};

/// A class function stored by conjugacy class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Character {
    pub values: Vec<CycScalar>,
    pub degree: usize,
}

/// Linear characters `g ↦ ζ_e^{k(g)}` stored as exponent tables.
#[derive(Debug, Clone)]
pub struct LinearCharacters {
    pub abelianization: QuotientGroup,
    pub basis: AbelianBasis,
    /// `exponents[z][g]`: the character `T_z` sends `g` to `ζ_e^{exponents[z][g]}`.
    pub exponents: Vec<Vec<u32>>,
}

impl LinearCharacters {
    /// The characters of `G^ab`, indexed by `G^ab` elements through the pairing
    /// `T_z(w) = Π_j ζ_{n_j}^{a_j b_j}` in the chosen cyclic basis.
    pub fn new(group: &FiniteGroup, conductor: u32) -> Self {
        let ab = abelianization(group);
        let basis = abelian_basis(&ab.quotient).expect("abelianization is abelian");
        let m = ab.quotient.order();
        let e = conductor as usize;
        let mut exponents = vec![vec![0u32; group.order()]; m];
        for (z, row) in exponents.iter_mut().enumerate() {
            let a = &basis.coordinates[z];
            for (g, slot) in row.iter_mut().enumerate() {
                let b = &basis.coordinates[ab.projection[g]];
                let mut k = 0usize;
                for (j, &(_, n_j)) in basis.generators.iter().enumerate() {
                    assert!(e.is_multiple_of(n_j), "conductor {e} not divisible by {n_j}");
                    k += a[j] * b[j] * (e / n_j);
                }
                *slot = (k % e) as u32;
            }
        }
        LinearCharacters { abelianization: ab, basis, exponents }
    }

    pub fn count(&self) -> usize {
        self.exponents.len()
    }

    /// Index of the `G^ab` element whose character is the product `T_z T_w`.
    pub fn product(&self, z: usize, w: usize) -> usize {
        self.abelianization.quotient.mul(z, w)
    }

    /// The trivial character's index (identity of `G^ab`).
    pub fn trivial(&self) -> usize {
        self.abelianization.quotient.identity()
    }

    pub fn kernel(&self, z: usize) -> Vec<usize> {
        (0..self.exponents[z].len()).filter(|&g| self.exponents[z][g] == 0).collect()
    }

    /// Name of `G^ab` element `z`.
    pub fn name(&self, z: usize) -> &str {
        self.abelianization.quotient.name(z)
    }
}

/// Exact inner product `⟨χ, ψ⟩ = |G|^{-1} Σ_C |C| χ(C) conj(ψ(C))`.
pub fn inner_product(a: &Character, b: &Character, class_sizes: &[usize], order: usize) -> CycScalar {
    let e = a.values[0].conductor();
    let mut acc = CycScalar::zero(e);
    for ((x, y), &size) in a.values.iter().zip(&b.values).zip(class_sizes) {
        if x.is_zero() || y.is_zero() {
            continue;
        }
        let term = (x * &y.conj()).scale(&BigRational::from_integer(BigInt::from(size)));
        acc += &term;
    }
    acc.scale(&BigRational::new(BigInt::one(), BigInt::from(order)))
}

/// Pointwise product of class functions.
pub fn product(a: &Character, b: &Character) -> Character {
    Character { values: a.values.iter().zip(&b.values).map(|(x, y)| x * y).collect(), degree: a.degree * b.degree }
}

/// Values `Ind_H^G(λ)` on class representatives of `G`, where `λ(h) = ζ^{exponent[h]}`
/// is given on the sorted element list of `H`.
pub fn induced_linear_values(
    group: &FiniteGroup,
    classes: &[Vec<usize>],
    subgroup: &[usize],
    exponents: &[u32],
    conductor: u32,
) -> Vec<CycScalar> {
    let mut local = vec![usize::MAX; group.order()];
    for (i, &h) in subgroup.iter().enumerate() {
        local[h] = i;
    }
    let scale = BigRational::new(BigInt::one(), BigInt::from(subgroup.len()));
    classes
        .iter()
        .map(|class| {
            let g = class[0];
            let mut counts = vec![0i64; conductor as usize];
            for x in 0..group.order() {
                let c = group.conjugate(g, x);
                if local[c] != usize::MAX {
                    counts[exponents[local[c]] as usize] += 1;
                }
            }
            let coeffs: Vec<BigRational> =
                counts.iter().map(|&n| BigRational::from_integer(BigInt::from(n)) * &scale).collect();
            CycScalar::from_exponents(conductor, coeffs.iter().enumerate().map(|(k, q)| (k as i64, q)))
        })
        .collect()
}

/// Norm-one test for a character given by class values.
pub fn is_irreducible(values: &[CycScalar], class_sizes: &[usize], order: usize) -> bool {
    let ch = Character { values: values.to_vec(), degree: 0 };
    inner_product(&ch, &ch, class_sizes, order).is_one()
}

/// Degree read off the identity class value, if it is a positive integer.
pub fn degree_of(values: &[CycScalar], identity_class: usize) -> Option<usize> {
    let q = values[identity_class].as_rational()?;
    if q.is_integer() && q > BigRational::zero() {
        q.to_integer().try_into().ok()
    } else {
        None
    }
}
