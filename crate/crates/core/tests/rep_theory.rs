mod common;

use common::{isotypic_projection_rank, orbit_span_rank, rep, SMALL_CATALOG};
use glider_core::exact_linear::CycScalar;
use glider_core::glider_ring::key::random_scalar;
use glider_core::rep_theory::{decompose_cyclic, AmbientModule, RepData};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn column(rep: &RepData, c: usize) -> Vec<CycScalar> {
    rep.characters.iter().map(|chi| chi.values[c].clone()).collect()
}

fn subgroup_rep(big: &RepData, elements: &[usize]) -> RepData {
    RepData::new(big.group.induced_subgroup(elements).unwrap(), big.conductor).unwrap()
}

fn z3(k: i64) -> CycScalar {
    CycScalar::root_of_unity(3, k)
}

#[test]
fn a4_character_table() {
    let r = rep("a4");
    assert_eq!(r.class_sizes, vec![1, 3, 4, 4]);
    assert_eq!(r.degrees(), vec![1, 1, 1, 3]);
    let e = r.conductor;
    let three_cycles: Vec<usize> = vec![2, 3];
    // the two nontrivial linear characters take values ζ₃, ζ₃² on the 3-cycle classes
    let mut seen = Vec::new();
    for chi in &r.characters[1..3] {
        let vals: Vec<CycScalar> = three_cycles.iter().map(|&c| chi.values[c].clone()).collect();
        assert!(vals == vec![z3(1).embed(e), z3(2).embed(e)] || vals == vec![z3(2).embed(e), z3(1).embed(e)]);
        assert!(chi.values[1].is_one());
        seen.push(vals);
    }
    assert_ne!(seen[0], seen[1]);
    let u = &r.characters[3];
    let expected: Vec<CycScalar> = [3, -1, 0, 0].iter().map(|&v| CycScalar::from_int(e, v)).collect();
    assert_eq!(u.values, expected);
}

#[test]
fn degrees_of_small_groups() {
    assert_eq!(rep("q8").degrees(), vec![1, 1, 1, 1, 2]);
    assert_eq!(rep("c2xc2").degrees(), vec![1, 1, 1, 1]);
    assert_eq!(rep("s3").degrees(), vec![1, 1, 2]);
    assert_eq!(rep("heisenberg:3").degrees().iter().filter(|&&d| d == 3).count(), 2);
}

#[test]
fn linear_characters_are_indexed_by_the_abelianization() {
    let q8 = rep("q8");
    assert_eq!(q8.linear.count(), 4);
    let c2 = rep("cyclic:2");
    assert_eq!(c2.linear.count(), 2);
    let sign = &c2.characters[1];
    assert_eq!(sign.values[1], CycScalar::from_int(2, -1));
    for name in SMALL_CATALOG {
        let r = rep(name);
        for z in 0..r.linear.count() {
            for w in 0..r.linear.count() {
                let zw = r.linear.product(z, w);
                for g in 0..r.order() {
                    let e = r.conductor;
                    let lhs = (r.linear.exponents[z][g] + r.linear.exponents[w][g]) % e;
                    assert_eq!(lhs, r.linear.exponents[zw][g], "{name}");
                }
            }
            let i = r.linear_to_irrep[z];
            assert_eq!(r.irrep_to_linear[i], Some(z));
            assert_eq!(r.dim(i), 1);
        }
    }
}

#[test]
fn orthogonality_relations() {
    for name in SMALL_CATALOG.iter().chain(&["g64_232", "g64_236"]) {
        let r = rep(name);
        let e = r.conductor;
        let sum_sq: usize = r.degrees().iter().map(|d| d * d).sum();
        assert_eq!(sum_sq, r.order(), "{name}");
        assert_eq!(r.irrep_count(), r.classes.len());
        for (i, a) in r.characters.iter().enumerate() {
            for (j, b) in r.characters.iter().enumerate() {
                let expected = CycScalar::from_int(e, (i == j) as i64);
                assert_eq!(r.inner(a, b), expected, "{name} rows {i},{j}");
            }
        }
        for c in 0..r.classes.len() {
            for d in 0..r.classes.len() {
                let (x, y) = (column(&r, c), column(&r, d));
                let mut acc = CycScalar::zero(e);
                for (p, q) in x.iter().zip(&y) {
                    acc += &(p * &q.conj());
                }
                let expected = if c == d { (r.order() / r.class_sizes[c]) as i64 } else { 0 };
                assert_eq!(acc, CycScalar::from_int(e, expected), "{name} columns {c},{d}");
            }
        }
    }
}

#[test]
fn models_are_homomorphisms_with_the_right_traces() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for name in SMALL_CATALOG.iter().chain(&["g64_236"]) {
        let r = rep(name);
        let n = r.order();
        let pairs: Vec<(usize, usize)> = if n <= 16 {
            (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect()
        } else {
            (0..500).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect()
        };
        for model in &r.irreps {
            for &(a, b) in &pairs {
                let prod = model.matrices[a].mul(&model.matrices[b]).unwrap();
                assert_eq!(prod, model.matrices[r.group.mul(a, b)], "{name}");
            }
            for g in 0..n {
                assert_eq!(model.matrices[g].trace(), r.characters[model.character].values[r.class_of[g]], "{name}");
            }
        }
    }
}

#[test]
fn q8_two_dimensional_model_is_monomial_over_zeta4() {
    let r = rep("q8");
    let u = &r.irreps[4];
    assert_eq!(u.dim, 2);
    let allowed: Vec<CycScalar> = [(0, 1), (0, -1), (1, 1), (1, -1)]
        .iter()
        .map(|&(k, s)| CycScalar::root_of_unity(4, k).scale(&BigRational::from_integer(BigInt::from(s))))
        .chain(std::iter::once(CycScalar::zero(4)))
        .collect();
    for m in &u.matrices {
        for row in m.row_vecs() {
            assert!(row.iter().all(|x| allowed.contains(x)));
        }
    }
    let trivial = &r.irreps[r.trivial_irrep()];
    assert!(trivial.matrices.iter().all(|m| m.rows() == 1 && m.get(0, 0).is_one()));
}

#[test]
fn tensor_decompositions() {
    let q8 = rep("q8");
    assert_eq!(q8.tensor_decompose(4, 4), vec![(0, 1), (1, 1), (2, 1), (3, 1)]);
    let s3 = rep("s3");
    assert_eq!(s3.tensor_decompose(2, 2), vec![(0, 1), (1, 1), (2, 1)]);
    for name in SMALL_CATALOG {
        let r = rep(name);
        let t = r.trivial_irrep();
        for i in 0..r.irrep_count() {
            assert_eq!(r.tensor_decompose(i, t), vec![(i, 1)], "{name}");
        }
    }
}

#[test]
fn some_tensor_power_contains_the_trivial_character() {
    for name in SMALL_CATALOG {
        let r = rep(name);
        let t = r.trivial_irrep();
        for i in 0..r.irrep_count() {
            let mut support = vec![i];
            let mut hit = false;
            for _ in 1..=r.order() {
                if support.contains(&t) {
                    hit = true;
                    break;
                }
                let mut next: Vec<usize> =
                    support.iter().flat_map(|&k| r.tensor_decompose(k, i).into_iter().map(|(m, _)| m)).collect();
                next.sort_unstable();
                next.dedup();
                support = next;
            }
            assert!(hit, "{name} irreducible {i}");
        }
    }
}

#[test]
fn restriction_and_induction_of_characters() {
    let a4 = rep("a4");
    let g = &a4.group;
    let c3 = g.generate(&[g.index_of("(123)").unwrap()]);
    let small = subgroup_rep(&a4, &c3);
    let res_u = a4.restrict_character(&a4.characters[3], &small, &c3);
    assert_eq!(small.decompose_character(&res_u), vec![(0, 1), (1, 1), (2, 1)]);
    let res_t = a4.restrict_character(&a4.characters[0], &small, &c3);
    assert_eq!(small.decompose_character(&res_t), vec![(small.trivial_irrep(), 1)]);
    let ind_t = a4.induce_character(&small.characters[small.trivial_irrep()], &small, &c3);
    assert_eq!(a4.decompose_character(&ind_t), vec![(0, 1), (3, 1)]);
    // Frobenius reciprocity on every pair
    for i in 0..a4.irrep_count() {
        for k in 0..small.irrep_count() {
            let lhs = a4.inner(&a4.induce_character(&small.characters[k], &small, &c3), &a4.characters[i]);
            let rhs = small.inner(&small.characters[k], &a4.restrict_character(&a4.characters[i], &small, &c3));
            assert_eq!(lhs, rhs);
        }
    }
}

fn module_vector(r: &RepData, blocks: &[(usize, Vec<CycScalar>)]) -> (AmbientModule, Vec<CycScalar>) {
    let comps: Vec<(usize, usize)> = blocks.iter().map(|(i, _)| (*i, 1)).collect();
    let v: Vec<CycScalar> = blocks.iter().flat_map(|(_, b)| b.clone()).collect();
    (AmbientModule::new(r, comps).unwrap(), v)
}

#[test]
fn decompose_cyclic_examples() {
    let q8 = rep("q8");
    let e = q8.conductor;
    let one = CycScalar::one(e);
    let zero = CycScalar::zero(e);
    // U ⊕ U with independent components gives the full space
    let (m, v) = module_vector(&q8, &[(4, vec![one.clone(), zero.clone()]), (4, vec![zero.clone(), one.clone()])]);
    let d = decompose_cyclic(&q8, &m, &v).unwrap();
    assert_eq!(d.multiplicities[4], 2);
    assert_eq!(d.points[&4].rows(), 2);
    // zero vector
    let d0 = decompose_cyclic(&q8, &m, &[zero.clone(), zero.clone(), zero.clone(), zero.clone()]).unwrap();
    assert!(d0.multiplicities.iter().all(|&l| l == 0));
    assert!(d0.points.is_empty());
    // T_b ⊕ T_c ⊕ U with (t_b, t_c, e1 + e2)
    let (m, v) = module_vector(&q8, &[(1, vec![one.clone()]), (2, vec![one.clone()]), (4, vec![one.clone(), one.clone()])]);
    let d = decompose_cyclic(&q8, &m, &v).unwrap();
    assert_eq!(d.multiplicities, vec![0, 1, 1, 0, 1]);
    assert_eq!(d.points[&4].row_vecs(), vec![vec![one.clone(), one.clone()]]);
}

#[test]
fn decompose_cyclic_agrees_with_orbit_span() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for name in ["cyclic:6", "c2xc2", "s3", "q8", "d8", "a4"] {
        let r = rep(name);
        for _ in 0..20 {
            let comps: Vec<(usize, usize)> =
                (0..r.irrep_count()).map(|i| (i, rng.gen_range(0..=2))).filter(|&(_, m)| m > 0).collect();
            let module = AmbientModule::new(&r, comps).unwrap();
            let v: Vec<CycScalar> = (0..module.total_dim).map(|_| random_scalar(&mut rng, r.conductor)).collect();
            let d = decompose_cyclic(&r, &module, &v).unwrap();
            assert_eq!(d.dimension(&r), orbit_span_rank(&r, &module, &v), "{name}");
            for i in 0..r.irrep_count() {
                assert_eq!(d.multiplicities[i] * r.dim(i), isotypic_projection_rank(&r, &module, &v, i), "{name}");
            }
        }
    }
}

#[test]
fn character_ordering_is_by_degree_with_trivial_first() {
    for name in SMALL_CATALOG {
        let r = rep(name);
        assert_eq!(r.trivial_irrep(), 0, "{name}");
        assert!(r.degrees().windows(2).all(|w| w[0] <= w[1]), "{name}");
    }
}
