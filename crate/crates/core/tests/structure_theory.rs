mod common;

use std::collections::BTreeSet;

use common::{abelianization_order_sum, brute_force_subgroups, characters_trivial_on, group, linear, naive_derived, ring};
use glider_core::glider_ring::{GliderKey, RingElement};
use glider_core::group_core::Subgroup;
use glider_core::structure_theory::{
    a_iota, chain_of_idempotent, class2_linearization, decompose, distinguish, epsilon_chain, l_of,
    nilpotency_witness, obstruction_probe, r_probe, sub_g, witness_probe, DecomposeOptions, Verdict,
};

fn subgroups_above_derived(name: &str) -> Vec<Vec<usize>> {
    let g = group(name);
    let derived = naive_derived(&g);
    brute_force_subgroups(&g).into_iter().filter(|h| derived.iter().all(|d| h.contains(d))).collect()
}

#[test]
fn a_iota_matches_the_character_table() {
    for name in ["c2xc2", "s3", "q8", "d8", "a4", "cyclic:6"] {
        let g = ring(name);
        let rep = &g.root().rep;
        for h in subgroups_above_derived(name) {
            let got = a_iota(rep, &Subgroup::new(h.clone())).unwrap();
            assert_eq!(got, characters_trivial_on(rep, &h), "{name}");
            assert_eq!(l_of(rep, &got).elements, h, "{name}");
        }
    }
}

#[test]
fn a_iota_rejects_subgroups_below_the_derived_subgroup() {
    let g = ring("q8");
    let rep = &g.root().rep;
    let trivial = Subgroup::new(vec![rep.group.identity()]);
    assert!(a_iota(rep, &trivial).is_err());
}

#[test]
fn l_of_inverts_a_iota_on_subgroups_of_the_abelianization() {
    for name in ["c2xc2", "q8", "cyclic:6", "heisenberg:2"] {
        let g = ring(name);
        let rep = &g.root().rep;
        let q = &rep.linear.abelianization.quotient;
        for n in brute_force_subgroups(q) {
            let n: BTreeSet<usize> = n.into_iter().collect();
            let l = l_of(rep, &n);
            assert_eq!(a_iota(rep, &l).unwrap(), n, "{name}");
        }
    }
}

#[test]
fn q8_chain_of_an_idempotent() {
    let g = ring("q8");
    let root = g.root().clone();
    let r = &root.rep;
    let x = GliderKey::from_linear_set([r.linear.trivial(), linear(r, "k")]);
    let chain = chain_of_idempotent(&g, &root, &x).unwrap();
    assert_eq!(chain.orders(), vec![8, 4]);
    let k = r.group.index_of("k").unwrap();
    assert_eq!(chain.terminal_elements(), r.group.generate(&[k]).as_slice());
    let last = &chain.levels[1];
    assert_eq!(last.key, GliderKey::unit(&last.context.rep));

    let not_idempotent = GliderKey::from_linear_set([linear(r, "i")]);
    assert!(chain_of_idempotent(&g, &root, &not_idempotent).is_err());
}

#[test]
fn sub_g_is_every_subgroup_for_nilpotent_groups() {
    for name in ["cyclic:4", "cyclic:6", "c2xc2", "q8", "d8", "heisenberg:2"] {
        let g = ring(name);
        let s = sub_g(&g, 1024).unwrap();
        assert!(!s.coverage_caveat);
        assert!(s.unresolved.is_empty());
        let got: BTreeSet<Vec<usize>> = s.subgroups().into_iter().map(|h| h.elements).collect();
        assert_eq!(got, brute_force_subgroups(&group(name)), "{name}");
    }
}

#[test]
fn sub_g_of_non_nilpotent_groups_is_flagged() {
    for name in ["s3", "a4"] {
        let g = ring(name);
        let s = sub_g(&g, 1024).unwrap();
        assert!(s.coverage_caveat);
        assert!(s.subgroups().len() < brute_force_subgroups(&group(name)).len(), "{name}");
    }
}

#[test]
fn epsilon_family_is_orthogonal_and_idempotent() {
    for name in ["cyclic:4", "c2xc2", "q8", "d8"] {
        let g = ring(name);
        let root = g.root().clone();
        let s = sub_g(&g, 1024).unwrap();
        let eps: Vec<RingElement> =
            s.terminals.values().map(|c| epsilon_chain(&g, c).unwrap().element).collect();
        for (i, a) in eps.iter().enumerate() {
            assert_eq!(&a.mul(a, &root), a, "{name}");
            for b in &eps[i + 1..] {
                assert!(a.mul(b, &root).is_zero(), "{name}");
            }
        }
    }
}

#[test]
fn decompose_verifies_small_nilpotent_groups() {
    for name in ["cyclic:2", "cyclic:4", "cyclic:6", "c2xc2", "q8", "d8"] {
        let g = ring(name);
        let report = decompose(&g, &DecomposeOptions::default()).unwrap();
        assert_eq!(report.verdict, Verdict::Verified, "{name}");
        assert_eq!(report.dims, abelianization_order_sum(&group(name), &brute_force_subgroups(&group(name))), "{name}");
        assert_eq!(report.image_rank, report.dims, "{name}");
        assert!(report.orthogonal && report.chain_properties_hold);
        assert!(report.multiplicativity.iter().all(|m| m.power.is_some()));
    }
}

#[test]
fn decompose_is_partial_for_s3() {
    let report = decompose(&ring("s3"), &DecomposeOptions::default()).unwrap();
    assert_eq!(report.verdict, Verdict::Partial);
    assert!(!report.r_witnesses.is_empty());
}

#[test]
fn decompose_is_deterministic_for_a_seed() {
    let options = DecomposeOptions { samples: 5, seed: 9, ..DecomposeOptions::default() };
    let a = decompose(&ring("q8"), &options).unwrap();
    let b = decompose(&ring("q8"), &options).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn nilpotency_witnesses_on_random_keys() {
    for name in ["c2xc2", "q8", "s3", "a4"] {
        let g = ring(name);
        let summary = witness_probe(&g, 30, 4, 1024).unwrap();
        assert_eq!(summary.failed, 0, "{name}");
        assert_eq!(summary.unresolved, 0, "{name}");
        assert_eq!(summary.verified + summary.skipped_empty_a, 30, "{name}");
    }
    let g = ring("q8");
    let r = &g.root().rep;
    let x = GliderKey::from_linear_set([linear(r, "i"), linear(r, "j")]);
    let w = nilpotency_witness(&g, &x, 1024).unwrap();
    assert!(w.verified());
    assert_eq!(w.kernel_subgroup.len(), 4);
}

#[test]
fn r_probe_separates_nilpotent_groups() {
    for (name, nilpotent) in [("q8", true), ("d8", true), ("cyclic:6", true), ("s3", false), ("a4", false)] {
        let report = r_probe(&ring(name), 20, 0, 1024).unwrap();
        assert_eq!(report.nilpotent, nilpotent);
        assert_eq!(report.witness_count == 0, nilpotent, "{name}");
        assert!(report.nilpotent_iff_trivial);
    }
}

#[test]
fn linearization_powers() {
    let q8 = ring("q8");
    let lin = class2_linearization(&q8.root().rep);
    assert!(lin.iter().all(|l| l.power.is_some()));
    assert_eq!(lin.iter().filter(|l| l.dim == 2).map(|l| l.power).collect::<Vec<_>>(), vec![Some(2)]);
    let s3 = ring("s3");
    let lin = class2_linearization(&s3.root().rep);
    assert_eq!(lin.iter().filter(|l| l.dim == 2).map(|l| l.power).collect::<Vec<_>>(), vec![None]);
}

#[test]
fn obstruction_probe_on_small_groups() {
    for name in ["q8", "d8", "s3"] {
        let report = obstruction_probe(&ring(name), 30, 1, 1024).unwrap();
        assert!(report.p_unresolved.is_empty(), "{name}");
        assert!(report.e_witnesses.is_empty(), "{name}");
        assert_eq!(report.resolved, report.random_samples + report.structured_samples);
    }
}

#[test]
fn distinguish_examples() {
    let q8 = group("q8");
    let d8 = group("d8");
    let same = distinguish(&q8, &q8, 256).unwrap();
    assert!(same.representation_invariants_equal);
    assert!(!same.glider_distinguishable);
    let pair = distinguish(&q8, &d8, 256).unwrap();
    assert!(pair.representation_invariants_equal);
    assert!(pair.glider_distinguishable);
    assert_eq!((pair.left.subgroup_count, pair.right.subgroup_count), (6, 10));
    let unequal = distinguish(&q8, &group("s3"), 256).unwrap();
    assert!(!unequal.representation_invariants_equal);
    assert!(!unequal.glider_distinguishable);
}
