mod common;

use std::collections::BTreeSet;

use common::{as_set, brute_force_subgroups, group, naive_center, naive_class_sizes, naive_derived, SMALL_CATALOG};
use glider_core::group_core::catalog::{cyclic, semidirect_product, twist_g64};
use glider_core::group_core::subgroup::abelian_invariants;
use glider_core::group_core::{
    abelianization, load_group, maximal_subgroups_between, parse_group_file, quotient_group, subgroup_lattice,
    write_group_file, FiniteGroup, Subgroup, DEFAULT_SUBGROUP_BOUND,
};
use glider_core::Error;

fn exhaustively_associative(g: &FiniteGroup) -> bool {
    let n = g.order();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)))))
}

fn by_names(g: &FiniteGroup, names: &[&str]) -> Subgroup {
    let gens: Vec<usize> = names.iter().map(|s| g.index_of(s).unwrap()).collect();
    Subgroup::new(g.generate(&gens))
}

#[test]
fn cyclic_four_is_addition_mod_four() {
    let g = cyclic(4);
    assert_eq!(g.order(), 4);
    for a in 0..4 {
        for b in 0..4 {
            assert_eq!(g.mul(a, b), (a + b) % 4);
        }
    }
}

#[test]
fn quaternion_has_a_single_involution() {
    let g = group("q8");
    let involutions = (0..8).filter(|&x| x != g.identity() && g.mul(x, x) == g.identity()).count();
    assert_eq!(involutions, 1);
}

#[test]
fn catalog_groups_are_associative() {
    for name in SMALL_CATALOG.iter().chain(&["g64_232", "g64_236"]) {
        let g = group(name);
        assert!(exhaustively_associative(&g), "{name}");
        for x in 0..g.order() {
            assert_eq!(g.mul(x, g.inv(x)), g.identity());
            assert_eq!(g.mul(g.identity(), x), x);
        }
    }
}

#[test]
fn class_sizes_match_conjugation_scan() {
    for name in SMALL_CATALOG {
        let g = group(name);
        let mut sizes: Vec<usize> = g.conjugacy_classes().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, naive_class_sizes(&g), "{name}");
        if g.is_abelian() {
            assert_eq!(g.conjugacy_classes().len(), g.order());
        }
    }
    let a4: Vec<usize> = group("a4").conjugacy_classes().iter().map(Vec::len).collect();
    assert_eq!(a4, vec![1, 3, 4, 4]);
    let q8: Vec<usize> = group("q8").conjugacy_classes().iter().map(Vec::len).collect();
    assert_eq!(q8, vec![1, 1, 2, 2, 2]);
}

#[test]
fn derived_subgroups_and_abelianizations() {
    for name in SMALL_CATALOG {
        let g = group(name);
        let derived: BTreeSet<usize> = g.derived_subgroup().into_iter().collect();
        assert_eq!(derived, naive_derived(&g), "{name}");
        let ab = abelianization(&g);
        assert_eq!(ab.quotient.order() * derived.len(), g.order());
        assert!(ab.quotient.is_abelian());
    }
    let q8 = group("q8");
    let minus_one = q8.index_of("-1").unwrap();
    assert_eq!(q8.derived_subgroup(), vec![q8.identity(), minus_one].into_iter().collect::<BTreeSet<_>>().into_iter().collect::<Vec<_>>());
    assert_eq!(abelian_invariants(&abelianization(&q8).quotient), vec![2, 2]);
    assert_eq!(group("a4").derived_subgroup().len(), 4);
    assert_eq!(group("cyclic:6").derived_subgroup().len(), 1);
}

#[test]
fn nilpotency_classes() {
    assert_eq!(group("q8").nilpotency_class(), Some(2));
    assert_eq!(group("cyclic:6").nilpotency_class(), Some(1));
    assert_eq!(group("s3").nilpotency_class(), None);
    assert_eq!(group("a4").nilpotency_class(), None);
    assert_eq!(group("heisenberg:3").nilpotency_class(), Some(2));
    assert_eq!(group("dihedral:8").nilpotency_class(), Some(3));
}

#[test]
fn class_two_iff_derived_central() {
    for name in SMALL_CATALOG.iter().chain(&["dihedral:8"]) {
        let g = group(name);
        let derived: BTreeSet<usize> = g.derived_subgroup().into_iter().collect();
        let center = naive_center(&g);
        let class_at_most_two = matches!(g.nilpotency_class(), Some(c) if c <= 2);
        assert_eq!(class_at_most_two, derived.is_subset(&center), "{name}");
    }
}

#[test]
fn lattice_matches_subset_closure() {
    for name in SMALL_CATALOG.iter().chain(&["dihedral:8", "cyclic:16"]) {
        let g = group(name);
        if g.order() > 16 {
            continue;
        }
        let lattice = subgroup_lattice(&g, DEFAULT_SUBGROUP_BOUND).unwrap();
        let found: BTreeSet<Vec<usize>> = lattice.subgroups.iter().map(|s| s.elements.clone()).collect();
        assert_eq!(found.len(), lattice.len(), "{name}: duplicates");
        assert_eq!(found, brute_force_subgroups(&g), "{name}");
    }
}

#[test]
fn lattice_counts() {
    let count = |name: &str| subgroup_lattice(&group(name), 256).unwrap().len();
    assert_eq!(count("q8"), 6);
    assert_eq!(count("c2xc2"), 5);
    assert_eq!(count("cyclic:5"), 2);
    assert_eq!(count("cyclic:7"), 2);
    assert_eq!(count("d8"), 10);
}

#[test]
fn lattice_is_closed_under_intersection_and_inclusions_are_consistent() {
    for name in ["q8", "a4", "heisenberg:3", "dihedral:6"] {
        let g = group(name);
        let lattice = subgroup_lattice(&g, 256).unwrap();
        for (i, a) in lattice.subgroups.iter().enumerate() {
            for (j, b) in lattice.subgroups.iter().enumerate() {
                assert!(lattice.position(&a.intersection(b)).is_some(), "{name}");
                assert_eq!(lattice.includes[i][j], as_set(b).is_subset(&as_set(a)));
            }
        }
    }
}

#[test]
fn lattice_bound_is_enforced() {
    assert_eq!(
        subgroup_lattice(&group("q8"), 4).unwrap_err(),
        Error::BoundExceeded { order: 8, bound: 4 }
    );
}

#[test]
fn maximal_subgroups_examples() {
    let q8 = group("q8");
    let lattice = subgroup_lattice(&q8, 256).unwrap();
    let derived = Subgroup::new(q8.derived_subgroup());
    let maxes: BTreeSet<Subgroup> =
        maximal_subgroups_between(&lattice, &derived, &Subgroup::whole(&q8)).unwrap().into_iter().collect();
    let expected: BTreeSet<Subgroup> =
        ["i", "j", "k"].iter().map(|x| by_names(&q8, &[x])).collect();
    assert_eq!(maxes, expected);

    let a4 = group("a4");
    let lattice = subgroup_lattice(&a4, 256).unwrap();
    let v4 = Subgroup::new(a4.derived_subgroup());
    assert_eq!(maximal_subgroups_between(&lattice, &v4, &Subgroup::whole(&a4)).unwrap(), vec![v4.clone()]);

    // prime index over the lower subgroup: only the lower subgroup itself
    let c4 = by_names(&q8, &["i"]);
    assert_eq!(maximal_subgroups_between(&subgroup_lattice(&q8, 256).unwrap(), &derived, &c4).unwrap(), vec![derived.clone()]);

    assert!(matches!(
        maximal_subgroups_between(&subgroup_lattice(&q8, 256).unwrap(), &c4, &derived),
        Err(Error::NotContained(_))
    ));
}

#[test]
fn quotients() {
    for name in ["q8", "a4", "s3", "heisenberg:3"] {
        let g = group(name);
        let whole = quotient_group(&g, &Subgroup::whole(&g)).unwrap();
        assert_eq!(whole.quotient.order(), 1);
        let derived = Subgroup::new(g.derived_subgroup());
        let q = quotient_group(&g, &derived).unwrap();
        // projection is a homomorphism with kernel the normal subgroup
        for a in 0..g.order() {
            for b in 0..g.order() {
                assert_eq!(q.projection[g.mul(a, b)], q.quotient.mul(q.projection[a], q.projection[b]));
            }
        }
        let kernel: Vec<usize> = (0..g.order()).filter(|&x| q.projection[x] == q.quotient.identity()).collect();
        assert_eq!(kernel, derived.elements);
        let covered: usize = q.cosets.iter().map(Vec::len).sum();
        assert_eq!(covered, g.order());
    }
    let q8 = group("q8");
    let center = Subgroup::new(q8.center());
    assert_eq!(abelian_invariants(&quotient_group(&q8, &center).unwrap().quotient), vec![2, 2]);
    let a4 = group("a4");
    let q = quotient_group(&a4, &Subgroup::new(a4.derived_subgroup())).unwrap();
    assert_eq!(q.quotient.order(), 3);
    assert!(q.quotient.is_abelian());
    let s3 = group("s3");
    let transposition = by_names(&s3, &["(12)"]);
    assert_eq!(quotient_group(&s3, &transposition).unwrap_err(), Error::NotNormal);
}

#[test]
fn constructions_validate_their_input() {
    let c3 = cyclic(3);
    let c2 = cyclic(2);
    let s3 = semidirect_product(&c3, &c2, |q, n| if q == 1 { (3 - n) % 3 } else { n }).unwrap();
    assert_eq!(s3.order(), 6);
    assert!(!s3.is_abelian());
    assert!(exhaustively_associative(&s3));
    // doubling is not an automorphism of C4
    assert!(matches!(
        semidirect_product(&cyclic(4), &c2, |q, n| if q == 1 { (2 * n) % 4 } else { n }),
        Err(Error::NotAnAction(_))
    ));
    let bad = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 1, 0]];
    assert!(FiniteGroup::from_table(bad, None).is_err());
}

#[test]
fn order_64_pair_matches_the_presentations() {
    for name in ["g64_232", "g64_236"] {
        let g = group(name);
        assert_eq!(g.order(), 64);
        assert_eq!(g.nilpotency_class(), Some(2));
        let derived: BTreeSet<usize> = g.derived_subgroup().into_iter().collect();
        assert_eq!(derived, naive_center(&g));
        assert_eq!(derived.len(), 4);
        let n1 = g.index_of("n1").unwrap();
        let n2 = g.index_of("n2").unwrap();
        let h1 = g.index_of("h1").unwrap();
        let h2 = g.index_of("h2").unwrap();
        assert_eq!(g.element_order(n1), 4);
        assert_eq!(g.element_order(n2), 4);
        assert_eq!(g.mul(n1, n2), g.mul(n2, n1));
        assert_eq!(g.mul(h1, h2), g.mul(h2, h1));
        // h1 acts as n1 ↦ n1, n2 ↦ n1² n2; h2 as n1 ↦ n1 n2², n2 ↦ n2
        let n1sq = g.power(n1, 2);
        let n2sq = g.power(n2, 2);
        assert_eq!(g.conjugate(n1, h1), n1);
        assert_eq!(g.conjugate(n2, h1), g.mul(n1sq, n2));
        assert_eq!(g.conjugate(n1, h2), g.mul(n1, n2sq));
        assert_eq!(g.conjugate(n2, h2), n2);
        let (h1sq, h2sq) = (g.mul(h1, h1), g.mul(h2, h2));
        if name == "g64_232" {
            assert_eq!((h1sq, h2sq), (g.identity(), g.identity()));
        } else {
            assert_eq!((h1sq, h2sq), (n1sq, n2sq));
        }
    }
    assert!(matches!(
        twist_g64(|p, q| (p & q & 1) + 4 * ((p >> 1) & (q >> 1) & 1)),
        Err(Error::NotACocycle(..))
    ));
}

#[test]
fn group_files_round_trip() {
    let g = group("s3");
    let text = write_group_file(&g);
    let back = parse_group_file(&text).unwrap();
    assert_eq!(back.table_rows(), g.table_rows());
    assert_eq!(back.names(), g.names());
    let dir = std::env::temp_dir().join(format!("glider-core-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("s3.txt");
    std::fs::write(&path, &text).unwrap();
    let loaded = load_group(path.to_str().unwrap()).unwrap();
    assert_eq!(loaded.table_rows(), g.table_rows());
    std::fs::remove_dir_all(&dir).unwrap();
    assert!(parse_group_file("order 2\n0 1\n1 1\n").is_err());
    assert!(matches!(load_group("no-such-group"), Err(Error::UnknownGroup(_))));
}
