use std::collections::BTreeSet;

use bicrossed::linear::{format_rational, parse_rational, rational, LinearMap};
use bicrossed::samples::{cyclic_table, partial_orders, two_object_groupoid};
use bicrossed::twisting::DEFAULT_LIMIT;
use bicrossed::{
    bracket_to_twisting, derive_twisting, enumerate_brackets, enumerate_twisting_systems,
    extract_simple, matched_pair_to_twisting, twisted_tensor_product, twisting_to_bracket,
    twisting_to_matched_pair, validate_bracket, validate_twisting_system, FiniteCategory, Functor,
};
use proptest::prelude::*;

/// Z_n with its elements relabelled by `perm`.
fn relabelled_cyclic(n: usize, perm: &[usize]) -> FiniteCategory {
    let base = cyclic_table(n);
    let mut inv = vec![0; n];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    let table: Vec<Vec<usize>> =
        (0..n).map(|i| (0..n).map(|j| perm[base[inv[i]][inv[j]]]).collect()).collect();
    FiniteCategory::from_group(&table, perm[0]).unwrap()
}

fn shuffled(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = LinearMap> {
    proptest::collection::vec((-3i64..=3, 1i64..=3), rows * cols).prop_map(move |v| {
        LinearMap::from_fn(rows, cols, |r, c| {
            let (p, q) = v[r * cols + c];
            rational(p, q)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabelled_groups_are_valid_groupoids((n, perm) in (1usize..=6).prop_flat_map(|n| (Just(n), shuffled(n)))) {
        let g = relabelled_cyclic(n, &perm);
        prop_assert!(g.validate().is_valid());
        prop_assert!(g.is_groupoid());
        let inv = g.inverse_table().unwrap();
        for f in 0..n {
            prop_assert_eq!(g.compose(f, inv[f]), Some(g.identity(0)));
            prop_assert_eq!(g.compose(inv[f], f), Some(g.identity(0)));
        }
    }

    #[test]
    fn corrupted_composition_matches_brute_force_axioms(n in 2usize..=5, pick in any::<prop::sample::Index>(), shift in 1usize..5) {
        let g = FiniteCategory::cyclic_group(n);
        let mut entries = g.compose_entries();
        let i = pick.index(entries.len());
        entries[i].2 = (entries[i].2 + 1 + shift % (n - 1)) % n;
        let bad = FiniteCategory::new(1, g.morphisms().to_vec(), g.identities().to_vec(), entries).unwrap();
        let e = bad.identity(0);
        let c = |f, h| bad.compose(f, h).unwrap();
        let lawful = (0..n).all(|f| c(e, f) == f && c(f, e) == f)
            && (0..n).all(|f| (0..n).all(|h| (0..n).all(|k| c(c(f, h), k) == c(f, c(h, k)))));
        prop_assert_eq!(bad.validate().is_valid(), lawful);
    }

    #[test]
    fn functor_identity_is_neutral((n, perm) in (1usize..=5).prop_flat_map(|n| (Just(n), shuffled(n)))) {
        let c = FiniteCategory::cyclic_group(n);
        let d = relabelled_cyclic(n, &perm);
        let iso = Functor { objects: vec![0], morphisms: perm.clone() };
        prop_assert!(iso.validate(&c, &d).is_valid());
        prop_assert_eq!(iso.after(&Functor::identity(&c)), iso.clone());
        prop_assert_eq!(Functor::identity(&d).after(&iso), iso.clone());
        let back = iso.inverse(&c, &d).unwrap();
        prop_assert_eq!(back.after(&iso), Functor::identity(&c));
    }

    #[test]
    fn groupoid_iff_inverses_exist(n in 1usize..=3, pick in any::<prop::sample::Index>()) {
        let orders = partial_orders(n);
        let rel = &orders[pick.index(orders.len())];
        let c = FiniteCategory::from_preorder(n, rel).unwrap();
        let discrete = rel.iter().all(|&(x, y)| x == y);
        prop_assert_eq!(c.is_groupoid(), discrete);
        prop_assert_eq!(c.inverse_table().is_some(), c.is_groupoid());
        prop_assert!(c.is_thin());
    }

    #[test]
    fn interchange_law(a in small_matrix(2, 3), b in small_matrix(3, 2), c in small_matrix(2, 2), d in small_matrix(2, 1)) {
        let lhs = a.tensor(&c).compose(&b.tensor(&d));
        let rhs = a.compose(&b).tensor(&c.compose(&d));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rational_text_round_trip(p in -1000i64..1000, q in 1i64..1000) {
        let r = rational(p, q);
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn poset_brackets_round_trip(n in 1usize..=3, i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let orders = partial_orders(n);
        let a = FiniteCategory::from_preorder(n, &orders[i.index(orders.len())]).unwrap();
        let b = FiniteCategory::from_preorder(n, &orders[j.index(orders.len())]).unwrap();
        for bf in enumerate_brackets(&a, &b, DEFAULT_LIMIT).unwrap() {
            prop_assert!(validate_bracket(&a, &b, &bf).unwrap().is_valid());
            let r = bracket_to_twisting(&a, &b, &bf).unwrap();
            prop_assert!(validate_twisting_system(&a, &b, &r).is_valid());
            prop_assert_eq!(twisting_to_bracket(&a, &b, &r).unwrap(), bf);
        }
    }
}

#[test]
fn group_matched_pairs_round_trip() {
    for (p, q) in [(2, 2), (3, 2), (2, 3), (4, 2)] {
        let a = FiniteCategory::cyclic_group(p);
        let b = FiniteCategory::cyclic_group(q);
        let systems = enumerate_twisting_systems(&a, &b, DEFAULT_LIMIT).unwrap();
        assert!(!systems.is_empty());
        for r in &systems {
            let st = extract_simple(&a, &b, r).expect("group systems are simple");
            let mp = twisting_to_matched_pair(&st);
            let again = matched_pair_to_twisting(&mp).unwrap().to_twisting(&a, &b).unwrap();
            assert_eq!(&again, r);
        }
    }
}

#[test]
fn corrupted_twisting_entry_is_rejected() {
    let g = two_object_groupoid();
    let r = enumerate_twisting_systems(&g, &g, DEFAULT_LIMIT).unwrap().remove(0);
    let p = twisted_tensor_product(&g, &g, &r).unwrap();
    let d = derive_twisting(&p.category, &p.alpha.morphisms, &p.beta.morphisms).unwrap();
    assert_eq!(d.twisting, r);
    let targets: BTreeSet<_> = r.entries().map(|(_, v)| v).collect();
    let ((f, h), v) = r.entries().next().unwrap();
    let other = targets.into_iter().find(|&w| w != v).unwrap();
    let mut bad = r.clone();
    bad.set(f, h, other);
    assert!(!validate_twisting_system(&g, &g, &bad).is_valid());
}
