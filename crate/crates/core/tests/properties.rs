mod common;

use std::sync::OnceLock;

use common::all_labelled_up_to;
use groupoid_core::analysis::{anchor, is_group_bundle, is_transitive, isotropy_group};
use groupoid_core::morphisms::{canonical_key, groups_isomorphic};
use groupoid_core::verify::{
    check_associativity, check_identities, check_inverses, validate_structure,
};
use groupoid_core::{
    are_isomorphic, canonical_form, classify_structure, parse_structure_file, to_structure_string,
    Bijection, FiniteAlgebra, Groupoid, Level,
};
use proptest::prelude::*;

fn pool() -> &'static [Groupoid] {
    static POOL: OnceLock<Vec<Groupoid>> = OnceLock::new();
    POOL.get_or_init(|| all_labelled_up_to(5))
}

fn any_groupoid() -> impl Strategy<Value = Groupoid> {
    (0..pool().len()).prop_map(|i| pool()[i].clone())
}

/// A unit-preserving bijection on `1..=n`.
fn relabeling(n: usize, m: usize) -> impl Strategy<Value = Bijection> {
    let units: Vec<usize> = (1..=m).collect();
    let rest: Vec<usize> = (m + 1..=n).collect();
    (Just(units).prop_shuffle(), Just(rest).prop_shuffle())
        .prop_map(|(u, r)| Bijection::new(u.into_iter().chain(r).collect()).unwrap())
}

fn groupoid_and_relabeling() -> impl Strategy<Value = (Groupoid, Bijection)> {
    any_groupoid().prop_flat_map(|g| {
        let f = relabeling(g.n(), g.m());
        (Just(g), f)
    })
}

fn groupoid_and_two_relabelings() -> impl Strategy<Value = (Groupoid, Bijection, Bijection)> {
    any_groupoid().prop_flat_map(|g| {
        let (n, m) = g.type_pair();
        (Just(g), relabeling(n, m), relabeling(n, m))
    })
}

fn relabeled(g: &Groupoid, f: &Bijection) -> Groupoid {
    Groupoid::new(f.transport(g)).expect("relabeling keeps the axioms")
}

/// Any algebra with values in range, mostly malformed.
fn any_algebra() -> impl Strategy<Value = FiniteAlgebra> {
    (1usize..=4)
        .prop_flat_map(|n| (Just(n), 1..=n))
        .prop_flat_map(|(n, m)| {
            let v = proptest::collection::vec(0..=n, 3 * n + n * n);
            (Just(n), Just(m), v)
        })
        .prop_map(|(n, m, v)| {
            FiniteAlgebra::from_flat(n, m, &v[..n], &v[n..2 * n], &v[2 * n..3 * n], &v[3 * n..])
                .unwrap()
        })
}

/// A groupoid with a few cells of its tables overwritten.
fn damaged_groupoid() -> impl Strategy<Value = FiniteAlgebra> {
    any_groupoid()
        .prop_flat_map(|g| {
            let n = g.n();
            let edits = proptest::collection::vec((0..3 * n + n * n, 0..=n), 1..3);
            (Just(g), edits)
        })
        .prop_map(|(g, edits)| {
            let n = g.n();
            let mut a = g.into_inner();
            for (at, v) in edits {
                match at {
                    i if i < n => a.set_u_left(i + 1, v).unwrap(),
                    i if i < 2 * n => a.set_u_right(i - n + 1, v).unwrap(),
                    i if i < 3 * n => a.set_inv(i - 2 * n + 1, v).unwrap(),
                    i => {
                        let c = i - 3 * n;
                        a.set_entry(c / n + 1, c % n + 1, v).unwrap()
                    }
                }
            }
            a
        })
}

fn check_verdict(a: &FiniteAlgebra) -> Result<(), TestCaseError> {
    let verdict = classify_structure(a);
    prop_assert_eq!(verdict, classify_structure(&a.clone()));
    let stages = [
        validate_structure(a),
        check_associativity(a),
        check_identities(a),
        check_inverses(a),
    ];
    let passed = stages.iter().take_while(|s| s.is_ok()).count();
    match verdict.diagnostic {
        None => {
            prop_assert_eq!(verdict.level, Level::Groupoid);
            prop_assert_eq!(passed, 4);
        }
        Some(d) => {
            prop_assert!(d.is_violated_by(a), "witness does not re-check: {}", d);
            prop_assert_eq!(d.code.level(), verdict.level);
            prop_assert_eq!(stages[passed], Err(d));
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn diagnostics_recheck_on_random_algebras(a in any_algebra()) {
        check_verdict(&a)?;
    }

    #[test]
    fn diagnostics_recheck_on_damaged_groupoids(a in damaged_groupoid()) {
        check_verdict(&a)?;
    }

    #[test]
    fn relabeling_preserves_the_class((g, f) in groupoid_and_relabeling()) {
        let h = relabeled(&g, &f);
        prop_assert_eq!(canonical_key(&g), canonical_key(&h));
        prop_assert_eq!(canonical_form(&g).0, canonical_form(&h).0);
        let found = are_isomorphic(&g, &h).expect("relabeling is an isomorphism");
        prop_assert_eq!(&found.transport(&g), h.as_algebra());
    }

    #[test]
    fn isomorphism_is_an_equivalence((g, f, f2) in groupoid_and_two_relabelings()) {
        let h = relabeled(&g, &f);
        let k = relabeled(&h, &f2);
        prop_assert!(are_isomorphic(&g, &g).is_some());
        let gh = are_isomorphic(&g, &h).unwrap();
        let hk = are_isomorphic(&h, &k).unwrap();
        prop_assert_eq!(&gh.inverse().transport(&h), g.as_algebra());
        prop_assert_eq!(&gh.then(&hk).transport(&g), k.as_algebra());
        prop_assert!(are_isomorphic(&h, &g).is_some());
        prop_assert!(are_isomorphic(&g, &k).is_some());
    }

    #[test]
    fn isomorphisms_carry_anchors_along_units((g, f) in groupoid_and_relabeling()) {
        let h = relabeled(&g, &f);
        let iso = are_isomorphic(&g, &h).unwrap();
        let mut carried: Vec<(usize, usize)> = g
            .elements()
            .map(|x| {
                let (u, v) = anchor(&g, x).unwrap();
                (iso.apply(u), iso.apply(v))
            })
            .collect();
        let mut target: Vec<(usize, usize)> = h.elements().map(|x| anchor(&h, x).unwrap()).collect();
        carried.sort_unstable();
        target.sort_unstable();
        prop_assert_eq!(carried, target);
    }

    #[test]
    fn class_invariants_survive_relabeling((g, f) in groupoid_and_relabeling()) {
        let h = relabeled(&g, &f);
        prop_assert_eq!(is_transitive(&g), is_transitive(&h));
        prop_assert_eq!(is_group_bundle(&g), is_group_bundle(&h));
        for u in g.units() {
            let before = isotropy_group(&g, u).unwrap();
            let after = isotropy_group(&h, f.apply(u)).unwrap();
            prop_assert!(groups_isomorphic(&before, &after));
        }
    }

    #[test]
    fn different_classes_are_not_isomorphic(a in any_groupoid(), b in any_groupoid()) {
        prop_assert_eq!(
            canonical_key(&a) == canonical_key(&b),
            are_isomorphic(&a, &b).is_some()
        );
    }

    #[test]
    fn parse_write_fixpoint(a in any_algebra()) {
        let text = to_structure_string(&a);
        let back = parse_structure_file(&text).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(to_structure_string(&back), text);
    }

    #[test]
    fn parse_accepts_any_body_spacing(g in any_groupoid(), gaps in proptest::collection::vec(0usize..3, 64)) {
        let text = to_structure_string(&g);
        let mut lines = text.lines();
        let mut reflowed = format!("{}\n{}\n", lines.next().unwrap(), lines.next().unwrap());
        let tokens: Vec<&str> = lines.flat_map(str::split_ascii_whitespace).collect();
        for (i, tok) in tokens.iter().enumerate() {
            reflowed.push_str(tok);
            reflowed.push_str(["  ", "\n", "\t"][gaps[i % gaps.len()]]);
        }
        prop_assert_eq!(&parse_structure_file(&reflowed).unwrap(), g.as_algebra());
    }
}
