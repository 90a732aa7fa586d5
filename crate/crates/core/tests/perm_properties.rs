use proptest::prelude::*;
use regmap::perm::{closure, element_order, evaluate_word, subgroup_index, GroupClosure, Perm};

fn perm_strategy(degree: usize) -> impl Strategy<Value = Perm> {
    Just((0..degree as u16).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Exhaustive closure audit, feasible for the small groups generated below.
fn assert_closed(g: &GroupClosure) {
    for a in g.elements() {
        assert!(g.contains(&a.inverse()));
        for b in g.elements() {
            assert!(g.contains(&a.then(b)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative(a in perm_strategy(9), b in perm_strategy(9), c in perm_strategy(9)) {
        prop_assert_eq!(a.then(&b).then(&c), a.then(&b.then(&c)));
        prop_assert!(a.then(&a.inverse()).is_identity());
        prop_assert!(a.inverse().then(&a).is_identity());
    }

    #[test]
    fn text_format_roundtrips(a in perm_strategy(12)) {
        prop_assert_eq!(a.to_string().parse::<Perm>().unwrap(), a);
    }

    #[test]
    fn element_order_is_cyclic_group_order(a in perm_strategy(10)) {
        let cyclic = closure(std::slice::from_ref(&a), factorial(10)).unwrap();
        prop_assert_eq!(element_order(&a), cyclic.order());
        prop_assert!(a.pow(element_order(&a) as i64).is_identity());
    }

    #[test]
    fn closures_are_groups_and_lagrange_holds(a in perm_strategy(6), b in perm_strategy(6)) {
        let g = closure(&[a.clone(), b.clone()], factorial(6)).unwrap();
        prop_assert!(g.elements()[0].is_identity());
        prop_assert!(g.contains(&a) && g.contains(&b));
        prop_assert_eq!(factorial(6) % g.order(), 0);
        assert_closed(&g);
        let h = closure(std::slice::from_ref(&a), g.order()).unwrap();
        prop_assert_eq!(subgroup_index(&g, std::slice::from_ref(&a)).unwrap() * h.order(), g.order());
    }

    #[test]
    fn closure_order_is_deterministic(a in perm_strategy(7), b in perm_strategy(7)) {
        let g1 = closure(&[a.clone(), b.clone()], factorial(7)).unwrap();
        let g2 = closure(&[a, b], factorial(7)).unwrap();
        prop_assert_eq!(g1.elements(), g2.elements());
        prop_assert!(g1.elements().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn words_are_products(l in perm_strategy(8), r in perm_strategy(8), word in proptest::collection::vec(0i64..12, 0..5)) {
        let mut expected = Perm::identity(8);
        for &m in &word {
            expected = expected.then(&l);
            for _ in 0..m {
                expected = expected.then(&r);
            }
        }
        prop_assert_eq!(evaluate_word(&l, &r, &word).unwrap(), expected);
    }
}

#[test]
fn s4_order_matches_factorial() {
    let gens: Vec<Perm> = (0..3).map(|i| Perm::from_cycles(4, &[&[i, i + 1]]).unwrap()).collect();
    let g = closure(&gens, 100).unwrap();
    assert_eq!(g.order(), factorial(4));
    assert_closed(&g);
}

#[test]
fn sampled_closure_audit_on_a_large_group() {
    use rand::{Rng, SeedableRng};
    // M = <(0 1 2 3 4 5 6), (0 1)> is S7, too big for the exhaustive audit.
    let gens = [
        Perm::from_cycles(7, &[&[0, 1, 2, 3, 4, 5, 6]]).unwrap(),
        Perm::from_cycles(7, &[&[0, 1]]).unwrap(),
    ];
    let g = closure(&gens, 10_000).unwrap();
    assert_eq!(g.order(), 5040);
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for _ in 0..2000 {
        let a = &g.elements()[rng.gen_range(0..g.order())];
        let b = &g.elements()[rng.gen_range(0..g.order())];
        assert!(g.contains(&a.then(b)));
        assert!(g.contains(&a.inverse()));
    }
}
