use autorbit::catalog::build;
use autorbit::Permutation;
use proptest::prelude::*;

fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(&v).unwrap())
}

fn triple() -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
    (1usize..15).prop_flat_map(|n| (arb_perm(n), arb_perm(n), arb_perm(n)))
}

proptest! {
    #[test]
    fn compose_is_associative((a, b, c) in triple()) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_cancels((a, _, _) in triple()) {
        prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
        prop_assert!(a.inverse().compose(&a).unwrap().is_identity());
        prop_assert_eq!(a.inverse().inverse(), a);
    }

    #[test]
    fn order_kills_the_element((a, _, _) in triple()) {
        let k = a.order();
        let mut x = Permutation::identity(a.degree());
        for i in 1..=k {
            x = x.compose(&a).unwrap();
            prop_assert_eq!(x.is_identity(), i == k);
        }
    }

    #[test]
    fn cycle_notation_round_trips((a, _, _) in triple()) {
        let text = a.to_string();
        prop_assert_eq!(Permutation::parse_cycles(&text, a.degree()).unwrap(), a);
    }

    #[test]
    fn products_of_generators_are_members(word in proptest::collection::vec(0usize..2, 0..40)) {
        let g = build("PSL2(7)").unwrap();
        let mut x = Permutation::identity(g.degree());
        for i in word {
            x = x.compose(&g.generators()[i % g.generators().len()]).unwrap();
        }
        prop_assert!(g.contains(&x).unwrap());
    }
}
