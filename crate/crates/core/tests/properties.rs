use itertools::Itertools;
use num_bigint::BigUint;
use ordertoric::code::{build_code, min_distance_exact, SearchOptions};
use ordertoric::geometry::{order_polytope, ordinal_sum_equivalence_check, pyramid_equivalence_check};
use ordertoric::predictor::{ideal_count, predict_closed_form, predict_tree};
use ordertoric::{GaloisField, Poset};
use proptest::prelude::*;

// Random cover sets on 1..=m with i < j; rejected when not irredundant.
fn poset(max: usize) -> impl Strategy<Value = Poset> {
    (1..=max)
        .prop_flat_map(|m| {
            let pairs = m * (m - 1) / 2;
            (Just(m), proptest::collection::vec(any::<bool>(), pairs))
        })
        .prop_filter_map("redundant covers", |(m, bits)| {
            let covers: Vec<(usize, usize)> = (1..=m)
                .tuple_combinations()
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(c, _)| c)
                .collect();
            Poset::new(m, &covers).ok()
        })
}

fn tree(max: usize) -> impl Strategy<Value = Poset> {
    (1..=max).prop_flat_map(|m| {
        let parents: Vec<BoxedStrategy<usize>> = (2..=m).map(|i| (1..i).boxed()).collect();
        parents.prop_map(move |ps| {
            let mut list = vec![None];
            list.extend(ps.into_iter().map(Some));
            Poset::rooted_tree(&list).unwrap()
        })
    })
}

fn brute_ideals(p: &Poset) -> u64 {
    (0u64..1 << p.size())
        .filter(|s| p.covers().iter().all(|&(i, j)| s >> (i - 1) & 1 == 0 || s >> (j - 1) & 1 == 1))
        .count() as u64
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ideals_are_order_polytope_vertices(p in poset(6)) {
        let n = brute_ideals(&p);
        prop_assert_eq!(p.count_upper_ideals().unwrap(), n);
        prop_assert_eq!(order_polytope(&p).unwrap().vertices().len() as u64, n);
        prop_assert_eq!(p.opposite().count_upper_ideals().unwrap(), n);
        prop_assert_eq!(p.opposite().opposite(), p);
    }

    #[test]
    fn closed_forms_match_exact_search(p in poset(4)) {
        let code = build_code(&order_polytope(&p).unwrap(), 4).unwrap();
        prop_assert_eq!(code.k() as u64, brute_ideals(&p));
        if let Some(pred) = predict_closed_form(&p, 4).unwrap() {
            let d = min_distance_exact(&code, &SearchOptions::default()).unwrap().d;
            prop_assert_eq!(pred.d, BigUint::from(d));
            prop_assert_eq!(pred.k, BigUint::from(code.k()));
        }
    }

    #[test]
    fn tree_exponents_count_leaves(t in tree(12), q in prop::sample::select(vec![4u64, 5, 7, 8, 9])) {
        let pred = predict_tree(&t, q).unwrap();
        let leaves = t.leaves().len() as u32;
        prop_assert_eq!(pred.exponents, Some((t.size() as u32 - leaves, leaves)));
        prop_assert_eq!(ideal_count(&t).unwrap(), BigUint::from(t.count_upper_ideals().unwrap()));
    }

    #[test]
    fn ordinal_sums_and_pyramids(p in poset(3), r in poset(3)) {
        prop_assert!(ordinal_sum_equivalence_check(&p, &r).unwrap());
        let rooted = Poset::chain(1).unwrap().ordinal_sum(&p).unwrap();
        prop_assert!(pyramid_equivalence_check(&rooted).unwrap());
    }

    #[test]
    fn field_arithmetic(q in prop::sample::select(vec![8u64, 16, 25, 27, 49, 121, 125, 243, 256]),
                        a in any::<u16>(), b in any::<u16>(), c in any::<u16>()) {
        let f = GaloisField::new(q).unwrap();
        let (a, b, c) = (a % q as u16, b % q as u16, c % q as u16);
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            prop_assert_eq!(f.pow(a, q - 1), 1);
        }
    }
}
