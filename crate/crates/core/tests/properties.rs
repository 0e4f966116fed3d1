use num_bigint::BigInt;
use num_traits::Zero;
use plethysm_core::{
    lr_coefficient, lr_fillings, partitions_of, plethysm_oracle, skew_schur_expansion, Engine, Partition,
    SchurExpansion, SkewShape,
};
use proptest::prelude::*;

fn partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(Partition::from_unsorted)
}

fn small_partition_pair(max_degree: usize) -> impl Strategy<Value = (Partition, Partition)> {
    (1..=max_degree)
        .prop_flat_map(move |a| (Just(a), 1..=max_degree / a))
        .prop_flat_map(|(a, b)| {
            let la: Vec<Partition> = partitions_of(a).collect();
            let mb: Vec<Partition> = partitions_of(b).collect();
            (prop::sample::select(la), prop::sample::select(mb))
        })
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(lambda in partition(6, 6)) {
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
        prop_assert_eq!(lambda.conjugate().size(), lambda.size());
        prop_assert_eq!(lambda.conjugate().len(), lambda.first_part());
    }

    #[test]
    fn text_round_trips(lambda in partition(6, 12)) {
        let text = lambda.to_text();
        prop_assert_eq!(text.parse::<Partition>().unwrap(), lambda);
    }

    #[test]
    fn add_and_union_are_conjugate(a in partition(5, 5), b in partition(5, 5)) {
        // (α + β)' = α' ⊔ β'
        prop_assert_eq!(a.add(&b).conjugate(), a.conjugate().union_sort(&b.conjugate()));
    }

    #[test]
    fn growth_sizes(lambda in partition(4, 4), m in 1usize..4, l_off in 0usize..4, j in 0usize..5) {
        let l = l_off.min(m);
        let grown = lambda.grow_arm_legs(l, m, j).unwrap();
        prop_assert_eq!(grown.size(), lambda.size() + m * j);
        let line = lambda.grow_line(l, m, j).unwrap();
        prop_assert_eq!(line.size(), lambda.size() + j);
        prop_assert!(line.contains(&lambda));
    }

    #[test]
    fn hat_removes_first_column(lambda in partition(6, 6)) {
        let hat = lambda.hat();
        prop_assert_eq!(hat.size() + lambda.len(), lambda.size());
        prop_assert!(lambda.contains(&hat));
    }

    #[test]
    fn lr_symmetry_and_conjugation(a in partition(3, 3), b in partition(3, 3)) {
        let total = a.size() + b.size();
        for nu in partitions_of(total) {
            let c = lr_coefficient(&nu, &a, &b);
            prop_assert_eq!(c, lr_coefficient(&nu, &b, &a));
            prop_assert_eq!(c, lr_coefficient(&nu.conjugate(), &a.conjugate(), &b.conjugate()));
        }
    }

    #[test]
    fn skew_expansion_matches_fillings(outer in partition(4, 4), inner in partition(3, 3)) {
        let shape = SkewShape::new(outer.clone(), inner.clone());
        prop_assume!(shape.is_contained());
        let fillings = lr_fillings(&shape);
        let expansion = skew_schur_expansion(&shape);
        let total: BigInt = expansion.iter().map(|(_, c)| c.clone()).sum();
        prop_assert_eq!(total, BigInt::from(fillings.len()));
        for (content, c) in expansion.iter() {
            prop_assert_eq!(c.clone(), BigInt::from(lr_coefficient(&outer, &inner, content)));
        }
    }

    #[test]
    fn engine_matches_oracle((lambda, mu) in small_partition_pair(6)) {
        let engine = Engine::new();
        let degree = lambda.size() * mu.size();
        let slow = plethysm_oracle(&lambda, &mu, degree).unwrap();
        prop_assert_eq!(&*engine.plethysm_schur(&lambda, &mu), &slow);
        prop_assert!(slow.is_nonnegative());
    }

    #[test]
    fn coefficients_agree_with_expansion((lambda, mu) in small_partition_pair(8)) {
        let engine = Engine::new();
        let expansion = engine.plethysm_schur(&lambda, &mu);
        for nu in partitions_of(lambda.size() * mu.size()) {
            prop_assert_eq!(engine.plethysm_coefficient(&nu, &lambda, &mu), expansion.coefficient(&nu));
        }
    }
}

#[test]
fn symmetric_square_of_a_row() {
    let engine = Engine::new();
    let e = engine.plethysm_schur(&"2".parse().unwrap(), &"3".parse().unwrap());
    let want: SchurExpansion = [("6", 1), ("4,2", 1)]
        .into_iter()
        .map(|(t, c)| (t.parse().unwrap(), BigInt::from(c)))
        .collect();
    assert_eq!(*e, want);
    assert!(e.iter().all(|(_, c)| !c.is_zero()));
}
