use std::collections::{BTreeSet, HashMap};

use proptest::prelude::*;
use stacksort::stats::Statistic;
use stacksort::tree::{in_order, post_order};
use stacksort::{
    apply_p, apply_s, canonical_tree, count_preimages_s, enumerate, enumerate_avoiders, lambda_of,
    perm, preimages_s, stats, tin, trees_with_postorder, Op, OperatorExpr, Permutation, TreeShape,
};

fn shape_stats(p: &Permutation) -> Vec<String> {
    let s = stats(p);
    Statistic::SHAPE_DETERMINED
        .iter()
        .map(|st| st.project(&s))
        .collect()
}

#[test]
fn tree_shape_determines_statistics() {
    for n in 0..=8 {
        let mut by_shape: HashMap<TreeShape, Vec<String>> = HashMap::new();
        for p in enumerate(n) {
            let values = shape_stats(&p);
            let seen = by_shape
                .entry(tin(&p).shape())
                .or_insert_with(|| values.clone());
            assert_eq!(seen, &values, "{p}");
        }
    }
}

#[test]
fn p_preserves_shape_and_statistics() {
    for n in 0..=9 {
        for pi in enumerate_avoiders(&[perm![2, 3, 1]], n) {
            let image = apply_p(&pi).unwrap();
            assert_eq!(tin(&pi).shape(), tin(&image).shape(), "{pi}");
            assert_eq!(shape_stats(&pi), shape_stats(&image), "{pi}");
        }
    }
}

#[test]
fn preimage_count_depends_on_canonical_shape() {
    for n in 1..=8 {
        let image: BTreeSet<Permutation> = enumerate(n).map(|t| apply_s(&t)).collect();
        let mut by_shape: HashMap<TreeShape, u128> = HashMap::new();
        for tau in &image {
            let canonical = canonical_tree(tau).unwrap().expect("in the image of S");
            assert!(canonical.is_canonical());
            assert_eq!(post_order(&canonical), *tau);
            let trees = trees_with_postorder(tau);
            assert_eq!(
                trees.iter().filter(|t| t.is_canonical()).count(),
                1,
                "{tau}"
            );
            let count = count_preimages_s(tau);
            assert_eq!(count, trees.len() as u128);
            let seen = by_shape.entry(canonical.shape()).or_insert(count);
            assert_eq!(*seen, count, "{tau}");
        }
    }
}

#[test]
fn image_of_s_is_exactly_the_post_order_readings() {
    for n in 0..=7 {
        let image: BTreeSet<Permutation> = enumerate(n).map(|t| apply_s(&t)).collect();
        for tau in enumerate(n) {
            assert_eq!(
                !trees_with_postorder(&tau).is_empty(),
                image.contains(&tau),
                "{tau}"
            );
            assert_eq!(
                canonical_tree(&tau).unwrap().is_some(),
                image.contains(&tau)
            );
        }
        for theta in enumerate(n) {
            let t = tin(&theta);
            assert!(image.contains(&post_order(&t)));
            assert_eq!(in_order(&t), theta);
        }
    }
}

#[test]
fn compositional_preimages_match_filter() {
    let mut words = vec![OperatorExpr::identity()];
    for _ in 0..3 {
        let longer: Vec<_> = words
            .iter()
            .filter(|w| w.len() == words.last().unwrap().len())
            .flat_map(|w| [w.after(Op::S), w.after(Op::R)])
            .collect();
        words.extend(longer);
    }
    assert_eq!(words.len(), 15);
    for a in &words {
        for n in 0..=7 {
            let mut fibers: HashMap<Permutation, Vec<Permutation>> = HashMap::new();
            for theta in enumerate(n) {
                fibers.entry(a.apply(&theta)).or_default().push(theta);
            }
            for (pi, mut brute) in fibers {
                brute.sort();
                assert_eq!(a.preimages(&pi), brute, "A = {a}, π = {pi}");
            }
        }
    }
}

fn no_larger_between(p: &Permutation, x: usize, y: usize) -> bool {
    let pos = p.inverse();
    let (i, j) = (pos.at(x).min(pos.at(y)), pos.at(x).max(pos.at(y)));
    let top = x.max(y);
    (i + 1..j).all(|k| p.at(k) < top)
}

fn arb_perm(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|v| Permutation::from_one_line(v).unwrap())
}

fn arb_operator(max_len: usize) -> impl Strategy<Value = OperatorExpr> {
    proptest::collection::vec(prop_oneof![Just(Op::S), Just(Op::R)], 0..=max_len)
        .prop_map(OperatorExpr::new)
}

fn avoider_from(seeds: &[usize]) -> Permutation {
    // α ⊕ (1 ⊖ β) with |α| picked by the first seed.
    let Some((&first, rest)) = seeds.split_first() else {
        return Permutation::empty();
    };
    let k = first % seeds.len();
    let alpha = avoider_from(&rest[..k]);
    let beta = avoider_from(&rest[k..]);
    alpha.direct_sum(&perm![1].skew_sum(&beta))
}

fn arb_avoider(max: usize) -> impl Strategy<Value = Permutation> {
    proptest::collection::vec(any::<usize>(), 0..=max).prop_map(|s| avoider_from(&s))
}

proptest! {
    #[test]
    fn operators_keep_no_larger_between(theta in arb_perm(10), a in arb_operator(4)) {
        let image = a.apply(&theta);
        let n = theta.len();
        for x in 1..=n {
            for y in x + 1..=n {
                if no_larger_between(&theta, x, y) {
                    prop_assert!(no_larger_between(&image, x, y), "{} {} in {}", x, y, theta);
                }
            }
        }
    }

    #[test]
    fn lambda_keeps_order_of_unseparated_values(pi in arb_avoider(11)) {
        prop_assert!(stacksort::avoids(&pi, &perm![2, 3, 1]));
        let lambda = lambda_of(&pi).unwrap();
        let n = pi.len();
        for x in 1..=n {
            for y in x + 1..=n {
                if no_larger_between(&pi, x, y) {
                    prop_assert!(lambda.apply(x) < lambda.apply(y));
                }
            }
        }
    }

    #[test]
    fn s_agrees_with_tree_reading(theta in arb_perm(12)) {
        prop_assert_eq!(apply_s(&theta), post_order(&tin(&theta)));
        prop_assert!(preimages_s(&apply_s(&theta)).contains(&theta));
    }

    #[test]
    fn parse_display_round_trip(theta in arb_perm(12), a in arb_operator(6)) {
        prop_assert_eq!(theta.to_string().parse::<Permutation>().unwrap(), theta.clone());
        prop_assert_eq!(a.to_string().parse::<OperatorExpr>().unwrap(), a);
    }
}
