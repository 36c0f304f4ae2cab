//! Property tests over randomly drawn parameter points, shapes and words.

use hecke_core::combinatorics::{double_partitions, parse_double_partition, DoublePartition, Partition};
use hecke_core::reps::{
    character, evaluate, expand_word, parse_element, random_word, relation_residuals, type_b_rep, Alphabet,
    HeckeElement,
};
use hecke_core::scalars::{ExactScalar, ParameterPoint};
use hecke_core::traces::{markov_params, weight_b, weight_b_schur_form, weight_table, MarkovTraceB};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rational(num: i64, den: i64) -> ExactScalar {
    ExactScalar::new(num, den).unwrap()
}

/// Positive `q != 1` and a nonzero `Q`, kept only when admissible.
fn point_strategy(guard: usize) -> impl Strategy<Value = ParameterPoint> {
    (1i64..12, 1i64..12, -12i64..12, 1i64..12)
        .prop_filter_map("inadmissible point", move |(a, b, c, d)| {
            if a == b || c == 0 {
                return None;
            }
            ParameterPoint::new(rational(a, b), rational(c, d), guard).ok()
        })
}

fn shape_strategy(max_n: usize) -> impl Strategy<Value = DoublePartition> {
    (0..=max_n).prop_flat_map(|n| {
        let shapes = double_partitions(n);
        (0..shapes.len()).prop_map(move |i| shapes[i].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn shape_text_roundtrips(shape in shape_strategy(6)) {
        let text = shape.to_string();
        prop_assert_eq!(parse_double_partition(&text).unwrap(), shape.clone());
        let first: Partition = shape.first.to_string().parse().unwrap();
        prop_assert_eq!(first, shape.first);
    }

    #[test]
    fn rational_text_roundtrips(num in -10_000i64..10_000, den in 1i64..10_000) {
        let x = rational(num, den);
        prop_assert_eq!(x.to_string().parse::<ExactScalar>().unwrap(), x);
    }

    #[test]
    fn relations_hold_on_random_modules(point in point_strategy(6), shape in shape_strategy(3)) {
        let rep = type_b_rep(&shape, &point).unwrap();
        for r in relation_residuals(&rep).unwrap() {
            prop_assert!(r.holds(), "{} on {}", r.relation, shape);
        }
    }

    #[test]
    fn weights_normalise(point in point_strategy(8), r1 in 1usize..4, r2 in 1usize..4, n in 0usize..4) {
        let table = weight_table(n, r1, r2, &point).unwrap();
        prop_assert!(table.normalization().is_one());
        for (shape, w) in &table.entries {
            prop_assert_eq!(w, &weight_b_schur_form(shape, r1, r2, &point).unwrap());
        }
    }

    #[test]
    fn trace_is_linear_and_cyclic(point in point_strategy(8), seed in any::<u64>()) {
        let n = 3;
        let tr = MarkovTraceB::new(n, 2, 2, &point).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = HeckeElement::from_word(&random_word(&mut rng, n, 4, Alphabet::TypeB));
        let b = HeckeElement::from_word(&random_word(&mut rng, n, 5, Alphabet::TypeB));
        let c = rational(-3, 7);
        let lhs = tr.trace(&a.add(&b.scale(&c))).unwrap();
        prop_assert_eq!(lhs, tr.trace(&a).unwrap() + &c * tr.trace(&b).unwrap());
        prop_assert_eq!(tr.trace(&a.mul(&b)).unwrap(), tr.trace(&b.mul(&a)).unwrap());
    }

    #[test]
    fn expansion_preserves_characters(point in point_strategy(6), seed in any::<u64>(), shape in shape_strategy(3)) {
        prop_assume!(shape.size() >= 2);
        let n = shape.size();
        let rep = type_b_rep(&shape, &point).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let word = random_word(&mut rng, n, 6, Alphabet::TypeD);
        let expanded = expand_word(&word, &point);
        prop_assert_eq!(
            character(&rep, &HeckeElement::from_word(&word)).unwrap(),
            character(&rep, &expanded).unwrap()
        );
    }
}

#[test]
fn small_worked_values() {
    let point = ParameterPoint::new(rational(2, 1), rational(5, 1), 4).unwrap();
    let shape = parse_double_partition("[1]|[]").unwrap();
    assert_eq!(weight_b(&shape, 1, 1, &point).unwrap(), rational(11, 18));
    assert_eq!(markov_params(1, 1, &point).unwrap(), (rational(4, 3), rational(8, 3)));
    let tr = MarkovTraceB::new(2, 1, 1, &point).unwrap();
    let lhs = tr.trace(&parse_element("g1 g1", 2).unwrap()).unwrap();
    let rhs = tr.trace(&parse_element("1 g1 + 2", 2).unwrap()).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn element_evaluation_matches_sum_of_words() {
    let point = ParameterPoint::new(rational(3, 2), rational(-2, 5), 4).unwrap();
    let rep = type_b_rep(&parse_double_partition("[1]|[1]").unwrap(), &point).unwrap();
    let sum = parse_element("2 t g1 + -1/3 g1 t + t'1", 2).unwrap();
    let parts = ["2 t g1", "-1/3 g1 t", "t'1"]
        .iter()
        .map(|s| evaluate(&rep, &parse_element(s, 2).unwrap()).unwrap())
        .reduce(|a, b| a.checked_add(&b).unwrap())
        .unwrap();
    assert_eq!(evaluate(&rep, &sum).unwrap(), parts);
}
