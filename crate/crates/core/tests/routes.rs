use proptest::prelude::*;
use rwords_core::cases::{explicit_triangle, f0_sequence, fm_explicit, fm_sequence};
use rwords_core::sequence::{composition_triangle, invert_power, lift_triangle, row_sums};
use rwords_core::verify::{verify_case, VerifyConfig};
use rwords_core::words::{
    count_automaton, count_automaton_by_marks, count_exhaustive, is_valid, ExhaustiveCounter,
};
use rwords_core::{BigInt, CaseSpec};

fn spec_strategy() -> impl Strategy<Value = CaseSpec> {
    prop_oneof![
        (1u32..=4).prop_map(|a| CaseSpec::DistinctAdjacent { a }),
        (1u32..=4).prop_map(|a| CaseSpec::EvenRuns { a }),
        (1u32..=4)
            .prop_flat_map(|b| (Just(b), b + 1..=b + 3))
            .prop_map(|(b, a)| CaseSpec::AvoidZeroPairs { a, b }),
        Just(CaseSpec::OneZeroBlocks),
        Just(CaseSpec::EvenZeroTripleOne),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn recurrence_invert_automaton_agree(spec in spec_strategy(), m in 0u32..5, n in 3usize..60) {
        let rec = fm_sequence(spec, m, n).unwrap();
        let inv = invert_power(&f0_sequence(spec, n).unwrap(), m);
        prop_assert_eq!(&rec, &inv);
        prop_assert_eq!(&count_automaton(spec, m, n - 1, None), &rec[n]);
        prop_assert_eq!(&fm_explicit(spec, m, n).unwrap(), &rec[n]);
    }

    #[test]
    fn marked_automaton_is_the_triangle_row(spec in spec_strategy(), m in 1u32..4, n in 3usize..30) {
        let c = composition_triangle(&fm_sequence(spec, m - 1, n).unwrap());
        let row = count_automaton_by_marks(spec, m, n - 1);
        prop_assert_eq!(row.as_slice(), c.row(n).unwrap());
        let lifted = lift_triangle(&composition_triangle(&f0_sequence(spec, n).unwrap()), m).unwrap();
        prop_assert_eq!(&lifted, &c);
        prop_assert_eq!(&row_sums(&c), &fm_sequence(spec, m, n).unwrap());
    }

    #[test]
    fn automaton_accepts_exactly_the_valid_words(spec in spec_strategy(), m in 0u32..3, word in prop::collection::vec(0u32..8, 0..12)) {
        let dfa = rwords_core::words::build_dfa(spec, m);
        let s = spec.alphabet_size(m);
        let word: Vec<u32> = word.into_iter().map(|c| c % s).collect();
        prop_assert_eq!(dfa.accepts(&word), is_valid(spec, m, &word).unwrap());
    }
}

#[test]
fn small_exhaustive_counts() {
    let spec = CaseSpec::EvenZeroTripleOne;
    let rec = fm_sequence(spec, 2, 10).unwrap();
    for len in 0..9 {
        assert_eq!(count_exhaustive(spec, 2, len).unwrap(), rec[len + 1]);
    }
}

#[test]
fn explicit_triangles_match_convolution() {
    for spec in [
        CaseSpec::DistinctAdjacent { a: 3 },
        CaseSpec::EvenRuns { a: 2 },
        CaseSpec::AvoidZeroPairs { a: 5, b: 3 },
        CaseSpec::OneZeroBlocks,
        CaseSpec::EvenZeroTripleOne,
    ] {
        let conv = composition_triangle(&f0_sequence(spec, 25).unwrap());
        assert_eq!(
            explicit_triangle(spec, 1, 25).unwrap().unwrap(),
            conv,
            "{spec}"
        );
    }
    let spec = CaseSpec::EvenRuns { a: 2 };
    let conv = composition_triangle(&fm_sequence(spec, 1, 25).unwrap());
    assert_eq!(explicit_triangle(spec, 2, 25).unwrap().unwrap(), conv);
    assert!(explicit_triangle(CaseSpec::OneZeroBlocks, 2, 5).is_none());
}

#[test]
fn verify_reports_agreement_across_the_small_grid() {
    for (spec, m) in [
        (CaseSpec::DistinctAdjacent { a: 2 }, 2),
        (CaseSpec::EvenRuns { a: 1 }, 0),
        (CaseSpec::AvoidZeroPairs { a: 4, b: 2 }, 1),
        (CaseSpec::OneZeroBlocks, 3),
        (CaseSpec::EvenZeroTripleOne, 2),
    ] {
        let config = VerifyConfig {
            counter: ExhaustiveCounter::new(200_000, 2),
            ..VerifyConfig::new(spec, m, 8)
        };
        let report = verify_case(&config).unwrap();
        assert!(report.all_agree(), "{report}");
    }
}

#[test]
fn values_stay_exact_far_out() {
    let f = fm_sequence(CaseSpec::OneZeroBlocks, 2, 300).unwrap();
    // f_2(n) = F_{2n-1}
    let fib = rwords_core::identities::fibonacci_ext(599);
    assert_eq!(f[300], fib);
    assert!(f[300] > BigInt::from(u128::MAX));
}
