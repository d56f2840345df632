use proptest::prelude::*;

use st_tractability::budget::Budget;
use st_tractability::classify::{sweep, Problem, SweepGrid};
use st_tractability::hilbert::{Criterion, GeneralProblem, STParams};
use st_tractability::num::{int, rat, Count, Rational};
use st_tractability::schema::SequenceSpec;
use st_tractability::sobolev::{Norm, SobolevProblem};
use st_tractability::spectra::EigenSeq;
use st_tractability::tensor::TensorProblem;
use st_tractability::trend::trend_flag;

fn seq_strategy() -> impl Strategy<Value = EigenSeq> {
    prop_oneof![
        (1i64..=8, 1i64..=9).prop_map(|(c, q)| EigenSeq::geometric(rat(c, 2), rat(q, 10)).unwrap()),
        (1i64..=8, 1i64..=6, 1i64..=3).prop_map(|(c, a, b)| EigenSeq::poly(rat(c, 2), rat(a, b)).unwrap()),
        proptest::collection::vec(1i64..=16, 1..6).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            EigenSeq::finite_rank(v.into_iter().map(|x| rat(x, 4)).collect()).unwrap()
        }),
        (1i64..=8, 1i64..=9).prop_map(|(c, q)| {
            EigenSeq::explicit(vec![int(4), rat(c + 8, 4)], EigenSeq::geometric(rat(c, 4), rat(q, 10)).unwrap())
                .unwrap()
        }),
    ]
}

fn norm_strategy() -> impl Strategy<Value = Norm> {
    prop_oneof![Just(Norm::Plus), Just(Norm::Star), Just(Norm::Sharp)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn count_is_monotone_in_threshold(seq in seq_strategy(), a in 1i64..400, b in 1i64..400) {
        let (lo, hi) = (rat(a.min(b), 400), rat(a.max(b), 400));
        prop_assert!(seq.count_above(&lo).unwrap() >= seq.count_above(&hi).unwrap());
    }

    #[test]
    fn bisection_agrees_with_closed_forms(seq in seq_strategy(), a in 1i64..400) {
        let t = rat(a, 400);
        prop_assert_eq!(seq.count_above(&t).unwrap(), seq.count_above_bisect(&t).unwrap());
    }

    #[test]
    fn tensor_count_matches_enumeration(q in 1i64..=9, c in 1i64..=4, d in 1u32..=3, e in 5i64..=100) {
        let tp = TensorProblem::new(EigenSeq::geometric(rat(c, 2), rat(q, 10)).unwrap());
        for crit in [Criterion::Absolute, Criterion::Normalized] {
            let eps = rat(e, 100);
            prop_assert_eq!(
                tp.tensor_count(crit, &eps, d).unwrap(),
                tp.brute_force_count(crit, &eps, d, 10_000_000).unwrap()
            );
        }
    }

    #[test]
    fn unit_maximum_makes_criteria_equal(seq in seq_strategy(), e in 2i64..100) {
        let unit = seq.scaled(&(Rational::from_integer(1.into()) / seq.first()));
        let p = GeneralProblem::constant(unit);
        let eps = rat(e, 100);
        prop_assert_eq!(
            p.info_complexity(Criterion::Absolute, &eps, 1).unwrap(),
            p.info_complexity(Criterion::Normalized, &eps, 1).unwrap()
        );
    }

    #[test]
    fn approx_numbers_are_nonincreasing(alpha in 1u32..=8, norm in norm_strategy(), d in 1u32..=3) {
        let p = SobolevProblem::new(alpha as f64 / 4.0, norm).unwrap();
        let rows = p.approx_numbers(d, 60, &Budget::new(u64::MAX)).unwrap();
        prop_assert_eq!(rows[0].a_n, 1.0);
        prop_assert!(rows.windows(2).all(|w| w[1].a_n <= w[0].a_n));
    }

    #[test]
    fn sobolev_complexity_counts_values_above_eps(alpha in 1u32..=8, norm in norm_strategy(), d in 1u32..=3, e in 20i64..99) {
        let p = SobolevProblem::new(alpha as f64 / 4.0, norm).unwrap();
        let eps = rat(e, 100);
        let n = p.complexity(&eps, d).unwrap();
        let n_u = u64::try_from(&n).unwrap();
        let ladder = p.ladder_to_index(d, n_u + 1, &Budget::new(u64::MAX)).unwrap();
        let x = e as f64 / 100.0;
        // a_n > ε >= a_{n+1}, away from floating ties
        let next = ladder.value_at(n_u + 1).unwrap();
        prop_assume!((next - x).abs() > 1e-12);
        prop_assert!(next <= x);
        if n_u > 0 {
            prop_assert!(ladder.value_at(n_u).unwrap() > x);
        }
    }

    #[test]
    fn sobolev_embedding_order(alpha in 1u32..=8, d in 1u32..=3, e in 20i64..99) {
        let a = alpha as f64 / 2.0;
        let eps = rat(e, 100);
        let plus = SobolevProblem::new(a, Norm::Plus).unwrap().complexity(&eps, d).unwrap();
        let sharp = SobolevProblem::new(a / 2.0, Norm::Sharp).unwrap().complexity(&eps, d).unwrap();
        prop_assert!(plus <= sharp);
    }

    #[test]
    fn sweep_ratios_are_nonnegative(q in 1i64..=9, s in 0.25f64..2.0, t in 0.25f64..2.0) {
        let p = Problem::Tensor(TensorProblem::new(EigenSeq::geometric(int(1), rat(q, 10)).unwrap()));
        let table = sweep(&p, Criterion::Normalized, STParams::new(s, t).unwrap(), &SweepGrid::diagonal(10), &Budget::default()).unwrap();
        prop_assert!(table.rows.iter().all(|r| r.ratio >= 0.0 && r.ratio.is_finite()));
    }

    #[test]
    fn trend_flag_is_scale_invariant(v in proptest::collection::vec(0.0f64..10.0, 2..30), c in 1u32..=64) {
        // powers of two keep the products exact
        let scale = c.next_power_of_two() as f64;
        let scaled: Vec<f64> = v.iter().map(|x| x * scale).collect();
        prop_assert_eq!(trend_flag(&v), trend_flag(&scaled));
    }

    #[test]
    fn sequence_specs_round_trip(seq in seq_strategy()) {
        let spec = SequenceSpec::from_seq(&seq);
        let text = serde_json::to_string(&spec).unwrap();
        let back: SequenceSpec = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.build().unwrap(), seq);
    }

    #[test]
    fn count_form_matches_min_form(seq in seq_strategy(), e in 5i64..200) {
        let t = rat(e, 200);
        let n = seq.count_above(&t).unwrap();
        let n_u = u64::try_from(&n).unwrap();
        prop_assert!(seq.eigen_at(n_u + 1).exact().is_none_or(|v| *v <= t));
        if n_u > 0 {
            prop_assert!(seq.eigen_at(n_u).exact().is_none_or(|v| *v > t));
        }
        prop_assert!(n >= Count::from(0u32));
    }
}
