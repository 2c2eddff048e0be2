mod common;

use proptest::prelude::*;

use euclidean_rhythms::classify::{string_class_of, tau, StringClass};
use euclidean_rhythms::deepness::{
    characterize_deep, histogram, is_erdos_deep, is_winograd_deep, shelling, validate_shelling,
};
use euclidean_rhythms::evenness::{
    evenness_chordal, evenness_geodesic, evenness_squared_geodesic, level_sum,
};
use euclidean_rhythms::generators::{bjorklund, generated, EvenAlgorithm};
use euclidean_rhythms::numtheory::gcd;
use euclidean_rhythms::{DistanceSeq, Rhythm};

fn rhythm() -> impl Strategy<Value = Rhythm> {
    (1usize..=24).prop_flat_map(|n| {
        (Just(n), 0u64..(1u64 << n)).prop_map(|(n, mask)| Rhythm::from_mask(n, mask).unwrap())
    })
}

fn nonempty_rhythm() -> impl Strategy<Value = Rhythm> {
    rhythm().prop_filter("needs an onset", |r| !r.is_empty())
}

proptest! {
    #[test]
    fn text_forms_round_trip(r in rhythm()) {
        prop_assert_eq!(Rhythm::parse_box(r.to_box().as_str()).unwrap(), r.clone());
        prop_assert_eq!(r.to_subset_string().parse::<Rhythm>().unwrap(), r.clone());
    }

    #[test]
    fn distance_sequence_round_trip(r in nonempty_rhythm()) {
        let seq = r.distance_seq().unwrap();
        prop_assert_eq!(seq.sum(), r.timespan());
        prop_assert_eq!(seq.len(), r.len());
        let text = seq.to_string();
        prop_assert_eq!(text.parse::<DistanceSeq>().unwrap(), seq.clone());
        let back = Rhythm::from_distance_seq(&seq, r.onsets()[0], r.timespan()).unwrap();
        prop_assert_eq!(back, r);
    }

    #[test]
    fn rotation_preserves_everything(r in nonempty_rhythm(), d in -50i64..50) {
        let s = r.rotate(d);
        prop_assert_eq!(s.rotate(-d), r.clone());
        prop_assert_eq!(s.necklace().unwrap(), r.necklace().unwrap());
        prop_assert!(common::same_necklace(r.timespan(), r.onsets(), s.onsets()));
        prop_assert!((evenness_chordal(&s) - evenness_chordal(&r)).abs() < 1e-9);
        prop_assert_eq!(evenness_geodesic(&s), evenness_geodesic(&r));
        prop_assert_eq!(evenness_squared_geodesic(&s), evenness_squared_geodesic(&r));
        prop_assert_eq!(histogram(&s), histogram(&r));
        prop_assert_eq!(is_erdos_deep(&s), is_erdos_deep(&r));
        prop_assert_eq!(is_winograd_deep(&s), is_winograd_deep(&r));
        prop_assert_eq!(s.period().unwrap(), r.period().unwrap());
        prop_assert_eq!(r.rotate(r.timespan() as i64), r.clone());
        prop_assert_eq!(r.rotate(d).rotate(7), r.rotate(d + 7));
    }

    #[test]
    fn scaling_multiplies_geodesics(r in rhythm(), alpha in 1usize..4) {
        let s = r.scale(alpha).unwrap();
        let expected: Vec<(usize, usize)> =
            histogram(&r).counts.into_iter().map(|(d, c)| (d * alpha, c)).collect();
        let got: Vec<(usize, usize)> = histogram(&s).counts.into_iter().collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn reversal_keeps_geodesics(r in nonempty_rhythm()) {
        prop_assert_eq!(histogram(&r.reverse().unwrap()), histogram(&r));
    }

    #[test]
    fn reversal_is_an_involution_up_to_rotation(r in nonempty_rhythm()) {
        let twice = r.reverse().unwrap().reverse().unwrap();
        prop_assert_eq!(twice.necklace().unwrap(), r.necklace().unwrap());
        prop_assert!((evenness_chordal(&r.reverse().unwrap()) - evenness_chordal(&r)).abs() < 1e-9);
    }

    #[test]
    fn metrics_match_reference(r in rhythm()) {
        let n = r.timespan();
        prop_assert!((evenness_chordal(&r) - common::chordal_sum(n, r.onsets())).abs() < 1e-9);
        prop_assert_eq!(evenness_geodesic(&r), common::geodesic_sum(n, r.onsets()));
        let k = r.len();
        prop_assert_eq!(histogram(&r).total(), k * k.saturating_sub(1) / 2);
        prop_assert_eq!(is_erdos_deep(&r), common::erdos(n, r.onsets()));
        prop_assert_eq!(is_winograd_deep(&r), common::winograd(n, r.onsets()));
    }

    #[test]
    fn level_sums_total_l_times_n(r in nonempty_rhythm()) {
        for l in 1..=r.len() {
            let ls = level_sum(&r, l).unwrap();
            prop_assert_eq!(ls.clockwise.iter().sum::<usize>(), l * r.timespan());
            prop_assert!(ls.chordal >= 0.0);
        }
    }

    #[test]
    fn deep_rhythms_have_witnesses_and_shellings(r in rhythm()) {
        match characterize_deep(&r) {
            Some(form) => {
                prop_assert!(is_erdos_deep(&r));
                prop_assert_eq!(form.reconstruct().unwrap(), r.clone());
                let order = shelling(&r).unwrap();
                prop_assert!(validate_shelling(&r, &order).unwrap());
            }
            None => prop_assert!(!is_erdos_deep(&r)),
        }
    }

    #[test]
    fn scaling_preserves_erdos_deepness(r in rhythm(), alpha in 1usize..4) {
        prop_assert_eq!(is_erdos_deep(&r.scale(alpha).unwrap()), is_erdos_deep(&r));
    }

    #[test]
    fn algorithms_agree(n in 1usize..=48, k_seed in 0usize..1000) {
        let k = 1 + k_seed % n;
        let b = bjorklund(k, n).unwrap();
        prop_assert_eq!(b.len(), k);
        prop_assert!(b.contains(0));
        for algo in EvenAlgorithm::ALL {
            let r = algo.generate(k, n).unwrap();
            prop_assert_eq!(r.necklace().unwrap(), b.necklace().unwrap(), "{}", algo.name());
        }
    }

    #[test]
    fn coprime_generators_give_deep_rhythms(n in 2usize..=40, m_seed in 0usize..1000, k_seed in 0usize..1000) {
        let m = 1 + m_seed % (n / 2);
        prop_assume!(gcd(m, n) == 1);
        let k = 1 + k_seed % (n / 2 + 1);
        prop_assert!(is_erdos_deep(&generated(k, n, m).unwrap()));
    }

    #[test]
    fn tau_keeps_length_and_sum(p in prop::collection::vec(0usize..6, 1..10)) {
        if let Ok(t) = tau(&p) {
            prop_assert_eq!(t.len(), p.len());
            prop_assert_eq!(t.iter().sum::<usize>(), p.iter().sum::<usize>());
        } else {
            prop_assert_eq!(*p.last().unwrap(), 0);
        }
        let reversed: Vec<usize> = p.iter().rev().copied().collect();
        let swapped = match string_class_of(&p) {
            StringClass::EuclideanString => StringClass::ReverseEuclideanString,
            StringClass::ReverseEuclideanString => StringClass::EuclideanString,
            other => other,
        };
        prop_assert_eq!(string_class_of(&reversed), swapped);
    }
}
