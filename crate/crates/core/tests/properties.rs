mod common;

use num_complex::Complex64;
use proptest::prelude::*;

use dehn_core::cusp::{enumerate_short_slopes, shortest_vector_length, slope_length, CuspTranslations};
use dehn_core::description::{parse_description, render_description};
use dehn_core::graph::{certify_minimal, first_homology as graph_homology, graph_shape};
use dehn_core::seifert::{euler_number, first_homology, normalize_seifert};
use dehn_core::slope::{change_basis, distance, Slope};
use dehn_core::taxonomy::classify;

fn translations() -> impl Strategy<Value = CuspTranslations> {
    (-2.0..2.0f64, -2.0..2.0f64, -3.0..3.0f64, -3.0..3.0f64)
        .prop_filter("area", |(a, b, c, d)| (a * d - b * c).abs() >= 0.2)
        .prop_map(|(a, b, c, d)| CuspTranslations::new(Complex64::new(a, b), Complex64::new(c, d)).unwrap())
}

fn slope() -> impl Strategy<Value = Slope> {
    (-500i64..500, -500i64..500)
        .prop_filter("primitive", |&(p, q)| num_integer::gcd(p, q) == 1)
        .prop_map(|(p, q)| Slope::new(p, q).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn distance_is_basis_invariant(a in slope(), b in slope(), seed in any::<u64>()) {
        let u = common::unimodular(&mut common::rng(seed), 8, 20);
        let (ua, ub) = (change_basis(&a, &u).unwrap(), change_basis(&b, &u).unwrap());
        prop_assert_eq!(distance(&ua, &ub), distance(&a, &b));
        prop_assert_eq!(change_basis(&ua, &u.inverse()).unwrap(), a);
    }

    #[test]
    fn enumeration_is_monotone_and_bounded(t in translations(), b1 in 0.5..6.0f64, extra in 0.0..2.0f64) {
        let small = enumerate_short_slopes(&t, b1);
        let large = enumerate_short_slopes(&t, b1 + extra);
        prop_assert!(small.iter().all(|s| large.contains(s)));
        prop_assert!(large.iter().all(|s| slope_length(&t, s) <= b1 + extra + 1e-9));
        prop_assert!(large.windows(2).all(|w| w[0] < w[1]));
        if b1 >= shortest_vector_length(&t) + 1e-6 {
            prop_assert!(!small.is_empty());
        }
    }

    #[test]
    fn seifert_normal_form_is_stable(seed in any::<u64>()) {
        let sd = common::closed_seifert(&mut common::rng(seed));
        let norm = normalize_seifert(&sd).unwrap();
        prop_assert_eq!(normalize_seifert(&norm).unwrap(), norm.clone());
        prop_assert_eq!(euler_number(&norm).unwrap(), euler_number(&sd).unwrap());
        prop_assert_eq!(first_homology(&norm).unwrap(), first_homology(&sd).unwrap());
    }

    #[test]
    fn descriptions_round_trip(seed in any::<u64>()) {
        let d = common::description(&mut common::rng(seed));
        let text = render_description(&d);
        let back = parse_description(&text).unwrap();
        prop_assert_eq!(back.normalize(), d.normalize());
        let norm = render_description(&d.normalize());
        prop_assert_eq!(render_description(&parse_description(&norm).unwrap()), norm);
    }

    #[test]
    fn classification_is_invariant_under_normalization(seed in any::<u64>()) {
        let d = common::description(&mut common::rng(seed));
        prop_assert_eq!(classify(&d).unwrap().label, classify(&d.normalize()).unwrap().label);
    }

    #[test]
    fn graph_invariants_survive_a_text_round_trip(seed in any::<u64>()) {
        let g = common::graph(&mut common::rng(seed));
        let back = match parse_description(&g.to_string()).unwrap() {
            dehn_core::ManifoldDescription::Graph(b) => b,
            other => panic!("parsed {other} from a graph"),
        };
        prop_assert_eq!(graph_homology(&back), graph_homology(&g));
        prop_assert_eq!(certify_minimal(&back), certify_minimal(&g));
        prop_assert_eq!(graph_shape(&back), graph_shape(&g));
    }
}
