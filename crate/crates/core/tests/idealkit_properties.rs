//! Groebner-basis and ideal-operation properties on random inputs.

use cremona_core::idealkit::{groebner, local_length, Budget, Ideal, Selection};
use cremona_core::polycore::{keyed_rng, random_point, FormSpace};
use cremona_core::suite::properties::{form_from_indices, property_field};
use cremona_core::{MonomialOrder, Poly, PrimeField};
use proptest::prelude::*;

fn forms() -> impl Strategy<Value = Vec<(u32, Vec<(usize, i64)>)>> {
    prop::collection::vec((1u32..=3, prop::collection::vec((0usize..64, -20i64..=20), 1..=4)), 1..=4)
}

fn build(raw: &[(u32, Vec<(usize, i64)>)]) -> Vec<Poly<PrimeField>> {
    let f = property_field();
    raw.iter().map(|(d, t)| form_from_indices(&f, *d, t)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn selection_strategies_agree(raw in forms()) {
        let f = property_field();
        let gens = build(&raw);
        let budget = Budget::default();
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            let normal = groebner(&f, 4, &gens, &order, Selection::Normal, &budget).unwrap();
            let sugar = groebner(&f, 4, &gens, &order, Selection::Sugar, &budget).unwrap();
            prop_assert!(normal.same_as(&sugar), "{:?}", order);
        }
    }

    #[test]
    fn normal_form_is_linear(raw in forms(), a in forms(), b in forms()) {
        let f = property_field();
        let gb = Ideal::new(f, 4, build(&raw)).gb().unwrap();
        let (g, h) = (build(&a)[0].clone(), build(&b)[0].clone());
        prop_assert_eq!(gb.normal_form(&g.add(&h)), gb.normal_form(&g).add(&gb.normal_form(&h)));
        for gen in build(&raw) {
            prop_assert!(gb.normal_form(&gen).is_zero());
        }
    }

    #[test]
    fn saturation_contains_the_ideal(raw in forms(), seed in any::<u64>()) {
        let f = property_field();
        let i = Ideal::new(f, 4, build(&raw));
        let lin = FormSpace::full(f, 4, 1);
        let mut rng = keyed_rng(seed, "saturation-containment");
        let j = Ideal::new(f, 4, vec![lin.random_element(&mut rng), lin.random_element(&mut rng)]);
        let sat = i.saturate(&j).unwrap();
        prop_assert!(sat.contains_ideal(&i).unwrap());
        prop_assert!(i.quotient(&j).unwrap().contains_ideal(&i).unwrap());
        prop_assert!(sat.contains_ideal(&i.quotient(&j).unwrap()).unwrap());
    }

    #[test]
    fn intersection_is_contained_in_both(a in forms(), b in forms()) {
        let f = property_field();
        let (i, j) = (Ideal::new(f, 4, build(&a)), Ideal::new(f, 4, build(&b)));
        let both = i.intersect(&j).unwrap();
        prop_assert!(i.contains_ideal(&both).unwrap());
        prop_assert!(j.contains_ideal(&both).unwrap());
        prop_assert!(both.contains_ideal(&i.product(&j)).unwrap());
    }

    /// A union of fat points: local lengths add up to the degree.
    #[test]
    fn local_lengths_sum_to_the_degree(seed in any::<u64>(), powers in prop::collection::vec(1u32..=3, 1..=3)) {
        let f = property_field();
        let mut rng = keyed_rng(seed, "fat-points");
        let mut pts: Vec<Vec<u32>> = Vec::new();
        let mut parts = Vec::new();
        for &k in &powers {
            let p = random_point(&f, 4, &mut rng);
            let m = Ideal::of_point(f, &p);
            parts.push((1..k).fold(m.clone(), |acc, _| acc.product(&m)));
            pts.push(p);
        }
        let scheme = Ideal::intersect_all(&parts).unwrap();
        let h = scheme.hilbert().unwrap();
        prop_assert_eq!(h.dimension, 0);
        let total: usize = pts.iter().map(|p| local_length(&scheme, p).unwrap()).sum();
        prop_assert_eq!(total as i64, h.degree);
        // length of the k-th power of a point ideal in P3 is C(k + 2, 3)
        let expected: u32 = powers.iter().map(|&k| k * (k + 1) * (k + 2) / 6).sum();
        prop_assert_eq!(h.degree, expected as i64);
    }
}
