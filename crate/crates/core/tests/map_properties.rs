//! Properties of the analysis, the local point types and the constructors,
//! sampled over random family members and random primes.

use cremona_core::cremona::{analyze, random_conjugate, AnalysisOptions, MapAnalysis, RationalMap, Verdict};
use cremona_core::families::{construct, ruled_degenerate, FamilyLabel};
use cremona_core::hudson::{classify_point, hudson_vector};
use cremona_core::idealkit::local::{random_invertible, same_point, vanishes_at};
use cremona_core::idealkit::multiplicity_at;
use cremona_core::polycore::{keyed_rng, linalg};
use cremona_core::{Field, PrimeField};
use proptest::prelude::*;

fn sample() -> impl Strategy<Value = (FamilyLabel, u64)> {
    (prop::sample::select(FamilyLabel::constructible()), 1u64..100_000)
}

fn field_for(seed: u64) -> PrimeField {
    PrimeField::random(&mut keyed_rng(seed, "property-prime"), 1_000_000, 1 << 31)
}

fn member(label: FamilyLabel, seed: u64) -> (RationalMap<PrimeField>, MapAnalysis<PrimeField>) {
    let f = field_for(seed);
    let map = construct(label, seed, &f).unwrap_or_else(|e| panic!("{label} seed {seed}: {e}"));
    let a = analyze(&map, seed, &AnalysisOptions::default()).unwrap_or_else(|e| panic!("{label} seed {seed}: {e}"));
    (map, a)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn liaison_identities((label, seed) in sample()) {
        let (_, a) = member(label, seed);
        let (c1, c2) = (&a.split.c1, &a.split.c2);
        prop_assert_eq!(c1.degree + c2.degree, 9);
        prop_assert_eq!(c2.degree - c1.degree, c2.p_a - c1.p_a);
    }

    #[test]
    fn fiber_test_and_certificate_agree((label, seed) in sample()) {
        let (_, a) = member(label, seed);
        prop_assert_eq!(a.birational.verdict, Verdict::Yes);
        prop_assert_eq!(a.certificate.value, 1);
    }

    #[test]
    fn invariants_survive_conjugation((label, seed) in sample()) {
        let (map, a) = member(label, seed);
        let moved = random_conjugate(&map, seed ^ 0x5eed).unwrap();
        let b = analyze(&moved, seed, &AnalysisOptions::default()).unwrap();
        prop_assert_eq!(a.bidegree, b.bidegree);
        prop_assert_eq!(a.genus, b.genus);
        prop_assert_eq!(a.ruled.ruled, b.ruled.ruled);
        prop_assert_eq!(a.split.c2.p_a, b.split.c2.p_a);
        prop_assert_eq!(a.base.theta.distinct, b.base.theta.distinct);
    }

    #[test]
    fn curve_part_separates_ruled_maps((label, seed) in sample()) {
        let (_, a) = member(label, seed);
        let d = a.bidegree.1 as i64;
        if a.ruled.ruled {
            prop_assert!(a.base.deg1part < 9 - d, "{label}: {}", a.base.deg1part);
        } else {
            prop_assert_eq!(a.base.deg1part, 9 - d);
        }
    }

    #[test]
    fn residual_curve_by_genus_of_c1((label, seed) in sample()) {
        let (_, a) = member(label, seed);
        prop_assume!(!a.ruled.ruled);
        let d = a.bidegree.1 as i64;
        let c2 = (a.split.c2.degree, a.split.c2.p_a);
        match a.split.c1.p_a {
            0 => {
                prop_assert!(d <= 6);
                prop_assert_eq!(c2, (9 - d, 9 - 2 * d));
            }
            1 => {
                prop_assert_eq!(c2, (9 - d, 10 - 2 * d));
                prop_assert_eq!(a.split.c2.ideal.graded_piece_dim(2).unwrap(), 1);
            }
            _ => {}
        }
    }

    #[test]
    fn double_points_of_low_multiplicity_lie_on_c2((label, seed) in sample()) {
        let (map, a) = member(label, seed);
        prop_assume!(!a.ruled.ruled);
        let v = hudson_vector(&map, &a, seed).unwrap();
        for (p, t) in v.points.iter().filter(|(_, t)| t.tag.is_double()) {
            let m1 = multiplicity_at(&a.split.c1.ideal, p, seed).unwrap();
            if m1 < 4 {
                prop_assert!(vanishes_at(&a.split.c2.ideal, p), "{label}: {} with mult {m1}", t.tag);
            }
        }
    }

    #[test]
    fn singular_support_of_c1_does_not_depend_on_the_line((label, seed) in sample()) {
        let (map, a) = member(label, seed);
        let b = analyze(&map, seed.wrapping_add(7919), &AnalysisOptions::default()).unwrap();
        let f = map.field();
        let (s, t) = (&a.split.c1.sing, &b.split.c1.sing);
        prop_assert_eq!(a.split.c1.sing_distinct, b.split.c1.sing_distinct);
        prop_assert_eq!(s.len(), t.len());
        prop_assert!(s.iter().all(|(p, _)| t.iter().any(|(q, _)| same_point(f, p, q))));
    }

    #[test]
    fn point_types_are_equivariant((label, seed) in sample()) {
        let (map, a) = member(label, seed);
        prop_assume!(!a.ruled.ruled);
        let f = *map.field();
        let v = hudson_vector(&map, &a, seed).unwrap();
        let b = random_invertible(&f, 4, &mut keyed_rng(seed, "equivariance"));
        let binv = linalg::inverse(&f, &b).unwrap();
        let id = linalg::identity(&f, 4);
        // the conjugate is psi(z B), so p moves to p B^-1
        let moved = map.conjugate(&id, &b).unwrap();
        for (p, t) in &v.points {
            let q: Vec<u32> = (0..4)
                .map(|j| (0..4).fold(f.zero(), |acc, i| f.add(&acc, &f.mul(&p[i], &binv[i][j]))))
                .collect();
            let moved_type = classify_point(&moved, &q, seed);
            prop_assert_eq!(moved_type.tag, t.tag, "{}", label);
            prop_assert_eq!(moved_type.rank, t.rank);
            prop_assert_eq!(classify_point(&map, p, seed).tag, t.tag);
        }
    }
}

#[test]
fn degenerate_ruled_maps_drop_one_degree() {
    for d in [5, 4] {
        for seed in 1..=3 {
            let f = field_for(seed);
            let map = ruled_degenerate(d, seed, &f).unwrap();
            let a = analyze(&map, seed, &AnalysisOptions::default()).unwrap();
            assert!(a.ruled.ruled, "d={d} seed={seed}");
            assert_eq!(a.bidegree, (3, d - 1), "d={d} seed={seed}");
            assert_eq!(a.birational.verdict, Verdict::Yes);
        }
    }
}
