//! Acceptance suite: one PASS/FAIL line per criterion. Criterion 10 runs
//! the kernel properties both through the seeded sampler and through
//! proptest-generated inputs.

use std::time::Instant;

use cremona_core::idealkit::local::random_invertible;
use cremona_core::idealkit::Ideal;
use cremona_core::polycore::{keyed_rng, Monomial};
use cremona_core::suite::properties::{
    form_from_indices, hilbert_invariant, monomial_oracle, property_field, saturation_idempotent, small_monomials,
    spair_closure,
};
use cremona_core::suite::{criteria, Outcome, SuiteConfig};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type RawForm = (u32, Vec<(usize, i64)>);

fn raw_forms(max: usize) -> impl Strategy<Value = Vec<RawForm>> {
    prop::collection::vec((1u32..=3, prop::collection::vec((0usize..64, -20i64..=20), 1..=4)), 1..=max)
}

fn forms(raw: &[RawForm]) -> Vec<cremona_core::Poly<cremona_core::PrimeField>> {
    let f = property_field();
    raw.iter().map(|(d, terms)| form_from_indices(&f, *d, terms)).collect()
}

fn monomial_sets() -> impl Strategy<Value = Vec<Monomial>> {
    let pool = small_monomials();
    prop::collection::vec(0..pool.len(), 1..=4).prop_map(move |ix| ix.into_iter().map(|k| pool[k]).collect())
}

/// Proptest side of criterion 10; returns the failures.
fn proptest_kernel(cases: u32) -> Vec<String> {
    let mut failures = Vec::new();
    let runner = || TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    let f = property_field();

    let r = runner().run(&raw_forms(4), |raw| {
        prop_assert!(spair_closure(&forms(&raw)).unwrap());
        Ok(())
    });
    if let Err(e) = r {
        failures.push(format!("S-pair reduction: {e}"));
    }

    let r = runner().run(&(raw_forms(3), raw_forms(2)), |(a, b)| {
        let i = Ideal::new(f, 4, forms(&a));
        let j = Ideal::new(f, 4, forms(&b));
        prop_assert!(saturation_idempotent(&i, &j).unwrap());
        Ok(())
    });
    if let Err(e) = r {
        failures.push(format!("saturation idempotence: {e}"));
    }

    let r = runner().run(&(monomial_sets(), monomial_sets()), |(a, b)| {
        prop_assert!(monomial_oracle(&a, &b).unwrap());
        Ok(())
    });
    if let Err(e) = r {
        failures.push(format!("monomial oracle: {e}"));
    }

    let r = runner().run(&(raw_forms(3), any::<u64>()), |(raw, seed)| {
        let i = Ideal::new(f, 4, forms(&raw));
        let m = random_invertible(&f, 4, &mut keyed_rng(seed, "substitution"));
        prop_assert!(hilbert_invariant(&i, &m).unwrap());
        Ok(())
    });
    if let Err(e) = r {
        failures.push(format!("Hilbert invariance: {e}"));
    }
    failures
}

#[test]
fn acceptance_criteria() {
    let cfg = SuiteConfig::default();
    let mut outcomes: Vec<Outcome> = Vec::new();
    for (id, criterion) in criteria() {
        let mut out = criterion(&cfg);
        if id == 10 {
            let start = Instant::now();
            let failures = proptest_kernel(64);
            out.seconds += start.elapsed().as_secs_f64();
            if failures.is_empty() {
                out.detail.push_str("; proptest: 4 properties x 64 cases ok");
            } else {
                out.passed = false;
                out.detail.push_str(&format!("; proptest failures: {}", failures.join(" | ")));
            }
            if out.seconds > 300.0 {
                out.passed = false;
                out.detail.push_str("; over the 300s budget");
            }
        }
        println!("{out}");
        outcomes.push(out);
    }
    let failed: Vec<u32> = outcomes.iter().filter(|o| !o.passed).map(|o| o.id).collect();
    println!("acceptance: {} of {} criteria pass", outcomes.len() - failed.len(), outcomes.len());
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
