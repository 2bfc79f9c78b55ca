//! Fixtures shared by the benchmarks in `benches/`.

use cremona_core::cremona::RationalMap;
use cremona_core::families::{construct, FamilyLabel};
use cremona_core::idealkit::Ideal;
use cremona_core::polycore::{keyed_rng, FormSpace};
use cremona_core::PrimeField;

pub const BENCH_PRIME: u64 = 1_000_003;

pub fn field() -> PrimeField {
    PrimeField::new(BENCH_PRIME).expect("admissible prime")
}

/// `count` random forms of `degree` in four variables.
pub fn random_ideal(degree: u32, count: usize, seed: u64) -> Ideal<PrimeField> {
    let f = field();
    let space = FormSpace::full(f, 4, degree);
    let mut rng = keyed_rng(seed, "bench-ideal");
    Ideal::new(f, 4, (0..count).map(|_| space.random_element(&mut rng)).collect())
}

/// A family member over the bench field.
pub fn family_map(label: FamilyLabel, seed: u64) -> RationalMap<PrimeField> {
    construct(label, seed, &field()).expect("family constructs")
}
