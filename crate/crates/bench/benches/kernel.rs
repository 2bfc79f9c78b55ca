use cremona_bench::{family_map, random_ideal};
use cremona_core::cremona::{analyze, AnalysisOptions};
use cremona_core::families::FamilyLabel;
use cremona_core::hudson::hudson_vector;
use cremona_core::idealkit::Ideal;
use cremona_core::PrimeField;
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn groebner(c: &mut Criterion) {
    // a fresh ideal per iteration, since bases are cached
    let fresh = |i: &Ideal<PrimeField>| Ideal::new(*i.field(), 4, i.gens().to_vec());
    let quadrics = random_ideal(2, 3, 1);
    c.bench_function("gb/3 quadrics", |b| b.iter(|| fresh(black_box(&quadrics)).gb().unwrap()));
    let cubics = random_ideal(3, 4, 2);
    c.bench_function("gb/4 cubics", |b| b.iter(|| fresh(black_box(&cubics)).gb().unwrap()));
}

fn saturation(c: &mut Criterion) {
    let base = family_map(FamilyLabel::E23, 1).ideal();
    let lines = random_ideal(1, 2, 3);
    c.bench_function("saturate/E23 base by a line", |b| b.iter(|| {
            let base = Ideal::new(*base.field(), 4, base.gens().to_vec());
            black_box(base).saturate(&lines).unwrap()
        }));
}

fn analysis(c: &mut Criterion) {
    let mut group = c.benchmark_group("analyze");
    group.sample_size(20);
    for label in [FamilyLabel::E2, FamilyLabel::E7, FamilyLabel::E23, FamilyLabel::Ruled(4)] {
        let map = family_map(label, 1);
        group.bench_function(label.to_string(), |b| {
            b.iter(|| analyze(black_box(&map), 1, &AnalysisOptions::default()).unwrap())
        });
    }
    let map = family_map(FamilyLabel::E23, 1);
    let a = analyze(&map, 1, &AnalysisOptions::default()).unwrap();
    group.bench_function("hudson vector E23", |b| b.iter(|| hudson_vector(black_box(&map), &a, 1).unwrap()));
    group.finish();
}

criterion_group!(benches, groebner, saturation, analysis);
criterion_main!(benches);
