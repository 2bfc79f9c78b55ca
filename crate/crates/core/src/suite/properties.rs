//! Properties of the ideal kernel, as plain functions so that both the
//! seeded sampler here and property-test runners can drive them.

use rand::Rng;

use crate::error::Result;
use crate::idealkit::local::random_invertible;
use crate::idealkit::Ideal;
use crate::polycore::{keyed_rng, monomials_of_degree, Field, FormSpace, Monomial, Poly, PrimeField};

pub const PROPERTY_PRIME: u64 = 1_000_003;

pub fn property_field() -> PrimeField {
    PrimeField::new(PROPERTY_PRIME).expect("admissible prime")
}

/// Form of `degree` in 4 variables from `(monomial index, coefficient)`
/// pairs; indices wrap around the monomial list.
pub fn form_from_indices<F: Field>(field: &F, degree: u32, terms: &[(usize, i64)]) -> Poly<F> {
    let monos = monomials_of_degree(4, degree);
    let terms = terms.iter().map(|&(k, c)| (monos[k % monos.len()], field.from_i64(c))).collect();
    Poly::from_terms(field.clone(), 4, terms)
}

/// Every S-pair of the reduced basis reduces to zero, and so does every generator.
pub fn spair_closure<F: Field>(gens: &[Poly<F>]) -> Result<bool> {
    let Some(first) = gens.iter().find(|g| !g.is_zero()) else { return Ok(true) };
    let i = Ideal::new(first.field().clone(), first.nvars(), gens.to_vec());
    let gb = i.gb()?;
    Ok(gb.verify() && gens.iter().all(|g| gb.contains(g)))
}

/// `sat(sat(I, J), J) = sat(I, J)`, and saturation by one form agrees with
/// the iterated quotient.
pub fn saturation_idempotent<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<bool> {
    let once = i.saturate(j)?;
    if !once.saturate(j)?.equals(&once)? {
        return Ok(false);
    }
    match j.gens().first() {
        Some(g) => i.saturate_by(g)?.equals(&i.saturate_by_iteration(g)?),
        None => Ok(true),
    }
}

fn minimize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.deg());
    let mut out: Vec<Monomial> = Vec::new();
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn mono_intersect(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    minimize(a.iter().flat_map(|x| b.iter().map(move |y| x.lcm(y))).collect())
}

/// `(a) : y` for a monomial ideal `(a)`.
fn mono_quotient_by(a: &[Monomial], y: &Monomial) -> Vec<Monomial> {
    minimize(a.iter().map(|x| x.gcd(y).div(x).expect("gcd divides")).collect())
}

fn mono_quotient(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    let mut parts = b.iter().map(|y| mono_quotient_by(a, y));
    let first = parts.next().unwrap_or_else(|| vec![Monomial::one()]);
    parts.fold(first, |acc, p| mono_intersect(&acc, &p))
}

fn mono_saturate(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    let mut cur = minimize(a.to_vec());
    loop {
        let next = mono_quotient(&cur, b);
        let same = next.len() == cur.len() && next.iter().all(|m| cur.contains(m));
        if same {
            return cur;
        }
        cur = next;
    }
}

fn mono_ideal(field: &PrimeField, gens: &[Monomial]) -> Ideal<PrimeField> {
    let polys = gens.iter().map(|m| Poly::monomial(*field, 4, *m, field.one())).collect();
    Ideal::new(*field, 4, polys)
}

/// Intersection, quotient and saturation of two monomial ideals agree with
/// the combinatorial formulas (lcm of generators, `x / gcd(x, y)`).
pub fn monomial_oracle(a: &[Monomial], b: &[Monomial]) -> Result<bool> {
    if a.is_empty() || b.is_empty() {
        return Ok(true);
    }
    let f = property_field();
    let (i, j) = (mono_ideal(&f, a), mono_ideal(&f, b));
    Ok(i.intersect(&j)?.equals(&mono_ideal(&f, &mono_intersect(a, b)))?
        && i.quotient(&j)?.equals(&mono_ideal(&f, &mono_quotient(a, b)))?
        && i.saturate(&j)?.equals(&mono_ideal(&f, &mono_saturate(a, b)))?)
}

/// The Hilbert function and polynomial are unchanged by an invertible linear substitution.
pub fn hilbert_invariant<F: Field>(i: &Ideal<F>, m: &[Vec<F::Elem>]) -> Result<bool> {
    let (a, b) = (i.hilbert()?, i.substitute(m).hilbert()?);
    Ok(a.dimension == b.dimension
        && a.degree == b.degree
        && a.p_a == b.p_a
        && (0..8).all(|k| a.hilbert_function(k) == b.hilbert_function(k))
        && (0..4).all(|k| a.hilbert_polynomial(k) == b.hilbert_polynomial(k)))
}

/// Counts of checked cases and descriptions of the failing ones.
#[derive(Clone, Debug, Default)]
pub struct KernelReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl KernelReport {
    fn record(&mut self, what: impl FnOnce() -> String, ok: Result<bool>) {
        self.checked += 1;
        match ok {
            Ok(true) => {}
            Ok(false) => self.failures.push(what()),
            Err(e) => self.failures.push(format!("{}: {e}", what())),
        }
    }
}

/// Monomials of degree at most 4 in 4 variables.
pub fn small_monomials() -> Vec<Monomial> {
    (0..=4).flat_map(|d| monomials_of_degree(4, d)).collect()
}

fn random_monomials<R: Rng + ?Sized>(pool: &[Monomial], rng: &mut R) -> Vec<Monomial> {
    let k = rng.gen_range(1..=4);
    (0..k).map(|_| pool[rng.gen_range(0..pool.len())]).collect()
}

fn random_sparse_forms<R: Rng + ?Sized>(field: &PrimeField, rng: &mut R) -> Vec<Poly<PrimeField>> {
    let k = rng.gen_range(2..=4);
    (0..k)
        .map(|_| {
            let d = rng.gen_range(1..=3);
            let terms: Vec<(usize, i64)> = (0..rng.gen_range(1..=4)).map(|_| (rng.gen(), rng.gen_range(-9..=9))).collect();
            form_from_indices(field, d, &terms)
        })
        .collect()
}

/// Seeded run of all four properties: `cases` random instances of each, and
/// the monomial oracle on every pair of principal monomial ideals of degree at most 4.
pub fn sampled_kernel_properties(seed: u64, cases: usize) -> KernelReport {
    let f = property_field();
    let mut rng = keyed_rng(seed, "kernel-properties");
    let mut report = KernelReport::default();
    let pool = small_monomials();
    for x in &pool {
        for y in &pool {
            report.record(|| format!("monomial oracle on ({x:?}), ({y:?})"), monomial_oracle(&[*x], &[*y]));
        }
    }
    for _ in 0..cases {
        let gens = random_sparse_forms(&f, &mut rng);
        report.record(|| format!("S-pairs of {gens:?}"), spair_closure(&gens));

        let (a, b) = (random_monomials(&pool, &mut rng), random_monomials(&pool, &mut rng));
        report.record(|| format!("monomial oracle on {a:?}, {b:?}"), monomial_oracle(&a, &b));

        let i = Ideal::new(f, 4, random_sparse_forms(&f, &mut rng));
        let lin = FormSpace::full(f, 4, 1);
        let j = Ideal::new(f, 4, vec![lin.random_element(&mut rng), lin.random_element(&mut rng)]);
        report.record(|| format!("saturation of {:?} by {:?}", i.gens(), j.gens()), saturation_idempotent(&i, &j));

        let m = random_invertible(&f, 4, &mut rng);
        report.record(|| format!("Hilbert data of {:?}", i.gens()), hilbert_invariant(&i, &m));
    }
    report
}
