//! Ring, order and reduction properties of the polynomial layer.

use cremona_core::polycore::{parse_poly, print_poly};
use cremona_core::suite::properties::form_from_indices;
use cremona_core::{Field, Monomial, MonomialOrder, Poly, PrimeField, Rationals};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

const P: u64 = 1_000_003;

fn gf() -> PrimeField {
    PrimeField::new(P).unwrap()
}

type IntTerms = Vec<(i64, [u32; 4])>;

fn int_terms() -> impl Strategy<Value = IntTerms> {
    prop::collection::vec((-50i64..=50, prop::array::uniform4(0u32..=3)), 0..=6)
}

fn poly_over<F: Field>(field: &F, terms: &IntTerms) -> Poly<F> {
    terms.iter().fold(Poly::zero(field.clone(), 4), |acc, (c, e)| {
        acc.add(&Poly::monomial(field.clone(), 4, Monomial::from_exps(e), field.from_i64(*c)))
    })
}

/// Rational polynomial with denominators from `dens` (all prime to `P`).
fn rational_poly(terms: &IntTerms, dens: &[i64]) -> Poly<Rationals> {
    terms.iter().enumerate().fold(Poly::zero(Rationals, 4), |acc, (k, (c, e))| {
        let d = dens.get(k).copied().unwrap_or(1);
        let r = BigRational::new(BigInt::from(*c), BigInt::from(d));
        acc.add(&Poly::monomial(Rationals, 4, Monomial::from_exps(e), r))
    })
}

fn reduce(f: &Poly<Rationals>) -> Poly<PrimeField> {
    let p = gf();
    f.map_field(&p, |x| p.from_rational(x)).expect("denominators are prime to p")
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::array::uniform4(0u32..=5).prop_map(|e| Monomial::from_exps(&e))
}

fn orders() -> Vec<MonomialOrder> {
    vec![
        MonomialOrder::Grevlex,
        MonomialOrder::Lex,
        MonomialOrder::BlockElim(1),
        MonomialOrder::BlockElim(2),
        MonomialOrder::WeightedGrevlex(vec![1, 2, 3, 4]),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms_over_gf(a in int_terms(), b in int_terms(), c in int_terms()) {
        let f = gf();
        let (a, b, c) = (poly_over(&f, &a), poly_over(&f, &b), poly_over(&f, &c));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn ring_axioms_over_q(a in int_terms(), b in int_terms(), c in int_terms(), d in 1i64..=9) {
        let dens = [d, 1, d + 1, 3];
        let (a, b, c) = (rational_poly(&a, &dens), rational_poly(&b, &dens), rational_poly(&c, &[1, d]));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn orders_are_multiplicative(a in monomial(), b in monomial(), m in monomial()) {
        for order in orders() {
            if order.cmp(&a, &b) == std::cmp::Ordering::Greater {
                prop_assert_eq!(order.cmp(&m.mul(&a), &m.mul(&b)), std::cmp::Ordering::Greater, "{:?}", order);
            }
        }
    }

    #[test]
    fn products_of_forms_are_forms(
        da in 0u32..=3, db in 0u32..=3,
        ta in prop::collection::vec((0usize..64, 1i64..=30), 1..=5),
        tb in prop::collection::vec((0usize..64, 1i64..=30), 1..=5),
    ) {
        let f = gf();
        let (a, b) = (form_from_indices(&f, da, &ta), form_from_indices(&f, db, &tb));
        prop_assume!(!a.is_zero() && !b.is_zero());
        let ab = a.mul(&b);
        prop_assert_eq!(ab.homogeneous_degree(), Some(da + db));
    }

    #[test]
    fn euler_relation(d in 0u32..=4, t in prop::collection::vec((0usize..64, -30i64..=30), 1..=6)) {
        let f = gf();
        let form = form_from_indices(&f, d, &t);
        let lhs = form.scale(&f.from_i64(d as i64));
        let rhs = (0..4).fold(Poly::zero(f, 4), |acc, i| {
            acc.add(&Poly::var(f, 4, i).mul(&form.partial(i)))
        });
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reduction_commutes_with_arithmetic(a in int_terms(), b in int_terms(), d in 1i64..=20) {
        let dens = [d, 2, 7, d];
        let (qa, qb) = (rational_poly(&a, &dens), rational_poly(&b, &dens));
        let (pa, pb) = (reduce(&qa), reduce(&qb));
        prop_assert_eq!(reduce(&qa.add(&qb)), pa.add(&pb));
        prop_assert_eq!(reduce(&qa.sub(&qb)), pa.sub(&pb));
        prop_assert_eq!(reduce(&qa.mul(&qb)), pa.mul(&pb));
        prop_assert_eq!(reduce(&qa.partial(1)), pa.partial(1));
        let pt = [3i64, -1, 4, 1];
        let qpt: Vec<BigRational> = pt.iter().map(|&x| Rationals.from_i64(x)).collect();
        let ppt: Vec<u32> = pt.iter().map(|&x| gf().from_i64(x)).collect();
        prop_assert_eq!(gf().from_rational(&qa.eval(&qpt)), Some(pa.eval(&ppt)));
    }

    #[test]
    fn printing_round_trips(a in int_terms(), d in 1i64..=9) {
        let q = rational_poly(&a, &[d, 1, 2]);
        prop_assert_eq!(parse_poly(&Rationals, 4, &print_poly(&q)).unwrap(), q.clone());
        let p = reduce(&q);
        prop_assert_eq!(parse_poly(&gf(), 4, &print_poly(&p)).unwrap(), p);
    }
}
