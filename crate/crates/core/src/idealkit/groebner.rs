//! Buchberger's algorithm with Gebauer-Moeller pair pruning.

use std::cmp::Ordering;

use super::budget::Budget;
use crate::error::{AlgebraError, Result};
use crate::polycore::poly::{merge_axpy, normalize_terms, Term};
use crate::polycore::{Field, Monomial, MonomialOrder, Poly};

/// Pair-selection strategy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Selection {
    /// Smallest lcm under the term order.
    Normal,
    /// Smallest sugar degree, ties broken by the lcm.
    #[default]
    Sugar,
}

/// Reduced Groebner basis under a fixed order. Elements are monic, sorted by
/// leading monomial (descending), with terms sorted under the same order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    field: F,
    nvars: usize,
    order: MonomialOrder,
    elems: Vec<Vec<Term<F>>>,
}

#[derive(Clone)]
struct Elem<F: Field> {
    terms: Vec<Term<F>>,
    sugar: u32,
    mask: u16,
}

impl<F: Field> Elem<F> {
    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }
}

#[derive(Clone, Copy)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

fn make_monic<F: Field>(field: &F, terms: &mut [Term<F>]) {
    let inv = field.inv(&terms[0].1).expect("nonzero leading coefficient");
    if !field.is_one(&inv) {
        for t in terms.iter_mut() {
            t.1 = field.mul(&t.1, &inv);
        }
    }
}

/// Full reduction of `f` by the active elements (leading coefficient one).
fn reduce<F: Field>(
    field: &F,
    order: &MonomialOrder,
    f: Vec<Term<F>>,
    basis: &[Elem<F>],
    active: &[usize],
    sugar: &mut u32,
) -> Vec<Term<F>> {
    let mut done: Vec<Term<F>> = Vec::new();
    let mut cur = f;
    let mut start = 0;
    while start < cur.len() {
        let (m, c) = (cur[start].0, cur[start].1.clone());
        let mm = m.mask();
        let hit = active.iter().find(|&&k| {
            let g = &basis[k];
            g.mask & !mm == 0 && g.lm().divides(&m)
        });
        match hit {
            None => {
                done.push(cur[start].clone());
                start += 1;
            }
            Some(&k) => {
                let g = &basis[k];
                let q = g.lm().div(&m).unwrap();
                *sugar = (*sugar).max(g.sugar + q.deg());
                let shifted: Vec<Term<F>> = g.terms[1..].iter().map(|(x, y)| (x.mul(&q), y.clone())).collect();
                let neg = field.neg(&c);
                cur = merge_axpy(field, order, &cur[start + 1..], &neg, &shifted);
                start = 0;
            }
        }
    }
    done
}

fn pair_cmp(sel: Selection, order: &MonomialOrder, a: &Pair, b: &Pair) -> Ordering {
    match sel {
        Selection::Normal => order.cmp(&a.lcm, &b.lcm),
        Selection::Sugar => a.sugar.cmp(&b.sugar).then_with(|| order.cmp(&a.lcm, &b.lcm)),
    }
    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
}

/// Reduced Groebner basis of the ideal generated by `gens`.
pub fn groebner<F: Field>(
    field: &F,
    nvars: usize,
    gens: &[Poly<F>],
    order: &MonomialOrder,
    sel: Selection,
    budget: &Budget,
) -> Result<GroebnerBasis<F>> {
    let mut basis: Vec<Elem<F>> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut processed = 0usize;

    // Seed with the generators, reduced against each other as they arrive.
    let mut inputs: Vec<Vec<Term<F>>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            assert_eq!(g.nvars(), nvars, "generator in the wrong ring");
            assert!(g.field() == field, "field mismatch");
            normalize_terms(field, order, g.terms().to_vec())
        })
        .collect();
    inputs.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    for t in inputs {
        let mut sugar = t.iter().map(|x| x.0.deg()).max().unwrap_or(0);
        let r = reduce(field, order, t, &basis, &active, &mut sugar);
        if !r.is_empty() {
            add_element(field, order, r, sugar, &mut basis, &mut active, &mut pairs, sel, budget)?;
        }
    }

    while let Some(p) = pairs.pop() {
        processed += 1;
        if processed > budget.max_pairs {
            return Err(AlgebraError::Budget(format!("more than {} S-pairs", budget.max_pairs)));
        }
        let (gi, gj) = (&basis[p.i], &basis[p.j]);
        let qi = gi.lm().div(&p.lcm).unwrap();
        let qj = gj.lm().div(&p.lcm).unwrap();
        let a: Vec<Term<F>> = gi.terms[1..].iter().map(|(m, c)| (m.mul(&qi), c.clone())).collect();
        let b: Vec<Term<F>> = gj.terms[1..].iter().map(|(m, c)| (m.mul(&qj), c.clone())).collect();
        let m1 = field.neg(&field.one());
        let s = merge_axpy(field, order, &a, &m1, &b);
        if s.is_empty() {
            continue;
        }
        let mut sugar = p.sugar;
        let r = reduce(field, order, s, &basis, &active, &mut sugar);
        if !r.is_empty() {
            add_element(field, order, r, sugar, &mut basis, &mut active, &mut pairs, sel, budget)?;
        }
    }

    // interreduce the minimal basis
    let mut elems: Vec<Vec<Term<F>>> = Vec::new();
    let act = active.clone();
    for &k in &act {
        let others: Vec<usize> = act.iter().copied().filter(|&x| x != k).collect();
        let head = basis[k].terms[0].clone();
        let mut sugar = 0;
        let tail = reduce(field, order, basis[k].terms[1..].to_vec(), &basis, &others, &mut sugar);
        let mut t = Vec::with_capacity(tail.len() + 1);
        t.push(head);
        t.extend(tail);
        elems.push(t);
    }
    elems.sort_by(|a, b| order.cmp(&b[0].0, &a[0].0));
    Ok(GroebnerBasis { field: field.clone(), nvars, order: order.clone(), elems })
}

#[allow(clippy::too_many_arguments)]
fn add_element<F: Field>(
    field: &F,
    order: &MonomialOrder,
    mut terms: Vec<Term<F>>,
    sugar: u32,
    basis: &mut Vec<Elem<F>>,
    active: &mut Vec<usize>,
    pairs: &mut Vec<Pair>,
    sel: Selection,
    budget: &Budget,
) -> Result<()> {
    make_monic(field, &mut terms);
    let mask = terms[0].0.mask();
    let h = basis.len();
    basis.push(Elem { terms, sugar, mask });
    let lh = *basis[h].lm();

    // Gebauer-Moeller: new pairs
    let mut cands: Vec<Pair> = active
        .iter()
        .map(|&g| {
            let lg = basis[g].lm();
            let lcm = lh.lcm(lg);
            let s = (basis[h].sugar + lcm.deg() - lh.deg()).max(basis[g].sugar + lcm.deg() - lg.deg());
            Pair { i: g, j: h, lcm, sugar: s }
        })
        .collect();
    let mut kept: Vec<Pair> = Vec::new();
    let mut idx = 0;
    while idx < cands.len() {
        let p = cands[idx];
        let coprime = basis[p.i].lm().is_coprime(&lh);
        let dominated = cands[idx + 1..].iter().any(|q| q.lcm.divides(&p.lcm))
            || kept.iter().any(|q| q.lcm.divides(&p.lcm));
        if coprime || !dominated {
            kept.push(p);
        }
        idx += 1;
    }
    cands.clear();
    // old pairs made redundant by the new leading monomial
    pairs.retain(|p| {
        !(lh.divides(&p.lcm)
            && lh.lcm(basis[p.i].lm()) != p.lcm
            && lh.lcm(basis[p.j].lm()) != p.lcm)
    });
    for p in kept {
        if !basis[p.i].lm().is_coprime(&lh) {
            if p.lcm.deg() > budget.max_degree {
                return Err(AlgebraError::Budget(format!("S-pair degree above {}", budget.max_degree)));
            }
            pairs.push(p);
        }
    }
    active.retain(|&g| !lh.divides(basis[g].lm()));
    active.push(h);
    // keep the cheapest pair at the end so pop() returns it
    pairs.sort_by(|a, b| pair_cmp(sel, order, b, a));
    Ok(())
}

impl<F: Field> GroebnerBasis<F> {
    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn nvars(&self) -> usize {
        self.nvars
    }
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }
    pub fn len(&self) -> usize {
        self.elems.len()
    }
    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// The unit ideal has basis `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elems.len() == 1 && self.elems[0][0].0.deg() == 0
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elems.iter().map(|e| e[0].0).collect()
    }

    /// Basis elements as canonical polynomials.
    pub fn polys(&self) -> Vec<Poly<F>> {
        self.elems
            .iter()
            .map(|e| Poly::from_terms(self.field.clone(), self.nvars, e.clone()))
            .collect()
    }

    /// Terms of element `k` in the basis order.
    pub fn terms(&self, k: usize) -> &[Term<F>] {
        &self.elems[k]
    }

    /// Remainder of `f` with no term divisible by a leading monomial.
    pub fn normal_form(&self, f: &Poly<F>) -> Poly<F> {
        assert!(f.field() == &self.field && f.nvars() == self.nvars, "ring mismatch");
        let basis: Vec<Elem<F>> = self
            .elems
            .iter()
            .map(|t| Elem { terms: t.clone(), sugar: 0, mask: t[0].0.mask() })
            .collect();
        let active: Vec<usize> = (0..basis.len()).collect();
        let terms = normalize_terms(&self.field, &self.order, f.terms().to_vec());
        let mut s = 0;
        let r = reduce(&self.field, &self.order, terms, &basis, &active, &mut s);
        Poly::from_terms(self.field.clone(), self.nvars, r)
    }

    pub fn contains(&self, f: &Poly<F>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Every S-polynomial reduces to zero (the Buchberger criterion).
    pub fn verify(&self) -> bool {
        let polys = self.polys();
        for i in 0..self.elems.len() {
            for j in i + 1..self.elems.len() {
                let (a, b) = (&self.elems[i], &self.elems[j]);
                let l = a[0].0.lcm(&b[0].0);
                let pa = polys[i].mul_term(&a[0].0.div(&l).unwrap(), &self.field.one());
                let pb = polys[j].mul_term(&b[0].0.div(&l).unwrap(), &self.field.one());
                if !self.normal_form(&pa.sub(&pb)).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Whether this is the same reduced basis as `other` (equal ideals when orders agree).
    pub fn same_as(&self, other: &Self) -> bool {
        self.order == other.order && self.elems == other.elems
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{parse_poly, PrimeField, Rationals};

    fn qs(v: &[&str]) -> Vec<Poly<Rationals>> {
        v.iter().map(|s| parse_poly(&Rationals, 4, s).unwrap()).collect()
    }

    #[test]
    fn linear_ideal_is_its_own_basis() {
        let g = groebner(&Rationals, 4, &qs(&["z0", "z1"]), &MonomialOrder::Grevlex, Selection::Normal, &Budget::default())
            .unwrap();
        assert_eq!(g.polys(), qs(&["z0", "z1"]));
    }

    #[test]
    fn twisted_cubic_basis() {
        let gens = qs(&["z0*z2 - z1^2", "z1*z3 - z2^2", "z0*z3 - z1*z2"]);
        let g = groebner(&Rationals, 4, &gens, &MonomialOrder::Grevlex, Selection::Normal, &Budget::default()).unwrap();
        assert_eq!(g.len(), 3);
        assert!(g.verify());
        // hand reduction: z1^2 = z0*z2 modulo the first generator, and z0*z2 is standard
        let nf = g.normal_form(&qs(&["z1^2"])[0]);
        assert_eq!(nf, qs(&["z0*z2"])[0]);
        for f in &gens {
            assert!(g.contains(f));
        }
    }

    #[test]
    fn selections_agree() {
        let f = PrimeField::new(1_000_003).unwrap();
        let gens: Vec<Poly<PrimeField>> = ["z0*z1^2", "z0^2*z1", "z0^2*z2", "z1^2*z3", "z0*z3^2 + z1*z2^2 - z2^3"]
            .iter()
            .map(|s| parse_poly(&f, 4, s).unwrap())
            .collect();
        let b = Budget::default();
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex, MonomialOrder::BlockElim(2)] {
            let a = groebner(&f, 4, &gens, &order, Selection::Normal, &b).unwrap();
            let c = groebner(&f, 4, &gens, &order, Selection::Sugar, &b).unwrap();
            assert!(a.same_as(&c));
            assert!(a.verify());
        }
    }

    #[test]
    fn budget_is_enforced() {
        let f = crate::polycore::PrimeField::new(1_000_003).unwrap();
        let mut rng = crate::polycore::keyed_rng(1, "budget");
        let gens: Vec<Poly<_>> =
            (0..4).map(|_| crate::polycore::random_form(&f, 3, &mut rng, &[]).unwrap()).collect();
        let tiny = Budget { max_pairs: 5, max_degree: 30 };
        let r = groebner(&f, 4, &gens, &MonomialOrder::Grevlex, Selection::Sugar, &tiny);
        assert!(matches!(r, Err(AlgebraError::Budget(_))));
        let low = Budget { max_pairs: 1000, max_degree: 4 };
        let r = groebner(&f, 4, &gens, &MonomialOrder::Grevlex, Selection::Sugar, &low);
        assert!(matches!(r, Err(AlgebraError::Budget(_))));
        assert!(groebner(&f, 4, &gens, &MonomialOrder::Grevlex, Selection::Sugar, &Budget::default()).is_ok());
    }
}
