//! Sum, product, intersection, quotient, saturation and elimination.

use super::Ideal;
use crate::error::{AlgebraError, Result};
use crate::polycore::{linalg, Field, Monomial, MonomialOrder, Poly, MAX_VARS};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealOp {
    Sum,
    Product,
    Intersection,
    /// `(I : J)`.
    Quotient,
    /// `(I : J^inf)`.
    Saturation,
}

pub fn ideal_ops<F: Field>(i: &Ideal<F>, j: &Ideal<F>, op: IdealOp) -> Result<Ideal<F>> {
    if i.field() != j.field() {
        return Err(AlgebraError::FieldMismatch);
    }
    if i.nvars() != j.nvars() {
        return Err(AlgebraError::RingMismatch);
    }
    match op {
        IdealOp::Sum => Ok(i.sum(j)),
        IdealOp::Product => Ok(i.product(j)),
        IdealOp::Intersection => i.intersect(j),
        IdealOp::Quotient => i.quotient(j),
        IdealOp::Saturation => i.saturate(j),
    }
}

/// Generators of `I ∩ k[z_k, .., z_{n-1}]`, as an ideal in `n - k` variables.
pub fn eliminate<F: Field>(i: &Ideal<F>, k: usize) -> Result<Ideal<F>> {
    assert!(k <= i.nvars());
    let g = i.groebner(&MonomialOrder::BlockElim(k))?;
    let keep: Vec<Poly<F>> =
        g.polys().into_iter().filter(|p| (0..k).all(|v| !p.involves(v))).map(|p| p.shift_down(k)).collect();
    Ok(Ideal::new(i.field().clone(), i.nvars() - k, keep))
}

/// Invertible `N` whose last column is `a`, and its inverse `M`: the
/// substitution `f(z·M)` turns the linear form with coefficients `a` into
/// the last variable, and `f(z·N)` undoes it.
fn linear_to_last<F: Field>(field: &F, a: &[F::Elem]) -> (Vec<Vec<F::Elem>>, Vec<Vec<F::Elem>>) {
    let n = a.len();
    let k = (0..n).rev().find(|&i| !field.is_zero(&a[i])).expect("nonzero linear form");
    let mut nm = vec![vec![field.zero(); n]; n];
    let mut col = 0;
    for i in (0..n).filter(|&i| i != k) {
        nm[i][col] = field.one();
        col += 1;
    }
    for i in 0..n {
        nm[i][n - 1] = a[i].clone();
    }
    let m = linalg::inverse(field, &nm).expect("completion is invertible");
    (m, nm)
}

fn linear_coeffs<F: Field>(g: &Poly<F>) -> Option<Vec<F::Elem>> {
    if g.homogeneous_degree() != Some(1) {
        return None;
    }
    Some((0..g.nvars()).map(|i| g.coeff(&Monomial::var(i))).collect())
}

impl<F: Field> Ideal<F> {
    pub fn sum(&self, other: &Ideal<F>) -> Ideal<F> {
        let mut gens = self.gens().to_vec();
        gens.extend(other.gens().iter().cloned());
        Ideal::new(self.field().clone(), self.nvars(), gens)
    }

    pub fn product(&self, other: &Ideal<F>) -> Ideal<F> {
        let mut gens = Vec::new();
        for a in self.gens() {
            for b in other.gens() {
                gens.push(a.mul(b));
            }
        }
        Ideal::new(self.field().clone(), self.nvars(), gens)
    }

    /// Add polynomials to the generators.
    pub fn with(&self, extra: &[Poly<F>]) -> Ideal<F> {
        let mut gens = self.gens().to_vec();
        gens.extend(extra.iter().cloned());
        Ideal::new(self.field().clone(), self.nvars(), gens)
    }

    /// `I ∩ J` via `t·I + (1-t)·J` with `t` eliminated in a scratch ring.
    pub fn intersect(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        let (f, n) = (self.field().clone(), self.nvars());
        if self.gens().is_empty() || other.gens().is_empty() {
            return Ok(Ideal::zero(f, n));
        }
        if self.is_unit()? {
            return Ok(other.clone());
        }
        if other.is_unit()? {
            return Ok(self.clone());
        }
        assert!(n < MAX_VARS, "no room for the scratch variable");
        let t = Poly::var(f.clone(), n + 1, 0);
        let one = Poly::one(f.clone(), n + 1);
        let omt = one.sub(&t);
        let mut gens = Vec::new();
        for g in self.gb()?.polys() {
            gens.push(g.shift_up(1).mul(&t));
        }
        for g in other.gb()?.polys() {
            gens.push(g.shift_up(1).mul(&omt));
        }
        let scratch = Ideal::new(f, n + 1, gens);
        let mut out = eliminate(&scratch, 1)?;
        out.saturated = self.is_saturated() && other.is_saturated();
        Ok(out)
    }

    /// Intersection of several ideals.
    pub fn intersect_all(parts: &[Ideal<F>]) -> Result<Ideal<F>> {
        let mut it = parts.iter();
        let mut acc = it.next().expect("at least one ideal").clone();
        for p in it {
            acc = acc.intersect(p)?;
        }
        Ok(acc)
    }

    /// `(I : g)` for a single form.
    pub fn quotient_by(&self, g: &Poly<F>) -> Result<Ideal<F>> {
        if g.is_zero() || self.contains(g)? {
            return Ok(Ideal::unit(self.field().clone(), self.nvars()));
        }
        if g.is_constant() {
            return Ok(self.clone());
        }
        if let Some(a) = linear_coeffs(g) {
            return self.linear_quotient(&a, false);
        }
        self.weighted_colon(g, false)
    }

    /// `(I : g)` as `(I ∩ (g)) / g`. Slower than [`Ideal::quotient_by`]; kept as a cross-check.
    pub fn quotient_by_intersection(&self, g: &Poly<F>) -> Result<Ideal<F>> {
        let principal = Ideal::new(self.field().clone(), self.nvars(), vec![g.clone()]);
        let inter = self.intersect(&principal)?;
        let gens = inter.gens().iter().map(|h| h.div_exact(g).expect("multiple of g")).collect();
        Ok(Ideal::new(self.field().clone(), self.nvars(), gens))
    }

    /// `(I : J) = ∩_g (I : g)` over the generators of `J`.
    pub fn quotient(&self, j: &Ideal<F>) -> Result<Ideal<F>> {
        if j.gens().is_empty() {
            return Ok(Ideal::unit(self.field().clone(), self.nvars()));
        }
        let parts: Vec<Ideal<F>> = j.gens().iter().map(|g| self.quotient_by(g)).collect::<Result<_>>()?;
        Ideal::intersect_all(&parts)
    }

    /// `(I : g^inf)`.
    pub fn saturate_by(&self, g: &Poly<F>) -> Result<Ideal<F>> {
        if g.is_zero() {
            return Ok(Ideal::zero(self.field().clone(), self.nvars()));
        }
        if let Some(a) = linear_coeffs(g) {
            return self.linear_quotient(&a, true);
        }
        if g.is_constant() {
            return Ok(self.clone());
        }
        self.weighted_colon(g, true)
    }

    /// `(I : g^inf)` by iterating the quotient until the reduced basis stabilizes.
    pub fn saturate_by_iteration(&self, g: &Poly<F>) -> Result<Ideal<F>> {
        let mut cur = self.minimalized()?;
        loop {
            let next = cur.quotient_by_intersection(g)?.minimalized()?;
            if next.equals(&cur)? {
                return Ok(next);
            }
            cur = next;
        }
    }

    /// `(I : J^inf)`, using `(I : J^inf) = ∩_g (I : g^inf)` over generators of `J`.
    pub fn saturate(&self, j: &Ideal<F>) -> Result<Ideal<F>> {
        if j.gens().is_empty() {
            return Ok(Ideal::unit(self.field().clone(), self.nvars()));
        }
        let parts: Vec<Ideal<F>> = j.gens().iter().map(|g| self.saturate_by(g)).collect::<Result<_>>()?;
        let mut out = Ideal::intersect_all(&parts)?.minimalized()?;
        out.saturated = self.is_saturated();
        Ok(out)
    }

    /// Saturation with respect to the irrelevant ideal.
    pub fn saturate_irrelevant(&self) -> Result<Ideal<F>> {
        if self.is_saturated() {
            return Ok(self.clone());
        }
        let m = Ideal::irrelevant(self.field().clone(), self.nvars());
        let mut out = self.saturate(&m)?;
        out.saturated = true;
        Ok(out)
    }

    /// Quotient (or saturation) by a form `g` of degree `d`: adjoin `w` of
    /// weight `d` with `w - g`, divide a weighted grevlex basis (with `w`
    /// last) by `w`, then put `g` back for `w`.
    fn weighted_colon(&self, g: &Poly<F>, saturate: bool) -> Result<Ideal<F>> {
        let f = self.field().clone();
        let n = self.nvars();
        assert!(n < MAX_VARS, "no room for the scratch variable");
        let d = g.homogeneous_degree().ok_or(AlgebraError::NotHomogeneous)?;
        let w = Poly::var(f.clone(), n + 1, n);
        let mut gens: Vec<Poly<F>> = self.gb()?.polys().iter().map(|p| p.extend_vars(n + 1)).collect();
        gens.push(w.sub(&g.extend_vars(n + 1)));
        let mut weights = vec![1u32; n];
        weights.push(d);
        let lifted = Ideal::new(f.clone(), n + 1, gens);
        let basis = lifted.groebner(&MonomialOrder::WeightedGrevlex(weights))?;
        let mut images: Vec<Poly<F>> = (0..n).map(|i| Poly::var(f.clone(), n, i)).collect();
        images.push(g.clone());
        let out: Vec<Poly<F>> = basis
            .polys()
            .into_iter()
            .map(|p| {
                let lowest = p.terms().iter().map(|(mo, _)| mo.exp(n)).min().unwrap_or(0);
                let e = if saturate { lowest } else { lowest.min(1) };
                let terms = p.terms().iter().map(|(mo, c)| (mo.with_exp(n, mo.exp(n) - e), c.clone())).collect();
                Poly::from_terms(f.clone(), n + 1, terms).compose(&images)
            })
            .collect();
        let mut out = Ideal::new(f, n, out);
        out.saturated = self.is_saturated();
        Ok(out)
    }

    /// Quotient (or saturation) by a linear form: move it to the last
    /// variable, where grevlex bases divide through by that variable.
    fn linear_quotient(&self, a: &[F::Elem], saturate: bool) -> Result<Ideal<F>> {
        let f = self.field().clone();
        let n = self.nvars();
        let (m, back) = linear_to_last(&f, a);
        let moved = self.substitute(&m);
        let g = moved.gb()?;
        let last = n - 1;
        let gens: Vec<Poly<F>> = g
            .polys()
            .into_iter()
            .map(|p| {
                let lowest = p.terms().iter().map(|(mo, _)| mo.exp(last)).min().unwrap_or(0);
                let e = if saturate { lowest } else { lowest.min(1) };
                if e == 0 {
                    p
                } else {
                    let terms = p.terms().iter().map(|(mo, c)| (mo.with_exp(last, mo.exp(last) - e), c.clone())).collect();
                    Poly::from_terms(f.clone(), n, terms)
                }
            })
            .map(|p| p.substitute_matrix(&back))
            .collect();
        let mut out = Ideal::new(f, n, gens);
        out.saturated = self.is_saturated();
        Ok(out)
    }
}
