//! Sparse multivariate polynomials over an exact field.

use std::cmp::Ordering;
use std::fmt;

use super::field::Field;
use super::monomial::{Monomial, MonomialOrder, MAX_VARS};
use crate::error::{AlgebraError, Result};

/// A term: monomial and nonzero coefficient.
pub type Term<F> = (Monomial, <F as Field>::Elem);

/// Sparse polynomial in `nvars` variables. Terms are kept in grevlex
/// descending order with no zero coefficients and no repeated monomials.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<F: Field> {
    field: F,
    nvars: usize,
    terms: Vec<Term<F>>,
}

/// The four arithmetic operations of [`poly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    /// Multiply the first operand by the constant second operand.
    Scale,
}

/// Checked arithmetic: field and ring must match, and sums of forms must have equal degree.
pub fn poly_arith<F: Field>(a: &Poly<F>, b: &Poly<F>, op: ArithOp) -> Result<Poly<F>> {
    if a.field != b.field {
        return Err(AlgebraError::FieldMismatch);
    }
    if a.nvars != b.nvars {
        return Err(AlgebraError::RingMismatch);
    }
    match op {
        ArithOp::Add | ArithOp::Sub => {
            if !a.is_zero() && !b.is_zero() {
                match (a.homogeneous_degree(), b.homogeneous_degree()) {
                    (Some(da), Some(db)) if da == db => {}
                    (Some(da), Some(db)) => return Err(AlgebraError::DegreeMismatch(da, db)),
                    _ => return Err(AlgebraError::NotHomogeneous),
                }
            }
            Ok(if op == ArithOp::Add { a.add(b) } else { a.sub(b) })
        }
        ArithOp::Mul => Ok(a.mul(b)),
        ArithOp::Scale => match b.terms.as_slice() {
            [] => Ok(Poly::zero(a.field.clone(), a.nvars)),
            [(m, c)] if m.deg() == 0 => Ok(a.scale(c)),
            _ => Err(AlgebraError::Invalid("scale factor must be a constant".into())),
        },
    }
}

/// Merge two term lists sorted descending under `order`, computing `a + c*b`.
pub(crate) fn merge_axpy<F: Field>(
    field: &F,
    order: &MonomialOrder,
    a: &[Term<F>],
    c: &F::Elem,
    b: &[Term<F>],
) -> Vec<Term<F>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match order.cmp(&a[i].0, &b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((b[j].0, field.mul(c, &b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let s = field.add(&a[i].1, &field.mul(c, &b[j].1));
                if !field.is_zero(&s) {
                    out.push((a[i].0, s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|(m, x)| (*m, field.mul(c, x))));
    out
}

/// Sort, combine like terms, drop zeros.
pub(crate) fn normalize_terms<F: Field>(field: &F, order: &MonomialOrder, mut terms: Vec<Term<F>>) -> Vec<Term<F>> {
    terms.sort_by(|x, y| order.cmp(&y.0, &x.0));
    let mut out: Vec<Term<F>> = Vec::with_capacity(terms.len());
    for (m, c) in terms {
        if let Some(last) = out.last_mut() {
            if last.0 == m {
                last.1 = field.add(&last.1, &c);
                continue;
            }
        }
        out.push((m, c));
    }
    out.retain(|(_, c)| !field.is_zero(c));
    out
}

impl<F: Field> Poly<F> {
    pub fn zero(field: F, nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS);
        Poly { field, nvars, terms: Vec::new() }
    }

    pub fn constant(field: F, nvars: usize, c: F::Elem) -> Self {
        Self::monomial(field, nvars, Monomial::one(), c)
    }

    pub fn one(field: F, nvars: usize) -> Self {
        let c = field.one();
        Self::constant(field, nvars, c)
    }

    pub fn var(field: F, nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let c = field.one();
        Self::monomial(field, nvars, Monomial::var(i), c)
    }

    pub fn monomial(field: F, nvars: usize, m: Monomial, c: F::Elem) -> Self {
        assert!(m.support_len() <= nvars, "monomial outside the ring");
        let terms = if field.is_zero(&c) { Vec::new() } else { vec![(m, c)] };
        Poly { field, nvars, terms }
    }

    /// Build from arbitrary terms (any order, repeats allowed).
    pub fn from_terms(field: F, nvars: usize, terms: Vec<Term<F>>) -> Self {
        assert!(terms.iter().all(|(m, _)| m.support_len() <= nvars), "monomial outside the ring");
        let terms = normalize_terms(&field, &MonomialOrder::Grevlex, terms);
        Poly { field, nvars, terms }
    }

    /// Build from integer coefficients and exponent vectors.
    pub fn from_int_terms(field: F, nvars: usize, terms: &[(i64, &[u32])]) -> Self {
        let t = terms.iter().map(|(c, e)| (Monomial::from_exps(e), field.from_i64(*c))).collect();
        Self::from_terms(field, nvars, t)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[Term<F>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<F>> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.deg() == 0)
    }

    /// Maximal total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.deg()).max()
    }

    /// Common degree of all terms, if any. Zero is homogeneous of every degree and returns `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.deg();
        self.terms.iter().all(|(m, _)| m.deg() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Leading term under grevlex.
    pub fn leading(&self) -> Option<&Term<F>> {
        self.terms.first()
    }

    pub fn coeff(&self, m: &Monomial) -> F::Elem {
        self.terms
            .iter()
            .find(|(x, _)| x == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.field.zero())
    }

    fn check(&self, other: &Self) {
        assert!(self.field == other.field, "field mismatch");
        assert!(self.nvars == other.nvars, "ring mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let one = self.field.one();
        let terms = merge_axpy(&self.field, &MonomialOrder::Grevlex, &self.terms, &one, &other.terms);
        Poly { field: self.field.clone(), nvars: self.nvars, terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        let m1 = self.field.neg(&self.field.one());
        let terms = merge_axpy(&self.field, &MonomialOrder::Grevlex, &self.terms, &m1, &other.terms);
        Poly { field: self.field.clone(), nvars: self.nvars, terms }
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &F::Elem, other: &Self) -> Self {
        self.check(other);
        if self.field.is_zero(c) {
            return self.clone();
        }
        let terms = merge_axpy(&self.field, &MonomialOrder::Grevlex, &self.terms, c, &other.terms);
        Poly { field: self.field.clone(), nvars: self.nvars, terms }
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (*m, self.field.neg(c))).collect();
        Poly { field: self.field.clone(), nvars: self.nvars, terms }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Poly::zero(self.field.clone(), self.nvars);
        }
        let terms = self.terms.iter().map(|(m, x)| (*m, self.field.mul(c, x))).collect();
        Poly { field: self.field.clone(), nvars: self.nvars, terms }
    }

    pub fn mul_term(&self, mono: &Monomial, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Poly::zero(self.field.clone(), self.nvars);
        }
        let terms = self.terms.iter().map(|(m, x)| (m.mul(mono), self.field.mul(c, x))).collect();
        Poly { field: self.field.clone(), nvars: self.nvars, terms }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc: Vec<Term<F>> = Vec::new();
        for (m, c) in &small.terms {
            let row: Vec<Term<F>> = big.terms.iter().map(|(x, y)| (x.mul(m), self.field.mul(c, y))).collect();
            let one = self.field.one();
            acc = merge_axpy(&self.field, &MonomialOrder::Grevlex, &acc, &one, &row);
        }
        Poly { field: self.field.clone(), nvars: self.nvars, terms: acc }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Poly::one(self.field.clone(), self.nvars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.field.inv(c).expect("nonzero");
                self.scale(&inv)
            }
        }
    }

    /// Value at a coordinate vector.
    pub fn eval(&self, pt: &[F::Elem]) -> F::Elem {
        assert_eq!(pt.len(), self.nvars, "point has wrong length");
        let f = &self.field;
        let maxd = self.degree().unwrap_or(0) as usize;
        // powers table per coordinate
        let pows: Vec<Vec<F::Elem>> = pt
            .iter()
            .map(|x| {
                let mut v = Vec::with_capacity(maxd + 1);
                v.push(f.one());
                for k in 0..maxd {
                    let next = f.mul(&v[k], x);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = f.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, pw) in pows.iter().enumerate() {
                let e = m.exp(i) as usize;
                if e > 0 {
                    t = f.mul(&t, &pw[e]);
                }
            }
            acc = f.add(&acc, &t);
        }
        acc
    }

    /// Value at a projective point: rejects the all-zero vector and non-homogeneous input.
    pub fn evaluate(&self, pt: &[F::Elem]) -> Result<F::Elem> {
        if pt.iter().all(|x| self.field.is_zero(x)) {
            return Err(AlgebraError::ZeroPoint);
        }
        if !self.is_homogeneous() {
            return Err(AlgebraError::NotHomogeneous);
        }
        Ok(self.eval(pt))
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(i) > 0)
            .map(|(m, c)| {
                let e = m.exp(i);
                (m.with_exp(i, e - 1), self.field.mul(&self.field.from_i64(e as i64), c))
            })
            .collect();
        Poly::from_terms(self.field.clone(), self.nvars, terms)
    }

    pub fn partials(&self) -> Vec<Self> {
        (0..self.nvars).map(|i| self.partial(i)).collect()
    }

    /// Substitute variable `i` by `images[i]`; the images fix the target ring.
    pub fn compose(&self, images: &[Poly<F>]) -> Poly<F> {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map(|g| g.nvars).unwrap_or(self.nvars);
        let maxd = self.degree().unwrap_or(0);
        let mut pow_cache: Vec<Vec<Poly<F>>> = images
            .iter()
            .map(|g| vec![Poly::one(self.field.clone(), target), g.clone()])
            .collect();
        let mut acc = Poly::zero(self.field.clone(), target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(self.field.clone(), target, c.clone());
            for i in 0..self.nvars {
                let e = m.exp(i) as usize;
                if e == 0 {
                    continue;
                }
                while pow_cache[i].len() <= e.min(maxd as usize) {
                    let next = pow_cache[i].last().unwrap().mul(&images[i]);
                    pow_cache[i].push(next);
                }
                t = t.mul(&pow_cache[i][e]);
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// `f(z·M)`: variable `z_j` becomes `sum_i M[i][j] z_i`. With this
    /// convention `substitute(f, M·N) = substitute(substitute(f, N), M)`.
    pub fn substitute_matrix(&self, m: &[Vec<F::Elem>]) -> Poly<F> {
        let n = self.nvars;
        assert_eq!(m.len(), n);
        let images: Vec<Poly<F>> = (0..n)
            .map(|j| {
                let terms = (0..n).map(|i| (Monomial::var(i), m[i][j].clone())).collect();
                Poly::from_terms(self.field.clone(), n, terms)
            })
            .collect();
        self.compose(&images)
    }

    /// Same as [`Poly::substitute_matrix`] but rejects singular matrices.
    pub fn linear_substitute(&self, m: &[Vec<F::Elem>]) -> Result<Poly<F>> {
        if super::linalg::rank(&self.field, m) < self.nvars {
            return Err(AlgebraError::Singular);
        }
        Ok(self.substitute_matrix(m))
    }

    /// Embed in a ring with `k` extra variables placed in front.
    pub fn shift_up(&self, k: usize) -> Poly<F> {
        let terms = self.terms.iter().map(|(m, c)| (m.shift_up(k), c.clone())).collect();
        Poly::from_terms(self.field.clone(), self.nvars + k, terms)
    }

    /// Remove `k` leading variables that do not occur.
    pub fn shift_down(&self, k: usize) -> Poly<F> {
        assert!(self.terms.iter().all(|(m, _)| (0..k).all(|i| m.exp(i) == 0)));
        let terms = self.terms.iter().map(|(m, c)| (m.shift_down(k), c.clone())).collect();
        Poly::from_terms(self.field.clone(), self.nvars - k, terms)
    }

    /// View in a ring with more variables appended at the end.
    pub fn extend_vars(&self, nvars: usize) -> Poly<F> {
        assert!(nvars >= self.nvars);
        Poly { field: self.field.clone(), nvars, terms: self.terms.clone() }
    }

    /// Renumber variables: variable `i` becomes `map[i]` in a ring of `nvars` variables.
    pub fn permute_vars(&self, map: &[usize], nvars: usize) -> Poly<F> {
        let terms = self.terms.iter().map(|(m, c)| (m.permute(map), c.clone())).collect();
        Poly::from_terms(self.field.clone(), nvars, terms)
    }

    /// Whether variable `i` occurs.
    pub fn involves(&self, i: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(i) > 0)
    }

    /// Exact quotient `self / g`, or `None` when `g` does not divide.
    pub fn div_exact(&self, g: &Poly<F>) -> Option<Poly<F>> {
        self.check(g);
        let (gm, gc) = g.terms.first()?.clone();
        let ginv = self.field.inv(&gc).unwrap();
        let mut rem = self.terms.clone();
        let mut quot: Vec<Term<F>> = Vec::new();
        while let Some((m, c)) = rem.first().cloned() {
            let q = gm.div(&m)?;
            let qc = self.field.mul(&c, &ginv);
            let neg = self.field.neg(&qc);
            let shifted: Vec<Term<F>> = g.terms.iter().map(|(x, y)| (x.mul(&q), y.clone())).collect();
            rem = merge_axpy(&self.field, &MonomialOrder::Grevlex, &rem, &neg, &shifted);
            quot.push((q, qc));
        }
        Some(Poly::from_terms(self.field.clone(), self.nvars, quot))
    }

    /// Coefficientwise image in another field.
    pub fn map_field<G: Field>(&self, target: &G, f: impl Fn(&F::Elem) -> Option<G::Elem>) -> Option<Poly<G>> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((*m, f(c)?));
        }
        Some(Poly::from_terms(target.clone(), self.nvars, terms))
    }

    /// Coefficient vector against a list of monomials (missing monomials read as zero).
    pub fn coeff_vector(&self, basis: &[Monomial]) -> Vec<F::Elem> {
        basis.iter().map(|m| self.coeff(m)).collect()
    }

    /// Inverse of [`Poly::coeff_vector`].
    pub fn from_coeff_vector(field: F, nvars: usize, basis: &[Monomial], v: &[F::Elem]) -> Self {
        let terms = basis.iter().zip(v).map(|(m, c)| (*m, c.clone())).collect();
        Poly::from_terms(field, nvars, terms)
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::parse::print_poly(self))
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.field.descriptor(), super::parse::print_poly(self))
    }
}

/// All monomials of degree `d` in `n` variables, in grevlex descending order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    fn rec(i: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = exps.len();
        if i + 1 == n {
            exps[i] = left;
            out.push(Monomial::from_exps(exps));
            return;
        }
        for e in (0..=left).rev() {
            exps[i] = e;
            rec(i + 1, left - e, exps, out);
        }
        exps[i] = 0;
    }
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one());
        }
        return out;
    }
    rec(0, d, &mut exps, &mut out);
    out.sort_by(|a, b| MonomialOrder::Grevlex.cmp(b, a));
    out
}

/// Binomial coefficient for small arguments.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::field::{PrimeField, Rationals};

    fn q(text: &str) -> Poly<Rationals> {
        crate::polycore::parse::parse_poly(&Rationals, 4, text).unwrap()
    }

    #[test]
    fn like_terms_and_distributivity() {
        let z0 = q("z0");
        assert_eq!(z0.add(&z0), q("2*z0"));
        assert_eq!(q("z0*z3 - z1*z2").mul(&z0), q("z0^2*z3 - z0*z1*z2"));
    }

    #[test]
    fn characteristic_cancels() {
        let f = PrimeField::with_small_prime(101).unwrap();
        let a = Poly::monomial(f, 4, Monomial::var(0), 100);
        let b = Poly::var(f, 4, 0);
        assert!(a.add(&b).is_zero());
    }

    #[test]
    fn checked_arith_errors() {
        let a = q("z0");
        let b = q("z1^2");
        assert_eq!(poly_arith(&a, &b, ArithOp::Add), Err(AlgebraError::DegreeMismatch(1, 2)));
        let f = PrimeField::new(1009).unwrap();
        let c = Poly::var(f, 4, 0);
        let d = Poly::var(PrimeField::new(1013).unwrap(), 4, 0);
        assert_eq!(poly_arith(&c, &d, ArithOp::Mul), Err(AlgebraError::FieldMismatch));
        assert_eq!(poly_arith(&a, &q("3"), ArithOp::Scale).unwrap(), q("3*z0"));
    }

    #[test]
    fn evaluation() {
        let qq = q("z0*z3 - z1*z2");
        assert_eq!(qq.evaluate(&[1, 0, 0, 0].map(|x| Rationals.from_i64(x))).unwrap(), Rationals.zero());
        let f = PrimeField::with_small_prime(101).unwrap();
        let cube = Poly::monomial(f, 4, Monomial::var_pow(0, 3), 1);
        assert_eq!(cube.evaluate(&[2, 0, 0, 0]).unwrap(), 8);
        assert_eq!(cube.evaluate(&[0, 0, 0, 0]), Err(AlgebraError::ZeroPoint));
        let dpc = q("z2^2*z3 - z0*z1*z3");
        assert!(Rationals.is_zero(&dpc.evaluate(&[0, 0, 0, 1].map(|x| Rationals.from_i64(x))).unwrap()));
    }

    #[test]
    fn partial_derivatives() {
        let f = q("z0*z1^2");
        let d = f.partials();
        assert_eq!(d[0], q("z1^2"));
        assert_eq!(d[1], q("2*z0*z1"));
        assert!(d[2].is_zero() && d[3].is_zero());
    }

    #[test]
    fn swap_substitution() {
        let r = Rationals;
        let mut m = vec![vec![r.zero(); 4]; 4];
        m[0][1] = r.one();
        m[1][0] = r.one();
        m[2][2] = r.one();
        m[3][3] = r.one();
        assert_eq!(q("z0*z3 - z1*z2").linear_substitute(&m).unwrap(), q("z1*z3 - z0*z2"));
        let sing = vec![vec![r.one(); 4]; 4];
        assert_eq!(q("z0").linear_substitute(&sing), Err(AlgebraError::Singular));
    }

    #[test]
    fn exact_division() {
        let a = q("z0 + z1");
        let b = q("z2 - 3*z3");
        assert_eq!(a.mul(&b).div_exact(&a), Some(b.clone()));
        assert_eq!(q("z0^2 + z1^2").div_exact(&a), None);
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_of_degree(4, 3).len(), 20);
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(binomial(6, 3), 20);
    }
}
