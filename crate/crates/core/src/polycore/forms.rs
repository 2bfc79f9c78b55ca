//! Linear spaces of forms of a fixed degree, and seeded random forms.
//!
//! Every linear system in the constructions (graded pieces of ideals given by
//! generators, forms through points, forms singular at points) is a subspace
//! of the forms of one degree, handled here by exact linear algebra.

use rand::Rng;

use super::field::Field;
use super::linalg::{self, Matrix};
use super::monomial::Monomial;
use super::poly::{monomials_of_degree, Poly};
use crate::error::{AlgebraError, Result};

/// Subspace of the degree-`degree` forms in `nvars` variables, stored as
/// reduced row echelon coefficient rows against the grevlex monomial basis.
#[derive(Clone, Debug)]
pub struct FormSpace<F: Field> {
    field: F,
    nvars: usize,
    degree: u32,
    monos: Vec<Monomial>,
    rows: Matrix<F::Elem>,
}

/// A condition a random form must satisfy.
#[derive(Clone, Debug)]
pub enum Constraint<F: Field> {
    /// Vanish at a point.
    Point(Vec<F::Elem>),
    /// Lie in `I_p^k` (all derivatives of order below `k` vanish at `p`).
    FatPoint(Vec<F::Elem>, u32),
    /// Lie in the ideal generated by the given forms.
    Ideal(Vec<Poly<F>>),
}

impl<F: Field> FormSpace<F> {
    pub fn full(field: F, nvars: usize, degree: u32) -> Self {
        let monos = monomials_of_degree(nvars, degree);
        let rows = linalg::identity(&field, monos.len());
        FormSpace { field, nvars, degree, monos, rows }
    }

    pub fn zero(field: F, nvars: usize, degree: u32) -> Self {
        let monos = monomials_of_degree(nvars, degree);
        FormSpace { field, nvars, degree, monos, rows: Vec::new() }
    }

    /// Span of the given forms, all of degree `degree`.
    pub fn span(field: F, nvars: usize, degree: u32, polys: &[Poly<F>]) -> Self {
        let monos = monomials_of_degree(nvars, degree);
        let raw: Matrix<F::Elem> = polys
            .iter()
            .filter(|p| !p.is_zero())
            .map(|p| {
                assert_eq!(p.homogeneous_degree(), Some(degree), "form of the wrong degree");
                p.coeff_vector(&monos)
            })
            .collect();
        let rows = linalg::row_basis(&field, &raw);
        FormSpace { field, nvars, degree, monos, rows }
    }

    /// Degree-`degree` piece of the ideal generated by `gens`.
    pub fn ideal_piece(field: F, nvars: usize, degree: u32, gens: &[Poly<F>]) -> Self {
        let mut polys = Vec::new();
        for g in gens.iter().filter(|g| !g.is_zero()) {
            let dg = g.homogeneous_degree().expect("homogeneous generator");
            if dg > degree {
                continue;
            }
            for m in monomials_of_degree(nvars, degree - dg) {
                polys.push(g.mul_term(&m, &field.one()));
            }
        }
        Self::span(field, nvars, degree, &polys)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn nvars(&self) -> usize {
        self.nvars
    }
    pub fn degree(&self) -> u32 {
        self.degree
    }
    pub fn dim(&self) -> usize {
        self.rows.len()
    }
    pub fn monomials(&self) -> &[Monomial] {
        &self.monos
    }

    pub fn basis(&self) -> Vec<Poly<F>> {
        self.rows
            .iter()
            .map(|r| Poly::from_coeff_vector(self.field.clone(), self.nvars, &self.monos, r))
            .collect()
    }

    pub fn contains(&self, p: &Poly<F>) -> bool {
        if p.is_zero() {
            return true;
        }
        if p.homogeneous_degree() != Some(self.degree) {
            return false;
        }
        linalg::in_span(&self.field, &self.rows, &p.coeff_vector(&self.monos))
    }

    pub fn intersect(&self, other: &Self) -> Self {
        assert_eq!((self.nvars, self.degree), (other.nvars, other.degree));
        let rows = linalg::intersect_rowspaces(&self.field, &self.rows, &other.rows, self.monos.len());
        FormSpace { rows, ..self.clone() }
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut raw = self.rows.clone();
        raw.extend(other.rows.iter().cloned());
        let rows = linalg::row_basis(&self.field, &raw);
        FormSpace { rows, ..self.clone() }
    }

    /// Subspace cut out by linear functionals on coefficient vectors.
    fn restrict(&self, functionals: &Matrix<F::Elem>) -> Self {
        if self.rows.is_empty() || functionals.is_empty() {
            return self.clone();
        }
        let f = &self.field;
        // evaluate each functional on the basis rows, then take the kernel
        let m: Matrix<F::Elem> = functionals
            .iter()
            .map(|phi| {
                self.rows
                    .iter()
                    .map(|r| r.iter().zip(phi).fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b))))
                    .collect()
            })
            .collect();
        let ker = linalg::kernel(f, &m, self.rows.len());
        let combos: Matrix<F::Elem> = ker
            .iter()
            .map(|k| {
                (0..self.monos.len())
                    .map(|j| {
                        self.rows
                            .iter()
                            .zip(k)
                            .fold(f.zero(), |acc, (r, c)| f.add(&acc, &f.mul(c, &r[j])))
                    })
                    .collect()
            })
            .collect();
        FormSpace { rows: linalg::row_basis(f, &combos), ..self.clone() }
    }

    /// Forms vanishing at `pt`.
    pub fn vanishing_at(&self, pt: &[F::Elem]) -> Self {
        let phi: Vec<F::Elem> = self
            .monos
            .iter()
            .map(|m| Poly::monomial(self.field.clone(), self.nvars, *m, self.field.one()).eval(pt))
            .collect();
        self.restrict(&vec![phi])
    }

    /// Forms in `I_pt^k`.
    pub fn vanishing_to_order(&self, pt: &[F::Elem], k: u32) -> Self {
        if k == 0 {
            return self.clone();
        }
        if k > self.degree {
            return FormSpace { rows: Vec::new(), ..self.clone() };
        }
        // all derivatives of order k-1 vanish at pt; for forms of degree d < char this
        // implies the lower-order ones vanish too
        let mut functionals = Vec::new();
        for alpha in monomials_of_degree(self.nvars, k - 1) {
            let phi: Vec<F::Elem> = self
                .monos
                .iter()
                .map(|m| {
                    let mut p = Poly::monomial(self.field.clone(), self.nvars, *m, self.field.one());
                    for i in 0..self.nvars {
                        for _ in 0..alpha.exp(i) {
                            p = p.partial(i);
                        }
                    }
                    p.eval(pt)
                })
                .collect();
            functionals.push(phi);
        }
        self.restrict(&functionals)
    }

    pub fn apply(&self, c: &Constraint<F>) -> Self {
        match c {
            Constraint::Point(p) => self.vanishing_at(p),
            Constraint::FatPoint(p, k) => self.vanishing_to_order(p, *k),
            Constraint::Ideal(gens) => {
                self.intersect(&FormSpace::ideal_piece(self.field.clone(), self.nvars, self.degree, gens))
            }
        }
    }

    /// Uniform random element (random coefficients on the basis).
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Poly<F> {
        let f = &self.field;
        let mut v = vec![f.zero(); self.monos.len()];
        for r in &self.rows {
            let c = f.random(rng);
            for (x, y) in v.iter_mut().zip(r) {
                *x = f.add(x, &f.mul(&c, y));
            }
        }
        Poly::from_coeff_vector(f.clone(), self.nvars, &self.monos, &v)
    }

    /// `count` random elements; they are independent with high probability.
    pub fn random_elements<R: Rng + ?Sized>(&self, rng: &mut R, count: usize) -> Vec<Poly<F>> {
        (0..count).map(|_| self.random_element(rng)).collect()
    }
}

/// Random form of `degree` in 4 variables satisfying all constraints.
pub fn random_form<F: Field, R: Rng + ?Sized>(
    field: &F,
    degree: u32,
    rng: &mut R,
    constraints: &[Constraint<F>],
) -> Result<Poly<F>> {
    random_form_in(field, 4, degree, rng, constraints)
}

/// [`random_form`] in a ring with `nvars` variables.
pub fn random_form_in<F: Field, R: Rng + ?Sized>(
    field: &F,
    nvars: usize,
    degree: u32,
    rng: &mut R,
    constraints: &[Constraint<F>],
) -> Result<Poly<F>> {
    let mut space = FormSpace::full(field.clone(), nvars, degree);
    for c in constraints {
        space = space.apply(c);
    }
    if space.dim() == 0 {
        return Err(AlgebraError::EmptySolutionSpace);
    }
    loop {
        let p = space.random_element(rng);
        if !p.is_zero() {
            return Ok(p);
        }
    }
}

/// A random point with coordinates in the field (not all zero).
pub fn random_point<F: Field, R: Rng + ?Sized>(field: &F, nvars: usize, rng: &mut R) -> Vec<F::Elem> {
    loop {
        let v: Vec<F::Elem> = (0..nvars).map(|_| field.random(rng)).collect();
        if v.iter().any(|x| !field.is_zero(x)) {
            return v;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::field::PrimeField;
    use crate::polycore::rng::keyed_rng;

    fn gf() -> PrimeField {
        PrimeField::new(1_000_003).unwrap()
    }

    #[test]
    fn deterministic_linear_form() {
        let f = gf();
        let a = random_form(&f, 1, &mut keyed_rng(5, "t"), &[]).unwrap();
        let b = random_form(&f, 1, &mut keyed_rng(5, "t"), &[]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.homogeneous_degree(), Some(1));
    }

    #[test]
    fn cubic_singular_at_point_kills_top_terms() {
        let f = gf();
        let p = vec![0, 0, 0, 1];
        let mut rng = keyed_rng(1, "c");
        for _ in 0..5 {
            let c = random_form(&f, 3, &mut rng, &[Constraint::FatPoint(p.clone(), 2)]).unwrap();
            for (m, _) in c.terms() {
                assert!(m.exp(3) <= 1, "term {m:?} survives");
            }
        }
        let sp = FormSpace::full(f, 4, 3).vanishing_to_order(&p, 2);
        assert_eq!(sp.dim(), 16);
    }

    #[test]
    fn quadrics_through_eight_points() {
        // interpolation rank oracle: 8 general points impose independent conditions on quadrics
        let f = gf();
        let mut rng = keyed_rng(2, "pts");
        let pts: Vec<Vec<u32>> = (0..8).map(|_| random_point(&f, 4, &mut rng)).collect();
        let monos = monomials_of_degree(4, 2);
        let m: Matrix<u32> = pts
            .iter()
            .map(|p| monos.iter().map(|mo| Poly::monomial(f, 4, *mo, 1).eval(p)).collect())
            .collect();
        let oracle_dim = 10 - linalg::rank(&f, &m);
        let cons: Vec<Constraint<PrimeField>> = pts.into_iter().map(Constraint::Point).collect();
        let mut sp = FormSpace::full(f, 4, 2);
        for c in &cons {
            sp = sp.apply(c);
        }
        assert_eq!(oracle_dim, 2);
        assert_eq!(sp.dim(), oracle_dim);
        let _ = random_form(&f, 2, &mut rng, &cons).unwrap();
        // two more general points leave nothing
        let more: Vec<Constraint<PrimeField>> =
            (0..2).map(|_| Constraint::Point(random_point(&f, 4, &mut rng))).collect();
        let all: Vec<_> = cons.iter().cloned().chain(more).collect();
        assert_eq!(random_form(&f, 2, &mut rng, &all), Err(AlgebraError::EmptySolutionSpace));
    }

    #[test]
    fn ideal_piece_dimensions() {
        let f = gf();
        let z = |i| Poly::var(f, 4, i);
        // (z0, z1)^2 in degree 3: 20 minus cubics with z0,z1-degree at most 1 (4 + 2*3 = 10)
        let sq = vec![z(0).mul(&z(0)), z(0).mul(&z(1)), z(1).mul(&z(1))];
        assert_eq!(FormSpace::ideal_piece(f, 4, 3, &sq).dim(), 10);
    }
}
