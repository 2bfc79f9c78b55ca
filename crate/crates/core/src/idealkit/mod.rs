//! Groebner bases and the ideal operations the constructions consume.

pub mod budget;
pub mod groebner;
pub mod hilbert;
pub mod local;
pub mod ops;
pub mod univariate;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

pub use budget::{with_budget, Budget};
pub use groebner::{groebner, GroebnerBasis, Selection};
pub use hilbert::HilbertData;
pub use local::{isolated_points, local_length, multiplicity_at, rational_points, PointSet};
pub use ops::{eliminate, ideal_ops, IdealOp};

use crate::error::Result;
use crate::polycore::{linalg, Field, MonomialOrder, Poly};

/// Generators of a homogeneous ideal with Groebner bases cached per order.
pub struct Ideal<F: Field> {
    field: F,
    nvars: usize,
    gens: Vec<Poly<F>>,
    saturated: bool,
    cache: Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis<F>>>>,
}

impl<F: Field> Clone for Ideal<F> {
    fn clone(&self) -> Self {
        Ideal {
            field: self.field.clone(),
            nvars: self.nvars,
            gens: self.gens.clone(),
            saturated: self.saturated,
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl<F: Field> std::fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Ideal").field("gens", &self.gens).field("saturated", &self.saturated).finish()
    }
}

impl<F: Field> Ideal<F> {
    pub fn new(field: F, nvars: usize, gens: Vec<Poly<F>>) -> Self {
        let gens: Vec<Poly<F>> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &gens {
            assert!(g.field() == &field && g.nvars() == nvars, "generator in another ring");
        }
        Ideal { field, nvars, gens, saturated: false, cache: Mutex::new(HashMap::new()) }
    }

    /// Build from generators, taking the ring from the first one.
    pub fn from_polys(gens: Vec<Poly<F>>) -> Self {
        let g0 = gens.first().expect("at least one generator");
        let (f, n) = (g0.field().clone(), g0.nvars());
        Ideal::new(f, n, gens)
    }

    pub fn unit(field: F, nvars: usize) -> Self {
        let one = Poly::one(field.clone(), nvars);
        let mut i = Ideal::new(field, nvars, vec![one]);
        i.saturated = true;
        i
    }

    pub fn zero(field: F, nvars: usize) -> Self {
        let mut i = Ideal::new(field, nvars, Vec::new());
        i.saturated = true;
        i
    }

    /// The irrelevant ideal `(z0, .., z_{n-1})`.
    pub fn irrelevant(field: F, nvars: usize) -> Self {
        let gens = (0..nvars).map(|i| Poly::var(field.clone(), nvars, i)).collect();
        Ideal::new(field, nvars, gens)
    }

    /// Ideal of a point: the linear forms vanishing at it.
    pub fn of_point(field: F, pt: &[F::Elem]) -> Self {
        let n = pt.len();
        let ker = linalg::kernel(&field, &[pt.to_vec()], n);
        let monos: Vec<_> = (0..n).map(crate::polycore::Monomial::var).collect();
        let gens = ker.iter().map(|v| Poly::from_coeff_vector(field.clone(), n, &monos, v)).collect();
        let mut i = Ideal::new(field, n, gens);
        i.saturated = true;
        i
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn nvars(&self) -> usize {
        self.nvars
    }
    pub fn gens(&self) -> &[Poly<F>] {
        &self.gens
    }
    pub fn is_saturated(&self) -> bool {
        self.saturated
    }

    /// Mark as saturated with respect to the irrelevant ideal. Callers vouch for it.
    pub fn assume_saturated(mut self) -> Self {
        self.saturated = true;
        self
    }

    /// Reduced Groebner basis under `order`, computed once and cached.
    pub fn groebner(&self, order: &MonomialOrder) -> Result<Arc<GroebnerBasis<F>>> {
        if let Some(g) = self.cache.lock().unwrap().get(order) {
            return Ok(g.clone());
        }
        let g = Arc::new(groebner(&self.field, self.nvars, &self.gens, order, Selection::Sugar, &Budget::current())?);
        self.cache.lock().unwrap().entry(order.clone()).or_insert(g.clone());
        Ok(g)
    }

    /// Grevlex basis.
    pub fn gb(&self) -> Result<Arc<GroebnerBasis<F>>> {
        self.groebner(&MonomialOrder::Grevlex)
    }

    /// Replace the generators by the reduced grevlex basis.
    pub fn minimalized(&self) -> Result<Ideal<F>> {
        let g = self.gb()?;
        let mut i = Ideal::new(self.field.clone(), self.nvars, g.polys());
        i.saturated = self.saturated;
        i.cache.lock().unwrap().insert(MonomialOrder::Grevlex, g);
        Ok(i)
    }

    pub fn contains(&self, f: &Poly<F>) -> Result<bool> {
        Ok(self.gb()?.contains(f))
    }

    pub fn contains_ideal(&self, other: &Ideal<F>) -> Result<bool> {
        let g = self.gb()?;
        Ok(other.gens.iter().all(|f| g.contains(f)))
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.gb()?.is_unit())
    }

    /// Equality of ideals by comparing reduced grevlex bases.
    pub fn equals(&self, other: &Ideal<F>) -> Result<bool> {
        Ok(self.gb()?.same_as(&*other.gb()?))
    }

    /// Image under `f(z·M)` applied to every generator.
    pub fn substitute(&self, m: &[Vec<F::Elem>]) -> Ideal<F> {
        let gens = self.gens.iter().map(|g| g.substitute_matrix(m)).collect();
        let mut i = Ideal::new(self.field.clone(), self.nvars, gens);
        i.saturated = self.saturated;
        i
    }

    /// Generators of degree at most `d`.
    pub fn truncate_gens(&self, d: u32) -> Vec<Poly<F>> {
        self.gens.iter().filter(|g| g.degree().unwrap_or(0) <= d).cloned().collect()
    }
}
