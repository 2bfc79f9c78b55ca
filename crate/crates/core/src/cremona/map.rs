//! Rational self-maps of P3 given by four forms.

use num_rational::BigRational;

use crate::error::{AlgebraError, Result};
use crate::idealkit::Ideal;
use crate::polycore::{linalg, Field, FormSpace, Poly, PrimeField, Rationals};

/// `(psi_0 : psi_1 : psi_2 : psi_3)` on P3.
#[derive(Clone, Debug)]
pub struct RationalMap<F: Field> {
    components: Vec<Poly<F>>,
    degree: u32,
    /// Seed of the random choices that produced the map, if any.
    pub seed: Option<u64>,
    /// Family label, if the map came from a constructor.
    pub label: Option<String>,
}

impl<F: Field> RationalMap<F> {
    /// A cubic map: four cubics in four variables without common factor.
    pub fn new(components: Vec<Poly<F>>) -> Result<Self> {
        let m = Self::with_any_degree(components)?;
        if m.degree != 3 {
            return Err(AlgebraError::DegreeMismatch(3, m.degree));
        }
        Ok(m)
    }

    /// Same checks as [`RationalMap::new`] for forms of any common degree.
    pub fn with_any_degree(components: Vec<Poly<F>>) -> Result<Self> {
        if components.len() != 4 {
            return Err(AlgebraError::Invalid(format!("need 4 components, got {}", components.len())));
        }
        let field = components[0].field().clone();
        let mut degree = None;
        for c in &components {
            if c.field() != &field {
                return Err(AlgebraError::FieldMismatch);
            }
            if c.nvars() != 4 {
                return Err(AlgebraError::RingMismatch);
            }
            if c.is_zero() {
                continue;
            }
            let d = c.homogeneous_degree().ok_or(AlgebraError::NotHomogeneous)?;
            match degree {
                None => degree = Some(d),
                Some(e) if e != d => return Err(AlgebraError::DegreeMismatch(e, d)),
                _ => {}
            }
        }
        let degree = degree.ok_or_else(|| AlgebraError::Invalid("all components vanish".into()))?;
        let m = RationalMap { components, degree, seed: None, label: None };
        // a common factor makes the base locus a surface
        if m.ideal().hilbert()?.dimension >= 2 {
            return Err(AlgebraError::Invalid("components have a common factor".into()));
        }
        Ok(m)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn components(&self) -> &[Poly<F>] {
        &self.components
    }

    pub fn field(&self) -> &F {
        self.components[0].field()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `I_psi`, generated by the components.
    pub fn ideal(&self) -> Ideal<F> {
        Ideal::new(self.field().clone(), 4, self.components.clone())
    }

    /// The linear system spanned by the components.
    pub fn linear_system(&self) -> FormSpace<F> {
        FormSpace::span(self.field().clone(), 4, self.degree, &self.components)
    }

    /// Dimension of the span of the components.
    pub fn rank(&self) -> usize {
        self.linear_system().dim()
    }

    pub fn eval(&self, x: &[F::Elem]) -> Vec<F::Elem> {
        self.components.iter().map(|c| c.eval(x)).collect()
    }

    /// `sum_i a_i psi_i`.
    pub fn member(&self, a: &[F::Elem]) -> Poly<F> {
        let f = self.field();
        self.components.iter().zip(a).fold(Poly::zero(f.clone(), 4), |acc, (c, x)| acc.axpy(x, c))
    }

    /// `A ∘ psi ∘ B`: components `sum_j A[i][j] psi_j(z·B)`. Both matrices must be invertible.
    pub fn conjugate(&self, a: &[Vec<F::Elem>], b: &[Vec<F::Elem>]) -> Result<Self> {
        let f = self.field().clone();
        if linalg::rank(&f, a) < 4 || linalg::rank(&f, b) < 4 {
            return Err(AlgebraError::Singular);
        }
        let inner: Vec<Poly<F>> = self.components.iter().map(|c| c.substitute_matrix(b)).collect();
        let comps = a
            .iter()
            .map(|row| inner.iter().zip(row).fold(Poly::zero(f.clone(), 4), |acc, (c, x)| acc.axpy(x, c)))
            .collect();
        let mut m = RationalMap::with_any_degree(comps)?;
        m.seed = self.seed;
        m.label = self.label.clone();
        Ok(m)
    }
}

impl RationalMap<Rationals> {
    /// Reduction modulo a prime; `None` when a denominator vanishes or the
    /// reduced components acquire a common factor.
    pub fn reduce_mod(&self, field: PrimeField) -> Option<RationalMap<PrimeField>> {
        let comps: Option<Vec<Poly<PrimeField>>> = self
            .components
            .iter()
            .map(|c| c.map_field(&field, |r: &BigRational| field.from_rational(r)))
            .collect();
        let mut m = RationalMap::with_any_degree(comps?).ok()?;
        if m.degree != self.degree {
            return None;
        }
        m.seed = self.seed;
        m.label = self.label.clone();
        Some(m)
    }
}
