//! Local invariants of zero-dimensional schemes and curves, and point extraction.

use rand::Rng;

use super::univariate;
use super::{eliminate, Ideal};
use crate::error::{AlgebraError, Result};
use crate::polycore::{attempt_rng, linalg, Field, FormSpace, Poly};

const TRIALS: u32 = 5;

/// Points of a zero-dimensional scheme.
#[derive(Clone, Debug)]
pub struct PointSet<F: Field> {
    /// The scheme, saturated.
    pub ideal: Ideal<F>,
    /// Number of distinct points over the algebraic closure.
    pub distinct: usize,
    /// Points with coordinates in the field, normalized.
    pub rational: Vec<Vec<F::Elem>>,
}

impl<F: Field> PointSet<F> {
    pub fn empty(field: F, nvars: usize) -> Self {
        PointSet { ideal: Ideal::unit(field, nvars), distinct: 0, rational: Vec::new() }
    }

    /// Whether every point was found over the field.
    pub fn is_complete(&self) -> bool {
        self.rational.len() == self.distinct
    }
}

/// Scale so the first nonzero coordinate is 1.
pub fn normalize_point<F: Field>(field: &F, p: &[F::Elem]) -> Vec<F::Elem> {
    let lead = p.iter().find(|c| !field.is_zero(c)).expect("nonzero point");
    let inv = field.inv(lead).unwrap();
    p.iter().map(|c| field.mul(c, &inv)).collect()
}

/// Whether two vectors represent the same projective point.
pub fn same_point<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> bool {
    normalize_point(field, a) == normalize_point(field, b)
}

/// Invertible `M` whose last row is `p`: under `f(z·M)` the point `p`
/// becomes `(0:..:0:1)`.
pub fn frame_at<F: Field>(field: &F, p: &[F::Elem]) -> Vec<Vec<F::Elem>> {
    let n = p.len();
    let k = (0..n).find(|&i| !field.is_zero(&p[i])).expect("nonzero point");
    let mut m: Vec<Vec<F::Elem>> = (0..n)
        .filter(|&i| i != k)
        .map(|i| (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect())
        .collect();
    m.push(p.to_vec());
    m
}

pub fn vanishes_at<F: Field>(i: &Ideal<F>, p: &[F::Elem]) -> bool {
    i.gens().iter().all(|g| i.field().is_zero(&g.eval(p)))
}

/// Length of `O_p / I` for `p = (0:..:0:1)`: the degree of `I + m_p^k`
/// grows with `k` until it stabilizes, and then equals the local length.
fn length_at_last_vertex<F: Field>(i: &Ideal<F>) -> Result<usize> {
    let (f, n) = (i.field().clone(), i.nvars());
    let mut prev = 0i64;
    for k in 1..=64u32 {
        let power: Vec<Poly<F>> = crate::polycore::monomials_of_degree(n - 1, k)
            .into_iter()
            .map(|m| Poly::monomial(f.clone(), n, m, f.one()))
            .collect();
        let h = i.with(&power).hilbert()?;
        if h.dimension > 0 {
            return Err(AlgebraError::NotZeroDimensional);
        }
        let deg = h.degree;
        if deg == prev {
            return Ok(deg as usize);
        }
        prev = deg;
    }
    Err(AlgebraError::Budget("local length did not stabilize".into()))
}

/// Length of the primary component of a zero-dimensional scheme at `p`;
/// 0 when `p` is not in its support.
pub fn local_length<F: Field>(i: &Ideal<F>, p: &[F::Elem]) -> Result<usize> {
    if i.hilbert()?.dimension > 0 {
        return Err(AlgebraError::NotZeroDimensional);
    }
    if !vanishes_at(i, p) {
        return Ok(0);
    }
    let moved = i.substitute(&frame_at(i.field(), p));
    length_at_last_vertex(&moved)
}

/// A random plane through `p`.
pub fn random_plane_through<F: Field, R: Rng + ?Sized>(field: &F, p: &[F::Elem], rng: &mut R) -> Poly<F> {
    let space = FormSpace::full(field.clone(), p.len(), 1).vanishing_at(p);
    loop {
        let l = space.random_element(rng);
        if !l.is_zero() {
            return l;
        }
    }
}

/// Multiplicity of a curve at `p`: the local length at `p` of a generic
/// plane section through `p`, agreed on by two independent planes.
pub fn multiplicity_at<F: Field>(c: &Ideal<F>, p: &[F::Elem], seed: u64) -> Result<usize> {
    if !vanishes_at(c, p) {
        return Ok(0);
    }
    let field = c.field().clone();
    let moved = c.substitute(&frame_at(&field, p));
    let n = c.nvars();
    let mut vertex = vec![field.zero(); n];
    vertex[n - 1] = field.one();
    for attempt in 0..TRIALS {
        let mut rng = attempt_rng(seed, "multiplicity-plane", attempt);
        let mut lengths = Vec::with_capacity(2);
        for _ in 0..2 {
            let plane = random_plane_through(&field, &vertex, &mut rng);
            match length_at_last_vertex(&moved.with(&[plane])) {
                Ok(l) => lengths.push(l),
                Err(AlgebraError::NotZeroDimensional) => break,
                Err(e) => return Err(e),
            }
        }
        if lengths.len() == 2 && lengths[0] == lengths[1] {
            return Ok(lengths[0]);
        }
    }
    Err(AlgebraError::Degenerate("plane sections disagree on the multiplicity".into()))
}

/// Binary form in the last two variables as a univariate polynomial in
/// `x = z_{n-2} / z_{n-1}`; also returns the form's degree.
fn dehomogenize_binary<F: Field>(g: &Poly<F>) -> (univariate::UPoly<F::Elem>, usize) {
    let f = g.field();
    let n = g.nvars();
    let d = g.degree().unwrap_or(0) as usize;
    let mut out = vec![f.zero(); d + 1];
    for (m, c) in g.terms() {
        out[m.exp(n - 2) as usize] = c.clone();
    }
    (univariate::trim(f, out), d)
}

/// Gcd of the dehomogenized generators of an ideal of binary forms.
fn binary_gcd<F: Field>(e: &Ideal<F>) -> (univariate::UPoly<F::Elem>, usize) {
    let f = e.field();
    let mut acc: Option<(univariate::UPoly<F::Elem>, usize)> = None;
    for g in e.gens() {
        let (u, d) = dehomogenize_binary(g);
        acc = Some(match acc {
            None => (univariate::monic(f, &u), d),
            Some((a, da)) => {
                let h = univariate::gcd(f, &a, &u);
                // the homogeneous gcd keeps a factor z_{n-1}^k only if both forms have it
                let inf_a = da - univariate::degree(&a).unwrap_or(0);
                let inf_u = d - univariate::degree(&u).unwrap_or(0);
                let dh = univariate::degree(&h).unwrap_or(0) + inf_a.min(inf_u);
                (h, dh)
            }
        });
    }
    acc.unwrap_or_else(|| (vec![f.one()], 0))
}

/// Distinct points of a zero-dimensional scheme over the closure, and
/// those with coordinates in the field (prime fields only).
pub fn rational_points<F: Field>(i: &Ideal<F>, seed: u64) -> Result<PointSet<F>> {
    let field = i.field().clone();
    let n = i.nvars();
    let h = i.hilbert()?;
    if h.dimension < 0 {
        return Ok(PointSet::empty(field, n));
    }
    if h.dimension > 0 {
        return Err(AlgebraError::NotZeroDimensional);
    }
    for attempt in 0..TRIALS {
        let mut rng = attempt_rng(seed, "point-coordinates", attempt);
        let m = random_invertible(&field, n, &mut rng);
        let moved = i.substitute(&m);
        let (elim, form_deg) = binary_gcd(&eliminate(&moved, n - 2)?);
        let affine_deg = univariate::degree(&elim).unwrap_or(0);
        if affine_deg != form_deg {
            // a point on z_{n-1} = 0 in these coordinates
            continue;
        }
        let sf = univariate::squarefree_part(&field, &elim);
        let distinct = univariate::degree(&sf).unwrap_or(0);
        let mut rational = Vec::new();
        let mut ok = true;
        for r in univariate::roots(&field, &sf, &mut rng) {
            match fiber_point(&moved, &r)? {
                Some(q) => {
                    let orig = linalg::mat_vec(&field, &transpose(&m), &q);
                    rational.push(normalize_point(&field, &orig));
                }
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        rational.sort_by_key(|p| p.iter().map(|c| field.format(c)).collect::<Vec<_>>());
        let mut ideal = i.clone();
        ideal.saturated = i.is_saturated();
        return Ok(PointSet { ideal, distinct, rational });
    }
    Err(AlgebraError::Degenerate("no generic projection found for point extraction".into()))
}

fn transpose<E: Clone>(m: &[Vec<E>]) -> Vec<Vec<E>> {
    let n = m.first().map_or(0, |r| r.len());
    (0..n).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Uniformly drawn invertible `n x n` matrix.
pub fn random_invertible<F: Field, R: Rng + ?Sized>(field: &F, n: usize, rng: &mut R) -> Vec<Vec<F::Elem>> {
    loop {
        let m: Vec<Vec<F::Elem>> = (0..n).map(|_| (0..n).map(|_| field.random(rng)).collect()).collect();
        if linalg::rank(field, &m) == n {
            return m;
        }
    }
}

/// The single point of `I` on the hyperplane `z_{n-2} = r z_{n-1}`, with
/// `z_{n-1} = 1`; `None` if that hyperplane meets several points.
fn fiber_point<F: Field>(i: &Ideal<F>, r: &F::Elem) -> Result<Option<Vec<F::Elem>>> {
    let field = i.field().clone();
    let n = i.nvars();
    let last = Poly::var(field.clone(), n, n - 1);
    let mut images: Vec<Poly<F>> = (0..n).map(|k| Poly::var(field.clone(), n, k)).collect();
    images[n - 2] = last.scale(r);
    let restricted: Vec<Poly<F>> = i.gens().iter().map(|g| g.compose(&images)).collect();
    let mut point = vec![field.zero(); n];
    point[n - 2] = r.clone();
    point[n - 1] = field.one();
    for k in 0..n - 2 {
        // move z_k to position n-2 (vacated by the substitution), eliminate the rest
        let mut perm: Vec<Poly<F>> = (0..n).map(|v| Poly::var(field.clone(), n, v)).collect();
        perm.swap(k, n - 2);
        let gens: Vec<Poly<F>> = restricted.iter().map(|g| g.compose(&perm)).collect();
        let (elim, _) = binary_gcd(&eliminate(&Ideal::new(field.clone(), n, gens), n - 2)?);
        let sf = univariate::squarefree_part(&field, &elim);
        if univariate::degree(&sf) != Some(1) {
            return Ok(None);
        }
        point[k] = field.neg(&sf[0]);
    }
    Ok(Some(point))
}

/// A random combination of the generators of `k`, all lifted to the top generator degree.
pub fn generic_member<F: Field, R: Rng + ?Sized>(k: &Ideal<F>, rng: &mut R) -> Poly<F> {
    let field = k.field().clone();
    let n = k.nvars();
    let top = k.gens().iter().filter_map(|g| g.degree()).max().unwrap_or(0);
    loop {
        let mut acc = Poly::zero(field.clone(), n);
        for g in k.gens() {
            let lift = FormSpace::full(field.clone(), n, top - g.degree().unwrap_or(0)).random_element(rng);
            acc = acc.add(&g.mul(&lift));
        }
        if !acc.is_zero() {
            return acc;
        }
    }
}

/// The isolated points `(J : K^inf)` of a base scheme `J` whose curve part is `K`.
/// The saturation uses one generic member of `K`.
pub fn isolated_points<F: Field>(j: &Ideal<F>, curve_part: &Ideal<F>, seed: u64) -> Result<PointSet<F>> {
    let theta = if curve_part.is_unit()? {
        j.clone()
    } else {
        let mut rng = attempt_rng(seed, "isolated-member", 0);
        let g = generic_member(curve_part, &mut rng);
        j.saturate_by(&g)?.minimalized()?
    };
    let theta = if j.is_saturated() { theta.assume_saturated() } else { theta.saturate_irrelevant()? };
    rational_points(&theta, seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{parse_poly, PrimeField, Rationals};

    fn gf() -> PrimeField {
        PrimeField::new(1_000_003).unwrap()
    }

    fn ideal<F: Field>(f: F, v: &[&str]) -> Ideal<F> {
        let gens = v.iter().map(|s| parse_poly(&f, 4, s).unwrap()).collect();
        Ideal::new(f, 4, gens)
    }

    #[test]
    fn lengths_at_points() {
        let q = Rationals;
        let e3 = vec![q.zero(), q.zero(), q.zero(), q.one()];
        assert_eq!(local_length(&ideal(q, &["z0", "z1", "z2"]), &e3).unwrap(), 1);
        assert_eq!(local_length(&ideal(q, &["z0", "z1", "z2^2"]), &e3).unwrap(), 2);
        let fat = ideal(q, &["z0^2", "z0*z1", "z0*z2", "z1^2", "z1*z2", "z2^2"]);
        assert_eq!(local_length(&fat, &e3).unwrap(), 4);
        let off = vec![q.one(), q.zero(), q.zero(), q.zero()];
        assert_eq!(local_length(&fat, &off).unwrap(), 0);
        assert!(local_length(&ideal(q, &["z0"]), &e3).is_err());
    }

    #[test]
    fn lengths_sum_to_degree() {
        // two reduced points and a double point
        let f = gf();
        let pts = [vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 0, 1]];
        let a = ideal(f, &["z1", "z2", "z3"]);
        let b = ideal(f, &["z0", "z2", "z3"]);
        let c = ideal(f, &["z0", "z1^2", "z2"]);
        let i = Ideal::intersect_all(&[a, b, c]).unwrap();
        let total: usize = pts.iter().map(|p| local_length(&i, p).unwrap()).sum();
        assert_eq!(total as i64, i.hilbert().unwrap().degree);
        assert_eq!(local_length(&i, &pts[2]).unwrap(), 2);
        // agrees with deg I - deg (I : I_p^inf)
        for p in &pts {
            let stripped = i.saturate(&Ideal::of_point(f, p)).unwrap();
            let diff = i.hilbert().unwrap().degree - stripped.hilbert().unwrap().degree.max(0);
            assert_eq!(local_length(&i, p).unwrap() as i64, diff);
        }
    }

    #[test]
    fn curve_multiplicities() {
        let f = gf();
        let tc = ideal(f, &["z0*z2 - z1^2", "z1*z3 - z2^2", "z0*z3 - z1*z2"]);
        assert_eq!(multiplicity_at(&tc, &[1, 0, 0, 0], 1).unwrap(), 1);
        let nodal = ideal(f, &["z3", "z1^2*z2 - z0^3 - z0^2*z2"]);
        assert_eq!(multiplicity_at(&nodal, &[0, 0, 1, 0], 1).unwrap(), 2);
        assert_eq!(multiplicity_at(&nodal, &[1, 0, 0, 0], 1).unwrap(), 0);
    }

    #[test]
    fn extracts_points() {
        let f = gf();
        let a = ideal(f, &["z1", "z2", "z3"]);
        let b = ideal(f, &["z0 - z3", "z1 - 2*z3", "z2 + 5*z3"]);
        // a conjugate pair off the field: z0 = z1 = 0, z2^2 + z3^2 = 0 (p = 3 mod 4)
        let c = ideal(f, &["z0", "z1", "z2^2 + z3^2"]);
        let i = Ideal::intersect_all(&[a, b, c]).unwrap();
        let ps = rational_points(&i, 9).unwrap();
        assert_eq!(ps.distinct, 4);
        assert_eq!(ps.rational.len(), 2);
        assert!(ps.rational.iter().any(|p| same_point(&f, p, &[1, 0, 0, 0])));
        assert!(ps.rational.iter().any(|p| same_point(&f, p, &[1, 2, f.from_i64(-5), 1])));
    }

    #[test]
    fn isolated_points_off_a_curve() {
        let f = gf();
        let line = ideal(f, &["z0", "z1"]);
        let pt = ideal(f, &["z1 - z0", "z2", "z3"]);
        let j = line.intersect(&pt).unwrap().assume_saturated();
        let ps = isolated_points(&j, &line, 4).unwrap();
        assert_eq!(ps.distinct, 1);
        assert!(same_point(&f, &ps.rational[0], &[1, 1, 0, 0]));
    }
}
