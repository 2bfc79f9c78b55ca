//! Base locus, generic-line preimage and its liaison split, and the
//! birationality, genus and ruledness tests.

use rand::Rng;

use super::RationalMap;
use crate::error::{AlgebraError, Result};
use crate::idealkit::local::{generic_member, random_invertible, vanishes_at};
use crate::idealkit::{local_length, multiplicity_at, rational_points, Ideal, PointSet};
use crate::polycore::{attempt_rng, linalg, random_point, Field, Poly};

const REDRAWS: u32 = 5;

/// A curve of P3 with its invariants.
#[derive(Clone, Debug)]
pub struct CurveRecord<F: Field> {
    pub ideal: Ideal<F>,
    pub degree: i64,
    pub p_a: i64,
    /// Singular points found over the field, with their multiplicities.
    pub sing: Vec<(Vec<F::Elem>, usize)>,
    /// Distinct singular points over the closure; `None` when the singular
    /// locus is a curve (non-reduced components).
    pub sing_distinct: Option<usize>,
}

impl<F: Field> CurveRecord<F> {
    /// Degree and arithmetic genus from the Hilbert polynomial `deg*t + 1 - p_a`;
    /// the empty curve has degree 0 and `p_a = 1`.
    pub fn from_ideal(ideal: Ideal<F>) -> Result<Self> {
        let h = ideal.hilbert()?;
        if h.dimension > 1 {
            return Err(AlgebraError::Degenerate(format!("expected a curve, got dimension {}", h.dimension)));
        }
        let (degree, p_a) = match h.dimension {
            1 => (h.degree, h.p_a.unwrap()),
            _ => (0, 1 - h.hilbert_polynomial(0)),
        };
        Ok(CurveRecord { ideal, degree, p_a, sing: Vec::new(), sing_distinct: Some(0) })
    }

    /// Fill in the singular points and their multiplicities.
    pub fn with_singularities(mut self, seed: u64) -> Result<Self> {
        if self.degree == 0 {
            return Ok(self);
        }
        match singular_locus(&self.ideal, seed)? {
            None => {
                self.sing_distinct = None;
                self.sing.clear();
            }
            Some(ps) => {
                self.sing_distinct = Some(ps.distinct);
                self.sing = ps
                    .rational
                    .iter()
                    .map(|p| Ok((p.clone(), multiplicity_at(&self.ideal, p, seed)?)))
                    .collect::<Result<_>>()?;
            }
        }
        Ok(self)
    }

    /// Multiplicity at `p`, 0 off the curve.
    pub fn multiplicity(&self, p: &[F::Elem], seed: u64) -> Result<usize> {
        multiplicity_at(&self.ideal, p, seed)
    }
}

/// Singular points of a curve: the curve plus the 2x2 minors of the Jacobian
/// of three generic members of its ideal. `None` if that locus is a curve.
pub fn singular_locus<F: Field>(curve: &Ideal<F>, seed: u64) -> Result<Option<PointSet<F>>> {
    let field = curve.field().clone();
    let mut rng = attempt_rng(seed, "jacobian-members", 0);
    let base = curve.minimalized()?;
    let members: Vec<Poly<F>> = (0..3).map(|_| generic_member(&base, &mut rng)).collect();
    let grads: Vec<Vec<Poly<F>>> = members.iter().map(|m| m.partials()).collect();
    let mut gens = base.gens().to_vec();
    for a in 0..3 {
        for b in a + 1..3 {
            for i in 0..4 {
                for j in i + 1..4 {
                    let minor = grads[a][i].mul(&grads[b][j]).sub(&grads[a][j].mul(&grads[b][i]));
                    gens.push(minor);
                }
            }
        }
    }
    let sing = Ideal::new(field, 4, gens);
    let h = sing.hilbert()?;
    if h.dimension >= 1 {
        return Ok(None);
    }
    Ok(Some(rational_points(&sing, seed)?))
}

/// `J = sat(I_psi)`: the base scheme.
pub fn base_ideal<F: Field>(map: &RationalMap<F>) -> Result<Ideal<F>> {
    map.ideal().saturate_irrelevant()
}

#[derive(Clone, Debug)]
pub struct BaseLocus<F: Field> {
    /// Saturated base ideal.
    pub ideal: Ideal<F>,
    pub dimension: i32,
    /// Degree of the one-dimensional part; 0 when the base locus is finite.
    pub deg1part: i64,
    /// Isolated base points.
    pub theta: PointSet<F>,
}

/// Base scheme, given the curve part `C2` of a generic-line preimage.
pub fn base_locus_with<F: Field>(j: &Ideal<F>, c2: &Ideal<F>, seed: u64) -> Result<BaseLocus<F>> {
    let h = j.hilbert()?;
    let deg1part = if h.dimension == 1 { h.degree } else { 0 };
    let curve_part = if h.dimension == 1 { c2.clone() } else { Ideal::unit(j.field().clone(), 4) };
    let theta = crate::idealkit::isolated_points(j, &curve_part, seed)?;
    Ok(BaseLocus { ideal: j.clone(), dimension: h.dimension, deg1part, theta })
}

/// Base scheme with its degree-one part and isolated points.
pub fn base_locus<F: Field>(map: &RationalMap<F>, seed: u64) -> Result<BaseLocus<F>> {
    let j = base_ideal(map)?;
    let split = line_preimage_split(map, seed)?;
    base_locus_with(&j, &split.c2.ideal, seed)
}

/// Preimage of a generic line and its split into the strict transform `C1`
/// and the part `C2` inside the base locus.
#[derive(Clone, Debug)]
pub struct LineSplit<F: Field> {
    /// Coefficients of the two members cutting the line's preimage.
    pub line: [Vec<F::Elem>; 2],
    pub gamma: Ideal<F>,
    pub c1: CurveRecord<F>,
    pub c2: CurveRecord<F>,
    /// Draws used (1 when the first line was good).
    pub draws: u32,
}

fn random_coeffs<F: Field, R: Rng + ?Sized>(field: &F, rng: &mut R) -> Vec<F::Elem> {
    random_point(field, 4, rng)
}

/// Coefficient vector not in the span of `rows`.
fn coeffs_outside<F: Field, R: Rng + ?Sized>(field: &F, rows: &[Vec<F::Elem>], rng: &mut R) -> Vec<F::Elem> {
    loop {
        let a = random_coeffs(field, rng);
        if !linalg::in_span(field, rows, &a) {
            return a;
        }
    }
}

/// `Gamma = (g1, g2)` for two random members, `C1 = sat(Gamma, I_psi)` and
/// the liaison residual `C2 = (Gamma : I_C1)`.
pub fn line_preimage_split<F: Field>(map: &RationalMap<F>, seed: u64) -> Result<LineSplit<F>> {
    let field = map.field().clone();
    let d = map.degree() as i64;
    for draw in 0..REDRAWS {
        let mut rng = attempt_rng(seed, "generic-line", draw);
        let b1 = random_coeffs(&field, &mut rng);
        let b2 = coeffs_outside(&field, std::slice::from_ref(&b1), &mut rng);
        let (g1, g2) = (map.member(&b1), map.member(&b2));
        let gamma = Ideal::new(field.clone(), 4, vec![g1, g2]);
        if gamma.hilbert()?.dimension != 1 {
            continue;
        }
        // a member off the pencil does not vanish on any component of C1,
        // and vanishes on everything inside the base locus
        let a = coeffs_outside(&field, &[b1.clone(), b2.clone()], &mut rng);
        let c1 = gamma.saturate_by(&map.member(&a))?.minimalized()?.assume_saturated();
        let c2 = if c1.is_unit()? {
            gamma.clone().assume_saturated()
        } else {
            let h = generic_member(&c1, &mut rng);
            gamma.quotient_by(&h)?.minimalized()?.assume_saturated()
        };
        let r1 = CurveRecord::from_ideal(c1)?;
        let r2 = CurveRecord::from_ideal(c2)?;
        if r1.degree + r2.degree != d * d {
            continue;
        }
        if r1.degree > 0 && r2.degree > 0 && r1.ideal.sum(&r2.ideal).hilbert()?.dimension >= 1 {
            // shared component
            continue;
        }
        return Ok(LineSplit { line: [b1, b2], gamma, c1: r1, c2: r2, draws: draw + 1 });
    }
    Err(AlgebraError::Degenerate(format!("no good generic line in {REDRAWS} draws")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Yes,
    No,
    Inconclusive,
}

/// Outcome of the fiber-sampling test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BirationalVerdict {
    pub verdict: Verdict,
    pub trials: u32,
    /// Degree of each sampled fiber off the base locus; -1 for a positive-dimensional fiber.
    pub fiber_degrees: Vec<i64>,
}

/// Degree of the fiber through `x` off the base locus, or -1 if positive-dimensional.
pub fn fiber_degree<F: Field, R: Rng + ?Sized>(map: &RationalMap<F>, x: &[F::Elem], rng: &mut R) -> Result<i64> {
    let field = map.field().clone();
    let y = map.eval(x);
    let comps = map.components();
    let mut gens = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            gens.push(comps[j].scale(&y[i]).sub(&comps[i].scale(&y[j])));
        }
    }
    // a member with a·y != 0 is nonzero on the whole fiber and zero on the base locus
    let a = loop {
        let a = random_coeffs(&field, rng);
        let ay = a.iter().zip(&y).fold(field.zero(), |acc, (u, v)| field.add(&acc, &field.mul(u, v)));
        if !field.is_zero(&ay) {
            break a;
        }
    };
    let fiber = Ideal::new(field.clone(), 4, gens).saturate_by(&map.member(&a))?;
    let h = fiber.hilbert()?;
    Ok(if h.dimension > 0 { -1 } else { h.degree })
}

/// A random point off the base locus.
fn point_off_base<F: Field, R: Rng + ?Sized>(map: &RationalMap<F>, rng: &mut R) -> Result<Vec<F::Elem>> {
    let field = map.field();
    for _ in 0..64 {
        // off the coordinate planes too, where pinned examples put their special loci
        let x = random_point(field, 4, rng);
        if x.iter().any(|c| field.is_zero(c)) {
            continue;
        }
        if map.eval(&x).iter().any(|c| !field.is_zero(c)) {
            return Ok(x);
        }
    }
    Err(AlgebraError::Degenerate("sample points keep landing in the base locus".into()))
}

/// Fiber-sampling test: birational iff every sampled fiber is a single reduced point.
pub fn is_birational<F: Field>(map: &RationalMap<F>, trials: u32, seed: u64) -> Result<BirationalVerdict> {
    let mut degrees = Vec::new();
    let mut verdict = Verdict::Yes;
    for t in 0..trials {
        let mut rng = attempt_rng(seed, "fiber", t);
        let mut deg = match fiber_sample(map, &mut rng) {
            Ok(d) => d,
            Err(AlgebraError::Budget(_)) => {
                verdict = Verdict::Inconclusive;
                continue;
            }
            Err(e) => return Err(e),
        };
        if deg != 1 {
            // a special fiber is possible; only a repeated answer counts
            let again = fiber_sample(map, &mut rng)?;
            if again == 1 {
                deg = 1;
            } else if verdict != Verdict::Inconclusive {
                verdict = Verdict::No;
            }
        }
        degrees.push(deg);
    }
    Ok(BirationalVerdict { verdict, trials, fiber_degrees: degrees })
}

fn fiber_sample<F: Field, R: Rng + ?Sized>(map: &RationalMap<F>, rng: &mut R) -> Result<i64> {
    let x = point_off_base(map, rng)?;
    fiber_degree(map, &x, rng)
}

/// Right-hand side of the birationality criterion: `3 deg C1` minus the
/// lengths of `S ∩ C1` at the points of `C1 ∩ C2` and at the isolated base
/// points, for a member `S` outside the pencil cutting `Gamma`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub value: i64,
    /// `deg (S ∩ C1)`, which is `3 deg C1`.
    pub total: i64,
    /// Whether the lengths were summed point by point (all points rational)
    /// or taken in one piece as the degree of the part off the base locus.
    pub pointwise: bool,
}

pub fn birationality_certificate<F: Field>(
    map: &RationalMap<F>,
    split: &LineSplit<F>,
    contact: &PointSet<F>,
    theta: &PointSet<F>,
    seed: u64,
) -> Result<Certificate> {
    let field = map.field().clone();
    let c1 = &split.c1.ideal;
    for draw in 0..REDRAWS {
        let mut rng = attempt_rng(seed, "certificate-member", draw);
        let a = coeffs_outside(&field, &split.line, &mut rng);
        let cut = c1.with(&[map.member(&a)]);
        let h = cut.hilbert()?;
        if h.dimension > 0 {
            continue;
        }
        let total = h.degree;
        if total != map.degree() as i64 * split.c1.degree {
            return Err(AlgebraError::Degenerate(format!(
                "S ∩ C1 has degree {total}, expected {}",
                map.degree() as i64 * split.c1.degree
            )));
        }
        let pointwise = contact.is_complete() && theta.is_complete();
        let value = if pointwise {
            let mut pts: Vec<Vec<F::Elem>> = contact.rational.clone();
            for p in &theta.rational {
                if !pts.iter().any(|q| crate::idealkit::local::same_point(&field, p, q)) {
                    pts.push(p.clone());
                }
            }
            let mut lost = 0i64;
            for p in &pts {
                lost += local_length(&cut, p)? as i64;
            }
            total - lost
        } else {
            let mut off = cut.clone();
            if split.c2.degree > 0 {
                off = off.saturate_by(&generic_member(&split.c2.ideal, &mut rng))?;
            }
            if theta.distinct > 0 {
                off = off.saturate_by(&generic_member(&theta.ideal, &mut rng))?;
            }
            off.hilbert()?.degree.max(0)
        };
        return Ok(Certificate { value, total, pointwise });
    }
    Err(AlgebraError::Degenerate("no member cuts C1 in finitely many points".into()))
}

/// Genus of the map: 1 if a generic plane section of a generic member is a
/// smooth cubic, 0 if it is singular and irreducible. Majority of 3 draws.
pub fn genus_of_map<F: Field>(map: &RationalMap<F>, seed: u64) -> Result<u8> {
    let field = map.field().clone();
    let mut votes = [0u32; 2];
    for draw in 0..3u32 {
        let mut decided = false;
        for attempt in 0..REDRAWS {
            let mut rng = attempt_rng(seed, "genus-section", draw * REDRAWS + attempt);
            let s = map.member(&random_coeffs(&field, &mut rng));
            let plane = loop {
                let b: Vec<Vec<F::Elem>> = (0..3).map(|_| random_point(&field, 4, &mut rng)).collect();
                if linalg::rank(&field, &b) == 3 {
                    break b;
                }
            };
            let images: Vec<Poly<F>> = (0..4)
                .map(|j| {
                    let terms = (0..3).map(|i| (crate::polycore::Monomial::var(i), plane[i][j].clone())).collect();
                    Poly::from_terms(field.clone(), 3, terms)
                })
                .collect();
            let cubic = s.compose(&images);
            if cubic.is_zero() {
                continue;
            }
            let mut gens = cubic.partials();
            gens.push(cubic);
            let jac = Ideal::new(field.clone(), 3, gens);
            let h = jac.hilbert()?;
            if h.dimension < 0 {
                votes[1] += 1;
                decided = true;
                break;
            }
            if h.dimension == 0 && rational_points(&jac, seed ^ draw as u64)?.distinct == 1 {
                votes[0] += 1;
                decided = true;
                break;
            }
            // reducible section: re-draw
        }
        if !decided {
            return Err(AlgebraError::Degenerate("plane sections of members keep splitting".into()));
        }
    }
    Ok(if votes[1] > votes[0] { 1 } else { 0 })
}

/// Ruledness through the common singular locus of the members.
#[derive(Clone, Debug)]
pub struct RuledVerdict<F: Field> {
    pub ruled: bool,
    /// Ideal of the double line when ruled.
    pub line: Option<Ideal<F>>,
    pub sigma_dimension: i32,
    pub sigma_degree: i64,
}

/// Ruled iff all members are singular along a line `delta` (`Lambda ⊆ I_delta^2`).
pub fn is_ruled<F: Field>(map: &RationalMap<F>, seed: u64) -> Result<RuledVerdict<F>> {
    let field = map.field().clone();
    let gens: Vec<Poly<F>> = map.components().iter().flat_map(|c| c.partials()).collect();
    let sigma = Ideal::new(field.clone(), 4, gens);
    let h = sigma.hilbert()?;
    let not_ruled =
        |h: &crate::idealkit::HilbertData| RuledVerdict { ruled: false, line: None, sigma_dimension: h.dimension, sigma_degree: h.degree };
    if h.dimension != 1 || h.degree != 1 {
        return Ok(not_ruled(&h));
    }
    // the line meets a generic plane in one rational point
    let mut pts = Vec::new();
    for attempt in 0..2 * REDRAWS {
        if pts.len() == 2 {
            break;
        }
        let mut rng = attempt_rng(seed, "ruled-plane", attempt);
        let plane = crate::polycore::random_form(&field, 1, &mut rng, &[])?;
        let ps = rational_points(&sigma.with(&[plane]), seed)?;
        if ps.distinct == 1 && ps.rational.len() == 1 {
            let p = ps.rational[0].clone();
            if !pts.iter().any(|q: &Vec<F::Elem>| crate::idealkit::local::same_point(&field, &p, q)) {
                pts.push(p);
            }
        }
    }
    if pts.len() < 2 {
        return Ok(not_ruled(&h));
    }
    let line = Ideal::new(
        field.clone(),
        4,
        linalg::kernel(&field, &pts, 4)
            .iter()
            .map(|v| Poly::from_coeff_vector(field.clone(), 4, &linear_monos(), v))
            .collect(),
    )
    .assume_saturated();
    let square = line.product(&line);
    let ruled = square.contains_ideal(&map.ideal())?;
    Ok(RuledVerdict { ruled, line: ruled.then_some(line), sigma_dimension: 1, sigma_degree: 1 })
}

fn linear_monos() -> Vec<crate::polycore::Monomial> {
    (0..4).map(crate::polycore::Monomial::var).collect()
}

/// Inverse of a birational map of bidegree `(d, d_inv)`, by interpolating
/// forms `g` of degree `d_inv` with `g(psi(x))` proportional to `x` on sample
/// points; verified on fresh points.
pub fn inverse<F: Field>(map: &RationalMap<F>, d_inv: u32, seed: u64) -> Result<RationalMap<F>> {
    let field = map.field().clone();
    let monos = crate::polycore::monomials_of_degree(4, d_inv);
    let n = monos.len();
    let unknowns = 4 * n;
    let mut rng = attempt_rng(seed, "inverse-samples", 0);
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    let samples = unknowns / 3 + 12;
    for _ in 0..samples {
        let x = point_off_base(map, &mut rng)?;
        let y = map.eval(&x);
        let vals: Vec<F::Elem> = monos
            .iter()
            .map(|m| Poly::monomial(field.clone(), 4, *m, field.one()).eval(&y))
            .collect();
        // x_j g_i(y) - x_i g_j(y) = 0
        for i in 0..4 {
            for j in i + 1..4 {
                let mut row = vec![field.zero(); unknowns];
                for (k, v) in vals.iter().enumerate() {
                    row[i * n + k] = field.mul(&x[j], v);
                    row[j * n + k] = field.neg(&field.mul(&x[i], v));
                }
                rows.push(row);
            }
        }
    }
    let ker = linalg::kernel(&field, &rows, unknowns);
    if ker.len() != 1 {
        return Err(AlgebraError::Degenerate(format!("inverse interpolation left {} solutions", ker.len())));
    }
    let comps: Vec<Poly<F>> =
        (0..4).map(|i| Poly::from_coeff_vector(field.clone(), 4, &monos, &ker[0][i * n..(i + 1) * n])).collect();
    let inv = RationalMap::with_any_degree(comps)?;
    // psi(g(y)) ~ y on fresh points
    for _ in 0..4 {
        let y = point_off_base(&inv, &mut rng)?;
        let back = map.eval(&inv.eval(&y));
        if back.iter().all(|c| field.is_zero(c)) || linalg::rank(&field, &[back, y]) != 1 {
            return Err(AlgebraError::Degenerate("interpolated inverse fails verification".into()));
        }
    }
    Ok(inv)
}

/// Everything the analysis computes for one map.
#[derive(Clone, Debug)]
pub struct MapAnalysis<F: Field> {
    pub bidegree: (u32, u32),
    pub base: BaseLocus<F>,
    pub split: LineSplit<F>,
    /// Support of `C1 ∩ C2`.
    pub contact: PointSet<F>,
    pub genus: u8,
    pub ruled: RuledVerdict<F>,
    pub birational: BirationalVerdict,
    pub certificate: Certificate,
}

#[derive(Clone, Debug)]
pub struct AnalysisOptions {
    pub trials: u32,
    pub singularities: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions { trials: 5, singularities: true }
    }
}

/// Full analysis of a cubic map; a pure function of the map and the seed.
pub fn analyze<F: Field>(map: &RationalMap<F>, seed: u64, opts: &AnalysisOptions) -> Result<MapAnalysis<F>> {
    let j = base_ideal(map)?;
    let mut split = line_preimage_split(map, seed)?;
    let base = base_locus_with(&j, &split.c2.ideal, seed)?;
    let contact = if split.c1.degree > 0 && split.c2.degree > 0 {
        rational_points(&split.c1.ideal.sum(&split.c2.ideal), seed)?
    } else {
        PointSet::empty(map.field().clone(), 4)
    };
    if opts.singularities {
        split.c1 = split.c1.with_singularities(seed)?;
        split.c2 = split.c2.with_singularities(seed)?;
    }
    let d = map.degree();
    let (deg1, deg2) = (split.c1.degree, split.c2.degree);
    if deg2 - deg1 != split.c2.p_a - split.c1.p_a {
        return Err(AlgebraError::Degenerate("liaison genus formula fails; bad prime suspected".into()));
    }
    let genus = genus_of_map(map, seed)?;
    let ruled = is_ruled(map, seed)?;
    let birational = is_birational(map, opts.trials, seed)?;
    let certificate = birationality_certificate(map, &split, &contact, &base.theta, seed)?;
    let d_inv = if d as i64 * d as i64 - deg2 == deg1 { deg1 as u32 } else { 0 };
    Ok(MapAnalysis { bidegree: (d, d_inv), base, split, contact, genus, ruled, birational, certificate })
}

/// Points where a map's components all vanish, among `pts`.
pub fn base_points_among<F: Field>(map: &RationalMap<F>, pts: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
    let i = map.ideal();
    pts.iter().filter(|p| vanishes_at(&i, p)).cloned().collect()
}

/// Conjugate by random invertible matrices, for invariance checks.
pub fn random_conjugate<F: Field>(map: &RationalMap<F>, seed: u64) -> Result<RationalMap<F>> {
    let mut rng = attempt_rng(seed, "conjugate", 0);
    let a = random_invertible(map.field(), 4, &mut rng);
    let b = random_invertible(map.field(), 4, &mut rng);
    map.conjugate(&a, &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{keyed_rng, parse_poly, random_form, PrimeField};

    fn gf() -> PrimeField {
        PrimeField::new(1_000_003).unwrap()
    }

    fn det3(m: &[Vec<Poly<PrimeField>>]) -> Poly<PrimeField> {
        let t = |a: usize, b: usize, c: usize| m[0][a].mul(&m[1][b]).mul(&m[2][c]);
        t(0, 1, 2).add(&t(1, 2, 0)).add(&t(2, 0, 1)).sub(&t(2, 1, 0)).sub(&t(0, 2, 1)).sub(&t(1, 0, 2))
    }

    fn determinantal(seed: u64) -> RationalMap<PrimeField> {
        let f = gf();
        let mut rng = keyed_rng(seed, "test-det");
        let m: Vec<Vec<Poly<PrimeField>>> =
            (0..4).map(|_| (0..3).map(|_| random_form(&f, 1, &mut rng, &[]).unwrap()).collect()).collect();
        let comps = (0..4)
            .map(|skip| {
                let rows: Vec<Vec<Poly<PrimeField>>> =
                    (0..4).filter(|&r| r != skip).map(|r| m[r].clone()).collect();
                det3(&rows)
            })
            .collect();
        RationalMap::new(comps).unwrap()
    }

    fn gmap(v: [&str; 4]) -> RationalMap<PrimeField> {
        RationalMap::new(v.iter().map(|s| parse_poly(&gf(), 4, s).unwrap()).collect()).unwrap()
    }

    #[test]
    fn determinantal_map() {
        let map = determinantal(1);
        let a = analyze(&map, 7, &AnalysisOptions::default()).unwrap();
        assert_eq!(a.bidegree, (3, 3));
        assert_eq!((a.split.c1.degree, a.split.c1.p_a), (3, 0));
        assert_eq!((a.split.c2.degree, a.split.c2.p_a), (6, 3));
        assert_eq!((a.base.deg1part, a.base.theta.distinct), (6, 0));
        assert_eq!(a.birational.verdict, Verdict::Yes);
        assert_eq!(a.certificate.value, 1);
        assert_eq!(a.genus, 1);
        assert!(!a.ruled.ruled);
        let inv = inverse(&map, 3, 5).unwrap();
        assert_eq!(inv.degree(), 3);
    }

    #[test]
    fn ruled_involution() {
        let map = gmap(["z0*z1^2", "z0^2*z1", "z0^2*z2", "z1^2*z3"]);
        let a = analyze(&map, 3, &AnalysisOptions::default()).unwrap();
        assert_eq!(a.bidegree, (3, 3));
        assert_eq!(a.genus, 0);
        assert!(a.ruled.ruled);
        let line = a.ruled.line.unwrap();
        assert!(line.equals(&Ideal::new(gf(), 4, vec![Poly::var(gf(), 4, 0), Poly::var(gf(), 4, 1)])).unwrap());
        assert_eq!(a.birational.verdict, Verdict::Yes);
        assert_eq!(a.certificate.value, 1);
        // an involution
        let inv = inverse(&map, 3, 1).unwrap();
        let pts: Vec<Vec<u32>> = (0..3).map(|i| random_point(&gf(), 4, &mut keyed_rng(i, "pt"))).collect();
        for p in pts {
            let (u, v) = (inv.eval(&p), map.eval(&p));
            assert_eq!(linalg::rank(&gf(), &[u, v]), 1);
        }
    }

    #[test]
    fn cubes_are_not_birational() {
        let map = gmap(["z0^3", "z1^3", "z2^3", "z3^3"]);
        let v = is_birational(&map, 3, 1).unwrap();
        assert_eq!(v.verdict, Verdict::No);
        assert!(v.fiber_degrees.iter().all(|&d| d == 27));
        let split = line_preimage_split(&map, 1).unwrap();
        assert_eq!((split.c1.degree, split.c2.degree), (9, 0));
        let none = PointSet::empty(gf(), 4);
        assert_eq!(birationality_certificate(&map, &split, &none, &none, 1).unwrap().value, 27);
    }
}
