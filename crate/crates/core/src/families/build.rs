//! Seeded constructors, one per family. Every "general position" choice is a
//! seeded random draw; degenerate draws are detected and re-drawn.

use rand::Rng;

use super::label::FamilyLabel;
use crate::cremona::RationalMap;
use crate::error::{AlgebraError, Result};
use crate::idealkit::local::random_invertible;
use crate::idealkit::Ideal;
use crate::polycore::{attempt_rng, linalg, random_form, random_form_in, random_point, Constraint, Field, FormSpace, KeyedRng, Poly};

/// Re-draws allowed before a constructor reports a degenerate family.
pub const MAX_ATTEMPTS: u32 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DejonquieresVariant {
    E3,
    E3_5,
    E4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CuboquarticVariant {
    E6,
    E7,
    E7_5,
    E8,
    E9,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CuboquinticVariant {
    E12,
    E13,
    E14,
    E19,
    E23,
    E24,
}

/// Any constructible family by label.
pub fn construct<F: Field>(label: FamilyLabel, seed: u64, field: &F) -> Result<RationalMap<F>> {
    use FamilyLabel::*;
    match label {
        Ruled(d) => ruled(d, seed, field),
        E2 => determinantal(seed, field),
        E3 => dejonquieres(DejonquieresVariant::E3, seed, field),
        E3_5 => dejonquieres(DejonquieresVariant::E3_5, seed, field),
        E4 => dejonquieres(DejonquieresVariant::E4, seed, field),
        E6 => cuboquartic(CuboquarticVariant::E6, seed, field),
        E7 => cuboquartic(CuboquarticVariant::E7, seed, field),
        E7_5 => cuboquartic(CuboquarticVariant::E7_5, seed, field),
        E8 => cuboquartic(CuboquarticVariant::E8, seed, field),
        E9 => cuboquartic(CuboquarticVariant::E9, seed, field),
        E10 => Err(AlgebraError::Invalid(
            "E10 has no constructor; its configuration is recognized by the classifier only".into(),
        )),
        E12 => cuboquintic(CuboquinticVariant::E12, seed, field),
        E13 => cuboquintic(CuboquinticVariant::E13, seed, field),
        E14 => cuboquintic(CuboquinticVariant::E14, seed, field),
        E19 => cuboquintic(CuboquinticVariant::E19, seed, field),
        E23 => cuboquintic(CuboquinticVariant::E23, seed, field),
        E24 => cuboquintic(CuboquinticVariant::E24, seed, field),
    }
}

/// Runs `draw` with fresh keyed generators until it yields a map.
fn with_redraws<F: Field>(
    label: FamilyLabel,
    seed: u64,
    field: &F,
    mut draw: impl FnMut(&mut KeyedRng) -> Result<RationalMap<F>>,
) -> Result<RationalMap<F>> {
    let name = label.to_string();
    let mut last = None;
    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = attempt_rng(seed, &name, attempt);
        match draw(&mut rng).and_then(|m| generic_position(&m, field, &mut rng)) {
            Ok(m) => return Ok(m.with_label(name).with_seed(seed)),
            Err(e @ AlgebraError::Budget(_)) => return Err(e),
            Err(e) => last = Some(e),
        }
    }
    let why = last.map(|e| e.to_string()).unwrap_or_default();
    Err(AlgebraError::Degenerate(format!("{name}: no valid sample in {MAX_ATTEMPTS} draws; last failure: {why}")))
}

/// Random change of source and target coordinates over prime fields. Over
/// the rationals the coordinates are kept so coefficients stay small.
pub(crate) fn generic_position<F: Field, R: Rng + ?Sized>(
    map: &RationalMap<F>,
    field: &F,
    rng: &mut R,
) -> Result<RationalMap<F>> {
    if field.characteristic() == 0 {
        return Ok(map.clone());
    }
    let a = random_invertible(field, 4, rng);
    let b = random_invertible(field, 4, rng);
    map.conjugate(&a, &b)
}

// ---------------------------------------------------------------------------
// small building blocks

pub(crate) fn var<F: Field>(field: &F, i: usize) -> Poly<F> {
    Poly::var(field.clone(), 4, i)
}

/// Random linear form in the listed variables.
pub(crate) fn lin_in<F: Field, R: Rng + ?Sized>(field: &F, vars: &[usize], rng: &mut R) -> Poly<F> {
    loop {
        let l = vars.iter().fold(Poly::zero(field.clone(), 4), |acc, &i| acc.axpy(&field.random(rng), &var(field, i)));
        if !l.is_zero() {
            return l;
        }
    }
}

pub(crate) fn lin<F: Field, R: Rng + ?Sized>(field: &F, rng: &mut R) -> Poly<F> {
    lin_in(field, &[0, 1, 2, 3], rng)
}

/// Random form of `degree` in `z0, z1, z2` only.
fn form_in_first_three<F: Field, R: Rng + ?Sized>(field: &F, degree: u32, rng: &mut R) -> Poly<F> {
    random_form_in(field, 3, degree, rng, &[]).expect("full space").extend_vars(4)
}

pub(crate) fn vertex<F: Field>(field: &F) -> Vec<F::Elem> {
    vec![field.zero(), field.zero(), field.zero(), field.one()]
}

/// Linear forms cutting out the span of `points`.
pub(crate) fn linear_forms_through<F: Field>(field: &F, points: &[Vec<F::Elem>]) -> Vec<Poly<F>> {
    let basis = crate::polycore::monomials_of_degree(4, 1);
    linalg::kernel(field, points, 4)
        .into_iter()
        .map(|v| Poly::from_coeff_vector(field.clone(), 4, &basis, &v))
        .collect()
}

/// Random point on the line cut out by two linear forms.
fn point_on_line<F: Field, R: Rng + ?Sized>(field: &F, line: &[Poly<F>], rng: &mut R) -> Result<Vec<F::Elem>> {
    let basis = crate::polycore::monomials_of_degree(4, 1);
    let rows: Vec<Vec<F::Elem>> = line.iter().map(|l| l.coeff_vector(&basis)).collect();
    let ker = linalg::kernel(field, &rows, 4);
    if ker.len() != 2 {
        return Err(AlgebraError::Degenerate("linear forms do not cut a line".into()));
    }
    loop {
        let (s, t) = (field.random(rng), field.random(rng));
        let p: Vec<F::Elem> = (0..4).map(|i| field.add(&field.mul(&s, &ker[0][i]), &field.mul(&t, &ker[1][i]))).collect();
        if p.iter().any(|x| !field.is_zero(x)) {
            return Ok(p);
        }
    }
}

fn cubics<F: Field>(field: &F, gens: &[Poly<F>]) -> FormSpace<F> {
    FormSpace::ideal_piece(field.clone(), 4, 3, gens)
}

fn cubic_span<F: Field>(field: &F, forms: &[Poly<F>]) -> FormSpace<F> {
    FormSpace::span(field.clone(), 4, 3, forms)
}

fn expect_dim<F: Field>(space: &FormSpace<F>, want: usize, what: &str) -> Result<()> {
    if space.dim() != want {
        return Err(AlgebraError::Degenerate(format!("{what} has dimension {}, expected {want}", space.dim())));
    }
    Ok(())
}

/// The map whose linear system is `space`, after checking it has dimension 4.
fn system_map<F: Field>(space: &FormSpace<F>) -> Result<RationalMap<F>> {
    expect_dim(space, 4, "linear system")?;
    RationalMap::new(space.basis())
}

/// Impose `count` random simple base points.
fn with_random_points<F: Field, R: Rng + ?Sized>(space: FormSpace<F>, count: usize, rng: &mut R) -> FormSpace<F> {
    let field = space.field().clone();
    (0..count).fold(space, |s, _| s.vanishing_at(&random_point(&field, 4, rng)))
}

fn det2<F: Field>(a: &Poly<F>, b: &Poly<F>, c: &Poly<F>, d: &Poly<F>) -> Poly<F> {
    a.mul(d).sub(&b.mul(c))
}

pub(crate) fn det3<F: Field>(m: &[Vec<Poly<F>>]) -> Poly<F> {
    let cof = |r1: usize, r2: usize, c1: usize, c2: usize| det2(&m[r1][c1], &m[r1][c2], &m[r2][c1], &m[r2][c2]);
    m[0][0].mul(&cof(1, 2, 1, 2)).sub(&m[0][1].mul(&cof(1, 2, 0, 2))).add(&m[0][2].mul(&cof(1, 2, 0, 1)))
}

/// Signed maximal minors of a 4×3 matrix: the `i`-th drops row `i`.
pub(crate) fn signed_minors<F: Field>(m: &[Vec<Poly<F>>]) -> Vec<Poly<F>> {
    (0..4)
        .map(|i| {
            let rest: Vec<Vec<Poly<F>>> = (0..4).filter(|&r| r != i).map(|r| m[r].clone()).collect();
            let d = det3(&rest);
            if i % 2 == 0 {
                d
            } else {
                d.neg()
            }
        })
        .collect()
}

/// 2×2 minors of a 2-row matrix.
pub(crate) fn two_row_minors<F: Field>(top: &[Poly<F>], bottom: &[Poly<F>]) -> Vec<Poly<F>> {
    let n = top.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(det2(&top[i], &top[j], &bottom[i], &bottom[j]));
        }
    }
    out
}

/// Generators of the contact scheme `I_q^2 + (H)` for a plane `H` through `q`.
pub(crate) fn contact_ideal_gens<F: Field>(field: &F, q: &[F::Elem], plane: &Poly<F>) -> Vec<Poly<F>> {
    let through = linear_forms_through(field, &[q.to_vec()]);
    let mut gens = vec![plane.clone()];
    for i in 0..through.len() {
        for j in i..through.len() {
            gens.push(through[i].mul(&through[j]));
        }
    }
    gens
}

// ---------------------------------------------------------------------------
// ruled maps

/// Ruled map of bidegree `(3, d)`: cubics through a ruled cubic surface's double
/// line twice, through `5 - d` of its rulings and `2d - 4` points on it.
pub fn ruled<F: Field>(d: u32, seed: u64, field: &F) -> Result<RationalMap<F>> {
    if !(2..=5).contains(&d) {
        return Err(AlgebraError::Invalid(format!("ruled maps exist for d in 2..=5, got {d}")));
    }
    with_redraws(FamilyLabel::Ruled(d), seed, field, |rng| ruled_draw(d, false, field, rng))
}

/// The degeneration switch: as [`ruled`] with two of the points on one ruling,
/// which forces that ruling into the base locus; the result is ruled of bidegree `(3, d - 1)`.
pub fn ruled_degenerate<F: Field>(d: u32, seed: u64, field: &F) -> Result<RationalMap<F>> {
    if !(3..=5).contains(&d) {
        return Err(AlgebraError::Invalid(format!("the degeneration switch needs d in 3..=5, got {d}")));
    }
    with_redraws(FamilyLabel::Ruled(d), seed, field, |rng| ruled_draw(d, true, field, rng))
        .map(|m| m.with_label(FamilyLabel::Ruled(d - 1).to_string()))
}

fn ruled_draw<F: Field, R: Rng + ?Sized>(d: u32, collide: bool, field: &F, rng: &mut R) -> Result<RationalMap<F>> {
    let (z0, z1) = (var(field, 0), var(field, 1));
    let (a, b, c) = (lin(field, rng), lin(field, rng), lin(field, rng));
    // S = z0^2 a + z0 z1 b + z1^2 c; the plane z1 = t z0 meets S in delta twice and the ruling below
    let ruling = |t: &F::Elem| {
        let t2 = field.mul(t, t);
        vec![z1.sub(&z0.scale(t)), a.axpy(t, &b).axpy(&t2, &c)]
    };
    let double_line = [z0.mul(&z0), z0.mul(&z1), z1.mul(&z1)];
    let mut space = cubics(field, &double_line);
    for _ in 0..5 - d {
        let t = field.random(rng);
        space = space.intersect(&cubics(field, &ruling(&t)));
    }
    let npoints = 2 * d as usize - 4;
    let mut points = Vec::with_capacity(npoints);
    if collide {
        let line = ruling(&field.random(rng));
        points.push(point_on_line(field, &line, rng)?);
        points.push(point_on_line(field, &line, rng)?);
    }
    while points.len() < npoints {
        let line = ruling(&field.random(rng));
        points.push(point_on_line(field, &line, rng)?);
    }
    for p in &points {
        space = space.vanishing_at(p);
    }
    system_map(&space)
}

// ---------------------------------------------------------------------------
// (3,3)

/// Signed 3×3 minors of a random 4×3 matrix of linear forms.
pub fn determinantal<F: Field>(seed: u64, field: &F) -> Result<RationalMap<F>> {
    with_redraws(FamilyLabel::E2, seed, field, |rng| {
        let m: Vec<Vec<Poly<F>>> = (0..4).map(|_| (0..3).map(|_| lin(field, rng)).collect()).collect();
        RationalMap::new(signed_minors(&m))
    })
}

/// de Jonquières maps: `I_psi = I_p Q + (S)` with `p` on the quadric `Q` and `S` singular at `p`.
pub fn dejonquieres<F: Field>(variant: DejonquieresVariant, seed: u64, field: &F) -> Result<RationalMap<F>> {
    let label = match variant {
        DejonquieresVariant::E3 => FamilyLabel::E3,
        DejonquieresVariant::E3_5 => FamilyLabel::E3_5,
        DejonquieresVariant::E4 => FamilyLabel::E4,
    };
    with_redraws(label, seed, field, |rng| {
        let p = vertex(field);
        let (quadric, cubic) = match variant {
            DejonquieresVariant::E3 => {
                (random_form(field, 2, rng, &[Constraint::Point(p.clone())])?, random_form(field, 3, rng, &[Constraint::FatPoint(p.clone(), 2)])?)
            }
            DejonquieresVariant::E3_5 => {
                let q = random_form(field, 2, rng, &[Constraint::Point(p.clone())])?;
                // the quadratic part of S is T m with T the tangent plane of Q at p
                let tangent = q.partial(3);
                let m = lin_in(field, &[0, 1, 2], rng);
                let s = var(field, 3).mul(&tangent).mul(&m).add(&form_in_first_three(field, 3, rng));
                (q, s)
            }
            DejonquieresVariant::E4 => {
                let q = lin_in(field, &[0, 1, 2], rng).mul(&lin_in(field, &[0, 1, 2], rng));
                (q, random_form(field, 3, rng, &[Constraint::FatPoint(p.clone(), 2)])?)
            }
        };
        let forms: Vec<Poly<F>> = (0..3).map(|i| quadric.mul(&var(field, i))).chain([cubic]).collect();
        system_map(&cubic_span(field, &forms))
    })
}

// ---------------------------------------------------------------------------
// (3,4)

/// The matrix `M_t` whose 2×2 minors cut an elliptic quintic for `t != 0`
/// and the residual of a line in `(Q, S)` for `t = 0`.
pub(crate) fn elliptic_quintic_minors<F: Field>(field: &F, t: &F::Elem, l: &[Poly<F>; 4]) -> Vec<Poly<F>> {
    let z: Vec<Poly<F>> = (0..4).map(|i| var(field, i)).collect();
    let tz3 = z[3].scale(t);
    let q = det2(&z[0], &z[1], &z[2], &z[3]);
    let q1 = z[2].mul(&z[2]).add(&z[0].mul(&l[1])).add(&tz3.mul(&l[2]));
    let q2 = z[2].mul(&z[3]).neg().sub(&z[1].mul(&l[1])).add(&tz3.mul(&l[3]));
    let q3 = z[2].mul(&l[0]).add(&z[1].mul(&l[2])).add(&z[0].mul(&l[3])).neg();
    let top = [tz3.clone(), z[0].clone(), z[1].neg(), z[2].neg()];
    let bottom = [tz3.mul(&l[0]).add(&q), q1, q2, q3];
    two_row_minors(&top, &bottom)
}

/// `Q I_p + (S1, S2)` in degree 3 with `p` the last coordinate point.
fn quadric_times_point<F: Field>(field: &F, q: &Poly<F>, extra: &[Poly<F>]) -> FormSpace<F> {
    let forms: Vec<Poly<F>> = (0..3).map(|i| q.mul(&var(field, i))).chain(extra.iter().cloned()).collect();
    cubic_span(field, &forms)
}

/// Cubics in `hI_p + I_p^3`: singular at `p` with quadratic part divisible by `h`.
fn binode_cubics<F: Field>(field: &F, plane: &Poly<F>) -> FormSpace<F> {
    let mut gens: Vec<Poly<F>> = (0..3).map(|i| plane.mul(&var(field, i))).collect();
    for m in crate::polycore::monomials_of_degree(3, 3) {
        gens.push(Poly::monomial(field.clone(), 4, m, field.one()));
    }
    cubics(field, &gens)
}

pub fn cuboquartic<F: Field>(variant: CuboquarticVariant, seed: u64, field: &F) -> Result<RationalMap<F>> {
    use CuboquarticVariant::*;
    let label = match variant {
        E6 => FamilyLabel::E6,
        E7 => FamilyLabel::E7,
        E7_5 => FamilyLabel::E7_5,
        E8 => FamilyLabel::E8,
        E9 => FamilyLabel::E9,
    };
    with_redraws(label, seed, field, |rng| {
        let space = match variant {
            E6 => {
                let t = field.random_nonzero(rng);
                let l = [lin(field, rng), lin(field, rng), lin(field, rng), lin(field, rng)];
                let quintic = cubic_span(field, &elliptic_quintic_minors(field, &t, &l));
                expect_dim(&quintic, 5, "cubics through the elliptic quintic")?;
                quintic
            }
            E7 | E7_5 => determinantal_quintic(variant == E7_5, field, rng)?,
            E8 => cone_quintic(field, rng)?,
            E9 => {
                // Q = L0 L3 with both planes through p, so L1 = 0 and L2(p) != 0
                let p = vertex(field);
                let (l0, l3) = (lin_in(field, &[0, 1, 2], rng), lin_in(field, &[0, 1, 2], rng));
                let l2 = lin(field, rng);
                if field.is_zero(&l2.eval(&p)) {
                    return Err(AlgebraError::Degenerate("L2 passes through p".into()));
                }
                // Q1 meets the plane L3 in two lines through p defined over the field
                let edge = [l3.clone(), var(field, 3)];
                let (a, b) = (point_on_line(field, &edge, rng)?, point_on_line(field, &edge, rng)?);
                let through = [Constraint::Point(a[..3].to_vec()), Constraint::Point(b[..3].to_vec())];
                let q1 = random_form_in(field, 3, 2, rng, &through)?.extend_vars(4);
                let q2 = form_in_first_three(field, 2, rng);
                let s1 = l0.mul(&q1);
                let s2 = l2.mul(&q1).add(&l3.mul(&q2));
                quadric_times_point(field, &l0.mul(&l3), &[s1, s2])
            }
        };
        expect_dim(&space, 5, "cubics through C2")?;
        system_map(&with_random_points(space, 1, rng))
    })
}

/// `Q = L0 L3 - L1 L2` through `p`, `S1 = L0 Q1 + L1 Q2`, `S2 = L2 Q1 + L3 Q2`.
/// With `binode`, the quadratic parts of `S1, S2` at `p` are multiples of the tangent plane of `Q`.
fn determinantal_quintic<F: Field, R: Rng + ?Sized>(binode: bool, field: &F, rng: &mut R) -> Result<FormSpace<F>> {
    let p = vertex(field);
    let mut l = [lin(field, rng), lin(field, rng), lin(field, rng), lin(field, rng)];
    let a: Vec<F::Elem> = l.iter().map(|f| f.eval(&p)).collect();
    let a0_inv = field.inv(&a[0]).ok_or_else(|| AlgebraError::Degenerate("L0 passes through p".into()))?;
    // fix the z3 coefficient of L3 so that Q(p) = a0 a3 - a1 a2 = 0
    let a3 = field.mul(&field.mul(&a[1], &a[2]), &a0_inv);
    l[3] = l[3].axpy(&field.sub(&a3, &a[3]), &var(field, 3));
    let q = det2(&l[0], &l[1], &l[2], &l[3]);
    let q1 = form_in_first_three(field, 2, rng);
    let q2 = if binode {
        // a0 Q1 + a1 Q2 = T n, with T the tangent plane of Q at p
        let tangent = q.partial(3);
        if tangent.is_zero() {
            return Err(AlgebraError::Degenerate("Q singular at p".into()));
        }
        let n = lin_in(field, &[0, 1, 2], rng);
        let a1_inv = field.inv(&a[1]).ok_or_else(|| AlgebraError::Degenerate("L1 passes through p".into()))?;
        tangent.mul(&n).sub(&q1.scale(&a[0])).scale(&a1_inv)
    } else {
        form_in_first_three(field, 2, rng)
    };
    let s1 = l[0].mul(&q1).add(&l[1].mul(&q2));
    let s2 = l[2].mul(&q1).add(&l[3].mul(&q2));
    Ok(quadric_times_point(field, &q, &[s1, s2]))
}

/// `Q` an irreducible cone with vertex `p` containing the line `z0 = z1 = 0`;
/// `C2` the residual of that line in `(Q, S1)`, with `S1` and the second cubic
/// `S2` through `C2` both in `hI_p + I_p^3`.
fn cone_quintic<F: Field, R: Rng + ?Sized>(field: &F, rng: &mut R) -> Result<FormSpace<F>> {
    let (z0, z1) = (var(field, 0), var(field, 1));
    let q = z0.mul(&lin_in(field, &[0, 1, 2], rng)).add(&z1.mul(&lin_in(field, &[0, 1, 2], rng)));
    let plane = lin_in(field, &[0, 1, 2], rng);
    let binode = binode_cubics(field, &plane);
    let s1 = binode.intersect(&cubics(field, &[z0.clone(), z1.clone()])).random_element(rng);
    let line = Ideal::new(field.clone(), 4, vec![z0, z1]);
    let c2 = Ideal::new(field.clone(), 4, vec![q.clone(), s1]).quotient(&line)?;
    Ok(cubics(field, c2.gens()).intersect(&binode))
}

// ---------------------------------------------------------------------------
// (3,5)

pub(crate) fn twisted_cubic<F: Field>(field: &F) -> Vec<Poly<F>> {
    let z = |i| var(field, i);
    vec![det2(&z(0), &z(1), &z(1), &z(2)), det2(&z(1), &z(2), &z(2), &z(3)), det2(&z(0), &z(1), &z(2), &z(3))]
}

/// The point of the twisted cubic with parameter `s`.
fn on_twisted_cubic<F: Field>(field: &F, s: &F::Elem) -> Vec<F::Elem> {
    vec![field.one(), s.clone(), field.mul(s, s), field.pow(s, 3)]
}

fn products<F: Field>(a: &[Poly<F>], b: &[Poly<F>]) -> Vec<Poly<F>> {
    a.iter().flat_map(|x| b.iter().map(move |y| x.mul(y))).collect()
}

pub fn cuboquintic<F: Field>(variant: CuboquinticVariant, seed: u64, field: &F) -> Result<RationalMap<F>> {
    use CuboquinticVariant::*;
    let label = match variant {
        E12 => FamilyLabel::E12,
        E13 => FamilyLabel::E13,
        E14 => FamilyLabel::E14,
        E19 => FamilyLabel::E19,
        E23 => FamilyLabel::E23,
        E24 => FamilyLabel::E24,
    };
    with_redraws(label, seed, field, |rng| {
        let space = match variant {
            E12 | E14 | E19 => {
                let gamma = twisted_cubic(field);
                let line = match variant {
                    E12 => vec![lin(field, rng), lin(field, rng)],
                    E14 => {
                        let p = on_twisted_cubic(field, &field.random(rng));
                        linear_forms_through(field, &[p, random_point(field, 4, rng)])
                    }
                    _ => {
                        let (s, t) = (field.random(rng), field.random(rng));
                        if s == t {
                            return Err(AlgebraError::Degenerate("secant through a single point".into()));
                        }
                        linear_forms_through(field, &[on_twisted_cubic(field, &s), on_twisted_cubic(field, &t)])
                    }
                };
                if line.len() != 2 {
                    return Err(AlgebraError::Degenerate("points do not span a line".into()));
                }
                let space = cubic_span(field, &products(&line, &gamma));
                expect_dim(&space, 6, "cubics in I_line I_gamma")?;
                with_random_points(space, 2, rng)
            }
            E13 => {
                let p = vertex(field);
                let q1 = random_form(field, 2, rng, &[Constraint::Point(p.clone())])?;
                let q2 = random_form(field, 2, rng, &[Constraint::Point(p)])?;
                let forms: Vec<Poly<F>> = (0..3).flat_map(|i| [q1.mul(&var(field, i)), q2.mul(&var(field, i))]).collect();
                with_random_points(cubic_span(field, &forms), 2, rng)
            }
            E23 => {
                let (a, b, c) = (lin(field, rng), lin(field, rng), lin(field, rng));
                let c2 = rational_quartic_gens(field, &[var(field, 0), var(field, 1), var(field, 2), var(field, 3)], &a, &b, &c);
                let space = cubics(field, &c2);
                expect_dim(&space, 7, "cubics through the rational quartic")?;
                with_contact_point(space, &c2[0], rng)?
            }
            E24 => {
                let (a, b, c) = (lin(field, rng), lin(field, rng), lin(field, rng));
                let j0 = cone_quartic_gens(field, &a, &b, &c);
                let space = cubics(field, &j0);
                expect_dim(&space, 7, "cubics through the quartic on the cone")?;
                with_contact_point(space, &j0[0], rng)?
            }
        };
        system_map(&space)
    })
}

/// `(Q, S0, S1, S2)` in the coordinates `z`: a rational quartic on the quadric
/// `Q = z1 z2 - z0 z3` residual to two skew lines.
pub(crate) fn rational_quartic_gens<F: Field>(
    field: &F,
    z: &[Poly<F>],
    a: &Poly<F>,
    b: &Poly<F>,
    c: &Poly<F>,
) -> Vec<Poly<F>> {
    let _ = field;
    let q = det2(&z[1], &z[0], &z[3], &z[2]);
    let s0 = a.mul(&z[0]).mul(&z[2]).add(&b.mul(&z[0]).mul(&z[3])).add(&c.mul(&z[1]).mul(&z[3]));
    let s1 = a.mul(&z[0]).mul(&z[0]).add(&b.mul(&z[0]).mul(&z[1])).add(&c.mul(&z[1]).mul(&z[1]));
    let s2 = a.mul(&z[2]).mul(&z[2]).add(&b.mul(&z[2]).mul(&z[3])).add(&c.mul(&z[3]).mul(&z[3]));
    vec![q, s0, s1, s2]
}

/// `(Q0, z0 Q', z1 Q', z2 Q')` with the cone `Q0 = z1 z2 - z0^2` and `Q' = a z2 + b z0 + c z1`.
pub(crate) fn cone_quartic_gens<F: Field>(field: &F, a: &Poly<F>, b: &Poly<F>, c: &Poly<F>) -> Vec<Poly<F>> {
    let z = |i| var(field, i);
    let q0 = z(1).mul(&z(2)).sub(&z(0).mul(&z(0)));
    let qp = a.mul(&z(2)).add(&b.mul(&z(0))).add(&c.mul(&z(1)));
    vec![q0, z(0).mul(&qp), z(1).mul(&qp), z(2).mul(&qp)]
}

/// Impose a point of contact at a random point `q` off the quadric `avoid`.
fn with_contact_point<F: Field, R: Rng + ?Sized>(space: FormSpace<F>, avoid: &Poly<F>, rng: &mut R) -> Result<FormSpace<F>> {
    let field = space.field().clone();
    let q = random_point(&field, 4, rng);
    if field.is_zero(&avoid.eval(&q)) {
        return Err(AlgebraError::Degenerate("contact point on the quadric".into()));
    }
    let plane = crate::idealkit::local::random_plane_through(&field, &q, rng);
    Ok(space.intersect(&cubics(&field, &contact_ideal_gens(&field, &q, &plane))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::PrimeField;

    fn gf() -> PrimeField {
        PrimeField::new(1_000_003).unwrap()
    }

    #[test]
    fn constructors_are_deterministic() {
        let f = gf();
        for label in FamilyLabel::constructible() {
            let a = construct(label, 11, &f).unwrap_or_else(|e| panic!("{label}: {e}"));
            let b = construct(label, 11, &f).unwrap();
            assert_eq!(a.components(), b.components(), "{label}");
            assert_eq!(a.label.as_deref(), Some(label.to_string().as_str()));
        }
    }

    #[test]
    fn e10_is_not_constructible() {
        assert!(matches!(construct(FamilyLabel::E10, 1, &gf()), Err(AlgebraError::Invalid(_))));
    }

    #[test]
    fn ruled_rejects_bad_degree() {
        assert!(ruled(6, 1, &gf()).is_err());
        assert!(ruled_degenerate(2, 1, &gf()).is_err());
    }

    #[test]
    fn minors_of_a_constant_row_matrix() {
        let f = gf();
        let z = |i| var(&f, i);
        let zero = Poly::zero(f, 4);
        // the first minor of the pinned matrix vanishes identically
        let a = vec![
            vec![zero.clone(), zero.clone(), zero.clone()],
            vec![z(1).neg(), z(2).neg(), zero.clone()],
            vec![z(0), zero.clone(), z(2).neg()],
            vec![zero, z(0), z(1)],
        ];
        let m = signed_minors(&a);
        assert!(m[0].is_zero());
        assert!(m[1..].iter().all(|p| p.is_zero()));
    }
}
