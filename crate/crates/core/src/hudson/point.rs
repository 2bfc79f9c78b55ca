//! Local type of a point for a web of cubics, read off the Taylor expansion
//! of the members at the point.

use std::fmt;

use rand::Rng;

use crate::cremona::RationalMap;
use crate::idealkit::local::frame_at;
use crate::polycore::{attempt_rng, linalg, monomials_of_degree, Field, Monomial, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointTag {
    DoublePoint,
    Binode,
    DoubleContactPoint,
    ContactPoint,
    OsculationPoint,
    Ordinary,
}

impl PointTag {
    /// Position in the count vector `(dpc, binode, dp, osculation, contact, ordinary)`.
    pub fn slot(&self) -> usize {
        match self {
            PointTag::DoubleContactPoint => 0,
            PointTag::Binode => 1,
            PointTag::DoublePoint => 2,
            PointTag::OsculationPoint => 3,
            PointTag::ContactPoint => 4,
            PointTag::Ordinary => 5,
        }
    }

    /// Every member is singular at the point.
    pub fn is_double(&self) -> bool {
        matches!(self, PointTag::DoublePoint | PointTag::Binode | PointTag::DoubleContactPoint)
    }

    pub fn name(&self) -> &'static str {
        match self {
            PointTag::DoublePoint => "double point",
            PointTag::Binode => "binode",
            PointTag::DoubleContactPoint => "double point of contact",
            PointTag::ContactPoint => "point of contact",
            PointTag::OsculationPoint => "point of osculation",
            PointTag::Ordinary => "ordinary",
        }
    }
}

impl fmt::Display for PointTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointType<F: Field> {
    pub tag: PointTag,
    /// Rank of the generic quadratic part, for the three double-point tags.
    pub rank: Option<usize>,
    /// Plane dividing every quadratic part, for a binode.
    pub fixed_plane: Option<Poly<F>>,
    /// For contact and osculation: the surface `S` is a member of the system, smooth at the point.
    pub smooth_witness: bool,
    /// Whether every member vanishes at the point.
    pub base_point: bool,
}

impl<F: Field> PointType<F> {
    fn plain(tag: PointTag, base_point: bool) -> Self {
        PointType { tag, rank: None, fixed_plane: None, smooth_witness: false, base_point }
    }
}

/// Homogeneous parts, by local degree 0..=3, of each member after moving
/// `p` to `(0:0:0:1)` and setting the last coordinate to 1.
pub(crate) fn local_parts<F: Field>(map: &RationalMap<F>, p: &[F::Elem]) -> Vec<[Poly<F>; 4]> {
    let field = map.field().clone();
    let frame = frame_at(&field, p);
    map.components()
        .iter()
        .map(|c| {
            let moved = c.substitute_matrix(&frame);
            let mut parts: [Vec<(Monomial, F::Elem)>; 4] = Default::default();
            for (m, coef) in moved.terms() {
                let e = m.exps(4);
                let local = Monomial::from_exps(&e[..3]);
                parts[local.deg() as usize].push((local, coef.clone()));
            }
            parts.map(|t| Poly::from_terms(field.clone(), 3, t))
        })
        .collect()
}

fn coeff_rows<F: Field>(polys: &[Poly<F>], degrees: &[u32]) -> Vec<Vec<F::Elem>> {
    let bases: Vec<Vec<Monomial>> = degrees.iter().map(|&d| monomials_of_degree(3, d)).collect();
    polys
        .chunks(degrees.len())
        .map(|chunk| chunk.iter().zip(&bases).flat_map(|(p, b)| p.coeff_vector(b)).collect())
        .collect()
}

/// Rank of a ternary quadratic form (odd or zero characteristic).
pub fn quadric_rank<F: Field>(q: &Poly<F>) -> usize {
    let f = q.field();
    let mut s = vec![vec![f.zero(); 3]; 3];
    for (m, c) in q.terms() {
        let idx: Vec<usize> = (0..3).flat_map(|i| std::iter::repeat_n(i, m.exp(i) as usize)).collect();
        let (i, j) = (idx[0], idx[1]);
        if i == j {
            s[i][i] = f.add(c, c);
        } else {
            s[i][j] = c.clone();
            s[j][i] = c.clone();
        }
    }
    linalg::rank(f, &s)
}

/// Split a ternary quadratic form of rank at most 2 into two linear forms
/// over the field; `None` when the form has rank 3 or its lines are conjugate.
pub fn split_quadric<F: Field>(q: &Poly<F>) -> Option<(Poly<F>, Poly<F>)> {
    let f = q.field().clone();
    if q.is_zero() {
        return None;
    }
    let sq = |i: usize| q.coeff(&Monomial::var_pow(i, 2));
    if let Some(i) = (0..3).find(|&i| !f.is_zero(&sq(i))) {
        return split_with_square(q, i);
    }
    // no square term: x_i -> x_i + x_j makes x_j^2 appear
    let (i, j) = [(0, 1), (0, 2), (1, 2)]
        .into_iter()
        .find(|&(i, j)| !f.is_zero(&q.coeff(&Monomial::var(i).mul(&Monomial::var(j)))))?;
    let shear = |s: F::Elem| {
        let mut m = linalg::identity(&f, 3);
        m[j][i] = s;
        m
    };
    let moved = q.substitute_matrix(&shear(f.one()));
    let (a, b) = split_with_square(&moved, j)?;
    let back = shear(f.neg(&f.one()));
    Some((a.substitute_matrix(&back), b.substitute_matrix(&back)))
}

/// Roots in `x_i` of `a x_i^2 + B x_i + C`, with `a != 0`.
fn split_with_square<F: Field>(q: &Poly<F>, i: usize) -> Option<(Poly<F>, Poly<F>)> {
    let f = q.field().clone();
    let (u, v) = match i {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let c = |a: usize, b: usize| q.coeff(&Monomial::var(a).mul(&Monomial::var(b)));
    let a = c(i, i);
    let (bu, bv) = (c(i, u), c(i, v));
    let (cuu, cuv, cvv) = (c(u, u), c(u, v), c(v, v));
    let four_a = f.mul(&f.from_i64(4), &a);
    let duu = f.sub(&f.mul(&bu, &bu), &f.mul(&four_a, &cuu));
    let duv = f.sub(&f.mul(&f.from_i64(2), &f.mul(&bu, &bv)), &f.mul(&four_a, &cuv));
    let dvv = f.sub(&f.mul(&bv, &bv), &f.mul(&four_a, &cvv));
    let var = |k: usize| Poly::var(f.clone(), 3, k);
    let two_a_inv = f.inv(&f.add(&a, &a))?;
    let half_b = var(u).scale(&f.mul(&bu, &two_a_inv)).add(&var(v).scale(&f.mul(&bv, &two_a_inv)));
    // the discriminant B^2 - 4aC must be lambda * m^2
    let (lambda, m) = if !f.is_zero(&duu) {
        (duu.clone(), var(u).axpy(&f.div(&duv, &f.add(&duu, &duu))?, &var(v)))
    } else if !f.is_zero(&dvv) {
        (dvv.clone(), var(v).axpy(&f.div(&duv, &f.add(&dvv, &dvv))?, &var(u)))
    } else if f.is_zero(&duv) {
        (f.zero(), Poly::zero(f.clone(), 3))
    } else {
        return None;
    };
    let s = f.sqrt(&lambda)?;
    let shift = m.scale(&f.mul(&s, &two_a_inv));
    let l1 = var(i).add(&half_b).sub(&shift);
    let l2 = var(i).add(&half_b).add(&shift);
    let l1 = l1.scale(&a);
    (l1.mul(&l2) == *q).then_some((l1, l2))
}

/// Local type of `p` for the web spanned by the components of `map`.
pub fn classify_point<F: Field>(map: &RationalMap<F>, p: &[F::Elem], seed: u64) -> PointType<F> {
    let field = map.field().clone();
    let parts = local_parts(map, p);
    let base_point = parts.iter().all(|t| t[0].is_zero());
    if !base_point {
        return PointType::plain(PointTag::Ordinary, false);
    }
    let lin: Vec<Poly<F>> = parts.iter().map(|t| t[1].clone()).collect();
    let linear_rank = linalg::rank(&field, &coeff_rows(&lin, &[1]));
    if linear_rank >= 2 {
        return PointType::plain(PointTag::Ordinary, true);
    }
    if linear_rank == 1 {
        let jets: Vec<Poly<F>> = parts.iter().flat_map(|t| [t[1].clone(), t[2].clone()]).collect();
        let jet_rank = linalg::rank(&field, &coeff_rows(&jets, &[1, 2]));
        let tag = if jet_rank == 1 { PointTag::OsculationPoint } else { PointTag::ContactPoint };
        return PointType { smooth_witness: true, ..PointType::plain(tag, true) };
    }
    let quads: Vec<Poly<F>> = parts.iter().map(|t| t[2].clone()).collect();
    let (echelon, _) = linalg::rref(&field, &coeff_rows(&quads, &[2]));
    let basis2 = monomials_of_degree(3, 2);
    let w: Vec<Poly<F>> = echelon
        .iter()
        .filter(|r| r.iter().any(|c| !field.is_zero(c)))
        .map(|r| Poly::from_coeff_vector(field.clone(), 3, &basis2, r))
        .collect();
    let double = |tag: PointTag, rank: usize| PointType { rank: Some(rank), ..PointType::plain(tag, true) };
    match w.len() {
        0 => return double(PointTag::DoublePoint, 0),
        1 => return double(PointTag::DoubleContactPoint, quadric_rank(&w[0])),
        _ => {}
    }
    let mut rng = attempt_rng(seed, "point-type", 0);
    let members: Vec<Poly<F>> = (0..3).map(|_| random_combination(&field, &w, &mut rng)).collect();
    let rank = members.iter().map(quadric_rank).max().unwrap_or(0);
    if rank <= 2 {
        if let Some(h) = common_linear_factor(&w, &members) {
            let inv = linalg::inverse(&field, &frame_at(&field, p)).expect("frame is invertible");
            let plane = h.extend_vars(4).substitute_matrix(&inv).monic();
            return PointType { fixed_plane: Some(plane), ..double(PointTag::Binode, rank) };
        }
    }
    double(PointTag::DoublePoint, rank)
}

fn random_combination<F: Field, R: Rng + ?Sized>(field: &F, w: &[Poly<F>], rng: &mut R) -> Poly<F> {
    loop {
        let m = w.iter().fold(Poly::zero(field.clone(), 3), |acc, q| acc.axpy(&field.random(rng), q));
        if !m.is_zero() {
            return m;
        }
    }
}

/// A linear form dividing every element of `w`, found among the factors of
/// the sample members and confirmed by exact division.
fn common_linear_factor<F: Field>(w: &[Poly<F>], members: &[Poly<F>]) -> Option<Poly<F>> {
    members.iter().filter_map(split_quadric).find_map(|(a, b)| {
        [a, b].into_iter().find(|h| w.iter().all(|q| q.div_exact(h).is_some()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{parse_poly, PrimeField, Rationals};

    fn gf() -> PrimeField {
        PrimeField::new(1_000_003).unwrap()
    }

    fn map(v: [&str; 4]) -> RationalMap<PrimeField> {
        RationalMap::new(v.iter().map(|s| parse_poly(&gf(), 4, s).unwrap()).collect()).unwrap()
    }

    fn e3() -> Vec<u32> {
        vec![0, 0, 0, 1]
    }

    #[test]
    fn splits_quadrics() {
        let f = gf();
        for s in ["x0*x1", "x0^2 - x1^2", "x0*x1 + x0*x2", "x2^2", "3*x0^2 + 2*x0*x1 - x1*x2 - 5*x0*x2"] {
            let q = parse_poly(&f, 3, &s.replace('x', "z")).unwrap();
            match split_quadric(&q) {
                Some((a, b)) => assert_eq!(a.mul(&b), q, "{s}"),
                None => assert_eq!(quadric_rank(&q), 3, "{s}"),
            }
        }
        let smooth = parse_poly(&f, 3, "z0^2 + z1^2 + z2^2").unwrap();
        assert_eq!(quadric_rank(&smooth), 3);
        assert!(split_quadric(&smooth).is_none());
        // x^2 + y^2 splits only when -1 is a square; 1000003 = 3 mod 4
        let pair = parse_poly(&f, 3, "z0^2 + z1^2").unwrap();
        assert_eq!(quadric_rank(&pair), 2);
        assert!(split_quadric(&pair).is_none());
        let q = parse_poly(&Rationals, 3, "z0^2 - 4*z1^2").unwrap();
        assert!(split_quadric(&q).is_some());
    }

    #[test]
    fn tags_of_monomial_webs() {
        // not a base point
        let t = classify_point(&map(["z3^3", "z0^3", "z1^3", "z2^3"]), &e3(), 1);
        assert_eq!((t.tag, t.base_point), (PointTag::Ordinary, false));
        // generic base point
        let t = classify_point(&map(["z0*z3^2", "z1*z3^2", "z2^3", "z1^3"]), &e3(), 1);
        assert_eq!((t.tag, t.base_point), (PointTag::Ordinary, true));
        // common tangent plane z0, second-order parts differ
        let t = classify_point(&map(["z0*z3^2", "z1^2*z3", "z2^2*z3", "z1^3"]), &e3(), 1);
        assert_eq!(t.tag, PointTag::ContactPoint);
        // everything is a multiple of z0 z3^2 + z1^2 z3 modulo third order
        let t = classify_point(&map(["z0*z3^2 + z1^2*z3", "z1^3", "z2^3", "z0^3"]), &e3(), 1);
        assert_eq!(t.tag, PointTag::OsculationPoint);
        // one quadratic part
        let t = classify_point(&map(["z0*z1*z3", "z0^3", "z1^3", "z2^3"]), &e3(), 1);
        assert_eq!((t.tag, t.rank), (PointTag::DoubleContactPoint, Some(2)));
        // all quadratic parts divisible by z0
        let t = classify_point(&map(["z0*z1*z3", "z0*z2*z3", "z0^2*z3", "z1^3 + z2^3"]), &e3(), 1);
        assert_eq!(t.tag, PointTag::Binode);
        assert_eq!(t.fixed_plane, Some(Poly::var(gf(), 4, 0)));
        // cone over a pencil of conics
        let t = classify_point(&map(["z0*z1*z3", "z2^2*z3", "z0^3", "z1^3"]), &e3(), 1);
        assert_eq!((t.tag, t.rank), (PointTag::DoublePoint, Some(3)));
    }

    #[test]
    fn fixed_plane_lives_in_global_coordinates() {
        // binode at (1:0:0:0) with fixed plane z1
        let t = classify_point(&map(["z1*z2*z0", "z1*z3*z0", "z1^2*z0", "z2^3 + z3^3"]), &[1, 0, 0, 0], 2);
        assert_eq!(t.tag, PointTag::Binode);
        assert_eq!(t.fixed_plane, Some(Poly::var(gf(), 4, 1)));
    }
}
