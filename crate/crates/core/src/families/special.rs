//! Golden maps with pinned rational coefficients.

use num_rational::BigRational;

use crate::cremona::RationalMap;
use crate::error::Result;
use crate::idealkit::Ideal;
use crate::polycore::{parse_poly, Field, FormSpace, Poly, Rationals};

/// A named map together with the data needed to check it.
#[derive(Clone, Debug)]
pub struct SpecialExample {
    pub name: &'static str,
    pub map: RationalMap<Rationals>,
    /// The distinguished point of the example, if any.
    pub point: Option<Vec<BigRational>>,
    /// The pinned ideal of the curve part of the base locus, if any.
    pub curve: Option<Ideal<Rationals>>,
}

/// Simple base points used to cut six cubics down to four.
const PINNED_POINTS: [[i64; 4]; 2] = [[1, 2, 3, 5], [2, -1, 1, 3]];

fn q(s: &str) -> Poly<Rationals> {
    parse_poly(&Rationals, 4, s).expect("pinned polynomial parses")
}

fn qpoint(v: &[i64]) -> Vec<BigRational> {
    v.iter().map(|&x| Rationals.from_i64(x)).collect()
}

fn named(name: &str, comps: [&str; 4]) -> Result<RationalMap<Rationals>> {
    Ok(RationalMap::new(comps.iter().map(|s| q(s)).collect())?.with_label(name))
}

/// Cubics of `gens` through the given points.
fn through_points(gens: &[Poly<Rationals>], points: &[Vec<BigRational>]) -> FormSpace<Rationals> {
    points
        .iter()
        .fold(FormSpace::ideal_piece(Rationals, 4, 3, gens), |s, p| s.vanishing_at(p))
}

fn from_space(name: &str, space: &FormSpace<Rationals>) -> Result<RationalMap<Rationals>> {
    Ok(RationalMap::new(space.basis())?.with_label(name))
}

/// `I_eps = z0 z1 (z0, z1, z2) + (z0^2 z2 + eps z0 z2^2, z1^2 z3)` through one pinned point.
pub fn pro_inter(eps: i64) -> Result<RationalMap<Rationals>> {
    let gens = [
        q("z0^2*z1"),
        q("z0*z1^2"),
        q("z0*z1*z2"),
        q("z0^2*z2").axpy(&Rationals.from_i64(eps), &q("z0*z2^2")),
        q("z1^2*z3"),
    ];
    from_space(&format!("pro-inter({eps})"), &through_points(&gens, &[qpoint(&PINNED_POINTS[0])]))
}

/// The six cubics of `I_C2 ∩ I_dpc` for the curve with a doubled line and two more lines through `p`.
pub fn a1_cubics() -> Vec<Poly<Rationals>> {
    [
        "z1*z2^2 - z2^3",
        "z0*z2^2 - z2^3",
        "z1^2*z2 - z2^3 - z0*z1*z3 + z2^2*z3",
        "z0*z1*z2 - z2^3",
        "z0^2*z2 - z2^3",
        "z0^2*z1 - z2^3",
    ]
    .iter()
    .map(|s| q(s))
    .collect()
}

/// `((z2, z0)^2 + (Q)) ∩ (z1, z2) ∩ (z0 - z2, z1 - z2)` with `Q = z0 z3 - z1 z2`.
pub fn a1_curve() -> Result<Ideal<Rationals>> {
    let doubled = Ideal::from_polys(vec![q("z2^2"), q("z0*z2"), q("z0^2"), q("z0*z3 - z1*z2")]);
    let l1 = Ideal::from_polys(vec![q("z1"), q("z2")]);
    let l2 = Ideal::from_polys(vec![q("z0 - z2"), q("z1 - z2")]);
    Ideal::intersect_all(&[doubled, l1, l2])
}

/// The six cubics of `I_C2 ∩ I_dpc` for a plane nodal cubic plus a line through `p`.
pub fn a2_cubics() -> Vec<Poly<Rationals>> {
    [
        "z0*z2^2 - z1*z2^2",
        "z0*z1*z2 - z1^2*z2",
        "z0^2*z2 - z1^2*z2",
        "2*z1^3 + z2^3 + z1^2*z3 - z0*z2*z3",
        "2*z0*z1^2 + z2^3 + z1^2*z3 - z0*z2*z3",
        "2*z0^2*z1 + z2^3 + z1^2*z3 - z0*z2*z3",
    ]
    .iter()
    .map(|s| q(s))
    .collect()
}

/// `(z1 - z0, (z1 - z2) z1 z3 + z0^3 + z1^3 + z2^3) ∩ (z1, z2)`.
pub fn a2_curve() -> Result<Ideal<Rationals>> {
    let cubic = Ideal::from_polys(vec![q("z1 - z0"), q("z1^2*z3 - z1*z2*z3 + z0^3 + z1^3 + z2^3")]);
    let line = Ideal::from_polys(vec![q("z1"), q("z2")]);
    cubic.intersect(&line)
}

/// All golden maps.
pub fn special_examples() -> Result<Vec<SpecialExample>> {
    let p = qpoint(&[0, 0, 0, 1]);
    let pins: Vec<Vec<BigRational>> = PINNED_POINTS.iter().map(|v| qpoint(v)).collect();
    let plain = |name: &'static str, map| SpecialExample { name, map, point: None, curve: None };
    Ok(vec![
        plain("ruled-involution", named("ruled-involution", ["z0*z1^2", "z0^2*z1", "z0^2*z2", "z1^2*z3"])?),
        plain("dJ-ruled", named("dJ-ruled", ["z0^3", "z0^2*z1", "z0^2*z2", "z1^2*z3"])?),
        plain("pro-inter-0", pro_inter(0)?),
        plain("pro-inter-1", pro_inter(1)?),
        SpecialExample {
            name: "a1",
            map: from_space("a1", &through_points(&a1_cubics(), &pins))?,
            point: Some(p.clone()),
            curve: Some(a1_curve()?),
        },
        SpecialExample {
            name: "a2",
            map: from_space("a2", &through_points(&a2_cubics(), &pins))?,
            point: Some(p),
            curve: Some(a2_curve()?),
        },
    ])
}

/// One golden map by name.
pub fn special_example(name: &str) -> Result<Option<SpecialExample>> {
    Ok(special_examples()?.into_iter().find(|e| e.name.eq_ignore_ascii_case(name)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pinned_cubics_generate_the_printed_intersections() {
        let cube: Vec<Poly<Rationals>> = crate::polycore::monomials_of_degree(3, 3)
            .into_iter()
            .map(|m| Poly::monomial(Rationals, 4, m, Rationals.one()))
            .collect();
        let dpc1 = Ideal::from_polys(vec![q("z2^2*z3 - z0*z1*z3")]).with(&cube);
        let expected = a1_curve().unwrap().intersect(&dpc1).unwrap();
        assert!(expected.equals(&Ideal::from_polys(a1_cubics())).unwrap());
        let dpc2 = Ideal::from_polys(vec![q("z1^2 - z0*z2")]).with(&cube);
        let expected = a2_curve().unwrap().intersect(&dpc2).unwrap();
        assert!(expected.equals(&Ideal::from_polys(a2_cubics())).unwrap());
    }

    #[test]
    fn examples_are_cubic_maps() {
        let all = special_examples().unwrap();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0].map.components()[0], q("z0*z1^2"));
    }
}
