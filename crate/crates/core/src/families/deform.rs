//! One-parameter families joining strata, sampled at integer parameter values.

use std::fmt;
use std::str::FromStr;

use super::build::{
    contact_ideal_gens, elliptic_quintic_minors, generic_position, lin, rational_quartic_gens,
    signed_minors, var,
};
use super::label::FamilyLabel;
use crate::cremona::{analyze, AnalysisOptions, MapAnalysis, RationalMap};
use crate::error::{AlgebraError, Result};
use crate::idealkit::local::random_plane_through;
use crate::polycore::{keyed_rng, random_point, Field, FormSpace, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DeformationPath {
    /// Minors of `A + tB` with the pinned degenerate matrix `A`.
    DetToDeJonquieres,
    /// Minors of the matrix `M_t` through an elliptic quintic.
    E6ToE7,
    /// The family `I_eps` leaving the ruled stratum.
    RuledJump,
    /// The quartic `J_t` on a smooth quadric degenerating onto a cone.
    E24ToE23,
}

/// What the analysis must show at one parameter value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathEndpoint {
    /// Family the sample must land in, when the path pins it.
    pub family: Option<FamilyLabel>,
    pub bidegree: (u32, u32),
    pub c2: Option<(i64, i64)>,
    pub ruled: bool,
}

impl DeformationPath {
    pub fn all() -> [DeformationPath; 4] {
        [Self::DetToDeJonquieres, Self::E6ToE7, Self::RuledJump, Self::E24ToE23]
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::DetToDeJonquieres => "det_to_dJ",
            Self::E6ToE7 => "E6_to_E7",
            Self::RuledJump => "ruled_jump",
            Self::E24ToE23 => "E24_to_E23",
        }
    }

    /// Parameter values checked by default: the special one and two generic ones.
    pub fn default_samples(&self) -> Vec<i64> {
        vec![0, 1, 2]
    }

    pub fn expected(&self, t: i64) -> PathEndpoint {
        let at = |family: FamilyLabel, bidegree, c2| PathEndpoint { family: Some(family), bidegree, c2: Some(c2), ruled: false };
        match (self, t == 0) {
            (Self::DetToDeJonquieres, true) => at(FamilyLabel::E3, (3, 3), (6, 4)),
            (Self::DetToDeJonquieres, false) => at(FamilyLabel::E2, (3, 3), (6, 3)),
            (Self::E6ToE7, true) => at(FamilyLabel::E7, (3, 4), (5, 2)),
            (Self::E6ToE7, false) => at(FamilyLabel::E6, (3, 4), (5, 1)),
            (Self::RuledJump, true) => {
                PathEndpoint { family: Some(FamilyLabel::Ruled(3)), bidegree: (3, 3), c2: None, ruled: true }
            }
            (Self::RuledJump, false) => PathEndpoint { family: None, bidegree: (3, 4), c2: None, ruled: false },
            (Self::E24ToE23, true) => at(FamilyLabel::E24, (3, 5), (4, 1)),
            (Self::E24ToE23, false) => at(FamilyLabel::E23, (3, 5), (4, 0)),
        }
    }
}

impl fmt::Display for DeformationPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DeformationPath {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        Self::all()
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| AlgebraError::Invalid(format!("unknown deformation path {s}")))
    }
}

/// The map at parameter `t`. Random ingredients depend on `seed` only, so all
/// parameter values share them.
pub fn deform_map<F: Field>(path: DeformationPath, t: i64, seed: u64, field: &F) -> Result<RationalMap<F>> {
    let mut rng = keyed_rng(seed, path.name());
    let tt = field.from_i64(t);
    let z: Vec<Poly<F>> = (0..4).map(|i| var(field, i)).collect();
    let map = match path {
        DeformationPath::DetToDeJonquieres => {
            let zero = Poly::zero(field.clone(), 4);
            let a = [vec![zero.clone(), zero.clone(), zero.clone()],
                vec![z[1].neg(), z[2].neg(), zero.clone()],
                vec![z[0].clone(), zero.clone(), z[2].neg()],
                vec![zero, z[0].clone(), z[1].clone()]];
            let b: Vec<Vec<Poly<F>>> = (0..4).map(|_| (0..3).map(|_| lin(field, &mut rng)).collect()).collect();
            let comps = if t != 0 {
                let m: Vec<Vec<Poly<F>>> =
                    a.iter().zip(&b).map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x.axpy(&tt, y)).collect()).collect();
                signed_minors(&m)
            } else {
                // every minor of A vanishes, so the limit is the coefficient of t
                let mut acc = vec![Poly::zero(field.clone(), 4); 4];
                for col in 0..3 {
                    let m: Vec<Vec<Poly<F>>> = a
                        .iter()
                        .zip(&b)
                        .map(|(ra, rb)| (0..3).map(|j| if j == col { rb[j].clone() } else { ra[j].clone() }).collect())
                        .collect();
                    for (s, m) in acc.iter_mut().zip(signed_minors(&m)) {
                        *s = s.add(&m);
                    }
                }
                acc
            };
            RationalMap::new(comps)?
        }
        DeformationPath::E6ToE7 => {
            let l = [lin(field, &mut rng), lin(field, &mut rng), lin(field, &mut rng), lin(field, &mut rng)];
            let p1 = random_point(field, 4, &mut rng);
            let space = FormSpace::span(field.clone(), 4, 3, &elliptic_quintic_minors(field, &tt, &l)).vanishing_at(&p1);
            system(&space)?
        }
        DeformationPath::RuledJump => {
            let p2 = random_point(field, 4, &mut rng);
            let z01 = z[0].mul(&z[1]);
            let gens = vec![
                z01.mul(&z[0]),
                z01.mul(&z[1]),
                z01.mul(&z[2]),
                z[0].mul(&z[0]).mul(&z[2]).axpy(&tt, &z[0].mul(&z[2]).mul(&z[2])),
                z[1].mul(&z[1]).mul(&z[3]),
            ];
            system(&FormSpace::span(field.clone(), 4, 3, &gens).vanishing_at(&p2))?
        }
        DeformationPath::E24ToE23 => {
            let (a, b, c) = (lin(field, &mut rng), lin(field, &mut rng), lin(field, &mut rng));
            let q = random_point(field, 4, &mut rng);
            let plane = random_plane_through(field, &q, &mut rng);
            let zt = [z[0].axpy(&tt, &z[3]), z[1].clone(), z[2].clone(), z[0].axpy(&field.neg(&tt), &z[3])];
            // at t = 0 this is the ideal of the quartic on the cone Q0 = z1 z2 - z0^2
            let j = rational_quartic_gens(field, &zt, &a, &b, &c);
            let contact = FormSpace::ideal_piece(field.clone(), 4, 3, &contact_ideal_gens(field, &q, &plane));
            system(&FormSpace::ideal_piece(field.clone(), 4, 3, &j).intersect(&contact))?
        }
    };
    let moved = generic_position(&map, field, &mut rng)?;
    Ok(moved.with_label(format!("{}@{t}", path.name())).with_seed(seed))
}

fn system<F: Field>(space: &FormSpace<F>) -> Result<RationalMap<F>> {
    if space.dim() != 4 {
        return Err(AlgebraError::Degenerate(format!("linear system has dimension {}, expected 4", space.dim())));
    }
    RationalMap::new(space.basis())
}

/// Analyses along a path at the given parameter values.
pub fn deform<F: Field>(
    path: DeformationPath,
    samples: &[i64],
    seed: u64,
    field: &F,
    opts: &AnalysisOptions,
) -> Result<Vec<(i64, MapAnalysis<F>)>> {
    samples
        .iter()
        .map(|&t| {
            let map = deform_map(path, t, seed, field)?;
            Ok((t, analyze(&map, seed, opts)?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_names_round_trip() {
        for p in DeformationPath::all() {
            assert_eq!(p.name().parse::<DeformationPath>().unwrap(), p);
        }
        assert!("sideways".parse::<DeformationPath>().is_err());
    }
}
