//! Which irreducible component (and, where recognizable, which stratum) of
//! the space of cubic Cremona transformations a map belongs to.

use crate::cremona::{MapAnalysis, RationalMap, Verdict};
use crate::error::{AlgebraError, Result};
use crate::families::FamilyLabel;
use crate::idealkit::Ideal;
use crate::polycore::{Field, FormSpace};

use super::point::PointTag;
use super::vector::{hudson_vector, HudsonVector};

/// Family of a birational map, computing its local invariants first.
pub fn classify_component<F: Field>(map: &RationalMap<F>, analysis: &MapAnalysis<F>, seed: u64) -> Result<FamilyLabel> {
    if analysis.ruled.ruled {
        return classify_with(analysis, None);
    }
    let v = hudson_vector(map, analysis, seed)?;
    classify_with(analysis, Some(&v))
}

/// The decision tree on the bidegree, the genus of `C2` and the special
/// points. The returned label names the stratum; `label.component()` is the
/// component. Sub-strata are only as reliable as the point types found over
/// the field.
pub fn classify_with<F: Field>(analysis: &MapAnalysis<F>, v: Option<&HudsonVector<F>>) -> Result<FamilyLabel> {
    use FamilyLabel::*;
    if analysis.birational.verdict != Verdict::Yes {
        return Err(AlgebraError::Invalid("map is not birational".into()));
    }
    let (deg, d) = analysis.bidegree;
    if deg != 3 || !(2..=5).contains(&d) {
        return Err(AlgebraError::Invalid(format!("bidegree ({deg},{d}) is outside the cubic range (3,2)..(3,5)")));
    }
    if analysis.ruled.ruled {
        return Ok(Ruled(d));
    }
    let v = v.ok_or_else(|| AlgebraError::Invalid("local invariants are needed for a non-ruled map".into()))?;
    let p2 = analysis.split.c2.p_a;
    let count = |t: PointTag| v.counts[t.slot()];
    let doubles = count(PointTag::DoublePoint) + count(PointTag::Binode) + count(PointTag::DoubleContactPoint);
    let conflict = |what: &str| -> Result<FamilyLabel> {
        Err(AlgebraError::Degenerate(format!(
            "bidegree (3,{d}) with p_a(C2) = {p2}: {what}; counts {:?}, C2 profile {:?}",
            v.counts,
            v.profiles.iter().map(|p| (p.c1_mult, p.c2_mult)).collect::<Vec<_>>()
        )))
    };
    match (d, p2) {
        (3, 3) => Ok(E2),
        (3, 4) => {
            if count(PointTag::DoubleContactPoint) == 1 {
                Ok(E4)
            } else if count(PointTag::Binode) == 1 {
                Ok(E3_5)
            } else if count(PointTag::DoublePoint) == 1 {
                Ok(E3)
            } else {
                conflict("no fixed double point")
            }
        }
        (4, 1) => Ok(E6),
        (4, 2) => {
            // the quadric through C2 is a cone with vertex at the binode exactly for E8
            let binode_on_cone = match v.points_of(PointTag::Binode).next() {
                Some((p, _)) => quadric_singular_at(&analysis.split.c2.ideal, p),
                None => false,
            };
            match (count(PointTag::DoubleContactPoint), count(PointTag::Binode), count(PointTag::DoublePoint)) {
                (1, 1, 0) => Ok(E10),
                (1, 0, 0) => Ok(E9),
                (0, 1, 0) if binode_on_cone => Ok(E8),
                (0, 1, 0) => Ok(E7_5),
                (0, 0, 1) => Ok(E7),
                _ => conflict("no recognizable special point"),
            }
        }
        (5, -1) => Ok(E12),
        (5, 0) => {
            if doubles > 0 {
                Ok(E14)
            } else if count(PointTag::ContactPoint) > 0 && analysis.split.c2.ideal.graded_piece_dim(3)? == 7 {
                Ok(E23)
            } else {
                conflict("neither a double point nor a point of contact")
            }
        }
        (5, 1) => {
            let c1 = &analysis.split.c1;
            let triple = c1.sing.len() == 1 && c1.sing[0].1 == 3;
            if triple && doubles == 1 {
                Ok(E13)
            } else if doubles == 2 {
                Ok(E19)
            } else if doubles == 1 && count(PointTag::ContactPoint) == 1 {
                Ok(E24)
            } else {
                conflict("no triple point of C1, two double points, or double point with a point of contact")
            }
        }
        (2, _) => Err(AlgebraError::Invalid("every birational map of bidegree (3,2) is ruled; none found".into())),
        _ => Err(AlgebraError::Invalid(format!(
            "no birational cubic map of bidegree (3,{d}) has p_a(C2) = {p2}; that stratum is empty"
        ))),
    }
}

/// Whether every quadric containing the curve is singular at `p`.
fn quadric_singular_at<F: Field>(curve: &Ideal<F>, p: &[F::Elem]) -> bool {
    let quadrics = FormSpace::ideal_piece(curve.field().clone(), 4, 2, curve.gens());
    let f = curve.field();
    quadrics.dim() > 0 && quadrics.basis().iter().all(|q| q.partials().iter().all(|d| f.is_zero(&d.eval(p))))
}
