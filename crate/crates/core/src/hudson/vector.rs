//! Special points of a map, their tangent-cone profiles, the components of
//! the base curve, and the resulting count vector.

use crate::cremona::{CurveRecord, MapAnalysis, RationalMap};
use crate::error::Result;
use crate::families::HudsonCounts;
use crate::idealkit::local::{random_plane_through, same_point};
use crate::idealkit::{multiplicity_at, rational_points, Ideal};
use crate::polycore::{attempt_rng, random_point, Field, FormSpace};

use super::point::{classify_point, PointTag, PointType};

/// Degrees of the tangent cones of `C1` and `C2` at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentProfile<F: Field> {
    pub point: Vec<F::Elem>,
    pub c1_mult: usize,
    pub c2_mult: usize,
    pub on_c2: bool,
}

pub fn tangent_profile<F: Field>(
    c1: &CurveRecord<F>,
    c2: &CurveRecord<F>,
    p: &[F::Elem],
    seed: u64,
) -> Result<TangentProfile<F>> {
    let c1_mult = c1.multiplicity(p, seed)?;
    let c2_mult = if c2.degree > 0 { c2.multiplicity(p, seed)? } else { 0 };
    Ok(TangentProfile { point: p.to_vec(), c1_mult, c2_mult, on_c2: c2_mult > 0 })
}

/// Points where special behaviour can occur.
#[derive(Clone, Debug)]
pub struct Candidates<F: Field> {
    pub points: Vec<Vec<F::Elem>>,
    /// Points of `Sing C1`, `Sing C2` or the isolated base points that are not rational.
    pub unresolved: usize,
}

/// Singular points of `C1` and `C2`, the fixed part of `C1 ∩ C2`, and the
/// isolated base points, without repetition.
pub fn candidate_points<F: Field>(analysis: &MapAnalysis<F>) -> Candidates<F> {
    let field = analysis.base.ideal.field().clone();
    let (c1, c2) = (&analysis.split.c1, &analysis.split.c2);
    let theta = &analysis.base.theta;
    let mut points: Vec<Vec<F::Elem>> = Vec::new();
    let sources = c1
        .sing
        .iter()
        .map(|(p, _)| p)
        .chain(c2.sing.iter().map(|(p, _)| p))
        .chain(&analysis.contact.rational)
        .chain(&theta.rational);
    for p in sources {
        if !points.iter().any(|q| same_point(&field, p, q)) {
            points.push(p.clone());
        }
    }
    let missing = |found: usize, total: Option<usize>| total.map_or(0, |t| t.saturating_sub(found));
    let unresolved = missing(c1.sing.len(), c1.sing_distinct)
        + missing(c2.sing.len(), c2.sing_distinct)
        + missing(theta.rational.len(), Some(theta.distinct));
    Candidates { points, unresolved }
}

/// One component of `C2` found over the field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FCurve {
    pub degree: i64,
    pub p_a: i64,
    /// Multiplicity of the component in `C2`.
    pub multiplicity: i64,
    /// The component is a line; otherwise it is the residual curve, not split further.
    pub line: bool,
}

impl FCurve {
    /// Degree as the table lists it: `l^2` counts 2, `omega_k` counts `k`.
    pub fn listed_degree(&self) -> i64 {
        self.degree * self.multiplicity
    }
}

/// Split off the rational lines of a curve. Lines are found by joining
/// rational points of two plane sections, then removed by saturation; what
/// remains is reported as one residual curve.
pub fn split_components<F: Field>(curve: &CurveRecord<F>, seed: u64) -> Result<Vec<FCurve>> {
    if curve.degree <= 0 {
        return Ok(Vec::new());
    }
    let field = curve.ideal.field().clone();
    let mut rng = attempt_rng(seed, "fcurve-sections", 0);
    let mut sections = Vec::with_capacity(2);
    for _ in 0..2 {
        let anchor = random_point(&field, 4, &mut rng);
        let plane = random_plane_through(&field, &anchor, &mut rng);
        sections.push(rational_points(&curve.ideal.with(&[plane]), seed)?.rational);
    }
    let top = curve.ideal.gens().iter().filter_map(|g| g.degree()).max().unwrap_or(0) as i64;
    let mut lines = Vec::new();
    for a in &sections[0] {
        for b in &sections[1] {
            if !same_point(&field, a, b) && line_inside(&curve.ideal, a, b, top) {
                lines.push(FormSpace::full(field.clone(), 4, 1).vanishing_at(a).vanishing_at(b).basis());
            }
        }
    }
    let mut out = Vec::new();
    let mut current = curve.clone();
    for line in lines {
        let rest = current.ideal.saturate(&Ideal::new(field.clone(), 4, line))?;
        let rest = CurveRecord::from_ideal(rest)?;
        out.push(FCurve { degree: 1, p_a: 0, multiplicity: current.degree - rest.degree, line: true });
        current = rest;
    }
    if current.degree > 0 {
        out.push(FCurve { degree: current.degree, p_a: current.p_a, multiplicity: 1, line: false });
    }
    Ok(out)
}

/// Whether every generator vanishes on the line `ab`: a form of degree at
/// most `top` vanishing at `top + 1` points of a line vanishes on it.
fn line_inside<F: Field>(i: &Ideal<F>, a: &[F::Elem], b: &[F::Elem], top: i64) -> bool {
    let f = i.field();
    (0..=top).all(|k| {
        let t = f.from_i64(k);
        let pt: Vec<F::Elem> = a.iter().zip(b).map(|(x, y)| f.add(x, &f.mul(&t, y))).collect();
        i.gens().iter().all(|g| f.is_zero(&g.eval(&pt)))
    })
}

/// Local invariants of a map: special point counts in table order, the
/// classified points, their profiles, and the components of `C2`.
#[derive(Clone, Debug)]
pub struct HudsonVector<F: Field> {
    pub bidegree: (u32, u32),
    pub counts: HudsonCounts,
    /// Every candidate point with its type.
    pub points: Vec<(Vec<F::Elem>, PointType<F>)>,
    /// Profiles at the special (non-ordinary) points.
    pub profiles: Vec<TangentProfile<F>>,
    pub fcurves: Vec<FCurve>,
    /// Degree and arithmetic genus of `C2`.
    pub c2: (i64, i64),
    pub ruled: bool,
    /// Some candidate points could not be found over the field.
    pub partial: bool,
}

impl<F: Field> HudsonVector<F> {
    /// Special points of the given type.
    pub fn points_of(&self, tag: PointTag) -> impl Iterator<Item = &(Vec<F::Elem>, PointType<F>)> {
        self.points.iter().filter(move |(_, t)| t.tag == tag)
    }

    /// Table-style degree list of the components of `C2`, sorted descending.
    pub fn fcurve_degrees(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self.fcurves.iter().map(FCurve::listed_degree).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

/// Classify every candidate point and count by type. Ordinary points are
/// the isolated base points with no special structure; points of contact
/// and osculation count only off `C2`. Ruled maps only
/// report their isolated base points, since their singular loci are curves.
pub fn hudson_vector<F: Field>(map: &RationalMap<F>, analysis: &MapAnalysis<F>, seed: u64) -> Result<HudsonVector<F>> {
    let field = map.field().clone();
    let (c1, c2) = (&analysis.split.c1, &analysis.split.c2);
    let theta = &analysis.base.theta;
    let fcurves = split_components(c2, seed)?;
    let mut v = HudsonVector {
        bidegree: analysis.bidegree,
        counts: [0; 6],
        points: Vec::new(),
        profiles: Vec::new(),
        fcurves,
        c2: (c2.degree, c2.p_a),
        ruled: analysis.ruled.ruled,
        partial: false,
    };
    if v.ruled {
        v.counts[PointTag::Ordinary.slot()] = theta.distinct as u32;
        return Ok(v);
    }
    let cands = candidate_points(analysis);
    v.partial = cands.unresolved > 0;
    for p in cands.points {
        let t = classify_point(map, &p, seed);
        let in_theta = theta.rational.iter().any(|q| same_point(&field, q, &p));
        match t.tag {
            PointTag::Ordinary if !(in_theta && t.base_point) => {}
            PointTag::Ordinary => v.counts[PointTag::Ordinary.slot()] += 1,
            tag => {
                let profile = tangent_profile(c1, c2, &p, seed)?;
                // every surface through a nodal base curve is tangent to the plane of its branches
                if tag.is_double() || !profile.on_c2 {
                    v.counts[tag.slot()] += 1;
                    v.profiles.push(profile);
                }
            }
        }
        v.points.push((p, t));
    }
    Ok(v)
}

/// Multiplicity at `p` of the union `C1 ∪ C2`.
pub fn union_multiplicity<F: Field>(c1: &Ideal<F>, c2: &Ideal<F>, p: &[F::Elem], seed: u64) -> Result<usize> {
    multiplicity_at(&c1.intersect(c2)?, p, seed)
}
