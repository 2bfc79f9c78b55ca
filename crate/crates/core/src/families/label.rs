//! Family labels and the invariants each family must reproduce.

use std::fmt;
use std::str::FromStr;

use crate::error::AlgebraError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyLabel {
    /// Ruled maps of bidegree `(3, d)`.
    Ruled(u32),
    E2,
    E3,
    E3_5,
    E4,
    E6,
    E7,
    E7_5,
    E8,
    E9,
    E10,
    E12,
    E13,
    E14,
    E19,
    E23,
    E24,
}

impl FamilyLabel {
    /// Every label with a constructor.
    pub fn constructible() -> Vec<FamilyLabel> {
        use FamilyLabel::*;
        vec![Ruled(2), Ruled(3), Ruled(4), Ruled(5), E2, E3, E3_5, E4, E6, E7, E7_5, E8, E9, E12, E13, E14, E19, E23, E24]
    }

    pub fn is_ruled(&self) -> bool {
        matches!(self, FamilyLabel::Ruled(_))
    }

    /// Label of the irreducible component containing the family.
    pub fn component(&self) -> FamilyLabel {
        use FamilyLabel::*;
        match self {
            Ruled(d) => Ruled(*d),
            E2 | E3 | E3_5 | E4 => E2,
            E6 | E7 | E7_5 | E8 | E9 | E10 => E6,
            E12 | E14 | E19 => E12,
            E13 => E13,
            E23 | E24 => E23,
        }
    }
}

impl fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilyLabel::*;
        match self {
            Ruled(d) => write!(f, "ruled_3_{d}"),
            E3_5 => write!(f, "E3.5"),
            E7_5 => write!(f, "E7.5"),
            other => write!(f, "{other:?}"),
        }
    }
}

impl FromStr for FamilyLabel {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        use FamilyLabel::*;
        let norm = s.trim().to_ascii_lowercase().replace('_', ".");
        if let Some(d) = norm.strip_prefix("ruled.3.").or_else(|| norm.strip_prefix("ruled")) {
            let d: u32 = d.trim_start_matches('.').parse().map_err(|_| AlgebraError::Invalid(format!("bad label {s}")))?;
            if !(2..=5).contains(&d) {
                return Err(AlgebraError::Invalid(format!("ruled maps exist for d in 2..=5, got {d}")));
            }
            return Ok(Ruled(d));
        }
        Ok(match norm.as_str() {
            "e2" | "determinantal" => E2,
            "e3" => E3,
            "e3.5" => E3_5,
            "e4" => E4,
            "e6" => E6,
            "e7" => E7,
            "e7.5" => E7_5,
            "e8" => E8,
            "e9" => E9,
            "e10" => E10,
            "e12" => E12,
            "e13" => E13,
            "e14" => E14,
            "e19" => E19,
            "e23" => E23,
            "e24" => E24,
            _ => return Err(AlgebraError::Invalid(format!("unknown family {s}"))),
        })
    }
}

/// Counts of special points in table order: double points of contact,
/// binodes, double points, points of osculation, points of contact, ordinary points.
pub type HudsonCounts = [u32; 6];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowExpectation {
    Row(u32),
    /// The family is absent from the table; the note says why.
    Missing(&'static str),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expectation {
    pub bidegree: (u32, u32),
    /// Degree and arithmetic genus of `C2`; not pinned for ruled maps.
    pub c2: Option<(i64, i64)>,
    pub counts: HudsonCounts,
    pub row: RowExpectation,
}

/// A constructed family member together with what its analysis must show.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub label: FamilyLabel,
    pub seed: u64,
    pub expected: Expectation,
}

pub const MISSING_E3_5: &str = "binode family of bidegree (3,3) absent from Hudson's table";
pub const MISSING_E7_5: &str = "binode family of bidegree (3,4) missing from Hudson's table, though it belongs there";

pub fn expectation(label: FamilyLabel) -> Expectation {
    use FamilyLabel::*;
    use RowExpectation::*;
    let e = |d: u32, c2: Option<(i64, i64)>, counts: HudsonCounts, row: RowExpectation| Expectation {
        bidegree: (3, d),
        c2,
        counts,
        row,
    };
    match label {
        Ruled(d) => {
            let row = match d {
                2 => 1,
                3 => 5,
                4 => 11,
                _ => 27,
            };
            e(d, None, [0, 0, 0, 0, 0, 2 * d - 4], Row(row))
        }
        E2 => e(3, Some((6, 3)), [0, 0, 0, 0, 0, 0], Row(2)),
        E3 => e(3, Some((6, 4)), [0, 0, 1, 0, 0, 0], Row(3)),
        E3_5 => e(3, Some((6, 4)), [0, 1, 0, 0, 0, 0], Missing(MISSING_E3_5)),
        E4 => e(3, Some((6, 4)), [1, 0, 0, 0, 0, 0], Row(4)),
        E6 => e(4, Some((5, 1)), [0, 0, 0, 0, 0, 1], Row(6)),
        E7 => e(4, Some((5, 2)), [0, 0, 1, 0, 0, 1], Row(7)),
        E7_5 => e(4, Some((5, 2)), [0, 1, 0, 0, 0, 1], Missing(MISSING_E7_5)),
        E8 => e(4, Some((5, 2)), [0, 1, 0, 0, 0, 1], Row(8)),
        E9 => e(4, Some((5, 2)), [1, 0, 0, 0, 0, 1], Row(9)),
        E10 => e(4, Some((5, 2)), [1, 1, 0, 0, 0, 1], Row(10)),
        E12 => e(5, Some((4, -1)), [0, 0, 0, 0, 0, 2], Row(12)),
        E13 => e(5, Some((4, 1)), [0, 0, 1, 0, 0, 2], Row(13)),
        E14 => e(5, Some((4, 0)), [0, 0, 1, 0, 0, 2], Row(14)),
        E19 => e(5, Some((4, 1)), [0, 0, 2, 0, 0, 2], Row(19)),
        E23 => e(5, Some((4, 0)), [0, 0, 0, 0, 1, 0], Row(23)),
        E24 => e(5, Some((4, 1)), [0, 0, 1, 0, 1, 0], Row(24)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_round_trip() {
        for l in FamilyLabel::constructible().into_iter().chain([FamilyLabel::E10]) {
            assert_eq!(l.to_string().parse::<FamilyLabel>().unwrap(), l);
        }
        assert_eq!("ruled3".parse::<FamilyLabel>().unwrap(), FamilyLabel::Ruled(3));
        assert!("ruled_3_6".parse::<FamilyLabel>().is_err());
        assert!("E5".parse::<FamilyLabel>().is_err());
    }

    #[test]
    fn expectations_follow_the_degree_identity() {
        for l in FamilyLabel::constructible() {
            let e = expectation(l);
            if let Some((deg2, _)) = e.c2 {
                assert_eq!(e.bidegree.1 as i64 + deg2, 9, "{l}");
            }
        }
    }
}
