//! Hudson's table of cubic space transformations and matching against it.

use std::sync::OnceLock;

use crate::families::{HudsonCounts, MISSING_E3_5, MISSING_E7_5};
use crate::polycore::Field;

use super::point::PointTag;
use super::vector::HudsonVector;

const TABLE_DATA: &str = include_str!("table_vi.tsv");

/// One printed row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub number: u32,
    pub bidegree: (u32, u32),
    pub counts: HudsonCounts,
    /// Printed F-curve cell.
    pub fcurves: String,
    /// Printed remarks cell.
    pub remarks: String,
}

/// One curve of an F-curve cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListedCurve {
    /// `omega_k` has degree `k`, `l^2` degree 2, a line degree 1.
    pub degree: i64,
    /// Multiplicity of the curve at `O_1`, from `O_1^k`; 0 when it avoids `O_1`.
    pub mult_at_first: u32,
}

impl TableRow {
    /// Curves listed in the F-curve cell; items that are not curves are skipped.
    pub fn listed_curves(&self) -> Vec<ListedCurve> {
        self.fcurves
            .split('$')
            .skip(1)
            .step_by(2)
            .filter_map(|chunk| {
                let (head, tail) = chunk.split_once("\\equiv").unwrap_or((chunk, ""));
                let degree = if let Some(k) = head.trim().strip_prefix("\\omega_") {
                    k.parse().ok()?
                } else {
                    match head.trim() {
                        "l^2" => 2,
                        "l" => 1,
                        h if h.starts_with("l_") && h[2..].parse::<u32>().is_ok() => 1,
                        _ => return None,
                    }
                };
                Some(ListedCurve { degree, mult_at_first: first_point_multiplicity(tail) })
            })
            .collect()
    }

    /// Sorted (descending) degrees of the listed curves.
    pub fn curve_degrees(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self.listed_curves().iter().map(|c| c.degree).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// The base curve includes a double line.
    pub fn has_double_line(&self) -> bool {
        self.listed_curves().iter().any(|c| c.degree == 2) && self.fcurves.contains("l^2")
    }
}

/// Exponent of `O_1` (or an unindexed `O`) in `\equiv O_1^2 O_2`-style text.
fn first_point_multiplicity(tail: &str) -> u32 {
    let t = tail.trim();
    let rest = if let Some(r) = t.strip_prefix("O_1") {
        r
    } else if let Some(r) = t.strip_prefix('O').filter(|r| !r.starts_with('_')) {
        r
    } else {
        return 0;
    };
    rest.strip_prefix('^').and_then(|r| r.chars().next()).and_then(|c| c.to_digit(10)).unwrap_or(1)
}

fn parse_count(cell: &str) -> Option<u32> {
    if cell == "·" {
        Some(0)
    } else {
        cell.parse().ok()
    }
}

/// The embedded table file.
pub fn table_source() -> &'static str {
    TABLE_DATA
}

/// Parse table text in the embedded format; the error names the bad line.
pub fn parse_table(text: &str) -> Result<Vec<TableRow>, String> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.starts_with('#') && !l.trim().is_empty())
        .map(|(k, line)| {
            let bad = |what: &str| format!("line {}: {what}", k + 1);
            let cells: Vec<&str> = line.split('\t').collect();
            if cells.len() != 10 {
                return Err(bad(&format!("expected 10 cells, found {}", cells.len())));
            }
            let (d, d_inv) = cells[1].split_once('-').ok_or_else(|| bad("degrees cell"))?;
            let mut counts = [0u32; 6];
            for (slot, cell) in counts.iter_mut().zip(&cells[2..8]) {
                *slot = parse_count(cell).ok_or_else(|| bad(&format!("count '{cell}'")))?;
            }
            Ok(TableRow {
                number: cells[0].parse().map_err(|_| bad("row number"))?,
                bidegree: (d.parse().map_err(|_| bad("degree"))?, d_inv.parse().map_err(|_| bad("degree"))?),
                counts,
                fcurves: cells[8].to_string(),
                remarks: cells[9].to_string(),
            })
        })
        .collect()
}

/// Structural checks on a parsed table: rows 1..=75 in order, cubic maps,
/// inverse degrees 2..=9 never decreasing.
pub fn check_table(rows: &[TableRow]) -> Result<(), String> {
    if rows.len() != 75 {
        return Err(format!("{} rows, expected 75", rows.len()));
    }
    let mut last = 2;
    for (i, r) in rows.iter().enumerate() {
        if r.number != i as u32 + 1 {
            return Err(format!("row {} found in position {}", r.number, i + 1));
        }
        if r.bidegree.0 != 3 || r.bidegree.1 < last || r.bidegree.1 > 9 {
            return Err(format!("row {} has bidegree {:?}", r.number, r.bidegree));
        }
        last = r.bidegree.1;
    }
    Ok(())
}

/// All 75 rows.
pub fn table() -> &'static [TableRow] {
    static TABLE: OnceLock<Vec<TableRow>> = OnceLock::new();
    TABLE.get_or_init(|| parse_table(TABLE_DATA).expect("embedded table parses"))
}

pub fn row(number: u32) -> Option<&'static TableRow> {
    table().iter().find(|r| r.number == number)
}

/// Rows compatible with a vector, and a note when none are expected to be.
#[derive(Clone, Debug)]
pub struct TableMatch {
    pub rows: Vec<&'static TableRow>,
    /// Set when the vector belongs to a family known to be missing from the table.
    pub missing: Option<&'static str>,
}

/// Rows with the same bidegree and counts whose F-curves agree with the
/// computed components of `C2`. Ruled maps match through the double line.
pub fn match_table<F: Field>(v: &HudsonVector<F>) -> TableMatch {
    let rows = match_rows(v, table());
    let missing = if rows.is_empty() { missing_family_note(v) } else { None };
    TableMatch { rows, missing }
}

/// [`match_table`] against any list of rows.
pub fn match_rows<'a, F: Field>(v: &HudsonVector<F>, rows: &'a [TableRow]) -> Vec<&'a TableRow> {
    let first_c2_mult = match v.profiles.as_slice() {
        [only] => Some(only.c2_mult as u32),
        _ => None,
    };
    let degrees = v.fcurve_degrees();
    rows.iter()
        .filter(|r| r.bidegree == v.bidegree && r.counts == v.counts)
        .filter(|r| {
            if v.ruled {
                return r.has_double_line();
            }
            if r.has_double_line() {
                return false;
            }
            let listed = r.listed_curves();
            if listed.is_empty() || degrees.is_empty() {
                return true;
            }
            if r.curve_degrees() != degrees {
                return false;
            }
            match (listed.as_slice(), first_c2_mult) {
                ([one], Some(m)) => one.mult_at_first == m,
                _ => true,
            }
        })
        .collect()
}

/// The two binode families the table leaves out.
pub fn missing_family_note<F: Field>(v: &HudsonVector<F>) -> Option<&'static str> {
    let binodes = v.counts[PointTag::Binode.slot()];
    let others: u32 = v.counts[..5].iter().sum::<u32>() - binodes;
    if binodes != 1 || others != 0 || v.ruled {
        return None;
    }
    match (v.bidegree, v.counts[PointTag::Ordinary.slot()]) {
        ((3, 3), 0) => Some(MISSING_E3_5),
        ((3, 4), 1) => Some(MISSING_E7_5),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_has_every_row_once() {
        let t = table();
        assert_eq!(t.len(), 75);
        for (i, r) in t.iter().enumerate() {
            assert_eq!(r.number, i as u32 + 1);
            assert_eq!(r.bidegree.0, 3);
        }
    }

    #[test]
    fn printed_cells_survive() {
        assert_eq!(row(2).unwrap().fcurves, "$\\omega_6$ (genus $3$)");
        assert_eq!(row(2).unwrap().counts, [0; 6]);
        assert_eq!(row(10).unwrap().remarks, "$(\\phi)$ touch plane along $l$");
        assert_eq!(row(11).unwrap().bidegree, (3, 4));
        assert_eq!(row(50).unwrap().counts, [0, 0, 3, 0, 1, 1]);
        assert_eq!(row(75).unwrap().bidegree, (3, 9));
        assert_eq!(row(75).unwrap().counts, [0, 0, 1, 1, 0, 2]);
    }

    #[test]
    fn reads_curve_lists() {
        assert_eq!(row(9).unwrap().curve_degrees(), vec![3, 1, 1]);
        assert_eq!(row(1).unwrap().curve_degrees(), vec![2, 1, 1, 1]);
        assert!(row(27).unwrap().has_double_line());
        assert!(!row(29).unwrap().has_double_line());
        assert_eq!(row(29).unwrap().curve_degrees(), vec![3]);
        let mults: Vec<u32> = [3, 4, 7, 8, 13, 23, 24]
            .iter()
            .map(|&n| row(n).unwrap().listed_curves()[0].mult_at_first)
            .collect();
        assert_eq!(mults, vec![2, 4, 2, 3, 1, 0, 2]);
        assert!(row(72).unwrap().listed_curves().is_empty());
    }

    #[test]
    fn corrupted_text_is_caught() {
        assert!(check_table(table()).is_ok());
        let broken = TABLE_DATA.replacen("\t3-3\t", "\t3-x\t", 1);
        assert!(parse_table(&broken).is_err());
        let dropped: String = TABLE_DATA.lines().filter(|l| !l.starts_with("40\t")).map(|l| format!("{l}\n")).collect();
        assert!(check_table(&parse_table(&dropped).unwrap()).is_err());
    }

    #[test]
    fn double_line_rows_are_the_ruled_ones() {
        let rows: Vec<u32> = table().iter().filter(|r| r.has_double_line()).map(|r| r.number).collect();
        assert_eq!(rows, vec![1, 5, 11, 27]);
    }
}
