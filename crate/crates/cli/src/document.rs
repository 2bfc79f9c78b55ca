//! The MapDocument JSON format: a cubic map with exact coefficients.
//!
//! ```json
//! {
//!   "schema_version": 1,
//!   "field": "gf:1000003",
//!   "variables": ["z0", "z1", "z2", "z3"],
//!   "components": [[["1", [1, 2, 0, 0]]], ...],
//!   "provenance": { "family": "E23", "seed": 1 },
//!   "expected": { ... }
//! }
//! ```
//!
//! Each component is a list of `[coefficient, exponents]` terms. Coefficients
//! are decimal strings, `a/b` over the rationals; over GF(p) they are written
//! as symmetric residues. A document written here parses and prints back to
//! the same bytes.

use std::str::FromStr;

use cremona_core::cremona::RationalMap;
use cremona_core::families::{Expectation, RowExpectation};
use cremona_core::polycore::poly::Term;
use cremona_core::{Field, Monomial, Poly, PrimeField, Rationals};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

pub const SCHEMA_VERSION: u32 = 1;
pub const VARIABLES: [&str; 4] = ["z0", "z1", "z2", "z3"];

/// One term: coefficient text and the four exponents.
pub type TermDoc = (String, [u32; 4]);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDocument {
    pub schema_version: u32,
    /// `"q"` or `"gf:<p>"`.
    pub field: String,
    pub variables: Vec<String>,
    pub components: Vec<Vec<TermDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<ExpectedDoc>,
}

/// Where a constructed map came from.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Provenance {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Deformation path and parameter value.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parameter: Option<i64>,
    /// Name of a fixed example.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub example: Option<String>,
}

/// Named special-point counts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Counts {
    pub double_contact: u32,
    pub binode: u32,
    pub double_point: u32,
    pub osculation: u32,
    pub contact: u32,
    pub ordinary: u32,
}

impl From<[u32; 6]> for Counts {
    fn from(c: [u32; 6]) -> Self {
        Counts { double_contact: c[0], binode: c[1], double_point: c[2], osculation: c[3], contact: c[4], ordinary: c[5] }
    }
}

/// What the analysis of a constructed family member must show.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedDoc {
    pub bidegree: (u32, u32),
    /// Degree and arithmetic genus of `C2`, when pinned.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c2: Option<(i64, i64)>,
    pub counts: Counts,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table_row: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub missing_row: Option<String>,
}

impl From<&Expectation> for ExpectedDoc {
    fn from(e: &Expectation) -> Self {
        let (table_row, missing_row) = match &e.row {
            RowExpectation::Row(n) => (Some(*n), None),
            RowExpectation::Missing(note) => (None, Some(note.to_string())),
        };
        ExpectedDoc { bidegree: e.bidegree, c2: e.c2, counts: e.counts.into(), table_row, missing_row }
    }
}

/// A parsed map over either supported field.
#[derive(Clone, Debug)]
pub enum AnyMap {
    Rational(RationalMap<Rationals>),
    Prime(RationalMap<PrimeField>),
}

/// Field named by a descriptor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rational,
    Prime(PrimeField),
}

impl FromStr for FieldSpec {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rational);
        }
        let p = s
            .strip_prefix("gf:")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| CliError::parse(format!("field must be \"q\" or \"gf:<prime>\", got \"{s}\"")))?;
        PrimeField::new(p).map(FieldSpec::Prime).map_err(|e| CliError::parse(format!("field {s}: {e}")))
    }
}

fn components_to_doc<F: Field>(map: &RationalMap<F>) -> Vec<Vec<TermDoc>> {
    let field = map.field();
    map.components()
        .iter()
        .map(|c| {
            c.terms()
                .iter()
                .map(|(m, a)| {
                    let e = m.exps(4);
                    (field.format(a), [e[0], e[1], e[2], e[3]])
                })
                .collect()
        })
        .collect()
}

impl MapDocument {
    pub fn from_map<F: Field>(map: &RationalMap<F>) -> MapDocument {
        let provenance = (map.label.is_some() || map.seed.is_some())
            .then(|| Provenance { family: map.label.clone(), seed: map.seed, ..Provenance::default() });
        MapDocument {
            schema_version: SCHEMA_VERSION,
            field: map.field().descriptor(),
            variables: VARIABLES.iter().map(|v| v.to_string()).collect(),
            components: components_to_doc(map),
            provenance,
            expected: None,
        }
    }

    pub fn from_any(map: &AnyMap) -> MapDocument {
        match map {
            AnyMap::Rational(m) => Self::from_map(m),
            AnyMap::Prime(m) => Self::from_map(m),
        }
    }

    /// Parse JSON text; errors carry the line and column.
    pub fn parse(text: &str) -> CliResult<MapDocument> {
        let doc: MapDocument = serde_json::from_str(text).map_err(|e| {
            CliError::parse(format!("parse error: {e}"))
        })?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(CliError::parse(format!(
                "unsupported schema_version {} (expected {SCHEMA_VERSION})",
                doc.schema_version
            )));
        }
        if doc.variables.len() != 4 {
            return Err(CliError::parse(format!("expected 4 variables, got {}", doc.variables.len())));
        }
        if doc.components.len() != 4 {
            return Err(CliError::parse(format!("expected 4 components, got {}", doc.components.len())));
        }
        Ok(doc)
    }

    /// Pretty JSON with one term per line.
    pub fn to_json(&self) -> String {
        let mut s = String::from("{\n");
        s += &format!("  \"schema_version\": {},\n", self.schema_version);
        s += &format!("  \"field\": {},\n", compact(&self.field));
        s += &format!("  \"variables\": {},\n", compact(&self.variables));
        s += "  \"components\": [\n";
        for (ci, comp) in self.components.iter().enumerate() {
            s += "    [\n";
            for (ti, term) in comp.iter().enumerate() {
                let sep = if ti + 1 < comp.len() { "," } else { "" };
                s += &format!("      {}{sep}\n", compact(term));
            }
            s += if ci + 1 < self.components.len() { "    ],\n" } else { "    ]\n" };
        }
        s += "  ]";
        if let Some(p) = &self.provenance {
            s += &format!(",\n  \"provenance\": {}", compact(p));
        }
        if let Some(e) = &self.expected {
            s += &format!(",\n  \"expected\": {}", compact(e));
        }
        s += "\n}\n";
        s
    }

    pub fn field_spec(&self) -> CliResult<FieldSpec> {
        self.field.parse()
    }

    fn polys<F: Field>(&self, field: &F) -> CliResult<Vec<Poly<F>>> {
        let mut out = Vec::with_capacity(4);
        for (ci, comp) in self.components.iter().enumerate() {
            let mut terms: Vec<Term<F>> = Vec::with_capacity(comp.len());
            for (ti, (coeff, exps)) in comp.iter().enumerate() {
                let at = || format!("components[{ci}][{ti}]");
                let r = BigRational::from_str(coeff.trim())
                    .map_err(|_| CliError::parse(format!("parse error at {}: bad coefficient \"{coeff}\"", at())))?;
                let a = field.from_rational(&r).ok_or_else(|| {
                    CliError::parse(format!("parse error at {}: coefficient {coeff} is undefined in {}", at(), self.field))
                })?;
                if exps.iter().any(|&e| e > u8::MAX as u32) {
                    return Err(CliError::parse(format!("parse error at {}: exponent too large", at())));
                }
                if terms.iter().any(|(m, _)| m.exps(4) == exps) {
                    return Err(CliError::parse(format!("parse error at {}: repeated monomial", at())));
                }
                terms.push((Monomial::from_exps(exps), a));
            }
            out.push(Poly::from_terms(field.clone(), 4, terms));
        }
        Ok(out)
    }

    fn build<F: Field>(&self, field: &F) -> CliResult<RationalMap<F>> {
        let mut map = RationalMap::new(self.polys(field)?)
            .map_err(|e| CliError::algebra(crate::error::code::PARSE, "checking the components", e))?;
        if let Some(p) = &self.provenance {
            map.label = p.family.clone().or_else(|| p.example.clone());
            map.seed = p.seed;
        }
        Ok(map)
    }

    /// The map the document describes.
    pub fn to_map(&self) -> CliResult<AnyMap> {
        Ok(match self.field_spec()? {
            FieldSpec::Rational => AnyMap::Rational(self.build(&Rationals)?),
            FieldSpec::Prime(f) => AnyMap::Prime(self.build(&f)?),
        })
    }
}

/// Compact JSON of one value.
fn compact<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("documents serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use cremona_core::polycore::parse_poly;

    fn involution_doc() -> MapDocument {
        let comps = ["z0*z1^2", "z0^2*z1", "-1/2*z0^2*z2", "z1^2*z3"];
        let map = RationalMap::new(comps.iter().map(|s| parse_poly(&Rationals, 4, s).unwrap()).collect()).unwrap();
        MapDocument::from_map(&map)
    }

    #[test]
    fn round_trip_is_lossless() {
        let doc = involution_doc();
        let text = doc.to_json();
        let back = MapDocument::parse(&text).unwrap();
        assert_eq!(back, doc);
        let again = MapDocument::from_any(&back.to_map().unwrap());
        assert_eq!(again.to_json(), text);
        assert_eq!(doc.components[2][0].0, "-1/2");
    }

    #[test]
    fn prime_field_coefficients_are_symmetric() {
        let f = PrimeField::new(1_000_003).unwrap();
        let comps = ["z0*z1^2", "z0^2*z1", "-3*z0^2*z2", "z1^2*z3"];
        let map = RationalMap::new(comps.iter().map(|s| parse_poly(&f, 4, s).unwrap()).collect()).unwrap();
        let doc = MapDocument::from_map(&map);
        assert_eq!(doc.field, "gf:1000003");
        assert_eq!(doc.components[2][0].0, "-3");
        let back = MapDocument::parse(&doc.to_json()).unwrap().to_map().unwrap();
        assert!(matches!(back, AnyMap::Prime(_)));
    }

    #[test]
    fn errors_name_the_position() {
        let e = MapDocument::parse("{\n  \"schema_version\": 1,\n  \"field\": }").unwrap_err();
        assert_eq!(e.code, crate::error::code::PARSE);
        assert!(e.message.contains("line 3"), "{}", e.message);

        let mut doc = involution_doc();
        doc.components[1][0].0 = "x".into();
        let e = MapDocument::parse(&doc.to_json()).unwrap().to_map().unwrap_err();
        assert!(e.message.contains("components[1][0]"), "{}", e.message);
    }

    #[test]
    fn bad_fields_are_rejected() {
        assert!("gf:7".parse::<FieldSpec>().is_err());
        assert!("gf:1000004".parse::<FieldSpec>().is_err());
        assert!("r".parse::<FieldSpec>().is_err());
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rational);
    }
}
