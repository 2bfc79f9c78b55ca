//! The AnalysisReport JSON produced by `analyze`.
//!
//! Everything in a report is a function of the document, the seed and the
//! primes, so repeated runs give byte-identical output. Wall-clock timing is
//! only included on request.

use cremona_core::cremona::{analyze, analyze_rational, AnalysisOptions, MapAnalysis, RationalMap, Verdict};
use cremona_core::hudson::{classify_with, hudson_vector, match_table, HudsonVector};
use cremona_core::polycore::print_poly;
use cremona_core::{Field, PrimeField};
use serde::{Deserialize, Serialize};

use crate::document::{AnyMap, Counts};
use crate::error::{code, CliError, CliResult};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RejectedPrime {
    pub prime: u64,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseReport {
    pub dimension: i32,
    /// Length of the one-dimensional part of the base scheme.
    pub deg1part: i64,
    /// Isolated base points over the algebraic closure.
    pub isolated_points: usize,
    /// The isolated base points with coordinates in the field.
    pub isolated_rational: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularPoint {
    pub point: Vec<String>,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveReport {
    pub degree: i64,
    pub p_a: i64,
    pub singular_points: Vec<SingularPoint>,
    /// Number of singular points over the algebraic closure, when known.
    pub singular_distinct: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BirationalReport {
    /// `yes`, `no` or `inconclusive`.
    pub verdict: String,
    pub trials: u32,
    pub fiber_degrees: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub value: i64,
    pub total: i64,
    pub pointwise: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointReport {
    pub point: Vec<String>,
    #[serde(rename = "type")]
    pub kind: String,
    pub rank: Option<usize>,
    pub fixed_plane: Option<String>,
    pub base_point: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileReport {
    pub point: Vec<String>,
    pub c1_multiplicity: usize,
    pub c2_multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FCurveReport {
    pub degree: i64,
    pub p_a: i64,
    pub multiplicity: i64,
    pub line: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HudsonReport {
    pub counts: Counts,
    /// Some candidate points were not defined over the field.
    pub partial: bool,
    pub points: Vec<PointReport>,
    pub profiles: Vec<ProfileReport>,
    pub fcurves: Vec<FCurveReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub rows: Vec<u32>,
    /// Why the family is absent from the table, if it is.
    pub missing: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    /// Field of the input document.
    pub input_field: String,
    pub input_label: Option<String>,
    pub seed: u64,
    /// Field the reported points live in.
    pub analysis_field: String,
    /// Primes whose analyses agree (one for a GF(p) document).
    pub primes: Vec<u64>,
    pub rejected_primes: Vec<RejectedPrime>,
    pub bidegree: (u32, u32),
    pub base: BaseReport,
    pub c1: CurveReport,
    pub c2: CurveReport,
    /// Points of `C1 ∩ C2` over the field, and their number over the closure.
    pub contact_points: Vec<Vec<String>>,
    pub contact_distinct: usize,
    pub genus: u8,
    pub ruled: bool,
    pub ruled_line: Option<Vec<String>>,
    pub birational: BirationalReport,
    pub certificate: CertificateReport,
    pub hudson: Option<HudsonReport>,
    pub hudson_error: Option<String>,
    pub family: Option<String>,
    pub family_error: Option<String>,
    pub table: Option<TableReport>,
    /// The fiber test and the certificate agree, and a birational non-ruled
    /// map satisfies `d + deg C2 = 9`.
    pub consistent: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

fn point<F: Field>(field: &F, p: &[F::Elem]) -> Vec<String> {
    p.iter().map(|a| field.format(a)).collect()
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Yes => "yes",
        Verdict::No => "no",
        Verdict::Inconclusive => "inconclusive",
    }
}

fn curve<F: Field>(field: &F, c: &cremona_core::cremona::CurveRecord<F>) -> CurveReport {
    CurveReport {
        degree: c.degree,
        p_a: c.p_a,
        singular_points: c
            .sing
            .iter()
            .map(|(p, m)| SingularPoint { point: point(field, p), multiplicity: *m })
            .collect(),
        singular_distinct: c.sing_distinct,
    }
}

fn hudson_report<F: Field>(field: &F, v: &HudsonVector<F>) -> HudsonReport {
    HudsonReport {
        counts: v.counts.into(),
        partial: v.partial,
        points: v
            .points
            .iter()
            .map(|(p, t)| PointReport {
                point: point(field, p),
                kind: t.tag.name().to_string(),
                rank: t.rank,
                fixed_plane: t.fixed_plane.as_ref().map(print_poly),
                base_point: t.base_point,
            })
            .collect(),
        profiles: v
            .profiles
            .iter()
            .map(|t| ProfileReport { point: point(field, &t.point), c1_multiplicity: t.c1_mult, c2_multiplicity: t.c2_mult })
            .collect(),
        fcurves: v
            .fcurves
            .iter()
            .map(|c| FCurveReport { degree: c.degree, p_a: c.p_a, multiplicity: c.multiplicity, line: c.line })
            .collect(),
    }
}

/// Whether the fiber test and the certificate tell the same story.
pub fn consistent<F: Field>(a: &MapAnalysis<F>) -> bool {
    let yes = a.birational.verdict == Verdict::Yes;
    let agree = match a.birational.verdict {
        Verdict::Yes => a.certificate.value == 1,
        Verdict::No => a.certificate.value != 1,
        Verdict::Inconclusive => true,
    };
    agree && (!yes || a.ruled.ruled || a.bidegree.1 as i64 + a.split.c2.degree == 9)
}

/// Report for an analysed map over a prime field or the rationals.
pub fn build_report<F: Field>(map: &RationalMap<F>, a: &MapAnalysis<F>, seed: u64) -> AnalysisReport {
    let field = map.field();
    let birational = a.birational.verdict == Verdict::Yes;
    let (mut hudson, mut hudson_error, mut family, mut family_error, mut table) = (None, None, None, None, None);
    if birational {
        let v = if a.ruled.ruled { None } else { Some(hudson_vector(map, a, seed)) };
        match &v {
            Some(Ok(v)) => {
                hudson = Some(hudson_report(field, v));
                let m = match_table(v);
                table = Some(TableReport {
                    rows: m.rows.iter().map(|r| r.number).collect(),
                    missing: m.missing.map(str::to_string),
                });
            }
            Some(Err(e)) => hudson_error = Some(e.to_string()),
            None => {}
        }
        match classify_with(a, v.as_ref().and_then(|r| r.as_ref().ok())) {
            Ok(l) => {
                if l.is_ruled() {
                    // ruled maps sit in the table by bidegree alone
                    let want = cremona_core::families::expectation(l);
                    if let cremona_core::families::RowExpectation::Row(n) = want.row {
                        table = Some(TableReport { rows: vec![n], missing: None });
                    }
                }
                family = Some(l.to_string());
            }
            Err(e) => family_error = Some(e.to_string()),
        }
    } else {
        family_error = Some("map is not birational".into());
    }
    AnalysisReport {
        schema_version: REPORT_SCHEMA_VERSION,
        input_field: field.descriptor(),
        input_label: map.label.clone(),
        seed,
        analysis_field: field.descriptor(),
        primes: match field.characteristic() {
            0 => Vec::new(),
            p => vec![p],
        },
        rejected_primes: Vec::new(),
        bidegree: a.bidegree,
        base: BaseReport {
            dimension: a.base.dimension,
            deg1part: a.base.deg1part,
            isolated_points: a.base.theta.distinct,
            isolated_rational: a.base.theta.rational.iter().map(|p| point(field, p)).collect(),
        },
        c1: curve(field, &a.split.c1),
        c2: curve(field, &a.split.c2),
        contact_points: a.contact.rational.iter().map(|p| point(field, p)).collect(),
        contact_distinct: a.contact.distinct,
        genus: a.genus,
        ruled: a.ruled.ruled,
        ruled_line: a.ruled.line.as_ref().map(|l| l.gens().iter().map(print_poly).collect()),
        birational: BirationalReport {
            verdict: verdict_name(a.birational.verdict).into(),
            trials: a.birational.trials,
            fiber_degrees: a.birational.fiber_degrees.clone(),
        },
        certificate: CertificateReport { value: a.certificate.value, total: a.certificate.total, pointwise: a.certificate.pointwise },
        hudson,
        hudson_error,
        family,
        family_error,
        table,
        consistent: consistent(a),
        timing_ms: None,
    }
}

/// Analyse a parsed map. Rational maps go through two agreeing primes, the
/// `forced` ones first; for a GF(p) map `forced` must be empty or `[p]`.
pub fn analyze_map(map: &AnyMap, seed: u64, opts: &AnalysisOptions, forced: &[u64]) -> CliResult<AnalysisReport> {
    match map {
        AnyMap::Prime(m) => {
            let p = m.field().modulus();
            if forced.iter().any(|&q| q != p) {
                return Err(CliError::usage(format!("document is over gf:{p}; --prime must match it")));
            }
            let a = analyze(m, seed, opts).map_err(|e| CliError::algebra(code::FAILURE, "analysis failed", e))?;
            Ok(build_report(m, &a, seed))
        }
        AnyMap::Rational(m) => {
            let modular = analyze_rational(m, seed, opts, forced)
                .map_err(|e| CliError::algebra(code::FAILURE, "analysis failed", e))?;
            let run = modular.primary();
            let mut r = build_report::<PrimeField>(&run.map, &run.analysis, seed);
            r.input_field = "q".into();
            r.primes = modular.primes();
            r.rejected_primes =
                modular.rejected.iter().map(|(p, why)| RejectedPrime { prime: *p, reason: why.clone() }).collect();
            Ok(r)
        }
    }
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    /// Exit code: 0 birational and consistent, 3 not birational, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self.birational.verdict.as_str() {
            "no" => code::NOT_BIRATIONAL,
            "yes" if self.consistent => code::OK,
            _ => code::FAILURE,
        }
    }
}
