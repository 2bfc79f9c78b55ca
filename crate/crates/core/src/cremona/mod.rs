//! Cubic (and general) rational self-maps of P3 and their analysis.

pub mod analysis;
pub mod map;
pub mod modular;

pub use analysis::{
    analyze, base_ideal, base_locus, base_locus_with, birationality_certificate, fiber_degree, genus_of_map, inverse,
    is_birational, is_ruled, line_preimage_split, random_conjugate, singular_locus, AnalysisOptions, BaseLocus,
    BirationalVerdict, Certificate, CurveRecord, LineSplit, MapAnalysis, RuledVerdict, Verdict,
};
pub use map::RationalMap;
pub use modular::{analyze_rational, ModularAnalysis, PrimeRun, Signature};
