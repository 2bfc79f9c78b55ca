//! Local invariants at special points, Hudson's table of cubic space
//! transformations, and the component classification.

mod component;
mod point;
mod table;
mod vector;

pub use component::{classify_component, classify_with};
pub use point::{classify_point, quadric_rank, split_quadric, PointTag, PointType};
pub use table::{
    check_table, match_rows, match_table, missing_family_note, parse_table, row, table, table_source, ListedCurve, TableMatch,
    TableRow,
};
pub use vector::{
    candidate_points, hudson_vector, split_components, tangent_profile, union_multiplicity, Candidates, FCurve,
    HudsonVector, TangentProfile,
};
