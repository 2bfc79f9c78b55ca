//! Constructors for the families of cubic Cremona transformations and the
//! explicit deformation paths between them.

mod build;
mod deform;
mod label;
mod special;

pub use build::{
    construct, cuboquartic, cuboquintic, dejonquieres, determinantal, ruled, ruled_degenerate, CuboquarticVariant,
    CuboquinticVariant, DejonquieresVariant,
};
pub use deform::{deform, deform_map, DeformationPath, PathEndpoint};
pub use label::{
    expectation, Expectation, FamilyLabel, FamilySpec, HudsonCounts, RowExpectation, MISSING_E3_5, MISSING_E7_5,
};
pub use special::{a1_cubics, a1_curve, a2_cubics, a2_curve, pro_inter, special_example, special_examples, SpecialExample};
