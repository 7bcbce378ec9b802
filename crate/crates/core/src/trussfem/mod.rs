//! Planar pin-jointed trusses solved by the direct stiffness method.

mod analysis;
mod cases;
mod model;
mod ring;

pub use analysis::{
    assemble, element_geometry, element_stiffness, free_dofs, reduced_stiffness, solve, AxialForce,
    Direction, ElementGeometry, NodeDisplacement, Reaction, SolveResult,
};
pub use cases::{
    builtin_case, compare, compare_results, percent_change, portal_frame, CaseSummary,
    ComparisonReport, ForceRow, BAR_AREA, STEEL_E,
};
pub use model::{
    Bar, ElementRecord, Fixity, MaterialDefaults, ModelFile, NodalLoad, Node, Support, TrussModel,
    MIN_LENGTH,
};
pub use ring::{generate_ring, Ring, MERGE_TOL};
