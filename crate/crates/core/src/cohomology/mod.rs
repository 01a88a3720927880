//! Normalized group cohomology over finite modules: cochains, the bar
//! differential, cocycle/coboundary decision procedures, and full `H^n`
//! computation via integer lattices.

mod cochain;
mod groups;

pub use cochain::{
    all_cochains, differential, differential_at, is_cocycle, AllCochains, CochainError, GModule,
    NormalizedCochain,
};
pub use groups::{
    classes_equal, closed_cochain_reps, cohomology_group, count_closed_cochains, is_coboundary,
    CohomologyError, CohomologyGroup, DEFAULT_MAX_CELLS,
};
