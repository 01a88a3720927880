//! Exact computation with finite 2-groups.
//!
//! Everything in this crate works on explicit finite tables: groups are
//! Cayley tables, coefficient groups are invariant-factor tuples, groupoids
//! carry full composition and tensor tables, and every law is checked by
//! exhaustive evaluation.  The building blocks:
//!
//! - [`finite_algebra`]: groups, abelian groups, actions, homomorphism
//!   enumeration, Smith normal form.
//! - [`cohomology`]: normalized cochains, the bar differential, and exact
//!   `H^n` computation.
//! - [`twogroups`]: crossed modules, strict 2-groups, and skeletal
//!   classifying quadruples.
//! - [`monoidal_groupoid`]: weak monoidal groupoids as explicit tables,
//!   coherence-law checking, and inverse-choice improvement.
//! - [`classification`]: homomorphisms as cochain triples, their 2-cells,
//!   equivalence of quadruples, and strictification.
//! - [`json`]: kind-tagged JSON encodings of every table kind.

pub mod classification;
pub mod cohomology;
pub mod finite_algebra;
pub mod json;
pub mod monoidal_groupoid;
pub mod twogroups;

pub use classification::{SpecialHom, TwoHom};
pub use cohomology::{CohomologyGroup, GModule, NormalizedCochain};
pub use finite_algebra::{
    AdditiveMap, FinAbGroup, FiniteGroup, GAction, GroupHom, IntMatrixSNF,
};
pub use monoidal_groupoid::{InverseChoice, MonoidalGroupoid};
pub use twogroups::{CrossedModule, Quadruple, StrictTwoGroup};
