//! Classification layer: homomorphisms of skeletal 2-groups as cochain
//! triples, their 2-cells, equivalence of quadruples, and strictification.

mod derive;
mod equivalence;
mod hom;
mod twohom;

pub use derive::{derive_f_minus1, special_hom_to_functor, strictify_if_coboundary, two_hom_to_nat_trans};
pub use equivalence::{count_equivalence_classes, equivalent};
pub use hom::{compose_homs, count_homs, enumerate_homs, twisted_module, ClassifyError, SpecialHom};
pub use twohom::{enumerate_2homs, vertical_compose_2homs, TwoHom};
