//! Exact arithmetic for finite groups, finite abelian groups, actions,
//! homomorphism enumeration, and integer matrix normal forms.

mod abelian;
mod action;
mod aut;
mod group;
mod hom;
mod snf;

pub use abelian::{enumerate_additive_maps, AbelianError, AdditiveMap, FinAbGroup};
pub use action::{validate_action, validate_action_abelian, ActionError, GAction};
pub use aut::{automorphism_group, AutError, DEFAULT_MAX_ORDER};
pub use group::{cyclic_group, direct_product, validate_group, FiniteGroup, GroupError};
pub use hom::{enumerate_homs, validate_hom, GroupHom, HomError};
pub use snf::{determinant, smith_normal_form, IntMatrixSNF, Mat};

pub(crate) use snf::{kernel_basis, mat_vec, solve, solve_with, zeros};
