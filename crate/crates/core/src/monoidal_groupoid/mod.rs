//! Weak monoidal groupoids as explicit tables: exhaustive coherence-law
//! validation, the skeletal groupoid model of a quadruple and its inverse,
//! weak-inverse search and improvement, and monoidal functors between
//! models.

mod builder;
mod functor;
mod groupoid;
mod improve;

pub use builder::{
    groupoid_data_from_cochain, groupoid_from_quadruple, groupoid_to_quadruple, ChoiceEntry,
    InverseChoice, ToQuadrupleError,
};
pub use functor::{
    brute_force_monoidal_functors, brute_force_nat_trans, compose_functors,
    validate_monoidal_functor, validate_monoidal_nat_trans, FunctorError, MonoidalFunctor,
    MonoidalNatTrans,
};
pub use groupoid::{
    validate_monoidal_groupoid, GroupoidError, MonoidalGroupoid, MonoidalGroupoidData,
    DEFAULT_MAX_MORPHISMS,
};
pub use improve::{
    check_alt_iprime, check_zigzags, eckmann_hilton_check, find_weak_inverse, improve,
    is_weak_2group, ChoiceError,
};
