//! Crossed modules, strict 2-groups, and skeletal classifying quadruples,
//! with exact conversions between the presentations.

mod crossed;
mod quadruple;
mod strict;

pub use crossed::{
    aut2group, central_extension_crossed, crossed_isomorphic, trivial_t_crossed,
    validate_crossed_module, CrossedModule, CrossedModuleError,
};
pub use quadruple::{skeletal_strict_to_quadruple, Quadruple, QuadrupleError};
pub use strict::{
    crossed_to_strict, strict_to_crossed, validate_strict_two_group, StrictError, StrictTwoGroup,
};
