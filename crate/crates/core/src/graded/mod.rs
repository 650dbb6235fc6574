//! Multigraded polynomial rings and degreewise realization of monomial
//! module expressions.

mod module;
mod ring;

pub use module::{BasisLabel, GradedModule, GradedPiece, ModuleExpr};
pub use ring::{Monomial, RingSpec, ValidationReport, Variable, Violation, ViolationKind};
