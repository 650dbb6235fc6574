//! Exact computations with multigraded modules over polynomial rings graded
//! by a pointed monoid: windowed Laurent series, Hilbert series and K-series,
//! Koszul homology, graded Betti numbers, and the Grothendieck ring.
//!
//! Every computation is exact and happens on a finite [`Window`]: a region
//! `(-∞, U]` of the grading group on which each graded piece is a
//! finite-dimensional vector space.

pub mod cli;
pub mod error;
pub mod graded;
pub mod grading;
pub mod grothendieck;
pub mod koszul;
pub mod linalg;
pub mod scalar;
pub mod series;
mod text;

use num_bigint::BigInt;

pub use error::{Error, ErrorKind, Result};
pub use graded::{GradedModule, GradedPiece, ModuleExpr, Monomial, RingSpec, ValidationReport};
pub use grading::{decompositions, descriptor_sum, enumerate_downset_q, leq_q, Degree, SupportDescriptor, Window};
pub use grothendieck::KClass;
pub use koszul::{BettiTable, KoszulComplex, TorsionDimension};
pub use scalar::{Characteristic, Coefficient, Field};
pub use series::{LaurentSeries, QSeries};

/// Integer coefficient type used throughout module-level computations.
pub type Int = BigInt;
/// Windowed series with arbitrary-precision integer coefficients.
pub type Series = LaurentSeries<Int>;
/// Lazy `Q`-supported series with arbitrary-precision integer coefficients.
pub type LazySeries = QSeries<Int>;
/// Exact rationals, the characteristic-0 coefficient field.
pub type Rational = num_rational::BigRational;
