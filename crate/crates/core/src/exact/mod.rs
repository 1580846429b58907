//! Exact arbitrary-precision arithmetic: rationals, dyadic intervals,
//! algebraic reals with certified rounding, and arithmetic in Q(zeta).
//!
//! The floor/ceil/fractional-part/nearest-integer/distance operators follow
//! one convention everywhere: `{x} = x - floor(x)` lies in `[0,1)`, the
//! nearest integer resolves the `{x} = 1/2` tie to `floor(x)`, and
//! `||x|| = |x - <x>|` lies in `[0, 1/2]`.

pub mod algebraic;
pub mod dyadic;
pub mod field;
pub mod rational;
pub mod real;
pub mod wire;

pub use algebraic::AlgebraicReal;
pub use dyadic::{Dyadic, DyadicInterval};
pub use field::{field_pow_frac, FieldElem, NumberField};
pub use real::{ExactOrEnclosure, RealValue};
