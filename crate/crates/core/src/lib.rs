//! Certified exact arithmetic for experiments on the distribution of
//! `alpha * zeta^n` modulo 1.
//!
//! Everything here is exact: rationals are arbitrary-precision fractions,
//! real algebraic numbers are integer polynomials plus isolating intervals,
//! and every comparison that feeds a report is decided either symbolically
//! or by a two-sided dyadic enclosure that is refined until it decides.
//! No floating point enters any certificate.
//!
//! Module map:
//! * [`exact`] — rationals, dyadic intervals, algebraic reals, arithmetic in Q(zeta).
//! * [`polyalg`] — integer-polynomial invariants, exact root counting in the unit
//!   disk, Pisot/Salem classification, the `P_{m,b}`/`Q_{m,b}` families.
//! * [`bounds`] — the closed-form threshold calculators (lacunary products,
//!   epsilon brackets, gap thresholds, comparison lines).
//! * [`construct`] — nested-interval builders for zeta (fixed alpha) and alpha
//!   (fixed zeta), countability certificates, the base-p digit construction.
//! * [`tree`] — the recursion tree over nearest-integer orbits, path enumeration,
//!   avoided intervals, recurrence detection.
//! * [`verify`] — brute-force oracles: membership scans, run lengths, gap
//!   statistics, multiplicity utilities.

pub mod bounds;
pub mod construct;
mod error;
pub mod exact;
pub mod polyalg;
pub mod tree;
pub mod verify;

pub use error::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
