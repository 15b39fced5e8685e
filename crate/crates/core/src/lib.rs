//! Exact enumeration of restricted words.
//!
//! Starting from an initial arithmetic function `f_0`, the `m`-th invert
//! transform `f_m` and the weighted-composition triangle `c_m(n, k)` count
//! words of length `n - 1` in five restricted-word families. This crate
//! computes both objects by several independent routes:
//!
//! * linear recurrences per family ([`cases::fm_sequence`]),
//! * invert transforms and composition triangles ([`sequence`]),
//! * closed-form sums ([`cases::c1_explicit`] and friends),
//! * direct word counting, exhaustive or by automaton ([`words`]),
//!
//! and cross-checks them ([`verify`], [`identities`]).
//!
//! The sequence machinery is generic over a [`Scalar`] ring; the aliases
//! below fix it to arbitrary-precision integers, which is what every other
//! module uses.

pub mod binomial;
pub mod cases;
pub mod error;
pub mod identities;
pub mod quadratic;
pub mod scalar;
pub mod sequence;
pub mod verify;
pub mod words;

pub use cases::CaseSpec;
pub use error::{Error, Result};
pub use quadratic::QuadraticNumber;
pub use scalar::Scalar;
pub use sequence::{Sequence, Triangle};

pub use num_bigint::BigInt;

pub type BigSequence = Sequence<BigInt>;
pub type BigTriangle = Triangle<BigInt>;
pub type Quadratic = QuadraticNumber<BigInt>;
pub type I64Sequence = Sequence<i64>;
pub type I64Triangle = Triangle<i64>;
