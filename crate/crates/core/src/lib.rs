//! Exact-arithmetic analysis of integer linear recurrence sequences.
//!
//! The crate computes, from first principles, the effective upper bound on
//! the number of indices n with |u_n| < |alpha_1|^(n(1-eps)) for a
//! non-degenerate integer linear recurrence, and enumerates all such indices
//! up to a user bound with certified comparisons. Everything on the decision
//! path is either exact (big integers, rationals, number-field elements) or
//! a directed-rounding enclosure.

pub mod dyadic;
pub mod factor;
pub mod error;
pub mod intfactor;
pub mod interval;
pub mod modp;
pub mod numfield;
pub mod poly;
pub mod recurrence;
pub mod roots;
pub mod splitting;

pub use error::{Error, Result};
