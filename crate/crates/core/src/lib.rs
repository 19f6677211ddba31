//! Numerical verification of SU(2)-symmetric rank-3 Pfaffian systems on
//! S³×Σ²: their bracket-generating structure, the associated Nurowski
//! conformal metrics and their Weyl-flat loci, and the SU(2) gauge
//! connections read off from the maximally symmetric distributions.
//!
//! All arithmetic is complex. Derivatives are exact to rounding: every field
//! is generic over [`scalar::Scalar`] and is differentiated by evaluating it
//! at nested dual numbers.

#![allow(clippy::needless_range_loop)]

pub mod battery;
pub mod curvature;
pub mod error;
pub mod forms;
pub mod gauge;
pub mod linalg;
pub mod manifold;
pub mod metric;
pub mod nurowski;
pub mod pfaffian;
pub mod profile;
pub mod scalar;

pub use error::{GeometryError, Result};
pub use manifold::Point5;
pub use scalar::{c64, C64};
