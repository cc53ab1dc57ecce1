//! Binary subfield codes of linear codes over the ring `R2 = F2[x]/<x^3 - x>`
//! whose defining sets are built from simplicial complexes.
//!
//! The crate is organised bottom-up:
//!
//! - [`algebra`]: arithmetic in `R2`, the trace functional, and F2 linear algebra.
//! - [`simplicial`]: complexes `Δ_L`, their complements, character sums.
//! - [`codegen`]: defining sets, subfield images, generator matrices and
//!   exhaustive weight enumeration.
//! - [`analysis`]: closed-form parameter and weight-table predictions, the
//!   Griesmer bound, minimality and self-orthogonality tests.
//! - [`cli`]: configuration parsing, reports, sweeps and document emission used
//!   by the `r2subfield` binary.

pub mod algebra;
pub mod analysis;
pub mod cli;
pub mod codegen;
mod error;
pub mod simplicial;

pub use error::{Error, Result};
