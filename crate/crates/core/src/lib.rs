//! Octahedral coordinates of knot and tangle diagrams.
//!
//! Given a planar diagram `D` and a representation of the complement's
//! fundamental group into SL(2,C) (specified on Wirtinger generators), this
//! crate computes the octahedral coloring of `D` induced by the
//! representation, verifies that its holonomy reproduces the representation,
//! detects pinched crossings, performs gauge fixing, and solves the
//! critical-point equations of the diagram's dilogarithm potential function
//! to recover geometric data such as the hyperbolic volume.
//!
//! The pipeline is organized as:
//!
//! * [`diagram`]: combinatorial tangle/knot diagrams, faces, arcs,
//!   Wirtinger presentations, over-paths.
//! * [`mat2`]: complex 2x2 linear algebra with SL(2,C) contracts.
//! * [`coloring`]: representation-side data (decorations, shadows).
//! * [`octahedral`]: geometry-side data (octahedral colorings, holonomy).
//! * [`gauge`]: gauge transformations and randomized admissibility search.
//! * [`geometry`]: shape parameters, dilogarithms, the potential function,
//!   critical points, hyperbolic volume.
//! * [`corpus`]: deterministic diagram/representation generators used by the
//!   verification suites.

pub mod numeric;
pub mod error;
pub mod mat2;
pub mod diagram;
pub mod coloring;
pub mod octahedral;
pub mod gauge;
pub mod geometry;
pub mod corpus;

pub use error::Error;
pub use numeric::NumericContext;

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;
