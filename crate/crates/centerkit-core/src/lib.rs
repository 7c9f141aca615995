//! Exact-arithmetic toolkit for plane polynomial foliations with a center.
//!
//! The crate models the topology and deformation theory attached to a first
//! integral `f = l_1^{n_1} ... l_{d+1}^{n_{d+1}}` built from a generic line
//! arrangement:
//!
//! - [`arrangement`]: arrangements, validation, intersections, bounded
//!   faces, numeric center critical points;
//! - [`local_model`]: monodromy combinatorics of the local fibration
//!   `x^m y^n`;
//! - [`fiber_graph`]: deformation-retract graphs of a regular fiber, cycle
//!   bases, and the exact winding (residue) functionals;
//! - [`orbit`]: the monodromy orbit of a center vanishing cycle and its
//!   residue-annihilator characterization;
//! - [`tangent`]: the logarithmic parametrization `tau`, its differential,
//!   and exact tangent-space membership;
//! - [`melnikov`]: real oval tracing and first-order Melnikov integrals;
//! - [`quadratic`]: Bautin generators and component membership for the
//!   quadratic normal form.
//!
//! Incidence and linear-algebra decisions are exact (big rationals or
//! quadratic extensions); floating point is confined to the Newton solver,
//! oval tracing and quadrature. The crate is `no_std` (with `alloc`); IO,
//! file formats and the command-line driver live in the companion crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arrangement;
pub mod fiber_graph;
pub mod linalg;
pub mod local_model;
pub mod melnikov;
pub mod num;
pub mod orbit;
pub mod poly;
pub mod quadratic;
pub mod tangent;
