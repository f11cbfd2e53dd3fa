//! Exact combinatorics and linear algebra for degenerate symplectic flag varieties.
//!
//! The crate computes PBW-graded characters of `sp_2n` (and `sl_m`) modules from
//! lattice points of Dyck-path polytopes, re-derives them from torus fixed points
//! of the Bott-Samelson type resolution, and checks the resolution's geometry and
//! canonical-bundle bookkeeping over exact rationals.
//!
//! Modules map onto the pieces of the computation:
//!
//! * [`rootsys`] - positive roots, epsilon-coordinates, parabolic radicals.
//! * [`polytope`] - Dyck paths, polytope inequalities, lattice points, q-characters.
//! * [`charring`] - Laurent polynomials over big rationals, Weyl oracles.
//! * [`fixedpoints`] - admissible collections and the localization sum.
//! * [`geometry`] - subspaces, membership tests, lift, sigma, flat family.
//! * [`bundles`] - line-bundle ledgers and discrepancy coefficients.
//! * [`cli`] - the command-line surface used by the `spflag` binary.

pub mod bundles;
pub mod charring;
pub mod cli;
pub mod error;
pub mod fixedpoints;
pub mod geometry;
pub mod polytope;
pub mod rational;
pub mod rootsys;

pub use error::{Error, Result};
