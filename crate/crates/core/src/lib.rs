//! Information-theoretic and complexity measures of the normal-metal /
//! superconductor interface described by the Ginzburg-Landau order parameter
//! `Psi(x) = Psi_0 tanh(x / (sqrt2 xi))`.
//!
//! Modules:
//! - [`numerics`]: gamma, `2F1(a, b; c; -1)`, dilogarithm, adaptive quadrature.
//! - [`model`]: coherence length, order parameter, the two interface densities.
//! - [`measures`]: Shannon, Fisher, disequilibrium, LMC, Tsallis and
//!   generalized Fisher measures, closed form and by quadrature.
//! - [`liu`]: Shannon/Fisher densities and the one-dimensional decomposition
//!   `S = -1 + I_1F + I_2F`.
//! - [`bvp`]: finite-difference solver for `xi^2 u'' = u^3 - u`.
//! - [`materials`]: the built-in material catalog and its file format.

// `!(x > 0.0)` is used on purpose: NaN must fail every precondition.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bvp;
pub mod error;
pub mod liu;
pub mod materials;
pub mod measures;
pub mod model;
pub mod numerics;

pub use bvp::{solve_profile, verify_profile, BvpSolution};
pub use error::{Error, Result};
pub use liu::{liu_identity, LiuReport};
pub use materials::{builtin_materials, load_materials, lookup, Material};
pub use measures::{
    generalized_set, measure_numeric, measure_set, measure_set_truncated, measures_at_temperature,
    GeneralizedSet, MeasureKind, MeasureSet,
};
pub use model::{
    coherence_length, order_parameter, CoherenceInput, DistributionKind, DistributionSpec,
};
pub use numerics::{Quadrature, QuadratureResult};
