//! Decision-theoretic conversion between prior densities and fuzzy
//! membership functions on a bounded interval.
//!
//! A prior is turned into the membership function minimizing expected loss
//! under a four-parameter quadratic loss ([`decision`]); a membership is
//! turned back into the prior, or family of priors, that produces it
//! ([`inverse`]). Composing the two with a Bayesian update gives a way to
//! revise a fuzzy set with data ([`update`]).
//!
//! Every function lives on a uniform grid ([`grid`]) and all integrals use
//! composite Simpson quadrature.
//!
//! ```
//! use fuzzy_prior::{calibrate_b2, eq9_membership, membership_to_prior, prior_to_membership};
//!
//! let m = eq9_membership(2001)?;
//! let cal = calibrate_b2(1.0, 7.0, 0.01, &m)?;
//! let prior = membership_to_prior(&cal.params, &m)?;
//! let back = prior_to_membership(&cal.params, &prior);
//! assert!(back.grid().sup_distance(m.grid())? < 1e-9);
//! # Ok::<(), fuzzy_prior::Error>(())
//! ```

// `!(x > 0.0)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod decision;
pub mod density;
pub mod error;
pub mod fuzzy;
pub mod gallery;
pub mod grid;
pub mod inverse;
pub mod root;
pub mod update;

pub use decision::{loss, prior_to_membership, risk, LossParams, Thresholds};
pub use density::{Density, Membership, NORMALIZATION_TOL};
pub use error::{Error, Result};
pub use fuzzy::{complement, core, gamma_cut, is_convex_fuzzy, is_crisp, support, CutSet};
pub use gallery::{eq9_membership, reproduce_figure1, Figure1, Figure1Case, FIGURE1_CASES};
pub use grid::{GridFunction, Interval, DEFAULT_GRID_SIZE};
pub use inverse::{
    calibrate_a2zero, calibrate_b2, calibration_constants, in_prior_family, membership_to_prior,
    uniqueness_report, A2ZeroCalibration, B2Calibration, CalibrationConstants, CrispRates, Regime,
    UniquenessReport,
};
pub use root::solve_root;
pub use update::{fuzzy_update, posterior, Likelihood};
