//! The no-data decision problem: choose the membership function that
//! minimizes expected loss under a prior density.
//!
//! The loss of action `A` at state `theta` is
//!
//! ```text
//! L(A, theta) = a1 (1 - m(theta)) + a2/2 (1 - m(theta))^2
//!             + integral over the domain of [b1 m + b2/2 m^2]
//! ```
//!
//! Weighting by the prior and swapping the order of integration turns the
//! risk into a single integral whose integrand depends on `m` only through
//! its value at each point, so the optimum is found pointwise by minimizing a
//! one-dimensional quadratic on `[0, 1]`.

use crate::density::{Density, Membership};
use crate::error::{Error, Result};
use crate::grid::GridFunction;

/// The four loss coefficients.
///
/// All are nonnegative; at least one of `a1`, `a2` and at least one of `b1`,
/// `b2` is positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LossParams {
    a1: f64,
    a2: f64,
    b1: f64,
    b2: f64,
}

impl LossParams {
    pub fn new(a1: f64, a2: f64, b1: f64, b2: f64) -> Result<Self> {
        for (name, v) in [("a1", a1), ("a2", a2), ("b1", b1), ("b2", b2)] {
            if !(v.is_finite() && v >= 0.0) {
                return Err(Error::InvalidLossParams(format!(
                    "{name} = {v} must be finite and nonnegative"
                )));
            }
        }
        if a1 + a2 <= 0.0 {
            return Err(Error::InvalidLossParams(
                "at least one of a1, a2 must be positive".into(),
            ));
        }
        if b1 + b2 <= 0.0 {
            return Err(Error::InvalidLossParams(
                "at least one of b1, b2 must be positive".into(),
            ));
        }
        Ok(LossParams { a1, a2, b1, b2 })
    }

    pub fn a1(&self) -> f64 {
        self.a1
    }

    pub fn a2(&self) -> f64 {
        self.a2
    }

    pub fn b1(&self) -> f64 {
        self.b1
    }

    pub fn b2(&self) -> f64 {
        self.b2
    }

    /// The same loss multiplied by `lambda > 0`.
    pub fn scaled(&self, lambda: f64) -> Result<Self> {
        if !(lambda > 0.0 && lambda.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "lambda",
                value: lambda,
                reason: "scale factor must be finite and positive",
            });
        }
        LossParams::new(
            lambda * self.a1,
            lambda * self.a2,
            lambda * self.b1,
            lambda * self.b2,
        )
    }

    /// Density levels at which the optimal membership leaves 0 and reaches 1.
    pub fn thresholds(&self) -> Thresholds {
        let lo = self.b1 / (self.a1 + self.a2);
        let hi = if self.a1 == 0.0 {
            f64::INFINITY
        } else {
            (self.b1 + self.b2) / self.a1
        };
        Thresholds { lo, hi }
    }

    /// Pointwise objective `g(v)` for a membership value `v` at a point where
    /// the density equals `density`.
    pub fn pointwise_objective(&self, density: f64, v: f64) -> f64 {
        let miss = 1.0 - v;
        (self.a1 * miss + 0.5 * self.a2 * miss * miss) * density
            + self.b1 * v
            + 0.5 * self.b2 * v * v
    }

    /// The minimizer of [`pointwise_objective`](Self::pointwise_objective)
    /// over `[0, 1]`.
    pub fn optimal_value(&self, density: f64) -> f64 {
        let t = self.thresholds();
        if density < t.lo {
            0.0
        } else if density > t.hi {
            1.0
        } else {
            let num = (self.a1 + self.a2) * density - self.b1;
            let den = self.a2 * density + self.b2;
            if den == 0.0 {
                // a2 = b2 = 0: the objective is linear and ties at density = b1/a1
                1.0
            } else {
                (num / den).clamp(0.0, 1.0)
            }
        }
    }
}

/// Branch boundaries of the optimal membership.
///
/// Below `lo` the optimum is 0, above `hi` it is 1. `hi` is infinite when
/// `a1 = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Thresholds {
    pub lo: f64,
    pub hi: f64,
}

fn size_penalty(p: &LossParams, m: &Membership) -> f64 {
    m.grid()
        .map(|v| p.b1 * v + 0.5 * p.b2 * v * v)
        .expect("finite")
        .integrate()
}

/// Loss of the action `m` when the true state is `theta`.
pub fn loss(p: &LossParams, m: &Membership, theta: f64) -> Result<f64> {
    let miss = 1.0 - m.evaluate(theta)?;
    Ok(p.a1 * miss + 0.5 * p.a2 * miss * miss + size_penalty(p, m))
}

/// Expected loss of `m` under `prior`.
pub fn risk(p: &LossParams, m: &Membership, prior: &Density) -> Result<f64> {
    let miss_term = m.grid().zip_with(prior.grid(), |v, pi| {
        let miss = 1.0 - v;
        (p.a1 * miss + 0.5 * p.a2 * miss * miss) * pi
    })?;
    Ok(miss_term.integrate() + size_penalty(p, m))
}

/// The risk-minimizing membership for `prior`, computed sample by sample.
pub fn prior_to_membership(p: &LossParams, prior: &Density) -> Membership {
    let f: GridFunction = prior
        .grid()
        .map(|pi| p.optimal_value(pi))
        .expect("optimal values are finite");
    Membership::new(f).expect("optimal values lie in [0, 1]")
}
