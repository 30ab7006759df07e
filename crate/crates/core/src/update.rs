//! Updating a fuzzy membership with data: invert it to a prior, condition
//! on a likelihood, and convert the posterior back with the same loss.

use crate::decision::{prior_to_membership, LossParams};
use crate::density::{Density, Membership};
use crate::error::{Error, Result};
use crate::grid::{GridFunction, Interval};
use crate::inverse::membership_to_prior;

/// A nonnegative, not identically zero function of the parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct Likelihood(GridFunction);

impl Likelihood {
    pub fn new(f: GridFunction) -> Result<Self> {
        if let Some(v) = f.values().iter().find(|v| **v < 0.0) {
            return Err(Error::InvalidLikelihood(format!("negative value {v}")));
        }
        if !(f.max() > 0.0) {
            return Err(Error::InvalidLikelihood("identically zero".into()));
        }
        Ok(Likelihood(f))
    }

    /// Binomial likelihood `theta^successes (1 - theta)^failures` on `[0, 1]`.
    pub fn binomial(successes: u32, failures: u32, n: usize) -> Result<Self> {
        let (s, f) = (successes as i32, failures as i32);
        Likelihood::new(GridFunction::from_fn(Interval::unit(), n, |x| {
            x.powi(s) * (1.0 - x).powi(f)
        })?)
    }

    /// Unnormalized Gaussian bump `exp(-(theta - center)^2 / (2 width^2))`.
    pub fn gaussian(domain: Interval, n: usize, center: f64, width: f64) -> Result<Self> {
        if !(width > 0.0 && width.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "width",
                value: width,
                reason: "must be finite and positive",
            });
        }
        if !center.is_finite() {
            return Err(Error::InvalidParameter {
                name: "center",
                value: center,
                reason: "must be finite",
            });
        }
        Likelihood::new(GridFunction::from_fn(domain, n, |x| {
            let z = (x - center) / width;
            (-0.5 * z * z).exp()
        })?)
    }

    /// Constant likelihood; conditioning on it changes nothing.
    pub fn flat(domain: Interval, n: usize) -> Result<Self> {
        Likelihood::new(GridFunction::constant(domain, n, 1.0)?)
    }

    pub fn grid(&self) -> &GridFunction {
        &self.0
    }

    /// Pointwise product, the likelihood of two independent batches.
    pub fn combine(&self, other: &Likelihood) -> Result<Likelihood> {
        Likelihood::new(self.0.zip_with(&other.0, |a, b| a * b)?)
    }
}

/// `prior * lik`, normalized.
pub fn posterior(prior: &Density, lik: &Likelihood) -> Result<Density> {
    let joint = prior.grid().zip_with(lik.grid(), |p, l| p * l)?;
    let evidence = joint.integrate();
    if !(evidence > 0.0) || !evidence.is_finite() {
        return Err(Error::DegenerateEvidence(evidence));
    }
    Density::new(joint.map(|v| v / evidence)?)
}

/// Membership after observing data with likelihood `lik`, using the same
/// loss in both directions.
pub fn fuzzy_update(m: &Membership, p: &LossParams, lik: &Likelihood) -> Result<Membership> {
    let prior = membership_to_prior(p, m)?;
    let post = posterior(&prior, lik)?;
    Ok(prior_to_membership(p, &post))
}
