//! Grid functions with extra invariants: probability densities and
//! membership functions.

use crate::error::{Error, Result};
use crate::grid::{GridFunction, Interval};

/// Allowed deviation of a density's integral from 1.
pub const NORMALIZATION_TOL: f64 = 1e-6;

/// A nonnegative grid function integrating to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct Density(GridFunction);

impl Density {
    pub fn new(f: GridFunction) -> Result<Self> {
        Density::with_tolerance(f, NORMALIZATION_TOL)
    }

    /// Like [`Density::new`] with a caller-chosen normalization tolerance.
    pub fn with_tolerance(f: GridFunction, tol: f64) -> Result<Self> {
        if let Some((index, &value)) = f.values().iter().enumerate().find(|(_, v)| **v < 0.0) {
            return Err(Error::NegativeDensity { index, value });
        }
        let integral = f.integrate();
        if (integral - 1.0).abs() > tol {
            return Err(Error::NotNormalized { integral, tol });
        }
        Ok(Density(f))
    }

    /// Divides a nonnegative function by its integral.
    pub fn normalize(f: GridFunction) -> Result<Self> {
        if let Some((index, &value)) = f.values().iter().enumerate().find(|(_, v)| **v < 0.0) {
            return Err(Error::NegativeDensity { index, value });
        }
        let integral = f.integrate();
        if !(integral > 0.0) || !integral.is_finite() {
            return Err(Error::NotNormalized {
                integral,
                tol: NORMALIZATION_TOL,
            });
        }
        Density::new(f.map(|v| v / integral)?)
    }

    /// The uniform density `1 / length` on `domain`.
    pub fn uniform(domain: Interval, n: usize) -> Result<Self> {
        Density::new(GridFunction::constant(domain, n, 1.0 / domain.length())?)
    }

    pub fn grid(&self) -> &GridFunction {
        &self.0
    }

    pub fn into_grid(self) -> GridFunction {
        self.0
    }

    pub fn values(&self) -> &[f64] {
        self.0.values()
    }

    pub fn evaluate(&self, theta: f64) -> Result<f64> {
        self.0.evaluate(theta)
    }
}

/// A grid function with every sample in `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Membership(GridFunction);

impl Membership {
    pub fn new(f: GridFunction) -> Result<Self> {
        if let Some((index, &value)) = f
            .values()
            .iter()
            .enumerate()
            .find(|(_, v)| !(0.0..=1.0).contains(*v))
        {
            return Err(Error::NotAMembership { index, value });
        }
        Ok(Membership(f))
    }

    pub fn from_fn(domain: Interval, n: usize, f: impl FnMut(f64) -> f64) -> Result<Self> {
        Membership::new(GridFunction::from_fn(domain, n, f)?)
    }

    pub fn constant(domain: Interval, n: usize, level: f64) -> Result<Self> {
        Membership::new(GridFunction::constant(domain, n, level)?)
    }

    /// Crisp membership of the closed set `[a, b]`, sampled on the grid.
    pub fn indicator(domain: Interval, n: usize, a: f64, b: f64) -> Result<Self> {
        Membership::from_fn(domain, n, |x| if a <= x && x <= b { 1.0 } else { 0.0 })
    }

    pub fn grid(&self) -> &GridFunction {
        &self.0
    }

    pub fn into_grid(self) -> GridFunction {
        self.0
    }

    pub fn values(&self) -> &[f64] {
        self.0.values()
    }

    pub fn evaluate(&self, theta: f64) -> Result<f64> {
        self.0.evaluate(theta)
    }
}
