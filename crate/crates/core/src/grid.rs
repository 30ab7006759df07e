//! Uniformly sampled functions on a bounded interval.
//!
//! A [`GridFunction`] stores `n` samples at equally spaced abscissae
//! `lo + k (hi - lo) / (n - 1)`. Between samples it is the piecewise linear
//! interpolant. `n` is odd so the whole grid can be integrated with composite
//! Simpson's rule, which is exact for cubics.

use crate::error::{Error, Result};

/// Grid size used when the caller does not pick one.
pub const DEFAULT_GRID_SIZE: usize = 2001;

/// A closed, bounded interval `[lo, hi]` with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo.is_finite() && hi.is_finite() && lo < hi {
            Ok(Interval { lo, hi })
        } else {
            Err(Error::InvalidInterval { lo, hi })
        }
    }

    /// The unit interval `[0, 1]`.
    pub fn unit() -> Self {
        Interval { lo: 0.0, hi: 1.0 }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn length(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// `points` equally spaced abscissae covering the interval, endpoints included.
    pub fn linspace(&self, points: usize) -> Vec<f64> {
        match points {
            0 => Vec::new(),
            1 => vec![self.lo],
            _ => (0..points)
                .map(|k| node(self.lo, self.hi, k, points))
                .collect(),
        }
    }
}

fn node(lo: f64, hi: f64, k: usize, n: usize) -> f64 {
    if k + 1 == n {
        hi
    } else {
        lo + (hi - lo) * k as f64 / (n - 1) as f64
    }
}

/// A real function sampled on a uniform grid over an [`Interval`].
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    domain: Interval,
    values: Vec<f64>,
}

impl GridFunction {
    /// Wraps samples taken at the uniform abscissae of `domain`.
    ///
    /// The sample count must be odd and at least 3, and every sample finite.
    pub fn new(domain: Interval, values: Vec<f64>) -> Result<Self> {
        check_size(values.len())?;
        if let Some(k) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidGrid(format!(
                "sample {k} is not finite ({})",
                values[k]
            )));
        }
        Ok(GridFunction { domain, values })
    }

    /// Samples `f` at the `n` grid abscissae of `domain`.
    pub fn from_fn(domain: Interval, n: usize, f: impl FnMut(f64) -> f64) -> Result<Self> {
        check_size(n)?;
        let values = domain.linspace(n).into_iter().map(f).collect();
        GridFunction::new(domain, values)
    }

    pub fn constant(domain: Interval, n: usize, c: f64) -> Result<Self> {
        GridFunction::from_fn(domain, n, |_| c)
    }

    pub fn domain(&self) -> Interval {
        self.domain
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false; a grid holds at least three samples.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Distance between neighbouring abscissae.
    pub fn step(&self) -> f64 {
        self.domain.length() / (self.len() - 1) as f64
    }

    /// Abscissa of sample `k`.
    pub fn abscissa(&self, k: usize) -> f64 {
        node(self.domain.lo, self.domain.hi, k, self.len())
    }

    pub fn abscissae(&self) -> Vec<f64> {
        self.domain.linspace(self.len())
    }

    /// True when `other` has the same domain and sample count.
    pub fn same_grid(&self, other: &GridFunction) -> bool {
        self.domain == other.domain && self.len() == other.len()
    }

    pub(crate) fn ensure_same_grid(&self, other: &GridFunction) -> Result<()> {
        if self.same_grid(other) {
            Ok(())
        } else {
            Err(Error::GridMismatch)
        }
    }

    /// Linear interpolation between the two samples bracketing `theta`.
    pub fn evaluate(&self, theta: f64) -> Result<f64> {
        if !self.domain.contains(theta) {
            return Err(Error::OutOfDomain {
                theta,
                lo: self.domain.lo,
                hi: self.domain.hi,
            });
        }
        let last = self.len() - 1;
        let t = (theta - self.domain.lo) / self.step();
        let k = (t.floor() as usize).min(last - 1);
        // Grid points return the stored sample untouched.
        if theta == self.abscissa(k) {
            return Ok(self.values[k]);
        }
        if theta == self.abscissa(k + 1) {
            return Ok(self.values[k + 1]);
        }
        let frac = (t - k as f64).clamp(0.0, 1.0);
        let (v0, v1) = (self.values[k], self.values[k + 1]);
        Ok(v0 + frac * (v1 - v0))
    }

    /// Composite Simpson approximation of the integral over the domain.
    pub fn integrate(&self) -> f64 {
        let v = &self.values;
        let last = v.len() - 1;
        let mut odd = 0.0;
        let mut even = 0.0;
        for (k, &x) in v.iter().enumerate().take(last).skip(1) {
            if k % 2 == 1 {
                odd += x;
            } else {
                even += x;
            }
        }
        self.step() / 3.0 * (v[0] + v[last] + 4.0 * odd + 2.0 * even)
    }

    /// Applies `f` to every sample.
    pub fn map(&self, f: impl FnMut(f64) -> f64) -> Result<GridFunction> {
        GridFunction::new(self.domain, self.values.iter().copied().map(f).collect())
    }

    /// Applies `f` to every sample together with its abscissa.
    pub fn map_with_abscissa(&self, mut f: impl FnMut(f64, f64) -> f64) -> Result<GridFunction> {
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(k, &v)| f(self.abscissa(k), v))
            .collect();
        GridFunction::new(self.domain, values)
    }

    /// Combines two functions on an identical grid sample by sample.
    pub fn zip_with(
        &self,
        other: &GridFunction,
        mut f: impl FnMut(f64, f64) -> f64,
    ) -> Result<GridFunction> {
        self.ensure_same_grid(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| f(a, b))
            .collect();
        GridFunction::new(self.domain, values)
    }

    pub fn scale(&self, c: f64) -> Result<GridFunction> {
        self.map(|v| c * v)
    }

    pub fn max(&self) -> f64 {
        self.values
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Abscissa and value of the first sample attaining the maximum.
    pub fn argmax(&self) -> (f64, f64) {
        let mut best = 0;
        for (k, &v) in self.values.iter().enumerate() {
            if v > self.values[best] {
                best = k;
            }
        }
        (self.abscissa(best), self.values[best])
    }

    /// Largest absolute sample difference against a function on the same grid.
    pub fn sup_distance(&self, other: &GridFunction) -> Result<f64> {
        self.ensure_same_grid(other)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max))
    }

    /// Evaluates the interpolant at `points` equally spaced abscissae.
    pub fn resample(&self, points: usize) -> Vec<(f64, f64)> {
        self.domain
            .linspace(points)
            .into_iter()
            .map(|x| (x, self.evaluate(x).expect("linspace stays in the domain")))
            .collect()
    }
}

fn check_size(n: usize) -> Result<()> {
    if n < 3 {
        Err(Error::InvalidGrid(format!(
            "need at least 3 samples, got {n}"
        )))
    } else if n.is_multiple_of(2) {
        Err(Error::InvalidGrid(format!(
            "sample count must be odd for Simpson quadrature, got {n}"
        )))
    } else {
        Ok(())
    }
}
