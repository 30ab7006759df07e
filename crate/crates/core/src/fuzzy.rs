//! Fuzzy-set operations on sampled membership functions: gamma-cuts, core,
//! support, complement, crispness and convexity.
//!
//! Cuts are taken of the piecewise linear interpolant, so their endpoints
//! fall between grid points wherever the membership crosses the level.

use crate::density::Membership;
use crate::error::{Error, Result};
use crate::grid::{GridFunction, Interval};

/// Slack applied when comparing samples against a cut level, absorbing the
/// rounding in formulas whose exact value sits on the level.
pub const CUT_EPS: f64 = 1e-12;

/// A finite union of disjoint closed intervals, sorted by left endpoint.
///
/// Consecutive intervals never touch; single points `[x, x]` are allowed.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CutSet {
    intervals: Vec<(f64, f64)>,
}

impl CutSet {
    pub fn empty() -> Self {
        CutSet::default()
    }

    /// Builds a set from closed intervals, merging overlapping or touching ones.
    pub fn from_intervals(mut intervals: Vec<(f64, f64)>) -> Self {
        intervals.retain(|(a, b)| a <= b);
        intervals.sort_by(|x, y| x.0.total_cmp(&y.0));
        let mut set = CutSet::empty();
        for (a, b) in intervals {
            set.push(a, b);
        }
        set
    }

    fn push(&mut self, a: f64, b: f64) {
        match self.intervals.last_mut() {
            Some(last) if a <= last.1 => last.1 = last.1.max(b),
            _ => self.intervals.push((a, b)),
        }
    }

    pub fn intervals(&self) -> &[(f64, f64)] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Number of connected components.
    pub fn components(&self) -> usize {
        self.intervals.len()
    }

    /// Total length (Lebesgue measure).
    pub fn measure(&self) -> f64 {
        self.intervals.iter().map(|(a, b)| b - a).sum()
    }

    pub fn contains(&self, x: f64) -> bool {
        self.intervals.iter().any(|&(a, b)| a <= x && x <= b)
    }

    /// True when every interval of `self` lies inside some interval of `other`,
    /// allowing `slack` at the endpoints.
    pub fn is_subset_of(&self, other: &CutSet, slack: f64) -> bool {
        self.intervals.iter().all(|&(a, b)| {
            other
                .intervals
                .iter()
                .any(|&(c, d)| c - slack <= a && b <= d + slack)
        })
    }
}

fn check_level(gamma: f64) -> Result<()> {
    if (0.0..=1.0).contains(&gamma) {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name: "gamma",
            value: gamma,
            reason: "cut level must lie in [0, 1]",
        })
    }
}

/// The set `{theta : m(theta) >= level}` of the interpolant of `f`.
fn upper_level_set(f: &GridFunction, level: f64) -> CutSet {
    let v = f.values();
    let mut set = CutSet::empty();
    for k in 0..v.len() - 1 {
        let (x0, x1) = (f.abscissa(k), f.abscissa(k + 1));
        let (v0, v1) = (v[k], v[k + 1]);
        match (v0 >= level, v1 >= level) {
            (true, true) => set.push(x0, x1),
            (true, false) => {
                let cross = x0 + (level - v0) / (v1 - v0) * (x1 - x0);
                set.push(x0, cross.clamp(x0, x1));
            }
            (false, true) => {
                let cross = x0 + (level - v0) / (v1 - v0) * (x1 - x0);
                set.push(cross.clamp(x0, x1), x1);
            }
            (false, false) => {}
        }
    }
    set
}

/// The gamma-cut `{theta : m(theta) >= gamma}`.
pub fn gamma_cut(m: &Membership, gamma: f64) -> Result<CutSet> {
    check_level(gamma)?;
    Ok(upper_level_set(m.grid(), gamma - CUT_EPS))
}

/// The 1-cut.
pub fn core(m: &Membership) -> CutSet {
    upper_level_set(m.grid(), 1.0 - CUT_EPS)
}

/// Closure of `{theta : m(theta) > 0}`.
///
/// The strict inequality describes an open set; the closed intervals of a
/// [`CutSet`] hold its closure. Under linear interpolation every grid cell
/// with a positive endpoint belongs to the support, so a sampled indicator's
/// support extends up to one grid step beyond the indicated set.
pub fn support(m: &Membership) -> CutSet {
    let f = m.grid();
    let v = f.values();
    let mut set = CutSet::empty();
    for k in 0..v.len() - 1 {
        if v[k] > 0.0 || v[k + 1] > 0.0 {
            set.push(f.abscissa(k), f.abscissa(k + 1));
        }
    }
    set
}

/// Pointwise `1 - m`.
pub fn complement(m: &Membership) -> Membership {
    let f = m
        .grid()
        .map(|v| 1.0 - v)
        .expect("finite samples stay finite");
    Membership::new(f).expect("1 - v stays in [0, 1]")
}

/// True when every sample lies within `tol` of 0 or 1.
pub fn is_crisp(m: &Membership, tol: f64) -> Result<bool> {
    if !(tol >= 0.0) {
        return Err(Error::InvalidParameter {
            name: "tol",
            value: tol,
            reason: "must be nonnegative",
        });
    }
    Ok(m.values()
        .iter()
        .all(|&v| v.abs() <= tol || (1.0 - v).abs() <= tol))
}

/// True when every gamma-cut is empty or a single interval.
///
/// The topology of the cuts of a piecewise linear function changes only at
/// sample values, so sweeping over the distinct samples is exhaustive.
pub fn is_convex_fuzzy(m: &Membership) -> bool {
    let mut levels: Vec<f64> = m.values().to_vec();
    levels.sort_by(f64::total_cmp);
    levels.dedup();
    levels
        .into_iter()
        .all(|g| upper_level_set(m.grid(), g - CUT_EPS).components() <= 1)
}

/// Crisp membership of `set`, sampled on the grid of `m`.
pub fn indicator_like(m: &Membership, set: &CutSet) -> Membership {
    let f = m.grid();
    let g = f
        .map_with_abscissa(|x, _| if set.contains(x) { 1.0 } else { 0.0 })
        .expect("0/1 samples are finite");
    Membership::new(g).expect("0/1 samples are memberships")
}

/// The whole of `domain` as a cut set.
pub fn whole_domain(domain: Interval) -> CutSet {
    CutSet::from_intervals(vec![(domain.lo(), domain.hi())])
}
