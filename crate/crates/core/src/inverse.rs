//! From a membership function back to prior densities.
//!
//! Inverting the optimal-membership formula on the region `0 < m < 1` gives
//!
//! ```text
//! prior(theta) = (b1 + b2 m(theta)) / (a1 + a2 (1 - m(theta)))
//! ```
//!
//! which is a density only for suitable loss coefficients. For fixed `a1`,
//! `a2` the integral is `b1 c1 + b2 c2`, so any `b1` in `[0, 1/c1]` together
//! with `b2 = (1 - b1 c1) / c2` normalizes it.

use crate::decision::LossParams;
use crate::density::{Density, Membership};
use crate::error::{Error, Result};
use crate::grid::GridFunction;

/// How far the inverse map's integral may stray from 1 before it is
/// reported as not a density.
pub const INVERSE_NORMALIZATION_TOL: f64 = 1e-4;

/// The two integrals `c1 = ∫ 1/(a1 + a2(1-m))` and `c2 = ∫ m/(a1 + a2(1-m))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CalibrationConstants {
    pub c1: f64,
    pub c2: f64,
}

impl CalibrationConstants {
    /// Largest `b1` for which a nonnegative `b2` normalizes the inverse map.
    pub fn b1_max(&self) -> f64 {
        1.0 / self.c1
    }
}

/// Density levels `r1 < r2` bounding the fuzzy region when `a2 = 0`:
/// membership is 0 below `r1` and 1 above `r2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrispRates {
    r1: f64,
    r2: f64,
}

impl CrispRates {
    pub fn new(r1: f64, r2: f64) -> Result<Self> {
        if !(r1.is_finite() && r1 >= 0.0) {
            return Err(Error::InvalidParameter {
                name: "r1",
                value: r1,
                reason: "must be finite and nonnegative",
            });
        }
        if !(r2.is_finite() && r2 > r1) {
            return Err(Error::InvalidParameter {
                name: "r2",
                value: r2,
                reason: "must be finite and exceed r1",
            });
        }
        Ok(CrispRates { r1, r2 })
    }

    pub fn r1(&self) -> f64 {
        self.r1
    }

    pub fn r2(&self) -> f64 {
        self.r2
    }

    /// The canonical prior value `(r2 - r1) m + r1` for membership value `m`.
    pub fn canonical(&self, m: f64) -> f64 {
        (self.r2 - self.r1) * m + self.r1
    }
}

fn denominators(a1: f64, a2: f64, m: &Membership) -> Result<GridFunction> {
    let den = m.grid().map(|v| a1 + a2 * (1.0 - v))?;
    if let Some(k) = den.values().iter().position(|&d| !(d > 0.0)) {
        return Err(Error::Singularity {
            theta: den.abscissa(k),
        });
    }
    Ok(den)
}

/// Prior whose optimal membership under `p` is `m`.
///
/// Fails with [`Error::NotADensity`] when the pointwise formula does not
/// integrate to 1 within [`INVERSE_NORMALIZATION_TOL`].
pub fn membership_to_prior(p: &LossParams, m: &Membership) -> Result<Density> {
    let den = denominators(p.a1(), p.a2(), m)?;
    let f = m.grid().zip_with(&den, |v, d| (p.b1() + p.b2() * v) / d)?;
    let integral = f.integrate();
    if !((integral - 1.0).abs() <= INVERSE_NORMALIZATION_TOL) {
        return Err(Error::NotADensity { integral });
    }
    Density::with_tolerance(f, INVERSE_NORMALIZATION_TOL)
}

pub fn calibration_constants(a1: f64, a2: f64, m: &Membership) -> Result<CalibrationConstants> {
    // validates a1, a2 the same way a full parameter set would
    LossParams::new(a1, a2, 1.0, 1.0)?;
    let den = denominators(a1, a2, m)?;
    let c1 = den.map(|d| 1.0 / d)?.integrate();
    let c2 = m.grid().zip_with(&den, |v, d| v / d)?.integrate();
    if !(c2 > 0.0) {
        return Err(Error::DegenerateMembership(
            "membership is identically zero",
        ));
    }
    Ok(CalibrationConstants { c1, c2 })
}

/// Result of [`calibrate_b2`].
#[derive(Debug, Clone, PartialEq)]
pub struct B2Calibration {
    /// `(a1, a2, b1, b2)` with the calibrated `b2`.
    pub params: LossParams,
    pub constants: CalibrationConstants,
    /// Upper end of the feasible `b1` range, `1 / c1`.
    pub b1_max: f64,
    /// Whether every sample lies strictly inside `(0, 1)`, the regime in
    /// which the calibrated prior is the only one yielding `m`.
    pub strictly_inside: bool,
}

/// Picks `b2` so the inverse map with `(a1, a2, b1, b2)` integrates to 1.
pub fn calibrate_b2(a1: f64, a2: f64, b1: f64, m: &Membership) -> Result<B2Calibration> {
    if !(b1.is_finite() && b1 >= 0.0) {
        return Err(Error::InvalidParameter {
            name: "b1",
            value: b1,
            reason: "must be finite and nonnegative",
        });
    }
    let constants = calibration_constants(a1, a2, m)?;
    let b1_max = constants.b1_max();
    if b1 > b1_max {
        return Err(Error::InfeasibleB1 { b1, bound: b1_max });
    }
    let b2 = ((1.0 - b1 * constants.c1) / constants.c2).max(0.0);
    let params = LossParams::new(a1, a2, b1, b2)?;
    let report = uniqueness_report(m);
    Ok(B2Calibration {
        params,
        constants,
        b1_max,
        strictly_inside: report.strictly_inside,
    })
}

/// Result of [`calibrate_a2zero`].
#[derive(Debug, Clone, PartialEq)]
pub struct A2ZeroCalibration {
    pub rates: CrispRates,
    /// `(1/(r2-r1), 0, r1/(r2-r1), 1)`, the loss realizing `rates` with `b2 = 1`.
    pub params: LossParams,
    /// The canonical prior `(r2 - r1) m + r1`.
    pub prior: Density,
}

/// The `a2 = 0` inversion: given `r1 < 1/length`, finds the unique `r2`
/// making `(r2 - r1) m + r1` a density.
pub fn calibrate_a2zero(r1: f64, m: &Membership) -> Result<A2ZeroCalibration> {
    if !(r1.is_finite() && r1 >= 0.0) {
        return Err(Error::InvalidParameter {
            name: "r1",
            value: r1,
            reason: "must be finite and nonnegative",
        });
    }
    let length = m.grid().domain().length();
    let bound = 1.0 / length;
    if r1 >= bound {
        return Err(Error::InfeasibleR1 { r1, bound });
    }
    let mass = m.grid().integrate();
    if !(mass > 0.0) {
        return Err(Error::DegenerateMembership("membership integrates to zero"));
    }
    let r2 = r1 + (1.0 - r1 * length) / mass;
    let rates = CrispRates::new(r1, r2)?;
    let spread = r2 - r1;
    let params = LossParams::new(1.0 / spread, 0.0, r1 / spread, 1.0)?;
    let prior = Density::new(m.grid().map(|v| rates.canonical(v))?)?;
    Ok(A2ZeroCalibration {
        rates,
        params,
        prior,
    })
}

/// Whether `prior` belongs to the family of priors sharing `m` as optimal
/// membership under the `a2 = 0` loss with crisp rates `rates`.
///
/// Checked sample by sample: at most `r1` where `m = 0`, the canonical value
/// where `0 < m < 1`, at least `r2` where `m = 1`, each up to `tol`.
pub fn in_prior_family(
    prior: &Density,
    m: &Membership,
    rates: &CrispRates,
    tol: f64,
) -> Result<bool> {
    prior.grid().ensure_same_grid(m.grid())?;
    Ok(prior.values().iter().zip(m.values()).all(|(&pi, &v)| {
        if v == 0.0 {
            pi <= rates.r1 + tol
        } else if v == 1.0 {
            pi >= rates.r2 - tol
        } else {
            (pi - rates.canonical(v)).abs() <= tol
        }
    }))
}

/// Which inversion regime a membership falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// Every value strictly inside `(0, 1)`: each feasible loss has exactly
    /// one prior.
    Unique,
    /// Both `{m = 0}` and `{m = 1}` have positive length: a whole family of
    /// priors shares `m`.
    Family,
    /// Touches 0 or 1 without both level sets having positive length.
    Boundary,
}

/// Diagnostics on the range of a membership and its extreme level sets.
#[derive(Debug, Clone, PartialEq)]
pub struct UniquenessReport {
    pub min: f64,
    pub max: f64,
    pub strictly_inside: bool,
    /// Length of `{m = 0}` under the interpolant.
    pub zero_measure: f64,
    /// Length of `{m = 1}` under the interpolant.
    pub one_measure: f64,
    pub regime: Regime,
}

pub fn uniqueness_report(m: &Membership) -> UniquenessReport {
    let f = m.grid();
    let h = f.step();
    let v = f.values();
    let flat_cells = |level: f64| {
        v.windows(2)
            .filter(|w| w[0] == level && w[1] == level)
            .count() as f64
            * h
    };
    let (min, max) = (f.min(), f.max());
    let strictly_inside = min > 0.0 && max < 1.0;
    let zero_measure = flat_cells(0.0);
    let one_measure = flat_cells(1.0);
    let regime = if strictly_inside {
        Regime::Unique
    } else if zero_measure > 0.0 && one_measure > 0.0 {
        Regime::Family
    } else {
        Regime::Boundary
    };
    UniquenessReport {
        min,
        max,
        strictly_inside,
        zero_measure,
        one_measure,
        regime,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decision::prior_to_membership;
    use crate::grid::Interval;

    fn eq9() -> Membership {
        Membership::from_fn(Interval::unit(), 2001, |x| 6.075 * x * x * (1.0 - x)).unwrap()
    }

    fn params(a1: f64, a2: f64, b1: f64, b2: f64) -> LossParams {
        LossParams::new(a1, a2, b1, b2).unwrap()
    }

    #[test]
    fn inverse_value_at_the_eq9_peak() {
        let m = Membership::from_fn(Interval::unit(), 3001, |x| 6.075 * x * x * (1.0 - x)).unwrap();
        let cal = calibrate_b2(1.0, 7.0, 0.01, &m).unwrap();
        let prior = membership_to_prior(&cal.params, &m).unwrap();
        let expected = (0.01 + cal.params.b2() * 0.9) / (1.0 + 7.0 * 0.1);
        assert!((prior.values()[2000] - expected).abs() < 1e-12);
        // with the rounded b2 = 5.15 the peak is 4.645 / 1.7
        assert!((expected - 4.645 / 1.7).abs() < 0.01);
    }

    #[test]
    fn a2_zero_inverse_is_affine() {
        let m = eq9();
        let p = params(2.0, 0.0, 0.3, 1.5);
        let f = m.grid().map(|v| (p.b1() + p.b2() * v) / p.a1()).unwrap();
        let d = denominators(2.0, 0.0, &m).unwrap();
        let direct = m.grid().zip_with(&d, |v, d| (0.3 + 1.5 * v) / d).unwrap();
        assert!(f.sup_distance(&direct).unwrap() < 1e-15);
    }

    #[test]
    fn constant_membership_inverts_to_uniform() {
        let m = Membership::constant(Interval::unit(), 2001, 0.5).unwrap();
        let prior = membership_to_prior(&params(1.0, 0.0, 0.5, 1.0), &m).unwrap();
        assert!(prior.values().iter().all(|&v| v == 1.0));
    }

    #[test]
    fn unnormalized_inverse_is_reported_with_its_integral() {
        let m = Membership::constant(Interval::unit(), 2001, 0.5).unwrap();
        match membership_to_prior(&params(1.0, 0.0, 1.0, 1.0), &m) {
            Err(Error::NotADensity { integral }) => assert!((integral - 1.5).abs() < 1e-12),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn zero_denominator_is_a_singularity() {
        let m = Membership::from_fn(Interval::unit(), 11, |x| x).unwrap();
        assert!(matches!(
            membership_to_prior(&params(0.0, 1.0, 0.1, 1.0), &m),
            Err(Error::Singularity { theta }) if theta == 1.0
        ));
    }

    #[test]
    fn b1_feasibility_bound() {
        let m = eq9();
        let cal = calibrate_b2(1.0, 7.0, 0.0, &m).unwrap();
        assert!((cal.b1_max - 3.40).abs() <= 0.01, "{}", cal.b1_max);
        match calibrate_b2(1.0, 7.0, 3.5, &m) {
            Err(Error::InfeasibleB1 { bound, .. }) => assert_eq!(bound, cal.b1_max),
            other => panic!("unexpected {other:?}"),
        }
        let edge = calibrate_b2(1.0, 7.0, cal.b1_max, &m).unwrap();
        assert!(edge.params.b2().abs() < 1e-12);
        assert!(!cal.strictly_inside);
    }

    #[test]
    fn calibrated_b2_values() {
        let m = eq9();
        let b2 = calibrate_b2(1.0, 7.0, 0.01, &m).unwrap().params.b2();
        assert!((b2 - 5.15).abs() <= 0.01, "{b2}");
        let b2 = calibrate_b2(4.0, 2.0, 4.50, &m).unwrap().params.b2();
        assert!((b2 - 0.76).abs() <= 0.01, "{b2}");
    }

    #[test]
    fn calibrated_prior_normalizes() {
        let m = eq9();
        for (a1, a2, b1) in [
            (1.0, 7.0, 0.01),
            (1.0, 7.0, 3.35),
            (4.0, 2.0, 0.01),
            (4.0, 2.0, 4.5),
        ] {
            let cal = calibrate_b2(a1, a2, b1, &m).unwrap();
            let prior = membership_to_prior(&cal.params, &m).unwrap();
            assert!((prior.grid().integrate() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn a2zero_closed_form() {
        let m = eq9();
        let cal = calibrate_a2zero(0.5, &m).unwrap();
        assert!((cal.rates.r2() - (0.5 + 0.5 / 0.50625)).abs() < 1e-12);
        assert!((cal.rates.r2() - 1.48765).abs() < 1e-5);
        let back = prior_to_membership(&cal.params, &cal.prior);
        assert!(back.grid().sup_distance(m.grid()).unwrap() < 1e-12);
    }

    #[test]
    fn a2zero_full_membership_is_uniform() {
        let m = Membership::constant(Interval::unit(), 2001, 1.0).unwrap();
        let cal = calibrate_a2zero(0.0, &m).unwrap();
        assert!((cal.rates.r2() - 1.0).abs() < 1e-14);
        assert!(cal.prior.values().iter().all(|&v| (v - 1.0).abs() < 1e-14));
    }

    #[test]
    fn a2zero_with_zero_floor_normalizes_the_membership() {
        let m = eq9();
        let cal = calibrate_a2zero(0.0, &m).unwrap();
        let mass = m.grid().integrate();
        assert!((cal.rates.r2() - 1.0 / mass).abs() < 1e-12);
        for (p, v) in cal.prior.values().iter().zip(m.values()) {
            assert!((p - v / mass).abs() < 1e-12);
        }
    }

    #[test]
    fn a2zero_errors() {
        let m = eq9();
        assert!(
            matches!(calibrate_a2zero(1.0, &m), Err(Error::InfeasibleR1 { bound, .. }) if bound == 1.0)
        );
        let wide = Membership::from_fn(Interval::new(0.0, 4.0).unwrap(), 401, |x| x / 4.0).unwrap();
        assert!(matches!(
            calibrate_a2zero(0.3, &wide),
            Err(Error::InfeasibleR1 { .. })
        ));
        let zero = Membership::constant(Interval::unit(), 11, 0.0).unwrap();
        assert!(matches!(
            calibrate_a2zero(0.1, &zero),
            Err(Error::DegenerateMembership(_))
        ));
    }

    #[test]
    fn family_membership_checks() {
        let m = eq9();
        let cal = calibrate_a2zero(0.5, &m).unwrap();
        assert!(in_prior_family(&cal.prior, &m, &cal.rates, 1e-9).unwrap());

        let crisp = Membership::indicator(Interval::unit(), 2001, 0.25, 0.75).unwrap();
        let uniform = Density::uniform(Interval::unit(), 2001).unwrap();
        let rates = CrispRates::new(0.4, 1.2).unwrap();
        assert!(!in_prior_family(&uniform, &crisp, &rates, 1e-9).unwrap());
    }

    #[test]
    fn family_clauses_are_independent() {
        // crisp core on [0.3, 0.5]: zero set carries mass 0.2, core carries 0.8
        let crisp = Membership::indicator(Interval::unit(), 2001, 0.3, 0.5).unwrap();
        let rates = CrispRates::new(0.25, 3.0).unwrap();
        let build = |low: f64| {
            let f = crisp
                .grid()
                .map(|v| if v == 1.0 { 4.0 } else { low })
                .unwrap();
            Density::normalize(f).unwrap()
        };
        let ok = build(0.2);
        assert!(in_prior_family(&ok, &crisp, &rates, 1e-12).unwrap());
        let lowered = Density::with_tolerance(
            ok.grid()
                .map(|v| if v < 1.0 { 0.5 * v } else { v })
                .unwrap(),
            1.0,
        )
        .unwrap();
        assert!(in_prior_family(&lowered, &crisp, &rates, 1e-12).unwrap());
        let raised = Density::with_tolerance(
            ok.grid()
                .map(|v| if v < 1.0 { 2.0 * v } else { v })
                .unwrap(),
            1.0,
        )
        .unwrap();
        assert!(!in_prior_family(&raised, &crisp, &rates, 1e-12).unwrap());
    }

    #[test]
    fn uniqueness_regimes() {
        let half = Membership::constant(Interval::unit(), 2001, 0.5).unwrap();
        assert_eq!(uniqueness_report(&half).regime, Regime::Unique);

        let crisp = Membership::indicator(Interval::unit(), 2001, 0.25, 0.75).unwrap();
        let r = uniqueness_report(&crisp);
        assert_eq!(r.regime, Regime::Family);
        assert!((r.one_measure - 0.5).abs() < 1e-12);
        assert!((r.zero_measure - 0.499).abs() < 1e-12);

        let r = uniqueness_report(&eq9());
        assert_eq!(r.regime, Regime::Boundary);
        assert_eq!(r.min, 0.0);
        assert_eq!(r.zero_measure, 0.0);
        assert_eq!(r.one_measure, 0.0);
    }
}
