//! The worked example: the cubic membership `6.075 θ² (1 - θ)` on `[0, 1]`
//! and four loss functions under which four different priors all have it as
//! their optimal membership.

use crate::decision::prior_to_membership;
use crate::density::{Density, Membership};
use crate::error::Result;
use crate::grid::Interval;
use crate::inverse::{
    calibrate_b2, calibration_constants, membership_to_prior, CalibrationConstants,
};

/// Points per exported curve.
pub const CURVE_POINTS: usize = 501;

/// Peak height of the example membership, reached at θ = 2/3.
pub const EQ9_PEAK: f64 = 0.9;

/// Integral of the example membership over `[0, 1]`, `6.075 / 12`.
pub const EQ9_MASS: f64 = 0.50625;

/// One of the four published loss settings with its reported `b2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Figure1Case {
    pub a1: f64,
    pub a2: f64,
    pub b1: f64,
    pub b2_expected: f64,
    pub label: &'static str,
}

pub const FIGURE1_CASES: [Figure1Case; 4] = [
    Figure1Case {
        a1: 1.0,
        a2: 7.0,
        b1: 0.01,
        b2_expected: 5.15,
        label: "a1=1,a2=7,b1=0.01",
    },
    Figure1Case {
        a1: 1.0,
        a2: 7.0,
        b1: 3.35,
        b2_expected: 0.072,
        label: "a1=1,a2=7,b1=3.35",
    },
    Figure1Case {
        a1: 4.0,
        a2: 2.0,
        b1: 0.01,
        b2_expected: 9.02,
        label: "a1=4,a2=2,b1=0.01",
    },
    Figure1Case {
        a1: 4.0,
        a2: 2.0,
        b1: 4.50,
        b2_expected: 0.76,
        label: "a1=4,a2=2,b1=4.50",
    },
];

/// The two `(a1, a2)` settings with their reported largest feasible `b1`.
pub const A_CASES: [(f64, f64, f64); 2] = [(1.0, 7.0, 3.40), (4.0, 2.0, 4.91)];

pub fn eq9_value(theta: f64) -> f64 {
    6.075 * theta * theta * (1.0 - theta)
}

/// The example membership sampled on `n` points of `[0, 1]`.
pub fn eq9_membership(n: usize) -> Result<Membership> {
    Membership::from_fn(Interval::unit(), n, eq9_value)
}

/// Feasibility bound for one `(a1, a2)` setting.
#[derive(Debug, Clone, PartialEq)]
pub struct ACaseRow {
    pub a1: f64,
    pub a2: f64,
    pub constants: CalibrationConstants,
    pub b1_max: f64,
    pub b1_max_reported: f64,
}

/// One calibrated prior.
#[derive(Debug, Clone, PartialEq)]
pub struct Figure1Row {
    pub case: Figure1Case,
    pub b2: f64,
    pub prior: Density,
    pub prior_max: f64,
    pub prior_argmax: f64,
    /// Sup-norm distance between the prior's optimal membership and the example.
    pub roundtrip_error: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Figure1 {
    pub membership: Membership,
    pub a_cases: Vec<ACaseRow>,
    pub rows: Vec<Figure1Row>,
}

impl Figure1 {
    /// Row indices sorted by decreasing prior maximum.
    pub fn order_by_max(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.rows.len()).collect();
        idx.sort_by(|&i, &j| self.rows[j].prior_max.total_cmp(&self.rows[i].prior_max));
        idx
    }
}

/// Recomputes the calibration constants and the four priors on an `n`-point grid.
pub fn reproduce_figure1(n: usize) -> Result<Figure1> {
    let membership = eq9_membership(n)?;
    let a_cases = A_CASES
        .iter()
        .map(|&(a1, a2, reported)| {
            let constants = calibration_constants(a1, a2, &membership)?;
            Ok(ACaseRow {
                a1,
                a2,
                constants,
                b1_max: constants.b1_max(),
                b1_max_reported: reported,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let rows = FIGURE1_CASES
        .iter()
        .map(|&case| {
            let cal = calibrate_b2(case.a1, case.a2, case.b1, &membership)?;
            let prior = membership_to_prior(&cal.params, &membership)?;
            let back = prior_to_membership(&cal.params, &prior);
            let roundtrip_error = back.grid().sup_distance(membership.grid())?;
            let (prior_argmax, prior_max) = prior.grid().argmax();
            Ok(Figure1Row {
                case,
                b2: cal.params.b2(),
                prior,
                prior_max,
                prior_argmax,
                roundtrip_error,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Figure1 {
        membership,
        a_cases,
        rows,
    })
}
