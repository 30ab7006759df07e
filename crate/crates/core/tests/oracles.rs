//! Independent routes to the values the library computes in closed form.

mod common;

use common::{eq9, random_membership, random_params, scan_minimum};
use fuzzy_prior::{
    calibrate_a2zero, calibrate_b2, fuzzy_update, gamma_cut, membership_to_prior, posterior,
    prior_to_membership, solve_root, Density, GridFunction, Interval, Likelihood, LossParams,
    Membership,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const N: usize = 2001;

/// Integral of the inverse map, evaluated directly from its defining formula.
fn inverse_mass(a1: f64, a2: f64, b1: f64, b2: f64, m: &Membership) -> f64 {
    m.grid()
        .map(|v| (b1 + b2 * v) / (a1 + a2 * (1.0 - v)))
        .unwrap()
        .integrate()
}

#[test]
fn b2_closed_form_matches_root_search() {
    let m = eq9(N);
    for (a1, a2, b1) in [
        (1.0, 7.0, 0.01),
        (1.0, 7.0, 3.35),
        (4.0, 2.0, 0.01),
        (4.0, 2.0, 4.5),
        (0.5, 0.0, 0.2),
    ] {
        let searched = solve_root(
            |b2| inverse_mass(a1, a2, b1, b2, &m),
            0.0,
            100.0,
            1.0,
            1e-13,
        )
        .unwrap();
        let closed = calibrate_b2(a1, a2, b1, &m).unwrap().params.b2();
        assert!(
            (searched - closed).abs() < 1e-9,
            "{a1} {a2} {b1}: {searched} vs {closed}"
        );
    }
}

#[test]
fn b1_bound_matches_root_search() {
    let m = eq9(N);
    for (a1, a2, reported) in [(1.0, 7.0, 3.40), (4.0, 2.0, 4.91)] {
        let searched = solve_root(
            |b1| inverse_mass(a1, a2, b1, 0.0, &m),
            0.0,
            100.0,
            1.0,
            1e-13,
        )
        .unwrap();
        let closed = calibrate_b2(a1, a2, 0.0, &m).unwrap().b1_max;
        assert!((searched - closed).abs() < 1e-9);
        assert!((closed - reported).abs() <= 0.01, "{closed} vs {reported}");
    }
}

#[test]
fn r2_closed_form_matches_root_search() {
    let m = eq9(N);
    for r1 in [0.0, 0.25, 0.5, 0.9] {
        let searched = solve_root(
            |r2| m.grid().map(|v| (r2 - r1) * v + r1).unwrap().integrate(),
            r1,
            100.0,
            1.0,
            1e-13,
        )
        .unwrap();
        let closed = calibrate_a2zero(r1, &m).unwrap().rates.r2();
        assert!((searched - closed).abs() < 1e-9);
        // closed form with the exact integral 6.075 / 12
        assert!((closed - (r1 + (1.0 - r1) / 0.50625)).abs() < 1e-9);
    }
}

#[test]
fn rounded_b2_is_not_quite_a_density() {
    let m = eq9(N);
    let p = LossParams::new(1.0, 7.0, 0.01, 5.15).unwrap();
    match membership_to_prior(&p, &m) {
        Err(fuzzy_prior::Error::NotADensity { integral }) => {
            assert!((integral - inverse_mass(1.0, 7.0, 0.01, 5.15, &m)).abs() < 1e-15);
            assert!((integral - 1.0).abs() < 1e-3);
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn eq9_b2_values_match_hand_computation_at_peak() {
    // prior at the membership peak, with b2 rounded as reported
    let value: f64 = (0.01 + 5.15 * 0.9) / (1.0 + 7.0 * (1.0 - 0.9));
    assert!((value - 2.732).abs() < 1e-3);
}

#[test]
fn pointwise_optimum_matches_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let p = random_params(&mut rng);
        let t = p.thresholds();
        let density = match rng.gen_range(0..3) {
            0 => t.lo,
            1 if t.hi.is_finite() => t.hi,
            _ => rng.gen_range(0.0..5.0),
        };
        let v = p.optimal_value(density);
        let got = p.pointwise_objective(density, v);
        let best = scan_minimum(&p, density, 100_001);
        assert!(
            got <= best + 1e-8,
            "{p:?} density {density}: {got} > {best}"
        );
    }
}

#[test]
fn simpson_refinement_is_fourth_order() {
    let exact = 2.0 / std::f64::consts::PI;
    let err = |n| {
        let f = GridFunction::from_fn(Interval::unit(), n, |x| (std::f64::consts::PI * x).sin())
            .unwrap();
        (f.integrate() - exact).abs()
    };
    for n in [11, 21, 41, 81] {
        let ratio = err(n) / err(2 * n - 1);
        assert!((15.0..17.0).contains(&ratio), "n = {n}: ratio {ratio}");
    }
}

#[test]
fn beta_conjugate_posterior() {
    let prior =
        Density::new(GridFunction::from_fn(Interval::unit(), N, |x| 6.0 * x * (1.0 - x)).unwrap())
            .unwrap();
    let lik = Likelihood::binomial(1, 0, N).unwrap();
    let post = posterior(&prior, &lik).unwrap();
    let beta32 = GridFunction::from_fn(Interval::unit(), N, |x| 12.0 * x * x * (1.0 - x)).unwrap();
    assert!(post.grid().sup_distance(&beta32).unwrap() < 1e-6);

    // Beta(3, 4) after 2 successes and 3 failures from Beta(1, 1)
    let flat = Density::uniform(Interval::unit(), N).unwrap();
    let post = posterior(&flat, &Likelihood::binomial(2, 3, N).unwrap()).unwrap();
    let beta34 =
        GridFunction::from_fn(Interval::unit(), N, |x| 60.0 * x * x * (1.0 - x).powi(3)).unwrap();
    assert!(post.grid().sup_distance(&beta34).unwrap() < 1e-6);
}

#[test]
fn flat_update_returns_the_membership() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10 {
        let m = random_membership(&mut rng, Interval::unit(), N, 0.05, 0.95);
        let cal = calibrate_b2(2.0, 3.0, 0.1, &m).unwrap();
        let out = fuzzy_update(
            &m,
            &cal.params,
            &Likelihood::flat(Interval::unit(), N).unwrap(),
        )
        .unwrap();
        assert!(out.grid().sup_distance(m.grid()).unwrap() < 1e-6);
    }
}

#[test]
fn success_shifts_cuts_right() {
    let m = eq9(N);
    // b2 = 5.1517 calibrated; the rounded 5.15 leaves the inverse map 3e-4 short of unit mass
    let p = calibrate_b2(1.0, 7.0, 0.01, &m).unwrap().params;
    let b2 = p.b2();
    let out = fuzzy_update(&m, &p, &Likelihood::binomial(1, 0, N).unwrap()).unwrap();

    // direct computation: prior * theta, normalized, then the optimal map
    let prior = m
        .grid()
        .map_with_abscissa(|_, v| (0.01 + b2 * v) / (1.0 + 7.0 * (1.0 - v)))
        .unwrap();
    let joint = prior.map_with_abscissa(|x, v| x * v).unwrap();
    let z = joint.integrate();
    let direct = joint.map(|v| p.optimal_value(v / z)).unwrap();
    assert!(out.grid().sup_distance(&direct).unwrap() < 1e-12);

    let mut compared = 0;
    for i in 1..=19 {
        let g = i as f64 / 20.0;
        let before = gamma_cut(&m, g).unwrap();
        let after = gamma_cut(&out, g).unwrap();
        if before.is_empty() || after.is_empty() {
            continue;
        }
        compared += 1;
        assert!(
            after.intervals()[0].0 >= before.intervals()[0].0 - 1e-6,
            "gamma {g}"
        );
    }
    assert!(compared > 10);
}

#[test]
fn narrow_likelihood_concentrates_membership() {
    let m = eq9(N);
    let p = calibrate_b2(1.0, 7.0, 0.01, &m).unwrap().params;
    let h = m.grid().step();
    for center in [0.3, 0.5, 0.8] {
        let lik = Likelihood::gaussian(Interval::unit(), N, center, 0.002).unwrap();
        let out = fuzzy_update(&m, &p, &lik).unwrap();
        let top = gamma_cut(&out, out.grid().max()).unwrap();
        assert_eq!(top.components(), 1);
        let (a, b) = top.intervals()[0];
        let mid = 0.5 * (a + b);
        assert!(
            (mid - center).abs() <= h,
            "center {center}: top set [{a}, {b}]"
        );
        assert!(out.evaluate(center).unwrap() == out.grid().max());
    }
}

#[test]
fn optimal_membership_of_random_priors_beats_scan_per_sample() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let p = random_params(&mut rng);
    let prior = common::random_density(&mut rng, Interval::unit(), 101);
    let m = prior_to_membership(&p, &prior);
    for (&d, &v) in prior.values().iter().zip(m.values()) {
        assert!(p.pointwise_objective(d, v) <= scan_minimum(&p, d, 100_001) + 1e-8);
    }
}

#[test]
fn unique_regime_inverse_is_unique_per_loss() {
    // Two different b1 give two different priors with the same membership.
    let m = random_membership(
        &mut ChaCha8Rng::seed_from_u64(3),
        Interval::unit(),
        N,
        0.1,
        0.9,
    );
    let lo = calibrate_b2(1.0, 1.0, 0.0, &m).unwrap();
    let hi = calibrate_b2(1.0, 1.0, 0.5 * lo.b1_max, &m).unwrap();
    let p_lo = membership_to_prior(&lo.params, &m).unwrap();
    let p_hi = membership_to_prior(&hi.params, &m).unwrap();
    assert!(p_lo.grid().sup_distance(p_hi.grid()).unwrap() > 1e-3);
    for (params, prior) in [(lo.params, p_lo), (hi.params, p_hi)] {
        let back = prior_to_membership(&params, &prior);
        assert!(back.grid().sup_distance(m.grid()).unwrap() < 1e-9);
    }
}
