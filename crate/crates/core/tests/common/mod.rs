#![allow(dead_code)]

use fuzzy_prior::{Density, GridFunction, Interval, LossParams, Membership};
use rand::Rng;

/// Smooth positive shape: a baseline plus a few Gaussian bumps.
pub fn random_shape<R: Rng>(rng: &mut R, domain: Interval, n: usize) -> GridFunction {
    let bumps: Vec<(f64, f64, f64)> = (0..rng.gen_range(1..=4))
        .map(|_| {
            let c = domain.lo() + rng.gen::<f64>() * domain.length();
            let w = domain.length() * rng.gen_range(0.03..0.4);
            let h = rng.gen_range(0.1..3.0);
            (c, w, h)
        })
        .collect();
    let base = rng.gen_range(0.0..0.5);
    GridFunction::from_fn(domain, n, |x| {
        base + bumps
            .iter()
            .map(|&(c, w, h)| h * (-0.5 * ((x - c) / w).powi(2)).exp())
            .sum::<f64>()
    })
    .unwrap()
}

pub fn random_density<R: Rng>(rng: &mut R, domain: Interval, n: usize) -> Density {
    Density::normalize(random_shape(rng, domain, n)).unwrap()
}

/// Random membership whose samples span exactly `[lo, hi]`.
pub fn random_membership<R: Rng>(
    rng: &mut R,
    domain: Interval,
    n: usize,
    lo: f64,
    hi: f64,
) -> Membership {
    let f = random_shape(rng, domain, n);
    let (min, max) = (f.min(), f.max());
    let span = (max - min).max(1e-12);
    let g = f
        .map(|v| (lo + (hi - lo) * (v - min) / span).clamp(lo, hi))
        .unwrap();
    Membership::new(g).unwrap()
}

pub fn random_params<R: Rng>(rng: &mut R) -> LossParams {
    loop {
        let mut draw = |zero_prob: f64| {
            if rng.gen_bool(zero_prob) {
                0.0
            } else {
                rng.gen_range(0.01..10.0)
            }
        };
        let (a1, a2, b1, b2) = (draw(0.15), draw(0.15), draw(0.15), draw(0.15));
        if let Ok(p) = LossParams::new(a1, a2, b1, b2) {
            return p;
        }
    }
}

pub fn eq9(n: usize) -> Membership {
    fuzzy_prior::eq9_membership(n).unwrap()
}

/// Minimum of the pointwise objective over an equally spaced scan of `[0, 1]`.
pub fn scan_minimum(p: &LossParams, density: f64, points: usize) -> f64 {
    (0..points)
        .map(|i| {
            let v = i as f64 / (points - 1) as f64;
            let miss = 1.0 - v;
            (p.a1() * miss + 0.5 * p.a2() * miss * miss) * density
                + p.b1() * v
                + 0.5 * p.b2() * v * v
        })
        .fold(f64::INFINITY, f64::min)
}
