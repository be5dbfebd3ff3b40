#![allow(dead_code)]

use rand::Rng;
use spherical_sec::cloud::{seeded_rng, shuffle_with, SecRng};
use spherical_sec::synth::{random_cap_cloud, random_full_sphere_cloud, random_unit};
use spherical_sec::UnitVector;

/// Largest cap radius used for hemisphere clouds.
pub const MAX_CAP: f64 = std::f64::consts::FRAC_PI_2 - 0.05;

/// Random clouds with 3 to 40 points inside random caps smaller than
/// `MAX_CAP`, already shuffled.
pub fn hemisphere_suite(seed: u64, count: usize) -> Vec<Vec<UnitVector>> {
    let mut rng = seeded_rng(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(3..=40);
            hemisphere_cloud(&mut rng, n)
        })
        .collect()
}

pub fn hemisphere_cloud(rng: &mut SecRng, n: usize) -> Vec<UnitVector> {
    let center = random_unit(rng);
    let radius = rng.random_range(0.01..MAX_CAP);
    let mut pts = random_cap_cloud(rng, center, radius, n);
    shuffle_with(&mut pts, rng);
    pts
}

/// Random clouds with a tetrahedral frame, so no open hemisphere holds them.
pub fn full_sphere_suite(seed: u64, count: usize, max_n: usize) -> Vec<Vec<UnitVector>> {
    let mut rng = seeded_rng(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(4..=max_n);
            random_full_sphere_cloud(&mut rng, n)
        })
        .collect()
}

/// Prints one criterion line and returns whether it passed.
pub fn report(id: &str, name: &str, pass: bool, detail: impl std::fmt::Display) -> bool {
    println!(
        "[{}] {id} {name}: {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    pass
}
