//! Runtime scaling experiment: solve clouds of growing size sampled in a
//! longitude/latitude rectangle and time each run.

use std::time::Instant;

use crate::cloud::{seeded_rng, shuffle_with};
use crate::error::{Error, Result};
use crate::list::MtfList;
use crate::spherical::{solve_list, SolveOptions};
use crate::synth::Rectangle;

pub const DEFAULT_SIZES: [usize; 4] = [100_000, 200_000, 500_000, 1_000_000];
pub const DEFAULT_REPEATS: usize = 10;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub repeats: usize,
    pub rectangle: Rectangle,
    pub seed: u64,
    pub options: SolveOptions,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            sizes: DEFAULT_SIZES.to_vec(),
            repeats: DEFAULT_REPEATS,
            rectangle: Rectangle::DEFAULT,
            seed: 0,
            options: SolveOptions::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub run_index: usize,
    pub seconds: f64,
}

/// Runs every size `repeats` times, sequentially. Each run shuffles a fresh
/// copy of the cloud into a new list, then times the solve alone.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRow>> {
    let mut rng = seeded_rng(config.seed);
    let mut rows = Vec::with_capacity(config.sizes.len() * config.repeats);
    for &n in &config.sizes {
        let cloud = config.rectangle.sample_units(&mut rng, n)?;
        for run_index in 0..config.repeats {
            let mut points = cloud.clone();
            shuffle_with(&mut points, &mut rng);
            let mut list = MtfList::from_vec(points);
            let start = Instant::now();
            let (outcome, _) = solve_list(&mut list, config.options)?;
            let seconds = start.elapsed().as_secs_f64();
            std::hint::black_box(&outcome);
            if !outcome.is_enclosed() {
                return Err(Error::invalid(
                    "benchmark cloud is not contained in a hemisphere; shrink the rectangle",
                ));
            }
            rows.push(BenchRow {
                n,
                run_index,
                seconds,
            });
        }
    }
    Ok(rows)
}

pub fn rows_to_csv(rows: &[BenchRow]) -> String {
    let mut s = String::from("n,run_index,seconds\n");
    for r in rows {
        s.push_str(&format!("{},{},{:.9}\n", r.n, r.run_index, r.seconds));
    }
    s
}

fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    let m = values.len() / 2;
    if values.len() % 2 == 1 {
        values[m]
    } else {
        0.5 * (values[m - 1] + values[m])
    }
}

/// `(n, median seconds)` per size, in first-appearance order.
pub fn median_times(rows: &[BenchRow]) -> Vec<(usize, f64)> {
    let mut sizes: Vec<usize> = Vec::new();
    for r in rows {
        if !sizes.contains(&r.n) {
            sizes.push(r.n);
        }
    }
    sizes
        .into_iter()
        .map(|n| {
            let mut t: Vec<f64> = rows
                .iter()
                .filter(|r| r.n == n)
                .map(|r| r.seconds)
                .collect();
            (n, median(&mut t))
        })
        .collect()
}

/// Least-squares slope of log(median time) against log(n). `None` with fewer
/// than two sizes.
pub fn loglog_slope(rows: &[BenchRow]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = median_times(rows)
        .into_iter()
        .map(|(n, t)| ((n as f64).ln(), t.max(f64::MIN_POSITIVE).ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    Some(sxy / sxx)
}
