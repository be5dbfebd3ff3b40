//! Seeded randomness for the one-time input permutation.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The generator used throughout the crate. ChaCha output is stable across
/// platforms and crate versions, so a logged seed reproduces a run.
pub type SecRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SecRng {
    SecRng::seed_from_u64(seed)
}

/// A fresh seed from the operating system.
pub fn entropy_seed() -> u64 {
    rand::random()
}

/// Uniformly random permutation of `points`, deterministic in `seed`.
pub fn shuffle<T>(points: &mut [T], seed: u64) {
    points.shuffle(&mut seeded_rng(seed));
}

pub fn shuffle_with<T>(points: &mut [T], rng: &mut SecRng) {
    points.shuffle(rng);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_unchanged() {
        let mut v = vec![42];
        shuffle(&mut v, 9);
        assert_eq!(v, vec![42]);
    }

    #[test]
    fn same_seed_same_order() {
        let mut a: Vec<u32> = (0..100).collect();
        let mut b = a.clone();
        shuffle(&mut a, 12345);
        shuffle(&mut b, 12345);
        assert_eq!(a, b);
        let mut c: Vec<u32> = (0..100).collect();
        shuffle(&mut c, 12346);
        assert_ne!(a, c);
    }

    #[test]
    fn four_point_orders_are_uniform() {
        const TRIALS: usize = 100_000;
        let mut rng = seeded_rng(2024);
        let mut counts = std::collections::HashMap::new();
        for _ in 0..TRIALS {
            let mut v = [0u8, 1, 2, 3];
            shuffle_with(&mut v, &mut rng);
            *counts.entry(v).or_insert(0usize) += 1;
        }
        assert_eq!(counts.len(), 24);
        let expected = TRIALS as f64 / 24.0;
        let mut chi2 = 0.0;
        for &c in counts.values() {
            let freq = c as f64 / TRIALS as f64;
            assert!((freq - 1.0 / 24.0).abs() <= 0.01, "frequency {freq}");
            chi2 += (c as f64 - expected).powi(2) / expected;
        }
        // 23 degrees of freedom; 49.7 is the 0.999 quantile.
        assert!(chi2 < 49.7, "chi-square {chi2}");
    }
}
