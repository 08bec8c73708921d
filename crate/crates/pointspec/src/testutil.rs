//! Shared helpers for the unit tests.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random points in [-2, 2]^n with a minimum pairwise separation; resamples
/// the whole set until separated, which terminates quickly at these sizes.
pub(crate) fn separated_points(
    rng: &mut ChaCha8Rng,
    n: usize,
    m: usize,
    min_sep: f64,
) -> Vec<Vec<f64>> {
    loop {
        let pts: Vec<Vec<f64>> =
            (0..m).map(|_| (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect()).collect();
        let mut ok = true;
        'check: for i in 0..m {
            for j in 0..i {
                let r: f64 = pts[i]
                    .iter()
                    .zip(pts[j].iter())
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum::<f64>()
                    .sqrt();
                if r < min_sep {
                    ok = false;
                    break 'check;
                }
            }
        }
        if ok {
            return pts;
        }
    }
}
