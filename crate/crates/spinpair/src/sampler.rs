//! Seeded Monte Carlo draws from a joint outcome distribution, with a Pearson
//! χ² goodness-of-fit check.
//!
//! Sampling is a single sequential stream per seed (parallel runs must use
//! distinct seeds) and is deterministic within a build. Cross-language
//! bit-identity of the stream is not promised, only statistical validity; the
//! generator identifier travels with every result so runs stay auditable.

use rand_core::{Rng, SeedableRng};
use rand_pcg::Pcg32;

use crate::correlations::JointProbs;
use crate::error::{Error, Result};

/// Identifier of the PRNG behind [`sample`].
pub const RNG_ID: &str = "pcg-xsh-rr-64/32";

/// Outcome tallies of one sampling run, in the `(ee′, eē′, ēe′, ēē′)` ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OutcomeCounts {
    counts: [u64; 4],
    n: u64,
    seed: u64,
    rng_id: &'static str,
}

impl OutcomeCounts {
    pub fn counts(&self) -> &[u64; 4] {
        &self.counts
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn rng_id(&self) -> &'static str {
        self.rng_id
    }

    /// Empirical outcome frequencies.
    pub fn frequencies(&self) -> [f64; 4] {
        self.counts.map(|c| c as f64 / self.n as f64)
    }
}

/// Draws `n` independent categorical samples from the 4-outcome distribution
/// by inverse CDF over the fixed outcome ordering.
pub fn sample(j: &JointProbs, n: u64, seed: u64) -> OutcomeCounts {
    let p = j.as_array();
    let thresholds = [p[0], p[0] + p[1], p[0] + p[1] + p[2]];
    let mut rng = Pcg32::seed_from_u64(seed);
    let mut counts = [0u64; 4];
    for _ in 0..n {
        let u = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
        let k = thresholds.iter().position(|&t| u < t).unwrap_or(3);
        counts[k] += 1;
    }
    OutcomeCounts {
        counts,
        n,
        seed,
        rng_id: RNG_ID,
    }
}

/// Pearson χ² statistic and its degrees of freedom.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChiSquare {
    pub statistic: f64,
    pub dof: usize,
}

/// Pearson goodness-of-fit of observed counts against the distribution `j`.
///
/// Zero-probability categories are pooled out of the statistic (an observed
/// count there makes the statistic infinite — the distribution cannot have
/// produced it). Remaining categories must number at least two and carry
/// expected counts of at least 5 each; `dof` is their number minus one.
pub fn chi_square(counts: &OutcomeCounts, j: &JointProbs) -> Result<ChiSquare> {
    let probs = j.as_array();
    let n = counts.n() as f64;
    let mut categories = 0usize;
    let mut statistic = 0.0f64;
    let mut impossible = false;
    for (obs, p) in counts.counts().iter().zip(probs) {
        if p > 0.0 {
            categories += 1;
            let expected = n * p;
            if expected < 5.0 {
                return Err(Error::InsufficientExpected { categories });
            }
            let d = *obs as f64 - expected;
            statistic += d * d / expected;
        } else if *obs > 0 {
            impossible = true;
        }
    }
    if categories < 2 {
        return Err(Error::InsufficientExpected { categories });
    }
    Ok(ChiSquare {
        statistic: if impossible { f64::INFINITY } else { statistic },
        dof: categories - 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uniform4() -> JointProbs {
        JointProbs::new([0.25, 0.25, 0.25, 0.25]).unwrap()
    }

    #[test]
    fn degenerate_distribution_hits_one_bucket() {
        let j = JointProbs::new([0.0, 1.0, 0.0, 0.0]).unwrap();
        let c = sample(&j, 5000, 3);
        assert_eq!(c.counts(), &[0, 5000, 0, 0]);
        assert_eq!(c.rng_id(), RNG_ID);
    }

    #[test]
    fn fixed_seed_reproduces_counts() {
        let j = JointProbs::new([0.1, 0.2, 0.3, 0.4]).unwrap();
        let a = sample(&j, 1000, 42);
        let b = sample(&j, 1000, 42);
        assert_eq!(a, b);
        let c = sample(&j, 1000, 43);
        assert_ne!(a.counts(), c.counts());
    }

    #[test]
    fn single_draw_sums_to_one() {
        let c = sample(&uniform4(), 1, 9);
        assert_eq!(c.counts().iter().sum::<u64>(), 1);
    }

    #[test]
    fn singlet_counts_concentrate() {
        let j = JointProbs::new([0.0, 0.5, 0.5, 0.0]).unwrap();
        let n = 1_000_000u64;
        let c = sample(&j, n, 7);
        let bound = 5.0 * (n as f64 * 0.25).sqrt();
        assert_eq!(c.counts()[0], 0);
        assert_eq!(c.counts()[3], 0);
        for k in [1, 2] {
            assert!((c.counts()[k] as f64 - 5e5).abs() < bound);
        }
    }

    #[test]
    fn chi_square_zero_for_exact_counts() {
        let j = uniform4();
        let c = sample(&j, 40, 1);
        // rebuild a counts object with exactly the expected tallies
        let exact = OutcomeCounts {
            counts: [10, 10, 10, 10],
            n: 40,
            seed: 1,
            rng_id: RNG_ID,
        };
        let _ = c;
        let r = chi_square(&exact, &j).unwrap();
        assert_eq!(r.statistic, 0.0);
        assert_eq!(r.dof, 3);
    }

    #[test]
    fn chi_square_healthy_run_is_small() {
        let j = JointProbs::new([0.0, 0.5, 0.5, 0.0]).unwrap();
        let c = sample(&j, 1_000_000, 7);
        let r = chi_square(&c, &j).unwrap();
        assert_eq!(r.dof, 1);
        assert!(r.statistic < 10.83, "statistic {}", r.statistic);
    }

    #[test]
    fn chi_square_detects_wrong_distribution() {
        // counts drawn from a distribution whose (+) weight is off by 0.01
        let truth = JointProbs::new([0.255, 0.245, 0.245, 0.255]).unwrap();
        let assumed = uniform4();
        let c = sample(&truth, 1_000_000, 5);
        let r = chi_square(&c, &assumed).unwrap();
        // noncentrality ≈ n Σ Δp²/p = 1e6 · 4 · (0.005² / 0.25) = 400
        assert!(r.statistic > 100.0, "statistic {}", r.statistic);
    }

    #[test]
    fn chi_square_impossible_outcome_is_infinite() {
        let j = JointProbs::new([0.0, 0.5, 0.5, 0.0]).unwrap();
        let c = OutcomeCounts {
            counts: [3, 499_997, 500_000, 0],
            n: 1_000_000,
            seed: 0,
            rng_id: RNG_ID,
        };
        assert!(chi_square(&c, &j).unwrap().statistic.is_infinite());
    }

    #[test]
    fn chi_square_insufficient_categories() {
        let j = JointProbs::new([0.0, 1.0, 0.0, 0.0]).unwrap();
        let c = sample(&j, 100, 2);
        assert!(matches!(
            chi_square(&c, &j),
            Err(Error::InsufficientExpected { .. })
        ));

        let j = uniform4();
        let c = sample(&j, 10, 2); // expected 2.5 per cell
        assert!(chi_square(&c, &j).is_err());
    }
}
