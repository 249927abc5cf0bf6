//! Success probability of a uniformly random minimum-size seed.
//!
//! For `C_n ⊙ K_p` the probability is available in closed form; every family
//! can also be handled by exhaustive enumeration or Monte Carlo sampling.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::closed_form::conv_corona;
use crate::dynamics::Simulator;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::search::count_converting_sets;

/// Digits after the decimal point used when none are requested.
pub const DEFAULT_DIGITS: usize = 10;

/// `C(n, k)` in arbitrary precision.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// An exact probability in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactProbability(Ratio<BigUint>);

impl ExactProbability {
    /// `num / den`, reduced. Panics if `den` is zero or `num > den`.
    pub fn new(num: BigUint, den: BigUint) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        assert!(num <= den, "probability above one");
        Self(Ratio::new(num, den))
    }

    pub fn from_u64(num: u64, den: u64) -> Self {
        Self::new(num.into(), den.into())
    }

    pub fn one() -> Self {
        Self(Ratio::one())
    }

    pub fn zero() -> Self {
        Self(Ratio::zero())
    }

    pub fn numer(&self) -> &BigUint {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigUint {
        self.0.denom()
    }

    pub fn complement(&self) -> Self {
        Self(Ratio::one() - &self.0)
    }

    /// Decimal expansion rounded half-up to `digits` places.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scale = BigUint::from(10u32).pow(digits as u32);
        let (q, r) = (self.numer() * &scale).div_rem(self.denom());
        let scaled = if r * 2u32 >= *self.denom() {
            q + 1u32
        } else {
            q
        };
        let (int, frac) = scaled.div_rem(&scale);
        if digits == 0 {
            return int.to_string();
        }
        format!("{int}.{frac:0>digits$}")
    }

    /// Approximate value for display and statistics only.
    pub fn to_f64(&self) -> f64 {
        self.to_decimal(17)
            .parse()
            .expect("decimal rendering parses")
    }

    pub fn to_json(&self, digits: usize) -> ProbabilityJson {
        ProbabilityJson {
            num: self.numer().to_string(),
            den: self.denom().to_string(),
            decimal: self.to_decimal(digits),
        }
    }

    pub fn from_json(json: &ProbabilityJson) -> Result<Self> {
        let parse = |s: &str| {
            s.parse::<BigUint>()
                .map_err(|_| Error::Parse(format!("not a non-negative integer: {s:?}")))
        };
        let (num, den) = (parse(&json.num)?, parse(&json.den)?);
        if den.is_zero() || num > den {
            return Err(Error::Parse(format!("{num}/{den} is not a probability")));
        }
        Ok(Self::new(num, den))
    }
}

impl fmt::Display for ExactProbability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl Serialize for ExactProbability {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.to_json(DEFAULT_DIGITS).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ExactProbability {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let json = ProbabilityJson::deserialize(deserializer)?;
        Self::from_json(&json).map_err(serde::de::Error::custom)
    }
}

/// Wire form: `{"num": "1", "den": "5", "decimal": "0.2000000000"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbabilityJson {
    pub num: String,
    pub den: String,
    pub decimal: String,
}

fn check_corona(n: usize, p: usize, k: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::CycleTooShort(n));
    }
    if p < 1 {
        return Err(Error::BlockSizeTooSmall { p, min: 1 });
    }
    if k < 1 {
        return Err(Error::InvalidThreshold { k, min: 1 });
    }
    Ok(())
}

/// Probability that a uniformly random seed of size `C_k(C_n ⊙ K_p)`
/// converts `C_n ⊙ K_p`.
///
/// * `k ≤ p+1`: a converting seed holds `k-1` vertices of every block plus
///   one more vertex anywhere, giving `n·C(p,k-1)^(n-1)·C(p+1,k)` seeds.
/// * `k = p+2`: every block vertex is forced and the inner cycle needs an
///   alternating cover, of which there are 2 (even `n`) or `n` (odd `n`).
/// * `k ≥ p+3`: only the full vertex set has the right size.
pub fn success_probability_corona(n: usize, p: usize, k: usize) -> Result<ExactProbability> {
    check_corona(n, p, k)?;
    let order = n * (p + 1);
    let size = conv_corona(n, p, k)?.value();
    let favourable = if k <= p + 1 {
        binomial(p, k - 1).pow(n as u32 - 1) * binomial(p + 1, k) * n
    } else if k == p + 2 {
        BigUint::from(2 + (n - 2) * (n % 2))
    } else {
        return Ok(ExactProbability::one());
    };
    Ok(ExactProbability::new(favourable, binomial(order, size)))
}

/// `1 - success_probability_corona(n, p, k)`.
pub fn resilience_factor(n: usize, p: usize, k: usize) -> Result<ExactProbability> {
    Ok(success_probability_corona(n, p, k)?.complement())
}

/// Fraction of the `C(|V|, size)` seeds that convert, by enumeration.
pub fn enumeration_probability(
    graph: &Graph,
    k: usize,
    size: usize,
    budget: u64,
) -> Result<ExactProbability> {
    let hits = count_converting_sets(graph, k, size, budget)?;
    Ok(ExactProbability::new(
        hits.into(),
        binomial(graph.num_vertices(), size),
    ))
}

/// Outcome of a Monte Carlo run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EstimateReport {
    pub trials: u64,
    pub successes: u64,
    pub estimate: f64,
    /// Normal-approximation 95% half-width, `1.96·√(p̂(1-p̂)/trials)`.
    pub half_width: f64,
    pub rng_seed: u64,
}

impl EstimateReport {
    fn new(trials: u64, successes: u64, rng_seed: u64) -> Self {
        let estimate = successes as f64 / trials as f64;
        let half_width = 1.96 * (estimate * (1.0 - estimate) / trials as f64).sqrt();
        Self {
            trials,
            successes,
            estimate,
            half_width,
            rng_seed,
        }
    }
}

/// Number of independent random streams trials are split across. Fixed so
/// that results do not depend on the thread count.
pub const MC_STREAMS: u64 = 64;

/// Estimates the success probability of a uniformly random `size`-seed.
///
/// Trials are split over [`MC_STREAMS`] ChaCha8 streams keyed by `rng_seed`;
/// each draw partially shuffles the vertex ids and seeds the first `size`.
pub fn monte_carlo_probability(
    graph: &Graph,
    k: usize,
    size: usize,
    trials: u64,
    rng_seed: u64,
) -> Result<EstimateReport> {
    let n = graph.num_vertices();
    if size > n {
        return Err(Error::SizeTooLarge {
            size,
            num_vertices: n,
        });
    }
    if trials == 0 {
        return Err(Error::Parse("trials must be at least 1".into()));
    }
    let successes: u64 = (0..MC_STREAMS)
        .into_par_iter()
        .map(|stream| {
            let share = trials / MC_STREAMS + u64::from(stream < trials % MC_STREAMS);
            let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
            rng.set_stream(stream);
            let mut sim = Simulator::new(graph, k);
            let mut ids: Vec<usize> = graph.vertices().collect();
            let mut hits = 0;
            for _ in 0..share {
                let (chosen, _) = ids.partial_shuffle(&mut rng, size);
                if sim.converts(chosen) {
                    hits += 1;
                }
            }
            hits
        })
        .sum();
    Ok(EstimateReport::new(trials, successes, rng_seed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_corona, build_double_corona};
    use crate::search::DEFAULT_BUDGET;

    fn frac(num: u64, den: u64) -> ExactProbability {
        ExactProbability::from_u64(num, den)
    }

    #[test]
    fn big_binomials() {
        assert_eq!(binomial(45, 19).to_string(), "2438362177020");
        assert_eq!(
            binomial(100, 50).to_string(),
            "100891344545564193334812497256"
        );
        assert_eq!(binomial(4, 7), BigUint::zero());
    }

    #[test]
    fn formula_examples() {
        assert_eq!(success_probability_corona(3, 1, 2), Ok(frac(1, 5)));
        assert_eq!(success_probability_corona(3, 1, 3), Ok(frac(1, 2)));
        assert_eq!(
            success_probability_corona(5, 2, 5),
            Ok(ExactProbability::one())
        );
        assert!(matches!(
            success_probability_corona(4, 0, 2),
            Err(Error::BlockSizeTooSmall { .. })
        ));
        assert!(success_probability_corona(2, 1, 2).is_err());
    }

    #[test]
    fn resilience_examples() {
        assert_eq!(resilience_factor(3, 1, 2), Ok(frac(4, 5)));
        assert_eq!(resilience_factor(5, 2, 5), Ok(ExactProbability::zero()));
        assert_eq!(resilience_factor(3, 1, 3), Ok(frac(1, 2)));
    }

    #[test]
    fn threshold_one_is_certain() {
        for n in 3..8 {
            for p in 1..4 {
                assert_eq!(
                    success_probability_corona(n, p, 1),
                    Ok(ExactProbability::one())
                );
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        let g = build_corona(3, 1).unwrap();
        assert_eq!(
            enumeration_probability(&g, 2, 4, DEFAULT_BUDGET),
            Ok(frac(1, 5))
        );
        assert_eq!(
            enumeration_probability(&g, 2, 6, DEFAULT_BUDGET),
            Ok(ExactProbability::one())
        );
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(frac(1, 5).to_decimal(10), "0.2000000000");
        assert_eq!(frac(2, 3).to_decimal(4), "0.6667");
        assert_eq!(frac(1, 3).to_decimal(0), "0");
        assert_eq!(ExactProbability::one().to_decimal(3), "1.000");
        let json = serde_json::to_value(frac(1, 5)).unwrap();
        assert_eq!(
            json,
            serde_json::json!({"num": "1", "den": "5", "decimal": "0.2000000000"})
        );
        assert_eq!(
            serde_json::from_value::<ExactProbability>(json).unwrap(),
            frac(1, 5)
        );
    }

    #[test]
    fn monte_carlo_full_size_always_succeeds() {
        let g = build_double_corona(4, 1).unwrap();
        let report = monte_carlo_probability(&g, 3, 12, 500, 7).unwrap();
        assert_eq!(report.successes, 500);
        assert_eq!(report.estimate, 1.0);
        assert_eq!(report.half_width, 0.0);
    }

    #[test]
    fn monte_carlo_is_reproducible() {
        let g = build_corona(3, 1).unwrap();
        let a = monte_carlo_probability(&g, 2, 4, 10_000, 42).unwrap();
        let b = monte_carlo_probability(&g, 2, 4, 10_000, 42).unwrap();
        assert_eq!(a, b);
        assert!(monte_carlo_probability(&g, 2, 7, 10, 1).is_err());
        assert!(monte_carlo_probability(&g, 2, 4, 0, 1).is_err());
    }
}
