//! Exhaustive search oracles for small instances.
//!
//! Seeds of a given size are enumerated in lexicographic order of canonical
//! ids. Each size is cut into contiguous rank ranges that run in parallel;
//! per-range tallies are summed and the witness is the lowest-ranked
//! converting seed, so results do not depend on how the work was split.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::closed_form::ConversionNumber;
use crate::dynamics::{required_low_degree_vertices, SeedSet, Simulator};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Default ceiling on the number of simulated seeds per request.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Environment variable that overrides [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "THRESHOLDLAB_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of seeds simulated before the search refuses.
    pub budget: u64,
    /// Largest seed size tried; `None` means `|V|`.
    pub size_limit: Option<usize>,
    /// Only enumerate supersets of the low-degree vertices.
    pub prune: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            size_limit: None,
            prune: true,
        }
    }
}

impl SearchConfig {
    /// Default config with the budget taken from `THRESHOLDLAB_BUDGET` when set.
    pub fn from_env() -> Self {
        let budget = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_BUDGET);
        Self {
            budget,
            ..Self::default()
        }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeTally {
    pub examined: u64,
    pub converting: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub minimum: ConversionNumber,
    pub witness: Option<SeedSet>,
    pub sets_examined: u64,
    /// Seed size to tally; every listed size was enumerated completely.
    pub tallies: BTreeMap<usize, SizeTally>,
}

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        let num = (n - i) as u128;
        match acc.checked_mul(num) {
            Some(v) => acc = v / (i as u128 + 1),
            None => return u128::MAX,
        }
    }
    acc
}

/// The lexicographically `rank`-th `choose`-subset of `0..pool`.
fn unrank(mut rank: u128, pool: usize, choose: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(choose);
    let mut x = 0;
    for i in 0..choose {
        loop {
            let below = binomial_u128(pool - x - 1, choose - i - 1);
            if rank < below {
                break;
            }
            rank -= below;
            x += 1;
        }
        out.push(x);
        x += 1;
    }
    out
}

fn advance(idx: &mut [usize], pool: usize) -> bool {
    let choose = idx.len();
    for i in (0..choose).rev() {
        if idx[i] < pool - choose + i {
            idx[i] += 1;
            for j in i + 1..choose {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[derive(Debug, Clone, Copy, Default)]
struct Scan {
    tally: SizeTally,
    first_hit: Option<u128>,
}

impl Scan {
    fn merge(self, other: Scan) -> Scan {
        Scan {
            tally: SizeTally {
                examined: self.tally.examined + other.tally.examined,
                converting: self.tally.converting + other.tally.converting,
            },
            first_hit: match (self.first_hit, other.first_hit) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            },
        }
    }
}

/// Simulates every seed `fixed ∪ X` with `X` a `choose`-subset of `pool`.
fn scan(graph: &Graph, k: usize, fixed: &[VertexId], pool: &[VertexId], choose: usize) -> Scan {
    let total = binomial_u128(pool.len(), choose);
    if total == 0 {
        return Scan::default();
    }
    let chunks = (rayon::current_num_threads() as u128 * 8).min(total).max(1);
    let chunk_len = total.div_ceil(chunks);
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * chunk_len;
            let end = (start + chunk_len).min(total);
            let mut out = Scan::default();
            if start >= end {
                return out;
            }
            let mut sim = Simulator::new(graph, k);
            let mut idx = unrank(start, pool.len(), choose);
            let mut seed: Vec<VertexId> = fixed.to_vec();
            for rank in start..end {
                seed.truncate(fixed.len());
                seed.extend(idx.iter().map(|&i| pool[i]));
                out.tally.examined += 1;
                if sim.converts(&seed) {
                    out.tally.converting += 1;
                    out.first_hit.get_or_insert(rank);
                }
                if rank + 1 < end {
                    advance(&mut idx, pool.len());
                }
            }
            out
        })
        .reduce(Scan::default, Scan::merge)
}

/// Smallest seed size with a converting seed, found by trying sizes in
/// increasing order. With pruning on, only supersets of
/// `{v : deg(v) < k}` are tried.
///
/// Before each size the search checks that the sets examined so far plus
/// that size's count stay within `config.budget`, and refuses otherwise.
pub fn brute_force_min(graph: &Graph, k: usize, config: &SearchConfig) -> Result<SearchReport> {
    let n = graph.num_vertices();
    let required = if config.prune {
        required_low_degree_vertices(graph, k)
    } else {
        SeedSet::default()
    };
    let pool: Vec<VertexId> = graph
        .vertices()
        .filter(|&v| !required.contains(v))
        .collect();
    let limit = config.size_limit.unwrap_or(n).min(n);
    let mut tallies = BTreeMap::new();
    let mut examined: u64 = 0;
    for size in required.len()..=limit {
        let choose = size - required.len();
        let count = binomial_u128(pool.len(), choose);
        let needed = examined as u128 + count;
        if needed > config.budget as u128 {
            return Err(Error::BudgetExceeded {
                required: needed,
                budget: config.budget,
            });
        }
        let result = scan(graph, k, required.as_slice(), &pool, choose);
        examined += result.tally.examined;
        tallies.insert(size, result.tally);
        if let Some(rank) = result.first_hit {
            let picked = unrank(rank, pool.len(), choose);
            let witness = SeedSet::new(required.iter().chain(picked.into_iter().map(|i| pool[i])));
            return Ok(SearchReport {
                minimum: ConversionNumber::from_minimum(size, n),
                witness: Some(witness),
                sets_examined: examined,
                tallies,
            });
        }
    }
    Err(Error::SizeLimitReached(limit))
}

/// Number of converting seeds of exactly `size` vertices, over all
/// `C(|V|, size)` subsets.
pub fn count_converting_sets(graph: &Graph, k: usize, size: usize, budget: u64) -> Result<u64> {
    let n = graph.num_vertices();
    if size > n {
        return Err(Error::SizeTooLarge {
            size,
            num_vertices: n,
        });
    }
    let total = binomial_u128(n, size);
    if total > budget as u128 {
        return Err(Error::BudgetExceeded {
            required: total,
            budget,
        });
    }
    let pool: Vec<VertexId> = graph.vertices().collect();
    Ok(scan(graph, k, &[], &pool, size).tally.converting)
}
