//! Randomised property checks shared by the property and acceptance suites.
//! Each check runs a proptest `TestRunner` and reports the first failure.

#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use thresholdlab::closed_form::ConversionNumber;
use thresholdlab::constructions::{pattern_to_seed, seed_to_pattern, BlockLabel, BlockPattern};
use thresholdlab::dynamics::{
    is_conversion_set, required_low_degree_vertices, run, step, SeedSet, Simulator, TraceJson,
};
use thresholdlab::graph::{FamilySpec, Graph, GraphJson};
use thresholdlab::probability::ExactProbability;

pub const CASES: u32 = 1000;

pub fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    })
}

/// A product-family graph or a random simple graph.
pub fn any_graph() -> impl Strategy<Value = Graph> {
    let product = (any::<bool>(), 3usize..=7, 0usize..=4).prop_map(|(double, n, p)| {
        let spec = if double {
            FamilySpec::double_corona(n, p)
        } else {
            FamilySpec::corona(n, p)
        };
        spec.build().unwrap()
    });
    let random = (1usize..=12)
        .prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let len = pairs.len();
            (
                Just(n),
                Just(pairs),
                proptest::collection::vec(any::<bool>(), len),
            )
        })
        .prop_map(|(n, pairs, keep)| {
            let edges: Vec<_> = pairs
                .into_iter()
                .zip(keep)
                .filter_map(|(e, k)| k.then_some(e))
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        });
    prop_oneof![product, random]
}

/// Graph, threshold and a seed whose density varies from sparse to nearly full.
pub fn graph_k_seed() -> impl Strategy<Value = (Graph, usize, SeedSet)> {
    any_graph().prop_flat_map(|g| {
        let n = g.num_vertices();
        let max_k = (0..n).map(|v| g.degree(v)).max().unwrap_or(0) + 2;
        (
            Just(g),
            1..=max_k,
            (0.0f64..=1.0).prop_flat_map(move |density| {
                proptest::collection::vec(proptest::bool::weighted(density), n)
            }),
        )
            .prop_map(|(g, k, mask)| {
                let seed =
                    SeedSet::new(mask.iter().enumerate().filter_map(|(v, &b)| b.then_some(v)));
                (g, k, seed)
            })
    })
}

fn check<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    runner(cases)
        .run(&strategy, test)
        .map_err(|e| e.to_string())
}

/// `S_t ⊆ S_{t+1}`, the run ends at a fixpoint, and `T ≤ |V|`.
pub fn trace_monotone_and_bounded(cases: u32) -> Result<(), String> {
    check(cases, graph_k_seed(), |(g, k, seed)| {
        let trace = run(&g, &seed, k, None);
        prop_assert!(trace.steps() <= g.num_vertices());
        for w in trace.snapshots.windows(2) {
            prop_assert!(w[0].is_subset(&w[1]));
            prop_assert!(w[0] != w[1]);
        }
        let last = trace.final_state();
        prop_assert_eq!(&step(&g, last, k), last);
        prop_assert_eq!(trace.converted, last.count_ones(..) == g.num_vertices());
        prop_assert_eq!(&Simulator::new(&g, k).closure(seed.as_slice()), last);
        prop_assert_eq!(run(&g, &seed, k, None), trace);
        Ok(())
    })
}

/// Adding a vertex to a conversion set keeps it a conversion set.
pub fn superset_closure(cases: u32) -> Result<(), String> {
    let strategy = graph_k_seed().prop_flat_map(|(g, k, seed)| {
        let n = g.num_vertices();
        (Just(g), Just(k), Just(seed), 0..n.max(1))
    });
    check(cases, strategy, |(g, k, seed, extra)| {
        if g.num_vertices() == 0 {
            return Ok(());
        }
        if is_conversion_set(&g, &seed, k) {
            prop_assert!(is_conversion_set(&g, &seed.with(extra), k));
        } else {
            let smaller = SeedSet::new(seed.iter().filter(|&v| v != extra));
            prop_assert!(!is_conversion_set(&g, &smaller, k));
        }
        Ok(())
    })
}

/// Every conversion set contains the vertices of degree below `k`.
pub fn low_degree_necessity(cases: u32) -> Result<(), String> {
    check(cases, graph_k_seed(), |(g, k, seed)| {
        if is_conversion_set(&g, &seed, k) {
            prop_assert!(required_low_degree_vertices(&g, k).is_subset(&seed));
        }
        Ok(())
    })
}

/// `⌊(3n+3)/4⌋ = n - ⌊n/4⌋`.
#[allow(clippy::manual_div_ceil)]
pub fn floor_identity(cases: u32) -> Result<(), String> {
    check(cases, 3usize..=10_000, |n| {
        prop_assert_eq!((3 * n + 3) / 4, n - n / 4);
        Ok(())
    })
}

fn pattern_for(n: usize, p: usize) -> impl Strategy<Value = BlockPattern> {
    let mut labels = vec![
        BlockLabel::Blank,
        BlockLabel::Complete,
        BlockLabel::Outer,
        BlockLabel::Inner,
    ];
    if p >= 1 {
        labels.push(BlockLabel::Middle);
    }
    if p >= 2 {
        labels.push(BlockLabel::Two);
    }
    proptest::collection::vec(proptest::sample::select(labels), n).prop_map(BlockPattern::new)
}

/// Wire formats and the pattern calculus round-trip.
pub fn serialization_round_trips(cases: u32) -> Result<(), String> {
    check(cases, graph_k_seed(), |(g, k, seed)| {
        let json = serde_json::to_string(&g.to_json()).unwrap();
        let back = Graph::from_json(&serde_json::from_str::<GraphJson>(&json).unwrap()).unwrap();
        prop_assert_eq!(back.to_json(), g.to_json());

        let trace = run(&g, &seed, k, None);
        let text = serde_json::to_string(&trace.to_json()).unwrap();
        let parsed: TraceJson = serde_json::from_str(&text).unwrap();
        let replay = run(
            &back,
            &SeedSet::for_graph(&back, parsed.seed.clone()).unwrap(),
            parsed.k,
            None,
        );
        prop_assert_eq!(replay.to_json(), parsed);
        Ok(())
    })?;

    let patterns =
        (3usize..=9, 0usize..=4).prop_flat_map(|(n, p)| (Just(n), Just(p), pattern_for(n, p)));
    check(cases, patterns, |(n, p, pattern)| {
        let text = serde_json::to_string(&pattern).unwrap();
        prop_assert_eq!(
            serde_json::from_str::<BlockPattern>(&text).unwrap(),
            pattern.clone()
        );
        let seed = pattern_to_seed(&pattern, n, p).unwrap();
        let decoded = seed_to_pattern(&seed, n, p).unwrap();
        prop_assert_eq!(&decoded, &pattern);
        prop_assert_eq!(pattern_to_seed(&decoded, n, p).unwrap(), seed);
        Ok(())
    })?;

    check(cases, (0u64..1_000_000, 1u64..1_000_000), |(a, b)| {
        let (num, den) = (a.min(b), a.max(b).max(1));
        let prob = ExactProbability::from_u64(num, den);
        let text = serde_json::to_string(&prob).unwrap();
        prop_assert_eq!(
            serde_json::from_str::<ExactProbability>(&text).unwrap(),
            prob.clone()
        );
        prop_assert_eq!(prob.complement().complement(), prob);
        Ok(())
    })?;

    check(cases, (any::<bool>(), 0usize..10_000), |(finite, v)| {
        let value = if finite {
            ConversionNumber::Finite(v)
        } else {
            ConversionNumber::Inconvertible(v)
        };
        let text = serde_json::to_string(&value).unwrap();
        prop_assert_eq!(
            serde_json::from_str::<ConversionNumber>(&text).unwrap(),
            value
        );
        Ok(())
    })
}
