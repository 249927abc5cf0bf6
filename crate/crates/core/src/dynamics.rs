//! The synchronous irreversible k-threshold process.
//!
//! An uncolored vertex becomes colored at step `t` when at least `k` of its
//! neighbors were colored at step `t - 1`. Colored vertices stay colored.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Colored vertices, one bit per canonical id.
pub type ColorState = FixedBitSet;

/// An initial set of colored vertices, kept sorted and deduplicated.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SeedSet(Vec<VertexId>);

impl SeedSet {
    pub fn new(ids: impl IntoIterator<Item = VertexId>) -> Self {
        let mut ids: Vec<_> = ids.into_iter().collect();
        ids.sort_unstable();
        ids.dedup();
        Self(ids)
    }

    /// Like [`SeedSet::new`] but rejects ids outside `graph`.
    pub fn for_graph(graph: &Graph, ids: impl IntoIterator<Item = VertexId>) -> Result<Self> {
        let seed = Self::new(ids);
        seed.check(graph)?;
        Ok(seed)
    }

    pub fn all(graph: &Graph) -> Self {
        Self(graph.vertices().collect())
    }

    pub fn check(&self, graph: &Graph) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= graph.num_vertices() => Err(Error::VertexOutOfRange {
                vertex: v,
                num_vertices: graph.num_vertices(),
            }),
            _ => Ok(()),
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    pub fn is_subset(&self, other: &SeedSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn with(&self, v: VertexId) -> Self {
        Self::new(self.iter().chain(Some(v)))
    }

    pub fn to_state(&self, num_vertices: usize) -> ColorState {
        let mut bits = FixedBitSet::with_capacity(num_vertices);
        for v in self.iter() {
            bits.insert(v);
        }
        bits
    }

    pub fn from_state(state: &ColorState) -> Self {
        Self(state.ones().collect())
    }
}

impl FromIterator<VertexId> for SeedSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        Self::new(iter)
    }
}

/// One synchronous update: every vertex with at least `k` colored neighbors
/// in `colored` joins the colored set.
pub fn step(graph: &Graph, colored: &ColorState, k: usize) -> ColorState {
    let mut next = colored.clone();
    for v in graph.vertices() {
        if colored.contains(v) {
            continue;
        }
        let mut seen = 0;
        for &u in graph.neighbors(v) {
            if colored.contains(u) {
                seen += 1;
                if seen >= k {
                    break;
                }
            }
        }
        if seen >= k {
            next.insert(v);
        }
    }
    next
}

/// Snapshots `S_0, S_1, ..., S_T` of one run of the process.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProcessTrace {
    pub k: usize,
    pub seed: SeedSet,
    pub snapshots: Vec<ColorState>,
    pub converted: bool,
}

impl ProcessTrace {
    /// Number of productive steps `T`.
    pub fn steps(&self) -> usize {
        self.snapshots.len() - 1
    }

    pub fn final_state(&self) -> &ColorState {
        self.snapshots.last().expect("trace holds S_0")
    }

    pub fn to_json(&self) -> TraceJson {
        TraceJson {
            k: self.k,
            seed: self.seed.as_slice().to_vec(),
            converted: self.converted,
            steps: self.snapshots.iter().map(|s| s.ones().collect()).collect(),
        }
    }
}

/// Wire form of a [`ProcessTrace`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceJson {
    pub k: usize,
    pub seed: Vec<VertexId>,
    pub converted: bool,
    pub steps: Vec<Vec<VertexId>>,
}

/// Runs the process from `seed` until nothing changes, every vertex is
/// colored, or `max_steps` updates have been applied (default `|V|`).
///
/// A fixpoint is always reached within `|V|` steps, since every step that
/// changes the state colors at least one new vertex.
pub fn run(graph: &Graph, seed: &SeedSet, k: usize, max_steps: Option<usize>) -> ProcessTrace {
    let n = graph.num_vertices();
    let max_steps = max_steps.unwrap_or(n).max(1);
    let mut snapshots = vec![seed.to_state(n)];
    while snapshots.len() <= max_steps {
        let current = snapshots.last().unwrap();
        if current.count_ones(..) == n {
            break;
        }
        let next = step(graph, current, k);
        if next == *current {
            break;
        }
        snapshots.push(next);
    }
    let converted = snapshots.last().unwrap().count_ones(..) == n;
    ProcessTrace {
        k,
        seed: seed.clone(),
        snapshots,
        converted,
    }
}

pub fn is_conversion_set(graph: &Graph, seed: &SeedSet, k: usize) -> bool {
    Simulator::new(graph, k).converts(seed.as_slice())
}

/// `U = {v : deg(v) < k}`; every conversion set contains `U`.
pub fn required_low_degree_vertices(graph: &Graph, k: usize) -> SeedSet {
    SeedSet(graph.vertices().filter(|&v| graph.degree(v) < k).collect())
}

/// Computes the final colored set with a counting worklist instead of
/// synchronous rounds. The limit of the process is the same either way; only
/// the intermediate snapshots differ. Buffers are reused between calls.
pub struct Simulator<'g> {
    graph: &'g Graph,
    k: usize,
    colored: FixedBitSet,
    hits: Vec<u32>,
    queue: Vec<VertexId>,
}

impl<'g> Simulator<'g> {
    pub fn new(graph: &'g Graph, k: usize) -> Self {
        let n = graph.num_vertices();
        Self {
            graph,
            k,
            colored: FixedBitSet::with_capacity(n),
            hits: vec![0; n],
            queue: Vec::with_capacity(n),
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    /// Colors reachable from `seed`; stops early once everything is colored.
    fn close(&mut self, seed: &[VertexId]) -> usize {
        let n = self.graph.num_vertices();
        if self.k == 0 {
            self.colored.insert_range(..);
            return n;
        }
        self.colored.clear();
        self.hits.iter_mut().for_each(|h| *h = 0);
        self.queue.clear();
        for &v in seed {
            if !self.colored.put(v) {
                self.queue.push(v);
            }
        }
        let mut count = self.queue.len();
        let k = self.k as u32;
        while let Some(v) = self.queue.pop() {
            if count == n {
                break;
            }
            for &u in self.graph.neighbors(v) {
                if self.colored.contains(u) {
                    continue;
                }
                self.hits[u] += 1;
                if self.hits[u] >= k {
                    self.colored.insert(u);
                    self.queue.push(u);
                    count += 1;
                }
            }
        }
        count
    }

    pub fn converts(&mut self, seed: &[VertexId]) -> bool {
        self.close(seed) == self.graph.num_vertices()
    }

    /// The fixpoint reached from `seed`.
    pub fn closure(&mut self, seed: &[VertexId]) -> ColorState {
        let n = self.graph.num_vertices();
        if self.close(seed) == n {
            let mut all = FixedBitSet::with_capacity(n);
            all.insert_range(..);
            return all;
        }
        self.colored.clone()
    }
}
