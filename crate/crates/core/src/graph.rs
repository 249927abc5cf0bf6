//! Undirected simple graphs and the cycle / complete / corona / double-corona
//! families.
//!
//! Product families use a fixed vertex numbering so that seed sets and traces
//! can be compared across runs:
//!
//! * `C_n ⊙ K_p`: ids `0..n` are the inner cycle `Inner(1..=n)` in cycle
//!   order, then block `i` occupies `n + (i-1)p .. n + ip`.
//! * `C_n ⊙⊙ K_p`: ids `0..n` are `Inner`, `n..2n` are `Outer`, then block
//!   `i` occupies `2n + (i-1)p .. 2n + ip`.
//!
//! Role indices are 1-based, vertex ids 0-based.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexId = usize;

/// An immutable undirected simple graph stored as sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<VertexId>>,
    num_edges: usize,
    roles: Option<Vec<VertexRole>>,
    family: Option<FamilySpec>,
}

impl Graph {
    /// Builds a graph from an edge list. Self-loops, repeated edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(num_vertices: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); num_vertices];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= num_vertices {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        num_vertices,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Self {
            adjacency,
            num_edges: edges.len(),
            roles: None,
            family: None,
        })
    }

    fn with_roles(mut self, family: FamilySpec, roles: Vec<VertexRole>) -> Self {
        debug_assert_eq!(roles.len(), self.num_vertices());
        self.roles = Some(roles);
        self.family = Some(family);
        self
    }

    pub fn num_vertices(&self) -> usize {
        self.adjacency.len()
    }

    pub fn num_edges(&self) -> usize {
        self.num_edges
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.num_vertices()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Degree histogram as `degree -> vertex count`.
    pub fn degree_histogram(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for v in self.vertices() {
            *hist.entry(self.degree(v)).or_insert(0) += 1;
        }
        hist
    }

    pub fn roles(&self) -> Option<&[VertexRole]> {
        self.roles.as_deref()
    }

    pub fn role(&self, v: VertexId) -> Option<VertexRole> {
        self.roles.as_ref().map(|r| r[v])
    }

    /// The family this graph was built from, if any.
    pub fn family(&self) -> Option<FamilySpec> {
        self.family
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            num_vertices: self.num_vertices(),
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
            roles: self
                .roles
                .iter()
                .flat_map(|r| r.iter().enumerate().map(|(v, role)| (v, role.to_string())))
                .collect(),
        }
    }

    pub fn from_json(json: &GraphJson) -> Result<Self> {
        let edges: Vec<_> = json.edges.iter().map(|&[u, v]| (u, v)).collect();
        let mut graph = Self::from_edges(json.num_vertices, &edges)?;
        if !json.roles.is_empty() {
            let mut roles = Vec::with_capacity(json.num_vertices);
            for v in graph.vertices() {
                let label = json
                    .roles
                    .get(&v)
                    .ok_or_else(|| Error::Parse(format!("missing role for vertex {v}")))?;
                roles.push(label.parse()?);
            }
            if json.roles.len() != json.num_vertices {
                return Err(Error::Parse("role map has extra entries".into()));
            }
            graph.roles = Some(roles);
        }
        Ok(graph)
    }
}

/// Wire form of a [`Graph`]: `{"num_vertices", "edges", "roles"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub num_vertices: usize,
    pub edges: Vec<[VertexId; 2]>,
    #[serde(default)]
    pub roles: BTreeMap<VertexId, String>,
}

/// Structural role of a vertex in a product graph (1-based indices).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexRole {
    Inner(usize),
    Outer(usize),
    Block(usize, usize),
}

impl fmt::Display for VertexRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexRole::Inner(i) => write!(f, "Inner({i})"),
            VertexRole::Outer(i) => write!(f, "Outer({i})"),
            VertexRole::Block(i, j) => write!(f, "Block({i},{j})"),
        }
    }
}

impl FromStr for VertexRole {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidRole(s.to_string());
        let (name, rest) = s.trim().split_once('(').ok_or_else(bad)?;
        let args = rest.strip_suffix(')').ok_or_else(bad)?;
        let nums = args
            .split(',')
            .map(|a| a.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        match (name, nums.as_slice()) {
            ("Inner", &[i]) => Ok(VertexRole::Inner(i)),
            ("Outer", &[i]) => Ok(VertexRole::Outer(i)),
            ("Block", &[i, j]) => Ok(VertexRole::Block(i, j)),
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Cycle,
    Complete,
    Corona,
    DoubleCorona,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Corona => "corona",
            Family::DoubleCorona => "double-corona",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cycle" => Ok(Family::Cycle),
            "complete" => Ok(Family::Complete),
            "corona" => Ok(Family::Corona),
            "double-corona" | "double_corona" | "dcorona" => Ok(Family::DoubleCorona),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

/// A member of one of the supported families.
///
/// `n` is the cycle length and `p` the block size. `Cycle` ignores `p`;
/// `Complete` builds `K_p` and ignores `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub p: usize,
}

impl FamilySpec {
    pub fn cycle(n: usize) -> Self {
        Self {
            family: Family::Cycle,
            n,
            p: 0,
        }
    }

    pub fn complete(p: usize) -> Self {
        Self {
            family: Family::Complete,
            n: 0,
            p,
        }
    }

    pub fn corona(n: usize, p: usize) -> Self {
        Self {
            family: Family::Corona,
            n,
            p,
        }
    }

    pub fn double_corona(n: usize, p: usize) -> Self {
        Self {
            family: Family::DoubleCorona,
            n,
            p,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self.family {
            Family::Complete => Ok(()),
            _ if self.n < 3 => Err(Error::CycleTooShort(self.n)),
            _ => Ok(()),
        }
    }

    pub fn num_vertices(&self) -> usize {
        let (n, p) = (self.n, self.p);
        match self.family {
            Family::Cycle => n,
            Family::Complete => p,
            Family::Corona => n * (p + 1),
            Family::DoubleCorona => n * (p + 2),
        }
    }

    pub fn num_edges(&self) -> usize {
        let (n, p) = (self.n, self.p);
        match self.family {
            Family::Cycle => n,
            Family::Complete => p * p.saturating_sub(1) / 2,
            Family::Corona => n * (p * (p + 1) / 2 + 1),
            Family::DoubleCorona => n * ((p + 1) * (p + 2) / 2 + 1),
        }
    }

    fn block_base(&self) -> usize {
        match self.family {
            Family::Corona => self.n,
            Family::DoubleCorona => 2 * self.n,
            _ => 0,
        }
    }

    /// Canonical id of a role, or `None` if the role does not exist here.
    pub fn vertex(&self, role: VertexRole) -> Option<VertexId> {
        let (n, p) = (self.n, self.p);
        let in_cycle = |i: usize| (1..=n).contains(&i);
        match (self.family, role) {
            (Family::Corona | Family::DoubleCorona, VertexRole::Inner(i)) if in_cycle(i) => {
                Some(i - 1)
            }
            (Family::DoubleCorona, VertexRole::Outer(i)) if in_cycle(i) => Some(n + i - 1),
            (Family::Corona | Family::DoubleCorona, VertexRole::Block(i, j))
                if in_cycle(i) && (1..=p).contains(&j) =>
            {
                Some(self.block_base() + (i - 1) * p + (j - 1))
            }
            _ => None,
        }
    }

    pub fn inner(&self, i: usize) -> VertexId {
        self.vertex(VertexRole::Inner(i))
            .expect("inner index in range")
    }

    pub fn outer(&self, i: usize) -> VertexId {
        self.vertex(VertexRole::Outer(i))
            .expect("outer index in range")
    }

    pub fn block(&self, i: usize, j: usize) -> VertexId {
        self.vertex(VertexRole::Block(i, j))
            .expect("block index in range")
    }

    /// Role of a canonical id (product families only).
    pub fn role(&self, v: VertexId) -> Option<VertexRole> {
        let (n, p) = (self.n, self.p);
        if v >= self.num_vertices() {
            return None;
        }
        match self.family {
            Family::Corona | Family::DoubleCorona => {
                let base = self.block_base();
                Some(if v < n {
                    VertexRole::Inner(v + 1)
                } else if v < base {
                    VertexRole::Outer(v - n + 1)
                } else {
                    let off = v - base;
                    VertexRole::Block(off / p + 1, off % p + 1)
                })
            }
            _ => None,
        }
    }

    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        match self.family {
            Family::Cycle => build_cycle(self.n),
            Family::Complete => Ok(build_complete(self.p)),
            Family::Corona => build_corona(self.n, self.p),
            Family::DoubleCorona => build_double_corona(self.n, self.p),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, p) = (self.n, self.p);
        match self.family {
            Family::Cycle => write!(f, "C_{n}"),
            Family::Complete => write!(f, "K_{p}"),
            Family::Corona => write!(f, "C_{n} ⊙ K_{p}"),
            Family::DoubleCorona => write!(f, "C_{n} ⊙⊙ K_{p}"),
        }
    }
}

fn cycle_edges(offset: usize, n: usize) -> impl Iterator<Item = (VertexId, VertexId)> {
    (0..n).map(move |i| (offset + i, offset + (i + 1) % n))
}

fn clique_edges(ids: &[VertexId]) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
    ids.iter()
        .enumerate()
        .flat_map(move |(a, &u)| ids[a + 1..].iter().map(move |&v| (u, v)))
}

pub fn build_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::CycleTooShort(n));
    }
    let edges: Vec<_> = cycle_edges(0, n).collect();
    Graph::from_edges(n, &edges)
}

pub fn build_complete(p: usize) -> Graph {
    let ids: Vec<_> = (0..p).collect();
    let edges: Vec<_> = clique_edges(&ids).collect();
    Graph::from_edges(p, &edges).expect("clique edges are simple")
}

/// `C_n ⊙ K_p`: every inner vertex `v_i` is joined to all of block `i`.
pub fn build_corona(n: usize, p: usize) -> Result<Graph> {
    build_product(FamilySpec::corona(n, p))
}

/// `C_n ⊙⊙ K_p`: block `i` is joined to both `v_i` and `w_i`.
pub fn build_double_corona(n: usize, p: usize) -> Result<Graph> {
    build_product(FamilySpec::double_corona(n, p))
}

fn build_product(spec: FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let (n, p) = (spec.n, spec.p);
    let double = spec.family == Family::DoubleCorona;
    let mut edges: Vec<_> = cycle_edges(0, n).collect();
    if double {
        edges.extend(cycle_edges(n, n));
    }
    for i in 1..=n {
        let block: Vec<_> = (1..=p).map(|j| spec.block(i, j)).collect();
        edges.extend(clique_edges(&block));
        for &u in &block {
            edges.push((spec.inner(i), u));
            if double {
                edges.push((spec.outer(i), u));
            }
        }
    }
    let roles = (0..spec.num_vertices())
        .map(|v| spec.role(v).expect("id in range"))
        .collect();
    Ok(Graph::from_edges(spec.num_vertices(), &edges)?.with_roles(spec, roles))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_symmetric(g: &Graph) -> bool {
        g.vertices().all(|v| {
            g.neighbors(v)
                .iter()
                .all(|&u| u != v && g.neighbors(u).binary_search(&v).is_ok())
        })
    }

    #[test]
    fn cycles() {
        let g = build_cycle(3).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (3, 3));
        assert!(g.vertices().all(|v| g.degree(v) == 2));
        let g = build_cycle(8).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (8, 8));
        assert_eq!(build_cycle(2), Err(Error::CycleTooShort(2)));
    }

    #[test]
    fn complete_graphs() {
        let g = build_complete(0);
        assert_eq!((g.num_vertices(), g.num_edges()), (0, 0));
        let g = build_complete(1);
        assert_eq!((g.num_vertices(), g.num_edges()), (1, 0));
        let g = build_complete(4);
        assert_eq!((g.num_vertices(), g.num_edges()), (4, 6));
    }

    #[test]
    fn corona_counts_and_degrees() {
        let g = build_corona(8, 3).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (32, 56));

        let g = build_corona(3, 0).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (3, 3));
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            build_cycle(3).unwrap().edges().collect::<Vec<_>>()
        );

        let g = build_corona(5, 3).unwrap();
        assert_eq!(g.num_vertices(), 20);
        for v in g.vertices() {
            let expected = match g.role(v).unwrap() {
                VertexRole::Inner(_) => 5,
                VertexRole::Block(..) => 3,
                VertexRole::Outer(_) => unreachable!(),
            };
            assert_eq!(g.degree(v), expected, "vertex {v}");
        }
        assert!(is_symmetric(&g));
        assert_eq!(build_corona(2, 3), Err(Error::CycleTooShort(2)));
    }

    #[test]
    fn double_corona_counts_and_degrees() {
        let g = build_double_corona(5, 3).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (25, 55));

        let g = build_double_corona(3, 5).unwrap();
        assert_eq!(g.num_vertices(), 21);
        for v in g.vertices() {
            let expected = match g.role(v).unwrap() {
                VertexRole::Inner(_) | VertexRole::Outer(_) => 7,
                VertexRole::Block(..) => 6,
            };
            assert_eq!(g.degree(v), expected, "vertex {v}");
        }
        assert!(is_symmetric(&g));
    }

    #[test]
    fn double_corona_without_blocks_is_two_cycles() {
        let g = build_double_corona(4, 0).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (8, 8));
        for v in 0..4 {
            assert!(g.neighbors(v).iter().all(|&u| u < 4));
        }
        for v in 4..8 {
            assert!(g.neighbors(v).iter().all(|&u| u >= 4));
        }
    }

    #[test]
    fn block_vertices_see_inner_and_outer() {
        let spec = FamilySpec::double_corona(4, 2);
        let g = spec.build().unwrap();
        let u = spec.block(3, 2);
        assert!(g.neighbors(u).contains(&spec.inner(3)));
        assert!(g.neighbors(u).contains(&spec.outer(3)));
        assert_eq!(g.role(u), Some(VertexRole::Block(3, 2)));
    }

    #[test]
    fn equal_counts_across_constructions() {
        for n in 3..12 {
            for p in 1..8 {
                let a = FamilySpec::corona(n, p);
                let b = FamilySpec::double_corona(n, p - 1);
                assert_eq!(a.num_vertices(), b.num_vertices());
                assert_eq!(a.num_edges(), b.num_edges());
            }
        }
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(Graph::from_edges(2, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange {
                vertex: 2,
                num_vertices: 2
            })
        );
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn role_labels_parse() {
        for role in [
            VertexRole::Inner(3),
            VertexRole::Outer(1),
            VertexRole::Block(2, 5),
        ] {
            assert_eq!(role.to_string().parse::<VertexRole>().unwrap(), role);
        }
        assert!("Block(1)".parse::<VertexRole>().is_err());
        assert!("Middle(1)".parse::<VertexRole>().is_err());
    }

    #[test]
    fn json_shape() {
        let g = build_corona(3, 1).unwrap();
        let json = serde_json::to_value(g.to_json()).unwrap();
        assert_eq!(json["num_vertices"], 6);
        assert_eq!(json["edges"][0], serde_json::json!([0, 1]));
        assert_eq!(json["roles"]["0"], "Inner(1)");
        assert_eq!(json["roles"]["3"], "Block(1,1)");
        let back = Graph::from_json(&serde_json::from_value(json).unwrap()).unwrap();
        assert_eq!(back.to_json(), g.to_json());
    }
}
