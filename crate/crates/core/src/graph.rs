//! Immutable simple undirected graphs over dense vertex indices, with the
//! domination and connectivity predicates everything else is built on.
//!
//! Vertices are `0..n`. Adjacency rows are 128-bit sets, so any graph this
//! crate constructs (including derived graphs) is capped at [`MAX_VERTICES`]
//! vertices. Edge lists are kept canonical: `(i, j)` with `i < j`, sorted
//! lexicographically, so equal graphs compare equal byte-for-byte and every
//! report is stable across runs.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported vertex count; one adjacency row is a single `u128`.
pub const MAX_VERTICES: usize = 128;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("graph order {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooLarge(usize),
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    EndpointOutOfRange(usize, usize, usize),
    #[error("edge ({0}, {0}) is a self-loop")]
    SelfLoop(usize),
    #[error("invalid graph JSON: {0}")]
    Json(String),
}

/// A set of vertices of some graph, stored as a 128-bit mask.
///
/// Cardinality queries are O(1) (hardware popcount). The `Ord` impl compares
/// raw masks and is only used for deterministic orderings in containers; it
/// is *not* the sorted-list lexicographic order used for witness tie-breaks.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet {
    bits: u128,
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet { bits: 0 };

    pub fn singleton(v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet { bits: 1u128 << v }
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet { bits: !0 }
        } else {
            VertexSet {
                bits: (1u128 << n) - 1,
            }
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        v < MAX_VERTICES && self.bits >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.bits |= 1u128 << v;
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.bits &= !(1u128 << v);
    }

    /// The set with `v` added; handy in search loops.
    pub fn with(&self, v: usize) -> VertexSet {
        let mut s = *self;
        s.insert(v);
        s
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// Smallest member, if any.
    pub fn min_vertex(&self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            Some(self.bits.trailing_zeros() as usize)
        }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.bits & other.bits != 0
    }

    /// Ascending iteration over members.
    pub fn iter(&self) -> impl Iterator<Item = usize> {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl std::ops::BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet {
            bits: self.bits | rhs.bits,
        }
    }
}

impl std::ops::BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet {
            bits: self.bits & rhs.bits,
        }
    }
}

impl std::ops::Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet {
            bits: self.bits & !rhs.bits,
        }
    }
}

impl std::ops::BitOrAssign for VertexSet {
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.bits |= rhs.bits;
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_vec().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let items = Vec::<usize>::deserialize(deserializer)?;
        for &v in &items {
            if v >= MAX_VERTICES {
                return Err(serde::de::Error::custom(format!(
                    "vertex {v} out of range (max {MAX_VERTICES})"
                )));
            }
        }
        Ok(items.into_iter().collect())
    }
}

/// Immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    edge_list: Vec<(usize, usize)>,
}

/// Wire format: `{"n": 4, "edges": [[0,1],[1,2]]}`.
#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds the canonical graph on `n` vertices from an edge list.
    /// Duplicate pairs and `(j, i)` reorderings collapse to a single edge.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(i, j) in edges {
            if i >= n || j >= n {
                return Err(GraphError::EndpointOutOfRange(i, j, n));
            }
            if i == j {
                return Err(GraphError::SelfLoop(i));
            }
            adj[i].insert(j);
            adj[j].insert(i);
        }
        let mut edge_list = Vec::new();
        for (i, row) in adj.iter().enumerate() {
            for j in row.iter() {
                if j > i {
                    edge_list.push((i, j));
                }
            }
        }
        Ok(Graph { n, adj, edge_list })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edge_list.len()
    }

    /// Canonical edge list: pairs `(i, j)` with `i < j`, lexicographic.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edge_list
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        assert!(v < self.n, "vertex {v} out of range 0..{}", self.n);
        self.adj[v]
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.n && j < self.n && self.adj[i].contains(j)
    }

    /// Position of edge `(i, j)` in the canonical edge list.
    pub fn edge_index(&self, i: usize, j: usize) -> Option<usize> {
        let key = (i.min(j), i.max(j));
        self.edge_list.binary_search(&key).ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.adj[v].len()).min().unwrap_or(0)
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.neighbors(v).with(v)
    }

    /// Edge present exactly when absent here; never any self-loops.
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if !self.adj[i].contains(j) {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(self.n, &edges).expect("complement of a valid graph is valid")
    }

    /// Connectivity of the subgraph induced on `within`.
    ///
    /// Empty and singleton sets count as connected; the conventions
    /// everything downstream relies on (a set may cover the whole graph,
    /// leaving nothing outside).
    pub fn is_connected_within(&self, within: VertexSet) -> bool {
        debug_assert!(within.is_subset_of(&self.vertex_set()));
        let start = match within.min_vertex() {
            None => return true,
            Some(v) => v,
        };
        let mut visited = VertexSet::singleton(start);
        let mut frontier = visited;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next |= self.adj[v] & within;
            }
            frontier = next - visited;
            visited |= frontier;
        }
        within.is_subset_of(&visited)
    }

    /// Connectivity of the whole graph.
    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertex_set())
    }

    /// Connected and acyclic.
    pub fn is_tree(&self) -> bool {
        self.size() + 1 == self.n && self.is_connected()
    }

    /// Every vertex has a closed neighborhood meeting `s`.
    pub fn is_dominating(&self, s: VertexSet) -> bool {
        debug_assert!(s.is_subset_of(&self.vertex_set()));
        let mut covered = s;
        for v in s.iter() {
            covered |= self.adj[v];
        }
        self.vertex_set().is_subset_of(&covered)
    }

    /// Dominating with connected induced subgraph.
    pub fn is_connected_dominating(&self, s: VertexSet) -> bool {
        self.is_dominating(s) && self.is_connected_within(s)
    }

    /// Dominating with connected remainder (the graph minus `s`).
    pub fn is_outer_connected_dominating(&self, s: VertexSet) -> bool {
        self.is_dominating(s) && self.is_connected_within(self.vertex_set() - s)
    }

    /// Subgraph induced on `within`, plus the map from new to old indices.
    pub fn induced(&self, within: VertexSet) -> (Graph, Vec<usize>) {
        let keep = within.to_vec();
        assert!(
            !keep.is_empty(),
            "induced subgraph needs at least one vertex"
        );
        let mut pos = vec![usize::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            pos[old] = new;
        }
        let mut edges = Vec::new();
        for &(i, j) in &self.edge_list {
            if within.contains(i) && within.contains(j) {
                edges.push((pos[i], pos[j]));
            }
        }
        let g = Graph::new(keep.len(), &edges).expect("induced subgraph of a valid graph");
        (g, keep)
    }

    pub fn from_json_str(s: &str) -> Result<Graph, GraphError> {
        let raw: GraphJson =
            serde_json::from_str(s).map_err(|e| GraphError::Json(e.to_string()))?;
        Graph::new(raw.n, &raw.edges)
    }

    pub fn to_json_string(&self) -> String {
        let raw = GraphJson {
            n: self.n,
            edges: self.edge_list.clone(),
        };
        serde_json::to_string(&raw).expect("graph JSON serialization cannot fail")
    }

    /// DOT rendering; `labels` overrides the default `v{i}` vertex names.
    pub fn to_dot(&self, labels: Option<&[String]>) -> String {
        let name = |v: usize| match labels {
            Some(ls) => ls[v].clone(),
            None => format!("v{v}"),
        };
        let mut out = String::from("graph g {\n");
        for v in 0..self.n {
            out.push_str(&format!("  n{} [label=\"{}\"];\n", v, name(v)));
        }
        for &(i, j) in &self.edge_list {
            out.push_str(&format!("  n{i} -- n{j};\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edge_list)
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GraphJson {
            n: self.n,
            edges: self.edge_list.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = GraphJson::deserialize(deserializer)?;
        Graph::new(raw.n, &raw.edges).map_err(serde::de::Error::custom)
    }
}
