//! Derived-graph constructors.
//!
//! Vertex numbering of every derived graph is fixed and documented on each
//! constructor, because witness sets are expressed against these indices:
//!
//! - middle/line graph: original vertices `0..n` first (middle graph only),
//!   then one vertex per edge in canonical edge order;
//! - corona: pendant of vertex `i` is `n + i`; the 2-corona appends the
//!   second path vertex as `2n + i`;
//! - join: the `p` added vertices are `n..n + p`.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TransformError {
    #[error("operation requires at least one edge")]
    NoEdges,
    #[error("join requires at least one added vertex")]
    EmptyJoin,
    #[error("operation requires a connected graph")]
    Disconnected,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Where a derived-graph vertex came from.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum VertexTag {
    /// Vertex `i` of the source graph.
    Original(usize),
    /// Edge `(i, j)`, `i < j`, of the source graph.
    Edge(usize, usize),
}

impl VertexTag {
    pub fn label(&self) -> String {
        match *self {
            VertexTag::Original(i) => format!("v{i}"),
            VertexTag::Edge(i, j) => format!("m_{i}_{j}"),
        }
    }
}

/// A graph whose vertices carry provenance back to a source graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub tags: Vec<VertexTag>,
}

impl LabeledGraph {
    pub fn labels(&self) -> Vec<String> {
        self.tags.iter().map(VertexTag::label).collect()
    }

    pub fn to_dot(&self) -> String {
        self.graph.to_dot(Some(&self.labels()))
    }

    /// Index of the vertex standing for source vertex `i`, if present.
    pub fn original_vertex(&self, i: usize) -> Option<usize> {
        self.tags.iter().position(|t| *t == VertexTag::Original(i))
    }

    /// Index of the vertex standing for source edge `(i, j)`, if present.
    pub fn edge_vertex(&self, i: usize, j: usize) -> Option<usize> {
        let tag = VertexTag::Edge(i.min(j), i.max(j));
        self.tags.iter().position(|t| *t == tag)
    }
}

/// Middle graph: one vertex per source vertex and per source edge; an edge
/// vertex is adjacent to its two endpoints and to every edge vertex sharing
/// an endpoint. Original vertices stay mutually non-adjacent.
pub fn middle_graph(g: &Graph) -> Result<LabeledGraph, TransformError> {
    if g.size() == 0 {
        return Err(TransformError::NoEdges);
    }
    let n = g.order();
    let src_edges = g.edges();
    let mut edges = Vec::new();
    for (k, &(i, j)) in src_edges.iter().enumerate() {
        edges.push((i, n + k));
        edges.push((j, n + k));
    }
    for k in 0..src_edges.len() {
        for l in k + 1..src_edges.len() {
            if shares_endpoint(src_edges[k], src_edges[l]) {
                edges.push((n + k, n + l));
            }
        }
    }
    let graph = Graph::new(n + src_edges.len(), &edges)?;
    let tags = (0..n)
        .map(VertexTag::Original)
        .chain(src_edges.iter().map(|&(i, j)| VertexTag::Edge(i, j)))
        .collect();
    Ok(LabeledGraph { graph, tags })
}

/// Line graph: one vertex per source edge, adjacent when the edges share an
/// endpoint.
pub fn line_graph(g: &Graph) -> Result<LabeledGraph, TransformError> {
    if g.size() == 0 {
        return Err(TransformError::NoEdges);
    }
    let src_edges = g.edges();
    let mut edges = Vec::new();
    for k in 0..src_edges.len() {
        for l in k + 1..src_edges.len() {
            if shares_endpoint(src_edges[k], src_edges[l]) {
                edges.push((k, l));
            }
        }
    }
    let graph = Graph::new(src_edges.len(), &edges)?;
    let tags = src_edges
        .iter()
        .map(|&(i, j)| VertexTag::Edge(i, j))
        .collect();
    Ok(LabeledGraph { graph, tags })
}

fn shares_endpoint(a: (usize, usize), b: (usize, usize)) -> bool {
    a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1
}

/// Corona with a single pendant: vertex `n + i` hangs off vertex `i`.
pub fn corona_k1(g: &Graph) -> Result<Graph, TransformError> {
    let n = g.order();
    let mut edges = g.edges().to_vec();
    edges.extend((0..n).map(|i| (i, n + i)));
    Ok(Graph::new(2 * n, &edges)?)
}

/// Corona with a pendant path of length two: `i - (n+i) - (2n+i)`.
pub fn corona_p2(g: &Graph) -> Result<Graph, TransformError> {
    let n = g.order();
    let mut edges = g.edges().to_vec();
    for i in 0..n {
        edges.push((i, n + i));
        edges.push((n + i, 2 * n + i));
    }
    Ok(Graph::new(3 * n, &edges)?)
}

/// Join with `p` mutually non-adjacent new vertices, each adjacent to all of
/// the base graph.
pub fn join_empty(g: &Graph, p: usize) -> Result<Graph, TransformError> {
    if p == 0 {
        return Err(TransformError::EmptyJoin);
    }
    let n = g.order();
    let mut edges = g.edges().to_vec();
    for i in 0..n {
        for j in 0..p {
            edges.push((i, n + j));
        }
    }
    Ok(Graph::new(n + p, &edges)?)
}

/// Deterministic spanning tree: breadth-first from vertex 0, visiting
/// neighbors in ascending order.
pub fn spanning_tree(g: &Graph) -> Result<Graph, TransformError> {
    if !g.is_connected() {
        return Err(TransformError::Disconnected);
    }
    let n = g.order();
    let mut visited = vec![false; n];
    visited[0] = true;
    let mut queue = std::collections::VecDeque::from([0usize]);
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    while let Some(v) = queue.pop_front() {
        for u in g.neighbors(v).iter() {
            if !visited[u] {
                visited[u] = true;
                edges.push((v.min(u), v.max(u)));
                queue.push_back(u);
            }
        }
    }
    Ok(Graph::new(n, &edges)?)
}
