//! Commutation graphs.
//!
//! A [`CommutationGraph`] fixes the generating set of the group and the trace
//! monoid: vertex `i` is the generator `v_{i+1}`, vertices are totally ordered by
//! index, and an edge between two vertices means the generators commute.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Index of a vertex in its graph. Vertex order is index order.
pub type Vertex = usize;

/// Hard ceiling imposed by the bitset representation of vertex sets.
pub const MAX_SUPPORTED_VERTICES: usize = 64;

/// Default bound on the number of vertices accepted by [`parse_graph`].
pub const DEFAULT_MAX_VERTICES: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("malformed graph document: {0}")]
    Malformed(String),
    #[error("graph has no vertices")]
    Empty,
    #[error("duplicate vertex name `{0}`")]
    DuplicateVertex(String),
    #[error("edge endpoint `{0}` is not a vertex")]
    UnknownEndpoint(String),
    #[error("self-loop at vertex `{0}`")]
    SelfLoop(String),
    #[error("graph has {count} vertices, more than the configured maximum of {max}")]
    TooManyVertices { count: usize, max: usize },
    #[error("vertex name `{0}` is empty or contains reserved characters")]
    BadVertexName(String),
}

/// A set of vertices, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(0)
    }

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(1 << v)
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: Vertex) -> bool {
        v < MAX_SUPPORTED_VERTICES && self.0 & (1 << v) != 0
    }

    pub fn insert(&mut self, v: Vertex) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: Vertex) {
        self.0 &= !(1 << v);
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = Vertex> {
        let bits = self.0;
        (0..MAX_SUPPORTED_VERTICES).filter(move |&v| bits & (1 << v) != 0)
    }

    pub fn to_vec(self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut set = VertexSet::empty();
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// The JSON form of a graph: `{"vertices": [...], "edges": [[a, b], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

/// Finite simple graph whose edges declare which generators commute.
///
/// Immutable once built. `Send + Sync`, so it can be shared behind an `Arc`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CommutationGraph {
    labels: Vec<String>,
    // neighbours[i] = vertices adjacent to i
    neighbours: Vec<VertexSet>,
}

impl CommutationGraph {
    /// Builds a graph from labels and index pairs.
    pub fn new<S: Into<String>>(
        labels: impl IntoIterator<Item = S>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        Self::check_labels(&labels, MAX_SUPPORTED_VERTICES)?;
        let mut neighbours = vec![VertexSet::empty(); labels.len()];
        for (a, b) in edges {
            let name = |v: Vertex| labels.get(v).cloned().unwrap_or_else(|| format!("#{v}"));
            if a >= labels.len() {
                return Err(GraphError::UnknownEndpoint(name(a)));
            }
            if b >= labels.len() {
                return Err(GraphError::UnknownEndpoint(name(b)));
            }
            if a == b {
                return Err(GraphError::SelfLoop(name(a)));
            }
            neighbours[a].insert(b);
            neighbours[b].insert(a);
        }
        Ok(CommutationGraph { labels, neighbours })
    }

    /// Graph with no edges (free group / free monoid).
    pub fn edgeless(r: usize) -> Self {
        Self::new((1..=r).map(|i| format!("v{i}")), std::iter::empty()).expect("valid edgeless graph")
    }

    /// Complete graph (free abelian group).
    pub fn complete(r: usize) -> Self {
        let edges = (0..r).flat_map(|a| (a + 1..r).map(move |b| (a, b)));
        Self::new((1..=r).map(|i| format!("v{i}")), edges).expect("valid complete graph")
    }

    /// Three vertices with a single edge `v2 -- v3`.
    pub fn minigraph() -> Self {
        Self::new(["v1", "v2", "v3"], [(1, 2)]).expect("valid minigraph")
    }

    fn check_labels(labels: &[String], max: usize) -> Result<(), GraphError> {
        if labels.is_empty() {
            return Err(GraphError::Empty);
        }
        let max = max.min(MAX_SUPPORTED_VERTICES);
        if labels.len() > max {
            return Err(GraphError::TooManyVertices { count: labels.len(), max });
        }
        let mut seen = HashMap::new();
        for (i, label) in labels.iter().enumerate() {
            if !is_valid_label(label) {
                return Err(GraphError::BadVertexName(label.clone()));
            }
            if seen.insert(label.as_str(), i).is_some() {
                return Err(GraphError::DuplicateVertex(label.clone()));
            }
        }
        Ok(())
    }

    pub fn from_document(doc: &GraphDocument, max_vertices: usize) -> Result<Self, GraphError> {
        Self::check_labels(&doc.vertices, max_vertices)?;
        let index: HashMap<&str, Vertex> = doc.vertices.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let lookup =
            |name: &String| index.get(name.as_str()).copied().ok_or_else(|| GraphError::UnknownEndpoint(name.clone()));
        let mut edges = Vec::with_capacity(doc.edges.len());
        for [a, b] in &doc.edges {
            let (ia, ib) = (lookup(a)?, lookup(b)?);
            if ia == ib {
                return Err(GraphError::SelfLoop(a.clone()));
            }
            edges.push((ia, ib));
        }
        Self::new(doc.vertices.iter().cloned(), edges)
    }

    pub fn to_document(&self) -> GraphDocument {
        let edges = self.edges().into_iter().map(|(a, b)| [self.labels[a].clone(), self.labels[b].clone()]).collect();
        GraphDocument { vertices: self.labels.clone(), edges }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("graph document serializes")
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.labels.len()
    }

    pub fn all_vertices(&self) -> VertexSet {
        self.vertices().collect()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    pub fn vertex_by_label(&self, name: &str) -> Option<Vertex> {
        self.labels.iter().position(|l| l == name)
    }

    /// True iff `a` and `b` are joined by an edge. Never true for `a == b`.
    pub fn adjacent(&self, a: Vertex, b: Vertex) -> bool {
        self.neighbours[a].contains(b)
    }

    pub fn neighbours(&self, v: Vertex) -> VertexSet {
        self.neighbours[v]
    }

    /// Edges as index pairs `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.vertices().flat_map(|a| self.neighbours[a].iter().filter(move |&b| b > a).map(move |b| (a, b))).collect()
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| {
            let mut others = set;
            others.remove(v);
            others.is_subset(self.neighbours[v])
        })
    }

    /// Labels of a vertex set, in vertex order.
    pub fn set_labels(&self, set: VertexSet) -> Vec<String> {
        set.iter().map(|v| self.labels[v].clone()).collect()
    }
}

impl fmt::Debug for CommutationGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CommutationGraph").field("vertices", &self.labels).field("edges", &self.edges()).finish()
    }
}

/// Labels are used verbatim in word syntax, so they may not contain the
/// characters that syntax reserves.
pub fn is_valid_label(label: &str) -> bool {
    !label.is_empty() && !label.chars().any(|c| c.is_whitespace() || "[],^".contains(c))
}

/// Parses a graph document with the default vertex bound.
pub fn parse_graph(text: &str) -> Result<CommutationGraph, GraphError> {
    parse_graph_bounded(text, DEFAULT_MAX_VERTICES)
}

pub fn parse_graph_bounded(text: &str, max_vertices: usize) -> Result<CommutationGraph, GraphError> {
    let doc: GraphDocument = serde_json::from_str(text).map_err(|e| GraphError::Malformed(e.to_string()))?;
    CommutationGraph::from_document(&doc, max_vertices)
}

/// All cliques of `g`, including the empty one, ordered by size and then
/// lexicographically by sorted vertex list.
pub fn cliques(g: &CommutationGraph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    extend_cliques(g, VertexSet::empty(), g.all_vertices(), 0, &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.to_vec().cmp(&b.to_vec())));
    out
}

fn extend_cliques(
    g: &CommutationGraph,
    current: VertexSet,
    candidates: VertexSet,
    from: Vertex,
    out: &mut Vec<VertexSet>,
) {
    out.push(current);
    for v in candidates.iter().filter(|&v| v >= from) {
        let mut next = current;
        next.insert(v);
        extend_cliques(g, next, candidates.intersection(g.neighbours(v)), v + 1, out);
    }
}
