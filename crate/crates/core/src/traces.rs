//! The free partially commutative monoid (trace monoid) of a commutation graph.
//!
//! A trace is stored by its standard representative: the lexicographically
//! greatest word among all words obtained from one another by swapping adjacent
//! commuting letters. The standard word is produced greedily, by repeatedly
//! emitting the largest letter that can be moved to the front of what remains.
//!
//! Traces are ordered by comparing standard words: the empty word is smallest,
//! a proper prefix precedes its extensions, and otherwise the first differing
//! letter decides. Traces of different lengths are compared by the same literal
//! rule; the order laws that mix lengths are exercised by the test suite.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use thiserror::Error;

use crate::graph::{CommutationGraph, Vertex, VertexSet};

/// Default cap on the number of traces [`enumerate_traces`] will produce.
pub const DEFAULT_MAX_TRACES: usize = 2_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TraceError {
    #[error("vertex index {index} out of range for a graph with {count} vertices")]
    VertexOutOfRange { index: usize, count: usize },
    #[error("unknown vertex name `{0}`")]
    UnknownVertex(String),
    #[error("enumeration exceeds the cap of {0} traces")]
    ResourceLimit(usize),
}

/// An element of the trace monoid, held in standard form.
#[derive(Clone)]
pub struct Trace {
    word: Vec<u8>,
    multidegree: Vec<u32>,
}

impl Trace {
    /// The identity element.
    pub fn empty(g: &CommutationGraph) -> Self {
        Trace { word: Vec::new(), multidegree: vec![0; g.vertex_count()] }
    }

    pub fn letter(g: &CommutationGraph, v: Vertex) -> Self {
        let mut multidegree = vec![0; g.vertex_count()];
        multidegree[v] += 1;
        Trace { word: vec![v as u8], multidegree }
    }

    /// The standard word, as vertex indices.
    pub fn word(&self) -> Vec<Vertex> {
        self.word.iter().map(|&v| v as Vertex).collect()
    }

    pub fn letters(&self) -> impl DoubleEndedIterator<Item = Vertex> + ExactSizeIterator + '_ {
        self.word.iter().map(|&v| v as Vertex)
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Letter counts, indexed by vertex.
    pub fn multidegree(&self) -> &[u32] {
        &self.multidegree
    }

    pub fn supp(&self) -> VertexSet {
        self.letters().collect()
    }

    /// Vertices that can start some representative of the trace.
    pub fn init(&self, g: &CommutationGraph) -> VertexSet {
        boundary_letters(g, self.letters())
    }

    /// Vertices that can end some representative of the trace.
    pub fn term(&self, g: &CommutationGraph) -> VertexSet {
        boundary_letters(g, self.letters().rev())
    }

    /// `supp(m)` together with every vertex that fails to commute with some
    /// letter of `m`.
    pub fn zeta(&self, g: &CommutationGraph) -> VertexSet {
        let supp = self.supp();
        let mut out = supp;
        for u in supp.iter() {
            for v in g.vertices() {
                if v != u && !g.adjacent(u, v) {
                    out.insert(v);
                }
            }
        }
        out
    }

    /// True iff no representative contains a factor `vv`.
    pub fn is_square_free(&self, g: &CommutationGraph) -> bool {
        let word = &self.word;
        for (i, &v) in word.iter().enumerate() {
            let v = v as Vertex;
            for &u in &word[i + 1..] {
                let u = u as Vertex;
                if u == v {
                    return false;
                }
                if !g.adjacent(u, v) {
                    break;
                }
            }
        }
        true
    }

    pub fn display<'a>(&'a self, g: &'a CommutationGraph) -> TraceDisplay<'a> {
        TraceDisplay { trace: self, graph: g }
    }

    /// Vertex names of the standard word.
    pub fn labels(&self, g: &CommutationGraph) -> Vec<String> {
        self.letters().map(|v| g.label(v).to_owned()).collect()
    }
}

fn boundary_letters(g: &CommutationGraph, letters: impl Iterator<Item = Vertex>) -> VertexSet {
    let mut out = VertexSet::empty();
    // vertices that can no longer reach the boundary
    let mut blocked = VertexSet::empty();
    let all = g.all_vertices();
    for v in letters {
        if !blocked.contains(v) {
            out.insert(v);
        }
        blocked = blocked.union(VertexSet::from_bits(all.bits() & !g.neighbours(v).bits()));
        if blocked == all {
            break;
        }
    }
    out
}

impl PartialEq for Trace {
    fn eq(&self, other: &Self) -> bool {
        self.word == other.word
    }
}

impl Eq for Trace {}

impl Hash for Trace {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.word.hash(state);
    }
}

impl PartialOrd for Trace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Trace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word.cmp(&other.word)
    }
}

impl fmt::Debug for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Trace(")?;
        for (i, v) in self.letters().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "v{}", v + 1)?;
        }
        write!(f, ")")
    }
}

pub struct TraceDisplay<'a> {
    trace: &'a Trace,
    graph: &'a CommutationGraph,
}

impl fmt::Display for TraceDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.trace.is_empty() {
            return write!(f, "1");
        }
        for (i, v) in self.trace.letters().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", self.graph.label(v))?;
        }
        Ok(())
    }
}

/// Standard form of an arbitrary word over the vertices.
pub fn canonicalize(g: &CommutationGraph, letters: &[Vertex]) -> Result<Trace, TraceError> {
    if let Some(&bad) = letters.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(TraceError::VertexOutOfRange { index: bad, count: g.vertex_count() });
    }
    let raw: Vec<u8> = letters.iter().map(|&v| v as u8).collect();
    Ok(canonical_from_bytes(g, raw))
}

fn canonical_from_bytes(g: &CommutationGraph, mut remaining: Vec<u8>) -> Trace {
    let mut multidegree = vec![0u32; g.vertex_count()];
    for &v in &remaining {
        multidegree[v as usize] += 1;
    }
    let all = g.all_vertices().bits();
    let mut word = Vec::with_capacity(remaining.len());
    while !remaining.is_empty() {
        let mut blocked = 0u64;
        let mut best: Option<(u8, usize)> = None;
        for (i, &v) in remaining.iter().enumerate() {
            if blocked & (1 << v) == 0 && best.is_none_or(|(b, _)| v > b) {
                best = Some((v, i));
            }
            blocked |= all & !g.neighbours(v as Vertex).bits();
            if blocked == all {
                break;
            }
        }
        let (v, i) = best.expect("first letter is always available");
        word.push(v);
        remaining.remove(i);
    }
    Trace { word, multidegree }
}

/// True iff `letters` is already the standard representative of its trace.
pub fn is_standard_word(g: &CommutationGraph, letters: &[Vertex]) -> bool {
    canonicalize(g, letters).is_ok_and(|t| t.letters().eq(letters.iter().copied()))
}

/// Product in the monoid.
pub fn multiply(g: &CommutationGraph, a: &Trace, b: &Trace) -> Trace {
    if a.is_empty() {
        return b.clone();
    }
    if b.is_empty() {
        return a.clone();
    }
    let mut raw = Vec::with_capacity(a.len() + b.len());
    raw.extend_from_slice(&a.word);
    raw.extend_from_slice(&b.word);
    canonical_from_bytes(g, raw)
}

/// Total order on traces.
pub fn compare(a: &Trace, b: &Trace) -> Ordering {
    a.cmp(b)
}

/// Every trace of length exactly `n`, sorted.
pub fn enumerate_traces(g: &CommutationGraph, n: usize) -> Result<Vec<Trace>, TraceError> {
    enumerate_traces_bounded(g, n, DEFAULT_MAX_TRACES)
}

pub fn enumerate_traces_bounded(g: &CommutationGraph, n: usize, cap: usize) -> Result<Vec<Trace>, TraceError> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    extend_standard_words(g, n, &mut prefix, &mut out, cap)?;
    Ok(out)
}

// Standard words are prefix closed, so a DFS that prunes non-standard prefixes
// visits exactly the standard words, in lexicographic order.
fn extend_standard_words(
    g: &CommutationGraph,
    n: usize,
    prefix: &mut Vec<u8>,
    out: &mut Vec<Trace>,
    cap: usize,
) -> Result<(), TraceError> {
    if prefix.len() == n {
        if out.len() >= cap {
            return Err(TraceError::ResourceLimit(cap));
        }
        out.push(canonical_from_bytes(g, prefix.clone()));
        return Ok(());
    }
    for v in g.vertices() {
        prefix.push(v as u8);
        if can_extend(g, prefix) {
            extend_standard_words(g, n, prefix, out, cap)?;
        }
        prefix.pop();
    }
    Ok(())
}

// `word` minus its last letter is standard; decide whether `word` is.
// The new last letter `v` could only move left past a run of letters it
// commutes with; the word stays standard iff none of them is smaller than `v`.
fn can_extend(g: &CommutationGraph, word: &[u8]) -> bool {
    let (&v, rest) = word.split_last().expect("nonempty");
    for &u in rest.iter().rev() {
        if !g.adjacent(u as Vertex, v as Vertex) {
            return true;
        }
        if u < v {
            return false;
        }
    }
    true
}

/// Parses whitespace-separated vertex names into a trace. A lone `1` is the
/// empty trace unless some vertex is named `1`.
pub fn parse_trace(g: &CommutationGraph, text: &str) -> Result<Trace, TraceError> {
    if text.trim() == "1" && g.vertex_by_label("1").is_none() {
        return Ok(Trace::empty(g));
    }
    let letters = text
        .split_whitespace()
        .map(|name| g.vertex_by_label(name).ok_or_else(|| TraceError::UnknownVertex(name.to_owned())))
        .collect::<Result<Vec<_>, _>>()?;
    canonicalize(g, &letters)
}
