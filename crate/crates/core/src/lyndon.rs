//! Lyndon words, Lyndon elements of the trace monoid, and their standard
//! factorization.
//!
//! A trace is a Lyndon element exactly when its standard word is a Lyndon
//! word, so enumeration filters the standard words of each length. Every
//! Lyndon element of length at least two carries a standard factorization
//! `m = x y` (Lyndon `x`, `y`, with `y` as small as possible) which induces
//! a bracketing of `m`, stored as a [`LyndonTree`].

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::graph::{CommutationGraph, Vertex};
use crate::traces::{self, Trace, TraceError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LyndonError {
    #[error("{0} is not a Lyndon element")]
    NotLyndon(String),
    #[error("a standard factorization needs length at least 2")]
    TooShort,
    #[error(transparent)]
    Trace(#[from] TraceError),
}

/// `w` is nonempty and strictly smaller than each of its proper suffixes.
pub fn is_lyndon_word<T: Ord>(w: &[T]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

pub fn is_lyndon_element(m: &Trace) -> bool {
    is_lyndon_word(&m.word())
}

/// Standard factorization `S(m) = (x, y)` of a Lyndon element.
///
/// The standard word of `m` is the concatenation of the standard words of its
/// factors, so it suffices to try every split point of `std(m)` and keep the
/// Lyndon pair with the smallest right factor. Cancellativity makes that pair
/// unique.
pub fn standard_factorization(g: &CommutationGraph, m: &Trace) -> Result<(Trace, Trace), LyndonError> {
    if !is_lyndon_element(m) {
        return Err(LyndonError::NotLyndon(m.display(g).to_string()));
    }
    if m.len() < 2 {
        return Err(LyndonError::TooShort);
    }
    let word = m.word();
    let mut best: Option<(Trace, Trace)> = None;
    for i in 1..word.len() {
        let right = traces::canonicalize(g, &word[i..])?;
        if best.as_ref().is_some_and(|(_, y)| &right >= y) || !is_lyndon_element(&right) {
            continue;
        }
        let left = traces::canonicalize(g, &word[..i])?;
        if is_lyndon_element(&left) {
            best = Some((left, right));
        }
    }
    Ok(best.expect("every Lyndon element of length >= 2 has a Lyndon split of its standard word"))
}

/// A Lyndon element together with the bracketing induced by standard
/// factorization. Subtrees are shared.
#[derive(Clone, PartialEq, Eq)]
pub struct LyndonTree {
    trace: Trace,
    split: Option<Arc<(LyndonTree, LyndonTree)>>,
}

#[allow(clippy::len_without_is_empty)]
impl LyndonTree {
    pub fn generator(g: &CommutationGraph, v: Vertex) -> Self {
        LyndonTree { trace: Trace::letter(g, v), split: None }
    }

    /// Builds the tree of a Lyndon element by recursive standard factorization.
    pub fn new(g: &CommutationGraph, m: &Trace) -> Result<Self, LyndonError> {
        if !is_lyndon_element(m) {
            return Err(LyndonError::NotLyndon(m.display(g).to_string()));
        }
        if m.len() == 1 {
            return Ok(LyndonTree { trace: m.clone(), split: None });
        }
        let (x, y) = standard_factorization(g, m)?;
        Ok(Self::join(m.clone(), Self::new(g, &x)?, Self::new(g, &y)?))
    }

    pub(crate) fn join(trace: Trace, left: LyndonTree, right: LyndonTree) -> Self {
        LyndonTree { trace, split: Some(Arc::new((left, right))) }
    }

    pub fn trace(&self) -> &Trace {
        &self.trace
    }

    pub fn len(&self) -> usize {
        self.trace.len()
    }

    pub fn is_generator(&self) -> bool {
        self.split.is_none()
    }

    /// Returns the generator index of a leaf.
    pub fn as_generator(&self) -> Option<Vertex> {
        match self.split {
            None => self.trace.letters().next(),
            Some(_) => None,
        }
    }

    pub fn children(&self) -> Option<(&LyndonTree, &LyndonTree)> {
        self.split.as_deref().map(|(l, r)| (l, r))
    }

    /// The standard factorization, if any.
    pub fn factorization(&self) -> Option<(&Trace, &Trace)> {
        self.children().map(|(l, r)| (&l.trace, &r.trace))
    }

    /// Nested bracket text such as `[[v1,v3],v2]`.
    pub fn bracket<'a>(&'a self, g: &'a CommutationGraph) -> BracketDisplay<'a> {
        BracketDisplay { tree: self, graph: g }
    }
}

impl fmt::Debug for LyndonTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.children() {
            None => write!(f, "{:?}", self.trace),
            Some((l, r)) => write!(f, "[{l:?},{r:?}]"),
        }
    }
}

pub struct BracketDisplay<'a> {
    tree: &'a LyndonTree,
    graph: &'a CommutationGraph,
}

impl fmt::Display for BracketDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tree.children() {
            None => write!(f, "{}", self.tree.trace.display(self.graph)),
            Some((l, r)) => write!(f, "[{},{}]", l.bracket(self.graph), r.bracket(self.graph)),
        }
    }
}

/// Lyndon elements of length `1..=max_len`, grouped by length and sorted.
/// `result[k - 1]` holds the elements of length `k`.
pub fn enumerate_lyndon(g: &CommutationGraph, max_len: usize) -> Result<Vec<Vec<LyndonTree>>, LyndonError> {
    enumerate_lyndon_bounded(g, max_len, traces::DEFAULT_MAX_TRACES)
}

pub fn enumerate_lyndon_bounded(
    g: &CommutationGraph,
    max_len: usize,
    cap: usize,
) -> Result<Vec<Vec<LyndonTree>>, LyndonError> {
    let mut by_len: Vec<Vec<LyndonTree>> = Vec::with_capacity(max_len);
    for n in 1..=max_len {
        let mut level = Vec::new();
        for m in traces::enumerate_traces_bounded(g, n, cap)? {
            if !is_lyndon_element(&m) {
                continue;
            }
            let tree = if n == 1 {
                LyndonTree { trace: m, split: None }
            } else {
                let (x, y) = standard_factorization(g, &m)?;
                let left = find_tree(&by_len, &x);
                let right = find_tree(&by_len, &y);
                LyndonTree::join(m, left, right)
            };
            level.push(tree);
        }
        by_len.push(level);
    }
    Ok(by_len)
}

fn find_tree(by_len: &[Vec<LyndonTree>], m: &Trace) -> LyndonTree {
    let level = &by_len[m.len() - 1];
    let i =
        level.binary_search_by(|t| t.trace.cmp(m)).expect("factors of a Lyndon element are shorter Lyndon elements");
    level[i].clone()
}

/// Number of Lyndon elements of each length `1..=max_len`.
pub fn lyndon_counts(g: &CommutationGraph, max_len: usize) -> Result<Vec<usize>, LyndonError> {
    let mut counts = Vec::with_capacity(max_len);
    for n in 1..=max_len {
        counts.push(traces::enumerate_traces(g, n)?.iter().filter(|m| is_lyndon_element(m)).count());
    }
    Ok(counts)
}
