//! The partially commutative free Lie algebra inside the truncated monoid
//! algebra, with its Lyndon basis.
//!
//! Each Lyndon element `a` expands, through its standard bracketing, to a
//! homogeneous Lie polynomial `ℓ(a)`. Its smallest trace is `a` itself with
//! coefficient `1`, and every other trace is strictly larger with the same
//! multidegree. That unit-triangular shape lets any Lie polynomial be written in
//! the basis by repeatedly cancelling its smallest trace.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::CommutationGraph;
use crate::lyndon::{self, is_lyndon_element, LyndonError, LyndonTree};
use crate::tensor::{Polynomial, TensorError};
use crate::traces::{self, Trace, TraceError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("not a Lie element: smallest remaining trace {trace} is not a Lyndon element")]
    NotInLieSubalgebra { trace: String },
    #[error("polynomial is not homogeneous of degree {0}")]
    NonHomogeneous(usize),
    #[error("degree {degree} exceeds truncation degree {truncation}")]
    DegreeExceedsTruncation { degree: usize, truncation: usize },
    #[error("elimination did not advance past {0}")]
    Stalled(String),
    #[error(transparent)]
    Lyndon(#[from] LyndonError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error(transparent)]
    Trace(#[from] TraceError),
}

/// Integer coordinates of a degree-`k` Lie element in the Lyndon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LyndonCoordinates {
    degree: usize,
    entries: BTreeMap<Trace, BigInt>,
}

impl LyndonCoordinates {
    pub fn zero(degree: usize) -> Self {
        LyndonCoordinates { degree, entries: BTreeMap::new() }
    }

    /// Unit vector on a single basis element.
    pub fn basis_vector(m: Trace) -> Self {
        let mut entries = BTreeMap::new();
        let degree = m.len();
        entries.insert(m, BigInt::one());
        LyndonCoordinates { degree, entries }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, m: &Trace) -> BigInt {
        self.entries.get(m).cloned().unwrap_or_default()
    }

    /// Entries in increasing trace order.
    pub fn entries(&self) -> impl ExactSizeIterator<Item = (&Trace, &BigInt)> {
        self.entries.iter()
    }

    pub fn neg(&self) -> Self {
        let entries = self.entries.iter().map(|(m, c)| (m.clone(), -c)).collect();
        LyndonCoordinates { degree: self.degree, entries }
    }

    pub fn to_document(&self, g: &CommutationGraph) -> CoordinatesDocument {
        CoordinatesDocument {
            degree: self.degree,
            terms: self
                .entries
                .iter()
                .map(|(m, c)| CoordinateTerm { lyndon: m.labels(g), coeff: c.to_string() })
                .collect(),
        }
    }

    pub fn from_document(g: &CommutationGraph, doc: &CoordinatesDocument) -> Result<Self, LieError> {
        let mut entries = BTreeMap::new();
        for term in &doc.terms {
            let m = traces::parse_trace(g, &term.lyndon.join(" "))?;
            if m.len() != doc.degree || !is_lyndon_element(&m) {
                return Err(LyndonError::NotLyndon(m.display(g).to_string()).into());
            }
            let c: BigInt = term.coeff.parse().map_err(|_| TensorError::BadCoefficient(term.coeff.clone()))?;
            if !c.is_zero() {
                entries.insert(m, c);
            }
        }
        Ok(LyndonCoordinates { degree: doc.degree, entries })
    }
}

/// JSON form: `{"degree": k, "terms": [{"lyndon": ["v1", "v2"], "coeff": "1"}]}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CoordinatesDocument {
    pub degree: usize,
    pub terms: Vec<CoordinateTerm>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CoordinateTerm {
    pub lyndon: Vec<String>,
    pub coeff: String,
}

/// The Lyndon basis of the Lie algebra of a commutation graph, with a shared
/// cache of bracket expansions.
///
/// The cache is keyed by Lyndon element and only ever gains entries whose value
/// is a pure function of the key, so concurrent readers always agree.
pub struct LyndonBasis {
    graph: Arc<CommutationGraph>,
    expansions: RwLock<HashMap<Trace, Polynomial>>,
}

impl LyndonBasis {
    pub fn new(graph: Arc<CommutationGraph>) -> Self {
        LyndonBasis { graph, expansions: RwLock::new(HashMap::new()) }
    }

    pub fn graph(&self) -> &Arc<CommutationGraph> {
        &self.graph
    }

    /// Tree of a Lyndon element.
    pub fn tree(&self, m: &Trace) -> Result<LyndonTree, LieError> {
        Ok(LyndonTree::new(&self.graph, m)?)
    }

    /// Basis elements of degree `k`, sorted.
    pub fn elements(&self, k: usize) -> Result<Vec<LyndonTree>, LieError> {
        if k == 0 {
            return Ok(Vec::new());
        }
        Ok(lyndon::enumerate_lyndon(&self.graph, k)?.pop().unwrap_or_default())
    }

    pub fn graded_rank(&self, k: usize) -> Result<usize, LieError> {
        graded_rank(&self.graph, k)
    }

    /// `ℓ(t)` as a polynomial truncated at `truncation`.
    pub fn expand(&self, t: &LyndonTree, truncation: usize) -> Result<Polynomial, LieError> {
        if t.len() > truncation {
            return Err(LieError::DegreeExceedsTruncation { degree: t.len(), truncation });
        }
        Ok(self.expand_homogeneous(t)?.with_truncation(truncation))
    }

    // Expansion at truncation |t|, memoized.
    fn expand_homogeneous(&self, t: &LyndonTree) -> Result<Polynomial, LieError> {
        if let Some(p) = self.expansions.read().expect("expansion cache poisoned").get(t.trace()) {
            return Ok(p.clone());
        }
        let n = t.len();
        let p = match t.children() {
            None => Polynomial::monomial(&self.graph, n, t.trace().clone(), BigInt::one()),
            Some((left, right)) => {
                let l = self.expand_homogeneous(left)?.with_truncation(n);
                let r = self.expand_homogeneous(right)?.with_truncation(n);
                l.lie_bracket(&r)?
            }
        };
        self.expansions
            .write()
            .expect("expansion cache poisoned")
            .entry(t.trace().clone())
            .or_insert_with(|| p.clone());
        Ok(p)
    }

    /// Writes a homogeneous degree-`k` Lie polynomial in the Lyndon basis.
    ///
    /// Repeatedly takes the smallest trace `m` with coefficient `c`, which must
    /// be a Lyndon element, and subtracts `c * ℓ(m)`. The smallest trace strictly
    /// increases at every step.
    pub fn coordinates(&self, p: &Polynomial, k: usize) -> Result<LyndonCoordinates, LieError> {
        if !p.is_homogeneous_of_degree(k) {
            return Err(LieError::NonHomogeneous(k));
        }
        if k > p.truncation() {
            return Err(LieError::DegreeExceedsTruncation { degree: k, truncation: p.truncation() });
        }
        let mut rest = p.clone();
        let mut entries = BTreeMap::new();
        while let Some((m, c)) = rest.min_term() {
            let (m, c) = (m.clone(), c.clone());
            if !is_lyndon_element(&m) {
                return Err(LieError::NotInLieSubalgebra { trace: m.display(&self.graph).to_string() });
            }
            let basis = self.expand(&self.tree(&m)?, p.truncation())?;
            rest = rest.checked_sub(&basis.scale(&c))?;
            if rest.min_term().is_some_and(|(next, _)| *next <= m) {
                return Err(LieError::Stalled(m.display(&self.graph).to_string()));
            }
            entries.insert(m, c);
        }
        Ok(LyndonCoordinates { degree: k, entries })
    }

    /// `Σ c_m ℓ(m)` as a polynomial truncated at `truncation`.
    pub fn evaluate(&self, coords: &LyndonCoordinates, truncation: usize) -> Result<Polynomial, LieError> {
        let mut out = Polynomial::zero(&self.graph, truncation);
        for (m, c) in coords.entries() {
            out = out.checked_add(&self.expand(&self.tree(m)?, truncation)?.scale(c))?;
        }
        Ok(out)
    }

    /// Coordinates of `[ℓ(a), ℓ(b)]`.
    pub fn structure_constants(&self, a: &LyndonTree, b: &LyndonTree) -> Result<LyndonCoordinates, LieError> {
        let degree = a.len() + b.len();
        match a.trace().cmp(b.trace()) {
            std::cmp::Ordering::Equal => Ok(LyndonCoordinates::zero(degree)),
            std::cmp::Ordering::Greater => Ok(self.structure_constants(b, a)?.neg()),
            std::cmp::Ordering::Less => {
                let bracket = self.expand(a, degree)?.lie_bracket(&self.expand(b, degree)?)?;
                self.coordinates(&bracket, degree)
            }
        }
    }
}

/// Number of Lyndon elements of length `k`, which is the rank of the degree-`k`
/// piece of the Lie algebra.
pub fn graded_rank(g: &CommutationGraph, k: usize) -> Result<usize, LieError> {
    if k == 0 {
        return Ok(0);
    }
    Ok(traces::enumerate_traces(g, k)?.iter().filter(|m| is_lyndon_element(m)).count())
}
