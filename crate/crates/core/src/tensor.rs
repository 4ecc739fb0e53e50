//! Exact sparse arithmetic in the monoid algebra `Z[M]`, truncated at a fixed
//! degree `N`.
//!
//! A [`Polynomial`] is a finite integer combination of traces of length at most
//! `N`. Products drop every term of degree above `N`, so a truncated polynomial
//! with constant term `1` stands for a unit of the power-series completion,
//! known modulo degree `N + 1`. Every value carries its graph and truncation
//! degree and binary operations refuse to mix them.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{CommutationGraph, Vertex};
use crate::traces::{self, Trace, TraceError};

/// Default cap on the number of stored terms in any polynomial.
pub const DEFAULT_MAX_TERMS: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TensorError {
    #[error("operands live over different commutation graphs")]
    GraphMismatch,
    #[error("operands have truncation degrees {0} and {1}")]
    TruncationMismatch(usize, usize),
    #[error("constant term {0} is not +1 or -1, so the series is not a unit")]
    NotAUnit(String),
    #[error("result has more than {0} terms")]
    TooManyTerms(usize),
    #[error("term of degree {degree} exceeds truncation degree {truncation}")]
    DegreeExceedsTruncation { degree: usize, truncation: usize },
    #[error("bad coefficient `{0}`")]
    BadCoefficient(String),
    #[error(transparent)]
    Trace(#[from] TraceError),
}

#[derive(Clone)]
pub struct Polynomial {
    graph: Arc<CommutationGraph>,
    truncation: usize,
    max_terms: usize,
    terms: BTreeMap<Trace, BigInt>,
}

impl Polynomial {
    pub fn zero(graph: &Arc<CommutationGraph>, truncation: usize) -> Self {
        Polynomial { graph: Arc::clone(graph), truncation, max_terms: DEFAULT_MAX_TERMS, terms: BTreeMap::new() }
    }

    pub fn one(graph: &Arc<CommutationGraph>, truncation: usize) -> Self {
        Self::constant(graph, truncation, BigInt::one())
    }

    pub fn constant(graph: &Arc<CommutationGraph>, truncation: usize, c: BigInt) -> Self {
        let mut p = Self::zero(graph, truncation);
        p.add_term(Trace::empty(graph), c);
        p
    }

    /// The generator `v` as a degree-one element (zero when `N = 0`).
    pub fn generator(graph: &Arc<CommutationGraph>, truncation: usize, v: Vertex) -> Self {
        Self::monomial(graph, truncation, Trace::letter(graph, v), BigInt::one())
    }

    /// `c * m`, or zero if `|m| > N`.
    pub fn monomial(graph: &Arc<CommutationGraph>, truncation: usize, m: Trace, c: BigInt) -> Self {
        let mut p = Self::zero(graph, truncation);
        p.add_term(m, c);
        p
    }

    /// Collects terms, summing repeats and dropping anything above `N`.
    pub fn from_terms(
        graph: &Arc<CommutationGraph>,
        truncation: usize,
        terms: impl IntoIterator<Item = (Trace, BigInt)>,
    ) -> Self {
        let mut p = Self::zero(graph, truncation);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Sets the term cap carried by this value and everything computed from it.
    pub fn with_max_terms(mut self, max_terms: usize) -> Self {
        self.max_terms = max_terms;
        self
    }

    pub fn graph(&self) -> &Arc<CommutationGraph> {
        &self.graph
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    /// Re-truncates: lowering `N` drops terms, raising it keeps all terms.
    pub fn with_truncation(&self, truncation: usize) -> Self {
        let terms = self.terms.iter().filter(|(m, _)| m.len() <= truncation).map(|(m, c)| (m.clone(), c.clone()));
        Polynomial { terms: terms.collect(), truncation, ..self.empty_like() }
    }

    fn empty_like(&self) -> Self {
        Polynomial {
            graph: Arc::clone(&self.graph),
            truncation: self.truncation,
            max_terms: self.max_terms,
            terms: BTreeMap::new(),
        }
    }

    fn add_term(&mut self, m: Trace, c: BigInt) {
        if m.len() > self.truncation || c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_size(&self) -> Result<(), TensorError> {
        if self.terms.len() > self.max_terms {
            Err(TensorError::TooManyTerms(self.max_terms))
        } else {
            Ok(())
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<(), TensorError> {
        if !Arc::ptr_eq(&self.graph, &other.graph) && *self.graph != *other.graph {
            return Err(TensorError::GraphMismatch);
        }
        if self.truncation != other.truncation {
            return Err(TensorError::TruncationMismatch(self.truncation, other.truncation));
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing trace order.
    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&Trace, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Trace) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&Trace::empty(&self.graph))
    }

    /// The smallest trace with a nonzero coefficient.
    pub fn min_term(&self) -> Option<(&Trace, &BigInt)> {
        self.terms.iter().next()
    }

    /// The degree-`i` part.
    pub fn homogeneous_part(&self, i: usize) -> Self {
        let terms = self.terms.iter().filter(|(m, _)| m.len() == i).map(|(m, c)| (m.clone(), c.clone()));
        Polynomial { terms: terms.collect(), ..self.empty_like() }
    }

    /// Degrees with at least one nonzero term, increasing.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(Trace::len).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// Smallest positive degree with a nonzero part.
    pub fn lowest_positive_degree(&self) -> Option<usize> {
        self.terms.keys().map(Trace::len).filter(|&d| d > 0).min()
    }

    pub fn is_homogeneous_of_degree(&self, k: usize) -> bool {
        self.terms.keys().all(|m| m.len() == k)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, TensorError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out.check_size()?;
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, TensorError> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c));
        Polynomial { terms: terms.collect(), ..self.empty_like() }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return self.empty_like();
        }
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c * k));
        Polynomial { terms: terms.collect(), ..self.empty_like() }
    }

    /// Truncated product: the degree-`i` part of `ab` is `sum_j a_j b_{i-j}`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, TensorError> {
        self.check_compatible(other)?;
        let mut out = self.empty_like();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if a.len() + b.len() > self.truncation {
                    continue;
                }
                out.add_term(traces::multiply(&self.graph, a, b), ca * cb);
            }
            out.check_size()?;
        }
        Ok(out)
    }

    /// `ab - ba`.
    pub fn lie_bracket(&self, other: &Self) -> Result<Self, TensorError> {
        self.checked_mul(other)?.checked_sub(&other.checked_mul(self)?)
    }

    /// Inverse of a unit `+-1 + x`, modulo degree `N + 1`.
    ///
    /// For constant term `1` the homogeneous parts satisfy `c_0 = 1` and
    /// `c_i = -sum_{j=1..i} a_j c_{i-j}`.
    pub fn invert_unit(&self) -> Result<Self, TensorError> {
        let c0 = self.constant_term();
        if c0 == -BigInt::one() {
            return Ok(self.neg().invert_unit()?.neg());
        }
        if !c0.is_one() {
            return Err(TensorError::NotAUnit(c0.to_string()));
        }
        let parts: Vec<Polynomial> = (0..=self.truncation).map(|i| self.homogeneous_part(i)).collect();
        let mut inv_parts: Vec<Polynomial> = vec![Self::one(&self.graph, self.truncation)];
        for i in 1..=self.truncation {
            let mut acc = self.empty_like();
            for j in 1..=i {
                if parts[j].is_zero() || inv_parts[i - j].is_zero() {
                    continue;
                }
                acc = acc.checked_add(&parts[j].checked_mul(&inv_parts[i - j])?)?;
            }
            inv_parts.push(acc.neg());
        }
        let mut out = self.empty_like();
        for part in inv_parts {
            for (m, c) in part.terms {
                out.add_term(m, c);
            }
        }
        out.check_size()?;
        Ok(out)
    }

    /// `self^e` by repeated squaring; negative exponents need a unit.
    pub fn pow(&self, e: i64) -> Result<Self, TensorError> {
        let base = if e < 0 { self.invert_unit()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut result = Self::one(&self.graph, self.truncation).with_max_terms(self.max_terms);
        let mut square = base;
        while n > 0 {
            if n & 1 == 1 {
                result = result.checked_mul(&square)?;
            }
            n >>= 1;
            if n > 0 {
                square = square.checked_mul(&square)?;
            }
        }
        Ok(result)
    }

    pub fn to_document(&self) -> PolynomialDocument {
        PolynomialDocument {
            truncation: self.truncation,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermDocument { coeff: c.to_string(), trace: m.labels(&self.graph) })
                .collect(),
        }
    }

    pub fn from_document(graph: &Arc<CommutationGraph>, doc: &PolynomialDocument) -> Result<Self, TensorError> {
        let mut p = Self::zero(graph, doc.truncation);
        for term in &doc.terms {
            let letters = term
                .trace
                .iter()
                .map(|name| graph.vertex_by_label(name).ok_or_else(|| TraceError::UnknownVertex(name.clone())))
                .collect::<Result<Vec<_>, _>>()?;
            if letters.len() > doc.truncation {
                return Err(TensorError::DegreeExceedsTruncation { degree: letters.len(), truncation: doc.truncation });
            }
            let c: BigInt = term.coeff.parse().map_err(|_| TensorError::BadCoefficient(term.coeff.clone()))?;
            p.add_term(traces::canonicalize(graph, &letters)?, c);
        }
        Ok(p)
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.truncation == other.truncation
            && (Arc::ptr_eq(&self.graph, &other.graph) || *self.graph == *other.graph)
            && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod deg {})", self, self.truncation + 1)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut by_degree: Vec<(&Trace, &BigInt)> = self.terms.iter().collect();
        by_degree.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(b.0)));
        for (i, (m, c)) in by_degree.into_iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let abs = c.abs();
            if m.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs} ")?;
                }
                let letters: Vec<&str> = m.letters().map(|v| self.graph.label(v)).collect();
                write!(f, "{}", letters.join("·"))?;
            }
        }
        Ok(())
    }
}

/// JSON form: `{"truncation": N, "terms": [{"coeff": "3", "trace": ["v1", "v2"]}]}`,
/// terms sorted by trace order.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PolynomialDocument {
    pub truncation: usize,
    pub terms: Vec<TermDocument>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermDocument {
    pub coeff: String,
    pub trace: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mini() -> Arc<CommutationGraph> {
        Arc::new(CommutationGraph::minigraph())
    }

    fn mono(g: &Arc<CommutationGraph>, n: usize, w: &[Vertex], c: i64) -> Polynomial {
        Polynomial::monomial(g, n, traces::canonicalize(g, w).unwrap(), BigInt::from(c))
    }

    fn sum(parts: &[Polynomial]) -> Polynomial {
        parts.iter().skip(1).fold(parts[0].clone(), |acc, p| acc.checked_add(p).unwrap())
    }

    #[test]
    fn products_and_truncation() {
        let g = mini();
        let v2 = Polynomial::generator(&g, 2, 1);
        let v3 = Polynomial::generator(&g, 2, 2);
        assert_eq!(v2.checked_mul(&v3).unwrap(), mono(&g, 2, &[2, 1], 1));
        let a = sum(&[mono(&g, 2, &[0], 3), mono(&g, 2, &[1, 0], -2)]);
        assert_eq!(a.checked_mul(&Polynomial::one(&g, 2)).unwrap(), a);
        let v1 = Polynomial::generator(&g, 1, 0);
        assert!(v1.checked_mul(&v1).unwrap().is_zero());
    }

    #[test]
    fn mismatches_are_errors() {
        let g = mini();
        let a = Polynomial::one(&g, 2);
        let b = Polynomial::one(&g, 3);
        assert_eq!(a.checked_add(&b), Err(TensorError::TruncationMismatch(2, 3)));
        let other = Arc::new(CommutationGraph::edgeless(3));
        assert_eq!(a.checked_mul(&Polynomial::one(&other, 2)), Err(TensorError::GraphMismatch));
        // structurally equal graphs behind different Arcs are fine
        let same = Arc::new(CommutationGraph::minigraph());
        assert!(a.checked_mul(&Polynomial::one(&same, 2)).is_ok());
    }

    #[test]
    fn geometric_inverse() {
        let g = mini();
        let a = Polynomial::one(&g, 3).checked_add(&Polynomial::generator(&g, 3, 0)).unwrap();
        let expected =
            sum(&[Polynomial::one(&g, 3), mono(&g, 3, &[0], -1), mono(&g, 3, &[0, 0], 1), mono(&g, 3, &[0, 0, 0], -1)]);
        assert_eq!(a.invert_unit().unwrap(), expected);
        assert_eq!(Polynomial::one(&g, 3).invert_unit().unwrap(), Polynomial::one(&g, 3));
        let minus =
            Polynomial::constant(&g, 3, BigInt::from(-1)).checked_add(&Polynomial::generator(&g, 3, 1)).unwrap();
        assert!(minus.checked_mul(&minus.invert_unit().unwrap()).unwrap().is_one());
        let bad = Polynomial::constant(&g, 3, BigInt::from(2));
        assert_eq!(bad.invert_unit(), Err(TensorError::NotAUnit("2".into())));
        assert!(matches!(Polynomial::zero(&g, 3).invert_unit(), Err(TensorError::NotAUnit(_))));
    }

    #[test]
    fn product_of_units_inverse() {
        let g = mini();
        let one = Polynomial::one(&g, 2);
        let a = one.checked_add(&Polynomial::generator(&g, 2, 0)).unwrap();
        let b = one.checked_add(&Polynomial::generator(&g, 2, 1)).unwrap();
        let ab = a.checked_mul(&b).unwrap();
        let inv = ab.invert_unit().unwrap();
        // (1+v1)(1+v2) = 1 + v1 + v2 + v1v2, inverse = 1 - v1 - v2 + v1^2 + v2^2 + v2v1
        let expected = sum(&[
            one.clone(),
            mono(&g, 2, &[0], -1),
            mono(&g, 2, &[1], -1),
            mono(&g, 2, &[0, 0], 1),
            mono(&g, 2, &[1, 1], 1),
            mono(&g, 2, &[1, 0], 1),
        ]);
        assert_eq!(inv, expected);
        assert!(ab.checked_mul(&inv).unwrap().is_one());
        assert!(inv.checked_mul(&ab).unwrap().is_one());
    }

    #[test]
    fn brackets() {
        let g = mini();
        let v1 = Polynomial::generator(&g, 3, 0);
        let v2 = Polynomial::generator(&g, 3, 1);
        let v3 = Polynomial::generator(&g, 3, 2);
        assert_eq!(v1.lie_bracket(&v2).unwrap(), sum(&[mono(&g, 3, &[0, 1], 1), mono(&g, 3, &[1, 0], -1)]));
        assert!(v2.lie_bracket(&v3).unwrap().is_zero());

        let free = Arc::new(CommutationGraph::edgeless(2));
        let x = Polynomial::generator(&free, 3, 0);
        let xy = x.lie_bracket(&Polynomial::generator(&free, 3, 1)).unwrap();
        let expected =
            sum(&[mono(&free, 3, &[0, 0, 1], 1), mono(&free, 3, &[0, 1, 0], -2), mono(&free, 3, &[1, 0, 0], 1)]);
        assert_eq!(x.lie_bracket(&xy).unwrap(), expected);
    }

    #[test]
    fn powers() {
        let g = mini();
        let a = Polynomial::one(&g, 4).checked_add(&Polynomial::generator(&g, 4, 0)).unwrap();
        let cube = a.pow(3).unwrap();
        assert_eq!(cube.coeff(&traces::canonicalize(&g, &[0, 0]).unwrap()), BigInt::from(3));
        assert!(a.pow(-3).unwrap().checked_mul(&cube).unwrap().is_one());
        assert!(a.pow(0).unwrap().is_one());
    }

    #[test]
    fn term_cap() {
        let g = Arc::new(CommutationGraph::edgeless(3));
        let s =
            (0..3).fold(Polynomial::one(&g, 4), |acc, v| acc.checked_add(&Polynomial::generator(&g, 4, v)).unwrap());
        let s = s.with_max_terms(50);
        assert_eq!(s.pow(4), Err(TensorError::TooManyTerms(50)));
    }

    #[test]
    fn document_round_trip() {
        let g = mini();
        let p = sum(&[mono(&g, 3, &[0, 1, 2], -7), mono(&g, 3, &[1], 2), Polynomial::one(&g, 3)]);
        let doc = p.to_document();
        assert_eq!(doc.terms[0].trace, Vec::<String>::new());
        assert_eq!(doc.terms[1].trace, vec!["v1", "v3", "v2"]);
        assert_eq!(doc.terms[2].trace, vec!["v2"]);
        let json = serde_json::to_string(&doc).unwrap();
        let back: PolynomialDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(Polynomial::from_document(&g, &back).unwrap(), p);
    }

    #[test]
    fn display() {
        let g = mini();
        let p = sum(&[mono(&g, 2, &[1, 2], -2), mono(&g, 2, &[0], 1), Polynomial::one(&g, 2)]);
        assert_eq!(p.to_string(), "1 + v1 - 2 v3·v2");
    }
}
