//! The Magnus map `v ↦ 1 + v` from the group into units of the truncated
//! monoid algebra, the derivation of a group element, the induced filtration
//! `D_k`, and coordinates of `g γ_{k+1}` in the Lyndon basis of `γ_k / γ_{k+1}`.
//!
//! `D_k` is the set of `g` whose expansion is `1` in every degree `1..k`, and it
//! coincides with the `k`-th term of the lower central series. The degree-`k`
//! part of the expansion of `g ∈ D_k` is a Lie element, and its Lyndon
//! coordinates identify `g γ_{k+1}`.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::graph::CommutationGraph;
use crate::groupwords::GroupWord;
use crate::liealg::{LieError, LyndonBasis, LyndonCoordinates};
use crate::lyndon::LyndonTree;
use crate::tensor::{Polynomial, TensorError, DEFAULT_MAX_TERMS};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MagnusError {
    #[error("truncation degree must be at least {0}")]
    TruncationTooSmall(usize),
    #[error("element is not in D_{target}: its filtration degree is {actual}")]
    NotInFiltration { target: usize, actual: usize },
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// `μ(g)` modulo degree `N + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MagnusExpansion {
    pub source: GroupWord,
    pub truncation: usize,
    pub value: Polynomial,
}

impl MagnusExpansion {
    /// Degree-`k` part `μ(g)_k`.
    pub fn part(&self, k: usize) -> Polynomial {
        self.value.homogeneous_part(k)
    }

    pub fn is_one(&self) -> bool {
        self.value.is_one()
    }
}

/// Lowest nontrivial homogeneous part of `μ(g) - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Derivation {
    /// `μ(g) = 1` up to the truncation degree: `g ∈ D_{N+1}`, possibly `g = 1`.
    Zero,
    Part {
        degree: usize,
        part: Polynomial,
    },
}

/// Largest `k` with `g ∈ D_k`, as far as the truncation can tell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum FiltrationDegree {
    Exact(usize),
    /// Expansion is trivial through degree `N`; the element lies in `D_{N+1}`.
    AtLeast(usize),
}

impl FiltrationDegree {
    /// Whether `g ∈ D_k` is certified.
    pub fn in_filtration(self, k: usize) -> bool {
        match self {
            FiltrationDegree::Exact(d) => k <= d,
            FiltrationDegree::AtLeast(d) => k <= d,
        }
    }

    /// Whether `g ∉ D_k` is certified.
    pub fn not_in_filtration(self, k: usize) -> bool {
        matches!(self, FiltrationDegree::Exact(d) if k > d)
    }
}

impl fmt::Display for FiltrationDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiltrationDegree::Exact(k) => write!(f, "{k}"),
            FiltrationDegree::AtLeast(k) => write!(f, ">= {k}"),
        }
    }
}

pub fn magnus(g: &Arc<CommutationGraph>, w: &GroupWord, truncation: usize) -> Result<MagnusExpansion, MagnusError> {
    magnus_bounded(g, w, truncation, DEFAULT_MAX_TERMS)
}

/// Product over syllables `v^e` of `(1 + v)^e`, with the term cap applied to
/// every intermediate result.
pub fn magnus_bounded(
    g: &Arc<CommutationGraph>,
    w: &GroupWord,
    truncation: usize,
    max_terms: usize,
) -> Result<MagnusExpansion, MagnusError> {
    if truncation < 1 {
        return Err(MagnusError::TruncationTooSmall(1));
    }
    let one = Polynomial::one(g, truncation).with_max_terms(max_terms);
    let mut value = one.clone();
    for s in w.syllables() {
        let unit = one.checked_add(&Polynomial::generator(g, truncation, s.vertex))?;
        value = value.checked_mul(&unit.pow(s.exp)?)?;
    }
    Ok(MagnusExpansion { source: w.clone(), truncation, value })
}

pub fn derivation(g: &Arc<CommutationGraph>, w: &GroupWord, truncation: usize) -> Result<Derivation, MagnusError> {
    let mu = magnus(g, w, truncation)?;
    Ok(derivation_of(&mu))
}

pub fn derivation_of(mu: &MagnusExpansion) -> Derivation {
    match mu.value.lowest_positive_degree() {
        None => Derivation::Zero,
        Some(k) => Derivation::Part { degree: k, part: mu.part(k) },
    }
}

pub fn filtration_degree(
    g: &Arc<CommutationGraph>,
    w: &GroupWord,
    truncation: usize,
) -> Result<FiltrationDegree, MagnusError> {
    Ok(filtration_degree_of(&magnus(g, w, truncation)?))
}

pub fn filtration_degree_of(mu: &MagnusExpansion) -> FiltrationDegree {
    match derivation_of(mu) {
        Derivation::Zero => FiltrationDegree::AtLeast(mu.truncation + 1),
        Derivation::Part { degree, .. } => FiltrationDegree::Exact(degree),
    }
}

/// Lyndon coordinates of `g γ_{k+1}` in `γ_k / γ_{k+1}`, computed with
/// truncation `N >= k`.
pub fn lcs_coordinates(
    basis: &LyndonBasis,
    w: &GroupWord,
    k: usize,
    truncation: usize,
) -> Result<LyndonCoordinates, MagnusError> {
    if k < 1 {
        return Err(MagnusError::TruncationTooSmall(1));
    }
    if truncation < k {
        return Err(MagnusError::TruncationTooSmall(k));
    }
    lcs_coordinates_of(basis, &magnus(basis.graph(), w, truncation)?, k)
}

/// As [`lcs_coordinates`], from an expansion already computed.
pub fn lcs_coordinates_of(
    basis: &LyndonBasis,
    mu: &MagnusExpansion,
    k: usize,
) -> Result<LyndonCoordinates, MagnusError> {
    if k < 1 || mu.truncation < k {
        return Err(MagnusError::TruncationTooSmall(k.max(1)));
    }
    if let FiltrationDegree::Exact(d) = filtration_degree_of(mu) {
        if d < k {
            return Err(MagnusError::NotInFiltration { target: k, actual: d });
        }
    }
    Ok(basis.coordinates(&mu.part(k), k)?)
}

/// Reads a bracketing as nested group commutators `[x, y] = x y x^-1 y^-1`.
pub fn commutator_word(t: &LyndonTree) -> GroupWord {
    match t.children() {
        None => GroupWord::generator(t.as_generator().expect("leaf is a generator")),
        Some((l, r)) => GroupWord::commutator(&commutator_word(l), &commutator_word(r)),
    }
}
