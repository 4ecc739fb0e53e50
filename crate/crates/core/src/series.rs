//! Univariate integer power series used to cross-check Lyndon counts against
//! the growth of the trace monoid.
//!
//! The number of traces of each length is generated by the inverse of the
//! alternating clique polynomial `Σ_k (-1)^k c_k t^k`. Independently, a
//! Poincaré–Birkhoff–Witt count says the same series equals
//! `Π_k (1 - t^k)^{-r_k}` where `r_k` is the number of Lyndon elements of
//! length `k`. Agreement of the two is a consistency check on the trace and
//! Lyndon machinery, not a source of truth.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{cliques, CommutationGraph};
use crate::liealg::{graded_rank, LieError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("series with constant term {0} is not invertible over the integers")]
    NotInvertible(String),
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// Dense coefficients `a_0..=a_N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerSeries(Vec<BigInt>);

impl IntegerSeries {
    pub fn new(coefficients: Vec<BigInt>) -> Self {
        IntegerSeries(coefficients)
    }

    pub fn from_i64s(coefficients: &[i64]) -> Self {
        IntegerSeries(coefficients.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one(precision: usize) -> Self {
        let mut c = vec![BigInt::zero(); precision + 1];
        c[0] = BigInt::one();
        IntegerSeries(c)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.0
    }

    /// Largest index kept.
    pub fn precision(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn truncate(&self, precision: usize) -> Self {
        let mut c = self.0.clone();
        c.resize(precision + 1, BigInt::zero());
        IntegerSeries(c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.precision().min(other.precision());
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, a) in self.0.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate().take(n + 1 - i) {
                out[i + j] += a * b;
            }
        }
        IntegerSeries(out)
    }

    /// Inverse modulo `t^{N+1}`; needs a constant term of `±1`.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let c0 = self.0.first().cloned().unwrap_or_default();
        if c0 != BigInt::one() && c0 != -BigInt::one() {
            return Err(SeriesError::NotInvertible(c0.to_string()));
        }
        let n = self.precision();
        let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
        out.push(c0.clone());
        for i in 1..=n {
            let mut acc = BigInt::zero();
            for j in 1..=i {
                acc += &self.0[j] * &out[i - j];
            }
            // c0 * out_i = -acc and c0 = ±1
            out.push(-acc * &c0);
        }
        Ok(IntegerSeries(out))
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(ToString::to_string).collect()
    }
}

/// Coefficient of `t^k` is the number of `k`-cliques.
pub fn clique_polynomial(g: &CommutationGraph) -> IntegerSeries {
    let sets = cliques(g);
    let top = sets.iter().map(|c| c.len()).max().unwrap_or(0);
    let mut c = vec![BigInt::zero(); top + 1];
    for s in sets {
        c[s.len()] += 1;
    }
    IntegerSeries(c)
}

/// Number of traces of each length `0..=N`.
pub fn growth_series(g: &CommutationGraph, precision: usize) -> Result<IntegerSeries, SeriesError> {
    let cp = clique_polynomial(g);
    let alternating: Vec<BigInt> = (0..=precision)
        .map(|k| {
            let c = cp.0.get(k).cloned().unwrap_or_default();
            if k % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect();
    IntegerSeries(alternating).inverse()
}

/// `(1 - t^k)^{-r} = Σ_j C(r + j - 1, j) t^{kj}` modulo `t^{N+1}`.
pub fn inverse_power_of_one_minus(k: usize, r: usize, precision: usize) -> IntegerSeries {
    let mut c = vec![BigInt::zero(); precision + 1];
    // binomial(r + j - 1, j) via binom_{j} = binom_{j-1} * (r + j - 1) / j
    let mut binom = BigInt::one();
    let mut j = 0usize;
    while k * j <= precision {
        c[k * j] = binom.clone();
        j += 1;
        binom = binom * BigInt::from(r + j - 1) / BigInt::from(j);
    }
    IntegerSeries(c)
}

/// Outcome of [`witt_product_check`]. Serializes as
/// `{"lhs": [...], "rhs": [...], "equal": bool}` with decimal-string entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WittReport {
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
    pub equal: bool,
    /// `r_k` for `k = 1..=N`.
    #[serde(default)]
    pub ranks: Vec<usize>,
}

/// Compares `Π_{k=1..N} (1 - t^k)^{-r_k}` with the growth series.
pub fn witt_product_check(g: &CommutationGraph, precision: usize) -> Result<WittReport, SeriesError> {
    let ranks = (1..=precision).map(|k| graded_rank(g, k)).collect::<Result<Vec<_>, _>>()?;
    let lhs = witt_product(&ranks, precision);
    let rhs = growth_series(g, precision)?;
    Ok(WittReport { equal: lhs == rhs, lhs: lhs.to_strings(), rhs: rhs.to_strings(), ranks })
}

/// `Π_k (1 - t^k)^{-ranks[k-1]}` modulo `t^{N+1}`.
pub fn witt_product(ranks: &[usize], precision: usize) -> IntegerSeries {
    ranks
        .iter()
        .enumerate()
        .filter(|&(i, _)| i < precision)
        .fold(IntegerSeries::one(precision), |acc, (i, &r)| acc.mul(&inverse_power_of_one_minus(i + 1, r, precision)))
}
