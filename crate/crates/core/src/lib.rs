//! Lyndon bases, Magnus expansions and lower central series quotients of
//! right-angled Artin groups.
//!
//! Given a finite commutation graph Γ, the crate computes
//!
//! * standard forms, products and order in the trace monoid ([`traces`]),
//! * Lyndon elements and their standard bracketings ([`lyndon`]),
//! * exact truncated arithmetic in the monoid algebra ([`tensor`]),
//! * the Lyndon basis of the partially commutative free Lie algebra, with
//!   coordinates and structure constants ([`liealg`]),
//! * normal forms and the word problem for the group ([`groupwords`]),
//! * Magnus expansions, filtration degrees and coordinates in the quotients
//!   `γ_k / γ_{k+1}` ([`magnus`]),
//! * growth series of the monoid and a product-formula cross-check ([`series`]).
//!
//! ```
//! use std::sync::Arc;
//! use raag::{groupwords::parse_word, liealg::LyndonBasis, magnus, CommutationGraph};
//!
//! let g = Arc::new(CommutationGraph::minigraph());
//! let basis = LyndonBasis::new(Arc::clone(&g));
//! let w = parse_word(&g, "[[v1,v3],v2]").unwrap();
//! let coords = magnus::lcs_coordinates(&basis, &w, 3, 4).unwrap();
//! assert_eq!(coords.len(), 1);
//! ```

pub mod cli;
pub mod graph;
pub mod groupwords;
pub mod liealg;
pub mod lyndon;
pub mod magnus;
pub mod series;
pub mod tensor;
pub mod traces;

pub use graph::{parse_graph, CommutationGraph, Vertex, VertexSet};
pub use groupwords::GroupWord;
pub use liealg::{LyndonBasis, LyndonCoordinates};
pub use lyndon::LyndonTree;
pub use tensor::Polynomial;
pub use traces::Trace;
