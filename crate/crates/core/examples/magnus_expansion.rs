//! Magnus expansions, derivations and filtration degrees of group words.
//!
//! cargo run --example magnus_expansion

use std::sync::Arc;

use raag::graph::CommutationGraph;
use raag::groupwords::parse_word;
use raag::magnus::{self, Derivation};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = Arc::new(CommutationGraph::minigraph());
    for text in ["v1", "v1^-2", "[v1,v2]", "[v2,v3]", "[[v1,v3],v2]", "[v1,v2] [v2,v1]^2"] {
        let w = parse_word(&g, text)?;
        let mu = magnus::magnus(&g, &w, 3)?;
        println!("{text}");
        println!("  mu      = {}", mu.value);
        match magnus::derivation_of(&mu) {
            Derivation::Zero => println!("  delta   = 0"),
            Derivation::Part { degree, part } => println!("  delta   = {part}  (degree {degree})"),
        }
        println!("  D-depth = {}", magnus::filtration_degree_of(&mu));
    }
    Ok(())
}
