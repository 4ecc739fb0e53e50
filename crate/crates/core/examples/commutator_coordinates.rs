//! Coordinates of group elements in gamma_k / gamma_{k+1}.
//!
//! cargo run --example commutator_coordinates

use std::sync::Arc;

use raag::graph::CommutationGraph;
use raag::groupwords::parse_word;
use raag::liealg::LyndonBasis;
use raag::magnus;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = Arc::new(CommutationGraph::edgeless(2));
    let basis = LyndonBasis::new(Arc::clone(&g));
    for (text, k) in
        [("[v1,v2]^3", 2), ("[v1,[v1,v2]] [[v1,v2],v2]^-2", 3), ("[v1,[v2,v1]]", 3), ("[[[v1,v2],v2],v1]", 4)]
    {
        let w = parse_word(&g, text)?;
        let coords = magnus::lcs_coordinates(&basis, &w, k, k)?;
        println!("{text} in gamma_{k}/gamma_{}:", k + 1);
        for (m, c) in coords.entries() {
            println!("  {c:>3} * {}", basis.tree(m)?.bracket(&g));
        }
    }
    Ok(())
}
