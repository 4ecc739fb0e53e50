//! Brackets of Lyndon basis elements rewritten in the Lyndon basis.
//!
//! cargo run --example structure_constants

use std::sync::Arc;

use raag::graph::CommutationGraph;
use raag::liealg::LyndonBasis;
use raag::lyndon;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = Arc::new(CommutationGraph::minigraph());
    let basis = LyndonBasis::new(Arc::clone(&g));
    let trees: Vec<_> = lyndon::enumerate_lyndon(&g, 3)?.into_iter().flatten().collect();
    for a in &trees {
        for b in &trees {
            if a.trace() >= b.trace() || a.len() + b.len() > 4 {
                continue;
            }
            let coords = basis.structure_constants(a, b)?;
            let rhs: Vec<String> = coords
                .entries()
                .map(|(m, c)| Ok(format!("{c}*{}", basis.tree(m)?.bracket(&g))))
                .collect::<Result<_, raag::liealg::LieError>>()?;
            let rhs = if rhs.is_empty() { "0".to_string() } else { rhs.join(" + ") };
            println!("[{}, {}] = {rhs}", a.bracket(&g), b.bracket(&g));
        }
    }
    Ok(())
}
