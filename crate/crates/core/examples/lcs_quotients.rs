//! Ranks and bases of the lower central series quotients gamma_k / gamma_{k+1}.
//!
//! cargo run --example lcs_quotients

use raag::graph::CommutationGraph;
use raag::liealg::graded_rank;
use raag::lyndon;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let graphs = [
        ("minigraph", CommutationGraph::minigraph()),
        ("free group on 2", CommutationGraph::edgeless(2)),
        ("square", CommutationGraph::new(["a", "b", "c", "d"], [(0, 1), (1, 2), (2, 3), (3, 0)])?),
    ];
    for (name, g) in &graphs {
        let ranks = (1..=7).map(|k| graded_rank(g, k)).collect::<Result<Vec<_>, _>>()?;
        println!("{name}: ranks {ranks:?}");
    }

    let g = CommutationGraph::minigraph();
    println!("\ngamma_3/gamma_4 of the minigraph group is freely generated by");
    for t in lyndon::enumerate_lyndon(&g, 3)?.pop().unwrap_or_default() {
        println!("  {}", t.bracket(&g));
    }
    Ok(())
}
