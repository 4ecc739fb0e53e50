//! Lyndon elements of a commutation graph with their standard bracketings.
//!
//! cargo run --example lyndon_elements [graph.json] [max_len]

use raag::graph::{parse_graph, CommutationGraph};
use raag::lyndon;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let g = match args.next() {
        Some(path) => parse_graph(&std::fs::read_to_string(path)?)?,
        None => CommutationGraph::minigraph(),
    };
    let max_len: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(4);

    for (i, level) in lyndon::enumerate_lyndon(&g, max_len)?.iter().enumerate() {
        println!("length {}: {} elements", i + 1, level.len());
        for t in level {
            println!("  {:<16} {}", t.trace().display(&g).to_string(), t.bracket(&g));
        }
    }
    Ok(())
}
