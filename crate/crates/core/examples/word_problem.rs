//! Normal forms and the word problem.
//!
//! cargo run --example word_problem

use raag::graph::CommutationGraph;
use raag::groupwords::{equal, init_set, normal_form, parse_word, term_set};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = CommutationGraph::new(["a", "b", "c", "d"], [(0, 1), (1, 2), (2, 3)])?;
    for text in ["c a b a^-1 c^2", "b c b^-1 c^-1", "d a d^-1 b a^-1", "[a,[b,c]]"] {
        let w = parse_word(&g, text)?;
        let nf = normal_form(&g, &w);
        println!(
            "{text:<20} -> {:<24} init {:?} term {:?}",
            nf.display(&g).to_string(),
            g.set_labels(init_set(&g, &w)),
            g.set_labels(term_set(&g, &w))
        );
    }
    let x = parse_word(&g, "a b c")?;
    let y = parse_word(&g, "b a c")?;
    let z = parse_word(&g, "b c a")?;
    println!("a b c == b a c: {}", equal(&g, &x, &y));
    println!("a b c == b c a: {}", equal(&g, &x, &z));
    Ok(())
}
