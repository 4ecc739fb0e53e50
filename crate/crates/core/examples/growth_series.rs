//! Growth series of the trace monoid against the product over Lyndon ranks.
//!
//! cargo run --example growth_series

use raag::graph::CommutationGraph;
use raag::series;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, g) in [
        ("minigraph", CommutationGraph::minigraph()),
        ("K3", CommutationGraph::complete(3)),
        ("path", CommutationGraph::new(["a", "b", "c", "d"], [(0, 1), (1, 2), (2, 3)])?),
    ] {
        println!("{name}: clique polynomial {:?}", series::clique_polynomial(&g).to_strings());
        let report = series::witt_product_check(&g, 8)?;
        println!("  growth  {}", report.rhs.join(" "));
        println!("  product {}", report.lhs.join(" "));
        println!("  ranks   {:?}  equal: {}", report.ranks, report.equal);
    }
    Ok(())
}
