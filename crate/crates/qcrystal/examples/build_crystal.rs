//! Build the irreducible crystal B(λ) from its highest weight tableau and
//! inspect its structure.
//!
//! ```bash
//! cargo run -p qcrystal --example build_crystal
//! ```

use qcrystal::{
    build_crystal, highest_tableau, lowest_tableau, weight_multiplicities, CrystalElement,
    StrictPartition,
};

fn main() {
    let rank = 3;
    let shape = StrictPartition::new(vec![3, 1]);
    println!("B({shape}) at n={rank}");
    println!("highest tableau: {}", highest_tableau(&shape, rank));
    println!("lowest tableau:  {}", lowest_tableau(&shape, rank));

    let graph = build_crystal(&shape, rank);
    println!("vertices: {}", graph.vertex_count());
    println!("edges:    {}", graph.edge_count());

    println!("\nfirst few edges:");
    for (from, op, to) in graph.edges().take(6) {
        println!("  {} -[{}]-> {}", graph.vertex(from), op, graph.vertex(to));
    }

    println!("\nweight multiplicities:");
    for (wt, count) in weight_multiplicities(&graph) {
        println!("  {wt} x{count}");
    }
}
