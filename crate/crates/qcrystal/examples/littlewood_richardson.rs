//! Decompose a tensor product of irreducible crystals by all three shifted
//! Littlewood-Richardson algorithms and cross-check them.
//!
//! ```bash
//! cargo run -p qcrystal --example littlewood_richardson
//! ```

use qcrystal::{build_crystal, lr_graph, lr_insertion, lr_words, StrictPartition};

fn main() {
    let rank = 3;
    let lambda = StrictPartition::new(vec![2, 1]);
    let mu = StrictPartition::new(vec![3]);
    println!("B({lambda}) ⊗ B({mu}) at n={rank}\n");

    let by_words = lr_words(&lambda, &mu, rank);
    let by_insertion = lr_insertion(&lambda, &mu, rank);
    let by_graph = lr_graph(&lambda, &mu, rank);
    assert!(by_words.agrees_with(&by_insertion));
    assert!(by_words.agrees_with(&by_graph));

    println!("summand  mult  word witness  tableau witness");
    for (nu, count) in &by_words.counts {
        let word = &by_words.word_witnesses[nu][0];
        let tab = &by_insertion.tableau_witnesses[nu][0];
        println!("{nu:<8} {count:<5} {word:<13} {tab}");
    }

    // vertex counts are conserved across the decomposition
    let lhs = build_crystal(&lambda, rank).vertex_count();
    let rhs = build_crystal(&mu, rank).vertex_count();
    let total: usize = by_words
        .counts
        .iter()
        .map(|(nu, count)| count * build_crystal(nu, rank).vertex_count())
        .sum();
    println!("\n|B({lambda})| x |B({mu})| = {lhs} x {rhs} = {}", lhs * rhs);
    println!("sum of summand sizes     = {total}");
}
