//! The bumping insertion for semistandard decomposition tableaux, letter by
//! letter and tableau into tableau.
//!
//! ```bash
//! cargo run -p qcrystal --example insertion_scheme
//! ```

use qcrystal::render::parse_tableau;
use qcrystal::{insert_letter, insert_tableau, knuth_map, Word};

fn main() {
    let t = parse_tableau("66135/324", 6).unwrap();
    println!("{t} <- 2 = {}", insert_letter(&t, 2));

    // tableau insertion folds the reading word of the right factor
    let t = parse_tableau("22/1", 3).unwrap();
    let u = parse_tableau("333", 3).unwrap();
    let mut acc = t.clone();
    println!("\n{t} <- {u}:");
    for &c in u.reading_word().letters() {
        acc = insert_letter(&acc, c);
        println!("  <- {c}: {acc}");
    }
    assert_eq!(acc, insert_tableau(&t, &u));

    // the queer Knuth relation rewrites length-4 words inside one
    // crystal-equivalence class
    let w = Word::new(3, vec![1, 1, 2, 1]);
    println!("\nknuth({w}) = {:?}", knuth_map(&w).map(|x| x.to_string()));
    let w = Word::new(3, vec![1, 2, 1, 1]);
    println!("knuth({w}) = {:?}", knuth_map(&w).map(|x| x.to_string()));
}
