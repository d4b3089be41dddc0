//! The Weyl action on words, the conjugated odd operators, and the
//! enumeration of highest weight words.
//!
//! ```bash
//! cargo run -p qcrystal --example weyl_and_highest
//! ```

use qcrystal::{enumerate_highest, CrystalElement, Permutation, QueerCrystal, Word};

fn main() {
    let w = Word::new(3, vec![1, 2, 1, 1]);
    println!("w = {w}, wt = {}", w.weight());
    println!("S_1 w = {}", w.s_action(1));

    let w0 = Permutation::longest(3);
    let lowest = w.w_action(&w0);
    println!("S_w0 w = {lowest}, wt = {}", lowest.weight());
    println!("w highest? {}  lowest? {}", w.is_highest_weight(), w.is_lowest_weight());
    println!("S_w0 w lowest? {}", lowest.is_lowest_weight());

    // The odd operator at index 2 is conjugated through the Weyl action.
    let v = Word::new(3, vec![2, 2]);
    let down = v.f_odd(2).unwrap();
    println!("\nf_2~ {v} = {down}, e_2~ back = {}", down.e_odd(2).unwrap());

    // All highest weight words of each length, with their weights.
    for len in 1..=4 {
        println!("\nhighest weight words of length {len} (n=3):");
        for h in enumerate_highest(len, 3) {
            println!("  {h} {}", h.weight());
        }
    }
}
