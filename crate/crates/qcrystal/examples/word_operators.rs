//! Kashiwara operators on words: the signature rule for the even pair and
//! the rightmost-{1,2} rule for the primitive odd pair.
//!
//! ```bash
//! cargo run -p qcrystal --example word_operators
//! ```

use qcrystal::{CrystalElement, QueerCrystal, Word};

fn show(label: &str, value: Option<Word>) {
    match value {
        Some(w) => println!("  {label} = {w}"),
        None => println!("  {label} = 0"),
    }
}

fn main() {
    let w = Word::new(3, vec![1, 2, 1, 1]);
    println!("w = {w}, wt(w) = {}", w.weight());
    for i in 1..3 {
        println!("  eps_{i} = {}, phi_{i} = {}", w.eps(i), w.phi(i));
    }
    show("f_1 w", w.f_even(1));
    show("f_2 w", w.f_even(2));
    show("e_1 w", w.e_even(1));
    show("f_1~ w", w.f_odd1());
    show("e_1~ w", w.e_odd1());

    // Walk the lowering orbit of the highest weight word 11.
    println!("\norbit of 11 under f_1:");
    let mut b = Word::new(3, vec![1, 1]);
    print!("  {b}");
    while let Some(down) = b.f_even(1) {
        print!(" -> {down}");
        b = down;
    }
    println!();

    // The odd operators square to zero.
    let v = Word::new(3, vec![1, 1]);
    println!("\nf_1~ {v} = {}", v.f_odd1().unwrap());
    println!("f_1~ f_1~ {v} = {:?}", v.f_odd1().and_then(|x| x.f_odd1()));
}
