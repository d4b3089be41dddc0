//! Emit a crystal graph in DOT form, ready for graphviz.
//!
//! ```bash
//! cargo run -p qcrystal --example dot_export | dot -Tsvg > tensor_square.svg
//! ```

use qcrystal::render::crystal_dot;
use qcrystal::{tensor_words, StrictPartition};

fn main() {
    // the tensor square of the vector representation crystal at n=3
    let one = StrictPartition::new(vec![1]);
    let graph = tensor_words(&one, &one, 3);
    print!("{}", crystal_dot(&graph, false));
}
