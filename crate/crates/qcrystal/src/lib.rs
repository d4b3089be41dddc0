//! Crystal combinatorics for the queer superalgebra `q(n)`.
//!
//! The crate implements the combinatorial layer of the `q(n)` crystal basis
//! theory on three carriers:
//!
//! - **words** over `{1, …, n}` with the even Kashiwara operators (signature
//!   rule) and the odd operators (rightmost-`{1,2}` rule, plus Weyl
//!   conjugates) — [`word`], [`weyl`];
//! - **semistandard decomposition tableaux** on shifted shapes, their
//!   reading words, the extremal tableaux, and the irreducible crystal
//!   `B(λ)` built by operator closure — [`ssdt`], [`graph`];
//! - **tensor products**, the bumping insertion `T ← x`, the queer Knuth
//!   relation, and three independent algorithms for the shifted
//!   Littlewood-Richardson decomposition of `B(λ) ⊗ B(μ)` — [`insertion`],
//!   [`decompose`].
//!
//! ## Examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run -p qcrystal --example word_operators
//! cargo run -p qcrystal --example weyl_and_highest
//! cargo run -p qcrystal --example build_crystal
//! cargo run -p qcrystal --example insertion_scheme
//! cargo run -p qcrystal --example littlewood_richardson
//! cargo run -p qcrystal --example dot_export
//! ```
//!
//! A thin CLI (`qcrystal`) exposes the same operations with DOT, text and
//! JSON output; see the README for the literal syntax and exit codes.

pub mod decompose;
pub mod graph;
pub mod insertion;
pub mod render;
pub mod ssdt;
pub mod weyl;
pub mod word;

pub use decompose::{
    lr_graph, lr_insertion, lr_words, tensor_power, tensor_words, weight_multiplicities, LrResult,
};
pub use graph::{BudgetExceeded, Component, CrystalGraph};
pub use insertion::{crystal_equivalent, insert_letter, insert_tableau, knuth_map};
pub use ssdt::{
    build_crystal, highest_tableau, hook_split, is_hook, lowest_tableau, max_hook_subword_len,
    ShiftedTableau, SsdtViolation, StrictPartition,
};
pub use weyl::{enumerate_highest, Permutation, QueerCrystal};
pub use word::{CrystalElement, Letter, OperatorLabel, WeightVec, Word};
