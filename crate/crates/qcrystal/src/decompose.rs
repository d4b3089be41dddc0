//! Tensor products of crystals and the three shifted Littlewood-Richardson
//! algorithms: the reading-word box rule, the insertion rule, and the
//! brute-force graph decomposition used as their oracle.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::graph::{BudgetExceeded, CrystalGraph};
use crate::insertion::insert_tableau;
use crate::ssdt::{build_crystal, lowest_tableau, ShiftedTableau, StrictPartition};
use crate::word::{CrystalElement, WeightVec, Word};

/// The full tensor power of the vector representation crystal: every word of
/// the given length.
pub fn tensor_power(len: usize, rank: u8) -> CrystalGraph<Word> {
    let mut words = vec![Word::empty(rank)];
    for _ in 0..len {
        words = words
            .iter()
            .flat_map(|w| (1..=rank).map(move |c| w.with_letter(c)))
            .collect();
    }
    CrystalGraph::closure(rank, words, None).expect("unbounded closure")
}

/// The tensor product `B(lambda) ⊗ B(mu)` realized on concatenated reading
/// words.
pub fn tensor_words(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    rank: u8,
) -> CrystalGraph<Word> {
    tensor_words_bounded(lambda, mu, rank, None).expect("unbounded closure")
}

/// As [`tensor_words`], refusing to grow past the vertex budget.
pub fn tensor_words_bounded(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    rank: u8,
    budget: Option<usize>,
) -> Result<CrystalGraph<Word>, BudgetExceeded> {
    let left = build_crystal(lambda, rank);
    let right = build_crystal(mu, rank);
    let expected = left.vertex_count() * right.vertex_count();
    if let Some(max) = budget {
        if expected > max {
            return Err(BudgetExceeded { budget: max });
        }
    }
    let mut seeds = Vec::with_capacity(expected);
    for t in left.vertices() {
        let head = t.reading_word();
        for u in right.vertices() {
            seeds.push(head.concat(&u.reading_word()));
        }
    }
    let graph = CrystalGraph::closure(rank, seeds, budget)?;
    debug_assert_eq!(
        graph.vertex_count(),
        expected,
        "tensor vertex set must be closed under the operators"
    );
    Ok(graph)
}

/// Outcome of a Littlewood-Richardson decomposition: the multiset of summand
/// shapes, along with per-method witnesses where the method produces them.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LrResult {
    pub counts: BTreeMap<StrictPartition, usize>,
    /// Reading words certifying each summand (word and graph methods).
    pub word_witnesses: BTreeMap<StrictPartition, Vec<Word>>,
    /// Tableaux certifying each summand (insertion method).
    pub tableau_witnesses: BTreeMap<StrictPartition, Vec<ShiftedTableau>>,
}

impl LrResult {
    pub fn multiplicity(&self, nu: &StrictPartition) -> usize {
        self.counts.get(nu).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    /// Same multiset of summands.
    pub fn agrees_with(&self, other: &LrResult) -> bool {
        self.counts == other.counts
    }

    fn from_words(pairs: Vec<(StrictPartition, Word)>) -> LrResult {
        let mut out = LrResult::default();
        for (nu, witness) in pairs {
            *out.counts.entry(nu.clone()).or_insert(0) += 1;
            out.word_witnesses.entry(nu).or_default().push(witness);
        }
        out
    }

    fn from_tableaux(pairs: Vec<(StrictPartition, ShiftedTableau)>) -> LrResult {
        let mut out = LrResult::default();
        for (nu, witness) in pairs {
            *out.counts.entry(nu.clone()).or_insert(0) += 1;
            out.tableau_witnesses.entry(nu).or_default().push(witness);
        }
        out
    }
}

/// Box chain for one reading word: add a box at row `n - u_k + 1` for each
/// letter, last letter first; `None` unless every intermediate array is a
/// shifted shape.
fn box_chain(mu: &StrictPartition, u: &Word, rank: u8) -> Option<StrictPartition> {
    let mut shape = mu.clone();
    for &c in u.letters().iter().rev() {
        shape = shape.add_box((rank - c + 1) as usize)?;
    }
    Some(shape)
}

/// Reading-word rule: box chains over the reading words of `B(lambda)`.
pub fn lr_words(lambda: &StrictPartition, mu: &StrictPartition, rank: u8) -> LrResult {
    let left = build_crystal(lambda, rank);
    let mut pairs: Vec<(StrictPartition, Word)> = left
        .vertices()
        .par_iter()
        .filter_map(|t| {
            let u = t.reading_word();
            box_chain(mu, &u, rank).map(|nu| (nu, u))
        })
        .collect();
    pairs.sort();
    LrResult::from_words(pairs)
}

/// Insertion rule: tally the shapes `nu` with `T ← L^mu = L^nu`.
pub fn lr_insertion(lambda: &StrictPartition, mu: &StrictPartition, rank: u8) -> LrResult {
    let left = build_crystal(lambda, rank);
    let low = lowest_tableau(mu, rank);
    let mut pairs: Vec<(StrictPartition, ShiftedTableau)> = left
        .vertices()
        .par_iter()
        .filter_map(|t| {
            let image = insert_tableau(t, &low);
            let nu = image.shape();
            (image == lowest_tableau(&nu, rank)).then(|| (nu, t.clone()))
        })
        .collect();
    pairs.sort();
    LrResult::from_tableaux(pairs)
}

/// Graph oracle: top weights of the connected components of the tensor
/// product, with the highest weight words as witnesses.
pub fn lr_graph(lambda: &StrictPartition, mu: &StrictPartition, rank: u8) -> LrResult {
    lr_graph_bounded(lambda, mu, rank, None).expect("unbounded closure")
}

/// As [`lr_graph`], refusing to grow past the vertex budget.
pub fn lr_graph_bounded(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    rank: u8,
    budget: Option<usize>,
) -> Result<LrResult, BudgetExceeded> {
    let graph = tensor_words_bounded(lambda, mu, rank, budget)?;
    let mut pairs: Vec<(StrictPartition, Word)> = graph
        .components()
        .into_iter()
        .map(|c| {
            let nu = StrictPartition::from_weight(&c.highest.weight())
                .expect("highest weights of components are strict partitions");
            (nu, c.highest)
        })
        .collect();
    pairs.sort();
    Ok(LrResult::from_words(pairs))
}

/// Vertex count per weight; invariant under permuting coordinates.
pub fn weight_multiplicities<V: CrystalElement>(
    graph: &CrystalGraph<V>,
) -> BTreeMap<WeightVec, usize> {
    let mut counts = BTreeMap::new();
    for v in graph.vertices() {
        *counts.entry(v.weight()).or_insert(0) += 1;
    }
    counts
}
