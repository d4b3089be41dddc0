//! Weyl-group action on crystals, the conjugated odd operators, and
//! detection and enumeration of highest and lowest weight vectors.

use std::collections::BTreeSet;

use crate::word::{CrystalElement, OperatorLabel, Word};

/// A permutation of `{1, …, n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    /// Panics unless `images` is a bijection of `{1, …, n}`.
    pub fn from_images(images: Vec<u8>) -> Self {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            assert!(
                v >= 1 && (v as usize) <= n && !seen[v as usize - 1],
                "not a permutation: {images:?}"
            );
            seen[v as usize - 1] = true;
        }
        Permutation { images }
    }

    pub fn identity(n: u8) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// The simple transposition `s_i` swapping `i` and `i+1`.
    pub fn simple(n: u8, i: u8) -> Self {
        assert!(i >= 1 && i < n, "simple reflection index out of range");
        let mut p = Permutation::identity(n);
        p.images.swap(i as usize - 1, i as usize);
        p
    }

    /// The longest element `w0`, reversing `{1, …, n}`.
    pub fn longest(n: u8) -> Self {
        Permutation {
            images: (1..=n).rev().collect(),
        }
    }

    pub fn degree(&self) -> u8 {
        self.images.len() as u8
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn apply(&self, x: u8) -> u8 {
        self.images[x as usize - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v as usize == k + 1)
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&v| self.apply(v)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v as usize - 1] = k as u8 + 1;
        }
        Permutation { images }
    }

    pub fn num_inversions(&self) -> usize {
        let n = self.images.len();
        let mut count = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.images[a] > self.images[b] {
                    count += 1;
                }
            }
        }
        count
    }

    fn first_descent(&self) -> Option<u8> {
        self.images
            .windows(2)
            .position(|w| w[0] > w[1])
            .map(|k| k as u8 + 1)
    }

    fn right_descents(&self) -> Vec<u8> {
        (1..self.degree())
            .filter(|&i| self.images[i as usize - 1] > self.images[i as usize])
            .collect()
    }

    /// Multiply by `s_i` on the right: swaps the entries at positions `i`,
    /// `i+1` of the one-line notation.
    fn times_simple(&self, i: u8) -> Permutation {
        let mut p = self.clone();
        p.images.swap(i as usize - 1, i as usize);
        p
    }

    /// One canonical reduced word `(i_1, …, i_k)` with
    /// `self = s_{i_1} ⋯ s_{i_k}`, obtained by peeling descents from the
    /// right (bubble sort).
    pub fn reduced_word(&self) -> Vec<u8> {
        let mut p = self.clone();
        let mut word = Vec::with_capacity(self.num_inversions());
        while let Some(d) = p.first_descent() {
            p = p.times_simple(d);
            word.push(d);
        }
        word.reverse();
        word
    }

    /// Every reduced word of the permutation.  Intended for small degrees;
    /// the count grows quickly.
    pub fn all_reduced_words(&self) -> Vec<Vec<u8>> {
        if self.is_identity() {
            return vec![Vec::new()];
        }
        let mut words = Vec::new();
        for d in self.right_descents() {
            for mut prefix in self.times_simple(d).all_reduced_words() {
                prefix.push(d);
                words.push(prefix);
            }
        }
        words
    }
}

/// Reduced word for `w_i = s_2 ⋯ s_i s_1 ⋯ s_{i-1}`, the shortest Weyl
/// element carrying the simple root `alpha_i` to `alpha_1`.  Conjugating the
/// primitive odd operators by `S_{w_i}` yields the odd operators at index
/// `i`.
fn odd_conjugator_word(i: u8) -> Vec<u8> {
    (2..=i).chain(1..i).collect()
}

/// Derived crystal operations available on every [`CrystalElement`]: the
/// Weyl action, the conjugated odd operators, operator dispatch by label,
/// and the extremal-vector tests.
pub trait QueerCrystal: CrystalElement {
    /// The reflection `S_i b = f_i^{<h_i, wt b>} b` (or the raising analogue
    /// when the pairing is negative).  Total by the string property.
    fn s_action(&self, i: u8) -> Self {
        let m = self.weight().h_pairing(i);
        let mut b = self.clone();
        if m >= 0 {
            for _ in 0..m {
                b = b.f_even(i).expect("string property violated by S_i");
            }
        } else {
            for _ in 0..-m {
                b = b.e_even(i).expect("string property violated by S_i");
            }
        }
        b
    }

    /// Apply `S_{s_{i_1}} ⋯ S_{s_{i_k}}` for a word `(i_1, …, i_k)`,
    /// rightmost letter first.
    fn s_word_action(&self, word: &[u8]) -> Self {
        word.iter().rev().fold(self.clone(), |b, &i| b.s_action(i))
    }

    /// The Weyl action `S_p`, computed along a canonical reduced word of
    /// `p`; the result is independent of the choice.
    fn w_action(&self, p: &Permutation) -> Self {
        self.s_word_action(&p.reduced_word())
    }

    /// Odd lowering operator at index `i >= 1`; `i = 1` is the primitive
    /// operator, larger indices conjugate it through the Weyl action.
    fn f_odd(&self, i: u8) -> Option<Self> {
        assert!(
            i >= 1 && i < self.rank(),
            "odd index {i} out of range for rank {}",
            self.rank()
        );
        if i == 1 {
            return self.f_odd1();
        }
        let conj = odd_conjugator_word(i);
        let inv: Vec<u8> = conj.iter().rev().copied().collect();
        let moved = self.s_word_action(&conj).f_odd1()?;
        Some(moved.s_word_action(&inv))
    }

    /// Odd raising operator at index `i >= 1`.
    fn e_odd(&self, i: u8) -> Option<Self> {
        assert!(
            i >= 1 && i < self.rank(),
            "odd index {i} out of range for rank {}",
            self.rank()
        );
        if i == 1 {
            return self.e_odd1();
        }
        let conj = odd_conjugator_word(i);
        let inv: Vec<u8> = conj.iter().rev().copied().collect();
        let moved = self.s_word_action(&conj).e_odd1()?;
        Some(moved.s_word_action(&inv))
    }

    fn apply_f(&self, op: OperatorLabel) -> Option<Self> {
        match op {
            OperatorLabel::Even(i) => self.f_even(i),
            OperatorLabel::Odd(i) => self.f_odd(i),
        }
    }

    fn apply_e(&self, op: OperatorLabel) -> Option<Self> {
        match op {
            OperatorLabel::Even(i) => self.e_even(i),
            OperatorLabel::Odd(i) => self.e_odd(i),
        }
    }

    /// True when every raising operator (even and odd) vanishes.
    fn is_highest_weight(&self) -> bool {
        OperatorLabel::all(self.rank())
            .into_iter()
            .all(|op| self.apply_e(op).is_none())
    }

    /// True when the image under `S_{w0}` is a highest weight vector.
    fn is_lowest_weight(&self) -> bool {
        self.w_action(&Permutation::longest(self.rank()))
            .is_highest_weight()
    }
}

impl<T: CrystalElement> QueerCrystal for T {}

/// All highest weight words of the given length, built by the recursive
/// characterization: prefix a letter `1` to `f_1 ⋯ f_{j-1} b` for each
/// shorter highest weight word `b` whose weight stays a strict partition
/// after adding `epsilon_j`.
pub fn enumerate_highest(len: usize, rank: u8) -> Vec<Word> {
    let mut level: BTreeSet<Word> = BTreeSet::new();
    level.insert(Word::empty(rank));
    for _ in 0..len {
        let mut next = BTreeSet::new();
        for b in &level {
            let mu = b.weight();
            for j in 1..=rank {
                if !mu.bumped(j).is_strict_partition() {
                    continue;
                }
                let mut lowered = b.clone();
                for step in (1..j).rev() {
                    lowered = lowered
                        .f_even(step)
                        .expect("lowering chain must exist for a strict target weight");
                }
                next.insert(Word::new(rank, vec![1]).concat(&lowered));
            }
        }
        level = next;
    }
    level.into_iter().collect()
}
