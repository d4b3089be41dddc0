//! Letters, words, weights, and the even/odd Kashiwara operators on words.
//!
//! A [`Word`] over the alphabet `{1, …, n}` carries the crystal structure of
//! the `N`-fold tensor power of the vector representation crystal of the
//! queer superalgebra `q(n)`: the k-th letter is the k-th tensor factor,
//! leftmost first.  The even operators act by the signature rule, the
//! primitive odd pair acts on the rightmost letter in `{1, 2}`.

use std::fmt;

/// A crystal letter.  Valid values are `1..=n` for the ambient rank `n`.
pub type Letter = u8;

/// Label of a crystal operator pair (raising `e` / lowering `f`).
///
/// `Even(i)` with `1 <= i <= n-1` are the gl(n) operators; `Odd(i)` are the
/// odd operators, with `Odd(1)` primitive and `Odd(i >= 2)` obtained by
/// conjugation with the Weyl action.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OperatorLabel {
    Even(u8),
    Odd(u8),
}

impl OperatorLabel {
    /// All operator labels available at the given rank, in a fixed order.
    pub fn all(rank: u8) -> Vec<OperatorLabel> {
        let mut labels = Vec::new();
        for i in 1..rank {
            labels.push(OperatorLabel::Even(i));
        }
        for i in 1..rank {
            labels.push(OperatorLabel::Odd(i));
        }
        labels
    }

    /// The labels that define the crystal structure and appear as graph
    /// edges: the even operators and the primitive odd pair.  The remaining
    /// odd operators are Weyl conjugates of these and add no connectivity.
    pub fn generators(rank: u8) -> Vec<OperatorLabel> {
        let mut labels: Vec<OperatorLabel> = (1..rank).map(OperatorLabel::Even).collect();
        if rank >= 2 {
            labels.push(OperatorLabel::Odd(1));
        }
        labels
    }

    pub fn index(self) -> u8 {
        match self {
            OperatorLabel::Even(i) | OperatorLabel::Odd(i) => i,
        }
    }

    pub fn is_odd(self) -> bool {
        matches!(self, OperatorLabel::Odd(_))
    }

    /// ASCII rendering: `"1"` for `Even(1)`, `"1~"` for `Odd(1)`.
    pub fn ascii(self) -> String {
        match self {
            OperatorLabel::Even(i) => i.to_string(),
            OperatorLabel::Odd(i) => format!("{i}~"),
        }
    }
}

impl fmt::Display for OperatorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorLabel::Even(i) => write!(f, "{i}"),
            // combining macron, e.g. 1̄
            OperatorLabel::Odd(i) => write!(f, "{i}\u{0304}"),
        }
    }
}

/// Letter-multiplicity vector of length `n`: `counts[j-1]` is the number of
/// occurrences of the letter `j`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVec {
    counts: Vec<u32>,
}

impl WeightVec {
    pub fn new(counts: Vec<u32>) -> Self {
        WeightVec { counts }
    }

    pub fn zero(rank: u8) -> Self {
        WeightVec {
            counts: vec![0; rank as usize],
        }
    }

    pub fn rank(&self) -> u8 {
        self.counts.len() as u8
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn total(&self) -> u32 {
        self.counts.iter().sum()
    }

    /// `<k_j, wt>`: the j-th coordinate (j is 1-based).
    pub fn k_pairing(&self, j: u8) -> u32 {
        self.counts[j as usize - 1]
    }

    /// `<h_i, wt> = counts[i] - counts[i+1]` (i is 1-based).
    pub fn h_pairing(&self, i: u8) -> i64 {
        let i = i as usize;
        self.counts[i - 1] as i64 - self.counts[i] as i64
    }

    /// Add one box in coordinate `j` (1-based), i.e. add `epsilon_j`.
    pub fn bumped(&self, j: u8) -> WeightVec {
        let mut counts = self.counts.clone();
        counts[j as usize - 1] += 1;
        WeightVec { counts }
    }

    /// True when the coordinates read as a strict partition: strictly
    /// decreasing until they hit zero, zeros afterwards.
    pub fn is_strict_partition(&self) -> bool {
        self.counts
            .windows(2)
            .all(|w| w[0] > w[1] || (w[0] == 0 && w[1] == 0))
    }

    /// Image under a permutation: the multiplicity at coordinate `j` moves to
    /// coordinate `p(j)`.
    pub fn permuted(&self, p: &crate::weyl::Permutation) -> WeightVec {
        let mut counts = vec![0; self.counts.len()];
        for (j, &c) in self.counts.iter().enumerate() {
            counts[p.apply(j as u8 + 1) as usize - 1] = c;
        }
        WeightVec { counts }
    }

    pub fn reversed(&self) -> WeightVec {
        let mut counts = self.counts.clone();
        counts.reverse();
        WeightVec { counts }
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.counts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A finite word over `{1, …, rank}`, the universal carrier of the crystal
/// structure.  Words compare lexicographically, which fixes the canonical
/// vertex order everywhere a graph is emitted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
    rank: u8,
}

impl Word {
    /// Panics if a letter falls outside `1..=rank`.
    pub fn new(rank: u8, letters: Vec<Letter>) -> Self {
        assert!(rank >= 1, "rank must be at least 1");
        for &c in &letters {
            assert!(
                (1..=rank).contains(&c),
                "letter {c} out of range for rank {rank}"
            );
        }
        Word { letters, rank }
    }

    pub fn empty(rank: u8) -> Self {
        Word::new(rank, Vec::new())
    }

    pub fn rank(&self) -> u8 {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        assert_eq!(self.rank, other.rank, "rank mismatch in concatenation");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word {
            letters,
            rank: self.rank,
        }
    }

    pub fn with_letter(&self, x: Letter) -> Word {
        assert!((1..=self.rank).contains(&x));
        let mut letters = self.letters.clone();
        letters.push(x);
        Word {
            letters,
            rank: self.rank,
        }
    }

    fn replaced(&self, pos: usize, x: Letter) -> Word {
        let mut letters = self.letters.clone();
        letters[pos] = x;
        Word {
            letters,
            rank: self.rank,
        }
    }

    /// Signature rule bookkeeping for the even index `i`: letters `i` map to
    /// `+`, letters `i+1` to `-`, a `+` immediately left of a `-` cancels.
    /// Returns the positions of the surviving minuses and pluses.
    fn even_signature(&self, i: u8) -> (Vec<usize>, Vec<usize>) {
        assert!(
            i >= 1 && i < self.rank,
            "even index {i} out of range for rank {}",
            self.rank
        );
        let mut minus = Vec::new();
        let mut plus: Vec<usize> = Vec::new();
        for (pos, &c) in self.letters.iter().enumerate() {
            if c == i {
                plus.push(pos);
            } else if c == i + 1 {
                match plus.pop() {
                    Some(_) => {} // cancels
                    None => minus.push(pos),
                }
            }
        }
        (minus, plus)
    }

    /// Position of the rightmost letter in `{1, 2}`, the spot where the
    /// primitive odd operators act.
    fn odd_position(&self) -> Option<usize> {
        self.letters.iter().rposition(|&c| c == 1 || c == 2)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "-");
        }
        if self.rank > 9 {
            for (k, c) in self.letters.iter().enumerate() {
                if k > 0 {
                    write!(f, ".")?;
                }
                write!(f, "{c}")?;
            }
            Ok(())
        } else {
            for c in &self.letters {
                write!(f, "{c}")?;
            }
            Ok(())
        }
    }
}

/// Carrier of a `q(n)`-crystal structure: rank, weight, the even operator
/// pair, and the primitive odd pair.  The Weyl action, the conjugated odd
/// operators and the highest/lowest-weight tests are derived from these in
/// [`crate::weyl::QueerCrystal`].
pub trait CrystalElement: Clone + Eq + Ord + Sized {
    fn rank(&self) -> u8;

    fn weight(&self) -> WeightVec;

    /// Lowering operator for the even index `i` (`1 <= i <= rank-1`).
    fn f_even(&self, i: u8) -> Option<Self>;

    /// Raising operator for the even index `i`.
    fn e_even(&self, i: u8) -> Option<Self>;

    /// The primitive odd lowering operator.
    fn f_odd1(&self) -> Option<Self>;

    /// The primitive odd raising operator.
    fn e_odd1(&self) -> Option<Self>;

    /// `eps_i = max{k : e_i^k != 0}`.
    fn eps(&self, i: u8) -> u32 {
        let mut b = self.clone();
        let mut k = 0;
        while let Some(up) = b.e_even(i) {
            b = up;
            k += 1;
        }
        k
    }

    /// `phi_i = max{k : f_i^k != 0}`.
    fn phi(&self, i: u8) -> u32 {
        let mut b = self.clone();
        let mut k = 0;
        while let Some(down) = b.f_even(i) {
            b = down;
            k += 1;
        }
        k
    }
}

impl CrystalElement for Word {
    fn rank(&self) -> u8 {
        self.rank
    }

    fn weight(&self) -> WeightVec {
        let mut counts = vec![0u32; self.rank as usize];
        for &c in &self.letters {
            counts[c as usize - 1] += 1;
        }
        WeightVec::new(counts)
    }

    fn f_even(&self, i: u8) -> Option<Self> {
        let (_, plus) = self.even_signature(i);
        plus.first().map(|&pos| self.replaced(pos, i + 1))
    }

    fn e_even(&self, i: u8) -> Option<Self> {
        let (minus, _) = self.even_signature(i);
        minus.last().map(|&pos| self.replaced(pos, i))
    }

    fn f_odd1(&self) -> Option<Self> {
        if self.rank < 2 {
            return None; // the odd operators need the letters 1 and 2
        }
        let pos = self.odd_position()?;
        (self.letters[pos] == 1).then(|| self.replaced(pos, 2))
    }

    fn e_odd1(&self) -> Option<Self> {
        if self.rank < 2 {
            return None;
        }
        let pos = self.odd_position()?;
        (self.letters[pos] == 2).then(|| self.replaced(pos, 1))
    }

    fn eps(&self, i: u8) -> u32 {
        self.even_signature(i).0.len() as u32
    }

    fn phi(&self, i: u8) -> u32 {
        self.even_signature(i).1.len() as u32
    }
}
