//! Shifted shapes, hook words, and semistandard decomposition tableaux,
//! together with the extremal tableaux and the irreducible crystal built by
//! operator closure.

use std::fmt;

use thiserror::Error;

use crate::graph::CrystalGraph;
use crate::word::{CrystalElement, Letter, WeightVec, Word};

/// A strictly decreasing sequence of positive integers.  Labels both shifted
/// shapes and irreducible crystals.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StrictPartition {
    parts: Vec<u32>,
}

impl StrictPartition {
    /// Panics unless the parts are strictly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Self {
        Self::try_new(parts).expect("parts must be strictly decreasing and positive")
    }

    pub fn try_new(parts: Vec<u32>) -> Option<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] > w[1]);
        ok.then_some(StrictPartition { parts })
    }

    pub fn empty() -> Self {
        StrictPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Strips trailing zeros from a weight vector; `None` if the result is
    /// not strictly decreasing.
    pub fn from_weight(wt: &WeightVec) -> Option<Self> {
        let mut parts: Vec<u32> = wt.counts().to_vec();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self::try_new(parts)
    }

    /// The weight with the parts padded by zeros to length `n`.
    pub fn to_weight(&self, rank: u8) -> WeightVec {
        assert!(self.len() <= rank as usize, "partition longer than rank");
        let mut counts = self.parts.clone();
        counts.resize(rank as usize, 0);
        WeightVec::new(counts)
    }

    /// Add one box at the 1-based `row`; `None` unless the result is again a
    /// shifted shape.
    pub fn add_box(&self, row: usize) -> Option<StrictPartition> {
        let r = self.len();
        if row >= 1 && row <= r {
            let grown = self.parts[row - 1] + 1;
            if row >= 2 && self.parts[row - 2] <= grown {
                return None;
            }
            let mut parts = self.parts.clone();
            parts[row - 1] = grown;
            Some(StrictPartition { parts })
        } else if row == r + 1 {
            if r > 0 && self.parts[r - 1] < 2 {
                return None;
            }
            let mut parts = self.parts.clone();
            parts.push(1);
            Some(StrictPartition { parts })
        } else {
            None
        }
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Split point of a hook word: `Some(k)` when the word is
/// `u_1 >= … >= u_k < u_{k+1} < … < u_N` with `k` the length of the
/// (necessarily non-empty) weakly decreasing part.  The split is unique.
/// Empty words are not hook words.
pub fn hook_split(word: &[Letter]) -> Option<usize> {
    if word.is_empty() {
        return None;
    }
    let mut k = 1;
    while k < word.len() && word[k - 1] >= word[k] {
        k += 1;
    }
    word[k..]
        .windows(2)
        .all(|w| w[0] < w[1])
        .then_some(k)
}

pub fn is_hook(word: &[Letter]) -> bool {
    hook_split(word).is_some()
}

/// Length of the longest (not necessarily contiguous) subword that is a hook
/// word.  Quadratic pivot sweep: longest weakly decreasing run ending at the
/// pivot plus longest strictly increasing run after it with larger values.
pub fn max_hook_subword_len(word: &[Letter]) -> usize {
    let n = word.len();
    if n == 0 {
        return 0;
    }
    // dec[p]: longest weakly decreasing subword ending at p
    let mut dec = vec![1usize; n];
    for p in 0..n {
        for q in 0..p {
            if word[q] >= word[p] {
                dec[p] = dec[p].max(dec[q] + 1);
            }
        }
    }
    // inc[p]: longest strictly increasing subword starting at p
    let mut inc = vec![1usize; n];
    for p in (0..n).rev() {
        for r in p + 1..n {
            if word[r] > word[p] {
                inc[p] = inc[p].max(inc[r] + 1);
            }
        }
    }
    let mut best = 0;
    for p in 0..n {
        let mut tail = 0;
        for q in p + 1..n {
            if word[q] > word[p] {
                tail = tail.max(inc[q]);
            }
        }
        best = best.max(dec[p] + tail);
    }
    best
}

/// Why a filling fails to be a semistandard decomposition tableau.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SsdtViolation {
    /// Condition (i): a row word is not a hook word.
    #[error("condition (i): row {row} ({word}) is not a hook word")]
    RowNotHook { row: usize, word: String },
    /// Condition (ii): a row is not a hook subword of maximal length in its
    /// concatenation with the row below.
    #[error(
        "condition (ii): row {row} admits a hook subword of length {found} > {expected} in its concatenation with row {}",
        row + 1
    )]
    RowNotMaximal {
        row: usize,
        expected: usize,
        found: usize,
    },
}

/// Malformed tableau data, before semistandardness is even considered.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("row lengths {0:?} do not form a strict partition")]
    ShapeNotStrict(Vec<usize>),
    #[error("letter {letter} out of range for rank {rank}")]
    LetterOutOfRange { letter: Letter, rank: u8 },
}

/// A filling of a shifted shape, stored row by row from the top.  The shift
/// affects only display, not storage.  Semistandardness is checked by
/// [`ShiftedTableau::validate`]; the constructors only enforce the shape.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShiftedTableau {
    rows: Vec<Vec<Letter>>,
    rank: u8,
}

impl ShiftedTableau {
    pub fn from_rows(rank: u8, rows: Vec<Vec<Letter>>) -> Result<Self, TableauError> {
        let lengths: Vec<usize> = rows.iter().map(Vec::len).collect();
        let strict = lengths.iter().all(|&l| l > 0)
            && lengths.windows(2).all(|w| w[0] > w[1]);
        if !strict {
            return Err(TableauError::ShapeNotStrict(lengths));
        }
        for row in &rows {
            for &c in row {
                if c < 1 || c > rank {
                    return Err(TableauError::LetterOutOfRange { letter: c, rank });
                }
            }
        }
        Ok(ShiftedTableau { rows, rank })
    }

    pub fn empty(rank: u8) -> Self {
        ShiftedTableau {
            rows: Vec::new(),
            rank,
        }
    }

    /// Cut a reading word back into rows: the prefix is the bottom row.
    /// Panics if the word length does not match the shape.
    pub fn from_reading_word(shape: &StrictPartition, word: &Word) -> Self {
        assert_eq!(
            shape.size() as usize,
            word.len(),
            "reading word length does not match shape"
        );
        let mut rows = vec![Vec::new(); shape.len()];
        let mut offset = 0;
        for k in (0..shape.len()).rev() {
            let len = shape.parts()[k] as usize;
            rows[k] = word.letters()[offset..offset + len].to_vec();
            offset += len;
        }
        ShiftedTableau {
            rows,
            rank: word.rank(),
        }
    }

    pub fn rank(&self) -> u8 {
        self.rank
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn shape(&self) -> StrictPartition {
        StrictPartition::new(self.rows.iter().map(|r| r.len() as u32).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Row words from bottom to top, concatenated.
    pub fn reading_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.size());
        for row in self.rows.iter().rev() {
            letters.extend_from_slice(row);
        }
        Word::new(self.rank, letters)
    }

    /// Check the two semistandardness conditions.
    pub fn validate(&self) -> Result<(), SsdtViolation> {
        for (k, row) in self.rows.iter().enumerate() {
            if !is_hook(row) {
                return Err(SsdtViolation::RowNotHook {
                    row: k + 1,
                    word: row.iter().map(|c| c.to_string()).collect(),
                });
            }
        }
        for k in 0..self.rows.len().saturating_sub(1) {
            let mut joined = self.rows[k + 1].clone();
            joined.extend_from_slice(&self.rows[k]);
            let found = max_hook_subword_len(&joined);
            let expected = self.rows[k].len();
            if found != expected {
                return Err(SsdtViolation::RowNotMaximal {
                    row: k + 1,
                    expected,
                    found,
                });
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    fn transformed<F>(&self, f: F) -> Option<ShiftedTableau>
    where
        F: FnOnce(&Word) -> Option<Word>,
    {
        let image = f(&self.reading_word())?;
        let out = ShiftedTableau::from_reading_word(&self.shape(), &image);
        // Stability of the tableau crystal: any operator image of a valid
        // tableau must again be valid.  A failure here is a bug.
        assert!(
            out.is_valid(),
            "operator image {out} of {self} is not a semistandard decomposition tableau"
        );
        Some(out)
    }
}

impl fmt::Display for ShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "-");
        }
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                write!(f, "/")?;
            }
            if self.rank > 9 {
                for (j, c) in row.iter().enumerate() {
                    if j > 0 {
                        write!(f, ".")?;
                    }
                    write!(f, "{c}")?;
                }
            } else {
                for c in row {
                    write!(f, "{c}")?;
                }
            }
        }
        Ok(())
    }
}

impl CrystalElement for ShiftedTableau {
    fn rank(&self) -> u8 {
        self.rank
    }

    fn weight(&self) -> WeightVec {
        self.reading_word().weight()
    }

    fn f_even(&self, i: u8) -> Option<Self> {
        self.transformed(|w| w.f_even(i))
    }

    fn e_even(&self, i: u8) -> Option<Self> {
        self.transformed(|w| w.e_even(i))
    }

    fn f_odd1(&self) -> Option<Self> {
        self.transformed(|w| w.f_odd1())
    }

    fn e_odd1(&self) -> Option<Self> {
        self.transformed(|w| w.e_odd1())
    }

    fn eps(&self, i: u8) -> u32 {
        self.reading_word().eps(i)
    }

    fn phi(&self, i: u8) -> u32 {
        self.reading_word().phi(i)
    }
}

/// The highest weight tableau of shape `lambda`: row `k` (from the top)
/// reads `(r-k+1)^{λ_r} (r-k)^{λ_{r-1}-λ_r} ⋯ 1^{λ_k - λ_{k+1}}` where `r`
/// is the number of rows.  Panics if the shape has more than `rank` rows.
pub fn highest_tableau(shape: &StrictPartition, rank: u8) -> ShiftedTableau {
    let r = shape.len();
    assert!(r <= rank as usize, "shape has more rows than the rank");
    let part = |k: usize| -> u32 {
        if k >= 1 && k <= r {
            shape.parts()[k - 1]
        } else {
            0
        }
    };
    let mut rows = Vec::with_capacity(r);
    for k in 1..=r {
        let mut row = Vec::new();
        for m in 0..=(r - k) {
            let letter = (r - k + 1 - m) as Letter;
            let count = part(r - m) - part(r - m + 1);
            row.extend(std::iter::repeat(letter).take(count as usize));
        }
        rows.push(row);
    }
    ShiftedTableau::from_rows(rank, rows).expect("extremal tableau has the input shape")
}

/// The lowest weight tableau of shape `lambda`: row `k` is filled with the
/// constant letter `rank - k + 1`.
pub fn lowest_tableau(shape: &StrictPartition, rank: u8) -> ShiftedTableau {
    let r = shape.len();
    assert!(r <= rank as usize, "shape has more rows than the rank");
    let rows = (1..=r)
        .map(|k| vec![(rank as usize - k + 1) as Letter; shape.parts()[k - 1] as usize])
        .collect();
    ShiftedTableau::from_rows(rank, rows).expect("extremal tableau has the input shape")
}

/// The irreducible crystal `B(lambda)`: closure of the highest weight
/// tableau under all operators.
pub fn build_crystal(shape: &StrictPartition, rank: u8) -> CrystalGraph<ShiftedTableau> {
    CrystalGraph::closure(rank, [highest_tableau(shape, rank)], None)
        .expect("unbounded closure cannot exceed a budget")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tab(rank: u8, rows: &[&str]) -> ShiftedTableau {
        ShiftedTableau::from_rows(
            rank,
            rows.iter()
                .map(|r| r.bytes().map(|b| b - b'0').collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn add_box_tracks_shifted_shapes() {
        let lam = StrictPartition::new(vec![3]);
        assert_eq!(lam.add_box(1), Some(StrictPartition::new(vec![4])));
        assert_eq!(lam.add_box(2), Some(StrictPartition::new(vec![3, 1])));
        assert_eq!(lam.add_box(3), None);
        let mu = StrictPartition::new(vec![3, 2]);
        assert_eq!(mu.add_box(2), None); // (3,3) is not strict
        assert_eq!(StrictPartition::new(vec![1]).add_box(2), None);
        assert_eq!(
            StrictPartition::empty().add_box(1),
            Some(StrictPartition::new(vec![1]))
        );
    }

    #[test]
    fn hook_split_examples() {
        assert_eq!(hook_split(&[6, 6, 1, 3, 5]), Some(3));
        assert_eq!(hook_split(&[1, 2, 1]), None);
        assert_eq!(hook_split(&[2]), Some(1));
        assert_eq!(hook_split(&[]), None);
        assert_eq!(hook_split(&[3, 2, 1]), Some(3)); // empty increasing part
        assert_eq!(hook_split(&[1, 2, 3]), Some(1));
    }

    #[test]
    fn max_hook_subword_examples() {
        assert_eq!(max_hook_subword_len(&[1, 1, 2, 3]), 4);
        assert_eq!(max_hook_subword_len(&[1, 2, 1, 1]), 3);
        assert_eq!(max_hook_subword_len(&[]), 0);
    }

    // Oracle: try every subset.
    fn max_hook_brute(word: &[Letter]) -> usize {
        let n = word.len();
        let mut best = 0;
        for mask in 0u32..(1 << n) {
            let sub: Vec<Letter> = (0..n)
                .filter(|&k| mask & (1 << k) != 0)
                .map(|k| word[k])
                .collect();
            if is_hook(&sub) {
                best = best.max(sub.len());
            }
        }
        best
    }

    proptest! {
        #[test]
        fn max_hook_subword_matches_brute_force(
            word in proptest::collection::vec(1u8..=5, 0..12)
        ) {
            prop_assert_eq!(max_hook_subword_len(&word), max_hook_brute(&word));
        }
    }

    #[test]
    fn validate_examples() {
        assert!(tab(3, &["211", "1"]).is_valid());
        assert!(tab(3, &["222", "1"]).is_valid());
        assert!(tab(3, &["213", "1"]).is_valid());
        assert!(tab(3, &["212", "1"]).is_valid());
        assert_eq!(
            tab(3, &["123", "1"]).validate(),
            Err(SsdtViolation::RowNotMaximal {
                row: 1,
                expected: 3,
                found: 4
            })
        );
        assert!(matches!(
            tab(3, &["121", "1"]).validate(),
            Err(SsdtViolation::RowNotHook { row: 1, .. })
        ));
    }

    #[test]
    fn reading_word_bottom_to_top() {
        assert_eq!(tab(3, &["211", "1"]).reading_word().to_string(), "1211");
        assert_eq!(tab(6, &["66135"]).reading_word().to_string(), "66135");
        assert_eq!(
            tab(6, &["66325", "421", "3"]).reading_word().to_string(),
            "342166325"
        );
    }

    #[test]
    fn reading_word_round_trips() {
        let t = tab(6, &["66325", "421", "3"]);
        let back = ShiftedTableau::from_reading_word(&t.shape(), &t.reading_word());
        assert_eq!(back, t);
    }

    #[test]
    fn extremal_tableaux_examples() {
        let lam = StrictPartition::new(vec![7, 4, 2]);
        assert_eq!(highest_tableau(&lam, 4).to_string(), "3322111/2211/11");
        assert_eq!(lowest_tableau(&lam, 4).to_string(), "4444444/3333/22");
        let lam = StrictPartition::new(vec![3, 1]);
        assert_eq!(highest_tableau(&lam, 3).to_string(), "211/1");
        assert_eq!(lowest_tableau(&lam, 3).to_string(), "333/2");
        let lam = StrictPartition::new(vec![4]);
        assert_eq!(highest_tableau(&lam, 2).to_string(), "1111");
        assert_eq!(lowest_tableau(&lam, 2).to_string(), "2222");
        assert!(highest_tableau(&StrictPartition::empty(), 3).is_empty());
    }

    #[test]
    fn crystal_vertex_counts() {
        let n = 3;
        assert_eq!(build_crystal(&StrictPartition::new(vec![2, 1]), n).vertex_count(), 8);
        assert_eq!(build_crystal(&StrictPartition::new(vec![3]), n).vertex_count(), 19);
        assert_eq!(build_crystal(&StrictPartition::new(vec![3, 1]), n).vertex_count(), 24);
    }

    #[test]
    fn empty_shape_crystal_is_a_point() {
        let g = build_crystal(&StrictPartition::empty(), 3);
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edges().count(), 0);
    }
}
