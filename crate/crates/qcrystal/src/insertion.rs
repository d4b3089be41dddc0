//! The bumping insertion `T ← x`, tableau insertion `T ← T'`, the queer
//! Knuth relation, and the seeded crystal-equivalence check.

use std::collections::{BTreeMap, VecDeque};

use crate::ssdt::{hook_split, is_hook, ShiftedTableau};
use crate::weyl::QueerCrystal;
use crate::word::{CrystalElement, Letter, OperatorLabel, Word};

/// Insert one letter by the row-bumping procedure: append when the row stays
/// a hook word, otherwise replace the leftmost element of the increasing
/// part that is `>= x`, move it onto the leftmost strictly smaller element
/// of the decreasing part, and carry the displaced letter into the next row.
pub fn insert_letter(t: &ShiftedTableau, x: Letter) -> ShiftedTableau {
    debug_assert!(t.is_valid(), "insertion requires a valid tableau");
    assert!(
        x >= 1 && x <= t.rank(),
        "letter {x} out of range for rank {}",
        t.rank()
    );
    let mut rows: Vec<Vec<Letter>> = t.rows().to_vec();
    let mut carry = x;
    let mut row = 0;
    loop {
        if row == rows.len() {
            rows.push(vec![carry]);
            break;
        }
        let extended: Vec<Letter> = {
            let mut v = rows[row].clone();
            v.push(carry);
            v
        };
        if is_hook(&extended) {
            rows[row] = extended;
            break;
        }
        let v = &mut rows[row];
        let split = hook_split(v).expect("tableau rows are hook words");
        // Leftmost element of the increasing part >= carry; it exists,
        // otherwise the extended row would have been a hook word.
        let j = (split..v.len())
            .find(|&p| v[p] >= carry)
            .expect("bumping position in the increasing part");
        let mid = v[j];
        v[j] = carry;
        // Leftmost element of the decreasing part strictly below the bumped
        // value; the split element qualifies, so it exists.
        let i = (0..split)
            .find(|&p| v[p] < mid)
            .expect("bumping position in the decreasing part");
        carry = v[i];
        v[i] = mid;
        row += 1;
    }
    let out = ShiftedTableau::from_rows(t.rank(), rows)
        .expect("insertion grows the shape by one box");
    debug_assert!(out.is_valid(), "insertion produced an invalid tableau");
    out
}

/// `T ← T'`: fold the letters of the reading word of `T'` into `T`.
pub fn insert_tableau(t: &ShiftedTableau, other: &ShiftedTableau) -> ShiftedTableau {
    other
        .reading_word()
        .letters()
        .iter()
        .fold(t.clone(), |acc, &c| insert_letter(&acc, c))
}

/// The queer Knuth relation on length-4 words: the eight-case local
/// rewriting realizing a crystal isomorphism between the components of
/// `1121` and `1211`.  Returns `None` off its domain.  Panics unless the
/// word has length 4.
pub fn knuth_map(w: &Word) -> Option<Word> {
    assert_eq!(w.len(), 4, "the Knuth relation acts on words of length 4");
    let [a, b, c, d] = <[Letter; 4]>::try_from(w.letters()).unwrap();
    let image = if (d <= b && b <= a && a < c)
        || (b < d && d <= a && a < c)
        || (b <= a && a < d && d <= c)
        || (a < b && b < d && d <= c)
    {
        [a, c, b, d]
    } else if (b < d && d <= c && c <= a) || (d <= b && b < c && c <= a) {
        [b, a, c, d]
    } else if (a < d && d <= b && b < c) || (d <= a && a < b && b < c) {
        [a, b, d, c]
    } else {
        return None;
    };
    Some(Word::new(w.rank(), image.to_vec()))
}

/// Seeded isomorphism check: grow the pairing `a ↦ b` over both connected
/// components simultaneously and verify it stays a label-preserving,
/// weight-preserving bijection.
pub fn crystal_equivalent<V: CrystalElement>(a: &V, b: &V) -> bool {
    if a.rank() != b.rank() {
        return false;
    }
    let labels = OperatorLabel::all(a.rank());
    let mut forward: BTreeMap<V, V> = BTreeMap::new();
    let mut backward: BTreeMap<V, V> = BTreeMap::new();
    let mut queue = VecDeque::new();
    forward.insert(a.clone(), b.clone());
    backward.insert(b.clone(), a.clone());
    queue.push_back((a.clone(), b.clone()));
    while let Some((u, v)) = queue.pop_front() {
        if u.weight() != v.weight() {
            return false;
        }
        for &op in &labels {
            let steps = [(u.apply_f(op), v.apply_f(op)), (u.apply_e(op), v.apply_e(op))];
            for step in steps {
                match step {
                    (None, None) => {}
                    (Some(nu), Some(nv)) => {
                        let seen_forward = forward.get(&nu);
                        let seen_backward = backward.get(&nv);
                        match (seen_forward, seen_backward) {
                            (None, None) => {
                                forward.insert(nu.clone(), nv.clone());
                                backward.insert(nv.clone(), nu.clone());
                                queue.push_back((nu, nv));
                            }
                            (Some(mapped), Some(premapped)) => {
                                if mapped != &nv || premapped != &nu {
                                    return false;
                                }
                            }
                            _ => return false,
                        }
                    }
                    _ => return false,
                }
            }
        }
    }
    true
}
