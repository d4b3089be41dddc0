//! Shared enumeration helpers for the integration suites.

#![allow(dead_code)]

use qcrystal::{StrictPartition, Word};

/// Every word of exactly the given length.
pub fn words_of(len: usize, rank: u8) -> Vec<Word> {
    let mut words = vec![Vec::new()];
    for _ in 0..len {
        words = words
            .into_iter()
            .flat_map(|w| {
                (1..=rank).map(move |c| {
                    let mut next = w.clone();
                    next.push(c);
                    next
                })
            })
            .collect();
    }
    words.into_iter().map(|w| Word::new(rank, w)).collect()
}

/// Every word of length `0..=max_len`.
pub fn words_up_to(max_len: usize, rank: u8) -> Vec<Word> {
    (0..=max_len).flat_map(|l| words_of(l, rank)).collect()
}

fn partitions_of(size: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
    if size == 0 {
        out.push(StrictPartition::new(prefix.clone()));
        return;
    }
    let hi = size.min(max_part);
    for part in (1..=hi).rev() {
        prefix.push(part);
        partitions_of(size - part, part.saturating_sub(1), prefix, out);
        prefix.pop();
    }
}

/// Every strict partition with `size <= max_size` and at most `max_len`
/// parts, the empty partition included.
pub fn strict_partitions_up_to(max_size: u32, max_len: usize) -> Vec<StrictPartition> {
    let mut out = Vec::new();
    for size in 0..=max_size {
        let mut buf = Vec::new();
        partitions_of(size, size, &mut buf, &mut out);
    }
    out.retain(|p| p.len() <= max_len);
    out
}

pub fn word(rank: u8, s: &str) -> Word {
    Word::new(rank, s.bytes().map(|b| b - b'0').collect())
}

pub fn sp(parts: &[u32]) -> StrictPartition {
    StrictPartition::new(parts.to_vec())
}
