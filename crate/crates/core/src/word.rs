//! k-locality of words and the word/graph correspondence.
//!
//! A word is a sequence of letters; marking letters one at a time, the
//! locality of a marking sequence is the maximum number of marked blocks
//! (maximal runs of marked letters) over the stages. Words embed into
//! coloured path graphs with blocks corresponding exactly to connected
//! components, so all block counting here goes through the path-graph
//! component machinery — one implementation, two views.

use std::collections::HashMap;

use thiserror::Error;

use crate::components::{count_components, ComponentCounter};
use crate::engine::LocalityResult;
use crate::graph::{Colouring, Graph};
use crate::util::next_permutation;

/// Factorial-enumeration cap on distinct letters.
pub const DEFAULT_WORD_CAP: usize = 9;

/// Subset-DP cap on distinct letters.
const DP_LETTER_CAP: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("word uses {len} distinct letters, above the cap of {cap}")]
    AlphabetTooLarge { len: usize, cap: usize },
    #[error("word is not condensed (adjacent equal letters at position {at})")]
    NotCondensed { at: usize },
    #[error(
        "parity transform failed its locality-preservation check: \
         input locality {input}, output locality {output}"
    )]
    PreservationFailed { input: usize, output: usize },
}

/// A finite word over integer letter ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    symbols: Vec<u32>,
}

impl Word {
    pub fn new(symbols: Vec<u32>) -> Self {
        Word { symbols }
    }

    /// Maps ASCII letters to ids in first-occurrence order; returns the
    /// word and the letter table (`table[id] = character`).
    pub fn from_ascii(s: &str) -> (Self, Vec<char>) {
        let mut table = Vec::new();
        let mut ids = HashMap::new();
        let symbols = s
            .chars()
            .map(|ch| {
                *ids.entry(ch).or_insert_with(|| {
                    table.push(ch);
                    table.len() as u32 - 1
                })
            })
            .collect();
        (Word { symbols }, table)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    /// Sorted distinct letters.
    pub fn letters(&self) -> Vec<u32> {
        let mut ls = self.symbols.clone();
        ls.sort_unstable();
        ls.dedup();
        ls
    }
}

/// Collapses maximal runs of equal letters to single letters; preserves
/// strict locality.
pub fn condense_word(w: &Word) -> Word {
    let mut out: Vec<u32> = Vec::with_capacity(w.len());
    for &s in w.symbols() {
        if out.last() != Some(&s) {
            out.push(s);
        }
    }
    Word::new(out)
}

/// The coloured path graph of a word: vertex i is position i, consecutive
/// positions are adjacent, and the colour of a vertex is its letter
/// (shifted by one to keep colour ids positive). Marked blocks of the word
/// correspond exactly to connected components of the marked subgraph, so
/// word locality equals graph locality.
pub fn word_to_path_graph(w: &Word) -> (Graph, Colouring) {
    let n = w.len();
    let g = Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap();
    let colours = w.symbols().iter().map(|&s| s + 1).collect();
    (g, Colouring::new(colours).expect("letter ids shifted to positive"))
}

/// Minimum over all marking sequences of the maximum marked-block count,
/// by enumerating every permutation of the alphabet.
pub fn word_locality_bruteforce(w: &Word) -> Result<usize, WordError> {
    word_locality_bruteforce_capped(w, DEFAULT_WORD_CAP)
}

pub fn word_locality_bruteforce_capped(w: &Word, cap: usize) -> Result<usize, WordError> {
    let letters = w.letters();
    if letters.len() > cap {
        return Err(WordError::AlphabetTooLarge { len: letters.len(), cap });
    }
    if letters.is_empty() {
        return Ok(0);
    }
    let (g, _) = word_to_path_graph(w);
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); letters.len()];
    for (pos, &s) in w.symbols().iter().enumerate() {
        let idx = letters.binary_search(&s).unwrap();
        classes[idx].push(pos);
    }
    let mut order: Vec<usize> = (0..letters.len()).collect();
    let mut best = usize::MAX;
    loop {
        let mut counter = ComponentCounter::new(&g);
        let mut max_blocks = 0;
        for &idx in &order {
            max_blocks = max_blocks.max(counter.mark_class(&g, &classes[idx]));
            if max_blocks >= best {
                break;
            }
        }
        best = best.min(max_blocks);
        if !next_permutation(&mut order) {
            break;
        }
    }
    Ok(best)
}

/// Exact word locality by dynamic programming over letter subsets.
/// Independent route used to cross-check the enumeration and to gate the
/// parity transform; block counts per subset come from a fresh component
/// traversal of the path graph.
pub fn word_locality_dp(w: &Word) -> Result<usize, WordError> {
    let letters = w.letters();
    let l = letters.len();
    if l > DP_LETTER_CAP {
        return Err(WordError::AlphabetTooLarge { len: l, cap: DP_LETTER_CAP });
    }
    if l == 0 {
        return Ok(0);
    }
    let (g, _) = word_to_path_graph(w);
    let letter_idx: Vec<usize> = w
        .symbols()
        .iter()
        .map(|s| letters.binary_search(s).unwrap())
        .collect();
    let full = (1usize << l) - 1;
    let blocks = |mask: usize| -> usize {
        let marked: Vec<bool> = letter_idx.iter().map(|&i| mask & (1 << i) != 0).collect();
        count_components(&g, &marked)
    };
    // best[mask] = min over orderings of mask of the worst stage count.
    let mut best = vec![usize::MAX; full + 1];
    best[0] = 0;
    for mask in 1..=full {
        let stage = blocks(mask);
        let mut b = usize::MAX;
        let mut rest = mask;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            b = b.min(best[mask ^ bit]);
        }
        best[mask] = b.max(stage);
    }
    Ok(best[full])
}

/// Output of [`tilde_transform`]: the rewritten word plus the id offset of
/// the tilde copies (`letter + tilde_offset` is the tilde of `letter`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TildeWord {
    pub word: Word,
    pub tilde_offset: u32,
}

impl TildeWord {
    pub fn is_tilde(&self, symbol: u32) -> bool {
        symbol >= self.tilde_offset
    }

    pub fn base_letter(&self, symbol: u32) -> u32 {
        if self.is_tilde(symbol) {
            symbol - self.tilde_offset
        } else {
            symbol
        }
    }
}

/// Rewrites a condensed word so that every letter occurs only at even or
/// only at odd positions, preserving strict locality.
///
/// Each letter commits to the parity of its first occurrence; whenever the
/// next occurrence of `x` would land on the wrong parity, the tilde copy
/// of `x` is emitted just before it as padding. Tilde copies therefore
/// always sit at the parity opposite their base letter and are themselves
/// parity-consistent.
///
/// The construction is gated behind a mandatory preservation check: the
/// localities of input and output are computed exactly and any mismatch is
/// reported as an error instead of returning a wrong transform.
pub fn tilde_transform(w: &Word) -> Result<TildeWord, WordError> {
    if let Some(at) = w.symbols().windows(2).position(|p| p[0] == p[1]) {
        return Err(WordError::NotCondensed { at });
    }
    let letters = w.letters();
    if letters.len() > DEFAULT_WORD_CAP {
        return Err(WordError::AlphabetTooLarge {
            len: letters.len(),
            cap: DEFAULT_WORD_CAP,
        });
    }
    let tilde_offset = letters.iter().max().map_or(1, |&m| m + 1);
    let mut committed: HashMap<u32, usize> = HashMap::new();
    let mut out: Vec<u32> = Vec::with_capacity(w.len());
    for &s in w.symbols() {
        let landing = out.len() + 1; // 1-indexed position
        match committed.get(&s) {
            None => {
                committed.insert(s, landing % 2);
                out.push(s);
            }
            Some(&parity) if landing % 2 == parity => out.push(s),
            Some(_) => {
                out.push(s + tilde_offset);
                out.push(s);
            }
        }
    }
    let word = Word::new(out);
    debug_assert!(parity_separated(&word));
    let input = word_locality_dp(w)?;
    let output = word_locality_dp(&word)?;
    if input != output {
        return Err(WordError::PreservationFailed { input, output });
    }
    Ok(TildeWord { word, tilde_offset })
}

/// Every letter occupies positions of a single parity (1-indexed).
pub fn parity_separated(w: &Word) -> bool {
    let mut parity: HashMap<u32, usize> = HashMap::new();
    for (i, &s) in w.symbols().iter().enumerate() {
        let p = (i + 1) % 2;
        match parity.get(&s) {
            None => {
                parity.insert(s, p);
            }
            Some(&q) if q == p => {}
            Some(_) => return false,
        }
    }
    true
}

/// Convenience: exact locality of the word's path graph via the priority
/// search, for cross-checks against the word-side routes.
pub fn word_locality_via_graph(w: &Word) -> LocalityResult {
    let (g, c) = word_to_path_graph(w);
    crate::engine::priority_search(&g, &c, false)
}
