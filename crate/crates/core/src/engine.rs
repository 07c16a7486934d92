//! Marking-sequence evaluation and the exact locality searches.
//!
//! A marking sequence enumerates the palette; marking colour classes one at
//! a time induces a growing subgraph, and the locality of a sequence is the
//! maximum component count seen at any stage. The minimum over all
//! sequences is the locality of the coloured graph.
//!
//! Three exact solvers are provided:
//!
//! * [`naive_search`] — evaluates every permutation of the palette;
//! * [`priority_search`] with `find_all = true` — best-first expansion of
//!   marking prefixes ordered by their worst-so-far component count,
//!   returning the minimum and *all* optimal sequences;
//! * [`priority_search`] with `find_all = false` (the starred variant) —
//!   same expansion order with a strict queue guard, stopping at the first
//!   provably optimal sequence.
//!
//! Colourings are not required to be valid: the definitions never use
//! validity, and invalid colourings can always be normalised away by
//! [`crate::condense`] without changing the locality.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::components::{count_components_of, gamma, ComponentCounter, MarkFrame, PathCounter};
use crate::graph::{Colouring, ColourId, Graph, VertexId};
use crate::mis::{max_independent_set_size_capped, MisError, DEFAULT_MIS_CAP};
use crate::util::next_permutation;

/// Default palette-size cap for the factorial naive search.
pub const DEFAULT_NAIVE_CAP: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("sequence is not a permutation of the palette")]
    NotAPermutation,
    #[error("palette has {len} colours, above the naive-search cap of {cap} (use force to override)")]
    PaletteTooLarge { len: usize, cap: usize },
    #[error("search timed out")]
    Timeout,
}

/// Caps and deadlines shared by the search entry points.
#[derive(Debug, Clone)]
pub struct SearchLimits {
    pub timeout: Option<Duration>,
    /// Palette cap for `naive_search`.
    pub naive_cap: usize,
    /// Run the naive search even above the cap.
    pub force_naive: bool,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { timeout: None, naive_cap: DEFAULT_NAIVE_CAP, force_naive: false }
    }
}

/// Outcome of an exact search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalityResult {
    /// Minimum locality over all marking sequences.
    pub min_k: usize,
    /// Optimal sequences, sorted lexicographically by colour id. The full
    /// searches return all of them, the starred variant exactly one.
    pub sequences: Vec<Vec<ColourId>>,
    /// Queue pops that triggered child generation (0 for the naive search).
    pub expansions: u64,
    /// Fresh component counts performed.
    pub evaluations: u64,
}

/// Per-pop record for the search-order diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pop {
    /// Worst-so-far component count of the popped prefix.
    pub max_k: usize,
    /// Whether the pop expanded children (false for complete sequences).
    pub expanded: bool,
}

/// Pop-order trace of a priority-search run.
#[derive(Debug, Clone, Default)]
pub struct SearchTrace {
    pub pops: Vec<Pop>,
}

/// Palette classes in sorted colour order, the shared search workhorse.
struct ColourClasses {
    palette: Vec<ColourId>,
    class: Vec<Vec<VertexId>>,
}

impl ColourClasses {
    fn build(g: &Graph, c: &Colouring) -> Self {
        assert_eq!(c.len(), g.n(), "colouring must be total on the graph");
        let palette: Vec<ColourId> = c.palette().to_vec();
        let mut class = vec![Vec::new(); palette.len()];
        for v in 0..g.n() {
            let idx = palette.binary_search(&c.colour(v)).unwrap();
            class[idx].push(v);
        }
        ColourClasses { palette, class }
    }

    fn len(&self) -> usize {
        self.palette.len()
    }
}

fn deadline_of(limits: &SearchLimits) -> Option<Instant> {
    limits.timeout.map(|t| Instant::now() + t)
}

fn timed_out(deadline: Option<Instant>) -> bool {
    deadline.is_some_and(|d| Instant::now() >= d)
}

/// loc(G, c, e): the maximum component count over the stages of `e`.
///
/// `e` must be a permutation of the palette. The empty sequence on an
/// uncoloured (empty) graph evaluates to 0.
pub fn evaluate_sequence(
    g: &Graph,
    c: &Colouring,
    e: &[ColourId],
) -> Result<usize, EngineError> {
    let mut sorted: Vec<ColourId> = e.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != e.len() || sorted != c.palette() {
        return Err(EngineError::NotAPermutation);
    }
    let classes = ColourClasses::build(g, c);
    let mut counter = ComponentCounter::new(g);
    let mut max_k = 0;
    for &colour in e {
        let idx = classes.palette.binary_search(&colour).unwrap();
        let count = counter.mark_class(g, &classes.class[idx]);
        max_k = max_k.max(count);
    }
    Ok(max_k)
}

/// Exhaustive search over every permutation of the palette. Returns the
/// minimum locality and all optimal sequences.
pub fn naive_search(g: &Graph, c: &Colouring) -> Result<LocalityResult, EngineError> {
    naive_search_with(g, c, &SearchLimits::default())
}

pub fn naive_search_with(
    g: &Graph,
    c: &Colouring,
    limits: &SearchLimits,
) -> Result<LocalityResult, EngineError> {
    let classes = ColourClasses::build(g, c);
    let len = classes.len();
    if len > limits.naive_cap && !limits.force_naive {
        return Err(EngineError::PaletteTooLarge { len, cap: limits.naive_cap });
    }
    let deadline = deadline_of(limits);
    if len == 0 {
        return Ok(LocalityResult {
            min_k: 0,
            sequences: vec![Vec::new()],
            expansions: 0,
            evaluations: 0,
        });
    }

    let mut order: Vec<usize> = (0..len).collect();
    let mut min_k = usize::MAX;
    let mut best: Vec<Vec<ColourId>> = Vec::new();
    let mut evaluations = 0u64;
    loop {
        if timed_out(deadline) {
            return Err(EngineError::Timeout);
        }
        let mut counter = ComponentCounter::new(g);
        let mut max_k = 0;
        for &idx in &order {
            let count = counter.mark_class(g, &classes.class[idx]);
            evaluations += 1;
            max_k = max_k.max(count);
        }
        let seq: Vec<ColourId> = order.iter().map(|&i| classes.palette[i]).collect();
        if max_k < min_k {
            min_k = max_k;
            best.clear();
            best.push(seq);
        } else if max_k == min_k {
            best.push(seq);
        }
        if !next_permutation(&mut order) {
            break;
        }
    }
    // Permutations were visited in lexicographic order, so `best` is sorted.
    Ok(LocalityResult { min_k, sequences: best, expansions: 0, evaluations })
}

/// Best-first search over marking prefixes keyed by worst-so-far component
/// count. With `find_all` the result carries every optimal sequence
/// (identical to the naive search); without it (the starred variant) the
/// queue guard is strict and exactly one optimal sequence is returned.
pub fn priority_search(g: &Graph, c: &Colouring, find_all: bool) -> LocalityResult {
    priority_search_with(g, c, find_all, &SearchLimits::default())
        .expect("no limits configured")
}

pub fn priority_search_with(
    g: &Graph,
    c: &Colouring,
    find_all: bool,
    limits: &SearchLimits,
) -> Result<LocalityResult, EngineError> {
    priority_search_inner(g, c, find_all, limits, None)
}

/// `priority_search` that additionally records the pop order, for the
/// search-order diagnostics in the test suites.
pub fn priority_search_traced(
    g: &Graph,
    c: &Colouring,
    find_all: bool,
) -> (LocalityResult, SearchTrace) {
    let mut trace = SearchTrace::default();
    let result = priority_search_inner(g, c, find_all, &SearchLimits::default(), Some(&mut trace))
        .expect("no limits configured");
    (result, trace)
}

/// Shared prefix-tree walker: one undoable counter tracks the marking
/// state of a current prefix path; expanding a popped prefix undoes back
/// to the common ancestor and replays the divergent suffix. Queue pops
/// with equal keys come in lexicographic order, so consecutive expansions
/// usually share long prefixes and the undo/replay work stays small.
struct PrefixWalker<'a> {
    g: &'a Graph,
    classes: &'a ColourClasses,
    counter: PathCounter,
    path: Vec<usize>,
    frames: Vec<MarkFrame>,
}

impl<'a> PrefixWalker<'a> {
    fn new(g: &'a Graph, classes: &'a ColourClasses) -> Self {
        PrefixWalker {
            g,
            classes,
            counter: PathCounter::new(g),
            path: Vec::new(),
            frames: Vec::new(),
        }
    }

    /// Moves the counter onto `prefix`.
    fn descend_to(&mut self, prefix: &[usize]) {
        let lcp = self
            .path
            .iter()
            .zip(prefix)
            .take_while(|(a, b)| a == b)
            .count();
        while self.path.len() > lcp {
            self.path.pop();
            self.counter.undo(self.frames.pop().unwrap());
        }
        for &idx in &prefix[lcp..] {
            let (_, frame) = self.counter.mark_class_framed(self.g, &self.classes.class[idx]);
            self.frames.push(frame);
            self.path.push(idx);
        }
    }

    /// Component count after additionally marking colour `idx`; the
    /// counter state is left unchanged.
    fn probe(&mut self, idx: usize) -> usize {
        self.counter.probe_class_count(self.g, &self.classes.class[idx])
    }
}

fn priority_search_inner(
    g: &Graph,
    c: &Colouring,
    find_all: bool,
    limits: &SearchLimits,
    mut trace: Option<&mut SearchTrace>,
) -> Result<LocalityResult, EngineError> {
    let classes = ColourClasses::build(g, c);
    let len = classes.len();
    let deadline = deadline_of(limits);

    // Queue of (max_k, prefix as dense colour indices), popped in ascending
    // (max_k, lexicographic prefix) order. Prefixes store dense indices;
    // index order equals colour-id order because the palette is sorted.
    let mut queue: BinaryHeap<Reverse<(usize, Vec<usize>)>> = BinaryHeap::new();
    queue.push(Reverse((0, Vec::new())));

    let mut min_k: Option<usize> = None;
    let mut best: Vec<Vec<usize>> = Vec::new();
    let mut expansions = 0u64;
    let mut evaluations = 0u64;
    let mut walker = PrefixWalker::new(g, &classes);
    let mut ticks = 0u32;
    // The last stage of every sequence marks the whole graph.
    let full_gamma = gamma(g);

    while let Some(Reverse((top_k, _))) = queue.peek() {
        match min_k {
            Some(mk) if find_all && *top_k > mk => break,
            Some(mk) if !find_all && *top_k >= mk => break,
            _ => {}
        }
        ticks += 1;
        if ticks & 0x3ff == 0 && timed_out(deadline) {
            return Err(EngineError::Timeout);
        }
        let Reverse((max_k, prefix)) = queue.pop().unwrap();
        let complete = prefix.len() == len;
        if let Some(t) = trace.as_deref_mut() {
            t.pops.push(Pop { max_k, expanded: !complete });
        }
        if complete {
            match min_k {
                None => {
                    min_k = Some(max_k);
                    best.push(prefix);
                }
                Some(mk) if max_k < mk => {
                    min_k = Some(max_k);
                    best.clear();
                    best.push(prefix);
                }
                Some(mk) if max_k == mk && find_all => best.push(prefix),
                _ => {}
            }
            continue;
        }
        expansions += 1;
        let children_complete = prefix.len() + 1 == len;
        if !children_complete {
            walker.descend_to(&prefix);
        }
        for idx in 0..len {
            if prefix.contains(&idx) {
                continue;
            }
            let count = if children_complete {
                full_gamma
            } else {
                walker.probe(idx)
            };
            evaluations += 1;
            let mut child_prefix = Vec::with_capacity(prefix.len() + 1);
            child_prefix.extend_from_slice(&prefix);
            child_prefix.push(idx);
            queue.push(Reverse((max_k.max(count), child_prefix)));
        }
    }

    let mut sequences: Vec<Vec<ColourId>> = best
        .into_iter()
        .map(|p| p.into_iter().map(|i| classes.palette[i]).collect())
        .collect();
    sequences.sort_unstable();
    Ok(LocalityResult {
        min_k: min_k.expect("queue starts non-empty and the guard admits the first completion"),
        sequences,
        expansions,
        evaluations,
    })
}

/// Whether loc(G, c) <= k. Terminates as soon as any complete sequence
/// with worst count <= k pops, or as soon as the queue head exceeds k
/// (pops come in ascending order, so nothing better can follow).
pub fn decide_k_local(g: &Graph, c: &Colouring, k: usize) -> bool {
    let classes = ColourClasses::build(g, c);
    let len = classes.len();
    let mut queue: BinaryHeap<Reverse<(usize, Vec<usize>)>> = BinaryHeap::new();
    queue.push(Reverse((0, Vec::new())));
    let mut walker = PrefixWalker::new(g, &classes);
    let full_gamma = gamma(g);
    while let Some(Reverse((max_k, prefix))) = queue.pop() {
        if max_k > k {
            return false;
        }
        if prefix.len() == len {
            return true;
        }
        let children_complete = prefix.len() + 1 == len;
        if !children_complete {
            walker.descend_to(&prefix);
        }
        for idx in 0..len {
            if prefix.contains(&idx) {
                continue;
            }
            let count = if children_complete {
                full_gamma
            } else {
                walker.probe(idx)
            };
            let child_k = max_k.max(count);
            if child_k <= k {
                let mut child_prefix = Vec::with_capacity(prefix.len() + 1);
                child_prefix.extend_from_slice(&prefix);
                child_prefix.push(idx);
                queue.push(Reverse((child_k, child_prefix)));
            }
        }
    }
    false
}

/// Polynomial decider for 1-locality.
///
/// Greedy growth of a connected marked colour set: start from any colour
/// whose class induces a connected subgraph and repeatedly mark the
/// smallest colour keeping the marked subgraph connected. Once the marked
/// set is non-empty, any greedy choice is safe (see the monotone
/// addability property), so only the first colour needs to range over all
/// connected-class candidates.
///
/// Returns the witnessing sequence on success; it evaluates to 1.
pub fn decide_one_local(g: &Graph, c: &Colouring) -> (bool, Option<Vec<ColourId>>) {
    let classes = ColourClasses::build(g, c);
    let len = classes.len();
    if len == 0 {
        return (true, Some(Vec::new()));
    }
    if gamma(g) != 1 {
        // The final stage always shows gamma(G) components.
        return (false, None);
    }
    for start in 0..len {
        if count_components_of(g, &classes.class[start]) != 1 {
            continue;
        }
        let mut counter = ComponentCounter::new(g);
        counter.mark_class(g, &classes.class[start]);
        let mut order = vec![start];
        let mut used = vec![false; len];
        used[start] = true;
        while order.len() < len {
            let mut advanced = false;
            for y in 0..len {
                if used[y] {
                    continue;
                }
                let mut trial = counter.clone();
                if trial.mark_class(g, &classes.class[y]) == 1 {
                    counter = trial;
                    used[y] = true;
                    order.push(y);
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
        if order.len() == len {
            let seq = order.into_iter().map(|i| classes.palette[i]).collect();
            return (true, Some(seq));
        }
    }
    (false, None)
}

/// A colouring achieving the lower bound gamma(G): every vertex its own
/// colour, marked component by component in spanning-tree discovery order.
/// Evaluating the returned sequence yields exactly gamma(G).
pub fn gamma_colouring(g: &Graph) -> (Colouring, Vec<ColourId>) {
    let colours: Vec<ColourId> = (0..g.n()).map(|v| v as ColourId + 1).collect();
    let colouring = Colouring::new(colours).expect("ids are positive");
    let mut seen = vec![false; g.n()];
    let mut sequence = Vec::with_capacity(g.n());
    let mut stack = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        stack.push(s);
        while let Some(v) = stack.pop() {
            sequence.push(v as ColourId + 1);
            for &u in g.neighbours(v).iter().rev() {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
    }
    (colouring, sequence)
}

/// The universal bracket gamma(G) <= loc(G, c) <= alpha(G). The upper
/// bound is `None` when the graph exceeds the independent-set cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocalityBounds {
    pub lower: usize,
    pub upper: Option<usize>,
}

pub fn locality_bounds(g: &Graph, c: &Colouring) -> LocalityBounds {
    locality_bounds_capped(g, c, DEFAULT_MIS_CAP)
}

pub fn locality_bounds_capped(g: &Graph, c: &Colouring, mis_cap: usize) -> LocalityBounds {
    assert_eq!(c.len(), g.n(), "colouring must be total on the graph");
    let lower = gamma(g);
    let upper = match max_independent_set_size_capped(g, mis_cap) {
        Ok(a) => Some(a),
        Err(MisError::TooLarge { .. }) => None,
    };
    LocalityBounds { lower, upper }
}

/// Line-oriented result report: `min_k`, one `seq` line per optimal
/// sequence (already sorted), then the search counters.
pub fn render_report(result: &LocalityResult) -> String {
    let mut out = String::new();
    out.push_str(&format!("min_k {}\n", result.min_k));
    for seq in &result.sequences {
        out.push_str("seq");
        for colour in seq {
            out.push_str(&format!(" {colour}"));
        }
        out.push('\n');
    }
    out.push_str(&format!("expansions {}\n", result.expansions));
    out.push_str(&format!("evaluations {}\n", result.evaluations));
    out
}
