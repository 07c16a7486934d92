//! Exhaustive and randomised instance enumeration used by the test
//! suites: unlabeled graphs up to isomorphism, vertex partitions as
//! colourings up to colour renaming, and seeded random instances.

#![doc(hidden)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::components::is_connected;
use crate::graph::{Colouring, ColourId, Graph};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut perms = vec![(0..n).collect::<Vec<usize>>()];
    let mut base: Vec<usize> = (0..n).collect();
    while crate::util::next_permutation(&mut base) {
        perms.push(base.clone());
    }
    perms
}

/// All graphs on exactly `n` vertices up to isomorphism (canonical
/// minimum-bitmask representatives). Feasible for `n <= 6`.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Vec<Graph> {
    assert!(n <= 6, "exhaustive enumeration is limited to n <= 6");
    if n == 0 {
        return vec![Graph::new(0, Vec::new()).unwrap()];
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut pair_bit = vec![vec![0usize; n]; n];
    for (b, &(u, v)) in pairs.iter().enumerate() {
        pair_bit[u][v] = b;
        pair_bit[v][u] = b;
    }
    // Per permutation, where each edge bit lands after relabelling.
    let bit_maps: Vec<Vec<u32>> = permutations(n)
        .iter()
        .map(|perm| {
            pairs
                .iter()
                .map(|&(u, v)| pair_bit[perm[u]][perm[v]] as u32)
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    'mask: for mask in 0u32..(1 << pairs.len()) {
        for map in &bit_maps {
            let mut m = 0u32;
            for (b, &target) in map.iter().enumerate() {
                if mask & (1 << b) != 0 {
                    m |= 1 << target;
                }
            }
            if m < mask {
                continue 'mask; // not the canonical representative
            }
        }
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask & (1 << b) != 0)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(n, edges).unwrap();
        if connected_only && !is_connected(&g) {
            continue;
        }
        out.push(g);
    }
    out
}

/// All partitions of `n` vertices into at most `max_blocks` colour
/// classes, as colour vectors in canonical first-occurrence order
/// (colour ids 1..). This is "all colourings up to colour renaming";
/// validity is not required.
pub fn partitions_up_to(n: usize, max_blocks: usize) -> Vec<Vec<ColourId>> {
    let mut out = Vec::new();
    let mut current: Vec<ColourId> = Vec::with_capacity(n);
    fn rec(
        n: usize,
        max_blocks: usize,
        used: u32,
        current: &mut Vec<ColourId>,
        out: &mut Vec<Vec<ColourId>>,
    ) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        let limit = (used + 1).min(max_blocks as u32);
        for c in 1..=limit {
            current.push(c);
            rec(n, max_blocks, used.max(c), current, out);
            current.pop();
        }
    }
    if n == 0 {
        return vec![Vec::new()];
    }
    rec(n, max_blocks, 0, &mut current, &mut out);
    out
}

/// The exhaustive instance corpus: every connected graph on `1..=n`
/// vertices up to isomorphism, paired with every colouring into at most
/// `max_colours` colours up to renaming.
pub fn exhaustive_instances(n: usize, max_colours: usize) -> Vec<(Graph, Colouring)> {
    let mut out = Vec::new();
    for size in 1..=n {
        for g in enumerate_graphs(size, true) {
            for colours in partitions_up_to(size, max_colours) {
                let c = Colouring::new(colours).unwrap();
                out.push((g.clone(), c));
            }
        }
    }
    out
}

/// Erdos-Renyi-style random graph (possibly disconnected).
pub fn random_graph(n: usize, edge_prob: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Uniform colouring over `1..=l` with no constraints (may be invalid and
/// may miss colours).
pub fn random_any_colouring(n: usize, l: usize, rng: &mut impl Rng) -> Colouring {
    let colours: Vec<ColourId> = (0..n).map(|_| rng.gen_range(1..=l as u32)).collect();
    Colouring::new(colours).unwrap()
}

/// Random proper colouring: random vertex order, each vertex picks
/// uniformly among the non-conflicting colours seen so far or a fresh one.
pub fn random_valid_colouring(g: &Graph, rng: &mut impl Rng) -> Colouring {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    let mut colour_of = vec![0u32; n];
    let mut used: u32 = 0;
    for &v in &order {
        let banned: Vec<u32> = g
            .neighbours(v)
            .iter()
            .map(|&u| colour_of[u])
            .filter(|&c| c != 0)
            .collect();
        let allowed: Vec<u32> = (1..=used).filter(|c| !banned.contains(c)).collect();
        // A fresh colour is always one of the candidates.
        let pick = rng.gen_range(0..=allowed.len());
        if pick == allowed.len() {
            used += 1;
            colour_of[v] = used;
        } else {
            colour_of[v] = allowed[pick];
        }
    }
    Colouring::new(colour_of).unwrap()
}

/// Deterministic RNG for test corpora.
pub fn test_rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Stable-stream RNG (ChaCha8) for artifacts meant to be byte-stable.
pub fn stable_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
