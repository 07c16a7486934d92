//! Parameterised generators for the analysed graph classes, each paired
//! with a canonical colouring and a closed-form locality oracle.
//!
//! Every generator emits a valid colouring. Where the closed form holds for
//! every valid colouring of the class the oracle is `Exact` (or
//! `ExactStrict` when being (k-1)-local is additionally ruled out); where
//! only a specific constructed colouring is covered, the emitted colouring
//! reproduces that construction and the oracle is an `UpperBound`.

use std::fmt;

use thiserror::Error;

use crate::components::{gamma, is_connected};
use crate::graph::{Colouring, ColourId, Graph, VertexId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("generated graph is disconnected: {0}")]
    Disconnected(String),
}

fn bad(msg: impl Into<String>) -> ClassError {
    ClassError::InvalidParameter(msg.into())
}

/// How to read [`ClassInstance::oracle_value`] against the solver result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleKind {
    /// Solver must return exactly this value, and value-1 must be refused.
    ExactStrict,
    /// Solver must return exactly this value.
    Exact,
    /// Solver result is at most this value.
    UpperBound,
    /// Solver result is at least this value.
    LowerBound,
}

impl fmt::Display for OracleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            OracleKind::ExactStrict => "exact_strict",
            OracleKind::Exact => "exact",
            OracleKind::UpperBound => "upper_bound",
            OracleKind::LowerBound => "lower_bound",
        };
        f.write_str(s)
    }
}

/// A generated graph with its canonical colouring and locality oracle.
#[derive(Debug, Clone)]
pub struct ClassInstance {
    pub graph: Graph,
    pub colouring: Colouring,
    pub oracle_value: usize,
    pub oracle_kind: OracleKind,
}

fn instance(
    graph: Graph,
    colours: Vec<ColourId>,
    oracle_value: usize,
    oracle_kind: OracleKind,
) -> ClassInstance {
    let colouring = Colouring::new(colours).expect("generators use positive colour ids");
    debug_assert!(
        crate::graph::is_valid_colouring(&graph, &colouring),
        "generator produced an invalid colouring"
    );
    ClassInstance { graph, colouring, oracle_value, oracle_kind }
}

fn complete_edges(n: usize) -> Vec<(VertexId, VertexId)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn cycle_edges(n: usize) -> Vec<(VertexId, VertexId)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

/// Alternating cycle colours: 1,2,...; odd cycles end with a single 3.
fn cycle_colours(n: usize) -> Vec<ColourId> {
    (0..n)
        .map(|i| {
            if n % 2 == 1 && i == n - 1 {
                3
            } else {
                (i % 2) as ColourId + 1
            }
        })
        .collect()
}

/// K_n with all-distinct colours. 1-local independent of the colouring.
pub fn gen_complete(n: usize) -> Result<ClassInstance, ClassError> {
    if n < 1 {
        return Err(bad("complete graph needs n >= 1"));
    }
    let g = Graph::new(n, complete_edges(n)).unwrap();
    let colours = (1..=n as ColourId).collect();
    Ok(instance(g, colours, 1, OracleKind::Exact))
}

/// Star on n vertices: centre 0 joined to every leaf.
pub fn gen_star(n: usize) -> Result<ClassInstance, ClassError> {
    if n < 1 {
        return Err(bad("star graph needs n >= 1"));
    }
    let g = Graph::new(n, (1..n).map(|v| (0, v))).unwrap();
    let mut colours = vec![2; n];
    colours[0] = 1;
    Ok(instance(g, colours, 1, OracleKind::Exact))
}

fn wheel_edges(n: usize) -> Vec<(VertexId, VertexId)> {
    // Hub 0, outer cycle 1..n. A 2-vertex rim degenerates to one edge.
    let rim = n - 1;
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
    if rim == 2 {
        edges.push((1, 2));
    } else if rim >= 3 {
        edges.extend((0..rim).map(|i| (1 + i, 1 + (i + 1) % rim)));
    }
    edges
}

/// Colours for hub + rim: rim follows the cycle pattern, hub takes a fresh
/// colour above it.
fn wheel_colours(n: usize) -> Vec<ColourId> {
    let rim = n - 1;
    let rim_colours = cycle_colours(rim);
    let hub = rim_colours.iter().copied().max().unwrap_or(0) + 1;
    let mut colours = vec![hub];
    colours.extend(rim_colours);
    colours
}

/// Wheel on n vertices: a hub joined to an (n-1)-cycle.
pub fn gen_wheel(n: usize) -> Result<ClassInstance, ClassError> {
    if n < 4 {
        return Err(bad("wheel graph needs n >= 4"));
    }
    let g = Graph::new(n, wheel_edges(n)).unwrap();
    Ok(instance(g, wheel_colours(n), 1, OracleKind::Exact))
}

/// Friendship graph: k triangles sharing one hub vertex.
pub fn gen_friendship(k: usize) -> Result<ClassInstance, ClassError> {
    if k < 1 {
        return Err(bad("friendship graph needs k >= 1"));
    }
    let n = 2 * k + 1;
    let mut edges = Vec::new();
    let mut colours = vec![1u32; n];
    for i in 0..k {
        let (a, b) = (2 * i + 1, 2 * i + 2);
        edges.push((0, a));
        edges.push((0, b));
        edges.push((a, b));
        colours[a] = 2;
        colours[b] = 3;
    }
    let g = Graph::new(n, edges).unwrap();
    Ok(instance(g, colours, 1, OracleKind::Exact))
}

/// Cycle C_n with its minimal colouring. Even cycles are strictly
/// (n/2)-local; odd cycles are min{|V_1|, |V_2|}-local over the two colour
/// classes with at least two vertices; the triangle is 1-local.
pub fn gen_cycle(n: usize) -> Result<ClassInstance, ClassError> {
    if n < 3 {
        return Err(bad("cycle graph needs n >= 3"));
    }
    let g = Graph::new(n, cycle_edges(n)).unwrap();
    let colours = if n == 3 { vec![1, 2, 3] } else { cycle_colours(n) };
    let (value, kind) = if n == 3 {
        (1, OracleKind::Exact)
    } else if n % 2 == 0 {
        (n / 2, OracleKind::ExactStrict)
    } else {
        // Classes 1 and 2 both have (n-1)/2 vertices, class 3 one vertex.
        ((n - 1) / 2, OracleKind::Exact)
    };
    Ok(instance(g, colours, value, kind))
}

/// Web graph W_{l,r}: r concentric copies of C_l joined position-wise.
/// Vertex (i, j) is `j*l + i` for position i and ring j.
///
/// Even l: bipartition colouring, (l*r/2)-local for every valid
/// 2-colouring. Odd l: a fixed rotational pattern — in every consecutive
/// position triple the first two vertices take colour 1 and the third
/// colour 2, the leftover tail takes colour 3 — giving the
/// (l div 3)*r upper bound.
pub fn gen_web(l: usize, r: usize) -> Result<ClassInstance, ClassError> {
    if l < 3 {
        return Err(bad("web graph needs l >= 3"));
    }
    if r < 1 {
        return Err(bad("web graph needs r >= 1"));
    }
    let n = l * r;
    let at = |i: usize, j: usize| j * l + i;
    let mut edges = Vec::new();
    for j in 0..r {
        for i in 0..l {
            edges.push((at(i, j), at((i + 1) % l, j)));
        }
        if j + 1 < r {
            for i in 0..l {
                edges.push((at(i, j), at(i, j + 1)));
            }
        }
    }
    let g = Graph::new(n, edges).unwrap();
    if l % 2 == 0 {
        let colours = (0..n).map(|v| ((v / l + v % l) % 2) as ColourId + 1).collect();
        Ok(instance(g, colours, l * r / 2, OracleKind::Exact))
    } else {
        // The odd case is the one generator whose colouring is not proper:
        // the (l div 3)*r bound is witnessed by marking consecutive
        // position blocks together, and for e.g. W_{5,1} = C_5 no proper
        // 3-colouring reaches it (they all have locality 2). Marking
        // colour 1 yields one component per triple, colour 2 merges them.
        let block = 3 * (l / 3);
        let position_colour = |i: usize| -> ColourId {
            if i >= block {
                3
            } else if i % 3 == 2 {
                2
            } else {
                1
            }
        };
        let colours: Vec<ColourId> = (0..n).map(|v| position_colour(v % l)).collect();
        let colouring = Colouring::new(colours).expect("positive colour ids");
        Ok(ClassInstance {
            graph: g,
            colouring,
            oracle_value: (l / 3) * r,
            oracle_kind: OracleKind::UpperBound,
        })
    }
}

fn sunflower_helm_base(d: usize) -> (Vec<(usize, usize)>, Vec<ColourId>, usize) {
    // Wheel part: hub 0, rim 1..d. Returns wheel edges, wheel colours and
    // the hub colour to reuse for the added vertices.
    let edges = wheel_edges(d);
    let colours = wheel_colours(d);
    let hub_colour = colours[0] as usize;
    (edges, colours, hub_colour)
}

/// Sunflower S_d: wheel on d vertices plus one petal per rim edge, forming
/// a triangle with it. Petals reuse the hub colour. With this minimal
/// colouring the locality is exactly floor((d-1)/2).
pub fn gen_sunflower(d: usize) -> Result<ClassInstance, ClassError> {
    if d < 3 {
        return Err(bad("sunflower graph needs d >= 3"));
    }
    let (mut edges, mut colours, hub_colour) = sunflower_helm_base(d);
    let rim = d - 1;
    let rim_edges: Vec<(usize, usize)> = if rim == 2 {
        vec![(1, 2)]
    } else {
        (0..rim).map(|i| (1 + i, 1 + (i + 1) % rim)).collect()
    };
    let mut next = d;
    for (a, b) in rim_edges {
        edges.push((a, next));
        edges.push((b, next));
        colours.push(hub_colour as ColourId);
        next += 1;
    }
    let g = Graph::new(next, edges).unwrap();
    Ok(instance(g, colours, (d - 1) / 2, OracleKind::Exact))
}

/// Helm H_d: wheel on d vertices plus a pendant at every rim vertex.
/// Pendants reuse the hub colour; locality is exactly floor((d-1)/2).
pub fn gen_helm(d: usize) -> Result<ClassInstance, ClassError> {
    if d < 3 {
        return Err(bad("helm graph needs d >= 3"));
    }
    let (mut edges, mut colours, hub_colour) = sunflower_helm_base(d);
    let mut next = d;
    for v in 1..d {
        edges.push((v, next));
        colours.push(hub_colour as ColourId);
        next += 1;
    }
    let g = Graph::new(next, edges).unwrap();
    Ok(instance(g, colours, (d - 1) / 2, OracleKind::Exact))
}

/// Connected random bipartite graph, 2-coloured by side: strictly
/// min{n1, n2}-local.
///
/// A random cross spanning tree guarantees connectivity; every remaining
/// cross pair is added with probability `edge_prob`. Deterministic for a
/// fixed seed.
pub fn gen_bipartite_random(
    n1: usize,
    n2: usize,
    edge_prob: f64,
    seed: u64,
) -> Result<ClassInstance, ClassError> {
    if n1 < 1 || n2 < 1 {
        return Err(bad("bipartite graph needs both sides non-empty"));
    }
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(bad("edge probability must lie in [0, 1]"));
    }
    let n = n1 + n2;
    let side = |v: usize| v < n1; // true = left
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut present = std::collections::HashSet::new();
    // Interleave the two sides so every vertex can attach to an earlier
    // vertex of the other side.
    let mut order: Vec<usize> = Vec::with_capacity(n);
    for i in 0..n1.max(n2) {
        if i < n1 {
            order.push(i);
        }
        if i < n2 {
            order.push(n1 + i);
        }
    }
    let mut left_seen: Vec<usize> = Vec::new();
    let mut right_seen: Vec<usize> = Vec::new();
    for &v in &order {
        let partner = if side(v) { &right_seen } else { &left_seen };
        if !partner.is_empty() {
            let u = partner[rng.gen_range(0..partner.len())];
            let e = (u.min(v), u.max(v));
            if present.insert(e) {
                edges.push(e);
            }
        }
        if side(v) {
            left_seen.push(v);
        } else {
            right_seen.push(v);
        }
    }
    for u in 0..n1 {
        for v in n1..n {
            if rng.gen_bool(edge_prob) {
                let e = (u, v);
                if present.insert(e) {
                    edges.push(e);
                }
            }
        }
    }
    let g = Graph::new(n, edges).unwrap();
    if !is_connected(&g) {
        return Err(ClassError::Disconnected(format!(
            "bipartite({n1},{n2},p={edge_prob},seed={seed})"
        )));
    }
    let colours = (0..n).map(|v| if side(v) { 1 } else { 2 }).collect();
    Ok(instance(g, colours, n1.min(n2), OracleKind::ExactStrict))
}

/// Hypercube Q_d with its bipartition colouring: strictly 2^(d-1)-local.
pub fn gen_hypercube(d: usize) -> Result<ClassInstance, ClassError> {
    if d < 1 {
        return Err(bad("hypercube needs d >= 1"));
    }
    if d > 20 {
        return Err(bad("hypercube dimension above 20 is not supported"));
    }
    let n = 1usize << d;
    let mut edges = Vec::new();
    for v in 0..n {
        for b in 0..d {
            let u = v ^ (1 << b);
            if v < u {
                edges.push((v, u));
            }
        }
    }
    let g = Graph::new(n, edges).unwrap();
    let colours = (0..n)
        .map(|v| (v.count_ones() % 2) as ColourId + 1)
        .collect();
    Ok(instance(g, colours, n / 2, OracleKind::ExactStrict))
}

/// d-crown: K_{d,d} minus a perfect matching, 2-coloured by side:
/// strictly d-local.
pub fn gen_crown(d: usize) -> Result<ClassInstance, ClassError> {
    if d < 3 {
        return Err(bad("crown graph needs d >= 3"));
    }
    let mut edges = Vec::new();
    for i in 0..d {
        for j in 0..d {
            if i != j {
                edges.push((i, d + j));
            }
        }
    }
    let g = Graph::new(2 * d, edges).unwrap();
    let colours = (0..2 * d).map(|v| if v < d { 1 } else { 2 }).collect();
    Ok(instance(g, colours, d, OracleKind::ExactStrict))
}

/// Gear graph G_d: wheel on d vertices with every rim edge subdivided.
/// Bipartite; strictly min-side-local, with the side sizes computed from
/// the generated graph.
pub fn gen_gear(d: usize) -> Result<ClassInstance, ClassError> {
    if d < 3 {
        return Err(bad("gear graph needs d >= 3"));
    }
    let rim = d - 1;
    let mut edges: Vec<(usize, usize)> = (1..d).map(|v| (0, v)).collect();
    let rim_edges: Vec<(usize, usize)> = if rim == 2 {
        vec![(1, 2)]
    } else {
        (0..rim).map(|i| (1 + i, 1 + (i + 1) % rim)).collect()
    };
    let mut next = d;
    for (a, b) in rim_edges {
        edges.push((a, next));
        edges.push((b, next));
        next += 1;
    }
    let g = Graph::new(next, edges).unwrap();
    // Rim vertices form one side; hub and subdivision vertices the other.
    let colours: Vec<ColourId> = (0..next)
        .map(|v| if (1..d).contains(&v) { 1 } else { 2 })
        .collect();
    let side1 = d - 1;
    let side2 = next - side1;
    Ok(instance(g, colours, side1.min(side2), OracleKind::ExactStrict))
}

/// Knight's graph on a d1 x d2 board, 2-coloured by square parity:
/// strictly min-side-local. Boards whose knight graph is disconnected are
/// rejected.
pub fn gen_knight(d1: usize, d2: usize) -> Result<ClassInstance, ClassError> {
    if d1 < 3 || d2 < 3 {
        return Err(bad("knight's graph needs a board of at least 3x3"));
    }
    let n = d1 * d2;
    let at = |r: usize, c: usize| r * d2 + c;
    let moves: [(i64, i64); 8] = [
        (1, 2),
        (2, 1),
        (-1, 2),
        (-2, 1),
        (1, -2),
        (2, -1),
        (-1, -2),
        (-2, -1),
    ];
    let mut edges = Vec::new();
    for r in 0..d1 {
        for c in 0..d2 {
            for (dr, dc) in moves {
                let (nr, nc) = (r as i64 + dr, c as i64 + dc);
                if nr >= 0 && nc >= 0 && (nr as usize) < d1 && (nc as usize) < d2 {
                    let (u, v) = (at(r, c), at(nr as usize, nc as usize));
                    if u < v {
                        edges.push((u, v));
                    }
                }
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let g = Graph::new(n, edges).unwrap();
    if !is_connected(&g) {
        return Err(ClassError::Disconnected(format!("{d1}x{d2} knight's graph")));
    }
    let colours: Vec<ColourId> = (0..n)
        .map(|v| ((v / d2 + v % d2) % 2) as ColourId + 1)
        .collect();
    let side1 = (0..n).filter(|v| (v / d2 + v % d2) % 2 == 0).count();
    let side2 = n - side1;
    Ok(instance(g, colours, side1.min(side2), OracleKind::ExactStrict))
}

/// Complete multipartite graph, one colour per part: min-part-local.
pub fn gen_complete_multipartite(sizes: &[usize]) -> Result<ClassInstance, ClassError> {
    if sizes.len() < 2 {
        return Err(bad("complete multipartite graph needs at least 2 parts"));
    }
    if sizes.iter().any(|&s| s < 1) {
        return Err(bad("every part must be non-empty"));
    }
    let n: usize = sizes.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (p, &s) in sizes.iter().enumerate() {
        part_of.extend(std::iter::repeat(p).take(s));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::new(n, edges).unwrap();
    let colours = part_of.iter().map(|&p| p as ColourId + 1).collect();
    let min_part = *sizes.iter().min().unwrap();
    Ok(instance(g, colours, min_part, OracleKind::Exact))
}

/// The Petersen graph with a proper 3-colouring in which one colour is
/// used exactly three times; marking that colour first witnesses
/// 3-locality, so the oracle is the upper bound 3.
pub fn gen_petersen() -> ClassInstance {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5)); // outer cycle
        edges.push((i, 5 + i)); // spokes
        edges.push((5 + i, 5 + (i + 2) % 5)); // pentagram
    }
    let g = Graph::new(10, edges).unwrap();
    let colours = vec![1, 2, 1, 2, 3, 2, 1, 3, 3, 2];
    instance(g, colours, 3, OracleKind::UpperBound)
}

/// Flower snark J_d for odd d: hub vertices v_i, a d-cycle u1_i, and a
/// 2d-cycle through u2_0..u2_{d-1}, u3_0..u3_{d-1}; v_i joins u1_i, u2_i,
/// u3_i.
///
/// The 3-colouring rotates (1, 2, 3) over the index triples, the hubs take
/// the successor colour of their triple, and for d = 1 (mod 3) the last
/// triple is patched to colour 2 so the cycles stay properly coloured.
/// Oracle: the d - (d mod 3) upper bound.
pub fn gen_flower_snark(d: usize) -> Result<ClassInstance, ClassError> {
    if d < 3 || d % 2 == 0 {
        return Err(bad("flower snark needs odd d >= 3"));
    }
    let v = |i: usize| i;
    let u1 = |i: usize| d + i;
    let u2 = |i: usize| 2 * d + i;
    let u3 = |i: usize| 3 * d + i;
    let mut edges = Vec::new();
    for i in 0..d {
        edges.push((u1(i), u1((i + 1) % d)));
        edges.push((v(i), u1(i)));
        edges.push((v(i), u2(i)));
        edges.push((v(i), u3(i)));
    }
    // The 2d-cycle: u2 row, then u3 row, then back to the start.
    for i in 0..d - 1 {
        edges.push((u2(i), u2(i + 1)));
        edges.push((u3(i), u3(i + 1)));
    }
    edges.push((u2(d - 1), u3(0)));
    edges.push((u3(d - 1), u2(0)));
    let g = Graph::new(4 * d, edges).unwrap();

    let triple_colour = |i: usize| -> ColourId {
        if d % 3 == 1 && i == d - 1 {
            2
        } else {
            [1, 2, 3][i % 3]
        }
    };
    let hub_colour = |i: usize| -> ColourId {
        match triple_colour(i) {
            1 => 2,
            2 => 3,
            _ => 2,
        }
    };
    let mut colours = vec![0u32; 4 * d];
    for i in 0..d {
        colours[v(i)] = hub_colour(i);
        colours[u1(i)] = triple_colour(i);
        colours[u2(i)] = triple_colour(i);
        colours[u3(i)] = triple_colour(i);
    }
    Ok(instance(g, colours, d - d % 3, OracleKind::UpperBound))
}

/// Edgeless graph I_n with all-distinct colours: exactly n-local.
pub fn gen_edgeless(n: usize) -> Result<ClassInstance, ClassError> {
    if n < 1 {
        return Err(bad("edgeless graph needs n >= 1"));
    }
    let g = Graph::new(n, Vec::new()).unwrap();
    let colours = (1..=n as ColourId).collect();
    let kind = if n == 1 { OracleKind::Exact } else { OracleKind::ExactStrict };
    Ok(instance(g, colours, n, kind))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph must be connected for a well-defined bipartition")]
    NotConnected,
    #[error("colouring uses {0} colours, need more than 2")]
    TooFewColours(usize),
}

/// Closed-form strict locality of a connected bipartite graph coloured
/// with more than two colours: if one whole side is monochromatic the
/// value is the smaller side's size, otherwise the larger side's size.
pub fn bipartite_locality_formula(g: &Graph, c: &Colouring) -> Result<usize, FormulaError> {
    assert_eq!(c.len(), g.n(), "colouring must be total on the graph");
    if gamma(g) != 1 {
        return Err(FormulaError::NotConnected);
    }
    if c.palette().len() <= 2 {
        return Err(FormulaError::TooFewColours(c.palette().len()));
    }
    // 2-colour the graph by BFS; any odd cycle makes it non-bipartite.
    let mut side = vec![usize::MAX; g.n()];
    side[0] = 0;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for &u in g.neighbours(v) {
            if side[u] == usize::MAX {
                side[u] = side[v] ^ 1;
                queue.push_back(u);
            } else if side[u] == side[v] {
                return Err(FormulaError::NotBipartite);
            }
        }
    }
    let sides: [Vec<VertexId>; 2] = [
        (0..g.n()).filter(|&v| side[v] == 0).collect(),
        (0..g.n()).filter(|&v| side[v] == 1).collect(),
    ];
    let monochromatic = |vs: &[VertexId]| vs.iter().all(|&v| c.colour(v) == c.colour(vs[0]));
    let any_mono = monochromatic(&sides[0]) || monochromatic(&sides[1]);
    let (a, b) = (sides[0].len(), sides[1].len());
    Ok(if any_mono { a.min(b) } else { a.max(b) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{decide_k_local, naive_search, priority_search};
    use crate::graph::is_valid_colouring;

    fn check_oracle(inst: &ClassInstance, what: &str) {
        check_oracle_inner(inst, what, true)
    }

    /// Odd webs are the one class whose constructed colouring is not
    /// proper (no proper colouring reaches the bound there).
    fn check_oracle_unvalidated(inst: &ClassInstance, what: &str) {
        check_oracle_inner(inst, what, false)
    }

    fn check_oracle_inner(inst: &ClassInstance, what: &str, expect_valid: bool) {
        if expect_valid {
            assert!(
                is_valid_colouring(&inst.graph, &inst.colouring),
                "{what}: colouring must be valid"
            );
        }
        let got = priority_search(&inst.graph, &inst.colouring, false).min_k;
        match inst.oracle_kind {
            OracleKind::Exact | OracleKind::ExactStrict => {
                assert_eq!(got, inst.oracle_value, "{what}: expected exact oracle");
                if inst.oracle_kind == OracleKind::ExactStrict && inst.oracle_value > 1 {
                    assert!(
                        !decide_k_local(&inst.graph, &inst.colouring, inst.oracle_value - 1),
                        "{what}: strictness"
                    );
                }
            }
            OracleKind::UpperBound => {
                assert!(got <= inst.oracle_value, "{what}: {got} <= {}", inst.oracle_value)
            }
            OracleKind::LowerBound => {
                assert!(got >= inst.oracle_value, "{what}: {got} >= {}", inst.oracle_value)
            }
        }
    }

    #[test]
    fn one_local_families() {
        check_oracle(&gen_complete(5).unwrap(), "K_5");
        check_oracle(&gen_complete(1).unwrap(), "K_1");
        check_oracle(&gen_star(7).unwrap(), "star_7");
        check_oracle(&gen_wheel(4).unwrap(), "W_4");
        check_oracle(&gen_wheel(7).unwrap(), "W_7");
        check_oracle(&gen_friendship(3).unwrap(), "F_3");
        assert!(gen_wheel(3).is_err());
        assert!(gen_friendship(0).is_err());
    }

    #[test]
    fn cycles() {
        let c6 = gen_cycle(6).unwrap();
        assert_eq!(c6.oracle_value, 3);
        check_oracle(&c6, "C_6");
        let c3 = gen_cycle(3).unwrap();
        assert_eq!(c3.oracle_value, 1);
        check_oracle(&c3, "C_3");
        let c5 = gen_cycle(5).unwrap();
        assert_eq!(c5.oracle_value, 2);
        check_oracle(&c5, "C_5");
        assert!(gen_cycle(2).is_err());
    }

    #[test]
    fn webs() {
        let w42 = gen_web(4, 2).unwrap();
        assert_eq!(w42.oracle_value, 4);
        check_oracle(&w42, "W_{4,2}");
        let w61 = gen_web(6, 1).unwrap();
        assert_eq!(w61.oracle_value, 3);
        check_oracle(&w61, "W_{6,1}");
        let w51 = gen_web(5, 1).unwrap();
        assert_eq!(w51.oracle_value, 1);
        assert_eq!(w51.oracle_kind, OracleKind::UpperBound);
        check_oracle_unvalidated(&w51, "W_{5,1}");
        let w72 = gen_web(7, 2).unwrap();
        assert_eq!(w72.oracle_value, 4);
        check_oracle_unvalidated(&w72, "W_{7,2}");
        assert!(gen_web(2, 1).is_err());
        assert!(gen_web(3, 0).is_err());
    }

    #[test]
    fn sunflowers_and_helms() {
        for d in 3..=7 {
            let s = gen_sunflower(d).unwrap();
            assert_eq!(s.oracle_value, (d - 1) / 2);
            check_oracle(&s, &format!("S_{d}"));
            let h = gen_helm(d).unwrap();
            assert_eq!(h.oracle_value, (d - 1) / 2);
            check_oracle(&h, &format!("H_{d}"));
        }
        assert!(gen_sunflower(2).is_err());
        assert!(gen_helm(2).is_err());
    }

    #[test]
    fn bipartite_families() {
        let q3 = gen_hypercube(3).unwrap();
        assert_eq!(q3.oracle_value, 4);
        check_oracle(&q3, "Q_3");
        check_oracle(&gen_hypercube(1).unwrap(), "Q_1");
        let crown = gen_crown(3).unwrap();
        assert_eq!(crown.oracle_value, 3);
        check_oracle(&crown, "crown_3");
        let gear = gen_gear(4).unwrap();
        assert_eq!(gear.oracle_value, 3);
        check_oracle(&gear, "G_4");
        let knight = gen_knight(3, 4).unwrap();
        assert_eq!(knight.oracle_value, 6);
        check_oracle(&knight, "KG_3x4");
        assert!(matches!(gen_knight(3, 3), Err(ClassError::Disconnected(_))));

        for seed in 0..5 {
            let b = gen_bipartite_random(2, 3, 0.5, seed).unwrap();
            assert_eq!(b.oracle_value, 2);
            check_oracle(&b, &format!("bip(2,3,seed={seed})"));
        }
        // Path P_4 as a bipartite instance with sides 2, 2.
        let p4 = gen_bipartite_random(2, 2, 0.0, 7).unwrap();
        assert_eq!(p4.graph.m(), 3);
        check_oracle(&p4, "bip(2,2,tree)");
        // Star K_{1,n}: min side 1.
        let star = gen_bipartite_random(1, 4, 1.0, 1).unwrap();
        assert_eq!(star.oracle_value, 1);
        check_oracle(&star, "K_{1,4}");
    }

    #[test]
    fn multipartite() {
        let m = gen_complete_multipartite(&[2, 3, 4]).unwrap();
        assert_eq!(m.oracle_value, 2);
        check_oracle(&m, "K_{2,3,4}");
        let m2 = gen_complete_multipartite(&[1, 5]).unwrap();
        assert_eq!(m2.oracle_value, 1);
        check_oracle(&m2, "K_{1,5}");
        let m3 = gen_complete_multipartite(&[3, 3]).unwrap();
        assert_eq!(m3.oracle_value, 3);
        check_oracle(&m3, "K_{3,3}");
        assert!(gen_complete_multipartite(&[4]).is_err());
        assert!(gen_complete_multipartite(&[0, 2]).is_err());
    }

    #[test]
    fn snarks() {
        let p = gen_petersen();
        let class_sizes: Vec<usize> = p.colouring.classes().values().map(|v| v.len()).collect();
        assert!(class_sizes.contains(&3), "one colour must occur exactly 3 times");
        check_oracle(&p, "petersen");

        let j3 = gen_flower_snark(3).unwrap();
        assert_eq!(j3.oracle_value, 3);
        check_oracle(&j3, "J_3");
        assert!(gen_flower_snark(4).is_err());
        // J_5 structure: 20 vertices, cubic.
        let j5 = gen_flower_snark(5).unwrap();
        assert_eq!(j5.graph.n(), 20);
        assert!(j5.graph.vertices().all(|v| j5.graph.degree(v) == 3));
        assert!(is_valid_colouring(&j5.graph, &j5.colouring));
        // J_7 exercises the d = 1 (mod 3) colour patch.
        let j7 = gen_flower_snark(7).unwrap();
        assert!(is_valid_colouring(&j7.graph, &j7.colouring));
    }

    #[test]
    fn edgeless() {
        for n in [1, 4, 7] {
            let e = gen_edgeless(n).unwrap();
            assert_eq!(e.oracle_value, n);
            check_oracle(&e, &format!("I_{n}"));
        }
        assert_eq!(gen_edgeless(1).unwrap().oracle_kind, OracleKind::Exact);
        assert_eq!(gen_edgeless(4).unwrap().oracle_kind, OracleKind::ExactStrict);
    }

    #[test]
    fn star_is_one_local_under_any_valid_colouring() {
        // Substitute random valid colourings for the canonical one.
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let star = gen_star(7).unwrap();
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..5 {
            // Leaves free, centre distinct: any assignment with the centre
            // unique is a valid colouring of a star.
            let mut colours: Vec<ColourId> =
                (0..7).map(|_| rng.gen_range(2..=4)).collect();
            colours[0] = 1;
            let c = Colouring::new(colours).unwrap();
            assert!(is_valid_colouring(&star.graph, &c));
            assert_eq!(naive_search(&star.graph, &c).unwrap().min_k, 1);
        }
    }

    #[test]
    fn bipartite_formula_cases() {
        // K_{2,3}, small side monochromatic, large side all distinct.
        let k23 = gen_complete_multipartite(&[2, 3]).unwrap();
        let c = Colouring::new(vec![1, 1, 2, 3, 4]).unwrap();
        assert_eq!(bipartite_locality_formula(&k23.graph, &c).unwrap(), 2);
        // Both sides multicoloured (4 colours): the larger side's size.
        let c2 = Colouring::new(vec![1, 2, 3, 4, 4]).unwrap();
        assert_eq!(bipartite_locality_formula(&k23.graph, &c2).unwrap(), 3);
        // Star K_{1,4} with a monochromatic centre side.
        let star = gen_star(5).unwrap();
        let c3 = Colouring::new(vec![1, 2, 2, 3, 3]).unwrap();
        assert_eq!(bipartite_locality_formula(&star.graph, &c3).unwrap(), 1);

        // Rejections: too few colours, odd cycle, disconnected input.
        assert_eq!(
            bipartite_locality_formula(&k23.graph, &Colouring::new(vec![1, 1, 2, 2, 2]).unwrap()),
            Err(FormulaError::TooFewColours(2))
        );
        let triangle = gen_cycle(3).unwrap();
        assert_eq!(
            bipartite_locality_formula(&triangle.graph, &triangle.colouring),
            Err(FormulaError::NotBipartite)
        );
        let two = Graph::new(2, Vec::new()).unwrap();
        assert_eq!(
            bipartite_locality_formula(&two, &Colouring::new(vec![1, 2]).unwrap()),
            Err(FormulaError::NotConnected)
        );
    }
}
