//! Monochromatic contraction: collapse every connected same-coloured vertex
//! set to a single vertex, yielding a validly coloured induced minor with
//! the same locality.

use crate::graph::{Colouring, Graph, VertexId};

/// Result of [`condense`]: the contracted graph, its (valid) colouring and
/// the old-vertex to new-vertex mapping kept for diagnostics.
#[derive(Debug, Clone)]
pub struct Condensed {
    pub graph: Graph,
    pub colouring: Colouring,
    /// `vertex_map[old] = new`.
    pub vertex_map: Vec<VertexId>,
}

/// Contracts monochromatic edges until none remain. A single union-find
/// pass suffices: contracting a monochromatic edge never creates a new
/// monochromatic adjacency between previously distinct colours.
///
/// New vertex ids are dense, ordered by the smallest original member of
/// each contracted group.
pub fn condense(g: &Graph, c: &Colouring) -> Condensed {
    assert_eq!(c.len(), g.n(), "colouring must be total on the graph");
    let mut groups = vec![usize::MAX; g.n()];
    {
        // Local union-find over monochromatic edges.
        let mut parent: Vec<usize> = (0..g.n()).collect();
        fn find(parent: &mut [usize], v: usize) -> usize {
            let mut root = v;
            while parent[root] != root {
                root = parent[root];
            }
            let mut cur = v;
            while parent[cur] != cur {
                let next = parent[cur];
                parent[cur] = root;
                cur = next;
            }
            root
        }
        for &(u, v) in g.edges() {
            if c.colour(u) == c.colour(v) {
                let ru = find(&mut parent, u);
                let rv = find(&mut parent, v);
                if ru != rv {
                    parent[ru.max(rv)] = ru.min(rv);
                }
            }
        }
        let mut next_id = 0;
        for v in 0..g.n() {
            let root = find(&mut parent, v);
            if groups[root] == usize::MAX {
                groups[root] = next_id;
                next_id += 1;
            }
            groups[v] = groups[root];
        }
    }
    let group_count = groups.iter().copied().max().map_or(0, |m| m + 1);
    let mut colours = vec![0u32; group_count];
    for v in 0..g.n() {
        colours[groups[v]] = c.colour(v);
    }
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter_map(|&(u, v)| {
            let (a, b) = (groups[u], groups[v]);
            if a == b {
                None
            } else {
                Some((a.min(b), a.max(b)))
            }
        })
        .collect();
    edges.sort_unstable();
    edges.dedup();
    let graph = Graph::new(group_count, edges).expect("contracted edges are simple");
    let colouring = Colouring::new(colours).expect("colours preserved from input");
    Condensed { graph, colouring, vertex_map: groups }
}
