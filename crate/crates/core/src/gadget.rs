//! Reduction from the general locality decision problem to its
//! connected-graph restriction.
//!
//! For every colour `x` of the input, `k + 1` fresh vertices are attached
//! to all `x`-coloured vertices; all fresh vertices share one new colour.
//! Any sequence certifying k-locality of the input extends by the new
//! colour at the end, and conversely a certifying sequence for the gadget
//! must end with the new colour (otherwise some fresh block contributes
//! `k + 1` isolated marked vertices), so the decision answers agree.
//!
//! The gadget joins input components that share a colour; in particular
//! multi-component inputs whose colours span the components become
//! connected.

use crate::graph::{Colouring, ColourId, Graph};

/// Builds the gadget instance; returns the enlarged graph, the extended
/// colouring (fresh colour = max input colour + 1) and the unchanged `k`.
pub fn loc_to_conloc(g: &Graph, c: &Colouring, k: usize) -> (Graph, Colouring, usize) {
    assert_eq!(c.len(), g.n(), "colouring must be total on the graph");
    assert!(k >= 1, "gadget needs k >= 1");
    let fresh: ColourId = c.palette().iter().max().map_or(1, |&m| m + 1);
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    let mut colours: Vec<ColourId> = c.colours().to_vec();
    let mut next = g.n();
    for &x in c.palette() {
        let members: Vec<usize> = (0..g.n()).filter(|&v| c.colour(v) == x).collect();
        for _ in 0..=k {
            for &v in &members {
                edges.push((v, next));
            }
            colours.push(fresh);
            next += 1;
        }
    }
    let graph = Graph::new(next, edges).expect("gadget edges are simple");
    let colouring = Colouring::new(colours).expect("fresh colour is positive");
    (graph, colouring, k)
}
