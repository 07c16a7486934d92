//! Undirected simple graphs over dense integer vertex ids, plus vertex
//! colourings.
//!
//! Vertices are `0..n`. Edges are unordered pairs stored normalised as
//! `(min, max)` and kept sorted, so two graphs with the same edge set compare
//! equal and serialise identically. Colour ids are arbitrary positive
//! integers preserved from the input; nothing in the library assumes they
//! are contiguous.

use std::collections::BTreeMap;

use thiserror::Error;

/// Vertex index, always in `0..n` for the owning graph.
pub type VertexId = usize;

/// Colour identifier. Positive; `0` is rejected at construction.
pub type ColourId = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range (graph has {n} vertices)")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },
}

/// A finite, undirected, simple graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<VertexId>>,
}

impl Graph {
    /// Builds a graph on vertices `0..n` from an edge list. Edges may be
    /// given in either orientation; self-loops and duplicates are rejected.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        let mut norm: Vec<(VertexId, VertexId)> = Vec::new();
        for (a, b) in edges {
            if a >= n {
                return Err(GraphError::VertexOutOfRange { v: a, n });
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange { v: b, n });
            }
            if a == b {
                return Err(GraphError::SelfLoop { v: a });
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge { u: w[0].0, v: w[0].1 });
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &norm {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges: norm, adj })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as normalised `(u, v)` pairs with `u < v`, sorted.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    /// Sorted neighbour list of `v`.
    pub fn neighbours(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.n
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColouringError {
    #[error("colour ids must be positive (vertex {v} has colour 0)")]
    ZeroColour { v: usize },
}

/// A total map from vertices to colour ids, together with its palette (the
/// set of colours actually used).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring {
    colour_of: Vec<ColourId>,
    palette: Vec<ColourId>,
}

impl Colouring {
    /// Builds a colouring from the per-vertex colour vector (index = vertex).
    pub fn new(colour_of: Vec<ColourId>) -> Result<Self, ColouringError> {
        if let Some(v) = colour_of.iter().position(|&c| c == 0) {
            return Err(ColouringError::ZeroColour { v });
        }
        let mut palette: Vec<ColourId> = colour_of.clone();
        palette.sort_unstable();
        palette.dedup();
        Ok(Colouring { colour_of, palette })
    }

    /// Number of coloured vertices.
    pub fn len(&self) -> usize {
        self.colour_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colour_of.is_empty()
    }

    pub fn colour(&self, v: VertexId) -> ColourId {
        self.colour_of[v]
    }

    /// Sorted set of colours in use.
    pub fn palette(&self) -> &[ColourId] {
        &self.palette
    }

    pub fn colours(&self) -> &[ColourId] {
        &self.colour_of
    }

    /// Colour classes keyed by colour id; every class is non-empty.
    pub fn classes(&self) -> BTreeMap<ColourId, Vec<VertexId>> {
        let mut map: BTreeMap<ColourId, Vec<VertexId>> = BTreeMap::new();
        for (v, &c) in self.colour_of.iter().enumerate() {
            map.entry(c).or_default().push(v);
        }
        map
    }
}

/// True iff no edge of `g` joins two vertices of the same colour.
///
/// `c` must colour exactly the vertices of `g`.
pub fn is_valid_colouring(g: &Graph, c: &Colouring) -> bool {
    assert_eq!(c.len(), g.n(), "colouring must be total on the graph");
    g.edges().iter().all(|&(u, v)| c.colour(u) != c.colour(v))
}
