//! Connected-component counting: a from-scratch traversal used as the
//! reference everywhere, and an incremental union-find counter used by the
//! searches.
//!
//! The two are deliberately independent implementations of the same
//! quantity; the test suites cross-check the counter against the traversal
//! on randomised marking trajectories.

use thiserror::Error;

use crate::graph::{Colouring, ColourId, Graph, VertexId};

/// Number of connected components of the subgraph induced by the vertices
/// with `marked[v] == true`, computed by plain traversal. The empty set has
/// zero components.
pub fn count_components(g: &Graph, marked: &[bool]) -> usize {
    assert_eq!(marked.len(), g.n());
    let mut seen = vec![false; g.n()];
    let mut stack: Vec<VertexId> = Vec::new();
    let mut comps = 0;
    for s in 0..g.n() {
        if !marked[s] || seen[s] {
            continue;
        }
        comps += 1;
        seen[s] = true;
        stack.push(s);
        while let Some(v) = stack.pop() {
            for &u in g.neighbours(v) {
                if marked[u] && !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
    }
    comps
}

/// `count_components` over an explicit vertex list.
pub fn count_components_of(g: &Graph, vertices: &[VertexId]) -> usize {
    let mut marked = vec![false; g.n()];
    for &v in vertices {
        marked[v] = true;
    }
    count_components(g, &marked)
}

/// Number of connected components of the whole graph.
pub fn gamma(g: &Graph) -> usize {
    count_components(g, &vec![true; g.n()])
}

/// True iff the graph is non-empty and has exactly one component.
pub fn is_connected(g: &Graph) -> bool {
    gamma(g) == 1
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MarkError {
    #[error("colour {0} already marked")]
    AlreadyMarked(ColourId),
    #[error("colour {0} does not occur in the colouring")]
    UnknownColour(ColourId),
}

/// Incremental component counter over a growing marked vertex set.
///
/// Marking is append-only: callers that need to branch re-derive a counter
/// by cloning or by replaying marks, so deletions are never needed (the
/// search hot path uses the crate-internal [`PathCounter`] instead, which
/// can undo marks). Union-find with path compression and union by size.
#[derive(Debug, Clone)]
pub struct ComponentCounter {
    parent: Vec<u32>,
    size: Vec<u32>,
    marked: Vec<bool>,
    components: usize,
    marked_colours: Vec<ColourId>,
}

impl ComponentCounter {
    pub fn new(g: &Graph) -> Self {
        ComponentCounter {
            parent: (0..g.n() as u32).collect(),
            size: vec![1; g.n()],
            marked: vec![false; g.n()],
            components: 0,
            marked_colours: Vec::new(),
        }
    }

    /// Components among the currently marked vertices.
    pub fn component_count(&self) -> usize {
        self.components
    }

    pub fn is_marked(&self, v: VertexId) -> bool {
        self.marked[v]
    }

    pub fn marked_colours(&self) -> &[ColourId] {
        &self.marked_colours
    }

    fn find(&mut self, v: usize) -> usize {
        let mut root = v;
        while self.parent[root] as usize != root {
            root = self.parent[root] as usize;
        }
        let mut cur = v;
        while self.parent[cur] as usize != cur {
            let next = self.parent[cur] as usize;
            self.parent[cur] = root as u32;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let mut ra = self.find(a);
        let mut rb = self.find(b);
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra as u32;
        self.size[ra] += self.size[rb];
        self.components -= 1;
    }

    /// Marks every vertex of the given colour and returns the updated
    /// component count. The colour must occur in `c` and not be marked yet.
    pub fn mark_colour(
        &mut self,
        g: &Graph,
        c: &Colouring,
        colour: ColourId,
    ) -> Result<usize, MarkError> {
        assert_eq!(c.len(), g.n(), "colouring must be total on the graph");
        if c.palette().binary_search(&colour).is_err() {
            return Err(MarkError::UnknownColour(colour));
        }
        if self.marked_colours.contains(&colour) {
            return Err(MarkError::AlreadyMarked(colour));
        }
        self.marked_colours.push(colour);
        let class: Vec<VertexId> = (0..g.n()).filter(|&v| c.colour(v) == colour).collect();
        Ok(self.mark_class(g, &class))
    }

    /// Hot path shared with the searches: marks an explicit vertex class.
    pub(crate) fn mark_class(&mut self, g: &Graph, class: &[VertexId]) -> usize {
        for &v in class {
            debug_assert!(!self.marked[v], "vertex marked twice");
            self.marked[v] = true;
            self.components += 1;
        }
        for &v in class {
            for i in 0..g.neighbours(v).len() {
                let u = g.neighbours(v)[i];
                if self.marked[u] {
                    self.union(v, u);
                }
            }
        }
        self.components
    }
}

/// Undo log of one [`PathCounter::mark_class_framed`] call: every write is
/// recorded with its previous value so the mark can be reverted exactly.
#[derive(Debug, Default)]
pub(crate) struct MarkFrame {
    comps_before: usize,
    marked_vertices: Vec<u32>,
    parent_writes: Vec<(u32, u32)>,
    size_writes: Vec<(u32, u32)>,
}

/// Component counter for the search hot path: marks can be undone, so one
/// counter walks the whole prefix tree instead of being re-derived (or
/// cloned) per expansion. Path compression stays enabled; compression
/// writes are simply logged like any other write. Spent frames are pooled
/// to keep the probe loop allocation-free.
#[derive(Debug)]
pub(crate) struct PathCounter {
    parent: Vec<u32>,
    size: Vec<u32>,
    marked: Vec<bool>,
    components: usize,
    spare_frames: Vec<MarkFrame>,
    // Scratch for the read-only class probes, epoch-stamped so it never
    // needs clearing.
    probe_epoch: u32,
    vert_tag: Vec<u32>,
    vert_local: Vec<u32>,
    root_tag: Vec<u32>,
    root_local: Vec<u32>,
    local_parent: Vec<u32>,
}

impl PathCounter {
    pub(crate) fn new(g: &Graph) -> Self {
        PathCounter {
            parent: (0..g.n() as u32).collect(),
            size: vec![1; g.n()],
            marked: vec![false; g.n()],
            components: 0,
            spare_frames: Vec::new(),
            probe_epoch: 0,
            vert_tag: vec![0; g.n()],
            vert_local: vec![0; g.n()],
            root_tag: vec![0; g.n()],
            root_local: vec![0; g.n()],
            local_parent: Vec::new(),
        }
    }

    fn find_readonly(&self, v: usize) -> usize {
        let mut root = v;
        while self.parent[root] as usize != root {
            root = self.parent[root] as usize;
        }
        root
    }

    fn local_find(local_parent: &mut [u32], mut v: u32) -> u32 {
        while local_parent[v as usize] != v {
            let next = local_parent[v as usize];
            local_parent[v as usize] = local_parent[next as usize];
            v = next;
        }
        v
    }

    /// Component count after additionally marking `class`, computed with a
    /// small local union-find over the class and its adjacent component
    /// roots; the shared structure is not touched.
    pub(crate) fn probe_class_count(&mut self, g: &Graph, class: &[VertexId]) -> usize {
        self.probe_epoch += 1;
        let epoch = self.probe_epoch;
        self.local_parent.clear();
        for (i, &v) in class.iter().enumerate() {
            self.local_parent.push(i as u32);
            self.vert_tag[v] = epoch;
            self.vert_local[v] = i as u32;
        }
        let mut count = self.components + class.len();
        for &v in class {
            let lv = self.vert_local[v];
            for i in 0..g.neighbours(v).len() {
                let u = g.neighbours(v)[i];
                let lu = if self.vert_tag[u] == epoch {
                    self.vert_local[u]
                } else if self.marked[u] {
                    let r = self.find_readonly(u);
                    if self.root_tag[r] == epoch {
                        self.root_local[r]
                    } else {
                        self.root_tag[r] = epoch;
                        let id = self.local_parent.len() as u32;
                        self.local_parent.push(id);
                        self.root_local[r] = id;
                        id
                    }
                } else {
                    continue;
                };
                let ra = Self::local_find(&mut self.local_parent, lv);
                let rb = Self::local_find(&mut self.local_parent, lu);
                if ra != rb {
                    self.local_parent[ra as usize] = rb;
                    count -= 1;
                }
            }
        }
        count
    }

    #[cfg(test)]
    pub(crate) fn component_count(&self) -> usize {
        self.components
    }

    fn find_logged(&mut self, v: usize, frame: &mut MarkFrame) -> usize {
        let mut root = v;
        while self.parent[root] as usize != root {
            root = self.parent[root] as usize;
        }
        let mut cur = v;
        while self.parent[cur] as usize != cur {
            let next = self.parent[cur] as usize;
            if next != root {
                frame.parent_writes.push((cur as u32, next as u32));
                self.parent[cur] = root as u32;
            }
            cur = next;
        }
        root
    }

    fn union_logged(&mut self, a: usize, b: usize, frame: &mut MarkFrame) {
        let mut ra = self.find_logged(a, frame);
        let mut rb = self.find_logged(b, frame);
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        frame.parent_writes.push((rb as u32, self.parent[rb]));
        frame.size_writes.push((ra as u32, self.size[ra]));
        self.parent[rb] = ra as u32;
        self.size[ra] += self.size[rb];
        self.components -= 1;
    }

    /// Marks a vertex class and returns the new component count together
    /// with the frame undoing the mark.
    pub(crate) fn mark_class_framed(
        &mut self,
        g: &Graph,
        class: &[VertexId],
    ) -> (usize, MarkFrame) {
        let mut frame = self.spare_frames.pop().unwrap_or_default();
        frame.comps_before = self.components;
        for &v in class {
            debug_assert!(!self.marked[v], "vertex marked twice");
            self.marked[v] = true;
            frame.marked_vertices.push(v as u32);
            self.components += 1;
        }
        for &v in class {
            for i in 0..g.neighbours(v).len() {
                let u = g.neighbours(v)[i];
                if self.marked[u] {
                    self.union_logged(v, u, &mut frame);
                }
            }
        }
        (self.components, frame)
    }

    /// Reverts a mark; frames must be undone in reverse order of marking.
    pub(crate) fn undo(&mut self, mut frame: MarkFrame) {
        for &(node, old) in frame.size_writes.iter().rev() {
            self.size[node as usize] = old;
        }
        for &(node, old) in frame.parent_writes.iter().rev() {
            self.parent[node as usize] = old;
        }
        for &v in &frame.marked_vertices {
            self.marked[v as usize] = false;
        }
        self.components = frame.comps_before;
        frame.marked_vertices.clear();
        frame.parent_writes.clear();
        frame.size_writes.clear();
        self.spare_frames.push(frame);
    }
}
