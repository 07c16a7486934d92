//! C ABI for the k-locality solver, discovered by cbindgen.
//!
//! Handles are opaque pointers owned by the library; every `*_new`/`*_parse`
//! has a matching `*_free`. Functions returning [`KlocStatus`] report
//! errors through the status code; the last error message is kept in
//! thread-local storage and can be read with [`kloc_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;
use std::slice;
use std::time::Duration;

use kloc::engine::{
    decide_k_local, evaluate_sequence, naive_search_with, priority_search_with, EngineError,
    LocalityResult, SearchLimits,
};
use kloc::graph::{Colouring, Graph};
use kloc::io::{parse_colouring, parse_graph};

/// Status codes returned by the fallible entry points.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KlocStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// Arguments were structurally invalid (mismatched sizes, bad ids).
    InvalidArgument = 2,
    /// Text input failed to parse.
    ParseError = 3,
    /// The requested computation exceeds a configured cap.
    TooLarge = 4,
    /// The search hit the supplied timeout.
    Timeout = 5,
}

/// Search algorithm selector.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KlocAlgorithm {
    /// Exhaustive enumeration of all palette permutations.
    Naive = 0,
    /// Best-first prefix search returning all optimal sequences.
    Priority = 1,
    /// Best-first prefix search stopping at one optimal sequence.
    PriorityStar = 2,
}

/// Opaque undirected simple graph.
pub struct KlocGraph(Graph);

/// Opaque vertex colouring, tied to the vertex count it was built for.
pub struct KlocColouring(Colouring);

/// Opaque solver result.
pub struct KlocResult(LocalityResult);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: impl Into<String>) {
    let message = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(message).unwrap_or_default());
}

/// Message describing the most recent error on this thread. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn kloc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn kloc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Option<&'a str> {
    if ptr.is_null() {
        return None;
    }
    CStr::from_ptr(ptr).to_str().ok()
}

/// Builds a graph on `n` vertices from `edge_count` pairs laid out as
/// `u0 v0 u1 v1 ...`. On success stores a handle in `out`.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable `uint32_t`s (or be null
/// when `edge_count` is 0); `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn kloc_graph_new(
    n: usize,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut KlocGraph,
) -> KlocStatus {
    if out.is_null() || (edges.is_null() && edge_count > 0) {
        set_error("null pointer argument");
        return KlocStatus::NullArgument;
    }
    let pairs = if edge_count == 0 {
        &[][..]
    } else {
        slice::from_raw_parts(edges, 2 * edge_count)
    };
    let edge_iter = pairs.chunks_exact(2).map(|p| (p[0] as usize, p[1] as usize));
    match Graph::new(n, edge_iter) {
        Ok(g) => {
            *out = Box::into_raw(Box::new(KlocGraph(g)));
            KlocStatus::Ok
        }
        Err(e) => {
            set_error(e.to_string());
            *out = ptr::null_mut();
            KlocStatus::InvalidArgument
        }
    }
}

/// Parses the graph text format (`n m` header plus `u v` edge lines).
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn kloc_graph_parse(
    text: *const c_char,
    out: *mut *mut KlocGraph,
) -> KlocStatus {
    if out.is_null() {
        set_error("null pointer argument");
        return KlocStatus::NullArgument;
    }
    let Some(text) = read_str(text) else {
        set_error("graph text must be valid UTF-8");
        return KlocStatus::NullArgument;
    };
    match parse_graph(text) {
        Ok(g) => {
            *out = Box::into_raw(Box::new(KlocGraph(g)));
            KlocStatus::Ok
        }
        Err(e) => {
            set_error(e.to_string());
            *out = ptr::null_mut();
            KlocStatus::ParseError
        }
    }
}

/// Number of vertices.
///
/// # Safety
/// `graph` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn kloc_graph_vertex_count(graph: *const KlocGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.n())
}

/// Number of edges.
///
/// # Safety
/// `graph` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn kloc_graph_edge_count(graph: *const KlocGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.m())
}

/// # Safety
/// `graph` must be null or a handle obtained from this library, not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn kloc_graph_free(graph: *mut KlocGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Builds a colouring for `graph` from one positive colour id per vertex.
///
/// # Safety
/// `colours` must point to `kloc_graph_vertex_count(graph)` readable
/// `uint32_t`s; `graph` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn kloc_colouring_new(
    graph: *const KlocGraph,
    colours: *const u32,
    out: *mut *mut KlocColouring,
) -> KlocStatus {
    let Some(graph) = graph.as_ref() else {
        set_error("null graph handle");
        return KlocStatus::NullArgument;
    };
    if out.is_null() || (colours.is_null() && graph.0.n() > 0) {
        set_error("null pointer argument");
        return KlocStatus::NullArgument;
    }
    let values = if graph.0.n() == 0 {
        Vec::new()
    } else {
        slice::from_raw_parts(colours, graph.0.n()).to_vec()
    };
    match Colouring::new(values) {
        Ok(c) => {
            *out = Box::into_raw(Box::new(KlocColouring(c)));
            KlocStatus::Ok
        }
        Err(e) => {
            set_error(e.to_string());
            *out = ptr::null_mut();
            KlocStatus::InvalidArgument
        }
    }
}

/// Parses the colouring text format (`v colour_id` lines) for `graph`.
///
/// # Safety
/// `graph` must be a live handle, `text` a valid NUL-terminated string,
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn kloc_colouring_parse(
    graph: *const KlocGraph,
    text: *const c_char,
    out: *mut *mut KlocColouring,
) -> KlocStatus {
    let Some(graph) = graph.as_ref() else {
        set_error("null graph handle");
        return KlocStatus::NullArgument;
    };
    if out.is_null() {
        set_error("null pointer argument");
        return KlocStatus::NullArgument;
    }
    let Some(text) = read_str(text) else {
        set_error("colouring text must be valid UTF-8");
        return KlocStatus::NullArgument;
    };
    match parse_colouring(text, graph.0.n()) {
        Ok(c) => {
            *out = Box::into_raw(Box::new(KlocColouring(c)));
            KlocStatus::Ok
        }
        Err(e) => {
            set_error(e.to_string());
            *out = ptr::null_mut();
            KlocStatus::ParseError
        }
    }
}

/// # Safety
/// `colouring` must be null or a handle obtained from this library, not
/// yet freed.
#[no_mangle]
pub unsafe extern "C" fn kloc_colouring_free(colouring: *mut KlocColouring) {
    if !colouring.is_null() {
        drop(Box::from_raw(colouring));
    }
}

fn check_pair(graph: &KlocGraph, colouring: &KlocColouring) -> Result<(), KlocStatus> {
    if colouring.0.len() != graph.0.n() {
        set_error(format!(
            "colouring covers {} vertices but the graph has {}",
            colouring.0.len(),
            graph.0.n()
        ));
        return Err(KlocStatus::InvalidArgument);
    }
    Ok(())
}

/// Runs the selected search. `timeout_ms` of 0 means no timeout. On
/// success stores a result handle in `out`.
///
/// # Safety
/// `graph`, `colouring` and `out` must be valid; the colouring must have
/// been built for a graph with the same vertex count.
#[no_mangle]
pub unsafe extern "C" fn kloc_solve(
    graph: *const KlocGraph,
    colouring: *const KlocColouring,
    algorithm: KlocAlgorithm,
    timeout_ms: u64,
    out: *mut *mut KlocResult,
) -> KlocStatus {
    let (Some(graph), Some(colouring)) = (graph.as_ref(), colouring.as_ref()) else {
        set_error("null handle argument");
        return KlocStatus::NullArgument;
    };
    if out.is_null() {
        set_error("null pointer argument");
        return KlocStatus::NullArgument;
    }
    if let Err(status) = check_pair(graph, colouring) {
        return status;
    }
    let limits = SearchLimits {
        timeout: (timeout_ms > 0).then(|| Duration::from_millis(timeout_ms)),
        ..Default::default()
    };
    let result = match algorithm {
        KlocAlgorithm::Naive => naive_search_with(&graph.0, &colouring.0, &limits),
        KlocAlgorithm::Priority => priority_search_with(&graph.0, &colouring.0, true, &limits),
        KlocAlgorithm::PriorityStar => {
            priority_search_with(&graph.0, &colouring.0, false, &limits)
        }
    };
    match result {
        Ok(r) => {
            *out = Box::into_raw(Box::new(KlocResult(r)));
            KlocStatus::Ok
        }
        Err(e @ EngineError::PaletteTooLarge { .. }) => {
            set_error(e.to_string());
            KlocStatus::TooLarge
        }
        Err(e @ EngineError::Timeout) => {
            set_error(e.to_string());
            KlocStatus::Timeout
        }
        Err(e) => {
            set_error(e.to_string());
            KlocStatus::InvalidArgument
        }
    }
}

/// Evaluates one marking sequence (a permutation of the palette); writes
/// the maximum component count to `out_k`.
///
/// # Safety
/// `sequence` must point to `sequence_len` readable `uint32_t`s; all
/// handles and `out_k` must be valid.
#[no_mangle]
pub unsafe extern "C" fn kloc_evaluate_sequence(
    graph: *const KlocGraph,
    colouring: *const KlocColouring,
    sequence: *const u32,
    sequence_len: usize,
    out_k: *mut usize,
) -> KlocStatus {
    let (Some(graph), Some(colouring)) = (graph.as_ref(), colouring.as_ref()) else {
        set_error("null handle argument");
        return KlocStatus::NullArgument;
    };
    if out_k.is_null() || (sequence.is_null() && sequence_len > 0) {
        set_error("null pointer argument");
        return KlocStatus::NullArgument;
    }
    if let Err(status) = check_pair(graph, colouring) {
        return status;
    }
    let seq = if sequence_len == 0 {
        &[][..]
    } else {
        slice::from_raw_parts(sequence, sequence_len)
    };
    match evaluate_sequence(&graph.0, &colouring.0, seq) {
        Ok(k) => {
            *out_k = k;
            KlocStatus::Ok
        }
        Err(e) => {
            set_error(e.to_string());
            KlocStatus::InvalidArgument
        }
    }
}

/// Decides whether the locality is at most `k`; writes 1 or 0 to `out`.
///
/// # Safety
/// All handles and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn kloc_decide(
    graph: *const KlocGraph,
    colouring: *const KlocColouring,
    k: usize,
    out: *mut i32,
) -> KlocStatus {
    let (Some(graph), Some(colouring)) = (graph.as_ref(), colouring.as_ref()) else {
        set_error("null handle argument");
        return KlocStatus::NullArgument;
    };
    if out.is_null() {
        set_error("null pointer argument");
        return KlocStatus::NullArgument;
    }
    if let Err(status) = check_pair(graph, colouring) {
        return status;
    }
    *out = decide_k_local(&graph.0, &colouring.0, k) as i32;
    KlocStatus::Ok
}

/// Minimum locality of a solved instance.
///
/// # Safety
/// `result` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn kloc_result_min_k(result: *const KlocResult) -> usize {
    result.as_ref().map_or(0, |r| r.0.min_k)
}

/// Number of optimal sequences carried by the result.
///
/// # Safety
/// `result` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn kloc_result_sequence_count(result: *const KlocResult) -> usize {
    result.as_ref().map_or(0, |r| r.0.sequences.len())
}

/// Copies sequence `index` into `buffer` (up to `capacity` colours) and
/// returns its full length, or -1 when the index is out of range.
///
/// # Safety
/// `result` must be live; `buffer` must point to `capacity` writable
/// `uint32_t`s (or be null with capacity 0).
#[no_mangle]
pub unsafe extern "C" fn kloc_result_sequence(
    result: *const KlocResult,
    index: usize,
    buffer: *mut u32,
    capacity: usize,
) -> isize {
    let Some(result) = result.as_ref() else {
        return -1;
    };
    let Some(seq) = result.0.sequences.get(index) else {
        return -1;
    };
    if !buffer.is_null() {
        let n = seq.len().min(capacity);
        slice::from_raw_parts_mut(buffer, n).copy_from_slice(&seq[..n]);
    }
    seq.len() as isize
}

/// Queue pops that expanded children during the search.
///
/// # Safety
/// `result` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn kloc_result_expansions(result: *const KlocResult) -> u64 {
    result.as_ref().map_or(0, |r| r.0.expansions)
}

/// Component counts performed during the search.
///
/// # Safety
/// `result` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn kloc_result_evaluations(result: *const KlocResult) -> u64 {
    result.as_ref().map_or(0, |r| r.0.evaluations)
}

/// # Safety
/// `result` must be null or a handle obtained from this library, not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn kloc_result_free(result: *mut KlocResult) {
    if !result.is_null() {
        drop(Box::from_raw(result));
    }
}
