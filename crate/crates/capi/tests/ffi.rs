//! Exercises the C ABI exactly as a foreign caller would: through raw
//! pointers and status codes.

use std::ffi::{CStr, CString};
use std::ptr;

use kloc_capi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

#[test]
fn solve_through_the_c_surface() {
    unsafe {
        // Two disjoint 3-paths, 2-coloured: locality 3, both orders.
        let text = cstr("6 4\n0 1\n1 2\n3 4\n4 5\n");
        let mut graph: *mut KlocGraph = ptr::null_mut();
        assert_eq!(kloc_graph_parse(text.as_ptr(), &mut graph), KlocStatus::Ok);
        assert_eq!(kloc_graph_vertex_count(graph), 6);
        assert_eq!(kloc_graph_edge_count(graph), 4);

        let colours: [u32; 6] = [1, 2, 1, 2, 1, 2];
        let mut colouring: *mut KlocColouring = ptr::null_mut();
        assert_eq!(
            kloc_colouring_new(graph, colours.as_ptr(), &mut colouring),
            KlocStatus::Ok
        );

        let mut result: *mut KlocResult = ptr::null_mut();
        assert_eq!(
            kloc_solve(graph, colouring, KlocAlgorithm::Priority, 0, &mut result),
            KlocStatus::Ok
        );
        assert_eq!(kloc_result_min_k(result), 3);
        assert_eq!(kloc_result_sequence_count(result), 2);
        let mut buf = [0u32; 8];
        let len = kloc_result_sequence(result, 0, buf.as_mut_ptr(), buf.len());
        assert_eq!(len, 2);
        assert_eq!(&buf[..2], &[1, 2]);
        assert_eq!(kloc_result_sequence(result, 5, buf.as_mut_ptr(), buf.len()), -1);
        assert!(kloc_result_evaluations(result) > 0);
        kloc_result_free(result);

        // The starred variant returns exactly one optimal sequence.
        let mut starred: *mut KlocResult = ptr::null_mut();
        assert_eq!(
            kloc_solve(graph, colouring, KlocAlgorithm::PriorityStar, 0, &mut starred),
            KlocStatus::Ok
        );
        assert_eq!(kloc_result_min_k(starred), 3);
        assert_eq!(kloc_result_sequence_count(starred), 1);
        kloc_result_free(starred);

        let mut k = 0usize;
        assert_eq!(
            kloc_evaluate_sequence(graph, colouring, [1u32, 2].as_ptr(), 2, &mut k),
            KlocStatus::Ok
        );
        assert_eq!(k, 3);

        let mut yes = -1i32;
        assert_eq!(kloc_decide(graph, colouring, 3, &mut yes), KlocStatus::Ok);
        assert_eq!(yes, 1);
        assert_eq!(kloc_decide(graph, colouring, 2, &mut yes), KlocStatus::Ok);
        assert_eq!(yes, 0);

        kloc_colouring_free(colouring);
        kloc_graph_free(graph);
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut graph: *mut KlocGraph = ptr::null_mut();
        let bad = cstr("2 1\n0 0\n");
        assert_eq!(kloc_graph_parse(bad.as_ptr(), &mut graph), KlocStatus::ParseError);
        assert!(graph.is_null());
        let message = CStr::from_ptr(kloc_last_error()).to_string_lossy().into_owned();
        assert!(message.contains("line 2"), "{message}");

        assert_eq!(
            kloc_graph_parse(ptr::null(), &mut graph),
            KlocStatus::NullArgument
        );

        // Build a valid graph, then feed structurally bad colourings.
        let text = cstr("2 1\n0 1\n");
        assert_eq!(kloc_graph_parse(text.as_ptr(), &mut graph), KlocStatus::Ok);
        let mut colouring: *mut KlocColouring = ptr::null_mut();
        let zero: [u32; 2] = [0, 1];
        assert_eq!(
            kloc_colouring_new(graph, zero.as_ptr(), &mut colouring),
            KlocStatus::InvalidArgument
        );

        // Mismatched pair: colouring built for a different graph.
        let text3 = cstr("3 0\n");
        let mut graph3: *mut KlocGraph = ptr::null_mut();
        assert_eq!(kloc_graph_parse(text3.as_ptr(), &mut graph3), KlocStatus::Ok);
        let three: [u32; 3] = [1, 2, 3];
        assert_eq!(
            kloc_colouring_new(graph3, three.as_ptr(), &mut colouring),
            KlocStatus::Ok
        );
        let mut result: *mut KlocResult = ptr::null_mut();
        assert_eq!(
            kloc_solve(graph, colouring, KlocAlgorithm::Priority, 0, &mut result),
            KlocStatus::InvalidArgument
        );

        // Non-permutation sequence.
        let mut k = 0usize;
        assert_eq!(
            kloc_evaluate_sequence(graph3, colouring, [1u32, 1, 2].as_ptr(), 3, &mut k),
            KlocStatus::InvalidArgument
        );

        kloc_colouring_free(colouring);
        kloc_graph_free(graph);
        kloc_graph_free(graph3);
        kloc_graph_free(ptr::null_mut()); // free of null is a no-op
    }
}

#[test]
fn naive_cap_maps_to_too_large() {
    unsafe {
        let mut graph: *mut KlocGraph = ptr::null_mut();
        assert_eq!(kloc_graph_new(12, ptr::null(), 0, &mut graph), KlocStatus::Ok);
        let colours: Vec<u32> = (1..=12).collect();
        let mut colouring: *mut KlocColouring = ptr::null_mut();
        assert_eq!(
            kloc_colouring_new(graph, colours.as_ptr(), &mut colouring),
            KlocStatus::Ok
        );
        let mut result: *mut KlocResult = ptr::null_mut();
        assert_eq!(
            kloc_solve(graph, colouring, KlocAlgorithm::Naive, 0, &mut result),
            KlocStatus::TooLarge
        );
        kloc_colouring_free(colouring);
        kloc_graph_free(graph);
    }
}

#[test]
fn version_and_header_exist() {
    unsafe {
        let version = CStr::from_ptr(kloc_version()).to_str().unwrap();
        assert_eq!(version, env!("CARGO_PKG_VERSION"));
    }
    // The build script generates the C header next to the crate.
    let header = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("include/kloc.h");
    let text = std::fs::read_to_string(header).expect("cbindgen header present");
    for symbol in [
        "kloc_graph_parse",
        "kloc_solve",
        "kloc_result_min_k",
        "KLOC_STATUS_OK",
        "typedef struct KlocGraph KlocGraph;",
    ] {
        assert!(text.contains(symbol), "header misses `{symbol}`");
    }
}
