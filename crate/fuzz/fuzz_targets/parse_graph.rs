#![no_main]

use ehf_core::io::{parse_graph, parse_graph_as, write_graph, GraphFormat};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    for f in [GraphFormat::Edgelist, GraphFormat::Dimacs, GraphFormat::Pace] {
        let _ = parse_graph_as(text, f);
    }
    // Whatever parses must survive a write and re-read unchanged.
    if let Ok(g) = parse_graph(text) {
        for f in [GraphFormat::Edgelist, GraphFormat::Dimacs, GraphFormat::Pace] {
            let back = parse_graph_as(&write_graph(&g, f), f).expect("written graph re-parses");
            assert_eq!(back.edges(), g.edges());
        }
    }
});
