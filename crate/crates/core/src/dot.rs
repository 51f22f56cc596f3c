//! Graphviz output for Hasse quivers.

use std::fmt::Write as _;

use crate::tau_tilt::HasseGraph;

/// One node per vertex labelled `T | Q`, one edge per cover relation,
/// pointing from the larger element to the smaller one.
pub fn hasse_to_dot(graph: &HasseGraph, name: &str) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "digraph \"{name}\" {{");
    let _ = writeln!(s, "  rankdir=TB;");
    for (i, v) in graph.vertices.iter().enumerate() {
        let _ = writeln!(s, "  n{i} [label=\"{}\"];", v.label());
    }
    for &(a, b) in &graph.edges {
        let _ = writeln!(s, "  n{a} -> n{b};");
    }
    s.push_str("}\n");
    s
}

/// Edges as `(T, T')` name pairs, for comparisons independent of vertex order.
pub fn edge_names(graph: &HasseGraph) -> Vec<(String, String)> {
    let mut e: Vec<(String, String)> = graph
        .edges
        .iter()
        .map(|&(a, b)| (graph.vertices[a].t.name(), graph.vertices[b].t.name()))
        .collect();
    e.sort();
    e
}
