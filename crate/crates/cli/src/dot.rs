//! Graphviz export of the associated graph.

use evolalg_core::AssociatedGraph;

/// Vertices `v1..vn` in order, then edges ordered by source and target.
pub fn export_dot(g: &AssociatedGraph) -> String {
    let mut out = String::from("digraph evolution {\n");
    for i in 0..g.vertex_count() {
        out.push_str(&format!("  v{};\n", i + 1));
    }
    for i in 0..g.vertex_count() {
        for &j in g.out_edges(i) {
            out.push_str(&format!("  v{} -> v{};\n", i + 1, j + 1));
        }
    }
    out.push_str("}\n");
    out
}
