//! Graphviz rendering of adjacency matrices.

use std::fmt::Write;

use crate::matrix::AdjacencyMatrix;

/// Undirected multigraph in DOT syntax. Vertices are numbered from 1; edge
/// multiplicities and self-loop powers appear as labels.
pub fn to_dot(a: &AdjacencyMatrix, name: &str) -> String {
    let n = a.dim();
    let mut s = String::new();
    let _ = writeln!(s, "graph \"{}\" {{", name.replace('"', "'"));
    let _ = writeln!(s, "  // p = {}", a.modulus());
    for i in 1..=n {
        let _ = writeln!(s, "  {i};");
    }
    for i in 0..n {
        for j in i..n {
            let k = a.get(i, j);
            if k != 0 {
                let _ = writeln!(s, "  {} -- {} [label=\"{k}\"];", i + 1, j + 1);
            }
        }
    }
    s.push_str("}\n");
    s
}
