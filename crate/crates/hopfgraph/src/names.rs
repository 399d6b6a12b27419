//! The named small graphs used throughout examples and the CLI.

use crate::graph::{canonicalize, CanonicalGraph, Graph};

pub fn empty() -> Graph {
    Graph::empty()
}

/// A single isolated vertex.
pub fn vertex() -> Graph {
    Graph::single_vertex()
}

pub fn edge() -> Graph {
    Graph::new(2, &[(0, 1)]).unwrap()
}

/// Path on three vertices.
pub fn cherry() -> Graph {
    Graph::new(3, &[(0, 1), (1, 2)]).unwrap()
}

pub fn triangle() -> Graph {
    Graph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap()
}

/// Star with three leaves.
pub fn three_star() -> Graph {
    Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
}

/// Path on four vertices (three edges).
pub fn three_path() -> Graph {
    Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
}

pub fn c4() -> Graph {
    Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap()
}

/// Triangle with a pendant edge.
pub fn paw() -> Graph {
    Graph::new(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap()
}

/// K4 minus one edge.
pub fn diamond() -> Graph {
    Graph::new(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
}

pub fn k4() -> Graph {
    Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

/// Looks a graph up by name. Composite inputs like `cherry.edge` denote the
/// disjoint union of the named parts.
pub fn by_name(name: &str) -> Option<Graph> {
    if name.contains('.') {
        let mut acc = Graph::empty();
        for part in name.split('.') {
            acc = acc.disjoint_union(&by_name(part)?);
        }
        return Some(acc);
    }
    match name {
        "empty" | "e" => Some(empty()),
        "vertex" => Some(vertex()),
        "edge" => Some(edge()),
        "cherry" => Some(cherry()),
        "triangle" => Some(triangle()),
        "threeStar" => Some(three_star()),
        "threePath" => Some(three_path()),
        "C4" => Some(c4()),
        "paw" => Some(paw()),
        "diamond" => Some(diamond()),
        "K4" => Some(k4()),
        _ => None,
    }
}

/// All (name, graph) pairs, for pretty-printing sums.
pub fn named_graphs() -> Vec<(&'static str, CanonicalGraph)> {
    vec![
        ("e", canonicalize(&empty())),
        ("vertex", canonicalize(&vertex())),
        ("edge", canonicalize(&edge())),
        ("cherry", canonicalize(&cherry())),
        ("triangle", canonicalize(&triangle())),
        ("threeStar", canonicalize(&three_star())),
        ("threePath", canonicalize(&three_path())),
        ("C4", canonicalize(&c4())),
        ("paw", canonicalize(&paw())),
        ("diamond", canonicalize(&diamond())),
        ("K4", canonicalize(&k4())),
    ]
}

/// Renders a canonical graph readably: a known name, a `⊔`-join of component
/// names when every component is named, otherwise the graph6 encoding.
pub fn display_name(g: &CanonicalGraph) -> String {
    let table = named_graphs();
    if let Some((name, _)) = table.iter().find(|(_, c)| c == g) {
        return (*name).to_string();
    }
    let comps = g.component_multiset();
    if !comps.is_empty() {
        let mut parts: Vec<String> = Vec::new();
        for (c, mult) in &comps {
            match table.iter().find(|(_, t)| t == c) {
                Some((name, _)) => {
                    for _ in 0..*mult {
                        parts.push((*name).to_string());
                    }
                }
                None => return g.encoding().to_string(),
            }
        }
        return parts.join("⊔");
    }
    g.encoding().to_string()
}
