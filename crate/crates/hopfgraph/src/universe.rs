//! Exhaustive universes of isomorphism classes within a size bound.
//!
//! Vertex-bounded universes are generated by vertex augmentation: every class
//! on n vertices arises from a class on n-1 vertices by attaching a new
//! vertex with some neighborhood, so each level is the canonicalized closure
//! of the previous one. Edge-bounded universes (which only make sense without
//! isolated vertices, otherwise they are infinite) are generated by edge
//! augmentation: add one edge between existing vertices, between an existing
//! and a fresh vertex, or between two fresh vertices.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{canonicalize, CanonicalGraph, Graph};
use crate::par;

/// Default ceiling for enumeration bounds.
pub const DEFAULT_CAP: usize = 8;
/// Hard limit for the configurable cap.
pub const HARD_CAP: usize = 12;

/// The enumeration cap: `DEFAULT_CAP` unless overridden by the
/// `HOPFGRAPH_MAX_CAP` environment variable, and never above `HARD_CAP`.
pub fn configured_cap() -> usize {
    match std::env::var("HOPFGRAPH_MAX_CAP") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(|c| c.min(HARD_CAP))
            .unwrap_or(DEFAULT_CAP),
        Err(_) => DEFAULT_CAP,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    MaxVertices,
    MaxEdges,
}

#[derive(Clone, Debug)]
pub struct GraphUniverse {
    pub bound_kind: BoundKind,
    pub bound: usize,
    pub no_isolated: bool,
    members: Vec<CanonicalGraph>,
}

impl GraphUniverse {
    /// Members in deterministic order (edge count, vertex count, encoding).
    pub fn members(&self) -> &[CanonicalGraph] {
        &self.members
    }

    pub fn contains(&self, g: &CanonicalGraph) -> bool {
        self.members.binary_search(g).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Enumerates every isomorphism class within the bound.
pub fn enumerate_graphs(
    bound_kind: BoundKind,
    bound: usize,
    no_isolated: bool,
) -> Result<GraphUniverse> {
    enumerate_graphs_capped(bound_kind, bound, no_isolated, configured_cap())
}

pub fn enumerate_graphs_capped(
    bound_kind: BoundKind,
    bound: usize,
    no_isolated: bool,
    cap: usize,
) -> Result<GraphUniverse> {
    if bound > cap {
        return Err(Error::resource(format!(
            "enumeration bound {bound} exceeds the cap {cap}"
        )));
    }
    let members = match bound_kind {
        BoundKind::MaxVertices => {
            let mut all = by_vertices(bound);
            if no_isolated {
                all.retain(|c| !c.graph().has_isolated_vertices());
            }
            all
        }
        BoundKind::MaxEdges => {
            if !no_isolated {
                return Err(Error::domain(
                    "an edge-bounded universe with isolated vertices allowed is infinite"
                        .to_string(),
                ));
            }
            by_edges(bound)
        }
    };
    Ok(GraphUniverse {
        bound_kind,
        bound,
        no_isolated,
        members,
    })
}

fn by_vertices(max_n: usize) -> Vec<CanonicalGraph> {
    let mut all: BTreeSet<CanonicalGraph> = BTreeSet::new();
    let mut level: Vec<CanonicalGraph> = vec![canonicalize(&Graph::empty())];
    all.extend(level.iter().cloned());
    for n in 1..=max_n {
        let next: Vec<Vec<CanonicalGraph>> = par::map_vec(level, |parent| {
            let g = parent.graph();
            let mut out = Vec::with_capacity(1 << (n - 1));
            for nb in 0u64..(1 << (n - 1)) {
                let mut edges = g.edges().to_vec();
                for w in 0..(n - 1) {
                    if (nb >> w) & 1 == 1 {
                        edges.push((w, n - 1));
                    }
                }
                let child = Graph::new(n, &edges).expect("augmented graph is valid");
                out.push(canonicalize(&child));
            }
            out
        });
        let mut merged: BTreeSet<CanonicalGraph> = BTreeSet::new();
        for chunk in next {
            merged.extend(chunk);
        }
        level = merged.iter().cloned().collect();
        all.extend(merged);
    }
    all.into_iter().collect()
}

fn by_edges(max_e: usize) -> Vec<CanonicalGraph> {
    let mut all: BTreeSet<CanonicalGraph> = BTreeSet::new();
    let mut level: Vec<CanonicalGraph> = vec![canonicalize(&Graph::empty())];
    all.extend(level.iter().cloned());
    for _ in 1..=max_e {
        let next: Vec<Vec<CanonicalGraph>> = par::map_vec(level, |parent| {
            let g = parent.graph();
            let n = g.vertex_count();
            let mut out = Vec::new();
            // New edge inside the existing vertex set.
            for u in 0..n {
                for v in (u + 1)..n {
                    if !g.has_edge(u, v) {
                        let mut edges = g.edges().to_vec();
                        edges.push((u, v));
                        out.push(canonicalize(&Graph::new(n, &edges).unwrap()));
                    }
                }
            }
            // New edge to one fresh vertex.
            for u in 0..n {
                let mut edges = g.edges().to_vec();
                edges.push((u, n));
                out.push(canonicalize(&Graph::new(n + 1, &edges).unwrap()));
            }
            // New disjoint edge.
            let mut edges = g.edges().to_vec();
            edges.push((n, n + 1));
            out.push(canonicalize(&Graph::new(n + 2, &edges).unwrap()));
            out
        });
        let mut merged: BTreeSet<CanonicalGraph> = BTreeSet::new();
        for chunk in next {
            merged.extend(chunk);
        }
        level = merged.iter().cloned().collect();
        all.extend(merged);
    }
    all.into_iter().collect()
}
