//! Labeled finite simple graphs and canonical forms under isomorphism.
//!
//! `Graph` is a plain labeled object: a vertex count and a sorted list of
//! edges `(u, v)` with `u < v`. Isolated vertices are represented explicitly
//! (the vertex count may exceed the number of covered vertices), because the
//! algebraic carriers with and without isolated vertices are used side by
//! side throughout.
//!
//! `CanonicalGraph` is the isomorphism-class key used by every formal sum:
//! two graphs get the same canonical form iff they are isomorphic. The
//! canonical labeling is found by iterated degree refinement followed by a
//! backtracking search for the lexicographically minimal adjacency bitstring
//! among labelings compatible with the refined coloring.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::io::encode_graph6;

/// Hard ceiling on vertex counts for a single `Graph` value. Adjacency rows
/// are stored as `u64` bitmasks and several kernels enumerate vertex subsets,
/// so this is deliberately small; enumeration universes are capped lower.
pub const MAX_GRAPH_VERTICES: usize = 32;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph, normalizing each edge to `(min, max)` and sorting the
    /// edge list. Rejects loops, duplicate edges and out-of-range endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_GRAPH_VERTICES {
            return Err(Error::resource(format!(
                "graph on {n} vertices exceeds the hard limit of {MAX_GRAPH_VERTICES}"
            )));
        }
        let mut es: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == b {
                return Err(Error::domain(format!("loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::domain(format!(
                    "edge ({a},{b}) out of range for {n} vertices"
                )));
            }
            es.push((a.min(b), a.max(b)));
        }
        es.sort_unstable();
        if es.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::domain("duplicate edge".to_string()));
        }
        Ok(Graph { n, edges: es })
    }

    /// The empty graph `e` (zero vertices, zero edges): the algebra unit.
    pub fn empty() -> Graph {
        Graph { n: 0, edges: Vec::new() }
    }

    /// A single isolated vertex.
    pub fn single_vertex() -> Graph {
        Graph { n: 1, edges: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).is_ok()
    }

    /// Adjacency rows as bitmasks; row `v` has bit `w` set iff `v ~ w`.
    pub fn adjacency(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn has_isolated_vertices(&self) -> bool {
        let mut covered = 0u64;
        for &(u, v) in &self.edges {
            covered |= (1 << u) | (1 << v);
        }
        covered.count_ones() as usize != self.n
    }

    /// Applies the relabeling `perm` (vertex `v` becomes `perm[v]`).
    pub fn permute(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        Graph::new(self.n, &edges).expect("permutation of a valid graph is valid")
    }

    /// Disjoint union; vertices of `other` are shifted past `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut edges = self.edges.clone();
        edges.extend(
            other
                .edges
                .iter()
                .map(|&(u, v)| (u + self.n, v + self.n)),
        );
        Graph::new(self.n + other.n, &edges).expect("shifted union of valid graphs is valid")
    }

    /// The restricted subgraph `g|_A`: vertex set is exactly the endpoints of
    /// the edge subset `A`, so the result never has isolated vertices.
    /// Vertices are relabeled to `0..k-1` preserving their original order.
    pub fn restricted_subgraph(&self, a: &[(usize, usize)]) -> Result<Graph> {
        let mut verts: Vec<usize> = Vec::new();
        for &(u, v) in a {
            if !self.has_edge(u, v) {
                return Err(Error::domain(format!("edge ({u},{v}) not present")));
            }
            verts.push(u);
            verts.push(v);
        }
        verts.sort_unstable();
        verts.dedup();
        let index: BTreeMap<usize, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges: Vec<(usize, usize)> = a
            .iter()
            .map(|&(u, v)| (index[&u.min(v)], index[&u.max(v)]))
            .collect();
        Graph::new(verts.len(), &edges)
    }

    /// The induced subgraph `g_U`: vertex subset `U` with all edges inside.
    pub fn induced_subgraph(&self, u: &[usize]) -> Result<Graph> {
        let mut verts = u.to_vec();
        verts.sort_unstable();
        verts.dedup();
        if verts.len() != u.len() {
            return Err(Error::domain("duplicate vertex in subset".to_string()));
        }
        if let Some(&v) = verts.iter().find(|&&v| v >= self.n) {
            return Err(Error::domain(format!("vertex {v} out of range")));
        }
        let index: BTreeMap<usize, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut mask = 0u64;
        for &v in &verts {
            mask |= 1 << v;
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(a, b)| (mask >> a) & 1 == 1 && (mask >> b) & 1 == 1)
            .map(|&(a, b)| (index[&a], index[&b]))
            .collect();
        Graph::new(verts.len(), &edges)
    }

    /// Induced subgraph from a vertex bitmask.
    pub fn induced_subgraph_mask(&self, mask: u64) -> Graph {
        let verts: Vec<usize> = (0..self.n).filter(|&v| (mask >> v) & 1 == 1).collect();
        self.induced_subgraph(&verts)
            .expect("mask vertices are in range")
    }

    /// Connected components as graphs relabeled to `0..k-1`, ordered by their
    /// smallest original vertex.
    pub fn connected_components(&self) -> Vec<Graph> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            let mut stack = vec![root];
            let mut comp = Vec::new();
            seen[root] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for w in 0..self.n {
                    if (adj[v] >> w) & 1 == 1 && !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(
                self.induced_subgraph(&comp)
                    .expect("component vertices are in range"),
            );
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    /// |Aut(g)|: counted by backtracking over color-compatible bijections.
    /// Disconnected graphs factor first: automorphisms permute isomorphic
    /// components freely, so |Aut| = Π |Aut(c)|^m · m! over component classes,
    /// which avoids enumerating the (possibly huge) full group.
    pub fn automorphism_count(&self) -> u64 {
        let comps = self.connected_components();
        if comps.len() > 1 {
            let mut classes: Vec<(CanonicalGraph, u64)> = Vec::new();
            for c in &comps {
                let key = canonicalize(c);
                match classes.iter_mut().find(|(k, _)| *k == key) {
                    Some((_, m)) => *m += 1,
                    None => classes.push((key, 1)),
                }
            }
            let mut total = 1u64;
            for (key, m) in &classes {
                let a = key.graph().automorphism_count();
                for i in 1..=*m {
                    total = total * a * i;
                }
            }
            return total;
        }
        let adj = self.adjacency();
        let colors = refine_colors(self.n, &adj);
        let mut image = vec![usize::MAX; self.n];
        let mut used = 0u64;
        count_automorphisms(self.n, &adj, &colors, 0, &mut image, &mut used)
    }
}

fn count_automorphisms(
    n: usize,
    adj: &[u64],
    colors: &[usize],
    v: usize,
    image: &mut [usize],
    used: &mut u64,
) -> u64 {
    if v == n {
        return 1;
    }
    let mut total = 0;
    for w in 0..n {
        if (*used >> w) & 1 == 1 || colors[w] != colors[v] {
            continue;
        }
        let ok = (0..v).all(|p| ((adj[v] >> p) & 1 == 1) == ((adj[w] >> image[p]) & 1 == 1));
        if !ok {
            continue;
        }
        image[v] = w;
        *used |= 1 << w;
        total += count_automorphisms(n, adj, colors, v + 1, image, used);
        *used &= !(1 << w);
    }
    image[v] = usize::MAX;
    total
}

/// Iterated neighborhood refinement. Starts from degrees and refines each
/// color by the multiset of neighbor colors until stable. The returned color
/// ids are isomorphism-invariant (they are ranks of sorted signatures), so
/// isomorphic graphs produce the same color multiset.
fn refine_colors(n: usize, adj: &[u64]) -> Vec<usize> {
    let mut colors: Vec<usize> = adj.iter().map(|m| m.count_ones() as usize).collect();
    let mut class_count = normalize_colors(&mut colors);
    loop {
        let mut sigs: Vec<(usize, Vec<usize>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut neigh: Vec<usize> = (0..n)
                .filter(|&w| (adj[v] >> w) & 1 == 1)
                .map(|w| colors[w])
                .collect();
            neigh.sort_unstable();
            sigs.push((colors[v], neigh));
        }
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        if distinct.len() == class_count {
            return colors;
        }
        class_count = distinct.len();
        for v in 0..n {
            colors[v] = distinct.binary_search(&sigs[v]).unwrap();
        }
    }
}

fn normalize_colors(colors: &mut [usize]) -> usize {
    let mut distinct: Vec<usize> = colors.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    for c in colors.iter_mut() {
        *c = distinct.binary_search(c).unwrap();
    }
    distinct.len()
}

/// Canonical labeling search state. Positions are filled left to right; the
/// vertex placed at position `i` contributes the row of its adjacencies to
/// the already-placed vertices, and the row sequence is minimized
/// lexicographically over all labelings that list the refined color classes
/// in ascending color order.
struct CanonSearch<'a> {
    n: usize,
    adj: &'a [u64],
    colors: &'a [usize],
    target: &'a [usize],
    placed: Vec<usize>,
    rows: Vec<u64>,
    used: u64,
    best_rows: Option<Vec<u64>>,
    best_placed: Vec<usize>,
}

impl<'a> CanonSearch<'a> {
    /// Returns true when a new best labeling was recorded inside the subtree,
    /// in which case the current path prefix equals the new best prefix.
    fn dfs(&mut self, i: usize, tied: bool) -> bool {
        if i == self.n {
            if self.best_rows.is_none() || !tied {
                self.best_rows = Some(self.rows.clone());
                self.best_placed = self.placed.clone();
                return true;
            }
            return false;
        }
        let mut cands: Vec<(u64, usize)> = Vec::new();
        for v in 0..self.n {
            if (self.used >> v) & 1 == 1 || self.colors[v] != self.target[i] {
                continue;
            }
            let mut row = 0u64;
            for (j, &p) in self.placed.iter().enumerate() {
                if (self.adj[v] >> p) & 1 == 1 {
                    row |= 1 << (i - 1 - j);
                }
            }
            cands.push((row, v));
        }
        cands.sort_unstable();
        // Twin pruning: if two candidates have identical neighborhoods outside
        // the pair itself, transposing them is an automorphism, so exploring
        // one of them covers the other. For highly symmetric graphs (isolated
        // vertices, disjoint copies) this collapses the search tree.
        let mut keep: Vec<(u64, usize)> = Vec::with_capacity(cands.len());
        'cand: for &(row, v) in &cands {
            for &(krow, k) in &keep {
                if krow != row {
                    continue;
                }
                let mask = !((1u64 << v) | (1u64 << k));
                if self.adj[v] & mask == self.adj[k] & mask {
                    continue 'cand;
                }
            }
            keep.push((row, v));
        }
        let cands = keep;
        let mut updated = false;
        let mut tied_here = tied;
        for &(row, v) in &cands {
            let child_tied = match (&self.best_rows, tied_here) {
                (Some(best), true) => match row.cmp(&best[i]) {
                    Ordering::Greater => break,
                    Ordering::Equal => true,
                    Ordering::Less => false,
                },
                _ => false,
            };
            self.placed.push(v);
            self.rows.push(row);
            self.used |= 1 << v;
            let upd = self.dfs(i + 1, child_tied);
            self.used &= !(1 << v);
            self.rows.pop();
            self.placed.pop();
            if upd {
                updated = true;
                tied_here = true;
            }
        }
        updated
    }
}

/// An isomorphism-class representative: the canonically relabeled graph plus
/// its graph6 encoding. Construction goes through [`canonicalize`] only.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CanonicalGraph {
    graph: Graph,
    encoding: String,
}

impl CanonicalGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn encoding(&self) -> &str {
        &self.encoding
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.n
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edges.len()
    }

    pub fn is_empty_graph(&self) -> bool {
        self.graph.n == 0
    }

    /// Component classes with multiplicities, sorted.
    pub fn component_multiset(&self) -> Vec<(CanonicalGraph, usize)> {
        let mut comps: Vec<CanonicalGraph> = self
            .graph
            .connected_components()
            .iter()
            .map(canonicalize)
            .collect();
        comps.sort();
        let mut out: Vec<(CanonicalGraph, usize)> = Vec::new();
        for c in comps {
            match out.last_mut() {
                Some((prev, m)) if *prev == c => *m += 1,
                _ => out.push((c, 1)),
            }
        }
        out
    }
}

impl fmt::Debug for CanonicalGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalGraph({})", self.encoding)
    }
}

impl PartialOrd for CanonicalGraph {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Deterministic term order used everywhere sums are printed or iterated:
/// by edge count, then vertex count, then encoding.
impl Ord for CanonicalGraph {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.edge_count(), self.vertex_count(), &self.encoding).cmp(&(
            other.edge_count(),
            other.vertex_count(),
            &other.encoding,
        ))
    }
}

/// Computes the canonical form of `g`. Stable across runs and platforms:
/// the search is deterministic and depends only on the graph structure.
pub fn canonicalize(g: &Graph) -> CanonicalGraph {
    let adj = g.adjacency();
    let colors = refine_colors(g.n, &adj);
    let mut target: Vec<usize> = colors.clone();
    target.sort_unstable();
    let mut search = CanonSearch {
        n: g.n,
        adj: &adj,
        colors: &colors,
        target: &target,
        placed: Vec::with_capacity(g.n),
        rows: Vec::with_capacity(g.n),
        used: 0,
        best_rows: None,
        best_placed: (0..g.n).collect(),
    };
    search.dfs(0, false);
    let placed = search.best_placed;
    let mut perm = vec![0usize; g.n];
    for (pos, &orig) in placed.iter().enumerate() {
        perm[orig] = pos;
    }
    let graph = g.permute(&perm);
    let encoding = encode_graph6(&graph).expect("graphs under the vertex cap encode");
    CanonicalGraph { graph, encoding }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::names;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    /// Brute-force canonical key: minimum edge list over all labelings.
    /// Only usable for small n; this is the oracle for `canonicalize`.
    fn brute_canonical_key(g: &Graph) -> Vec<(usize, usize)> {
        let n = g.vertex_count();
        assert!(n <= 7, "oracle limited to 7 vertices");
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best: Option<Vec<(usize, usize)>> = None;
        permute_all(&mut perm, 0, &mut |p| {
            let key = g.permute(p).edges().to_vec();
            if best.as_ref().map_or(true, |b| key < *b) {
                best = Some(key);
            }
        });
        best.unwrap_or_default()
    }

    fn permute_all(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == perm.len() {
            f(perm);
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            permute_all(perm, k + 1, f);
            perm.swap(k, i);
        }
    }

    fn random_graph(rng: &mut impl Rng, max_n: usize) -> Graph {
        let n = rng.gen_range(0..=max_n);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(0.4) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    fn random_perm(rng: &mut impl Rng, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(rng);
        p
    }

    #[test]
    fn canonical_identifies_relabelings() {
        let a = Graph::new(3, &[(0, 2), (1, 2)]).unwrap();
        let b = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(canonicalize(&a), canonicalize(&b));
    }

    #[test]
    fn canonical_empty() {
        let e = Graph::empty();
        let c = canonicalize(&e);
        assert_eq!(c.vertex_count(), 0);
        assert_eq!(c.edge_count(), 0);
    }

    #[test]
    fn canonical_is_idempotent() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let g = random_graph(&mut rng, 8);
            let c = canonicalize(&g);
            let c2 = canonicalize(c.graph());
            assert_eq!(c, c2);
            assert_eq!(c.graph().edges(), c2.graph().edges());
        }
    }

    #[test]
    fn canonical_invariant_under_permutation() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..1000 {
            let g = random_graph(&mut rng, 8);
            let p = random_perm(&mut rng, g.vertex_count());
            assert_eq!(canonicalize(&g), canonicalize(&g.permute(&p)));
        }
    }

    #[test]
    fn canonical_matches_brute_force_classes() {
        // Two graphs on <= 7 vertices agree under canonicalize iff the
        // brute-force minimal edge lists agree.
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let graphs: Vec<Graph> = (0..60).map(|_| random_graph(&mut rng, 6)).collect();
        for a in &graphs {
            for b in &graphs {
                if a.vertex_count() != b.vertex_count() {
                    continue;
                }
                let iso = brute_canonical_key(a) == brute_canonical_key(b);
                assert_eq!(iso, canonicalize(a) == canonicalize(b));
            }
        }
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(names::edge().automorphism_count(), 2);
        assert_eq!(names::triangle().automorphism_count(), 6);
        assert_eq!(names::k4().automorphism_count(), 24);
        let cherry_edge = names::cherry().disjoint_union(&names::edge());
        assert_eq!(cherry_edge.automorphism_count(), 4);
    }

    #[test]
    fn automorphism_count_matches_permutation_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..60 {
            let g = random_graph(&mut rng, 6);
            let n = g.vertex_count();
            let mut perm: Vec<usize> = (0..n).collect();
            let mut count = 0u64;
            permute_all(&mut perm, 0, &mut |p| {
                if g.permute(p).edges() == g.edges() {
                    count += 1;
                }
            });
            assert_eq!(g.automorphism_count(), count);
        }
    }

    #[test]
    fn restricted_subgraph_basics() {
        let tri = names::triangle();
        let cherry = tri.restricted_subgraph(&[(0, 1), (1, 2)]).unwrap();
        assert_eq!(canonicalize(&cherry), canonicalize(&names::cherry()));
        let e = tri.restricted_subgraph(&[]).unwrap();
        assert_eq!(e.vertex_count(), 0);
        assert!(tri.restricted_subgraph(&[(0, 3)]).is_err());
    }

    #[test]
    fn restricted_subgraph_never_isolated() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for _ in 0..100 {
            let g = random_graph(&mut rng, 7);
            let edges = g.edges().to_vec();
            if edges.is_empty() {
                continue;
            }
            let k = rng.gen_range(0..=edges.len());
            let a: Vec<_> = edges.choose_multiple(&mut rng, k).copied().collect();
            let r = g.restricted_subgraph(&a).unwrap();
            assert!(!r.has_isolated_vertices() || r.vertex_count() == 0);
            assert_eq!(r.edge_count(), k);
        }
    }

    #[test]
    fn induced_subgraph_basics() {
        let k4 = names::k4();
        let tri = k4.induced_subgraph(&[0, 2, 3]).unwrap();
        assert_eq!(canonicalize(&tri), canonicalize(&names::triangle()));
        assert_eq!(k4.induced_subgraph(&[]).unwrap().vertex_count(), 0);
        assert!(k4.induced_subgraph(&[4]).is_err());
    }

    #[test]
    fn full_subset_recovers_graph() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..100 {
            let g = random_graph(&mut rng, 7);
            let all: Vec<usize> = (0..g.vertex_count()).collect();
            assert_eq!(
                canonicalize(&g.induced_subgraph(&all).unwrap()),
                canonicalize(&g)
            );
            if !g.has_isolated_vertices() {
                let r = g.restricted_subgraph(&g.edges().to_vec()).unwrap();
                assert_eq!(canonicalize(&r), canonicalize(&g));
            }
        }
    }

    #[test]
    fn disjoint_union_basics() {
        let ee = names::edge().disjoint_union(&names::edge());
        assert_eq!(ee.vertex_count(), 4);
        assert_eq!(ee.edges(), &[(0, 1), (2, 3)]);
        let g = names::paw();
        assert_eq!(
            canonicalize(&Graph::empty().disjoint_union(&g)),
            canonicalize(&g)
        );
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..100 {
            let a = random_graph(&mut rng, 5);
            let b = random_graph(&mut rng, 5);
            assert_eq!(
                canonicalize(&a.disjoint_union(&b)),
                canonicalize(&b.disjoint_union(&a))
            );
        }
    }

    #[test]
    fn components_roundtrip() {
        let g = names::cherry().disjoint_union(&names::edge());
        let comps = g.connected_components();
        assert_eq!(comps.len(), 2);
        assert!(Graph::empty().connected_components().is_empty());
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..100 {
            let g = random_graph(&mut rng, 7);
            let comps = g.connected_components();
            let mut rebuilt = Graph::empty();
            for c in &comps {
                rebuilt = rebuilt.disjoint_union(c);
            }
            assert_eq!(canonicalize(&rebuilt), canonicalize(&g));
        }
    }

    #[test]
    fn component_multiset_counts() {
        let g = names::edge()
            .disjoint_union(&names::edge())
            .disjoint_union(&names::edge());
        let ms = canonicalize(&g).component_multiset();
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].1, 3);
    }

    #[test]
    fn graph_validation() {
        assert!(Graph::new(2, &[(0, 0)]).is_err());
        assert!(Graph::new(2, &[(0, 2)]).is_err());
        assert!(Graph::new(2, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(40, &[]).is_err());
    }
}
