//! The six products, each dual to the like-named coproduct: the coefficient
//! of γ in `g · h` equals the coefficient of `g ⊗ h` in Δ(γ).
//!
//! Support generation works by gluing:
//!
//! * `DisjointUnion` / `DividedPowers`: the only class in the support is
//!   `g ⊔ h`; the divided-powers coefficient is
//!   `|Aut(g ⊔ h)| / (|Aut g|·|Aut h|)`.
//! * edge kinds: quotients of `g ⊔ h` under partial injective vertex
//!   identifications of one operand into the other (coinciding edges merge).
//! * vertex kinds: overlay an induced-subgraph isomorphism between the
//!   operands (only the trivial empty one for `VertexShuffle`) and add an
//!   arbitrary set of edges between the two exclusive parts.
//!
//! Coefficients are then computed per candidate by a slice sweep — subsets A
//! of E(γ) (or V(γ)) of size |E(g)| with γ|_A ≅ g, counting completions of
//! the complement to a copy of h — and zero-coefficient candidates drop out.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Mutex;

use num::Zero;
use once_cell::sync::Lazy;

use crate::coproducts::{coproduct, CoproductKind, SUBSET_CAP};
use crate::error::{Error, Result};
use crate::graph::{canonicalize, CanonicalGraph, Graph};
use crate::linalg::{rat_u64, GraphSum, Rat};
use crate::par;

/// Cross-edge sweeps between exclusive parts allow at most this many bits.
pub const CROSS_EDGE_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductKind {
    DisjointUnion,
    DividedPowers,
    EdgeShuffle,
    EdgeQuasiShuffle,
    VertexShuffle,
    VertexQuasiShuffle,
}

impl ProductKind {
    /// The coproduct whose structure constants this product transposes.
    pub fn dual_coproduct(self) -> CoproductKind {
        match self {
            ProductKind::DisjointUnion => CoproductKind::DisjointUnion,
            ProductKind::DividedPowers => CoproductKind::DividedPowers,
            ProductKind::EdgeShuffle => CoproductKind::EdgeShuffle,
            ProductKind::EdgeQuasiShuffle => CoproductKind::EdgeQuasiShuffle,
            ProductKind::VertexShuffle => CoproductKind::VertexShuffle,
            ProductKind::VertexQuasiShuffle => CoproductKind::VertexQuasiShuffle,
        }
    }

    pub fn requires_no_isolated(self) -> bool {
        matches!(self, ProductKind::EdgeShuffle | ProductKind::EdgeQuasiShuffle)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            ProductKind::DisjointUnion => "disjoint union",
            ProductKind::DividedPowers => "divided powers",
            ProductKind::EdgeShuffle => "edge shuffle",
            ProductKind::EdgeQuasiShuffle => "edge quasi-shuffle",
            ProductKind::VertexShuffle => "vertex shuffle",
            ProductKind::VertexQuasiShuffle => "vertex quasi-shuffle",
        }
    }
}

/// Visits every `k`-subset of `n` bit positions (Gosper's hack).
fn for_each_subset_of_size(n: usize, k: usize, mut f: impl FnMut(u64)) {
    if k > n {
        return;
    }
    if k == 0 {
        f(0);
        return;
    }
    let limit: u64 = 1 << n;
    let mut m: u64 = (1 << k) - 1;
    while m < limit {
        f(m);
        let c = m & m.wrapping_neg();
        let r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
}

/// The coefficient of `g ⊗ h` in the dual coproduct of `gamma`.
pub fn structure_coefficient(
    kind: ProductKind,
    g: &CanonicalGraph,
    h: &CanonicalGraph,
    gamma: &CanonicalGraph,
) -> Result<Rat> {
    match kind {
        ProductKind::DisjointUnion | ProductKind::DividedPowers => {
            Ok(coproduct(kind.dual_coproduct(), gamma.graph())?.coefficient(g, h))
        }
        ProductKind::EdgeShuffle => Ok(rat_u64(edge_slice_count(g, h, gamma.graph(), false))),
        ProductKind::EdgeQuasiShuffle => Ok(rat_u64(edge_slice_count(g, h, gamma.graph(), true))),
        ProductKind::VertexShuffle => Ok(rat_u64(vertex_slice_count(g, h, gamma.graph(), false))),
        ProductKind::VertexQuasiShuffle => {
            Ok(rat_u64(vertex_slice_count(g, h, gamma.graph(), true)))
        }
    }
}

/// #{A ⊆ E(γ): γ|_A ≅ g and γ|_B ≅ h}, where B = E∖A for the shuffle and
/// B ranges over (E∖A) ∪ C, C ⊆ A for the quasi-shuffle.
fn edge_slice_count(g: &CanonicalGraph, h: &CanonicalGraph, gamma: &Graph, quasi: bool) -> u64 {
    let m = gamma.edge_count();
    let eg = g.edge_count();
    let eh = h.edge_count();
    if quasi {
        if m > eg + eh || m < eg.max(eh) {
            return 0;
        }
    } else if m != eg + eh {
        return 0;
    }
    let full: u64 = if m == 0 { 0 } else { (1 << m) - 1 };
    let restricted = |mask: u64| -> CanonicalGraph {
        let edges: Vec<(usize, usize)> = gamma
            .edges()
            .iter()
            .enumerate()
            .filter(|(i, _)| (mask >> i) & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        canonicalize(&gamma.restricted_subgraph(&edges).expect("edges from gamma"))
    };
    let mut count = 0u64;
    for_each_subset_of_size(m, eg, |a| {
        if restricted(a) != *g {
            return;
        }
        let rest = full & !a;
        if !quasi {
            if restricted(rest) == *h {
                count += 1;
            }
            return;
        }
        // |B| = |E∖A| + |C| must equal eh.
        let c_size = eh - (m - eg);
        let mut c = a;
        loop {
            if (c.count_ones() as usize) == c_size && restricted(rest | c) == *h {
                count += 1;
            }
            if c == 0 {
                break;
            }
            c = (c - 1) & a;
        }
    });
    count
}

/// The vertex analogue with induced subgraphs.
fn vertex_slice_count(g: &CanonicalGraph, h: &CanonicalGraph, gamma: &Graph, quasi: bool) -> u64 {
    let n = gamma.vertex_count();
    let ng = g.vertex_count();
    let nh = h.vertex_count();
    if quasi {
        if n > ng + nh || n < ng.max(nh) {
            return 0;
        }
    } else if n != ng + nh {
        return 0;
    }
    let full: u64 = if n == 0 { 0 } else { (1 << n) - 1 };
    let induced = |mask: u64| canonicalize(&gamma.induced_subgraph_mask(mask));
    let mut count = 0u64;
    for_each_subset_of_size(n, ng, |u| {
        if induced(u) != *g {
            return;
        }
        let rest = full & !u;
        if !quasi {
            if induced(rest) == *h {
                count += 1;
            }
            return;
        }
        let c_size = nh - (n - ng);
        let mut c = u;
        loop {
            if (c.count_ones() as usize) == c_size && induced(rest | c) == *h {
                count += 1;
            }
            if c == 0 {
                break;
            }
            c = (c - 1) & u;
        }
    });
    count
}

fn injective_maps(k: usize, codomain: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(
        k: usize,
        codomain: usize,
        chosen: &mut Vec<usize>,
        used: &mut Vec<bool>,
        f: &mut impl FnMut(&[usize]),
    ) {
        if chosen.len() == k {
            f(chosen);
            return;
        }
        for t in 0..codomain {
            if !used[t] {
                used[t] = true;
                chosen.push(t);
                rec(k, codomain, chosen, used, f);
                chosen.pop();
                used[t] = false;
            }
        }
    }
    rec(k, codomain, &mut Vec::new(), &mut vec![false; codomain], f);
}

/// Quotients of g ⊔ h under partial injective vertex identifications, with
/// coinciding edges merged. A superset of the support of both edge products.
fn edge_gluing_candidates(g: &Graph, h: &Graph) -> BTreeSet<CanonicalGraph> {
    let ng = g.vertex_count();
    let nh = h.vertex_count();
    let mut out = BTreeSet::new();
    for k in 0..=ng.min(nh) {
        for_each_subset_of_size(nh, k, |s_mask| {
            let s: Vec<usize> = (0..nh).filter(|v| (s_mask >> v) & 1 == 1).collect();
            injective_maps(k, ng, &mut |targets| {
                // Relabel: identified h-vertices land in V(g), the rest after.
                let mut label = vec![usize::MAX; nh];
                for (i, &v) in s.iter().enumerate() {
                    label[v] = targets[i];
                }
                let mut next = ng;
                for v in 0..nh {
                    if label[v] == usize::MAX {
                        label[v] = next;
                        next += 1;
                    }
                }
                let mut edges: BTreeSet<(usize, usize)> = g.edges().iter().copied().collect();
                for &(u, v) in h.edges() {
                    let (a, b) = (label[u].min(label[v]), label[u].max(label[v]));
                    edges.insert((a, b));
                }
                let edges: Vec<(usize, usize)> = edges.into_iter().collect();
                out.insert(canonicalize(&Graph::new(next, &edges).unwrap()));
            });
        });
    }
    out
}

/// Overlays of g and h along an induced-subgraph isomorphism (only the empty
/// one unless `identify`), with every choice of edges between the exclusive
/// parts. A superset of the support of the vertex products.
fn vertex_gluing_candidates(
    g: &Graph,
    h: &Graph,
    identify: bool,
) -> Result<BTreeSet<CanonicalGraph>> {
    let ng = g.vertex_count();
    let nh = h.vertex_count();
    if ng * nh > CROSS_EDGE_CAP {
        return Err(Error::resource(format!(
            "cross-edge sweep over {} pairs exceeds cap {CROSS_EDGE_CAP}",
            ng * nh
        )));
    }
    let max_k = if identify { ng.min(nh) } else { 0 };
    let mut out = BTreeSet::new();
    for k in 0..=max_k {
        for_each_subset_of_size(ng, k, |s_mask| {
            let s: Vec<usize> = (0..ng).filter(|v| (s_mask >> v) & 1 == 1).collect();
            injective_maps(k, nh, &mut |targets| {
                // The identification must be an induced isomorphism.
                for i in 0..k {
                    for j in (i + 1)..k {
                        let (a, b) = (s[i].min(s[j]), s[i].max(s[j]));
                        let (c, d) = (targets[i].min(targets[j]), targets[i].max(targets[j]));
                        if g.has_edge(a, b) != h.has_edge(c, d) {
                            return;
                        }
                    }
                }
                // Relabel: V(g) keeps 0..ng, exclusive h-vertices follow.
                let mut label = vec![usize::MAX; nh];
                for (i, &v) in s.iter().enumerate() {
                    label[targets[i]] = v;
                }
                let mut next = ng;
                let mut h_exclusive = Vec::new();
                for v in 0..nh {
                    if label[v] == usize::MAX {
                        label[v] = next;
                        h_exclusive.push(next);
                        next += 1;
                    }
                }
                let mut base: BTreeSet<(usize, usize)> = g.edges().iter().copied().collect();
                for &(u, v) in h.edges() {
                    let (a, b) = (label[u].min(label[v]), label[u].max(label[v]));
                    base.insert((a, b));
                }
                let g_exclusive: Vec<usize> =
                    (0..ng).filter(|v| (s_mask >> v) & 1 == 0).collect();
                let pairs: Vec<(usize, usize)> = g_exclusive
                    .iter()
                    .flat_map(|&a| h_exclusive.iter().map(move |&b| (a, b)))
                    .collect();
                for cross in 0u64..(1 << pairs.len()) {
                    let mut edges: BTreeSet<(usize, usize)> = base.clone();
                    for (i, &p) in pairs.iter().enumerate() {
                        if (cross >> i) & 1 == 1 {
                            edges.insert(p);
                        }
                    }
                    let edges: Vec<(usize, usize)> = edges.into_iter().collect();
                    out.insert(canonicalize(&Graph::new(next, &edges).unwrap()));
                }
            });
        });
    }
    Ok(out)
}

fn check_domain(kind: ProductKind, g: &Graph, h: &Graph) -> Result<()> {
    if kind.requires_no_isolated() && (g.has_isolated_vertices() || h.has_isolated_vertices()) {
        return Err(Error::domain(format!(
            "the {} product is only defined on graphs without isolated vertices",
            kind.symbol()
        )));
    }
    if kind == ProductKind::EdgeShuffle || kind == ProductKind::EdgeQuasiShuffle {
        let total = g.edge_count() + h.edge_count();
        if total > SUBSET_CAP {
            return Err(Error::resource(format!(
                "edge product over {total} total edges exceeds cap {SUBSET_CAP}"
            )));
        }
    }
    Ok(())
}

static PRODUCT_CACHE: Lazy<Mutex<HashMap<(ProductKind, String, String), GraphSum>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Empties the memoized product table (useful for benchmarking cold runs).
pub fn clear_product_cache() {
    PRODUCT_CACHE.lock().unwrap().clear();
}

pub fn product(kind: ProductKind, g: &Graph, h: &Graph) -> Result<GraphSum> {
    check_domain(kind, g, h)?;
    let cg = canonicalize(g);
    let ch = canonicalize(h);
    // Every product here is commutative; normalize the cache key.
    let (a, b) = if cg <= ch { (&cg, &ch) } else { (&ch, &cg) };
    let key = (kind, a.encoding().to_string(), b.encoding().to_string());
    if let Some(hit) = PRODUCT_CACHE.lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let result = compute_product(kind, a, b)?;
    PRODUCT_CACHE
        .lock()
        .unwrap()
        .insert(key, result.clone());
    Ok(result)
}

fn compute_product(kind: ProductKind, g: &CanonicalGraph, h: &CanonicalGraph) -> Result<GraphSum> {
    let union = g.graph().disjoint_union(h.graph());
    match kind {
        ProductKind::DisjointUnion => Ok(GraphSum::from_graph(&union)),
        ProductKind::DividedPowers => {
            let coeff = rat_u64(union.automorphism_count())
                / rat_u64(g.graph().automorphism_count() * h.graph().automorphism_count());
            Ok(GraphSum::basis(canonicalize(&union)).scale(&coeff))
        }
        ProductKind::EdgeShuffle | ProductKind::EdgeQuasiShuffle => {
            let candidates: Vec<CanonicalGraph> =
                edge_gluing_candidates(g.graph(), h.graph()).into_iter().collect();
            collect_terms(kind, g, h, candidates)
        }
        ProductKind::VertexShuffle | ProductKind::VertexQuasiShuffle => {
            let identify = kind == ProductKind::VertexQuasiShuffle;
            let candidates: Vec<CanonicalGraph> =
                vertex_gluing_candidates(g.graph(), h.graph(), identify)?
                    .into_iter()
                    .collect();
            collect_terms(kind, g, h, candidates)
        }
    }
}

fn collect_terms(
    kind: ProductKind,
    g: &CanonicalGraph,
    h: &CanonicalGraph,
    candidates: Vec<CanonicalGraph>,
) -> Result<GraphSum> {
    let coeffs: Vec<Result<(CanonicalGraph, Rat)>> = par::map_vec(candidates, |gamma| {
        let c = structure_coefficient(kind, g, h, &gamma)?;
        Ok((gamma, c))
    });
    let mut out = GraphSum::zero();
    for r in coeffs {
        let (gamma, c) = r?;
        out.add_term(gamma, c);
    }
    Ok(out)
}

/// Bilinear extension to sums.
pub fn product_sums(kind: ProductKind, x: &GraphSum, y: &GraphSum) -> Result<GraphSum> {
    let mut out = GraphSum::zero();
    for (g, a) in x.terms() {
        if a.is_zero() {
            continue;
        }
        for (h, b) in y.terms() {
            let p = product(kind, g.graph(), h.graph())?;
            for (gamma, c) in p.terms() {
                out.add_term(gamma.clone(), a * b * c);
            }
        }
    }
    Ok(out)
}

/// Convenience: the product of basis elements as a map keyed by class.
pub fn product_terms(
    kind: ProductKind,
    g: &Graph,
    h: &Graph,
) -> Result<BTreeMap<CanonicalGraph, Rat>> {
    Ok(product(kind, g, h)?
        .terms()
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect())
}

/// Checks `1 · g = g = g · 1` for the empty graph as unit.
pub fn unit_law_holds(kind: ProductKind, g: &Graph) -> Result<bool> {
    let e = Graph::empty();
    let id = GraphSum::from_graph(g);
    Ok(product(kind, &e, g)? == id && product(kind, g, &e)? == id)
}

/// Checks `(g · h) · k = g · (h · k)` via the bilinear extension.
pub fn associativity_holds(kind: ProductKind, g: &Graph, h: &Graph, k: &Graph) -> Result<bool> {
    let gh = product(kind, g, h)?;
    let hk = product(kind, h, k)?;
    let left = product_sums(kind, &gh, &GraphSum::from_graph(k))?;
    let right = product_sums(kind, &GraphSum::from_graph(g), &hk)?;
    Ok(left == right)
}
