//! The six coproducts, the overlap part, and reduced coproducts.
//!
//! Splitting semantics per kind, writing `g|_A` for restricted and `g_U` for
//! induced subgraphs:
//!
//! * `DisjointUnion`: sum over splits of the component multiset, all
//!   coefficients 1.
//! * `DividedPowers`: the same splits weighted by binomial coefficients of
//!   the component multiplicities (equivalently, splits of component
//!   instances).
//! * `EdgeShuffle`: Σ over A ⊆ E of `g|_A ⊗ g|_{E∖A}`.
//! * `EdgeQuasiShuffle`: Σ over pairs A ∪ B = E of `g|_A ⊗ g|_B`.
//! * `VertexShuffle` / `VertexQuasiShuffle`: the induced-subgraph analogues
//!   over vertex subsets.
//! * `Overlap`: the A ∩ B ≠ ∅ part of the quasi-shuffle sum, so that
//!   quasi-shuffle = shuffle + overlap.
//!
//! The edge-restricted kinds require input without isolated vertices (an
//! isolated vertex would vanish from every term, breaking counitality).

use num::One;

use crate::error::{Error, Result};
use crate::graph::{canonicalize, CanonicalGraph, Graph};
use crate::linalg::{rat_u64, GraphSum, Rat, TensorSum};
use crate::par;

/// 2^k subset sweeps are allowed up to this many edges/vertices.
pub const SUBSET_CAP: usize = 16;
/// 3^k covering-pair sweeps are allowed up to this many edges/vertices.
pub const COVER_CAP: usize = 12;
/// Vertex subset sweeps cap.
pub const VERTEX_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoproductKind {
    DisjointUnion,
    DividedPowers,
    EdgeShuffle,
    EdgeQuasiShuffle,
    VertexShuffle,
    VertexQuasiShuffle,
    Overlap,
}

impl CoproductKind {
    pub fn requires_no_isolated(self) -> bool {
        matches!(
            self,
            CoproductKind::EdgeShuffle | CoproductKind::EdgeQuasiShuffle | CoproductKind::Overlap
        )
    }

    pub fn symbol(self) -> &'static str {
        match self {
            CoproductKind::DisjointUnion => "co-disjoint-union",
            CoproductKind::DividedPowers => "divided-powers",
            CoproductKind::EdgeShuffle => "edge co-shuffle",
            CoproductKind::EdgeQuasiShuffle => "edge co-quasi-shuffle",
            CoproductKind::VertexShuffle => "vertex co-shuffle",
            CoproductKind::VertexQuasiShuffle => "vertex co-quasi-shuffle",
            CoproductKind::Overlap => "overlap",
        }
    }
}

fn check_domain(kind: CoproductKind, g: &Graph) -> Result<()> {
    if kind.requires_no_isolated() && g.has_isolated_vertices() {
        return Err(Error::domain(format!(
            "{} is only defined on graphs without isolated vertices",
            kind.symbol()
        )));
    }
    match kind {
        CoproductKind::EdgeShuffle if g.edge_count() > SUBSET_CAP => Err(Error::resource(
            format!("edge subset sweep over {} edges exceeds cap {}", g.edge_count(), SUBSET_CAP),
        )),
        CoproductKind::EdgeQuasiShuffle | CoproductKind::Overlap
            if g.edge_count() > COVER_CAP =>
        {
            Err(Error::resource(format!(
                "edge covering-pair sweep over {} edges exceeds cap {}",
                g.edge_count(),
                COVER_CAP
            )))
        }
        CoproductKind::VertexShuffle if g.vertex_count() > VERTEX_CAP => {
            Err(Error::resource(format!(
                "vertex subset sweep over {} vertices exceeds cap {}",
                g.vertex_count(),
                VERTEX_CAP
            )))
        }
        CoproductKind::VertexQuasiShuffle if g.vertex_count() > COVER_CAP => {
            Err(Error::resource(format!(
                "vertex covering-pair sweep over {} vertices exceeds cap {}",
                g.vertex_count(),
                COVER_CAP
            )))
        }
        _ => Ok(()),
    }
}

pub fn coproduct(kind: CoproductKind, g: &Graph) -> Result<TensorSum> {
    check_domain(kind, g)?;
    Ok(match kind {
        CoproductKind::DisjointUnion => component_splits(g, false),
        CoproductKind::DividedPowers => component_splits(g, true),
        CoproductKind::EdgeShuffle => edge_shuffle(g),
        CoproductKind::EdgeQuasiShuffle => edge_covers(g, false),
        CoproductKind::Overlap => edge_covers(g, true),
        CoproductKind::VertexShuffle => vertex_shuffle(g),
        CoproductKind::VertexQuasiShuffle => vertex_covers(g),
    })
}

/// Linear extension of the coproduct to sums.
pub fn coproduct_sum(kind: CoproductKind, x: &GraphSum) -> Result<TensorSum> {
    let mut out = TensorSum::zero();
    for (g, c) in x.terms() {
        let t = coproduct(kind, g.graph())?;
        for ((l, r), d) in t.terms() {
            out.add_term(l.clone(), r.clone(), c * d);
        }
    }
    Ok(out)
}

/// Δ(g) − g⊗e − e⊗g. Zero exactly when g is primitive. The empty graph is
/// not in the augmentation ideal; its reduced coproduct is defined as zero.
pub fn reduced_coproduct(kind: CoproductKind, g: &Graph) -> Result<TensorSum> {
    if g.vertex_count() == 0 {
        return Ok(TensorSum::zero());
    }
    let mut t = coproduct(kind, g)?;
    let cg = canonicalize(g);
    let e = canonicalize(&Graph::empty());
    t.add_term(cg.clone(), e.clone(), -Rat::one());
    t.add_term(e, cg, -Rat::one());
    Ok(t)
}

fn component_splits(g: &Graph, binomial: bool) -> TensorSum {
    let comps = canonicalize(g).component_multiset();
    let mut out = TensorSum::zero();
    let mut pick = vec![0usize; comps.len()];
    loop {
        let mut left = Graph::empty();
        let mut right = Graph::empty();
        let mut coeff = Rat::one();
        for (i, (c, q)) in comps.iter().enumerate() {
            for _ in 0..pick[i] {
                left = left.disjoint_union(c.graph());
            }
            for _ in 0..(q - pick[i]) {
                right = right.disjoint_union(c.graph());
            }
            if binomial {
                coeff *= rat_u64(binom(*q, pick[i]));
            }
        }
        out.add_term(canonicalize(&left), canonicalize(&right), coeff);
        // Odometer over 0..=q_i.
        let mut i = 0;
        loop {
            if i == comps.len() {
                return out;
            }
            pick[i] += 1;
            if pick[i] <= comps[i].1 {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
    }
}

fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut r: u64 = 1;
    for i in 0..k.min(n - k) {
        r = r * (n - i) as u64 / (i + 1) as u64;
    }
    r
}

fn edges_of_mask(g: &Graph, mask: u64) -> Vec<(usize, usize)> {
    g.edges()
        .iter()
        .enumerate()
        .filter(|(i, _)| (mask >> i) & 1 == 1)
        .map(|(_, &e)| e)
        .collect()
}

fn restricted_canonical(g: &Graph, mask: u64) -> CanonicalGraph {
    canonicalize(
        &g.restricted_subgraph(&edges_of_mask(g, mask))
            .expect("mask edges come from g"),
    )
}

fn edge_shuffle(g: &Graph) -> TensorSum {
    let m = g.edge_count();
    let full: u64 = if m == 0 { 0 } else { (1 << m) - 1 };
    let pairs = par::map_range(1usize << m, |a| {
        let a = a as u64;
        (restricted_canonical(g, a), restricted_canonical(g, full & !a))
    });
    let mut out = TensorSum::zero();
    for (l, r) in pairs {
        out.add_term(l, r, Rat::one());
    }
    out
}

/// Pairs (A, B) with A ∪ B = E; `overlap_only` keeps those with A ∩ B ≠ ∅.
fn edge_covers(g: &Graph, overlap_only: bool) -> TensorSum {
    let m = g.edge_count();
    let full: u64 = if m == 0 { 0 } else { (1 << m) - 1 };
    let per_a: Vec<Vec<(CanonicalGraph, CanonicalGraph)>> =
        par::map_range(1usize << m, |a| {
            let a = a as u64;
            let left = restricted_canonical(g, a);
            let rest = full & !a;
            let mut out = Vec::new();
            // B = rest ∪ C for every C ⊆ A.
            let mut c = a;
            loop {
                if !overlap_only || c != 0 {
                    out.push((left.clone(), restricted_canonical(g, rest | c)));
                }
                if c == 0 {
                    break;
                }
                c = (c - 1) & a;
            }
            out
        });
    let mut out = TensorSum::zero();
    for chunk in per_a {
        for (l, r) in chunk {
            out.add_term(l, r, Rat::one());
        }
    }
    out
}

fn induced_canonical(g: &Graph, mask: u64) -> CanonicalGraph {
    canonicalize(&g.induced_subgraph_mask(mask))
}

fn vertex_shuffle(g: &Graph) -> TensorSum {
    let n = g.vertex_count();
    let full: u64 = if n == 0 { 0 } else { (1 << n) - 1 };
    let pairs = par::map_range(1usize << n, |u| {
        let u = u as u64;
        (induced_canonical(g, u), induced_canonical(g, full & !u))
    });
    let mut out = TensorSum::zero();
    for (l, r) in pairs {
        out.add_term(l, r, Rat::one());
    }
    out
}

fn vertex_covers(g: &Graph) -> TensorSum {
    let n = g.vertex_count();
    let full: u64 = if n == 0 { 0 } else { (1 << n) - 1 };
    let per_i: Vec<Vec<(CanonicalGraph, CanonicalGraph)>> =
        par::map_range(1usize << n, |i| {
            let i = i as u64;
            let left = induced_canonical(g, i);
            let rest = full & !i;
            let mut out = Vec::new();
            let mut c = i;
            loop {
                out.push((left.clone(), induced_canonical(g, rest | c)));
                if c == 0 {
                    break;
                }
                c = (c - 1) & i;
            }
            out
        });
    let mut out = TensorSum::zero();
    for chunk in per_i {
        for (l, r) in chunk {
            out.add_term(l, r, Rat::one());
        }
    }
    out
}

/// Three-fold tensors, used for coassociativity checks.
pub type TripleSum = std::collections::BTreeMap<(CanonicalGraph, CanonicalGraph, CanonicalGraph), Rat>;

fn triple_add(map: &mut TripleSum, key: (CanonicalGraph, CanonicalGraph, CanonicalGraph), c: Rat) {
    use num::Zero;
    if c.is_zero() {
        return;
    }
    let entry = map.entry(key.clone()).or_insert_with(Rat::zero);
    *entry += c;
    if entry.is_zero() {
        map.remove(&key);
    }
}

/// (Δ ⊗ id)Δ(g) and (id ⊗ Δ)Δ(g).
pub fn iterated_coproducts(kind: CoproductKind, g: &Graph) -> Result<(TripleSum, TripleSum)> {
    let once = coproduct(kind, g)?;
    let mut left = TripleSum::new();
    let mut right = TripleSum::new();
    for ((a, b), c) in once.terms() {
        for ((a1, a2), d) in coproduct(kind, a.graph())?.terms() {
            triple_add(&mut left, (a1.clone(), a2.clone(), b.clone()), c * d);
        }
        for ((b1, b2), d) in coproduct(kind, b.graph())?.terms() {
            triple_add(&mut right, (a.clone(), b1.clone(), b2.clone()), c * d);
        }
    }
    Ok((left, right))
}

pub fn coassociativity_holds(kind: CoproductKind, g: &Graph) -> Result<bool> {
    let (l, r) = iterated_coproducts(kind, g)?;
    Ok(l == r)
}

pub fn cocommutativity_holds(kind: CoproductKind, g: &Graph) -> Result<bool> {
    let t = coproduct(kind, g)?;
    Ok(t == t.flip())
}

/// (ε ⊗ id)Δ(g) = g = (id ⊗ ε)Δ(g).
pub fn counit_law_holds(kind: CoproductKind, g: &Graph) -> Result<bool> {
    let t = coproduct(kind, g)?;
    let e = canonicalize(&Graph::empty());
    let mut left_leg = GraphSum::zero();
    let mut right_leg = GraphSum::zero();
    for ((a, b), c) in t.terms() {
        if a == &e {
            left_leg.add_term(b.clone(), c.clone());
        }
        if b == &e {
            right_leg.add_term(a.clone(), c.clone());
        }
    }
    let id = GraphSum::from_graph(g);
    Ok(left_leg == id && right_leg == id)
}
