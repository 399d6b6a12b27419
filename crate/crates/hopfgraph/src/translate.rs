//! Translations between the counting bases.
//!
//! Each map Φ rewrites one counting mode as a combination of another: for
//! every host Λ,
//!
//! * `EiToVi`: c_ei(τ, Λ) = Σ_σ Φ(τ)_σ · c_vi(σ, Λ), with σ ranging over
//!   edge-supersets of τ on the same vertex set and
//!   Φ(τ)_σ = |MonoAndEpi(τ, σ)| / |Aut τ|.
//! * `HomToEi`: hom(τ, Λ) = Σ_σ |RegEpi(τ, σ)| · c_ei(σ, Λ), with σ ranging
//!   over the quotients of τ by partitions into independent sets.
//! * `HomToVi`: the composition of the two.
//!
//! All three maps are triangular with invertible diagonal, so they invert by
//! a memoized recursion; the inverses express the finer counts in terms of
//! the coarser ones.

use std::collections::{BTreeSet, HashMap};
use std::sync::Mutex;

use num::Zero;
use once_cell::sync::Lazy;

use crate::counting::{count, CountingMode};
use crate::error::{Error, Result};
use crate::graph::{canonicalize, CanonicalGraph, Graph};
use crate::linalg::{rat_u64, GraphSum, Rat};
use crate::morphisms::{count_morphisms, MorphismClass};
use crate::universe::{enumerate_graphs, BoundKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TranslationKind {
    /// Edge-injective counts in terms of vertex-injective counts.
    EiToVi,
    /// Homomorphism counts in terms of edge-injective counts.
    HomToEi,
    /// Homomorphism counts in terms of vertex-injective counts.
    HomToVi,
}

impl TranslationKind {
    pub fn source_mode(self) -> CountingMode {
        match self {
            TranslationKind::EiToVi => CountingMode::EdgeInjective,
            TranslationKind::HomToEi | TranslationKind::HomToVi => CountingMode::Hom,
        }
    }

    pub fn target_mode(self) -> CountingMode {
        match self {
            TranslationKind::EiToVi | TranslationKind::HomToVi => CountingMode::VertexInjective,
            TranslationKind::HomToEi => CountingMode::EdgeInjective,
        }
    }
}

fn check_pattern(tau: &Graph) -> Result<()> {
    if tau.has_isolated_vertices() {
        return Err(Error::domain(
            "translations are defined for patterns without isolated vertices".to_string(),
        ));
    }
    Ok(())
}

/// Missing-pair budget below which edge supersets are enumerated directly
/// instead of scanning every class on the same vertex count.
const SUPERSET_SWEEP_CAP: usize = 16;

/// Distinct isomorphism classes of supergraphs of τ on V(τ).
fn edge_superset_classes(tau: &Graph) -> Result<Vec<CanonicalGraph>> {
    let n = tau.vertex_count();
    let mut missing: Vec<(usize, usize)> = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if !tau.has_edge(u, v) {
                missing.push((u, v));
            }
        }
    }
    if missing.len() <= SUPERSET_SWEEP_CAP {
        let mut classes = BTreeSet::new();
        for mask in 0u64..(1 << missing.len()) {
            let mut edges = tau.edges().to_vec();
            for (i, &p) in missing.iter().enumerate() {
                if (mask >> i) & 1 == 1 {
                    edges.push(p);
                }
            }
            classes.insert(canonicalize(&Graph::new(n, &edges)?));
        }
        Ok(classes.into_iter().collect())
    } else {
        // Dense vertex sets: scan every class on exactly n vertices instead.
        let u = enumerate_graphs(BoundKind::MaxVertices, n, false)?;
        Ok(u.members()
            .iter()
            .filter(|c| c.vertex_count() == n && c.edge_count() >= tau.edge_count())
            .cloned()
            .collect())
    }
}

fn ei_to_vi(tau: &Graph) -> Result<GraphSum> {
    let aut = rat_u64(tau.automorphism_count());
    let mut out = GraphSum::zero();
    for sigma in edge_superset_classes(tau)? {
        let m = count_morphisms(MorphismClass::MonoAndEpi, tau, sigma.graph());
        if m > 0 {
            out.add_term(sigma, rat_u64(m) / aut.clone());
        }
    }
    Ok(out)
}

/// Visits every partition of 0..n as block index assignments.
fn for_each_partition(n: usize, f: &mut impl FnMut(&[usize], usize)) {
    fn rec(n: usize, i: usize, blocks: &mut Vec<usize>, used: usize, f: &mut impl FnMut(&[usize], usize)) {
        if i == n {
            f(blocks, used);
            return;
        }
        for b in 0..=used {
            blocks.push(b);
            rec(n, i + 1, blocks, used.max(b + 1), f);
            blocks.pop();
        }
    }
    rec(n, 0, &mut Vec::new(), 0, f);
}

/// Quotients of τ by partitions of V(τ) into independent sets.
fn independent_quotient_classes(tau: &Graph) -> Vec<CanonicalGraph> {
    let n = tau.vertex_count();
    let mut classes = BTreeSet::new();
    for_each_partition(n, &mut |blocks, count| {
        let mut edges = BTreeSet::new();
        for &(u, v) in tau.edges() {
            if blocks[u] == blocks[v] {
                // An edge inside a block: the partition is not independent.
                return;
            }
            let (a, b) = (blocks[u].min(blocks[v]), blocks[u].max(blocks[v]));
            edges.insert((a, b));
        }
        let edges: Vec<(usize, usize)> = edges.into_iter().collect();
        classes.insert(canonicalize(&Graph::new(count, &edges).unwrap()));
    });
    classes.into_iter().collect()
}

fn hom_to_ei(tau: &Graph) -> Result<GraphSum> {
    let mut out = GraphSum::zero();
    for sigma in independent_quotient_classes(tau) {
        let m = count_morphisms(MorphismClass::RegEpi, tau, sigma.graph());
        if m > 0 {
            out.add_term(sigma, rat_u64(m));
        }
    }
    Ok(out)
}

/// Applies a basis-level map linearly to a sum.
fn apply_linear(
    x: &GraphSum,
    f: &mut impl FnMut(&Graph) -> Result<GraphSum>,
) -> Result<GraphSum> {
    let mut out = GraphSum::zero();
    for (g, c) in x.terms() {
        let image = f(g.graph())?;
        out = out.add(&image.scale(c));
    }
    Ok(out)
}

pub fn translate(kind: TranslationKind, tau: &Graph) -> Result<GraphSum> {
    check_pattern(tau)?;
    match kind {
        TranslationKind::EiToVi => ei_to_vi(tau),
        TranslationKind::HomToEi => hom_to_ei(tau),
        TranslationKind::HomToVi => {
            let first = hom_to_ei(tau)?;
            apply_linear(&first, &mut ei_to_vi)
        }
    }
}

/// Linear extension of `translate`.
pub fn translate_sum(kind: TranslationKind, x: &GraphSum) -> Result<GraphSum> {
    apply_linear(x, &mut |g| translate(kind, g))
}

static INVERSE_CACHE: Lazy<Mutex<HashMap<(TranslationKind, String), GraphSum>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// The inverse map on a basis element, by triangular recursion: `EiToVi` is
/// unitriangular towards more edges, `HomToEi` has diagonal |Aut τ| and moves
/// towards fewer vertices.
pub fn translate_inverse(kind: TranslationKind, tau: &Graph) -> Result<GraphSum> {
    check_pattern(tau)?;
    if kind == TranslationKind::HomToVi {
        let first = translate_inverse(TranslationKind::EiToVi, tau)?;
        return apply_linear(&first, &mut |g| {
            translate_inverse(TranslationKind::HomToEi, g)
        });
    }
    let c = canonicalize(tau);
    let key = (kind, c.encoding().to_string());
    if let Some(hit) = INVERSE_CACHE.lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let forward = translate(kind, tau)?;
    let diagonal = forward.coefficient(&c);
    if diagonal.is_zero() {
        return Err(Error::internal(
            "translation map lost its diagonal entry".to_string(),
        ));
    }
    let mut rest = forward;
    rest.add_term(c.clone(), -diagonal.clone());
    let mut acc = GraphSum::basis(c);
    for (sigma, coeff) in rest.terms() {
        let inv = translate_inverse(kind, sigma.graph())?;
        acc = acc.sub(&inv.scale(coeff));
    }
    let result = acc.scale(&(rat_u64(1) / diagonal));
    INVERSE_CACHE.lock().unwrap().insert(key, result.clone());
    Ok(result)
}

pub fn translate_inverse_sum(kind: TranslationKind, x: &GraphSum) -> Result<GraphSum> {
    apply_linear(x, &mut |g| translate_inverse(kind, g))
}

/// Verifies the defining identity of the translation on a concrete host:
/// the source count of τ equals the translated combination of target counts.
pub fn check_translation_identity(
    kind: TranslationKind,
    tau: &Graph,
    lambda: &Graph,
) -> Result<bool> {
    let lhs = count(kind.source_mode(), tau, lambda)?;
    let image = translate(kind, tau)?;
    let mut rhs = Rat::zero();
    for (sigma, coeff) in image.terms() {
        rhs += coeff * count(kind.target_mode(), sigma.graph(), lambda)?;
    }
    Ok(lhs == rhs)
}
