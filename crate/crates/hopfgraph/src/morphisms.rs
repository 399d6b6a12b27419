//! Counting graph homomorphisms and their distinguished subclasses.
//!
//! A homomorphism maps vertices so that edges go to edges. The subclasses:
//! `Mono` is injective on vertices, `Epi` surjective on vertices, `RegEpi`
//! surjective on vertices and edges, `RegMono` an embedding onto an induced
//! subgraph, `MonoAndEpi` vertex-bijective, `Iso` an isomorphism.
//!
//! Injective classes are counted by backtracking with adjacency pruning.
//! The surjective classes are counted by inclusion-exclusion over the
//! permitted image (vertex subsets, and for `RegEpi` also edge subsets),
//! which reduces them to plain homomorphism counts into subgraphs of the
//! target; homomorphism counts factor over the components of the source and
//! are computed by backtracking along a breadth-first order, so every vertex
//! after the component root is constrained by an already-placed neighbor.

use num::{BigRational, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{rat_u64, Rat};
use crate::universe::{BoundKind, GraphUniverse};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MorphismClass {
    Hom,
    Mono,
    Epi,
    RegEpi,
    RegMono,
    Iso,
    MonoAndEpi,
}

/// Number of morphisms σ → τ in the given class.
pub fn count_morphisms(class: MorphismClass, sigma: &Graph, tau: &Graph) -> u64 {
    match class {
        MorphismClass::Hom => hom_count(sigma, tau),
        MorphismClass::Mono => injective_count(sigma, tau, false),
        MorphismClass::RegMono => injective_count(sigma, tau, true),
        MorphismClass::Iso => {
            if sigma.vertex_count() != tau.vertex_count()
                || sigma.edge_count() != tau.edge_count()
            {
                0
            } else {
                injective_count(sigma, tau, true)
            }
        }
        MorphismClass::MonoAndEpi => {
            if sigma.vertex_count() != tau.vertex_count() {
                0
            } else {
                injective_count(sigma, tau, false)
            }
        }
        MorphismClass::Epi => epi_count(sigma, tau),
        MorphismClass::RegEpi => regepi_count(sigma, tau),
    }
}

/// |Hom(σ, τ)|.
pub fn hom_count(sigma: &Graph, tau: &Graph) -> u64 {
    let host_mask = if tau.vertex_count() == 0 {
        0
    } else {
        (1u64 << tau.vertex_count()) - 1
    };
    hom_count_into(sigma, tau.vertex_count(), host_mask, &tau.adjacency())
}

/// Homomorphism count into a host restricted to the vertices of `vert_mask`
/// and the (symmetric) adjacency `adj`. Factors over components of σ.
fn hom_count_into(sigma: &Graph, host_n: usize, vert_mask: u64, adj: &[u64]) -> u64 {
    let mut total: u64 = 1;
    for comp in sigma.connected_components() {
        let c = hom_count_component(&comp, host_n, vert_mask, adj);
        if c == 0 {
            return 0;
        }
        total = total.checked_mul(c).expect("hom count overflow");
    }
    total
}

fn hom_count_component(comp: &Graph, host_n: usize, vert_mask: u64, adj: &[u64]) -> u64 {
    let n = comp.vertex_count();
    if n == 0 {
        return 1;
    }
    let cadj = comp.adjacency();
    // Breadth-first order from vertex 0; components are connected, so every
    // later vertex has an earlier neighbor.
    let mut order = vec![0usize];
    let mut seen = 1u64;
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for w in 0..n {
            if (cadj[v] >> w) & 1 == 1 && (seen >> w) & 1 == 0 {
                seen |= 1 << w;
                order.push(w);
            }
        }
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut image = vec![usize::MAX; n];
    fn rec(
        i: usize,
        order: &[usize],
        cadj: &[u64],
        image: &mut [usize],
        host_n: usize,
        vert_mask: u64,
        adj: &[u64],
    ) -> u64 {
        if i == order.len() {
            return 1;
        }
        let v = order[i];
        let mut count = 0;
        'cand: for t in 0..host_n {
            if (vert_mask >> t) & 1 == 0 {
                continue;
            }
            for &w in &order[..i] {
                if (cadj[v] >> w) & 1 == 1 && (adj[image[w]] >> t) & 1 == 0 {
                    continue 'cand;
                }
            }
            image[v] = t;
            count += rec(i + 1, order, cadj, image, host_n, vert_mask, adj);
        }
        image[order[i]] = usize::MAX;
        count
    }
    rec(0, &order, &cadj, &mut image, host_n, vert_mask, adj)
}

/// Injective homomorphisms; with `induced` also requires non-edges to map to
/// non-edges (an embedding as induced subgraph).
fn injective_count(sigma: &Graph, tau: &Graph, induced: bool) -> u64 {
    let ns = sigma.vertex_count();
    let nt = tau.vertex_count();
    if ns > nt || (!induced && sigma.edge_count() > tau.edge_count()) {
        return 0;
    }
    let sadj = sigma.adjacency();
    let tadj = tau.adjacency();
    let mut image = vec![usize::MAX; ns];
    fn rec(
        v: usize,
        ns: usize,
        nt: usize,
        sadj: &[u64],
        tadj: &[u64],
        image: &mut [usize],
        used: u64,
        induced: bool,
    ) -> u64 {
        if v == ns {
            return 1;
        }
        let mut count = 0;
        'cand: for t in 0..nt {
            if (used >> t) & 1 == 1 {
                continue;
            }
            for w in 0..v {
                let se = (sadj[v] >> w) & 1 == 1;
                let te = (tadj[t] >> image[w]) & 1 == 1;
                if (se && !te) || (induced && !se && te) {
                    continue 'cand;
                }
            }
            image[v] = t;
            count += rec(v + 1, ns, nt, sadj, tadj, image, used | (1 << t), induced);
        }
        image[v] = usize::MAX;
        count
    }
    rec(0, ns, nt, &sadj, &tadj, &mut image, 0, induced)
}

/// Vertex-surjective homomorphisms via inclusion-exclusion over the image.
fn epi_count(sigma: &Graph, tau: &Graph) -> u64 {
    let nt = tau.vertex_count();
    if sigma.vertex_count() < nt {
        return 0;
    }
    let adj = tau.adjacency();
    let mut total: i128 = 0;
    for s in 0u64..(1 << nt) {
        let dropped = nt - s.count_ones() as usize;
        let masked: Vec<u64> = adj.iter().map(|&row| row & s).collect();
        let homs = hom_count_into(sigma, nt, s, &masked) as i128;
        total += if dropped % 2 == 0 { homs } else { -homs };
    }
    debug_assert!(total >= 0);
    total as u64
}

/// Vertex- and edge-surjective homomorphisms. Inclusion-exclusion over both
/// the vertex and the edge image when that is affordable, otherwise plain
/// enumeration with a final surjectivity check.
fn regepi_count(sigma: &Graph, tau: &Graph) -> u64 {
    let nt = tau.vertex_count();
    let mt = tau.edge_count();
    if sigma.vertex_count() < nt || sigma.edge_count() < mt {
        return 0;
    }
    if nt + mt <= 24 {
        let edges = tau.edges();
        let mut total: i128 = 0;
        for f in 0u64..(1 << mt) {
            let mut adj = vec![0u64; nt];
            for (i, &(u, v)) in edges.iter().enumerate() {
                if (f >> i) & 1 == 1 {
                    adj[u] |= 1 << v;
                    adj[v] |= 1 << u;
                }
            }
            let edge_sign = (mt - f.count_ones() as usize) % 2;
            for s in 0u64..(1 << nt) {
                let dropped = nt - s.count_ones() as usize;
                let masked: Vec<u64> = adj.iter().map(|&row| row & s).collect();
                let homs = hom_count_into(sigma, nt, s, &masked) as i128;
                total += if (dropped + edge_sign) % 2 == 0 {
                    homs
                } else {
                    -homs
                };
            }
        }
        debug_assert!(total >= 0);
        total as u64
    } else {
        regepi_count_enumerate(sigma, tau)
    }
}

fn regepi_count_enumerate(sigma: &Graph, tau: &Graph) -> u64 {
    let ns = sigma.vertex_count();
    let nt = tau.vertex_count();
    let sadj = sigma.adjacency();
    let tadj = tau.adjacency();
    let edge_index: std::collections::BTreeMap<(usize, usize), usize> = tau
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();
    let full_edges = (1u64 << tau.edge_count()) - (if tau.edge_count() == 0 { 0 } else { 1 });
    let full_verts = if nt == 0 { 0 } else { (1u64 << nt) - 1 };
    let mut image = vec![usize::MAX; ns];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        v: usize,
        ns: usize,
        nt: usize,
        sadj: &[u64],
        tadj: &[u64],
        edge_index: &std::collections::BTreeMap<(usize, usize), usize>,
        image: &mut [usize],
        covered_v: u64,
        covered_e: u64,
        full_verts: u64,
        full_edges: u64,
    ) -> u64 {
        if v == ns {
            return u64::from(covered_v == full_verts && covered_e == full_edges);
        }
        // Even if every remaining vertex covers a new target, we cannot
        // finish when more targets than assignments remain.
        if (full_verts & !covered_v).count_ones() as usize > ns - v {
            return 0;
        }
        let mut count = 0;
        'cand: for t in 0..nt {
            let mut new_e = covered_e;
            for w in 0..v {
                if (sadj[v] >> w) & 1 == 1 {
                    if (tadj[t] >> image[w]) & 1 == 0 {
                        continue 'cand;
                    }
                    let key = (t.min(image[w]), t.max(image[w]));
                    new_e |= 1 << edge_index[&key];
                }
            }
            image[v] = t;
            count += rec(
                v + 1,
                ns,
                nt,
                sadj,
                tadj,
                edge_index,
                image,
                covered_v | (1 << t),
                new_e,
                full_verts,
                full_edges,
            );
        }
        image[v] = usize::MAX;
        count
    }
    rec(
        0,
        ns,
        nt,
        &sadj,
        &tadj,
        &edge_index,
        &mut image,
        0,
        0,
        full_verts,
        full_edges,
    )
}

/// One verified factorization identity: a morphism count on the left equals
/// a sum of count products over intermediate classes σ.
#[derive(Clone, Debug)]
pub struct FactorizationItem {
    pub name: &'static str,
    pub lhs: Rat,
    pub rhs: Rat,
}

impl FactorizationItem {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Clone, Debug)]
pub struct FactorizationReport {
    pub items: Vec<FactorizationItem>,
}

impl FactorizationReport {
    pub fn all_hold(&self) -> bool {
        self.items.iter().all(FactorizationItem::holds)
    }
}

/// Verifies the four ways a morphism count factors through an intermediate
/// graph σ, summed with weight 1/|Aut(σ)|:
///
///   (i)   |Mono(τ,Λ)|  = Σ |MonoAndEpi(τ,σ)| |RegMono(σ,Λ)| / |Aut σ|
///   (ii)  |Epi(τ,Λ)|   = Σ |RegEpi(τ,σ)|    |MonoAndEpi(σ,Λ)| / |Aut σ|
///   (iii) |Hom(τ,Λ)|   = Σ |Epi(τ,σ)|       |RegMono(σ,Λ)| / |Aut σ|
///   (iv)  |Hom(τ,Λ)|   = Σ |RegEpi(τ,σ)|    |Mono(σ,Λ)| / |Aut σ|
pub fn check_factorization_identities(
    tau: &Graph,
    lambda: &Graph,
    universe: &GraphUniverse,
) -> Result<FactorizationReport> {
    if universe.bound_kind != BoundKind::MaxVertices
        || universe.no_isolated
        || universe.bound < tau.vertex_count()
    {
        return Err(Error::domain(
            "factorization check needs a MaxVertices universe (isolated vertices included) \
             covering |V(τ)|"
                .to_string(),
        ));
    }
    let combos: [(&'static str, MorphismClass, MorphismClass, MorphismClass); 4] = [
        (
            "mono = monoepi * regmono",
            MorphismClass::Mono,
            MorphismClass::MonoAndEpi,
            MorphismClass::RegMono,
        ),
        (
            "epi = regepi * monoepi",
            MorphismClass::Epi,
            MorphismClass::RegEpi,
            MorphismClass::MonoAndEpi,
        ),
        (
            "hom = epi * regmono",
            MorphismClass::Hom,
            MorphismClass::Epi,
            MorphismClass::RegMono,
        ),
        (
            "hom = regepi * mono",
            MorphismClass::Hom,
            MorphismClass::RegEpi,
            MorphismClass::Mono,
        ),
    ];
    let mut items = Vec::new();
    for (name, lhs_class, first, second) in combos {
        let lhs = rat_u64(count_morphisms(lhs_class, tau, lambda));
        let mut rhs = BigRational::zero();
        for sigma in universe.members() {
            let g = sigma.graph();
            let a = count_morphisms(first, tau, g);
            if a == 0 {
                continue;
            }
            let b = count_morphisms(second, g, lambda);
            if b == 0 {
                continue;
            }
            rhs += rat_u64(a) * rat_u64(b) / rat_u64(g.automorphism_count());
        }
        items.push(FactorizationItem { name, lhs, rhs });
    }
    Ok(FactorizationReport { items })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::names;
    use crate::universe::enumerate_graphs;

    /// Oracle: enumerate all |V(τ)|^{|V(σ)|} vertex maps and test the class
    /// predicate directly.
    fn naive_count(class: MorphismClass, sigma: &Graph, tau: &Graph) -> u64 {
        let ns = sigma.vertex_count();
        let nt = tau.vertex_count();
        if ns == 0 {
            // The unique empty map: a hom, injective; surjective iff nt = 0.
            let surj = nt == 0 && tau.edge_count() == 0;
            return match class {
                MorphismClass::Hom | MorphismClass::Mono | MorphismClass::RegMono => 1,
                _ => u64::from(surj),
            };
        }
        let mut count = 0;
        let mut map = vec![0usize; ns];
        loop {
            if predicate(class, sigma, tau, &map) {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == ns {
                    return count;
                }
                map[i] += 1;
                if map[i] < nt.max(1) {
                    break;
                }
                map[i] = 0;
                i += 1;
            }
            if nt == 0 {
                return count;
            }
        }
    }

    fn predicate(class: MorphismClass, sigma: &Graph, tau: &Graph, map: &[usize]) -> bool {
        if tau.vertex_count() == 0 {
            return false;
        }
        let is_hom = sigma
            .edges()
            .iter()
            .all(|&(u, v)| map[u] != map[v] && tau.has_edge(map[u], map[v]));
        if !is_hom {
            return false;
        }
        let mut hit = vec![false; tau.vertex_count()];
        for &t in map {
            hit[t] = true;
        }
        let vsurj = hit.iter().all(|&b| b);
        let mut seen = std::collections::BTreeSet::new();
        let inj = map.iter().all(|&t| seen.insert(t));
        let mut eimg = std::collections::BTreeSet::new();
        for &(u, v) in sigma.edges() {
            eimg.insert((map[u].min(map[v]), map[u].max(map[v])));
        }
        let esurj = tau.edges().iter().all(|e| eimg.contains(e));
        let induced = inj
            && tau.edges().iter().all(|&(a, b)| {
                let pre_a = map.iter().position(|&t| t == a);
                let pre_b = map.iter().position(|&t| t == b);
                match (pre_a, pre_b) {
                    (Some(u), Some(v)) => sigma.has_edge(u, v),
                    _ => true,
                }
            });
        match class {
            MorphismClass::Hom => true,
            MorphismClass::Mono => inj,
            MorphismClass::Epi => vsurj,
            MorphismClass::RegEpi => vsurj && esurj,
            MorphismClass::RegMono => induced,
            MorphismClass::MonoAndEpi => inj && vsurj,
            MorphismClass::Iso => inj && vsurj && induced,
        }
    }

    #[test]
    fn paper_counts() {
        assert_eq!(
            count_morphisms(MorphismClass::Hom, &names::cherry(), &names::k4()),
            36
        );
        assert_eq!(
            count_morphisms(MorphismClass::Iso, &names::edge(), &names::edge()),
            2
        );
        assert_eq!(
            count_morphisms(MorphismClass::Mono, &names::edge(), &names::k4()),
            12
        );
        assert_eq!(
            count_morphisms(MorphismClass::RegEpi, &names::cherry(), &names::edge()),
            2
        );
    }

    #[test]
    fn iso_on_self_is_automorphism_count() {
        for g in [
            names::edge(),
            names::cherry(),
            names::paw(),
            names::c4(),
            names::three_star().disjoint_union(&names::edge()),
        ] {
            assert_eq!(
                count_morphisms(MorphismClass::Iso, &g, &g),
                g.automorphism_count()
            );
        }
    }

    #[test]
    fn matches_naive_enumeration() {
        let universe_small = enumerate_graphs(BoundKind::MaxVertices, 4, false).unwrap();
        let universe_big = enumerate_graphs(BoundKind::MaxVertices, 5, false).unwrap();
        let classes = [
            MorphismClass::Hom,
            MorphismClass::Mono,
            MorphismClass::Epi,
            MorphismClass::RegEpi,
            MorphismClass::RegMono,
            MorphismClass::Iso,
            MorphismClass::MonoAndEpi,
        ];
        for s in universe_small.members() {
            for t in universe_big.members().iter().step_by(3) {
                for class in classes {
                    assert_eq!(
                        count_morphisms(class, s.graph(), t.graph()),
                        naive_count(class, s.graph(), t.graph()),
                        "{class:?} {s:?} -> {t:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn class_inclusions() {
        let universe = enumerate_graphs(BoundKind::MaxVertices, 4, false).unwrap();
        for s in universe.members().iter().step_by(2) {
            for t in universe.members().iter().step_by(2) {
                let hom = count_morphisms(MorphismClass::Hom, s.graph(), t.graph());
                let mono = count_morphisms(MorphismClass::Mono, s.graph(), t.graph());
                let epi = count_morphisms(MorphismClass::Epi, s.graph(), t.graph());
                assert!(mono <= hom);
                assert!(count_morphisms(MorphismClass::RegMono, s.graph(), t.graph()) <= mono);
                assert!(count_morphisms(MorphismClass::RegEpi, s.graph(), t.graph()) <= epi);
                assert!(epi <= hom);
            }
        }
    }

    #[test]
    fn factorization_on_k4() {
        let universe = enumerate_graphs(BoundKind::MaxVertices, 4, false).unwrap();
        let report =
            check_factorization_identities(&names::cherry(), &names::k4(), &universe).unwrap();
        assert!(report.all_hold(), "{:?}", report.items);
        // Item (iv) with τ = edge⊔edge reproduces the homomorphism count 144.
        let ee = names::edge().disjoint_union(&names::edge());
        let report = check_factorization_identities(&ee, &names::k4(), &universe).unwrap();
        assert!(report.all_hold(), "{:?}", report.items);
        assert_eq!(report.items[3].lhs, crate::linalg::rat(144));
    }

    #[test]
    fn factorization_on_empty() {
        let universe = enumerate_graphs(BoundKind::MaxVertices, 2, false).unwrap();
        let report = check_factorization_identities(
            &Graph::empty(),
            &names::triangle(),
            &universe,
        )
        .unwrap();
        for item in &report.items {
            assert!(item.holds());
        }
    }

    #[test]
    fn factorization_requires_covering_universe() {
        let universe = enumerate_graphs(BoundKind::MaxVertices, 2, false).unwrap();
        assert!(
            check_factorization_identities(&names::k4(), &names::k4(), &universe).is_err()
        );
    }

    #[test]
    fn lovasz_identity() {
        // |Mono(τ,Λ)| expands over intermediates with |V(σ)| = |V(τ)|.
        let inner = enumerate_graphs(BoundKind::MaxVertices, 4, false).unwrap();
        let samples = enumerate_graphs(BoundKind::MaxVertices, 6, false).unwrap();
        let taus: Vec<_> = inner.members().to_vec();
        for tau in &taus {
            for lam in samples.members().iter().step_by(25) {
                let lhs = count_morphisms(MorphismClass::Mono, tau.graph(), lam.graph());
                let mut rhs = 0u64;
                for sigma in inner.members() {
                    if sigma.vertex_count() != tau.vertex_count() {
                        continue;
                    }
                    let a =
                        count_morphisms(MorphismClass::MonoAndEpi, tau.graph(), sigma.graph());
                    if a == 0 {
                        continue;
                    }
                    let b =
                        count_morphisms(MorphismClass::RegMono, sigma.graph(), lam.graph());
                    let aut = sigma.graph().automorphism_count();
                    assert_eq!((a * b) % aut, 0);
                    rhs += a * b / aut;
                }
                assert_eq!(lhs, rhs, "tau {tau:?} lam {lam:?}");
            }
        }
    }
}
