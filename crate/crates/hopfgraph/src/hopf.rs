//! Bialgebra and Hopf structure over the graph carriers.
//!
//! A configuration picks a carrier (all graphs, or graphs without isolated
//! vertices), a product, and a coproduct. Validity means both operations are
//! defined and closed on the carrier. Among valid configurations, exactly
//! those pairing the disjoint-union product with a different coproduct, or
//! a different product with the component coproduct, satisfy the bialgebra
//! compatibility Δ(g·h) = Δ(g)·Δ(h); every other valid pairing fails it on
//! small witnesses. Two of the bialgebras — disjoint union against the
//! quasi-shuffle coproducts — have a grouplike-flavored generator whose
//! antipode series diverges, so they are bialgebras but not Hopf.

use std::collections::HashMap;
use std::sync::Mutex;

use num::Zero;
use once_cell::sync::Lazy;

use crate::coproducts::{coproduct, reduced_coproduct, CoproductKind};
use crate::error::{Error, Result};
use crate::graph::{canonicalize, CanonicalGraph, Graph};
use crate::linalg::{counit, grade, Functional, Grading, GraphSum, Rat, TensorSum};
use crate::products::{product, product_sums, ProductKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Carrier {
    AllGraphs,
    NoIsolated,
}

impl Carrier {
    pub fn admits(self, g: &Graph) -> bool {
        match self {
            Carrier::AllGraphs => true,
            Carrier::NoIsolated => !g.has_isolated_vertices(),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Carrier::AllGraphs => "all graphs",
            Carrier::NoIsolated => "graphs without isolated vertices",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HopfConfig {
    pub carrier: Carrier,
    pub product: ProductKind,
    pub coproduct: CoproductKind,
}

/// Products defined and closed on the carrier.
pub fn carrier_products(carrier: Carrier) -> &'static [ProductKind] {
    match carrier {
        Carrier::AllGraphs => &[
            ProductKind::DisjointUnion,
            ProductKind::DividedPowers,
            ProductKind::VertexShuffle,
            ProductKind::VertexQuasiShuffle,
        ],
        Carrier::NoIsolated => &[
            ProductKind::DisjointUnion,
            ProductKind::DividedPowers,
            ProductKind::EdgeShuffle,
            ProductKind::EdgeQuasiShuffle,
            ProductKind::VertexShuffle,
            ProductKind::VertexQuasiShuffle,
        ],
    }
}

/// Coproducts defined and closed on the carrier. The edge kinds need inputs
/// without isolated vertices; the vertex kinds produce them, so they are only
/// closed on the full carrier. Overlap is not counital and never qualifies.
pub fn carrier_coproducts(carrier: Carrier) -> &'static [CoproductKind] {
    match carrier {
        Carrier::AllGraphs => &[
            CoproductKind::DisjointUnion,
            CoproductKind::DividedPowers,
            CoproductKind::VertexShuffle,
            CoproductKind::VertexQuasiShuffle,
        ],
        Carrier::NoIsolated => &[
            CoproductKind::DisjointUnion,
            CoproductKind::DividedPowers,
            CoproductKind::EdgeShuffle,
            CoproductKind::EdgeQuasiShuffle,
        ],
    }
}

pub fn valid_config(c: HopfConfig) -> bool {
    carrier_products(c.carrier).contains(&c.product)
        && carrier_coproducts(c.carrier).contains(&c.coproduct)
}

/// Whether the compatibility Δ(g·h) = Δ(g)·Δ(h) holds for the configuration.
pub fn is_bialgebra(c: HopfConfig) -> bool {
    valid_config(c)
        && ((c.product == ProductKind::DisjointUnion)
            != (c.coproduct == CoproductKind::DisjointUnion))
}

/// Whether the bialgebra carries an antipode. The two exceptions pair the
/// disjoint-union product with a quasi-shuffle coproduct, under which the
/// smallest nonempty carrier element is invertibility-obstructed: its
/// antipode series never terminates.
pub fn is_hopf(c: HopfConfig) -> bool {
    is_bialgebra(c)
        && !(c.product == ProductKind::DisjointUnion
            && matches!(
                c.coproduct,
                CoproductKind::VertexQuasiShuffle | CoproductKind::EdgeQuasiShuffle
            ))
}

pub fn all_valid_configs() -> Vec<HopfConfig> {
    let mut out = Vec::new();
    for carrier in [Carrier::AllGraphs, Carrier::NoIsolated] {
        for &product in carrier_products(carrier) {
            for &coproduct in carrier_coproducts(carrier) {
                out.push(HopfConfig {
                    carrier,
                    product,
                    coproduct,
                });
            }
        }
    }
    out
}

fn check_carrier(c: HopfConfig, g: &Graph) -> Result<()> {
    if !c.carrier.admits(g) {
        return Err(Error::domain(format!(
            "graph with isolated vertices is outside the carrier of {}",
            c.carrier.label()
        )));
    }
    Ok(())
}

/// Whether the reduced coproduct of `g` vanishes.
pub fn is_primitive(kind: CoproductKind, g: &Graph) -> Result<bool> {
    Ok(reduced_coproduct(kind, g)?.is_empty())
}

static ANTIPODE_CACHE: Lazy<Mutex<HashMap<(HopfConfig, String), GraphSum>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

const ANTIPODE_DEPTH_LIMIT: usize = 64;

/// The antipode on a basis element, by the recursion
/// S(g) = −g − Σ S(g′)·g″ over the reduced coproduct.
pub fn antipode(c: HopfConfig, g: &Graph) -> Result<GraphSum> {
    if !valid_config(c) {
        return Err(Error::unsupported(
            "the product/coproduct pair is not defined on this carrier".to_string(),
        ));
    }
    if !is_hopf(c) {
        return Err(Error::unsupported(if is_bialgebra(c) {
            "this bialgebra has no antipode: the series diverges".to_string()
        } else {
            "the configuration is not a bialgebra".to_string()
        }));
    }
    check_carrier(c, g)?;
    antipode_rec(c, &canonicalize(g), 0)
}

fn antipode_rec(c: HopfConfig, g: &CanonicalGraph, depth: usize) -> Result<GraphSum> {
    if depth > ANTIPODE_DEPTH_LIMIT {
        return Err(Error::internal(
            "antipode recursion exceeded its depth limit".to_string(),
        ));
    }
    if g.vertex_count() == 0 {
        return Ok(GraphSum::basis(g.clone()));
    }
    let key = (c, g.encoding().to_string());
    if let Some(hit) = ANTIPODE_CACHE.lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let reduced = reduced_coproduct(c.coproduct, g.graph())?;
    let mut acc = GraphSum::basis(g.clone()).neg();
    for ((a, b), coeff) in reduced.terms() {
        let sa = antipode_rec(c, a, depth + 1)?;
        let term = product_sums(c.product, &sa, &GraphSum::basis(b.clone()))?;
        acc = acc.sub(&term.scale(coeff));
    }
    ANTIPODE_CACHE.lock().unwrap().insert(key, acc.clone());
    Ok(acc)
}

/// Linear extension of the antipode.
pub fn antipode_sum(c: HopfConfig, x: &GraphSum) -> Result<GraphSum> {
    let mut out = GraphSum::zero();
    for (g, coeff) in x.terms() {
        let s = antipode(c, g.graph())?;
        out = out.add(&s.scale(coeff));
    }
    Ok(out)
}

/// Both antipode axioms on `g`: m(S⊗id)Δ(g) = ε(g)·e = m(id⊗S)Δ(g).
pub fn check_antipode_axiom(c: HopfConfig, g: &Graph) -> Result<bool> {
    check_carrier(c, g)?;
    let delta = coproduct(c.coproduct, g)?;
    let mut left = GraphSum::zero();
    let mut right = GraphSum::zero();
    for ((a, b), coeff) in delta.terms() {
        let sa = antipode(c, a.graph())?;
        let sb = antipode(c, b.graph())?;
        left = left.add(
            &product_sums(c.product, &sa, &GraphSum::basis(b.clone()))?.scale(coeff),
        );
        right = right.add(
            &product_sums(c.product, &GraphSum::basis(a.clone()), &sb)?.scale(coeff),
        );
    }
    let expected = crate::linalg::unit(&counit(&GraphSum::from_graph(g)));
    Ok(left == expected && right == expected)
}

/// (uε − id)^{⋆n} applied to the basis element `g`, with n = 0 giving uε.
/// The antipode, where it exists, is the sum of these over all n.
pub fn convolution_power(c: HopfConfig, n: usize, g: &Graph) -> Result<GraphSum> {
    if !valid_config(c) {
        return Err(Error::unsupported(
            "the product/coproduct pair is not defined on this carrier".to_string(),
        ));
    }
    check_carrier(c, g)?;
    convolution_power_rec(c, n, &canonicalize(g))
}

fn ue_minus_id(g: &CanonicalGraph) -> GraphSum {
    let x = GraphSum::basis(g.clone());
    crate::linalg::unit(&counit(&x)).sub(&x)
}

fn convolution_power_rec(c: HopfConfig, n: usize, g: &CanonicalGraph) -> Result<GraphSum> {
    if n == 0 {
        return Ok(crate::linalg::unit(&counit(&GraphSum::basis(g.clone()))));
    }
    if n == 1 {
        return Ok(ue_minus_id(g));
    }
    let delta = coproduct(c.coproduct, g.graph())?;
    let mut acc = GraphSum::zero();
    for ((a, b), coeff) in delta.terms() {
        let fa = convolution_power_rec(c, n - 1, a)?;
        if fa.is_zero() {
            continue;
        }
        let gb = ue_minus_id(b);
        if gb.is_zero() {
            continue;
        }
        acc = acc.add(&product_sums(c.product, &fa, &gb)?.scale(coeff));
    }
    Ok(acc)
}

/// Partial sum Σ_{n=0..=max_n} (uε − id)^{⋆n}(g).
pub fn antipode_series(c: HopfConfig, g: &Graph, max_n: usize) -> Result<GraphSum> {
    let mut acc = GraphSum::zero();
    for n in 0..=max_n {
        acc = acc.add(&convolution_power(c, n, g)?);
    }
    Ok(acc)
}

/// A failing instance of the bialgebra compatibility.
#[derive(Clone, Debug)]
pub struct CompatibilityCounterexample {
    pub left: CanonicalGraph,
    pub right: CanonicalGraph,
    pub from_product: Rat,
    pub from_tensors: Rat,
}

/// Both sides of the compatibility square: Δ(g·h) and Δ(g)·Δ(h).
pub fn compatibility_sides(c: HopfConfig, g: &Graph, h: &Graph) -> Result<(TensorSum, TensorSum)> {
    check_carrier(c, g)?;
    check_carrier(c, h)?;
    let p = product(c.product, g, h)?;
    let mut lhs = TensorSum::zero();
    for (gamma, coeff) in p.terms() {
        let d = coproduct(c.coproduct, gamma.graph())?;
        for ((a, b), x) in d.terms() {
            lhs.add_term(a.clone(), b.clone(), coeff * x);
        }
    }
    let dg = coproduct(c.coproduct, g)?;
    let dh = coproduct(c.coproduct, h)?;
    let mut rhs = TensorSum::zero();
    for ((a1, b1), c1) in dg.terms() {
        for ((a2, b2), c2) in dh.terms() {
            let left = product(c.product, a1.graph(), a2.graph())?;
            let right = product(c.product, b1.graph(), b2.graph())?;
            for (la, ca) in left.terms() {
                for (rb, cb) in right.terms() {
                    rhs.add_term(la.clone(), rb.clone(), c1 * c2 * ca * cb);
                }
            }
        }
    }
    Ok((lhs, rhs))
}

/// Compares Δ(g·h) with Δ(g)·Δ(h); `None` means they agree, otherwise the
/// first differing tensor term is reported with both coefficients.
pub fn check_compatibility(
    c: HopfConfig,
    g: &Graph,
    h: &Graph,
) -> Result<Option<CompatibilityCounterexample>> {
    let (lhs, rhs) = compatibility_sides(c, g, h)?;
    let diff = lhs.sub(&rhs);
    let first = diff.terms().next().map(|((a, b), _)| (a.clone(), b.clone()));
    Ok(first.map(|(a, b)| CompatibilityCounterexample {
        from_product: lhs.coefficient(&a, &b),
        from_tensors: rhs.coefficient(&a, &b),
        left: a,
        right: b,
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GradingVerdict {
    Graded,
    Filtered { witness: String },
    NonFiltered { witness: String },
}

/// Classifies a coproduct against a grading over the sample graphs: graded
/// if every term splits the grade exactly, filtered if never exceeding it,
/// non-filtered otherwise (with a witnessing term).
pub fn coproduct_grading_verdict(
    kind: CoproductKind,
    grading: Grading,
    samples: &[Graph],
) -> Result<GradingVerdict> {
    let mut filtered_witness: Option<String> = None;
    for g in samples {
        let total = grade(&canonicalize(g), grading);
        let d = coproduct(kind, g)?;
        for ((a, b), _) in d.terms() {
            let parts = grade(a, grading) + grade(b, grading);
            if parts > total {
                return Ok(GradingVerdict::NonFiltered {
                    witness: format!(
                        "{}⊗{} of grade {parts} in the coproduct of a grade-{total} graph",
                        crate::names::display_name(a),
                        crate::names::display_name(b)
                    ),
                });
            }
            if parts < total && filtered_witness.is_none() {
                filtered_witness = Some(format!(
                    "{}⊗{} of grade {parts} in the coproduct of a grade-{total} graph",
                    crate::names::display_name(a),
                    crate::names::display_name(b)
                ));
            }
        }
    }
    Ok(match filtered_witness {
        Some(witness) => GradingVerdict::Filtered { witness },
        None => GradingVerdict::Graded,
    })
}

/// The product analogue: graded if every support class has the grade sum of
/// the operands, filtered if never above it.
pub fn product_grading_verdict(
    kind: ProductKind,
    grading: Grading,
    samples: &[(Graph, Graph)],
) -> Result<GradingVerdict> {
    let mut filtered_witness: Option<String> = None;
    for (g, h) in samples {
        let total = grade(&canonicalize(g), grading) + grade(&canonicalize(h), grading);
        let p = product(kind, g, h)?;
        for (gamma, _) in p.terms() {
            let got = grade(gamma, grading);
            if got > total {
                return Ok(GradingVerdict::NonFiltered {
                    witness: format!(
                        "{} of grade {got} in a product of total grade {total}",
                        crate::names::display_name(gamma)
                    ),
                });
            }
            if got < total && filtered_witness.is_none() {
                filtered_witness = Some(format!(
                    "{} of grade {got} in a product of total grade {total}",
                    crate::names::display_name(gamma)
                ));
            }
        }
    }
    Ok(match filtered_witness {
        Some(witness) => GradingVerdict::Filtered { witness },
        None => GradingVerdict::Graded,
    })
}

/// Convolution of two functionals against a host: (f ⋆ g)(Λ) over the given
/// coproduct is Σ f(Λ′)·g(Λ″).
pub fn convolve_functionals(
    kind: CoproductKind,
    f: &Functional,
    g: &Functional,
    lambda: &Graph,
) -> Result<Rat> {
    let d = coproduct(kind, lambda)?;
    let mut acc = Rat::zero();
    for ((a, b), coeff) in d.terms() {
        let fa = f.eval(a)?;
        if fa.is_zero() {
            continue;
        }
        let gb = g.eval(b)?;
        if gb.is_zero() {
            continue;
        }
        acc += coeff * fa * gb;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{count, CountingMode};
    use crate::linalg::{rat, zeta};
    use crate::names;
    use crate::universe::{enumerate_graphs, BoundKind};

    fn cg(g: &Graph) -> CanonicalGraph {
        canonicalize(g)
    }

    fn cfg(carrier: Carrier, product: ProductKind, coproduct: CoproductKind) -> HopfConfig {
        HopfConfig {
            carrier,
            product,
            coproduct,
        }
    }

    fn sum(entries: &[(&Graph, i64)]) -> GraphSum {
        let mut s = GraphSum::zero();
        for &(g, c) in entries {
            s.add_term(cg(g), rat(c));
        }
        s
    }

    fn hopf_configs() -> Vec<HopfConfig> {
        all_valid_configs().into_iter().filter(|&c| is_hopf(c)).collect()
    }

    #[test]
    fn structure_tables() {
        // 16 valid configurations on the full carrier, 24 on the other.
        assert_eq!(all_valid_configs().len(), 40);
        let bialgebras: Vec<HopfConfig> =
            all_valid_configs().into_iter().filter(|&c| is_bialgebra(c)).collect();
        // On all graphs: 3 + 3; without isolated vertices: 5 + 3.
        assert_eq!(
            bialgebras.iter().filter(|c| c.carrier == Carrier::AllGraphs).count(),
            6
        );
        assert_eq!(
            bialgebras.iter().filter(|c| c.carrier == Carrier::NoIsolated).count(),
            8
        );
        let hopf = hopf_configs();
        assert_eq!(hopf.iter().filter(|c| c.carrier == Carrier::AllGraphs).count(), 5);
        assert_eq!(hopf.iter().filter(|c| c.carrier == Carrier::NoIsolated).count(), 7);
        // The two bialgebras without antipode.
        for c in [
            cfg(
                Carrier::AllGraphs,
                ProductKind::DisjointUnion,
                CoproductKind::VertexQuasiShuffle,
            ),
            cfg(
                Carrier::NoIsolated,
                ProductKind::DisjointUnion,
                CoproductKind::EdgeQuasiShuffle,
            ),
        ] {
            assert!(is_bialgebra(c) && !is_hopf(c));
            assert!(matches!(antipode(c, &names::edge()), Err(Error::Unsupported(_))));
        }
    }

    #[test]
    fn compatibility_on_bialgebras() {
        let pairs = [
            (names::vertex(), names::vertex()),
            (names::vertex(), names::edge()),
            (names::edge(), names::edge()),
            (names::edge(), names::cherry()),
        ];
        for c in all_valid_configs() {
            if !is_bialgebra(c) {
                continue;
            }
            for (g, h) in &pairs {
                if !c.carrier.admits(g) || !c.carrier.admits(h) {
                    continue;
                }
                assert!(
                    check_compatibility(c, g, h).unwrap().is_none(),
                    "{c:?} {g:?} {h:?}"
                );
            }
        }
    }

    #[test]
    fn compatibility_counterexamples() {
        // Disjoint union against its own coproduct: coefficient 1 vs 2.
        let c = cfg(
            Carrier::AllGraphs,
            ProductKind::DisjointUnion,
            CoproductKind::DisjointUnion,
        );
        let cex = check_compatibility(c, &names::edge(), &names::edge())
            .unwrap()
            .expect("must fail");
        assert_eq!((cex.from_product, cex.from_tensors), (rat(1), rat(2)));

        // Divided powers against divided powers: 4 vs 2 at ∙⊗∙.
        let c = cfg(
            Carrier::AllGraphs,
            ProductKind::DividedPowers,
            CoproductKind::DividedPowers,
        );
        let cex = check_compatibility(c, &names::vertex(), &names::vertex())
            .unwrap()
            .expect("must fail");
        assert_eq!(cex.left, cg(&names::vertex()));
        assert_eq!(cex.right, cg(&names::vertex()));
        assert_eq!((cex.from_product, cex.from_tensors), (rat(4), rat(2)));

        // Edge quasi-shuffle against itself: 2 vs 4 at cherry⊗cherry.
        let c = cfg(
            Carrier::NoIsolated,
            ProductKind::EdgeQuasiShuffle,
            CoproductKind::EdgeQuasiShuffle,
        );
        assert!(check_compatibility(c, &names::edge(), &names::edge())
            .unwrap()
            .is_some());
        let (lhs, rhs) = compatibility_sides(c, &names::edge(), &names::edge()).unwrap();
        let ch = cg(&names::cherry());
        assert_eq!(lhs.coefficient(&ch, &ch), rat(2));
        assert_eq!(rhs.coefficient(&ch, &ch), rat(4));

        // Edge shuffle against divided powers: 4 vs 2 at edge⊗edge.
        let c = cfg(
            Carrier::NoIsolated,
            ProductKind::EdgeShuffle,
            CoproductKind::DividedPowers,
        );
        let cex = check_compatibility(c, &names::edge(), &names::edge())
            .unwrap()
            .expect("must fail");
        assert_eq!(cex.left, cg(&names::edge()));
        assert_eq!(cex.right, cg(&names::edge()));
        assert_eq!((cex.from_product, cex.from_tensors), (rat(4), rat(2)));
    }

    #[test]
    fn antipode_fixed_points() {
        let c = cfg(
            Carrier::NoIsolated,
            ProductKind::DisjointUnion,
            CoproductKind::EdgeShuffle,
        );
        assert_eq!(
            antipode(c, &names::edge()).unwrap(),
            sum(&[(&names::edge(), -1)])
        );
        let ee = names::edge().disjoint_union(&names::edge());
        assert_eq!(antipode(c, &ee).unwrap(), sum(&[(&ee, 1)]));
    }

    #[test]
    fn antipode_axiom_everywhere() {
        let samples = [
            Graph::empty(),
            names::vertex(),
            names::edge(),
            names::cherry(),
            names::triangle(),
            names::edge().disjoint_union(&names::edge()),
            names::by_name("edge.vertex").unwrap(),
        ];
        for c in hopf_configs() {
            for g in &samples {
                if !c.carrier.admits(g) {
                    continue;
                }
                assert!(check_antipode_axiom(c, g).unwrap(), "{c:?} {g:?}");
            }
        }
    }

    #[test]
    fn antipode_equals_convolution_series() {
        let samples = [
            names::edge(),
            names::cherry(),
            names::edge().disjoint_union(&names::edge()),
            names::by_name("cherry.edge").unwrap(),
        ];
        for c in hopf_configs() {
            for g in &samples {
                if !c.carrier.admits(g) {
                    continue;
                }
                // Every coproduct here drops one of the relevant grades per
                // convolution factor, so the series ends by this bound.
                let bound = g.vertex_count().max(g.edge_count());
                let series = antipode_series(c, g, bound).unwrap();
                assert_eq!(series, antipode(c, g).unwrap(), "{c:?} {g:?}");
                assert!(
                    convolution_power(c, bound + 1, g).unwrap().is_zero(),
                    "{c:?} {g:?}"
                );
            }
        }
    }

    #[test]
    fn divergent_series_without_antipode() {
        let c = cfg(
            Carrier::AllGraphs,
            ProductKind::DisjointUnion,
            CoproductKind::VertexQuasiShuffle,
        );
        for n in 1..=8 {
            let term = convolution_power(c, n, &names::vertex()).unwrap();
            assert!(!term.is_zero(), "power {n} should not vanish");
        }
        let c = cfg(
            Carrier::NoIsolated,
            ProductKind::DisjointUnion,
            CoproductKind::EdgeQuasiShuffle,
        );
        for n in 1..=6 {
            let term = convolution_power(c, n, &names::edge()).unwrap();
            assert!(!term.is_zero(), "power {n} should not vanish");
        }
    }

    #[test]
    fn primitivity() {
        assert!(is_primitive(CoproductKind::EdgeShuffle, &names::edge()).unwrap());
        assert!(!is_primitive(CoproductKind::EdgeShuffle, &names::cherry()).unwrap());
        assert!(is_primitive(CoproductKind::DisjointUnion, &names::k4()).unwrap());
        assert!(!is_primitive(CoproductKind::EdgeQuasiShuffle, &names::edge()).unwrap());
    }

    #[test]
    fn grading_table() {
        let samples = [
            names::edge(),
            names::cherry(),
            names::triangle(),
            names::paw(),
            names::edge().disjoint_union(&names::edge()),
        ];
        // Edge shuffle coproduct is edge-graded but not vertex-filtered.
        assert_eq!(
            coproduct_grading_verdict(CoproductKind::EdgeShuffle, Grading::EdgeCount, &samples)
                .unwrap(),
            GradingVerdict::Graded
        );
        assert!(matches!(
            coproduct_grading_verdict(CoproductKind::EdgeShuffle, Grading::VertexCount, &samples)
                .unwrap(),
            GradingVerdict::NonFiltered { .. }
        ));
        // The quasi-shuffle coproduct exceeds the edge grade already on one edge.
        assert!(matches!(
            coproduct_grading_verdict(
                CoproductKind::EdgeQuasiShuffle,
                Grading::EdgeCount,
                &[names::edge()]
            )
            .unwrap(),
            GradingVerdict::NonFiltered { .. }
        ));
        // The component coproducts are graded for everything in sight.
        for grading in [Grading::VertexCount, Grading::EdgeCount, Grading::ConnectedComponents] {
            assert_eq!(
                coproduct_grading_verdict(CoproductKind::DisjointUnion, grading, &samples)
                    .unwrap(),
                GradingVerdict::Graded
            );
        }

        let pairs = [
            (names::edge(), names::edge()),
            (names::edge(), names::cherry()),
        ];
        // Edge shuffle product: edge-graded. Quasi-shuffle: only filtered.
        assert_eq!(
            product_grading_verdict(ProductKind::EdgeShuffle, Grading::EdgeCount, &pairs)
                .unwrap(),
            GradingVerdict::Graded
        );
        assert!(matches!(
            product_grading_verdict(ProductKind::EdgeQuasiShuffle, Grading::EdgeCount, &pairs)
                .unwrap(),
            GradingVerdict::Filtered { .. }
        ));
        // Vertex shuffle product: vertex-graded; quasi-shuffle only filtered.
        assert_eq!(
            product_grading_verdict(ProductKind::VertexShuffle, Grading::VertexCount, &pairs)
                .unwrap(),
            GradingVerdict::Graded
        );
        assert!(matches!(
            product_grading_verdict(
                ProductKind::VertexQuasiShuffle,
                Grading::VertexCount,
                &pairs
            )
            .unwrap(),
            GradingVerdict::Filtered { .. }
        ));
    }

    #[test]
    fn zeta_convolutions_count_subgraphs() {
        // Convolving ζ with a dual basis element over the edge coproducts
        // recovers edge-injective counts (with a 2^{|E(τ)|} factor for the
        // quasi-shuffle version).
        let u = enumerate_graphs(BoundKind::MaxEdges, 6, true).unwrap();
        let z = zeta(&u);
        let hosts = [names::triangle(), names::paw(), names::k4()];
        let taus = [names::edge(), names::cherry(), names::triangle()];
        for host in &hosts {
            for tau in &taus {
                let t = Functional::dual_basis(cg(tau));
                let c = count(CountingMode::EdgeInjective, tau, host).unwrap();
                assert_eq!(
                    convolve_functionals(CoproductKind::EdgeShuffle, &z, &t, host).unwrap(),
                    c,
                    "{tau:?} in {host:?}"
                );
                let scale = rat(1 << tau.edge_count());
                assert_eq!(
                    convolve_functionals(CoproductKind::EdgeQuasiShuffle, &z, &t, host).unwrap(),
                    scale * c,
                    "{tau:?} in {host:?}"
                );
            }
        }
    }
}
