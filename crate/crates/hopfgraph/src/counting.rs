//! Subgraph-counting functionals in four flavors.
//!
//! For a pattern σ and a host Λ:
//!
//! * `EdgeInjective`: #{A ⊆ E(Λ): Λ|_A ≅ σ}, i.e. |Mono(σ,Λ)| / |Aut σ|.
//!   Only defined for σ without isolated vertices.
//! * `VertexInjective`: #{U ⊆ V(Λ): Λ_U ≅ σ}, i.e. |RegMono(σ,Λ)| / |Aut σ|.
//! * `Hom`: |Hom(σ,Λ)|.
//! * `HomDivAut`: |Hom(σ,Λ)| / |Aut σ|, a rational.
//!
//! Each mode is a character for one product (its value is multiplicative),
//! and splits over disjoint-union hosts through one coproduct.

use num::Zero;

use crate::coproducts::{coproduct, CoproductKind, SUBSET_CAP};
use crate::error::{Error, Result};
use crate::graph::{canonicalize, CanonicalGraph, Graph};
use crate::linalg::{rat_u64, Functional, Grading, GraphSum, Rat};
use crate::morphisms::{count_morphisms, MorphismClass};
use crate::par;
use crate::products::{product, ProductKind};
use crate::universe::{enumerate_graphs, BoundKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CountingMode {
    EdgeInjective,
    VertexInjective,
    Hom,
    HomDivAut,
}

impl CountingMode {
    /// The product this mode is multiplicative for.
    pub fn character_product(self) -> ProductKind {
        match self {
            CountingMode::EdgeInjective => ProductKind::EdgeQuasiShuffle,
            CountingMode::VertexInjective => ProductKind::VertexQuasiShuffle,
            CountingMode::Hom => ProductKind::DisjointUnion,
            CountingMode::HomDivAut => ProductKind::DividedPowers,
        }
    }

    /// The coproduct that splits counts over a disjoint-union host.
    pub fn chen_coproduct(self) -> CoproductKind {
        match self {
            CountingMode::Hom => CoproductKind::DividedPowers,
            _ => CoproductKind::DisjointUnion,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            CountingMode::EdgeInjective => "edge-injective",
            CountingMode::VertexInjective => "vertex-injective",
            CountingMode::Hom => "hom",
            CountingMode::HomDivAut => "hom-per-aut",
        }
    }
}

/// The count of σ in Λ under the given mode.
pub fn count(mode: CountingMode, sigma: &Graph, lambda: &Graph) -> Result<Rat> {
    if mode == CountingMode::EdgeInjective && sigma.has_isolated_vertices() {
        return Err(Error::domain(
            "edge-injective counts are only defined for patterns without isolated vertices"
                .to_string(),
        ));
    }
    let aut = rat_u64(sigma.automorphism_count());
    Ok(match mode {
        CountingMode::EdgeInjective => {
            rat_u64(count_morphisms(MorphismClass::Mono, sigma, lambda)) / aut
        }
        CountingMode::VertexInjective => {
            rat_u64(count_morphisms(MorphismClass::RegMono, sigma, lambda)) / aut
        }
        CountingMode::Hom => rat_u64(count_morphisms(MorphismClass::Hom, sigma, lambda)),
        CountingMode::HomDivAut => {
            rat_u64(count_morphisms(MorphismClass::Hom, sigma, lambda)) / aut
        }
    })
}

/// All counts of one mode against a fixed host, as a functional on patterns.
#[derive(Clone, Debug)]
pub struct Signature {
    pub mode: CountingMode,
    pub functional: Functional,
}

impl Signature {
    pub fn eval(&self, sigma: &CanonicalGraph) -> Result<Rat> {
        self.functional.eval(sigma)
    }
}

/// Computes the counting signature of `lambda`.
///
/// The injective modes have finite support, so `truncation` is optional: by
/// default the complete signature is returned (every pattern with at most
/// |E(Λ)| edges resp. |V(Λ)| vertices). The hom modes have infinite support
/// and demand an explicit truncation, a bound on the pattern's vertex count.
pub fn signature(
    mode: CountingMode,
    lambda: &Graph,
    truncation: Option<usize>,
) -> Result<Signature> {
    let functional = match mode {
        CountingMode::EdgeInjective => {
            let m = lambda.edge_count();
            if m > SUBSET_CAP {
                return Err(Error::resource(format!(
                    "edge subset sweep over {m} edges exceeds cap {SUBSET_CAP}"
                )));
            }
            let bound = truncation.unwrap_or(m);
            let classes = par::map_range(1usize << m, |mask| {
                let edges: Vec<(usize, usize)> = lambda
                    .edges()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| (mask >> i) & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                canonicalize(&lambda.restricted_subgraph(&edges).expect("edges from lambda"))
            });
            let mut terms = GraphSum::zero();
            for c in classes {
                if c.edge_count() <= bound {
                    terms.add_term(c, rat_u64(1));
                }
            }
            if bound >= m {
                Functional::complete(terms)
            } else {
                Functional::truncated(terms, Grading::EdgeCount, bound)
            }
        }
        CountingMode::VertexInjective => {
            let n = lambda.vertex_count();
            if n > SUBSET_CAP {
                return Err(Error::resource(format!(
                    "vertex subset sweep over {n} vertices exceeds cap {SUBSET_CAP}"
                )));
            }
            let bound = truncation.unwrap_or(n);
            let classes = par::map_range(1usize << n, |mask| {
                canonicalize(&lambda.induced_subgraph_mask(mask as u64))
            });
            let mut terms = GraphSum::zero();
            for c in classes {
                if c.vertex_count() <= bound {
                    terms.add_term(c, rat_u64(1));
                }
            }
            if bound >= n {
                Functional::complete(terms)
            } else {
                Functional::truncated(terms, Grading::VertexCount, bound)
            }
        }
        CountingMode::Hom | CountingMode::HomDivAut => {
            let bound = truncation.ok_or_else(|| {
                Error::domain(format!(
                    "the {} signature has infinite support and needs an explicit truncation",
                    mode.label()
                ))
            })?;
            let universe = enumerate_graphs(BoundKind::MaxVertices, bound, false)?;
            let values = par::map_vec(universe.members().to_vec(), |sigma| {
                let c = count(mode, sigma.graph(), lambda).expect("hom modes have no domain error");
                (sigma, c)
            });
            let mut terms = GraphSum::zero();
            for (sigma, c) in values {
                terms.add_term(sigma, c);
            }
            Functional::truncated(terms, Grading::VertexCount, bound)
        }
    };
    Ok(Signature { mode, functional })
}

/// Multiplicativity of the counting character: c(g,Λ)·c(h,Λ) must equal the
/// count of the paired product, Σ_γ coeff(γ) c(γ,Λ).
pub fn check_character(
    mode: CountingMode,
    g: &Graph,
    h: &Graph,
    lambda: &Graph,
) -> Result<bool> {
    let lhs = count(mode, g, lambda)? * count(mode, h, lambda)?;
    let p = product(mode.character_product(), g, h)?;
    let mut rhs = Rat::zero();
    for (gamma, coeff) in p.terms() {
        rhs += coeff * count(mode, gamma.graph(), lambda)?;
    }
    Ok(lhs == rhs)
}

/// Splitting over a disjoint-union host: c(σ, Λ₁⊔Λ₂) must equal
/// Σ c(σ′,Λ₁)·c(σ″,Λ₂) over the mode's splitting coproduct of σ.
pub fn check_chen(
    mode: CountingMode,
    sigma: &Graph,
    lambda1: &Graph,
    lambda2: &Graph,
) -> Result<bool> {
    let lhs = count(mode, sigma, &lambda1.disjoint_union(lambda2))?;
    let split = coproduct(mode.chen_coproduct(), sigma)?;
    let mut rhs = Rat::zero();
    for ((a, b), coeff) in split.terms() {
        rhs += coeff * count(mode, a.graph(), lambda1)? * count(mode, b.graph(), lambda2)?;
    }
    Ok(lhs == rhs)
}

/// Combines the signatures of two hosts into the signature of their disjoint
/// union, using only the split counts (never the union host itself).
pub fn chen_combine(
    mode: CountingMode,
    lambda1: &Graph,
    lambda2: &Graph,
    truncation: Option<usize>,
) -> Result<Signature> {
    let union = lambda1.disjoint_union(lambda2);
    let reference = signature(mode, &union, truncation)?;
    let mut terms = GraphSum::zero();
    for (sigma, _) in reference.functional.terms.terms() {
        let split = coproduct(mode.chen_coproduct(), sigma.graph())?;
        let mut acc = Rat::zero();
        for ((a, b), coeff) in split.terms() {
            acc += coeff * count(mode, a.graph(), lambda1)? * count(mode, b.graph(), lambda2)?;
        }
        terms.add_term(sigma.clone(), acc);
    }
    Ok(Signature {
        mode,
        functional: Functional {
            terms,
            truncation: reference.functional.truncation,
        },
    })
}
