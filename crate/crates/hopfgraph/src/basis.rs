//! Polynomial decomposition over connected graphs.
//!
//! For each product, the classes of connected graphs freely generate the
//! algebra (as a polynomial ring), so every class rewrites uniquely as a
//! polynomial in connected classes. The rewrite follows the recursion
//!
//!   g = (1/c) · (g₁ ∗ rest − Σ_{η ≠ g} p_η · η)
//!
//! where g = g₁ ⊔ rest splits off one component, the product expands as
//! g₁ ∗ rest = c·g + Σ p_η η, and the leading coefficient c is nonzero.
//! The stray classes η shrink in a well-founded measure (fewer vertices at
//! the same edge count for the edge products, more edges at the same vertex
//! count for the vertex products), so the recursion terminates.
//!
//! Because each counting mode is a character of its paired product, the same
//! polynomial evaluated at the counts of connected graphs reproduces the
//! count of any disconnected pattern.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use num::{One, Zero};
use once_cell::sync::Lazy;

use crate::counting::{count, CountingMode};
use crate::error::{Error, Result};
use crate::graph::{canonicalize, CanonicalGraph, Graph};
use crate::linalg::{format_rat, GraphSum, Rat};
use crate::names;
use crate::products::{product, product_sums, ProductKind};
use crate::universe::{BoundKind, GraphUniverse};

/// A multiset of connected classes: one commutative monomial.
pub type Monomial = BTreeMap<CanonicalGraph, usize>;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct ConnectedPolynomial {
    terms: BTreeMap<Monomial, Rat>,
}

impl ConnectedPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::new(), Rat::one());
        p
    }

    pub fn variable(c: CanonicalGraph) -> Self {
        let mut m = Monomial::new();
        m.insert(c, 1);
        let mut p = Self::zero();
        p.add_term(m, Rat::one());
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect(),
        }
    }

    /// Multiplication by a single variable.
    pub fn mul_variable(&self, v: &CanonicalGraph) -> Self {
        let mut out = Self::zero();
        for (m, c) in self.terms() {
            let mut m = m.clone();
            *m.entry(v.clone()).or_insert(0) += 1;
            out.add_term(m, c.clone());
        }
        out
    }

    /// Substitutes values for the variables and evaluates numerically.
    pub fn evaluate_with(
        &self,
        mut value: impl FnMut(&CanonicalGraph) -> Result<Rat>,
    ) -> Result<Rat> {
        let mut acc = Rat::zero();
        for (m, c) in self.terms() {
            let mut term = c.clone();
            for (v, power) in m {
                let x = value(v)?;
                for _ in 0..*power {
                    term *= x.clone();
                }
            }
            acc += term;
        }
        Ok(acc)
    }
}

pub fn format_monomial(m: &Monomial) -> String {
    if m.is_empty() {
        return "1".to_string();
    }
    m.iter()
        .map(|(v, p)| {
            let base = format!("x_{}", names::display_name(v));
            if *p == 1 {
                base
            } else {
                format!("{base}^{p}")
            }
        })
        .collect::<Vec<_>>()
        .join("·")
}

impl fmt::Display for ConnectedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num::Signed;
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            let mono = format_monomial(m);
            if a.is_one() && !m.is_empty() {
                write!(f, "{mono}")?;
            } else if m.is_empty() {
                write!(f, "{}", format_rat(&a))?;
            } else {
                write!(f, "{}·{mono}", format_rat(&a))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ConnectedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ConnectedPolynomial({self})")
    }
}

static DECOMPOSE_CACHE: Lazy<Mutex<HashMap<(ProductKind, String), ConnectedPolynomial>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

const DECOMPOSE_DEPTH_LIMIT: usize = 256;

/// Rewrites the class of `g` as a polynomial in connected classes under the
/// given product.
pub fn decompose_connected(kind: ProductKind, g: &Graph) -> Result<ConnectedPolynomial> {
    if kind.requires_no_isolated() && g.has_isolated_vertices() {
        return Err(Error::domain(format!(
            "the {} product is only defined on graphs without isolated vertices",
            kind.symbol()
        )));
    }
    decompose_rec(kind, &canonicalize(g), 0)
}

fn decompose_rec(
    kind: ProductKind,
    g: &CanonicalGraph,
    depth: usize,
) -> Result<ConnectedPolynomial> {
    if depth > DECOMPOSE_DEPTH_LIMIT {
        return Err(Error::internal(
            "connected decomposition exceeded its depth limit".to_string(),
        ));
    }
    if g.vertex_count() == 0 {
        return Ok(ConnectedPolynomial::one());
    }
    let comps = g.component_multiset();
    if comps.len() == 1 && comps[0].1 == 1 {
        return Ok(ConnectedPolynomial::variable(g.clone()));
    }
    let key = (kind, g.encoding().to_string());
    if let Some(hit) = DECOMPOSE_CACHE.lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let g1 = comps[0].0.clone();
    let mut rest = Graph::empty();
    for (i, (c, mult)) in comps.iter().enumerate() {
        let copies = if i == 0 { mult - 1 } else { *mult };
        for _ in 0..copies {
            rest = rest.disjoint_union(c.graph());
        }
    }
    let p = product(kind, g1.graph(), &rest)?;
    let leading = p.coefficient(g);
    if leading.is_zero() {
        return Err(Error::internal(
            "component product lost its leading term".to_string(),
        ));
    }
    let mut acc = decompose_rec(kind, &canonicalize(&rest), depth + 1)?.mul_variable(&g1);
    for (eta, coeff) in p.terms() {
        if eta == g {
            continue;
        }
        let sub = decompose_rec(kind, eta, depth + 1)?;
        acc = acc.sub(&sub.scale(coeff));
    }
    let result = acc.scale(&(Rat::one() / leading));
    DECOMPOSE_CACHE.lock().unwrap().insert(key, result.clone());
    Ok(result)
}

/// Substitutes basis classes back in and multiplies out; the result must be
/// the class of the decomposed graph again.
pub fn evaluate_polynomial(kind: ProductKind, poly: &ConnectedPolynomial) -> Result<GraphSum> {
    let mut acc = GraphSum::zero();
    for (m, c) in poly.terms() {
        let mut term = GraphSum::basis(canonicalize(&Graph::empty()));
        for (v, power) in m {
            for _ in 0..*power {
                term = product_sums(kind, &term, &GraphSum::basis(v.clone()))?;
            }
        }
        acc = acc.add(&term.scale(c));
    }
    Ok(acc)
}

/// The polynomial that reproduces counts of `g` from counts of connected
/// graphs, valid because the mode is a character of its paired product.
pub fn counting_polynomial(mode: CountingMode, g: &Graph) -> Result<ConnectedPolynomial> {
    decompose_connected(mode.character_product(), g)
}

/// Evaluates the counting polynomial of `g` against a host and mode.
pub fn count_via_polynomial(mode: CountingMode, g: &Graph, lambda: &Graph) -> Result<Rat> {
    let poly = counting_polynomial(mode, g)?;
    poly.evaluate_with(|c| count(mode, c.graph(), lambda))
}

/// The change of basis between graph classes and monomials in connected
/// classes over a universe. Column j of `forward` expands the monomial
/// attached to the j-th class (its component multiset) in the graph basis;
/// `inverse` is its exact inverse, whose columns are the decompositions.
#[derive(Clone, Debug)]
pub struct BasisMatrix {
    pub classes: Vec<CanonicalGraph>,
    pub monomials: Vec<Monomial>,
    pub forward: Vec<Vec<Rat>>,
    pub inverse: Vec<Vec<Rat>>,
}

impl BasisMatrix {
    fn index_of(&self, g: &CanonicalGraph) -> Option<usize> {
        self.classes.binary_search(g).ok()
    }

    pub fn forward_entry(&self, row: &CanonicalGraph, col: &CanonicalGraph) -> Option<&Rat> {
        Some(&self.forward[self.index_of(row)?][self.index_of(col)?])
    }

    pub fn inverse_entry(&self, row: &CanonicalGraph, col: &CanonicalGraph) -> Option<&Rat> {
        Some(&self.inverse[self.index_of(row)?][self.index_of(col)?])
    }

    pub fn to_json(&self) -> serde_json::Value {
        let dump = |m: &Vec<Vec<Rat>>| {
            serde_json::Value::Array(
                m.iter()
                    .map(|row| {
                        serde_json::Value::Array(
                            row.iter()
                                .map(|c| serde_json::Value::String(format_rat(c)))
                                .collect(),
                        )
                    })
                    .collect(),
            )
        };
        serde_json::json!({
            "classes": self.classes.iter().map(|c| c.encoding().to_string()).collect::<Vec<_>>(),
            "monomials": self.monomials.iter().map(format_monomial).collect::<Vec<_>>(),
            "forward": dump(&self.forward),
            "inverse": dump(&self.inverse),
        })
    }
}

fn check_universe(kind: ProductKind, universe: &GraphUniverse) -> Result<()> {
    match kind {
        ProductKind::EdgeShuffle | ProductKind::EdgeQuasiShuffle => {
            if universe.bound_kind != BoundKind::MaxEdges || !universe.no_isolated {
                return Err(Error::domain(format!(
                    "the {} product needs an edge-bounded universe without isolated vertices",
                    kind.symbol()
                )));
            }
        }
        ProductKind::VertexShuffle | ProductKind::VertexQuasiShuffle => {
            if universe.bound_kind != BoundKind::MaxVertices || universe.no_isolated {
                return Err(Error::domain(format!(
                    "the {} product needs a vertex-bounded universe including isolated vertices",
                    kind.symbol()
                )));
            }
        }
        ProductKind::DisjointUnion | ProductKind::DividedPowers => {}
    }
    Ok(())
}

/// Builds the basis-change matrix for the product over the universe. The
/// universe's bound must be a filtration for the product, so the edge
/// products take edge-bounded universes and the vertex products take
/// vertex-bounded ones.
pub fn basis_matrix(kind: ProductKind, universe: &GraphUniverse) -> Result<BasisMatrix> {
    check_universe(kind, universe)?;
    let classes: Vec<CanonicalGraph> = universe.members().to_vec();
    let n = classes.len();
    let monomials: Vec<Monomial> = classes
        .iter()
        .map(|c| c.component_multiset().into_iter().collect())
        .collect();
    let index: BTreeMap<&CanonicalGraph, usize> =
        classes.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut forward = vec![vec![Rat::zero(); n]; n];
    for (j, m) in monomials.iter().enumerate() {
        let mut term = GraphSum::basis(canonicalize(&Graph::empty()));
        for (v, power) in m {
            for _ in 0..*power {
                term = product_sums(kind, &term, &GraphSum::basis(v.clone()))?;
            }
        }
        for (g, c) in term.terms() {
            let i = *index.get(g).ok_or_else(|| {
                Error::internal(format!(
                    "product support escaped the universe at {}",
                    g.encoding()
                ))
            })?;
            forward[i][j] = c.clone();
        }
    }
    let inverse = invert_matrix(&forward)?;
    Ok(BasisMatrix {
        classes,
        monomials,
        forward,
        inverse,
    })
}

/// Exact Gauss–Jordan inversion over the rationals.
pub fn invert_matrix(m: &[Vec<Rat>]) -> Result<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::domain("matrix is singular".to_string()))?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= p.clone();
            inv[col][j] /= p.clone();
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for j in 0..n {
                let x = &a[col][j] * &factor;
                a[r][j] -= x;
                let y = &inv[col][j] * &factor;
                inv[r][j] -= y;
            }
        }
    }
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, rat_frac};
    use crate::universe::enumerate_graphs;

    fn cg(g: &Graph) -> CanonicalGraph {
        canonicalize(g)
    }

    fn mono(parts: &[(&Graph, usize)]) -> Monomial {
        parts.iter().map(|&(g, p)| (cg(g), p)).collect()
    }

    #[test]
    fn two_edges_under_quasi_shuffle() {
        let ee = names::edge().disjoint_union(&names::edge());
        let p = decompose_connected(ProductKind::EdgeQuasiShuffle, &ee).unwrap();
        let mut want = ConnectedPolynomial::zero();
        want.add_term(mono(&[(&names::edge(), 2)]), rat_frac(1, 2));
        want.add_term(mono(&[(&names::edge(), 1)]), rat_frac(-1, 2));
        want.add_term(mono(&[(&names::cherry(), 1)]), rat(-1));
        assert_eq!(p, want);
        assert_eq!(format!("{p}"), "-1/2·x_edge + 1/2·x_edge^2 - x_cherry");
    }

    #[test]
    fn connected_graphs_are_variables() {
        for g in [names::edge(), names::cherry(), names::k4()] {
            for kind in [
                ProductKind::DisjointUnion,
                ProductKind::EdgeQuasiShuffle,
                ProductKind::VertexQuasiShuffle,
            ] {
                assert_eq!(
                    decompose_connected(kind, &g).unwrap(),
                    ConnectedPolynomial::variable(cg(&g)),
                    "{kind:?}"
                );
            }
        }
    }

    #[test]
    fn decomposition_round_trips() {
        let graphs = [
            names::edge().disjoint_union(&names::edge()),
            names::by_name("cherry.edge").unwrap(),
            names::by_name("edge.edge.edge").unwrap(),
            names::by_name("edge.vertex").unwrap(),
            names::by_name("vertex.vertex").unwrap(),
        ];
        for g in &graphs {
            for kind in [
                ProductKind::DisjointUnion,
                ProductKind::DividedPowers,
                ProductKind::EdgeShuffle,
                ProductKind::EdgeQuasiShuffle,
                ProductKind::VertexShuffle,
                ProductKind::VertexQuasiShuffle,
            ] {
                if kind.requires_no_isolated() && g.has_isolated_vertices() {
                    assert!(decompose_connected(kind, g).is_err());
                    continue;
                }
                if matches!(
                    kind,
                    ProductKind::VertexShuffle | ProductKind::VertexQuasiShuffle
                ) && g.vertex_count() > 5
                {
                    continue;
                }
                let p = decompose_connected(kind, g).unwrap();
                assert_eq!(
                    evaluate_polynomial(kind, &p).unwrap(),
                    GraphSum::from_graph(g),
                    "{kind:?} {g:?}"
                );
            }
        }
    }

    #[test]
    fn counting_polynomials_reproduce_counts() {
        let patterns = [
            names::edge().disjoint_union(&names::edge()),
            names::by_name("cherry.edge").unwrap(),
        ];
        let hosts = [names::k4(), names::paw(), names::by_name("C4.edge").unwrap()];
        for mode in [
            CountingMode::EdgeInjective,
            CountingMode::VertexInjective,
            CountingMode::Hom,
            CountingMode::HomDivAut,
        ] {
            for g in &patterns {
                for lambda in &hosts {
                    assert_eq!(
                        count_via_polynomial(mode, g, lambda).unwrap(),
                        count(mode, g, lambda).unwrap(),
                        "{mode:?} {g:?} {lambda:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn quasi_shuffle_matrix_three_edges() {
        let u = enumerate_graphs(BoundKind::MaxEdges, 3, true).unwrap();
        let m = basis_matrix(ProductKind::EdgeQuasiShuffle, &u).unwrap();
        assert_eq!(m.classes.len(), 9);
        let ee = names::edge().disjoint_union(&names::edge());
        let che = names::cherry().disjoint_union(&names::edge());
        let eee = names::by_name("edge.edge.edge").unwrap();
        let order = [
            Graph::empty(),
            names::edge(),
            names::cherry(),
            ee.clone(),
            names::triangle(),
            names::three_star(),
            names::three_path(),
            che.clone(),
            eee.clone(),
        ];
        let forward_rows: [[i64; 9]; 9] = [
            [1, 0, 0, 0, 0, 0, 0, 0, 0],
            [0, 1, 0, 1, 0, 0, 0, 0, 1],
            [0, 0, 1, 2, 0, 0, 0, 2, 6],
            [0, 0, 0, 2, 0, 0, 0, 0, 6],
            [0, 0, 0, 0, 1, 0, 0, 3, 6],
            [0, 0, 0, 0, 0, 1, 0, 3, 6],
            [0, 0, 0, 0, 0, 0, 1, 2, 6],
            [0, 0, 0, 0, 0, 0, 0, 1, 6],
            [0, 0, 0, 0, 0, 0, 0, 0, 6],
        ];
        for (i, row_graph) in order.iter().enumerate() {
            for (j, col_graph) in order.iter().enumerate() {
                assert_eq!(
                    m.forward_entry(&cg(row_graph), &cg(col_graph)).unwrap(),
                    &rat(forward_rows[i][j]),
                    "forward[{i}][{j}]"
                );
            }
        }
        let inverse_rows: [[(i64, i64); 9]; 9] = [
            [(1, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)],
            [(0, 1), (1, 1), (0, 1), (-1, 2), (0, 1), (0, 1), (0, 1), (0, 1), (1, 3)],
            [(0, 1), (0, 1), (1, 1), (-1, 1), (0, 1), (0, 1), (0, 1), (-2, 1), (2, 1)],
            [(0, 1), (0, 1), (0, 1), (1, 2), (0, 1), (0, 1), (0, 1), (0, 1), (-1, 2)],
            [(0, 1), (0, 1), (0, 1), (0, 1), (1, 1), (0, 1), (0, 1), (-3, 1), (2, 1)],
            [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (1, 1), (0, 1), (-3, 1), (2, 1)],
            [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (1, 1), (-2, 1), (1, 1)],
            [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (1, 1), (-1, 1)],
            [(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (1, 6)],
        ];
        for (i, row_graph) in order.iter().enumerate() {
            for (j, col_graph) in order.iter().enumerate() {
                let (num, den) = inverse_rows[i][j];
                assert_eq!(
                    m.inverse_entry(&cg(row_graph), &cg(col_graph)).unwrap(),
                    &rat_frac(num, den),
                    "inverse[{i}][{j}]"
                );
            }
        }
    }

    #[test]
    fn matrix_inverse_is_exact() {
        let u = enumerate_graphs(BoundKind::MaxEdges, 3, true).unwrap();
        for kind in [
            ProductKind::DisjointUnion,
            ProductKind::DividedPowers,
            ProductKind::EdgeShuffle,
            ProductKind::EdgeQuasiShuffle,
        ] {
            let m = basis_matrix(kind, &u).unwrap();
            let n = m.classes.len();
            for i in 0..n {
                for j in 0..n {
                    let mut acc = Rat::zero();
                    for k in 0..n {
                        acc += &m.forward[i][k] * &m.inverse[k][j];
                    }
                    let want = if i == j { Rat::one() } else { Rat::zero() };
                    assert_eq!(acc, want, "{kind:?} ({i},{j})");
                }
            }
            // Column j of the inverse is the decomposition of class j.
            for (j, g) in m.classes.iter().enumerate() {
                let poly = decompose_connected(kind, g.graph()).unwrap();
                for (i, mono) in m.monomials.iter().enumerate() {
                    assert_eq!(poly.coefficient(mono), m.inverse[i][j], "{kind:?}");
                }
            }
        }
    }

    #[test]
    fn vertex_product_matrix() {
        let u = enumerate_graphs(BoundKind::MaxVertices, 3, false).unwrap();
        let m = basis_matrix(ProductKind::VertexQuasiShuffle, &u).unwrap();
        assert_eq!(m.classes.len(), 8);
        let n = m.classes.len();
        for i in 0..n {
            for j in 0..n {
                let mut acc = Rat::zero();
                for k in 0..n {
                    acc += &m.forward[i][k] * &m.inverse[k][j];
                }
                let want = if i == j { Rat::one() } else { Rat::zero() };
                assert_eq!(acc, want, "({i},{j})");
            }
        }
        // Mismatched universes are rejected up front.
        assert!(basis_matrix(ProductKind::EdgeQuasiShuffle, &u).is_err());
        let ue = enumerate_graphs(BoundKind::MaxEdges, 2, true).unwrap();
        assert!(basis_matrix(ProductKind::VertexQuasiShuffle, &ue).is_err());
    }

    #[test]
    fn singular_matrix_is_rejected() {
        let m = vec![
            vec![rat(1), rat(2)],
            vec![rat(2), rat(4)],
        ];
        assert!(invert_matrix(&m).is_err());
    }
}
