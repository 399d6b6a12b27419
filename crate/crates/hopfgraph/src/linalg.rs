//! Exact scalars and formal sums over canonical graphs.
//!
//! Coefficients are arbitrary-precision rationals; nothing in the crate ever
//! touches floating point. `GraphSum` doubles as a primal vector and as a
//! (truncated) dual functional: the two play different roles only through
//! the operations applied to them. `Functional` additionally records the
//! truncation of functionals that do not live in the graded dual (like the
//! zeta functional or homomorphism signatures), so pairing against a graph
//! outside the recorded range is an error rather than a silent zero.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{canonicalize, CanonicalGraph, Graph};
use crate::names;
use crate::universe::GraphUniverse;

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_u64(n: u64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// A finitely supported map from isomorphism classes to rationals. Zero
/// coefficients are never stored, so equality is structural.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GraphSum {
    terms: BTreeMap<CanonicalGraph, Rat>,
}

impl GraphSum {
    pub fn zero() -> GraphSum {
        GraphSum::default()
    }

    pub fn basis(g: CanonicalGraph) -> GraphSum {
        let mut s = GraphSum::zero();
        s.add_term(g, Rat::one());
        s
    }

    pub fn from_graph(g: &Graph) -> GraphSum {
        GraphSum::basis(canonicalize(g))
    }

    pub fn add_term(&mut self, g: CanonicalGraph, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(g) {
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

    pub fn coefficient(&self, g: &CanonicalGraph) -> Rat {
        self.terms.get(g).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CanonicalGraph, &Rat)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &CanonicalGraph> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &GraphSum) -> GraphSum {
        let mut out = self.clone();
        for (g, c) in other.terms() {
            out.add_term(g.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &GraphSum) -> GraphSum {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, r: &Rat) -> GraphSum {
        if r.is_zero() {
            return GraphSum::zero();
        }
        GraphSum {
            terms: self
                .terms
                .iter()
                .map(|(g, c)| (g.clone(), c * r))
                .collect(),
        }
    }

    pub fn neg(&self) -> GraphSum {
        self.scale(&-Rat::one())
    }

    /// Validates membership in the carrier without isolated vertices.
    pub fn check_no_isolated(&self) -> Result<()> {
        for g in self.support() {
            if g.graph().has_isolated_vertices() {
                return Err(Error::domain(format!(
                    "graph {} has isolated vertices",
                    g.encoding()
                )));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(g, c)| {
                    serde_json::json!({
                        "graph": g.encoding(),
                        "coeff": format_rat(c),
                    })
                })
                .collect(),
        )
    }
}

impl fmt::Display for GraphSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (g, c) in &self.terms {
            let name = names::display_name(g);
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
            if a.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "{}·{name}", format_rat(&a))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GraphSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GraphSum({self})")
    }
}

pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A finitely supported sum of two-fold tensors of classes.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorSum {
    terms: BTreeMap<(CanonicalGraph, CanonicalGraph), Rat>,
}

impl TensorSum {
    pub fn zero() -> TensorSum {
        TensorSum::default()
    }

    pub fn add_term(&mut self, left: CanonicalGraph, right: CanonicalGraph, c: Rat) {
        if c.is_zero() {
            return;
        }
        let key = (left, right);
        let entry = self.terms.entry(key.clone()).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn coefficient(&self, left: &CanonicalGraph, right: &CanonicalGraph) -> Rat {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(CanonicalGraph, CanonicalGraph), &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &TensorSum) -> TensorSum {
        let mut out = self.clone();
        for ((l, r), c) in other.terms() {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TensorSum) -> TensorSum {
        let mut out = self.clone();
        for ((l, r), c) in other.terms() {
            out.add_term(l.clone(), r.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, r: &Rat) -> TensorSum {
        if r.is_zero() {
            return TensorSum::zero();
        }
        TensorSum {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c * r))
                .collect(),
        }
    }

    /// Swaps the tensor legs.
    pub fn flip(&self) -> TensorSum {
        let mut out = TensorSum::zero();
        for ((l, r), c) in &self.terms {
            out.add_term(r.clone(), l.clone(), c.clone());
        }
        out
    }

    /// ⟨x ⊗ y, self⟩ for dual sums x, y.
    pub fn pair(&self, x: &GraphSum, y: &GraphSum) -> Rat {
        let mut acc = Rat::zero();
        for ((l, r), c) in &self.terms {
            let a = x.coefficient(l);
            if a.is_zero() {
                continue;
            }
            let b = y.coefficient(r);
            if b.is_zero() {
                continue;
            }
            acc += c * a * b;
        }
        acc
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|((l, r), c)| {
                    serde_json::json!({
                        "left": l.encoding(),
                        "right": r.encoding(),
                        "coeff": format_rat(c),
                    })
                })
                .collect(),
        )
    }
}

impl fmt::Display for TensorSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((l, r), c) in &self.terms {
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
            if !a.is_one() {
                write!(f, "{}·", format_rat(&a))?;
            }
            write!(f, "{}⊗{}", names::display_name(l), names::display_name(r))?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorSum({self})")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grading {
    VertexCount,
    EdgeCount,
    ConnectedComponents,
}

pub fn grade(g: &CanonicalGraph, grading: Grading) -> usize {
    match grading {
        Grading::VertexCount => g.vertex_count(),
        Grading::EdgeCount => g.edge_count(),
        Grading::ConnectedComponents => g.graph().connected_components().len(),
    }
}

pub fn filter_by_grade(x: &GraphSum, grading: Grading, n: usize) -> GraphSum {
    let mut out = GraphSum::zero();
    for (g, c) in x.terms() {
        if grade(g, grading) == n {
            out.add_term(g.clone(), c.clone());
        }
    }
    out
}

/// ⟨f, x⟩ = Σ_γ f_γ x_γ.
pub fn pairing(f: &GraphSum, x: &GraphSum) -> Rat {
    let mut acc = Rat::zero();
    let (small, large) = if f.len() <= x.len() { (f, x) } else { (x, f) };
    for (g, c) in small.terms() {
        let d = large.coefficient(g);
        if !d.is_zero() {
            acc += c * d;
        }
    }
    acc
}

/// ε: extracts the coefficient of the empty graph.
pub fn counit(x: &GraphSum) -> Rat {
    x.coefficient(&canonicalize(&Graph::empty()))
}

/// u: r ↦ r·e.
pub fn unit(r: &Rat) -> GraphSum {
    GraphSum::basis(canonicalize(&Graph::empty())).scale(r)
}

/// A functional with an optional truncation certificate: evaluation outside
/// the declared range is a domain error, since the coefficient there was
/// never computed.
#[derive(Clone, Debug)]
pub struct Functional {
    pub terms: GraphSum,
    pub truncation: Option<(Grading, usize)>,
}

impl Functional {
    pub fn complete(terms: GraphSum) -> Functional {
        Functional {
            terms,
            truncation: None,
        }
    }

    pub fn truncated(terms: GraphSum, grading: Grading, bound: usize) -> Functional {
        Functional {
            terms,
            truncation: Some((grading, bound)),
        }
    }

    pub fn dual_basis(g: CanonicalGraph) -> Functional {
        Functional::complete(GraphSum::basis(g))
    }

    pub fn eval(&self, g: &CanonicalGraph) -> Result<Rat> {
        if let Some((grading, bound)) = self.truncation {
            if grade(g, grading) > bound {
                return Err(Error::domain(format!(
                    "functional truncated at {:?} <= {}, asked about a graph of grade {}",
                    grading,
                    bound,
                    grade(g, grading)
                )));
            }
        }
        Ok(self.terms.coefficient(g))
    }
}

/// The zeta functional (value 1 on every class), truncated to a universe.
pub fn zeta(universe: &GraphUniverse) -> Functional {
    let mut terms = GraphSum::zero();
    for g in universe.members() {
        terms.add_term(g.clone(), Rat::one());
    }
    let grading = match universe.bound_kind {
        crate::universe::BoundKind::MaxVertices => Grading::VertexCount,
        crate::universe::BoundKind::MaxEdges => Grading::EdgeCount,
    };
    Functional::truncated(terms, grading, universe.bound)
}
