//! Command-line front end for the hopfgraph library.
//!
//! Exit codes: 0 success, 1 usage or domain error, 2 verification failure.

use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hopfgraph::basis::{basis_matrix, decompose_connected};
use hopfgraph::coproducts::{
    coassociativity_holds, cocommutativity_holds, coproduct, counit_law_holds, CoproductKind,
};
use hopfgraph::counting::{count, signature, CountingMode};
use hopfgraph::error::Error;
use hopfgraph::graph::Graph;
use hopfgraph::hopf::{
    antipode, carrier_coproducts, carrier_products, check_antipode_axiom, check_compatibility,
    coproduct_grading_verdict, is_bialgebra, is_hopf, product_grading_verdict, Carrier,
    GradingVerdict, HopfConfig,
};
use hopfgraph::io::{parse_edgelist, parse_graph6};
use hopfgraph::linalg::{format_rat, GraphSum, Grading, Rat, TensorSum};
use hopfgraph::names::{by_name, display_name};
use hopfgraph::products::{product_sums, unit_law_holds, ProductKind};
use hopfgraph::translate::{translate_inverse_sum, translate_sum, TranslationKind};
use hopfgraph::universe::{enumerate_graphs, BoundKind};
use num::{BigInt, BigRational, Signed, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(
    name = "hopfgraph",
    about = "Exact computations in combinatorial Hopf algebras of finite simple graphs",
    version
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Number of worker threads for internal parallelism (0 = automatic).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    /// Seed for randomized verification sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Ei,
    Vi,
    Hom,
    Homdp,
}

impl ModeArg {
    fn mode(self) -> CountingMode {
        match self {
            ModeArg::Ei => CountingMode::EdgeInjective,
            ModeArg::Vi => CountingMode::VertexInjective,
            ModeArg::Hom => CountingMode::Hom,
            ModeArg::Homdp => CountingMode::HomDivAut,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductArg {
    /// Disjoint union.
    Du,
    /// Divided powers.
    Dp,
    /// Edge shuffle.
    Sh,
    /// Edge quasi-shuffle.
    Qs,
    /// Vertex shuffle.
    Is,
    /// Vertex quasi-shuffle.
    Qis,
}

impl ProductArg {
    fn kind(self) -> ProductKind {
        match self {
            ProductArg::Du => ProductKind::DisjointUnion,
            ProductArg::Dp => ProductKind::DividedPowers,
            ProductArg::Sh => ProductKind::EdgeShuffle,
            ProductArg::Qs => ProductKind::EdgeQuasiShuffle,
            ProductArg::Is => ProductKind::VertexShuffle,
            ProductArg::Qis => ProductKind::VertexQuasiShuffle,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CoproductArg {
    Du,
    Dp,
    Sh,
    Qs,
    Is,
    Qis,
    /// Overlapping part of the quasi-shuffle coproduct.
    Ol,
}

impl CoproductArg {
    fn kind(self) -> CoproductKind {
        match self {
            CoproductArg::Du => CoproductKind::DisjointUnion,
            CoproductArg::Dp => CoproductKind::DividedPowers,
            CoproductArg::Sh => CoproductKind::EdgeShuffle,
            CoproductArg::Qs => CoproductKind::EdgeQuasiShuffle,
            CoproductArg::Is => CoproductKind::VertexShuffle,
            CoproductArg::Qis => CoproductKind::VertexQuasiShuffle,
            CoproductArg::Ol => CoproductKind::Overlap,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TranslateArg {
    /// Vertex-injective counts from edge-injective counts.
    ViEi,
    /// Edge-injective counts from homomorphism counts.
    EiHom,
    /// Vertex-injective counts from homomorphism counts.
    ViHom,
}

impl TranslateArg {
    fn kind(self) -> TranslationKind {
        match self {
            TranslateArg::ViEi => TranslationKind::EiToVi,
            TranslateArg::EiHom => TranslationKind::HomToEi,
            TranslateArg::ViHom => TranslationKind::HomToVi,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CarrierArg {
    /// Choose the carrier from the (co)product domains.
    Auto,
    /// All finite simple graphs.
    All,
    /// Graphs without isolated vertices.
    NoIsolated,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Bialgebra,
    Hopf,
    Grading,
    Coassoc,
}

#[derive(Subcommand)]
enum Command {
    /// Count occurrences of a pattern inside a sample graph.
    Count {
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Pattern graph (name, graph6 string, or file path).
        #[arg(long)]
        pattern: String,
        /// Sample graph (name, graph6 string, or file path).
        #[arg(long)]
        sample: String,
    },
    /// Compute the full counting signature of a sample graph.
    Signature {
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long)]
        sample: String,
        /// Truncate patterns to at most this many edges (ei/vi modes).
        #[arg(long)]
        max_edges: Option<usize>,
        /// Truncate patterns to at most this many vertices (required for hom modes).
        #[arg(long)]
        max_vertices: Option<usize>,
    },
    /// Multiply two graphs.
    Product {
        #[arg(long, value_enum)]
        kind: ProductArg,
        g: String,
        h: String,
    },
    /// Apply a coproduct to a graph.
    Coproduct {
        #[arg(long, value_enum)]
        kind: CoproductArg,
        g: String,
    },
    /// Apply the antipode of a Hopf configuration to a graph.
    Antipode {
        #[arg(long, value_enum)]
        product: ProductArg,
        #[arg(long, value_enum)]
        coproduct: CoproductArg,
        #[arg(long, value_enum, default_value_t = CarrierArg::Auto)]
        carrier: CarrierArg,
        g: String,
    },
    /// Translate a counting functional between counting semantics.
    Translate {
        #[arg(long, value_enum)]
        kind: TranslateArg,
        /// Apply the inverse translation.
        #[arg(long)]
        inverse: bool,
        /// Graph or formal sum such as "2*edge + cherry".
        input: String,
    },
    /// Express a graph as a polynomial in connected graphs under a product.
    Decompose {
        #[arg(long, value_enum)]
        product: ProductArg,
        g: String,
    },
    /// Change-of-basis matrix between disjoint unions and product monomials.
    BasisMatrix {
        #[arg(long, value_enum)]
        product: ProductArg,
        /// Universe bound: graphs with at most this many edges (edge products).
        #[arg(long)]
        max_edges: Option<usize>,
        /// Universe bound: graphs with at most this many vertices (vertex products).
        #[arg(long)]
        max_vertices: Option<usize>,
        /// Print the inverse matrix instead.
        #[arg(long)]
        inverse: bool,
    },
    /// Run a verification suite over a bounded universe of graphs.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// Universe bound (edges for no-isolated carriers, vertices otherwise).
        #[arg(long)]
        bound: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        // Must happen before the global rayon pool is first touched.
        std::env::set_var("RAYON_NUM_THREADS", cli.jobs.to_string());
    }
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Count {
            mode,
            pattern,
            sample,
        } => {
            let pattern = load_graph(pattern)?;
            let sample = load_graph(sample)?;
            let c = count(mode.mode(), &pattern, &sample)?;
            match cli.format {
                Format::Text => println!("{}", format_rat(&c)),
                Format::Json => println!(
                    "{}",
                    serde_json::json!({ "count": format_rat(&c) })
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Signature {
            mode,
            sample,
            max_edges,
            max_vertices,
        } => {
            let sample = load_graph(sample)?;
            let mode = mode.mode();
            let truncation = match mode {
                CountingMode::EdgeInjective | CountingMode::VertexInjective => {
                    if max_vertices.is_some() {
                        return Err(Error::domain(
                            "injective signatures are truncated by --max-edges, not --max-vertices",
                        ));
                    }
                    *max_edges
                }
                CountingMode::Hom | CountingMode::HomDivAut => {
                    if max_edges.is_some() {
                        return Err(Error::domain(
                            "hom signatures are truncated by --max-vertices, not --max-edges",
                        ));
                    }
                    Some(max_vertices.ok_or_else(|| {
                        Error::domain("hom signatures require --max-vertices")
                    })?)
                }
            };
            let sig = signature(mode, &sample, truncation)?;
            match cli.format {
                Format::Text => {
                    if let Some((grading, bound)) = sig.functional.truncation {
                        println!("# truncated: {grading:?} <= {bound}");
                    }
                    for (g, c) in sig.functional.terms.terms() {
                        println!("{}\t{}", format_rat(c), display_name(g));
                    }
                }
                Format::Json => {
                    let truncation = sig
                        .functional
                        .truncation
                        .map(|(g, b)| serde_json::json!({ "grading": format!("{g:?}"), "bound": b }))
                        .unwrap_or(serde_json::Value::Null);
                    println!(
                        "{}",
                        serde_json::json!({
                            "mode": mode.label(),
                            "truncation": truncation,
                            "terms": sig.functional.terms.to_json(),
                        })
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Product { kind, g, h } => {
            let x = load_sum(g)?;
            let y = load_sum(h)?;
            let p = product_sums(kind.kind(), &x, &y)?;
            emit_sum(cli.format, &p);
            Ok(ExitCode::SUCCESS)
        }
        Command::Coproduct { kind, g } => {
            let g = load_graph(g)?;
            let d = coproduct(kind.kind(), &g)?;
            emit_tensor(cli.format, &d);
            Ok(ExitCode::SUCCESS)
        }
        Command::Antipode {
            product,
            coproduct,
            carrier,
            g,
        } => {
            let g = load_graph(g)?;
            let config = resolve_config(product.kind(), coproduct.kind(), *carrier)?;
            let s = antipode(config, &g)?;
            emit_sum(cli.format, &s);
            Ok(ExitCode::SUCCESS)
        }
        Command::Translate {
            kind,
            inverse,
            input,
        } => {
            let x = load_sum(input)?;
            let out = if *inverse {
                translate_inverse_sum(kind.kind(), &x)?
            } else {
                translate_sum(kind.kind(), &x)?
            };
            emit_sum(cli.format, &out);
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose { product, g } => {
            let g = load_graph(g)?;
            let poly = decompose_connected(product.kind(), &g)?;
            match cli.format {
                Format::Text => println!("{poly}"),
                Format::Json => {
                    let terms: Vec<serde_json::Value> = poly
                        .terms()
                        .map(|(m, c)| {
                            let vars: Vec<serde_json::Value> = m
                                .iter()
                                .map(|(g, k)| {
                                    serde_json::json!({ "graph": g.encoding(), "power": k })
                                })
                                .collect();
                            serde_json::json!({ "monomial": vars, "coeff": format_rat(c) })
                        })
                        .collect();
                    println!("{}", serde_json::Value::Array(terms));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::BasisMatrix {
            product,
            max_edges,
            max_vertices,
            inverse,
        } => {
            let kind = product.kind();
            let universe = match (max_edges, max_vertices) {
                (Some(m), None) => enumerate_graphs(BoundKind::MaxEdges, *m, true)?,
                (None, Some(n)) => enumerate_graphs(BoundKind::MaxVertices, *n, false)?,
                _ => {
                    return Err(Error::domain(
                        "pass exactly one of --max-edges (edge products) or --max-vertices (vertex products)",
                    ))
                }
            };
            let m = basis_matrix(kind, &universe)?;
            let picked = if *inverse { &m.inverse } else { &m.forward };
            match cli.format {
                Format::Text => {
                    let names: Vec<String> =
                        m.classes.iter().map(display_name).collect();
                    println!("# columns: {}", names.join(", "));
                    for (row, name) in picked.iter().zip(&names) {
                        let cells: Vec<String> = row.iter().map(format_rat).collect();
                        println!("{name}: {}", cells.join(" "));
                    }
                }
                Format::Json => println!("{}", m.to_json()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, bound } => match suite {
            SuiteArg::Bialgebra => verify_bialgebra(cli, *bound),
            SuiteArg::Hopf => verify_hopf(cli, *bound),
            SuiteArg::Grading => verify_grading(cli, *bound),
            SuiteArg::Coassoc => verify_coassoc(cli, *bound),
        },
    }
}

/// Parses a graph given as a named graph ("cherry", "edge.vertex"), a file
/// path (graph6 or edge list), or an inline graph6 string.
fn load_graph(spec: &str) -> Result<Graph, Error> {
    if let Some(g) = by_name(spec) {
        return Ok(g);
    }
    let path = Path::new(spec);
    if path.exists() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::domain(format!("cannot read {spec}: {e}")))?;
        let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
        return match ext {
            "g6" => parse_graph6(text.trim()),
            "el" => parse_edgelist(&text),
            _ => {
                if text.contains("n=") {
                    parse_edgelist(&text)
                } else {
                    parse_graph6(text.trim())
                }
            }
        };
    }
    parse_graph6(spec).map_err(|_| {
        Error::domain(format!(
            "'{spec}' is not a known graph name, an existing file, or a graph6 string"
        ))
    })
}

/// Parses a formal sum such as "2*edge + 1/2*cherry - triangle". A bare graph
/// is the sum with coefficient one.
fn load_sum(spec: &str) -> Result<GraphSum, Error> {
    let mut out = GraphSum::zero();
    // Split into signed terms; '-' only acts as a separator at the top level.
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    for ch in spec.chars() {
        match ch {
            '+' | '-' if !current.trim().is_empty() => {
                terms.push((negative, current.trim().to_string()));
                current = String::new();
                negative = ch == '-';
            }
            '-' => negative = true,
            _ => current.push(ch),
        }
    }
    if !current.trim().is_empty() {
        terms.push((negative, current.trim().to_string()));
    }
    if terms.is_empty() {
        return Err(Error::domain("empty graph sum"));
    }
    for (neg, term) in terms {
        let (coeff, graph_part) = match term.split_once(['*', '·']) {
            Some((c, g)) => (parse_rat(c.trim())?, g.trim()),
            None => (Rat::from(BigInt::from(1)), term.as_str()),
        };
        let coeff = if neg { -coeff } else { coeff };
        let g = load_graph(graph_part)?;
        out.add_term(hopfgraph::canonicalize(&g), coeff);
    }
    Ok(out)
}

fn parse_rat(text: &str) -> Result<Rat, Error> {
    let parse_int = |t: &str| {
        t.parse::<BigInt>()
            .map_err(|_| Error::domain(format!("'{t}' is not an integer")))
    };
    match text.split_once('/') {
        Some((p, q)) => {
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(Error::domain("zero denominator"));
            }
            Ok(BigRational::new(parse_int(p)?, q))
        }
        None => Ok(Rat::from(parse_int(text)?)),
    }
}

fn resolve_config(
    product: ProductKind,
    coproduct: CoproductKind,
    carrier: CarrierArg,
) -> Result<HopfConfig, Error> {
    let carrier = match carrier {
        CarrierArg::All => Carrier::AllGraphs,
        CarrierArg::NoIsolated => Carrier::NoIsolated,
        CarrierArg::Auto => {
            if product.requires_no_isolated() || coproduct.requires_no_isolated() {
                Carrier::NoIsolated
            } else {
                Carrier::AllGraphs
            }
        }
    };
    let config = HopfConfig {
        carrier,
        product,
        coproduct,
    };
    if !carrier_products(carrier).contains(&product)
        || !carrier_coproducts(carrier).contains(&coproduct)
    {
        return Err(Error::domain(format!(
            "configuration ({}, {}) is not defined on the {} carrier",
            product.symbol(),
            coproduct.symbol(),
            carrier.label()
        )));
    }
    Ok(config)
}

/// Prints a sum with every coefficient explicit, e.g.
/// "1·edge + 2·cherry + 2·edge⊔edge".
fn format_sum_explicit(x: &GraphSum) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (g, c)) in x.terms().enumerate() {
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&format!("{}·{}", format_rat(&c.abs()), display_name(g)));
    }
    out
}

fn emit_sum(format: Format, x: &GraphSum) {
    match format {
        Format::Text => println!("{}", format_sum_explicit(x)),
        Format::Json => println!("{}", x.to_json()),
    }
}

fn emit_tensor(format: Format, x: &TensorSum) {
    match format {
        Format::Text => println!("{x}"),
        Format::Json => println!("{}", x.to_json()),
    }
}

fn carrier_universe(carrier: Carrier, bound: usize) -> Result<Vec<Graph>, Error> {
    let universe = match carrier {
        Carrier::NoIsolated => enumerate_graphs(BoundKind::MaxEdges, bound, true)?,
        Carrier::AllGraphs => enumerate_graphs(BoundKind::MaxVertices, bound, false)?,
    };
    Ok(universe.members().iter().map(|c| c.graph().clone()).collect())
}

/// Pairs to test for a binary law; seeded subsampling keeps large sweeps
/// tractable while staying reproducible.
fn sample_pairs(members: &[Graph], seed: u64, limit: usize) -> Vec<(Graph, Graph)> {
    let mut pairs: Vec<(Graph, Graph)> = Vec::new();
    for g in members {
        for h in members {
            pairs.push((g.clone(), h.clone()));
        }
    }
    if pairs.len() > limit {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        pairs.shuffle(&mut rng);
        pairs.truncate(limit);
    }
    pairs
}

fn verify_bialgebra(cli: &Cli, bound: usize) -> Result<ExitCode, Error> {
    let mut failures: Vec<serde_json::Value> = Vec::new();
    let mut rows: Vec<serde_json::Value> = Vec::new();
    for carrier in [Carrier::AllGraphs, Carrier::NoIsolated] {
        let members = carrier_universe(carrier, bound)?;
        let pairs = sample_pairs(&members, cli.seed, 400);
        for &product in carrier_products(carrier) {
            for &coproduct in carrier_coproducts(carrier) {
                let config = HopfConfig {
                    carrier,
                    product,
                    coproduct,
                };
                let expected = is_bialgebra(config);
                let mut counterexample = None;
                for (g, h) in &pairs {
                    if let Some(ce) = check_compatibility(config, g, h)? {
                        counterexample = Some((g.clone(), h.clone(), ce));
                        break;
                    }
                }
                let observed = counterexample.is_none();
                let ok = observed == expected;
                if cli.format == Format::Text {
                    let note = match &counterexample {
                        Some((g, h, ce)) => format!(
                            " counterexample: Δ({}·{}) vs Δ⊗Δ at {}⊗{} ({} vs {})",
                            display_name(&hopfgraph::canonicalize(g)),
                            display_name(&hopfgraph::canonicalize(h)),
                            display_name(&ce.left),
                            display_name(&ce.right),
                            format_rat(&ce.from_product),
                            format_rat(&ce.from_tensors),
                        ),
                        None => String::new(),
                    };
                    println!(
                        "{} | {:<16} | {:<24} | bialgebra={} expected={} [{}]{}",
                        carrier.label(),
                        product.symbol(),
                        coproduct.symbol(),
                        if observed { "yes" } else { "no" },
                        if expected { "yes" } else { "no" },
                        if ok { "ok" } else { "FAIL" },
                        note
                    );
                }
                let row = serde_json::json!({
                    "carrier": carrier.label(),
                    "product": product.symbol(),
                    "coproduct": coproduct.symbol(),
                    "observed": observed,
                    "expected": expected,
                    "counterexample": counterexample.as_ref().map(|(g, h, ce)| serde_json::json!({
                        "g": hopfgraph::canonicalize(g).encoding(),
                        "h": hopfgraph::canonicalize(h).encoding(),
                        "left": ce.left.encoding(),
                        "right": ce.right.encoding(),
                        "from_product": format_rat(&ce.from_product),
                        "from_tensors": format_rat(&ce.from_tensors),
                    })),
                });
                if !ok {
                    failures.push(row.clone());
                }
                rows.push(row);
            }
        }
    }
    finish_suite(cli, rows, failures)
}

fn verify_hopf(cli: &Cli, bound: usize) -> Result<ExitCode, Error> {
    let mut failures: Vec<serde_json::Value> = Vec::new();
    let mut rows: Vec<serde_json::Value> = Vec::new();
    for carrier in [Carrier::AllGraphs, Carrier::NoIsolated] {
        let members = carrier_universe(carrier, bound)?;
        for &product in carrier_products(carrier) {
            for &coproduct in carrier_coproducts(carrier) {
                let config = HopfConfig {
                    carrier,
                    product,
                    coproduct,
                };
                if !is_bialgebra(config) {
                    continue;
                }
                let expected = is_hopf(config);
                let (observed, witness) = if expected {
                    let mut witness = None;
                    for g in &members {
                        if !check_antipode_axiom(config, g)? {
                            witness = Some(hopfgraph::canonicalize(g).encoding().to_string());
                            break;
                        }
                    }
                    (witness.is_none(), witness)
                } else {
                    // The antipode must be refused for non-Hopf bialgebras.
                    match antipode(config, &hopfgraph::names::edge()) {
                        Err(Error::Unsupported(_)) => (false, None),
                        _ => (true, None),
                    }
                };
                let ok = observed == expected;
                if cli.format == Format::Text {
                    println!(
                        "{} | {:<16} | {:<24} | hopf={} expected={} [{}]",
                        carrier.label(),
                        product.symbol(),
                        coproduct.symbol(),
                        if observed { "yes" } else { "no" },
                        if expected { "yes" } else { "no" },
                        if ok { "ok" } else { "FAIL" },
                    );
                }
                let row = serde_json::json!({
                    "carrier": carrier.label(),
                    "product": product.symbol(),
                    "coproduct": coproduct.symbol(),
                    "observed": observed,
                    "expected": expected,
                    "witness": witness,
                });
                if !ok {
                    failures.push(row.clone());
                }
                rows.push(row);
            }
        }
    }
    finish_suite(cli, rows, failures)
}

fn verify_grading(cli: &Cli, bound: usize) -> Result<ExitCode, Error> {
    let mut rows: Vec<serde_json::Value> = Vec::new();
    let gradings = [
        Grading::VertexCount,
        Grading::EdgeCount,
        Grading::ConnectedComponents,
    ];
    for carrier in [Carrier::AllGraphs, Carrier::NoIsolated] {
        let members = carrier_universe(carrier, bound)?;
        let pairs = sample_pairs(&members, cli.seed, 200);
        for &kind in carrier_coproducts(carrier) {
            for grading in gradings {
                let verdict = coproduct_grading_verdict(kind, grading, &members)?;
                report_grading(cli, &mut rows, carrier, "coproduct", kind.symbol(), grading, &verdict);
            }
        }
        for &kind in carrier_products(carrier) {
            for grading in gradings {
                let verdict = product_grading_verdict(kind, grading, &pairs)?;
                report_grading(cli, &mut rows, carrier, "product", kind.symbol(), grading, &verdict);
            }
        }
    }
    finish_suite(cli, rows, Vec::new())
}

fn report_grading(
    cli: &Cli,
    rows: &mut Vec<serde_json::Value>,
    carrier: Carrier,
    role: &str,
    name: &str,
    grading: Grading,
    verdict: &GradingVerdict,
) {
    let (label, witness) = match verdict {
        GradingVerdict::Graded => ("graded", None),
        GradingVerdict::Filtered { witness } => ("filtered", Some(witness.clone())),
        GradingVerdict::NonFiltered { witness } => ("non-filtered", Some(witness.clone())),
    };
    if cli.format == Format::Text {
        let note = witness
            .as_ref()
            .map(|w| format!(" witness: {w}"))
            .unwrap_or_default();
        println!(
            "{} | {role:<9} | {name:<24} | {:<19} | {label}{note}",
            carrier.label(),
            format!("{grading:?}"),
        );
    }
    rows.push(serde_json::json!({
        "carrier": carrier.label(),
        "role": role,
        "kind": name,
        "grading": format!("{grading:?}"),
        "verdict": label,
        "witness": witness,
    }));
}

fn verify_coassoc(cli: &Cli, bound: usize) -> Result<ExitCode, Error> {
    let mut failures: Vec<serde_json::Value> = Vec::new();
    let mut rows: Vec<serde_json::Value> = Vec::new();
    for carrier in [Carrier::AllGraphs, Carrier::NoIsolated] {
        let members = carrier_universe(carrier, bound)?;
        for &kind in carrier_coproducts(carrier) {
            let mut witness = None;
            for g in &members {
                let ok = coassociativity_holds(kind, g)?
                    && cocommutativity_holds(kind, g)?
                    && counit_law_holds(kind, g)?;
                if !ok {
                    witness = Some(hopfgraph::canonicalize(g).encoding().to_string());
                    break;
                }
            }
            let ok = witness.is_none();
            if cli.format == Format::Text {
                println!(
                    "{} | coproduct | {:<24} | coassociative+cocommutative+counital [{}]",
                    carrier.label(),
                    kind.symbol(),
                    if ok { "ok" } else { "FAIL" },
                );
            }
            let row = serde_json::json!({
                "carrier": carrier.label(),
                "role": "coproduct",
                "kind": kind.symbol(),
                "ok": ok,
                "witness": witness,
            });
            if !ok {
                failures.push(row.clone());
            }
            rows.push(row);
        }
        for &kind in carrier_products(carrier) {
            let mut witness = None;
            for g in &members {
                if !unit_law_holds(kind, g)? {
                    witness = Some(hopfgraph::canonicalize(g).encoding().to_string());
                    break;
                }
            }
            let ok = witness.is_none();
            if cli.format == Format::Text {
                println!(
                    "{} | product   | {:<24} | unital [{}]",
                    carrier.label(),
                    kind.symbol(),
                    if ok { "ok" } else { "FAIL" },
                );
            }
            let row = serde_json::json!({
                "carrier": carrier.label(),
                "role": "product",
                "kind": kind.symbol(),
                "ok": ok,
                "witness": witness,
            });
            if !ok {
                failures.push(row.clone());
            }
            rows.push(row);
        }
    }
    finish_suite(cli, rows, failures)
}

fn finish_suite(
    cli: &Cli,
    rows: Vec<serde_json::Value>,
    failures: Vec<serde_json::Value>,
) -> Result<ExitCode, Error> {
    let failed = !failures.is_empty();
    if cli.format == Format::Json {
        println!(
            "{}",
            serde_json::json!({ "rows": rows, "failures": failures })
        );
    } else if failed {
        println!("FAILURES:");
        for f in &failures {
            println!("{f}");
        }
    }
    Ok(if failed {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    })
}
