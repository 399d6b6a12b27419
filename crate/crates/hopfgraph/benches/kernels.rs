//! Benchmarks for the subset-sweep kernels, comparing the default rayon pool
//! against a single-threaded pool. With the `parallel` feature disabled both
//! variants run the sequential fallback.

use criterion::{criterion_group, criterion_main, Criterion};
use hopfgraph::coproducts::{coproduct, CoproductKind};
use hopfgraph::counting::{signature, CountingMode};
use hopfgraph::graph::Graph;
use hopfgraph::names;
use hopfgraph::products::{product, ProductKind};

fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).unwrap()
}

fn circulant(n: usize, steps: &[usize]) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for &s in steps {
            let v = (u + s) % n;
            if u != v {
                edges.push((u.min(v), u.max(v)));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::new(n, &edges).unwrap()
}

fn run_variants(c: &mut Criterion, name: &str, work: impl Fn() + Sync) {
    let mut group = c.benchmark_group(name);
    group.sample_size(10);
    group.bench_function("parallel", |b| b.iter(&work));
    #[cfg(feature = "parallel")]
    {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        group.bench_function("sequential", |b| b.iter(|| pool.install(&work)));
    }
    #[cfg(not(feature = "parallel"))]
    group.bench_function("sequential", |b| b.iter(&work));
    group.finish();
}

fn bench_edge_signature(c: &mut Criterion) {
    let host = complete_graph(6);
    run_variants(c, "edge-signature-k6", move || {
        signature(CountingMode::EdgeInjective, &host, None).unwrap();
    });
}

fn bench_vertex_signature(c: &mut Criterion) {
    let host = circulant(12, &[1, 3]);
    run_variants(c, "vertex-signature-circulant12", move || {
        signature(CountingMode::VertexInjective, &host, None).unwrap();
    });
}

fn bench_shuffle_coproduct(c: &mut Criterion) {
    let host = circulant(14, &[1]);
    run_variants(c, "edge-shuffle-coproduct-c14", move || {
        coproduct(CoproductKind::EdgeShuffle, &host).unwrap();
    });
}

fn bench_vertex_cover_coproduct(c: &mut Criterion) {
    let host = circulant(10, &[1, 2]);
    run_variants(c, "vertex-quasi-shuffle-coproduct-circulant10", move || {
        coproduct(CoproductKind::VertexQuasiShuffle, &host).unwrap();
    });
}

fn bench_quasi_shuffle_product(c: &mut Criterion) {
    let cherry = names::cherry();
    let triangle = names::triangle();
    run_variants(c, "quasi-shuffle-product-cherry-triangle", move || {
        hopfgraph::products::clear_product_cache();
        product(ProductKind::EdgeQuasiShuffle, &cherry, &triangle).unwrap();
    });
}

criterion_group!(
    kernels,
    bench_edge_signature,
    bench_vertex_signature,
    bench_shuffle_coproduct,
    bench_vertex_cover_coproduct,
    bench_quasi_shuffle_product
);
criterion_main!(kernels);
