use std::collections::BTreeMap;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sqchoose::graph::families::{complete, cycle};
use sqchoose::oracle::catalog::scan_sources;
use sqchoose::oracle::is_k_choosable_with;
use sqchoose::par::Execution;
use sqchoose::Graph;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn choosability(c: &mut Criterion) {
    let k33 = Graph::from_edges(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap();
    let inputs: [(&str, Graph, usize, usize); 3] = [
        ("C8 k=2 u=6", cycle(8), 2, 6),
        ("K4 k=3 u=7", complete(4), 3, 7),
        ("K33 k=3 u=7", k33, 3, 7),
    ];
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    for (name, g, k, u) in &inputs {
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, name), g, |b, g| {
                b.iter(|| is_k_choosable_with(g, *k, *u, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn catalog_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("catalog_scan");
    group.sample_size(10);
    for lemma in [1u8, 4, 6] {
        for (mode, exec) in MODES {
            group.bench_function(BenchmarkId::new(mode, format!("lemma {lemma}")), |b| {
                b.iter(|| {
                    let mut out = BTreeMap::new();
                    scan_sources(lemma, 0..200, exec, &mut out).unwrap();
                    out.len()
                })
            });
        }
    }
    group.finish();
}

criterion_group!(benches, choosability, catalog_scan);
criterion_main!(benches);
