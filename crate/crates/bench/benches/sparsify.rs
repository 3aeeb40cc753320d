use std::hint::black_box;

use coloravoid::exact::min_subgraph_exact;
use coloravoid::{
    courteous_restriction, is_eca_connected, sparsify, GraphicMatroid, IncreaseRankVariant, Notion,
    Order,
};
use coloravoid_bench::{eca_instance, tight_instance};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn checkers(c: &mut Criterion) {
    let mut group = c.benchmark_group("check");
    for n in [100, 1000] {
        let g = eca_instance(n, 4, 6, 1);
        group.bench_with_input(BenchmarkId::new("eca", n), &g, |b, g| {
            b.iter(|| is_eca_connected(black_box(g)))
        });
        for notion in [Notion::Vca, Notion::Ivca] {
            let g = tight_instance(notion, 4, n);
            let all: Vec<usize> = (0..g.as_ref().m()).collect();
            group.bench_with_input(BenchmarkId::new(notion.name(), n), &g, |b, g| {
                b.iter(|| g.as_ref().satisfies(notion, black_box(&all)))
            });
        }
    }
    group.finish();
}

fn sparsifiers(c: &mut Criterion) {
    let mut group = c.benchmark_group("sparsify");
    group.sample_size(20);
    for n in [100, 400] {
        let g = eca_instance(n, 4, 6, 2);
        group.bench_with_input(BenchmarkId::new("eca_random", n), &g, |b, g| {
            b.iter(|| {
                sparsify(
                    coloravoid::GraphRef::Edge(g),
                    Notion::Eca,
                    &Order::Random(7),
                )
                .unwrap()
            })
        });
        for notion in [Notion::Eca, Notion::Vca, Notion::Ivca] {
            let g = tight_instance(notion, 4, n);
            group.bench_with_input(
                BenchmarkId::new(format!("{}_tight", notion.name()), n),
                &g,
                |b, g| b.iter(|| sparsify(g.as_ref(), notion, &Order::Ascending).unwrap()),
            );
        }
    }
    group.finish();
}

fn matroid(c: &mut Criterion) {
    let mut group = c.benchmark_group("courteous_restriction");
    group.sample_size(10);
    for n in [30, 60] {
        let m = GraphicMatroid::colored(eca_instance(n, 3, 3, 3));
        let order: Vec<usize> = (0..m.ground_size()).collect();
        group.bench_with_input(BenchmarkId::new("graphic", n), &m, |b, m| {
            b.iter(|| {
                courteous_restriction(m, &order, IncreaseRankVariant::WeightedGreedy).unwrap()
            })
        });
    }
    group.finish();
}

fn exact(c: &mut Criterion) {
    let g = tight_instance(Notion::Eca, 3, 7);
    c.bench_function("exact/eca_tight_k3_n7", |b| {
        b.iter(|| min_subgraph_exact(g.as_ref(), Notion::Eca, 20).unwrap())
    });
}

criterion_group!(benches, checkers, sparsifiers, matroid, exact);
criterion_main!(benches);
