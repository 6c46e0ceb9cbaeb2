use criterion::{black_box, criterion_group, criterion_main, Criterion};

use mlfar_bench::{bundled_example, synthetic_workload};
use mlfar_core::{generate_rules, mine, support, Itemset, MiningConfig, RuleMode};

fn mine_bundled(c: &mut Criterion) {
    let (tax, set) = bundled_example();
    let cfg = MiningConfig::paper_mode();
    c.bench_function("mine_bundled_example", |b| {
        b.iter(|| mine(black_box(&cfg), &tax, &set).unwrap())
    });
}

fn mine_synthetic(c: &mut Criterion) {
    let (tax, set, cfg) = synthetic_workload(7);
    c.bench_function("mine_synthetic", |b| {
        b.iter(|| mine(black_box(&cfg), &tax, &set).unwrap())
    });
}

fn rules_bundled(c: &mut Criterion) {
    let (tax, set) = bundled_example();
    let cfg = MiningConfig::paper_mode();
    let result = mine(&cfg, &tax, &set).unwrap();
    let m = set.qualify(cfg.gamma);
    c.bench_function("generate_rules_all_partitions", |b| {
        b.iter(|| {
            generate_rules(
                black_box(&result),
                &m,
                cfg.min_confidence,
                RuleMode::AllPartitions,
            )
        })
    });
}

fn support_kernel(c: &mut Criterion) {
    let (_, set, _) = synthetic_workload(7);
    let m = set.qualify(6);
    // a singleton from the first transaction's level-1 grouping
    let group = m
        .iter()
        .next()
        .expect("workload is non-empty")
        .group_at_level(1)
        .groups()[0]
        .0
        .clone();
    let itemset = Itemset::singleton(group);
    c.bench_function("support_singleton", |b| {
        b.iter(|| support(black_box(&itemset), &m))
    });
}

criterion_group!(
    benches,
    mine_bundled,
    mine_synthetic,
    rules_bundled,
    support_kernel
);
criterion_main!(benches);
