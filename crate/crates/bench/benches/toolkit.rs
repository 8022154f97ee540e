use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use stardom_core::chains::chain_report;
use stardom_core::digraph::{enumerate_induced_copies, isomorphic};
use stardom_core::domination::{epm_enumerate, gamma_pm_search, is_wced, StabilityRule};
use stardom_core::families::{guard_star, pancake_crossed, pancake_digraph, star_digraph};
use stardom_core::hamilton::{enumerate_hamilton_paths, hamilton_search, HamiltonMode};
use stardom_core::Budget;

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("star_digraph");
    for n in [5, 6, 7] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| star_digraph(black_box(n)).unwrap())
        });
    }
    group.finish();
}

fn isomorphism(c: &mut Criterion) {
    let g4 = star_digraph(4).unwrap();
    let g5 = star_digraph(5).unwrap();
    c.bench_function("induced_copies_st4_in_st5", |b| {
        b.iter(|| enumerate_induced_copies(&g4, &g5, Budget::unlimited()).images.len())
    });
    let x = pancake_crossed(5).unwrap().graph;
    let p5 = pancake_digraph(5).unwrap();
    c.bench_function("isomorphic_pc5_crossed", |b| b.iter(|| isomorphic(&x, &p5).is_some()));
}

fn domination(c: &mut Criterion) {
    let g4 = star_digraph(4).unwrap();
    for rule in [StabilityRule::AdmitIsolated, StabilityRule::SourcesAndSinksOnly] {
        c.bench_function(&format!("epm_enumerate_st4_{rule:?}"), |b| {
            b.iter(|| epm_enumerate(&g4, Budget::unlimited(), rule).solutions.len())
        });
        c.bench_function(&format!("gamma_st4_{rule:?}"), |b| {
            b.iter(|| gamma_pm_search(&g4, None, Budget::unlimited(), rule).unwrap().minimum)
        });
    }
    let g6 = star_digraph(6).unwrap();
    let s = guard_star(&g6, 0).unwrap().vertices;
    c.bench_function("is_wced_guard_star_st6", |b| b.iter(|| is_wced(&g6, &s).unwrap().holds()));
}

fn hamilton(c: &mut Criterion) {
    let g4 = star_digraph(4).unwrap();
    c.bench_function("hamilton_cycle_st4", |b| {
        b.iter(|| hamilton_search(&g4, HamiltonMode::Cycle, None, Budget::unlimited()).unwrap().nodes)
    });
    c.bench_function("hamilton_paths_st4_from_0", |b| {
        b.iter(|| enumerate_hamilton_paths(&g4, 0, Budget::unlimited()).unwrap().paths.len())
    });
}

fn chains(c: &mut Criterion) {
    let mut group = c.benchmark_group("chain_report");
    group.sample_size(10);
    for n in [3, 4, 5] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| chain_report(black_box(n), false).unwrap().passed)
        });
    }
    group.finish();
}

criterion_group!(benches, construction, isomorphism, domination, hamilton, chains);
criterion_main!(benches);
