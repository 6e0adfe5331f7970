//! Parallel vs sequential batch throughput.
//!
//! The same seed batches run through the rayon-backed `batch::map_*`
//! helpers and their sequential twins; both paths produce identical
//! results, so the comparison is purely about wall-clock scaling.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use playmodel::batch;
use playmodel::behavlet::Behavlet;
use playmodel::games::{default_maze, pacman, ttt};
use playmodel::profiler::{agents, simulate};

const SIM_SEEDS: usize = 64;
const SIM_TICKS: usize = 150;

fn bench_pacman_simulation(c: &mut Criterion) {
    let maze = default_maze();
    let model = pacman::model(&maze);
    let agent = agents::pacman_random();
    let mut group = c.benchmark_group("pacman_simulate_batch");
    group.bench_function("sequential", |b| {
        b.iter(|| {
            let runs = batch::map_indexed_seq(SIM_SEEDS, |seed| {
                simulate(&model, &agent, seed as u64, SIM_TICKS).trace.ticks()
            });
            black_box(runs)
        })
    });
    group.bench_function("parallel", |b| {
        b.iter(|| {
            let runs = batch::map_indexed(SIM_SEEDS, |seed| {
                simulate(&model, &agent, seed as u64, SIM_TICKS).trace.ticks()
            });
            black_box(runs)
        })
    });
    group.finish();
}

fn bench_a1_detection(c: &mut Criterion) {
    let maze = default_maze();
    let model = pacman::model(&maze);
    let hunter = agents::pacman_hunter();
    let traces: Vec<_> = (0..SIM_SEEDS)
        .map(|seed| simulate(&model, &hunter, seed as u64, SIM_TICKS).trace)
        .collect();
    let a1 = pacman::behavlet_a1();
    let count = |b: &Behavlet<pacman::PmPayload>, t: &playmodel::Trace<pacman::PmPayload>| {
        b.detect(t).map(|ds| ds.len()).unwrap_or(0)
    };
    let mut group = c.benchmark_group("a1_detect_batch");
    group.bench_function("sequential", |b| {
        b.iter(|| black_box(batch::map_slice_seq(&traces, |t| count(&a1, t))))
    });
    group.bench_function("parallel", |b| {
        b.iter(|| black_box(batch::map_slice(&traces, |t| count(&a1, t))))
    });
    group.finish();
}

fn bench_ttt_selfplay(c: &mut Criterion) {
    let model = ttt::model();
    let agent = agents::ttt_random();
    let mut group = c.benchmark_group("ttt_selfplay_batch");
    group.bench_function("sequential", |b| {
        b.iter(|| {
            black_box(batch::map_indexed_seq(512, |seed| {
                simulate(&model, &agent, seed as u64, 9).trace.ticks()
            }))
        })
    });
    group.bench_function("parallel", |b| {
        b.iter(|| {
            black_box(batch::map_indexed(512, |seed| {
                simulate(&model, &agent, seed as u64, 9).trace.ticks()
            }))
        })
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_pacman_simulation,
    bench_a1_detection,
    bench_ttt_selfplay
);
criterion_main!(benches);
