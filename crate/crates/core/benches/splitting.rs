//! Splitting-number kernel: sequential vs data-parallel over residue
//! classes. Run with `cargo bench -p torsor-core`; build with
//! `--no-default-features` to benchmark the fallback-only binary.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use torsor_core::fsig::splitting_number;
use torsor_core::toric::{veronese_plane, AffineSemigroup};

fn instances() -> Vec<(String, AffineSemigroup, u64, u32, i64)> {
    vec![
        // small: dominated by scheduling overhead, the sequential baseline
        ("V2_p3_e3".into(), veronese_plane(2), 3, 3, 2 * 27),
        // production-sized: the acceptance-scale workloads
        ("V2_p3_e4".into(), veronese_plane(2), 3, 4, 162),
        ("V5_p2_e5".into(), veronese_plane(5), 2, 5, 192),
    ]
}

fn bench_splitting(c: &mut Criterion) {
    let mut group = c.benchmark_group("splitting_number");
    group.sample_size(10);
    for (name, ring, p, e, bound) in instances() {
        group.bench_with_input(
            BenchmarkId::new("sequential", &name),
            &(&ring, p, e, bound),
            |b, (ring, p, e, bound)| {
                b.iter(|| splitting_number(ring, *p, *e, *bound, Some(1), false).unwrap())
            },
        );
        #[cfg(feature = "parallel")]
        group.bench_with_input(
            BenchmarkId::new("parallel", &name),
            &(&ring, p, e, bound),
            |b, (ring, p, e, bound)| {
                b.iter(|| splitting_number(ring, *p, *e, *bound, None, false).unwrap())
            },
        );
    }
    group.finish();
}

criterion_group!(benches, bench_splitting);
criterion_main!(benches);
