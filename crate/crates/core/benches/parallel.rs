//! Compares the data-parallel bootstrap/simulation paths against a
//! single-threaded run.
//!
//! With the default `parallel` feature the same benchmarks also run inside
//! a one-thread rayon pool, so a single `cargo bench` invocation shows the
//! speedup. Building with `--no-default-features` benches the true
//! sequential fallback (no rayon in the binary at all).

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use riskbound::{
    bootstrap_bound, mean_for_mode, sampling_study, BootstrapConfig, BoundMethod,
    DistributionSpec, Family, Penalization, Probability, RandomStream, StudyConfig,
};

fn prob(p: f64) -> Probability {
    Probability::new(p).unwrap()
}

fn fixture_spec() -> DistributionSpec {
    let mean = mean_for_mode(210.0, 70.0).unwrap();
    DistributionSpec::new(Family::LogNormal, mean, 70.0).unwrap()
}

fn bench_bootstrap(c: &mut Criterion) {
    let spec = fixture_spec();
    let sample = spec.sample(&mut RandomStream::new(42), 38);
    let cfg = BootstrapConfig::new(10_000, prob(0.95), 7).unwrap();

    let mut group = c.benchmark_group("bootstrap_bound_b10000");
    group.bench_function("default_pool", |b| {
        b.iter(|| bootstrap_bound(black_box(&sample), BoundMethod::Cm, 300.0, &cfg).unwrap())
    });
    #[cfg(feature = "parallel")]
    {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        group.bench_function("one_thread_pool", |b| {
            b.iter(|| {
                pool.install(|| {
                    bootstrap_bound(black_box(&sample), BoundMethod::Cm, 300.0, &cfg).unwrap()
                })
            })
        });
    }
    group.finish();
}

fn bench_sampling_study(c: &mut Criterion) {
    let plugin_cfg = StudyConfig {
        spec: fixture_spec(),
        n: 30,
        replications: 1000,
        true_quantile_order: prob(0.95),
        methods: vec![
            BoundMethod::Gauss,
            BoundMethod::Bc,
            BoundMethod::Cm,
            BoundMethod::Vd,
        ],
        penalization: Penalization::Plugin,
        seed: 0,
    };
    let boot_cfg = StudyConfig {
        n: 10,
        replications: 200,
        methods: vec![BoundMethod::Bc, BoundMethod::Cm, BoundMethod::Vd],
        penalization: Penalization::Bootstrap(BootstrapConfig::new(500, prob(0.95), 0).unwrap()),
        ..plugin_cfg.clone()
    };

    let mut group = c.benchmark_group("sampling_study");
    group.sample_size(20);
    group.bench_function("plugin_n30_reps1000", |b| {
        b.iter(|| sampling_study(black_box(&plugin_cfg)).unwrap())
    });
    group.bench_function("bootstrap_n10_reps200_b500", |b| {
        b.iter(|| sampling_study(black_box(&boot_cfg)).unwrap())
    });
    #[cfg(feature = "parallel")]
    {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        group.bench_function("bootstrap_one_thread_pool", |b| {
            b.iter(|| pool.install(|| sampling_study(black_box(&boot_cfg)).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_bootstrap, bench_sampling_study);
criterion_main!(benches);
