use baxter_bench::{smash_fixture, HOPF_SIZES};
use baxter_core::prelie::{check_pre_lie, prelie_from_rb_weight_minus1};
use baxter_core::rota_baxter::{check_rb_coalgebra, search_rb_operators, RbSide, SearchOptions};
use baxter_core::structures::check_hopf;
use baxter_core::yetter_drinfeld::{smash_projection_left, YDModuleCoalgebra};
use baxter_core::{builtin, Field};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

fn hopf_axioms(c: &mut Criterion) {
    let mut g = c.benchmark_group("check_hopf");
    for name in HOPF_SIZES {
        let h = builtin(name).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(name), &h, |b, h| {
            b.iter(|| check_hopf(black_box(h)).unwrap())
        });
    }
    g.finish();
}

fn rb_coalgebra_on_smash(c: &mut Criterion) {
    let mut g = c.benchmark_group("rb_coalgebra_weight_minus_one");
    g.sample_size(20);
    for name in HOPF_SIZES {
        let sp = smash_fixture(name).unwrap();
        let w = Field::Rational.from_i64(-1);
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| check_rb_coalgebra(black_box(&sp.smash), black_box(&sp.projection), &w).unwrap())
        });
    }
    g.finish();
}

fn smash_projection(c: &mut Criterion) {
    let mut g = c.benchmark_group("smash_projection_left");
    g.sample_size(10);
    for name in HOPF_SIZES {
        let ydc = YDModuleCoalgebra::adjoint(&builtin(name).unwrap()).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(name), &ydc, |b, y| {
            b.iter(|| smash_projection_left(black_box(y)).unwrap())
        });
    }
    g.finish();
}

fn pre_lie(c: &mut Criterion) {
    let mut g = c.benchmark_group("pre_lie_from_projection");
    g.sample_size(10);
    for name in ["group:C2", "sweedler4"] {
        let sp = smash_fixture(name).unwrap();
        let pl = prelie_from_rb_weight_minus1(&sp.smash, &sp.projection).unwrap();
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| check_pre_lie(pl.field(), pl.dim(), black_box(pl.comul())).unwrap())
        });
    }
    g.finish();
}

fn search(c: &mut Criterion) {
    let mut g = c.benchmark_group("search_coalgebra_weight_one");
    g.sample_size(10);
    for (name, threads) in [
        ("grouplike:2@Fp:3", 1),
        ("grouplike:3@Fp:2", 1),
        ("grouplike:3@Fp:2", 4),
    ] {
        let s = builtin(name).unwrap();
        let w = s.field().one();
        let opts = SearchOptions {
            threads,
            ..SearchOptions::default()
        };
        g.bench_function(BenchmarkId::new(name, format!("{threads}t")), |b| {
            b.iter(|| search_rb_operators(black_box(&s), RbSide::Coalgebra, &w, &opts).unwrap())
        });
    }
    g.finish();
}

criterion_group!(
    benches,
    hopf_axioms,
    rb_coalgebra_on_smash,
    smash_projection,
    pre_lie,
    search
);
criterion_main!(benches);
