//! Throughput benchmarks comparing the rayon-parallel paths against the
//! single-threaded reference paths, plus the bit-packed rank kernel.
//!
//! Run with `cargo bench`; build with `--no-default-features` to measure the
//! fully sequential build (the parallel/sequential pairs below then coincide).

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use tbga::code::TwoBlockCode;
use tbga::distance::{random_dz_upper, random_dz_upper_seq, RandomOptions};
use tbga::enumerate::{enumerate, enumerate_seq, DistancePolicy, EnumerationJob};
use tbga::field::PrimeField;
use tbga::matrix::FMatrix;
use tbga::parse::{parse_algebra_elem, parse_group_spec};
use tbga::rng::SplitMix64;

fn spot_check_code() -> TwoBlockCode {
    let g = parse_group_spec("C36").unwrap();
    let f = PrimeField::new(2).unwrap();
    let a = parse_algebra_elem("1 + r^28", &g, f).unwrap();
    let b = parse_algebra_elem("1 + r^9 + r^18 + r^12 + r^29 + r^14", &g, f).unwrap();
    TwoBlockCode::build(a, b).unwrap()
}

fn bench_random_distance(c: &mut Criterion) {
    let code = spot_check_code();
    let opts = RandomOptions::default();
    let mut group = c.benchmark_group("random_dz_upper_2000_trials");
    group.sample_size(10);
    group.bench_function(BenchmarkId::new("parallel", "[[72,8,9]]"), |bench| {
        bench.iter(|| random_dz_upper(code.hx(), code.hz(), 2000, 1, opts))
    });
    group.bench_function(BenchmarkId::new("sequential", "[[72,8,9]]"), |bench| {
        bench.iter(|| random_dz_upper_seq(code.hx(), code.hz(), 2000, 1, opts))
    });
    group.finish();
}

fn bench_enumeration(c: &mut Criterion) {
    let f = PrimeField::new(2).unwrap();
    let mut job = EnumerationJob::new("C4xC2", f, 2, 6).unwrap();
    job.policy = DistancePolicy::default();
    let mut group = c.benchmark_group("enumerate_c4xc2_w2_w6");
    group.sample_size(10);
    group.bench_function("parallel", |bench| bench.iter(|| enumerate(&job)));
    group.bench_function("sequential", |bench| bench.iter(|| enumerate_seq(&job)));
    group.finish();
}

fn bench_rank(c: &mut Criterion) {
    let f = PrimeField::new(2).unwrap();
    let mut rng = SplitMix64::new(99);
    let m = FMatrix::from_fn(f, 200, 400, |_, _| (rng.below(2)) as u8);
    c.bench_function("rank_gf2_200x400", |bench| bench.iter(|| m.rank()));
}

criterion_group!(benches, bench_random_distance, bench_enumeration, bench_rank);
criterion_main!(benches);
