use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sylowlab::bruhat::cell_census_with;
use sylowlab::experiments::{Gates, Runner};
use sylowlab::matgroup::{SubgroupBase, SubgroupId, DEFAULT_ENUM_CAP};
use sylowlab::{Engine, Exec, GroupSpec, TrialRng};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn product(c: &mut Criterion) {
    let mut group = c.benchmark_group("product");
    for (q, n) in [(13, 2), (5, 3)] {
        let spec = GroupSpec::psl(q, n).unwrap();
        let u = spec.enumerate_subgroup(&SubgroupId::of(SubgroupBase::U));
        let v = spec.enumerate_subgroup(&SubgroupId::of(SubgroupBase::V));
        let uv = Engine::default().product(&u, &v).unwrap();
        let g = spec.random_element(&mut TrialRng::new(1, 0).stream());
        let ug = u.conjugate(&g);
        for (name, exec) in MODES {
            let engine = Engine::default().with_exec(exec);
            group.bench_with_input(BenchmarkId::new(name, spec.name()), &(), |b, _| {
                b.iter(|| engine.product(black_box(&uv), black_box(&ug)).unwrap().len())
            });
        }
    }
    group.finish();
}

fn coverage(c: &mut Criterion) {
    let mut group = c.benchmark_group("coverage_k11");
    group.sample_size(10);
    let spec = GroupSpec::psl(13, 2).unwrap();
    for (name, exec) in MODES {
        let runner = Runner::new(Gates::default(), exec);
        group.bench_function(BenchmarkId::new(name, spec.name()), |b| {
            b.iter(|| {
                runner
                    .coverage_prob(&spec, 11, 64, black_box(7))
                    .unwrap()
                    .empirical_value
            })
        });
    }
    group.finish();
}

fn census(c: &mut Criterion) {
    let mut group = c.benchmark_group("cell_census");
    group.sample_size(10);
    let spec = GroupSpec::sl(4, 3).unwrap();
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, spec.name()), |b| {
            b.iter(|| {
                cell_census_with(black_box(&spec), DEFAULT_ENUM_CAP, exec)
                    .unwrap()
                    .len()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, product, coverage, census);
criterion_main!(benches);
