use criterion::{criterion_group, criterion_main, BatchSize, BenchmarkId, Criterion, Throughput};

use spherical_sec::cloud::{seeded_rng, shuffle_with};
use spherical_sec::list::MtfList;
use spherical_sec::spherical::solve_list;
use spherical_sec::synth::Rectangle;
use spherical_sec::{welzl_planar, welzl_sphere3d, SolveOptions, Vec2, Vec3};

const SIZES: [usize; 3] = [10_000, 100_000, 1_000_000];

fn spherical(c: &mut Criterion) {
    let mut group = c.benchmark_group("spherical");
    group.sample_size(20);
    let mut rng = seeded_rng(0);
    for n in SIZES {
        let cloud = Rectangle::DEFAULT.sample_units(&mut rng, n).unwrap();
        group.throughput(Throughput::Elements(n as u64));
        for (label, known) in [("scan", false), ("hemisphere_known", true)] {
            let options = SolveOptions {
                hemisphere_known: known,
            };
            group.bench_with_input(BenchmarkId::new(label, n), &cloud, |b, cloud| {
                let mut shuffle_rng = seeded_rng(1);
                b.iter_batched(
                    || {
                        let mut points = cloud.clone();
                        shuffle_with(&mut points, &mut shuffle_rng);
                        MtfList::from_vec(points)
                    },
                    |mut list| solve_list(&mut list, options).unwrap(),
                    BatchSize::LargeInput,
                );
            });
        }
    }
    group.finish();
}

fn euclidean(c: &mut Criterion) {
    let mut group = c.benchmark_group("euclidean");
    group.sample_size(20);
    let mut rng = seeded_rng(2);
    for n in [10_000usize, 100_000] {
        let units = Rectangle::DEFAULT.sample_units(&mut rng, n).unwrap();
        let mut balls: Vec<Vec3> = units.iter().map(|u| u.vec()).collect();
        shuffle_with(&mut balls, &mut rng);
        let mut discs: Vec<Vec2> = balls.iter().map(|p| Vec2::new(p.x, p.y)).collect();
        shuffle_with(&mut discs, &mut rng);
        group.throughput(Throughput::Elements(n as u64));
        group.bench_with_input(BenchmarkId::new("planar", n), &discs, |b, pts| {
            b.iter(|| welzl_planar(pts).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("ball3d", n), &balls, |b, pts| {
            b.iter(|| welzl_sphere3d(pts).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, spherical, euclidean);
criterion_main!(benches);
