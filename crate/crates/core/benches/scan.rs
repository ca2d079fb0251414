use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tdlab::batch::ExecMode;
use tdlab::graph::{encode_graph6, random_flips, random_stacked_triangulation};
use tdlab::scan::{read_graph6_stream, scan, Conjecture, ScanOptions, StreamItem};

fn triangulations(count: usize) -> Vec<StreamItem> {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let planes: Vec<_> = (0..count)
        .map(|i| {
            let base = random_stacked_triangulation(20 + i % 20, &mut rng).unwrap();
            random_flips(&base, 40, &mut rng).unwrap()
        })
        .collect();
    let text: String = planes.iter().map(|p| encode_graph6(p.graph()) + "\n").collect();
    let mut items = read_graph6_stream(&text).unwrap();
    for (item, p) in items.iter_mut().zip(planes) {
        item.plane = Some(p);
    }
    items
}

fn bench(c: &mut Criterion) {
    let cubic = read_graph6_stream(include_str!("../tests/data/cubic_connected_le10.g6")).unwrap();
    let tris = triangulations(64);
    let mut group = c.benchmark_group("scan");
    group.sample_size(10);
    for (name, conj, items) in [
        ("four-family", Conjecture::FourFamily, &cubic),
        ("tri-td2", Conjecture::TriTd2, &tris),
        ("four-color-split", Conjecture::FourColorSplit, &tris),
    ] {
        for (label, mode) in [("sequential", ExecMode::Sequential), ("parallel", ExecMode::Parallel)] {
            let opts = ScanOptions {
                filter: false,
                mode,
                ..Default::default()
            };
            group.bench_with_input(BenchmarkId::new(name, label), items, |b, items| {
                b.iter(|| scan(conj, items, &opts).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
