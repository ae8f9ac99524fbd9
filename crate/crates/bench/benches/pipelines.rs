use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use hsft_bench::{catalog_ideals, moved_pair, sequence};
use hsft_core::{
    are_isomorphic, enumerate_sequences, sample_ideal, structural_invariant, verify_catalog,
    TableRow, TypeLabel,
};

fn hilbert(c: &mut Criterion) {
    let ideals = catalog_ideals(TableRow::T11 {
        n: 5,
        k: 2,
        l: 2,
        s: 2,
    });
    c.bench_function("hilbert_samuel/T11(5,2,2,2)", |b| {
        b.iter(|| {
            for i in &ideals {
                black_box(i.hilbert_samuel().unwrap());
            }
        })
    });
    c.bench_function("structural_invariant/T11(5,2,2,2)", |b| {
        b.iter(|| {
            for i in &ideals {
                black_box(structural_invariant(i).unwrap());
            }
        })
    });
}

fn iso(c: &mut Criterion) {
    let mut group = c.benchmark_group("are_isomorphic");
    for (name, row, index) in [
        ("T3", TableRow::T3, 0),
        ("T4", TableRow::T4 { k: 2 }, 1),
        ("T7", TableRow::T7 { n: 3, k: 2, l: 1 }, 0),
    ] {
        let (i, j) = moved_pair(row, index);
        group.bench_function(name, |b| {
            b.iter(|| black_box(are_isomorphic(&i, &j).unwrap()))
        });
    }
    group.finish();
}

fn catalogs(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_catalog");
    group.sample_size(20);
    for (name, row) in [
        ("T4", TableRow::T4 { k: 1 }),
        ("T7", TableRow::T7 { n: 2, k: 1, l: 1 }),
        (
            "T11",
            TableRow::T11 {
                n: 2,
                k: 1,
                l: 2,
                s: 2,
            },
        ),
    ] {
        let label = TypeLabel::from(row);
        group.bench_function(name, |b| {
            b.iter(|| black_box(verify_catalog(&label).unwrap()))
        });
    }
    group.finish();
}

fn sampling(c: &mut Criterion) {
    let seq = sequence(&[1, 2, 3, 4, 4, 3, 3, 2, 2, 1]);
    let mut seed = 0;
    c.bench_function("sample_ideal/(1,2,3,4,4,3,3,2,2,1)", |b| {
        b.iter(|| {
            seed += 1;
            black_box(sample_ideal(&seq, seed).unwrap())
        })
    });
}

fn enumeration(c: &mut Criterion) {
    c.bench_function("enumerate_sequences/30", |b| {
        b.iter(|| black_box(enumerate_sequences(30).unwrap()))
    });
}

criterion_group!(benches, hilbert, iso, catalogs, sampling, enumeration);
criterion_main!(benches);
