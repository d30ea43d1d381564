use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use pathgb_bench::{ideal, problem};
use pathgb_core::{
    buchberger, divide_left, divide_twosided, CompletionOptions, GeneratorSet, Limits, Reducer,
};

fn completion(c: &mut Criterion) {
    let mut group = c.benchmark_group("buchberger");
    for name in ["ex32", "example_4_3_a", "example_4_3_b"] {
        let file = problem(name);
        let (gens, side) = ideal(&file);
        let gens = GeneratorSet::new(gens, side);
        group.bench_function(name, |b| {
            b.iter(|| {
                buchberger(black_box(&gens), &file.order, &CompletionOptions::default()).unwrap()
            })
        });
    }

    // infinite basis, stopped by the iteration cap
    let file = problem("infinite");
    let (gens, side) = ideal(&file);
    let gens = GeneratorSet::new(gens, side);
    for cap in [3, 5] {
        let options = CompletionOptions {
            limits: Limits {
                max_iterations: cap,
                ..Limits::default()
            },
            ..CompletionOptions::default()
        };
        group.bench_function(format!("infinite_cap_{cap}"), |b| {
            b.iter(|| buchberger(black_box(&gens), &file.order, &options).unwrap())
        });
    }
    group.finish();
}

fn division(c: &mut Criterion) {
    let mut group = c.benchmark_group("division");

    let file = problem("ex31");
    let g = file.poly("g").unwrap().clone();
    let divisors = vec![
        file.poly("f1").unwrap().clone(),
        file.poly("f2").unwrap().clone(),
    ];
    group.bench_function("left_ex31", |b| {
        b.iter(|| divide_left(black_box(&g), &divisors, &file.order).unwrap())
    });

    let file = problem("ex41");
    let f = file.poly("f").unwrap().clone();
    let divisors = vec![
        file.poly("f1").unwrap().clone(),
        file.poly("f2").unwrap().clone(),
    ];
    group.bench_function("twosided_ex41", |b| {
        b.iter(|| divide_twosided(black_box(&f), &divisors, &file.order).unwrap())
    });

    // normal form of a long word against the capped infinite family
    let file = problem("infinite");
    let (gens, side) = ideal(&file);
    let options = CompletionOptions {
        limits: Limits {
            max_iterations: 6,
            ..Limits::default()
        },
        ..CompletionOptions::default()
    };
    let basis = buchberger(&GeneratorSet::new(gens, side), &file.order, &options)
        .unwrap()
        .basis;
    let word = file.parse_expr("x*y*x*x*y*x*y*y*x*x - y*x*x*y*x").unwrap();
    let reducer = Reducer::new(file.order, side);
    group.bench_function("normal_form_infinite", |b| {
        b.iter(|| reducer.reduce_total(black_box(&word), &basis).unwrap())
    });
    group.finish();
}

criterion_group!(benches, completion, division);
criterion_main!(benches);
