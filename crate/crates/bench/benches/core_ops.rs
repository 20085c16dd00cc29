use criterion::{black_box, criterion_group, criterion_main, Criterion};

use dialgebra::algebra::{check_dialgebra, check_poisson_dialgebra, Dialgebra};
use dialgebra::constructions::induced_poisson_dialgebra;
use dialgebra::fixtures;
use dialgebra::graded::{associated_graded, FilteredDialgebra};
use dialgebra::homotopy::associative_2_algebra_from_dialgebra;
use dialgebra::linalg::{rref, Matrix, Subspace};
use dialgebra::rat::{basis_vec, ratio};

fn bench_rref(c: &mut Criterion) {
    // dense 12x12 rational matrix with mixed denominators
    let rows: Vec<Vec<_>> = (0..12)
        .map(|i| {
            (0..12)
                .map(|j| ratio((i * j + 3) as i64 % 7 - 3, (j + 1) as i64))
                .collect()
        })
        .collect();
    let m = Matrix::from_rows(12, &rows);
    c.bench_function("rref 12x12", |b| b.iter(|| rref(black_box(&m))));
}

fn bench_dialgebra_check(c: &mut Criterion) {
    let h = fixtures::heisenberg_truncated();
    let d = Dialgebra::from_associative(&h);
    c.bench_function("check_dialgebra heis9", |b| {
        b.iter(|| check_dialgebra(black_box(&d)))
    });
}

fn bench_poisson_check(c: &mut Criterion) {
    let d = Dialgebra::from_associative(&fixtures::strictly_upper_triangular(4));
    let p = induced_poisson_dialgebra(&d).unwrap();
    c.bench_function("check_poisson_dialgebra ut4", |b| {
        b.iter(|| check_poisson_dialgebra(black_box(&p)))
    });
}

fn bench_assoc2(c: &mut Criterion) {
    let d = Dialgebra::from_associative(&fixtures::strictly_upper_triangular(4));
    c.bench_function("associative_2_algebra ut4", |b| {
        b.iter(|| associative_2_algebra_from_dialgebra(black_box(&d)).unwrap())
    });
}

fn bench_associated_graded(c: &mut Criterion) {
    let a = fixtures::strictly_upper_triangular(4);
    let lev = fixtures::upper_triangular_levels(4);
    let n = a.dim();
    let step = |w: usize| {
        Subspace::from_span(
            n,
            &lev.iter()
                .enumerate()
                .filter(|(_, &l)| l <= w)
                .map(|(i, _)| basis_vec(n, i))
                .collect::<Vec<_>>(),
        )
    };
    let fd = FilteredDialgebra::new(
        Dialgebra::from_associative(&a),
        vec![Subspace::zero(n), step(1), step(2), step(3)],
    )
    .unwrap();
    c.bench_function("associated_graded ut4", |b| {
        b.iter(|| associated_graded(black_box(&fd)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_rref,
    bench_dialgebra_check,
    bench_poisson_check,
    bench_assoc2,
    bench_associated_graded
);
criterion_main!(benches);
