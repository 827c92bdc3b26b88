use criterion::{criterion_group, criterion_main, Criterion};
use superstein::homology::{concretize, homology, Source, DEFAULT_MAX_WEDGE};
use superstein::linear::{rank, Rationals};
use superstein::{Builtin, MatrixShape, StModel};

fn steinberg(c: &mut Criterion) {
    let a = Builtin::Grassmann(1).build(Rationals).unwrap();
    c.bench_function("st build grassmann1 2|2", |b| b.iter(|| StModel::build(&a, MatrixShape::new(2, 2)).unwrap()));
}

fn second_homology(c: &mut Criterion) {
    let a = Builtin::Field.build(Rationals).unwrap();
    let lie = concretize(Source::St, &a, MatrixShape::new(3, 2)).unwrap();
    c.bench_function("h2 st field 3|2", |b| b.iter(|| homology(&lie, DEFAULT_MAX_WEDGE).unwrap()));
}

fn boundary_rank(c: &mut Criterion) {
    let a = Builtin::Grassmann(1).build(Rationals).unwrap();
    let lie = concretize(Source::Sl, &a, MatrixShape::new(3, 2)).unwrap();
    let d2 = superstein::homology::ce_boundary(&lie, 2, DEFAULT_MAX_WEDGE).unwrap();
    c.bench_function("rank d2 sl grassmann1 3|2", |b| b.iter(|| rank(&Rationals, d2.codomain_dim, d2.rows.clone()).unwrap()));
}

criterion_group!(benches, steinberg, second_homology, boundary_rank);
criterion_main!(benches);
