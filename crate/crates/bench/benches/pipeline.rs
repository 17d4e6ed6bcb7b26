use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use mckay_core::binpoly::{group_data, GroupId, RepElement};
use mckay_core::coxspec::{affine_a_product, verify_spectrum};
use mckay_core::diagrams::{DiagramType, Kind};
use mckay_core::molien::{molien_series, sigma_series};
use mckay_core::poincare::poincare_vector;
use mckay_core::qcartan::det_quantum;
use mckay_core::reflhom::{catalog, verify_entry};

fn cartan_side(c: &mut Criterion) {
    c.bench_function("det C_aff(t) E8", |b| {
        b.iter(|| det_quantum(black_box(DiagramType::e(8)), Kind::Affine))
    });
    c.bench_function("poincare vector E8", |b| {
        b.iter(|| poincare_vector(black_box(DiagramType::e(8))).unwrap())
    });
    c.bench_function("spectrum D12", |b| {
        b.iter(|| verify_spectrum(black_box(DiagramType::d(12))).unwrap())
    });
}

fn group_side(c: &mut Criterion) {
    let g = group_data(GroupId::Icosahedral).unwrap();
    let six = RepElement::basis(g.num_irreps(), g.irrep_index("6").unwrap());
    c.bench_function("molien I P_1,6", |b| {
        b.iter(|| molien_series(&g, g.trivial_index, black_box(&six)).unwrap())
    });
    c.bench_function("sigma series I rep 6 to order 64", |b| {
        b.iter(|| sigma_series(&g, black_box(&six), 64).unwrap())
    });
}

fn reflection_side(c: &mut Criterion) {
    let entries = catalog().unwrap();
    c.bench_function("verify reflection catalog", |b| {
        b.iter(|| {
            for e in entries {
                black_box(verify_entry(e).unwrap());
            }
        })
    });
    c.bench_function("affine A3 product", |b| b.iter(|| affine_a_product(black_box(3)).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = cartan_side, group_side, reflection_side
}
criterion_main!(benches);
