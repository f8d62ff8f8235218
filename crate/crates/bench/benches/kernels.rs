use std::hint::black_box;

use congruence_core::chowforms::chow_form;
use congruence_core::oracles::named::{random_plane_curve, random_surface};
use congruence_core::oracles::{oracle_ch1_degree, oracle_plane_bitangents};
use congruence_core::solver::{buchberger, quotient_dimension};
use congruence_core::{BinaryForm, GenericRng, MonomialOrder, PrimeField, RationalSpaceCurve, Rationals};
use criterion::{criterion_group, criterion_main, Criterion};

fn chow_forms(c: &mut Criterion) {
    let fp = PrimeField::default();
    c.bench_function("chow_form twisted cubic over Q", |b| {
        let curve = RationalSpaceCurve::twisted_cubic(Rationals);
        b.iter(|| chow_form(black_box(&curve)).unwrap())
    });
    c.bench_function("chow_form rational quintic over F_p", |b| {
        let curve = RationalSpaceCurve::rational_quintic(fp);
        b.iter(|| chow_form(black_box(&curve)).unwrap())
    });
}

fn resultants(c: &mut Criterion) {
    let fp = PrimeField::default();
    let mut rng = GenericRng::new(3);
    let f = BinaryForm::new(fp, rng.elems(&fp, 13));
    let g = BinaryForm::new(fp, rng.elems(&fp, 12));
    c.bench_function("resultant of binary forms of degree 12 and 11", |b| {
        b.iter(|| black_box(&f).resultant(black_box(&g)).unwrap())
    });
    let s = random_surface(fp, 4, 17).unwrap();
    c.bench_function("hurwitz degree oracle, quartic surface", |b| {
        b.iter(|| oracle_ch1_degree(black_box(&s), 1).unwrap())
    });
}

fn groebner(c: &mut Criterion) {
    let fp = PrimeField::default();
    let f = random_plane_curve(fp, 4, 23);
    let ring = f.ring().clone();
    let gens: Vec<_> = (0..3).map(|i| f.derivative(i)).collect();
    let order = MonomialOrder::grevlex(3);
    c.bench_function("buchberger on the partials of a plane quartic", |b| {
        b.iter(|| {
            let gb = buchberger(&ring, black_box(&gens), &order).unwrap();
            quotient_dimension(&gb)
        })
    });
    let mut group = c.benchmark_group("slow");
    group.sample_size(10);
    group.bench_function("bitangents of a plane quartic", |b| {
        b.iter(|| oracle_plane_bitangents(black_box(&f), 1).unwrap())
    });
    group.finish();
}

criterion_group!(benches, chow_forms, resultants, groebner);
criterion_main!(benches);
