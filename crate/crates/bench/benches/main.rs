use criterion::{black_box, criterion_group, criterion_main, Criterion};

use curvenbhd::{Degree, ParabolicSubset, RootSystem};

fn bench_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("root_system_build");
    for t in ["B5", "D5", "F4"] {
        group.bench_function(t, |b| {
            let dynkin = t.parse().unwrap();
            b.iter(|| black_box(RootSystem::new(dynkin)))
        });
    }
    group.finish();
}

fn bench_hecke(c: &mut Criterion) {
    let rs = RootSystem::parse("B4").unwrap();
    let w0 = rs.longest_element();
    let theta = rs.highest_root().clone();
    let s_theta = rs.reflection(&theta).unwrap();
    c.bench_function("hecke_product_w0_w0_b4", |b| {
        b.iter(|| black_box(rs.hecke_product(&w0, &w0)))
    });
    c.bench_function("hecke_product_reflections_b4", |b| {
        b.iter(|| black_box(rs.hecke_product(&s_theta, &s_theta)))
    });
    c.bench_function("reduced_word_w0_b4", |b| {
        b.iter(|| black_box(rs.reduced_word(&w0)))
    });
}

fn bench_neighborhood(c: &mut Criterion) {
    let rs = RootSystem::parse("B4").unwrap();
    let p = ParabolicSubset::parse("2,4", 4).unwrap();
    let theta = rs.coroot_degree(rs.highest_root(), &p).unwrap();
    let d = theta.plus(&theta).unwrap();
    c.bench_function("greedy_decomposition_b4", |b| {
        b.iter(|| black_box(rs.greedy_decomposition(&d).unwrap()))
    });
    c.bench_function("point_neighborhood_b4", |b| {
        b.iter(|| black_box(rs.point_neighborhood(&d).unwrap()))
    });
    let w = rs.longest_element();
    c.bench_function("curve_neighborhood_recursive_b4", |b| {
        b.iter(|| black_box(rs.curve_neighborhood_recursive(&w, &d).unwrap()))
    });
}

fn bench_classification(c: &mut Criterion) {
    let rs = RootSystem::parse("C5").unwrap();
    let p = ParabolicSubset::parse("1,3", 5).unwrap();
    c.bench_function("p_cosmall_definitional_sweep_c5", |b| {
        b.iter(|| {
            for alpha in rs.positive_roots() {
                if rs.in_parabolic_span(alpha, &p) {
                    continue;
                }
                black_box(rs.is_p_cosmall_definitional(alpha, &p).unwrap());
            }
        })
    });
    c.bench_function("p_cosmall_criterion_sweep_c5", |b| {
        b.iter(|| {
            for alpha in rs.positive_roots() {
                if rs.in_parabolic_span(alpha, &p) {
                    continue;
                }
                black_box(rs.is_p_cosmall(alpha, &p).unwrap());
            }
        })
    });
    c.bench_function("table_b5", |b| {
        let b5 = RootSystem::parse("B5").unwrap();
        b.iter(|| black_box(b5.table().unwrap()))
    });
    let d = Degree::from_coeffs(&rs, &p, vec![2, 2, 2]).unwrap();
    c.bench_function("maximal_roots_c5", |b| {
        b.iter(|| black_box(rs.maximal_roots(&d).unwrap()))
    });
}

criterion_group!(
    benches,
    bench_build,
    bench_hecke,
    bench_neighborhood,
    bench_classification
);
criterion_main!(benches);
