//! Parallel vs sequential timings for the four heavy scans: semiring axiom
//! validation on a matrix semiring, matrix regularity search, tensor
//! construction, and a full flatness check. Each group runs the same work
//! with the rayon pool engaged and with the sequential fallback forced, so
//! one report compares both (`cargo bench -p semiflat`).

use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};

use semiflat::bitset::BitSet;
use semiflat::exec;
use semiflat::flatness::flatness_wrt;
use semiflat::regularity::matrix_regular_witness;
use semiflat::semimodule::{FiniteSemimodule, Side};
use semiflat::semiring::FiniteSemiring;
use semiflat::tensor::TensorMonoid;
use semiflat::Limits;

const MODES: [(&str, bool); 2] = [("parallel", false), ("sequential", true)];

fn axiom_scan(c: &mut Criterion) {
    let chain4 = FiniteSemiring::chain(4).unwrap();
    let m2 = FiniteSemiring::matrix(&chain4, 2, 4096).unwrap();
    let n = m2.size();
    let add: Vec<Vec<usize>> =
        (0..n).map(|a| (0..n).map(|b| m2.add(a, b)).collect()).collect();
    let mul: Vec<Vec<usize>> =
        (0..n).map(|a| (0..n).map(|b| m2.mul(a, b)).collect()).collect();
    let mut g = c.benchmark_group("axiom_scan_m2_chain4");
    for (label, seq) in MODES {
        g.bench_function(label, |b| {
            exec::force_sequential(seq);
            b.iter(|| FiniteSemiring::validate("m2", n, &add, &mul, 0, 195).unwrap());
        });
    }
    g.finish();
    exec::force_sequential(false);
}

fn matrix_regularity(c: &mut Criterion) {
    let chain4 = FiniteSemiring::chain(4).unwrap();
    // The known non-regular matrix: the witness search must exhaust all
    // 256 candidates, which is the worst case.
    let a = vec![0usize, 1, 2, 3];
    let mut g = c.benchmark_group("matrix_regularity_chain4");
    for (label, seq) in MODES {
        g.bench_function(label, |b| {
            exec::force_sequential(seq);
            b.iter(|| {
                assert!(matrix_regular_witness(&chain4, 2, &a).is_none());
            });
        });
    }
    g.finish();
    exec::force_sequential(false);
}

fn tensor_build(c: &mut Criterion) {
    let z4 = Arc::new(FiniteSemiring::zmod(4).unwrap());
    let reg_r = FiniteSemimodule::regular(&z4, Side::Right);
    let two = Arc::new(reg_r.extract(&BitSet::from_members(4, &[0, 2])).unwrap().0);
    let reg = Arc::new(FiniteSemimodule::regular(&z4, Side::Left));
    let limits = Limits::default();
    let mut g = c.benchmark_group("tensor_build_z4");
    for (label, seq) in MODES {
        g.bench_function(label, |b| {
            exec::force_sequential(seq);
            b.iter(|| {
                let t = TensorMonoid::build(two.clone(), reg.clone(), &limits).unwrap();
                assert!(t.certified());
            });
        });
    }
    g.finish();
    exec::force_sequential(false);
}

fn flatness_check(c: &mut Criterion) {
    let z4 = Arc::new(FiniteSemiring::zmod(4).unwrap());
    let reg_r = FiniteSemimodule::regular(&z4, Side::Right);
    let two = Arc::new(reg_r.extract(&BitSet::from_members(4, &[0, 2])).unwrap().0);
    let reg = Arc::new(FiniteSemimodule::regular(&z4, Side::Left));
    let limits = Limits::default();
    let mut g = c.benchmark_group("flatness_z2_over_z4");
    for (label, seq) in MODES {
        g.bench_function(label, |b| {
            exec::force_sequential(seq);
            b.iter(|| {
                let v = flatness_wrt(&two, &reg, &limits).unwrap();
                assert!(v.m_flat.is_false());
            });
        });
    }
    g.finish();
    exec::force_sequential(false);
}

criterion_group!(scans, axiom_scan, matrix_regularity, tensor_build, flatness_check);
criterion_main!(scans);
