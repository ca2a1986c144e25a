//! Tensor-engine oracles that do not trust the congruence closure: canonical
//! isomorphisms with the regular module, classic ring-theoretic tensor
//! values over ℤ/6, distribution over direct sums, stability of the result
//! under extra closure slack, functoriality of induced maps, and
//! preservation of cokernels.

use std::sync::Arc;

use semiflat::bitset::BitSet;
use semiflat::catalog;
use semiflat::morphism::Morphism;
use semiflat::semimodule::{FiniteSemimodule, Side};
use semiflat::semiring::FiniteSemiring;
use semiflat::tensor::{
    check_cokernel_preservation, check_sum_distribution, induced_map, theta_ideal,
    theta_regular_left, theta_regular_right, TensorMonoid,
};
use semiflat::Limits;

fn limits() -> Limits {
    Limits::default()
}

fn is_bijection(table: &[u16], cod_size: usize) -> bool {
    let mut seen = vec![false; cod_size];
    for &t in table {
        if seen[t as usize] {
            return false;
        }
        seen[t as usize] = true;
    }
    table.len() == cod_size
}

#[test]
fn unit_isomorphisms_hold_across_the_catalog() {
    for base in catalog::semirings() {
        for nm in catalog::modules_for(&base, Side::Left, &limits()) {
            if base.size() * nm.module.size() > limits().tensor_cap {
                continue;
            }
            let theta = theta_regular_left(&nm.module, &limits()).unwrap();
            assert!(
                is_bijection(&theta, nm.module.size()),
                "S⊗{} failed to collapse to {} over base size {}",
                nm.name,
                nm.name,
                base.size()
            );
        }
        for nm in catalog::modules_for(&base, Side::Right, &limits()) {
            if base.size() * nm.module.size() > limits().tensor_cap {
                continue;
            }
            let theta = theta_regular_right(&nm.module, &limits()).unwrap();
            assert!(is_bijection(&theta, nm.module.size()), "{}⊗S over {}", nm.name, base.size());
        }
    }
}

/// Extract a named subsemimodule of the regular module on the given side.
fn sub_module(
    base: &Arc<FiniteSemiring>,
    side: Side,
    members: &[usize],
) -> Arc<FiniteSemimodule> {
    let reg = FiniteSemimodule::regular(base, side);
    let set = BitSet::from_members(base.size(), members);
    Arc::new(reg.extract(&set).unwrap().0)
}

#[test]
fn ring_tensor_sizes_over_zmod6_match_the_gcd_rule() {
    // Over R = ℤ/6: A ⊗_R B ≅ ℤ/gcd for the cyclic ideals {0,3} ≅ ℤ/2 and
    // {0,2,4} ≅ ℤ/3 — the classical values, computed here by closure.
    let z6 = Arc::new(FiniteSemiring::zmod(6).unwrap());
    let two_r = sub_module(&z6, Side::Right, &[0, 3]);
    let two_l = sub_module(&z6, Side::Left, &[0, 3]);
    let three_r = sub_module(&z6, Side::Right, &[0, 2, 4]);
    let three_l = sub_module(&z6, Side::Left, &[0, 2, 4]);

    let coprime = TensorMonoid::build(two_r.clone(), three_l.clone(), &limits()).unwrap();
    assert!(coprime.certified());
    assert_eq!(coprime.size(), 1, "ℤ/2 ⊗ ℤ/3 = 0");

    let same2 = TensorMonoid::build(two_r, two_l, &limits()).unwrap();
    assert!(same2.certified());
    assert_eq!(same2.size(), 2, "ℤ/2 ⊗ ℤ/2 ≅ ℤ/2");

    let same3 = TensorMonoid::build(three_r, three_l, &limits()).unwrap();
    assert!(same3.certified());
    assert_eq!(same3.size(), 3, "ℤ/3 ⊗ ℤ/3 ≅ ℤ/3");
}

#[test]
fn tensoring_distributes_over_direct_sums() {
    let z4 = Arc::new(FiniteSemiring::zmod(4).unwrap());
    let f = sub_module(&z4, Side::Right, &[0, 2]);
    let m = sub_module(&z4, Side::Left, &[0, 2]);
    let zero = Arc::new(FiniteSemimodule::zero_module(&z4, Side::Left));
    let reg = Arc::new(FiniteSemimodule::regular(&z4, Side::Left));
    check_sum_distribution(&f, &m, &zero, &limits()).unwrap();
    check_sum_distribution(&f, &m, &m, &limits()).unwrap();
    check_sum_distribution(&f, &zero, &reg, &limits()).unwrap();

    let chain3 = Arc::new(FiniteSemiring::chain(3).unwrap());
    let down = sub_module(&chain3, Side::Right, &[0, 1]);
    let down_l = sub_module(&chain3, Side::Left, &[0, 1]);
    let zero3 = Arc::new(FiniteSemimodule::zero_module(&chain3, Side::Left));
    let reg3 = Arc::new(FiniteSemimodule::regular(&chain3, Side::Left));
    check_sum_distribution(&down, &down_l, &reg3, &limits()).unwrap();
    check_sum_distribution(&down, &zero3, &down_l, &limits()).unwrap();
}

#[test]
fn closure_results_are_stable_under_extra_slack() {
    let mut generous = limits();
    generous.slack += 2;
    for base in catalog::semirings() {
        let reg_l = Arc::new(FiniteSemimodule::regular(&base, Side::Left));
        for nm in catalog::modules_for(&base, Side::Right, &limits()) {
            if nm.module.size() * reg_l.size() > limits().tensor_cap {
                continue;
            }
            let tight = TensorMonoid::build(nm.module.clone(), reg_l.clone(), &limits()).unwrap();
            let loose = TensorMonoid::build(nm.module.clone(), reg_l.clone(), &generous).unwrap();
            assert_eq!(tight.certified(), loose.certified());
            if tight.certified() {
                assert_eq!(tight.size(), loose.size(), "{} over {}", nm.name, base.size());
                // Same partition of pure tensors, not just the same count.
                for fi in 0..nm.module.size() {
                    for mi in 0..reg_l.size() {
                        for fj in 0..nm.module.size() {
                            for mj in 0..reg_l.size() {
                                let a = tight.pure(fi, mi) == tight.pure(fj, mj);
                                let b = loose.pure(fi, mi) == loose.pure(fj, mj);
                                assert_eq!(a, b);
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn induced_maps_are_functorial() {
    let z4 = Arc::new(FiniteSemiring::zmod(4).unwrap());
    let f = sub_module(&z4, Side::Right, &[0, 2]);
    let reg = Arc::new(FiniteSemimodule::regular(&z4, Side::Left));
    let t_reg = TensorMonoid::build(f.clone(), reg.clone(), &limits()).unwrap();
    assert!(t_reg.certified());

    // Identity goes to identity.
    let id = Morphism::identity(&reg);
    let t_id = induced_map(&t_reg, &t_reg, &id).unwrap();
    assert_eq!(t_id, (0..t_reg.size() as u16).collect::<Vec<_>>());

    // Composition goes to composition: doubling twice = multiply by 0.
    let double = Morphism::new(reg.clone(), reg.clone(), vec![0, 2, 0, 2]).unwrap();
    let t_double = induced_map(&t_reg, &t_reg, &double).unwrap();
    let both = double.compose(&double).unwrap();
    let t_both = induced_map(&t_reg, &t_reg, &both).unwrap();
    let composed: Vec<u16> = (0..t_reg.size()).map(|i| t_double[t_double[i] as usize]).collect();
    assert_eq!(t_both, composed);
}

#[test]
fn theta_over_the_regular_right_module_is_injective_with_image_the_ideal() {
    for base in catalog::semirings() {
        let reg_r = Arc::new(FiniteSemimodule::regular(&base, Side::Right));
        let reg_l = FiniteSemimodule::regular(&base, Side::Left);
        for ideal in reg_l.subsemimodules(limits().enum_cap).unwrap() {
            if base.size() * ideal.count() > limits().tensor_cap {
                continue;
            }
            let report = theta_ideal(&reg_r, &ideal, &limits()).unwrap();
            assert!(report.certified);
            assert!(report.injective, "S⊗I → SI is injective for the regular module");
            assert_eq!(
                report.product_set.members(),
                ideal.members(),
                "SI = I over base size {}",
                base.size()
            );
        }
    }
}

#[test]
fn cokernels_are_preserved_across_catalog_inclusions() {
    for base in catalog::semirings() {
        let reg = Arc::new(FiniteSemimodule::regular(&base, Side::Left));
        let subjects: Vec<_> = catalog::modules_for(&base, Side::Right, &limits())
            .into_iter()
            .filter(|nm| nm.module.size() * reg.size() <= limits().tensor_cap)
            .collect();
        for sub in reg.subsemimodules(limits().enum_cap).unwrap() {
            if sub.count() == reg.size() {
                continue;
            }
            let (_, incl) = Morphism::inclusion(&reg, &sub).unwrap();
            for nm in &subjects {
                // Quotient sizes only shrink, so the caps above suffice.
                check_cokernel_preservation(&nm.module, &incl, &limits()).unwrap();
            }
        }
    }
}
