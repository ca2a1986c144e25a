//! Flatness laws across the catalog: the inclusion chain between the three
//! flatness classes, inheritance along retracts, direct sums, closed
//! subsemimodules and factors, cancellative sum targets, preservation of
//! exact rows, product-set criteria, and the ring oracle over ℤ/6.

use std::sync::Arc;

use semiflat::catalog;
use semiflat::exactness::canonical_ses;
use semiflat::flatness::{
    finitely_generated_certificates, flatness_survey, law_cancellative_sum_targets,
    law_closed_sub_factor, law_retract_flatness, law_sum_flatness, law_tensored_exactness,
    product_set_check, Verdict,
};
use semiflat::morphism::direct_sum;
use semiflat::semimodule::{FiniteSemimodule, Side};
use semiflat::semiring::FiniteSemiring;
use semiflat::Limits;

fn limits() -> Limits {
    Limits::default()
}

#[test]
fn surveys_have_no_inclusion_violations_anywhere() {
    for base in catalog::semirings() {
        let survey = flatness_survey(&base, 4, &limits()).unwrap();
        assert_eq!(
            survey.violations,
            Vec::<String>::new(),
            "F^e ∪ F^m ⊆ F^i broke over base size {}",
            base.size()
        );
        assert!(!survey.rows.is_empty());
    }
}

#[test]
fn zmod6_is_von_neumann_regular_so_every_decided_verdict_holds() {
    // ℤ/6 ≅ ℤ/2 × ℤ/3 is a von Neumann regular ring; classically every
    // module over it is flat, and every submodule inclusion is subtractive
    // and normal, so all three classes must hold wherever the engine decides.
    let z6 = Arc::new(FiniteSemiring::zmod(6).unwrap());
    let survey = flatness_survey(&z6, 4, &limits()).unwrap();
    assert!(survey.rows.len() >= 3, "zero, ℤ/2 and ℤ/3 all appear");
    for (i, row) in survey.rows.iter().enumerate() {
        for v in [&row.m_flat, &row.i_flat, &row.e_flat] {
            assert!(
                v.is_true(),
                "subject {i} (size {}) should be decidably flat over ℤ/6, got {v:?}",
                row.module.size()
            );
        }
    }
    assert!(survey.strictness.is_empty());
}

fn sub_module(
    base: &Arc<FiniteSemiring>,
    side: Side,
    members: &[usize],
) -> Arc<FiniteSemimodule> {
    let reg = FiniteSemimodule::regular(base, side);
    let set = semiflat::BitSet::from_members(base.size(), members);
    Arc::new(reg.extract(&set).unwrap().0)
}

#[test]
fn retracts_inherit_flatness_across_small_sums() {
    let z4 = Arc::new(FiniteSemiring::zmod(4).unwrap());
    let chain3 = Arc::new(FiniteSemiring::chain(3).unwrap());

    let mut cases: Vec<(Arc<FiniteSemimodule>, Arc<FiniteSemimodule>, Arc<FiniteSemimodule>)> =
        Vec::new();
    {
        let two = sub_module(&z4, Side::Right, &[0, 2]);
        let zero = Arc::new(FiniteSemimodule::zero_module(&z4, Side::Right));
        let reg_l = Arc::new(FiniteSemimodule::regular(&z4, Side::Left));
        cases.push((two.clone(), two.clone(), reg_l.clone()));
        cases.push((two.clone(), zero.clone(), reg_l.clone()));
        cases.push((zero, two, reg_l));
    }
    {
        let down = sub_module(&chain3, Side::Right, &[0, 1]);
        let zero = Arc::new(FiniteSemimodule::zero_module(&chain3, Side::Right));
        let reg_l = Arc::new(FiniteSemimodule::regular(&chain3, Side::Left));
        cases.push((down.clone(), zero.clone(), reg_l.clone()));
        cases.push((zero, down, reg_l));
    }

    for (r, g, target) in cases {
        let ds = direct_sum(&r, &g).unwrap();
        let violations = law_retract_flatness(&ds.inj_left, &ds.proj_left, &target, &limits());
        assert_eq!(violations, Vec::<String>::new());
        let violations = law_retract_flatness(&ds.inj_right, &ds.proj_right, &target, &limits());
        assert_eq!(violations, Vec::<String>::new());
    }
}

#[test]
fn sum_flatness_is_componentwise_across_the_catalog() {
    for base in catalog::semirings() {
        let right: Vec<_> = catalog::modules_for(&base, Side::Right, &limits())
            .into_iter()
            .filter(|nm| nm.module.size() <= 2)
            .collect();
        let left: Vec<_> = catalog::modules_for(&base, Side::Left, &limits())
            .into_iter()
            .filter(|nm| nm.module.size() <= limits().module_size_bound)
            .collect();
        for f1 in &right {
            for f2 in &right {
                if f1.module.size() * f2.module.size() > 4 {
                    continue;
                }
                for m in &left {
                    let out = law_sum_flatness(&f1.module, &f2.module, &m.module, &limits());
                    assert_eq!(
                        out,
                        Vec::<String>::new(),
                        "{} ⊕ {} against {} over base size {}",
                        f1.name,
                        f2.name,
                        m.name,
                        base.size()
                    );
                }
            }
        }
    }
}

#[test]
fn closed_subs_and_factors_inherit_flatness() {
    for base in catalog::semirings() {
        let reg = Arc::new(FiniteSemimodule::regular(&base, Side::Left));
        let subjects: Vec<_> = catalog::modules_for(&base, Side::Right, &limits())
            .into_iter()
            .filter(|nm| nm.module.size() * reg.size() <= limits().tensor_cap)
            .collect();
        for sub in reg.subsemimodules(limits().enum_cap).unwrap() {
            if !reg.is_subtractive(&sub) {
                continue;
            }
            for nm in &subjects {
                let out = law_closed_sub_factor(&nm.module, &reg, &sub, &limits());
                assert_eq!(
                    out,
                    Vec::<String>::new(),
                    "{} against {} ≤ S over base size {}",
                    nm.name,
                    sub,
                    base.size()
                );
            }
        }
    }
}

#[test]
fn cancellative_sum_targets_over_the_rings() {
    let z4 = Arc::new(FiniteSemiring::zmod(4).unwrap());
    let two = sub_module(&z4, Side::Right, &[0, 2]);
    let two_l = sub_module(&z4, Side::Left, &[0, 2]);
    let zero_l = Arc::new(FiniteSemimodule::zero_module(&z4, Side::Left));
    assert_eq!(
        law_cancellative_sum_targets(&two, &two_l, &two_l, &limits()),
        Vec::<String>::new()
    );
    assert_eq!(
        law_cancellative_sum_targets(&two, &two_l, &zero_l, &limits()),
        Vec::<String>::new()
    );

    let z6 = Arc::new(FiniteSemiring::zmod(6).unwrap());
    let f = sub_module(&z6, Side::Right, &[0, 3]);
    let l = sub_module(&z6, Side::Left, &[0, 3]);
    let n = sub_module(&z6, Side::Left, &[0, 2, 4]);
    assert_eq!(law_cancellative_sum_targets(&f, &l, &n, &limits()), Vec::<String>::new());
}

#[test]
fn exact_rows_stay_exact_after_tensoring_with_flat_subjects() {
    for base in catalog::semirings() {
        let reg = Arc::new(FiniteSemimodule::regular(&base, Side::Left));
        let subjects: Vec<_> = catalog::modules_for(&base, Side::Right, &limits())
            .into_iter()
            .filter(|nm| nm.module.size() * reg.size() <= limits().tensor_cap)
            .collect();
        for sub in reg.subsemimodules(limits().enum_cap).unwrap() {
            if sub.count() == reg.size() || !reg.is_subtractive(&sub) {
                continue;
            }
            let seq = canonical_ses(&reg, &sub).unwrap();
            let f = &seq.maps()[1];
            let g = &seq.maps()[2];
            for nm in &subjects {
                let out = law_tensored_exactness(&nm.module, f, g, &limits());
                assert_eq!(
                    out,
                    Vec::<String>::new(),
                    "{} over base size {} with kernel {}",
                    nm.name,
                    base.size(),
                    sub
                );
            }
        }
    }
}

#[test]
fn every_catalog_ideal_has_a_short_generator_certificate() {
    for base in catalog::semirings() {
        for side in [Side::Left, Side::Right] {
            let reg = Arc::new(FiniteSemimodule::regular(&base, side));
            let certs = finitely_generated_certificates(&reg, &limits()).unwrap();
            assert!(!certs.is_empty());
            for (members, gens) in certs {
                assert!(
                    gens <= 2,
                    "ideal {members} of base size {} needed {gens} generators",
                    base.size()
                );
            }
        }
    }
}

#[test]
fn product_sets_sit_inside_the_intersection_and_flag_equality() {
    let mut equal_count = 0usize;
    let mut strict_count = 0usize;
    for base in catalog::semirings() {
        let reg_r = Arc::new(FiniteSemimodule::regular(&base, Side::Right));
        let reg_l = FiniteSemimodule::regular(&base, Side::Left);
        let ideals = reg_l.subsemimodules(limits().enum_cap).unwrap();
        for k in reg_r.subsemimodules(limits().enum_cap).unwrap() {
            if !reg_r.is_subtractive(&k) {
                continue;
            }
            for ideal in &ideals {
                let report = product_set_check(&reg_r, &k, ideal).unwrap();
                let ki: Vec<usize> = report.ki.members();
                for x in &ki {
                    assert!(report.k_cap_fi.contains(*x), "KI ⊄ K ∩ FI");
                }
                assert_eq!(report.equal, report.ki == report.k_cap_fi);
                if report.equal {
                    equal_count += 1;
                } else {
                    strict_count += 1;
                }
            }
        }
    }
    assert!(equal_count > 0);
    // The broken-quotient example guarantees at least one strict case.
    assert!(strict_count > 0, "expected the ℤ/4 strict inclusion to appear");
}

#[test]
fn strictness_separations_recorded_for_zmod4() {
    // Frozen separation: over ℤ/4 the survey records no subject that is
    // i-flat while failing m- or e-flatness at this bound, and the size-2
    // subject fails all three; the engine must keep reporting exactly that.
    let z4 = Arc::new(FiniteSemiring::zmod(4).unwrap());
    let survey = flatness_survey(&z4, limits().module_size_bound, &limits()).unwrap();
    let row = survey.rows.iter().find(|r| r.module.size() == 2).unwrap();
    assert!(matches!(row.m_flat, Verdict::Fails(_)));
    assert!(matches!(row.i_flat, Verdict::Fails(_)));
    assert!(matches!(row.e_flat, Verdict::Fails(_)));
    assert!(row.failing_targets[0].is_some());
}
