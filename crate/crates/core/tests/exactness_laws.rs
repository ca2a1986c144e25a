//! Exactness laws driven across the whole semiring catalog: endpoint
//! characterisations, the item-level readings of exactness, normality under
//! composition, sums and tensoring, pullback projections, and
//! right-exactness of the tensor functor.

use std::sync::Arc;

use semiflat::catalog;
use semiflat::exactness::{
    canonical_ses, is_short_exact, law_composition_normality, law_exact_endpoints,
    law_exact_items, law_pullback, law_right_exactness, law_sum_normality, law_tensor_normality,
};
use semiflat::morphism::{all_linear_maps, Morphism};
use semiflat::semimodule::{bourne_quotient, FiniteSemimodule, Side};
use semiflat::Limits;

fn limits() -> Limits {
    Limits::default()
}

/// Every proper subtractive subsemimodule of every catalog regular module,
/// as (inclusion, Bourne projection) pairs.
fn catalog_inclusion_projection_pairs() -> Vec<(Morphism, Morphism)> {
    let mut out = Vec::new();
    for base in catalog::semirings() {
        let reg = Arc::new(FiniteSemimodule::regular(&base, Side::Left));
        for sub in reg.subsemimodules(limits().enum_cap).unwrap() {
            if sub.count() == reg.size() || !reg.is_subtractive(&sub) {
                continue;
            }
            let (_, incl) = Morphism::inclusion(&reg, &sub).unwrap();
            let (q, proj) = bourne_quotient(&reg, &sub).unwrap();
            let pi = Morphism::new(reg.clone(), Arc::new(q), proj).unwrap();
            out.push((incl, pi));
        }
    }
    out
}

#[test]
fn endpoint_laws_hold_for_catalog_inclusions_and_projections() {
    for (incl, pi) in catalog_inclusion_projection_pairs() {
        assert_eq!(law_exact_endpoints(&incl), Vec::<String>::new());
        assert_eq!(law_exact_endpoints(&pi), Vec::<String>::new());
    }
}

#[test]
fn item_readings_agree_on_all_bourne_pairs() {
    let pairs = catalog_inclusion_projection_pairs();
    assert!(pairs.len() >= 8, "the catalog offers a real sample");
    for (incl, pi) in pairs {
        assert_eq!(law_exact_items(&incl, &pi), Vec::<String>::new());
    }
}

/// All linear maps between the small catalog modules of one semiring,
/// capped so composition sweeps stay quick.
fn small_maps(base: &Arc<semiflat::semiring::FiniteSemiring>) -> Vec<Morphism> {
    let mut out = Vec::new();
    let modules: Vec<_> = catalog::modules_for(base, Side::Left, &limits())
        .into_iter()
        .filter(|nm| nm.module.size() <= 4)
        .collect();
    for a in &modules {
        for b in &modules {
            out.extend(all_linear_maps(&a.module, &b.module, limits().carrier_cap).unwrap());
        }
    }
    out
}

#[test]
fn composition_normality_laws_across_small_map_pairs() {
    for base in [
        Arc::new(semiflat::semiring::FiniteSemiring::zmod(4).unwrap()),
        Arc::new(semiflat::semiring::FiniteSemiring::chain(3).unwrap()),
    ] {
        let maps = small_maps(&base);
        let mut pairs = 0usize;
        for f in &maps {
            for g in &maps {
                if f.cod() != g.dom() {
                    continue;
                }
                pairs += 1;
                assert_eq!(
                    law_composition_normality(f, g),
                    Vec::<String>::new(),
                    "f: {:?}, g: {:?}",
                    f.table(),
                    g.table()
                );
            }
        }
        assert!(pairs > 50, "sweep covered a meaningful sample, got {pairs}");
    }
}

#[test]
fn sum_normality_laws_across_small_map_pairs() {
    let base = Arc::new(semiflat::semiring::FiniteSemiring::zmod(4).unwrap());
    let maps = small_maps(&base);
    for f in &maps {
        for g in &maps {
            if f.dom().size() * g.dom().size() > 8 || f.cod().size() * g.cod().size() > 8 {
                continue;
            }
            assert_eq!(law_sum_normality(f, g), Vec::<String>::new());
        }
    }
}

#[test]
fn tensor_normality_for_free_subjects_of_rank_two() {
    // Rank-2 free subjects keep the tensor inside the caps only over the
    // two-element semirings; sweep every linear map there.
    for base in [
        Arc::new(semiflat::semiring::FiniteSemiring::boolean()),
        Arc::new(semiflat::semiring::FiniteSemiring::zmod(2).unwrap()),
    ] {
        let mut checked = 0usize;
        let modules: Vec<_> = catalog::modules_for(&base, Side::Left, &limits())
            .into_iter()
            .filter(|nm| nm.module.size() <= 2)
            .collect();
        for a in &modules {
            for b in &modules {
                for phi in all_linear_maps(&a.module, &b.module, limits().carrier_cap).unwrap() {
                    assert_eq!(
                        law_tensor_normality(2, &phi, &limits()),
                        Vec::<String>::new(),
                        "{} -> {} via {:?}",
                        a.name,
                        b.name,
                        phi.table()
                    );
                    checked += 1;
                }
            }
        }
        assert!(checked >= 5, "swept a real sample, got {checked}");
    }
}

#[test]
fn pullback_projections_behave_on_catalog_sequences() {
    for base in catalog::semirings() {
        let reg = Arc::new(FiniteSemimodule::regular(&base, Side::Left));
        for sub in reg.subsemimodules(limits().enum_cap).unwrap() {
            if sub.count() == reg.size() || !reg.is_subtractive(&sub) {
                continue;
            }
            let seq = canonical_ses(&reg, &sub).unwrap();
            assert!(is_short_exact(&seq).unwrap().short_exact);
            // Pull back every subsemimodule of the quotient.
            let n = seq.maps()[2].cod().clone();
            for u in n.subsemimodules(limits().enum_cap).unwrap() {
                assert_eq!(law_pullback(&seq, &u), Vec::<String>::new());
            }
        }
    }
}

#[test]
fn right_exactness_laws_hold_for_catalog_subjects() {
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
            let (_, incl) = Morphism::inclusion(&reg, &sub).unwrap();
            let (q, proj) = bourne_quotient(&reg, &sub).unwrap();
            let pi = Morphism::new(reg.clone(), Arc::new(q), proj).unwrap();
            for nm in &subjects {
                let out = law_right_exactness(&nm.module, &incl, &pi, &limits());
                let ok = out.is_empty() || out == vec!["tensor out of caps".to_string()];
                assert!(ok, "{} over {}: {out:?}", nm.name, base.size());
            }
        }
    }
}
