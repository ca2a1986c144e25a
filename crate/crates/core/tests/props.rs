//! Randomised structural properties: closure operators, Bourne projections,
//! bilinearity and balance of the tensor tables, matrix arithmetic beyond
//! the materialisation cap, and star inverses.

use std::sync::Arc;

use proptest::prelude::*;

use semiflat::bitset::BitSet;
use semiflat::catalog;
use semiflat::morphism::Morphism;
use semiflat::regularity::star_inverse;
use semiflat::semimodule::{bourne_quotient, FiniteSemimodule, Side};
use semiflat::semiring::{matrix_add, matrix_entries, matrix_mul, FiniteSemiring};
use semiflat::tensor::TensorMonoid;
use semiflat::Limits;

fn regular_module(base_ix: usize, side: Side) -> Arc<FiniteSemimodule> {
    let base = catalog::semirings().swap_remove(base_ix % 6);
    Arc::new(FiniteSemimodule::regular(&base, side))
}

fn subset(m: &FiniteSemimodule, mask: u32) -> BitSet {
    let mut set = BitSet::new(m.size());
    set.insert(0);
    for i in 0..m.size() {
        if mask >> i & 1 == 1 {
            set.insert(i);
        }
    }
    set
}

proptest! {
    #[test]
    fn subsemimodule_closure_is_a_closure_operator(base_ix in 0usize..6, mask in 0u32..64, extra in 0u32..64) {
        let reg = regular_module(base_ix, Side::Left);
        let seed = subset(&reg, mask);
        let closed = reg.subsemimodule_closure(&seed);
        // Extensive, idempotent, monotone.
        prop_assert!(seed.is_subset(&closed));
        prop_assert_eq!(reg.subsemimodule_closure(&closed).members(), closed.members());
        let mut bigger = seed.clone();
        bigger.union_with(&subset(&reg, extra));
        let closed_bigger = reg.subsemimodule_closure(&bigger);
        prop_assert!(closed.is_subset(&closed_bigger));
        prop_assert!(reg.is_subsemimodule(&closed));
    }

    #[test]
    fn subtractive_closure_is_subtractive_and_minimal_enough(base_ix in 0usize..6, mask in 0u32..64) {
        let reg = regular_module(base_ix, Side::Left);
        let sub = reg.subsemimodule_closure(&subset(&reg, mask));
        let closed = reg.subtractive_closure(&sub);
        prop_assert!(sub.is_subset(&closed));
        prop_assert!(reg.is_subtractive(&closed));
        prop_assert_eq!(reg.subtractive_closure(&closed).members(), closed.members());
        // A subtractive set is its own closure.
        if reg.is_subtractive(&sub) {
            prop_assert_eq!(closed.members(), sub.members());
        }
    }

    #[test]
    fn bourne_projections_are_knormal_surjections(base_ix in 0usize..6, mask in 0u32..64) {
        let reg = regular_module(base_ix, Side::Left);
        let sub = reg.subsemimodule_closure(&subset(&reg, mask));
        let (q, proj) = bourne_quotient(&reg, &sub).unwrap();
        let pi = Morphism::new(reg.clone(), Arc::new(q), proj).unwrap();
        let cls = pi.classify();
        prop_assert!(cls.map.surjective);
        prop_assert!(cls.map.k_normal);
        // Everything in the subsemimodule collapses onto the zero class.
        for i in sub.iter() {
            prop_assert_eq!(pi.apply(i), pi.apply(0));
        }
    }

    #[test]
    fn tensor_tables_are_bilinear_and_balanced(f1 in 0usize..2, f2 in 0usize..2, m1 in 0usize..4, m2 in 0usize..4, s in 0usize..4) {
        let z4 = Arc::new(FiniteSemiring::zmod(4).unwrap());
        let reg_r = FiniteSemimodule::regular(&z4, Side::Right);
        let two = Arc::new(reg_r.extract(&BitSet::from_members(4, &[0, 2])).unwrap().0);
        let reg = Arc::new(FiniteSemimodule::regular(&z4, Side::Left));
        let t = TensorMonoid::build(two.clone(), reg.clone(), &Limits::default()).unwrap();
        prop_assert!(t.certified());
        // Additivity in each slot.
        let lhs = t.pure(two.add(f1, f2), m1);
        let rhs = t.sum_classes([t.pure(f1, m1), t.pure(f2, m1)]);
        prop_assert_eq!(lhs, rhs);
        let lhs = t.pure(f1, reg.add(m1, m2));
        let rhs = t.sum_classes([t.pure(f1, m1), t.pure(f1, m2)]);
        prop_assert_eq!(lhs, rhs);
        // Balance across the scalar.
        prop_assert_eq!(t.pure(two.act(s, f1), m1), t.pure(f1, reg.act(s, m1)));
    }

    #[test]
    fn matrix_arithmetic_works_beyond_the_cap(ax in 0usize..262144, bx in 0usize..262144, cx in 0usize..262144) {
        // 3×3 matrices over chain(4) have 4^9 elements — far beyond the
        // materialisation cap, but the entrywise operations must still form
        // a semiring.
        let s = FiniteSemiring::chain(4).unwrap();
        let a = matrix_entries(&s, 3, ax);
        let b = matrix_entries(&s, 3, bx);
        let c = matrix_entries(&s, 3, cx);
        let ab_c = matrix_mul(&s, 3, &matrix_mul(&s, 3, &a, &b), &c);
        let a_bc = matrix_mul(&s, 3, &a, &matrix_mul(&s, 3, &b, &c));
        prop_assert_eq!(ab_c, a_bc);
        let left = matrix_mul(&s, 3, &a, &matrix_add(&s, 3, &b, &c));
        let right = matrix_add(&s, 3, &matrix_mul(&s, 3, &a, &b), &matrix_mul(&s, 3, &a, &c));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn star_inverses_are_involutive_where_defined(base_ix in 0usize..6, a in 0usize..6) {
        let base = catalog::semirings().swap_remove(base_ix % 6);
        let a = a % base.size();
        if let Ok(b) = star_inverse(&base, a) {
            prop_assert_eq!(star_inverse(&base, b).unwrap(), a);
        }
    }
}
