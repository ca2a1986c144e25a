//! Regularity profiles for finite semirings: von Neumann and additive
//! regularity, subtractivity and principality of one-sided ideals, idempotent
//! generation, internal direct summands, matrix-semiring scans, and two
//! empirical harnesses connecting regularity to semimodule flatness.

use std::sync::Arc;

use crate::bitset::BitSet;
use crate::enumerate::semimodules_up_to;
use crate::error::{Error, Result};
use crate::exactness::Violation;
use crate::exec;
use crate::flatness::{s_flatness, Verdict};
use crate::morphism::{direct_sum, is_normally_generated, Morphism};
use crate::semimodule::{FiniteSemimodule, Side};
use crate::semiring::{matrix_entries, matrix_mul, FiniteSemiring};
use crate::Limits;

// ----------------------------------------------------------------------
// The profile
// ----------------------------------------------------------------------

/// Everything the element- and ideal-level scans can say about one semiring.
#[derive(Debug, Clone)]
pub struct RegularityProfile {
    /// Least `s` with `a·s·a = a`, per element; `None` marks an element with
    /// no inner inverse.
    pub vn_witness: Vec<Option<usize>>,
    /// `true` iff every element has an inner inverse (`vn_witness` is total).
    pub vn_regular: bool,
    /// Least `b` with `a + b + a = a`, per element.
    pub add_witness: Vec<Option<usize>>,
    pub additively_regular: bool,
    /// Every left ideal is subtractive; the offender is the least
    /// non-subtractive left ideal otherwise.
    pub left_subtractive: bool,
    pub left_offender: Option<BitSet>,
    pub right_subtractive: bool,
    pub right_offender: Option<BitSet>,
    /// Every left ideal is principal (`= Sc` for some `c`). On a finite
    /// carrier every ideal is finitely generated, so this is the same as
    /// "every finitely generated left ideal is principal".
    pub left_bezout: bool,
    pub left_nonprincipal: Option<BitSet>,
    pub right_bezout: bool,
    pub right_nonprincipal: Option<BitSet>,
    /// Whether "von Neumann regular ⇔ every principal one-sided ideal has an
    /// idempotent generator" came out true here. Both directions are theorems,
    /// so `false` would indicate an engine defect; the field keeps the
    /// cross-check visible.
    pub idempotent_principal_ok: bool,
    /// The three identities `a(a+a') = a+a'`, `a(b+b') = (b+b')a` and
    /// `a + a(b+b') = a` over star inverses; `None` when star inverses do not
    /// exist (the semiring is not additively regular).
    pub abc: Option<(bool, bool, bool)>,
}

fn principal_ideal(s: &FiniteSemiring, c: usize, side: Side) -> BitSet {
    let mut set = BitSet::new(s.size());
    for x in 0..s.size() {
        let p = match side {
            Side::Left => s.mul(x, c),
            Side::Right => s.mul(c, x),
        };
        set.insert(p);
    }
    set
}

struct SideSurvey {
    subtractive: bool,
    offender: Option<BitSet>,
    bezout: bool,
    nonprincipal: Option<BitSet>,
    idempotent_generated: bool,
}

fn survey_side(s: &Arc<FiniteSemiring>, side: Side, limits: &Limits) -> Result<SideSurvey> {
    let reg = FiniteSemimodule::regular(s, side);
    let ideals = reg.subsemimodules(limits.enum_cap)?;

    let offender = ideals.iter().find(|i| !reg.is_subtractive(i)).cloned();
    let nonprincipal = ideals
        .iter()
        .find(|i| !i.iter().any(|c| &principal_ideal(s, c, side) == *i))
        .cloned();

    // Idempotent generation of the principal ideals on this side.
    let idempotent_generated = (0..s.size()).all(|c| {
        let p = principal_ideal(s, c, side);
        (0..s.size()).any(|e| s.mul(e, e) == e && principal_ideal(s, e, side) == p)
    });

    Ok(SideSurvey {
        subtractive: offender.is_none(),
        offender,
        bezout: nonprincipal.is_none(),
        nonprincipal,
        idempotent_generated,
    })
}

/// Full element- and ideal-level survey of `s`. Ideal enumeration requires
/// the carrier to fit under `limits.enum_cap`.
pub fn regularity_profile(s: &Arc<FiniteSemiring>, limits: &Limits) -> Result<RegularityProfile> {
    let n = s.size();
    let vn_witness: Vec<Option<usize>> =
        exec::map_collect(n, |a| (0..n).find(|&x| s.mul(s.mul(a, x), a) == a));
    let add_witness: Vec<Option<usize>> =
        exec::map_collect(n, |a| (0..n).find(|&b| s.add(s.add(a, b), a) == a));
    let vn_regular = vn_witness.iter().all(Option::is_some);
    let additively_regular = add_witness.iter().all(Option::is_some);

    let left = survey_side(s, Side::Left, limits)?;
    let right = survey_side(s, Side::Right, limits)?;

    let idempotent_generated = left.idempotent_generated && right.idempotent_generated;
    let abc = if additively_regular { Some(check_abc(s)?) } else { None };

    Ok(RegularityProfile {
        vn_witness,
        vn_regular,
        add_witness,
        additively_regular,
        left_subtractive: left.subtractive,
        left_offender: left.offender,
        right_subtractive: right.subtractive,
        right_offender: right.offender,
        left_bezout: left.bezout,
        left_nonprincipal: left.nonprincipal,
        right_bezout: right.bezout,
        right_nonprincipal: right.nonprincipal,
        idempotent_principal_ok: vn_regular == idempotent_generated,
        abc,
    })
}

// ----------------------------------------------------------------------
// Star inverses and the (A)/(B)/(C) identities
// ----------------------------------------------------------------------

/// The unique `b` with `a + b + a = a` and `b + a + b = b`.
///
/// Existence of any `c` with `a + c + a = a` already yields a mutual inverse
/// (`c + a + c` satisfies both equations), and in a commutative monoid mutual
/// inverses are unique, so [`Error::NonUnique`] signals a defect in the
/// addition table rather than a legitimate outcome.
pub fn star_inverse(s: &FiniteSemiring, a: usize) -> Result<usize> {
    let mut found: Option<usize> = None;
    for b in 0..s.size() {
        if s.add(s.add(a, b), a) == a && s.add(s.add(b, a), b) == b {
            match found {
                None => found = Some(b),
                Some(first) => {
                    return Err(Error::NonUnique { element: a, first, second: b });
                }
            }
        }
    }
    found.ok_or(Error::NotAdditivelyRegular { element: a })
}

/// The identities (A) `a(a+a') = a+a'`, (B) `a(b+b') = (b+b')a`, and
/// (C) `a + a(b+b') = a`, over the star inverses of `s`. When all three hold
/// on an additively regular von Neumann regular semiring, both Bézout flags
/// of the profile must come out true; see [`law_abc_implies_bezout`].
pub fn check_abc(s: &FiniteSemiring) -> Result<(bool, bool, bool)> {
    let n = s.size();
    let star: Vec<usize> = (0..n).map(|a| star_inverse(s, a)).collect::<Result<_>>()?;
    let mut a_holds = true;
    let mut b_holds = true;
    let mut c_holds = true;
    for a in 0..n {
        let asum = s.add(a, star[a]);
        if s.mul(a, asum) != asum {
            a_holds = false;
        }
        for b in 0..n {
            let bsum = s.add(b, star[b]);
            if s.mul(a, bsum) != s.mul(bsum, a) {
                b_holds = false;
            }
            if s.add(a, s.mul(a, bsum)) != a {
                c_holds = false;
            }
        }
    }
    Ok((a_holds, b_holds, c_holds))
}

// ----------------------------------------------------------------------
// Internal direct summands
// ----------------------------------------------------------------------

/// Search for an ideal `J` on the same side with `I ⊕ J ≅ S` under the
/// canonical addition map `(i, j) ↦ i + j`. Returns the least such `J` in
/// enumeration order, or `None`. Mere complementation (`I + J = S`) is not
/// enough; the addition map must be an isomorphism of semimodules.
pub fn is_direct_summand(
    s: &Arc<FiniteSemiring>,
    ideal: &BitSet,
    side: Side,
    limits: &Limits,
) -> Result<Option<BitSet>> {
    let reg = Arc::new(FiniteSemimodule::regular(s, side));
    if !reg.is_subsemimodule(ideal) {
        return Err(Error::BadParams(format!("{ideal} is not a one-sided ideal")));
    }
    let (imod, iemb) = reg.extract(ideal)?;
    let imod = Arc::new(imod);
    for j in reg.subsemimodules(limits.enum_cap)? {
        if ideal.count() * j.count() != reg.size() {
            continue;
        }
        let (jmod, jemb) = reg.extract(&j)?;
        let jmod = Arc::new(jmod);
        let sum = direct_sum(&imod, &jmod)?;
        let table: Vec<u16> = (0..sum.module.size())
            .map(|p| s.add(iemb[p / jmod.size()], jemb[p % jmod.size()]) as u16)
            .collect();
        // Linear by construction (addition is commutative and the action
        // distributes); `new` re-verifies that along with the endpoints.
        let addition = Morphism::new(sum.module.clone(), reg.clone(), table)?;
        if addition.is_isomorphism() {
            return Ok(Some(j));
        }
    }
    Ok(None)
}

// ----------------------------------------------------------------------
// Matrix scans
// ----------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct MatrixScanReport {
    pub n: usize,
    /// Matrices examined.
    pub scanned: usize,
    /// Row-major entry vectors of the matrices with no inner inverse,
    /// in scan order.
    pub non_regular: Vec<Vec<usize>>,
}

/// Least `B` (as a row-major entry vector) with `A·B·A = A`, scanning all
/// `|S|^(n²)` candidates in index order.
pub fn matrix_regular_witness(s: &FiniteSemiring, n: usize, a: &[usize]) -> Option<Vec<usize>> {
    let total = s.size().pow((n * n) as u32);
    exec::find_first(total, |bx| {
        let b = matrix_entries(s, n, bx);
        (matrix_mul(s, n, &matrix_mul(s, n, a, &b), a) == a).then_some(b)
    })
}

/// Brute-force regularity scan over `Mₙ(S)`. With `elements` given, only
/// those matrices are tested (the inner witness search stays exhaustive);
/// without it the full `|S|^(n²)` scan must fit under `limits.carrier_cap`.
pub fn matrix_regularity_scan(
    s: &FiniteSemiring,
    n: usize,
    elements: Option<&[Vec<usize>]>,
    limits: &Limits,
) -> Result<MatrixScanReport> {
    let cells = n * n;
    let total = s
        .size()
        .checked_pow(cells as u32)
        .ok_or(Error::SizeCapExceeded {
            what: "matrix scan",
            needed: usize::MAX,
            cap: limits.carrier_cap,
        })?;
    let listed: Vec<Vec<usize>> = match elements {
        Some(list) => {
            for a in list {
                if a.len() != cells || a.iter().any(|&e| e >= s.size()) {
                    return Err(Error::BadParams(format!(
                        "matrix entries must be {cells} values below {}",
                        s.size()
                    )));
                }
            }
            list.to_vec()
        }
        None => {
            if total > limits.carrier_cap {
                return Err(Error::SizeCapExceeded {
                    what: "matrix scan",
                    needed: total,
                    cap: limits.carrier_cap,
                });
            }
            (0..total).map(|ix| matrix_entries(s, n, ix)).collect()
        }
    };
    let scanned = listed.len();
    let hits = exec::map_collect(scanned, |i| matrix_regular_witness(s, n, &listed[i]).is_none());
    let non_regular = listed
        .into_iter()
        .zip(hits)
        .filter_map(|(a, miss)| miss.then_some(a))
        .collect();
    Ok(MatrixScanReport { n, scanned, non_regular })
}

// ----------------------------------------------------------------------
// Flatness-facing harnesses
// ----------------------------------------------------------------------

/// Outcome of the contrapositive probe in [`eflat_regularity_probe`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProbeVerdict {
    /// A semimodule of size ≤ bound that is not e-flat — exactly what the
    /// contrapositive predicts for a subtractive, non-regular semiring.
    WitnessFound { side: Side, size: usize, census_index: usize },
    /// Bounded search exhausted without a witness. Never reported as a
    /// refutation: the universal hypothesis ("every semimodule is e-flat")
    /// is not finitely checkable, only its bounded slices are.
    NoWitnessWithinBound,
    /// The premises do not apply to this semiring (not subtractive, or
    /// already von Neumann regular).
    PremiseFails(String),
}

#[derive(Debug, Clone)]
pub struct EflatProbeReport {
    pub subtractive: bool,
    pub vn_regular: bool,
    pub bound: usize,
    pub verdict: ProbeVerdict,
    /// Census rows whose e-flat verdict was decided within the caps.
    pub decided: usize,
    pub undecided: usize,
}

/// Empirical probe of "over a subtractive semiring, if every semimodule is
/// e-flat then the semiring is von Neumann regular": for a subtractive,
/// non-regular `s`, search right semimodules (then left ones, surveyed as
/// right semimodules over the opposite semiring) of size ≤ `bound` for one
/// that is not e-flat.
pub fn eflat_regularity_probe(
    s: &Arc<FiniteSemiring>,
    bound: usize,
    limits: &Limits,
) -> Result<EflatProbeReport> {
    let profile = regularity_profile(s, limits)?;
    let subtractive = profile.left_subtractive && profile.right_subtractive;
    let mut report = EflatProbeReport {
        subtractive,
        vn_regular: profile.vn_regular,
        bound,
        verdict: ProbeVerdict::NoWitnessWithinBound,
        decided: 0,
        undecided: 0,
    };
    if !subtractive {
        let offender = profile.left_offender.or(profile.right_offender).expect("offender");
        report.verdict =
            ProbeVerdict::PremiseFails(format!("not subtractive: ideal {offender} fails"));
        return Ok(report);
    }
    if profile.vn_regular {
        report.verdict = ProbeVerdict::PremiseFails(
            "von Neumann regular: the contrapositive has nothing to find".into(),
        );
        return Ok(report);
    }
    let opposite = Arc::new(FiniteSemiring::opposite(s));
    'sides: for (side, base) in [(Side::Right, s.clone()), (Side::Left, opposite)] {
        for (ix, a) in semimodules_up_to(&base, Side::Right, bound)?.iter().enumerate() {
            match s_flatness(a, limits)?.e_flat {
                Verdict::Fails(_) => {
                    report.decided += 1;
                    report.verdict =
                        ProbeVerdict::WitnessFound { side, size: a.size(), census_index: ix };
                    break 'sides;
                }
                Verdict::Holds => report.decided += 1,
                Verdict::Inconclusive(_) => report.undecided += 1,
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone)]
pub struct BezoutRegularReport {
    /// Whether the hypotheses (left Bézout and von Neumann regular) hold.
    pub applicable: bool,
    pub premise_note: Option<String>,
    pub bound: usize,
    /// `(census index, generator count)` of every normally generated right
    /// semimodule of size ≤ bound whose m-flat verdict was decided.
    pub checked: Vec<(usize, usize)>,
    pub undecided: usize,
    /// Census indices of normally generated semimodules that came back
    /// not m-flat. A refutation of the implication — must stay empty.
    pub refutations: Vec<usize>,
}

/// Empirical check of "over a left Bézout, von Neumann regular semiring,
/// every normally generated right semimodule is m-flat", exhaustively over
/// right semimodules of size ≤ `bound` (with the same bound on the number of
/// generators in the normal-presentation search).
pub fn bezout_regular_mflat_check(
    s: &Arc<FiniteSemiring>,
    bound: usize,
    limits: &Limits,
) -> Result<BezoutRegularReport> {
    let profile = regularity_profile(s, limits)?;
    let mut report = BezoutRegularReport {
        applicable: profile.left_bezout && profile.vn_regular,
        premise_note: None,
        bound,
        checked: Vec::new(),
        undecided: 0,
        refutations: Vec::new(),
    };
    if !report.applicable {
        report.premise_note = Some(if !profile.vn_regular {
            "not von Neumann regular".into()
        } else {
            "not left Bézout".into()
        });
        return Ok(report);
    }
    for (ix, a) in semimodules_up_to(s, Side::Right, bound)?.iter().enumerate() {
        let Some((k, _)) = is_normally_generated(a, bound, limits.carrier_cap)? else {
            continue;
        };
        match s_flatness(a, limits)?.m_flat {
            Verdict::Holds => report.checked.push((ix, k)),
            Verdict::Fails(_) => {
                report.checked.push((ix, k));
                report.refutations.push(ix);
            }
            Verdict::Inconclusive(_) => report.undecided += 1,
        }
    }
    Ok(report)
}

// ----------------------------------------------------------------------
// Law checks shared with the integration suites
// ----------------------------------------------------------------------

/// "Von Neumann regular ⇔ every principal one-sided ideal has an idempotent
/// generator" — both directions, as recorded by the profile cross-check.
pub fn law_regular_iff_idempotent_principal(
    s: &Arc<FiniteSemiring>,
    limits: &Limits,
) -> Result<Vec<Violation>> {
    let profile = regularity_profile(s, limits)?;
    let mut out = Vec::new();
    if !profile.idempotent_principal_ok {
        out.push(format!(
            "regular/idempotent-generation equivalence broken: vn_regular={}",
            profile.vn_regular
        ));
    }
    Ok(out)
}

/// If `Mₙ(S)` is von Neumann regular then so is `S` (scalar matrices embed
/// `S` into `Mₙ(S)`), checked via a full matrix scan.
pub fn law_matrix_regularity_descends(
    s: &Arc<FiniteSemiring>,
    n: usize,
    limits: &Limits,
) -> Result<Vec<Violation>> {
    let scan = matrix_regularity_scan(s, n, None, limits)?;
    let mut out = Vec::new();
    if scan.non_regular.is_empty() && !regularity_profile(s, limits)?.vn_regular {
        out.push(format!(
            "M_{n}(S) is von Neumann regular but the scalar semiring is not"
        ));
    }
    Ok(out)
}

/// All of (A)/(B)/(C) on an additively regular, von Neumann regular semiring
/// force both Bézout flags.
pub fn law_abc_implies_bezout(s: &Arc<FiniteSemiring>, limits: &Limits) -> Result<Vec<Violation>> {
    let profile = regularity_profile(s, limits)?;
    let mut out = Vec::new();
    if let Some((a, b, c)) = profile.abc {
        if a && b && c && profile.vn_regular && !(profile.left_bezout && profile.right_bezout) {
            out.push(format!(
                "ABC + regularity should force Bézout on both sides, got left={} right={}",
                profile.left_bezout, profile.right_bezout
            ));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::matrix_index;

    fn arc(s: FiniteSemiring) -> Arc<FiniteSemiring> {
        Arc::new(s)
    }

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn chains_are_von_neumann_regular_and_bezout() {
        let s = arc(FiniteSemiring::chain(4).unwrap());
        let p = regularity_profile(&s, &limits()).unwrap();
        assert!(p.vn_regular);
        // min(a, s, a) = a exactly when s ≥ a, so the least witness is a.
        assert_eq!(p.vn_witness, vec![Some(0), Some(1), Some(2), Some(3)]);
        assert!(p.additively_regular);
        assert!(p.left_subtractive && p.right_subtractive);
        assert!(p.left_bezout && p.right_bezout);
        assert!(p.idempotent_principal_ok);
        assert_eq!(p.abc, Some((true, true, true)));
    }

    #[test]
    fn zmod4_is_not_von_neumann_regular() {
        let s = arc(FiniteSemiring::zmod(4).unwrap());
        let p = regularity_profile(&s, &limits()).unwrap();
        assert!(!p.vn_regular);
        // 2·s·2 = 4s = 0 ≠ 2 for every s.
        assert_eq!(p.vn_witness[2], None);
        assert!(p.additively_regular, "rings have group addition");
        // Ideals of a ring are subtractive, and Z/4 is a principal ideal ring.
        assert!(p.left_subtractive && p.right_subtractive);
        assert!(p.left_bezout && p.right_bezout);
        // {0,2} = S·2 has no idempotent generator, matching non-regularity.
        assert!(p.idempotent_principal_ok);
        assert_eq!(p.abc, Some((true, true, true)));
    }

    #[test]
    fn chain3_profile_is_fully_regular() {
        let s = arc(FiniteSemiring::chain(3).unwrap());
        let p = regularity_profile(&s, &limits()).unwrap();
        assert!(p.vn_regular && p.additively_regular);
        assert!(p.left_subtractive && p.right_subtractive);
        assert!(p.left_bezout && p.right_bezout);
        // Idempotent addition: a + b + a = max(a, b), so the least b is 0.
        assert_eq!(p.add_witness, vec![Some(0); 3]);
    }

    #[test]
    fn star_inverse_on_chains_is_the_identity() {
        let s = FiniteSemiring::chain(4).unwrap();
        for a in 0..4 {
            assert_eq!(star_inverse(&s, a).unwrap(), a);
        }
    }

    #[test]
    fn star_inverse_on_rings_is_negation_and_an_involution() {
        let s = FiniteSemiring::zmod(4).unwrap();
        for a in 0..4 {
            let b = star_inverse(&s, a).unwrap();
            assert_eq!(b, (4 - a) % 4);
            assert_eq!(star_inverse(&s, b).unwrap(), a, "(a')' = a");
        }
        assert_eq!(star_inverse(&s, 0).unwrap(), 0);
    }

    #[test]
    fn star_inverse_reports_non_regular_elements() {
        // Saturating addition: 1 + b + 1 ≥ 2 can never return to 1.
        let s = FiniteSemiring::truncation(3).unwrap();
        match star_inverse(&s, 1) {
            Err(Error::NotAdditivelyRegular { element }) => assert_eq!(element, 1),
            other => panic!("expected NotAdditivelyRegular, got {other:?}"),
        }
    }

    #[test]
    fn abc_holds_on_a_ring_times_chain_product() {
        let z2 = FiniteSemiring::zmod(2).unwrap();
        let d = FiniteSemiring::chain(2).unwrap();
        let s = arc(FiniteSemiring::product(&z2, &d));
        assert_eq!(check_abc(&s).unwrap(), (true, true, true));
        // Both factors are regular, so the implication law has teeth here.
        assert!(law_abc_implies_bezout(&s, &limits()).unwrap().is_empty());
        let p = regularity_profile(&s, &limits()).unwrap();
        assert!(p.vn_regular && p.left_bezout && p.right_bezout);
    }

    #[test]
    fn chain3_proper_ideal_is_not_a_direct_summand() {
        let s = arc(FiniteSemiring::chain(3).unwrap());
        let ideal = BitSet::from_members(3, &[0, 1]);
        assert_eq!(is_direct_summand(&s, &ideal, Side::Left, &limits()).unwrap(), None);
    }

    #[test]
    fn zmod6_even_ideal_splits_off_the_multiples_of_three() {
        let s = arc(FiniteSemiring::zmod(6).unwrap());
        let even = BitSet::from_members(6, &[0, 2, 4]);
        let j = is_direct_summand(&s, &even, Side::Left, &limits()).unwrap().unwrap();
        assert_eq!(j.members(), vec![0, 3]);
        // The whole semiring splits off the zero ideal.
        let all = BitSet::full(6);
        let j = is_direct_summand(&s, &all, Side::Left, &limits()).unwrap().unwrap();
        assert_eq!(j.members(), vec![0]);
    }

    #[test]
    fn direct_summand_rejects_non_ideals() {
        let s = arc(FiniteSemiring::zmod(4).unwrap());
        let not_ideal = BitSet::from_members(4, &[0, 1]);
        assert!(matches!(
            is_direct_summand(&s, &not_ideal, Side::Left, &limits()),
            Err(Error::BadParams(_))
        ));
    }

    #[test]
    fn matrix_scan_finds_the_non_regular_chain4_matrix() {
        let s = FiniteSemiring::chain(4).unwrap();
        let report = matrix_regularity_scan(&s, 2, None, &limits()).unwrap();
        assert_eq!(report.scanned, 256);
        let a = vec![0usize, 1, 2, 3]; // [[0,1],[2,3]] row-major
        assert!(report.non_regular.contains(&a), "no B among 256 satisfies ABA = A");
        assert_eq!(matrix_regular_witness(&s, 2, &a), None);
        // The identity matrix is its own inner inverse — and the only one.
        let id = vec![3usize, 0, 0, 3];
        assert_eq!(matrix_regular_witness(&s, 2, &id), Some(id.clone()));
        assert!(!report.non_regular.contains(&id));
        assert_eq!(matrix_index(&s, 2, &id), 195);
    }

    #[test]
    fn every_two_by_two_matrix_over_f2_is_regular() {
        let s = FiniteSemiring::zmod(2).unwrap();
        let report = matrix_regularity_scan(&s, 2, None, &limits()).unwrap();
        assert_eq!(report.scanned, 16);
        assert!(report.non_regular.is_empty());
        // Consistency with the scalar level: M₂ regular forces S regular.
        assert!(law_matrix_regularity_descends(&arc(s), 2, &limits()).unwrap().is_empty());
    }

    #[test]
    fn matrix_scan_without_a_list_respects_the_cap() {
        let s = FiniteSemiring::chain(4).unwrap();
        assert!(matches!(
            matrix_regularity_scan(&s, 3, None, &limits()),
            Err(Error::SizeCapExceeded { .. })
        ));
        // An explicit list keeps the witness search lazy and within reach.
        let id = vec![3usize, 0, 0, 0, 3, 0, 0, 0, 3];
        let report = matrix_regularity_scan(&s, 3, Some(&[id]), &limits()).unwrap();
        assert_eq!(report.scanned, 1);
        assert!(report.non_regular.is_empty());
    }

    #[test]
    fn regular_iff_idempotent_principal_across_the_catalog() {
        for s in [
            FiniteSemiring::boolean(),
            FiniteSemiring::chain(3).unwrap(),
            FiniteSemiring::chain(4).unwrap(),
            FiniteSemiring::zmod(4).unwrap(),
            FiniteSemiring::zmod(6).unwrap(),
            FiniteSemiring::truncation(3).unwrap(),
        ] {
            let s = arc(s);
            assert!(law_regular_iff_idempotent_principal(&s, &limits()).unwrap().is_empty());
        }
    }

    #[test]
    fn eflat_probe_on_zmod4_finds_the_two_element_witness() {
        let s = arc(FiniteSemiring::zmod(4).unwrap());
        let report = eflat_regularity_probe(&s, 2, &limits()).unwrap();
        assert!(report.subtractive && !report.vn_regular);
        assert_eq!(
            report.verdict,
            ProbeVerdict::WitnessFound { side: Side::Right, size: 2, census_index: 1 }
        );
    }

    #[test]
    fn eflat_probe_premises_fail_where_they_should() {
        let regular = arc(FiniteSemiring::chain(3).unwrap());
        match eflat_regularity_probe(&regular, 2, &limits()).unwrap().verdict {
            ProbeVerdict::PremiseFails(note) => assert!(note.contains("regular")),
            other => panic!("expected premise failure, got {other:?}"),
        }
        let unsubtractive = arc(FiniteSemiring::truncation(3).unwrap());
        match eflat_regularity_probe(&unsubtractive, 2, &limits()).unwrap().verdict {
            ProbeVerdict::PremiseFails(note) => assert!(note.contains("subtractive")),
            other => panic!("expected premise failure, got {other:?}"),
        }
    }

    #[test]
    fn bezout_regular_semirings_have_mflat_normally_generated_modules() {
        let s = arc(FiniteSemiring::chain(3).unwrap());
        let report = bezout_regular_mflat_check(&s, 3, &limits()).unwrap();
        assert!(report.applicable);
        assert!(report.refutations.is_empty());
        assert!(!report.checked.is_empty(), "the census is not vacuous");
    }

    #[test]
    fn bezout_check_reports_failed_premises_on_zmod4() {
        let s = arc(FiniteSemiring::zmod(4).unwrap());
        let report = bezout_regular_mflat_check(&s, 2, &limits()).unwrap();
        assert!(!report.applicable);
        assert_eq!(report.premise_note.as_deref(), Some("not von Neumann regular"));
        assert!(report.checked.is_empty());
    }
}
