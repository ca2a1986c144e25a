//! Flatness of right semimodules, decided exhaustively at finite scale.
//!
//! Three nested classes, all relative to a left target `M`:
//!
//! * **m-flat** — `F⊗ι : F⊗L → F⊗M` injective for *every* subsemimodule
//!   `L ≤ M`;
//! * **i-flat** — the same for every *subtractive* `L`;
//! * **e-flat** (normally flat) — `F⊗ι` a *normal monomorphism* for every
//!   subtractive `L`.
//!
//! The e verdict is computed by two independent routes whose agreement is
//! asserted on every call: the definition above, and the preservation of
//! canonical short exact sequences (the tensored `0 → F⊗L → F⊗M →
//! F⊗(M/L) → 0` must be an exact sequence of monoids). Quantifying over
//! canonical sequences only is complete: every short exact sequence with
//! middle `M` has a subtractive kernel, and its cokernel is the Bourne
//! quotient by that kernel.
//!
//! Verdicts are tri-state. A bounded tensor whose certification oracles
//! did not pass can neither confirm nor refute anything, so it yields
//! `Inconclusive` — never a false theorem.

use std::sync::Arc;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::exactness::{classify_morphism_pair, classify_pair};
use crate::monoid::{self, FiniteCommutativeMonoid};
use crate::morphism::{self, Morphism};
use crate::semimodule::{bourne_quotient, FiniteSemimodule, Side};
use crate::semiring::FiniteSemiring;
use crate::tensor::{induced_map, theta_ideal, TensorMonoid};
use crate::{enumerate, Limits};

pub type Violation = String;

/// Outcome of one bounded flatness decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    /// The subsemimodule of the target whose induced map breaks the
    /// property (least such in enumeration order).
    Fails(BitSet),
    /// Undecidable within the configured caps; the cause is recorded.
    Inconclusive(String),
}

impl Verdict {
    pub fn is_true(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn is_false(&self) -> bool {
        matches!(self, Verdict::Fails(_))
    }

    pub fn decided(&self) -> bool {
        !matches!(self, Verdict::Inconclusive(_))
    }
}

/// Flatness profile of one subject relative to one target.
#[derive(Debug, Clone)]
pub struct FlatnessVerdict {
    pub subject: String,
    pub target: String,
    pub m_flat: Verdict,
    pub i_flat: Verdict,
    pub e_flat: Verdict,
    /// Method tags, one per verdict, in (m, i, e) order.
    pub routes: [&'static str; 3],
}

impl FlatnessVerdict {
    /// The inclusion chain `F^e ∪ F^m ⊆ F^i`, checked whenever the
    /// participating verdicts are decided. Violations indicate a defect in
    /// the decision procedures, never a property of the inputs.
    pub fn check_inclusions(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.e_flat.is_true() && self.i_flat.is_false() {
            out.push("e-flat subject is not i-flat".into());
        }
        if self.m_flat.is_true() && self.i_flat.is_false() {
            out.push("m-flat subject is not i-flat".into());
        }
        out
    }
}

/// Fold per-subsemimodule outcomes into one verdict: a definite witness
/// beats everything, otherwise any undecided member poisons the total.
struct Fold {
    witness: Option<BitSet>,
    undecided: Option<String>,
}

impl Fold {
    fn new() -> Self {
        Fold { witness: None, undecided: None }
    }

    fn fail(&mut self, l: &BitSet) {
        if self.witness.is_none() {
            self.witness = Some(l.clone());
        }
    }

    fn unknown(&mut self, cause: String) {
        if self.undecided.is_none() {
            self.undecided = Some(cause);
        }
    }

    fn finish(self) -> Verdict {
        match (self.witness, self.undecided) {
            (Some(w), _) => Verdict::Fails(w),
            (None, Some(c)) => Verdict::Inconclusive(c),
            (None, None) => Verdict::Holds,
        }
    }
}

fn module_label(m: &FiniteSemimodule) -> String {
    format!(
        "{:?} module of size {} over base of size {}",
        m.side(),
        m.size(),
        m.base().size()
    )
}

/// Per-subsemimodule data shared by the three verdicts.
struct SubOutcome {
    members: BitSet,
    subtractive: bool,
    /// `None` when a tensor along the way was uncertified.
    injective: Option<bool>,
    normal_mono: Option<bool>,
    /// Route b at this subsemimodule (subtractive only): the tensored
    /// canonical sequence is exact.
    ses_exact: Option<bool>,
    cause: Option<String>,
}

/// Decide m-, i- and e-flatness of the right semimodule `f` relative to
/// the left semimodule `m`, sweeping every subsemimodule of the target.
pub fn flatness_wrt(
    f: &Arc<FiniteSemimodule>,
    m: &Arc<FiniteSemimodule>,
    limits: &Limits,
) -> Result<FlatnessVerdict> {
    if f.side() != Side::Right || m.side() != Side::Left {
        return Err(Error::BadParams("flatness takes a right subject and a left target".into()));
    }
    if !Arc::ptr_eq(f.base(), m.base()) && f.base().fingerprint() != m.base().fingerprint() {
        return Err(Error::EndpointMismatch("subject and target have different base semirings".into()));
    }

    let subject = module_label(f);
    let target = module_label(m);
    let routes = ["induced-inclusion", "induced-inclusion", "normal-mono+ses"];
    let all_inconclusive = |cause: String| FlatnessVerdict {
        subject: subject.clone(),
        target: target.clone(),
        m_flat: Verdict::Inconclusive(cause.clone()),
        i_flat: Verdict::Inconclusive(cause.clone()),
        e_flat: Verdict::Inconclusive(cause),
        routes,
    };

    let t_m = match TensorMonoid::build(f.clone(), m.clone(), limits) {
        Ok(t) => t,
        Err(Error::SizeCapExceeded { what, needed, cap }) => {
            return Ok(all_inconclusive(format!("tensor with target out of caps: {what} needs {needed}, cap {cap}")));
        }
        Err(e) => return Err(e),
    };
    if !t_m.certified() {
        return Ok(all_inconclusive("tensor with target not certified".into()));
    }

    let mut outcomes = Vec::new();
    for members in m.subsemimodules(limits.enum_cap)? {
        outcomes.push(sub_outcome(f, m, &t_m, &members, limits)?);
    }

    let mut m_fold = Fold::new();
    let mut i_fold = Fold::new();
    let mut e_fold = Fold::new();
    for o in &outcomes {
        match o.injective {
            Some(true) => {}
            Some(false) => m_fold.fail(&o.members),
            None => m_fold.unknown(o.cause.clone().unwrap_or_default()),
        }
        if o.subtractive {
            match o.injective {
                Some(true) => {}
                Some(false) => i_fold.fail(&o.members),
                None => i_fold.unknown(o.cause.clone().unwrap_or_default()),
            }
            match (o.normal_mono, o.ses_exact) {
                (Some(a), Some(b)) => {
                    if a != b {
                        return Err(Error::AxiomViolation {
                            law: "e-flat route agreement (definition vs sequence preservation)",
                            witness: o.members.iter().collect(),
                        });
                    }
                    if !a {
                        e_fold.fail(&o.members);
                    }
                }
                _ => e_fold.unknown(o.cause.clone().unwrap_or_default()),
            }
        }
    }

    let verdict = FlatnessVerdict {
        subject,
        target,
        m_flat: m_fold.finish(),
        i_flat: i_fold.finish(),
        e_flat: e_fold.finish(),
        routes,
    };
    let chain = verdict.check_inclusions();
    if !chain.is_empty() {
        return Err(Error::AxiomViolation { law: "flat inclusion chain", witness: vec![] });
    }
    Ok(verdict)
}

fn sub_outcome(
    f: &Arc<FiniteSemimodule>,
    m: &Arc<FiniteSemimodule>,
    t_m: &TensorMonoid,
    members: &BitSet,
    limits: &Limits,
) -> Result<SubOutcome> {
    let subtractive = m.is_subtractive(members);
    let mut outcome = SubOutcome {
        members: members.clone(),
        subtractive,
        injective: None,
        normal_mono: None,
        ses_exact: None,
        cause: None,
    };

    let (_, inc) = Morphism::inclusion(m, members)?;
    let t_l = match TensorMonoid::build(f.clone(), inc.dom().clone(), limits) {
        Ok(t) => t,
        Err(Error::SizeCapExceeded { what, .. }) => {
            outcome.cause = Some(format!("tensor with subsemimodule out of caps: {what}"));
            return Ok(outcome);
        }
        Err(e) => return Err(e),
    };
    if !t_l.certified() {
        outcome.cause = Some("tensor with subsemimodule not certified".into());
        return Ok(outcome);
    }
    let ind_inc = induced_map(&t_l, t_m, &inc)?;
    let cls = monoid::classify_map(&t_l, t_m, &ind_inc);
    outcome.injective = Some(cls.injective);
    outcome.normal_mono = Some(cls.injective && cls.i_normal);

    if subtractive {
        // Route b: the canonical short exact sequence tensors to an exact
        // monoid sequence.
        let (q, proj) = bourne_quotient(m, members)?;
        let q = Arc::new(q);
        let pi = Morphism::new(m.clone(), q.clone(), proj)?;
        let t_q = match TensorMonoid::build(f.clone(), q, limits) {
            Ok(t) => t,
            Err(Error::SizeCapExceeded { what, .. }) => {
                outcome.normal_mono = None;
                outcome.cause = Some(format!("tensor with quotient out of caps: {what}"));
                return Ok(outcome);
            }
            Err(e) => return Err(e),
        };
        if !t_q.certified() {
            outcome.normal_mono = None;
            outcome.cause = Some("tensor with quotient not certified".into());
            return Ok(outcome);
        }
        let ind_proj = induced_map(t_m, &t_q, &pi)?;
        let trivial = FiniteCommutativeMonoid::trivial();
        let at_l = classify_pair(&trivial, &t_l, t_m, &[0], &ind_inc)?;
        let at_m = classify_pair(&t_l, t_m, &t_q, &ind_inc, &ind_proj)?;
        let at_n =
            classify_pair(t_m, &t_q, &trivial, &ind_proj, &vec![0u16; t_q.size()])?;
        outcome.ses_exact = Some(at_l.exact && at_m.exact && at_n.exact);
    }
    Ok(outcome)
}

/// Decide S-m/i/e-flatness of a right semimodule via the θ-criterion:
/// `θ_I : A⊗I → AI` must be injective for every left ideal (every
/// subtractive ideal; additionally `AI ≤ A` subtractive). Cross-checked
/// against `flatness_wrt(A, S)` on every call.
pub fn s_flatness(a: &Arc<FiniteSemimodule>, limits: &Limits) -> Result<FlatnessVerdict> {
    if a.side() != Side::Right {
        return Err(Error::BadParams("S-flatness takes a right semimodule".into()));
    }
    let s_left = Arc::new(FiniteSemimodule::regular(a.base(), Side::Left));
    let routes = ["theta-ideal", "theta-ideal", "theta-ideal"];
    let subject = module_label(a);

    let mut m_fold = Fold::new();
    let mut i_fold = Fold::new();
    let mut e_fold = Fold::new();
    for ideal in s_left.subsemimodules(limits.enum_cap)? {
        let report = theta_ideal(a, &ideal, limits)?;
        let subtractive = s_left.is_subtractive(&ideal);
        if !report.certified {
            let cause = "tensor with ideal not certified".to_string();
            m_fold.unknown(cause.clone());
            if subtractive {
                i_fold.unknown(cause.clone());
                e_fold.unknown(cause);
            }
            continue;
        }
        if !report.injective {
            m_fold.fail(&ideal);
            if subtractive {
                i_fold.fail(&ideal);
            }
        }
        if subtractive && !(report.injective && report.product_set_subtractive) {
            e_fold.fail(&ideal);
        }
    }
    let verdict = FlatnessVerdict {
        subject,
        target: "regular left semimodule".into(),
        m_flat: m_fold.finish(),
        i_flat: i_fold.finish(),
        e_flat: e_fold.finish(),
        routes,
    };

    // lem359 makes the θ-criterion equivalent to the definition; a
    // disagreement would be a defect in one of the two engines.
    let direct = flatness_wrt(a, &s_left, limits)?;
    for (label, mine, theirs) in [
        ("m", &verdict.m_flat, &direct.m_flat),
        ("i", &verdict.i_flat, &direct.i_flat),
        ("e", &verdict.e_flat, &direct.e_flat),
    ] {
        if mine.decided() && theirs.decided() && (mine.is_true() != theirs.is_true()) {
            return Err(Error::AxiomViolation {
                law: match label {
                    "m" => "theta criterion agrees with the m-flat definition",
                    "i" => "theta criterion agrees with the i-flat definition",
                    _ => "theta criterion agrees with the e-flat definition",
                },
                witness: vec![],
            });
        }
    }
    let chain = verdict.check_inclusions();
    if !chain.is_empty() {
        return Err(Error::AxiomViolation { law: "flat inclusion chain", witness: vec![] });
    }
    Ok(verdict)
}

/// The two product sets of the kernel criterion: `KI` and `K ∩ FI`, whose
/// equality for all ideals ties a subtractive kernel to flatness of the
/// quotient.
#[derive(Debug, Clone)]
pub struct ProductSetReport {
    pub ki: BitSet,
    pub fi: BitSet,
    pub k_cap_fi: BitSet,
    pub equal: bool,
}

/// Compute `KI`, `FI` and `K ∩ FI` inside the right semimodule `F`, where
/// `K` is a subtractive subsemimodule and `I` a left ideal of the base.
pub fn product_set_check(
    f: &Arc<FiniteSemimodule>,
    k_members: &BitSet,
    ideal: &BitSet,
) -> Result<ProductSetReport> {
    if f.side() != Side::Right {
        return Err(Error::BadParams("the ambient module must be a right semimodule".into()));
    }
    if !f.is_subsemimodule(k_members) {
        return Err(Error::BadParams(format!("{k_members} is not a subsemimodule")));
    }
    if !f.is_subtractive(k_members) {
        let closure = f.subtractive_closure(k_members);
        let witness = closure.iter().find(|&x| !k_members.contains(x)).unwrap_or(0);
        return Err(Error::NotSubtractive { witness });
    }
    let s_left = FiniteSemimodule::regular(f.base(), Side::Left);
    if !s_left.is_subsemimodule(ideal) {
        return Err(Error::BadParams(format!("{ideal} is not a left ideal")));
    }

    let product_closure = |ambient: &BitSet| {
        let mut seed = BitSet::new(f.size());
        for x in ambient.iter() {
            for i in ideal.iter() {
                seed.insert(f.act(i, x));
            }
        }
        monoid::additive_closure(f.as_ref(), &seed)
    };
    let ki = product_closure(k_members);
    let fi = product_closure(&BitSet::full(f.size()));
    let mut k_cap_fi = BitSet::new(f.size());
    for x in k_members.iter() {
        if fi.contains(x) {
            k_cap_fi.insert(x);
        }
    }
    let equal = ki == k_cap_fi;
    Ok(ProductSetReport { ki, fi, k_cap_fi, equal })
}

// ----------------------------------------------------------------------
// Survey
// ----------------------------------------------------------------------

/// One subject's aggregated verdicts across every target in the survey.
#[derive(Debug, Clone)]
pub struct SurveyRow {
    pub module: Arc<FiniteSemimodule>,
    pub m_flat: Verdict,
    pub i_flat: Verdict,
    pub e_flat: Verdict,
    /// Census indices of the targets witnessing each failure, (m, i, e).
    pub failing_targets: [Option<usize>; 3],
}

/// Inclusion survey over all right semimodules of size ≤ `bound` up to
/// isomorphism, against all left targets of the same bound.
#[derive(Debug, Clone)]
pub struct SurveyReport {
    pub bound: usize,
    pub targets: Vec<Arc<FiniteSemimodule>>,
    pub rows: Vec<SurveyRow>,
    /// Definite breaks of `F^e ∪ F^m ⊆ F^i` — must stay empty.
    pub violations: Vec<Violation>,
    /// Subjects separating the classes (e.g. i-flat but not e-flat).
    pub strictness: Vec<String>,
}

/// Sweep the census: for each right semimodule of size ≤ `bound`, decide
/// m/i/e-flatness against every left semimodule of size ≤ `bound`.
pub fn flatness_survey(
    base: &Arc<FiniteSemiring>,
    bound: usize,
    limits: &Limits,
) -> Result<SurveyReport> {
    let subjects = enumerate::semimodules_up_to(base, Side::Right, bound)?;
    let targets = enumerate::semimodules_up_to(base, Side::Left, bound)?;

    let mut rows = Vec::new();
    for subject in &subjects {
        let mut folds = [Fold::new(), Fold::new(), Fold::new()];
        let mut failing: [Option<usize>; 3] = [None, None, None];
        for (ti, target) in targets.iter().enumerate() {
            let v = flatness_wrt(subject, target, limits)?;
            for (slot, verdict) in
                [&v.m_flat, &v.i_flat, &v.e_flat].into_iter().enumerate()
            {
                match verdict {
                    Verdict::Holds => {}
                    Verdict::Fails(l) => {
                        if failing[slot].is_none() {
                            failing[slot] = Some(ti);
                        }
                        folds[slot].fail(l);
                    }
                    Verdict::Inconclusive(c) => folds[slot].unknown(c.clone()),
                }
            }
        }
        let [fm, fi, fe] = folds;
        rows.push(SurveyRow {
            module: subject.clone(),
            m_flat: fm.finish(),
            i_flat: fi.finish(),
            e_flat: fe.finish(),
            failing_targets: failing,
        });
    }

    let mut violations = Vec::new();
    let mut strictness = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        if (row.e_flat.is_true() || row.m_flat.is_true()) && row.i_flat.is_false() {
            violations.push(format!("subject {i}: in F^e ∪ F^m but not in F^i"));
        }
        if row.i_flat.is_true() && row.e_flat.is_false() {
            strictness.push(format!("subject {i}: i-flat but not e-flat"));
        }
        if row.i_flat.is_true() && row.m_flat.is_false() {
            strictness.push(format!("subject {i}: i-flat but not m-flat"));
        }
    }
    Ok(SurveyReport { bound, targets, rows, violations, strictness })
}

// ----------------------------------------------------------------------
// Law checks (empty vector = law holds on the given data)
// ----------------------------------------------------------------------

/// A retract inherits each flatness verdict of the ambient module:
/// given `ψ: R → F`, `θ: F → R` with `θ∘ψ = id`, every class that holds
/// for `F` relative to `m` must hold for `R`.
pub fn law_retract_flatness(
    psi: &Morphism,
    theta: &Morphism,
    m: &Arc<FiniteSemimodule>,
    limits: &Limits,
) -> Vec<Violation> {
    let round = match psi.compose(theta) {
        Ok(r) => r,
        Err(e) => return vec![format!("maps do not compose: {e}")],
    };
    if round.table() != Morphism::identity(psi.dom()).table() {
        return vec!["θ∘ψ is not the identity (not a retract pair)".into()];
    }
    let big = match flatness_wrt(psi.cod(), m, limits) {
        Ok(v) => v,
        Err(e) => return vec![format!("ambient verdict failed: {e}")],
    };
    let small = match flatness_wrt(psi.dom(), m, limits) {
        Ok(v) => v,
        Err(e) => return vec![format!("retract verdict failed: {e}")],
    };
    let mut out = Vec::new();
    for (label, b, s) in [
        ("m", &big.m_flat, &small.m_flat),
        ("i", &big.i_flat, &small.i_flat),
        ("e", &big.e_flat, &small.e_flat),
    ] {
        if b.is_true() && s.is_false() {
            out.push(format!("{label}-flat ambient module with a non-{label}-flat retract"));
        }
    }
    out
}

/// A binary direct sum is x-flat relative to `m` iff both components are.
pub fn law_sum_flatness(
    f1: &Arc<FiniteSemimodule>,
    f2: &Arc<FiniteSemimodule>,
    m: &Arc<FiniteSemimodule>,
    limits: &Limits,
) -> Vec<Violation> {
    let sum = match morphism::direct_sum(f1, f2) {
        Ok(ds) => ds.module,
        Err(e) => return vec![format!("components do not sum: {e}")],
    };
    let (vs, v1, v2) = match (
        flatness_wrt(&sum, m, limits),
        flatness_wrt(f1, m, limits),
        flatness_wrt(f2, m, limits),
    ) {
        (Ok(a), Ok(b), Ok(c)) => (a, b, c),
        _ => return vec!["a component verdict failed".into()],
    };
    let mut out = Vec::new();
    for (label, s, a, b) in [
        ("m", &vs.m_flat, &v1.m_flat, &v2.m_flat),
        ("i", &vs.i_flat, &v1.i_flat, &v2.i_flat),
        ("e", &vs.e_flat, &v1.e_flat, &v2.e_flat),
    ] {
        if s.decided() && a.decided() && b.decided() && s.is_true() != (a.is_true() && b.is_true())
        {
            out.push(format!(
                "{label}-flatness of the sum ({}) differs from the conjunction ({}, {})",
                s.is_true(),
                a.is_true(),
                b.is_true()
            ));
        }
    }
    out
}

/// Along the canonical exact sequence `0 → L → M → M/L → 0` of a
/// subtractive subsemimodule: relative flatness passes from the middle to
/// the sub (all classes) and to the quotient (m and i).
pub fn law_closed_sub_factor(
    f: &Arc<FiniteSemimodule>,
    m: &Arc<FiniteSemimodule>,
    sub: &BitSet,
    limits: &Limits,
) -> Vec<Violation> {
    if !m.is_subsemimodule(sub) || !m.is_subtractive(sub) {
        return vec![format!("{sub} is not a subtractive subsemimodule")];
    }
    let (l, _) = match Morphism::inclusion(m, sub) {
        Ok(x) => x,
        Err(e) => return vec![format!("inclusion failed: {e}")],
    };
    let q = match bourne_quotient(m, sub) {
        Ok((q, _)) => Arc::new(q),
        Err(e) => return vec![format!("quotient failed: {e}")],
    };
    let (vm, vl, vq) = match (
        flatness_wrt(f, m, limits),
        flatness_wrt(f, &l, limits),
        flatness_wrt(f, &q, limits),
    ) {
        (Ok(a), Ok(b), Ok(c)) => (a, b, c),
        _ => return vec!["a verdict failed".into()],
    };
    let mut out = Vec::new();
    for (label, middle, sub_v) in [
        ("m", &vm.m_flat, &vl.m_flat),
        ("i", &vm.i_flat, &vl.i_flat),
        ("e", &vm.e_flat, &vl.e_flat),
    ] {
        if middle.is_true() && sub_v.is_false() {
            out.push(format!("{label}-flat relative to M but not to the sub L"));
        }
    }
    for (label, middle, q_v) in
        [("m", &vm.m_flat, &vq.m_flat), ("i", &vm.i_flat, &vq.i_flat)]
    {
        if middle.is_true() && q_v.is_false() {
            out.push(format!("{label}-flat relative to M but not to the quotient"));
        }
    }
    out
}

/// m-flatness of a cancellative subject extends to direct sums of
/// cancellative targets.
pub fn law_cancellative_sum_targets(
    f: &Arc<FiniteSemimodule>,
    l: &Arc<FiniteSemimodule>,
    n: &Arc<FiniteSemimodule>,
    limits: &Limits,
) -> Vec<Violation> {
    if !(f.is_cancellative() && l.is_cancellative() && n.is_cancellative()) {
        return vec!["hypotheses need cancellative subject and targets".into()];
    }
    let sum = match FiniteSemimodule::direct_sum(l, n) {
        Ok(s) => Arc::new(s),
        Err(e) => return vec![format!("targets do not sum: {e}")],
    };
    let (vl, vn, vs) = match (
        flatness_wrt(f, l, limits),
        flatness_wrt(f, n, limits),
        flatness_wrt(f, &sum, limits),
    ) {
        (Ok(a), Ok(b), Ok(c)) => (a, b, c),
        _ => return vec!["a verdict failed".into()],
    };
    if vl.m_flat.is_true() && vn.m_flat.is_true() && vs.m_flat.is_false() {
        return vec!["m-flat for both cancellative targets but not for their sum".into()];
    }
    Vec::new()
}

/// Tensoring preserves exactness according to the subject's flat class:
/// for an exact-at-the-middle pair `L → M → N`,
/// (1) e-flat (rel. M and N) with `g` normal ⇒ tensored pair exact with
///     `F⊗g` normal;
/// (2) i-flat likewise ⇒ tensored pair semi-exact with `F⊗g` k-normal;
/// (3) m-flat (no normality needed) ⇒ the same conclusion as (2).
pub fn law_tensored_exactness(
    f: &Arc<FiniteSemimodule>,
    f_map: &Morphism,
    g_map: &Morphism,
    limits: &Limits,
) -> Vec<Violation> {
    let row = match classify_morphism_pair(f_map, g_map) {
        Ok(r) => r,
        Err(e) => return vec![format!("pair does not compose: {e}")],
    };
    if !row.exact {
        return Vec::new();
    }
    let g_cls = g_map.classify().map;
    let (vm, vn) = match (
        flatness_wrt(f, f_map.cod(), limits),
        flatness_wrt(f, g_map.cod(), limits),
    ) {
        (Ok(a), Ok(b)) => (a, b),
        _ => return vec!["a flatness verdict failed".into()],
    };

    let build = |m: &Arc<FiniteSemimodule>| TensorMonoid::build(f.clone(), m.clone(), limits);
    let (t_l, t_m, t_n) = match (build(f_map.dom()), build(f_map.cod()), build(g_map.cod())) {
        (Ok(a), Ok(b), Ok(c)) => (a, b, c),
        _ => return Vec::new(),
    };
    if !(t_l.certified() && t_m.certified() && t_n.certified()) {
        return Vec::new();
    }
    let tf = induced_map(&t_l, &t_m, f_map).expect("certified endpoints");
    let tg = induced_map(&t_m, &t_n, g_map).expect("certified endpoints");
    let t_row = classify_pair(&t_l, &t_m, &t_n, &tf, &tg).expect("validated endpoints");
    let tg_cls = monoid::classify_map(&t_m, &t_n, &tg);

    let mut out = Vec::new();
    if vm.e_flat.is_true() && vn.e_flat.is_true() && g_cls.normal() {
        if !(t_row.exact && tg_cls.normal()) {
            out.push("clause 1: e-flat subject fails to preserve exactness".into());
        }
    }
    if vm.i_flat.is_true() && vn.i_flat.is_true() && g_cls.normal() {
        if !(t_row.semi_exact && tg_cls.k_normal) {
            out.push("clause 2: i-flat subject fails to preserve semi-exactness".into());
        }
    }
    if vm.m_flat.is_true() && vn.m_flat.is_true() {
        if !(t_row.semi_exact && tg_cls.k_normal) {
            out.push("clause 3: m-flat subject fails to preserve semi-exactness".into());
        }
    }
    out
}

/// Every subsemimodule of a finite target is finitely generated, so the
/// m-flat quantification over all subs coincides with the one over
/// finitely generated subs; returns the generator count certifying each.
pub fn finitely_generated_certificates(
    m: &Arc<FiniteSemimodule>,
    limits: &Limits,
) -> Result<Vec<(BitSet, usize)>> {
    let mut out = Vec::new();
    for members in m.subsemimodules(limits.enum_cap)? {
        let elems: Vec<usize> = members.iter().collect();
        let mut best = elems.len();
        // Greedy descent: drop any generator whose removal keeps the closure.
        let mut gens = elems.clone();
        loop {
            let mut dropped = false;
            for i in 0..gens.len() {
                let mut trial = gens.clone();
                trial.remove(i);
                let seed = BitSet::from_members(m.size(), &trial);
                if m.subsemimodule_closure(&seed) == members {
                    gens = trial;
                    dropped = true;
                    break;
                }
            }
            if !dropped {
                break;
            }
        }
        best = best.min(gens.len());
        let seed = BitSet::from_members(m.size(), &gens);
        debug_assert_eq!(m.subsemimodule_closure(&seed), members);
        out.push((members, best));
    }
    Ok(out)
}
