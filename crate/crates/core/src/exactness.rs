//! Exactness of sequences of semimodules (and of plain monoids).
//!
//! For a composable pair `L -f-> M -g-> N` four nested notions are in play,
//! all purely additive:
//!
//! * **chain complex** — `g∘f = 0`;
//! * **semi-exact** — the subtractive closure of `f(L)` equals `Ker g`;
//! * **proper-exact** — `f(L) = Ker g` on the nose;
//! * **exact** — proper-exact and `g` k-normal.
//!
//! Everything here operates on addition tables, so the same classifier
//! serves semimodules, bare commutative monoids, and tensor monoids. The
//! `law_*` functions check the classical consequences of these notions on
//! supplied data and return a list of violations (empty means the law
//! held); integration tests and the reproduction CLI share them.

use std::sync::Arc;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::monoid::{self, AdditiveCarrier};
use crate::morphism::{self, Morphism};
use crate::semimodule::{bourne_quotient, FiniteSemimodule};
use crate::tensor::{induced_map, TensorMonoid};
use crate::Limits;

pub type Violation = String;

/// Exactness verdict at one interior node of a sequence.
#[derive(Debug, Clone)]
pub struct PairVerdict {
    pub chain_complex: bool,
    pub semi_exact: bool,
    pub proper_exact: bool,
    pub exact: bool,
    /// k-normality of the outgoing map (the extra condition in `exact`).
    pub outgoing_k_normal: bool,
    pub image: BitSet,
    pub image_closure: BitSet,
    pub kernel: BitSet,
    /// Least domain element with `g(f(l)) ≠ 0`, when not a chain complex.
    pub chain_witness: Option<usize>,
    /// Least element separating `f(L)` (or its closure) from `Ker g`.
    pub node_witness: Option<usize>,
}

/// Classify a composable pair given by raw addition structures and map
/// tables. `f: L -> M`, `g: M -> N`.
pub fn classify_pair(
    l: &dyn AdditiveCarrier,
    m: &dyn AdditiveCarrier,
    n: &dyn AdditiveCarrier,
    f: &[u16],
    g: &[u16],
) -> Result<PairVerdict> {
    if f.len() != l.size() || g.len() != m.size() {
        return Err(Error::SizeMismatch("map tables do not match the carrier sizes".into()));
    }
    if f.iter().any(|&v| (v as usize) >= m.size()) || g.iter().any(|&v| (v as usize) >= n.size()) {
        return Err(Error::BadParams("map entry out of range".into()));
    }
    let mut image = BitSet::new(m.size());
    for &v in f {
        image.insert(v as usize);
    }
    let g_class = monoid::classify_map(m, n, g);
    let kernel = g_class.kernel.clone();
    let image_closure = monoid::subtractive_closure(m, &image);

    let chain_witness = (0..l.size()).find(|&x| g[f[x] as usize] != 0);
    let proper_exact = image == kernel;
    let semi_exact = image_closure == kernel;
    let node_witness = if proper_exact {
        None
    } else {
        (0..m.size()).find(|&x| image.contains(x) != kernel.contains(x))
    };
    Ok(PairVerdict {
        chain_complex: chain_witness.is_none(),
        semi_exact,
        proper_exact,
        exact: proper_exact && g_class.k_normal,
        outgoing_k_normal: g_class.k_normal,
        image,
        image_closure,
        kernel,
        chain_witness,
        node_witness,
    })
}

/// Classify at the node shared by two semimodule morphisms.
pub fn classify_morphism_pair(f: &Morphism, g: &Morphism) -> Result<PairVerdict> {
    if f.cod() != g.dom() {
        return Err(Error::EndpointMismatch("pair must share the middle module".into()));
    }
    classify_pair(
        f.dom().as_ref(),
        f.cod().as_ref(),
        g.cod().as_ref(),
        f.table(),
        g.table(),
    )
}

// ----------------------------------------------------------------------
// Sequences
// ----------------------------------------------------------------------

/// A composable chain of semimodule morphisms.
#[derive(Debug, Clone)]
pub struct Sequence {
    maps: Vec<Morphism>,
}

impl Sequence {
    pub fn new(maps: Vec<Morphism>) -> Result<Self> {
        if maps.is_empty() {
            return Err(Error::ShapeError("a sequence needs at least one morphism".into()));
        }
        for pair in maps.windows(2) {
            if pair[0].cod() != pair[1].dom() {
                return Err(Error::EndpointMismatch(
                    "consecutive morphisms must be composable".into(),
                ));
            }
        }
        Ok(Sequence { maps })
    }

    pub fn maps(&self) -> &[Morphism] {
        &self.maps
    }

    pub fn modules(&self) -> Vec<&Arc<FiniteSemimodule>> {
        let mut out: Vec<&Arc<FiniteSemimodule>> =
            self.maps.iter().map(|f| f.dom()).collect();
        out.push(self.maps.last().expect("nonempty").cod());
        out
    }

    /// One verdict per interior node.
    pub fn classify(&self) -> Vec<PairVerdict> {
        self.maps
            .windows(2)
            .map(|w| classify_morphism_pair(&w[0], &w[1]).expect("validated endpoints"))
            .collect()
    }
}

/// Report for a candidate short exact sequence `0 -> L -> M -> N -> 0`.
#[derive(Debug, Clone)]
pub struct ShortExactReport {
    pub short_exact: bool,
    pub verdicts: Vec<PairVerdict>,
    pub f_normal: bool,
    pub g_normal: bool,
    /// When short exact: `L -> Ker g` bijection given by `f` (the kernel
    /// members listed ascending pair with `f`'s values).
    pub l_iso_kernel: Option<Vec<u16>>,
    /// When short exact: the canonical isomorphism `M/f(L) -> N` induced
    /// by `g` on Bourne classes.
    pub n_iso_coker: Option<Vec<u16>>,
}

/// Decide short exactness of a 5-module, 4-morphism sequence shaped
/// `0 -> L -> M -> N -> 0`, and certify the classical consequences.
pub fn is_short_exact(seq: &Sequence) -> Result<ShortExactReport> {
    if seq.maps.len() != 4 {
        return Err(Error::ShapeError("expected 0 -> L -> M -> N -> 0 (four morphisms)".into()));
    }
    let modules = seq.modules();
    if modules[0].size() != 1 || modules[4].size() != 1 {
        return Err(Error::ShapeError("the end modules must be zero modules".into()));
    }
    let f = &seq.maps[1];
    let g = &seq.maps[2];
    let fc = f.classify();
    let gc = g.classify();
    let verdicts = seq.classify();
    let proper_at_m = fc.image.members() == gc.kernel.members();
    let short_exact =
        fc.map.injective && proper_at_m && gc.map.surjective && gc.map.k_normal;

    let (mut l_iso_kernel, mut n_iso_coker) = (None, None);
    if short_exact {
        l_iso_kernel = Some(f.table().to_vec());
        // Canonical map M/f(L) -> N, [m] ↦ g(m).
        let (_, proj) = bourne_quotient(f.cod(), fc.image.members())?;
        let classes = proj.iter().map(|&c| c as usize).max().unwrap_or(0) + 1;
        let mut kappa = vec![u16::MAX; classes];
        for x in 0..f.cod().size() {
            let c = proj[x] as usize;
            let v = g.apply(x) as u16;
            if kappa[c] == u16::MAX {
                kappa[c] = v;
            } else if kappa[c] != v {
                return Err(Error::IllDefined { witness: vec![x] });
            }
        }
        let mut seen = vec![false; g.cod().size()];
        if kappa.len() != g.cod().size()
            || kappa.iter().any(|&v| std::mem::replace(&mut seen[v as usize], true))
        {
            return Err(Error::HypothesisFailure(
                "short exact sequence whose cokernel comparison is not bijective".into(),
            ));
        }
        n_iso_coker = Some(kappa);
    }
    Ok(ShortExactReport {
        short_exact,
        verdicts,
        f_normal: fc.map.normal(),
        g_normal: gc.map.normal(),
        l_iso_kernel,
        n_iso_coker,
    })
}

/// The canonical short exact sequence `0 -> L -> M -> M/L -> 0` of a
/// subtractive subsemimodule, via inclusion and Bourne projection.
pub fn canonical_ses(m: &Arc<FiniteSemimodule>, sub: &BitSet) -> Result<Sequence> {
    if !m.is_subsemimodule(sub) {
        return Err(Error::BadParams(format!("set {sub} is not a subsemimodule")));
    }
    if !m.is_subtractive(sub) {
        let closure = m.subtractive_closure(sub);
        let witness = closure.iter().find(|&x| !sub.contains(x)).unwrap_or(0);
        return Err(Error::NotSubtractive { witness });
    }
    let (l, inc) = Morphism::inclusion(m, sub)?;
    let (q, proj) = bourne_quotient(m, sub)?;
    let q = Arc::new(q);
    let pi = Morphism::new(m.clone(), q.clone(), proj)?;
    let zero_l = Arc::new(FiniteSemimodule::zero_module(m.base(), m.side()));
    let zero_r = Arc::new(FiniteSemimodule::zero_module(m.base(), m.side()));
    let start = Morphism::zero(&zero_l, &l)?;
    let end = Morphism::zero(&q, &zero_r)?;
    Sequence::new(vec![start, inc, pi, end])
}

// ----------------------------------------------------------------------
// Induced maps on cokernels
// ----------------------------------------------------------------------

/// A two-row diagram
/// ```text
///   A' --i--> A --p--> A''
///   |f        |g        :h
///   B' --j--> B --q--> B''
/// ```
/// with semi-exact rows; `h` is to be induced.
pub struct CokernelDiagram<'a> {
    pub i: &'a Morphism,
    pub p: &'a Morphism,
    pub j: &'a Morphism,
    pub q: &'a Morphism,
    pub f: &'a Morphism,
    pub g: &'a Morphism,
}

/// The induced map plus the status of the diagram lemma's two clauses on
/// this data (`*_applicable` = hypotheses hold, `*_holds` = conclusion).
pub struct InducedMapReport {
    pub h: Morphism,
    pub clause1_applicable: bool,
    pub clause1_holds: bool,
    pub clause2_applicable: bool,
    pub clause2_holds: bool,
}

/// Construct `h: A'' -> B''` with `h∘p = q∘g`, checking the hypotheses
/// (commuting square, semi-exact rows, `p` a normal epimorphism) and
/// well-definedness over every preimage.
pub fn induced_cokernel_map(d: &CokernelDiagram) -> Result<InducedMapReport> {
    let square = d.i.compose(d.g)?;
    let square2 = d.f.compose(d.j)?;
    if square.table() != square2.table() {
        return Err(Error::HypothesisFailure("the left square does not commute".into()));
    }
    let top = classify_morphism_pair(d.i, d.p)?;
    let bottom = classify_morphism_pair(d.j, d.q)?;
    if !top.semi_exact {
        return Err(Error::HypothesisFailure("top row is not semi-exact".into()));
    }
    if !bottom.semi_exact {
        return Err(Error::HypothesisFailure("bottom row is not semi-exact".into()));
    }
    let pc = d.p.classify();
    if !(pc.map.surjective && pc.map.k_normal) {
        return Err(Error::HypothesisFailure("p is not a normal epimorphism".into()));
    }

    // h(a'') = q(g(a)) for any p-preimage a; all preimages must agree.
    let mut table = vec![u16::MAX; d.p.cod().size()];
    for a in 0..d.p.dom().size() {
        let target = d.p.apply(a);
        let value = d.q.apply(d.g.apply(a)) as u16;
        if table[target] == u16::MAX {
            table[target] = value;
        } else if table[target] != value {
            return Err(Error::IllDefined { witness: vec![a] });
        }
    }
    let h = Morphism::new(d.p.cod().clone(), d.q.cod().clone(), table)?;

    let qc = d.q.classify();
    let fc = d.f.classify();
    let gc = d.g.classify();
    let hc = h.classify();
    let clause1_applicable =
        qc.map.surjective && qc.map.k_normal && fc.map.surjective && gc.map.injective;
    let clause1_holds = hc.map.injective;
    let clause2_applicable = d.g.dom().is_cancellative()
        && d.g.cod().is_cancellative()
        && d.j.classify().map.injective
        && fc.map.injective
        && hc.map.injective;
    let clause2_holds = gc.map.injective;
    Ok(InducedMapReport { h, clause1_applicable, clause1_holds, clause2_applicable, clause2_holds })
}

// ----------------------------------------------------------------------
// Law checks (empty vector = law holds on the given data)
// ----------------------------------------------------------------------

fn zero_map_from(m: &Arc<FiniteSemimodule>) -> (Morphism, Morphism) {
    let z = Arc::new(FiniteSemimodule::zero_module(m.base(), m.side()));
    (
        Morphism::zero(&z, m).expect("zero map"),
        Morphism::zero(m, &z).expect("zero map"),
    )
}

/// `f` corestricts to an isomorphism `L -> Ker g`: injective with image
/// exactly the kernel.
pub fn corestricts_onto_kernel(f: &Morphism, g: &Morphism) -> bool {
    let fc = f.classify();
    let gc = g.classify();
    fc.map.injective && fc.image.members() == gc.kernel.members()
}

/// The canonical map `M/f(L) -> N`, `[m] ↦ g(m)`, when well-defined;
/// `None` when `g` is not constant on Bourne classes of the image.
pub fn canonical_cokernel_comparison(f: &Morphism, g: &Morphism) -> Option<Vec<u16>> {
    let fc = f.classify();
    let (_, proj) = bourne_quotient(f.cod(), fc.image.members()).ok()?;
    let classes = proj.iter().map(|&c| c as usize).max().unwrap_or(0) + 1;
    let mut kappa = vec![u16::MAX; classes];
    for x in 0..f.cod().size() {
        let c = proj[x] as usize;
        let v = g.apply(x) as u16;
        if kappa[c] == u16::MAX {
            kappa[c] = v;
        } else if kappa[c] != v {
            return None;
        }
    }
    Some(kappa)
}

fn is_bijection_onto(table: &[u16], target_size: usize) -> bool {
    if table.len() != target_size {
        return false;
    }
    let mut seen = vec![false; target_size];
    table.iter().all(|&v| !std::mem::replace(&mut seen[v as usize], true))
}

/// Endpoint characterisations: `0 -> L -> M` is exact iff the map is
/// injective, and `M -> N -> 0` is exact iff the map is surjective.
pub fn law_exact_endpoints(f: &Morphism) -> Vec<Violation> {
    let mut out = Vec::new();
    let (zin, _) = zero_map_from(f.dom());
    let (_, zout) = zero_map_from(f.cod());
    let at_l = classify_morphism_pair(&zin, f).expect("endpoints");
    let fc = f.classify();
    if at_l.exact != fc.map.injective {
        out.push(format!(
            "0 -> L -> M exactness ({}) disagrees with injectivity ({})",
            at_l.exact, fc.map.injective
        ));
    }
    let at_n = classify_morphism_pair(f, &zout).expect("endpoints");
    if at_n.exact != fc.map.surjective {
        out.push(format!(
            "M -> N -> 0 exactness ({}) disagrees with surjectivity ({})",
            at_n.exact, fc.map.surjective
        ));
    }
    out
}

/// The seven endpoint/quotient characterisations of exactness, checked as
/// biconditionals on a composable pair `L -f-> M -g-> N`. The abstract
/// isomorphisms are read constructively: `L ≅ Ker g` means `f` corestricts
/// to a bijection onto the kernel, and `N ≅ M/f(L)` means the canonical
/// comparison `[m] ↦ g(m)` is a bijection.
pub fn law_exact_items(f: &Morphism, g: &Morphism) -> Vec<Violation> {
    let mut out = Vec::new();
    let fc = f.classify();
    let gc = g.classify();
    let (zin, _) = zero_map_from(f.dom());
    let (_, zout) = zero_map_from(g.cod());
    let at_l = classify_morphism_pair(&zin, f).expect("endpoints");
    let at_m = classify_morphism_pair(f, g).expect("endpoints");
    let at_n = classify_morphism_pair(g, &zout).expect("endpoints");

    let core = corestricts_onto_kernel(f, g);
    let kappa = canonical_cokernel_comparison(f, g);
    let kappa_iso = kappa.as_ref().is_some_and(|k| is_bijection_onto(k, g.cod().size()));

    // (3) 0 -> L -> M -> N proper-exact with f normal ⇔ L ≅ Ker g;
    //     likewise with semi-exact in place of proper-exact.
    let lhs_proper = at_l.proper_exact && at_m.proper_exact && fc.map.normal();
    let lhs_semi = at_l.semi_exact && at_m.semi_exact && fc.map.normal();
    if lhs_proper != core {
        out.push(format!("item 3 (proper): {lhs_proper} vs corestriction {core}"));
    }
    if lhs_semi != core {
        out.push(format!("item 3 (semi): {lhs_semi} vs corestriction {core}"));
    }
    // (4) 0 -> L -> M -> N exact ⇔ L ≅ Ker g and g k-normal.
    let lhs4 = at_l.exact && at_m.exact;
    if lhs4 != (core && gc.map.k_normal) {
        out.push(format!("item 4: {lhs4} vs {} ∧ k-normal {}", core, gc.map.k_normal));
    }
    // (5) L -> M -> N -> 0 semi-exact with g normal ⇔ N ≅ M/f(L).
    let lhs5 = at_m.semi_exact && at_n.semi_exact && gc.map.normal();
    if lhs5 != kappa_iso {
        out.push(format!("item 5: {lhs5} vs cokernel comparison {kappa_iso}"));
    }
    // (6) L -> M -> N -> 0 exact ⇔ N ≅ M/f(L) and f i-normal.
    let lhs6 = at_m.exact && at_n.exact;
    if lhs6 != (kappa_iso && fc.map.i_normal) {
        out.push(format!("item 6: {lhs6} vs {} ∧ i-normal {}", kappa_iso, fc.map.i_normal));
    }
    // (7) 0 -> L -> M -> N -> 0 exact ⇔ L ≅ Ker g and N ≅ M/f(L).
    let lhs7 = at_l.exact && at_m.exact && at_n.exact;
    if lhs7 != (core && kappa_iso) {
        out.push(format!("item 7: {lhs7} vs {core} ∧ {kappa_iso}"));
    }
    out
}

/// Normality of compositions: with `g` injective, k-normality transfers
/// between `f` and `g∘f` (and the i-normal/normal variants under their
/// side conditions); dually with `f` surjective.
pub fn law_composition_normality(f: &Morphism, g: &Morphism) -> Vec<Violation> {
    let mut out = Vec::new();
    let gf = match f.compose(g) {
        Ok(gf) => gf,
        Err(_) => return vec!["maps are not composable".into()],
    };
    let fc = f.classify().map;
    let gc = g.classify().map;
    let gfc = gf.classify().map;
    if gc.injective {
        if fc.k_normal != gfc.k_normal {
            out.push("1a: k-normality of f and g∘f differ under injective g".into());
        }
        if gfc.i_normal && !fc.i_normal {
            out.push("1b: g∘f i-normal but f is not".into());
        }
        if gfc.normal() && !fc.normal() {
            out.push("1b: g∘f normal but f is not".into());
        }
        if gc.i_normal {
            if fc.i_normal != gfc.i_normal {
                out.push("1c: i-normality of f and g∘f differ under i-normal mono g".into());
            }
            if fc.normal() != gfc.normal() {
                out.push("1c: normality of f and g∘f differ under i-normal mono g".into());
            }
        }
    }
    if fc.surjective {
        if gc.i_normal != gfc.i_normal {
            out.push("2a: i-normality of g and g∘f differ under surjective f".into());
        }
        if gfc.k_normal && !gc.k_normal {
            out.push("2b: g∘f k-normal but g is not".into());
        }
        if gfc.normal() && !gc.normal() {
            out.push("2b: g∘f normal but g is not".into());
        }
        if fc.k_normal {
            if gc.k_normal != gfc.k_normal {
                out.push("2c: k-normality of g and g∘f differ under k-normal epi f".into());
            }
            if gc.normal() != gfc.normal() {
                out.push("2c: normality of g and g∘f differ under k-normal epi f".into());
            }
        }
    }
    out
}

/// Normality of a binary direct sum of morphisms is componentwise.
pub fn law_sum_normality(f: &Morphism, g: &Morphism) -> Vec<Violation> {
    let mut out = Vec::new();
    let dom = match morphism::direct_sum(f.dom(), g.dom()) {
        Ok(ds) => ds,
        Err(e) => return vec![format!("domains do not sum: {e}")],
    };
    let cod = morphism::direct_sum(f.cod(), g.cod()).expect("codomains over one semiring");
    let sum = morphism::sum_map(&dom.module, &cod.module, f, g).expect("sum map");
    let sc = sum.classify().map;
    let fc = f.classify().map;
    let gc = g.classify().map;
    for (label, sum_flag, f_flag, g_flag) in [
        ("k-normal", sc.k_normal, fc.k_normal, gc.k_normal),
        ("i-normal", sc.i_normal, fc.i_normal, gc.i_normal),
        ("normal", sc.normal(), fc.normal(), gc.normal()),
    ] {
        if sum_flag != (f_flag && g_flag) {
            out.push(format!(
                "{label}: sum is {sum_flag} but components are {f_flag} and {g_flag}"
            ));
        }
    }
    out
}

/// Normality transfers along `id_F ⊗ φ` for a nonzero free right module
/// `F = S^rank` — in both directions.
pub fn law_tensor_normality(rank: usize, phi: &Morphism, limits: &Limits) -> Vec<Violation> {
    if rank == 0 {
        return vec!["free factor must be nonzero".into()];
    }
    let base = phi.dom().base();
    let free = match FiniteSemimodule::free(base, crate::semimodule::Side::Right, rank, limits.carrier_cap)
    {
        Ok(f) => Arc::new(f),
        Err(e) => return vec![format!("free module out of caps: {e}")],
    };
    let t_dom = match TensorMonoid::build(free.clone(), phi.dom().clone(), limits) {
        Ok(t) => t,
        Err(e) => return vec![format!("tensor out of caps: {e}")],
    };
    let t_cod = match TensorMonoid::build(free, phi.cod().clone(), limits) {
        Ok(t) => t,
        Err(e) => return vec![format!("tensor out of caps: {e}")],
    };
    if !(t_dom.certified() && t_cod.certified()) {
        return vec!["tensor not certified; no verdict".into()];
    }
    let induced = induced_map(&t_dom, &t_cod, phi).expect("certified endpoints");
    let ic = monoid::classify_map(&t_dom, &t_cod, &induced);
    let pc = phi.classify().map;
    let mut out = Vec::new();
    for (label, a, b) in [
        ("k-normal", pc.k_normal, ic.k_normal),
        ("i-normal", pc.i_normal, ic.i_normal),
        ("normal", pc.normal(), ic.normal()),
    ] {
        if a != b {
            out.push(format!("{label}: φ is {a} but id⊗φ is {b} (rank {rank})"));
        }
    }
    out
}

/// In the pullback of `ι: U -> N` (inclusion) against `g: M -> N` from a
/// short exact sequence, the projection to `M` is injective, and its image
/// is subtractive whenever `U` is subtractive in `N`.
pub fn law_pullback(seq: &Sequence, u_members: &BitSet) -> Vec<Violation> {
    let report = match is_short_exact(seq) {
        Ok(r) => r,
        Err(e) => return vec![format!("not a candidate short exact sequence: {e}")],
    };
    if !report.short_exact {
        return vec!["sequence is not short exact".into()];
    }
    let g = &seq.maps()[2];
    let n = g.cod();
    if !n.is_subsemimodule(u_members) {
        return vec![format!("{u_members} is not a subsemimodule of N")];
    }
    let (_, iota) = Morphism::inclusion(n, u_members).expect("validated subsemimodule");
    let pb = morphism::pullback(&iota, g).expect("shared codomain");
    let to_m = pb.to_right.classify();
    let mut out = Vec::new();
    if !to_m.map.injective {
        out.push("pullback projection to M is not injective".into());
    }
    if n.is_subtractive(u_members) && !to_m.map.i_normal {
        out.push("U subtractive but the pullback image in M is not".into());
    }
    out
}

/// Right-exactness of tensoring: for `L -f-> M -g-> N -> 0`,
/// (1) `g` surjective normal ⇒ `F⊗g` surjective and normal;
/// (2) row semi-exact and `g` normal ⇒ tensored row semi-exact and `F⊗g`
///     normal;
/// (3) row exact and `F⊗f` i-normal ⇒ tensored row exact.
pub fn law_right_exactness(
    fmod: &Arc<FiniteSemimodule>,
    f: &Morphism,
    g: &Morphism,
    limits: &Limits,
) -> Vec<Violation> {
    let build = |m: &Arc<FiniteSemimodule>| TensorMonoid::build(fmod.clone(), m.clone(), limits);
    let (t_l, t_m, t_n) = match (build(f.dom()), build(f.cod()), build(g.cod())) {
        (Ok(a), Ok(b), Ok(c)) => (a, b, c),
        _ => return vec!["tensor out of caps".into()],
    };
    if !(t_l.certified() && t_m.certified() && t_n.certified()) {
        return vec!["tensor not certified; no verdict".into()];
    }
    let tf = induced_map(&t_l, &t_m, f).expect("certified");
    let tg = induced_map(&t_m, &t_n, g).expect("certified");
    let gc = g.classify().map;
    let tgc = monoid::classify_map(&t_m, &t_n, &tg);
    let row = classify_morphism_pair(f, g).expect("endpoints");
    let trow = classify_pair(&t_l, &t_m, &t_n, &tf, &tg).expect("endpoints");
    let tfc = monoid::classify_map(&t_l, &t_m, &tf);

    let mut out = Vec::new();
    if gc.surjective && gc.normal() && !(tgc.surjective && tgc.normal()) {
        out.push("clause 1: F⊗g fails to be a surjective normal map".into());
    }
    if row.semi_exact && gc.surjective && gc.normal() {
        if !(trow.semi_exact && tgc.surjective && tgc.normal()) {
            out.push("clause 2: tensored row not semi-exact with F⊗g normal".into());
        }
    }
    if row.exact && gc.surjective && tfc.i_normal && !(trow.exact && tgc.surjective) {
        out.push("clause 3: tensored row not exact".into());
    }
    out
}
