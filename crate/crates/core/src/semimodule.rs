//! Finite left/right semimodules over a finite semiring.
//!
//! A semimodule is a finite commutative monoid `(M, +, 0)` with a scalar
//! action of the base semiring. Left and right modules share one table
//! layout (`action[s·|M| + m]`); the `side` tag records which way scalars
//! act, which matters once multiplication is noncommutative and for the
//! tensor product, whose left factor must be a right module.
//!
//! Subsemimodules are bit sets over the carrier together with closure
//! operators (subsemimodule closure, subtractive closure), and congruences
//! are carrier partitions closed under translation and the scalar action.

use std::sync::Arc;

use crate::bitset::BitSet;
use crate::dsu::UnionFind;
use crate::error::{Error, Result};
use crate::monoid::{self, AdditiveCarrier};
use crate::semiring::FiniteSemiring;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

#[derive(Debug, Clone)]
pub struct FiniteSemimodule {
    base: Arc<FiniteSemiring>,
    side: Side,
    size: usize,
    add: Vec<u16>,
    /// `action[s * size + m]`: `s·m` for left modules, `m·s` for right ones.
    action: Vec<u16>,
}

/// Structural equality; the base semiring compares structurally too.
impl PartialEq for FiniteSemimodule {
    fn eq(&self, other: &Self) -> bool {
        self.side == other.side
            && self.size == other.size
            && self.add == other.add
            && self.action == other.action
            && self.base == other.base
    }
}
impl Eq for FiniteSemimodule {}

impl AdditiveCarrier for FiniteSemimodule {
    fn size(&self) -> usize {
        self.size
    }
    fn zero(&self) -> usize {
        0
    }
    fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b] as usize
    }
}

impl FiniteSemimodule {
    // ------------------------------------------------------------------
    // Construction
    // ------------------------------------------------------------------

    /// Validate user tables exhaustively. `add` is `size × size`; `action`
    /// has one row per scalar, each of length `size`. The additive zero must
    /// be index 0 (validation of user data relabels via the commutative
    /// monoid normaliser before the action is interpreted, so callers should
    /// present tables with zero first).
    pub fn validate(
        base: Arc<FiniteSemiring>,
        side: Side,
        size: usize,
        add: &[Vec<usize>],
        action: &[Vec<usize>],
    ) -> Result<Self> {
        if size == 0 {
            return Err(Error::BadParams("empty carrier".into()));
        }
        // Additive structure first (zero must already be index 0: the action
        // rows are indexed against the same labelling the user supplied).
        let monoid_part = monoid::FiniteCommutativeMonoid::validate(size, add, 0)?;
        let mut flat_add = vec![0u16; size * size];
        for a in 0..size {
            for b in 0..size {
                flat_add[a * size + b] = monoid_part.add(a, b) as u16;
            }
        }
        let ns = base.size();
        if action.len() != ns || action.iter().any(|r| r.len() != size) {
            return Err(Error::SizeMismatch(format!(
                "action table must be {ns} scalar rows × {size} elements"
            )));
        }
        let mut flat_action = vec![0u16; ns * size];
        for (s, row) in action.iter().enumerate() {
            for (m, &v) in row.iter().enumerate() {
                if v >= size {
                    return Err(Error::BadParams(format!("action entry {v} out of range")));
                }
                flat_action[s * size + m] = v as u16;
            }
        }
        let module = FiniteSemimodule { base, side, size, add: flat_add, action: flat_action };
        module.check_axioms()?;
        Ok(module)
    }

    /// Exhaustive scalar-axiom scan (the additive axioms are the monoid's).
    pub fn check_axioms(&self) -> Result<()> {
        let s = &self.base;
        let n = self.size;
        for m in 0..n {
            if self.act(s.one(), m) != m {
                return Err(Error::AxiomViolation { law: "1 acts as identity", witness: vec![m] });
            }
            if self.act(s.zero(), m) != 0 {
                return Err(Error::AxiomViolation { law: "0 scalar annihilates", witness: vec![m] });
            }
        }
        for sc in 0..s.size() {
            if self.act(sc, 0) != 0 {
                return Err(Error::AxiomViolation { law: "scalars fix 0", witness: vec![sc] });
            }
            for m in 0..n {
                for m2 in 0..n {
                    if self.act(sc, self.add(m, m2)) != self.add(self.act(sc, m), self.act(sc, m2))
                    {
                        return Err(Error::AxiomViolation {
                            law: "action distributes over module addition",
                            witness: vec![sc, m, m2],
                        });
                    }
                }
            }
            for sc2 in 0..s.size() {
                for m in 0..n {
                    if self.act(s.add(sc, sc2), m) != self.add(self.act(sc, m), self.act(sc2, m)) {
                        return Err(Error::AxiomViolation {
                            law: "action distributes over scalar addition",
                            witness: vec![sc, sc2, m],
                        });
                    }
                    // Left: (s·s2)·m = s·(s2·m); right: m·(s·s2) = (m·s)·s2.
                    let composite = match self.side {
                        Side::Left => self.act(sc, self.act(sc2, m)),
                        Side::Right => self.act(sc2, self.act(sc, m)),
                    };
                    if self.act(s.mul(sc, sc2), m) != composite {
                        return Err(Error::AxiomViolation {
                            law: "action respects scalar multiplication",
                            witness: vec![sc, sc2, m],
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Build from closures; callers promise the axioms hold (checked in
    /// debug builds).
    pub fn from_fn(
        base: Arc<FiniteSemiring>,
        side: Side,
        size: usize,
        add: impl Fn(usize, usize) -> usize,
        act: impl Fn(usize, usize) -> usize,
    ) -> Self {
        let ns = base.size();
        let mut add_t = vec![0u16; size * size];
        for a in 0..size {
            for b in 0..size {
                add_t[a * size + b] = add(a, b) as u16;
            }
        }
        let mut act_t = vec![0u16; ns * size];
        for s in 0..ns {
            for m in 0..size {
                act_t[s * size + m] = act(s, m) as u16;
            }
        }
        let module = FiniteSemimodule { base, side, size, add: add_t, action: act_t };
        debug_assert!(module.check_axioms().is_ok(), "from_fn got a non-module");
        module
    }

    /// The semiring as a module over itself (left: `s·m`, right: `m·s`).
    pub fn regular(base: &Arc<FiniteSemiring>, side: Side) -> Self {
        let b = base.clone();
        let mul = |s: usize, m: usize| match side {
            Side::Left => base.mul(s, m),
            Side::Right => base.mul(m, s),
        };
        Self::from_fn(b, side, base.size(), |a, c| base.add(a, c), mul)
    }

    /// The zero module.
    pub fn zero_module(base: &Arc<FiniteSemiring>, side: Side) -> Self {
        Self::from_fn(base.clone(), side, 1, |_, _| 0, |_, _| 0)
    }

    /// Free module of rank `k`: tuples over the semiring, componentwise
    /// structure. Tuple `(a_0, …, a_{k−1})` is the index `Σ a_i·|S|^i`.
    /// Errors when `|S|^k` exceeds `cap`.
    pub fn free(base: &Arc<FiniteSemiring>, side: Side, k: usize, cap: usize) -> Result<Self> {
        let ns = base.size();
        let mut n: usize = 1;
        for _ in 0..k {
            n = n
                .checked_mul(ns)
                .filter(|&n| n <= cap)
                .ok_or(Error::SizeCapExceeded { what: "free module carrier", needed: ns.pow(k as u32), cap })?;
        }
        let decode = |mut x: usize| -> Vec<usize> {
            (0..k)
                .map(|_| {
                    let c = x % ns;
                    x /= ns;
                    c
                })
                .collect()
        };
        let encode =
            |v: &[usize]| -> usize { v.iter().rev().fold(0, |acc, &c| acc * ns + c) };
        let add = |a: usize, b: usize| {
            let (va, vb) = (decode(a), decode(b));
            encode(&va.iter().zip(&vb).map(|(&x, &y)| base.add(x, y)).collect::<Vec<_>>())
        };
        let act = |s: usize, m: usize| {
            let vm = decode(m);
            let out: Vec<usize> = vm
                .iter()
                .map(|&x| match side {
                    Side::Left => base.mul(s, x),
                    Side::Right => base.mul(x, s),
                })
                .collect();
            encode(&out)
        };
        Ok(Self::from_fn(base.clone(), side, n, add, act))
    }

    /// Standard coordinate vector `e_i` in a free module built by [`free`].
    pub fn free_unit(base: &FiniteSemiring, i: usize) -> usize {
        base.one() * base.size().pow(i as u32)
    }

    /// Direct sum with componentwise structure; pair `(a, b)` is the index
    /// `a·|B| + b`.
    pub fn direct_sum(a: &FiniteSemimodule, b: &FiniteSemimodule) -> Result<FiniteSemimodule> {
        if a.base != b.base || a.side != b.side {
            return Err(Error::EndpointMismatch(
                "direct sum needs modules over one semiring on one side".into(),
            ));
        }
        let (na, nb) = (a.size, b.size);
        Ok(Self::from_fn(
            a.base.clone(),
            a.side,
            na * nb,
            |x, y| a.add(x / nb, y / nb) * nb + b.add(x % nb, y % nb),
            |s, x| a.act(s, x / nb) * nb + b.act(s, x % nb),
        ))
    }

    /// Extract a subsemimodule as a standalone module; returns the module
    /// and the carrier embedding (new index -> parent index, ascending).
    pub fn extract(&self, members: &BitSet) -> Result<(FiniteSemimodule, Vec<usize>)> {
        if !self.is_subsemimodule(members) {
            return Err(Error::BadParams(format!(
                "set {members} is not a subsemimodule"
            )));
        }
        let elems = members.members();
        let mut back = vec![usize::MAX; self.size];
        for (new, &old) in elems.iter().enumerate() {
            back[old] = new;
        }
        let module = Self::from_fn(
            self.base.clone(),
            self.side,
            elems.len(),
            |a, b| back[self.add(elems[a], elems[b])],
            |s, m| back[self.act(s, elems[m])],
        );
        Ok((module, elems))
    }

    // ------------------------------------------------------------------
    // Accessors
    // ------------------------------------------------------------------

    pub fn base(&self) -> &Arc<FiniteSemiring> {
        &self.base
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Scalar action: `s·m` for left modules, `m·s` for right ones.
    #[inline]
    pub fn act(&self, s: usize, m: usize) -> usize {
        self.action[s * self.size + m] as usize
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b] as usize
    }

    /// Row-major addition table (`size × size`).
    pub fn add_table(&self) -> &[u16] {
        &self.add
    }

    /// Scalar-major action table (`base.size() × size`).
    pub fn action_table(&self) -> &[u16] {
        &self.action
    }

    /// Additive part as a standalone commutative monoid.
    pub fn additive_monoid(&self) -> monoid::FiniteCommutativeMonoid {
        monoid::FiniteCommutativeMonoid::from_fn(self.size, 0, |a, b| self.add(a, b))
    }

    /// Structural fingerprint used for caching and deduplication.
    pub fn fingerprint(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.side.hash(&mut h);
        self.size.hash(&mut h);
        self.add.hash(&mut h);
        self.action.hash(&mut h);
        self.base.size().hash(&mut h);
        h.finish()
    }

    // ------------------------------------------------------------------
    // Subsemimodules
    // ------------------------------------------------------------------

    /// Is `set` closed under addition, the scalar action, and does it
    /// contain 0?
    pub fn is_subsemimodule(&self, set: &BitSet) -> bool {
        if !set.contains(0) {
            return false;
        }
        let members = set.members();
        members.iter().all(|&a| {
            members.iter().all(|&b| set.contains(self.add(a, b)))
                && (0..self.base.size()).all(|s| set.contains(self.act(s, a)))
        })
    }

    /// Least subsemimodule containing `seed`.
    pub fn subsemimodule_closure(&self, seed: &BitSet) -> BitSet {
        let mut out = BitSet::new(self.size);
        out.insert(0);
        out.union_with(seed);
        loop {
            let mut grew = false;
            let members = out.members();
            for &a in &members {
                for s in 0..self.base.size() {
                    let v = self.act(s, a);
                    if !out.contains(v) {
                        out.insert(v);
                        grew = true;
                    }
                }
                for &b in &members {
                    let v = self.add(a, b);
                    if !out.contains(v) {
                        out.insert(v);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        out
    }

    /// All subsemimodules, as deduplicated closures of all subsets,
    /// ascending by (member count, membership). Includes `{0}` and `M`.
    /// Errors when the carrier exceeds `enum_cap`.
    pub fn subsemimodules(&self, enum_cap: usize) -> Result<Vec<BitSet>> {
        if self.size > enum_cap {
            return Err(Error::SizeCapExceeded {
                what: "subsemimodule enumeration",
                needed: self.size,
                cap: enum_cap,
            });
        }
        let mut seen = std::collections::BTreeSet::new();
        for mask in 0u64..(1u64 << self.size) {
            let mut seed = BitSet::new(self.size);
            for i in 0..self.size {
                if mask >> i & 1 == 1 {
                    seed.insert(i);
                }
            }
            seen.insert(self.subsemimodule_closure(&seed));
        }
        let mut out: Vec<BitSet> = seen.into_iter().collect();
        out.sort_by_key(|s| (s.count(), s.clone()));
        Ok(out)
    }

    /// Subtractive closure of a subsemimodule; the result is again a
    /// subsemimodule (asserted).
    pub fn subtractive_closure(&self, sub: &BitSet) -> BitSet {
        let cl = monoid::subtractive_closure(self, sub);
        debug_assert!(self.is_subsemimodule(&cl), "closure left the subsemimodule lattice");
        cl
    }

    pub fn is_subtractive(&self, sub: &BitSet) -> bool {
        monoid::is_subtractive(self, sub)
    }

    /// Elements `k` with `m + k = m' + k ⇒ m = m'`.
    pub fn cancellative_elements(&self) -> BitSet {
        monoid::cancellative_set(self)
    }

    pub fn is_cancellative(&self) -> bool {
        self.cancellative_elements().count() == self.size
    }

    // ------------------------------------------------------------------
    // Congruences and quotients
    // ------------------------------------------------------------------

    /// Least congruence containing the given pairs: the equivalence closure
    /// iterated together with translation (`x ~ y ⇒ x+t ~ y+t`) and the
    /// scalar action (`x ~ y ⇒ s·x ~ s·y`) to a fixpoint.
    pub fn congruence_from_pairs(self: &Arc<Self>, pairs: &[(usize, usize)]) -> Result<Congruence> {
        let n = self.size;
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::BadParams(format!("pair ({a},{b}) out of range")));
            }
        }
        let mut uf = UnionFind::new(n);
        for &(a, b) in pairs {
            uf.union(a, b);
        }
        loop {
            let mut changed = false;
            let (ids, _) = uf.class_ids();
            // Representative of each class: least member.
            let mut rep: Vec<usize> = vec![usize::MAX; n];
            for m in (0..n).rev() {
                rep[ids[m] as usize] = m;
            }
            for x in 0..n {
                let r = rep[ids[x] as usize];
                if r == x {
                    continue;
                }
                for t in 0..n {
                    changed |= uf.union(self.add(x, t), self.add(r, t));
                }
                for s in 0..self.base.size() {
                    changed |= uf.union(self.act(s, x), self.act(s, r));
                }
            }
            if !changed {
                break;
            }
        }
        let (class_of, classes) = uf.class_ids();
        Ok(Congruence { parent: self.clone(), class_of, classes })
    }

    /// Bourne congruence of a subsemimodule: `m ≡ m'` iff `m + l = m' + l'`
    /// for some `l, l'` in `sub`.
    pub fn bourne_congruence(self: &Arc<Self>, sub: &BitSet) -> Result<Congruence> {
        if !self.is_subsemimodule(sub) {
            return Err(Error::BadParams(format!("set {sub} is not a subsemimodule")));
        }
        let class_of = monoid::bourne_classes(self.as_ref(), sub)?;
        let classes = class_of.iter().map(|&c| c as usize).max().unwrap_or(0) + 1;
        let cong = Congruence { parent: self.clone(), class_of, classes };
        debug_assert!(cong.verify().is_ok(), "Bourne relation must be a congruence");
        Ok(cong)
    }
}

// ----------------------------------------------------------------------
// Subsemimodule handle
// ----------------------------------------------------------------------

/// A subsemimodule of a fixed parent, as a validated member set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubSemimodule {
    parent: Arc<FiniteSemimodule>,
    members: BitSet,
}

impl SubSemimodule {
    pub fn new(parent: Arc<FiniteSemimodule>, members: BitSet) -> Result<Self> {
        if members.len() != parent.size() {
            return Err(Error::SizeMismatch("member set has the wrong carrier size".into()));
        }
        if !parent.is_subsemimodule(&members) {
            return Err(Error::BadParams(format!("set {members} is not a subsemimodule")));
        }
        Ok(SubSemimodule { parent, members })
    }

    pub fn parent(&self) -> &Arc<FiniteSemimodule> {
        &self.parent
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn is_subtractive(&self) -> bool {
        self.parent.is_subtractive(&self.members)
    }
}

// ----------------------------------------------------------------------
// Congruences
// ----------------------------------------------------------------------

/// A congruence on a semimodule, stored as normalised class ids
/// (class 0 contains the zero element).
#[derive(Debug, Clone)]
pub struct Congruence {
    parent: Arc<FiniteSemimodule>,
    class_of: Vec<u32>,
    classes: usize,
}

impl Congruence {
    pub fn parent(&self) -> &Arc<FiniteSemimodule> {
        &self.parent
    }

    pub fn classes(&self) -> usize {
        self.classes
    }

    pub fn class_of(&self, m: usize) -> usize {
        self.class_of[m] as usize
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    /// Exhaustively check the congruence property (translation and scalar
    /// compatibility on every class pair).
    pub fn verify(&self) -> Result<()> {
        let m = &self.parent;
        let n = m.size();
        for a in 0..n {
            for b in 0..n {
                if self.class_of[a] != self.class_of[b] {
                    continue;
                }
                for t in 0..n {
                    if self.class_of[m.add(a, t)] != self.class_of[m.add(b, t)] {
                        return Err(Error::IllDefined { witness: vec![a, b, t] });
                    }
                }
                for s in 0..m.base().size() {
                    if self.class_of[m.act(s, a)] != self.class_of[m.act(s, b)] {
                        return Err(Error::IllDefined { witness: vec![a, b, s] });
                    }
                }
            }
        }
        Ok(())
    }

    /// Build the quotient module. Classes are renumbered with the class of 0
    /// first, then ascending least members; the second component maps parent
    /// elements to quotient elements. Errors with `IllDefined` if either
    /// operation fails to be constant on classes.
    pub fn quotient(&self) -> Result<(FiniteSemimodule, Vec<u16>)> {
        let m = &self.parent;
        let n = m.size();
        let (q_monoid, proj) = monoid::quotient_by_partition(m.as_ref(), &self.class_of)?;
        let k = q_monoid.size();
        // Representatives per quotient class (least member).
        let mut rep = vec![usize::MAX; k];
        for x in (0..n).rev() {
            rep[proj[x] as usize] = x;
        }
        // Action through representatives + exhaustive well-definedness.
        let ns = m.base().size();
        let mut act = vec![0u16; ns * k];
        for s in 0..ns {
            for c in 0..k {
                act[s * k + c] = proj[m.act(s, rep[c])];
            }
        }
        for s in 0..ns {
            for x in 0..n {
                if proj[m.act(s, x)] != act[s * k + proj[x] as usize] {
                    return Err(Error::IllDefined { witness: vec![s, x] });
                }
            }
        }
        let module = FiniteSemimodule {
            base: m.base().clone(),
            side: m.side(),
            size: k,
            add: (0..k * k).map(|p| q_monoid.add(p / k, p % k) as u16).collect(),
            action: act,
        };
        debug_assert!(module.check_axioms().is_ok());
        Ok((module, proj))
    }
}

/// Bourne quotient `M/L`: quotient by the Bourne congruence of `L`.
/// Returns the quotient module and the projection table.
pub fn bourne_quotient(
    parent: &Arc<FiniteSemimodule>,
    sub: &BitSet,
) -> Result<(FiniteSemimodule, Vec<u16>)> {
    parent.bourne_congruence(sub)?.quotient()
}

/// Cancellative hull `c(M)`: quotient by `m ~ m'` iff `m + k = m' + k` for
/// some `k`. The result is cancellative (asserted) and the projection is
/// the couniversal map.
pub fn cancellative_hull(
    parent: &Arc<FiniteSemimodule>,
) -> Result<(FiniteSemimodule, Vec<u16>)> {
    let classes = monoid::cancellative_hull_classes(parent.as_ref());
    let cong = Congruence {
        parent: parent.clone(),
        class_of: classes.clone(),
        classes: classes.iter().map(|&c| c as usize).max().unwrap_or(0) + 1,
    };
    let (q, proj) = cong.quotient()?;
    debug_assert!(q.is_cancellative(), "hull must be cancellative");
    Ok((q, proj))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(s: FiniteSemiring) -> Arc<FiniteSemiring> {
        Arc::new(s)
    }

    fn zmod4_self() -> Arc<FiniteSemimodule> {
        let z4 = arc(FiniteSemiring::zmod(4).unwrap());
        Arc::new(FiniteSemimodule::regular(&z4, Side::Left))
    }

    #[test]
    fn regular_module_axioms_hold() {
        for side in [Side::Left, Side::Right] {
            for s in [
                FiniteSemiring::boolean(),
                FiniteSemiring::chain(4).unwrap(),
                FiniteSemiring::truncation(3).unwrap(),
                FiniteSemiring::zmod(6).unwrap(),
            ] {
                let m = FiniteSemimodule::regular(&arc(s), side);
                m.check_axioms().unwrap();
            }
        }
    }

    #[test]
    fn validation_catches_broken_action() {
        let b = arc(FiniteSemiring::boolean());
        // Good: the 2-element semilattice as a boolean module.
        let ok = FiniteSemimodule::validate(
            b.clone(),
            Side::Right,
            2,
            &[vec![0, 1], vec![1, 1]],
            &[vec![0, 0], vec![0, 1]],
        );
        assert!(ok.is_ok());
        // Bad: scalar 1 does not act as identity.
        let bad = FiniteSemimodule::validate(
            b,
            Side::Right,
            2,
            &[vec![0, 1], vec![1, 1]],
            &[vec![0, 0], vec![0, 0]],
        );
        assert!(matches!(bad, Err(Error::AxiomViolation { law: "1 acts as identity", .. })));
    }

    #[test]
    fn subsemimodules_of_zmod4_are_the_three_subgroups() {
        let m = zmod4_self();
        let subs = m.subsemimodules(10).unwrap();
        let members: Vec<Vec<usize>> = subs.iter().map(|s| s.members()).collect();
        assert_eq!(members, vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]]);
        for s in &subs {
            assert!(m.is_subtractive(s), "ring ideals are subtractive");
        }
    }

    #[test]
    fn truncation_ideal_is_not_subtractive() {
        let t3 = arc(FiniteSemiring::truncation(3).unwrap());
        let m = Arc::new(FiniteSemimodule::regular(&t3, Side::Left));
        let subs = m.subsemimodules(10).unwrap();
        let members: Vec<Vec<usize>> = subs.iter().map(|s| s.members()).collect();
        assert_eq!(members, vec![vec![0], vec![0, 2], vec![0, 1, 2]]);
        let i = BitSet::from_members(3, &[0, 2]);
        assert_eq!(m.subtractive_closure(&i).members(), vec![0, 1, 2]);
        assert!(!m.is_subtractive(&i));
    }

    #[test]
    fn free_module_coordinates() {
        let b = arc(FiniteSemiring::boolean());
        let f = FiniteSemimodule::free(&b, Side::Right, 2, 4096).unwrap();
        assert_eq!(f.size(), 4);
        let e0 = FiniteSemimodule::free_unit(&b, 0);
        let e1 = FiniteSemimodule::free_unit(&b, 1);
        assert_eq!((e0, e1), (1, 2));
        assert_eq!(f.add(e0, e1), 3);
        assert_eq!(f.act(0, 3), 0);
        assert!(FiniteSemimodule::free(&b, Side::Right, 13, 4096).is_err());
    }

    #[test]
    fn direct_sum_is_componentwise() {
        let z4 = arc(FiniteSemiring::zmod(4).unwrap());
        let m = Arc::new(FiniteSemimodule::regular(&z4, Side::Left));
        let sum = FiniteSemimodule::direct_sum(&m, &m).unwrap();
        assert_eq!(sum.size(), 16);
        // (1,2) + (3,3) = (0,1) -> 0*4+1.
        assert_eq!(sum.add(1 * 4 + 2, 3 * 4 + 3), 1);
        sum.check_axioms().unwrap();
    }

    #[test]
    fn extract_reindexes_submodule() {
        let m = zmod4_self();
        let (sub, embed) = m.extract(&BitSet::from_members(4, &[0, 2])).unwrap();
        assert_eq!(sub.size(), 2);
        assert_eq!(embed, vec![0, 2]);
        // 1 + 1 = 0 in the extracted module ({0,2} with 2+2=0).
        assert_eq!(sub.add(1, 1), 0);
        // Scalars act through the parent: 3·2 = 2 mod 4 -> new index 1.
        assert_eq!(sub.act(3, 1), 1);
        assert!(m.extract(&BitSet::from_members(4, &[0, 1])).is_err());
    }

    #[test]
    fn bourne_quotient_of_zmod4_by_evens_is_zmod2() {
        let m = zmod4_self();
        let evens = BitSet::from_members(4, &[0, 2]);
        let (q, proj) = bourne_quotient(&m, &evens).unwrap();
        assert_eq!(q.size(), 2);
        assert_eq!(proj, vec![0, 1, 0, 1]);
        assert_eq!(q.add(1, 1), 0);
        q.check_axioms().unwrap();
    }

    #[test]
    fn bourne_quotient_of_chain3_by_lower_ideal_is_boolean() {
        let c3 = arc(FiniteSemiring::chain(3).unwrap());
        let m = Arc::new(FiniteSemimodule::regular(&c3, Side::Left));
        let lower = BitSet::from_members(3, &[0, 1]);
        let (q, proj) = bourne_quotient(&m, &lower).unwrap();
        // Classes {0, 1} and {2}: the two-element semilattice.
        assert_eq!(q.size(), 2);
        assert_eq!(proj, vec![0, 0, 1]);
        assert_eq!(q.add(1, 1), 1);
    }

    #[test]
    fn bourne_quotient_by_non_subtractive_ideal_collapses_everything() {
        let t3 = arc(FiniteSemiring::truncation(3).unwrap());
        let m = Arc::new(FiniteSemimodule::regular(&t3, Side::Left));
        let i = BitSet::from_members(3, &[0, 2]);
        let (q, _) = bourne_quotient(&m, &i).unwrap();
        assert_eq!(q.size(), 1, "1+2 = 0+2 identifies 1 with 0, then everything");
    }

    #[test]
    fn cancellative_hull_examples() {
        // Boolean: 1+1 = 0+1 collapses the carrier.
        let b = arc(FiniteSemiring::boolean());
        let m = Arc::new(FiniteSemimodule::regular(&b, Side::Left));
        let (h, _) = cancellative_hull(&m).unwrap();
        assert_eq!(h.size(), 1);
        // Z/4 is already cancellative.
        let (h, proj) = cancellative_hull(&zmod4_self()).unwrap();
        assert_eq!(h.size(), 4);
        assert_eq!(proj, vec![0, 1, 2, 3]);
        // Truncation(3): saturation kills everything.
        let t3 = arc(FiniteSemiring::truncation(3).unwrap());
        let m = Arc::new(FiniteSemimodule::regular(&t3, Side::Left));
        let (h, _) = cancellative_hull(&m).unwrap();
        assert_eq!(h.size(), 1);
    }

    #[test]
    fn cancellative_elements_per_module() {
        let t3 = arc(FiniteSemiring::truncation(3).unwrap());
        let m = FiniteSemimodule::regular(&t3, Side::Left);
        assert_eq!(m.cancellative_elements().members(), vec![0]);
        let b = arc(FiniteSemiring::boolean());
        let mb = FiniteSemimodule::regular(&b, Side::Left);
        assert_eq!(mb.cancellative_elements().members(), vec![0]);
        assert!(zmod4_self().is_cancellative());
    }

    #[test]
    fn congruence_from_pairs_closes_under_translation_and_scalars() {
        let m = zmod4_self();
        // Identify 0 ~ 2: translation forces 1 ~ 3.
        let c = m.congruence_from_pairs(&[(0, 2)]).unwrap();
        assert_eq!(c.classes(), 2);
        assert!(c.related(1, 3));
        c.verify().unwrap();
        let (q, _) = c.quotient().unwrap();
        assert_eq!(q.size(), 2);
        // Identify 0 ~ 1: everything collapses.
        let c = m.congruence_from_pairs(&[(0, 1)]).unwrap();
        assert_eq!(c.classes(), 1);
    }
}
