//! Finite commutative monoids and the additive machinery shared by
//! semirings, semimodules and tensor monoids.
//!
//! Exactness-style notions (kernels, subtractive closure, k-normal and
//! i-normal maps, Bourne quotients, cancellative hulls) only mention
//! addition and zero, so they are implemented once here against the
//! [`AdditiveCarrier`] trait and reused by every structure in the crate.

use std::sync::Arc;

use crate::bitset::BitSet;
use crate::dsu::UnionFind;
use crate::error::{Error, Result};

/// Anything with a finite carrier `0..size`, a commutative associative
/// addition table and a neutral element.
pub trait AdditiveCarrier {
    fn size(&self) -> usize;
    fn zero(&self) -> usize;
    fn add(&self, a: usize, b: usize) -> usize;

    fn sum(&self, it: impl IntoIterator<Item = usize>) -> usize
    where
        Self: Sized,
    {
        it.into_iter().fold(self.zero(), |acc, x| self.add(acc, x))
    }
}

/// A finite commutative monoid as an addition table. The neutral element is
/// always index 0 (validation relabels if the user puts it elsewhere).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteCommutativeMonoid {
    size: usize,
    add: Vec<u16>,
    zero: usize,
}

impl AdditiveCarrier for FiniteCommutativeMonoid {
    fn size(&self) -> usize {
        self.size
    }
    fn zero(&self) -> usize {
        self.zero
    }
    fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b] as usize
    }
}

impl FiniteCommutativeMonoid {
    /// Validate a user table exhaustively and normalise the neutral element
    /// to index 0.
    pub fn validate(size: usize, add: &[Vec<usize>], zero: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::BadParams("empty carrier".into()));
        }
        if zero >= size {
            return Err(Error::BadParams(format!("zero={zero} out of range for size {size}")));
        }
        if add.len() != size || add.iter().any(|r| r.len() != size) {
            return Err(Error::SizeMismatch(format!("addition table must be {size}×{size}")));
        }
        let mut flat = vec![0u16; size * size];
        for (i, row) in add.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v >= size {
                    return Err(Error::BadParams(format!("table entry {v} out of range")));
                }
                flat[i * size + j] = v as u16;
            }
        }
        let m = FiniteCommutativeMonoid { size, add: flat, zero };
        m.check_axioms()?;
        Ok(m.relabelled_zero_first())
    }

    /// Build from a closure; callers promise the axioms hold (checked in
    /// debug builds and by the test suite).
    pub fn from_fn(size: usize, zero: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mut add = vec![0u16; size * size];
        for a in 0..size {
            for b in 0..size {
                add[a * size + b] = f(a, b) as u16;
            }
        }
        let m = FiniteCommutativeMonoid { size, add, zero };
        debug_assert!(m.check_axioms().is_ok(), "from_fn got a non-monoid");
        m
    }

    /// The one-element monoid.
    pub fn trivial() -> Self {
        FiniteCommutativeMonoid { size: 1, add: vec![0], zero: 0 }
    }

    pub fn check_axioms(&self) -> Result<()> {
        let n = self.size;
        let z = self.zero;
        for a in 0..n {
            if self.add(z, a) != a {
                return Err(Error::AxiomViolation { law: "additive identity", witness: vec![a] });
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return Err(Error::AxiomViolation {
                        law: "addition commutes",
                        witness: vec![a, b],
                    });
                }
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return Err(Error::AxiomViolation {
                            law: "addition associates",
                            witness: vec![a, b, c],
                        });
                    }
                }
            }
        }
        Ok(())
    }

    fn relabelled_zero_first(&self) -> Self {
        if self.zero == 0 {
            return self.clone();
        }
        let n = self.size;
        let mut old_to_new: Vec<usize> = (0..n).collect();
        old_to_new.swap(0, self.zero);
        let mut new_of_old = vec![0usize; n];
        for (new, &old) in old_to_new.iter().enumerate() {
            new_of_old[old] = new;
        }
        let mut add = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] =
                    new_of_old[self.add(old_to_new[a], old_to_new[b])] as u16;
            }
        }
        FiniteCommutativeMonoid { size: n, add, zero: 0 }
    }

    /// Direct sum (= product) of two monoids. The pair `(a, b)` is the
    /// index `a·|B| + b`.
    pub fn direct_sum(a: &Self, b: &Self) -> Self {
        let (na, nb) = (a.size, b.size);
        Self::from_fn(na * nb, a.zero * nb + b.zero, |x, y| {
            let (x1, x2) = (x / nb, x % nb);
            let (y1, y2) = (y / nb, y % nb);
            a.add(x1, y1) * nb + b.add(x2, y2)
        })
    }

    /// Quotient by the Bourne congruence of the submonoid `sub`
    /// (`m ≡ m'` iff `m + l = m' + l'` for some `l, l'` in `sub`).
    pub fn bourne_quotient(&self, sub: &BitSet) -> Result<(Self, Vec<u16>)> {
        let classes = bourne_classes(self, sub)?;
        quotient_by_partition(self, &classes)
    }

    /// Quotient by `m ~ m'` iff `m + k = m' + k` for some `k`; the result is
    /// cancellative and the projection is the universal map to it.
    pub fn cancellative_hull(&self) -> (Self, Vec<u16>) {
        let classes = cancellative_hull_classes(self);
        // The hull relation is a congruence, so the quotient is always
        // well-defined.
        quotient_by_partition(self, &classes).expect("hull congruence is well-defined")
    }

    pub fn is_cancellative(&self) -> bool {
        cancellative_set(self).count() == self.size
    }
}

// ----------------------------------------------------------------------
// Additive machinery over any carrier
// ----------------------------------------------------------------------

/// Least submonoid containing `seed`.
pub fn additive_closure(c: &(impl AdditiveCarrier + ?Sized), seed: &BitSet) -> BitSet {
    let mut out = BitSet::new(c.size());
    out.insert(c.zero());
    out.union_with(seed);
    loop {
        let mut grew = false;
        let members = out.members();
        for &a in &members {
            for &b in &members {
                let s = c.add(a, b);
                if !out.contains(s) {
                    out.insert(s);
                    grew = true;
                }
            }
        }
        if !grew {
            return out;
        }
    }
}

/// Subtractive closure of a submonoid `sub`:
/// `{ m | m + l = l' for some l, l' in sub }`.
///
/// For a submonoid this is extensive, monotone and idempotent, and the
/// result is again a submonoid.
pub fn subtractive_closure(c: &(impl AdditiveCarrier + ?Sized), sub: &BitSet) -> BitSet {
    let mut out = BitSet::new(c.size());
    let members = sub.members();
    for m in 0..c.size() {
        if members.iter().any(|&l| sub.contains(c.add(m, l))) {
            out.insert(m);
        }
    }
    out
}

/// Whether `sub` equals its subtractive closure.
pub fn is_subtractive(c: &(impl AdditiveCarrier + ?Sized), sub: &BitSet) -> bool {
    subtractive_closure(c, sub) == *sub
}

/// Elements `k` such that `m + k = m' + k` implies `m = m'`.
pub fn cancellative_set(c: &(impl AdditiveCarrier + ?Sized)) -> BitSet {
    let n = c.size();
    let mut out = BitSet::new(n);
    let mut seen = vec![usize::MAX; n];
    for k in 0..n {
        let mut ok = true;
        for m in 0..n {
            let v = c.add(m, k);
            if seen[v] == k {
                ok = false;
                break;
            }
            seen[v] = k;
        }
        if ok {
            out.insert(k);
        }
    }
    // Reset sentinel usage per call is avoided by tagging with k; the zero
    // row never collides with itself.
    out
}

/// Bourne partition for a submonoid: classes of `m ≡ m'` iff
/// `m + l = m' + l'` with `l, l'` in `sub`. Requires `sub` to be an
/// additively closed set containing zero (that is what makes the relation
/// transitive).
pub fn bourne_classes(c: &(impl AdditiveCarrier + ?Sized), sub: &BitSet) -> Result<Vec<u32>> {
    let n = c.size();
    if !sub.contains(c.zero()) {
        return Err(Error::BadParams("Bourne quotient needs a submonoid containing 0".into()));
    }
    for a in sub.iter() {
        for b in sub.iter() {
            if !sub.contains(c.add(a, b)) {
                return Err(Error::BadParams(format!(
                    "Bourne quotient needs an additively closed set; {a}+{b} escapes"
                )));
            }
        }
    }
    // reach[m] = { m + l : l in sub }; m ≡ m' iff the reaches intersect.
    let reach: Vec<BitSet> = (0..n)
        .map(|m| {
            let mut r = BitSet::new(n);
            for l in sub.iter() {
                r.insert(c.add(m, l));
            }
            r
        })
        .collect();
    let mut uf = UnionFind::new(n);
    for m in 0..n {
        for m2 in m + 1..n {
            if reach[m].intersects(&reach[m2]) {
                uf.union(m, m2);
            }
        }
    }
    let (ids, _) = uf.class_ids();
    Ok(ids)
}

/// Partition for the cancellative-hull congruence `m ~ m'` iff
/// `m + k = m' + k` for some `k`.
pub fn cancellative_hull_classes(c: &(impl AdditiveCarrier + ?Sized)) -> Vec<u32> {
    let n = c.size();
    let mut uf = UnionFind::new(n);
    for m in 0..n {
        for m2 in m + 1..n {
            if (0..n).any(|k| c.add(m, k) == c.add(m2, k)) {
                uf.union(m, m2);
            }
        }
    }
    let (ids, _) = uf.class_ids();
    ids
}

/// Build the quotient monoid for a partition given as class ids. Classes
/// are re-numbered so the class of 0 is index 0 and the rest follow their
/// least members; returns the quotient and the projection table. Errors
/// with `IllDefined` if addition is not constant on classes.
pub fn quotient_by_partition(
    c: &(impl AdditiveCarrier + ?Sized),
    class_of: &[u32],
) -> Result<(FiniteCommutativeMonoid, Vec<u16>)> {
    let n = c.size();
    debug_assert_eq!(class_of.len(), n);
    // Re-number classes: zero's class first, then by least member.
    let mut first_seen: Vec<Option<u32>> = Vec::new();
    let mut relabel = std::collections::HashMap::new();
    let order = std::iter::once(c.zero()).chain((0..n).filter(|&m| m != c.zero()));
    for m in order {
        relabel.entry(class_of[m]).or_insert_with(|| {
            first_seen.push(Some(class_of[m]));
            (first_seen.len() - 1) as u32
        });
    }
    let k = first_seen.len();
    let proj: Vec<u16> = (0..n).map(|m| relabel[&class_of[m]] as u16).collect();
    // Representatives: least member of each class.
    let mut rep = vec![usize::MAX; k];
    for m in (0..n).rev() {
        rep[proj[m] as usize] = m;
    }
    // Table via representatives, then exhaustive well-definedness check.
    let mut add = vec![0u16; k * k];
    for a in 0..k {
        for b in 0..k {
            add[a * k + b] = proj[c.add(rep[a], rep[b])];
        }
    }
    for m in 0..n {
        for m2 in 0..n {
            let direct = proj[c.add(m, m2)];
            let via_class = add[proj[m] as usize * k + proj[m2] as usize];
            if direct != via_class {
                return Err(Error::IllDefined { witness: vec![m, m2] });
            }
        }
    }
    let q = FiniteCommutativeMonoid { size: k, add, zero: 0 };
    q.check_axioms().expect("quotient of a monoid by a congruence is a monoid");
    Ok((q, proj))
}

// ----------------------------------------------------------------------
// Map classification
// ----------------------------------------------------------------------

/// Classification of an additive map between carriers.
///
/// * `k_normal`: `f(m) = f(m')` implies `m + k = m' + k'` for some kernel
///   elements `k, k'`.
/// * `i_normal`: the image equals its subtractive closure in the codomain.
/// * `normal`: both.
///
/// Kernels are always subtractive; images are always submonoids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapClass {
    pub injective: bool,
    pub surjective: bool,
    pub k_normal: bool,
    pub i_normal: bool,
    pub kernel: BitSet,
    pub image: BitSet,
    pub image_closure: BitSet,
    /// Lowest pair violating k-normality, if any.
    pub k_witness: Option<(usize, usize)>,
    /// Lowest closure element outside the image, if any.
    pub i_witness: Option<usize>,
}

impl MapClass {
    pub fn normal(&self) -> bool {
        self.k_normal && self.i_normal
    }
}

/// Classify `map : dom -> cod` (assumed additive; validated by the map
/// constructors, not here).
pub fn classify_map(
    dom: &(impl AdditiveCarrier + ?Sized),
    cod: &(impl AdditiveCarrier + ?Sized),
    map: &[u16],
) -> MapClass {
    let n = dom.size();
    debug_assert_eq!(map.len(), n);
    let mut kernel = BitSet::new(n);
    let mut image = BitSet::new(cod.size());
    for m in 0..n {
        let v = map[m] as usize;
        image.insert(v);
        if v == cod.zero() {
            kernel.insert(m);
        }
    }
    let image_closure = subtractive_closure(cod, &image);
    let i_witness = image_closure.iter().find(|&m| !image.contains(m));
    let surjective = image.count() == cod.size();
    let injective = image.count() == n;

    // Group the domain by image value and test k-normality within groups.
    let mut k_witness = None;
    if !injective {
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); cod.size()];
        for m in 0..n {
            groups[map[m] as usize].push(m);
        }
        let translate = |m: usize| -> BitSet {
            let mut t = BitSet::new(n);
            for k in kernel.iter() {
                t.insert(dom.add(m, k));
            }
            t
        };
        'outer: for g in &groups {
            if g.len() < 2 {
                continue;
            }
            let ts: Vec<BitSet> = g.iter().map(|&m| translate(m)).collect();
            for i in 0..g.len() {
                for j in i + 1..g.len() {
                    if !ts[i].intersects(&ts[j]) {
                        k_witness = Some((g[i], g[j]));
                        break 'outer;
                    }
                }
            }
        }
    }
    MapClass {
        injective,
        surjective,
        k_normal: k_witness.is_none(),
        i_normal: i_witness.is_none(),
        kernel,
        image,
        image_closure,
        k_witness,
        i_witness,
    }
}

// ----------------------------------------------------------------------
// Monoid maps
// ----------------------------------------------------------------------

/// An additive map between finite commutative monoids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidMap {
    pub dom: Arc<FiniteCommutativeMonoid>,
    pub cod: Arc<FiniteCommutativeMonoid>,
    map: Vec<u16>,
}

impl MonoidMap {
    /// Validate additivity and zero preservation exhaustively.
    pub fn new(
        dom: Arc<FiniteCommutativeMonoid>,
        cod: Arc<FiniteCommutativeMonoid>,
        map: Vec<u16>,
    ) -> Result<Self> {
        if map.len() != dom.size() {
            return Err(Error::SizeMismatch(format!(
                "map has {} entries for a domain of size {}",
                map.len(),
                dom.size()
            )));
        }
        if map.iter().any(|&v| (v as usize) >= cod.size()) {
            return Err(Error::BadParams("map value out of codomain range".into()));
        }
        if map[dom.zero()] as usize != cod.zero() {
            return Err(Error::AxiomViolation { law: "map preserves zero", witness: vec![dom.zero()] });
        }
        for a in 0..dom.size() {
            for b in 0..dom.size() {
                if map[dom.add(a, b)] as usize != cod.add(map[a] as usize, map[b] as usize) {
                    return Err(Error::AxiomViolation { law: "map is additive", witness: vec![a, b] });
                }
            }
        }
        Ok(MonoidMap { dom, cod, map })
    }

    pub fn identity(m: &Arc<FiniteCommutativeMonoid>) -> Self {
        MonoidMap { dom: m.clone(), cod: m.clone(), map: (0..m.size() as u16).collect() }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x] as usize
    }

    pub fn table(&self) -> &[u16] {
        &self.map
    }

    pub fn classify(&self) -> MapClass {
        classify_map(self.dom.as_ref(), self.cod.as_ref(), &self.map)
    }

    pub fn compose(&self, then: &MonoidMap) -> Result<MonoidMap> {
        if self.cod != then.dom {
            return Err(Error::EndpointMismatch("composition endpoints differ".into()));
        }
        Ok(MonoidMap {
            dom: self.dom.clone(),
            cod: then.cod.clone(),
            map: self.map.iter().map(|&v| then.map[v as usize]).collect(),
        })
    }
}

/// Search for a monoid isomorphism `a -> b`. Backtracking with forced
/// propagation: assigning `f(x)` forces `f` on everything `x` generates with
/// already-assigned elements. Intended for the small carriers produced by
/// tensor and quotient constructions.
pub fn find_monoid_isomorphism(
    a: &FiniteCommutativeMonoid,
    b: &FiniteCommutativeMonoid,
) -> Option<Vec<u16>> {
    if a.size() != b.size() {
        return None;
    }
    let n = a.size();
    // Cheap invariant: multiset of row profiles must match.
    let profile = |m: &FiniteCommutativeMonoid, x: usize| -> (bool, Vec<usize>) {
        let mut row: Vec<usize> = (0..n).map(|y| usize::from(m.add(x, y) == x)).collect();
        row.sort_unstable();
        (m.add(x, x) == x, row)
    };
    let mut pa: Vec<_> = (0..n).map(|x| profile(a, x)).collect();
    let mut pb: Vec<_> = (0..n).map(|x| profile(b, x)).collect();
    let (fa, fb) = (pa.clone(), pb.clone());
    pa.sort();
    pb.sort();
    if pa != pb {
        return None;
    }

    let mut map = vec![u16::MAX; n];
    let mut used = vec![false; n];
    map[a.zero()] = b.zero() as u16;
    used[b.zero()] = true;

    fn assign(
        a: &FiniteCommutativeMonoid,
        b: &FiniteCommutativeMonoid,
        map: &mut Vec<u16>,
        used: &mut Vec<bool>,
        x: usize,
        v: usize,
        trail: &mut Vec<usize>,
    ) -> bool {
        if map[x] != u16::MAX {
            return map[x] as usize == v;
        }
        if used[v] {
            return false;
        }
        map[x] = v as u16;
        used[v] = true;
        trail.push(x);
        // Propagate sums with everything already assigned.
        for y in 0..a.size() {
            if map[y] == u16::MAX {
                continue;
            }
            let s = a.add(x, y);
            let t = b.add(v, map[y] as usize);
            if map[s] == u16::MAX {
                if !assign(a, b, map, used, s, t, trail) {
                    return false;
                }
            } else if map[s] as usize != t {
                return false;
            }
        }
        true
    }

    fn search(
        a: &FiniteCommutativeMonoid,
        b: &FiniteCommutativeMonoid,
        fa: &[(bool, Vec<usize>)],
        fb: &[(bool, Vec<usize>)],
        map: &mut Vec<u16>,
        used: &mut Vec<bool>,
    ) -> bool {
        let x = match (0..a.size()).find(|&x| map[x] == u16::MAX) {
            None => return true,
            Some(x) => x,
        };
        for v in 0..b.size() {
            if used[v] || fa[x] != fb[v] {
                continue;
            }
            let mut trail = Vec::new();
            let snapshot_used = used.clone();
            if assign(a, b, map, used, x, v, &mut trail)
                && search(a, b, fa, fb, map, used)
            {
                return true;
            }
            for &t in &trail {
                map[t] = u16::MAX;
            }
            *used = snapshot_used;
        }
        false
    }

    if search(a, b, &fa, &fb, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}
