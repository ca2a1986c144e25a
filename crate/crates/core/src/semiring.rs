//! Finite semirings as operation tables.
//!
//! A semiring here is `(S, +, ·, 0, 1)` with `(S, +, 0)` a commutative
//! monoid, `(S, ·, 1)` a monoid, multiplication distributing over addition
//! from both sides, `0` multiplicatively absorbing, and `0 ≠ 1`. Carriers
//! are dense indices `0..n`, so both operations are flat `n × n` tables and
//! every axiom is checked by exhaustive scan over all triples — never
//! sampled.
//!
//! Catalog constructors build the standard examples: the boolean semiring,
//! max/min chains, truncated natural numbers, integers mod `n`, direct
//! products, matrix semirings and opposites. Catalog entries are correct by
//! construction; the test suite still re-validates each one exhaustively.

use crate::error::{Error, Result};
use crate::exec;
use crate::monoid::AdditiveCarrier;

#[derive(Debug, Clone)]
pub struct FiniteSemiring {
    name: String,
    size: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    zero: usize,
    one: usize,
}

/// Structural equality: same tables and distinguished elements. Names are
/// labels only and do not participate.
impl PartialEq for FiniteSemiring {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size
            && self.zero == other.zero
            && self.one == other.one
            && self.add == other.add
            && self.mul == other.mul
    }
}
impl Eq for FiniteSemiring {}

impl FiniteSemiring {
    // ------------------------------------------------------------------
    // Construction and validation
    // ------------------------------------------------------------------

    /// Validate user tables and return the semiring with `zero` relabelled
    /// to index 0 and `one` to index 1.
    ///
    /// `add` and `mul` are row-major `size × size` tables. The distinguished
    /// elements may sit anywhere in the user's indexing; validation happens
    /// in user coordinates (so axiom witnesses are meaningful to the caller)
    /// and the relabelling permutation is applied afterwards.
    pub fn validate(
        name: &str,
        size: usize,
        add: &[Vec<usize>],
        mul: &[Vec<usize>],
        zero: usize,
        one: usize,
    ) -> Result<Self> {
        if size < 2 {
            return Err(Error::BadParams(format!(
                "a semiring needs at least the two distinct elements 0 and 1, got size {size}"
            )));
        }
        if zero >= size || one >= size {
            return Err(Error::BadParams(format!(
                "distinguished elements zero={zero}, one={one} out of range for size {size}"
            )));
        }
        if zero == one {
            return Err(Error::AxiomViolation { law: "zero ≠ one", witness: vec![zero] });
        }
        let add = flatten_table(size, add, "add")?;
        let mul = flatten_table(size, mul, "mul")?;
        let raw = FiniteSemiring { name: name.to_string(), size, add, mul, zero, one };
        raw.check_axioms()?;
        Ok(raw.relabelled_to_standard())
    }

    /// Apply the permutation swapping `zero↔0` and `one↔1` (as a pair of
    /// transpositions) so the distinguished elements land on indices 0, 1.
    fn relabelled_to_standard(&self) -> Self {
        // old->new: zero -> 0, one -> 1, and a permutation closing over the
        // displaced elements.
        let n = self.size;
        let mut old_to_new: Vec<usize> = (0..n).collect();
        old_to_new.swap(0, self.zero);
        let one_pos = old_to_new.iter().position(|&o| o == self.one).unwrap();
        old_to_new.swap(1, one_pos);
        // old_to_new[new] = old; invert.
        let mut new_of_old = vec![0usize; n];
        for (new, &old) in old_to_new.iter().enumerate() {
            new_of_old[old] = new;
        }
        let remap = |t: &[u16]| -> Vec<u16> {
            let mut out = vec![0u16; n * n];
            for a in 0..n {
                for b in 0..n {
                    let old = t[old_to_new[a] * n + old_to_new[b]] as usize;
                    out[a * n + b] = new_of_old[old] as u16;
                }
            }
            out
        };
        FiniteSemiring {
            name: self.name.clone(),
            size: n,
            add: remap(&self.add),
            mul: remap(&self.mul),
            zero: 0,
            one: 1,
        }
    }

    /// Exhaustive axiom scan over all `n³` triples (and `n²` pairs). Returns
    /// the first violated law with its lowest-index witness.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.size;
        let (z, o) = (self.zero, self.one);
        for a in 0..n {
            if self.add(z, a) != a || self.add(a, z) != a {
                return Err(Error::AxiomViolation { law: "additive identity", witness: vec![a] });
            }
            if self.mul(o, a) != a || self.mul(a, o) != a {
                return Err(Error::AxiomViolation {
                    law: "multiplicative identity",
                    witness: vec![a],
                });
            }
            if self.mul(z, a) != z || self.mul(a, z) != z {
                return Err(Error::AxiomViolation { law: "zero absorbs", witness: vec![a] });
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return Err(Error::AxiomViolation {
                        law: "addition commutes",
                        witness: vec![a, b],
                    });
                }
            }
        }
        // Triple laws, scanned in parallel; the witness is the lowest triple
        // in lexicographic order.
        let bad = exec::find_first(n * n * n, |t| {
            let a = t / (n * n);
            let b = t / n % n;
            let c = t % n;
            if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                return Some(("addition associates", vec![a, b, c]));
            }
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Some(("multiplication associates", vec![a, b, c]));
            }
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                return Some(("left distributivity", vec![a, b, c]));
            }
            if self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c)) {
                return Some(("right distributivity", vec![a, b, c]));
            }
            None
        });
        match bad {
            Some((law, witness)) => Err(Error::AxiomViolation { law, witness }),
            None => Ok(()),
        }
    }

    fn from_tables(name: String, size: usize, add: Vec<u16>, mul: Vec<u16>, zero: usize, one: usize) -> Self {
        debug_assert_eq!(add.len(), size * size);
        debug_assert_eq!(mul.len(), size * size);
        FiniteSemiring { name, size, add, mul, zero, one }
    }

    // ------------------------------------------------------------------
    // Catalog
    // ------------------------------------------------------------------

    /// Boolean semiring `{0, 1}` with `1 + 1 = 1`.
    pub fn boolean() -> Self {
        Self::from_tables("boolean".into(), 2, vec![0, 1, 1, 1], vec![0, 0, 0, 1], 0, 1)
    }

    /// Chain `({0 < … < n−1}, max, 0, min, n−1)`. The multiplicative
    /// identity is the top element `n−1`; indices keep the natural order of
    /// the chain.
    pub fn chain(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadParams(format!("chain needs n ≥ 2, got {n}")));
        }
        let add = table(n, |a, b| a.max(b));
        let mul = table(n, |a, b| a.min(b));
        Ok(Self::from_tables(format!("chain:{n}"), n, add, mul, 0, n - 1))
    }

    /// Truncated naturals `{0, …, k−1}` with saturating addition and
    /// multiplication: `a ⊕ b = min(a + b, k−1)`, `a ⊙ b = min(ab, k−1)`.
    pub fn truncation(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::BadParams(format!("truncation needs k ≥ 2, got {k}")));
        }
        let add = table(k, |a, b| (a + b).min(k - 1));
        let mul = table(k, |a, b| (a * b).min(k - 1));
        Ok(Self::from_tables(format!("truncation:{k}"), k, add, mul, 0, 1))
    }

    /// Integers mod `n` with both ring operations.
    pub fn zmod(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadParams(format!("zmod needs n ≥ 2, got {n}")));
        }
        let add = table(n, |a, b| (a + b) % n);
        let mul = table(n, |a, b| (a * b) % n);
        Ok(Self::from_tables(format!("zmod:{n}"), n, add, mul, 0, 1))
    }

    /// Direct product `S × T` with componentwise operations. The pair
    /// `(a, b)` is the index `a·|T| + b`.
    pub fn product(s: &FiniteSemiring, t: &FiniteSemiring) -> Self {
        let (ns, nt) = (s.size, t.size);
        let n = ns * nt;
        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            let (a1, a2) = (a / nt, a % nt);
            for b in 0..n {
                let (b1, b2) = (b / nt, b % nt);
                add[a * n + b] = (s.add(a1, b1) * nt + t.add(a2, b2)) as u16;
                mul[a * n + b] = (s.mul(a1, b1) * nt + t.mul(a2, b2)) as u16;
            }
        }
        Self::from_tables(
            format!("product:{}:{}", s.name, t.name),
            n,
            add,
            mul,
            s.zero * nt + t.zero,
            s.one * nt + t.one,
        )
    }

    /// Matrix semiring `M_k(S)`, materialised eagerly. A matrix is its
    /// row-major entry vector encoded via [`matrix_index`]; the zero matrix
    /// is index 0. Errors with `SizeCapExceeded` when `|S|^(k²)` exceeds
    /// `cap` — beyond the cap, matrix arithmetic is still available
    /// entrywise through [`matrix_add`] / [`matrix_mul`] without
    /// materialising tables.
    pub fn matrix(s: &FiniteSemiring, k: usize, cap: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::BadParams("matrix dimension must be ≥ 1".into()));
        }
        let cells = k * k;
        let full = (s.size as u128)
            .checked_pow(cells as u32)
            .unwrap_or(u128::MAX)
            .min(usize::MAX as u128) as usize;
        if full > cap {
            return Err(Error::SizeCapExceeded { what: "matrix semiring carrier", needed: full, cap });
        }
        let n = full;
        let decode_all: Vec<Vec<usize>> = (0..n).map(|i| matrix_entries(s, k, i)).collect();
        let add_t: Vec<u16> = exec::map_collect(n * n, |p| {
            let (a, b) = (p / n, p % n);
            matrix_index(s, k, &matrix_add(s, k, &decode_all[a], &decode_all[b])) as u16
        });
        let mul_t: Vec<u16> = exec::map_collect(n * n, |p| {
            let (a, b) = (p / n, p % n);
            matrix_index(s, k, &matrix_mul(s, k, &decode_all[a], &decode_all[b])) as u16
        });
        let mut ident = vec![s.zero; cells];
        for d in 0..k {
            ident[d * k + d] = s.one;
        }
        let zero_ix = matrix_index(s, k, &vec![s.zero; cells]);
        let one_ix = matrix_index(s, k, &ident);
        Ok(Self::from_tables(format!("matrix:{}:{}", s.name, k), n, add_t, mul_t, zero_ix, one_ix))
    }

    /// Opposite semiring: same carrier and addition, multiplication
    /// reversed.
    pub fn opposite(s: &FiniteSemiring) -> Self {
        let n = s.size;
        let mul = table(n, |a, b| s.mul(b, a) as usize);
        Self::from_tables(format!("opposite:{}", s.name), n, s.add.clone(), mul, s.zero, s.one)
    }

    /// Parse a catalog id such as `chain:4`, `zmod:6`, `matrix:chain:4:2`,
    /// `product:boolean:zmod:2` or `opposite:chain:3`.
    pub fn from_catalog_id(id: &str) -> Result<Self> {
        let tokens: Vec<&str> = id.split(':').collect();
        let (s, used) = parse_catalog(&tokens, 0).map_err(|_| Error::ParseError(id.to_string()))?;
        if used != tokens.len() {
            return Err(Error::ParseError(id.to_string()));
        }
        Ok(s)
    }

    // ------------------------------------------------------------------
    // Accessors
    // ------------------------------------------------------------------

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b] as usize
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    /// Structural fingerprint used to detect mismatched bases cheaply.
    pub fn fingerprint(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.size.hash(&mut h);
        self.add.hash(&mut h);
        self.mul.hash(&mut h);
        h.finish()
    }

    pub fn sum(&self, it: impl IntoIterator<Item = usize>) -> usize {
        it.into_iter().fold(self.zero, |acc, x| self.add(acc, x))
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.size;
        exec::all(n * n, |p| self.mul(p / n, p % n) == self.mul(p % n, p / n))
    }

    /// `a + a = a` for every element.
    pub fn is_additively_idempotent(&self) -> bool {
        (0..self.size).all(|a| self.add(a, a) == a)
    }

    /// Elements with `e·e = e`, ascending.
    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size).filter(|&e| self.mul(e, e) == e).collect()
    }

    /// `s` commutes multiplicatively with every element.
    pub fn is_central(&self, s: usize) -> bool {
        (0..self.size).all(|a| self.mul(s, a) == self.mul(a, s))
    }
}

impl AdditiveCarrier for FiniteSemiring {
    fn size(&self) -> usize {
        self.size
    }
    fn zero(&self) -> usize {
        self.zero
    }
    fn add(&self, a: usize, b: usize) -> usize {
        FiniteSemiring::add(self, a, b)
    }
}

fn table(n: usize, f: impl Fn(usize, usize) -> usize) -> Vec<u16> {
    let mut t = vec![0u16; n * n];
    for a in 0..n {
        for b in 0..n {
            t[a * n + b] = f(a, b) as u16;
        }
    }
    t
}

fn flatten_table(size: usize, rows: &[Vec<usize>], which: &str) -> Result<Vec<u16>> {
    if rows.len() != size {
        return Err(Error::SizeMismatch(format!(
            "{which} table has {} rows, expected {size}",
            rows.len()
        )));
    }
    let mut flat = Vec::with_capacity(size * size);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != size {
            return Err(Error::SizeMismatch(format!(
                "{which} table row {i} has {} entries, expected {size}",
                row.len()
            )));
        }
        for &v in row {
            if v >= size {
                return Err(Error::BadParams(format!(
                    "{which} table entry {v} out of range for size {size}"
                )));
            }
            flat.push(v as u16);
        }
    }
    Ok(flat)
}

fn parse_catalog(tokens: &[&str], pos: usize) -> Result<(FiniteSemiring, usize)> {
    let err = || Error::ParseError(tokens.join(":"));
    let head = *tokens.get(pos).ok_or_else(err)?;
    let parse_num = |i: usize| -> Result<usize> {
        tokens.get(i).and_then(|t| t.parse().ok()).ok_or_else(err)
    };
    match head {
        "boolean" => Ok((FiniteSemiring::boolean(), pos + 1)),
        "chain" => Ok((FiniteSemiring::chain(parse_num(pos + 1)?)?, pos + 2)),
        "truncation" => Ok((FiniteSemiring::truncation(parse_num(pos + 1)?)?, pos + 2)),
        "zmod" => Ok((FiniteSemiring::zmod(parse_num(pos + 1)?)?, pos + 2)),
        "product" => {
            let (a, next) = parse_catalog(tokens, pos + 1)?;
            let (b, next) = parse_catalog(tokens, next)?;
            Ok((FiniteSemiring::product(&a, &b), next))
        }
        "matrix" => {
            let (inner, next) = parse_catalog(tokens, pos + 1)?;
            let k = parse_num(next)?;
            Ok((FiniteSemiring::matrix(&inner, k, crate::Limits::default().carrier_cap)?, next + 1))
        }
        "opposite" => {
            let (inner, next) = parse_catalog(tokens, pos + 1)?;
            Ok((FiniteSemiring::opposite(&inner), next))
        }
        _ => Err(err()),
    }
}

// ----------------------------------------------------------------------
// Matrix arithmetic on raw entry vectors (usable beyond the carrier cap)
// ----------------------------------------------------------------------

/// Row-major entries -> carrier index (entry `i` contributes `e_i · |S|^i`).
pub fn matrix_index(s: &FiniteSemiring, k: usize, entries: &[usize]) -> usize {
    debug_assert_eq!(entries.len(), k * k);
    entries.iter().rev().fold(0usize, |acc, &e| acc * s.size() + e)
}

/// Carrier index -> row-major entries.
pub fn matrix_entries(s: &FiniteSemiring, k: usize, mut ix: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(k * k);
    for _ in 0..k * k {
        out.push(ix % s.size());
        ix /= s.size();
    }
    out
}

pub fn matrix_add(s: &FiniteSemiring, _k: usize, a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().zip(b).map(|(&x, &y)| s.add(x, y)).collect()
}

pub fn matrix_mul(s: &FiniteSemiring, k: usize, a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = vec![s.zero(); k * k];
    for i in 0..k {
        for j in 0..k {
            out[i * k + j] = s.sum((0..k).map(|t| s.mul(a[i * k + t], b[t * k + j])));
        }
    }
    out
}
