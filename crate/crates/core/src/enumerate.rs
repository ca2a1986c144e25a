//! Exhaustive enumeration of small additive structures up to isomorphism:
//! commutative monoids of a given order, and semimodule structures over a
//! fixed base semiring.
//!
//! The census is the quantification domain for the survey and harness
//! operations ("all right semimodules of size ≤ bound"). Enumeration is by
//! backtracking over addition tables (monoids) and over scalar rows drawn
//! from the additive endomorphism monoid (actions), with isomorphism dedup
//! via canonical forms: a monoid table is canonicalised as the minimum
//! relabelling over permutations fixing 0, an action as the minimum
//! relabelling over automorphisms of the already-canonical carrier.
//!
//! Every structure that survives backtracking is rebuilt through the
//! exhaustive validators, so completeness is the only property the search
//! itself is trusted for: every isomorphism class has a representative on a
//! canonical carrier, and all actions on canonical carriers are visited.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monoid::{AdditiveCarrier, FiniteCommutativeMonoid};
use crate::semimodule::{FiniteSemimodule, Side};
use crate::semiring::FiniteSemiring;

const UNSET: u16 = u16::MAX;

/// Carriers above this size would need a smarter canonical form than
/// min-over-permutations; the workbench never asks for them.
const SIZE_CEILING: usize = 6;

/// Backtracking node budget per enumeration call; exceeding it means the
/// base semiring is too large for an exhaustive census.
const STEP_BUDGET: u64 = 50_000_000;

fn budget_step(budget: &mut u64) -> Result<()> {
    if *budget == 0 {
        return Err(Error::SizeCapExceeded {
            what: "enumeration backtracking steps",
            needed: (STEP_BUDGET + 1) as usize,
            cap: STEP_BUDGET as usize,
        });
    }
    *budget -= 1;
    Ok(())
}

/// All permutations of `0..n` with `π(0) = 0`, in lexicographic order.
fn permutations_fixing_zero(n: usize) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    let mut perm: Vec<u16> = (0..n as u16).collect();
    fn rec(perm: &mut Vec<u16>, k: usize, out: &mut Vec<Vec<u16>>) {
        if k == perm.len() {
            out.push(perm.clone());
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            rec(perm, k + 1, out);
            perm.swap(k, i);
        }
    }
    // Fix position 0; permute the rest.
    rec(&mut perm, 1, &mut out);
    out.sort();
    out
}

/// All additive endomorphisms of a finite commutative monoid (maps with
/// `h(0) = 0` and `h(a+b) = h(a)+h(b)`), as tables in lexicographic order.
pub fn additive_endomorphisms(c: &(impl AdditiveCarrier + ?Sized)) -> Vec<Vec<u16>> {
    let n = c.size();
    debug_assert_eq!(c.zero(), 0);
    let mut out = Vec::new();
    let mut h = vec![0u16; n];
    // Odometer over h[1..n]; h[0] = 0 is forced.
    loop {
        let additive = (0..n).all(|a| {
            (a..n).all(|b| h[c.add(a, b)] as usize == c.add(h[a] as usize, h[b] as usize))
        });
        if additive {
            out.push(h.clone());
        }
        let mut pos = n;
        loop {
            if pos == 1 {
                return out;
            }
            pos -= 1;
            if (h[pos] as usize) + 1 < n {
                h[pos] += 1;
                break;
            }
            h[pos] = 0;
        }
    }
}

/// All automorphisms of a finite commutative monoid, as permutation tables.
pub fn monoid_automorphisms(c: &(impl AdditiveCarrier + ?Sized)) -> Vec<Vec<u16>> {
    permutations_fixing_zero(c.size())
        .into_iter()
        .filter(|p| {
            (0..c.size()).all(|a| {
                (a..c.size()).all(|b| p[c.add(a, b)] as usize == c.add(p[a] as usize, p[b] as usize))
            })
        })
        .collect()
}

fn relabel_add(table: &[u16], n: usize, p: &[u16]) -> Vec<u16> {
    let mut out = vec![0u16; n * n];
    for i in 0..n {
        for j in 0..n {
            out[p[i] as usize * n + p[j] as usize] = p[table[i * n + j] as usize];
        }
    }
    out
}

/// Minimum relabelling of an addition table over permutations fixing 0.
fn canonical_add_table(table: &[u16], n: usize) -> Vec<u16> {
    permutations_fixing_zero(n)
        .iter()
        .map(|p| relabel_add(table, n, p))
        .min()
        .expect("at least the identity permutation")
}

/// Check associativity on every triple whose lookups are all defined;
/// partial tables prune, full tables decide.
fn assoc_consistent(t: &[u16], n: usize) -> bool {
    for a in 0..n {
        for b in 0..n {
            let ab = t[a * n + b];
            if ab == UNSET {
                continue;
            }
            for c in 0..n {
                let bc = t[b * n + c];
                if bc == UNSET {
                    continue;
                }
                let l = t[ab as usize * n + c];
                let r = t[a * n + bc as usize];
                if l != UNSET && r != UNSET && l != r {
                    return false;
                }
            }
        }
    }
    true
}

fn monoid_tables(n: usize, budget: &mut u64) -> Result<BTreeSet<Vec<u16>>> {
    let mut table = vec![UNSET; n * n];
    for i in 0..n {
        table[i] = i as u16;
        table[i * n] = i as u16;
    }
    let cells: Vec<(usize, usize)> = (1..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mut out = BTreeSet::new();
    fn rec(
        table: &mut [u16],
        cells: &[(usize, usize)],
        at: usize,
        n: usize,
        budget: &mut u64,
        out: &mut BTreeSet<Vec<u16>>,
    ) -> Result<()> {
        budget_step(budget)?;
        if at == cells.len() {
            out.insert(canonical_add_table(table, n));
            return Ok(());
        }
        let (i, j) = cells[at];
        for v in 0..n as u16 {
            table[i * n + j] = v;
            table[j * n + i] = v;
            if assoc_consistent(table, n) {
                rec(table, cells, at + 1, n, budget, out)?;
            }
        }
        table[i * n + j] = UNSET;
        table[j * n + i] = UNSET;
        Ok(())
    }
    rec(&mut table, &cells, 0, n, budget, &mut out)?;
    Ok(out)
}

/// All commutative monoids of order exactly `n` up to isomorphism, as
/// canonical representatives in a deterministic order.
pub fn commutative_monoids(n: usize) -> Result<Vec<FiniteCommutativeMonoid>> {
    if n == 0 || n > SIZE_CEILING {
        return Err(Error::BadParams(format!(
            "census supports carrier sizes 1..={SIZE_CEILING}, got {n}"
        )));
    }
    let mut budget = STEP_BUDGET;
    monoid_tables(n, &mut budget)?
        .into_iter()
        .map(|t| {
            let rows: Vec<Vec<usize>> =
                (0..n).map(|i| (0..n).map(|j| t[i * n + j] as usize).collect()).collect();
            FiniteCommutativeMonoid::validate(n, &rows, 0)
        })
        .collect()
}

/// Pointwise consistency of a partial scalar-row assignment with the base
/// semiring laws: `ρ_{s+t} = ρ_s ⊞ ρ_t` and `ρ_{st}` the side-appropriate
/// composite, wherever all participants are assigned.
fn action_consistent(
    rows: &[Option<usize>],
    endos: &[Vec<u16>],
    base: &FiniteSemiring,
    side: Side,
    carrier: &FiniteCommutativeMonoid,
) -> bool {
    let n = carrier.size();
    let k = base.size();
    for x in 0..k {
        let Some(rx) = rows[x] else { continue };
        for y in 0..k {
            let Some(ry) = rows[y] else { continue };
            if let Some(ru) = rows[base.add(x, y)] {
                let (ex, ey, eu) = (&endos[rx], &endos[ry], &endos[ru]);
                if (0..n).any(|m| eu[m] as usize != carrier.add(ex[m] as usize, ey[m] as usize)) {
                    return false;
                }
            }
            if let Some(rp) = rows[base.mul(x, y)] {
                let (ex, ey, ep) = (&endos[rx], &endos[ry], &endos[rp]);
                // Right: m·(xy) = (m·x)·y; left: (xy)·m = x·(y·m).
                let ok = match side {
                    Side::Right => (0..n).all(|m| ep[m] == ey[ex[m] as usize]),
                    Side::Left => (0..n).all(|m| ep[m] == ex[ey[m] as usize]),
                };
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

fn relabel_action(act: &[u16], n: usize, k: usize, phi: &[u16]) -> Vec<u16> {
    let mut out = vec![0u16; n * k];
    for s in 0..k {
        for m in 0..n {
            out[s * n + phi[m] as usize] = phi[act[s * n + m] as usize];
        }
    }
    out
}

fn module_structures(
    base: &Arc<FiniteSemiring>,
    side: Side,
    carrier: &FiniteCommutativeMonoid,
    budget: &mut u64,
) -> Result<Vec<FiniteSemimodule>> {
    let n = carrier.size();
    let k = base.size();
    let endos = additive_endomorphisms(carrier);
    let auts = monoid_automorphisms(carrier);
    let zero_idx = endos.iter().position(|e| e.iter().all(|&v| v == 0)).expect("zero map");
    let id_idx = endos
        .iter()
        .position(|e| e.iter().enumerate().all(|(m, &v)| v as usize == m))
        .expect("identity map");

    let mut rows: Vec<Option<usize>> = vec![None; k];
    rows[0] = Some(zero_idx);
    rows[base.one()] = Some(id_idx);
    if !action_consistent(&rows, &endos, base, side, carrier) {
        return Ok(Vec::new());
    }
    let free: Vec<usize> = (0..k).filter(|&s| rows[s].is_none()).collect();

    let mut keys = BTreeSet::new();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        rows: &mut Vec<Option<usize>>,
        free: &[usize],
        at: usize,
        endos: &[Vec<u16>],
        auts: &[Vec<u16>],
        base: &FiniteSemiring,
        side: Side,
        carrier: &FiniteCommutativeMonoid,
        budget: &mut u64,
        keys: &mut BTreeSet<Vec<u16>>,
    ) -> Result<()> {
        budget_step(budget)?;
        let n = carrier.size();
        let k = base.size();
        if at == free.len() {
            let mut act = vec![0u16; k * n];
            for s in 0..k {
                let row = &endos[rows[s].expect("leaf has all rows")];
                act[s * n..(s + 1) * n].copy_from_slice(row);
            }
            keys.insert(
                auts.iter().map(|phi| relabel_action(&act, n, k, phi)).min().expect("identity"),
            );
            return Ok(());
        }
        for cand in 0..endos.len() {
            rows[free[at]] = Some(cand);
            if action_consistent(rows, endos, base, side, carrier) {
                rec(rows, free, at + 1, endos, auts, base, side, carrier, budget, keys)?;
            }
        }
        rows[free[at]] = None;
        Ok(())
    }
    rec(&mut rows, &free, 0, &endos, &auts, base, side, carrier, budget, &mut keys)?;

    let add_rows: Vec<Vec<usize>> =
        (0..n).map(|a| (0..n).map(|b| carrier.add(a, b)).collect()).collect();
    keys.into_iter()
        .map(|act| {
            let act_rows: Vec<Vec<usize>> = (0..k)
                .map(|s| (0..n).map(|m| act[s * n + m] as usize).collect())
                .collect();
            FiniteSemimodule::validate(Arc::clone(base), side, n, &add_rows, &act_rows)
        })
        .collect()
}

/// All semimodules of carrier size exactly `n` over `base` on the given
/// side, up to isomorphism, in a deterministic order.
pub fn semimodules_of_size(
    base: &Arc<FiniteSemiring>,
    side: Side,
    n: usize,
) -> Result<Vec<Arc<FiniteSemimodule>>> {
    if n == 0 || n > SIZE_CEILING {
        return Err(Error::BadParams(format!(
            "census supports carrier sizes 1..={SIZE_CEILING}, got {n}"
        )));
    }
    let mut budget = STEP_BUDGET;
    let mut out = Vec::new();
    for table in monoid_tables(n, &mut budget)? {
        let rows: Vec<Vec<usize>> =
            (0..n).map(|i| (0..n).map(|j| table[i * n + j] as usize).collect()).collect();
        let carrier = FiniteCommutativeMonoid::validate(n, &rows, 0)?;
        for module in module_structures(base, side, &carrier, &mut budget)? {
            out.push(Arc::new(module));
        }
    }
    Ok(out)
}

/// All semimodules of carrier size `1..=bound`, smallest first.
pub fn semimodules_up_to(
    base: &Arc<FiniteSemiring>,
    side: Side,
    bound: usize,
) -> Result<Vec<Arc<FiniteSemimodule>>> {
    let mut out = Vec::new();
    for n in 1..=bound {
        out.extend(semimodules_of_size(base, side, n)?);
    }
    Ok(out)
}
