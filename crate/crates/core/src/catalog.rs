//! A small standard corpus of semirings and semimodules.
//!
//! The survey harnesses, the reproduction suite, and the benchmarks all
//! iterate over this fixed, deterministically ordered corpus: six semirings
//! that between them exhibit idempotent, saturating, ring-like, and
//! composite behaviour, and for each semiring the semimodules reachable
//! from the regular one by taking subsemimodules, Bourne quotients, and a
//! small free module.

use std::sync::Arc;

use crate::semimodule::{bourne_quotient, FiniteSemimodule, Side};
use crate::semiring::FiniteSemiring;
use crate::Limits;

/// A module with the deterministic name it carries in reports.
#[derive(Debug, Clone)]
pub struct NamedModule {
    pub name: String,
    pub module: Arc<FiniteSemimodule>,
}

/// The six standard semirings: the booleans, two chains under (max, min),
/// saturating arithmetic on {0,1,2}, and two modular rings.
pub fn semirings() -> Vec<Arc<FiniteSemiring>> {
    vec![
        Arc::new(FiniteSemiring::boolean()),
        Arc::new(FiniteSemiring::chain(3).expect("chain(3)")),
        Arc::new(FiniteSemiring::chain(4).expect("chain(4)")),
        Arc::new(FiniteSemiring::truncation(3).expect("truncation(3)")),
        Arc::new(FiniteSemiring::zmod(4).expect("zmod(4)")),
        Arc::new(FiniteSemiring::zmod(6).expect("zmod(6)")),
    ]
}

/// The standard modules over `base` on the given side, deterministically
/// named and ordered: the zero module, the regular module, every proper
/// nonzero subsemimodule of the regular module (extracted), every Bourne
/// quotient by such a subsemimodule, and — when the carrier stays within
/// `enum_cap` — the free module of rank 2. Structural duplicates are
/// dropped, keeping the earliest name.
pub fn modules_for(
    base: &Arc<FiniteSemiring>,
    side: Side,
    limits: &Limits,
) -> Vec<NamedModule> {
    let regular = Arc::new(FiniteSemimodule::regular(base, side));
    let mut out: Vec<NamedModule> = vec![
        NamedModule {
            name: "zero".into(),
            module: Arc::new(FiniteSemimodule::zero_module(base, side)),
        },
        NamedModule { name: "self".into(), module: regular.clone() },
    ];
    let subs = regular
        .subsemimodules(limits.enum_cap)
        .expect("catalog semirings stay within enum_cap");
    for sub in &subs {
        if sub.count() <= 1 || sub.count() == regular.size() {
            continue;
        }
        let (extracted, _) = regular.extract(sub).expect("enumerated subsemimodule");
        out.push(NamedModule { name: format!("sub{sub}"), module: Arc::new(extracted) });
    }
    for sub in &subs {
        if sub.count() <= 1 || sub.count() == regular.size() {
            continue;
        }
        let (quot, _) = bourne_quotient(&regular, sub).expect("Bourne quotient of catalog sub");
        out.push(NamedModule { name: format!("self/{sub}"), module: Arc::new(quot) });
    }
    if base.size() * base.size() <= limits.enum_cap {
        let free = FiniteSemimodule::free(base, side, 2, limits.carrier_cap)
            .expect("rank-2 free module within caps");
        out.push(NamedModule { name: "free2".into(), module: Arc::new(free) });
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|nm| seen.insert(nm.module.fingerprint()));
    out
}
