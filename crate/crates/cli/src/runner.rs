//! Batch execution: one [`Analysis`] in, one report [`Entry`] out.
//!
//! Entries run concurrently (under the core's execution policy) and are
//! collected in request order, so the assembled report is deterministic.
//! An analysis that cannot run is recorded in place and does not abort the
//! rest of the batch.

use std::sync::Arc;
use std::time::Instant;

use semiflat::exactness::classify_morphism_pair;
use semiflat::flatness::{flatness_survey, flatness_wrt, s_flatness, FlatnessVerdict, Verdict};
use semiflat::regularity::{
    bezout_regular_mflat_check, eflat_regularity_probe, is_direct_summand,
    matrix_regularity_scan, regularity_profile, ProbeVerdict,
};
use semiflat::tensor::{theta_regular_left, theta_regular_right, TensorMonoid};
use semiflat::{exec, Error, FiniteSemimodule, FiniteSemiring, Limits, Morphism, Side};

use crate::config::{Analysis, Workspace};
use crate::report::{CapsUsed, Entry, Report, Status};

/// Execute every analysis in the workspace and assemble the report.
pub fn run(ws: &Workspace) -> Report {
    let entries = exec::map_collect(ws.analyses.len(), |i| run_one(&ws.analyses[i], &ws.limits));
    Report::new(entries)
}

struct Outcome {
    method: &'static str,
    status: Status,
    lines: Vec<String>,
    bound: Option<usize>,
}

fn run_one(a: &Analysis, limits: &Limits) -> Entry {
    let start = Instant::now();
    let outcome = dispatch(a, limits).unwrap_or_else(|e| {
        let (status, prefix) = match &e {
            // The engines raise axiom violations only for statements that
            // hold mathematically; surfacing one is a defect report.
            Error::AxiomViolation { .. } => (Status::Violation, "theorem violation"),
            Error::SizeCapExceeded { .. } => (Status::Inconclusive, "out of caps"),
            Error::CertificationFailure(_) => (Status::Inconclusive, "uncertified"),
            _ => (Status::Error, "error"),
        };
        Outcome { method: "-", status, lines: vec![format!("{prefix}: {e}")], bound: None }
    });
    Entry {
        label: a.label().to_string(),
        method: outcome.method.to_string(),
        status: outcome.status,
        caps: CapsUsed::from_limits(limits, outcome.bound),
        lines: outcome.lines,
        millis: Some(start.elapsed().as_millis()),
    }
}

fn dispatch(a: &Analysis, limits: &Limits) -> Result<Outcome, Error> {
    match a {
        Analysis::Regularity { semiring, .. } => regularity(semiring, limits),
        Analysis::MatrixScan { semiring, n, elements, .. } => {
            matrix_scan(semiring, *n, elements.as_deref(), limits)
        }
        Analysis::Summand { semiring, ideal, side, .. } => summand(semiring, ideal, *side, limits),
        Analysis::Flatness { subject, target, .. } => flatness(subject, target.as_ref(), limits),
        Analysis::Survey { semiring, bound, .. } => survey(semiring, *bound, limits),
        Analysis::Tensor { left, right, .. } => tensor(left, right, limits),
        Analysis::Theta { module, .. } => theta(module, limits),
        Analysis::Probe { semiring, bound, .. } => probe(semiring, *bound, limits),
        Analysis::BezoutCheck { semiring, bound, .. } => bezout(semiring, *bound, limits),
        Analysis::ExactPair { first, second, .. } => exact_pair(first, second),
    }
}

// ----------------------------------------------------------------------
// Formatting helpers
// ----------------------------------------------------------------------

fn witness_row(witnesses: &[Option<usize>]) -> String {
    witnesses
        .iter()
        .enumerate()
        .map(|(a, w)| match w {
            Some(s) => format!("{a}:{s}"),
            None => format!("{a}:-"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn verdict_line(name: &str, v: &Verdict) -> String {
    match v {
        Verdict::Holds => format!("{name}: holds"),
        Verdict::Fails(w) => format!("{name}: fails at {w}"),
        Verdict::Inconclusive(cause) => format!("{name}: undecided ({cause})"),
    }
}

fn verdict_mark(v: &Verdict) -> String {
    match v {
        Verdict::Holds => "holds".into(),
        Verdict::Fails(w) => format!("fails@{w}"),
        Verdict::Inconclusive(_) => "undecided".into(),
    }
}

fn fmt_matrix(n: usize, entries: &[usize]) -> String {
    let rows: Vec<String> = (0..n)
        .map(|r| {
            let row: Vec<String> =
                (0..n).map(|c| entries[r * n + c].to_string()).collect();
            format!("[{}]", row.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

fn is_bijection(table: &[u16], cod: usize) -> bool {
    if table.len() != cod {
        return false;
    }
    let mut seen = vec![false; cod];
    table.iter().all(|&v| {
        let v = v as usize;
        v < cod && !std::mem::replace(&mut seen[v], true)
    })
}

fn flatness_lines(v: &FlatnessVerdict) -> (Vec<String>, Status) {
    let lines = vec![
        format!("subject: {}", v.subject),
        format!("target: {}", v.target),
        verdict_line("m-flat", &v.m_flat),
        verdict_line("i-flat", &v.i_flat),
        verdict_line("e-flat", &v.e_flat),
        format!("routes: m={} i={} e={}", v.routes[0], v.routes[1], v.routes[2]),
    ];
    let status = if [&v.m_flat, &v.i_flat, &v.e_flat].iter().any(|x| !x.decided()) {
        Status::Inconclusive
    } else {
        Status::Ok
    };
    (lines, status)
}

// ----------------------------------------------------------------------
// Handlers
// ----------------------------------------------------------------------

fn regularity(s: &Arc<FiniteSemiring>, limits: &Limits) -> Result<Outcome, Error> {
    let p = regularity_profile(s, limits)?;
    let mut lines = vec![
        format!("carrier: {} ({})", s.name(), s.size()),
        format!("von Neumann regular: {}", p.vn_regular),
        format!("  inner inverses (a:s with asa=a): {}", witness_row(&p.vn_witness)),
        format!("additively regular: {}", p.additively_regular),
        format!("  additive witnesses (a:b with a+b+a=a): {}", witness_row(&p.add_witness)),
    ];
    for (side, subtractive, offender, bezout, nonprincipal) in [
        ("left", p.left_subtractive, &p.left_offender, p.left_bezout, &p.left_nonprincipal),
        ("right", p.right_subtractive, &p.right_offender, p.right_bezout, &p.right_nonprincipal),
    ] {
        match offender {
            None => lines.push(format!("{side} ideals all subtractive: {subtractive}")),
            Some(w) => lines.push(format!("{side} ideals all subtractive: false (offender {w})")),
        }
        match nonprincipal {
            None => lines.push(format!("{side} Bezout: {bezout}")),
            Some(w) => lines.push(format!("{side} Bezout: false (non-principal {w})")),
        }
    }
    match p.abc {
        Some((a, b, c)) => lines.push(format!(
            "star identities a(a+a*)=a+a*, a(b+b*)=(b+b*)a, a+a(b+b*)=a: {a}/{b}/{c}"
        )),
        None => lines.push("star identities: not applicable (not additively regular)".into()),
    }
    let status = if p.idempotent_principal_ok {
        lines.push("idempotent-generation cross-check: ok".into());
        Status::Ok
    } else {
        lines.push(
            "theorem violation: principal ideals disagree with idempotent generation".into(),
        );
        Status::Violation
    };
    Ok(Outcome { method: "exhaustive-scan+ideal-enumeration", status, lines, bound: None })
}

fn matrix_scan(
    s: &Arc<FiniteSemiring>,
    n: usize,
    elements: Option<&[Vec<usize>]>,
    limits: &Limits,
) -> Result<Outcome, Error> {
    let rep = matrix_regularity_scan(s, n, elements, limits)?;
    let mut lines = vec![
        format!("matrix side: {n}x{n} over {}", s.name()),
        format!("scanned: {}", rep.scanned),
        format!("non-regular: {}", rep.non_regular.len()),
    ];
    for m in rep.non_regular.iter().take(8) {
        lines.push(format!("  no inner inverse: {}", fmt_matrix(n, m)));
    }
    if rep.non_regular.len() > 8 {
        lines.push(format!("  ... and {} more", rep.non_regular.len() - 8));
    }
    Ok(Outcome { method: "exhaustive-scan", status: Status::Ok, lines, bound: None })
}

fn summand(
    s: &Arc<FiniteSemiring>,
    ideal: &semiflat::BitSet,
    side: Side,
    limits: &Limits,
) -> Result<Outcome, Error> {
    let complement = is_direct_summand(s, ideal, side, limits)?;
    let lines = vec![
        format!("ideal {ideal} of {} ({})", s.name(), side.as_str()),
        match &complement {
            Some(j) => format!("direct summand: yes, complement {j}"),
            None => "direct summand: no (no ideal complements it)".into(),
        },
    ];
    Ok(Outcome { method: "ideal-enumeration+iso-search", status: Status::Ok, lines, bound: None })
}

fn flatness(
    subject: &Arc<FiniteSemimodule>,
    target: Option<&Arc<FiniteSemimodule>>,
    limits: &Limits,
) -> Result<Outcome, Error> {
    let (v, method) = match target {
        Some(m) => (flatness_wrt(subject, m, limits)?, "induced-inclusion+normal-mono+ses"),
        None => (s_flatness(subject, limits)?, "theta-ideal"),
    };
    let (lines, status) = flatness_lines(&v);
    Ok(Outcome { method, status, lines, bound: None })
}

fn survey(s: &Arc<FiniteSemiring>, bound: usize, limits: &Limits) -> Result<Outcome, Error> {
    let rep = flatness_survey(s, bound, limits)?;
    let mut lines = vec![
        format!("base: {} ({})", s.name(), s.size()),
        format!("subjects: {} right semimodules of size <= {bound}", rep.rows.len()),
        format!("targets: {} left semimodules of size <= {bound}", rep.targets.len()),
    ];
    let mut undecided = 0usize;
    for (i, row) in rep.rows.iter().enumerate() {
        for v in [&row.m_flat, &row.i_flat, &row.e_flat] {
            if !v.decided() {
                undecided += 1;
            }
        }
        lines.push(format!(
            "row {i} (size {}): m={} i={} e={}",
            row.module.size(),
            verdict_mark(&row.m_flat),
            verdict_mark(&row.i_flat),
            verdict_mark(&row.e_flat),
        ));
    }
    for v in &rep.violations {
        lines.push(format!("violation: {v}"));
    }
    for s in &rep.strictness {
        lines.push(format!("strict separation: {s}"));
    }
    let status = if !rep.violations.is_empty() {
        Status::Violation
    } else if undecided > 0 {
        lines.push(format!("undecided cells: {undecided}"));
        Status::Inconclusive
    } else {
        Status::Ok
    };
    Ok(Outcome { method: "census-sweep", status, lines, bound: Some(bound) })
}

fn tensor(
    f: &Arc<FiniteSemimodule>,
    m: &Arc<FiniteSemimodule>,
    limits: &Limits,
) -> Result<Outcome, Error> {
    let t = TensorMonoid::build(f.clone(), m.clone(), limits)?;
    let mut lines = vec![
        format!("factors: right module of size {} (x) left module of size {}", f.size(), m.size()),
        format!("classes: {}", t.size()),
        format!("certified: {}", t.certified()),
    ];
    for fi in 0..f.size() {
        let row: Vec<String> = (0..m.size()).map(|mi| t.pure(fi, mi).to_string()).collect();
        lines.push(format!("pure({fi},-): [{}]", row.join(",")));
    }
    for fail in t.failures() {
        lines.push(format!("certificate: {fail}"));
    }
    let status = if t.certified() { Status::Ok } else { Status::Inconclusive };
    Ok(Outcome { method: "congruence-closure", status, lines, bound: None })
}

fn theta(m: &Arc<FiniteSemimodule>, limits: &Limits) -> Result<Outcome, Error> {
    let (table, side) = match m.side() {
        Side::Right => (theta_regular_right(m, limits)?, "M (x) S -> M"),
        Side::Left => (theta_regular_left(m, limits)?, "S (x) M -> M"),
    };
    let bij = is_bijection(&table, m.size());
    let tbl: Vec<String> = table.iter().map(|v| v.to_string()).collect();
    let lines = vec![
        format!("unit comparison {side} on a module of size {}", m.size()),
        format!("table: [{}]", tbl.join(",")),
        format!("isomorphism: {bij}"),
    ];
    // The unit comparison over the regular module is an isomorphism
    // unconditionally, so a non-bijective certified table is a defect.
    let status = if bij { Status::Ok } else { Status::Violation };
    Ok(Outcome { method: "unit-comparison", status, lines, bound: None })
}

fn probe(s: &Arc<FiniteSemiring>, bound: usize, limits: &Limits) -> Result<Outcome, Error> {
    let rep = eflat_regularity_probe(s, bound, limits)?;
    let mut lines = vec![
        format!("base: {} ({})", s.name(), s.size()),
        format!("subtractive: {}", rep.subtractive),
        format!("von Neumann regular: {}", rep.vn_regular),
    ];
    let status = match &rep.verdict {
        ProbeVerdict::WitnessFound { side, size, census_index } => {
            lines.push(format!(
                "witness: a non-e-flat {} semimodule of size {size} (census row {census_index})",
                side.as_str()
            ));
            Status::Ok
        }
        ProbeVerdict::NoWitnessWithinBound => {
            lines.push(format!("no witness within size bound {bound}"));
            if rep.undecided > 0 {
                Status::Inconclusive
            } else {
                Status::Ok
            }
        }
        ProbeVerdict::PremiseFails(why) => {
            lines.push(format!("premises do not apply: {why}"));
            Status::Ok
        }
    };
    lines.push(format!("decided rows: {}, undecided: {}", rep.decided, rep.undecided));
    Ok(Outcome { method: "census-probe", status, lines, bound: Some(bound) })
}

fn bezout(s: &Arc<FiniteSemiring>, bound: usize, limits: &Limits) -> Result<Outcome, Error> {
    let rep = bezout_regular_mflat_check(s, bound, limits)?;
    let mut lines = vec![format!("base: {} ({})", s.name(), s.size())];
    let status = if !rep.applicable {
        lines.push(format!(
            "premises do not apply: {}",
            rep.premise_note.as_deref().unwrap_or("-")
        ));
        Status::Ok
    } else {
        lines.push(format!(
            "normally generated right semimodules of size <= {bound}: {}",
            rep.checked.len()
        ));
        for (ix, gens) in &rep.checked {
            lines.push(format!("  census row {ix}: normal presentation with {gens} generators"));
        }
        lines.push(format!("undecided: {}", rep.undecided));
        if rep.refutations.is_empty() {
            lines.push("refutations: none (every one is m-flat)".into());
            if rep.undecided > 0 {
                Status::Inconclusive
            } else {
                Status::Ok
            }
        } else {
            for r in &rep.refutations {
                lines.push(format!("refutation: census row {r} is not m-flat"));
            }
            Status::Violation
        }
    };
    Ok(Outcome { method: "census-sweep+normal-generation", status, lines, bound: Some(bound) })
}

fn exact_pair(f: &Morphism, g: &Morphism) -> Result<Outcome, Error> {
    let v = classify_morphism_pair(f, g)?;
    let mut lines = vec![
        format!("chain complex (g.f = 0): {}", v.chain_complex),
        format!("semi-exact (closure of im f = ker g): {}", v.semi_exact),
        format!("proper-exact (im f = ker g): {}", v.proper_exact),
        format!("exact (proper + k-normal g): {}", v.exact),
        format!("outgoing map k-normal: {}", v.outgoing_k_normal),
    ];
    if let Some(w) = v.chain_witness {
        lines.push(format!("chain witness: g(f({w})) != 0"));
    }
    if let Some(w) = v.node_witness {
        lines.push(format!("node witness: element {w} separates im f from ker g"));
    }
    Ok(Outcome { method: "kernel-image-comparison", status: Status::Ok, lines, bound: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::parse_workspace_str;

    fn ws(text: &str) -> Workspace {
        parse_workspace_str(text).unwrap()
    }

    #[test]
    fn empty_analysis_list_gives_an_empty_ok_report() {
        let report = run(&ws(r#"{}"#));
        assert_eq!(report.entries.len(), 0);
        assert_eq!(report.exit_code(), 0);
    }

    #[test]
    fn chain4_regularity_profile_comes_out_regular() {
        let report = run(&ws(r#"{
            "semirings": [{"id": "S", "catalog": "chain:4"}],
            "analyses": [{"op": "regularity", "semiring": "S"}]
        }"#));
        assert_eq!(report.exit_code(), 0);
        let e = &report.entries[0];
        assert_eq!(e.status, Status::Ok);
        assert!(e.lines.iter().any(|l| l == "von Neumann regular: true"));
        assert!(e
            .lines
            .iter()
            .any(|l| l.contains("inner inverses") && l.contains("0:0 1:1 2:2 3:3")));
    }

    #[test]
    fn flatness_of_the_half_module_over_zmod4_fails_with_witness() {
        let report = run(&ws(r#"{
            "semirings": [{"id": "S", "catalog": "zmod:4"}],
            "semimodules": [
                {"id": "F", "base": "S", "side": "right", "construct": "sub{0,2}"},
                {"id": "M", "base": "S", "side": "left", "construct": "self"}
            ],
            "analyses": [{"op": "flatness", "subject": "F", "target": "M"}]
        }"#));
        let e = &report.entries[0];
        assert_eq!(e.status, Status::Ok, "{:?}", e.lines);
        assert!(e.lines.iter().any(|l| l == "m-flat: fails at {0,2}"), "{:?}", e.lines);
        assert_eq!(report.exit_code(), 0);
    }

    #[test]
    fn one_bad_analysis_does_not_abort_the_batch() {
        // The matrix scan without an element list wants 4^9 candidates,
        // far over the carrier cap, so it lands inconclusive; the second
        // analysis still runs and reports.
        let report = run(&ws(r#"{
            "semirings": [{"id": "S", "catalog": "chain:4"}],
            "analyses": [
                {"op": "matrix-scan", "semiring": "S", "n": 3},
                {"op": "regularity", "semiring": "S"}
            ]
        }"#));
        assert_eq!(report.entries.len(), 2);
        assert_eq!(report.entries[0].status, Status::Inconclusive);
        assert_eq!(report.entries[1].status, Status::Ok);
        assert_eq!(report.exit_code(), 3);
    }

    #[test]
    fn summand_reports_the_chain3_counterexample() {
        let report = run(&ws(r#"{
            "semirings": [{"id": "S", "catalog": "chain:3"}],
            "analyses": [{"op": "summand", "semiring": "S", "ideal": [0, 1], "side": "left"}]
        }"#));
        let e = &report.entries[0];
        assert!(e.lines.iter().any(|l| l.starts_with("direct summand: no")), "{:?}", e.lines);
    }

    #[test]
    fn survey_row_marks_match_the_engine() {
        // The size-2 subject only fails against the regular module itself,
        // so the failure marks need the bound to reach size 4.
        let report = run(&ws(r#"{
            "semirings": [{"id": "S", "catalog": "zmod:4"}],
            "analyses": [{"op": "survey", "semiring": "S", "bound": 4}]
        }"#));
        let e = &report.entries[0];
        assert_eq!(e.status, Status::Ok, "{:?}", e.lines);
        assert!(e.lines.iter().any(|l| l.contains("fails@")), "{:?}", e.lines);
        assert_eq!(e.caps.bound, Some(4));
    }

    #[test]
    fn tensor_entry_prints_the_class_grid() {
        let report = run(&ws(r#"{
            "semirings": [{"id": "S", "catalog": "zmod:4"}],
            "semimodules": [
                {"id": "F", "base": "S", "side": "right", "construct": "sub{0,2}"},
                {"id": "M", "base": "S", "side": "left", "construct": "sub{0,2}"}
            ],
            "analyses": [{"op": "tensor", "left": "F", "right": "M"}]
        }"#));
        let e = &report.entries[0];
        assert_eq!(e.status, Status::Ok);
        assert!(e.lines.iter().any(|l| l == "classes: 2"), "{:?}", e.lines);
        assert!(e.lines.iter().any(|l| l == "certified: true"));
    }

    #[test]
    fn probe_finds_the_zmod4_witness_at_size_two() {
        let report = run(&ws(r#"{
            "semirings": [{"id": "S", "catalog": "zmod:4"}],
            "analyses": [{"op": "probe", "semiring": "S", "bound": 2}]
        }"#));
        let e = &report.entries[0];
        assert_eq!(e.status, Status::Ok);
        assert!(
            e.lines.iter().any(|l| l.contains("witness: a non-e-flat right semimodule of size 2")),
            "{:?}",
            e.lines
        );
    }
}
