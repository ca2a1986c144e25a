//! Workspace files: JSON schema, parsing, and reference resolution.
//!
//! A workspace declares semirings, semimodules over them, morphisms between
//! those, and a batch of analyses to run. Semirings are either catalog ids
//! (`chain:4`, `zmod:6`, `product:boolean:chain:3`, `matrix:chain:4:2`,
//! `opposite:...`) or explicit operation tables; semimodules are either
//! constructions over their base (`zero`, `self`, `free:k`, `sub{..}`,
//! `self/{..}`) or explicit tables. Every table is validated axiom-by-axiom
//! on ingestion, and every cross-reference must resolve, so a parsed
//! [`Workspace`] is ready to run as-is.

use std::collections::HashMap;
use std::path::Path;
use std::sync::Arc;

use serde::Deserialize;
use thiserror::Error;

use semiflat::semimodule::bourne_quotient;
use semiflat::{BitSet, FiniteSemimodule, FiniteSemiring, Limits, Morphism, Side};

/// Configuration and ingestion failures. Each maps to process exit code 4.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read `{path}`: {source}")]
    Io { path: String, source: std::io::Error },

    /// The file is not valid JSON or not the workspace schema.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// An id is referenced but never defined (or defined too late).
    #[error("unknown reference `{0}`")]
    UnknownReference(String),

    /// Caps must be positive (slack may be zero).
    #[error("bad caps: {0}")]
    BadCaps(String),

    /// A definition parsed but does not denote a valid structure.
    #[error("definition `{id}` is invalid: {msg}")]
    Definition { id: String, msg: String },
}

pub type CliResult<T> = std::result::Result<T, CliError>;

// ----------------------------------------------------------------------
// Raw (serde) layer
// ----------------------------------------------------------------------

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawWorkspace {
    #[serde(default)]
    caps: RawCaps,
    #[serde(default)]
    semirings: Vec<RawSemiring>,
    #[serde(default)]
    semimodules: Vec<RawSemimodule>,
    #[serde(default)]
    morphisms: Vec<RawMorphism>,
    #[serde(default)]
    analyses: Vec<RawAnalysis>,
}

/// Caps are read as signed integers so a negative value is reported as
/// `BadCaps` rather than a type error.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCaps {
    tensor_cap: Option<i64>,
    slack: Option<i64>,
    enum_cap: Option<i64>,
    module_size_bound: Option<i64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSemiring {
    id: String,
    #[serde(default)]
    catalog: Option<String>,
    #[serde(default)]
    table: Option<RawSemiringTable>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSemiringTable {
    size: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    zero: usize,
    one: usize,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSemimodule {
    id: String,
    base: String,
    side: String,
    #[serde(default)]
    construct: Option<String>,
    #[serde(default)]
    table: Option<RawModuleTable>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawModuleTable {
    size: usize,
    add: Vec<Vec<usize>>,
    /// One row per scalar, listing the image of each module element.
    action: Vec<Vec<usize>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMorphism {
    id: String,
    dom: String,
    cod: String,
    map: Vec<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "op", rename_all = "kebab-case", deny_unknown_fields)]
enum RawAnalysis {
    Regularity {
        semiring: String,
    },
    MatrixScan {
        semiring: String,
        n: usize,
        #[serde(default)]
        elements: Option<Vec<Vec<usize>>>,
    },
    Summand {
        semiring: String,
        ideal: Vec<usize>,
        side: String,
    },
    Flatness {
        subject: String,
        #[serde(default)]
        target: Option<String>,
    },
    Survey {
        semiring: String,
        #[serde(default)]
        bound: Option<usize>,
    },
    Tensor {
        left: String,
        right: String,
    },
    Theta {
        module: String,
    },
    Probe {
        semiring: String,
        #[serde(default)]
        bound: Option<usize>,
    },
    BezoutCheck {
        semiring: String,
        #[serde(default)]
        bound: Option<usize>,
    },
    ExactPair {
        first: String,
        second: String,
    },
}

// ----------------------------------------------------------------------
// Resolved layer
// ----------------------------------------------------------------------

/// A fully resolved workspace: every id checked, every table validated.
#[derive(Debug)]
pub struct Workspace {
    pub limits: Limits,
    pub semirings: Vec<(String, Arc<FiniteSemiring>)>,
    pub semimodules: Vec<(String, Arc<FiniteSemimodule>)>,
    pub morphisms: Vec<(String, Morphism)>,
    pub analyses: Vec<Analysis>,
}

/// One requested analysis with its references resolved. The label is the
/// deterministic heading the report uses.
#[derive(Debug)]
pub enum Analysis {
    Regularity { label: String, semiring: Arc<FiniteSemiring> },
    MatrixScan { label: String, semiring: Arc<FiniteSemiring>, n: usize, elements: Option<Vec<Vec<usize>>> },
    Summand { label: String, semiring: Arc<FiniteSemiring>, ideal: BitSet, side: Side },
    Flatness { label: String, subject: Arc<FiniteSemimodule>, target: Option<Arc<FiniteSemimodule>> },
    Survey { label: String, semiring: Arc<FiniteSemiring>, bound: usize },
    Tensor { label: String, left: Arc<FiniteSemimodule>, right: Arc<FiniteSemimodule> },
    Theta { label: String, module: Arc<FiniteSemimodule> },
    Probe { label: String, semiring: Arc<FiniteSemiring>, bound: usize },
    BezoutCheck { label: String, semiring: Arc<FiniteSemiring>, bound: usize },
    ExactPair { label: String, first: Morphism, second: Morphism },
}

impl Analysis {
    pub fn label(&self) -> &str {
        match self {
            Analysis::Regularity { label, .. }
            | Analysis::MatrixScan { label, .. }
            | Analysis::Summand { label, .. }
            | Analysis::Flatness { label, .. }
            | Analysis::Survey { label, .. }
            | Analysis::Tensor { label, .. }
            | Analysis::Theta { label, .. }
            | Analysis::Probe { label, .. }
            | Analysis::BezoutCheck { label, .. }
            | Analysis::ExactPair { label, .. } => label,
        }
    }
}

/// Read and resolve a workspace file.
pub fn parse_workspace(path: &Path) -> CliResult<Workspace> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    parse_workspace_str(&text)
}

/// Same as [`parse_workspace`], from an in-memory string.
pub fn parse_workspace_str(text: &str) -> CliResult<Workspace> {
    let raw: RawWorkspace = serde_json::from_str(text)
        .map_err(|e| CliError::Parse { line: e.line(), msg: e.to_string() })?;
    resolve(raw)
}

fn positive(name: &str, value: Option<i64>, default: usize) -> CliResult<usize> {
    match value {
        None => Ok(default),
        Some(v) if v >= 1 => Ok(v as usize),
        Some(v) => Err(CliError::BadCaps(format!("{name} must be positive, got {v}"))),
    }
}

fn caps_to_limits(caps: &RawCaps) -> CliResult<Limits> {
    let d = Limits::default();
    let slack = match caps.slack {
        None => d.slack,
        Some(v) if v >= 0 => v as usize,
        Some(v) => return Err(CliError::BadCaps(format!("slack must be nonnegative, got {v}"))),
    };
    Ok(Limits {
        tensor_cap: positive("tensor_cap", caps.tensor_cap, d.tensor_cap)?,
        slack,
        enum_cap: positive("enum_cap", caps.enum_cap, d.enum_cap)?,
        module_size_bound: positive("module_size_bound", caps.module_size_bound, d.module_size_bound)?,
        ..d
    })
}

fn parse_side(id: &str, side: &str) -> CliResult<Side> {
    match side {
        "left" => Ok(Side::Left),
        "right" => Ok(Side::Right),
        other => Err(CliError::Definition {
            id: id.to_string(),
            msg: format!("side must be `left` or `right`, got `{other}`"),
        }),
    }
}

fn member_set(id: &str, size: usize, members: &[usize]) -> CliResult<BitSet> {
    let mut set = BitSet::new(size);
    for &m in members {
        if m >= size {
            return Err(CliError::Definition {
                id: id.to_string(),
                msg: format!("element {m} out of range for a carrier of size {size}"),
            });
        }
        set.insert(m);
    }
    Ok(set)
}

/// `sub{0,2}` / `self/{0,2}` member lists.
fn parse_braced(id: &str, expr: &str, size: usize) -> CliResult<BitSet> {
    let inner = expr
        .strip_prefix('{')
        .and_then(|rest| rest.strip_suffix('}'))
        .ok_or_else(|| CliError::Definition {
            id: id.to_string(),
            msg: format!("expected `{{elements}}` in construct, got `{expr}`"),
        })?;
    let mut members = Vec::new();
    for tok in inner.split(',').filter(|t| !t.is_empty()) {
        let v = tok.trim().parse::<usize>().map_err(|_| CliError::Definition {
            id: id.to_string(),
            msg: format!("bad element `{tok}` in construct"),
        })?;
        members.push(v);
    }
    member_set(id, size, &members)
}

fn build_module(
    id: &str,
    base: &Arc<FiniteSemiring>,
    side: Side,
    construct: &str,
    limits: &Limits,
) -> CliResult<FiniteSemimodule> {
    let invalid = |msg: String| CliError::Definition { id: id.to_string(), msg };
    let engine = |e: semiflat::Error| invalid(e.to_string());
    match construct {
        "zero" => Ok(FiniteSemimodule::zero_module(base, side)),
        "self" => Ok(FiniteSemimodule::regular(base, side)),
        _ => {
            if let Some(rank) = construct.strip_prefix("free:") {
                let k = rank
                    .parse::<usize>()
                    .map_err(|_| invalid(format!("bad free rank `{rank}`")))?;
                return FiniteSemimodule::free(base, side, k, limits.carrier_cap).map_err(engine);
            }
            let regular = Arc::new(FiniteSemimodule::regular(base, side));
            if let Some(rest) = construct.strip_prefix("sub") {
                let members = parse_braced(id, rest, base.size())?;
                if !regular.is_subsemimodule(&members) {
                    return Err(invalid(format!("{members} is not a subsemimodule")));
                }
                return Ok(regular.extract(&members).map_err(engine)?.0);
            }
            if let Some(rest) = construct.strip_prefix("self/") {
                let members = parse_braced(id, rest, base.size())?;
                if !regular.is_subsemimodule(&members) {
                    return Err(invalid(format!("{members} is not a subsemimodule")));
                }
                return Ok(bourne_quotient(&regular, &members).map_err(engine)?.0);
            }
            Err(invalid(format!(
                "unknown construct `{construct}` (expected zero, self, free:k, sub{{..}}, self/{{..}})"
            )))
        }
    }
}

/// Resolve a catalog semiring id for the one-off subcommands.
pub fn semiring_from_catalog(id: &str) -> CliResult<Arc<FiniteSemiring>> {
    FiniteSemiring::from_catalog_id(id)
        .map(Arc::new)
        .map_err(|e| CliError::Definition { id: id.to_string(), msg: e.to_string() })
}

/// Build a one-off module from a construct expression, using the expression
/// itself as the id in error messages.
pub fn module_from_construct(
    base: &Arc<FiniteSemiring>,
    side: Side,
    construct: &str,
    limits: &Limits,
) -> CliResult<Arc<FiniteSemimodule>> {
    build_module(construct, base, side, construct, limits).map(Arc::new)
}

fn resolve(raw: RawWorkspace) -> CliResult<Workspace> {
    let limits = caps_to_limits(&raw.caps)?;

    let mut semirings: Vec<(String, Arc<FiniteSemiring>)> = Vec::new();
    let mut ring_ix: HashMap<String, usize> = HashMap::new();
    for def in &raw.semirings {
        if ring_ix.contains_key(&def.id) {
            return Err(CliError::Definition { id: def.id.clone(), msg: "duplicate id".into() });
        }
        let s = match (&def.catalog, &def.table) {
            (Some(catalog), None) => FiniteSemiring::from_catalog_id(catalog)
                .map_err(|e| CliError::Definition { id: def.id.clone(), msg: e.to_string() })?,
            (None, Some(t)) => {
                FiniteSemiring::validate(&def.id, t.size, &t.add, &t.mul, t.zero, t.one)
                    .map_err(|e| CliError::Definition { id: def.id.clone(), msg: e.to_string() })?
            }
            _ => {
                return Err(CliError::Definition {
                    id: def.id.clone(),
                    msg: "give exactly one of `catalog` or `table`".into(),
                })
            }
        };
        ring_ix.insert(def.id.clone(), semirings.len());
        semirings.push((def.id.clone(), Arc::new(s)));
    }
    let find_ring = |id: &str| -> CliResult<Arc<FiniteSemiring>> {
        ring_ix
            .get(id)
            .map(|&i| semirings[i].1.clone())
            .ok_or_else(|| CliError::UnknownReference(id.to_string()))
    };

    let mut semimodules: Vec<(String, Arc<FiniteSemimodule>)> = Vec::new();
    let mut mod_ix: HashMap<String, usize> = HashMap::new();
    for def in &raw.semimodules {
        if mod_ix.contains_key(&def.id) || ring_ix.contains_key(&def.id) {
            return Err(CliError::Definition { id: def.id.clone(), msg: "duplicate id".into() });
        }
        let base = find_ring(&def.base)?;
        let side = parse_side(&def.id, &def.side)?;
        let module = match (&def.construct, &def.table) {
            (Some(expr), None) => build_module(&def.id, &base, side, expr, &limits)?,
            (None, Some(t)) => {
                FiniteSemimodule::validate(base.clone(), side, t.size, &t.add, &t.action)
                    .map_err(|e| CliError::Definition { id: def.id.clone(), msg: e.to_string() })?
            }
            _ => {
                return Err(CliError::Definition {
                    id: def.id.clone(),
                    msg: "give exactly one of `construct` or `table`".into(),
                })
            }
        };
        mod_ix.insert(def.id.clone(), semimodules.len());
        semimodules.push((def.id.clone(), Arc::new(module)));
    }
    let find_module = |id: &str| -> CliResult<Arc<FiniteSemimodule>> {
        mod_ix
            .get(id)
            .map(|&i| semimodules[i].1.clone())
            .ok_or_else(|| CliError::UnknownReference(id.to_string()))
    };

    let mut morphisms: Vec<(String, Morphism)> = Vec::new();
    let mut map_ix: HashMap<String, usize> = HashMap::new();
    for def in &raw.morphisms {
        if map_ix.contains_key(&def.id) || mod_ix.contains_key(&def.id) || ring_ix.contains_key(&def.id)
        {
            return Err(CliError::Definition { id: def.id.clone(), msg: "duplicate id".into() });
        }
        let dom = find_module(&def.dom)?;
        let cod = find_module(&def.cod)?;
        if def.map.iter().any(|&v| v > u16::MAX as usize) {
            return Err(CliError::Definition {
                id: def.id.clone(),
                msg: "map entry out of range".into(),
            });
        }
        let table: Vec<u16> = def.map.iter().map(|&v| v as u16).collect();
        let f = Morphism::new(dom, cod, table)
            .map_err(|e| CliError::Definition { id: def.id.clone(), msg: e.to_string() })?;
        map_ix.insert(def.id.clone(), morphisms.len());
        morphisms.push((def.id.clone(), f));
    }
    let find_morphism = |id: &str| -> CliResult<Morphism> {
        map_ix
            .get(id)
            .map(|&i| morphisms[i].1.clone())
            .ok_or_else(|| CliError::UnknownReference(id.to_string()))
    };

    let mut analyses = Vec::new();
    for a in &raw.analyses {
        analyses.push(match a {
            RawAnalysis::Regularity { semiring } => Analysis::Regularity {
                label: format!("regularity {semiring}"),
                semiring: find_ring(semiring)?,
            },
            RawAnalysis::MatrixScan { semiring, n, elements } => Analysis::MatrixScan {
                label: format!("matrix-scan {semiring} n={n}"),
                semiring: find_ring(semiring)?,
                n: *n,
                elements: elements.clone(),
            },
            RawAnalysis::Summand { semiring, ideal, side } => {
                let s = find_ring(semiring)?;
                let set = member_set(semiring, s.size(), ideal)?;
                Analysis::Summand {
                    label: format!("summand {semiring} {set} {side}"),
                    semiring: s,
                    ideal: set,
                    side: parse_side(semiring, side)?,
                }
            }
            RawAnalysis::Flatness { subject, target } => Analysis::Flatness {
                label: match target {
                    Some(t) => format!("flatness {subject} wrt {t}"),
                    None => format!("flatness {subject} wrt base"),
                },
                subject: find_module(subject)?,
                target: target.as_deref().map(find_module).transpose()?,
            },
            RawAnalysis::Survey { semiring, bound } => {
                let bound = bound.unwrap_or(limits.module_size_bound);
                Analysis::Survey {
                    label: format!("survey {semiring} bound={bound}"),
                    semiring: find_ring(semiring)?,
                    bound,
                }
            }
            RawAnalysis::Tensor { left, right } => Analysis::Tensor {
                label: format!("tensor {left} (x) {right}"),
                left: find_module(left)?,
                right: find_module(right)?,
            },
            RawAnalysis::Theta { module } => Analysis::Theta {
                label: format!("theta {module}"),
                module: find_module(module)?,
            },
            RawAnalysis::Probe { semiring, bound } => {
                let bound = bound.unwrap_or(limits.module_size_bound);
                Analysis::Probe {
                    label: format!("probe {semiring} bound={bound}"),
                    semiring: find_ring(semiring)?,
                    bound,
                }
            }
            RawAnalysis::BezoutCheck { semiring, bound } => {
                let bound = bound.unwrap_or(limits.module_size_bound);
                Analysis::BezoutCheck {
                    label: format!("bezout-check {semiring} bound={bound}"),
                    semiring: find_ring(semiring)?,
                    bound,
                }
            }
            RawAnalysis::ExactPair { first, second } => Analysis::ExactPair {
                label: format!("exact-pair {first} {second}"),
                first: find_morphism(first)?,
                second: find_morphism(second)?,
            },
        });
    }

    Ok(Workspace { limits, semirings, semimodules, morphisms, analyses })
}
