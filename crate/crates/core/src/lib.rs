//! Workbench for finite semirings and finite semimodules.
//!
//! Everything in this crate is table-driven: a semiring is a pair of `n × n`
//! operation tables over dense element indices, a semimodule is an addition
//! table plus a scalar-action table, and every predicate (axiom checks,
//! exactness, flatness, regularity) is decided by exhaustive scan over the
//! finite carrier. Scans never sample; when a quantifier ranges over a set we
//! enumerate the whole set, and when a computation is only feasible under a
//! size cap we return a capped-out error or a verdict explicitly marked
//! inconclusive rather than guessing.
//!
//! The crate is organised bottom-up:
//!
//! * [`semiring`] — finite semirings, validation, and the standard catalog
//!   (boolean, chains, truncations, integers mod n, products, matrix rings,
//!   opposites).
//! * [`monoid`] — finite commutative monoids and the additive machinery
//!   shared by everything above them: subtractive closure, cancellative
//!   elements, map classification (k-normal / i-normal / normal), Bourne
//!   quotients.
//! * [`semimodule`] — finite left/right semimodules, subsemimodules,
//!   congruences and quotients.
//! * [`morphism`] — linear maps, their classification, pullbacks, and
//!   bounded searches (retracts of free modules, normal generation).
//! * [`exactness`] — chain-complex / semi-exact / proper-exact / exact
//!   verdicts for composable pairs and sequences, canonical short exact
//!   sequences, induced maps on cokernels.
//! * [`tensor`] — tensor products of semimodules as finite commutative
//!   monoids via bounded congruence closure, with certification oracles.
//! * [`flatness`] — mono-flat / inclusion-flat / exactness-flat deciders,
//!   decided along two independent routes whose agreement is asserted.
//! * [`regularity`] — von Neumann and additive regularity, star inverses,
//!   Bézout checks, direct-summand searches, matrix regularity scans.
//! * [`enumerate`] — exhaustive enumeration of small semimodules up to
//!   isomorphism, used by the survey harnesses.
//! * [`catalog`] — a deterministic corpus of named semirings and semimodules
//!   used by reports and the test suites.
//!
//! Scans that are data-parallel run on rayon when the `parallel` feature is
//! enabled (the default); [`exec`] provides the strategy switch. Results are
//! identical — including witness choices, which always take the lowest index
//! — regardless of parallelism.

pub mod bitset;
pub mod catalog;
pub mod dsu;
pub mod enumerate;
pub mod error;
pub mod exactness;
pub mod exec;
pub mod flatness;
pub mod monoid;
pub mod morphism;
pub mod regularity;
pub mod semimodule;
pub mod semiring;
pub mod tensor;

pub use bitset::BitSet;
pub use error::{Error, Result};
pub use monoid::{FiniteCommutativeMonoid, MapClass, MonoidMap};
pub use morphism::{Morphism, MorphismClass};
pub use semimodule::{Congruence, FiniteSemimodule, Side, SubSemimodule};
pub use semiring::FiniteSemiring;
pub use tensor::TensorMonoid;

/// Size caps shared by the bounded constructions.
///
/// Every cap is explicit and overridable; the defaults are chosen so the
/// whole standard analysis corpus runs in seconds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum carrier size for eagerly materialised semirings/semimodules
    /// (matrix semirings, free modules).
    pub carrier_cap: usize,
    /// Maximum `|F| * |M|` admitted by the tensor engine.
    pub tensor_cap: usize,
    /// Extra headroom above `min(|F|, |M|)` for multiset sizes explored by
    /// the tensor congruence closure.
    pub slack: usize,
    /// Maximum carrier size for subset-driven enumerations (subsemimodules,
    /// ideals).
    pub enum_cap: usize,
    /// Default bound on module sizes in survey harnesses.
    pub module_size_bound: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            carrier_cap: 4096,
            tensor_cap: 20,
            slack: 2,
            enum_cap: 10,
            module_size_bound: 4,
        }
    }
}
