//! Ideal theory over Zariski subspaces of finite commutative rings.
//!
//! Rings are materialized as explicit tables, every ideal is enumerated, and
//! the hull-kernel calculus on a chosen set `Y` of primes is evaluated
//! exhaustively. The [`verify`] module runs a registry of theorem checks over
//! a corpus of small rings.

pub mod context;
pub mod corpus;
pub mod dsl;
pub mod error;
pub mod hy;
pub mod ideal;
pub mod relative;
pub mod report;
pub mod ring;
pub mod sets;
pub mod spectrum;
pub mod verify;
pub mod zariski;

pub use context::RingContext;
pub use corpus::{CorpusFile, CorpusRing};
pub use dsl::parse_ring_dsl;
pub use error::{Error, Result};
pub use hy::{ConditionProfile, HYFilter};
pub use ideal::{annihilator, ideal_generate, Ideal, IdealLattice};
pub use relative::FactorReport;
pub use report::{CheckReport, Instance, Report, Summary, Verdict};
pub use ring::{build_ring, build_ring_with, Caps, FiniteRing, RingSpec, TableSpec};
pub use sets::{Element, ElementSet, PointSet};
pub use spectrum::is_prime;
pub use zariski::{ClosedSet, SubSpace, YSelector};
