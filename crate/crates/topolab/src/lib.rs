//! topolab: exact computation on finite topological spaces and a symbolic
//! rational-endpoint real line.
//!
//! The crate has three layers:
//!
//! * finite spaces ([`FiniteSpace`]) with Baire-category machinery, topology
//!   comparison ([`compat`]), and ideal-induced star topologies ([`ideals`]);
//! * an exhaustive verification harness ([`enumeration`]) that sweeps every
//!   labeled topology on up to five points and checks a registry of theorems,
//!   reporting counterexamples as re-checkable JSON;
//! * a symbolic real line ([`realline`]) over exact rationals for the
//!   Euclidean, lower/upper-limit, and Hattori topologies, plus finite
//!   topological groups ([`topgroups`]).
//!
//! All finite-space computation is exact bitmask arithmetic; all real-line
//! computation is exact rational arithmetic. Nothing here is approximate.

pub mod compat;
pub mod enumeration;
#[cfg(test)]
pub(crate) mod fixtures;
pub mod ideals;
pub mod realline;
pub mod set;
pub mod space;
pub mod topgroups;

pub use compat::{CompatError, Decomposition, TopologyPair};
pub use enumeration::{
    enumerate_topologies, search_counterexample, verify, Counterexample, EnumerationError,
    PredicateId, TheoremId, TopologyStream, VerifyReport,
};
pub use ideals::{Ideal, IdealError, StarAdmissibility};
pub use realline::{IntervalSet, LineTopology, Rat, RealLineError, TopologyOrder};
pub use set::PointSet;
pub use space::{FiniteSpace, Separation, SpaceError, SpaceReport};
pub use topgroups::{
    classify, group_hattori, is_almost_topological, AlmostClause, AlmostReport, FiniteGroup,
    GroupError, GroupTopologyClass, GroupVerdict, HattoriConstruction,
};
