//! Symbolic topologies on the real line with exact rational endpoints.
//!
//! Interval sets form a decidable Boolean algebra ([`IntervalSet`]); the
//! named topologies ([`LineTopology`]) compute interiors, closures,
//! semi-open verdicts, order comparisons, admissibility, and clopen
//! disconnection witnesses on top of it. No floating point is involved
//! anywhere, so every equality here is exact.

mod interval;
mod topology;

pub use interval::{
    parse_rat, pick_rational_in, rat, rat_frac, IntervalSet, LowerBound, Piece, Rat, RealLineError,
    UpperBound,
};
pub use topology::{
    basic_open_inside, hattori_clopen_witness, hattori_compare, line_compare, rl_are_pi_compatible,
    rl_is_admissible_extension, LineTopology, NbhdKind, TopologyOrder,
};
