//! Comparing two topologies on the same ground set: pi-networks, admissible
//! extensions, the open-set decomposition, and the meet topology.
//!
//! Everything reduces to minimal neighborhoods. A family is a pi-network for
//! a topology when every non-empty open set contains a non-empty member; it
//! suffices to test the minimal neighborhoods on both sides, since every
//! non-empty open set contains one.

use thiserror::Error;

use crate::set::PointSet;
use crate::space::FiniteSpace;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CompatError {
    #[error("ground sets differ: {left} vs {right} points")]
    GroundSetMismatch { left: usize, right: usize },
    #[error("topologies are not pi-compatible")]
    NotPiCompatible,
    #[error("{0} is not open in the first topology")]
    NotOpen(PointSet),
    #[error("the set to decompose must be non-empty")]
    EmptyInput,
}

fn check_same_ground(a: &FiniteSpace, b: &FiniteSpace) -> Result<(), CompatError> {
    if a.n() != b.n() {
        return Err(CompatError::GroundSetMismatch { left: a.n(), right: b.n() });
    }
    Ok(())
}

/// Two topologies on one ground set, in the roles (tau, sigma).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopologyPair {
    pub tau: FiniteSpace,
    pub sigma: FiniteSpace,
}

impl TopologyPair {
    pub fn new(tau: FiniteSpace, sigma: FiniteSpace) -> Result<Self, CompatError> {
        check_same_ground(&tau, &sigma)?;
        Ok(TopologyPair { tau, sigma })
    }
}

/// The non-empty opens of `tau` form a pi-network for `sigma`: every
/// non-empty `sigma`-open set contains a non-empty `tau`-open set.
pub fn is_pi_network(tau: &FiniteSpace, sigma: &FiniteSpace) -> Result<bool, CompatError> {
    check_same_ground(tau, sigma)?;
    let n = tau.n();
    // Quantify over minimal opens only: sigma's minimal neighborhoods are the
    // minimal non-empty opens, and a tau-open inside any open exists iff some
    // tau-minimal-neighborhood is inside.
    Ok((0..n).all(|x| {
        let target = sigma.min_nbhd(x);
        (0..n).any(|y| tau.min_nbhd(y).is_subset(target))
    }))
}

/// Mutually pi-networked.
pub fn are_pi_compatible(tau: &FiniteSpace, sigma: &FiniteSpace) -> Result<bool, CompatError> {
    Ok(is_pi_network(tau, sigma)? && is_pi_network(sigma, tau)?)
}

/// `base` is contained in `ext` as a topology.
///
/// In minimal-neighborhood form, finer means pointwise smaller neighborhoods.
pub fn is_sub_topology(base: &FiniteSpace, ext: &FiniteSpace) -> Result<bool, CompatError> {
    check_same_ground(base, ext)?;
    Ok((0..base.n()).all(|x| ext.min_nbhd(x).is_subset(base.min_nbhd(x))))
}

/// `ext` extends `base` (contains all its opens) and `base` is a pi-network
/// for `ext`.
pub fn is_admissible_extension(base: &FiniteSpace, ext: &FiniteSpace) -> Result<bool, CompatError> {
    Ok(is_sub_topology(base, ext)? && is_pi_network(base, ext)?)
}

/// Splitting of a tau-open set along sigma.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Decomposition {
    /// Non-empty and open in sigma.
    pub open_part: PointSet,
    /// The remainder; nowhere dense in both topologies.
    pub nwd_part: PointSet,
}

/// Splits a non-empty tau-open set `o` into its sigma-interior and a
/// remainder that is nowhere dense in both topologies.
pub fn decompose_open(pair: &TopologyPair, o: PointSet) -> Result<Decomposition, CompatError> {
    if o.is_empty() {
        return Err(CompatError::EmptyInput);
    }
    if !pair.tau.is_open(o) {
        return Err(CompatError::NotOpen(o));
    }
    if !are_pi_compatible(&pair.tau, &pair.sigma)? {
        return Err(CompatError::NotPiCompatible);
    }
    let open_part = pair.sigma.interior(o);
    let nwd_part = o.minus(open_part);
    debug_assert!(!open_part.is_empty());
    debug_assert!(pair.tau.is_nowhere_dense(nwd_part));
    debug_assert!(pair.sigma.is_nowhere_dense(nwd_part));
    Ok(Decomposition { open_part, nwd_part })
}

/// The meet: sets open in both topologies.
///
/// The minimal both-open neighborhood of `x` is the closure of `{x}` under
/// "add both minimal neighborhoods of every member".
pub fn meet(tau: &FiniteSpace, sigma: &FiniteSpace) -> Result<FiniteSpace, CompatError> {
    check_same_ground(tau, sigma)?;
    let n = tau.n();
    let min_nbhd = (0..n)
        .map(|x| {
            let mut acc = PointSet::singleton(x);
            loop {
                let grown =
                    acc.iter().fold(acc, |s, y| s.union(tau.min_nbhd(y)).union(sigma.min_nbhd(y)));
                if grown == acc {
                    break acc;
                }
                acc = grown;
            }
        })
        .collect();
    Ok(FiniteSpace::from_min_nbhds(min_nbhd)
        .expect("fixpoints of neighborhood saturation are valid neighborhoods"))
}

/// The non-empty sets open in both topologies (on a finite carrier these are
/// exactly the non-empty G-delta sets of both) form a pi-network for each.
pub fn gdelta_pi_network(pair: &TopologyPair) -> Result<bool, CompatError> {
    if !are_pi_compatible(&pair.tau, &pair.sigma)? {
        return Err(CompatError::NotPiCompatible);
    }
    let both = meet(&pair.tau, &pair.sigma)?;
    Ok(is_pi_network(&both, &pair.tau)? && is_pi_network(&both, &pair.sigma)?)
}
