//! Ideals of subsets and the star topology they induce.
//!
//! On a finite ground set every ideal of subsets is principal: it is the
//! powerset of the union of its members. The local function of a set `A`
//! collects the points all of whose neighborhoods meet `A` in a set outside
//! the ideal; `A` together with its local function is a Kuratowski closure,
//! and its fixed sets are the closed sets of a finer topology, the star
//! topology.

use thiserror::Error;

use crate::compat::is_admissible_extension;
use crate::set::PointSet;
use crate::space::FiniteSpace;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IdealError {
    #[error("{set} is not a subset of the {n}-point ground set")]
    OutOfRange { set: PointSet, n: usize },
}

/// The ideal of all subsets of `generator`.
///
/// The improper ideal (generator = whole ground set) is allowed; its local
/// function is empty for every argument, so its star topology is discrete.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ideal {
    generator: PointSet,
}

impl Ideal {
    pub fn new(generator: PointSet) -> Self {
        Ideal { generator }
    }

    pub fn generator(&self) -> PointSet {
        self.generator
    }

    pub fn contains(&self, a: PointSet) -> bool {
        a.is_subset(self.generator)
    }
}

fn check_in_ground(s: &FiniteSpace, set: PointSet) -> Result<(), IdealError> {
    if set.is_subset(s.universe()) {
        Ok(())
    } else {
        Err(IdealError::OutOfRange { set, n: s.n() })
    }
}

/// Local function of `a`: points `x` such that `a` meets every open
/// neighborhood of `x` in a set outside the ideal.
///
/// Only the minimal neighborhood needs testing: larger neighborhoods have
/// larger traces, and ideals are downward closed.
pub fn local_function(s: &FiniteSpace, ideal: &Ideal, a: PointSet) -> Result<PointSet, IdealError> {
    check_in_ground(s, ideal.generator)?;
    check_in_ground(s, a)?;
    Ok((0..s.n()).filter(|&x| !ideal.contains(a.intersect(s.min_nbhd(x)))).collect())
}

/// `a` together with its local function; a Kuratowski closure operator.
pub fn star_closure(s: &FiniteSpace, ideal: &Ideal, a: PointSet) -> Result<PointSet, IdealError> {
    Ok(a.union(local_function(s, ideal, a)?))
}

/// The star topology: closed sets are the fixed points of the star closure.
pub fn star_topology(s: &FiniteSpace, ideal: &Ideal) -> Result<FiniteSpace, IdealError> {
    check_in_ground(s, ideal.generator)?;
    let n = s.n();
    let opens: Vec<PointSet> = s
        .subsets()
        .filter(|&c| star_closure(s, ideal, c).expect("sets validated") == c)
        .map(|c| c.complement(n))
        .collect();
    Ok(FiniteSpace::from_opens(n, &opens)
        .expect("fixed sets of a Kuratowski closure form the closed sets of a topology"))
}

/// The ideal of nowhere dense sets: principal with the union of all nowhere
/// dense sets as generator (itself nowhere dense on a finite carrier).
pub fn nwd_ideal(s: &FiniteSpace) -> Ideal {
    Ideal::new(s.nwd_max())
}

/// The alpha topology: sets contained in the interior of the closure of
/// their interior.
pub fn alpha_topology(s: &FiniteSpace) -> FiniteSpace {
    let opens: Vec<PointSet> =
        s.subsets().filter(|&a| a.is_subset(s.interior(s.closure(s.interior(a))))).collect();
    FiniteSpace::from_opens(s.n(), &opens).expect("alpha-open sets always form a topology")
}

/// Outcome of testing whether a star topology admissibly extends its base.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StarAdmissibility {
    pub admissible: bool,
    /// When not admissible: the first (ascending bitmask order) non-empty
    /// star-open set containing no non-empty open set of the base.
    pub witness: Option<PointSet>,
}

/// Is the star topology of `ideal` an admissible extension of `s`?
///
/// The star topology always contains the base topology, so only the
/// pi-network half can fail; the witness exhibits the failure.
pub fn is_star_admissible(s: &FiniteSpace, ideal: &Ideal) -> Result<StarAdmissibility, IdealError> {
    let star = star_topology(s, ideal)?;
    let admissible =
        is_admissible_extension(s, &star).expect("star topology shares the ground set");
    let witness = if admissible {
        None
    } else {
        star.subsets().find(|&w| {
            !w.is_empty() && star.is_open(w) && !(0..s.n()).any(|y| s.min_nbhd(y).is_subset(w))
        })
    };
    debug_assert_eq!(admissible, witness.is_none());
    Ok(StarAdmissibility { admissible, witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{base3, ext3, khalimsky5, odd_even4, pts, sierpinski};

    #[test]
    fn local_function_golden() {
        let s = base3();
        let i = Ideal::new(pts(&[1, 2]));
        assert_eq!(local_function(&s, &i, pts(&[0, 1])).unwrap(), PointSet::universe(3));
        // Sets inside the ideal have empty local function.
        assert_eq!(local_function(&s, &i, pts(&[1])).unwrap(), PointSet::EMPTY);
        assert_eq!(
            local_function(&s, &i, pts(&[4])).unwrap_err(),
            IdealError::OutOfRange { set: pts(&[4]), n: 3 }
        );
    }

    #[test]
    fn star_topology_golden() {
        let s = base3();
        let st = star_topology(&s, &Ideal::new(pts(&[1, 2]))).unwrap();
        assert_eq!(st, ext3());

        // The trivial ideal leaves the topology unchanged.
        assert_eq!(star_topology(&s, &Ideal::new(PointSet::EMPTY)).unwrap(), s);

        // The improper ideal kills every local function: discrete result.
        for base in [base3(), odd_even4(), FiniteSpace::trivial(4)] {
            let n = base.n();
            let st = star_topology(&base, &Ideal::new(PointSet::universe(n))).unwrap();
            assert_eq!(st, FiniteSpace::discrete(n));
        }
    }

    #[test]
    fn star_contains_base_and_closes_ideal_members() {
        let cases = [
            (odd_even4(), Ideal::new(pts(&[0]))),
            (khalimsky5(), Ideal::new(pts(&[0, 2]))),
            (sierpinski(), Ideal::new(pts(&[1]))),
        ];
        for (s, i) in cases {
            let st = star_topology(&s, &i).unwrap();
            assert!(crate::compat::is_sub_topology(&s, &st).unwrap());
            for c in s.subsets() {
                if i.contains(c) {
                    assert!(st.is_closed(c), "{c} should be star-closed");
                }
            }
            // Idempotence: starring again with the same ideal is stable.
            assert_eq!(star_topology(&st, &i).unwrap(), st);
        }
    }

    #[test]
    fn nwd_ideal_examples() {
        assert_eq!(nwd_ideal(&odd_even4()).generator(), PointSet::EMPTY);
        assert_eq!(nwd_ideal(&khalimsky5()).generator(), pts(&[0, 2, 4]));
        assert_eq!(nwd_ideal(&sierpinski()).generator(), pts(&[1]));
    }

    #[test]
    fn alpha_topology_golden() {
        assert_eq!(alpha_topology(&base3()), ext3());
        // Alpha of the nowhere-dense star coincide on the fixtures.
        for s in [base3(), odd_even4(), khalimsky5(), sierpinski()] {
            assert_eq!(star_topology(&s, &nwd_ideal(&s)).unwrap(), alpha_topology(&s));
        }
    }

    #[test]
    fn star_admissibility_examples() {
        // Ideal inside the nowhere-dense ideal: admissible.
        let k = khalimsky5();
        let ok = is_star_admissible(&k, &Ideal::new(pts(&[0, 4]))).unwrap();
        assert!(ok.admissible);
        assert_eq!(ok.witness, None);

        // {0} is not nowhere dense in the partition space: inadmissible, and
        // the first offending star-open is {1}.
        let oe = odd_even4();
        let bad = is_star_admissible(&oe, &Ideal::new(pts(&[0]))).unwrap();
        assert!(!bad.admissible);
        assert_eq!(bad.witness, Some(pts(&[1])));
        let st = star_topology(&oe, &Ideal::new(pts(&[0]))).unwrap();
        let mut opens = st.opens();
        opens.sort_by_key(|s| (s.len(), s.bits()));
        assert_eq!(
            opens,
            vec![
                PointSet::EMPTY,
                pts(&[1]),
                pts(&[0, 1]),
                pts(&[2, 3]),
                pts(&[1, 2, 3]),
                PointSet::universe(4),
            ]
        );
    }

    /// Kuratowski axioms for the star closure, exhaustively on fixtures.
    #[test]
    fn star_closure_is_kuratowski() {
        for (s, i) in [
            (base3(), Ideal::new(pts(&[1, 2]))),
            (odd_even4(), Ideal::new(pts(&[0]))),
            (khalimsky5(), Ideal::new(pts(&[0, 2, 4]))),
        ] {
            let cl = |a: PointSet| star_closure(&s, &i, a).unwrap();
            assert_eq!(cl(PointSet::EMPTY), PointSet::EMPTY);
            for a in s.subsets() {
                assert!(a.is_subset(cl(a)));
                assert_eq!(cl(cl(a)), cl(a));
                for b in s.subsets() {
                    assert_eq!(cl(a.union(b)), cl(a).union(cl(b)));
                }
            }
        }
    }
}
