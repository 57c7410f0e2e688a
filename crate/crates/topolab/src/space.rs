//! Finite topological spaces in minimal-neighborhood form.
//!
//! A topology on a finite set is determined by the minimal open neighborhood
//! `U(x)` of each point: a set is open exactly when it contains `U(x)` for
//! each of its points `x`. Storing the vector `x -> U(x)` makes interior and
//! closure single passes over the points:
//!
//! * `interior(A) = { x : U(x) subset of A }`
//! * `closure(A)  = { x : U(x) meets A }`
//!
//! The vector is valid iff `x in U(x)` and `y in U(x)` implies
//! `U(y) subset of U(x)`; constructors reject anything else, so every
//! `FiniteSpace` value is canonical and structural equality is equality of
//! topologies.

use std::fmt;

use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::set::{PointSet, MAX_POINTS};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpaceError {
    #[error("ground set of {points} points exceeds the {MAX_POINTS}-point limit")]
    TooLarge { points: usize },
    #[error("ground set must contain at least one point")]
    EmptyGroundSet,
    #[error("point {point} out of range for a ground set of {n} points")]
    PointOutOfRange { point: usize, n: usize },
    #[error("not a topology: {0}")]
    NotATopology(String),
    #[error("invalid minimal neighborhoods: {0}")]
    InvalidMinNbhds(String),
}

/// A topological space on the ground set `{0, .., n-1}`, `1 <= n <= 16`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteSpace {
    n: usize,
    min_nbhd: Vec<PointSet>,
}

impl FiniteSpace {
    fn check_size(n: usize) -> Result<(), SpaceError> {
        if n == 0 {
            Err(SpaceError::EmptyGroundSet)
        } else if n > MAX_POINTS {
            Err(SpaceError::TooLarge { points: n })
        } else {
            Ok(())
        }
    }

    fn check_in_universe(n: usize, sets: &[PointSet]) -> Result<(), SpaceError> {
        let universe = PointSet::universe(n);
        for s in sets {
            if !s.is_subset(universe) {
                let point = s.minus(universe).iter().next().unwrap();
                return Err(SpaceError::PointOutOfRange { point, n });
            }
        }
        Ok(())
    }

    /// Builds a space from its minimal-neighborhood vector, validating that
    /// it actually is one.
    pub fn from_min_nbhds(min_nbhd: Vec<PointSet>) -> Result<Self, SpaceError> {
        let n = min_nbhd.len();
        Self::check_size(n)?;
        Self::check_in_universe(n, &min_nbhd)?;
        for x in 0..n {
            if !min_nbhd[x].contains(x) {
                return Err(SpaceError::InvalidMinNbhds(format!(
                    "neighborhood {} of point {x} does not contain it",
                    min_nbhd[x]
                )));
            }
            for y in min_nbhd[x].iter() {
                if !min_nbhd[y].is_subset(min_nbhd[x]) {
                    return Err(SpaceError::InvalidMinNbhds(format!(
                        "{} contains {y} but not all of {}",
                        min_nbhd[x], min_nbhd[y]
                    )));
                }
            }
        }
        Ok(FiniteSpace { n, min_nbhd })
    }

    /// Builds a space from an explicit family of open sets.
    ///
    /// The family must contain the empty set and the whole ground set and be
    /// closed under pairwise union and intersection; on a finite carrier that
    /// is the whole topology axiom set. The derived open family always equals
    /// the input family.
    pub fn from_opens(n: usize, opens: &[PointSet]) -> Result<Self, SpaceError> {
        Self::check_size(n)?;
        Self::check_in_universe(n, opens)?;
        let universe = PointSet::universe(n);
        let mut family: Vec<PointSet> = opens.to_vec();
        family.sort();
        family.dedup();
        let member = |s: PointSet| family.binary_search(&s).is_ok();
        if !member(PointSet::EMPTY) {
            return Err(SpaceError::NotATopology("the empty set is missing".into()));
        }
        if !member(universe) {
            return Err(SpaceError::NotATopology(format!("the whole set {universe} is missing")));
        }
        // The full powerset is closed under everything; skip the pair scan.
        if family.len() != 1 << n {
            for (i, &a) in family.iter().enumerate() {
                for &b in &family[i + 1..] {
                    if !member(a.union(b)) {
                        return Err(SpaceError::NotATopology(format!(
                            "union of {a} and {b} is missing"
                        )));
                    }
                    if !member(a.intersect(b)) {
                        return Err(SpaceError::NotATopology(format!(
                            "intersection of {a} and {b} is missing"
                        )));
                    }
                }
            }
        }
        let min_nbhd = (0..n)
            .map(|x| {
                family.iter().filter(|s| s.contains(x)).fold(universe, |acc, &s| acc.intersect(s))
            })
            .collect();
        Ok(FiniteSpace { n, min_nbhd })
    }

    /// Smallest topology containing every set of `subbasis`.
    ///
    /// The minimal neighborhood of `x` is the intersection of the subbasis
    /// sets containing `x` (the whole set if there are none).
    pub fn generate(n: usize, subbasis: &[PointSet]) -> Result<Self, SpaceError> {
        Self::check_size(n)?;
        Self::check_in_universe(n, subbasis)?;
        let universe = PointSet::universe(n);
        let min_nbhd = (0..n)
            .map(|x| {
                subbasis.iter().filter(|s| s.contains(x)).fold(universe, |acc, &s| acc.intersect(s))
            })
            .collect();
        Ok(FiniteSpace { n, min_nbhd })
    }

    /// The discrete topology: every set open.
    pub fn discrete(n: usize) -> Self {
        Self::from_min_nbhds((0..n).map(PointSet::singleton).collect())
            .expect("singleton neighborhoods are always valid")
    }

    /// The trivial topology: only the empty set and the whole set open.
    pub fn trivial(n: usize) -> Self {
        Self::from_min_nbhds(vec![PointSet::universe(n); n])
            .expect("full neighborhoods are always valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn universe(&self) -> PointSet {
        PointSet::universe(self.n)
    }

    pub fn min_nbhd(&self, x: usize) -> PointSet {
        self.min_nbhd[x]
    }

    pub fn min_nbhds(&self) -> &[PointSet] {
        &self.min_nbhd
    }

    /// All subsets of the ground set, ascending bitmask order.
    pub fn subsets(&self) -> impl Iterator<Item = PointSet> {
        PointSet::subsets_of(self.n)
    }

    pub fn is_open(&self, a: PointSet) -> bool {
        a.iter().all(|x| self.min_nbhd[x].is_subset(a))
    }

    pub fn is_closed(&self, a: PointSet) -> bool {
        self.is_open(a.complement(self.n))
    }

    pub fn is_clopen(&self, a: PointSet) -> bool {
        self.is_open(a) && self.is_closed(a)
    }

    /// The open family, ascending bitmask order.
    pub fn opens(&self) -> Vec<PointSet> {
        self.subsets().filter(|&a| self.is_open(a)).collect()
    }

    pub fn interior(&self, a: PointSet) -> PointSet {
        (0..self.n).filter(|&x| self.min_nbhd[x].is_subset(a)).collect()
    }

    pub fn closure(&self, a: PointSet) -> PointSet {
        (0..self.n).filter(|&x| self.min_nbhd[x].intersects(a)).collect()
    }

    pub fn is_dense(&self, a: PointSet) -> bool {
        self.closure(a) == self.universe()
    }

    pub fn is_nowhere_dense(&self, a: PointSet) -> bool {
        self.interior(self.closure(a)).is_empty()
    }

    /// On a finite carrier a finite union of nowhere dense sets is nowhere
    /// dense, so the meager sets are exactly the nowhere dense ones.
    pub fn is_meager(&self, a: PointSet) -> bool {
        self.is_nowhere_dense(a)
    }

    /// `A` differs from some open set by a meager set.
    pub fn has_baire_property(&self, a: PointSet) -> bool {
        self.subsets().any(|o| self.is_open(o) && self.is_meager(a.symmetric_difference(o)))
    }

    /// All sets with the Baire property, ascending bitmask order.
    pub fn baire_family(&self) -> Vec<PointSet> {
        self.subsets().filter(|&a| self.has_baire_property(a)).collect()
    }

    /// Every intersection of dense open sets is dense. True for every finite
    /// space; computed, not assumed.
    pub fn is_baire_space(&self) -> bool {
        let mut meet = self.universe();
        for o in self.opens() {
            if self.is_dense(o) {
                meet = meet.intersect(o);
            }
        }
        self.is_dense(meet)
    }

    /// Least cardinality of a dense subset.
    pub fn density(&self) -> usize {
        (0..=self.n)
            .find(|&k| self.subsets().any(|d| d.len() == k && self.is_dense(d)))
            .expect("the whole ground set is dense")
    }

    pub fn is_connected(&self) -> bool {
        let universe = self.universe();
        !self.subsets().any(|a| !a.is_empty() && a != universe && self.is_clopen(a))
    }

    /// Points whose singleton is open.
    pub fn isolated_points(&self) -> PointSet {
        (0..self.n).filter(|&x| self.min_nbhd[x] == PointSet::singleton(x)).collect()
    }

    pub fn separation(&self) -> Separation {
        let t0 = (0..self.n).all(|x| (x + 1..self.n).all(|y| self.min_nbhd[x] != self.min_nbhd[y]));
        // T1: singletons are closed.
        let t1 = (0..self.n).all(|x| {
            let s = PointSet::singleton(x);
            self.closure(s) == s
        });
        // T2: minimal neighborhoods are the best possible separating opens.
        let t2 = (0..self.n)
            .all(|x| (x + 1..self.n).all(|y| !self.min_nbhd[x].intersects(self.min_nbhd[y])));
        Separation { t0, t1, t2 }
    }

    /// Product with row-major point indexing: `(i, j) -> i * other.n + j`.
    pub fn product(&self, other: &FiniteSpace) -> Result<FiniteSpace, SpaceError> {
        let n = self.n * other.n;
        if n > MAX_POINTS {
            return Err(SpaceError::TooLarge { points: n });
        }
        let mut min_nbhd = Vec::with_capacity(n);
        for i in 0..self.n {
            for j in 0..other.n {
                let mut nb = PointSet::EMPTY;
                for a in self.min_nbhd[i].iter() {
                    for b in other.min_nbhd[j].iter() {
                        nb = nb.with(a * other.n + b);
                    }
                }
                min_nbhd.push(nb);
            }
        }
        Ok(FiniteSpace { n, min_nbhd })
    }

    /// Product of a non-empty list of spaces, row-major indexing folded left.
    pub fn product_all(spaces: &[FiniteSpace]) -> Result<FiniteSpace, SpaceError> {
        let (first, rest) = spaces.split_first().ok_or(SpaceError::EmptyGroundSet)?;
        rest.iter().try_fold(first.clone(), |acc, s| acc.product(s))
    }

    /// `A` is semi-open: contained in the closure of its interior.
    pub fn is_semi_open(&self, a: PointSet) -> bool {
        a.is_subset(self.closure(self.interior(a)))
    }

    /// Union of all nowhere dense subsets; itself nowhere dense.
    ///
    /// A set is nowhere dense iff each of its singletons is (subsets of
    /// nowhere dense sets are nowhere dense, finite unions stay nowhere
    /// dense), so the union is the set of points with nowhere dense
    /// singleton.
    pub fn nwd_max(&self) -> PointSet {
        let m: PointSet =
            (0..self.n).filter(|&x| self.is_nowhere_dense(PointSet::singleton(x))).collect();
        debug_assert!(self.is_nowhere_dense(m));
        m
    }

    pub fn report(&self) -> SpaceReport {
        SpaceReport {
            n: self.n,
            separation: self.separation(),
            density: self.density(),
            isolated_points: self.isolated_points(),
            is_connected: self.is_connected(),
            is_baire: self.is_baire_space(),
            nwd_max: self.nwd_max(),
        }
    }
}

impl fmt::Debug for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteSpace(n={}, min_nbhds=[", self.n)?;
        for (x, nb) in self.min_nbhd.iter().enumerate() {
            if x > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{nb}")?;
        }
        write!(f, "])")
    }
}

/// Separation axioms; on finite carriers T1 and T2 both collapse to
/// discreteness, but all three are computed from their definitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Separation {
    pub t0: bool,
    pub t1: bool,
    pub t2: bool,
}

/// Aggregate of the per-space invariants the CLI reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpaceReport {
    pub n: usize,
    pub separation: Separation,
    pub density: usize,
    pub isolated_points: PointSet,
    pub is_connected: bool,
    pub is_baire: bool,
    pub nwd_max: PointSet,
}

#[derive(Serialize)]
struct SpaceWire<'a> {
    n: usize,
    min_nbhds: &'a [PointSet],
}

#[derive(Deserialize)]
struct SpaceWireIn {
    n: usize,
    #[serde(default)]
    opens: Option<Vec<PointSet>>,
    #[serde(default)]
    min_nbhds: Option<Vec<PointSet>>,
}

impl Serialize for FiniteSpace {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SpaceWire { n: self.n, min_nbhds: &self.min_nbhd }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FiniteSpace {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = SpaceWireIn::deserialize(deserializer)?;
        let space = match (wire.opens, wire.min_nbhds) {
            (Some(opens), None) => FiniteSpace::from_opens(wire.n, &opens),
            (None, Some(nbhds)) => {
                if nbhds.len() != wire.n {
                    return Err(D::Error::custom(format!(
                        "{} neighborhoods given for {} points",
                        nbhds.len(),
                        wire.n
                    )));
                }
                FiniteSpace::from_min_nbhds(nbhds)
            }
            (Some(_), Some(_)) => {
                return Err(D::Error::custom(
                    "give exactly one of \"opens\" and \"min_nbhds\", not both",
                ))
            }
            (None, None) => {
                return Err(D::Error::custom("space needs an \"opens\" or \"min_nbhds\" field"))
            }
        };
        space.map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{khalimsky5, odd_even4, pts, sierpinski};

    #[test]
    fn sierpinski_operators() {
        let s = sierpinski();
        assert_eq!(s.closure(pts(&[0])), pts(&[0, 1]));
        assert_eq!(s.interior(pts(&[1])), PointSet::EMPTY);
        assert_eq!(s.min_nbhd(1), pts(&[0, 1]));
        assert!(s.is_dense(pts(&[0])));
        assert_eq!(s.density(), 1);
        assert!(s.is_nowhere_dense(pts(&[1])));
        assert_eq!(s.nwd_max(), pts(&[1]));
    }

    #[test]
    fn from_opens_rejects_non_topologies() {
        // Whole set missing.
        let err = FiniteSpace::from_opens(2, &[PointSet::EMPTY, pts(&[0])]).unwrap_err();
        assert!(matches!(err, SpaceError::NotATopology(ref m) if m.contains("whole set")));
        // Union of {0} and {1} missing.
        let err = FiniteSpace::from_opens(
            3,
            &[PointSet::EMPTY, pts(&[0]), pts(&[1]), PointSet::universe(3)],
        )
        .unwrap_err();
        match err {
            SpaceError::NotATopology(m) => assert!(m.contains("union"), "{m}"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn derived_opens_equal_input_family() {
        let opens = [PointSet::EMPTY, pts(&[0]), pts(&[0, 1]), pts(&[0, 2]), PointSet::universe(3)];
        let s = FiniteSpace::from_opens(3, &opens).unwrap();
        let mut expect = opens.to_vec();
        expect.sort();
        assert_eq!(s.opens(), expect);
    }

    #[test]
    fn generate_khalimsky_window() {
        let s = khalimsky5();
        let expect = [pts(&[0, 1]), pts(&[1]), pts(&[1, 2, 3]), pts(&[3]), pts(&[3, 4])];
        assert_eq!(s.min_nbhds(), &expect);
    }

    /// Oracle for `generate`: close the subbasis under pairwise intersections
    /// and unions to a fixpoint and compare the resulting family.
    #[test]
    fn generate_matches_fixpoint_closure_oracle() {
        let cases: Vec<(usize, Vec<PointSet>)> = vec![
            (5, vec![pts(&[0, 1]), pts(&[1, 2, 3]), pts(&[3, 4])]),
            (3, vec![pts(&[0, 1]), pts(&[1, 2])]),
            (4, vec![]),
            (4, vec![pts(&[0]), pts(&[3]), pts(&[0, 1, 2])]),
            (2, vec![pts(&[0]), pts(&[1])]),
        ];
        for (n, subbasis) in cases {
            let mut family: Vec<PointSet> = vec![PointSet::EMPTY, PointSet::universe(n)];
            family.extend(subbasis.iter().copied());
            family.sort();
            family.dedup();
            loop {
                let mut grew = false;
                let snapshot = family.clone();
                for &a in &snapshot {
                    for &b in &snapshot {
                        for c in [a.intersect(b), a.union(b)] {
                            if family.binary_search(&c).is_err() {
                                family.push(c);
                                family.sort();
                                grew = true;
                            }
                        }
                    }
                }
                if !grew {
                    break;
                }
            }
            let s = FiniteSpace::generate(n, &subbasis).unwrap();
            assert_eq!(s.opens(), family, "n={n} subbasis={subbasis:?}");
        }
    }

    #[test]
    fn odd_even_shape() {
        let s = odd_even4();
        assert_eq!(s.min_nbhd(0), pts(&[0, 1]));
        assert_eq!(s.min_nbhd(3), pts(&[2, 3]));
        assert_eq!(s.density(), 2);
        assert!(!s.is_connected());
        assert_eq!(s.isolated_points(), PointSet::EMPTY);
        assert!(!s.separation().t0);
        assert_eq!(s.nwd_max(), PointSet::EMPTY);
    }

    #[test]
    fn baire_property_examples() {
        let oe = odd_even4();
        assert!(!oe.has_baire_property(pts(&[0, 2])));
        assert_eq!(oe.baire_family(), oe.opens());

        let tr = FiniteSpace::trivial(3);
        assert_eq!(tr.baire_family(), vec![PointSet::EMPTY, PointSet::universe(3)]);

        let k = khalimsky5();
        assert_eq!(k.baire_family().len(), 32);
    }

    #[test]
    fn every_finite_space_here_is_baire() {
        for s in [
            sierpinski(),
            odd_even4(),
            khalimsky5(),
            FiniteSpace::trivial(4),
            FiniteSpace::discrete(4),
        ] {
            assert!(s.is_baire_space(), "{s:?}");
        }
    }

    #[test]
    fn separation_and_product() {
        let s = sierpinski();
        assert_eq!(s.separation(), Separation { t0: true, t1: false, t2: false });
        let d = FiniteSpace::discrete(2);
        assert_eq!(d.separation(), Separation { t0: true, t1: true, t2: true });

        let ss = s.product(&s).unwrap();
        // Point (1,1) has index 3; its neighborhood is the whole square.
        assert_eq!(ss.min_nbhd(3), PointSet::universe(4));
        assert_eq!(ss.min_nbhd(0), pts(&[0]));

        let tv = FiniteSpace::trivial(2).product(&FiniteSpace::discrete(2)).unwrap();
        assert_eq!(tv.min_nbhd(0), pts(&[0, 2]));
        assert_eq!(tv.min_nbhd(1), pts(&[1, 3]));

        let too_big = FiniteSpace::discrete(5).product(&FiniteSpace::discrete(4));
        assert_eq!(too_big.unwrap_err(), SpaceError::TooLarge { points: 20 });
    }

    #[test]
    fn semi_open_examples() {
        let s = sierpinski();
        assert!(s.is_semi_open(pts(&[0])));
        assert!(s.is_semi_open(pts(&[0, 1])));
        assert!(!s.is_semi_open(pts(&[1])));
    }

    #[test]
    fn json_roundtrip_and_opens_ingest() {
        let k = khalimsky5();
        let js = serde_json::to_string(&k).unwrap();
        assert!(js.contains("\"min_nbhds\""));
        let back: FiniteSpace = serde_json::from_str(&js).unwrap();
        assert_eq!(back, k);

        let from_opens: FiniteSpace =
            serde_json::from_str(r#"{"n":2,"opens":[[],[0],[0,1]]}"#).unwrap();
        assert_eq!(from_opens, sierpinski());

        assert!(serde_json::from_str::<FiniteSpace>(r#"{"n":2,"opens":[[],[0]]}"#).is_err());
        assert!(serde_json::from_str::<FiniteSpace>(r#"{"n":2,"min_nbhds":[[0],[7]]}"#).is_err());
    }

    /// Interior/closure duality and the Kuratowski laws, exhaustively on the
    /// fixture spaces.
    #[test]
    fn operator_laws() {
        for s in [sierpinski(), odd_even4(), khalimsky5(), FiniteSpace::trivial(3)] {
            let n = s.n();
            for a in s.subsets() {
                let cl = s.closure(a);
                assert_eq!(
                    s.interior(a),
                    s.closure(a.complement(n)).complement(n),
                    "duality in {s:?}"
                );
                assert!(a.is_subset(cl));
                assert_eq!(s.closure(cl), cl);
                assert!(s.is_open(s.interior(a)));
                assert!(s.is_closed(cl));
                for b in s.subsets() {
                    assert_eq!(s.closure(a.union(b)), s.closure(a).union(s.closure(b)));
                }
            }
        }
    }

    /// Meagerness collapses to nowhere density: compare against the
    /// union-of-nowhere-dense-subsets definition directly.
    #[test]
    fn meager_matches_union_definition() {
        for s in [sierpinski(), odd_even4(), khalimsky5(), FiniteSpace::discrete(3)] {
            for a in s.subsets() {
                let mut union = PointSet::EMPTY;
                for b in s.subsets() {
                    if b.is_subset(a) && s.is_nowhere_dense(b) {
                        union = union.union(b);
                    }
                }
                assert_eq!(s.is_meager(a), union == a, "{s:?} a={a}");
            }
        }
    }
}
