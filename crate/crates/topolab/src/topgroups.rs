//! Finite groups carrying finite topologies: continuity classification,
//! the almost-topological predicate, and the group-side neighborhood
//! construction.
//!
//! Everything here is definitional. A map between finite spaces is
//! continuous when every open set pulls back to an open set;
//! multiplication is checked against the product space from the core
//! module. The almost-topological clauses are evaluated in their stated
//! order and diagnostics name the first one that fails. On finite carriers
//! the predicate degenerates — a Hausdorff group refinement of a finite
//! topology forces everything discrete — which the tests document rather
//! than hide; the constructions stay executable and their failure modes
//! stay observable.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::compat::is_sub_topology;
use crate::set::PointSet;
use crate::space::FiniteSpace;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("group has order {group} but the space has {space} points")]
    SizeMismatch { group: usize, space: usize },
    #[error(
        "order {order} is too large: multiplication continuity needs order^2 <= 16 product points"
    )]
    CarrierTooLarge { order: usize },
    #[error("the local base at the identity is empty")]
    EmptyBase,
    #[error("set {set} is not within the group carrier of order {order}")]
    SetOutOfRange { set: PointSet, order: usize },
    #[error("almost-topological precondition failed: {0}")]
    PreconditionFailed(String),
}

/// A finite group as a validated multiplication table over `{0, .., n-1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteGroup {
    n: usize,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
    e: usize,
}

impl FiniteGroup {
    /// Validates closure bounds, the identity, inverses, and associativity.
    pub fn from_mul_table(mul: Vec<Vec<usize>>, e: usize) -> Result<Self, GroupError> {
        let n = mul.len();
        if n == 0 || n > crate::set::MAX_POINTS {
            return Err(GroupError::NotAGroup(format!(
                "order must be between 1 and {}, got {n}",
                crate::set::MAX_POINTS
            )));
        }
        if mul.iter().any(|row| row.len() != n) {
            return Err(GroupError::NotAGroup("multiplication table is not square".into()));
        }
        if mul.iter().flatten().any(|&v| v >= n) {
            return Err(GroupError::NotAGroup("table entry out of range".into()));
        }
        if e >= n {
            return Err(GroupError::NotAGroup(format!("identity index {e} out of range")));
        }
        for x in 0..n {
            if mul[e][x] != x || mul[x][e] != x {
                return Err(GroupError::NotAGroup(format!("{e} is not an identity at {x}")));
            }
        }
        let mut inv = vec![usize::MAX; n];
        for x in 0..n {
            match (0..n).find(|&y| mul[x][y] == e && mul[y][x] == e) {
                Some(y) => inv[x] = y,
                None => return Err(GroupError::NotAGroup(format!("{x} has no inverse"))),
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if mul[mul[x][y]][z] != mul[x][mul[y][z]] {
                        return Err(GroupError::NotAGroup(format!(
                            "associativity fails at ({x}, {y}, {z})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup { n, mul, inv, e })
    }

    /// The cyclic group of order `n` with identity 0.
    pub fn cyclic(n: usize) -> Self {
        let mul = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        FiniteGroup::from_mul_table(mul, 0).expect("cyclic tables are groups")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.e
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x][y]
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }

    /// `{xy : x in u, y in v}`
    pub fn setwise_product(&self, u: PointSet, v: PointSet) -> PointSet {
        let mut out = PointSet::EMPTY;
        for x in u.iter() {
            for y in v.iter() {
                out = out.with(self.mul(x, y));
            }
        }
        out
    }

    /// `{x^-1 : x in u}`
    pub fn setwise_inverse(&self, u: PointSet) -> PointSet {
        u.iter().map(|x| self.inv(x)).collect()
    }
}

#[derive(Serialize, Deserialize)]
struct GroupWire {
    n: usize,
    mul: Vec<Vec<usize>>,
    e: usize,
}

impl Serialize for FiniteGroup {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GroupWire { n: self.n, mul: self.mul.clone(), e: self.e }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FiniteGroup {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = GroupWire::deserialize(deserializer)?;
        if wire.mul.len() != wire.n {
            return Err(serde::de::Error::custom(format!(
                "table has {} rows for order {}",
                wire.mul.len(),
                wire.n
            )));
        }
        FiniteGroup::from_mul_table(wire.mul, wire.e).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupVerdict {
    None,
    Semitopological,
    Paratopological,
    Topological,
}

impl fmt::Display for GroupVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupVerdict::None => "none",
            GroupVerdict::Semitopological => "semitopological",
            GroupVerdict::Paratopological => "paratopological",
            GroupVerdict::Topological => "topological",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct GroupTopologyClass {
    pub left_translations_continuous: bool,
    pub right_translations_continuous: bool,
    pub multiplication_continuous: bool,
    pub inversion_continuous: bool,
    pub verdict: GroupVerdict,
}

/// Preimage-of-every-open continuity check.
fn continuous(dom: &FiniteSpace, cod: &FiniteSpace, f: impl Fn(usize) -> usize) -> bool {
    cod.opens().into_iter().all(|o| {
        let preimage: PointSet = (0..dom.n()).filter(|&x| o.contains(f(x))).collect();
        dom.is_open(preimage)
    })
}

/// Classifies the topology on the group's carrier by which operations it
/// makes continuous. Joint continuity of multiplication is continuity of
/// the map out of the product space; separate continuity is continuity of
/// every translation.
pub fn classify(g: &FiniteGroup, t: &FiniteSpace) -> Result<GroupTopologyClass, GroupError> {
    let n = g.order();
    if t.n() != n {
        return Err(GroupError::SizeMismatch { group: n, space: t.n() });
    }
    if n * n > crate::set::MAX_POINTS {
        return Err(GroupError::CarrierTooLarge { order: n });
    }
    let left = (0..n).all(|a| continuous(t, t, |x| g.mul(a, x)));
    let right = (0..n).all(|a| continuous(t, t, |x| g.mul(x, a)));
    let inversion = continuous(t, t, |x| g.inv(x));
    let product = t.product(t).expect("order^2 bounded above");
    let multiplication = continuous(&product, t, |p| g.mul(p / n, p % n));
    debug_assert!(!multiplication || (left && right));
    let verdict = if multiplication && inversion {
        GroupVerdict::Topological
    } else if multiplication {
        GroupVerdict::Paratopological
    } else if left && right {
        GroupVerdict::Semitopological
    } else {
        GroupVerdict::None
    };
    Ok(GroupTopologyClass {
        left_translations_continuous: left,
        right_translations_continuous: right,
        multiplication_continuous: multiplication,
        inversion_continuous: inversion,
        verdict,
    })
}

/// The almost-topological clauses, in evaluation order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AlmostClause {
    /// (i) the base topology makes multiplication jointly continuous
    Paratopological,
    /// (ii) gamma is a coarser Hausdorff topological-group topology
    HausdorffGroupRefinement,
    /// (iii) the given family is a local base at the identity in the base
    LocalBase,
    /// (iv) every base member minus the identity is gamma-open
    PuncturedOpen,
}

impl fmt::Display for AlmostClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlmostClause::Paratopological => "(i) multiplication continuity",
            AlmostClause::HausdorffGroupRefinement => "(ii) Hausdorff group refinement",
            AlmostClause::LocalBase => "(iii) local base at the identity",
            AlmostClause::PuncturedOpen => "(iv) punctured members gamma-open",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlmostReport {
    pub holds: bool,
    /// First failed clause with a one-line reason, when the predicate fails.
    pub failure: Option<(AlmostClause, String)>,
}

fn check_carrier_set(set: PointSet, order: usize) -> Result<(), GroupError> {
    if set.is_subset(PointSet::universe(order)) {
        Ok(())
    } else {
        Err(GroupError::SetOutOfRange { set, order })
    }
}

/// Evaluates the almost-topological predicate: (i) `t` makes `g` at least
/// paratopological, (ii) `gamma` is a coarser Hausdorff topology making `g`
/// a topological group, (iii) `beta_e` is a local base at the identity in
/// `t` (members must contain the identity; every `t`-open around the
/// identity contains a member), (iv) each member minus the identity is
/// `gamma`-open. Clauses run in that order and the report names the first
/// failure.
pub fn is_almost_topological(
    g: &FiniteGroup,
    t: &FiniteSpace,
    gamma: &FiniteSpace,
    beta_e: &[PointSet],
) -> Result<AlmostReport, GroupError> {
    let n = g.order();
    for space in [t, gamma] {
        if space.n() != n {
            return Err(GroupError::SizeMismatch { group: n, space: space.n() });
        }
    }
    if beta_e.is_empty() {
        return Err(GroupError::EmptyBase);
    }
    for &u in beta_e {
        check_carrier_set(u, n)?;
    }
    let fail = |clause: AlmostClause, why: String| {
        Ok(AlmostReport { holds: false, failure: Some((clause, why)) })
    };

    if !classify(g, t)?.multiplication_continuous {
        return fail(
            AlmostClause::Paratopological,
            "multiplication has a non-open preimage".into(),
        );
    }

    if !is_sub_topology(gamma, t).expect("sizes checked") {
        return fail(
            AlmostClause::HausdorffGroupRefinement,
            "gamma is not contained in the base topology".into(),
        );
    }
    if !gamma.separation().t2 {
        return fail(AlmostClause::HausdorffGroupRefinement, "gamma is not Hausdorff".into());
    }
    if classify(g, gamma)?.verdict != GroupVerdict::Topological {
        return fail(
            AlmostClause::HausdorffGroupRefinement,
            "gamma does not make the group topological".into(),
        );
    }

    let e = g.identity();
    if let Some(u) = beta_e.iter().find(|u| !u.contains(e)) {
        return fail(AlmostClause::LocalBase, format!("member {u} misses the identity"));
    }
    let uncovered =
        t.opens().into_iter().find(|o| o.contains(e) && !beta_e.iter().any(|u| u.is_subset(*o)));
    if let Some(o) = uncovered {
        return fail(AlmostClause::LocalBase, format!("open {o} contains no member"));
    }

    if let Some(u) = beta_e.iter().find(|u| !gamma.is_open(u.without(e))) {
        return fail(
            AlmostClause::PuncturedOpen,
            format!("{u} minus the identity is not gamma-open"),
        );
    }

    Ok(AlmostReport { holds: true, failure: None })
}

/// Output of [`group_hattori`]: the generated space plus whether the
/// neighborhood system actually certifies it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HattoriConstruction {
    pub space: FiniteSpace,
    pub valid: bool,
    /// First violated requirement when `valid` is false.
    pub note: Option<String>,
}

/// Builds the mixed neighborhood system `beta(x) = {U U^-1 x}` on `a` and
/// `{U x}` off `a`, takes the sets saturated by it (every point has a
/// member inside) as the opens, and verifies the open-neighborhood-system
/// axioms: each member contains its point, and each member encloses a
/// member around each of its points. When some axiom fails — or the
/// saturated family misses an intersection — the flag is false and the
/// space is the topology the family generates anyway.
///
/// `force` skips the [`is_almost_topological`] precondition so the
/// construction can be probed on inputs that fail it.
pub fn group_hattori(
    g: &FiniteGroup,
    t: &FiniteSpace,
    gamma: &FiniteSpace,
    beta_e: &[PointSet],
    a: PointSet,
    force: bool,
) -> Result<HattoriConstruction, GroupError> {
    let n = g.order();
    check_carrier_set(a, n)?;
    if !force {
        let report = is_almost_topological(g, t, gamma, beta_e)?;
        if let Some((clause, why)) = report.failure {
            return Err(GroupError::PreconditionFailed(format!("{clause}: {why}")));
        }
    } else {
        for space in [t, gamma] {
            if space.n() != n {
                return Err(GroupError::SizeMismatch { group: n, space: space.n() });
            }
        }
        if beta_e.is_empty() {
            return Err(GroupError::EmptyBase);
        }
        for &u in beta_e {
            check_carrier_set(u, n)?;
        }
    }

    let beta: Vec<Vec<PointSet>> = (0..n)
        .map(|x| {
            let here = PointSet::singleton(x);
            beta_e
                .iter()
                .map(|&u| {
                    if a.contains(x) {
                        g.setwise_product(g.setwise_product(u, g.setwise_inverse(u)), here)
                    } else {
                        g.setwise_product(u, here)
                    }
                })
                .collect()
        })
        .collect();

    let saturated: Vec<PointSet> = PointSet::subsets_of(n)
        .filter(|&o| o.iter().all(|x| beta[x].iter().any(|nb| nb.is_subset(o))))
        .collect();

    let mut problems: Vec<String> = Vec::new();
    for (x, members) in beta.iter().enumerate() {
        for nb in members {
            if !nb.contains(x) {
                problems.push(format!("neighborhood {nb} of {x} does not contain it"));
            }
        }
    }
    for members in &beta {
        for nb in members {
            for y in nb.iter() {
                if !beta[y].iter().any(|m| m.is_subset(*nb)) {
                    problems.push(format!("{nb} encloses no neighborhood of its point {y}"));
                }
            }
        }
    }
    let space = match FiniteSpace::from_opens(n, &saturated) {
        Ok(space) => space,
        Err(err) => {
            problems.push(format!("saturated sets are not a topology: {err}"));
            FiniteSpace::generate(n, &saturated).expect("saturated family is a valid subbasis")
        }
    };
    Ok(HattoriConstruction { valid: problems.is_empty(), note: problems.into_iter().next(), space })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::enumerate_topologies;

    fn pts(points: &[usize]) -> PointSet {
        points.iter().copied().collect()
    }

    fn space_from_opens(n: usize, opens: &[&[usize]]) -> FiniteSpace {
        let family: Vec<PointSet> = opens.iter().map(|o| pts(o)).collect();
        FiniteSpace::from_opens(n, &family).unwrap()
    }

    #[test]
    fn table_validation_catches_non_groups() {
        // Identity row broken.
        assert!(matches!(
            FiniteGroup::from_mul_table(vec![vec![0, 1], vec![1, 1]], 0),
            Err(GroupError::NotAGroup(_))
        ));
        // x + y mod 3 truncated to two elements: out of range.
        assert!(matches!(
            FiniteGroup::from_mul_table(vec![vec![0, 1], vec![1, 2]], 0),
            Err(GroupError::NotAGroup(_))
        ));
        // Valid Klein four-group.
        let klein = FiniteGroup::from_mul_table(
            vec![vec![0, 1, 2, 3], vec![1, 0, 3, 2], vec![2, 3, 0, 1], vec![3, 2, 1, 0]],
            0,
        )
        .unwrap();
        assert_eq!(klein.inv(3), 3);
    }

    #[test]
    fn cyclic_setwise_goldens() {
        let z4 = FiniteGroup::cyclic(4);
        assert_eq!(z4.setwise_product(pts(&[0, 1]), pts(&[0, 1])), pts(&[0, 1, 2]));
        assert_eq!(z4.setwise_inverse(pts(&[1, 3])), pts(&[1, 3]));
        assert_eq!(z4.setwise_product(pts(&[0]), pts(&[0])), pts(&[0]));
        assert_eq!(z4.inv(1), 3);
    }

    #[test]
    fn group_json_roundtrip() {
        let z3 = FiniteGroup::cyclic(3);
        let js = serde_json::to_string(&z3).unwrap();
        assert_eq!(js, r#"{"n":3,"mul":[[0,1,2],[1,2,0],[2,0,1]],"e":0}"#);
        let back: FiniteGroup = serde_json::from_str(&js).unwrap();
        assert_eq!(back, z3);
        let bad = r#"{"n":2,"mul":[[0,1],[1,1]],"e":0}"#;
        assert!(serde_json::from_str::<FiniteGroup>(bad).is_err());
    }

    #[test]
    fn classify_goldens() {
        let z2 = FiniteGroup::cyclic(2);
        let discrete = FiniteSpace::discrete(2);
        let class = classify(&z2, &discrete).unwrap();
        assert_eq!(class.verdict, GroupVerdict::Topological);
        assert!(class.multiplication_continuous && class.inversion_continuous);

        // One-sided open {0}: translating by 1 pulls {0} back to the
        // non-open {1}.
        let sierp = space_from_opens(2, &[&[], &[0], &[0, 1]]);
        let class = classify(&z2, &sierp).unwrap();
        assert_eq!(class.verdict, GroupVerdict::None);
        assert!(!class.left_translations_continuous);
        assert!(class.inversion_continuous);

        let z3 = FiniteGroup::cyclic(3);
        let class = classify(&z3, &FiniteSpace::trivial(3)).unwrap();
        assert_eq!(class.verdict, GroupVerdict::Topological);

        assert!(matches!(
            classify(&z2, &FiniteSpace::trivial(3)),
            Err(GroupError::SizeMismatch { group: 2, space: 3 })
        ));
        assert!(matches!(
            classify(&FiniteGroup::cyclic(5), &FiniteSpace::trivial(5)),
            Err(GroupError::CarrierTooLarge { order: 5 })
        ));
    }

    #[test]
    fn verdict_is_monotone_over_small_cyclic_groups() {
        for n in [2usize, 3] {
            let g = FiniteGroup::cyclic(n);
            for t in enumerate_topologies(n).unwrap() {
                let c = classify(&g, &t).unwrap();
                if c.verdict == GroupVerdict::Topological {
                    assert!(c.multiplication_continuous && c.inversion_continuous);
                }
                if c.multiplication_continuous {
                    assert!(
                        c.left_translations_continuous && c.right_translations_continuous,
                        "joint continuity without separate continuity on {t:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn almost_topological_examples() {
        let z2 = FiniteGroup::cyclic(2);
        let discrete = FiniteSpace::discrete(2);
        let report = is_almost_topological(&z2, &discrete, &discrete, &[pts(&[0])]).unwrap();
        assert!(report.holds);

        // Non-discrete base: multiplication continuity (clause order puts
        // it first) already fails, before the refinement clause would.
        let sierp = space_from_opens(2, &[&[], &[0], &[0, 1]]);
        let report = is_almost_topological(&z2, &sierp, &discrete, &[pts(&[0])]).unwrap();
        assert!(!report.holds);
        assert_eq!(report.failure.unwrap().0, AlmostClause::Paratopological);

        // Gamma failing Hausdorff is reported as clause (ii).
        let report =
            is_almost_topological(&z2, &discrete, &FiniteSpace::trivial(2), &[pts(&[0])]).unwrap();
        assert!(!report.holds);
        assert_eq!(report.failure.unwrap().0, AlmostClause::HausdorffGroupRefinement);

        // Base member missing the identity is a clause (iii) diagnostic.
        let report = is_almost_topological(&z2, &discrete, &discrete, &[pts(&[1])]).unwrap();
        assert_eq!(report.failure.unwrap().0, AlmostClause::LocalBase);

        // A too-coarse family is also clause (iii): the open {0} encloses
        // no member. Clause (iv) can never be the first failure on a
        // finite carrier: clause (ii) forces gamma discrete, where every
        // punctured member is open.
        let report = is_almost_topological(&z2, &discrete, &discrete, &[pts(&[0, 1])]).unwrap();
        assert_eq!(report.failure.unwrap().0, AlmostClause::LocalBase);

        assert!(matches!(
            is_almost_topological(&z2, &discrete, &discrete, &[]),
            Err(GroupError::EmptyBase)
        ));
    }

    #[test]
    fn almost_topological_degenerates_to_discrete() {
        // A Hausdorff refinement of a finite topology is discrete, and
        // discrete ⊆ t forces t discrete; so with the only possible gamma
        // the predicate holds exactly for the discrete base.
        for n in [2usize, 3] {
            let g = FiniteGroup::cyclic(n);
            let gamma = FiniteSpace::discrete(n);
            let base = [PointSet::singleton(g.identity())];
            for t in enumerate_topologies(n).unwrap() {
                let report = is_almost_topological(&g, &t, &gamma, &base).unwrap();
                assert_eq!(report.holds, t == FiniteSpace::discrete(n), "{t:?}");
            }
        }
    }

    #[test]
    fn hattori_reproduces_base_and_gamma_in_the_degenerate_case() {
        for n in [2usize, 3, 4] {
            let g = FiniteGroup::cyclic(n);
            let discrete = FiniteSpace::discrete(n);
            let base = [PointSet::singleton(g.identity())];
            let everywhere = PointSet::universe(n);
            for a in [PointSet::EMPTY, everywhere] {
                let built = group_hattori(&g, &discrete, &discrete, &base, a, false).unwrap();
                assert!(built.valid, "{:?}", built.note);
                assert_eq!(built.space, discrete);
            }
        }
    }

    #[test]
    fn hattori_force_path_reports_invalid_systems() {
        let z4 = FiniteGroup::cyclic(4);
        let discrete = FiniteSpace::discrete(4);
        let base = [pts(&[0, 1])];

        // Without force the precondition gate rejects: {0,1} punctured is
        // gamma-open, but {0,1} does not sit inside the open {0}.
        assert!(matches!(
            group_hattori(&z4, &discrete, &discrete, &base, PointSet::EMPTY, false),
            Err(GroupError::PreconditionFailed(_))
        ));

        // Forced: beta(x) = {{x, x+1}}, whose saturated sets are only the
        // whole carrier and the empty set; the enclosing axiom fails.
        let built = group_hattori(&z4, &discrete, &discrete, &base, PointSet::EMPTY, true).unwrap();
        assert!(!built.valid);
        assert_eq!(built.space, FiniteSpace::trivial(4));
        assert!(built.note.unwrap().contains("encloses no neighborhood"));

        // Forced with a = G: beta(x) = {{x, x+1, x+3}}; still invalid.
        let built =
            group_hattori(&z4, &discrete, &discrete, &base, PointSet::universe(4), true).unwrap();
        assert!(!built.valid);
    }
}
