//! Exhaustive enumeration of all labeled topologies on small ground sets,
//! and a registry of theorem checkers swept over them.
//!
//! Topologies are enumerated as minimal-neighborhood vectors, i.e. reflexive
//! transitive relation matrices, by depth-first backtracking with
//! transitivity pruning. The order is deterministic: rows are assigned for
//! point 0 upward, each row ascending by bitmask, so the discrete topology
//! comes first and the trivial one last. Counts per point count: 1, 4, 29,
//! 355, 6942.
//!
//! [`verify`] runs one registered claim against every instance at a given
//! scale and reports the instance count plus any counterexamples, each
//! embedding full spaces so a report line can be independently re-checked.
//! Work is split by enumeration-index ranges across workers; merging is an
//! order-preserving reduce, so reports are identical for every `--jobs`
//! value. [`search_counterexample`] scans the same ground for the first
//! violation of a (generally false or open) implication.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::compat::{
    are_pi_compatible, decompose_open, gdelta_pi_network, is_admissible_extension, is_sub_topology,
    meet, TopologyPair,
};
use crate::ideals::{
    alpha_topology, is_star_admissible, nwd_ideal, star_closure, star_topology, Ideal,
};
use crate::set::PointSet;
use crate::space::FiniteSpace;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("n = {n} out of range: supported range is {min} <= n <= {max}")]
    NOutOfRange { n: usize, min: usize, max: usize },
    #[error("unknown theorem id {0:?} (known: {})", TheoremId::ALL.iter().map(|t| t.id()).collect::<Vec<_>>().join(", "))]
    UnknownTheorem(String),
    #[error("unknown predicate id {0:?} (known: {})", PredicateId::ALL.iter().map(|p| p.id()).collect::<Vec<_>>().join(", "))]
    UnknownPredicate(String),
}

/// Largest ground set the enumerator itself supports.
pub const MAX_ENUMERATION_N: usize = 5;

/// Streams every labeled topology on `{0, .., n-1}` exactly once.
pub fn enumerate_topologies(n: usize) -> Result<TopologyStream, EnumerationError> {
    if n < 1 || n > MAX_ENUMERATION_N {
        return Err(EnumerationError::NOutOfRange { n, min: 1, max: MAX_ENUMERATION_N });
    }
    Ok(TopologyStream { n, rows: Vec::with_capacity(n), exhausted: false })
}

/// Backtracking enumerator state: `rows[x]` is the candidate minimal
/// neighborhood of `x` as a bitmask.
pub struct TopologyStream {
    n: usize,
    rows: Vec<u16>,
    exhausted: bool,
}

impl TopologyStream {
    /// Row `m` is admissible at `level` against the assigned prefix:
    /// reflexive, and transitive both ways against every earlier row.
    fn valid(&self, level: usize, m: u16) -> bool {
        if m & (1 << level) == 0 {
            return false;
        }
        self.rows.iter().enumerate().all(|(q, &row_q)| {
            let m_has_q = m & (1 << q) != 0;
            let q_has_level = row_q & (1 << level) != 0;
            (!m_has_q || row_q & !m == 0) && (!q_has_level || m & !row_q == 0)
        })
    }

    /// Moves `rows` to the next complete valid assignment.
    fn advance(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        let full = PointSet::universe(self.n).bits();
        let (mut level, mut candidate) = if self.rows.is_empty() {
            (0usize, 1u16)
        } else {
            let last = self.rows.pop().unwrap();
            (self.n - 1, last + 1)
        };
        loop {
            match (candidate..=full).find(|&m| self.valid(level, m)) {
                Some(m) => {
                    self.rows.push(m);
                    if self.rows.len() == self.n {
                        return true;
                    }
                    level += 1;
                    candidate = 1 << level;
                }
                None => {
                    if level == 0 {
                        self.exhausted = true;
                        return false;
                    }
                    level -= 1;
                    candidate = self.rows.pop().unwrap() + 1;
                }
            }
        }
    }
}

impl Iterator for TopologyStream {
    type Item = FiniteSpace;

    fn next(&mut self) -> Option<FiniteSpace> {
        if !self.advance() {
            return None;
        }
        let nbhds = self.rows.iter().map(|&m| PointSet::from_bits(m)).collect();
        Some(FiniteSpace::from_min_nbhds(nbhds).expect("enumerator emits valid preorders"))
    }
}

/// Registered claims the harness can sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    /// Pi-compatible topologies have the same nowhere dense and meager sets.
    #[serde(rename = "L33")]
    L33,
    /// A non-empty open set of one of two pi-compatible topologies splits
    /// into a non-empty open set of the other plus a remainder nowhere dense
    /// in both.
    #[serde(rename = "T-DECOMP")]
    TDecomp,
    /// Pi-compatible topologies have the same Baire-property sets.
    #[serde(rename = "C34")]
    C34,
    /// Pi-compatible topologies are Baire spaces together.
    #[serde(rename = "T5A")]
    T5a,
    /// For a pi-compatible pair, the non-empty sets open in both form a
    /// pi-network for each.
    #[serde(rename = "T5B")]
    T5b,
    /// Pi-compatible topologies have the same dense sets and the same
    /// density.
    #[serde(rename = "P-DENSE")]
    PDense,
    /// Componentwise pi-compatible pairs have pi-compatible products.
    #[serde(rename = "P-PROD")]
    PProd,
    /// Every non-empty open set of an admissible extension is semi-open in
    /// the base.
    #[serde(rename = "T-SEMIOPEN")]
    TSemiOpen,
    /// Admissible extensions inherit T0, T1, T2 from the base.
    #[serde(rename = "P-AXIOMS")]
    PAxioms,
    /// Of two admissible extensions of one base, the larger admissibly
    /// extends the smaller.
    #[serde(rename = "P-LATTICE-A")]
    PLatticeA,
    /// Every topology between a base and an admissible extension of it is an
    /// admissible extension of the base.
    #[serde(rename = "P-LATTICE-B")]
    PLatticeB,
    /// On a space without isolated points, the star topology of an ideal is
    /// an admissible extension exactly when every ideal member is nowhere
    /// dense.
    #[serde(rename = "T315")]
    T315,
    /// The star topology of the nowhere-dense ideal is the alpha topology.
    #[serde(rename = "E-ALPHA")]
    EAlpha,
    /// If every singleton is open or nowhere dense, every set has the Baire
    /// property.
    #[serde(rename = "P21-FINITE")]
    P21Finite,
    /// Open question, finite scan: both members of a pi-compatible pair
    /// admissibly extend their meet.
    #[serde(rename = "Q3-FINITE")]
    Q3Finite,
    /// Star closure is a Kuratowski operator; the star topology extends the
    /// base, closes ideal members, is idempotent, and grows with the ideal.
    #[serde(rename = "STAR-PROPS")]
    StarProps,
}

impl TheoremId {
    pub const ALL: [TheoremId; 16] = [
        TheoremId::L33,
        TheoremId::TDecomp,
        TheoremId::C34,
        TheoremId::T5a,
        TheoremId::T5b,
        TheoremId::PDense,
        TheoremId::PProd,
        TheoremId::TSemiOpen,
        TheoremId::PAxioms,
        TheoremId::PLatticeA,
        TheoremId::PLatticeB,
        TheoremId::T315,
        TheoremId::EAlpha,
        TheoremId::P21Finite,
        TheoremId::Q3Finite,
        TheoremId::StarProps,
    ];

    pub fn id(self) -> &'static str {
        match self {
            TheoremId::L33 => "L33",
            TheoremId::TDecomp => "T-DECOMP",
            TheoremId::C34 => "C34",
            TheoremId::T5a => "T5A",
            TheoremId::T5b => "T5B",
            TheoremId::PDense => "P-DENSE",
            TheoremId::PProd => "P-PROD",
            TheoremId::TSemiOpen => "T-SEMIOPEN",
            TheoremId::PAxioms => "P-AXIOMS",
            TheoremId::PLatticeA => "P-LATTICE-A",
            TheoremId::PLatticeB => "P-LATTICE-B",
            TheoremId::T315 => "T315",
            TheoremId::EAlpha => "E-ALPHA",
            TheoremId::P21Finite => "P21-FINITE",
            TheoremId::Q3Finite => "Q3-FINITE",
            TheoremId::StarProps => "STAR-PROPS",
        }
    }

    /// One-line statement of the claim, for help output.
    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::L33 => "pi-compatible topologies share nowhere dense and meager sets",
            TheoremId::TDecomp => {
                "non-empty opens split into a non-empty open of the partner plus a doubly nowhere dense remainder"
            }
            TheoremId::C34 => "pi-compatible topologies share their Baire-property families",
            TheoremId::T5a => "pi-compatible topologies are Baire together",
            TheoremId::T5b => "sets open in both members of a pi-compatible pair form a pi-network for each",
            TheoremId::PDense => "pi-compatible topologies share dense sets and density",
            TheoremId::PProd => "products of pi-compatible pairs are pi-compatible",
            TheoremId::TSemiOpen => "opens of an admissible extension are semi-open in the base",
            TheoremId::PAxioms => "admissible extensions inherit T0/T1/T2 from the base",
            TheoremId::PLatticeA => "the larger of two admissible extensions admissibly extends the smaller",
            TheoremId::PLatticeB => "topologies between a base and an admissible extension are admissible extensions",
            TheoremId::T315 => {
                "without isolated points, star topologies are admissible exactly for ideals of nowhere dense sets"
            }
            TheoremId::EAlpha => "the star topology of the nowhere-dense ideal is the alpha topology",
            TheoremId::P21Finite => "singletons all open-or-nowhere-dense force the full Baire-property family",
            TheoremId::Q3Finite => "open question: pi-compatible pairs admissibly extend their meet",
            TheoremId::StarProps => "star closure and star topology structural laws",
        }
    }

    /// Open questions get "no finite counterexample" wording, never
    /// "verified".
    pub fn is_open_question(self) -> bool {
        matches!(self, TheoremId::Q3Finite)
    }

    /// Largest supported scale. Pair-quantified claims stop at 4 (355^2
    /// ordered pairs), triple-quantified at 3, per-space claims at 5.
    pub fn max_n(self) -> usize {
        match self {
            TheoremId::L33
            | TheoremId::TDecomp
            | TheoremId::C34
            | TheoremId::T5a
            | TheoremId::T5b
            | TheoremId::PDense
            | TheoremId::TSemiOpen
            | TheoremId::PAxioms
            | TheoremId::Q3Finite => 4,
            TheoremId::PLatticeA | TheoremId::PLatticeB | TheoremId::PProd => 3,
            TheoremId::T315 | TheoremId::EAlpha | TheoremId::P21Finite => MAX_ENUMERATION_N,
            TheoremId::StarProps => 4,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for TheoremId {
    type Err = EnumerationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|t| t.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| EnumerationError::UnknownTheorem(s.to_string()))
    }
}

/// A violating instance: the spaces and sets it is built from, plus a short
/// explanation. Spaces embed in full so the line can be re-checked alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub spaces: Vec<FiniteSpace>,
    pub sets: Vec<PointSet>,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub theorem: TheoremId,
    pub n: usize,
    pub instances: u64,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_ms: u64,
    pub verdict: String,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

fn verdict_for(theorem: TheoremId, n: usize, clean: bool) -> String {
    if !clean {
        format!("counterexample found at scale n={n}")
    } else if theorem.is_open_question() {
        format!("no finite counterexample at scale n={n}")
    } else {
        format!("verified at scale n={n}")
    }
}

/// Sweeps `theorem` over every instance on `n` points.
///
/// `jobs` is the worker count; every value produces the identical report
/// (instances, counterexamples, and their order), only `elapsed_ms` varies.
pub fn verify(theorem: TheoremId, n: usize, jobs: usize) -> Result<VerifyReport, EnumerationError> {
    if n < 1 || n > theorem.max_n() {
        return Err(EnumerationError::NOutOfRange { n, min: 1, max: theorem.max_n() });
    }
    let started = Instant::now();
    let spaces: Vec<FiniteSpace> = enumerate_topologies(n)?.collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool construction");
    let (instances, counterexamples) = pool.install(|| dispatch(theorem, &spaces, n));
    let clean = counterexamples.is_empty();
    Ok(VerifyReport {
        theorem,
        n,
        instances,
        counterexamples,
        elapsed_ms: started.elapsed().as_millis() as u64,
        verdict: verdict_for(theorem, n, clean),
    })
}

fn dispatch(theorem: TheoremId, spaces: &[FiniteSpace], n: usize) -> (u64, Vec<Counterexample>) {
    match theorem {
        TheoremId::L33 => check_l33(spaces, n),
        TheoremId::TDecomp => check_decomp(spaces),
        TheoremId::C34 => check_c34(spaces, n),
        TheoremId::T5a => check_t5a(spaces),
        TheoremId::T5b => check_t5b(spaces),
        TheoremId::PDense => check_p_dense(spaces, n),
        TheoremId::PProd => check_p_prod(spaces),
        TheoremId::TSemiOpen => check_t_semiopen(spaces),
        TheoremId::PAxioms => check_p_axioms(spaces),
        TheoremId::PLatticeA => check_p_lattice_a(spaces),
        TheoremId::PLatticeB => check_p_lattice_b(spaces),
        TheoremId::T315 => check_t315(spaces),
        TheoremId::EAlpha => check_e_alpha(spaces),
        TheoremId::P21Finite => check_p21(spaces, n),
        TheoremId::Q3Finite => check_q3(spaces),
        TheoremId::StarProps => check_star_props(spaces, n),
    }
}

/// Parallel sweep over the outer index; the fold preserves enumeration
/// order, which keeps reports deterministic under any worker count.
fn sweep<F>(len: usize, per_outer: F) -> (u64, Vec<Counterexample>)
where
    F: Fn(usize) -> (u64, Vec<Counterexample>) + Sync + Send,
{
    (0..len).into_par_iter().map(per_outer).collect::<Vec<_>>().into_iter().fold(
        (0, Vec::new()),
        |(inst, mut ces), (i, mut c)| {
            ces.append(&mut c);
            (inst + i, ces)
        },
    )
}

/// Characteristic mask over all `2^n` subsets: bit `k` is set when
/// `pred(subset k)` holds.
fn subset_mask(n: usize, pred: impl Fn(PointSet) -> bool) -> u32 {
    let mut mask = 0u32;
    for (k, a) in PointSet::subsets_of(n).enumerate() {
        if pred(a) {
            mask |= 1 << k;
        }
    }
    mask
}

fn first_diff(n: usize, lhs: u32, rhs: u32) -> PointSet {
    let k = (lhs ^ rhs).trailing_zeros() as usize;
    debug_assert!(k < 1 << n);
    PointSet::from_bits(k as u16)
}

fn pi_compatible_matrix(spaces: &[FiniteSpace]) -> Vec<Vec<bool>> {
    spaces
        .par_iter()
        .map(|a| {
            spaces.iter().map(|b| are_pi_compatible(a, b).expect("uniform ground set")).collect()
        })
        .collect()
}

fn check_l33(spaces: &[FiniteSpace], n: usize) -> (u64, Vec<Counterexample>) {
    let nwd: Vec<u32> = spaces.iter().map(|s| subset_mask(n, |a| s.is_nowhere_dense(a))).collect();
    let meager: Vec<u32> = spaces.iter().map(|s| subset_mask(n, |a| s.is_meager(a))).collect();
    sweep(spaces.len(), |i| {
        let mut instances = 0;
        let mut ces = Vec::new();
        for j in 0..spaces.len() {
            if !are_pi_compatible(&spaces[i], &spaces[j]).unwrap() {
                continue;
            }
            instances += 1;
            if nwd[i] != nwd[j] {
                let a = first_diff(n, nwd[i], nwd[j]);
                ces.push(Counterexample {
                    spaces: vec![spaces[i].clone(), spaces[j].clone()],
                    sets: vec![a],
                    note: format!("nowhere dense families differ at {a}"),
                });
            } else if meager[i] != meager[j] {
                let a = first_diff(n, meager[i], meager[j]);
                ces.push(Counterexample {
                    spaces: vec![spaces[i].clone(), spaces[j].clone()],
                    sets: vec![a],
                    note: format!("meager families differ at {a}"),
                });
            }
        }
        (instances, ces)
    })
}

fn check_decomp(spaces: &[FiniteSpace]) -> (u64, Vec<Counterexample>) {
    sweep(spaces.len(), |i| {
        let tau = &spaces[i];
        let mut instances = 0;
        let mut ces = Vec::new();
        for sigma in spaces {
            if !are_pi_compatible(tau, sigma).unwrap() {
                continue;
            }
            instances += 1;
            let pair = TopologyPair::new(tau.clone(), sigma.clone()).unwrap();
            for o in tau.opens() {
                if o.is_empty() {
                    continue;
                }
                let d = decompose_open(&pair, o).expect("preconditions established");
                let ok = !d.open_part.is_empty()
                    && sigma.is_open(d.open_part)
                    && d.open_part.union(d.nwd_part) == o
                    && d.open_part.intersect(d.nwd_part).is_empty()
                    && tau.is_nowhere_dense(d.nwd_part)
                    && sigma.is_nowhere_dense(d.nwd_part);
                if !ok {
                    ces.push(Counterexample {
                        spaces: vec![tau.clone(), sigma.clone()],
                        sets: vec![o, d.open_part, d.nwd_part],
                        note: format!(
                            "open set {o} did not split into a non-empty partner-open part and a doubly nowhere dense part"
                        ),
                    });
                }
            }
        }
        (instances, ces)
    })
}

fn check_c34(spaces: &[FiniteSpace], n: usize) -> (u64, Vec<Counterexample>) {
    let bp: Vec<u32> =
        spaces.par_iter().map(|s| subset_mask(n, |a| s.has_baire_property(a))).collect();
    sweep(spaces.len(), |i| {
        let mut instances = 0;
        let mut ces = Vec::new();
        for j in 0..spaces.len() {
            if !are_pi_compatible(&spaces[i], &spaces[j]).unwrap() {
                continue;
            }
            instances += 1;
            if bp[i] != bp[j] {
                let a = first_diff(n, bp[i], bp[j]);
                ces.push(Counterexample {
                    spaces: vec![spaces[i].clone(), spaces[j].clone()],
                    sets: vec![a],
                    note: format!("Baire-property families differ at {a}"),
                });
            }
        }
        (instances, ces)
    })
}

fn check_t5a(spaces: &[FiniteSpace]) -> (u64, Vec<Counterexample>) {
    let baire: Vec<bool> = spaces.iter().map(|s| s.is_baire_space()).collect();
    sweep(spaces.len(), |i| {
        let mut instances = 0;
        let mut ces = Vec::new();
        for j in 0..spaces.len() {
            if !are_pi_compatible(&spaces[i], &spaces[j]).unwrap() {
                continue;
            }
            instances += 1;
            if baire[i] != baire[j] {
                ces.push(Counterexample {
                    spaces: vec![spaces[i].clone(), spaces[j].clone()],
                    sets: vec![],
                    note: "exactly one of the pair is a Baire space".into(),
                });
            }
        }
        (instances, ces)
    })
}

fn check_t5b(spaces: &[FiniteSpace]) -> (u64, Vec<Counterexample>) {
    sweep(spaces.len(), |i| {
        let mut instances = 0;
        let mut ces = Vec::new();
        for j in 0..spaces.len() {
            if !are_pi_compatible(&spaces[i], &spaces[j]).unwrap() {
                continue;
            }
            instances += 1;
            let pair = TopologyPair::new(spaces[i].clone(), spaces[j].clone()).unwrap();
            if !gdelta_pi_network(&pair).expect("pair is pi-compatible") {
                ces.push(Counterexample {
                    spaces: vec![spaces[i].clone(), spaces[j].clone()],
                    sets: vec![],
                    note: "sets open in both do not form a pi-network for the pair".into(),
                });
            }
        }
        (instances, ces)
    })
}

fn check_p_dense(spaces: &[FiniteSpace], n: usize) -> (u64, Vec<Counterexample>) {
    let dense: Vec<u32> = spaces.iter().map(|s| subset_mask(n, |a| s.is_dense(a))).collect();
    let density: Vec<usize> = spaces.iter().map(|s| s.density()).collect();
    sweep(spaces.len(), |i| {
        let mut instances = 0;
        let mut ces = Vec::new();
        for j in 0..spaces.len() {
            if !are_pi_compatible(&spaces[i], &spaces[j]).unwrap() {
                continue;
            }
            instances += 1;
            if dense[i] & !dense[j] != 0 {
                let a = first_diff(n, dense[i] & !dense[j], 0);
                ces.push(Counterexample {
                    spaces: vec![spaces[i].clone(), spaces[j].clone()],
                    sets: vec![a],
                    note: format!("{a} is dense in the first topology but not the second"),
                });
            } else if density[i] != density[j] {
                ces.push(Counterexample {
                    spaces: vec![spaces[i].clone(), spaces[j].clone()],
                    sets: vec![],
                    note: format!("densities differ: {} vs {}", density[i], density[j]),
                });
            }
        }
        (instances, ces)
    })
}

fn check_p_prod(spaces: &[FiniteSpace]) -> (u64, Vec<Counterexample>) {
    let compatible = pi_compatible_matrix(spaces);
    let mut pairs = Vec::new();
    for i in 0..spaces.len() {
        for j in 0..spaces.len() {
            if compatible[i][j] {
                pairs.push((i, j));
            }
        }
    }
    sweep(pairs.len(), |p| {
        let (i1, j1) = pairs[p];
        let mut instances = 0;
        let mut ces = Vec::new();
        for &(i2, j2) in &pairs {
            instances += 1;
            let left = spaces[i1].product(&spaces[i2]).expect("component sizes bounded");
            let right = spaces[j1].product(&spaces[j2]).expect("component sizes bounded");
            if !are_pi_compatible(&left, &right).unwrap() {
                ces.push(Counterexample {
                    spaces: vec![
                        spaces[i1].clone(),
                        spaces[j1].clone(),
                        spaces[i2].clone(),
                        spaces[j2].clone(),
                    ],
                    sets: vec![],
                    note: "product of pi-compatible pairs is not pi-compatible".into(),
                });
            }
        }
        (instances, ces)
    })
}

fn check_t_semiopen(spaces: &[FiniteSpace]) -> (u64, Vec<Counterexample>) {
    sweep(spaces.len(), |i| {
        let base = &spaces[i];
        let mut instances = 0;
        let mut ces = Vec::new();
        for ext in spaces {
            if !is_admissible_extension(base, ext).unwrap() {
                continue;
            }
            instances += 1;
            for o in ext.opens() {
                if !o.is_empty() && !base.is_semi_open(o) {
                    ces.push(Counterexample {
                        spaces: vec![base.clone(), ext.clone()],
                        sets: vec![o],
                        note: format!("extension-open {o} is not semi-open in the base"),
                    });
                }
            }
        }
        (instances, ces)
    })
}

fn check_p_axioms(spaces: &[FiniteSpace]) -> (u64, Vec<Counterexample>) {
    let sep: Vec<_> = spaces.iter().map(|s| s.separation()).collect();
    sweep(spaces.len(), |i| {
        let mut instances = 0;
        let mut ces = Vec::new();
        for j in 0..spaces.len() {
            if !is_admissible_extension(&spaces[i], &spaces[j]).unwrap() {
                continue;
            }
            instances += 1;
            let lost = [
                (sep[i].t0, sep[j].t0, "T0"),
                (sep[i].t1, sep[j].t1, "T1"),
                (sep[i].t2, sep[j].t2, "T2"),
            ]
            .into_iter()
            .find(|&(base_has, ext_has, _)| base_has && !ext_has);
            if let Some((_, _, axiom)) = lost {
                ces.push(Counterexample {
                    spaces: vec![spaces[i].clone(), spaces[j].clone()],
                    sets: vec![],
                    note: format!("base is {axiom} but the admissible extension is not"),
                });
            }
        }
        (instances, ces)
    })
}

fn admissible_matrix(spaces: &[FiniteSpace]) -> Vec<Vec<bool>> {
    spaces
        .par_iter()
        .map(|a| {
            spaces
                .iter()
                .map(|b| is_admissible_extension(a, b).expect("uniform ground set"))
                .collect()
        })
        .collect()
}

fn sub_topology_matrix(spaces: &[FiniteSpace]) -> Vec<Vec<bool>> {
    spaces
        .iter()
        .map(|a| {
            spaces.iter().map(|b| is_sub_topology(a, b).expect("uniform ground set")).collect()
        })
        .collect()
}

fn check_p_lattice_a(spaces: &[FiniteSpace]) -> (u64, Vec<Counterexample>) {
    let adm = admissible_matrix(spaces);
    let sub = sub_topology_matrix(spaces);
    sweep(spaces.len(), |t| {
        let mut instances = 0;
        let mut ces = Vec::new();
        for s in 0..spaces.len() {
            if !adm[t][s] {
                continue;
            }
            for v in 0..spaces.len() {
                if !(adm[t][v] && sub[s][v]) {
                    continue;
                }
                instances += 1;
                if !adm[s][v] {
                    ces.push(Counterexample {
                        spaces: vec![spaces[t].clone(), spaces[s].clone(), spaces[v].clone()],
                        sets: vec![],
                        note: "larger admissible extension does not admissibly extend the smaller"
                            .into(),
                    });
                }
            }
        }
        (instances, ces)
    })
}

fn check_p_lattice_b(spaces: &[FiniteSpace]) -> (u64, Vec<Counterexample>) {
    let adm = admissible_matrix(spaces);
    let sub = sub_topology_matrix(spaces);
    sweep(spaces.len(), |t| {
        let mut instances = 0;
        let mut ces = Vec::new();
        for s in 0..spaces.len() {
            if !sub[t][s] {
                continue;
            }
            for v in 0..spaces.len() {
                if !(sub[s][v] && adm[t][v]) {
                    continue;
                }
                instances += 1;
                if !adm[t][s] {
                    ces.push(Counterexample {
                        spaces: vec![spaces[t].clone(), spaces[s].clone(), spaces[v].clone()],
                        sets: vec![],
                        note: "intermediate topology is not an admissible extension of the base"
                            .into(),
                    });
                }
            }
        }
        (instances, ces)
    })
}

fn check_t315(spaces: &[FiniteSpace]) -> (u64, Vec<Counterexample>) {
    sweep(spaces.len(), |i| {
        let s = &spaces[i];
        if !s.isolated_points().is_empty() {
            return (0, Vec::new());
        }
        let nwd_gen = nwd_ideal(s).generator();
        let mut instances = 0;
        let mut ces = Vec::new();
        for b in s.subsets() {
            instances += 1;
            let outcome = is_star_admissible(s, &Ideal::new(b)).expect("ideal within ground set");
            let expected = b.is_subset(nwd_gen);
            if outcome.admissible != expected {
                ces.push(Counterexample {
                    spaces: vec![s.clone()],
                    sets: vec![b],
                    note: format!(
                        "star admissibility is {} but the generator {b} {} nowhere dense",
                        outcome.admissible,
                        if expected { "is" } else { "is not" }
                    ),
                });
            }
        }
        (instances, ces)
    })
}

fn check_e_alpha(spaces: &[FiniteSpace]) -> (u64, Vec<Counterexample>) {
    sweep(spaces.len(), |i| {
        let s = &spaces[i];
        let star = star_topology(s, &nwd_ideal(s)).expect("ideal within ground set");
        let alpha = alpha_topology(s);
        let ces = if star == alpha {
            Vec::new()
        } else {
            vec![Counterexample {
                spaces: vec![s.clone(), star, alpha],
                sets: vec![],
                note: "star topology of the nowhere-dense ideal differs from the alpha topology"
                    .into(),
            }]
        };
        (1, ces)
    })
}

fn check_p21(spaces: &[FiniteSpace], n: usize) -> (u64, Vec<Counterexample>) {
    sweep(spaces.len(), |i| {
        let s = &spaces[i];
        let hypothesis = (0..n).all(|x| {
            let single = PointSet::singleton(x);
            s.is_open(single) || s.is_nowhere_dense(single)
        });
        if !hypothesis {
            return (0, Vec::new());
        }
        let mut ces = Vec::new();
        if let Some(a) = s.subsets().find(|&a| !s.has_baire_property(a)) {
            ces.push(Counterexample {
                spaces: vec![s.clone()],
                sets: vec![a],
                note: format!(
                    "{a} lacks the Baire property despite open-or-nowhere-dense singletons"
                ),
            });
        }
        (1, ces)
    })
}

fn check_q3(spaces: &[FiniteSpace]) -> (u64, Vec<Counterexample>) {
    sweep(spaces.len(), |i| {
        let tau = &spaces[i];
        let mut instances = 0;
        let mut ces = Vec::new();
        for sigma in spaces {
            if !are_pi_compatible(tau, sigma).unwrap() {
                continue;
            }
            instances += 1;
            let common = meet(tau, sigma).unwrap();
            let to_tau = is_admissible_extension(&common, tau).unwrap();
            let to_sigma = is_admissible_extension(&common, sigma).unwrap();
            if !(to_tau && to_sigma) {
                ces.push(Counterexample {
                    spaces: vec![tau.clone(), sigma.clone(), common],
                    sets: vec![],
                    note: "a pi-compatible topology fails to admissibly extend the meet".into(),
                });
            }
        }
        (instances, ces)
    })
}

fn check_star_props(spaces: &[FiniteSpace], n: usize) -> (u64, Vec<Counterexample>) {
    sweep(spaces.len(), |i| {
        let s = &spaces[i];
        // All stars of this space, indexed by generator bits.
        let stars: Vec<FiniteSpace> =
            PointSet::subsets_of(n).map(|b| star_topology(s, &Ideal::new(b)).unwrap()).collect();
        let mut instances = 0;
        let mut ces = Vec::new();
        let mut fail = |sets: Vec<PointSet>, note: String| {
            ces.push(Counterexample { spaces: vec![s.clone()], sets, note });
        };
        for (bi, b) in PointSet::subsets_of(n).enumerate() {
            instances += 1;
            let ideal = Ideal::new(b);
            let cl = |a: PointSet| star_closure(s, &ideal, a).unwrap();
            if !cl(PointSet::EMPTY).is_empty() {
                fail(vec![b], "star closure of the empty set is non-empty".into());
            }
            for a in s.subsets() {
                let ca = cl(a);
                if !a.is_subset(ca) {
                    fail(vec![b, a], format!("star closure does not contain {a}"));
                }
                if cl(ca) != ca {
                    fail(vec![b, a], format!("star closure is not idempotent at {a}"));
                }
                for c in s.subsets() {
                    if cl(a.union(c)) != ca.union(cl(c)) {
                        fail(vec![b, a, c], "star closure is not additive".into());
                    }
                }
            }
            let star = &stars[bi];
            if !is_sub_topology(s, star).unwrap() {
                fail(vec![b], "star topology does not contain the base topology".into());
            }
            if let Some(m) = s.subsets().find(|&m| ideal.contains(m) && !star.is_closed(m)) {
                fail(vec![b, m], format!("ideal member {m} is not star-closed"));
            }
            if star_topology(star, &ideal).unwrap() != *star {
                fail(vec![b], "starring twice with one ideal is not idempotent".into());
            }
            for (b2i, b2) in PointSet::subsets_of(n).enumerate() {
                if b.is_subset(b2) && !is_sub_topology(star, &stars[b2i]).unwrap() {
                    fail(vec![b, b2], "star topology does not grow with the ideal".into());
                }
            }
        }
        (instances, ces)
    })
}

/// Implications hunted by [`search_counterexample`]. These are conjectures
/// expected to fail (or open questions); the searcher returns the first
/// violating instance in enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PredicateId {
    /// Same as the Q3-FINITE sweep, but stops at the first violation.
    Q3Finite,
    /// Equal nowhere-dense families force equal Baire-property families.
    EqualNwdImpliesEqualBaire,
    /// Equal Baire-property families force pi-compatibility.
    BaireEqualityImpliesPiCompatible,
    /// A T0 admissible extension forces a T0 base.
    T0ExtensionImpliesT0Base,
}

impl PredicateId {
    pub const ALL: [PredicateId; 4] = [
        PredicateId::Q3Finite,
        PredicateId::EqualNwdImpliesEqualBaire,
        PredicateId::BaireEqualityImpliesPiCompatible,
        PredicateId::T0ExtensionImpliesT0Base,
    ];

    pub fn id(self) -> &'static str {
        match self {
            PredicateId::Q3Finite => "q3-finite",
            PredicateId::EqualNwdImpliesEqualBaire => "equal-nwd-implies-equal-baire",
            PredicateId::BaireEqualityImpliesPiCompatible => "baire-equality-implies-pi-compatible",
            PredicateId::T0ExtensionImpliesT0Base => "t0-extension-implies-t0-base",
        }
    }
}

impl fmt::Display for PredicateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for PredicateId {
    type Err = EnumerationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PredicateId::ALL
            .iter()
            .copied()
            .find(|p| p.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| EnumerationError::UnknownPredicate(s.to_string()))
    }
}

/// Scans all ordered pairs on `n` points in enumeration order and returns
/// the first instance violating the predicate, if any.
pub fn search_counterexample(
    predicate: PredicateId,
    n: usize,
) -> Result<Option<Counterexample>, EnumerationError> {
    if n < 1 || n > 4 {
        return Err(EnumerationError::NOutOfRange { n, min: 1, max: 4 });
    }
    let spaces: Vec<FiniteSpace> = enumerate_topologies(n)?.collect();
    let nwd: Vec<u32> = spaces.iter().map(|s| subset_mask(n, |a| s.is_nowhere_dense(a))).collect();
    let bp: Vec<u32> = spaces.iter().map(|s| subset_mask(n, |a| s.has_baire_property(a))).collect();
    for i in 0..spaces.len() {
        for j in 0..spaces.len() {
            let found = match predicate {
                PredicateId::Q3Finite => {
                    if !are_pi_compatible(&spaces[i], &spaces[j]).unwrap() {
                        None
                    } else {
                        let common = meet(&spaces[i], &spaces[j]).unwrap();
                        if is_admissible_extension(&common, &spaces[i]).unwrap()
                            && is_admissible_extension(&common, &spaces[j]).unwrap()
                        {
                            None
                        } else {
                            Some(Counterexample {
                                spaces: vec![spaces[i].clone(), spaces[j].clone(), common],
                                sets: vec![],
                                note: "pi-compatible pair does not admissibly extend its meet"
                                    .into(),
                            })
                        }
                    }
                }
                PredicateId::EqualNwdImpliesEqualBaire => {
                    if nwd[i] == nwd[j] && bp[i] != bp[j] {
                        let a = first_diff(n, bp[i], bp[j]);
                        Some(Counterexample {
                            spaces: vec![spaces[i].clone(), spaces[j].clone()],
                            sets: vec![a],
                            note: format!(
                                "equal nowhere dense families, but Baire-property families differ at {a}"
                            ),
                        })
                    } else {
                        None
                    }
                }
                PredicateId::BaireEqualityImpliesPiCompatible => {
                    if bp[i] == bp[j] && !are_pi_compatible(&spaces[i], &spaces[j]).unwrap() {
                        Some(Counterexample {
                            spaces: vec![spaces[i].clone(), spaces[j].clone()],
                            sets: vec![],
                            note: "equal Baire-property families, but not pi-compatible".into(),
                        })
                    } else {
                        None
                    }
                }
                PredicateId::T0ExtensionImpliesT0Base => {
                    if is_admissible_extension(&spaces[i], &spaces[j]).unwrap()
                        && spaces[j].separation().t0
                        && !spaces[i].separation().t0
                    {
                        Some(Counterexample {
                            spaces: vec![spaces[i].clone(), spaces[j].clone()],
                            sets: vec![],
                            note: "admissible extension is T0 while its base is not".into(),
                        })
                    } else {
                        None
                    }
                }
            };
            if found.is_some() {
                return Ok(found);
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    /// Brute-force oracle: count reflexive relation matrices on `n` points
    /// that are transitive, trying all `2^(n(n-1))` off-diagonal patterns.
    fn count_preorders_oracle(n: usize) -> u64 {
        let off_diagonal: Vec<(usize, usize)> =
            (0..n).flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y))).collect();
        let mut count = 0;
        for pattern in 0u32..1 << off_diagonal.len() {
            let mut rows = vec![0u16; n];
            for (x, row) in rows.iter_mut().enumerate() {
                *row |= 1 << x;
            }
            for (bit, &(x, y)) in off_diagonal.iter().enumerate() {
                if pattern & (1 << bit) != 0 {
                    rows[x] |= 1 << y;
                }
            }
            let transitive =
                (0..n).all(|x| (0..n).all(|y| rows[x] & (1 << y) == 0 || rows[y] & !rows[x] == 0));
            if transitive {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn counts_match_relation_matrix_oracle() {
        for n in 1..=4 {
            let enumerated = enumerate_topologies(n).unwrap().count() as u64;
            assert_eq!(enumerated, count_preorders_oracle(n), "n={n}");
        }
        assert_eq!(enumerate_topologies(1).unwrap().count(), 1);
        assert_eq!(enumerate_topologies(2).unwrap().count(), 4);
        assert_eq!(enumerate_topologies(3).unwrap().count(), 29);
        assert_eq!(enumerate_topologies(4).unwrap().count(), 355);
    }

    #[test]
    fn enumeration_is_duplicate_free_and_starts_discrete() {
        for n in 1..=4 {
            let all: Vec<FiniteSpace> = enumerate_topologies(n).unwrap().collect();
            let distinct: BTreeSet<Vec<u16>> =
                all.iter().map(|s| s.min_nbhds().iter().map(|p| p.bits()).collect()).collect();
            assert_eq!(distinct.len(), all.len(), "duplicates at n={n}");
            assert_eq!(all[0], FiniteSpace::discrete(n));
            assert_eq!(all[all.len() - 1], FiniteSpace::trivial(n));
        }
    }

    #[test]
    fn five_point_count() {
        assert_eq!(enumerate_topologies(5).unwrap().count(), 6942);
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(matches!(enumerate_topologies(0), Err(EnumerationError::NOutOfRange { .. })));
        assert!(matches!(enumerate_topologies(6), Err(EnumerationError::NOutOfRange { .. })));
        assert!(matches!(
            verify(TheoremId::L33, 5, 1),
            Err(EnumerationError::NOutOfRange { n: 5, min: 1, max: 4 })
        ));
        assert!(matches!(
            verify(TheoremId::PLatticeA, 4, 1),
            Err(EnumerationError::NOutOfRange { .. })
        ));
    }

    #[test]
    fn theorem_ids_roundtrip() {
        for t in TheoremId::ALL {
            assert_eq!(TheoremId::from_str(t.id()).unwrap(), t);
            assert_eq!(TheoremId::from_str(&t.id().to_lowercase()).unwrap(), t);
            let js = serde_json::to_string(&t).unwrap();
            assert_eq!(js, format!("\"{}\"", t.id()));
        }
        assert!(matches!(TheoremId::from_str("NOPE"), Err(EnumerationError::UnknownTheorem(_))));
        assert!(matches!(
            PredicateId::from_str("nope"),
            Err(EnumerationError::UnknownPredicate(_))
        ));
    }

    #[test]
    fn small_scale_registry_sweep_is_clean() {
        // Every registered claim passes at its smallest interesting scale.
        for theorem in TheoremId::ALL {
            let n = 2.min(theorem.max_n());
            let report = verify(theorem, n, 1).unwrap();
            assert!(report.passed(), "{theorem} failed at n={n}: {report:?}");
        }
    }

    #[test]
    fn verify_reports_are_deterministic_across_jobs() {
        for theorem in [TheoremId::L33, TheoremId::T5b, TheoremId::EAlpha, TheoremId::StarProps] {
            let a = verify(theorem, 3, 1).unwrap();
            let b = verify(theorem, 3, 4).unwrap();
            assert_eq!(a.instances, b.instances);
            assert_eq!(a.counterexamples, b.counterexamples);
            assert_eq!(a.verdict, b.verdict);
        }
    }

    #[test]
    fn verdict_wording() {
        let q3 = verify(TheoremId::Q3Finite, 2, 1).unwrap();
        assert_eq!(q3.verdict, "no finite counterexample at scale n=2");
        let l33 = verify(TheoremId::L33, 2, 1).unwrap();
        assert_eq!(l33.verdict, "verified at scale n=2");
    }

    #[test]
    fn instance_counts_frozen() {
        // All four topologies on two points are pi-compatible only with
        // themselves, so pair-quantified claims see 4 instances and the
        // product claim sees 16 pairs of pairs.
        assert_eq!(verify(TheoremId::L33, 2, 1).unwrap().instances, 4);
        assert_eq!(verify(TheoremId::PProd, 2, 1).unwrap().instances, 16);
        // Only the trivial topology on two points lacks isolated points.
        assert_eq!(verify(TheoremId::T315, 2, 1).unwrap().instances, 4);
        assert_eq!(verify(TheoremId::EAlpha, 3, 1).unwrap().instances, 29);
        assert_eq!(verify(TheoremId::StarProps, 2, 1).unwrap().instances, 16);
    }

    #[test]
    fn search_finds_expected_witnesses() {
        // Open question: no violation at small scale.
        assert_eq!(search_counterexample(PredicateId::Q3Finite, 3).unwrap(), None);

        // Equal nowhere-dense families do not force equal Baire families:
        // discrete vs a non-discrete partition topology.
        let w = search_counterexample(PredicateId::EqualNwdImpliesEqualBaire, 4)
            .unwrap()
            .expect("witness exists at n=4");
        let (a, b) = (&w.spaces[0], &w.spaces[1]);
        let nwd_a: Vec<bool> = a.subsets().map(|s| a.is_nowhere_dense(s)).collect();
        let nwd_b: Vec<bool> = b.subsets().map(|s| b.is_nowhere_dense(s)).collect();
        assert_eq!(nwd_a, nwd_b);
        assert_ne!(a.baire_family(), b.baire_family());
        assert_eq!(*a, FiniteSpace::discrete(4));

        // Equal Baire families do not force pi-compatibility.
        let w = search_counterexample(PredicateId::BaireEqualityImpliesPiCompatible, 2)
            .unwrap()
            .expect("witness exists at n=2");
        assert_eq!(w.spaces[0].baire_family(), w.spaces[1].baire_family());
        assert!(!are_pi_compatible(&w.spaces[0], &w.spaces[1]).unwrap());

        // T0 does not descend from an admissible extension to its base.
        let w = search_counterexample(PredicateId::T0ExtensionImpliesT0Base, 3)
            .unwrap()
            .expect("witness exists at n=3");
        assert!(is_admissible_extension(&w.spaces[0], &w.spaces[1]).unwrap());
        assert!(w.spaces[1].separation().t0);
        assert!(!w.spaces[0].separation().t0);
    }
}
