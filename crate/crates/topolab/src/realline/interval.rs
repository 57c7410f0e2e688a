//! Exact interval sets on the rational line.
//!
//! An [`IntervalSet`] is a finite union of pieces with rational endpoints
//! (or infinite sentinels), kept in canonical form: pieces sorted by lower
//! bound, pairwise disjoint, and never touching in a mergeable way — `[0,1)`
//! followed by `[1,2)` is stored as `[0,2)`. Degenerate closed intervals
//! normalize to points, empty pieces are rejected at the boundary. Equality
//! of canonical forms is therefore set equality, which is what makes the
//! topology operators in this module decidable with no tolerances.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Zero};
use thiserror::Error;

/// Exact rational scalar used for every endpoint.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

pub fn rat_frac(numer: i64, denom: i64) -> Rat {
    Rat::new(numer.into(), denom.into())
}

pub fn parse_rat(s: &str) -> Result<Rat, RealLineError> {
    let bad = || RealLineError::BadRational(s.to_string());
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Rat::new(n, d))
    } else {
        let n: BigInt = s.parse().map_err(|_| bad())?;
        Ok(Rat::from_integer(n))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RealLineError {
    #[error("cannot parse rational {0:?}")]
    BadRational(String),
    #[error("cannot parse interval set: {0}")]
    BadSet(String),
    #[error("cannot parse topology {0:?}: expected E, S, US, or H:<interval-set>")]
    BadTopology(String),
    #[error("no order between the upper-limit topology and H:{0} is defined here")]
    UnsupportedPair(IntervalSet),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LowerBound {
    NegInf,
    Incl(Rat),
    Excl(Rat),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum UpperBound {
    Incl(Rat),
    Excl(Rat),
    PosInf,
}

impl LowerBound {
    pub fn value(&self) -> Option<&Rat> {
        match self {
            LowerBound::NegInf => None,
            LowerBound::Incl(v) | LowerBound::Excl(v) => Some(v),
        }
    }

    fn covers(&self, x: &Rat) -> bool {
        match self {
            LowerBound::NegInf => true,
            LowerBound::Incl(v) => x >= v,
            LowerBound::Excl(v) => x > v,
        }
    }
}

impl UpperBound {
    pub fn value(&self) -> Option<&Rat> {
        match self {
            UpperBound::PosInf => None,
            UpperBound::Incl(v) | UpperBound::Excl(v) => Some(v),
        }
    }

    fn covers(&self, x: &Rat) -> bool {
        match self {
            UpperBound::PosInf => true,
            UpperBound::Incl(v) => x <= v,
            UpperBound::Excl(v) => x < v,
        }
    }
}

// Total orders on bounds, by where the covered region starts/ends: an
// inclusive lower bound starts earlier than the exclusive one at the same
// value, an exclusive upper bound ends earlier than the inclusive one.
impl Ord for LowerBound {
    fn cmp(&self, other: &Self) -> Ordering {
        use LowerBound::*;
        match (self, other) {
            (NegInf, NegInf) => Ordering::Equal,
            (NegInf, _) => Ordering::Less,
            (_, NegInf) => Ordering::Greater,
            (Incl(a), Incl(b)) | (Excl(a), Excl(b)) => a.cmp(b),
            (Incl(a), Excl(b)) => a.cmp(b).then(Ordering::Less),
            (Excl(a), Incl(b)) => a.cmp(b).then(Ordering::Greater),
        }
    }
}

impl PartialOrd for LowerBound {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for UpperBound {
    fn cmp(&self, other: &Self) -> Ordering {
        use UpperBound::*;
        match (self, other) {
            (PosInf, PosInf) => Ordering::Equal,
            (PosInf, _) => Ordering::Greater,
            (_, PosInf) => Ordering::Less,
            (Incl(a), Incl(b)) | (Excl(a), Excl(b)) => a.cmp(b),
            (Excl(a), Incl(b)) => a.cmp(b).then(Ordering::Less),
            (Incl(a), Excl(b)) => a.cmp(b).then(Ordering::Greater),
        }
    }
}

impl PartialOrd for UpperBound {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A single non-empty interval. `Incl`/`Incl` at equal values is a point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Piece {
    pub lo: LowerBound,
    pub hi: UpperBound,
}

impl Piece {
    fn is_valid(&self) -> bool {
        match (self.lo.value(), self.hi.value()) {
            (Some(a), Some(b)) => {
                a < b
                    || (a == b
                        && matches!(self.lo, LowerBound::Incl(_))
                        && matches!(self.hi, UpperBound::Incl(_)))
            }
            _ => true,
        }
    }

    pub fn contains(&self, x: &Rat) -> bool {
        self.lo.covers(x) && self.hi.covers(x)
    }

    pub fn singleton_value(&self) -> Option<&Rat> {
        match (&self.lo, &self.hi) {
            (LowerBound::Incl(a), UpperBound::Incl(b)) if a == b => Some(a),
            _ => None,
        }
    }
}

/// The union of the two pieces is again a single interval.
fn mergeable(hi: &UpperBound, lo: &LowerBound) -> bool {
    match (hi.value(), lo.value()) {
        (None, _) | (_, None) => true,
        (Some(h), Some(l)) => match h.cmp(l) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => {
                matches!(hi, UpperBound::Incl(_)) || matches!(lo, LowerBound::Incl(_))
            }
        },
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IntervalSet {
    pieces: Vec<Piece>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet { pieces: Vec::new() }
    }

    pub fn full_line() -> Self {
        IntervalSet::normalized(vec![Piece { lo: LowerBound::NegInf, hi: UpperBound::PosInf }])
    }

    pub fn point(v: Rat) -> Self {
        IntervalSet::normalized(vec![Piece {
            lo: LowerBound::Incl(v.clone()),
            hi: UpperBound::Incl(v),
        }])
    }

    /// `(a, b)`
    pub fn open(a: Rat, b: Rat) -> Self {
        IntervalSet::normalized(vec![Piece { lo: LowerBound::Excl(a), hi: UpperBound::Excl(b) }])
    }

    /// `[a, b]`
    pub fn closed(a: Rat, b: Rat) -> Self {
        IntervalSet::normalized(vec![Piece { lo: LowerBound::Incl(a), hi: UpperBound::Incl(b) }])
    }

    /// `[a, b)`
    pub fn left_closed(a: Rat, b: Rat) -> Self {
        IntervalSet::normalized(vec![Piece { lo: LowerBound::Incl(a), hi: UpperBound::Excl(b) }])
    }

    /// `(a, b]`
    pub fn right_closed(a: Rat, b: Rat) -> Self {
        IntervalSet::normalized(vec![Piece { lo: LowerBound::Excl(a), hi: UpperBound::Incl(b) }])
    }

    /// `[a, +inf)`
    pub fn ray_ge(a: Rat) -> Self {
        IntervalSet::normalized(vec![Piece { lo: LowerBound::Incl(a), hi: UpperBound::PosInf }])
    }

    /// `(-inf, a)`
    pub fn ray_lt(a: Rat) -> Self {
        IntervalSet::normalized(vec![Piece { lo: LowerBound::NegInf, hi: UpperBound::Excl(a) }])
    }

    /// Canonicalizes an arbitrary bag of pieces; invalid (empty) pieces are
    /// dropped, overlapping and touching ones merged.
    pub(crate) fn normalized(mut pieces: Vec<Piece>) -> Self {
        pieces.retain(Piece::is_valid);
        pieces.sort_by(|p, q| p.lo.cmp(&q.lo).then_with(|| p.hi.cmp(&q.hi)));
        let mut out: Vec<Piece> = Vec::with_capacity(pieces.len());
        for piece in pieces {
            match out.last_mut() {
                Some(last) if mergeable(&last.hi, &piece.lo) => {
                    if piece.hi > last.hi {
                        last.hi = piece.hi;
                    }
                }
                _ => out.push(piece),
            }
        }
        IntervalSet { pieces: out }
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn is_full_line(&self) -> bool {
        self.pieces.len() == 1
            && self.pieces[0].lo == LowerBound::NegInf
            && self.pieces[0].hi == UpperBound::PosInf
    }

    pub fn contains(&self, x: &Rat) -> bool {
        self.pieces.iter().any(|p| p.contains(x))
    }

    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        let mut pieces = self.pieces.clone();
        pieces.extend(other.pieces.iter().cloned());
        IntervalSet::normalized(pieces)
    }

    pub fn intersect(&self, other: &IntervalSet) -> IntervalSet {
        let mut pieces = Vec::new();
        for p in &self.pieces {
            for q in &other.pieces {
                pieces.push(Piece {
                    lo: p.lo.clone().max(q.lo.clone()),
                    hi: p.hi.clone().min(q.hi.clone()),
                });
            }
        }
        IntervalSet::normalized(pieces)
    }

    pub fn complement(&self) -> IntervalSet {
        let mut gaps = Vec::new();
        let mut cursor = LowerBound::NegInf;
        for piece in &self.pieces {
            let gap_hi = match &piece.lo {
                LowerBound::NegInf => None,
                LowerBound::Incl(v) => Some(UpperBound::Excl(v.clone())),
                LowerBound::Excl(v) => Some(UpperBound::Incl(v.clone())),
            };
            if let Some(hi) = gap_hi {
                gaps.push(Piece { lo: cursor, hi });
            }
            cursor = match &piece.hi {
                UpperBound::PosInf => return IntervalSet::normalized(gaps),
                UpperBound::Incl(v) => LowerBound::Excl(v.clone()),
                UpperBound::Excl(v) => LowerBound::Incl(v.clone()),
            };
        }
        gaps.push(Piece { lo: cursor, hi: UpperBound::PosInf });
        IntervalSet::normalized(gaps)
    }

    pub fn difference(&self, other: &IntervalSet) -> IntervalSet {
        self.intersect(&other.complement())
    }

    pub fn is_subset(&self, other: &IntervalSet) -> bool {
        self.difference(other).is_empty()
    }

    /// Finite supremum of the covered region, if bounded above and
    /// non-empty.
    pub fn finite_sup(&self) -> Option<&Rat> {
        self.pieces.last().and_then(|p| p.hi.value())
    }
}

/// A rational inside the set, if any; deterministically the "simplest" spot
/// of the first piece (its inclusive endpoint, a midpoint, or an integer one
/// step into an unbounded side).
pub fn pick_rational_in(set: &IntervalSet) -> Option<Rat> {
    let piece = set.pieces.first()?;
    Some(match (&piece.lo, &piece.hi) {
        (LowerBound::Incl(a), _) => a.clone(),
        (LowerBound::NegInf, UpperBound::PosInf) => Rat::zero(),
        (LowerBound::NegInf, UpperBound::Incl(b) | UpperBound::Excl(b)) => b - Rat::one(),
        (LowerBound::Excl(a), UpperBound::PosInf) => a + Rat::one(),
        (LowerBound::Excl(a), UpperBound::Incl(b) | UpperBound::Excl(b)) => {
            (a + b) / Rat::from_integer(2.into())
        }
    })
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pieces.is_empty() {
            return f.write_str("{}");
        }
        for (i, piece) in self.pieces.iter().enumerate() {
            if i > 0 {
                f.write_str(" u ")?;
            }
            if let Some(v) = piece.singleton_value() {
                write!(f, "{{{v}}}")?;
                continue;
            }
            match &piece.lo {
                LowerBound::NegInf => f.write_str("(-inf")?,
                LowerBound::Incl(v) => write!(f, "[{v}")?,
                LowerBound::Excl(v) => write!(f, "({v}")?,
            }
            match &piece.hi {
                UpperBound::PosInf => f.write_str(",inf)")?,
                UpperBound::Incl(v) => write!(f, ",{v}]")?,
                UpperBound::Excl(v) => write!(f, ",{v})")?,
            }
        }
        Ok(())
    }
}

fn parse_piece(tok: &str) -> Result<Piece, RealLineError> {
    let bad = |why: &str| RealLineError::BadSet(format!("piece {tok:?} {why}"));
    if let Some(inner) = tok.strip_prefix('{').and_then(|t| t.strip_suffix('}')) {
        let v = parse_rat(inner)?;
        return Ok(Piece { lo: LowerBound::Incl(v.clone()), hi: UpperBound::Incl(v) });
    }
    let mut chars = tok.chars();
    let lo_closed = match chars.next() {
        Some('(') => false,
        Some('[') => true,
        _ => return Err(bad("must start with '(', '[', or '{'")),
    };
    let hi_closed = match chars.next_back() {
        Some(')') => false,
        Some(']') => true,
        _ => return Err(bad("must end with ')', ']', or '}'")),
    };
    let inner = &tok[1..tok.len() - 1];
    let (lt, rt) =
        inner.split_once(',').ok_or_else(|| bad("needs two comma-separated endpoints"))?;
    let lo = if lt == "-inf" {
        if lo_closed {
            return Err(bad("cannot include -inf"));
        }
        LowerBound::NegInf
    } else {
        let v = parse_rat(lt)?;
        if lo_closed {
            LowerBound::Incl(v)
        } else {
            LowerBound::Excl(v)
        }
    };
    let hi = if rt == "inf" {
        if hi_closed {
            return Err(bad("cannot include inf"));
        }
        UpperBound::PosInf
    } else {
        let v = parse_rat(rt)?;
        if hi_closed {
            UpperBound::Incl(v)
        } else {
            UpperBound::Excl(v)
        }
    };
    let piece = Piece { lo, hi };
    if !piece.is_valid() {
        return Err(bad("is empty"));
    }
    Ok(piece)
}

impl FromStr for IntervalSet {
    type Err = RealLineError;

    /// Grammar: pieces joined by `u`; each piece one of `(a,b)`, `[a,b)`,
    /// `(a,b]`, `[a,b]`, `{a}` with rational endpoints like `-3/2`, or
    /// `-inf`/`inf` on an open side. `{}` is the empty set.
    fn from_str(raw: &str) -> Result<Self, Self::Err> {
        let s: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(RealLineError::BadSet("empty input".into()));
        }
        if s == "{}" {
            return Ok(IntervalSet::empty());
        }
        let pieces = s.split('u').map(parse_piece).collect::<Result<Vec<_>, _>>()?;
        Ok(IntervalSet::normalized(pieces))
    }
}
