//! Shared fixture spaces for unit tests.

use crate::set::PointSet;
use crate::space::FiniteSpace;

pub(crate) fn pts(xs: &[usize]) -> PointSet {
    PointSet::from_points(xs.iter().copied())
}

/// Two points, opens {}, {0}, {0,1}.
pub(crate) fn sierpinski() -> FiniteSpace {
    FiniteSpace::from_opens(2, &[PointSet::EMPTY, pts(&[0]), PointSet::universe(2)]).unwrap()
}

/// Partition topology on 4 points with blocks {0,1} and {2,3}.
pub(crate) fn odd_even4() -> FiniteSpace {
    FiniteSpace::from_opens(
        4,
        &[PointSet::EMPTY, pts(&[0, 1]), pts(&[2, 3]), PointSet::universe(4)],
    )
    .unwrap()
}

/// Five-point window of the digital line: minimal neighborhoods
/// [{0,1},{1},{1,2,3},{3},{3,4}].
pub(crate) fn khalimsky5() -> FiniteSpace {
    FiniteSpace::generate(5, &[pts(&[0, 1]), pts(&[1, 2, 3]), pts(&[3, 4])]).unwrap()
}

/// Three points, opens {}, {0}, X.
pub(crate) fn base3() -> FiniteSpace {
    FiniteSpace::from_opens(3, &[PointSet::EMPTY, pts(&[0]), PointSet::universe(3)]).unwrap()
}

/// Three points, opens {}, {0}, {0,1}, {0,2}, X; an admissible extension of
/// `base3`.
pub(crate) fn ext3() -> FiniteSpace {
    FiniteSpace::from_opens(
        3,
        &[PointSet::EMPTY, pts(&[0]), pts(&[0, 1]), pts(&[0, 2]), PointSet::universe(3)],
    )
    .unwrap()
}
