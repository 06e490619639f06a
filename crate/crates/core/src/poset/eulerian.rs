use serde::Serialize;

use crate::bits::and_count;

use super::RankedPoset;

/// One interval `[x, y]` whose even- and odd-rank element counts differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// `(rank, index)` of the lower end.
    pub x: (usize, usize),
    /// `(rank, index)` of the upper end.
    pub y: (usize, usize),
    pub even: usize,
    pub odd: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerianReport {
    pub eulerian: bool,
    pub violation: Option<Violation>,
}

impl EulerianReport {
    pub fn is_eulerian(&self) -> bool {
        self.eulerian
    }
}

/// Checks every pair `x < y` of comparable elements. Pairs are scanned by
/// increasing rank of `x`, then index of `x`, then rank and index of `y`, so
/// the reported violation is deterministic.
pub(super) fn check(p: &RankedPoset) -> EulerianReport {
    let order = p.order();
    let rank = p.rank();
    for a in 0..rank {
        for x in 0..p.level_size(a) {
            for b in a + 1..=rank {
                for y in order.above(a, b).row_ones(x) {
                    let mut even = 0;
                    let mut odd = 0;
                    for r in a..=b {
                        let count = and_count(order.above(a, r).row(x), order.below(b, r).row(y));
                        if r % 2 == 0 {
                            even += count;
                        } else {
                            odd += count;
                        }
                    }
                    if even != odd {
                        return EulerianReport {
                            eulerian: false,
                            violation: Some(Violation {
                                x: (a, x),
                                y: (b, y),
                                even,
                                odd,
                            }),
                        };
                    }
                }
            }
        }
    }
    EulerianReport {
        eulerian: true,
        violation: None,
    }
}

#[cfg(test)]
mod tests {
    use crate::poset::{boolean, chain};

    #[test]
    fn chains_are_not_eulerian_but_small_booleans_are() {
        let report = chain(3).unwrap().is_eulerian();
        assert!(!report.eulerian);
        // [0̂, rank-2 element]: two even ranks (0, 2), one odd rank
        let v = report.violation.unwrap();
        assert_eq!((v.x, v.y, v.even, v.odd), ((0, 0), (2, 0), 2, 1));

        assert!(chain(1).unwrap().is_eulerian().eulerian);
        assert!(boolean(3).unwrap().is_eulerian().eulerian);
        assert!(boolean(5).unwrap().is_eulerian().eulerian);
    }
}
