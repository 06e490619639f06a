use crate::bits::BitMatrix;

use super::RankedPoset;

/// Comparability matrices between every pair of ranks, computed once.
///
/// `above(r1, r2)` has rows indexed by rank `r1` and columns by rank `r2`;
/// `below(r2, r1)` is its transpose. Both are built by repeated boolean
/// products of the cover matrices.
#[derive(Clone, Debug)]
pub struct Order {
    rank: usize,
    above: Vec<BitMatrix>,
    below: Vec<BitMatrix>,
}

impl Order {
    pub fn new(p: &RankedPoset) -> Self {
        let rank = p.rank();
        let covers: Vec<BitMatrix> = (0..rank).map(|r| p.cover_matrix(r)).collect();
        let mut above = Vec::with_capacity((rank + 1) * (rank + 1));
        for r1 in 0..=rank {
            for r2 in 0..=rank {
                if r2 < r1 {
                    above.push(BitMatrix::zeros(0, 0));
                } else if r2 == r1 {
                    above.push(BitMatrix::identity(p.level_size(r1)));
                } else {
                    let prev = &above[r1 * (rank + 1) + r2 - 1];
                    above.push(prev.product(&covers[r2 - 1]));
                }
            }
        }
        let mut below = Vec::with_capacity(above.len());
        for r2 in 0..=rank {
            for r1 in 0..=rank {
                if r1 > r2 {
                    below.push(BitMatrix::zeros(0, 0));
                } else {
                    below.push(above[r1 * (rank + 1) + r2].transpose());
                }
            }
        }
        Self { rank, above, below }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Rows: rank `r1`; columns: rank `r2`; requires `r1 <= r2`.
    pub fn above(&self, r1: usize, r2: usize) -> &BitMatrix {
        assert!(r1 <= r2 && r2 <= self.rank);
        &self.above[r1 * (self.rank + 1) + r2]
    }

    /// Rows: rank `r2`; columns: rank `r1`; requires `r1 <= r2`.
    pub fn below(&self, r2: usize, r1: usize) -> &BitMatrix {
        assert!(r1 <= r2 && r2 <= self.rank);
        &self.below[r2 * (self.rank + 1) + r1]
    }

    pub fn leq(&self, (r1, i): (usize, usize), (r2, j): (usize, usize)) -> bool {
        r1 <= r2 && self.above(r1, r2).get(i, j)
    }
}
