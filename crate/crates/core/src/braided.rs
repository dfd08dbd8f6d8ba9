//! Braided complete graphs: strings of cliques where consecutive blocks
//! share a clique and the shared cliques are pairwise disjoint.

use crate::{Error, Rational, Result, SimpleGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidedString {
    orders: Vec<usize>,
    overlaps: Vec<usize>,
}

impl BraidedString {
    /// Validates block sizes `n_1..n_t` and overlaps `l_1..l_{t-1}`.
    pub fn new(orders: Vec<usize>, overlaps: Vec<usize>) -> Result<Self> {
        let invalid = |index: usize, reason: String| Error::InvalidBraid { index, reason };
        if orders.is_empty() {
            return Err(invalid(0, "at least one block is required".into()));
        }
        if overlaps.len() + 1 != orders.len() {
            return Err(invalid(
                overlaps.len(),
                format!(
                    "{} blocks need {} overlaps, got {}",
                    orders.len(),
                    orders.len() - 1,
                    overlaps.len()
                ),
            ));
        }
        if let Some(j) = orders.iter().position(|&n| n == 0) {
            return Err(invalid(j, "block order must be at least 1".into()));
        }
        for (j, &l) in overlaps.iter().enumerate() {
            if l > orders[j].min(orders[j + 1]) {
                return Err(invalid(
                    j,
                    format!(
                        "overlap {l} exceeds block orders {} and {}",
                        orders[j],
                        orders[j + 1]
                    ),
                ));
            }
        }
        for j in 1..orders.len().saturating_sub(1) {
            if overlaps[j - 1] + overlaps[j] > orders[j] {
                return Err(invalid(
                    j,
                    format!(
                        "overlaps {} and {} do not fit disjointly in block of order {}",
                        overlaps[j - 1],
                        overlaps[j],
                        orders[j]
                    ),
                ));
            }
        }
        Ok(Self { orders, overlaps })
    }

    pub fn two_block(n: usize, m: usize, l: usize) -> Result<Self> {
        Self::new(vec![n, m], vec![l])
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn overlaps(&self) -> &[usize] {
        &self.overlaps
    }

    pub fn vertex_count(&self) -> usize {
        self.orders.iter().sum::<usize>() - self.overlaps.iter().sum::<usize>()
    }

    /// Whether some consecutive pair shares nothing (a disjoint union).
    pub fn has_disjoint_join(&self) -> bool {
        self.overlaps.contains(&0)
    }

    /// Block `j` occupies `first..first + n_j`; block `j + 1` starts at the
    /// last `l_j` vertices of block `j`.
    pub fn block_ranges(&self) -> Vec<std::ops::Range<usize>> {
        let mut first = 1;
        let mut ranges = Vec::with_capacity(self.orders.len());
        for (j, &n) in self.orders.iter().enumerate() {
            ranges.push(first..first + n);
            if let Some(&l) = self.overlaps.get(j) {
                first += n - l;
            }
        }
        ranges
    }

    pub fn realize(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.vertex_count())
            .expect("a validated braid has at least one vertex");
        for block in self.block_ranges() {
            for u in block.clone() {
                for v in u + 1..block.end {
                    g.add_edge(u, v).expect("block vertices are in range");
                }
            }
        }
        g
    }
}

fn two_block_args(n: u64, m: u64, l: u64) -> Result<(i128, i128, i128)> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidBraid {
            index: 0,
            reason: "block order must be at least 1".into(),
        });
    }
    let (n, m) = if m <= n { (n, m) } else { (m, n) };
    if l > m {
        return Err(Error::InvalidBraid {
            index: 0,
            reason: format!("overlap {l} exceeds block order {m}"),
        });
    }
    Ok((n as i128, m as i128, l as i128))
}

/// Mean of the minimum-sum colouring of `K_n ⊕_l K_m`:
/// `[2(m-l)(n+1) + (n-m+l)(n-m+l+1)] / [2(n+m-l)]` with `m <= n`.
pub fn mu_min_two_block(n: u64, m: u64, l: u64) -> Result<Rational> {
    let (n, m, l) = two_block_args(n, m, l)?;
    Ok(Rational::new(
        2 * (m - l) * (n + 1) + (n - m + l) * (n - m + l + 1),
        2 * (n + m - l),
    ))
}

/// Mean of the maximum-sum colouring of `K_n ⊕_l K_m`:
/// `[n(n+1) + (m-l)(2n-m+l+1)] / [2(n+m-l)]` with `m <= n`.
///
/// Reversal puts the `m - l` doubled colours at the top indices
/// `n-m+l+1..n`, which is where this differs from
/// [`mu_max_two_block_published`].
pub fn mu_max_two_block(n: u64, m: u64, l: u64) -> Result<Rational> {
    let (n, m, l) = two_block_args(n, m, l)?;
    Ok(Rational::new(
        n * (n + 1) + (m - l) * (2 * n - m + l + 1),
        2 * (n + m - l),
    ))
}

/// The published closed form `[(n-l)(n-l+1) + 4l(n-l) + 2l(l+1)] / [2(n+m-l)]`,
/// which doubles `l` colours instead of `m - l`. Disagrees with the engine
/// whenever `m - l != l`; exposed for erratum reporting only.
pub fn mu_max_two_block_published(n: u64, m: u64, l: u64) -> Result<Rational> {
    let (n, m, l) = two_block_args(n, m, l)?;
    Ok(Rational::new(
        (n - l) * (n - l + 1) + 4 * l * (n - l) + 2 * l * (l + 1),
        2 * (n + m - l),
    ))
}

/// Colour sum, mean and variance of `K_n` (identical for both extremes).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompleteGraphStats {
    pub sum: u64,
    pub mean: Rational,
    pub variance: Rational,
}

pub fn complete_graph_stats(n: u64) -> Result<CompleteGraphStats> {
    if n == 0 {
        return Err(Error::InvalidOrder);
    }
    let w = n as i128;
    Ok(CompleteGraphStats {
        sum: n * (n + 1) / 2,
        mean: Rational::new(w + 1, 2),
        variance: Rational::new(w * w - 1, 12),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i128, q: i128) -> Rational {
        Rational::new(p, q)
    }

    #[test]
    fn realize_examples() {
        let g = BraidedString::two_block(7, 5, 3).unwrap().realize();
        assert_eq!(g.order(), 9);
        assert_eq!(g.edge_count(), 21 + 10 - 3);
        assert_eq!(
            BraidedString::new(vec![6], vec![]).unwrap().realize(),
            SimpleGraph::complete(6).unwrap()
        );
        let split = BraidedString::two_block(3, 3, 0).unwrap().realize();
        assert_eq!(
            split.edges(),
            vec![(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)]
        );
    }

    #[test]
    fn three_block_string_shares_disjoint_cliques() {
        let s = BraidedString::new(vec![4, 5, 3], vec![2, 2]).unwrap();
        assert_eq!(s.block_ranges(), vec![1..5, 3..8, 6..9]);
        let g = s.realize();
        assert_eq!(g.order(), 8);
        assert!(g.is_adjacent(3, 7));
        assert!(!g.is_adjacent(1, 5));
        assert!(!g.is_adjacent(5, 8));
    }

    #[test]
    fn invalid_braids_name_the_index() {
        let idx = |o: Vec<usize>, l: Vec<usize>| match BraidedString::new(o, l) {
            Err(Error::InvalidBraid { index, .. }) => index,
            other => panic!("expected InvalidBraid, got {other:?}"),
        };
        assert_eq!(idx(vec![3, 2], vec![3]), 0);
        assert_eq!(idx(vec![4, 3, 4], vec![2, 2]), 1);
        assert_eq!(idx(vec![4, 0], vec![0]), 1);
        assert_eq!(idx(vec![4, 4], vec![]), 0);
        assert_eq!(idx(vec![], vec![]), 0);
        assert!(mu_min_two_block(3, 2, 3).is_err());
        assert!(mu_max_two_block(0, 2, 0).is_err());
    }

    #[test]
    fn mean_examples() {
        assert_eq!(mu_min_two_block(7, 5, 3).unwrap(), r(31, 9));
        assert_eq!(mu_max_two_block(7, 5, 3).unwrap(), r(41, 9));
        assert_eq!(mu_max_two_block_published(7, 5, 3).unwrap(), r(46, 9));
        assert_eq!(mu_min_two_block(5, 3, 2).unwrap(), r(8, 3));
        assert_eq!(mu_max_two_block(5, 3, 2).unwrap(), r(10, 3));
        // K_m absorbed into K_n
        for n in 1..10u64 {
            for m in 1..=n {
                let single = r(n as i128 + 1, 2);
                assert_eq!(mu_min_two_block(n, m, m).unwrap(), single);
                assert_eq!(mu_max_two_block(n, m, m).unwrap(), single);
            }
        }
        // argument order does not matter
        assert_eq!(mu_min_two_block(5, 7, 3).unwrap(), r(31, 9));
    }

    #[test]
    fn complete_examples() {
        let s = |n| complete_graph_stats(n).unwrap();
        assert_eq!(
            s(4),
            CompleteGraphStats {
                sum: 10,
                mean: r(5, 2),
                variance: r(5, 4)
            }
        );
        assert_eq!(
            s(1),
            CompleteGraphStats {
                sum: 1,
                mean: r(1, 1),
                variance: r(0, 1)
            }
        );
        assert_eq!(
            s(7),
            CompleteGraphStats {
                sum: 28,
                mean: r(4, 1),
                variance: r(4, 1)
            }
        );
        assert_eq!(complete_graph_stats(0), Err(Error::InvalidOrder));
    }
}
