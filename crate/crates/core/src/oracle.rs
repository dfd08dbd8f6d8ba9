//! Brute-force reference implementations. Nothing here is used by the fast
//! paths; these exist so tests and `verify` can compare against them.

use std::collections::BTreeSet;

use crate::{Error, IncidencePolynomial, Result, SimpleGraph};

/// Largest order accepted by [`exhaustive_min_sum`].
pub const EXHAUSTIVE_ORDER_LIMIT: usize = 12;

/// Arc set of `J_n(f)` recomputed from the defining predicate.
///
/// In-degrees are simulated forward, counting the arcs already emitted into
/// each vertex; afterwards every ordered pair `(i, j)` is re-checked
/// against `a·i² + (b+1)·i + c - d⁻(v_i) >= j` using the final in-degrees.
#[allow(clippy::needless_range_loop)] // pair-by-pair on purpose
pub fn arcs_by_definition(p: IncidencePolynomial, n: usize) -> BTreeSet<(usize, usize)> {
    let (a, b, c) = (p.a as i128, p.b as i128, p.c as i128);
    let bound = |i: usize, in_degree: usize| {
        let i = i as i128;
        a * i * i + (b + 1) * i + c - in_degree as i128
    };

    let mut arcs = BTreeSet::new();
    let mut arrived = vec![0usize; n + 1];
    for i in 1..=n {
        for j in i + 1..=n {
            if bound(i, arrived[i]) >= j as i128 {
                arcs.insert((i, j));
                arrived[j] += 1;
            }
        }
    }

    let mut in_degree = vec![0usize; n + 1];
    for &(_, j) in &arcs {
        in_degree[j] += 1;
    }
    for i in 1..=n {
        for j in i + 1..=n {
            assert_eq!(
                arcs.contains(&(i, j)),
                bound(i, in_degree[i]) >= j as i128,
                "arc predicate inconsistent at ({i}, {j})"
            );
        }
    }
    arcs
}

/// Underlying degree of every vertex of `J_n(f)` from [`arcs_by_definition`].
pub fn degrees_by_definition(p: IncidencePolynomial, n: usize) -> Vec<usize> {
    let mut degrees = vec![0; n];
    for (i, j) in arcs_by_definition(p, n) {
        degrees[i - 1] += 1;
        degrees[j - 1] += 1;
    }
    degrees
}

/// Minimum colour sum over all colourings with exactly `χ(G)` colours, and
/// the lexicographically greatest optimal weight vector.
///
/// Enumerates every partition of the vertices into independent sets; `χ` is
/// the smallest block count seen. For a fixed partition the best labelling
/// gives larger blocks smaller colours.
pub fn exhaustive_min_sum(g: &SimpleGraph) -> Result<(u64, Vec<usize>)> {
    exhaustive_extreme(g, false)
}

/// Maximum colour sum over colourings with exactly `χ(G)` colours and the
/// lexicographically smallest optimal weight vector (larger blocks take the
/// larger colours).
pub fn exhaustive_max_sum(g: &SimpleGraph) -> Result<(u64, Vec<usize>)> {
    exhaustive_extreme(g, true)
}

fn exhaustive_extreme(g: &SimpleGraph, maximize: bool) -> Result<(u64, Vec<usize>)> {
    let n = g.order();
    if n > EXHAUSTIVE_ORDER_LIMIT {
        return Err(Error::OrderTooLarge {
            order: n,
            limit: EXHAUSTIVE_ORDER_LIMIT,
        });
    }

    // best (sum, weights) for each block count
    let mut best: Vec<Option<(u64, Vec<usize>)>> = vec![None; n + 1];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    enumerate(g, 1, &mut blocks, &mut |sizes| {
        let mut sizes: Vec<usize> = sizes.to_vec();
        if maximize {
            sizes.sort();
        } else {
            sizes.sort_by(|x, y| y.cmp(x));
        }
        let sum: u64 = sizes
            .iter()
            .enumerate()
            .map(|(i, &s)| (i as u64 + 1) * s as u64)
            .sum();
        let slot = &mut best[sizes.len()];
        let better = match slot {
            None => true,
            Some((s, w)) if maximize => sum > *s || (sum == *s && sizes < *w),
            Some((s, w)) => sum < *s || (sum == *s && sizes > *w),
        };
        if better {
            *slot = Some((sum, sizes));
        }
    });
    // χ is the smallest block count that occurs
    Ok(best
        .into_iter()
        .flatten()
        .next()
        .expect("every graph has at least one partition"))
}

// Restricted-growth enumeration: vertex v joins an earlier block or opens a
// new one. Reports the block sizes of every complete proper partition.
fn enumerate(
    g: &SimpleGraph,
    v: usize,
    blocks: &mut Vec<Vec<usize>>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if v > g.order() {
        let sizes: Vec<usize> = blocks.iter().map(Vec::len).collect();
        visit(&sizes);
        return;
    }
    for b in 0..blocks.len() {
        if blocks[b].iter().all(|&u| !g.is_adjacent(u, v)) {
            blocks[b].push(v);
            enumerate(g, v + 1, blocks, visit);
            blocks[b].pop();
        }
    }
    blocks.push(vec![v]);
    enumerate(g, v + 1, blocks, visit);
    blocks.pop();
}

/// First order `k` for which `J_k(f)` has maximum degree `target`, found by
/// rebuilding `J_1, J_2, ...` from the definition.
pub fn sweep_smallest_max_degree(
    p: IncidencePolynomial,
    target: usize,
    max_order: usize,
) -> Result<usize> {
    for k in 1..=max_order {
        let max = degrees_by_definition(p, k).into_iter().max().unwrap_or(0);
        if max == target {
            return Ok(k);
        }
    }
    Err(Error::BudgetExceeded { order: max_order })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arcs_examples() {
        let sq = IncidencePolynomial::square();
        assert_eq!(
            arcs_by_definition(sq, 6).into_iter().collect::<Vec<_>>(),
            vec![
                (1, 2),
                (2, 3),
                (2, 4),
                (2, 5),
                (3, 4),
                (3, 5),
                (3, 6),
                (4, 5),
                (4, 6),
                (5, 6)
            ]
        );
        assert!(arcs_by_definition(sq, 1).is_empty());
        let blocks = arcs_by_definition(IncidencePolynomial::constant(3), 8);
        assert_eq!(blocks.len(), 12);
        assert!(blocks.iter().all(|&(i, j)| (i <= 4) == (j <= 4)));
    }

    #[test]
    fn exhaustive_examples() {
        assert_eq!(
            exhaustive_min_sum(&SimpleGraph::path(3).unwrap()).unwrap(),
            (4, vec![2, 1])
        );
        assert_eq!(
            exhaustive_min_sum(&SimpleGraph::complete(4).unwrap())
                .unwrap()
                .0,
            10
        );
        let j6 = SimpleGraph::from_edges(6, arcs_by_definition(IncidencePolynomial::square(), 6))
            .unwrap();
        assert_eq!(exhaustive_min_sum(&j6).unwrap(), (13, vec![2, 2, 1, 1]));
        assert_eq!(
            exhaustive_max_sum(&SimpleGraph::path(3).unwrap()).unwrap(),
            (5, vec![1, 2])
        );
        assert_eq!(exhaustive_max_sum(&j6).unwrap(), (17, vec![1, 1, 2, 2]));
        assert!(matches!(
            exhaustive_min_sum(&SimpleGraph::edgeless(13).unwrap()),
            Err(Error::OrderTooLarge {
                order: 13,
                limit: 12
            })
        ));
    }

    #[test]
    fn sweep_examples() {
        assert_eq!(
            sweep_smallest_max_degree(IncidencePolynomial::new(1, 0, 1), 5, 50),
            Ok(6)
        );
        assert_eq!(
            sweep_smallest_max_degree(IncidencePolynomial::square(), 1, 50),
            Ok(2)
        );
        assert_eq!(
            sweep_smallest_max_degree(IncidencePolynomial::square(), 0, 50),
            Ok(1)
        );
        assert_eq!(
            sweep_smallest_max_degree(IncidencePolynomial::default(), 1, 5),
            Err(Error::BudgetExceeded { order: 5 })
        );
    }
}
