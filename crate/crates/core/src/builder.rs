//! Construction of finite Jaco graphs `J_n(f)` and streaming of the root
//! graph `J_∞(f)`.
//!
//! Vertices are processed in ascending index order. When `v_i` is reached,
//! every in-arc already comes from a lower index, so `d⁻(v_i)` is fixed and
//! the vertex's reach `r_i = i + f(i) - d⁻(v_i)` determines its out-arcs:
//! `(v_i, v_j)` for `i < j <= min(r_i, n)`. Arcs are never stored; the
//! per-vertex reach is an interval-compressed arc list.

use std::collections::VecDeque;

use serde::Serialize;

use crate::{Error, IncidencePolynomial, Result};

/// Default cap on materialized arcs.
pub const DEFAULT_ARC_BUDGET: u64 = 10_000_000;

/// Per-vertex data of a Jaco graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct VertexRecord {
    #[serde(rename = "i")]
    pub index: usize,
    pub in_degree: usize,
    /// Largest index `v_i` may send an arc to in the root graph.
    pub reach: u64,
}

impl VertexRecord {
    /// Out-degree of the vertex in `J_∞(f)`, i.e. `f(i) - d⁻(v_i)`.
    pub fn out_degree_root(&self) -> u64 {
        self.reach - self.index as u64
    }

    /// Out-degree in `J_n(f)`: arcs beyond `v_n` are cut off.
    pub fn out_degree_within(&self, n: usize) -> usize {
        (self.reach.min(n as u64) as usize).saturating_sub(self.index)
    }
}

fn reach_of(index: usize, in_degree: usize, f_i: u64) -> Result<u64> {
    (index as u64)
        .checked_add(f_i)
        .and_then(|s| s.checked_sub(in_degree as u64))
        .ok_or(Error::Overflow {
            context: "vertex reach",
        })
}

/// Finite Jaco graph `J_n(f)` in interval-compressed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacoGraph {
    incidence: IncidencePolynomial,
    records: Vec<VertexRecord>,
}

impl JacoGraph {
    /// Builds `J_n(f)` in `O(n)` time using a difference array over reach
    /// endpoints for the in-degree accounting.
    pub fn build(incidence: IncidencePolynomial, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder);
        }
        let mut records = Vec::with_capacity(n);
        // diff[j] accumulates +1 at the first and -1 one past the last
        // target of every emitted arc interval.
        let mut diff = vec![0i64; n + 2];
        let mut running = 0i64;
        for i in 1..=n {
            running += diff[i];
            let in_degree = running as usize;
            let reach = reach_of(i, in_degree, incidence.evaluate(i as u64)?)?;
            let last = reach.min(n as u64) as usize;
            if last > i {
                diff[i + 1] += 1;
                diff[last + 1] -= 1;
            }
            records.push(VertexRecord {
                index: i,
                in_degree,
                reach,
            });
        }
        Ok(Self { incidence, records })
    }

    pub fn incidence(&self) -> IncidencePolynomial {
        self.incidence
    }

    pub fn order(&self) -> usize {
        self.records.len()
    }

    pub fn records(&self) -> &[VertexRecord] {
        &self.records
    }

    pub fn record(&self, i: usize) -> Result<&VertexRecord> {
        if i == 0 || i > self.order() {
            return Err(Error::IndexOutOfRange {
                index: i,
                order: self.order(),
            });
        }
        Ok(&self.records[i - 1])
    }

    /// `J_m(f)` for `m <= n`; in-degrees do not depend on the order, so the
    /// prefix of records is reused as is.
    pub fn truncated(&self, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidOrder);
        }
        if m > self.order() {
            return Err(Error::IndexOutOfRange {
                index: m,
                order: self.order(),
            });
        }
        Ok(Self {
            incidence: self.incidence,
            records: self.records[..m].to_vec(),
        })
    }

    /// Out-degree of `v_i` in the root graph, `f(i) - d⁻(v_i)`.
    pub fn out_degree_root(&self, i: usize) -> Result<u64> {
        self.record(i).map(VertexRecord::out_degree_root)
    }

    pub fn out_degree(&self, i: usize) -> Result<usize> {
        let n = self.order();
        self.record(i).map(|r| r.out_degree_within(n))
    }

    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        i >= 1 && i < j && j <= self.order() && self.records[i - 1].reach >= j as u64
    }

    pub fn arc_count(&self) -> u64 {
        let n = self.order();
        self.records
            .iter()
            .map(|r| r.out_degree_within(n) as u64)
            .sum()
    }

    /// Materializes the arc set in lexicographic order, refusing to exceed
    /// `budget` arcs.
    pub fn arcs(&self, budget: u64) -> Result<Vec<(usize, usize)>> {
        let count = self.arc_count();
        if count > budget {
            return Err(Error::ArcBudgetExceeded { count, budget });
        }
        let n = self.order();
        let mut arcs = Vec::with_capacity(count as usize);
        for r in &self.records {
            let last = r.reach.min(n as u64) as usize;
            arcs.extend((r.index + 1..=last).map(|j| (r.index, j)));
        }
        Ok(arcs)
    }
}

/// Unbounded stream of [`VertexRecord`]s of the root graph `J_∞(f)`.
///
/// Reach is non-decreasing in the index, so the in-neighbours of `v_i` form a
/// contiguous run ending at `v_{i-1}`; the stream keeps only that run's
/// reaches. After an overflow the stream yields one `Err` and then ends.
#[derive(Debug, Clone)]
pub struct RootStream {
    incidence: IncidencePolynomial,
    next: usize,
    window: VecDeque<u64>,
    done: bool,
}

impl RootStream {
    pub fn new(incidence: IncidencePolynomial) -> Self {
        Self {
            incidence,
            next: 1,
            window: VecDeque::new(),
            done: false,
        }
    }
}

impl Iterator for RootStream {
    type Item = Result<VertexRecord>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let i = self.next;
        while self.window.front().is_some_and(|&r| r < i as u64) {
            self.window.pop_front();
        }
        let in_degree = self.window.len();
        let reach = match self
            .incidence
            .evaluate(i as u64)
            .and_then(|f_i| reach_of(i, in_degree, f_i))
        {
            Ok(r) => r,
            Err(e) => {
                self.done = true;
                return Some(Err(e));
            }
        };
        self.window.push_back(reach);
        self.next += 1;
        Some(Ok(VertexRecord {
            index: i,
            in_degree,
            reach,
        }))
    }
}

impl std::iter::FusedIterator for RootStream {}

/// Convenience wrapper for [`RootStream::new`].
pub fn root_stream(incidence: IncidencePolynomial) -> RootStream {
    RootStream::new(incidence)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn in_degrees(g: &JacoGraph) -> Vec<usize> {
        g.records().iter().map(|r| r.in_degree).collect()
    }

    #[test]
    fn square_first_six_in_degrees() {
        let g = JacoGraph::build(IncidencePolynomial::square(), 6).unwrap();
        assert_eq!(in_degrees(&g), vec![0, 1, 1, 2, 3, 3]);
    }

    #[test]
    fn single_vertex() {
        let g = JacoGraph::build(IncidencePolynomial::square(), 1).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.arcs(DEFAULT_ARC_BUDGET).unwrap().is_empty());
    }

    #[test]
    fn zero_order_rejected() {
        assert_eq!(
            JacoGraph::build(IncidencePolynomial::square(), 0),
            Err(Error::InvalidOrder)
        );
    }

    #[test]
    fn constant_three_gives_two_k4_blocks() {
        let g = JacoGraph::build(IncidencePolynomial::constant(3), 8).unwrap();
        let arcs = g.arcs(DEFAULT_ARC_BUDGET).unwrap();
        let mut expected = Vec::new();
        for block in [1usize, 5] {
            for i in block..block + 4 {
                for j in i + 1..block + 4 {
                    expected.push((i, j));
                }
            }
        }
        assert_eq!(arcs, expected);
    }

    #[test]
    fn root_stream_examples() {
        let first: Vec<_> = root_stream(IncidencePolynomial::square())
            .take(5)
            .map(|r| r.unwrap().in_degree)
            .collect();
        assert_eq!(first, vec![0, 1, 1, 2, 3]);

        let v1 = root_stream(IncidencePolynomial::square())
            .next()
            .unwrap()
            .unwrap();
        assert_eq!(v1.reach, 2);

        let v2 = root_stream(IncidencePolynomial::new(1, 0, 1))
            .nth(1)
            .unwrap()
            .unwrap();
        assert_eq!((v2.in_degree, v2.reach), (1, 6));
    }

    #[test]
    fn root_stream_stops_after_overflow() {
        let mut s = root_stream(IncidencePolynomial::new(u64::MAX / 2, 0, 0));
        assert!(s.next().unwrap().is_ok());
        assert!(matches!(s.next(), Some(Err(Error::Overflow { .. }))));
        assert!(s.next().is_none());
    }

    #[test]
    fn out_degree_root_examples() {
        let g = JacoGraph::build(IncidencePolynomial::square(), 6).unwrap();
        assert_eq!(g.out_degree_root(1).unwrap(), 1);
        assert_eq!(g.out_degree_root(3).unwrap(), 8);
        assert_eq!(g.out_degree_root(6).unwrap(), 33);
        assert!(matches!(
            g.out_degree_root(7),
            Err(Error::IndexOutOfRange { index: 7, order: 6 })
        ));
        assert!(g.out_degree_root(0).is_err());
    }

    #[test]
    fn arcs_examples() {
        let p = IncidencePolynomial::square();
        let g3 = JacoGraph::build(p, 3).unwrap();
        assert_eq!(g3.arcs(DEFAULT_ARC_BUDGET).unwrap(), vec![(1, 2), (2, 3)]);
        let g6 = JacoGraph::build(p, 6).unwrap();
        assert_eq!(g6.arcs(DEFAULT_ARC_BUDGET).unwrap().len(), 10);
        assert_eq!(
            g6.arcs(9),
            Err(Error::ArcBudgetExceeded {
                count: 10,
                budget: 9
            })
        );
    }

    #[test]
    fn build_overflow_is_reported() {
        let r = JacoGraph::build(IncidencePolynomial::new(1 << 40, 0, 0), 100_000);
        assert!(matches!(r, Err(Error::Overflow { .. })));
    }

    #[test]
    fn truncation_matches_rebuild() {
        let p = IncidencePolynomial::new(2, 1, 1);
        let big = JacoGraph::build(p, 60).unwrap();
        for m in 1..=60 {
            assert_eq!(big.truncated(m).unwrap(), JacoGraph::build(p, m).unwrap());
        }
    }
}
