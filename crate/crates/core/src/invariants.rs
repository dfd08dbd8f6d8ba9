//! Structural invariants of a [`JacoGraph`]: underlying degrees, the
//! Jaconian set and its prime vertex, the Hope subgraph, the distance from
//! `v_1` to `v_n`, and component structure.

use std::ops::RangeInclusive;

use crate::{Error, IncidencePolynomial, JacoGraph, Result};

/// Invariants of `J_n(f)` derived from its underlying degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub max_degree: usize,
    pub min_degree: usize,
    /// Ascending indices of all vertices of maximum degree.
    pub jaconian_set: Vec<usize>,
    pub prime_jaconian: usize,
    /// `prime_jaconian + 1 ..= n`, empty when the prime vertex is `v_n`.
    pub hope_range: RangeInclusive<usize>,
    /// Hop count from `v_1` to `v_n`; `None` when `v_n` is unreachable.
    pub v1_distance: Option<usize>,
}

/// Degree of every vertex in the underlying simple graph of `J_n(f)`.
pub fn underlying_degrees(g: &JacoGraph) -> Vec<usize> {
    let n = g.order();
    g.records()
        .iter()
        .map(|r| r.in_degree + r.out_degree_within(n))
        .collect()
}

/// Fills every field of the report. The Hope range is reported without the
/// completeness check of [`hope_subgraph`], which fails on the disconnected
/// graphs of constant incidence.
pub fn jaconian(g: &JacoGraph) -> InvariantReport {
    let degrees = underlying_degrees(g);
    let max_degree = degrees.iter().copied().max().unwrap_or(0);
    let min_degree = degrees.iter().copied().min().unwrap_or(0);
    let jaconian_set: Vec<usize> = degrees
        .iter()
        .enumerate()
        .filter(|&(_, &d)| d == max_degree)
        .map(|(i, _)| i + 1)
        .collect();
    let prime_jaconian = jaconian_set[0];
    InvariantReport {
        max_degree,
        min_degree,
        jaconian_set,
        prime_jaconian,
        hope_range: prime_jaconian + 1..=g.order(),
        v1_distance: v1_distance(g).ok(),
    }
}

pub fn max_degree(g: &JacoGraph) -> usize {
    underlying_degrees(g).into_iter().max().unwrap_or(0)
}

fn prime_jaconian(degrees: &[usize]) -> usize {
    let max = degrees.iter().copied().max().unwrap_or(0);
    degrees.iter().position(|&d| d == max).unwrap_or(0) + 1
}

fn check_hope(g: &JacoGraph, prime: usize) -> Result<RangeInclusive<usize>> {
    let n = g.order();
    // every vertex strictly between the prime vertex and v_n must reach v_n
    for r in g.records().iter().take(n - 1).skip(prime) {
        if r.reach < n as u64 {
            return Err(Error::HopeNotComplete {
                prime,
                vertex: r.index,
                order: n,
            });
        }
    }
    Ok(prime + 1..=n)
}

/// Vertex range of the Hope subgraph, checked to induce a complete graph.
pub fn hope_subgraph(g: &JacoGraph) -> Result<RangeInclusive<usize>> {
    let prime = prime_jaconian(&underlying_degrees(g));
    check_hope(g, prime)
}

/// Minimum number of arcs on a directed path `v_1 → v_n`.
///
/// Every vertex reachable in `t` hops forms a contiguous index block, so a
/// furthest-reach sweep gives the exact distance in `O(n)`.
pub fn v1_distance(g: &JacoGraph) -> Result<usize> {
    let n = g.order();
    let records = g.records();
    let mut hops = 0;
    let mut frontier_end = 1usize;
    let mut scan = 0usize;
    while frontier_end < n {
        let mut furthest = frontier_end;
        while scan < frontier_end {
            furthest = furthest.max(records[scan].reach.min(n as u64) as usize);
            scan += 1;
        }
        if furthest == frontier_end {
            return Err(Error::Unreachable { target: n });
        }
        frontier_end = furthest;
        hops += 1;
    }
    Ok(hops)
}

/// `f(1) + 1`: `J_n(f)` has a complete underlying graph iff `n` is at most
/// this value.
pub fn completeness_threshold(p: IncidencePolynomial) -> Result<u64> {
    p.evaluate(1)?.checked_add(1).ok_or(Error::Overflow {
        context: "completeness threshold",
    })
}

/// Smallest graph attaining maximum degree `f(f(1))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaxDegreeLocation {
    pub order: usize,
    pub prime_vertex: usize,
    pub max_degree: u64,
}

/// Locates the smallest `J_k(f)` whose maximum degree is `f(f(1))`.
///
/// The order is `k = f(f(1)) + 1` with prime Jaconian vertex `v_{f(1)}`: the
/// vertex `v_{f(1)}` has in-degree `f(1) - 1` and its last out-arc lands on
/// `v_{f(f(1)) + 1}`. The location is confirmed against `J_k` and `J_{k-1}`
/// before being returned.
pub fn smallest_with_max_degree(p: IncidencePolynomial) -> Result<MaxDegreeLocation> {
    if p.a == 0 {
        return Err(Error::NotQuadratic);
    }
    let f1 = p.evaluate(1)?;
    let target = p.evaluate(f1)?;
    let order = usize::try_from(target)
        .ok()
        .and_then(|t| t.checked_add(1))
        .ok_or(Error::Overflow {
            context: "max-degree locator",
        })?;
    let g = JacoGraph::build(p, order)?;
    let degrees = underlying_degrees(&g);
    let max = degrees.iter().copied().max().unwrap_or(0) as u64;
    let prime = prime_jaconian(&degrees);
    if max != target || prime as u64 != f1 {
        return Err(Error::LocatorMismatch(format!(
            "J_{order} has max degree {max} with prime v{prime}, expected {target} at v{f1}"
        )));
    }
    if order > 1 {
        let below = max_degree(&g.truncated(order - 1)?) as u64;
        if below >= target {
            return Err(Error::LocatorMismatch(format!(
                "J_{} already has max degree {below}",
                order - 1
            )));
        }
    }
    Ok(MaxDegreeLocation {
        order,
        prime_vertex: prime,
        max_degree: target,
    })
}

/// The order `f(f(1)) - f(1) + 1` as originally published for the locator;
/// kept for side-by-side reporting with [`smallest_with_max_degree`].
pub fn published_locator_order(p: IncidencePolynomial) -> Result<u64> {
    let f1 = p.evaluate(1)?;
    Ok(p.evaluate(f1)? - f1 + 1)
}

/// Connected components of the underlying graph as contiguous index blocks.
pub fn component_decomposition(g: &JacoGraph) -> Vec<RangeInclusive<usize>> {
    let n = g.order();
    let mut components = Vec::new();
    let mut start = 1;
    let mut furthest = 0usize;
    for r in g.records() {
        furthest = furthest.max(r.reach.min(n as u64) as usize);
        if furthest <= r.index {
            components.push(start..=r.index);
            start = r.index + 1;
        }
    }
    components
}
