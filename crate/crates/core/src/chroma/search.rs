//! Exact search routines over `u128` vertex bitsets.

use std::cmp::Ordering;

use super::SimpleGraph;
use crate::{Error, Result};

/// Largest order the bitset searches accept.
pub const MAX_SEARCH_ORDER: usize = 128;

type Mask = u128;

fn bit(v: usize) -> Mask {
    1 << v
}

/// 0-based adjacency rows.
pub(crate) struct Bitsets {
    rows: Vec<Mask>,
}

impl Bitsets {
    pub(crate) fn new(g: &SimpleGraph, budget: u64) -> Result<Self> {
        if g.order() > MAX_SEARCH_ORDER {
            return Err(Error::SearchBudgetExceeded { budget });
        }
        let rows = (1..=g.order())
            .map(|v| g.neighbours(v).iter().fold(0, |m, &u| m | bit(u - 1)))
            .collect();
        Ok(Self { rows })
    }

    fn order(&self) -> usize {
        self.rows.len()
    }
}

struct Counter {
    used: u64,
    budget: u64,
}

impl Counter {
    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.budget {
            Err(Error::SearchBudgetExceeded {
                budget: self.budget,
            })
        } else {
            Ok(())
        }
    }
}

/// Maximum independent set within `candidates`; among all maximum sets the
/// one whose sorted vertex list is lexicographically smallest.
pub(crate) fn maximum_independent_set(
    adj: &Bitsets,
    candidates: Mask,
    budget: u64,
) -> Result<Mask> {
    fn go(
        adj: &Bitsets,
        cand: Mask,
        chosen: Mask,
        size: u32,
        best: &mut (Mask, u32),
        counter: &mut Counter,
    ) -> Result<()> {
        counter.tick()?;
        if cand == 0 {
            // include-first order visits sets lexicographically, so only a
            // strictly larger set may replace the incumbent
            if size > best.1 {
                *best = (chosen, size);
            }
            return Ok(());
        }
        if size + cand.count_ones() <= best.1 {
            return Ok(());
        }
        let v = cand.trailing_zeros() as usize;
        go(
            adj,
            cand & !bit(v) & !adj.rows[v],
            chosen | bit(v),
            size + 1,
            best,
            counter,
        )?;
        go(adj, cand & !bit(v), chosen, size, best, counter)
    }
    let mut best = (0, 0);
    let mut counter = Counter { used: 0, budget };
    go(adj, candidates, 0, 0, &mut best, &mut counter)?;
    Ok(best.0)
}

/// Whether the graph admits a proper colouring with at most `k` colours.
fn colourable(adj: &Bitsets, order: &[usize], k: usize, counter: &mut Counter) -> Result<bool> {
    fn go(
        adj: &Bitsets,
        order: &[usize],
        pos: usize,
        classes: &mut Vec<Mask>,
        k: usize,
        counter: &mut Counter,
    ) -> Result<bool> {
        counter.tick()?;
        let Some(&v) = order.get(pos) else {
            return Ok(true);
        };
        for c in 0..classes.len() {
            if classes[c] & adj.rows[v] == 0 {
                classes[c] |= bit(v);
                let ok = go(adj, order, pos + 1, classes, k, counter)?;
                classes[c] &= !bit(v);
                if ok {
                    return Ok(true);
                }
            }
        }
        if classes.len() < k {
            classes.push(bit(v));
            let ok = go(adj, order, pos + 1, classes, k, counter)?;
            classes.pop();
            return Ok(ok);
        }
        Ok(false)
    }
    go(adj, order, 0, &mut Vec::with_capacity(k), k, counter)
}

/// Chromatic number by iterative deepening on the colour count.
pub(crate) fn chromatic_number(adj: &Bitsets, budget: u64) -> Result<usize> {
    let n = adj.order();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(adj.rows[v].count_ones()));
    let mut counter = Counter { used: 0, budget };
    for k in 1..=n {
        if colourable(adj, &order, k, &mut counter)? {
            return Ok(k);
        }
    }
    Ok(n)
}

/// Optimal partition found by [`min_sum_partition`], classes ranked by
/// non-increasing size with ties broken by smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Candidate {
    pub sum: u64,
    pub weights: Vec<usize>,
    /// 1-based colour of each vertex (index 0 is vertex 1).
    pub assignment: Vec<usize>,
}

impl Candidate {
    pub(crate) fn from_classes(n: usize, classes: &[Mask]) -> Self {
        let mut ranked: Vec<Mask> = classes.to_vec();
        ranked.sort_by(|a, b| {
            b.count_ones()
                .cmp(&a.count_ones())
                .then(a.trailing_zeros().cmp(&b.trailing_zeros()))
        });
        let mut assignment = vec![0; n];
        let mut weights = Vec::with_capacity(ranked.len());
        let mut sum = 0u64;
        for (c, &mask) in ranked.iter().enumerate() {
            let size = mask.count_ones() as usize;
            weights.push(size);
            sum += (c as u64 + 1) * size as u64;
            let mut m = mask;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                assignment[v] = c + 1;
                m &= m - 1;
            }
        }
        Self {
            sum,
            weights,
            assignment,
        }
    }

    /// Smaller sum first, then lexicographically greater weights, then
    /// lexicographically smaller assignment.
    fn preference(&self, other: &Self) -> Ordering {
        self.sum
            .cmp(&other.sum)
            .then_with(|| other.weights.cmp(&self.weights))
            .then_with(|| self.assignment.cmp(&other.assignment))
    }
}

struct MinSum<'a> {
    adj: &'a Bitsets,
    chi: usize,
    classes: Vec<Mask>,
    sizes: Vec<usize>,
    /// `at_least[t]`: number of classes holding at least `t` vertices.
    at_least: Vec<usize>,
    /// Current `Σ i·θ(c_i)` over classes ranked by size.
    cost: u64,
    best: Option<Candidate>,
    counter: Counter,
}

impl MinSum<'_> {
    // With classes ranked by size, Σ i·θ(c_i) = Σ_t C(at_least[t] + 1, 2);
    // growing a class from size s to s + 1 adds the new at_least[s + 1].
    fn grow(&mut self, class: usize) {
        let s = self.sizes[class] + 1;
        self.sizes[class] = s;
        if self.at_least.len() <= s {
            self.at_least.push(0);
        }
        self.at_least[s] += 1;
        self.cost += self.at_least[s] as u64;
    }

    fn shrink(&mut self, class: usize) {
        let s = self.sizes[class];
        self.cost -= self.at_least[s] as u64;
        self.at_least[s] -= 1;
        self.sizes[class] = s - 1;
    }

    fn lower_bound(&self, remaining: usize) -> Option<u64> {
        let open = self.classes.len();
        let need = self.chi - open;
        if remaining < need {
            return None;
        }
        // each new class costs at least its rank, every other vertex >= 1
        let opening: u64 = (open + 1..=self.chi).map(|r| r as u64).sum();
        Some(self.cost + opening + (remaining - need) as u64)
    }

    fn search(&mut self, v: usize) -> Result<()> {
        self.counter.tick()?;
        let n = self.adj.order();
        if v == n {
            if self.classes.len() == self.chi {
                let cand = Candidate::from_classes(n, &self.classes);
                debug_assert_eq!(cand.sum, self.cost);
                if self
                    .best
                    .as_ref()
                    .is_none_or(|b| cand.preference(b) == Ordering::Less)
                {
                    self.best = Some(cand);
                }
            }
            return Ok(());
        }
        match self.lower_bound(n - v) {
            None => return Ok(()),
            Some(lb) if self.best.as_ref().is_some_and(|b| lb > b.sum) => return Ok(()),
            _ => {}
        }
        for c in 0..self.classes.len() {
            if self.classes[c] & self.adj.rows[v] == 0 {
                self.classes[c] |= bit(v);
                self.grow(c);
                self.search(v + 1)?;
                self.shrink(c);
                self.classes[c] &= !bit(v);
            }
        }
        if self.classes.len() < self.chi {
            self.classes.push(bit(v));
            self.sizes.push(0);
            let c = self.classes.len() - 1;
            self.grow(c);
            self.search(v + 1)?;
            self.shrink(c);
            self.sizes.pop();
            self.classes.pop();
        }
        Ok(())
    }
}

/// Canonical minimum-sum partition into exactly `chi` independent sets.
///
/// Vertices are placed in index order and classes are opened in creation
/// order, so every partition is visited at most once. Branches whose lower
/// bound exceeds the incumbent are cut; ties are still explored so the
/// canonical optimum is found. `seed` (a valid `chi`-colouring) primes the
/// incumbent.
pub(crate) fn min_sum_partition(
    adj: &Bitsets,
    chi: usize,
    seed: Option<Candidate>,
    budget: u64,
) -> Result<Candidate> {
    let mut state = MinSum {
        adj,
        chi,
        classes: Vec::with_capacity(chi),
        sizes: Vec::with_capacity(chi),
        at_least: vec![0],
        cost: 0,
        best: seed,
        counter: Counter { used: 0, budget },
    };
    state.search(0)?;
    state
        .best
        .ok_or_else(|| Error::InvalidGraph(format!("no partition into {chi} independent sets")))
}
