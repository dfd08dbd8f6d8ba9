//! Chromatic sums over minimum proper colourings.
//!
//! For a proper colouring `S` with colour classes `c_1..c_k`, the colour
//! weight `θ(c_i)` is the size of class `i` and the colour sum is
//! `ω(S) = Σ i·θ(c_i)`. `χ⁻(G)` and `χ⁺(G)` are the minimum and maximum of
//! `ω` over colourings that use exactly `χ(G)` colours. Treating the colour
//! index as a random variable with pmf `θ(c_i)/|V|` gives the chromatic
//! mean and variance, kept here as exact rationals.

mod graph;
mod search;

pub use graph::SimpleGraph;
pub use search::MAX_SEARCH_ORDER;

use search::{Bitsets, Candidate};

use crate::{Error, Rational, Result};

/// Default node budget for the exact searches.
pub const DEFAULT_SEARCH_BUDGET: u64 = 50_000_000;

/// A proper colouring with colours `1..=k`, every colour used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProperColouring {
    assignment: Vec<usize>,
    weights: Vec<usize>,
}

impl ProperColouring {
    /// Validates `assignment` (index 0 is vertex 1) against `graph`.
    pub fn new(graph: &SimpleGraph, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != graph.order() {
            return Err(Error::InvalidColouring(format!(
                "{} colours for {} vertices",
                assignment.len(),
                graph.order()
            )));
        }
        for (u, v) in graph.edges() {
            if assignment[u - 1] == assignment[v - 1] {
                return Err(Error::InvalidColouring(format!(
                    "adjacent v{u} and v{v} share colour {}",
                    assignment[u - 1]
                )));
            }
        }
        Self::from_assignment(assignment)
    }

    /// Builds a colouring without checking properness against a graph.
    pub fn from_assignment(assignment: Vec<usize>) -> Result<Self> {
        let k = assignment.iter().copied().max().unwrap_or(0);
        let mut weights = vec![0; k];
        for &c in &assignment {
            if c == 0 {
                return Err(Error::InvalidColouring("colour 0".into()));
            }
            weights[c - 1] += 1;
        }
        if let Some(empty) = weights.iter().position(|&w| w == 0) {
            return Err(Error::InvalidColouring(format!(
                "colour {} is unused",
                empty + 1
            )));
        }
        Ok(Self {
            assignment,
            weights,
        })
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn colour_of(&self, v: usize) -> usize {
        self.assignment[v - 1]
    }

    pub fn colour_count(&self) -> usize {
        self.weights.len()
    }

    /// `θ(c_1), ..., θ(c_k)`.
    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn order(&self) -> usize {
        self.assignment.len()
    }

    /// Vertex sets of each colour, ascending.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.colour_count()];
        for (i, &c) in self.assignment.iter().enumerate() {
            classes[c - 1].push(i + 1);
        }
        classes
    }

    pub fn is_proper_for(&self, graph: &SimpleGraph) -> bool {
        graph.order() == self.order()
            && graph
                .edges()
                .into_iter()
                .all(|(u, v)| self.assignment[u - 1] != self.assignment[v - 1])
    }
}

/// Chromatic mean and variance of a colouring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChromaticStats {
    pub mean: Rational,
    pub variance: Rational,
}

/// Full chromatic-sum analysis of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticReport {
    pub order: usize,
    pub chi: usize,
    pub chi_minus: u64,
    pub chi_plus: u64,
    pub weights_min: Vec<usize>,
    pub weights_max: Vec<usize>,
    pub mu_minus: Rational,
    pub mu_plus: Rational,
    pub var_minus: Rational,
    pub var_plus: Rational,
}

/// `ω(S) = Σ i·θ(c_i)`.
pub fn colour_sum(s: &ProperColouring) -> u64 {
    weighted_sum(s.weights())
}

fn weighted_sum(weights: &[usize]) -> u64 {
    weights
        .iter()
        .enumerate()
        .map(|(i, &w)| (i as u64 + 1) * w as u64)
        .sum()
}

/// Mean `Σ iθ / n` and variance `Σ i²θ / n - mean²` for a weight vector.
pub fn weight_stats(weights: &[usize]) -> ChromaticStats {
    let n: i128 = weights.iter().map(|&w| w as i128).sum();
    let (first, second) = weights
        .iter()
        .enumerate()
        .fold((0i128, 0i128), |(s1, s2), (i, &w)| {
            let i = i as i128 + 1;
            (s1 + i * w as i128, s2 + i * i * w as i128)
        });
    let mean = Rational::new(first, n);
    ChromaticStats {
        mean,
        variance: Rational::new(second, n) - mean * mean,
    }
}

pub fn chromatic_stats(s: &ProperColouring) -> ChromaticStats {
    weight_stats(s.weights())
}

/// Recolours with `c_i ↦ c_{k-i+1}`.
pub fn reverse_colouring(s: &ProperColouring) -> ProperColouring {
    let k = s.colour_count();
    ProperColouring {
        assignment: s.assignment.iter().map(|&c| k + 1 - c).collect(),
        weights: s.weights.iter().rev().copied().collect(),
    }
}

/// Exact colouring searches with a shared node budget.
#[derive(Debug, Clone, Copy)]
pub struct Solver {
    budget: u64,
}

impl Default for Solver {
    fn default() -> Self {
        Self {
            budget: DEFAULT_SEARCH_BUDGET,
        }
    }
}

impl Solver {
    pub fn with_budget(budget: u64) -> Self {
        Self { budget }
    }

    /// `χ(G)`. Graphs with an interval certificate take the `O(n + m)`
    /// clique route; others use exact search.
    pub fn chromatic_number(&self, g: &SimpleGraph) -> Result<usize> {
        if let Some(lows) = g.interval_certificate() {
            return Ok(lows
                .iter()
                .enumerate()
                .map(|(i, &lo)| i + 2 - lo)
                .max()
                .unwrap_or(1));
        }
        search::chromatic_number(&Bitsets::new(g, self.budget)?, self.budget)
    }

    /// Repeatedly removes a maximum independent set (lexicographically
    /// smallest among ties) and gives it the next colour.
    pub fn greedy_min_sum(&self, g: &SimpleGraph) -> Result<ProperColouring> {
        let adj = Bitsets::new(g, self.budget)?;
        let n = g.order();
        let mut remaining: u128 = if n == 128 { u128::MAX } else { (1 << n) - 1 };
        let mut assignment = vec![0; n];
        let mut colour = 0;
        while remaining != 0 {
            colour += 1;
            let mut set = search::maximum_independent_set(&adj, remaining, self.budget)?;
            remaining &= !set;
            while set != 0 {
                assignment[set.trailing_zeros() as usize] = colour;
                set &= set - 1;
            }
        }
        ProperColouring::from_assignment(assignment)
    }

    /// Canonical minimum-sum colouring with exactly `χ(G)` colours: weights
    /// lexicographically greatest among optima, then the assignment
    /// lexicographically smallest.
    pub fn min_sum_colouring(&self, g: &SimpleGraph) -> Result<ProperColouring> {
        let chi = self.chromatic_number(g)?;
        let adj = Bitsets::new(g, self.budget)?;
        let seed = self
            .greedy_min_sum(g)
            .ok()
            .filter(|s| s.colour_count() == chi)
            .map(|s| Candidate::from_classes(g.order(), &masks(&s)));
        let best = search::min_sum_partition(&adj, chi, seed, self.budget)?;
        ProperColouring::from_assignment(best.assignment)
    }

    /// `χ⁻` from the exact search, `χ⁺ = (χ + 1)·n - χ⁻` by colour reversal.
    pub fn chroma_report(&self, g: &SimpleGraph) -> Result<ChromaticReport> {
        let min = self.min_sum_colouring(g)?;
        let max = reverse_colouring(&min);
        let chi = min.colour_count();
        let n = g.order();
        let chi_minus = colour_sum(&min);
        let chi_plus = (chi as u64 + 1) * n as u64 - chi_minus;
        let lo = chromatic_stats(&min);
        let hi = chromatic_stats(&max);
        Ok(ChromaticReport {
            order: n,
            chi,
            chi_minus,
            chi_plus,
            weights_min: min.weights().to_vec(),
            weights_max: max.weights().to_vec(),
            mu_minus: lo.mean,
            mu_plus: hi.mean,
            var_minus: lo.variance,
            var_plus: hi.variance,
        })
    }
}

fn masks(s: &ProperColouring) -> Vec<u128> {
    let mut masks = vec![0u128; s.colour_count()];
    for (v, &c) in s.assignment().iter().enumerate() {
        masks[c - 1] |= 1 << v;
    }
    masks
}

pub fn chromatic_number(g: &SimpleGraph) -> Result<usize> {
    Solver::default().chromatic_number(g)
}

pub fn min_sum_colouring(g: &SimpleGraph) -> Result<ProperColouring> {
    Solver::default().min_sum_colouring(g)
}

pub fn greedy_min_sum(g: &SimpleGraph) -> Result<ProperColouring> {
    Solver::default().greedy_min_sum(g)
}

pub fn chroma_report(g: &SimpleGraph) -> Result<ChromaticReport> {
    Solver::default().chroma_report(g)
}
