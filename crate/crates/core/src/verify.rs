//! Executable property suite over a grid of incidence polynomials.
//!
//! Each property is checked on many instances; the report keeps a count of
//! instances checked, a count of failures, and the first few failure
//! messages. Properties that do not apply to a polynomial (for example the
//! in-degree step law for `a = 0`) are skipped for it.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::braided::{self, BraidedString};
use crate::chroma::Solver;
use crate::invariants::{self, underlying_degrees};
use crate::{oracle, FamilyClass, IncidencePolynomial, JacoGraph, Result, SimpleGraph};

/// Property identifiers with a one-line description, in report order.
pub const PROPERTIES: &[(&str, &str)] = &[
    (
        "completeness-threshold",
        "J_n complete with Δ = n-1 iff n <= f(1)+1",
    ),
    (
        "degree-jump-bound",
        "|deg(v_i) - deg(v_{i-1})| <= a(2i-1) + b for non-constant f",
    ),
    (
        "in-degree-steps",
        "d⁻(v_{i+1}) - d⁻(v_i) ∈ {0, 1} when a >= 1",
    ),
    (
        "out-degree-distinct",
        "root out-degrees of consecutive vertices differ when a >= 1",
    ),
    (
        "jaconian-plateau-change",
        "|𝒥(J_n)| != |𝒥(J_{n+1})| when d⁻(v_n) = d⁻(v_{n+1}), f = x²",
    ),
    (
        "prime-degree-saturation",
        "deg(v_p) = f(p) at the prime vertex forces deg(v_m) = f(m) for m <= p",
    ),
    ("max-degree-monotone", "Δ(J_k) <= Δ(J_n) for k <= n"),
    ("min-degree-bound", "δ(J_n) <= f(1)"),
    (
        "in-degree-equals-prefix-degree",
        "d⁻(v_k) in J_n equals deg(v_k) in J_k",
    ),
    (
        "prime-locator",
        "smallest i with deg(v_i) = f(i) and reach >= n is the prime vertex, non-constant f",
    ),
    (
        "hope-complete",
        "vertices above the prime Jaconian vertex induce a complete graph, non-constant f",
    ),
    (
        "smallest-max-degree-locator",
        "first k with Δ(J_k) = f(f(1)) is f(f(1))+1, prime v_{f(1)}",
    ),
    (
        "arcs-match-definition",
        "builder arcs equal the definitional replay",
    ),
    (
        "truncation-coherence",
        "J_n built directly equals J_N truncated to n",
    ),
    (
        "root-stream-matches-build",
        "streamed vertex records equal a finite build",
    ),
    (
        "distance-matches-bfs",
        "v1_distance equals breadth-first distance in the underlying graph",
    ),
    (
        "components",
        "component blocks match the family and a union-find over arcs",
    ),
    (
        "min-sum-matches-exhaustive",
        "exact minimum sum and weights equal full enumeration",
    ),
    (
        "reversal-identity",
        "χ⁺ = (χ+1)n - χ⁻ equals the enumerated maximum sum",
    ),
    (
        "variance-symmetry",
        "σ² of the minimum and maximum colourings agree",
    ),
    (
        "weight-evolution",
        "from J_i to J_{i+1} (f = x²) one weight grows by 1 or a colour of weight 1 appears",
    ),
    (
        "greedy-matches-exact",
        "greedy maximum-independent-set colouring is optimal on J_i(x²)",
    ),
    (
        "complete-graph-closed-forms",
        "K_n sums, mean (n+1)/2 and variance (n²-1)/12",
    ),
    (
        "braided-closed-forms",
        "two-block braided means equal the engine, variances agree",
    ),
];

/// What to check and how far.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub polynomials: Vec<IncidencePolynomial>,
    /// Largest order for structural properties.
    pub structural_max: usize,
    /// Largest order compared against exhaustive colouring enumeration.
    pub colouring_max: usize,
    /// Largest order of the `J_i(x²)` colouring sequence.
    pub sequence_max: usize,
    /// Largest `K_n` for the complete-graph check.
    pub complete_max: usize,
    /// Largest vertex count `n + m - l` for braided checks.
    pub braided_max: usize,
    /// Run only these property identifiers; all when `None`.
    pub only: Option<Vec<String>>,
}

impl Default for VerifyConfig {
    /// `a ∈ {1,2,3}, b, c ∈ {0,1,2}` plus constant 3 and `x`, structural
    /// orders up to 200, colouring orders up to 12.
    fn default() -> Self {
        let mut polynomials = Vec::new();
        for a in 1..=3 {
            for b in 0..=2 {
                for c in 0..=2 {
                    polynomials.push(IncidencePolynomial::new(a, b, c));
                }
            }
        }
        polynomials.push(IncidencePolynomial::constant(3));
        polynomials.push(IncidencePolynomial::linear(1, 0));
        Self {
            polynomials,
            structural_max: 200,
            colouring_max: oracle::EXHAUSTIVE_ORDER_LIMIT,
            sequence_max: 20,
            complete_max: 50,
            braided_max: 12,
            only: None,
        }
    }
}

impl VerifyConfig {
    /// A single polynomial up to order `n`; colouring checks are capped at
    /// the exhaustive limit and the `x²` sequence at 20.
    pub fn single(p: IncidencePolynomial, n: usize) -> Self {
        Self {
            polynomials: vec![p],
            structural_max: n,
            colouring_max: n.min(oracle::EXHAUSTIVE_ORDER_LIMIT),
            sequence_max: n.min(20),
            ..Self::default()
        }
    }

    fn wants(&self, name: &str) -> bool {
        self.only
            .as_ref()
            .is_none_or(|names| names.iter().any(|n| n == name))
    }
}

const KEPT_FAILURES: usize = 3;

/// Tally for one property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyOutcome {
    pub name: &'static str,
    pub description: &'static str,
    pub checked: u64,
    pub failed: u64,
    /// The first few failure messages.
    pub failures: Vec<String>,
}

impl PropertyOutcome {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn check(&mut self, ok: bool, message: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < KEPT_FAILURES {
                self.failures.push(message());
            }
        }
    }

    fn error(&mut self, context: String, err: crate::Error) {
        self.check(false, || format!("{context}: {err}"));
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub outcomes: Vec<PropertyOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(PropertyOutcome::passed)
    }

    pub fn outcome(&self, name: &str) -> Option<&PropertyOutcome> {
        self.outcomes.iter().find(|o| o.name == name)
    }

    /// One line per property, failure messages indented below, then a
    /// summary line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let width = self
            .outcomes
            .iter()
            .map(|o| o.name.len())
            .max()
            .unwrap_or(0);
        for o in &self.outcomes {
            let status = if o.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{status}  {:width$}  checked={} failed={}  {}",
                o.name, o.checked, o.failed, o.description
            );
            for f in &o.failures {
                let _ = writeln!(out, "      {f}");
            }
        }
        let failed = self.outcomes.iter().filter(|o| !o.passed()).count();
        let _ = writeln!(
            out,
            "{} properties, {} passed, {} failed",
            self.outcomes.len(),
            self.outcomes.len() - failed,
            failed
        );
        out
    }
}

/// Runs every selected property. Unknown names in `only` are ignored here;
/// callers validate them against [`PROPERTIES`].
pub fn run(config: &VerifyConfig) -> VerifyReport {
    let mut outcomes = Vec::new();
    for &(name, description) in PROPERTIES {
        if !config.wants(name) {
            continue;
        }
        let mut o = PropertyOutcome {
            name,
            description,
            checked: 0,
            failed: 0,
            failures: Vec::new(),
        };
        match name {
            "complete-graph-closed-forms" => complete_graphs(config, &mut o),
            "braided-closed-forms" => braided_forms(config, &mut o),
            _ => {
                for &p in &config.polynomials {
                    if let Err(e) = per_polynomial(name, p, config, &mut o) {
                        o.error(format!("f = {p}"), e);
                    }
                }
            }
        }
        outcomes.push(o);
    }
    VerifyReport { outcomes }
}

fn per_polynomial(
    name: &str,
    p: IncidencePolynomial,
    cfg: &VerifyConfig,
    o: &mut PropertyOutcome,
) -> Result<()> {
    let n_max = cfg.structural_max;
    let quadratic = p.classify() == FamilyClass::Quadratic;
    // constant incidence splits into components, where neither the Hope
    // claim nor the polynomial degree-jump bound applies
    let connected = p.classify() != FamilyClass::Constant;
    match name {
        "completeness-threshold" => {
            let threshold = invariants::completeness_threshold(p)?;
            let g = JacoGraph::build(p, n_max)?;
            for n in 1..=n_max {
                let gn = g.truncated(n)?;
                let degrees = underlying_degrees(&gn);
                let complete = degrees.iter().all(|&d| d == n - 1);
                o.check(complete == (n as u64 <= threshold), || {
                    format!("f = {p}, n = {n}: complete = {complete}, threshold {threshold}")
                });
            }
        }
        "degree-jump-bound" if connected => {
            let g = JacoGraph::build(p, n_max)?;
            for n in 2..=n_max {
                let degrees = underlying_degrees(&g.truncated(n)?);
                for i in 2..=n {
                    let bound = p.forward_difference_bound(i as u64)?;
                    let jump = degrees[i - 1].abs_diff(degrees[i - 2]) as u64;
                    o.check(jump <= bound, || {
                        format!("f = {p}, n = {n}, i = {i}: jump {jump} > {bound}")
                    });
                }
            }
        }
        "in-degree-steps" if quadratic => {
            let g = JacoGraph::build(p, n_max)?;
            for w in g.records().windows(2) {
                let step = w[1].in_degree as i64 - w[0].in_degree as i64;
                o.check(step == 0 || step == 1, || {
                    format!("f = {p}, i = {}: in-degree step {step}", w[0].index)
                });
            }
        }
        "out-degree-distinct" if quadratic => {
            let g = JacoGraph::build(p, n_max)?;
            for w in g.records().windows(2) {
                let (x, y) = (w[0].out_degree_root(), w[1].out_degree_root());
                o.check(x != y, || format!("f = {p}, i = {}: both {x}", w[0].index));
            }
        }
        "jaconian-plateau-change" if p == IncidencePolynomial::square() => {
            let g = JacoGraph::build(p, n_max)?;
            let mut sizes = Vec::with_capacity(n_max);
            for n in 1..=n_max {
                sizes.push(invariants::jaconian(&g.truncated(n)?).jaconian_set.len());
            }
            for n in 1..n_max {
                if g.record(n)?.in_degree == g.record(n + 1)?.in_degree {
                    o.check(sizes[n - 1] != sizes[n], || {
                        format!("n = {n}: |𝒥| stays {} across a plateau", sizes[n])
                    });
                }
            }
        }
        "prime-degree-saturation" => {
            let g = JacoGraph::build(p, n_max)?;
            for n in 1..=n_max {
                let gn = g.truncated(n)?;
                let degrees = underlying_degrees(&gn);
                let prime = invariants::jaconian(&gn).prime_jaconian;
                if degrees[prime - 1] as u64 == p.evaluate(prime as u64)? {
                    for m in 1..=prime {
                        let fm = p.evaluate(m as u64)?;
                        o.check(degrees[m - 1] as u64 == fm, || {
                            format!("f = {p}, n = {n}, prime {prime}: deg(v{m}) != {fm}")
                        });
                    }
                }
            }
        }
        "max-degree-monotone" => {
            let g = JacoGraph::build(p, n_max)?;
            let mut previous = 0;
            for n in 1..=n_max {
                let delta = invariants::max_degree(&g.truncated(n)?);
                o.check(delta >= previous, || {
                    format!("f = {p}: Δ(J_{n}) = {delta} < Δ(J_{}) = {previous}", n - 1)
                });
                previous = delta;
            }
        }
        "min-degree-bound" => {
            let g = JacoGraph::build(p, n_max)?;
            let f1 = p.evaluate(1)?;
            for n in 1..=n_max {
                let delta = invariants::jaconian(&g.truncated(n)?).min_degree as u64;
                o.check(delta <= f1, || {
                    format!("f = {p}, n = {n}: δ = {delta} > {f1}")
                });
            }
        }
        "in-degree-equals-prefix-degree" => {
            let g = JacoGraph::build(p, n_max)?;
            for k in 1..=n_max {
                let prefix_degree = underlying_degrees(&g.truncated(k)?)[k - 1];
                let in_degree = g.record(k)?.in_degree;
                o.check(prefix_degree == in_degree, || {
                    format!("f = {p}, k = {k}: d⁻ = {in_degree}, deg in J_k = {prefix_degree}")
                });
            }
        }
        "prime-locator" if connected => {
            let g = JacoGraph::build(p, n_max)?;
            for n in 1..=n_max {
                let gn = g.truncated(n)?;
                let degrees = underlying_degrees(&gn);
                let mut first = None;
                for r in gn.records() {
                    if degrees[r.index - 1] as u64 == p.evaluate(r.index as u64)?
                        && r.reach >= n as u64
                    {
                        first = Some(r.index);
                        break;
                    }
                }
                if let Some(i) = first {
                    let prime = invariants::jaconian(&gn).prime_jaconian;
                    o.check(i == prime, || {
                        format!("f = {p}, n = {n}: saturated v{i}, prime v{prime}")
                    });
                }
            }
        }
        "hope-complete" if connected => {
            let g = JacoGraph::build(p, n_max)?;
            for n in 1..=n_max {
                let gn = g.truncated(n)?;
                let result = invariants::hope_subgraph(&gn);
                o.check(result.is_ok(), || format!("f = {p}, n = {n}: {result:?}"));
            }
        }
        "smallest-max-degree-locator" if quadratic => {
            let located = invariants::smallest_with_max_degree(p)?;
            let f1 = p.evaluate(1)?;
            let target = p.evaluate(f1)?;
            let swept = oracle::sweep_smallest_max_degree(p, target as usize, located.order + 5)?;
            o.check(
                swept == located.order && located.prime_vertex as u64 == f1,
                || {
                    format!(
                        "f = {p}: located J_{} (prime v{}), sweep J_{swept}",
                        located.order, located.prime_vertex
                    )
                },
            );
        }
        "arcs-match-definition" => {
            let mut orders: Vec<usize> = (1..=cfg.colouring_max).collect();
            orders.push(n_max.min(60));
            for n in orders {
                let built: BTreeSet<(usize, usize)> = JacoGraph::build(p, n)?
                    .arcs(crate::builder::DEFAULT_ARC_BUDGET)?
                    .into_iter()
                    .collect();
                let replay = oracle::arcs_by_definition(p, n);
                o.check(built == replay, || {
                    let diff: Vec<_> = built.symmetric_difference(&replay).take(4).collect();
                    format!("f = {p}, n = {n}: arcs differ at {diff:?}")
                });
            }
        }
        "truncation-coherence" => {
            let g = JacoGraph::build(p, n_max)?;
            for n in 1..=n_max {
                o.check(JacoGraph::build(p, n)? == g.truncated(n)?, || {
                    format!("f = {p}, n = {n}: direct build differs from truncation")
                });
            }
        }
        "root-stream-matches-build" => {
            let g = JacoGraph::build(p, n_max)?;
            let streamed = crate::builder::root_stream(p)
                .take(n_max)
                .collect::<Result<Vec<_>>>()?;
            for (a, b) in streamed.iter().zip(g.records()) {
                o.check(a == b, || format!("f = {p}: stream {a:?}, build {b:?}"));
            }
        }
        "distance-matches-bfs" => {
            let g = JacoGraph::build(p, n_max.min(60))?;
            for n in 1..=g.order() {
                let gn = g.truncated(n)?;
                let fast = invariants::v1_distance(&gn).ok();
                let slow = bfs_distance(&SimpleGraph::from_jaco(&gn), n);
                o.check(fast == slow, || {
                    format!("f = {p}, n = {n}: sweep {fast:?}, bfs {slow:?}")
                });
            }
        }
        "components" => {
            let g = JacoGraph::build(p, n_max)?;
            for n in 1..=n_max {
                let blocks = invariants::component_decomposition(&g.truncated(n)?);
                let expected: Vec<_> = match p.classify() {
                    _ if p.is_zero() => (1..=n).map(|v| v..=v).collect(),
                    FamilyClass::Constant => {
                        let size = p.c as usize + 1;
                        (1..=n)
                            .step_by(size)
                            .map(|s| s..=(s + size - 1).min(n))
                            .collect()
                    }
                    _ => vec![1..=n],
                };
                o.check(blocks == expected, || {
                    format!("f = {p}, n = {n}: blocks {blocks:?}, expected {expected:?}")
                });
                if n <= 60 {
                    let uf = union_find_blocks(n, &oracle::arcs_by_definition(p, n));
                    o.check(blocks == uf, || {
                        format!("f = {p}, n = {n}: blocks {blocks:?}, union-find {uf:?}")
                    });
                }
            }
        }
        "min-sum-matches-exhaustive" => {
            let solver = Solver::default();
            let g = JacoGraph::build(p, cfg.colouring_max)?;
            for n in 1..=cfg.colouring_max {
                let sg = SimpleGraph::from_jaco(&g.truncated(n)?);
                let exact = solver.min_sum_colouring(&sg)?;
                let (sum, weights) = oracle::exhaustive_min_sum(&sg)?;
                let got = crate::chroma::colour_sum(&exact);
                o.check(got == sum && exact.weights() == weights.as_slice(), || {
                    format!(
                        "f = {p}, n = {n}: solver {got} {:?}, enumeration {sum} {weights:?}",
                        exact.weights()
                    )
                });
            }
        }
        "reversal-identity" => {
            let solver = Solver::default();
            let g = JacoGraph::build(p, cfg.colouring_max)?;
            for n in 1..=cfg.colouring_max {
                let sg = SimpleGraph::from_jaco(&g.truncated(n)?);
                let report = solver.chroma_report(&sg)?;
                let (max_sum, max_weights) = oracle::exhaustive_max_sum(&sg)?;
                o.check(
                    report.chi_plus == max_sum && report.weights_max == max_weights,
                    || {
                        format!(
                            "f = {p}, n = {n}: χ⁺ = {}, enumerated maximum {max_sum}",
                            report.chi_plus
                        )
                    },
                );
            }
        }
        "variance-symmetry" => {
            let solver = Solver::default();
            let top = if p == IncidencePolynomial::square() {
                cfg.sequence_max
            } else {
                cfg.colouring_max
            };
            let g = JacoGraph::build(p, top)?;
            for n in 1..=top {
                let report = solver.chroma_report(&SimpleGraph::from_jaco(&g.truncated(n)?))?;
                o.check(report.var_minus == report.var_plus, || {
                    format!(
                        "f = {p}, n = {n}: σ²⁻ = {}, σ²⁺ = {}",
                        report.var_minus, report.var_plus
                    )
                });
            }
        }
        "weight-evolution" if p == IncidencePolynomial::square() => {
            let weights = square_sequence(cfg.sequence_max)?;
            for (i, w) in weights.windows(2).enumerate() {
                o.check(one_step(&w[0], &w[1]), || {
                    format!("i = {}: {:?} -> {:?}", i + 1, w[0], w[1])
                });
            }
        }
        "greedy-matches-exact" if p == IncidencePolynomial::square() => {
            let solver = Solver::default();
            let g = JacoGraph::build(p, cfg.sequence_max)?;
            for n in 1..=cfg.sequence_max {
                let sg = SimpleGraph::from_jaco(&g.truncated(n)?);
                let greedy = solver.greedy_min_sum(&sg)?;
                let exact = solver.min_sum_colouring(&sg)?;
                o.check(greedy.weights() == exact.weights(), || {
                    format!(
                        "n = {n}: greedy {:?}, exact {:?}",
                        greedy.weights(),
                        exact.weights()
                    )
                });
            }
        }
        _ => {}
    }
    Ok(())
}

/// Canonical minimum weight vectors of `J_1(x²) ..= J_top(x²)`.
pub fn square_sequence(top: usize) -> Result<Vec<Vec<usize>>> {
    let solver = Solver::default();
    let g = JacoGraph::build(IncidencePolynomial::square(), top)?;
    (1..=top)
        .map(|n| {
            let sg = SimpleGraph::from_jaco(&g.truncated(n)?);
            Ok(solver.min_sum_colouring(&sg)?.weights().to_vec())
        })
        .collect()
}

/// `next` is `prev` with one weight incremented, or `prev` followed by a
/// new colour of weight 1.
pub fn one_step(prev: &[usize], next: &[usize]) -> bool {
    if next.len() == prev.len() + 1 {
        return next[..prev.len()] == *prev && next[prev.len()] == 1;
    }
    if next.len() != prev.len() {
        return false;
    }
    let changed: Vec<usize> = (0..prev.len()).filter(|&t| prev[t] != next[t]).collect();
    changed.len() == 1 && next[changed[0]] == prev[changed[0]] + 1
}

fn bfs_distance(g: &SimpleGraph, target: usize) -> Option<usize> {
    let mut dist = vec![None; g.order() + 1];
    dist[1] = Some(0);
    let mut queue = std::collections::VecDeque::from([1usize]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].expect("queued vertices have a distance");
        for &v in g.neighbours(u) {
            if dist[v].is_none() {
                dist[v] = Some(d + 1);
                queue.push_back(v);
            }
        }
    }
    dist[target]
}

fn union_find_blocks(
    n: usize,
    arcs: &BTreeSet<(usize, usize)>,
) -> Vec<std::ops::RangeInclusive<usize>> {
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(i, j) in arcs {
        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
        parent[ri.max(rj)] = ri.min(rj);
    }
    let mut blocks: Vec<std::ops::RangeInclusive<usize>> = Vec::new();
    for v in 1..=n {
        let root = find(&mut parent, v);
        match blocks.last_mut() {
            Some(b) if find(&mut parent, *b.start()) == root => *b = *b.start()..=v,
            _ => blocks.push(v..=v),
        }
    }
    blocks
}

fn complete_graphs(cfg: &VerifyConfig, o: &mut PropertyOutcome) {
    let solver = Solver::default();
    for n in 1..=cfg.complete_max {
        let result = SimpleGraph::complete(n)
            .and_then(|g| solver.chroma_report(&g))
            .and_then(|report| Ok((report, braided::complete_graph_stats(n as u64)?)));
        match result {
            Ok((r, s)) => o.check(
                r.chi_minus == s.sum
                    && r.chi_plus == s.sum
                    && r.mu_minus == s.mean
                    && r.mu_plus == s.mean
                    && r.var_minus == s.variance
                    && r.var_plus == s.variance,
                || format!("K_{n}: engine {r:?}, closed form {s:?}"),
            ),
            Err(e) => o.error(format!("K_{n}"), e),
        }
    }
}

fn braided_forms(cfg: &VerifyConfig, o: &mut PropertyOutcome) {
    let solver = Solver::default();
    for total in 1..=cfg.braided_max {
        for n in 1..=total {
            for m in 1..=n {
                // n + m - l = total
                let Some(l) = (n + m).checked_sub(total).filter(|&l| l <= m) else {
                    continue;
                };
                let result = BraidedString::two_block(n, m, l).and_then(|s| {
                    let r = solver.chroma_report(&s.realize())?;
                    let lo = braided::mu_min_two_block(n as u64, m as u64, l as u64)?;
                    let hi = braided::mu_max_two_block(n as u64, m as u64, l as u64)?;
                    Ok((r, lo, hi))
                });
                match result {
                    Ok((r, lo, hi)) => o.check(
                        r.mu_minus == lo && r.mu_plus == hi && r.var_minus == r.var_plus,
                        || {
                            format!(
                                "({n},{m},{l}): engine {}/{}, closed {lo}/{hi}",
                                r.mu_minus, r.mu_plus
                            )
                        },
                    ),
                    Err(e) => o.error(format!("({n},{m},{l})"), e),
                }
            }
        }
    }
}
