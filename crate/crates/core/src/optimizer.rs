//! Optimal comparison depths and D-optimal invariant designs.
//!
//! For a single effect block the D-optimal invariant design is uniform on the
//! depth maximising that block's multiplier. For the full parameter vector the
//! criterion `p1 log h1 + p2 log h2 + p3 log h3` is maximised over mixtures of
//! uniform depth designs. The optimum is supported on at most three depths of
//! the shape `{d, d+1, S}`, so every support of that shape is solved as a
//! concave problem in one or two free weights and the best one is certified
//! with the equivalence theorem.

use std::cmp::Ordering;

use crate::closed_form::{self, h2, h3, info_summary, log_det_from_summary, InfoSummary};
use crate::error::{Error, Result};
use crate::problem::{DesignProblem, InvariantDesign, ParameterLayout};
use crate::scalar::{Rational, Scalar};

/// Numeric tolerances of [`optimize_full`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    /// Weights below this are treated as absent from the support.
    pub weight_tolerance: f64,
    /// Acceptance tolerance of the equivalence-theorem check.
    pub kw_tolerance: f64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            weight_tolerance: 1e-10,
            kw_tolerance: 1e-8,
        }
    }
}

/// Equivalence-theorem check of an invariant design.
///
/// A design is D-optimal iff its variance function never exceeds the number
/// of parameters `p`, and it then equals `p` on the support. The variance
/// function is constant on each depth orbit, so the `S` values below certify
/// the whole design region.
#[derive(Debug, Clone, PartialEq)]
pub struct KwCertificate<T = f64> {
    /// `V(d, design) / p` for `d = 1..=S`.
    pub per_depth: Vec<T>,
    pub max_normalized_variance: T,
    pub tolerance: f64,
    pub support: Vec<usize>,
    pub passed: bool,
}

impl<T: Scalar> KwCertificate<T> {
    /// Normalized variance at `depth` (1-based).
    pub fn at(&self, depth: usize) -> &T {
        &self.per_depth[depth - 1]
    }

    /// Smallest depth attaining the maximum normalized variance.
    pub fn argmax(&self) -> usize {
        let mut best = 0;
        for (i, v) in self.per_depth.iter().enumerate() {
            if *v > self.per_depth[best] {
                best = i;
            }
        }
        best + 1
    }
}

/// A certified D-optimal invariant design.
#[derive(Debug, Clone, PartialEq)]
pub struct OptimalDesignResult {
    pub design: InvariantDesign<f64>,
    pub support: Vec<usize>,
    pub objective: f64,
    pub certificate: KwCertificate<f64>,
}

impl OptimalDesignResult {
    /// `(depth, weight)` for each support depth.
    pub fn support_weights(&self) -> Vec<(usize, f64)> {
        self.support
            .iter()
            .map(|&d| (d, self.design.weight(d)))
            .collect()
    }
}

fn argmax_exact(problem: &DesignProblem, f: impl Fn(&DesignProblem, usize) -> Rational) -> usize {
    let mut best = 1;
    let mut best_value = f(problem, 1);
    for d in 2..=problem.strength() {
        let value = f(problem, d);
        if value > best_value {
            best = d;
            best_value = value;
        }
    }
    best
}

/// Optimal depth for the main effects alone: always the full strength `S`.
pub fn optimal_depth_main(problem: &DesignProblem) -> usize {
    problem.strength()
}

/// Optimal depth for the first-order interactions alone,
/// `S - 1 - floor((S - 2) / v)`.
pub fn optimal_depth_first_order(problem: &DesignProblem) -> usize {
    let s = problem.strength();
    s - 1 - (s - 2) / problem.levels()
}

/// Exact maximiser of the first-order multiplier, smallest depth on ties.
pub fn argmax_first_order(problem: &DesignProblem) -> usize {
    argmax_exact(problem, h2)
}

/// Optimal depth for the second-order interactions alone: the exact
/// maximiser of the second-order multiplier, smallest depth on ties.
pub fn optimal_depth_second_order(problem: &DesignProblem) -> usize {
    argmax_exact(problem, h3)
}

/// Evaluates the equivalence-theorem condition for `design`.
pub fn kw_certificate<T: Scalar>(
    design: &InvariantDesign<T>,
    tolerance: f64,
) -> Result<KwCertificate<T>> {
    let problem = design.problem();
    let summary = info_summary(design);
    let p = T::from_int(problem.layout().total as i64);
    let per_depth = (1..=problem.strength())
        .map(|d| closed_form::variance_from_summary(problem, &summary, d).map(|v| v / p.clone()))
        .collect::<Result<Vec<T>>>()?;
    let max = per_depth
        .iter()
        .cloned()
        .reduce(|a, b| if b > a { b } else { a })
        .expect("strength is positive");
    let support = design.support();
    let tol = T::from_f64(tolerance);
    let upper_ok = max <= T::one() + tol.clone();
    let support_ok = support.iter().all(|&d| {
        let gap = per_depth[d - 1].clone() - T::one();
        gap <= tol.clone() && -gap <= tol.clone()
    });
    Ok(KwCertificate {
        per_depth,
        max_normalized_variance: max,
        tolerance,
        support,
        passed: upper_ok && support_ok,
    })
}

/// Multipliers of every depth, index 0 is depth 1.
struct DepthTable {
    layout: ParameterLayout,
    rows: Vec<InfoSummary<f64>>,
}

impl DepthTable {
    fn new(problem: &DesignProblem) -> Self {
        Self {
            layout: problem.layout(),
            rows: (1..=problem.strength())
                .map(|d| InfoSummary::for_depth(problem, d))
                .collect(),
        }
    }

    fn row(&self, depth: usize) -> &InfoSummary<f64> {
        &self.rows[depth - 1]
    }

    fn summary(&self, support: &[usize], weights: &[f64]) -> InfoSummary<f64> {
        let mut out = InfoSummary {
            main: 0.0,
            first_order: 0.0,
            second_order: 0.0,
        };
        for (&d, &w) in support.iter().zip(weights) {
            let h = self.row(d);
            out.main += w * h.main;
            out.first_order += w * h.first_order;
            out.second_order += w * h.second_order;
        }
        out
    }

    fn objective(&self, support: &[usize], weights: &[f64]) -> f64 {
        log_det_from_summary(&self.layout, &self.summary(support, weights))
    }

    /// Derivative of the objective when weight moves from depth `to` onto
    /// depth `from`, at the given mixture.
    fn slope(&self, support: &[usize], weights: &[f64], from: usize, to: usize) -> f64 {
        let h = self.summary(support, weights);
        let (a, b) = (self.row(from), self.row(to));
        let dims = [
            self.layout.main_effects as f64,
            self.layout.first_order as f64,
            self.layout.second_order as f64,
        ];
        let terms = [
            (a.main - b.main, h.main),
            (a.first_order - b.first_order, h.first_order),
            (a.second_order - b.second_order, h.second_order),
        ];
        dims.iter()
            .zip(terms)
            .filter(|(p, _)| **p > 0.0)
            .map(|(p, (diff, total))| p * diff / total)
            .sum()
    }
}

const BISECTION_STEPS: usize = 100;

/// Root of a decreasing function on `(lo, hi)`; returns an endpoint when the
/// sign does not change inside.
fn bisect_decreasing(lo: f64, hi: f64, f: impl Fn(f64) -> f64) -> f64 {
    let (mut a, mut b) = (lo, hi);
    for _ in 0..BISECTION_STEPS {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        if f(mid) > 0.0 {
            a = mid;
        } else {
            b = mid;
        }
    }
    0.5 * (a + b)
}

/// Maximiser over `x` of the objective on `{first, second}` with weights
/// `(x, 1 - x)`.
fn solve_pair(table: &DepthTable, first: usize, second: usize) -> f64 {
    bisect_decreasing(0.0, 1.0, |x| {
        table.slope(&[first, second], &[x, 1.0 - x], first, second)
    })
}

/// Maximiser of the objective on `{a, b, c}` with weights `(x, y, 1-x-y)`.
fn solve_triple(table: &DepthTable, a: usize, b: usize, c: usize) -> (f64, f64) {
    let support = [a, b, c];
    let inner = |x: f64| {
        let rest = 1.0 - x;
        bisect_decreasing(0.0, rest, |y| {
            table.slope(&support, &[x, y, rest - y], b, c)
        })
    };
    let x = bisect_decreasing(0.0, 1.0, |x| {
        let y = inner(x);
        table.slope(&support, &[x, y, 1.0 - x - y], a, c)
    });
    (x, inner(x))
}

/// Supports of the shape `{d}`, `{d, d+1}`, `{d, S}` and `{d, d+1, S}`.
pub fn candidate_supports(strength: usize) -> Vec<Vec<usize>> {
    let s = strength;
    let mut out: Vec<Vec<usize>> = Vec::new();
    for d in 1..=s {
        out.push(vec![d]);
        if d < s {
            out.push(vec![d, d + 1]);
        }
        if d + 1 < s {
            out.push(vec![d, s]);
            out.push(vec![d, d + 1, s]);
        }
    }
    out.sort();
    out.dedup();
    out
}

struct Candidate {
    support: Vec<usize>,
    weights: Vec<f64>,
    objective: f64,
}

fn solve_support(table: &DepthTable, support: &[usize]) -> Vec<f64> {
    match *support {
        [_] => vec![1.0],
        [a, b] => {
            let x = solve_pair(table, a, b);
            vec![x, 1.0 - x]
        }
        [a, b, c] => {
            let (x, y) = solve_triple(table, a, b, c);
            vec![x, y, 1.0 - x - y]
        }
        _ => unreachable!("candidate supports have at most three depths"),
    }
}

fn better(a: &Candidate, b: &Candidate) -> bool {
    let scale = a.objective.abs().max(b.objective.abs()).max(1.0);
    if (a.objective - b.objective).abs() <= 1e-13 * scale {
        a.support.cmp(&b.support) == Ordering::Less
    } else {
        a.objective > b.objective
    }
}

/// D-optimal invariant design for the full parameter vector.
///
/// Returns [`Error::CertificationFailed`] carrying the best design found when
/// no candidate passes the equivalence check.
pub fn optimize_full(
    problem: &DesignProblem,
    options: &SolverOptions,
) -> Result<OptimalDesignResult> {
    if options.weight_tolerance <= 0.0 || options.kw_tolerance <= 0.0 {
        return Err(Error::InvalidProblem("tolerances must be positive".into()));
    }
    let table = DepthTable::new(problem);
    let mut best: Option<Candidate> = None;
    for support in candidate_supports(problem.strength()) {
        let weights = solve_support(&table, &support);
        if weights
            .iter()
            .any(|w| w.is_nan() || *w < options.weight_tolerance)
        {
            continue;
        }
        let objective = table.objective(&support, &weights);
        if !objective.is_finite() {
            continue;
        }
        let candidate = Candidate {
            support,
            weights,
            objective,
        };
        if best.as_ref().is_none_or(|b| better(&candidate, b)) {
            best = Some(candidate);
        }
    }
    let best = best.ok_or_else(|| {
        Error::SingularDesign(format!("no nonsingular invariant design for {problem}"))
    })?;
    let pairs: Vec<(usize, f64)> = best
        .support
        .iter()
        .copied()
        .zip(best.weights.iter().copied())
        .collect();
    let design = normalized_design(*problem, &pairs)?;
    let certificate = kw_certificate(&design, options.kw_tolerance)?;
    let result = OptimalDesignResult {
        support: design.support(),
        design,
        objective: best.objective,
        certificate,
    };
    if result.certificate.passed {
        Ok(result)
    } else {
        Err(Error::CertificationFailed(Box::new(result)))
    }
}

fn normalized_design(
    problem: DesignProblem,
    pairs: &[(usize, f64)],
) -> Result<InvariantDesign<f64>> {
    let total: f64 = pairs.iter().map(|(_, w)| w).sum();
    let scaled: Vec<(usize, f64)> = pairs.iter().map(|&(d, w)| (d, w / total)).collect();
    InvariantDesign::from_pairs(problem, &scaled)
}
