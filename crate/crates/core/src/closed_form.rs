//! Closed-form information multipliers, variance function and D-criterion.
//!
//! For a design that is uniform on each depth orbit the information matrix is
//! block diagonal:
//!
//! ```text
//! M = diag( h1 * (I_K ⊗ M1),  h2 * (I_C(K,2) ⊗ M1 ⊗ M1),  h3 * (I_C(K,3) ⊗ M1 ⊗ M1 ⊗ M1) )
//! ```
//!
//! where `M1 = 2/(v-1) (I + 1 1^T)` is the information of the one-way layout.
//! The three scalars `h1, h2, h3` therefore carry everything the optimizer
//! needs. All functions here are generic over [`Scalar`] so the same formula
//! runs in exact rationals and in `f64`.

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::problem::{DesignProblem, InvariantDesign, ParameterLayout};
use crate::scalar::{Rational, Scalar};

/// The three effect blocks of the parameter vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EffectOrder {
    Main,
    FirstOrder,
    SecondOrder,
}

impl EffectOrder {
    pub const ALL: [EffectOrder; 3] = [Self::Main, Self::FirstOrder, Self::SecondOrder];

    /// Number of attributes involved in one term of this block.
    pub fn arity(self) -> usize {
        match self {
            Self::Main => 1,
            Self::FirstOrder => 2,
            Self::SecondOrder => 3,
        }
    }

    pub fn dimension(self, layout: &ParameterLayout) -> usize {
        layout.block(self.arity())
    }
}

fn int<T: Scalar>(n: usize) -> T {
    T::from_int(i64::try_from(n).expect("small integer"))
}

/// `2Sv - 2S - dv - v + 2`, the depth profile of the first-order multiplier.
pub fn first_order_profile<T: Scalar>(strength: usize, levels: usize, depth: usize) -> T {
    let (s, v, d): (T, T, T) = (int(strength), int(levels), int(depth));
    int::<T>(2) * s.clone() * v.clone() - int::<T>(2) * s - d * v.clone() - v + int(2)
}

/// The cubic depth polynomial of the second-order multiplier and variance.
pub fn lambda<T: Scalar>(strength: usize, levels: usize, depth: usize) -> T {
    let (s, v, d): (T, T, T) = (int(strength), int(levels), int(depth));
    let c = |n: i64| T::from_int(n);
    let s2 = s.clone() * s.clone();
    let v2 = v.clone() * v.clone();
    let d2 = d.clone() * d.clone();
    c(3) * s2.clone() + c(3) * s2.clone() * v2.clone()
        - c(6) * s2 * v.clone()
        - c(3) * s.clone() * d.clone() * v2.clone()
        + c(3) * s.clone() * d.clone() * v.clone()
        - c(6) * s.clone() * v2.clone()
        + c(15) * s.clone() * v.clone()
        - c(9) * s
        + d2 * v2.clone()
        + c(3) * d.clone() * v2.clone()
        - c(6) * d * v.clone()
        + c(2) * v2
        - c(6) * v
        + c(6)
}

/// Main-effects multiplier `d / K`.
pub fn h1<T: Scalar>(problem: &DesignProblem, depth: usize) -> T {
    int::<T>(depth) / int(problem.attributes())
}

/// First-order multiplier `d (2Sv - 2S - dv - v + 2) / (2 v K (K-1))`.
pub fn h2<T: Scalar>(problem: &DesignProblem, depth: usize) -> T {
    let k = problem.attributes();
    if k < 2 {
        return T::zero();
    }
    let v = problem.levels();
    int::<T>(depth) * first_order_profile(problem.strength(), v, depth) / int(2 * v * k * (k - 1))
}

/// Second-order multiplier `d lambda(d) / (4 v^2 K (K-1) (K-2))`.
pub fn h3<T: Scalar>(problem: &DesignProblem, depth: usize) -> T {
    let k = problem.attributes();
    if k < 3 {
        return T::zero();
    }
    let v = problem.levels();
    int::<T>(depth) * lambda(problem.strength(), v, depth) / int(4 * v * v * k * (k - 1) * (k - 2))
}

pub fn multiplier<T: Scalar>(problem: &DesignProblem, order: EffectOrder, depth: usize) -> T {
    match order {
        EffectOrder::Main => h1(problem, depth),
        EffectOrder::FirstOrder => h2(problem, depth),
        EffectOrder::SecondOrder => h3(problem, depth),
    }
}

/// Diagonal multipliers `(h1, h2, h3)` of an invariant design.
#[derive(Debug, Clone, PartialEq)]
pub struct InfoSummary<T = f64> {
    pub main: T,
    pub first_order: T,
    pub second_order: T,
}

impl<T: Scalar> InfoSummary<T> {
    /// Multipliers of the uniform design on one depth.
    pub fn for_depth(problem: &DesignProblem, depth: usize) -> Self {
        Self {
            main: h1(problem, depth),
            first_order: h2(problem, depth),
            second_order: h3(problem, depth),
        }
    }

    pub fn get(&self, order: EffectOrder) -> &T {
        match order {
            EffectOrder::Main => &self.main,
            EffectOrder::FirstOrder => &self.first_order,
            EffectOrder::SecondOrder => &self.second_order,
        }
    }

    /// Every non-empty block has a positive multiplier.
    pub fn is_nonsingular(&self, layout: &ParameterLayout) -> bool {
        EffectOrder::ALL
            .iter()
            .all(|&o| o.dimension(layout) == 0 || self.get(o).is_positive())
    }
}

/// `h_r(design) = sum_d w_d h_r(d)`.
pub fn info_summary<T: Scalar>(design: &InvariantDesign<T>) -> InfoSummary<T> {
    let problem = design.problem();
    let mut out = InfoSummary {
        main: T::zero(),
        first_order: T::zero(),
        second_order: T::zero(),
    };
    for (d, w) in design.weights() {
        if !w.is_positive() {
            continue;
        }
        let h = InfoSummary::<T>::for_depth(problem, d);
        out.main = out.main + w.clone() * h.main;
        out.first_order = out.first_order + w.clone() * h.first_order;
        out.second_order = out.second_order + w.clone() * h.second_order;
    }
    out
}

/// Variance function `V(d, design)`, constant on each depth orbit.
pub fn variance<T: Scalar>(design: &InvariantDesign<T>, depth: usize) -> Result<T> {
    variance_from_summary(design.problem(), &info_summary(design), depth)
}

/// Variance function from the multipliers of a design.
pub fn variance_from_summary<T: Scalar>(
    problem: &DesignProblem,
    summary: &InfoSummary<T>,
    depth: usize,
) -> Result<T> {
    problem.check_depth(depth)?;
    let layout = problem.layout();
    if !summary.is_nonsingular(&layout) {
        return Err(Error::SingularDesign(format!(
            "information multipliers ({:.6e}, {:.6e}, {:.6e}) for {problem}",
            summary.main.to_f64(),
            summary.first_order.to_f64(),
            summary.second_order.to_f64()
        )));
    }
    let s = problem.strength();
    let v = problem.levels();
    let vm1: T = int(v - 1);
    let mut inner = T::one() / summary.main.clone();
    if layout.first_order > 0 {
        inner = inner
            + vm1.clone() * first_order_profile::<T>(s, v, depth)
                / (int::<T>(4 * v) * summary.first_order.clone());
    }
    if layout.second_order > 0 {
        inner = inner
            + vm1.clone() * vm1.clone() * lambda::<T>(s, v, depth)
                / (int::<T>(24 * v * v) * summary.second_order.clone());
    }
    Ok(int::<T>(depth) * vm1 * inner)
}

/// Variance function of the uniform design on depth `design_depth`,
/// evaluated at `depth`, written through the block dimensions.
pub fn variance_single_depth<T: Scalar>(
    problem: &DesignProblem,
    depth: usize,
    design_depth: usize,
) -> Result<T> {
    problem.check_depth(depth)?;
    problem.check_depth(design_depth)?;
    let layout = problem.layout();
    let s = problem.strength();
    let v = problem.levels();
    let singular = || {
        Error::SingularDesign(format!(
            "uniform design on depth {design_depth} is singular for {problem}"
        ))
    };
    if design_depth == 0 {
        return Err(singular());
    }
    let mut bracket: T = int(layout.main_effects);
    if layout.first_order > 0 {
        let den: T = first_order_profile(s, v, design_depth);
        if !den.is_positive() {
            return Err(singular());
        }
        bracket = bracket + int::<T>(layout.first_order) * first_order_profile(s, v, depth) / den;
    }
    if layout.second_order > 0 {
        let den: T = lambda(s, v, design_depth);
        if !den.is_positive() {
            return Err(singular());
        }
        bracket = bracket + int::<T>(layout.second_order) * lambda(s, v, depth) / den;
    }
    Ok(int::<T>(depth) / int(design_depth) * bracket)
}

/// `p1 log h1 + p2 log h2 + p3 log h3`; `-inf` for singular designs.
///
/// This is `log det M(design)` up to an additive constant that does not
/// depend on the weights.
pub fn log_det_objective(design: &InvariantDesign<f64>) -> f64 {
    log_det_from_summary(&design.problem().layout(), &info_summary(design))
}

pub fn log_det_from_summary(layout: &ParameterLayout, summary: &InfoSummary<f64>) -> f64 {
    let mut acc = 0.0;
    for order in EffectOrder::ALL {
        let dim = order.dimension(layout);
        if dim == 0 {
            continue;
        }
        let h = *summary.get(order);
        if h <= 0.0 || !h.is_finite() {
            return f64::NEG_INFINITY;
        }
        acc += dim as f64 * h.ln();
    }
    acc
}

/// The one-way layout brick `M1 = 2/(v-1) (I + 1 1^T)` and its inverse
/// `(v-1)/2 (I - 1 1^T / v)`.
#[derive(Debug, Clone, PartialEq)]
pub struct OneWayBrick {
    pub levels: usize,
    pub matrix: RationalMatrix,
    pub inverse: RationalMatrix,
}

impl OneWayBrick {
    pub fn new(levels: usize) -> Self {
        assert!(levels >= 2, "a one-way layout needs at least two levels");
        let n = levels - 1;
        let v = i64::try_from(levels).expect("small level count");
        let scale = Rational::ratio(2, v - 1);
        let matrix = RationalMatrix::from_fn(n, n, |i, j| {
            if i == j {
                scale.clone() * Rational::from_int(2)
            } else {
                scale.clone()
            }
        });
        let half = Rational::ratio(v - 1, 2);
        let inverse = RationalMatrix::from_fn(n, n, |i, j| {
            let e = if i == j {
                Rational::ratio(v - 1, v)
            } else {
                Rational::ratio(-1, v)
            };
            half.clone() * e
        });
        Self {
            levels,
            matrix,
            inverse,
        }
    }
}

/// Full block-diagonal information matrix of an invariant design with the
/// given multipliers.
pub fn information_matrix(
    problem: &DesignProblem,
    summary: &InfoSummary<Rational>,
) -> RationalMatrix {
    let layout = problem.layout();
    let brick = OneWayBrick::new(problem.levels());
    let mut out = RationalMatrix::zeros(layout.total, layout.total);
    let mut offset = 0;
    for order in EffectOrder::ALL {
        let dim = order.dimension(&layout);
        if dim == 0 {
            continue;
        }
        let unit = brick
            .matrix
            .kron_power(order.arity())
            .scale(summary.get(order));
        let n = unit.rows();
        for copy in 0..dim / n {
            let base = offset + copy * n;
            for i in 0..n {
                for j in 0..n {
                    out.set(base + i, base + j, unit.get(i, j).clone());
                }
            }
        }
        offset += dim;
    }
    out
}
