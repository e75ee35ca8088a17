//! Problem definition, parameter dimensions, depth orbits and invariant designs.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

/// `K` attributes, each shown at one of `v` levels, with `S` attributes shown
/// per alternative (`S = K` for full profiles).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DesignProblem {
    attributes: usize,
    strength: usize,
    levels: usize,
}

impl DesignProblem {
    /// A problem for the second-order interactions model: `3 <= S <= K`, `v >= 2`.
    pub fn new(attributes: usize, strength: usize, levels: usize) -> Result<Self> {
        if strength < 3 {
            return Err(Error::InvalidProblem(format!(
                "profile strength {strength} is below 3; second-order interactions are not identifiable"
            )));
        }
        Self::region(attributes, strength, levels)
    }

    /// A design region without the identifiability requirement `S >= 3`.
    ///
    /// Enumeration and the main-effects parts of the model are still well
    /// defined, so this is used for small illustrative regions such as a
    /// single attribute.
    pub fn region(attributes: usize, strength: usize, levels: usize) -> Result<Self> {
        if strength == 0 || strength > attributes {
            return Err(Error::InvalidProblem(format!(
                "profile strength {strength} must lie in 1..={attributes}"
            )));
        }
        if levels < 2 {
            return Err(Error::InvalidProblem(format!(
                "need at least 2 levels per attribute, got {levels}"
            )));
        }
        Ok(Self {
            attributes,
            strength,
            levels,
        })
    }

    pub fn attributes(&self) -> usize {
        self.attributes
    }

    pub fn strength(&self) -> usize {
        self.strength
    }

    pub fn levels(&self) -> usize {
        self.levels
    }

    pub fn is_full_profile(&self) -> bool {
        self.strength == self.attributes
    }

    pub fn layout(&self) -> ParameterLayout {
        ParameterLayout::new(self)
    }

    pub fn check_depth(&self, depth: usize) -> Result<()> {
        if depth > self.strength {
            Err(Error::DepthOutOfRange {
                depth,
                strength: self.strength,
            })
        } else {
            Ok(())
        }
    }

    /// Number of ordered pairs of comparison depth `depth`:
    /// `C(K,S) C(S,d) v^S (v-1)^d`.
    pub fn orbit_count(&self, depth: usize) -> Result<BigUint> {
        self.check_depth(depth)?;
        let v = BigUint::from(self.levels);
        Ok(binomial(self.attributes, self.strength)
            * binomial(self.strength, depth)
            * num_traits::pow(v.clone(), self.strength)
            * num_traits::pow(v - 1u32, depth))
    }

    pub fn orbit(&self, depth: usize) -> Result<DepthOrbit> {
        Ok(DepthOrbit {
            problem: *self,
            depth,
            count: self.orbit_count(depth)?,
        })
    }

    /// Number of ordered pairs in the whole design region, all depths included.
    pub fn region_size(&self) -> BigUint {
        (0..=self.strength)
            .map(|d| self.orbit_count(d).expect("depth in range"))
            .sum()
    }
}

impl std::fmt::Display for DesignProblem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "K={} S={} v={}",
            self.attributes, self.strength, self.levels
        )
    }
}

/// Binomial coefficient as a big integer; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

fn binomial_usize(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Dimensions of the three effect blocks of the parameter vector.
///
/// Block `r` collects the `r`-attribute terms: `C(K, r) (v-1)^r` coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParameterLayout {
    pub main_effects: usize,
    pub first_order: usize,
    pub second_order: usize,
    pub total: usize,
}

impl ParameterLayout {
    pub fn new(problem: &DesignProblem) -> Self {
        let k = problem.attributes();
        let m = problem.levels() - 1;
        let main_effects = k * m;
        let first_order = binomial_usize(k, 2) * m * m;
        let second_order = binomial_usize(k, 3) * m * m * m;
        Self {
            main_effects,
            first_order,
            second_order,
            total: main_effects + first_order + second_order,
        }
    }

    /// Dimension of the block of `order`-attribute terms (`order` in 1..=3).
    pub fn block(&self, order: usize) -> usize {
        match order {
            1 => self.main_effects,
            2 => self.first_order,
            3 => self.second_order,
            _ => 0,
        }
    }

    /// Offset of the first coordinate of block `order` in the regression vector.
    pub fn offset(&self, order: usize) -> usize {
        (1..order).map(|r| self.block(r)).sum()
    }
}

/// The set of pairs of one comparison depth together with its size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthOrbit {
    pub problem: DesignProblem,
    pub depth: usize,
    pub count: BigUint,
}

/// A design that is uniform on every depth orbit, stored as the mixing
/// weights `w_1, ..., w_S` of the uniform depth designs.
///
/// Exact designs use [`Rational`] weights; designs produced by the optimizer
/// use `f64`.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantDesign<T = f64> {
    problem: DesignProblem,
    weights: Vec<T>,
}

impl<T: Scalar> InvariantDesign<T> {
    /// Weights indexed by depth minus one. They must be non-negative and sum
    /// to one (exactly for rationals, within `1e-12` for floats).
    pub fn new(problem: DesignProblem, weights: Vec<T>) -> Result<Self> {
        if weights.len() != problem.strength() {
            return Err(Error::InvalidDesign(format!(
                "expected {} depth weights, got {}",
                problem.strength(),
                weights.len()
            )));
        }
        if let Some(d) = weights.iter().position(|w| *w < T::zero()) {
            return Err(Error::InvalidDesign(format!(
                "negative weight on depth {}",
                d + 1
            )));
        }
        let total = weights.iter().cloned().fold(T::zero(), |a, b| a + b);
        if !total.is_unit_total() {
            return Err(Error::InvalidDesign(format!(
                "weights sum to {:.15}, not 1",
                total.to_f64()
            )));
        }
        Ok(Self { problem, weights })
    }

    /// Weights given as `(depth, weight)` pairs; unlisted depths get zero.
    pub fn from_pairs(problem: DesignProblem, pairs: &[(usize, T)]) -> Result<Self> {
        let mut weights = vec![T::zero(); problem.strength()];
        for (depth, w) in pairs {
            if *depth == 0 || *depth > problem.strength() {
                return Err(Error::DepthOutOfRange {
                    depth: *depth,
                    strength: problem.strength(),
                });
            }
            weights[depth - 1] = weights[depth - 1].clone() + w.clone();
        }
        Self::new(problem, weights)
    }

    /// The uniform design on the pairs of depth `depth`.
    ///
    /// Depth 0 carries no information and is rejected.
    pub fn uniform(problem: DesignProblem, depth: usize) -> Result<Self> {
        problem.check_depth(depth)?;
        if depth == 0 {
            return Err(Error::InvalidDesign(
                "comparison depth 0 compares identical alternatives and carries no information"
                    .into(),
            ));
        }
        let mut weights = vec![T::zero(); problem.strength()];
        weights[depth - 1] = T::one();
        Ok(Self { problem, weights })
    }

    /// Convex combination `sum_i c_i * design_i` of designs for one problem.
    pub fn mixture(components: &[(T, &InvariantDesign<T>)]) -> Result<Self> {
        let (_, first) = components
            .first()
            .ok_or_else(|| Error::InvalidDesign("empty mixture".into()))?;
        let problem = first.problem;
        let mut weights = vec![T::zero(); problem.strength()];
        for (c, design) in components {
            if design.problem != problem {
                return Err(Error::InvalidDesign(
                    "mixture components belong to different problems".into(),
                ));
            }
            for (acc, w) in weights.iter_mut().zip(&design.weights) {
                *acc = acc.clone() + c.clone() * w.clone();
            }
        }
        Self::new(problem, weights)
    }

    pub fn problem(&self) -> &DesignProblem {
        &self.problem
    }

    /// Weight on `depth`; depth 0 and depths beyond `S` have weight zero.
    pub fn weight(&self, depth: usize) -> T {
        if depth == 0 {
            return T::zero();
        }
        self.weights.get(depth - 1).cloned().unwrap_or_else(T::zero)
    }

    /// `(depth, weight)` for every depth `1..=S`.
    pub fn weights(&self) -> impl Iterator<Item = (usize, &T)> + '_ {
        self.weights.iter().enumerate().map(|(i, w)| (i + 1, w))
    }

    /// Depths with strictly positive weight, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.weights()
            .filter(|(_, w)| w.is_positive())
            .map(|(d, _)| d)
            .collect()
    }

    pub fn to_f64(&self) -> InvariantDesign<f64> {
        InvariantDesign {
            problem: self.problem,
            weights: self.weights.iter().map(Scalar::to_f64).collect(),
        }
    }
}

impl InvariantDesign<f64> {
    /// Exact rational copy of a floating design.
    ///
    /// Every `f64` is a dyadic rational, so all but the last positive weight
    /// are carried over exactly and the last one absorbs the rounding
    /// residue so that the weights sum to one.
    pub fn to_rational(&self) -> Result<InvariantDesign<Rational>> {
        let mut weights: Vec<Rational> = self
            .weights
            .iter()
            .map(|w| crate::scalar::rational_from_f64(*w))
            .collect();
        let last = self
            .weights
            .iter()
            .rposition(|w| *w > 0.0)
            .ok_or_else(|| Error::InvalidDesign("design has no positive weight".into()))?;
        let rest: Rational = weights
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != last)
            .map(|(_, w)| w.clone())
            .sum();
        weights[last] = Rational::one() - rest;
        InvariantDesign::new(self.problem, weights)
    }
}
