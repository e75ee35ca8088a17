//! Effects-coded regression vectors and the partial-profile design region.
//!
//! A profile assigns every attribute a level in `1..=v`, or `0` when the
//! attribute is not shown. Its regression vector concatenates three blocks:
//! the marginal codes of all attributes, the Kronecker products of the codes
//! of every attribute pair `k < l`, and those of every triple `k < l < m`,
//! each block in lexicographic attribute order with row-major Kronecker
//! layout inside.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::problem::DesignProblem;

/// Effects code of one level: `e_i` for `i < v`, `-1` for `i = v`, and the
/// zero vector for an absent attribute (`level == 0`).
pub fn marginal_code(level: usize, levels: usize) -> Result<Vec<i32>> {
    if level > levels {
        return Err(Error::LevelOutOfRange { level, levels });
    }
    let mut code = vec![0; levels - 1];
    match level {
        0 => {}
        l if l == levels => code.iter_mut().for_each(|c| *c = -1),
        l => code[l - 1] = 1,
    }
    Ok(code)
}

/// Row-major Kronecker product of two integer vectors.
pub(crate) fn kron(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| x * y))
        .collect()
}

/// One alternative: a level per attribute, `0` for attributes not shown.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Profile {
    levels: Vec<usize>,
}

impl Profile {
    /// Validates that exactly `S` attributes are shown and every level is in range.
    pub fn new(problem: &DesignProblem, levels: Vec<usize>) -> Result<Self> {
        if levels.len() != problem.attributes() {
            return Err(Error::InvalidProfile(format!(
                "expected {} attribute levels, got {}",
                problem.attributes(),
                levels.len()
            )));
        }
        if let Some(&level) = levels.iter().find(|&&l| l > problem.levels()) {
            return Err(Error::LevelOutOfRange {
                level,
                levels: problem.levels(),
            });
        }
        let shown = levels.iter().filter(|&&l| l != 0).count();
        if shown != problem.strength() {
            return Err(Error::InvalidProfile(format!(
                "{shown} attributes shown, profile strength is {}",
                problem.strength()
            )));
        }
        Ok(Self { levels })
    }

    pub fn levels(&self) -> &[usize] {
        &self.levels
    }

    /// Indices (0-based) of the attributes shown in this profile.
    pub fn shown_attributes(&self) -> Vec<usize> {
        self.levels
            .iter()
            .enumerate()
            .filter(|(_, &l)| l != 0)
            .map(|(k, _)| k)
            .collect()
    }
}

/// An ordered pair of alternatives showing the same attributes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairedComparison {
    pub first: Profile,
    pub second: Profile,
}

impl PairedComparison {
    pub fn new(first: Profile, second: Profile) -> Result<Self> {
        if first.levels.len() != second.levels.len()
            || first
                .levels
                .iter()
                .zip(&second.levels)
                .any(|(a, b)| (*a == 0) != (*b == 0))
        {
            return Err(Error::InvalidProfile(
                "both alternatives must show the same attributes".into(),
            ));
        }
        Ok(Self { first, second })
    }

    /// Number of shown attributes whose levels differ.
    pub fn depth(&self) -> usize {
        self.first
            .levels
            .iter()
            .zip(&self.second.levels)
            .filter(|(a, b)| a != b)
            .count()
    }

    pub fn swapped(&self) -> Self {
        Self {
            first: self.second.clone(),
            second: self.first.clone(),
        }
    }
}

/// Integer regression coordinates in block order (main, pairs, triples).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RegressionVector(Vec<i32>);

impl RegressionVector {
    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn into_inner(self) -> Vec<i32> {
        self.0
    }
}

impl std::ops::Sub for &RegressionVector {
    type Output = RegressionVector;

    fn sub(self, rhs: Self) -> RegressionVector {
        RegressionVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

/// Regression vector of a single profile.
pub fn regression_vector(problem: &DesignProblem, profile: &Profile) -> RegressionVector {
    let v = problem.levels();
    let codes: Vec<Vec<i32>> = profile
        .levels
        .iter()
        .map(|&l| marginal_code(l, v).expect("profile levels are validated"))
        .collect();
    let k = codes.len();
    let mut out = Vec::with_capacity(problem.layout().total);
    for code in &codes {
        out.extend_from_slice(code);
    }
    for pair in (0..k).combinations(2) {
        out.extend(kron(&codes[pair[0]], &codes[pair[1]]));
    }
    for triple in (0..k).combinations(3) {
        let ab = kron(&codes[triple[0]], &codes[triple[1]]);
        out.extend(kron(&ab, &codes[triple[2]]));
    }
    RegressionVector(out)
}

/// `f(first) - f(second)` for a paired comparison.
pub fn difference_vector(problem: &DesignProblem, pair: &PairedComparison) -> RegressionVector {
    &regression_vector(problem, &pair.first) - &regression_vector(problem, &pair.second)
}

/// All ordered pairs of comparison depth `depth`, each exactly once.
///
/// Order is lexicographic in: the shown attribute subset, the levels of the
/// first alternative, the subset of differing attributes, and the levels of
/// the second alternative on those attributes.
pub fn enumerate_orbit(
    problem: &DesignProblem,
    depth: usize,
) -> Result<impl Iterator<Item = PairedComparison> + '_> {
    problem.check_depth(depth)?;
    Ok((0..problem.attributes())
        .combinations(problem.strength())
        .flat_map(move |subset| orbit_pairs_on_subset(problem, subset, depth)))
}

/// The part of a depth orbit whose alternatives show exactly `subset`.
///
/// Orbits split into these disjoint streams, one per attribute subset, which
/// may be consumed independently.
pub fn orbit_pairs_on_subset(
    problem: &DesignProblem,
    subset: Vec<usize>,
    depth: usize,
) -> impl Iterator<Item = PairedComparison> + '_ {
    let s = subset.len();
    let v = problem.levels();
    let k = problem.attributes();
    std::iter::repeat_n(1..=v, s)
        .multi_cartesian_product()
        .flat_map(move |first_levels| {
            let subset = subset.clone();
            (0..s).combinations(depth).flat_map(move |differing| {
                let subset = subset.clone();
                let first_levels = first_levels.clone();
                let choices: Vec<Vec<usize>> = differing
                    .iter()
                    .map(|&pos| (1..=v).filter(|&l| l != first_levels[pos]).collect())
                    .collect();
                choices
                    .into_iter()
                    .multi_cartesian_product()
                    .map(move |second_on_diff| {
                        let mut first = vec![0; k];
                        for (pos, &attr) in subset.iter().enumerate() {
                            first[attr] = first_levels[pos];
                        }
                        let mut second = first.clone();
                        for (&pos, level) in differing.iter().zip(second_on_diff) {
                            second[subset[pos]] = level;
                        }
                        PairedComparison {
                            first: Profile { levels: first },
                            second: Profile { levels: second },
                        }
                    })
            })
        })
}
