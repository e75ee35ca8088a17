//! Brute-force verification in exact rational arithmetic.
//!
//! Information matrices are assembled pair by pair from integer difference
//! vectors and compared entrywise with the closed forms. Every quantity
//! involved is rational, so all comparisons are exact equalities.

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::closed_form::{self, EffectOrder, InfoSummary, OneWayBrick};
use crate::effects::{difference_vector, enumerate_orbit, marginal_code};
use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::problem::{binomial, DesignProblem, InvariantDesign};
use crate::scalar::{Rational, Scalar};

/// Default bound on the number of pairs an enumeration may visit.
pub const DEFAULT_CAP: u64 = 10_000_000;

/// Outcome of one oracle check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    /// Number of elementary comparisons performed.
    pub checked: u64,
    pub first_discrepancy: Option<String>,
}

impl CheckReport {
    fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed: true,
            checked: 0,
            first_discrepancy: None,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.passed {
            self.passed = false;
            self.first_discrepancy = Some(describe());
        }
    }
}

impl std::fmt::Display for CheckReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let status = if self.passed { "pass" } else { "FAIL" };
        write!(f, "{status} {} ({} checks)", self.name, self.checked)?;
        if let Some(d) = &self.first_discrepancy {
            write!(f, ": {d}")?;
        }
        Ok(())
    }
}

fn ensure_within_cap(pairs: &BigUint, cap: u64) -> Result<u64> {
    match pairs.to_u64() {
        Some(n) if n <= cap => Ok(n),
        _ => Err(Error::CapExceeded {
            pairs: pairs.clone(),
            cap,
        }),
    }
}

/// Integer Gram matrix `sum x x^T` over the difference vectors of one orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitGram {
    pub depth: usize,
    pub pairs: u64,
    pub dim: usize,
    pub entries: Vec<i64>,
}

impl OrbitGram {
    /// `G / N`, the information matrix of the uniform design on this orbit.
    pub fn uniform_information(&self) -> RationalMatrix {
        let m = RationalMatrix::from_integers(self.dim, self.dim, &self.entries);
        if self.pairs == 0 {
            return m;
        }
        m.scale(&Rational::ratio(1, self.pairs as i64))
    }
}

/// Enumerates orbit `depth` and accumulates its Gram matrix.
pub fn orbit_gram(problem: &DesignProblem, depth: usize, cap: u64) -> Result<OrbitGram> {
    let expected = ensure_within_cap(&problem.orbit_count(depth)?, cap)?;
    let dim = problem.layout().total;
    let mut entries = vec![0i64; dim * dim];
    let mut pairs = 0u64;
    let mut nz = Vec::with_capacity(dim);
    for pair in enumerate_orbit(problem, depth)? {
        let x = difference_vector(problem, &pair);
        let x = x.coords();
        nz.clear();
        nz.extend((0..dim).filter(|&i| x[i] != 0));
        for &i in &nz {
            let xi = i64::from(x[i]);
            let row = &mut entries[i * dim..(i + 1) * dim];
            for &j in &nz {
                row[j] += xi * i64::from(x[j]);
            }
        }
        pairs += 1;
    }
    debug_assert_eq!(pairs, expected);
    Ok(OrbitGram {
        depth,
        pairs,
        dim,
        entries,
    })
}

/// Information matrix of the uniform design on orbit `depth`, by enumeration.
/// Depth 0 yields the zero matrix.
pub fn uniform_information(
    problem: &DesignProblem,
    depth: usize,
    cap: u64,
) -> Result<RationalMatrix> {
    Ok(orbit_gram(problem, depth, cap)?.uniform_information())
}

fn pairs_on_support(design: &InvariantDesign<Rational>) -> Result<BigUint> {
    let problem = design.problem();
    let mut total = BigUint::zero();
    for d in design.support() {
        total += problem.orbit_count(d)?;
    }
    Ok(total)
}

/// `sum_{pairs} w(pair) x x^T` with weight `w_d / N_d` on orbit `d`.
pub fn enumerate_info_matrix(
    design: &InvariantDesign<Rational>,
    cap: u64,
) -> Result<RationalMatrix> {
    ensure_within_cap(&pairs_on_support(design)?, cap)?;
    let problem = design.problem();
    let dim = problem.layout().total;
    let mut out = RationalMatrix::zeros(dim, dim);
    for d in design.support() {
        let gram = orbit_gram(problem, d, cap)?;
        out = out.add(&gram.uniform_information().scale(&design.weight(d)));
    }
    Ok(out)
}

/// Compares the enumerated uniform information of orbit `depth` with the
/// block-diagonal closed form, entry by entry, and checks that it is
/// symmetric positive semidefinite.
pub fn check_block_information(
    problem: &DesignProblem,
    depth: usize,
    cap: u64,
) -> Result<CheckReport> {
    let enumerated = uniform_information(problem, depth, cap)?;
    let expected = closed_form::information_matrix(
        problem,
        &InfoSummary::<Rational>::for_depth(problem, depth),
    );
    let mut report = CheckReport::new(format!(
        "block-diagonal information, {problem}, depth {depth}"
    ));
    let layout = problem.layout();
    let block_name = |i: usize| {
        let mut start = 0;
        for order in EffectOrder::ALL {
            let dim = order.dimension(&layout);
            if i < start + dim {
                return format!("{order:?}");
            }
            start += dim;
        }
        "?".to_string()
    };
    for i in 0..enumerated.rows() {
        for j in 0..enumerated.cols() {
            let (got, want) = (enumerated.get(i, j), expected.get(i, j));
            report.record(got == want, || {
                format!(
                    "entry ({i}, {j}) [{} x {}]: enumerated {got}, closed form {want}",
                    block_name(i),
                    block_name(j)
                )
            });
        }
    }
    report.record(enumerated.is_positive_semidefinite(), || {
        "enumerated matrix is not symmetric positive semidefinite".into()
    });
    Ok(report)
}

/// Integer matrix with a common denominator, specialised to machine
/// integers when the entries are small.
enum ScaledInverse {
    Small { denom: BigInt, entries: Vec<i64> },
    Big { denom: BigInt, entries: Vec<BigInt> },
}

impl ScaledInverse {
    fn new(m: &RationalMatrix) -> Self {
        let (denom, entries) = m.integer_form();
        match entries
            .iter()
            .map(ToPrimitive::to_i64)
            .collect::<Option<Vec<i64>>>()
        {
            Some(small) => Self::Small {
                denom,
                entries: small,
            },
            None => Self::Big { denom, entries },
        }
    }

    /// `x^T A x` as an exact rational.
    fn quadratic_form(&self, dim: usize, x: &[i32], nz: &[usize]) -> Rational {
        match self {
            Self::Small { denom, entries } => {
                let mut acc: i128 = 0;
                for &i in nz {
                    let row = &entries[i * dim..(i + 1) * dim];
                    let mut s: i128 = 0;
                    for &j in nz {
                        s += i128::from(row[j]) * i128::from(x[j]);
                    }
                    acc += s * i128::from(x[i]);
                }
                Rational::new(BigInt::from(acc), denom.clone())
            }
            Self::Big { denom, entries } => {
                let mut acc = BigInt::zero();
                for &i in nz {
                    let mut s = BigInt::zero();
                    for &j in nz {
                        s += &entries[i * dim + j] * x[j];
                    }
                    acc += s * x[i];
                }
                Rational::new(acc, denom.clone())
            }
        }
    }
}

/// Pairwise variance values of one orbit.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbitVariance {
    pub depth: usize,
    pub pairs: u64,
    /// Value on the first pair of the orbit.
    pub value: Rational,
    /// Whether every pair of the orbit gave `value`.
    pub constant: bool,
}

/// `x^T M(design)^{-1} x` for every pair of the design region, grouped by
/// orbit, using the enumerated information matrix.
pub fn pairwise_variances(
    design: &InvariantDesign<Rational>,
    cap: u64,
) -> Result<Vec<OrbitVariance>> {
    let problem = design.problem();
    ensure_within_cap(&problem.region_size(), cap)?;
    let info = enumerate_info_matrix(design, cap)?;
    let inverse = ScaledInverse::new(&info.inverse()?);
    let dim = problem.layout().total;
    let mut out = Vec::with_capacity(problem.strength() + 1);
    let mut nz = Vec::with_capacity(dim);
    for d in 0..=problem.strength() {
        let mut first: Option<Rational> = None;
        let mut constant = true;
        let mut pairs = 0u64;
        for pair in enumerate_orbit(problem, d)? {
            let x = difference_vector(problem, &pair);
            let x = x.coords();
            nz.clear();
            nz.extend((0..dim).filter(|&i| x[i] != 0));
            let value = inverse.quadratic_form(dim, x, &nz);
            match &first {
                None => first = Some(value),
                Some(f) => constant &= *f == value,
            }
            pairs += 1;
        }
        out.push(OrbitVariance {
            depth: d,
            pairs,
            value: first.unwrap_or_else(Rational::zero),
            constant,
        });
    }
    Ok(out)
}

/// Checks that the pairwise variance function is constant on every orbit and
/// equals the closed form exactly.
pub fn check_variance_function(
    design: &InvariantDesign<Rational>,
    cap: u64,
) -> Result<CheckReport> {
    let problem = design.problem();
    let orbits = pairwise_variances(design, cap)?;
    let mut report = CheckReport::new(format!("variance function, {problem}"));
    for orbit in &orbits {
        report.record(orbit.constant, || {
            format!("variance not constant on depth {}", orbit.depth)
        });
        let closed = closed_form::variance(design, orbit.depth)?;
        report.record(closed == orbit.value, || {
            format!(
                "depth {}: enumerated {}, closed form {}",
                orbit.depth, orbit.value, closed
            )
        });
    }
    Ok(report)
}

/// Floating counterpart of [`check_variance_function`]: the design is
/// converted to exact rationals for the enumeration and the closed form is
/// evaluated in `f64`, compared with relative tolerance `1e-9`.
pub fn check_variance_function_float(
    design: &InvariantDesign<f64>,
    cap: u64,
) -> Result<CheckReport> {
    let problem = design.problem();
    let exact = design.to_rational()?;
    let orbits = pairwise_variances(&exact, cap)?;
    let mut report = CheckReport::new(format!("variance function (float), {problem}"));
    for orbit in &orbits {
        report.record(orbit.constant, || {
            format!("variance not constant on depth {}", orbit.depth)
        });
        let enumerated = Scalar::to_f64(&orbit.value);
        let closed = closed_form::variance(design, orbit.depth)?;
        let ok = (enumerated - closed).abs() <= 1e-9 * enumerated.abs().max(1.0);
        report.record(ok, || {
            format!(
                "depth {}: enumerated {enumerated}, closed form {closed}",
                orbit.depth
            )
        });
    }
    Ok(report)
}

/// Row-major Kronecker product of integer vectors.
fn kron(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| x * y))
        .collect()
}

fn codes(levels: usize) -> Vec<Vec<i64>> {
    (1..=levels)
        .map(|l| {
            marginal_code(l, levels)
                .expect("level in range")
                .into_iter()
                .map(i64::from)
                .collect()
        })
        .collect()
}

/// Which of the attributes of a level tuple differ between the two
/// alternatives.
fn differing(first: &[usize], second: &[usize]) -> usize {
    first.iter().zip(second).filter(|(a, b)| a != b).count()
}

/// All `(first, second)` level tuples on `arity` attributes.
fn level_tuples(levels: usize, arity: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let singles: Vec<Vec<usize>> = (0..arity).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|t| {
                (0..levels).map(move |l| {
                    let mut t = t.clone();
                    t.push(l);
                    t
                })
            })
            .collect()
    });
    singles
        .iter()
        .flat_map(|a| singles.iter().map(move |b| (a.clone(), b.clone())))
        .collect()
}

fn interaction_difference(codes: &[Vec<i64>], first: &[usize], second: &[usize]) -> Vec<i64> {
    let product = |t: &[usize]| {
        t.iter()
            .skip(1)
            .fold(codes[t[0]].clone(), |acc, &l| kron(&acc, &codes[l]))
    };
    let (a, b) = (product(first), product(second));
    a.iter().zip(&b).map(|(x, y)| x - y).collect()
}

/// Sums of `x x^T` over the level combinations of one attribute triple in
/// which all three, exactly the first two, or only the first attribute
/// differ, compared with the coefficients `v(v-1)^3/4` times
/// `(v^2-3v+3)`, `(v-2)` and `1` of `M1 ⊗ M1 ⊗ M1`.
pub fn check_appendix_sums(levels: usize) -> Result<CheckReport> {
    if !(2..=6).contains(&levels) {
        return Err(Error::InvalidProblem(format!(
            "triple-sum check supports 2..=6 levels, got {levels}"
        )));
    }
    let v = levels as i64;
    let dim = (levels - 1).pow(3);
    let codes = codes(levels);
    // patterns: which of (k, l, m) differ
    let patterns: [[bool; 3]; 3] = [
        [true, true, true],
        [true, true, false],
        [true, false, false],
    ];
    let mut sums = vec![vec![0i64; dim * dim]; 3];
    for (first, second) in level_tuples(levels, 3) {
        let diff = [
            first[0] != second[0],
            first[1] != second[1],
            first[2] != second[2],
        ];
        let Some(which) = patterns.iter().position(|p| *p == diff) else {
            continue;
        };
        let x = interaction_difference(&codes, &first, &second);
        let nz: Vec<usize> = (0..dim).filter(|&i| x[i] != 0).collect();
        let acc = &mut sums[which];
        for &i in &nz {
            for &j in &nz {
                acc[i * dim + j] += x[i] * x[j];
            }
        }
    }
    let base = OneWayBrick::new(levels).matrix.kron_power(3);
    let lead = v * (v - 1).pow(3);
    let coefficients = [
        Rational::ratio(lead * (v * v - 3 * v + 3), 4),
        Rational::ratio(lead * (v - 2), 4),
        Rational::ratio(lead, 4),
    ];
    let labels = ["three differing", "two differing", "one differing"];
    let mut report = CheckReport::new(format!("triple level sums, v={levels}"));
    for ((sum, coefficient), label) in sums.iter().zip(&coefficients).zip(labels) {
        let got = RationalMatrix::from_integers(dim, dim, sum);
        let want = base.scale(coefficient);
        report.record(got.is_symmetric(), || {
            format!("{label}: sum is not symmetric")
        });
        let diff = got.first_difference(&want);
        report.record(diff.is_none(), || {
            let (i, j) = diff.unwrap_or_default();
            format!(
                "{label}: entry ({i}, {j}) is {}, expected {coefficient} x {}",
                got.get(i, j),
                base.get(i, j)
            )
        });
    }
    Ok(report)
}

/// `(C ⊗ ... ⊗ C) x` for `C = vI - J`, applied one tensor mode at a time.
fn apply_centering(x: &[i64], levels: usize, arity: usize) -> Vec<i64> {
    let n = levels - 1;
    let v = levels as i64;
    let mut y = x.to_vec();
    for mode in 0..arity {
        let stride = n.pow((arity - 1 - mode) as u32);
        let block = stride * n;
        let mut next = vec![0i64; y.len()];
        for outer in (0..y.len()).step_by(block) {
            for inner in 0..stride {
                let fibre = |t: usize| outer + t * stride + inner;
                let total: i64 = (0..n).map(|t| y[fibre(t)]).sum();
                for t in 0..n {
                    next[fibre(t)] = v * y[fibre(t)] - total;
                }
            }
        }
        y = next;
    }
    y
}

/// Quadratic forms of interaction differences in the inverse one-way
/// information, for every level combination of one, two and three
/// attributes, grouped by how many attributes differ.
pub fn check_variance_elements(levels: usize) -> Result<CheckReport> {
    if !(2..=8).contains(&levels) {
        return Err(Error::InvalidProblem(format!(
            "quadratic-form check supports 2..=8 levels, got {levels}"
        )));
    }
    let v = levels as i64;
    let n = levels - 1;
    let mut report = CheckReport::new(format!("interaction quadratic forms, v={levels}"));

    // the structured inverse used below must be the inverse of the brick
    let brick = OneWayBrick::new(levels);
    let centering = RationalMatrix::from_fn(n, n, |i, j| {
        Rational::from_int(if i == j { v - 1 } else { -1 })
    });
    let factor = Rational::ratio(v - 1, 2 * v);
    report.record(brick.matrix.inverse()? == centering.scale(&factor), || {
        "one-way inverse is not (v-1)/(2v) (vI - J)".into()
    });

    let expected = |arity: usize, differ: usize| -> Rational {
        let vm = v - 1;
        match (arity, differ) {
            (1, 1) => Rational::from_int(vm),
            (2, 2) => Rational::ratio(vm * vm * (v - 2), 2 * v),
            (2, 1) => Rational::ratio(vm.pow(3), 2 * v),
            (3, 3) => Rational::ratio(vm.pow(3) * (v * v - 3 * v + 3), 4 * v * v),
            (3, 2) => Rational::ratio(vm.pow(4) * (v - 2), 4 * v * v),
            (3, 1) => Rational::ratio(vm.pow(5), 4 * v * v),
            _ => Rational::zero(),
        }
    };
    let codes = codes(levels);
    for arity in 1..=3 {
        let scale = (0..arity).fold(Rational::from_int(1), |acc, _| acc * factor.clone());
        for (first, second) in level_tuples(levels, arity) {
            let differ = differing(&first, &second);
            let x = interaction_difference(&codes, &first, &second);
            let y = apply_centering(&x, levels, arity);
            let raw: i64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
            let got = Rational::from_int(raw) * scale.clone();
            let want = expected(arity, differ);
            report.record(got == want, || {
                format!(
                    "{arity} attributes, levels {first:?} vs {second:?}: {got}, expected {want}"
                )
            });
        }
    }
    Ok(report)
}

/// Counts, by enumeration of each orbit, the pairs that show the first three
/// attributes with exactly `t` of them differing. Each level pattern on the
/// triple occurs `C(K-3,S-3) C(S-3,d-t) v^(S-3) (v-1)^(d-t)` times, and there
/// are `C(3,t) v^3 (v-1)^t` such patterns.
pub fn check_orbit_multiplicities(problem: &DesignProblem, cap: u64) -> Result<CheckReport> {
    let (k, s, v) = (problem.attributes(), problem.strength(), problem.levels());
    let mut report = CheckReport::new(format!("attribute-triple multiplicities, {problem}"));
    if k < 3 || s < 3 {
        return Ok(report);
    }
    ensure_within_cap(&problem.region_size(), cap)?;
    let pow = |b: usize, e: usize| BigUint::from(b).pow(e as u32);
    for d in 0..=s {
        let mut counts = [0u64; 4];
        for pair in enumerate_orbit(problem, d)? {
            let (a, b) = (pair.first.levels(), pair.second.levels());
            if a[..3].contains(&0) {
                continue;
            }
            counts[differing(&a[..3], &b[..3])] += 1;
        }
        for (t, &count) in counts.iter().enumerate().skip(1) {
            let per_pattern = if d >= t && d - t <= s - 3 {
                binomial(k - 3, s - 3) * binomial(s - 3, d - t) * pow(v, s - 3) * pow(v - 1, d - t)
            } else {
                BigUint::zero()
            };
            let want = per_pattern * binomial(3, t) * pow(v, 3) * pow(v - 1, t);
            let got = BigUint::from(count);
            report.record(got == want, || {
                format!("depth {d}, {t} of 3 differing: counted {got}, expected {want}")
            });
        }
    }
    Ok(report)
}

/// Sanity: information of a design is the weighted sum of uniform orbit
/// informations, which in turn is linear in the closed-form multipliers.
pub fn check_information_linearity(
    design: &InvariantDesign<Rational>,
    cap: u64,
) -> Result<CheckReport> {
    let problem = design.problem();
    let enumerated = enumerate_info_matrix(design, cap)?;
    let expected = closed_form::information_matrix(problem, &closed_form::info_summary(design));
    let mut report = CheckReport::new(format!("design information, {problem}"));
    let diff = enumerated.first_difference(&expected);
    report.record(diff.is_none(), || {
        let (i, j) = diff.unwrap_or_default();
        format!(
            "entry ({i}, {j}): enumerated {}, closed form {}",
            enumerated.get(i, j),
            expected.get(i, j)
        )
    });
    Ok(report)
}
