//! Dense matrices over exact rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Row-major integer entries.
    pub fn from_integers(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        Self {
            rows,
            cols,
            data: entries
                .iter()
                .map(|&x| Rational::from_integer(BigInt::from(x)))
                .collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn kron(&self, other: &Self) -> Self {
        Self::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            self.get(i / other.rows, j / other.cols) * other.get(i % other.rows, j % other.cols)
        })
    }

    /// `n`-fold Kronecker power; the 0-th power is the 1x1 identity.
    pub fn kron_power(&self, n: usize) -> Self {
        (0..n).fold(Self::identity(1), |acc, _| acc.kron(self))
    }

    pub fn submatrix(&self, row: usize, col: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| self.get(row + i, col + j).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// First entry (row-major) where the two matrices differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Some((self.rows.min(other.rows), self.cols.min(other.cols)));
        }
        self.data
            .iter()
            .zip(&other.data)
            .position(|(a, b)| a != b)
            .map(|idx| (idx / self.cols, idx % self.cols))
    }

    /// `x^T A x` for an integer vector.
    pub fn quadratic_form(&self, x: &[i32]) -> Rational {
        assert!(self.is_square() && x.len() == self.rows);
        let nz: Vec<usize> = (0..x.len()).filter(|&i| x[i] != 0).collect();
        let mut acc = Rational::zero();
        for &i in &nz {
            let mut row = Rational::zero();
            for &j in &nz {
                row += self.get(i, j) * Rational::from_integer(BigInt::from(x[j]));
            }
            acc += row * Rational::from_integer(BigInt::from(x[i]));
        }
        acc
    }

    /// Common denominator `D` and integer matrix `N` with `self = N / D`.
    pub fn integer_form(&self) -> (BigInt, Vec<BigInt>) {
        let denom = self
            .data
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let numer = self
            .data
            .iter()
            .map(|x| x.numer() * (&denom / x.denom()))
            .collect();
        (denom, numer)
    }

    /// Exact inverse by fraction-free Gauss-Jordan elimination.
    ///
    /// The matrix is scaled to integers and reduced alongside the identity.
    /// Every intermediate division is exact, so entries stay integral and
    /// their size is bounded by minors of the scaled matrix.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::SingularDesign(format!(
                "cannot invert a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let (denom, numer) = self.integer_form();
        let width = 2 * n;
        let mut a: Vec<BigInt> = Vec::with_capacity(n * width);
        for i in 0..n {
            a.extend_from_slice(&numer[i * n..(i + 1) * n]);
            a.extend((0..n).map(|j| {
                if i == j {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }));
        }
        let mut prev = BigInt::one();
        for k in 0..n {
            let pivot = (k..n)
                .find(|&r| !a[r * width + k].is_zero())
                .ok_or_else(|| Error::SingularDesign(format!("matrix has rank {k} < {n}")))?;
            if pivot != k {
                for j in 0..width {
                    a.swap(pivot * width + j, k * width + j);
                }
            }
            let pivot_row: Vec<BigInt> = a[k * width..(k + 1) * width].to_vec();
            let akk = pivot_row[k].clone();
            for i in (0..n).filter(|&i| i != k) {
                let aik = a[i * width + k].clone();
                for j in (0..width).filter(|&j| j != k) {
                    let idx = i * width + j;
                    let updated = &akk * &a[idx] - &aik * &pivot_row[j];
                    debug_assert!((&updated % &prev).is_zero());
                    a[idx] = updated / &prev;
                }
                a[i * width + k] = BigInt::zero();
            }
            prev = akk;
        }
        Ok(Self::from_fn(n, n, |i, j| {
            Rational::new(&a[i * width + n + j] * &denom, a[i * width + i].clone())
        }))
    }

    /// Positive semidefiniteness via symmetric-pivoted `L D L^T` elimination
    /// in exact arithmetic.
    pub fn is_positive_semidefinite(&self) -> bool {
        if !self.is_symmetric() {
            return false;
        }
        let n = self.rows;
        let mut a = self.data.clone();
        let mut order: Vec<usize> = (0..n).collect();
        for k in 0..n {
            // largest remaining diagonal as pivot
            let best = (k..n)
                .max_by(|&x, &y| a[order[x] * n + order[x]].cmp(&a[order[y] * n + order[y]]))
                .expect("non-empty range");
            order.swap(k, best);
            let p = order[k];
            let d = a[p * n + p].clone();
            if d.is_negative() {
                return false;
            }
            if d.is_zero() {
                // all remaining diagonals are <= 0 here; a PSD remainder must vanish
                return order[k..]
                    .iter()
                    .all(|&i| order[k..].iter().all(|&j| a[i * n + j].is_zero()));
            }
            for &i in &order[k + 1..] {
                let factor = &a[i * n + p] / &d;
                if factor.is_zero() {
                    continue;
                }
                for &j in &order[k + 1..] {
                    let delta = &factor * &a[p * n + j];
                    a[i * n + j] -= delta;
                }
            }
        }
        true
    }
}
