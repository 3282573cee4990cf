//! Exact arithmetic: big integers, exact fractions, binomials, integer
//! powers with possibly negative exponents, and fraction-free
//! determinants.
//!
//! Every counting formula in this crate is evaluated through
//! [`BigFraction`] and converted back to a [`BigCount`] at the end. The
//! formulas contain factors like `n^(m-l-1)` whose exponent can be `-1`
//! at perfectly legal inputs; the product is still an integer after
//! cancellation, and the conversion asserts that.

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::Ratio;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision non-negative count.
pub type BigCount = BigUint;

/// Exact rational with positive denominator, kept in lowest terms.
pub type BigFraction = Ratio<BigInt>;

/// Binomial coefficient `C(n, k)`, zero when `k` is negative or exceeds `n`.
pub fn binomial(n: u64, k: i64) -> BigCount {
    if k < 0 || k as u64 > n {
        return BigCount::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigCount::one();
    for i in 1..=k {
        acc *= BigUint::from(n - k + i);
        // Exact: after multiplying i consecutive factors the product is
        // divisible by i!.
        acc /= BigUint::from(i);
    }
    acc
}

/// `base^exp` as an exact fraction, with `0^0 = 1`.
///
/// The zero-exponent convention makes every closed formula here correct
/// at boundary sizes, e.g. `(n+p)^(m-1) = 1` when `m = 1` and `n = p = 0`.
pub fn signed_power(base: u64, exp: i64) -> Result<BigFraction> {
    if exp == 0 {
        return Ok(BigFraction::one());
    }
    if base == 0 {
        if exp < 0 {
            return Err(Error::ZeroToNegativeExponent);
        }
        return Ok(BigFraction::zero());
    }
    let mag = BigUint::from(base).pow(exp.unsigned_abs());
    let mag = BigInt::from_biguint(Sign::Plus, mag);
    if exp > 0 {
        Ok(BigFraction::from_integer(mag))
    } else {
        Ok(BigFraction::new(BigInt::one(), mag))
    }
}

/// Multiplies the factors exactly and asserts the result is a
/// non-negative integer. The empty product is 1.
pub fn product_to_count(factors: &[BigFraction]) -> Result<BigCount> {
    let mut acc = BigFraction::one();
    for f in factors {
        acc *= f;
    }
    fraction_to_count(&acc)
}

/// Converts an exact fraction known to be a non-negative integer into a
/// count, failing loudly otherwise.
pub fn fraction_to_count(x: &BigFraction) -> Result<BigCount> {
    if !x.is_integer() {
        return Err(Error::NonIntegralProduct(x.to_string()));
    }
    let n = x.to_integer();
    if n.is_negative() {
        return Err(Error::NonIntegralProduct(n.to_string()));
    }
    Ok(n.to_biguint().expect("non-negative integer"))
}

/// Square matrix of arbitrary-precision integers, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(dim: usize) -> Self {
        IntMatrix {
            dim,
            data: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = IntMatrix::zero(dim);
        for i in 0..dim {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from rows of `i64` entries. Panics if the rows do
    /// not form a square matrix.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let dim = rows.len();
        let mut m = IntMatrix::zero(dim);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim, "matrix must be square");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(v));
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.dim + j] = v;
    }

    pub fn add_assign(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.dim + j] += v;
    }

    /// Deletes the given rows and the same-indexed columns, returning the
    /// principal submatrix on the remaining indices.
    pub fn delete_rows_cols(&self, drop: &[usize]) -> IntMatrix {
        let keep: Vec<usize> = (0..self.dim).filter(|i| !drop.contains(i)).collect();
        let mut out = IntMatrix::zero(keep.len());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    /// Adds the identity matrix in place.
    pub fn plus_identity(&self) -> IntMatrix {
        let mut out = self.clone();
        for i in 0..self.dim {
            let v = out.get(i, i) + 1;
            out.set(i, i, v);
        }
        out
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    ///
    /// Every intermediate division is exact, so intermediates stay
    /// integral and no larger than the minors they equal. On a zero
    /// pivot the first lower row with a nonzero entry in that column is
    /// swapped in and the sign flipped; if none exists the determinant
    /// is zero. The empty matrix has determinant 1.
    pub fn det_bareiss(&self) -> BigInt {
        let n = self.dim;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.data.clone();
        let at = |a: &Vec<BigInt>, i: usize, j: usize| a[i * n + j].clone();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if at(&a, k, k).is_zero() {
                match (k + 1..n).find(|&i| !at(&a, i, k).is_zero()) {
                    Some(swap) => {
                        for j in 0..n {
                            a.swap(k * n + j, swap * n + j);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = at(&a, i, j) * at(&a, k, k) - at(&a, i, k) * at(&a, k, j);
                    a[i * n + j] = num / &prev;
                }
                a[i * n + k] = BigInt::zero();
            }
            prev = at(&a, k, k);
        }
        let det = at(&a, n - 1, n - 1);
        if sign < 0 {
            -det
        } else {
            det
        }
    }
}
