//! Truncated formal power series over arbitrary-precision integers.
//!
//! A [`Series`] holds the coefficients of `c_0 + c_1 q + ... + c_N q^N` for a
//! fixed truncation order `N`. All arithmetic is exact; multiplication is the
//! Cauchy product with every term of exponent above `N` discarded.
//!
//! The truncation order is part of the value. Binary operations require both
//! operands to have the same order and panic otherwise: mixing orders is a
//! caller bug, and silently re-truncating would mask exactly the kind of
//! coefficient mistakes this crate exists to catch. Use [`Series::truncate`]
//! when a lower order is actually wanted.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    /// Series inversion needs constant term exactly 1 to stay in integer
    /// coefficients.
    #[error("series inverse requires constant term 1, found {found}")]
    NonUnitConstant { found: BigInt },
}

/// A formal power series in `q`, truncated at `q^N`, with exact integer
/// coefficients. Immutable after construction; all operations return new
/// values, so sharing across threads is safe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    /// Always `trunc_order + 1` entries; index i holds the coefficient of q^i.
    coeffs: Vec<BigInt>,
}

impl Series {
    /// The zero series of truncation order `order`.
    pub fn zero(order: usize) -> Series {
        Series {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Series {
        Series::monomial(1, 0, order)
    }

    /// The series `c * q^exp`. An exponent above `order` yields zero.
    pub fn monomial(c: impl Into<BigInt>, exp: usize, order: usize) -> Series {
        let mut s = Series::zero(order);
        if exp <= order {
            s.coeffs[exp] = c.into();
        }
        s
    }

    /// Build from an explicit coefficient vector; the order is `len - 1`.
    ///
    /// Panics if `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Series {
        assert!(!coeffs.is_empty(), "a series needs at least a constant term");
        Series { coeffs }
    }

    pub fn trunc_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^n`. Panics if `n` exceeds the truncation order.
    pub fn coeff(&self, n: usize) -> &BigInt {
        assert!(
            n <= self.trunc_order(),
            "coefficient index {} out of range 0..={}",
            n,
            self.trunc_order()
        );
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn assert_same_order(&self, other: &Series) {
        assert_eq!(
            self.trunc_order(),
            other.trunc_order(),
            "truncation order mismatch: {} vs {}",
            self.trunc_order(),
            other.trunc_order()
        );
    }

    pub fn add(&self, other: &Series) -> Series {
        self.assert_same_order(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Series { coeffs }
    }

    pub fn sub(&self, other: &Series) -> Series {
        self.assert_same_order(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Series { coeffs }
    }

    pub fn neg(&self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Series) -> Series {
        self.assert_same_order(other);
        self.mul_truncated(other, self.trunc_order())
    }

    /// Cauchy product truncated at `order`, which must not exceed either
    /// operand's order. Cheaper than `mul` followed by `truncate` when only
    /// a low-order slice of the product is needed.
    pub fn mul_truncated(&self, other: &Series, order: usize) -> Series {
        assert!(order <= self.trunc_order() && order <= other.trunc_order());
        let mut out = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (b, o) in other.coeffs[..=(order - i)].iter().zip(out[i..].iter_mut()) {
                if !b.is_zero() {
                    *o += a * b;
                }
            }
        }
        Series { coeffs: out }
    }

    /// Multiply by `q^exp`, discarding everything pushed past the order.
    pub fn shift(&self, exp: usize) -> Series {
        let order = self.trunc_order();
        let mut out = Series::zero(order);
        if exp <= order {
            for i in exp..=order {
                out.coeffs[i] = self.coeffs[i - exp].clone();
            }
        }
        out
    }

    /// Re-truncate to a lower (or equal) order.
    pub fn truncate(&self, order: usize) -> Series {
        assert!(order <= self.trunc_order());
        Series {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Substitute `q -> q^m`, keeping the same truncation order.
    pub fn dilate(&self, m: usize) -> Series {
        assert!(m >= 1);
        let order = self.trunc_order();
        let mut out = Series::zero(order);
        for i in 0..=order / m {
            out.coeffs[m * i] = self.coeffs[i].clone();
        }
        out
    }

    /// Extract the coefficients at exponents `r, m+r, 2m+r, ...` as a series
    /// of order `(N - r) / m`: the q^(mi+r) coefficient becomes coefficient i.
    pub fn sift(&self, m: usize, r: usize) -> Series {
        assert!(m >= 1 && r < m);
        assert!(r <= self.trunc_order());
        let out_order = (self.trunc_order() - r) / m;
        let coeffs = (0..=out_order).map(|i| self.coeffs[m * i + r].clone()).collect();
        Series { coeffs }
    }

    /// Substitute `q -> -q`: negate every odd-exponent coefficient.
    pub fn alternate(&self) -> Series {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        Series { coeffs }
    }

    /// Multiplicative inverse, defined only when the constant term is 1.
    ///
    /// Uses the linear recurrence b_0 = 1, b_n = -sum_{i=1..n} a_i b_{n-i};
    /// zero coefficients of `self` are skipped, so sparse inputs (theta
    /// series, Pochhammer products) invert in far fewer operations.
    pub fn inverse(&self) -> Result<Series, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::NonUnitConstant {
                found: self.coeffs[0].clone(),
            });
        }
        let order = self.trunc_order();
        let support: Vec<usize> = (1..=order).filter(|&i| !self.coeffs[i].is_zero()).collect();
        let mut out = vec![BigInt::zero(); order + 1];
        out[0] = BigInt::one();
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for &i in support.iter().take_while(|&&i| i <= n) {
                acc += &self.coeffs[i] * &out[n - i];
            }
            out[n] = -acc;
        }
        Ok(Series { coeffs: out })
    }

    /// Exact division by `(1 - q^m)`: c_i = a_i + c_{i-m}.
    pub fn div_one_minus(&self, m: usize) -> Series {
        assert!(m >= 1);
        let mut coeffs = self.coeffs.clone();
        for i in m..coeffs.len() {
            let prev = coeffs[i - m].clone();
            coeffs[i] += prev;
        }
        Series { coeffs }
    }

    /// Exact division by `(1 + q^m)`: c_i = a_i - c_{i-m}.
    pub fn div_one_plus(&self, m: usize) -> Series {
        assert!(m >= 1);
        let mut coeffs = self.coeffs.clone();
        for i in m..coeffs.len() {
            let prev = coeffs[i - m].clone();
            coeffs[i] -= prev;
        }
        Series { coeffs }
    }

    /// Sum of all coefficients, i.e. the value at q = 1 of the truncated
    /// polynomial.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// True if every coefficient is >= 0.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        Series::add(self, rhs)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        Series::sub(self, rhs)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        Series::mul(self, rhs)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series::neg(self)
    }
}

#[cfg(test)]
pub(crate) fn series_from_i64(coeffs: &[i64]) -> Series {
    Series::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
}
