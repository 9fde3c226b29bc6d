//! Power series in `t` truncated at a fixed degree.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// `Σ_{d ≤ maxdeg} c_d t^d` with exact integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(maxdeg: usize) -> Self {
        TruncatedSeries { coeffs: vec![BigInt::zero(); maxdeg + 1] }
    }

    pub fn one(maxdeg: usize) -> Self {
        let mut s = Self::zero(maxdeg);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Takes the coefficients `c_0, …, c_maxdeg`. Panics on an empty vector.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series has at least the constant term");
        TruncatedSeries { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn maxdeg(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, d: usize) -> &BigInt {
        &self.coeffs[d]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn set(&mut self, d: usize, c: BigInt) {
        self.coeffs[d] = c;
    }

    /// Adds `c t^d`; terms above the truncation degree are dropped.
    pub fn add_term(&mut self, d: usize, c: &BigInt) {
        if d <= self.maxdeg() {
            self.coeffs[d] += c;
        }
    }

    pub fn truncate(&self, maxdeg: usize) -> Self {
        assert!(maxdeg <= self.maxdeg());
        TruncatedSeries { coeffs: self.coeffs[..=maxdeg].to_vec() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let m = self.maxdeg().min(other.maxdeg());
        TruncatedSeries { coeffs: (0..=m).map(|d| &self.coeffs[d] + &other.coeffs[d]).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let m = self.maxdeg().min(other.maxdeg());
        let mut out = Self::zero(m);
        for (i, a) in self.coeffs.iter().enumerate().take(m + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(m + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    /// Multiplication by `(1 - t)`.
    pub fn first_difference(&self) -> Self {
        let mut out = self.clone();
        for d in (1..out.coeffs.len()).rev() {
            out.coeffs[d] = &self.coeffs[d] - &self.coeffs[d - 1];
        }
        out
    }

    /// Multiplication by `1 / (1 - t^d)^e`.
    pub fn divide_by_cyclotomic_power(&self, d: usize, e: usize) -> Self {
        assert!(d > 0);
        let mut out = self.clone();
        for _ in 0..e {
            for k in d..out.coeffs.len() {
                let prev = out.coeffs[k - d].clone();
                out.coeffs[k] += prev;
            }
        }
        out
    }

    /// Degree of the last nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn to_text(&self) -> String {
        alloc::format!("{self}")
    }
}

impl fmt::Display for TruncatedSeries {
    /// `1 + 2t + t^3 + O(t^4)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let a = c.abs();
            match (d, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{a}t")?,
                (_, true) => write!(f, "t^{d}")?,
                (_, false) => write!(f, "{a}t^{d}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.coeffs.len())
    }
}
