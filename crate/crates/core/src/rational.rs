//! Rational functions `N(t) / Π (1 - t^d)^e` and their power-series expansion.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::series::TruncatedSeries;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalForm {
    /// Coefficients of `N(t)`, constant term first.
    pub numerator: Vec<BigInt>,
    /// `(d, e)` stands for `(1 - t^d)^e`.
    pub denominator: Vec<(usize, usize)>,
}

impl RationalForm {
    pub fn new(numerator: Vec<BigInt>, denominator: Vec<(usize, usize)>) -> Self {
        assert!(denominator.iter().all(|&(d, _)| d > 0), "factor 1 - t^0 vanishes");
        RationalForm { numerator, denominator }
    }

    pub fn from_i64(numerator: &[i64], denominator: &[(usize, usize)]) -> Self {
        Self::new(numerator.iter().map(|&c| BigInt::from(c)).collect(), denominator.to_vec())
    }

    /// `Π 1/(1 - t^d)` over the given degrees.
    pub fn inverse_product(degrees: &[usize]) -> Self {
        let mut den: Vec<(usize, usize)> = Vec::new();
        for &d in degrees {
            match den.iter_mut().find(|(x, _)| *x == d) {
                Some(slot) => slot.1 += 1,
                None => den.push((d, 1)),
            }
        }
        den.sort_unstable();
        Self::new(alloc::vec![BigInt::one()], den)
    }
}

/// Expansion to degree `maxdeg` by geometric-series convolution.
pub fn expand_rational(r: &RationalForm, maxdeg: usize) -> TruncatedSeries {
    let coeffs: Vec<BigInt> = (0..=maxdeg).map(|d| r.numerator.get(d).cloned().unwrap_or_default()).collect();
    let numerator = TruncatedSeries::from_coeffs(coeffs);
    r.denominator.iter().fold(numerator, |s, &(d, e)| s.divide_by_cyclotomic_power(d, e))
}

impl fmt::Display for RationalForm {
    /// `(1 + t^3)/((1 - t)(1 - t^2)^2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nonzero: Vec<(usize, &BigInt)> = self.numerator.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        let wrap = nonzero.len() > 1;
        if wrap {
            write!(f, "(")?;
        }
        if nonzero.is_empty() {
            write!(f, "0")?;
        }
        for (i, (d, c)) in nonzero.iter().enumerate() {
            let neg = c.is_negative();
            if i > 0 {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            } else if neg {
                write!(f, "-")?;
            }
            let a = c.abs();
            match (*d, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{a}t")?,
                (_, true) => write!(f, "t^{d}")?,
                (_, false) => write!(f, "{a}t^{d}")?,
            }
        }
        if wrap {
            write!(f, ")")?;
        }
        if self.denominator.is_empty() {
            return Ok(());
        }
        write!(f, "/(")?;
        for &(d, e) in &self.denominator {
            if d == 1 {
                write!(f, "(1 - t)")?;
            } else {
                write!(f, "(1 - t^{d})")?;
            }
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        write!(f, ")")
    }
}
