use std::fmt;

use crate::groebner::IntPoly;

/// A power series `N(z) / (1 - z)^k` with integer numerator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalSeries {
    numerator: IntPoly,
    denom_exp: usize,
}

impl RationalSeries {
    pub fn new(numerator: IntPoly, denom_exp: usize) -> Self {
        RationalSeries { numerator, denom_exp }
    }

    pub fn zero() -> Self {
        RationalSeries { numerator: IntPoly::zero(), denom_exp: 0 }
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.numerator
    }

    pub fn denom_exp(&self) -> usize {
        self.denom_exp
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// True when `N(1) != 0`, or the series is zero with exponent 0.
    pub fn is_normalized(&self) -> bool {
        if self.numerator.is_zero() {
            self.denom_exp == 0
        } else {
            self.numerator.eval_one() != 0
        }
    }

    /// Cancels common `(1 - z)` factors. Never raises the exponent.
    pub fn normalized(&self) -> RationalSeries {
        if self.numerator.is_zero() {
            return RationalSeries::zero();
        }
        let mut num = self.numerator.clone();
        let mut k = self.denom_exp;
        while k > 0 {
            match num.div_one_minus_z() {
                Some(q) => {
                    num = q;
                    k -= 1;
                }
                None => break,
            }
        }
        RationalSeries { numerator: num, denom_exp: k }
    }

    /// Order of the pole at `z = 1` (Krull dimension for a Hilbert series);
    /// `None` for the zero series.
    pub fn pole_order(&self) -> Option<usize> {
        let n = self.normalized();
        if n.is_zero() {
            None
        } else {
            Some(n.denom_exp)
        }
    }

    /// Coefficients of `z^0 .. z^(len-1)`.
    pub fn expand(&self, len: usize) -> Vec<i64> {
        self.numerator.series_coeffs(self.denom_exp, len)
    }

    /// Same series written over `(1 - z)^k`, `k >= denom_exp`.
    pub fn with_denom_exp(&self, k: usize) -> Option<RationalSeries> {
        let extra = k.checked_sub(self.denom_exp)?;
        Some(RationalSeries { numerator: self.numerator.mul(&IntPoly::one_minus_z_pow(extra)), denom_exp: k })
    }
}

impl fmt::Display for RationalSeries {
    /// Renders as `(z+z^2)/(1-z)^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.numerator.render("z");
        let multi = self.numerator.coeffs().iter().filter(|&&c| c != 0).count() > 1;
        let num = if multi && self.denom_exp > 0 { format!("({num})") } else { num };
        match self.denom_exp {
            0 => write!(f, "{num}"),
            1 => write!(f, "{num}/(1-z)"),
            k => write!(f, "{num}/(1-z)^{k}"),
        }
    }
}

impl fmt::Debug for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
