use std::fmt;

use crate::error::{Error, Result};

/// Hard upper bound on the number of ring variables.
///
/// Exponent vectors live inline so that monomials are `Copy`; auxiliary
/// constructions (elimination, intersection) add variables on top of the
/// user's ring, so this leaves headroom above typical desk-scale rings.
pub const MAX_VARS: usize = 24;

/// Exponents must stay strictly below this value.
pub const MAX_EXPONENT: u32 = u16::MAX as u32;

/// A power product `x_0^e_0 ... x_{n-1}^e_{n-1}` with cached total degree.
///
/// Unused trailing slots are zero, so monomials from rings with fewer
/// variables compare and multiply consistently.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    degree: u32,
}

impl Default for Monomial {
    fn default() -> Self {
        Monomial::one()
    }
}

impl Monomial {
    #[inline]
    pub const fn one() -> Self {
        Monomial { exps: [0; MAX_VARS], degree: 0 }
    }

    pub fn var(i: usize) -> Result<Self> {
        Self::var_pow(i, 1)
    }

    pub fn var_pow(i: usize, e: u32) -> Result<Self> {
        if i >= MAX_VARS {
            return Err(Error::BadVariable(i));
        }
        if e >= MAX_EXPONENT {
            return Err(Error::DegreeOverflow { limit: MAX_EXPONENT });
        }
        let mut m = Monomial::one();
        m.exps[i] = e as u16;
        m.degree = e;
        Ok(m)
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::TooManyVariables { given: exps.len(), max: MAX_VARS });
        }
        let mut m = Monomial::one();
        for (i, &e) in exps.iter().enumerate() {
            if e >= MAX_EXPONENT {
                return Err(Error::DegreeOverflow { limit: MAX_EXPONENT });
            }
            m.exps[i] = e as u16;
            m.degree += e;
        }
        Ok(m)
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    #[inline]
    pub(crate) fn raw(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.exps[..nvars].iter().map(|&e| e as u32).collect()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Number of trailing variables that are identically zero is irrelevant;
    /// this reports the highest index carrying a nonzero exponent, plus one.
    pub fn support_len(&self) -> usize {
        self.exps.iter().rposition(|&e| e != 0).map_or(0, |i| i + 1)
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.degree > other.degree {
            return false;
        }
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// Product, failing on exponent overflow.
    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let mut out = Monomial::one();
        for i in 0..MAX_VARS {
            let e = self.exps[i] as u32 + other.exps[i] as u32;
            if e >= MAX_EXPONENT {
                return Err(Error::DegreeOverflow { limit: MAX_EXPONENT });
            }
            out.exps[i] = e as u16;
        }
        out.degree = self.degree + other.degree;
        Ok(out)
    }

    /// Product for callers that already know the result is representable
    /// (e.g. the product divides an existing monomial).
    #[inline]
    pub(crate) fn mul_unchecked(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] = out.exps[i].wrapping_add(other.exps[i]);
        }
        out.degree += other.degree;
        out
    }

    /// `self / other`; requires `other | self`.
    pub fn checked_div(&self, other: &Monomial) -> Result<Monomial> {
        if !other.divides(self) {
            return Err(Error::NotDivisible);
        }
        Ok(self.div_unchecked(other))
    }

    #[inline]
    pub(crate) fn div_unchecked(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] -= other.exps[i];
        }
        out.degree -= other.degree;
        out
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = Monomial::one();
        let mut d = 0u32;
        for i in 0..MAX_VARS {
            let e = self.exps[i].max(other.exps[i]);
            out.exps[i] = e;
            d += e as u32;
        }
        out.degree = d;
        out
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = Monomial::one();
        let mut d = 0u32;
        for i in 0..MAX_VARS {
            let e = self.exps[i].min(other.exps[i]);
            out.exps[i] = e;
            d += e as u32;
        }
        out.degree = d;
        out
    }

    #[inline]
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Replaces the exponent of variable `i`.
    pub fn with_exp(&self, i: usize, e: u32) -> Result<Monomial> {
        if i >= MAX_VARS {
            return Err(Error::BadVariable(i));
        }
        if e >= MAX_EXPONENT {
            return Err(Error::DegreeOverflow { limit: MAX_EXPONENT });
        }
        let mut out = *self;
        out.degree = out.degree - out.exps[i] as u32 + e;
        out.exps[i] = e as u16;
        Ok(out)
    }

    /// Applies a variable permutation: exponent of old variable `i` moves to
    /// slot `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        let mut out = Monomial::one();
        for (i, &j) in perm.iter().enumerate() {
            out.exps[j] = self.exps[i];
        }
        out.degree = self.degree;
        out
    }

    /// Shifts all exponents `k` slots to the right (used to prepend
    /// auxiliary variables).
    pub fn shifted_right(&self, k: usize) -> Result<Monomial> {
        if self.support_len() + k > MAX_VARS {
            return Err(Error::TooManyVariables { given: self.support_len() + k, max: MAX_VARS });
        }
        let mut out = Monomial::one();
        out.exps[k..].copy_from_slice(&self.exps[..MAX_VARS - k]);
        out.degree = self.degree;
        Ok(out)
    }

    /// Drops the first `k` slots; the caller guarantees they are zero.
    pub fn shifted_left(&self, k: usize) -> Monomial {
        let mut out = Monomial::one();
        out.exps[..MAX_VARS - k].copy_from_slice(&self.exps[k..]);
        out.degree = self.exps[k..].iter().map(|&e| e as u32).sum();
        out
    }

    /// Short divisibility signature: bit `b` of the block for variable `i`
    /// is set when `e_i > b`. If `a | m` then `mask(a) & !mask(m) == 0`.
    pub(crate) fn divmask(&self, nvars: usize) -> u64 {
        let nvars = nvars.max(1);
        let bits = (64 / nvars).max(1);
        let mut mask = 0u64;
        let mut pos = 0;
        for i in 0..nvars.min(64) {
            let e = self.exps[i] as usize;
            let set = e.min(bits);
            if set > 0 {
                mask |= ((1u64 << set) - 1) << pos;
            }
            pos += bits;
            if pos >= 64 {
                break;
            }
        }
        mask
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.support_len();
        write!(f, "Monomial{:?}", &self.exps[..n])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn lcm_is_componentwise_max() {
        assert_eq!(m(&[2, 1]).lcm(&m(&[1, 3])), m(&[2, 3]));
        assert_eq!(m(&[2, 1]).gcd(&m(&[1, 3])), m(&[1, 1]));
    }

    #[test]
    fn quotient_requires_divisibility() {
        assert_eq!(m(&[2, 3]).checked_div(&m(&[1, 1])).unwrap(), m(&[1, 2]));
        assert_eq!(m(&[2, 0]).checked_div(&m(&[0, 1])), Err(Error::NotDivisible));
    }

    #[test]
    fn overflow_is_reported() {
        let big = m(&[60000]);
        assert!(matches!(big.checked_mul(&big), Err(Error::DegreeOverflow { .. })));
    }

    #[test]
    fn divmask_is_sound() {
        let a = m(&[1, 2, 0]);
        let b = m(&[3, 2, 1]);
        assert!(a.divides(&b));
        assert_eq!(a.divmask(3) & !b.divmask(3), 0);
        assert!(!b.divides(&a));
    }

    #[test]
    fn shift_round_trip() {
        let a = m(&[1, 2, 3]);
        let s = a.shifted_right(2).unwrap();
        assert_eq!(s.exp(2), 1);
        assert_eq!(s.shifted_left(2), a);
    }
}
