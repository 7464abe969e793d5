//! Hilbert numerators of monomial quotients by pivot splitting.

use std::fmt;

use crate::algebra::Monomial;

/// Dense integer polynomial in `z`; `coeffs[k]` is the coefficient of `z^k`.
/// Trailing zeros are always trimmed, so the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<i64>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![1] }
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    /// `c * z^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// `(1 - z)^k`.
    pub fn one_minus_z_pow(k: usize) -> Self {
        let mut acc = IntPoly::one();
        let base = IntPoly::from_coeffs(vec![1, -1]);
        for _ in 0..k {
            acc = acc.mul(&base);
        }
        acc
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn neg(&self) -> IntPoly {
        Self::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        IntPoly { coeffs }
    }

    /// Exact quotient by `(1 - z)`, or `None` when `p(1) != 0`.
    pub fn div_one_minus_z(&self) -> Option<IntPoly> {
        if self.eval_one() != 0 {
            return None;
        }
        // p = (1 - z) q  <=>  q_k = sum_{i <= k} p_i
        let mut q = Vec::with_capacity(self.coeffs.len());
        let mut run = 0i64;
        for &c in self.coeffs.iter().take(self.coeffs.len().saturating_sub(1)) {
            run += c;
            q.push(run);
        }
        Some(Self::from_coeffs(q))
    }

    /// Removes every factor `(1 - z)`; returns the cofactor and the count.
    pub fn strip_one_minus_z(&self) -> (IntPoly, usize) {
        let mut p = self.clone();
        let mut k = 0;
        while !p.is_zero() {
            match p.div_one_minus_z() {
                Some(q) => {
                    p = q;
                    k += 1;
                }
                None => break,
            }
        }
        (p, k)
    }

    /// First `len` coefficients of the power series `self / (1 - z)^k`.
    pub fn series_coeffs(&self, k: usize, len: usize) -> Vec<i64> {
        let mut a: Vec<i64> = (0..len).map(|i| self.coeff(i)).collect();
        for _ in 0..k {
            for i in 1..len {
                a[i] += a[i - 1];
            }
        }
        a
    }

    /// Renders as e.g. `1 - 2z^2 + z^3` using variable name `var`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let (sign, abs) = if c < 0 { ("-", -c) } else { ("+", c) };
            if out.is_empty() {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(sign);
            }
            let body = match k {
                0 => abs.to_string(),
                1 => format!("{}{var}", if abs == 1 { String::new() } else { abs.to_string() }),
                _ => format!("{}{var}^{k}", if abs == 1 { String::new() } else { abs.to_string() }),
            };
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("z"))
    }
}

/// Drops generators divisible by another generator and duplicates.
pub(crate) fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator `N(z)` with `HS(R/J) = N(z) / (1 - z)^n` for the monomial ideal
/// `J` generated by `lead` in `n` standard-graded variables.
pub fn hilbert_numerator_monomial(lead: &[Monomial], n: usize) -> IntPoly {
    debug_assert!(lead.iter().all(|m| m.support_len() <= n));
    numerator(minimalize(lead.to_vec()))
}

fn numerator(gens: Vec<Monomial>) -> IntPoly {
    if gens.is_empty() {
        return IntPoly::one();
    }
    if gens.iter().any(|g| g.is_one()) {
        return IntPoly::zero();
    }
    // count occurrences per variable
    let mut count = [0usize; crate::algebra::MAX_VARS];
    for g in &gens {
        for (i, c) in count.iter_mut().enumerate() {
            if g.exp(i) > 0 {
                *c += 1;
            }
        }
    }
    let (var, &best) = count.iter().enumerate().max_by_key(|&(i, c)| (*c, std::cmp::Reverse(i))).unwrap();
    if best <= 1 {
        // pairwise coprime generators form a regular sequence
        return gens
            .iter()
            .fold(IntPoly::one(), |acc, g| acc.mul(&IntPoly::one().sub(&IntPoly::monomial(1, g.degree() as usize))));
    }
    let mut exps: Vec<u32> = gens.iter().map(|g| g.exp(var)).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let mut e = exps[exps.len() / 2];
    if let Some(pure) = gens.iter().find(|g| g.degree() == g.exp(var)) {
        e = e.min(pure.exp(var) - 1);
    }
    let pivot = Monomial::var_pow(var, e).expect("pivot exponent in range");

    let mut plus: Vec<Monomial> = gens.iter().copied().filter(|g| !pivot.divides(g)).collect();
    plus.push(pivot);
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let k = g.exp(var).min(e);
            g.with_exp(var, g.exp(var) - k).expect("smaller exponent")
        })
        .collect();
    let a = numerator(minimalize(plus));
    let b = numerator(minimalize(colon));
    a.add(&b.shift(e as usize))
}
