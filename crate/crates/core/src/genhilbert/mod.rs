//! Generalized Hilbert-Samuel functions of `I` on `M = R/A`.
//!
//! `ε(t) = λ(Γ_m(I^t M / I^{t+1} M))`, its running sum `H(t)`, the series
//! `Σ H(t) z^t = h(z)/(1-z)^{r+1}` and the coefficients `j_0, ..., j_d` of the
//! generalized Hilbert-Samuel polynomial.

mod residual;
mod spread;

use std::sync::Mutex;

pub use residual::{
    classical_consistency, epsilon0_epsilon1, residual_series, section, ClassicalReport, EpsilonReport, ResidualData,
};
pub use spread::{analytic_spread, analytic_spread_on, minimal_reduction, MinimalReduction};

use crate::algebra::GeneralElements;
use crate::error::{Error, Result};
use crate::groebner::IntPoly;
use crate::ideals::{alternating_length, saturate_maximal, Ideal, RationalSeries};

/// A cyclic module `M = R/A` together with the ideal `I`.
#[derive(Debug, Clone)]
pub struct ModuleSpec {
    pub a: Ideal,
    pub i: Ideal,
    /// `dim R/A`.
    pub d: usize,
    /// General elements already factored into `a`, oldest first.
    pub sections: Vec<GeneralElements>,
}

impl ModuleSpec {
    pub fn new(a: Ideal, i: Ideal) -> Result<ModuleSpec> {
        a.check_ring(&i)?;
        if !a.is_homogeneous() || !i.is_homogeneous() {
            return Err(Error::NonHomogeneous);
        }
        let d = a.dimension()?.ok_or_else(|| Error::InvalidArgument("R/A is the zero module".into()))?;
        Ok(ModuleSpec { a, i, d, sections: Vec::new() })
    }

    /// `M = R`.
    pub fn on_ring(i: Ideal) -> Result<ModuleSpec> {
        let a = Ideal::zero(i.ring());
        ModuleSpec::new(a, i)
    }
}

/// Lazily built chain `L_t = I^t + A`, each with cached bases.
pub(crate) struct Tower {
    i: Ideal,
    a: Ideal,
    levels: Mutex<Vec<Ideal>>,
}

impl Tower {
    pub fn new(spec: &ModuleSpec) -> Tower {
        Tower::from_parts(spec.i.clone(), spec.a.clone())
    }

    pub fn from_parts(i: Ideal, a: Ideal) -> Tower {
        Tower { i, a, levels: Mutex::new(Vec::new()) }
    }

    /// `I^t + A`.
    pub fn level(&self, t: usize) -> Result<Ideal> {
        let mut levels = self.levels.lock().expect("tower lock");
        while levels.len() <= t {
            let t = levels.len();
            let next = if t == 0 {
                Ideal::unit(self.a.ring())
            } else if self.a.is_zero() {
                self.i.power(t as u32)?
            } else if t == 1 {
                self.i.sum(&self.a)?.interreduced()?
            } else {
                levels[t - 1].product(&self.i)?.sum(&self.a)?.interreduced()?
            };
            levels.push(next);
        }
        Ok(levels[t].clone())
    }

    /// `ε(t) = λ((S ∩ U)/J)` with `J = I^{t+1}+A`, `U = I^t+A`, `S = J : m^∞`,
    /// evaluated as `HS(J) - HS(S) - HS(U) + HS(S+U)` at `z = 1`.
    pub fn gamma(&self, t: usize) -> Result<u64> {
        let j = self.level(t + 1)?;
        let u = self.level(t)?;
        let s = saturate_maximal(&j)?;
        let su = s.sum(&u)?;
        let hj = j.hilbert_series()?;
        let hs = s.hilbert_series()?;
        let hu = u.hilbert_series()?;
        let hsu = su.hilbert_series()?;
        let p = alternating_length(&[(1, &hj), (-1, &hs), (-1, &hu), (1, &hsu)])?;
        let v = p.eval_one();
        if v < 0 {
            return Err(Error::NotContained("negative torsion length".into()));
        }
        Ok(v as u64)
    }
}

/// `λ(Γ_m(I^t M / I^{t+1} M))`.
pub fn gamma_length(spec: &ModuleSpec, t: usize) -> Result<u64> {
    Tower::new(spec).gamma(t)
}

/// Everything computed about `H(t)` up to `t_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralizedHilbertData {
    pub epsilon: Vec<u64>,
    pub cumulative: Vec<u64>,
    /// `h(z)/(1-z)^{d+1}` as fitted, before cancelling `(1-z)` factors.
    pub raw: Option<RationalSeries>,
    /// Normalized series `h(z)/(1-z)^{r+1}`.
    pub series: Option<RationalSeries>,
    /// `dim W`, or `None` when `W = 0`.
    pub r: Option<usize>,
    pub j_coeffs: Option<Vec<i64>>,
    pub d: usize,
    /// First `t` from which `H` agrees with its polynomial.
    pub stabilization_degree: Option<usize>,
    /// Indices on which the vanishing of `Δ^{d+1} H` certified the fit.
    pub fit_window: (usize, usize),
}

impl GeneralizedHilbertData {
    pub fn is_stable(&self) -> bool {
        self.series.is_some()
    }
}

/// Fits `Σ_{t ≤ t_max} H(t) z^t` to `N(z)/(1-z)^{k}`, requiring the
/// last `window` coefficients of the product with `(1-z)^k` to vanish.
pub(crate) fn fit_series(values: &[i64], k: usize, window: usize) -> Option<RationalSeries> {
    if values.len() < window + 1 {
        return None;
    }
    let truncated = IntPoly::from_coeffs(values.to_vec()).mul(&IntPoly::one_minus_z_pow(k));
    let n = values.len();
    if (n - window..n).any(|i| truncated.coeff(i) != 0) {
        return None;
    }
    let num: Vec<i64> = (0..n - window).map(|i| truncated.coeff(i)).collect();
    Some(RationalSeries::new(IntPoly::from_coeffs(num), k))
}

/// Computes `ε(0..=t_max)` and fits the generalized Hilbert-Samuel series.
///
/// The fit is accepted when the `(d+1)`-st differences of `H` vanish at the
/// last two indices, i.e. the `d`-th differences are constant over the last
/// three. Otherwise the data is returned without a series.
pub fn generalized_series(spec: &ModuleSpec, t_max: usize) -> Result<GeneralizedHilbertData> {
    if t_max < 2 {
        return Err(Error::InvalidArgument("t_max must be at least 2".into()));
    }
    let tower = Tower::new(spec);
    let mut epsilon = Vec::with_capacity(t_max + 1);
    for t in 0..=t_max {
        epsilon.push(tower.gamma(t)?);
    }
    Ok(assemble(epsilon, spec.d))
}

pub(crate) fn assemble(epsilon: Vec<u64>, d: usize) -> GeneralizedHilbertData {
    let t_max = epsilon.len() - 1;
    let cumulative: Vec<u64> = epsilon
        .iter()
        .scan(0u64, |acc, &e| {
            *acc += e;
            Some(*acc)
        })
        .collect();
    let values: Vec<i64> = cumulative.iter().map(|&v| v as i64).collect();
    let raw = fit_series(&values, d + 1, 2);
    let series = raw.as_ref().map(|s| s.normalized());
    let r = series.as_ref().and_then(|s| s.pole_order()).map(|p| p - 1);
    let j_coeffs = raw.as_ref().map(|s| binomial_transform(s.numerator(), d));
    let stabilization_degree =
        raw.as_ref().map(|s| s.numerator().degree().map_or(0, |deg| (deg + 1).saturating_sub(d + 1)));
    GeneralizedHilbertData {
        epsilon,
        cumulative,
        raw,
        series,
        r,
        j_coeffs,
        d,
        stabilization_degree,
        fit_window: (t_max.saturating_sub(2), t_max),
    }
}

/// `j_i = Σ_k C(k, i) h_k` for `i = 0..=d`, `h` the numerator over `(1-z)^{d+1}`.
pub(crate) fn binomial_transform(h: &IntPoly, d: usize) -> Vec<i64> {
    (0..=d)
        .map(|i| h.coeffs().iter().enumerate().map(|(k, &c)| binomial(k as u64, i as u64) * c).sum())
        .collect()
}

pub(crate) fn binomial(n: u64, k: u64) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}

/// `(j_0, ..., j_d)` from stable data.
pub fn j_coefficients(data: &GeneralizedHilbertData) -> Result<Vec<i64>> {
    data.j_coeffs
        .clone()
        .ok_or_else(|| Error::Unstable("generalized series did not stabilize; increase t_max".into()))
}

/// Default `t_max`: 8 up to four variables, 6 beyond.
pub fn default_t_max(nvars: usize) -> usize {
    if nvars <= 4 {
        8
    } else {
        6
    }
}
