//! General sections, the residual module `M̄` and classical comparisons.

use super::{analytic_spread_on, fit_series, ModuleSpec, Tower};
use crate::algebra::{random_linear_combination, GeneralElements};
use crate::error::{Error, Result};
use crate::ideals::{length_between, saturate_by_generators, Ideal, RationalSeries};

/// Adds `k` seeded general elements of `I` to `A`.
///
/// A general element of `I` cuts every component of `R/A` not containing
/// `I`, so the dimension becomes `max(d - 1, dim R/(A + I))` at each step;
/// any other outcome flags the seed.
pub fn section(spec: &ModuleSpec, k: usize, seed: u64) -> Result<ModuleSpec> {
    if k > spec.d {
        return Err(Error::InvalidArgument(format!("cannot take {k} sections of a module of dimension {}", spec.d)));
    }
    if k == 0 {
        return Ok(spec.clone());
    }
    spec.i.generator_degree().ok_or(Error::NotEquigenerated)?;
    let floor = spec.a.sum(&spec.i)?.dimension()?;
    let general = random_linear_combination(spec.i.gens(), k, seed)?;
    let mut a = spec.a.clone();
    let mut d = spec.d;
    for (step, xi) in general.elements.iter().enumerate() {
        a = a.with_gens(std::slice::from_ref(xi))?.interreduced()?;
        let expected = match floor {
            Some(f) => f.max(d.saturating_sub(1)),
            None => d.saturating_sub(1),
        };
        let got = a.dimension()?;
        if got != Some(expected) {
            return Err(Error::NonGenericSeed {
                seed,
                reason: format!("section {} gave dimension {got:?}, expected {expected}", step + 1),
            });
        }
        d = expected;
    }
    let mut sections = spec.sections.clone();
    sections.push(general);
    Ok(ModuleSpec { a, i: spec.i.clone(), d, sections })
}

/// Hilbert-Samuel data of `I` on `M̄ = R/Ā`, `Ā = (A + (x_1..x_{d-1})) : I^∞`.
#[derive(Debug, Clone)]
pub struct ResidualData {
    pub seed: u64,
    pub general: Option<GeneralElements>,
    pub a_bar: Option<Ideal>,
    /// `λ(R/(Ā + I^{t+1}))` for `t = 0..=t_max`.
    pub lengths: Vec<u64>,
    /// `Σ_t lengths[t] z^t` over `(1-z)^2`; zero when `ℓ(I, M) < d`.
    pub series: RationalSeries,
}

impl ResidualData {
    /// `h_0 = λ(M̄/IM̄)`.
    pub fn h0(&self) -> u64 {
        self.lengths.first().copied().unwrap_or(0)
    }

    /// `h_0 + h_1 = λ(IM̄/I²M̄)`.
    pub fn h0_plus_h1(&self) -> u64 {
        match (self.lengths.first(), self.lengths.get(1)) {
            (Some(a), Some(b)) => b - a,
            _ => 0,
        }
    }
}

/// `Ā` for seeded general `x_1..x_{d-1}`, or `None` when `ℓ(I, M) < d`.
fn residual_ideal(spec: &ModuleSpec, seed: u64) -> Result<Option<(GeneralElements, Ideal)>> {
    if spec.d == 0 || analytic_spread_on(spec)? < spec.d {
        return Ok(None);
    }
    let general = random_linear_combination(spec.i.gens(), spec.d - 1, seed)?;
    let j = spec.a.with_gens(&general.elements)?;
    let a_bar = saturate_by_generators(&j, &spec.i)?;
    Ok(Some((general, a_bar)))
}

pub fn residual_series(spec: &ModuleSpec, seed: u64, t_max: usize) -> Result<ResidualData> {
    if t_max < 2 {
        return Err(Error::InvalidArgument("t_max must be at least 2".into()));
    }
    let Some((general, a_bar)) = residual_ideal(spec, seed)? else {
        return Ok(ResidualData {
            seed,
            general: None,
            a_bar: None,
            lengths: vec![0; t_max + 1],
            series: RationalSeries::zero(),
        });
    };
    let tower = Tower::from_parts(spec.i.clone(), a_bar.clone());
    let unit = Ideal::unit(a_bar.ring());
    let mut lengths = Vec::with_capacity(t_max + 1);
    for t in 0..=t_max {
        let level = tower.level(t + 1)?;
        let len = match length_between(&level, &unit) {
            Err(Error::InfiniteLength) => {
                return Err(Error::NonGenericSeed { seed, reason: "residual quotient has infinite length".into() })
            }
            other => other?,
        };
        lengths.push(len);
    }
    let values: Vec<i64> = lengths.iter().map(|&v| v as i64).collect();
    let series = fit_series(&values, 2, 2)
        .ok_or_else(|| Error::Unstable("residual series did not stabilize; increase t_max".into()))?;
    Ok(ResidualData { seed, general: Some(general), a_bar: Some(a_bar), lengths, series })
}

/// `ε_0`, `h_0`, `h_0 + h_1` and `ε_1 = h_0 + h_1 - ε_0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsilonReport {
    pub seed: u64,
    pub eps0: u64,
    pub h0: u64,
    pub h0_plus_h1: u64,
    pub eps1: i64,
    /// `λ(IM/((x_1..x_{d-1})M + I²M))`, `None` if infinite.
    pub probe: Option<u64>,
}

pub fn epsilon0_epsilon1(spec: &ModuleSpec, seed: u64) -> Result<EpsilonReport> {
    let tower = Tower::new(spec);
    let eps0 = tower.gamma(1)?;
    let Some((general, a_bar)) = residual_ideal(spec, seed)? else {
        return Err(Error::InvalidArgument("analytic spread is below the dimension".into()));
    };
    let bar = Tower::from_parts(spec.i.clone(), a_bar);
    let unit = Ideal::unit(spec.a.ring());
    let h0 = length_between(&bar.level(1)?, &unit)?;
    let h01 = length_between(&bar.level(2)?, &bar.level(1)?)?;
    let lower = tower.level(2)?.with_gens(&general.elements)?;
    let probe = match length_between(&lower, &tower.level(1)?) {
        Ok(v) => Some(v),
        Err(Error::InfiniteLength) => None,
        Err(e) => return Err(e),
    };
    Ok(EpsilonReport { seed, eps0, h0, h0_plus_h1: h01, eps1: h01 as i64 - eps0 as i64, probe })
}

/// `ε(t)` against the classical `λ((I^t+A)/(I^{t+1}+A))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalReport {
    pub generalized: Vec<u64>,
    pub classical: Vec<u64>,
    pub agree: bool,
}

pub fn classical_consistency(spec: &ModuleSpec, t_max: usize) -> Result<ClassicalReport> {
    match spec.a.sum(&spec.i)?.dimension()? {
        None | Some(0) => {}
        Some(_) => return Err(Error::InvalidArgument("I + A is not primary to the maximal ideal".into())),
    }
    let tower = Tower::new(spec);
    let mut generalized = Vec::with_capacity(t_max + 1);
    let mut classical = Vec::with_capacity(t_max + 1);
    for t in 0..=t_max {
        generalized.push(tower.gamma(t)?);
        classical.push(length_between(&tower.level(t + 1)?, &tower.level(t)?)?);
    }
    let agree = generalized == classical;
    Ok(ClassicalReport { generalized, classical, agree })
}
