//! Bigraded lengths of `gr_q(gr_I(M))`, double-binomial polynomial fits,
//! the generalized Singh formula and the hyperplane-section checks.
//!
//! For `M = R/A` and `L_t = I^t + A`:
//!
//! * `H^(1,0)(s,t) = λ(L_t / (q^{s+1} L_t + L_{t+1}))`
//! * `H^(0,0)(s,t) = H^(1,0)(s,t) - H^(1,0)(s-1,t)`
//! * `H^(1,1)(s,t) = Σ_{ν ≤ t} H^(1,0)(s,ν)`

use std::collections::BTreeMap;

use num_rational::Ratio;

use crate::algebra::{random_linear_combination, Polynomial};
use crate::error::{Error, Result};
use crate::genhilbert::{generalized_series, j_coefficients, section, ModuleSpec, Tower};
use crate::ideals::{colon, intersect, length_between, Ideal};

type Q = Ratio<i128>;

/// Exact `H^(u,v)` values on `0 ≤ s ≤ s_max`, `0 ≤ t ≤ t_max`, indexed `[s][t]`.
#[derive(Debug, Clone)]
pub struct BigradedTable {
    pub q: Ideal,
    pub i: Ideal,
    pub a: Ideal,
    pub h00: Vec<Vec<u64>>,
    pub h10: Vec<Vec<u64>>,
    pub h11: Vec<Vec<u64>>,
}

impl BigradedTable {
    pub fn s_max(&self) -> usize {
        self.h11.len() - 1
    }

    pub fn t_max(&self) -> usize {
        self.h11[0].len() - 1
    }
}

/// One grid point computed directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BigradedPoint {
    pub h00: u64,
    pub h10: u64,
    pub h11: u64,
}

fn check_primary(q: &Ideal, i: &Ideal, a: &Ideal) -> Result<()> {
    q.check_ring(i)?;
    q.check_ring(a)?;
    if !q.is_homogeneous() || !i.is_homogeneous() || !a.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    match q.sum(i)?.sum(a)?.dimension()? {
        None | Some(0) => Ok(()),
        Some(_) => Err(Error::InvalidArgument("q + I + A is not primary to the maximal ideal".into())),
    }
}

/// `q^{s+1} L_t + L_{t+1}`.
fn filtration_step(q: &Ideal, tower: &Tower, s: usize, t: usize) -> Result<Ideal> {
    q.power(s as u32 + 1)?.product(&tower.level(t)?)?.sum(&tower.level(t + 1)?)
}

fn h10_cell(q: &Ideal, tower: &Tower, s: usize, t: usize) -> Result<u64> {
    length_between(&filtration_step(q, tower, s, t)?, &tower.level(t)?)
}

/// `(h00, h10, h11)` at `(s, t)`, with `h00` measured directly as
/// `λ((q^s L_t + L_{t+1}) / (q^{s+1} L_t + L_{t+1}))`.
pub fn bigraded_h(q: &Ideal, i: &Ideal, a: &Ideal, s: usize, t: usize) -> Result<BigradedPoint> {
    check_primary(q, i, a)?;
    let tower = Tower::from_parts(i.clone(), a.clone());
    let upper = q.power(s as u32)?.product(&tower.level(t)?)?.sum(&tower.level(t + 1)?)?;
    let h00 = length_between(&filtration_step(q, &tower, s, t)?, &upper)?;
    let h10 = h10_cell(q, &tower, s, t)?;
    let mut h11 = 0;
    for nu in 0..=t {
        h11 += h10_cell(q, &tower, s, nu)?;
    }
    Ok(BigradedPoint { h00, h10, h11 })
}

pub fn bigraded_table(q: &Ideal, i: &Ideal, a: &Ideal, s_max: usize, t_max: usize) -> Result<BigradedTable> {
    check_primary(q, i, a)?;
    let tower = Tower::from_parts(i.clone(), a.clone());
    let mut h10 = vec![vec![0u64; t_max + 1]; s_max + 1];
    for t in 0..=t_max {
        for (s, row) in h10.iter_mut().enumerate() {
            row[t] = h10_cell(q, &tower, s, t)?;
        }
    }
    let mut h00 = h10.clone();
    for s in 1..=s_max {
        for t in 0..=t_max {
            h00[s][t] = h10[s][t]
                .checked_sub(h10[s - 1][t])
                .ok_or_else(|| Error::NotContained("H^(1,0) decreased in s".into()))?;
        }
    }
    let h11 = h10
        .iter()
        .map(|row| {
            row.iter()
                .scan(0u64, |acc, &v| {
                    *acc += v;
                    Some(*acc)
                })
                .collect()
        })
        .collect();
    Ok(BigradedTable { q: q.clone(), i: i.clone(), a: a.clone(), h00, h10, h11 })
}

/// `P(s,t) = Σ_{i+j ≤ d} a(i,j) C(s+i,i) C(t+j,j)` matched on a grid corner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateFit {
    pub d: usize,
    pub coeffs: BTreeMap<(usize, usize), i64>,
    /// Lower-left corner of the interpolation square.
    pub window: (usize, usize),
    /// Least `(s, t)` from which the grid agrees with `P` in each direction.
    pub agreement_from: (usize, usize),
}

impl BivariateFit {
    pub fn coeff(&self, i: usize, j: usize) -> i64 {
        self.coeffs.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn eval(&self, s: usize, t: usize) -> i64 {
        self.coeffs
            .iter()
            .map(|(&(i, j), &c)| c * binom_shift(s, i) * binom_shift(t, j))
            .sum()
    }
}

/// `C(s+i, i)`.
fn binom_shift(s: usize, i: usize) -> i64 {
    crate::genhilbert::binomial((s + i) as u64, i as u64)
}

/// Coefficients `b` with `f(x0 + k) = Σ_i b_i C(x0+k+i, i)` for `k = 0..=d`.
fn solve_binomial_basis(x0: usize, values: &[Q]) -> Vec<Q> {
    let n = values.len();
    let mut m: Vec<Vec<Q>> = (0..n)
        .map(|k| {
            let mut row: Vec<Q> = (0..n).map(|i| Q::from_integer(binom_shift(x0 + k, i) as i128)).collect();
            row.push(values[k]);
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| m[r][col] != Q::from_integer(0)).expect("binomial basis is unisolvent");
        m.swap(col, pivot);
        let inv = Q::from_integer(1) / m[col][col];
        for v in m[col].iter_mut() {
            *v *= inv;
        }
        for r in 0..n {
            if r != col && m[r][col] != Q::from_integer(0) {
                let f = m[r][col];
                let pivot_row = m[col].clone();
                for (v, p) in m[r].iter_mut().zip(pivot_row) {
                    *v -= f * p;
                }
            }
        }
    }
    m.into_iter().map(|row| row[n]).collect()
}

fn to_integer(v: Q) -> Option<i64> {
    v.is_integer().then(|| i64::try_from(v.to_integer()).ok()).flatten()
}

/// Fits a polynomial of total degree `≤ d` to `grid[s][t]` on the top-right
/// `(d+1) × (d+1)` square shifted in by a held-out margin of one.
pub fn fit_grid(grid: &[Vec<i64>], d: usize) -> Result<BivariateFit> {
    let n = d + 1;
    let s_len = grid.len();
    let t_len = grid.first().map_or(0, |r| r.len());
    if s_len < n + 1 || t_len < n + 1 {
        return Err(Error::SizeViolation(format!("a degree {d} fit needs a grid of at least {0} x {0}", n + 1)));
    }
    let (s0, t0) = (s_len - n - 1, t_len - n - 1);
    // solve in s for each t, then in t for each s-coefficient
    let per_t: Vec<Vec<Q>> = (t0..t0 + n)
        .map(|t| {
            let vals: Vec<Q> = (s0..s0 + n).map(|s| Q::from_integer(grid[s][t] as i128)).collect();
            solve_binomial_basis(s0, &vals)
        })
        .collect();
    let mut coeffs = BTreeMap::new();
    for i in 0..n {
        let vals: Vec<Q> = per_t.iter().map(|b| b[i]).collect();
        for (j, c) in solve_binomial_basis(t0, &vals).into_iter().enumerate() {
            let c = to_integer(c).ok_or_else(|| Error::Unstable("non-integral bigraded coefficient".into()))?;
            if c != 0 {
                if i + j > d {
                    return Err(Error::Unstable(format!("bigraded polynomial has degree above {d}; enlarge the grid")));
                }
                coeffs.insert((i, j), c);
            }
        }
    }
    let mut fit = BivariateFit { d, coeffs, window: (s0, t0), agreement_from: (s0, t0) };
    let agrees = |s: usize, t: usize| fit.eval(s, t) == grid[s][t];
    if !(s0..s_len).all(|s| (t0..t_len).all(|t| agrees(s, t))) {
        return Err(Error::Unstable("no stable polynomial region at this grid size".into()));
    }
    let mut s_from = s0;
    while s_from > 0 && (t0..t_len).all(|t| agrees(s_from - 1, t)) {
        s_from -= 1;
    }
    let mut t_from = t0;
    while t_from > 0 && (s0..s_len).all(|s| agrees(s, t_from - 1)) {
        t_from -= 1;
    }
    fit.agreement_from = (s_from, t_from);
    Ok(fit)
}

/// Fits `P^(1,1)` of the table; `d` is `dim M`.
pub fn fit_bivariate(table: &BigradedTable, d: usize) -> Result<BivariateFit> {
    let grid: Vec<Vec<i64>> = table.h11.iter().map(|r| r.iter().map(|&v| v as i64).collect()).collect();
    fit_grid(&grid, d)
}

/// `j_i(q, I, M) = (a(i, d-i), a(i-1, d-i), ..., a(0, d-i))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CiupercaTuple {
    pub i: usize,
    pub values: Vec<i64>,
}

pub fn ciuperca_coefficients(fit: &BivariateFit) -> Vec<CiupercaTuple> {
    let d = fit.d;
    (0..=d)
        .map(|i| CiupercaTuple { i, values: (0..=i).rev().map(|l| fit.coeff(l, d - i)).collect() })
        .collect()
}

/// One choice of `q` tried by [`verify_prop24`].
#[derive(Debug, Clone)]
pub struct Prop24Attempt {
    pub label: String,
    pub q: Ideal,
    /// `a(0, d-i)` for `i = 0..=d`, when the fit succeeded.
    pub lhs: Option<Vec<i64>>,
    pub holds: bool,
    pub note: Option<String>,
}

#[derive(Debug, Clone)]
pub struct Prop24Report {
    pub d: usize,
    /// `(-1)^i j_i(I, M)`.
    pub rhs: Vec<i64>,
    pub attempts: Vec<Prop24Attempt>,
    /// Index of the first attempt satisfying the identity.
    pub chosen: Option<usize>,
}

impl Prop24Report {
    pub fn conclusive(&self) -> bool {
        self.chosen.is_some()
    }
}

/// Options for [`verify_prop24`].
#[derive(Debug, Clone)]
pub struct Prop24Options {
    /// First `q` to try; the maximal ideal when `None`.
    pub q: Option<Ideal>,
    pub seed: u64,
    /// Largest power `n` in the ladder `q = (y_1^n, ..., y_d^n)`.
    pub max_power: u32,
    /// Grid size beyond `d`; the grid is `0..=d + extra` in both directions.
    pub extra: usize,
    pub t_max: usize,
}

impl Default for Prop24Options {
    fn default() -> Self {
        Prop24Options { q: None, seed: 1, max_power: 3, extra: 3, t_max: 8 }
    }
}

/// Compares `a^(1,1)(0, d-i)` with `(-1)^i j_i(I, M)` for each `q` on the
/// ladder until one satisfies the identity.
pub fn verify_prop24(spec: &ModuleSpec, opts: &Prop24Options) -> Result<Prop24Report> {
    let d = spec.d;
    let j = j_coefficients(&generalized_series(spec, opts.t_max)?)?;
    let rhs: Vec<i64> = j.iter().enumerate().map(|(i, &v)| if i % 2 == 0 { v } else { -v }).collect();
    let ring = spec.i.ring();
    let mut candidates = vec![match &opts.q {
        Some(q) => ("given".to_string(), q.clone()),
        None => ("m".to_string(), Ideal::maximal(ring)),
    }];
    if d > 0 {
        let vars: Vec<Polynomial> = (0..ring.nvars()).map(|v| Polynomial::var(ring, v)).collect::<Result<_>>()?;
        let ys = random_linear_combination(&vars, d, opts.seed)?;
        for n in 1..=opts.max_power {
            let gens = ys.elements.iter().map(|y| y.pow(n)).collect::<Result<Vec<_>>>()?;
            candidates.push((format!("general linear forms to the power {n} (seed {})", opts.seed), Ideal::new(ring, gens)?));
        }
    }
    let mut attempts = Vec::new();
    let mut chosen = None;
    for (label, q) in candidates {
        let grid = d + opts.extra;
        let outcome = bigraded_table(&q, &spec.i, &spec.a, grid, grid).and_then(|t| fit_bivariate(&t, d));
        let attempt = match outcome {
            Ok(fit) => {
                let lhs: Vec<i64> = (0..=d).map(|i| fit.coeff(0, d - i)).collect();
                let holds = lhs == rhs;
                Prop24Attempt { label, q, lhs: Some(lhs), holds, note: None }
            }
            Err(e @ (Error::Unstable(_) | Error::InvalidArgument(_) | Error::InfiniteLength)) => {
                Prop24Attempt { label, q, lhs: None, holds: false, note: Some(e.to_string()) }
            }
            Err(e) => return Err(e),
        };
        let holds = attempt.holds;
        attempts.push(attempt);
        if holds {
            chosen = Some(attempts.len() - 1);
            break;
        }
    }
    Ok(Prop24Report { d, rhs, attempts, chosen })
}

/// Both sides of the generalized Singh formula at one grid point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SinghCell {
    pub s: usize,
    pub t: usize,
    /// `H^(1,0)_(q,I,M)(s,t)`.
    pub lhs: u64,
    /// `H^(1,1)_(q,I,M/xM)(s,t)`.
    pub sectioned: u64,
    /// `Σ_{ν=2}^t λ((L_ν : x) / ((q^{s+1}L_ν + L_{ν+1}) : x + L_{ν-1}))`.
    pub plus: u64,
    /// `Σ_{ν=1}^t λ(((q^{s+1}L_ν + L_{ν+1}) : x ∩ L_{ν-1}) / (q^{s+1}L_{ν-1} + L_ν))`.
    pub minus: u64,
    pub holds: bool,
}

impl SinghCell {
    pub fn correction(&self) -> i64 {
        self.plus as i64 - self.minus as i64
    }
}

#[derive(Debug, Clone)]
pub struct SinghReport {
    pub x: Polynomial,
    pub cells: Vec<SinghCell>,
    pub all_hold: bool,
    /// First `t` from which the correction no longer changes with `t`.
    pub t0: Option<usize>,
    /// `β_0, ..., β_{d-1}` with correction `Σ β_i C(s+i, i)` for `t ≥ t0`.
    pub beta: Option<Vec<i64>>,
}

/// Checks the generalized Singh formula for `x ∈ I` on `0..=s_max × 0..=t_max`.
pub fn singh_check(
    q: &Ideal,
    i: &Ideal,
    a: &Ideal,
    x: &Polynomial,
    s_max: usize,
    t_max: usize,
) -> Result<SinghReport> {
    check_primary(q, i, a)?;
    if !i.contains_poly(x)? {
        return Err(Error::NotContained("x must lie in I".into()));
    }
    let tower = Tower::from_parts(i.clone(), a.clone());
    let a_bar = a.with_gens(std::slice::from_ref(x))?;
    let bar = Tower::from_parts(i.clone(), a_bar);
    // colon ideals depend on (s, ν) only
    let mut cells = Vec::new();
    let mut all_hold = true;
    for s in 0..=s_max {
        let mut lhs_sum_bar = 0u64;
        let mut plus = 0u64;
        let mut minus = 0u64;
        for t in 0..=t_max {
            lhs_sum_bar += h10_cell(q, &bar, s, t)?;
            if t >= 1 {
                let nu = t;
                let step = filtration_step(q, &tower, s, nu)?;
                let step_colon = colon(&step, x)?;
                let prev = tower.level(nu - 1)?;
                let num_minus = if nu == 1 { step_colon.clone() } else { intersect(&step_colon, &prev)? };
                let den_minus = filtration_step(q, &tower, s, nu - 1)?;
                minus += length_between(&den_minus, &num_minus)?;
                if nu >= 2 {
                    let num_plus = colon(&tower.level(nu)?, x)?;
                    let den_plus = step_colon.sum(&prev)?;
                    plus += length_between(&den_plus, &num_plus)?;
                }
            }
            let lhs = h10_cell(q, &tower, s, t)?;
            let holds = lhs as i64 == lhs_sum_bar as i64 + plus as i64 - minus as i64;
            all_hold &= holds;
            cells.push(SinghCell { s, t, lhs, sectioned: lhs_sum_bar, plus, minus, holds });
        }
    }
    let d = a.dimension()?.unwrap_or(0);
    let correction = |s: usize, t: usize| cells[s * (t_max + 1) + t].correction();
    let t0 = (0..t_max).find(|&t0| (t0..=t_max).all(|t| (0..=s_max).all(|s| correction(s, t) == correction(s, t0))));
    let beta = t0.and_then(|t0| {
        if d == 0 {
            return (0..=s_max).all(|s| correction(s, t0) == 0).then(Vec::new);
        }
        if s_max + 1 < d {
            return None;
        }
        let first = s_max + 1 - d;
        let vals: Vec<Q> = (first..=s_max).map(|s| Q::from_integer(correction(s, t0) as i128)).collect();
        let beta: Vec<i64> = solve_binomial_basis(first, &vals).into_iter().map(to_integer).collect::<Option<_>>()?;
        let fits = (0..=s_max)
            .all(|s| beta.iter().enumerate().map(|(i, &b)| b * binom_shift(s, i)).sum::<i64>() == correction(s, t0));
        fits.then_some(beta)
    });
    Ok(SinghReport { x: x.clone(), cells, all_hold, t0, beta })
}

/// The classical formula `λ(L_t/L_{t+1}) = λ(R/(L_{t+1} + (x))) - λ((L_{t+1} : x)/L_t)`
/// for `I + A` primary to the maximal ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalSinghRow {
    pub t: usize,
    pub lhs: u64,
    pub rhs: i64,
    pub holds: bool,
}

pub fn classical_singh(i: &Ideal, a: &Ideal, x: &Polynomial, t_max: usize) -> Result<Vec<ClassicalSinghRow>> {
    check_primary(&Ideal::zero(i.ring()), i, a)?;
    let tower = Tower::from_parts(i.clone(), a.clone());
    let unit = Ideal::unit(i.ring());
    (0..=t_max)
        .map(|t| {
            let lt = tower.level(t)?;
            let next = tower.level(t + 1)?;
            let lhs = length_between(&next, &lt)?;
            let cut = length_between(&next.with_gens(std::slice::from_ref(x))?, &unit)?;
            let excess = length_between(&lt, &colon(&next, x)?)?;
            let rhs = cut as i64 - excess as i64;
            Ok(ClassicalSinghRow { t, lhs, rhs, holds: lhs as i64 == rhs })
        })
        .collect()
}

/// j-vectors before and after one general section.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionOutcome {
    pub seed: u64,
    pub before: Vec<i64>,
    pub after: Vec<i64>,
    /// `j_i` agree for `i ≤ d - 2`.
    pub preserved: bool,
    /// `j_{d-1}(after) - j_{d-1}(before)`.
    pub delta: i64,
    /// `(L_{t+1} : ξ) = L_t` for `t ≤ probe_t`.
    pub probe_passed: bool,
    /// `delta ≥ 0`, asserted only when the probe passed.
    pub remark_holds: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct InvarianceReport {
    pub outcomes: Vec<SectionOutcome>,
}

impl InvarianceReport {
    pub fn all_pass(&self) -> bool {
        self.outcomes.iter().all(|o| o.preserved && o.remark_holds != Some(false))
    }
}

pub fn hyperplane_invariance_check(
    spec: &ModuleSpec,
    seeds: &[u64],
    t_max: usize,
    probe_t: usize,
) -> Result<InvarianceReport> {
    let d = spec.d;
    if d < 2 {
        return Err(Error::InvalidArgument("invariance needs dimension at least 2".into()));
    }
    if crate::genhilbert::analytic_spread_on(spec)? != d {
        return Err(Error::InvalidArgument("analytic spread must equal the dimension".into()));
    }
    let before = j_coefficients(&generalized_series(spec, t_max)?)?;
    let tower = Tower::new(spec);
    let mut outcomes = Vec::with_capacity(seeds.len());
    for &seed in seeds {
        let cut = section(spec, 1, seed)?;
        let after = j_coefficients(&generalized_series(&cut, t_max)?)?;
        let preserved = before[..=d - 2] == after[..=d - 2];
        let delta = after[d - 1] - before[d - 1];
        let xi = &cut.sections.last().expect("one section").elements[0];
        let mut probe_passed = true;
        for t in 0..=probe_t {
            if !colon(&tower.level(t + 1)?, xi)?.equals(&tower.level(t)?)? {
                probe_passed = false;
                break;
            }
        }
        let remark_holds = probe_passed.then_some(delta >= 0);
        outcomes.push(SectionOutcome { seed, before: before.clone(), after, preserved, delta, probe_passed, remark_holds });
    }
    Ok(InvarianceReport { outcomes })
}

/// `J_i I M ∩ (q^{s+1} I·IM + I²·IM) = J_i (q^{s+1} IM + I²M)` at one `(i, s)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thm34Cell {
    pub i: usize,
    pub s: usize,
    pub holds: bool,
}

#[derive(Debug, Clone)]
pub struct Thm34Report {
    pub seed: u64,
    pub cells: Vec<Thm34Cell>,
}

impl Thm34Report {
    pub fn all_hold(&self) -> bool {
        self.cells.iter().all(|c| c.holds)
    }
}

pub fn thm34_probe(spec: &ModuleSpec, q: &Ideal, s_values: &[usize], seed: u64) -> Result<Thm34Report> {
    let i = &spec.i;
    let a = &spec.a;
    let d = spec.d;
    let general = random_linear_combination(i.gens(), d.saturating_sub(1), seed)?;
    let i2 = i.power(2)?;
    let i3 = i.power(3)?;
    let mut cells = Vec::new();
    for k in 1..d {
        let jk = Ideal::new(i.ring(), general.elements[..k].to_vec())?;
        let jki = jk.product(i)?;
        for &s in s_values {
            let qs = q.power(s as u32 + 1)?;
            let left = intersect(&jki.sum(a)?, &qs.product(&i2)?.sum(&i3)?.sum(a)?)?;
            let right = jk.product(&qs.product(i)?.sum(&i2)?)?.sum(a)?;
            cells.push(Thm34Cell { i: k, s, holds: left.equals(&right)? });
        }
    }
    Ok(Thm34Report { seed, cells })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Monomial, Ring};

    fn xy() -> Ring {
        Ring::with_default_prime(&["x", "y"]).unwrap()
    }

    fn mono_ideal(r: &Ring, monos: &[&[u32]]) -> Ideal {
        let ms: Vec<Monomial> = monos.iter().map(|e| Monomial::from_exponents(e).unwrap()).collect();
        Ideal::from_monomials(r, &ms).unwrap()
    }

    #[test]
    fn single_points() {
        let r = xy();
        let m = Ideal::maximal(&r);
        let zero = Ideal::zero(&r);
        for t in 0..4 {
            assert_eq!(bigraded_h(&m, &m, &zero, 0, t).unwrap().h10, t as u64 + 1);
        }
        let i = mono_ideal(&r, &[&[2, 0], &[1, 1]]);
        assert_eq!(bigraded_h(&m, &i, &zero, 0, 0).unwrap().h11, 1);
    }

    #[test]
    fn table_telescopes() {
        let r = xy();
        let m = Ideal::maximal(&r);
        let zero = Ideal::zero(&r);
        let i = mono_ideal(&r, &[&[2, 0], &[1, 1]]);
        let table = bigraded_table(&m, &i, &zero, 3, 3).unwrap();
        for s in 0..=3 {
            for t in 0..=3 {
                let p = bigraded_h(&m, &i, &zero, s, t).unwrap();
                assert_eq!(p, BigradedPoint { h00: table.h00[s][t], h10: table.h10[s][t], h11: table.h11[s][t] });
            }
        }
    }

    #[test]
    fn rejects_non_primary_q() {
        let r = xy();
        let q = mono_ideal(&r, &[&[1, 0]]);
        let i = mono_ideal(&r, &[&[2, 0], &[1, 1]]);
        assert!(bigraded_table(&q, &i, &Ideal::zero(&r), 2, 2).is_err());
    }

    #[test]
    fn fits_of_synthetic_grids() {
        let constant = vec![vec![5i64; 5]; 5];
        let fit = fit_grid(&constant, 1).unwrap();
        assert_eq!(fit.coeffs, BTreeMap::from([((0, 0), 5)]));
        assert_eq!(fit.agreement_from, (0, 0));
        let product: Vec<Vec<i64>> = (0..6).map(|s| (0..6).map(|t| (s + 1) * (t + 1)).collect()).collect();
        let fit = fit_grid(&product, 2).unwrap();
        assert_eq!(fit.coeffs, BTreeMap::from([((1, 1), 1)]));
        assert!(fit_grid(&product, 1).is_err());
        assert!(fit_grid(&constant, 4).is_err());
    }

    #[test]
    fn ciuperca_tuple_shapes() {
        let fit = BivariateFit {
            d: 2,
            coeffs: BTreeMap::from([((0, 2), 2), ((1, 1), 3), ((0, 1), -1)]),
            window: (0, 0),
            agreement_from: (0, 0),
        };
        let tuples = ciuperca_coefficients(&fit);
        assert_eq!(tuples[0].values, vec![2]);
        assert_eq!(tuples[1].values, vec![3, -1]);
        assert_eq!(tuples[2].values, vec![0, 0, 0]);
    }

    #[test]
    fn primary_ideal_coefficients() {
        // I = (x, y)^2: e_0 = 4, e_1 = 1
        let r = xy();
        let m = Ideal::maximal(&r);
        let i = m.power(2).unwrap();
        let table = bigraded_table(&m, &i, &Ideal::zero(&r), 5, 5).unwrap();
        let fit = fit_bivariate(&table, 2).unwrap();
        let tuples = ciuperca_coefficients(&fit);
        assert_eq!(tuples[0].values, vec![4]);
        assert_eq!(tuples[1].values, vec![0, -1]);
        assert_eq!(tuples[2].values, vec![0, 0, 0]);
    }

    #[test]
    fn prop24_on_small_ideals() {
        let r = xy();
        let spec = ModuleSpec::on_ring(Ideal::maximal(&r)).unwrap();
        let rep = verify_prop24(&spec, &Prop24Options::default()).unwrap();
        assert_eq!(rep.rhs, vec![1, 0, 0]);
        assert!(rep.conclusive());

        let spec = ModuleSpec::on_ring(mono_ideal(&r, &[&[2, 0], &[1, 1]])).unwrap();
        let rep = verify_prop24(&spec, &Prop24Options::default()).unwrap();
        assert_eq!(rep.rhs, vec![2, -1, 0]);
        assert!(rep.conclusive());
    }

    #[test]
    fn singh_on_small_ideals() {
        let r = xy();
        let m = Ideal::maximal(&r);
        let zero = Ideal::zero(&r);
        let i = mono_ideal(&r, &[&[2, 0], &[1, 1]]);
        for seed in [1, 2] {
            let x = random_linear_combination(i.gens(), 1, seed).unwrap().elements.remove(0);
            let rep = singh_check(&m, &i, &zero, &x, 4, 4).unwrap();
            assert!(rep.all_hold, "{:?}", rep.cells);
        }
        let x = Polynomial::var(&r, 0).unwrap();
        let rows = classical_singh(&m, &zero, &x, 5).unwrap();
        assert!(rows.iter().all(|row| row.holds));
        assert_eq!(rows[3].lhs, 4);
    }

    #[test]
    fn invariance_on_embedded_line() {
        let r = xy();
        let spec = ModuleSpec::on_ring(mono_ideal(&r, &[&[2, 0], &[1, 1]])).unwrap();
        let rep = hyperplane_invariance_check(&spec, &[1, 2, 3], 6, 3).unwrap();
        assert!(rep.all_pass());
        assert!(rep.outcomes.iter().all(|o| o.before[0] == 2 && o.after[0] == 2));
    }

    #[test]
    fn thm34_principal_collapse() {
        let r = xy();
        let x = mono_ideal(&r, &[&[1, 0]]);
        let spec = ModuleSpec::on_ring(x).unwrap();
        let rep = thm34_probe(&spec, &Ideal::maximal(&r), &[0, 1, 2], 1).unwrap();
        assert!(rep.cells.iter().all(|c| c.i >= 1));
        assert!(rep.all_hold());
    }
}
