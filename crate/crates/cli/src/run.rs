//! Dispatch from commands to the core computations.

use std::collections::BTreeMap;
use std::time::Instant;

use ghilb_core::algebra::random_linear_combination;
use ghilb_core::bigraded::{
    bigraded_table, ciuperca_coefficients, classical_singh, fit_bivariate, hyperplane_invariance_check, singh_check,
    thm34_probe, verify_prop24, Prop24Options,
};
use ghilb_core::genhilbert::{
    analytic_spread_on, default_t_max, epsilon0_epsilon1, generalized_series, minimal_reduction, residual_series,
    section, GeneralizedHilbertData, ModuleSpec,
};
use ghilb_core::ideals::Ideal;
use ghilb_core::Error as CoreError;
use serde_json::json;

use crate::error::CliError;
use crate::job::{Command, Job};
use crate::report::{Report, Status};

fn gens_text(i: &Ideal) -> Vec<String> {
    i.gens().iter().map(|g| g.to_string()).collect()
}

fn unstable(what: &str) -> CliError {
    CliError::Core(CoreError::Unstable(format!("{what} did not stabilize; rerun with a larger --t-max")))
}

fn put_series_data(report: &mut Report, data: &GeneralizedHilbertData) -> Result<(), CliError> {
    let series = data.series.as_ref().ok_or_else(|| unstable("the generalized Hilbert series"))?;
    report.set_series(series);
    report.raw_series = data.raw.as_ref().map(Into::into);
    report.j_coeffs = data.j_coeffs.clone();
    report.value("d", data.d);
    report.value("epsilon", &data.epsilon);
    report.value("cumulative", &data.cumulative);
    report.value("r", data.r);
    report.value("stabilizationDegree", data.stabilization_degree);
    report.value("fitWindow", [data.fit_window.0, data.fit_window.1]);
    Ok(())
}

struct Clock {
    enabled: bool,
    marks: BTreeMap<String, f64>,
}

impl Clock {
    fn time<T>(&mut self, name: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if self.enabled {
            *self.marks.entry(name.to_string()).or_insert(0.0) += start.elapsed().as_secs_f64();
        }
        out
    }
}

/// Runs `command` on a resolved job. Seeds default to `[1]`, and to
/// `[1, 2, 3]` for `verify-invariance`.
pub fn run_command(job: &Job, command: Command, timings: bool) -> Result<Report, CliError> {
    let params = &job.spec.params;
    let seeds = match (params.seeds.is_empty(), command) {
        (false, _) => params.seeds.clone(),
        (true, Command::VerifyInvariance) => vec![1, 2, 3],
        (true, _) => vec![1],
    };
    let mut spec = job.spec.clone();
    spec.command = Some(command);
    let mut report = Report::new(command, spec, seeds.clone());
    let mut clock = Clock { enabled: timings, marks: BTreeMap::new() };
    let ms: ModuleSpec = job.module_spec()?;
    let t_max = params.t_max.unwrap_or_else(|| default_t_max(job.ring.nvars()));
    let q = job.q.clone().unwrap_or_else(|| Ideal::maximal(&job.ring));
    let seed = seeds[0];
    match command {
        Command::Series | Command::Jcoeffs | Command::Jmult => {
            let data = clock.time("series", || generalized_series(&ms, t_max))?;
            put_series_data(&mut report, &data)?;
            if command == Command::Jmult {
                let j = report.j_coeffs.as_ref().map_or(0, |j| j[0]);
                report.value("jMultiplicity", j);
            }
        }
        Command::Spread => {
            let l = clock.time("spread", || analytic_spread_on(&ms))?;
            report.value("analyticSpread", l);
            report.value("d", ms.d);
        }
        Command::Reduction => {
            if !job.a.is_zero() {
                return Err(CliError::Input("reduction works on ideals of the ring; drop the module ideal".into()));
            }
            let r_max = params.t_max.unwrap_or(4);
            for &s in &seeds {
                let red = clock.time("reduction", || minimal_reduction(&job.i, s, r_max))?;
                let key = format!("seed{s}");
                report.value(
                    &key,
                    json!({
                        "analyticSpread": red.spread,
                        "reductionNumber": red.reduction_number,
                        "lengths": red.lengths,
                        "reduction": gens_text(&red.j),
                    }),
                );
            }
        }
        Command::Residual => {
            let t_res = params.t_max.unwrap_or(6);
            let mut first = None;
            for &s in &seeds {
                let res = clock.time("residual", || residual_series(&ms, s, t_res))?;
                let mut entry = json!({ "lengths": res.lengths, "h0": res.h0(), "h0PlusH1": res.h0_plus_h1() });
                if res.general.is_some() {
                    let eps = clock.time("epsilon", || epsilon0_epsilon1(&ms, s))?;
                    entry["eps0"] = json!(eps.eps0);
                    entry["eps1"] = json!(eps.eps1);
                    entry["probe"] = json!(eps.probe);
                }
                report.value(&format!("seed{s}"), entry);
                match &first {
                    None => first = Some(res.series.clone()),
                    Some(f) => report.check(
                        format!("seed {s} agrees with seed {seed}"),
                        *f == res.series,
                        Some(res.series.to_string()),
                    ),
                }
            }
            report.set_series(first.as_ref().expect("at least one seed"));
        }
        Command::Section => {
            let k = params.sections.unwrap_or(1);
            let cut = clock.time("section", || section(&ms, k, seed))?;
            let data = clock.time("series", || generalized_series(&cut, t_max))?;
            put_series_data(&mut report, &data)?;
            let general: Vec<String> =
                cut.sections.iter().flat_map(|g| g.elements.iter().map(|e| e.to_string())).collect();
            report.value("generalElements", general);
        }
        Command::SinghCheck => {
            let s_max = params.s_max.unwrap_or(4);
            let t_grid = params.t_max.unwrap_or(4);
            for &s in &seeds {
                let x = random_linear_combination(job.i.gens(), 1, s)?.elements.remove(0);
                let rep = clock.time("singh", || singh_check(&q, &job.i, &job.a, &x, s_max, t_grid))?;
                let bad = rep.cells.iter().find(|c| !c.holds).map(|c| format!("first failure at s={} t={}", c.s, c.t));
                report.check(format!("generalized Singh formula, seed {s}"), rep.all_hold, bad);
                report.value(&format!("seed{s}"), json!({ "x": x.to_string(), "t0": rep.t0, "beta": rep.beta }));
                let primary = matches!(job.i.sum(&job.a)?.dimension()?, None | Some(0));
                if primary {
                    let rows = clock.time("singh", || classical_singh(&job.i, &job.a, &x, t_grid))?;
                    report.check(format!("classical Singh formula, seed {s}"), rows.iter().all(|r| r.holds), None);
                }
            }
        }
        Command::BigradedFit => {
            let grid = params.s_max.unwrap_or(ms.d + 3);
            let t_grid = params.t_max.unwrap_or(ms.d + 3);
            let table = clock.time("table", || bigraded_table(&q, &job.i, &job.a, grid, t_grid))?;
            let fit = fit_bivariate(&table, ms.d)?;
            let coeffs: Vec<[i64; 3]> = fit.coeffs.iter().map(|(&(i, j), &c)| [i as i64, j as i64, c]).collect();
            let tuples: Vec<Vec<i64>> = ciuperca_coefficients(&fit).into_iter().map(|t| t.values).collect();
            report.value("q", gens_text(&q));
            report.value("h11", &table.h11);
            report.value("coefficients", coeffs);
            report.value("ciuperca", tuples);
            report.value("window", [fit.window.0, fit.window.1]);
            report.value("agreementFrom", [fit.agreement_from.0, fit.agreement_from.1]);
        }
        Command::VerifyProp24 => {
            let opts = Prop24Options { q: job.q.clone(), seed, t_max, ..Prop24Options::default() };
            let rep = clock.time("prop24", || verify_prop24(&ms, &opts))?;
            let attempts: Vec<_> = rep
                .attempts
                .iter()
                .map(|a| json!({ "label": a.label, "q": gens_text(&a.q), "lhs": a.lhs, "holds": a.holds, "note": a.note }))
                .collect();
            report.value("rhs", &rep.rhs);
            report.value("attempts", attempts);
            match rep.chosen {
                Some(k) => {
                    report.value("chosenQ", &rep.attempts[k].label);
                    report.check("a(0, d-i) = (-1)^i j_i", true, None);
                }
                None => {
                    report.notes.push("no tested q satisfied the identity within the grid".into());
                    report.status = Status::Inconclusive;
                }
            }
        }
        Command::VerifyInvariance => {
            let rep = clock.time("invariance", || hyperplane_invariance_check(&ms, &seeds, t_max, 3))?;
            for o in &rep.outcomes {
                report.check(format!("j_i preserved for i <= d-2, seed {}", o.seed), o.preserved, None);
                if let Some(ok) = o.remark_holds {
                    report.check(format!("j_(d-1) does not decrease, seed {}", o.seed), ok, Some(format!("delta {}", o.delta)));
                }
                report.value(
                    &format!("seed{}", o.seed),
                    json!({ "before": o.before, "after": o.after, "delta": o.delta, "probePassed": o.probe_passed }),
                );
            }
        }
        Command::Thm34Probe => {
            let s_values: Vec<usize> = match params.s_max {
                Some(s) => (0..=s).collect(),
                None => vec![2, 3],
            };
            let rep = clock.time("probe", || thm34_probe(&ms, &q, &s_values, seed))?;
            let cells: Vec<_> = rep.cells.iter().map(|c| json!({ "i": c.i, "s": c.s, "holds": c.holds })).collect();
            report.value("cells", cells);
            report.value("allHold", rep.all_hold());
        }
    }
    if timings {
        report.timings = Some(clock.marks);
    }
    Ok(report)
}
