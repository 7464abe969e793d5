//! Job specifications: the JSON input format and its validation.

use clap::ValueEnum;
use ghilb_core::algebra::{Polynomial, Ring, DEFAULT_PRIME};
use ghilb_core::genhilbert::ModuleSpec;
use ghilb_core::ideals::{minors, Ideal};
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::parse::parse_polynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Series,
    Jcoeffs,
    Jmult,
    Spread,
    Reduction,
    Residual,
    Section,
    SinghCheck,
    BigradedFit,
    VerifyProp24,
    VerifyInvariance,
    Thm34Probe,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Series => "series",
            Command::Jcoeffs => "jcoeffs",
            Command::Jmult => "jmult",
            Command::Spread => "spread",
            Command::Reduction => "reduction",
            Command::Residual => "residual",
            Command::Section => "section",
            Command::SinghCheck => "singh-check",
            Command::BigradedFit => "bigraded-fit",
            Command::VerifyProp24 => "verify-prop24",
            Command::VerifyInvariance => "verify-invariance",
            Command::Thm34Probe => "thm34-probe",
        }
    }
}

fn default_char() -> u64 {
    DEFAULT_PRIME as u64
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub vars: Vec<String>,
    #[serde(rename = "char", default = "default_char")]
    pub characteristic: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MinorsSpec {
    pub size: usize,
    pub matrix: Vec<Vec<String>>,
}

/// Explicit generators or the ideal of `size`-minors of a matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IdealSpec {
    Gens { gens: Vec<String> },
    Minors { minors: MinorsSpec },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_max: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s_max: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub seeds: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<IdealSpec>,
    /// Number of general elements for `section`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sections: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub ring: RingSpec,
    pub ideal: IdealSpec,
    /// `A` with `M = R/A`; zero when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<IdealSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub command: Option<Command>,
    #[serde(default, skip_serializing_if = "is_default")]
    pub params: Params,
}

fn is_default(p: &Params) -> bool {
    *p == Params::default()
}

/// A validated job with its algebraic objects built.
#[derive(Debug, Clone)]
pub struct Job {
    pub spec: JobSpec,
    pub ring: Ring,
    pub i: Ideal,
    pub a: Ideal,
    pub q: Option<Ideal>,
}

impl Job {
    pub fn module_spec(&self) -> Result<ModuleSpec, CliError> {
        Ok(ModuleSpec::new(self.a.clone(), self.i.clone())?)
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_homogeneous(ring: &Ring, text: &str, what: &str) -> Result<Polynomial, CliError> {
    let f = parse_polynomial(ring, text).map_err(|e| CliError::Parse { context: format!("{what} \"{text}\""), source: e })?;
    if !f.is_homogeneous() {
        return Err(CliError::Input(format!("{what} \"{text}\" is not homogeneous")));
    }
    Ok(f)
}

/// Builds the ideal and rewrites its generator strings canonically.
fn build_ideal(ring: &Ring, spec: &mut IdealSpec, what: &str) -> Result<Ideal, CliError> {
    match spec {
        IdealSpec::Gens { gens } => {
            let polys = gens
                .iter()
                .map(|g| parse_homogeneous(ring, g, &format!("{what} generator")))
                .collect::<Result<Vec<_>, _>>()?;
            *gens = polys.iter().map(|p| p.to_string()).collect();
            Ok(Ideal::new(ring, polys)?)
        }
        IdealSpec::Minors { minors: m } => {
            let width = m.matrix.first().map_or(0, |r| r.len());
            if m.matrix.is_empty() || width == 0 || m.matrix.iter().any(|r| r.len() != width) {
                return Err(CliError::Input(format!("{what} matrix must be a nonempty rectangle")));
            }
            if m.size == 0 || m.size > m.matrix.len().min(width) {
                return Err(CliError::Input(format!("{what} minor size {} does not fit the matrix", m.size)));
            }
            let mut entries = Vec::with_capacity(m.matrix.len());
            for row in m.matrix.iter_mut() {
                let polys = row
                    .iter()
                    .map(|e| parse_polynomial(ring, e).map_err(|err| CliError::Parse { context: format!("{what} entry \"{e}\""), source: err }))
                    .collect::<Result<Vec<_>, _>>()?;
                *row = polys.iter().map(|p| p.to_string()).collect();
                entries.push(polys);
            }
            let ideal = minors(m.size, &entries)?;
            if !ideal.is_homogeneous() {
                return Err(CliError::Input(format!("{what} minors are not homogeneous")));
            }
            Ok(ideal)
        }
    }
}

/// Parses and validates a JSON job; generator strings come back canonical.
pub fn parse_input(text: &str) -> Result<JobSpec, CliError> {
    let spec: JobSpec = serde_json::from_str(text)?;
    Ok(resolve(spec)?.spec)
}

pub fn resolve(mut spec: JobSpec) -> Result<Job, CliError> {
    if let Some(bad) = spec.ring.vars.iter().find(|v| !is_identifier(v)) {
        return Err(CliError::Input(format!("variable name \"{bad}\" is not an identifier")));
    }
    if spec.ring.vars.is_empty() {
        return Err(CliError::Input("the ring needs at least one variable".into()));
    }
    let ring = Ring::new(&spec.ring.vars, spec.ring.characteristic)?;
    let i = build_ideal(&ring, &mut spec.ideal, "ideal")?;
    let a = match spec.module.as_mut() {
        Some(m) => build_ideal(&ring, m, "module")?,
        None => Ideal::zero(&ring),
    };
    let q = match spec.params.q.as_mut() {
        Some(q) => Some(build_ideal(&ring, q, "q")?),
        None => None,
    };
    Ok(Job { spec, ring, i, a, q })
}

/// Pretty JSON rendering accepted by [`parse_input`].
pub fn print_spec(spec: &JobSpec) -> String {
    serde_json::to_string_pretty(spec).expect("job specs serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_generators() {
        let spec = parse_input(r#"{"ring":{"vars":["x","y"],"char":32003},"ideal":{"gens":["x^2","x*y"]},"command":"series"}"#)
            .unwrap();
        assert_eq!(spec.command, Some(Command::Series));
        assert_eq!(spec.ideal, IdealSpec::Gens { gens: vec!["x^2".into(), "x*y".into()] });
    }

    #[test]
    fn accepts_minors() {
        let text = r#"{"ring":{"vars":["x","y","z","v","w"]},
            "ideal":{"minors":{"size":2,"matrix":[["x","y","z","v"],["y","z","v","w"]]}}}"#;
        let job = resolve(serde_json::from_str(text).unwrap()).unwrap();
        assert_eq!(job.i.gens().len(), 6);
        assert!(job.i.gens().iter().all(|g| g.degree() == Some(2)));
        assert_eq!(job.spec.ring.characteristic, 32003);
    }

    #[test]
    fn rejects_bad_input() {
        let bad = [
            r#"{"ring":{"vars":["x","y"]},"ideal":{"gens":["x^2+y"]}}"#,
            r#"{"ring":{"vars":["x","y"]},"ideal":{"gens":["x*z"]}}"#,
            r#"{"ring":{"vars":["x","y"],"char":32002},"ideal":{"gens":["x"]}}"#,
            r#"{"ring":{"vars":["x","y"]},"ideal":{"minors":{"size":2,"matrix":[["x","y"],["y"]]}}}"#,
            r#"{"ring":{"vars":["x","y"]},"ideal":{"minors":{"size":3,"matrix":[["x","y"],["y","x"]]}}}"#,
            r#"{"ring":{"vars":["x","y"]},"ideal":{"gens":["x"]},"extra":1}"#,
            r#"{"ring":{"vars":["x y"]},"ideal":{"gens":["x"]}}"#,
        ];
        for text in bad {
            assert!(parse_input(text).is_err(), "{text}");
        }
    }

    #[test]
    fn canonical_round_trip() {
        let spec = parse_input(r#"{"ring":{"vars":["x","y"]},"ideal":{"gens":["y*x + x^2"]},"params":{"tMax":5}}"#).unwrap();
        assert_eq!(spec.ideal, IdealSpec::Gens { gens: vec!["x^2 + x*y".into()] });
        assert_eq!(parse_input(&print_spec(&spec)).unwrap(), spec);
    }
}
