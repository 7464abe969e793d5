use std::fmt;
use std::sync::Arc;

use super::field::{PrimeField, DEFAULT_PRIME};
use super::monomial::MAX_VARS;
use crate::error::{Error, Result};

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingData {
    vars: Vec<String>,
    field: PrimeField,
}

/// A standard-graded polynomial ring `F_p[x_0, ..., x_{n-1}]`.
///
/// Cheap to clone; two rings are equal when they have the same variable
/// names in the same order and the same characteristic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ring(Arc<RingData>);

impl Ring {
    pub fn new<S: AsRef<str>>(vars: &[S], characteristic: u64) -> Result<Self> {
        if vars.len() > MAX_VARS {
            return Err(Error::TooManyVariables { given: vars.len(), max: MAX_VARS });
        }
        let field = PrimeField::new(characteristic)?;
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::InvalidArgument(format!("duplicate variable name {v}")));
            }
        }
        Ok(Ring(Arc::new(RingData { vars, field })))
    }

    /// Ring over the default prime 32003.
    pub fn with_default_prime<S: AsRef<str>>(vars: &[S]) -> Result<Self> {
        Self::new(vars, DEFAULT_PRIME as u64)
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.0.field
    }

    pub fn var_names(&self) -> &[String] {
        &self.0.vars
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    /// The same field with extra variables prepended.
    pub(crate) fn with_prepended(&self, names: &[String]) -> Result<Ring> {
        let mut vars = names.to_vec();
        vars.extend(self.0.vars.iter().cloned());
        Ring::new(&vars, self.0.field.characteristic() as u64)
    }

    /// The same field with extra variables appended.
    pub(crate) fn with_appended(&self, names: &[String]) -> Result<Ring> {
        let mut vars = self.0.vars.clone();
        vars.extend(names.iter().cloned());
        Ring::new(&vars, self.0.field.characteristic() as u64)
    }

    /// Variables listed in a new order.
    pub(crate) fn permuted(&self, perm: &[usize]) -> Result<Ring> {
        let mut vars = vec![String::new(); self.nvars()];
        for (i, &j) in perm.iter().enumerate() {
            vars[j] = self.0.vars[i].clone();
        }
        Ring::new(&vars, self.0.field.characteristic() as u64)
    }

    /// A fresh variable name not clashing with existing ones.
    pub(crate) fn fresh_name(&self, stem: &str) -> String {
        let mut k = 0;
        loop {
            let cand = format!("{stem}{k}");
            if self.index_of(&cand).is_none() {
                return cand;
            }
            k += 1;
        }
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}[{}]", self.0.field.characteristic(), self.0.vars.join(","))
    }
}
