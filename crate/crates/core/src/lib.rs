//! Generalized Hilbert-Samuel functions of arbitrary homogeneous ideals.
//!
//! The crate is layered bottom-up:
//!
//! * [`algebra`]: prime fields, monomials, orders, sparse polynomials.
//! * [`groebner`]: normal forms, Buchberger with Gebauer-Moeller pruning,
//!   Hilbert numerators of monomial ideals.
//! * [`ideals`]: sums, products, powers, colon ideals, saturation,
//!   intersection, elimination, Hilbert series and finite lengths.
//! * [`genhilbert`]: the torsion lengths `eps(t)` of `I^t M / I^(t+1) M`,
//!   generalized Hilbert series and j-coefficients, analytic spread,
//!   reductions, general sections and the residual series.
//! * [`bigraded`]: bigraded length tables, double-binomial fits, the
//!   generalized Singh formula and hyperplane-section checks.
//!
//! All modules are cyclic, `M = R/A`, over a standard-graded polynomial ring
//! `R`; the maximal ideal is always the irrelevant ideal of all variables.

pub mod algebra;
pub mod bigraded;
pub mod error;
pub mod genhilbert;
pub mod groebner;
pub mod ideals;

pub use error::{Error, Result};
