//! Exact arithmetic foundation: prime fields, monomials and their orders,
//! sparse polynomials, and seeded general elements.

mod field;
mod monomial;
mod order;
mod poly;
mod random;
mod ring;

pub use field::{FieldElement, PrimeField, DEFAULT_PRIME};
pub use monomial::{Monomial, MAX_EXPONENT, MAX_VARS};
pub use order::{MonomialOrder, Weights};
pub use poly::{Polynomial, Term};
pub use random::{random_linear_combination, GeneralElements};
pub use ring::Ring;

