//! Groebner-basis kernel: normal forms, Buchberger's algorithm and Hilbert
//! numerators of monomial quotients.

mod buchberger;
mod hilbert;
mod reduce;

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

pub use hilbert::{hilbert_numerator_monomial, IntPoly};
pub use reduce::{set_step_budget, step_budget, DEFAULT_STEP_BUDGET};


use crate::algebra::{Monomial, MonomialOrder, Polynomial, Ring};
use crate::error::{Error, Result};
use buchberger::Engine;
use reduce::{reduce, Budget, Mode, Reducer};

/// A reduced, monic Groebner basis, sorted by increasing leading monomial.
#[derive(Clone)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
    reducers: Vec<Reducer>,
    source: u64,
}

impl std::fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroebnerBasis")
            .field("ring", &self.ring)
            .field("order", &self.order)
            .field("elements", &self.elements)
            .finish()
    }
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.order == other.order && self.elements == other.elements
    }
}

/// Hash of a generator list, used to identify the ideal a basis came from.
pub(crate) fn source_id(gens: &[Polynomial]) -> u64 {
    let mut h = DefaultHasher::new();
    for g in gens {
        g.terms().hash(&mut h);
    }
    h.finish()
}

/// Computes the reduced Groebner basis of the ideal generated by `gens`.
///
/// Generators are all converted to `order`. The result depends only on the
/// ideal and the order; the run is deterministic in the input sequence.
pub fn groebner_basis(ring: &Ring, gens: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis> {
    if gens.iter().any(|g| g.ring() != ring) {
        return Err(Error::RingMismatch);
    }
    let field = *ring.field();
    let nvars = ring.nvars();
    let inputs = gens.iter().filter(|g| !g.is_zero()).map(|g| g.with_order(order).into_terms()).collect();
    let mut engine = Engine::new(&field, &order, nvars);
    engine.run(inputs)?;
    let reduced = engine.reduced_basis()?;
    let reducers: Vec<Reducer> = reduced.iter().map(|t| Reducer::new(t.clone(), nvars)).collect();
    let elements = reduced.into_iter().map(|t| Polynomial::from_sorted(ring.clone(), order, t)).collect();
    Ok(GroebnerBasis { ring: ring.clone(), order, elements, reducers, source: source_id(gens) })
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    /// Identity of the generating sequence this basis was computed from.
    pub fn source(&self) -> u64 {
        self.source
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// True when the basis generates the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.reducers.iter().map(|r| r.lm).collect()
    }

    /// Remainder of `f` on division by the basis; the canonical
    /// representative of `f` modulo the ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Ok(Polynomial::zero(&self.ring).with_order(self.order));
        }
        if f.order() != self.order {
            return Err(Error::OrderMismatch);
        }
        let active: Vec<usize> = (0..self.reducers.len()).collect();
        let mut budget = Budget::new();
        let field = *self.ring.field();
        let rem = reduce(&field, &self.order, self.ring.nvars(), f.terms(), &self.reducers, &active, Mode::Full, &mut budget)?;
        Ok(Polynomial::from_sorted(self.ring.clone(), self.order, rem))
    }

    /// Ideal membership.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(&f.with_order(self.order))?.is_zero())
    }
}
