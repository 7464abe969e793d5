//! Seeded "general elements": random linear combinations with unit
//! coefficients drawn from the nonzero field elements.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::FieldElement;
use super::poly::Polynomial;
use crate::error::{Error, Result};

/// Combinations `xi_i = sum_j lambda_ij g_j` together with their coefficient
/// matrix, so every run can be replayed from `seed`.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralElements {
    pub seed: u64,
    pub elements: Vec<Polynomial>,
    /// `coefficients[i][j]` is the multiplier of generator `j` in element `i`.
    pub coefficients: Vec<Vec<FieldElement>>,
}

/// Draws `count` general linear combinations of `gens`.
///
/// Deterministic in `(gens, count, seed)`. If all generators share one
/// degree the outputs are homogeneous of that degree.
pub fn random_linear_combination(gens: &[Polynomial], count: usize, seed: u64) -> Result<GeneralElements> {
    let first = gens.first().ok_or(Error::EmptyGenerators)?;
    let ring = first.ring().clone();
    let field = *ring.field();
    let p = field.characteristic();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut elements = Vec::with_capacity(count);
    let mut coefficients = Vec::with_capacity(count);
    for _ in 0..count {
        let row: Vec<FieldElement> = gens.iter().map(|_| FieldElement(rng.gen_range(1..p))).collect();
        let mut acc = Polynomial::zero(&ring);
        for (g, &c) in gens.iter().zip(&row) {
            acc = acc.add(&g.scale(c))?;
        }
        elements.push(acc);
        coefficients.push(row);
    }
    Ok(GeneralElements { seed, elements, coefficients })
}
