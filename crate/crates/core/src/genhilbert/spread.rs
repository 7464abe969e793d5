use super::ModuleSpec;
use crate::algebra::{random_linear_combination, GeneralElements, MonomialOrder, Polynomial};
use crate::error::{Error, Result};
use crate::ideals::{eliminate, length_between, Ideal};

/// `ℓ(I)`: Krull dimension of the fiber cone of an equigenerated `I`.
pub fn analytic_spread(i: &Ideal) -> Result<usize> {
    spread_mod(i, &Ideal::zero(i.ring()))
}

/// `ℓ(I, R/A)`: dimension of the subalgebra of `R/A` generated by the
/// generators of `I`.
pub fn analytic_spread_on(spec: &ModuleSpec) -> Result<usize> {
    spread_mod(&spec.i, &spec.a)
}

fn spread_mod(i: &Ideal, a: &Ideal) -> Result<usize> {
    i.generator_degree().ok_or(Error::NotEquigenerated)?;
    let ring = i.ring();
    let n = ring.nvars();
    let names: Vec<String> = (0..i.gens().len()).map(|k| ring.fresh_name(&format!("y{k}_"))).collect();
    let big = ring.with_appended(&names)?;
    let order = MonomialOrder::GrevLex;
    let mut gens = Vec::with_capacity(i.gens().len() + a.gens().len());
    for (k, f) in i.gens().iter().enumerate() {
        let y = Polynomial::var(&big, n + k)?;
        gens.push(y.sub(&f.extend_into(&big, order))?);
    }
    for g in a.gens() {
        gens.push(g.extend_into(&big, order));
    }
    let block: Vec<usize> = (0..n).collect();
    let fiber = eliminate(&Ideal::new(&big, gens)?, &block)?;
    Ok(fiber.dimension()?.unwrap_or(0))
}

/// A general minimal reduction `J` of `I` and the lengths `λ(I^{t+1}/J I^t)`.
#[derive(Debug, Clone)]
pub struct MinimalReduction {
    pub j: Ideal,
    pub general: GeneralElements,
    pub spread: usize,
    /// Least `r ≤ r_max` with `J I^r = I^{r+1}`.
    pub reduction_number: Option<usize>,
    /// `λ(I^{t+1}/J I^t)` for `t = 0..`; `None` marks an infinite length.
    pub lengths: Vec<Option<u64>>,
}

pub fn minimal_reduction(i: &Ideal, seed: u64, r_max: usize) -> Result<MinimalReduction> {
    let spread = analytic_spread(i)?;
    let general = random_linear_combination(i.gens(), spread, seed)?;
    let j = Ideal::new(i.ring(), general.elements.clone())?;
    let mut lengths = Vec::new();
    let mut reduction_number = None;
    for r in 0..=r_max {
        let ir = i.power(r as u32)?;
        let next = i.power(r as u32 + 1)?;
        let jir = j.product(&ir)?;
        let len = match length_between(&jir, &next) {
            Ok(v) => Some(v),
            Err(Error::InfiniteLength) => None,
            Err(e) => return Err(e),
        };
        lengths.push(len);
        if len == Some(0) {
            reduction_number = Some(r);
            break;
        }
    }
    Ok(MinimalReduction { j, general, spread, reduction_number, lengths })
}

#[cfg(test)]
mod tests {
    use super::super::tests::mono_ideal;
    use super::*;
    use crate::algebra::Ring;

    #[test]
    fn spreads_of_small_ideals() {
        let r = Ring::with_default_prime(&["x", "y"]).unwrap();
        assert_eq!(analytic_spread(&Ideal::maximal(&r)).unwrap(), 2);
        assert_eq!(analytic_spread(&mono_ideal(&r, &[&[2, 0], &[1, 1]])).unwrap(), 2);
        assert_eq!(analytic_spread(&mono_ideal(&r, &[&[1, 0]])).unwrap(), 1);
        assert_eq!(analytic_spread(&mono_ideal(&r, &[&[2, 0], &[0, 1]])), Err(Error::NotEquigenerated));
    }

    #[test]
    fn spread_on_a_quotient() {
        let r = Ring::with_default_prime(&["x", "y"]).unwrap();
        let spec = ModuleSpec::new(mono_ideal(&r, &[&[0, 1]]), Ideal::maximal(&r)).unwrap();
        assert_eq!(analytic_spread_on(&spec).unwrap(), 1);
    }

    #[test]
    fn regular_sequence_is_its_own_reduction() {
        let r = Ring::with_default_prime(&["x", "y"]).unwrap();
        let red = minimal_reduction(&Ideal::maximal(&r), 3, 3).unwrap();
        assert_eq!(red.reduction_number, Some(0));
        assert_eq!(red.lengths, vec![Some(0)]);
        assert!(red.j.equals(&Ideal::maximal(&r)).unwrap());
    }

    #[test]
    fn monomial_reduction() {
        // two general combinations of two generators span the ideal
        let r = Ring::with_default_prime(&["x", "y"]).unwrap();
        let red = minimal_reduction(&mono_ideal(&r, &[&[2, 0], &[1, 1]]), 5, 3).unwrap();
        assert_eq!(red.reduction_number, Some(0));
    }
}
