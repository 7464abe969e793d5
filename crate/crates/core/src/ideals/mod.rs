//! Ideals of a polynomial ring and the operations every length in the
//! library is assembled from.

mod minors;
mod ops;
mod series;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

pub use minors::minors;
pub use ops::{
    colon, colon_ideal, colon_via_intersection, eliminate, intersect, saturate, saturate_by_element, saturate_by_generators,
    saturate_maximal,
    saturate_with_cap, Saturation, DEFAULT_SATURATION_CAP,
};
pub use series::RationalSeries;

use crate::algebra::{FieldElement, Monomial, MonomialOrder, Polynomial, Ring};
use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, hilbert_numerator_monomial, GroebnerBasis, IntPoly};

struct Cache {
    bases: HashMap<MonomialOrder, Arc<GroebnerBasis>>,
    /// `powers[t]` is `I^t`, filled on demand.
    powers: Vec<Ideal>,
}

struct Inner {
    ring: Ring,
    gens: Vec<Polynomial>,
    homogeneous: bool,
    cache: Mutex<Cache>,
}

/// An ideal given by generators, with lazily cached Groebner bases per
/// order and cached powers. Cloning shares the caches.
#[derive(Clone)]
pub struct Ideal(Arc<Inner>);

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.0.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

/// Result of [`combine`].
#[derive(Debug, Clone)]
pub enum Combined {
    Ideal(Ideal),
    Bool(bool),
}

/// Binary ideal verbs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verb {
    Sum,
    Product,
    /// Power of the first operand; the second is ignored.
    Power(u32),
    Equal,
    /// Does the first ideal contain the second?
    Contains,
}

pub fn combine(j: &Ideal, k: &Ideal, verb: Verb) -> Result<Combined> {
    j.check_ring(k)?;
    Ok(match verb {
        Verb::Sum => Combined::Ideal(j.sum(k)?),
        Verb::Product => Combined::Ideal(j.product(k)?),
        Verb::Power(t) => Combined::Ideal(j.power(t)?),
        Verb::Equal => Combined::Bool(j.equals(k)?),
        Verb::Contains => Combined::Bool(j.contains(k)?),
    })
}

/// Scales to leading coefficient one under grevlex.
fn canonical(g: &Polynomial) -> Polynomial {
    g.with_order(MonomialOrder::GrevLex).monic()
}

impl Ideal {
    /// Ideal generated by `gens` (zeros dropped, duplicates merged).
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Ideal> {
        if gens.iter().any(|g| g.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        let mut out: Vec<Polynomial> = Vec::with_capacity(gens.len());
        for g in gens.iter().filter(|g| !g.is_zero()).map(canonical) {
            if !out.contains(&g) {
                out.push(g);
            }
        }
        let homogeneous = out.iter().all(|g| g.is_homogeneous());
        Ok(Ideal(Arc::new(Inner {
            ring: ring.clone(),
            gens: out,
            homogeneous,
            cache: Mutex::new(Cache { bases: HashMap::new(), powers: Vec::new() }),
        })))
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::new(ring, Vec::new()).expect("same ring")
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)]).expect("same ring")
    }

    /// The irrelevant ideal of all variables.
    pub fn maximal(ring: &Ring) -> Ideal {
        let vars = (0..ring.nvars()).map(|i| Polynomial::var(ring, i).expect("in range")).collect();
        Ideal::new(ring, vars).expect("same ring")
    }

    pub fn from_monomials(ring: &Ring, monos: &[Monomial]) -> Result<Ideal> {
        let gens = monos.iter().map(|m| Polynomial::monomial(ring, *m, FieldElement::ONE)).collect();
        Ideal::new(ring, gens)
    }

    pub fn ring(&self) -> &Ring {
        &self.0.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.0.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.0.homogeneous
    }

    pub fn is_zero(&self) -> bool {
        self.0.gens.is_empty()
    }

    /// The common degree of all generators, if there is one.
    pub fn generator_degree(&self) -> Option<u32> {
        let d = self.0.gens.first()?.degree()?;
        if self.0.homogeneous && self.0.gens.iter().all(|g| g.degree() == Some(d)) {
            Some(d)
        } else {
            None
        }
    }

    pub(crate) fn check_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring() != other.ring() {
            Err(Error::RingMismatch)
        } else {
            Ok(())
        }
    }

    fn require_homogeneous(&self) -> Result<()> {
        if self.0.homogeneous {
            Ok(())
        } else {
            Err(Error::NonHomogeneous)
        }
    }

    /// Reduced Groebner basis under `order`, computed once and cached.
    pub fn groebner(&self, order: MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self.0.cache.lock().expect("cache lock").bases.get(&order) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(groebner_basis(&self.0.ring, &self.0.gens, order)?);
        self.0.cache.lock().expect("cache lock").bases.entry(order).or_insert_with(|| gb.clone());
        Ok(gb)
    }

    pub fn grevlex(&self) -> Result<Arc<GroebnerBasis>> {
        self.groebner(MonomialOrder::GrevLex)
    }

    /// Same ideal, generated by its reduced grevlex basis.
    pub fn interreduced(&self) -> Result<Ideal> {
        let gb = self.grevlex()?;
        let out = Ideal::new(self.ring(), gb.elements().to_vec())?;
        out.0.cache.lock().expect("cache lock").bases.insert(MonomialOrder::GrevLex, gb);
        Ok(out)
    }

    pub fn contains_poly(&self, f: &Polynomial) -> Result<bool> {
        if f.ring() != self.ring() {
            return Err(Error::RingMismatch);
        }
        self.grevlex()?.contains(f)
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        let gb = self.grevlex()?;
        for g in other.gens() {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        Ok(self.contains(other)? && other.contains(self)?)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.grevlex()?.is_unit())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = self.gens().to_vec();
        gens.extend(other.gens().iter().cloned());
        Ideal::new(self.ring(), gens)
    }

    /// Sum with extra generators.
    pub fn with_gens(&self, extra: &[Polynomial]) -> Result<Ideal> {
        let mut gens = self.gens().to_vec();
        gens.extend(extra.iter().cloned());
        Ideal::new(self.ring(), gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens().len() * other.gens().len());
        for a in self.gens() {
            for b in other.gens() {
                gens.push(a.mul(b)?);
            }
        }
        Ideal::new(self.ring(), gens)
    }

    /// `I^t`, generated by the reduced grevlex basis; cached on `self`.
    pub fn power(&self, t: u32) -> Result<Ideal> {
        let t = t as usize;
        {
            let cache = self.0.cache.lock().expect("cache lock");
            if let Some(p) = cache.powers.get(t) {
                return Ok(p.clone());
            }
        }
        let mut have = {
            let cache = self.0.cache.lock().expect("cache lock");
            cache.powers.len()
        };
        if have == 0 {
            let unit = Ideal::unit(self.ring());
            self.0.cache.lock().expect("cache lock").powers.push(unit);
            have = 1;
        }
        for s in have..=t {
            let prev = self.0.cache.lock().expect("cache lock").powers[s - 1].clone();
            let next = if s == 1 { self.clone() } else { prev.product(self)?.interreduced()? };
            let mut cache = self.0.cache.lock().expect("cache lock");
            if cache.powers.len() == s {
                cache.powers.push(next);
            }
        }
        Ok(self.0.cache.lock().expect("cache lock").powers[t].clone())
    }

    /// Hilbert series of `R/self` over `(1 - z)^n` (not normalized).
    pub fn hilbert_series(&self) -> Result<RationalSeries> {
        self.require_homogeneous()?;
        let n = self.ring().nvars();
        let lead = self.grevlex()?.leading_monomials();
        Ok(RationalSeries::new(hilbert_numerator_monomial(&lead, n), n))
    }

    /// Krull dimension of `R/self`; `None` for the unit ideal.
    pub fn dimension(&self) -> Result<Option<usize>> {
        Ok(self.hilbert_series()?.pole_order())
    }
}

/// `λ(U/J)` for homogeneous `J ⊆ U`, from the Hilbert-series difference.
pub fn length_between(j: &Ideal, u: &Ideal) -> Result<u64> {
    j.check_ring(u)?;
    if !u.contains(j)? {
        return Err(Error::NotContained("length_between requires J ⊆ U".into()));
    }
    length_unchecked(j, u)
}

/// As [`length_between`] without the containment check.
pub(crate) fn length_unchecked(j: &Ideal, u: &Ideal) -> Result<u64> {
    let hj = j.hilbert_series()?;
    let hu = u.hilbert_series()?;
    length_of_difference(&hj, &hu)
}

/// Value at 1 of `(a - b)` when it is a polynomial.
pub(crate) fn length_of_difference(a: &RationalSeries, b: &RationalSeries) -> Result<u64> {
    debug_assert_eq!(a.denom_exp(), b.denom_exp());
    let mut diff = a.numerator().sub(b.numerator());
    for _ in 0..a.denom_exp() {
        diff = diff.div_one_minus_z().ok_or(Error::InfiniteLength)?;
    }
    let v = diff.eval_one();
    if v < 0 {
        return Err(Error::NotContained("negative length".into()));
    }
    Ok(v as u64)
}

/// `a - b + c - ...` of Hilbert numerators, as an exact polynomial after
/// dividing by `(1 - z)^n`.
pub(crate) fn alternating_length(parts: &[(i64, &RationalSeries)]) -> Result<IntPoly> {
    let n = parts.first().map_or(0, |p| p.1.denom_exp());
    let mut acc = IntPoly::zero();
    for (sign, s) in parts {
        debug_assert_eq!(s.denom_exp(), n);
        acc = acc.add(&s.numerator().mul(&IntPoly::from_coeffs(vec![*sign])));
    }
    for _ in 0..n {
        acc = acc.div_one_minus_z().ok_or(Error::InfiniteLength)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn ring(vars: &[&str]) -> Ring {
        Ring::with_default_prime(vars).unwrap()
    }

    pub(crate) fn mono_ideal(r: &Ring, monos: &[&[u32]]) -> Ideal {
        let ms: Vec<Monomial> = monos.iter().map(|e| Monomial::from_exponents(e).unwrap()).collect();
        Ideal::from_monomials(r, &ms).unwrap()
    }

    #[test]
    fn power_of_maximal() {
        let r = ring(&["x", "y"]);
        let m = Ideal::maximal(&r);
        let m2 = m.power(2).unwrap();
        assert!(m2.equals(&mono_ideal(&r, &[&[2, 0], &[1, 1], &[0, 2]])).unwrap());
        assert!(m.power(0).unwrap().is_unit().unwrap());
        assert_eq!(m.power(3).unwrap().gens().len(), 4);
    }

    #[test]
    fn equality_and_containment() {
        let r = ring(&["x", "y"]);
        let j = mono_ideal(&r, &[&[2, 0], &[1, 1]]);
        let x = mono_ideal(&r, &[&[1, 0]]);
        let prod = x.product(&Ideal::maximal(&r)).unwrap();
        assert!(matches!(combine(&j, &prod, Verb::Equal).unwrap(), Combined::Bool(true)));
        assert!(x.contains(&j).unwrap());
        assert!(!j.contains(&x).unwrap());
        let other = Ideal::zero(&ring(&["a", "b"]));
        assert!(matches!(combine(&j, &other, Verb::Sum), Err(Error::RingMismatch)));
    }

    #[test]
    fn hilbert_series_examples() {
        let r = ring(&["x", "y"]);
        let hs = Ideal::zero(&r).hilbert_series().unwrap();
        assert_eq!(hs, RationalSeries::new(IntPoly::one(), 2));
        assert_eq!(Ideal::zero(&r).dimension().unwrap(), Some(2));
        let j = mono_ideal(&r, &[&[2, 0], &[1, 1]]);
        let hs = j.hilbert_series().unwrap();
        assert_eq!(hs.numerator(), &IntPoly::from_coeffs(vec![1, 0, -2, 1]));
        assert_eq!(hs.normalized(), RationalSeries::new(IntPoly::from_coeffs(vec![1, 1, -1]), 1));
        assert_eq!(j.dimension().unwrap(), Some(1));
        assert_eq!(Ideal::unit(&r).dimension().unwrap(), None);
        let nh = Ideal::new(&r, vec![Polynomial::from_exponents(&r, &[(1, &[2, 0]), (1, &[0, 1])]).unwrap()]).unwrap();
        assert_eq!(nh.hilbert_series(), Err(Error::NonHomogeneous));
    }

    #[test]
    fn lengths() {
        let r = ring(&["x", "y"]);
        let j = mono_ideal(&r, &[&[2, 0], &[1, 1]]);
        let x = mono_ideal(&r, &[&[1, 0]]);
        assert_eq!(length_between(&j, &x).unwrap(), 1);
        assert_eq!(length_between(&j, &j).unwrap(), 0);
        let m = Ideal::maximal(&r);
        assert_eq!(length_between(&m.power(2).unwrap(), &m).unwrap(), 2);
        assert!(matches!(length_between(&x, &j), Err(Error::NotContained(_))));
        assert_eq!(length_between(&Ideal::zero(&r), &x), Err(Error::InfiniteLength));
    }

    #[test]
    fn generator_degree() {
        let r = ring(&["x", "y"]);
        assert_eq!(mono_ideal(&r, &[&[2, 0], &[1, 1]]).generator_degree(), Some(2));
        assert_eq!(mono_ideal(&r, &[&[2, 0], &[0, 1]]).generator_degree(), None);
    }
}
