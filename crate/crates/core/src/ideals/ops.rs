//! Colon ideals, saturation, intersection and elimination.

use super::{length_unchecked, Ideal};
use crate::algebra::{Monomial, MonomialOrder, Polynomial, Ring, Term, Weights};
use crate::error::{Error, Result};

/// Default cap on colon steps in [`saturate`].
pub const DEFAULT_SATURATION_CAP: usize = 50;

/// Stable value of the chain `J ⊆ J:K ⊆ J:K^2 ⊆ ...`.
#[derive(Debug, Clone)]
pub struct Saturation {
    pub ideal: Ideal,
    /// Number of colon steps that enlarged the ideal.
    pub iterations: usize,
}

/// `J ∩ K` through the auxiliary variable `t`: `(tJ + (1-t)K) ∩ R`.
pub fn intersect(j: &Ideal, k: &Ideal) -> Result<Ideal> {
    j.check_ring(k)?;
    let ring = j.ring();
    if j.is_zero() || k.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    if j.is_unit()? {
        return Ok(k.clone());
    }
    if k.is_unit()? {
        return Ok(j.clone());
    }
    let order = MonomialOrder::Elim(1);
    let big = ring.with_prepended(&[ring.fresh_name("t")])?;
    let t = Polynomial::var(&big, 0)?.with_order(order);
    let one_minus_t = Polynomial::one(&big).with_order(order).sub(&t)?;
    let mut gens = Vec::with_capacity(j.gens().len() + k.gens().len());
    for g in j.gens() {
        gens.push(t.mul(&g.shift_into(&big, 1, order)?)?);
    }
    for g in k.gens() {
        gens.push(one_minus_t.mul(&g.shift_into(&big, 1, order)?)?);
    }
    let gb = Ideal::new(&big, gens)?.groebner(order)?;
    let kept = gb
        .elements()
        .iter()
        .filter(|g| !g.involves_any(&[0]))
        .map(|g| g.unshift_into(ring, 1, MonomialOrder::GrevLex))
        .collect();
    Ideal::new(ring, kept)
}

/// Contraction `J ∩ k[remaining variables]`, returned in the subring of the
/// variables outside `block` (in their original order).
pub fn eliminate(j: &Ideal, block: &[usize]) -> Result<Ideal> {
    let ring = j.ring();
    let n = ring.nvars();
    if block.is_empty() {
        return Ok(j.clone());
    }
    let mut seen = vec![false; n];
    for &b in block {
        if b >= n || seen[b] {
            return Err(Error::BadVariable(b));
        }
        seen[b] = true;
    }
    let k = block.len();
    let rest: Vec<usize> = (0..n).filter(|i| !seen[*i]).collect();
    let mut perm = vec![0; n];
    for (slot, &b) in block.iter().enumerate() {
        perm[b] = slot;
    }
    for (slot, &r) in rest.iter().enumerate() {
        perm[r] = k + slot;
    }
    let order = MonomialOrder::Elim(k);
    let permuted = ring.permuted(&perm)?;
    let gens = j.gens().iter().map(|g| g.permute_into(&permuted, &perm, order)).collect();
    let gb = Ideal::new(&permuted, gens)?.groebner(order)?;
    let names: Vec<String> = rest.iter().map(|&r| ring.var_names()[r].clone()).collect();
    let sub = Ring::new(&names, ring.field().characteristic() as u64)?;
    let block_slots: Vec<usize> = (0..k).collect();
    let kept = gb
        .elements()
        .iter()
        .filter(|g| !g.involves_any(&block_slots))
        .map(|g| g.unshift_into(&sub, k, MonomialOrder::GrevLex))
        .collect();
    Ideal::new(&sub, kept)
}

/// `J : f`.
pub fn colon(j: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if f.ring() != j.ring() {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Ok(j.clone());
    }
    if j.is_homogeneous() && f.is_homogeneous() {
        weighted_colon(j, f, false)
    } else {
        colon_via_intersection(j, f)
    }
}

/// `J : f = (J ∩ (f)) / f`.
pub fn colon_via_intersection(j: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let principal = Ideal::new(j.ring(), vec![f.clone()])?;
    let meet = intersect(j, &principal)?;
    let f = f.with_order(MonomialOrder::GrevLex);
    let gens = meet.gens().iter().map(|g| exact_div(g, &f)).collect::<Result<Vec<_>>>()?;
    Ideal::new(j.ring(), gens)
}

/// `J : K = ∩_g (J : g)` over the generators of `K`.
pub fn colon_ideal(j: &Ideal, k: &Ideal) -> Result<Ideal> {
    j.check_ring(k)?;
    let mut acc: Option<Ideal> = None;
    for g in k.gens() {
        let c = colon(j, g)?;
        acc = Some(match acc {
            None => c,
            Some(a) => intersect(&a, &c)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::unit(j.ring())))
}

/// `J : K^∞` by iterated colon, with the default cap.
pub fn saturate(j: &Ideal, k: &Ideal) -> Result<Saturation> {
    saturate_with_cap(j, k, DEFAULT_SATURATION_CAP)
}

pub fn saturate_with_cap(j: &Ideal, k: &Ideal, cap: usize) -> Result<Saturation> {
    j.check_ring(k)?;
    if k.is_zero() {
        return Err(Error::InvalidArgument("cannot saturate by the zero ideal".into()));
    }
    let mut cur = j.clone();
    for step in 0..=cap {
        let next = colon_ideal(&cur, k)?;
        if cur.contains(&next)? {
            return Ok(Saturation { ideal: cur, iterations: step });
        }
        cur = next.interreduced()?;
    }
    Err(Error::IterationCapExceeded { cap })
}

/// `J : f^∞`.
pub fn saturate_by_element(j: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if f.ring() != j.ring() {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Ok(j.clone());
    }
    if j.is_homogeneous() && f.is_homogeneous() {
        return weighted_colon(j, f, true);
    }
    let k = Ideal::new(j.ring(), vec![f.clone()])?;
    Ok(saturate(j, &k)?.ideal)
}

/// `J : K^∞ = ∩_g (J : g^∞)` over the generators of `K`.
pub fn saturate_by_generators(j: &Ideal, k: &Ideal) -> Result<Ideal> {
    j.check_ring(k)?;
    if k.is_zero() {
        return Err(Error::InvalidArgument("cannot saturate by the zero ideal".into()));
    }
    let mut acc: Option<Ideal> = None;
    for g in k.gens() {
        let s = saturate_by_element(j, g)?.interreduced()?;
        acc = Some(match acc {
            None => s,
            Some(a) => intersect(&a, &s)?.interreduced()?,
        });
    }
    Ok(acc.expect("nonzero ideal has a generator"))
}

/// `J : m^∞` for homogeneous `J`, `m` the ideal of all variables.
///
/// `J : x_i^∞` always contains the saturation and equals it exactly when
/// the quotient over `J` has finite length; otherwise the per-variable
/// saturations are intersected.
pub fn saturate_maximal(j: &Ideal) -> Result<Ideal> {
    if !j.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    let ring = j.ring();
    let n = ring.nvars();
    if j.is_zero() || n == 0 || j.is_unit()? {
        return Ok(j.clone());
    }
    let mut parts: Vec<Ideal> = Vec::with_capacity(n);
    for var in (0..n).rev() {
        let s = variable_saturation(j, var)?;
        match length_unchecked(j, &s) {
            Ok(_) => return Ok(s),
            Err(Error::InfiniteLength) => parts.push(s),
            Err(e) => return Err(e),
        }
        if var + 2 == n {
            // two variables failed: intersect them all
            for v in (0..var).rev() {
                parts.push(variable_saturation(j, v)?);
            }
            break;
        }
    }
    let mut acc = parts[0].clone();
    for p in &parts[1..] {
        acc = intersect(&acc, p)?.interreduced()?;
    }
    Ok(acc)
}

/// `J : x_var^∞` via a grevlex basis with `x_var` the last variable.
fn variable_saturation(j: &Ideal, var: usize) -> Result<Ideal> {
    let ring = j.ring();
    let n = ring.nvars();
    let last = n - 1;
    let strip = |g: &Polynomial, v: usize| -> Result<Polynomial> {
        let c = g.var_content(v);
        if c == 0 {
            return Ok(g.clone());
        }
        g.div_monomial(&Monomial::var_pow(v, c)?)
    };
    if var == last {
        let gb = j.grevlex()?;
        let gens = gb.elements().iter().map(|g| strip(g, last)).collect::<Result<Vec<_>>>()?;
        return Ideal::new(ring, gens);
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.swap(var, last);
    let order = MonomialOrder::GrevLex;
    let permuted = ring.permuted(&perm)?;
    let gens = j.gens().iter().map(|g| g.permute_into(&permuted, &perm, order)).collect();
    let gb = Ideal::new(&permuted, gens)?.grevlex()?;
    let back = gb
        .elements()
        .iter()
        .map(|g| Ok(strip(g, last)?.permute_into(ring, &perm, order)))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, back)
}

/// `J : f` or `J : f^∞` for homogeneous data.
///
/// In `R[u]` with `deg u = deg f`, the ideal `J + (u - f)` presents `R/J`
/// with `u` acting as `f`. A weighted grevlex basis with `u` last exposes
/// the colon by `u` as division of basis elements by powers of `u`;
/// substituting `u = f` brings the generators back to `R`.
fn weighted_colon(j: &Ideal, f: &Polynomial, infinite: bool) -> Result<Ideal> {
    let ring = j.ring();
    let n = ring.nvars();
    let e = f.degree().ok_or(Error::ZeroPolynomial)?;
    let big = ring.with_appended(&[ring.fresh_name("u")])?;
    let mut w = Weights::standard();
    w.0[n] = u16::try_from(e).map_err(|_| Error::DegreeOverflow { limit: u16::MAX as u32 })?;
    let order = MonomialOrder::WeightedGrevLex(w);
    let mut gens: Vec<Polynomial> = j.gens().iter().map(|g| g.extend_into(&big, order)).collect();
    let u = Polynomial::var(&big, n)?.with_order(order);
    gens.push(u.sub(&f.extend_into(&big, order))?);
    let gb = Ideal::new(&big, gens)?.groebner(order)?;
    let mut images: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(ring, i)).collect::<Result<_>>()?;
    images.push(f.with_order(MonomialOrder::GrevLex));
    let mut out = Vec::with_capacity(gb.len());
    for g in gb.elements() {
        let c = g.var_content(n);
        let k = if infinite { c } else { c.min(1) };
        let h = if k > 0 { g.div_monomial(&Monomial::var_pow(n, k)?)? } else { g.clone() };
        if h.involves_any(&[n]) {
            out.push(h.substitute(&images, ring)?);
        } else {
            out.push(h.extend_into(ring, MonomialOrder::GrevLex));
        }
    }
    Ideal::new(ring, out)
}

/// Quotient `g / f` when `f` divides `g` exactly.
fn exact_div(g: &Polynomial, f: &Polynomial) -> Result<Polynomial> {
    let ring = g.ring();
    let field = ring.field();
    let g = g.with_order(f.order());
    let lf = f.leading_term().ok_or(Error::ZeroPolynomial)?;
    let inv = field.inv(lf.coeff)?;
    let mut rem = g;
    let mut quotient: Vec<Term> = Vec::new();
    while let Some(lt) = rem.leading_term().copied() {
        let m = lt.mono.checked_div(&lf.mono)?;
        let c = field.mul(lt.coeff, inv);
        quotient.push(Term::new(m, c));
        rem = rem.sub(&f.mul_term(&m, c)?)?;
    }
    Polynomial::from_terms(ring, f.order(), quotient)
}

#[cfg(test)]
mod tests {
    use super::super::tests::{mono_ideal, ring};
    use super::*;

    fn p(r: &Ring, terms: &[(i64, &[u32])]) -> Polynomial {
        Polynomial::from_exponents(r, terms).unwrap()
    }

    #[test]
    fn colon_examples() {
        let r = ring(&["x", "y"]);
        let x2 = mono_ideal(&r, &[&[2, 0]]);
        let x = mono_ideal(&r, &[&[1, 0]]);
        assert!(colon(&x2, &p(&r, &[(1, &[1, 0])])).unwrap().equals(&x).unwrap());
        let j = mono_ideal(&r, &[&[2, 0], &[1, 1]]);
        let y = p(&r, &[(1, &[0, 1])]);
        assert!(colon(&j, &y).unwrap().equals(&x).unwrap());
        assert!(colon_via_intersection(&j, &y).unwrap().equals(&x).unwrap());
        assert!(colon(&j, &Polynomial::one(&r)).unwrap().equals(&j).unwrap());
        assert_eq!(colon(&j, &Polynomial::zero(&r)).err(), Some(Error::ZeroPolynomial));
    }

    #[test]
    fn colon_routes_agree_on_binomials() {
        let r = ring(&["x", "y", "z"]);
        let j = Ideal::new(&r, vec![p(&r, &[(1, &[2, 0, 0]), (-1, &[0, 1, 1])]), p(&r, &[(1, &[1, 1, 1])])]).unwrap();
        for f in [p(&r, &[(1, &[1, 0, 0]), (1, &[0, 0, 1])]), p(&r, &[(1, &[0, 2, 0]), (-3, &[1, 0, 1])])] {
            let a = colon(&j, &f).unwrap();
            let b = colon_via_intersection(&j, &f).unwrap();
            assert!(a.equals(&b).unwrap());
        }
    }

    #[test]
    fn saturation_examples() {
        let r = ring(&["x", "y"]);
        let j = mono_ideal(&r, &[&[2, 0], &[1, 1]]);
        let m = Ideal::maximal(&r);
        let s = saturate(&j, &m).unwrap();
        assert!(s.ideal.equals(&mono_ideal(&r, &[&[1, 0]])).unwrap());
        assert_eq!(s.iterations, 1);
        assert!(saturate_maximal(&j).unwrap().equals(&s.ideal).unwrap());
        let s1 = saturate(&j, &Ideal::unit(&r)).unwrap();
        assert!(s1.ideal.equals(&j).unwrap());
        let x2 = mono_ideal(&r, &[&[2, 0]]);
        let sy = saturate(&x2, &mono_ideal(&r, &[&[0, 1]])).unwrap();
        assert!(sy.ideal.equals(&x2).unwrap());
        assert_eq!(sy.iterations, 0);
        assert!(saturate_by_element(&x2, &p(&r, &[(1, &[0, 1])])).unwrap().equals(&x2).unwrap());
        assert!(matches!(saturate_with_cap(&mono_ideal(&r, &[&[5, 0], &[0, 5]]), &m, 2), Err(Error::IterationCapExceeded { cap: 2 })));
    }

    #[test]
    fn saturation_needing_intersection() {
        // every variable lies in a non-maximal associated prime of (xz, yz) ∩ m^3
        let r = ring(&["x", "y", "z"]);
        let j = mono_ideal(&r, &[&[2, 0, 1], &[1, 1, 1], &[1, 0, 2], &[0, 2, 1], &[0, 1, 2]]);
        let expect = mono_ideal(&r, &[&[1, 0, 1], &[0, 1, 1]]);
        assert!(saturate_maximal(&j).unwrap().equals(&expect).unwrap());
        assert!(saturate(&j, &Ideal::maximal(&r)).unwrap().ideal.equals(&expect).unwrap());
    }

    #[test]
    fn intersection_examples() {
        let r = ring(&["x", "y"]);
        let x = mono_ideal(&r, &[&[1, 0]]);
        let y = mono_ideal(&r, &[&[0, 1]]);
        assert!(intersect(&x, &y).unwrap().equals(&mono_ideal(&r, &[&[1, 1]])).unwrap());
        let j = mono_ideal(&r, &[&[2, 0], &[1, 1]]);
        assert!(intersect(&j, &y).unwrap().equals(&mono_ideal(&r, &[&[1, 1]])).unwrap());
        assert!(intersect(&j, &j).unwrap().equals(&j).unwrap());
    }

    #[test]
    fn elimination_examples() {
        let r = ring(&["x", "y"]);
        let graph = Ideal::new(&r, vec![p(&r, &[(1, &[0, 1]), (-1, &[2, 0])])]).unwrap();
        let e = eliminate(&graph, &[1]).unwrap();
        assert!(e.is_zero());
        assert_eq!(e.ring().var_names(), &["x".to_string()]);
        let both = graph.with_gens(&[p(&r, &[(1, &[0, 1])])]).unwrap();
        let e = eliminate(&both, &[1]).unwrap();
        let rx = e.ring().clone();
        assert!(e.equals(&mono_ideal(&rx, &[&[2]])).unwrap());
        assert!(eliminate(&both, &[]).unwrap().equals(&both).unwrap());
        assert_eq!(eliminate(&both, &[2]).err(), Some(Error::BadVariable(2)));
    }

    #[test]
    fn monotone_chain() {
        let r = ring(&["x", "y", "z"]);
        let j = Ideal::new(&r, vec![p(&r, &[(1, &[3, 0, 0]), (-1, &[1, 1, 1])]), p(&r, &[(1, &[1, 2, 0])])]).unwrap();
        let f = p(&r, &[(1, &[1, 0, 0]), (2, &[0, 1, 0])]);
        let c1 = colon(&j, &f).unwrap();
        let c2 = colon(&j, &f.pow(2).unwrap()).unwrap();
        let s = saturate_by_element(&j, &f).unwrap();
        assert!(c1.contains(&j).unwrap());
        assert!(c2.contains(&c1).unwrap());
        assert!(s.contains(&c2).unwrap());
        let chain = saturate(&j, &Ideal::new(&r, vec![f.clone()]).unwrap()).unwrap();
        assert!(chain.ideal.equals(&s).unwrap());
        let k = Ideal::new(&r, vec![f, p(&r, &[(1, &[0, 0, 1])])]).unwrap();
        let by_gens = saturate_by_generators(&j, &k).unwrap();
        assert!(by_gens.equals(&saturate(&j, &k).unwrap().ideal).unwrap());
    }
}
