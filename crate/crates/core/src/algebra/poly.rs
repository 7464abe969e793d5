use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use super::field::{FieldElement, PrimeField};
use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::ring::Ring;
use crate::error::{Error, Result};

/// A monomial with its (nonzero) coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Term {
    pub mono: Monomial,
    pub coeff: FieldElement,
}

impl Term {
    pub fn new(mono: Monomial, coeff: FieldElement) -> Self {
        Term { mono, coeff }
    }
}

/// Merges two sorted term lists into `a + scale * b`.
pub(crate) fn merge_add(
    field: &PrimeField,
    order: &MonomialOrder,
    a: &[Term],
    b: &[Term],
    scale: FieldElement,
) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match order.cmp(&a[i].mono, &b[j].mono) {
            Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Less => {
                let c = field.mul(b[j].coeff, scale);
                if !c.is_zero() {
                    out.push(Term::new(b[j].mono, c));
                }
                j += 1;
            }
            Ordering::Equal => {
                let c = field.add(a[i].coeff, field.mul(b[j].coeff, scale));
                if !c.is_zero() {
                    out.push(Term::new(a[i].mono, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for t in &b[j..] {
        let c = field.mul(t.coeff, scale);
        if !c.is_zero() {
            out.push(Term::new(t.mono, c));
        }
    }
    out
}

/// Sorts and combines an arbitrary term list into canonical form.
pub(crate) fn canonicalize(field: &PrimeField, order: &MonomialOrder, terms: Vec<Term>) -> Vec<Term> {
    let mut acc: HashMap<Monomial, FieldElement> = HashMap::with_capacity(terms.len());
    for t in terms {
        let e = acc.entry(t.mono).or_insert(FieldElement::ZERO);
        *e = field.add(*e, t.coeff);
    }
    let mut out: Vec<Term> = acc
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(m, c)| Term::new(m, c))
        .collect();
    out.sort_by(|x, y| order.cmp(&y.mono, &x.mono));
    out
}

/// An element of a polynomial ring, stored as terms strictly decreasing in
/// its monomial order with nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    order: MonomialOrder,
    terms: Vec<Term>,
    homogeneous: bool,
}

fn homogeneity(terms: &[Term]) -> bool {
    terms.windows(2).all(|w| w[0].mono.degree() == w[1].mono.degree())
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), order: MonomialOrder::GrevLex, terms: Vec::new(), homogeneous: true }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &Ring, c: i64) -> Self {
        let c = ring.field().from_i64(c);
        Self::monomial(ring, Monomial::one(), c)
    }

    pub fn monomial(ring: &Ring, mono: Monomial, c: FieldElement) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![Term::new(mono, c)] };
        Polynomial { ring: ring.clone(), order: MonomialOrder::GrevLex, terms, homogeneous: true }
    }

    pub fn var(ring: &Ring, i: usize) -> Result<Self> {
        if i >= ring.nvars() {
            return Err(Error::BadVariable(i));
        }
        Ok(Self::monomial(ring, Monomial::var(i)?, FieldElement::ONE))
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(ring: &Ring, order: MonomialOrder, terms: Vec<Term>) -> Result<Self> {
        let n = ring.nvars();
        if terms.iter().any(|t| t.mono.support_len() > n) {
            return Err(Error::RingMismatch);
        }
        let terms = canonicalize(ring.field(), &order, terms);
        Ok(Self::from_sorted(ring.clone(), order, terms))
    }

    /// Wraps terms already in canonical form.
    pub(crate) fn from_sorted(ring: Ring, order: MonomialOrder, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| order.cmp(&w[0].mono, &w[1].mono) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        let homogeneous = homogeneity(&terms);
        Polynomial { ring, order, terms, homogeneous }
    }

    pub fn from_exponents(ring: &Ring, terms: &[(i64, &[u32])]) -> Result<Self> {
        let field = ring.field();
        let ts = terms
            .iter()
            .map(|(c, e)| Ok(Term::new(Monomial::from_exponents(e)?, field.from_i64(*c))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(ring, MonomialOrder::GrevLex, ts)
    }

    #[inline]
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    /// Maximal term under the active order.
    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.mono)
    }

    /// Total degree (maximum over terms); `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    /// Re-sorts under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|x, y| order.cmp(&y.mono, &x.mono));
        Polynomial { ring: self.ring.clone(), order, terms, homogeneous: self.homogeneous }
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.order != other.order && !self.is_zero() && !other.is_zero() {
            return Err(Error::OrderMismatch);
        }
        Ok(())
    }

    fn active_order(&self, other: &Polynomial) -> MonomialOrder {
        if self.is_zero() {
            other.order
        } else {
            self.order
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let order = self.active_order(other);
        let terms = merge_add(self.ring.field(), &order, &self.terms, &other.terms, FieldElement::ONE);
        Ok(Self::from_sorted(self.ring.clone(), order, terms))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let order = self.active_order(other);
        let f = self.ring.field();
        let terms = merge_add(f, &order, &self.terms, &other.terms, f.neg(FieldElement::ONE));
        Ok(Self::from_sorted(self.ring.clone(), order, terms))
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(self.ring.field().neg(FieldElement::ONE))
    }

    pub fn scale(&self, c: FieldElement) -> Polynomial {
        if c.is_zero() {
            let mut z = Polynomial::zero(&self.ring);
            z.order = self.order;
            return z;
        }
        let f = self.ring.field();
        let terms = self.terms.iter().map(|t| Term::new(t.mono, f.mul(t.coeff, c))).collect();
        Polynomial { ring: self.ring.clone(), order: self.order, terms, homogeneous: self.homogeneous }
    }

    /// Multiplies by `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: FieldElement) -> Result<Polynomial> {
        if c.is_zero() {
            return Ok(self.scale(c));
        }
        let f = self.ring.field();
        let terms = self
            .terms
            .iter()
            .map(|t| Ok(Term::new(t.mono.checked_mul(m)?, f.mul(t.coeff, c))))
            .collect::<Result<Vec<_>>>()?;
        if m.support_len() > self.ring.nvars() {
            return Err(Error::RingMismatch);
        }
        Ok(Polynomial { ring: self.ring.clone(), order: self.order, terms, homogeneous: self.homogeneous })
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let order = self.active_order(other);
        let f = self.ring.field();
        let (small, big) = if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        let mut acc: HashMap<Monomial, FieldElement> = HashMap::with_capacity(small.len() * big.len());
        for a in &small.terms {
            for b in &big.terms {
                let m = a.mono.checked_mul(&b.mono)?;
                let e = acc.entry(m).or_insert(FieldElement::ZERO);
                *e = f.add(*e, f.mul(a.coeff, b.coeff));
            }
        }
        let mut terms: Vec<Term> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(m, c)| Term::new(m, c)).collect();
        terms.sort_by(|x, y| order.cmp(&y.mono, &x.mono));
        Ok(Self::from_sorted(self.ring.clone(), order, terms))
    }

    pub fn pow(&self, e: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::one(&self.ring).with_order(self.order);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(t) => {
                let inv = self.ring.field().inv(t.coeff).expect("leading coefficient is nonzero");
                self.scale(inv)
            }
        }
    }

    /// Exact division by a monomial dividing every term.
    pub fn div_monomial(&self, m: &Monomial) -> Result<Polynomial> {
        let terms = self
            .terms
            .iter()
            .map(|t| Ok(Term::new(t.mono.checked_div(m)?, t.coeff)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial { ring: self.ring.clone(), order: self.order, terms, homogeneous: self.homogeneous })
    }

    /// Largest power of variable `i` dividing every term.
    pub fn var_content(&self, i: usize) -> u32 {
        self.terms.iter().map(|t| t.mono.exp(i)).min().unwrap_or(0)
    }

    /// Moves the polynomial into `target`, relabelling variables via `perm`
    /// (old variable `i` becomes `perm[i]`).
    pub(crate) fn permute_into(&self, target: &Ring, perm: &[usize], order: MonomialOrder) -> Polynomial {
        let mut terms: Vec<Term> = self.terms.iter().map(|t| Term::new(t.mono.permuted(perm), t.coeff)).collect();
        terms.sort_by(|x, y| order.cmp(&y.mono, &x.mono));
        Polynomial { ring: target.clone(), order, terms, homogeneous: self.homogeneous }
    }

    /// Embeds into a ring with `k` extra leading variables.
    pub(crate) fn shift_into(&self, target: &Ring, k: usize, order: MonomialOrder) -> Result<Polynomial> {
        let mut terms = self
            .terms
            .iter()
            .map(|t| Ok(Term::new(t.mono.shifted_right(k)?, t.coeff)))
            .collect::<Result<Vec<_>>>()?;
        terms.sort_by(|x, y| order.cmp(&y.mono, &x.mono));
        Ok(Polynomial { ring: target.clone(), order, terms, homogeneous: self.homogeneous })
    }

    /// Inverse of [`Self::shift_into`]; leading `k` variables must be absent.
    pub(crate) fn unshift_into(&self, target: &Ring, k: usize, order: MonomialOrder) -> Polynomial {
        let mut terms: Vec<Term> = self.terms.iter().map(|t| Term::new(t.mono.shifted_left(k), t.coeff)).collect();
        terms.sort_by(|x, y| order.cmp(&y.mono, &x.mono));
        Polynomial { ring: target.clone(), order, terms, homogeneous: self.homogeneous }
    }

    /// Re-homes the polynomial into a ring whose variable list extends this one.
    pub(crate) fn extend_into(&self, target: &Ring, order: MonomialOrder) -> Polynomial {
        let mut terms = self.terms.clone();
        terms.sort_by(|x, y| order.cmp(&y.mono, &x.mono));
        Polynomial { ring: target.clone(), order, terms, homogeneous: self.homogeneous }
    }

    /// Does any term involve one of the variables `vars`?
    pub fn involves_any(&self, vars: &[usize]) -> bool {
        self.terms.iter().any(|t| vars.iter().any(|&v| t.mono.exp(v) > 0))
    }

    /// Substitutes polynomials for variables (all in the target ring).
    pub fn substitute(&self, images: &[Polynomial], target: &Ring) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::RingMismatch);
        }
        let f = target.field();
        let mut acc = Polynomial::zero(target);
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one(target)]; images.len()];
        for t in &self.terms {
            let mut prod = Polynomial::constant(target, f.to_signed(t.coeff));
            for (v, img) in images.iter().enumerate() {
                let e = t.mono.exp(v) as usize;
                while powers[v].len() <= e {
                    let next = powers[v].last().unwrap().mul(img)?;
                    powers[v].push(next);
                }
                if e > 0 {
                    prod = prod.mul(&powers[v][e])?;
                }
            }
            acc = acc.add(&prod)?;
        }
        Ok(acc)
    }

    pub fn display(&self) -> String {
        self.to_string()
    }
}

fn fmt_monomial(m: &Monomial, names: &[String], out: &mut String) {
    let mut first = true;
    for (i, name) in names.iter().enumerate() {
        let e = m.exp(i);
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(name);
        if e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

impl fmt::Display for Polynomial {
    /// Renders as `c*x^a*y^b + ...` with coefficients in `(-p/2, p/2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        let names = self.ring.var_names();
        let mut s = String::new();
        for (k, t) in self.terms.iter().enumerate() {
            let c = field.to_signed(t.coeff);
            let (neg, a) = if c < 0 { (true, -c) } else { (false, c) };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if t.mono.is_one() {
                s.push_str(&a.to_string());
            } else {
                if a != 1 {
                    s.push_str(&a.to_string());
                    s.push('*');
                }
                fmt_monomial(&t.mono, names, &mut s);
            }
        }
        write!(f, "{s}")
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
