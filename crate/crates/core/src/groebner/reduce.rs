//! Multivariate division with a heap of pending multiples.
//!
//! The remainder `f - sum q_k m_k g_k` is never materialized: each multiple
//! contributes a cursor into a max-heap keyed by the monomial order, and
//! equal monomials are combined as they are popped.

use std::cmp::Ordering;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use crate::algebra::{FieldElement, Monomial, MonomialOrder, PrimeField, Term};
use crate::error::{Error, Result};

/// Default cap on reduction steps for one Groebner-basis computation.
pub const DEFAULT_STEP_BUDGET: u64 = 5_000_000;

static STEP_BUDGET: AtomicU64 = AtomicU64::new(DEFAULT_STEP_BUDGET);

/// Sets the per-computation reduction-step cap used by every subsequent
/// Groebner-basis computation in this process.
pub fn set_step_budget(cap: u64) {
    STEP_BUDGET.store(cap.max(1), AtomicOrdering::Relaxed);
}

pub fn step_budget() -> u64 {
    STEP_BUDGET.load(AtomicOrdering::Relaxed)
}

/// Running count of reduction steps against a cap.
#[derive(Debug, Clone)]
pub(crate) struct Budget {
    pub used: u64,
    pub cap: u64,
}

impl Budget {
    pub fn new() -> Self {
        Budget { used: 0, cap: step_budget() }
    }

    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.cap {
            Err(Error::BudgetExceeded { cap: self.cap })
        } else {
            Ok(())
        }
    }
}

/// A monic polynomial prepared for use as a divisor.
#[derive(Debug, Clone)]
pub(crate) struct Reducer {
    pub terms: Vec<Term>,
    pub lm: Monomial,
    pub mask: u64,
}

impl Reducer {
    pub fn new(terms: Vec<Term>, nvars: usize) -> Self {
        let lm = terms[0].mono;
        debug_assert_eq!(terms[0].coeff, FieldElement::ONE);
        Reducer { mask: lm.divmask(nvars), terms, lm }
    }
}

#[derive(Clone, Copy)]
struct Cursor {
    mono: Monomial,
    src: u32,
    pos: u32,
}

/// Binary max-heap whose comparison is the runtime monomial order.
struct MonoHeap<'o> {
    order: &'o MonomialOrder,
    data: Vec<Cursor>,
}

impl<'o> MonoHeap<'o> {
    fn new(order: &'o MonomialOrder) -> Self {
        MonoHeap { order, data: Vec::new() }
    }

    #[inline]
    fn greater(&self, a: usize, b: usize) -> bool {
        self.order.cmp(&self.data[a].mono, &self.data[b].mono) == Ordering::Greater
    }

    fn push(&mut self, c: Cursor) {
        self.data.push(c);
        let mut i = self.data.len() - 1;
        while i > 0 {
            let parent = (i - 1) / 2;
            if self.greater(i, parent) {
                self.data.swap(i, parent);
                i = parent;
            } else {
                break;
            }
        }
    }

    #[inline]
    fn peek(&self) -> Option<&Cursor> {
        self.data.first()
    }

    fn pop(&mut self) -> Option<Cursor> {
        if self.data.is_empty() {
            return None;
        }
        let last = self.data.len() - 1;
        self.data.swap(0, last);
        let top = self.data.pop();
        let n = self.data.len();
        let mut i = 0;
        loop {
            let l = 2 * i + 1;
            if l >= n {
                break;
            }
            let r = l + 1;
            let mut best = l;
            if r < n && self.greater(r, l) {
                best = r;
            }
            if self.greater(best, i) {
                self.data.swap(best, i);
                i = best;
            } else {
                break;
            }
        }
        top
    }
}

/// Which terms of the dividend may be rewritten.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Mode {
    /// Reduce every term (normal form).
    Full,
    /// Stop rewriting once the leading term is irreducible.
    Top,
}

/// Divides `f` by the reducers selected by `active`, returning the
/// remainder in canonical (sorted, zero-free) form.
pub(crate) fn reduce(
    field: &PrimeField,
    order: &MonomialOrder,
    nvars: usize,
    f: &[Term],
    reducers: &[Reducer],
    active: &[usize],
    mode: Mode,
    budget: &mut Budget,
) -> Result<Vec<Term>> {
    reduce_scaled(field, order, nvars, f, FieldElement::ONE, None, reducers, active, mode, budget)
}

/// As [`reduce`], but the dividend is `c1 * f + c2 * m2 * g` (an S-polynomial
/// when `second` is given), avoiding an explicit merge.
#[allow(clippy::too_many_arguments)]
pub(crate) fn reduce_scaled(
    field: &PrimeField,
    order: &MonomialOrder,
    nvars: usize,
    f: &[Term],
    c1: FieldElement,
    second: Option<(&[Term], Monomial, FieldElement, Monomial)>,
    reducers: &[Reducer],
    active: &[usize],
    mode: Mode,
    budget: &mut Budget,
) -> Result<Vec<Term>> {
    // multiples: (shift, coefficient, term slice)
    let mut multiples: Vec<(Monomial, FieldElement, &[Term])> = Vec::with_capacity(16);
    let mut heap = MonoHeap::new(order);
    let mut rem: Vec<Term> = Vec::new();

    match second {
        None => {
            if !f.is_empty() {
                multiples.push((Monomial::one(), c1, f));
                heap.push(Cursor { mono: f[0].mono, src: 0, pos: 0 });
            }
        }
        Some((g, shift_g, c2, shift_f)) => {
            // S-polynomial: shift_f * f * c1 + shift_g * g * c2, leading terms cancel
            if f.len() > 1 {
                multiples.push((shift_f, c1, f));
                heap.push(Cursor { mono: f[1].mono.mul_unchecked(&shift_f), src: 0, pos: 1 });
            }
            if g.len() > 1 {
                let src = multiples.len() as u32;
                multiples.push((shift_g, c2, g));
                heap.push(Cursor { mono: g[1].mono.mul_unchecked(&shift_g), src, pos: 1 });
            }
        }
    }

    let mut reducing = true;
    while let Some(top) = heap.peek() {
        let m = top.mono;
        let mut c = FieldElement::ZERO;
        while let Some(t) = heap.peek() {
            if t.mono != m {
                break;
            }
            let cur = heap.pop().unwrap();
            let (shift, q, poly) = multiples[cur.src as usize];
            c = field.add(c, field.mul(q, poly[cur.pos as usize].coeff));
            let next = cur.pos as usize + 1;
            if next < poly.len() {
                heap.push(Cursor { mono: poly[next].mono.mul_unchecked(&shift), src: cur.src, pos: next as u32 });
            }
        }
        if c.is_zero() {
            continue;
        }
        if reducing {
            if let Some(r) = find_divisor(&m, nvars, reducers, active) {
                budget.tick()?;
                let red = &reducers[r];
                let shift = m.div_unchecked(&red.lm);
                if red.terms.len() > 1 {
                    let src = multiples.len() as u32;
                    multiples.push((shift, field.neg(c), &red.terms));
                    heap.push(Cursor { mono: red.terms[1].mono.mul_unchecked(&shift), src, pos: 1 });
                }
                continue;
            }
            if mode == Mode::Top {
                reducing = false;
            }
        }
        rem.push(Term::new(m, c));
    }
    Ok(rem)
}

#[inline]
pub(crate) fn find_divisor(m: &Monomial, nvars: usize, reducers: &[Reducer], active: &[usize]) -> Option<usize> {
    let mask = m.divmask(nvars);
    active
        .iter()
        .copied()
        .find(|&i| reducers[i].mask & !mask == 0 && reducers[i].lm.divides(m))
}

/// Scales a term list so the leading coefficient is one.
pub(crate) fn make_monic(field: &PrimeField, terms: &mut [Term]) {
    if let Some(first) = terms.first() {
        if first.coeff != FieldElement::ONE {
            let inv = field.inv(first.coeff).expect("nonzero leading coefficient");
            for t in terms.iter_mut() {
                t.coeff = field.mul(t.coeff, inv);
            }
        }
    }
}
