//! Buchberger's algorithm with the Gebauer-Moeller update and the normal
//! selection strategy.

use std::cmp::Ordering;

use super::reduce::{make_monic, reduce, reduce_scaled, Budget, Mode, Reducer};
use crate::algebra::{FieldElement, Monomial, MonomialOrder, PrimeField, Term};
use crate::error::Result;

#[derive(Debug, Clone, Copy)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    deg: u64,
}

/// Normal strategy: smallest lcm degree first, then smallest lcm, then indices.
fn pair_cmp(order: &MonomialOrder, a: &Pair, b: &Pair) -> Ordering {
    a.deg
        .cmp(&b.deg)
        .then_with(|| order.cmp(&a.lcm, &b.lcm))
        .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
}

pub(crate) struct Engine<'a> {
    field: &'a PrimeField,
    order: &'a MonomialOrder,
    nvars: usize,
    pub basis: Vec<Reducer>,
    /// Indices of the current (LM-minimal) basis, in insertion order.
    pub active: Vec<usize>,
    /// Pending pairs sorted in descending priority so `pop` yields the next.
    pairs: Vec<Pair>,
    pub budget: Budget,
}

impl<'a> Engine<'a> {
    pub fn new(field: &'a PrimeField, order: &'a MonomialOrder, nvars: usize) -> Self {
        Engine { field, order, nvars, basis: Vec::new(), active: Vec::new(), pairs: Vec::new(), budget: Budget::new() }
    }

    /// Runs Buchberger on `inputs` (each already sorted by the order).
    pub fn run(&mut self, inputs: Vec<Vec<Term>>) -> Result<()> {
        let order = *self.order;
        let mut inputs: Vec<Vec<Term>> = inputs.into_iter().filter(|p| !p.is_empty()).collect();
        // descending so pop() yields the smallest input
        inputs.sort_by(|a, b| {
            let (ma, mb) = (a[0].mono, b[0].mono);
            order.sugar_degree(&mb).cmp(&order.sugar_degree(&ma)).then_with(|| order.cmp(&mb, &ma))
        });

        loop {
            let next_pair = self.pairs.last().copied();
            let next_input_deg = inputs.last().map(|p| order.sugar_degree(&p[0].mono));
            let take_input = match (next_pair, next_input_deg) {
                (None, None) => break,
                (None, Some(_)) => true,
                (Some(_), None) => false,
                // inputs go first within a degree
                (Some(p), Some(d)) => d <= p.deg,
            };
            let h = if take_input {
                let f = inputs.pop().unwrap();
                reduce(self.field, self.order, self.nvars, &f, &self.basis, &self.active, Mode::Full, &mut self.budget)?
            } else {
                let p = self.pairs.pop().unwrap();
                self.spoly_reduce(&p)?
            };
            if !h.is_empty() {
                self.insert(h);
            }
        }
        Ok(())
    }

    fn spoly_reduce(&mut self, p: &Pair) -> Result<Vec<Term>> {
        let (gi, gj) = (&self.basis[p.i], &self.basis[p.j]);
        let shift_i = p.lcm.div_unchecked(&gi.lm);
        let shift_j = p.lcm.div_unchecked(&gj.lm);
        let minus_one = self.field.neg(FieldElement::ONE);
        reduce_scaled(
            self.field,
            self.order,
            self.nvars,
            &gi.terms,
            FieldElement::ONE,
            Some((&gj.terms, shift_j, minus_one, shift_i)),
            &self.basis,
            &self.active,
            Mode::Full,
            &mut self.budget,
        )
    }

    /// Gebauer-Moeller update for a new element `h`.
    fn insert(&mut self, mut h: Vec<Term>) {
        make_monic(self.field, &mut h);
        let order = *self.order;
        let hi = self.basis.len();
        let hlm = h[0].mono;
        self.basis.push(Reducer::new(h, self.nvars));

        // candidate pairs (h, g) for g in the current basis
        let cands: Vec<Pair> = self
            .active
            .iter()
            .map(|&g| {
                let lcm = hlm.lcm(&self.basis[g].lm);
                Pair { i: g, j: hi, lcm, deg: order.sugar_degree(&lcm) }
            })
            .collect();

        // chain criterion among the new pairs: keep (h, g1) unless another
        // candidate's lcm properly divides it (coprime pairs are kept here
        // so that they can shadow others, then dropped below)
        let mut keep = vec![true; cands.len()];
        for a in 0..cands.len() {
            let coprime_a = hlm.is_coprime(&self.basis[cands[a].i].lm);
            if coprime_a {
                continue;
            }
            for b in 0..cands.len() {
                if a == b || !keep[b] {
                    continue;
                }
                if cands[b].lcm.divides(&cands[a].lcm) && (cands[b].lcm != cands[a].lcm || b < a) {
                    keep[a] = false;
                    break;
                }
            }
        }
        let mut fresh: Vec<Pair> = cands
            .iter()
            .zip(keep.iter())
            .filter(|(p, &k)| k && !hlm.is_coprime(&self.basis[p.i].lm))
            .map(|(p, _)| *p)
            .collect();

        // drop old pairs whose lcm is divisible by LM(h) in the strict sense
        let basis = &self.basis;
        self.pairs.retain(|p| {
            if !hlm.divides(&p.lcm) {
                return true;
            }
            let li = hlm.lcm(&basis[p.i].lm);
            let lj = hlm.lcm(&basis[p.j].lm);
            li == p.lcm || lj == p.lcm
        });

        // merge fresh pairs into the descending queue
        fresh.sort_by(|a, b| pair_cmp(&order, b, a));
        let old = std::mem::take(&mut self.pairs);
        let mut merged = Vec::with_capacity(old.len() + fresh.len());
        let (mut x, mut y) = (0, 0);
        while x < old.len() && y < fresh.len() {
            if pair_cmp(&order, &old[x], &fresh[y]) != Ordering::Less {
                merged.push(old[x]);
                x += 1;
            } else {
                merged.push(fresh[y]);
                y += 1;
            }
        }
        merged.extend_from_slice(&old[x..]);
        merged.extend_from_slice(&fresh[y..]);
        self.pairs = merged;

        let basis = &self.basis;
        self.active.retain(|&g| !hlm.divides(&basis[g].lm));
        self.active.push(hi);
    }

    /// Reduced, monic basis sorted by increasing leading monomial.
    pub fn reduced_basis(&mut self) -> Result<Vec<Vec<Term>>> {
        let order = *self.order;
        let mut idx = self.active.clone();
        idx.sort_by(|&a, &b| order.cmp(&self.basis[a].lm, &self.basis[b].lm));
        let mut out = Vec::with_capacity(idx.len());
        for &g in &idx {
            let others: Vec<usize> = idx.iter().copied().filter(|&o| o != g).collect();
            let terms = &self.basis[g].terms;
            let tail = reduce(self.field, self.order, self.nvars, &terms[1..], &self.basis, &others, Mode::Full, &mut self.budget)?;
            let mut full = Vec::with_capacity(tail.len() + 1);
            full.push(terms[0]);
            full.extend(tail);
            out.push(full);
        }
        Ok(out)
    }
}
