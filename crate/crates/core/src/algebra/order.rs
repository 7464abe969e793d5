use std::cmp::Ordering;

use super::monomial::{Monomial, MAX_VARS};

/// Positive integer weights per variable, used by [`MonomialOrder::WeightedGrevLex`].
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Weights(pub [u16; MAX_VARS]);

impl Weights {
    pub fn standard() -> Self {
        Weights([1; MAX_VARS])
    }

    pub fn degree(&self, m: &Monomial) -> u64 {
        m.raw().iter().zip(self.0.iter()).map(|(&e, &w)| e as u64 * w as u64).sum()
    }
}

impl std::fmt::Debug for Weights {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let n = self.0.iter().rposition(|&w| w != 1).map_or(0, |i| i + 1);
        write!(f, "Weights{:?}", &self.0[..n])
    }
}

/// Admissible monomial orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Degree first, ties broken by reverse lexicographic order.
    GrevLex,
    Lex,
    /// Product order: grevlex on the first `k` variables, then grevlex on the
    /// rest. Any monomial involving the block exceeds every block-free one.
    Elim(usize),
    /// Weighted degree first, ties broken reverse lexicographically.
    WeightedGrevLex(Weights),
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::GrevLex
    }
}

#[inline]
fn revlex_tail(a: &[u16], b: &[u16]) -> Ordering {
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

#[inline]
fn block_grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| revlex_tail(a, b))
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::GrevLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| revlex_tail(a.raw(), b.raw())),
            MonomialOrder::Lex => a.raw().cmp(b.raw()),
            MonomialOrder::Elim(k) => {
                let k = (*k).min(MAX_VARS);
                block_grevlex(&a.raw()[..k], &b.raw()[..k])
                    .then_with(|| block_grevlex(&a.raw()[k..], &b.raw()[k..]))
            }
            MonomialOrder::WeightedGrevLex(w) => w
                .degree(a)
                .cmp(&w.degree(b))
                .then_with(|| revlex_tail(a.raw(), b.raw())),
        }
    }

    /// Degree used by the normal pair-selection strategy.
    #[inline]
    pub fn sugar_degree(&self, m: &Monomial) -> u64 {
        match self {
            MonomialOrder::WeightedGrevLex(w) => w.degree(m),
            _ => m.degree() as u64,
        }
    }

    /// True when the order refines the standard degree, so that homogeneous
    /// input stays degree-by-degree.
    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonomialOrder::GrevLex)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn grevlex_two_variables() {
        let o = MonomialOrder::GrevLex;
        let chain = [m(&[2, 0]), m(&[1, 1]), m(&[0, 2]), m(&[1, 0]), m(&[0, 1]), m(&[0, 0])];
        for w in chain.windows(2) {
            assert_eq!(o.cmp(&w[0], &w[1]), Ordering::Greater, "{:?} > {:?}", w[0], w[1]);
        }
    }

    #[test]
    fn grevlex_is_not_deglex() {
        // y^2 > xz in grevlex, the opposite of deglex
        let o = MonomialOrder::GrevLex;
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[1, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn elimination_block_dominates() {
        let o = MonomialOrder::Elim(1);
        let with_x = [m(&[1, 0]), m(&[1, 5]), m(&[2, 0])];
        let pure_y = [m(&[0, 0]), m(&[0, 1]), m(&[0, 9])];
        for a in &with_x {
            for b in &pure_y {
                assert_eq!(o.cmp(a, b), Ordering::Greater);
            }
        }
    }

    fn arb_mono(n: usize) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..5, n).prop_map(|v| Monomial::from_exponents(&v).unwrap())
    }

    fn orders() -> Vec<MonomialOrder> {
        let mut w = Weights::standard();
        w.0[0] = 2;
        w.0[2] = 3;
        vec![
            MonomialOrder::GrevLex,
            MonomialOrder::Lex,
            MonomialOrder::Elim(1),
            MonomialOrder::Elim(2),
            MonomialOrder::WeightedGrevLex(w),
        ]
    }

    proptest! {
        #[test]
        fn order_axioms(a in arb_mono(4), b in arb_mono(4), c in arb_mono(4)) {
            for o in orders() {
                // totality / antisymmetry
                let ab = o.cmp(&a, &b);
                prop_assert_eq!(ab, o.cmp(&b, &a).reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                // multiplicativity
                let ac = a.checked_mul(&c).unwrap();
                let bc = b.checked_mul(&c).unwrap();
                prop_assert_eq!(o.cmp(&ac, &bc), ab);
                // well-order: 1 is minimal
                prop_assert_ne!(o.cmp(&Monomial::one(), &a), Ordering::Greater);
                // transitivity
                if ab != Ordering::Less && o.cmp(&b, &c) != Ordering::Less {
                    prop_assert_ne!(o.cmp(&a, &c), Ordering::Less);
                }
            }
        }
    }
}
