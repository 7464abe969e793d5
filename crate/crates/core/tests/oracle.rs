mod common;

use common::{compare_hilbert_function, compare_with_oracle, oracle, oracle_suite};
use ghilb_core::algebra::{Polynomial, Ring};
use ghilb_core::ideals::{minors, Ideal};
use proptest::prelude::*;

#[test]
fn fifty_random_monomial_ideals() {
    oracle_suite(50, 2024, 8).unwrap();
}

#[test]
fn embedded_line_fixture() {
    compare_with_oracle(2, &[vec![2, 0], vec![1, 1]], 8).unwrap();
    for t in 0..=8 {
        assert_eq!(oracle::gamma(&[vec![2, 0], vec![1, 1]], 2, t), 2 * t as u64 + 1);
    }
}

#[test]
fn determinantal_hilbert_functions() {
    let r = Ring::with_default_prime(&["x", "y", "z", "v"]).unwrap();
    let v = |i| Polynomial::var(&r, i).unwrap();
    let m = vec![vec![v(0), v(1), v(2), v(3)], vec![v(3), v(0), v(1), v(2)]];
    let i = minors(2, &m).unwrap();
    compare_hilbert_function(&i, 8).unwrap();
    compare_hilbert_function(&i.power(2).unwrap(), 8).unwrap();
}

#[test]
fn binomial_ideal_hilbert_function() {
    let r = Ring::with_default_prime(&["x", "y", "z"]).unwrap();
    let gens = vec![
        Polynomial::from_exponents(&r, &[(1, &[2, 0, 0]), (-3, &[0, 1, 1])]).unwrap(),
        Polynomial::from_exponents(&r, &[(5, &[1, 1, 0]), (1, &[0, 0, 2])]).unwrap(),
    ];
    compare_hilbert_function(&Ideal::new(&r, gens).unwrap(), 8).unwrap();
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn random_monomial_ideals_agree(seed in any::<u64>()) {
        prop_assert_eq!(oracle_suite(1, seed, 5), Ok(()));
    }
}

#[test]
fn suite_is_not_trivial() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    let mut nonzero = 0;
    for _ in 0..50 {
        let (n, gens) = common::random_monomial_ideal(&mut rng);
        if (0..=8).any(|t| oracle::gamma(&gens, n, t) > 0) {
            nonzero += 1;
        }
    }
    assert!(nonzero >= 10, "only {nonzero} ideals with a nonzero Γ");
}

#[test]
fn oracle_small_cases() {
    assert_eq!(oracle::monomials_of_degree(3, 2).len(), 6);
    assert_eq!(oracle::hilbert_function(&oracle::monomial_gens(&[vec![2, 0], vec![1, 1]]), 2, 3), 1);
    assert_eq!(oracle::rank(vec![vec![1, 2], vec![2, 4]]), 1);
    assert_eq!(oracle::saturation_length(&[vec![2, 0], vec![1, 1]], 2), 1);
}
