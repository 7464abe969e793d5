//! Reference computations that avoid Gröbner bases entirely.
#![allow(dead_code)]

pub mod oracle;

use ghilb_core::algebra::{Polynomial, Ring};
use ghilb_core::genhilbert::{gamma_length, ModuleSpec};
use ghilb_core::ideals::{length_between, saturate_maximal, Ideal};
use oracle::Exps;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const NAMES: [&str; 3] = ["x", "y", "z"];

/// A random monomial ideal: 1 to 3 variables, 1 to 3 generators of degree 1 to 3.
pub fn random_monomial_ideal(rng: &mut ChaCha8Rng) -> (usize, Vec<Exps>) {
    let n = rng.gen_range(1..=3);
    let count = rng.gen_range(1..=3);
    let gens = (0..count)
        .map(|_| {
            let deg = rng.gen_range(1..=3u32);
            let mut e = vec![0u32; n];
            for _ in 0..deg {
                e[rng.gen_range(0..n)] += 1;
            }
            e
        })
        .collect();
    (n, gens)
}

fn maximal_power(n: usize, k: u32) -> Vec<Exps> {
    oracle::monomials_of_degree(n, k)
}

/// Compares the engine with the oracle on one monomial ideal for all
/// indices and degrees up to `top`. Returns a description of the first mismatch.
pub fn compare_with_oracle(n: usize, gens: &[Exps], top: u32) -> Result<(), String> {
    let ring = Ring::with_default_prime(&NAMES[..n]).unwrap();
    let i = oracle::to_ideal(&ring, gens);
    let spec = ModuleSpec::on_ring(i.clone()).map_err(|e| e.to_string())?;
    for t in 0..=top {
        let got = gamma_length(&spec, t as usize).map_err(|e| e.to_string())?;
        let want = oracle::gamma(gens, n, t);
        if got != want {
            return Err(format!("gamma({t}) of {gens:?}: engine {got}, oracle {want}"));
        }
    }
    for t in 1..=3 {
        let power = oracle::monomial_power(gens, n, t);
        let series = i.power(t).unwrap().hilbert_series().map_err(|e| e.to_string())?;
        let got = series.expand(top as usize + 1);
        for k in 0..=top {
            let want = oracle::hilbert_function(&oracle::monomial_gens(&power), n, k) as i64;
            if got[k as usize] != want {
                return Err(format!("HF(R/I^{t}, {k}) of {gens:?}: engine {}, oracle {want}", got[k as usize]));
            }
        }
    }
    for t in 1..=top {
        let power = oracle::monomial_power(gens, n, t);
        let j = oracle::to_ideal(&ring, &power);
        let sat = saturate_maximal(&j).map_err(|e| e.to_string())?;
        let got = length_between(&j, &sat).map_err(|e| e.to_string())?;
        let want = oracle::saturation_length(&power, n);
        if got != want {
            return Err(format!("λ(I^{t}:m^∞/I^{t}) of {gens:?}: engine {got}, oracle {want}"));
        }
    }
    for k in 1..=top {
        let lower: Vec<Exps> = gens.iter().cloned().chain(maximal_power(n, k)).collect();
        let upper: Vec<Exps> = gens.iter().cloned().chain(maximal_power(n, k - 1)).collect();
        let got = length_between(&oracle::to_ideal(&ring, &lower), &oracle::to_ideal(&ring, &upper))
            .map_err(|e| e.to_string())?;
        let want = oracle::monomial_length(&lower, &upper, n);
        if got != want {
            return Err(format!("λ((I+m^{})/(I+m^{k})) of {gens:?}: engine {got}, oracle {want}", k - 1));
        }
    }
    Ok(())
}

/// Runs [`compare_with_oracle`] on `count` random monomial ideals.
pub fn oracle_suite(count: usize, seed: u64, top: u32) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let (n, gens) = random_monomial_ideal(&mut rng);
        compare_with_oracle(n, &gens, top)?;
    }
    Ok(())
}

/// The Hilbert function of a non-monomial ideal against the rank oracle.
pub fn compare_hilbert_function(i: &Ideal, top: u32) -> Result<(), String> {
    let n = i.ring().nvars();
    let gens: Vec<oracle::Poly> = i.gens().iter().map(|g: &Polynomial| oracle::to_poly(g, n)).collect();
    let got = i.hilbert_series().map_err(|e| e.to_string())?.expand(top as usize + 1);
    for k in 0..=top {
        let want = oracle::hilbert_function(&gens, n, k) as i64;
        if got[k as usize] != want {
            return Err(format!("HF({k}): engine {}, oracle {want}", got[k as usize]));
        }
    }
    Ok(())
}
