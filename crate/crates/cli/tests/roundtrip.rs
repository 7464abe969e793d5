use ghilb_cli::{parse_input, print_spec, IdealSpec, JobSpec, Params, RingSpec};
use ghilb_core::algebra::{Monomial, Polynomial, Ring};
use proptest::prelude::*;

const NAMES: [&str; 4] = ["x", "y", "z", "w"];

/// Homogeneous polynomial of degree `deg` from `(coefficient, exponent seed)` pairs.
fn homogeneous(ring: &Ring, deg: u32, terms: &[(i64, Vec<u32>)]) -> Polynomial {
    let n = ring.nvars();
    let mut acc = Polynomial::zero(ring);
    for (c, seed) in terms {
        let mut exps = vec![0u32; n];
        let mut left = deg;
        for (k, s) in seed.iter().take(n - 1).enumerate() {
            let e = s % (left + 1);
            exps[k] = e;
            left -= e;
        }
        exps[n - 1] = left;
        let m = Polynomial::monomial(ring, Monomial::from_exponents(&exps).unwrap(), ring.field().from_i64(*c));
        acc = acc.add(&m).unwrap();
    }
    acc
}

fn job_strategy() -> impl Strategy<Value = JobSpec> {
    (2usize..=4, 1u32..=3, prop::collection::vec(prop::collection::vec((-50i64..50, prop::collection::vec(0u32..4, 3)), 1..4), 1..4))
        .prop_map(|(n, deg, gens)| {
            let ring = Ring::with_default_prime(&NAMES[..n]).unwrap();
            let mut polys: Vec<String> =
                gens.iter().map(|t| homogeneous(&ring, deg, t)).filter(|p| !p.is_zero()).map(|p| p.to_string()).collect();
            if polys.is_empty() {
                polys.push(NAMES[0].to_string());
            }
            JobSpec {
                ring: RingSpec { vars: NAMES[..n].iter().map(|s| s.to_string()).collect(), characteristic: 32003 },
                ideal: IdealSpec::Gens { gens: polys },
                module: None,
                command: None,
                params: Params { t_max: Some(deg as usize + 3), seeds: vec![deg as u64], ..Params::default() },
            }
        })
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(spec in job_strategy()) {
        prop_assert_eq!(parse_input(&print_spec(&spec)).unwrap(), spec);
    }
}
