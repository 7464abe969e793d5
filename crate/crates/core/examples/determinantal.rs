//! Generalized Hilbert data of two 2x4 determinantal ideals.

use std::time::Instant;

use ghilb_core::algebra::{Polynomial, Ring};
use ghilb_core::genhilbert::{
    analytic_spread, default_t_max, epsilon0_epsilon1, generalized_series, residual_series, section, ModuleSpec,
};
use ghilb_core::ideals::minors;

fn run(names: &[&str], rows: [[usize; 4]; 2]) {
    let r = Ring::with_default_prime(names).unwrap();
    let m: Vec<Vec<Polynomial>> =
        rows.iter().map(|row| row.iter().map(|&i| Polynomial::var(&r, i).unwrap()).collect()).collect();
    let i = minors(2, &m).unwrap();
    let spec = ModuleSpec::on_ring(i.clone()).unwrap();
    let t_max = default_t_max(r.nvars());
    let clock = Instant::now();
    let data = generalized_series(&spec, t_max).unwrap();
    println!("series {} j {:?} ({:?})", data.series.unwrap(), data.j_coeffs.unwrap(), clock.elapsed());
    println!("spread {}", analytic_spread(&i).unwrap());
    for k in 1..spec.d {
        let cut = section(&spec, k, 7).unwrap();
        let data = generalized_series(&cut, t_max).unwrap();
        println!("section {k}: {}", data.raw.unwrap());
    }
    let res = residual_series(&spec, 7, 6).unwrap();
    println!("residual {} lengths {:?}", res.series, res.lengths);
    println!("{:?}", epsilon0_epsilon1(&spec, 7).unwrap());
}

fn main() {
    run(&["x", "y", "z", "v", "w"], [[0, 1, 2, 3], [1, 2, 3, 4]]);
    run(&["x", "y", "z", "v"], [[0, 1, 2, 3], [3, 0, 1, 2]]);
}
