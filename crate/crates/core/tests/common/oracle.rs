//! Degreewise linear algebra and monomial combinatorics over `F_p`.

use ghilb_core::algebra::{Monomial, Polynomial, Ring};
use ghilb_core::ideals::Ideal;

pub const P: u64 = 32003;

pub type Exps = Vec<u32>;
/// Sparse polynomial as `(coefficient mod p, exponents)` pairs.
pub type Poly = Vec<(u64, Exps)>;

pub fn degree(e: &[u32]) -> u32 {
    e.iter().sum()
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn mul(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// All exponent vectors of total degree `k` in `n` variables.
pub fn monomials_of_degree(n: usize, k: u32) -> Vec<Exps> {
    if n == 0 {
        return if k == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=k).rev() {
        for mut rest in monomials_of_degree(n - 1, k - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    a %= P;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % P;
        }
        a = a * a % P;
        e >>= 1;
    }
    r
}

/// Rank of a dense matrix over `F_p` by Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<u64>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, piv);
        let inv = pow_mod(rows[r][c], P - 2);
        for v in rows[r].iter_mut() {
            *v = *v * inv % P;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x = (*x + P - f * p % P) % P;
                }
            }
        }
        r += 1;
    }
    r
}

/// `dim_K (R/J)_k` for `J` generated by homogeneous `gens`, from the rank of
/// all products `m·g` with `deg m + deg g = k`.
pub fn hilbert_function(gens: &[Poly], n: usize, k: u32) -> u64 {
    let basis = monomials_of_degree(n, k);
    let index = |e: &Exps| basis.iter().position(|b| b == e).expect("degree matches");
    let mut rows = Vec::new();
    for g in gens {
        let Some((_, lead)) = g.first() else { continue };
        let dg = degree(lead);
        if dg > k {
            continue;
        }
        for m in monomials_of_degree(n, k - dg) {
            let mut row = vec![0u64; basis.len()];
            for (c, e) in g {
                let j = index(&mul(&m, e));
                row[j] = (row[j] + c) % P;
            }
            rows.push(row);
        }
    }
    basis.len() as u64 - rank(rows) as u64
}

pub fn in_monomial_ideal(u: &[u32], gens: &[Exps]) -> bool {
    gens.iter().any(|g| divides(g, u))
}

/// `u ∈ J : m^∞`: for every variable `i` some generator divides `u` away from coordinate `i`.
pub fn in_saturation(u: &[u32], gens: &[Exps]) -> bool {
    (0..u.len()).all(|i| gens.iter().any(|g| g.iter().zip(u).enumerate().all(|(j, (a, b))| j == i || a <= b)))
}

/// Generators of the `t`-th power of a monomial ideal, all products kept.
pub fn monomial_power(gens: &[Exps], n: usize, t: u32) -> Vec<Exps> {
    let mut acc = vec![vec![0u32; n]];
    for _ in 0..t {
        let mut next: Vec<Exps> = acc.iter().flat_map(|a| gens.iter().map(move |g| mul(a, g))).collect();
        next.sort();
        next.dedup();
        acc = next;
    }
    acc
}

/// Monomials with `u_i < bound_i` in every coordinate.
fn box_monomials(bound: &[u32]) -> Vec<Exps> {
    let mut out = vec![Vec::new()];
    for &b in bound {
        out = out.into_iter().flat_map(|p| (0..b).map(move |e| [p.clone(), vec![e]].concat())).collect();
    }
    out
}

/// Every monomial of `(J : m^∞) \ J` has `u_i` below the largest exponent
/// of `x_i` among the generators of `J`.
fn saturation_box(gens: &[Exps], n: usize) -> Vec<Exps> {
    let bound: Vec<u32> = (0..n).map(|i| gens.iter().map(|g| g[i]).max().unwrap_or(0)).collect();
    box_monomials(&bound)
}

/// `λ(Γ_m(I^t/I^{t+1}))` for a monomial ideal.
pub fn gamma(gens: &[Exps], n: usize, t: u32) -> u64 {
    let lower = monomial_power(gens, n, t);
    let upper = monomial_power(gens, n, t + 1);
    saturation_box(&upper, n)
        .into_iter()
        .filter(|u| in_monomial_ideal(u, &lower) && !in_monomial_ideal(u, &upper) && in_saturation(u, &upper))
        .count() as u64
}

/// `λ((J : m^∞)/J)` for a monomial ideal.
pub fn saturation_length(gens: &[Exps], n: usize) -> u64 {
    saturation_box(gens, n).into_iter().filter(|u| !in_monomial_ideal(u, gens) && in_saturation(u, gens)).count()
        as u64
}

/// `λ(U/J)` for monomial ideals `J ⊆ U` with `J` primary to `m`.
pub fn monomial_length(j: &[Exps], u: &[Exps], n: usize) -> u64 {
    saturation_box(j, n).into_iter().filter(|v| in_monomial_ideal(v, u) && !in_monomial_ideal(v, j)).count() as u64
}

pub fn to_ideal(ring: &Ring, gens: &[Exps]) -> Ideal {
    let monos: Vec<Monomial> = gens.iter().map(|g| Monomial::from_exponents(g).unwrap()).collect();
    Ideal::from_monomials(ring, &monos).unwrap()
}

/// Reads a polynomial's terms into oracle form.
pub fn to_poly(f: &Polynomial, n: usize) -> Poly {
    f.terms().iter().map(|t| (t.coeff.value() as u64, t.mono.exponents(n))).collect()
}

pub fn monomial_gens(gens: &[Exps]) -> Vec<Poly> {
    gens.iter().map(|g| vec![(1, g.clone())]).collect()
}
