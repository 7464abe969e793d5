use super::Ideal;
use crate::algebra::Polynomial;
use crate::error::{Error, Result};

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Determinant by cofactor expansion along the first row.
fn determinant(m: &[Vec<Polynomial>]) -> Result<Polynomial> {
    let k = m.len();
    if k == 1 {
        return Ok(m[0][0].clone());
    }
    let ring = m[0][0].ring().clone();
    let mut acc = Polynomial::zero(&ring);
    for c in 0..k {
        if m[0][c].is_zero() {
            continue;
        }
        let sub: Vec<Vec<Polynomial>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, p)| p.clone()).collect()).collect();
        let term = m[0][c].mul(&determinant(&sub)?)?;
        acc = if c % 2 == 0 { acc.add(&term)? } else { acc.sub(&term)? };
    }
    Ok(acc)
}

/// Ideal of all `k × k` minors of `matrix`.
pub fn minors(k: usize, matrix: &[Vec<Polynomial>]) -> Result<Ideal> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, |r| r.len());
    if rows == 0 || cols == 0 {
        return Err(Error::SizeViolation("empty matrix".into()));
    }
    if matrix.iter().any(|r| r.len() != cols) {
        return Err(Error::SizeViolation("rows have different lengths".into()));
    }
    if k > rows.min(cols) {
        return Err(Error::SizeViolation(format!("minor size {k} exceeds {rows}x{cols}")));
    }
    let ring = matrix[0][0].ring().clone();
    if matrix.iter().flatten().any(|p| p.ring() != &ring) {
        return Err(Error::RingMismatch);
    }
    if k == 0 {
        return Ok(Ideal::unit(&ring));
    }
    let mut gens = Vec::new();
    for rs in combinations(rows, k) {
        for cs in combinations(cols, k) {
            let sub: Vec<Vec<Polynomial>> = rs.iter().map(|&r| cs.iter().map(|&c| matrix[r][c].clone()).collect()).collect();
            gens.push(determinant(&sub)?);
        }
    }
    Ideal::new(&ring, gens)
}
