//! The two-polynomial matrices: Bézout `Bez(A,B)`, hybrid Bézout `H(A,B)`
//! and non-homogeneous Bézout `N(A,B)`.
//!
//! Throughout, `m = deg A >= n = deg B` and column `j` holds the coefficient
//! of `x^j`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::RMatrix;
use crate::poly::Poly;
use crate::rat::Rat;

/// Coefficients `c[i][j]` of the Cayley quotient
/// `(A(x)B(y) - A(y)B(x)) / (x - y) = sum c[i][j] x^i y^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    m: usize,
    c: Vec<Vec<Rat>>,
}

impl CayleyTable {
    pub fn size(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.c[i][j]
    }

    /// Row `c[i][0..m]`.
    pub fn row(&self, i: usize) -> &[Rat] {
        &self.c[i]
    }
}

fn degrees(a: &Poly, b: &Poly) -> Result<(usize, usize)> {
    let m = a.degree().ok_or(Error::ZeroPolynomial)?;
    let n = b.degree().ok_or(Error::ZeroPolynomial)?;
    if m < n {
        return Err(Error::DegreeOrder { left: m, right: n });
    }
    Ok((m, n))
}

pub fn cayley_table(a: &Poly, b: &Poly) -> Result<CayleyTable> {
    let (m, _) = degrees(a, b)?;
    // numer[p][q] is the coefficient of x^p y^q in A(x)B(y) - A(y)B(x)
    let mut numer = vec![vec![Rat::zero(); m + 1]; m + 1];
    for (p, ap) in a.coeffs().iter().enumerate() {
        for (q, bq) in b.coeffs().iter().enumerate() {
            let prod = ap * bq;
            numer[p][q] += &prod;
            numer[q][p] -= prod;
        }
    }
    // Synthetic division by (x - y) in Q[y][x]: with quotient rows c_i(y),
    // numer_p = c_{p-1} - y * c_p, so c_{p-1} = numer_p + y * c_p.
    let mut c = vec![vec![Rat::zero(); m]; m];
    let mut carry = vec![Rat::zero(); m + 1];
    for p in (1..=m).rev() {
        let mut next = numer[p].clone();
        for q in 0..m {
            next[q + 1] += &carry[q];
        }
        debug_assert!(next[m].is_zero(), "quotient y-degree exceeds m-1");
        c[p - 1].clone_from_slice(&next[..m]);
        carry = next;
    }
    let mut remainder = numer[0].clone();
    for q in 0..m {
        remainder[q + 1] += &carry[q];
    }
    debug_assert!(remainder.iter().all(Zero::is_zero), "inexact Cayley division");
    Ok(CayleyTable { m, c })
}

/// Rows `k = 0..count` of `Bez(A,B)`: row `k` is `c[m-1-k][..]`.
pub fn bezout_rows(table: &CayleyTable, count: usize) -> Vec<Vec<Rat>> {
    let m = table.m;
    (0..count).map(|k| table.row(m - 1 - k).to_vec()).collect()
}

pub fn bezout_matrix(a: &Poly, b: &Poly) -> Result<RMatrix> {
    let table = cayley_table(a, b)?;
    Ok(RMatrix::with_width(table.m, bezout_rows(&table, table.m)))
}

/// `k_r` for `1 <= r <= n`; its coefficient of `x^(m-j)` is `f_{r,j}`.
pub fn k_poly(a: &Poly, b: &Poly, r: usize) -> Result<Poly> {
    let (m, n) = degrees(a, b)?;
    if r == 0 || r > n {
        return Err(Error::IndexOutOfRange { r, n });
    }
    let lead_a = Poly::from_coeffs((0..r).map(|s| a.coeff(m - r + 1 + s)).collect());
    let mut low_b = vec![Rat::zero(); m - r + 1];
    for q in 0..=n - r {
        low_b[m - n + q] = b.coeff(q);
    }
    let low_b = Poly::from_coeffs(low_b);
    let low_a = Poly::from_coeffs((0..=m - r).map(|s| a.coeff(s)).collect());
    let lead_b = Poly::from_coeffs((0..r).map(|s| b.coeff(n - r + 1 + s)).collect());
    Ok(&lead_a * &low_b - &low_a * &lead_b)
}

/// The shifted coefficient rows `[b_0 .. b_n]` that open `H(A,B)` and `N(A,B)`.
pub fn coefficient_rows(b: &Poly, width: usize, count: usize) -> Vec<Vec<Rat>> {
    (0..count)
        .map(|s| {
            let mut row = vec![Rat::zero(); width];
            for (q, bq) in b.coeffs().iter().enumerate() {
                row[s + q] = bq.clone();
            }
            row
        })
        .collect()
}

/// First `count` rows of `H(A,B)`, generating only the `k_r` it needs.
pub fn hybrid_rows(a: &Poly, b: &Poly, count: usize) -> Result<Vec<Vec<Rat>>> {
    let (m, n) = degrees(a, b)?;
    let top = count.min(m - n);
    let mut rows = coefficient_rows(b, m, top);
    for r in 1..=count.saturating_sub(m - n).min(n) {
        let k = k_poly(a, b, r)?;
        rows.push((0..m).map(|p| k.coeff(p)).collect());
    }
    Ok(rows)
}

pub fn hybrid_bezout_matrix(a: &Poly, b: &Poly) -> Result<RMatrix> {
    let m = degrees(a, b)?.0;
    Ok(RMatrix::with_width(m, hybrid_rows(a, b, m)?))
}

/// First `count` rows of `N(A,B)`. The Cayley table must be that of `(A, B)`.
pub fn nonhom_rows(b: &Poly, table: &CayleyTable, count: usize) -> Result<Vec<Vec<Rat>>> {
    let m = table.m;
    let n = b.degree().ok_or(Error::ZeroPolynomial)?;
    let top = count.min(m - n);
    let mut rows = coefficient_rows(b, m, top);
    for r in 1..=count.saturating_sub(m - n).min(n) {
        rows.push(table.row(n - r).to_vec());
    }
    Ok(rows)
}

pub fn nonhom_bezout_matrix(a: &Poly, b: &Poly) -> Result<RMatrix> {
    let table = cayley_table(a, b)?;
    let m = table.m;
    Ok(RMatrix::with_width(m, nonhom_rows(b, &table, m)?))
}
