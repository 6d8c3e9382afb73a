//! Dense matrices over [`Rat`] and [`Poly`] with exact determinants.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rat::{rat, Rat};

/// Row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        RMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RMatrix::new(rows, cols, vec![Rat::zero(); rows * cols])
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let entries: Vec<Rat> = rows.into_iter().flatten().collect();
        RMatrix::new(n, cols, entries)
    }

    /// Like [`RMatrix::from_rows`] but keeps the column count when `rows` is empty.
    pub fn with_width(cols: usize, rows: Vec<Vec<Rat>>) -> Self {
        let n = rows.len();
        let entries: Vec<Rat> = rows.into_iter().flatten().collect();
        RMatrix::new(n, cols, entries)
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        RMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rat) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> RMatrix {
        let mut out = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                out.push(self.get(r, c).clone());
            }
        }
        RMatrix::new(self.cols, self.rows, out)
    }

    pub fn to_poly_matrix(&self) -> PMatrix {
        PMatrix::new(
            self.rows,
            self.cols,
            self.entries.iter().cloned().map(Poly::constant).collect(),
        )
    }
}

/// Row-major matrix of polynomials, with the largest entry degree cached.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
    xdeg_max: usize,
}

impl PMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Poly>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        let xdeg_max = entries.iter().filter_map(Poly::degree).max().unwrap_or(0);
        PMatrix {
            rows,
            cols,
            entries,
            xdeg_max,
        }
    }

    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        PMatrix::new(n, cols, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn xdeg_max(&self) -> usize {
        self.xdeg_max
    }

    pub fn get(&self, r: usize, c: usize) -> &Poly {
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Poly] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn set(&mut self, r: usize, c: usize, value: Poly) {
        self.entries[r * self.cols + c] = value;
        self.xdeg_max = self.entries.iter().filter_map(Poly::degree).max().unwrap_or(0);
    }

    pub fn transpose(&self) -> PMatrix {
        let mut out = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                out.push(self.get(r, c).clone());
            }
        }
        PMatrix::new(self.cols, self.rows, out)
    }

    /// Substitutes `x = at` in every entry.
    pub fn eval(&self, at: &Rat) -> RMatrix {
        RMatrix::new(
            self.rows,
            self.cols,
            self.entries.iter().map(|p| p.eval(at)).collect(),
        )
    }
}

impl fmt::Display for PMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for r in 0..self.rows {
            f.write_str("[")?;
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{:>width$}", cells[r * self.cols + c])?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}

/// Exact determinant: each row is scaled to integers, then fraction-free
/// Bareiss elimination runs over `BigInt`.
pub fn det_rat(m: &RMatrix) -> Result<Rat> {
    if m.rows != m.cols {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let mut cleared = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for r in 0..n {
        let row = m.row(r);
        let lcm = row
            .iter()
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        a.push(
            row.iter()
                .map(|v| v.numer() * (&lcm / v.denom()))
                .collect(),
        );
        cleared *= lcm;
    }
    let det = bareiss(a);
    Ok(Rat::new(det, cleared))
}

fn bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (upper, lower) = a.split_at_mut(k + 1);
        let pivot_row = &upper[k];
        for row in lower.iter_mut() {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let v = &row[j] * &pivot_row[k] - &lead * &pivot_row[j];
                row[j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Interpolation nodes 0, 1, -1, 2, -2, ...
pub fn interpolation_nodes(count: usize) -> Vec<Rat> {
    (0..count)
        .map(|k| {
            let k = k as i64;
            if k % 2 == 1 {
                rat((k + 1) / 2)
            } else {
                rat(-(k / 2))
            }
        })
        .collect()
}

/// Newton-form interpolation through distinct `xs`.
pub fn interpolate(xs: &[Rat], ys: &[Rat]) -> Poly {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    if n == 0 {
        return Poly::zero();
    }
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = &coef[i] - &coef[i - 1];
            coef[i] = num / (&xs[i] - &xs[i - j]);
        }
    }
    let mut acc = Poly::constant(coef[n - 1].clone());
    for i in (0..n - 1).rev() {
        let shift = Poly::from_coeffs(vec![-xs[i].clone(), Rat::one()]);
        acc = acc * shift + Poly::constant(coef[i].clone());
    }
    acc
}

/// Determinant of a polynomial matrix by evaluation at `rows * xdeg_max + 1`
/// nodes and interpolation.
pub fn det_poly(m: &PMatrix) -> Result<Poly> {
    det_poly_bounded(m, m.rows * m.xdeg_max)
}

/// As [`det_poly`], with the caller promising `deg det <= degree_bound`.
pub fn det_poly_bounded(m: &PMatrix, degree_bound: usize) -> Result<Poly> {
    if m.rows != m.cols {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    if m.xdeg_max == 0 {
        return det_rat(&m.eval(&Rat::zero())).map(Poly::constant);
    }
    let bound = degree_bound.min(m.rows * m.xdeg_max);
    let xs = interpolation_nodes(bound + 1);
    let ys = xs
        .iter()
        .map(|x| det_rat(&m.eval(x)))
        .collect::<Result<Vec<_>>>()?;
    Ok(interpolate(&xs, &ys))
}

/// `V[i][j] = points[j]^i`: row index is the power.
pub fn vandermonde(points: &[Rat]) -> RMatrix {
    let n = points.len();
    let mut v = RMatrix::zeros(n, n);
    for (j, p) in points.iter().enumerate() {
        let mut power = Rat::one();
        for i in 0..n {
            v.set(i, j, power.clone());
            power *= p;
        }
    }
    v
}

/// `prod_{i<j} (points[j] - points[i])`.
pub fn det_vandermonde(points: &[Rat]) -> Rat {
    let mut acc = Rat::one();
    for j in 0..points.len() {
        for i in 0..j {
            acc *= &points[j] - &points[i];
        }
    }
    acc
}
