//! Test-only oracles and generators, independent of the library's
//! elimination and interpolation code.

#![allow(dead_code)]

use bezout_subres::rat::rat;
use bezout_subres::{PMatrix, Poly, PolySystem, RMatrix, Rat, RootSystem};
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

/// Laplace expansion along the first row.
pub fn cofactor_det_rat(m: &RMatrix) -> Rat {
    let idx: Vec<usize> = (0..m.rows()).collect();
    cofactor_rec(&idx, 0, &|r, c| m.get(r, c).clone(), Rat::zero(), Rat::one())
}

pub fn cofactor_det_poly(m: &PMatrix) -> Poly {
    let idx: Vec<usize> = (0..m.rows()).collect();
    cofactor_rec(&idx, 0, &|r, c| m.get(r, c).clone(), Poly::zero(), Poly::one())
}

fn cofactor_rec<T, F>(cols: &[usize], row: usize, entry: &F, zero: T, one: T) -> T
where
    T: Clone + std::ops::Add<Output = T> + std::ops::Sub<Output = T> + std::ops::Mul<Output = T>,
    F: Fn(usize, usize) -> T,
{
    if cols.is_empty() {
        return one;
    }
    let mut acc = zero.clone();
    for (k, &c) in cols.iter().enumerate() {
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = cofactor_rec(&rest, row + 1, entry, zero.clone(), one.clone());
        let term = entry(row, c) * minor;
        acc = if k % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

pub fn random_poly<R: Rng>(rng: &mut R, degree: usize, bound: i64) -> Poly {
    let mut coeffs: Vec<i64> = (0..degree).map(|_| rng.gen_range(-bound..=bound)).collect();
    let lead = loop {
        let v = rng.gen_range(-bound..=bound);
        if v != 0 {
            break v;
        }
    };
    coeffs.push(lead);
    Poly::from_ints(&coeffs)
}

/// Random polynomial of degree at most `degree`, possibly zero.
pub fn random_poly_upto<R: Rng>(rng: &mut R, degree: usize, bound: i64) -> Poly {
    Poly::from_ints(&(0..=degree).map(|_| rng.gen_range(-bound..=bound)).collect::<Vec<_>>())
}

pub fn random_system<R: Rng>(rng: &mut R, t: usize, max_d0: usize, bound: i64) -> PolySystem {
    let d0 = rng.gen_range(1..=max_d0);
    let mut polys = vec![random_poly(rng, d0, bound)];
    for _ in 0..t {
        let d = rng.gen_range(0..=d0);
        polys.push(random_poly(rng, d, bound));
    }
    PolySystem::new(polys).expect("valid by construction")
}

/// Distinct integer roots drawn from `[-range, range]`.
pub fn random_root_system<R: Rng>(rng: &mut R, t: usize, max_d0: usize, range: i64) -> RootSystem {
    let d0 = rng.gen_range(1..=max_d0);
    let mut pool: Vec<i64> = (-range..=range).collect();
    pool.shuffle(rng);
    let roots: Vec<Rat> = pool[..d0].iter().map(|&r| rat(r)).collect();
    let lc = loop {
        let v = rng.gen_range(-3..=3);
        if v != 0 {
            break v;
        }
    };
    let tail = (0..t)
        .map(|_| {
            let d = rng.gen_range(0..=d0);
            random_poly(rng, d, 5)
        })
        .collect();
    RootSystem::new(rat(lc), roots, tail).expect("valid by construction")
}

pub fn random_rat<R: Rng>(rng: &mut R, bound: i64) -> Rat {
    Rat::new(rng.gen_range(-bound..=bound).into(), rng.gen_range(1..=bound).into())
}

pub fn random_nonzero_rat<R: Rng>(rng: &mut R, bound: i64) -> Rat {
    loop {
        let r = random_rat(rng, bound);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Dense bivariate coefficient grid `g[p][q]` of `x^p y^q`.
pub type Grid = Vec<Vec<Rat>>;

pub fn grid(size: usize) -> Grid {
    vec![vec![Rat::zero(); size]; size]
}

/// `A(x)B(y) - A(y)B(x)` as a grid.
pub fn cayley_numerator(a: &Poly, b: &Poly, size: usize) -> Grid {
    let mut g = grid(size);
    for (p, ap) in a.coeffs().iter().enumerate() {
        for (q, bq) in b.coeffs().iter().enumerate() {
            g[p][q] += ap * bq;
            g[q][p] -= ap * bq;
        }
    }
    g
}

/// `(x - y) * q(x,y)` for a grid `q`.
pub fn times_x_minus_y(q: &Grid, size: usize) -> Grid {
    let mut g = grid(size);
    for (p, row) in q.iter().enumerate() {
        for (r, v) in row.iter().enumerate() {
            g[p + 1][r] += v;
            g[p][r + 1] -= v;
        }
    }
    g
}

pub fn mat_mul_rat(a: &RMatrix, b: &RMatrix) -> RMatrix {
    assert_eq!(a.cols(), b.rows());
    let mut out = RMatrix::zeros(a.rows(), b.cols());
    for i in 0..a.rows() {
        for j in 0..b.cols() {
            let mut acc = Rat::zero();
            for k in 0..a.cols() {
                acc += a.get(i, k) * b.get(k, j);
            }
            out.set(i, j, acc);
        }
    }
    out
}

pub fn mat_mul_poly_rat(a: &PMatrix, b: &RMatrix) -> PMatrix {
    assert_eq!(a.cols(), b.rows());
    let mut entries = Vec::with_capacity(a.rows() * b.cols());
    for i in 0..a.rows() {
        for j in 0..b.cols() {
            let mut acc = Poly::zero();
            for k in 0..a.cols() {
                acc = acc + a.get(i, k).scale(b.get(k, j));
            }
            entries.push(acc);
        }
    }
    PMatrix::new(a.rows(), b.cols(), entries)
}
