//! `S_δ` straight from its definition in the roots of `F_0`:
//! `a_{0,d_0}^{δ_0} · det M_δ / det V`.
//!
//! Only the distinct-root case is covered. This module shares nothing with
//! the matrix formulas beyond polynomial arithmetic and determinants, so it
//! can serve as their oracle.

use std::collections::HashSet;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{det_poly_bounded, det_vandermonde, PMatrix};
use crate::poly::Poly;
use crate::rat::{pow_signed, Rat};
use crate::system::{DeltaIndex, PolySystem};

/// `F_0 = lc0 · ∏(x - α_j)` given by its distinct roots, plus `F_1..F_t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    lc0: Rat,
    roots: Vec<Rat>,
    tail: Vec<Poly>,
}

impl RootSystem {
    pub fn new(lc0: Rat, roots: Vec<Rat>, tail: Vec<Poly>) -> Result<Self> {
        if lc0.is_zero() {
            return Err(Error::ZeroLeadingCoefficient);
        }
        let mut seen = HashSet::new();
        if !roots.iter().all(|r| seen.insert(r)) {
            return Err(Error::RepeatedRoots);
        }
        if tail.is_empty() {
            return Err(Error::InvalidSystem("need at least one tail polynomial".into()));
        }
        let rs = RootSystem { lc0, roots, tail };
        // F_0 degree must dominate; PolySystem checks the rest.
        rs.implied_system()?;
        Ok(rs)
    }

    pub fn lc0(&self) -> &Rat {
        &self.lc0
    }

    pub fn roots(&self) -> &[Rat] {
        &self.roots
    }

    pub fn tail(&self) -> &[Poly] {
        &self.tail
    }

    pub fn leading(&self) -> Poly {
        Poly::from_roots(&self.lc0, &self.roots).expect("lc0 checked nonzero")
    }

    /// The coefficient-form system `(F_0, F_1, ..., F_t)`.
    pub fn implied_system(&self) -> Result<PolySystem> {
        let mut polys = Vec::with_capacity(self.tail.len() + 1);
        polys.push(self.leading());
        polys.extend(self.tail.iter().cloned());
        PolySystem::new(polys)
    }

    pub fn degrees(&self) -> Vec<usize> {
        std::iter::once(self.roots.len())
            .chain(self.tail.iter().map(|p| p.degree().unwrap_or(0)))
            .collect()
    }
}

/// `M_δ`: for each `i`, rows `α_j^k F_i(α_j)` for `k < δ_i`, then rows
/// `α_j^k (x - α_j)` for `k < ε`.
pub fn m_delta(rs: &RootSystem, delta: &DeltaIndex) -> Result<PMatrix> {
    let degrees = rs.degrees();
    let delta = DeltaIndex::new(delta.values().to_vec(), &degrees)?;
    let d0 = rs.roots.len();
    let mut entries = Vec::with_capacity(d0 * d0);
    for (fi, &count) in rs.tail.iter().zip(delta.values()) {
        let values: Vec<Rat> = rs.roots.iter().map(|a| fi.eval(a)).collect();
        let mut powers = vec![Rat::one(); d0];
        for _ in 0..count {
            for ((p, v), root) in powers.iter_mut().zip(&values).zip(&rs.roots) {
                entries.push(Poly::constant(&*p * v));
                *p *= root;
            }
        }
    }
    let mut powers = vec![Rat::one(); d0];
    for _ in 0..delta.eps() {
        for (p, root) in powers.iter_mut().zip(&rs.roots) {
            let linear = Poly::from_coeffs(vec![-root.clone(), Rat::one()]);
            entries.push(linear.scale(p));
            *p *= root;
        }
    }
    Ok(PMatrix::new(d0, d0, entries))
}

pub fn oracle_subresultant(rs: &RootSystem, delta: &DeltaIndex) -> Result<Poly> {
    let degrees = rs.degrees();
    let delta = DeltaIndex::new(delta.values().to_vec(), &degrees)?;
    let m = m_delta(rs, &delta)?;
    let det_m = det_poly_bounded(&m, delta.eps())?;
    let det_v = det_vandermonde(&rs.roots);
    let factor = pow_signed(&rs.lc0, delta.delta0()) / det_v;
    Ok(det_m.scale(&factor))
}
