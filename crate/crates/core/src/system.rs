//! Polynomial systems `F = (F_0, ..., F_t)` and the index vectors `δ`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rat::Rat;

/// `F_0, ..., F_t` with `t >= 1`, all nonzero, and `deg F_0` maximal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySystem {
    polys: Vec<Poly>,
    degrees: Vec<usize>,
}

impl PolySystem {
    pub fn new(polys: Vec<Poly>) -> Result<Self> {
        if polys.len() < 2 {
            return Err(Error::InvalidSystem(format!(
                "need at least 2 polynomials, got {}",
                polys.len()
            )));
        }
        let degrees = polys
            .iter()
            .enumerate()
            .map(|(i, p)| {
                p.degree()
                    .ok_or_else(|| Error::InvalidSystem(format!("F_{i} is the zero polynomial")))
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some((i, d)) = degrees.iter().enumerate().find(|&(_, &d)| d > degrees[0]) {
            return Err(Error::InvalidSystem(format!(
                "deg F_{i} = {d} exceeds deg F_0 = {}",
                degrees[0]
            )));
        }
        Ok(PolySystem { polys, degrees })
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn leading(&self) -> &Poly {
        &self.polys[0]
    }

    /// `F_1, ..., F_t`.
    pub fn tail(&self) -> &[Poly] {
        &self.polys[1..]
    }

    /// `(d_0, ..., d_t)`.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn d0(&self) -> usize {
        self.degrees[0]
    }

    pub fn t(&self) -> usize {
        self.polys.len() - 1
    }

    /// `a_{0,d_0}`.
    pub fn lc0(&self) -> &Rat {
        self.polys[0].leading_coefficient().expect("F_0 is nonzero")
    }

    pub fn replace(&self, index: usize, poly: Poly) -> Result<Self> {
        let mut polys = self.polys.clone();
        polys[index] = poly;
        PolySystem::new(polys)
    }
}

/// `δ = (δ_1, ..., δ_t)` together with the quantities it induces against a
/// degree vector: `|δ|`, `ε = d_0 - |δ|` and `δ_0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeltaIndex {
    values: Vec<usize>,
    total: usize,
    eps: usize,
    delta0: i64,
}

impl DeltaIndex {
    /// `degrees` is `(d_0, ..., d_t)`; `values` must have length `t` and sum
    /// to at most `d_0`. The zero vector is allowed here; the matrix formulas
    /// reject it themselves.
    pub fn new(values: Vec<usize>, degrees: &[usize]) -> Result<Self> {
        let t = degrees.len().saturating_sub(1);
        if values.len() != t {
            return Err(Error::DeltaLength {
                got: values.len(),
                expected: t,
            });
        }
        let d0 = degrees[0];
        let total: usize = values.iter().sum();
        if total > d0 {
            return Err(Error::DeltaTooLarge { total, d0 });
        }
        let delta0 = values
            .iter()
            .zip(&degrees[1..])
            .map(|(&di, &deg)| deg as i64 + di as i64 - d0 as i64)
            .chain(std::iter::once(1 - total as i64))
            .max()
            .expect("chain is nonempty");
        Ok(DeltaIndex {
            values,
            total,
            eps: d0 - total,
            delta0,
        })
    }

    pub fn for_system(values: Vec<usize>, system: &PolySystem) -> Result<Self> {
        DeltaIndex::new(values, system.degrees())
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `|δ|`.
    pub fn total(&self) -> usize {
        self.total
    }

    /// `ε = d_0 - |δ|`.
    pub fn eps(&self) -> usize {
        self.eps
    }

    /// `δ_0 = max(d_1+δ_1-d_0, ..., d_t+δ_t-d_0, 1-|δ|)`.
    pub fn delta0(&self) -> i64 {
        self.delta0
    }

    pub fn is_zero(&self) -> bool {
        self.total == 0
    }
}

/// Dash-joined, e.g. `2-2`.
impl fmt::Display for DeltaIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_dash(&self.values))
    }
}

pub(crate) fn join_dash(values: &[usize]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("-")
}

/// Every nonzero `δ ∈ N^t` with `|δ| <= d0`, lexicographically ascending.
pub fn enumerate_deltas(t: usize, d0: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, left: usize, remaining: usize, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            if prefix.iter().any(|&v| v > 0) {
                out.push(prefix.clone());
            }
            return;
        }
        for v in 0..=remaining {
            prefix.push(v);
            rec(prefix, left - 1, remaining - v, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(t), t, d0, &mut out);
    out
}

/// Which determinant formula computes `S_δ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Bezout,
    HybridBezout,
    NonhomBezout,
}

impl Formula {
    pub const ALL: [Formula; 3] = [Formula::Bezout, Formula::HybridBezout, Formula::NonhomBezout];

    /// CLI / CSV name.
    pub fn name(self) -> &'static str {
        match self {
            Formula::Bezout => "bezout",
            Formula::HybridBezout => "hybrid",
            Formula::NonhomBezout => "nonhom",
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Formula {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "bezout" => Ok(Formula::Bezout),
            "hybrid" => Ok(Formula::HybridBezout),
            "nonhom" => Ok(Formula::NonhomBezout),
            other => Err(format!(
                "unknown formula '{other}' (expected bezout, hybrid or nonhom)"
            )),
        }
    }
}
