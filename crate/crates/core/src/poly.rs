//! Dense univariate polynomials over [`Rat`] in the variable `x`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{render_rat, Rat};

/// A polynomial stored as ascending coefficients with no trailing zeros.
///
/// The zero polynomial has no coefficients and degree `None`, which orders
/// below every `Some(d)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Poly::monomial(Rat::one(), 1)
    }

    pub fn constant(c: Rat) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn monomial(c: Rat, power: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); power + 1];
        coeffs[power] = c;
        Poly { coeffs }
    }

    /// Builds from ascending coefficients, trimming high zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| crate::rat::rat(c)).collect())
    }

    /// `lc * (x - r_1) * ... * (x - r_k)`.
    pub fn from_roots(lc: &Rat, roots: &[Rat]) -> Result<Self> {
        if lc.is_zero() {
            return Err(Error::ZeroLeadingCoefficient);
        }
        let mut coeffs = vec![lc.clone()];
        for root in roots {
            // multiply in place by (x - root)
            coeffs.insert(0, Rat::zero());
            for k in 0..coeffs.len() - 1 {
                let shifted = &coeffs[k + 1] * root;
                coeffs[k] -= shifted;
            }
        }
        Ok(Poly { coeffs })
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^power`; zero beyond the degree.
    pub fn coeff(&self, power: usize) -> Rat {
        self.coeffs.get(power).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading_coefficient(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * at + c)
    }

    pub fn scale(&self, by: &Rat) -> Poly {
        if by.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|c| c * by).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Poly {
        (0..exp).fold(Poly::one(), |acc, _| &acc * self)
    }

    fn add_impl(&self, other: &Poly, negate: bool) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            let a = self.coeffs.get(k);
            let b = other.coeffs.get(k);
            out.push(match (a, b, negate) {
                (Some(a), Some(b), false) => a + b,
                (Some(a), Some(b), true) => a - b,
                (Some(a), None, _) => a.clone(),
                (None, Some(b), false) => b.clone(),
                (None, Some(b), true) => -b,
                (None, None, _) => unreachable!(),
            });
        }
        Poly::from_coeffs(out)
    }

    fn mul_impl(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                $body(self, rhs)
            }
        }
        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                $body(&self, &rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &Poly, b: &Poly| a.add_impl(b, false));
forward_binop!(Sub, sub, |a: &Poly, b: &Poly| a.add_impl(b, true));
forward_binop!(Mul, mul, |a: &Poly, b: &Poly| a.mul_impl(b));

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl From<Rat> for Poly {
    fn from(c: Rat) -> Self {
        Poly::constant(c)
    }
}

/// Descending powers with explicit signs, e.g. `x^2 - 3*x + 2`, `-1/2*x + 1/3`.
/// The output parses back to the same polynomial.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let mag = c.abs();
            let var = match power {
                0 => String::new(),
                1 => "x".to_string(),
                p => format!("x^{p}"),
            };
            if power == 0 {
                f.write_str(&render_rat(&mag))?;
            } else if mag.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{}*{}", render_rat(&mag), var)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn add_cancels_and_keeps_identity() {
        assert_eq!(p(&[1, 1]) + p(&[0, -1]), p(&[1]));
        assert_eq!(Poly::zero() + p(&[2, -3, 1]), p(&[2, -3, 1]));
        assert_eq!(p(&[2, -3, 1]) + p(&[-1, 1]), p(&[1, -2, 1]));
        assert_eq!((p(&[0, 0, 5]) - p(&[0, 0, 5])).degree(), None);
    }

    #[test]
    fn mul_expands() {
        assert_eq!(p(&[-1, 1]) * p(&[-2, 1]), p(&[2, -3, 1]));
        assert!((p(&[3, 4]) * Poly::zero()).is_zero());
        assert_eq!(p(&[1, 1]).pow(2), p(&[1, 2, 1]));
    }

    #[test]
    fn eval_horner() {
        let f = p(&[2, -3, 1]);
        assert_eq!(f.eval(&rat(1)), rat(0));
        assert_eq!(f.eval(&rat(0)), rat(2));
        assert_eq!(f.eval(&rat(3)), rat(2));
    }

    #[test]
    fn from_roots_cases() {
        assert_eq!(
            Poly::from_roots(&rat(1), &[rat(1), rat(2)]).unwrap(),
            p(&[2, -3, 1])
        );
        assert_eq!(Poly::from_roots(&rat(2), &[]).unwrap(), p(&[2]));
        assert_eq!(
            Poly::from_roots(&rat(1), &[rat(0), rat(0)]).unwrap(),
            p(&[0, 0, 1])
        );
        assert_eq!(
            Poly::from_roots(&rat(0), &[rat(1)]),
            Err(Error::ZeroLeadingCoefficient)
        );
    }

    #[test]
    fn zero_degree_sorts_below_constants() {
        assert!(Poly::zero().degree() < p(&[7]).degree());
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!(p(&[2, -3, 1]).to_string(), "x^2 - 3*x + 2");
        assert_eq!(p(&[1, -1]).to_string(), "-x + 1");
        assert_eq!(Poly::zero().to_string(), "0");
        let half = Poly::from_coeffs(vec![ratio(1, 3), ratio(-1, 2)]);
        assert_eq!(half.to_string(), "-1/2*x + 1/3");
        assert_eq!(p(&[0, 0, 0, -1]).to_string(), "-x^3");
    }
}
