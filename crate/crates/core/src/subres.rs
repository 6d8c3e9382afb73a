//! δ-th generalized subresultant matrices of a system and the polynomial
//! `S_δ` they determine.
//!
//! Each of the three matrices is `d_0 × d_0`, stacked as
//! `[R_1 ... R_t X_{δ,d_0}]ᵀ`: `δ_i` constant rows taken from the pairwise
//! matrix of `(F_0, F_i)`, then `ε` rows `(.., x, -1, ..)`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::{det_poly_bounded, PMatrix};
use crate::pairwise::{bezout_rows, cayley_table, hybrid_rows, nonhom_rows};
use crate::poly::Poly;
use crate::rat::{pow_signed, rat, Rat};
use crate::system::{DeltaIndex, Formula, PolySystem};

/// `d0 × ε` block with `x` on the diagonal and `-1` just below it.
pub fn x_block(delta: &DeltaIndex, d0: usize) -> PMatrix {
    let eps = delta.eps();
    let mut entries = vec![Poly::zero(); d0 * eps];
    for k in 0..eps {
        entries[k * eps + k] = Poly::x();
        if k + 1 < d0 {
            entries[(k + 1) * eps + k] = Poly::constant(rat(-1));
        }
    }
    PMatrix::new(d0, eps, entries)
}

fn checked_delta(system: &PolySystem, delta: &DeltaIndex) -> Result<DeltaIndex> {
    let rebuilt = DeltaIndex::for_system(delta.values().to_vec(), system)?;
    if rebuilt.is_zero() {
        return Err(Error::DeltaZero);
    }
    Ok(rebuilt)
}

fn stack(d0: usize, delta: &DeltaIndex, blocks: Vec<Vec<Vec<Rat>>>) -> PMatrix {
    let mut entries = Vec::with_capacity(d0 * d0);
    for row in blocks.into_iter().flatten() {
        entries.extend(row.into_iter().map(Poly::constant));
    }
    for k in 0..delta.eps() {
        for col in 0..d0 {
            entries.push(if col == k {
                Poly::x()
            } else if col == k + 1 {
                Poly::constant(rat(-1))
            } else {
                Poly::zero()
            });
        }
    }
    PMatrix::new(d0, d0, entries)
}

/// `Bez_δ(F)`: block `i` is the first `δ_i` rows of `Bez(F_0, F_i)`.
pub fn bez_delta(system: &PolySystem, delta: &DeltaIndex) -> Result<PMatrix> {
    let delta = checked_delta(system, delta)?;
    let f0 = system.leading();
    let blocks = system
        .tail()
        .iter()
        .zip(delta.values())
        .map(|(fi, &count)| {
            if count == 0 {
                return Ok(Vec::new());
            }
            cayley_table(f0, fi).map(|table| bezout_rows(&table, count))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(stack(system.d0(), &delta, blocks))
}

/// `H_δ(F)`: block `i` is the first `δ_i` rows of `H(F_0, F_i)`, i.e.
/// `min(δ_i, d_0-d_i)` shifted coefficient rows then `max(0, δ_i+d_i-d_0)`
/// rows of `k_r` coefficients.
pub fn h_delta(system: &PolySystem, delta: &DeltaIndex) -> Result<PMatrix> {
    let delta = checked_delta(system, delta)?;
    let f0 = system.leading();
    let blocks = system
        .tail()
        .iter()
        .zip(delta.values())
        .map(|(fi, &count)| hybrid_rows(f0, fi, count))
        .collect::<Result<Vec<_>>>()?;
    Ok(stack(system.d0(), &delta, blocks))
}

/// `N_δ(F)`: block `i` is the first `δ_i` rows of `N(F_0, F_i)`.
pub fn n_delta(system: &PolySystem, delta: &DeltaIndex) -> Result<PMatrix> {
    let delta = checked_delta(system, delta)?;
    let f0 = system.leading();
    let d0 = system.d0();
    let blocks = system
        .tail()
        .iter()
        .zip(delta.values())
        .zip(&system.degrees()[1..])
        .map(|((fi, &count), &di)| {
            // Only the coefficient rows are needed when δ_i <= d_0 - d_i.
            if count + di <= d0 {
                return Ok(crate::pairwise::coefficient_rows(fi, d0, count));
            }
            let table = cayley_table(f0, fi)?;
            nonhom_rows(fi, &table, count)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(stack(d0, &delta, blocks))
}

pub fn assemble(system: &PolySystem, delta: &DeltaIndex, formula: Formula) -> Result<PMatrix> {
    match formula {
        Formula::Bezout => bez_delta(system, delta),
        Formula::HybridBezout => h_delta(system, delta),
        Formula::NonhomBezout => n_delta(system, delta),
    }
}

/// Exponent `e` in `S_δ = a_{0,d_0}^e · det(matrix)`, possibly negative.
pub fn scale_exponent(degrees: &[usize], delta: &DeltaIndex, formula: Formula) -> i64 {
    let d0 = degrees[0];
    let reduction: usize = match formula {
        Formula::Bezout => delta.total(),
        Formula::HybridBezout | Formula::NonhomBezout => delta
            .values()
            .iter()
            .zip(&degrees[1..])
            .map(|(&di, &deg)| (di + deg).saturating_sub(d0))
            .sum(),
    };
    delta.delta0() - reduction as i64
}

/// Determinant of an assembled matrix times the leading-coefficient power.
pub fn finish(
    system: &PolySystem,
    delta: &DeltaIndex,
    formula: Formula,
    matrix: &PMatrix,
) -> Result<Poly> {
    let det = det_poly_bounded(matrix, delta.eps())?;
    if det.is_zero() {
        return Ok(det);
    }
    let e = scale_exponent(system.degrees(), delta, formula);
    let factor: Rat = pow_signed(system.lc0(), e);
    debug_assert!(!factor.is_zero());
    Ok(det.scale(&factor))
}

/// `S_δ(F)` by the chosen formula.
pub fn subresultant(system: &PolySystem, delta: &DeltaIndex, formula: Formula) -> Result<Poly> {
    let matrix = assemble(system, delta, formula)?;
    let delta = checked_delta(system, delta)?;
    finish(system, &delta, formula, &matrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::det_poly;

    fn system(polys: &[&[i64]]) -> PolySystem {
        PolySystem::new(polys.iter().map(|c| Poly::from_ints(c)).collect()).unwrap()
    }

    fn small() -> PolySystem {
        system(&[&[2, -3, 1], &[-1, 1]])
    }

    fn cmat(rows: &[&[&[i64]]]) -> PMatrix {
        PMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|c| Poly::from_ints(c)).collect())
                .collect(),
        )
    }

    #[test]
    fn x_block_shapes() {
        let d = DeltaIndex::new(vec![1], &[2, 1]).unwrap();
        assert_eq!(x_block(&d, 2), cmat(&[&[&[0, 1]], &[&[-1]]]));
        let d = DeltaIndex::new(vec![2], &[2, 1]).unwrap();
        let empty = x_block(&d, 2);
        assert_eq!((empty.rows(), empty.cols()), (2, 0));
        let d = DeltaIndex::new(vec![1], &[3, 1]).unwrap();
        assert_eq!(
            x_block(&d, 3),
            cmat(&[&[&[0, 1], &[]], &[&[-1], &[0, 1]], &[&[], &[-1]]])
        );
    }

    #[test]
    fn stacked_x_rows_are_block_transpose() {
        let s = system(&[&[1, 0, 2, 0, 1], &[3, 1]]);
        let d = DeltaIndex::for_system(vec![1], &s).unwrap();
        let m = bez_delta(&s, &d).unwrap();
        let x = x_block(&d, 4).transpose();
        for k in 0..3 {
            assert_eq!(m.row(1 + k), x.row(k));
        }
    }

    #[test]
    fn two_by_two_fixture_matrices() {
        let s = small();
        let d1 = DeltaIndex::for_system(vec![1], &s).unwrap();
        let expected = cmat(&[&[&[-1], &[1]], &[&[0, 1], &[-1]]]);
        for f in Formula::ALL {
            assert_eq!(assemble(&s, &d1, f).unwrap(), expected, "{f}");
        }
        let d2 = DeltaIndex::for_system(vec![2], &s).unwrap();
        assert_eq!(
            h_delta(&s, &d2).unwrap(),
            cmat(&[&[&[-1], &[1]], &[&[-2], &[2]]])
        );
        assert_eq!(
            n_delta(&s, &d2).unwrap(),
            cmat(&[&[&[-1], &[1]], &[&[1], &[-1]]])
        );
        assert_eq!(det_poly(&h_delta(&s, &d1).unwrap()).unwrap(), Poly::from_ints(&[1, -1]));
    }

    #[test]
    fn fixture_subresultants() {
        let s = small();
        let d1 = DeltaIndex::for_system(vec![1], &s).unwrap();
        let d2 = DeltaIndex::for_system(vec![2], &s).unwrap();
        for f in Formula::ALL {
            assert_eq!(subresultant(&s, &d1, f).unwrap(), Poly::from_ints(&[1, -1]));
            assert!(subresultant(&s, &d2, f).unwrap().is_zero());
        }
    }

    #[test]
    fn zero_delta_rejected() {
        let s = small();
        let d0 = DeltaIndex::for_system(vec![0], &s).unwrap();
        for f in Formula::ALL {
            assert_eq!(subresultant(&s, &d0, f), Err(Error::DeltaZero));
            assert_eq!(assemble(&s, &d0, f), Err(Error::DeltaZero));
        }
    }

    #[test]
    fn mismatched_delta_rejected() {
        let s = small();
        let other = DeltaIndex::new(vec![1, 1], &[3, 2, 1]).unwrap();
        assert!(matches!(
            subresultant(&s, &other, Formula::Bezout),
            Err(Error::DeltaLength { .. })
        ));
    }

    #[test]
    fn scale_exponents() {
        let d = DeltaIndex::new(vec![2, 2], &[5, 4, 4]).unwrap();
        assert_eq!(scale_exponent(&[5, 4, 4], &d, Formula::HybridBezout), -1);
        assert_eq!(scale_exponent(&[5, 4, 4], &d, Formula::NonhomBezout), -1);
        assert_eq!(scale_exponent(&[5, 4, 4], &d, Formula::Bezout), -3);
        let d = DeltaIndex::new(vec![1], &[2, 1]).unwrap();
        assert_eq!(scale_exponent(&[2, 1], &d, Formula::HybridBezout), 0);
    }

    #[test]
    fn constant_tail_polynomial() {
        // every R_1 block is coefficient rows only
        let s = system(&[&[1, -2, 0, 1], &[3]]);
        for v in 1..=3 {
            let d = DeltaIndex::for_system(vec![v], &s).unwrap();
            let b = subresultant(&s, &d, Formula::Bezout).unwrap();
            assert_eq!(subresultant(&s, &d, Formula::HybridBezout).unwrap(), b);
            assert_eq!(subresultant(&s, &d, Formula::NonhomBezout).unwrap(), b);
        }
    }

    #[test]
    fn duplicate_polynomials_allowed() {
        let s = system(&[&[1, 0, 1, 2], &[1, 1], &[1, 1]]);
        for values in crate::system::enumerate_deltas(2, 3) {
            let d = DeltaIndex::for_system(values, &s).unwrap();
            let b = subresultant(&s, &d, Formula::Bezout).unwrap();
            assert_eq!(subresultant(&s, &d, Formula::HybridBezout).unwrap(), b);
            assert_eq!(subresultant(&s, &d, Formula::NonhomBezout).unwrap(), b);
        }
    }
}
