//! Exact generalized subresultants `S_δ` of several univariate polynomials.
//!
//! Three determinant formulas are provided, all over exact rationals:
//!
//! - the Bézout subresultant matrix `Bez_δ(F)`,
//! - the hybrid Bézout subresultant matrix `H_δ(F)`,
//! - the non-homogeneous Bézout subresultant matrix `N_δ(F)`,
//!
//! together with an independent evaluation of `S_δ` from the roots of `F_0`
//! ([`oracle`]) and a timing harness ([`bench`]).
//!
//! ```
//! use bezout_subres::{parse_poly, subresultant, DeltaIndex, Formula, PolySystem};
//!
//! let system = PolySystem::new(vec![
//!     parse_poly("x^2 - 3*x + 2").unwrap(),
//!     parse_poly("x - 1").unwrap(),
//! ])
//! .unwrap();
//! let delta = DeltaIndex::for_system(vec![1], &system).unwrap();
//! let s = subresultant(&system, &delta, Formula::HybridBezout).unwrap();
//! assert_eq!(s.to_string(), "-x + 1");
//! ```

pub mod bench;
pub mod error;
pub mod matrix;
pub mod oracle;
pub mod pairwise;
pub mod parse;
pub mod poly;
pub mod rat;
pub mod subres;
pub mod system;

pub use error::{Error, ParseError, Result};
pub use matrix::{
    det_poly, det_poly_bounded, det_rat, det_vandermonde, interpolate, vandermonde, PMatrix,
    RMatrix,
};
pub use oracle::{m_delta, oracle_subresultant, RootSystem};
pub use pairwise::{
    bezout_matrix, cayley_table, hybrid_bezout_matrix, k_poly, nonhom_bezout_matrix, CayleyTable,
};
pub use parse::parse_poly;
pub use poly::Poly;
pub use rat::{parse_rat, render_rat, Rat};
pub use subres::{
    assemble, bez_delta, finish, h_delta, n_delta, scale_exponent, subresultant, x_block,
};
pub use system::{enumerate_deltas, DeltaIndex, Formula, PolySystem};
