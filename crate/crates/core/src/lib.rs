//! Entanglement witnesses for two-mode bosonic states.
//!
//! States live in a truncated number basis (`fock`), operators are kept as
//! normal-ordered polynomials in `a`, `a†`, `b`, `b†` (`poly`), and the
//! `criteria` module turns moments of those polynomials into separability
//! verdicts: second-order quadrature criteria, higher-order SU(2) and SU(1,1)
//! witnesses obtained through partial transposition, and the exact
//! partial-transpose eigenvalue test. The `dsl` module lets new moment
//! inequalities be written as text.

pub mod cli;
pub mod criteria;
pub mod dsl;
pub mod error;
pub mod fock;
pub mod poly;
pub mod states;

pub use error::{Error, Result};
pub use fock::{Cutoff, DensityOperator, JointOperator, OperatorMatrix, PureState};
pub use num_complex::Complex64;
pub use poly::{Monomial, OperatorPoly, Quadrature};
