//! A small text language for moment inequalities.
//!
//! Operator expressions use the symbols `a`, `ad`, `b`, `bd` (ladder
//! operators, `d` for dagger), `xa`, `pa`, `xb`, `pb` (quadratures) and `i`.
//! Queries combine `E[expr]`, `Var[expr]` and `abs2(...)` arithmetically and
//! may end in a single `>=` or `<` comparison:
//!
//! ```
//! use cvwitness::dsl;
//! let q = dsl::parse("Var[(ad*bd+a*b)/2] * Var[(ad*bd-a*b)/(2*i)] >= abs2(E[(ad*a+bd*b+1)/2])/4").unwrap();
//! assert!(matches!(q, dsl::Query::Compare { .. }));
//! ```

mod ast;
mod lexer;
mod parser;

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::fock::{tol, OperatorMatrix};
use crate::poly::{expectation_poly, variance, OperatorPoly};

pub use ast::{Expr, Query, Relation, Symbol};
pub use parser::{parse, parse_expr};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Lexical,
    Syntax,
}

/// Positioned parse failure; `column` is 1-based and counts characters.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("{} error at column {column}: {message}", match .kind { ParseErrorKind::Lexical => "lexical", ParseErrorKind::Syntax => "parse" })]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn lexical(column: usize, message: impl Into<String>) -> Self {
        ParseError {
            kind: ParseErrorKind::Lexical,
            column,
            message: message.into(),
        }
    }

    fn syntax(column: usize, message: impl Into<String>) -> Self {
        ParseError {
            kind: ParseErrorKind::Syntax,
            column,
            message: message.into(),
        }
    }

    /// The input followed by a caret line under the offending column.
    pub fn caret(&self, text: &str) -> String {
        format!("{text}\n{}^", " ".repeat(self.column.saturating_sub(1)))
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DslError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("cannot lower expression: {0}")]
    Lower(String),
    #[error("Var argument is not Hermitian: {0}")]
    Hermiticity(String),
    #[error("comparison operand is not real: {0}")]
    NotReal(String),
    #[error(transparent)]
    Numeric(#[from] crate::Error),
}

/// Lowers an expression to its normal-ordered polynomial.
pub fn lower(expr: &Expr) -> Result<OperatorPoly, DslError> {
    Ok(match expr {
        Expr::Number(v) => OperatorPoly::scalar(Complex64::from(*v)),
        Expr::Imag => OperatorPoly::scalar(Complex64::i()),
        Expr::Symbol(s) => s.poly(),
        Expr::Neg(e) => -lower(e)?,
        Expr::Add(l, r) => lower(l)? + lower(r)?,
        Expr::Sub(l, r) => lower(l)? - lower(r)?,
        Expr::Mul(l, r) => lower(l)? * lower(r)?,
        Expr::Div(l, r) => {
            let divisor = lower(r)?;
            let c = divisor.as_scalar().ok_or_else(|| {
                DslError::Lower(format!("division by the operator {r}; only scalar divisors are allowed"))
            })?;
            if c == Complex64::new(0.0, 0.0) {
                return Err(DslError::Lower(format!("division by zero in '{expr}'")));
            }
            lower(l)?.scale(c.inv())
        }
        Expr::Pow(b, k) => lower(b)?.pow(*k),
        Expr::Paren(e) => lower(e)?,
    })
}

/// Parses and lowers a bare operator expression.
pub fn lower_str(text: &str) -> Result<OperatorPoly, DslError> {
    lower(&parse_expr(text)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum QueryValue {
    Scalar {
        re: f64,
        im: f64,
    },
    Verdict {
        lhs: f64,
        rhs: f64,
        holds: bool,
    },
}

fn scalar<R: OperatorMatrix>(q: &Query, rho: &R) -> Result<Complex64, DslError> {
    Ok(match q {
        Query::Expect(e) => expectation_poly(rho, &lower(e)?)?,
        Query::Var(e) => {
            let f = lower(e)?;
            if !f.is_hermitian(1e-12) {
                return Err(DslError::Hermiticity(f.to_string()));
            }
            Complex64::from(variance(rho, &f)?)
        }
        Query::Abs2(q) => Complex64::from(scalar(q, rho)?.norm_sqr()),
        Query::Number(v) => Complex64::from(*v),
        Query::Neg(q) => -scalar(q, rho)?,
        Query::Add(l, r) => scalar(l, rho)? + scalar(r, rho)?,
        Query::Sub(l, r) => scalar(l, rho)? - scalar(r, rho)?,
        Query::Mul(l, r) => scalar(l, rho)? * scalar(r, rho)?,
        Query::Div(l, r) => {
            let d = scalar(r, rho)?;
            if d == Complex64::new(0.0, 0.0) {
                return Err(DslError::Lower(format!("division by zero in '{q}'")));
            }
            scalar(l, rho)? / d
        }
        Query::Paren(q) => scalar(q, rho)?,
        Query::Compare { .. } => {
            return Err(DslError::Lower("a comparison cannot be used as a value".into()))
        }
    })
}

fn real_part(z: Complex64, q: &Query) -> Result<f64, DslError> {
    if z.im.abs() > tol::HERM * z.norm().max(1.0) {
        return Err(DslError::NotReal(format!("{q} = {} + {}i", z.re, z.im)));
    }
    Ok(z.re)
}

/// Evaluates a query against a state (or any operator standing in for one).
///
/// `lhs >= rhs` holds unless `lhs < rhs - margin`; `lhs < rhs` holds exactly
/// when that violation occurs, so the two relations are complementary.
pub fn evaluate<R: OperatorMatrix>(query: &Query, rho: &R) -> Result<QueryValue, DslError> {
    match query {
        Query::Compare { lhs, relation, rhs } => {
            let l = real_part(scalar(lhs, rho)?, lhs)?;
            let r = real_part(scalar(rhs, rho)?, rhs)?;
            let violated = l < r - tol::margin(l, r);
            let holds = match relation {
                Relation::Ge => !violated,
                Relation::Lt => violated,
            };
            Ok(QueryValue::Verdict { lhs: l, rhs: r, holds })
        }
        q => {
            let z = scalar(q, rho)?;
            Ok(QueryValue::Scalar { re: z.re, im: z.im })
        }
    }
}

/// Parses and evaluates in one step.
pub fn evaluate_str<R: OperatorMatrix>(text: &str, rho: &R) -> Result<QueryValue, DslError> {
    evaluate(&parse(text)?, rho)
}
