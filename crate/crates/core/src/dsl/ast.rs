use std::fmt;

use crate::poly::{OperatorPoly, Quadrature};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symbol {
    A,
    Ad,
    B,
    Bd,
    Xa,
    Pa,
    Xb,
    Pb,
}

impl Symbol {
    pub fn from_name(name: &str) -> Option<Symbol> {
        Some(match name {
            "a" => Symbol::A,
            "ad" => Symbol::Ad,
            "b" => Symbol::B,
            "bd" => Symbol::Bd,
            "xa" => Symbol::Xa,
            "pa" => Symbol::Pa,
            "xb" => Symbol::Xb,
            "pb" => Symbol::Pb,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Symbol::A => "a",
            Symbol::Ad => "ad",
            Symbol::B => "b",
            Symbol::Bd => "bd",
            Symbol::Xa => "xa",
            Symbol::Pa => "pa",
            Symbol::Xb => "xb",
            Symbol::Pb => "pb",
        }
    }

    pub fn poly(self) -> OperatorPoly {
        match self {
            Symbol::A => OperatorPoly::a(),
            Symbol::Ad => OperatorPoly::ad(),
            Symbol::B => OperatorPoly::b(),
            Symbol::Bd => OperatorPoly::bd(),
            Symbol::Xa => Quadrature::Xa.poly(),
            Symbol::Pa => Quadrature::Pa.poly(),
            Symbol::Xb => Quadrature::Xb.poly(),
            Symbol::Pb => Quadrature::Pb.poly(),
        }
    }
}

/// Operator expression. Multiplication keeps operand order; commutation is
/// applied only when lowering.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Number(f64),
    /// The imaginary unit `i`.
    Imag,
    Symbol(Symbol),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Paren(Box<Expr>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Ge,
    Lt,
}

/// Arithmetic over expectation values, optionally topped by one comparison.
#[derive(Debug, Clone, PartialEq)]
pub enum Query {
    Expect(Expr),
    Var(Expr),
    Abs2(Box<Query>),
    Number(f64),
    Neg(Box<Query>),
    Add(Box<Query>, Box<Query>),
    Sub(Box<Query>, Box<Query>),
    Mul(Box<Query>, Box<Query>),
    Div(Box<Query>, Box<Query>),
    Paren(Box<Query>),
    Compare {
        lhs: Box<Query>,
        relation: Relation,
        rhs: Box<Query>,
    },
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Number(v) => write!(f, "{v}"),
            Expr::Imag => f.write_str("i"),
            Expr::Symbol(s) => f.write_str(s.name()),
            Expr::Neg(e) => write!(f, "-{e}"),
            Expr::Add(l, r) => write!(f, "{l} + {r}"),
            Expr::Sub(l, r) => write!(f, "{l} - {r}"),
            Expr::Mul(l, r) => write!(f, "{l}*{r}"),
            Expr::Div(l, r) => write!(f, "{l}/{r}"),
            Expr::Pow(b, k) => write!(f, "{b}^{k}"),
            Expr::Paren(e) => write!(f, "({e})"),
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Ge => ">=",
            Relation::Lt => "<",
        })
    }
}

impl fmt::Display for Query {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Query::Expect(e) => write!(f, "E[{e}]"),
            Query::Var(e) => write!(f, "Var[{e}]"),
            Query::Abs2(q) => write!(f, "abs2({q})"),
            Query::Number(v) => write!(f, "{v}"),
            Query::Neg(q) => write!(f, "-{q}"),
            Query::Add(l, r) => write!(f, "{l} + {r}"),
            Query::Sub(l, r) => write!(f, "{l} - {r}"),
            Query::Mul(l, r) => write!(f, "{l}*{r}"),
            Query::Div(l, r) => write!(f, "{l}/{r}"),
            Query::Paren(q) => write!(f, "({q})"),
            Query::Compare { lhs, relation, rhs } => write!(f, "{lhs} {relation} {rhs}"),
        }
    }
}
