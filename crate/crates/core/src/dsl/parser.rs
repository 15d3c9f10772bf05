//! Recursive-descent parser.
//!
//! ```text
//! query    := compare | arith
//! compare  := arith (">=" | "<") arith
//! arith    := aterm (("+"|"-") aterm)*
//! aterm    := afact (("*"|"/") afact)*
//! afact    := "E" "[" expr "]" | "Var" "[" expr "]" | "abs2" "(" arith ")"
//!           | number | "(" arith ")" | "-" afact
//! expr     := term (("+"|"-") term)*
//! term     := factor (("*"|"/") factor)*
//! factor   := primary ("^" posint)? | "-" factor
//! primary  := "a"|"ad"|"b"|"bd"|"xa"|"pa"|"xb"|"pb"|"i"|number|"(" expr ")"
//! ```

use super::ast::{Expr, Query, Relation, Symbol};
use super::lexer::{tokenize, Spanned, Tok};
use super::ParseError;

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: tokenize(text)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn column(&self) -> usize {
        self.toks[self.pos].column
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        ParseError::syntax(
            self.column(),
            format!("expected {expected}, found {}", self.peek().describe()),
        )
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(what))
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            Err(self.unexpected("end of input"))
        }
    }

    fn query(&mut self) -> Result<Query, ParseError> {
        let lhs = self.arith()?;
        let relation = match self.peek() {
            Tok::Ge => Relation::Ge,
            Tok::Lt => Relation::Lt,
            _ => return Ok(lhs),
        };
        self.bump();
        let rhs = self.arith()?;
        Ok(Query::Compare {
            lhs: Box::new(lhs),
            relation,
            rhs: Box::new(rhs),
        })
    }

    fn arith(&mut self) -> Result<Query, ParseError> {
        let mut acc = self.aterm()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = Query::Add(Box::new(acc), Box::new(self.aterm()?));
                }
                Tok::Minus => {
                    self.bump();
                    acc = Query::Sub(Box::new(acc), Box::new(self.aterm()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn aterm(&mut self) -> Result<Query, ParseError> {
        let mut acc = self.afact()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = Query::Mul(Box::new(acc), Box::new(self.afact()?));
                }
                Tok::Slash => {
                    self.bump();
                    acc = Query::Div(Box::new(acc), Box::new(self.afact()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn afact(&mut self) -> Result<Query, ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) if name == "E" || name == "Var" => {
                self.bump();
                self.expect(Tok::LBracket, "'['")?;
                let e = self.expr()?;
                self.expect(Tok::RBracket, "']'")?;
                Ok(if name == "E" { Query::Expect(e) } else { Query::Var(e) })
            }
            Tok::Ident(name) if name == "abs2" => {
                self.bump();
                self.expect(Tok::LParen, "'('")?;
                let q = self.arith()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(Query::Abs2(Box::new(q)))
            }
            Tok::Number { value, .. } => {
                self.bump();
                Ok(Query::Number(value))
            }
            Tok::LParen => {
                self.bump();
                let q = self.arith()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(Query::Paren(Box::new(q)))
            }
            Tok::Minus => {
                self.bump();
                Ok(Query::Neg(Box::new(self.afact()?)))
            }
            _ => Err(self.unexpected("'E[', 'Var[', 'abs2(', a number or '('")),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
                }
                Tok::Slash => {
                    self.bump();
                    acc = Expr::Div(Box::new(acc), Box::new(self.factor()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.primary()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let column = self.column();
        match self.bump() {
            Tok::Number { text, .. } => match text.parse::<u32>() {
                Ok(k) if k >= 1 => Ok(Expr::Pow(Box::new(base), k)),
                _ => Err(ParseError::syntax(
                    column,
                    format!("expected a positive integer exponent, found {text}"),
                )),
            },
            other => Err(ParseError::syntax(
                column,
                format!("expected a positive integer exponent, found {}", other.describe()),
            )),
        }
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let column = self.column();
        match self.peek().clone() {
            Tok::Ident(name) => {
                if name == "i" {
                    self.bump();
                    return Ok(Expr::Imag);
                }
                match Symbol::from_name(&name) {
                    Some(s) => {
                        self.bump();
                        Ok(Expr::Symbol(s))
                    }
                    None => Err(ParseError::syntax(
                        column,
                        format!("unknown symbol '{name}' (expected a, ad, b, bd, xa, pa, xb, pb or i)"),
                    )),
                }
            }
            Tok::Number { value, .. } => {
                self.bump();
                Ok(Expr::Number(value))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(Expr::Paren(Box::new(e)))
            }
            _ => Err(self.unexpected("an operator symbol, 'i', a number or '('")),
        }
    }
}

/// Parses a full query (expectation arithmetic with an optional comparison).
pub fn parse(text: &str) -> Result<Query, ParseError> {
    let mut p = Parser::new(text)?;
    let q = p.query()?;
    p.finish()?;
    Ok(q)
}

/// Parses a bare operator expression such as `(ad*bd + a*b)/2`.
pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser::new(text)?;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}
