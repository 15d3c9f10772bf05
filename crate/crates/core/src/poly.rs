//! Normal-ordered polynomials in the two-mode ladder operators and their
//! expectation values.
//!
//! Every polynomial is stored in canonical form: a map from normal-ordered
//! words `a†^m a^n b†^p b^q` to nonzero complex coefficients. Products are
//! normal-ordered eagerly, so structural equality is operator equality.

use std::collections::BTreeMap;
use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fock::{tol, OperatorMatrix};

/// The normal-ordered word `a†^m a^n b†^p b^q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub m: u32,
    pub n: u32,
    pub p: u32,
    pub q: u32,
}

impl Monomial {
    pub const IDENTITY: Monomial = Monomial::new(0, 0, 0, 0);

    pub const fn new(m: u32, n: u32, p: u32, q: u32) -> Self {
        Monomial { m, n, p, q }
    }

    pub fn degree(&self) -> u32 {
        self.m + self.n + self.p + self.q
    }

    pub fn adjoint(&self) -> Self {
        Monomial::new(self.n, self.m, self.q, self.p)
    }

    /// `b†^p b^q` transposes to `b†^q b^p` in the real number basis.
    pub fn partial_transpose_b(&self) -> Self {
        Monomial::new(self.m, self.n, self.q, self.p)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (sym, pow) in [("ad", self.m), ("a", self.n), ("bd", self.p), ("b", self.q)] {
            if pow == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(sym)?;
            if pow > 1 {
                write!(f, "^{pow}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Finite complex combination of normal-ordered monomials.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct OperatorPoly {
    terms: BTreeMap<Monomial, Complex64>,
}

impl OperatorPoly {
    pub fn zero() -> Self {
        OperatorPoly::default()
    }

    pub fn identity() -> Self {
        OperatorPoly::scalar(Complex64::new(1.0, 0.0))
    }

    pub fn scalar(c: Complex64) -> Self {
        OperatorPoly::term(Monomial::IDENTITY, c)
    }

    pub fn term(mono: Monomial, coeff: Complex64) -> Self {
        let mut p = OperatorPoly::zero();
        p.add_term(mono, coeff);
        p
    }

    pub fn monomial(m: u32, n: u32, p: u32, q: u32) -> Self {
        OperatorPoly::term(Monomial::new(m, n, p, q), Complex64::new(1.0, 0.0))
    }

    pub fn a() -> Self {
        OperatorPoly::monomial(0, 1, 0, 0)
    }

    pub fn ad() -> Self {
        OperatorPoly::monomial(1, 0, 0, 0)
    }

    pub fn b() -> Self {
        OperatorPoly::monomial(0, 0, 0, 1)
    }

    pub fn bd() -> Self {
        OperatorPoly::monomial(0, 0, 1, 0)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Complex64)>>(terms: I) -> Self {
        let mut p = OperatorPoly::zero();
        for (mono, c) in terms {
            p.add_term(mono, c);
        }
        p
    }

    fn add_term(&mut self, mono: Monomial, coeff: Complex64) {
        let entry = self.terms.entry(mono).or_insert(Complex64::new(0.0, 0.0));
        *entry += coeff;
        if *entry == Complex64::new(0.0, 0.0) {
            self.terms.remove(&mono);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Complex64)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, mono: &Monomial) -> Complex64 {
        self.terms.get(mono).copied().unwrap_or_default()
    }

    /// `Some(c)` when the polynomial is `c` times the identity (including zero).
    pub fn as_scalar(&self) -> Option<Complex64> {
        match self.terms.len() {
            0 => Some(Complex64::new(0.0, 0.0)),
            1 => self.terms.get(&Monomial::IDENTITY).copied(),
            _ => None,
        }
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn scale(&self, c: Complex64) -> Self {
        OperatorPoly::from_terms(self.terms.iter().map(|(m, v)| (*m, v * c)))
    }

    /// Normal-ordered product `self * other`.
    pub fn multiply(&self, other: &OperatorPoly) -> OperatorPoly {
        let mut out = OperatorPoly::zero();
        for (l, cl) in &self.terms {
            for (r, cr) in &other.terms {
                let mode_a = normal_order_product(l.m, l.n, r.m, r.n);
                let mode_b = normal_order_product(l.p, l.q, r.p, r.q);
                for &(m, n, wa) in &mode_a {
                    for &(p, q, wb) in &mode_b {
                        out.add_term(Monomial::new(m, n, p, q), cl * cr * (wa * wb));
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> OperatorPoly {
        let mut out = OperatorPoly::identity();
        for _ in 0..k {
            out = out.multiply(self);
        }
        out
    }

    /// Hermitian adjoint. Reversing a normal-ordered word leaves it normal-ordered.
    pub fn adjoint(&self) -> OperatorPoly {
        OperatorPoly::from_terms(self.terms.iter().map(|(m, c)| (m.adjoint(), c.conj())))
    }

    /// Partial transpose on mode `b`, `b ↔ b†` with the word order reversed.
    pub fn partial_transpose_b(&self) -> OperatorPoly {
        OperatorPoly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (m.partial_transpose_b(), *c)),
        )
    }

    /// Largest coefficient difference against `other`.
    pub fn distance(&self, other: &OperatorPoly) -> f64 {
        let keys: std::collections::BTreeSet<_> =
            self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter()
            .map(|k| (self.coefficient(k) - other.coefficient(k)).norm())
            .fold(0.0, f64::max)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.distance(&self.adjoint()) <= tol
    }
}

/// `(a†^m1 a^n1)(a†^m2 a^n2) = sum_k C(n1,k) C(m2,k) k! a†^(m1+m2-k) a^(n1+n2-k)`,
/// the fixed point of rewriting `a a† -> a† a + 1` until no annihilator precedes a creator.
fn normal_order_product(m1: u32, n1: u32, m2: u32, n2: u32) -> Vec<(u32, u32, f64)> {
    (0..=n1.min(m2))
        .map(|k| {
            let w = binomial(n1, k) * binomial(m2, k) * factorial(k);
            (m1 + m2 - k, n1 + n2 - k, w)
        })
        .collect()
}

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

fn factorial(k: u32) -> f64 {
    (1..=k).fold(1.0, |acc, i| acc * i as f64)
}

fn format_coefficient(c: &Complex64) -> String {
    match (c.re, c.im) {
        (re, 0.0) => format!("{re}"),
        (0.0, im) => format!("{im}*i"),
        (re, im) if im < 0.0 => format!("{re}-{}*i", -im),
        (re, im) => format!("{re}+{im}*i"),
    }
}

/// Canonical text form; it is valid operator-DSL input.
impl fmt::Display for OperatorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (mono, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            if *mono == Monomial::IDENTITY {
                write!(f, "({})", format_coefficient(c))?;
            } else {
                write!(f, "({})*{mono}", format_coefficient(c))?;
            }
        }
        Ok(())
    }
}

impl Add for &OperatorPoly {
    type Output = OperatorPoly;
    fn add(self, rhs: &OperatorPoly) -> OperatorPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, *c);
        }
        out
    }
}

impl Add for OperatorPoly {
    type Output = OperatorPoly;
    fn add(self, rhs: OperatorPoly) -> OperatorPoly {
        &self + &rhs
    }
}

impl Sub for &OperatorPoly {
    type Output = OperatorPoly;
    fn sub(self, rhs: &OperatorPoly) -> OperatorPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Sub for OperatorPoly {
    type Output = OperatorPoly;
    fn sub(self, rhs: OperatorPoly) -> OperatorPoly {
        &self - &rhs
    }
}

impl Neg for &OperatorPoly {
    type Output = OperatorPoly;
    fn neg(self) -> OperatorPoly {
        OperatorPoly::from_terms(self.terms.iter().map(|(m, c)| (*m, -c)))
    }
}

impl Neg for OperatorPoly {
    type Output = OperatorPoly;
    fn neg(self) -> OperatorPoly {
        -&self
    }
}

impl Mul for &OperatorPoly {
    type Output = OperatorPoly;
    fn mul(self, rhs: &OperatorPoly) -> OperatorPoly {
        self.multiply(rhs)
    }
}

impl Mul for OperatorPoly {
    type Output = OperatorPoly;
    fn mul(self, rhs: OperatorPoly) -> OperatorPoly {
        self.multiply(&rhs)
    }
}

impl Mul<Complex64> for OperatorPoly {
    type Output = OperatorPoly;
    fn mul(self, rhs: Complex64) -> OperatorPoly {
        self.scale(rhs)
    }
}

impl Mul<f64> for OperatorPoly {
    type Output = OperatorPoly;
    fn mul(self, rhs: f64) -> OperatorPoly {
        self.scale(Complex64::from(rhs))
    }
}

/// Single-mode quadratures with `x = (a + a†)/√2`, `p = (a - a†)/(i√2)`, so `[x, p] = i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quadrature {
    Xa,
    Pa,
    Xb,
    Pb,
}

impl Quadrature {
    pub fn poly(self) -> OperatorPoly {
        let (lower, raise) = match self {
            Quadrature::Xa | Quadrature::Pa => (OperatorPoly::a(), OperatorPoly::ad()),
            Quadrature::Xb | Quadrature::Pb => (OperatorPoly::b(), OperatorPoly::bd()),
        };
        match self {
            Quadrature::Xa | Quadrature::Xb => (lower + raise) * FRAC_1_SQRT_2,
            // 1/(i√2) = -i/√2
            Quadrature::Pa | Quadrature::Pb => {
                (lower - raise) * Complex64::new(0.0, -FRAC_1_SQRT_2)
            }
        }
    }
}

/// Real linear combination of quadratures, e.g. `u = |m| x_a + x_b / m`.
pub fn quadrature_poly(combination: &[(f64, Quadrature)]) -> OperatorPoly {
    combination
        .iter()
        .fold(OperatorPoly::zero(), |acc, (c, q)| acc + q.poly() * *c)
}

/// `<j| a†^m a^n |k>`: returns `(j, value)` when nonzero inside `d` levels.
fn ladder_element(m: u32, n: u32, k: usize, d: usize) -> Option<(usize, f64)> {
    let (m, n) = (m as usize, n as usize);
    if k < n {
        return None;
    }
    let low = k - n;
    let j = low + m;
    if j >= d {
        return None;
    }
    // sqrt(k!/low!) * sqrt(j!/low!)
    let down: f64 = (low + 1..=k).map(|x| x as f64).product();
    let up: f64 = (low + 1..=j).map(|x| x as f64).product();
    Some((j, (down * up).sqrt()))
}

fn check_guard<R: OperatorMatrix>(rho: &R, mono: &Monomial) -> Result<()> {
    let cut = rho.cutoff();
    if (mono.m + mono.n) as usize >= cut.d_a() || (mono.p + mono.q) as usize >= cut.d_b() {
        return Err(Error::TruncationRisk {
            monomial: mono.to_string(),
            d_a: cut.d_a(),
            d_b: cut.d_b(),
        });
    }
    Ok(())
}

/// `trace(rho a†^m a^n b†^p b^q)` from the closed-form matrix elements.
pub fn moment<R: OperatorMatrix>(rho: &R, mono: &Monomial) -> Result<Complex64> {
    check_guard(rho, mono)?;
    let cut = rho.cutoff();
    let r = rho.matrix();
    let mut acc = Complex64::new(0.0, 0.0);
    for ka in 0..cut.d_a() {
        let Some((ja, va)) = ladder_element(mono.m, mono.n, ka, cut.d_a()) else {
            continue;
        };
        for kb in 0..cut.d_b() {
            let Some((jb, vb)) = ladder_element(mono.p, mono.q, kb, cut.d_b()) else {
                continue;
            };
            acc += r[(cut.index(ka, kb), cut.index(ja, jb))] * (va * vb);
        }
    }
    Ok(acc)
}

pub fn expectation_poly<R: OperatorMatrix>(rho: &R, f: &OperatorPoly) -> Result<Complex64> {
    for mono in f.terms.keys() {
        check_guard(rho, mono)?;
    }
    f.terms().try_fold(Complex64::new(0.0, 0.0), |acc, (mono, c)| {
        Ok(acc + c * moment(rho, mono)?)
    })
}

/// `<f²> - <f>²` for Hermitian `f`.
///
/// Round-off negatives within `tol::PSD` are clamped to zero. On a partial
/// transpose (not a state) the result can be genuinely negative and is
/// returned as is.
pub fn variance<R: OperatorMatrix>(rho: &R, f: &OperatorPoly) -> Result<f64> {
    if !f.is_hermitian(1e-12) {
        return Err(Error::NonHermitianOperator(f.to_string()));
    }
    let mean = expectation_poly(rho, f)?;
    let second = expectation_poly(rho, &f.multiply(f))?;
    let var = (second - mean * mean).re;
    if var < 0.0 && var > -tol::PSD {
        Ok(0.0)
    } else {
        Ok(var)
    }
}
