//! Operator algebra on normal-ordered polynomials.

use cvwitness::poly::{moment, quadrature_poly};
use cvwitness::states::{density_from_pure, product_coherent};
use cvwitness::{Complex64, Cutoff, Monomial, OperatorPoly, Quadrature};
use std::fmt::Write;

pub fn run_example() -> String {
    let mut out = String::new();
    let a = OperatorPoly::a();
    let ad = OperatorPoly::ad();
    writeln!(out, "a a† = {}", &a * &ad).unwrap();
    writeln!(out, "a² a†² = {}", a.pow(2).multiply(&ad.pow(2))).unwrap();
    let x = Quadrature::Xa.poly();
    let p = Quadrature::Pa.poly();
    writeln!(out, "[x, p] = {}", &x * &p - &p * &x).unwrap();
    let u = quadrature_poly(&[(1.0, Quadrature::Xa), (1.0, Quadrature::Xb)]);
    writeln!(out, "(x_a + x_b)² = {}", u.pow(2)).unwrap();
    let kx = (OperatorPoly::monomial(1, 0, 1, 0) + OperatorPoly::monomial(0, 1, 0, 1)).scale(Complex64::from(0.5));
    writeln!(out, "K_x^PT = {}", kx.partial_transpose_b()).unwrap();

    let (psi, _) = product_coherent(Complex64::new(0.6, 0.2), Complex64::new(-0.3, 0.0), Cutoff::new(20, 20).unwrap(), 1e-8).unwrap();
    let rho = density_from_pure(&psi);
    let m = moment(&rho, &Monomial::new(1, 1, 0, 1)).unwrap();
    writeln!(out, "coherent <a†a b> = {:.6} (expect |α|² β = {:.6})", m, Complex64::new(0.6, 0.2).norm_sqr() * -0.3).unwrap();
    out
}

fn main() {
    print!("{}", run_example());
}
