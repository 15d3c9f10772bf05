#![allow(dead_code)]

use std::f64::consts::PI;

use cvwitness::fock::{lowering_matrix, CMatrix};
use cvwitness::states::BellXPParams;
use cvwitness::{Complex64, Cutoff, DensityOperator, JointOperator, Monomial, OperatorPoly};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_complex(rng: &mut StdRng) -> Complex64 {
    Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

pub fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize) -> CMatrix {
    CMatrix::from_fn(rows, cols, |_, _| random_complex(rng))
}

pub fn random_hermitian(rng: &mut StdRng, cutoff: Cutoff) -> JointOperator {
    let g = random_matrix(rng, cutoff.dim(), cutoff.dim());
    let h = (&g + g.adjoint()).scale(0.5);
    JointOperator::new(cutoff, h).unwrap()
}

/// `G G† / tr` with `G` of the given column rank.
pub fn random_density(rng: &mut StdRng, cutoff: Cutoff, rank: usize) -> DensityOperator {
    let g = random_matrix(rng, cutoff.dim(), rank);
    let mut m = &g * g.adjoint();
    let tr = m.trace();
    m /= tr;
    let m = (&m + m.adjoint()).scale(0.5);
    DensityOperator::new(cutoff, m).unwrap()
}

/// Random polynomial with up to `terms` monomials of total degree at most `max_degree`.
pub fn random_poly(rng: &mut StdRng, max_degree: u32, terms: usize) -> OperatorPoly {
    let mut f = OperatorPoly::zero();
    for _ in 0..terms {
        let mut e = [0u32; 4];
        let degree = rng.random_range(0..=max_degree);
        for _ in 0..degree {
            e[rng.random_range(0..4)] += 1;
        }
        f = f + OperatorPoly::term(Monomial::new(e[0], e[1], e[2], e[3]), random_complex(rng));
    }
    f
}

/// Random point of the Bell-type family, including a global phase on beta.
pub fn random_bell(rng: &mut StdRng) -> BellXPParams {
    let theta = rng.random_range(0.0..PI / 2.0);
    let phi_a = rng.random_range(0.0..2.0 * PI);
    let phi_b = rng.random_range(0.0..2.0 * PI);
    BellXPParams::new(
        Complex64::from_polar(theta.cos(), phi_a),
        Complex64::from_polar(theta.sin(), phi_b),
    )
    .unwrap()
}

fn power(m: &CMatrix, k: u32) -> CMatrix {
    let mut out = CMatrix::identity(m.nrows(), m.ncols());
    for _ in 0..k {
        out = &out * m;
    }
    out
}

/// Dense matrix of a normal-ordered polynomial built from truncated ladder matrices.
pub fn dense(f: &OperatorPoly, cutoff: Cutoff) -> CMatrix {
    let a = lowering_matrix(cutoff.d_a()).unwrap();
    let b = lowering_matrix(cutoff.d_b()).unwrap();
    let (ad, bd) = (a.adjoint(), b.adjoint());
    let mut out = CMatrix::zeros(cutoff.dim(), cutoff.dim());
    for (mono, c) in f.terms() {
        let op_a = power(&ad, mono.m) * power(&a, mono.n);
        let op_b = power(&bd, mono.p) * power(&b, mono.q);
        out += op_a.kronecker(&op_b) * *c;
    }
    out
}

pub fn trace_product(x: &CMatrix, y: &CMatrix) -> Complex64 {
    (x * y).trace()
}
