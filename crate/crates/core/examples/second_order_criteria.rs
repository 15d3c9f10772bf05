//! Duan and Mancini criteria on a Gaussian and a non-Gaussian state.
//!
//! The squeezed vacuum is caught by both; the single-photon Bell state is not,
//! even though it is entangled.

use cvwitness::criteria::{duan_mancini_relation, duan_witness, mancini_witness};
use cvwitness::states::{bell_xp_state, density_from_pure, two_mode_squeezed_vacuum, BellXPParams, TmsvParams};
use cvwitness::{Cutoff, DensityOperator};
use std::f64::consts::{FRAC_PI_4, PI};
use std::fmt::Write;

fn describe(out: &mut String, label: &str, rho: &DensityOperator) {
    let rel = duan_mancini_relation(rho).unwrap();
    writeln!(out, "{label}: M={:.6} M_minus={:.6} M_x={:.6}", rel.m, rel.m_minus, rel.m_x).unwrap();
    for m in [0.5, 1.0, 2.0] {
        let r = duan_witness(rho, m).unwrap();
        writeln!(out, "  Duan m={m}: M={:.6} bound={:.6} detected={}", r.get("M"), r.get("bound"), r.entangled_detected).unwrap();
    }
    let r = mancini_witness(rho).unwrap();
    writeln!(out, "  Mancini: M_x={:.6} detected={}", r.get("M_x"), r.entangled_detected).unwrap();
}

pub fn run_example() -> String {
    let mut out = String::new();
    let p = TmsvParams::new(0.5, PI).unwrap();
    let (psi, rep) = two_mode_squeezed_vacuum(&p, Cutoff::new(12, 12).unwrap(), 1e-8).unwrap();
    writeln!(out, "squeezed vacuum r=0.5 kept_weight={:.10}", rep.kept_weight).unwrap();
    describe(&mut out, "tmsv", &density_from_pure(&psi));

    let bell = BellXPParams::from_angles(FRAC_PI_4, 0.0);
    describe(&mut out, "bell", &density_from_pure(&bell_xp_state(&bell, Cutoff::new(3, 3).unwrap())));
    out
}

fn main() {
    print!("{}", run_example());
}
