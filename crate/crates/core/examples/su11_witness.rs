//! The partially transposed SU(1,1) witness on the Bell family, in both forms,
//! next to the SU(2) witness which never fires there.

use cvwitness::criteria::{bell_closed_forms, su11_pt_witness, su2_pt_witness, Su11Mode};
use cvwitness::states::{bell_xp_state, density_from_pure, BellXPParams};
use cvwitness::Cutoff;
use std::fmt::Write;

pub fn run_example() -> String {
    let mut out = String::new();
    let cutoff = Cutoff::new(3, 3).unwrap();
    for (theta, phi) in [(0.0, 0.0), (0.2, 0.0), (0.785, 1.0), (0.785, 2.5), (1.2, 4.0)] {
        let p = BellXPParams::from_angles(theta, phi);
        let rho = density_from_pure(&bell_xp_state(&p, cutoff));
        let ladder = su11_pt_witness(&rho, Su11Mode::Ladder).unwrap();
        let quad = su11_pt_witness(&rho, Su11Mode::Quadrature).unwrap();
        let su2 = su2_pt_witness(&rho).unwrap();
        let reduced = bell_closed_forms(p.alpha(), p.beta(), 1.0).unwrap().su11_reduced;
        writeln!(
            out,
            "theta={theta} phi={phi}: su11 lhs={:.6} rhs={:.6} (quadrature {:.6} {:.6}) reduced={reduced:.6} detected={} | su2 lhs={:.6} rhs={:.6} detected={}",
            ladder.get("lhs"),
            ladder.get("rhs"),
            quad.get("lhs"),
            quad.get("rhs"),
            ladder.entangled_detected,
            su2.get("lhs"),
            su2.get("rhs"),
            su2.entangled_detected
        )
        .unwrap();
    }
    out
}

fn main() {
    print!("{}", run_example());
}
