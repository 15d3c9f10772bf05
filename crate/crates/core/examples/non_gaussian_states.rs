//! Photon-subtracted squeezed vacuum: every witness, with truncation bookkeeping.

use cvwitness::criteria::WitnessSuite;
use cvwitness::states::{density_from_pure, photon_subtracted_tmsv, two_mode_squeezed_vacuum, TmsvParams};
use cvwitness::Cutoff;
use std::fmt::Write;

pub fn run_example() -> String {
    let mut out = String::new();
    let cutoff = Cutoff::new(16, 16).unwrap();
    for r in [0.2, 0.5] {
        let p = TmsvParams::new(r, std::f64::consts::PI).unwrap();
        let (g, g_rep) = two_mode_squeezed_vacuum(&p, cutoff, 1e-8).unwrap();
        let (s, s_rep) = photon_subtracted_tmsv(&p, cutoff, 1e-8).unwrap();
        for (label, psi, kept) in [("tmsv", g, g_rep.kept_weight), ("subtracted", s, s_rep.kept_weight)] {
            let suite = WitnessSuite::evaluate(&density_from_pure(&psi), &[1.0]).unwrap();
            let fired: Vec<String> = suite.reports().filter(|r| r.entangled_detected).map(|r| r.name.to_string()).collect();
            writeln!(
                out,
                "r={r} {label}: kept={kept:.10} negativity={:.6} detected_by=[{}]",
                suite.ppt.get("negativity"),
                fired.join(", ")
            )
            .unwrap();
        }
    }
    out
}

fn main() {
    print!("{}", run_example());
}
