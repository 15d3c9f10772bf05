//! Partial-transpose spectrum of `alpha|1,0> + beta|0,1>` and its negativity.
//!
//! Run with `cargo run --example bell_state_ppt`.

use cvwitness::criteria::{bell_closed_forms, ppt_spectrum, ppt_witness};
use cvwitness::states::{bell_xp_state, density_from_pure, BellXPParams};
use cvwitness::Cutoff;
use std::fmt::Write;

pub fn run_example() -> String {
    let mut out = String::new();
    let cutoff = Cutoff::new(3, 3).unwrap();
    for theta in [0.0, 0.3, std::f64::consts::FRAC_PI_4] {
        let p = BellXPParams::from_angles(theta, 0.7);
        let rho = density_from_pure(&bell_xp_state(&p, cutoff));
        let spectrum = ppt_spectrum(&rho).unwrap();
        let nonzero: Vec<String> = spectrum
            .iter()
            .filter(|e| e.abs() > 1e-12)
            .map(|e| format!("{e:+.6}"))
            .collect();
        let report = ppt_witness(&rho).unwrap();
        let closed = bell_closed_forms(p.alpha(), p.beta(), 1.0).unwrap();
        writeln!(
            out,
            "theta={theta:.4} spectrum=[{}] closed=[{}] negativity={:.6} entangled={}",
            nonzero.join(", "),
            closed.ppt_spectrum.iter().map(|e| format!("{e:+.6}")).collect::<Vec<_>>().join(", "),
            report.get("negativity"),
            report.entangled_detected
        )
        .unwrap();
    }
    out
}

fn main() {
    print!("{}", run_example());
}
