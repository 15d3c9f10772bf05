//! Writing moment inequalities as text and evaluating them on a state.

use cvwitness::dsl::{self, lower_str};
use cvwitness::states::{density_from_pure, photon_subtracted_tmsv, TmsvParams};
use cvwitness::Cutoff;
use std::fmt::Write;

pub fn run_example() -> String {
    let mut out = String::new();
    let p = TmsvParams::new(0.4, std::f64::consts::PI).unwrap();
    let (psi, _) = photon_subtracted_tmsv(&p, Cutoff::new(16, 16).unwrap(), 1e-8).unwrap();
    let rho = density_from_pure(&psi);

    for text in ["(ad*bd - a*b)/(2*i)", "xa^2 + pa^2", "a*ad"] {
        writeln!(out, "{text}  =>  {}", lower_str(text).unwrap()).unwrap();
    }
    for text in [
        "E[ad*a]",
        "Var[xa + xb] + Var[pa - pb] >= 2",
        "Var[(ad*bd+a*b)/2] * Var[(ad*bd-a*b)/(2*i)] >= abs2(E[(ad*a+bd*b+1)/2])/4",
        "abs2(E[a*b]) < E[ad*a*bd*b]",
    ] {
        let value = dsl::evaluate_str(text, &rho).unwrap();
        writeln!(out, "{text}  =>  {}", serde_json::to_string(&value).unwrap()).unwrap();
    }
    let bad = "E[ad*a*b*bd";
    let err = dsl::parse(bad).unwrap_err();
    writeln!(out, "{err}\n{}", err.caret(bad)).unwrap();
    out
}

fn main() {
    print!("{}", run_example());
}
