//! A small sweep over the Bell family, summarised per criterion.
//!
//! The same table is produced by `cvwitness sweep config.json out.csv`.

use cvwitness::cli::{sweep_csv, SweepSpec};
use cvwitness::Cutoff;
use std::fmt::Write;

pub fn run_example() -> String {
    let spec = SweepSpec { n_theta: 9, n_phi: 8, m_values: vec![0.5, 1.0, 2.0] };
    let csv = sweep_csv(&spec, Cutoff::new(3, 3).unwrap()).unwrap();
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    let mut out = String::new();
    writeln!(out, "{} grid points", rows.len()).unwrap();
    for name in ["mancini_detected", "duan_detected", "su2_detected", "su11_detected", "ppt_detected"] {
        let col = header.iter().position(|h| *h == name).unwrap();
        let hits = rows.iter().filter(|r| r[col] == "true").count();
        writeln!(out, "{name}: {hits}").unwrap();
    }
    let mx = header.iter().position(|h| *h == "M_x").unwrap();
    let min = rows.iter().map(|r| r[mx].parse::<f64>().unwrap()).fold(f64::INFINITY, f64::min);
    writeln!(out, "min M_x: {min:.12}").unwrap();
    out
}

fn main() {
    print!("{}", run_example());
}
