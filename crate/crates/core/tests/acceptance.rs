//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::f64::consts::PI;

use common::{dense, random_bell, random_density, random_poly, rng, trace_product};
use cvwitness::cli::{self, Overrides, SweepSpec};
use cvwitness::criteria::{
    builtin_operators, duan_mancini_relation, duan_query, duan_witness, mancini_witness,
    ppt_spectrum, su11_pt_witness, su2_pt_witness, Su11Mode, WitnessSuite, MANCINI_QUERY,
    SU11_PT_QUADRATURE_QUERY, SU11_PT_QUERY, SU2_PT_QUERY,
};
use cvwitness::dsl::{evaluate_str, lower_str, QueryValue};
use cvwitness::fock::{embed, partial_transpose_b, position_matrix, momentum_matrix, CMatrix};
use cvwitness::poly::expectation_poly;
use cvwitness::states::{
    bell_xp_state, density_from_pure, product_coherent, two_mode_squeezed_vacuum, BellXPParams,
    TmsvParams,
};
use cvwitness::{Complex64, Cutoff, DensityOperator, OperatorMatrix, PureState};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn bell_rho(p: &BellXPParams) -> DensityOperator {
    density_from_pure(&bell_xp_state(p, Cutoff::new(3, 3).unwrap()))
}

struct Row {
    alpha: Complex64,
    beta: Complex64,
    m_x: f64,
    su2_detected: bool,
    su11_lhs: f64,
    su11_rhs: f64,
    su11_detected: bool,
}

/// Runs the CLI sweep and parses the CSV back.
fn sweep(n_theta: usize, n_phi: usize) -> Result<Vec<Row>, String> {
    let spec = SweepSpec { n_theta, n_phi, m_values: vec![1.0] };
    let csv = cli::sweep_csv(&spec, Cutoff::new(3, 3).unwrap()).map_err(|e| e.render())?;
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let col = |name: &str| header.iter().position(|h| *h == name).unwrap();
    let rows = lines
        .map(|line| {
            let f: Vec<&str> = line.split(',').collect();
            let num = |name: &str| f[col(name)].parse::<f64>().unwrap();
            let flag = |name: &str| f[col(name)] == "true";
            Row {
                alpha: Complex64::new(num("alpha_re"), num("alpha_im")),
                beta: Complex64::new(num("beta_re"), num("beta_im")),
                m_x: num("M_x"),
                su2_detected: flag("su2_detected"),
                su11_lhs: num("su11_lhs"),
                su11_rhs: num("su11_rhs"),
                su11_detected: flag("su11_detected"),
            }
        })
        .collect();
    Ok(rows)
}

fn criterion_1() -> Outcome {
    let mut r = rng(101);
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let p = random_bell(&mut r);
        let (a, b) = (p.alpha().norm(), p.beta().norm());
        let mut expected = vec![a * a, b * b, a * b, -a * b];
        expected.resize(9, 0.0);
        expected.sort_by(f64::total_cmp);
        let got = ppt_spectrum(&bell_rho(&p)).map_err(|e| e.to_string())?;
        for (x, y) in got.iter().zip(&expected) {
            worst = worst.max((x - y).abs());
        }
    }
    ensure(worst < 1e-9, || format!("max deviation {worst:e}"))?;
    Ok(format!("50 states, max deviation {worst:.1e}"))
}

fn criterion_2() -> Outcome {
    let mut r = rng(102);
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let p = random_bell(&mut r);
        let rho = bell_rho(&p);
        let (a2, b2) = (p.alpha().norm_sqr(), p.beta().norm_sqr());
        for m in [0.5f64, 1.0, 2.0] {
            let m2 = m * m;
            let oracle = m2 + 1.0 / m2 + 2.0 * (a2 * m2 + b2 / m2);
            let got = duan_witness(&rho, m).map_err(|e| e.to_string())?.get("M");
            worst = worst.max((got - oracle).abs());
            ensure(got >= m2 + 1.0 / m2 - 1e-12, || format!("M = {got} below bound at m = {m}"))?;
        }
    }
    ensure(worst < 1e-9, || format!("max deviation {worst:e}"))?;
    Ok(format!("60 evaluations, max deviation {worst:.1e}, never below the bound"))
}

fn criterion_3() -> Outcome {
    let rows = sweep(41, 16)?;
    let mut worst = 0.0f64;
    let mut best: Option<&Row> = None;
    for row in &rows {
        let re = (row.alpha * row.beta.conj()).re;
        worst = worst.max((row.m_x - (4.0 - 4.0 * re * re)).abs());
        if best.is_none_or(|b| row.m_x < b.m_x) {
            best = Some(row);
        }
    }
    let best = best.unwrap();
    let z = best.alpha * best.beta.conj();
    ensure(worst < 1e-9, || format!("closed form deviation {worst:e}"))?;
    ensure(best.m_x >= 3.0 - 1e-6, || format!("minimum M_x = {}", best.m_x))?;
    ensure(z.im.abs() < 1e-9 && (z.norm() - 0.5).abs() < 1e-9, || {
        format!("minimum at alpha beta* = {z}, expected real with modulus 1/2")
    })?;
    Ok(format!(
        "{} grid points, deviation {worst:.1e}, min M_x = {:.12} at alpha beta* = {:.3}",
        rows.len(),
        best.m_x,
        z.re
    ))
}

fn criterion_4() -> Outcome {
    let rows = sweep(41, 16)?;
    let (mut interior, mut boundary) = (0, 0);
    let mut worst = 0.0f64;
    for row in &rows {
        let z = row.alpha.conj() * row.beta;
        let reduced = z.norm_sqr() - 2.0 * z.re * z.re * z.im * z.im;
        let gap = row.su11_lhs - row.su11_rhs;
        worst = worst.max((gap + 8.0 * reduced).abs());
        if (row.alpha * row.beta).norm() >= 1e-3 {
            interior += 1;
            ensure(row.su11_detected, || format!("no detection at alpha = {}, beta = {}", row.alpha, row.beta))?;
            ensure(reduced > 0.0, || format!("reduced form {reduced} not positive"))?;
        }
        if (row.alpha * row.beta).norm() < 1e-12 {
            boundary += 1;
            ensure(!row.su11_detected, || "detection at alpha beta = 0".into())?;
            ensure(reduced.abs() < 1e-9 && gap.abs() < 1e-9, || format!("boundary gap {gap}"))?;
        }
    }
    ensure(worst < 1e-9, || format!("lhs - rhs differs from -8 x reduced form by {worst:e}"))?;
    ensure(boundary > 0 && interior > 0, || "grid misses a region".into())?;
    Ok(format!("{interior} interior points detected, {boundary} boundary points silent, sign deviation {worst:.1e}"))
}

fn criterion_5() -> Outcome {
    let rows = sweep(41, 16)?;
    let fired = rows.iter().filter(|r| r.su2_detected).count();
    ensure(fired == 0, || format!("SU(2) fired at {fired} grid points"))?;
    let mut r = rng(105);
    for _ in 0..50 {
        let rep = su2_pt_witness(&bell_rho(&random_bell(&mut r))).map_err(|e| e.to_string())?;
        ensure(!rep.entangled_detected, || format!("fired: {:?}", rep.quantities))?;
    }
    Ok(format!("silent on {} grid points and 50 random phases", rows.len()))
}

fn criterion_6() -> Outcome {
    let mut r = rng(106);
    let mut worst = 0.0f64;
    for k in 0..100 {
        let rho = random_density(&mut r, Cutoff::new(4, 4).unwrap(), 1 + k % 4);
        let rel = duan_mancini_relation(&rho).map_err(|e| e.to_string())?;
        worst = worst.max((rel.m * rel.m - rel.m_minus * rel.m_minus - 4.0 * rel.m_x).abs());
    }
    ensure(worst < 1e-10, || format!("max residual {worst:e}"))?;
    Ok(format!("100 states, max residual {worst:.1e}"))
}

fn criterion_7() -> Outcome {
    let mut r = rng(107);
    let mut worst = 0.0f64;
    for k in 0..100 {
        let rho = random_density(&mut r, Cutoff::new(4, 4).unwrap(), 1 + k % 4);
        let l = su11_pt_witness(&rho, Su11Mode::Ladder).map_err(|e| e.to_string())?;
        let q = su11_pt_witness(&rho, Su11Mode::Quadrature).map_err(|e| e.to_string())?;
        for key in ["lhs", "rhs"] {
            worst = worst.max((l.get(key) - q.get(key)).abs());
        }
        ensure(l.entangled_detected == q.entangled_detected, || "verdicts differ".into())?;
    }
    ensure(worst < 1e-10, || format!("max difference {worst:e}"))?;
    Ok(format!("100 states, max difference {worst:.1e}"))
}

fn criterion_8() -> Outcome {
    let small = Cutoff::new(4, 4).unwrap();
    let mut states = vec![
        ("vacuum", density_from_pure(&PureState::basis(small, 0, 0).unwrap())),
        ("|1,0>", density_from_pure(&PureState::basis(small, 1, 0).unwrap())),
    ];
    for (a, b) in [
        (Complex64::new(0.5, 0.0), Complex64::new(0.0, 0.0)),
        (Complex64::new(0.3, -0.4), Complex64::new(-0.2, 0.6)),
        (Complex64::new(1.0, 1.0), Complex64::new(0.7, -0.1)),
    ] {
        let (psi, _) = product_coherent(a, b, Cutoff::new(24, 24).unwrap(), 1e-8).map_err(|e| e.to_string())?;
        states.push(("coherent", density_from_pure(&psi)));
    }
    let mut min_eig = f64::INFINITY;
    for (name, rho) in &states {
        let suite = WitnessSuite::evaluate(rho, &[0.5, 1.0, 2.0]).map_err(|e| e.to_string())?;
        for rep in suite.reports() {
            ensure(!rep.entangled_detected, || format!("{} fired on {name}", rep.name))?;
        }
        min_eig = min_eig.min(suite.ppt.get("min_eigenvalue"));
    }
    ensure(min_eig >= -1e-8, || format!("PPT min eigenvalue {min_eig:e}"))?;
    Ok(format!("{} product states silent, min PPT eigenvalue {min_eig:.1e}", states.len()))
}

fn criterion_9() -> Outcome {
    let cut = Cutoff::new(8, 8).unwrap();
    let mut r = rng(109);
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let rho = random_density(&mut r, cut, 3);
        let f = random_poly(&mut r, 4, 5);
        let fast = expectation_poly(&rho, &f).map_err(|e| e.to_string())?;
        let slow = trace_product(rho.matrix(), &dense(&f, cut));
        worst = worst.max((fast - slow).norm());
    }
    ensure(worst < 1e-10, || format!("max deviation {worst:e}"))?;
    Ok(format!("200 polynomials, max deviation {worst:.1e}"))
}

fn criterion_10() -> Outcome {
    let cut = Cutoff::new(6, 6).unwrap();
    let mut r = rng(110);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let rho = random_density(&mut r, cut, 2);
        let f = random_poly(&mut r, 4, 6);
        let lhs = expectation_poly(&partial_transpose_b(&rho), &f).map_err(|e| e.to_string())?;
        let rhs = expectation_poly(&rho, &f.partial_transpose_b()).map_err(|e| e.to_string())?;
        worst = worst.max((lhs - rhs).norm());
    }
    ensure(worst < 1e-12, || format!("max deviation {worst:e}"))?;
    Ok(format!("100 pairs, max deviation {worst:.1e}"))
}

fn verdict(text: &str, rho: &DensityOperator) -> Result<(f64, f64, bool), String> {
    match evaluate_str(text, rho).map_err(|e| e.to_string())? {
        QueryValue::Verdict { lhs, rhs, holds } => Ok((lhs, rhs, holds)),
        other => Err(format!("expected a verdict, got {other:?}")),
    }
}

fn criterion_11() -> Outcome {
    let mut count = 0;
    for m in [0.5, 1.0, 2.0] {
        for op in builtin_operators(m) {
            let lowered = lower_str(&op.dsl).map_err(|e| e.to_string())?;
            ensure(lowered == op.poly && lowered.to_string() == op.poly.to_string(), || {
                format!("{}: '{}' lowers to {lowered}, expected {}", op.name, op.dsl, op.poly)
            })?;
            count += 1;
        }
    }
    let mut r = rng(111);
    let mut worst = 0.0f64;
    for k in 0..20 {
        let rho = if k % 2 == 0 {
            bell_rho(&random_bell(&mut r))
        } else {
            random_density(&mut r, Cutoff::new(4, 4).unwrap(), 2)
        };
        let err = |e: cvwitness::Error| e.to_string();
        let mut pairs = vec![(MANCINI_QUERY.to_string(), mancini_witness(&rho).map_err(err)?.get("M_x"))];
        for m in [0.5, 1.0, 2.0] {
            pairs.push((duan_query(m), duan_witness(&rho, m).map_err(err)?.get("M")));
        }
        pairs.push((SU2_PT_QUERY.into(), su2_pt_witness(&rho).map_err(err)?.get("lhs")));
        pairs.push((SU11_PT_QUERY.into(), su11_pt_witness(&rho, Su11Mode::Ladder).map_err(err)?.get("lhs")));
        pairs.push((
            SU11_PT_QUADRATURE_QUERY.into(),
            su11_pt_witness(&rho, Su11Mode::Quadrature).map_err(err)?.get("lhs"),
        ));
        for (query, expected) in pairs {
            let (lhs, _, _) = verdict(&query, &rho)?;
            worst = worst.max((lhs - expected).abs());
        }
    }
    ensure(worst < 1e-12, || format!("max evaluation difference {worst:e}"))?;
    Ok(format!("{count} operators lower exactly, query difference {worst:.1e}"))
}

/// Variance of a dense Hermitian operator in a pure state.
fn dense_variance(psi: &cvwitness::fock::CVector, op: &CMatrix) -> f64 {
    let mean = psi.dotc(&(op * psi)).re;
    let second = psi.dotc(&(op * (op * psi))).re;
    second - mean * mean
}

fn criterion_12() -> Outcome {
    let r = 0.5;
    let p = TmsvParams::new(r, PI).map_err(|e| e.to_string())?;
    let (psi, rep) = two_mode_squeezed_vacuum(&p, Cutoff::new(12, 12).unwrap(), 1e-8).map_err(|e| e.to_string())?;
    let rho = density_from_pure(&psi);
    let duan = duan_witness(&rho, 1.0).map_err(|e| e.to_string())?;
    let mancini = mancini_witness(&rho).map_err(|e| e.to_string())?;
    let analytic = 2.0 * (-2.0 * r).exp();

    // independent oracle: dense quadrature matrices on a large cutoff
    let d = 40;
    let (big, _) = two_mode_squeezed_vacuum(&p, Cutoff::new(d, d).unwrap(), 1e-8).map_err(|e| e.to_string())?;
    let eye = CMatrix::identity(d, d);
    let (x, pm) = (position_matrix(d).unwrap(), momentum_matrix(d).unwrap());
    let u = embed(&x, &eye).unwrap().into_matrix() + embed(&eye, &x).unwrap().into_matrix();
    let v = embed(&pm, &eye).unwrap().into_matrix() - embed(&eye, &pm).unwrap().into_matrix();
    let oracle = dense_variance(big.amplitudes(), &u) + dense_variance(big.amplitudes(), &v);

    let m = duan.get("M");
    ensure((oracle - analytic).abs() < 1e-6, || format!("oracle {oracle} vs 2e^(-2r) {analytic}"))?;
    ensure((m - oracle).abs() < 1e-4, || format!("M = {m}, oracle {oracle}"))?;
    ensure(duan.entangled_detected && mancini.entangled_detected, || "second-order criteria silent".into())?;
    Ok(format!(
        "M = {m:.8}, oracle {oracle:.8}, kept weight {:.10}, Duan and Mancini detect",
        rep.kept_weight
    ))
}

fn criterion_13() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let cfg = dir.path().join("sweep.json");
    std::fs::write(&cfg, r#"{"sweep": {"n_theta": 21, "n_phi": 12, "m_values": [0.5, 1.0, 2.0]}}"#)
        .map_err(|e| e.to_string())?;
    let (a, b) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
    for out in [&a, &b] {
        cli::cmd_sweep(&cfg, out, &Overrides::default()).map_err(|e| e.render())?;
    }
    let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    ensure(x == y, || "CSV files differ".into())?;
    Ok(format!("two runs, {} identical bytes", x.len()))
}

fn main() {
    let criteria: [Criterion; 13] = [
        ("PPT spectrum of the Bell-type state", criterion_1),
        ("Duan closed form", criterion_2),
        ("Mancini closed form and minimum", criterion_3),
        ("SU(1,1) detection", criterion_4),
        ("SU(2) non-detection", criterion_5),
        ("M^2 = M_-^2 + 4 M_x", criterion_6),
        ("ladder and quadrature SU(1,1) forms agree", criterion_7),
        ("soundness on product states", criterion_8),
        ("normal-ordered vs dense evaluation", criterion_9),
        ("partial-transpose bridge", criterion_10),
        ("DSL fidelity", criterion_11),
        ("two-mode squeezed vacuum control", criterion_12),
        ("sweep determinism", criterion_13),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
