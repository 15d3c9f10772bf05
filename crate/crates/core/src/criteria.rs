//! Separability witnesses and their verdicts.
//!
//! Second-order criteria (Mancini product, Duan sum), higher-order witnesses
//! obtained by partially transposing the SU(2) and SU(1,1) uncertainty
//! relations, and the partial-transpose eigenvalue test.
//!
//! The bracketed factors of the two higher-order witnesses are evaluated
//! literally, term by term. Each bracket equals four times the variance of
//! `S_x`/`S_y` (respectively `K_x`/`K_y`) taken on the partial transpose, so
//! `lhs >= rhs` is `16 Var Var >= 4 <S_z>^2` (respectively `<K_z>^2`), the
//! squared uncertainty relation on a state that is positive for every
//! separable input.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fock::{hermitian_eigenvalues, partial_transpose_b, tol, DensityOperator};
use crate::poly::{expectation_poly, quadrature_poly, variance, OperatorPoly, Quadrature};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Su11Mode {
    Ladder,
    Quadrature,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WitnessName {
    Mancini,
    Duan(f64),
    Su2Pt,
    Su11Pt(Su11Mode),
    Ppt,
}

impl fmt::Display for WitnessName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessName::Mancini => f.write_str("Mancini"),
            WitnessName::Duan(m) => write!(f, "Duan(m={m})"),
            WitnessName::Su2Pt => f.write_str("SU2PT"),
            WitnessName::Su11Pt(Su11Mode::Ladder) => f.write_str("SU11PT(ladder)"),
            WitnessName::Su11Pt(Su11Mode::Quadrature) => f.write_str("SU11PT(quadrature)"),
            WitnessName::Ppt => f.write_str("PPT"),
        }
    }
}

impl Serialize for WitnessName {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriterionReport {
    pub name: WitnessName,
    pub quantities: BTreeMap<String, f64>,
    pub separable_bound_holds: bool,
    pub entangled_detected: bool,
    pub conventions: String,
}

impl CriterionReport {
    fn inequality(
        name: WitnessName,
        quantities: Vec<(&str, f64)>,
        lhs: f64,
        rhs: f64,
        conventions: &str,
    ) -> Self {
        let violated = lhs < rhs - tol::margin(lhs, rhs);
        let holds = !violated;
        CriterionReport {
            name,
            quantities: quantities.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            separable_bound_holds: holds,
            entangled_detected: !holds,
            conventions: conventions.to_string(),
        }
    }

    /// Named quantity; panics if the witness does not report it.
    pub fn get(&self, key: &str) -> f64 {
        match self.quantities.get(key) {
            Some(v) => *v,
            None => panic!("{} reports no quantity '{key}'", self.name),
        }
    }
}

fn c(re: f64) -> Complex64 {
    Complex64::from(re)
}

const HALF_OVER_I: Complex64 = Complex64::new(0.0, -0.5);

pub fn s_x() -> OperatorPoly {
    (OperatorPoly::ad() * OperatorPoly::b() + OperatorPoly::a() * OperatorPoly::bd()).scale(c(0.5))
}

pub fn s_y() -> OperatorPoly {
    (OperatorPoly::ad() * OperatorPoly::b() - OperatorPoly::a() * OperatorPoly::bd()).scale(HALF_OVER_I)
}

pub fn s_z() -> OperatorPoly {
    (OperatorPoly::ad() * OperatorPoly::a() - OperatorPoly::bd() * OperatorPoly::b()).scale(c(0.5))
}

pub fn k_x() -> OperatorPoly {
    (OperatorPoly::ad() * OperatorPoly::bd() + OperatorPoly::a() * OperatorPoly::b()).scale(c(0.5))
}

pub fn k_y() -> OperatorPoly {
    (OperatorPoly::ad() * OperatorPoly::bd() - OperatorPoly::a() * OperatorPoly::b()).scale(HALF_OVER_I)
}

pub fn k_z() -> OperatorPoly {
    (OperatorPoly::ad() * OperatorPoly::a() + OperatorPoly::bd() * OperatorPoly::b() + OperatorPoly::identity())
        .scale(c(0.5))
}

/// `u = |m| x_a + x_b / m`.
pub fn duan_u(m: f64) -> OperatorPoly {
    quadrature_poly(&[(m.abs(), Quadrature::Xa), (1.0 / m, Quadrature::Xb)])
}

/// `v = |m| p_a - p_b / m`.
pub fn duan_v(m: f64) -> OperatorPoly {
    quadrature_poly(&[(m.abs(), Quadrature::Pa), (-1.0 / m, Quadrature::Pb)])
}

/// `(x_a + x_b)/√2`.
pub fn mancini_u() -> OperatorPoly {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    quadrature_poly(&[(h, Quadrature::Xa), (h, Quadrature::Xb)])
}

/// `(p_a - p_b)/√2`.
pub fn mancini_v() -> OperatorPoly {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    quadrature_poly(&[(h, Quadrature::Pa), (-h, Quadrature::Pb)])
}

fn product(symbols: &[OperatorPoly]) -> OperatorPoly {
    symbols
        .iter()
        .fold(OperatorPoly::identity(), |acc, s| acc * s.clone())
}

fn ladder(word: &str) -> OperatorPoly {
    let factors: Vec<OperatorPoly> = word
        .split('*')
        .map(|s| match s {
            "a" => OperatorPoly::a(),
            "ad" => OperatorPoly::ad(),
            "b" => OperatorPoly::b(),
            "bd" => OperatorPoly::bd(),
            "xa" => Quadrature::Xa.poly(),
            "pa" => Quadrature::Pa.poly(),
            "xb" => Quadrature::Xb.poly(),
            "pb" => Quadrature::Pb.poly(),
            other => unreachable!("unknown factor {other}"),
        })
        .collect();
    product(&factors)
}

/// A named operator used by the witnesses, with its operator-DSL spelling.
#[derive(Debug, Clone)]
pub struct BuiltinOperator {
    pub name: &'static str,
    pub dsl: String,
    pub poly: OperatorPoly,
}

fn builtin(name: &'static str, dsl: &str, poly: OperatorPoly) -> BuiltinOperator {
    BuiltinOperator {
        name,
        dsl: dsl.to_string(),
        poly,
    }
}

/// Every operator the witnesses evaluate, as hard-coded polynomials paired
/// with equivalent DSL text. The Duan pair is given for `m`.
pub fn builtin_operators(m: f64) -> Vec<BuiltinOperator> {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    vec![
        builtin("S_x", "(ad*b + a*bd)/2", s_x()),
        builtin("S_y", "(ad*b - a*bd)/(2*i)", s_y()),
        builtin("S_z", "(ad*a - bd*b)/2", s_z()),
        builtin("K_x", "(ad*bd + a*b)/2", k_x()),
        builtin("K_y", "(ad*bd - a*b)/(2*i)", k_y()),
        builtin("K_z", "(ad*a + bd*b + 1)/2", k_z()),
        builtin("U", &format!("{h}*xa + {h}*xb"), mancini_u()),
        builtin("V", &format!("{h}*pa - {h}*pb"), mancini_v()),
        builtin("u(m=1)", "1*xa + 1*xb", duan_u(1.0)),
        builtin("v(m=1)", "1*pa - 1*pb", duan_v(1.0)),
        builtin("u(m)", &format!("{}*xa + {}*xb", m.abs(), 1.0 / m), duan_u(m)),
        builtin("v(m)", &format!("{}*pa - {}*pb", m.abs(), 1.0 / m), duan_v(m)),
        // SU(2) partial-transpose witness terms
        builtin("a†a b b†", "ad*a*b*bd", ladder("ad*a*b*bd")),
        builtin("a a† b†b", "a*ad*bd*b", ladder("a*ad*bd*b")),
        builtin("a†² b†²", "ad^2*bd^2", OperatorPoly::monomial(2, 0, 2, 0)),
        builtin("a² b²", "a^2*b^2", OperatorPoly::monomial(0, 2, 0, 2)),
        builtin("a†b† + ab", "ad*bd + a*b", ladder("ad*bd") + ladder("a*b")),
        builtin("a†b† - ab", "ad*bd - a*b", ladder("ad*bd") - ladder("a*b")),
        builtin("a†a - b†b", "ad*a - bd*b", ladder("ad*a") - ladder("bd*b")),
        // SU(1,1) partial-transpose witness terms
        builtin("a†a b†b", "ad*a*bd*b", ladder("ad*a*bd*b")),
        builtin("a a† b b†", "a*ad*b*bd", ladder("a*ad*b*bd")),
        builtin("a†² b²", "ad^2*b^2", OperatorPoly::monomial(2, 0, 0, 2)),
        builtin("a² b†²", "a^2*bd^2", OperatorPoly::monomial(0, 2, 2, 0)),
        builtin("a†b + ab†", "ad*b + a*bd", ladder("ad*b") + ladder("a*bd")),
        builtin("a†b - ab†", "ad*b - a*bd", ladder("ad*b") - ladder("a*bd")),
        builtin("a†a + b b†", "ad*a + b*bd", ladder("ad*a") + ladder("b*bd")),
        // quadrature form of the SU(1,1) witness
        builtin("x_a x_b", "xa*xb", ladder("xa*xb")),
        builtin("p_a p_b", "pa*pb", ladder("pa*pb")),
        builtin("x_a p_b", "xa*pb", ladder("xa*pb")),
        builtin("p_a x_b", "pa*xb", ladder("pa*xb")),
        builtin("x_a p_a p_b x_b", "xa*pa*pb*xb", ladder("xa*pa*pb*xb")),
        builtin("p_a x_a x_b p_b", "pa*xa*xb*pb", ladder("pa*xa*xb*pb")),
        builtin("x_a p_a x_b p_b", "xa*pa*xb*pb", ladder("xa*pa*xb*pb")),
        builtin("p_a x_a p_b x_b", "pa*xa*pb*xb", ladder("pa*xa*pb*xb")),
        builtin("x_a²", "xa^2", Quadrature::Xa.poly().pow(2)),
        builtin("p_a²", "pa^2", Quadrature::Pa.poly().pow(2)),
        builtin("x_b²", "xb^2", Quadrature::Xb.poly().pow(2)),
        builtin("p_b²", "pb^2", Quadrature::Pb.poly().pow(2)),
    ]
}

/// Mancini product criterion as a DSL query (unnormalized `u`, `v`, bound 1).
pub const MANCINI_QUERY: &str = "Var[xa + xb]*Var[pa - pb] >= 1";

/// SU(2) partial-transpose witness as a DSL query.
pub const SU2_PT_QUERY: &str = "(E[ad*a*b*bd] + E[a*ad*bd*b] + E[ad^2*bd^2] + E[a^2*b^2] \
- E[ad*bd + a*b]*E[ad*bd + a*b])*(E[ad*a*b*bd] + E[a*ad*bd*b] - E[ad^2*bd^2] - E[a^2*b^2] \
+ E[ad*bd - a*b]*E[ad*bd - a*b]) >= abs2(E[ad*a - bd*b])";

/// SU(1,1) partial-transpose witness, ladder form, as a DSL query.
pub const SU11_PT_QUERY: &str = "(E[ad*a*bd*b] + E[a*ad*b*bd] + E[ad^2*b^2] + E[a^2*bd^2] \
- E[ad*b + a*bd]*E[ad*b + a*bd])*(E[ad*a*bd*b] + E[a*ad*b*bd] - E[ad^2*b^2] - E[a^2*bd^2] \
+ E[ad*b - a*bd]*E[ad*b - a*bd]) >= abs2(E[ad*a + b*bd])";

/// SU(1,1) partial-transpose witness, quadrature form, as a DSL query.
pub const SU11_PT_QUADRATURE_QUERY: &str = "(Var[xa*xb] + Var[pa*pb] + E[xa*pa*pb*xb] + E[pa*xa*xb*pb] \
- 2*E[xa*xb]*E[pa*pb])*(Var[xa*pb] + Var[pa*xb] - E[xa*pa*xb*pb] - E[pa*xa*pb*xb] \
+ 2*E[xa*pb]*E[pa*xb]) >= abs2(E[xa^2] + E[pa^2] + E[xb^2] + E[pb^2])/4";

/// Duan sum criterion for `m` as a DSL query.
pub fn duan_query(m: f64) -> String {
    format!(
        "Var[{a}*xa + {b}*xb] + Var[{a}*pa - {b}*pb] >= {bound}",
        a = m.abs(),
        b = 1.0 / m,
        bound = m * m + 1.0 / (m * m)
    )
}

fn ev(rho: &DensityOperator, f: &OperatorPoly) -> Result<Complex64> {
    expectation_poly(rho, f)
}

fn real(z: Complex64, what: &str) -> Result<f64> {
    if z.im.abs() > tol::HERM * z.norm().max(1.0) {
        return Err(Error::NotReal {
            what: what.to_string(),
            imag: z.im,
        });
    }
    Ok(z.re)
}

/// `Δ((x_a+x_b)/√2) Δ((p_a−p_b)/√2) >= 1/2`, equivalently `M_x >= 1`.
pub fn mancini_witness(rho: &DensityOperator) -> Result<CriterionReport> {
    let var_u = variance(rho, &mancini_u())?;
    let var_v = variance(rho, &mancini_v())?;
    let m_x = variance(rho, &duan_u(1.0))? * variance(rho, &duan_v(1.0))?;
    let delta_product = (var_u * var_v).sqrt();
    Ok(CriterionReport::inequality(
        WitnessName::Mancini,
        vec![
            ("var_U", var_u),
            ("var_V", var_v),
            ("delta_product", delta_product),
            ("variance_product", var_u * var_v),
            ("M_x", m_x),
            ("bound_delta_product", 0.5),
            ("bound_M_x", 1.0),
        ],
        m_x,
        1.0,
        "U=(x_a+x_b)/sqrt2, V=(p_a-p_b)/sqrt2 with x=(a+a†)/sqrt2, p=(a-a†)/(i sqrt2); \
         M_x = Var(x_a+x_b) Var(p_a-p_b) = 4 var_U var_V; verdict from M_x < 1",
    ))
}

/// `M = Var(u) + Var(v) >= m² + 1/m²` with `u = |m| x_a + x_b/m`, `v = |m| p_a − p_b/m`.
pub fn duan_witness(rho: &DensityOperator, m: f64) -> Result<CriterionReport> {
    if m == 0.0 || !m.is_finite() {
        return Err(Error::Domain(format!("Duan parameter m must be finite and nonzero, got {m}")));
    }
    let var_u = variance(rho, &duan_u(m))?;
    let var_v = variance(rho, &duan_v(m))?;
    let total = var_u + var_v;
    let bound = m * m + 1.0 / (m * m);
    Ok(CriterionReport::inequality(
        WitnessName::Duan(m),
        vec![
            ("m", m),
            ("var_u", var_u),
            ("var_v", var_v),
            ("M", total),
            ("M_minus", var_u - var_v),
            ("M_x", var_u * var_v),
            ("bound", bound),
            ("lower_bound", (m * m - 1.0 / (m * m)).abs()),
        ],
        total,
        bound,
        "u=|m|x_a+x_b/m, v=|m|p_a-p_b/m; one-sided test M < m^2+1/m^2; \
         lower_bound |m^2-1/m^2| is informational",
    ))
}

/// The three second-order quantities for `u = x_a + x_b`, `v = p_a − p_b`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DuanMancini {
    #[serde(rename = "M")]
    pub m: f64,
    #[serde(rename = "M_minus")]
    pub m_minus: f64,
    #[serde(rename = "M_x")]
    pub m_x: f64,
}

/// `(M, M_−, M_x)`; they satisfy `M² = M_−² + 4 M_x` identically.
pub fn duan_mancini_relation(rho: &DensityOperator) -> Result<DuanMancini> {
    let var_u = variance(rho, &duan_u(1.0))?;
    let var_v = variance(rho, &duan_v(1.0))?;
    Ok(DuanMancini {
        m: var_u + var_v,
        m_minus: var_u - var_v,
        m_x: var_u * var_v,
    })
}

/// Partially transposed SU(2) uncertainty relation.
pub fn su2_pt_witness(rho: &DensityOperator) -> Result<CriterionReport> {
    let t1 = ev(rho, &ladder("ad*a*b*bd"))?;
    let t2 = ev(rho, &ladder("a*ad*bd*b"))?;
    let t3 = ev(rho, &OperatorPoly::monomial(2, 0, 2, 0))?;
    let t4 = ev(rho, &OperatorPoly::monomial(0, 2, 0, 2))?;
    let sum = ev(rho, &(ladder("ad*bd") + ladder("a*b")))?;
    let diff = ev(rho, &(ladder("ad*bd") - ladder("a*b")))?;
    let sz2 = ev(rho, &(ladder("ad*a") - ladder("bd*b")))?;

    let bracket_x = real(t1 + t2 + t3 + t4 - sum * sum, "SU(2) first bracket")?;
    let bracket_y = real(t1 + t2 - t3 - t4 + diff * diff, "SU(2) second bracket")?;
    let lhs = bracket_x * bracket_y;
    let rhs = sz2.norm_sqr();
    Ok(CriterionReport::inequality(
        WitnessName::Su2Pt,
        vec![
            ("bracket_x", bracket_x),
            ("bracket_y", bracket_y),
            ("lhs", lhs),
            ("rhs", rhs),
        ],
        lhs,
        rhs,
        "brackets evaluated as printed; bracket_x = 4 Var(S_x) and bracket_y = 4 Var(S_y) \
         on the partial transpose, rhs = |<a†a-b†b>|^2 = 4<S_z>^2",
    ))
}

fn su11_ladder(rho: &DensityOperator) -> Result<(f64, f64, f64)> {
    let t1 = ev(rho, &ladder("ad*a*bd*b"))?;
    let t2 = ev(rho, &ladder("a*ad*b*bd"))?;
    let t3 = ev(rho, &OperatorPoly::monomial(2, 0, 0, 2))?;
    let t4 = ev(rho, &OperatorPoly::monomial(0, 2, 2, 0))?;
    let sum = ev(rho, &(ladder("ad*b") + ladder("a*bd")))?;
    let diff = ev(rho, &(ladder("ad*b") - ladder("a*bd")))?;
    let kz2 = ev(rho, &(ladder("ad*a") + ladder("b*bd")))?;

    let bracket_x = real(t1 + t2 + t3 + t4 - sum * sum, "SU(1,1) first bracket")?;
    let bracket_y = real(t1 + t2 - t3 - t4 + diff * diff, "SU(1,1) second bracket")?;
    Ok((bracket_x, bracket_y, kz2.norm_sqr()))
}

fn su11_quadrature(rho: &DensityOperator) -> Result<(f64, f64, f64)> {
    let var = |w: &str| variance(rho, &ladder(w)).map(Complex64::from);
    let e = |w: &str| ev(rho, &ladder(w));

    let first = var("xa*xb")? + var("pa*pb")? + e("xa*pa*pb*xb")? + e("pa*xa*xb*pb")?
        - e("xa*xb")? * e("pa*pb")? * 2.0;
    let second = var("xa*pb")? + var("pa*xb")? - e("xa*pa*xb*pb")? - e("pa*xa*pb*xb")?
        + e("xa*pb")? * e("pa*xb")? * 2.0;
    let squares = ev(rho, &Quadrature::Xa.poly().pow(2))?
        + ev(rho, &Quadrature::Pa.poly().pow(2))?
        + ev(rho, &Quadrature::Xb.poly().pow(2))?
        + ev(rho, &Quadrature::Pb.poly().pow(2))?;
    Ok((
        real(first, "SU(1,1) quadrature first bracket")?,
        real(second, "SU(1,1) quadrature second bracket")?,
        squares.norm_sqr() / 4.0,
    ))
}

/// Partially transposed SU(1,1) uncertainty relation, in ladder or quadrature form.
pub fn su11_pt_witness(rho: &DensityOperator, mode: Su11Mode) -> Result<CriterionReport> {
    let (bracket_x, bracket_y, rhs) = match mode {
        Su11Mode::Ladder => su11_ladder(rho)?,
        Su11Mode::Quadrature => su11_quadrature(rho)?,
    };
    let lhs = bracket_x * bracket_y;
    Ok(CriterionReport::inequality(
        WitnessName::Su11Pt(mode),
        vec![
            ("bracket_x", bracket_x),
            ("bracket_y", bracket_y),
            ("lhs", lhs),
            ("rhs", rhs),
        ],
        lhs,
        rhs,
        "brackets evaluated as printed; bracket_x = 4 Var(K_x) and bracket_y = 4 Var(K_y) \
         on the partial transpose, rhs = |<a†a+bb†>|^2 = 4<K_z>^2; \
         on alpha|1,0>+beta|0,1>, lhs - rhs = -8 su11_reduced",
    ))
}

/// Spectrum of the partial transpose over mode `b`, ascending.
pub fn ppt_spectrum(rho: &DensityOperator) -> Result<Vec<f64>> {
    hermitian_eigenvalues(&partial_transpose_b(rho))
}

/// Peres–Horodecki test: a negative eigenvalue of `ρ^PT` certifies entanglement.
pub fn ppt_witness(rho: &DensityOperator) -> Result<CriterionReport> {
    let eigs = ppt_spectrum(rho)?;
    let min_eigenvalue = eigs[0];
    let negativity = eigs.iter().filter(|e| **e < 0.0).fold(0.0, |acc, e| acc - e);
    let detected = min_eigenvalue < -tol::PSD;
    Ok(CriterionReport {
        name: WitnessName::Ppt,
        quantities: [
            ("min_eigenvalue".to_string(), min_eigenvalue),
            ("negativity".to_string(), negativity),
        ]
        .into_iter()
        .collect(),
        separable_bound_holds: !detected,
        entangled_detected: detected,
        conventions: format!("transpose on mode b; detection iff min eigenvalue < -{:e}", tol::PSD),
    })
}

/// Closed-form predictions for `alpha|1,0> + beta|0,1>`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BellClosedForms {
    /// `m² + 1/m² + 2(|α|² m² + |β|²/m²)`
    #[serde(rename = "M_closed")]
    pub m_closed: f64,
    /// `4 − 4 Re(αβ*)²`, the `m = 1` variance product.
    #[serde(rename = "Mx_closed")]
    pub mx_closed: f64,
    /// `|α*β|² − 2 Re(α*β)² Im(α*β)²`; positive values mean the SU(1,1) witness fires.
    pub su11_reduced: f64,
    /// `{−|α||β|, |α|², |β|², |α||β|}` sorted ascending.
    pub ppt_spectrum: [f64; 4],
}

pub fn bell_closed_forms(alpha: Complex64, beta: Complex64, m: f64) -> Result<BellClosedForms> {
    let norm_sq = alpha.norm_sqr() + beta.norm_sqr();
    if (norm_sq - 1.0).abs() > tol::NORM {
        return Err(Error::Normalization { norm_sq });
    }
    if m == 0.0 || !m.is_finite() {
        return Err(Error::Domain(format!("Duan parameter m must be finite and nonzero, got {m}")));
    }
    let m2 = m * m;
    let (a2, b2) = (alpha.norm_sqr(), beta.norm_sqr());
    let re = (alpha * beta.conj()).re;
    let z = alpha.conj() * beta;
    let mut spectrum = [a2, b2, alpha.norm() * beta.norm(), -alpha.norm() * beta.norm()];
    spectrum.sort_by(f64::total_cmp);
    Ok(BellClosedForms {
        m_closed: m2 + 1.0 / m2 + 2.0 * (a2 * m2 + b2 / m2),
        mx_closed: 4.0 - 4.0 * re * re,
        su11_reduced: z.norm_sqr() - 2.0 * z.re * z.re * z.im * z.im,
        ppt_spectrum: spectrum,
    })
}

/// Every witness on one state: Mancini, Duan for each `m`, SU(2), SU(1,1) in both forms, PPT.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WitnessSuite {
    pub mancini: CriterionReport,
    pub duan: Vec<CriterionReport>,
    pub su2_pt: CriterionReport,
    pub su11_pt: CriterionReport,
    pub su11_pt_quadrature: CriterionReport,
    pub ppt: CriterionReport,
}

impl WitnessSuite {
    pub fn evaluate(rho: &DensityOperator, duan_m: &[f64]) -> Result<Self> {
        Ok(WitnessSuite {
            mancini: mancini_witness(rho)?,
            duan: duan_m
                .iter()
                .map(|&m| duan_witness(rho, m))
                .collect::<Result<_>>()?,
            su2_pt: su2_pt_witness(rho)?,
            su11_pt: su11_pt_witness(rho, Su11Mode::Ladder)?,
            su11_pt_quadrature: su11_pt_witness(rho, Su11Mode::Quadrature)?,
            ppt: ppt_witness(rho)?,
        })
    }

    pub fn reports(&self) -> impl Iterator<Item = &CriterionReport> {
        [&self.mancini]
            .into_iter()
            .chain(self.duan.iter())
            .chain([&self.su2_pt, &self.su11_pt, &self.su11_pt_quadrature, &self.ppt])
    }

    pub fn any_detected(&self) -> bool {
        self.reports().any(|r| r.entangled_detected)
    }
}
