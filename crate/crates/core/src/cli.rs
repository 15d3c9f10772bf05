//! Command implementations behind the `cvwitness` binary.
//!
//! One JSON config serves all three commands:
//!
//! ```json
//! {
//!   "state": {
//!     "kind": "bell_xp",
//!     "alpha": {"re": 0.7071067811865476, "im": 0.0},
//!     "beta": {"re": 0.7071067811865476, "im": 0.0},
//!     "cutoff": {"d_a": 3, "d_b": 3},
//!     "trunc_tol": 1e-8
//!   },
//!   "witnesses": {"duan_m": [1.0, 2.0]},
//!   "sweep": {"n_theta": 21, "n_phi": 8, "m_values": [1.0]}
//! }
//! ```
//!
//! Other state kinds: `{"kind": "tmsv", "r": 0.5, "phi": 3.141592653589793}`,
//! `photon_subtracted_tmsv` with the same fields, and
//! `{"kind": "product_coherent", "alpha_a": {...}, "alpha_b": {...}}`.
//! With `phi = π` the squeezed vacuum has `Var(x_a + x_b) = Var(p_a − p_b) = e^{−2r}`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt::Write as _;
use std::path::Path;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Deserialize;
use serde_json::json;

use crate::criteria::{
    bell_closed_forms, duan_mancini_relation, duan_witness, mancini_witness, ppt_witness,
    su11_pt_witness, su2_pt_witness, Su11Mode, WitnessSuite,
};
use crate::dsl::{self, DslError};
use crate::fock::{tol, Cutoff, DensityOperator};
use crate::states::{
    bell_xp_state, coherent_cutoff_hint, density_from_pure, photon_subtracted_tmsv,
    product_coherent, two_mode_squeezed_vacuum, BellXPParams, TmsvParams, TruncationReport,
};

/// Smallest cutoff that hosts the degree-4 witness moments.
pub const MIN_CUTOFF: usize = 3;

/// Header of the sweep CSV.
pub const SWEEP_HEADER: &str = "theta,phi_r,alpha_re,alpha_im,beta_re,beta_im,M,M_minus,M_x,\
su2_lhs,su2_rhs,su11_lhs,su11_rhs,su11_reduced,ppt_min_eig,negativity,mancini_detected,\
duan_detected,su2_detected,su11_detected,ppt_detected";

#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    Config(String),
    Numeric(String),
    Io(String),
    Expr { message: String, detail: Option<String> },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Numeric(_) => 3,
            CliError::Io(_) => 4,
            CliError::Expr { .. } => 5,
        }
    }

    /// Message for standard error; the first line is `<class>: <message>`.
    pub fn render(&self) -> String {
        match self {
            CliError::Config(m) => format!("config: {m}"),
            CliError::Numeric(m) => format!("numeric: {m}"),
            CliError::Io(m) => format!("io: {m}"),
            CliError::Expr { message, detail } => match detail {
                Some(d) => format!("expr: {message}\n{d}"),
                None => format!("expr: {message}"),
            },
        }
    }
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        CliError::Numeric(e.to_string())
    }
}

/// Command-line overrides applied on top of the config file.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Overrides {
    pub cutoff: Option<(usize, usize)>,
    pub trunc_tol: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexSpec {
    pub re: f64,
    #[serde(default)]
    pub im: f64,
}

impl From<ComplexSpec> for Complex64 {
    fn from(c: ComplexSpec) -> Self {
        Complex64::new(c.re, c.im)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CutoffSpec {
    pub d_a: usize,
    pub d_b: usize,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StateKind {
    BellXp { alpha: ComplexSpec, beta: ComplexSpec },
    Tmsv { r: f64, phi: f64 },
    PhotonSubtractedTmsv { r: f64, phi: f64 },
    ProductCoherent { alpha_a: ComplexSpec, alpha_b: ComplexSpec },
}

impl StateKind {
    fn name(&self) -> &'static str {
        match self {
            StateKind::BellXp { .. } => "bell_xp",
            StateKind::Tmsv { .. } => "tmsv",
            StateKind::PhotonSubtractedTmsv { .. } => "photon_subtracted_tmsv",
            StateKind::ProductCoherent { .. } => "product_coherent",
        }
    }

    fn default_cutoff(&self) -> (usize, usize) {
        match self {
            StateKind::BellXp { .. } => (3, 3),
            StateKind::Tmsv { .. } => (12, 12),
            StateKind::PhotonSubtractedTmsv { .. } => (16, 16),
            StateKind::ProductCoherent { alpha_a, alpha_b } => (
                coherent_cutoff_hint((*alpha_a).into()).max(MIN_CUTOFF),
                coherent_cutoff_hint((*alpha_b).into()).max(MIN_CUTOFF),
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct StateSpec {
    #[serde(flatten)]
    pub kind: StateKind,
    #[serde(default)]
    pub cutoff: Option<CutoffSpec>,
    #[serde(default)]
    pub trunc_tol: Option<f64>,
}

fn default_duan_m() -> Vec<f64> {
    vec![1.0]
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessConfig {
    #[serde(default = "default_duan_m")]
    pub duan_m: Vec<f64>,
}

impl Default for WitnessConfig {
    fn default() -> Self {
        WitnessConfig {
            duan_m: default_duan_m(),
        }
    }
}

/// Bell-state grid: `alpha = cos θ e^{iφ_r}`, `beta = sin θ` with θ spanning
/// `[0, π/2]` inclusive and φ_r spanning `[0, 2π)`.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub n_theta: usize,
    pub n_phi: usize,
    #[serde(default = "default_duan_m")]
    pub m_values: Vec<f64>,
}

impl SweepSpec {
    pub fn theta(&self, i: usize) -> f64 {
        if self.n_theta == 1 {
            0.0
        } else {
            FRAC_PI_2 * i as f64 / (self.n_theta - 1) as f64
        }
    }

    pub fn phi(&self, j: usize) -> f64 {
        2.0 * PI * j as f64 / self.n_phi as f64
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    #[serde(default)]
    pub state: Option<StateSpec>,
    #[serde(default)]
    pub witnesses: WitnessConfig,
    #[serde(default)]
    pub sweep: Option<SweepSpec>,
}

pub fn parse_config(text: &str) -> Result<Config, CliError> {
    let config: Config =
        serde_json::from_str(text).map_err(|e| CliError::Config(format!("invalid config: {e}")))?;
    if let Some(m) = config.witnesses.duan_m.iter().find(|m| **m == 0.0 || !m.is_finite()) {
        return Err(CliError::Config(format!("duan_m entries must be finite and nonzero, got {m}")));
    }
    Ok(config)
}

pub fn load_config(path: &Path) -> Result<Config, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
    parse_config(&text)
}

fn resolve_cutoff(requested: Option<(usize, usize)>, default: (usize, usize)) -> Result<Cutoff, CliError> {
    let (d_a, d_b) = requested.unwrap_or(default);
    if d_a < MIN_CUTOFF || d_b < MIN_CUTOFF {
        return Err(CliError::Config(format!(
            "cutoff {d_a}x{d_b} is below the minimum {MIN_CUTOFF}x{MIN_CUTOFF} needed by the witnesses"
        )));
    }
    Cutoff::new(d_a, d_b).map_err(|e| CliError::Config(e.to_string()))
}

/// A constructed state together with what the config said about it.
#[derive(Debug, Clone)]
pub struct BuiltState {
    pub rho: DensityOperator,
    pub cutoff: Cutoff,
    pub truncation: TruncationReport,
    pub bell: Option<BellXPParams>,
}

pub fn build_state(spec: &StateSpec, overrides: &Overrides) -> Result<BuiltState, CliError> {
    let cutoff = resolve_cutoff(
        overrides
            .cutoff
            .or(spec.cutoff.map(|c| (c.d_a, c.d_b))),
        spec.kind.default_cutoff(),
    )?;
    let trunc_tol = overrides.trunc_tol.or(spec.trunc_tol).unwrap_or(tol::TRUNC);
    if !(0.0..1.0).contains(&trunc_tol) {
        return Err(CliError::Config(format!("trunc_tol must lie in [0, 1), got {trunc_tol}")));
    }
    let tmsv = |r: f64, phi: f64| TmsvParams::new(r, phi).map_err(|e| CliError::Config(e.to_string()));
    let (psi, truncation, bell) = match &spec.kind {
        StateKind::BellXp { alpha, beta } => {
            let p = BellXPParams::new((*alpha).into(), (*beta).into())
                .map_err(|e| CliError::Config(format!("bell_xp parameters: {e}")))?;
            (bell_xp_state(&p, cutoff), TruncationReport::exact(), Some(p))
        }
        StateKind::Tmsv { r, phi } => {
            let (psi, rep) = two_mode_squeezed_vacuum(&tmsv(*r, *phi)?, cutoff, trunc_tol)?;
            (psi, rep, None)
        }
        StateKind::PhotonSubtractedTmsv { r, phi } => {
            let (psi, rep) = photon_subtracted_tmsv(&tmsv(*r, *phi)?, cutoff, trunc_tol)?;
            (psi, rep, None)
        }
        StateKind::ProductCoherent { alpha_a, alpha_b } => {
            let (psi, rep) = product_coherent((*alpha_a).into(), (*alpha_b).into(), cutoff, trunc_tol)?;
            (psi, rep, None)
        }
    };
    Ok(BuiltState {
        rho: density_from_pure(&psi),
        cutoff,
        truncation,
        bell,
    })
}

fn require_state(config: &Config) -> Result<&StateSpec, CliError> {
    config
        .state
        .as_ref()
        .ok_or_else(|| CliError::Config("missing \"state\" section".into()))
}

/// JSON report of every witness on the configured state.
pub fn evaluate_config(config: &Config, overrides: &Overrides) -> Result<serde_json::Value, CliError> {
    let spec = require_state(config)?;
    let built = build_state(spec, overrides)?;
    let suite = WitnessSuite::evaluate(&built.rho, &config.witnesses.duan_m)?;
    let mut report = json!({
        "state": {
            "kind": spec.kind.name(),
            "cutoff": {"d_a": built.cutoff.d_a(), "d_b": built.cutoff.d_b()},
        },
        "truncation": built.truncation,
        "witnesses": suite,
    });
    if let Some(p) = built.bell {
        let forms = config
            .witnesses
            .duan_m
            .iter()
            .map(|&m| {
                let cf = bell_closed_forms(p.alpha(), p.beta(), m)?;
                let mut v = serde_json::to_value(cf).expect("closed forms serialize");
                v["m"] = json!(m);
                Ok(v)
            })
            .collect::<crate::Result<Vec<_>>>()?;
        report["bell_closed_forms"] = json!(forms);
    }
    Ok(report)
}

pub fn cmd_evaluate(config_path: &Path, overrides: &Overrides) -> Result<String, CliError> {
    let config = load_config(config_path)?;
    let report = evaluate_config(&config, overrides)?;
    Ok(serde_json::to_string_pretty(&report).expect("report serializes"))
}

fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn sweep_row(spec: &SweepSpec, cutoff: Cutoff, i: usize, j: usize) -> crate::Result<String> {
    let (theta, phi) = (spec.theta(i), spec.phi(j));
    let p = BellXPParams::from_angles(theta, phi);
    let rho = density_from_pure(&bell_xp_state(&p, cutoff));
    let closed = bell_closed_forms(p.alpha(), p.beta(), 1.0)?;
    let rel = duan_mancini_relation(&rho)?;
    let mancini = mancini_witness(&rho)?;
    let mut duan_detected = false;
    for &m in &spec.m_values {
        duan_detected |= duan_witness(&rho, m)?.entangled_detected;
    }
    let su2 = su2_pt_witness(&rho)?;
    let su11 = su11_pt_witness(&rho, Su11Mode::Ladder)?;
    let ppt = ppt_witness(&rho)?;

    let floats = [
        theta,
        phi,
        p.alpha().re,
        p.alpha().im,
        p.beta().re,
        p.beta().im,
        rel.m,
        rel.m_minus,
        rel.m_x,
        su2.get("lhs"),
        su2.get("rhs"),
        su11.get("lhs"),
        su11.get("rhs"),
        closed.su11_reduced,
        ppt.get("min_eigenvalue"),
        ppt.get("negativity"),
    ];
    let mut row = floats.iter().map(|x| fmt_f64(*x)).collect::<Vec<_>>().join(",");
    for flag in [
        mancini.entangled_detected,
        duan_detected,
        su2.entangled_detected,
        su11.entangled_detected,
        ppt.entangled_detected,
    ] {
        write!(row, ",{flag}").expect("writing to a String");
    }
    Ok(row)
}

/// CSV text for a Bell-state sweep; rows are θ-major and identical across runs.
pub fn sweep_csv(spec: &SweepSpec, cutoff: Cutoff) -> Result<String, CliError> {
    if spec.n_theta == 0 || spec.n_phi == 0 {
        return Err(CliError::Config("sweep grid counts must be at least 1".into()));
    }
    if let Some(m) = spec.m_values.iter().find(|m| **m == 0.0 || !m.is_finite()) {
        return Err(CliError::Config(format!("m_values entries must be finite and nonzero, got {m}")));
    }
    let rows = (0..spec.n_theta * spec.n_phi)
        .into_par_iter()
        .map(|k| sweep_row(spec, cutoff, k / spec.n_phi, k % spec.n_phi))
        .collect::<crate::Result<Vec<String>>>()?;
    let mut out = String::with_capacity(rows.len() * 400);
    out.push_str(SWEEP_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row);
        out.push('\n');
    }
    Ok(out)
}

pub fn sweep_config(config: &Config, overrides: &Overrides) -> Result<String, CliError> {
    let spec = config
        .sweep
        .as_ref()
        .ok_or_else(|| CliError::Config("missing \"sweep\" section".into()))?;
    let configured = match &config.state {
        Some(StateSpec {
            kind: StateKind::BellXp { .. },
            cutoff: Some(c),
            ..
        }) => Some((c.d_a, c.d_b)),
        _ => None,
    };
    let cutoff = resolve_cutoff(overrides.cutoff.or(configured), (3, 3))?;
    sweep_csv(spec, cutoff)
}

pub fn cmd_sweep(config_path: &Path, output: &Path, overrides: &Overrides) -> Result<(), CliError> {
    let config = load_config(config_path)?;
    let csv = sweep_config(&config, overrides)?;
    std::fs::write(output, csv).map_err(|e| CliError::Io(format!("cannot write {}: {e}", output.display())))
}

fn dsl_error(err: DslError, text: &str) -> CliError {
    match err {
        DslError::Parse(p) => CliError::Expr {
            message: p.to_string(),
            detail: Some(p.caret(text)),
        },
        DslError::Numeric(e) => CliError::Numeric(e.to_string()),
        other => CliError::Expr {
            message: other.to_string(),
            detail: None,
        },
    }
}

pub fn expr_config(text: &str, config: &Config, overrides: &Overrides) -> Result<String, CliError> {
    let query = dsl::parse(text).map_err(|e| dsl_error(e.into(), text))?;
    let built = build_state(require_state(config)?, overrides)?;
    let value = dsl::evaluate(&query, &built.rho).map_err(|e| dsl_error(e, text))?;
    Ok(serde_json::to_string_pretty(&value).expect("value serializes"))
}

/// Parses the expression before reading the config so syntax errors surface first.
pub fn cmd_expr(text: &str, config_path: &Path, overrides: &Overrides) -> Result<String, CliError> {
    dsl::parse(text).map_err(|e| dsl_error(e.into(), text))?;
    let config = load_config(config_path)?;
    expr_config(text, &config, overrides)
}
