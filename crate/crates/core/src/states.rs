//! Constructors for the test states used by the witnesses.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fock::{tol, CVector, Cutoff, DensityOperator, PureState};

/// Amplitudes of `alpha|1,0> + beta|0,1>`, the first-excited-state Bell form
/// `(alpha x_a + beta x_b) exp(-(x_a^2 + x_b^2)/2)` written in the number basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BellXPParams {
    alpha: Complex64,
    beta: Complex64,
}

impl BellXPParams {
    pub fn new(alpha: Complex64, beta: Complex64) -> Result<Self> {
        let norm_sq = alpha.norm_sqr() + beta.norm_sqr();
        if (norm_sq - 1.0).abs() > tol::NORM {
            return Err(Error::Normalization { norm_sq });
        }
        Ok(BellXPParams { alpha, beta })
    }

    /// `alpha = cos(theta) e^{i phi}`, `beta = sin(theta)`.
    pub fn from_angles(theta: f64, phi: f64) -> Self {
        BellXPParams {
            alpha: Complex64::from_polar(theta.cos(), phi),
            beta: Complex64::from(theta.sin()),
        }
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn beta(&self) -> Complex64 {
        self.beta
    }
}

/// Two-mode squeezing magnitude `r` and phase `phi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TmsvParams {
    r: f64,
    phi: f64,
}

impl TmsvParams {
    pub fn new(r: f64, phi: f64) -> Result<Self> {
        if !r.is_finite() || r < 0.0 || !phi.is_finite() {
            return Err(Error::Domain(format!(
                "squeezing needs finite r >= 0 and finite phi, got r={r}, phi={phi}"
            )));
        }
        Ok(TmsvParams { r, phi })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }
}

/// How much of the exact state survived truncation.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct TruncationReport {
    /// Squared norm of the truncated amplitudes before renormalization.
    pub kept_weight: f64,
    pub renormalized: bool,
}

impl TruncationReport {
    pub fn exact() -> Self {
        TruncationReport {
            kept_weight: 1.0,
            renormalized: false,
        }
    }
}

/// `alpha|1,0> + beta|0,1>`; exact for every cutoff.
pub fn bell_xp_state(p: &BellXPParams, cutoff: Cutoff) -> PureState {
    let mut amps = CVector::zeros(cutoff.dim());
    amps[cutoff.index(1, 0)] = p.alpha;
    amps[cutoff.index(0, 1)] = p.beta;
    PureState::new(cutoff, amps).expect("normalized by BellXPParams")
}

/// Renormalizes exact-normalized amplitudes truncated to `cutoff`, failing when the
/// discarded weight exceeds `trunc_tol`.
fn finish_truncated(
    cutoff: Cutoff,
    mut amps: CVector,
    trunc_tol: f64,
) -> Result<(PureState, TruncationReport)> {
    let kept_weight = amps.norm_squared();
    if kept_weight < 1.0 - trunc_tol {
        return Err(Error::Truncation {
            kept_weight,
            trunc_tol,
        });
    }
    let renormalized = kept_weight != 1.0;
    if renormalized {
        amps.unscale_mut(kept_weight.sqrt());
    }
    let psi = PureState::new(cutoff, amps)?;
    Ok((
        psi,
        TruncationReport {
            kept_weight,
            renormalized,
        },
    ))
}

/// `sqrt(1 - t^2) sum_n (e^{i phi} t)^n |n, n>` with `t = tanh r`, kept for `n < min(d_a, d_b)`.
///
/// With `phi = pi` the pair `u = x_a + x_b`, `v = p_a - p_b` is squeezed:
/// `Var(u) = Var(v) = e^{-2r}`.
pub fn two_mode_squeezed_vacuum(
    p: &TmsvParams,
    cutoff: Cutoff,
    trunc_tol: f64,
) -> Result<(PureState, TruncationReport)> {
    let t = p.r.tanh();
    let lambda = Complex64::from_polar(t, p.phi);
    let levels = cutoff.d_a().min(cutoff.d_b());
    let mut amps = CVector::zeros(cutoff.dim());
    let mut c = Complex64::from((1.0 - t * t).sqrt());
    for n in 0..levels {
        amps[cutoff.index(n, n)] = c;
        c *= lambda;
    }
    finish_truncated(cutoff, amps, trunc_tol)
}

/// `a b` applied to the squeezed vacuum, normalized: amplitudes proportional to
/// `(n + 1) lambda^{n+1}` on `|n, n>`.
pub fn photon_subtracted_tmsv(
    p: &TmsvParams,
    cutoff: Cutoff,
    trunc_tol: f64,
) -> Result<(PureState, TruncationReport)> {
    let t = p.r.tanh();
    if t == 0.0 {
        return Err(Error::Degenerate(
            "photon subtraction from the vacuum leaves the zero vector".into(),
        ));
    }
    let t2 = t * t;
    // sum_{n>=1} n^2 t^{2n}
    let total = t2 * (1.0 + t2) / (1.0 - t2).powi(3);
    let lambda = Complex64::from_polar(t, p.phi);
    let levels = cutoff.d_a().min(cutoff.d_b());
    let mut amps = CVector::zeros(cutoff.dim());
    let mut power = lambda / total.sqrt();
    for k in 0..levels {
        amps[cutoff.index(k, k)] = power * (k + 1) as f64;
        power *= lambda;
    }
    finish_truncated(cutoff, amps, trunc_tol)
}

fn coherent_amplitudes(alpha: Complex64, d: usize) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(d);
    let mut c = Complex64::from((-alpha.norm_sqr() / 2.0).exp());
    for n in 0..d {
        out.push(c);
        c *= alpha / ((n + 1) as f64).sqrt();
    }
    out
}

/// Number of levels that comfortably hosts a coherent amplitude. This is a
/// heuristic; the truncation tolerance is the actual contract.
pub fn coherent_cutoff_hint(alpha: Complex64) -> usize {
    let m = alpha.norm();
    (m * m + 6.0 * m + 10.0).ceil() as usize
}

/// `|alpha_a> ⊗ |alpha_b>` with truncated coherent amplitudes.
pub fn product_coherent(
    alpha_a: Complex64,
    alpha_b: Complex64,
    cutoff: Cutoff,
    trunc_tol: f64,
) -> Result<(PureState, TruncationReport)> {
    let ca = coherent_amplitudes(alpha_a, cutoff.d_a());
    let cb = coherent_amplitudes(alpha_b, cutoff.d_b());
    let amps = CVector::from_iterator(
        cutoff.dim(),
        ca.iter().flat_map(|x| cb.iter().map(move |y| x * y)),
    );
    finish_truncated(cutoff, amps, trunc_tol)
}

/// `|psi><psi|`.
pub fn density_from_pure(psi: &PureState) -> DensityOperator {
    let amps = psi.amplitudes();
    DensityOperator::new(psi.cutoff(), amps * amps.adjoint())
        .expect("projector onto a normalized vector is a density operator")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::OperatorMatrix;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn bell_state_support() {
        for (da, db) in [(2, 2), (3, 3), (5, 2), (2, 6)] {
            let cut = Cutoff::new(da, db).unwrap();
            let p = BellXPParams::new(c(0.6, 0.0), c(0.0, 0.8)).unwrap();
            let psi = bell_xp_state(&p, cut);
            assert_eq!(psi.amplitude(1, 0), c(0.6, 0.0));
            assert_eq!(psi.amplitude(0, 1), c(0.0, 0.8));
            let others = (0..cut.dim())
                .filter(|&k| k != cut.index(1, 0) && k != cut.index(0, 1))
                .all(|k| psi.amplitudes()[k] == Complex64::new(0.0, 0.0));
            assert!(others);
        }
        let cut = Cutoff::new(2, 2).unwrap();
        let product = bell_xp_state(&BellXPParams::new(c(1.0, 0.0), c(0.0, 0.0)).unwrap(), cut);
        assert_eq!(product, PureState::basis(cut, 1, 0).unwrap());
    }

    #[test]
    fn bell_params_reject_unnormalized() {
        assert!(matches!(
            BellXPParams::new(c(1.0, 0.0), c(1.0, 0.0)),
            Err(Error::Normalization { .. })
        ));
    }

    #[test]
    fn bell_density_matches_projector_form() {
        let cut = Cutoff::new(2, 2).unwrap();
        let p = BellXPParams::new(c(FRAC_1_SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0)).unwrap();
        let rho = density_from_pure(&bell_xp_state(&p, cut));
        let m = rho.matrix();
        let (k10, k01) = (cut.index(1, 0), cut.index(0, 1));
        for (i, j) in [(k10, k10), (k01, k01), (k01, k10), (k10, k01)] {
            assert!((m[(i, j)] - c(0.5, 0.0)).norm() < 1e-15);
        }
        assert!((m.trace() - c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn global_phase_leaves_density_unchanged() {
        let cut = Cutoff::new(3, 3).unwrap();
        let base = BellXPParams::new(c(0.6, 0.0), c(0.0, 0.8)).unwrap();
        let phase = Complex64::from_polar(1.0, 1.234);
        let rotated = BellXPParams::new(base.alpha() * phase, base.beta() * phase).unwrap();
        let r1 = density_from_pure(&bell_xp_state(&base, cut));
        let r2 = density_from_pure(&bell_xp_state(&rotated, cut));
        assert!((r1.matrix() - r2.matrix()).norm() < 1e-12);
    }

    #[test]
    fn tmsv_vacuum_and_weights() {
        let cut = Cutoff::new(4, 4).unwrap();
        let (psi, rep) = two_mode_squeezed_vacuum(&TmsvParams::new(0.0, 0.0).unwrap(), cut, tol::TRUNC).unwrap();
        assert_eq!(psi, PureState::basis(cut, 0, 0).unwrap());
        assert_eq!(rep, TruncationReport::exact());

        let cut = Cutoff::new(12, 12).unwrap();
        let p = TmsvParams::new(0.5, PI).unwrap();
        let (psi, rep) = two_mode_squeezed_vacuum(&p, cut, tol::TRUNC).unwrap();
        // geometric tail: discarded weight is t^(2*12)
        let t: f64 = 0.5f64.tanh();
        assert!((rep.kept_weight - (1.0 - t.powi(24))).abs() < 1e-15);
        assert!(rep.kept_weight >= 1.0 - 1e-8);
        assert!(rep.renormalized);
        for n in 0..11 {
            let ratio = psi.amplitude(n + 1, n + 1) / psi.amplitude(n, n);
            assert!((ratio.norm() - t).abs() < 1e-14);
            assert!((ratio - c(-t, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn tmsv_truncation_error_is_raised() {
        let cut = Cutoff::new(4, 4).unwrap();
        let err = two_mode_squeezed_vacuum(&TmsvParams::new(1.5, 0.0).unwrap(), cut, tol::TRUNC).unwrap_err();
        assert!(matches!(err, Error::Truncation { .. }));
        assert!(TmsvParams::new(-0.1, 0.0).is_err());
    }

    #[test]
    fn photon_subtraction() {
        let cut = Cutoff::new(12, 12).unwrap();
        assert!(matches!(
            photon_subtracted_tmsv(&TmsvParams::new(0.0, 0.0).unwrap(), cut, tol::TRUNC),
            Err(Error::Degenerate(_))
        ));
        let (psi, _) = photon_subtracted_tmsv(&TmsvParams::new(0.3, 0.0).unwrap(), cut, tol::TRUNC).unwrap();
        assert!((psi.amplitudes().norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn photon_subtraction_matches_ladder_application() {
        // Oracle: build a large TMSV, apply a⊗b as a dense matrix, keep the first 16 levels.
        use crate::fock::{embed, lowering_matrix};
        let p = TmsvParams::new(0.5, PI).unwrap();
        let big = Cutoff::new(40, 40).unwrap();
        let (tmsv, _) = two_mode_squeezed_vacuum(&p, big, tol::TRUNC).unwrap();
        let a = lowering_matrix(40).unwrap();
        let ab = embed(&a, &a).unwrap();
        let raw = ab.matrix() * tmsv.amplitudes();
        let raw = &raw / Complex64::from(raw.norm());

        let cut = Cutoff::new(16, 16).unwrap();
        let (psi, rep) = photon_subtracted_tmsv(&p, cut, tol::TRUNC).unwrap();
        let kept: f64 = (0..16).map(|n| raw[big.index(n, n)].norm_sqr()).sum();
        assert!((kept - rep.kept_weight).abs() < 1e-12);
        for n in 0..16 {
            let want = raw[big.index(n, n)] / kept.sqrt();
            assert!((psi.amplitude(n, n) - want).norm() < 1e-12);
        }
    }

    #[test]
    fn coherent_products() {
        let cut = Cutoff::new(3, 3).unwrap();
        let (psi, rep) = product_coherent(c(0.0, 0.0), c(0.0, 0.0), cut, tol::TRUNC).unwrap();
        assert_eq!(psi, PureState::basis(cut, 0, 0).unwrap());
        assert!(!rep.renormalized);

        let cut = Cutoff::new(16, 2).unwrap();
        let (_, rep) = product_coherent(c(1.0, 0.0), c(0.0, 0.0), cut, tol::TRUNC).unwrap();
        // Poisson(1) tail beyond n = 15
        let mut tail = 0.0;
        let mut term = (-1.0f64).exp();
        for n in 0..60 {
            if n >= 16 {
                tail += term;
            }
            term /= (n + 1) as f64;
        }
        assert!((1.0 - rep.kept_weight - tail).abs() < 1e-15);
        assert!(rep.kept_weight >= 1.0 - 1e-8);

        let cut = Cutoff::new(3, 3).unwrap();
        assert!(matches!(
            product_coherent(c(2.0, 0.0), c(0.0, 0.0), cut, tol::TRUNC),
            Err(Error::Truncation { .. })
        ));
        assert!(coherent_cutoff_hint(c(1.0, 0.0)) >= 17);
    }

    #[test]
    fn kept_weight_is_pre_renormalization_norm() {
        let cut = Cutoff::new(9, 7).unwrap();
        let (alpha_a, alpha_b) = (c(0.4, -0.3), c(0.2, 0.5));
        let (psi, rep) = product_coherent(alpha_a, alpha_b, cut, 1e-3).unwrap();
        let ca = coherent_amplitudes(alpha_a, 9);
        let cb = coherent_amplitudes(alpha_b, 7);
        let mut weight = 0.0;
        for (na, x) in ca.iter().enumerate() {
            for (nb, y) in cb.iter().enumerate() {
                let raw = x * y;
                weight += raw.norm_sqr();
                assert!((psi.amplitude(na, nb) * rep.kept_weight.sqrt() - raw).norm() < 1e-15);
            }
        }
        assert!((weight - rep.kept_weight).abs() < 1e-15);
    }

    #[test]
    fn density_from_pure_is_unit_trace_projector() {
        let cut = Cutoff::new(3, 2).unwrap();
        let amps = CVector::from_iterator(6, (0..6).map(|k| c(k as f64 - 2.0, 0.5 * k as f64)));
        let amps = &amps / Complex64::from(amps.norm());
        let rho = density_from_pure(&PureState::new(cut, amps).unwrap());
        assert!((rho.matrix().trace() - c(1.0, 0.0)).norm() < 1e-14);
        let sq = rho.matrix() * rho.matrix();
        assert!((sq - rho.matrix()).norm() < 1e-14);

        let vac = density_from_pure(&PureState::basis(cut, 0, 0).unwrap());
        assert_eq!(vac.matrix()[(0, 0)], c(1.0, 0.0));
        assert_eq!(vac.matrix().iter().filter(|z| z.norm() > 0.0).count(), 1);
    }
}
