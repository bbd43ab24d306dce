//! Parameter set for the generalized b-equation family, named presets, and
//! the stability-regime classifier.
//!
//! The equation
//!
//!   u_t − α²u_txx + c₀u_x + (b+1)uu_x + Γu_xxx = α²(c₁u_xu_xx + c₂uu_xxx)
//!
//! carries six coefficients plus the blowup time T of the self-similar
//! solution. The regime classifier evaluates the two ratios
//!
//!   ratio_a = (2(b+1) + c₂ − 2c₁)/(b+1),   ratio_b = (2c₁ + 1 − c₂)/(b+1)
//!
//! whose signs separate the asymptotically stable and unstable parameter
//! regions (both positive: stable; ratio_a negative, or ratio_a zero with
//! ratio_b negative: unstable). The remaining region is reported as
//! unclassified rather than guessed.

use crate::error::BwaveError;
use serde::{Deserialize, Serialize};

/// Relative tolerance for treating a regime-ratio numerator as exactly zero.
/// Presets such as Fornberg-Whitham produce non-representable rationals, so
/// boundary tests must be float-safe.
pub const REGIME_ZERO_RTOL: f64 = 1e-12;

/// Coefficients of the generalized b-equation plus the blowup time T.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    /// Dispersion length α in m = u − α²u_xx.
    pub alpha: f64,
    /// Linear transport speed c₀.
    pub c0: f64,
    /// Convection parameter b (b ≠ −1).
    pub b: f64,
    /// Third-derivative dispersion Γ.
    pub gamma: f64,
    /// Coefficient c₁ of u_x u_xx.
    pub c1: f64,
    /// Coefficient c₂ of u u_xxx.
    pub c2: f64,
    /// Blowup time T > 0 of the self-similar solution.
    pub t_blowup: f64,
}

impl ModelParams {
    pub fn new(
        alpha: f64,
        c0: f64,
        b: f64,
        gamma: f64,
        c1: f64,
        c2: f64,
        t_blowup: f64,
    ) -> Result<Self, BwaveError> {
        let p = ModelParams {
            alpha,
            c0,
            b,
            gamma,
            c1,
            c2,
            t_blowup,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), BwaveError> {
        if !self.all_finite() {
            return Err(BwaveError::rejected("non-finite model parameter"));
        }
        if self.b == -1.0 {
            return Err(BwaveError::rejected(
                "b = -1 is excluded (the exact solution divides by b+1)",
            ));
        }
        if !(self.t_blowup > 0.0) {
            return Err(BwaveError::rejected("blowup time T must be positive"));
        }
        Ok(())
    }

    fn all_finite(&self) -> bool {
        [
            self.alpha,
            self.c0,
            self.b,
            self.gamma,
            self.c1,
            self.c2,
            self.t_blowup,
        ]
        .iter()
        .all(|v| v.is_finite())
    }

    /// b + 1, the denominator shared by the exact solution and both ratios.
    pub fn b1(&self) -> f64 {
        self.b + 1.0
    }

    /// Replace the blowup time, keeping the equation coefficients.
    pub fn with_t(mut self, t_blowup: f64) -> Self {
        self.t_blowup = t_blowup;
        self
    }
}

/// The four named members of the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Preset {
    CamassaHolm,
    DegasperisProcesi,
    FornbergWhitham,
    KdV,
}

impl Preset {
    pub const ALL: [Preset; 4] = [
        Preset::CamassaHolm,
        Preset::DegasperisProcesi,
        Preset::FornbergWhitham,
        Preset::KdV,
    ];

    /// Parameter tuple (α, c₀, b, Γ, c₁, c₂) of the preset, with blowup
    /// time supplied by the caller. For KdV (α = 0) the coefficients c₁, c₂
    /// multiply α² and are irrelevant; they are set to zero.
    pub fn params(self, t_blowup: f64) -> ModelParams {
        let (alpha, c0, b, gamma, c1, c2) = match self {
            Preset::CamassaHolm => (1.0, 0.0, 2.0, 0.0, 2.0, 1.0),
            Preset::DegasperisProcesi => (1.0, 0.0, 3.0, 0.0, 3.0, 1.0),
            Preset::FornbergWhitham => (1.0, -1.0, 0.5, 0.0, 4.5, 1.5),
            Preset::KdV => (0.0, 0.0, 2.0, 1.0, 0.0, 0.0),
        };
        ModelParams {
            alpha,
            c0,
            b,
            gamma,
            c1,
            c2,
            t_blowup,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Preset::CamassaHolm => "camassa-holm",
            Preset::DegasperisProcesi => "degasperis-procesi",
            Preset::FornbergWhitham => "fornberg-whitham",
            Preset::KdV => "kdv",
        }
    }

    pub fn from_name(name: &str) -> Result<Preset, BwaveError> {
        match name {
            "camassa-holm" | "ch" => Ok(Preset::CamassaHolm),
            "degasperis-procesi" | "dp" => Ok(Preset::DegasperisProcesi),
            "fornberg-whitham" | "fw" => Ok(Preset::FornbergWhitham),
            "kdv" => Ok(Preset::KdV),
            other => Err(BwaveError::rejected(format!("unknown preset '{other}'"))),
        }
    }
}

/// Look up a preset by CLI name with the default blowup time T = 1.
pub fn load_preset(name: &str) -> Result<ModelParams, BwaveError> {
    Ok(Preset::from_name(name)?.params(1.0))
}

/// Stability classification outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Stable,
    Unstable,
    Unclassified,
    /// The stability theory assumes α ≠ 0; KdV-type parameters fall here.
    NotApplicable,
}

/// The two regime ratios and the resulting verdict.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegimeReport {
    /// (2(b+1) + c₂ − 2c₁)/(b+1); its sign drives the primary dichotomy and
    /// its value is the theoretical decay exponent in the stable regime.
    pub ratio_a: f64,
    /// (2c₁ + 1 − c₂)/(b+1).
    pub ratio_b: f64,
    /// Numerator 2(b+1) + c₂ − 2c₁ kept separately for the boundary test.
    pub numerator_a: f64,
    pub verdict: Verdict,
}

/// Classify the parameter point. Errors only on b = −1; α = 0 yields the
/// `NotApplicable` verdict since the stability theory requires α ≠ 0.
pub fn classify(params: &ModelParams) -> Result<RegimeReport, BwaveError> {
    if params.b == -1.0 {
        return Err(BwaveError::rejected("b = -1: regime ratios are undefined"));
    }
    let b1 = params.b1();
    let num_a = 2.0 * b1 + params.c2 - 2.0 * params.c1;
    let num_b = 2.0 * params.c1 + 1.0 - params.c2;
    let ratio_a = num_a / b1;
    let ratio_b = num_b / b1;

    // Float-safe zero test, relative to the magnitude of the assembled terms.
    let scale_a = 2.0 * b1.abs() + params.c2.abs() + 2.0 * params.c1.abs();
    let scale_b = 2.0 * params.c1.abs() + 1.0 + params.c2.abs();
    let zero_a = num_a.abs() <= REGIME_ZERO_RTOL * scale_a.max(1.0);
    let zero_b = num_b.abs() <= REGIME_ZERO_RTOL * scale_b.max(1.0);

    let verdict = if params.alpha == 0.0 {
        Verdict::NotApplicable
    } else if !zero_a && ratio_a > 0.0 && !zero_b && ratio_b > 0.0 {
        Verdict::Stable
    } else if (!zero_a && ratio_a < 0.0) || (zero_a && !zero_b && ratio_b < 0.0) {
        Verdict::Unstable
    } else {
        Verdict::Unclassified
    };

    Ok(RegimeReport {
        ratio_a,
        ratio_b,
        numerator_a: num_a,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const TOL: f64 = 1e-12;

    #[test]
    fn preset_parameter_tuples() {
        let ch = Preset::CamassaHolm.params(1.0);
        assert_eq!(
            (ch.alpha, ch.c0, ch.b, ch.gamma, ch.c1, ch.c2),
            (1.0, 0.0, 2.0, 0.0, 2.0, 1.0)
        );
        let fw = Preset::FornbergWhitham.params(1.0);
        assert_eq!(
            (fw.alpha, fw.c0, fw.b, fw.gamma, fw.c1, fw.c2),
            (1.0, -1.0, 0.5, 0.0, 4.5, 1.5)
        );
        let kdv = Preset::KdV.params(1.0);
        assert_eq!((kdv.alpha, kdv.c0, kdv.b, kdv.gamma), (0.0, 0.0, 2.0, 1.0));
    }

    #[test]
    fn load_preset_by_name() {
        assert_eq!(load_preset("camassa-holm").unwrap().b, 2.0);
        assert_eq!(load_preset("dp").unwrap().b, 3.0);
        assert!(load_preset("not-a-model").is_err());
    }

    #[test]
    fn camassa_holm_is_stable_with_unit_ratio() {
        let r = classify(&Preset::CamassaHolm.params(1.0)).unwrap();
        assert!((r.ratio_a - 1.0).abs() < TOL);
        assert!((r.ratio_b - 4.0 / 3.0).abs() < TOL);
        assert_eq!(r.verdict, Verdict::Stable);
    }

    #[test]
    fn degasperis_procesi_is_stable() {
        let r = classify(&Preset::DegasperisProcesi.params(1.0)).unwrap();
        assert!((r.ratio_a - 0.75).abs() < TOL);
        assert!((r.ratio_b - 1.5).abs() < TOL);
        assert_eq!(r.verdict, Verdict::Stable);
    }

    #[test]
    fn fornberg_whitham_is_unstable() {
        let r = classify(&Preset::FornbergWhitham.params(1.0)).unwrap();
        assert!((r.ratio_a + 3.0).abs() < TOL);
        assert_eq!(r.verdict, Verdict::Unstable);
    }

    #[test]
    fn kdv_is_not_applicable() {
        let r = classify(&Preset::KdV.params(1.0)).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);
    }

    #[test]
    fn boundary_case_zero_numerator_with_negative_ratio_b() {
        // 2(b+1) + c2 - 2c1 = 0 with ratio_b < 0: b = 0, c1 = 0.5, c2 = -1.
        let p = ModelParams::new(1.0, 0.0, 0.0, 0.0, 0.5, -1.0, 1.0).unwrap();
        let r = classify(&p).unwrap();
        assert!(r.numerator_a.abs() < TOL);
        assert!(r.ratio_b < 0.0);
        assert_eq!(r.verdict, Verdict::Unstable);
    }

    #[test]
    fn boundary_case_zero_numerator_with_positive_ratio_b() {
        // Numerator zero, ratio_b > 0 stays open in the theory.
        let p = ModelParams::new(1.0, 0.0, 0.0, 0.0, 1.5, 1.0, 1.0).unwrap();
        let r = classify(&p).unwrap();
        assert!(r.numerator_a.abs() < TOL);
        assert_eq!(r.verdict, Verdict::Unclassified);
    }

    #[test]
    fn positive_ratio_a_with_negative_ratio_b_is_unclassified() {
        // b = 0, c1 = -2, c2 = -2: ratio_a = 4 > 0, ratio_b = -1 < 0.
        let p = ModelParams::new(1.0, 0.0, 0.0, 0.0, -2.0, -2.0, 1.0).unwrap();
        let r = classify(&p).unwrap();
        assert!(r.ratio_a > 0.0 && r.ratio_b < 0.0);
        assert_eq!(r.verdict, Verdict::Unclassified);
    }

    #[test]
    fn b_equals_minus_one_is_rejected() {
        let p = ModelParams {
            alpha: 1.0,
            c0: 0.0,
            b: -1.0,
            gamma: 0.0,
            c1: 1.0,
            c2: 1.0,
            t_blowup: 1.0,
        };
        assert!(p.validate().is_err());
        assert!(classify(&p).is_err());
    }

    proptest! {
        /// Changing α to any nonzero value never changes the ratios or the verdict.
        #[test]
        fn classify_is_scale_free_in_alpha(
            alpha1 in 0.01f64..10.0,
            alpha2 in 0.01f64..10.0,
            b in -0.9f64..4.0,
            c1 in -3.0f64..5.0,
            c2 in -3.0f64..3.0,
        ) {
            let p1 = ModelParams { alpha: alpha1, c0: 0.3, b, gamma: 0.1, c1, c2, t_blowup: 1.0 };
            let p2 = ModelParams { alpha: alpha2, ..p1 };
            let r1 = classify(&p1).unwrap();
            let r2 = classify(&p2).unwrap();
            prop_assert_eq!(r1.ratio_a.to_bits(), r2.ratio_a.to_bits());
            prop_assert_eq!(r1.ratio_b.to_bits(), r2.ratio_b.to_bits());
            prop_assert_eq!(r1.verdict, r2.verdict);
        }

        /// With b != -1 and α != 0 exactly one of the three substantive verdicts holds.
        #[test]
        fn exactly_one_verdict(
            b in -0.9f64..4.0,
            c1 in -3.0f64..5.0,
            c2 in -3.0f64..3.0,
        ) {
            let p = ModelParams { alpha: 1.0, c0: 0.0, b, gamma: 0.0, c1, c2, t_blowup: 1.0 };
            let r = classify(&p).unwrap();
            prop_assert!(matches!(
                r.verdict,
                Verdict::Stable | Verdict::Unstable | Verdict::Unclassified
            ));
        }
    }
}
