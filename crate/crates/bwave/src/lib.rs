//! Numerical laboratory for self-similar blowup in the generalized b-equation
//! family
//!
//!   u_t − α²u_txx + c₀u_x + (b+1)uu_x + Γu_xxx = α²(c₁u_xu_xx + c₂uu_xxx)
//!
//! which contains Camassa–Holm, Degasperis–Procesi, Fornberg–Whitham and KdV
//! as parameter choices. The family admits the explicit self-similar blowup
//! solution u₀(t,x) = −(x/(T−t) + c₀)/(b+1), and this crate
//!
//! - evaluates u₀ and verifies it against a finite-difference residual oracle,
//! - classifies the (b, c₁, c₂) parameter space into stable/unstable regimes,
//! - evolves perturbations of u₀ in similarity coordinates through the
//!   nonlocal Helmholtz reformulation w_τ = L[w] + f(w),
//! - ledgers Sobolev norms along each run and fits empirical decay/growth
//!   rates against the theoretical targets.
//!
//! The `scenarios` module ties everything into reproducible, manifest-tracked
//! experiment runs; the `bwave` binary exposes them on the command line.

pub mod analysis;
pub mod dynamics;
pub mod error;
pub mod exact;
pub mod frames;
pub mod helmholtz;
pub mod model;
pub mod scenarios;
pub mod spectral;

pub use error::BwaveError;
pub use helmholtz::{Field, Grid, HelmholtzOps};
pub use model::{ModelParams, Preset, RegimeReport, Verdict};
