//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum BwaveError {
    /// Input violates a precondition (bad parameter, grid mismatch, ...).
    #[error("rejected input: {0}")]
    RejectedInput(String),

    /// Evaluation requested at or past the blowup time t = T.
    #[error("blowup domain: t = {t} is not in [0, T) with T = {blowup_time}")]
    BlowupDomain { t: f64, blowup_time: f64 },

    /// A field no longer decays at the grid boundary; the truncated domain
    /// is too small for the requested operation.
    #[error(
        "domain too small: |field| = {boundary_value:.3e} at the boundary exceeds \
         threshold {threshold:.3e}; suggest half-width >= {suggested_half_width}"
    )]
    DomainTooSmall {
        boundary_value: f64,
        threshold: f64,
        suggested_half_width: f64,
    },

    /// Requested time step violates the advective stability limit.
    #[error("CFL violation: dt = {dt:.6e} exceeds limit {limit:.6e}")]
    CflViolation { dt: f64, limit: f64 },

    /// A non-finite value appeared during time integration.
    #[error("non-finite value in update at tau = {tau}")]
    NanAbort { tau: f64 },

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl BwaveError {
    pub fn rejected(msg: impl Into<String>) -> Self {
        BwaveError::RejectedInput(msg.into())
    }
}
