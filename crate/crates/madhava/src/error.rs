use thiserror::Error;

/// Failure modes of the data-dependent operations.
///
/// Index preconditions (`n ≥ 1`, `depth ≥ 1`, …) are programming errors and
/// panic instead; see each operation's docs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A rational was requested with denominator zero.
    #[error("zero denominator is not a rational")]
    ZeroDenominator,

    /// Decimal rendering was requested beyond the supported scale.
    #[error("scale {scale} exceeds the maximum supported scale {max}")]
    ScaleTooLarge { scale: u32, max: u32 },

    /// An enclosure was constructed with its bounds out of order.
    #[error("invalid enclosure: lower bound exceeds upper bound")]
    InvalidEnclosure,

    /// The backward recurrence hit a vanishing denominator, so convergents
    /// at the requested depth do not exist.
    #[error("continued-fraction denominator vanished at level {level}")]
    CfZeroDenominator { level: u64 },

    /// Aitken's Δ² is undefined where the second difference vanishes.
    #[error("zero second difference at round {round}, index {index}: Δ² undefined there")]
    ZeroSecondDifference { round: u32, index: u64 },

    /// The residual-fraction inversion produced a non-positive value where
    /// the historical relation requires a positive one.
    #[error("residual inversion for n = {n} left a non-positive value at level {level}")]
    ResidualInversion { n: u64, level: u32 },

    /// The remainder enclosure straddles zero, so the quality quotient
    /// R_n/ρ_n cannot be formed; tighten the reference enclosure.
    #[error("remainder enclosure contains zero; tighten the reference enclosure")]
    QualityUndefined,
}

pub type Result<T> = std::result::Result<T, Error>;
