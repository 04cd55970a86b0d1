//! Exact evaluation of every method the CLI exposes. Each method maps an
//! index `n` to one rational approximation of π; rendering and error
//! certification happen elsewhere.

use madhava::{
    aitken_delta2, brouncker_pi, consecutive_mean, corrected_pi, iterated_aitken, madhava,
    partial_sum, partial_sums, series_a, series_b, series_c, CorrectorOrder, Int, Rat, Result,
};

/// Methods whose value at an index needs no further parameters (beyond the
/// corrector depth for `Corrected`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseMethod {
    /// 4·S_n, the raw n-term partial sum scaled to π.
    Raw,
    /// 4·(S_n + (−1)ⁿ·conv_k(ρ_n)), partial sum plus the depth-k corrector.
    Corrected { order: u64 },
    /// The order-n⁻³ accelerated series.
    SeriesA,
    /// The order-n⁻⁵ accelerated series.
    SeriesB,
    /// The order-n⁻⁷ accelerated series.
    SeriesC,
    /// 4·Δ²(S)ₙ, one Aitken pass over the raw sums, at index n ≥ 3.
    Aitken,
    /// 4·(1 − conv_n(ρ₁)): the depth-n convergent of the classic continued
    /// fraction for 4/π, folded back to π. Here `n` is the depth.
    Brouncker,
}

/// A full method selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodSpec {
    Base(BaseMethod),
    /// `rounds` Aitken passes over the raw sums S_1..S_n.
    AitkenIter { rounds: u32 },
    /// Mean of 4·S_(n−1) and 4·S_n. The raw sums alternate around π, so
    /// the mean cancels the leading error term and halves the next one.
    Averaged,
}

impl MethodSpec {
    /// The flag spelling of the method, used in reports.
    pub fn name(&self) -> &'static str {
        match self {
            MethodSpec::Base(base) => base.name(),
            MethodSpec::AitkenIter { .. } => "aitken-iter",
            MethodSpec::Averaged => "averaged",
        }
    }
}

impl BaseMethod {
    pub fn name(&self) -> &'static str {
        match self {
            BaseMethod::Raw => "raw",
            BaseMethod::Corrected { .. } => "corrected",
            BaseMethod::SeriesA => "series-a",
            BaseMethod::SeriesB => "series-b",
            BaseMethod::SeriesC => "series-c",
            BaseMethod::Aitken => "aitken",
            BaseMethod::Brouncker => "brouncker",
        }
    }

    /// Smallest index at which the method is defined.
    pub fn min_n(&self) -> u64 {
        match self {
            BaseMethod::Aitken => 3,
            _ => 1,
        }
    }

    fn value(&self, n: u64) -> Result<Rat> {
        let four = Rat::from_integer(Int::from(4));
        match self {
            BaseMethod::Raw => Ok(partial_sum(&madhava(), n) * four),
            BaseMethod::Corrected { order } => Ok(corrected_pi(n, CorrectorOrder::new(*order))),
            BaseMethod::SeriesA => Ok(series_a(n)),
            BaseMethod::SeriesB => Ok(series_b(n)),
            BaseMethod::SeriesC => Ok(series_c(n)),
            BaseMethod::Aitken => {
                let sums = partial_sums(&madhava(), n);
                aitken_delta2(|i| sums[(i - 1) as usize].clone(), n).map(|s| s * four)
            }
            BaseMethod::Brouncker => Ok(brouncker_pi(n)),
        }
    }
}

/// The exact value of `spec` at index `n`. Index preconditions
/// (`n ≥ min_n`, iteration head-room) are the caller's to enforce; the only
/// runtime failure is a vanishing second difference inside an Aitken pass.
pub fn value(spec: &MethodSpec, n: u64) -> Result<Rat> {
    match spec {
        MethodSpec::Base(base) => base.value(n),
        MethodSpec::AitkenIter { rounds } => {
            let sums = partial_sums(&madhava(), n);
            iterated_aitken(|i| sums[(i - 1) as usize].clone(), *rounds, n)
                .map(|s| s * Rat::from_integer(Int::from(4)))
        }
        MethodSpec::Averaged => {
            let sums = partial_sums(&madhava(), n);
            let four = Rat::from_integer(Int::from(4));
            Ok(consecutive_mean(|i| &sums[(i - 1) as usize] * &four, n))
        }
    }
}
