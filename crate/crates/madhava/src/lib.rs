//! Exact-arithmetic convergence acceleration for the Mādhava-Leibniz series
//!
//! The alternating series π/4 = 1 − 1/3 + 1/5 − … converges so slowly that
//! two thousand terms still leave the third decimal of π wrong. The Kerala
//! school's remedy, formalized here, is to add a *corrector* to each partial
//! sum: the remainder ρ_n = |π/4 − S_n| expands as a generalized continued
//! fraction whose convergents 1/(4n), n/(4n²+1), (n²+1)/((4n²+5)n) make
//! superb correction terms. Folding a corrector family back into the series
//! yields new alternating series that converge as n⁻³, n⁻⁵ and n⁻⁷, and the
//! first of them is exactly what iterating Aitken's Δ² produces.
//!
//! Everything is computed in arbitrary-precision rationals. Irrational
//! targets (π, ρ_n, the corrector quality ε_n) are only ever handled as
//! [`Enclosure`]s — certified rational brackets — produced by a
//! self-contained π oracle built from two independent accelerated series.
//! No floating point, no external constants.
//!
//! The algorithm layer ([`cf`], [`series`], [`transform`], [`aitken`]) is
//! generic over a [`Scalar`]; the certification layer (correctors, decimal
//! rendering, enclosures, the π oracle) is pinned to the exact rational
//! type [`Rat`].

pub mod accelerated;
pub mod aitken;
pub mod cf;
pub mod corrector;
pub mod decimal;
pub mod enclosure;
mod error;
pub mod scalar;
pub mod series;
pub mod transform;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub use accelerated::{
    series_a, series_a_error_bound, series_a_term, series_b, series_b_error_bound, series_b_term,
    series_c, series_c_error_bound, series_c_term,
};
pub use aitken::{aitken_closed_form_ml, aitken_delta2, consecutive_mean, iterated_aitken};
pub use cf::{cf_convergent, cf_convergent_exact, ContinuedFraction};
pub use corrector::{
    brouncker_pi, corrected_pi, corrector, corrector_r1, corrector_r2, corrector_r3,
    historical_residual, rho_fraction, rho_fraction_quarter, CorrectorOrder,
};
pub use decimal::{to_decimal, DecimalRendering, Rounding, MAX_SCALE};
pub use enclosure::Enclosure;
pub use series::{
    madhava, madhava_term, partial_sum, partial_sums, pi_enclosure, pi_enclosure_independent,
    pi_reference, remainder_magnitude, AlternatingSeries, PartialSumState,
};
pub use transform::{
    quality, transform, v1_closed, v2_closed, v3_closed, CorrectorFamily, QualitySequence,
    TransformedSeries,
};

/// Arbitrary-precision signed integer used throughout.
pub type Int = num_bigint::BigInt;

/// Arbitrary-precision rational: always stored reduced, denominator > 0.
///
/// These invariants are maintained by every `Ratio` constructor and
/// arithmetic operation, and double-checked by property tests.
pub type Rat = num_rational::BigRational;

/// Builds the reduced rational `n/d`, normalizing the sign into the
/// numerator.
///
/// # Errors
///
/// [`Error::ZeroDenominator`] if `d` is zero.
///
/// ```
/// use madhava::{rat, Rat, Int};
/// assert_eq!(rat(2, 4).unwrap(), rat(1, 2).unwrap());
/// assert_eq!(rat(3, -6).unwrap(), rat(-1, 2).unwrap());
/// assert!(rat(1, 0).is_err());
/// ```
pub fn rat(n: impl Into<Int>, d: impl Into<Int>) -> Result<Rat> {
    use num_traits::Zero;
    let d = d.into();
    if d.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rat::new(n.into(), d))
}

/// `10^scale` as a big integer.
pub(crate) fn pow10(scale: u32) -> Int {
    use num_traits::Pow;
    Int::from(10u32).pow(scale)
}

// Compile and run the code blocks in the workspace README as doctests.
#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_reduces_and_normalizes() {
        let r = rat(62832, 20000).unwrap();
        assert_eq!(r, rat(3927, 1250).unwrap());
        assert_eq!(r.numer(), &Int::from(3927));
        assert_eq!(r.denom(), &Int::from(1250));

        let neg = rat(3, -6).unwrap();
        assert_eq!(neg.numer(), &Int::from(-1));
        assert_eq!(neg.denom(), &Int::from(2));
    }

    #[test]
    fn rat_rejects_zero_denominator() {
        assert_eq!(rat(5, 0).unwrap_err(), Error::ZeroDenominator);
    }
}
