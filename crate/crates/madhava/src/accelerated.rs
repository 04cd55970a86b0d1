//! The three closed-form accelerated series for π.
//!
//! Feeding the order-1/2/3 convergent correctors through the `transform`
//! module and multiplying by 4 yields series that converge to π like n⁻³,
//! n⁻⁵ and n⁻⁷ instead of the raw series' n⁻¹:
//!
//! ```text
//! a_n = 3    + 4·Σ_{p=1}^{n} (−1)^(p−1)/((2p+1)³ − (2p+1))
//! b_n =        16·Σ_{p=1}^{n} (−1)^(p−1)/((2p−1)⁵ + 4(2p−1))
//! c_n = 28/9 + 36·Σ_{p=1}^{n} (−1)^(p−1)/(p(p+1)(2p+1)(4p²+5)(4p²+8p+9))
//! ```
//!
//! In every case `n` counts summed terms. The b-series looks different from
//! the other two because its transformed terms are negative (see
//! `transform::v2_closed`): pulling the sign out merges the constant
//! 4·(u_1 − R_1^(2)) = 16/5 into the sum as its p = 1 term, so b_1 = 16/5 is
//! the constant itself and the visible alternation starts positive.
//!
//! All three are alternating with strictly decreasing terms, so the first
//! omitted term bounds the error; those bounds are exposed as
//! [`series_a_error_bound`] etc. and the asymptotic orders are
//! 1/(2n³), 1/(2n⁵), 9/(8n⁷).

use num_traits::Zero;

use crate::{Int, Rat};

/// Magnitude of the p-th summand of the a-series: 4/((2p+1)³ − (2p+1)).
///
/// # Panics
///
/// If `p == 0`.
pub fn series_a_term(p: u64) -> Rat {
    assert!(p >= 1, "series terms are indexed from 1");
    let q = Int::from(p) * 2u32 + 1u32;
    Rat::new(Int::from(4), q.pow(3) - q)
}

/// Magnitude of the p-th summand of the b-series: 16/((2p−1)⁵ + 4(2p−1)).
///
/// # Panics
///
/// If `p == 0`.
pub fn series_b_term(p: u64) -> Rat {
    assert!(p >= 1, "series terms are indexed from 1");
    let q = Int::from(p) * 2u32 - 1u32;
    Rat::new(Int::from(16), q.pow(5) + q * 4u32)
}

/// Magnitude of the p-th summand of the c-series:
/// 36/(p(p+1)(2p+1)(4p²+5)(4p²+8p+9)).
///
/// # Panics
///
/// If `p == 0`.
pub fn series_c_term(p: u64) -> Rat {
    assert!(p >= 1, "series terms are indexed from 1");
    let p = Int::from(p);
    let sq4 = &p * &p * 4u32;
    let den = (&p + 1u32) * &p * (&p * 2u32 + 1u32) * (&sq4 + 5u32) * (sq4 + &p * 8u32 + 9u32);
    Rat::new(Int::from(36), den)
}

fn signed_sum(term: fn(u64) -> Rat, n: u64) -> Rat {
    let mut acc = Rat::zero();
    for p in 1..=n {
        let t = term(p);
        acc = if p % 2 == 1 { acc + t } else { acc - t };
    }
    acc
}

/// The n-term a-series value (order n⁻³); a_1 = 19/6.
///
/// # Panics
///
/// If `n == 0`.
pub fn series_a(n: u64) -> Rat {
    assert!(n >= 1, "series values are indexed from 1");
    Rat::from_integer(3.into()) + signed_sum(series_a_term, n)
}

/// The n-term b-series value (order n⁻⁵); b_1 = 16/5.
///
/// # Panics
///
/// If `n == 0`.
pub fn series_b(n: u64) -> Rat {
    assert!(n >= 1, "series values are indexed from 1");
    signed_sum(series_b_term, n)
}

/// The n-term c-series value (order n⁻⁷); c_1 = 22/7.
///
/// # Panics
///
/// If `n == 0`.
pub fn series_c(n: u64) -> Rat {
    assert!(n >= 1, "series values are indexed from 1");
    Rat::new(Int::from(28), Int::from(9)) + signed_sum(series_c_term, n)
}

/// Certified bound |a_n − π| ≤ first omitted term = `series_a_term(n+1)`.
///
/// # Panics
///
/// If `n == 0`.
pub fn series_a_error_bound(n: u64) -> Rat {
    assert!(n >= 1, "series values are indexed from 1");
    series_a_term(n + 1)
}

/// Certified bound |b_n − π| ≤ `series_b_term(n+1)`.
///
/// # Panics
///
/// If `n == 0`.
pub fn series_b_error_bound(n: u64) -> Rat {
    assert!(n >= 1, "series values are indexed from 1");
    series_b_term(n + 1)
}

/// Certified bound |c_n − π| ≤ `series_c_term(n+1)`.
///
/// # Panics
///
/// If `n == 0`.
pub fn series_c_error_bound(n: u64) -> Rat {
    assert!(n >= 1, "series values are indexed from 1");
    series_c_term(n + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decimal::{to_decimal, Rounding};
    use crate::rat;
    use crate::series::pi_enclosure;

    fn trunc13(x: &Rat) -> String {
        to_decimal(x, 13, Rounding::TowardZero)
            .unwrap()
            .digits()
            .to_owned()
    }

    #[test]
    fn small_values_by_hand() {
        assert_eq!(series_a(1), rat(19, 6).unwrap());
        assert_eq!(series_a(2), rat(47, 15).unwrap());
        assert_eq!(series_b(1), rat(16, 5).unwrap());
        assert_eq!(series_b(2), rat(160, 51).unwrap());
        assert_eq!(series_c(1), rat(22, 7).unwrap());
    }

    fn round13(x: &Rat) -> String {
        to_decimal(x, 13, Rounding::HalfEven)
            .unwrap()
            .digits()
            .to_owned()
    }

    #[test]
    fn pinned_renderings() {
        // Where truncation and half-even differ in the 13th decimal, both
        // are pinned; the rounded form is the one most published digit
        // strings for these values show.
        assert_eq!(trunc13(&series_a(2)), "3.1333333333333");
        assert_eq!(trunc13(&series_a(3)), "3.1452380952380");
        assert_eq!(round13(&series_a(3)), "3.1452380952381");
        assert_eq!(trunc13(&series_b(2)), "3.1372549019607");
        assert_eq!(round13(&series_b(2)), "3.1372549019608");
        assert_eq!(trunc13(&series_b(4)), "3.1413919413919");
        assert_eq!(trunc13(&series_c(2)), "3.1414634146341");
        assert_eq!(trunc13(&series_c(10)), "3.1415926266578");
        assert_eq!(round13(&series_c(10)), "3.1415926266579");
    }

    #[test]
    fn term_magnitudes_strictly_decrease() {
        for p in 1..=200 {
            assert!(series_a_term(p + 1) < series_a_term(p));
            assert!(series_b_term(p + 1) < series_b_term(p));
            assert!(series_c_term(p + 1) < series_c_term(p));
        }
    }

    #[test]
    fn first_omitted_term_bounds_hold_on_a_sample() {
        let reference = pi_enclosure(&rat(1, 1_000_000_000_000i64).unwrap());
        for n in [1u64, 2, 5, 10, 25] {
            assert!(reference.abs_distance_to(&series_a(n)) <= series_a_error_bound(n));
            assert!(reference.abs_distance_to(&series_b(n)) <= series_b_error_bound(n));
            assert!(reference.abs_distance_to(&series_c(n)) <= series_c_error_bound(n));
        }
    }
}
