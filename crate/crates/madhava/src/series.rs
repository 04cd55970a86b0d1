//! Alternating series with exact rational terms, their partial sums, and a
//! self-contained certified enclosure of π.
//!
//! Everything downstream that claims "this value agrees with π to k digits"
//! ultimately cites [`pi_reference`], which is built here from two
//! independent fast series (the order-n⁻⁷ and order-n⁻⁵ closed forms of the
//! `accelerated` module) and never consults an external constant.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::enclosure::Enclosure;
use crate::scalar::Scalar;
use crate::{pow10, Int, Rat};

type TermFn<T> = Arc<dyn Fn(u64) -> T + Send + Sync>;

/// A series Σ_{p≥1} (−1)^(p−1)·u_p whose term magnitudes `u_p` are positive
/// and strictly decreasing. Those two properties (checked by sampling in
/// tests, not enforced at construction) are what give partial sums their
/// bracketing behavior: odd-count sums overshoot the limit, even-count sums
/// undershoot it.
pub struct AlternatingSeries<T> {
    name: String,
    term: TermFn<T>,
}

impl<T> Clone for AlternatingSeries<T> {
    fn clone(&self) -> Self {
        Self {
            name: self.name.clone(),
            term: Arc::clone(&self.term),
        }
    }
}

impl<T> fmt::Debug for AlternatingSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AlternatingSeries")
            .field("name", &self.name)
            .finish_non_exhaustive()
    }
}

impl<T: Scalar> AlternatingSeries<T> {
    /// `term(p)` must return `u_p > 0` for every `p ≥ 1`, strictly
    /// decreasing in `p`, deterministically.
    pub fn new(name: impl Into<String>, term: impl Fn(u64) -> T + Send + Sync + 'static) -> Self {
        Self {
            name: name.into(),
            term: Arc::new(term),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// The term magnitude `u_p`.
    ///
    /// # Panics
    ///
    /// If `p == 0`; terms are indexed from 1.
    pub fn term(&self, p: u64) -> T {
        assert!(p >= 1, "series terms are indexed from 1");
        (self.term)(p)
    }
}

/// `u_p = 1/(2p−1)`, the p-th term magnitude of the Mādhava-Leibniz series.
///
/// # Panics
///
/// If `p == 0`.
pub fn madhava_term(p: u64) -> Rat {
    assert!(p >= 1, "series terms are indexed from 1");
    Rat::new(Int::one(), Int::from(2 * p - 1))
}

/// The Mādhava-Leibniz series 1 − 1/3 + 1/5 − 1/7 + …, whose sum is π/4.
pub fn madhava() -> AlternatingSeries<Rat> {
    AlternatingSeries::new("madhava-leibniz", madhava_term)
}

/// A resumable partial sum: the pair (n, S_n). Streaming large `n` costs one
/// term per step instead of recomputing the whole prefix.
#[derive(Debug, Clone)]
pub struct PartialSumState<T> {
    n: u64,
    value: T,
}

impl<T: Scalar> PartialSumState<T> {
    /// The state (1, S_1) = (1, u_1).
    pub fn start(series: &AlternatingSeries<T>) -> Self {
        Self {
            n: 1,
            value: series.term(1),
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// S_n for the current n.
    pub fn value(&self) -> &T {
        &self.value
    }

    /// Steps to S_{n+1} = S_n + (−1)^n·u_{n+1}.
    pub fn advance(&mut self, series: &AlternatingSeries<T>) {
        let next = series.term(self.n + 1);
        self.value = if self.n % 2 == 1 {
            self.value.clone() - next
        } else {
            self.value.clone() + next
        };
        self.n += 1;
    }
}

/// S_n = Σ_{p=1}^{n} (−1)^(p−1)·u_p, exactly.
///
/// # Panics
///
/// If `n == 0`.
pub fn partial_sum<T: Scalar>(series: &AlternatingSeries<T>, n: u64) -> T {
    assert!(n >= 1, "partial sums are indexed from 1");
    let mut state = PartialSumState::start(series);
    while state.n() < n {
        state.advance(series);
    }
    state.value
}

/// `[S_1, S_2, …, S_n]`, computed incrementally.
///
/// # Panics
///
/// If `n == 0`.
pub fn partial_sums<T: Scalar>(series: &AlternatingSeries<T>, n: u64) -> Vec<T> {
    assert!(n >= 1, "partial sums are indexed from 1");
    let mut out = Vec::with_capacity(n as usize);
    let mut state = PartialSumState::start(series);
    out.push(state.value().clone());
    while state.n() < n {
        state.advance(series);
        out.push(state.value().clone());
    }
    out
}

/// Enclosure of ρ_n = |limit − S_n|, where `limit` encloses the series
/// limit: the interval `limit − S_n`, taken absolutely. Away from the
/// degenerate case where that interval straddles zero, the result has
/// exactly the width of `limit` (pure translation).
///
/// `Enclosure` cannot be constructed with inverted endpoints, so no further
/// validation is needed here.
pub fn remainder_magnitude(
    series: &AlternatingSeries<Rat>,
    n: u64,
    limit: &Enclosure,
) -> Enclosure {
    let s_n = partial_sum(series, n);
    limit.shift(&-s_n).abs()
}

/// Certified bracket of `base + coeff·Σ_{p≥1} (−1)^(p−1)/den(p)` with width
/// at most `min_width`.
///
/// Strategy: partial sums with an even number of terms sit below the limit
/// and odd counts above, so it suffices to maintain a certified lower bound
/// of an even-count sum and a certified upper bound of the following
/// odd-count sum. Both are accumulated as plain integers at a fixed decimal
/// scale with directed rounding (floor for the lower accumulator, ceiling
/// for the upper). This sidesteps the common-denominator blowup of exact
/// rational summation: a million-term run stays a million small integer
/// divisions instead of a gcd on astronomically large numerators.
///
/// The scale leaves 10 decimal orders of headroom below `min_width`, so the
/// accumulated rounding drift (one unit in the last place per term per
/// bound) never threatens the requested width at any remotely feasible term
/// count.
fn alternating_bracket(
    base: &Rat,
    coeff: u64,
    den: impl Fn(u64) -> Int,
    min_width: &Rat,
) -> Enclosure {
    assert!(min_width.is_positive(), "enclosure width must be positive");
    let mut digits = 0u32;
    let mut probe = Rat::one();
    let tenth = Rat::new(Int::one(), Int::from(10));
    while &probe > min_width {
        probe *= &tenth;
        digits += 1;
    }
    let scale = digits + 10;
    let unit = pow10(scale);
    let scaled_numerator = Int::from(coeff) * &unit;
    let threshold = min_width * Rat::from_integer(unit.clone());

    let mut lo = Int::zero(); // ≤ scaled running sum
    let mut hi = Int::zero(); // ≥ scaled running sum
    let mut even_lo = Int::zero(); // `lo` snapshot at the last even term count
    let mut p = 0u64;
    loop {
        p += 1;
        let (q, r) = scaled_numerator.div_rem(&den(p));
        let ceil = if r.is_zero() { q.clone() } else { &q + 1u32 };
        if p % 2 == 1 {
            lo += &q;
            hi += &ceil;
            // Even-count sum below the limit, odd-count sum above:
            // [even_lo, hi] is a certified bracket. Return it once narrow
            // enough.
            if Rat::from_integer(&hi - &even_lo) <= threshold {
                let lower = base + Rat::new(even_lo, unit.clone());
                let upper = base + Rat::new(hi, unit);
                return Enclosure::new(lower, upper)
                    .expect("directed rounding keeps the lower bound below the upper");
            }
        } else {
            lo -= &ceil;
            hi -= &q;
            even_lo = lo.clone();
        }
    }
}

/// Denominator of the p-th term magnitude of the order-n⁻⁵ series:
/// (2p−1)⁵ + 4(2p−1), for p ≥ 1.
fn quintic_den(p: u64) -> Int {
    if p <= 20_000_000 {
        // (2p−1)⁵ < (4·10⁷)⁵ ≈ 1.0·10³⁸ fits u128.
        let q = 2 * u128::from(p) - 1;
        Int::from(q * q * q * q * q + 4 * q)
    } else {
        let q = Int::from(p) * 2u32 - 1u32;
        q.pow(5) + q * 4u32
    }
}

/// Denominator of the p-th term magnitude of the order-n⁻⁷ series:
/// p(p+1)(2p+1)(4p²+5)(4p²+8p+9), for p ≥ 1.
fn septic_den(p: u64) -> Int {
    if p <= 180_000 {
        // ≈ 32p⁷ < 2.0·10³⁸ at p = 1.8·10⁵, inside u128.
        let p = u128::from(p);
        Int::from(p * (p + 1) * (2 * p + 1) * (4 * p * p + 5) * (4 * p * p + 8 * p + 9))
    } else {
        let p = Int::from(p);
        let sq4 = &p * &p * 4u32;
        (&p + 1u32) * &p * (&p * 2u32 + 1u32) * (&sq4 + 5u32) * (sq4 + &p * 8u32 + 9u32)
    }
}

/// A certified enclosure of π with width ≤ `min_width`, built from the
/// order-n⁻⁷ series 28/9 + 36·Σ (−1)^(p−1)/(p(p+1)(2p+1)(4p²+5)(4p²+8p+9))
/// (the value sequence of `accelerated::series_c`). Fully self-contained: no
/// external π constant anywhere.
///
/// Cost grows like `min_width^(−1/7)` terms; width 10⁻³⁰ takes a few tens of
/// thousands of terms.
///
/// # Panics
///
/// If `min_width ≤ 0`.
pub fn pi_enclosure(min_width: &Rat) -> Enclosure {
    alternating_bracket(
        &Rat::new(Int::from(28), Int::from(9)),
        36,
        septic_den,
        min_width,
    )
}

/// Same contract as [`pi_enclosure`], from the independent order-n⁻⁵ series
/// 16·Σ (−1)^(p−1)/((2p−1)⁵ + 4(2p−1)) (the value sequence of
/// `accelerated::series_b`). Kept separate so the two can cross-check each
/// other: they share no coefficients beyond both summing to π.
///
/// Cost grows like `min_width^(−1/5)` terms.
///
/// # Panics
///
/// If `min_width ≤ 0`.
pub fn pi_enclosure_independent(min_width: &Rat) -> Enclosure {
    alternating_bracket(&Rat::zero(), 16, quintic_den, min_width)
}

/// The crate-wide reference enclosure of π: both internal series evaluated
/// at width 10⁻³⁰ and intersected. Computed once per process and reused by
/// every certification.
pub fn pi_reference() -> &'static Enclosure {
    static REFERENCE: OnceLock<Enclosure> = OnceLock::new();
    REFERENCE.get_or_init(|| {
        let width = Rat::new(Int::one(), pow10(30));
        pi_enclosure(&width)
            .intersect(&pi_enclosure_independent(&width))
            .expect("the two internal π series must overlap; disjoint enclosures mean an arithmetic bug")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decimal::{to_decimal, Rounding};
    use crate::rat;

    #[test]
    fn madhava_terms() {
        assert_eq!(madhava_term(1), rat(1, 1).unwrap());
        assert_eq!(madhava_term(3), rat(1, 5).unwrap());
        assert_eq!(madhava_term(1001), rat(1, 2001).unwrap());
    }

    #[test]
    #[should_panic(expected = "indexed from 1")]
    fn term_index_zero_is_rejected() {
        let _ = madhava_term(0);
    }

    #[test]
    fn small_partial_sums_by_hand() {
        let ml = madhava();
        assert_eq!(partial_sum(&ml, 1), rat(1, 1).unwrap());
        assert_eq!(partial_sum(&ml, 2), rat(2, 3).unwrap());
        assert_eq!(partial_sum(&ml, 3), rat(13, 15).unwrap());
        assert_eq!(
            partial_sums(&ml, 3),
            vec![
                rat(1, 1).unwrap(),
                rat(2, 3).unwrap(),
                rat(13, 15).unwrap()
            ]
        );
    }

    #[test]
    fn state_advances_by_signed_next_term() {
        let ml = madhava();
        let mut state = PartialSumState::start(&ml);
        for _ in 0..20 {
            let before = state.value().clone();
            let n = state.n();
            state.advance(&ml);
            let delta = state.value() - &before;
            let expected = if n % 2 == 1 {
                -madhava_term(n + 1)
            } else {
                madhava_term(n + 1)
            };
            assert_eq!(delta, expected);
        }
        assert_eq!(state.value(), &partial_sum(&ml, 21));
    }

    #[test]
    fn coarse_enclosure_contains_pi() {
        let e = pi_enclosure(&rat(1, 10).unwrap());
        assert!(e.width() <= rat(1, 10).unwrap());
        assert!(e.contains(&rat(314159, 100000).unwrap()));
    }

    #[test]
    fn both_oracles_agree_at_ten_decimals() {
        let w = rat(1, 10_000_000_000i64).unwrap();
        let primary = pi_enclosure(&w);
        let independent = pi_enclosure_independent(&w);
        assert!(primary.width() <= w);
        assert!(independent.width() <= w);
        let both = primary.intersect(&independent).expect("must overlap");
        assert!(both.contains(&rat(3141592653589i64, 1_000_000_000_000i64).unwrap()));
    }

    #[test]
    fn fifteen_digit_rendering_is_pinned_at_width_1e20() {
        let w = Rat::new(Int::one(), pow10(20));
        let e = pi_enclosure(&w);
        let lower = to_decimal(e.lower(), 15, Rounding::TowardZero).unwrap();
        let upper = to_decimal(e.upper(), 15, Rounding::TowardZero).unwrap();
        assert_eq!(lower.digits(), "3.141592653589793");
        assert_eq!(upper.digits(), "3.141592653589793");
    }

    #[test]
    fn remainder_magnitudes_match_known_windows() {
        let ml = madhava();
        let quarter = rat(1, 4).unwrap();
        let limit = pi_enclosure(&rat(1, 10_000_000_000i64).unwrap()).scale(&quarter);
        // ρ_1 = 1 − π/4 = 0.21460183660…
        let rho1 = remainder_magnitude(&ml, 1, &limit);
        assert!(rho1.lower() > &rat(21460183, 100_000_000).unwrap());
        assert!(rho1.upper() < &rat(21460184, 100_000_000).unwrap());
        // ρ_2 = π/4 − 2/3 = 0.11873149673…
        let rho2 = remainder_magnitude(&ml, 2, &limit);
        assert!(rho2.lower() > &rat(11873149, 100_000_000).unwrap());
        assert!(rho2.upper() < &rat(11873150, 100_000_000).unwrap());
        // Pure translation: width is exactly the reference width.
        assert_eq!(rho2.width(), limit.width());
    }

    #[test]
    fn fast_and_big_denominator_paths_agree() {
        // Force the BigInt fallbacks by comparing them against the u128 fast
        // path on values inside both ranges.
        for p in [1u64, 2, 17, 10_000] {
            let q = Int::from(p) * 2u32 - 1u32;
            assert_eq!(quintic_den(p), q.pow(5) + q * 4u32);
            let pb = Int::from(p);
            let sq4 = &pb * &pb * 4u32;
            assert_eq!(
                septic_den(p),
                (&pb + 1u32) * &pb * (&pb * 2u32 + 1u32) * (&sq4 + 5u32) * (sq4 + &pb * 8u32 + 9u32)
            );
        }
    }
}
