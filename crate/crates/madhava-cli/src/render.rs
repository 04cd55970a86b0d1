//! Output-boundary helpers: certified digits of π, correct-digit counting,
//! and directed three-significant-digit rendering for error bounds.

use std::cmp::Ordering;
use std::sync::OnceLock;

use madhava::{pi_reference, to_decimal, Int, Rat, Rounding};
use num_traits::{Signed, Zero};

/// Fractional digits of π certifiable from the reference enclosure. The
/// enclosure has width ≤ 10⁻³⁰; π's fractional tail beyond 28 decimals is
/// 0.795…×10⁻²⁸, far from a digit boundary on that scale, so both
/// enclosure ends truncate to the same 28 decimals. (29 would not do: the
/// tail beyond 29 decimals is 0.950…×10⁻²⁹, within one window width of
/// rolling over.)
pub const CERTIFIED_SCALE: u32 = 28;

/// The decimal expansion of π truncated to [`CERTIFIED_SCALE`] digits,
/// certified: both ends of the reference enclosure render identically.
pub fn certified_pi() -> &'static str {
    static DIGITS: OnceLock<String> = OnceLock::new();
    DIGITS.get_or_init(|| {
        let window = pi_reference();
        let lo = to_decimal(window.lower(), CERTIFIED_SCALE, Rounding::TowardZero)
            .expect("CERTIFIED_SCALE is far below the rendering limit");
        let hi = to_decimal(window.upper(), CERTIFIED_SCALE, Rounding::TowardZero)
            .expect("CERTIFIED_SCALE is far below the rendering limit");
        assert_eq!(
            lo.digits(),
            hi.digits(),
            "reference enclosure too wide to certify {CERTIFIED_SCALE} decimals"
        );
        lo.digits().to_owned()
    })
}

/// How many leading fractional digits of `rendered` match the certified
/// digits of π. Zero when the integer part is not `3`. Capped at
/// [`CERTIFIED_SCALE`]: beyond that the reference enclosure cannot
/// distinguish digits, so no claim is made.
pub fn correct_digits(rendered: &str) -> u32 {
    let pi = certified_pi();
    let (pi_int, pi_frac) = pi.split_once('.').expect("certified digits carry a point");
    let Some((int, frac)) = rendered.split_once('.') else {
        return 0;
    };
    if int != pi_int {
        return 0;
    }
    frac.bytes()
        .zip(pi_frac.bytes())
        .take_while(|(ours, certified)| ours == certified)
        .count() as u32
}

/// Renders a non-negative magnitude at three significant digits without
/// ever understating it (the mantissa is ceiled): 2.4290…×10⁻¹² becomes
/// `"2.43e-12"`. Suitable for printing upper error bounds.
pub fn sig3_upper(x: &Rat) -> String {
    sig3(x, true)
}

/// Floor counterpart of [`sig3_upper`]: never overstates. Suitable for
/// printing certified lower bounds. Zero renders as `"0"`.
pub fn sig3_lower(x: &Rat) -> String {
    sig3(x, false)
}

fn sig3(x: &Rat, round_up: bool) -> String {
    assert!(!x.is_negative(), "sig3 renders magnitudes");
    if x.is_zero() {
        return "0".to_owned();
    }
    let num = x.numer();
    let den = x.denom();
    let ten_pow = |k: i64| Int::from(10u32).pow(u32::try_from(k).expect("tiny exponent"));
    // x compared with 10^e, exactly.
    let against = |e: i64| -> Ordering {
        if e >= 0 {
            num.cmp(&(den * ten_pow(e)))
        } else {
            (num * ten_pow(-e)).cmp(den)
        }
    };
    // Decimal-length estimate, then correct to the unique e with
    // 10^e ≤ x < 10^(e+1).
    let mut e = num.to_string().len() as i64 - den.to_string().len() as i64;
    while against(e) == Ordering::Less {
        e -= 1;
    }
    while against(e + 1) != Ordering::Less {
        e += 1;
    }
    // Mantissa x/10^(e−2) lies in [100, 1000); take it with the requested
    // direction.
    let (scaled_num, scaled_den) = if e >= 2 {
        (num.clone(), den * ten_pow(e - 2))
    } else {
        (num * ten_pow(2 - e), den.clone())
    };
    let (quotient, remainder) = (&scaled_num / &scaled_den, &scaled_num % &scaled_den);
    let mut mantissa = quotient;
    if round_up && !remainder.is_zero() {
        mantissa += 1;
    }
    if mantissa == Int::from(1000) {
        mantissa = Int::from(100);
        e += 1;
    }
    let digits = mantissa.to_string();
    debug_assert_eq!(digits.len(), 3);
    format!("{}.{}e{}", &digits[..1], &digits[1..], e)
}

/// Wraps the enclosure-certified correct prefix of a rendered value in
/// markdown bold: `3.1415902423707` with 5 certified decimals becomes
/// `3.**14159**02423707`.
pub fn bold_correct_prefix(rendered: &str, correct: u32) -> String {
    if correct == 0 {
        return rendered.to_owned();
    }
    let Some((int, frac)) = rendered.split_once('.') else {
        return rendered.to_owned();
    };
    let split = (correct as usize).min(frac.len());
    format!("{int}.**{}**{}", &frac[..split], &frac[split..])
}

#[cfg(test)]
mod tests {
    use super::*;
    use madhava::rat;

    #[test]
    fn certified_digits_start_as_expected() {
        assert!(certified_pi().starts_with("3.14159265358979323846"));
        assert_eq!(certified_pi().len() as u32, CERTIFIED_SCALE + 2);
    }

    #[test]
    fn correct_digit_counting() {
        assert_eq!(correct_digits("3.1414634146341"), 3);
        assert_eq!(correct_digits("3.1415926535898"), 12);
        assert_eq!(correct_digits("3.0"), 0);
        assert_eq!(correct_digits("2.9"), 0);
        // 29 rendered decimals, the first 28 certified; the cap keeps the
        // count silent about the 29th even though it happens to be right.
        assert_eq!(correct_digits("3.14159265358979323846264338327"), 28);
    }

    #[test]
    fn sig3_directed_rendering() {
        let x = rat(24290i64, 10_000_000_000_000_000i64).unwrap(); // 2.4290e-12
        assert_eq!(sig3_upper(&x), "2.43e-12");
        assert_eq!(sig3_lower(&x), "2.42e-12");
        let exact = rat(5, 4).unwrap(); // both directions agree on exact mantissas
        assert_eq!(sig3_upper(&exact), "1.25e0");
        assert_eq!(sig3_lower(&exact), "1.25e0");
        let overflow = rat(99999, 100).unwrap(); // 999.99 → ceil rolls the decade
        assert_eq!(sig3_upper(&overflow), "1.00e3");
        assert_eq!(sig3_lower(&overflow), "9.99e2");
        assert_eq!(sig3_upper(&rat(1, 3).unwrap()), "3.34e-1");
        assert_eq!(sig3_lower(&rat(1, 3).unwrap()), "3.33e-1");
        assert_eq!(sig3_lower(&Rat::zero()), "0");
    }

    #[test]
    fn bold_prefix_wrapping() {
        assert_eq!(
            bold_correct_prefix("3.1415902423707", 5),
            "3.**14159**02423707"
        );
        assert_eq!(bold_correct_prefix("3.2000", 0), "3.2000");
        assert_eq!(bold_correct_prefix("3.14", 13), "3.**14**");
    }
}
