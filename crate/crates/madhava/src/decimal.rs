//! Controlled decimal rendering of exact rationals.
//!
//! All computation in this crate happens in exact rationals; decimals exist
//! only at the output boundary. Truncation (toward zero) is the default
//! everywhere because that is the honest way to display a value whose next
//! digit is known exactly; half-even rounding is available where a rounded
//! display is wanted.

use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::{pow10, Error, Int, Rat, Result};

/// Largest supported number of fractional digits.
pub const MAX_SCALE: u32 = 200;

/// How the digit after the last rendered one is disposed of.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rounding {
    /// Drop the tail (truncation). `1.999` at scale 2 renders as `1.99`.
    TowardZero,
    /// Round to nearest, ties to the even last digit.
    HalfEven,
}

impl fmt::Display for Rounding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rounding::TowardZero => "toward-zero",
            Rounding::HalfEven => "half-even",
        })
    }
}

/// A decimal string with exactly `scale` fractional digits, plus the recipe
/// that produced it. Re-parsing the string recovers the source rational to
/// within `10^(−scale)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecimalRendering {
    digits: String,
    scale: u32,
    rounding: Rounding,
}

impl DecimalRendering {
    /// The rendered string, e.g. `"3.1415"` or `"-0.25"`.
    pub fn digits(&self) -> &str {
        &self.digits
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn rounding(&self) -> Rounding {
        self.rounding
    }

    /// The rational the rendered string denotes exactly.
    pub fn to_rational(&self) -> Rat {
        let (sign, body) = match self.digits.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, self.digits.as_str()),
        };
        let unscaled: Int = body
            .chars()
            .filter(|c| *c != '.')
            .fold(Int::zero(), |acc, c| {
                acc * 10 + c.to_digit(10).expect("rendering holds only digits")
            });
        Rat::new(unscaled * sign, pow10(self.scale))
    }
}

impl fmt::Display for DecimalRendering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.digits)
    }
}

/// Renders `x` with exactly `scale` fractional digits.
///
/// A value that rounds to zero is rendered without a sign (no `-0.000`).
///
/// # Errors
///
/// [`Error::ScaleTooLarge`] if `scale > MAX_SCALE`.
///
/// ```
/// use madhava::{rat, to_decimal, Rounding};
/// let third = rat(1, 3).unwrap();
/// assert_eq!(to_decimal(&third, 4, Rounding::TowardZero).unwrap().digits(), "0.3333");
/// ```
pub fn to_decimal(x: &Rat, scale: u32, rounding: Rounding) -> Result<DecimalRendering> {
    if scale > MAX_SCALE {
        return Err(Error::ScaleTooLarge {
            scale,
            max: MAX_SCALE,
        });
    }
    let negative = x.is_negative();
    let abs = x.abs();
    let num = abs.numer() * pow10(scale);
    let (mut q, r) = num.div_rem(abs.denom());
    if rounding == Rounding::HalfEven {
        let twice = &r * 2;
        let den = abs.denom();
        if &twice > den || (&twice == den && q.is_odd()) {
            q += 1;
        }
    }
    let (int_part, frac_part) = q.div_rem(&pow10(scale));
    let sign = if negative && !q.is_zero() { "-" } else { "" };
    let digits = if scale == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{:0>width$}", frac_part, width = scale as usize)
    };
    Ok(DecimalRendering {
        digits,
        scale,
        rounding,
    })
}
