//! The numeric domain of the generic algorithm layer.

use num_traits::{FromPrimitive, Num, Signed};

/// Number type the generic algorithms (partial sums, continued-fraction
/// convergents, the series transform, Aitken's Δ²) compute in.
///
/// Implemented by anything that is a signed field-like numeric with
/// primitive conversions — in particular [`crate::Rat`] (exact) and `f64`
/// (approximate, for scouting). The certification layer does not accept
/// this trait; it is pinned to [`crate::Rat`] on purpose.
pub trait Scalar: Clone + PartialOrd + Num + Signed + FromPrimitive {
    /// Converts a term index or small coefficient.
    ///
    /// Exact for integer-backed scalars; for `f64` it is the usual lossy
    /// conversion (exact below 2⁵³), which is fine for scouting use.
    fn of_u64(v: u64) -> Self {
        Self::from_u64(v).expect("u64 must convert into the scalar")
    }
}

impl<T: Clone + PartialOrd + Num + Signed + FromPrimitive> Scalar for T {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    #[test]
    fn conversions_agree_across_scalars() {
        assert_eq!(Rat::of_u64(41), crate::rat(41, 1).unwrap());
        assert_eq!(f64::of_u64(41), 41.0);
    }
}
