//! Generalized continued fractions and their exact convergents.
//!
//! A generalized continued fraction is given by two coefficient sequences
//! `(a_k)` and `(b_k)`, both indexed from 0:
//!
//! ```text
//!         a_0
//!   ─────────────────
//!   b_0 +     a_1
//!         ───────────
//!         b_1 +  a_2
//!               ─────
//!               b_2 + ⋱
//! ```
//!
//! The depth-`d` convergent truncates the tower after `b_{d−1}`. When every
//! `a_k` and `b_k` is positive, consecutive convergents alternate around the
//! limit (by excess at odd depth, by defect at even depth), which is what
//! makes them usable as certified one-sided remainder estimates.

use std::fmt;
use std::sync::Arc;

use crate::scalar::Scalar;
use crate::{Error, Int, Rat, Result};

type Coeff<T> = Arc<dyn Fn(u64) -> T + Send + Sync>;

/// A generalized continued fraction, defined by its coefficient functions.
///
/// The coefficient functions must be deterministic: evaluating the same index
/// twice must give the same value, since the evaluator is free to re-query.
pub struct ContinuedFraction<T> {
    name: String,
    partial_numerator: Coeff<T>,
    partial_denominator: Coeff<T>,
}

impl<T> Clone for ContinuedFraction<T> {
    fn clone(&self) -> Self {
        Self {
            name: self.name.clone(),
            partial_numerator: Arc::clone(&self.partial_numerator),
            partial_denominator: Arc::clone(&self.partial_denominator),
        }
    }
}

impl<T> fmt::Debug for ContinuedFraction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ContinuedFraction")
            .field("name", &self.name)
            .finish_non_exhaustive()
    }
}

impl<T: Scalar> ContinuedFraction<T> {
    pub fn new(
        name: impl Into<String>,
        partial_numerator: impl Fn(u64) -> T + Send + Sync + 'static,
        partial_denominator: impl Fn(u64) -> T + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            partial_numerator: Arc::new(partial_numerator),
            partial_denominator: Arc::new(partial_denominator),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// `a_k`.
    pub fn partial_numerator(&self, k: u64) -> T {
        (self.partial_numerator)(k)
    }

    /// `b_k`.
    pub fn partial_denominator(&self, k: u64) -> T {
        (self.partial_denominator)(k)
    }
}

/// The depth-`depth` convergent, evaluated by backward recurrence: start with
/// the innermost tail `t = a_{depth−1}/b_{depth−1}`, then fold outward with
/// `t ← a_j/(b_j + t)` for `j = depth−2` down to `0`.
///
/// The tail is carried as a numerator/denominator pair in `T`, deferring
/// the closing division to the very end. Note that for `T = `[`crate::Rat`]
/// each pair operation still re-normalizes inside the rational type, which
/// costs a gcd per level; depth in the thousands should go through
/// [`cf_convergent_exact`], which clears the coefficients into a gcd-free
/// integer pair instead.
///
/// # Panics
///
/// If `depth == 0`; convergents are indexed from depth 1.
///
/// # Errors
///
/// [`Error::CfZeroDenominator`] naming the level `j` whose backward
/// denominator `b_j + t` (or `b_{depth−1}` itself) vanished. Fractions with
/// all-positive coefficients never trigger this.
pub fn cf_convergent<T: Scalar>(cf: &ContinuedFraction<T>, depth: u64) -> Result<T> {
    assert!(depth >= 1, "convergents are indexed from depth 1");
    let mut num = cf.partial_numerator(depth - 1);
    let mut den = cf.partial_denominator(depth - 1);
    if den.is_zero() {
        return Err(Error::CfZeroDenominator { level: depth - 1 });
    }
    for j in (0..depth - 1).rev() {
        // t_j = a_j / (b_j + num/den) = (a_j·den) / (b_j·den + num)
        let next_den = cf.partial_denominator(j) * den.clone() + num;
        if next_den.is_zero() {
            return Err(Error::CfZeroDenominator { level: j });
        }
        num = cf.partial_numerator(j) * den;
        den = next_den;
    }
    Ok(num / den)
}

/// The depth-`depth` convergent of a rational-coefficient fraction, by the
/// same backward recurrence as [`cf_convergent`] but on a raw big-integer
/// pair: each level's coefficients are cleared into the pair without any
/// normalization, and the one real reduction happens in the final division.
///
/// The generic evaluator re-normalizes after every rational operation —
/// fine at corrector depths, quadratic pain at depth 10³ and beyond (three
/// seconds at depth 2000 versus milliseconds here). Everything pinned to
/// [`Rat`] routes through this.
///
/// # Panics
///
/// If `depth == 0`; convergents are indexed from depth 1.
///
/// # Errors
///
/// [`Error::CfZeroDenominator`] under exactly the same conditions as
/// [`cf_convergent`], naming the same level.
pub fn cf_convergent_exact(cf: &ContinuedFraction<Rat>, depth: u64) -> Result<Rat> {
    use num_traits::Zero;

    assert!(depth >= 1, "convergents are indexed from depth 1");
    // Innermost tail a/b as the integer pair (an·bd, ad·bn).
    let a = cf.partial_numerator(depth - 1);
    let b = cf.partial_denominator(depth - 1);
    if b.is_zero() {
        return Err(Error::CfZeroDenominator { level: depth - 1 });
    }
    let mut num: Int = a.numer() * b.denom();
    let mut den: Int = a.denom() * b.numer();
    for j in (0..depth - 1).rev() {
        // t ← a_j/(b_j + num/den) = (an·bd·den) / (ad·(bn·den + bd·num))
        let a = cf.partial_numerator(j);
        let b = cf.partial_denominator(j);
        let folded = b.numer() * &den + b.denom() * &num;
        if folded.is_zero() {
            return Err(Error::CfZeroDenominator { level: j });
        }
        num = a.numer() * b.denom() * den;
        den = a.denom() * folded;
    }
    Ok(Rat::new(num, den))
}
