//! The corrector-driven series transformation and the "quality" of a
//! corrector family.
//!
//! Given an alternating series with term magnitudes u_p and any family of
//! remainder correctors R_n → 0, the transformed series
//!
//! ```text
//! S″_n = (u_1 − R_1) + Σ_{p=1}^{n} (−1)^(p−1)·v_p,
//! v_p  = (R_p + R_{p+1}) − u_{p+1}
//! ```
//!
//! telescopes exactly to S_{n+1} + (−1)^(n+1)·R_{n+1}: it is the corrected
//! partial sum in disguise, but written as a single new series. The better
//! R_n tracks the true remainder, the faster the new terms shrink — with the
//! convergent correctors of the `corrector` module the terms fall off as
//! p⁻³, p⁻⁵ and p⁻⁷ (their closed forms are [`v1_closed`], [`v2_closed`],
//! [`v3_closed`]; the resulting series are tabulated in `accelerated`).
//!
//! How closely R_n tracks ρ_n is measured by the quality
//! ε_n = R_n/ρ_n − 1, computed only as an [`Enclosure`] since ρ_n is
//! irrational; the transformed error obeys |S″_n − φ| = |ε_{n+1}|·|S_{n+1} − φ|.

use std::fmt;
use std::sync::Arc;

use num_traits::One;

use crate::corrector::{corrector, CorrectorOrder};
use crate::enclosure::Enclosure;
use crate::series::{madhava, remainder_magnitude, AlternatingSeries};
use crate::{Error, Int, Rat, Result};

type RatFn = Arc<dyn Fn(u64) -> Rat + Send + Sync>;

/// A family n ↦ R_n of remainder correctors. The transform is stated for any
/// family with R_n → 0, not only the continued-fraction convergents.
pub struct CorrectorFamily {
    name: String,
    r: RatFn,
}

impl Clone for CorrectorFamily {
    fn clone(&self) -> Self {
        Self {
            name: self.name.clone(),
            r: Arc::clone(&self.r),
        }
    }
}

impl fmt::Debug for CorrectorFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CorrectorFamily")
            .field("name", &self.name)
            .finish_non_exhaustive()
    }
}

impl CorrectorFamily {
    pub fn new(name: impl Into<String>, r: impl Fn(u64) -> Rat + Send + Sync + 'static) -> Self {
        Self {
            name: name.into(),
            r: Arc::new(r),
        }
    }

    /// The family of order-k convergent correctors, n ↦ R_n^(k).
    pub fn convergent(order: CorrectorOrder) -> Self {
        Self::new(format!("convergent-{}", order.k()), move |n| {
            corrector(n, order)
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// R_n.
    ///
    /// # Panics
    ///
    /// If `n == 0`.
    pub fn r(&self, n: u64) -> Rat {
        assert!(n >= 1, "corrector families are indexed from 1");
        (self.r)(n)
    }
}

/// The transformed series: a constant plus a new alternating-sign sum whose
/// signed terms are v_p.
pub struct TransformedSeries {
    constant: Rat,
    term: RatFn,
    source: String,
}

impl Clone for TransformedSeries {
    fn clone(&self) -> Self {
        Self {
            constant: self.constant.clone(),
            term: Arc::clone(&self.term),
            source: self.source.clone(),
        }
    }
}

impl fmt::Debug for TransformedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TransformedSeries")
            .field("source", &self.source)
            .field("constant", &self.constant)
            .finish_non_exhaustive()
    }
}

impl TransformedSeries {
    /// u_1 − R_1.
    pub fn constant(&self) -> &Rat {
        &self.constant
    }

    /// Which series/corrector pair this came from.
    pub fn source(&self) -> &str {
        &self.source
    }

    /// v_p = (R_p + R_{p+1}) − u_{p+1}. Signed: a corrector family that
    /// undershoots the remainder produces negative terms.
    ///
    /// # Panics
    ///
    /// If `p == 0`.
    pub fn term(&self, p: u64) -> Rat {
        assert!(p >= 1, "transformed terms are indexed from 1");
        (self.term)(p)
    }

    /// S″_n = constant + Σ_{p=1}^{n} (−1)^(p−1)·v_p; n = 0 gives the bare
    /// constant.
    pub fn partial_value(&self, n: u64) -> Rat {
        let mut acc = self.constant.clone();
        for p in 1..=n {
            let v = self.term(p);
            acc = if p % 2 == 1 { acc + v } else { acc - v };
        }
        acc
    }

    /// `[S″_0, S″_1, …, S″_n]` (length n + 1), computed incrementally.
    pub fn partial_values(&self, n: u64) -> Vec<Rat> {
        let mut out = Vec::with_capacity(n as usize + 1);
        let mut acc = self.constant.clone();
        out.push(acc.clone());
        for p in 1..=n {
            let v = self.term(p);
            acc = if p % 2 == 1 { acc + v } else { acc - v };
            out.push(acc.clone());
        }
        out
    }
}

/// Builds the transformed series for the pair (u, R).
pub fn transform(u: &AlternatingSeries<Rat>, family: &CorrectorFamily) -> TransformedSeries {
    let constant = u.term(1) - family.r(1);
    let source = format!("{} via {}", u.name(), family.name());
    let u = u.clone();
    let family = family.clone();
    TransformedSeries {
        constant,
        term: Arc::new(move |p| family.r(p) + family.r(p + 1) - u.term(p + 1)),
        source,
    }
}

/// Closed form of v_p for the order-1 corrector family on the
/// Mādhava-Leibniz series:
/// (R_p^(1) + R_{p+1}^(1)) − 1/(2p+1) = 1/((2p+1)³ − (2p+1)), exactly.
///
/// # Panics
///
/// If `p == 0`.
pub fn v1_closed(p: u64) -> Rat {
    assert!(p >= 1, "transformed terms are indexed from 1");
    let q = Int::from(p) * 2u32 + 1u32;
    Rat::new(Int::one(), q.pow(3) - q)
}

/// Closed form of v_p for the order-2 family:
/// (R_p^(2) + R_{p+1}^(2)) − 1/(2p+1) = −4/((2p+1)⁵ + 4(2p+1)), exactly.
///
/// Note the sign: even-depth convergents approximate ρ_n from below, so
/// R_p^(2) + R_{p+1}^(2) falls short of ρ_p + ρ_{p+1} = 1/(2p+1) and every
/// v_p is negative (at p = 1: 1/5 + 2/17 − 1/3 = −4/255).
///
/// # Panics
///
/// If `p == 0`.
pub fn v2_closed(p: u64) -> Rat {
    assert!(p >= 1, "transformed terms are indexed from 1");
    let q = Int::from(p) * 2u32 + 1u32;
    Rat::new(Int::from(-4), q.pow(5) + q * 4u32)
}

/// Closed form of v_p for the order-3 family:
/// (R_p^(3) + R_{p+1}^(3)) − 1/(2p+1)
///   = 9/(p(p+1)(2p+1)(4p²+5)(4p²+8p+9)), exactly.
///
/// # Panics
///
/// If `p == 0`.
pub fn v3_closed(p: u64) -> Rat {
    assert!(p >= 1, "transformed terms are indexed from 1");
    let p = Int::from(p);
    let sq4 = &p * &p * 4u32;
    let den = (&p + 1u32) * &p * (&p * 2u32 + 1u32) * (&sq4 + 5u32) * (sq4 + &p * 8u32 + 9u32);
    Rat::new(Int::from(9), den)
}

/// Enclosure of the quality ε_n = R_n/ρ_n − 1 of a corrector family on the
/// Mādhava-Leibniz series, where `limit` is an enclosure of the series limit
/// π/4. Exact interval arithmetic throughout: the result certifies the sign
/// and magnitude of ε_n to the precision `limit` affords.
///
/// # Errors
///
/// [`Error::QualityUndefined`] when the ρ_n enclosure contains zero — the
/// division is then meaningless at this precision and the caller must pass a
/// tighter `limit`.
///
/// # Panics
///
/// If `n == 0`.
pub fn quality(family: &CorrectorFamily, n: u64, limit: &Enclosure) -> Result<Enclosure> {
    let rho = remainder_magnitude(&madhava(), n, limit);
    let inverse = rho.recip().ok_or(Error::QualityUndefined)?;
    let minus_one = -Rat::one();
    Ok(inverse.scale(&family.r(n)).shift(&minus_one))
}

/// A corrector family paired with a fixed limit enclosure, exposing the map
/// n ↦ ε_n.
#[derive(Debug, Clone)]
pub struct QualitySequence {
    family: CorrectorFamily,
    limit: Enclosure,
}

impl QualitySequence {
    /// `limit` must enclose π/4.
    pub fn new(family: CorrectorFamily, limit: Enclosure) -> Self {
        Self { family, limit }
    }

    pub fn family(&self) -> &CorrectorFamily {
        &self.family
    }

    pub fn limit(&self) -> &Enclosure {
        &self.limit
    }

    /// Enclosure of ε_n; see [`quality`].
    pub fn epsilon(&self, n: u64) -> Result<Enclosure> {
        quality(&self.family, n, &self.limit)
    }
}
