//! Remainder correctors for the Mādhava-Leibniz series.
//!
//! Writing φ = π/4 and S_n for the n-th partial sum, the remainder magnitude
//! ρ_n = |φ − S_n| is the limit of a generalized continued fraction in n
//! ([`rho_fraction`]). Truncating that fraction at depth k gives a rational
//! corrector R_n^(k); adding it back with the right sign
//! (4·(S_n + (−1)^n·R_n^(k)), see [`corrected_pi`]) repairs most of the
//! series' famous slowness. The first three convergents have the closed
//! forms 1/(4n), n/(4n²+1) and (n²+1)/((4n²+5)n) — the corrections used by
//! the Kerala school — exposed directly as [`corrector_r1`],
//! [`corrector_r2`], [`corrector_r3`].

use num_traits::{One, Signed, Zero};

use crate::cf::{cf_convergent_exact, ContinuedFraction};
use crate::scalar::Scalar;
use crate::series::{madhava, partial_sum};
use crate::{Error, Int, Rat, Result};

/// Which convergent of the ρ_n fraction a corrector takes (1-based; orders
/// 1, 2, 3 reproduce the three closed forms).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CorrectorOrder {
    k: u64,
}

impl CorrectorOrder {
    /// # Panics
    ///
    /// If `k == 0`; convergents are indexed from 1.
    pub fn new(k: u64) -> Self {
        assert!(k >= 1, "corrector order is indexed from 1");
        Self { k }
    }

    pub fn k(self) -> u64 {
        self.k
    }
}

/// The continued fraction with a_0 = 1/2, a_k = k² (k ≥ 1) and b_k = 2n,
/// whose limit is ρ_n = |π/4 − S_n|.
///
/// All coefficients are positive, so its convergents alternate around ρ_n:
/// odd depths overshoot, even depths undershoot.
///
/// # Panics
///
/// If `n == 0`.
pub fn rho_fraction<T: Scalar>(n: u64) -> ContinuedFraction<T> {
    assert!(n >= 1, "partial-sum rank n is indexed from 1");
    ContinuedFraction::new(
        format!("rho({n})"),
        |k| {
            if k == 0 {
                T::one() / T::of_u64(2)
            } else {
                T::of_u64(k) * T::of_u64(k)
            }
        },
        move |_| T::of_u64(2) * T::of_u64(n),
    )
}

/// The same fraction written with quartered coefficients: a_0 = 1/4,
/// a_k = k²/4, b_k = n. An equivalence transformation (scaling every level
/// by 1/2) turns one form into the other, so the two have *identical*
/// convergents level by level — exact equality, which the tests assert.
///
/// # Panics
///
/// If `n == 0`.
pub fn rho_fraction_quarter<T: Scalar>(n: u64) -> ContinuedFraction<T> {
    assert!(n >= 1, "partial-sum rank n is indexed from 1");
    ContinuedFraction::new(
        format!("rho({n}) quarter"),
        |k| {
            if k == 0 {
                T::one() / T::of_u64(4)
            } else {
                T::of_u64(k) * T::of_u64(k) / T::of_u64(4)
            }
        },
        move |_| T::of_u64(n),
    )
}

/// R_n^(k): the k-th convergent of [`rho_fraction`]`(n)`, exactly.
///
/// # Panics
///
/// If `n == 0` or `order` was constructed with k = 0 (impossible through
/// [`CorrectorOrder::new`]).
pub fn corrector(n: u64, order: CorrectorOrder) -> Rat {
    cf_convergent_exact(&rho_fraction::<Rat>(n), order.k())
        .expect("every b_k is 2n ≥ 2 and every tail is ≥ 0, so no backward denominator vanishes")
}

/// R_n^(1) = 1/(4n).
///
/// # Panics
///
/// If `n == 0`.
pub fn corrector_r1(n: u64) -> Rat {
    assert!(n >= 1, "partial-sum rank n is indexed from 1");
    Rat::new(Int::one(), Int::from(n) * 4u32)
}

/// R_n^(2) = n/(4n²+1).
///
/// # Panics
///
/// If `n == 0`.
pub fn corrector_r2(n: u64) -> Rat {
    assert!(n >= 1, "partial-sum rank n is indexed from 1");
    let n = Int::from(n);
    Rat::new(n.clone(), &n * &n * 4u32 + 1u32)
}

/// R_n^(3) = (n²+1)/((4n²+5)·n).
///
/// # Panics
///
/// If `n == 0`.
pub fn corrector_r3(n: u64) -> Rat {
    assert!(n >= 1, "partial-sum rank n is indexed from 1");
    let n = Int::from(n);
    let sq = &n * &n;
    Rat::new(&sq + 1u32, (sq * 4u32 + 5u32) * n)
}

/// The corrected approximation 4·(S_n + (−1)^n·R_n^(k)).
///
/// # Panics
///
/// If `n == 0`.
pub fn corrected_pi(n: u64, order: CorrectorOrder) -> Rat {
    let s_n = partial_sum(&madhava(), n);
    let r = corrector(n, order);
    let corrected = if n % 2 == 0 { s_n + r } else { s_n - r };
    corrected * Rat::from_integer(4.into())
}

/// The depth-indexed classical special case at n = 1:
/// 4·(1 − depth-th convergent of ρ_1) = 3, 16/5, 28/9, … → π.
///
/// This is Brouncker's fraction for π, read as a corrected one-term partial
/// sum; its convergence is very slow (the error decays only polynomially in
/// depth), which is why the correctors are applied at large n instead.
///
/// # Panics
///
/// If `depth == 0`.
pub fn brouncker_pi(depth: u64) -> Rat {
    let convergent = cf_convergent_exact(&rho_fraction::<Rat>(1), depth)
        .expect("positive coefficients cannot produce a zero denominator");
    Rat::from_integer(4.into()) * (Rat::one() - convergent)
}

/// Reconstructs the innermost correction f_n that makes the classical
/// rational π value 62832/20000 exact at partial-sum rank n:
///
/// ```text
/// |62832/(4·20000) − S_n| = 1/(4n + 1/(n + 1/(n + f_n)))
/// ```
///
/// solved by peeling the three levels: with d the left-hand side,
/// x₀ = 1/d − 4n, x₁ = 1/x₀ − n, f_n = 1/x₁ − n. Each intermediate must be
/// strictly positive for the nested shape to be meaningful; for n in 1..=4
/// all are, and f_n lands in (0, 1).
///
/// # Panics
///
/// If `n` is outside 1..=4 (the relation is only claimed on that range; at
/// n = 5 the would-be f_n already exceeds 1).
///
/// # Errors
///
/// [`Error::ResidualInversion`] naming the level whose intermediate came out
/// zero or negative — which would falsify the reconstruction.
pub fn historical_residual(n: u64) -> Result<Rat> {
    assert!(
        (1..=4).contains(&n),
        "the reconstruction is defined for n in 1..=4"
    );
    let classical_quarter = Rat::new(Int::from(3927), Int::from(5000));
    let mut x = (classical_quarter - partial_sum(&madhava(), n)).abs();
    let four_n = Rat::from_integer(Int::from(n) * 4u32);
    let n_rat = Rat::from_integer(Int::from(n));
    for (level, shift) in [&four_n, &n_rat, &n_rat].into_iter().enumerate() {
        if x.is_zero() {
            return Err(Error::ResidualInversion {
                n,
                level: level as u32,
            });
        }
        x = x.recip() - shift;
        if !x.is_positive() {
            return Err(Error::ResidualInversion {
                n,
                level: level as u32,
            });
        }
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cf::cf_convergent;
    use crate::rat;
    use crate::series::pi_enclosure;

    #[test]
    fn convergents_match_the_closed_forms() {
        for n in 1..=50 {
            assert_eq!(corrector(n, CorrectorOrder::new(1)), corrector_r1(n));
            assert_eq!(corrector(n, CorrectorOrder::new(2)), corrector_r2(n));
            assert_eq!(corrector(n, CorrectorOrder::new(3)), corrector_r3(n));
        }
    }

    #[test]
    fn pinned_corrector_values() {
        assert_eq!(corrector(1, CorrectorOrder::new(1)), rat(1, 4).unwrap());
        assert_eq!(corrector(1, CorrectorOrder::new(2)), rat(1, 5).unwrap());
        assert_eq!(corrector(1, CorrectorOrder::new(3)), rat(2, 9).unwrap());
        assert_eq!(corrector(2, CorrectorOrder::new(3)), rat(5, 42).unwrap());
        assert_eq!(corrector(5, CorrectorOrder::new(2)), rat(5, 101).unwrap());
    }

    #[test]
    fn both_fraction_forms_have_identical_convergents() {
        for n in 1..=5 {
            let normalized = rho_fraction::<Rat>(n);
            let quarter = rho_fraction_quarter::<Rat>(n);
            for depth in 1..=8 {
                assert_eq!(
                    cf_convergent(&normalized, depth).unwrap(),
                    cf_convergent(&quarter, depth).unwrap(),
                    "n={n} depth={depth}"
                );
            }
        }
    }

    #[test]
    fn corrected_values_by_hand() {
        assert_eq!(corrected_pi(1, CorrectorOrder::new(1)), rat(3, 1).unwrap());
        assert_eq!(corrected_pi(1, CorrectorOrder::new(2)), rat(16, 5).unwrap());
        assert_eq!(
            corrected_pi(10, CorrectorOrder::new(2)),
            rat(18329179552i64, 5834363535i64).unwrap()
        );
    }

    #[test]
    fn third_order_correction_at_n20_is_good_to_nine_decimals() {
        let approx = corrected_pi(20, CorrectorOrder::new(3));
        let reference = pi_enclosure(&rat(1, 1_000_000_000_000i64).unwrap());
        assert!(reference.abs_distance_to(&approx) < rat(1, 1_000_000_000i64).unwrap());
    }

    #[test]
    fn classical_depth_indexed_values() {
        assert_eq!(brouncker_pi(1), rat(3, 1).unwrap());
        assert_eq!(brouncker_pi(2), rat(16, 5).unwrap());
        assert_eq!(brouncker_pi(3), rat(28, 9).unwrap());
        assert_eq!(brouncker_pi(10), rat(262144, 83349).unwrap());
    }

    #[test]
    fn historical_reconstruction_values() {
        assert_eq!(historical_residual(1).unwrap(), rat(343, 365).unwrap());
        assert_eq!(historical_residual(2).unwrap(), rat(198, 277).unwrap());
        assert_eq!(historical_residual(3).unwrap(), rat(63, 103).unwrap());
        assert_eq!(historical_residual(4).unwrap(), rat(108, 355).unwrap());
        for n in 1..=4 {
            let f = historical_residual(n).unwrap();
            assert!(f.is_positive() && f < Rat::one(), "f_{n} must be in (0,1)");
        }
    }

    #[test]
    #[should_panic(expected = "1..=4")]
    fn reconstruction_is_limited_to_the_claimed_range() {
        let _ = historical_residual(5);
    }

    #[test]
    #[should_panic(expected = "indexed from 1")]
    fn order_zero_is_rejected() {
        let _ = CorrectorOrder::new(0);
    }

    #[test]
    #[should_panic(expected = "indexed from 1")]
    fn rank_zero_is_rejected() {
        let _ = corrector_r1(0);
    }
}
