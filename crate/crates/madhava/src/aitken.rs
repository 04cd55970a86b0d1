//! Aitken's Δ² extrapolation on exact sequences, its closed form on the
//! Mādhava-Leibniz partial sums, iteration, and consecutive-term averaging.
//!
//! In exact rational arithmetic Δ² suffers no cancellation; the only failure
//! mode is a literally zero second difference, which is reported as an
//! error rather than guessed around.

use crate::scalar::Scalar;
use crate::series::{madhava, partial_sum};
use crate::{Error, Int, Rat, Result};

/// One Δ² step on the consecutive triple (a, b, c) = (s_{n−2}, s_{n−1}, s_n),
/// in the cancellation-free form c − (c − b)²/((c − b) − (b − a)).
/// `None` when the second difference is zero.
fn delta2_step<T: Scalar>(a: T, b: T, c: T) -> Option<T> {
    let forward = c.clone() - b.clone();
    let second = forward.clone() - (b - a);
    if second.is_zero() {
        return None;
    }
    Some(c - forward.clone() * forward / second)
}

/// Aitken's Δ² at index `n`, from s(n−2), s(n−1), s(n):
///
/// ```text
/// s(n) − (s(n) − s(n−1))² / ((s(n) − s(n−1)) − (s(n−1) − s(n−2)))
/// ```
///
/// algebraically equal to the determinant form
/// (s(n)·s(n−2) − s(n−1)²)/(second difference) wherever both are defined.
///
/// # Panics
///
/// If `n < 3`: the transform needs three consecutive values.
///
/// # Errors
///
/// [`Error::ZeroSecondDifference`] (with `round: 1`) when the second
/// difference vanishes — e.g. on any constant or arithmetic sequence.
pub fn aitken_delta2<T: Scalar>(s: impl Fn(u64) -> T, n: u64) -> Result<T> {
    assert!(n >= 3, "the transform is defined from index 3");
    delta2_step(s(n - 2), s(n - 1), s(n))
        .ok_or(Error::ZeroSecondDifference { round: 1, index: n })
}

/// The closed form of Δ² on the Mādhava-Leibniz partial sums:
/// S_n + (−1)^n·(2n−3)/(4(n−1)(2n−1)).
///
/// Equals `aitken_delta2` on those sums exactly — the correction term is the
/// order-1 corrector family evaluated with a shifted, rescaled index, which
/// is how Δ² and the corrector viewpoint meet.
///
/// # Panics
///
/// If `n < 3`.
pub fn aitken_closed_form_ml(n: u64) -> Rat {
    assert!(n >= 3, "the transform is defined from index 3");
    let correction = Rat::new(
        Int::from(2 * n - 3),
        Int::from(n - 1) * 4u32 * Int::from(2 * n - 1),
    );
    let s_n = partial_sum(&madhava(), n);
    if n % 2 == 0 {
        s_n + correction
    } else {
        s_n - correction
    }
}

/// Applies Δ² `rounds` times. Round r consumes two indices from the front,
/// so its outputs live at indices 2r+1 ..= n; the returned value is the last
/// round's entry at index `n`.
///
/// A sequence that has already collapsed to its limit is treated as a fixed
/// point: a zero second difference on a triple of *equal* values passes the
/// value through unchanged instead of failing (an exactly geometric input is
/// finished after one round; further rounds must not destroy that). A zero
/// second difference with unequal values is still an error, exactly as in
/// [`aitken_delta2`].
///
/// # Panics
///
/// If `rounds == 0` or `n < 2·rounds + 1`.
///
/// # Errors
///
/// [`Error::ZeroSecondDifference`] naming the failing round and index.
pub fn iterated_aitken<T: Scalar>(s: impl Fn(u64) -> T, rounds: u32, n: u64) -> Result<T> {
    assert!(rounds >= 1, "at least one round is required");
    assert!(
        n > 2 * u64::from(rounds),
        "round r needs indices up to 2r+1, so n must be at least 2·rounds + 1"
    );
    // current[i] holds the value at sequence index base + i.
    let mut base = 1u64;
    let mut current: Vec<T> = (1..=n).map(&s).collect();
    for round in 1..=rounds {
        let mut next = Vec::with_capacity(current.len() - 2);
        for i in 2..current.len() {
            let (a, b, c) = (&current[i - 2], &current[i - 1], &current[i]);
            let value = match delta2_step(a.clone(), b.clone(), c.clone()) {
                Some(v) => v,
                None if a == b && b == c => c.clone(),
                None => {
                    return Err(Error::ZeroSecondDifference {
                        round,
                        index: base + i as u64,
                    })
                }
            };
            next.push(value);
        }
        base += 2;
        current = next;
    }
    Ok(current
        .last()
        .cloned()
        .expect("the precondition n ≥ 2·rounds + 1 leaves at least one entry"))
}

/// The average of two consecutive entries, (s(n−1) + s(n))/2. On an
/// alternating sequence that brackets its limit, the mean cancels the
/// leading error term.
///
/// # Panics
///
/// If `n < 2`.
pub fn consecutive_mean<T: Scalar>(s: impl Fn(u64) -> T, n: u64) -> T {
    assert!(n >= 2, "a mean needs two consecutive entries");
    (s(n - 1) + s(n)) / T::of_u64(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    use crate::rat;
    use crate::series::{partial_sums, pi_enclosure};

    fn ml_sums(n: u64) -> Vec<Rat> {
        partial_sums(&madhava(), n)
    }

    #[test]
    fn first_value_and_closed_form_agreement() {
        let sums = ml_sums(40);
        let s = |m: u64| sums[m as usize - 1].clone();
        assert_eq!(aitken_delta2(s, 3).unwrap(), rat(19, 24).unwrap());
        assert_eq!(aitken_closed_form_ml(3), rat(19, 24).unwrap());
        for n in 3..=40 {
            assert_eq!(aitken_delta2(s, n).unwrap(), aitken_closed_form_ml(n));
        }
        // n = 4: correction is (2·4−3)/(4·3·7) = 5/84, added (n even).
        assert_eq!(
            aitken_closed_form_ml(4),
            partial_sum(&madhava(), 4) + rat(5, 84).unwrap()
        );
    }

    #[test]
    fn constant_sequences_are_rejected() {
        let constant = |_: u64| rat(7, 3).unwrap();
        assert_eq!(
            aitken_delta2(constant, 3).unwrap_err(),
            Error::ZeroSecondDifference { round: 1, index: 3 }
        );
        // An arithmetic sequence also has zero second differences.
        let arithmetic = |m: u64| Rat::from_integer(m.into());
        assert_eq!(
            aitken_delta2(arithmetic, 5).unwrap_err(),
            Error::ZeroSecondDifference { round: 1, index: 5 }
        );
    }

    #[test]
    fn geometric_sequences_collapse_to_their_limit() {
        // s(m) = 1 − (1/2)^m → limit exactly 1 in a single application.
        let geometric = |m: u64| Rat::one() - Rat::new(1.into(), Int::from(2).pow(m as u32));
        for n in 3..=6 {
            assert_eq!(aitken_delta2(geometric, n).unwrap(), Rat::one());
        }
        // Round 1 already lands on the limit; round 2 passes it through.
        assert_eq!(iterated_aitken(geometric, 2, 7).unwrap(), Rat::one());
    }

    #[test]
    fn one_round_is_the_plain_transform() {
        let sums = ml_sums(12);
        let s = |m: u64| sums[m as usize - 1].clone();
        for n in 3..=12 {
            assert_eq!(
                iterated_aitken(s, 1, n).unwrap(),
                aitken_delta2(s, n).unwrap()
            );
        }
    }

    #[test]
    fn second_round_improves_on_the_first_at_n7() {
        let sums = ml_sums(7);
        let s = |m: u64| sums[m as usize - 1].clone();
        let once = iterated_aitken(s, 1, 7).unwrap();
        let twice = iterated_aitken(s, 2, 7).unwrap();
        let quarter = rat(1, 4).unwrap();
        let limit = pi_enclosure(&rat(1, 1_000_000_000_000i64).unwrap()).scale(&quarter);
        // Certified strict comparison: the worst case for `twice` still beats
        // the best case for `once`.
        assert!(limit.abs_distance_to(&twice) < limit.min_abs_distance_to(&once));
    }

    #[test]
    fn iterated_zero_second_difference_names_its_round() {
        // Chosen so round 1 succeeds but produces the arithmetic (hence
        // non-constant, zero-second-difference) triple (−1, −3, −5):
        //   Δ²(0,1,3) = −1, Δ²(1,3,6) = −3, Δ²(3,6,81/8) = −5.
        let values = [
            rat(0, 1).unwrap(),
            rat(1, 1).unwrap(),
            rat(3, 1).unwrap(),
            rat(6, 1).unwrap(),
            rat(81, 8).unwrap(),
        ];
        let s = |m: u64| values[m as usize - 1].clone();
        assert_eq!(
            iterated_aitken(s, 1, 5).unwrap(),
            rat(-5, 1).unwrap(),
            "round 1 must succeed"
        );
        assert_eq!(
            iterated_aitken(s, 2, 5).unwrap_err(),
            Error::ZeroSecondDifference { round: 2, index: 5 }
        );
    }

    #[test]
    fn means_of_consecutive_entries() {
        let identity = |m: u64| Rat::from_integer(m.into());
        assert_eq!(consecutive_mean(identity, 5), rat(9, 2).unwrap());
        let constant = |_: u64| rat(7, 3).unwrap();
        assert_eq!(consecutive_mean(constant, 2), rat(7, 3).unwrap());
    }

    #[test]
    #[should_panic(expected = "defined from index 3")]
    fn early_index_is_rejected() {
        let _ = aitken_delta2(|m: u64| Rat::from_integer(m.into()), 2);
    }

    #[test]
    #[should_panic(expected = "2·rounds + 1")]
    fn short_sequences_are_rejected() {
        let _ = iterated_aitken(|m: u64| Rat::from_integer(m.into()), 2, 4);
    }
}
