//! Certified intervals over exact rationals.
//!
//! An [`Enclosure`] is a closed interval `[lower, upper]` asserted to contain
//! some real value (typically π or a series limit that is not itself
//! rational). Because the endpoints are exact rationals, every derived bound
//! — widths, distances, arithmetic images — is itself exact, so claims like
//! "this approximation is within 2.5·10⁻¹² of the limit" are theorems, not
//! floating-point estimates.

use num_traits::{Signed, Zero};

use crate::{Error, Rat, Result};

/// A closed interval `[lower, upper]` with exact rational endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enclosure {
    lower: Rat,
    upper: Rat,
}

impl Enclosure {
    /// Builds `[lower, upper]`.
    ///
    /// # Errors
    ///
    /// [`Error::InvalidEnclosure`] if `lower > upper`.
    pub fn new(lower: Rat, upper: Rat) -> Result<Self> {
        if lower > upper {
            return Err(Error::InvalidEnclosure);
        }
        Ok(Self { lower, upper })
    }

    /// The degenerate interval `[x, x]`.
    pub fn point(x: Rat) -> Self {
        Self {
            lower: x.clone(),
            upper: x,
        }
    }

    pub fn lower(&self) -> &Rat {
        &self.lower
    }

    pub fn upper(&self) -> &Rat {
        &self.upper
    }

    /// `upper − lower`.
    pub fn width(&self) -> Rat {
        &self.upper - &self.lower
    }

    /// `(lower + upper) / 2`.
    pub fn midpoint(&self) -> Rat {
        (&self.lower + &self.upper) / Rat::from_integer(2.into())
    }

    pub fn contains(&self, x: &Rat) -> bool {
        &self.lower <= x && x <= &self.upper
    }

    /// Whether every point of `other` lies in `self`.
    pub fn contains_enclosure(&self, other: &Enclosure) -> bool {
        self.lower <= other.lower && other.upper <= self.upper
    }

    /// The common refinement of two enclosures of the same value.
    ///
    /// `None` if they are disjoint — which, for enclosures that genuinely
    /// bound the same value, means one of them is wrong.
    pub fn intersect(&self, other: &Enclosure) -> Option<Enclosure> {
        let lower = if self.lower >= other.lower {
            self.lower.clone()
        } else {
            other.lower.clone()
        };
        let upper = if self.upper <= other.upper {
            self.upper.clone()
        } else {
            other.upper.clone()
        };
        (lower <= upper).then_some(Enclosure { lower, upper })
    }

    /// An upper bound on `|x − v|` valid for every `v` in the enclosure:
    /// the distance from `x` to the farther endpoint.
    pub fn abs_distance_to(&self, x: &Rat) -> Rat {
        let to_lower = (x - &self.lower).abs();
        let to_upper = (x - &self.upper).abs();
        if to_lower >= to_upper {
            to_lower
        } else {
            to_upper
        }
    }

    /// A lower bound on `|x − v|` valid for every `v` in the enclosure:
    /// zero if `x` lies inside, else the distance to the nearer endpoint.
    pub fn min_abs_distance_to(&self, x: &Rat) -> Rat {
        if self.contains(x) {
            return Rat::zero();
        }
        let to_lower = (x - &self.lower).abs();
        let to_upper = (x - &self.upper).abs();
        if to_lower <= to_upper {
            to_lower
        } else {
            to_upper
        }
    }

    /// Pointwise sum: encloses `u + v` whenever `self` encloses `u` and
    /// `other` encloses `v`.
    pub fn add(&self, other: &Enclosure) -> Enclosure {
        Enclosure {
            lower: &self.lower + &other.lower,
            upper: &self.upper + &other.upper,
        }
    }

    /// Encloses `v + c`.
    pub fn shift(&self, c: &Rat) -> Enclosure {
        Enclosure {
            lower: &self.lower + c,
            upper: &self.upper + c,
        }
    }

    /// Encloses `c·v` (endpoints swap when `c` is negative).
    pub fn scale(&self, c: &Rat) -> Enclosure {
        let a = &self.lower * c;
        let b = &self.upper * c;
        if a <= b {
            Enclosure { lower: a, upper: b }
        } else {
            Enclosure { lower: b, upper: a }
        }
    }

    /// Encloses `−v`.
    pub fn neg(&self) -> Enclosure {
        Enclosure {
            lower: -&self.upper,
            upper: -&self.lower,
        }
    }

    /// Encloses `|v|`.
    pub fn abs(&self) -> Enclosure {
        if self.lower.is_negative() && self.upper.is_positive() {
            let tail = if -&self.lower >= self.upper {
                -&self.lower
            } else {
                self.upper.clone()
            };
            Enclosure {
                lower: Rat::zero(),
                upper: tail,
            }
        } else if self.upper.is_negative() || self.upper.is_zero() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Encloses `u·v` (all four endpoint products considered).
    pub fn mul(&self, other: &Enclosure) -> Enclosure {
        let products = [
            &self.lower * &other.lower,
            &self.lower * &other.upper,
            &self.upper * &other.lower,
            &self.upper * &other.upper,
        ];
        let mut lower = products[0].clone();
        let mut upper = products[0].clone();
        for p in &products[1..] {
            if p < &lower {
                lower = p.clone();
            }
            if p > &upper {
                upper = p.clone();
            }
        }
        Enclosure { lower, upper }
    }

    /// Encloses `1/v`, or `None` when the interval contains zero (where the
    /// reciprocal is unbounded).
    pub fn recip(&self) -> Option<Enclosure> {
        if self.contains(&Rat::zero()) {
            return None;
        }
        Some(Enclosure {
            lower: self.upper.recip(),
            upper: self.lower.recip(),
        })
    }
}
