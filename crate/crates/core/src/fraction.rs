//! Exact non-negative rational numbers.
//!
//! Memberships, supports and confidences are all ratios of small integers;
//! keeping them exact is what makes the normalization identity
//! (sum of level-k group supports = |M|) and the confidence identity
//! (confidence * support(A) = support(A ∪ B)) hold without tolerances.
//! Decimal rendering (round-half-up) happens only at output boundaries.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul};
use std::str::FromStr;

use num::rational::Ratio;
use num::{One, ToPrimitive, Zero};
use thiserror::Error;

/// A non-negative rational value, always stored in lowest terms.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fraction(Ratio<i64>);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FractionParseError {
    #[error("empty fraction literal")]
    Empty,
    #[error("invalid fraction literal `{0}`")]
    Invalid(String),
    #[error("fraction `{0}` has a zero denominator")]
    ZeroDenominator(String),
    #[error("fraction `{0}` is negative")]
    Negative(String),
}

impl Fraction {
    /// Exact `num / den`. Panics if `den` is zero or the value is negative;
    /// the mining pipeline never produces either.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "fraction denominator must be nonzero");
        let r = Ratio::new(num, den);
        assert!(r >= Ratio::zero(), "fraction must be non-negative");
        Fraction(r)
    }

    pub fn zero() -> Self {
        Fraction(Ratio::zero())
    }

    pub fn one() -> Self {
        Fraction(Ratio::one())
    }

    pub fn from_integer(n: u32) -> Self {
        Fraction(Ratio::from_integer(i64::from(n)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn numerator(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denominator(&self) -> i64 {
        *self.0.denom()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().expect("ratio of i64 converts to f64")
    }

    /// Renders with `places` decimal digits, rounding half up.
    /// `49/15` at two places is `"3.27"`, `1/8` is `"0.13"`.
    pub fn to_decimal(&self, places: u32) -> String {
        let scale = 10i64.pow(places);
        let num = self.numerator();
        let den = self.denominator();
        // floor((2 * num * scale + den) / (2 * den)) rounds half up for num >= 0
        let units = (2 * num * scale + den) / (2 * den);
        if places == 0 {
            return units.to_string();
        }
        format!(
            "{}.{:0width$}",
            units / scale,
            units % scale,
            width = places as usize
        )
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator(), self.denominator())
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for Fraction {
    type Output = Fraction;
    fn add(self, rhs: Fraction) -> Fraction {
        Fraction(self.0 + rhs.0)
    }
}

impl AddAssign for Fraction {
    fn add_assign(&mut self, rhs: Fraction) {
        self.0 += rhs.0;
    }
}

impl Mul for Fraction {
    type Output = Fraction;
    fn mul(self, rhs: Fraction) -> Fraction {
        Fraction(self.0 * rhs.0)
    }
}

impl Div for Fraction {
    type Output = Fraction;
    fn div(self, rhs: Fraction) -> Fraction {
        assert!(!rhs.is_zero(), "division by zero fraction");
        Fraction(self.0 / rhs.0)
    }
}

impl Sum for Fraction {
    fn sum<I: Iterator<Item = Fraction>>(iter: I) -> Fraction {
        iter.fold(Fraction::zero(), Add::add)
    }
}

impl FromStr for Fraction {
    type Err = FractionParseError;

    /// Accepts `"n/d"`, integers (`"2"`) and plain decimals (`"0.33"`, `"1.1"`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(FractionParseError::Empty);
        }
        let invalid = || FractionParseError::Invalid(s.to_string());
        let value = if let Some((num, den)) = s.split_once('/') {
            let num: i64 = num.trim().parse().map_err(|_| invalid())?;
            let den: i64 = den.trim().parse().map_err(|_| invalid())?;
            if den == 0 {
                return Err(FractionParseError::ZeroDenominator(s.to_string()));
            }
            Ratio::new(num, den)
        } else if let Some((int, frac)) = s.split_once('.') {
            let int: i64 = if int.is_empty() {
                0
            } else {
                int.parse().map_err(|_| invalid())?
            };
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(invalid());
            }
            let scale = 10i64.checked_pow(frac.len() as u32).ok_or_else(invalid)?;
            let frac_digits: i64 = frac.parse().map_err(|_| invalid())?;
            Ratio::new(
                int * scale + if int < 0 { -frac_digits } else { frac_digits },
                scale,
            )
        } else {
            let n: i64 = s.parse().map_err(|_| invalid())?;
            Ratio::from_integer(n)
        };
        if value < Ratio::zero() {
            return Err(FractionParseError::Negative(s.to_string()));
        }
        Ok(Fraction(value))
    }
}
