use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// The weight `alpha` in `A_alpha = alpha D + (1 - alpha) A`, an exact
/// rational in `[0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alpha(Rational);

impl Alpha {
    pub const ZERO: Alpha = Alpha(Ratio::new_raw(0, 1));
    pub const HALF: Alpha = Alpha(Ratio::new_raw(1, 2));

    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::InvalidAlpha("zero denominator".into()));
        }
        Self::from_rational(Ratio::new(numer, denom))
    }

    pub fn from_rational(value: Rational) -> Result<Self> {
        if value < Rational::zero() || value >= Rational::from_integer(1) {
            return Err(Error::InvalidAlpha(format!("{value} is outside [0, 1)")));
        }
        Ok(Self(value))
    }

    pub fn value(self) -> Rational {
        self.0
    }

    pub fn to_f64(self) -> f64 {
        self.0.to_f64().expect("ratio of i64 converts to f64")
    }

    /// Exact test for `alpha = 1/2`.
    pub fn is_half(self) -> bool {
        self.0 == Ratio::new(1, 2)
    }

    pub fn at_least_half(self) -> bool {
        self.0 >= Ratio::new(1, 2)
    }
}

impl fmt::Display for Alpha {
    /// Always `p/q`, e.g. `0/1`, `1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

/// Accepts `p/q`, an integer, or a decimal literal; decimals become the
/// exact rational of their digits (`0.75` is `3/4`).
impl FromStr for Alpha {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidAlpha(format!("cannot parse {s:?}"));
        if let Some((p, q)) = s.split_once('/') {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            return Self::new(p, q);
        }
        let (int_part, frac_part) = s.split_once('.').unwrap_or((s, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        let all_digits = |t: &str| t.chars().all(|c| c.is_ascii_digit());
        if !all_digits(int_part) || !all_digits(frac_part) || frac_part.len() > 15 {
            return Err(bad());
        }
        let digits = format!("{int_part}{frac_part}");
        let numer: i64 = if digits.is_empty() {
            0
        } else {
            digits.parse().map_err(|_| bad())?
        };
        let denom = 10i64.pow(frac_part.len() as u32);
        Self::new(numer, denom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!("1/2".parse::<Alpha>().unwrap(), Alpha::HALF);
        assert_eq!("0.5".parse::<Alpha>().unwrap(), Alpha::HALF);
        assert_eq!(".5".parse::<Alpha>().unwrap(), Alpha::HALF);
        assert_eq!("0.75".parse::<Alpha>().unwrap(), Alpha::new(3, 4).unwrap());
        assert_eq!("6/10".parse::<Alpha>().unwrap(), Alpha::new(3, 5).unwrap());
        assert_eq!("0".parse::<Alpha>().unwrap(), Alpha::ZERO);
        assert!("0.5".parse::<Alpha>().unwrap().is_half());
        assert!(!"0.50001".parse::<Alpha>().unwrap().is_half());
    }

    #[test]
    fn rejects_out_of_range() {
        assert!("1".parse::<Alpha>().is_err());
        assert!("1/1".parse::<Alpha>().is_err());
        assert!("-1/2".parse::<Alpha>().is_err());
        assert!("3/2".parse::<Alpha>().is_err());
        assert!("1/0".parse::<Alpha>().is_err());
        assert!("abc".parse::<Alpha>().is_err());
        assert!("".parse::<Alpha>().is_err());
        assert!("0.5.1".parse::<Alpha>().is_err());
    }

    #[test]
    fn display_is_reduced_fraction() {
        assert_eq!(Alpha::new(2, 4).unwrap().to_string(), "1/2");
        assert_eq!(Alpha::ZERO.to_string(), "0/1");
        assert_eq!("0.9".parse::<Alpha>().unwrap().to_string(), "9/10");
    }
}
