//! Exact rationals for the cycle-length parameter `a` and for the
//! threshold constants of the lemma checkers.

use alloc::format;
use core::fmt;
use core::str::FromStr;

use num_integer::Integer;
use num_traits::{Signed, Zero};

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = num_rational::Ratio<i64>;

/// Parses `P/Q` or a bare integer `P`. Decimal notation is rejected so that
/// every regime boundary comparison stays exact.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::InvalidParameter(format!("expected a rational P/Q, got {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let num = i64::from_str(num).map_err(|_| bad())?;
    let den = i64::from_str(den).map_err(|_| bad())?;
    if den == 0 {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// A strictly positive rational `p/q` in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct RatioParam {
    p: u64,
    q: u64,
}

impl RatioParam {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::InvalidParameter(format!("ratio {p}/{q} must be positive")));
        }
        let g = p.gcd(&q);
        Ok(RatioParam { p: p / g, q: q / g })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn to_rational(self) -> Rational {
        Rational::new(self.p as i64, self.q as i64)
    }

    pub fn to_f64(self) -> f64 {
        self.p as f64 / self.q as f64
    }
}

impl TryFrom<Rational> for RatioParam {
    type Error = Error;

    fn try_from(r: Rational) -> Result<Self> {
        if !r.is_positive() || r.is_zero() {
            return Err(Error::InvalidParameter(format!("ratio {r} must be positive")));
        }
        RatioParam::new(*r.numer() as u64, *r.denom() as u64)
    }
}

impl FromStr for RatioParam {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_rational(s)?.try_into()
    }
}

impl fmt::Display for RatioParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("3/4").unwrap(), Rational::new(3, 4));
        assert_eq!(parse_rational("6/8").unwrap(), Rational::new(3, 4));
        assert_eq!(parse_rational("2").unwrap(), Rational::from_integer(2));
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
    }

    #[test]
    fn ratio_param_is_reduced_and_positive() {
        let a: RatioParam = "10/20".parse().unwrap();
        assert_eq!((a.p(), a.q()), (1, 2));
        assert_eq!(a.to_string(), "1/2");
        assert!("0/3".parse::<RatioParam>().is_err());
        assert!("-1/3".parse::<RatioParam>().is_err());
    }
}
