//! Exact rationals used for charges, densities and thresholds.

use std::fmt;

/// Always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::Ratio<i64>;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

/// Displays a rational as `p/q`, including integral values (`2/1`).
pub struct Frac(pub Rational);

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let q: i64 = q.trim().parse().ok()?;
            if q == 0 {
                return None;
            }
            Some(rat(p.trim().parse().ok()?, q))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_is_always_a_fraction() {
        assert_eq!(Frac(rat(4, 2)).to_string(), "2/1");
        assert_eq!(Frac(rat(-6, 14)).to_string(), "-3/7");
    }

    #[test]
    fn parse_round_trip() {
        assert_eq!(parse_rational("16/7"), Some(rat(16, 7)));
        assert_eq!(parse_rational(" 3 "), Some(rat(3, 1)));
        assert_eq!(parse_rational("1/0"), None);
    }
}
