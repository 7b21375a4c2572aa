use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, int, is_non_negative, parse_rational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ToleranceKind {
    /// `c`
    Constant,
    /// `c * x`
    Linear,
    /// `c * log2(x)`, with `log2(0) = 0`
    Log,
    /// `c * sqrt(x)`
    Sqrt,
    /// `x`
    Identity,
}

/// Tolerance `f(|V|)` in `|nu(G \ F) - k| <= f(|V|)`.
///
/// Comparisons are exact: since the left-hand side is an integer, `d <= f(x)`
/// is decided as `d <= floor(f(x))`, and the floor is computed without
/// floating point even for the logarithm and square root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToleranceFunction {
    kind: ToleranceKind,
    coefficient: Rational,
}

impl ToleranceFunction {
    pub fn new(kind: ToleranceKind, coefficient: Rational) -> Result<Self> {
        if !is_non_negative(&coefficient) {
            return Err(Error::Tolerance(format!("negative coefficient {}", format_rational(&coefficient))));
        }
        let coefficient = if kind == ToleranceKind::Identity { Rational::one() } else { coefficient };
        Ok(ToleranceFunction { kind, coefficient })
    }

    pub fn identity() -> Self {
        ToleranceFunction { kind: ToleranceKind::Identity, coefficient: Rational::one() }
    }

    pub fn constant(c: Rational) -> Result<Self> {
        Self::new(ToleranceKind::Constant, c)
    }

    pub fn linear(c: Rational) -> Result<Self> {
        Self::new(ToleranceKind::Linear, c)
    }

    pub fn kind(&self) -> ToleranceKind {
        self.kind
    }

    pub fn coefficient(&self) -> &Rational {
        &self.coefficient
    }

    /// `floor(f(x))`.
    pub fn floor_at(&self, x: u64) -> BigUint {
        let (p, q) = (self.coefficient.numer().magnitude().clone(), self.coefficient.denom().magnitude().clone());
        let xb = BigUint::from(x);
        match self.kind {
            ToleranceKind::Identity => xb,
            ToleranceKind::Constant => p / q,
            ToleranceKind::Linear => p * xb / q,
            // floor(sqrt(p^2 x) / q) == floor(floor(sqrt(p^2 x)) / q)
            ToleranceKind::Sqrt => (&p * &p * xb).sqrt() / q,
            ToleranceKind::Log => {
                // largest t with t <= (p/q) log2 x, i.e. 2^(t q) <= x^p
                if x <= 1 || p.is_zero() {
                    return BigUint::zero();
                }
                let p_small = p.to_u32().expect("log coefficient numerator fits in u32");
                let q_small = q.to_u32().expect("log coefficient denominator fits in u32");
                let rhs = xb.pow(p_small);
                let mut t = 0u32;
                while BigUint::one() << ((t + 1) * q_small) as usize <= rhs {
                    t += 1;
                }
                BigUint::from(t)
            }
        }
    }

    /// True iff `distance <= f(x)`.
    pub fn admits(&self, x: u64, distance: u64) -> bool {
        BigUint::from(distance) <= self.floor_at(x)
    }

    /// `f(x)` as an exact rational, for the kinds where it is one.
    pub fn exact_at(&self, x: u64) -> Option<Rational> {
        let xr = int(x as i64);
        match self.kind {
            ToleranceKind::Identity => Some(xr),
            ToleranceKind::Constant => Some(self.coefficient.clone()),
            ToleranceKind::Linear => Some(&self.coefficient * xr),
            ToleranceKind::Log | ToleranceKind::Sqrt => None,
        }
    }
}

impl FromStr for ToleranceFunction {
    type Err = Error;

    /// `identity`, `const:C`, `linear:p/q`, `log[:p/q]`, `sqrt[:p/q]`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (s, None),
        };
        let kind = match name {
            "identity" => ToleranceKind::Identity,
            "const" | "constant" => ToleranceKind::Constant,
            "linear" => ToleranceKind::Linear,
            "log" => ToleranceKind::Log,
            "sqrt" => ToleranceKind::Sqrt,
            _ => return Err(Error::Tolerance(s.to_string())),
        };
        let coefficient = match (kind, arg) {
            (ToleranceKind::Identity, Some(_)) => return Err(Error::Tolerance(s.to_string())),
            (ToleranceKind::Constant | ToleranceKind::Linear, None) => return Err(Error::Tolerance(s.to_string())),
            (_, Some(a)) => parse_rational(a).map_err(|_| Error::Tolerance(s.to_string()))?,
            (_, None) => Rational::one(),
        };
        Self::new(kind, coefficient)
    }
}

impl fmt::Display for ToleranceFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = format_rational(&self.coefficient);
        match self.kind {
            ToleranceKind::Identity => write!(f, "identity"),
            ToleranceKind::Constant => write!(f, "const:{c}"),
            ToleranceKind::Linear => write!(f, "linear:{c}"),
            ToleranceKind::Log => write!(f, "log:{c}"),
            ToleranceKind::Sqrt => write!(f, "sqrt:{c}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn parse_forms() {
        assert_eq!("identity".parse::<ToleranceFunction>().unwrap(), ToleranceFunction::identity());
        let c = "const:3".parse::<ToleranceFunction>().unwrap();
        assert_eq!(c.floor_at(1000), BigUint::from(3u32));
        let l = "linear:1/300".parse::<ToleranceFunction>().unwrap();
        assert_eq!(l.floor_at(600), BigUint::from(2u32));
        assert_eq!(l.floor_at(599), BigUint::from(1u32));
        assert!("linear".parse::<ToleranceFunction>().is_err());
        assert!("cubic:2".parse::<ToleranceFunction>().is_err());
        assert!("const:-1".parse::<ToleranceFunction>().is_err());
        assert_eq!("log".parse::<ToleranceFunction>().unwrap().to_string(), "log:1");
    }

    #[test]
    fn sqrt_and_log_floors_are_exact() {
        let s = "sqrt".parse::<ToleranceFunction>().unwrap();
        assert_eq!(s.floor_at(15), BigUint::from(3u32));
        assert_eq!(s.floor_at(16), BigUint::from(4u32));
        let s2 = ToleranceFunction::new(ToleranceKind::Sqrt, ratio(1, 2)).unwrap();
        // sqrt(64)/2 = 4, sqrt(63)/2 < 4
        assert_eq!(s2.floor_at(64), BigUint::from(4u32));
        assert_eq!(s2.floor_at(63), BigUint::from(3u32));

        let lg = "log".parse::<ToleranceFunction>().unwrap();
        assert_eq!(lg.floor_at(0), BigUint::zero());
        assert_eq!(lg.floor_at(1), BigUint::zero());
        assert_eq!(lg.floor_at(7), BigUint::from(2u32));
        assert_eq!(lg.floor_at(8), BigUint::from(3u32));
        let lg3 = ToleranceFunction::new(ToleranceKind::Log, ratio(3, 2)).unwrap();
        // 1.5 * log2(16) = 6
        assert_eq!(lg3.floor_at(16), BigUint::from(6u32));
        assert_eq!(lg3.floor_at(15), BigUint::from(5u32));
    }

    #[test]
    fn admits_boundary() {
        let f = ToleranceFunction::constant(int(0)).unwrap();
        assert!(f.admits(5, 0));
        assert!(!f.admits(5, 1));
        assert!(ToleranceFunction::identity().admits(10, 10));
        assert!(!ToleranceFunction::identity().admits(10, 11));
    }
}
