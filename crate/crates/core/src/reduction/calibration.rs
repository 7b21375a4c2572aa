//! Constants that turn the additive gaps of the reduction into
//! multiplicative and additive inapproximability thresholds.

use num_traits::Zero;

use super::construct::Variant;
use crate::error::{Error, Result};
use crate::rational::{check_open_interval, int, ratio, Rational};

/// Upper end of the admissible `epsilon` interval `(0, bound)`.
pub fn epsilon_bound(variant: Variant) -> Rational {
    match variant {
        Variant::BigL => ratio(1, 88),
        Variant::Ell => ratio(1, 80),
    }
}

/// `delta` solving `10 + 7/8 + delta = 11(1 - eps)` (L-variant) or
/// `11 - 7/8 - delta = 10(1 + eps)` (ell-variant). Always in `(0, 1/8)`.
pub fn calibration(variant: Variant, epsilon: &Rational) -> Result<Rational> {
    check_open_interval("epsilon", epsilon, &Rational::zero(), &epsilon_bound(variant))?;
    let seven_eighths = ratio(7, 8);
    let delta = match variant {
        Variant::BigL => int(11) * (int(1) - epsilon) - int(10) - seven_eighths,
        Variant::Ell => int(11) - seven_eighths - int(10) * (int(1) + epsilon),
    };
    debug_assert!(delta > Rational::zero() && delta < ratio(1, 8));
    Ok(delta)
}

/// Whether an additive error `c |V|` is small enough to separate the
/// satisfiable and far-from-satisfiable cases: `c < 1/256 - eps/32`.
pub fn additive_threshold(c: &Rational, epsilon: &Rational) -> Result<bool> {
    if *c <= Rational::zero() {
        return Err(Error::OutOfInterval { name: "c", value: crate::rational::format_rational(c), low: "0".into(), high: "inf".into() });
    }
    check_open_interval("epsilon", epsilon, &Rational::zero(), &ratio(1, 8))?;
    Ok(*c < ratio(1, 256) - epsilon / int(32))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_values() {
        assert_eq!(calibration(Variant::BigL, &ratio(1, 176)).unwrap(), ratio(1, 16));
        assert_eq!(calibration(Variant::Ell, &ratio(1, 160)).unwrap(), ratio(1, 16));
        assert!(calibration(Variant::BigL, &ratio(1, 88)).is_err());
        assert!(calibration(Variant::Ell, &ratio(1, 80)).is_err());
        assert!(calibration(Variant::Ell, &int(0)).is_err());
        // inside the ell interval but not the L one
        assert!(calibration(Variant::BigL, &ratio(1, 85)).is_err());
        assert!(calibration(Variant::Ell, &ratio(1, 85)).is_ok());
    }

    #[test]
    fn threshold_values() {
        assert!(additive_threshold(&ratio(1, 300), &ratio(1, 100)).unwrap());
        assert!(!additive_threshold(&ratio(1, 256), &ratio(1, 1000)).unwrap());
        assert!(!additive_threshold(&ratio(1, 512), &ratio(1, 16)).unwrap());
        assert!(additive_threshold(&int(0), &ratio(1, 16)).is_err());
        assert!(additive_threshold(&ratio(1, 512), &ratio(1, 8)).is_err());
    }
}
