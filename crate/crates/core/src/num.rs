//! Exact-arithmetic helpers shared by the counting routines.
//!
//! Thresholds and eigenvalues of the rational families are carried as
//! [`Rational`]s and counts as [`Count`]s so that the strict inequalities
//! in the counting formulas are decided without rounding.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;
pub type Count = BigUint;

/// Parses `"0.25"`, `"-3"`, `"1.5e-3"` or `"1/4"` into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty number".into()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| Error::Parse(format!("bad numerator in {text:?}")))?;
        let den: BigInt = den.trim().parse().map_err(|_| Error::Parse(format!("bad denominator in {text:?}")))?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {text:?}")));
        }
        return Ok(Rational::new(num, den));
    }

    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let exp: i64 = s[pos + 1..].parse().map_err(|_| Error::Parse(format!("bad exponent in {text:?}")))?;
            (&s[..pos], exp)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(Error::Parse(format!("no digits in {text:?}")));
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("not a decimal number: {text:?}")));
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut num: BigInt =
        if all_digits.is_empty() { BigInt::zero() } else { all_digits.parse().expect("validated digits") };
    if negative {
        num = -num;
    }
    let scale = exponent - frac_part.len() as i64;
    let ten = BigInt::from(10u32);
    let value = if scale >= 0 {
        Rational::from_integer(num * num_traits::pow(ten, scale as usize))
    } else {
        Rational::new(num, num_traits::pow(ten, (-scale) as usize))
    };
    Ok(value)
}

/// Exact rational value of a finite double.
pub fn rational_from_f64(x: f64) -> Result<Rational> {
    Rational::from_float(x).ok_or_else(|| Error::InvalidInput(format!("non-finite number {x}")))
}

/// Rational from the shortest decimal representation of `x` (so `0.1` maps to 1/10).
pub fn rational_from_decimal_f64(x: f64) -> Result<Rational> {
    if !x.is_finite() {
        return Err(Error::InvalidInput(format!("non-finite number {x}")));
    }
    parse_rational(&format!("{x}"))
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn to_f64(x: &Rational) -> f64 {
    match x.to_f64() {
        Some(v) if v.is_finite() && (v != 0.0 || x.is_zero()) => v,
        _ => {
            // Out of double range: go through the logarithm.
            if x.is_zero() {
                0.0
            } else {
                let sign = if x.is_negative() { -1.0 } else { 1.0 };
                sign * ln_rational(&x.abs()).exp()
            }
        }
    }
}

/// Natural logarithm of a positive big integer; accurate for any size.
pub fn ln_biguint(n: &BigUint) -> f64 {
    if n.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = n.bits();
    if bits <= 1000 {
        return n.to_f64().expect("fits in f64").ln();
    }
    let shift = bits - 64;
    let top = (n >> shift).to_f64().expect("64-bit head");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Natural logarithm of a positive rational.
pub fn ln_rational(x: &Rational) -> f64 {
    if !x.is_positive() {
        return f64::NEG_INFINITY;
    }
    ln_biguint(x.numer().magnitude()) - ln_biguint(x.denom().magnitude())
}

pub fn pow_rational(base: &Rational, exp: u32) -> Rational {
    num_traits::pow(base.clone(), exp as usize)
}

/// Largest `u >= 0` with `u^a < x`; requires `x > 0` and `a >= 1`.
///
/// Since `u^a` is an integer, `u^a < x` iff `u^a <= ceil(x) - 1`.
pub fn max_root_below(a: u32, x: &Rational) -> BigUint {
    debug_assert!(a >= 1);
    debug_assert!(x.is_positive());
    let bound = ceil_rational(x) - BigInt::one();
    if bound.sign() == Sign::Minus {
        return BigUint::zero();
    }
    let bound = bound.to_biguint().expect("nonnegative");
    if a == 1 {
        bound
    } else {
        bound.nth_root(a)
    }
}

pub fn ceil_rational(x: &Rational) -> BigInt {
    x.ceil().to_integer()
}

pub fn floor_rational(x: &Rational) -> BigInt {
    x.floor().to_integer()
}

/// Exact value of `e^y` rounded down, for moderately large `y`.
///
/// Accurate to double precision in the leading digits; the trailing digits of
/// very large results are zero-filled.
pub fn floor_exp(y: f64) -> Result<BigUint> {
    if y < 700.0 {
        return Ok(BigUint::from(y.exp().floor().max(0.0) as u128));
    }
    let log2 = y * std::f64::consts::LOG2_E;
    if log2 > (1u64 << 24) as f64 {
        return Err(Error::BudgetExceeded { what: format!("materialising e^{y:.3e}"), limit: 1 << 24 });
    }
    let whole = log2.floor();
    let frac = log2 - whole;
    // 2^frac scaled to 52 bits of mantissa.
    let mantissa = (frac.exp2() * (1u64 << 52) as f64) as u64;
    let shift = whole as u64 - 52;
    Ok(BigUint::from(mantissa) << shift)
}

/// Renders an exact rational as a terminating decimal when possible, `p/q` otherwise.
pub fn format_rational(x: &Rational) -> String {
    if x.is_integer() {
        return x.to_integer().to_string();
    }
    let mut den = x.denom().clone();
    let two = BigInt::from(2u32);
    let five = BigInt::from(5u32);
    let (mut twos, mut fives) = (0usize, 0usize);
    while den.is_even() {
        den /= &two;
        twos += 1;
    }
    while (&den % &five).is_zero() {
        den /= &five;
        fives += 1;
    }
    if !den.is_one() {
        return format!("{}/{}", x.numer(), x.denom());
    }
    let places = twos.max(fives);
    let scaled = x * Rational::from_integer(num_traits::pow(BigInt::from(10u32), places));
    let digits = scaled.to_integer().abs().to_string();
    let digits = format!("{digits:0>width$}", width = places + 1);
    let (int_part, frac_part) = digits.split_at(digits.len() - places);
    let sign = if x.is_negative() { "-" } else { "" };
    format!("{sign}{int_part}.{frac_part}")
}

/// Full-precision rendering of a double (shortest round-trip form).
pub fn format_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x:?}")
    } else if x.is_nan() {
        "NaN".into()
    } else if x > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

/// Natural logarithm of a count; `ln 0` is reported as `-inf`.
pub fn ln_count(n: &Count) -> f64 {
    ln_biguint(n)
}

pub fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_decimals_exactly() {
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rational("-1.5").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("1e-2").unwrap(), rat(1, 100));
        assert_eq!(parse_rational("2.5E1").unwrap(), int(25));
        assert_eq!(parse_rational("3/12").unwrap(), rat(1, 4));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn decimal_f64_uses_shortest_form() {
        assert_eq!(rational_from_decimal_f64(0.1).unwrap(), rat(1, 10));
        assert_ne!(rational_from_f64(0.1).unwrap(), rat(1, 10));
    }

    #[test]
    fn max_root_below_is_strict() {
        // u^2 < 100 -> u = 9
        assert_eq!(max_root_below(2, &int(100)), BigUint::from(9u32));
        // u^2 < 100.5 -> u = 10
        assert_eq!(max_root_below(2, &rat(201, 2)), BigUint::from(10u32));
        // u^3 < 1/2 -> u = 0
        assert_eq!(max_root_below(3, &rat(1, 2)), BigUint::zero());
        assert_eq!(max_root_below(1, &int(7)), BigUint::from(6u32));
    }

    #[test]
    fn formats_rationals() {
        assert_eq!(format_rational(&rat(1, 4)), "0.25");
        assert_eq!(format_rational(&rat(-1, 8)), "-0.125");
        assert_eq!(format_rational(&rat(1, 3)), "1/3");
        assert_eq!(format_rational(&int(5)), "5");
        assert_eq!(format_rational(&rat(1, 100)), "0.01");
    }

    #[test]
    fn logs_of_huge_integers() {
        let big = BigUint::one() << 5000u32;
        let expected = 5000.0 * std::f64::consts::LN_2;
        assert!((ln_biguint(&big) - expected).abs() < 1e-9);
    }

    #[test]
    fn floor_exp_matches_small_and_large() {
        assert_eq!(floor_exp(1.0).unwrap(), BigUint::from(2u32));
        let big = floor_exp(800.0).unwrap();
        assert!((ln_biguint(&big) - 800.0).abs() < 1e-9);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(50, 10), BigUint::from(10272278170u64));
        assert_eq!(factorial(5), BigUint::from(120u32));
    }
}
