//! Exact rational measures and threshold arithmetic.
//!
//! Every coverage, confidence and support value is a reduced `num/den`
//! fraction; threshold comparisons such as `sconf >= sc` are integer
//! comparisons, never floats. Decimal strings appear only at the output
//! boundary.

use crate::error::Error;
use num::rational::Ratio;

/// An exact non-negative fraction. Measures live in `[0, 1]`, thresholds in
/// `(0, 1]`.
pub type Frac = Ratio<u64>;

/// Shorthand constructor; reduces on the way in.
pub fn frac(num: u64, den: u64) -> Frac {
    Ratio::new(num, den)
}

/// Parses `"0.25"`, `"1"`, `"1.0"` or `"3/5"` into an exact fraction.
pub fn parse_frac(s: &str) -> Result<Frac, Error> {
    let s = s.trim();
    let invalid = || Error::InvalidFraction {
        input: s.to_string(),
    };
    if let Some((num, den)) = s.split_once('/') {
        let num: u64 = num.trim().parse().map_err(|_| invalid())?;
        let den: u64 = den.trim().parse().map_err(|_| invalid())?;
        if den == 0 {
            return Err(invalid());
        }
        return Ok(Ratio::new(num, den));
    }
    let (int_part, frac_part) = match s.split_once('.') {
        Some((i, f)) => (i, f),
        None => (s, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(invalid());
    }
    if !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return Err(invalid());
    }
    if frac_part.len() > 18 {
        return Err(invalid());
    }
    let int: u64 = if int_part.is_empty() {
        0
    } else {
        int_part.parse().map_err(|_| invalid())?
    };
    let scale = 10u64.pow(frac_part.len() as u32);
    let frac_digits: u64 = if frac_part.is_empty() {
        0
    } else {
        frac_part.parse().map_err(|_| invalid())?
    };
    let num = int
        .checked_mul(scale)
        .and_then(|v| v.checked_add(frac_digits))
        .ok_or_else(invalid)?;
    Ok(Ratio::new(num, scale))
}

/// Renders with exactly four decimal places, rounding half away from zero.
pub fn render_dec4(f: Frac) -> String {
    let scaled = (f.numer() * 20_000 + f.denom()) / (2 * f.denom());
    format!("{}.{:04}", scaled / 10_000, scaled % 10_000)
}

/// Renders exactly: a terminating decimal when the denominator divides a
/// power of ten, `num/den` otherwise.
pub fn render_exact(f: Frac) -> String {
    let mut den = *f.denom();
    let mut digits = 0u32;
    while den % 2 == 0 {
        den /= 2;
        digits += 1;
    }
    while den % 5 == 0 {
        den /= 5;
        digits += 1;
    }
    if den != 1 || digits > 18 {
        return format!("{}/{}", f.numer(), f.denom());
    }
    if digits == 0 {
        return f.numer().to_string();
    }
    let scale = 10u64.pow(digits);
    let num = f.numer() * (scale / f.denom());
    let rendered = format!("{}.{:0width$}", num / scale, num % scale, width = digits as usize);
    let trimmed = rendered.trim_end_matches('0');
    let trimmed = trimmed.strip_suffix('.').unwrap_or(trimmed);
    trimmed.to_string()
}

/// `floor(f * n)`.
pub fn floor_mul(f: Frac, n: usize) -> usize {
    ((f.numer() * n as u64) / f.denom()) as usize
}

/// `ceil(f * n)`.
pub fn ceil_mul(f: Frac, n: usize) -> usize {
    ((f.numer() * n as u64).div_ceil(*f.denom())) as usize
}

/// Rejects thresholds outside `(0, 1]`.
pub fn check_threshold(name: &'static str, f: Frac) -> Result<(), Error> {
    if *f.numer() == 0 || f > Frac::from_integer(1) {
        return Err(Error::ThresholdOutOfRange {
            name,
            value: f.to_string(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_decimals_exactly() {
        assert_eq!(parse_frac("0.20").unwrap(), frac(1, 5));
        assert_eq!(parse_frac("0.00001").unwrap(), frac(1, 100_000));
        assert_eq!(parse_frac("1").unwrap(), frac(1, 1));
        assert_eq!(parse_frac("1.0").unwrap(), frac(1, 1));
        assert_eq!(parse_frac("3/5").unwrap(), frac(3, 5));
        assert_eq!(parse_frac(".5").unwrap(), frac(1, 2));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "a", "1/0", "0.x", "-1", "1.2.3"] {
            assert!(parse_frac(bad).is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn renders_four_places() {
        assert_eq!(render_dec4(frac(3, 5)), "0.6000");
        assert_eq!(render_dec4(frac(2, 3)), "0.6667");
        assert_eq!(render_dec4(frac(1, 3)), "0.3333");
        assert_eq!(render_dec4(frac(1, 1)), "1.0000");
        assert_eq!(render_dec4(frac(0, 1)), "0.0000");
    }

    #[test]
    fn renders_exact_forms() {
        assert_eq!(render_exact(frac(1, 100_000)), "0.00001");
        assert_eq!(render_exact(frac(1, 2)), "0.5");
        assert_eq!(render_exact(frac(2, 3)), "2/3");
        assert_eq!(render_exact(frac(1, 1)), "1");
    }

    #[test]
    fn floor_and_ceil() {
        assert_eq!(floor_mul(frac(3, 5), 3), 1); // 1.8
        assert_eq!(ceil_mul(frac(3, 5), 3), 2);
        assert_eq!(floor_mul(frac(1, 1), 3), 3);
        assert_eq!(ceil_mul(frac(1, 2), 4), 2);
    }

    #[test]
    fn threshold_domain() {
        assert!(check_threshold("ms", frac(1, 100_000)).is_ok());
        assert!(check_threshold("ms", frac(1, 1)).is_ok());
        assert!(check_threshold("ms", frac(0, 1)).is_err());
        assert!(check_threshold("ms", frac(3, 2)).is_err());
    }
}
