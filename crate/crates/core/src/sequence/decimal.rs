//! Decimal rendering of nonnegative rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

fn pow10(digits: u32) -> BigInt {
    BigInt::from(10u32).pow(digits)
}

/// `round(q · 10^digits)` with ties to even.
fn scaled_half_even(q: &BigRational, digits: u32) -> BigInt {
    let scaled = q * BigRational::from_integer(pow10(digits));
    let (floor, rem) = scaled.numer().div_mod_floor(scaled.denom());
    let twice = rem * 2u32;
    match twice.cmp(scaled.denom()) {
        std::cmp::Ordering::Less => floor,
        std::cmp::Ordering::Greater => floor + 1u32,
        std::cmp::Ordering::Equal => {
            if floor.is_even() {
                floor
            } else {
                floor + 1u32
            }
        }
    }
}

fn render_scaled(n: &BigInt, digits: u32) -> String {
    let sign = if n.is_negative() { "-" } else { "" };
    let n = n.abs();
    if digits == 0 {
        return format!("{sign}{n}");
    }
    let (int, frac) = n.div_rem(&pow10(digits));
    let int = if int.is_zero() {
        String::new()
    } else {
        int.to_string()
    };
    format!("{sign}{int}.{frac:0>width$}", width = digits as usize)
}

/// `q` rounded half-even to exactly `digits` places, leading zero dropped:
/// `1/4 → ".250000"`, `1 → "1.000000"`.
pub fn fixed_decimal(q: &BigRational, digits: u32) -> String {
    render_scaled(&scaled_half_even(q, digits), digits)
}

/// The exact expansion when it terminates within `max_digits` places,
/// otherwise `q` rounded to `max_digits`: `".5"`, `".6875"`, `"1"`, `".71094"`.
pub fn compact_decimal(q: &BigRational, max_digits: u32) -> String {
    for d in 0..=max_digits {
        let scaled = q * BigRational::from_integer(pow10(d));
        if scaled.is_integer() {
            if d == 0 {
                return scaled.to_integer().to_string();
            }
            return render_scaled(&scaled.to_integer(), d);
        }
    }
    fixed_decimal(q, max_digits)
}

/// `"p/q"` in lowest terms.
pub fn rational_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn fixed() {
        assert_eq!(fixed_decimal(&q(1, 4), 6), ".250000");
        assert_eq!(fixed_decimal(&q(1, 1), 6), "1.000000");
        assert_eq!(fixed_decimal(&q(2, 3), 4), ".6667");
        assert_eq!(fixed_decimal(&q(1, 8), 2), ".12");
        assert_eq!(fixed_decimal(&q(3, 8), 2), ".38");
        assert_eq!(fixed_decimal(&q(0, 1), 3), ".000");
    }

    #[test]
    fn compact() {
        assert_eq!(compact_decimal(&q(0, 1), 5), "0");
        assert_eq!(compact_decimal(&q(1, 1), 3), "1");
        assert_eq!(compact_decimal(&q(1, 2), 5), ".5");
        assert_eq!(compact_decimal(&q(11, 16), 5), ".6875");
        assert_eq!(compact_decimal(&q(91, 128), 5), ".71094");
    }

    #[test]
    fn fraction_text() {
        assert_eq!(rational_string(&q(2, 8)), "1/4");
        assert_eq!(rational_string(&q(0, 5)), "0/1");
    }
}
