//! Fixed-point arithmetic on big integers for angles: values are integers
//! scaled by `2^w`. Every routine below is accurate to far fewer than
//! `2^GUARD` units in the last place, which the public functions fold into
//! their returned enclosures.

use crate::poly::qpoly::Rational;
use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

const GUARD: u32 = 40;

fn one(w: u32) -> BigInt {
    BigInt::one() << w
}

fn mul(a: &BigInt, b: &BigInt, w: u32) -> BigInt {
    (a * b) >> w
}

fn div(a: &BigInt, b: &BigInt, w: u32) -> BigInt {
    (a << w) / b
}

fn sqrt(a: &BigInt, w: u32) -> BigInt {
    (a << w).sqrt()
}

fn from_rational(r: &Rational, w: u32) -> BigInt {
    (r.numer() << w) / r.denom()
}

/// Taylor series of `atan`, for `0 <= x <= 1/4`.
fn atan_series(x: &BigInt, w: u32) -> BigInt {
    let x2 = mul(x, x, w);
    let mut power = x.clone();
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * k + 1);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power = mul(&power, &x2, w);
        k += 1;
    }
    sum
}

/// `π` by Machin's formula.
fn pi(w: u32) -> BigInt {
    let a = atan_series(&(one(w) / 5), w);
    let b = atan_series(&(one(w) / 239), w);
    a * 16 - b * 4
}

/// `atan(x)` for `x >= 0`.
fn atan(x: &BigInt, w: u32) -> BigInt {
    debug_assert!(!x.is_negative());
    if *x > one(w) {
        let inv = div(&one(w), x, w);
        return (pi(w) >> 1) - atan(&inv, w);
    }
    // halve the angle three times: atan x = 2 atan(x / (1 + sqrt(1 + x^2)))
    let mut y = x.clone();
    for _ in 0..3 {
        let r = sqrt(&(one(w) + mul(&y, &y, w)), w);
        y = div(&y, &(one(w) + r), w);
    }
    atan_series(&y, w) << 3
}

/// Enclosure of `arccos(x / 2) / π` for rational `x` in `(-2, 2)`, with width at most `2^-(bits-1)`.
pub fn half_arccos_over_pi(x: &Rational, bits: u32) -> (Rational, Rational) {
    let w = bits + GUARD;
    // arccos(x/2) = 2 atan(sqrt((2 - x) / (2 + x)))
    let two = Rational::from_integer(2.into());
    let ratio = (&two - x) / (&two + x);
    let u = sqrt(&from_rational(&ratio, w), w);
    let theta = atan(&u, w) << 1;
    let v = div(&theta, &pi(w), w);
    enclose(&v, w, bits)
}

/// Enclosure of `π` with width at most `2^-(bits-1)`.
pub fn pi_enclosure(bits: u32) -> (Rational, Rational) {
    let w = bits + GUARD;
    enclose(&pi(w), w, bits)
}

fn enclose(v: &BigInt, w: u32, bits: u32) -> (Rational, Rational) {
    let err = BigInt::one() << (w - bits);
    let den = one(w);
    (Rational::new(v - &err, den.clone()), Rational::new(v + &err, den))
}

/// Decimal expansion of `r` rounded to `digits` places after the point.
pub fn to_decimal(r: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10).pow(digits as u32);
    let scaled = r * Rational::from_integer(scale.clone());
    // round half away from zero
    let half = Rational::new(1.into(), 2.into());
    let rounded = if scaled.is_negative() { -((-scaled) + half).floor() } else { (scaled + half).floor() };
    let n = rounded.to_integer();
    let neg = n.sign() == Sign::Minus;
    let mut s = n.abs().to_string();
    if digits > 0 {
        if s.len() <= digits {
            s = "0".repeat(digits + 1 - s.len()) + &s;
        }
        s.insert(s.len() - digits, '.');
    }
    if neg {
        s.insert(0, '-');
    }
    s
}

pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::qpoly::{rat, ratio};

    #[test]
    fn pi_digits() {
        let (lo, hi) = pi_enclosure(200);
        let s = to_decimal(&lo, 50);
        assert_eq!(s, "3.14159265358979323846264338327950288419716939937511");
        assert!(hi - lo <= Rational::new(1.into(), BigInt::one() << 199));
    }

    #[test]
    fn arccos_known_angles() {
        let (lo, hi) = half_arccos_over_pi(&rat(1), 120);
        assert!(lo < ratio(1, 3) && ratio(1, 3) < hi);
        let (lo, hi) = half_arccos_over_pi(&rat(0), 120);
        assert!(lo < ratio(1, 2) && ratio(1, 2) < hi);
        let (lo, hi) = half_arccos_over_pi(&rat(-1), 120);
        assert!(lo < ratio(2, 3) && ratio(2, 3) < hi);
        let (lo, hi) = half_arccos_over_pi(&ratio(-199, 100), 120);
        let x = (-0.995f64).acos() / std::f64::consts::PI;
        assert!((to_f64(&lo) - x).abs() < 1e-12 && (to_f64(&hi) - x).abs() < 1e-12);
    }

    #[test]
    fn decimal_rounding() {
        assert_eq!(to_decimal(&ratio(-4, 3), 5), "-1.33333");
        assert_eq!(to_decimal(&ratio(2, 3), 3), "0.667");
        assert_eq!(to_decimal(&ratio(1, 200), 2), "0.01");
        assert_eq!(to_decimal(&rat(0), 2), "0.00");
        assert_eq!(to_decimal(&rat(7), 0), "7");
    }
}
