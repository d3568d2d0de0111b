use super::laurent::LaurentPoly;
use super::qpoly::QPoly;
use num_integer::Integer;

pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// The `n`-th cyclotomic polynomial.
pub fn cyclotomic(n: u64) -> QPoly {
    assert!(n >= 1);
    // Φ_n = (t^n - 1) / prod_{d | n, d < n} Φ_d
    let mut num = QPoly::from_i64(&[-1, 1]).compose_power(n as usize);
    for d in 1..n {
        if n % d == 0 {
            num = num.div_exact(&cyclotomic(d));
        }
    }
    num
}

pub fn cyclotomic_laurent(n: u64) -> LaurentPoly {
    LaurentPoly::from_qpoly(cyclotomic(n), 0)
}

/// If the irreducible polynomial `f` is (a unit multiple of) some Φ_d, return `d`.
pub fn cyclotomic_order(f: &LaurentPoly) -> Option<u64> {
    if f.is_zero() || f.is_unit() {
        return None;
    }
    let g = f.normalize();
    let deg = g.span() as u64;
    let c0 = g.body().coeff(0);
    let one = num_rational::BigRational::from_integer(1.into());
    if c0 != one && c0 != -one.clone() {
        return None;
    }
    if g.leading_coeff() != one {
        return None;
    }
    // φ(d) >= sqrt(d/2), so φ(d) = deg forces d <= 2 deg^2 (and d <= 6 covers deg 1, 2).
    let max_d = (2 * deg * deg).max(6);
    (1..=max_d)
        .filter(|&d| euler_phi(d) == deg)
        .find(|&d| cyclotomic_laurent(d) == g)
}

/// Multiplicative order of `e^{i π a / b}` for `a / b` in lowest terms.
pub fn root_of_unity_order(a: i64, b: i64) -> u64 {
    let num = a.rem_euclid(2 * b) as u64;
    let den = 2 * b as u64;
    den / num.gcd(&den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_poly;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), QPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic(2), QPoly::from_i64(&[1, 1]));
        assert_eq!(cyclotomic(6), QPoly::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic(5), QPoly::from_i64(&[1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic(12), QPoly::from_i64(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn detection() {
        assert_eq!(cyclotomic_order(&parse_poly("t^2-t+1").unwrap()), Some(6));
        assert_eq!(cyclotomic_order(&parse_poly("t+1").unwrap()), Some(2));
        assert_eq!(cyclotomic_order(&parse_poly("t^2-t-1").unwrap()), None);
        assert_eq!(cyclotomic_order(&parse_poly("t^2+1").unwrap()), Some(4));
        for d in 1..=30 {
            assert_eq!(cyclotomic_order(&cyclotomic_laurent(d)), Some(d));
        }
    }

    #[test]
    fn angle_orders() {
        assert_eq!(root_of_unity_order(1, 3), 6);
        assert_eq!(root_of_unity_order(1, 2), 4);
        assert_eq!(root_of_unity_order(2, 3), 3);
        assert_eq!(root_of_unity_order(1, 1), 2);
    }
}
