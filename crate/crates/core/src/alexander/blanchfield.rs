//! The classical Blanchfield pairing `B(x, y) = (1 - t) x̄^T (V - t V^T)^-1 y`
//! on the cokernel of `V - t V^T`, with values in `Q(t) / Q[t, t^-1]`.

use crate::error::{Error, Result};
use crate::poly::laurent::LaurentPoly;
use crate::poly::matrix::{adjugate_poly, det_poly, PolyMatrix};
use crate::poly::qpoly::QPoly;
use crate::seifert::SeifertMatrix;
use std::fmt;

/// A class `num / den` in `Q(t) / Q[t, t^-1]`, stored reduced:
/// `den` monic with nonzero constant term, `deg num < deg den`, coprime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingValue {
    pub num: QPoly,
    pub den: QPoly,
}

impl PairingValue {
    pub fn zero() -> Self {
        PairingValue { num: QPoly::zero(), den: QPoly::one() }
    }

    /// Class of `n / d` for a Laurent numerator and a nonzero polynomial denominator.
    pub fn from_fraction(n: &LaurentPoly, d: &QPoly) -> Self {
        assert!(!d.is_zero());
        // move t-powers of the denominator into the numerator
        let (k, d) = d.strip_x();
        let n = n.shift(-(k as i64));
        let d = d.monic();
        if d.is_constant() || n.is_zero() {
            return PairingValue::zero();
        }
        // t^low * body with low possibly negative: use t^-1 mod d
        let mut r = n.body().rem(&d);
        let low = n.low();
        if low != 0 {
            let t = QPoly::x();
            let unit = if low > 0 { t } else { t.inverse_mod(&d).expect("t is invertible mod d") };
            for _ in 0..low.unsigned_abs() {
                r = (&r * &unit).rem(&d);
            }
        }
        if r.is_zero() {
            return PairingValue::zero();
        }
        let g = r.gcd(&d);
        let den = d.div_exact(&g);
        let num = r.div_exact(&g).rem(&den);
        PairingValue { num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl fmt::Display for PairingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let n = LaurentPoly::from_qpoly(self.num.clone(), 0);
        let d = LaurentPoly::from_qpoly(self.den.clone(), 0);
        write!(f, "({n}) / ({d})")
    }
}

/// Pairing data for a Seifert matrix: the adjugate and determinant of `V - t V^T`.
#[derive(Clone, Debug)]
pub struct BlanchfieldPairing {
    pub source: SeifertMatrix,
    adj: PolyMatrix,
    det: QPoly,
}

impl BlanchfieldPairing {
    pub fn new(v: &SeifertMatrix) -> Result<Self> {
        let m = v.presentation();
        let det = det_poly(&m);
        if LaurentPoly::from_qpoly(det.clone(), 0).is_unit() {
            return Err(Error::Precondition(
                "Alexander polynomial is a unit; the module is trivial and carries no pairing".into(),
            ));
        }
        Ok(BlanchfieldPairing { source: v.clone(), adj: adjugate_poly(&m), det })
    }

    pub fn dim(&self) -> usize {
        self.adj.len()
    }

    pub fn eval(&self, x: &[LaurentPoly], y: &[LaurentPoly]) -> Result<PairingValue> {
        let n = self.dim();
        if x.len() != n || y.len() != n {
            return Err(Error::InvalidArgument(format!("vectors must have length {n}")));
        }
        let mut acc = LaurentPoly::zero();
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            let xi = x[i].conjugate();
            for j in 0..n {
                if y[j].is_zero() || self.adj[i][j].is_zero() {
                    continue;
                }
                let a = LaurentPoly::from_qpoly(self.adj[i][j].clone(), 0);
                acc = &acc + &(&(&xi * &a) * &y[j]);
            }
        }
        let one_minus_t = LaurentPoly::from_i64(0, &[1, -1]);
        Ok(PairingValue::from_fraction(&(&one_minus_t * &acc), &self.det))
    }

    /// `B(g x, g x)` for a module element `x` and scalar `g`.
    pub fn self_pairing_of_multiple(&self, x: &[LaurentPoly], g: &LaurentPoly) -> Result<PairingValue> {
        let gx: Vec<LaurentPoly> = x.iter().map(|c| c * g).collect();
        self.eval(&gx, &gx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly;

    fn trefoil() -> SeifertMatrix {
        SeifertMatrix::new(vec![vec![-1, 1], vec![0, -1]]).unwrap()
    }

    fn e(i: usize, n: usize) -> Vec<LaurentPoly> {
        (0..n).map(|j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() }).collect()
    }

    #[test]
    fn reduction() {
        // t^-1 / (t - 2) = (1/2) / (t - 2) mod Laurent polynomials
        let v = PairingValue::from_fraction(&poly("t^-1"), &QPoly::from_i64(&[-2, 1]));
        assert_eq!(v.den, QPoly::from_i64(&[-2, 1]));
        assert_eq!(v.num, QPoly::constant(crate::poly::qpoly::ratio(1, 2)));
        assert!(PairingValue::from_fraction(&poly("t^2 - 4"), &QPoly::from_i64(&[-2, 1])).is_zero());
    }

    #[test]
    fn trefoil_pairing_nonzero_and_sesquilinear() {
        let b = BlanchfieldPairing::new(&trefoil()).unwrap();
        let x = e(0, 2);
        let v = b.eval(&x, &x).unwrap();
        assert!(!v.is_zero());
        assert_eq!(v.den, QPoly::from_i64(&[1, -1, 1]));
        // B(x, y t) = B(x, y) t
        let y = vec![poly("t+2"), poly("3")];
        let yt: Vec<LaurentPoly> = y.iter().map(|c| c * &LaurentPoly::t()).collect();
        let lhs = b.eval(&x, &yt).unwrap();
        let base = b.eval(&x, &y).unwrap();
        let rhs = PairingValue::from_fraction(
            &(&LaurentPoly::from_qpoly(base.num.clone(), 0) * &LaurentPoly::t()),
            &base.den,
        );
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn slice_pattern_isotropy() {
        // Δ = (2t - 3)(3t - 2)
        let v = SeifertMatrix::new(vec![vec![0, 3], vec![2, 0]]).unwrap();
        let b = BlanchfieldPairing::new(&v).unwrap();
        for i in 0..2 {
            let x = e(i, 2);
            assert!(b.self_pairing_of_multiple(&x, &poly("2t-3")).unwrap().is_zero());
            assert!(b.self_pairing_of_multiple(&x, &poly("3t-2")).unwrap().is_zero());
        }
    }

    #[test]
    fn unit_rejected() {
        assert!(BlanchfieldPairing::new(&SeifertMatrix::unknot()).is_err());
    }
}
